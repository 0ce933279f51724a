use num::{BigInt, Zero};

use crate::algebra::{factorial, gen_binomial, rat, BivarTrunc, Rational, UniPoly, Var};
use crate::sheaf::{SheafDescriptor, SpectrumEntry};
use crate::special::{eulerian, iota_inv, qpoly, st_graded};

use super::{EngineError, Numerators};

fn g_factorial(g: usize) -> Rational {
    Rational::from_integer(factorial(g as u64))
}

/// `[F]_{s^g} / t`; the bracketed series always vanishes at `t = 0`.
fn top_over_t(f: &BivarTrunc, g: usize) -> UniPoly {
    f.s_coeff(g).shift_down(1).expect("top s-coefficient divisible by t")
}

fn star_numerator(d: &SheafDescriptor) -> UniPoly {
    let g = d.g;
    let u = (1..=g).fold(BivarTrunc::zero(g), |acc, i| {
        let c = d.gamma.coeff(i);
        if c.is_zero() {
            return acc;
        }
        let poly = eulerian(2 * i - 1).shift_up(1).scale(c);
        &acc + &BivarTrunc::term(poly, i, g)
    });
    let e = u.trunc_exp().expect("exponent has no constant term");
    top_over_t(&e, g).scale(&g_factorial(g))
}

/// `prod_n (1 - q_n(sigma(s)) s w(t))^{nu_n}` truncated at `s^g`, where
/// `sigma(s)` is `s` times a fixed polynomial in `t`.
fn bullet_product(entry: &SpectrumEntry, g: usize, q_arg: &UniPoly, weight: &UniPoly, t_cap: Option<usize>) -> BivarTrunc {
    let breadth = entry.betti().breadth().unwrap_or(0);
    let mut acc = BivarTrunc::one(g);
    for n in 1..=breadth {
        let nu = entry.nu(n);
        if nu.is_zero() {
            continue;
        }
        let q = qpoly(n);
        let mut arg = UniPoly::one(Var::T);
        let mut coeffs = vec![UniPoly::zero(Var::T)];
        for j in 0..g {
            coeffs.push((&arg * weight).scale(&-q.coeff(j)));
            arg = &arg * q_arg;
        }
        let u = BivarTrunc::new(coeffs, g);
        let factor = u.trunc_binom_pow_rational(&nu).expect("factor is nilpotent");
        acc = &acc * &factor;
        if let Some(cap) = t_cap {
            acc = acc.truncate_t(cap);
        }
    }
    acc
}

fn bullet_numerator(d: &SheafDescriptor) -> UniPoly {
    let square = UniPoly::from_ints(&[1, -2, 1], Var::T);
    let t = UniPoly::from_ints(&[0, 1], Var::T);
    d.spectrum.iter().fold(UniPoly::zero(Var::T), |acc, e| {
        &acc + &top_over_t(&bullet_product(e, d.g, &square, &t, None), d.g)
    })
}

/// Numerators `f~*`, `f~•`, `f~` with `Z~(t) = t f~(t) / (1 - t)^{2g+chi}`.
pub fn ftilde_polynomials(d: &SheafDescriptor) -> Numerators {
    Numerators::new(star_numerator(d), bullet_numerator(d))
}

/// `t^0 ..= t^order` coefficients of `(1 - t)^{-chi}`.
fn inverse_pole(chi: &Rational, order: usize) -> UniPoly {
    UniPoly::new(
        (0..=order).map(|k| gen_binomial(&(chi + rat(k as i64) - rat(1)), k as u64)).collect(),
        Var::T,
    )
}

fn padded(p: &UniPoly, order: usize) -> Vec<Rational> {
    (0..=order).map(|k| p.coeff(k)).collect()
}

/// Symmetric-power star ranks `r~*(0..=order)` from the Adams-operation
/// expansion `(1-t)^{-chi} g! [exp(sum_r sum_i c_i r^{2i} s^i t^r / r)]_{s^g}`.
pub fn sym_rank_series_adams(d: &SheafDescriptor, order: usize) -> Vec<Rational> {
    let g = d.g;
    let mut coeffs = vec![UniPoly::zero(Var::T); g + 1];
    for (i, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let c = d.gamma.coeff(i);
        if c.is_zero() {
            continue;
        }
        let terms = (0..=order)
            .map(|r| {
                if r == 0 {
                    return Rational::zero();
                }
                let weight = BigInt::from(r).pow(2 * i as u32 - 1);
                c * Rational::from_integer(weight)
            })
            .collect();
        *slot = UniPoly::new(terms, Var::T);
    }
    let e = BivarTrunc::new(coeffs, g).trunc_exp().expect("exponent has no constant term");
    let top = e.s_coeff(g).truncate(order).scale(&g_factorial(g));
    padded(&(&top * &inverse_pole(&d.chi, order)).truncate(order), order)
}

/// Symmetric-power bullet ranks `r~•(0..=order)`, computed twice: from the
/// closed product over `q_n` and from the graded symmetric powers of the
/// Betti polynomials pulled back through `iota^{-1}`. Disagreement is an
/// error.
pub fn sym_rank_series_betti(d: &SheafDescriptor, order: usize) -> Result<Vec<Rational>, EngineError> {
    let g = d.g;
    let mut closed = vec![Rational::zero(); order + 1];
    let mut oracle = vec![Rational::zero(); order + 1];
    // t / (1-t)^2 = sum k t^k
    let weight = UniPoly::new((0..=order).map(|k| rat(k as i64)).collect(), Var::T);
    let s_only = UniPoly::one(Var::T);
    for entry in &d.spectrum {
        let prod = bullet_product(entry, g, &s_only, &weight, Some(order));
        let top = &prod.s_coeff(g) * &inverse_pole(&entry.h().coeff(0), order);
        for (k, slot) in closed.iter_mut().enumerate() {
            *slot += top.coeff(k);
        }
        for (k, power) in st_graded(&entry.betti(), order).iter().enumerate() {
            oracle[k] += iota_inv(power).coeff(g);
        }
    }
    if let Some(index) = (0..=order).find(|&k| closed[k] != oracle[k]) {
        return Err(EngineError::RouteMismatch {
            what: "symmetric bullet ranks",
            index,
            left: closed[index].clone(),
            right: oracle[index].clone(),
        });
    }
    Ok(closed)
}
