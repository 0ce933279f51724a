//! Fixed polynomial families: Eulerian polynomials `p_m(t)`, the
//! polynomials `q_n(s)` with `x^n + x^-n - 2 = iota(s q_n(s))`, and the
//! substitution `iota: s -> 2 - x - x^-1` between `Q[s]` and symmetric
//! Laurent polynomials.

use num::{BigInt, Integer, One, Zero};

use crate::algebra::{binomial, gen_binomial, rat, Rational, SymLaurent, UniPoly, Var};

/// Eulerian polynomial `p_m(t)`, defined by
/// `sum_{r>=1} r^m t^r = t p_m(t) / (1 - t)^{m+1}`.
///
/// Built from the triangle `A(m,k) = (k+1) A(m-1,k) + (m-k) A(m-1,k-1)`.
pub fn eulerian(m: usize) -> UniPoly {
    assert!(m >= 1, "Eulerian polynomials are indexed from 1");
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for level in 2..=m {
        let next = (0..level)
            .map(|k| {
                let keep = row.get(k).map_or_else(BigInt::zero, |a| a * (k + 1));
                let carry = if k == 0 { BigInt::zero() } else { &row[k - 1] * (level - k) };
                keep + carry
            })
            .collect();
        row = next;
    }
    UniPoly::new(row.into_iter().map(Rational::from_integer).collect(), Var::T)
}

/// `q_n(s) = -sum_{e=1}^n C(n+e, n-e) * 2n/(n+e) * (-s)^{e-1}`.
pub fn qpoly(n: usize) -> UniPoly {
    assert!(n >= 1, "q_n is indexed from 1");
    let coeffs = (1..=n)
        .map(|e| {
            let num = binomial((n + e) as u64, (n - e) as u64) * (2 * n);
            let (quot, rem) = num.div_rem(&BigInt::from(n + e));
            assert!(rem.is_zero(), "non-integral coefficient in q_{n}");
            let sign = if e % 2 == 1 { -1 } else { 1 };
            Rational::from_integer(quot * sign)
        })
        .collect();
    UniPoly::new(coeffs, Var::S)
}

/// `iota(s) = 2 - x - x^-1`, extended to a ring map `Q[s] -> Q[x, x^-1]`.
pub fn iota(h: &UniPoly) -> SymLaurent {
    let image_of_s = SymLaurent::from_ints(&[2, -1]);
    h.coeffs()
        .iter()
        .rev()
        .fold(SymLaurent::zero(), |acc, c| &(&acc * &image_of_s) + &SymLaurent::constant(c.clone()))
}

/// Inverse of [`iota`]: `a_0 + sum a_n (x^n + x^-n)` maps to
/// `b(1) + sum_{n>0} a_n s q_n(s)`.
pub fn iota_inv(b: &SymLaurent) -> UniPoly {
    let mut out = UniPoly::constant(b.eval_at_one(), Var::S);
    for (n, a) in b.coeffs().iter().enumerate().skip(1) {
        if !a.is_zero() {
            out = &out + &qpoly(n).shift_up(1).scale(a);
        }
    }
    out
}

/// Adams operation `x^i -> x^{ni}` on symmetric Laurent polynomials.
pub fn adams_scale_laurent(b: &SymLaurent, n: usize) -> SymLaurent {
    b.adams(n)
}

/// `t^0 ..= t^order` coefficients of `prod_{n in Z} (1 - x^n t)^{-a_n}` for
/// `b = sum a_n x^n`, each a symmetric Laurent polynomial.
pub fn st_graded(b: &SymLaurent, order: usize) -> Vec<SymLaurent> {
    let mut acc = vec![SymLaurent::zero(); order + 1];
    acc[0] = SymLaurent::constant(rat(1));
    for (n, a) in b.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        // (1 - y t)^{-a} = sum_k C(a+k-1, k) y^k t^k
        let weights: Vec<Rational> = (0..=order)
            .map(|k| gen_binomial(&(a + rat(k as i64) - rat(1)), k as u64))
            .collect();
        let factor: Vec<SymLaurent> = if n == 0 {
            weights.iter().map(|w| SymLaurent::constant(w.clone())).collect()
        } else {
            // (1 - x^n t)^{-a} (1 - x^-n t)^{-a}, t^k coefficient
            // sum_{i+j=k} w_i w_j x^{n(i-j)}
            (0..=order)
                .map(|k| {
                    let mut coeffs = vec![Rational::zero(); n * k + 1];
                    for i in 0..=k {
                        let j = k - i;
                        let d = i.abs_diff(j) * n;
                        let w = &weights[i] * &weights[j];
                        // terms with i < j are the mirror images at x^-d
                        if i >= j {
                            coeffs[d] += w;
                        }
                    }
                    SymLaurent::new(coeffs)
                })
                .collect()
        };
        acc = (0..=order)
            .map(|k| {
                (0..=k).fold(SymLaurent::zero(), |sum, i| &sum + &(&acc[i] * &factor[k - i]))
            })
            .collect();
    }
    acc
}
