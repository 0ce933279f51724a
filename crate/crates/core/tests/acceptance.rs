//! Acceptance gate. Runs every criterion, prints one line each, and exits
//! non-zero if any criterion fails or takes longer than five seconds.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use abelrank::algebra::{factorial, Degree, rat, Rational, RationalSeries, UniPoly, Var};
use abelrank::engine::verify::{verify, Suite, VerifyOptions};
use abelrank::engine::{
    f_polynomials, ftilde_polynomials, r_bullet_direct, r_direct, schur_rank, schur_table,
    sym_rank_series_adams, sym_rank_series_betti, trace_values, z_series, SeriesKind,
};
use abelrank::random::random_descriptors;
use abelrank::sheaf::{preset_elliptic, preset_jacobian, preset_prym, preset_theta, serialize_descriptor, SheafDescriptor};
use abelrank::special::{eulerian, iota, qpoly};
use abelrank::algebra::SymLaurent;
use abelrank::symgroup::{character, class_size, dimension, partitions_of, Partition};
use num::{BigInt, BigUint, One, Zero};

const LIMIT: Duration = Duration::from_secs(5);

type Outcome = Result<(), String>;

fn t(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c, Var::T)
}

fn s(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c, Var::S)
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn expect_eq<T: PartialEq + std::fmt::Display>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn expect_seq(what: &str, got: &[Rational], want: &[Rational]) -> Outcome {
    let show = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    expect_eq(what, show(got), show(want))
}

fn expect(what: &str, cond: bool) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn presets() -> Vec<(String, SheafDescriptor)> {
    let mut out = Vec::new();
    for g in 1..=4 {
        out.push((format!("theta g={g}"), preset_theta(g).unwrap()));
    }
    for g in 2..=5 {
        out.push((format!("jacobian g={g}"), preset_jacobian(g).unwrap()));
        for m in 1..=3 {
            out.push((format!("prym g={g} m={m}"), preset_prym(g, m, 2 * g as u64 - 2).unwrap()));
        }
    }
    for r in 1..=3 {
        for chi in 1..=3 {
            out.push((format!("elliptic r={r} chi={chi}"), preset_elliptic(r, chi).unwrap()));
        }
    }
    out
}

fn labelled_random(count: usize, seed: u64, max_g: usize) -> Vec<(String, SheafDescriptor)> {
    random_descriptors(count, seed, max_g)
        .into_iter()
        .map(|d| (serialize_descriptor(&d), d))
        .collect()
}

fn theta_star() -> Outcome {
    let f = f_polynomials(&preset_theta(4).unwrap());
    let expected = t(&[0, 3, -36, 432]).scale(&rat(24));
    expect_eq("f*", f.star, expected)
}

fn theta_symmetric_parts() -> Outcome {
    let f = ftilde_polynomials(&preset_theta(4).unwrap());
    expect_eq("f~*", f.star, t(&[0, 36, 1152, 4824, 1152, 36]))?;
    expect_eq("f~•", f.bullet, t(&[0, -16, -140, -225, -140, -16]))
}

fn theta_combined() -> Outcome {
    let d = preset_theta(4).unwrap();
    expect_eq("f~", ftilde_polynomials(&d).total, t(&[0, 52, 1292, 5049, 1292, 52]))?;
    expect_eq("r(2)", r_direct(&d, 2), rat(58))?;
    expect_eq("conv series t^2", z_series(&d, SeriesKind::Conv).unwrap().expand(2)[2].clone(), rat(58))?;
    expect_eq("r~(2)", schur_rank(&d, &p(&[2])).unwrap(), BigInt::from(52))?;
    expect_eq("r~(1,1)", schur_rank(&d, &p(&[1, 1])).unwrap(), BigInt::from(6))
}

fn theta_bullet() -> Outcome {
    let d = preset_theta(4).unwrap();
    let f = f_polynomials(&d).bullet;
    expect_eq("f• t", f.coeff(1), rat(14))?;
    expect_eq("f• t^2", f.coeff(2), rat(-522))?;
    // Oracle: plain powers of h = 24 + 5s + 2s^2 + s^3, s^4-coefficient.
    let h = s(&[24, 5, 2, 1]);
    let ranks: Vec<Rational> = (0..=4u32).map(|n| if n == 0 { rat(0) } else { h.pow(n).coeff(4) }).collect();
    expect_seq("r• oracle", &ranks, &[0, 0, 14, 1158, 63409].map(rat))?;
    let direct: Vec<Rational> = (0..=4u32).map(|n| if n == 0 { rat(0) } else { r_bullet_direct(&d, n) }).collect();
    expect_seq("r• direct", &direct, &ranks)?;
    let product = &UniPoly::new(ranks, Var::T) * &t(&[1, -24]).pow(5);
    let oracle = product.truncate(4);
    expect_eq("f• t^3", f.coeff(3), oracle.coeff(4))?;
    expect_eq("f• t^3 value", f.coeff(3), rat(5089))?;
    // The identity (1-24t)^5 sum r•(n) t^n = t f• terminates at degree g+1:
    // with enough terms of the series the product has nothing beyond t^4.
    let long: Vec<Rational> = (0..=12u32).map(|n| if n == 0 { rat(0) } else { r_bullet_direct(&d, n) }).collect();
    let full = (&UniPoly::new(long, Var::T) * &t(&[1, -24]).pow(5)).truncate(12);
    expect_eq("(1-24t)^5 * series", full, f.shift_up(1))
}

fn prym_sweep() -> Outcome {
    for g in 2..=6usize {
        for m in 1..=3u64 {
            let d = preset_prym(g, m, 2 * g as u64 - 2).unwrap();
            let mg = (m as i64).pow(g as u32);
            let gf = Rational::from_integer(factorial(g as u64));
            let f_expected = UniPoly::monomial(rat(mg) * gf - rat(1), g - 1, Var::T);
            let ft_expected = UniPoly::monomial(rat(mg), g - 1, Var::T);
            expect_eq(&format!("prym g={g} m={m} f"), f_polynomials(&d).total, f_expected)?;
            expect_eq(&format!("prym g={g} m={m} f~"), ftilde_polynomials(&d).total, ft_expected)?;
        }
        let jac = preset_jacobian(g).unwrap();
        let gf = Rational::from_integer(factorial(g as u64));
        expect_eq(
            &format!("jacobian g={g} f"),
            f_polynomials(&jac).total,
            UniPoly::monomial(gf - rat(1), g - 1, Var::T),
        )?;
        expect_eq(&format!("jacobian g={g} f~"), ftilde_polynomials(&jac).total, UniPoly::monomial(rat(1), g - 1, Var::T))?;
    }
    Ok(())
}

fn elliptic_traces() -> Outcome {
    for r in 1..=3i64 {
        for chi in 1..=3i64 {
            let d = preset_elliptic(r as u64, chi as u64).unwrap();
            for n in 1..=6 {
                for sigma in partitions_of(n) {
                    let squares: i64 = sigma.parts().iter().map(|&k| (k * k) as i64).sum();
                    let c = r * chi.pow(sigma.len() as u32 - 1) * squares;
                    let got = trace_values(&d, &sigma).unwrap();
                    let what = format!("r={r} chi={chi} sigma={sigma}");
                    expect_eq(&format!("{what} c*"), got.star, rat(c))?;
                    expect_eq(&format!("{what} c•"), got.bullet, rat(0))?;
                    expect_eq(&format!("{what} c"), got.total, rat(c))?;
                }
            }
        }
    }
    Ok(())
}

fn functional_equation() -> Outcome {
    let mut all = presets();
    all.extend(labelled_random(50, 2024, 5));
    for (label, d) in &all {
        let f = ftilde_polynomials(d);
        let n = 2 * d.g - 2;
        for (part, poly) in [("f~*", &f.star), ("f~•", &f.bullet), ("f~", &f.total)] {
            expect(&format!("{label}: {part} = {poly} not palindromic of degree {n}"), poly.is_palindromic(n))?;
        }
        if d.generic_rank() > Rational::zero() {
            expect_eq(&format!("{label}: deg f~"), f.total.degree(), Degree::Finite(n))?;
        }
    }
    Ok(())
}

fn schur_sums() -> Outcome {
    let mut all = presets();
    all.extend(labelled_random(25, 7, 4));
    for (label, d) in &all {
        for n in 1..=5 {
            let table = schur_table(d, n).map_err(|e| format!("{label}: {e}"))?;
            let sum: BigInt = table.iter().map(|row| BigInt::from(row.dim.clone()) * &row.rank).sum();
            expect_eq(&format!("{label}: n={n}"), Rational::from_integer(sum), r_direct(d, n as u32))?;
        }
    }
    Ok(())
}

fn route_equality() -> Outcome {
    let order = 8;
    let mut all = presets();
    all.extend(labelled_random(25, 11, 4));
    for (label, d) in &all {
        let conv = z_series(d, SeriesKind::Conv).unwrap().expand(order);
        for n in 1..=order {
            expect_eq(&format!("{label}: conv t^{n}"), conv[n].clone(), r_direct(d, n as u32))?;
        }
        let f = ftilde_polynomials(d);
        let pole = 2 * d.g as u32 + d.chi_u32().unwrap();
        let sym = |p: &UniPoly| RationalSeries::new(p.shift_up(1), rat(1), pole).unwrap().expand(order);
        let adams = sym_rank_series_adams(d, order);
        let betti = sym_rank_series_betti(d, order).map_err(|e| format!("{label}: {e}"))?;
        let (star, bullet) = (sym(&f.star), sym(&f.bullet));
        for n in 0..=order {
            expect_eq(&format!("{label}: sym star t^{n}"), &star[n], &adams[n])?;
            expect_eq(&format!("{label}: sym bullet t^{n}"), &bullet[n], &betti[n])?;
        }
    }
    Ok(())
}

fn special_polynomials() -> Outcome {
    expect_eq("p_1", eulerian(1), t(&[1]))?;
    expect_eq("p_3", eulerian(3), t(&[1, 4, 1]))?;
    expect_eq("p_5", eulerian(5), t(&[1, 26, 66, 26, 1]))?;
    for m in 1..=9usize {
        let pm = eulerian(m);
        expect(&format!("p_{m} palindromic"), pm.is_palindromic(m - 1))?;
        // sum_{r>=1} r^m t^r times (1-t)^{m+1}, divided by t
        let big = 2 * m + 4;
        let series = UniPoly::new(
            (0..=big).map(|r| if r == 0 { rat(0) } else { rat((r as i64).pow(m as u32)) }).collect(),
            Var::T,
        );
        let back = (&series * &t(&[1, -1]).pow(m as u32 + 1)).truncate(big).shift_down(1).unwrap();
        expect_eq(&format!("p_{m} series identity"), back.truncate(big - m - 2), pm.truncate(big - m - 2))?;
    }
    expect_eq("q_1", qpoly(1), s(&[-1]))?;
    expect_eq("q_2", qpoly(2), s(&[-4, 1]))?;
    expect_eq("q_3", qpoly(3), s(&[-9, 6, -1]))?;
    for n in 1..=12 {
        let lhs = iota(&qpoly(n).shift_up(1));
        let rhs = &SymLaurent::basis(n) - &SymLaurent::constant(rat(2));
        expect_eq(&format!("iota(s q_{n})"), lhs, rhs)?;
    }
    Ok(())
}

fn characters() -> Outcome {
    for n in 1..=7 {
        let parts = partitions_of(n);
        let n_fact = BigInt::from(factorial(n as u64));
        let table: Vec<Vec<BigInt>> = parts
            .iter()
            .map(|a| parts.iter().map(|sigma| character(a, sigma).unwrap()).collect())
            .collect();
        let sizes: Vec<BigInt> = parts.iter().map(|sigma| BigInt::from(class_size(sigma))).collect();
        for (i, a) in parts.iter().enumerate() {
            expect_eq(
                &format!("chi_{a}(1) = dim"),
                table[i][parts.len() - 1].clone(),
                BigInt::from(dimension(a)),
            )?;
            for (j, b) in parts.iter().enumerate() {
                let inner: BigInt = (0..parts.len()).map(|k| &sizes[k] * &table[i][k] * &table[j][k]).sum();
                let want = if i == j { n_fact.clone() } else { BigInt::zero() };
                expect_eq(&format!("<chi_{a}, chi_{b}>"), inner, want)?;
            }
        }
        for (k, sigma) in parts.iter().enumerate() {
            for (l, tau) in parts.iter().enumerate() {
                let col: BigInt = (0..parts.len()).map(|i| &table[i][k] * &table[i][l]).sum();
                let want = if k == l { BigInt::from(sigma.centralizer_order()) } else { BigInt::zero() };
                expect_eq(&format!("columns {sigma}, {tau}"), col, want)?;
            }
        }
        let dims: BigUint = parts.iter().map(|a| dimension(a).pow(2)).sum();
        expect_eq(&format!("sum dim^2 for n={n}"), BigInt::from(dims), n_fact)?;
        let sizes_total: BigInt = sizes.iter().sum();
        expect_eq(&format!("class sizes for n={n}"), sizes_total, BigInt::from(factorial(n as u64)))?;
    }
    let one = BigUint::one();
    expect_eq("dim of trivial", dimension(&Partition::row(6)), one)
}

fn run(index: usize, name: &str, body: fn() -> Outcome) -> bool {
    let start = Instant::now();
    let result = panic::catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let elapsed = start.elapsed();
    let result = result.and_then(|()| {
        if elapsed <= LIMIT {
            Ok(())
        } else {
            Err(format!("took {elapsed:.2?}, limit {LIMIT:?}"))
        }
    });
    match &result {
        Ok(()) => println!("criterion {index:>2}: PASS  {name} ({elapsed:.2?})"),
        Err(why) => println!("criterion {index:>2}: FAIL  {name} ({elapsed:.2?}): {why}"),
    }
    result.is_ok()
}

fn main() -> ExitCode {
    // The gate also exercises the verify driver end to end on one preset.
    let _ = verify(&preset_theta(2).unwrap(), &Suite::ALL, &VerifyOptions::default());

    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("theta g=4 convolution star numerator", theta_star),
        ("theta g=4 symmetric star and bullet numerators", theta_symmetric_parts),
        ("theta g=4 combined numerator and Schur ranks", theta_combined),
        ("theta g=4 bullet numerator against the power-series oracle", theta_bullet),
        ("Prym-Tjurin and Jacobian sweep", prym_sweep),
        ("elliptic trace closed form", elliptic_traces),
        ("functional equation on presets and random descriptors", functional_equation),
        ("Schur-sum identity", schur_sums),
        ("route equality", route_equality),
        ("special polynomials", special_polynomials),
        ("character orthogonality and dimensions", characters),
    ];
    panic::set_hook(Box::new(|_| {}));
    let passed = criteria.iter().enumerate().filter(|(i, (name, body))| run(i + 1, name, *body)).count();
    let _ = panic::take_hook();
    println!("acceptance: {passed}/{} criteria passed", criteria.len());
    if passed == criteria.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
