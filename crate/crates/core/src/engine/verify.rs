//! Report-style consistency checks over a single descriptor.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{factorial, rat, Rational, RationalSeries, UniPoly, Var};
use crate::sheaf::SheafDescriptor;
use crate::special::qpoly;
use crate::symgroup::{partitions_of, Partition};

use super::{
    f_polynomials, ftilde_polynomials, r_bullet_direct, r_direct, r_star_direct, schur_table,
    sym_rank_series_adams, sym_rank_series_betti, trace_values, z_series, SeriesKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    FunctionalEq,
    SchurSum,
    AdamsRoutes,
    DegreeBounds,
    ClosedForms,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::FunctionalEq, Suite::SchurSum, Suite::AdamsRoutes, Suite::DegreeBounds, Suite::ClosedForms];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FunctionalEq => "functional_eq",
            Suite::SchurSum => "schur_sum",
            Suite::AdamsRoutes => "adams_routes",
            Suite::DegreeBounds => "degree_bounds",
            Suite::ClosedForms => "closed_forms",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown suite `{0}` (expected one of functional_eq, schur_sum, adams_routes, degree_bounds, closed_forms)")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest `n` for the Schur-sum identity.
    pub schur_max_n: usize,
    /// Number of series coefficients compared between routes.
    pub route_order: usize,
    /// Largest `n` whose cycle types are checked against closed forms.
    pub trace_max_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { schur_max_n: 5, route_order: 8, trace_max_n: 6 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Exact values that broke the identity; `None` on success.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    fn push(&mut self, suite: Suite, label: &str, result: Result<(), String>) {
        let (pass, witness) = match result {
            Ok(()) => (true, None),
            Err(w) => (false, Some(w)),
        };
        self.checks.push(Check { name: format!("{suite}.{label}"), pass, witness });
    }
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

fn first_difference(left: &[Rational], right: &[Rational]) -> Result<(), String> {
    match left.iter().zip(right).position(|(a, b)| a != b) {
        None if left.len() == right.len() => Ok(()),
        None => Err(format!("lengths {} vs {}", left.len(), right.len())),
        Some(k) => Err(format!("t^{k}: {} vs {}", left[k], right[k])),
    }
}

fn degree_at_most(p: &UniPoly, bound: usize) -> bool {
    p.degree().finite().map_or(true, |d| d <= bound)
}

pub fn verify(d: &SheafDescriptor, suites: &[Suite], opts: &VerifyOptions) -> VerifyReport {
    let mut report = VerifyReport::default();
    for &suite in suites {
        match suite {
            Suite::FunctionalEq => functional_eq(d, &mut report),
            Suite::SchurSum => schur_sum(d, opts, &mut report),
            Suite::AdamsRoutes => adams_routes(d, opts, &mut report),
            Suite::DegreeBounds => degree_bounds(d, &mut report),
            Suite::ClosedForms => closed_forms(d, opts, &mut report),
        }
    }
    report
}

fn functional_eq(d: &SheafDescriptor, report: &mut VerifyReport) {
    let f = ftilde_polynomials(d);
    let n = 2 * d.g - 2;
    for (label, p) in [("f_tilde_star", &f.star), ("f_tilde_bullet", &f.bullet), ("f_tilde", &f.total)] {
        report.push(Suite::FunctionalEq, label, ensure(p.is_palindromic(n), || format!("{p} is not palindromic of degree {n}")));
    }
}

fn degree_bounds(d: &SheafDescriptor, report: &mut VerifyReport) {
    let f = f_polynomials(d);
    let ft = ftilde_polynomials(d);
    let rank = d.generic_rank();
    let (g1, g2) = (d.g - 1, 2 * d.g - 2);
    for (label, p, bound) in [
        ("f_star_degree", &f.star, g1),
        ("f_bullet_degree", &f.bullet, g1),
        ("f_degree", &f.total, g1),
        ("f_tilde_star_degree", &ft.star, g2),
        ("f_tilde_bullet_degree", &ft.bullet, g2),
        ("f_tilde_degree", &ft.total, g2),
    ] {
        report.push(Suite::DegreeBounds, label, ensure(degree_at_most(p, bound), || format!("deg {p} > {bound}")));
    }
    for (label, p) in [("f_constant_term", &f.total), ("f_tilde_constant_term", &ft.total)] {
        let c = p.coeff(0);
        report.push(Suite::DegreeBounds, label, ensure(c == rank, || format!("{c} vs generic rank {rank}")));
    }
    if !rank.is_zero() {
        let deg = ft.total.degree();
        report.push(
            Suite::DegreeBounds,
            "full_support",
            ensure(deg.finite() == Some(g2), || format!("deg f~ = {deg}, expected {g2}")),
        );
    }
    for (label, p) in [("f_integral", &f.total), ("f_tilde_integral", &ft.total)] {
        report.push(
            Suite::DegreeBounds,
            label,
            ensure(p.coeffs().iter().all(Rational::is_integer), || format!("{p} has non-integer coefficients")),
        );
    }
}

fn schur_sum(d: &SheafDescriptor, opts: &VerifyOptions, report: &mut VerifyReport) {
    let z_sym = z_series(d, SeriesKind::Sym).map(|z| z.expand(opts.schur_max_n));
    for n in 1..=opts.schur_max_n {
        let r = r_direct(d, n as u32);
        let result = schur_table(d, n).map_err(|e| e.to_string()).and_then(|table| {
            let sum: BigInt = table.iter().map(|row| BigInt::from(row.dim.clone()) * &row.rank).sum();
            ensure(Rational::from_integer(sum.clone()) == r, || format!("sum {sum} vs r({n}) = {r}"))?;
            let sym = &table[0];
            match &z_sym {
                Ok(z) => ensure(Rational::from_integer(sym.rank.clone()) == z[n], || {
                    format!("S^{n} rank {} vs series coefficient {}", sym.rank, z[n])
                }),
                Err(e) => Err(e.to_string()),
            }
        });
        report.push(Suite::SchurSum, &format!("n={n}"), result);
        let identity = trace_values(d, &Partition::identity(n)).map_err(|e| e.to_string()).and_then(|c| {
            let expected = (r_star_direct(d, n as u32), r_bullet_direct(d, n as u32));
            ensure(c.star == expected.0 && c.bullet == expected.1, || {
                format!("({}, {}) vs ({}, {})", c.star, c.bullet, expected.0, expected.1)
            })
        });
        report.push(Suite::SchurSum, &format!("identity_trace.n={n}"), identity);
    }
}

fn adams_routes(d: &SheafDescriptor, opts: &VerifyOptions, report: &mut VerifyReport) {
    let order = opts.route_order;
    let g = d.g as u32;
    let f = f_polynomials(d);
    let direct = |which: fn(&SheafDescriptor, u32) -> Rational| -> Vec<Rational> {
        (0..=order).map(|n| if n == 0 { Rational::zero() } else { which(d, n as u32) }).collect()
    };
    let conv = |p: &UniPoly| RationalSeries::new(p.shift_up(1), d.chi.clone(), g + 1).map(|z| z.expand(order));
    for (label, p, which) in [
        ("conv_star", &f.star, r_star_direct as fn(&SheafDescriptor, u32) -> Rational),
        ("conv_bullet", &f.bullet, r_bullet_direct),
        ("conv", &f.total, r_direct),
    ] {
        let result = conv(p).map_err(|e| e.to_string()).and_then(|z| first_difference(&z, &direct(which)));
        report.push(Suite::AdamsRoutes, label, result);
    }

    let ft = ftilde_polynomials(d);
    let Some(chi) = d.chi_u32() else {
        let msg = format!("chi = {} is not a non-negative integer", d.chi);
        report.push(Suite::AdamsRoutes, "sym_star", Err(msg.clone()));
        report.push(Suite::AdamsRoutes, "sym_bullet", Err(msg));
        return;
    };
    let sym = |p: &UniPoly| RationalSeries::new(p.shift_up(1), rat(1), 2 * g + chi).map(|z| z.expand(order));
    let star = sym(&ft.star)
        .map_err(|e| e.to_string())
        .and_then(|z| first_difference(&z, &sym_rank_series_adams(d, order)));
    report.push(Suite::AdamsRoutes, "sym_star", star);
    let bullet = sym(&ft.bullet).map_err(|e| e.to_string()).and_then(|z| {
        let other = sym_rank_series_betti(d, order).map_err(|e| e.to_string())?;
        first_difference(&z, &other)
    });
    report.push(Suite::AdamsRoutes, "sym_bullet", bullet);
}

/// `(m, chi)` if the descriptor has the shape of a Prym-Tjurin curve:
/// `gamma = chi + m s`, spectrum `{chi + s}`, `g >= 2`.
fn prym_shape(d: &SheafDescriptor) -> Option<Rational> {
    let c = d.gamma.coeffs();
    let h = UniPoly::new(vec![d.chi.clone(), Rational::one()], Var::S);
    let shaped = d.g >= 2
        && c[0] == d.chi
        && c[2..].iter().all(Zero::is_zero)
        && d.spectrum.len() == 1
        && d.spectrum[0].h() == &h;
    shaped.then(|| c[1].clone())
}

fn s_product(factors: impl Iterator<Item = UniPoly>) -> UniPoly {
    factors.fold(UniPoly::one(Var::S), |acc, p| &acc * &p)
}

fn closed_forms(d: &SheafDescriptor, opts: &VerifyOptions, report: &mut VerifyReport) {
    let g = d.g;
    let f = f_polynomials(d).total;
    let ft = ftilde_polynomials(d).total;
    let traces = |report: &mut VerifyReport, label: &str, closed: &dyn Fn(&Partition) -> (Rational, Rational)| {
        for n in 1..=opts.trace_max_n {
            let result = partitions_of(n).iter().try_for_each(|sigma| {
                let (star, bullet) = closed(sigma);
                let c = trace_values(d, sigma).map_err(|e| e.to_string())?;
                ensure(c.star == star && c.bullet == bullet, || {
                    format!("sigma {sigma}: ({}, {}) vs closed form ({star}, {bullet})", c.star, c.bullet)
                })
            });
            report.push(Suite::ClosedForms, &format!("{label}.n={n}"), result);
        }
    };

    if g == 1 {
        let rank = d.generic_rank();
        let constant = UniPoly::constant(rank.clone(), Var::T);
        report.push(
            Suite::ClosedForms,
            "elliptic_numerators",
            ensure(f == constant && ft == constant, || format!("f = {f}, f~ = {ft}, rank {rank}")),
        );
        let chi = d.chi.clone();
        traces(report, "elliptic_trace", &|sigma| {
            let squares: usize = sigma.parts().iter().map(|k| k * k).sum();
            let star = &rank * num::pow::pow(chi.clone(), sigma.len() - 1) * rat(squares as i64);
            (star, Rational::zero())
        });
        return;
    }

    let Some(m) = prym_shape(d) else {
        report.push(Suite::ClosedForms, "no_closed_form_for_shape", Ok(()));
        return;
    };
    let g_fact = Rational::from_integer(factorial(g as u64));
    let m_g = num::pow::pow(m.clone(), g);
    let f_expected = UniPoly::monomial(&m_g * &g_fact - rat(1), g - 1, Var::T);
    let ft_expected = UniPoly::monomial(m_g, g - 1, Var::T);
    report.push(Suite::ClosedForms, "prym_f", ensure(f == f_expected, || format!("{f} vs {f_expected}")));
    report.push(Suite::ClosedForms, "prym_f_tilde", ensure(ft == ft_expected, || format!("{ft} vs {ft_expected}")));
    let chi = d.chi.clone();
    traces(report, "prym_trace", &|sigma| {
        let star = s_product(sigma.parts().iter().map(|&k| {
            UniPoly::new(vec![chi.clone(), &m * rat((k * k) as i64)], Var::S)
        }))
        .coeff(g)
            * &g_fact;
        let bullet = s_product(
            sigma.parts().iter().map(|&k| &UniPoly::constant(chi.clone(), Var::S) - &qpoly(k).shift_up(1)),
        )
        .coeff(g);
        (star, bullet)
    });
}
