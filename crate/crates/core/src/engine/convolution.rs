use num::Zero;

use crate::algebra::{rat, Rational, RationalSeries, UniPoly, Var};
use crate::sheaf::SheafDescriptor;

use super::EngineError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    /// Convolution powers, pole `(1 - chi t)^{g+1}`.
    Conv,
    /// Symmetric convolution powers, pole `(1 - t)^{2g+chi}`.
    Sym,
}

/// Star (clean) and bullet (negligible) numerators and their difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Numerators {
    pub star: UniPoly,
    pub bullet: UniPoly,
    pub total: UniPoly,
}

impl Numerators {
    pub(crate) fn new(star: UniPoly, bullet: UniPoly) -> Self {
        let total = &star - &bullet;
        Numerators { star, bullet, total }
    }
}

/// `[gamma_s^n]_{s^g}`, evaluated on the fundamental class.
pub fn r_star_direct(d: &SheafDescriptor, n: u32) -> Rational {
    d.gamma.pow(n).top_eval()
}

/// `sum_phi [h_s(P_phi)^n]_{s^g}`.
pub fn r_bullet_direct(d: &SheafDescriptor, n: u32) -> Rational {
    d.spectrum.iter().fold(Rational::zero(), |acc, e| acc + e.h().pow(n).coeff(d.g))
}

/// Generic rank of the `n`-th convolution power, `r*(n) - r•(n)`.
pub fn r_direct(d: &SheafDescriptor, n: u32) -> Rational {
    r_star_direct(d, n) - r_bullet_direct(d, n)
}

/// `sum_{n=1}^g bracket(n) t^{n-1} (1 - chi t)^{g-n}`.
fn numerator(g: usize, chi: &Rational, bracket: impl Fn(u32) -> Rational) -> UniPoly {
    let pole = UniPoly::new(vec![rat(1), -chi.clone()], Var::T);
    (1..=g).fold(UniPoly::zero(Var::T), |acc, n| {
        let b = bracket(n as u32);
        if b.is_zero() {
            return acc;
        }
        let term = pole.pow((g - n) as u32).shift_up(n - 1).scale(&b);
        &acc + &term
    })
}

/// Closed-form numerators `f*`, `f•`, `f` with
/// `Z(t) = t f(t) / (1 - chi t)^{g+1}`.
pub fn f_polynomials(d: &SheafDescriptor) -> Numerators {
    let shifted = d.gamma.minus_constant(&d.chi);
    let star = numerator(d.g, &d.chi, |n| shifted.pow(n).top_eval());
    let chi_s = UniPoly::constant(d.chi.clone(), Var::S);
    let bullet = numerator(d.g, &d.chi, |n| {
        d.spectrum
            .iter()
            .fold(Rational::zero(), |acc, e| acc + (e.h() - &chi_s).pow(n).coeff(d.g))
    });
    Numerators::new(star, bullet)
}

/// Generating series of the generic ranks as `t f(t) / (1 - c t)^k`.
pub fn z_series(d: &SheafDescriptor, kind: SeriesKind) -> Result<RationalSeries, EngineError> {
    match kind {
        SeriesKind::Conv => {
            let f = f_polynomials(d).total;
            Ok(RationalSeries::new(f.shift_up(1), d.chi.clone(), d.g as u32 + 1)?)
        }
        SeriesKind::Sym => {
            let chi = d.chi_u32().ok_or_else(|| EngineError::NonIntegerChi(d.chi.clone()))?;
            let f = super::ftilde_polynomials(d).total;
            Ok(RationalSeries::new(f.shift_up(1), rat(1), 2 * d.g as u32 + chi)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sheaf::{preset_elliptic, preset_prym, preset_theta};

    fn t(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c, Var::T)
    }

    #[test]
    fn theta_direct_ranks() {
        let d = preset_theta(4).unwrap();
        assert_eq!(r_star_direct(&d, 1), rat(0));
        assert_eq!(r_star_direct(&d, 2), rat(72));
        let bullet: Vec<_> = (1..=4).map(|n| r_bullet_direct(&d, n)).collect();
        assert_eq!(bullet, vec![rat(0), rat(14), rat(1158), rat(63409)]);
        assert_eq!(r_direct(&d, 2), rat(58));
    }

    #[test]
    fn prym_top_power() {
        for g in 2..=5 {
            for m in 1..=3i64 {
                let d = preset_prym(g, m as u64, 2 * g as u64 - 2).unwrap();
                let fact: i64 = (1..=g as i64).product();
                assert_eq!(r_star_direct(&d, g as u32), rat(m.pow(g as u32) * fact));
            }
        }
        let mut d = preset_theta(3).unwrap();
        d.spectrum.clear();
        assert_eq!(r_bullet_direct(&d, 3), rat(0));
    }

    #[test]
    fn theta_numerators() {
        let f = f_polynomials(&preset_theta(4).unwrap());
        assert_eq!(f.star, t(&[0, 72, -864, 10368]));
        // Brute-force oracle: (1 - 24t)^5 * sum r•(n) t^n with r•(1..4) from
        // direct powers of h = 24 + 5s + 2s^2 + s^3.
        let series = t(&[0, 0, 14, 1158, 63409]);
        let pole = t(&[1, -24]).pow(5);
        let oracle = (&series * &pole).truncate(4).shift_down(1).unwrap();
        assert_eq!(oracle, t(&[0, 14, -522, 5089]));
        assert_eq!(f.bullet, oracle);
        assert_eq!(f.total, t(&[0, 58, -342, 5279]));
    }

    #[test]
    fn series_shapes() {
        let e = z_series(&preset_elliptic(3, 2).unwrap(), SeriesKind::Conv).unwrap();
        assert_eq!(e.numerator(), &t(&[0, 3]));
        assert_eq!((e.pole_base().clone(), e.pole_order()), (rat(2), 2));
        let z = z_series(&preset_theta(4).unwrap(), SeriesKind::Conv).unwrap();
        assert_eq!(z.expand(2)[2], rat(58));
        let p = z_series(&preset_prym(2, 1, 2).unwrap(), SeriesKind::Sym).unwrap();
        assert_eq!(p.pole_order(), 6);
        assert_eq!(p.expand(2)[2], rat(1));
        let mut odd = preset_elliptic(1, 1).unwrap();
        odd.chi = Rational::new(1.into(), 2.into());
        assert!(matches!(z_series(&odd, SeriesKind::Sym), Err(EngineError::NonIntegerChi(_))));
    }
}
