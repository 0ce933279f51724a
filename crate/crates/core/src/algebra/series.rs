use num::{pow::Pow, BigInt, Zero};

use super::{binomial, AlgebraError, Rational, UniPoly, Var};

/// `numerator(t) / (1 - base*t)^order` with `order >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: UniPoly,
    pole_base: Rational,
    pole_order: u32,
}

impl RationalSeries {
    pub fn new(numerator: UniPoly, pole_base: Rational, pole_order: u32) -> Result<Self, AlgebraError> {
        if numerator.var() != Var::T {
            return Err(AlgebraError::VariableMismatch { left: numerator.var(), right: Var::T });
        }
        if pole_order == 0 {
            return Err(AlgebraError::ZeroPoleOrder);
        }
        Ok(RationalSeries { numerator, pole_base, pole_order })
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.numerator
    }

    pub fn pole_base(&self) -> &Rational {
        &self.pole_base
    }

    pub fn pole_order(&self) -> u32 {
        self.pole_order
    }

    /// Exact coefficients of `t^0 ..= t^order`.
    pub fn expand(&self, order: usize) -> Vec<Rational> {
        let k = u64::from(self.pole_order);
        let pole: Vec<Rational> = (0..=order)
            .map(|n| {
                let b = binomial(n as u64 + k - 1, k - 1);
                Rational::from_integer(b) * Pow::pow(&self.pole_base, n as u32)
            })
            .collect();
        (0..=order)
            .map(|n| {
                self.numerator
                    .coeffs()
                    .iter()
                    .enumerate()
                    .take(n + 1)
                    .fold(Rational::zero(), |acc, (i, c)| acc + c * &pole[n - i])
            })
            .collect()
    }

    /// Coefficients of `(1 - base*t)^order` itself, ascending.
    pub fn pole_polynomial(&self) -> UniPoly {
        let k = u64::from(self.pole_order);
        UniPoly::new(
            (0..=k)
                .map(|i| {
                    let sign = if i % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                    Rational::from_integer(sign * binomial(k, i)) * Pow::pow(&self.pole_base, i as u32)
                })
                .collect(),
            Var::T,
        )
    }
}
