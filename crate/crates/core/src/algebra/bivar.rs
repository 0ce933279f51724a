use std::ops::{Add, Mul, Sub};

use num::{One, Zero};

use super::{gen_binomial, rat, AlgebraError, Rational, UniPoly, Var};

/// Polynomial in `s` with coefficients in `Q[t]`, truncated above `s^order`.
///
/// The `t` side is kept exact; every product discards `s`-degrees beyond
/// the truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarTrunc {
    coeffs: Vec<UniPoly>,
    order: usize,
}

impl BivarTrunc {
    /// Builds from `s`-coefficients (each a polynomial in `t`), padding with
    /// zeros or truncating to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<UniPoly>, order: usize) -> Self {
        assert!(coeffs.iter().all(|c| c.var() == Var::T), "s-coefficients must be polynomials in t");
        coeffs.resize(order + 1, UniPoly::zero(Var::T));
        BivarTrunc { coeffs, order }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![UniPoly::one(Var::T)], order)
    }

    /// `c * s^i` where `c` is a polynomial in `t`.
    pub fn term(c: UniPoly, i: usize, order: usize) -> Self {
        let mut coeffs = vec![UniPoly::zero(Var::T); order + 1];
        if i <= order {
            coeffs[i] = c;
        }
        Self::new(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn s_coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Coefficient of `s^i`; zero above the truncation order.
    pub fn s_coeff(&self, i: usize) -> UniPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(|| UniPoly::zero(Var::T))
    }

    pub fn is_s_nilpotent(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    fn check_order(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(AlgebraError::OrderMismatch { left: self.order, right: other.order })
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_order(other)?;
        let mut out = vec![UniPoly::zero(Var::T); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(self.order + 1 - i) {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(BivarTrunc { coeffs: out, order: self.order })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BivarTrunc { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(), order: self.order }
    }

    /// Drops `t`-degrees above `max_degree` in every coefficient.
    pub fn truncate_t(&self, max_degree: usize) -> Self {
        BivarTrunc {
            coeffs: self.coeffs.iter().map(|p| p.truncate(max_degree)).collect(),
            order: self.order,
        }
    }

    /// `exp(u)` as the finite sum `sum_{k<=order} u^k / k!`.
    pub fn trunc_exp(&self) -> Result<Self, AlgebraError> {
        self.power_series(|k| {
            (1..=k as i64).fold(Rational::one(), |acc, i| acc / rat(i))
        })
    }

    /// `(1 + u)^exponent` via the binomial series; exact because `u` is
    /// nilpotent in `s`.
    pub fn trunc_binom_pow(&self, exponent: i64) -> Result<Self, AlgebraError> {
        self.trunc_binom_pow_rational(&rat(exponent))
    }

    /// [`trunc_binom_pow`](Self::trunc_binom_pow) with a rational exponent.
    pub fn trunc_binom_pow_rational(&self, exponent: &Rational) -> Result<Self, AlgebraError> {
        self.power_series(|k| gen_binomial(exponent, k as u64))
    }

    /// `sum_{k<=order} coeff(k) u^k` for nilpotent `u`.
    fn power_series(&self, coeff: impl Fn(usize) -> Rational) -> Result<Self, AlgebraError> {
        if !self.is_s_nilpotent() {
            return Err(AlgebraError::NotNilpotent);
        }
        let mut result = BivarTrunc::one(self.order);
        let mut power = BivarTrunc::one(self.order);
        for k in 1..=self.order {
            power = &power * self;
            let c = coeff(k);
            if !c.is_zero() {
                result = &result + &power.scale(&c);
            }
        }
        Ok(result)
    }
}

impl Add for &BivarTrunc {
    type Output = BivarTrunc;
    fn add(self, rhs: &BivarTrunc) -> BivarTrunc {
        self.check_order(rhs).expect("truncation order mismatch");
        BivarTrunc {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            order: self.order,
        }
    }
}

impl Sub for &BivarTrunc {
    type Output = BivarTrunc;
    fn sub(self, rhs: &BivarTrunc) -> BivarTrunc {
        self.check_order(rhs).expect("truncation order mismatch");
        BivarTrunc {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
            order: self.order,
        }
    }
}

impl Mul for &BivarTrunc {
    type Output = BivarTrunc;
    fn mul(self, rhs: &BivarTrunc) -> BivarTrunc {
        self.try_mul(rhs).expect("truncation order mismatch")
    }
}
