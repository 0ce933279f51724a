use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::{rat, AlgebraError, Rational};

/// Variable tag carried by a [`UniPoly`]. Metadata only; arithmetic refuses
/// to mix tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    S,
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::S => "s",
            Var::T => "t",
        })
    }
}

/// Polynomial degree. The zero polynomial has degree `MinusInfinity`, which
/// sorts below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial with exact rational coefficients in ascending
/// degree order. Trailing zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
    var: Var,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic; fails if the operands carry different variables.
pub fn poly_arith(a: &UniPoly, b: &UniPoly, op: PolyOp) -> Result<UniPoly, AlgebraError> {
    match op {
        PolyOp::Add => a.try_add(b),
        PolyOp::Sub => a.try_sub(b),
        PolyOp::Mul => a.try_mul(b),
    }
}

impl UniPoly {
    pub fn new(coeffs: Vec<Rational>, var: Var) -> Self {
        let mut p = UniPoly { coeffs, var };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64], var: Var) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect(), var)
    }

    pub fn zero(var: Var) -> Self {
        UniPoly { coeffs: Vec::new(), var }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(Rational::one(), var)
    }

    pub fn constant(c: Rational, var: Var) -> Self {
        Self::new(vec![c], var)
    }

    /// `c * var^k`
    pub fn monomial(c: Rational, k: usize, var: Var) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs, var)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Coefficients in ascending degree; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    fn check_var(&self, other: &UniPoly) -> Result<(), AlgebraError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(AlgebraError::VariableMismatch { left: self.var, right: other.var })
        }
    }

    pub fn try_add(&self, other: &UniPoly) -> Result<UniPoly, AlgebraError> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(UniPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect(), self.var))
    }

    pub fn try_sub(&self, other: &UniPoly) -> Result<UniPoly, AlgebraError> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(UniPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect(), self.var))
    }

    pub fn try_mul(&self, other: &UniPoly) -> Result<UniPoly, AlgebraError> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(UniPoly::zero(self.var));
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(UniPoly::new(out, self.var))
    }

    /// `self^n` by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, mut n: u32) -> UniPoly {
        let mut result = UniPoly::one(self.var);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect(), self.var)
    }

    /// Multiplies by `var^k`.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs, var: self.var }
    }

    /// Exact division by `var^k`; `None` if a discarded coefficient is nonzero.
    pub fn shift_down(&self, k: usize) -> Option<UniPoly> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(UniPoly::new(self.coeffs.iter().skip(k).cloned().collect(), self.var))
    }

    /// Drops all terms of degree greater than `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> UniPoly {
        UniPoly::new(self.coeffs.iter().take(max_degree + 1).cloned().collect(), self.var)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// True if `var^n * p(1/var) == p` with `n` the given reflection degree.
    pub fn is_palindromic(&self, n: usize) -> bool {
        if self.coeffs.len() > n + 1 {
            return false;
        }
        (0..=n).all(|k| self.coeff(k) == self.coeff(n - k))
    }

    pub fn with_var(&self, var: Var) -> UniPoly {
        UniPoly { coeffs: self.coeffs.clone(), var }
    }

    /// Renders with LaTeX exponents, highest degree first.
    pub fn to_latex(&self) -> String {
        self.render(|v, k| match k {
            0 => String::new(),
            1 => v.to_string(),
            _ => format!("{v}^{{{k}}}"),
        }, |c| {
            if c.is_integer() {
                c.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
            }
        }, "")
    }

    fn render(
        &self,
        power: impl Fn(Var, usize) -> String,
        number: impl Fn(&Rational) -> String,
        times: &str,
    ) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mono = power(self.var, k);
            if mono.is_empty() {
                out.push_str(&number(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&number(&abs));
                out.push_str(times);
                out.push_str(&mono);
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.render(
            |v, k| match k {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{k}"),
            },
            |c| c.to_string(),
            "*",
        );
        f.write_str(&text)
    }
}

// Operator impls panic on a variable mismatch; use `poly_arith` or the
// `try_*` methods where the tags are not known to agree.
impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.try_add(rhs).expect("polynomial variable mismatch")
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.try_sub(rhs).expect("polynomial variable mismatch")
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.try_mul(rhs).expect("polynomial variable mismatch")
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect(), var: self.var }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c, Var::S)
    }

    #[test]
    fn square_of_linear() {
        let p = s(&[2, 1]);
        assert_eq!(poly_arith(&p, &p, PolyOp::Mul).unwrap(), s(&[4, 4, 1]));
    }

    #[test]
    fn zero_absorbs() {
        let p = s(&[3, -1, 7]);
        let z = UniPoly::zero(Var::S);
        assert!(poly_arith(&p, &z, PolyOp::Mul).unwrap().is_zero());
        assert_eq!(z.degree(), Degree::MinusInfinity);
        assert!(Degree::MinusInfinity < Degree::Finite(0));
    }

    #[test]
    fn hand_expanded_coefficients() {
        let u = s(&[0, 5, 2, 1]);
        assert_eq!((&u * &u).coeff(4), rat(14));
        assert_eq!(u.pow(3).coeff(4), rat(150));
        let h = s(&[24, 5, 2, 1]);
        assert_eq!(h.pow(0), s(&[1]));
        assert_eq!(h.pow(2), s(&[576, 240, 121, 68, 14, 4, 1]));
        assert_eq!(h.pow(4).coeff(4), rat(63409));
    }

    #[test]
    fn mismatched_variables_are_rejected() {
        let a = s(&[1, 1]);
        let b = UniPoly::from_ints(&[1, 1], Var::T);
        assert_eq!(
            poly_arith(&a, &b, PolyOp::Add),
            Err(AlgebraError::VariableMismatch { left: Var::S, right: Var::T })
        );
    }

    #[test]
    fn normalization_and_degree() {
        let p = UniPoly::from_ints(&[1, 2, 0, 0], Var::T);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(p.degree(), Degree::Finite(1));
        assert!((&p - &p).is_zero());
        assert_eq!(p.shift_up(2).shift_down(2), Some(p.clone()));
        assert_eq!(p.shift_down(1), None);
    }

    #[test]
    fn rendering() {
        let p = UniPoly::from_ints(&[0, 72, -864, 10368], Var::T);
        assert_eq!(p.to_string(), "10368*t^3 - 864*t^2 + 72*t");
        assert_eq!(p.to_latex(), "10368t^{3} - 864t^{2} + 72t");
        let q = UniPoly::new(vec![rat(-1), Rational::new(1.into(), 6.into())], Var::S);
        assert_eq!(q.to_string(), "1/6*s - 1");
        assert_eq!(q.to_latex(), "\\frac{1}{6}s - 1");
        assert_eq!(UniPoly::zero(Var::S).to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| s(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn pow_adds_exponents(a in arb_poly(), m in 0u32..4, n in 0u32..4) {
            prop_assert_eq!(&a.pow(m) * &a.pow(n), a.pow(m + n));
        }
    }
}
