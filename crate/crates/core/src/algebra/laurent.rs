use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{Signed, Zero};

use super::{rat, Rational};

/// Symmetric Laurent polynomial `a_0 + sum_{n>0} a_n (x^n + x^-n)`.
///
/// Only the non-negative half is stored, so `coeffs[n]` is both the
/// coefficient of `x^n` and of `x^-n`. Trailing zeros are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SymLaurent {
    coeffs: Vec<Rational>,
}

impl SymLaurent {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut l = SymLaurent { coeffs };
        while l.coeffs.last().is_some_and(Zero::is_zero) {
            l.coeffs.pop();
        }
        l
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        SymLaurent::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x^n + x^-n` for `n > 0`, or `1` for `n == 0`.
    pub fn basis(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = rat(1);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest `n` with a nonzero coefficient; `None` for the zero element.
    pub fn breadth(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at `x = 1`.
    pub fn eval_at_one(&self) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (n, a)| if n == 0 { acc + a } else { acc + a * rat(2) })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes `x -> x^k`.
    pub fn adams(&self, k: usize) -> Self {
        assert!(k >= 1, "Adams operation index must be positive");
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k * (self.coeffs.len() - 1) + 1];
        for (n, a) in self.coeffs.iter().enumerate() {
            coeffs[n * k] = a.clone();
        }
        Self::new(coeffs)
    }
}

impl Add for &SymLaurent {
    type Output = SymLaurent;
    fn add(self, rhs: &SymLaurent) -> SymLaurent {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        SymLaurent::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &SymLaurent {
    type Output = SymLaurent;
    fn sub(self, rhs: &SymLaurent) -> SymLaurent {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        SymLaurent::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &SymLaurent {
    type Output = SymLaurent;
    fn neg(self) -> SymLaurent {
        SymLaurent { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &SymLaurent {
    type Output = SymLaurent;
    fn mul(self, rhs: &SymLaurent) -> SymLaurent {
        if self.is_zero() || rhs.is_zero() {
            return SymLaurent::zero();
        }
        let (p, q) = (self.coeffs.len() as i64 - 1, rhs.coeffs.len() as i64 - 1);
        let mut out = vec![Rational::zero(); (p + q + 1) as usize];
        // Full two-sided convolution, keeping only the non-negative exponents.
        for i in -p..=p {
            let a = &self.coeffs[i.unsigned_abs() as usize];
            if a.is_zero() {
                continue;
            }
            for j in -q..=q {
                let k = i + j;
                if k >= 0 {
                    out[k as usize] += a * &rhs.coeffs[j.unsigned_abs() as usize];
                }
            }
        }
        SymLaurent::new(out)
    }
}

impl fmt::Display for SymLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (n, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if first {
                if a.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if a.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let abs = a.abs();
            match n {
                0 => write!(f, "{abs}")?,
                1 => write!(f, "{abs}*(x + x^-1)")?,
                _ => write!(f, "{abs}*(x^{n} + x^-{n})")?,
            }
        }
        Ok(())
    }
}
