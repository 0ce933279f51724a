use num::{BigInt, BigUint, One, Zero};

use crate::algebra::{factorial, Rational, SymLaurent};
use crate::sheaf::{DiagonalClass, SheafDescriptor};
use crate::special::iota_inv;
use crate::symgroup::{character, class_size, dimension, partitions_of, Partition};

use super::EngineError;

/// `c_P(sigma)` split into its star and bullet parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceValues {
    pub star: Rational,
    pub bullet: Rational,
    pub total: Rational,
}

/// Trace of a permutation of cycle type `sigma` on the generic stalk of
/// the `n`-fold convolution power, `n = |sigma|`.
pub fn trace_values(d: &SheafDescriptor, sigma: &Partition) -> Result<TraceValues, EngineError> {
    if sigma.is_empty() {
        return Err(EngineError::EmptyPartition);
    }
    let star = sigma
        .parts()
        .iter()
        .fold(DiagonalClass::one(d.g), |acc, &k| acc.mul(&d.gamma.adams(k)))
        .top_eval();
    let bullet = d.spectrum.iter().fold(Rational::zero(), |acc, e| {
        let b = e.betti();
        let prod = sigma
            .parts()
            .iter()
            .fold(SymLaurent::constant(Rational::one()), |p, &k| &p * &b.adams(k));
        acc + iota_inv(&prod).coeff(d.g)
    });
    let total = &star - &bullet;
    Ok(TraceValues { star, bullet, total })
}

fn project(
    alpha: &Partition,
    traces: &[(Partition, BigUint, Rational)],
    n_factorial: &BigInt,
) -> Result<BigInt, EngineError> {
    let mut sum = Rational::zero();
    for (sigma, size, c) in traces {
        let chi = character(alpha, sigma)?;
        sum += Rational::from_integer(BigInt::from(size.clone()) * chi) * c;
    }
    let value = sum / Rational::from_integer(n_factorial.clone());
    if !value.is_integer() {
        return Err(EngineError::NonIntegral { what: format!("Schur rank for {alpha}"), value });
    }
    Ok(value.to_integer())
}

fn class_traces(d: &SheafDescriptor, n: usize) -> Result<Vec<(Partition, BigUint, Rational)>, EngineError> {
    partitions_of(n)
        .into_iter()
        .map(|sigma| {
            let c = trace_values(d, &sigma)?.total;
            let size = class_size(&sigma);
            Ok((sigma, size, c))
        })
        .collect()
}

/// Generic rank of the Schur functor `S_alpha` applied to the sheaf:
/// `(1/n!) sum_sigma |C_sigma| chi_alpha(sigma) c(sigma)`.
pub fn schur_rank(d: &SheafDescriptor, alpha: &Partition) -> Result<BigInt, EngineError> {
    if alpha.is_empty() {
        return Err(EngineError::EmptyPartition);
    }
    let n = alpha.degree();
    project(alpha, &class_traces(d, n)?, &factorial(n as u64))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurRow {
    pub alpha: Partition,
    pub dim: BigUint,
    pub rank: BigInt,
}

/// Schur ranks for every partition of `n`, in reverse lexicographic order.
pub fn schur_table(d: &SheafDescriptor, n: usize) -> Result<Vec<SchurRow>, EngineError> {
    if n == 0 {
        return Err(EngineError::EmptyPartition);
    }
    let traces = class_traces(d, n)?;
    let n_factorial = factorial(n as u64);
    partitions_of(n)
        .into_iter()
        .map(|alpha| {
            let rank = project(&alpha, &traces, &n_factorial)?;
            Ok(SchurRow { dim: dimension(&alpha), alpha, rank })
        })
        .collect()
}
