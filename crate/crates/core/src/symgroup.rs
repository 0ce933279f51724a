//! Partitions and the character theory of the symmetric group.
//!
//! Partitions index both irreducible representations and conjugacy classes
//! (via cycle type). Characters are evaluated with the Murnaghan-Nakayama
//! rule on beta-sets; results are memoized in a process-wide cache.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num::{BigInt, BigUint, One};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymGroupError {
    #[error("partition parts must be positive, got {0:?}")]
    NonPositivePart(Vec<usize>),
    #[error("partition parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("cannot parse partition `{0}`")]
    Parse(String),
    #[error("degree mismatch: representation of degree {alpha} vs cycle type of degree {sigma}")]
    DegreeMismatch { alpha: usize, sigma: usize },
}

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymGroupError> {
        if parts.contains(&0) {
            return Err(SymGroupError::NonPositivePart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymGroupError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Cycle type `(1^n)` of the identity permutation.
    pub fn identity(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `m[i]` is the number of parts equal to `i` (index 0 unused).
    fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().map_or(1, |&p| p + 1)];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Size of the centralizer of a permutation with this cycle type,
    /// `prod_i i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> BigUint {
        self.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .fold(BigUint::one(), |acc, (i, &m)| {
                acc * BigUint::from(i).pow(m as u32) * (1..=m).fold(BigUint::one(), |f, k| f * k)
            })
    }

    fn hook_product(&self) -> BigUint {
        let conj = self.conjugate();
        let mut prod = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j) + (conj.parts[j] - i) - 1;
                prod *= hook;
            }
        }
        prod
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition { parts: (0..cols).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect() }
    }
}

impl FromStr for Partition {
    type Err = SymGroupError;

    /// Comma-separated weakly decreasing positive integers, e.g. `"3,1,1"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| SymGroupError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n` in reverse lexicographic order, e.g.
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of permutations of cycle type `sigma`: `n! / z_sigma`.
pub fn class_size(sigma: &Partition) -> BigUint {
    let n_fact = (1..=sigma.degree()).fold(BigUint::one(), |acc, k| acc * k);
    n_fact / sigma.centralizer_order()
}

/// Dimension of the irreducible representation `alpha` via the hook-length
/// formula.
pub fn dimension(alpha: &Partition) -> BigUint {
    let n_fact = (1..=alpha.degree()).fold(BigUint::one(), |acc, k| acc * k);
    n_fact / alpha.hook_product()
}

type CharKey = (Vec<usize>, Vec<usize>);

fn cache() -> &'static Mutex<HashMap<CharKey, BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<CharKey, BigInt>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn check_degrees(alpha: &Partition, sigma: &Partition) -> Result<(), SymGroupError> {
    if alpha.degree() != sigma.degree() {
        return Err(SymGroupError::DegreeMismatch { alpha: alpha.degree(), sigma: sigma.degree() });
    }
    Ok(())
}

/// Value of the irreducible character `alpha` on the class of cycle type
/// `sigma`, memoized.
pub fn character(alpha: &Partition, sigma: &Partition) -> Result<BigInt, SymGroupError> {
    check_degrees(alpha, sigma)?;
    Ok(mn_rule(&alpha.parts, &sigma.parts, true))
}

/// Same as [`character`] but bypassing the memo table.
pub fn character_uncached(alpha: &Partition, sigma: &Partition) -> Result<BigInt, SymGroupError> {
    check_degrees(alpha, sigma)?;
    Ok(mn_rule(&alpha.parts, &sigma.parts, false))
}

fn mn_rule(alpha: &[usize], sigma: &[usize], memo: bool) -> BigInt {
    let Some((&k, rest)) = sigma.split_first() else {
        return BigInt::one();
    };
    let key = (alpha.to_vec(), sigma.to_vec());
    if memo {
        if let Some(v) = cache().lock().unwrap().get(&key) {
            return v.clone();
        }
    }
    // Beta-set: first-column hook lengths. Removing a border strip of size
    // k moves one bead from b to b - k; the sign counts beads jumped over.
    let len = alpha.len();
    let beta: Vec<usize> = alpha.iter().enumerate().map(|(i, &a)| a + len - 1 - i).collect();
    let mut total = BigInt::from(0);
    for &b in &beta {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let mut moved: Vec<usize> = beta.iter().map(|&c| if c == b { b - k } else { c }).collect();
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let shape: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let value = mn_rule(&shape, rest, memo);
        if jumped % 2 == 0 {
            total += value;
        } else {
            total -= value;
        }
    }
    if memo {
        cache().lock().unwrap().insert(key, total.clone());
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{ToPrimitive, Zero};
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn factorial(n: usize) -> BigUint {
        (1..=n).fold(BigUint::one(), |acc, k| acc * k)
    }

    #[test]
    fn partition_counts_and_order() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(partitions_of(6).len(), 11);
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn validation_and_parsing() {
        assert!(matches!(Partition::new(vec![1, 2]), Err(SymGroupError::NotDecreasing(_))));
        assert!(matches!(Partition::new(vec![2, 0]), Err(SymGroupError::NonPositivePart(_))));
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[2, 1]).to_string(), "(2,1)");
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&Partition::identity(5)), BigUint::one());
        assert_eq!(class_size(&p(&[2, 1])), BigUint::from(3u32));
        assert_eq!(class_size(&p(&[2, 2])), BigUint::from(3u32));
        assert_eq!(class_size(&p(&[4])), BigUint::from(6u32));
    }

    #[test]
    fn small_characters() {
        for sigma in partitions_of(5) {
            assert_eq!(character(&p(&[5]), &sigma).unwrap(), BigInt::one());
        }
        assert_eq!(character(&p(&[1, 1]), &p(&[2])).unwrap(), BigInt::from(-1));
        assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), BigInt::from(-1));
        assert_eq!(character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), BigInt::zero());
        assert_eq!(
            character(&p(&[2, 1]), &p(&[2])),
            Err(SymGroupError::DegreeMismatch { alpha: 3, sigma: 2 })
        );
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&p(&[4])), BigUint::one());
        assert_eq!(dimension(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(dimension(&p(&[2, 2])), BigUint::from(2u32));
        assert_eq!(dimension(&p(&[3, 2, 1])), BigUint::from(16u32));
    }

    #[test]
    fn character_identities_up_to_seven() {
        for n in 1..=7 {
            let parts = partitions_of(n);
            let n_fact = BigInt::from(factorial(n));
            let sizes: BigUint = parts.iter().map(class_size).sum();
            assert_eq!(sizes, factorial(n));
            let dims: BigUint = parts.iter().map(|a| dimension(a).pow(2)).sum();
            assert_eq!(dims, factorial(n));
            for alpha in &parts {
                assert_eq!(
                    character(alpha, &Partition::identity(n)).unwrap(),
                    BigInt::from(dimension(alpha))
                );
                for beta in &parts {
                    let inner: BigInt = parts
                        .iter()
                        .map(|s| {
                            BigInt::from(class_size(s))
                                * character(alpha, s).unwrap()
                                * character(beta, s).unwrap()
                        })
                        .sum();
                    let expected = if alpha == beta { n_fact.clone() } else { BigInt::zero() };
                    assert_eq!(inner, expected, "n={n} alpha={alpha} beta={beta}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn cache_is_transparent(n in 1usize..9, i in 0usize..30, j in 0usize..30) {
            let parts = partitions_of(n);
            let alpha = &parts[i % parts.len()];
            let sigma = &parts[j % parts.len()];
            prop_assert_eq!(character(alpha, sigma).unwrap(), character_uncached(alpha, sigma).unwrap());
        }

        #[test]
        fn sign_twist(n in 1usize..8, i in 0usize..20, j in 0usize..20) {
            // chi_{alpha'} = sign * chi_alpha
            let parts = partitions_of(n);
            let alpha = &parts[i % parts.len()];
            let sigma = &parts[j % parts.len()];
            let sign = if (n - sigma.len()) % 2 == 0 { 1 } else { -1 };
            let lhs = character(&alpha.conjugate(), sigma).unwrap();
            let rhs: BigInt = character(alpha, sigma).unwrap() * BigInt::from(sign);
            prop_assert_eq!(lhs.to_i64(), rhs.to_i64());
        }
    }
}
