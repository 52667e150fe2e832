use crate::exactmath::{int, Rational};
use num::traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("parts must be positive: {0:?}")]
    ZeroPart(Vec<usize>),
}

/// Integer partition with positive, weakly decreasing parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// Drops trailing zeros first.
    pub fn from_weakly_decreasing(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..w)
                .map(|j| self.0.iter().filter(|&&r| r > j).count())
                .collect(),
        )
    }

    /// Hook length of the box in row `r`, column `c` (0-based).
    pub fn hook(&self, r: usize, c: usize) -> usize {
        let arm = self.0[r] - c - 1;
        let leg = self.0.iter().skip(r + 1).filter(|&&x| x > c).count();
        arm + leg + 1
    }

    pub fn hooks(&self) -> Vec<Vec<usize>> {
        (0..self.0.len())
            .map(|r| (0..self.0[r]).map(|c| self.hook(r, c)).collect())
            .collect()
    }

    /// All partitions of `m`, in decreasing lexicographic order.
    pub fn all_of(m: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (1..=rem.min(max)).rev() {
                cur.push(k);
                rec(rem - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of standard tableaux of the shape: m! over the product of hooks.
pub fn specht_dimension(lambda: &Partition) -> u128 {
    let hooks: u128 = lambda
        .hooks()
        .iter()
        .flatten()
        .map(|&h| h as u128)
        .product();
    factorial(lambda.size()) / hooks
}

/// Dimension of the irreducible gl_N module of highest weight `lambda`
/// (weakly decreasing integers), by the Weyl dimension formula.
pub fn weyl_dimension(lambda: &[i64]) -> Rational {
    let n = lambda.len();
    let mut d = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            d *= int(lambda[i] - lambda[j] + (j - i) as i64) / int((j - i) as i64);
        }
    }
    d
}
