use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize};

use super::{Composition, PartitionError};
use crate::RationalFunctionQ;

/// Integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Panics unless `parts` is weakly decreasing.
    pub fn from_parts<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        Self::new(parts.into_iter().collect()).expect("weakly decreasing parts")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(k, 1^(n-k))`
    pub fn hook(n: u32, k: u32) -> Self {
        assert!(1 <= k && k <= n);
        let mut parts = vec![k];
        parts.extend(std::iter::repeat(1).take((n - k) as usize));
        Partition(parts)
    }

    /// `(1^n)`
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// Drops the first part.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    pub fn is_column(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// `n(λ) = Σ (i-1) λ_i`
    pub fn n_stat(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                out.push(row - j as u32 + conj.0[j] - i as u32 - 1);
            }
        }
        out
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = Π i^{m_i} m_i!`
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (part, mult) in self.multiplicities() {
            for k in 1..=mult {
                acc *= BigInt::from(part) * BigInt::from(k);
            }
        }
        acc
    }

    /// `z_λ(t) = z_λ Π (1 - t^{λ_i})^{-1}`
    pub fn z_deformed(&self, t: &RationalFunctionQ) -> RationalFunctionQ {
        let mut denom = RationalFunctionQ::one();
        for &p in &self.0 {
            let tp = t.pow(p as i32).expect("nonnegative power");
            denom = &denom * &(&RationalFunctionQ::one() - &tp);
        }
        let z = RationalFunctionQ::constant(crate::Rational::from_integer(self.z()));
        z.checked_div(&denom).expect("z_λ(t) needs t^k != 1")
    }

    /// `λ + δ + (1^l)` with `δ = (l-1, ..., 1, 0)`.
    pub fn underline(&self) -> Composition {
        let l = self.0.len();
        Composition::new(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &p)| p as i64 + (l - i) as i64)
                .collect(),
        )
    }

    /// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `2,1`, `(2,1)` or `[2,1]`; an empty string is the empty partition.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| PartitionError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if parts.contains(&0) && parts.last() != Some(&0) {
            return Err(PartitionError::Parse(s.to_string()));
        }
        Partition::new(parts)
    }
}
