//! Murnaghan–Nakayama recursion for unipotent character values, with a
//! shared memo table, and the closed-form evaluators used to check it.

mod closed;

pub use closed::{
    c_alpha, c_alpha_series, corollary_rows_value, degree, single_column_value,
    single_row_value, steinberg_value,
};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::RwLock;

use thiserror::Error;

use crate::partitions::{enumerate_single_rows, orbit_count, Straightened};
use crate::{ColoredPattern, Composition, Partition, QFieldError, RationalFunctionQ};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MnError {
    #[error("weight mismatch: label has weight {label}, class has size {class}")]
    WeightMismatch { label: u32, class: u32 },
    #[error("{0} is out of range")]
    OutOfRange(String),
    #[error("bad memo key {0:?}")]
    BadKey(String),
    #[error(transparent)]
    Field(#[from] QFieldError),
}

/// Memo table key: a canonical pattern and a unipotent class.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MemoKey {
    pub pattern: ColoredPattern,
    pub mu: Partition,
}

impl MemoKey {
    pub fn new(pattern: ColoredPattern, mu: Partition) -> Self {
        MemoKey { pattern, mu }
    }
}

/// `"<pattern key>|<parts joined by '.'>"`, e.g. `1:1;1:1|1.1`.
impl fmt::Display for MemoKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mu.parts().iter().map(u32::to_string).collect();
        write!(f, "{}|{}", self.pattern.canonical_key(), parts.join("."))
    }
}

impl FromStr for MemoKey {
    type Err = MnError;

    fn from_str(s: &str) -> Result<Self, MnError> {
        let bad = || MnError::BadKey(s.to_string());
        let (pat, mu) = s.split_once('|').ok_or_else(bad)?;
        let pattern = ColoredPattern::parse_key(pat).map_err(|_| bad())?;
        let parts = if mu.is_empty() {
            Vec::new()
        } else {
            mu.split('.')
                .map(|x| x.parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?
        };
        let mu = Partition::new(parts).map_err(|_| bad())?;
        if mu.parts().windows(2).any(|w| w[0] < w[1]) || pattern.weight() != mu.weight() {
            return Err(bad());
        }
        Ok(MemoKey { pattern, mu })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EngineStats {
    pub calls: u64,
    pub hits: u64,
    pub entries: usize,
}

/// The recursion engine. Cheap to share across threads; concurrent
/// evaluation of the same key writes the same value twice at worst.
#[derive(Default)]
pub struct Engine {
    memo: RwLock<HashMap<MemoKey, RationalFunctionQ>>,
    calls: AtomicU64,
    hits: AtomicU64,
}

/// `B(q^d; i)`: `-1` for `i = 1`, `q^{-d} - 1` otherwise.
pub fn b_factor(degree: u32, part: u32) -> RationalFunctionQ {
    if part == 1 {
        -RationalFunctionQ::one()
    } else {
        &RationalFunctionQ::q_pow(-(degree as i64)) - &RationalFunctionQ::one()
    }
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn stats(&self) -> EngineStats {
        EngineStats {
            calls: self.calls.load(Ordering::Relaxed),
            hits: self.hits.load(Ordering::Relaxed),
            entries: self.memo.read().unwrap().len(),
        }
    }

    /// Memo contents, sorted by key string for stable output.
    pub fn snapshot(&self) -> Vec<(MemoKey, RationalFunctionQ)> {
        let mut out: Vec<_> = self
            .memo
            .read()
            .unwrap()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        out.sort_by_cached_key(|(k, _)| k.to_string());
        out
    }

    pub fn preload<I: IntoIterator<Item = (MemoKey, RationalFunctionQ)>>(&self, items: I) {
        let mut memo = self.memo.write().unwrap();
        memo.extend(items);
    }

    /// `χ^{λ̃}` at the unipotent class of Jordan type `μ`.
    pub fn char_value(
        &self,
        label: &ColoredPattern,
        mu: &Partition,
    ) -> Result<RationalFunctionQ, MnError> {
        if label.weight() != mu.weight() {
            return Err(MnError::WeightMismatch {
                label: label.weight(),
                class: mu.weight(),
            });
        }
        Ok(self.value(label, mu))
    }

    fn value(&self, pattern: &ColoredPattern, mu: &Partition) -> RationalFunctionQ {
        self.calls.fetch_add(1, Ordering::Relaxed);
        if mu.is_empty() {
            return if pattern.is_empty() {
                RationalFunctionQ::one()
            } else {
                RationalFunctionQ::zero()
            };
        }
        let key = MemoKey::new(pattern.clone(), mu.clone());
        if let Some(v) = self.memo.read().unwrap().get(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return v.clone();
        }
        let rest = mu.tail();
        let sum = self.one_step(pattern, mu.first().unwrap(), |p| self.value(p, &rest));
        let value = &sum * &prefactor(mu);
        self.memo.write().unwrap().insert(key, value.clone());
        value
    }

    /// One step at the hook `(k, 1^{n-k})`, finishing with the degree of each
    /// reduced pattern instead of recursing.
    pub fn hook_value(&self, label: &ColoredPattern, k: u32) -> Result<RationalFunctionQ, MnError> {
        let n = label.weight();
        if k == 0 || k > n {
            return Err(MnError::OutOfRange(format!("hook arm {k} for n = {n}")));
        }
        let mut parts = vec![k];
        parts.extend(std::iter::repeat(1).take((n - k) as usize));
        let mu = Partition::from_parts(parts);
        let sum = self.one_step(label, k, degree);
        Ok(&sum * &prefactor(&mu))
    }

    /// `Σ_τ̃ B(q;τ̃) Σ_ρ̃ mult · sign · inner(ρ̃')`, removing a first part `mu1`.
    fn one_step<F>(&self, pattern: &ColoredPattern, mu1: u32, inner: F) -> RationalFunctionQ
    where
        F: Fn(&ColoredPattern) -> RationalFunctionQ,
    {
        let entries = pattern.entries();
        let mut rows_by_weight = HashMap::new();
        let mut acc = RationalFunctionQ::zero();
        for tau in pattern.enumerate_tau() {
            let norm: u32 = entries
                .iter()
                .zip(&tau)
                .map(|(e, t)| e.degree * t.iter().sum::<u32>())
                .sum();
            if norm < mu1 {
                continue;
            }
            let mut b = RationalFunctionQ::one();
            for (e, t) in entries.iter().zip(&tau) {
                for &part in t {
                    b = &b * &b_factor(e.degree, part);
                }
            }
            let w = norm - mu1;
            let rows = rows_by_weight.entry(w).or_insert_with(|| {
                enumerate_single_rows(w, pattern, |d| orbit_count(d).expect("positive degree"))
            });
            for (placement, mult) in rows.iter() {
                let mut raw = Vec::with_capacity(entries.len() + placement.anonymous.len());
                for ((e, t), row) in entries.iter().zip(&tau).zip(&placement.named) {
                    let mut seq = Composition::new(
                        e.partition
                            .parts()
                            .iter()
                            .zip(t)
                            .map(|(&l, &t)| l as i64 - t as i64)
                            .collect(),
                    );
                    if let Some(r) = row {
                        seq.push(*r as i64);
                    }
                    raw.push((e.degree, seq));
                }
                for &(d, r) in &placement.anonymous {
                    raw.push((d, Composition::new(vec![r as i64])));
                }
                if let Straightened::Signed { sign, value } = ColoredPattern::straighten_entries(raw)
                {
                    let v = inner(&value);
                    if v.is_zero() {
                        continue;
                    }
                    let term = &(&b * mult) * &v;
                    acc = if sign > 0 { &acc + &term } else { &acc - &term };
                }
            }
        }
        acc
    }
}

/// `(-1)^{μ_1} q^{|μ|}`
fn prefactor(mu: &Partition) -> RationalFunctionQ {
    let p = RationalFunctionQ::q_pow(mu.weight() as i64);
    if mu.first().unwrap_or(0) % 2 == 1 {
        -p
    } else {
        p
    }
}
