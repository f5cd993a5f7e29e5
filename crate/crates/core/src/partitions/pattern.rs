use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize};

use super::counting::{factorial, falling_factorial, orbit_count};
use super::{Partition, PartitionError, Straightened};
use crate::{Composition, Rational, RationalFunctionQ};

/// One colored part of a label: an orbit of size `degree` carrying `partition`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternEntry {
    #[serde(rename = "d")]
    pub degree: u32,
    #[serde(rename = "parts")]
    pub partition: Partition,
}

impl PatternEntry {
    pub fn new(degree: u32, partition: Partition) -> Self {
        PatternEntry { degree, partition }
    }

    pub fn weight(&self) -> u32 {
        self.degree * self.partition.weight()
    }
}

/// Degree ascending, then larger partitions (lexicographically) first.
impl Ord for PatternEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.partition.cmp(&self.partition))
    }
}

impl PartialOrd for PatternEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PatternEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.degree, self.partition)
    }
}

/// A character label up to relabeling of orbits of equal size: a multiset of
/// `(orbit size, partition)` pairs.
///
/// Entries are kept sorted and entries with empty partitions are dropped, so
/// equal labels compare and hash equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct ColoredPattern {
    entries: Vec<PatternEntry>,
}

impl ColoredPattern {
    pub fn new(entries: Vec<PatternEntry>) -> Result<Self, PartitionError> {
        if entries.iter().any(|e| e.degree == 0) {
            return Err(PartitionError::ZeroDegree);
        }
        Ok(Self::canonical(entries))
    }

    fn canonical(mut entries: Vec<PatternEntry>) -> Self {
        entries.retain(|e| !e.partition.is_empty());
        entries.sort();
        ColoredPattern { entries }
    }

    /// Panics on a zero degree.
    pub fn from_pairs<I: IntoIterator<Item = (u32, Partition)>>(pairs: I) -> Self {
        Self::new(
            pairs
                .into_iter()
                .map(|(d, p)| PatternEntry::new(d, p))
                .collect(),
        )
        .expect("positive degrees")
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[PatternEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// `‖λ̃‖ = Σ d |λ|`
    pub fn weight(&self) -> u32 {
        self.entries.iter().map(PatternEntry::weight).sum()
    }

    /// `n(λ̃) = Σ d n(λ)`
    pub fn n_stat(&self) -> u64 {
        self.entries
            .iter()
            .map(|e| e.degree as u64 * e.partition.n_stat())
            .sum()
    }

    /// `Z = Π z_λ` over entries.
    pub fn z_norm(&self) -> BigInt {
        self.entries
            .iter()
            .fold(BigInt::one(), |acc, e| acc * e.partition.z())
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.degree).collect()
    }

    /// Compact form such as `1:2.1;2:1`; used in memo keys and cache files.
    pub fn canonical_key(&self) -> String {
        self.entries
            .iter()
            .map(|e| {
                let parts: Vec<String> = e.partition.parts().iter().map(u32::to_string).collect();
                format!("{}:{}", e.degree, parts.join("."))
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn parse_key(key: &str) -> Result<Self, PartitionError> {
        if key.is_empty() {
            return Ok(Self::empty());
        }
        let bad = || PartitionError::Parse(key.to_string());
        let mut entries = Vec::new();
        for item in key.split(';') {
            let (d, parts) = item.split_once(':').ok_or_else(bad)?;
            let degree: u32 = d.parse().map_err(|_| bad())?;
            let parts = parts
                .split('.')
                .map(|x| x.parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            entries.push(PatternEntry::new(degree, Partition::new(parts)?));
        }
        let pattern = Self::new(entries)?;
        if pattern.canonical_key() != key {
            return Err(bad());
        }
        Ok(pattern)
    }

    /// All `τ̃` with `1 <= τ_i <= underline(λ)_i` for each entry.
    pub fn enumerate_tau(&self) -> TauIter {
        let bounds: Vec<Vec<u32>> = self
            .entries
            .iter()
            .map(|e| e.partition.underline().parts().iter().map(|&b| b as u32).collect())
            .collect();
        let current = bounds.iter().map(|b| vec![1; b.len()]).collect();
        TauIter {
            bounds,
            current: Some(current),
        }
    }

    /// Number of actual labels realizing this pattern, as a polynomial in `q`:
    /// per degree `d`, `N_d (N_d - 1) ... / Π (repeat counts)!`.
    pub fn multiplicity(&self) -> RationalFunctionQ {
        let mut by_degree: BTreeMap<u32, Vec<&Partition>> = BTreeMap::new();
        for e in &self.entries {
            by_degree.entry(e.degree).or_default().push(&e.partition);
        }
        let mut acc = RationalFunctionQ::one();
        for (d, parts) in by_degree {
            let n_d = orbit_count(d).expect("positive degree");
            acc = &acc * &falling_factorial(&n_d, parts.len() as u32);
            for run in repeat_runs(&parts) {
                acc = acc.scale(&Rational::new(1.into(), factorial(run).into()));
            }
        }
        acc
    }

    /// Straightens each raw per-entry index sequence and assembles the
    /// resulting pattern with the product of signs.
    pub fn straighten_entries<I>(raw: I) -> SignedColoredPattern
    where
        I: IntoIterator<Item = (u32, Composition)>,
    {
        let mut sign = 1i8;
        let mut entries = Vec::new();
        for (degree, seq) in raw {
            match seq.straighten() {
                Straightened::Zero => return Straightened::Zero,
                Straightened::Signed { sign: s, value } => {
                    sign *= s;
                    entries.push(PatternEntry::new(degree, value));
                }
            }
        }
        Straightened::Signed {
            sign,
            value: Self::canonical(entries),
        }
    }
}

fn repeat_runs<T: PartialEq>(xs: &[T]) -> Vec<u32> {
    let mut runs = Vec::new();
    let mut i = 0;
    while i < xs.len() {
        let mut j = i + 1;
        while j < xs.len() && xs[j] == xs[i] {
            j += 1;
        }
        runs.push((j - i) as u32);
        i = j;
    }
    runs
}

pub type SignedColoredPattern = Straightened<ColoredPattern>;

impl<'de> Deserialize<'de> for ColoredPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<PatternEntry>::deserialize(deserializer)?;
        ColoredPattern::new(entries).map_err(serde::de::Error::custom)
    }
}

/// Parses the JSON label form `[{"d":1,"parts":[2,1]}, ...]`.
impl FromStr for ColoredPattern {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        serde_json::from_str(s).map_err(|e| PartitionError::Parse(e.to_string()))
    }
}

impl fmt::Display for ColoredPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e:?}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ColoredPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Odometer over the cartesian product of per-entry `τ` ranges.
pub struct TauIter {
    bounds: Vec<Vec<u32>>,
    current: Option<Vec<Vec<u32>>>,
}

impl Iterator for TauIter {
    type Item = Vec<Vec<u32>>;

    fn next(&mut self) -> Option<Self::Item> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut advanced = false;
        'outer: for (e, bound) in self.bounds.iter().enumerate().rev() {
            for i in (0..bound.len()).rev() {
                if cur[e][i] < bound[i] {
                    cur[e][i] += 1;
                    advanced = true;
                    break 'outer;
                }
                cur[e][i] = 1;
            }
        }
        if !advanced {
            self.current = None;
        }
        Some(out)
    }
}

/// All patterns of weight `n` whose degrees are at most `max_degree`, each once,
/// in increasing canonical order.
pub fn enumerate_patterns(n: u32, max_degree: u32) -> Vec<ColoredPattern> {
    let mut parts: Vec<PatternEntry> = Vec::new();
    for d in 1..=max_degree.min(n.max(1)) {
        for k in 1..=n / d {
            parts.extend(Partition::all(k).into_iter().map(|p| PatternEntry::new(d, p)));
        }
    }
    parts.sort();

    fn go(
        parts: &[PatternEntry],
        start: usize,
        rest: u32,
        cur: &mut Vec<PatternEntry>,
        out: &mut Vec<ColoredPattern>,
    ) {
        if rest == 0 {
            out.push(ColoredPattern::canonical(cur.clone()));
            return;
        }
        for i in start..parts.len() {
            let w = parts[i].weight();
            if w <= rest {
                cur.push(parts[i].clone());
                go(parts, i, rest - w, cur, out);
                cur.pop();
            }
        }
    }

    let mut out = Vec::new();
    go(&parts, 0, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// A way of placing single rows of total weight `w`: optionally one row on
/// each named support entry, plus rows on fresh orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingleRowPlacement {
    /// Row length per support entry, `None` when nothing is placed.
    pub named: Vec<Option<u32>>,
    /// `(degree, row)` pairs on orbits outside the support, sorted.
    pub anonymous: Vec<(u32, u32)>,
}

/// Enumerates [`SingleRowPlacement`]s with their multiplicities.
///
/// Fresh orbits of degree `d` are drawn from the `N_d - s_d` orbits not named
/// in the support; `k` rows on them with repetition profile `r_j` count
/// `(N_d - s_d)_k / Π r_j!` times.
pub fn enumerate_single_rows<F>(
    w: u32,
    support: &ColoredPattern,
    orbit_counts: F,
) -> Vec<(SingleRowPlacement, RationalFunctionQ)>
where
    F: Fn(u32) -> RationalFunctionQ,
{
    let degrees = support.degrees();
    let mut out = Vec::new();
    let mut named = vec![None; degrees.len()];
    place_named(&degrees, 0, w, &mut named, &mut |named, rest| {
        for anonymous in anonymous_rows(rest) {
            let mult = anonymous_multiplicity(&anonymous, &degrees, &orbit_counts);
            if !mult.is_zero() {
                out.push((
                    SingleRowPlacement {
                        named: named.to_vec(),
                        anonymous,
                    },
                    mult,
                ));
            }
        }
    });
    out
}

fn place_named(
    degrees: &[u32],
    idx: usize,
    rest: u32,
    named: &mut Vec<Option<u32>>,
    emit: &mut dyn FnMut(&[Option<u32>], u32),
) {
    if idx == degrees.len() {
        emit(named, rest);
        return;
    }
    named[idx] = None;
    place_named(degrees, idx + 1, rest, named, emit);
    let d = degrees[idx];
    for m in 1..=rest / d {
        named[idx] = Some(m);
        place_named(degrees, idx + 1, rest - m * d, named, emit);
    }
    named[idx] = None;
}

/// Multisets of `(degree, row)` with `Σ degree * row = w`, sorted ascending.
fn anonymous_rows(w: u32) -> Vec<Vec<(u32, u32)>> {
    let mut kinds = Vec::new();
    for d in 1..=w {
        for m in 1..=w / d {
            kinds.push((d, m));
        }
    }
    fn go(
        kinds: &[(u32, u32)],
        start: usize,
        rest: u32,
        cur: &mut Vec<(u32, u32)>,
        out: &mut Vec<Vec<(u32, u32)>>,
    ) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..kinds.len() {
            let (d, m) = kinds[i];
            if d * m <= rest {
                cur.push(kinds[i]);
                go(kinds, i, rest - d * m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&kinds, 0, w, &mut Vec::new(), &mut out);
    out
}

fn anonymous_multiplicity<F>(
    anonymous: &[(u32, u32)],
    support_degrees: &[u32],
    orbit_counts: &F,
) -> RationalFunctionQ
where
    F: Fn(u32) -> RationalFunctionQ,
{
    let mut acc = RationalFunctionQ::one();
    let mut i = 0;
    while i < anonymous.len() {
        let d = anonymous[i].0;
        let mut j = i;
        while j < anonymous.len() && anonymous[j].0 == d {
            j += 1;
        }
        let block = &anonymous[i..j];
        let named = support_degrees.iter().filter(|&&x| x == d).count() as i64;
        let free = &orbit_counts(d) - &RationalFunctionQ::from_i64(named);
        acc = &acc * &falling_factorial(&free, block.len() as u32);
        for run in repeat_runs(block) {
            acc = acc.scale(&Rational::new(1.into(), factorial(run).into()));
        }
        i = j;
    }
    acc
}
