use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize};

use super::{Partition, PartitionError};

/// One primary component of a conjugacy class: an irreducible polynomial of
/// degree `f_deg` with Jordan type `partition`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct ClassEntry {
    pub f_deg: u32,
    #[serde(rename = "parts")]
    pub partition: Partition,
}

/// Cycle type of a conjugacy class of `GL_n(F_q)`, up to relabeling of
/// polynomials of equal degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct ClassType {
    entries: Vec<ClassEntry>,
}

impl ClassType {
    pub fn new(mut entries: Vec<ClassEntry>) -> Result<Self, PartitionError> {
        if entries.iter().any(|e| e.f_deg == 0) {
            return Err(PartitionError::ZeroDegree);
        }
        entries.retain(|e| !e.partition.is_empty());
        entries.sort();
        Ok(ClassType { entries })
    }

    /// The unipotent class of Jordan type `mu`.
    pub fn unipotent(mu: Partition) -> Self {
        Self::new(vec![ClassEntry { f_deg: 1, partition: mu }]).expect("degree one")
    }

    pub fn entries(&self) -> &[ClassEntry] {
        &self.entries
    }

    /// The rank `n`.
    pub fn weight(&self) -> u32 {
        self.entries.iter().map(|e| e.f_deg * e.partition.weight()).sum()
    }

    /// `n(μ̃) = Σ deg(f) n(μ̃(f))`
    pub fn n_stat(&self) -> u64 {
        self.entries
            .iter()
            .map(|e| e.f_deg as u64 * e.partition.n_stat())
            .sum()
    }

    /// Total number of Jordan blocks, `Σ_f l(μ̃(f))`.
    pub fn total_length(&self) -> usize {
        self.entries.iter().map(|e| e.partition.len()).sum()
    }

    /// True when every component is a column, i.e. the class is semisimple.
    pub fn is_semisimple(&self) -> bool {
        self.entries.iter().all(|e| e.partition.is_column())
    }
}

impl<'de> Deserialize<'de> for ClassType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<ClassEntry>::deserialize(deserializer)?;
        ClassType::new(entries).map_err(serde::de::Error::custom)
    }
}

/// Parses `[{"f_deg":1,"parts":[1,1]}, ...]`.
impl FromStr for ClassType {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        serde_json::from_str(s).map_err(|e| PartitionError::Parse(e.to_string()))
    }
}

impl fmt::Display for ClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("{}:{}", e.f_deg, e.partition))
            .collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}
