//! Partitions, colored label patterns, straightening and the enumerations
//! the recursion needs.

mod class_type;
mod composition;
pub mod counting;
mod partition;
mod pattern;

use thiserror::Error;

pub use class_type::{ClassEntry, ClassType};
pub use composition::{Composition, Straightened};
pub use counting::{centralizer_order, group_order, orbit_count};
pub use partition::Partition;
pub use pattern::{
    enumerate_patterns, enumerate_single_rows, ColoredPattern, PatternEntry,
    SignedColoredPattern, SingleRowPlacement, TauIter,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<u32>),
    #[error("orbit and polynomial degrees must be positive")]
    ZeroDegree,
    #[error("cannot parse {0:?}")]
    Parse(String),
}
