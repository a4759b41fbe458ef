use crate::partition::ClassicalKind;
use crate::supports::{GroupFamily, InnerTwist};
use thiserror::Error;

/// Errors raised by partition arithmetic, duality, and enumeration.
///
/// Mathematical *mismatches* found during verification are never errors;
/// they are recorded in reports. Errors mean the input itself is malformed.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbitError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<u32>),

    #[error("dominance compares partitions of equal total, got {0} vs {1}")]
    UnequalTotals(u32, u32),

    #[error("total {total} has the wrong parity for a {kind}-collapse")]
    WrongParity { kind: ClassicalKind, total: u32 },

    #[error("cannot remove a box from the empty partition")]
    EmptyPartition,

    #[error("{partition} is not a valid {kind}-partition for rank {n}")]
    InvalidOrbit {
        kind: ClassicalKind,
        n: u32,
        partition: String,
    },

    #[error("pi-emptiness is only defined for kinds B, C, D, got {0}")]
    UnsupportedKind(ClassicalKind),

    #[error("no pi-emptiness certificate for {orbit}; refusing to compute d_A at the trivial class")]
    UncertifiedDuality { orbit: String },

    #[error("{family} factor of rank {rank} has no cuspidal unipotent representation")]
    NoCuspidal { family: String, rank: u32 },

    #[error("twist {twist} is not an inner twist of {family} at rank {n}")]
    InvalidTwist {
        family: GroupFamily,
        n: u32,
        twist: InnerTwist,
    },

    #[error("{0} is exceptional; its cuspidal data lives in the embedded table")]
    ExceptionalFamily(GroupFamily),

    #[error("support data is inconsistent: {0}")]
    DataIntegrity(String),
}
