//! Exact partition combinatorics for nilpotent orbits of classical groups:
//! duality maps, enumeration of unipotent cuspidal supports, and a
//! verification engine that checks the wavefront-set lift of every support
//! against Achar duality at the trivial class.
//!
//! Everything is exact integer arithmetic on immutable values; all
//! operations are safe for unrestricted parallel use. With the default
//! `parallel` feature, batch verification fans out over rayon; without it,
//! the same API runs sequentially.

pub mod closed_forms;
pub mod duality;
pub mod error;
pub mod exceptional;
pub mod partition;
pub mod supports;
pub mod verify;

pub use duality::{bv_dual, d_a_trivial, pi_is_empty, reduce_marking, MarkedOrbit, PiCertificate};
pub use error::OrbitError;
pub use exceptional::{exceptional_rows, ExceptionalRow};
pub use partition::{ClassicalKind, Partition, TypedOrbit};
pub use supports::{
    enumerate_supports, kawanaka_wf, ComponentKind, GroupFamily, GroupSpec, InnerTwist,
    SupportFamily,
};
pub use verify::{
    lift, verify_all_classical, verify_exceptional, verify_family, verify_range,
    verify_range_seq, AggregateReport, LiftResult, TwistSelection, VerificationReport,
};
