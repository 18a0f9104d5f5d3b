//! Exact tools for free graded connected cocommutative Hopf algebras.
//!
//! Such an algebra is determined up to isomorphism by any one of three
//! integer sequences: its graded dimensions `h`, its generator counts `a`,
//! or the dimensions `p` of its primitive space. This crate converts between
//! them exactly ([`transform`]), decides realizability, surjections and
//! subalgebras from the sequences alone ([`classify`]), and checks those
//! answers against a symbolic model of the free algebra ([`freealg`]).

pub mod classify;
pub mod error;
pub mod freealg;
pub mod linalg;
pub mod lyndon;
pub mod oeis;
pub mod oracle;
pub mod par;
pub mod seq;
pub mod transform;

pub use error::{ClassifyError, FreeAlgError, LyndonError, OeisError, SeqError};
pub use par::Execution;
pub use seq::{Composition, Partition, Sequence};
