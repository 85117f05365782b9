//! Forcing numbers of fullerene graphs and the distance-array construction
//! of fullerenes with minimum forcing number three.
//!
//! The crate is organised bottom-up:
//!
//! * [`plane`]: rotation systems, faces, cuts, planar code, named fullerenes;
//! * [`matching`]: perfect matchings, forcing and anti-forcing numbers;
//! * [`patch`]: generalized patches with half-edges and distance-arrays;
//! * [`catalog`]: exhaustive derivation of the patch families;
//! * [`digraph`]: operations O1 to O7, the distance-array digraph and
//!   realization of fullerenes along its walks;
//! * [`corpus`]: nanotubes and the other named fullerenes;
//! * [`cli`]: command implementations shared by the binary and examples.

pub mod catalog;
pub mod cli;
pub mod corpus;
pub mod digraph;
pub mod error;
pub mod matching;
pub mod patch;
pub mod plane;

pub use error::{CodecError, GraphError, OpError, SearchError};
pub use plane::{Fullerene, PlaneGraph};
