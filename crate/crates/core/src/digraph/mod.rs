//! The distance-array digraph and the realization of its walks.

pub mod construct;
pub mod io;
pub mod ops;
pub mod realize;

pub use construct::{generate_digraph, ArcReading, ConstructionDigraph, DigraphConfig, DigraphSummary, TerminalCatalogs};
pub use ops::{apply_o1, apply_o2, apply_o3, apply_o4, apply_o5, apply_o6, apply_o7, OpApplication, Partner};
pub use realize::{build_along_arrays, build_fullerene, sample_walk, BuildReport, BuiltFullerene};
