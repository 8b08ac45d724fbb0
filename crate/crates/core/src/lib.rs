//! DP-colouring of plane graphs without cycles of length 4, 7 and 9.
//!
//! The crate works on combinatorial embeddings ([`PlaneGraph`]) and their
//! permutation labellings ([`LabelledGraph`]). On top of that it provides
//! exhaustive DP-colouring solvers, detectors for the reducible
//! configurations (claws, biclaws, special subgraphs, strings, light and bad
//! faces), the graph surgeries used to reduce them, and an exact-rational
//! discharging ledger with inequality audits.

pub mod cli;
pub mod coloring;
pub mod cycles;
pub mod discharging;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod labelling;
pub mod perm;
pub mod plane_graph;
pub mod structure;
pub mod surgery;

pub use coloring::{solve, Coloring, SolveResult, SolveStatus};
pub use cycles::Cycle;
pub use discharging::{Charge, ChargeLedger};
pub use labelling::LabelledGraph;
pub use perm::Perm;
pub use plane_graph::{classify, GraphClassReport, PlaneGraph};
