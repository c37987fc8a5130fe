//! Solving by decomposition at bridges, checks of the treedepth bounds, and
//! the complexity classification by forbidden pattern.

pub mod brooks;
pub mod classify;
pub mod decompose;
pub mod solve;
pub mod structure;

pub use brooks::brooks_colouring;
pub use classify::{classify_h, Classification, Complexity, ProblemClass};
pub use decompose::{decompose_ct, ConnectingBridge, Part, PartKind, PartitionedInstance};
pub use solve::{graph_digest, solve, Engine, PieceKind, RouteStep, SolveReport, Validation, Witness};
pub use structure::{check_structure_theorem, BoundCheck, BoundStatus, StructureReport};
