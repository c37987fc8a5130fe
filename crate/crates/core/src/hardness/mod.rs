//! Hardness of feedback vertex set on `S_{2,2,2,2}`-subgraph-free graphs of
//! maximum degree 4, by reduction from 2P1N-3SAT.

pub mod cnf;
pub mod gadget;
pub mod reduce;
pub mod verify;

pub use cnf::{parse_cnf, CnfFormula};
pub use gadget::{build_variable_gadget, gadget_checklist, ChecklistItem, VariableGadget};
pub use reduce::{reduce, LiteralSlot, Occurrence, ReductionOutput};
pub use verify::{verify_reduction, ReductionReport};
