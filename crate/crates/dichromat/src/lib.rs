//! Exact evaluation of dichromatic invariants of surface/4-dimensional
//! handlebody pairs presented by framed-link diagrams with dotted
//! components and banded unlinks.
//!
//! Diagrams are written in a line-oriented sliced text format, colored by
//! the pointed ribbon categories of Z/N-graded vector spaces, and evaluated
//! to exact elements of the cyclotomic field Q(zeta_N). See the `book/`
//! guide at the repository root for a narrative introduction; its code
//! snippets are compiled as doc-tests through the [`guide`] module.

pub mod algebra;
pub mod category;
pub mod diagram;
pub mod engine;
pub mod invariant;
pub mod fixtures;

pub use algebra::{CycloNumber, InertiaTriple};
pub use category::{CategoryParams, GradedMap, GradedObject};
pub use diagram::Diagram;
pub use engine::EvalContext;
