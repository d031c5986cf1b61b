//! Exact graph factors on small graphs: f-factors through the Tutte gadget
//! and blossom matching, the all-(g,f)-factors property by deficiency
//! criterion and by enumeration, exact toughness, and the reduction from
//! almost-1-toughness of cubic graphs to all-(g,f)-factors on the
//! triangle lift, with certificates on every verdict.

pub mod degree;
pub mod enumerate;
pub mod error;
pub mod factor;
pub mod graph;
pub mod io;
pub mod matching;
pub mod niessen;
pub mod reduction;
pub mod toughness;
pub mod verify;

pub use degree::{DegreeSet, DegreeSpec, VertexFn};
pub use error::{Error, Result};
pub use graph::{Edge, Factor, Graph, Vertex, VertexSet};
pub use niessen::{AllFactorsVerdict, Counterexample, NiessenWitness};
pub use reduction::{LiftedGraph, ReductionInstance};
pub use toughness::{CutVerdict, Toughness, ToughnessResult};
