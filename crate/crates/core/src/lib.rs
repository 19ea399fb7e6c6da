//! Transformation of ontologies into conceptual models.

pub mod bww;
pub mod cli;
pub mod cot;
pub mod daml;
pub mod emit;
pub mod error;
pub mod model;
pub mod ontology;
pub mod pipeline;
pub mod transform;
