pub mod bases;
pub mod cli;
pub mod criteria;
pub mod error;
pub mod fuzz;
pub mod occgraph;
pub mod parser;
pub mod recognizer;
pub mod semigroups;
pub mod words;

pub use error::{Error, Result};
