//! File formats, the corpus harness and shared plumbing for the `koszul-lab`
//! command-line tool.

pub mod corpus;
pub mod error;
pub mod graph6;
pub mod input;

pub use error::LabError;
