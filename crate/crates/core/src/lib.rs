//! Completely independent spanning trees for graphs meeting the Fan-type
//! degree condition μ₂(G) ≥ n.

pub mod cist;
pub mod cli;
pub mod constructor;
pub mod error;
pub mod graph;
pub mod oracle;

pub use error::{Error, Result};
