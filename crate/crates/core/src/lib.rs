//! Colored Jones polynomials of link diagrams through Kauffman bracket skein
//! theory, their tails, and the state-graph combinatorics that control them.

pub mod cjp;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod laurent;
pub mod states;
pub mod tail;
pub mod theta;
pub mod tl;

pub use error::{Error, Result};
