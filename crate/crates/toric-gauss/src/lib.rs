//! File formats, multi-threaded enumeration and the command-line front end
//! for `toric-gauss-core`.

pub mod cli;
pub mod format;
pub mod parallel;
pub mod reproduce;

pub use format::{parse_graph, AlgebraFile, MonomialStyle, ParseError};
