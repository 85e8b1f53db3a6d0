//! Polynomial grammar, the ideal file format, and canonical text and JSON
//! output.

mod file;
mod parse;
mod render;

pub use file::IdealFile;
pub use parse::{parse_monomial, parse_polynomial};
pub use render::{print_canonical, OutputFormat, Render, FORMAT_VERSION};
