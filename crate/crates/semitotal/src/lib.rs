//! File formats, JSON reports and the `semitotal` command-line tool, built on
//! the `no_std` engine in `semitotal-core`.
#![forbid(unsafe_code)]

pub mod cli;
mod error;
pub mod io;

pub use cli::{run, SCHEMA_VERSION};
pub use error::CliError;
pub use io::{parse_graph, parse_vertex_set, write_graph, write_vertex_set, Format, ParseError};
