//! File formats and command-line front end for the skeletal structure toolkit.

pub mod cli;
pub mod error;
pub mod json;
pub mod obj;
pub mod pgr;

pub use cli::{run, Cli, RunConfig};
pub use error::{CliError, ErrorJson};
