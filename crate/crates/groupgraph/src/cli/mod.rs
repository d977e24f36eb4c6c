//! Command-line front end: the group-spec text grammar, the built-in
//! catalog, deterministic DOT/JSON/CSV rendering, and command execution.
//!
//! Everything the binary does lives here behind [`run::execute`], which
//! renders the complete output before anything is written, so a failing
//! run never leaves partial artifacts.

pub mod catalog;
pub mod emit;
pub mod parse;
pub mod run;

pub use catalog::{catalog_specs, CatalogBoundError, CATALOG_ORDER_LIMIT};
pub use parse::{parse_group_spec, ParseError};
pub use run::{
    execute, GraphChoice, IdentityChoice, OutputFormat, RunCommand, RunConfig, RunOutcome,
    UsageError,
};
