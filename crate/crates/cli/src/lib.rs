//! Command-line front end for `sumfree-core`.
//!
//! Every command writes a single CSV or JSON document. JSON has the shape
//! `{"schema_version": 1, "rows": [...]}`; rationals are always split into
//! `_num`/`_den` integer fields.
//!
//! Exit codes: 0 success, 1 witness re-check failure (`--verify`), 2 usage,
//! 3 capacity or node budget exhausted (bracketed rows are still written),
//! 4 I/O.

pub mod args;
pub mod emit;
pub mod error;
pub mod rows;
pub mod run;

pub use args::Cli;
pub use error::CliError;
pub use run::{execute, render, run, Outcome, Table};
