//! Library side of the `octonion` command: suite runners, report assembly,
//! tensor export, and table rendering. The binary is a thin argument parser
//! over these functions, so integration tests can drive them directly.

pub mod export;
pub mod report;
pub mod suites;
pub mod table;

pub use report::{CheckLine, RunReport, SuiteReport};
pub use suites::{run, SuiteName, SuiteSelection};
