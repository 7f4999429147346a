//! One module per top-level subcommand.

pub mod ballot;
pub mod compose;
pub mod divisor;
pub mod invariant;
pub mod master;
pub mod partition;
pub mod pattern;
pub mod puzzle;

use crate::parse::Parsed;
use crate::Failure;

/// Operand parse failures are usage errors.
pub fn arg<T>(r: Parsed<T>) -> Result<T, Failure> {
    r.map_err(Failure::Usage)
}

pub fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// Exact numbers as JSON numbers, anything else as a string.
pub fn num(v: impl std::fmt::Display) -> serde_json::Value {
    crate::output::cell_json(&v.to_string())
}
