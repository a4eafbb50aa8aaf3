//! The catalog format, the verification suite and its report records.
//!
//! Report lines look like
//!
//! ```text
//! check=<id> instance=<name> outcome=<pass|fail|na> key=value ...
//!   reason: <why the check did not apply>
//! ```
//!
//! with the `reason:` line present only for `na`. `--json` emits one JSON
//! object per record instead.

mod catalog;
mod report;
mod suite;

pub use catalog::{
    default_catalog, parse_catalog, parse_catalog_with, ActionEntry, Catalog, CatalogEntry, EntryBody, Images,
    Provenance, DEFAULT_CATALOG,
};
pub use report::{list, Outcome, VerificationReport};
pub use suite::{cyclic_prime_power, run_suite, select_checks, CheckInfo, SuiteOptions, SuiteResult, CHECKS};
