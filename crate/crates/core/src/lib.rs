//! Mutation analysis for Android application source trees.
//!
//! The pipeline is: [`project::scan_project`] builds a [`project::SourceModel`],
//! [`pfp::extract_pfp`] lists every location where a catalog operator
//! applies, [`mutate::plan_mutants`] turns each location into a first-order
//! mutant, [`verify::verify`] classifies mutants through external hooks, and
//! [`report::build_report`] aggregates the outcomes per operator.

pub mod bytes_serde;
pub mod catalog;
pub mod config;
pub mod detect;
pub mod error;
pub mod mutate;
pub mod pfp;
pub mod project;
pub mod report;
pub mod span;
pub mod syntax;
pub mod verify;

pub use error::{Error, Result};

/// Version stamped into every document this crate writes.
pub const FORMAT_VERSION: u32 = 1;

pub(crate) fn check_version(what: &'static str, found: u32) -> Result<()> {
    if found == FORMAT_VERSION {
        Ok(())
    } else {
        Err(Error::Format { what, message: format!("unsupported format_version {found}, expected {FORMAT_VERSION}") })
    }
}
