//! Catalog-driven command-line verifier for the weak-commutativity
//! construction χ(G) and its companion ν(G).
//!
//! The library half of the `weakcomm` binary: `.grp` catalog loading
//! ([`catalog`]), run configuration ([`config`]), the serializable report
//! schema ([`report`]), and the per-entry execution engine ([`runner`]).
//! The binary itself only parses arguments and maps outcomes to exit codes
//! (0 = all checks passed, 1 = some check failed, 2 = configuration or
//! parse error).

pub mod catalog;
pub mod config;
pub mod report;
pub mod runner;
