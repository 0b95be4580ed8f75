//! Serializable verification reports.
//!
//! One [`GroupReport`] per catalog entry; a run serializes to a JSON array of
//! them.  The schema is stable: `group`, `chi_order`, optional `nu_order`,
//! `subgroup_orders`, `exponents`, `checks` (each `{id, suite, status,
//! witnesses, elapsed_ms}`), `seed`, and the `config` the run used.  Reports
//! re-parse into structurally equal values (round-trip), and runs with equal
//! configuration and seed produce identical JSON once timings are zeroed.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use weakcomm_core::verify::{CheckResult, CheckStatus};

use crate::config::{NuScopeArg, RunConfig};

/// One verification check, as recorded in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    /// Registry id, e.g. `chi.kernel_orders`.
    pub id: String,
    /// Suite the check belongs to.
    pub suite: String,
    /// `pass`, `fail`, `skipped`, or `not_applicable`.
    pub status: String,
    /// Failure witnesses or informative detail; empty when there is nothing
    /// to say.
    pub witnesses: Vec<String>,
    /// Wall-clock time for this check.
    pub elapsed_ms: u64,
}

impl CheckRecord {
    /// Converts a core check result into its report form.
    pub fn from_result(r: &CheckResult) -> Self {
        CheckRecord {
            id: r.id.to_string(),
            suite: r.suite.name().to_string(),
            status: r.status.as_str().to_string(),
            witnesses: if r.detail.is_empty() {
                Vec::new()
            } else {
                vec![r.detail.clone()]
            },
            elapsed_ms: r.elapsed_ms,
        }
    }

    /// A synthetic fatal record, used when realization itself fails and no
    /// suite can run.
    pub fn fatal(id: &str, witness: String) -> Self {
        CheckRecord {
            id: id.to_string(),
            suite: "realize".to_string(),
            status: CheckStatus::Fail.as_str().to_string(),
            witnesses: vec![witness],
            elapsed_ms: 0,
        }
    }
}

/// The configuration echo embedded in every report.
///
/// Thread count is deliberately absent: it cannot influence results.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigRecord {
    pub max_cosets: u64,
    pub enumeration_cap: u64,
    pub samples: u32,
    pub seed: u64,
    pub suites: Vec<String>,
    pub nu_scope: String,
}

impl ConfigRecord {
    pub fn from_config(cfg: &RunConfig) -> Self {
        ConfigRecord {
            max_cosets: cfg.max_cosets,
            enumeration_cap: cfg.enumeration_cap,
            samples: cfg.samples,
            seed: cfg.seed,
            suites: cfg.suites.iter().map(|s| s.name().to_string()).collect(),
            nu_scope: NuScopeArg(cfg.nu_scope).to_string(),
        }
    }
}

/// Everything the run learned about one catalog group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    /// Catalog name of the base group.
    pub group: String,
    /// `|χ(G)|` (0 when realization failed).
    pub chi_order: u64,
    /// `|ν(G)|` when the ν suite realized it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu_order: Option<u64>,
    /// Orders of the distinguished subgroups, keyed `L`, `D`, `W`, `R`,
    /// `L1`, `L2`, `L12`, `T` (plus `Delta`, `Y1`, `Y2`, `Y3` when ν ran).
    pub subgroup_orders: BTreeMap<String, u64>,
    /// Exponents, keyed `G`, `G_derived`, `chi`, `R`, `L12`.
    pub exponents: BTreeMap<String, u64>,
    /// All checks, in registry order.
    pub checks: Vec<CheckRecord>,
    /// The identity-suite seed (duplicates `config.seed` for quick access).
    pub seed: u64,
    /// The full run configuration.
    pub config: ConfigRecord,
}

impl GroupReport {
    /// `(pass, fail, skipped, not_applicable)` counts.
    pub fn tally(&self) -> (usize, usize, usize, usize) {
        let mut t = (0, 0, 0, 0);
        for c in &self.checks {
            match c.status.as_str() {
                "pass" => t.0 += 1,
                "fail" => t.1 += 1,
                "skipped" => t.2 += 1,
                _ => t.3 += 1,
            }
        }
        t
    }

    /// True when any check failed.
    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == "fail")
    }

    /// A copy with every `elapsed_ms` zeroed, for timing-independent
    /// comparison of two runs.
    pub fn without_timings(&self) -> GroupReport {
        let mut copy = self.clone();
        for c in &mut copy.checks {
            c.elapsed_ms = 0;
        }
        copy
    }
}

/// Serializes a run (one report per group) as pretty JSON.
pub fn to_json(reports: &[GroupReport]) -> String {
    serde_json::to_string_pretty(reports).expect("report schema is serializable")
}

/// Parses a JSON run report.
pub fn from_json(text: &str) -> Result<Vec<GroupReport>, serde_json::Error> {
    serde_json::from_str(text)
}

/// Renders a run as human-readable text.
pub fn to_text(reports: &[GroupReport]) -> String {
    use std::fmt::Write;

    let mut out = String::new();
    for (i, r) in reports.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = write!(out, "group {}: |chi| = {}", r.group, r.chi_order);
        if let Some(nu) = r.nu_order {
            let _ = write!(out, ", |nu| = {nu}");
        }
        out.push('\n');
        let fmt_map = |m: &BTreeMap<String, u64>| {
            m.iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        if !r.subgroup_orders.is_empty() {
            let _ = writeln!(out, "  subgroup orders: {}", fmt_map(&r.subgroup_orders));
        }
        if !r.exponents.is_empty() {
            let _ = writeln!(out, "  exponents: {}", fmt_map(&r.exponents));
        }
        let width = r.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &r.checks {
            let _ = write!(
                out,
                "  {:<14} {:<width$} {:>6}ms",
                format!("[{}]", c.status),
                c.id,
                c.elapsed_ms,
            );
            if c.status != "pass" {
                if let Some(w) = c.witnesses.first() {
                    let _ = write!(out, "  {w}");
                }
            }
            out.push('\n');
        }
        let (pass, fail, skipped, na) = r.tally();
        let _ = writeln!(
            out,
            "  {} checks: {pass} pass, {fail} fail, {skipped} skipped, {na} not applicable",
            r.checks.len(),
        );
    }
    out
}
