//! Executes verification runs over catalog entries.
//!
//! Failures are contained per entry: a group whose realization blows the
//! coset cap (or fails in any other way) produces a report whose only check
//! is a fatal `realize.chi` record, and the remaining entries still run.
//! Entries are distributed over a scoped thread pool; results are stored by
//! entry index, so report order (and therefore serialized output) does not
//! depend on scheduling.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use weakcomm_core::chi::{realize_chi, BaseGroup, ChiComplex};
use weakcomm_core::nu::{realize_nu, NuComplex};
use weakcomm_core::verify::{run_suites, Suite, VerifyConfig};

use crate::catalog::CatalogEntry;
use crate::config::RunConfig;
use crate::report::{CheckRecord, ConfigRecord, GroupReport};

/// The result of a full run.
#[derive(Debug)]
pub struct RunOutcome {
    /// One report per catalog entry, in catalog order.
    pub reports: Vec<GroupReport>,
    /// True when any check in any report failed.
    pub any_failed: bool,
}

fn coset_cap(cfg: &RunConfig) -> u32 {
    cfg.max_cosets.min(u64::from(u32::MAX)) as u32
}

fn subgroup_orders(chi: &ChiComplex, nu: Option<&NuComplex>) -> BTreeMap<String, u64> {
    let mut m = BTreeMap::new();
    m.insert("L".to_string(), chi.l.order());
    m.insert("D".to_string(), chi.d.order());
    m.insert("W".to_string(), chi.w.order());
    m.insert("R".to_string(), chi.r.order());
    m.insert("L1".to_string(), chi.l1.order());
    m.insert("L2".to_string(), chi.l2.order());
    m.insert("L12".to_string(), chi.l12.order());
    m.insert("T".to_string(), chi.t.order());
    if let Some(nu) = nu {
        m.insert("Delta".to_string(), nu.delta.order());
        m.insert("Y1".to_string(), nu.y1.order());
        m.insert("Y2".to_string(), nu.y2.order());
        m.insert("Y3".to_string(), nu.y3.order());
    }
    m
}

fn exponents(chi: &ChiComplex) -> BTreeMap<String, u64> {
    let cay = &chi.cayley;
    let base_cay = chi.base.cayley();
    let full = base_cay.full_subgroup();
    let derived = base_cay.commutator_subgroup(&full, &full);
    BTreeMap::from([
        ("G".to_string(), chi.base.exponent()),
        ("G_derived".to_string(), base_cay.subgroup_exponent(&derived)),
        ("chi".to_string(), cay.subgroup_exponent(&cay.full_subgroup())),
        ("R".to_string(), cay.subgroup_exponent(&chi.r)),
        ("L12".to_string(), cay.subgroup_exponent(&chi.l12)),
    ])
}

/// Runs the configured suites for one catalog entry.
pub fn run_entry(entry: &CatalogEntry, cfg: &RunConfig) -> GroupReport {
    let config = ConfigRecord::from_config(cfg);
    let fatal = |id: &str, witness: String| GroupReport {
        group: entry.name.clone(),
        chi_order: 0,
        nu_order: None,
        subgroup_orders: BTreeMap::new(),
        exponents: BTreeMap::new(),
        checks: vec![CheckRecord::fatal(id, witness)],
        seed: cfg.seed,
        config: config.clone(),
    };

    let base = match BaseGroup::new(
        entry.presentation.clone(),
        entry.perm_gens.clone(),
        coset_cap(cfg),
    ) {
        Ok(b) => b,
        Err(e) => return fatal("realize.chi", format!("base group: {e}")),
    };
    let chi = match realize_chi(&base, coset_cap(cfg)) {
        Ok(c) => c,
        Err(e) => return fatal("realize.chi", e.to_string()),
    };

    let wants_nu = cfg.suites.contains(&Suite::Nu);
    let mut checks: Vec<CheckRecord> = Vec::new();
    let nu = if wants_nu {
        match realize_nu(&base, cfg.nu_scope, coset_cap(cfg), cfg.enumeration_cap) {
            Ok(n) => Some(n),
            Err(e) => {
                checks.push(CheckRecord::fatal("realize.nu", e.to_string()));
                None
            }
        }
    } else {
        None
    };

    let vcfg = VerifyConfig {
        samples: cfg.samples,
        samples_seed: cfg.seed,
        product_cap: cfg.enumeration_cap,
    };
    match run_suites(&chi, nu.as_ref(), &cfg.suites, &vcfg) {
        Ok(results) => checks.extend(results.iter().map(CheckRecord::from_result)),
        Err(e) => checks.push(CheckRecord::fatal("verify.run", e.to_string())),
    }

    GroupReport {
        group: entry.name.clone(),
        chi_order: chi.order(),
        nu_order: nu.as_ref().map(NuComplex::order),
        subgroup_orders: subgroup_orders(&chi, nu.as_ref()),
        exponents: exponents(&chi),
        checks,
        seed: cfg.seed,
        config,
    }
}

/// Runs every entry over `cfg.threads` workers (0 = one per core).
pub fn run_catalog(entries: &[CatalogEntry], cfg: &RunConfig) -> RunOutcome {
    let workers = match cfg.threads {
        0 => std::thread::available_parallelism().map_or(1, usize::from),
        n => n,
    }
    .min(entries.len().max(1));

    let slots: Mutex<Vec<Option<GroupReport>>> = Mutex::new(vec![None; entries.len()]);
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= entries.len() {
                    break;
                }
                let report = run_entry(&entries[i], cfg);
                slots.lock().expect("no poisoned report slots")[i] = Some(report);
            });
        }
    });

    let reports: Vec<GroupReport> = slots
        .into_inner()
        .expect("no poisoned report slots")
        .into_iter()
        .map(|r| r.expect("every entry produced a report"))
        .collect();
    let any_failed = reports.iter().any(GroupReport::any_failed);
    RunOutcome {
        reports,
        any_failed,
    }
}
