//! The `weakcomm` command-line tool.
//!
//! ```text
//! weakcomm verify  --catalog DIR [--group NAME] [--suites LIST] ...
//! weakcomm catalog list  DIR
//! weakcomm catalog check DIR
//! weakcomm realize --catalog DIR --group NAME [--nu]
//! ```
//!
//! Exit codes: 0 when every executed check passed, 1 when any check failed,
//! 2 on configuration or parse errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use weakcomm_cli::catalog::{load_catalog, CatalogEntry};
use weakcomm_cli::config::{parse_suites, NuScopeArg, RunConfig};
use weakcomm_cli::report::{to_json, to_text};
use weakcomm_cli::runner::run_catalog;

#[derive(Parser)]
#[command(
    name = "weakcomm",
    version,
    about = "Realize χ(G) and ν(G) for cataloged finite groups and verify their structure"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification suites over a catalog and emit a report.
    Verify(VerifyArgs),
    /// Inspect `.grp` catalogs without realizing anything.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Realize one group and print the resulting orders, nothing else.
    Realize(RealizeArgs),
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List the groups of a catalog with their declared/computed basics.
    List { dir: PathBuf },
    /// Validate every `.grp` file and report problems.
    Check { dir: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Directory of `.grp` files.
    #[arg(long)]
    catalog: PathBuf,
    /// Verify a single group instead of the whole catalog.
    #[arg(long)]
    group: Option<String>,
    /// Comma-separated suites: structural, exponent, l12, identity (or
    /// identities), series, homology, nu, standard (all but nu), all.
    #[arg(long, default_value = "standard")]
    suites: String,
    /// Coset-table cap for realizing χ(G) and ν(G).
    #[arg(long, default_value_t = 1_000_000)]
    max_cosets: u64,
    /// Cap on ν relator expansion and on materialized product sets.
    #[arg(long, default_value_t = 1_000_000)]
    enumeration_cap: u64,
    /// Samples per randomized identity check (0 disables the suite).
    #[arg(long, default_value_t = 1000)]
    samples: u32,
    /// Seed for the identity suite.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// ν relator scope: generators or all-elements.
    #[arg(long, default_value = "generators")]
    nu_scope: String,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct RealizeArgs {
    /// Directory of `.grp` files.
    #[arg(long)]
    catalog: PathBuf,
    /// The group to realize.
    #[arg(long)]
    group: String,
    /// Coset-table cap.
    #[arg(long, default_value_t = 1_000_000)]
    max_cosets: u64,
    /// Also realize ν(G).
    #[arg(long)]
    nu: bool,
    /// ν relator scope: generators or all-elements.
    #[arg(long, default_value = "generators")]
    nu_scope: String,
}

fn fail_cfg(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn load_or_exit(dir: &Path) -> Result<Vec<CatalogEntry>, ExitCode> {
    match load_catalog(dir) {
        Ok(entries) => {
            if entries.is_empty() {
                eprintln!("warning: no .grp files in {}", dir.display());
            }
            Ok(entries)
        }
        Err(errors) => {
            for e in &errors {
                eprintln!("error: {e}");
            }
            Err(ExitCode::from(2))
        }
    }
}

fn select<'a>(
    entries: &'a [CatalogEntry],
    name: &str,
) -> Result<&'a CatalogEntry, ExitCode> {
    entries.iter().find(|e| e.name == name).ok_or_else(|| {
        let known: Vec<&str> = entries.iter().map(|e| e.name.as_str()).collect();
        fail_cfg(format!(
            "no group `{name}` in the catalog (known: {})",
            known.join(", ")
        ))
    })
}

fn cmd_verify(args: &VerifyArgs) -> ExitCode {
    let suites = match parse_suites(&args.suites) {
        Ok(s) => s,
        Err(e) => return fail_cfg(e),
    };
    let nu_scope: NuScopeArg = match args.nu_scope.parse() {
        Ok(s) => s,
        Err(e) => return fail_cfg(e),
    };
    let entries = match load_or_exit(&args.catalog) {
        Ok(e) => e,
        Err(code) => return code,
    };
    let selected: Vec<CatalogEntry> = match &args.group {
        Some(name) => match select(&entries, name) {
            Ok(e) => vec![e.clone()],
            Err(code) => return code,
        },
        None => entries,
    };
    let cfg = RunConfig {
        max_cosets: args.max_cosets,
        enumeration_cap: args.enumeration_cap,
        samples: args.samples,
        seed: args.seed,
        suites,
        nu_scope: nu_scope.0,
        threads: args.threads,
    };
    let outcome = run_catalog(&selected, &cfg);
    let rendered = match args.format {
        Format::Json => to_json(&outcome.reports),
        Format::Text => to_text(&outcome.reports),
    };
    match &args.report {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                return fail_cfg(format!("cannot write {}: {e}", path.display()));
            }
            for r in &outcome.reports {
                let (pass, fail, skipped, na) = r.tally();
                eprintln!(
                    "{}: {pass} pass, {fail} fail, {skipped} skipped, {na} n/a",
                    r.group
                );
            }
        }
        None => println!("{rendered}"),
    }
    if outcome.any_failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_catalog_list(dir: &Path) -> ExitCode {
    let entries = match load_or_exit(dir) {
        Ok(e) => e,
        Err(code) => return code,
    };
    for e in &entries {
        println!(
            "{:<12} order {:<6} degree {:<4} generators {}  ({})",
            e.name,
            e.order,
            e.degree,
            e.presentation.ngens(),
            e.path.file_name().map_or_else(String::new, |f| f
                .to_string_lossy()
                .into_owned()),
        );
    }
    ExitCode::SUCCESS
}

fn cmd_catalog_check(dir: &Path) -> ExitCode {
    match load_catalog(dir) {
        Ok(entries) => {
            println!("ok: {} group(s) validated", entries.len());
            ExitCode::SUCCESS
        }
        Err(errors) => {
            for e in &errors {
                eprintln!("error: {e}");
            }
            eprintln!("{} problem(s) found", errors.len());
            ExitCode::from(2)
        }
    }
}

fn cmd_realize(args: &RealizeArgs) -> ExitCode {
    use weakcomm_core::chi::{realize_chi, BaseGroup};
    use weakcomm_core::nu::realize_nu;

    let nu_scope: NuScopeArg = match args.nu_scope.parse() {
        Ok(s) => s,
        Err(e) => return fail_cfg(e),
    };
    let entries = match load_or_exit(&args.catalog) {
        Ok(e) => e,
        Err(code) => return code,
    };
    let entry = match select(&entries, &args.group) {
        Ok(e) => e,
        Err(code) => return code,
    };
    let cap = args.max_cosets.min(u64::from(u32::MAX)) as u32;
    let base = match BaseGroup::new(entry.presentation.clone(), entry.perm_gens.clone(), cap) {
        Ok(b) => b,
        Err(e) => return fail_cfg(format!("base group: {e}")),
    };
    let chi = match realize_chi(&base, cap) {
        Ok(c) => c,
        Err(e) => return fail_cfg(format!("χ realization: {e}")),
    };
    println!("|G|    = {}", base.order());
    println!("|chi|  = {}", chi.order());
    println!("|T|    = {}", chi.t.order());
    for (label, sub) in [
        ("L", &chi.l),
        ("D", &chi.d),
        ("W", &chi.w),
        ("L1", &chi.l1),
        ("L2", &chi.l2),
        ("R", &chi.r),
        ("L12", &chi.l12),
    ] {
        println!("|{label:<4}| = {}", sub.order());
    }
    if args.nu {
        match realize_nu(&base, nu_scope.0, cap, 1_000_000) {
            Ok(nu) => {
                println!("|nu|   = {}", nu.order());
                for (label, sub) in [
                    ("Delta", &nu.delta),
                    ("Y1", &nu.y1),
                    ("Y2", &nu.y2),
                    ("Y3", &nu.y3),
                ] {
                    println!("|{label:<5}| = {}", sub.order());
                }
            }
            Err(e) => return fail_cfg(format!("ν realization: {e}")),
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Verify(args) => cmd_verify(&args),
        Cmd::Catalog { cmd } => match cmd {
            CatalogCmd::List { dir } => cmd_catalog_list(&dir),
            CatalogCmd::Check { dir } => cmd_catalog_check(&dir),
        },
        Cmd::Realize(args) => cmd_realize(&args),
    }
}
