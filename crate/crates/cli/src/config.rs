//! Run configuration shared by the CLI commands.

use std::fmt;
use std::str::FromStr;

use weakcomm_core::nu::NuScope;
use weakcomm_core::verify::Suite;

/// Everything a verification run depends on besides the catalog itself.
///
/// Two runs with equal configuration and equal catalogs produce identical
/// reports (timings aside).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Coset-table cap for realizing χ(G) (and ν(G)).
    pub max_cosets: u64,
    /// Cap on auxiliary enumerations: ν relator expansion and product-set
    /// materialization inside the series checks.
    pub enumeration_cap: u64,
    /// Sample count per randomized identity check.
    pub samples: u32,
    /// RNG seed for the identity suite.
    pub seed: u64,
    /// Which suites run, in registry order, no duplicates.
    pub suites: Vec<Suite>,
    /// Relator scope for ν(G) when the `nu` suite runs.
    pub nu_scope: NuScope,
    /// Worker threads (`0` = one per available core).
    pub threads: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            // Covers the whole shipped catalog: with lookahead recovery
            // even χ(A5) (432 000 cosets) closes inside 10⁶ rows.
            max_cosets: 1_000_000,
            // Product-materialization budget; checks whose cost certificate
            // exceeds it are skipped with a witness rather than attempted.
            enumeration_cap: 1_000_000,
            samples: 1000,
            seed: 0,
            suites: standard_suites(),
            nu_scope: NuScope::Generators,
            threads: 0,
        }
    }
}

/// The default suite selection: everything except ν.
///
/// Realizing ν(G) roughly squares the enumeration problem, and for the
/// largest catalog groups it does not fit the default coset cap (ν(A5)
/// closes at `--max-cosets 4000000` but not at the 10⁶ default), so the ν
/// suite is opt-in: `--suites all` or `--suites nu`.
pub fn standard_suites() -> Vec<Suite> {
    Suite::ALL
        .into_iter()
        .filter(|s| *s != Suite::Nu)
        .collect()
}

/// Parses a comma-separated suite list.
///
/// Accepts the registry names (`structural`, `exponent`, `l12`, `identity`,
/// `series`, `homology`, `nu`), the plural spellings `identities` and
/// `exponents`, `standard` (all but ν — the default selection), and `all`.
/// The result is deduplicated and put in registry order so that equal
/// selections compare equal.
pub fn parse_suites(text: &str) -> Result<Vec<Suite>, String> {
    let mut picked = [false; Suite::ALL.len()];
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        if part.eq_ignore_ascii_case("all") {
            picked = [true; Suite::ALL.len()];
            continue;
        }
        if part.eq_ignore_ascii_case("standard") {
            for (idx, s) in Suite::ALL.iter().enumerate() {
                if *s != Suite::Nu {
                    picked[idx] = true;
                }
            }
            continue;
        }
        let canonical = match part.to_ascii_lowercase().as_str() {
            "identities" => "identity".to_string(),
            "exponents" => "exponent".to_string(),
            other => other.to_string(),
        };
        let suite = Suite::from_str(&canonical)
            .map_err(|_| format!("unknown suite `{part}` (try `--suites all`)"))?;
        let idx = Suite::ALL
            .iter()
            .position(|s| *s == suite)
            .expect("every suite appears in ALL");
        picked[idx] = true;
    }
    let suites: Vec<Suite> = Suite::ALL
        .iter()
        .zip(picked)
        .filter_map(|(s, on)| on.then_some(*s))
        .collect();
    if suites.is_empty() {
        return Err("empty suite selection".to_string());
    }
    Ok(suites)
}

/// ν relator scope as a CLI string (`generators` / `all-elements`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NuScopeArg(pub NuScope);

impl FromStr for NuScopeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "generators" => Ok(NuScopeArg(NuScope::Generators)),
            "all-elements" | "all_elements" | "elements" => Ok(NuScopeArg(NuScope::AllElements)),
            other => Err(format!(
                "unknown ν scope `{other}` (expected `generators` or `all-elements`)"
            )),
        }
    }
}

impl fmt::Display for NuScopeArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            NuScope::Generators => f.write_str("generators"),
            NuScope::AllElements => f.write_str("all-elements"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_aliases_and_order_are_normalized() {
        assert_eq!(
            parse_suites("identities,exponents").unwrap(),
            vec![Suite::Exponent, Suite::Identity],
        );
        assert_eq!(
            parse_suites("nu, structural, nu").unwrap(),
            vec![Suite::Structural, Suite::Nu],
        );
        assert_eq!(parse_suites("all").unwrap(), Suite::ALL.to_vec());
        assert_eq!(parse_suites("standard").unwrap(), standard_suites());
        assert_eq!(parse_suites("standard,nu").unwrap(), Suite::ALL.to_vec());
        assert!(parse_suites("bogus").is_err());
        assert!(parse_suites(" , ").is_err());
    }

    #[test]
    fn the_default_selection_is_every_suite_but_nu() {
        let suites = RunConfig::default().suites;
        assert!(!suites.contains(&Suite::Nu));
        assert_eq!(suites.len(), Suite::ALL.len() - 1);
    }

    #[test]
    fn nu_scope_round_trips_through_display() {
        for text in ["generators", "all-elements"] {
            let arg: NuScopeArg = text.parse().unwrap();
            assert_eq!(arg.to_string(), text);
        }
        assert!("sometimes".parse::<NuScopeArg>().is_err());
    }
}
