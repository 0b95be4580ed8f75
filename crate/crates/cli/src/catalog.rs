//! Loading and validating `.grp` catalog files.
//!
//! A `.grp` file is line-oriented `key = value` text, hand-writable and
//! diff-friendly.  `#` starts a comment (full-line or trailing), blank lines
//! are ignored.  Keys:
//!
//! ```text
//! name = S3                       # required, unique within a catalog
//! generators = a, b               # required, comma-separated names
//! relators = a^3, b^2, (a*b)^2    # required; word grammar: * ^k [x,y] ( )
//! perm a = (1 2 3)                # required once per generator; 1-based
//! perm b = (1 2)                  #   disjoint-cycle notation
//! order = 6                       # optional declared invariants, all
//! exponent = 6                    #   validated against computed values
//! derived_exponent = 3            #   exp of the derived subgroup
//! class = 1                       #   nilpotency class (omit if not nilpotent)
//! two_generated = true            #   advisory; recomputed during verification
//! p = 3                           #   G is a p-group for this prime
//! ```
//!
//! The relator list is split on commas *outside* brackets and parentheses, so
//! commutator sugar like `[a, b]` survives.  Loading validates each file
//! atomically: the permutation images must satisfy every relator, and every
//! declared invariant except `two_generated` is checked against the value
//! computed from the permutation realization (orders via stabilizer chain,
//! exponents via element orders, class via the lower central series,
//! `p` via factorization).  `two_generated` is advisory metadata: the
//! verifier recomputes 2-generation itself rather than trusting the flag.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use weakcomm_core::abelian::factorize;
use weakcomm_core::group::{self, PermGroup};
use weakcomm_core::perm::{lcm, Permutation};
use weakcomm_core::presentation::Presentation;

/// Declared (optional) invariants of a catalog entry.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Declared {
    /// `|G|`.
    pub order: Option<u64>,
    /// `exp(G)`.
    pub exponent: Option<u64>,
    /// `exp(G′)`.
    pub derived_exponent: Option<u64>,
    /// Nilpotency class.
    pub class: Option<u32>,
    /// Whether a 2-element generating set exists (advisory).
    pub two_generated: Option<bool>,
    /// The prime `p` when `G` is a `p`-group.
    pub p: Option<u64>,
}

/// One validated catalog group.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Group name (the `--group` selector).
    pub name: String,
    /// Parsed presentation.
    pub presentation: Presentation,
    /// Permutation images of the generators, in generator order.
    pub perm_gens: Vec<Permutation>,
    /// Raw cycle strings as written in the file, in generator order.
    pub perm_strings: Vec<String>,
    /// Permutation degree (largest point named in any cycle).
    pub degree: u32,
    /// Declared invariants (already validated).
    pub declared: Declared,
    /// Computed order (stabilizer chain).
    pub order: u64,
    /// Source file.
    pub path: PathBuf,
}

/// A load failure, with file and line context.
#[derive(Debug)]
pub struct CatalogError {
    /// File the error occurred in.
    pub path: PathBuf,
    /// 1-based line, when the error is tied to one.
    pub line: Option<usize>,
    /// What went wrong.
    pub message: String,
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "{}:{line}: {}", self.path.display(), self.message),
            None => write!(f, "{}: {}", self.path.display(), self.message),
        }
    }
}

impl std::error::Error for CatalogError {}

fn err(path: &Path, line: Option<usize>, message: impl Into<String>) -> CatalogError {
    CatalogError {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

/// Splits on commas that sit outside `[...]` and `(...)`.
fn split_top_level(text: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '[' | '(' => {
                depth += 1;
                cur.push(c);
            }
            ']' | ')' => {
                depth -= 1;
                cur.push(c);
            }
            ',' if depth == 0 => {
                parts.push(cur.trim().to_string());
                cur = String::new();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        parts.push(cur.trim().to_string());
    }
    parts
}

/// Largest 1-based point named in a cycle string (0 when none).
fn max_point(cycles: &str) -> u32 {
    let mut best = 0u32;
    let mut cur = 0u32;
    let mut in_num = false;
    for c in cycles.chars() {
        if c.is_ascii_digit() {
            cur = cur * 10 + (c as u32 - '0' as u32);
            in_num = true;
        } else {
            if in_num {
                best = best.max(cur);
            }
            cur = 0;
            in_num = false;
        }
    }
    if in_num {
        best = best.max(cur);
    }
    best
}

struct RawFile {
    name: Option<(String, usize)>,
    generators: Option<(Vec<String>, usize)>,
    relators: Option<(Vec<String>, usize)>,
    perms: Vec<(String, String, usize)>,
    declared_raw: BTreeMap<String, (String, usize)>,
}

fn parse_lines(path: &Path, text: &str) -> Result<RawFile, CatalogError> {
    let mut raw = RawFile {
        name: None,
        generators: None,
        relators: None,
        perms: Vec::new(),
        declared_raw: BTreeMap::new(),
    };
    for (idx, full_line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match full_line.find('#') {
            Some(pos) => &full_line[..pos],
            None => full_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| err(path, Some(lineno), "expected `key = value`"))?;
        let key = key.trim();
        let value = value.trim();
        if value.is_empty() {
            return Err(err(path, Some(lineno), format!("empty value for `{key}`")));
        }
        let dup = |what: &str| err(path, Some(lineno), format!("duplicate `{what}`"));
        if let Some(gen) = key.strip_prefix("perm ") {
            let gen = gen.trim();
            if raw.perms.iter().any(|(g, _, _)| g == gen) {
                return Err(dup(&format!("perm {gen}")));
            }
            raw.perms.push((gen.to_string(), value.to_string(), lineno));
            continue;
        }
        match key {
            "name" => {
                if raw.name.is_some() {
                    return Err(dup("name"));
                }
                raw.name = Some((value.to_string(), lineno));
            }
            "generators" => {
                if raw.generators.is_some() {
                    return Err(dup("generators"));
                }
                raw.generators = Some((split_top_level(value), lineno));
            }
            "relators" => {
                if raw.relators.is_some() {
                    return Err(dup("relators"));
                }
                raw.relators = Some((split_top_level(value), lineno));
            }
            "order" | "exponent" | "derived_exponent" | "class" | "two_generated" | "p" => {
                if raw.declared_raw.contains_key(key) {
                    return Err(dup(key));
                }
                raw.declared_raw
                    .insert(key.to_string(), (value.to_string(), lineno));
            }
            other => {
                return Err(err(path, Some(lineno), format!("unknown key `{other}`")));
            }
        }
    }
    Ok(raw)
}

fn parse_declared(path: &Path, raw: &RawFile) -> Result<Declared, CatalogError> {
    let mut declared = Declared::default();
    for (key, (value, lineno)) in &raw.declared_raw {
        let bad = |what: &str| err(path, Some(*lineno), format!("`{key}` must be {what}"));
        match key.as_str() {
            "order" => declared.order = Some(value.parse().map_err(|_| bad("a positive integer"))?),
            "exponent" => {
                declared.exponent = Some(value.parse().map_err(|_| bad("a positive integer"))?)
            }
            "derived_exponent" => {
                declared.derived_exponent =
                    Some(value.parse().map_err(|_| bad("a positive integer"))?)
            }
            "class" => declared.class = Some(value.parse().map_err(|_| bad("a positive integer"))?),
            "two_generated" => {
                declared.two_generated = Some(match value.as_str() {
                    "true" => true,
                    "false" => false,
                    _ => return Err(bad("`true` or `false`")),
                })
            }
            "p" => declared.p = Some(value.parse().map_err(|_| bad("a prime"))?),
            _ => unreachable!("filtered by parse_lines"),
        }
    }
    Ok(declared)
}

/// Caps for the load-time invariant checks; far beyond any desk-scale group.
const ELEMENT_CAP: u64 = 1 << 22;

fn validate_declared(
    path: &Path,
    declared: &Declared,
    group: &PermGroup,
) -> Result<(), CatalogError> {
    let order = group.order();
    if let Some(d) = declared.order {
        if d != order {
            return Err(err(
                path,
                None,
                format!("declared order {d} but the permutation group has order {order}"),
            ));
        }
    }
    if let Some(d) = declared.exponent {
        let computed = group
            .exponent(ELEMENT_CAP)
            .map_err(|e| err(path, None, format!("exponent computation failed: {e}")))?;
        if d != computed {
            return Err(err(
                path,
                None,
                format!("declared exponent {d} but the computed exponent is {computed}"),
            ));
        }
    }
    if let Some(d) = declared.derived_exponent {
        let derived = group::commutator_subgroup(group, group)
            .map_err(|e| err(path, None, format!("derived subgroup failed: {e}")))?;
        let computed = derived
            .exponent(ELEMENT_CAP)
            .map_err(|e| err(path, None, format!("derived exponent failed: {e}")))?;
        if d != computed {
            return Err(err(
                path,
                None,
                format!("declared derived_exponent {d} but the computed value is {computed}"),
            ));
        }
    }
    if let Some(d) = declared.class {
        let computed = group::nilpotency_class(group)
            .map_err(|e| err(path, None, format!("nilpotency class failed: {e}")))?;
        if Some(d) != computed {
            return Err(err(
                path,
                None,
                match computed {
                    Some(c) => format!("declared class {d} but the computed class is {c}"),
                    None => format!("declared class {d} but the group is not nilpotent"),
                },
            ));
        }
    }
    if let Some(d) = declared.p {
        let factors = factorize(order);
        let ok = factors.len() == 1 && factors[0].0 == d;
        if !ok {
            return Err(err(
                path,
                None,
                format!("declared p = {d} but |G| = {order} is not a power of {d}"),
            ));
        }
    }
    Ok(())
}

/// Parses and validates one `.grp` file.
pub fn load_entry(path: &Path) -> Result<CatalogEntry, CatalogError> {
    let text = fs::read_to_string(path)
        .map_err(|e| err(path, None, format!("cannot read file: {e}")))?;
    let raw = parse_lines(path, &text)?;

    let (name, _) = raw
        .name
        .clone()
        .ok_or_else(|| err(path, None, "missing `name`"))?;
    let (gen_names, gen_line) = raw
        .generators
        .clone()
        .ok_or_else(|| err(path, None, "missing `generators`"))?;
    if gen_names.is_empty() {
        return Err(err(path, Some(gen_line), "empty generator list"));
    }
    for (i, g) in gen_names.iter().enumerate() {
        if g.is_empty() || !g.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(err(path, Some(gen_line), format!("bad generator name `{g}`")));
        }
        if gen_names[..i].contains(g) {
            return Err(err(path, Some(gen_line), format!("duplicate generator `{g}`")));
        }
    }
    let (relator_texts, rel_line) = raw
        .relators
        .clone()
        .ok_or_else(|| err(path, None, "missing `relators`"))?;

    let name_refs: Vec<&str> = gen_names.iter().map(String::as_str).collect();
    let relator_refs: Vec<&str> = relator_texts.iter().map(String::as_str).collect();
    let presentation = Presentation::parse(&name_refs, &relator_refs)
        .map_err(|e| err(path, Some(rel_line), format!("bad relator: {e}")))?;

    // Permutation images: one `perm` line per generator, in any order.
    let mut perm_strings = Vec::with_capacity(gen_names.len());
    for g in &gen_names {
        let (_, cycles, _) = raw
            .perms
            .iter()
            .find(|(pg, _, _)| pg == g)
            .ok_or_else(|| err(path, None, format!("missing `perm {g} = ...`")))?;
        perm_strings.push(cycles.clone());
    }
    for (pg, _, lineno) in &raw.perms {
        if !gen_names.contains(pg) {
            return Err(err(
                path,
                Some(*lineno),
                format!("`perm {pg}` does not match any generator"),
            ));
        }
    }
    let degree = perm_strings.iter().map(|s| max_point(s)).max().unwrap_or(1).max(1);
    let mut perm_gens = Vec::with_capacity(perm_strings.len());
    for (g, cycles) in gen_names.iter().zip(&perm_strings) {
        let lineno = raw
            .perms
            .iter()
            .find(|(pg, _, _)| pg == g)
            .map(|(_, _, l)| *l);
        let p = Permutation::parse_cycles(cycles, degree)
            .map_err(|e| err(path, lineno, format!("bad cycles for `{g}`: {e}")))?;
        perm_gens.push(p);
    }

    // The permutations must satisfy every relator.
    if let Err(i) = presentation.check_images(&perm_gens, degree) {
        return Err(err(
            path,
            None,
            format!(
                "relator {} = `{}` does not hold on the permutation images",
                i, relator_texts[i]
            ),
        ));
    }

    let group = PermGroup::new(degree, &perm_gens)
        .map_err(|e| err(path, None, format!("permutation group: {e}")))?;
    let declared = parse_declared(path, &raw)?;
    validate_declared(path, &declared, &group)?;

    Ok(CatalogEntry {
        name,
        presentation,
        perm_gens,
        perm_strings,
        degree,
        declared,
        order: group.order(),
        path: path.to_path_buf(),
    })
}

/// Loads every `.grp` file of a directory (sorted by file name).  All files
/// must validate: any failures are reported together and nothing is returned.
pub fn load_catalog(dir: &Path) -> Result<Vec<CatalogEntry>, Vec<CatalogError>> {
    let read = fs::read_dir(dir).map_err(|e| {
        vec![err(dir, None, format!("cannot read catalog directory: {e}"))]
    })?;
    let mut files: Vec<PathBuf> = read
        .filter_map(Result::ok)
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|ext| ext == "grp"))
        .collect();
    files.sort();
    let mut entries = Vec::new();
    let mut errors = Vec::new();
    for file in files {
        match load_entry(&file) {
            Ok(e) => entries.push(e),
            Err(e) => errors.push(e),
        }
    }
    // Names must be unique across the catalog.
    for i in 1..entries.len() {
        if entries[..i].iter().any(|e| e.name == entries[i].name) {
            errors.push(err(
                &entries[i].path,
                None,
                format!("duplicate group name `{}`", entries[i].name),
            ));
        }
    }
    if errors.is_empty() {
        Ok(entries)
    } else {
        Err(errors)
    }
}

impl CatalogEntry {
    /// `exp(G)` computed from the permutation realization.
    pub fn computed_exponent(&self) -> u64 {
        let group = PermGroup::new(self.degree, &self.perm_gens).expect("validated on load");
        group.exponent(ELEMENT_CAP).unwrap_or(0)
    }

    /// lcm of `|g|` over the generators — a quick lower bound shown by
    /// `catalog list`.
    pub fn generator_order_lcm(&self) -> u64 {
        self.perm_gens
            .iter()
            .fold(1, |acc, p| lcm(acc, p.order()))
    }
}
