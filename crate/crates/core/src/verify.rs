//! Check registry and verification suites for realized χ(G) and ν(G).
//!
//! Every check verifies one structural property of the realized groups and
//! produces a [`CheckResult`] with a stable identifier, a status, a detail
//! line (a concrete witness on failure, a reason when skipped or not
//! applicable, occasionally an informational summary on success), and the
//! wall time spent in the check body.  Shared precomputations (series,
//! bracket towers, the multiplier oracle) are made once per suite, so the
//! per-check times are marginal costs.
//!
//! # Check registry
//!
//! **structural** — definitions and first-order structure of χ:
//! * `chi.diagonal_relators` — `[g, gᵠ] = 1` for every element `g` of `G`.
//! * `chi.kernel_orders` — `|L| = |χ|/|G|`, `|D| = |χ|/|G|²`, `|W| = |χ|/|T|`.
//! * `chi.l_generators` — `L = ⟨g⁻¹gᵠ : g ∈ G⟩`.
//! * `chi.d_generators` — `D = [G, Gᵠ]`.
//! * `chi.w_intersections` — `W = L ∩ D` and `W = L₁ ∩ L₂`.
//! * `chi.l_d_commute` — `[L, D] = 1`.
//! * `chi.w_central` — `W` centralizes `L`, `D`, and itself (so `W` is abelian
//!   and central in `LD`).
//! * `chi.r_inside_w` — `R ⊆ W`.
//! * `chi.index_identity` — `|L|·|D| = |LD|·|W|`.
//! * `chi.exterior_orders` — `R ⊆ L₁ ∩ L₂` and `|L₁| = |L₂| = |D|`.
//! * `chi.normality` — `L, D, W, R, L₁, L₂, L₁,₂` are all normal in χ.
//!
//! **exponent** — order and exponent laws:
//! * `exp.r_bound` — `exp(R)` divides `exp(G)·exp(G′)`.
//! * `exp.r_mod_l12` — `exp(R/L₁,₂)` divides `exp(G)`.
//! * `exp.l12_bound` — `exp(L₁,₂)` divides the lcm of the orders of all
//!   commutators `[x, y]` of `G`.
//! * `exp.p_group_bound` — for a `p`-group of derived length `d`: `exp(R)`
//!   divides `min(exp(G′)·exp(G), 2^d·exp(G′)^{d−1})` when `p = 2` and
//!   `min(exp(G′)·exp(G), exp(G′)^{d−1})` when `p` is odd.
//! * `exp.abelian_r_squared` — abelian `G`: `R² = 1`.
//! * `exp.two_generated_r_trivial` — 2-generated `G`: `R = 1`.
//! * `exp.periodic_r` — periodicity transfer from `G` to `R`; vacuous for
//!   finite inputs, reported as not applicable.
//! * `exp.l12_finite` — finiteness of `L₁,₂` over finitely generated periodic
//!   `G`; vacuous for finite inputs, reported as not applicable.
//!
//! **l12** — the subgroup `L₁,₂ = [L₁, L₂]` and the structure of `R`:
//! * `l12.inside_r` — `L₁,₂ ⊆ R`.
//! * `l12.in_w_central` — `L₁,₂ ⊆ W` and `L₁,₂` centralizes `L₁` and `L₂`.
//! * `l12.exterior_pair_basis` — greedily chosen pairs `(gᵢ, hᵢ)` whose
//!   `[gᵢ, hᵢᵠ]` generate `D` over `R` also give
//!   `L₁ = ⟨[gᵢ, hᵢ]·[hᵢ, gᵢᵠ]⟩·R` and `L₂ = ⟨[gᵢᵠ, hᵢᵠ]·[hᵢᵠ, gᵢ]⟩·R`.
//! * `l12.pair_generators` — the same pairs give
//!   `L₁,₂ = ⟨[[gᵢ,φ,hᵢ], [gⱼ,φ,hⱼᵠ]] : i, j⟩`.
//! * `l12.r_coset_generators` — `R = ⟨L₁,₂ ∪ {[g,φ,a,bᵠ] : g, a, b ∈ G}⟩`.
//!
//! **identity** — sampled commutator identities (`samples` random instances
//! each, seeded; skipped entirely when `samples = 0`):
//! * `id.symmetry` — `[x, yᵠ] = [xᵠ, y]`.
//! * `id.conjugate_transfer` — `[x, yᵠ]^{zᵠ} = [x, yᵠ]^z`.
//! * `id.word_transfer` — `[x, yᵠ]^{ω(z₁^{ε₁}, …)} = [x, yᵠ]^{ω(z₁, …)}` for
//!   words `ω` with arbitrary φ-markings `εᵢ`.
//! * `id.bracket_swap` — `[xᵠ, y, x] = [x, y, xᵠ]`.
//! * `id.bracket_swap_deep` — `[xᵠ, y₁, …, yₙ, x] = [x, y₁, …, yₙ, xᵠ]`.
//! * `id.l_commutator_split` — `[h, g⁻ᵠg] = [gᵠ, h]·[h, g] = [h, g]·[gᵠ, h]`.
//! * `id.lphi_commutator_split` — `[h⁻¹hᵠ, gᵠ] = [gᵠ, h]·[hᵠ, gᵠ]
//!   = [hᵠ, gᵠ]·[gᵠ, h]`.
//! * `id.l12_bilinear` — `[α₁α₂, β₁β₂] = [α₁,β₁][α₁,β₂][α₂,β₁][α₂,β₂]` for
//!   `αᵢ ∈ L₁`, `βᵢ ∈ L₂`.
//! * `id.r_additive_mod_l12` — `[[g,φ][h,φ], a, bᵠ] ≡
//!   [g,φ,a,bᵠ]·[h,φ,a,bᵠ] (mod L₁,₂)`.
//! * `id.r_additive_exact` — `[[g,φ,a][h,φ,b], cᵠ] = [g,φ,a,cᵠ]·[h,φ,b,cᵠ]`.
//! * `id.l_swap_tail` — `[α, a, g, bᵠ] = [α, a, bᵠ, g]` for `α ∈ L`.
//! * `id.lphi_swap_tail` — `[α, aᵠ, gᵠ, b] = [α, aᵠ, b, gᵠ]` for `α ∈ L`.
//!
//! **series** — lower central and derived series of χ:
//! * `series.derived_decomposition` — `χ′` is the central product of `D` and
//!   `L₁L₂`.
//! * `series.second_derived` — `χ⁽²⁾` equals the product set
//!   `D′·L₁′·L₂′·L₁,₂`.
//! * `series.higher_derived` — `χ⁽ᵏ⁺¹⁾` is the central product of `D⁽ᵏ⁾`,
//!   `L₁⁽ᵏ⁾`, `L₂⁽ᵏ⁾` for every `k ≥ 2` down to the stable term.
//! * `series.gamma_formula` — `γₙ(χ) = [D,ₙ₋₂G]·[L₁,ₙ₋₂G]·[L₂,ₙ₋₂Gᵠ]` for
//!   `n ≥ 3`.
//! * `series.bracket_normality` — `[D,ₙG]`, `[L₁,ₙG]`, `[L₂,ₙGᵠ]` are normal
//!   in χ for all `n ≥ 1`.
//! * `series.r_bracket_intersections` — `[R,ₙG] ⊆ [D,ₙ₊₁G] ∩ [L₁,ₙ₊₁G] ∩
//!   [L₂,ₙ₊₁Gᵠ]` for all `n ≥ 1`.
//! * `series.r_dominates_at_class` — nilpotent `G` of class `c`: `[D,꜀G]`,
//!   `[L₁,꜀G]`, `[L₂,꜀Gᵠ]` are all inside `[R,꜀₋₁G]`.
//! * `series.nilpotent_gamma_chain` — nilpotent `G` of class `c`:
//!   `γₙ₊₂(χ) = [R,ₙ₋₁G] = [D,ₙG] = [L₁,ₙG] = [L₂,ₙGᵠ]` for `n ≥ c`, and
//!   `γ꜀₊₃(χ)² = 1`.
//!
//! **homology** — links to the Schur multiplier `M(G)`:
//! * `hom.oracle` — the independent 2-cocycle multiplier oracle is available
//!   and internally consistent.
//! * `hom.w_section` — `W/R` has exactly the abelian invariants of `M(G)`.
//! * `hom.d_section` — `|D/R| = |G′|·|M(G)|`.
//! * `hom.exterior_sections` — `D/R`, `L₁/R`, `L₂/R` share one coset-order
//!   census (their common isomorphism type is the exterior square `G ∧ G`).
//!
//! **nu** — the companion group ν(G) (skipped when no ν is supplied):
//! * `nu.consistency` — `|ν|/|Δ| = |χ|/|R|` and every ν-relator evaluates
//!   into `R` inside χ.
//! * `nu.delta_central` — `Δ ⊆ Z(ν)` and `Δ ⊆ Υ₁`.
//! * `nu.exterior_sections` — `Υ₁/Δ`, `Υ₂/Δ`, `Υ₃/Δ` share one coset-order
//!   census, and it matches the census of `D/R` in χ.
//! * `nu.derived_decomposition` — `ν′` is the central product of `Υ₁`, `Υ₂`,
//!   `Υ₃`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{factorize, invariants_from_order_counts};
use crate::cayley::{CayleyGroup, CayleySubgroup};
use crate::chi::{BaseGroup, ChiComplex, ChiError};
use crate::group;
use crate::multiplier::schur_multiplier;
use crate::nu::{nu_chi_consistency, NuComplex};
use crate::perm::lcm;
use crate::series::{central_product, is_normal, lower_central_series, CentralProductReport};
use crate::time::timed;

/// The verification suites, in canonical execution order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Definitions and first-order structure of χ.
    Structural,
    /// Exponent laws for `R` and `L₁,₂`.
    Exponent,
    /// The subgroup `L₁,₂` and generator descriptions of `R`.
    L12,
    /// Sampled commutator identities.
    Identity,
    /// Lower central and derived series decompositions.
    Series,
    /// Schur-multiplier links.
    Homology,
    /// The companion construction ν(G).
    Nu,
}

impl Suite {
    /// All suites in canonical order.
    pub const ALL: [Suite; 7] = [
        Suite::Structural,
        Suite::Exponent,
        Suite::L12,
        Suite::Identity,
        Suite::Series,
        Suite::Homology,
        Suite::Nu,
    ];

    /// Stable lowercase name (used on the command line and in reports).
    pub fn name(self) -> &'static str {
        match self {
            Suite::Structural => "structural",
            Suite::Exponent => "exponent",
            Suite::L12 => "l12",
            Suite::Identity => "identity",
            Suite::Series => "series",
            Suite::Homology => "homology",
            Suite::Nu => "nu",
        }
    }
}

/// Error for an unrecognized suite name.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
#[error("unknown suite name: {0:?} (expected one of structural, exponent, l12, identity, series, homology, nu)")]
pub struct SuiteParseError(pub String);

impl core::str::FromStr for Suite {
    type Err = SuiteParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| SuiteParseError(s.to_string()))
    }
}

/// Verdict of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    /// The property holds.
    Pass,
    /// The property fails; the detail line carries a witness.
    Fail,
    /// The check did not run (the detail line says why).
    Skipped,
    /// The property's hypothesis does not apply to this group.
    NotApplicable,
}

impl CheckStatus {
    /// Stable lowercase name.
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
            CheckStatus::NotApplicable => "not_applicable",
        }
    }
}

/// Outcome of one check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    /// Stable identifier from the registry in the module docs.
    pub id: &'static str,
    /// The suite the check belongs to.
    pub suite: Suite,
    /// Verdict.
    pub status: CheckStatus,
    /// Witness (on failure), reason (when skipped / not applicable), or an
    /// informational summary.
    pub detail: String,
    /// Wall time spent in the check body (0 without the `std` feature).
    pub elapsed_ms: u64,
}

/// Tunables for a verification run.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Random instances per sampled identity check; 0 skips the identity
    /// suite.
    pub samples: u32,
    /// Seed for the deterministic sample stream (each check reseeds, so
    /// results do not depend on check order).
    pub samples_seed: u64,
    /// Cap on elementwise products when materializing a product *set* (the
    /// `series.second_derived` check); exceeding it skips that check.
    pub product_cap: u64,
    /// Largest `|G|` the 2-cocycle multiplier oracle attempts.  The cocycle
    /// system has `(|G|−1)²` unknowns and `(|G|−1)³` equations, so the
    /// elimination cost grows like `|G|⁵`; for a larger base the homology
    /// suite is skipped with a witness instead of attempted.  The default
    /// covers every group of order ≤ 30 (order 27 runs in seconds; order 60
    /// would take tens of minutes).
    pub multiplier_order_cap: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            samples: 1000,
            samples_seed: 0,
            product_cap: 1 << 22,
            multiplier_order_cap: 30,
        }
    }
}

/// Group-theoretic facts about the base group `G` that select which laws
/// apply, computed independently of χ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTraits {
    /// `|G|`.
    pub order: u64,
    /// Whether `G` is abelian.
    pub abelian: bool,
    /// Whether `G` can be generated by two elements (decided by search when
    /// the presentation has more than two generators).
    pub two_generated: bool,
    /// `Some(p)` when `|G|` is a power of the prime `p` (and `|G| > 1`).
    pub p_group: Option<u64>,
    /// Nilpotency class of `G`, when nilpotent.
    pub nilpotency_class: Option<u32>,
    /// Derived length of `G`, when solvable.
    pub derived_length: Option<u32>,
    /// `exp(G)`.
    pub exponent: u64,
    /// `exp(G′)`.
    pub derived_exponent: u64,
    /// The least `m` with `[x, y]^m = 1` for all `x, y ∈ G` (the lcm of the
    /// orders of all commutators).
    pub commutator_exponent: u64,
}

/// Computes [`GroupTraits`] for a base group.
pub fn group_traits(base: &BaseGroup) -> Result<GroupTraits, ChiError> {
    let order = base.order();
    let cay = base.cayley();
    let full = cay.full_subgroup();
    let abelian = base.group().is_abelian();
    let p_group = match factorize(order).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    };
    let nilpotency_class = group::nilpotency_class(base.group())?;
    let derived_length = group::derived_length(base.group())?;
    let exponent = cay.subgroup_exponent(&full);
    let derived = cay.commutator_subgroup(&full, &full);
    let derived_exponent = cay.subgroup_exponent(&derived);
    let mut commutator_exponent = 1;
    for x in 0..cay.size() {
        for y in 0..cay.size() {
            commutator_exponent = lcm(commutator_exponent, cay.element_order(cay.comm(x, y)));
        }
    }
    let two_generated = if base.ngens() <= 2 {
        true
    } else {
        // A 2-generated group has a ≤2-generated abelianization, which
        // filters out most candidates before the pair search.
        let ab_census = cay.quotient_order_statistics(&full, &derived)?;
        let ab = invariants_from_order_counts(&ab_census)
            .map_err(|e| ChiError::Invariant(format!("abelianization census: {e}")))?;
        if ab.divisors.len() > 2 {
            false
        } else {
            let mut found = false;
            'search: for i in 0..cay.size() {
                for j in i..cay.size() {
                    if cay.subgroup_from_gens(&[i, j]).order() == order {
                        found = true;
                        break 'search;
                    }
                }
            }
            found
        }
    };
    Ok(GroupTraits {
        order,
        abelian,
        two_generated,
        p_group,
        nilpotency_class,
        derived_length,
        exponent,
        derived_exponent,
        commutator_exponent,
    })
}

/// Identifiers of the sampled identity checks, in execution order.
const IDENTITY_IDS: [&str; 12] = [
    "id.symmetry",
    "id.conjugate_transfer",
    "id.word_transfer",
    "id.bracket_swap",
    "id.bracket_swap_deep",
    "id.l_commutator_split",
    "id.lphi_commutator_split",
    "id.l12_bilinear",
    "id.r_additive_mod_l12",
    "id.r_additive_exact",
    "id.l_swap_tail",
    "id.lphi_swap_tail",
];

/// Identifiers of the ν-suite checks, in execution order.
const NU_IDS: [&str; 4] = [
    "nu.consistency",
    "nu.delta_central",
    "nu.exterior_sections",
    "nu.derived_decomposition",
];

/// Non-success outcome of a check body.
enum Flunk {
    /// The property is violated (witness attached).
    Fail(String),
    /// The check could not run to completion (reason attached).
    Skip(String),
}

fn fail(msg: impl Into<String>) -> Flunk {
    Flunk::Fail(msg.into())
}

fn run_check(
    out: &mut Vec<CheckResult>,
    suite: Suite,
    id: &'static str,
    body: impl FnOnce() -> Result<String, Flunk>,
) {
    let (outcome, elapsed_ms) = timed(body);
    let (status, detail) = match outcome {
        Ok(detail) => (CheckStatus::Pass, detail),
        Err(Flunk::Fail(witness)) => (CheckStatus::Fail, witness),
        Err(Flunk::Skip(reason)) => (CheckStatus::Skipped, reason),
    };
    out.push(CheckResult {
        id,
        suite,
        status,
        detail,
        elapsed_ms,
    });
}

fn push_status(
    out: &mut Vec<CheckResult>,
    suite: Suite,
    id: &'static str,
    status: CheckStatus,
    detail: impl Into<String>,
) {
    out.push(CheckResult {
        id,
        suite,
        status,
        detail: detail.into(),
        elapsed_ms: 0,
    });
}

/// Uniform draw from `0..n` (rejection sampled).
fn sample_below(rng: &mut ChaCha8Rng, n: u32) -> u32 {
    debug_assert!(n > 0);
    let n = u64::from(n);
    let zone = (1u64 << 32) - ((1u64 << 32) % n);
    loop {
        let x = u64::from(rng.next_u32());
        if x < zone {
            return (x % n) as u32;
        }
    }
}

/// Renders base element `e` as its canonical word.
fn base_word(chi: &ChiComplex, e: u32) -> String {
    let names = chi.base.presentation().names();
    chi.base.element_word(e).display(&names)
}

fn describe_central_product(what: &str, rep: &CentralProductReport) -> String {
    if !rep.commute_ok {
        if let Some((i, j, x, y)) = rep.first_noncommuting {
            return format!(
                "{what}: generators of factors {i} and {j} do not commute ([{x}, {y}] ≠ 1)"
            );
        }
    }
    if !rep.order_formula_ok {
        return format!("{what}: a successive product violates |PF|·|P∩F| = |P|·|F|");
    }
    format!(
        "{what}: product has order {} but the target has order {}",
        rep.product_order, rep.target_order
    )
}

/// Elements of χ generating the whole group (both copies' generators).
fn chi_generators(chi: &ChiComplex) -> Vec<u32> {
    (0..2 * chi.base.ngens())
        .map(|i| chi.cayley.gen_element(i))
        .collect()
}

// ---------------------------------------------------------------------------
// structural
// ---------------------------------------------------------------------------

/// Runs the structural suite.
pub fn verify_structural(chi: &ChiComplex) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let cay = &chi.cayley;
    let gsize = chi.base.cayley().size();

    run_check(&mut out, Suite::Structural, "chi.diagonal_relators", || {
        for e in 0..gsize {
            let c = cay.comm(chi.embed_g[e as usize], chi.embed_phi[e as usize]);
            if c != 0 {
                return Err(fail(format!(
                    "[g, gᵠ] ≠ 1 for g = {} (χ element {c})",
                    base_word(chi, e)
                )));
            }
        }
        Ok(format!("all {gsize} diagonal commutators vanish"))
    });

    run_check(&mut out, Suite::Structural, "chi.kernel_orders", || {
        let chi_order = chi.order();
        let g = chi.base.order();
        let t = chi.t.order();
        if chi.l.order() * g != chi_order {
            return Err(fail(format!(
                "|L|·|G| = {}·{} ≠ |χ| = {}",
                chi.l.order(),
                g,
                chi_order
            )));
        }
        if chi.d.order() * g * g != chi_order {
            return Err(fail(format!(
                "|D|·|G|² = {}·{} ≠ |χ| = {}",
                chi.d.order(),
                g * g,
                chi_order
            )));
        }
        if chi.w.order() * t != chi_order {
            return Err(fail(format!(
                "|W|·|T| = {}·{} ≠ |χ| = {}",
                chi.w.order(),
                t,
                chi_order
            )));
        }
        Ok(format!(
            "|χ| = {chi_order}, |L| = {}, |D| = {}, |W| = {}",
            chi.l.order(),
            chi.d.order(),
            chi.w.order()
        ))
    });

    run_check(&mut out, Suite::Structural, "chi.l_generators", || {
        let diag: Vec<u32> = (0..gsize).map(|e| chi.g_phi(e)).collect();
        let span = cay.subgroup_from_gens(&diag);
        if span.set_eq(&chi.l) {
            Ok(String::new())
        } else {
            Err(fail(format!(
                "⟨g⁻¹gᵠ⟩ has order {} but ker π has order {}",
                span.order(),
                chi.l.order()
            )))
        }
    });

    run_check(&mut out, Suite::Structural, "chi.d_generators", || {
        let span = cay.commutator_subgroup(&chi.sub_g, &chi.sub_phi);
        if span.set_eq(&chi.d) {
            Ok(String::new())
        } else {
            Err(fail(format!(
                "[G, Gᵠ] has order {} but ker ρ has order {}",
                span.order(),
                chi.d.order()
            )))
        }
    });

    run_check(&mut out, Suite::Structural, "chi.w_intersections", || {
        if !(chi.w.is_subset_of(&chi.l) && chi.w.is_subset_of(&chi.d)) {
            return Err(fail("W is not contained in L ∩ D"));
        }
        if chi.l.intersection_size(&chi.d) != chi.w.order() {
            return Err(fail(format!(
                "|L ∩ D| = {} ≠ |W| = {}",
                chi.l.intersection_size(&chi.d),
                chi.w.order()
            )));
        }
        if !(chi.w.is_subset_of(&chi.l1) && chi.w.is_subset_of(&chi.l2)) {
            return Err(fail("W is not contained in L₁ ∩ L₂"));
        }
        if chi.l1.intersection_size(&chi.l2) != chi.w.order() {
            return Err(fail(format!(
                "|L₁ ∩ L₂| = {} ≠ |W| = {}",
                chi.l1.intersection_size(&chi.l2),
                chi.w.order()
            )));
        }
        Ok(format!("W = L ∩ D = L₁ ∩ L₂ of order {}", chi.w.order()))
    });

    run_check(&mut out, Suite::Structural, "chi.l_d_commute", || {
        if cay.centralizes(&chi.l, &chi.d) {
            Ok(String::new())
        } else {
            Err(fail("some generator of L fails to commute with D"))
        }
    });

    run_check(&mut out, Suite::Structural, "chi.w_central", || {
        for (name, other) in [("L", &chi.l), ("D", &chi.d), ("W", &chi.w)] {
            if !cay.centralizes(&chi.w, other) {
                return Err(fail(format!("W does not centralize {name}")));
            }
        }
        Ok(String::new())
    });

    run_check(&mut out, Suite::Structural, "chi.r_inside_w", || {
        if chi.r.is_subset_of(&chi.w) {
            Ok(format!("|R| = {}", chi.r.order()))
        } else {
            Err(fail(format!(
                "R (order {}) is not contained in W (order {})",
                chi.r.order(),
                chi.w.order()
            )))
        }
    });

    run_check(&mut out, Suite::Structural, "chi.index_identity", || {
        let mut gens = chi.l.gens().to_vec();
        gens.extend_from_slice(chi.d.gens());
        let ld = cay.subgroup_from_gens(&gens);
        if chi.l.order() * chi.d.order() == ld.order() * chi.w.order() {
            Ok(format!("|LD| = {}", ld.order()))
        } else {
            Err(fail(format!(
                "|L|·|D| = {} but |LD|·|W| = {}",
                chi.l.order() * chi.d.order(),
                ld.order() * chi.w.order()
            )))
        }
    });

    run_check(&mut out, Suite::Structural, "chi.exterior_orders", || {
        if !(chi.r.is_subset_of(&chi.l1) && chi.r.is_subset_of(&chi.l2)) {
            return Err(fail("R is not contained in L₁ ∩ L₂"));
        }
        if chi.l1.order() != chi.d.order() || chi.l2.order() != chi.d.order() {
            return Err(fail(format!(
                "|L₁| = {}, |L₂| = {}, |D| = {} are not all equal",
                chi.l1.order(),
                chi.l2.order(),
                chi.d.order()
            )));
        }
        Ok(format!("|L₁| = |L₂| = |D| = {}", chi.d.order()))
    });

    run_check(&mut out, Suite::Structural, "chi.normality", || {
        let conj = chi_generators(chi);
        for (name, sub) in [
            ("L", &chi.l),
            ("D", &chi.d),
            ("W", &chi.w),
            ("R", &chi.r),
            ("L₁", &chi.l1),
            ("L₂", &chi.l2),
            ("L₁,₂", &chi.l12),
        ] {
            if !is_normal(cay, sub, &conj) {
                return Err(fail(format!("{name} is not normal in χ")));
            }
        }
        Ok(String::new())
    });

    out
}

// ---------------------------------------------------------------------------
// exponent
// ---------------------------------------------------------------------------

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Runs the exponent suite.
pub fn verify_exponent(chi: &ChiComplex, traits: &GroupTraits) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let cay = &chi.cayley;

    run_check(&mut out, Suite::Exponent, "exp.r_bound", || {
        let e_r = cay.subgroup_exponent(&chi.r);
        let bound = traits.exponent * traits.derived_exponent;
        if bound % e_r == 0 {
            Ok(format!("exp(R) = {e_r} divides exp(G)·exp(G′) = {bound}"))
        } else {
            Err(fail(format!(
                "exp(R) = {e_r} does not divide exp(G)·exp(G′) = {bound}"
            )))
        }
    });

    run_check(&mut out, Suite::Exponent, "exp.r_mod_l12", || {
        let (order, exponent) = cay
            .quotient_order_and_exponent(&chi.r, &chi.l12)
            .map_err(|e| fail(format!("R/L₁,₂ is not a quotient: {e}")))?;
        if traits.exponent % exponent == 0 {
            Ok(format!(
                "R/L₁,₂ has order {order} and exponent {exponent} | exp(G) = {}",
                traits.exponent
            ))
        } else {
            Err(fail(format!(
                "exp(R/L₁,₂) = {exponent} does not divide exp(G) = {}",
                traits.exponent
            )))
        }
    });

    run_check(&mut out, Suite::Exponent, "exp.l12_bound", || {
        let e = cay.subgroup_exponent(&chi.l12);
        let m = traits.commutator_exponent;
        if m % e == 0 {
            Ok(format!(
                "exp(L₁,₂) = {e} divides the commutator exponent m = {m}"
            ))
        } else {
            Err(fail(format!(
                "exp(L₁,₂) = {e} does not divide the commutator exponent m = {m}"
            )))
        }
    });

    match (traits.p_group, traits.derived_length) {
        (Some(p), Some(d)) => {
            run_check(&mut out, Suite::Exponent, "exp.p_group_bound", || {
                let e_r = cay.subgroup_exponent(&chi.r);
                let product_bound = traits.derived_exponent * traits.exponent;
                let length_bound = if p == 2 {
                    checked_pow(2, d)
                        .and_then(|a| checked_pow(traits.derived_exponent, d - 1).map(|b| a * b))
                } else {
                    checked_pow(traits.derived_exponent, d - 1)
                };
                let bound = match length_bound {
                    Some(lb) => product_bound.min(lb),
                    None => product_bound,
                };
                if bound % e_r == 0 {
                    Ok(format!(
                        "exp(R) = {e_r} divides the p-group bound {bound} (p = {p}, derived length {d})"
                    ))
                } else {
                    Err(fail(format!(
                        "exp(R) = {e_r} does not divide the p-group bound {bound} (p = {p}, derived length {d})"
                    )))
                }
            });
        }
        (Some(_), None) => push_status(
            &mut out,
            Suite::Exponent,
            "exp.p_group_bound",
            CheckStatus::Fail,
            "a p-group must be solvable, but no derived length was found",
        ),
        (None, _) => push_status(
            &mut out,
            Suite::Exponent,
            "exp.p_group_bound",
            CheckStatus::NotApplicable,
            "G is not a p-group",
        ),
    }

    if traits.abelian {
        run_check(&mut out, Suite::Exponent, "exp.abelian_r_squared", || {
            let e_r = cay.subgroup_exponent(&chi.r);
            if 2 % e_r == 0 {
                Ok(format!("exp(R) = {e_r}, so R² = 1 (|R| = {})", chi.r.order()))
            } else {
                Err(fail(format!("R² ≠ 1: exp(R) = {e_r}")))
            }
        });
    } else {
        push_status(
            &mut out,
            Suite::Exponent,
            "exp.abelian_r_squared",
            CheckStatus::NotApplicable,
            "G is not abelian",
        );
    }

    if traits.two_generated {
        run_check(
            &mut out,
            Suite::Exponent,
            "exp.two_generated_r_trivial",
            || {
                if chi.r.is_trivial() {
                    Ok(String::new())
                } else {
                    Err(fail(format!(
                        "G is 2-generated but |R| = {}",
                        chi.r.order()
                    )))
                }
            },
        );
    } else {
        push_status(
            &mut out,
            Suite::Exponent,
            "exp.two_generated_r_trivial",
            CheckStatus::NotApplicable,
            "G needs more than two generators",
        );
    }

    push_status(
        &mut out,
        Suite::Exponent,
        "exp.periodic_r",
        CheckStatus::NotApplicable,
        "every finite group is periodic; the statement has content only for infinite G",
    );
    push_status(
        &mut out,
        Suite::Exponent,
        "exp.l12_finite",
        CheckStatus::NotApplicable,
        "every subgroup here is finite; the statement has content only for infinite G",
    );

    out
}

// ---------------------------------------------------------------------------
// l12
// ---------------------------------------------------------------------------

/// Pairs `(gᵢ, hᵢ)` of base-element indices whose mixed commutators
/// `[gᵢ, hᵢᵠ]` generate `D` over `R`, chosen greedily in element order.
struct PairBasis {
    pairs: Vec<(u32, u32)>,
    exhausted: bool,
}

fn greedy_pair_basis(chi: &ChiComplex) -> PairBasis {
    let cay = &chi.cayley;
    let gsize = chi.base.cayley().size();
    let mut gens: Vec<u32> = chi.r.gens().to_vec();
    let mut span = cay.subgroup_from_gens(&gens);
    let mut pairs = Vec::new();
    for g in 0..gsize {
        for h in 0..gsize {
            let c = cay.comm(chi.embed_g[g as usize], chi.embed_phi[h as usize]);
            if !span.contains(c) {
                pairs.push((g, h));
                gens.push(c);
                span = cay.subgroup_from_gens(&gens);
            }
        }
    }
    // ⟨R ∪ chosen commutators⟩ must exhaust D: every conjugate of a mixed
    // commutator differs from another mixed commutator by an element of R.
    PairBasis {
        pairs,
        exhausted: span.set_eq(&chi.d),
    }
}

/// Runs the `L₁,₂` suite.
pub fn verify_l12(chi: &ChiComplex) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let cay = &chi.cayley;
    let gsize = chi.base.cayley().size();

    run_check(&mut out, Suite::L12, "l12.inside_r", || {
        if chi.l12.is_subset_of(&chi.r) {
            Ok(format!("|L₁,₂| = {}, |R| = {}", chi.l12.order(), chi.r.order()))
        } else {
            Err(fail(format!(
                "L₁,₂ (order {}) is not contained in R (order {})",
                chi.l12.order(),
                chi.r.order()
            )))
        }
    });

    run_check(&mut out, Suite::L12, "l12.in_w_central", || {
        if !chi.l12.is_subset_of(&chi.w) {
            return Err(fail("L₁,₂ is not contained in W"));
        }
        if !cay.centralizes(&chi.l12, &chi.l1) {
            return Err(fail("L₁,₂ does not centralize L₁"));
        }
        if !cay.centralizes(&chi.l12, &chi.l2) {
            return Err(fail("L₁,₂ does not centralize L₂"));
        }
        Ok(String::new())
    });

    let basis = greedy_pair_basis(chi);

    run_check(&mut out, Suite::L12, "l12.exterior_pair_basis", || {
        if !basis.exhausted {
            return Err(fail("greedy pair sweep did not exhaust D over R"));
        }
        let mut gens1: Vec<u32> = chi.r.gens().to_vec();
        let mut gens2: Vec<u32> = chi.r.gens().to_vec();
        for &(g, h) in &basis.pairs {
            let (g, h) = (g as usize, h as usize);
            // [g, h]·[h, gᵠ] generates L₁ over R; its φ-image generates L₂.
            gens1.push(cay.mult(
                cay.comm(chi.embed_g[g], chi.embed_g[h]),
                cay.comm(chi.embed_g[h], chi.embed_phi[g]),
            ));
            gens2.push(cay.mult(
                cay.comm(chi.embed_phi[g], chi.embed_phi[h]),
                cay.comm(chi.embed_phi[h], chi.embed_g[g]),
            ));
        }
        let span1 = cay.subgroup_from_gens(&gens1);
        if !span1.set_eq(&chi.l1) {
            return Err(fail(format!(
                "⟨[gᵢ,hᵢ][hᵢ,gᵢᵠ]⟩·R has order {} but |L₁| = {}",
                span1.order(),
                chi.l1.order()
            )));
        }
        let span2 = cay.subgroup_from_gens(&gens2);
        if !span2.set_eq(&chi.l2) {
            return Err(fail(format!(
                "⟨[gᵢᵠ,hᵢᵠ][hᵢᵠ,gᵢ]⟩·R has order {} but |L₂| = {}",
                span2.order(),
                chi.l2.order()
            )));
        }
        Ok(format!("{} pairs span D/R, L₁/R and L₂/R", basis.pairs.len()))
    });

    run_check(&mut out, Suite::L12, "l12.pair_generators", || {
        if !basis.exhausted {
            return Err(fail("greedy pair sweep did not exhaust D over R"));
        }
        let u: Vec<u32> = basis
            .pairs
            .iter()
            .map(|&(g, h)| cay.comm(chi.g_phi(g), chi.embed_g[h as usize]))
            .collect();
        let v: Vec<u32> = basis
            .pairs
            .iter()
            .map(|&(g, h)| cay.comm(chi.g_phi(g), chi.embed_phi[h as usize]))
            .collect();
        let mut seeds = Vec::with_capacity(u.len() * v.len());
        for &ui in &u {
            for &vj in &v {
                seeds.push(cay.comm(ui, vj));
            }
        }
        let span = cay.subgroup_from_gens(&seeds);
        if span.set_eq(&chi.l12) {
            Ok(format!(
                "L₁,₂ = ⟨{} commutators from {} pairs⟩",
                seeds.len(),
                basis.pairs.len()
            ))
        } else {
            Err(fail(format!(
                "the {}² pair commutators span order {} but |L₁,₂| = {}",
                basis.pairs.len(),
                span.order(),
                chi.l12.order()
            )))
        }
    });

    run_check(&mut out, Suite::L12, "l12.r_coset_generators", || {
        let diag: Vec<u32> = (0..gsize).map(|e| chi.g_phi(e)).collect();
        let mut seeds: HashSet<u32> = HashSet::new();
        for &gphi in &diag {
            for a in 0..gsize {
                let u = cay.comm(gphi, chi.embed_g[a as usize]);
                for b in 0..gsize {
                    seeds.insert(cay.comm(u, chi.embed_phi[b as usize]));
                }
            }
        }
        let mut gens: Vec<u32> = chi.l12.gens().to_vec();
        gens.extend(seeds.iter().copied());
        let span = cay.subgroup_from_gens(&gens);
        if span.set_eq(&chi.r) {
            Ok(format!(
                "R = ⟨L₁,₂ ∪ {} distinct [g,φ,a,bᵠ] values⟩",
                seeds.len()
            ))
        } else {
            Err(fail(format!(
                "⟨L₁,₂ ∪ [g,φ,a,bᵠ]⟩ has order {} but |R| = {}",
                span.order(),
                chi.r.order()
            )))
        }
    });

    out
}

// ---------------------------------------------------------------------------
// identity
// ---------------------------------------------------------------------------

/// Runs the sampled identity suite.
pub fn verify_identities(chi: &ChiComplex, cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    if cfg.samples == 0 {
        for id in IDENTITY_IDS {
            push_status(
                &mut out,
                Suite::Identity,
                id,
                CheckStatus::Skipped,
                "sampling disabled (samples = 0)",
            );
        }
        return out;
    }

    let cay = &chi.cayley;
    let gsize = chi.base.cayley().size();
    let gg = &chi.embed_g;
    let pp = &chi.embed_phi;
    let samples = cfg.samples;
    let seed = cfg.samples_seed;
    let ok = || Ok(format!("{samples} samples"));

    run_check(&mut out, Suite::Identity, "id.symmetry", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let x = sample_below(&mut rng, gsize) as usize;
            let y = sample_below(&mut rng, gsize) as usize;
            let lhs = cay.comm(gg[x], pp[y]);
            let rhs = cay.comm(pp[x], gg[y]);
            if lhs != rhs {
                return Err(fail(format!(
                    "x = {}, y = {}: [x,yᵠ] = {lhs} but [xᵠ,y] = {rhs}",
                    base_word(chi, x as u32),
                    base_word(chi, y as u32)
                )));
            }
        }
        ok()
    });

    run_check(&mut out, Suite::Identity, "id.conjugate_transfer", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let x = sample_below(&mut rng, gsize) as usize;
            let y = sample_below(&mut rng, gsize) as usize;
            let z = sample_below(&mut rng, gsize) as usize;
            let c = cay.comm(gg[x], pp[y]);
            if cay.conj(c, pp[z]) != cay.conj(c, gg[z]) {
                return Err(fail(format!(
                    "x = {}, y = {}, z = {}: conjugation by zᵠ and z differ on [x,yᵠ]",
                    base_word(chi, x as u32),
                    base_word(chi, y as u32),
                    base_word(chi, z as u32)
                )));
            }
        }
        ok()
    });

    run_check(&mut out, Suite::Identity, "id.word_transfer", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let x = sample_below(&mut rng, gsize) as usize;
            let y = sample_below(&mut rng, gsize) as usize;
            let c = cay.comm(gg[x], pp[y]);
            let len = 1 + sample_below(&mut rng, 5);
            let mut marked = 0u32; // ω with φ-markings
            let mut plain = 0u32; // the same ω with every εᵢ = 1
            for _ in 0..len {
                let z = sample_below(&mut rng, gsize) as usize;
                let phi_marked = rng.next_u32() & 1 == 1;
                let inverted = rng.next_u32() & 1 == 1;
                let mut fm = if phi_marked { pp[z] } else { gg[z] };
                let mut fp = gg[z];
                if inverted {
                    fm = cay.inv(fm);
                    fp = cay.inv(fp);
                }
                marked = cay.mult(marked, fm);
                plain = cay.mult(plain, fp);
            }
            if cay.conj(c, marked) != cay.conj(c, plain) {
                return Err(fail(format!(
                    "x = {}, y = {}: conjugating [x,yᵠ] by a φ-marked word (χ element {marked}) and its unmarked form ({plain}) differ",
                    base_word(chi, x as u32),
                    base_word(chi, y as u32)
                )));
            }
        }
        ok()
    });

    run_check(&mut out, Suite::Identity, "id.bracket_swap", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let x = sample_below(&mut rng, gsize) as usize;
            let y = sample_below(&mut rng, gsize) as usize;
            let lhs = cay.comm(cay.comm(pp[x], gg[y]), gg[x]);
            let rhs = cay.comm(cay.comm(gg[x], gg[y]), pp[x]);
            if lhs != rhs {
                return Err(fail(format!(
                    "x = {}, y = {}: [xᵠ,y,x] = {lhs} but [x,y,xᵠ] = {rhs}",
                    base_word(chi, x as u32),
                    base_word(chi, y as u32)
                )));
            }
        }
        ok()
    });

    run_check(&mut out, Suite::Identity, "id.bracket_swap_deep", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let x = sample_below(&mut rng, gsize) as usize;
            let depth = 1 + sample_below(&mut rng, 4);
            let mut lhs = pp[x];
            let mut rhs = gg[x];
            for _ in 0..depth {
                let y = sample_below(&mut rng, gsize) as usize;
                lhs = cay.comm(lhs, gg[y]);
                rhs = cay.comm(rhs, gg[y]);
            }
            lhs = cay.comm(lhs, gg[x]);
            rhs = cay.comm(rhs, pp[x]);
            if lhs != rhs {
                return Err(fail(format!(
                    "x = {}, depth {depth}: [xᵠ,y₁,…,yₙ,x] = {lhs} but [x,y₁,…,yₙ,xᵠ] = {rhs}",
                    base_word(chi, x as u32)
                )));
            }
        }
        ok()
    });

    run_check(&mut out, Suite::Identity, "id.l_commutator_split", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let g = sample_below(&mut rng, gsize) as usize;
            let h = sample_below(&mut rng, gsize) as usize;
            let t = cay.mult(cay.inv(pp[g]), gg[g]); // g⁻ᵠ·g
            let lhs = cay.comm(gg[h], t);
            let a = cay.comm(pp[g], gg[h]);
            let b = cay.comm(gg[h], gg[g]);
            if lhs != cay.mult(a, b) || lhs != cay.mult(b, a) {
                return Err(fail(format!(
                    "g = {}, h = {}: [h,g⁻ᵠg] ≠ [gᵠ,h][h,g] (or the factors do not commute)",
                    base_word(chi, g as u32),
                    base_word(chi, h as u32)
                )));
            }
        }
        ok()
    });

    run_check(&mut out, Suite::Identity, "id.lphi_commutator_split", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let g = sample_below(&mut rng, gsize) as usize;
            let h = sample_below(&mut rng, gsize) as usize;
            let t = cay.mult(cay.inv(gg[h]), pp[h]); // h⁻¹·hᵠ
            let lhs = cay.comm(t, pp[g]);
            let a = cay.comm(pp[g], gg[h]);
            let b = cay.comm(pp[h], pp[g]);
            if lhs != cay.mult(a, b) || lhs != cay.mult(b, a) {
                return Err(fail(format!(
                    "g = {}, h = {}: [h⁻¹hᵠ,gᵠ] ≠ [gᵠ,h][hᵠ,gᵠ] (or the factors do not commute)",
                    base_word(chi, g as u32),
                    base_word(chi, h as u32)
                )));
            }
        }
        ok()
    });

    run_check(&mut out, Suite::Identity, "id.l12_bilinear", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l1 = chi.l1.elems();
        let l2 = chi.l2.elems();
        for _ in 0..samples {
            let a1 = l1[sample_below(&mut rng, l1.len() as u32) as usize];
            let a2 = l1[sample_below(&mut rng, l1.len() as u32) as usize];
            let b1 = l2[sample_below(&mut rng, l2.len() as u32) as usize];
            let b2 = l2[sample_below(&mut rng, l2.len() as u32) as usize];
            let lhs = cay.comm(cay.mult(a1, a2), cay.mult(b1, b2));
            let rhs = cay.mult(
                cay.mult(cay.mult(cay.comm(a1, b1), cay.comm(a1, b2)), cay.comm(a2, b1)),
                cay.comm(a2, b2),
            );
            if lhs != rhs {
                return Err(fail(format!(
                    "α₁ = {a1}, α₂ = {a2} ∈ L₁, β₁ = {b1}, β₂ = {b2} ∈ L₂: [α₁α₂,β₁β₂] = {lhs} ≠ {rhs}"
                )));
            }
        }
        ok()
    });

    run_check(&mut out, Suite::Identity, "id.r_additive_mod_l12", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let g = sample_below(&mut rng, gsize);
            let h = sample_below(&mut rng, gsize);
            let a = sample_below(&mut rng, gsize) as usize;
            let b = sample_below(&mut rng, gsize) as usize;
            let lhs = cay.comm(
                cay.comm(cay.mult(chi.g_phi(g), chi.g_phi(h)), gg[a]),
                pp[b],
            );
            let rhs = cay.mult(
                cay.comm(cay.comm(chi.g_phi(g), gg[a]), pp[b]),
                cay.comm(cay.comm(chi.g_phi(h), gg[a]), pp[b]),
            );
            if !chi.l12.contains(cay.mult(lhs, cay.inv(rhs))) {
                return Err(fail(format!(
                    "g = {}, h = {}, a = {}, b = {}: the two sides differ by χ element {} ∉ L₁,₂",
                    base_word(chi, g),
                    base_word(chi, h),
                    base_word(chi, a as u32),
                    base_word(chi, b as u32),
                    cay.mult(lhs, cay.inv(rhs))
                )));
            }
        }
        ok()
    });

    run_check(&mut out, Suite::Identity, "id.r_additive_exact", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let g = sample_below(&mut rng, gsize);
            let h = sample_below(&mut rng, gsize);
            let a = sample_below(&mut rng, gsize) as usize;
            let b = sample_below(&mut rng, gsize) as usize;
            let c = sample_below(&mut rng, gsize) as usize;
            let u = cay.comm(chi.g_phi(g), gg[a]);
            let v = cay.comm(chi.g_phi(h), gg[b]);
            let lhs = cay.comm(cay.mult(u, v), pp[c]);
            let rhs = cay.mult(cay.comm(u, pp[c]), cay.comm(v, pp[c]));
            if lhs != rhs {
                return Err(fail(format!(
                    "g = {}, h = {}, a = {}, b = {}, c = {}: [[g,φ,a][h,φ,b],cᵠ] = {lhs} ≠ {rhs}",
                    base_word(chi, g),
                    base_word(chi, h),
                    base_word(chi, a as u32),
                    base_word(chi, b as u32),
                    base_word(chi, c as u32)
                )));
            }
        }
        ok()
    });

    run_check(&mut out, Suite::Identity, "id.l_swap_tail", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = chi.l.elems();
        for _ in 0..samples {
            let alpha = l[sample_below(&mut rng, l.len() as u32) as usize];
            let a = sample_below(&mut rng, gsize) as usize;
            let g = sample_below(&mut rng, gsize) as usize;
            let b = sample_below(&mut rng, gsize) as usize;
            let head = cay.comm(alpha, gg[a]);
            let lhs = cay.comm(cay.comm(head, gg[g]), pp[b]);
            let rhs = cay.comm(cay.comm(head, pp[b]), gg[g]);
            if lhs != rhs {
                return Err(fail(format!(
                    "α = {alpha} ∈ L, a = {}, g = {}, b = {}: [α,a,g,bᵠ] = {lhs} ≠ [α,a,bᵠ,g] = {rhs}",
                    base_word(chi, a as u32),
                    base_word(chi, g as u32),
                    base_word(chi, b as u32)
                )));
            }
        }
        ok()
    });

    run_check(&mut out, Suite::Identity, "id.lphi_swap_tail", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = chi.l.elems();
        for _ in 0..samples {
            let alpha = l[sample_below(&mut rng, l.len() as u32) as usize];
            let a = sample_below(&mut rng, gsize) as usize;
            let g = sample_below(&mut rng, gsize) as usize;
            let b = sample_below(&mut rng, gsize) as usize;
            let head = cay.comm(alpha, pp[a]);
            let lhs = cay.comm(cay.comm(head, pp[g]), gg[b]);
            let rhs = cay.comm(cay.comm(head, gg[b]), pp[g]);
            if lhs != rhs {
                return Err(fail(format!(
                    "α = {alpha} ∈ L, a = {}, g = {}, b = {}: [α,aᵠ,gᵠ,b] = {lhs} ≠ [α,aᵠ,b,gᵠ] = {rhs}",
                    base_word(chi, a as u32),
                    base_word(chi, g as u32),
                    base_word(chi, b as u32)
                )));
            }
        }
        ok()
    });

    out
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

/// `[init, [init, w], [init, w, w], …]`, ending with the stable term.
fn stable_tower(
    cay: &CayleyGroup,
    init: &CayleySubgroup,
    with: &CayleySubgroup,
) -> Vec<CayleySubgroup> {
    let mut tower = vec![init.clone()];
    while tower.len() < 64 {
        let last = tower.last().expect("nonempty");
        let next = cay.commutator_subgroup(last, with);
        if next.order() == last.order() {
            break;
        }
        let stop = next.is_trivial();
        tower.push(next);
        if stop {
            break;
        }
    }
    tower
}

/// Term `n` of a stabilized tower (constant past the stored tail).
fn at(tower: &[CayleySubgroup], n: usize) -> &CayleySubgroup {
    &tower[n.min(tower.len() - 1)]
}

/// `top⁽ᵏ⁾`: `k` successive derived subgroups.
fn derived_term(cay: &CayleyGroup, top: &CayleySubgroup, k: u32) -> CayleySubgroup {
    let mut cur = top.clone();
    for _ in 0..k {
        let next = cay.commutator_subgroup(&cur, &cur);
        if next.order() == cur.order() {
            return cur;
        }
        cur = next;
    }
    cur
}

/// The product *set* `F₁·F₂·…` as a sorted element list, or `None` when the
/// number of elementwise products would exceed `cap`.
fn product_set(cay: &CayleyGroup, factors: &[&CayleySubgroup], cap: u64) -> Option<Vec<u32>> {
    let mut cur: Vec<u32> = vec![0];
    let mut cost = 0u64;
    for f in factors {
        cost = cost.saturating_add(cur.len() as u64 * f.order());
        if cost > cap {
            return None;
        }
        let mut next: HashSet<u32> = HashSet::with_capacity(cur.len());
        for &s in &cur {
            for &x in f.elems() {
                next.insert(cay.mult(s, x));
            }
        }
        cur = next.into_iter().collect();
        cur.sort_unstable();
    }
    Some(cur)
}

/// Runs the series suite.
pub fn verify_series(
    chi: &ChiComplex,
    traits: &GroupTraits,
    cfg: &VerifyConfig,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let cay = &chi.cayley;
    let full = cay.full_subgroup();
    let lcs = lower_central_series(cay, &full);
    let tower_d = stable_tower(cay, &chi.d, &chi.sub_g);
    let tower_l1 = stable_tower(cay, &chi.l1, &chi.sub_g);
    let tower_l2 = stable_tower(cay, &chi.l2, &chi.sub_phi);
    let tower_r = stable_tower(cay, &chi.r, &chi.sub_g);

    run_check(&mut out, Suite::Series, "series.derived_decomposition", || {
        let chi_prime = cay.commutator_subgroup(&full, &full);
        let mut gens = chi.l1.gens().to_vec();
        gens.extend_from_slice(chi.l2.gens());
        let l1l2 = cay.subgroup_from_gens(&gens);
        let rep = central_product(cay, &[&chi.d, &l1l2], None, &chi_prime);
        if rep.holds() {
            Ok(format!(
                "χ′ = D ∘ L₁L₂ with |χ′| = {}, |D| = {}, |L₁L₂| = {}",
                rep.target_order,
                chi.d.order(),
                l1l2.order()
            ))
        } else {
            Err(fail(describe_central_product("χ′ vs D ∘ L₁L₂", &rep)))
        }
    });

    run_check(&mut out, Suite::Series, "series.second_derived", || {
        let chi_second = derived_term(cay, &full, 2);
        let dp = cay.commutator_subgroup(&chi.d, &chi.d);
        let l1p = cay.commutator_subgroup(&chi.l1, &chi.l1);
        let l2p = cay.commutator_subgroup(&chi.l2, &chi.l2);
        for (name, sub) in [
            ("D′", &dp),
            ("L₁′", &l1p),
            ("L₂′", &l2p),
            ("L₁,₂", &chi.l12),
        ] {
            if !sub.is_subset_of(&chi_second) {
                return Err(fail(format!("{name} is not contained in χ⁽²⁾")));
            }
        }
        let Some(product) = product_set(cay, &[&dp, &l1p, &l2p, &chi.l12], cfg.product_cap)
        else {
            return Err(Flunk::Skip(format!(
                "product-set computation exceeds the cap of {} multiplications",
                cfg.product_cap
            )));
        };
        if product == chi_second.elems() {
            Ok(format!(
                "χ⁽²⁾ = D′·L₁′·L₂′·L₁,₂ as a product set of order {}",
                chi_second.order()
            ))
        } else {
            Err(fail(format!(
                "the product set D′·L₁′·L₂′·L₁,₂ has {} elements but |χ⁽²⁾| = {}",
                product.len(),
                chi_second.order()
            )))
        }
    });

    run_check(&mut out, Suite::Series, "series.higher_derived", || {
        // Walk all four derived series in lockstep, one commutator subgroup
        // per round.  Every descending derived series stabilizes; once all
        // four have (at the trivial group for a solvable χ, at a perfect
        // term otherwise), later rounds repeat the same statement verbatim.
        let mut target = derived_term(cay, &full, 3);
        let mut dk = derived_term(cay, &chi.d, 2);
        let mut l1k = derived_term(cay, &chi.l1, 2);
        let mut l2k = derived_term(cay, &chi.l2, 2);
        let mut k = 2u32;
        loop {
            let rep = central_product(cay, &[&dk, &l1k, &l2k], None, &target);
            if !rep.holds() {
                return Err(fail(describe_central_product(
                    &format!("k = {k}: χ⁽ᵏ⁺¹⁾ vs D⁽ᵏ⁾ ∘ L₁⁽ᵏ⁾ ∘ L₂⁽ᵏ⁾"),
                    &rep,
                )));
            }
            if target.is_trivial() {
                return Ok(format!("verified for k = 2..={k} (χ⁽ᵏ⁺¹⁾ trivial at k = {k})"));
            }
            let nt = cay.commutator_subgroup(&target, &target);
            let nd = cay.commutator_subgroup(&dk, &dk);
            let n1 = cay.commutator_subgroup(&l1k, &l1k);
            let n2 = cay.commutator_subgroup(&l2k, &l2k);
            if nt.order() == target.order()
                && nd.order() == dk.order()
                && n1.order() == l1k.order()
                && n2.order() == l2k.order()
            {
                return Ok(format!("verified for k = 2..={k} (every term stable from k = {k})"));
            }
            target = nt;
            dk = nd;
            l1k = n1;
            l2k = n2;
            k += 1;
            if k > 16 {
                return Err(fail("derived series of χ did not stabilize by k = 16"));
            }
        }
    });

    run_check(&mut out, Suite::Series, "series.gamma_formula", || {
        let top_n = lcs.len() + 1; // one step into the stable tail
        for n in 3..=top_n.max(3) {
            let gamma = at(&lcs, n - 1);
            let bd = at(&tower_d, n - 2);
            let b1 = at(&tower_l1, n - 2);
            let b2 = at(&tower_l2, n - 2);
            let mut gens = bd.gens().to_vec();
            gens.extend_from_slice(b1.gens());
            gens.extend_from_slice(b2.gens());
            let rhs = cay.subgroup_from_gens(&gens);
            if !rhs.set_eq(gamma) {
                return Err(fail(format!(
                    "n = {n}: γₙ(χ) has order {} but [D,ₙ₋₂G][L₁,ₙ₋₂G][L₂,ₙ₋₂Gᵠ] has order {}",
                    gamma.order(),
                    rhs.order()
                )));
            }
        }
        Ok(format!("γₙ matches the bracket product for n = 3..={}", top_n.max(3)))
    });

    run_check(&mut out, Suite::Series, "series.bracket_normality", || {
        let conj = chi_generators(chi);
        for (name, tower) in [
            ("[D,ₙG]", &tower_d),
            ("[L₁,ₙG]", &tower_l1),
            ("[L₂,ₙGᵠ]", &tower_l2),
        ] {
            for n in 1..=tower.len() {
                if !is_normal(cay, at(tower, n), &conj) {
                    return Err(fail(format!("{name} is not normal in χ at n = {n}")));
                }
            }
        }
        Ok(String::new())
    });

    run_check(
        &mut out,
        Suite::Series,
        "series.r_bracket_intersections",
        || {
            for n in 1..=tower_r.len() {
                let rn = at(&tower_r, n);
                for (name, tower) in [
                    ("[D,ₙ₊₁G]", &tower_d),
                    ("[L₁,ₙ₊₁G]", &tower_l1),
                    ("[L₂,ₙ₊₁Gᵠ]", &tower_l2),
                ] {
                    if !rn.is_subset_of(at(tower, n + 1)) {
                        return Err(fail(format!("[R,ₙG] ⊄ {name} at n = {n}")));
                    }
                }
            }
            Ok(format!("verified for n = 1..={}", tower_r.len()))
        },
    );

    match traits.nilpotency_class {
        Some(c) if c >= 1 => {
            let c = c as usize;
            run_check(&mut out, Suite::Series, "series.r_dominates_at_class", || {
                let bound = at(&tower_r, c - 1);
                for (name, tower) in [
                    ("[D,꜀G]", &tower_d),
                    ("[L₁,꜀G]", &tower_l1),
                    ("[L₂,꜀Gᵠ]", &tower_l2),
                ] {
                    if !at(tower, c).is_subset_of(bound) {
                        return Err(fail(format!(
                            "{name} ⊄ [R,꜀₋₁G] at class c = {c}"
                        )));
                    }
                }
                Ok(format!("all three class-{c} brackets lie in [R,{}G]", c - 1))
            });

            run_check(&mut out, Suite::Series, "series.nilpotent_gamma_chain", || {
                for n in c..=c + 2 {
                    let gamma = at(&lcs, n + 1); // γ_{n+2}
                    for (name, tower, idx) in [
                        ("[R,ₙ₋₁G]", &tower_r, n - 1),
                        ("[D,ₙG]", &tower_d, n),
                        ("[L₁,ₙG]", &tower_l1, n),
                        ("[L₂,ₙGᵠ]", &tower_l2, n),
                    ] {
                        if !at(tower, idx).set_eq(gamma) {
                            return Err(fail(format!(
                                "n = {n}: γₙ₊₂(χ) has order {} but {name} has order {}",
                                gamma.order(),
                                at(tower, idx).order()
                            )));
                        }
                    }
                }
                let tail = at(&tower_r, c); // = γ_{c+3}(χ) by the chain above
                let e = cay.subgroup_exponent(tail);
                if 2 % e != 0 {
                    return Err(fail(format!(
                        "γ꜀₊₃(χ) = [R,꜀G] has exponent {e}, so its square is nontrivial"
                    )));
                }
                Ok(format!(
                    "chain equalities hold for n = {c}..={}, and |γ꜀₊₃(χ)| = {} with square 1",
                    c + 2,
                    tail.order()
                ))
            });
        }
        _ => {
            for id in ["series.r_dominates_at_class", "series.nilpotent_gamma_chain"] {
                push_status(
                    &mut out,
                    Suite::Series,
                    id,
                    CheckStatus::NotApplicable,
                    "G is not nilpotent",
                );
            }
        }
    }

    out
}

// ---------------------------------------------------------------------------
// homology
// ---------------------------------------------------------------------------

/// Runs the homology suite.
pub fn verify_homology(chi: &ChiComplex, cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let cay = &chi.cayley;

    if chi.base.order() > cfg.multiplier_order_cap {
        let reason = format!(
            "|G| = {} exceeds the multiplier-oracle cap of {} \
             (the cocycle system would have ({}−1)³ equations)",
            chi.base.order(),
            cfg.multiplier_order_cap,
            chi.base.order()
        );
        for id in [
            "hom.oracle",
            "hom.w_section",
            "hom.d_section",
            "hom.exterior_sections",
        ] {
            push_status(&mut out, Suite::Homology, id, CheckStatus::Skipped, reason.as_str());
        }
        return out;
    }

    let (oracle_result, oracle_ms) = timed(|| schur_multiplier(&chi.base));
    let oracle = match oracle_result {
        Ok(oracle) => {
            out.push(CheckResult {
                id: "hom.oracle",
                suite: Suite::Homology,
                status: CheckStatus::Pass,
                detail: format!(
                    "M(G) = {}, H² over the cyclic coefficient rings carries {}, G_ab = {}",
                    oracle.multiplier, oracle.h2, oracle.abelianization
                ),
                elapsed_ms: oracle_ms,
            });
            Some(oracle)
        }
        Err(e) => {
            out.push(CheckResult {
                id: "hom.oracle",
                suite: Suite::Homology,
                status: CheckStatus::Fail,
                detail: format!("multiplier oracle failed: {e}"),
                elapsed_ms: oracle_ms,
            });
            None
        }
    };

    let Some(oracle) = oracle else {
        for id in ["hom.w_section", "hom.d_section", "hom.exterior_sections"] {
            push_status(
                &mut out,
                Suite::Homology,
                id,
                CheckStatus::Skipped,
                "multiplier oracle unavailable",
            );
        }
        return out;
    };

    run_check(&mut out, Suite::Homology, "hom.w_section", || {
        if !cay.centralizes(&chi.w, &chi.w) {
            return Err(fail("W is not abelian, so W/R cannot match M(G)"));
        }
        let census = cay
            .quotient_order_statistics(&chi.w, &chi.r)
            .map_err(|e| fail(format!("W/R census failed: {e}")))?;
        let inv = invariants_from_order_counts(&census)
            .map_err(|e| fail(format!("W/R census is not abelian-consistent: {e}")))?;
        if inv.divisors == oracle.multiplier.divisors {
            Ok(format!("W/R ≅ {} = M(G)", inv))
        } else {
            Err(fail(format!(
                "W/R ≅ {} but the multiplier oracle gives {}",
                inv, oracle.multiplier
            )))
        }
    });

    run_check(&mut out, Suite::Homology, "hom.d_section", || {
        let g_cay = chi.base.cayley();
        let g_full = g_cay.full_subgroup();
        let g_derived = g_cay.commutator_subgroup(&g_full, &g_full).order();
        let expected = chi.r.order() * g_derived * oracle.multiplier.order();
        if chi.d.order() == expected {
            Ok(format!(
                "|D/R| = {} = |G′|·|M(G)| = {}·{}",
                chi.d.order() / chi.r.order(),
                g_derived,
                oracle.multiplier.order()
            ))
        } else {
            Err(fail(format!(
                "|D| = {} but |R|·|G′|·|M(G)| = {}",
                chi.d.order(),
                expected
            )))
        }
    });

    run_check(&mut out, Suite::Homology, "hom.exterior_sections", || {
        let d_census = cay
            .quotient_order_statistics(&chi.d, &chi.r)
            .map_err(|e| fail(format!("D/R census failed: {e}")))?;
        for (name, sub) in [("L₁", &chi.l1), ("L₂", &chi.l2)] {
            let census = cay
                .quotient_order_statistics(sub, &chi.r)
                .map_err(|e| fail(format!("{name}/R census failed: {e}")))?;
            if census != d_census {
                return Err(fail(format!(
                    "the coset-order census of {name}/R differs from D/R's"
                )));
            }
        }
        let size: u64 = d_census.values().sum();
        Ok(format!(
            "D/R, L₁/R, L₂/R share one census ({size} cosets)"
        ))
    });

    out
}

// ---------------------------------------------------------------------------
// nu
// ---------------------------------------------------------------------------

/// Runs the ν suite against a realized ν(G) of the same base group.
pub fn verify_nu(chi: &ChiComplex, nu: &NuComplex) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let ncay = &nu.cayley;

    run_check(&mut out, Suite::Nu, "nu.consistency", || {
        let link = nu_chi_consistency(nu, chi);
        if link.holds() {
            Ok(format!(
                "|ν|/|Δ| = {}/{} = |χ|/|R| = {}/{}",
                link.nu_order, link.delta_order, link.chi_order, link.r_order
            ))
        } else if let Some(i) = link.offending_relator {
            Err(fail(format!(
                "ν-relator {i} does not evaluate into R inside χ"
            )))
        } else {
            Err(fail(format!(
                "|ν|/|Δ| = {}/{} but |χ|/|R| = {}/{}",
                link.nu_order, link.delta_order, link.chi_order, link.r_order
            )))
        }
    });

    run_check(&mut out, Suite::Nu, "nu.delta_central", || {
        let all: Vec<u32> = (0..2 * nu.base.ngens()).map(|i| ncay.gen_element(i)).collect();
        for &d in nu.delta.gens() {
            for &g in &all {
                if ncay.comm(d, g) != 0 {
                    return Err(fail(format!(
                        "Δ generator {d} does not commute with ν generator {g}"
                    )));
                }
            }
        }
        if !nu.delta.is_subset_of(&nu.y1) {
            return Err(fail("Δ is not contained in Υ₁"));
        }
        Ok(format!("|Δ| = {}", nu.delta.order()))
    });

    run_check(&mut out, Suite::Nu, "nu.exterior_sections", || {
        let y1_census = ncay
            .quotient_order_statistics(&nu.y1, &nu.delta)
            .map_err(|e| fail(format!("Υ₁/Δ census failed: {e}")))?;
        for (name, sub) in [("Υ₂", &nu.y2), ("Υ₃", &nu.y3)] {
            let census = ncay
                .quotient_order_statistics(sub, &nu.delta)
                .map_err(|e| fail(format!("{name}/Δ census failed: {e}")))?;
            if census != y1_census {
                return Err(fail(format!(
                    "the coset-order census of {name}/Δ differs from Υ₁/Δ's"
                )));
            }
        }
        let d_census = chi
            .cayley
            .quotient_order_statistics(&chi.d, &chi.r)
            .map_err(|e| fail(format!("D/R census failed: {e}")))?;
        if y1_census != d_census {
            return Err(fail(
                "the Υᵢ/Δ census differs from the D/R census in χ",
            ));
        }
        let size: u64 = y1_census.values().sum();
        Ok(format!(
            "Υ₁/Δ, Υ₂/Δ, Υ₃/Δ and D/R share one census ({size} cosets)"
        ))
    });

    run_check(&mut out, Suite::Nu, "nu.derived_decomposition", || {
        let full = ncay.full_subgroup();
        let nu_prime = ncay.commutator_subgroup(&full, &full);
        let rep = central_product(ncay, &[&nu.y1, &nu.y2, &nu.y3], None, &nu_prime);
        if rep.holds() {
            Ok(format!(
                "ν′ = Υ₁ ∘ Υ₂ ∘ Υ₃ with |ν′| = {}",
                rep.target_order
            ))
        } else {
            Err(fail(describe_central_product("ν′ vs Υ₁ ∘ Υ₂ ∘ Υ₃", &rep)))
        }
    });

    out
}

// ---------------------------------------------------------------------------
// driver
// ---------------------------------------------------------------------------

/// Runs the requested suites in the given order and returns all check
/// results.  The ν suite needs a realized [`NuComplex`]; when `nu` is `None`
/// its checks are reported as skipped.
pub fn run_suites(
    chi: &ChiComplex,
    nu: Option<&NuComplex>,
    suites: &[Suite],
    cfg: &VerifyConfig,
) -> Result<Vec<CheckResult>, ChiError> {
    let traits = group_traits(&chi.base)?;
    let mut out = Vec::new();
    for &suite in suites {
        match suite {
            Suite::Structural => out.extend(verify_structural(chi)),
            Suite::Exponent => out.extend(verify_exponent(chi, &traits)),
            Suite::L12 => out.extend(verify_l12(chi)),
            Suite::Identity => out.extend(verify_identities(chi, cfg)),
            Suite::Series => out.extend(verify_series(chi, &traits, cfg)),
            Suite::Homology => out.extend(verify_homology(chi, cfg)),
            Suite::Nu => match nu {
                Some(nu) => out.extend(verify_nu(chi, nu)),
                None => {
                    for id in NU_IDS {
                        push_status(
                            &mut out,
                            Suite::Nu,
                            id,
                            CheckStatus::Skipped,
                            "no realized ν(G) supplied",
                        );
                    }
                }
            },
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chi::{chi_names, chi_presentation, realize_chi, realize_chi_from_presentation};
    use crate::nu::{realize_nu, NuScope};
    use crate::presentation::Presentation;
    use crate::testgroups::{a4, h27, q8, s3, v4, z, z2cubed};
    use crate::word::Word;

    fn cfg(samples: u32) -> VerifyConfig {
        VerifyConfig {
            samples,
            samples_seed: 42,
            ..VerifyConfig::default()
        }
    }

    fn assert_no_failures(results: &[CheckResult], label: &str) {
        for r in results {
            assert_ne!(
                r.status,
                CheckStatus::Fail,
                "{label}: check {} failed: {}",
                r.id,
                r.detail
            );
        }
    }

    #[test]
    fn all_checks_pass_on_small_groups() {
        // A 2-generated abelian group, a non-nilpotent solvable group, a
        // 2-group with a cyclic center, and a non-nilpotent group with a
        // nontrivial multiplier.
        for (label, base) in [
            ("V4", v4()),
            ("S3", s3()),
            ("Q8", q8()),
            ("A4", a4()),
        ] {
            let chi = realize_chi(&base, 200_000).unwrap();
            let results = run_suites(&chi, None, &Suite::ALL, &cfg(150)).unwrap();
            assert_no_failures(&results, label);
            // The ν suite was requested without a ν, so it must be skipped.
            assert!(results
                .iter()
                .filter(|r| r.suite == Suite::Nu)
                .all(|r| r.status == CheckStatus::Skipped));
        }
    }

    #[test]
    fn all_checks_pass_on_nilpotent_groups() {
        // H27 exercises the nilpotent chain at class 2 for an odd prime;
        // Z2³ exercises a non-2-generated abelian group where R ≠ 1.
        for (label, base) in [("H27", h27()), ("Z2^3", z2cubed())] {
            let chi = realize_chi(&base, 200_000).unwrap();
            let results = run_suites(&chi, None, &Suite::ALL, &cfg(100)).unwrap();
            assert_no_failures(&results, label);
        }
        // For the elementary abelian 2-group of rank 3 the construction is
        // genuinely larger than T(G): R is nontrivial.
        let chi = realize_chi(&z2cubed(), 200_000).unwrap();
        assert!(!chi.r.is_trivial());
        assert!(chi.order() > chi.t.order());
    }

    #[test]
    fn nu_suite_passes_for_v4_and_s3() {
        for (label, base) in [("V4", v4()), ("S3", s3())] {
            let chi = realize_chi(&base, 200_000).unwrap();
            let nu = realize_nu(&base, NuScope::AllElements, 200_000, 1_000_000).unwrap();
            let results = run_suites(&chi, Some(&nu), &[Suite::Nu], &cfg(50)).unwrap();
            assert_no_failures(&results, label);
            assert_eq!(results.len(), NU_IDS.len());
            assert!(results.iter().all(|r| r.status == CheckStatus::Pass));
        }
    }

    #[test]
    fn identity_suite_skips_when_sampling_disabled() {
        let chi = realize_chi(&v4(), 100_000).unwrap();
        let results = verify_identities(&chi, &cfg(0));
        assert_eq!(results.len(), IDENTITY_IDS.len());
        assert!(results.iter().all(|r| r.status == CheckStatus::Skipped));
    }

    #[test]
    fn registry_ids_are_unique_and_suites_complete() {
        let chi = realize_chi(&z(4), 100_000).unwrap();
        let results = run_suites(&chi, None, &Suite::ALL, &cfg(25)).unwrap();
        let mut ids: Vec<&str> = results.iter().map(|r| r.id).collect();
        let total = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), total, "duplicate check identifiers");
        // 11 structural + 8 exponent + 5 l12 + 12 identity + 8 series +
        // 4 homology + 4 nu.
        assert_eq!(total, 52);
    }

    #[test]
    fn traits_capture_the_right_group_facts() {
        let t = group_traits(&s3()).unwrap();
        assert!(!t.abelian);
        assert!(t.two_generated);
        assert_eq!(t.p_group, None);
        assert_eq!(t.nilpotency_class, None);
        assert_eq!(t.derived_length, Some(2));
        assert_eq!(t.exponent, 6);
        assert_eq!(t.derived_exponent, 3);
        assert_eq!(t.commutator_exponent, 3);

        let t = group_traits(&z2cubed()).unwrap();
        assert!(t.abelian);
        assert!(!t.two_generated, "rank-3 elementary abelian is not 2-generated");
        assert_eq!(t.p_group, Some(2));
        assert_eq!(t.nilpotency_class, Some(1));
        assert_eq!(t.exponent, 2);
        assert_eq!(t.commutator_exponent, 1);

        let t = group_traits(&h27()).unwrap();
        assert_eq!(t.p_group, Some(3));
        assert_eq!(t.nilpotency_class, Some(2));
        assert!(t.two_generated);
        assert_eq!(t.exponent, 3);
        assert_eq!(t.derived_exponent, 3);
    }

    #[test]
    fn collapsed_quotient_fixture_is_flagged_by_homology() {
        // Impose the extra relator [a, bᵠ] on top of the honest χ(V4)
        // presentation.  The result is the proper quotient χ(V4)/D ≅ V4 × V4
        // of order 16: still a sound construction (bijective embeddings,
        // surjective maps, exact kernel arithmetic), so it realizes without
        // error — but it is not χ(V4), and the multiplier sections W/R and
        // D/R have the wrong sizes.  The homology suite must notice.
        let base = v4();
        let honest = chi_presentation(&base).unwrap();
        let mut relators = honest.relators().to_vec();
        relators.push(Word::generator(0).commutator(&Word::generator(3)));
        let pres = Presentation::new(chi_names(&base), relators).unwrap();
        let fake = realize_chi_from_presentation(&base, pres, 100_000).unwrap();
        assert_eq!(fake.order(), 16, "the extra relator collapses χ(V4) to G × G");
        assert_no_failures(&verify_structural(&fake), "collapsed quotient, structural");
        let results = verify_homology(&fake);
        let by_id = |id: &str| {
            results
                .iter()
                .find(|r| r.id == id)
                .unwrap_or_else(|| panic!("missing {id}"))
        };
        assert_eq!(by_id("hom.oracle").status, CheckStatus::Pass);
        assert_eq!(
            by_id("hom.w_section").status,
            CheckStatus::Fail,
            "W/R is trivial in the quotient but M(V4) = Z2"
        );
        assert_eq!(by_id("hom.d_section").status, CheckStatus::Fail);
    }

    #[test]
    fn twisted_embedding_is_flagged() {
        // Swap the φ-images of two non-identity elements of different
        // orders, so the twisted φ is not even a homomorphism.  The honest
        // kernels are untouched (so the kernel-order arithmetic still
        // passes), but the diagonal property and the sampled identities see
        // the wrong φ-pairing.  (Swapping two elements of the *same* cyclic
        // subgroup, or applying an automorphism, would genuinely preserve
        // the identities — elements of orders 3 and 2 admit no such escape.)
        let mut chi = realize_chi(&s3(), 100_000).unwrap();
        assert_ne!(
            chi.base.cayley().element_order(1),
            chi.base.cayley().element_order(3),
            "fixture relies on swapping elements of different orders"
        );
        chi.embed_phi.swap(1, 3);
        let structural = verify_structural(&chi);
        let by_id = |id: &str| {
            structural
                .iter()
                .find(|r| r.id == id)
                .unwrap_or_else(|| panic!("missing {id}"))
                .status
        };
        assert_eq!(by_id("chi.diagonal_relators"), CheckStatus::Fail);
        assert_eq!(by_id("chi.kernel_orders"), CheckStatus::Pass);
        let identities = verify_identities(&chi, &cfg(200));
        assert!(
            identities.iter().any(|r| r.status == CheckStatus::Fail),
            "no sampled identity noticed the twisted embedding"
        );
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("spectral".parse::<Suite>().is_err());
    }
}
