//! The construction ν(G) (two copies of `G` with interchange relations) and
//! its consistency link with χ(G).
//!
//! For `G = ⟨X | S⟩`, ν(G) is generated by two copies of `G` subject to
//!
//! ```text
//! S(X), S(Xᵠ),
//! [g₁, g₂ᵠ]^{g₃}  = [g₁^{g₃}, (g₂^{g₃})ᵠ],
//! [g₁, g₂ᵠ]^{g₃ᵠ} = [g₁^{g₃}, (g₂^{g₃})ᵠ],
//! ```
//!
//! with the triples `(g₁, g₂, g₃)` ranging over a configurable
//! [`NuScope`]: over the generators (the cheap default) or over all group
//! elements (the literal definition, permitted for small `|G|`).  Inside ν
//! live the subgroups
//!
//! * `Δ = ⟨[g, gᵠ] : g ∈ G⟩` (normal closure),
//! * `Υ₁ = [G, Gᵠ]` — the subgroup playing the role of the tensor square,
//! * `Υ₂ = ⟨[h, g]·[g, hᵠ]⟩`, `Υ₃ = ⟨[hᵠ, gᵠ]·[g, hᵠ]⟩` (normal closures
//!   over all element pairs),
//!
//! and the structural link with χ is the isomorphism `χ/R ≅ ν/Δ`, verified
//! numerically by [`nu_chi_consistency`]: the quotient orders must agree and
//! every ν-relator must evaluate into `R` inside χ.

use alloc::vec::Vec;

use crate::cayley::{CayleyGroup, CayleySubgroup};
use crate::chi::{chi_names, embed_both, BaseGroup, ChiComplex, ChiError};
use crate::coset::todd_coxeter;
use crate::presentation::Presentation;
use crate::word::Word;

/// How the triples `(g₁, g₂, g₃)` of the interchange relations are sampled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NuScope {
    /// Triples over the generator set only: `2·n³` relators.
    Generators,
    /// Triples over all non-identity elements: `2·(|G|−1)³` relators — the
    /// literal definition, for small groups.
    AllElements,
}

/// Errors from building ν(G).
#[derive(thiserror::Error, Debug)]
pub enum NuError {
    /// The requested scope would need more relators than the cap allows.
    #[error("ν presentation needs {needed} relators, above the cap of {cap}")]
    RelatorCap {
        /// Relators the scope would generate.
        needed: u64,
        /// The configured cap.
        cap: u64,
    },
    /// An underlying construction failure.
    #[error(transparent)]
    Chi(#[from] ChiError),
}

impl From<crate::coset::CosetError> for NuError {
    fn from(e: crate::coset::CosetError) -> Self {
        NuError::Chi(ChiError::Coset(e))
    }
}

impl From<crate::presentation::PresentationError> for NuError {
    fn from(e: crate::presentation::PresentationError) -> Self {
        NuError::Chi(ChiError::Presentation(e))
    }
}

fn conj_word(w: &Word, c: &Word) -> Word {
    c.inverse().concat(w).concat(c)
}

/// The ν(G) presentation for the given triple scope.
pub fn nu_presentation(
    base: &BaseGroup,
    scope: NuScope,
    relator_cap: u64,
) -> Result<Presentation, NuError> {
    let n = base.ngens() as u16;
    let words: Vec<Word> = match scope {
        NuScope::Generators => (0..n).map(Word::generator).collect(),
        NuScope::AllElements => (1..base.cayley().size())
            .map(|e| base.element_word(e))
            .collect(),
    };
    let k = words.len() as u64;
    let needed = 2u64.saturating_mul(k.saturating_mul(k).saturating_mul(k));
    if needed > relator_cap {
        return Err(NuError::RelatorCap {
            needed,
            cap: relator_cap,
        });
    }
    let mut relators: Vec<Word> = base.presentation().relators().to_vec();
    relators.extend(
        base.presentation()
            .relators()
            .iter()
            .map(|r| r.map_generators(|g| g + n)),
    );
    for w1 in &words {
        for w2 in &words {
            let c12 = w1.commutator(&w2.map_generators(|g| g + n));
            for w3 in &words {
                let u = conj_word(w1, w3);
                let v = conj_word(w2, w3).map_generators(|g| g + n);
                let target_inv = u.commutator(&v).inverse();
                relators.push(conj_word(&c12, w3).concat(&target_inv));
                relators.push(
                    conj_word(&c12, &w3.map_generators(|g| g + n)).concat(&target_inv),
                );
            }
        }
    }
    Ok(Presentation::new(chi_names(base), relators)?)
}

/// ν(G) realized as a finite group with its distinguished subgroups.
#[derive(Clone, Debug)]
pub struct NuComplex {
    /// The base group `G`.
    pub base: BaseGroup,
    /// The triple scope the presentation used.
    pub scope: NuScope,
    /// The ν presentation.
    pub pres: Presentation,
    /// ν itself as a regular Cayley table.
    pub cayley: CayleyGroup,
    /// Element index of `ι(g)` in ν per element index of `G`.
    pub embed_g: Vec<u32>,
    /// Element index of `ιᵠ(g)` in ν.
    pub embed_phi: Vec<u32>,
    /// The first copy of `G` in ν.
    pub sub_g: CayleySubgroup,
    /// The second copy of `G` in ν.
    pub sub_phi: CayleySubgroup,
    /// `Δ = ⟨[g, gᵠ]⟩` (normal closure over all elements).
    pub delta: CayleySubgroup,
    /// `Υ₁ = [G, Gᵠ]`.
    pub y1: CayleySubgroup,
    /// `Υ₂ = ⟨[h, g]·[g, hᵠ]⟩` (normal closure over all element pairs).
    pub y2: CayleySubgroup,
    /// `Υ₃ = ⟨[hᵠ, gᵠ]·[g, hᵠ]⟩` (normal closure over all element pairs).
    pub y3: CayleySubgroup,
}

impl NuComplex {
    /// `|ν(G)|`.
    pub fn order(&self) -> u64 {
        u64::from(self.cayley.size())
    }
}

/// Builds ν(G) by coset enumeration, embeds both copies (with the same
/// bijectivity invariants as χ), and computes `Δ` and the three `Υᵢ`.
pub fn realize_nu(
    base: &BaseGroup,
    scope: NuScope,
    max_cosets: u32,
    relator_cap: u64,
) -> Result<NuComplex, NuError> {
    let pres = nu_presentation(base, scope, relator_cap)?;
    let table = todd_coxeter(&pres, &[], max_cosets)?;
    let cayley = CayleyGroup::from_regular_table(table);
    let (embed_g, embed_phi, sub_g, sub_phi) = embed_both(base, &cayley)?;

    let all_gens: Vec<u32> = (0..2 * base.ngens())
        .map(|i| cayley.gen_element(i))
        .collect();
    let g_order = base.order() as usize;

    // Δ over all elements; the Υᵢ over all element pairs.  Normal closures
    // are taken with respect to the full generator set of ν.
    let delta_seeds: Vec<u32> = (1..g_order)
        .map(|e| cayley.comm(embed_g[e], embed_phi[e]))
        .collect();
    let delta = cayley.normal_closure(&delta_seeds, &all_gens);

    let y1 = cayley.commutator_subgroup(&sub_g, &sub_phi);

    let mut y2_seeds = Vec::with_capacity(g_order * g_order);
    let mut y3_seeds = Vec::with_capacity(g_order * g_order);
    for g in 0..g_order {
        for h in 0..g_order {
            let cg = embed_g[g];
            let ch = embed_g[h];
            let cgp = embed_phi[g];
            let chp = embed_phi[h];
            let mixed = cayley.comm(cg, chp);
            y2_seeds.push(cayley.mult(cayley.comm(ch, cg), mixed));
            y3_seeds.push(cayley.mult(cayley.comm(chp, cgp), mixed));
        }
    }
    let y2 = cayley.normal_closure(&y2_seeds, &all_gens);
    let y3 = cayley.normal_closure(&y3_seeds, &all_gens);

    Ok(NuComplex {
        base: base.clone(),
        scope,
        pres,
        cayley,
        embed_g,
        embed_phi,
        sub_g,
        sub_phi,
        delta,
        y1,
        y2,
        y3,
    })
}

/// Outcome of the numeric comparison between `ν/Δ` and `χ/R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuChiConsistency {
    /// `|ν(G)|`.
    pub nu_order: u64,
    /// `|Δ|`.
    pub delta_order: u64,
    /// `|χ(G)|`.
    pub chi_order: u64,
    /// `|R|`.
    pub r_order: u64,
    /// Whether `|ν|/|Δ| = |χ|/|R|` (with both divisions exact).
    pub orders_match: bool,
    /// First ν-relator whose evaluation in χ falls outside `R`, if any.
    pub offending_relator: Option<usize>,
}

impl NuChiConsistency {
    /// Both halves of the consistency statement hold.
    pub fn holds(&self) -> bool {
        self.orders_match && self.offending_relator.is_none()
    }
}

/// Verifies the link `χ/R ≅ ν/Δ` numerically: compares the two quotient
/// orders, and evaluates every ν-relator inside χ (the alphabets are indexed
/// identically), requiring the result to lie in `R`.
pub fn nu_chi_consistency(nu: &NuComplex, chi: &ChiComplex) -> NuChiConsistency {
    let nu_order = nu.order();
    let delta_order = nu.delta.order();
    let chi_order = chi.order();
    let r_order = chi.r.order();
    let orders_match = nu_order % delta_order == 0
        && chi_order % r_order == 0
        && nu_order / delta_order == chi_order / r_order;
    let mut offending_relator = None;
    for (i, rel) in nu.pres.relators().iter().enumerate() {
        let letters: Vec<u16> = rel
            .letters()
            .iter()
            .map(|l| l.gen * 2 + u16::from(l.inv))
            .collect();
        let c = chi.cayley.mult_by_letters(0, &letters);
        if !chi.r.contains(c) {
            offending_relator = Some(i);
            break;
        }
    }
    NuChiConsistency {
        nu_order,
        delta_order,
        chi_order,
        r_order,
        orders_match,
        offending_relator,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chi::realize_chi;
    use crate::testgroups::{s3, v4, z};

    // For abelian G the interchange relations make [G, Gᵠ] the ordinary
    // tensor square, so |ν(Z_n)| = |Z_n ⊗ Z_n|·|Z_n|² = n³ and
    // |ν(Z2×Z2)| = |Z2⁴|·16 = 256.

    #[test]
    fn nu_of_small_cyclic_groups() {
        for (n, expected) in [(2u64, 8u64), (3, 27), (4, 64)] {
            let b = z(n);
            let nu = realize_nu(&b, NuScope::AllElements, 100_000, 100_000).unwrap();
            assert_eq!(nu.order(), expected, "|ν(Z_{n})|");
            // Cyclic G: Υ₁ = G ⊗ G ≅ Z_n and Δ has index |G ∧ G| = 1 in it.
            assert_eq!(nu.y1.order(), n);
            assert_eq!(nu.delta.order(), n);
            assert!(nu.delta.set_eq(&nu.y1));
        }
    }

    #[test]
    fn nu_of_v4() {
        let nu = realize_nu(&v4(), NuScope::AllElements, 100_000, 100_000).unwrap();
        assert_eq!(nu.order(), 256);
        assert_eq!(nu.y1.order(), 16); // Z2² ⊗ Z2² ≅ Z2⁴
        assert_eq!(nu.delta.order(), 8); // index |G ∧ G| = |M(V4)| = 2
        assert!(nu.delta.is_subset_of(&nu.y1));
    }

    #[test]
    fn nu_chi_link_for_s3_and_v4() {
        for b in [s3(), v4()] {
            let nu = realize_nu(&b, NuScope::AllElements, 200_000, 100_000).unwrap();
            let chi = realize_chi(&b, 200_000).unwrap();
            let link = nu_chi_consistency(&nu, &chi);
            assert!(link.holds(), "ν/Δ ≇ χ/R for |G| = {}: {link:?}", b.order());
        }
        // S3 specifically: χ(S3) has W = R = 1 and order 108, so
        // |ν(S3)| = 108·|Δ|, and |Υ₁/Δ| = |G ∧ G| = |M(S3)|·|S3′| = 3.
        let b = s3();
        let nu = realize_nu(&b, NuScope::AllElements, 200_000, 100_000).unwrap();
        assert_eq!(nu.order() % 108, 0);
        assert_eq!(nu.order() / nu.delta.order(), 108);
        assert_eq!(nu.y1.order() / nu.delta.order(), 3);
        assert!(nu.delta.is_subset_of(&nu.y1));
    }

    #[test]
    fn generator_scope_agrees_with_element_scope() {
        // The generator-triple presentation can a priori present a larger
        // group; on these inputs it agrees with the literal definition.
        for b in [z(4), s3()] {
            let full = realize_nu(&b, NuScope::AllElements, 200_000, 100_000).unwrap();
            let gens = realize_nu(&b, NuScope::Generators, 200_000, 100_000).unwrap();
            assert_eq!(gens.order(), full.order(), "|G| = {}", b.order());
            assert_eq!(gens.delta.order(), full.delta.order());
        }
    }

    #[test]
    fn relator_cap_is_enforced() {
        let b = s3();
        assert!(matches!(
            nu_presentation(&b, NuScope::AllElements, 10),
            Err(NuError::RelatorCap { needed: 250, cap: 10 })
        ));
    }
}
