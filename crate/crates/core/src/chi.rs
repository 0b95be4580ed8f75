//! The weak-commutativity construction χ(G) and its distinguished subgroups.
//!
//! For a finite group `G` presented as `⟨X | S⟩` with a faithful permutation
//! representation, χ(G) is the group
//!
//! ```text
//! χ(G) = ⟨ X ∪ Xᵠ  |  S(X), S(Xᵠ), [w, wᵠ] for every element word w of G ⟩
//! ```
//!
//! — two commuting-diagonal copies of `G`, one commutator relator per group
//! *element* (element words come from the canonical BFS words of `G`'s own
//! regular table).  [`realize_chi`] enumerates χ over the trivial subgroup,
//! wraps the table as a [`CayleyGroup`](crate::cayley::CayleyGroup), builds
//! the three structural homomorphisms
//!
//! * `π : χ → G`, `g, gᵠ ↦ g`,
//! * `ρ : χ → G × G`, `g ↦ (g, 1)`, `gᵠ ↦ (1, g)`,
//! * `τ : χ → T(G) ≤ G³`, `g ↦ (g, g, 1)`, `gᵠ ↦ (1, g, g)`,
//!
//! and locates the subgroups `L = ker π`, `D = ker ρ`, `W = ker τ`,
//! `L₁ = [L, G]`, `L₂ = [L, Gᵠ]`, `R = [G, L, Gᵠ]`, `L₁,₂ = [L₁, L₂]`.
//! Construction *fails* (rather than mislabeling anything) if any built-in
//! consistency invariant is violated: the presented order of `G` must match
//! its permutation order, embeddings must be injective with the right
//! closures, `|im τ|` must equal the independently computed order of `T(G)`,
//! `L` must equal `⟨g⁻¹gᵠ⟩`, `D` must equal `[G, Gᵠ]`, `W` must equal
//! `L ∩ D`, and `|L|·|D| = |LD|·|W|` must hold exactly.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cayley::{hom_to_perms, kernel_of_hom, CayleyError, CayleyGroup, CayleyHom, CayleySubgroup};
use crate::coset::{todd_coxeter, CosetError};
use crate::group::{GroupError, PermGroup};
use crate::perm::{PermError, Permutation};
use crate::presentation::{Presentation, PresentationError};
use crate::word::Word;

/// Errors from building a base group or realizing χ.
#[derive(thiserror::Error, Debug)]
pub enum ChiError {
    /// Underlying presentation problem.
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    /// A relator does not hold on the supplied permutation generators.
    #[error("relator {relator_index} does not hold on the permutation generators")]
    RelatorViolated {
        /// Index of the failing relator.
        relator_index: usize,
    },
    /// Coset enumeration failed (typically the coset cap).
    #[error(transparent)]
    Coset(#[from] CosetError),
    /// Permutation-side group failure.
    #[error(transparent)]
    Group(#[from] GroupError),
    /// Permutation data failure.
    #[error(transparent)]
    Perm(#[from] PermError),
    /// Cayley-side failure.
    #[error(transparent)]
    Cayley(#[from] CayleyError),
    /// The presentation presents a different group than the permutations
    /// generate.
    #[error("presented group has order {presented} but the permutation group has order {permutation}")]
    OrderMismatch {
        /// Order of the presented group (by coset enumeration).
        presented: u64,
        /// Order of the permutation group (by stabilizer chain).
        permutation: u64,
    },
    /// A structural invariant of the construction failed; the complex is not
    /// returned in that case.
    #[error("construction invariant violated: {0}")]
    Invariant(String),
}

/// A base group `G`: a presentation together with a faithful permutation
/// realization and the regular Cayley table tying the two views together.
#[derive(Clone, Debug)]
pub struct BaseGroup {
    pres: Presentation,
    perm_gens: Vec<Permutation>,
    degree: u32,
    group: PermGroup,
    cayley: CayleyGroup,
    elements: Vec<Permutation>,
}

impl BaseGroup {
    /// Builds and cross-validates a base group.  The relators must hold on
    /// the permutation generators, and the presented order (by coset
    /// enumeration over the trivial subgroup, capped at `max_cosets`) must
    /// equal the permutation group's order — this is what makes the
    /// presentation *faithful* rather than merely satisfied.
    pub fn new(
        pres: Presentation,
        perm_gens: Vec<Permutation>,
        max_cosets: u32,
    ) -> Result<Self, ChiError> {
        let degree = perm_gens.first().map(Permutation::degree).unwrap_or(1);
        if let Err(relator_index) = pres.check_images(&perm_gens, degree) {
            return Err(ChiError::RelatorViolated { relator_index });
        }
        let group = PermGroup::new(degree, &perm_gens)?;
        let table = todd_coxeter(&pres, &[], max_cosets)?;
        let cayley = CayleyGroup::from_regular_table(table);
        if u64::from(cayley.size()) != group.order() {
            return Err(ChiError::OrderMismatch {
                presented: u64::from(cayley.size()),
                permutation: group.order(),
            });
        }
        let elements: Vec<Permutation> = (0..cayley.size())
            .map(|c| cayley.word_of(c).evaluate_perm(&perm_gens, degree))
            .collect();
        Ok(BaseGroup {
            pres,
            perm_gens,
            degree,
            group,
            cayley,
            elements,
        })
    }

    /// The presentation.
    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    /// The permutation images of the generators.
    pub fn perm_gens(&self) -> &[Permutation] {
        &self.perm_gens
    }

    /// Permutation degree.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The permutation group.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// The regular Cayley representation of `G`.
    pub fn cayley(&self) -> &CayleyGroup {
        &self.cayley
    }

    /// Group order.
    pub fn order(&self) -> u64 {
        self.group.order()
    }

    /// The element of index `i` as a permutation (index 0 = identity).
    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    /// The canonical word of element `i`.
    pub fn element_word(&self, i: u32) -> Word {
        self.cayley.word_of(i)
    }

    /// Number of generators.
    pub fn ngens(&self) -> usize {
        self.pres.ngens()
    }

    /// Group exponent.
    pub fn exponent(&self) -> u64 {
        self.cayley.subgroup_exponent(&self.cayley.full_subgroup())
    }
}

/// The χ(G) presentation: two copies of the base alphabet (the second copy
/// suffixed `_phi`), both copies of the base relators, and one relator
/// `[w, wᵠ]` per non-identity element word `w`, in element-index order.
pub fn chi_presentation(base: &BaseGroup) -> Result<Presentation, ChiError> {
    let n = base.ngens() as u16;
    let names = chi_names(base);
    let mut relators: Vec<Word> = base.pres.relators().to_vec();
    relators.extend(
        base.pres
            .relators()
            .iter()
            .map(|r| r.map_generators(|g| g + n)),
    );
    for e in 1..base.cayley.size() {
        let w = base.element_word(e);
        let w_phi = w.map_generators(|g| g + n);
        relators.push(w.commutator(&w_phi));
    }
    Ok(Presentation::new(names, relators)?)
}

pub(crate) fn chi_names(base: &BaseGroup) -> Vec<String> {
    let mut names: Vec<String> = base.pres.names().iter().map(|s| String::from(*s)).collect();
    let phi: Vec<String> = base
        .pres
        .names()
        .iter()
        .map(|s| format!("{s}_phi"))
        .collect();
    names.extend(phi);
    names
}

/// The group `T(G) = ⟨(g, g, 1), (1, g, g) : g ∈ gens(G)⟩ ≤ G³`, on
/// `3 · degree` points, built independently of χ by a stabilizer chain.
pub fn t_group(base: &BaseGroup) -> Result<PermGroup, ChiError> {
    let d = base.degree;
    let total = 3 * d;
    let mut gens = Vec::new();
    for g in base.perm_gens() {
        let left = g.shift_into(0, total)?.compose(&g.shift_into(d, total)?);
        let right = g.shift_into(d, total)?.compose(&g.shift_into(2 * d, total)?);
        gens.push(left);
        gens.push(right);
    }
    Ok(PermGroup::new(total, &gens)?)
}

/// χ(G) realized as a finite group, with its structural homomorphisms and
/// distinguished subgroups.
#[derive(Clone, Debug)]
pub struct ChiComplex {
    /// The base group `G`.
    pub base: BaseGroup,
    /// The χ presentation used for the enumeration.
    pub pres: Presentation,
    /// χ itself, as a regular Cayley table.
    pub cayley: CayleyGroup,
    /// Element index of `ι(g)` in χ for each element index of `G`.
    pub embed_g: Vec<u32>,
    /// Element index of `ιᵠ(g)` in χ.
    pub embed_phi: Vec<u32>,
    /// The first copy of `G` inside χ, as a subgroup.
    pub sub_g: CayleySubgroup,
    /// The second (ᵠ) copy of `G` inside χ.
    pub sub_phi: CayleySubgroup,
    /// `T(G) ≤ G³`, built independently by stabilizer chain.
    pub t: PermGroup,
    /// `π : χ → G`.
    pub pi: CayleyHom,
    /// `ρ : χ → G × G`.
    pub rho: CayleyHom,
    /// `τ : χ → T(G)`.
    pub tau: CayleyHom,
    /// `L = ker π = ⟨g⁻¹gᵠ⟩`.
    pub l: CayleySubgroup,
    /// `D = ker ρ = [G, Gᵠ]`.
    pub d: CayleySubgroup,
    /// `W = ker τ = L ∩ D`.
    pub w: CayleySubgroup,
    /// `L₁ = [L, G]`.
    pub l1: CayleySubgroup,
    /// `L₂ = [L, Gᵠ]`.
    pub l2: CayleySubgroup,
    /// `R = [G, L, Gᵠ] = [L₁, Gᵠ]`.
    pub r: CayleySubgroup,
    /// `L₁,₂ = [L₁, L₂]`.
    pub l12: CayleySubgroup,
}

impl ChiComplex {
    /// `|χ(G)|`.
    pub fn order(&self) -> u64 {
        u64::from(self.cayley.size())
    }

    /// The element `[g, φ] = g⁻¹·gᵠ` of χ for the base element of index `e`.
    pub fn g_phi(&self, e: u32) -> u32 {
        self.cayley
            .mult(self.cayley.inv(self.embed_g[e as usize]), self.embed_phi[e as usize])
    }
}

pub(crate) fn invariant(cond: bool, what: &str) -> Result<(), ChiError> {
    if cond {
        Ok(())
    } else {
        Err(ChiError::Invariant(String::from(what)))
    }
}

/// Embeds both copies of `G` into a group on the doubled alphabet (χ or ν)
/// and verifies that each embedding is a bijection onto the closure of its
/// copy's generators.
pub(crate) fn embed_both(
    base: &BaseGroup,
    cayley: &CayleyGroup,
) -> Result<(Vec<u32>, Vec<u32>, CayleySubgroup, CayleySubgroup), ChiError> {
    let n = base.ngens();
    let g_order = base.order();
    let mut embed_g = Vec::with_capacity(g_order as usize);
    let mut embed_phi = Vec::with_capacity(g_order as usize);
    for e in 0..base.cayley().size() {
        let letters = base.cayley().letters_of(e);
        let phi_letters: Vec<u16> = letters.iter().map(|&l| l + 2 * n as u16).collect();
        embed_g.push(cayley.mult_by_letters(0, &letters));
        embed_phi.push(cayley.mult_by_letters(0, &phi_letters));
    }
    let sub_g = cayley.subgroup_from_gens(
        &(0..n).map(|i| cayley.gen_element(i)).collect::<Vec<_>>(),
    );
    let sub_phi = cayley.subgroup_from_gens(
        &(n..2 * n).map(|i| cayley.gen_element(i)).collect::<Vec<_>>(),
    );
    let mut sorted_g = embed_g.clone();
    sorted_g.sort_unstable();
    sorted_g.dedup();
    invariant(
        sorted_g.len() as u64 == g_order && sorted_g == sub_g.elems(),
        "embedding of G is not a bijection onto ⟨first-copy generators⟩",
    )?;
    let mut sorted_phi = embed_phi.clone();
    sorted_phi.sort_unstable();
    sorted_phi.dedup();
    invariant(
        sorted_phi.len() as u64 == g_order && sorted_phi == sub_phi.elems(),
        "embedding of G^phi is not a bijection onto ⟨second-copy generators⟩",
    )?;
    Ok((embed_g, embed_phi, sub_g, sub_phi))
}

/// Enumerates a presentation over the doubled alphabet and assembles the
/// complex: embeddings of both copies, the homomorphisms `π`, `ρ`, `τ` with
/// their kernels, and the bracket subgroups.  Only *construction soundness*
/// is asserted here (bijective embeddings, surjectivity of the maps, the
/// Lagrange identities of the kernels); the χ-specific subgroup descriptions
/// are asserted by [`realize_chi`] on top.  This entry point exists so
/// deliberately perturbed presentations can be realized and then interrogated
/// by the verification suites.
pub fn realize_chi_from_presentation(
    base: &BaseGroup,
    pres: Presentation,
    max_cosets: u32,
) -> Result<ChiComplex, ChiError> {
    let table = todd_coxeter(&pres, &[], max_cosets)?;
    let cayley = CayleyGroup::from_regular_table(table);
    let n = base.ngens();
    let g_order = base.order();
    let chi_order = u64::from(cayley.size());

    // Embeddings of both copies, element by element.
    let (embed_g, embed_phi, sub_g, sub_phi) = embed_both(base, &cayley)?;

    // T(G) and the three structural homomorphisms.
    let t = t_group(base)?;
    let d = base.degree();
    let pi_images: Vec<Permutation> = base
        .perm_gens()
        .iter()
        .chain(base.perm_gens().iter())
        .cloned()
        .collect();
    let pi = hom_to_perms(&cayley, &pres, &pi_images, d)?;
    let mut rho_images = Vec::with_capacity(2 * n);
    for g in base.perm_gens() {
        rho_images.push(g.shift_into(0, 2 * d)?);
    }
    for g in base.perm_gens() {
        rho_images.push(g.shift_into(d, 2 * d)?);
    }
    let rho = hom_to_perms(&cayley, &pres, &rho_images, 2 * d)?;
    let mut tau_images = Vec::with_capacity(2 * n);
    for g in base.perm_gens() {
        tau_images.push(g.shift_into(0, 3 * d)?.compose(&g.shift_into(d, 3 * d)?));
    }
    for g in base.perm_gens() {
        tau_images.push(g.shift_into(d, 3 * d)?.compose(&g.shift_into(2 * d, 3 * d)?));
    }
    let tau = hom_to_perms(&cayley, &pres, &tau_images, 3 * d)?;

    invariant(pi.image_order() == g_order, "π is not onto G")?;
    invariant(
        rho.image_order() == g_order * g_order,
        "ρ is not onto G × G",
    )?;
    invariant(
        tau.image_order() == t.order(),
        "image of τ differs from the independently computed T(G)",
    )?;

    // Kernels and the defining alternative descriptions.
    let l = kernel_of_hom(&cayley, &pi)?;
    let dd = kernel_of_hom(&cayley, &rho)?;
    let w = kernel_of_hom(&cayley, &tau)?;
    invariant(l.order() * g_order == chi_order, "|L| ≠ |χ|/|G|")?;
    invariant(
        dd.order() * g_order * g_order == chi_order,
        "|D| ≠ |χ|/|G|²",
    )?;
    invariant(w.order() * t.order() == chi_order, "|W| ≠ |χ|/|T|")?;

    // The derived distinguished subgroups.
    let l1 = cayley.commutator_subgroup(&l, &sub_g);
    let l2 = cayley.commutator_subgroup(&l, &sub_phi);
    let r = cayley.commutator_subgroup(&l1, &sub_phi);
    let l12 = cayley.commutator_subgroup(&l1, &l2);

    Ok(ChiComplex {
        base: base.clone(),
        pres,
        cayley,
        embed_g,
        embed_phi,
        sub_g,
        sub_phi,
        t,
        pi,
        rho,
        tau,
        l,
        d: dd,
        w,
        l1,
        l2,
        r,
        l12,
    })
}

/// Builds χ(G) by coset enumeration and verifies every construction
/// invariant listed in the module docs; any violation aborts with
/// [`ChiError::Invariant`].
pub fn realize_chi(base: &BaseGroup, max_cosets: u32) -> Result<ChiComplex, ChiError> {
    let pres = chi_presentation(base)?;
    let chi = realize_chi_from_presentation(base, pres, max_cosets)?;
    let cayley = &chi.cayley;

    // L = ⟨g⁻¹gᵠ : g ∈ G⟩ (plain closure; the set of generators is already
    // conjugation-closed enough because π-kernels are normal).
    let g_phi_elems: Vec<u32> = (0..base.cayley().size()).map(|e| chi.g_phi(e)).collect();
    let l_alt = cayley.subgroup_from_gens(&g_phi_elems);
    invariant(l_alt.set_eq(&chi.l), "L ≠ ⟨g⁻¹gᵠ⟩")?;

    // D = [G, Gᵠ].
    let d_alt = cayley.commutator_subgroup(&chi.sub_g, &chi.sub_phi);
    invariant(d_alt.set_eq(&chi.d), "D ≠ [G, Gᵠ]")?;

    // W = L ∩ D, and the index identity |L|·|D| = |LD|·|W|.
    invariant(
        chi.w.is_subset_of(&chi.l)
            && chi.w.is_subset_of(&chi.d)
            && chi.l.intersection_size(&chi.d) == chi.w.order(),
        "W ≠ L ∩ D",
    )?;
    let mut ld_gens: Vec<u32> = chi.l.gens().to_vec();
    ld_gens.extend_from_slice(chi.d.gens());
    let ld = cayley.subgroup_from_gens(&ld_gens);
    invariant(
        chi.l.order() * chi.d.order() == ld.order() * chi.w.order(),
        "|L|·|D| ≠ |LD|·|W|",
    )?;

    Ok(chi)
}
