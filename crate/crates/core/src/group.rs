//! Finite permutation groups via stabilizer chains (Schreier–Sims).
//!
//! A [`PermGroup`] carries a base and strong generating set built
//! deterministically (base points are smallest moved points, orbits are BFS
//! in generator order), so membership tests, orders, and element enumeration
//! are reproducible across runs.  Transversal elements are reconstructed on
//! demand from Schreier vectors rather than stored, keeping memory
//! proportional to `degree × orbit` per level.
//!
//! Subgroup constructions (`normal_closure`, `commutator_subgroup`, the
//! derived and lower central series) are free functions returning new
//! [`PermGroup`] values.  `commutator_subgroup(a, b)` forms the normal
//! closure of the pairwise generator commutators under conjugation by the
//! generators of `a` and `b` only — the closure of `⟨[aᵢ, bⱼ]⟩` inside
//! `⟨a ∪ b⟩` — which is the standard definition of `[A, B]`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand_core::RngCore;

use crate::perm::{lcm, Permutation};

/// Errors from group construction or enumeration.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// Generators of differing degrees were supplied.
    #[error("generator degree {got} does not match group degree {expected}")]
    DegreeMismatch {
        /// Degree implied by the first generator / the ambient group.
        expected: u32,
        /// Offending degree.
        got: u32,
    },
    /// An enumeration would exceed the configured cap.
    #[error("enumeration cap exceeded: group order {order} > cap {cap}")]
    EnumerationCap {
        /// The configured cap.
        cap: u64,
        /// The actual group order.
        order: u64,
    },
}

const NO_POS: u32 = u32::MAX;

/// One level of the stabilizer chain.
#[derive(Clone, Debug)]
struct Level {
    /// Base point of this level.
    base: u32,
    /// Indices into `strong_gens` of generators fixing all earlier bases.
    gen_idx: Vec<usize>,
    /// Orbit of `base` under those generators, in BFS discovery order
    /// (`orbit[0] == base`).
    orbit: Vec<u32>,
    /// `pos[p]` = index of `p` in `orbit`, or `NO_POS`.
    pos: Vec<u32>,
    /// Schreier vector: for `orbit[i]` (i > 0), the pair
    /// `(parent point, strong generator index)` with
    /// `parent ^ gen = orbit[i]`.
    tree: Vec<(u32, usize)>,
}

impl Level {
    fn new(base: u32, degree: u32) -> Self {
        Level {
            base,
            gen_idx: Vec::new(),
            orbit: Vec::new(),
            pos: vec![NO_POS; degree as usize],
            tree: Vec::new(),
        }
    }

    /// Recomputes the orbit and Schreier vector from `gen_idx`.
    fn recompute_orbit(&mut self, strong_gens: &[Permutation]) {
        for &p in &self.orbit {
            self.pos[p as usize] = NO_POS;
        }
        self.orbit.clear();
        self.tree.clear();
        self.orbit.push(self.base);
        self.tree.push((self.base, usize::MAX));
        self.pos[self.base as usize] = 0;
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            head += 1;
            for &gi in &self.gen_idx {
                let q = strong_gens[gi].apply(p);
                if self.pos[q as usize] == NO_POS {
                    self.pos[q as usize] = self.orbit.len() as u32;
                    self.orbit.push(q);
                    self.tree.push((p, gi));
                }
            }
        }
    }

    /// The transversal element `u` with `base ^ u = point`.
    fn transversal(&self, strong_gens: &[Permutation], point: u32, degree: u32) -> Permutation {
        let mut path = Vec::new();
        let mut p = point;
        while p != self.base {
            let (parent, gi) = self.tree[self.pos[p as usize] as usize];
            path.push(gi);
            p = parent;
        }
        let mut u = Permutation::identity(degree);
        for &gi in path.iter().rev() {
            u = u.compose(&strong_gens[gi]);
        }
        u
    }
}

/// A finite permutation group with a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: u32,
    generators: Vec<Permutation>,
    strong_gens: Vec<Permutation>,
    levels: Vec<Level>,
    order: u64,
}

impl PermGroup {
    /// The trivial group on `degree` points.
    pub fn trivial(degree: u32) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            strong_gens: Vec::new(),
            levels: Vec::new(),
            order: 1,
        }
    }

    /// Builds the group generated by `gens` (all of degree `degree`).
    pub fn new(degree: u32, gens: &[Permutation]) -> Result<Self, GroupError> {
        let mut generators = Vec::new();
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
            if !g.is_identity() && !generators.contains(g) {
                generators.push(g.clone());
            }
        }
        let mut group = PermGroup {
            degree,
            generators: generators.clone(),
            strong_gens: generators,
            levels: Vec::new(),
            order: 1,
        };
        group.schreier_sims();
        Ok(group)
    }

    /// Deterministic Schreier–Sims: verifies each level's Schreier generators
    /// deepest-first, adding sifted residues as new strong generators until
    /// every level is complete.
    fn schreier_sims(&mut self) {
        for idx in 0..self.strong_gens.len() {
            self.ensure_covered(idx);
        }
        self.refresh_levels();
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            match self.verify_level(i as usize) {
                None => i -= 1,
                Some(j) => i = j as isize,
            }
        }
        self.order = self
            .levels
            .iter()
            .map(|l| l.orbit.len() as u64)
            .fold(1u64, |acc, n| acc.checked_mul(n).expect("order overflow"));
    }

    /// Ensures strong generator `idx` moves some base point, adding a new
    /// level if it fixes every existing base.
    fn ensure_covered(&mut self, idx: usize) {
        let g = &self.strong_gens[idx];
        if self.levels.iter().all(|l| g.apply(l.base) == l.base) {
            let base = g
                .first_moved_point()
                .expect("identity never stored as strong generator");
            self.levels.push(Level::new(base, self.degree));
        }
    }

    /// Rebuilds every level's generator list and orbit from scratch.
    fn refresh_levels(&mut self) {
        for i in 0..self.levels.len() {
            self.refresh_level(i);
        }
    }

    fn refresh_level(&mut self, i: usize) {
        let earlier_bases: Vec<u32> = self.levels[..i].iter().map(|l| l.base).collect();
        let gen_idx: Vec<usize> = self
            .strong_gens
            .iter()
            .enumerate()
            .filter(|(_, g)| earlier_bases.iter().all(|&b| g.apply(b) == b))
            .map(|(k, _)| k)
            .collect();
        self.levels[i].gen_idx = gen_idx;
        self.levels[i].recompute_orbit(&self.strong_gens);
    }

    /// Checks all Schreier generators of level `i`.  On finding one whose
    /// sifted residue is nontrivial, records it as a new strong generator and
    /// returns the level index that must be re-verified; returns `None` when
    /// the level is complete.
    fn verify_level(&mut self, i: usize) -> Option<usize> {
        self.refresh_level(i);
        let orbit_len = self.levels[i].orbit.len();
        for oi in 0..orbit_len {
            for gk in 0..self.levels[i].gen_idx.len() {
                let beta = self.levels[i].orbit[oi];
                let gi = self.levels[i].gen_idx[gk];
                let u_beta = self.levels[i].transversal(&self.strong_gens, beta, self.degree);
                let s = &self.strong_gens[gi];
                let target = s.apply(beta);
                let u_target =
                    self.levels[i].transversal(&self.strong_gens, target, self.degree);
                let schreier = u_beta.compose(s).compose(&u_target.inverse());
                let (residue, j) = self.strip(&schreier, i + 1);
                if !residue.is_identity() {
                    self.strong_gens.push(residue);
                    let idx = self.strong_gens.len() - 1;
                    self.ensure_covered(idx);
                    return Some(j.min(self.levels.len() - 1).max(i));
                }
            }
        }
        None
    }

    /// Sifts `g` through levels `from..`, dividing off transversal elements.
    /// Returns the residue and the first level index at which sifting stopped
    /// (`levels.len()` if it ran through every level).
    fn strip(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for j in from..self.levels.len() {
            let level = &self.levels[j];
            let p = h.apply(level.base);
            if level.pos[p as usize] == NO_POS {
                return (h, j);
            }
            let u = level.transversal(&self.strong_gens, p, self.degree);
            h = h.compose(&u.inverse());
        }
        (h, self.levels.len())
    }

    /// Number of points acted on.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Group order.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// The (deduplicated, non-identity) generators supplied at construction.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Whether this is the trivial group.
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Membership test by sifting.
    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, j) = self.strip(g, 0);
        j == self.levels.len() && residue.is_identity()
    }

    /// Whether all generator pairs commute.
    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        (0..gens.len()).all(|i| (i + 1..gens.len()).all(|j| {
            gens[i].compose(&gens[j]) == gens[j].compose(&gens[i])
        }))
    }

    /// Enumerates all elements in a deterministic order (products of
    /// transversal representatives, deepest level first), failing if the
    /// order exceeds `cap`.
    pub fn elements(&self, cap: u64) -> Result<Vec<Permutation>, GroupError> {
        if self.order > cap {
            return Err(GroupError::EnumerationCap {
                cap,
                order: self.order,
            });
        }
        let mut out = vec![Permutation::identity(self.degree)];
        // Element = u^(k-1) · … · u^(0): fold transversals from the deepest
        // level outward so that sifting (which divides off level 0 first)
        // inverts this product exactly.
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for partial in &out {
                for &beta in &level.orbit {
                    let u = level.transversal(&self.strong_gens, beta, self.degree);
                    next.push(partial.compose(&u));
                }
            }
            out = next;
        }
        debug_assert_eq!(out.len() as u64, self.order);
        Ok(out)
    }

    /// Exponent: lcm of all element orders (enumerates, so subject to `cap`).
    pub fn exponent(&self, cap: u64) -> Result<u64, GroupError> {
        let mut e = 1u64;
        for g in self.elements(cap)? {
            e = lcm(e, g.order());
        }
        Ok(e)
    }

    /// A product-replacement random-element sampler over this group.
    pub fn random_sampler(&self, rng: impl RngCore) -> ProductReplacement<impl RngCore> {
        ProductReplacement::new(self, rng)
    }
}

/// Product-replacement ("rattle") random element generator.
///
/// Initializes `SLOTS` cells with the generator list cycled, performs a fixed
/// burn-in, and afterwards returns the mutated cell on each draw.  With a
/// seeded RNG the stream is deterministic.
pub struct ProductReplacement<R: RngCore> {
    slots: Vec<Permutation>,
    rng: R,
    identity: Permutation,
}

impl<R: RngCore> ProductReplacement<R> {
    const SLOTS: usize = 10;
    const BURN_IN: usize = 60;

    /// Creates a sampler for `group` driven by `rng`.
    pub fn new(group: &PermGroup, rng: R) -> Self {
        let identity = Permutation::identity(group.degree());
        let gens = if group.generators().is_empty() {
            vec![identity.clone()]
        } else {
            group.generators().to_vec()
        };
        let slots = (0..Self::SLOTS.max(gens.len()))
            .map(|i| gens[i % gens.len()].clone())
            .collect();
        let mut sampler = ProductReplacement {
            slots,
            rng,
            identity,
        };
        for _ in 0..Self::BURN_IN {
            sampler.step();
        }
        sampler
    }

    fn step(&mut self) -> Permutation {
        let n = self.slots.len();
        let i = (self.rng.next_u32() as usize) % n;
        let mut j = (self.rng.next_u32() as usize) % (n - 1);
        if j >= i {
            j += 1;
        }
        let other = if self.rng.next_u32() & 1 == 0 {
            self.slots[j].clone()
        } else {
            self.slots[j].inverse()
        };
        self.slots[i] = self.slots[i].compose(&other);
        self.slots[i].clone()
    }

    /// Draws the next pseudo-random element.
    pub fn next_element(&mut self) -> Permutation {
        let g = self.step();
        if g.is_identity() {
            self.identity.clone()
        } else {
            g
        }
    }
}

/// The subgroup `⟨seeds⟩` normalized by conjugation with `conjugators`:
/// repeatedly adjoins `s^c` for current generators `s` and `c ∈ conjugators`
/// until closed.  With `conjugators` = the ambient group's generators this is
/// the normal closure of `seeds` in the ambient group.
pub fn normal_closure(
    degree: u32,
    seeds: &[Permutation],
    conjugators: &[Permutation],
) -> Result<PermGroup, GroupError> {
    let mut gens: Vec<Permutation> = Vec::new();
    for s in seeds {
        if !s.is_identity() && !gens.contains(s) {
            gens.push(s.clone());
        }
    }
    let mut group = PermGroup::new(degree, &gens)?;
    let mut head = 0;
    while head < gens.len() {
        let s = gens[head].clone();
        head += 1;
        for c in conjugators {
            let conj = s.conjugate(c);
            if !group.contains(&conj) {
                gens.push(conj);
                group = PermGroup::new(degree, &gens)?;
            }
        }
    }
    Ok(group)
}

/// The commutator subgroup `[A, B] = ⟨[a, b] : a ∈ gens(A), b ∈ gens(B)⟩`
/// closed under conjugation by the generators of `A` and `B` (i.e. the normal
/// closure inside `⟨A ∪ B⟩`).
pub fn commutator_subgroup(a: &PermGroup, b: &PermGroup) -> Result<PermGroup, GroupError> {
    let degree = a.degree();
    let mut seeds = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            seeds.push(x.commutator(y));
        }
    }
    let mut conjugators: Vec<Permutation> = a.generators().to_vec();
    for g in b.generators() {
        if !conjugators.contains(g) {
            conjugators.push(g.clone());
        }
    }
    normal_closure(degree, &seeds, &conjugators)
}

/// Left-normed iterated commutator subgroup `[x, g, g, …, g]`-style series
/// term: starting from `init`, forms `[current, with]` a total of `n` times.
pub fn iterated_commutator(
    init: &PermGroup,
    with: &PermGroup,
    n: u32,
) -> Result<PermGroup, GroupError> {
    let mut current = init.clone();
    for _ in 0..n {
        current = commutator_subgroup(&current, with)?;
    }
    Ok(current)
}

/// The derived series `G ⊵ G′ ⊵ G″ ⊵ …`, stopping when it stabilizes (the
/// last entry equals its own derived subgroup) or reaches the trivial group.
pub fn derived_series(g: &PermGroup) -> Result<Vec<PermGroup>, GroupError> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = commutator_subgroup(last, last)?;
        if next.order() == last.order() {
            // Stabilized above (or at) the identity; don't duplicate the tail.
            return Ok(series);
        }
        let done = next.is_trivial();
        series.push(next);
        if done {
            return Ok(series);
        }
    }
}

/// Derived length: steps to reach the trivial group in the derived series,
/// or `None` if the series stabilizes above the identity (non-solvable).
pub fn derived_length(g: &PermGroup) -> Result<Option<u32>, GroupError> {
    let series = derived_series(g)?;
    if series.last().map(|h| h.is_trivial()) == Some(true) {
        Ok(Some(series.len() as u32 - 1))
    } else {
        Ok(None)
    }
}

/// The lower central series `γ₁ = G, γ_{k+1} = [γ_k, G]`, stopping at
/// stabilization or the trivial group.
pub fn lower_central_series(g: &PermGroup) -> Result<Vec<PermGroup>, GroupError> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = commutator_subgroup(last, g)?;
        let stabilized = next.order() == last.order();
        let done = stabilized || next.is_trivial();
        if !stabilized {
            series.push(next);
        }
        if done {
            return Ok(series);
        }
    }
}

/// Nilpotency class: `γ_{c+1} = 1` with `γ_c ≠ 1`, or `None` when the lower
/// central series stabilizes above the identity.
pub fn nilpotency_class(g: &PermGroup) -> Result<Option<u32>, GroupError> {
    let series = lower_central_series(g)?;
    if series.last().map(|h| h.is_trivial()) == Some(true) {
        Ok(Some(series.len() as u32 - 1))
    } else {
        Ok(None)
    }
}

/// Order statistics of the quotient `G/N` for `N ⊴ G`: a map
/// `element order → number of cosets of that order`.  Enumerates `G`
/// (subject to `cap`), so intended for small groups.
pub fn quotient_order_statistics(
    g: &PermGroup,
    n: &PermGroup,
    cap: u64,
) -> Result<BTreeMap<u64, u64>, GroupError> {
    let elements = g.elements(cap)?;
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for x in &elements {
        let mut power = x.clone();
        let mut k = 1u64;
        while !n.contains(&power) {
            power = power.compose(x);
            k += 1;
        }
        *counts.entry(k).or_insert(0) += 1;
    }
    // Each coset was counted |N| times.
    let n_order = n.order();
    for v in counts.values_mut() {
        debug_assert_eq!(*v % n_order, 0, "coset counts must divide evenly");
        *v /= n_order;
    }
    Ok(counts)
}
