//! A finite group realized as its complete right-multiplication table.
//!
//! When [`todd_coxeter`](crate::coset::todd_coxeter) enumerates the cosets of
//! the *trivial* subgroup, the resulting table is the right Cayley graph of
//! the group: coset `c` *is* the group element given by its canonical BFS
//! word, coset 0 is the identity, and the column for letter `g` is right
//! multiplication by that generator.  A [`CayleyGroup`] wraps such a table
//! and performs all group arithmetic through it — `a·b` applies the letters
//! of `b`'s canonical word to `a`, inversion applies the reversed, inverted
//! word, and so on.  Elements are plain `u32` indices, so a group of order
//! `n` costs `O(n)` memory per subgroup rather than `O(n · degree)` as an
//! explicit permutation representation would.
//!
//! Subgroups ([`CayleySubgroup`]) are generator lists plus bitset element
//! sets, built by breadth-first closure; normal closures conjugate by a
//! supplied conjugator list until stable; kernels of homomorphisms onto
//! explicit permutation groups come from a fibre-map BFS with Schreier
//! generators.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::coset::CosetTable;
use crate::perm::{lcm, Permutation};
use crate::presentation::Presentation;
use crate::word::Word;

/// Errors from Cayley-representation computations.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum CayleyError {
    /// Proposed generator images do not satisfy a defining relator.
    #[error("homomorphism not well-defined: relator {relator_index} maps to a non-identity")]
    HomNotWellDefined {
        /// Index of the violated relator in the presentation.
        relator_index: usize,
    },
    /// A claimed internal consistency condition failed; indicates a bug or a
    /// mislabeled construction, never silently ignored.
    #[error("internal consistency violation: {0}")]
    Inconsistent(&'static str),
}

/// A dense bitset over `0..len` element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
    len: u32,
}

impl BitSet {
    /// An empty set over a universe of `len` indices.
    pub fn new(len: u32) -> Self {
        BitSet {
            words: vec![0; (len as usize).div_ceil(64)],
            len,
        }
    }

    /// Inserts `i`, returning whether it was newly added.
    #[inline]
    pub fn insert(&mut self, i: u32) -> bool {
        let w = &mut self.words[(i / 64) as usize];
        let mask = 1u64 << (i % 64);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    /// Membership test.
    #[inline]
    pub fn contains(&self, i: u32) -> bool {
        self.words[(i / 64) as usize] & (1u64 << (i % 64)) != 0
    }

    /// Number of members.
    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Whether every member of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Size of the intersection.
    pub fn intersection_count(&self, other: &BitSet) -> u64 {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as u64)
            .sum()
    }
}

/// A finite group as a complete regular coset table.
#[derive(Clone, Debug)]
pub struct CayleyGroup {
    table: CosetTable,
}

impl CayleyGroup {
    /// Wraps a complete table produced by enumerating over the trivial
    /// subgroup (so that cosets are group elements and coset 0 the identity).
    pub fn from_regular_table(table: CosetTable) -> Self {
        CayleyGroup { table }
    }

    /// The underlying table.
    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    /// Group order.
    pub fn size(&self) -> u32 {
        self.table.ncosets()
    }

    /// Number of generators.
    pub fn ngens(&self) -> usize {
        self.table.ngens()
    }

    /// The element index of generator `i`.
    pub fn gen_element(&self, i: usize) -> u32 {
        self.table.apply(0, 2 * i as u16)
    }

    /// Right multiplication by a single signed letter.
    #[inline]
    pub fn apply_letter(&self, x: u32, letter: u16) -> u32 {
        self.table.apply(x, letter)
    }

    /// The canonical word of element `x`, as signed letters.
    pub fn letters_of(&self, x: u32) -> Vec<u16> {
        self.table.rep_letters(x)
    }

    /// The canonical word of element `x`.
    pub fn word_of(&self, x: u32) -> Word {
        self.table.rep_word(x)
    }

    /// `a · b` via `b`'s canonical letters.
    #[inline]
    pub fn mult_by_letters(&self, a: u32, letters: &[u16]) -> u32 {
        let mut c = a;
        for &l in letters {
            c = self.table.apply(c, l);
        }
        c
    }

    /// The product `a · b`.
    pub fn mult(&self, a: u32, b: u32) -> u32 {
        self.mult_by_letters(a, &self.letters_of(b))
    }

    /// The inverse `a⁻¹`.
    pub fn inv(&self, a: u32) -> u32 {
        let mut c = 0;
        for &l in self.letters_of(a).iter().rev() {
            c = self.table.apply(c, l ^ 1);
        }
        c
    }

    /// The conjugate `a^b = b⁻¹·a·b`.
    pub fn conj(&self, a: u32, b: u32) -> u32 {
        let letters = self.letters_of(b);
        let mut c = self.inv(b);
        c = self.mult_by_letters(c, &self.letters_of(a));
        self.mult_by_letters(c, &letters)
    }

    /// The commutator `[a, b] = a⁻¹·b⁻¹·a·b = (b·a)⁻¹·(a·b)`.
    pub fn comm(&self, a: u32, b: u32) -> u32 {
        let a_letters = self.letters_of(a);
        let b_letters = self.letters_of(b);
        let ba = self.mult_by_letters(b, &a_letters);
        let ab = self.mult_by_letters(a, &b_letters);
        self.mult_by_letters(self.inv(ba), &self.letters_of(ab))
    }

    /// The power `a^k` (k ≥ 0).
    pub fn pow(&self, a: u32, k: u64) -> u32 {
        let letters = self.letters_of(a);
        let mut c = 0;
        for _ in 0..k {
            c = self.mult_by_letters(c, &letters);
        }
        c
    }

    /// Multiplicative order of `a`.
    pub fn element_order(&self, a: u32) -> u64 {
        let letters = self.letters_of(a);
        let mut c = self.mult_by_letters(0, &letters);
        let mut k = 1u64;
        while c != 0 {
            c = self.mult_by_letters(c, &letters);
            k += 1;
        }
        k
    }

    /// The subgroup generated by the given elements.
    pub fn subgroup_from_gens(&self, gens: &[u32]) -> CayleySubgroup {
        let gens = dedup_nontrivial(gens);
        let (bits, elems) = self.bfs_closure(&gens);
        CayleySubgroup { gens, elems, bits }
    }

    /// The trivial subgroup.
    pub fn trivial_subgroup(&self) -> CayleySubgroup {
        self.subgroup_from_gens(&[])
    }

    /// The whole group as a subgroup handle (generated by the generators).
    pub fn full_subgroup(&self) -> CayleySubgroup {
        let gens: Vec<u32> = (0..self.ngens()).map(|i| self.gen_element(i)).collect();
        let sub = self.subgroup_from_gens(&gens);
        debug_assert_eq!(sub.order(), u64::from(self.size()));
        sub
    }

    fn bfs_closure(&self, gens: &[u32]) -> (BitSet, Vec<u32>) {
        let gen_letters: Vec<Vec<u16>> = gens.iter().map(|&g| self.letters_of(g)).collect();
        let mut bits = BitSet::new(self.size());
        let mut elems = vec![0u32];
        bits.insert(0);
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head];
            head += 1;
            for gl in &gen_letters {
                let y = self.mult_by_letters(x, gl);
                if bits.insert(y) {
                    elems.push(y);
                }
            }
        }
        elems.sort_unstable();
        (bits, elems)
    }

    /// The smallest subgroup containing `seeds` that is closed under
    /// conjugation by every element of `conjugators` — the normal closure of
    /// `⟨seeds⟩` inside `⟨seeds ∪ conjugators⟩`.
    pub fn normal_closure(&self, seeds: &[u32], conjugators: &[u32]) -> CayleySubgroup {
        let mut gens = dedup_nontrivial(seeds);
        let conj_letters: Vec<Vec<u16>> =
            conjugators.iter().map(|&c| self.letters_of(c)).collect();
        let conj_invs: Vec<u32> = conjugators.iter().map(|&c| self.inv(c)).collect();
        let mut sub = self.subgroup_from_gens(&gens);
        loop {
            let mut fresh: Vec<u32> = Vec::new();
            for &s in &gens {
                let s_letters = self.letters_of(s);
                for (ci, cl) in conj_letters.iter().enumerate() {
                    // s^c = c⁻¹·s·c.
                    let t = self.mult_by_letters(
                        self.mult_by_letters(conj_invs[ci], &s_letters),
                        cl,
                    );
                    if !sub.contains(t) && !fresh.contains(&t) {
                        fresh.push(t);
                    }
                }
            }
            if fresh.is_empty() {
                return CayleySubgroup {
                    gens,
                    elems: sub.elems,
                    bits: sub.bits,
                };
            }
            gens.extend(fresh);
            sub = self.subgroup_from_gens(&gens);
        }
    }

    /// The commutator subgroup `[A, B]`: the normal closure of the pairwise
    /// generator commutators under conjugation by the generators of `A` and
    /// `B` (i.e. inside `⟨A ∪ B⟩`).
    pub fn commutator_subgroup(
        &self,
        a: &CayleySubgroup,
        b: &CayleySubgroup,
    ) -> CayleySubgroup {
        let mut seeds = Vec::new();
        for &x in &a.gens {
            for &y in &b.gens {
                seeds.push(self.comm(x, y));
            }
        }
        let mut conjugators = a.gens.clone();
        for &g in &b.gens {
            if !conjugators.contains(&g) {
                conjugators.push(g);
            }
        }
        self.normal_closure(&seeds, &conjugators)
    }

    /// Whether every generator of `a` commutes with every generator of `b`
    /// (for subgroups, this is exactly "`A` centralizes `B`").
    pub fn centralizes(&self, a: &CayleySubgroup, b: &CayleySubgroup) -> bool {
        a.gens
            .iter()
            .all(|&x| b.gens.iter().all(|&y| self.comm(x, y) == 0))
    }

    /// Exponent of a subgroup: lcm of its element orders.
    pub fn subgroup_exponent(&self, sub: &CayleySubgroup) -> u64 {
        let mut e = 1;
        for &x in &sub.elems {
            e = lcm(e, self.element_order(x));
        }
        e
    }

    /// Order statistics of the quotient `N/M` for `M ⊴ N` (as element sets):
    /// map `coset order → count`.  Requires `M ⊆ N`.
    pub fn quotient_order_statistics(
        &self,
        n: &CayleySubgroup,
        m: &CayleySubgroup,
    ) -> Result<BTreeMap<u64, u64>, CayleyError> {
        if !m.is_subset_of(n) {
            return Err(CayleyError::Inconsistent("quotient: M is not a subset of N"));
        }
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for &x in &n.elems {
            let letters = self.letters_of(x);
            let mut y = x;
            let mut k = 1u64;
            while !m.contains(y) {
                y = self.mult_by_letters(y, &letters);
                k += 1;
            }
            *counts.entry(k).or_insert(0) += 1;
        }
        let m_order = m.order();
        for v in counts.values_mut() {
            if *v % m_order != 0 {
                return Err(CayleyError::Inconsistent(
                    "quotient statistics not divisible by |M|; M is not normal in N",
                ));
            }
            *v /= m_order;
        }
        Ok(counts)
    }

    /// Order and exponent of the quotient `N/M`.
    pub fn quotient_order_and_exponent(
        &self,
        n: &CayleySubgroup,
        m: &CayleySubgroup,
    ) -> Result<(u64, u64), CayleyError> {
        let stats = self.quotient_order_statistics(n, m)?;
        let order: u64 = stats.values().sum();
        let exponent = stats.keys().fold(1, |acc, &k| lcm(acc, k));
        Ok((order, exponent))
    }
}

fn dedup_nontrivial(xs: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    for &x in xs {
        if x != 0 && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// A subgroup in the Cayley representation: generator elements plus the full
/// element set (ascending indices and a bitset).
#[derive(Clone, Debug)]
pub struct CayleySubgroup {
    gens: Vec<u32>,
    elems: Vec<u32>,
    bits: BitSet,
}

impl CayleySubgroup {
    /// Generating elements (deduplicated, identity omitted).
    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    /// All elements, ascending.
    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    /// Subgroup order.
    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    /// Whether this is the trivial subgroup.
    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }

    /// Membership test.
    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.bits.contains(x)
    }

    /// Set containment.
    pub fn is_subset_of(&self, other: &CayleySubgroup) -> bool {
        self.bits.is_subset_of(&other.bits)
    }

    /// Set equality (ignores the choice of generators).
    pub fn set_eq(&self, other: &CayleySubgroup) -> bool {
        self.elems == other.elems
    }

    /// Size of the set intersection with another subgroup.
    pub fn intersection_size(&self, other: &CayleySubgroup) -> u64 {
        self.bits.intersection_count(&other.bits)
    }

    /// The intersection as an element list (a subgroup when both are).
    pub fn intersection_elems(&self, other: &CayleySubgroup) -> Vec<u32> {
        self.elems
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect()
    }
}

/// A homomorphism from a Cayley-represented group onto a group of explicit
/// permutations, stored as the full value table.
#[derive(Clone, Debug)]
pub struct CayleyHom {
    /// `values[x]` = index of the image of element `x` in `image_elements`.
    values: Vec<u32>,
    /// The image group's elements; index 0 is the identity.
    image_elements: Vec<Permutation>,
    /// First preimage (transversal representative) of each image element.
    transversal: Vec<u32>,
}

impl CayleyHom {
    /// Image index of element `x` (0 = identity).
    pub fn value(&self, x: u32) -> u32 {
        self.values[x as usize]
    }

    /// The image element of `x` as a permutation.
    pub fn image_of(&self, x: u32) -> &Permutation {
        &self.image_elements[self.values[x as usize] as usize]
    }

    /// Order of the image group.
    pub fn image_order(&self) -> u64 {
        self.image_elements.len() as u64
    }

    /// Whether `x` lies in the kernel.
    pub fn in_kernel(&self, x: u32) -> bool {
        self.values[x as usize] == 0
    }
}

/// Builds the homomorphism sending generator `i` of `cay` to `images[i]`,
/// after verifying that the images satisfy every relator of `pres` (the
/// presentation `cay` was enumerated from).  The value table is computed by
/// a BFS over the Cayley table.
pub fn hom_to_perms(
    cay: &CayleyGroup,
    pres: &Presentation,
    images: &[Permutation],
    degree: u32,
) -> Result<CayleyHom, CayleyError> {
    if let Err(relator_index) = pres.check_images(images, degree) {
        return Err(CayleyError::HomNotWellDefined { relator_index });
    }
    let inverses: Vec<Permutation> = images.iter().map(Permutation::inverse).collect();
    let n = cay.size() as usize;
    let mut values = vec![0u32; n];
    let mut image_elements = vec![Permutation::identity(degree)];
    let mut image_index: HashMap<Permutation, u32> = HashMap::new();
    image_index.insert(Permutation::identity(degree), 0);
    let mut transversal = vec![0u32];
    // Standardized numbering means parent(c) < c, so a single ascending pass
    // is a valid BFS over the table.
    for c in 1..n as u32 {
        let p = cay.table().parent(c);
        let l = cay.table().parent_letter(c);
        let parent_perm = &image_elements[values[p as usize] as usize];
        let gen = (l / 2) as usize;
        let perm = if l % 2 == 0 {
            parent_perm.compose(&images[gen])
        } else {
            parent_perm.compose(&inverses[gen])
        };
        let idx = match image_index.get(&perm) {
            Some(&i) => i,
            None => {
                let i = image_elements.len() as u32;
                image_elements.push(perm.clone());
                image_index.insert(perm, i);
                transversal.push(c);
                i
            }
        };
        values[c as usize] = idx;
    }
    Ok(CayleyHom {
        values,
        image_elements,
        transversal,
    })
}

/// The kernel of `hom` as a subgroup, with generators obtained from Schreier
/// generators `t_v · g · t_{f(t_v·g)}⁻¹` (stopping early once the closure
/// reaches the known kernel order `|G| / |image|`).
pub fn kernel_of_hom(cay: &CayleyGroup, hom: &CayleyHom) -> Result<CayleySubgroup, CayleyError> {
    let n = u64::from(cay.size());
    let image_order = hom.image_order();
    if n % image_order != 0 {
        return Err(CayleyError::Inconsistent(
            "image order does not divide group order",
        ));
    }
    let expected = n / image_order;
    let mut gens: Vec<u32> = Vec::new();
    let mut sub = cay.trivial_subgroup();
    'outer: for &t in &hom.transversal {
        for l in 0..cay.table().nletters() as u16 {
            if sub.order() == expected {
                break 'outer;
            }
            let s = cay.apply_letter(t, l);
            let tw = hom.transversal[hom.value(s) as usize];
            let k = cay.mult(s, cay.inv(tw));
            if k != 0 && !sub.contains(k) {
                gens.push(k);
                sub = cay.subgroup_from_gens(&gens);
            }
        }
    }
    if sub.order() != expected {
        return Err(CayleyError::Inconsistent(
            "Schreier generators did not close to the expected kernel order",
        ));
    }
    // The generated subgroup must be exactly the kernel fibre.
    for &x in sub.elems() {
        if !hom.in_kernel(x) {
            return Err(CayleyError::Inconsistent(
                "generated kernel subgroup contains a non-kernel element",
            ));
        }
    }
    Ok(sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::todd_coxeter;

    /// Builds the regular Cayley representation of a presented group.
    fn cayley(names: &[&str], relators: &[&str]) -> (CayleyGroup, Presentation) {
        let pres = Presentation::parse(names, relators).unwrap();
        let table = todd_coxeter(&pres, &[], 100_000).unwrap();
        (CayleyGroup::from_regular_table(table), pres)
    }

    fn s3() -> (CayleyGroup, Presentation) {
        cayley(&["a", "b"], &["a^3", "b^2", "(a*b)^2"])
    }

    fn q8() -> (CayleyGroup, Presentation) {
        cayley(&["a", "b"], &["a^4", "b^2*a^-2", "b^-1*a*b*a"])
    }

    /// Index → permutation dictionary via the regular action's words.
    fn perms_of(cay: &CayleyGroup, images: &[Permutation], degree: u32) -> Vec<Permutation> {
        (0..cay.size())
            .map(|c| cay.word_of(c).evaluate_perm(images, degree))
            .collect()
    }

    #[test]
    fn multiplication_matches_permutation_model() {
        let (cay, _) = s3();
        assert_eq!(cay.size(), 6);
        let a = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        let b = Permutation::parse_cycles("(1 2)", 3).unwrap();
        let dict = perms_of(&cay, &[a, b], 3);
        // The dictionary is faithful and mult/inv/comm agree with it.
        for x in 0..6u32 {
            for y in 0..6u32 {
                assert_eq!(dict[cay.mult(x, y) as usize], dict[x as usize].compose(&dict[y as usize]));
            }
            assert_eq!(dict[cay.inv(x) as usize], dict[x as usize].inverse());
            assert_eq!(cay.element_order(x), dict[x as usize].order());
        }
        for x in 0..6u32 {
            for y in 0..6u32 {
                assert_eq!(
                    dict[cay.comm(x, y) as usize],
                    dict[x as usize].commutator(&dict[y as usize])
                );
                assert_eq!(
                    dict[cay.conj(x, y) as usize],
                    dict[x as usize].conjugate(&dict[y as usize])
                );
            }
        }
    }

    #[test]
    fn subgroup_closure_orders() {
        let (cay, _) = s3();
        let a = cay.gen_element(0);
        let b = cay.gen_element(1);
        assert_eq!(cay.subgroup_from_gens(&[a]).order(), 3);
        assert_eq!(cay.subgroup_from_gens(&[b]).order(), 2);
        assert_eq!(cay.subgroup_from_gens(&[a, b]).order(), 6);
        assert_eq!(cay.trivial_subgroup().order(), 1);
        assert!(cay.full_subgroup().set_eq(&cay.subgroup_from_gens(&[a, b])));
    }

    #[test]
    fn normal_closure_in_s3() {
        let (cay, _) = s3();
        let a = cay.gen_element(0);
        let b = cay.gen_element(1);
        // ⟨a⟩ = A3 is normal; the closure of b is everything.
        assert_eq!(cay.normal_closure(&[a], &[a, b]).order(), 3);
        assert_eq!(cay.normal_closure(&[b], &[a, b]).order(), 6);
    }

    #[test]
    fn commutator_subgroup_of_s3_and_q8() {
        let (cay, _) = s3();
        let full = cay.full_subgroup();
        let derived = cay.commutator_subgroup(&full, &full);
        assert_eq!(derived.order(), 3);
        let (cay, _) = q8();
        assert_eq!(cay.size(), 8);
        let full = cay.full_subgroup();
        let derived = cay.commutator_subgroup(&full, &full);
        assert_eq!(derived.order(), 2); // [Q8, Q8] = {±1}
        assert_eq!(cay.subgroup_exponent(&full), 4);
        // The centre of Q8 is {±1} = the derived subgroup; it centralizes Q8.
        assert!(cay.centralizes(&derived, &full));
        assert!(!cay.centralizes(&full, &full));
    }

    #[test]
    fn quotient_statistics_and_exponent() {
        let (cay, _) = s3();
        let full = cay.full_subgroup();
        let a3 = cay.subgroup_from_gens(&[cay.gen_element(0)]);
        let stats = cay.quotient_order_statistics(&full, &a3).unwrap();
        assert_eq!(stats, BTreeMap::from([(1, 1), (2, 1)]));
        let (order, exp) = cay.quotient_order_and_exponent(&full, &a3).unwrap();
        assert_eq!((order, exp), (2, 2));
        // Full / trivial recovers the group itself.
        let triv = cay.trivial_subgroup();
        let (order, exp) = cay.quotient_order_and_exponent(&full, &triv).unwrap();
        assert_eq!((order, exp), (6, 6));
        // M ⊄ N is rejected.
        assert!(cay.quotient_order_statistics(&a3, &full).is_err());
    }

    #[test]
    fn hom_and_kernel_s3_onto_z2() {
        let (cay, pres) = s3();
        // a ↦ (), b ↦ (1 2): the sign quotient S3 → Z2.
        let images = [
            Permutation::identity(2),
            Permutation::parse_cycles("(1 2)", 2).unwrap(),
        ];
        let hom = hom_to_perms(&cay, &pres, &images, 2).unwrap();
        assert_eq!(hom.image_order(), 2);
        let ker = kernel_of_hom(&cay, &hom).unwrap();
        assert_eq!(ker.order(), 3);
        // The kernel is precisely ⟨a⟩.
        assert!(ker.set_eq(&cay.subgroup_from_gens(&[cay.gen_element(0)])));
        // Identity map has trivial kernel.
        let a = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        let b = Permutation::parse_cycles("(1 2)", 3).unwrap();
        let hom = hom_to_perms(&cay, &pres, &[a, b], 3).unwrap();
        assert_eq!(hom.image_order(), 6);
        assert!(kernel_of_hom(&cay, &hom).unwrap().is_trivial());
    }

    #[test]
    fn hom_rejects_non_homomorphism() {
        let (cay, pres) = s3();
        // Swapping the images violates the relator a³.
        let a = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        let b = Permutation::parse_cycles("(1 2)", 3).unwrap();
        let err = hom_to_perms(&cay, &pres, &[b, a], 3).unwrap_err();
        assert!(matches!(err, CayleyError::HomNotWellDefined { relator_index: 0 }));
    }

    #[test]
    fn bitset_operations() {
        let mut a = BitSet::new(200);
        assert!(a.insert(3));
        assert!(!a.insert(3));
        assert!(a.insert(130));
        assert!(a.contains(130) && !a.contains(131));
        assert_eq!(a.count(), 2);
        let mut b = BitSet::new(200);
        b.insert(3);
        assert!(b.is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        assert_eq!(a.intersection_count(&b), 1);
    }
}
