//! Series, iterated brackets, and central-product checks inside a Cayley
//! group.
//!
//! All routines work on [`CayleySubgroup`]s of one ambient
//! [`CayleyGroup`].  Series are returned with their first term included
//! and stop at stabilization (the last entry is the stable term, which is
//! trivial exactly when the series reaches the identity).  Commutator
//! steps use [`CayleyGroup::commutator_subgroup`], whose result is closed
//! under conjugation by the *generators of the two arguments*; each step
//! of a lower central series therefore yields subgroups normal in the
//! span of those generators, and ambient normality is certified
//! separately by [`is_normal`] where a claim requires it.

use alloc::vec;
use alloc::vec::Vec;

use crate::cayley::{CayleyGroup, CayleySubgroup};

/// Hard cap on series length; a strictly descending series in a group of
/// order < 2⁶⁴ stabilizes far earlier, so hitting the cap means a logic
/// error rather than a long series.
const SERIES_CAP: usize = 96;

/// Lower central series of `top`: `γ₁ = top`, `γ_{n+1} = [γ_n, top]`,
/// ending with the stable term.
pub fn lower_central_series(cay: &CayleyGroup, top: &CayleySubgroup) -> Vec<CayleySubgroup> {
    let mut series = vec![top.clone()];
    while series.len() < SERIES_CAP {
        let last = series.last().expect("nonempty");
        let next = cay.commutator_subgroup(last, top);
        if next.order() == last.order() {
            break;
        }
        let stop = next.is_trivial();
        series.push(next);
        if stop {
            break;
        }
    }
    series
}

/// Derived series of `top`: `top ⊇ top′ ⊇ top″ ⊇ …`, ending with the
/// stable term.
pub fn derived_series(cay: &CayleyGroup, top: &CayleySubgroup) -> Vec<CayleySubgroup> {
    let mut series = vec![top.clone()];
    while series.len() < SERIES_CAP {
        let last = series.last().expect("nonempty");
        let next = cay.commutator_subgroup(last, last);
        if next.order() == last.order() {
            break;
        }
        let stop = next.is_trivial();
        series.push(next);
        if stop {
            break;
        }
    }
    series
}

/// Nilpotency class of `top` if its lower central series reaches the
/// identity.
pub fn nilpotency_class(cay: &CayleyGroup, top: &CayleySubgroup) -> Option<u32> {
    let series = lower_central_series(cay, top);
    if series.last().map(CayleySubgroup::is_trivial) == Some(true) {
        Some(series.len() as u32 - 1)
    } else {
        None
    }
}

/// The iterated bracket `[init, with, with, …, with]` with `n` copies of
/// `with` (so `n = 0` returns `init` unchanged).
pub fn iterated_bracket(
    cay: &CayleyGroup,
    init: &CayleySubgroup,
    with: &CayleySubgroup,
    n: u32,
) -> CayleySubgroup {
    let mut current = init.clone();
    for _ in 0..n {
        current = cay.commutator_subgroup(&current, with);
    }
    current
}

/// Whether `sub` is invariant under conjugation by every element of
/// `⟨conjugators⟩` (checked on the generators of `sub`, which suffices).
pub fn is_normal(cay: &CayleyGroup, sub: &CayleySubgroup, conjugators: &[u32]) -> bool {
    for &s in sub.gens() {
        for &c in conjugators {
            if !sub.contains(cay.conj(s, c)) {
                return false;
            }
        }
    }
    true
}

/// Outcome of a central-product comparison; see [`central_product`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralProductReport {
    /// Generators of distinct factors commute (modulo the `modulo`
    /// subgroup, when one is given).
    pub commute_ok: bool,
    /// First violation: factor indices and the two generator elements.
    pub first_noncommuting: Option<(usize, usize, u32, u32)>,
    /// The closure of the union of the factors equals the target.
    pub product_ok: bool,
    /// Order of that closure.
    pub product_order: u64,
    /// Order of the comparison target.
    pub target_order: u64,
    /// At every step the closure grows exactly by `|P||F|/|P ∩ F|` — i.e.
    /// the set product is already a subgroup and no extra elements appear.
    pub order_formula_ok: bool,
}

impl CentralProductReport {
    /// All three conditions hold.
    pub fn holds(&self) -> bool {
        self.commute_ok && self.product_ok && self.order_formula_ok
    }
}

/// Checks that `target` is the (central) product of `factors`: pairwise
/// generator commutators must be trivial — or lie in `modulo` when given —
/// the closure of the union must equal `target`, and each successive
/// product must satisfy the exact order formula `|PF| = |P|·|F|/|P ∩ F|`.
pub fn central_product(
    cay: &CayleyGroup,
    factors: &[&CayleySubgroup],
    modulo: Option<&CayleySubgroup>,
    target: &CayleySubgroup,
) -> CentralProductReport {
    let mut commute_ok = true;
    let mut first_noncommuting = None;
    'outer: for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            for &x in factors[i].gens() {
                for &y in factors[j].gens() {
                    let c = cay.comm(x, y);
                    let ok = match modulo {
                        None => c == 0,
                        Some(m) => m.contains(c),
                    };
                    if !ok {
                        commute_ok = false;
                        first_noncommuting = Some((i, j, x, y));
                        break 'outer;
                    }
                }
            }
        }
    }

    let mut order_formula_ok = true;
    let mut current: Option<CayleySubgroup> = None;
    for f in factors {
        current = Some(match current {
            None => (*f).clone(),
            Some(p) => {
                let mut gens = p.gens().to_vec();
                gens.extend_from_slice(f.gens());
                let grown = cay.subgroup_from_gens(&gens);
                let inter = p.intersection_size(f);
                if grown.order() * inter != p.order() * f.order() {
                    order_formula_ok = false;
                }
                grown
            }
        });
    }
    let product = current.unwrap_or_else(|| cay.trivial_subgroup());
    let product_ok = product.set_eq(target);

    CentralProductReport {
        commute_ok,
        first_noncommuting,
        product_ok,
        product_order: product.order(),
        target_order: target.order(),
        order_formula_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group;
    use crate::testgroups::{q8, s3, s4, v4};

    #[test]
    fn cayley_series_agree_with_permutation_side() {
        // Derived series of S4: 24 ⊇ 12 ⊇ 4 ⊇ 1, lower central series
        // 24 ⊇ 12 (stable).  Computed in both representations.
        let b = s4();
        let cay = b.cayley();
        let full = cay.full_subgroup();
        let derived: Vec<u64> = derived_series(cay, &full).iter().map(|s| s.order()).collect();
        assert_eq!(derived, alloc::vec![24, 12, 4, 1]);
        let lcs: Vec<u64> = lower_central_series(cay, &full)
            .iter()
            .map(|s| s.order())
            .collect();
        assert_eq!(lcs, alloc::vec![24, 12]);
        assert_eq!(nilpotency_class(cay, &full), None);

        let perm_derived = group::derived_series(b.group()).unwrap();
        let perm_orders: Vec<u64> = perm_derived.iter().map(|g| g.order()).collect();
        assert_eq!(perm_orders, derived);

        // Q8 is nilpotent of class 2 in both worlds.
        let b = q8();
        assert_eq!(nilpotency_class(b.cayley(), &b.cayley().full_subgroup()), Some(2));
        assert_eq!(group::nilpotency_class(b.group()).unwrap(), Some(2));
    }

    #[test]
    fn iterated_bracket_matches_series_terms() {
        let b = s4();
        let cay = b.cayley();
        let full = cay.full_subgroup();
        let lcs = lower_central_series(cay, &full);
        for (n, term) in lcs.iter().enumerate() {
            let bracket = iterated_bracket(cay, &full, &full, n as u32);
            assert!(bracket.set_eq(term), "γ_{} mismatch", n + 1);
        }
        assert_eq!(iterated_bracket(cay, &full, &full, 0).order(), 24);
    }

    #[test]
    fn normality_detection() {
        let b = s3();
        let cay = b.cayley();
        let chi_gens: Vec<u32> = (0..2).map(|i| cay.gen_element(i)).collect();
        let a3 = cay.subgroup_from_gens(&[cay.gen_element(0)]);
        let b2 = cay.subgroup_from_gens(&[cay.gen_element(1)]);
        assert!(is_normal(cay, &a3, &chi_gens));
        assert!(!is_normal(cay, &b2, &chi_gens));
    }

    #[test]
    fn central_product_detection() {
        // V4 = ⟨a⟩ × ⟨b⟩ is a (central) product; Q8 is *not* the central
        // product of ⟨i⟩ and ⟨j⟩ because they do not commute.
        let b = v4();
        let cay = b.cayley();
        let fa = cay.subgroup_from_gens(&[cay.gen_element(0)]);
        let fb = cay.subgroup_from_gens(&[cay.gen_element(1)]);
        let rep = central_product(cay, &[&fa, &fb], None, &cay.full_subgroup());
        assert!(rep.holds(), "{rep:?}");

        let b = q8();
        let cay = b.cayley();
        let fi = cay.subgroup_from_gens(&[cay.gen_element(0)]);
        let fj = cay.subgroup_from_gens(&[cay.gen_element(1)]);
        let rep = central_product(cay, &[&fi, &fj], None, &cay.full_subgroup());
        assert!(!rep.commute_ok);
        assert!(rep.first_noncommuting.is_some());
        // The same pair *does* commute modulo the centre ⟨a²⟩, and the
        // order formula certifies Q8 = ⟨i⟩⟨j⟩ as a set product.
        let centre = cay.subgroup_from_gens(&[cay.pow(cay.gen_element(0), 2)]);
        let rep = central_product(cay, &[&fi, &fj], Some(&centre), &cay.full_subgroup());
        assert!(rep.commute_ok && rep.product_ok && rep.order_formula_ok);

        // Wrong target is flagged.
        let rep = central_product(cay, &[&fi], None, &cay.full_subgroup());
        assert!(!rep.product_ok);
        assert_eq!(rep.product_order, 4);
        assert_eq!(rep.target_order, 8);
    }
}
