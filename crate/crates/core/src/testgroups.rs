//! Shared constructors for the small groups used across the test suites
//! (test builds only).  Every constructor goes through [`BaseGroup::new`],
//! so the presentation is validated against the permutation realization on
//! construction.

use alloc::vec::Vec;

use crate::chi::BaseGroup;
use crate::perm::Permutation;
use crate::presentation::Presentation;

pub(crate) fn make(
    names: &[&str],
    relators: &[&str],
    perms: &[&str],
    degree: u32,
) -> BaseGroup {
    let pres = Presentation::parse(names, relators).unwrap();
    let gens: Vec<Permutation> = perms
        .iter()
        .map(|s| Permutation::parse_cycles(s, degree).unwrap())
        .collect();
    BaseGroup::new(pres, gens, 1_000_000).unwrap()
}

/// Cyclic group of order `n` on `n` points.
pub(crate) fn z(n: u64) -> BaseGroup {
    let relator = alloc::format!("a^{n}");
    let pts: Vec<alloc::string::String> = (1..=n).map(|i| alloc::format!("{i}")).collect();
    let cycle = alloc::format!("({})", pts.join(" "));
    make(&["a"], &[&relator], &[&cycle], n as u32)
}

/// Klein four-group.
pub(crate) fn v4() -> BaseGroup {
    make(&["a", "b"], &["a^2", "b^2", "[a, b]"], &["(1 2)", "(3 4)"], 4)
}

/// Z2 × Z4.
pub(crate) fn z2x4() -> BaseGroup {
    make(
        &["a", "b"],
        &["a^2", "b^4", "[a, b]"],
        &["(1 2)", "(3 4 5 6)"],
        6,
    )
}

/// Z2³.
pub(crate) fn z2cubed() -> BaseGroup {
    make(
        &["a", "b", "c"],
        &["a^2", "b^2", "c^2", "[a, b]", "[a, c]", "[b, c]"],
        &["(1 2)", "(3 4)", "(5 6)"],
        6,
    )
}

/// Z3 × Z3.
pub(crate) fn z3sq() -> BaseGroup {
    make(
        &["a", "b"],
        &["a^3", "b^3", "[a, b]"],
        &["(1 2 3)", "(4 5 6)"],
        6,
    )
}

/// Symmetric group S3.
pub(crate) fn s3() -> BaseGroup {
    make(&["a", "b"], &["a^3", "b^2", "(a*b)^2"], &["(1 2 3)", "(1 2)"], 3)
}

/// Dihedral group of order 8.
pub(crate) fn d4() -> BaseGroup {
    make(
        &["a", "b"],
        &["a^4", "b^2", "(a*b)^2"],
        &["(1 2 3 4)", "(1 3)"],
        4,
    )
}

/// Quaternion group of order 8 (regular representation).
pub(crate) fn q8() -> BaseGroup {
    make(
        &["a", "b"],
        &["a^4", "b^2*a^-2", "b^-1*a*b*a"],
        &["(1 2 3 4)(5 8 6 7)", "(1 5 3 6)(2 7 4 8)"],
        8,
    )
}

/// Dihedral group of order 12.
pub(crate) fn d6() -> BaseGroup {
    make(
        &["a", "b"],
        &["a^6", "b^2", "(a*b)^2"],
        &["(1 2 3 4 5 6)", "(2 6)(3 5)"],
        6,
    )
}

/// Alternating group A4.
pub(crate) fn a4() -> BaseGroup {
    make(
        &["a", "b"],
        &["a^3", "b^3", "(a*b)^2"],
        &["(1 2 3)", "(2 3 4)"],
        4,
    )
}

/// Dihedral group of order 16.
pub(crate) fn d8() -> BaseGroup {
    make(
        &["a", "b"],
        &["a^8", "b^2", "(a*b)^2"],
        &["(1 2 3 4 5 6 7 8)", "(2 8)(3 7)(4 6)"],
        8,
    )
}

/// Symmetric group S4.
pub(crate) fn s4() -> BaseGroup {
    make(
        &["a", "b"],
        &["a^4", "b^2", "(a*b)^3"],
        &["(1 2 3 4)", "(1 2)"],
        4,
    )
}

/// Extraspecial group of order 27 and exponent 3 (Heisenberg group over F3).
pub(crate) fn h27() -> BaseGroup {
    make(
        &["a", "b"],
        &["a^3", "b^3", "[a, b, a]", "[a, b, b]"],
        &["(1 4 7)(2 5 8)(3 6 9)", "(4 5 6)(7 9 8)"],
        9,
    )
}

/// Extraspecial group of order 27 and exponent 9 (modular group M27).
pub(crate) fn m27() -> BaseGroup {
    make(
        &["a", "b"],
        &["a^9", "b^3", "b^-1*a*b*a^-4"],
        &["(1 2 3 4 5 6 7 8 9)", "(2 5 8)(3 9 6)"],
        9,
    )
}

/// Alternating group A5.
pub(crate) fn a5() -> BaseGroup {
    make(
        &["a", "b"],
        &["a^5", "b^2", "(a*b)^3"],
        &["(1 2 3 4 5)", "(1 2)(3 4)"],
        5,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_build_the_advertised_groups() {
        // BaseGroup::new already cross-validates presentation vs permutations;
        // here we pin the orders and a few invariants.
        for (g, order, exponent) in [
            (v4(), 4, 2),
            (z2x4(), 8, 4),
            (z2cubed(), 8, 2),
            (z3sq(), 9, 3),
            (s3(), 6, 6),
            (d4(), 8, 4),
            (q8(), 8, 4),
            (d6(), 12, 6),
            (a4(), 12, 6),
            (d8(), 16, 8),
            (s4(), 24, 12),
            (h27(), 27, 3),
            (m27(), 27, 9),
            (a5(), 60, 30),
        ] {
            assert_eq!(g.order(), order);
            assert_eq!(g.exponent(), exponent);
        }
    }
}
