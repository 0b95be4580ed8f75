//! Recovery of abelian invariants from element-order statistics.
//!
//! A finite abelian group is determined by its multiset of elementary
//! divisors `p^k`, and that multiset is recoverable from the counts
//! `N_j = #{x : x^{p^j} = 1}` alone: writing `d_j = log_p(N_j / N_{j−1})`,
//! the sequence `d_1 ≥ d_2 ≥ …` counts the cyclic `p`-factors of order at
//! least `p^j`, so `p^j` occurs with multiplicity `d_j − d_{j+1}`.
//!
//! [`invariants_from_order_counts`] performs this recovery from an
//! exact-order census (as produced by the quotient-order-statistics
//! routines) and *rejects* statistics that cannot come from an abelian
//! group (ratios that are not `p`-powers, increasing `d_j`, wrong totals).
//! Rejection is best-effort: some non-abelian groups (e.g. exponent-`p`
//! groups of class 2) share their census with an abelian group, so callers
//! must only use this on sections known to be abelian.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::perm::lcm;

/// The order census is not that of an abelian group.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum AbelianError {
    /// Recovery failed; the message names the violated condition.
    #[error("order statistics are not those of an abelian group: {0}")]
    NotAbelian(&'static str),
}

/// A multiset of elementary divisors `p^k`, canonically sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianInvariants {
    /// `(p, k)` entries with multiplicity, sorted ascending; the group is
    /// the direct sum of `Z_{p^k}` over the entries.
    pub divisors: Vec<(u64, u32)>,
}

impl AbelianInvariants {
    /// The trivial group.
    pub fn trivial() -> Self {
        AbelianInvariants::default()
    }

    /// Builds from divisor entries in any order.
    pub fn new(mut divisors: Vec<(u64, u32)>) -> Self {
        divisors.sort_unstable();
        AbelianInvariants { divisors }
    }

    /// Group order: the product of the divisors.
    pub fn order(&self) -> u64 {
        self.divisors
            .iter()
            .fold(1u64, |acc, &(p, k)| acc.saturating_mul(p.saturating_pow(k)))
    }

    /// Group exponent: the lcm of the divisors.
    pub fn exponent(&self) -> u64 {
        self.divisors
            .iter()
            .fold(1u64, |acc, &(p, k)| lcm(acc, p.saturating_pow(k)))
    }

    /// Whether this is the trivial group.
    pub fn is_trivial(&self) -> bool {
        self.divisors.is_empty()
    }

    /// Removes `other`'s divisors from this multiset; `None` if `other` is
    /// not a sub-multiset.
    pub fn subtract(&self, other: &AbelianInvariants) -> Option<AbelianInvariants> {
        let mut remaining = self.divisors.clone();
        for d in &other.divisors {
            let pos = remaining.iter().position(|x| x == d)?;
            remaining.remove(pos);
        }
        Some(AbelianInvariants { divisors: remaining })
    }
}

impl core::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.divisors.is_empty() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = self
            .divisors
            .iter()
            .map(|&(p, k)| alloc::format!("Z{}", p.saturating_pow(k)))
            .collect();
        parts.reverse(); // largest factor first, e.g. "Z4 x Z2"
        write!(f, "{}", parts.join(" x "))
    }
}

/// Factors `n ≥ 1` by trial division, smallest prime first.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut k = 0u32;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Recovers the `p`-part divisors from layer logs: `log_n[j]` must be
/// `log_p #{x : x^{p^j} = 1}` for `j = 0, 1, …` (so `log_n[0] = 0`), with
/// the last entry at or past stabilization.
pub fn divisors_from_layer_logs(
    p: u64,
    log_n: &[u64],
) -> Result<Vec<(u64, u32)>, AbelianError> {
    if log_n.first() != Some(&0) {
        return Err(AbelianError::NotAbelian("layer log sequence must start at 0"));
    }
    let mut d_seq: Vec<u64> = Vec::new();
    for w in log_n.windows(2) {
        if w[1] < w[0] {
            return Err(AbelianError::NotAbelian("layer sizes decrease"));
        }
        d_seq.push(w[1] - w[0]);
    }
    for w in d_seq.windows(2) {
        if w[0] < w[1] {
            return Err(AbelianError::NotAbelian("layer ranks increase"));
        }
    }
    let mut divisors = Vec::new();
    for (j, &d_j) in d_seq.iter().enumerate() {
        let d_next = d_seq.get(j + 1).copied().unwrap_or(0);
        for _ in 0..(d_j - d_next) {
            divisors.push((p, j as u32 + 1));
        }
    }
    Ok(divisors)
}

/// Recovers abelian invariants from an exact-order census
/// (`order → #elements of exactly that order`, identity included).
pub fn invariants_from_order_counts(
    counts: &BTreeMap<u64, u64>,
) -> Result<AbelianInvariants, AbelianError> {
    let order: u64 = counts.values().sum();
    if order == 0 || counts.get(&1).copied() != Some(1) {
        return Err(AbelianError::NotAbelian(
            "census lacks a unique identity element",
        ));
    }
    let mut divisors = Vec::new();
    for (p, vp) in factorize(order) {
        // N_j = #elements of order dividing p^j = sum of counts at p-power
        // orders up to p^j.
        let mut log_layers: Vec<u64> = alloc::vec![0];
        let mut pj = 1u64;
        for _ in 1..=vp {
            pj = pj.saturating_mul(p);
            let n_j: u64 = counts
                .iter()
                .filter(|&(&d, _)| pj % d == 0)
                .map(|(_, &c)| c)
                .sum();
            let log_j = exact_log(n_j, p)
                .ok_or(AbelianError::NotAbelian("layer size is not a prime power"))?;
            log_layers.push(u64::from(log_j));
        }
        if log_layers.last().copied() != Some(u64::from(vp)) {
            return Err(AbelianError::NotAbelian(
                "layer ranks do not account for the full p-part",
            ));
        }
        divisors.extend(divisors_from_layer_logs(p, &log_layers)?);
    }
    Ok(AbelianInvariants::new(divisors))
}

fn exact_log(mut n: u64, p: u64) -> Option<u32> {
    let mut k = 0;
    while n > 1 {
        if n % p != 0 {
            return None;
        }
        n /= p;
        k += 1;
    }
    if n == 1 {
        Some(k)
    } else {
        None
    }
}
