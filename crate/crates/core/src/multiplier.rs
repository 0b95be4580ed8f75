//! A Schur-multiplier oracle via normalized 2-cocycles.
//!
//! For each prime `p` with `p^k ∥ |G|`, the cohomology group
//! `H²(G, Z_{p^k})` (trivial action) splits by universal coefficients as
//! `Hom(M(G), Z_{p^k}) ⊕ Ext(G_ab, Z_{p^k})`.  Both `M(G)` and `G_ab` have
//! `p`-exponent dividing `p^k`, so with this `k` the summands are exactly
//! the full `p`-parts:
//!
//! ```text
//! H²(G, Z_{p^k}) ≅ M(G)_p ⊕ (G_ab)_p .
//! ```
//!
//! The oracle therefore works prime by prime:
//!
//! 1. build the normalized cocycle system over `Z_{p^k}` — one unknown
//!    `f(x, y)` per pair of non-identity elements, one equation
//!    `f(x,y) + f(xy,z) − f(y,z) − f(x,yz) = 0` per triple;
//! 2. count solution sets by reducing to diagonal form with valuation
//!    pivots (legitimate over the chain ring `Z_{p^k}`, where the minimal
//!    valuation in a row/column never drops during elimination);
//! 3. obtain the layer sizes `N_j = #{h ∈ H² : p^j·h = 0}` by counting
//!    solutions `(z, c)` of the stacked system `Δz = 0, p^j·z = δc` — each
//!    coset of `ker δ` in the `c`-block corresponds to one `z`;
//! 4. recover the `H²` invariants from the layer logs and subtract the
//!    independently computed `(G_ab)_p` multiset.
//!
//! Every step carries a cross-check that turns silent algebra bugs into
//! hard errors: `|ker δ|` must equal `|Hom(G_ab, Z_{p^k})|` computed from
//! the permutation side, `N_0` must be `1` (coboundaries are cocycles),
//! and the last layer must reach `|H²|` exactly.

use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::{
    divisors_from_layer_logs, factorize, invariants_from_order_counts, AbelianError,
    AbelianInvariants,
};
use crate::chi::BaseGroup;
use crate::group::{commutator_subgroup, quotient_order_statistics, GroupError};

/// Errors from the multiplier oracle.
#[derive(thiserror::Error, Debug)]
pub enum MultiplierError {
    /// An internal cross-check failed; the algebra cannot be trusted.
    #[error("multiplier oracle inconsistency: {0}")]
    Inconsistent(&'static str),
    /// Order statistics were not abelian where they must be.
    #[error(transparent)]
    Abelian(#[from] AbelianError),
    /// Permutation-side failure.
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// The oracle's output: `M(G)` together with the intermediate data that
/// produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurOracle {
    /// Invariants of the Schur multiplier `M(G)`.
    pub multiplier: AbelianInvariants,
    /// Invariants of `⊕_p H²(G, Z_{p^k})` over the primes of `|G|`.
    pub h2: AbelianInvariants,
    /// Invariants of `G_ab`, from permutation-side order statistics.
    pub abelianization: AbelianInvariants,
}

/// Computes the Schur multiplier of the base group by the 2-cocycle method.
pub fn schur_multiplier(base: &BaseGroup) -> Result<SchurOracle, MultiplierError> {
    let order = base.order();
    let nn = order as usize;

    // Full multiplication table in Cayley element indices.
    let cay = base.cayley();
    let mut mul = vec![0u32; nn * nn];
    for b in 0..nn as u32 {
        let letters = cay.letters_of(b);
        for a in 0..nn as u32 {
            mul[a as usize * nn + b as usize] = cay.mult_by_letters(a, &letters);
        }
    }

    // G_ab from the permutation side.
    let gprime = commutator_subgroup(base.group(), base.group())?;
    let stats = quotient_order_statistics(base.group(), &gprime, 1 << 24)?;
    let gab = invariants_from_order_counts(&stats)?;

    let mut h2_divisors: Vec<(u64, u32)> = Vec::new();
    let mut m_divisors: Vec<(u64, u32)> = Vec::new();
    for (p, k) in factorize(order) {
        let (log_layers, log_ker_delta) = p_part_layers(nn, &mul, p, k)?;
        let gab_p = AbelianInvariants::new(
            gab.divisors
                .iter()
                .copied()
                .filter(|&(q, _)| q == p)
                .collect(),
        );
        // ker δ = Hom(G_ab, Z_{p^k}): one Z_{p^min(κ,k)} per p-divisor of G_ab.
        let expected_hom_log: u64 = gab_p
            .divisors
            .iter()
            .map(|&(_, kk)| u64::from(kk.min(k)))
            .sum();
        if log_ker_delta != expected_hom_log {
            return Err(MultiplierError::Inconsistent(
                "|ker δ| differs from |Hom(G_ab, Z_{p^k})|",
            ));
        }
        let h2_p = AbelianInvariants::new(divisors_from_layer_logs(p, &log_layers)?);
        let m_p = h2_p.subtract(&gab_p).ok_or(MultiplierError::Inconsistent(
            "(G_ab)_p is not a sub-multiset of the H² invariants",
        ))?;
        h2_divisors.extend_from_slice(&h2_p.divisors);
        m_divisors.extend_from_slice(&m_p.divisors);
    }

    Ok(SchurOracle {
        multiplier: AbelianInvariants::new(m_divisors),
        h2: AbelianInvariants::new(h2_divisors),
        abelianization: gab,
    })
}

/// Layer logs `[log_p N_0, …, log_p N_k]` for `H²(G, Z_{p^k})`, plus
/// `log_p |ker δ|` for the caller's Hom cross-check.
fn p_part_layers(
    nn: usize,
    mul: &[u32],
    p: u64,
    k: u32,
) -> Result<(Vec<u64>, u64), MultiplierError> {
    let nvars = (nn - 1) * (nn - 1);
    let nc = nn - 1;
    let var = |x: usize, y: usize| (x - 1) * (nn - 1) + (y - 1);
    let m = p.pow(k);

    // Cocycle system Δ.
    let mut ech = ModMatrix::new(p, k, nvars);
    let mut row = vec![0u64; nvars];
    for x in 1..nn {
        for y in 1..nn {
            let xy = mul[x * nn + y] as usize;
            for z in 1..nn {
                for e in row.iter_mut() {
                    *e = 0;
                }
                let yz = mul[y * nn + z] as usize;
                row[var(x, y)] = (row[var(x, y)] + 1) % m;
                if xy != 0 {
                    row[var(xy, z)] = (row[var(xy, z)] + 1) % m;
                }
                row[var(y, z)] = (row[var(y, z)] + m - 1) % m;
                if yz != 0 {
                    row[var(x, yz)] = (row[var(x, yz)] + m - 1) % m;
                }
                ech.add_row(row.clone());
            }
        }
    }
    let log_z2 = ech.kernel_log();

    // Coboundary map δ on 1-cochains.
    let mut dech = ModMatrix::new(p, k, nc);
    for x in 1..nn {
        for y in 1..nn {
            let mut drow = vec![0u64; nc];
            drow[x - 1] = (drow[x - 1] + 1) % m;
            drow[y - 1] = (drow[y - 1] + 1) % m;
            let xy = mul[x * nn + y] as usize;
            if xy != 0 {
                drow[xy - 1] = (drow[xy - 1] + m - 1) % m;
            }
            dech.add_row(drow);
        }
    }
    let log_ker_delta = dech.kernel_log();
    // |B²| = |Z_{p^k}^{N−1}| / |ker δ|.
    let log_b = k as u64 * nc as u64 - log_ker_delta;
    if log_z2 < log_b {
        return Err(MultiplierError::Inconsistent("|Z²| < |B²|"));
    }

    // Stacked systems: Δz = 0 together with p^j·z = δc.
    let total = nvars + nc;
    let mut log_layers = Vec::with_capacity(k as usize + 1);
    for j in 0..=k {
        let mut st = ModMatrix::new(p, k, total);
        for r in ech.rows() {
            let mut ext = vec![0u64; total];
            ext[..nvars].copy_from_slice(r);
            st.add_row(ext);
        }
        let pj = p.pow(j) % m;
        for x in 1..nn {
            for y in 1..nn {
                let mut ext = vec![0u64; total];
                ext[var(x, y)] = pj % m;
                let cvar = |e: usize| nvars + e - 1;
                ext[cvar(x)] = (ext[cvar(x)] + m - 1) % m;
                ext[cvar(y)] = (ext[cvar(y)] + m - 1) % m;
                let xy = mul[x * nn + y] as usize;
                if xy != 0 {
                    ext[cvar(xy)] = (ext[cvar(xy)] + 1) % m;
                }
                st.add_row(ext);
            }
        }
        let log_ker_st = st.kernel_log();
        let log_zj = log_ker_st
            .checked_sub(log_ker_delta)
            .ok_or(MultiplierError::Inconsistent("stacked kernel too small"))?;
        let log_nj = log_zj
            .checked_sub(log_b)
            .ok_or(MultiplierError::Inconsistent("layer below coboundaries"))?;
        log_layers.push(log_nj);
    }
    if log_layers.first() != Some(&0) {
        return Err(MultiplierError::Inconsistent(
            "some coboundary is not a cocycle (N_0 ≠ 1)",
        ));
    }
    if log_layers.last().copied() != Some(log_z2 - log_b) {
        return Err(MultiplierError::Inconsistent(
            "layers do not stabilize at |H²|",
        ));
    }
    Ok((log_layers, log_ker_delta))
}

/// Row-echelon accumulator over `Z_{p^k}`, keeping the row space of
/// everything added.  Rows are normalized so each pivot entry is exactly a
/// power of `p`; a row whose pivot-column valuation beats the incumbent
/// displaces it and the incumbent is re-added.
struct ModMatrix {
    p: u64,
    k: u32,
    m: u64,
    ncols: usize,
    pivot_of_col: Vec<Option<usize>>,
    rows: Vec<Vec<u64>>,
}

impl ModMatrix {
    fn new(p: u64, k: u32, ncols: usize) -> Self {
        ModMatrix {
            p,
            k,
            m: p.pow(k),
            ncols,
            pivot_of_col: vec![None; ncols],
            rows: Vec::new(),
        }
    }

    fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.rows.iter().map(Vec::as_slice)
    }

    fn val(&self, x: u64) -> u32 {
        if x == 0 {
            return self.k;
        }
        let mut v = 0;
        let mut x = x;
        while x % self.p == 0 {
            x /= self.p;
            v += 1;
        }
        v
    }

    /// Inverse of the unit `u` modulo `p^k` via `u^{φ(p^k)−1}`.
    fn unit_inv(&self, u: u64) -> u64 {
        let phi = self.m / self.p * (self.p - 1);
        mod_pow(u, phi - 1, self.m)
    }

    /// Multiplies `row` by the unit making its entry at `col` exactly
    /// `p^val(entry)`.
    fn normalize(&self, row: &mut [u64], col: usize) {
        let v = self.val(row[col]);
        let unit = row[col] / self.p.pow(v);
        let inv = self.unit_inv(unit);
        if inv != 1 {
            for e in row.iter_mut() {
                *e = *e * inv % self.m;
            }
        }
    }

    fn add_row(&mut self, mut row: Vec<u64>) {
        let mut j = 0;
        while j < self.ncols {
            if row[j] == 0 {
                j += 1;
                continue;
            }
            match self.pivot_of_col[j] {
                None => {
                    self.normalize(&mut row, j);
                    self.pivot_of_col[j] = Some(self.rows.len());
                    self.rows.push(row);
                    return;
                }
                Some(i) => {
                    let vp = self.val(self.rows[i][j]);
                    let v = self.val(row[j]);
                    if v >= vp {
                        // Pivot entry is exactly p^vp, so the division is exact.
                        let q = row[j] / self.p.pow(vp);
                        let pivot = &self.rows[i];
                        for (e, &pe) in row.iter_mut().zip(pivot.iter()).skip(j) {
                            *e = (*e + (self.m - q * pe % self.m)) % self.m;
                        }
                    } else {
                        // The new row has the stronger pivot; swap it in and
                        // keep reducing the displaced incumbent.
                        self.normalize(&mut row, j);
                        core::mem::swap(&mut self.rows[i], &mut row);
                    }
                }
            }
        }
    }

    /// `log_p` of the number of solutions of `Ax = 0` over `Z_{p^k}`,
    /// where `A` is any matrix with this row space.
    fn kernel_log(&self) -> u64 {
        let mut work: Vec<Vec<u64>> = self.rows.clone();
        let vals = snf_valuations(&mut work, self.p, self.k, self.m, self.ncols);
        let sum: u64 = vals.iter().map(|&v| u64::from(v)).sum();
        sum + u64::from(self.k) * (self.ncols as u64 - vals.len() as u64)
    }
}

/// Diagonal (Smith-style) valuations of `work` over `Z_{p^k}`.  Over this
/// chain ring the minimal valuation in the remaining block never decreases
/// under elimination, so a single greedy pass is exact.
fn snf_valuations(work: &mut [Vec<u64>], p: u64, k: u32, m: u64, ncols: usize) -> Vec<u32> {
    let val = |x: u64| -> u32 {
        if x == 0 {
            return k;
        }
        let mut v = 0;
        let mut x = x;
        while x % p == 0 {
            x /= p;
            v += 1;
        }
        v
    };
    let nrows = work.len();
    let mut col_perm: Vec<usize> = (0..ncols).collect();
    let mut vals = Vec::new();
    let mut d = 0;
    while d < nrows && d < ncols {
        // Minimal-valuation entry in the remaining block.
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in work.iter().enumerate().skip(d) {
            for (jj, &c) in col_perm.iter().enumerate().skip(d) {
                let x = row[c];
                if x != 0 {
                    let v = val(x);
                    if best.map(|(bv, _, _)| v < bv).unwrap_or(true) {
                        best = Some((v, i, jj));
                        if v == 0 {
                            break;
                        }
                    }
                }
            }
            if matches!(best, Some((0, _, _))) {
                break;
            }
        }
        let Some((v, bi, bj)) = best else { break };
        work.swap(d, bi);
        col_perm.swap(d, bj);
        let pc = col_perm[d];
        // Normalize the pivot row so the pivot is exactly p^v.
        let unit = work[d][pc] / p.pow(v);
        let inv = unit_inv_mod(unit, p, m);
        if inv != 1 {
            for &c in &col_perm[d..] {
                work[d][c] = work[d][c] * inv % m;
            }
        }
        // Clear the pivot column below (row ops)…
        for i in d + 1..nrows {
            let x = work[i][pc];
            if x != 0 {
                let q = x / p.pow(v);
                for &c in &col_perm[d..] {
                    work[i][c] = (work[i][c] + (m - q * work[d][c] % m)) % m;
                }
            }
        }
        // …then the pivot row to the right (column ops; the pivot column is
        // now zero outside row d, so only row d changes).
        for jj in d + 1..ncols {
            work[d][col_perm[jj]] = 0;
        }
        vals.push(v);
        d += 1;
    }
    vals
}

fn unit_inv_mod(u: u64, p: u64, m: u64) -> u64 {
    let phi = m / p * (p - 1);
    mod_pow(u, phi - 1, m)
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgroups::{a4, d4, d6, h27, q8, s3, v4, z, z2cubed, z2x4, z3sq};

    fn divisors(base: &BaseGroup) -> Vec<(u64, u32)> {
        schur_multiplier(base).unwrap().multiplier.divisors
    }

    #[test]
    fn multiplier_of_cyclic_groups_is_trivial() {
        for n in [2u64, 3, 4, 6] {
            assert_eq!(divisors(&z(n)), alloc::vec![], "M(Z_{n})");
        }
    }

    #[test]
    fn multiplier_of_abelian_groups() {
        // M(Z_m × Z_n) = Z_gcd(m,n); M(Z2³) = Z2³ (one Z2 per 2-subset).
        assert_eq!(divisors(&v4()), alloc::vec![(2, 1)]);
        assert_eq!(divisors(&z2x4()), alloc::vec![(2, 1)]);
        assert_eq!(divisors(&z3sq()), alloc::vec![(3, 1)]);
        assert_eq!(divisors(&z2cubed()), alloc::vec![(2, 1), (2, 1), (2, 1)]);
    }

    #[test]
    fn multiplier_of_small_nonabelian_groups() {
        assert_eq!(divisors(&s3()), alloc::vec![]);
        assert_eq!(divisors(&q8()), alloc::vec![]);
        assert_eq!(divisors(&d4()), alloc::vec![(2, 1)]);
        assert_eq!(divisors(&d6()), alloc::vec![(2, 1)]);
        assert_eq!(divisors(&a4()), alloc::vec![(2, 1)]);
    }

    #[test]
    fn h2_carries_both_summands() {
        // For D4: H²(G, Z_4) ≅ M ⊕ G_ab = Z2 ⊕ Z2².
        let oracle = schur_multiplier(&d4()).unwrap();
        assert_eq!(oracle.abelianization.divisors, alloc::vec![(2, 1), (2, 1)]);
        assert_eq!(oracle.h2.divisors, alloc::vec![(2, 1), (2, 1), (2, 1)]);
        assert_eq!(alloc::format!("{}", oracle.multiplier), "Z2");
    }

    #[test]
    fn multiplier_of_extraspecial_27_exponent_3() {
        // The Heisenberg group over F3 has multiplier Z3 × Z3.
        assert_eq!(divisors(&h27()), alloc::vec![(3, 1), (3, 1)]);
    }
}
