//! Permutations of `{0, 1, …, degree-1}` stored as image tables.
//!
//! A [`Permutation`] maps point `p` to `images[p]`.  Composition follows the
//! right-action convention used throughout the crate: `a.compose(&b)` is the
//! permutation "apply `a`, then `b`", i.e. the product `a·b` in a group acting
//! on the right.  The textual cycle form is 1-based — `(1 2 3)(4 5)` — to
//! match the usual notation in group-theory sources; the identity prints as
//! `()`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors arising from malformed permutation data or mismatched degrees.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    /// The image table is not a bijection on `0..degree`.
    #[error("image table is not a bijection: point {0} occurs twice")]
    NotBijective(u32),
    /// An image or cycle entry lies outside `0..degree`.
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange {
        /// Offending point (0-based).
        point: u32,
        /// Degree of the permutation.
        degree: u32,
    },
    /// Two permutations of different degrees were combined.
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    /// A cycle mentions the same point twice.
    #[error("cycle notation repeats point {0}")]
    RepeatedCyclePoint(u32),
    /// Cycle text failed to parse.
    #[error("cycle syntax error at byte {at}: {message}")]
    CycleSyntax {
        /// Byte offset into the input.
        at: usize,
        /// Human-readable description.
        message: &'static str,
    },
}

/// A permutation of `{0, …, degree-1}` as an explicit image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// The identity permutation on `degree` points.
    pub fn identity(degree: u32) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from an image table, validating bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let degree = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &img in &images {
            if img >= degree {
                return Err(PermError::PointOutOfRange { point: img, degree });
            }
            if seen[img as usize] {
                return Err(PermError::NotBijective(img));
            }
            seen[img as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles of
    /// 0-based points.  Cycles need not be disjoint from fixed points, but a
    /// point may appear in at most one position overall.
    pub fn from_cycles(degree: u32, cycles: &[Vec<u32>]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree).collect();
        let mut touched = vec![false; degree as usize];
        for cycle in cycles {
            for &p in cycle {
                if p >= degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if touched[p as usize] {
                    return Err(PermError::RepeatedCyclePoint(p));
                }
                touched[p as usize] = true;
            }
            if cycle.len() >= 2 {
                for i in 0..cycle.len() {
                    let from = cycle[i];
                    let to = cycle[(i + 1) % cycle.len()];
                    images[from as usize] = to;
                }
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`.  Whitespace or
    /// commas separate points; `()` and the empty string denote the identity.
    /// Points must lie in `1..=degree`.
    pub fn parse_cycles(text: &str, degree: u32) -> Result<Self, PermError> {
        let bytes = text.as_bytes();
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut i = 0usize;
        while i < bytes.len() {
            let b = bytes[i];
            if b.is_ascii_whitespace() {
                i += 1;
            } else if b == b'(' {
                let mut cycle = Vec::new();
                i += 1;
                loop {
                    while i < bytes.len()
                        && (bytes[i].is_ascii_whitespace() || bytes[i] == b',')
                    {
                        i += 1;
                    }
                    if i >= bytes.len() {
                        return Err(PermError::CycleSyntax {
                            at: i,
                            message: "unterminated cycle",
                        });
                    }
                    if bytes[i] == b')' {
                        i += 1;
                        break;
                    }
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == start {
                        return Err(PermError::CycleSyntax {
                            at: i,
                            message: "expected a point number",
                        });
                    }
                    let value: u64 = text[start..i].parse().map_err(|_| {
                        PermError::CycleSyntax {
                            at: start,
                            message: "point number too large",
                        }
                    })?;
                    if value == 0 || value > u64::from(degree) {
                        return Err(PermError::PointOutOfRange {
                            point: value.min(u64::from(u32::MAX)) as u32,
                            degree,
                        });
                    }
                    cycle.push((value - 1) as u32);
                }
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
            } else {
                return Err(PermError::CycleSyntax {
                    at: i,
                    message: "expected '(' or whitespace",
                });
            }
        }
        Permutation::from_cycles(degree, &cycles)
    }

    /// Number of points acted on.
    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    /// Image of point `p`.
    #[inline]
    pub fn apply(&self, p: u32) -> u32 {
        self.images[p as usize]
    }

    /// The underlying image table.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Whether every point is fixed.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p as u32 == q)
    }

    /// The product `self·other` (apply `self`, then `other`).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree(), "compose degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&mid| other.images[mid as usize])
                .collect(),
        }
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (p, &q) in self.images.iter().enumerate() {
            images[q as usize] = p as u32;
        }
        Permutation { images }
    }

    /// The conjugate `self^other = other⁻¹·self·other`.
    pub fn conjugate(&self, other: &Permutation) -> Permutation {
        other.inverse().compose(self).compose(other)
    }

    /// The commutator `[self, other] = self⁻¹·other⁻¹·self·other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    /// The power `self^k` for any integer `k` (negative powers invert).
    pub fn pow(&self, k: i64) -> Permutation {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order: the least `k ≥ 1` with `self^k = 1`, computed as
    /// the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut order = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// The smallest moved point, if any.
    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(p, &q)| p as u32 != q)
            .map(|(p, _)| p as u32)
    }

    /// Re-embeds this permutation into degree `total`, acting on the block
    /// `offset..offset+degree` and fixing everything else.  Used to build
    /// direct products such as `G³` on `3·degree` points.
    pub fn shift_into(&self, offset: u32, total: u32) -> Result<Permutation, PermError> {
        let end = offset
            .checked_add(self.degree())
            .filter(|&e| e <= total)
            .ok_or(PermError::PointOutOfRange {
                point: total,
                degree: total,
            })?;
        let mut images: Vec<u32> = (0..total).collect();
        for p in offset..end {
            images[p as usize] = self.images[(p - offset) as usize] + offset;
        }
        Ok(Permutation { images })
    }
}

/// Least common multiple on `u64`, saturating on overflow (orders here are
/// far below that in practice).
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)).saturating_mul(b)
}

/// Greatest common divisor on `u64`.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl fmt::Display for Permutation {
    /// 1-based disjoint-cycle form; the identity is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut wrote = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p] as usize;
            }
            write!(f, "(")?;
            for (i, q) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", q + 1)?;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[deg {}] {}", self.degree(), self)
    }
}
