//! Computational engine for the weak-commutativity construction χ(G).
//!
//! For a finite group `G`, the group χ(G) is generated by two copies of `G`
//! (written `g` and `gᵠ`) subject to the defining relations of each copy
//! together with `[g, gᵠ] = 1` for every element `g` of `G`.  This crate
//! builds χ(G) — and the companion construction ν(G) — as concrete finite
//! groups via coset enumeration, locates the distinguished subgroups
//! `L`, `D`, `W`, `R`, `L₁`, `L₂`, `L₁,₂`, and runs a battery of structural
//! checks (exponent laws, series decompositions, commutator identities,
//! homological order links) against them.
//!
//! # Conventions
//!
//! All actions are **right** actions: `x^y = y⁻¹·x·y`, commutators are
//! `[x, y] = x⁻¹·y⁻¹·x·y`, and higher commutators are left-normed, so
//! `[x, y, z] = [[x, y], z]`.  Permutations act on points `0..degree`
//! internally; the textual cycle form is 1-based.  `compose(a, b)` means
//! "apply `a`, then `b`".
//!
//! # Crate layout
//!
//! * [`perm`], [`group`] — explicit permutations and stabilizer-chain groups
//!   (used for base groups and small-degree companions such as `T(G) ≤ G³`).
//! * [`word`], [`presentation`], [`coset`] — words, finite presentations, and
//!   an HLT-style Todd–Coxeter coset enumerator.
//! * [`cayley`] — a finite group realized as its complete right-multiplication
//!   table (elements are coset indices); the working representation of χ(G).
//! * [`chi`], [`nu`] — the χ(G) and ν(G) constructions with their
//!   distinguished subgroups and consistency invariants.
//! * [`multiplier`], [`abelian`] — a 2-cocycle Schur-multiplier oracle and
//!   abelian-invariant recovery from order statistics.
//! * [`series`] — lower-central/derived series and bracket tables inside χ.
//! * [`verify`] — the check registry and suites that produce machine-readable
//!   verdicts.
//!
//! The crate is `no_std`-compatible (`alloc` required); the default `std`
//! feature adds wall-clock timing to check results and nothing else.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod abelian;
pub mod cayley;
pub mod chi;
pub mod coset;
pub mod group;
pub mod multiplier;
pub mod nu;
pub mod perm;
pub mod presentation;
pub mod series;
pub mod verify;
pub mod word;

mod time;

#[cfg(test)]
mod testgroups;

pub use perm::Permutation;
