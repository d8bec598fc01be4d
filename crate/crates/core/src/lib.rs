//! Game comonads over finite relational structures.
//!
//! This crate implements three indexed comonads on finite relational
//! structures — round-bounded plays, pebbled plays, and pointed unravellings —
//! together with the machinery they organize: explicit game solvers for the
//! logical equivalences each comonad characterizes, coalgebra certificates
//! interconvertible with forest covers and tree decompositions (tree-depth,
//! tree-width, synchronization-tree height), and a rewrite engine turning
//! canonical conjunctive queries into resource-minimal form.
//!
//! The crate is `no_std` (with `alloc`); all operations are pure functions of
//! their inputs and every collection iterates in a deterministic order. IO,
//! serialization formats, and the command-line surface live in the companion
//! `eqgames` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod decomp;
pub mod ef;
pub mod games;
pub mod hom;
pub mod logic;
pub mod modal;
pub mod pebble;
pub mod span;
pub mod structure;
pub mod tree;

pub use structure::{
    classify_partial_map, gaifman, is_homomorphism, Elem, Graph, PartialMapClass, RelId,
    Structure, StructureError, Vocabulary,
};

use alloc::string::String;
use alloc::vec::Vec;

/// One verified equation or diagram in a law battery.
#[derive(Debug, Clone)]
pub struct LawCheck {
    pub name: &'static str,
    pub pass: bool,
    /// Rendering of a failing point, when one exists.
    pub witness: Option<String>,
}

/// Outcome of a comonad-law battery. Failures carry witnesses.
#[derive(Debug, Clone, Default)]
pub struct LawReport {
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn record(&mut self, name: &'static str, pass: bool, witness: Option<String>) {
        self.checks.push(LawCheck {
            name,
            pass,
            witness: if pass { None } else { witness },
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

pub(crate) mod util {
    /// SplitMix64 step; the deterministic source behind sampled test functions.
    pub(crate) fn mix(mut x: u64) -> u64 {
        x = x.wrapping_add(0x9e3779b97f4a7c15);
        x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
        x ^ (x >> 31)
    }

    /// Deterministic pseudo-function `0..domain -> 0..range` derived from a seed.
    pub(crate) fn sampled_map(seed: u64, salt: u64, domain: usize, range: usize) -> alloc::vec::Vec<u32> {
        assert!(range > 0);
        (0..domain)
            .map(|i| (mix(seed ^ mix(salt) ^ i as u64) % range as u64) as u32)
            .collect()
    }
}

/// Outcome of a decision procedure that may hit a resource cap.
///
/// Capped searches never downgrade to `Fails`: exceeding the cap is reported
/// as `Undecided`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Undecided,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }
}
