//! Finite crossed modules, butterflies and first non-abelian cohomology.
//!
//! Everything is finite and exhaustively checked: groups are Cayley tables
//! over dense indices, maps are lookup tables, and every structure is
//! validated on construction. Actions are on the right, written `g^x`, and
//! conjugation is `g^x = x⁻¹ g x`.
//!
//! The modules build on each other in order:
//!
//! - [`fgroup`]: groups, homomorphisms, actions, quotients, searches;
//! - [`xmod`]: crossed modules, π₀/π₁, strict morphisms;
//! - [`butterfly`]: weak morphisms, composition, the diagonal crossed module;
//! - [`cocycle`]: 1-cocycles on BΓ, homotopies, H¹, lifting, W̄ checks;
//! - [`extension`]: Dedecker extensions and Baer sums;
//! - [`braiding`]: braided crossed modules and products on H⁰ and H¹;
//! - [`cli`]: JSON documents, workspaces and reports.

pub mod braiding;
pub mod butterfly;
pub mod cli;
pub mod cocycle;
pub mod extension;
pub mod fgroup;
pub mod xmod;

use thiserror::Error;

/// Size guards for the brute-force searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group whose automorphism group is computed.
    pub max_aut_order: usize,
    /// Largest group handed to isomorphism searches.
    pub max_iso_order: usize,
    /// Largest base group for split-section searches.
    pub max_split_order: usize,
    /// Bound on `|G₀|·|G₁|^(|Γ|-1)` for homotopy searches.
    pub max_equivalence_search: u128,
    /// Bound on `|G₀|^(|Γ|-1)·|G₁|^((|Γ|-1)²)` for cocycle enumeration.
    pub max_h1_search: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_aut_order: 24,
            max_iso_order: 48,
            max_split_order: 12,
            max_equivalence_search: 1_000_000,
            max_h1_search: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("size guard exceeded for {what}: {size} > {limit}")]
pub struct GuardError {
    pub what: &'static str,
    pub size: u128,
    pub limit: u128,
}

impl GuardError {
    pub(crate) fn check(what: &'static str, size: u128, limit: u128) -> Result<(), GuardError> {
        if size > limit {
            Err(GuardError { what, size, limit })
        } else {
            Ok(())
        }
    }
}

/// `base^exp`, saturating.
pub(crate) fn sat_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
