//! Finite groups as Cayley tables, with the homomorphisms, right actions,
//! products and quotients the rest of the crate is built from.

mod action;
mod construct;
mod group;
mod hom;
mod search;

pub use action::{ActionError, RightAction};
pub use construct::{
    alternating, cyclic, direct_product, quotient_group, semidirect_product, symmetric, trivial,
    DirectProduct, PairGroup, QuotientError,
};
pub use group::{validate_group, FiniteGroup, GroupError, GroupRef, Subgroup};
pub use hom::{hom_analyze, HomAnalysis, HomError, Homomorphism};
pub use search::{
    all_homomorphisms, automorphism_group, find_isomorphism, generating_sequence, AutGroup,
    HomSearch,
};
