//! 1-cocycles on the nerve BΓ with values in a crossed module.
//!
//! On BΓ a 1-cocycle is a pair `x: Γ → G₀`, `g: Γ×Γ → G₁`, normalized, with
//!
//! ```text
//! x(αβ) = x(α)·x(β)·δg(α,β)
//! g(β,γ)·g(α,βγ) = g(α,β)^{x(γ)}·g(αβ,γ)
//! ```

mod descent;
mod enumerate;
mod homotopy;
mod lift;
pub mod wbar;

pub use descent::{descent0_validate, Cover, Descent0, DescentError};
pub use enumerate::{enumerate_cocycles, enumerate_h1, H1Classes};
pub use homotopy::{are_equivalent, homotopy_check, Homotopy1, HomotopyError};
pub use lift::{lift_along_butterfly, lift_choices, Lift, LiftError};
pub use wbar::{wbar_check, RawHomotopy, WbarFailure, WbarReport};

use std::fmt;

use thiserror::Error;

use crate::fgroup::GroupRef;
use crate::xmod::CrossedModule;
use crate::GuardError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CocycleError {
    #[error("x has {x} entries and g has {g}; expected {n} and {n}²")]
    Shape { n: usize, x: usize, g: usize },
    #[error("value out of range in {0}")]
    OutOfRange(&'static str),
    #[error("not normalized at {0}")]
    NotNormalized(String),
    #[error("x({a}{b}) ≠ x({a})·x({b})·δg({a},{b})")]
    TwistFail { a: String, b: String },
    #[error("g({b},{c})·g({a},{b}{c}) ≠ g({a},{b})^x({c})·g({a}{b},{c})")]
    AssociatorFail { a: String, b: String, c: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("cocycles live over different groups or crossed modules")]
    Mismatch,
    #[error(transparent)]
    Guard(#[from] GuardError),
}

/// Check the cocycle conditions; the first failure in index order wins.
pub fn cocycle_check(
    gamma: &GroupRef,
    target: &CrossedModule,
    x: &[usize],
    g: &[usize],
) -> Result<(), CocycleError> {
    let n = gamma.order();
    if x.len() != n || g.len() != n * n {
        return Err(CocycleError::Shape {
            n,
            x: x.len(),
            g: g.len(),
        });
    }
    let (g0, g1) = (target.g0(), target.g1());
    if x.iter().any(|&v| v >= g0.order()) {
        return Err(CocycleError::OutOfRange("x"));
    }
    if g.iter().any(|&v| v >= g1.order()) {
        return Err(CocycleError::OutOfRange("g"));
    }
    let l = |a: usize| gamma.label(a).to_string();
    let e = gamma.identity();
    if x[e] != g0.identity() {
        return Err(CocycleError::NotNormalized(format!("x({})", l(e))));
    }
    for a in gamma.elements() {
        if g[e * n + a] != g1.identity() {
            return Err(CocycleError::NotNormalized(format!("g({},{})", l(e), l(a))));
        }
        if g[a * n + e] != g1.identity() {
            return Err(CocycleError::NotNormalized(format!("g({},{})", l(a), l(e))));
        }
    }
    for a in gamma.elements() {
        for b in gamma.elements() {
            let rhs = g0.mul(g0.mul(x[a], x[b]), target.d(g[a * n + b]));
            if x[gamma.mul(a, b)] != rhs {
                return Err(CocycleError::TwistFail { a: l(a), b: l(b) });
            }
        }
    }
    for a in gamma.elements() {
        for b in gamma.elements() {
            let ab = gamma.mul(a, b);
            for c in gamma.elements() {
                let lhs = g1.mul(g[b * n + c], g[a * n + gamma.mul(b, c)]);
                let rhs = g1.mul(target.act(g[a * n + b], x[c]), g[ab * n + c]);
                if lhs != rhs {
                    return Err(CocycleError::AssociatorFail {
                        a: l(a),
                        b: l(b),
                        c: l(c),
                    });
                }
            }
        }
    }
    Ok(())
}

/// A validated normalized 1-cocycle on BΓ.
#[derive(Clone)]
pub struct Cocycle1 {
    gamma: GroupRef,
    target: CrossedModule,
    x: Vec<usize>,
    g: Vec<usize>,
}

impl PartialEq for Cocycle1 {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x
            && self.g == other.g
            && self.gamma == other.gamma
            && self.target == other.target
    }
}
impl Eq for Cocycle1 {}

impl fmt::Debug for Cocycle1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (gm, g0, g1) = (&self.gamma, self.target.g0(), self.target.g1());
        write!(f, "Cocycle1(x = {{")?;
        for a in gm.elements() {
            write!(f, "{}: {}, ", gm.label(a), g0.label(self.x[a]))?;
        }
        write!(f, "}}, g = {{")?;
        for a in gm.elements() {
            for b in gm.elements() {
                let v = self.g(a, b);
                if v != g1.identity() {
                    write!(f, "({},{}): {}, ", gm.label(a), gm.label(b), g1.label(v))?;
                }
            }
        }
        write!(f, "}})")
    }
}

pub fn cocycle_validate(
    gamma: &GroupRef,
    target: &CrossedModule,
    x: Vec<usize>,
    g: Vec<usize>,
) -> Result<Cocycle1, CocycleError> {
    Cocycle1::new(gamma, target, x, g)
}

impl Cocycle1 {
    pub fn new(
        gamma: &GroupRef,
        target: &CrossedModule,
        x: Vec<usize>,
        g: Vec<usize>,
    ) -> Result<Self, CocycleError> {
        cocycle_check(gamma, target, &x, &g)?;
        Ok(Cocycle1 {
            gamma: gamma.clone(),
            target: target.clone(),
            x,
            g,
        })
    }

    pub(crate) fn new_unchecked(
        gamma: &GroupRef,
        target: &CrossedModule,
        x: Vec<usize>,
        g: Vec<usize>,
    ) -> Self {
        debug_assert!(cocycle_check(gamma, target, &x, &g).is_ok());
        Cocycle1 {
            gamma: gamma.clone(),
            target: target.clone(),
            x,
            g,
        }
    }

    /// `x ≡ 1`, `g ≡ 1`.
    pub fn trivial(gamma: &GroupRef, target: &CrossedModule) -> Self {
        let n = gamma.order();
        Cocycle1 {
            gamma: gamma.clone(),
            target: target.clone(),
            x: vec![target.g0().identity(); n],
            g: vec![target.g1().identity(); n * n],
        }
    }

    /// The cocycle `(f, 1)` of a homomorphism `f: Γ → G₀`.
    pub fn from_hom(
        target: &CrossedModule,
        f: &crate::fgroup::Homomorphism,
    ) -> Result<Self, CocycleError> {
        let n = f.source().order();
        Cocycle1::new(
            f.source(),
            target,
            f.map().to_vec(),
            vec![target.g1().identity(); n * n],
        )
    }

    pub fn gamma(&self) -> &GroupRef {
        &self.gamma
    }

    pub fn target(&self) -> &CrossedModule {
        &self.target
    }

    #[inline]
    pub fn x(&self, a: usize) -> usize {
        self.x[a]
    }

    #[inline]
    pub fn g(&self, a: usize, b: usize) -> usize {
        self.g[a * self.gamma.order() + b]
    }

    pub fn x_values(&self) -> &[usize] {
        &self.x
    }

    pub fn g_values(&self) -> &[usize] {
        &self.g
    }

    pub fn same_setting(&self, other: &Cocycle1) -> bool {
        self.gamma == other.gamma && self.target == other.target
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgroup::{cyclic, symmetric, Homomorphism};

    #[test]
    fn examples() {
        let z2 = cyclic(2);
        let s3 = symmetric(3);
        Cocycle1::trivial(&z2, &CrossedModule::discrete(&s3));
        let f = Homomorphism::from_labels(&z2, &s3, [("1", "1"), ("t", "(12)")]).unwrap();
        Cocycle1::from_hom(&CrossedModule::discrete(&s3), &f).unwrap();
        let sh = CrossedModule::shifted(&z2).unwrap();
        Cocycle1::new(&z2, &sh, vec![0, 0], vec![0, 0, 0, 1]).unwrap();
        let err = Cocycle1::new(&z2, &sh, vec![0, 0], vec![0, 1, 0, 0]).unwrap_err();
        assert!(matches!(err, CocycleError::NotNormalized(_)));
    }
}
