//! Crossed modules `δ: G₁ → G₀` with a right `G₀`-action on `G₁`.

use std::fmt;

use thiserror::Error;

use crate::fgroup::{
    automorphism_group, direct_product, quotient_group, trivial, ActionError, DirectProduct,
    GroupRef, HomError, Homomorphism, RightAction, Subgroup,
};
use crate::{GuardError, Limits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum XmodError {
    #[error("δ and the action do not share G₀ and G₁")]
    Mismatch,
    #[error("equivariance fails: δ({g}^{x}) ≠ {x}⁻¹·δ({g})·{x}")]
    EquivarianceFail { g: String, x: String },
    #[error("Peiffer identity fails: {g}^δ({h}) ≠ {h}⁻¹·{g}·{h}")]
    PeifferFail { g: String, h: String },
    #[error("subgroup is not normal: {n}^{g} leaves it")]
    NotNormal { g: String, n: String },
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Guard(#[from] GuardError),
}

/// A validated crossed module. Equality is structural.
#[derive(Clone)]
pub struct CrossedModule {
    name: String,
    delta: Homomorphism,
    action: RightAction,
}

impl PartialEq for CrossedModule {
    fn eq(&self, other: &Self) -> bool {
        self.delta == other.delta && self.action == other.action
    }
}
impl Eq for CrossedModule {}

impl fmt::Debug for CrossedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CrossedModule({}: [{} -> {}])",
            self.name,
            self.g1().name(),
            self.g0().name()
        )
    }
}

/// Exhaustive axiom check, first failure in index order.
pub fn xmod_validate(
    name: &str,
    delta: Homomorphism,
    action: RightAction,
) -> Result<CrossedModule, XmodError> {
    CrossedModule::new(name, delta, action)
}

/// The standard constructions.
#[derive(Clone, Debug)]
pub enum StandardXmod {
    Inner(GroupRef),
    /// Normal subgroup generated by the given elements.
    Inclusion(GroupRef, Vec<usize>),
    Discrete(GroupRef),
    Shifted(GroupRef),
    Identity(GroupRef),
}

pub fn standard_xmod(kind: &StandardXmod, limits: &Limits) -> Result<CrossedModule, XmodError> {
    match kind {
        StandardXmod::Inner(g) => CrossedModule::inner(g, limits),
        StandardXmod::Inclusion(g, gens) => {
            CrossedModule::inclusion(g, &Subgroup::generated(g, gens))
        }
        StandardXmod::Discrete(g) => Ok(CrossedModule::discrete(g)),
        StandardXmod::Shifted(g) => CrossedModule::shifted(g),
        StandardXmod::Identity(g) => Ok(CrossedModule::identity(g)),
    }
}

impl CrossedModule {
    pub fn new(name: &str, delta: Homomorphism, action: RightAction) -> Result<Self, XmodError> {
        if **delta.source() != **action.space() || **delta.target() != **action.group() {
            return Err(XmodError::Mismatch);
        }
        let (g1, g0) = (action.space(), action.group());
        for g in g1.elements() {
            for x in g0.elements() {
                if delta.apply(action.act(g, x)) != g0.conj(delta.apply(g), x) {
                    return Err(XmodError::EquivarianceFail {
                        g: g1.label(g).to_string(),
                        x: g0.label(x).to_string(),
                    });
                }
            }
        }
        for g in g1.elements() {
            for h in g1.elements() {
                if action.act(g, delta.apply(h)) != g1.conj(g, h) {
                    return Err(XmodError::PeifferFail {
                        g: g1.label(g).to_string(),
                        h: g1.label(h).to_string(),
                    });
                }
            }
        }
        Ok(CrossedModule {
            name: name.to_string(),
            delta,
            action,
        })
    }

    /// `G → Aut(G)` with `Aut(G)` acting by evaluation.
    pub fn inner(g: &GroupRef, limits: &Limits) -> Result<Self, XmodError> {
        let aut = automorphism_group(g, limits)?;
        CrossedModule::new(&format!("inner({})", g.name()), aut.inner, aut.action)
    }

    /// `N ↪ G` for a normal subgroup, `G` acting by conjugation.
    pub fn inclusion(g: &GroupRef, n: &Subgroup) -> Result<Self, XmodError> {
        if let Err((x, m)) = n.is_normal() {
            return Err(XmodError::NotNormal {
                g: g.label(x).to_string(),
                n: g.label(m).to_string(),
            });
        }
        let (sub, inc) = n.to_group(&format!("N<{}", g.name()));
        let action = RightAction::from_fn(g, &sub, |a, x| {
            inc.preimage(g.conj(inc.apply(a), x))
                .expect("normal subgroup is stable")
        })?;
        CrossedModule::new(&format!("inclusion({})", g.name()), inc, action)
    }

    /// `[1 → G₀]`.
    pub fn discrete(g0: &GroupRef) -> Self {
        let one = trivial();
        CrossedModule {
            name: format!("discrete({})", g0.name()),
            delta: Homomorphism::trivial(&one, g0),
            action: RightAction::trivial(g0, &one),
        }
    }

    /// `[A → 1]`; the Peiffer identity forces `A` abelian.
    pub fn shifted(a: &GroupRef) -> Result<Self, XmodError> {
        let one = trivial();
        CrossedModule::new(
            &format!("shifted({})", a.name()),
            Homomorphism::trivial(a, &one),
            RightAction::trivial(&one, a),
        )
    }

    /// `[1 → 1]`.
    pub fn trivial() -> Self {
        let mut x = CrossedModule::discrete(&trivial());
        x.name = "trivial".into();
        x
    }

    /// The identity crossed module `[G → G]` with conjugation.
    pub fn identity(g: &GroupRef) -> Self {
        CrossedModule {
            name: format!("id({})", g.name()),
            delta: Homomorphism::identity(g),
            action: RightAction::conjugation(g),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn g1(&self) -> &GroupRef {
        self.action.space()
    }

    pub fn g0(&self) -> &GroupRef {
        self.action.group()
    }

    pub fn delta(&self) -> &Homomorphism {
        &self.delta
    }

    pub fn action(&self) -> &RightAction {
        &self.action
    }

    #[inline]
    pub fn d(&self, g: usize) -> usize {
        self.delta.apply(g)
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action.act(g, x)
    }

    /// Componentwise product `G•×H•`.
    pub fn product(a: &CrossedModule, b: &CrossedModule) -> ProductXmod {
        let g1 = direct_product(a.g1(), b.g1());
        let g0 = direct_product(a.g0(), b.g0());
        let delta = g1.product_map(&g0, a.delta(), b.delta());
        let mut table = Vec::with_capacity(g1.group().order() * g0.group().order());
        for p in g1.group().elements() {
            let (g, h) = g1.pair.split(p);
            for q in g0.group().elements() {
                let (x, y) = g0.pair.split(q);
                table.push(g1.pair.pair(a.act(g, x), b.act(h, y)));
            }
        }
        let action = RightAction::from_parts_unchecked(g0.group(), g1.group(), table);
        let xmod = CrossedModule {
            name: format!("{}x{}", a.name(), b.name()),
            delta,
            action,
        };
        ProductXmod { xmod, g1, g0 }
    }

    pub fn homotopy_invariants(&self) -> HomotopyInvariants {
        let im = self.delta.image();
        let (pi0, projection) = quotient_group(self.g0(), &im, &format!("pi0({})", self.name))
            .expect("image of δ is normal by equivariance");
        let (pi1, inclusion) = self.delta.kernel().to_group(&format!("pi1({})", self.name));
        assert!(pi1.is_abelian(), "ker δ is abelian by the Peiffer identity");
        HomotopyInvariants {
            pi0,
            projection,
            pi1,
            inclusion,
        }
    }
}

/// `G•×H•` together with its two product groups.
#[derive(Clone, Debug)]
pub struct ProductXmod {
    pub xmod: CrossedModule,
    pub g1: DirectProduct,
    pub g0: DirectProduct,
}

#[derive(Clone, Debug)]
pub struct HomotopyInvariants {
    /// `G₀ / im δ`.
    pub pi0: GroupRef,
    pub projection: Homomorphism,
    /// `ker δ`, abelian.
    pub pi1: GroupRef,
    pub inclusion: Homomorphism,
}

pub fn homotopy_invariants(x: &CrossedModule) -> HomotopyInvariants {
    x.homotopy_invariants()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrictError {
    #[error("f₁ and f₀ do not match the crossed modules")]
    Mismatch,
    #[error("square does not commute at {h}")]
    SquareNotCommuting { h: String },
    #[error("f₁({h}^{x}) ≠ f₁({h})^f₀({x})")]
    NotEquivariant { h: String, x: String },
}

/// A strict morphism `(f₁, f₀): H• → G•`.
#[derive(Clone, Debug)]
pub struct StrictMorphism {
    pub source: CrossedModule,
    pub target: CrossedModule,
    pub f1: Homomorphism,
    pub f0: Homomorphism,
}

#[derive(Clone, Debug)]
pub struct QuasiIso {
    pub pi0_map: Homomorphism,
    pub pi1_map: Homomorphism,
    pub is_quasi_iso: bool,
}

impl StrictMorphism {
    pub fn new(
        source: &CrossedModule,
        target: &CrossedModule,
        f1: Homomorphism,
        f0: Homomorphism,
    ) -> Result<Self, StrictError> {
        if **f1.source() != **source.g1()
            || **f1.target() != **target.g1()
            || **f0.source() != **source.g0()
            || **f0.target() != **target.g0()
        {
            return Err(StrictError::Mismatch);
        }
        let h1 = source.g1();
        for h in h1.elements() {
            if f0.apply(source.d(h)) != target.d(f1.apply(h)) {
                return Err(StrictError::SquareNotCommuting {
                    h: h1.label(h).to_string(),
                });
            }
        }
        for h in h1.elements() {
            for x in source.g0().elements() {
                if f1.apply(source.act(h, x)) != target.act(f1.apply(h), f0.apply(x)) {
                    return Err(StrictError::NotEquivariant {
                        h: h1.label(h).to_string(),
                        x: source.g0().label(x).to_string(),
                    });
                }
            }
        }
        Ok(StrictMorphism {
            source: source.clone(),
            target: target.clone(),
            f1,
            f0,
        })
    }

    pub fn identity(x: &CrossedModule) -> Self {
        StrictMorphism {
            source: x.clone(),
            target: x.clone(),
            f1: Homomorphism::identity(x.g1()),
            f0: Homomorphism::identity(x.g0()),
        }
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &StrictMorphism) -> Self {
        assert_eq!(
            self.target, next.source,
            "composing mismatched strict morphisms"
        );
        StrictMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            f1: self.f1.then(&next.f1),
            f0: self.f0.then(&next.f0),
        }
    }

    /// Induced maps on π₀ and π₁ and whether both are bijective.
    pub fn is_quasi_iso(&self) -> QuasiIso {
        let a = self.source.homotopy_invariants();
        let b = self.target.homotopy_invariants();
        let pi0_map: Vec<usize> = a
            .pi0
            .elements()
            .map(|c| {
                let rep = a.projection.preimage(c).expect("projection is onto");
                b.projection.apply(self.f0.apply(rep))
            })
            .collect();
        let pi1_map: Vec<usize> = a
            .pi1
            .elements()
            .map(|k| {
                let v = self.f1.apply(a.inclusion.apply(k));
                b.inclusion.preimage(v).expect("f₁ preserves ker δ")
            })
            .collect();
        let pi0_map = Homomorphism::new(&a.pi0, &b.pi0, pi0_map).expect("induced map on π₀");
        let pi1_map = Homomorphism::new(&a.pi1, &b.pi1, pi1_map).expect("induced map on π₁");
        let is_quasi_iso = pi0_map.is_bijective() && pi1_map.is_bijective();
        QuasiIso {
            pi0_map,
            pi1_map,
            is_quasi_iso,
        }
    }
}

pub fn strict_validate(
    source: &CrossedModule,
    target: &CrossedModule,
    f1: Homomorphism,
    f0: Homomorphism,
) -> Result<StrictMorphism, StrictError> {
    StrictMorphism::new(source, target, f1, f0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgroup::symmetric;

    #[test]
    fn shifted_s3_fails_peiffer() {
        assert!(matches!(
            CrossedModule::shifted(&symmetric(3)),
            Err(XmodError::PeifferFail { .. })
        ));
    }

    #[test]
    fn identity_xmod_is_valid() {
        let x = CrossedModule::identity(&symmetric(3));
        CrossedModule::new("id", x.delta.clone(), x.action.clone()).unwrap();
    }
}
