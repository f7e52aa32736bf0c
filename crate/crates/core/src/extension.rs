//! Dedecker extensions `1 → G₁ → E → Γ → 1` with `ȷ: E → G₀`, i.e.
//! one-winged butterflies from `[1 → Γ]`, and their classification by H¹.

use thiserror::Error;

use crate::braiding::BraidedCrossedModule;
use crate::butterfly::{
    butterfly_iso_search, compose, from_strict, Butterfly, ButterflyError, ButterflyIso,
};
use crate::cocycle::{enumerate_h1, Cocycle1, CocycleError, H1Classes, SearchError};
use crate::fgroup::{semidirect_product, FiniteGroup, GroupRef, Homomorphism};
use crate::xmod::{CrossedModule, StrictMorphism};
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtError {
    #[error("maps do not fit Γ, E and the crossed module")]
    Shape,
    #[error("ι is not injective: {g} ↦ 1")]
    IotaNotInjective { g: String },
    #[error("π is not surjective: {x} has no preimage")]
    PiNotSurjective { x: String },
    #[error("ker π ≠ im ι at {e}")]
    NotExact { e: String },
    #[error("ȷ∘ι ≠ δ at {g}")]
    DeltaMismatch { g: String },
    #[error("{e}⁻¹·ι({g})·{e} ≠ ι({g}^ȷ({e}))")]
    ConjugationFail { e: String, g: String },
    #[error("direct checks and the one-winged butterfly disagree: {0}")]
    ButterflyDisagrees(String),
    #[error("section invalid at {alpha}")]
    SectionInvalid { alpha: String },
    #[error("extensions over different Γ or crossed modules")]
    Mismatch,
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Butterfly(#[from] ButterflyError),
}

/// A validated extension of `Γ` by a crossed module.
#[derive(Clone, Debug)]
pub struct DedeckerExtension {
    butterfly: Butterfly,
}

pub fn ext_validate(
    name: &str,
    target: &CrossedModule,
    iota: Homomorphism,
    pi: Homomorphism,
    jay: Homomorphism,
) -> Result<DedeckerExtension, ExtError> {
    DedeckerExtension::new(name, target, iota, pi, jay)
}

impl DedeckerExtension {
    pub fn new(
        name: &str,
        target: &CrossedModule,
        iota: Homomorphism,
        pi: Homomorphism,
        jay: Homomorphism,
    ) -> Result<Self, ExtError> {
        let e = pi.source().clone();
        if **iota.source() != **target.g1()
            || **iota.target() != *e
            || **jay.source() != *e
            || **jay.target() != **target.g0()
        {
            return Err(ExtError::Shape);
        }
        let (g1, gm) = (target.g1(), pi.target());
        let direct = (|| {
            if let Some(&g) = iota
                .kernel()
                .members()
                .iter()
                .find(|&&g| g != g1.identity())
            {
                return Err(ExtError::IotaNotInjective {
                    g: g1.label(g).to_string(),
                });
            }
            let im = pi.image();
            if let Some(x) = gm.elements().find(|&x| !im.contains(x)) {
                return Err(ExtError::PiNotSurjective {
                    x: gm.label(x).to_string(),
                });
            }
            if iota.image() != pi.kernel() {
                let k = pi.kernel();
                let i = iota.image();
                let bad = e
                    .elements()
                    .find(|&x| k.contains(x) != i.contains(x))
                    .expect("subgroups differ somewhere");
                return Err(ExtError::NotExact {
                    e: e.label(bad).to_string(),
                });
            }
            for g in g1.elements() {
                if jay.apply(iota.apply(g)) != target.d(g) {
                    return Err(ExtError::DeltaMismatch {
                        g: g1.label(g).to_string(),
                    });
                }
            }
            for x in e.elements() {
                for g in g1.elements() {
                    if e.conj(iota.apply(g), x) != iota.apply(target.act(g, jay.apply(x))) {
                        return Err(ExtError::ConjugationFail {
                            e: e.label(x).to_string(),
                            g: g1.label(g).to_string(),
                        });
                    }
                }
            }
            Ok(())
        })();
        let bf = Butterfly::one_winged(name, target, iota, pi, jay);
        match (direct, bf) {
            (Ok(()), Ok(butterfly)) => Ok(DedeckerExtension { butterfly }),
            (Err(err), Err(_)) => Err(err),
            (Ok(()), Err(b)) => Err(ExtError::ButterflyDisagrees(b.to_string())),
            (Err(err), Ok(_)) => Err(ExtError::ButterflyDisagrees(err.to_string())),
        }
    }

    /// A one-winged butterfly from `[1 → Γ]`.
    pub fn from_butterfly(b: Butterfly) -> Result<Self, ExtError> {
        if !b.domain().g1().is_trivial() {
            return Err(ExtError::Shape);
        }
        DedeckerExtension::new(
            b.name(),
            b.codomain(),
            b.iota().clone(),
            b.pi().clone(),
            b.jay().clone(),
        )
    }

    pub fn name(&self) -> &str {
        self.butterfly.name()
    }

    pub fn gamma(&self) -> &GroupRef {
        self.butterfly.domain().g0()
    }

    pub fn target(&self) -> &CrossedModule {
        self.butterfly.codomain()
    }

    pub fn e(&self) -> &GroupRef {
        self.butterfly.e()
    }

    pub fn iota(&self) -> &Homomorphism {
        self.butterfly.iota()
    }

    pub fn pi(&self) -> &Homomorphism {
        self.butterfly.pi()
    }

    pub fn jay(&self) -> &Homomorphism {
        self.butterfly.jay()
    }

    pub fn butterfly(&self) -> &Butterfly {
        &self.butterfly
    }

    /// Index-least preimage per fiber, with `e(1) = 1`.
    pub fn canonical_section(&self) -> Vec<usize> {
        let gm = self.gamma();
        gm.elements()
            .map(|a| {
                if a == gm.identity() {
                    self.e().identity()
                } else {
                    self.pi().preimage(a).expect("π is onto")
                }
            })
            .collect()
    }

    /// Same `E` and `π`, with `ι ↦ ι(·^{y⁻¹})` and `ȷ ↦ y⁻¹·ȷ·y`.
    pub fn twisted(&self, y: usize) -> DedeckerExtension {
        let t = self.target();
        let g0 = t.g0();
        if y == g0.identity() {
            return self.clone();
        }
        let yi = g0.inv(y);
        let iota = Homomorphism::new(
            t.g1(),
            self.e(),
            t.g1()
                .elements()
                .map(|g| self.iota().apply(t.act(g, yi)))
                .collect(),
        )
        .expect("twisted ι");
        let jay = Homomorphism::new(
            self.e(),
            g0,
            self.e()
                .elements()
                .map(|e| g0.conj(self.jay().apply(e), y))
                .collect(),
        )
        .expect("twisted ȷ");
        DedeckerExtension::new(self.name(), t, iota, self.pi().clone(), jay)
            .expect("twist of a valid extension")
    }

    /// All sections `e` with `π∘e = id` and `e(1) = 1`, at most `max`.
    pub fn sections(&self, max: usize) -> Vec<Vec<usize>> {
        let xi = Cocycle1::from_hom(
            &CrossedModule::discrete(self.gamma()),
            &Homomorphism::identity(self.gamma()),
        )
        .expect("identity cocycle");
        crate::cocycle::lift_choices(&xi, &self.butterfly, max)
    }
}

/// `E = Γ ⋉ G₁` with `Γ` acting through `ξ`, `ȷ(x,g) = ξ(x)·δg`.
pub fn trivial_extension(xi: &Homomorphism, target: &CrossedModule) -> DedeckerExtension {
    let gm = xi.source();
    let act = target.action().pullback(xi).expect("ξ lands in G₀");
    let e = semidirect_product(gm, target.g1(), &act).expect("pulled-back action");
    let eg = &e.group;
    let iota = Homomorphism::new(
        target.g1(),
        eg,
        target
            .g1()
            .elements()
            .map(|g| e.pair(gm.identity(), g))
            .collect(),
    )
    .expect("ι");
    let pi = Homomorphism::new(eg, gm, eg.elements().map(|p| e.split(p).0).collect()).expect("π");
    let jay = Homomorphism::new(
        eg,
        target.g0(),
        eg.elements()
            .map(|p| {
                let (x, g) = e.split(p);
                target.g0().mul(xi.apply(x), target.d(g))
            })
            .collect(),
    )
    .expect("ȷ");
    DedeckerExtension::new(&format!("trivial({})", gm.name()), target, iota, pi, jay)
        .expect("trivial extension is valid")
}

/// `x = ȷ∘e`, `g(α,β) = ι⁻¹((e(α)·e(β))⁻¹·e(αβ))`.
pub fn ext_to_cocycle(
    ext: &DedeckerExtension,
    section: Option<&[usize]>,
) -> Result<Cocycle1, ExtError> {
    let gm = ext.gamma();
    let e = ext.e();
    let s = match section {
        None => ext.canonical_section(),
        Some(s) => {
            if s.len() != gm.order() {
                return Err(ExtError::SectionInvalid {
                    alpha: format!("<{} entries>", s.len()),
                });
            }
            for a in gm.elements() {
                let ok = s[a] < e.order()
                    && ext.pi().apply(s[a]) == a
                    && (a != gm.identity() || s[a] == e.identity());
                if !ok {
                    return Err(ExtError::SectionInvalid {
                        alpha: gm.label(a).to_string(),
                    });
                }
            }
            s.to_vec()
        }
    };
    let x: Vec<usize> = s.iter().map(|&v| ext.jay().apply(v)).collect();
    let mut g = Vec::with_capacity(gm.order() * gm.order());
    for a in gm.elements() {
        for b in gm.elements() {
            let k = e.mul(e.inv(e.mul(s[a], s[b])), s[gm.mul(a, b)]);
            g.push(ext.iota().preimage(k).expect("lies in ker π = im ι"));
        }
    }
    Ok(Cocycle1::new(gm, ext.target(), x, g)?)
}

/// `E = Γ×G₁` with `(α,m)(β,n) = (αβ, g(α,β)⁻¹·m^{x(β)}·n)`.
pub fn cocycle_to_ext(xi: &Cocycle1) -> DedeckerExtension {
    let gm = xi.gamma();
    let t = xi.target();
    let g1 = t.g1();
    let elems: Vec<(usize, usize)> = gm
        .elements()
        .flat_map(|a| g1.elements().map(move |m| (a, m)))
        .collect();
    let e = FiniteGroup::from_operation(
        &format!("E[{}]", gm.name()),
        &elems,
        |&(a, m)| format!("({},{})", gm.label(a), g1.label(m)),
        |&(a, m), &(b, n)| {
            let v = g1.product([g1.inv(xi.g(a, b)), t.act(m, xi.x(b)), n]);
            (gm.mul(a, b), v)
        },
    )
    .expect("Schreier product of a cocycle is a group")
    .into_ref();
    let k = g1.order();
    let iota = Homomorphism::new(
        g1,
        &e,
        g1.elements().map(|n| gm.identity() * k + n).collect(),
    )
    .expect("ι");
    let pi = Homomorphism::new(&e, gm, e.elements().map(|p| p / k).collect()).expect("π");
    let jay = Homomorphism::new(
        &e,
        t.g0(),
        e.elements()
            .map(|p| t.g0().mul(xi.x(p / k), t.d(p % k)))
            .collect(),
    )
    .expect("ȷ");
    DedeckerExtension::new("schreier", t, iota, pi, jay).expect("Schreier extension is valid")
}

/// `(y, φ)` with `φ: E → E'` a butterfly isomorphism from the `y`-twist of
/// the first extension to the second.
#[derive(Clone, Debug)]
pub struct ExtEquivalence {
    pub y: usize,
    pub phi: Homomorphism,
}

/// Equivalence up to a butterfly isomorphism after conjugating by some
/// `y ∈ G₀`, scanning `y` in index order.
pub fn ext_equivalent(
    a: &DedeckerExtension,
    b: &DedeckerExtension,
    limits: &Limits,
) -> Result<Option<ExtEquivalence>, ExtError> {
    if a.gamma() != b.gamma() || a.target() != b.target() {
        return Err(ExtError::Mismatch);
    }
    for y in a.target().g0().elements() {
        let twisted = a.twisted(y);
        if let Some(ButterflyIso { phi }) =
            butterfly_iso_search(&twisted.butterfly, &b.butterfly, limits)?
        {
            return Ok(Some(ExtEquivalence { y, phi }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct ExtClasses {
    pub h1: H1Classes,
    pub extensions: Vec<DedeckerExtension>,
}

impl ExtClasses {
    pub fn count(&self) -> usize {
        self.extensions.len()
    }
}

pub fn classify_ext(
    gamma: &GroupRef,
    target: &CrossedModule,
    limits: &Limits,
) -> Result<ExtClasses, SearchError> {
    let h1 = enumerate_h1(gamma, target, limits)?;
    let extensions = h1.reps().map(cocycle_to_ext).collect();
    Ok(ExtClasses { h1, extensions })
}

/// `Δ^*((E × E') ∘ braiding)`.
pub fn baer_sum(
    a: &DedeckerExtension,
    b: &DedeckerExtension,
    braid: &BraidedCrossedModule,
) -> Result<DedeckerExtension, ExtError> {
    if a.gamma() != b.gamma() || a.target() != b.target() || a.target() != braid.base() {
        return Err(ExtError::Mismatch);
    }
    let gm = a.gamma();
    let prod = Butterfly::product(&a.butterfly, &b.butterfly);
    let braided = compose(&prod, braid.butterfly())?;
    let diag_dom = CrossedModule::discrete(gm);
    let f1 = Homomorphism::trivial(diag_dom.g1(), prod.domain().g1());
    let n = gm.order();
    let f0 = Homomorphism::new(
        gm,
        prod.domain().g0(),
        gm.elements().map(|x| x * n + x).collect(),
    )
    .expect("diagonal Γ → Γ×Γ");
    let delta =
        StrictMorphism::new(&diag_dom, prod.domain(), f1, f0).expect("diagonal strict morphism");
    let pulled = compose(&from_strict(&delta), &braided)?;
    let name = format!("{}+{}", a.name(), b.name());
    let out = DedeckerExtension::from_butterfly(pulled.with_name(&name))?;
    Ok(relabel(&out))
}

fn relabel(ext: &DedeckerExtension) -> DedeckerExtension {
    let e = ext.e();
    let labels: Vec<String> = e.elements().map(|i| format!("e{i}")).collect();
    let table: Vec<usize> = e
        .elements()
        .flat_map(|a| e.elements().map(move |b| e.mul(a, b)))
        .collect();
    let g = FiniteGroup::from_index_table(e.name(), labels, table)
        .expect("relabelled group")
        .into_ref();
    let iota = Homomorphism::new(ext.target().g1(), &g, ext.iota().map().to_vec()).expect("ι");
    let pi = Homomorphism::new(&g, ext.gamma(), ext.pi().map().to_vec()).expect("π");
    let jay = Homomorphism::new(&g, ext.target().g0(), ext.jay().map().to_vec()).expect("ȷ");
    DedeckerExtension::new(ext.name(), ext.target(), iota, pi, jay).expect("relabelled extension")
}
