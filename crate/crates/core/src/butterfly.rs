//! Butterflies `H• → G•`: a group `E` with wings `κ: H₁ → E`, `ι: G₁ → E`
//! and legs `π: E → H₀`, `ȷ: E → G₀`.
//!
//! ```text
//!     H₁        G₁
//!       κ ↘   ↙ ι
//!           E
//!       π ↙   ↘ ȷ
//!     H₀        G₀
//! ```

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::fgroup::{
    direct_product, quotient_group, semidirect_product, trivial, DirectProduct, FiniteGroup,
    GroupRef, HomSearch, Homomorphism, RightAction, Subgroup,
};
use crate::xmod::{CrossedModule, StrictMorphism};
use crate::{GuardError, Limits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ButterflyError {
    #[error("wings and legs do not fit the crossed modules")]
    Shape,
    #[error("π∘κ ≠ δ at {h}")]
    KappaSquare { h: String },
    #[error("ȷ∘ι ≠ δ at {g}")]
    IotaSquare { g: String },
    #[error("ȷ∘κ is not trivial at {h}")]
    NotComplex { h: String },
    #[error("π∘ι is not trivial at {g}")]
    PiIotaNonTrivial { g: String },
    #[error("ι is not injective: {g} ↦ 1")]
    IotaNotInjective { g: String },
    #[error("π is not surjective: {x} has no preimage")]
    PiNotSurjective { x: String },
    #[error("ker π ≠ im ι: {e} is in ker π")]
    NotExact { e: String },
    #[error("ι({g}^ȷ({e})) ≠ {e}⁻¹·ι({g})·{e}")]
    IotaEquivariance { g: String, e: String },
    #[error("κ({h}^π({e})) ≠ {e}⁻¹·κ({h})·{e}")]
    KappaEquivariance { h: String, e: String },
    #[error("κ({h}) and ι({g}) do not commute")]
    WingsDoNotCommute { h: String, g: String },
    #[error("codomain of the first butterfly differs from the domain of the second")]
    DomainMismatch,
    #[error(transparent)]
    Guard(#[from] GuardError),
}

#[derive(Clone)]
pub struct Butterfly {
    name: String,
    domain: CrossedModule,
    codomain: CrossedModule,
    kappa: Homomorphism,
    iota: Homomorphism,
    pi: Homomorphism,
    jay: Homomorphism,
}

impl fmt::Debug for Butterfly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Butterfly({}: {} -> {}, |E| = {})",
            self.name,
            self.domain.name(),
            self.codomain.name(),
            self.e().order()
        )
    }
}

pub fn butterfly_validate(
    name: &str,
    domain: &CrossedModule,
    codomain: &CrossedModule,
    kappa: Homomorphism,
    iota: Homomorphism,
    pi: Homomorphism,
    jay: Homomorphism,
) -> Result<Butterfly, ButterflyError> {
    Butterfly::new(name, domain, codomain, kappa, iota, pi, jay)
}

impl Butterfly {
    pub fn new(
        name: &str,
        domain: &CrossedModule,
        codomain: &CrossedModule,
        kappa: Homomorphism,
        iota: Homomorphism,
        pi: Homomorphism,
        jay: Homomorphism,
    ) -> Result<Self, ButterflyError> {
        let e = kappa.target().clone();
        if **kappa.source() != **domain.g1()
            || **iota.source() != **codomain.g1()
            || **pi.target() != **domain.g0()
            || **jay.target() != **codomain.g0()
            || **iota.target() != *e
            || **pi.source() != *e
            || **jay.source() != *e
        {
            return Err(ButterflyError::Shape);
        }
        let (h1, g1, h0) = (domain.g1(), codomain.g1(), domain.g0());
        let lh = |h: usize| h1.label(h).to_string();
        let lg = |g: usize| g1.label(g).to_string();
        let le = |x: usize| e.label(x).to_string();
        for h in h1.elements() {
            if pi.apply(kappa.apply(h)) != domain.d(h) {
                return Err(ButterflyError::KappaSquare { h: lh(h) });
            }
        }
        for g in g1.elements() {
            if jay.apply(iota.apply(g)) != codomain.d(g) {
                return Err(ButterflyError::IotaSquare { g: lg(g) });
            }
        }
        for h in h1.elements() {
            if jay.apply(kappa.apply(h)) != codomain.g0().identity() {
                return Err(ButterflyError::NotComplex { h: lh(h) });
            }
        }
        for g in g1.elements() {
            if pi.apply(iota.apply(g)) != h0.identity() {
                return Err(ButterflyError::PiIotaNonTrivial { g: lg(g) });
            }
        }
        if let Some(&g) = iota
            .kernel()
            .members()
            .iter()
            .find(|&&g| g != g1.identity())
        {
            return Err(ButterflyError::IotaNotInjective { g: lg(g) });
        }
        let im_pi = pi.image();
        if let Some(x) = h0.elements().find(|&x| !im_pi.contains(x)) {
            return Err(ButterflyError::PiNotSurjective {
                x: h0.label(x).to_string(),
            });
        }
        let im_iota = iota.image();
        if let Some(&x) = pi
            .kernel()
            .members()
            .iter()
            .find(|&&x| !im_iota.contains(x))
        {
            return Err(ButterflyError::NotExact { e: le(x) });
        }
        for g in g1.elements() {
            for x in e.elements() {
                if iota.apply(codomain.act(g, jay.apply(x))) != e.conj(iota.apply(g), x) {
                    return Err(ButterflyError::IotaEquivariance { g: lg(g), e: le(x) });
                }
            }
        }
        for h in h1.elements() {
            for x in e.elements() {
                if kappa.apply(domain.act(h, pi.apply(x))) != e.conj(kappa.apply(h), x) {
                    return Err(ButterflyError::KappaEquivariance { h: lh(h), e: le(x) });
                }
            }
        }
        for h in h1.elements() {
            for g in g1.elements() {
                if !e.commute(kappa.apply(h), iota.apply(g)) {
                    return Err(ButterflyError::WingsDoNotCommute { h: lh(h), g: lg(g) });
                }
            }
        }
        Ok(Butterfly {
            name: name.to_string(),
            domain: domain.clone(),
            codomain: codomain.clone(),
            kappa,
            iota,
            pi,
            jay,
        })
    }

    /// A butterfly from `[1 → Γ]`, i.e. with trivial `κ`.
    pub fn one_winged(
        name: &str,
        target: &CrossedModule,
        iota: Homomorphism,
        pi: Homomorphism,
        jay: Homomorphism,
    ) -> Result<Self, ButterflyError> {
        let domain = CrossedModule::discrete(pi.target());
        let kappa = Homomorphism::trivial(domain.g1(), pi.source());
        Butterfly::new(name, &domain, target, kappa, iota, pi, jay)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn domain(&self) -> &CrossedModule {
        &self.domain
    }

    pub fn codomain(&self) -> &CrossedModule {
        &self.codomain
    }

    pub fn e(&self) -> &GroupRef {
        self.pi.source()
    }

    pub fn kappa(&self) -> &Homomorphism {
        &self.kappa
    }

    pub fn iota(&self) -> &Homomorphism {
        &self.iota
    }

    pub fn pi(&self) -> &Homomorphism {
        &self.pi
    }

    pub fn jay(&self) -> &Homomorphism {
        &self.jay
    }

    /// `ι⁻¹(e)` for `e ∈ ker π`.
    pub fn iota_inv(&self, e: usize) -> Option<usize> {
        self.iota.preimage(e)
    }

    pub fn identity(x: &CrossedModule) -> Self {
        from_strict(&StrictMorphism::identity(x))
    }

    /// Componentwise product `A × B: H•×H'• → G•×G'•`.
    pub fn product(a: &Butterfly, b: &Butterfly) -> Butterfly {
        let dom = CrossedModule::product(&a.domain, &b.domain);
        let cod = CrossedModule::product(&a.codomain, &b.codomain);
        let e = direct_product(a.e(), b.e());
        let kappa = dom.g1.product_map(&e, &a.kappa, &b.kappa);
        let iota = cod.g1.product_map(&e, &a.iota, &b.iota);
        let pi = e.product_map(&dom.g0, &a.pi, &b.pi);
        let jay = e.product_map(&cod.g0, &a.jay, &b.jay);
        Butterfly::new(
            &format!("{}x{}", a.name, b.name),
            &dom.xmod,
            &cod.xmod,
            kappa,
            iota,
            pi,
            jay,
        )
        .expect("product of butterflies is a butterfly")
    }
}

/// The split butterfly of a strict morphism: `E = H₀ ⋉ G₁` with `H₀` acting
/// through `f₀`, `π(x,g) = x`, `ȷ(x,g) = f₀(x)·δg`, `ι(g) = (1,g)` and
/// `κ(h) = (δh, f₁(h)⁻¹)`.
pub fn from_strict(m: &StrictMorphism) -> Butterfly {
    let (h, g) = (&m.source, &m.target);
    let act = g
        .action()
        .pullback(&m.f0)
        .expect("f₀ lands in the acting group");
    let e = semidirect_product(h.g0(), g.g1(), &act).expect("pulled-back action");
    let eg = &e.group;
    let pi = Homomorphism::new(eg, h.g0(), eg.elements().map(|p| e.split(p).0).collect())
        .expect("projection");
    let jay = Homomorphism::new(
        eg,
        g.g0(),
        eg.elements()
            .map(|p| {
                let (x, a) = e.split(p);
                g.g0().mul(m.f0.apply(x), g.d(a))
            })
            .collect(),
    )
    .expect("ȷ of a strict morphism");
    let iota = Homomorphism::new(
        g.g1(),
        eg,
        g.g1()
            .elements()
            .map(|a| e.pair(h.g0().identity(), a))
            .collect(),
    )
    .expect("ι of a strict morphism");
    let kappa = Homomorphism::new(
        h.g1(),
        eg,
        h.g1()
            .elements()
            .map(|b| e.pair(h.d(b), g.g1().inv(m.f1.apply(b))))
            .collect(),
    )
    .expect("κ of a strict morphism");
    Butterfly::new(
        &format!("strict({}->{})", h.name(), g.name()),
        h,
        g,
        kappa,
        iota,
        pi,
        jay,
    )
    .expect("the butterfly of a strict morphism is valid")
}

/// Composite `K• → H• → G•`: the fiber product `F ×_{H₀} E` modulo the
/// image of `h ↦ (ι_F(h), κ_E(h))`.
pub fn compose(first: &Butterfly, second: &Butterfly) -> Result<Butterfly, ButterflyError> {
    if first.codomain != second.domain {
        return Err(ButterflyError::DomainMismatch);
    }
    let (f, e) = (first.e(), second.e());
    let pairs: Vec<(usize, usize)> = f
        .elements()
        .flat_map(|a| {
            e.elements()
                .filter(move |&b| first.jay.apply(a) == second.pi.apply(b))
                .map(move |b| (a, b))
        })
        .collect();
    let fp = FiniteGroup::from_operation(
        "fiber",
        &pairs,
        |&(a, b)| format!("({},{})", f.label(a), e.label(b)),
        |&(a, b), &(c, d)| (f.mul(a, c), e.mul(b, d)),
    )
    .expect("fiber product of homomorphisms is a group")
    .into_ref();
    let pos: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let h1 = first.codomain.g1();
    let gens: Vec<usize> = h1
        .elements()
        .map(|h| pos[&(first.iota.apply(h), second.kappa.apply(h))])
        .collect();
    let n = Subgroup::generated(&fp, &gens);
    let name = format!("{};{}", first.name, second.name);
    let (c, proj) = quotient_group(&fp, &n, &format!("E({name})"))
        .expect("anti-diagonal is normal in the fiber product");
    let k1 = first.domain.g1();
    let g1 = second.codomain.g1();
    let kappa = Homomorphism::new(
        k1,
        &c,
        k1.elements()
            .map(|k| proj.apply(pos[&(first.kappa.apply(k), e.identity())]))
            .collect(),
    )
    .expect("composite κ");
    let iota = Homomorphism::new(
        g1,
        &c,
        g1.elements()
            .map(|g| proj.apply(pos[&(f.identity(), second.iota.apply(g))]))
            .collect(),
    )
    .expect("composite ι");
    let rep = |q: usize| pairs[proj.preimage(q).expect("projection is onto")];
    let pi = Homomorphism::new(
        &c,
        first.domain.g0(),
        c.elements().map(|q| first.pi.apply(rep(q).0)).collect(),
    )
    .expect("composite π");
    let jay = Homomorphism::new(
        &c,
        second.codomain.g0(),
        c.elements().map(|q| second.jay.apply(rep(q).1)).collect(),
    )
    .expect("composite ȷ");
    Ok(
        Butterfly::new(&name, &first.domain, &second.codomain, kappa, iota, pi, jay)
            .expect("composite of butterflies is a butterfly"),
    )
}

/// `E• = [H₁×G₁ → E]` with `∂(h,g) = κ(h)ι(g)` and its two legs.
#[derive(Clone, Debug)]
pub struct Diagonal {
    pub exmod: CrossedModule,
    pub g1: DirectProduct,
    pub left: StrictMorphism,
    pub right: StrictMorphism,
    pub left_is_quasi_iso: bool,
}

pub fn diagonal_xmod(b: &Butterfly) -> Diagonal {
    let (h1, g1) = (b.domain.g1(), b.codomain.g1());
    let e = b.e();
    let prod = direct_product(h1, g1);
    let pg = prod.group().clone();
    let delta = Homomorphism::new(
        &pg,
        e,
        pg.elements()
            .map(|p| {
                let (h, g) = prod.pair.split(p);
                e.mul(b.kappa.apply(h), b.iota.apply(g))
            })
            .collect(),
    )
    .expect("images of κ and ι commute");
    let action = RightAction::from_fn(e, &pg, |p, x| {
        let (h, g) = prod.pair.split(p);
        prod.pair.pair(
            b.domain.act(h, b.pi.apply(x)),
            b.codomain.act(g, b.jay.apply(x)),
        )
    })
    .expect("diagonal action");
    let exmod = CrossedModule::new(&format!("diag({})", b.name), delta, action)
        .expect("diagonal crossed module");
    let left =
        StrictMorphism::new(&exmod, &b.domain, prod.pr1.clone(), b.pi.clone()).expect("left leg");
    let right = StrictMorphism::new(&exmod, &b.codomain, prod.pr2.clone(), b.jay.clone())
        .expect("right leg");
    let left_is_quasi_iso = left.is_quasi_iso().is_quasi_iso;
    Diagonal {
        exmod,
        g1: prod,
        left,
        right,
        left_is_quasi_iso,
    }
}

#[derive(Clone, Debug)]
pub struct ButterflyAnalysis {
    /// A homomorphic section of `π`, first in search order.
    pub split: Option<Homomorphism>,
    pub flippable: bool,
}

pub fn analyze(b: &Butterfly, limits: &Limits) -> Result<ButterflyAnalysis, GuardError> {
    let h0 = b.domain.g0();
    GuardError::check(
        "split-section search",
        h0.order() as u128,
        limits.max_split_order as u128,
    )?;
    let pi = b.pi.clone();
    let split = HomSearch::new(h0, b.e())
        .pointwise(move |x, s| pi.apply(s) == x)
        .first();
    let flippable =
        b.kappa.is_injective() && b.jay.is_surjective() && b.jay.kernel() == b.kappa.image();
    Ok(ButterflyAnalysis { split, flippable })
}

/// `φ: E → E'` commuting with all four maps.
#[derive(Clone, Debug)]
pub struct ButterflyIso {
    pub phi: Homomorphism,
}

pub fn butterfly_iso_search(
    a: &Butterfly,
    b: &Butterfly,
    limits: &Limits,
) -> Result<Option<ButterflyIso>, ButterflyError> {
    if a.domain != b.domain || a.codomain != b.codomain {
        return Err(ButterflyError::DomainMismatch);
    }
    GuardError::check(
        "butterfly isomorphism search",
        a.e().order().max(b.e().order()) as u128,
        limits.max_iso_order as u128,
    )?;
    if a.e().order() != b.e().order() {
        return Ok(None);
    }
    let mut required = vec![usize::MAX; a.e().order()];
    for h in a.domain.g1().elements() {
        required[a.kappa.apply(h)] = b.kappa.apply(h);
    }
    for g in a.codomain.g1().elements() {
        let x = a.iota.apply(g);
        if required[x] != usize::MAX && required[x] != b.iota.apply(g) {
            return Ok(None);
        }
        required[x] = b.iota.apply(g);
    }
    let phi = HomSearch::new(a.e(), b.e())
        .bijective()
        .pointwise(|x, y| {
            (required[x] == usize::MAX || required[x] == y)
                && a.pi.apply(x) == b.pi.apply(y)
                && a.jay.apply(x) == b.jay.apply(y)
        })
        .first();
    Ok(phi.map(|phi| ButterflyIso { phi }))
}

/// The degenerate butterfly on `[1 → 1]`.
pub fn degenerate() -> Butterfly {
    let one = trivial();
    let x = CrossedModule::discrete(&one);
    Butterfly::identity(&x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgroup::{cyclic, symmetric};

    #[test]
    fn identity_butterflies_validate() {
        let l = Limits::default();
        for x in [
            CrossedModule::inner(&symmetric(3), &l).unwrap(),
            CrossedModule::shifted(&cyclic(2)).unwrap(),
            CrossedModule::discrete(&cyclic(3)),
            CrossedModule::identity(&symmetric(3)),
        ] {
            let b = Butterfly::identity(&x);
            let an = analyze(&b, &l).unwrap();
            assert!(an.split.is_some());
            assert!(an.flippable, "{x:?}");
            let d = diagonal_xmod(&b);
            assert!(d.left_is_quasi_iso);
            let c = compose(&b, &b).unwrap();
            assert!(butterfly_iso_search(&c, &b, &l).unwrap().is_some());
        }
    }

    #[test]
    fn degenerate_is_unit() {
        let d = degenerate();
        assert_eq!(d.e().order(), 1);
        let c = compose(&d, &d).unwrap();
        assert_eq!(c.e().order(), 1);
    }
}
