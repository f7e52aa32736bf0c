//! Braided crossed modules, given by a braiding map `c: G₀×G₀ → G₁`, and the
//! products they induce on H⁰ and H¹.
//!
//! A braiding is valid exactly when its braiding butterfly `G•×G• → G•`
//! validates. The butterfly's center is `P = G₀×G₀×G₁` with
//!
//! ```text
//! (x₀,y₀,g₀)(x₁,y₁,g₁) = (x₀x₁, y₀y₁, c(x₁,y₀)^{y₁}·g₀^{x₁y₁}·g₁)
//! ρ(x,y,g) = (x,y)      σ(x,y,g) = x·y·δg
//! β(g) = (1,1,g)        α(g,g') = (δg, δg', (gg')⁻¹)
//! ```

use thiserror::Error;

use crate::butterfly::{Butterfly, ButterflyError};
use crate::cocycle::{
    lift_along_butterfly, Cocycle1, CocycleError, Descent0, DescentError, LiftError,
};
use crate::fgroup::{FiniteGroup, GroupError, GroupRef, HomError, HomSearch, Homomorphism};
use crate::xmod::CrossedModule;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidingError {
    #[error("braiding table has {found} entries, expected {expected}")]
    Shape { expected: usize, found: usize },
    #[error("braiding not normalized: c({x},{y}) ≠ 1")]
    NotNormalized { x: String, y: String },
    #[error("braiding invalid: the law on P is not a group law: {0}")]
    GroupLaw(GroupError),
    #[error("braiding invalid: {map} is not a homomorphism: {err}")]
    NotHomomorphism { map: &'static str, err: HomError },
    #[error("braiding invalid: {0}")]
    BraidingInvalid(ButterflyError),
    #[error("cocycles do not live over the braided crossed module")]
    Mismatch,
    #[error("product failed validation: {0}")]
    ProductInvalid(CocycleError),
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error(transparent)]
    Descent(#[from] DescentError),
}

#[derive(Clone, Debug)]
pub struct BraidedCrossedModule {
    name: String,
    base: CrossedModule,
    c: Vec<usize>,
    butterfly: Butterfly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidingAnalysis {
    pub symmetric: bool,
    pub picard: bool,
    /// `(x, y)` with `c(x,y) ≠ c(y,x)⁻¹`.
    pub symmetric_witness: Option<(String, String)>,
    /// `x` with `c(x,x) ≠ 1`.
    pub picard_witness: Option<String>,
}

/// The law on `P` for a braiding table, indexed `(x·|G₀| + y)·|G₁| + g`.
fn p_table(base: &CrossedModule, c: &[usize]) -> (Vec<String>, Vec<usize>) {
    let (g0, g1) = (base.g0(), base.g1());
    let (n0, n1) = (g0.order(), g1.order());
    let size = n0 * n0 * n1;
    let split = |p: usize| (p / (n0 * n1), (p / n1) % n0, p % n1);
    let mut labels = Vec::with_capacity(size);
    for p in 0..size {
        let (x, y, g) = split(p);
        labels.push(format!("({},{},{})", g0.label(x), g0.label(y), g1.label(g)));
    }
    let mut table = Vec::with_capacity(size * size);
    for p in 0..size {
        let (x0, y0, h0) = split(p);
        for q in 0..size {
            let (x1, y1, h1) = split(q);
            let y01 = g0.mul(y0, y1);
            let v = g1.product([
                base.act(c[x1 * n0 + y0], y1),
                base.act(h0, g0.mul(x1, y1)),
                h1,
            ]);
            table.push((g0.mul(x0, x1) * n0 + y01) * n1 + v);
        }
    }
    (labels, table)
}

pub fn braiding_butterfly(
    name: &str,
    base: &CrossedModule,
    c: &[usize],
) -> Result<Butterfly, BraidingError> {
    let (g0, g1) = (base.g0(), base.g1());
    let (n0, n1) = (g0.order(), g1.order());
    let (labels, table) = p_table(base, c);
    let p = FiniteGroup::from_index_table(&format!("P({name})"), labels, table)
        .map_err(BraidingError::GroupLaw)?
        .into_ref();
    let prod = CrossedModule::product(base, base);
    let pg0 = prod.g0.group();
    let pg1 = prod.g1.group();
    let rho = Homomorphism::new(&p, pg0, p.elements().map(|q| q / n1).collect())
        .map_err(|err| BraidingError::NotHomomorphism { map: "ρ", err })?;
    let sigma = Homomorphism::new(
        &p,
        g0,
        p.elements()
            .map(|q| {
                let (x, y, g) = (q / (n0 * n1), (q / n1) % n0, q % n1);
                g0.product([x, y, base.d(g)])
            })
            .collect(),
    )
    .map_err(|err| BraidingError::NotHomomorphism { map: "σ", err })?;
    let beta = Homomorphism::new(
        g1,
        &p,
        g1.elements()
            .map(|g| (g0.identity() * n0 + g0.identity()) * n1 + g)
            .collect(),
    )
    .map_err(|err| BraidingError::NotHomomorphism { map: "β", err })?;
    let alpha = Homomorphism::new(
        pg1,
        &p,
        pg1.elements()
            .map(|q| {
                let (g, h) = prod.g1.pair.split(q);
                (base.d(g) * n0 + base.d(h)) * n1 + g1.inv(g1.mul(g, h))
            })
            .collect(),
    )
    .map_err(|err| BraidingError::NotHomomorphism { map: "α", err })?;
    Butterfly::new(name, &prod.xmod, base, alpha, beta, rho, sigma)
        .map_err(BraidingError::BraidingInvalid)
}

impl BraidedCrossedModule {
    pub fn new(name: &str, base: &CrossedModule, c: Vec<usize>) -> Result<Self, BraidingError> {
        let (g0, g1) = (base.g0(), base.g1());
        let n0 = g0.order();
        if c.len() != n0 * n0 || c.iter().any(|&v| v >= g1.order()) {
            return Err(BraidingError::Shape {
                expected: n0 * n0,
                found: c.len(),
            });
        }
        let e = g0.identity();
        for x in g0.elements() {
            for (a, b) in [(e, x), (x, e)] {
                if c[a * n0 + b] != g1.identity() {
                    return Err(BraidingError::NotNormalized {
                        x: g0.label(a).to_string(),
                        y: g0.label(b).to_string(),
                    });
                }
            }
        }
        let butterfly = braiding_butterfly(name, base, &c)?;
        Ok(BraidedCrossedModule {
            name: name.to_string(),
            base: base.clone(),
            c,
            butterfly,
        })
    }

    /// `c ≡ 1`; valid when `G₀` acts trivially enough, e.g. abelian data.
    pub fn trivial(name: &str, base: &CrossedModule) -> Result<Self, BraidingError> {
        let n0 = base.g0().order();
        BraidedCrossedModule::new(name, base, vec![base.g1().identity(); n0 * n0])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &CrossedModule {
        &self.base
    }

    #[inline]
    pub fn c(&self, x: usize, y: usize) -> usize {
        self.c[x * self.base.g0().order() + y]
    }

    pub fn table(&self) -> &[usize] {
        &self.c
    }

    pub fn butterfly(&self) -> &Butterfly {
        &self.butterfly
    }

    pub fn p(&self) -> &GroupRef {
        self.butterfly.e()
    }

    /// Number of κ-wings `G₁×G₁ → P` over `δ×δ` that give a valid butterfly.
    pub fn wing_multiplicity(&self) -> usize {
        let b = &self.butterfly;
        let dom = b.domain().clone();
        let rho = b.pi().clone();
        let mut count = 0;
        HomSearch::new(dom.g1(), b.e())
            .pointwise(|q, v| rho.apply(v) == dom.d(q))
            .for_each(|m| {
                let kappa = Homomorphism::new(dom.g1(), b.e(), m.to_vec()).expect("searched hom");
                if Butterfly::new(
                    b.name(),
                    &dom,
                    b.codomain(),
                    kappa,
                    b.iota().clone(),
                    b.pi().clone(),
                    b.jay().clone(),
                )
                .is_ok()
                {
                    count += 1;
                }
                true
            });
        count
    }
}

pub fn braiding_analyze(b: &BraidedCrossedModule) -> BraidingAnalysis {
    let (g0, g1) = (b.base.g0(), b.base.g1());
    let mut symmetric_witness = None;
    'outer: for x in g0.elements() {
        for y in g0.elements() {
            if b.c(x, y) != g1.inv(b.c(y, x)) {
                symmetric_witness = Some((g0.label(x).to_string(), g0.label(y).to_string()));
                break 'outer;
            }
        }
    }
    let picard_witness = g0
        .elements()
        .find(|&x| b.c(x, x) != g1.identity())
        .map(|x| g0.label(x).to_string());
    let symmetric = symmetric_witness.is_none();
    BraidingAnalysis {
        symmetric,
        picard: symmetric && picard_witness.is_none(),
        symmetric_witness,
        picard_witness,
    }
}

/// `x″ = x·x'`,
/// `g″(α,β) = (c(x(β), x'(α))^{x'(β)})⁻¹·g(α,β)^{x'(α)x'(β)}·g'(α,β)`.
pub fn h1_product(
    a: &Cocycle1,
    b: &Cocycle1,
    braid: &BraidedCrossedModule,
) -> Result<Cocycle1, BraidingError> {
    if !a.same_setting(b) || a.target() != braid.base() {
        return Err(BraidingError::Mismatch);
    }
    let t = braid.base();
    let (g0, g1) = (t.g0(), t.g1());
    let gm = a.gamma();
    let x: Vec<usize> = gm.elements().map(|p| g0.mul(a.x(p), b.x(p))).collect();
    let mut g = Vec::with_capacity(gm.order() * gm.order());
    for p in gm.elements() {
        for q in gm.elements() {
            let twist = t.act(braid.c(a.x(q), b.x(p)), b.x(q));
            g.push(g1.product([
                g1.inv(twist),
                t.act(a.g(p, q), g0.mul(b.x(p), b.x(q))),
                b.g(p, q),
            ]));
        }
    }
    Cocycle1::new(gm, t, x, g).map_err(BraidingError::ProductInvalid)
}

/// The pair `(a, b)` as a cocycle into `G•×G•`.
pub fn pair_cocycle(
    a: &Cocycle1,
    b: &Cocycle1,
    braid: &BraidedCrossedModule,
) -> Result<Cocycle1, BraidingError> {
    if !a.same_setting(b) || a.target() != braid.base() {
        return Err(BraidingError::Mismatch);
    }
    let t = braid.base();
    let (n0, n1) = (t.g0().order(), t.g1().order());
    let gm = a.gamma();
    let n = gm.order();
    let x = gm.elements().map(|p| a.x(p) * n0 + b.x(p)).collect();
    let g = (0..n * n)
        .map(|k| a.g(k / n, k % n) * n1 + b.g(k / n, k % n))
        .collect();
    Cocycle1::new(gm, braid.butterfly().domain(), x, g).map_err(BraidingError::ProductInvalid)
}

/// The product obtained by lifting the pair cocycle along the braiding
/// butterfly.
pub fn h1_product_via_lift(
    a: &Cocycle1,
    b: &Cocycle1,
    braid: &BraidedCrossedModule,
) -> Result<Cocycle1, BraidingError> {
    let pair = pair_cocycle(a, b, braid)?;
    Ok(lift_along_butterfly(&pair, braid.butterfly(), None)?.result)
}

/// Class of `u·u'` in π₀.
pub fn h0_product(u: usize, v: usize, braid: &BraidedCrossedModule) -> usize {
    let inv = braid.base().homotopy_invariants();
    inv.projection.apply(braid.base().g0().mul(u, v))
}

/// `(u·u', g^{u'(v₀)}·g')`.
pub fn descent0_product(
    a: &Descent0,
    b: &Descent0,
    braid: &BraidedCrossedModule,
) -> Result<Descent0, BraidingError> {
    if a.cover() != b.cover() || a.target() != braid.base() || b.target() != braid.base() {
        return Err(BraidingError::Mismatch);
    }
    let (u, g) = a.product_raw(b);
    Ok(Descent0::new(a.cover().clone(), braid.base(), u, g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgroup::{cyclic, symmetric};

    #[test]
    fn commutator_braiding_on_identity_xmod() {
        let s3 = symmetric(3);
        let x = CrossedModule::identity(&s3);
        // δc(x,y) = y⁻¹x⁻¹yx
        let c: Vec<usize> = s3
            .elements()
            .flat_map(|a| {
                let s3 = s3.clone();
                s3.elements()
                    .map(move |b| s3.product([s3.inv(b), s3.inv(a), b, a]))
                    .collect::<Vec<_>>()
            })
            .collect();
        let b = BraidedCrossedModule::new("comm", &x, c).unwrap();
        assert!(b.wing_multiplicity() >= 1);
    }

    #[test]
    fn pairing_braiding() {
        let z2 = cyclic(2);
        let base = CrossedModule::new(
            "Z2->Z2",
            Homomorphism::trivial(&z2, &z2),
            crate::fgroup::RightAction::trivial(&z2, &z2),
        )
        .unwrap();
        let b = BraidedCrossedModule::new("pair", &base, vec![0, 0, 0, 1]).unwrap();
        assert_eq!(b.p().order(), 8);
        let an = braiding_analyze(&b);
        assert!(an.symmetric && !an.picard);
        assert!(matches!(
            BraidedCrossedModule::new("bad", &base, vec![0, 1, 0, 1]),
            Err(BraidingError::NotNormalized { .. })
        ));
    }
}
