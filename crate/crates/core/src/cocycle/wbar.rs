//! Cocycles as simplicial maps `BΓ → W̄𝔾`, checked in low degrees.
//!
//! `𝔾` is the nerve of the action groupoid of a crossed module: an
//! n-simplex is `(x; a₁,…,aₙ)` with `x ∈ G₀` and `aᵢ ∈ G₁`. Faces are
//!
//! ```text
//! d₀(x; a₁,…) = (x·δa₁; a₂,…)
//! dᵢ merges aᵢ·aᵢ₊₁         (0 < i < n)
//! dₙ drops aₙ
//! ```
//!
//! and the product is `(x; a)(x'; a') = (xx'; …, a_k^{x'·δa'₁⋯δa'ₖ₋₁}·a'_k, …)`.
//! An n-simplex of `W̄𝔾` is `(g₀,…,gₙ₋₁)` with `gₖ ∈ 𝔾ₖ`.

use serde::Serialize;

use super::{homotopy_check, Cocycle1, Homotopy1};
use crate::fgroup::GroupRef;
use crate::xmod::CrossedModule;

/// Highest degree of `W̄𝔾` that is materialized.
pub const MAX_DEGREE: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerveSimplex {
    pub base: usize,
    pub arrows: Vec<usize>,
}

pub type WbarSimplex = Vec<NerveSimplex>;

/// Simplicial group operations on `𝔾` for one crossed module.
pub struct Nerve<'a> {
    x: &'a CrossedModule,
}

impl<'a> Nerve<'a> {
    pub fn new(x: &'a CrossedModule) -> Self {
        Nerve { x }
    }

    pub fn simplex(&self, base: usize, arrows: Vec<usize>) -> NerveSimplex {
        NerveSimplex { base, arrows }
    }

    pub fn identity(&self, n: usize) -> NerveSimplex {
        NerveSimplex {
            base: self.x.g0().identity(),
            arrows: vec![self.x.g1().identity(); n],
        }
    }

    pub fn face(&self, s: &NerveSimplex, i: usize) -> NerveSimplex {
        let n = s.arrows.len();
        assert!(n > 0 && i <= n, "face out of range");
        if i == 0 {
            return NerveSimplex {
                base: self.x.g0().mul(s.base, self.x.d(s.arrows[0])),
                arrows: s.arrows[1..].to_vec(),
            };
        }
        if i == n {
            return NerveSimplex {
                base: s.base,
                arrows: s.arrows[..n - 1].to_vec(),
            };
        }
        let mut arrows = s.arrows[..i - 1].to_vec();
        arrows.push(self.x.g1().mul(s.arrows[i - 1], s.arrows[i]));
        arrows.extend_from_slice(&s.arrows[i + 1..]);
        NerveSimplex {
            base: s.base,
            arrows,
        }
    }

    pub fn degeneracy(&self, s: &NerveSimplex, i: usize) -> NerveSimplex {
        let mut arrows = s.arrows.clone();
        arrows.insert(i, self.x.g1().identity());
        NerveSimplex {
            base: s.base,
            arrows,
        }
    }

    pub fn mul(&self, s: &NerveSimplex, t: &NerveSimplex) -> NerveSimplex {
        let (g0, g1) = (self.x.g0(), self.x.g1());
        let mut base = t.base;
        let mut arrows = Vec::with_capacity(s.arrows.len());
        for (&a, &b) in s.arrows.iter().zip(&t.arrows) {
            arrows.push(g1.mul(self.x.act(a, base), b));
            base = g0.mul(base, self.x.d(b));
        }
        NerveSimplex {
            base: g0.mul(s.base, t.base),
            arrows,
        }
    }

    pub fn wbar_face(&self, w: &[NerveSimplex], i: usize) -> WbarSimplex {
        let n = w.len();
        if i == 0 {
            return (1..n).map(|k| self.face(&w[k], k)).collect();
        }
        if i == n {
            return w[..n - 1].to_vec();
        }
        let mut out = w[..i - 1].to_vec();
        out.push(self.mul(&w[i - 1], &self.face(&w[i], 0)));
        for k in 1..n - i {
            out.push(self.face(&w[i + k], k));
        }
        out
    }

    pub fn wbar_degeneracy(&self, w: &[NerveSimplex], i: usize) -> WbarSimplex {
        let n = w.len();
        if i == 0 {
            let mut out = vec![self.identity(0)];
            out.extend(w.iter().enumerate().map(|(k, s)| self.degeneracy(s, k)));
            return out;
        }
        if i == n {
            let mut out = w.to_vec();
            out.push(self.identity(n));
            return out;
        }
        let mut out = w[..i].to_vec();
        out.push(self.identity(i));
        for k in 0..n - i {
            out.push(self.degeneracy(&w[i + k], k));
        }
        out
    }
}

fn gamma_face(gm: &GroupRef, s: &[usize], i: usize) -> Vec<usize> {
    let n = s.len();
    if i == 0 {
        return s[1..].to_vec();
    }
    if i == n {
        return s[..n - 1].to_vec();
    }
    let mut out = s[..i - 1].to_vec();
    out.push(gm.mul(s[i - 1], s[i]));
    out.extend_from_slice(&s[i + 1..]);
    out
}

fn gamma_degeneracy(gm: &GroupRef, s: &[usize], i: usize) -> Vec<usize> {
    let mut out = s.to_vec();
    out.insert(i, gm.identity());
    out
}

fn simplices(gm: &GroupRef, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|s| {
                gm.elements().map(move |a| {
                    let mut t = s.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}

/// Raw cochain data, possibly violating the cocycle conditions.
struct Raw<'a> {
    gamma: &'a GroupRef,
    target: &'a CrossedModule,
    x: &'a [usize],
    g: &'a [usize],
}

impl Raw<'_> {
    fn g(&self, a: usize, b: usize) -> usize {
        self.g[a * self.gamma.order() + b]
    }

    /// `ξₙ(α₁,…,αₙ)`: entry `k` is `(x(αₖ₊₁); P₀⁻¹P₁, P₁⁻¹P₂, …)` with
    /// `Pⱼ = g(αₖ₊₁₋ⱼ⋯αₖ, αₖ₊₁)`.
    fn xi(&self, s: &[usize]) -> WbarSimplex {
        let g1 = self.target.g1();
        (0..s.len())
            .map(|k| {
                let mut prev = g1.identity();
                let mut arrows = Vec::with_capacity(k);
                for j in 1..=k {
                    let p = self.g(self.gamma.product(s[k - j..k].iter().copied()), s[k]);
                    arrows.push(g1.mul(g1.inv(prev), p));
                    prev = p;
                }
                NerveSimplex {
                    base: self.x[s[k]],
                    arrows,
                }
            })
            .collect()
    }
}

/// Raw homotopy data `(y, a₀, a₁)` towards the cocycle `to`.
#[derive(Clone, Debug)]
pub struct RawHomotopy {
    pub to: Cocycle1,
    pub y: usize,
    pub a0: Vec<usize>,
    pub a1: Vec<usize>,
}

impl RawHomotopy {
    /// `b = a₁a₀⁻¹`.
    pub fn gauge(&self) -> Homotopy1 {
        let g1 = self.to.target().g1();
        Homotopy1 {
            y: self.y,
            b: self
                .a1
                .iter()
                .zip(&self.a0)
                .map(|(&a1, &a0)| g1.mul(a1, g1.inv(a0)))
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WbarIdentity {
    /// `dᵢ ξₙ = ξₙ₋₁ dᵢ`
    Face,
    /// `sᵢ ξₙ = ξₙ₊₁ sᵢ`
    Degeneracy,
    /// `d₀ α₀ = ξ'` or `dₙ₊₁ αₙ = ξ`
    HomotopyEnd,
    HomotopyFace,
    HomotopyDegeneracy,
    /// `(y, a₁a₀⁻¹)` fails the homotopy equations
    HomotopyEquation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WbarFailure {
    pub identity: WbarIdentity,
    pub degree: usize,
    pub index: usize,
    /// `j` of `αʲ` for homotopy identities.
    pub homotopy_index: Option<usize>,
    pub simplex: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WbarReport {
    pub checks: usize,
    pub failure: Option<WbarFailure>,
}

impl WbarReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Check `ξ` as a simplicial map through degree [`MAX_DEGREE`], and the
/// simplicial homotopy given by `h` if present.
pub fn wbar_check(xi: &Cocycle1, h: Option<&RawHomotopy>) -> WbarReport {
    let mut report = wbar_check_raw(xi.gamma(), xi.target(), xi.x_values(), xi.g_values());
    if report.failure.is_some() {
        return report;
    }
    if let Some(h) = h {
        homotopy_identities(xi, h, &mut report);
        if report.failure.is_none() {
            report.checks += 1;
            if homotopy_check(xi, &h.to, &h.gauge()).is_err() {
                report.failure = Some(WbarFailure {
                    identity: WbarIdentity::HomotopyEquation,
                    degree: 1,
                    index: 0,
                    homotopy_index: None,
                    simplex: Vec::new(),
                });
            }
        }
    }
    report
}

/// Same as [`wbar_check`] on unvalidated data, without a homotopy.
pub fn wbar_check_raw(
    gamma: &GroupRef,
    target: &CrossedModule,
    x: &[usize],
    g: &[usize],
) -> WbarReport {
    let n = gamma.order();
    assert!(x.len() == n && g.len() == n * n, "cochain shape");
    let raw = Raw {
        gamma,
        target,
        x,
        g,
    };
    let nerve = Nerve::new(target);
    let labels = |s: &[usize]| s.iter().map(|&a| gamma.label(a).to_string()).collect();
    let mut checks = 0;
    for deg in 1..=MAX_DEGREE {
        for s in simplices(gamma, deg) {
            let w = raw.xi(&s);
            for i in 0..=deg {
                checks += 1;
                if nerve.wbar_face(&w, i) != raw.xi(&gamma_face(gamma, &s, i)) {
                    return WbarReport {
                        checks,
                        failure: Some(WbarFailure {
                            identity: WbarIdentity::Face,
                            degree: deg,
                            index: i,
                            homotopy_index: None,
                            simplex: labels(&s),
                        }),
                    };
                }
            }
        }
        for s in simplices(gamma, deg - 1) {
            let w = raw.xi(&s);
            for i in 0..deg {
                checks += 1;
                if nerve.wbar_degeneracy(&w, i) != raw.xi(&gamma_degeneracy(gamma, &s, i)) {
                    return WbarReport {
                        checks,
                        failure: Some(WbarFailure {
                            identity: WbarIdentity::Degeneracy,
                            degree: deg - 1,
                            index: i,
                            homotopy_index: None,
                            simplex: labels(&s),
                        }),
                    };
                }
            }
        }
    }
    WbarReport {
        checks,
        failure: None,
    }
}

/// `αⁿⱼ(s)` for `n ≤ 2`; `ξ = dₙ₊₁αₙ` and `ξ' = d₀α₀`.
fn alpha(xi: &Cocycle1, h: &RawHomotopy, n: usize, j: usize, s: &[usize]) -> WbarSimplex {
    let t = xi.target();
    let (gm, g1) = (xi.gamma(), t.g1());
    let to = &h.to;
    let (y, a0, a1) = (h.y, &h.a0, &h.a1);
    let ns = |base: usize, arrows: Vec<usize>| NerveSimplex { base, arrows };
    match (n, j) {
        (0, _) => vec![ns(y, vec![])],
        (1, 0) => vec![ns(y, vec![]), ns(to.x(s[0]), vec![a0[s[0]]])],
        (1, _) => vec![ns(xi.x(s[0]), vec![]), ns(y, vec![a1[s[0]]])],
        (2, _) => {
            let (a, c) = (s[0], s[1]);
            let ac = gm.mul(a, c);
            let twisted = t.act(g1.inv(a0[a]), to.x(c));
            match j {
                0 => {
                    let gp = to.g(a, c);
                    let r = g1.product([g1.inv(gp), twisted, gp, a0[ac]]);
                    vec![
                        ns(y, vec![]),
                        ns(to.x(a), vec![a0[a]]),
                        ns(to.x(c), vec![gp, r]),
                    ]
                }
                1 => {
                    let r = g1.product([g1.inv(a0[c]), twisted, to.g(a, c), a0[ac]]);
                    vec![
                        ns(xi.x(a), vec![]),
                        ns(y, vec![a1[a]]),
                        ns(to.x(c), vec![a0[c], r]),
                    ]
                }
                _ => vec![
                    ns(xi.x(a), vec![]),
                    ns(xi.x(c), vec![xi.g(a, c)]),
                    ns(y, vec![a1[c], g1.mul(g1.inv(a1[c]), a1[ac])]),
                ],
            }
        }
        _ => unreachable!("homotopy maps are materialized up to degree 2"),
    }
}

fn homotopy_identities(xi: &Cocycle1, h: &RawHomotopy, report: &mut WbarReport) {
    let gm = xi.gamma();
    let nerve = Nerve::new(xi.target());
    let src = Raw {
        gamma: gm,
        target: xi.target(),
        x: xi.x_values(),
        g: xi.g_values(),
    };
    let dst = Raw {
        gamma: gm,
        target: h.to.target(),
        x: h.to.x_values(),
        g: h.to.g_values(),
    };
    let fail = |identity, degree, index, j, s: &[usize]| {
        Some(WbarFailure {
            identity,
            degree,
            index,
            homotopy_index: Some(j),
            simplex: s.iter().map(|&a| gm.label(a).to_string()).collect(),
        })
    };
    for n in 0..=2 {
        for s in simplices(gm, n) {
            report.checks += 2;
            if nerve.wbar_face(&alpha(xi, h, n, 0, &s), 0) != dst.xi(&s) {
                report.failure = fail(WbarIdentity::HomotopyEnd, n, 0, 0, &s);
                return;
            }
            if nerve.wbar_face(&alpha(xi, h, n, n, &s), n + 1) != src.xi(&s) {
                report.failure = fail(WbarIdentity::HomotopyEnd, n, n + 1, n, &s);
                return;
            }
            for j in 0..=n {
                let hj = alpha(xi, h, n, j, &s);
                for i in 0..=n + 1 {
                    let ok = if i < j {
                        nerve.wbar_face(&hj, i)
                            == alpha(xi, h, n - 1, j - 1, &gamma_face(gm, &s, i))
                    } else if i == j + 1 && j < n {
                        nerve.wbar_face(&alpha(xi, h, n, j + 1, &s), i) == nerve.wbar_face(&hj, i)
                    } else if i > j + 1 {
                        nerve.wbar_face(&hj, i)
                            == alpha(xi, h, n - 1, j, &gamma_face(gm, &s, i - 1))
                    } else {
                        continue;
                    };
                    report.checks += 1;
                    if !ok {
                        report.failure = fail(WbarIdentity::HomotopyFace, n, i, j, &s);
                        return;
                    }
                }
            }
        }
    }
    for n in 0..=1 {
        for s in simplices(gm, n) {
            for j in 0..=n {
                let hj = alpha(xi, h, n, j, &s);
                for i in 0..=n + 1 {
                    let ok = if i <= j {
                        nerve.wbar_degeneracy(&hj, i)
                            == alpha(xi, h, n + 1, j + 1, &gamma_degeneracy(gm, &s, i))
                    } else {
                        nerve.wbar_degeneracy(&hj, i)
                            == alpha(xi, h, n + 1, j, &gamma_degeneracy(gm, &s, i - 1))
                    };
                    report.checks += 1;
                    if !ok {
                        report.failure = fail(WbarIdentity::HomotopyDegeneracy, n, i, j, &s);
                        return;
                    }
                }
            }
        }
    }
}
