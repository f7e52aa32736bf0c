use thiserror::Error;

use super::{Cocycle1, SearchError};
use crate::xmod::CrossedModule;
use crate::{sat_pow, GuardError, Limits};

/// `(y, b)` with `b = a₁a₀⁻¹`, satisfying
///
/// ```text
/// y·x'(α) = x(α)·y·δb(α)
/// b(β)·b(α)^{x'(β)}·g'(α,β) = g(α,β)^y·b(αβ)
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homotopy1 {
    pub y: usize,
    pub b: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error("cocycles live over different groups or crossed modules")]
    Mismatch,
    #[error("b has {found} entries, expected {expected}")]
    Shape { expected: usize, found: usize },
    #[error("b is not normalized")]
    NotNormalized,
    #[error("y·x'({a}) ≠ x({a})·y·δb({a})")]
    FirstEq { a: String },
    #[error("b({b})·b({a})^x'({b})·g'({a},{b}) ≠ g({a},{b})^y·b({a}{b})")]
    SecondEq { a: String, b: String },
}

pub fn homotopy_check(from: &Cocycle1, to: &Cocycle1, h: &Homotopy1) -> Result<(), HomotopyError> {
    if !from.same_setting(to) {
        return Err(HomotopyError::Mismatch);
    }
    let gm = from.gamma();
    let t = from.target();
    let (g0, g1) = (t.g0(), t.g1());
    if h.b.len() != gm.order() || h.y >= g0.order() || h.b.iter().any(|&v| v >= g1.order()) {
        return Err(HomotopyError::Shape {
            expected: gm.order(),
            found: h.b.len(),
        });
    }
    if h.b[gm.identity()] != g1.identity() {
        return Err(HomotopyError::NotNormalized);
    }
    let l = |a: usize| gm.label(a).to_string();
    for a in gm.elements() {
        let lhs = g0.mul(h.y, to.x(a));
        let rhs = g0.product([from.x(a), h.y, t.d(h.b[a])]);
        if lhs != rhs {
            return Err(HomotopyError::FirstEq { a: l(a) });
        }
    }
    for a in gm.elements() {
        for b in gm.elements() {
            let lhs = g1.product([h.b[b], t.act(h.b[a], to.x(b)), to.g(a, b)]);
            let rhs = g1.mul(t.act(from.g(a, b), h.y), h.b[gm.mul(a, b)]);
            if lhs != rhs {
                return Err(HomotopyError::SecondEq { a: l(a), b: l(b) });
            }
        }
    }
    Ok(())
}

impl Homotopy1 {
    pub fn identity(xi: &Cocycle1) -> Self {
        let t = xi.target();
        Homotopy1 {
            y: t.g0().identity(),
            b: vec![t.g1().identity(); xi.gamma().order()],
        }
    }

    /// The reverse homotopy `(y⁻¹, α ↦ (b(α)⁻¹)^{y⁻¹})`.
    pub fn inverse(&self, target: &CrossedModule) -> Self {
        let yi = target.g0().inv(self.y);
        Homotopy1 {
            y: yi,
            b: self
                .b
                .iter()
                .map(|&v| target.act(target.g1().inv(v), yi))
                .collect(),
        }
    }

    /// `self: ξ → ξ'` then `next: ξ' → ξ''` is `(y₁y₂, b₁^{y₂}·b₂)`.
    pub fn then(&self, next: &Homotopy1, target: &CrossedModule) -> Self {
        Homotopy1 {
            y: target.g0().mul(self.y, next.y),
            b: self
                .b
                .iter()
                .zip(&next.b)
                .map(|(&b1, &b2)| target.g1().mul(target.act(b1, next.y), b2))
                .collect(),
        }
    }
}

/// First homotopy `from → to` in `(y, b)` order, if any.
pub fn are_equivalent(
    from: &Cocycle1,
    to: &Cocycle1,
    limits: &Limits,
) -> Result<Option<Homotopy1>, SearchError> {
    if !from.same_setting(to) {
        return Err(SearchError::Mismatch);
    }
    let gm = from.gamma();
    let t = from.target();
    let (g0, g1) = (t.g0(), t.g1());
    let n = gm.order();
    GuardError::check(
        "homotopy search",
        (g0.order() as u128).saturating_mul(sat_pow(g1.order(), n - 1)),
        limits.max_equivalence_search,
    )?;
    let fibers = delta_fibers(t);
    let order: Vec<usize> = gm.elements().filter(|&a| a != gm.identity()).collect();
    let mut pos = vec![usize::MAX; n];
    for (k, &a) in order.iter().enumerate() {
        pos[a] = k;
    }
    let at = |a: usize| {
        if a == gm.identity() {
            None
        } else {
            Some(pos[a])
        }
    };
    // pairs whose three arguments are all known after step k
    let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); order.len()];
    for a in gm.elements() {
        for b in gm.elements() {
            let step = [at(a), at(b), at(gm.mul(a, b))].into_iter().flatten().max();
            if let Some(k) = step {
                checks[k].push((a, b));
            }
        }
    }
    for y in g0.elements() {
        let yi = g0.inv(y);
        let targets: Vec<usize> = order
            .iter()
            .map(|&a| g0.product([yi, g0.inv(from.x(a)), y, to.x(a)]))
            .collect();
        if targets.iter().any(|&v| fibers[v].is_empty()) {
            continue;
        }
        let mut b = vec![g1.identity(); n];
        if search_b(from, to, y, &order, &targets, &fibers, &checks, 0, &mut b) {
            let h = Homotopy1 { y, b };
            debug_assert!(homotopy_check(from, to, &h).is_ok());
            return Ok(Some(h));
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn search_b(
    from: &Cocycle1,
    to: &Cocycle1,
    y: usize,
    order: &[usize],
    targets: &[usize],
    fibers: &[Vec<usize>],
    checks: &[Vec<(usize, usize)>],
    k: usize,
    b: &mut [usize],
) -> bool {
    if k == order.len() {
        return true;
    }
    let gm = from.gamma();
    let t = from.target();
    let g1 = t.g1();
    let a = order[k];
    for &cand in &fibers[targets[k]] {
        b[a] = cand;
        let ok = checks[k].iter().all(|&(p, q)| {
            let lhs = g1.product([b[q], t.act(b[p], to.x(q)), to.g(p, q)]);
            let rhs = g1.mul(t.act(from.g(p, q), y), b[gm.mul(p, q)]);
            lhs == rhs
        });
        if ok && search_b(from, to, y, order, targets, fibers, checks, k + 1, b) {
            return true;
        }
    }
    b[a] = g1.identity();
    false
}

/// `fibers[x]` lists `{g : δg = x}` in index order.
pub(crate) fn delta_fibers(t: &CrossedModule) -> Vec<Vec<usize>> {
    let mut fibers = vec![Vec::new(); t.g0().order()];
    for g in t.g1().elements() {
        fibers[t.d(g)].push(g);
    }
    fibers
}
