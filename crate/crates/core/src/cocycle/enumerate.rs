use rayon::prelude::*;

use super::homotopy::delta_fibers;
use super::{are_equivalent, Cocycle1, SearchError};
use crate::fgroup::GroupRef;
use crate::xmod::CrossedModule;
use crate::{sat_pow, GuardError, Limits};

/// All normalized cocycles partitioned into homotopy classes.
#[derive(Clone, Debug)]
pub struct H1Classes {
    /// Every cocycle, in enumeration order.
    pub cocycles: Vec<Cocycle1>,
    /// Class index of each cocycle.
    pub class_of: Vec<usize>,
    /// Index into `cocycles` of each class's first member.
    pub representatives: Vec<usize>,
}

impl H1Classes {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn reps(&self) -> impl Iterator<Item = &Cocycle1> {
        self.representatives.iter().map(|&i| &self.cocycles[i])
    }

    pub fn rep(&self, class: usize) -> &Cocycle1 {
        &self.cocycles[self.representatives[class]]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count()];
        for &c in &self.class_of {
            sizes[c] += 1;
        }
        sizes
    }

    /// Class of an arbitrary cocycle in the same setting.
    pub fn classify(&self, xi: &Cocycle1, limits: &Limits) -> Result<Option<usize>, SearchError> {
        if let Some(i) = self.cocycles.iter().position(|c| c == xi) {
            return Ok(Some(self.class_of[i]));
        }
        for (k, r) in self.reps().enumerate() {
            if are_equivalent(r, xi, limits)?.is_some() {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }
}

/// Every normalized cocycle, lexicographic in `(x, g)` over index order.
pub fn enumerate_cocycles(
    gamma: &GroupRef,
    target: &CrossedModule,
    limits: &Limits,
) -> Result<Vec<Cocycle1>, GuardError> {
    let n = gamma.order();
    let (g0, g1) = (target.g0(), target.g1());
    GuardError::check(
        "cocycle enumeration",
        sat_pow(g0.order(), n - 1).saturating_mul(sat_pow(g1.order(), (n - 1) * (n - 1))),
        limits.max_h1_search,
    )?;
    let e = gamma.identity();
    let nonid: Vec<usize> = gamma.elements().filter(|&a| a != e).collect();
    let pairs: Vec<(usize, usize)> = nonid
        .iter()
        .flat_map(|&a| nonid.iter().map(move |&b| (a, b)))
        .collect();
    let mut pos = vec![usize::MAX; n * n];
    for (k, &(a, b)) in pairs.iter().enumerate() {
        pos[a * n + b] = k;
    }
    let step_of = |a: usize, b: usize| -> Option<usize> {
        let p = pos[a * n + b];
        (p != usize::MAX).then_some(p)
    };
    let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); pairs.len()];
    for &a in &nonid {
        for &b in &nonid {
            for &c in &nonid {
                let ab = gamma.mul(a, b);
                let bc = gamma.mul(b, c);
                let step = [step_of(b, c), step_of(a, bc), step_of(a, b), step_of(ab, c)]
                    .into_iter()
                    .flatten()
                    .max();
                if let Some(k) = step {
                    checks[k].push((a, b, c));
                }
            }
        }
    }
    let fibers = delta_fibers(target);
    let total = sat_pow(g0.order(), n - 1) as usize;
    let chunks: Vec<Vec<Cocycle1>> = (0..total)
        .into_par_iter()
        .map(|code| {
            let mut x = vec![g0.identity(); n];
            let mut rest = code;
            for &a in nonid.iter().rev() {
                x[a] = rest % g0.order();
                rest /= g0.order();
            }
            let mut need = Vec::with_capacity(pairs.len());
            for &(a, b) in &pairs {
                let v = g0.mul(g0.inv(g0.mul(x[a], x[b])), x[gamma.mul(a, b)]);
                if fibers[v].is_empty() {
                    return Vec::new();
                }
                need.push(v);
            }
            let mut g = vec![g1.identity(); n * n];
            let mut out = Vec::new();
            fill(
                gamma, target, &x, &pairs, &need, &fibers, &checks, 0, &mut g, &mut out,
            );
            out
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

#[allow(clippy::too_many_arguments)]
fn fill(
    gamma: &GroupRef,
    target: &CrossedModule,
    x: &[usize],
    pairs: &[(usize, usize)],
    need: &[usize],
    fibers: &[Vec<usize>],
    checks: &[Vec<(usize, usize, usize)>],
    k: usize,
    g: &mut [usize],
    out: &mut Vec<Cocycle1>,
) {
    let n = gamma.order();
    if k == pairs.len() {
        out.push(Cocycle1::new_unchecked(
            gamma,
            target,
            x.to_vec(),
            g.to_vec(),
        ));
        return;
    }
    let g1 = target.g1();
    let (a, b) = pairs[k];
    for &cand in &fibers[need[k]] {
        g[a * n + b] = cand;
        let ok = checks[k].iter().all(|&(p, q, r)| {
            let lhs = g1.mul(g[q * n + r], g[p * n + gamma.mul(q, r)]);
            let rhs = g1.mul(target.act(g[p * n + q], x[r]), g[gamma.mul(p, q) * n + r]);
            lhs == rhs
        });
        if ok {
            fill(gamma, target, x, pairs, need, fibers, checks, k + 1, g, out);
        }
    }
    g[a * n + b] = g1.identity();
}

/// Enumerate and partition by homotopy. Representatives are the first
/// member of each class in enumeration order.
pub fn enumerate_h1(
    gamma: &GroupRef,
    target: &CrossedModule,
    limits: &Limits,
) -> Result<H1Classes, SearchError> {
    let cocycles = enumerate_cocycles(gamma, target, limits)?;
    let mut representatives: Vec<usize> = Vec::new();
    let mut class_of = Vec::with_capacity(cocycles.len());
    for (i, c) in cocycles.iter().enumerate() {
        let hit = representatives
            .par_iter()
            .map(|&r| are_equivalent(&cocycles[r], c, limits).map(|h| h.is_some()))
            .collect::<Result<Vec<bool>, _>>()?
            .into_iter()
            .position(|b| b);
        match hit {
            Some(k) => class_of.push(k),
            None => {
                class_of.push(representatives.len());
                representatives.push(i);
            }
        }
    }
    Ok(H1Classes {
        cocycles,
        class_of,
        representatives,
    })
}
