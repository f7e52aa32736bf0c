use thiserror::Error;

use super::{Cocycle1, CocycleError};
use crate::butterfly::{diagonal_xmod, Butterfly, Diagonal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("cocycle target differs from the butterfly domain")]
    DomainMismatch,
    #[error("lift choice invalid at {alpha}: need π(e(α)) = x(α) and e(1) = 1")]
    LiftChoiceInvalid { alpha: String },
    #[error("lifted cocycle failed validation: {0}")]
    Defect(CocycleError),
}

/// Result of lifting `ξ = (x, h)` along `B: H• → G•` through `e: Γ → E`.
#[derive(Clone, Debug)]
pub struct Lift {
    /// `(ȷ∘e, g)` with values in `G•`.
    pub result: Cocycle1,
    /// `(e, (h, g))` with values in the diagonal crossed module.
    pub middle: Cocycle1,
    pub diagonal: Diagonal,
    pub section: Vec<usize>,
}

fn canonical_section(xi: &Cocycle1, b: &Butterfly) -> Vec<usize> {
    let gm = xi.gamma();
    gm.elements()
        .map(|a| {
            if a == gm.identity() {
                b.e().identity()
            } else {
                b.pi().preimage(xi.x(a)).expect("π is onto")
            }
        })
        .collect()
}

/// Every `e: Γ → E` with `π∘e = x` and `e(1) = 1`, lexicographic, at most `max`.
pub fn lift_choices(xi: &Cocycle1, b: &Butterfly, max: usize) -> Vec<Vec<usize>> {
    let gm = xi.gamma();
    let fibers: Vec<Vec<usize>> = gm
        .elements()
        .map(|a| {
            if a == gm.identity() {
                vec![b.e().identity()]
            } else {
                b.e()
                    .elements()
                    .filter(|&e| b.pi().apply(e) == xi.x(a))
                    .collect()
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![0usize; gm.order()];
    fn rec(
        k: usize,
        fibers: &[Vec<usize>],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        max: usize,
    ) {
        if out.len() >= max {
            return;
        }
        if k == fibers.len() {
            out.push(cur.clone());
            return;
        }
        for &v in &fibers[k] {
            cur[k] = v;
            rec(k + 1, fibers, cur, out, max);
        }
    }
    rec(0, &fibers, &mut cur, &mut out, max);
    out
}

/// `result.x = ȷ∘e`, `result.g(α,β) = ι⁻¹(κ(h(α,β))⁻¹·(e(α)e(β))⁻¹·e(αβ))`.
pub fn lift_along_butterfly(
    xi: &Cocycle1,
    b: &Butterfly,
    lift_choice: Option<&[usize]>,
) -> Result<Lift, LiftError> {
    if xi.target() != b.domain() {
        return Err(LiftError::DomainMismatch);
    }
    let gm = xi.gamma();
    let n = gm.order();
    let e = b.e();
    let section = match lift_choice {
        None => canonical_section(xi, b),
        Some(s) => {
            if s.len() != n {
                return Err(LiftError::LiftChoiceInvalid {
                    alpha: format!("<{} entries>", s.len()),
                });
            }
            for a in gm.elements() {
                let ok = s[a] < e.order()
                    && b.pi().apply(s[a]) == xi.x(a)
                    && (a != gm.identity() || s[a] == e.identity());
                if !ok {
                    return Err(LiftError::LiftChoiceInvalid {
                        alpha: gm.label(a).to_string(),
                    });
                }
            }
            s.to_vec()
        }
    };
    let target = b.codomain();
    let x: Vec<usize> = section.iter().map(|&v| b.jay().apply(v)).collect();
    let mut g = Vec::with_capacity(n * n);
    for a in gm.elements() {
        for c in gm.elements() {
            let h = xi.g(a, c);
            let bracket = e.product([
                e.inv(b.kappa().apply(h)),
                e.inv(e.mul(section[a], section[c])),
                section[gm.mul(a, c)],
            ]);
            let v = b.iota_inv(bracket).expect("bracket lies in ker π = im ι");
            g.push(v);
        }
    }
    let diagonal = diagonal_xmod(b);
    let mid_g: Vec<usize> = (0..n * n)
        .map(|p| diagonal.g1.pair.pair(xi.g(p / n, p % n), g[p]))
        .collect();
    let result = Cocycle1::new(gm, target, x, g).map_err(LiftError::Defect)?;
    let middle =
        Cocycle1::new(gm, &diagonal.exmod, section.clone(), mid_g).map_err(LiftError::Defect)?;
    Ok(Lift {
        result,
        middle,
        diagonal,
        section,
    })
}
