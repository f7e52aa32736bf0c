use std::collections::BTreeMap;

use thiserror::Error;

use crate::xmod::CrossedModule;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescentError {
    #[error("cover map is not surjective: {0} has no preimage")]
    NotSurjective(String),
    #[error("malformed descent data: {0}")]
    Shape(String),
    #[error("g({0},{0}) ≠ 1")]
    NotReflexive(String),
    #[error("u({v1}) ≠ u({v0})·δg({v0},{v1})")]
    GlueFail { v0: String, v1: String },
    #[error("g({v0},{v2}) ≠ g({v0},{v1})·g({v1},{v2})")]
    CocycleFail { v0: String, v1: String, v2: String },
}

/// A surjection `p: V ↠ X` of finite labelled sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub v: Vec<String>,
    pub x: Vec<String>,
    pub p: Vec<usize>,
}

impl Cover {
    pub fn new(v: Vec<String>, x: Vec<String>, p: Vec<usize>) -> Result<Self, DescentError> {
        if p.len() != v.len() || p.iter().any(|&i| i >= x.len()) {
            return Err(DescentError::Shape("cover map".into()));
        }
        if let Some(k) = (0..x.len()).find(|k| !p.contains(k)) {
            return Err(DescentError::NotSurjective(x[k].clone()));
        }
        Ok(Cover { v, x, p })
    }

    /// Pairs `(v₀, v₁)` over the same point, in index order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.v.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.p[a] == self.p[b])
            .collect()
    }
}

/// Descent data `(u, g)` on a cover with
/// `u(v₁) = u(v₀)·δg(v₀,v₁)`, `g(v,v) = 1` and
/// `g(v₀,v₂) = g(v₀,v₁)·g(v₁,v₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Descent0 {
    cover: Cover,
    target: CrossedModule,
    u: Vec<usize>,
    g: BTreeMap<(usize, usize), usize>,
}

pub fn descent0_validate(
    cover: Cover,
    target: &CrossedModule,
    u: Vec<usize>,
    g: BTreeMap<(usize, usize), usize>,
) -> Result<Descent0, DescentError> {
    Descent0::new(cover, target, u, g)
}

impl Descent0 {
    pub fn new(
        cover: Cover,
        target: &CrossedModule,
        u: Vec<usize>,
        g: BTreeMap<(usize, usize), usize>,
    ) -> Result<Self, DescentError> {
        let (g0, g1) = (target.g0(), target.g1());
        let lv = |i: usize| cover.v[i].clone();
        if u.len() != cover.v.len() || u.iter().any(|&a| a >= g0.order()) {
            return Err(DescentError::Shape("u".into()));
        }
        let pairs = cover.pairs();
        for &(a, b) in &pairs {
            match g.get(&(a, b)) {
                Some(&v) if v < g1.order() => {}
                _ => return Err(DescentError::Shape(format!("g({},{})", lv(a), lv(b)))),
            }
        }
        if g.len() != pairs.len() {
            return Err(DescentError::Shape(
                "g defined off the fiber product".into(),
            ));
        }
        for a in 0..cover.v.len() {
            if g[&(a, a)] != g1.identity() {
                return Err(DescentError::NotReflexive(lv(a)));
            }
        }
        for &(a, b) in &pairs {
            if u[b] != g0.mul(u[a], target.d(g[&(a, b)])) {
                return Err(DescentError::GlueFail {
                    v0: lv(a),
                    v1: lv(b),
                });
            }
        }
        for &(a, b) in &pairs {
            for c in 0..cover.v.len() {
                if cover.p[c] != cover.p[a] {
                    continue;
                }
                if g[&(a, c)] != g1.mul(g[&(a, b)], g[&(b, c)]) {
                    return Err(DescentError::CocycleFail {
                        v0: lv(a),
                        v1: lv(b),
                        v2: lv(c),
                    });
                }
            }
        }
        Ok(Descent0 {
            cover,
            target: target.clone(),
            u,
            g,
        })
    }

    /// `u ≡ 1`, `g ≡ 1`.
    pub fn trivial(cover: Cover, target: &CrossedModule) -> Self {
        let u = vec![target.g0().identity(); cover.v.len()];
        let g = cover
            .pairs()
            .into_iter()
            .map(|p| (p, target.g1().identity()))
            .collect();
        Descent0 {
            cover,
            target: target.clone(),
            u,
            g,
        }
    }

    pub fn cover(&self) -> &Cover {
        &self.cover
    }

    pub fn target(&self) -> &CrossedModule {
        &self.target
    }

    pub fn u(&self) -> &[usize] {
        &self.u
    }

    pub fn g(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.g
    }

    /// `(u·u', g^{u'(v₀)}·g')`.
    pub(crate) fn product_raw(
        &self,
        other: &Descent0,
    ) -> (Vec<usize>, BTreeMap<(usize, usize), usize>) {
        let t = &self.target;
        let u = self
            .u
            .iter()
            .zip(&other.u)
            .map(|(&a, &b)| t.g0().mul(a, b))
            .collect();
        let g = self
            .g
            .iter()
            .map(|(&(a, b), &v)| {
                let w = t.g1().mul(t.act(v, other.u[a]), other.g[&(a, b)]);
                ((a, b), w)
            })
            .collect();
        (u, g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgroup::cyclic;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn two_point_cover() {
        let t = CrossedModule::shifted(&cyclic(2)).unwrap();
        let cover = Cover::new(s(&["v1", "v2"]), s(&["*"]), vec![0, 0]).unwrap();
        let g: BTreeMap<_, _> = [((0, 0), 0), ((0, 1), 1), ((1, 0), 1), ((1, 1), 0)].into();
        Descent0::new(cover.clone(), &t, vec![0, 0], g.clone()).unwrap();
        let mut bad = g;
        bad.insert((1, 1), 1);
        assert_eq!(
            Descent0::new(cover, &t, vec![0, 0], bad).unwrap_err(),
            DescentError::NotReflexive("v2".into())
        );
    }
}
