use std::collections::HashMap;

use super::{FiniteGroup, GroupRef, Homomorphism, RightAction, Subgroup};
use crate::{GuardError, Limits};

/// Greedy generating sequence: scan elements in index order and keep each
/// one not already in the subgroup generated so far.
pub fn generating_sequence(group: &GroupRef) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut sub = Subgroup::trivial(group);
    for a in group.elements() {
        if !sub.contains(a) {
            gens.push(a);
            sub = Subgroup::generated(group, &gens);
        }
    }
    gens
}

type Pointwise<'a> = Box<dyn Fn(usize, usize) -> bool + 'a>;
type Accept<'a> = Box<dyn Fn(&[usize]) -> bool + 'a>;

/// Depth-first search for homomorphisms by images of a generating sequence,
/// in lexicographic order of those images.
pub struct HomSearch<'a> {
    source: GroupRef,
    target: GroupRef,
    bijective: bool,
    pointwise: Option<Pointwise<'a>>,
    accept: Option<Accept<'a>>,
}

impl<'a> HomSearch<'a> {
    pub fn new(source: &GroupRef, target: &GroupRef) -> Self {
        HomSearch {
            source: source.clone(),
            target: target.clone(),
            bijective: false,
            pointwise: None,
            accept: None,
        }
    }

    pub fn bijective(mut self) -> Self {
        self.bijective = true;
        self
    }

    /// Every pair `(a, φ(a))` must satisfy `f`; checked on partial maps.
    pub fn pointwise<F: Fn(usize, usize) -> bool + 'a>(mut self, f: F) -> Self {
        self.pointwise = Some(Box::new(f));
        self
    }

    /// Final filter on complete maps.
    pub fn accept<F: Fn(&[usize]) -> bool + 'a>(mut self, f: F) -> Self {
        self.accept = Some(Box::new(f));
        self
    }

    pub fn first(&self) -> Option<Homomorphism> {
        let mut found = None;
        self.for_each(|m| {
            found = Some(m.to_vec());
            false
        });
        found.map(|m| Homomorphism::from_parts_unchecked(&self.source, &self.target, m))
    }

    pub fn all(&self) -> Vec<Homomorphism> {
        let mut out = Vec::new();
        self.for_each(|m| {
            out.push(Homomorphism::from_parts_unchecked(
                &self.source,
                &self.target,
                m.to_vec(),
            ));
            true
        });
        out
    }

    pub fn count(&self) -> usize {
        let mut k = 0;
        self.for_each(|_| {
            k += 1;
            true
        });
        k
    }

    /// Visit maps in order until `visit` returns false.
    pub fn for_each<F: FnMut(&[usize]) -> bool>(&self, mut visit: F) {
        if self.bijective && self.source.order() != self.target.order() {
            return;
        }
        let gens = generating_sequence(&self.source);
        let src_orders: Vec<usize> = gens.iter().map(|&g| self.source.element_order(g)).collect();
        let tgt_orders = self.target.element_orders();
        let mut images = Vec::with_capacity(gens.len());
        self.rec(&gens, &src_orders, &tgt_orders, &mut images, &mut visit);
    }

    fn rec<F: FnMut(&[usize]) -> bool>(
        &self,
        gens: &[usize],
        src_orders: &[usize],
        tgt_orders: &[usize],
        images: &mut Vec<usize>,
        visit: &mut F,
    ) -> bool {
        let k = images.len();
        if k == gens.len() {
            let map = self
                .extend(gens, images)
                .expect("complete assignment was checked when extended");
            if let Some(acc) = &self.accept {
                if !acc(&map) {
                    return true;
                }
            }
            return visit(&map);
        }
        for cand in self.target.elements() {
            let ok = if self.bijective {
                tgt_orders[cand] == src_orders[k]
            } else {
                src_orders[k].is_multiple_of(tgt_orders[cand])
            };
            if !ok {
                continue;
            }
            images.push(cand);
            let feasible = self.extend(gens, images).is_some();
            let go_on = !feasible || self.rec(gens, src_orders, tgt_orders, images, visit);
            images.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    /// Extend generator images to the generated subgroup along the Cayley
    /// graph; `None` on any inconsistency or violated constraint.
    fn extend(&self, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let (s, t) = (&self.source, &self.target);
        let mut map = vec![usize::MAX; s.order()];
        let mut used = vec![false; if self.bijective { t.order() } else { 0 }];
        map[s.identity()] = t.identity();
        if self.bijective {
            used[t.identity()] = true;
        }
        if let Some(pw) = &self.pointwise {
            if !pw(s.identity(), t.identity()) {
                return None;
            }
        }
        let mut stack = vec![s.identity()];
        while let Some(a) = stack.pop() {
            for (j, &h) in images.iter().enumerate() {
                let b = s.mul(a, gens[j]);
                let v = t.mul(map[a], h);
                if map[b] == usize::MAX {
                    if self.bijective {
                        if used[v] {
                            return None;
                        }
                        used[v] = true;
                    }
                    if let Some(pw) = &self.pointwise {
                        if !pw(b, v) {
                            return None;
                        }
                    }
                    map[b] = v;
                    stack.push(b);
                } else if map[b] != v {
                    return None;
                }
            }
        }
        if images.len() == gens.len() {
            Some(map)
        } else {
            Some(Vec::new())
        }
    }
}

pub fn all_homomorphisms(source: &GroupRef, target: &GroupRef) -> Vec<Homomorphism> {
    HomSearch::new(source, target).all()
}

fn order_profile(g: &FiniteGroup) -> Vec<usize> {
    let mut v = g.element_orders();
    v.sort_unstable();
    v
}

/// First isomorphism in generator-image order, if any.
pub fn find_isomorphism(
    g: &GroupRef,
    h: &GroupRef,
    limits: &Limits,
) -> Result<Option<Homomorphism>, GuardError> {
    GuardError::check(
        "isomorphism search",
        g.order().max(h.order()) as u128,
        limits.max_iso_order as u128,
    )?;
    if g.order() != h.order() || order_profile(g) != order_profile(h) {
        return Ok(None);
    }
    Ok(HomSearch::new(g, h).bijective().first())
}

/// `Aut(G)` under composition "φ then ψ", acting on `G` by `g^φ = φ(g)`.
#[derive(Clone, Debug)]
pub struct AutGroup {
    pub group: GroupRef,
    pub maps: Vec<Vec<usize>>,
    /// `g ↦ (x ↦ g⁻¹xg)`.
    pub inner: Homomorphism,
    pub action: RightAction,
}

pub fn automorphism_group(g: &GroupRef, limits: &Limits) -> Result<AutGroup, GuardError> {
    GuardError::check(
        "automorphism group",
        g.order() as u128,
        limits.max_aut_order as u128,
    )?;
    let gens = generating_sequence(g);
    let id: Vec<usize> = g.elements().collect();
    let mut maps: Vec<Vec<usize>> = vec![id.clone()];
    HomSearch::new(g, g).bijective().for_each(|m| {
        if m != id.as_slice() {
            maps.push(m.to_vec());
        }
        true
    });
    let pos: HashMap<&[usize], usize> = maps
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    let n = maps.len();
    let mut table = Vec::with_capacity(n * n);
    for phi in &maps {
        for psi in &maps {
            let comp: Vec<usize> = phi.iter().map(|&x| psi[x]).collect();
            table.push(pos[comp.as_slice()]);
        }
    }
    let labels = maps
        .iter()
        .enumerate()
        .map(|(i, m)| {
            if i == 0 {
                "id".to_string()
            } else {
                let parts: Vec<String> = gens
                    .iter()
                    .map(|&a| format!("{}->{}", g.label(a), g.label(m[a])))
                    .collect();
                format!("{{{}}}", parts.join(","))
            }
        })
        .collect();
    let aut = FiniteGroup::from_index_table(&format!("Aut({})", g.name()), labels, table)
        .expect("automorphisms form a group")
        .into_ref();
    let inner_map = g
        .elements()
        .map(|c| {
            let m: Vec<usize> = g.elements().map(|x| g.conj(x, c)).collect();
            pos[m.as_slice()]
        })
        .collect();
    let inner = Homomorphism::from_parts_unchecked(g, &aut, inner_map);
    let mut act = Vec::with_capacity(n * g.order());
    for x in g.elements() {
        for m in &maps {
            act.push(m[x]);
        }
    }
    let action = RightAction::from_parts_unchecked(&aut, g, act);
    Ok(AutGroup {
        group: aut,
        maps,
        inner,
        action,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgroup::{cyclic, direct_product, symmetric};

    #[test]
    fn identity_is_first_iso() {
        let s3 = symmetric(3);
        let f = find_isomorphism(&s3, &s3, &Limits::default())
            .unwrap()
            .unwrap();
        assert_eq!(f, Homomorphism::identity(&s3));
    }

    #[test]
    fn hom_counts() {
        // |Hom(Z2, S3)| = 1 + 3 involutions
        assert_eq!(all_homomorphisms(&cyclic(2), &symmetric(3)).len(), 4);
        // |Hom(Z4, Z2xZ2)| = 4
        let v4 = direct_product(&cyclic(2), &cyclic(2));
        assert_eq!(all_homomorphisms(&cyclic(4), v4.group()).len(), 4);
    }

    #[test]
    fn aut_orders() {
        let l = Limits::default();
        assert_eq!(automorphism_group(&cyclic(4), &l).unwrap().group.order(), 2);
        assert_eq!(automorphism_group(&cyclic(2), &l).unwrap().group.order(), 1);
        let v4 = direct_product(&cyclic(2), &cyclic(2));
        assert_eq!(automorphism_group(v4.group(), &l).unwrap().group.order(), 6);
        assert!(automorphism_group(&symmetric(5), &l).is_err());
    }
}
