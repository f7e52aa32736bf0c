use std::collections::BTreeMap;

use thiserror::Error;

use super::{ActionError, FiniteGroup, GroupRef, Homomorphism, RightAction, Subgroup};

pub fn trivial() -> GroupRef {
    FiniteGroup::from_index_table("1", vec!["1".into()], vec![0])
        .expect("trivial group")
        .into_ref()
}

/// `Zn` with elements `1, r, r2, …` (`1, t` when n = 2).
pub fn cyclic(n: usize) -> GroupRef {
    assert!(n > 0, "cyclic group of order 0");
    let labels: Vec<String> = (0..n)
        .map(|k| match (n, k) {
            (_, 0) => "1".to_string(),
            (2, 1) => "t".to_string(),
            (_, 1) => "r".to_string(),
            _ => format!("r{k}"),
        })
        .collect();
    let table = (0..n * n).map(|p| (p / n + p % n) % n).collect();
    FiniteGroup::from_index_table(&format!("Z{n}"), labels, table)
        .expect("cyclic group")
        .into_ref()
}

fn cycle_label(p: &[usize]) -> (usize, String) {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    let mut cycles = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        cycles += 1;
        let mut c = vec![s];
        seen[s] = true;
        let mut i = p[s];
        while i != s {
            seen[i] = true;
            c.push(i);
            i = p[i];
        }
        if c.len() > 1 {
            out.push('(');
            for i in c {
                out.push_str(&(i + 1).to_string());
            }
            out.push(')');
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    (n - cycles, out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn perm_group(name: &str, n: usize, even_only: bool) -> GroupRef {
    assert!((1..=9).contains(&n), "permutation degree out of range");
    let mut perms: Vec<(usize, String, Vec<usize>)> = permutations(n)
        .into_iter()
        .map(|p| {
            let (moved, l) = cycle_label(&p);
            (moved, l, p)
        })
        .filter(|(moved, _, _)| !even_only || moved % 2 == 0)
        .collect();
    perms.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let elems: Vec<Vec<usize>> = perms.into_iter().map(|t| t.2).collect();
    // p first, then q
    FiniteGroup::from_operation(
        name,
        &elems,
        |p| cycle_label(p).1,
        |p, q| p.iter().map(|&i| q[i]).collect(),
    )
    .expect("permutation group")
    .into_ref()
}

/// The symmetric group on `1..=n`, elements in cycle notation, composed
/// left to right.
pub fn symmetric(n: usize) -> GroupRef {
    perm_group(&format!("S{n}"), n, false)
}

pub fn alternating(n: usize) -> GroupRef {
    perm_group(&format!("A{n}"), n, true)
}

/// A group on pairs `(a, b)`, indexed `a·|B| + b`.
#[derive(Clone, Debug)]
pub struct PairGroup {
    pub group: GroupRef,
    pub left: GroupRef,
    pub right: GroupRef,
}

impl PairGroup {
    #[inline]
    pub fn pair(&self, a: usize, b: usize) -> usize {
        a * self.right.order() + b
    }

    #[inline]
    pub fn split(&self, p: usize) -> (usize, usize) {
        (p / self.right.order(), p % self.right.order())
    }

    fn labels(left: &FiniteGroup, right: &FiniteGroup) -> Vec<String> {
        let mut out = Vec::with_capacity(left.order() * right.order());
        for a in left.elements() {
            for b in right.elements() {
                out.push(format!("({},{})", left.label(a), right.label(b)));
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub pair: PairGroup,
    pub pr1: Homomorphism,
    pub pr2: Homomorphism,
    pub in1: Homomorphism,
    pub in2: Homomorphism,
}

impl DirectProduct {
    pub fn group(&self) -> &GroupRef {
        &self.pair.group
    }

    /// `f × g` between two direct products.
    pub fn product_map(
        &self,
        target: &DirectProduct,
        f: &Homomorphism,
        g: &Homomorphism,
    ) -> Homomorphism {
        let map = self
            .group()
            .elements()
            .map(|p| {
                let (a, b) = self.pair.split(p);
                target.pair.pair(f.apply(a), g.apply(b))
            })
            .collect();
        Homomorphism::from_parts_unchecked(self.group(), target.group(), map)
    }

    /// `x ↦ (f(x), g(x))`.
    pub fn pairing(&self, f: &Homomorphism, g: &Homomorphism) -> Homomorphism {
        let map = f
            .source()
            .elements()
            .map(|x| self.pair.pair(f.apply(x), g.apply(x)))
            .collect();
        Homomorphism::from_parts_unchecked(f.source(), self.group(), map)
    }
}

pub fn direct_product(a: &GroupRef, b: &GroupRef) -> DirectProduct {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            table.push(a.mul(p / nb, q / nb) * nb + b.mul(p % nb, q % nb));
        }
    }
    let name = format!("{}x{}", a.name(), b.name());
    let g = FiniteGroup::from_index_table(&name, PairGroup::labels(a, b), table)
        .expect("direct product")
        .into_ref();
    let pair = PairGroup {
        group: g.clone(),
        left: a.clone(),
        right: b.clone(),
    };
    let pr1 = Homomorphism::from_parts_unchecked(&g, a, (0..n).map(|p| p / nb).collect());
    let pr2 = Homomorphism::from_parts_unchecked(&g, b, (0..n).map(|p| p % nb).collect());
    let in1 = Homomorphism::from_parts_unchecked(
        a,
        &g,
        a.elements().map(|x| x * nb + b.identity()).collect(),
    );
    let in2 = Homomorphism::from_parts_unchecked(
        b,
        &g,
        b.elements().map(|y| a.identity() * nb + y).collect(),
    );
    DirectProduct {
        pair,
        pr1,
        pr2,
        in1,
        in2,
    }
}

/// `Q ⋉ N` with `(q₁,n₁)(q₂,n₂) = (q₁q₂, n₁^{q₂}·n₂)`.
pub fn semidirect_product(
    q: &GroupRef,
    n: &GroupRef,
    action: &RightAction,
) -> Result<PairGroup, ActionError> {
    if **action.group() != **q || **action.space() != **n {
        return Err(ActionError::Mismatch {
            expected: format!("{} on {}", q.name(), n.name()),
            found: format!("{} on {}", action.group().name(), action.space().name()),
        });
    }
    let (nq, nn) = (q.order(), n.order());
    let size = nq * nn;
    let mut table = Vec::with_capacity(size * size);
    for p in 0..size {
        let (q1, n1) = (p / nn, p % nn);
        for r in 0..size {
            let (q2, n2) = (r / nn, r % nn);
            table.push(q.mul(q1, q2) * nn + n.mul(action.act(n1, q2), n2));
        }
    }
    let name = format!("{}|x{}", q.name(), n.name());
    let g = FiniteGroup::from_index_table(&name, PairGroup::labels(q, n), table)
        .expect("semidirect product of a valid action")
        .into_ref();
    Ok(PairGroup {
        group: g,
        left: q.clone(),
        right: n.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("subgroup is not normal: {n}^{g} leaves it")]
    NotNormal { g: String, n: String },
}

/// `G/N` with cosets labelled `[rep]`, `rep` the index-least member, and the
/// projection.
pub fn quotient_group(
    group: &GroupRef,
    normal: &Subgroup,
    name: &str,
) -> Result<(GroupRef, Homomorphism), QuotientError> {
    if let Err((g, n)) = normal.is_normal() {
        return Err(QuotientError::NotNormal {
            g: group.label(g).to_string(),
            n: group.label(n).to_string(),
        });
    }
    let mut rep_of = vec![usize::MAX; group.order()];
    let mut reps: BTreeMap<usize, usize> = BTreeMap::new();
    for a in group.elements() {
        if rep_of[a] != usize::MAX {
            continue;
        }
        let coset: Vec<usize> = normal.members().iter().map(|&m| group.mul(a, m)).collect();
        let rep = *coset.iter().min().unwrap();
        for c in coset {
            rep_of[c] = rep;
        }
        reps.insert(rep, 0);
    }
    for (k, v) in reps.values_mut().enumerate() {
        *v = k;
    }
    let rep_list: Vec<usize> = reps.keys().copied().collect();
    let k = rep_list.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &rep_list {
        for &b in &rep_list {
            table.push(reps[&rep_of[group.mul(a, b)]]);
        }
    }
    let labels = rep_list
        .iter()
        .map(|&r| format!("[{}]", group.label(r)))
        .collect();
    let q = FiniteGroup::from_index_table(name, labels, table)
        .expect("quotient by a normal subgroup")
        .into_ref();
    let proj_map = group.elements().map(|a| reps[&rep_of[a]]).collect();
    let proj = Homomorphism::from_parts_unchecked(group, &q, proj_map);
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_layout() {
        let s3 = symmetric(3);
        assert_eq!(
            s3.labels(),
            &["1", "(12)", "(13)", "(23)", "(123)", "(132)"]
        );
        // (12) then (23): 1→2→3, 3→3→2, 2→1: (132)
        let p = s3.mul(s3.lookup("(12)").unwrap(), s3.lookup("(23)").unwrap());
        assert_eq!(s3.label(p), "(132)");
        assert_eq!(alternating(3).order(), 3);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(4).order(), 12);
    }

    #[test]
    fn quotient_s3_a3() {
        let s3 = symmetric(3);
        let a3 = Subgroup::generated(&s3, &[s3.lookup("(123)").unwrap()]);
        let (q, p) = quotient_group(&s3, &a3, "S3/A3").unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(p.kernel(), a3);
        let t = Subgroup::generated(&s3, &[s3.lookup("(12)").unwrap()]);
        assert!(matches!(
            quotient_group(&s3, &t, "bad"),
            Err(QuotientError::NotNormal { .. })
        ));
    }

    #[test]
    fn cyclic_labels() {
        assert_eq!(cyclic(2).labels(), &["1", "t"]);
        assert_eq!(cyclic(4).labels(), &["1", "r", "r2", "r3"]);
    }
}
