use crossmod::fgroup::*;
use crossmod::{GuardError, Limits};

/// Permutations of {0,1,2} composed "p first, then q", as an explicit table.
fn s3_oracle() -> (Vec<String>, Vec<Vec<String>>) {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let labels: Vec<String> = (0..6).map(|i| format!("p{i}")).collect();
    let compose = |p: [usize; 3], q: [usize; 3]| [q[p[0]], q[p[1]], q[p[2]]];
    let table = perms
        .iter()
        .map(|&p| {
            perms
                .iter()
                .map(|&q| {
                    let r = compose(p, q);
                    labels[perms.iter().position(|&s| s == r).unwrap()].clone()
                })
                .collect()
        })
        .collect();
    (labels, table)
}

/// Automorphisms by brute force over all bijections fixing the identity.
fn aut_count_oracle(g: &GroupRef) -> usize {
    fn perms(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            perms(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let e = g.identity();
    let mut others: Vec<usize> = g.elements().filter(|&x| x != e).collect();
    let mut all = Vec::new();
    perms(&mut others, &mut Vec::new(), &mut all);
    let nonid: Vec<usize> = g.elements().filter(|&x| x != e).collect();
    all.iter()
        .filter(|images| {
            let mut f = vec![e; g.order()];
            for (k, &x) in nonid.iter().enumerate() {
                f[x] = images[k];
            }
            g.elements()
                .all(|a| g.elements().all(|b| f[g.mul(a, b)] == g.mul(f[a], f[b])))
        })
        .count()
}

#[test]
fn validate_group_examples() {
    let l = |s: &[&str]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let z2 = validate_group("Z2", &l(&["1", "t"]), &[l(&["1", "t"]), l(&["t", "1"])]).unwrap();
    assert_eq!(z2.order(), 2);
    let bad = validate_group("bad", &l(&["1", "t"]), &[l(&["1", "t"]), l(&["t", "t"])]);
    assert!(matches!(
        bad,
        Err(GroupError::NoInverse(_) | GroupError::NoIdentity | GroupError::NotAssociative(..))
    ));
    let dup = validate_group("d", &l(&["1", "1"]), &[l(&["1", "1"]), l(&["1", "1"])]);
    assert!(matches!(dup, Err(GroupError::DuplicateLabel(_))));
    let (labels, table) = s3_oracle();
    let s3 = validate_group("S3", &labels, &table).unwrap().into_ref();
    assert_eq!(s3.order(), 6);
    assert!(!s3.is_abelian());
    let l = Limits::default();
    assert!(find_isomorphism(&s3, &symmetric(3), &l).unwrap().is_some());
}

#[test]
fn hom_analyze_examples() {
    let z3 = cyclic(3);
    let id = hom_analyze(&z3, &z3, vec![0, 1, 2]).unwrap();
    assert!(id.injective && id.surjective && id.kernel.is_trivial());
    let s3 = symmetric(3);
    let z2 = cyclic(2);
    // sign from the oracle's even/odd count of transpositions
    let sign: Vec<usize> = s3
        .elements()
        .map(|x| usize::from(s3.element_order(x) == 2))
        .collect();
    let a = hom_analyze(&s3, &z2, sign).unwrap();
    assert_eq!(a.kernel.order(), 3);
    assert!(a.surjective);
    assert_eq!(a.kernel.labels(), vec!["1", "(123)", "(132)"]);
    let err = hom_analyze(&z2, &z3, vec![0, 1]).unwrap_err();
    assert!(matches!(err, HomError::NotMultiplicative(..)));
}

#[test]
fn quotient_examples() {
    let s3 = symmetric(3);
    let a3 = Subgroup::generated(&s3, &[s3.lookup("(123)").unwrap()]);
    let (q, proj) = quotient_group(&s3, &a3, "S3/A3").unwrap();
    assert_eq!(q.order(), 2);
    assert_eq!(proj.kernel(), a3);
    assert!(proj.is_surjective());
    let (copy, _) = quotient_group(&s3, &Subgroup::trivial(&s3), "S3/1").unwrap();
    let l = Limits::default();
    assert!(find_isomorphism(&copy, &s3, &l).unwrap().is_some());
    let t = Subgroup::generated(&s3, &[s3.lookup("(12)").unwrap()]);
    assert!(matches!(
        quotient_group(&s3, &t, "bad"),
        Err(QuotientError::NotNormal { .. })
    ));
    // projection composed with a section is the identity on cosets
    for c in q.elements() {
        let rep = proj.preimage(c).unwrap();
        assert_eq!(proj.apply(rep), c);
    }
}

#[test]
fn automorphism_examples() {
    let l = Limits::default();
    for (g, expected) in [
        (cyclic(4), 2),
        (cyclic(2), 1),
        (symmetric(3), 6),
        (cyclic(5), 4),
        (direct_product(&cyclic(2), &cyclic(2)).group().clone(), 6),
    ] {
        let aut = automorphism_group(&g, &l).unwrap();
        assert_eq!(aut.group.order(), expected, "{}", g.name());
        assert_eq!(aut_count_oracle(&g), expected);
        assert_eq!(aut.inner.kernel(), g.center());
    }
    let s3 = symmetric(3);
    assert!(automorphism_group(&s3, &l).unwrap().inner.is_injective());
    let z4 = cyclic(4);
    assert_eq!(
        automorphism_group(&z4, &l).unwrap().inner.kernel().order(),
        4
    );
    let tight = Limits {
        max_aut_order: 3,
        ..l
    };
    assert!(matches!(
        automorphism_group(&z4, &tight),
        Err(GuardError { .. })
    ));
}

#[test]
fn aut_acts_faithfully() {
    let l = Limits::default();
    let g = symmetric(3);
    let aut = automorphism_group(&g, &l).unwrap();
    for phi in aut.group.elements() {
        if phi != aut.group.identity() {
            assert!(g.elements().any(|x| aut.action.act(x, phi) != x));
        }
    }
}

#[test]
fn semidirect_examples() {
    let l = Limits::default();
    let (z2, z3) = (cyclic(2), cyclic(3));
    let triv = RightAction::trivial(&z2, &z3);
    let p = semidirect_product(&z2, &z3, &triv).unwrap();
    let d = direct_product(&z2, &z3);
    assert!(find_isomorphism(&p.group, d.group(), &l).unwrap().is_some());
    let inv = RightAction::from_fn(&z2, &z3, |n, q| if q == 0 { n } else { z3.inv(n) }).unwrap();
    let s = semidirect_product(&z2, &z3, &inv).unwrap();
    assert!(find_isomorphism(&s.group, &symmetric(3), &l)
        .unwrap()
        .is_some());
    let v = semidirect_product(&z2, &z2, &RightAction::trivial(&z2, &z2)).unwrap();
    let v4 = direct_product(&z2, &z2);
    assert!(find_isomorphism(&v.group, v4.group(), &l)
        .unwrap()
        .is_some());
    // law (q₁,n₁)(q₂,n₂) = (q₁q₂, n₁^{q₂}n₂)
    let g = &s.group;
    let t = 1;
    let r = 1;
    let a = s.pair(0, r);
    let b = s.pair(t, 0);
    assert_eq!(s.split(g.mul(a, b)), (t, z3.inv(r)));
}

#[test]
fn isomorphism_examples() {
    let l = Limits::default();
    let v4 = direct_product(&cyclic(2), &cyclic(2));
    assert!(find_isomorphism(&cyclic(4), v4.group(), &l)
        .unwrap()
        .is_none());
    let z2z3 = direct_product(&cyclic(2), &cyclic(3));
    let iso = find_isomorphism(&cyclic(6), z2z3.group(), &l)
        .unwrap()
        .unwrap();
    assert!(iso.is_bijective());
    let s3 = symmetric(3);
    let id = find_isomorphism(&s3, &s3, &l).unwrap().unwrap();
    assert_eq!(id, Homomorphism::identity(&s3));
    let big = symmetric(4);
    let tight = Limits {
        max_iso_order: 12,
        ..l
    };
    assert!(find_isomorphism(&big, &big, &tight).is_err());
}

#[test]
fn cancellation_holds() {
    for g in [symmetric(3), alternating(4), cyclic(6)] {
        for a in g.elements() {
            for b in g.elements() {
                for c in g.elements() {
                    if g.mul(a, b) == g.mul(a, c) || g.mul(b, a) == g.mul(c, a) {
                        assert_eq!(b, c);
                    }
                }
            }
        }
    }
}
