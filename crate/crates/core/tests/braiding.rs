use std::collections::BTreeMap;

use crossmod::braiding::*;
use crossmod::cocycle::{are_equivalent, enumerate_h1, Cocycle1, Cover, Descent0};
use crossmod::fgroup::*;
use crossmod::xmod::CrossedModule;
use crossmod::Limits;

fn l() -> Limits {
    Limits::default()
}

/// `[A → B]` with trivial δ and trivial action.
fn flat(a: &GroupRef, b: &GroupRef) -> CrossedModule {
    CrossedModule::new(
        "flat",
        Homomorphism::trivial(a, b),
        RightAction::trivial(b, a),
    )
    .unwrap()
}

/// `c(rᵃ, rᵇ) = r^{f(a,b)}` on cyclic data.
fn bilinear(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| f(a, b) % n)
        .collect()
}

fn commutator(g: &GroupRef) -> Vec<usize> {
    g.elements()
        .flat_map(|x| g.elements().map(move |y| (x, y)))
        .map(|(x, y)| g.product([g.inv(y), g.inv(x), y, x]))
        .collect()
}

/// `(Γ, braided crossed module)` settings used by the oracles below.
fn settings() -> Vec<(GroupRef, BraidedCrossedModule)> {
    let (z2, z3) = (cyclic(2), cyclic(3));
    let s3 = symmetric(3);
    vec![
        (
            z2.clone(),
            BraidedCrossedModule::trivial("1", &CrossedModule::shifted(&z2).unwrap()).unwrap(),
        ),
        (
            z2.clone(),
            BraidedCrossedModule::new("pair", &flat(&z2, &z2), vec![0, 0, 0, 1]).unwrap(),
        ),
        (
            z3.clone(),
            BraidedCrossedModule::trivial("1", &CrossedModule::shifted(&z3).unwrap()).unwrap(),
        ),
        (
            z2.clone(),
            BraidedCrossedModule::new("comm", &CrossedModule::identity(&s3), commutator(&s3))
                .unwrap(),
        ),
        (
            z2.clone(),
            BraidedCrossedModule::new(
                "xy",
                &flat(&cyclic(4), &cyclic(4)),
                bilinear(4, |a, b| a * b),
            )
            .unwrap(),
        ),
        (
            z3.clone(),
            BraidedCrossedModule::new("xy3", &flat(&z3, &z3), bilinear(3, |a, b| a * b)).unwrap(),
        ),
    ]
}

#[test]
fn butterfly_examples() {
    let z2 = cyclic(2);
    let a = direct_product(&z2, &z2).group().clone();
    let b = BraidedCrossedModule::trivial("1", &CrossedModule::discrete(&a)).unwrap();
    assert_eq!(b.p().order(), 16);
    let pair = BraidedCrossedModule::new("pair", &flat(&z2, &z2), vec![0, 0, 0, 1]).unwrap();
    assert_eq!(pair.p().order(), 8);
    assert_eq!(pair.wing_multiplicity(), pair.wing_multiplicity());
    assert!(pair.wing_multiplicity() >= 1);
    let base = flat(&z2, &z2);
    assert!(matches!(
        BraidedCrossedModule::new("bad", &base, vec![0, 1, 0, 1]),
        Err(BraidingError::NotNormalized { .. })
    ));
    // skipping the normalization gate, the law on P has no identity
    assert!(braiding_butterfly("bad", &base, &[0, 1, 0, 1]).is_err());
    // a non-bilinear c breaks associativity on P
    let z3 = cyclic(3);
    let nb = vec![0, 0, 0, 0, 1, 0, 0, 0, 0];
    assert!(matches!(
        BraidedCrossedModule::new("nb", &flat(&z3, &z3), nb),
        Err(BraidingError::GroupLaw(_))
    ));
    assert!(BraidedCrossedModule::trivial("1", &CrossedModule::identity(&symmetric(3))).is_err());
}

#[test]
fn analysis_examples() {
    let z2 = cyclic(2);
    let a = braiding_analyze(
        &BraidedCrossedModule::trivial("1", &CrossedModule::shifted(&z2).unwrap()).unwrap(),
    );
    assert!(a.symmetric && a.picard);
    let a = braiding_analyze(
        &BraidedCrossedModule::new("pair", &flat(&z2, &z2), vec![0, 0, 0, 1]).unwrap(),
    );
    assert!(a.symmetric && !a.picard);
    assert_eq!(a.picard_witness.as_deref(), Some("t"));
    let z4 = cyclic(4);
    let a = braiding_analyze(
        &BraidedCrossedModule::new("xy", &flat(&z4, &z4), bilinear(4, |a, b| a * b)).unwrap(),
    );
    assert!(!a.symmetric && !a.picard);
    assert!(a.symmetric_witness.is_some());
}

#[test]
fn unit_law_is_exact() {
    for (gm, b) in settings() {
        let h1 = enumerate_h1(&gm, b.base(), &l()).unwrap();
        let one = Cocycle1::trivial(&gm, b.base());
        for c in &h1.cocycles {
            assert_eq!(&h1_product(c, &one, &b).unwrap(), c);
            assert_eq!(&h1_product(&one, c, &b).unwrap(), c);
        }
    }
}

#[test]
fn z2_table_on_h1() {
    let z2 = cyclic(2);
    let b = BraidedCrossedModule::trivial("1", &CrossedModule::shifted(&z2).unwrap()).unwrap();
    let h1 = enumerate_h1(&z2, b.base(), &l()).unwrap();
    assert_eq!(h1.count(), 2);
    for i in 0..2 {
        for j in 0..2 {
            let p = h1_product(h1.rep(i), h1.rep(j), &b).unwrap();
            assert_eq!(h1.classify(&p, &l()).unwrap(), Some((i + j) % 2));
        }
    }
}

#[test]
fn formula_matches_lift_on_all_pairs() {
    for (gm, b) in settings() {
        let h1 = enumerate_h1(&gm, b.base(), &l()).unwrap();
        for x in &h1.cocycles {
            for y in &h1.cocycles {
                let f = h1_product(x, y, &b).unwrap();
                let g = h1_product_via_lift(x, y, &b).unwrap();
                assert!(
                    are_equivalent(&f, &g, &l()).unwrap().is_some(),
                    "{} over {}",
                    b.name(),
                    gm.name()
                );
            }
        }
    }
}

#[test]
fn classwise_laws() {
    for (gm, b) in settings() {
        let sym = braiding_analyze(&b).symmetric;
        let h1 = enumerate_h1(&gm, b.base(), &l()).unwrap();
        let n = h1.count();
        let mul = |i: usize, j: usize| {
            let p = h1_product(h1.rep(i), h1.rep(j), &b).unwrap();
            h1.classify(&p, &l()).unwrap().unwrap()
        };
        let table: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| mul(i, j)).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    assert_eq!(table[table[i][j]][k], table[i][table[j][k]]);
                }
                if sym {
                    assert_eq!(table[i][j], table[j][i], "{}", b.name());
                }
            }
            // class representatives act as on arbitrary members
            for c in h1
                .cocycles
                .iter()
                .filter(|c| h1.classify(c, &l()).unwrap() == Some(i))
            {
                for (j, &want) in table[i].iter().enumerate() {
                    let p = h1_product(c, h1.rep(j), &b).unwrap();
                    assert_eq!(h1.classify(&p, &l()).unwrap(), Some(want));
                }
            }
        }
    }
}

#[test]
fn h0_product_examples() {
    for (_, b) in settings() {
        let g0 = b.base().g0();
        let inv = b.base().homotopy_invariants();
        for u in g0.elements() {
            assert_eq!(h0_product(u, g0.identity(), &b), inv.projection.apply(u));
            for v in g0.elements() {
                assert_eq!(h0_product(u, v, &b), h0_product(v, u, &b));
            }
        }
    }
}

#[test]
fn descent0_products() {
    let z2 = cyclic(2);
    let t = CrossedModule::shifted(&z2).unwrap();
    let b = BraidedCrossedModule::trivial("1", &t).unwrap();
    let cover = Cover::new(vec!["v1".into(), "v2".into()], vec!["*".into()], vec![0, 0]).unwrap();
    let one = Descent0::trivial(cover.clone(), &t);
    assert_eq!(descent0_product(&one, &one, &b).unwrap(), one);
    let mut g = BTreeMap::new();
    for p in cover.pairs() {
        g.insert(p, usize::from(p.0 != p.1));
    }
    let tau = Descent0::new(cover.clone(), &t, vec![0, 0], g).unwrap();
    let sq = descent0_product(&tau, &tau, &b).unwrap();
    assert_eq!(sq, one);
    assert_eq!(descent0_product(&tau, &one, &b).unwrap(), tau);

    let s3 = symmetric(3);
    let x = CrossedModule::identity(&s3);
    let b = BraidedCrossedModule::new("comm", &x, commutator(&s3)).unwrap();
    let cover = Cover::new(vec!["a".into(), "b".into()], vec!["*".into()], vec![0, 0]).unwrap();
    let (r, t12) = (s3.lookup("(123)").unwrap(), s3.lookup("(12)").unwrap());
    let mk = |u0: usize, g01: usize| {
        let u1 = s3.mul(u0, g01);
        let g: BTreeMap<_, _> = [
            ((0, 0), 0),
            ((1, 1), 0),
            ((0, 1), g01),
            ((1, 0), s3.inv(g01)),
        ]
        .into_iter()
        .collect();
        Descent0::new(cover.clone(), &x, vec![u0, u1], g).unwrap()
    };
    let (a, c) = (mk(t12, r), mk(r, t12));
    assert!(descent0_product(&a, &c, &b).is_ok());
    assert!(descent0_product(&c, &a, &b).is_ok());
}
