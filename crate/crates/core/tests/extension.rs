use crossmod::braiding::{h1_product, BraidedCrossedModule};
use crossmod::cocycle::{are_equivalent, enumerate_cocycles, enumerate_h1};
use crossmod::extension::*;
use crossmod::fgroup::{
    all_homomorphisms, cyclic, direct_product, find_isomorphism, symmetric, trivial, GroupRef,
    Homomorphism,
};
use crossmod::xmod::CrossedModule;
use crossmod::Limits;

/// Every group of order `n` up to isomorphism, for the orders used below.
fn candidates(n: usize) -> Vec<GroupRef> {
    match n {
        1 => vec![trivial()],
        2 | 3 | 5 | 7 => vec![cyclic(n)],
        4 => vec![
            cyclic(4),
            direct_product(&cyclic(2), &cyclic(2)).group().clone(),
        ],
        6 => vec![cyclic(6), symmetric(3)],
        9 => vec![
            cyclic(9),
            direct_product(&cyclic(3), &cyclic(3)).group().clone(),
        ],
        _ => panic!("no candidate list for order {n}"),
    }
}

/// Classes of all extension structures `(E, ι, π, ȷ)` under `ext_equivalent`.
fn oracle_ext_count(gm: &GroupRef, t: &CrossedModule) -> usize {
    let limits = Limits::default();
    let mut structures = Vec::new();
    for e in candidates(gm.order() * t.g1().order()) {
        for iota in all_homomorphisms(t.g1(), &e) {
            if !iota.is_injective() {
                continue;
            }
            for pi in all_homomorphisms(&e, gm) {
                for jay in all_homomorphisms(&e, t.g0()) {
                    if let Ok(x) = ext_validate("s", t, iota.clone(), pi.clone(), jay) {
                        structures.push(x);
                    }
                }
            }
        }
    }
    assert!(!structures.is_empty());
    let mut reps: Vec<DedeckerExtension> = Vec::new();
    for s in structures {
        let known = reps
            .iter()
            .any(|r| ext_equivalent(r, &s, &limits).unwrap().is_some());
        if !known {
            reps.push(s);
        }
    }
    reps.len()
}

fn inner_z3() -> CrossedModule {
    CrossedModule::inner(&cyclic(3), &Limits::default()).unwrap()
}

fn shifted(n: usize) -> CrossedModule {
    CrossedModule::shifted(&cyclic(n)).unwrap()
}

#[test]
fn classification_matches_structure_oracle() {
    let limits = Limits::default();
    let cases = [
        (cyclic(2), inner_z3(), 2),
        (cyclic(2), shifted(2), 2),
        (cyclic(3), shifted(3), 3),
        (cyclic(2), CrossedModule::discrete(&symmetric(3)), 2),
        (cyclic(3), CrossedModule::trivial(), 1),
    ];
    for (gm, t, expected) in cases {
        let classes = classify_ext(&gm, &t, &limits).unwrap();
        assert_eq!(classes.count(), expected, "{}", t.name());
        assert_eq!(oracle_ext_count(&gm, &t), expected, "oracle {}", t.name());
    }
}

#[test]
fn inner_z3_extensions() {
    let z2 = cyclic(2);
    let t = inner_z3();
    let s3 = symmetric(3);
    // sign map and conjugation S3 → Aut(Z3)
    let sign = all_homomorphisms(&s3, &z2)
        .into_iter()
        .find(|h| h.is_surjective())
        .unwrap();
    let iota = all_homomorphisms(t.g1(), &s3)
        .into_iter()
        .find(|h| h.is_injective())
        .unwrap();
    let jay = all_homomorphisms(&s3, t.g0())
        .into_iter()
        .find(|h| h.is_surjective())
        .unwrap();
    assert!(ext_validate("S3", &t, iota, sign, jay).is_ok());

    let z6 = cyclic(6);
    let iota = all_homomorphisms(t.g1(), &z6)
        .into_iter()
        .find(|h| h.is_injective())
        .unwrap();
    let pi = all_homomorphisms(&z6, &z2)
        .into_iter()
        .find(|h| h.is_surjective())
        .unwrap();
    let trivial_jay = Homomorphism::trivial(&z6, t.g0());
    assert!(ext_validate("Z6", &t, iota.clone(), pi.clone(), trivial_jay).is_ok());
    let onto = all_homomorphisms(&z6, t.g0())
        .into_iter()
        .find(|h| h.is_surjective())
        .unwrap();
    assert!(matches!(
        ext_validate("Z6", &t, iota, pi, onto),
        Err(ExtError::ConjugationFail { .. })
    ));

    let classes = classify_ext(&z2, &t, &Limits::default()).unwrap();
    let abelian: Vec<bool> = classes
        .extensions
        .iter()
        .map(|e| e.e().is_abelian())
        .collect();
    assert_eq!(abelian.iter().filter(|&&a| a).count(), 1);
    assert!(classes.extensions.iter().all(|e| e.e().order() == 6));
}

#[test]
fn trivial_extension_is_semidirect() {
    let z2 = cyclic(2);
    let t = inner_z3();
    let xi = all_homomorphisms(&z2, t.g0())
        .into_iter()
        .find(|h| h.is_injective())
        .unwrap();
    let ext = trivial_extension(&xi, &t);
    let l = Limits::default();
    assert!(find_isomorphism(ext.e(), &symmetric(3), &l)
        .unwrap()
        .is_some());
    let c = ext_to_cocycle(&ext, None).unwrap();
    assert_eq!(c.x_values(), xi.map());
    assert!(c.g_values().iter().all(|&g| g == t.g1().identity()));
}

#[test]
fn round_trip_is_exact() {
    let l = Limits::default();
    for (gm, t) in [
        (cyclic(2), shifted(2)),
        (cyclic(3), shifted(3)),
        (cyclic(2), inner_z3()),
        (cyclic(2), CrossedModule::discrete(&symmetric(3))),
    ] {
        for xi in enumerate_cocycles(&gm, &t, &l).unwrap() {
            let ext = cocycle_to_ext(&xi);
            assert_eq!(ext_to_cocycle(&ext, None).unwrap(), xi);
            for s in ext.sections(4) {
                let other = ext_to_cocycle(&ext, Some(&s)).unwrap();
                assert!(are_equivalent(&xi, &other, &l).unwrap().is_some());
                let back = cocycle_to_ext(&other);
                assert!(ext_equivalent(&ext, &back, &l).unwrap().is_some());
            }
        }
    }
}

#[test]
fn z4_is_the_nontrivial_class() {
    let l = Limits::default();
    let z2 = cyclic(2);
    let t = shifted(2);
    let classes = classify_ext(&z2, &t, &l).unwrap();
    let z4 = cyclic(4);
    let iso: Vec<bool> = classes
        .extensions
        .iter()
        .map(|e| find_isomorphism(e.e(), &z4, &l).unwrap().is_some())
        .collect();
    assert_eq!(iso, vec![false, true]);
}

#[test]
fn baer_sum_on_ext_z2_z2() {
    let l = Limits::default();
    let z2 = cyclic(2);
    let t = shifted(2);
    let braid = BraidedCrossedModule::trivial("c=1", &t).unwrap();
    let classes = classify_ext(&z2, &t, &l).unwrap();
    let h1 = enumerate_h1(&z2, &t, &l).unwrap();
    let exts = &classes.extensions;
    let class_of = |e: &DedeckerExtension| {
        (0..exts.len())
            .find(|&k| ext_equivalent(&exts[k], e, &l).unwrap().is_some())
            .unwrap()
    };
    for i in 0..2 {
        for j in 0..2 {
            let sum = baer_sum(&exts[i], &exts[j], &braid).unwrap();
            let k = class_of(&sum);
            assert_eq!(k, (i + j) % 2, "[{i}]+[{j}]");
            let prod = h1_product(h1.rep(i), h1.rep(j), &braid).unwrap();
            assert_eq!(h1.classify(&prod, &l).unwrap(), Some(k));
            let flipped = baer_sum(&exts[j], &exts[i], &braid).unwrap();
            assert_eq!(class_of(&flipped), k);
        }
    }
}

#[test]
fn trivial_braiding_rejected_on_inner_z3() {
    let err = BraidedCrossedModule::trivial("c=1", &inner_z3()).unwrap_err();
    assert!(matches!(
        err,
        crossmod::braiding::BraidingError::BraidingInvalid(_)
    ));
}
