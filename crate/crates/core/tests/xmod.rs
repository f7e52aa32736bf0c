use crossmod::fgroup::*;
use crossmod::xmod::*;
use crossmod::Limits;

fn standard_corpus() -> Vec<CrossedModule> {
    let l = Limits::default();
    let s3 = symmetric(3);
    let a3 = Subgroup::generated(&s3, &[s3.lookup("(123)").unwrap()]);
    vec![
        CrossedModule::inner(&s3, &l).unwrap(),
        CrossedModule::inner(&cyclic(4), &l).unwrap(),
        CrossedModule::inner(&cyclic(3), &l).unwrap(),
        CrossedModule::inclusion(&s3, &a3).unwrap(),
        CrossedModule::discrete(&s3),
        CrossedModule::shifted(&cyclic(2)).unwrap(),
        CrossedModule::shifted(&cyclic(3)).unwrap(),
        CrossedModule::identity(&s3),
        CrossedModule::trivial(),
    ]
}

fn iso(a: &GroupRef, b: &GroupRef) -> bool {
    find_isomorphism(a, b, &Limits::default())
        .unwrap()
        .is_some()
}

#[test]
fn axiom_examples() {
    let l = Limits::default();
    let s3 = symmetric(3);
    let z3 = cyclic(3);
    assert!(standard_xmod(&StandardXmod::Inner(s3.clone()), &l).is_ok());
    let a3 = vec![s3.lookup("(123)").unwrap()];
    assert!(standard_xmod(&StandardXmod::Inclusion(s3.clone(), a3), &l).is_ok());
    assert!(standard_xmod(&StandardXmod::Shifted(z3.clone()), &l).is_ok());
    let err = standard_xmod(&StandardXmod::Shifted(s3.clone()), &l).unwrap_err();
    assert!(matches!(err, XmodError::PeifferFail { .. }));
    let t = vec![s3.lookup("(12)").unwrap()];
    assert!(matches!(
        standard_xmod(&StandardXmod::Inclusion(s3.clone(), t), &l),
        Err(XmodError::NotNormal { .. })
    ));
    // δ = identity on S3 with the trivial action breaks equivariance
    let bad = xmod_validate(
        "bad",
        Homomorphism::identity(&s3),
        RightAction::trivial(&s3, &s3),
    );
    assert!(matches!(bad, Err(XmodError::EquivarianceFail { .. })));
}

#[test]
fn consequences_hold_on_corpus() {
    for x in standard_corpus() {
        assert!(x.delta().image().is_normal().is_ok(), "{}", x.name());
        let ker = x.delta().kernel();
        let center = x.g1().center();
        assert!(
            ker.members().iter().all(|&k| center.contains(k)),
            "{}",
            x.name()
        );
    }
}

#[test]
fn homotopy_invariant_examples() {
    let l = Limits::default();
    let s3 = symmetric(3);
    let inner_s3 = CrossedModule::inner(&s3, &l).unwrap();
    let inv = inner_s3.homotopy_invariants();
    assert!(inv.pi0.is_trivial() && inv.pi1.is_trivial());
    let inner_z4 = CrossedModule::inner(&cyclic(4), &l).unwrap();
    assert!(inner_z4.delta().is_trivial());
    let inv = inner_z4.homotopy_invariants();
    assert!(iso(&inv.pi0, &cyclic(2)));
    assert!(iso(&inv.pi1, &cyclic(4)));
    let a3 = Subgroup::generated(&s3, &[s3.lookup("(123)").unwrap()]);
    let inv = CrossedModule::inclusion(&s3, &a3)
        .unwrap()
        .homotopy_invariants();
    assert!(iso(&inv.pi0, &cyclic(2)) && inv.pi1.is_trivial());
    let inv = CrossedModule::discrete(&s3).homotopy_invariants();
    assert!(iso(&inv.pi0, &s3) && inv.pi1.is_trivial());
    let inv = CrossedModule::shifted(&cyclic(2))
        .unwrap()
        .homotopy_invariants();
    assert!(inv.pi0.is_trivial() && iso(&inv.pi1, &cyclic(2)));
    for x in standard_corpus() {
        let inv = x.homotopy_invariants();
        assert!(inv.pi1.is_abelian());
        assert!(inv.projection.is_surjective());
        assert_eq!(inv.projection.kernel(), x.delta().image());
    }
}

#[test]
fn inner_invariants_are_center_and_outer() {
    let l = Limits::default();
    for g in [
        symmetric(3),
        cyclic(4),
        cyclic(6),
        direct_product(&cyclic(2), &cyclic(2)).group().clone(),
    ] {
        let x = CrossedModule::inner(&g, &l).unwrap();
        let inv = x.homotopy_invariants();
        let (z, _) = g.center().to_group("Z");
        assert!(iso(&inv.pi1, &z));
        let aut = automorphism_group(&g, &l).unwrap();
        let (out, _) = quotient_group(&aut.group, &aut.inner.image(), "Out").unwrap();
        assert!(iso(&inv.pi0, &out));
    }
}

#[test]
fn strict_examples() {
    let s3 = symmetric(3);
    let a3 = alternating(3);
    let x = CrossedModule::discrete(&s3);
    let id = StrictMorphism::identity(&x);
    assert!(id.is_quasi_iso().is_quasi_iso);
    let src = CrossedModule::discrete(&a3);
    let inc = all_homomorphisms(&a3, &s3)
        .into_iter()
        .find(|h| h.is_injective())
        .unwrap();
    let m = strict_validate(&src, &x, Homomorphism::trivial(src.g1(), x.g1()), inc).unwrap();
    let q = m.is_quasi_iso();
    assert!(!q.is_quasi_iso && !q.pi0_map.is_surjective());
    let z2 = cyclic(2);
    let target = CrossedModule::discrete(&z2);
    let bad = StrictMorphism::new(
        &CrossedModule::identity(&s3),
        &target,
        Homomorphism::trivial(&s3, target.g1()),
        all_homomorphisms(&s3, &z2).pop().unwrap(),
    );
    assert!(matches!(bad, Err(StrictError::SquareNotCommuting { .. })));
}

#[test]
fn quasi_isomorphic_modules_share_invariants() {
    let l = Limits::default();
    let s3 = symmetric(3);
    let a3 = Subgroup::generated(&s3, &[s3.lookup("(123)").unwrap()]);
    let incl = CrossedModule::inclusion(&s3, &a3).unwrap();
    let z2 = cyclic(2);
    let d = CrossedModule::discrete(&z2);
    let sign = all_homomorphisms(&s3, &z2)
        .into_iter()
        .find(|h| h.is_surjective())
        .unwrap();
    let m = StrictMorphism::new(&incl, &d, Homomorphism::trivial(incl.g1(), d.g1()), sign).unwrap();
    assert!(m.is_quasi_iso().is_quasi_iso);
    let (a, b) = (incl.homotopy_invariants(), d.homotopy_invariants());
    assert!(iso(&a.pi0, &b.pi0) && iso(&a.pi1, &b.pi1));
    let idx = CrossedModule::identity(&s3);
    let inner = CrossedModule::inner(&s3, &l).unwrap();
    let f0 = automorphism_group(&s3, &l).unwrap().inner;
    let f0 = Homomorphism::new(&s3, inner.g0(), f0.map().to_vec()).unwrap();
    let m = StrictMorphism::new(&idx, &inner, Homomorphism::identity(&s3), f0).unwrap();
    assert!(m.is_quasi_iso().is_quasi_iso);
}
