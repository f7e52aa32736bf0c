//! Standard crossed modules, axiom failures, π₀/π₁ and strict morphisms.

use crossmod::fgroup::*;
use crossmod::xmod::*;
use crossmod::Limits;

fn main() {
    let limits = Limits::default();
    let (s3, z4) = (symmetric(3), cyclic(4));
    for x in [
        standard_xmod(&StandardXmod::Inner(z4.clone()), &limits).unwrap(),
        standard_xmod(&StandardXmod::Inner(s3.clone()), &limits).unwrap(),
        standard_xmod(
            &StandardXmod::Inclusion(s3.clone(), vec![s3.lookup("(123)").unwrap()]),
            &limits,
        )
        .unwrap(),
        CrossedModule::discrete(&s3),
        CrossedModule::shifted(&cyclic(2)).unwrap(),
    ] {
        let inv = x.homotopy_invariants();
        println!(
            "{:<14} |G1|={} |G0|={}  π0 {:?}  π1 {:?}",
            x.name(),
            x.g1().order(),
            x.g0().order(),
            inv.pi0.labels(),
            inv.pi1.labels()
        );
    }
    match CrossedModule::shifted(&s3) {
        Err(e) => println!("shifted(S3): {e}"),
        Ok(_) => unreachable!(),
    }

    let inner = CrossedModule::inner(&z4, &limits).unwrap();
    let id = StrictMorphism::identity(&inner);
    let q = id.then(&id).is_quasi_iso();
    println!(
        "id∘id on {} is a quasi-isomorphism: {}",
        inner.name(),
        q.is_quasi_iso
    );

    let disc = CrossedModule::discrete(&s3);
    let to_inner = StrictMorphism::new(
        &disc,
        &CrossedModule::inner(&s3, &limits).unwrap(),
        Homomorphism::trivial(disc.g1(), &s3),
        CrossedModule::inner(&s3, &limits).unwrap().delta().clone(),
    )
    .unwrap();
    println!(
        "discrete(S3) → inner(S3) quasi-iso: {}",
        to_inner.is_quasi_iso().is_quasi_iso
    );
}
