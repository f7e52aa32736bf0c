//! Butterflies from strict morphisms, composition, analysis and the diagonal crossed module.

use crossmod::butterfly::*;
use crossmod::fgroup::*;
use crossmod::xmod::*;
use crossmod::Limits;

fn revalidate(b: &Butterfly) -> Result<Butterfly, ButterflyError> {
    butterfly_validate(
        b.name(),
        b.domain(),
        b.codomain(),
        b.kappa().clone(),
        b.iota().clone(),
        b.pi().clone(),
        b.jay().clone(),
    )
}

fn main() {
    let limits = Limits::default();
    let z2 = cyclic(2);
    let z4 = cyclic(4);
    let src = CrossedModule::shifted(&z2).unwrap();
    let tgt = CrossedModule::shifted(&z4).unwrap();
    let twice = Homomorphism::new(&z2, &z4, vec![0, 2]).unwrap();
    let m =
        StrictMorphism::new(&src, &tgt, twice, Homomorphism::trivial(src.g0(), tgt.g0())).unwrap();

    let b = from_strict(&m);
    revalidate(&b).unwrap();
    let a = analyze(&b, &limits).unwrap();
    println!(
        "{}: |E| = {}, split {}, flippable {}",
        b.name(),
        b.e().order(),
        a.split.is_some(),
        a.flippable
    );

    let id = Butterfly::identity(&tgt);
    let c = compose(&b, &id).unwrap();
    println!(
        "b ∘ id ≅ b: {}",
        butterfly_iso_search(&c, &b, &limits).unwrap().is_some()
    );

    let d = diagonal_xmod(&b);
    println!(
        "diagonal {}: |E1| = {}, left leg quasi-iso {}",
        d.exmod.name(),
        d.exmod.g1().order(),
        d.left_is_quasi_iso
    );

    let inner = CrossedModule::inner(&cyclic(3), &limits).unwrap();
    let flip = Butterfly::identity(&inner);
    println!(
        "identity on {} flippable: {}",
        inner.name(),
        analyze(&flip, &limits).unwrap().flippable
    );
    println!(
        "degenerate butterfly validates: {}",
        revalidate(&degenerate()).is_ok()
    );
}
