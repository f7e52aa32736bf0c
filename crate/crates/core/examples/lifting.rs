//! Lift a cocycle along a butterfly and compare lift choices.

use crossmod::butterfly::from_strict;
use crossmod::cocycle::*;
use crossmod::fgroup::*;
use crossmod::xmod::*;
use crossmod::Limits;

fn main() {
    let limits = Limits::default();
    let (z2, z3) = (cyclic(2), cyclic(3));
    let src = CrossedModule::discrete(&z2);
    let inner = CrossedModule::inner(&z3, &limits).unwrap();
    let aut = inner.g0().clone();
    let flip = Homomorphism::new(&z2, &aut, vec![0, 1]).unwrap();
    let m = StrictMorphism::new(
        &src,
        &inner,
        Homomorphism::trivial(src.g1(), inner.g1()),
        flip,
    )
    .unwrap();
    let b = from_strict(&m);

    let xi = Cocycle1::from_hom(&src, &Homomorphism::identity(&z2)).unwrap();
    let choices = lift_choices(&xi, &b, 8);
    println!(
        "{} lift choices of Z2 → E (|E| = {})",
        choices.len(),
        b.e().order()
    );
    let lifts: Vec<Lift> = choices
        .iter()
        .map(|s| lift_along_butterfly(&xi, &b, Some(s)).unwrap())
        .collect();
    for (s, lift) in choices.iter().zip(&lifts) {
        let labels: Vec<&str> = s.iter().map(|&e| b.e().label(e)).collect();
        println!(
            "  e = {labels:?}: x = {:?}, g(t,t) = {}",
            lift.result
                .x_values()
                .iter()
                .map(|&x| aut.label(x))
                .collect::<Vec<_>>(),
            inner.g1().label(lift.result.g(1, 1))
        );
    }
    let independent = lifts[1..].iter().all(|l| {
        are_equivalent(&lifts[0].result, &l.result, &limits)
            .unwrap()
            .is_some()
    });
    println!("class independent of the choice: {independent}");
    println!(
        "diagonal left leg quasi-iso: {}",
        lifts[0].diagonal.left_is_quasi_iso
    );
}
