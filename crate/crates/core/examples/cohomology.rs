//! Enumerate H¹(BΓ, G•), classify cocycles and find homotopies.

use crossmod::cocycle::*;
use crossmod::fgroup::*;
use crossmod::xmod::CrossedModule;
use crossmod::Limits;

fn main() {
    let limits = Limits::default();
    let (z2, z3, s3) = (cyclic(2), cyclic(3), symmetric(3));
    let cases = [
        (z2.clone(), CrossedModule::discrete(&s3)),
        (z2.clone(), CrossedModule::shifted(&z2).unwrap()),
        (z3.clone(), CrossedModule::shifted(&z3).unwrap()),
        (z2.clone(), CrossedModule::inner(&z3, &limits).unwrap()),
    ];
    for (gm, x) in &cases {
        let h1 = enumerate_h1(gm, x, &limits).unwrap();
        println!(
            "H¹(B{}, {}): {} cocycles in {} classes, sizes {:?}",
            gm.name(),
            x.name(),
            h1.cocycles.len(),
            h1.count(),
            h1.class_sizes()
        );
    }

    let disc = CrossedModule::discrete(&s3);
    let hom = |t: &str| Homomorphism::from_labels(&z2, &s3, [("1", "1"), ("t", t)]).unwrap();
    let a = Cocycle1::from_hom(&disc, &hom("(12)")).unwrap();
    let b = Cocycle1::from_hom(&disc, &hom("(13)")).unwrap();
    let h = are_equivalent(&a, &b, &limits)
        .unwrap()
        .expect("conjugate transpositions");
    println!("(12) ~ (13) via y = {}", s3.label(h.y));
    homotopy_check(&a, &b, &h).unwrap();
}
