//! Braided crossed modules, the braiding butterfly and the product on H¹.

use crossmod::braiding::*;
use crossmod::cocycle::*;
use crossmod::fgroup::*;
use crossmod::xmod::CrossedModule;
use crossmod::Limits;

fn main() {
    let limits = Limits::default();
    let z2 = cyclic(2);
    let flat = CrossedModule::new(
        "[Z2→Z2]",
        Homomorphism::trivial(&z2, &z2),
        RightAction::trivial(&z2, &z2),
    )
    .unwrap();
    let pairing = BraidedCrossedModule::new("pairing", &flat, vec![0, 0, 0, 1]).unwrap();
    let a = braiding_analyze(&pairing);
    println!(
        "{}: |P| = {}, symmetric {}, picard {} (witness {:?}), wing multiplicity {}",
        pairing.name(),
        pairing.p().order(),
        a.symmetric,
        a.picard,
        a.picard_witness,
        pairing.wing_multiplicity()
    );

    let h1 = enumerate_h1(&z2, &flat, &limits).unwrap();
    println!(
        "H¹(BZ2, [Z2→Z2]) has {} classes; product table:",
        h1.count()
    );
    for i in 0..h1.count() {
        let row: Vec<usize> = (0..h1.count())
            .map(|j| {
                let p = h1_product(h1.rep(i), h1.rep(j), &pairing).unwrap();
                let q = h1_product_via_lift(h1.rep(i), h1.rep(j), &pairing).unwrap();
                assert!(are_equivalent(&p, &q, &limits).unwrap().is_some());
                h1.classify(&p, &limits).unwrap().unwrap()
            })
            .collect();
        println!("  {row:?}");
    }

    let s3 = symmetric(3);
    let c: Vec<usize> = s3
        .elements()
        .flat_map(|x| s3.elements().map(move |y| (x, y)))
        .map(|(x, y)| s3.product([s3.inv(y), s3.inv(x), y, x]))
        .collect();
    let comm = BraidedCrossedModule::new("commutator", &CrossedModule::identity(&s3), c).unwrap();
    println!(
        "commutator braiding on S3→S3 symmetric: {}",
        braiding_analyze(&comm).symmetric
    );
    match BraidedCrossedModule::trivial("c=1", &CrossedModule::inner(&cyclic(3), &limits).unwrap())
    {
        Err(e) => println!("c = 1 on inner(Z3): {e}"),
        Ok(_) => unreachable!(),
    }
}
