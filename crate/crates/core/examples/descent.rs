//! Degree-zero descent data on a finite cover and their braided product.

use std::collections::BTreeMap;

use crossmod::braiding::{descent0_product, BraidedCrossedModule};
use crossmod::cocycle::{Cover, Descent0};
use crossmod::fgroup::cyclic;
use crossmod::xmod::CrossedModule;

fn main() {
    let z2 = cyclic(2);
    let target = CrossedModule::shifted(&z2).unwrap();
    let cover = Cover::new(vec!["a".into(), "b".into()], vec!["*".into()], vec![0, 0]).unwrap();

    let swap: BTreeMap<(usize, usize), usize> = cover
        .pairs()
        .into_iter()
        .map(|(v0, v1)| ((v0, v1), usize::from(v0 != v1)))
        .collect();
    let tau = Descent0::new(cover.clone(), &target, vec![0, 0], swap).unwrap();
    println!("descent data g: {:?}", tau.g());

    let mut broken = tau.g().clone();
    broken.insert((0, 0), 1);
    match Descent0::new(cover.clone(), &target, vec![0, 0], broken) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    let braid = BraidedCrossedModule::trivial("c=1", &target).unwrap();
    let sq = descent0_product(&tau, &tau, &braid).unwrap();
    println!(
        "τ·τ is trivial: {}",
        sq == Descent0::trivial(cover, &target)
    );
}
