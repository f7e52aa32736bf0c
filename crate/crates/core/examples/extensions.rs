//! Dedecker extensions: the cocycle dictionary, classification and Baer sums.

use crossmod::braiding::BraidedCrossedModule;
use crossmod::cocycle::*;
use crossmod::extension::*;
use crossmod::fgroup::*;
use crossmod::xmod::CrossedModule;
use crossmod::Limits;

fn main() {
    let limits = Limits::default();
    let z2 = cyclic(2);
    let inner = CrossedModule::inner(&cyclic(3), &limits).unwrap();
    let classes = classify_ext(&z2, &inner, &limits).unwrap();
    for ext in &classes.extensions {
        println!(
            "{}: |E| = {}, abelian {}, ≅ S3 {}",
            ext.name(),
            ext.e().order(),
            ext.e().is_abelian(),
            find_isomorphism(ext.e(), &symmetric(3), &limits)
                .unwrap()
                .is_some()
        );
    }

    let shifted = CrossedModule::shifted(&z2).unwrap();
    let h1 = enumerate_h1(&z2, &shifted, &limits).unwrap();
    let exts: Vec<DedeckerExtension> = h1.reps().map(cocycle_to_ext).collect();
    for (xi, ext) in h1.reps().zip(&exts) {
        assert_eq!(&ext_to_cocycle(ext, None).unwrap(), xi);
        let z4 = find_isomorphism(ext.e(), &cyclic(4), &limits)
            .unwrap()
            .is_some();
        println!(
            "class of g(t,t) = {}: E ≅ {}",
            xi.g(1, 1),
            if z4 { "Z4" } else { "Z2×Z2" }
        );
    }

    let braid = BraidedCrossedModule::trivial("c=1", &shifted).unwrap();
    let z4 = exts
        .iter()
        .find(|e| e.e().element_orders().contains(&4))
        .unwrap();
    let sum = baer_sum(z4, z4, &braid).unwrap();
    let zero = ext_equivalent(&exts[0], &sum, &limits).unwrap();
    println!("[Z4] + [Z4] is the split class: {}", zero.is_some());
}
