//! Finite groups from tables and constructors, automorphisms, products and quotients.

use crossmod::fgroup::*;
use crossmod::Limits;

fn main() {
    let limits = Limits::default();
    let elements: Vec<String> = ["1", "a", "b", "c"].map(String::from).into();
    let rows = [
        ["1", "a", "b", "c"],
        ["a", "1", "c", "b"],
        ["b", "c", "1", "a"],
        ["c", "b", "a", "1"],
    ];
    let table: Vec<Vec<String>> = rows.iter().map(|r| r.map(String::from).into()).collect();
    let klein = validate_group("K", &elements, &table)
        .expect("Klein four-group")
        .into_ref();
    println!(
        "{}: order {}, abelian {}",
        klein.name(),
        klein.order(),
        klein.is_abelian()
    );

    let s3 = symmetric(3);
    let aut = automorphism_group(&s3, &limits).unwrap();
    println!(
        "|Aut(S3)| = {}, inner map kernel = {:?}",
        aut.group.order(),
        aut.inner.kernel().labels()
    );

    let a3 = Subgroup::generated(&s3, &[s3.lookup("(123)").unwrap()]);
    let (q, proj) = quotient_group(&s3, &a3, "S3/A3").unwrap();
    println!(
        "{} has elements {:?}; (12) maps to {}",
        q.name(),
        q.labels(),
        q.label(proj.apply(s3.lookup("(12)").unwrap()))
    );

    let z2 = cyclic(2);
    let z3 = cyclic(3);
    let inv = RightAction::from_fn(&z2, &z3, |n, q| if q == 0 { n } else { z3.inv(n) }).unwrap();
    let d3 = semidirect_product(&z2, &z3, &inv).unwrap();
    let found = find_isomorphism(&d3.group, &s3, &limits).unwrap();
    println!("Z2 ⋉ Z3 ≅ S3: {}", found.is_some());

    let z2z2 = direct_product(&z2, &z2);
    println!(
        "Z2 × Z2 ≅ K: {}",
        find_isomorphism(z2z2.group(), &klein, &limits)
            .unwrap()
            .is_some()
    );
    println!("homs S3 → Z2: {}", all_homomorphisms(&s3, &z2).len());
}
