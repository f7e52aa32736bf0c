//! Check cocycles and homotopies as simplicial maps into W̄.

use crossmod::cocycle::wbar::*;
use crossmod::cocycle::*;
use crossmod::fgroup::*;
use crossmod::xmod::CrossedModule;
use crossmod::Limits;

fn main() {
    let limits = Limits::default();
    let z3 = cyclic(3);
    let x = CrossedModule::shifted(&z3).unwrap();
    let h1 = enumerate_h1(&z3, &x, &limits).unwrap();
    for xi in h1.reps() {
        let r = wbar_check(xi, None);
        println!("representative passes {} checks: {}", r.checks, r.passed());
    }

    let xi = h1.rep(1);
    let mut g = xi.g_values().to_vec();
    // g(r, r2)
    g[5] = z3.mul(g[5], 1);
    let r = wbar_check_raw(&z3, &x, xi.x_values(), &g);
    let f = r.failure.expect("a broken cocycle fails");
    println!(
        "mutated: {:?} identity fails in degree {} at index {} on {:?}; cocycle_check says {}",
        f.identity,
        f.degree,
        f.index,
        f.simplex,
        cocycle_check(&z3, &x, xi.x_values(), &g).unwrap_err()
    );

    let others: Vec<&Cocycle1> = h1
        .cocycles
        .iter()
        .filter(|c| h1.classify(c, &limits).unwrap() == Some(1))
        .collect();
    let to = others.last().unwrap();
    let h = are_equivalent(xi, to, &limits).unwrap().unwrap();
    let raw = RawHomotopy {
        to: (*to).clone(),
        y: h.y,
        a0: vec![0; 3],
        a1: h.b.clone(),
    };
    let r = wbar_check(xi, Some(&raw));
    println!("homotopy passes {} checks: {}", r.checks, r.passed());
}
