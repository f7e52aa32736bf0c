use std::sync::OnceLock;

use proptest::prelude::*;

use crossmod::butterfly::compose;
use crossmod::cli::Workspace;
use crossmod::cocycle::wbar::wbar_check_raw;
use crossmod::cocycle::*;
use crossmod::extension::{cocycle_to_ext, ext_equivalent, ext_to_cocycle};
use crossmod::fgroup::{automorphism_group, cyclic, semidirect_product, symmetric, Subgroup};
use crossmod::xmod::CrossedModule;
use crossmod::Limits;

fn l() -> Limits {
    Limits::default()
}

fn settings() -> &'static Vec<H1Classes> {
    static S: OnceLock<Vec<H1Classes>> = OnceLock::new();
    S.get_or_init(|| {
        let (z2, z3, z4, s3) = (cyclic(2), cyclic(3), cyclic(4), symmetric(3));
        let a3 = Subgroup::generated(&s3, &[s3.lookup("(123)").unwrap()]);
        let inner_z3 = CrossedModule::inner(&z3, &l()).unwrap();
        [
            (z2.clone(), CrossedModule::discrete(&s3)),
            (z2.clone(), CrossedModule::shifted(&z2).unwrap()),
            (z3.clone(), CrossedModule::shifted(&z3).unwrap()),
            (z4.clone(), CrossedModule::shifted(&z2).unwrap()),
            (z2.clone(), inner_z3.clone()),
            (z3.clone(), inner_z3),
            (z2.clone(), CrossedModule::inner(&s3, &l()).unwrap()),
            (z2, CrossedModule::inclusion(&s3, &a3).unwrap()),
            (z3, CrossedModule::identity(&s3)),
        ]
        .iter()
        .map(|(g, x)| enumerate_h1(g, x, &l()).unwrap())
        .collect()
    })
}

fn corpus() -> &'static Workspace {
    static W: OnceLock<Workspace> = OnceLock::new();
    W.get_or_init(|| {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/corpus");
        Workspace::load(&[dir], &l()).unwrap()
    })
}

/// `(setting, cocycle)` indices, reduced modulo the available sizes.
fn pick() -> impl Strategy<Value = (usize, usize)> {
    (0..settings().len(), any::<prop::sample::Index>())
        .prop_map(|(s, i)| (s, i.index(settings()[s].cocycles.len())))
}

/// Move `ξ` along `(y, b)`: the unique `ξ'` with `(y, b): ξ → ξ'`.
fn gauge(xi: &Cocycle1, y: usize, b: &[usize]) -> Cocycle1 {
    let (gm, t) = (xi.gamma(), xi.target());
    let (g0, g1) = (t.g0(), t.g1());
    let x: Vec<usize> = gm
        .elements()
        .map(|a| g0.product([g0.inv(y), xi.x(a), y, t.d(b[a])]))
        .collect();
    let mut g = Vec::new();
    for a in gm.elements() {
        for c in gm.elements() {
            let lhs = g1.mul(b[c], t.act(b[a], x[c]));
            g.push(g1.product([g1.inv(lhs), t.act(xi.g(a, c), y), b[gm.mul(a, c)]]));
        }
    }
    Cocycle1::new(gm, t, x, g).expect("gauge transform of a cocycle is a cocycle")
}

fn random_gauge(
    xi: &Cocycle1,
    y: prop::sample::Index,
    b: &[prop::sample::Index],
) -> (usize, Vec<usize>) {
    let t = xi.target();
    let gm = xi.gamma();
    let y = y.index(t.g0().order());
    let b = gm
        .elements()
        .map(|a| {
            if a == gm.identity() {
                t.g1().identity()
            } else {
                b[a].index(t.g1().order())
            }
        })
        .collect();
    (y, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn holomorph_realizes_the_action(
        which in 0usize..4,
        q in any::<prop::sample::Index>(),
        n in any::<prop::sample::Index>(),
        m in any::<prop::sample::Index>(),
    ) {
        let base = [cyclic(3), cyclic(4), cyclic(5), symmetric(3)][which].clone();
        let aut = automorphism_group(&base, &l()).unwrap();
        let hol = semidirect_product(&aut.group, &base, &aut.action).unwrap();
        let g = &hol.group;
        let q = q.index(aut.group.order());
        let (n, m) = (n.index(base.order()), m.index(base.order()));
        let (one_q, one_n) = (aut.group.identity(), base.identity());
        let emb = |v| hol.pair(one_q, v);
        let lifted = hol.pair(q, one_n);
        let conj = g.mul(g.mul(g.inv(lifted), emb(n)), lifted);
        prop_assert_eq!(conj, emb(aut.action.act(n, q)));
        prop_assert_eq!(g.mul(emb(n), emb(m)), emb(base.mul(n, m)));
        let x = hol.pair(q, n);
        prop_assert_eq!(g.mul(x, g.inv(x)), g.identity());
    }

    #[test]
    fn gauge_orbit_is_the_class(
        (s, i) in pick(),
        y in any::<prop::sample::Index>(),
        b in prop::collection::vec(any::<prop::sample::Index>(), 4),
    ) {
        let h1 = &settings()[s];
        let xi = &h1.cocycles[i];
        let (y, b) = random_gauge(xi, y, &b);
        let to = gauge(xi, y, &b);
        let h = Homotopy1 { y, b };
        prop_assert!(homotopy_check(xi, &to, &h).is_ok());
        prop_assert!(homotopy_check(&to, xi, &h.inverse(xi.target())).is_ok());
        prop_assert!(are_equivalent(xi, &to, &l()).unwrap().is_some());
        prop_assert_eq!(h1.classify(&to, &l()).unwrap(), Some(h1.class_of[i]));
    }

    #[test]
    fn equivalence_is_an_equivalence_relation(
        (s, i) in pick(),
        j in any::<prop::sample::Index>(),
        k in any::<prop::sample::Index>(),
    ) {
        let h1 = &settings()[s];
        let n = h1.cocycles.len();
        let (a, b, c) = (&h1.cocycles[i], &h1.cocycles[j.index(n)], &h1.cocycles[k.index(n)]);
        let t = a.target();
        let refl = are_equivalent(a, a, &l()).unwrap().unwrap();
        prop_assert!(homotopy_check(a, a, &refl).is_ok());
        if let Some(ab) = are_equivalent(a, b, &l()).unwrap() {
            prop_assert!(homotopy_check(b, a, &ab.inverse(t)).is_ok());
            if let Some(bc) = are_equivalent(b, c, &l()).unwrap() {
                prop_assert!(homotopy_check(a, c, &ab.then(&bc, t)).is_ok());
            }
        }
        prop_assert_eq!(
            are_equivalent(a, b, &l()).unwrap().is_some(),
            h1.class_of[i] == h1.class_of[j.index(n)]
        );
    }

    #[test]
    fn extension_round_trip((s, i) in pick(), choice in any::<prop::sample::Index>()) {
        let xi = &settings()[s].cocycles[i];
        let ext = cocycle_to_ext(xi);
        prop_assert_eq!(&ext_to_cocycle(&ext, None).unwrap(), xi);
        let sections = ext.sections(8);
        let e = &sections[choice.index(sections.len())];
        let other = ext_to_cocycle(&ext, Some(e)).unwrap();
        prop_assert!(are_equivalent(xi, &other, &l()).unwrap().is_some());
        let back = cocycle_to_ext(&other);
        prop_assert!(ext_equivalent(&ext, &back, &l()).unwrap().is_some());
    }

    #[test]
    fn wbar_agrees_with_cocycle_check(
        (s, i) in pick(),
        cell in any::<prop::sample::Index>(),
        v in any::<prop::sample::Index>(),
        xcell in any::<prop::sample::Index>(),
        xv in any::<prop::sample::Index>(),
    ) {
        let xi = &settings()[s].cocycles[i];
        let (gm, t) = (xi.gamma(), xi.target());
        let mut g = xi.g_values().to_vec();
        let mut x = xi.x_values().to_vec();
        let (gc, xc) = (cell.index(g.len()), xcell.index(x.len()));
        g[gc] = v.index(t.g1().order());
        x[xc] = xv.index(t.g0().order());
        for (x, g) in [(xi.x_values(), &g[..]), (&x[..], xi.g_values()), (&x[..], &g[..])] {
            let valid = cocycle_check(gm, t, x, g).is_ok();
            prop_assert_eq!(wbar_check_raw(gm, t, x, g).passed(), valid);
        }
    }
}

#[test]
fn lift_along_composite_is_sequential_lift() {
    let ws = corpus();
    let mut checked = 0;
    for a in ws.butterflies.values() {
        for b in ws
            .butterflies
            .values()
            .filter(|b| b.value.domain() == a.value.codomain())
        {
            let ab = compose(&a.value, &b.value).unwrap();
            for gm in [cyclic(2), cyclic(3)] {
                let h1 = enumerate_h1(&gm, a.value.domain(), &l()).unwrap();
                for xi in &h1.cocycles {
                    let once = lift_along_butterfly(xi, &ab, None).unwrap().result;
                    let mid = lift_along_butterfly(xi, &a.value, None).unwrap().result;
                    let twice = lift_along_butterfly(&mid, &b.value, None).unwrap().result;
                    assert!(are_equivalent(&once, &twice, &l()).unwrap().is_some());
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn enumeration_is_thread_independent() {
    let z3 = cyclic(3);
    let x = CrossedModule::inner(&symmetric(3), &l()).unwrap();
    let seq = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let par = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap();
    let a = seq.install(|| enumerate_h1(&z3, &x, &l()).unwrap());
    let b = par.install(|| enumerate_h1(&z3, &x, &l()).unwrap());
    assert_eq!(a.cocycles, b.cocycles);
    assert_eq!(a.class_of, b.class_of);
}
