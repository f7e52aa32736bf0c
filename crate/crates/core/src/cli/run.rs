//! Command dispatch.

use std::time::Instant;

use clap::{Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use super::document::Kind;
use super::report::{Report, Status};
use super::workspace::Workspace;
use crate::braiding::{braiding_analyze, h0_product, h1_product, h1_product_via_lift};
use crate::butterfly::{analyze, compose, diagonal_xmod, Butterfly, ButterflyError};
use crate::cocycle::{
    are_equivalent, enumerate_h1, lift_along_butterfly, lift_choices, wbar_check, Cocycle1,
    RawHomotopy,
};
use crate::extension::{baer_sum, classify_ext, ext_equivalent, ext_to_cocycle, DedeckerExtension};
use crate::fgroup::{GroupRef, Homomorphism};
use crate::Limits;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub limits: Limits,
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Summarize a loaded entry of any kind.
    Validate { name: String },
    /// π₀ and π₁ of a crossed module.
    Pi { xmod: String },
    /// Compose two butterflies.
    Compose { first: String, second: String },
    /// Splitting, flippability and the diagonal crossed module.
    Analyze { butterfly: String },
    /// Lift a cocycle along a butterfly.
    Lift { cocycle: String, butterfly: String },
    /// H¹(BΓ, G•) with class representatives.
    H1 { group: String, xmod: String },
    /// Extensions of Γ by a crossed module, one per class.
    ClassifyExt { group: String, xmod: String },
    /// Baer sum of two extensions through a braiding.
    Baer {
        first: String,
        second: String,
        braiding: String,
    },
    /// Symmetry, Picard condition and wing multiplicity of a braiding.
    BraidCheck { braiding: String },
    /// Product on H¹ by formula and by lifting, compared.
    ProductH1 {
        first: String,
        second: String,
        braiding: String,
    },
    /// Simplicial identities of a cocycle through W̄, optionally with a homotopy.
    Wbar {
        cocycle: String,
        homotopy: Option<String>,
    },
}

impl Command {
    pub fn echo(&self) -> String {
        let parts: Vec<&str> = match self {
            Command::Validate { name } => vec!["validate", name],
            Command::Pi { xmod } => vec!["pi", xmod],
            Command::Compose { first, second } => vec!["compose", first, second],
            Command::Analyze { butterfly } => vec!["analyze", butterfly],
            Command::Lift { cocycle, butterfly } => vec!["lift", cocycle, butterfly],
            Command::H1 { group, xmod } => vec!["h1", group, xmod],
            Command::ClassifyExt { group, xmod } => vec!["classify-ext", group, xmod],
            Command::Baer {
                first,
                second,
                braiding,
            } => vec!["baer", first, second, braiding],
            Command::BraidCheck { braiding } => vec!["braid-check", braiding],
            Command::ProductH1 {
                first,
                second,
                braiding,
            } => vec!["product-h1", first, second, braiding],
            Command::Wbar { cocycle, homotopy } => {
                let mut v = vec!["wbar", cocycle.as_str()];
                if let Some(h) = homotopy {
                    v.push(h);
                }
                v
            }
        };
        parts.join(" ")
    }
}

struct Abort(Box<Report>);

fn abort(r: Report) -> Abort {
    Abort(Box::new(r))
}

type Step<T> = Result<T, Abort>;

fn lookup<'a, T>(
    cmd: &str,
    r: &'a super::workspace::Registry<T>,
    kind: Kind,
    name: &str,
) -> Step<&'a T> {
    r.get(name)
        .map(|e| &e.value)
        .ok_or_else(|| abort(Report::error(cmd, format!("no {kind} named `{name}`"))))
}

fn labels(g: &GroupRef, xs: impl IntoIterator<Item = usize>) -> Value {
    xs.into_iter().map(|x| g.label(x).to_string()).collect()
}

fn map_json(f: &Homomorphism) -> Value {
    let (s, t) = (f.source(), f.target());
    let m: Map<String, Value> = s
        .elements()
        .map(|a| (s.label(a).to_string(), t.label(f.apply(a)).into()))
        .collect();
    Value::Object(m)
}

fn group_json(g: &GroupRef) -> Value {
    json!({
        "name": g.name(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "elements": g.labels(),
    })
}

/// A cocycle as a document body; identity entries of `g` are omitted.
pub fn cocycle_json(c: &Cocycle1) -> Value {
    let gm = c.gamma();
    let t = c.target();
    let (g0, g1) = (t.g0(), t.g1());
    let x: Map<String, Value> = gm
        .elements()
        .map(|a| (gm.label(a).to_string(), g0.label(c.x(a)).into()))
        .collect();
    let mut g = Map::new();
    for a in gm.elements() {
        let row: Map<String, Value> = gm
            .elements()
            .filter(|&b| c.g(a, b) != g1.identity())
            .map(|b| (gm.label(b).to_string(), g1.label(c.g(a, b)).into()))
            .collect();
        if !row.is_empty() {
            g.insert(gm.label(a).to_string(), Value::Object(row));
        }
    }
    json!({ "gamma": gm.name(), "target": t.name(), "x": x, "g": g })
}

fn ext_json(e: &DedeckerExtension) -> Value {
    let cocycle = ext_to_cocycle(e, None).expect("extensions yield cocycles");
    json!({
        "e_order": e.e().order(),
        "abelian": e.e().is_abelian(),
        "cocycle": cocycle_json(&cocycle),
    })
}

fn butterfly_json(b: &Butterfly, limits: &Limits) -> Value {
    let mut v = json!({
        "domain": b.domain().name(),
        "codomain": b.codomain().name(),
        "e_order": b.e().order(),
    });
    if let Ok(a) = analyze(b, limits) {
        v["split"] = a.split.is_some().into();
        v["flippable"] = a.flippable.into();
    }
    v
}

pub fn run(ws: &Workspace, cmd: &Command, opts: &RunOptions) -> Report {
    let start = Instant::now();
    let mut report = match dispatch(ws, cmd, &opts.limits) {
        Ok(r) => r,
        Err(Abort(r)) => *r,
    };
    if opts.timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    report
}

fn dispatch(ws: &Workspace, cmd: &Command, limits: &Limits) -> Step<Report> {
    let echo = cmd.echo();
    let e = echo.as_str();
    let guard = |err: &dyn std::fmt::Display| abort(Report::error(e, err.to_string()));
    let mut r = Report::new(e);
    match cmd {
        Command::Validate { name } => {
            let kinds = ws.kinds_of(name);
            if kinds.is_empty() {
                return Err(abort(Report::error(e, format!("nothing named `{name}`"))));
            }
            for k in kinds {
                r.set(k.as_str(), summary(ws, k, name, limits));
            }
        }
        Command::Pi { xmod } => {
            let x = lookup(e, &ws.xmods, Kind::Xmod, xmod)?;
            let inv = x.homotopy_invariants();
            r.set("pi0", group_json(&inv.pi0));
            r.set("pi1", group_json(&inv.pi1));
        }
        Command::Compose { first, second } => {
            let a = lookup(e, &ws.butterflies, Kind::Butterfly, first)?;
            let b = lookup(e, &ws.butterflies, Kind::Butterfly, second)?;
            match compose(a, b) {
                Ok(c) => {
                    r.set("composite", butterfly_json(&c, limits));
                }
                Err(err @ ButterflyError::DomainMismatch) => {
                    return Err(abort(Report::error(e, format!("DomainMismatch: {err}"))))
                }
                Err(err) => r.fail(err.to_string()),
            }
        }
        Command::Analyze { butterfly } => {
            let b = lookup(e, &ws.butterflies, Kind::Butterfly, butterfly)?;
            let a = analyze(b, limits).map_err(|err| guard(&err))?;
            r.set(
                "split",
                a.split.as_ref().map(map_json).unwrap_or(Value::Null),
            );
            r.set("flippable", a.flippable);
            let d = diagonal_xmod(b);
            r.set(
                "diagonal",
                json!({
                    "g1_order": d.exmod.g1().order(),
                    "e_order": d.exmod.g0().order(),
                    "left_is_quasi_iso": d.left_is_quasi_iso,
                }),
            );
        }
        Command::Lift { cocycle, butterfly } => {
            let xi = lookup(e, &ws.cocycles, Kind::Cocycle, cocycle)?;
            let b = lookup(e, &ws.butterflies, Kind::Butterfly, butterfly)?;
            if xi.target() != b.domain() {
                return Err(abort(Report::error(
                    e,
                    format!(
                        "DomainMismatch: cocycle takes values in {}, butterfly starts at {}",
                        xi.target().name(),
                        b.domain().name()
                    ),
                )));
            }
            let lift = lift_along_butterfly(xi, b, None).map_err(|err| guard(&err))?;
            r.set("result", cocycle_json(&lift.result));
            r.set("section", labels(b.e(), lift.section.iter().copied()));
            r.set("middle_valid", true);
            let mut checked = 0;
            let mut independent = true;
            for s in lift_choices(xi, b, 3) {
                let other = lift_along_butterfly(xi, b, Some(&s)).map_err(|err| guard(&err))?;
                let eq = are_equivalent(&lift.result, &other.result, limits)
                    .map_err(|err| guard(&err))?;
                independent &= eq.is_some();
                checked += 1;
            }
            r.set("choices_checked", checked);
            r.set("choice_independent", independent);
            if !independent {
                r.fail("lift class depends on the choice of section");
            }
        }
        Command::H1 { group, xmod } => {
            let gm = lookup(e, &ws.groups, Kind::Group, group)?;
            let x = lookup(e, &ws.xmods, Kind::Xmod, xmod)?;
            let h1 = enumerate_h1(gm, x, limits).map_err(|err| guard(&err))?;
            r.set("classes", h1.count());
            r.set("class_sizes", h1.class_sizes());
            r.set(
                "representatives",
                h1.reps().map(cocycle_json).collect::<Vec<_>>(),
            );
        }
        Command::ClassifyExt { group, xmod } => {
            let gm = lookup(e, &ws.groups, Kind::Group, group)?;
            let x = lookup(e, &ws.xmods, Kind::Xmod, xmod)?;
            let c = classify_ext(gm, x, limits).map_err(|err| guard(&err))?;
            r.set("classes", c.count());
            r.set(
                "extensions",
                c.extensions.iter().map(ext_json).collect::<Vec<_>>(),
            );
        }
        Command::Baer {
            first,
            second,
            braiding,
        } => {
            let a = lookup(e, &ws.extensions, Kind::Extension, first)?;
            let b = lookup(e, &ws.extensions, Kind::Extension, second)?;
            let braid = lookup(e, &ws.braidings, Kind::Braiding, braiding)?;
            let sum = baer_sum(a, b, braid).map_err(|err| guard(&err))?;
            r.set("sum", ext_json(&sum));
            if let Ok(classes) = classify_ext(a.gamma(), a.target(), limits) {
                let mut class = Value::Null;
                for (k, rep) in classes.extensions.iter().enumerate() {
                    if matches!(ext_equivalent(rep, &sum, limits), Ok(Some(_))) {
                        class = k.into();
                        break;
                    }
                }
                r.set("class", class);
            }
        }
        Command::BraidCheck { braiding } => {
            let b = lookup(e, &ws.braidings, Kind::Braiding, braiding)?;
            let a = braiding_analyze(b);
            r.set("symmetric", a.symmetric);
            r.set("picard", a.picard);
            if let Some((x, y)) = &a.symmetric_witness {
                r.set("symmetric_witness", json!([x, y]));
            }
            if let Some(x) = &a.picard_witness {
                r.set("picard_witness", x.as_str());
            }
            r.set("wing_multiplicity", b.wing_multiplicity());
            let g0 = b.base().g0();
            let commutes = g0.elements().all(|u| {
                g0.elements()
                    .all(|v| h0_product(u, v, b) == h0_product(v, u, b))
            });
            r.set("pi0_abelian", commutes);
            r.set("p_order", b.p().order());
        }
        Command::ProductH1 {
            first,
            second,
            braiding,
        } => {
            let a = lookup(e, &ws.cocycles, Kind::Cocycle, first)?;
            let b = lookup(e, &ws.cocycles, Kind::Cocycle, second)?;
            let braid = lookup(e, &ws.braidings, Kind::Braiding, braiding)?;
            let formula = h1_product(a, b, braid).map_err(|err| guard(&err))?;
            let lifted = h1_product_via_lift(a, b, braid).map_err(|err| guard(&err))?;
            r.set("formula", cocycle_json(&formula));
            r.set("lifted", cocycle_json(&lifted));
            let h = are_equivalent(&formula, &lifted, limits).map_err(|err| guard(&err))?;
            match h {
                Some(h) => {
                    let t = formula.target();
                    r.set("equivalent", true);
                    r.set(
                        "homotopy",
                        json!({
                            "y": t.g0().label(h.y),
                            "b": labels(t.g1(), h.b.iter().copied()),
                        }),
                    );
                }
                None => {
                    r.set("equivalent", false);
                    r.fail("formula and lift give different classes");
                }
            }
        }
        Command::Wbar { cocycle, homotopy } => {
            let xi = lookup(e, &ws.cocycles, Kind::Cocycle, cocycle)?;
            let raw = match homotopy {
                None => None,
                Some(h) => {
                    let entry = lookup(e, &ws.homotopies, Kind::Homotopy, h)?;
                    if entry.from != *cocycle {
                        return Err(abort(Report::error(
                            e,
                            format!("homotopy `{h}` starts at `{}`", entry.from),
                        )));
                    }
                    let to = lookup(e, &ws.cocycles, Kind::Cocycle, &entry.to)?;
                    let g1 = to.target().g1();
                    let a1 = entry
                        .homotopy
                        .b
                        .iter()
                        .zip(&entry.a0)
                        .map(|(&b, &a0)| g1.mul(b, a0))
                        .collect();
                    Some(RawHomotopy {
                        to: to.clone(),
                        y: entry.homotopy.y,
                        a0: entry.a0.clone(),
                        a1,
                    })
                }
            };
            let rep = wbar_check(xi, raw.as_ref());
            r.set("checks", rep.checks);
            r.set("passed", rep.passed());
            if let Some(f) = &rep.failure {
                r.set("failure", serde_json::to_value(f).expect("serializable"));
                r.fail("a simplicial identity fails");
            }
        }
    }
    if r.status == Status::Ok {
        r.error = None;
    }
    Ok(r)
}

fn summary(ws: &Workspace, kind: Kind, name: &str, limits: &Limits) -> Value {
    match kind {
        Kind::Group => {
            let g = &ws.groups[name].value;
            let mut v = group_json(g);
            v["center_order"] = g.center().order().into();
            v
        }
        Kind::Hom => {
            let f = &ws.homs[name].value;
            json!({
                "source": f.source().name(),
                "target": f.target().name(),
                "injective": f.is_injective(),
                "surjective": f.is_surjective(),
                "kernel": f.kernel().labels(),
                "image": f.image().labels(),
            })
        }
        Kind::Action => {
            let a = &ws.actions[name].value;
            json!({
                "group": a.group().name(),
                "space": a.space().name(),
                "trivial": a.is_trivial(),
            })
        }
        Kind::Xmod => {
            let x = &ws.xmods[name].value;
            let im = x.delta().image();
            let ker = x.delta().kernel();
            let center = x.g1().center();
            json!({
                "g1": group_json(x.g1()),
                "g0": group_json(x.g0()),
                "image_normal": im.is_normal().is_ok(),
                "kernel_central": ker.members().iter().all(|&k| center.contains(k)),
            })
        }
        Kind::Strict => {
            let m = &ws.stricts[name].value;
            json!({
                "source": m.source.name(),
                "target": m.target.name(),
                "quasi_iso": m.is_quasi_iso().is_quasi_iso,
            })
        }
        Kind::Butterfly => butterfly_json(&ws.butterflies[name].value, limits),
        Kind::Cocycle => {
            let c = &ws.cocycles[name].value;
            let mut v = cocycle_json(c);
            v["wbar_passed"] = wbar_check(c, None).passed().into();
            v
        }
        Kind::Homotopy => {
            let h = &ws.homotopies[name].value;
            json!({ "from": h.from, "to": h.to })
        }
        Kind::Extension => ext_json(&ws.extensions[name].value),
        Kind::Braiding => {
            let a = braiding_analyze(&ws.braidings[name].value);
            json!({ "symmetric": a.symmetric, "picard": a.picard })
        }
        Kind::Descent => {
            let d = &ws.descents[name].value;
            json!({
                "target": d.target().name(),
                "v": d.cover().v,
                "x": d.cover().x,
            })
        }
    }
}
