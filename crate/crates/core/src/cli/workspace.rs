//! Loading documents into a validated, immutable registry.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use thiserror::Error;

use super::document::*;
use crate::braiding::BraidedCrossedModule;
use crate::butterfly::{compose, from_strict, Butterfly};
use crate::cocycle::{homotopy_check, Cocycle1, Cover, Descent0, Homotopy1};
use crate::extension::{cocycle_to_ext, ext_validate, DedeckerExtension};
use crate::fgroup::{
    alternating, cyclic, direct_product, symmetric, trivial, validate_group, GroupRef,
    Homomorphism, RightAction,
};
use crate::xmod::{standard_xmod, CrossedModule, StandardXmod, StrictMorphism};
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("{file}: {message}")]
    Io { file: String, message: String },
    #[error("{file}:{location}: parse error: {message}")]
    Parse {
        file: String,
        /// `line L, column C` for syntax errors, a JSON pointer otherwise.
        location: String,
        message: String,
    },
    #[error("duplicate {kind} `{name}` in {first} and {second}")]
    Duplicate {
        kind: Kind,
        name: String,
        first: String,
        second: String,
    },
    #[error("{file}: {kind} `{name}` references unknown {missing_kind} `{missing}`")]
    UnresolvedReference {
        file: String,
        kind: Kind,
        name: String,
        missing_kind: Kind,
        missing: String,
    },
    #[error("{file}: {kind} `{name}` is invalid: {witness}")]
    Validation {
        file: String,
        kind: Kind,
        name: String,
        witness: String,
    },
}

impl LoadError {
    /// Validation failures are mathematical; everything else is misuse.
    pub fn is_validation(&self) -> bool {
        matches!(self, LoadError::Validation { .. })
    }
}

#[derive(Clone, Debug)]
pub struct Entry<T> {
    pub value: T,
    pub source: PathBuf,
}

/// A homotopy document: `(y, b)` from one named cocycle to another.
#[derive(Clone, Debug)]
pub struct HomotopyEntry {
    pub from: String,
    pub to: String,
    pub homotopy: Homotopy1,
    pub a0: Vec<usize>,
}

pub type Registry<T> = BTreeMap<String, Entry<T>>;

#[derive(Clone, Debug, Default)]
pub struct Workspace {
    pub groups: Registry<GroupRef>,
    pub homs: Registry<Homomorphism>,
    pub actions: Registry<RightAction>,
    pub xmods: Registry<CrossedModule>,
    pub stricts: Registry<StrictMorphism>,
    pub butterflies: Registry<Butterfly>,
    pub cocycles: Registry<Cocycle1>,
    pub homotopies: Registry<HomotopyEntry>,
    pub extensions: Registry<DedeckerExtension>,
    pub braidings: Registry<BraidedCrossedModule>,
    pub descents: Registry<Descent0>,
}

enum BuildError {
    Missing(Kind, String),
    Parse(String, String),
    Invalid(String),
}

type Built<T> = Result<T, BuildError>;

fn invalid<E: std::fmt::Display>(e: E) -> BuildError {
    BuildError::Invalid(e.to_string())
}

fn parse(ptr: impl Into<String>, msg: impl Into<String>) -> BuildError {
    BuildError::Parse(ptr.into(), msg.into())
}

fn escape(key: &str) -> String {
    key.replace('~', "~0").replace('/', "~1")
}

fn lookup(g: &GroupRef, label: &str, ptr: &str) -> Built<usize> {
    g.lookup(label)
        .ok_or_else(|| parse(ptr, format!("`{label}` is not an element of {}", g.name())))
}

/// A label map over every element of `src`, or with `default` for missing ones.
fn indices(
    src: &GroupRef,
    tgt: &GroupRef,
    m: &LabelMap,
    ptr: &str,
    default: Option<&dyn Fn(usize) -> usize>,
) -> Built<Vec<usize>> {
    let mut out = vec![usize::MAX; src.order()];
    for (k, v) in m {
        let p = format!("{ptr}/{}", escape(k));
        out[lookup(src, k, &p)?] = lookup(tgt, v, &p)?;
    }
    for a in src.elements() {
        if out[a] == usize::MAX {
            match default {
                Some(f) => out[a] = f(a),
                None => return Err(parse(ptr, format!("missing entry for `{}`", src.label(a)))),
            }
        }
    }
    Ok(out)
}

/// `m[a][b]`, flattened `a·|inner| + b`.
fn nested(
    outer: &GroupRef,
    inner: &GroupRef,
    val: &GroupRef,
    m: &NestedMap,
    ptr: &str,
    default: &dyn Fn(usize, usize) -> usize,
) -> Built<Vec<usize>> {
    let n = inner.order();
    let mut out: Vec<usize> = outer
        .elements()
        .flat_map(|a| inner.elements().map(move |b| (a, b)))
        .map(|(a, b)| default(a, b))
        .collect();
    for (k, row) in m {
        let p = format!("{ptr}/{}", escape(k));
        let a = lookup(outer, k, &p)?;
        for (l, v) in row {
            let q = format!("{p}/{}", escape(l));
            out[a * n + lookup(inner, l, &q)?] = lookup(val, v, &q)?;
        }
    }
    Ok(out)
}

/// `t[x·|space| + g]` to the action's `t[g·|group| + x]`.
fn space_major(group: &GroupRef, space: &GroupRef, t: &[usize]) -> Vec<usize> {
    let (ng, ns) = (group.order(), space.order());
    (0..ns)
        .flat_map(|g| (0..ng).map(move |x| t[x * ns + g]))
        .collect()
}

fn need<'a, T>(v: &'a Option<T>, field: &str) -> Built<&'a T> {
    v.as_ref()
        .ok_or_else(|| parse(format!("/{field}"), format!("missing field `{field}`")))
}

impl Workspace {
    /// Load files and directories (every `*.json` directly inside, sorted).
    pub fn load<P: AsRef<Path>>(paths: &[P], limits: &Limits) -> Result<Workspace, LoadError> {
        let mut sources = Vec::new();
        for p in paths {
            let p = p.as_ref();
            let io = |e: std::io::Error| LoadError::Io {
                file: p.display().to_string(),
                message: e.to_string(),
            };
            if p.is_dir() {
                let mut files: Vec<PathBuf> = fs::read_dir(p)
                    .map_err(io)?
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|f| f.extension().is_some_and(|x| x == "json"))
                    .collect();
                files.sort();
                for f in files {
                    let text = fs::read_to_string(&f).map_err(|e| LoadError::Io {
                        file: f.display().to_string(),
                        message: e.to_string(),
                    })?;
                    sources.push((f, text));
                }
            } else {
                sources.push((p.to_path_buf(), fs::read_to_string(p).map_err(io)?));
            }
        }
        Workspace::from_sources(&sources, limits)
    }

    /// Load from in-memory `(file, text)` pairs.
    pub fn from_sources(
        sources: &[(PathBuf, String)],
        limits: &Limits,
    ) -> Result<Workspace, LoadError> {
        let mut docs: Vec<(PathBuf, String, Document)> = Vec::new();
        for (file, text) in sources {
            let fname = file.display().to_string();
            let perr = |location: String, message: String| LoadError::Parse {
                file: fname.clone(),
                location,
                message,
            };
            let value: Value = serde_json::from_str(text).map_err(|e| {
                perr(
                    format!("line {}, column {}", e.line(), e.column()),
                    e.to_string(),
                )
            })?;
            let (items, prefix) = match value.get("documents") {
                Some(Value::Array(items)) => {
                    if value.get("schema") != Some(&Value::from(SCHEMA)) {
                        return Err(perr("/schema".into(), format!("expected schema {SCHEMA}")));
                    }
                    (items.clone(), "/documents/")
                }
                Some(_) => return Err(perr("/documents".into(), "expected an array".into())),
                None => (vec![value], ""),
            };
            for (i, item) in items.into_iter().enumerate() {
                let ptr = if prefix.is_empty() {
                    String::new()
                } else {
                    format!("{prefix}{i}")
                };
                let doc: Document = serde_json::from_value(item)
                    .map_err(|e| perr(format!("{ptr}/"), e.to_string()))?;
                if doc.schema() != SCHEMA {
                    return Err(perr(
                        format!("{ptr}/schema"),
                        format!("expected schema {SCHEMA}, found {}", doc.schema()),
                    ));
                }
                docs.push((file.clone(), ptr, doc));
            }
        }

        let mut seen: BTreeMap<(Kind, String), &PathBuf> = BTreeMap::new();
        for (file, _, doc) in &docs {
            let key = (doc.kind(), doc.name().to_string());
            if let Some(first) = seen.get(&key) {
                return Err(LoadError::Duplicate {
                    kind: key.0,
                    name: key.1,
                    first: first.display().to_string(),
                    second: file.display().to_string(),
                });
            }
            seen.insert(key, file);
        }

        let mut ws = Workspace::default();
        let mut pending: Vec<usize> = (0..docs.len()).collect();
        while !pending.is_empty() {
            let mut next = Vec::new();
            let mut stuck = None;
            for &i in &pending {
                let (file, ptr, doc) = &docs[i];
                match ws.build(doc, file, limits) {
                    Ok(()) => {}
                    Err(BuildError::Missing(kind, name)) => {
                        if stuck.is_none() {
                            stuck = Some((i, kind, name));
                        }
                        next.push(i);
                    }
                    Err(BuildError::Parse(p, message)) => {
                        return Err(LoadError::Parse {
                            file: file.display().to_string(),
                            location: format!("{ptr}{p}"),
                            message,
                        })
                    }
                    Err(BuildError::Invalid(witness)) => {
                        return Err(LoadError::Validation {
                            file: file.display().to_string(),
                            kind: doc.kind(),
                            name: doc.name().to_string(),
                            witness,
                        })
                    }
                }
            }
            if next.len() == pending.len() {
                let (i, missing_kind, missing) = stuck.expect("no progress implies a miss");
                let (file, _, doc) = &docs[i];
                return Err(LoadError::UnresolvedReference {
                    file: file.display().to_string(),
                    kind: doc.kind(),
                    name: doc.name().to_string(),
                    missing_kind,
                    missing,
                });
            }
            pending = next;
        }
        Ok(ws)
    }

    pub fn len(&self) -> usize {
        self.groups.len()
            + self.homs.len()
            + self.actions.len()
            + self.xmods.len()
            + self.stricts.len()
            + self.butterflies.len()
            + self.cocycles.len()
            + self.homotopies.len()
            + self.extensions.len()
            + self.braidings.len()
            + self.descents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The kinds under which `name` is registered.
    pub fn kinds_of(&self, name: &str) -> Vec<Kind> {
        let has = |k: Kind| match k {
            Kind::Group => self.groups.contains_key(name),
            Kind::Hom => self.homs.contains_key(name),
            Kind::Action => self.actions.contains_key(name),
            Kind::Xmod => self.xmods.contains_key(name),
            Kind::Strict => self.stricts.contains_key(name),
            Kind::Butterfly => self.butterflies.contains_key(name),
            Kind::Cocycle => self.cocycles.contains_key(name),
            Kind::Homotopy => self.homotopies.contains_key(name),
            Kind::Extension => self.extensions.contains_key(name),
            Kind::Braiding => self.braidings.contains_key(name),
            Kind::Descent => self.descents.contains_key(name),
        };
        Kind::ALL.into_iter().filter(|&k| has(k)).collect()
    }

    /// Entry names per kind, for listing.
    pub fn names(&self) -> BTreeMap<Kind, BTreeSet<String>> {
        fn keys<T>(r: &Registry<T>) -> BTreeSet<String> {
            r.keys().cloned().collect()
        }
        BTreeMap::from([
            (Kind::Group, keys(&self.groups)),
            (Kind::Hom, keys(&self.homs)),
            (Kind::Action, keys(&self.actions)),
            (Kind::Xmod, keys(&self.xmods)),
            (Kind::Strict, keys(&self.stricts)),
            (Kind::Butterfly, keys(&self.butterflies)),
            (Kind::Cocycle, keys(&self.cocycles)),
            (Kind::Homotopy, keys(&self.homotopies)),
            (Kind::Extension, keys(&self.extensions)),
            (Kind::Braiding, keys(&self.braidings)),
            (Kind::Descent, keys(&self.descents)),
        ])
    }

    fn get<'a, T>(r: &'a Registry<T>, kind: Kind, name: &str) -> Built<&'a T> {
        r.get(name)
            .map(|e| &e.value)
            .ok_or_else(|| BuildError::Missing(kind, name.to_string()))
    }

    fn group(&self, name: &str) -> Built<GroupRef> {
        Self::get(&self.groups, Kind::Group, name).cloned()
    }

    fn xmod(&self, name: &str) -> Built<&CrossedModule> {
        Self::get(&self.xmods, Kind::Xmod, name)
    }

    fn hom(&self, src: &GroupRef, tgt: &GroupRef, m: &LabelMap, ptr: &str) -> Built<Homomorphism> {
        let map = indices(src, tgt, m, ptr, None)?;
        Homomorphism::new(src, tgt, map).map_err(|e| invalid(format!("{}: {e}", &ptr[1..])))
    }

    fn build(&mut self, doc: &Document, file: &Path, limits: &Limits) -> Built<()> {
        let source = file.to_path_buf();
        match doc {
            Document::Group(d) => {
                let g = self.build_group(d)?;
                self.groups
                    .insert(d.name.clone(), Entry { value: g, source });
            }
            Document::Hom(d) => {
                let (s, t) = (self.group(&d.source)?, self.group(&d.target)?);
                let h = self.hom(&s, &t, &d.map, "/map")?;
                self.homs.insert(d.name.clone(), Entry { value: h, source });
            }
            Document::Action(d) => {
                let (g, sp) = (self.group(&d.group)?, self.group(&d.space)?);
                let t = nested(&g, &sp, &sp, &d.act, "/act", &|_, b| b)?;
                let a = RightAction::new(&g, &sp, space_major(&g, &sp, &t)).map_err(invalid)?;
                self.actions
                    .insert(d.name.clone(), Entry { value: a, source });
            }
            Document::Xmod(d) => {
                let x = self.build_xmod(d, limits)?;
                self.xmods
                    .insert(d.name.clone(), Entry { value: x, source });
            }
            Document::Strict(d) => {
                let (s, t) = (self.xmod(&d.source)?.clone(), self.xmod(&d.target)?.clone());
                let f1 = self.hom(s.g1(), t.g1(), &d.f1, "/f1")?;
                let f0 = self.hom(s.g0(), t.g0(), &d.f0, "/f0")?;
                let m = StrictMorphism::new(&s, &t, f1, f0).map_err(invalid)?;
                self.stricts
                    .insert(d.name.clone(), Entry { value: m, source });
            }
            Document::Butterfly(d) => {
                let b = self.build_butterfly(d)?;
                self.butterflies
                    .insert(d.name.clone(), Entry { value: b, source });
            }
            Document::Cocycle(d) => {
                let gm = self.group(&d.gamma)?;
                let t = self.xmod(&d.target)?.clone();
                let (e0, e1) = (t.g0().identity(), t.g1().identity());
                let x = indices(&gm, t.g0(), &d.x, "/x", Some(&|_| e0))?;
                let g = nested(&gm, &gm, t.g1(), &d.g, "/g", &|_, _| e1)?;
                let c = Cocycle1::new(&gm, &t, x, g).map_err(invalid)?;
                self.cocycles
                    .insert(d.name.clone(), Entry { value: c, source });
            }
            Document::Homotopy(d) => {
                let from = Self::get(&self.cocycles, Kind::Cocycle, &d.from)?.clone();
                let to = Self::get(&self.cocycles, Kind::Cocycle, &d.to)?.clone();
                if !from.same_setting(&to) {
                    return Err(invalid("cocycles live over different settings"));
                }
                let t = from.target();
                let e1 = t.g1().identity();
                let y = lookup(t.g0(), &d.y, "/y")?;
                let b = indices(from.gamma(), t.g1(), &d.b, "/b", Some(&|_| e1))?;
                let a0 = indices(from.gamma(), t.g1(), &d.a0, "/a0", Some(&|_| e1))?;
                let h = Homotopy1 { y, b };
                homotopy_check(&from, &to, &h).map_err(invalid)?;
                let entry = HomotopyEntry {
                    from: d.from.clone(),
                    to: d.to.clone(),
                    homotopy: h,
                    a0,
                };
                self.homotopies.insert(
                    d.name.clone(),
                    Entry {
                        value: entry,
                        source,
                    },
                );
            }
            Document::Extension(d) => {
                let x = self.build_extension(d)?;
                self.extensions
                    .insert(d.name.clone(), Entry { value: x, source });
            }
            Document::Braiding(d) => {
                let base = self.xmod(&d.base)?.clone();
                let e1 = base.g1().identity();
                let c = nested(base.g0(), base.g0(), base.g1(), &d.c, "/c", &|_, _| e1)?;
                let b = BraidedCrossedModule::new(&d.name, &base, c).map_err(invalid)?;
                self.braidings
                    .insert(d.name.clone(), Entry { value: b, source });
            }
            Document::Descent(d) => {
                let x = self.build_descent(d)?;
                self.descents
                    .insert(d.name.clone(), Entry { value: x, source });
            }
        }
        Ok(())
    }

    fn build_group(&self, d: &GroupDoc) -> Built<GroupRef> {
        if let Some(kind) = &d.standard {
            let n = || need(&d.n, "n").copied();
            let g = match kind.as_str() {
                "trivial" => trivial(),
                "cyclic" => cyclic(n()?),
                "symmetric" => symmetric(n()?),
                "alternating" => alternating(n()?),
                "product" => {
                    let f = need(&d.factors, "factors")?;
                    if f.len() != 2 {
                        return Err(parse("/factors", "expected two group names"));
                    }
                    let (a, b) = (self.group(&f[0])?, self.group(&f[1])?);
                    direct_product(&a, &b).group().clone()
                }
                other => return Err(parse("/standard", format!("unknown family `{other}`"))),
            };
            return Ok((*g).clone().with_name(&d.name).into_ref());
        }
        let elements = need(&d.elements, "elements")?;
        let table = need(&d.table, "table")?;
        if table.len() != elements.len() {
            return Err(parse(
                "/table",
                format!("{} rows for {} elements", table.len(), elements.len()),
            ));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != elements.len() {
                return Err(parse(
                    format!("/table/{i}"),
                    format!("row has {} entries, expected {}", row.len(), elements.len()),
                ));
            }
        }
        Ok(validate_group(&d.name, elements, table)
            .map_err(invalid)?
            .into_ref())
    }

    fn build_xmod(&self, d: &XmodDoc, limits: &Limits) -> Built<CrossedModule> {
        if let Some(kind) = &d.standard {
            let g = self.group(need(&d.group, "group")?)?;
            let std = match kind.as_str() {
                "inner" => StandardXmod::Inner(g),
                "discrete" => StandardXmod::Discrete(g),
                "shifted" => StandardXmod::Shifted(g),
                "identity" => StandardXmod::Identity(g),
                "inclusion" => {
                    let gens = need(&d.subgroup, "subgroup")?
                        .iter()
                        .enumerate()
                        .map(|(i, l)| lookup(&g, l, &format!("/subgroup/{i}")))
                        .collect::<Built<Vec<_>>>()?;
                    StandardXmod::Inclusion(g, gens)
                }
                other => {
                    return Err(parse(
                        "/standard",
                        format!("unknown construction `{other}`"),
                    ))
                }
            };
            return Ok(standard_xmod(&std, limits)
                .map_err(invalid)?
                .with_name(&d.name));
        }
        let g1 = self.group(need(&d.g1, "g1")?)?;
        let g0 = self.group(need(&d.g0, "g0")?)?;
        let delta = self.hom(&g1, &g0, need(&d.delta, "delta")?, "/delta")?;
        let empty = NestedMap::new();
        let act = nested(
            &g0,
            &g1,
            &g1,
            d.action.as_ref().unwrap_or(&empty),
            "/action",
            &|_, b| b,
        )?;
        let action = RightAction::new(&g0, &g1, space_major(&g0, &g1, &act)).map_err(invalid)?;
        CrossedModule::new(&d.name, delta, action).map_err(invalid)
    }

    fn build_butterfly(&self, d: &ButterflyDoc) -> Built<Butterfly> {
        if let Some(m) = &d.from_strict {
            let m = Self::get(&self.stricts, Kind::Strict, m)?;
            return Ok(from_strict(m).with_name(&d.name));
        }
        if let Some(x) = &d.identity {
            return Ok(Butterfly::identity(self.xmod(x)?).with_name(&d.name));
        }
        if let Some(pair) = &d.compose {
            if pair.len() != 2 {
                return Err(parse("/compose", "expected two butterfly names"));
            }
            let a = Self::get(&self.butterflies, Kind::Butterfly, &pair[0])?;
            let b = Self::get(&self.butterflies, Kind::Butterfly, &pair[1])?;
            return Ok(compose(a, b).map_err(invalid)?.with_name(&d.name));
        }
        let dom = self.xmod(need(&d.domain, "domain")?)?;
        let cod = self.xmod(need(&d.codomain, "codomain")?)?;
        let e = self.group(need(&d.e, "e")?)?;
        let kappa = self.hom(dom.g1(), &e, need(&d.kappa, "kappa")?, "/kappa")?;
        let iota = self.hom(cod.g1(), &e, need(&d.iota, "iota")?, "/iota")?;
        let pi = self.hom(&e, dom.g0(), need(&d.pi, "pi")?, "/pi")?;
        let jay = self.hom(&e, cod.g0(), need(&d.jay, "jay")?, "/jay")?;
        Butterfly::new(&d.name, dom, cod, kappa, iota, pi, jay).map_err(invalid)
    }

    fn build_extension(&self, d: &ExtensionDoc) -> Built<DedeckerExtension> {
        if let Some(c) = &d.from_cocycle {
            let xi = Self::get(&self.cocycles, Kind::Cocycle, c)?;
            let ext = cocycle_to_ext(xi);
            return DedeckerExtension::from_butterfly(ext.butterfly().clone().with_name(&d.name))
                .map_err(invalid);
        }
        let gm = self.group(need(&d.gamma, "gamma")?)?;
        let t = self.xmod(need(&d.target, "target")?)?;
        let e = self.group(need(&d.e, "e")?)?;
        let iota = self.hom(t.g1(), &e, need(&d.iota, "iota")?, "/iota")?;
        let pi = self.hom(&e, &gm, need(&d.pi, "pi")?, "/pi")?;
        let jay = self.hom(&e, t.g0(), need(&d.jay, "jay")?, "/jay")?;
        ext_validate(&d.name, t, iota, pi, jay).map_err(invalid)
    }

    fn build_descent(&self, d: &DescentDoc) -> Built<Descent0> {
        let t = self.xmod(&d.target)?;
        let c = &d.cover;
        let pos = |set: &[String], l: &str, ptr: &str| {
            set.iter()
                .position(|s| s == l)
                .ok_or_else(|| parse(ptr, format!("`{l}` is not in the cover")))
        };
        let mut p = vec![usize::MAX; c.v.len()];
        for (k, v) in &c.p {
            let ptr = format!("/cover/p/{}", escape(k));
            p[pos(&c.v, k, &ptr)?] = pos(&c.x, v, &ptr)?;
        }
        if let Some(i) = p.iter().position(|&i| i == usize::MAX) {
            return Err(parse("/cover/p", format!("missing entry for `{}`", c.v[i])));
        }
        let cover = Cover::new(c.v.clone(), c.x.clone(), p).map_err(invalid)?;
        let (e0, e1) = (t.g0().identity(), t.g1().identity());
        let mut u = vec![e0; c.v.len()];
        for (k, v) in &d.u {
            let ptr = format!("/u/{}", escape(k));
            u[pos(&c.v, k, &ptr)?] = lookup(t.g0(), v, &ptr)?;
        }
        let mut g: BTreeMap<(usize, usize), usize> =
            cover.pairs().into_iter().map(|pr| (pr, e1)).collect();
        for (k, row) in &d.g {
            let ptr = format!("/g/{}", escape(k));
            let a = pos(&c.v, k, &ptr)?;
            for (l, v) in row {
                let q = format!("{ptr}/{}", escape(l));
                let b = pos(&c.v, l, &q)?;
                if cover.p[a] != cover.p[b] {
                    return Err(parse(q, "pair lies over different points"));
                }
                g.insert((a, b), lookup(t.g1(), v, &q)?);
            }
        }
        Descent0::new(cover, t, u, g).map_err(invalid)
    }
}
