//! The JSON document schema. Every document carries `"schema": 1` and a
//! `"kind"`; a file holds one document or `{"schema": 1, "documents": [...]}`.

use std::collections::BTreeMap;

use serde::Deserialize;

pub const SCHEMA: u32 = 1;

/// `label → label`.
pub type LabelMap = BTreeMap<String, String>;
/// `label → label → label`.
pub type NestedMap = BTreeMap<String, BTreeMap<String, String>>;

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    Group(GroupDoc),
    Hom(HomDoc),
    Action(ActionDoc),
    Xmod(XmodDoc),
    Strict(StrictDoc),
    Butterfly(ButterflyDoc),
    Cocycle(CocycleDoc),
    Homotopy(HomotopyDoc),
    Extension(ExtensionDoc),
    Braiding(BraidingDoc),
    Descent(DescentDoc),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Group,
    Hom,
    Action,
    Xmod,
    Strict,
    Butterfly,
    Cocycle,
    Homotopy,
    Extension,
    Braiding,
    Descent,
}

impl Kind {
    pub const ALL: [Kind; 11] = [
        Kind::Group,
        Kind::Hom,
        Kind::Action,
        Kind::Xmod,
        Kind::Strict,
        Kind::Butterfly,
        Kind::Cocycle,
        Kind::Homotopy,
        Kind::Extension,
        Kind::Braiding,
        Kind::Descent,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Group => "group",
            Kind::Hom => "hom",
            Kind::Action => "action",
            Kind::Xmod => "xmod",
            Kind::Strict => "strict",
            Kind::Butterfly => "butterfly",
            Kind::Cocycle => "cocycle",
            Kind::Homotopy => "homotopy",
            Kind::Extension => "extension",
            Kind::Braiding => "braiding",
            Kind::Descent => "descent",
        }
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::Group(_) => Kind::Group,
            Document::Hom(_) => Kind::Hom,
            Document::Action(_) => Kind::Action,
            Document::Xmod(_) => Kind::Xmod,
            Document::Strict(_) => Kind::Strict,
            Document::Butterfly(_) => Kind::Butterfly,
            Document::Cocycle(_) => Kind::Cocycle,
            Document::Homotopy(_) => Kind::Homotopy,
            Document::Extension(_) => Kind::Extension,
            Document::Braiding(_) => Kind::Braiding,
            Document::Descent(_) => Kind::Descent,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Document::Group(d) => &d.name,
            Document::Hom(d) => &d.name,
            Document::Action(d) => &d.name,
            Document::Xmod(d) => &d.name,
            Document::Strict(d) => &d.name,
            Document::Butterfly(d) => &d.name,
            Document::Cocycle(d) => &d.name,
            Document::Homotopy(d) => &d.name,
            Document::Extension(d) => &d.name,
            Document::Braiding(d) => &d.name,
            Document::Descent(d) => &d.name,
        }
    }

    pub fn schema(&self) -> u32 {
        match self {
            Document::Group(d) => d.schema,
            Document::Hom(d) => d.schema,
            Document::Action(d) => d.schema,
            Document::Xmod(d) => d.schema,
            Document::Strict(d) => d.schema,
            Document::Butterfly(d) => d.schema,
            Document::Cocycle(d) => d.schema,
            Document::Homotopy(d) => d.schema,
            Document::Extension(d) => d.schema,
            Document::Braiding(d) => d.schema,
            Document::Descent(d) => d.schema,
        }
    }
}

/// Either an explicit Cayley table or a `"standard"` family.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub schema: u32,
    pub name: String,
    pub elements: Option<Vec<String>>,
    pub table: Option<Vec<Vec<String>>>,
    /// `trivial`, `cyclic`, `symmetric`, `alternating` or `product`.
    pub standard: Option<String>,
    pub n: Option<usize>,
    /// Two group names, for `product`.
    pub factors: Option<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDoc {
    pub schema: u32,
    pub name: String,
    pub source: String,
    pub target: String,
    pub map: LabelMap,
}

/// `act[x][g] = g^x`; missing entries are fixed points.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub schema: u32,
    pub name: String,
    pub group: String,
    pub space: String,
    #[serde(default)]
    pub act: NestedMap,
}

/// Either explicit data or a `"standard"` construction on `group`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XmodDoc {
    pub schema: u32,
    pub name: String,
    /// `inner`, `inclusion`, `discrete`, `shifted` or `identity`.
    pub standard: Option<String>,
    pub group: Option<String>,
    /// Generators of the normal subgroup, for `inclusion`.
    pub subgroup: Option<Vec<String>>,
    pub g1: Option<String>,
    pub g0: Option<String>,
    pub delta: Option<LabelMap>,
    /// `action[x][g] = g^x`; missing entries are fixed points.
    pub action: Option<NestedMap>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrictDoc {
    pub schema: u32,
    pub name: String,
    pub source: String,
    pub target: String,
    pub f1: LabelMap,
    pub f0: LabelMap,
}

/// Explicit wings, or one of `from_strict`, `identity`, `compose`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ButterflyDoc {
    pub schema: u32,
    pub name: String,
    pub from_strict: Option<String>,
    pub identity: Option<String>,
    pub compose: Option<Vec<String>>,
    pub domain: Option<String>,
    pub codomain: Option<String>,
    pub e: Option<String>,
    pub kappa: Option<LabelMap>,
    pub iota: Option<LabelMap>,
    pub pi: Option<LabelMap>,
    pub jay: Option<LabelMap>,
}

/// Missing entries of `x` and `g` are the identity.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleDoc {
    pub schema: u32,
    pub name: String,
    pub gamma: String,
    pub target: String,
    #[serde(default)]
    pub x: LabelMap,
    #[serde(default)]
    pub g: NestedMap,
}

/// `(y, b)` from `from` to `to`; `a0` (default identity) fixes the gauge
/// `a₁ = b·a₀` for the simplicial check.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomotopyDoc {
    pub schema: u32,
    pub name: String,
    pub from: String,
    pub to: String,
    pub y: String,
    #[serde(default)]
    pub b: LabelMap,
    #[serde(default)]
    pub a0: LabelMap,
}

/// Explicit `(E, ι, π, ȷ)`, or `from_cocycle`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDoc {
    pub schema: u32,
    pub name: String,
    pub from_cocycle: Option<String>,
    pub gamma: Option<String>,
    pub target: Option<String>,
    pub e: Option<String>,
    pub iota: Option<LabelMap>,
    pub pi: Option<LabelMap>,
    pub jay: Option<LabelMap>,
}

/// `c[x][y]`; missing entries are the identity.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidingDoc {
    pub schema: u32,
    pub name: String,
    pub base: String,
    #[serde(default)]
    pub c: NestedMap,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverDoc {
    pub v: Vec<String>,
    pub x: Vec<String>,
    pub p: LabelMap,
}

/// `g[v₀][v₁]` over pairs in the same fiber; missing entries are the identity.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescentDoc {
    pub schema: u32,
    pub name: String,
    pub target: String,
    pub cover: CoverDoc,
    #[serde(default)]
    pub u: LabelMap,
    #[serde(default)]
    pub g: NestedMap,
}
