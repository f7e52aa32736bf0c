use std::fmt;

use thiserror::Error;

use super::{GroupRef, Homomorphism};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("action table has {found} entries, expected {expected}")]
    Shape { expected: usize, found: usize },
    #[error("{g}^{x} is not an element")]
    OutOfRange { g: String, x: String },
    #[error("identity does not act trivially on {0}")]
    NotUnital(String),
    #[error("{g}^({x}{y}) ≠ ({g}^{x})^{y}")]
    NotCompatible { g: String, x: String, y: String },
    #[error("({g}{h})^{x} ≠ {g}^{x}·{h}^{x}")]
    NotByAutomorphisms { g: String, h: String, x: String },
    #[error("pullback along a map into {found}, action is by {expected}")]
    Mismatch { expected: String, found: String },
}

/// A right action of `group` on `space` by automorphisms, `g^x`.
#[derive(Clone)]
pub struct RightAction {
    group: GroupRef,
    space: GroupRef,
    // table[g * |group| + x] = g^x
    table: Vec<usize>,
}

impl PartialEq for RightAction {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.group == other.group && self.space == other.space
    }
}
impl Eq for RightAction {}

impl fmt::Debug for RightAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RightAction({} on {})",
            self.group.name(),
            self.space.name()
        )
    }
}

impl RightAction {
    pub fn new(group: &GroupRef, space: &GroupRef, table: Vec<usize>) -> Result<Self, ActionError> {
        let (ng, ns) = (group.order(), space.order());
        if table.len() != ng * ns {
            return Err(ActionError::Shape {
                expected: ng * ns,
                found: table.len(),
            });
        }
        if let Some(p) = table.iter().position(|&v| v >= ns) {
            return Err(ActionError::OutOfRange {
                g: space.label(p / ng).to_string(),
                x: group.label(p % ng).to_string(),
            });
        }
        let act = |g: usize, x: usize| table[g * ng + x];
        for g in space.elements() {
            if act(g, group.identity()) != g {
                return Err(ActionError::NotUnital(space.label(g).to_string()));
            }
        }
        for g in space.elements() {
            for x in group.elements() {
                for y in group.elements() {
                    if act(g, group.mul(x, y)) != act(act(g, x), y) {
                        return Err(ActionError::NotCompatible {
                            g: space.label(g).to_string(),
                            x: group.label(x).to_string(),
                            y: group.label(y).to_string(),
                        });
                    }
                }
            }
        }
        for x in group.elements() {
            for g in space.elements() {
                for h in space.elements() {
                    if act(space.mul(g, h), x) != space.mul(act(g, x), act(h, x)) {
                        return Err(ActionError::NotByAutomorphisms {
                            g: space.label(g).to_string(),
                            h: space.label(h).to_string(),
                            x: group.label(x).to_string(),
                        });
                    }
                }
            }
        }
        Ok(RightAction {
            group: group.clone(),
            space: space.clone(),
            table,
        })
    }

    /// Build from a closure `(g, x) ↦ g^x` and validate.
    pub fn from_fn<F: Fn(usize, usize) -> usize>(
        group: &GroupRef,
        space: &GroupRef,
        f: F,
    ) -> Result<Self, ActionError> {
        let mut table = Vec::with_capacity(group.order() * space.order());
        for g in space.elements() {
            for x in group.elements() {
                table.push(f(g, x));
            }
        }
        RightAction::new(group, space, table)
    }

    pub fn trivial(group: &GroupRef, space: &GroupRef) -> Self {
        let mut table = Vec::with_capacity(group.order() * space.order());
        for g in space.elements() {
            table.extend(std::iter::repeat_n(g, group.order()));
        }
        RightAction {
            group: group.clone(),
            space: space.clone(),
            table,
        }
    }

    /// `g^x = x⁻¹ g x`.
    pub fn conjugation(group: &GroupRef) -> Self {
        let mut table = Vec::with_capacity(group.order() * group.order());
        for g in group.elements() {
            for x in group.elements() {
                table.push(group.conj(g, x));
            }
        }
        RightAction {
            group: group.clone(),
            space: group.clone(),
            table,
        }
    }

    /// The action of `f.source()` given by `g^h = g^{f(h)}`.
    pub fn pullback(&self, f: &Homomorphism) -> Result<Self, ActionError> {
        if **f.target() != *self.group {
            return Err(ActionError::Mismatch {
                expected: self.group.name().to_string(),
                found: f.target().name().to_string(),
            });
        }
        let h = f.source();
        let mut table = Vec::with_capacity(h.order() * self.space.order());
        for g in self.space.elements() {
            for x in h.elements() {
                table.push(self.act(g, f.apply(x)));
            }
        }
        Ok(RightAction {
            group: h.clone(),
            space: self.space.clone(),
            table,
        })
    }

    /// Restrict the acted-on group along an injective equivariant inclusion
    /// `i: N → space` whose image is stable; used for sub-crossed modules.
    pub fn restrict_space(&self, inc: &Homomorphism) -> Option<Self> {
        let n = inc.source();
        let mut table = Vec::with_capacity(n.order() * self.group.order());
        for g in n.elements() {
            for x in self.group.elements() {
                let v = self.act(inc.apply(g), x);
                table.push(inc.preimage(v)?);
            }
        }
        Some(RightAction {
            group: self.group.clone(),
            space: n.clone(),
            table,
        })
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.table[g * self.group.order() + x]
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn space(&self) -> &GroupRef {
        &self.space
    }

    pub fn is_trivial(&self) -> bool {
        self.space
            .elements()
            .all(|g| self.group.elements().all(|x| self.act(g, x) == g))
    }

    pub(crate) fn from_parts_unchecked(
        group: &GroupRef,
        space: &GroupRef,
        table: Vec<usize>,
    ) -> Self {
        RightAction {
            group: group.clone(),
            space: space.clone(),
            table,
        }
    }
}
