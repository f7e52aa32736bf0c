use std::fmt;

use thiserror::Error;

use super::{GroupRef, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("map has {found} entries, source has order {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("image of {0} is not an element of the target")]
    OutOfRange(String),
    #[error("not multiplicative at ({0}, {1})")]
    NotMultiplicative(String, String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("no image given for {0}")]
    Missing(String),
}

/// A validated group homomorphism, stored as a lookup table.
#[derive(Clone)]
pub struct Homomorphism {
    source: GroupRef,
    target: GroupRef,
    map: Vec<usize>,
}

impl PartialEq for Homomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && self.source == other.source && self.target == other.target
    }
}
impl Eq for Homomorphism {}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hom({} -> {}: ", self.source.name(), self.target.name())?;
        f.debug_map()
            .entries(
                self.source
                    .elements()
                    .map(|a| (self.source.label(a), self.target.label(self.map[a]))),
            )
            .finish()?;
        write!(f, ")")
    }
}

#[derive(Debug, Clone)]
pub struct HomAnalysis {
    pub kernel: Subgroup,
    pub image: Subgroup,
    pub injective: bool,
    pub surjective: bool,
}

/// Check multiplicativity exhaustively and report kernel and image.
pub fn hom_analyze(
    source: &GroupRef,
    target: &GroupRef,
    map: Vec<usize>,
) -> Result<HomAnalysis, HomError> {
    let f = Homomorphism::new(source, target, map)?;
    Ok(f.analyze())
}

impl Homomorphism {
    pub fn new(source: &GroupRef, target: &GroupRef, map: Vec<usize>) -> Result<Self, HomError> {
        if map.len() != source.order() {
            return Err(HomError::LengthMismatch {
                expected: source.order(),
                found: map.len(),
            });
        }
        if let Some(a) = map.iter().position(|&v| v >= target.order()) {
            return Err(HomError::OutOfRange(source.label(a).to_string()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(HomError::NotMultiplicative(
                        source.label(a).to_string(),
                        source.label(b).to_string(),
                    ));
                }
            }
        }
        Ok(Homomorphism {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    /// Build from `(source label, target label)` pairs; every element needs an image.
    pub fn from_labels<'a, I>(
        source: &GroupRef,
        target: &GroupRef,
        pairs: I,
    ) -> Result<Self, HomError>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut map = vec![usize::MAX; source.order()];
        for (a, b) in pairs {
            let i = source
                .lookup(a)
                .ok_or_else(|| HomError::UnknownLabel(a.to_string()))?;
            let j = target
                .lookup(b)
                .ok_or_else(|| HomError::UnknownLabel(b.to_string()))?;
            map[i] = j;
        }
        if let Some(a) = map.iter().position(|&v| v == usize::MAX) {
            return Err(HomError::Missing(source.label(a).to_string()));
        }
        Homomorphism::new(source, target, map)
    }

    pub fn identity(group: &GroupRef) -> Self {
        Homomorphism {
            source: group.clone(),
            target: group.clone(),
            map: group.elements().collect(),
        }
    }

    pub fn trivial(source: &GroupRef, target: &GroupRef) -> Self {
        Homomorphism {
            source: source.clone(),
            target: target.clone(),
            map: vec![target.identity(); source.order()],
        }
    }

    pub fn source(&self) -> &GroupRef {
        &self.source
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Homomorphism) -> Homomorphism {
        assert!(
            *self.target == *next.source,
            "composing homomorphisms with mismatched groups"
        );
        Homomorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&a| next.map[a]).collect(),
        }
    }

    pub fn kernel(&self) -> Subgroup {
        let e = self.target.identity();
        Subgroup::from_members(
            &self.source,
            self.source
                .elements()
                .filter(|&a| self.map[a] == e)
                .collect(),
        )
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_members(&self.target, self.map.clone())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_whole()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    pub fn is_trivial(&self) -> bool {
        self.map.iter().all(|&a| a == self.target.identity())
    }

    pub fn analyze(&self) -> HomAnalysis {
        HomAnalysis {
            kernel: self.kernel(),
            image: self.image(),
            injective: self.is_injective(),
            surjective: self.is_surjective(),
        }
    }

    /// Index-least preimage of `b`, if any.
    pub fn preimage(&self, b: usize) -> Option<usize> {
        self.map.iter().position(|&v| v == b)
    }

    /// Inverse map of a bijective homomorphism.
    pub fn inverse(&self) -> Option<Homomorphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (a, &b) in self.map.iter().enumerate() {
            inv[b] = a;
        }
        Some(Homomorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            map: inv,
        })
    }

    /// `(label, label)` pairs in source index order.
    pub fn label_pairs(&self) -> Vec<(String, String)> {
        self.source
            .elements()
            .map(|a| {
                (
                    self.source.label(a).to_string(),
                    self.target.label(self.map[a]).to_string(),
                )
            })
            .collect()
    }

    pub(crate) fn from_parts_unchecked(
        source: &GroupRef,
        target: &GroupRef,
        map: Vec<usize>,
    ) -> Homomorphism {
        debug_assert_eq!(map.len(), source.order());
        Homomorphism {
            source: source.clone(),
            target: target.clone(),
            map,
        }
    }
}
