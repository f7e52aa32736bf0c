use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use thiserror::Error;

pub type GroupRef = Arc<FiniteGroup>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty element list")]
    Empty,
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("table row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("table entry {a}·{b} = {value:?} is not an element")]
    NotClosed { a: String, b: String, value: String },
    #[error("no identity element")]
    NoIdentity,
    #[error("{0} has no inverse")]
    NoInverse(String),
    #[error("not associative: ({0}·{1})·{2} ≠ {0}·({1}·{2})")]
    NotAssociative(String, String, String),
}

/// A finite group given by labelled elements and a Cayley table.
///
/// Elements are the indices `0..order()`. Two groups compare equal when their
/// tables agree; names and labels are presentation only.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}
impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order())
    }
}

/// Validate a label table. Entries are labels; `table[i][j]` is `eᵢ·eⱼ`.
pub fn validate_group(
    name: &str,
    elements: &[String],
    table: &[Vec<String>],
) -> Result<FiniteGroup, GroupError> {
    let n = elements.len();
    if n == 0 {
        return Err(GroupError::Empty);
    }
    let mut index = HashMap::with_capacity(n);
    for (i, l) in elements.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(GroupError::DuplicateLabel(l.clone()));
        }
    }
    if table.len() != n {
        return Err(GroupError::NotSquare {
            row: table.len().min(n),
            found: table.len(),
            expected: n,
        });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::NotSquare {
                row: i,
                found: row.len(),
                expected: n,
            });
        }
        for (j, v) in row.iter().enumerate() {
            match index.get(v) {
                Some(&k) => flat.push(k),
                None => {
                    return Err(GroupError::NotClosed {
                        a: elements[i].clone(),
                        b: elements[j].clone(),
                        value: v.clone(),
                    })
                }
            }
        }
    }
    FiniteGroup::from_index_table(name, elements.to_vec(), flat)
}

impl FiniteGroup {
    /// Validate an index table given row-major.
    pub fn from_index_table(
        name: &str,
        labels: Vec<String>,
        table: Vec<usize>,
    ) -> Result<FiniteGroup, GroupError> {
        let n = labels.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GroupError::DuplicateLabel(l.clone()));
            }
        }
        if table.len() != n * n {
            return Err(GroupError::NotSquare {
                row: 0,
                found: table.len(),
                expected: n * n,
            });
        }
        if let Some(pos) = table.iter().position(|&v| v >= n) {
            return Err(GroupError::NotClosed {
                a: labels[pos / n].clone(),
                b: labels[pos % n].clone(),
                value: table[pos].to_string(),
            });
        }
        let at = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverses = Vec::with_capacity(n);
        for (a, label) in labels.iter().enumerate() {
            match (0..n).find(|&b| at(a, b) == identity && at(b, a) == identity) {
                Some(b) => inverses.push(b),
                None => return Err(GroupError::NoInverse(label.clone())),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAssociative(
                            labels[a].clone(),
                            labels[b].clone(),
                            labels[c].clone(),
                        ));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.to_string(),
            labels,
            index,
            table,
            identity,
            inverses,
        })
    }

    /// Tabulate a binary operation on an explicit element list.
    pub fn from_operation<T, L, M>(
        name: &str,
        elements: &[T],
        label: L,
        op: M,
    ) -> Result<FiniteGroup, GroupError>
    where
        T: Eq + Hash + Clone,
        L: Fn(&T) -> String,
        M: Fn(&T, &T) -> T,
    {
        let n = elements.len();
        let pos: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let labels: Vec<String> = elements.iter().map(&label).collect();
        let mut table = Vec::with_capacity(n * n);
        for a in elements {
            for b in elements {
                let c = op(a, b);
                match pos.get(&c) {
                    Some(&k) => table.push(k),
                    None => {
                        return Err(GroupError::NotClosed {
                            a: label(a),
                            b: label(b),
                            value: label(&c),
                        })
                    }
                }
            }
        }
        FiniteGroup::from_index_table(name, labels, table)
    }

    pub fn into_ref(self) -> GroupRef {
        Arc::new(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> FiniteGroup {
        self.name = name.to_string();
        self
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.labels.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.labels.len() + b]
    }

    /// Product of a sequence, left to right.
    pub fn product<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter()
            .fold(self.identity, |acc, x| self.mul(acc, x))
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Right conjugation `g^x = x⁻¹ g x`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), g), x)
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn lookup(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != self.identity {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|a| self.element_order(a)).collect()
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    /// First pair in index order that does not commute.
    pub fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        for a in self.elements() {
            for b in a + 1..self.order() {
                if !self.commute(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn center(self: &GroupRef) -> Subgroup {
        let members: Vec<usize> = self
            .elements()
            .filter(|&z| self.elements().all(|a| self.commute(z, a)))
            .collect();
        Subgroup::from_members(self, members)
    }

    /// The Cayley table with labels, row-major.
    pub fn label_table(&self) -> Vec<Vec<String>> {
        self.elements()
            .map(|a| {
                self.elements()
                    .map(|b| self.labels[self.mul(a, b)].clone())
                    .collect()
            })
            .collect()
    }

    pub fn identity_label(&self) -> &str {
        &self.labels[self.identity]
    }
}

/// A subgroup given by its sorted member list.
#[derive(Clone, Debug)]
pub struct Subgroup {
    group: GroupRef,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.group == other.group
    }
}

impl Subgroup {
    /// Caller guarantees closure.
    pub(crate) fn from_members(group: &GroupRef, mut members: Vec<usize>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![false; group.order()];
        for &m in &members {
            mask[m] = true;
        }
        Subgroup {
            group: group.clone(),
            members,
            mask,
        }
    }

    /// The subgroup generated by `gens`.
    pub fn generated(group: &GroupRef, gens: &[usize]) -> Subgroup {
        let mut mask = vec![false; group.order()];
        let mut stack = vec![group.identity()];
        mask[group.identity()] = true;
        while let Some(a) = stack.pop() {
            for &g in gens {
                let b = group.mul(a, g);
                if !mask[b] {
                    mask[b] = true;
                    stack.push(b);
                }
            }
        }
        let members = (0..group.order()).filter(|&i| mask[i]).collect();
        Subgroup {
            group: group.clone(),
            members,
            mask,
        }
    }

    pub fn whole(group: &GroupRef) -> Subgroup {
        Subgroup::from_members(group, group.elements().collect())
    }

    pub fn trivial(group: &GroupRef) -> Subgroup {
        Subgroup::from_members(group, vec![group.identity()])
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.mask[a]
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.group.order()
    }

    /// `Err((g, n))` names `g ∈ G`, `n ∈ N` with `n^g ∉ N`.
    pub fn is_normal(&self) -> Result<(), (usize, usize)> {
        for g in self.group.elements() {
            for &n in &self.members {
                if !self.mask[self.group.conj(n, g)] {
                    return Err((g, n));
                }
            }
        }
        Ok(())
    }

    pub fn labels(&self) -> Vec<String> {
        self.members
            .iter()
            .map(|&m| self.group.label(m).to_string())
            .collect()
    }

    /// The subgroup as a group in its own right, with its inclusion.
    pub fn to_group(&self, name: &str) -> (GroupRef, super::Homomorphism) {
        let pos: HashMap<usize, usize> = self
            .members
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i))
            .collect();
        let k = self.members.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &self.members {
            for &b in &self.members {
                table.push(pos[&self.group.mul(a, b)]);
            }
        }
        let sub = FiniteGroup::from_index_table(name, self.labels(), table)
            .expect("subgroup of a valid group is a group")
            .into_ref();
        let inc = super::Homomorphism::new(&sub, &self.group, self.members.clone())
            .expect("inclusion is a homomorphism");
        (sub, inc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn z2_validates() {
        let g = validate_group("Z2", &s(&["1", "t"]), &[s(&["1", "t"]), s(&["t", "1"])]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn idempotent_rejected() {
        let err =
            validate_group("bad", &s(&["1", "t"]), &[s(&["1", "t"]), s(&["t", "t"])]).unwrap_err();
        assert_eq!(err, GroupError::NoInverse("t".into()));
    }

    #[test]
    fn shape_errors() {
        let err = validate_group("bad", &s(&["1", "t"]), &[s(&["1", "t"]), s(&["t"])]).unwrap_err();
        assert!(matches!(err, GroupError::NotSquare { row: 1, .. }));
        let err =
            validate_group("bad", &s(&["1", "1"]), &[s(&["1", "1"]), s(&["1", "1"])]).unwrap_err();
        assert_eq!(err, GroupError::DuplicateLabel("1".into()));
        let err =
            validate_group("bad", &s(&["1", "t"]), &[s(&["1", "t"]), s(&["t", "u"])]).unwrap_err();
        assert!(matches!(err, GroupError::NotClosed { .. }));
    }

    #[test]
    fn non_associative_rejected() {
        // a Latin square with identity 0 that is not a group table
        let t: Vec<usize> = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        let labels = s(&["e", "a", "b", "c", "d"]);
        let err = FiniteGroup::from_index_table("loop", labels, t).unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative(..)));
    }
}
