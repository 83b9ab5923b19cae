//! Finite groups stored as explicit multiplication tables.
//!
//! Elements are addressed by index; index 0 is always the identity. All
//! values are immutable once built, and conjugacy data is computed lazily
//! and cached.

mod build;
mod construct;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

pub use build::{build_group, BuildOptions, Family, GroupSpec, DEFAULT_MAX_ORDER};
pub use construct::{
    abelian_invariants, direct_product, fibre_product, quotient, DirectProduct, FibreProduct,
    Quotient,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("malformed group description: {0}")]
    MalformedSpec(String),
    #[error("multiplication is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(String, String, String),
    #[error("multiplication table has no two-sided identity")]
    NoIdentity,
    #[error("group order {order} exceeds the configured maximum {max}")]
    TooLarge { order: usize, max: usize },
    #[error("element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("element set is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: {g} conjugates {n} outside it")]
    NotNormal { g: String, n: String },
    #[error("map is not a homomorphism: f({a}*{b}) != f({a})*f({b})")]
    NotHomomorphism { a: String, b: String },
    #[error("homomorphism is not surjective: {0} has no preimage")]
    NotSurjective(String),
    #[error("homomorphism is not an isomorphism")]
    NotIsomorphism,
    #[error("group is not abelian: {0} and {1} do not commute")]
    NotAbelian(String, String),
    #[error("group mismatch: {0}")]
    Mismatch(String),
}

/// A finite group given by its full multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    labels: Vec<String>,
    lookup: HashMap<String, usize>,
    table: Vec<usize>,
    inverses: Vec<usize>,
    classes: OnceLock<Vec<ConjClass>>,
    class_of: OnceLock<Vec<usize>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("labels", &self.labels)
            .finish()
    }
}

/// A conjugacy class, represented by its smallest member index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

impl FiniteGroup {
    /// Validates a table whose rows and columns are indexed like `labels`.
    ///
    /// The identity is moved to index 0; the remaining elements keep their
    /// relative order.
    pub fn from_table(
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
        max_order: usize,
    ) -> Result<FiniteGroup, GroupError> {
        let n = labels.len();
        if n == 0 {
            return Err(GroupError::MalformedSpec("empty element list".into()));
        }
        if n > max_order {
            return Err(GroupError::TooLarge { order: n, max: max_order });
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(GroupError::MalformedSpec(format!(
                "table must be {n}x{n} to match the element list"
            )));
        }
        let mut seen_labels = HashMap::new();
        for (i, label) in labels.iter().enumerate() {
            if seen_labels.insert(label.clone(), i).is_some() {
                return Err(GroupError::MalformedSpec(format!("duplicate label {label:?}")));
            }
        }
        for (i, row) in table.iter().enumerate() {
            let mut hit = vec![false; n];
            for &v in row {
                if v >= n || std::mem::replace(&mut hit[v], true) {
                    return Err(GroupError::MalformedSpec(format!(
                        "row {:?} is not a permutation of the elements",
                        labels[i]
                    )));
                }
            }
        }
        for j in 0..n {
            let mut hit = vec![false; n];
            for row in &table {
                if std::mem::replace(&mut hit[row[j]], true) {
                    return Err(GroupError::MalformedSpec(format!(
                        "column {:?} is not a permutation of the elements",
                        labels[j]
                    )));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative(
                            labels[a].clone(),
                            labels[b].clone(),
                            labels[c].clone(),
                        ));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;

        // new position -> old position
        let order: Vec<usize> = std::iter::once(identity)
            .chain((0..n).filter(|&i| i != identity))
            .collect();
        let mut old_to_new = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut flat = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[a * n + b] = old_to_new[table[order[a]][order[b]]];
            }
        }
        let labels: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();

        Ok(FiniteGroup::from_parts(labels, flat))
    }

    /// Builds a group from a flat table known to satisfy the group axioms,
    /// with the identity at index 0.
    pub(crate) fn from_parts(labels: Vec<String>, table: Vec<usize>) -> FiniteGroup {
        let n = labels.len();
        debug_assert_eq!(table.len(), n * n);
        debug_assert!((0..n).all(|x| table[x] == x && table[x * n] == x));
        let mut inverses = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverses[a] = b;
                    break;
                }
            }
        }
        debug_assert!(inverses.iter().all(|&i| i < n));
        let lookup = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        FiniteGroup {
            labels,
            lookup,
            table,
            inverses,
            classes: OnceLock::new(),
            class_of: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, GroupError> {
        self.lookup
            .get(label)
            .copied()
            .ok_or_else(|| GroupError::UnknownLabel(label.to_string()))
    }

    pub fn check_index(&self, index: usize) -> Result<(), GroupError> {
        if index < self.order() {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange { index, order: self.order() })
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `a^n` for any integer `n`.
    pub fn pow(&self, a: usize, n: i64) -> usize {
        let base = if n < 0 { self.inv(a) } else { a };
        let mut acc = 0;
        for _ in 0..n.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// `g a g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// First non-commuting pair, if any.
    pub fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        let n = self.order();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    pub fn is_abelian(&self) -> bool {
        self.noncommuting_pair().is_none()
    }

    pub fn require_abelian(&self) -> Result<(), GroupError> {
        match self.noncommuting_pair() {
            None => Ok(()),
            Some((a, b)) => Err(GroupError::NotAbelian(
                self.labels[a].clone(),
                self.labels[b].clone(),
            )),
        }
    }

    /// Conjugacy classes ordered by representative, identity class first.
    pub fn conjugacy_classes(&self) -> &[ConjClass] {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut assigned = vec![false; n];
            let mut classes = Vec::new();
            for rep in 0..n {
                if assigned[rep] {
                    continue;
                }
                let mut members: Vec<usize> = (0..n).map(|g| self.conjugate(g, rep)).collect();
                members.sort_unstable();
                members.dedup();
                for &m in &members {
                    assigned[m] = true;
                }
                classes.push(ConjClass { representative: rep, members });
            }
            classes
        })
    }

    /// Position in [`conjugacy_classes`](Self::conjugacy_classes) of the class containing `x`.
    pub fn class_index(&self, x: usize) -> usize {
        self.class_of.get_or_init(|| {
            let mut class_of = vec![0; self.order()];
            for (k, class) in self.conjugacy_classes().iter().enumerate() {
                for &m in &class.members {
                    class_of[m] = k;
                }
            }
            class_of
        })[x]
    }

    /// The subgroup `{ g : g a = a g }`.
    pub fn centralizer(self: &Arc<Self>, a: usize) -> Result<Subgroup, GroupError> {
        self.check_index(a)?;
        let members = (0..self.order())
            .filter(|&g| self.mul(g, a) == self.mul(a, g))
            .collect();
        Ok(Subgroup { parent: Arc::clone(self), members })
    }

    /// The center `{ z : z g = g z for all g }`.
    pub fn center(self: &Arc<Self>) -> Subgroup {
        let n = self.order();
        let members = (0..n)
            .filter(|&z| (0..n).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        Subgroup { parent: Arc::clone(self), members }
    }

    /// The subgroup generated by `gens`.
    pub fn generate(self: &Arc<Self>, gens: &[usize]) -> Subgroup {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut members = vec![0];
        let mut frontier = 0;
        while frontier < members.len() {
            let x = members[frontier];
            frontier += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup { parent: Arc::clone(self), members }
    }

    /// The commutator subgroup `[G, G]`.
    pub fn derived_subgroup(self: &Arc<Self>) -> Subgroup {
        let n = self.order();
        let mut commutators: Vec<usize> = (0..n)
            .flat_map(|a| {
                (0..n).map(move |b| (a, b))
            })
            .map(|(a, b)| self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b))))
            .collect();
        commutators.sort_unstable();
        commutators.dedup();
        self.generate(&commutators)
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(self: &Arc<Self>) -> Subgroup {
        Subgroup {
            parent: Arc::clone(self),
            members: (0..self.order()).collect(),
        }
    }

    pub fn trivial_subgroup(self: &Arc<Self>) -> Subgroup {
        Subgroup { parent: Arc::clone(self), members: vec![0] }
    }
}

/// A subgroup of a parent group, stored as a sorted set of parent indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
}

impl Subgroup {
    /// Checks that `members` is closed under multiplication and inversion.
    pub fn new(parent: Arc<FiniteGroup>, mut members: Vec<usize>) -> Result<Subgroup, GroupError> {
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            parent.check_index(m)?;
        }
        let mut inside = vec![false; parent.order()];
        for &m in &members {
            inside[m] = true;
        }
        if !inside[0] {
            return Err(GroupError::NotSubgroup("identity missing".into()));
        }
        for &a in &members {
            if !inside[parent.inv(a)] {
                return Err(GroupError::NotSubgroup(format!(
                    "inverse of {} missing",
                    parent.label(a)
                )));
            }
            for &b in &members {
                if !inside[parent.mul(a, b)] {
                    return Err(GroupError::NotSubgroup(format!(
                        "{}*{} missing",
                        parent.label(a),
                        parent.label(b)
                    )));
                }
            }
        }
        Ok(Subgroup { parent, members })
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// First `(g, n)` with `g n g⁻¹` outside the subgroup.
    pub fn normality_witness(&self) -> Option<(usize, usize)> {
        let g_order = self.parent.order();
        (0..g_order)
            .flat_map(|g| self.members.iter().map(move |&n| (g, n)))
            .find(|&(g, n)| !self.contains(self.parent.conjugate(g, n)))
    }

    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_none()
    }

    /// The subgroup as a group in its own right, with the inclusion into
    /// the parent. Element `i` of the new group is `members()[i]`.
    pub fn induced_group(&self) -> (Arc<FiniteGroup>, GroupHom) {
        let k = self.members.len();
        let mut position = HashMap::with_capacity(k);
        for (i, &m) in self.members.iter().enumerate() {
            position.insert(m, i);
        }
        let mut table = vec![0; k * k];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                table[i * k + j] = position[&self.parent.mul(a, b)];
            }
        }
        let labels = self
            .members
            .iter()
            .map(|&m| self.parent.label(m).to_string())
            .collect();
        let group = Arc::new(FiniteGroup::from_parts(labels, table));
        let inclusion = GroupHom {
            source: Arc::clone(&group),
            target: Arc::clone(&self.parent),
            image: self.members.clone(),
        };
        (group, inclusion)
    }
}

/// A homomorphism between two finite groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    image: Vec<usize>,
}

impl GroupHom {
    /// Validates the homomorphism property on all pairs.
    pub fn new(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        image: Vec<usize>,
    ) -> Result<GroupHom, GroupError> {
        if image.len() != source.order() {
            return Err(GroupError::Mismatch(format!(
                "map has {} entries but the source has order {}",
                image.len(),
                source.order()
            )));
        }
        for &y in &image {
            target.check_index(y)?;
        }
        let n = source.order();
        for a in 0..n {
            for b in 0..n {
                if image[source.mul(a, b)] != target.mul(image[a], image[b]) {
                    return Err(GroupError::NotHomomorphism {
                        a: source.label(a).to_string(),
                        b: source.label(b).to_string(),
                    });
                }
            }
        }
        Ok(GroupHom { source, target, image })
    }

    /// Builds a homomorphism from a label-to-label map.
    pub fn from_labels<'a>(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<GroupHom, GroupError> {
        let mut image = vec![None; source.order()];
        for (from, to) in pairs {
            let i = source.index_of(from)?;
            let j = target.index_of(to)?;
            if image[i].replace(j).is_some() {
                return Err(GroupError::Mismatch(format!("label {from:?} mapped twice")));
            }
        }
        let image = image
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    GroupError::Mismatch(format!("no image given for {:?}", source.label(i)))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        GroupHom::new(source, target, image)
    }

    /// The identity map of `g`.
    pub fn identity(g: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom {
            source: Arc::clone(g),
            target: Arc::clone(g),
            image: (0..g.order()).collect(),
        }
    }

    /// The map sending everything to the identity.
    pub fn trivial(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom {
            source: Arc::clone(source),
            target: Arc::clone(target),
            image: vec![0; source.order()],
        }
    }

    pub(crate) fn from_parts_unchecked(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        image: Vec<usize>,
    ) -> GroupHom {
        GroupHom { source, target, image }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn image_map(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn is_injective(&self) -> bool {
        // a homomorphism is injective iff its kernel is trivial
        self.image.iter().skip(1).all(|&y| y != 0)
    }

    /// First target element that is not hit, if any.
    pub fn missing_from_image(&self) -> Option<usize> {
        let mut hit = vec![false; self.target.order()];
        for &y in &self.image {
            hit[y] = true;
        }
        hit.iter().position(|&h| !h)
    }

    pub fn is_surjective(&self) -> bool {
        self.missing_from_image().is_none()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom, GroupError> {
        if *self.target != *other.source {
            return Err(GroupError::Mismatch("composition of non-composable maps".into()));
        }
        Ok(GroupHom {
            source: Arc::clone(&self.source),
            target: Arc::clone(&other.target),
            image: self.image.iter().map(|&x| other.image[x]).collect(),
        })
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup {
            parent: Arc::clone(&self.source),
            members: (0..self.source.order()).filter(|&x| self.image[x] == 0).collect(),
        }
    }
}

/// `conjugacy_classes` as a free function.
pub fn conjugacy_classes(g: &FiniteGroup) -> &[ConjClass] {
    g.conjugacy_classes()
}

pub fn centralizer(g: &Arc<FiniteGroup>, a: usize) -> Result<Subgroup, GroupError> {
    g.centralizer(a)
}

pub fn center_of_group(g: &Arc<FiniteGroup>) -> Subgroup {
    g.center()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(family: Family, parameter: usize) -> Arc<FiniteGroup> {
        Arc::new(
            build_group(&GroupSpec::Named { family, parameter }, &BuildOptions::default()).unwrap(),
        )
    }

    /// Orbit computation by repeated conjugation with single elements,
    /// independent of the class cache.
    fn brute_force_class_sizes(g: &FiniteGroup) -> Vec<usize> {
        let n = g.order();
        let mut seen = vec![false; n];
        let mut sizes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut orbit = vec![x];
            seen[x] = true;
            let mut i = 0;
            while i < orbit.len() {
                let y = orbit[i];
                i += 1;
                for h in 0..n {
                    let z = g.mul(g.mul(g.inv(h), y), h);
                    if !seen[z] {
                        seen[z] = true;
                        orbit.push(z);
                    }
                }
            }
            sizes.push(orbit.len());
        }
        sizes
    }

    #[test]
    fn s3_classes() {
        let s3 = named(Family::Symmetric, 3);
        let sizes: Vec<usize> = s3.conjugacy_classes().iter().map(ConjClass::size).collect();
        assert_eq!(sizes, brute_force_class_sizes(&s3));
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 3]);
        assert_eq!(s3.conjugacy_classes()[0].members, vec![0]);
    }

    #[test]
    fn q8_classes_and_center() {
        let q8 = named(Family::Quaternion, 8);
        let mut sizes = brute_force_class_sizes(&q8);
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        assert_eq!(q8.conjugacy_classes().len(), 5);
        assert_eq!(q8.center().order(), 2);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = Arc::new(
            build_group(&GroupSpec::Abelian { orders: vec![2, 6] }, &BuildOptions::default())
                .unwrap(),
        );
        assert_eq!(g.conjugacy_classes().len(), 12);
        assert_eq!(g.center().order(), 12);
    }

    #[test]
    fn centralizers_in_s3() {
        let s3 = named(Family::Symmetric, 3);
        let transposition = s3.index_of("(0 1)").unwrap();
        let three_cycle = s3.index_of("(0 1 2)").unwrap();
        assert_eq!(s3.centralizer(transposition).unwrap().order(), 2);
        assert_eq!(s3.centralizer(three_cycle).unwrap().order(), 3);
        assert_eq!(s3.centralizer(0).unwrap().order(), 6);
        assert!(matches!(
            s3.centralizer(6),
            Err(GroupError::IndexOutOfRange { index: 6, order: 6 })
        ));
        assert_eq!(s3.center().order(), 1);
        for a in 0..6 {
            let class = &s3.conjugacy_classes()[s3.class_index(a)];
            assert_eq!(class.size() * s3.centralizer(a).unwrap().order(), 6);
        }
    }

    #[test]
    fn known_class_counts() {
        for (family, parameter, count) in [
            (Family::Symmetric, 3, 3),
            (Family::Symmetric, 4, 5),
            (Family::Quaternion, 8, 5),
            (Family::Alternating, 4, 4),
            (Family::Dihedral, 4, 5),
        ] {
            let g = named(family, parameter);
            assert_eq!(g.conjugacy_classes().len(), count, "{family:?} {parameter}");
            assert_eq!(brute_force_class_sizes(&g).len(), count);
            let total: usize = g.conjugacy_classes().iter().map(ConjClass::size).sum();
            assert_eq!(total, g.order());
        }
    }

    #[test]
    fn subgroup_validation() {
        let s3 = named(Family::Symmetric, 3);
        let t = s3.index_of("(0 1)").unwrap();
        let c = s3.index_of("(0 1 2)").unwrap();
        assert!(Subgroup::new(Arc::clone(&s3), vec![0, t]).is_ok());
        assert!(matches!(
            Subgroup::new(Arc::clone(&s3), vec![0, c]),
            Err(GroupError::NotSubgroup(_))
        ));
        assert!(matches!(
            Subgroup::new(Arc::clone(&s3), vec![t]),
            Err(GroupError::NotSubgroup(_))
        ));
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(named(Family::Symmetric, 3).derived_subgroup().order(), 3);
        assert_eq!(named(Family::Quaternion, 8).derived_subgroup().order(), 2);
        assert_eq!(named(Family::Alternating, 4).derived_subgroup().order(), 4);
        assert_eq!(named(Family::Cyclic, 6).derived_subgroup().order(), 1);
    }

    #[test]
    fn hom_checks() {
        let z4 = named(Family::Cyclic, 4);
        let z2 = named(Family::Cyclic, 2);
        let reduce = GroupHom::new(Arc::clone(&z4), Arc::clone(&z2), vec![0, 1, 0, 1]).unwrap();
        assert!(reduce.is_surjective());
        assert!(!reduce.is_injective());
        assert_eq!(reduce.kernel().members(), &[0, 2]);
        assert!(matches!(
            GroupHom::new(Arc::clone(&z4), Arc::clone(&z2), vec![0, 1, 1, 1]),
            Err(GroupError::NotHomomorphism { .. })
        ));
        let by_label =
            GroupHom::from_labels(Arc::clone(&z4), z2, [("0", "0"), ("1", "1"), ("2", "0"), ("3", "1")])
                .unwrap();
        assert_eq!(by_label, reduce);
    }

    #[test]
    fn element_orders_and_powers() {
        let z6 = named(Family::Cyclic, 6);
        assert_eq!(z6.element_order(1), 6);
        assert_eq!(z6.element_order(2), 3);
        assert_eq!(z6.pow(1, -1), 5);
        assert_eq!(z6.pow(2, 4), 2);
    }
}
