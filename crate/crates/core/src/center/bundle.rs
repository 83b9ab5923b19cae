//! Rank-one `G`-equivariant vector bundles over `G`, induced from linear
//! characters of centralizers.

use std::sync::Arc;

use serde::Serialize;

use super::CenterError;
use crate::group::{FiniteGroup, Subgroup};
use crate::phase::Phase;

/// A linear character `χ: Z(a) → Q/Z`, stored on the members of the
/// subgroup in their sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCharacter {
    subgroup: Subgroup,
    values: Vec<Phase>,
}

impl LinearCharacter {
    /// Checks the homomorphism property exhaustively.
    pub fn new(subgroup: Subgroup, values: Vec<Phase>) -> Result<LinearCharacter, CenterError> {
        if values.len() != subgroup.order() {
            return Err(CenterError::NotCharacter(format!(
                "{} values for a subgroup of order {}",
                values.len(),
                subgroup.order()
            )));
        }
        let chi = LinearCharacter { subgroup, values };
        let g = chi.subgroup.parent();
        for &u in chi.subgroup.members() {
            for &v in chi.subgroup.members() {
                if chi.value(g.mul(u, v)) != chi.value(u) + chi.value(v) {
                    return Err(CenterError::NotCharacter(format!(
                        "chi({}·{}) ≠ chi({}) + chi({})",
                        g.label(u),
                        g.label(v),
                        g.label(u),
                        g.label(v)
                    )));
                }
            }
        }
        Ok(chi)
    }

    pub fn trivial(subgroup: Subgroup) -> LinearCharacter {
        let values = vec![Phase::ZERO; subgroup.order()];
        LinearCharacter { subgroup, values }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn values(&self) -> &[Phase] {
        &self.values
    }

    /// Value at a parent-group element of the subgroup.
    pub fn value(&self, x: usize) -> Phase {
        let pos = self
            .subgroup
            .members()
            .binary_search(&x)
            .expect("character evaluated outside its subgroup");
        self.values[pos]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

/// Every linear character of `h`, starting with the trivial one.
///
/// Values on a greedily chosen generating set are enumerated and extended
/// along the Cayley graph; assignments that are inconsistent are dropped.
pub fn linear_characters(h: &Subgroup) -> Vec<LinearCharacter> {
    let g = h.parent();
    let mut gens: Vec<usize> = Vec::new();
    let mut span = g.generate(&[]);
    for &x in h.members() {
        if !span.contains(x) {
            gens.push(x);
            span = g.generate(&gens);
        }
    }
    let orders: Vec<i64> = gens.iter().map(|&x| g.element_order(x) as i64).collect();
    let mut out = Vec::new();
    let mut choice = vec![0i64; gens.len()];
    loop {
        let assignment: Vec<Phase> = choice.iter().zip(&orders).map(|(&c, &n)| Phase::new(c, n)).collect();
        if let Some(values) = extend(h, &gens, &assignment) {
            out.push(LinearCharacter { subgroup: h.clone(), values });
        }
        // odometer over choice[i] in 0..orders[i]
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < orders[i] {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn extend(h: &Subgroup, gens: &[usize], assignment: &[Phase]) -> Option<Vec<Phase>> {
    let g = h.parent();
    let pos = |x: usize| h.members().binary_search(&x).expect("closed subgroup");
    let mut values: Vec<Option<Phase>> = vec![None; h.order()];
    values[pos(0)] = Some(Phase::ZERO);
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        let vx = values[pos(x)].expect("queued elements have values");
        for (&s, &vs) in gens.iter().zip(assignment) {
            let y = g.mul(x, s);
            match values[pos(y)] {
                Some(vy) if vy != vx + vs => return None,
                Some(_) => {}
                None => {
                    values[pos(y)] = Some(vx + vs);
                    queue.push(y);
                }
            }
        }
    }
    values.into_iter().collect()
}

/// A `G`-equivariant vector bundle over `G`: graded dimensions on a
/// conjugation-closed support and, for rank one, the scalars
/// `π_{g,x}: V_{g⁻¹xg} → V_x` as phases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivariantBundle {
    #[serde(skip)]
    group: Arc<FiniteGroup>,
    support: Vec<usize>,
    fiber_dim: Vec<u64>,
    /// `pi[g][i]` is `π_{g, support[i]}`.
    pi: Option<Vec<Vec<Phase>>>,
}

impl EquivariantBundle {
    /// A bundle with one-dimensional fibers and the given `π` table.
    pub fn rank_one(
        group: &Arc<FiniteGroup>,
        mut support: Vec<usize>,
        pi: impl Fn(usize, usize) -> Phase,
    ) -> Result<EquivariantBundle, CenterError> {
        support.sort_unstable();
        support.dedup();
        for &x in &support {
            group.check_index(x)?;
            for g in 0..group.order() {
                let y = group.conjugate(group.inv(g), x);
                if support.binary_search(&y).is_err() {
                    return Err(CenterError::SupportNotClosed(group.label(x).to_string()));
                }
            }
        }
        let table = (0..group.order())
            .map(|g| support.iter().map(|&x| pi(g, x)).collect())
            .collect();
        Ok(EquivariantBundle {
            group: Arc::clone(group),
            fiber_dim: vec![1; support.len()],
            support,
            pi: Some(table),
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn fiber_dim(&self, x: usize) -> u64 {
        self.support
            .binary_search(&x)
            .map(|i| self.fiber_dim[i])
            .unwrap_or(0)
    }

    pub fn is_rank_one(&self) -> bool {
        self.pi.is_some()
    }

    /// `π_{g,x}`, for rank-one bundles and `x` in the support.
    pub fn pi(&self, g: usize, x: usize) -> Option<Phase> {
        let i = self.support.binary_search(&x).ok()?;
        self.pi.as_ref().map(|t| t[g][i])
    }

    /// Adds `delta` to the single scalar `π_{g,x}`.
    pub fn perturb(&mut self, g: usize, x: usize, delta: Phase) {
        let i = self.support.binary_search(&x).expect("x in support");
        if let Some(t) = self.pi.as_mut() {
            t[g][i] += delta;
        }
    }
}

/// Transversal with `t_x = min { g : g a g⁻¹ = x }`.
pub fn minimal_transversal(g: &FiniteGroup, a: usize) -> Vec<(usize, usize)> {
    let class = &g.conjugacy_classes()[g.class_index(a)];
    class
        .members
        .iter()
        .map(|&x| {
            let t = (0..g.order())
                .find(|&t| g.conjugate(t, a) == x)
                .expect("class members are conjugates");
            (x, t)
        })
        .collect()
}

/// Induced rank-one bundle on the class of `a` with
/// `π_{g,x} = χ(t_x⁻¹ g t_{g⁻¹xg})` for the minimal transversal.
pub fn induce_center_object(
    g: &Arc<FiniteGroup>,
    a: usize,
    chi: &LinearCharacter,
) -> Result<EquivariantBundle, CenterError> {
    g.check_index(a)?;
    induce_with_transversal(g, a, chi, &minimal_transversal(g, a))
}

/// As [`induce_center_object`] with a caller-supplied transversal given as
/// `(x, t_x)` pairs covering the class of `a`.
pub fn induce_with_transversal(
    g: &Arc<FiniteGroup>,
    a: usize,
    chi: &LinearCharacter,
    transversal: &[(usize, usize)],
) -> Result<EquivariantBundle, CenterError> {
    g.check_index(a)?;
    let centralizer = g.centralizer(a)?;
    if chi.subgroup().members() != centralizer.members() || **chi.subgroup().parent() != **g {
        return Err(CenterError::NotCharacter(format!(
            "character is not defined on the centralizer of {}",
            g.label(a)
        )));
    }
    let class = &g.conjugacy_classes()[g.class_index(a)];
    let mut t = vec![usize::MAX; g.order()];
    for &(x, tx) in transversal {
        g.check_index(x)?;
        g.check_index(tx)?;
        if g.conjugate(tx, a) != x {
            return Err(CenterError::BadTransversal(g.label(x).to_string()));
        }
        t[x] = tx;
    }
    if let Some(&x) = class.members.iter().find(|&&x| t[x] == usize::MAX) {
        return Err(CenterError::BadTransversal(g.label(x).to_string()));
    }
    EquivariantBundle::rank_one(g, class.members.clone(), |h, x| {
        let y = g.conjugate(g.inv(h), x);
        chi.value(g.mul(g.mul(g.inv(t[x]), h), t[y]))
    })
}

/// Result of [`validate_bundle`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum BundleVerdict {
    Pass,
    NotRankOne,
    /// `π_{e,x} ≠ 0`.
    IdentityNonzero { x: usize, value: Phase },
    /// `π_{gh,x} ≠ π_{g,x} + π_{h,g⁻¹xg}`.
    CocycleViolation {
        g: usize,
        h: usize,
        x: usize,
        lhs: Phase,
        rhs: Phase,
    },
}

impl BundleVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, BundleVerdict::Pass)
    }
}

pub fn validate_bundle(bundle: &EquivariantBundle) -> BundleVerdict {
    let g = &bundle.group;
    if !bundle.is_rank_one() {
        return BundleVerdict::NotRankOne;
    }
    let pi = |a: usize, x: usize| bundle.pi(a, x).expect("rank-one bundle on its support");
    for &x in &bundle.support {
        if !pi(0, x).is_zero() {
            return BundleVerdict::IdentityNonzero { x, value: pi(0, x) };
        }
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            let ab = g.mul(a, b);
            for &x in &bundle.support {
                let y = g.conjugate(g.inv(a), x);
                let lhs = pi(ab, x);
                let rhs = pi(a, x) + pi(b, y);
                if lhs != rhs {
                    return BundleVerdict::CocycleViolation { g: a, h: b, x, lhs, rhs };
                }
            }
        }
    }
    BundleVerdict::Pass
}
