use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;

use super::{FiniteGroup, GroupError, GroupHom, Subgroup};

/// `G/N` together with the canonical projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: Arc<FiniteGroup>,
    pub projection: GroupHom,
    /// Coset `i` of the quotient as sorted parent indices.
    pub cosets: Vec<Vec<usize>>,
}

/// Labels a coset by its smallest member, e.g. `[1]` for `1 + N`.
fn coset_label(g: &FiniteGroup, members: &[usize]) -> String {
    format!("[{}]", g.label(members[0]))
}

/// Quotient by a normal subgroup. Cosets are ordered by their smallest
/// member, so the identity coset `N` comes first.
pub fn quotient(g: &Arc<FiniteGroup>, n: &Subgroup) -> Result<Quotient, GroupError> {
    if **n.parent() != **g {
        return Err(GroupError::Mismatch("subgroup belongs to a different group".into()));
    }
    if let Some((x, m)) = n.normality_witness() {
        return Err(GroupError::NotNormal {
            g: g.label(x).to_string(),
            n: g.label(m).to_string(),
        });
    }
    let order = g.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for x in 0..order {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = n.members().iter().map(|&m| g.mul(x, m)).collect();
        members.sort_unstable();
        for &m in &members {
            coset_of[m] = cosets.len();
        }
        cosets.push(members);
    }
    let k = cosets.len();
    let mut table = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            table[i * k + j] = coset_of[g.mul(cosets[i][0], cosets[j][0])];
        }
    }
    let labels = cosets.iter().map(|c| coset_label(g, c)).collect();
    let group = Arc::new(FiniteGroup::from_parts(labels, table));
    let projection = GroupHom::from_parts_unchecked(Arc::clone(g), Arc::clone(&group), coset_of);
    Ok(Quotient { group, projection, cosets })
}

/// `G × H` with its inclusions and projections. Element `(i, j)` sits at
/// index `i·|H| + j`.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    pub group: Arc<FiniteGroup>,
    pub left: Arc<FiniteGroup>,
    pub right: Arc<FiniteGroup>,
    pub inl: GroupHom,
    pub inr: GroupHom,
}

impl DirectProduct {
    #[inline]
    pub fn pair(&self, i: usize, j: usize) -> usize {
        i * self.right.order() + j
    }

    #[inline]
    pub fn split(&self, x: usize) -> (usize, usize) {
        (x / self.right.order(), x % self.right.order())
    }

    pub fn proj_left(&self) -> GroupHom {
        let image = (0..self.group.order()).map(|x| self.split(x).0).collect();
        GroupHom::from_parts_unchecked(Arc::clone(&self.group), Arc::clone(&self.left), image)
    }

    pub fn proj_right(&self) -> GroupHom {
        let image = (0..self.group.order()).map(|x| self.split(x).1).collect();
        GroupHom::from_parts_unchecked(Arc::clone(&self.group), Arc::clone(&self.right), image)
    }
}

pub fn direct_product(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> DirectProduct {
    let (m, n) = (g.order(), h.order());
    let size = m * n;
    let mut table = vec![0; size * size];
    for x in 0..size {
        let (a, b) = (x / n, x % n);
        for y in 0..size {
            let (c, d) = (y / n, y % n);
            table[x * size + y] = g.mul(a, c) * n + h.mul(b, d);
        }
    }
    let labels = (0..size)
        .map(|x| format!("({},{})", g.label(x / n), h.label(x % n)))
        .collect();
    let group = Arc::new(FiniteGroup::from_parts(labels, table));
    let inl = GroupHom::from_parts_unchecked(
        Arc::clone(g),
        Arc::clone(&group),
        (0..m).map(|a| a * n).collect(),
    );
    let inr = GroupHom::from_parts_unchecked(Arc::clone(h), Arc::clone(&group), (0..n).collect());
    DirectProduct {
        group,
        left: Arc::clone(g),
        right: Arc::clone(h),
        inl,
        inr,
    }
}

/// The pullback `G1 ×_Q G2` with its coordinate projections.
#[derive(Debug, Clone)]
pub struct FibreProduct {
    pub group: Arc<FiniteGroup>,
    pub theta1: GroupHom,
    pub theta2: GroupHom,
    /// Element `i` of the fibre product is the pair `pairs[i]`.
    pub pairs: Vec<(usize, usize)>,
}

/// `{ (g, h) : pi1(g) = phi(pi2(h)) }` for surjections `pi1: G1 → Q1`,
/// `pi2: G2 → Q2` and an isomorphism `phi: Q2 → Q1`.
pub fn fibre_product(pi1: &GroupHom, pi2: &GroupHom, phi: &GroupHom) -> Result<FibreProduct, GroupError> {
    for pi in [pi1, pi2] {
        if let Some(missing) = pi.missing_from_image() {
            return Err(GroupError::NotSurjective(pi.target().label(missing).to_string()));
        }
    }
    if **phi.source() != **pi2.target() || **phi.target() != **pi1.target() {
        return Err(GroupError::Mismatch(
            "phi must map the quotient of G2 to the quotient of G1".into(),
        ));
    }
    if !phi.is_isomorphism() {
        return Err(GroupError::NotIsomorphism);
    }
    let product = direct_product(pi1.source(), pi2.source());
    let members: Vec<usize> = (0..product.group.order())
        .filter(|&x| {
            let (g, h) = product.split(x);
            pi1.apply(g) == phi.apply(pi2.apply(h))
        })
        .collect();
    let sub = Subgroup::new(Arc::clone(&product.group), members)?;
    let (group, inclusion) = sub.induced_group();
    let pairs: Vec<(usize, usize)> = inclusion.image_map().iter().map(|&x| product.split(x)).collect();
    let theta1 = GroupHom::from_parts_unchecked(
        Arc::clone(&group),
        Arc::clone(pi1.source()),
        pairs.iter().map(|p| p.0).collect(),
    );
    let theta2 = GroupHom::from_parts_unchecked(
        Arc::clone(&group),
        Arc::clone(pi2.source()),
        pairs.iter().map(|p| p.1).collect(),
    );
    Ok(FibreProduct { group, theta1, theta2, pairs })
}

/// Number of elements of each order in `Z_{d1} × ... × Z_{dk}`.
fn cyclic_product_order_counts(factors: &[usize]) -> BTreeMap<usize, usize> {
    let total: usize = factors.iter().product();
    let mut counts = BTreeMap::new();
    for mut x in 0..total {
        let mut order = 1usize;
        for &d in factors.iter().rev() {
            let digit = x % d;
            x /= d;
            order = order.lcm(&(d / digit.gcd(&d)));
        }
        *counts.entry(order).or_insert(0) += 1;
    }
    counts
}

fn group_order_counts(g: &FiniteGroup) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for x in 0..g.order() {
        *counts.entry(g.element_order(x)).or_insert(0) += 1;
    }
    counts
}

/// All chains `d1 | d2 | ... | dk` with every `di ≥ 2` and product `n`.
fn invariant_factor_candidates(n: usize) -> Vec<Vec<usize>> {
    fn extend(remaining: usize, last: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 1 {
            out.push(prefix.clone());
            return;
        }
        // next factor is a multiple of `last` dividing what is left
        let mut d = last;
        while d <= remaining {
            if remaining % d == 0 && d >= 2 {
                let rest = remaining / d;
                // every later factor is a multiple of d, so d must divide rest
                // unless d is the final factor
                if rest == 1 || rest % d == 0 {
                    prefix.push(d);
                    extend(rest, d, prefix, out);
                    prefix.pop();
                }
            }
            d += last;
        }
    }
    let mut out = Vec::new();
    extend(n, 1, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors `d1 | d2 | ... | dk` of an abelian group.
///
/// Each candidate chain is enumerated and compared against `g` by the number
/// of elements of every order; for finite abelian groups these counts are a
/// complete isomorphism invariant, so exactly one candidate matches.
pub fn abelian_invariants(g: &FiniteGroup) -> Result<Vec<usize>, GroupError> {
    g.require_abelian()?;
    let target = group_order_counts(g);
    let matches: Vec<Vec<usize>> = invariant_factor_candidates(g.order())
        .into_iter()
        .filter(|c| cyclic_product_order_counts(c) == target)
        .collect();
    debug_assert_eq!(matches.len(), 1);
    matches
        .into_iter()
        .next()
        .ok_or_else(|| GroupError::Mismatch("no invariant-factor decomposition matched".into()))
}
