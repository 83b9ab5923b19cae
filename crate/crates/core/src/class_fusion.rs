//! The class algebra of `ℤ[G]` and the fusion rules of the components
//! `C_a` of `Z(Rep(G))`.
//!
//! Two normalizations are kept side by side:
//!
//! * `pair_counts[a][b][s] = #{(x, y) ∈ ā × b̄ : xy ∈ s̄}`
//! * `coefficients[a][b][s] = pair_counts[a][b][s] / |s̄|`, the coefficient
//!   of the class sum `s̄` in the product of class sums `ā · b̄`.
//!
//! Fusion multiplicities use `coefficients`.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::group::{ConjClass, FiniteGroup};

type Table3 = Vec<Vec<Vec<u64>>>;

#[derive(Debug, Clone)]
pub struct ClassFusionRing {
    group: Arc<FiniteGroup>,
    classes: Vec<ConjClass>,
    pair_counts: Table3,
    coefficients: Table3,
}

impl ClassFusionRing {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn pair_counts(&self) -> &Table3 {
        &self.pair_counts
    }

    pub fn coefficients(&self) -> &Table3 {
        &self.coefficients
    }

    pub fn pair_count(&self, a: usize, b: usize, s: usize) -> u64 {
        self.pair_counts[a][b][s]
    }

    pub fn coefficient(&self, a: usize, b: usize, s: usize) -> u64 {
        self.coefficients[a][b][s]
    }

    /// Nonzero `(s, coefficient)` pairs of `ā · b̄`, by class index.
    pub fn product_terms(&self, a: usize, b: usize) -> Vec<(usize, u64)> {
        self.coefficients[a][b]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(s, &c)| (s, c))
            .collect()
    }
}

pub fn build_ring(g: &Arc<FiniteGroup>) -> ClassFusionRing {
    let classes = g.conjugacy_classes().to_vec();
    let k = classes.len();
    let mut pair_counts = vec![vec![vec![0u64; k]; k]; k];
    for (a, ca) in classes.iter().enumerate() {
        for (b, cb) in classes.iter().enumerate() {
            let row = &mut pair_counts[a][b];
            for &x in &ca.members {
                for &y in &cb.members {
                    row[g.class_index(g.mul(x, y))] += 1;
                }
            }
        }
    }
    let coefficients = pair_counts
        .iter()
        .map(|plane| {
            plane
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&classes)
                        .map(|(&count, cs)| {
                            let size = cs.size() as u64;
                            assert_eq!(count % size, 0, "pair count not divisible by class size");
                            count / size
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    ClassFusionRing {
        group: Arc::clone(g),
        classes,
        pair_counts,
        coefficients,
    }
}

/// Outcome of the exhaustive ring-axiom check. Each field holds the first
/// violating index tuple, if any.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RingAxiomReport {
    pub commutativity: Option<(usize, usize)>,
    pub associativity: Option<(usize, usize, usize, usize)>,
    pub unit: Option<usize>,
    pub divisibility: Option<(usize, usize, usize)>,
    pub conservation: Option<(usize, usize)>,
}

impl RingAxiomReport {
    pub fn all_pass(&self) -> bool {
        *self == RingAxiomReport::default()
    }
}

pub fn verify_ring_axioms(ring: &ClassFusionRing) -> RingAxiomReport {
    let k = ring.num_classes();
    let c = &ring.coefficients;
    let sizes: Vec<u64> = ring.classes.iter().map(|cl| cl.size() as u64).collect();
    let mut report = RingAxiomReport::default();

    'comm: for a in 0..k {
        for b in a + 1..k {
            if c[a][b] != c[b][a] {
                report.commutativity = Some((a, b));
                break 'comm;
            }
        }
    }

    let terms: Vec<Vec<Vec<(usize, u64)>>> = (0..k)
        .map(|a| (0..k).map(|b| ring.product_terms(a, b)).collect())
        .collect();
    'assoc: for a in 0..k {
        for b in 0..k {
            for cc in 0..k {
                // (ā b̄) c̄ versus ā (b̄ c̄), compared as full vectors over d
                let mut left = vec![0u64; k];
                for &(s, m) in &terms[a][b] {
                    for &(d, n) in &terms[s][cc] {
                        left[d] += m * n;
                    }
                }
                let mut right = vec![0u64; k];
                for &(s, m) in &terms[b][cc] {
                    for &(d, n) in &terms[a][s] {
                        right[d] += m * n;
                    }
                }
                if let Some(d) = (0..k).find(|&d| left[d] != right[d]) {
                    report.associativity = Some((a, b, cc, d));
                    break 'assoc;
                }
            }
        }
    }

    let identity = ring.group.class_index(0);
    report.unit = (0..k).find(|&b| {
        (0..k).any(|s| {
            let expected = u64::from(s == b);
            c[identity][b][s] != expected || c[b][identity][s] != expected
        })
    });

    'div: for a in 0..k {
        for b in 0..k {
            for s in 0..k {
                if ring.pair_counts[a][b][s] != c[a][b][s] * sizes[s] {
                    report.divisibility = Some((a, b, s));
                    break 'div;
                }
            }
        }
    }

    'cons: for a in 0..k {
        for b in 0..k {
            let graded: u64 = (0..k).map(|s| c[a][b][s] * sizes[s]).sum();
            let pairs: u64 = ring.pair_counts[a][b].iter().sum();
            if graded != sizes[a] * sizes[b] || pairs != graded {
                report.conservation = Some((a, b));
                break 'cons;
            }
        }
    }
    report
}

/// One cell `C_a ⊠ C_b` of the fusion table, with representatives given as
/// element indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FusionEntry {
    pub left: usize,
    pub right: usize,
    /// `(representative, coefficient)` with zero terms omitted.
    pub terms: Vec<(usize, u64)>,
    /// `(representative, pair count)` with zero terms omitted.
    pub pair_count_terms: Vec<(usize, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FusionTable {
    pub representatives: Vec<usize>,
    pub entries: Vec<Vec<FusionEntry>>,
}

pub fn fusion_table(ring: &ClassFusionRing) -> FusionTable {
    let reps: Vec<usize> = ring.classes.iter().map(|c| c.representative).collect();
    let k = reps.len();
    let entries = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| FusionEntry {
                    left: reps[a],
                    right: reps[b],
                    terms: ring.product_terms(a, b).into_iter().map(|(s, m)| (reps[s], m)).collect(),
                    pair_count_terms: ring.pair_counts[a][b]
                        .iter()
                        .enumerate()
                        .filter(|(_, &n)| n != 0)
                        .map(|(s, &n)| (reps[s], n))
                        .collect(),
                })
                .collect()
        })
        .collect();
    FusionTable {
        representatives: reps,
        entries,
    }
}

fn render_terms(g: &FiniteGroup, terms: &[(usize, u64)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|&(r, m)| {
            if m == 1 {
                format!("C[{}]", g.label(r))
            } else {
                format!("{m}·C[{}]", g.label(r))
            }
        })
        .collect::<Vec<_>>()
        .join(" ⊕ ")
}

impl FusionTable {
    /// Text rendering, one line per ordered pair of classes.
    pub fn render(&self, g: &FiniteGroup) -> String {
        let mut out = String::new();
        for row in &self.entries {
            for e in row {
                let _ = writeln!(
                    out,
                    "C[{}] ⊠ C[{}] = {}    (pair counts: {})",
                    g.label(e.left),
                    g.label(e.right),
                    render_terms(g, &e.terms),
                    e.pair_count_terms
                        .iter()
                        .map(|&(r, n)| format!("{}:{n}", g.label(r)))
                        .collect::<Vec<_>>()
                        .join(", ")
                );
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, BuildOptions, Family, GroupSpec};

    fn named(family: Family, parameter: usize) -> Arc<FiniteGroup> {
        Arc::new(build_group(&GroupSpec::Named { family, parameter }, &BuildOptions::default()).unwrap())
    }

    fn class_of_label(g: &FiniteGroup, label: &str) -> usize {
        g.class_index(g.index_of(label).unwrap())
    }

    #[test]
    fn s3_tables() {
        let g = named(Family::Symmetric, 3);
        let ring = build_ring(&g);
        let (e, t, c) = (0, class_of_label(&g, "(0 1)"), class_of_label(&g, "(0 1 2)"));
        assert_eq!(g.conjugacy_classes()[t].size(), 3);
        let mut counts = [0; 3];
        counts[e] = 3;
        counts[c] = 6;
        assert_eq!(ring.pair_counts()[t][t], counts.to_vec());
        assert_eq!(ring.coefficient(t, t, e), 3);
        assert_eq!(ring.coefficient(t, t, t), 0);
        assert_eq!(ring.coefficient(t, t, c), 3);
        assert_eq!(
            (ring.pair_count(c, c, e), ring.pair_count(c, c, t), ring.pair_count(c, c, c)),
            (2, 0, 2)
        );
        assert_eq!((ring.coefficient(c, c, e), ring.coefficient(c, c, c)), (2, 1));
        assert_eq!(ring.product_terms(t, c), vec![(t, 2)]);
        assert!(verify_ring_axioms(&ring).all_pass());
    }

    #[test]
    fn identity_is_unit_and_z2() {
        let z2 = named(Family::Cyclic, 2);
        let ring = build_ring(&z2);
        assert_eq!(ring.coefficients()[1][1], vec![1, 0]);
        for g in [named(Family::Quaternion, 8), named(Family::Alternating, 4)] {
            let ring = build_ring(&g);
            for b in 0..ring.num_classes() {
                assert_eq!(ring.product_terms(0, b), vec![(b, 1)]);
            }
        }
    }

    #[test]
    fn axioms_hold() {
        for g in [
            named(Family::Cyclic, 1),
            named(Family::Symmetric, 4),
            named(Family::Dihedral, 4),
            named(Family::Quaternion, 12),
        ] {
            assert!(verify_ring_axioms(&build_ring(&g)).all_pass());
        }
    }

    #[test]
    fn corrupted_ring_is_caught() {
        let g = named(Family::Symmetric, 3);
        let mut ring = build_ring(&g);
        ring.coefficients[1][2][1] += 1;
        let report = verify_ring_axioms(&ring);
        assert!(report.commutativity.is_some());
        assert!(report.divisibility.is_some());
        assert!(!report.all_pass());
    }

    #[test]
    fn abelian_ring_is_group_ring() {
        let g = named(Family::Cyclic, 6);
        let ring = build_ring(&g);
        for a in 0..6 {
            for b in 0..6 {
                for s in 0..6 {
                    let expected = u64::from(g.mul(a, b) == s);
                    assert_eq!(ring.coefficient(g.class_index(a), g.class_index(b), g.class_index(s)), expected);
                }
            }
        }
    }

    #[test]
    fn rendering() {
        let g = named(Family::Symmetric, 3);
        let text = fusion_table(&build_ring(&g)).render(&g);
        assert!(text.contains("C[(1 2)] ⊠ C[(1 2)] = 3·C[()] ⊕ 3·C[(0 1 2)]"), "{text}");
        assert!(text.contains("C[()] ⊠ C[(1 2)] = C[(1 2)]"), "{text}");
    }
}
