//! Built-in test corpus: small groups, quadratic forms, and the worked
//! pre-metric instances used by the verification suite.

use std::sync::Arc;

use crate::group::{build_group, BuildOptions, Family, FiniteGroup, GroupHom, GroupSpec};
use crate::phase::Phase;
use crate::pointed::PointedBraidedCategory;
use crate::premetric::PreMetricGroup;

fn build(spec: GroupSpec) -> Arc<FiniteGroup> {
    Arc::new(build_group(&spec, &BuildOptions::default()).expect("corpus groups are valid"))
}

fn named(family: Family, parameter: usize) -> Arc<FiniteGroup> {
    build(GroupSpec::Named { family, parameter })
}

fn abelian(orders: &[usize]) -> Arc<FiniteGroup> {
    build(GroupSpec::Abelian { orders: orders.to_vec() })
}

/// `Z1, Z2, Z4, Z2×Z2, Z6, S3, D4, Q8, A4, S4`.
pub fn corpus_groups() -> Vec<(&'static str, Arc<FiniteGroup>)> {
    vec![
        ("Z1", abelian(&[1])),
        ("Z2", abelian(&[2])),
        ("Z4", abelian(&[4])),
        ("Z2xZ2", abelian(&[2, 2])),
        ("Z6", abelian(&[6])),
        ("S3", named(Family::Symmetric, 3)),
        ("D4", named(Family::Dihedral, 4)),
        ("Q8", named(Family::Quaternion, 8)),
        ("A4", named(Family::Alternating, 4)),
        ("S4", named(Family::Symmetric, 4)),
    ]
}

/// Looks up a corpus group by name.
pub fn corpus_group(name: &str) -> Option<Arc<FiniteGroup>> {
    corpus_groups().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}

fn form(group: &Arc<FiniteGroup>, f: impl Fn(&[i64]) -> Phase) -> PreMetricGroup {
    // abelian labels are "k" or "(a,b,...)"
    let values = group
        .labels()
        .iter()
        .map(|label| {
            let coords: Vec<i64> = label
                .trim_matches(|c| c == '(' || c == ')')
                .split(',')
                .map(|s| s.parse().expect("abelian label"))
                .collect();
            f(&coords)
        })
        .collect();
    PreMetricGroup::new(group, values).expect("corpus forms are valid")
}

/// Quadratic forms covering non-degenerate, degenerate and symmetric cases.
pub fn corpus_forms() -> Vec<(&'static str, PreMetricGroup)> {
    let z1 = abelian(&[1]);
    let z2 = abelian(&[2]);
    let z3 = abelian(&[3]);
    let z4 = abelian(&[4]);
    let z6 = abelian(&[6]);
    let v = abelian(&[2, 2]);
    vec![
        ("Z1: 0", form(&z1, |_| Phase::ZERO)),
        ("Z2: x^2/4", form(&z2, |x| Phase::new(x[0] * x[0], 4))),
        ("Z2: x/2", form(&z2, |x| Phase::new(x[0], 2))),
        ("Z2: 0", form(&z2, |_| Phase::ZERO)),
        ("Z3: x^2/3", form(&z3, |x| Phase::new(x[0] * x[0], 3))),
        ("Z4: x^2/8", form(&z4, |x| Phase::new(x[0] * x[0], 8))),
        ("Z4: -x^2/8", form(&z4, |x| Phase::new(-x[0] * x[0], 8))),
        ("Z4: x^2/4", form(&z4, |x| Phase::new(x[0] * x[0], 4))),
        ("Z6: x^2/12", form(&z6, |x| Phase::new(x[0] * x[0], 12))),
        ("Z2xZ2: a/2", form(&v, |x| Phase::new(x[0], 2))),
        ("Z2xZ2: 0", form(&v, |_| Phase::ZERO)),
        ("Z2xZ2: ab/2", form(&v, |x| Phase::new(x[0] * x[1], 2))),
        (
            "Z2xZ2: (a^2+ab+b^2)/2",
            form(&v, |x| Phase::new(x[0] * x[0] + x[0] * x[1] + x[1] * x[1], 2)),
        ),
    ]
}

/// Data for a relative tensor product `C1 ⊠_D C2`.
#[derive(Debug, Clone)]
pub struct TensorInstance {
    pub c1: PointedBraidedCategory,
    pub c2: PointedBraidedCategory,
    pub d: PreMetricGroup,
    pub iota1: GroupHom,
    pub iota2: GroupHom,
}

/// `C(Z2×Z2, a/2)` tensored with itself over `(Z2, 1/2)` embedded in the
/// first coordinate.
pub fn klein_tensor_instance() -> TensorInstance {
    let v = abelian(&[2, 2]);
    let c = PointedBraidedCategory::new(form(&v, |x| Phase::new(x[0], 2)));
    let z2 = abelian(&[2]);
    let d = form(&z2, |x| Phase::new(x[0], 2));
    let first = v.index_of("(1,0)").expect("label exists");
    let iota = GroupHom::new(Arc::clone(&z2), Arc::clone(&v), vec![0, first]).expect("homomorphism");
    TensorInstance {
        c1: c.clone(),
        c2: c,
        d,
        iota1: iota.clone(),
        iota2: iota,
    }
}

/// `(Z4, x²/8)` on both sides, glued along `2Z4 ≅ (Z2, 1/2)`. The image is
/// not in the radical, so the form does not descend.
pub fn z4_failing_instance() -> TensorInstance {
    let z4 = abelian(&[4]);
    let c = PointedBraidedCategory::new(form(&z4, |x| Phase::new(x[0] * x[0], 8)));
    let z2 = abelian(&[2]);
    let d = form(&z2, |x| Phase::new(x[0], 2));
    let iota = GroupHom::new(Arc::clone(&z2), Arc::clone(&z4), vec![0, 2]).expect("homomorphism");
    TensorInstance {
        c1: c.clone(),
        c2: c,
        d,
        iota1: iota.clone(),
        iota2: iota,
    }
}

/// Surjections `pi1: G1 → Q`, `pi2: G2 → Q` and `phi = id_Q`.
pub struct FibreInstance {
    pub name: &'static str,
    pub pi1: GroupHom,
    pub pi2: GroupHom,
    pub phi: GroupHom,
    pub expected_order: usize,
}

pub fn fibre_instances() -> Vec<FibreInstance> {
    let z4 = abelian(&[4]);
    let z2 = abelian(&[2]);
    let reduce = GroupHom::new(Arc::clone(&z4), Arc::clone(&z2), vec![0, 1, 0, 1]).expect("homomorphism");
    let s3 = named(Family::Symmetric, 3);
    let sign_image = (0..s3.order())
        .map(|g| usize::from(!s3.derived_subgroup().contains(g)))
        .collect();
    let sign = GroupHom::new(Arc::clone(&s3), Arc::clone(&z2), sign_image).expect("sign is a homomorphism");
    let z1 = abelian(&[1]);
    let s4 = named(Family::Symmetric, 4);
    vec![
        FibreInstance {
            name: "Z4 x_Z2 Z4",
            pi1: reduce.clone(),
            pi2: reduce,
            phi: GroupHom::identity(&z2),
            expected_order: 8,
        },
        FibreInstance {
            name: "S3 x_Z2 S3",
            pi1: sign.clone(),
            pi2: sign,
            phi: GroupHom::identity(&z2),
            expected_order: 18,
        },
        FibreInstance {
            name: "S3 x_1 S4",
            pi1: GroupHom::trivial(&s3, &z1),
            pi2: GroupHom::trivial(&s4, &z1),
            phi: GroupHom::identity(&z1),
            expected_order: 144,
        },
    ]
}
