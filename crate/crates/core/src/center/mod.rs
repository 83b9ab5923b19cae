//! The Drinfeld center `Z(Rep(G)) ≅ Z(Vec_G)`.
//!
//! Objects are `G`-equivariant vector bundles over `G`. The center splits
//! into components `C_a`, one per conjugacy class, whose simples are pairs
//! (class of `a`, irreducible representation of `Z(a)`).

mod bundle;
mod degrees;

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

pub use bundle::{
    induce_center_object, induce_with_transversal, linear_characters, minimal_transversal, validate_bundle,
    BundleVerdict, EquivariantBundle, LinearCharacter,
};
pub use degrees::{irrep_degrees, DEFAULT_SEED, DEGREE_TOLERANCE, MAX_ATTEMPTS};

use crate::group::{fibre_product, ConjClass, FiniteGroup, GroupError, GroupHom, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CenterError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("degree recovery failed: {0}")]
    DegreeRecoveryFailed(String),
    #[error("not a linear character: {0}")]
    NotCharacter(String),
    #[error("transversal does not conjugate the base point to {0}")]
    BadTransversal(String),
    #[error("support is not closed under conjugation at {0}")]
    SupportNotClosed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentRole {
    /// The component of the identity class, a copy of `Rep(G)`.
    RepG,
    /// Part of the remainder `R` in `Z(C) ≃ C̃ ⊕ R`.
    Remainder,
}

#[derive(Debug, Clone)]
pub struct CenterComponent {
    pub class: ConjClass,
    pub centralizer: Subgroup,
    pub num_simples: usize,
    pub fpdim: u64,
    pub role: ComponentRole,
}

/// One component per conjugacy class, ordered by representative.
pub fn decompose_center(g: &Arc<FiniteGroup>) -> Vec<CenterComponent> {
    g.conjugacy_classes()
        .iter()
        .map(|class| {
            let centralizer = g
                .centralizer(class.representative)
                .expect("representative is a valid index");
            let (z, _) = centralizer.induced_group();
            let size = class.size() as u64;
            CenterComponent {
                class: class.clone(),
                num_simples: z.conjugacy_classes().len(),
                fpdim: size * size * centralizer.order() as u64,
                role: if class.representative == 0 {
                    ComponentRole::RepG
                } else {
                    ComponentRole::Remainder
                },
                centralizer,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CenterSimple {
    pub class_index: usize,
    pub representative: usize,
    pub class_size: usize,
    pub irrep_degree: u64,
    /// Position of the irreducible representation in the ascending degree
    /// list of the centralizer.
    pub irrep_label: usize,
    pub fpdim: u64,
}

pub fn simple_objects(g: &Arc<FiniteGroup>, seed: u64) -> Result<Vec<CenterSimple>, CenterError> {
    let mut out = Vec::new();
    for (class_index, class) in g.conjugacy_classes().iter().enumerate() {
        let (z, _) = g.centralizer(class.representative)?.induced_group();
        for (irrep_label, d) in irrep_degrees(&z, seed)?.into_iter().enumerate() {
            out.push(CenterSimple {
                class_index,
                representative: class.representative,
                class_size: class.size(),
                irrep_degree: d,
                irrep_label,
                fpdim: class.size() as u64 * d,
            });
        }
    }
    Ok(out)
}

/// Graded dimensions `x ↦ dim V_x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<u64>);

impl DimVector {
    pub fn zero(g: &FiniteGroup) -> DimVector {
        DimVector(vec![0; g.order()])
    }

    /// `dim` on every element of the class of `a`, zero elsewhere.
    pub fn class_indicator(g: &FiniteGroup, a: usize, dim: u64) -> DimVector {
        let mut v = DimVector::zero(g);
        for &x in &g.conjugacy_classes()[g.class_index(a)].members {
            v.0[x] = dim;
        }
        v
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_class_constant(&self, g: &FiniteGroup) -> bool {
        g.conjugacy_classes()
            .iter()
            .all(|c| c.members.iter().all(|&x| self.0[x] == self.0[c.representative]))
    }
}

/// `result(g) = Σ_{xy = g} A(x) B(y)`.
pub fn graded_convolution(a: &DimVector, b: &DimVector, g: &FiniteGroup) -> Result<DimVector, GroupError> {
    let n = g.order();
    if a.0.len() != n || b.0.len() != n {
        return Err(GroupError::Mismatch(format!(
            "dimension vectors of length {} and {} over a group of order {n}",
            a.0.len(),
            b.0.len()
        )));
    }
    let mut out = vec![0u64; n];
    for (x, &ax) in a.0.iter().enumerate().filter(|(_, &v)| v != 0) {
        for (y, &by) in b.0.iter().enumerate().filter(|(_, &v)| v != 0) {
            out[g.mul(x, y)] += ax * by;
        }
    }
    Ok(DimVector(out))
}

/// Multiplicities of `C_r` in `C_a ⊠ C_b`, read off from graded dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentProduct {
    /// Indexed by class position.
    pub multiplicities: Vec<u64>,
    pub graded_dimension_conserved: bool,
}

impl ComponentProduct {
    /// `(representative, multiplicity)` with zeros omitted.
    pub fn nonzero_terms(&self, g: &FiniteGroup) -> Vec<(usize, u64)> {
        self.multiplicities
            .iter()
            .zip(g.conjugacy_classes())
            .filter(|(&m, _)| m != 0)
            .map(|(&m, c)| (c.representative, m))
            .collect()
    }
}

pub fn component_product_via_convolution(
    g: &FiniteGroup,
    a: usize,
    b: usize,
    dim_v: u64,
    dim_w: u64,
) -> Result<ComponentProduct, GroupError> {
    g.check_index(a)?;
    g.check_index(b)?;
    if dim_v == 0 || dim_w == 0 {
        return Err(GroupError::Mismatch("fiber dimensions must be positive".into()));
    }
    let va = DimVector::class_indicator(g, a, dim_v);
    let vb = DimVector::class_indicator(g, b, dim_w);
    let product = graded_convolution(&va, &vb, g)?;
    assert!(product.is_class_constant(g), "convolution of class functions is a class function");
    let unit = dim_v * dim_w;
    let multiplicities: Vec<u64> = g
        .conjugacy_classes()
        .iter()
        .map(|c| {
            let value = product.0[c.representative];
            assert_eq!(value % unit, 0);
            value / unit
        })
        .collect();
    let graded: u64 = multiplicities
        .iter()
        .zip(g.conjugacy_classes())
        .map(|(&m, c)| m * c.size() as u64 * unit)
        .sum();
    Ok(ComponentProduct {
        graded_dimension_conserved: graded == va.total() * vb.total(),
        multiplicities,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibreFpdimCheck {
    pub fibre_order: u64,
    pub left_order: u64,
    pub right_order: u64,
    pub base_order: u64,
    /// `FPdim(Rep(G1 ×_G G2))` as the sum of squared irreducible degrees.
    pub rep_fpdim: u64,
    /// `FPdim(I(1)) = FPdim(Rep(G)) = |G|`, again from degrees.
    pub i_of_unit_fpdim: u64,
    pub identity_holds: bool,
}

pub fn rep_fibre_fpdim_check(
    pi1: &GroupHom,
    pi2: &GroupHom,
    phi: &GroupHom,
    seed: u64,
) -> Result<FibreFpdimCheck, CenterError> {
    let fibre = fibre_product(pi1, pi2, phi)?;
    let rep_fpdim: u64 = irrep_degrees(&fibre.group, seed)?.iter().map(|d| d * d).sum();
    let base = pi1.target();
    let i_of_unit_fpdim: u64 = irrep_degrees(base, seed)?.iter().map(|d| d * d).sum();
    let (left_order, right_order) = (pi1.source().order() as u64, pi2.source().order() as u64);
    let fibre_order = fibre.group.order() as u64;
    Ok(FibreFpdimCheck {
        fibre_order,
        left_order,
        right_order,
        base_order: base.order() as u64,
        rep_fpdim,
        i_of_unit_fpdim,
        identity_holds: fibre_order * base.order() as u64 == left_order * right_order
            && rep_fpdim == fibre_order
            && i_of_unit_fpdim == base.order() as u64,
    })
}
