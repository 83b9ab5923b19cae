//! Pointed braided fusion categories `C(G, q)`, represented entirely by
//! their pre-metric group.
//!
//! Every simple object is invertible, so Frobenius-Perron dimensions are
//! plain object counts and are computed as exact integers.

use std::sync::Arc;

use thiserror::Error;

use crate::group::{GroupError, GroupHom, Subgroup};
use crate::phase::Phase;
use crate::premetric::{
    antidiagonal, descend_form, product_premetric, reverse, BilinearWitness, Descent, DescentError,
    FormError, PreMetricEmbedding, PreMetricGroup,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointedError {
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Descent(#[from] DescentError),
    #[error("image of the common subcategory is not in the Müger center of factor {factor}: b({g}, {x}) = {value}")]
    NotCentral {
        factor: u8,
        g: String,
        x: String,
        value: Phase,
        witness: BilinearWitness,
    },
}

impl From<GroupError> for PointedError {
    fn from(e: GroupError) -> Self {
        PointedError::Form(FormError::Group(e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedBraidedCategory {
    data: PreMetricGroup,
}

/// The double braiding `c_{Y,X} c_{X,Y}` on simples of degrees `g, h`, and
/// the twist of the simple of degree `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidingData {
    pub square: Phase,
    pub twist_g: Phase,
}

impl PointedBraidedCategory {
    pub fn new(data: PreMetricGroup) -> PointedBraidedCategory {
        PointedBraidedCategory { data }
    }

    pub fn data(&self) -> &PreMetricGroup {
        &self.data
    }

    pub fn fpdim(&self) -> u64 {
        self.data.order() as u64
    }

    pub fn is_symmetric(&self) -> bool {
        self.data.bilinear().is_zero()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.data.is_nondegenerate()
    }

    pub fn reverse(&self) -> PointedBraidedCategory {
        PointedBraidedCategory { data: reverse(&self.data) }
    }
}

pub fn braiding_data(c: &PointedBraidedCategory, g: usize, h: usize) -> Result<BraidingData, GroupError> {
    let group = c.data.group();
    group.check_index(g)?;
    group.check_index(h)?;
    Ok(BraidingData {
        square: c.data.bilinear().value(g, h),
        twist_g: c.data.q(g),
    })
}

/// The Müger center `C'` with its inclusion into `C`.
pub fn mueger_center_with_inclusion(c: &PointedBraidedCategory) -> (PointedBraidedCategory, GroupHom) {
    let rad = c.data.radical();
    let (data, inclusion) = c
        .data
        .restrict(&rad)
        .expect("restriction of a quadratic form is quadratic");
    (PointedBraidedCategory { data }, inclusion)
}

pub fn mueger_center(c: &PointedBraidedCategory) -> PointedBraidedCategory {
    mueger_center_with_inclusion(c).0
}

/// `C1 ⊠_D C2` realized as `C((G1 × G2)/G̃, p)`.
#[derive(Debug, Clone)]
pub struct RelativeTensor {
    pub category: PointedBraidedCategory,
    /// `(G1 × G2, q1 ⊕ q2)`.
    pub product: PreMetricGroup,
    /// `G̃ = { (iota1(x), -iota2(x)) }`.
    pub antidiagonal: Subgroup,
    pub descent: Descent,
}

fn check_central(embedding: &PreMetricEmbedding, factor: u8) -> Result<(), PointedError> {
    if let Some(witness) = embedding.centrality_witnesses().into_iter().next() {
        let target = embedding.target().group();
        return Err(PointedError::NotCentral {
            factor,
            g: target.label(witness.n).to_string(),
            x: target.label(witness.x).to_string(),
            value: witness.value,
            witness,
        });
    }
    Ok(())
}

/// Relative tensor product of `C1` and `C2` over the common pointed
/// subcategory `C(D)`, embedded by `iota1` and `iota2`.
///
/// Both images must lie in the respective Müger centers.
pub fn relative_tensor(
    c1: &PointedBraidedCategory,
    c2: &PointedBraidedCategory,
    d: &PreMetricGroup,
    iota1: &GroupHom,
    iota2: &GroupHom,
) -> Result<RelativeTensor, PointedError> {
    let e1 = PreMetricEmbedding::new(d, &c1.data, iota1.clone())?;
    let e2 = PreMetricEmbedding::new(d, &c2.data, iota2.clone())?;
    check_central(&e1, 1)?;
    check_central(&e2, 2)?;
    let product = product_premetric(&c1.data, &c2.data);
    let anti = antidiagonal(&e1, &e2)?;
    let descent = descend_form(&product, &anti)?;
    debug_assert_eq!(
        descent.premetric.order() * d.order(),
        c1.data.order() * c2.data.order()
    );
    Ok(RelativeTensor {
        category: PointedBraidedCategory { data: descent.premetric.clone() },
        product,
        antidiagonal: anti,
        descent,
    })
}

/// `C̃ = C ⊠_{C'} C^rev`.
pub fn tilde(c: &PointedBraidedCategory) -> RelativeTensor {
    let (center, inclusion) = mueger_center_with_inclusion(c);
    let rev = c.reverse();
    let into_rev = GroupHom::new(
        Arc::clone(inclusion.source()),
        Arc::clone(rev.data.group()),
        inclusion.image_map().to_vec(),
    )
    .expect("subgroup inclusion is a homomorphism");
    // 2q vanishes on the radical, so q = -q there and both embeddings are
    // form-preserving and central
    relative_tensor(c, &rev, &center.data, &inclusion, &into_rev)
        .expect("Müger center embeds centrally into C and C^rev")
}

/// Dimension bookkeeping for `Z(C) ≃ C̃ ⊕ R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpdimReport {
    pub fpdim_category: u64,
    pub fpdim_center: u64,
    pub fpdim_mueger: u64,
    pub fpdim_tilde: u64,
    /// `FPdim(Z(C)) - FPdim(C̃)`.
    pub fpdim_remainder: u64,
    /// `FPdim(C)² (1 - 1/FPdim(C'))`, evaluated as an exact fraction.
    pub remainder_formula: (u64, u64),
    pub nondegenerate: bool,
    /// `FPdim(Z(C)) = FPdim(C̃) FPdim(C')`.
    pub center_factorization_holds: bool,
    /// `FPdim(R)` agrees with the closed formula.
    pub remainder_formula_holds: bool,
    /// `FPdim(R) = 0` exactly when `C` is non-degenerate.
    pub remainder_vanishes_iff_nondegenerate: bool,
}

impl FpdimReport {
    pub fn all_hold(&self) -> bool {
        self.center_factorization_holds
            && self.remainder_formula_holds
            && self.remainder_vanishes_iff_nondegenerate
    }
}

fn reduced(num: u64, den: u64) -> (u64, u64) {
    use num_integer::Integer;
    let g = num.gcd(&den).max(1);
    (num / g, den / g)
}

pub fn center_fpdim_report(c: &PointedBraidedCategory) -> FpdimReport {
    let n = c.fpdim();
    let fpdim_center = n * n;
    let fpdim_mueger = mueger_center(c).fpdim();
    let fpdim_tilde = tilde(c).category.fpdim();
    let fpdim_remainder = fpdim_center - fpdim_tilde;
    // n²(1 - 1/r) = n²(r - 1)/r
    let remainder_formula = reduced(fpdim_center * (fpdim_mueger - 1), fpdim_mueger);
    let nondegenerate = fpdim_mueger == 1;
    FpdimReport {
        fpdim_category: n,
        fpdim_center,
        fpdim_mueger,
        fpdim_tilde,
        fpdim_remainder,
        remainder_formula,
        nondegenerate,
        center_factorization_holds: fpdim_center == fpdim_tilde * fpdim_mueger,
        remainder_formula_holds: remainder_formula == (fpdim_remainder, 1)
            || (fpdim_remainder == 0 && remainder_formula.0 == 0),
        remainder_vanishes_iff_nondegenerate: (fpdim_remainder == 0) == nondegenerate,
    }
}

/// `FPdim(C1 ⊠ C2) = FPdim(C1 ⊠_D C2) · FPdim(I(1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdjointCheck {
    /// Number of simple summands of `I B(1 ⊠ 1)`: the simples of the
    /// Deligne product sent to the unit.
    pub i_of_unit_fpdim: u64,
    pub relative_fpdim: u64,
    pub deligne_fpdim: u64,
    pub identity_holds: bool,
}

pub fn adjoint_fpdim_check(
    c1: &PointedBraidedCategory,
    c2: &PointedBraidedCategory,
    d: &PreMetricGroup,
    iota1: &GroupHom,
    iota2: &GroupHom,
) -> Result<AdjointCheck, PointedError> {
    let rel = relative_tensor(c1, c2, d, iota1, iota2)?;
    let i_of_unit_fpdim = rel.descent.quotient.projection.kernel().order() as u64;
    let relative_fpdim = rel.category.fpdim();
    let deligne_fpdim = c1.fpdim() * c2.fpdim();
    Ok(AdjointCheck {
        i_of_unit_fpdim,
        relative_fpdim,
        deligne_fpdim,
        identity_holds: deligne_fpdim == relative_fpdim * i_of_unit_fpdim,
    })
}
