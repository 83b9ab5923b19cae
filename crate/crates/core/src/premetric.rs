//! Pre-metric groups: finite abelian groups with a Q/Z-valued quadratic form.
//!
//! The group operation of an abelian group is written additively in the
//! docs (`g + h`, `-g`, `n·g`) even though it is stored as a table.

use std::sync::Arc;

use thiserror::Error;

use crate::group::{direct_product, quotient, FiniteGroup, GroupError, GroupHom, Quotient, Subgroup};
use crate::phase::Phase;

/// Witness lists in diagnostics are truncated to this many entries.
pub const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("form has {got} values but the group has order {expected}")]
    NotTotal { expected: usize, got: usize },
    #[error("q(identity) = {0}, expected 0")]
    NonzeroAtIdentity(Phase),
    #[error("q is not symmetric under inversion: q({g}) = {value} but q(-{g}) = {inverse_value}")]
    NotSymmetricUnderInversion {
        g: String,
        value: Phase,
        inverse_value: Phase,
    },
    #[error("associated form is not biadditive at ({g}, {g2}; {h})")]
    NotBiadditive { g: String, g2: String, h: String },
    #[error("embedding is not injective: {0} maps to the identity")]
    NotInjective(String),
    #[error("embedding does not preserve the form at {x}: q({x}) = {source_value} but q(iota({x})) = {target_value}")]
    FormNotPreserved {
        x: String,
        source_value: Phase,
        target_value: Phase,
    },
}

/// A quadratic form `q: G → Q/Z` on a finite abelian group, validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    group: Arc<FiniteGroup>,
    values: Vec<Phase>,
    bicharacter: Option<Vec<Phase>>,
}

/// The symmetric biadditive form `b(g, h) = q(g + h) - q(g) - q(h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    group: Arc<FiniteGroup>,
    values: Vec<Phase>,
}

/// A finite abelian group together with a quadratic form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreMetricGroup {
    form: QuadraticForm,
}

fn associated(group: &FiniteGroup, values: &[Phase], g: usize, h: usize) -> Phase {
    values[group.mul(g, h)] - values[g] - values[h]
}

/// Checks inversion symmetry and biadditivity of `b` exhaustively.
pub fn validate_form(group: &Arc<FiniteGroup>, values: Vec<Phase>) -> Result<QuadraticForm, FormError> {
    group.require_abelian()?;
    let n = group.order();
    if values.len() != n {
        return Err(FormError::NotTotal { expected: n, got: values.len() });
    }
    if !values[0].is_zero() {
        return Err(FormError::NonzeroAtIdentity(values[0]));
    }
    for g in 0..n {
        let inverse_value = values[group.inv(g)];
        if values[g] != inverse_value {
            return Err(FormError::NotSymmetricUnderInversion {
                g: group.label(g).to_string(),
                value: values[g],
                inverse_value,
            });
        }
    }
    let b: Vec<Phase> = (0..n * n)
        .map(|k| associated(group, &values, k / n, k % n))
        .collect();
    for g in 0..n {
        for g2 in 0..n {
            let sum = group.mul(g, g2);
            for h in 0..n {
                if b[sum * n + h] != b[g * n + h] + b[g2 * n + h] {
                    return Err(FormError::NotBiadditive {
                        g: group.label(g).to_string(),
                        g2: group.label(g2).to_string(),
                        h: group.label(h).to_string(),
                    });
                }
            }
        }
    }
    Ok(QuadraticForm {
        group: Arc::clone(group),
        values,
        bicharacter: None,
    })
}

impl QuadraticForm {
    /// Validates `q(g) = f(g)` for every element index `g`.
    pub fn from_fn(group: &Arc<FiniteGroup>, f: impl Fn(usize) -> Phase) -> Result<QuadraticForm, FormError> {
        validate_form(group, (0..group.order()).map(f).collect())
    }

    /// The zero form on `group`.
    pub fn zero(group: &Arc<FiniteGroup>) -> Result<QuadraticForm, FormError> {
        QuadraticForm::from_fn(group, |_| Phase::ZERO)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Phase] {
        &self.values
    }

    #[inline]
    pub fn value(&self, g: usize) -> Phase {
        self.values[g]
    }

    /// Attaches an (unvalidated) bicharacter `β` with `β(g, h)` stored at
    /// `g·|G| + h`. Kept for reference only; nothing reads it back.
    pub fn with_bicharacter(mut self, beta: Vec<Phase>) -> QuadraticForm {
        self.bicharacter = Some(beta);
        self
    }

    pub fn bicharacter(&self) -> Option<&[Phase]> {
        self.bicharacter.as_deref()
    }

    pub fn bilinear(&self) -> BilinearForm {
        bilinear_form(self)
    }
}

pub fn bilinear_form(q: &QuadraticForm) -> BilinearForm {
    let n = q.group.order();
    let values = (0..n * n)
        .map(|k| associated(&q.group, &q.values, k / n, k % n))
        .collect();
    BilinearForm { group: Arc::clone(&q.group), values }
}

impl BilinearForm {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    #[inline]
    pub fn value(&self, g: usize, h: usize) -> Phase {
        self.values[g * self.group.order() + h]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

/// `{ g : b(g, h) = 0 for all h }`.
pub fn radical(q: &QuadraticForm) -> Subgroup {
    let b = bilinear_form(q);
    let n = q.group.order();
    let members = (0..n).filter(|&g| (0..n).all(|h| b.value(g, h).is_zero())).collect();
    Subgroup::new(Arc::clone(&q.group), members).expect("radical of a biadditive form is a subgroup")
}

impl PreMetricGroup {
    pub fn new(group: &Arc<FiniteGroup>, values: Vec<Phase>) -> Result<PreMetricGroup, FormError> {
        Ok(PreMetricGroup { form: validate_form(group, values)? })
    }

    pub fn from_form(form: QuadraticForm) -> PreMetricGroup {
        PreMetricGroup { form }
    }

    /// The trivial group with its only form.
    pub fn trivial() -> PreMetricGroup {
        let group = Arc::new(FiniteGroup::from_parts(vec!["0".into()], vec![0]));
        PreMetricGroup::new(&group, vec![Phase::ZERO]).expect("trivial form")
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.form.group
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn order(&self) -> usize {
        self.form.group.order()
    }

    #[inline]
    pub fn q(&self, g: usize) -> Phase {
        self.form.values[g]
    }

    pub fn bilinear(&self) -> BilinearForm {
        bilinear_form(&self.form)
    }

    pub fn radical(&self) -> Subgroup {
        radical(&self.form)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical().order() == 1
    }

    /// The form restricted to a subgroup, with the inclusion map.
    pub fn restrict(&self, sub: &Subgroup) -> Result<(PreMetricGroup, GroupHom), FormError> {
        if **sub.parent() != **self.group() {
            return Err(GroupError::Mismatch("subgroup of a different group".into()).into());
        }
        let (group, inclusion) = sub.induced_group();
        let values = sub.members().iter().map(|&m| self.q(m)).collect();
        Ok((PreMetricGroup::new(&group, values)?, inclusion))
    }
}

/// `(G1 × G2, p)` with `p(g, h) = q1(g) + q2(h)`.
pub fn product_premetric(m1: &PreMetricGroup, m2: &PreMetricGroup) -> PreMetricGroup {
    let product = direct_product(m1.group(), m2.group());
    let values = (0..product.group.order())
        .map(|x| {
            let (g, h) = product.split(x);
            m1.q(g) + m2.q(h)
        })
        .collect();
    PreMetricGroup::new(&product.group, values).expect("orthogonal sum of quadratic forms is quadratic")
}

/// `(G, -q)`.
pub fn reverse(m: &PreMetricGroup) -> PreMetricGroup {
    let values = m.form.values.iter().map(|&v| -v).collect();
    PreMetricGroup::new(m.group(), values).expect("negated quadratic form is quadratic")
}

/// An injective morphism of pre-metric groups, `q_target ∘ iota = q_source`.
#[derive(Debug, Clone)]
pub struct PreMetricEmbedding {
    source: PreMetricGroup,
    target: PreMetricGroup,
    hom: GroupHom,
}

impl PreMetricEmbedding {
    pub fn new(source: &PreMetricGroup, target: &PreMetricGroup, hom: GroupHom) -> Result<Self, FormError> {
        if **hom.source() != **source.group() || **hom.target() != **target.group() {
            return Err(GroupError::Mismatch(
                "embedding map does not run between the given pre-metric groups".into(),
            )
            .into());
        }
        if let Some(x) = (1..source.order()).find(|&x| hom.apply(x) == 0) {
            return Err(FormError::NotInjective(source.group().label(x).to_string()));
        }
        if let Some(x) = (0..source.order()).find(|&x| target.q(hom.apply(x)) != source.q(x)) {
            return Err(FormError::FormNotPreserved {
                x: source.group().label(x).to_string(),
                source_value: source.q(x),
                target_value: target.q(hom.apply(x)),
            });
        }
        Ok(PreMetricEmbedding {
            source: source.clone(),
            target: target.clone(),
            hom,
        })
    }

    pub fn source(&self) -> &PreMetricGroup {
        &self.source
    }

    pub fn target(&self) -> &PreMetricGroup {
        &self.target
    }

    pub fn hom(&self) -> &GroupHom {
        &self.hom
    }

    /// Witnesses `(g, x, b(iota(g), x))` with nonzero pairing, i.e. where the
    /// image fails to lie in the radical of the target form.
    pub fn centrality_witnesses(&self) -> Vec<BilinearWitness> {
        let b = self.target.bilinear();
        let mut out = Vec::new();
        for g in 0..self.source.order() {
            let image = self.hom.apply(g);
            for x in 0..self.target.order() {
                let value = b.value(image, x);
                if !value.is_zero() {
                    out.push(BilinearWitness { n: image, x, value });
                }
            }
        }
        out
    }
}

/// `{ (iota1(x), -iota2(x)) : x ∈ G }` inside `G1 × G2`.
///
/// The parent of the returned subgroup is the group of
/// [`product_premetric`]`(iota1.target(), iota2.target())`.
pub fn antidiagonal(iota1: &PreMetricEmbedding, iota2: &PreMetricEmbedding) -> Result<Subgroup, FormError> {
    if iota1.source != iota2.source {
        return Err(GroupError::Mismatch("embeddings have different domains".into()).into());
    }
    let product = direct_product(iota1.target.group(), iota2.target.group());
    let g2 = iota2.target.group();
    let members = (0..iota1.source.order())
        .map(|x| product.pair(iota1.hom.apply(x), g2.inv(iota2.hom.apply(x))))
        .collect();
    Ok(Subgroup::new(Arc::clone(&product.group), members)?)
}

/// A pair `(n, x)` with `b(n, x) = value ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BilinearWitness {
    pub n: usize,
    pub x: usize,
    pub value: Phase,
}

/// The necessary condition for descent: `b(n, x) = 0` for all `n ∈ N` and
/// all `x`, and `q(n) = 0` on `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentDiagnostics {
    /// First few pairs with `b(n, x) ≠ 0`.
    pub bilinear_witnesses: Vec<BilinearWitness>,
    pub bilinear_violations: usize,
    /// Elements `n ∈ N` with `q(n) ≠ 0`.
    pub nonzero_on_subgroup: Vec<(usize, Phase)>,
}

impl DescentDiagnostics {
    fn compute(m: &PreMetricGroup, n: &Subgroup) -> DescentDiagnostics {
        let b = m.bilinear();
        let mut bilinear_witnesses = Vec::new();
        let mut bilinear_violations = 0;
        for &k in n.members() {
            for x in 0..m.order() {
                let value = b.value(k, x);
                if !value.is_zero() {
                    bilinear_violations += 1;
                    if bilinear_witnesses.len() < MAX_WITNESSES {
                        bilinear_witnesses.push(BilinearWitness { n: k, x, value });
                    }
                }
            }
        }
        let nonzero_on_subgroup = n
            .members()
            .iter()
            .filter(|&&k| !m.q(k).is_zero())
            .map(|&k| (k, m.q(k)))
            .collect();
        DescentDiagnostics {
            bilinear_witnesses,
            bilinear_violations,
            nonzero_on_subgroup,
        }
    }

    pub fn holds(&self) -> bool {
        self.bilinear_violations == 0 && self.nonzero_on_subgroup.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescentError {
    #[error(transparent)]
    Form(#[from] FormError),
    #[error("form is not constant on coset {coset:?}: q[{first}] = {first_value}, q[{second}] = {second_value}")]
    NotConstantOnCosets {
        /// Parent indices of the offending coset.
        coset: Vec<usize>,
        first: usize,
        first_value: Phase,
        second: usize,
        second_value: Phase,
        diagnostics: DescentDiagnostics,
    },
}

impl From<GroupError> for DescentError {
    fn from(e: GroupError) -> Self {
        DescentError::Form(FormError::Group(e))
    }
}

/// Result of pushing a form down to `G/N`.
#[derive(Debug, Clone)]
pub struct Descent {
    pub premetric: PreMetricGroup,
    pub quotient: Quotient,
    pub diagnostics: DescentDiagnostics,
}

/// Pushes `q` down to `G/N`, checking coset constancy directly.
pub fn descend_form(m: &PreMetricGroup, n: &Subgroup) -> Result<Descent, DescentError> {
    let q = quotient(m.group(), n)?;
    for coset in &q.cosets {
        let first = coset[0];
        if let Some(&second) = coset.iter().find(|&&y| m.q(y) != m.q(first)) {
            return Err(DescentError::NotConstantOnCosets {
                coset: coset.clone(),
                first,
                first_value: m.q(first),
                second,
                second_value: m.q(second),
                diagnostics: DescentDiagnostics::compute(m, n),
            });
        }
    }
    let values = q.cosets.iter().map(|c| m.q(c[0])).collect();
    let premetric = PreMetricGroup::new(&q.group, values)?;
    Ok(Descent {
        premetric,
        quotient: q,
        diagnostics: DescentDiagnostics::compute(m, n),
    })
}
