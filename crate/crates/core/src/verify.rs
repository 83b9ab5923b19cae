//! The invariant suite: every identity the library is meant to satisfy,
//! evaluated exhaustively and reported as named verdicts.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::center::{
    component_product_via_convolution, decompose_center, graded_convolution, induce_center_object, irrep_degrees,
    linear_characters, rep_fibre_fpdim_check, simple_objects, validate_bundle, DimVector,
};
use crate::class_fusion::{build_ring, verify_ring_axioms};
use crate::corpus::{corpus_forms, corpus_groups, fibre_instances, klein_tensor_instance, z4_failing_instance};
use crate::group::FiniteGroup;
use crate::phase::Phase;
use crate::pointed::{
    adjoint_fpdim_check, braiding_data, center_fpdim_report, mueger_center, relative_tensor, tilde,
    PointedBraidedCategory, PointedError,
};
use crate::premetric::{antidiagonal, descend_form, product_premetric, reverse, DescentError, PreMetricEmbedding, PreMetricGroup};

pub mod anchors {
    pub const CENTER_TOTAL: &str = "sum_a |class(a)|^2 |Z(a)| = |G|^2 = FPdim Z(Rep(G))";
    pub const COMPONENT: &str = "FPdim(C_a) = sum_rho |class(a)|^2 dim(rho)^2";
    pub const SIMPLES: &str = "FPdim(a, rho) = |class(a)| dim(rho)";
    pub const DEGREES: &str = "sum d^2 = |H|, #{d = 1} = |H/[H,H]|";
    pub const RING: &str = "class sums: commutative, associative, unital";
    pub const DIVISIBILITY: &str = "|s| divides #{(x,y) in a x b : xy in s}";
    pub const CONVOLUTION: &str = "C_a (x) C_b = sum_r N^ab_r C_r via graded dimensions";
    pub const CONVOLUTION_LAWS: &str = "graded convolution associative (commutative for abelian G)";
    pub const UNIT: &str = "C_e (x) C_b = C_b";
    pub const COCYCLE: &str = "pi_{gh,x} = pi_{g,x} + pi_{h,g^-1 x g}";
    pub const HOMOGENEOUS: &str = "q(n g) = n^2 q(g)";
    pub const DIAGONAL: &str = "b(g,g) = 2 q(g)";
    pub const RADICAL: &str = "q(radical) in {0, 1/2}";
    pub const BRAIDING: &str = "c_{Y,X} c_{X,Y} = b(g,h), theta = q";
    pub const REVERSE: &str = "(C^rev)^rev = C";
    pub const PRODUCT: &str = "rad(q1 + q2) = rad(q1) x rad(q2)";
    pub const MUEGER: &str = "(C')' = C'";
    pub const TILDE: &str = "FPdim(C~) = |G|^2 / |rad|";
    pub const CENTER_FACTOR: &str = "FPdim(Z(C)) = FPdim(C~) FPdim(C')";
    pub const REMAINDER: &str = "FPdim(R) = FPdim(C)^2 (1 - 1/FPdim(C'))";
    pub const NONDEGENERATE: &str = "C non-degenerate => Z(C) = C~, FPdim(R) = 0";
    pub const RELATIVE: &str = "FPdim(C1 (x)_D C2) = |G1||G2|/|G|";
    pub const ADJOINT: &str = "FPdim(C1 (x) C2) = FPdim(C1 (x)_D C2) FPdim(I(1))";
    pub const DESCENT: &str = "p descends => b(n, x) = 0 for n in G~";
    pub const FIBRE: &str = "FPdim(Rep(G1 x_G G2)) = |G1||G2|/|G|";
    pub const FORM_VALID: &str = "q(-g) = q(g), b biadditive";
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub subject: String,
    pub anchor: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Verdict {
    pub fn new(name: &str, subject: &str, anchor: &str, outcome: Result<(), String>) -> Verdict {
        Verdict {
            name: name.to_string(),
            subject: subject.to_string(),
            anchor: anchor.to_string(),
            pass: outcome.is_ok(),
            witness: outcome.err(),
        }
    }
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

/// All group-level invariants: center census, degrees, class fusion,
/// convolution and induced bundles.
pub fn verify_group(subject: &str, g: &Arc<FiniteGroup>, seed: u64) -> Vec<Verdict> {
    let mut out = Vec::new();
    let n = g.order() as u64;
    let mut push = |name: &str, anchor: &str, outcome: Result<(), String>| {
        out.push(Verdict::new(name, subject, anchor, outcome))
    };

    let components = decompose_center(g);
    let total: u64 = components.iter().map(|c| c.fpdim).sum();
    push(
        "center components sum to |G|^2",
        anchors::CENTER_TOTAL,
        ensure(total == n * n, || format!("total {total}, |G|^2 = {}", n * n)),
    );

    let mut component_outcome = Ok(());
    for c in &components {
        let (z, _) = c.centralizer.induced_group();
        let check = irrep_degrees(&z, seed).map_err(|e| e.to_string()).and_then(|degrees| {
            let sum: u64 = degrees.iter().map(|d| d * d).sum();
            let size = c.class.size() as u64;
            let by_simples: u64 = degrees.iter().map(|d| (size * d) * (size * d)).sum();
            ensure(
                degrees.len() == c.num_simples
                    && sum == c.centralizer.order() as u64
                    && by_simples == c.fpdim
                    && size * c.centralizer.order() as u64 == n,
                || format!("component of {}: degrees {degrees:?}, fpdim {}", g.label(c.class.representative), c.fpdim),
            )
        });
        if check.is_err() {
            component_outcome = check;
            break;
        }
    }
    push("component fpdims from centralizer irreps", anchors::COMPONENT, component_outcome);

    push(
        "simple objects square-sum to |G|^2",
        anchors::SIMPLES,
        simple_objects(g, seed).map_err(|e| e.to_string()).and_then(|simples| {
            let sq: u64 = simples.iter().map(|s| s.fpdim * s.fpdim).sum();
            ensure(
                sq == n * n && simples.iter().all(|s| s.fpdim == s.class_size as u64 * s.irrep_degree),
                || format!("sum of squares {sq}"),
            )
        }),
    );

    push(
        "irreducible degrees of G",
        anchors::DEGREES,
        irrep_degrees(g, seed).map(|_| ()).map_err(|e| e.to_string()),
    );

    let ring = build_ring(g);
    let report = verify_ring_axioms(&ring);
    push(
        "class fusion ring axioms",
        anchors::RING,
        ensure(
            report.commutativity.is_none() && report.associativity.is_none() && report.unit.is_none(),
            || format!("{report:?}"),
        ),
    );
    push(
        "pair counts divisible by target class size",
        anchors::DIVISIBILITY,
        ensure(report.divisibility.is_none() && report.conservation.is_none(), || format!("{report:?}")),
    );

    let k = ring.num_classes();
    let mut conv = Ok(());
    'pairs: for a in 0..k {
        for b in 0..k {
            let (ra, rb) = (ring.classes()[a].representative, ring.classes()[b].representative);
            match component_product_via_convolution(g, ra, rb, 1, 1) {
                Ok(p) if p.multiplicities == ring.coefficients()[a][b] && p.graded_dimension_conserved => {}
                other => {
                    conv = Err(format!("classes of {} and {}: {other:?}", g.label(ra), g.label(rb)));
                    break 'pairs;
                }
            }
        }
    }
    push("convolution multiplicities equal class coefficients", anchors::CONVOLUTION, conv);

    let unit = (0..k).try_for_each(|b| {
        let rb = ring.classes()[b].representative;
        let p = component_product_via_convolution(g, 0, rb, 2, 3).map_err(|e| e.to_string())?;
        ensure(p.nonzero_terms(g) == vec![(rb, 1)], || format!("C_e with class of {}", g.label(rb)))
    });
    push("identity component is the unit", anchors::UNIT, unit);

    push("graded convolution laws", anchors::CONVOLUTION_LAWS, convolution_laws(g, seed));

    let mut bundles = Ok(());
    let mut count = 0usize;
    'bundles: for class in g.conjugacy_classes() {
        let a = class.representative;
        let z = g.centralizer(a).expect("valid representative");
        for chi in linear_characters(&z) {
            count += 1;
            let verdict = induce_center_object(g, a, &chi).map(|b| validate_bundle(&b));
            match verdict {
                Ok(v) if v.passed() => {}
                other => {
                    bundles = Err(format!("class of {}: {other:?}", g.label(a)));
                    break 'bundles;
                }
            }
        }
    }
    if bundles.is_ok() && count == 0 {
        bundles = Err("no characters enumerated".into());
    }
    push("induced rank-one bundles satisfy the cocycle identity", anchors::COCYCLE, bundles);
    out
}

fn random_dims(g: &FiniteGroup, rng: &mut ChaCha8Rng) -> DimVector {
    DimVector((0..g.order()).map(|_| rng.random_range(0..4)).collect())
}

fn convolution_laws(g: &FiniteGroup, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..4 {
        let (a, b, c) = (random_dims(g, &mut rng), random_dims(g, &mut rng), random_dims(g, &mut rng));
        let conv = |x: &DimVector, y: &DimVector| graded_convolution(x, y, g).map_err(|e| e.to_string());
        let left = conv(&conv(&a, &b)?, &c)?;
        let right = conv(&a, &conv(&b, &c)?)?;
        ensure(left == right, || "convolution is not associative".into())?;
        if g.is_abelian() {
            ensure(conv(&a, &b)? == conv(&b, &a)?, || "convolution is not commutative".into())?;
        }
        ensure(conv(&a, &b)?.total() == a.total() * b.total(), || "total dimension not multiplicative".into())?;
    }
    Ok(())
}

/// All form-level invariants and the pointed FPdim identities.
pub fn verify_form(subject: &str, m: &PreMetricGroup) -> Vec<Verdict> {
    let mut out = Vec::new();
    let mut push = |name: &str, anchor: &str, outcome: Result<(), String>| {
        out.push(Verdict::new(name, subject, anchor, outcome))
    };
    let g = m.group();
    let n = m.order();
    let b = m.bilinear();
    let label = |x: usize| g.label(x).to_string();

    let homogeneous = (0..n).try_for_each(|x| {
        (0..g.element_order(x) as i64).try_for_each(|k| {
            ensure(m.q(g.pow(x, k)) == m.q(x).times(k * k), || format!("g = {}, n = {k}", label(x)))
        })
    });
    push("q is homogeneous of degree 2", anchors::HOMOGENEOUS, homogeneous);

    push(
        "b(g,g) = 2q(g)",
        anchors::DIAGONAL,
        (0..n).try_for_each(|x| ensure(b.value(x, x) == m.q(x).times(2), || label(x))),
    );

    let rad = m.radical();
    push(
        "q takes values 0 or 1/2 on the radical",
        anchors::RADICAL,
        rad.members().iter().try_for_each(|&x| {
            ensure(m.q(x) == Phase::ZERO || m.q(x) == Phase::HALF, || format!("q({}) = {}", label(x), m.q(x)))
        }),
    );

    let c = PointedBraidedCategory::new(m.clone());
    let braiding = (0..n).try_for_each(|x| {
        (0..n).try_for_each(|y| {
            let bxy = braiding_data(&c, x, y).map_err(|e| e.to_string())?;
            let byx = braiding_data(&c, y, x).map_err(|e| e.to_string())?;
            ensure(bxy.square == byx.square && bxy.twist_g == m.q(x), || format!("({}, {})", label(x), label(y)))?;
            (0..n).try_for_each(|z| {
                let lhs = braiding_data(&c, g.mul(x, y), z).map_err(|e| e.to_string())?.square;
                let rhs = bxy_plus(&c, x, y, z)?;
                ensure(lhs == rhs, || format!("biadditivity at ({}, {}; {})", label(x), label(y), label(z)))
            })
        })
    });
    push("double braiding symmetric and biadditive", anchors::BRAIDING, braiding);

    push(
        "reverse is an involution",
        anchors::REVERSE,
        ensure(reverse(&reverse(m)) == *m, || "reverse(reverse(q)) differs".into()),
    );

    let sq = product_premetric(m, m);
    let rad2 = sq.radical();
    let product_ok = rad2.order() == rad.order() * rad.order()
        && (0..sq.order()).all(|x| {
            let (l, r) = (x / n, x % n);
            rad2.contains(x) == (rad.contains(l) && rad.contains(r))
        });
    push(
        "radical of an orthogonal sum",
        anchors::PRODUCT,
        ensure(product_ok, || format!("|rad(q + q)| = {}, |rad q| = {}", rad2.order(), rad.order())),
    );

    let trivial = PreMetricGroup::trivial();
    push(
        "product with the trivial form",
        anchors::PRODUCT,
        ensure(product_premetric(m, &trivial).form().values() == m.form().values(), || {
            "values changed".into()
        }),
    );

    let center = mueger_center(&c);
    push(
        "Mueger center is idempotent and symmetric",
        anchors::MUEGER,
        ensure(mueger_center(&center).fpdim() == center.fpdim() && center.is_symmetric(), || {
            format!("fpdim {} then {}", center.fpdim(), mueger_center(&center).fpdim())
        }),
    );

    let (rad_n, nn) = (rad.order() as u64, n as u64);
    let t = tilde(&c);
    push(
        "FPdim of C~",
        anchors::TILDE,
        ensure(t.category.fpdim() * rad_n == nn * nn, || format!("FPdim(C~) = {}", t.category.fpdim())),
    );

    let report = center_fpdim_report(&c);
    push(
        "center factorization",
        anchors::CENTER_FACTOR,
        ensure(report.center_factorization_holds, || format!("{report:?}")),
    );
    push(
        "remainder dimension",
        anchors::REMAINDER,
        ensure(report.remainder_formula_holds, || format!("{report:?}")),
    );
    push(
        "remainder vanishes iff non-degenerate",
        anchors::NONDEGENERATE,
        ensure(report.remainder_vanishes_iff_nondegenerate, || format!("{report:?}")),
    );

    // C ⊠_{C'} C over the radical on both sides
    let (rad_m, inclusion) = m.restrict(&rad).expect("restriction to the radical is a form");
    let relative = relative_tensor(&c, &c, &rad_m, &inclusion, &inclusion)
        .map_err(|e| e.to_string())
        .and_then(|r| {
            ensure(r.category.fpdim() * rad_n == nn * nn, || format!("fpdim {}", r.category.fpdim()))
        });
    push("relative tensor over the Mueger center", anchors::RELATIVE, relative);
    out
}

fn bxy_plus(c: &PointedBraidedCategory, x: usize, y: usize, z: usize) -> Result<Phase, String> {
    let a = braiding_data(c, x, z).map_err(|e| e.to_string())?.square;
    let b = braiding_data(c, y, z).map_err(|e| e.to_string())?.square;
    Ok(a + b)
}

/// Verdict for a form record that failed validation.
pub fn form_not_valid(subject: &str, reason: &str) -> Verdict {
    Verdict::new("FormNotValid", subject, anchors::FORM_VALID, Err(reason.to_string()))
}

/// The worked relative tensor product, the failing descent and the fibre
/// products.
pub fn verify_worked_examples(seed: u64) -> Vec<Verdict> {
    let mut out = Vec::new();

    let k = klein_tensor_instance();
    let subject = "C(Z2xZ2, a/2) over (Z2, 1/2)";
    let rel = relative_tensor(&k.c1, &k.c2, &k.d, &k.iota1, &k.iota2);
    out.push(Verdict::new(
        "relative tensor dimension",
        subject,
        anchors::RELATIVE,
        match &rel {
            Ok(r) => ensure(r.category.fpdim() == 8, || format!("fpdim {}", r.category.fpdim())),
            Err(e) => Err(e.to_string()),
        },
    ));
    out.push(Verdict::new(
        "adjoint factorization",
        subject,
        anchors::ADJOINT,
        match adjoint_fpdim_check(&k.c1, &k.c2, &k.d, &k.iota1, &k.iota2) {
            Ok(a) => ensure(a.identity_holds && a.i_of_unit_fpdim == 2 && a.deligne_fpdim == 16, || {
                format!("{a:?}")
            }),
            Err(e) => Err(e.to_string()),
        },
    ));

    let f = z4_failing_instance();
    let subject = "C(Z4, x^2/8) over 2Z4";
    out.push(Verdict::new(
        "failing descent is rejected with witnesses",
        subject,
        anchors::DESCENT,
        failing_descent(&f.c1, &f.d, &f.iota1),
    ));
    out.push(Verdict::new(
        "non-central gluing is rejected",
        subject,
        anchors::DESCENT,
        match relative_tensor(&f.c1, &f.c2, &f.d, &f.iota1, &f.iota2) {
            Err(PointedError::NotCentral { g, value, .. }) => {
                ensure(g == "2" && !value.is_zero(), || format!("witness b({g}, -) = {value}"))
            }
            other => Err(format!("expected NotCentral, got {other:?}")),
        },
    ));

    for inst in fibre_instances() {
        out.push(Verdict::new(
            "fibre product dimension",
            inst.name,
            anchors::FIBRE,
            match rep_fibre_fpdim_check(&inst.pi1, &inst.pi2, &inst.phi, seed) {
                Ok(c) => ensure(c.identity_holds && c.fibre_order == inst.expected_order as u64, || {
                    format!("{c:?}")
                }),
                Err(e) => Err(e.to_string()),
            },
        ));
    }
    out
}

fn failing_descent(c: &PointedBraidedCategory, d: &PreMetricGroup, iota: &crate::group::GroupHom) -> Result<(), String> {
    let e = PreMetricEmbedding::new(d, c.data(), iota.clone()).map_err(|e| e.to_string())?;
    let anti = antidiagonal(&e, &e).map_err(|e| e.to_string())?;
    let product = product_premetric(c.data(), c.data());
    match descend_form(&product, &anti) {
        Err(DescentError::NotConstantOnCosets { diagnostics, coset, .. }) => {
            ensure(!diagnostics.bilinear_witnesses.is_empty() && !coset.is_empty(), || {
                "no bilinear witness reported".into()
            })
        }
        other => Err(format!("expected NotConstantOnCosets, got {other:?}")),
    }
}

/// Everything: each corpus group, each corpus form, and the worked
/// examples.
pub fn verify_corpus(seed: u64) -> Vec<Verdict> {
    let mut out = Vec::new();
    for (name, g) in corpus_groups() {
        out.extend(verify_group(name, &g, seed));
    }
    for (name, m) in corpus_forms() {
        out.extend(verify_form(name, &m));
    }
    out.extend(verify_worked_examples(seed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center::DEFAULT_SEED;

    #[test]
    fn corpus_passes() {
        let verdicts = verify_corpus(DEFAULT_SEED);
        let failures: Vec<_> = verdicts.iter().filter(|v| !v.pass).collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert!(verdicts.len() > 100);
    }
}
