use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};

use relcenter::center::{
    decompose_center, induce_center_object, linear_characters, simple_objects, validate_bundle, BundleVerdict,
    ComponentRole, LinearCharacter,
};
use relcenter::class_fusion::{build_ring, fusion_table, verify_ring_axioms};
use relcenter::group::{abelian_invariants, BuildOptions, FiniteGroup, GroupHom};
use relcenter::phase::Phase;
use relcenter::pointed::{
    adjoint_fpdim_check, center_fpdim_report, mueger_center, relative_tensor, tilde, PointedBraidedCategory,
    PointedError,
};
use relcenter::premetric::{
    antidiagonal, descend_form, product_premetric, DescentDiagnostics, DescentError, PreMetricEmbedding,
    PreMetricGroup,
};
use relcenter::records::Loader;
use relcenter::verify::{anchors, form_not_valid, verify_corpus, verify_form, verify_group, Verdict};

use crate::report::{digests, Report};

pub struct Session {
    pub loader: Loader,
    pub seed: u64,
}

pub struct Output {
    pub result: Value,
    pub text: String,
    pub verdicts: Vec<Verdict>,
}

impl Session {
    pub fn new(max_order: usize, seed: u64) -> Session {
        Session {
            loader: Loader::new(BuildOptions { max_order }),
            seed,
        }
    }

    pub fn finish(self, command: String, out: Output) -> Report {
        Report {
            command,
            inputs: digests(&self.loader.sources),
            result: out.result,
            verdicts: out.verdicts,
            text: out.text,
        }
    }
}

fn labels(g: &FiniteGroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| g.label(x).to_string()).collect()
}

fn form_values(m: &PreMetricGroup) -> Map<String, Value> {
    let g = m.group();
    (0..m.order())
        .map(|x| (g.label(x).to_string(), Value::String(m.q(x).to_string())))
        .collect()
}

fn form_text(m: &PreMetricGroup) -> String {
    let g = m.group();
    (0..m.order())
        .map(|x| format!("q({}) = {}", g.label(x), m.q(x)))
        .collect::<Vec<_>>()
        .join("\n")
}

fn premetric_json(m: &PreMetricGroup) -> Value {
    let rad = m.radical();
    json!({
        "order": m.order(),
        "values": form_values(m),
        "radical": labels(m.group(), rad.members()),
        "nondegenerate": m.is_nondegenerate(),
    })
}

fn verdict(name: &str, subject: &str, anchor: &str, ok: bool, witness: impl FnOnce() -> String) -> Verdict {
    Verdict::new(name, subject, anchor, if ok { Ok(()) } else { Err(witness()) })
}

fn subject(path: &Path) -> String {
    path.display().to_string()
}

// ---------------------------------------------------------------- group

pub fn group_info(cx: &mut Session, path: &Path) -> Result<Output> {
    let g = cx.loader.group(path)?;
    let mut rows = Vec::new();
    let mut text = format!("order: {}\nabelian: {}\n\nclasses (representative, size, centralizer order):\n", g.order(), g.is_abelian());
    for class in g.conjugacy_classes() {
        let z = g.centralizer(class.representative)?.order();
        let rep = g.label(class.representative);
        let _ = writeln!(text, "  {rep}  {}  {z}", class.size());
        rows.push(json!({"representative": rep, "size": class.size(), "centralizer_order": z}));
    }
    let center = g.center();
    let center_labels = labels(&g, center.members());
    let _ = writeln!(text, "\ncenter: {{{}}}", center_labels.join(", "));
    let invariants = if g.is_abelian() {
        let inv = abelian_invariants(&g)?;
        let _ = writeln!(text, "abelian invariants: {inv:?}");
        json!(inv)
    } else {
        Value::Null
    };
    Ok(Output {
        result: json!({
            "order": g.order(),
            "abelian": g.is_abelian(),
            "classes": rows,
            "center": center_labels,
            "abelian_invariants": invariants,
        }),
        text,
        verdicts: Vec::new(),
    })
}

// ---------------------------------------------------------------- premetric

pub fn premetric_validate(cx: &mut Session, path: &Path) -> Result<Output> {
    match cx.loader.form(path) {
        Ok(m) => {
            let text = format!("valid quadratic form on a group of order {}\n{}\n", m.order(), form_text(&m));
            Ok(Output {
                result: premetric_json(&m),
                text,
                verdicts: vec![Verdict::new("form is valid", &subject(path), anchors::FORM_VALID, Ok(()))],
            })
        }
        Err(e) => match e.form_error() {
            Some(fe) => Ok(Output {
                result: json!({"error": fe.to_string()}),
                text: format!("not a quadratic form: {fe}\n"),
                verdicts: vec![form_not_valid(&subject(path), &fe.to_string())],
            }),
            None => Err(e.into()),
        },
    }
}

pub fn premetric_product(cx: &mut Session, left: &Path, right: &Path) -> Result<Output> {
    let m1 = cx.loader.form(left)?;
    let m2 = cx.loader.form(right)?;
    let p = product_premetric(&m1, &m2);
    Ok(Output {
        result: premetric_json(&p),
        text: format!("product of order {}\n{}\n", p.order(), form_text(&p)),
        verdicts: Vec::new(),
    })
}

/// Forms and embeddings for a gluing `C1 ⊠_D C2`.
pub struct Gluing {
    pub c1: PreMetricGroup,
    pub c2: PreMetricGroup,
    pub d: PreMetricGroup,
    pub iota1: GroupHom,
    pub iota2: GroupHom,
}

pub struct GluingPaths<'a> {
    pub left: &'a Path,
    pub right: &'a Path,
    pub common: &'a Path,
    pub iota1: &'a Path,
    pub iota2: &'a Path,
}

fn load_gluing(cx: &mut Session, p: &GluingPaths) -> Result<Gluing> {
    Ok(Gluing {
        c1: cx.loader.form(p.left)?,
        c2: cx.loader.form(p.right)?,
        d: cx.loader.form(p.common)?,
        iota1: cx.loader.morphism(p.iota1)?,
        iota2: cx.loader.morphism(p.iota2)?,
    })
}

fn diagnostics_json(g: &FiniteGroup, d: &DescentDiagnostics) -> Value {
    json!({
        "bilinear_violations": d.bilinear_violations,
        "bilinear_witnesses": d.bilinear_witnesses.iter().map(|w| json!({
            "n": g.label(w.n), "x": g.label(w.x), "b": w.value.to_string()
        })).collect::<Vec<_>>(),
        "q_nonzero_on_subgroup": d.nonzero_on_subgroup.iter().map(|(n, v)| json!({
            "n": g.label(*n), "q": v.to_string()
        })).collect::<Vec<_>>(),
    })
}

fn diagnostics_text(g: &FiniteGroup, d: &DescentDiagnostics) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "pairs with b(n, x) != 0: {}", d.bilinear_violations);
    for w in &d.bilinear_witnesses {
        let _ = writeln!(text, "  b({}, {}) = {}", g.label(w.n), g.label(w.x), w.value);
    }
    for (n, v) in &d.nonzero_on_subgroup {
        let _ = writeln!(text, "  q({}) = {v} on the subgroup", g.label(*n));
    }
    text
}

pub fn premetric_descend(cx: &mut Session, paths: &GluingPaths) -> Result<Output> {
    let gl = load_gluing(cx, paths)?;
    let subject = subject(paths.left);
    let fail = |reason: String| Output {
        result: json!({"error": reason}),
        text: format!("{reason}\n"),
        verdicts: vec![Verdict::new("form descends to the quotient", &subject, anchors::DESCENT, Err(reason.clone()))],
    };
    let e1 = match PreMetricEmbedding::new(&gl.d, &gl.c1, gl.iota1.clone()) {
        Ok(e) => e,
        Err(err) => return Ok(fail(format!("first embedding: {err}"))),
    };
    let e2 = match PreMetricEmbedding::new(&gl.d, &gl.c2, gl.iota2.clone()) {
        Ok(e) => e,
        Err(err) => return Ok(fail(format!("second embedding: {err}"))),
    };
    let anti = antidiagonal(&e1, &e2)?;
    let product = product_premetric(&gl.c1, &gl.c2);
    let pg = product.group();
    let anti_labels = labels(pg, anti.members());
    match descend_form(&product, &anti) {
        Ok(descent) => {
            let mut text = format!(
                "antidiagonal: {{{}}}\nquotient of order {}\n{}\n",
                anti_labels.join(", "),
                descent.premetric.order(),
                form_text(&descent.premetric)
            );
            text.push_str(&diagnostics_text(pg, &descent.diagnostics));
            Ok(Output {
                result: json!({
                    "antidiagonal": anti_labels,
                    "descended": premetric_json(&descent.premetric),
                    "diagnostics": diagnostics_json(pg, &descent.diagnostics),
                }),
                text,
                verdicts: vec![
                    Verdict::new("form descends to the quotient", &subject, anchors::DESCENT, Ok(())),
                    verdict("b vanishes on the antidiagonal", &subject, anchors::DESCENT, descent.diagnostics.holds(), || {
                        "descended although b(n, x) != 0".into()
                    }),
                ],
            })
        }
        Err(DescentError::NotConstantOnCosets {
            coset,
            first,
            first_value,
            second,
            second_value,
            diagnostics,
        }) => {
            let witness = format!(
                "coset {{{}}}: q({}) = {first_value}, q({}) = {second_value}",
                labels(pg, &coset).join(", "),
                pg.label(first),
                pg.label(second)
            );
            let mut text = format!("antidiagonal: {{{}}}\nform is not constant on cosets: {witness}\n", anti_labels.join(", "));
            text.push_str(&diagnostics_text(pg, &diagnostics));
            Ok(Output {
                result: json!({
                    "antidiagonal": anti_labels,
                    "error": "NotConstantOnCosets",
                    "coset": labels(pg, &coset),
                    "first": {"element": pg.label(first), "q": first_value.to_string()},
                    "second": {"element": pg.label(second), "q": second_value.to_string()},
                    "diagnostics": diagnostics_json(pg, &diagnostics),
                }),
                text,
                verdicts: vec![
                    Verdict::new("form descends to the quotient", &subject, anchors::DESCENT, Err(witness)),
                    verdict("b vanishes on the antidiagonal", &subject, anchors::DESCENT, diagnostics.holds(), || {
                        diagnostics
                            .bilinear_witnesses
                            .first()
                            .map(|w| format!("b({}, {}) = {}", pg.label(w.n), pg.label(w.x), w.value))
                            .unwrap_or_else(|| "q nonzero on the antidiagonal".into())
                    }),
                ],
            })
        }
        Err(DescentError::Form(e)) => Err(e.into()),
    }
}

// ---------------------------------------------------------------- pointed

pub fn pointed_center(cx: &mut Session, path: &Path) -> Result<Output> {
    let c = PointedBraidedCategory::new(cx.loader.form(path)?);
    let z = mueger_center(&c);
    let zg = z.data().group();
    let members: Vec<String> = (0..z.fpdim() as usize).map(|x| zg.label(x).to_string()).collect();
    Ok(Output {
        result: json!({
            "fpdim": z.fpdim(),
            "symmetric": z.is_symmetric(),
            "whole_category": z.fpdim() == c.fpdim(),
            "form": premetric_json(z.data()),
        }),
        text: format!(
            "Mueger center: fpdim {} of {}\nsimple objects: {{{}}}\n{}\n",
            z.fpdim(),
            c.fpdim(),
            members.join(", "),
            form_text(z.data())
        ),
        verdicts: vec![verdict("Mueger center is symmetric", &subject(path), anchors::MUEGER, z.is_symmetric(), || {
            "b does not vanish on the center".into()
        })],
    })
}

pub fn pointed_tensor(cx: &mut Session, paths: &GluingPaths) -> Result<Output> {
    let gl = load_gluing(cx, paths)?;
    let c1 = PointedBraidedCategory::new(gl.c1.clone());
    let c2 = PointedBraidedCategory::new(gl.c2.clone());
    let subject = subject(paths.left);
    match relative_tensor(&c1, &c2, &gl.d, &gl.iota1, &gl.iota2) {
        Ok(rel) => {
            let adj = adjoint_fpdim_check(&c1, &c2, &gl.d, &gl.iota1, &gl.iota2)?;
            let expected = c1.fpdim() * c2.fpdim();
            let f = rel.category.fpdim();
            let d = gl.d.order() as u64;
            Ok(Output {
                result: json!({
                    "fpdim": f,
                    "form": premetric_json(rel.category.data()),
                    "i_of_unit_fpdim": adj.i_of_unit_fpdim,
                    "deligne_fpdim": adj.deligne_fpdim,
                }),
                text: format!(
                    "relative tensor product: fpdim {f} = {} * {} / {d}\nFPdim(I(1)) = {}\n{}\n",
                    c1.fpdim(),
                    c2.fpdim(),
                    adj.i_of_unit_fpdim,
                    form_text(rel.category.data())
                ),
                verdicts: vec![
                    verdict("relative tensor dimension", &subject, anchors::RELATIVE, f * d == expected, || {
                        format!("{f} * {d} != {expected}")
                    }),
                    verdict("adjoint factorization", &subject, anchors::ADJOINT, adj.identity_holds, || format!("{adj:?}")),
                ],
            })
        }
        Err(PointedError::NotCentral { factor, g, x, value, .. }) => {
            let witness = format!("factor {factor}: b({g}, {x}) = {value}");
            Ok(Output {
                result: json!({"error": "NotCentral", "factor": factor, "g": g, "x": x, "b": value.to_string()}),
                text: format!("common subcategory is not central: {witness}\n"),
                verdicts: vec![Verdict::new("common subcategory is central", &subject, anchors::DESCENT, Err(witness))],
            })
        }
        Err(e) => {
            let reason = e.to_string();
            Ok(Output {
                result: json!({"error": reason}),
                text: format!("{reason}\n"),
                verdicts: vec![Verdict::new("relative tensor product exists", &subject, anchors::RELATIVE, Err(reason.clone()))],
            })
        }
    }
}

pub fn pointed_tilde(cx: &mut Session, path: &Path) -> Result<Output> {
    let c = PointedBraidedCategory::new(cx.loader.form(path)?);
    let t = tilde(&c);
    let (n, r) = (c.fpdim(), mueger_center(&c).fpdim());
    let f = t.category.fpdim();
    Ok(Output {
        result: json!({"fpdim": f, "mueger_fpdim": r, "form": premetric_json(t.category.data())}),
        text: format!("C~: fpdim {f} = {n}^2 / {r}\n{}\n", form_text(t.category.data())),
        verdicts: vec![verdict("FPdim of C~", &subject(path), anchors::TILDE, f * r == n * n, || {
            format!("{f} * {r} != {}", n * n)
        })],
    })
}

pub fn pointed_fpdim_report(cx: &mut Session, path: &Path) -> Result<Output> {
    let c = PointedBraidedCategory::new(cx.loader.form(path)?);
    let r = center_fpdim_report(&c);
    let s = subject(path);
    let text = format!(
        "FPdim(C)   = {}\nFPdim(Z(C)) = {}\nFPdim(C')  = {}\nFPdim(C~)  = {}\nFPdim(R)   = {}\nFPdim(C)^2 (1 - 1/FPdim(C')) = {}/{}\nnon-degenerate: {}\n",
        r.fpdim_category,
        r.fpdim_center,
        r.fpdim_mueger,
        r.fpdim_tilde,
        r.fpdim_remainder,
        r.remainder_formula.0,
        r.remainder_formula.1,
        r.nondegenerate
    );
    Ok(Output {
        result: json!({
            "fpdim_category": r.fpdim_category,
            "fpdim_center": r.fpdim_center,
            "fpdim_mueger": r.fpdim_mueger,
            "fpdim_tilde": r.fpdim_tilde,
            "fpdim_remainder": r.fpdim_remainder,
            "remainder_formula": format!("{}/{}", r.remainder_formula.0, r.remainder_formula.1),
            "nondegenerate": r.nondegenerate,
        }),
        text,
        verdicts: vec![
            verdict("center factorization", &s, anchors::CENTER_FACTOR, r.center_factorization_holds, || format!("{r:?}")),
            verdict("remainder dimension", &s, anchors::REMAINDER, r.remainder_formula_holds, || format!("{r:?}")),
            verdict(
                "remainder vanishes iff non-degenerate",
                &s,
                anchors::NONDEGENERATE,
                r.remainder_vanishes_iff_nondegenerate,
                || format!("{r:?}"),
            ),
        ],
    })
}

// ---------------------------------------------------------------- center

pub fn center_decompose(cx: &mut Session, path: &Path) -> Result<Output> {
    let g = cx.loader.group(path)?;
    let comps = decompose_center(&g);
    let mut text = String::from("components (representative, |class|, |Z(a)|, simples, fpdim, role):\n");
    let mut rows = Vec::new();
    for c in &comps {
        let role = match c.role {
            ComponentRole::RepG => "Rep(G)",
            ComponentRole::Remainder => "remainder",
        };
        let rep = g.label(c.class.representative);
        let _ = writeln!(
            text,
            "  {rep}  {}  {}  {}  {}  {role}",
            c.class.size(),
            c.centralizer.order(),
            c.num_simples,
            c.fpdim
        );
        rows.push(json!({
            "representative": rep,
            "class_size": c.class.size(),
            "centralizer_order": c.centralizer.order(),
            "num_simples": c.num_simples,
            "fpdim": c.fpdim,
            "role": c.role,
        }));
    }
    let total: u64 = comps.iter().map(|c| c.fpdim).sum();
    let n = g.order() as u64;
    let _ = writeln!(text, "total: {total} (|G|^2 = {})", n * n);
    Ok(Output {
        result: json!({"components": rows, "total": total}),
        text,
        verdicts: vec![verdict("center components sum to |G|^2", &subject(path), anchors::CENTER_TOTAL, total == n * n, || {
            format!("{total} != {}", n * n)
        })],
    })
}

pub fn center_simples(cx: &mut Session, path: &Path) -> Result<Output> {
    let g = cx.loader.group(path)?;
    let simples = simple_objects(&g, cx.seed)?;
    let mut text = String::from("simple objects (representative, irrep, degree, fpdim):\n");
    let mut rows = Vec::new();
    for s in &simples {
        let rep = g.label(s.representative);
        let _ = writeln!(text, "  {rep}  #{}  {}  {}", s.irrep_label, s.irrep_degree, s.fpdim);
        rows.push(json!({
            "representative": rep,
            "irrep": s.irrep_label,
            "degree": s.irrep_degree,
            "fpdim": s.fpdim,
        }));
    }
    let sq: u64 = simples.iter().map(|s| s.fpdim * s.fpdim).sum();
    let n = g.order() as u64;
    let _ = writeln!(text, "{} simples, sum of fpdim^2 = {sq}", simples.len());
    Ok(Output {
        result: json!({"simples": rows, "count": simples.len(), "fpdim_squared_sum": sq}),
        text,
        verdicts: vec![verdict("simple objects square-sum to |G|^2", &subject(path), anchors::SIMPLES, sq == n * n, || {
            format!("{sq} != {}", n * n)
        })],
    })
}

/// How the character of `Z(a)` is chosen for `center induce`.
pub enum CharacterChoice {
    Index(usize),
    Values(Vec<(String, String)>),
}

pub fn center_induce(cx: &mut Session, path: &Path, class: &str, choice: &CharacterChoice) -> Result<Output> {
    let g: Arc<FiniteGroup> = cx.loader.group(path)?;
    let a = g.index_of(class)?;
    let z = g.centralizer(a)?;
    let chi = match choice {
        CharacterChoice::Index(i) => {
            let all = linear_characters(&z);
            let count = all.len();
            all.into_iter()
                .nth(*i)
                .ok_or_else(|| anyhow!("character index {i} out of range: Z({class}) has {count} linear characters"))?
        }
        CharacterChoice::Values(pairs) => {
            let mut values = vec![None; z.order()];
            for (label, text) in pairs {
                let x = g.index_of(label)?;
                let pos = z
                    .members()
                    .binary_search(&x)
                    .map_err(|_| anyhow!("{label} is not in the centralizer of {class}"))?;
                let v: Phase = text.parse().with_context(|| format!("character value for {label}"))?;
                values[pos] = Some(v);
            }
            if let Some(pos) = values.iter().position(Option::is_none) {
                bail!("no character value given for {}", g.label(z.members()[pos]));
            }
            match LinearCharacter::new(z.clone(), values.into_iter().flatten().collect()) {
                Ok(chi) => chi,
                Err(e) => {
                    let reason = e.to_string();
                    return Ok(Output {
                        result: json!({"error": reason}),
                        text: format!("{reason}\n"),
                        verdicts: vec![Verdict::new("character is a homomorphism", &subject(path), anchors::COCYCLE, Err(reason.clone()))],
                    });
                }
            }
        }
    };
    let bundle = induce_center_object(&g, a, &chi)?;
    let support = bundle.support().to_vec();
    let mut pi = Map::new();
    let mut text = format!(
        "support: {{{}}}\ncharacter of Z({class}): {}\n\npi[g][x]:\n",
        labels(&g, &support).join(", "),
        z.members()
            .iter()
            .zip(chi.values())
            .map(|(&x, v)| format!("{} -> {v}", g.label(x)))
            .collect::<Vec<_>>()
            .join(", ")
    );
    for h in 0..g.order() {
        let row: Map<String, Value> = support
            .iter()
            .map(|&x| (g.label(x).to_string(), Value::String(bundle.pi(h, x).expect("rank one").to_string())))
            .collect();
        let _ = writeln!(
            text,
            "  {}: {}",
            g.label(h),
            support
                .iter()
                .map(|&x| format!("{}={}", g.label(x), bundle.pi(h, x).expect("rank one")))
                .collect::<Vec<_>>()
                .join("  ")
        );
        pi.insert(g.label(h).to_string(), Value::Object(row));
    }
    let v = validate_bundle(&bundle);
    let witness = match &v {
        BundleVerdict::CocycleViolation { g: x, h, x: y, lhs, rhs } => {
            format!("g={}, h={}, x={}: {lhs} != {rhs}", g.label(*x), g.label(*h), g.label(*y))
        }
        other => format!("{other:?}"),
    };
    Ok(Output {
        result: json!({
            "support": labels(&g, &support),
            "character": z.members().iter().zip(chi.values()).map(|(&x, v)| (g.label(x).to_string(), Value::String(v.to_string()))).collect::<Map<_, _>>(),
            "constant": chi.is_trivial(),
            "pi": pi,
            "validation": v,
        }),
        text,
        verdicts: vec![verdict("induced bundle satisfies the cocycle identity", &subject(path), anchors::COCYCLE, v.passed(), || witness)],
    })
}

pub fn center_fuse(cx: &mut Session, path: &Path) -> Result<Output> {
    let g = cx.loader.group(path)?;
    let ring = build_ring(&g);
    let table = fusion_table(&ring);
    let report = verify_ring_axioms(&ring);
    let text = format!(
        "fusion rules (coefficient convention: pair count / |target class|):\n{}",
        table.render(&g)
    );
    let entries: Vec<Value> = table
        .entries
        .iter()
        .flatten()
        .map(|e| {
            json!({
                "left": g.label(e.left),
                "right": g.label(e.right),
                "coefficients": e.terms.iter().map(|&(r, m)| (g.label(r).to_string(), json!(m))).collect::<Map<_, _>>(),
                "pair_counts": e.pair_count_terms.iter().map(|&(r, m)| (g.label(r).to_string(), json!(m))).collect::<Map<_, _>>(),
            })
        })
        .collect();
    let s = subject(path);
    Ok(Output {
        result: json!({
            "representatives": labels(&g, &table.representatives),
            "entries": entries,
            "axioms": report,
        }),
        text,
        verdicts: vec![
            verdict(
                "class fusion ring axioms",
                &s,
                anchors::RING,
                report.commutativity.is_none() && report.associativity.is_none() && report.unit.is_none(),
                || format!("{report:?}"),
            ),
            verdict(
                "pair counts divisible by target class size",
                &s,
                anchors::DIVISIBILITY,
                report.divisibility.is_none() && report.conservation.is_none(),
                || format!("{report:?}"),
            ),
        ],
    })
}

// ---------------------------------------------------------------- verify

pub fn verify(cx: &mut Session, corpus: bool, groups: &[PathBuf], forms: &[PathBuf]) -> Result<Output> {
    let mut verdicts = Vec::new();
    if corpus {
        verdicts.extend(verify_corpus(cx.seed));
    }
    for path in groups {
        let g = cx.loader.group(path)?;
        verdicts.extend(verify_group(&subject(path), &g, cx.seed));
    }
    for path in forms {
        match cx.loader.form(path) {
            Ok(m) => verdicts.extend(verify_form(&subject(path), &m)),
            Err(e) => match e.form_error() {
                Some(fe) => verdicts.push(form_not_valid(&subject(path), &fe.to_string())),
                None => return Err(e.into()),
            },
        }
    }
    let failed = verdicts.iter().filter(|v| !v.pass).count();
    Ok(Output {
        result: json!({"verdicts": verdicts.len(), "failed": failed}),
        text: String::new(),
        verdicts,
    })
}
