use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupError};

pub const DEFAULT_MAX_ORDER: usize = 512;

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    pub max_order: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_order: DEFAULT_MAX_ORDER }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `Z_n`.
    Cyclic,
    /// `S_n`.
    Symmetric,
    /// Symmetries of a regular n-gon, order `2n`.
    Dihedral,
    /// Dicyclic group of the given order (a multiple of 4, at least 8);
    /// order 8 is the quaternion group.
    Quaternion,
    /// `A_n`.
    Alternating,
}

/// A group description as read from a record file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Table {
        elements: Vec<String>,
        table: Vec<Vec<String>>,
    },
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Abelian {
        orders: Vec<usize>,
    },
    Named {
        family: Family,
        parameter: usize,
    },
}

pub fn build_group(spec: &GroupSpec, options: &BuildOptions) -> Result<FiniteGroup, GroupError> {
    let max = options.max_order;
    match spec {
        GroupSpec::Table { elements, table } => {
            let index: HashMap<&str, usize> = elements
                .iter()
                .enumerate()
                .map(|(i, l)| (l.as_str(), i))
                .collect();
            let rows = table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|l| {
                            index.get(l.as_str()).copied().ok_or_else(|| {
                                GroupError::MalformedSpec(format!("table entry {l:?} is not an element"))
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            FiniteGroup::from_table(elements.clone(), rows, max)
        }
        GroupSpec::Permutation { degree, generators } => permutation_group(*degree, generators, max),
        GroupSpec::Abelian { orders } => abelian_group(orders, max),
        GroupSpec::Named { family, parameter } => named_group(*family, *parameter, max),
    }
}

fn check_order(order: usize, max: usize) -> Result<(), GroupError> {
    if order > max {
        Err(GroupError::TooLarge { order, max })
    } else {
        Ok(())
    }
}

fn table_from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
}

/// Elements are tuples in lexicographic order; labels are the bare residue
/// for a single factor and `(a,b,...)` otherwise.
fn abelian_group(orders: &[usize], max: usize) -> Result<FiniteGroup, GroupError> {
    if orders.iter().any(|&d| d == 0) {
        return Err(GroupError::MalformedSpec("cyclic factor of order 0".into()));
    }
    let n = orders
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d).filter(|&p| p <= max))
        .ok_or(GroupError::TooLarge { order: usize::MAX, max })?;
    let decode = |mut x: usize| -> Vec<usize> {
        let mut digits = vec![0; orders.len()];
        for (k, &d) in orders.iter().enumerate().rev() {
            digits[k] = x % d;
            x /= d;
        }
        digits
    };
    let encode = |digits: &[usize]| digits.iter().zip(orders).fold(0, |acc, (&x, &d)| acc * d + x);
    let labels = (0..n)
        .map(|x| {
            let digits = decode(x);
            if digits.len() == 1 {
                digits[0].to_string()
            } else {
                let parts: Vec<String> = digits.iter().map(usize::to_string).collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();
    let table = table_from_fn(n, |a, b| {
        let (da, db) = (decode(a), decode(b));
        let sum: Vec<usize> = da.iter().zip(&db).zip(orders).map(|((x, y), d)| (x + y) % d).collect();
        encode(&sum)
    });
    FiniteGroup::from_table(labels, table, max)
}

/// Cycle notation with 0-based points; the identity is `()`.
pub(crate) fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = perm[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = perm[x];
        }
        let parts: Vec<String> = cycle.iter().map(usize::to_string).collect();
        out.push('(');
        out.push_str(&parts.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// `(p * q)(i) = p(q(i))`: apply `q` first.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

fn group_from_permutations(mut perms: Vec<Vec<usize>>, max: usize) -> Result<FiniteGroup, GroupError> {
    // lexicographic image order puts the identity first
    perms.sort();
    let index: HashMap<&[usize], usize> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let n = perms.len();
    let table = table_from_fn(n, |a, b| index[compose(&perms[a], &perms[b]).as_slice()]);
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_table(labels, table, max)
}

fn permutation_group(degree: usize, generators: &[Vec<usize>], max: usize) -> Result<FiniteGroup, GroupError> {
    for (k, gen) in generators.iter().enumerate() {
        let mut hit = vec![false; degree];
        if gen.len() != degree
            || gen.iter().any(|&x| x >= degree || std::mem::replace(&mut hit[x], true))
        {
            return Err(GroupError::MalformedSpec(format!(
                "generator {k} is not a permutation of 0..{degree}"
            )));
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(p) = queue.pop_front() {
        for gen in generators {
            let next = compose(&p, gen);
            if seen.insert(next.clone()) {
                check_order(seen.len(), max)?;
                queue.push_back(next);
            }
        }
    }
    group_from_permutations(seen.into_iter().collect(), max)
}

fn all_permutations(degree: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..degree).collect();
    permute(&mut current, 0, &mut out);
    out
}

fn permute(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permute(current, k + 1, out);
        current.swap(k, i);
    }
}

fn is_even(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

fn named_group(family: Family, parameter: usize, max: usize) -> Result<FiniteGroup, GroupError> {
    let bad = |why: &str| GroupError::MalformedSpec(format!("{family:?} parameter {parameter}: {why}"));
    match family {
        Family::Cyclic => {
            if parameter == 0 {
                return Err(bad("must be positive"));
            }
            abelian_group(&[parameter], max)
        }
        Family::Symmetric | Family::Alternating => {
            if parameter == 0 {
                return Err(bad("must be positive"));
            }
            let full = factorial(parameter).ok_or(GroupError::TooLarge { order: usize::MAX, max })?;
            let order = if family == Family::Alternating && parameter >= 2 { full / 2 } else { full };
            check_order(order, max)?;
            let mut perms = all_permutations(parameter);
            if family == Family::Alternating {
                perms.retain(|p| is_even(p));
            }
            group_from_permutations(perms, max)
        }
        Family::Dihedral => {
            if parameter == 0 {
                return Err(bad("must be positive"));
            }
            let m = parameter;
            check_order(2 * m, max)?;
            // element (i, j) = r^i s^j stored at j*m + i
            let label = |i: usize, j: usize| match (i, j) {
                (0, 0) => "e".to_string(),
                (1, 0) => "r".to_string(),
                (i, 0) => format!("r^{i}"),
                (0, _) => "s".to_string(),
                (1, _) => "rs".to_string(),
                (i, _) => format!("r^{i}s"),
            };
            let labels = (0..2 * m).map(|x| label(x % m, x / m)).collect();
            let table = table_from_fn(2 * m, |a, b| {
                let (i, j, k, l) = (a % m, a / m, b % m, b / m);
                let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
                ((j + l) % 2) * m + rot
            });
            FiniteGroup::from_table(labels, table, max)
        }
        Family::Quaternion => {
            if parameter < 8 || parameter % 4 != 0 {
                return Err(bad("order must be a multiple of 4 and at least 8"));
            }
            check_order(parameter, max)?;
            // dicyclic: a^(2m) = 1, x^2 = a^m, x a x^-1 = a^-1
            let m = parameter / 4;
            let n2 = 2 * m;
            let label = |i: usize, j: usize| match (i, j) {
                (0, 0) => "e".to_string(),
                (1, 0) => "a".to_string(),
                (i, 0) => format!("a^{i}"),
                (0, _) => "x".to_string(),
                (1, _) => "ax".to_string(),
                (i, _) => format!("a^{i}x"),
            };
            let labels = (0..parameter).map(|x| label(x % n2, x / n2)).collect();
            let table = table_from_fn(parameter, |a, b| {
                let (i, j, k, l) = (a % n2, a / n2, b % n2, b / n2);
                let mut rot = if j == 0 { i + k } else { i + n2 - k };
                if j == 1 && l == 1 {
                    rot += m;
                }
                ((j + l) % 2) * n2 + rot % n2
            });
            FiniteGroup::from_table(labels, table, max)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> BuildOptions {
        BuildOptions::default()
    }

    #[test]
    fn named_orders() {
        let cases = [
            (Family::Symmetric, 3, 6),
            (Family::Symmetric, 4, 24),
            (Family::Alternating, 4, 12),
            (Family::Dihedral, 4, 8),
            (Family::Quaternion, 8, 8),
            (Family::Quaternion, 12, 12),
            (Family::Cyclic, 1, 1),
        ];
        for (family, parameter, order) in cases {
            let g = build_group(&GroupSpec::Named { family, parameter }, &opts()).unwrap();
            assert_eq!(g.order(), order, "{family:?} {parameter}");
            assert_eq!(g.label(0), if matches!(family, Family::Symmetric | Family::Alternating) {
                "()"
            } else if family == Family::Cyclic {
                "0"
            } else {
                "e"
            });
        }
    }

    #[test]
    fn klein_four_is_elementary() {
        let v = build_group(&GroupSpec::Abelian { orders: vec![2, 2] }, &opts()).unwrap();
        assert_eq!(v.order(), 4);
        assert!((0..4).all(|x| v.inv(x) == x));
        assert_eq!(v.labels(), &["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q8 = build_group(&GroupSpec::Named { family: Family::Quaternion, parameter: 8 }, &opts())
            .unwrap();
        let involutions = (1..8).filter(|&x| q8.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert!(!q8.is_abelian());
    }

    #[test]
    fn non_associative_table_rejected() {
        // column "b" repeats
        let spec = GroupSpec::Table {
            elements: vec!["e".into(), "a".into(), "b".into()],
            table: vec![
                vec!["e".into(), "a".into(), "b".into()],
                vec!["a".into(), "e".into(), "b".into()],
                vec!["b".into(), "b".into(), "e".into()],
            ],
        };
        // a loop of order 5 with identity that is not a group
        let spec_latin = GroupSpec::Table {
            elements: vec!["e".into(), "a".into(), "b".into(), "c".into(), "d".into()],
            table: vec![
                vec!["e".into(), "a".into(), "b".into(), "c".into(), "d".into()],
                vec!["a".into(), "e".into(), "c".into(), "d".into(), "b".into()],
                vec!["b".into(), "d".into(), "e".into(), "a".into(), "c".into()],
                vec!["c".into(), "b".into(), "d".into(), "e".into(), "a".into()],
                vec!["d".into(), "c".into(), "a".into(), "b".into(), "e".into()],
            ],
        };
        assert!(matches!(build_group(&spec, &opts()), Err(GroupError::MalformedSpec(_))));
        assert!(matches!(build_group(&spec_latin, &opts()), Err(GroupError::NotAssociative(..))));
    }

    #[test]
    fn three_by_three_non_associative_table() {
        // x*y = -x-y on Z3: a Latin square with (0*0)*1 != 0*(0*1)
        let spec = GroupSpec::Table {
            elements: vec!["x".into(), "y".into(), "z".into()],
            table: vec![
                vec!["x".into(), "z".into(), "y".into()],
                vec!["z".into(), "y".into(), "x".into()],
                vec!["y".into(), "x".into(), "z".into()],
            ],
        };
        assert!(matches!(build_group(&spec, &opts()), Err(GroupError::NotAssociative(..))));
    }

    #[test]
    fn identity_moved_to_front() {
        let spec = GroupSpec::Table {
            elements: vec!["a".into(), "e".into()],
            table: vec![vec!["e".into(), "a".into()], vec!["a".into(), "e".into()]],
        };
        let g = build_group(&spec, &opts()).unwrap();
        assert_eq!(g.labels(), &["e", "a"]);
    }

    #[test]
    fn malformed_tables() {
        let ragged = GroupSpec::Table {
            elements: vec!["e".into(), "a".into()],
            table: vec![vec!["e".into(), "a".into()], vec!["a".into()]],
        };
        assert!(matches!(build_group(&ragged, &opts()), Err(GroupError::MalformedSpec(_))));
        let unknown = GroupSpec::Table {
            elements: vec!["e".into()],
            table: vec![vec!["q".into()]],
        };
        assert!(matches!(build_group(&unknown, &opts()), Err(GroupError::MalformedSpec(_))));
    }

    #[test]
    fn permutation_generators() {
        let spec = GroupSpec::Permutation {
            degree: 3,
            generators: vec![vec![1, 0, 2], vec![1, 2, 0]],
        };
        let g = build_group(&spec, &opts()).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.label(0), "()");
        let bad = GroupSpec::Permutation { degree: 3, generators: vec![vec![0, 0, 1]] };
        assert!(matches!(build_group(&bad, &opts()), Err(GroupError::MalformedSpec(_))));
    }

    #[test]
    fn order_cap() {
        let small = BuildOptions { max_order: 10 };
        assert!(matches!(
            build_group(&GroupSpec::Named { family: Family::Symmetric, parameter: 4 }, &small),
            Err(GroupError::TooLarge { order: 24, max: 10 })
        ));
        assert!(matches!(
            build_group(&GroupSpec::Abelian { orders: vec![4, 4] }, &small),
            Err(GroupError::TooLarge { .. })
        ));
    }

    #[test]
    fn spec_records_parse() {
        let spec: GroupSpec =
            serde_json::from_str(r#"{"kind":"named","family":"symmetric","parameter":3}"#).unwrap();
        assert_eq!(spec, GroupSpec::Named { family: Family::Symmetric, parameter: 3 });
        let spec: GroupSpec = serde_json::from_str(r#"{"kind":"abelian","orders":[2,2]}"#).unwrap();
        assert_eq!(spec, GroupSpec::Abelian { orders: vec![2, 2] });
        assert!(serde_json::from_str::<GroupSpec>(
            r#"{"kind":"abelian","orders":[2],"extra":1}"#
        )
        .is_err());
        assert!(serde_json::from_str::<GroupSpec>(r#"{"kind":"weird"}"#).is_err());
    }

    #[test]
    fn cycle_labels() {
        assert_eq!(cycle_notation(&[0, 1, 2]), "()");
        assert_eq!(cycle_notation(&[1, 0, 2]), "(0 1)");
        assert_eq!(cycle_notation(&[1, 2, 0, 4, 3]), "(0 1 2)(3 4)");
    }
}
