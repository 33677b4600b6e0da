use super::SubgraphRef;
use crate::algebra::{CyclotomicReal, RealCyclotomicField};
use num_integer::Integer;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoxeterKind {
    Spherical,
    Affine,
    Indefinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoxeterClass {
    pub kind: CoxeterKind,
    /// Signs of the leading principal minors of the cosine matrix, smallest first.
    pub witness: Vec<i32>,
}

/// Twice the cosine matrix of the Coxeter group on `s`: 2 on the diagonal,
/// -2cos(pi/m) off it, and -2 for non-edges.
pub fn cosine_matrix(s: &SubgraphRef<'_>) -> Vec<Vec<CyclotomicReal>> {
    let g = s.parent;
    let vs = s.vertices();
    let l = vs
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| vs[i + 1..].iter().map(move |&b| (a, b)))
        .filter_map(|(a, b)| g.edge_label(a, b))
        .filter(|&m| m >= 4)
        .fold(1u32, |acc, m| acc.lcm(&m));
    let field = RealCyclotomicField::get(l);
    let two_cos = |m: Option<u32>| -> CyclotomicReal {
        match m {
            None => CyclotomicReal::from_int(&field, 2),
            Some(m) => CyclotomicReal::from_int_coeffs(
                &field,
                &field
                    .two_cos_pi_over(m)
                    .expect("label divides the field parameter"),
            ),
        }
    };
    vs.iter()
        .map(|&a| {
            vs.iter()
                .map(|&b| {
                    if a == b {
                        CyclotomicReal::from_int(&field, 2)
                    } else {
                        two_cos(g.edge_label(a, b)).neg()
                    }
                })
                .collect()
        })
        .collect()
}

fn leading_minor_signs(m: &[Vec<CyclotomicReal>]) -> Vec<i32> {
    (1..=m.len())
        .map(|k| {
            let mut a: Vec<Vec<CyclotomicReal>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            let mut sign = 1;
            for c in 0..k {
                let Some(p) = (c..k).find(|&r| !a[r][c].is_zero()) else {
                    return 0;
                };
                if p != c {
                    a.swap(p, c);
                    sign = -sign;
                }
                sign *= a[c][c].sign();
                for r in c + 1..k {
                    if a[r][c].is_zero() {
                        continue;
                    }
                    let f = a[r][c].div(&a[c][c]).expect("nonzero pivot");
                    let (top, rest) = a.split_at_mut(r);
                    for (x, y) in rest[0][c..k].iter_mut().zip(&top[c][c..k]) {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
            sign
        })
        .collect()
}

/// Decide whether the Coxeter group on `s` is finite, affine or neither, by exact
/// positive (semi)definiteness of its cosine matrix.
pub fn classify_coxeter_subset(s: &SubgraphRef<'_>) -> CoxeterClass {
    if s.is_empty() {
        return CoxeterClass {
            kind: CoxeterKind::Spherical,
            witness: Vec::new(),
        };
    }
    let m = cosine_matrix(s);
    let field = m[0][0].field().clone();
    let witness = leading_minor_signs(&m);
    let n = m.len();
    let mut a = m;
    let mut singular = false;
    for k in 0..n {
        match a[k][k].sign() {
            -1 => {
                return CoxeterClass {
                    kind: CoxeterKind::Indefinite,
                    witness,
                }
            }
            0 => {
                if (k + 1..n).any(|j| !a[k][j].is_zero()) {
                    return CoxeterClass {
                        kind: CoxeterKind::Indefinite,
                        witness,
                    };
                }
                singular = true;
            }
            _ => {
                for i in k + 1..n {
                    if a[i][k].is_zero() {
                        continue;
                    }
                    let f = a[i][k].div(&a[k][k]).expect("positive pivot");
                    let (top, rest) = a.split_at_mut(i);
                    for (x, y) in rest[0][k + 1..n].iter_mut().zip(&top[k][k + 1..n]) {
                        *x = x.sub(&f.mul(y));
                    }
                    a[i][k] = CyclotomicReal::zero(&field);
                }
            }
        }
    }
    CoxeterClass {
        kind: if singular {
            CoxeterKind::Affine
        } else {
            CoxeterKind::Spherical
        },
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn triangle(a: u32, b: u32, c: u32) -> CoxeterKind {
        let g = parse_graph(&format!(
            "vertex x 2; vertex y 2; vertex z 2; edge x y {a}; edge y z {b}; edge x z {c}"
        ))
        .unwrap();
        classify_coxeter_subset(&g.subgraph(&[0, 1, 2]).unwrap()).kind
    }

    #[test]
    fn small_classes() {
        assert_eq!(triangle(2, 3, 6), CoxeterKind::Affine);
        assert_eq!(triangle(2, 3, 5), CoxeterKind::Spherical);
        assert_eq!(triangle(3, 3, 3), CoxeterKind::Affine);
        assert_eq!(triangle(2, 3, 7), CoxeterKind::Indefinite);
        assert_eq!(triangle(2, 2, 2), CoxeterKind::Spherical);
    }

    #[test]
    fn non_edges_are_infinite() {
        let g = parse_graph("vertex x 2; vertex y 2").unwrap();
        let c = classify_coxeter_subset(&g.subgraph(&[0, 1]).unwrap());
        assert_eq!(c.kind, CoxeterKind::Affine);
        assert_eq!(c.witness, vec![1, 0]);
        let g = parse_graph("vertex x 2; vertex y 2; vertex z 2; edge x y 2; edge x z 2").unwrap();
        // A1 x A~1 is positive semidefinite and singular
        let c = classify_coxeter_subset(&g.subgraph(&[0, 1, 2]).unwrap());
        assert_eq!(c.kind, CoxeterKind::Affine);
    }

    #[test]
    fn single_vertex_and_edge_are_spherical() {
        let g = parse_graph("vertex x 5; vertex y 5; edge x y 11").unwrap();
        for s in [&[0usize][..], &[1], &[0, 1]] {
            let c = classify_coxeter_subset(&g.subgraph(s).unwrap());
            assert_eq!(c.kind, CoxeterKind::Spherical);
            assert!(c.witness.iter().all(|&x| x == 1));
        }
    }
}
