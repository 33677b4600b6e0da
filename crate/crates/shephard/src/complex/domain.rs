use crate::error::Result;
use crate::graph::{spherical_subsets, Edge, ExtendedPresentationGraph, Label};
use num_rational::Ratio;
use serde::Serialize;
use std::collections::BTreeMap;

/// A spherical subset and the local group attached to its vertex of the domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SphericalSubset {
    pub vertices: Vec<String>,
    /// Name of the standard subgroup generated by these vertices.
    pub local_group: String,
    /// `None` for rank three or more with some label above 2.
    pub local_group_finite: Option<bool>,
}

/// Angle between the directions of two generators, as a multiple of pi.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PairAngle {
    pub a: String,
    pub b: String,
    pub over_pi: String,
}

/// The cube spanned by the subsets between `lower` and `upper`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DomainCell {
    pub lower: usize,
    pub upper: usize,
    pub dimension: usize,
    /// Link edge lengths of the Coxeter block of the upper subset, for pairs of new
    /// generators: pi / m.
    pub block_angles: Vec<PairAngle>,
    /// Side length in the cubical metric.
    pub cube_side: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FundamentalDomainData {
    pub poset: Vec<SphericalSubset>,
    /// Subset key (vertex ids joined by commas, empty for the empty set) to index.
    pub vertex_index: BTreeMap<String, usize>,
    pub cells: Vec<DomainCell>,
    /// Number of simplices of the derived complex, by dimension.
    pub simplex_counts: Vec<usize>,
    pub dimension: usize,
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn local_group_finite(g: &ExtendedPresentationGraph, s: &[usize]) -> Option<bool> {
    match s {
        [] | [_] => Some(true),
        [a, b] => Some(
            g.edge_h(&Edge {
                a: *a,
                b: *b,
                label: g.edge_label(*a, *b).expect("spherical pairs are edges"),
            }) > Ratio::from_integer(1),
        ),
        // all labels 2: the finite Coxeter group itself
        _ if s.iter().all(|&v| g.label(v) == Label::Finite(2)) => Some(true),
        _ => None,
    }
}

/// Cube structure of the strict fundamental domain: one vertex per spherical subset,
/// one cube per nested pair of subsets.
pub fn build_fundamental_domain(g: &ExtendedPresentationGraph) -> Result<FundamentalDomainData> {
    g.require_finite()?;
    let subsets = spherical_subsets(g);
    let ids =
        |s: &[usize]| -> Vec<String> { s.iter().map(|&v| g.vertices()[v].id.clone()).collect() };
    let poset: Vec<SphericalSubset> = subsets
        .iter()
        .map(|s| {
            let names = ids(s);
            let local_group = if s.len() == 1 {
                format!("Z/{}", g.label(s[0]))
            } else {
                format!("Sh{{{}}}", names.join(","))
            };
            SphericalSubset {
                vertices: names,
                local_group,
                local_group_finite: local_group_finite(g, s),
            }
        })
        .collect();
    let vertex_index = poset
        .iter()
        .enumerate()
        .map(|(i, s)| (s.vertices.join(","), i))
        .collect();
    let mut cells = Vec::new();
    for (i, lo) in subsets.iter().enumerate() {
        for (j, hi) in subsets.iter().enumerate() {
            if !is_subset(lo, hi) {
                continue;
            }
            let fresh: Vec<usize> = hi.iter().copied().filter(|v| !lo.contains(v)).collect();
            let mut block_angles = Vec::new();
            for (x, &a) in fresh.iter().enumerate() {
                for &b in &fresh[x + 1..] {
                    let m = g.edge_label(a, b).expect("spherical subsets are cliques");
                    block_angles.push(PairAngle {
                        a: g.vertices()[a].id.clone(),
                        b: g.vertices()[b].id.clone(),
                        over_pi: format!("1/{m}"),
                    });
                }
            }
            cells.push(DomainCell {
                lower: i,
                upper: j,
                dimension: fresh.len(),
                block_angles,
                cube_side: 1,
            });
        }
    }
    // chains in the poset, grown one strictly larger subset at a time
    let mut simplex_counts = Vec::new();
    let mut chains: Vec<Vec<usize>> = (0..subsets.len()).map(|i| vec![i]).collect();
    while !chains.is_empty() {
        simplex_counts.push(chains.len());
        let mut next = Vec::new();
        for c in &chains {
            let top = &subsets[*c.last().expect("nonempty chain")];
            for (j, s) in subsets.iter().enumerate() {
                if s.len() > top.len() && is_subset(top, s) {
                    let mut d = c.clone();
                    d.push(j);
                    next.push(d);
                }
            }
        }
        chains = next;
    }
    let dimension = cells.iter().map(|c| c.dimension).max().unwrap_or(0);
    Ok(FundamentalDomainData {
        poset,
        vertex_index,
        cells,
        simplex_counts,
        dimension,
    })
}

impl FundamentalDomainData {
    pub fn euler_characteristic(&self) -> i64 {
        self.simplex_counts
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    #[test]
    fn single_edge_domain() {
        let g = ExtendedPresentationGraph::edge_graph(3, 6, 3).unwrap();
        let d = build_fundamental_domain(&g).unwrap();
        assert_eq!(d.poset.len(), 4);
        assert_eq!(d.simplex_counts, vec![4, 5, 2]);
        assert_eq!(d.euler_characteristic(), 1);
        // 4 points, 4 segments, 1 square
        assert_eq!(d.cells.len(), 9);
        assert_eq!(d.dimension, 2);
        let top = d.cells.iter().find(|c| c.dimension == 2).unwrap();
        assert_eq!(top.block_angles[0].over_pi, "1/6");
        assert_eq!(d.vertex_index["s,t"], 3);
        assert_eq!(d.poset[3].local_group_finite, Some(false));
    }

    #[test]
    fn pentagon_is_two_dimensional() {
        let mut s = String::new();
        for i in 0..5 {
            s += &format!("vertex v{i} 3\n");
        }
        for i in 0..5 {
            s += &format!("edge v{i} v{} 6\n", (i + 1) % 5);
        }
        let d = build_fundamental_domain(&parse_graph(&s).unwrap()).unwrap();
        assert_eq!(d.dimension, 2);
        assert_eq!(d.poset.len(), 11);
        assert_eq!(d.simplex_counts.len(), 3);
        assert_eq!(d.euler_characteristic(), 1);
        let nested = d.poset.len() + 5 + 5 * 2 + 5;
        assert_eq!(d.cells.len(), nested);
    }

    #[test]
    fn infinite_label_is_rejected() {
        let g = parse_graph("vertex a inf; vertex b 3; edge a b 4").unwrap();
        assert!(build_fundamental_domain(&g).is_err());
    }
}
