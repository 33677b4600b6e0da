use super::{classify_coxeter_subset, CoxeterKind, ExtendedPresentationGraph, Label};
use serde::Serialize;
use std::collections::HashMap;

/// Default vertex-count limit for the general hyperbolicity check.
pub const DEFAULT_MOUSSONG_LIMIT: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HyperbolicVerdict {
    pub decision: Decision,
    /// Vertex ids of an obstruction when the answer is no.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<Obstruction>,
    pub method: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Obstruction {
    /// Irreducible affine subset with at least three vertices.
    AffineSubset { vertices: Vec<String> },
    /// Two disjoint infinite subsets commuting elementwise.
    CommutingPair {
        first: Vec<String>,
        second: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeRef {
    pub a: String,
    pub b: String,
    #[serde(rename = "pA")]
    pub p_a: Label,
    pub m: u32,
    #[serde(rename = "pB")]
    pub p_b: Label,
    /// 1/p_a + 2/m + 1/p_b as a reduced fraction.
    pub h: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CriteriaProfile {
    pub is_two_dimensional: bool,
    pub is_triangle_free: bool,
    pub has_all_two_square: bool,
    pub is_hyperbolic_type: HyperbolicVerdict,
    pub is_fc_type: bool,
    pub is_irreducible: bool,
    pub all_vertex_labels_finite: bool,
    pub peripheral_edges: Vec<EdgeRef>,
    pub poison_edges: Vec<EdgeRef>,
    pub equality_edges: Vec<EdgeRef>,
}

/// All cliques of size at least `min`, as sorted vertex lists.
fn cliques(g: &ExtendedPresentationGraph, min: usize) -> Vec<Vec<usize>> {
    fn grow(
        g: &ExtendedPresentationGraph,
        cur: &mut Vec<usize>,
        start: usize,
        min: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() >= min {
            out.push(cur.clone());
        }
        for v in start..g.vertex_count() {
            if cur.iter().all(|&u| g.adjacent(u, v)) {
                cur.push(v);
                grow(g, cur, v + 1, min, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(g, &mut Vec::new(), 0, min, &mut out);
    out
}

struct ClassCache<'g> {
    g: &'g ExtendedPresentationGraph,
    memo: HashMap<Vec<usize>, CoxeterKind>,
}

impl<'g> ClassCache<'g> {
    fn new(g: &'g ExtendedPresentationGraph) -> Self {
        ClassCache {
            g,
            memo: HashMap::new(),
        }
    }

    fn kind(&mut self, s: &[usize]) -> CoxeterKind {
        if let Some(&k) = self.memo.get(s) {
            return k;
        }
        let k = classify_coxeter_subset(&self.g.subgraph(s).expect("valid subset")).kind;
        self.memo.insert(s.to_vec(), k);
        k
    }

    fn spherical(&mut self, s: &[usize]) -> bool {
        let g = self.g;
        let is_clique = s
            .iter()
            .enumerate()
            .all(|(i, &a)| s[i + 1..].iter().all(|&b| g.adjacent(a, b)));
        is_clique && (s.len() <= 2 || self.kind(s) == CoxeterKind::Spherical)
    }
}

/// Subsets whose Coxeter group is finite: the empty set, single vertices and the
/// spherical cliques, ordered by size and then lexicographically.
pub fn spherical_subsets(g: &ExtendedPresentationGraph) -> Vec<Vec<usize>> {
    let mut cache = ClassCache::new(g);
    let mut out: Vec<Vec<usize>> = cliques(g, 0)
        .into_iter()
        .filter(|c| cache.spherical(c))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn is_triangle_free(g: &ExtendedPresentationGraph) -> bool {
    cliques(g, 3).into_iter().all(|c| c.len() < 3)
}

pub fn is_two_dimensional(g: &ExtendedPresentationGraph) -> bool {
    let mut cache = ClassCache::new(g);
    cliques(g, 3)
        .into_iter()
        .filter(|c| c.len() == 3)
        .all(|c| !cache.spherical(&c))
}

/// Every complete subgraph is spherical-type.
pub fn is_fc_type(g: &ExtendedPresentationGraph) -> bool {
    let mut cache = ClassCache::new(g);
    cliques(g, 3).into_iter().all(|c| cache.spherical(&c))
}

/// Some 4-cycle (not necessarily induced) has all four edges labeled 2.
pub fn has_all_two_square(g: &ExtendedPresentationGraph) -> bool {
    let n = g.vertex_count();
    let two = |a: usize, b: usize| g.edge_label(a, b) == Some(2);
    for u in 0..n {
        for w in u + 1..n {
            let common = (0..n)
                .filter(|&v| v != u && v != w && two(u, v) && two(v, w))
                .count();
            if common >= 2 {
                return true;
            }
        }
    }
    false
}

/// Connectivity of the graph joining vertices that do not commute (any pair other
/// than an edge labeled 2). A disconnected result is a join splitting.
pub fn is_irreducible(g: &ExtendedPresentationGraph) -> bool {
    irreducible_on(g, &(0..g.vertex_count()).collect::<Vec<_>>())
}

fn irreducible_on(g: &ExtendedPresentationGraph, s: &[usize]) -> bool {
    if s.len() <= 1 {
        return true;
    }
    let mut seen = vec![false; s.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..s.len() {
            if !seen[j] && g.edge_label(s[i], s[j]) != Some(2) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

/// Hyperbolicity of the Coxeter group of `g`: no irreducible affine subset with at
/// least three vertices, and no two disjoint infinite subsets commuting elementwise.
///
/// Graphs above `limit` vertices are undecided unless triangle-free, where only the
/// all-2 square matters.
pub fn is_hyperbolic_type(g: &ExtendedPresentationGraph, limit: usize) -> HyperbolicVerdict {
    let ids =
        |s: &[usize]| -> Vec<String> { s.iter().map(|&v| g.vertices()[v].id.clone()).collect() };
    let triangle_free = is_triangle_free(g);
    if !triangle_free && g.vertex_count() > limit {
        return HyperbolicVerdict {
            decision: Decision::Undecided,
            obstruction: None,
            method: "vertex limit exceeded",
        };
    }
    let method = if triangle_free {
        "triangle-free square test"
    } else {
        "subset scan"
    };
    let mut cache = ClassCache::new(g);
    let cl = cliques(g, 1);

    for c in cl.iter().filter(|c| c.len() >= 3) {
        if cache.kind(c) == CoxeterKind::Affine && irreducible_on(g, c) {
            return HyperbolicVerdict {
                decision: Decision::No,
                obstruction: Some(Obstruction::AffineSubset { vertices: ids(c) }),
                method,
            };
        }
    }

    // minimal non-spherical subsets: non-edges, and non-spherical cliques whose
    // maximal proper subcliques are all spherical
    let n = g.vertex_count();
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !g.adjacent(a, b) {
                minimal.push(vec![a, b]);
            }
        }
    }
    for c in cl.iter().filter(|c| c.len() >= 3) {
        if cache.spherical(c) {
            continue;
        }
        let all_faces_spherical = (0..c.len()).all(|i| {
            let mut f = c.clone();
            f.remove(i);
            cache.spherical(&f)
        });
        if all_faces_spherical {
            minimal.push(c.clone());
        }
    }
    for t in &minimal {
        let centraliser: Vec<usize> = (0..n)
            .filter(|v| !t.contains(v) && t.iter().all(|&u| g.edge_label(u, *v) == Some(2)))
            .collect();
        if centraliser.len() >= 2 && !cache.spherical(&centraliser) {
            return HyperbolicVerdict {
                decision: Decision::No,
                obstruction: Some(Obstruction::CommutingPair {
                    first: ids(t),
                    second: ids(&centraliser),
                }),
                method,
            };
        }
    }
    HyperbolicVerdict {
        decision: Decision::Yes,
        obstruction: None,
        method,
    }
}

fn edge_ref(g: &ExtendedPresentationGraph, e: &super::Edge) -> EdgeRef {
    let h = g.edge_h(e);
    EdgeRef {
        a: g.vertices()[e.a].id.clone(),
        b: g.vertices()[e.b].id.clone(),
        p_a: g.label(e.a),
        m: e.label,
        p_b: g.label(e.b),
        h: if *h.denom() == 1 {
            h.numer().to_string()
        } else {
            format!("{}/{}", h.numer(), h.denom())
        },
    }
}

pub fn compute_criteria_profile(g: &ExtendedPresentationGraph, limit: usize) -> CriteriaProfile {
    let one = num_rational::Ratio::from_integer(1i64);
    let mut peripheral = Vec::new();
    let mut poison = Vec::new();
    let mut equality = Vec::new();
    for e in g.edges() {
        let h = g.edge_h(e);
        let finite = g.label(e.a) != Label::Infinite && g.label(e.b) != Label::Infinite;
        if h <= one || !finite {
            peripheral.push(edge_ref(g, e));
        }
        if finite && h <= one {
            poison.push(edge_ref(g, e));
            if h == one {
                equality.push(edge_ref(g, e));
            }
        }
    }
    CriteriaProfile {
        is_two_dimensional: is_two_dimensional(g),
        is_triangle_free: is_triangle_free(g),
        has_all_two_square: has_all_two_square(g),
        is_hyperbolic_type: is_hyperbolic_type(g, limit),
        is_fc_type: is_fc_type(g),
        is_irreducible: is_irreducible(g),
        all_vertex_labels_finite: g.all_labels_finite(),
        peripheral_edges: peripheral,
        poison_edges: poison,
        equality_edges: equality,
    }
}
