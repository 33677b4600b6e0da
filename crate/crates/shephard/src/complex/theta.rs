use crate::dihedral::shephard_extension;
use crate::dihedral::{classify, ExtElement, Extension, FiniteShephard, Gen, SyllableWord};
use crate::error::{Error, Result};
use crate::triangle::{CosetGeometryBall, CosetKind};
use num_rational::Ratio;
use serde::{Serialize, Serializer};
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::hash::Hash;

/// Right multiplication by generator powers in some model of Sh(p, q, r).
trait CosetWalker {
    type Elt: Clone + Ord + Hash;
    fn one(&self) -> Self::Elt;
    fn right(&mut self, e: &Self::Elt, g: Gen, k: i64) -> Result<Self::Elt>;
}

impl CosetWalker for Extension {
    type Elt = ExtElement;

    fn one(&self) -> ExtElement {
        self.identity()
    }

    fn right(&mut self, e: &ExtElement, g: Gen, k: i64) -> Result<ExtElement> {
        self.walk(e, &[(g.index(), k)])
    }
}

impl CosetWalker for FiniteShephard {
    type Elt = u32;

    fn one(&self) -> u32 {
        0
    }

    fn right(&mut self, e: &u32, g: Gen, k: i64) -> Result<u32> {
        Ok(self.act(*e, g, k))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ThetaVertex {
    /// `S` for a coset of <s>, `T` for a coset of <t>.
    pub kind: Gen,
    pub depth: u32,
    /// A word for one element of the coset.
    pub witness: SyllableWord,
    /// Central coordinate of the least element of the coset (infinite groups only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z_exponent: Option<i64>,
}

#[derive(Debug, Clone)]
enum Keys {
    Infinite(Vec<ExtElement>),
    Finite(Vec<u32>),
}

fn ratio_string<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Ball in the bipartite graph on cosets of <s> and <t> in Sh(p, q, r), two cosets
/// being adjacent when they intersect. Vertex 0 is the coset <s>.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SphericalComplexBall {
    pub triple: [u32; 3],
    pub radius: u32,
    pub vertices: Vec<ThetaVertex>,
    pub edges: Vec<(u32, u32)>,
    #[serde(skip)]
    pub adjacency: Vec<Vec<u32>>,
    /// Edge length as a multiple of pi.
    #[serde(serialize_with = "ratio_string")]
    pub edge_length_over_pi: Ratio<i64>,
    /// No vertex lies outside the ball: the whole complex was built.
    pub complete: bool,
    #[serde(skip)]
    keys: Keys,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CycleWitness {
    pub length: usize,
    /// Vertex ids around the cycle.
    pub vertices: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QuotientCheck {
    pub vertices_mapped: bool,
    pub edges_mapped: bool,
    /// Neighbours of every interior vertex have distinct images.
    pub locally_injective: bool,
    pub image_vertices: usize,
    pub target_vertices: usize,
}

impl QuotientCheck {
    pub fn holds(&self) -> bool {
        self.vertices_mapped && self.edges_mapped && self.locally_injective
    }
}

struct Explored<E> {
    vertices: Vec<ThetaVertex>,
    keys: Vec<E>,
    edges: Vec<(u32, u32)>,
    complete: bool,
}

fn explore<W: CosetWalker>(
    walker: &mut W,
    orders: [u32; 2],
    radius: u32,
    budget: usize,
) -> Result<Explored<W::Elt>> {
    // the least element of the coset e<g>
    let key = |w: &mut W, e: &W::Elt, g: Gen| -> Result<W::Elt> {
        let mut best = e.clone();
        let mut h = e.clone();
        for _ in 1..orders[g.index()] {
            h = w.right(&h, g, 1)?;
            if h < best {
                best = h.clone();
            }
        }
        Ok(best)
    };
    let mut index: HashMap<(Gen, W::Elt), u32> = HashMap::new();
    let mut vertices = Vec::new();
    let mut keys = Vec::new();
    let mut reps = Vec::new();
    let one = walker.one();
    let base = key(walker, &one, Gen::S)?;
    index.insert((Gen::S, base.clone()), 0);
    keys.push(base);
    reps.push(one);
    vertices.push(ThetaVertex {
        kind: Gen::S,
        depth: 0,
        witness: SyllableWord::new(),
        z_exponent: None,
    });
    let mut edges = BTreeSet::new();
    let mut complete = true;
    let mut queue = VecDeque::from([0u32]);
    while let Some(v) = queue.pop_front() {
        let (kind, depth) = (vertices[v as usize].kind, vertices[v as usize].depth);
        let rep = reps[v as usize].clone();
        let other = kind.other();
        let mut h = rep;
        for k in 0..orders[kind.index()] as i64 {
            if k > 0 {
                h = walker.right(&h, kind, 1)?;
            }
            let hk = (other, key(walker, &h, other)?);
            let w = match index.get(&hk) {
                Some(&w) => w,
                None if depth >= radius => {
                    complete = false;
                    continue;
                }
                None => {
                    if vertices.len() >= budget {
                        return Err(Error::Budget(budget));
                    }
                    let w = vertices.len() as u32;
                    let mut witness = vertices[v as usize].witness.clone();
                    witness.push(kind, k);
                    index.insert(hk.clone(), w);
                    keys.push(hk.1);
                    reps.push(h.clone());
                    vertices.push(ThetaVertex {
                        kind: other,
                        depth: depth + 1,
                        witness,
                        z_exponent: None,
                    });
                    queue.push_back(w);
                    w
                }
            };
            edges.insert((v.min(w), v.max(w)));
        }
    }
    Ok(Explored {
        vertices,
        keys,
        edges: edges.into_iter().collect(),
        complete,
    })
}

/// Breadth-first ball of the given radius around the coset <s>. Infinite groups are
/// walked through the central extension; finite ones through their closure.
pub fn build_theta_hat_ball(
    p: u32,
    q: u32,
    r: u32,
    radius: u32,
    budget: usize,
) -> Result<SphericalComplexBall> {
    let c = classify(p, q, r)?;
    let orders = [p, r];
    let (vertices, keys, edges, complete) = if c.regime.is_infinite() {
        let mut ext = shephard_extension(p, q, r, budget)?;
        let x = explore(&mut ext, orders, radius, budget)?;
        let mut vertices = x.vertices;
        for (v, k) in vertices.iter_mut().zip(&x.keys) {
            v.z_exponent = Some(k.n);
        }
        (vertices, Keys::Infinite(x.keys), x.edges, x.complete)
    } else {
        let mut fin = if q == 2 {
            FiniteShephard::product(p, r)
        } else {
            let mut ext = shephard_extension(p, q, r, budget)?;
            FiniteShephard::closure(&mut ext, budget)?
        };
        let x = explore(&mut fin, orders, radius, budget)?;
        (x.vertices, Keys::Finite(x.keys), x.edges, x.complete)
    };
    let mut adjacency = vec![Vec::new(); vertices.len()];
    for &(a, b) in &edges {
        adjacency[a as usize].push(b);
        adjacency[b as usize].push(a);
    }
    Ok(SphericalComplexBall {
        triple: [p, q, r],
        radius,
        vertices,
        edges,
        adjacency,
        edge_length_over_pi: Ratio::new(1, q as i64),
        complete,
        keys,
    })
}

impl SphericalComplexBall {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn count_of(&self, kind: Gen) -> usize {
        self.vertices.iter().filter(|v| v.kind == kind).count()
    }

    pub fn is_bipartite(&self) -> bool {
        self.edges
            .iter()
            .all(|&(a, b)| self.vertices[a as usize].kind != self.vertices[b as usize].kind)
    }

    /// Vertices strictly inside the ball have valence p on <s>-cosets and r on
    /// <t>-cosets.
    pub fn interior_valences_ok(&self) -> bool {
        let [p, _, r] = self.triple;
        self.vertices.iter().enumerate().all(|(i, v)| {
            if v.depth >= self.radius {
                return true;
            }
            let want = if v.kind == Gen::S { p } else { r };
            self.adjacency[i].len() == want as usize
        })
    }

    pub fn girth(&self) -> Option<CycleWitness> {
        girth_within_ball(&self.adjacency)
    }

    /// Compare with the coset geometry of the central quotient: forgetting the central
    /// coordinate must send vertices and edges to vertices and edges, injectively on
    /// the neighbours of each interior vertex.
    pub fn check_quotient(&self, budget: usize) -> Result<QuotientCheck> {
        let keys = match &self.keys {
            Keys::Infinite(k) => k,
            Keys::Finite(_) => {
                return Err(Error::Inapplicable(
                    "finite groups have no central quotient ball".into(),
                ))
            }
        };
        let [p, q, r] = self.triple;
        let d = CosetGeometryBall::build(p, q, r, self.radius, budget)?;
        let kind = |g: Gen| {
            if g == Gen::S {
                CosetKind::Sigma
            } else {
                CosetKind::Tau
            }
        };
        let image: Vec<Option<u32>> = self
            .vertices
            .iter()
            .zip(keys)
            .map(|(v, k)| d.lookup(kind(v.kind), &k.delta))
            .collect();
        let vertices_mapped = image.iter().all(Option::is_some);
        let target: BTreeSet<(u32, u32)> = d.edges.iter().copied().collect();
        let edges_mapped = vertices_mapped
            && self.edges.iter().all(|&(a, b)| {
                let (x, y) = (image[a as usize].unwrap(), image[b as usize].unwrap());
                target.contains(&(x.min(y), x.max(y)))
            });
        let locally_injective = vertices_mapped
            && self.vertices.iter().enumerate().all(|(i, v)| {
                if v.depth >= self.radius {
                    return true;
                }
                let imgs: BTreeSet<u32> = self.adjacency[i]
                    .iter()
                    .map(|&w| image[w as usize].unwrap())
                    .collect();
                imgs.len() == self.adjacency[i].len()
            });
        let image_vertices = image.iter().flatten().collect::<BTreeSet<_>>().len();
        Ok(QuotientCheck {
            vertices_mapped,
            edges_mapped,
            locally_injective,
            image_vertices,
            target_vertices: d.vertices.len(),
        })
    }

    /// Element ids of the least coset members, for finite groups.
    pub fn finite_keys(&self) -> Option<&[u32]> {
        match &self.keys {
            Keys::Finite(k) => Some(k),
            Keys::Infinite(_) => None,
        }
    }
}

/// Shortest cycle of a graph by breadth-first search from every vertex, each search
/// cut off once it cannot beat the best cycle so far.
pub fn girth_within_ball(adjacency: &[Vec<u32>]) -> Option<CycleWitness> {
    let n = adjacency.len();
    let mut best: Option<(usize, u32, u32, u32)> = None;
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![u32::MAX; n];
    let mut touched = Vec::new();
    for root in 0..n as u32 {
        for &v in &touched {
            dist[v as usize] = u32::MAX;
            parent[v as usize] = u32::MAX;
        }
        touched.clear();
        dist[root as usize] = 0;
        touched.push(root);
        let mut queue = VecDeque::from([root]);
        'bfs: while let Some(u) = queue.pop_front() {
            let du = dist[u as usize] as usize;
            if let Some((b, ..)) = best {
                if 2 * du + 1 >= b {
                    break;
                }
            }
            for &w in &adjacency[u as usize] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = du as u32 + 1;
                    parent[w as usize] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u as usize] != w {
                    let len = du + dist[w as usize] as usize + 1;
                    if best.is_none_or(|(b, ..)| len < b) {
                        best = Some((len, root, u, w));
                    }
                    if len == 2 * du + 1 {
                        break 'bfs;
                    }
                }
            }
        }
    }
    let (length, root, u, w) = best?;
    // rebuild both tree paths from the recorded root
    let path = |mut x: u32| {
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        dist[root as usize] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            for &b in &adjacency[a as usize] {
                if dist[b as usize] == u32::MAX {
                    dist[b as usize] = dist[a as usize] + 1;
                    parent[b as usize] = a;
                    queue.push_back(b);
                }
            }
        }
        let mut out = vec![x];
        while x != root {
            x = parent[x as usize];
            out.push(x);
        }
        out.reverse();
        out
    };
    let mut vertices = path(u);
    let mut back = path(w);
    back.remove(0);
    back.reverse();
    vertices.extend(back);
    Some(CycleWitness { length, vertices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::DEFAULT_BUDGET;

    fn cycle(n: u32) -> Vec<Vec<u32>> {
        (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect()
    }

    #[test]
    fn girth_of_small_graphs() {
        let g = girth_within_ball(&cycle(6)).unwrap();
        assert_eq!(g.length, 6);
        assert_eq!(g.vertices.len(), 6);
        let tree = vec![vec![1, 2], vec![0, 3], vec![0], vec![1]];
        assert!(girth_within_ball(&tree).is_none());
        // a 4-cycle with a pendant path hanging off it
        let mut g = cycle(4);
        g[0].push(4);
        g.push(vec![0, 5]);
        g.push(vec![4]);
        assert_eq!(girth_within_ball(&g).unwrap().length, 4);
        assert_eq!(girth_within_ball(&cycle(5)).unwrap().length, 5);
    }

    #[test]
    fn finite_complex_is_complete() {
        let b = build_theta_hat_ball(3, 3, 3, 20, DEFAULT_BUDGET).unwrap();
        assert!(b.complete);
        assert_eq!(b.count_of(Gen::S), 8);
        assert_eq!(b.count_of(Gen::T), 8);
        assert_eq!(b.edges.len(), 24);
        assert!(b.is_bipartite());
        assert!(b.girth().unwrap().length >= 6);
        let b = build_theta_hat_ball(3, 2, 4, 20, DEFAULT_BUDGET).unwrap();
        assert!(b.complete);
        assert_eq!((b.count_of(Gen::S), b.count_of(Gen::T)), (4, 3));
        assert_eq!(b.girth().unwrap().length, 4);
    }

    #[test]
    fn small_ball_for_3_6_3() {
        let b = build_theta_hat_ball(3, 6, 3, 8, DEFAULT_BUDGET).unwrap();
        assert!(b.is_bipartite());
        assert!(b.interior_valences_ok());
        assert!(!b.complete);
        assert!(b.girth().is_none_or(|c| c.length >= 12));
        let check = b.check_quotient(DEFAULT_BUDGET).unwrap();
        assert!(check.holds(), "{check:?}");
        // witnesses name elements of their cosets
        let v = &b.vertices[b.vertex_count() - 1];
        assert_eq!(v.depth, 8);
    }
}
