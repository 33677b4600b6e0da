use super::group::{Letter, TriangleGroup, LA, LC};
use crate::algebra::ExactMatrix;
use crate::error::{Error, Result};
use num_rational::Ratio;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CosetKind {
    Sigma,
    Tau,
}

/// Ball in the bipartite graph on cosets of the two rotation subgroups generated by
/// sigma and tau inside the image of a dihedral Shephard group in a triangle group.
///
/// For an even edge label q the image is the full (p, q/2, r) rotation group with
/// sigma = a, tau = c; for odd q it is generated by a and cac inside (p, q, 2).
#[derive(Debug, Clone)]
pub struct CosetGeometryBall {
    pub group: Arc<TriangleGroup>,
    pub sigma_word: Vec<Letter>,
    pub tau_word: Vec<Letter>,
    pub vertices: Vec<(CosetKind, ExactMatrix)>,
    pub depth: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
    /// Complete faces as vertex cycles starting at a sigma coset.
    pub faces: Vec<Vec<u32>>,
    pub radius: u32,
    index: HashMap<(CosetKind, ExactMatrix), u32>,
}

/// Triangle group and sigma/tau words for the image of Sh(p, q, r).
pub fn quotient_data(p: u32, q: u32, r: u32) -> Result<(TriangleGroup, Vec<Letter>, Vec<Letter>)> {
    if q.is_multiple_of(2) {
        Ok((TriangleGroup::new(p, q / 2, r)?, vec![LA], vec![LC]))
    } else {
        if p != r {
            return Err(Error::InvalidInput(format!(
                "odd edge label {q} requires equal vertex labels, got {p} and {r}"
            )));
        }
        Ok((TriangleGroup::new(p, q, 2)?, vec![LA], vec![LC, LA, LC]))
    }
}

struct Cyclic {
    powers: Vec<ExactMatrix>,
}

impl Cyclic {
    fn new(group: &TriangleGroup, word: &[Letter], order: u32) -> Result<Self> {
        let g = group.eval(word)?;
        let mut powers = vec![group.identity().clone()];
        for _ in 1..order {
            let last = powers.last().expect("nonempty");
            powers.push(group.mul(last, &g)?);
        }
        Ok(Cyclic { powers })
    }

    /// Least element of the coset `g<x>` in the matrix order.
    fn key(&self, group: &TriangleGroup, g: &ExactMatrix) -> Result<ExactMatrix> {
        let mut best: Option<ExactMatrix> = None;
        for x in &self.powers {
            let h = group.mul(g, x)?;
            if best.as_ref().is_none_or(|b| h < *b) {
                best = Some(h);
            }
        }
        Ok(best.expect("at least the identity power"))
    }
}

impl CosetGeometryBall {
    pub fn build(p: u32, q: u32, r: u32, radius: u32, budget: usize) -> Result<Self> {
        let h = Ratio::new(1, p as i64) + Ratio::new(2, q as i64) + Ratio::new(1, r as i64);
        if h > Ratio::from_integer(1) {
            return Err(Error::Inapplicable(format!(
                "Sh({p},{q},{r}) is finite; the coset geometry is built for infinite groups"
            )));
        }
        let (group, sigma_word, tau_word) = quotient_data(p, q, r)?;
        let group = Arc::new(group);
        let sigma = Cyclic::new(&group, &sigma_word, p)?;
        let tau_order = if q.is_multiple_of(2) { r } else { p };
        let tau = Cyclic::new(&group, &tau_word, tau_order)?;
        let cyclic = |k: CosetKind| if k == CosetKind::Sigma { &sigma } else { &tau };

        let mut ball = CosetGeometryBall {
            group: group.clone(),
            sigma_word,
            tau_word,
            vertices: Vec::new(),
            depth: Vec::new(),
            edges: Vec::new(),
            faces: Vec::new(),
            radius,
            index: HashMap::new(),
        };
        let base = sigma.key(&group, group.identity())?;
        ball.insert((CosetKind::Sigma, base), 0);
        let mut edges = BTreeSet::new();
        let mut queue = VecDeque::from([0u32]);
        while let Some(v) = queue.pop_front() {
            if ball.depth[v as usize] >= radius {
                continue;
            }
            let (kind, rep) = ball.vertices[v as usize].clone();
            let other = match kind {
                CosetKind::Sigma => CosetKind::Tau,
                CosetKind::Tau => CosetKind::Sigma,
            };
            for x in &cyclic(kind).powers {
                let h = group.mul(&rep, x)?;
                let key = (other, cyclic(other).key(&group, &h)?);
                let w = match ball.index.get(&key) {
                    Some(&w) => w,
                    None => {
                        if ball.vertices.len() >= budget {
                            return Err(Error::Budget(budget));
                        }
                        let w = ball.insert(key, ball.depth[v as usize] + 1);
                        queue.push_back(w);
                        w
                    }
                };
                edges.insert((v.min(w), v.max(w)));
            }
        }
        ball.edges = edges.into_iter().collect();
        ball.trace_faces(&sigma, &tau)?;
        Ok(ball)
    }

    fn insert(&mut self, key: (CosetKind, ExactMatrix), depth: u32) -> u32 {
        let id = self.vertices.len() as u32;
        self.index.insert(key.clone(), id);
        self.vertices.push(key);
        self.depth.push(depth);
        id
    }

    fn trace_faces(&mut self, sigma: &Cyclic, tau: &Cyclic) -> Result<()> {
        let group = self.group.clone();
        let s = group.eval(&self.sigma_word)?;
        let t = group.eval(&self.tau_word)?;
        let mut seen = BTreeSet::new();
        for v in 0..self.vertices.len() {
            let (kind, rep) = self.vertices[v].clone();
            if kind != CosetKind::Sigma {
                continue;
            }
            for x in &sigma.powers {
                // the cycle h<s>, hs<t>, hst<s>, hsts<t>, ... closes when (st)^k = 1
                let mut h = group.mul(&rep, x)?;
                let start = h.clone();
                let mut cycle = Vec::new();
                let mut complete = false;
                let (a, b, c) = group.orders();
                for step in 0..4 * (a + b + c) {
                    let (k, cy, gen) = if step % 2 == 0 {
                        (CosetKind::Sigma, sigma, &s)
                    } else {
                        (CosetKind::Tau, tau, &t)
                    };
                    match self.index.get(&(k, cy.key(&group, &h)?)) {
                        Some(&w) => cycle.push(w),
                        None => break,
                    }
                    h = group.mul(&h, gen)?;
                    if step % 2 == 1 && h == start {
                        complete = true;
                        break;
                    }
                }
                if !complete {
                    continue;
                }
                let mut sorted = cycle.clone();
                sorted.sort_unstable();
                if seen.insert(sorted) {
                    self.faces.push(cycle);
                }
            }
        }
        Ok(())
    }

    pub fn lookup(&self, kind: CosetKind, key: &ExactMatrix) -> Option<u32> {
        self.index.get(&(kind, key.clone())).copied()
    }

    pub fn is_bipartite(&self) -> bool {
        self.edges
            .iter()
            .all(|&(a, b)| self.vertices[a as usize].0 != self.vertices[b as usize].0)
    }

    /// Sizes of the complete faces, sorted and deduplicated.
    pub fn face_sizes(&self) -> Vec<usize> {
        let s: BTreeSet<usize> = self.faces.iter().map(Vec::len).collect();
        s.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::patch::DEFAULT_BUDGET;

    #[test]
    fn hexagonal_faces_for_3_6_3() {
        let b = CosetGeometryBall::build(3, 6, 3, 4, DEFAULT_BUDGET).unwrap();
        assert!(b.is_bipartite());
        assert!(!b.faces.is_empty());
        assert_eq!(b.face_sizes(), vec![6]);
        // the base coset meets p cosets of the other type
        assert_eq!(b.edges.iter().filter(|e| e.0 == 0).count(), 3);
    }

    #[test]
    fn even_labels_give_q_gons() {
        for (p, q, r) in [(4, 4, 4), (4, 6, 4), (2, 12, 3)] {
            let b = CosetGeometryBall::build(p, q, r, 2 * q / 2 + 2, DEFAULT_BUDGET).unwrap();
            assert!(b.is_bipartite());
            assert_eq!(b.face_sizes(), vec![q as usize], "({p},{q},{r})");
        }
    }

    #[test]
    fn odd_label_generators_fill_the_triangle_group() {
        // (a cac)^((q-1)/2) a = c, so a and cac generate all of (p, q, 2)
        let (g, _, _) = quotient_data(6, 3, 6).unwrap();
        let w: Vec<Letter> = [vec![LA, LC, LA, LC]; 1]
            .concat()
            .into_iter()
            .chain([LA])
            .collect();
        assert_eq!(g.eval(&w).unwrap(), *g.generator(LC));
        let b = CosetGeometryBall::build(6, 3, 6, 6, DEFAULT_BUDGET).unwrap();
        assert!(b.is_bipartite());
        assert_eq!(b.face_sizes(), vec![6]);
    }

    #[test]
    fn finite_triples_are_rejected() {
        assert!(matches!(
            CosetGeometryBall::build(3, 3, 3, 2, DEFAULT_BUDGET),
            Err(Error::Inapplicable(_))
        ));
    }
}
