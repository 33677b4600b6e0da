use super::group::{Letter, TriangleGroup, LA, LA_INV, LC, LC_INV};
use super::patch::{collect_filling, edge_id, FaceTable, FaceType, Filling, Patch};
use crate::algebra::ExactMatrix;
use crate::error::Result;
use serde::Serialize;
use std::sync::Arc;

/// Word-length ball around the identity in the Cayley graph of a triangle group.
///
/// Vertices are numbered in shortlex order of their words over `a A c C`, so the
/// search tree gives a canonical section and growing the ball never renumbers.
#[derive(Debug, Clone)]
pub struct CayleyBall {
    group: Arc<TriangleGroup>,
    patch: Patch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VertexFigureReport {
    pub interior_vertices: usize,
    pub matching: usize,
    pub failures: Vec<u32>,
}

impl CayleyBall {
    pub fn new(group: Arc<TriangleGroup>, radius: u32, budget: usize) -> Result<Self> {
        let mut patch = Patch::new(&[group.identity().clone()], budget);
        patch.grow(&group, radius)?;
        Ok(CayleyBall { group, patch })
    }

    pub fn group(&self) -> &Arc<TriangleGroup> {
        &self.group
    }

    pub fn patch(&self) -> &Patch {
        &self.patch
    }

    pub fn radius(&self) -> u32 {
        self.patch.radius()
    }

    pub fn len(&self) -> usize {
        self.patch.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patch.is_empty()
    }

    /// Whole group enumerated.
    pub fn is_complete(&self) -> bool {
        self.patch.is_exhausted()
    }

    pub fn ensure_radius(&mut self, radius: u32) -> Result<()> {
        if radius > self.patch.radius() && !self.patch.is_exhausted() {
            self.patch.grow(&self.group, radius)?;
        }
        Ok(())
    }

    pub fn id_of(&self, g: &ExactMatrix) -> Option<u32> {
        self.patch.lookup(g)
    }

    pub fn element(&self, id: u32) -> &ExactMatrix {
        self.patch.element(id)
    }

    /// Shortlex word of the element.
    pub fn witness(&self, id: u32) -> Vec<Letter> {
        self.patch.witness(id)
    }

    pub fn word_length(&self, id: u32) -> u32 {
        self.patch.depth(id)
    }

    pub fn neighbor(&self, id: u32, x: Letter) -> Option<u32> {
        self.patch.neighbor(id, x)
    }

    /// Locate the element a word evaluates to, growing the ball to the word's length.
    pub fn locate(&mut self, word: &[Letter]) -> Result<u32> {
        self.ensure_radius(word.len() as u32)?;
        let mut v = 0u32;
        for &x in word {
            v = self
                .patch
                .neighbor(v, x)
                .expect("ball covers the word length");
        }
        Ok(v)
    }

    pub fn faces(&self) -> FaceTable {
        self.patch.faces(&self.group)
    }

    /// (V, E, F) with F counting complete faces only.
    pub fn euler_counts(&self, table: &FaceTable) -> (usize, usize, usize) {
        (self.patch.len(), self.patch.edge_count(), table.faces.len())
    }

    /// Check the faces around each vertex whose four faces are complete: one P, one R
    /// and two distinct Q2, meeting along the expected edges.
    pub fn vertex_figures(&self, table: &FaceTable) -> VertexFigureReport {
        let mut report = VertexFigureReport {
            interior_vertices: 0,
            matching: 0,
            failures: Vec::new(),
        };
        for v in 0..self.patch.len() as u32 {
            let n = |x: Letter| self.patch.neighbor(v, x);
            let (Some(_), Some(va_inv), Some(_), Some(vc_inv)) =
                (n(LA), n(LA_INV), n(LC), n(LC_INV))
            else {
                continue;
            };
            let out_a = edge_id(v, LA);
            let out_c = edge_id(v, LC);
            let in_a = edge_id(va_inv, LA);
            let in_c = edge_id(vc_inv, LC);
            let faces = [
                table.own_face(out_a),
                table.q2_face(out_a),
                table.own_face(out_c),
                table.q2_face(out_c),
            ];
            if faces.iter().any(Option::is_none) {
                continue;
            }
            report.interior_vertices += 1;
            let [p, qa, r, qc] = faces.map(Option::unwrap);
            let kinds = [p, qa, r, qc].map(|f| table.faces[f as usize].kind);
            let ok = kinds == [FaceType::P, FaceType::Q2, FaceType::R, FaceType::Q2]
                && qa != qc
                && table.own_face(in_a) == Some(p)
                && table.q2_face(in_c) == Some(qa)
                && table.own_face(in_c) == Some(r)
                && table.q2_face(in_a) == Some(qc);
            if ok {
                report.matching += 1;
            } else {
                report.failures.push(v);
            }
        }
        report
    }

    /// Winding numbers of the loop read from the identity, computed on this ball.
    pub fn face_winding(&self, table: &FaceTable, word: &[Letter]) -> Result<Filling> {
        let chain = self.patch.path_chain(0, word)?;
        let closed = self.patch.is_exhausted();
        let values = table.fill(&chain, closed)?;
        Ok(collect_filling(&self.patch, table, &values, closed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::triangle::group::parse_letters;
    use crate::triangle::patch::DEFAULT_BUDGET;

    fn ball(p: u32, q: u32, r: u32, radius: u32) -> CayleyBall {
        CayleyBall::new(
            Arc::new(TriangleGroup::new(p, q, r).unwrap()),
            radius,
            DEFAULT_BUDGET,
        )
        .unwrap()
    }

    #[test]
    fn radius_one() {
        assert_eq!(ball(3, 3, 3, 1).len(), 5);
        // a = a^-1 when p = 2
        assert_eq!(ball(2, 3, 7, 1).len(), 4);
    }

    #[test]
    fn finite_closure_orders() {
        assert_eq!(ball(2, 3, 5, 40).len(), 60);
        assert!(ball(2, 3, 5, 40).is_complete());
        assert_eq!(ball(2, 3, 3, 40).len(), 12);
        assert_eq!(ball(2, 3, 4, 40).len(), 24);
        assert_eq!(ball(3, 2, 2, 40).len(), 6);
    }

    #[test]
    fn shortlex_witnesses_reevaluate() {
        let b = ball(2, 3, 7, 8);
        let g = b.group().clone();
        for id in (0..b.len() as u32).step_by(7) {
            let w = b.witness(id);
            assert_eq!(w.len() as u32, b.word_length(id));
            assert_eq!(&g.eval(&w).unwrap(), b.element(id));
        }
    }

    #[test]
    fn euler_characteristic_and_vertex_figures() {
        for (p, q, r, radius) in [
            (3, 3, 3, 8),
            (2, 3, 7, 9),
            (4, 3, 4, 6),
            (2, 6, 3, 10),
            (4, 2, 4, 8),
        ] {
            let b = ball(p, q, r, radius);
            let t = b.faces();
            let (v, e, f) = b.euler_counts(&t);
            assert_eq!(v as i64 - e as i64 + f as i64, 1, "({p},{q},{r})");
            let vf = b.vertex_figures(&t);
            assert!(vf.interior_vertices > 0);
            assert!(vf.failures.is_empty(), "({p},{q},{r})");
        }
    }

    #[test]
    fn winding_on_the_ball() {
        let b = ball(3, 3, 3, 8);
        let t = b.faces();
        let f = b
            .face_winding(&t, &parse_letters("acacac").unwrap())
            .unwrap();
        assert_eq!(f.totals, [0, 0, 1]);
        let far = [LA, LC_INV].repeat(8);
        let mut w = far.clone();
        w.extend(crate::triangle::group::invert_word(&far));
        assert!(matches!(b.face_winding(&t, &w), Err(Error::BallTooSmall)));
    }
}
