use crate::algebra::ExactMatrix;
use crate::error::{Error, Result};
use crate::triangle::{
    fill_loop, invert_word, CayleyBall, FaceType, GeometryKind, Letter, TriangleGroup,
};
use std::collections::HashMap;
use std::sync::Arc;

/// Word over an extension alphabet: (letter index, exponent) pairs.
pub type GenWord = Vec<(usize, i64)>;

/// A generator of a central extension: a path in the triangle group's Cayley graph
/// together with a shift of the central coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterSpec {
    pub name: String,
    pub path: Vec<Letter>,
    pub shift: i64,
}

impl LetterSpec {
    pub fn new(name: &str, path: Vec<Letter>, shift: i64) -> Self {
        LetterSpec {
            name: name.to_string(),
            path,
            shift,
        }
    }
}

/// Element of the extension: triangle-group image and central coordinate measured
/// against the canonical section word of the image.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElement {
    pub delta: ExactMatrix,
    pub n: i64,
}

/// Central extension of a triangle group by Z (or Z/N when the group is finite),
/// classified by integer weights on the P, R and Q2 face types. The central
/// coordinate of a closed path is the weighted winding of its filling.
#[derive(Debug, Clone)]
pub struct Extension {
    group: Arc<TriangleGroup>,
    weights: [i64; 3],
    letters: Vec<LetterSpec>,
    modulus: Option<i64>,
    budget: usize,
    sections: HashMap<ExactMatrix, Vec<Letter>>,
    offsets: HashMap<(ExactMatrix, Letter), i64>,
}

impl Extension {
    pub fn new(
        group: Arc<TriangleGroup>,
        weights: [i64; 3],
        letters: Vec<LetterSpec>,
        budget: usize,
    ) -> Result<Self> {
        let modulus = if group.kind() == GeometryKind::Spherical {
            let ball = CayleyBall::new(group.clone(), u32::MAX, budget)?;
            let t = ball.faces();
            let [wp, wr, wq] = weights;
            // fundamental cycle: +1 on P and R faces, -1 on Q2 faces
            let n = wp * t.count(FaceType::P) as i64 + wr * t.count(FaceType::R) as i64
                - wq * t.count(FaceType::Q2) as i64;
            (n != 0).then_some(n.abs())
        } else {
            None
        };
        for l in &letters {
            group.eval(&l.path)?;
        }
        Ok(Extension {
            group,
            weights,
            letters,
            modulus,
            budget,
            sections: HashMap::new(),
            offsets: HashMap::new(),
        })
    }

    pub fn group(&self) -> &Arc<TriangleGroup> {
        &self.group
    }

    pub fn weights(&self) -> [i64; 3] {
        self.weights
    }

    pub fn letters(&self) -> &[LetterSpec] {
        &self.letters
    }

    /// Order of the centre's image when the triangle group is finite.
    pub fn modulus(&self) -> Option<i64> {
        self.modulus
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    fn reduce(&self, n: i64) -> i64 {
        match self.modulus {
            Some(m) => n.rem_euclid(m),
            None => n,
        }
    }

    fn letter(&self, i: usize) -> Result<&LetterSpec> {
        self.letters
            .get(i)
            .ok_or_else(|| Error::InvalidInput(format!("letter index {i} out of range")))
    }

    /// Concatenated triangle-group path and total shift of a word.
    pub fn path_of(&self, w: &[(usize, i64)]) -> Result<(Vec<Letter>, i64)> {
        let mut path = Vec::new();
        let mut shift = 0i64;
        for &(i, e) in w {
            let l = self.letter(i)?;
            let piece = if e < 0 {
                invert_word(&l.path)
            } else {
                l.path.clone()
            };
            for _ in 0..e.unsigned_abs() {
                path.extend_from_slice(&piece);
            }
            shift += l.shift * e;
        }
        Ok((path, shift))
    }

    pub fn image(&self, w: &[(usize, i64)]) -> Result<ExactMatrix> {
        let (path, _) = self.path_of(w)?;
        self.group.eval(&path)
    }

    /// Weighted winding of a closed path starting at the identity.
    pub fn loop_value(&self, path: &[Letter]) -> Result<i64> {
        let f = fill_loop(&self.group, self.group.identity(), path, self.budget)?;
        Ok(self.reduce(f.weighted(self.weights)))
    }

    /// Central coordinate of a word whose image is trivial, `None` otherwise.
    pub fn central_value(&self, w: &[(usize, i64)]) -> Result<Option<i64>> {
        let (path, shift) = self.path_of(w)?;
        if !self.group.is_identity(&self.group.eval(&path)?) {
            return Ok(None);
        }
        Ok(Some(self.reduce(self.loop_value(&path)? + shift)))
    }

    pub fn is_trivial(&self, w: &[(usize, i64)]) -> Result<bool> {
        Ok(self.central_value(w)? == Some(0))
    }

    pub fn identity(&self) -> ExtElement {
        ExtElement {
            delta: self.group.identity().clone(),
            n: 0,
        }
    }

    pub fn section(&mut self, g: &ExactMatrix) -> Result<Vec<Letter>> {
        if let Some(w) = self.sections.get(g) {
            return Ok(w.clone());
        }
        let w = self.group.normal_word(g)?;
        self.sections.insert(g.clone(), w.clone());
        Ok(w)
    }

    /// Normal form by filling `path(w) . section(image)^-1` directly.
    pub fn normalize(&mut self, w: &[(usize, i64)]) -> Result<ExtElement> {
        let (mut path, shift) = self.path_of(w)?;
        let delta = self.group.eval(&path)?;
        let sec = self.section(&delta)?;
        path.extend(invert_word(&sec));
        let n = self.reduce(self.loop_value(&path)? + shift);
        Ok(ExtElement { delta, n })
    }

    /// Change of the central coordinate along the edge from g by x: the winding of
    /// `section(g) . x . section(gx)^-1`.
    pub fn offset(&mut self, g: &ExactMatrix, x: Letter) -> Result<i64> {
        if let Some(&v) = self.offsets.get(&(g.clone(), x)) {
            return Ok(v);
        }
        let gx = self.group.step(g, x)?;
        let mut path = self.section(g)?;
        path.push(x);
        path.extend(invert_word(&self.section(&gx)?));
        let v = self.loop_value(&path)?;
        self.offsets.insert((g.clone(), x), v);
        Ok(v)
    }

    pub fn step_path(&mut self, e: &ExtElement, x: Letter) -> Result<ExtElement> {
        let off = self.offset(&e.delta, x)?;
        let delta = self.group.step(&e.delta, x)?;
        Ok(ExtElement {
            delta,
            n: self.reduce(e.n + off),
        })
    }

    /// Right multiplication by a word, one edge at a time through cached offsets.
    pub fn walk(&mut self, e: &ExtElement, w: &[(usize, i64)]) -> Result<ExtElement> {
        let (path, shift) = self.path_of(w)?;
        let mut cur = e.clone();
        for x in path {
            cur = self.step_path(&cur, x)?;
        }
        cur.n = self.reduce(cur.n + shift);
        Ok(cur)
    }

    /// Number of cached edge offsets.
    pub fn cached_offsets(&self) -> usize {
        self.offsets.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::{DEFAULT_BUDGET, LA, LA_INV, LC, LC_INV};

    fn sh(p: u32, q: u32, r: u32) -> Extension {
        let g = Arc::new(TriangleGroup::new(p, q, r).unwrap());
        let letters = vec![
            LetterSpec::new("s", vec![LA], 0),
            LetterSpec::new("t", vec![LC], 0),
        ];
        Extension::new(g, [0, 0, 1], letters, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn walker_matches_direct_normal_form() {
        let mut e = sh(3, 3, 3);
        let words: Vec<GenWord> = vec![
            vec![(0, 1), (1, 1), (0, 1), (1, 1), (0, 1), (1, 1)],
            vec![(0, 2), (1, -1), (0, 1), (1, 2), (0, -1)],
            vec![(1, 1), (0, 1), (1, -1), (0, -2), (1, 1), (0, 1), (1, 1)],
            vec![
                (0, 1),
                (1, 1),
                (0, 1),
                (1, 1),
                (0, 1),
                (1, 1),
                (1, -1),
                (0, -1),
            ],
        ];
        for w in &words {
            let direct = e.normalize(w).unwrap();
            let id = e.identity();
            let walked = e.walk(&id, w).unwrap();
            assert_eq!(direct, walked);
        }
        assert_eq!(
            e.normalize(&words[0]).unwrap(),
            ExtElement {
                delta: e.group().identity().clone(),
                n: 1
            }
        );
        assert!(e.cached_offsets() > 0);
    }

    #[test]
    fn finite_groups_reduce_mod_the_centre_order() {
        // Sh(3,6,2) over the (3,3,2) rotation group: 4 Q2 faces
        let g = Arc::new(TriangleGroup::new(3, 3, 2).unwrap());
        let letters = vec![
            LetterSpec::new("s", vec![LA], 0),
            LetterSpec::new("t", vec![LC], 0),
        ];
        let e = Extension::new(g, [0, 0, 1], letters, DEFAULT_BUDGET).unwrap();
        assert_eq!(e.modulus(), Some(4));
        let z = vec![(0, 1), (1, 1), (0, 1), (1, 1), (0, 1), (1, 1)];
        assert_eq!(e.central_value(&z).unwrap(), Some(1));
        let mut z4 = Vec::new();
        for _ in 0..4 {
            z4.extend(z.iter().copied());
        }
        assert_eq!(e.central_value(&z4).unwrap(), Some(0));
    }

    #[test]
    fn letter_paths_and_shifts() {
        let g = Arc::new(TriangleGroup::new(2, 3, 7).unwrap());
        let letters = vec![LetterSpec::new("b", vec![LA_INV, LC_INV], 42)];
        let e = Extension::new(g, [42, 42, 84], letters, DEFAULT_BUDGET).unwrap();
        let (path, shift) = e.path_of(&[(0, -2)]).unwrap();
        assert_eq!(path, vec![LC, LA, LC, LA]);
        assert_eq!(shift, -84);
        // b^3 = z^42 in the lattice extension
        assert_eq!(e.central_value(&[(0, 3)]).unwrap(), Some(42));
    }
}
