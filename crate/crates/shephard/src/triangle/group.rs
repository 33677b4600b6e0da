use crate::algebra::{CyclotomicReal, ExactMatrix, MatrixRing, RealCyclotomicField};
use crate::error::{Error, Result};
use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;
use std::fmt;

/// Letters of the Cayley graph: a, a^-1, c, c^-1.
pub type Letter = u8;
pub const LA: Letter = 0;
pub const LA_INV: Letter = 1;
pub const LC: Letter = 2;
pub const LC_INV: Letter = 3;

pub fn inverse_letter(x: Letter) -> Letter {
    x ^ 1
}

pub fn letter_char(x: Letter) -> char {
    ['a', 'A', 'c', 'C'][x as usize]
}

pub fn word_string(w: &[Letter]) -> String {
    w.iter().map(|&x| letter_char(x)).collect()
}

/// Parse a word over `a A c C` (whitespace ignored).
pub fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'a' => Ok(LA),
            'A' => Ok(LA_INV),
            'c' => Ok(LC),
            'C' => Ok(LC_INV),
            other => Err(Error::InvalidInput(format!("unexpected letter `{other}`"))),
        })
        .collect()
}

pub fn invert_word(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|&x| inverse_letter(x)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GeometryKind {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl GeometryKind {
    pub fn of(p: u32, q: u32, r: u32) -> Self {
        let h = Ratio::new(1, p as i64) + Ratio::new(1, q as i64) + Ratio::new(1, r as i64);
        let one = Ratio::from_integer(1);
        if h > one {
            GeometryKind::Spherical
        } else if h == one {
            GeometryKind::Euclidean
        } else {
            GeometryKind::Hyperbolic
        }
    }
}

impl fmt::Display for GeometryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeometryKind::Spherical => "spherical",
            GeometryKind::Euclidean => "euclidean",
            GeometryKind::Hyperbolic => "hyperbolic",
        })
    }
}

/// Finite or infinite order of a group element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementType {
    Identity,
    Elliptic,
    Infinite,
}

/// The rotation subgroup of the (p, q, r) reflection triangle group, realized exactly
/// inside the rank-3 geometric reflection representation.
///
/// With reflections x, y, w satisfying (xy)^p = (yw)^r = (xw)^q = 1, the rotations are
/// a = xy and c = yw, so that ac = xw.
#[derive(Debug, Clone)]
pub struct TriangleGroup {
    p: u32,
    q: u32,
    r: u32,
    kind: GeometryKind,
    ring: MatrixRing,
    gens: [ExactMatrix; 4],
    reflections: [ExactMatrix; 3],
    form: ExactMatrix,
    identity: ExactMatrix,
}

fn field_parameter(orders: &[u32]) -> u32 {
    orders
        .iter()
        .filter(|&&m| m >= 4)
        .fold(1u32, |acc, &m| acc.lcm(&m))
}

impl TriangleGroup {
    pub fn new(p: u32, q: u32, r: u32) -> Result<Self> {
        if p < 2 || q < 2 || r < 2 {
            return Err(Error::InvalidInput(format!(
                "triangle group orders must be at least 2, got ({p},{q},{r})"
            )));
        }
        let field = RealCyclotomicField::get(field_parameter(&[p, q, r]));
        let ring = MatrixRing::new(field.clone());
        let d = ring.degree();
        let m = [[1, p, q], [p, 1, r], [q, r, 1]];
        let two_cos = |k: u32| field.two_cos_pi_over(k).expect("order divides L");
        let constant = |v: i128| {
            let mut out = vec![0i128; d];
            out[0] = v;
            out
        };
        let mut form_entries: [[Vec<i128>; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                form_entries[i][j] = if i == j {
                    constant(2)
                } else {
                    two_cos(m[i][j]).iter().map(|x| -x).collect()
                };
            }
        }
        let form = ring.from_entries(&form_entries);
        let reflection = |i: usize| {
            let mut e: [[Vec<i128>; 3]; 3] = Default::default();
            for (r, row) in e.iter_mut().enumerate() {
                for (c, x) in row.iter_mut().enumerate() {
                    *x = if r != i {
                        constant(if r == c { 1 } else { 0 })
                    } else if c == i {
                        constant(-1)
                    } else {
                        two_cos(m[i][c])
                    };
                }
            }
            ring.from_entries(&e)
        };
        let refl = [reflection(0), reflection(1), reflection(2)];
        let a = ring.mul(&refl[0], &refl[1])?;
        let a_inv = ring.mul(&refl[1], &refl[0])?;
        let c = ring.mul(&refl[1], &refl[2])?;
        let c_inv = ring.mul(&refl[2], &refl[1])?;
        let identity = ring.identity();
        Ok(TriangleGroup {
            p,
            q,
            r,
            kind: GeometryKind::of(p, q, r),
            ring,
            gens: [a, a_inv, c, c_inv],
            reflections: refl,
            form,
            identity,
        })
    }

    pub fn orders(&self) -> (u32, u32, u32) {
        (self.p, self.q, self.r)
    }

    pub fn kind(&self) -> GeometryKind {
        self.kind
    }

    pub fn ring(&self) -> &MatrixRing {
        &self.ring
    }

    pub fn field_parameter(&self) -> u32 {
        self.ring.field().l()
    }

    pub fn identity(&self) -> &ExactMatrix {
        &self.identity
    }

    pub fn generator(&self, x: Letter) -> &ExactMatrix {
        &self.gens[x as usize]
    }

    pub fn reflection(&self, i: usize) -> &ExactMatrix {
        &self.reflections[i]
    }

    /// Twice the invariant bilinear form.
    pub fn form(&self) -> &ExactMatrix {
        &self.form
    }

    pub fn mul(&self, x: &ExactMatrix, y: &ExactMatrix) -> Result<ExactMatrix> {
        self.ring.mul(x, y)
    }

    pub fn step(&self, g: &ExactMatrix, x: Letter) -> Result<ExactMatrix> {
        self.ring.mul(g, &self.gens[x as usize])
    }

    pub fn eval(&self, w: &[Letter]) -> Result<ExactMatrix> {
        let mut g = self.identity.clone();
        for &x in w {
            g = self.step(&g, x)?;
        }
        Ok(g)
    }

    pub fn eval_from(&self, start: &ExactMatrix, w: &[Letter]) -> Result<ExactMatrix> {
        let mut g = start.clone();
        for &x in w {
            g = self.step(&g, x)?;
        }
        Ok(g)
    }

    pub fn is_identity(&self, g: &ExactMatrix) -> bool {
        *g == self.identity
    }

    /// g^T B g == B.
    pub fn preserves_form(&self, g: &ExactMatrix) -> Result<bool> {
        let gt = self.ring.transpose(g);
        let lhs = self.ring.mul(&self.ring.mul(&gt, &self.form)?, g)?;
        Ok(lhs == self.form)
    }

    pub fn trace(&self, g: &ExactMatrix) -> CyclotomicReal {
        self.ring.trace(g)
    }

    /// Rotations have trace 1 + 2cos(theta) < 3; parabolic and translation-like
    /// elements have trace 3 without being the identity, hyperbolic ones exceed 3.
    pub fn element_type(&self, g: &ExactMatrix) -> ElementType {
        if self.is_identity(g) {
            return ElementType::Identity;
        }
        if self.kind == GeometryKind::Spherical {
            return ElementType::Elliptic;
        }
        let t = self
            .trace(g)
            .sub(&CyclotomicReal::from_int(self.ring.field(), 3));
        if t.sign() < 0 {
            ElementType::Elliptic
        } else {
            ElementType::Infinite
        }
    }

    /// Sign of g applied to the simple root i (column i of g); roots are either
    /// nonnegative or nonpositive, so the largest entry decides.
    fn root_sign(&self, g: &ExactMatrix, i: usize) -> i32 {
        let (mut best, mut mag) = (0, -1.0f64);
        for r in 0..3 {
            let v = self.ring.entry_f64(g, r, i).abs();
            if v > mag {
                best = r;
                mag = v;
            }
        }
        let v = self.ring.entry_f64(g, best, i);
        if v.abs() > 0.25 {
            if v > 0.0 {
                1
            } else {
                -1
            }
        } else {
            self.ring.entry(g, best, i).sign()
        }
    }

    /// Canonical word for g over `a A c C`: strip the least right descent of g as an
    /// element of the reflection group until the identity is reached, then pair up the
    /// resulting reduced reflection word.
    pub fn normal_word(&self, g: &ExactMatrix) -> Result<Vec<Letter>> {
        let mut refl = Vec::new();
        let mut h = g.clone();
        while !self.is_identity(&h) {
            let i = (0..3).find(|&i| self.root_sign(&h, i) < 0).ok_or_else(|| {
                Error::Inconclusive("no descent for a nonidentity element".into())
            })?;
            refl.push(i);
            h = self.mul(&h, &self.reflections[i])?;
        }
        refl.reverse();
        if refl.len() % 2 == 1 {
            return Err(Error::InvalidInput("matrix is not a rotation".into()));
        }
        let mut out = Vec::with_capacity(refl.len());
        for pair in refl.chunks(2) {
            match (pair[0], pair[1]) {
                (0, 1) => out.push(LA),
                (1, 0) => out.push(LA_INV),
                (1, 2) => out.push(LC),
                (2, 1) => out.push(LC_INV),
                (0, 2) => out.extend([LA, LC]),
                (2, 0) => out.extend([LC_INV, LA_INV]),
                _ => unreachable!("reduced words have no repeated letter"),
            }
        }
        Ok(out)
    }

    /// Exact order of an elliptic element (at most the largest rotation order), or
    /// `None` for infinite order.
    pub fn element_order(&self, g: &ExactMatrix) -> Result<Option<u32>> {
        match self.element_type(g) {
            ElementType::Identity => Ok(Some(1)),
            ElementType::Infinite => Ok(None),
            ElementType::Elliptic => {
                let bound = if self.kind == GeometryKind::Spherical {
                    // finite rotation groups of the sphere have element orders at most
                    // max(p, q, r), except for the dihedral family where it is also bounded
                    2 * self.p.max(self.q).max(self.r)
                } else {
                    self.p.max(self.q).max(self.r)
                };
                let mut h = g.clone();
                for k in 1..=bound {
                    if self.is_identity(&h) {
                        return Ok(Some(k));
                    }
                    h = self.mul(&h, g)?;
                }
                Err(Error::Inconclusive(
                    "elliptic element without a bounded order".into(),
                ))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relations_hold(p: u32, q: u32, r: u32) {
        let g = TriangleGroup::new(p, q, r).unwrap();
        let a = g.generator(LA).clone();
        let c = g.generator(LC).clone();
        let ac = g.mul(&a, &c).unwrap();
        let ring = g.ring();
        assert!(g.is_identity(&ring.pow(&a, p).unwrap()));
        assert!(g.is_identity(&ring.pow(&c, r).unwrap()));
        assert!(g.is_identity(&ring.pow(&ac, q).unwrap()));
        for k in 1..p {
            assert!(!g.is_identity(&ring.pow(&a, k).unwrap()));
        }
        for k in 1..q {
            assert!(!g.is_identity(&ring.pow(&ac, k).unwrap()));
        }
        for x in 0..4 {
            assert!(g.preserves_form(g.generator(x)).unwrap());
            let back = g.step(g.generator(x), inverse_letter(x)).unwrap();
            assert!(g.is_identity(&back));
        }
    }

    #[test]
    fn defining_relations() {
        for (p, q, r) in [
            (3, 3, 3),
            (2, 3, 7),
            (2, 3, 5),
            (4, 3, 4),
            (2, 6, 3),
            (6, 3, 2),
            (4, 2, 4),
            (3, 4, 5),
            (5, 5, 5),
        ] {
            relations_hold(p, q, r);
        }
    }

    #[test]
    fn normal_words_evaluate_back() {
        for (p, q, r) in [(3, 3, 3), (2, 3, 7), (4, 3, 4), (2, 3, 5), (6, 3, 2)] {
            let g = TriangleGroup::new(p, q, r).unwrap();
            let mut w = Vec::new();
            for i in 0..30u32 {
                w.push([LA, LC, LC_INV, LA, LA_INV, LC][(i * 7 % 6) as usize]);
                let x = g.eval(&w).unwrap();
                let n = g.normal_word(&x).unwrap();
                assert_eq!(g.eval(&n).unwrap(), x);
                assert!(n.len() <= 2 * w.len());
            }
        }
        let g = TriangleGroup::new(3, 3, 3).unwrap();
        assert!(g.normal_word(g.identity()).unwrap().is_empty());
    }

    #[test]
    fn geometry_kinds() {
        assert_eq!(GeometryKind::of(3, 3, 3), GeometryKind::Euclidean);
        assert_eq!(GeometryKind::of(2, 3, 7), GeometryKind::Hyperbolic);
        assert_eq!(GeometryKind::of(2, 3, 5), GeometryKind::Spherical);
    }

    #[test]
    fn element_types() {
        let g = TriangleGroup::new(3, 3, 3).unwrap();
        let a = g.generator(LA).clone();
        assert_eq!(g.element_type(&a), ElementType::Elliptic);
        assert_eq!(g.element_order(&a).unwrap(), Some(3));
        // a c^-1 is a translation in the euclidean (3,3,3) group
        let t = g.eval(&parse_letters("aC").unwrap()).unwrap();
        assert_eq!(g.element_type(&t), ElementType::Infinite);
        let h = TriangleGroup::new(2, 3, 7).unwrap();
        let w = h.eval(&parse_letters("acC").unwrap()).unwrap();
        assert_eq!(h.element_order(&w).unwrap(), Some(2));
        let x = h.eval(&parse_letters("acac ac acC").unwrap()).unwrap();
        assert!(h.element_order(&x).is_ok());
        let y = h.eval(&parse_letters("acaC").unwrap()).unwrap();
        assert_eq!(h.element_type(&y), ElementType::Infinite);
    }
}
