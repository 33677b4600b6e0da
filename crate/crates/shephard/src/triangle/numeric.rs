//! Floating-point models of euclidean and hyperbolic triangle groups, built directly
//! from the triangle's angles. Used for drawing and as an independent area oracle.

use super::group::{GeometryKind, Letter, LA, LC};
use crate::error::{Error, Result};
use std::f64::consts::PI;

pub type Mat3 = [[f64; 3]; 3];

fn mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut c = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

fn apply(a: &Mat3, v: [f64; 3]) -> [f64; 3] {
    [0, 1, 2].map(|i| (0..3).map(|k| a[i][k] * v[k]).sum())
}

fn rotation(theta: f64) -> Mat3 {
    let (s, c) = theta.sin_cos();
    [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]
}

fn boost(d: f64) -> Mat3 {
    let (sh, ch) = (d.sinh(), d.cosh());
    [[ch, 0.0, sh], [0.0, 1.0, 0.0], [sh, 0.0, ch]]
}

fn translation(x: f64, y: f64) -> Mat3 {
    [[1.0, 0.0, x], [0.0, 1.0, y], [0.0, 0.0, 1.0]]
}

/// Minkowski product with signature (+, +, -).
fn minkowski(u: [f64; 3], v: [f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] - u[2] * v[2]
}

fn det3(u: [f64; 3], v: [f64; 3], w: [f64; 3]) -> f64 {
    u[0] * (v[1] * w[2] - v[2] * w[1]) - v[0] * (u[1] * w[2] - u[2] * w[1])
        + w[0] * (u[1] * v[2] - u[2] * v[1])
}

/// Signed area of the geodesic triangle (u, v, w) on the hyperboloid.
pub fn hyperbolic_triangle_area(u: [f64; 3], v: [f64; 3], w: [f64; 3]) -> f64 {
    let num = det3(u, v, w);
    let den = 1.0 - minkowski(u, v) - minkowski(v, w) - minkowski(w, u);
    2.0 * num.atan2(den)
}

/// Rotations a (about A, angle 2pi/p) and c (about C, angle 2pi/r) of a triangle ABC
/// with angles pi/p, pi/q, pi/r, as 3x3 matrices: affine maps of the plane
/// (euclidean) or Lorentz transformations of the hyperboloid (hyperbolic).
#[derive(Debug, Clone)]
pub struct NumericModel {
    pub kind: GeometryKind,
    pub orders: (u32, u32, u32),
    gens: [Mat3; 4],
    /// A point of trivial stabilizer inside the base triangle.
    pub base_point: [f64; 3],
}

impl NumericModel {
    pub fn new(p: u32, q: u32, r: u32) -> Result<Self> {
        let kind = GeometryKind::of(p, q, r);
        let (alpha, beta, gamma) = (PI / p as f64, PI / q as f64, PI / r as f64);
        let (a, c, points) = match kind {
            GeometryKind::Spherical => {
                return Err(Error::Inapplicable(
                    "no planar model for a finite triangle group".into(),
                ))
            }
            GeometryKind::Euclidean => {
                let ab = gamma.sin() / (alpha + gamma).sin();
                let b = [ab * alpha.cos(), ab * alpha.sin(), 1.0];
                let a = rotation(2.0 * alpha);
                let c = mul(
                    &mul(&translation(1.0, 0.0), &rotation(2.0 * gamma)),
                    &translation(-1.0, 0.0),
                );
                (a, c, [[0.0, 0.0, 1.0], b, [1.0, 0.0, 1.0]])
            }
            GeometryKind::Hyperbolic => {
                let cosh_ac =
                    (beta.cos() + alpha.cos() * gamma.cos()) / (alpha.sin() * gamma.sin());
                let cosh_ab = (gamma.cos() + alpha.cos() * beta.cos()) / (alpha.sin() * beta.sin());
                let (d_ac, d_ab) = (cosh_ac.acosh(), cosh_ab.acosh());
                let a = rotation(2.0 * alpha);
                let c = mul(&mul(&boost(d_ac), &rotation(2.0 * gamma)), &boost(-d_ac));
                let pt_c = [d_ac.sinh(), 0.0, d_ac.cosh()];
                let pt_b = [
                    d_ab.sinh() * alpha.cos(),
                    d_ab.sinh() * alpha.sin(),
                    d_ab.cosh(),
                ];
                (a, c, [[0.0, 0.0, 1.0], pt_b, pt_c])
            }
        };
        let inv = |m: &Mat3, k: u32| (2..k).fold(*m, |acc, _| mul(&acc, m));
        let gens = [a, inv(&a, p), c, inv(&c, r)];
        let sum = [0, 1, 2].map(|i| points.iter().map(|pt| pt[i]).sum::<f64>());
        let base_point = match kind {
            GeometryKind::Euclidean => [sum[0] / 3.0, sum[1] / 3.0, 1.0],
            _ => {
                let n = (-minkowski(sum, sum)).sqrt();
                sum.map(|x| x / n)
            }
        };
        let model = NumericModel {
            kind,
            orders: (p, q, r),
            gens,
            base_point,
        };
        let ac = model.eval(&[LA, LC]);
        let acq = (1..q).fold(ac, |acc, _| mul(&acc, &ac));
        if !model.is_identity(&acq) {
            return Err(Error::Inconclusive("numeric model fails (ac)^q = 1".into()));
        }
        Ok(model)
    }

    pub fn generator(&self, x: Letter) -> &Mat3 {
        &self.gens[x as usize]
    }

    pub fn eval(&self, word: &[Letter]) -> Mat3 {
        let id = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        word.iter()
            .fold(id, |g, &x| mul(&g, &self.gens[x as usize]))
    }

    pub fn step(&self, g: &Mat3, x: Letter) -> Mat3 {
        mul(g, &self.gens[x as usize])
    }

    pub fn point(&self, g: &Mat3) -> [f64; 3] {
        apply(g, self.base_point)
    }

    /// Displacement of the base point, used as an identity test.
    pub fn displacement(&self, g: &Mat3) -> f64 {
        let v = self.point(g);
        let b = self.base_point;
        ((v[0] - b[0]).powi(2) + (v[1] - b[1]).powi(2) + (v[2] - b[2]).powi(2)).sqrt()
    }

    pub fn is_identity(&self, g: &Mat3) -> bool {
        self.displacement(g) < 1e-6
    }

    /// Planar drawing coordinates: the plane itself, or the Poincare disk.
    pub fn planar(&self, v: [f64; 3]) -> (f64, f64) {
        match self.kind {
            GeometryKind::Hyperbolic => (v[0] / (1.0 + v[2]), v[1] / (1.0 + v[2])),
            _ => (v[0], v[1]),
        }
    }

    /// Signed area enclosed by the closed polygon through the given points.
    pub fn polygon_area(&self, pts: &[[f64; 3]]) -> f64 {
        let n = pts.len();
        match self.kind {
            GeometryKind::Hyperbolic => {
                let o = [0.0, 0.0, 1.0];
                (0..n)
                    .map(|i| hyperbolic_triangle_area(o, pts[i], pts[(i + 1) % n]))
                    .sum()
            }
            _ => {
                (0..n)
                    .map(|i| {
                        let (u, v) = (pts[i], pts[(i + 1) % n]);
                        u[0] * v[1] - u[1] * v[0]
                    })
                    .sum::<f64>()
                    / 2.0
            }
        }
    }

    /// Points visited by the path from the identity reading `word`, start included.
    pub fn path_points(&self, word: &[Letter]) -> (Vec<[f64; 3]>, Mat3) {
        let mut g = self.eval(&[]);
        let mut pts = vec![self.point(&g)];
        for &x in word {
            g = self.step(&g, x);
            pts.push(self.point(&g));
        }
        (pts, g)
    }

    /// Signed areas of the P, R and Q2 faces through the identity, oriented by their
    /// boundary words a^p, c^r and (ac)^q.
    pub fn face_areas(&self) -> [f64; 3] {
        let (p, q, r) = self.orders;
        let area = |w: Vec<Letter>| {
            let (mut pts, _) = self.path_points(&w);
            pts.pop();
            self.polygon_area(&pts)
        };
        [
            area(vec![LA; p as usize]),
            area(vec![LC; r as usize]),
            area([LA, LC].repeat(q as usize)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::group::{LA_INV, LC_INV};

    #[test]
    fn relations_hold_numerically() {
        for (p, q, r) in [
            (3, 3, 3),
            (2, 3, 7),
            (4, 3, 4),
            (2, 6, 3),
            (4, 2, 4),
            (6, 3, 2),
        ] {
            let m = NumericModel::new(p, q, r).unwrap();
            assert!(m.is_identity(&m.eval(&vec![LA; p as usize])));
            assert!(m.is_identity(&m.eval(&vec![LC; r as usize])));
            assert!(!m.is_identity(&m.eval(&[LA])));
            assert!(m.is_identity(&m.eval(&[LA, LA_INV, LC_INV, LC])));
        }
    }

    #[test]
    fn gauss_bonnet() {
        // the (2,3,7) triangle has area pi (1 - 1/2 - 1/3 - 1/7)
        let (alpha, beta, gamma) = (PI / 2.0, PI / 3.0, PI / 7.0);
        let cosh_ac = (beta.cos() + alpha.cos() * gamma.cos()) / (alpha.sin() * gamma.sin());
        let cosh_ab = (gamma.cos() + alpha.cos() * beta.cos()) / (alpha.sin() * beta.sin());
        let (d_ac, d_ab) = (cosh_ac.acosh(), cosh_ab.acosh());
        let a = [0.0, 0.0, 1.0];
        let b = [
            d_ab.sinh() * alpha.cos(),
            d_ab.sinh() * alpha.sin(),
            d_ab.cosh(),
        ];
        let c = [d_ac.sinh(), 0.0, d_ac.cosh()];
        let s = hyperbolic_triangle_area(a, c, b);
        assert!((s - PI * (1.0 - 0.5 - 1.0 / 3.0 - 1.0 / 7.0)).abs() < 1e-12);
        assert!((hyperbolic_triangle_area(a, b, c) + s).abs() < 1e-12);
    }

    #[test]
    fn face_orientations_differ() {
        let m = NumericModel::new(3, 3, 3).unwrap();
        let [ap, ar, aq] = m.face_areas();
        assert!(ap > 0.0 && ar > 0.0 && aq < 0.0);
        let h = NumericModel::new(4, 3, 4).unwrap();
        let [ap, ar, aq] = h.face_areas();
        assert!(ap > 0.0 && ar > 0.0 && aq < 0.0);
    }
}
