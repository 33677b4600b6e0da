//! 3x3 matrices over the ring Z[2cos(pi/L)], with checked i128 coefficients.

use super::cyclotomic::{CyclotomicReal, RealCyclotomicField};
use crate::error::{Error, Result};
use std::sync::Arc;

/// Arithmetic context: the ring Z[gamma] for one fixed L.
#[derive(Debug, Clone)]
pub struct MatrixRing {
    field: Arc<RealCyclotomicField>,
    d: usize,
}

/// A 3x3 matrix whose entries are integral elements of the field.
/// Entry (i, j) occupies `data[(3i + j) * d .. (3i + j + 1) * d]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactMatrix {
    data: Box<[i128]>,
}

impl ExactMatrix {
    /// Canonical byte-level key; equal keys mean equal matrices.
    pub fn key(&self) -> &[i128] {
        &self.data
    }
}

impl MatrixRing {
    pub fn new(field: Arc<RealCyclotomicField>) -> Self {
        let d = field.degree();
        MatrixRing { field, d }
    }

    pub fn field(&self) -> &Arc<RealCyclotomicField> {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn identity(&self) -> ExactMatrix {
        let mut data = vec![0i128; 9 * self.d];
        for i in 0..3 {
            data[(4 * i) * self.d] = 1;
        }
        ExactMatrix {
            data: data.into_boxed_slice(),
        }
    }

    /// Build from integer coefficient vectors (each already reduced, length d).
    pub fn from_entries(&self, entries: &[[Vec<i128>; 3]; 3]) -> ExactMatrix {
        let mut data = vec![0i128; 9 * self.d];
        for i in 0..3 {
            for j in 0..3 {
                let e = &entries[i][j];
                assert_eq!(e.len(), self.d);
                data[(3 * i + j) * self.d..(3 * i + j + 1) * self.d].copy_from_slice(e);
            }
        }
        ExactMatrix {
            data: data.into_boxed_slice(),
        }
    }

    fn entry_slice<'a>(&self, m: &'a ExactMatrix, i: usize, j: usize) -> &'a [i128] {
        &m.data[(3 * i + j) * self.d..(3 * i + j + 1) * self.d]
    }

    pub fn entry(&self, m: &ExactMatrix, i: usize, j: usize) -> CyclotomicReal {
        CyclotomicReal::from_int_coeffs(&self.field, self.entry_slice(m, i, j))
    }

    pub fn entry_f64(&self, m: &ExactMatrix, i: usize, j: usize) -> f64 {
        let g = self.field.gamma_f64();
        self.entry_slice(m, i, j)
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * g + c as f64)
    }

    pub fn to_f64(&self, m: &ExactMatrix) -> [[f64; 3]; 3] {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = self.entry_f64(m, i, j);
            }
        }
        out
    }

    pub fn trace(&self, m: &ExactMatrix) -> CyclotomicReal {
        let mut acc = CyclotomicReal::zero(&self.field);
        for i in 0..3 {
            acc = acc.add(&self.entry(m, i, i));
        }
        acc
    }

    pub fn is_identity(&self, m: &ExactMatrix) -> bool {
        *m == self.identity()
    }

    pub fn mul(&self, a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
        let d = self.d;
        let mp = self.field.min_poly();
        let mut out = vec![0i128; 9 * d];
        let mut buf = vec![0i128; 2 * d - 1];
        for i in 0..3 {
            for j in 0..3 {
                buf.iter_mut().for_each(|x| *x = 0);
                for k in 0..3 {
                    let x = self.entry_slice(a, i, k);
                    let y = self.entry_slice(b, k, j);
                    for (u, &xu) in x.iter().enumerate() {
                        if xu == 0 {
                            continue;
                        }
                        for (v, &yv) in y.iter().enumerate() {
                            if yv == 0 {
                                continue;
                            }
                            let t = xu.checked_mul(yv).ok_or(Error::Overflow)?;
                            buf[u + v] = buf[u + v].checked_add(t).ok_or(Error::Overflow)?;
                        }
                    }
                }
                for k in (d..2 * d - 1).rev() {
                    let c = buf[k];
                    if c != 0 {
                        for t in 0..d {
                            let s = c.checked_mul(mp[t]).ok_or(Error::Overflow)?;
                            buf[k - d + t] =
                                buf[k - d + t].checked_sub(s).ok_or(Error::Overflow)?;
                        }
                        buf[k] = 0;
                    }
                }
                out[(3 * i + j) * d..(3 * i + j + 1) * d].copy_from_slice(&buf[..d]);
            }
        }
        Ok(ExactMatrix {
            data: out.into_boxed_slice(),
        })
    }

    pub fn transpose(&self, m: &ExactMatrix) -> ExactMatrix {
        let d = self.d;
        let mut out = vec![0i128; 9 * d];
        for i in 0..3 {
            for j in 0..3 {
                out[(3 * j + i) * d..(3 * j + i + 1) * d]
                    .copy_from_slice(self.entry_slice(m, i, j));
            }
        }
        ExactMatrix {
            data: out.into_boxed_slice(),
        }
    }

    pub fn pow(&self, m: &ExactMatrix, n: u32) -> Result<ExactMatrix> {
        let mut acc = self.identity();
        for _ in 0..n {
            acc = self.mul(&acc, m)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let ring = MatrixRing::new(RealCyclotomicField::get(12));
        let d = ring.degree();
        let mut e: [[Vec<i128>; 3]; 3] = Default::default();
        for (i, row) in e.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                let mut v = vec![0i128; d];
                v[(i + j) % d] = (i as i128) - (j as i128) + 1;
                *x = v;
            }
        }
        let m = ring.from_entries(&e);
        let id = ring.identity();
        assert_eq!(ring.mul(&m, &id).unwrap(), m);
        assert_eq!(ring.mul(&id, &m).unwrap(), m);
    }
}
