//! Integer matrices, Smith normal form and integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegerMatrix {
    pub rows: usize,
    pub cols: usize,
    #[serde(serialize_with = "ser_entries")]
    pub entries: Vec<Vec<BigInt>>,
}

fn ser_entries<S: serde::Serializer>(e: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    let strs: Vec<Vec<String>> = e
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect();
    strs.serialize(s)
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        IntegerMatrix {
            rows: r,
            cols: c,
            entries: rows
                .iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i][j] += &self.entries[i][k] * &other.entries[k][j];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Determinant by fraction-free elimination (square matrices only).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * prev
    }
}

/// Result of a Smith normal form computation: `u * m * v == s`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub s: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        (0..self.s.rows.min(self.s.cols))
            .take_while(|&i| !self.s.entries[i][i].is_zero())
            .count()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s.entries[i][i].clone())
            .collect()
    }
}

fn swap_rows(m: &mut IntegerMatrix, i: usize, j: usize) {
    m.entries.swap(i, j);
}

fn swap_cols(m: &mut IntegerMatrix, i: usize, j: usize) {
    for row in m.entries.iter_mut() {
        row.swap(i, j);
    }
}

/// row_i -= q * row_j
fn row_axpy(m: &mut IntegerMatrix, i: usize, j: usize, q: &BigInt) {
    for c in 0..m.cols {
        let t = &m.entries[j][c] * q;
        m.entries[i][c] -= t;
    }
}

/// col_i -= q * col_j
fn col_axpy(m: &mut IntegerMatrix, i: usize, j: usize, q: &BigInt) {
    for r in 0..m.rows {
        let t = &m.entries[r][j] * q;
        m.entries[r][i] -= t;
    }
}

/// Smith normal form with pivoting on the least absolute value.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        // least nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &a.entries[i][j];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a.entries[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        swap_rows(&mut a, t, bi);
        swap_rows(&mut u, t, bi);
        swap_cols(&mut a, t, bj);
        swap_cols(&mut v, t, bj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a.entries[i][t].is_zero() {
                    continue;
                }
                let q = a.entries[i][t].div_floor(&a.entries[t][t]);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                if !a.entries[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a.entries[t][j].is_zero() {
                    continue;
                }
                let q = a.entries[t][j].div_floor(&a.entries[t][t]);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                if !a.entries[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // move the smallest remainder in row t / column t to the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    let x = &a.entries[i][t];
                    if !x.is_zero() && x.abs() < a.entries[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    let x = &a.entries[t][j];
                    if !x.is_zero() && x.abs() < a.entries[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    swap_rows(&mut a, t, best.0);
                    swap_rows(&mut u, t, best.0);
                }
                if best.1 != t {
                    swap_cols(&mut a, t, best.1);
                    swap_cols(&mut v, t, best.1);
                }
                continue;
            }
            // divisibility: pivot must divide the whole trailing block
            let mut offender = None;
            'search: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&a.entries[i][j] % &a.entries[t][t]).is_zero() {
                        offender = Some(i);
                        break 'search;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut a, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if a.entries[t][t].is_negative() {
            for c in 0..cols {
                a.entries[t][c] = -&a.entries[t][c];
            }
            for c in 0..rows {
                u.entries[t][c] = -&u.entries[t][c];
            }
        }
        t += 1;
    }
    SmithForm { s: a, u, v }
}

/// Basis of the integer kernel {x : M x = 0}; each vector is primitive.
pub fn kernel_basis(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    (r..m.cols)
        .map(|j| {
            let mut col: Vec<BigInt> = (0..m.cols).map(|i| snf.v.entries[i][j].clone()).collect();
            let g = col.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !g.is_zero() && !g.is_one() {
                col.iter_mut().for_each(|x| *x /= &g);
            }
            col
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntegerMatrix) -> SmithForm {
        let f = smith_normal_form(m);
        assert_eq!(f.u.mul(m).mul(&f.v), f.s);
        assert!(f.u.determinant().abs().is_one());
        assert!(f.v.determinant().abs().is_one());
        let d = f.diagonal();
        for w in d.windows(2) {
            if !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        for i in 0..f.s.rows {
            for j in 0..f.s.cols {
                if i != j {
                    assert!(f.s.entries[i][j].is_zero());
                }
            }
        }
        f
    }

    #[test]
    fn identity_is_its_own_form() {
        let f = check(&IntegerMatrix::identity(2));
        assert_eq!(f.diagonal(), vec![BigInt::one(), BigInt::one()]);
        assert!(kernel_basis(&IntegerMatrix::identity(2)).is_empty());
    }

    #[test]
    fn diag_two_three() {
        let f = check(&IntegerMatrix::from_i64(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(f.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn boundary_map_333() {
        let m = IntegerMatrix::from_i64(&[vec![3, 0, 3], vec![0, 3, 3]]);
        let f = check(&m);
        assert_eq!(f.diagonal(), vec![BigInt::from(3), BigInt::from(3)]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        let v: Vec<i64> = k[0].iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert!(v == vec![-1, -1, 1] || v == vec![1, 1, -1]);
    }

    #[test]
    fn random_matrices_satisfy_invariants() {
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((seed >> 33) % 13) as i64 - 6
        };
        for _ in 0..50 {
            let rows: Vec<Vec<i64>> = (0..3).map(|_| (0..4).map(|_| next()).collect()).collect();
            let m = IntegerMatrix::from_i64(&rows);
            check(&m);
            for v in kernel_basis(&m) {
                assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
            }
        }
    }
}
