//! Exact linear algebra over the rationals.
//!
//! Everything here is tiny (a few dozen rows at most), so a dense row-major
//! matrix of `BigRational` with plain Gauss-Jordan elimination is all we need.

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = QMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (c, &v) in row.iter().enumerate() {
                m.data[r * cols + c] = q(v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_i64(&mut self, r: usize, c: usize, v: i64) {
        if v != 0 {
            let cell = &mut self.data[r * self.cols + c];
            *cell += q(v);
        }
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Reduces to reduced row echelon form in place and returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).recip();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c) - &factor * self.get(row, c);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : A x = 0}`, each vector scaled to a primitive integer vector.
    pub fn kernel(&self) -> Vec<Vec<i64>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f).clone();
                }
                primitive(&v)
            })
            .collect()
    }

    /// Basis of `{y : y A = 0}` (row vectors), primitive integer scaled.
    pub fn left_kernel(&self) -> Vec<Vec<i64>> {
        self.transpose().kernel()
    }

    pub fn determinant(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = BigRational::one();
        for col in 0..m.cols {
            let Some(p) = (col..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                return BigRational::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) / &pivot;
                for c in col..m.cols {
                    let v = m.get(r, c) - &factor * m.get(col, c);
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    /// Some solution of `A x = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = QMatrix::zeros(self.rows, self.cols + 1);
        for (r, value) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, value.clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = QMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, BigRational::one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = QMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// Entries as `i64`, or `None` if some entry is not an integer.
    pub fn to_integer_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| {
                        let v = self.get(r, c);
                        if v.is_integer() {
                            v.to_integer().to_i64()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// Scales a rational vector to the primitive integer vector on the same ray.
fn primitive(v: &[BigRational]) -> Vec<i64> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { BigInt::one() } else { g.abs() };
    ints.iter()
        .map(|x| (x / &g).to_i64().expect("kernel entry fits in i64"))
        .collect()
}

/// Integer coefficients expressing `target` in the span of `basis`, if any.
///
/// The basis vectors must be linearly independent; membership in the integer
/// span then reduces to integrality of the unique rational solution.
pub fn integer_combination(target: &[i64], basis: &[Vec<i64>]) -> Option<Vec<i64>> {
    if basis.is_empty() {
        return target.iter().all(|&t| t == 0).then(Vec::new);
    }
    let n = target.len();
    let mut a = QMatrix::zeros(n, basis.len());
    for (c, b) in basis.iter().enumerate() {
        assert_eq!(b.len(), n);
        for (r, &v) in b.iter().enumerate() {
            a.set(r, c, q(v));
        }
    }
    assert_eq!(a.rank(), basis.len(), "basis vectors must be independent");
    let rhs: Vec<BigRational> = target.iter().map(|&t| q(t)).collect();
    let x = a.solve(&rhs)?;
    x.iter()
        .map(|c| {
            if c.is_integer() {
                c.to_integer().to_i64()
            } else {
                None
            }
        })
        .collect()
}

/// Determinant of a square integer matrix.
pub fn det_i64(rows: &[Vec<i64>]) -> i64 {
    let d = QMatrix::from_rows(rows).determinant();
    d.to_integer()
        .to_i64()
        .expect("integer determinant fits in i64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one_row() {
        let m = QMatrix::from_rows(&[vec![1, -1, 0]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(v[0] - v[1], 0);
        }
    }

    #[test]
    fn kernel_is_primitive() {
        let m = QMatrix::from_rows(&[vec![2, 3]]);
        assert_eq!(m.kernel(), vec![vec![-3, 2]]);
    }

    #[test]
    fn left_kernel_annihilates() {
        let m = QMatrix::from_rows(&[vec![1], vec![1]]);
        let k = m.left_kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0] + k[0][1], 0);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = QMatrix::from_rows(&[vec![1, -1, 0], vec![0, 1, 0], vec![0, -1, 1]]);
        assert_eq!(m.determinant(), BigRational::one());
        let inv = m.inverse().unwrap().to_integer_rows().unwrap();
        assert_eq!(inv, vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 1, 1]]);
        assert_eq!(det_i64(&[vec![2, 1], vec![1, 1]]), 1);
        assert_eq!(det_i64(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn integer_span_membership() {
        let basis = vec![vec![1, 1, 0], vec![0, 1, 1]];
        assert_eq!(integer_combination(&[1, 2, 1], &basis), Some(vec![1, 1]));
        assert_eq!(integer_combination(&[1, 0, 0], &basis), None);
        let doubled = vec![vec![2, 0]];
        assert_eq!(integer_combination(&[1, 0], &doubled), None);
        assert_eq!(integer_combination(&[0, 0], &[]), Some(vec![]));
    }

    #[test]
    fn inconsistent_solve() {
        let m = QMatrix::from_rows(&[vec![1, 0], vec![1, 0]]);
        assert!(m.solve(&[q(1), q(2)]).is_none());
    }
}
