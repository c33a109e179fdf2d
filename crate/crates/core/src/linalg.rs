//! Dense exact linear algebra over the rationals.
//!
//! Ranks go through fraction-free (Bareiss) elimination on integer rows
//! obtained by clearing denominators. Kernels and solves use rational
//! Gauss-Jordan elimination with first-nonzero pivoting, so pivot choices
//! (and therefore chosen bases) are deterministic.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
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

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &factor * &m[(r, j)];
                    m[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.integer_rows())
    }

    /// Each row scaled by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
            })
            .collect()
    }

    /// Basis of the right null space, one vector per free column in
    /// ascending order.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Determinant of a square matrix by fraction-free elimination.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut scale = Rational::one();
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            scale *= Rational::from_integer(lcm.clone());
            rows.push(row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect());
        }
        Rational::from_integer(bareiss_determinant(rows)) / scale
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Fraction-free echelon elimination; every division is exact.
fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&v % &prev).is_zero(), "inexact Bareiss division");
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut prev = BigInt::one();
    let mut negative = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(k, p);
            negative = !negative;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 {
        BigInt::one()
    } else {
        a[n - 1][n - 1].clone()
    };
    if negative {
        -det
    } else {
        det
    }
}

/// Coordinates against a fixed list of linearly independent columns.
///
/// Precomputes `T` with `T W = [I; 0]` so that each solve is a single
/// matrix-vector product plus a consistency check on the trailing rows.
#[derive(Debug, Clone)]
pub struct ColumnSolver {
    ncols: usize,
    transform: Matrix,
}

impl ColumnSolver {
    /// `columns` must be linearly independent vectors of length `dim`.
    pub fn new(dim: usize, columns: &[Vec<Rational>]) -> Self {
        let ncols = columns.len();
        let mut aug = Matrix::zeros(dim, ncols + dim);
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                aug[(i, j)] = v.clone();
            }
        }
        for i in 0..dim {
            aug[(i, ncols + i)] = Rational::one();
        }
        let (r, pivots) = aug.rref();
        assert!(
            pivots.iter().take(ncols).copied().eq(0..ncols),
            "solver columns are linearly dependent"
        );
        let mut transform = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                transform[(i, j)] = r[(i, ncols + j)].clone();
            }
        }
        ColumnSolver { ncols, transform }
    }

    /// Coefficients `y` with `W y = v`, or `None` if `v` is outside the span.
    pub fn solve(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let t = self.transform.mul_vec(v);
        if t[self.ncols..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(t[..self.ncols].to_vec())
    }
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else if q.is_negative() {
        format!("-{}/{}", q.numer().abs(), q.denom())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| q(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(is_zero_vector(&a.mul_vec(&k[0])));
    }

    #[test]
    fn rank_with_fractions_and_skipped_columns() {
        let half = Rational::new(1.into(), 2.into());
        let a = Matrix::from_rows(vec![
            vec![q(0), half.clone(), q(1), q(0)],
            vec![q(0), q(1), q(2), q(0)],
            vec![q(0), q(0), q(0), half],
        ]);
        assert_eq!(a.rank(), 2);
        assert_eq!(Matrix::zeros(3, 4).rank(), 0);
        assert_eq!(Matrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn determinant_matches_hand_values() {
        assert_eq!(m(&[&[0, 1], &[-1, 0]]).determinant(), q(1));
        assert_eq!(
            m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).determinant(),
            q(18)
        );
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), q(0));
        let third = Rational::new(1.into(), 3.into());
        let a = Matrix::from_rows(vec![vec![third.clone(), q(0)], vec![q(5), q(6)]]);
        assert_eq!(a.determinant(), q(2));
    }

    #[test]
    fn column_solver_round_trip() {
        let cols = vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]];
        let s = ColumnSolver::new(3, &cols);
        assert_eq!(s.solve(&[q(2), q(3), q(5)]), Some(vec![q(2), q(3)]));
        assert_eq!(s.solve(&[q(1), q(0), q(0)]), None);
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(fmt_rational(&Rational::new((-1).into(), 2.into())), "-1/2");
        assert_eq!(fmt_rational(&q(3)), "3");
    }
}
