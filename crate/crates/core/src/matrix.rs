//! Dense exact linear algebra over Q(i): products, trace, rank by Gaussian
//! elimination, inverses.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::GScalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<GScalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![GScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GScalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GScalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimMismatch("ragged rows".to_string()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &GScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &GScalar) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, rhs: &Mat) -> Result<Mat> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Mat) -> Result<Mat> {
        self.add(&rhs.scale(&GScalar::from_int(-1)))
    }

    pub fn mul(&self, rhs: &Mat) -> Result<Mat> {
        if self.cols != rhs.rows {
            return Err(Error::DimMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = GScalar::zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.at(i, k) * rhs.at(k, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<GScalar> {
        if !self.is_square() {
            return Err(Error::DimMismatch("trace of non-square matrix".to_string()));
        }
        let mut acc = GScalar::zero();
        for i in 0..self.rows {
            acc = &acc + self.at(i, i);
        }
        Ok(acc)
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            // find a pivot at or below `row`
            let pivot = (row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(p) = pivot else { continue };
            if p != row {
                for j in 0..m.cols {
                    let a = m.at(row, j).clone();
                    let b = m.at(p, j).clone();
                    m.set(row, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = m.at(row, col).inv().expect("pivot nonzero");
            for r in (row + 1)..m.rows {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col) * &inv;
                for j in col..m.cols {
                    let v = m.at(r, j) - &(&factor * m.at(row, j));
                    m.set(r, j, v);
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    /// Exact inverse by Gauss-Jordan; None when singular.
    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.at(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a.at(col, j).clone(), a.at(pivot, j).clone());
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                    let (x, y) = (inv.at(col, j).clone(), inv.at(pivot, j).clone());
                    inv.set(col, j, y);
                    inv.set(pivot, j, x);
                }
            }
            let scale = a.at(col, col).inv().expect("pivot nonzero");
            for j in 0..n {
                a.set(col, j, a.at(col, j) * &scale);
                inv.set(col, j, inv.at(col, j) * &scale);
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for j in 0..n {
                    let v = a.at(r, j) - &(&factor * a.at(col, j));
                    a.set(r, j, v);
                    let v = inv.at(r, j) - &(&factor * inv.at(col, j));
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }

    pub fn is_skew(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if !(self.at(i, j) + self.at(j, i)).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(", "))?;
        }
        Ok(())
    }
}

/// A skew-symmetric matrix over Q(i): `entries[i][j] = -entries[j][i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewMatrix(Mat);

impl SkewMatrix {
    pub fn new(m: Mat) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimMismatch(
                "skew matrix must be square".to_string(),
            ));
        }
        if !m.is_skew() {
            return Err(Error::InvalidParameter(
                "matrix is not skew-symmetric".to_string(),
            ));
        }
        Ok(SkewMatrix(m))
    }

    pub fn zero(n: usize) -> Self {
        SkewMatrix(Mat::zeros(n, n))
    }

    /// Build from upper-triangular entries `(i, j, c)` with `i < j`; the
    /// lower triangle is filled with `-c`.
    pub fn from_upper(n: usize, entries: &[(usize, usize, GScalar)]) -> Result<Self> {
        let mut m = Mat::zeros(n, n);
        for (i, j, c) in entries {
            if i >= j || *j >= n {
                return Err(Error::InvalidParameter(format!(
                    "upper entry ({}, {}) out of range",
                    i, j
                )));
            }
            m.set(*i, *j, c.clone());
            m.set(*j, *i, -c);
        }
        Ok(SkewMatrix(m))
    }

    pub fn n(&self) -> usize {
        self.0.n_rows()
    }

    pub fn mat(&self) -> &Mat {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> &GScalar {
        self.0.at(i, j)
    }
}
