use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::CycScalar;

/// Dense row-major matrix over Q(ζ₁₂).
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<CycScalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![CycScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = CycScalar::one();
        }
        m
    }

    pub fn diagonal(d: &[CycScalar]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycScalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| CycScalar::from_int(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors, each of length `n`.
    pub fn from_columns(n: usize, cols: &[Vec<CycScalar>]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[CycScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [CycScalar] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<CycScalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<CycScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn conj(&self) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(CycScalar::conj).collect(),
        }
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[CycScalar]) -> Result<Vec<CycScalar>> {
        if v.len() != self.cols {
            return Err(Error::Dimension("matrix-vector".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut s = CycScalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += &(a * b);
                    }
                }
                s
            })
            .collect())
    }

    pub fn add(&self, rhs: &ExactMatrix) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &ExactMatrix, f: impl Fn(&CycScalar, &CycScalar) -> CycScalar) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension("elementwise op".into()));
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// `self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &ExactMatrix) -> Result<Self> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    pub fn trace(&self) -> CycScalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycScalar::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(CycScalar::is_real)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn entries(&self) -> &[CycScalar] {
        &self.data
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = CycScalar;
    fn index(&self, (i, j): (usize, usize)) -> &CycScalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycScalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<CycScalar>>::deserialize(d)?;
        ExactMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// `y += a·x`.
pub fn axpy(y: &mut [CycScalar], a: &CycScalar, x: &[CycScalar]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(a * xi);
        }
    }
}

pub fn is_zero_vec(v: &[CycScalar]) -> bool {
    v.iter().all(CycScalar::is_zero)
}

pub fn scale_vec(v: &[CycScalar], a: &CycScalar) -> Vec<CycScalar> {
    v.iter().map(|x| x * a).collect()
}

pub fn unit_vec(n: usize, i: usize) -> Vec<CycScalar> {
    let mut v = vec![CycScalar::zero(); n];
    v[i] = CycScalar::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_transpose() {
        let a = ExactMatrix::from_int_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        let b = ExactMatrix::from_int_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, ExactMatrix::from_int_rows(&[vec![2, 1], vec![4, 3]]).unwrap());
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.trace(), CycScalar::from_int(5));
        assert!(a.mul(&ExactMatrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let a = ExactMatrix::from_rows(vec![vec![CycScalar::i(), CycScalar::frac(1, 3)]]).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        let b: ExactMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }
}
