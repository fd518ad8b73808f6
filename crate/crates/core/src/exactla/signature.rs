use serde::Serialize;

use super::matrix::ExactMatrix;
use crate::error::{Error, Result};
use crate::scalar::CycScalar;

/// Real symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricForm {
    gram: ExactMatrix,
}

/// Sylvester inertia of a form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.plus as i64 - self.minus as i64
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.zero == 0
    }
}

impl SymmetricForm {
    pub fn new(gram: ExactMatrix) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::Check("Gram matrix is not symmetric".into()));
        }
        if !gram.is_real() {
            return Err(Error::Check("Gram matrix has non-real entries".into()));
        }
        Ok(SymmetricForm { gram })
    }

    pub fn gram(&self) -> &ExactMatrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, x: &[CycScalar], y: &[CycScalar]) -> Result<CycScalar> {
        let gy = self.gram.mul_vec(y)?;
        Ok(x.iter().zip(&gy).map(|(a, b)| a * b).sum())
    }

    /// Restriction to the span of the given vectors.
    pub fn restrict(&self, basis: &[Vec<CycScalar>]) -> Result<SymmetricForm> {
        let gv: Vec<Vec<CycScalar>> = basis
            .iter()
            .map(|v| self.gram.mul_vec(v))
            .collect::<Result<_>>()?;
        let k = basis.len();
        let mut g = ExactMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                g[(i, j)] = basis[i].iter().zip(&gv[j]).map(|(a, b)| a * b).sum();
            }
        }
        SymmetricForm::new(g)
    }

    /// Inertia by symmetric Gaussian elimination (congruence).
    pub fn inertia(&self) -> Result<Inertia> {
        let mut a = self.gram.clone();
        let n = a.rows();
        let mut alive: Vec<usize> = (0..n).collect();
        let mut plus = 0;
        let mut minus = 0;
        while !alive.is_empty() {
            let pivot = alive.iter().position(|&k| !a[(k, k)].is_zero());
            let pos = match pivot {
                Some(p) => p,
                None => {
                    // All remaining diagonal entries vanish: fold an off-diagonal
                    // entry into the diagonal via row/column k += row/column l.
                    let found = alive.iter().enumerate().find_map(|(pi, &k)| {
                        alive.iter().find(|&&l| l != k && !a[(k, l)].is_zero()).map(|&l| (pi, k, l))
                    });
                    let Some((pi, k, l)) = found else { break };
                    for &j in &alive {
                        let v = a[(l, j)].clone();
                        a[(k, j)] += &v;
                    }
                    for &j in &alive {
                        let v = a[(j, l)].clone();
                        a[(j, k)] += &v;
                    }
                    pi
                }
            };
            let k = alive.swap_remove(pos);
            let d = a[(k, k)].clone();
            match d.sign_real()? {
                1 => plus += 1,
                -1 => minus += 1,
                _ => unreachable!("pivot is nonzero"),
            }
            let dinv = d.inv()?;
            let col: Vec<(usize, CycScalar)> = alive
                .iter()
                .filter(|&&i| !a[(i, k)].is_zero())
                .map(|&i| (i, &a[(i, k)] * &dinv))
                .collect();
            for (i, f) in &col {
                for &j in &alive {
                    let akj = &a[(k, j)];
                    if !akj.is_zero() {
                        let t = f * akj;
                        a[(*i, j)] -= &t;
                    }
                }
            }
        }
        Ok(Inertia {
            plus,
            minus,
            zero: n - plus - minus,
        })
    }

    pub fn signature(&self) -> Result<i64> {
        Ok(self.inertia()?.signature())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn diagonal_form() {
        let g = SymmetricForm::new(ExactMatrix::diagonal(&[int(1), int(-1), int(-1)])).unwrap();
        let i = g.inertia().unwrap();
        assert_eq!((i.plus, i.minus, i.zero), (1, 2, 0));
    }

    #[test]
    fn hyperbolic_plane_needs_folding() {
        let g = SymmetricForm::new(ExactMatrix::from_int_rows(&[vec![0, 1], vec![1, 0]]).unwrap()).unwrap();
        let i = g.inertia().unwrap();
        assert_eq!((i.plus, i.minus, i.zero), (1, 1, 0));
    }

    #[test]
    fn degenerate_and_irrational() {
        let s = CycScalar::sqrt3();
        let g = ExactMatrix::from_rows(vec![
            vec![int(1), s.clone(), int(0)],
            vec![s, int(2), int(0)],
            vec![int(0), int(0), int(0)],
        ])
        .unwrap();
        let i = SymmetricForm::new(g).unwrap().inertia().unwrap();
        assert_eq!((i.plus, i.minus, i.zero), (1, 1, 1));
    }

    #[test]
    fn rejects_nonsymmetric() {
        assert!(SymmetricForm::new(ExactMatrix::from_int_rows(&[vec![0, 1], vec![0, 0]]).unwrap()).is_err());
    }
}
