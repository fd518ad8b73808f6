use super::elim::kernel;
use super::matrix::{axpy, ExactMatrix};
use crate::error::{Error, Result};
use crate::scalar::CycScalar;

/// Joint eigenspace of a commuting family, tagged by its eigenvalue tuple.
#[derive(Clone, Debug)]
pub struct JointEigenspace {
    pub eigenvalues: Vec<CycScalar>,
    pub basis: Vec<Vec<CycScalar>>,
}

/// Splits Kⁿ into joint eigenspaces of commuting operators.
///
/// `eigenvalues[k]` lists the admissible eigenvalues of `ops[k]`; each
/// operator must be diagonalizable with spectrum inside that list.
pub fn simultaneous_eigensplit(
    ops: &[ExactMatrix],
    eigenvalues: &[Vec<CycScalar>],
) -> Result<Vec<JointEigenspace>> {
    if ops.len() != eigenvalues.len() {
        return Err(Error::Dimension("one eigenvalue list per operator".into()));
    }
    let Some(first) = ops.first() else {
        return Err(Error::Dimension("no operators".into()));
    };
    let n = first.rows();
    if ops.iter().any(|a| a.rows() != n || a.cols() != n) {
        return Err(Error::Dimension("operators of different sizes".into()));
    }
    for (i, a) in ops.iter().enumerate() {
        for b in &ops[i + 1..] {
            if !a.commutator(b)?.is_zero() {
                return Err(Error::NotCommuting);
            }
        }
    }
    let full: Vec<Vec<CycScalar>> = (0..n).map(|i| super::matrix::unit_vec(n, i)).collect();
    let mut spaces = vec![JointEigenspace {
        eigenvalues: Vec::new(),
        basis: full,
    }];
    for (op, lams) in ops.iter().zip(eigenvalues) {
        let mut next = Vec::new();
        for sp in spaces {
            let images: Vec<Vec<CycScalar>> = sp
                .basis
                .iter()
                .map(|b| op.mul_vec(b))
                .collect::<Result<_>>()?;
            let mut found = 0;
            for lam in lams {
                // (op − λ) restricted to the span, written on the spanning basis.
                let k = sp.basis.len();
                let mut m = ExactMatrix::zeros(n, k);
                for j in 0..k {
                    for i in 0..n {
                        m[(i, j)] = &images[j][i] - &(lam * &sp.basis[j][i]);
                    }
                }
                let ker = kernel(&m);
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                let basis = ker
                    .iter()
                    .map(|c| {
                        let mut w = vec![CycScalar::zero(); n];
                        for (x, b) in c.iter().zip(&sp.basis) {
                            axpy(&mut w, x, b);
                        }
                        w
                    })
                    .collect();
                let mut tag = sp.eigenvalues.clone();
                tag.push(lam.clone());
                next.push(JointEigenspace {
                    eigenvalues: tag,
                    basis,
                });
            }
            if found != sp.basis.len() {
                return Err(Error::NotDiagonalizable);
            }
        }
        spaces = next;
    }
    for sp in &spaces {
        for (op, lam) in ops.iter().zip(&sp.eigenvalues) {
            for v in &sp.basis {
                let w = op.mul_vec(v)?;
                if w.iter().zip(v).any(|(a, b)| a != &(lam * b)) {
                    return Err(Error::Check("eigenvector check failed".into()));
                }
            }
        }
    }
    Ok(spaces)
}

/// The `m`-th roots of unity in Q(ζ₁₂), for `m` dividing 12.
pub fn roots_of_unity(m: i64) -> Vec<CycScalar> {
    assert!(12 % m == 0, "only divisors of 12 are available");
    (0..m).map(|k| CycScalar::zeta_pow(k * 12 / m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn identity_gives_one_space() {
        let s = simultaneous_eigensplit(&[ExactMatrix::identity(4)], &[vec![int(1), int(-1)]]).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].basis.len(), 4);
    }

    #[test]
    fn cyclic_permutation_over_cube_roots() {
        let p = ExactMatrix::from_int_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let s = simultaneous_eigensplit(&[p], &[roots_of_unity(3)]).unwrap();
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn errors() {
        let a = ExactMatrix::from_int_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(matches!(
            simultaneous_eigensplit(std::slice::from_ref(&a), &[vec![int(1)]]),
            Err(Error::NotDiagonalizable)
        ));
        let b = ExactMatrix::from_int_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let c = ExactMatrix::from_int_rows(&[vec![1, 0], vec![0, -1]]).unwrap();
        assert!(matches!(
            simultaneous_eigensplit(&[b, c], &[vec![int(1), int(-1)], vec![int(1), int(-1)]]),
            Err(Error::NotCommuting)
        ));
    }
}
