use serde::Serialize;

use super::table::{AlgebraTable, SparseVec};
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vec, ExactMatrix};
use crate::scalar::CycScalar;

/// Outcome of an exhaustive identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub identity: String,
    pub passed: bool,
    pub cases_checked: usize,
    pub first_violation: Option<String>,
}

impl AxiomReport {
    fn new(identity: &str) -> Self {
        AxiomReport {
            identity: identity.into(),
            passed: true,
            cases_checked: 0,
            first_violation: None,
        }
    }

    fn fail(&mut self, msg: String) {
        self.passed = false;
        self.first_violation = Some(msg);
    }
}

fn neg_eq(a: &SparseVec, b: &SparseVec) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|((i, x), (j, y))| i == j && *x == -y)
}

/// Product `(Σ x_k b_k) · b_j` for a sparse left factor.
fn mul_sparse_basis(a: &AlgebraTable, x: &SparseVec, j: usize, out: &mut [CycScalar], sign: i64) {
    for (k, c) in x {
        for (m, d) in a.basis_product(*k, j) {
            let t = c * d;
            if sign > 0 {
                out[*m] += &t;
            } else {
                out[*m] -= &t;
            }
        }
    }
}

/// Anticommutativity and Jacobi on all basis triples.
pub fn check_lie(a: &AlgebraTable) -> AxiomReport {
    let n = a.dim();
    let mut rep = AxiomReport::new("lie");
    for i in 0..n {
        for j in i..n {
            rep.cases_checked += 1;
            let ok = if i == j {
                a.basis_product(i, i).is_empty()
            } else {
                neg_eq(a.basis_product(i, j), a.basis_product(j, i))
            };
            if !ok {
                rep.fail(format!("anticommutativity fails at ({}, {})", a.names()[i], a.names()[j]));
                return rep;
            }
        }
    }
    let mut acc = vec![CycScalar::zero(); n];
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                rep.cases_checked += 1;
                acc.iter_mut().for_each(|x| *x = CycScalar::zero());
                mul_sparse_basis(a, a.basis_product(i, j), k, &mut acc, 1);
                mul_sparse_basis(a, a.basis_product(j, k), i, &mut acc, 1);
                mul_sparse_basis(a, a.basis_product(k, i), j, &mut acc, 1);
                if !is_zero_vec(&acc) {
                    let nm = a.names();
                    rep.fail(format!("Jacobi fails at ({}, {}, {})", nm[i], nm[j], nm[k]));
                    return rep;
                }
            }
        }
    }
    rep
}

/// φ(b_i b_j) = φ(b_i) φ(b_j) on all basis pairs, for φ given by its matrix.
pub fn is_automorphism(a: &AlgebraTable, phi: &ExactMatrix) -> Result<bool> {
    let n = a.dim();
    if phi.rows() != n || phi.cols() != n {
        return Err(Error::Dimension("automorphism matrix size".into()));
    }
    let cols: Vec<SparseVec> = (0..n).map(|j| super::table::to_sparse(&phi.column(j))).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = phi.mul_vec(&super::table::to_dense(n, a.basis_product(i, j)))?;
            if lhs != a.mul_sparse(&cols[i], &cols[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Commutativity and the linearized Jordan identity
/// ((xz)y)w + ((zw)y)x + ((wx)y)z = (xz)(yw) + (zw)(yx) + (wx)(yz)
/// on all basis quadruples, which implies (x²y)x = x²(yx).
pub fn check_jordan(a: &AlgebraTable) -> AxiomReport {
    let n = a.dim();
    let mut rep = AxiomReport::new("jordan");
    for i in 0..n {
        for j in i + 1..n {
            rep.cases_checked += 1;
            if a.basis_product(i, j) != a.basis_product(j, i) {
                rep.fail(format!("commutativity fails at ({}, {})", a.names()[i], a.names()[j]));
                return rep;
            }
        }
    }
    for x in 0..n {
        for z in x..n {
            let xz = a.basis_product(x, z);
            for w in z..n {
                let zw = a.basis_product(z, w);
                let wx = a.basis_product(w, x);
                for y in 0..n {
                    rep.cases_checked += 1;
                    let mut acc = vec![CycScalar::zero(); n];
                    let xzy = a.mul_sparse(xz, &vec![(y, CycScalar::one())]);
                    let zwy = a.mul_sparse(zw, &vec![(y, CycScalar::one())]);
                    let wxy = a.mul_sparse(wx, &vec![(y, CycScalar::one())]);
                    mul_sparse_basis(a, &super::table::to_sparse(&xzy), w, &mut acc, 1);
                    mul_sparse_basis(a, &super::table::to_sparse(&zwy), x, &mut acc, 1);
                    mul_sparse_basis(a, &super::table::to_sparse(&wxy), z, &mut acc, 1);
                    let rhs1 = a.mul_sparse(xz, a.basis_product(y, w));
                    let rhs2 = a.mul_sparse(zw, a.basis_product(y, x));
                    let rhs3 = a.mul_sparse(wx, a.basis_product(y, z));
                    for k in 0..n {
                        acc[k] -= &rhs1[k];
                        acc[k] -= &rhs2[k];
                        acc[k] -= &rhs3[k];
                    }
                    if !is_zero_vec(&acc) {
                        let nm = a.names();
                        rep.fail(format!("Jordan identity fails at ({}, {}, {}, {})", nm[x], nm[y], nm[z], nm[w]));
                        return rep;
                    }
                }
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::structalg::AlgebraKind;

    #[test]
    fn zero_algebra_passes_both() {
        let z = AlgebraTable::zero_algebra(1, AlgebraKind::Plain);
        assert!(check_lie(&z).passed);
        assert!(check_jordan(&z).passed);
    }

    #[test]
    fn matrix_algebra_is_not_lie_but_commutator_is() {
        // gl2 basis E11, E12, E21, E22 with the associative product.
        let names: Vec<String> = ["E11", "E12", "E21", "E22"].map(String::from).to_vec();
        let idx = |a: usize, b: usize| a * 2 + b;
        let assoc = AlgebraTable::from_fn(names.clone(), AlgebraKind::Plain, |i, j| {
            let (a, b, c, d) = (i / 2, i % 2, j / 2, j % 2);
            let mut v = vec![CycScalar::zero(); 4];
            if b == c {
                v[idx(a, d)] = int(1);
            }
            v
        })
        .unwrap();
        assert!(!check_lie(&assoc).passed);
        let comm = AlgebraTable::from_fn(names.clone(), AlgebraKind::Lie, |i, j| {
            let x = crate::exactla::unit_vec(4, i);
            let y = crate::exactla::unit_vec(4, j);
            let p = assoc.mul(&x, &y);
            let q = assoc.mul(&y, &x);
            p.iter().zip(&q).map(|(a, b)| a - b).collect()
        })
        .unwrap();
        assert!(check_lie(&comm).passed);
        let jord = AlgebraTable::from_fn(names, AlgebraKind::Jordan, |i, j| {
            let x = crate::exactla::unit_vec(4, i);
            let y = crate::exactla::unit_vec(4, j);
            let p = assoc.mul(&x, &y);
            let q = assoc.mul(&y, &x);
            p.iter().zip(&q).map(|(a, b)| (a + b) * CycScalar::frac(1, 2)).collect()
        })
        .unwrap();
        assert!(check_jordan(&jord).passed);
        assert!(!check_jordan(&assoc).passed);
    }
}
