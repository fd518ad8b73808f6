use serde::Serialize;

use super::forms::killing_form;
use super::table::{to_sparse, AlgebraTable};
use crate::error::Result;
use crate::exactla::{is_zero_vec, kernel_of_echelon, minimal_polynomial, unit_vec, Echelon};
use crate::scalar::CycScalar;

/// A subspace of an algebra, as an independent list of coordinate vectors.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<CycScalar>>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn whole(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: (0..n).map(|i| unit_vec(n, i)).collect(),
        }
    }

    pub fn span(n: usize, vectors: impl IntoIterator<Item = Vec<CycScalar>>) -> Self {
        let mut e = Echelon::new(n);
        let mut basis = Vec::new();
        for v in vectors {
            if e.insert(&v) {
                basis.push(v);
            }
        }
        Subspace { ambient_dim: n, basis }
    }

    pub fn contains(&self, v: &[CycScalar]) -> bool {
        let mut e = Echelon::new(self.ambient_dim);
        for b in &self.basis {
            e.insert(b);
        }
        e.contains(v)
    }
}

/// [L, L].
pub fn derived_algebra(l: &AlgebraTable) -> Subspace {
    let n = l.dim();
    let mut e = Echelon::new(n);
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = super::table::to_dense(n, l.basis_product(i, j));
            if e.rank() < n && e.insert(&p) {
                basis.push(p);
            }
        }
    }
    Subspace { ambient_dim: n, basis }
}

/// {x : [x, L] = 0}.
pub fn center(l: &AlgebraTable) -> Subspace {
    let n = l.dim();
    // One equation per (j, k): the coefficient of b_k in [x, b_j] vanishes.
    let mut rows: Vec<Vec<CycScalar>> = vec![vec![CycScalar::zero(); n]; n * n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in l.basis_product(i, j) {
                rows[j * n + k][i] = c.clone();
            }
        }
    }
    let mut e = Echelon::new(n);
    for r in rows.iter().filter(|r| !is_zero_vec(r)) {
        if e.rank() == n {
            break;
        }
        e.insert(r);
    }
    Subspace {
        ambient_dim: n,
        basis: kernel_of_echelon(&e),
    }
}

/// Subalgebra generated by the given vectors.
pub fn closure(l: &AlgebraTable, gens: &[Vec<CycScalar>]) -> Subspace {
    let n = l.dim();
    let mut e = Echelon::new(n);
    let mut basis: Vec<Vec<CycScalar>> = Vec::new();
    for g in gens {
        if e.insert(g) {
            basis.push(g.clone());
        }
    }
    let mut done = 0;
    while done < basis.len() {
        let x = basis[done].clone();
        for j in 0..=done {
            let y = basis[j].clone();
            for p in [l.mul(&x, &y), l.mul(&y, &x)] {
                if e.insert(&p) {
                    basis.push(p);
                }
            }
        }
        done += 1;
    }
    Subspace { ambient_dim: n, basis }
}

/// The two-sided ideal generated by `v`.
pub fn ideal_generated(l: &AlgebraTable, v: &[CycScalar]) -> Subspace {
    let n = l.dim();
    let mut e = Echelon::new(n);
    let mut basis: Vec<Vec<CycScalar>> = Vec::new();
    if e.insert(v) {
        basis.push(v.to_vec());
    }
    let mut done = 0;
    while done < basis.len() && basis.len() < n {
        let x = to_sparse(&basis[done]);
        for i in 0..n {
            let b = vec![(i, CycScalar::one())];
            for p in [l.mul_sparse(&b, &x), l.mul_sparse(&x, &b)] {
                if e.insert(&p) {
                    basis.push(p);
                }
            }
        }
        done += 1;
    }
    Subspace { ambient_dim: n, basis }
}

/// Facts used to accept a subalgebra as simple.
#[derive(Clone, Debug, Serialize)]
pub struct SimplicityEvidence {
    pub dim: usize,
    pub perfect: bool,
    pub center_dim: usize,
    pub killing_nondegenerate: bool,
    pub seeds_tried: usize,
    pub proper_ideal_found: bool,
}

impl SimplicityEvidence {
    pub fn looks_simple(&self) -> bool {
        self.dim > 0
            && self.perfect
            && self.center_dim == 0
            && self.killing_nondegenerate
            && !self.proper_ideal_found
    }
}

/// Nondegenerate Killing form, trivial center, perfect, and no proper ideal
/// generated by any basis vector or by the sum of two consecutive basis vectors.
pub fn simplicity_evidence(l: &AlgebraTable) -> Result<SimplicityEvidence> {
    let n = l.dim();
    let kill = killing_form(l)?.inertia()?;
    let mut seeds: Vec<Vec<CycScalar>> = (0..n).map(|i| unit_vec(n, i)).collect();
    for i in 0..n.saturating_sub(1) {
        let mut v = unit_vec(n, i);
        v[i + 1] = CycScalar::one();
        seeds.push(v);
    }
    let proper = seeds.iter().any(|s| ideal_generated(l, s).dim() < n);
    Ok(SimplicityEvidence {
        dim: n,
        perfect: derived_algebra(l).dim() == n,
        center_dim: center(l).dim(),
        killing_nondegenerate: kill.is_nondegenerate(),
        seeds_tried: seeds.len(),
        proper_ideal_found: proper,
    })
}

/// ad x diagonalizable over the algebraic closure, via a squarefree minimal polynomial.
pub fn is_semisimple_element(l: &AlgebraTable, x: &[CycScalar]) -> Result<bool> {
    Ok(minimal_polynomial(&l.ad(x))?.is_squarefree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::structalg::AlgebraKind;

    #[test]
    fn abelian_center_is_everything() {
        let a = AlgebraTable::zero_algebra(3, AlgebraKind::Lie);
        assert_eq!(center(&a).dim(), 3);
        assert_eq!(derived_algebra(&a).dim(), 0);
        assert!(!simplicity_evidence(&a).unwrap().looks_simple());
    }

    #[test]
    fn heisenberg() {
        // [x, y] = z
        let h = AlgebraTable::from_fn(vec!["x".into(), "y".into(), "z".into()], AlgebraKind::Lie, |i, j| {
            let mut v = vec![CycScalar::zero(); 3];
            match (i, j) {
                (0, 1) => v[2] = int(1),
                (1, 0) => v[2] = int(-1),
                _ => {}
            }
            v
        })
        .unwrap();
        assert_eq!(center(&h).dim(), 1);
        assert_eq!(derived_algebra(&h).dim(), 1);
        assert_eq!(closure(&h, &[unit_vec(3, 0), unit_vec(3, 1)]).dim(), 3);
        assert_eq!(ideal_generated(&h, &unit_vec(3, 2)).dim(), 1);
        assert!(!is_semisimple_element(&h, &unit_vec(3, 0)).unwrap());
        assert!(is_semisimple_element(&h, &unit_vec(3, 2)).unwrap());
    }
}
