use std::collections::BTreeMap;

use super::table::{to_sparse, AlgebraKind, AlgebraTable};
use crate::error::Result;
use crate::exactla::{kernel_of_echelon, Echelon, ExactMatrix};
use crate::scalar::CycScalar;

/// Derivation algebra as matrices acting on the coordinates of `A`.
#[derive(Clone, Debug)]
pub struct DerivationAlgebra {
    /// Basis matrices, `D b_i = Σ_k D[k][i] b_k`.
    pub basis: Vec<ExactMatrix>,
    /// The Lie algebra structure under the commutator, on `basis`.
    pub table: AlgebraTable,
    coords: Echelon,
}

impl DerivationAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a derivation in the basis.
    pub fn coords(&self, d: &ExactMatrix) -> Result<Vec<CycScalar>> {
        self.coords.coords(d.entries())
    }

    /// Builds the object from an explicit list of independent derivations.
    pub fn from_basis(basis: Vec<ExactMatrix>, prefix: &str) -> Result<Self> {
        let n = basis.first().map_or(0, |m| m.rows());
        let flat: Vec<Vec<CycScalar>> = basis.iter().map(|m| m.entries().to_vec()).collect();
        let coords = Echelon::from_basis(n * n, &flat)?;
        let names = (0..basis.len()).map(|i| format!("{prefix}{i}")).collect();
        let mut prods = Vec::with_capacity(basis.len() * basis.len());
        for a in &basis {
            for b in &basis {
                let c = a.commutator(b)?;
                prods.push(to_sparse(&coords.coords(c.entries())?));
            }
        }
        let table = AlgebraTable::from_sparse(names, AlgebraKind::Lie, prods)?;
        Ok(DerivationAlgebra { basis, table, coords })
    }
}

/// Der(A): the kernel of the Leibniz system d(xy) = d(x)y + x d(y).
///
/// The system in the unknowns D[m][k] is split into connected components of
/// its variable graph and each component is eliminated on its own; with a
/// homogeneous basis this is a block split by degree.
pub fn derivations(a: &AlgebraTable) -> Result<DerivationAlgebra> {
    let n = a.dim();
    let nv = n * n;
    let var = |m: usize, k: usize| m * n + k;
    let mut equations: Vec<BTreeMap<usize, CycScalar>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            // Collect coefficient of b_m in D(b_i b_j) − D(b_i) b_j − b_i D(b_j).
            let mut rows: BTreeMap<usize, BTreeMap<usize, CycScalar>> = BTreeMap::new();
            for (k, c) in a.basis_product(i, j) {
                for m in 0..n {
                    *rows.entry(m).or_default().entry(var(m, *k)).or_default() += c;
                }
            }
            for k in 0..n {
                for (m, c) in a.basis_product(k, j) {
                    *rows.entry(*m).or_default().entry(var(k, i)).or_default() -= c;
                }
                for (m, c) in a.basis_product(i, k) {
                    *rows.entry(*m).or_default().entry(var(k, j)).or_default() -= c;
                }
            }
            for (_, mut eq) in rows {
                eq.retain(|_, c| !c.is_zero());
                if !eq.is_empty() {
                    equations.push(eq);
                }
            }
        }
    }
    // Union-find over variables that share an equation.
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for eq in &equations {
        let mut it = eq.keys();
        let first = *it.next().expect("nonempty");
        for &v in it {
            let (ra, rb) = (find(&mut parent, first), find(&mut parent, v));
            if ra != rb {
                parent[ra] = rb;
            }
        }
    }
    let mut comp_vars: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..nv {
        let r = find(&mut parent, v);
        comp_vars.entry(r).or_default().push(v);
    }
    let mut comp_eqs: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (e, eq) in equations.iter().enumerate() {
        let r = find(&mut parent, *eq.keys().next().expect("nonempty"));
        comp_eqs.entry(r).or_default().push(e);
    }
    let mut solutions: Vec<Vec<CycScalar>> = Vec::new();
    for (root, vars) in &comp_vars {
        let local: BTreeMap<usize, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut ech = Echelon::new(vars.len());
        if let Some(eqs) = comp_eqs.get(root) {
            for &e in eqs {
                if ech.rank() == vars.len() {
                    break;
                }
                let mut row = vec![CycScalar::zero(); vars.len()];
                for (v, c) in &equations[e] {
                    row[local[v]] = c.clone();
                }
                ech.insert(&row);
            }
        }
        for k in kernel_of_echelon(&ech) {
            let mut full = vec![CycScalar::zero(); nv];
            for (i, x) in k.into_iter().enumerate() {
                full[vars[i]] = x;
            }
            solutions.push(full);
        }
    }
    solutions.sort_by_key(|v| v.iter().position(|x| !x.is_zero()));
    let basis: Vec<ExactMatrix> = solutions
        .into_iter()
        .map(|v| ExactMatrix::from_rows(v.chunks(n).map(<[CycScalar]>::to_vec).collect()))
        .collect::<Result<_>>()?;
    DerivationAlgebra::from_basis(basis, "d")
}

/// Checks the Leibniz rule for a single operator on all basis pairs.
pub fn is_derivation(a: &AlgebraTable, d: &ExactMatrix) -> Result<bool> {
    let n = a.dim();
    let cols: Vec<Vec<CycScalar>> = (0..n).map(|i| d.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = d.mul_vec(&super::table::to_dense(n, a.basis_product(i, j)))?;
            let e_i = crate::exactla::unit_vec(n, i);
            let e_j = crate::exactla::unit_vec(n, j);
            let r1 = a.mul(&cols[i], &e_j);
            let r2 = a.mul(&e_i, &cols[j]);
            if (0..n).any(|k| lhs[k] != &r1[k] + &r2[k]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn derivations_of_a_field_are_zero() {
        // R with 1·1 = 1
        let t = AlgebraTable::from_fn(vec!["1".into()], AlgebraKind::Plain, |_, _| vec![int(1)]).unwrap();
        assert_eq!(derivations(&t).unwrap().dim(), 0);
    }

    #[test]
    fn derivations_of_zero_algebra_are_gl() {
        let z = AlgebraTable::zero_algebra(2, AlgebraKind::Plain);
        let d = derivations(&z).unwrap();
        assert_eq!(d.dim(), 4);
        assert!(crate::structalg::check_lie(&d.table).passed);
    }
}
