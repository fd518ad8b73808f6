use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{Echelon, ExactMatrix};
use crate::scalar::CycScalar;

/// Sparse coordinate vector, sorted by index, zero entries omitted.
pub type SparseVec = Vec<(usize, CycScalar)>;

pub fn to_sparse(v: &[CycScalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(n: usize, v: &SparseVec) -> Vec<CycScalar> {
    let mut out = vec![CycScalar::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Which identities an algebra is claimed to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Lie,
    Jordan,
    Plain,
}

/// Finite-dimensional algebra given by structure constants on a named basis.
#[derive(Clone, Debug)]
pub struct AlgebraTable {
    dim: usize,
    names: Vec<String>,
    kind: AlgebraKind,
    prod: Vec<SparseVec>,
}

/// Serialized table: only nonzero constants, `b_i b_j = Σ c b_k`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraTableJson {
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub kind: AlgebraKind,
    pub entries: Vec<(usize, usize, usize, CycScalar)>,
}

impl AlgebraTable {
    /// Builds a table from a product function on basis indices returning dense vectors.
    pub fn from_fn(
        names: Vec<String>,
        kind: AlgebraKind,
        mut f: impl FnMut(usize, usize) -> Vec<CycScalar>,
    ) -> Result<Self> {
        let dim = names.len();
        let mut prod = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                if v.len() != dim {
                    return Err(Error::Dimension(format!("product ({i},{j}) has wrong length")));
                }
                prod.push(to_sparse(&v));
            }
        }
        Ok(AlgebraTable { dim, names, kind, prod })
    }

    /// Builds a table from sparse products.
    pub fn from_sparse(names: Vec<String>, kind: AlgebraKind, prod: Vec<SparseVec>) -> Result<Self> {
        let dim = names.len();
        if prod.len() != dim * dim || prod.iter().flatten().any(|(k, _)| *k >= dim) {
            return Err(Error::Dimension("sparse product table".into()));
        }
        Ok(AlgebraTable { dim, names, kind, prod })
    }

    pub fn zero_algebra(dim: usize, kind: AlgebraKind) -> Self {
        AlgebraTable {
            dim,
            names: (0..dim).map(|i| format!("b{i}")).collect(),
            kind,
            prod: vec![Vec::new(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: AlgebraKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::Dimension("basis names".into()));
        }
        self.names = names;
        Ok(self)
    }

    /// `b_i · b_j` as a sparse vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.prod[i * self.dim + j]
    }

    /// Product of two dense vectors.
    pub fn mul(&self, x: &[CycScalar], y: &[CycScalar]) -> Vec<CycScalar> {
        let mut out = vec![CycScalar::zero(); self.dim];
        let ys: Vec<(usize, &CycScalar)> = y.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &ys {
                let p = self.basis_product(i, j);
                if p.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in p {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Product of sparse vectors.
    pub fn mul_sparse(&self, x: &SparseVec, y: &SparseVec) -> Vec<CycScalar> {
        let mut out = vec![CycScalar::zero(); self.dim];
        for (i, a) in x {
            for (j, b) in y {
                let p = self.basis_product(*i, *j);
                if p.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in p {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `b_i` (for Lie algebras, `ad b_i`).
    pub fn left_mult_basis(&self, i: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.basis_product(i, j) {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// Matrix of left multiplication by a vector.
    pub fn left_mult(&self, x: &[CycScalar]) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.dim, self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j) {
                    m[(*k, j)] += &(a * c);
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by a vector.
    pub fn right_mult(&self, x: &[CycScalar]) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.dim, self.dim);
        for (j, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for i in 0..self.dim {
                for (k, c) in self.basis_product(i, j) {
                    m[(*k, i)] += &(a * c);
                }
            }
        }
        m
    }

    pub fn ad(&self, x: &[CycScalar]) -> ExactMatrix {
        self.left_mult(x)
    }

    /// All structure constants lie in the real subfield.
    pub fn is_real(&self) -> bool {
        self.prod.iter().flatten().all(|(_, c)| c.is_real())
    }

    /// All structure constants are rational.
    pub fn is_rational(&self) -> bool {
        self.prod.iter().flatten().all(|(_, c)| c.is_rational())
    }

    pub fn nonzero_count(&self) -> usize {
        self.prod.iter().map(Vec::len).sum()
    }

    /// Re-expresses the algebra on the span of `basis`, which must be closed
    /// under the product. Fails with `NotInSubspace` otherwise.
    pub fn restrict(&self, basis: &[Vec<CycScalar>], names: Vec<String>) -> Result<AlgebraTable> {
        if names.len() != basis.len() {
            return Err(Error::Dimension("basis names".into()));
        }
        let ech = Echelon::from_basis(self.dim, basis)?;
        let k = basis.len();
        let sparse: Vec<SparseVec> = basis.iter().map(|v| to_sparse(v)).collect();
        let mut prod = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                let p = self.mul_sparse(&sparse[i], &sparse[j]);
                prod.push(to_sparse(&ech.coords(&p)?));
            }
        }
        Ok(AlgebraTable {
            dim: k,
            names,
            kind: self.kind,
            prod,
        })
    }

    /// Scales every product of two basis elements with `odd[i] && odd[j]` by `t`.
    pub fn scale_odd_products(&self, odd: &[bool], t: &CycScalar) -> Result<AlgebraTable> {
        if odd.len() != self.dim {
            return Err(Error::Dimension("parity vector".into()));
        }
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if odd[i] && odd[j] {
                    for (_, c) in out.prod[i * self.dim + j].iter_mut() {
                        *c = &*c * t;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> AlgebraTableJson {
        let mut entries = Vec::with_capacity(self.nonzero_count());
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j) {
                    entries.push((i, j, *k, c.clone()));
                }
            }
        }
        AlgebraTableJson {
            dim: self.dim,
            basis_names: self.names.clone(),
            kind: self.kind,
            entries,
        }
    }

    pub fn from_json(j: &AlgebraTableJson) -> Result<Self> {
        if j.basis_names.len() != j.dim {
            return Err(Error::Dimension("basis names".into()));
        }
        let mut prod = vec![Vec::new(); j.dim * j.dim];
        for (i, jj, k, c) in &j.entries {
            if *i >= j.dim || *jj >= j.dim || *k >= j.dim {
                return Err(Error::Dimension("table entry out of range".into()));
            }
            if !c.is_zero() {
                prod[i * j.dim + jj].push((*k, c.clone()));
            }
        }
        for p in prod.iter_mut() {
            p.sort_by_key(|(k, _)| *k);
        }
        Ok(AlgebraTable {
            dim: j.dim,
            names: j.basis_names.clone(),
            kind: j.kind,
            prod,
        })
    }
}

/// Re-expresses a table over a new basis of the same space, given as vectors
/// in the old coordinates. Products must land back in the span, which is automatic
/// for a full basis. When `require_real` is set, all new constants must be real.
pub fn change_basis(
    table: &AlgebraTable,
    basis: &[Vec<CycScalar>],
    names: Vec<String>,
    require_real: bool,
) -> Result<AlgebraTable> {
    let t = table.restrict(basis, names)?;
    if require_real && !t.is_real() {
        return Err(Error::Check("structure constants are not real in the new basis".into()));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn sl2() -> AlgebraTable {
        // h, e, f with [h,e]=2e, [h,f]=-2f, [e,f]=h
        let names = ["h", "e", "f"].map(String::from).to_vec();
        AlgebraTable::from_fn(names, AlgebraKind::Lie, |i, j| {
            let mut v = vec![CycScalar::zero(); 3];
            match (i, j) {
                (0, 1) => v[1] = int(2),
                (1, 0) => v[1] = int(-2),
                (0, 2) => v[2] = int(-2),
                (2, 0) => v[2] = int(2),
                (1, 2) => v[0] = int(1),
                (2, 1) => v[0] = int(-1),
                _ => {}
            }
            v
        })
        .unwrap()
    }

    #[test]
    fn json_roundtrip_and_ad() {
        let t = sl2();
        let j = serde_json::to_string(&t.to_json()).unwrap();
        let back = AlgebraTable::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back.to_json().entries, t.to_json().entries);
        let ad_h = t.left_mult_basis(0);
        assert_eq!(ad_h, ExactMatrix::diagonal(&[int(0), int(2), int(-2)]));
    }

    #[test]
    fn restrict_to_subalgebra() {
        let t = sl2();
        let b = vec![vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)]];
        let sub = t.restrict(&b, vec!["h".into(), "e".into()]).unwrap();
        assert_eq!(sub.basis_product(0, 1), &vec![(1, int(2))]);
        let not_closed = vec![vec![int(0), int(1), int(0)], vec![int(0), int(0), int(1)]];
        assert!(t.restrict(&not_closed, vec!["e".into(), "f".into()]).is_err());
    }
}
