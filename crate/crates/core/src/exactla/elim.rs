use super::matrix::{axpy, is_zero_vec, unit_vec, ExactMatrix};
use crate::error::{Error, Result};
use crate::scalar::CycScalar;

/// Reduced row echelon basis of a subspace of Kⁿ, grown one vector at a time.
///
/// With tracking enabled every stored row also carries its expression in
/// terms of the accepted input vectors, which gives coordinates in that basis.
#[derive(Clone, Debug)]
pub struct Echelon {
    n: usize,
    rows: Vec<Vec<CycScalar>>,
    pivots: Vec<usize>,
    tags: Option<Vec<Vec<CycScalar>>>,
    accepted: Vec<Vec<CycScalar>>,
}

impl Echelon {
    pub fn new(n: usize) -> Self {
        Echelon {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
            tags: None,
            accepted: Vec::new(),
        }
    }

    pub fn tracking(n: usize) -> Self {
        Echelon {
            tags: Some(Vec::new()),
            ..Self::new(n)
        }
    }

    /// Tracking echelon of an independent list; fails when the list is dependent.
    pub fn from_basis(n: usize, basis: &[Vec<CycScalar>]) -> Result<Self> {
        let mut e = Self::tracking(n);
        for v in basis {
            if !e.insert(v) {
                return Err(Error::Dimension("basis vectors are dependent".into()));
            }
        }
        Ok(e)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<CycScalar>] {
        &self.rows
    }

    /// The accepted input vectors, in insertion order.
    pub fn accepted(&self) -> &[Vec<CycScalar>] {
        &self.accepted
    }

    /// Residual of `v` after elimination, plus the multipliers used per row.
    fn reduce_with(&self, v: &[CycScalar]) -> (Vec<CycScalar>, Vec<CycScalar>) {
        let mut r = v.to_vec();
        let mut used = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                axpy(&mut r, &(-&c), row);
            }
            used.push(c);
        }
        (r, used)
    }

    pub fn reduce(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        self.reduce_with(v).0
    }

    pub fn contains(&self, v: &[CycScalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Adds `v` if it is independent of the current span. Returns whether it was added.
    pub fn insert(&mut self, v: &[CycScalar]) -> bool {
        debug_assert_eq!(v.len(), self.n);
        let (mut r, used) = self.reduce_with(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let k = self.accepted.len();
        let mut tag = Vec::new();
        if let Some(tags) = &self.tags {
            tag = unit_vec(k + 1, k);
            for (c, t) in used.iter().zip(tags) {
                if !c.is_zero() {
                    axpy(&mut tag, &(-c), t);
                }
            }
        }
        let inv = r[p].inv().expect("nonzero pivot");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for x in tag.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (i, row) in self.rows.iter_mut().enumerate() {
            let c = row[p].clone();
            if c.is_zero() {
                continue;
            }
            let neg = -&c;
            axpy(row, &neg, &r);
            if let Some(tags) = &mut self.tags {
                tags[i].resize(k + 1, CycScalar::zero());
                axpy(&mut tags[i], &neg, &tag);
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        if let Some(tags) = &mut self.tags {
            tags.push(tag);
        }
        self.accepted.push(v.to_vec());
        true
    }

    /// Coordinates of `v` in the accepted basis. Requires tracking.
    pub fn coords(&self, v: &[CycScalar]) -> Result<Vec<CycScalar>> {
        let tags = self
            .tags
            .as_ref()
            .ok_or_else(|| Error::Dimension("echelon built without tracking".into()))?;
        let (r, used) = self.reduce_with(v);
        if !is_zero_vec(&r) {
            return Err(Error::NotInSubspace);
        }
        let mut out = vec![CycScalar::zero(); self.accepted.len()];
        for (c, t) in used.iter().zip(tags) {
            axpy(&mut out, c, t);
        }
        Ok(out)
    }
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &ExactMatrix) -> (ExactMatrix, Vec<usize>) {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.insert(m.row(i));
    }
    let mut order: Vec<usize> = (0..e.rank()).collect();
    order.sort_by_key(|&i| e.pivots[i]);
    let mut out = ExactMatrix::zeros(m.rows(), m.cols());
    let mut piv = Vec::new();
    for (r, &i) in order.iter().enumerate() {
        out.row_mut(r).clone_from_slice(&e.rows[i]);
        piv.push(e.pivots[i]);
    }
    (out, piv)
}

pub fn rank(m: &ExactMatrix) -> usize {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.insert(m.row(i));
    }
    e.rank()
}

/// Basis of {v : Mv = 0}.
pub fn kernel(m: &ExactMatrix) -> Vec<Vec<CycScalar>> {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.insert(m.row(i));
    }
    kernel_of_echelon(&e)
}

pub fn kernel_of_echelon(e: &Echelon) -> Vec<Vec<CycScalar>> {
    let n = e.ambient();
    let mut is_pivot = vec![false; n];
    for &p in e.pivots() {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for f in (0..n).filter(|&f| !is_pivot[f]) {
        let mut v = vec![CycScalar::zero(); n];
        v[f] = CycScalar::one();
        for (row, &p) in e.rows().iter().zip(e.pivots()) {
            if !row[f].is_zero() {
                v[p] = -&row[f];
            }
        }
        out.push(v);
    }
    out
}

pub fn inverse(m: &ExactMatrix) -> Result<ExactMatrix> {
    if !m.is_square() {
        return Err(Error::Dimension("inverse of non-square matrix".into()));
    }
    let n = m.rows();
    let mut e = Echelon::tracking(n);
    for i in 0..n {
        if !e.insert(m.row(i)) {
            return Err(Error::DivisionByZero);
        }
    }
    let mut inv = ExactMatrix::zeros(n, n);
    let tags = e.tags.as_ref().expect("tracking");
    for (t, &p) in tags.iter().zip(&e.pivots) {
        for (j, x) in t.iter().enumerate() {
            inv[(p, j)] = x.clone();
        }
    }
    Ok(inv)
}

/// Some solution of `Mx = b`, or `None` if the system is inconsistent.
pub fn solve(m: &ExactMatrix, b: &[CycScalar]) -> Result<Option<Vec<CycScalar>>> {
    if b.len() != m.rows() {
        return Err(Error::Dimension("right-hand side".into()));
    }
    let n = m.cols();
    let mut e = Echelon::new(n + 1);
    for i in 0..m.rows() {
        let mut row = m.row(i).to_vec();
        row.push(b[i].clone());
        e.insert(&row);
    }
    if e.pivots().contains(&n) {
        return Ok(None);
    }
    let mut x = vec![CycScalar::zero(); n];
    for (row, &p) in e.rows().iter().zip(e.pivots()) {
        x[p] = row[n].clone();
    }
    Ok(Some(x))
}

/// Basis of the intersection of two subspaces of Kⁿ.
pub fn intersect(n: usize, a: &[Vec<CycScalar>], b: &[Vec<CycScalar>]) -> Vec<Vec<CycScalar>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve Σ xᵢ aᵢ − Σ yⱼ bⱼ = 0 and read off Σ xᵢ aᵢ.
    let k = a.len() + b.len();
    let mut m = ExactMatrix::zeros(n, k);
    for (j, v) in a.iter().enumerate() {
        for i in 0..n {
            m[(i, j)] = v[i].clone();
        }
    }
    for (j, v) in b.iter().enumerate() {
        for i in 0..n {
            m[(i, a.len() + j)] = -&v[i];
        }
    }
    let mut out = Echelon::new(n);
    let mut res = Vec::new();
    for sol in kernel(&m) {
        let mut w = vec![CycScalar::zero(); n];
        for (x, v) in sol.iter().zip(a) {
            axpy(&mut w, x, v);
        }
        if out.insert(&w) {
            res.push(w);
        }
    }
    res
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn kernel_examples() {
        assert!(kernel(&ExactMatrix::identity(3)).is_empty());
        assert_eq!(kernel(&ExactMatrix::zeros(2, 3)).len(), 3);
        let m = ExactMatrix::from_int_rows(&[vec![1, 2, 3], vec![2, 4, 6]]).unwrap();
        let k = kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&m.mul_vec(v).unwrap()));
        }
    }

    #[test]
    fn inverse_and_solve() {
        let m = ExactMatrix::from_rows(vec![
            vec![int(2), CycScalar::i()],
            vec![CycScalar::omega(), int(1)],
        ])
        .unwrap();
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), ExactMatrix::identity(2));
        let b = vec![int(1), int(0)];
        let x = solve(&m, &b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), b);
        let sing = ExactMatrix::from_int_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(inverse(&sing).is_err());
        assert!(solve(&sing, &[int(1), int(0)]).unwrap().is_none());
    }

    #[test]
    fn coordinates_in_a_basis() {
        let basis = vec![vec![int(1), int(1), int(0)], vec![int(0), int(1), int(1)]];
        let e = Echelon::from_basis(3, &basis).unwrap();
        let c = e.coords(&[int(2), int(5), int(3)]).unwrap();
        assert_eq!(c, vec![int(2), int(3)]);
        assert!(e.coords(&[int(1), int(0), int(0)]).is_err());
    }

    #[test]
    fn intersection() {
        let a = vec![vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)]];
        let b = vec![vec![int(0), int(1), int(0)], vec![int(0), int(0), int(1)]];
        let c = intersect(3, &a, &b);
        assert_eq!(c.len(), 1);
        assert_eq!(rref(&ExactMatrix::from_rows(c).unwrap()).0.row(0), &[int(0), int(1), int(0)]);
    }
}
