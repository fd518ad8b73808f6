use crate::error::{Error, Result};

/// Integer matrix as a list of rows.
pub type IntMatrix = Vec<Vec<i128>>;

/// Smith normal form `D = U·M·V` with `U`, `V` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Diagonal entries of `D`, padded with zeros up to `min(rows, cols)`.
    pub fn invariants(&self) -> Vec<i128> {
        let k = self.d.len().min(self.d.first().map_or(0, Vec::len));
        (0..k).map(|i| self.d[i][i]).collect()
    }
}

fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

fn ck(x: Option<i128>) -> Result<i128> {
    x.ok_or(Error::Overflow("Smith normal form"))
}

/// row[a] += f·row[b]
fn row_add(m: &mut IntMatrix, a: usize, b: usize, f: i128) -> Result<()> {
    if f == 0 {
        return Ok(());
    }
    for j in 0..m[a].len() {
        let t = ck(m[b][j].checked_mul(f))?;
        m[a][j] = ck(m[a][j].checked_add(t))?;
    }
    Ok(())
}

/// col[a] += f·col[b]
fn col_add(m: &mut IntMatrix, a: usize, b: usize, f: i128) -> Result<()> {
    if f == 0 {
        return Ok(());
    }
    for row in m.iter_mut() {
        let t = ck(row[b].checked_mul(f))?;
        row[a] = ck(row[a].checked_add(t))?;
    }
    Ok(())
}

fn col_swap(m: &mut IntMatrix, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn row_neg(m: &mut IntMatrix, a: usize) {
    for x in m[a].iter_mut() {
        *x = -*x;
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Result<Snf> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if m.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension("ragged integer matrix".into()));
    }
    let mut d = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if d[i][j] != 0 && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(u, d, v);
            };
            d.swap(t, pi);
            u.swap(t, pi);
            col_swap(&mut d, t, pj);
            col_swap(&mut v, t, pj);
            let p = d[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = d[i][t] / p;
                row_add(&mut d, i, t, -q)?;
                row_add(&mut u, i, t, -q)?;
                clean &= d[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = d[t][j] / p;
                col_add(&mut d, j, t, -q)?;
                col_add(&mut v, j, t, -q)?;
                clean &= d[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Enforce divisibility by folding an offending row into row t.
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| d[i][j] % p != 0));
            match bad {
                Some(i) => {
                    row_add(&mut d, t, i, 1)?;
                    row_add(&mut u, t, i, 1)?;
                }
                None => {
                    if p < 0 {
                        row_neg(&mut d, t);
                        row_neg(&mut u, t);
                    }
                    break;
                }
            }
        }
    }
    finish(u, d, v)
}

fn finish(u: IntMatrix, d: IntMatrix, v: IntMatrix) -> Result<Snf> {
    Ok(Snf { u, d, v })
}

pub fn int_mat_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0i128; m]; n];
    for i in 0..n {
        if a[i].len() != k {
            return Err(Error::Dimension("integer product".into()));
        }
        for l in 0..k {
            if a[i][l] == 0 {
                continue;
            }
            for j in 0..m {
                let t = ck(a[i][l].checked_mul(b[l][j]))?;
                out[i][j] = ck(out[i][j].checked_add(t))?;
            }
        }
    }
    Ok(out)
}

/// Hermite-style row reduction keeping only a basis of the row lattice.
///
/// Used to shrink long relation lists before the Smith step.
pub fn lattice_basis(rows: &[Vec<i128>], cols: usize) -> Result<IntMatrix> {
    let mut basis: Vec<Vec<i128>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for r in rows {
        let mut r = r.clone();
        while let Some(p) = r.iter().position(|&x| x != 0) {
            match pivots.iter().position(|&q| q == p) {
                None => {
                    if r[p] < 0 {
                        r.iter_mut().for_each(|x| *x = -*x);
                    }
                    basis.push(r);
                    pivots.push(p);
                    break;
                }
                Some(bi) => {
                    // Euclid on the two pivot entries, carried along whole rows.
                    let mut a = std::mem::take(&mut basis[bi]);
                    while r[p] != 0 {
                        let q = a[p] / r[p];
                        for j in 0..cols {
                            a[j] = ck(a[j].checked_sub(ck(q.checked_mul(r[j]))?))?;
                        }
                        std::mem::swap(&mut a, &mut r);
                    }
                    if a[p] < 0 {
                        a.iter_mut().for_each(|x| *x = -*x);
                    }
                    basis[bi] = a;
                }
            }
        }
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: IntMatrix) -> Vec<i128> {
        let s = smith_normal_form(&m).unwrap();
        let prod = int_mat_mul(&int_mat_mul(&s.u, &m).unwrap(), &s.v).unwrap();
        assert_eq!(prod, s.d);
        let inv = s.invariants();
        for w in inv.windows(2) {
            assert!(w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0), "{inv:?}");
        }
        for (i, row) in s.d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert!(i == j || x == 0);
            }
        }
        inv
    }

    #[test]
    fn small_examples() {
        assert_eq!(check(vec![vec![1, 0], vec![0, 1]]), vec![1, 1]);
        assert_eq!(check(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(check(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(check(vec![vec![0, 0], vec![0, 0]]), vec![0, 0]);
    }

    #[test]
    fn lattice_basis_preserves_lattice() {
        let rows = vec![vec![4, 6], vec![6, 9], vec![2, 3], vec![0, 5]];
        let b = lattice_basis(&rows, 2).unwrap();
        assert_eq!(b.len(), 2);
        let det = (b[0][0] * b[1][1] - b[0][1] * b[1][0]).abs();
        assert_eq!(det, 10);
    }
}
