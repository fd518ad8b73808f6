//! Real forms of sp8(C) obtained by twisting the split form with the
//! automorphisms Ad A, A in the group generated by four monomial matrices.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{kernel, Echelon, ExactMatrix};
use crate::structalg::gram_matrix;
use crate::scalar::{frac, int, CycScalar};

const N: usize = 8;

/// C = [[0, I4], [−I4, 0]].
pub fn symplectic_c() -> ExactMatrix {
    let mut c = ExactMatrix::zeros(N, N);
    for k in 0..4 {
        c[(k, k + 4)] = int(1);
        c[(k + 4, k)] = int(-1);
    }
    c
}

/// A basis of {x : xC + Cxᵀ = 0}.
pub fn sp8_basis() -> Result<Vec<ExactMatrix>> {
    let c = symplectic_c();
    // x ↦ xC + Cxᵀ on the 64 matrix units
    let mut cols = Vec::with_capacity(N * N);
    for i in 0..N {
        for j in 0..N {
            let mut e = ExactMatrix::zeros(N, N);
            e[(i, j)] = int(1);
            let img = e.mul(&c)?.add(&c.mul(&e.transpose())?)?;
            cols.push(img.entries().to_vec());
        }
    }
    let op = ExactMatrix::from_columns(N * N, &cols);
    Ok(kernel(&op)
        .into_iter()
        .map(|v| ExactMatrix::from_rows(v.chunks(N).map(|r| r.to_vec()).collect()).expect("8x8"))
        .collect())
}

fn sigma1_blocks(blocks: &[(usize, usize, bool)]) -> ExactMatrix {
    // (row block, col block, σ1 or I2) in 2×2 blocks
    let mut m = ExactMatrix::zeros(N, N);
    for &(r, c, swap) in blocks {
        for k in 0..2 {
            let l = if swap { 1 - k } else { k };
            m[(2 * r + k, 2 * c + l)] = int(1);
        }
    }
    m
}

/// A_1, …, A_4.
pub fn generators() -> Vec<ExactMatrix> {
    let i = CycScalar::i();
    let a1 = sigma1_blocks(&[(0, 2, false), (1, 3, true), (2, 0, false), (3, 1, true)]).scale(&i);
    let mut d2 = vec![int(1); 4];
    d2.extend(vec![int(-1); 4]);
    let a2 = ExactMatrix::diagonal(&d2).scale(&i);
    let a3 = sigma1_blocks(&[(0, 0, true), (1, 1, true), (2, 2, true), (3, 3, true)]);
    let a4 = ExactMatrix::diagonal(&[
        int(1),
        int(-1),
        -&i,
        i.clone(),
        int(1),
        int(-1),
        i.clone(),
        -&i,
    ]);
    vec![a1, a2, a3, a4]
}

/// Entries scaled so that the first nonzero one is 1.
fn projective_key(m: &ExactMatrix) -> Vec<CycScalar> {
    let e = m.entries();
    let p = e.iter().find(|x| !x.is_zero()).expect("invertible");
    let inv = p.inv().expect("nonzero");
    e.iter().map(|x| x * &inv).collect()
}

fn is_scalar(m: &ExactMatrix) -> bool {
    let d = &m[(0, 0)];
    (0..N).all(|r| (0..N).all(|c| if r == c { &m[(r, c)] == d } else { m[(r, c)].is_zero() }))
}

/// Words of the group as matrices, up to scalars, each with one reduced word.
fn enumerate_group(gens: &[ExactMatrix]) -> Result<Vec<(ExactMatrix, Vec<usize>)>> {
    let id = ExactMatrix::identity(N);
    let mut seen = HashSet::new();
    seen.insert(projective_key(&id));
    let mut out = vec![(id.clone(), Vec::new())];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for (g, a) in gens.iter().enumerate() {
            let m = out[k].0.mul(a)?;
            if seen.insert(projective_key(&m)) {
                let mut w = out[k].1.clone();
                w.push(g);
                out.push((m, w));
                queue.push_back(out.len() - 1);
            }
        }
    }
    Ok(out)
}

/// dim_C of the fixed subalgebra of x ↦ B x B⁻¹ on sp8.
fn fixed_dim(basis: &[ExactMatrix], b: &ExactMatrix, b_inv: &ExactMatrix) -> Result<usize> {
    let mut cols = Vec::with_capacity(basis.len());
    for x in basis {
        let y = b.mul(x)?.mul(b_inv)?.sub(x)?;
        cols.push(y.entries().to_vec());
    }
    // kernel of Σ c_k (Ad B − 1) x_k, in the 64 matrix coordinates
    let op = ExactMatrix::from_columns(N * N, &cols);
    Ok(kernel(&op).len())
}

#[derive(Clone, Debug, Serialize)]
pub struct Sp8Case {
    /// Generator indices 1..4 in a word for A.
    pub word: Vec<usize>,
    pub fixed_dim: usize,
    pub signature: i64,
    /// Signature of the trace form on the fixed points of σ0 Ad A, computed directly.
    pub direct_signature: i64,
    pub in_family: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Sp8Report {
    pub dim: usize,
    /// Size of the group generated by A_1..A_4 modulo scalars.
    pub projective_order: usize,
    pub involutive_cases: usize,
    pub fixed_dims: BTreeSet<usize>,
    pub signatures: BTreeSet<i64>,
    pub formula_agrees: bool,
    /// The 24-dimensional cases are exactly A_1 A_2 A_3^s A_4^r up to scalars.
    pub family_matches: bool,
    pub counts: BTreeMap<usize, usize>,
    pub cases: Vec<Sp8Case>,
}

impl Sp8Report {
    pub fn passed(&self) -> bool {
        self.dim == 36
            && self.fixed_dims == BTreeSet::from([16, 24])
            && self.signatures == BTreeSet::from([-12, 4])
            && self.family_matches
            && self.formula_agrees
    }
}

fn re(z: &CycScalar) -> CycScalar {
    &(z + &z.conj()) * &frac(1, 2)
}

fn im(z: &CycScalar) -> CycScalar {
    &(&(z - &z.conj()) * &frac(1, 2)) * &(-&CycScalar::i())
}

/// Signature of tr(xy) on {x ∈ sp8 : Ā x̄ Ā⁻¹ = x}.
fn direct_signature(basis: &[ExactMatrix], a: &ExactMatrix) -> Result<i64> {
    let n = basis.len();
    let flat: Vec<Vec<CycScalar>> = basis.iter().map(|x| x.entries().to_vec()).collect();
    let ech = Echelon::from_basis(N * N, &flat)?;
    let abar = a.conj();
    let abar_inv = inverse_monomial(&abar)?;
    // σ on real coordinates (Re, Im) of the basis coefficients
    let mut sigma = ExactMatrix::zeros(2 * n, 2 * n);
    for (k, x) in basis.iter().enumerate() {
        let c = ech.coords(abar.mul(x)?.mul(&abar_inv)?.entries())?;
        for (j, z) in c.iter().enumerate() {
            sigma[(j, k)] = re(z);
            sigma[(n + j, k)] = im(z);
            sigma[(j, n + k)] = im(z);
            sigma[(n + j, n + k)] = -&re(z);
        }
    }
    let fixed = kernel(&sigma.sub(&ExactMatrix::identity(2 * n))?);
    if fixed.len() != n {
        return Err(Error::Dimension(format!("real form of dimension {}", fixed.len())));
    }
    let i = CycScalar::i();
    let mats: Vec<ExactMatrix> = fixed
        .iter()
        .map(|v| {
            let mut m = ExactMatrix::zeros(N, N);
            for k in 0..n {
                let coef = &v[k] + &(&i * &v[n + k]);
                if !coef.is_zero() {
                    m = m.add(&basis[k].scale(&coef)).expect("8x8");
                }
            }
            m
        })
        .collect();
    let g = gram_matrix(mats.len(), |p, q| mats[p].mul(&mats[q]).expect("8x8").trace())?;
    g.signature()
}

fn inverse_monomial(m: &ExactMatrix) -> Result<ExactMatrix> {
    // a monomial matrix with unit entries: inverse = conj transpose scaled per entry
    let mut inv = ExactMatrix::zeros(N, N);
    for r in 0..N {
        for c in 0..N {
            if !m[(r, c)].is_zero() {
                inv[(c, r)] = m[(r, c)].inv()?;
            }
        }
    }
    Ok(inv)
}

pub fn sp8_lemma() -> Result<Sp8Report> {
    let basis = sp8_basis()?;
    let gens = generators();
    let c = symplectic_c();
    let group = enumerate_group(&gens)?;
    let family: HashSet<Vec<CycScalar>> = {
        let base = gens[0].mul(&gens[1])?;
        let mut f = HashSet::new();
        for s in 0..2 {
            let mut m = base.clone();
            if s == 1 {
                m = m.mul(&gens[2])?;
            }
            for _ in 0..4 {
                f.insert(projective_key(&m));
                m = m.mul(&gens[3])?;
            }
        }
        f
    };
    let mut cases = Vec::new();
    let mut family_seen = HashSet::new();
    for (a, word) in &group {
        // (σ0 Ad A)² = Ad(Ā A)
        if !is_scalar(&a.conj().mul(a)?) {
            continue;
        }
        let ca = c.mul(a)?;
        let d = fixed_dim(&basis, &ca, &inverse_monomial(&ca)?)?;
        let direct = direct_signature(&basis, a)?;
        let key = projective_key(a);
        let in_family = family.contains(&key);
        if in_family {
            family_seen.insert(key);
        }
        cases.push(Sp8Case {
            word: word.iter().map(|g| g + 1).collect(),
            fixed_dim: d,
            signature: 36 - 2 * d as i64,
            direct_signature: direct,
            in_family,
        });
    }
    let family_matches =
        family_seen.len() == family.len() && cases.iter().all(|c| (c.fixed_dim == 24) == c.in_family);
    let mut counts = BTreeMap::new();
    for c in &cases {
        *counts.entry(c.fixed_dim).or_insert(0) += 1;
    }
    Ok(Sp8Report {
        dim: basis.len(),
        projective_order: group.len(),
        involutive_cases: cases.len(),
        fixed_dims: cases.iter().map(|c| c.fixed_dim).collect(),
        signatures: cases.iter().map(|c| c.signature).collect(),
        formula_agrees: cases.iter().all(|c| c.signature == c.direct_signature),
        family_matches,
        counts,
        cases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp8_has_dimension_36() {
        assert_eq!(sp8_basis().unwrap().len(), 36);
    }

    #[test]
    fn generators_normalize_sp8() {
        let c = symplectic_c();
        for a in generators() {
            // A C Aᵀ is a multiple of C
            let m = a.mul(&c).unwrap().mul(&a.transpose()).unwrap();
            let k = m[(0, 4)].clone();
            assert_eq!(m, c.scale(&k));
        }
    }
}
