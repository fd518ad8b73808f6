//! The E6 root system and a Chevalley basis with integer structure constants.
//!
//! Simple roots are numbered so that α2 is attached to the branch node α4,
//! with the chain α1 − α3 − α4 − α5 − α6.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{kernel, ExactMatrix};
use crate::gradings::{Component, FgAbelianGroup, GradedDecomposition};
use crate::scalar::{int, CycScalar};
use crate::structalg::{is_automorphism, AlgebraKind, AlgebraTable};

pub type Root = [i64; 6];

pub const CARTAN_E6: [[i64; 6]; 6] = [
    [2, 0, -1, 0, 0, 0],
    [0, 2, 0, -1, 0, 0],
    [-1, 0, 2, -1, 0, 0],
    [0, -1, -1, 2, -1, 0],
    [0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, -1, 2],
];

#[derive(Clone, Debug, Serialize)]
pub struct RootSystemE6 {
    /// Positive roots by height, then lexicographically.
    pub positive: Vec<Root>,
    #[serde(skip)]
    index: HashMap<Root, usize>,
}

/// (α, β) for the symmetric Cartan matrix.
pub fn pairing(a: &Root, b: &Root) -> i64 {
    let mut s = 0;
    for i in 0..6 {
        for j in 0..6 {
            s += a[i] * CARTAN_E6[i][j] * b[j];
        }
    }
    s
}

fn neg(a: &Root) -> Root {
    a.map(|x| -x)
}

fn add(a: &Root, b: &Root) -> Root {
    let mut r = *a;
    for i in 0..6 {
        r[i] += b[i];
    }
    r
}

fn is_positive(a: &Root) -> bool {
    a.iter().sum::<i64>() > 0
}

impl RootSystemE6 {
    /// Closure of the simple roots under the simple reflections.
    pub fn build() -> Self {
        let mut all: Vec<Root> = (0..6)
            .map(|i| {
                let mut r = [0; 6];
                r[i] = 1;
                r
            })
            .collect();
        let mut seen: std::collections::HashSet<Root> = all.iter().copied().collect();
        let mut k = 0;
        while k < all.len() {
            let r = all[k];
            for i in 0..6 {
                let c: i64 = (0..6).map(|j| r[j] * CARTAN_E6[j][i]).sum();
                let mut w = r;
                w[i] -= c;
                if seen.insert(w) {
                    all.push(w);
                }
            }
            k += 1;
        }
        let mut positive: Vec<Root> = all.into_iter().filter(is_positive).collect();
        positive.sort_by_key(|r| (r.iter().sum::<i64>(), *r));
        let mut index = HashMap::new();
        for (i, r) in positive.iter().enumerate() {
            index.insert(*r, i);
        }
        RootSystemE6 { positive, index }
    }

    pub fn roots(&self) -> Vec<Root> {
        self.positive.iter().copied().chain(self.positive.iter().map(neg)).collect()
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive.len()
    }

    pub fn is_root(&self, a: &Root) -> bool {
        self.index.contains_key(a) || self.index.contains_key(&neg(a))
    }

    pub fn positive_index(&self, a: &Root) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn highest_root(&self) -> Root {
        *self.positive.last().expect("nonempty")
    }

    /// Largest p with β − pα a root (β itself a root).
    pub fn string_down(&self, a: &Root, b: &Root) -> usize {
        let mut p = 0;
        let mut cur = *b;
        loop {
            let next = add(&cur, &neg(a));
            if !self.is_root(&next) {
                return p;
            }
            cur = next;
            p += 1;
        }
    }
}

/// ε(α, β) = (−1)^{αᵀ M β} with M upper triangular: 1 on the diagonal and on
/// the diagram edges i < j.
fn cocycle(a: &Root, b: &Root) -> i64 {
    let mut s = 0;
    for i in 0..6 {
        s += a[i] * b[i];
        for j in i + 1..6 {
            if CARTAN_E6[i][j] == -1 {
                s += a[i] * b[j];
            }
        }
    }
    if s.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Chevalley basis h_1..h_6, e_α, f_α (α > 0) as a Lie table over Q.
#[derive(Clone, Debug)]
pub struct ChevalleyBasisE6 {
    pub roots: RootSystemE6,
    table: AlgebraTable,
}

pub const SIGN_CONVENTION: &str = "N(a,b) = s(a)s(b)s(a+b)(-1)^(a^T M b), M upper unitriangular with ones on diagram edges; e_a = x_a, f_a = -x_(-a)";

impl ChevalleyBasisE6 {
    pub fn build() -> Result<Self> {
        let roots = RootSystemE6::build();
        let np = roots.positive.len();
        let n = 6 + 2 * np;
        let mut names: Vec<String> = (1..=6).map(|i| format!("h{i}")).collect();
        let label = |r: &Root| r.iter().map(|x| x.to_string()).collect::<String>();
        names.extend(roots.positive.iter().map(|r| format!("e{}", label(r))));
        names.extend(roots.positive.iter().map(|r| format!("f{}", label(r))));
        let all = roots.roots();
        let idx = |r: &Root| -> Option<usize> {
            if is_positive(r) {
                roots.positive_index(r).map(|k| 6 + k)
            } else {
                roots.positive_index(&neg(r)).map(|k| 6 + np + k)
            }
        };
        let sgn = |r: &Root| if is_positive(r) { 1 } else { -1 };
        let mut prod = vec![Vec::new(); n * n];
        for (ai, a) in all.iter().enumerate() {
            let ia = 6 + ai;
            for i in 0..6 {
                let c: i64 = (0..6).map(|j| a[j] * CARTAN_E6[j][i]).sum();
                if c != 0 {
                    prod[i * n + ia] = vec![(ia, int(c))];
                    prod[ia * n + i] = vec![(ia, int(-c))];
                }
            }
            for b in &all {
                let ib = idx(b).expect("root");
                let s = add(a, b);
                if s == [0; 6] {
                    // [e_α, f_α] = h_α = Σ k_i h_i
                    let h: Vec<(usize, CycScalar)> =
                        (0..6).filter(|&i| a[i] != 0).map(|i| (i, int(a[i]))).collect();
                    prod[ia * n + ib] = h;
                } else if let Some(is) = idx(&s) {
                    let c = sgn(a) * sgn(b) * sgn(&s) * cocycle(a, b);
                    prod[ia * n + ib] = vec![(is, int(c))];
                }
            }
        }
        let table = AlgebraTable::from_sparse(names, AlgebraKind::Lie, prod)?;
        Ok(ChevalleyBasisE6 { roots, table })
    }

    pub fn table(&self) -> &AlgebraTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn h(&self, i: usize) -> usize {
        i - 1
    }

    pub fn e(&self, a: &Root) -> Option<usize> {
        self.roots.positive_index(a).map(|k| 6 + k)
    }

    pub fn f(&self, a: &Root) -> Option<usize> {
        self.roots.positive_index(a).map(|k| 6 + self.roots.positive.len() + k)
    }

    /// Index of the root vector e_α (α > 0) or f_{−α} (α < 0).
    pub fn root_vector(&self, a: &Root) -> Option<usize> {
        if is_positive(a) {
            self.e(a)
        } else {
            self.f(&neg(a))
        }
    }

    /// The root of a basis vector, zero for the Cartan part.
    pub fn root_of(&self, i: usize) -> Root {
        let np = self.roots.positive.len();
        if i < 6 {
            [0; 6]
        } else if i < 6 + np {
            self.roots.positive[i - 6]
        } else {
            neg(&self.roots.positive[i - 6 - np])
        }
    }

    /// N_{α,β} with [e_α, e_β] = N_{α,β} e_{α+β}, writing e_{−α} = f_α.
    pub fn structure_constant(&self, a: &Root, b: &Root) -> Result<i64> {
        let (Some(i), Some(j)) = (self.root_vector(a), self.root_vector(b)) else {
            return Err(Error::Check("not a root".into()));
        };
        let s = add(a, b);
        let Some(k) = self.root_vector(&s) else {
            return Ok(0);
        };
        match self.table.basis_product(i, j).as_slice() {
            [] => Ok(0),
            [(kk, c)] if *kk == k => c
                .as_rational()
                .and_then(|r| r.to_i64())
                .ok_or_else(|| Error::Check("non-integer constant".into())),
            _ => Err(Error::Check("bracket of root vectors is not a root vector".into())),
        }
    }

    /// t_s: multiplies the root space of α by Π s_i^{k_i}.
    pub fn torus_auto(&self, s: [i64; 6]) -> Result<ExactMatrix> {
        if s.iter().any(|&x| x != 1 && x != -1) {
            return Err(Error::Check("torus parameters must be ±1".into()));
        }
        let d: Vec<CycScalar> = (0..self.dim())
            .map(|i| {
                let r = self.root_of(i);
                let odd: i64 = (0..6).filter(|&j| s[j] == -1).map(|j| r[j]).sum();
                int(if odd.rem_euclid(2) == 0 { 1 } else { -1 })
            })
            .collect();
        Ok(ExactMatrix::diagonal(&d))
    }

    /// ω: e_α ↦ −f_α, f_α ↦ −e_α, h ↦ −h.
    pub fn omega_auto(&self) -> ExactMatrix {
        let n = self.dim();
        let np = self.roots.positive.len();
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..6 {
            m[(i, i)] = int(-1);
        }
        for k in 0..np {
            m[(6 + np + k, 6 + k)] = int(-1);
            m[(6 + k, 6 + np + k)] = int(-1);
        }
        m
    }

    pub fn is_automorphism(&self, m: &ExactMatrix) -> Result<bool> {
        is_automorphism(&self.table, m)
    }

    /// dim {x : t x = x}.
    pub fn fixed_dim(&self, t: &ExactMatrix) -> Result<usize> {
        Ok(kernel(&t.sub(&ExactMatrix::identity(self.dim()))?).len())
    }

    /// Z-grading with deg e_α = Σ k_i l_i.
    pub fn z_grading_from_weights(&self, l: [i64; 6]) -> Result<GradedDecomposition> {
        let degs: Vec<Vec<i64>> = (0..self.dim())
            .map(|i| {
                let r = self.root_of(i);
                vec![(0..6).map(|j| r[j] * l[j]).sum()]
            })
            .collect();
        GradedDecomposition::from_basis_degrees(FgAbelianGroup::free(1), &degs)
    }

    /// Non-negative weights giving a grading S_{−2} ⊕ … ⊕ S_2 with S_1 ≠ 0.
    pub fn five_term_weightings(&self) -> Vec<[i64; 6]> {
        let top = self.roots.highest_root();
        let mut out = Vec::new();
        for code in 0..3i64.pow(6) {
            let mut l = [0; 6];
            let mut c = code;
            for x in l.iter_mut() {
                *x = c % 3;
                c /= 3;
            }
            if (0..6).map(|j| top[j] * l[j]).sum::<i64>() != 2 {
                continue;
            }
            let has_one = self
                .roots
                .positive
                .iter()
                .any(|r| (0..6).map(|j| r[j] * l[j]).sum::<i64>() == 1);
            if has_one {
                out.push(l);
            }
        }
        out.sort();
        out.reverse();
        out
    }

    /// Diagonal grading by the roots, over Z⁶.
    pub fn root_grading(&self) -> Result<GradedDecomposition> {
        let comps = (0..self.dim())
            .map(|i| Component {
                degree: self.root_of(i).to_vec(),
                basis: vec![crate::exactla::unit_vec(self.dim(), i)],
            })
            .collect();
        GradedDecomposition::from_components(FgAbelianGroup::free(6), self.dim(), comps)
    }

    pub fn roots_json(&self) -> serde_json::Value {
        serde_json::json!({
            "simple_root_order": "a1-a3-a4-a5-a6 chain, a2 on a4",
            "cartan": CARTAN_E6,
            "positive_roots": self.roots.positive,
            "sign_convention": SIGN_CONVENTION,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        let r = RootSystemE6::build();
        assert_eq!(r.num_roots(), 72);
        assert_eq!(r.positive.len(), 36);
        assert_eq!(r.highest_root(), [1, 2, 2, 3, 2, 1]);
        let even = r.positive.iter().filter(|a| a[0] % 2 == 0).count();
        assert_eq!((even, 36 - even), (20, 16));
        assert!(r.positive.iter().all(|a| pairing(a, a) == 2));
    }

    #[test]
    fn cocycle_on_opposite_roots() {
        let r = RootSystemE6::build();
        assert!(r.positive.iter().all(|a| cocycle(a, &neg(a)) == -1));
    }

    #[test]
    fn defining_relations() {
        let c = ChevalleyBasisE6::build().unwrap();
        let a1 = [1, 0, 0, 0, 0, 0];
        let (e, f) = (c.e(&a1).unwrap(), c.f(&a1).unwrap());
        assert_eq!(c.table().basis_product(e, f), &vec![(0, int(1))]);
        for i in 0..6 {
            for j in 0..6 {
                let mut aj = [0; 6];
                aj[j] = 1;
                let ej = c.e(&aj).unwrap();
                let p = c.table().basis_product(i, ej);
                let expect: Vec<(usize, CycScalar)> =
                    if CARTAN_E6[j][i] == 0 { vec![] } else { vec![(ej, int(CARTAN_E6[j][i]))] };
                assert_eq!(p, &expect);
            }
        }
    }

    #[test]
    fn weights_remark() {
        let c = ChevalleyBasisE6::build().unwrap();
        let w = c.five_term_weightings();
        assert_eq!(w.len(), 4);
        assert!(w.contains(&[0, 1, 0, 0, 0, 0]));
        assert!(w.contains(&[1, 0, 0, 0, 0, 1]));
    }
}
