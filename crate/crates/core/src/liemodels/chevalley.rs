use serde::Serialize;

use super::restrict_operator;
use crate::error::{Error, Result};
use crate::exactla::{simultaneous_eigensplit, unit_vec, ExactMatrix};
use crate::gradings::{Component, FgAbelianGroup, GradedDecomposition};
use crate::rootsys::{ChevalleyBasisE6, Root};
use crate::scalar::{int, CycScalar};
use crate::structalg::{change_basis, is_semisimple_element, killing_form, AlgebraTable};

/// Orthogonal basis of the Cartan subalgebra, in terms of h_1..h_6.
pub const CARTAN_PRIME: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [1, 0, 2, 0, 0, 0],
    [2, 3, 4, 6, 0, 0],
    [2, 3, 4, 6, 5, 0],
    [2, 3, 4, 6, 5, 4],
];

/// The fixed points of σ0 ω t_s, where σ0 fixes the Chevalley basis.
#[derive(Clone, Debug)]
pub struct ChevalleyRealForm {
    pub s: [i64; 6],
    pub chevalley: ChevalleyBasisE6,
    /// Positive roots on which t_s is 1, then those on which it is −1.
    pub phi0: Vec<Root>,
    pub phi1: Vec<Root>,
    /// Basis vectors in Chevalley coordinates.
    pub basis: Vec<Vec<CycScalar>>,
    table: AlgebraTable,
}

fn torus_sign(s: &[i64; 6], r: &Root) -> i64 {
    let odd: i64 = (0..6).filter(|&j| s[j] == -1).map(|j| r[j]).sum();
    if odd.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn build_chevalley_form(s: [i64; 6]) -> Result<ChevalleyRealForm> {
    if s.iter().any(|&x| x != 1 && x != -1) {
        return Err(Error::Check("t must have order at most 2".into()));
    }
    let chevalley = ChevalleyBasisE6::build()?;
    let n = chevalley.dim();
    let i = CycScalar::i();
    let mut basis = Vec::new();
    let mut names = Vec::new();
    for (j, row) in CARTAN_PRIME.iter().enumerate() {
        let mut v = vec![CycScalar::zero(); n];
        for (k, &c) in row.iter().enumerate() {
            v[k] = &i * &int(c);
        }
        basis.push(v);
        names.push(format!("ih'{}", j + 1));
    }
    let (phi0, phi1): (Vec<Root>, Vec<Root>) =
        chevalley.roots.positive.iter().partition(|r| torus_sign(&s, r) == 1);
    let label = |r: &Root| r.iter().map(|x| x.to_string()).collect::<String>();
    for (roots, sign) in [(&phi0, 1), (&phi1, -1)] {
        for r in roots {
            let (e, f) = (chevalley.e(r).expect("root"), chevalley.f(r).expect("root"));
            // sign 1: e − f, i(e + f); sign −1: e + f, i(e − f)
            let mut a = vec![CycScalar::zero(); n];
            a[e] = int(1);
            a[f] = int(-sign);
            let mut b = vec![CycScalar::zero(); n];
            b[e] = i.clone();
            b[f] = &i * &int(sign);
            basis.push(a);
            basis.push(b);
            let l = label(r);
            if sign == 1 {
                names.push(format!("e-f[{l}]"));
                names.push(format!("i(e+f)[{l}]"));
            } else {
                names.push(format!("e+f[{l}]"));
                names.push(format!("i(e-f)[{l}]"));
            }
        }
    }
    let table = change_basis(chevalley.table(), &basis, names, true)?;
    Ok(ChevalleyRealForm {
        s,
        chevalley,
        phi0,
        phi1,
        basis,
        table,
    })
}

impl ChevalleyRealForm {
    pub fn table(&self) -> &AlgebraTable {
        &self.table
    }

    /// Matrix on the real basis of an automorphism given on the Chevalley basis.
    pub fn restrict(&self, op: &ExactMatrix) -> Result<ExactMatrix> {
        let m = restrict_operator(op, &self.basis)?;
        if !m.is_real() {
            return Err(Error::Check("automorphism does not preserve the real form".into()));
        }
        Ok(m)
    }

    /// The seven commuting order-2 automorphisms of the Z2⁷ grading.
    pub fn gamma13_operators(&self) -> Result<Vec<ExactMatrix>> {
        let c = &self.chevalley;
        let mut ops = Vec::new();
        for j in 0..6 {
            let mut s = [1; 6];
            s[j] = -1;
            ops.push(self.restrict(&c.torus_auto(s)?)?);
        }
        let wt = c.omega_auto().mul(&c.torus_auto([-1, 1, 1, 1, 1, 1])?)?;
        ops.push(self.restrict(&wt)?);
        Ok(ops)
    }

    /// Joint eigenspaces of the seven automorphisms; −1 maps to 1 in Z2.
    pub fn gamma13(&self) -> Result<GradedDecomposition> {
        let ops = self.gamma13_operators()?;
        let pm = vec![int(1), int(-1)];
        let split = simultaneous_eigensplit(&ops, &vec![pm; ops.len()])?;
        let comps = split
            .into_iter()
            .map(|sp| Component {
                degree: sp.eigenvalues.iter().map(|e| i64::from(!e.is_one())).collect(),
                basis: sp.basis,
            })
            .collect();
        GradedDecomposition::from_components(FgAbelianGroup::elementary(2, 7), self.table.dim(), comps)
    }
}

/// Checks on the basis adapted to the Z2⁷ grading.
#[derive(Clone, Debug, Serialize)]
pub struct CorollaryReport {
    pub orthogonal: bool,
    pub negative_norms: usize,
    pub positive_norms: usize,
    pub first_negative_then_positive: bool,
    pub all_semisimple: bool,
    pub rational_constants: bool,
    /// Least common multiple of the denominators of the structure constants.
    pub denominator_lcm: String,
    pub denominators_in_z_1_60: bool,
    pub nonzero_triples: usize,
    /// κ([u_i,u_j],u_k) changes sign with the permutation parity.
    pub lowered_antisymmetric: bool,
    /// κ([u_i,u_j],u_k)/κ(u_k,u_k) changes sign with the permutation parity.
    pub normalized_antisymmetric: bool,
    pub normalized_violations: usize,
}

impl CorollaryReport {
    pub fn passed(&self) -> bool {
        self.orthogonal
            && self.negative_norms == 46
            && self.positive_norms == 32
            && self.all_semisimple
            && self.rational_constants
            && self.lowered_antisymmetric
    }
}

pub fn corollary_basis_report(model: &ChevalleyRealForm) -> Result<CorollaryReport> {
    let l = model.table();
    let n = l.dim();
    let k = killing_form(l)?;
    let g = k.gram();
    let orthogonal = g.is_diagonal();
    let norms: Vec<i32> = (0..n).map(|i| g[(i, i)].sign_real()).collect::<Result<_>>()?;
    let negative_norms = norms.iter().filter(|&&s| s < 0).count();
    let positive_norms = norms.iter().filter(|&&s| s > 0).count();
    let first_negative_then_positive =
        norms.iter().take(negative_norms).all(|&s| s < 0) && norms.iter().skip(negative_norms).all(|&s| s > 0);
    let mut all_semisimple = true;
    for i in 0..n {
        if !is_semisimple_element(l, &unit_vec(n, i))? {
            all_semisimple = false;
            break;
        }
    }
    let rational_constants = l.is_rational();
    let mut lcm = num_bigint::BigInt::from(1);
    let mut c: Vec<Vec<Vec<(usize, CycScalar)>>> = vec![vec![Vec::new(); n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = l.basis_product(i, j).clone();
            for (_, v) in cell.iter() {
                if let Some(r) = v.as_rational() {
                    lcm = num_integer::Integer::lcm(&lcm, &r.denom());
                }
            }
        }
    }
    let denominators_in_z_1_60 = {
        let mut d = lcm.clone();
        for p in [2u32, 3, 5] {
            let p = num_bigint::BigInt::from(p);
            while num_integer::Integer::is_multiple_of(&d, &p) {
                d /= &p;
            }
        }
        d == num_bigint::BigInt::from(1)
    };
    let coeff = |i: usize, j: usize, k: usize| -> CycScalar {
        c[i][j]
            .iter()
            .find(|(m, _)| *m == k)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(CycScalar::zero)
    };
    let mut lowered_antisymmetric = true;
    let mut normalized_violations = 0;
    let mut nonzero_triples = 0;
    for i in 0..n {
        for j in 0..n {
            for (kk, _) in &c[i][j] {
                let kk = *kk;
                nonzero_triples += 1;
                let lower = |a: usize, b: usize, c3: usize| &coeff(a, b, c3) * &g[(c3, c3)];
                let t = lower(i, j, kk);
                let perms = [
                    (i, j, kk, 1),
                    (j, kk, i, 1),
                    (kk, i, j, 1),
                    (j, i, kk, -1),
                    (i, kk, j, -1),
                    (kk, j, i, -1),
                ];
                let f = coeff(i, j, kk);
                for (a, b, c3, s) in perms {
                    if lower(a, b, c3) != &t * &int(s) {
                        lowered_antisymmetric = false;
                    }
                    if coeff(a, b, c3) != &f * &int(s) {
                        normalized_violations += 1;
                    }
                }
            }
        }
    }
    Ok(CorollaryReport {
        orthogonal,
        negative_norms,
        positive_norms,
        first_negative_then_positive,
        all_semisimple,
        rational_constants,
        denominator_lcm: lcm.to_string(),
        denominators_in_z_1_60,
        nonzero_triples,
        lowered_antisymmetric,
        normalized_antisymmetric: normalized_violations == 0,
        normalized_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_sign_parity() {
        assert_eq!(torus_sign(&[-1, 1, 1, 1, 1, 1], &[1, 0, 0, 0, 0, 0]), -1);
        assert_eq!(torus_sign(&[-1, 1, 1, 1, 1, 1], &[2, 1, 0, 0, 0, 0]), 1);
        assert_eq!(torus_sign(&[1; 6], &[1, 1, 1, 1, 1, 1]), 1);
    }

    #[test]
    fn cartan_prime_is_invertible() {
        let rows: Vec<Vec<i64>> = CARTAN_PRIME.iter().map(|r| r.to_vec()).collect();
        let m = ExactMatrix::from_int_rows(&rows).unwrap();
        assert!(crate::exactla::inverse(&m).is_ok());
    }
}
