use super::checks::check_lie;
use super::subalg::simplicity_evidence;
use super::table::AlgebraTable;
use crate::error::{Error, Result};
use crate::exactla::{ExactMatrix, SymmetricForm};
use crate::scalar::{CycScalar, Rational};

/// κ(x, y) = tr(ad x ∘ ad y) on the basis of `l`.
pub fn killing_form(l: &AlgebraTable) -> Result<SymmetricForm> {
    let n = l.dim();
    // ad_i[a][b] is the coefficient of b_a in [b_i, b_b].
    let ads: Vec<ExactMatrix> = (0..n).map(|i| l.left_mult_basis(i)).collect();
    let nz: Vec<Vec<(usize, usize, &CycScalar)>> = ads
        .iter()
        .map(|m| {
            let mut v = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    let x = &m[(a, b)];
                    if !x.is_zero() {
                        v.push((a, b, x));
                    }
                }
            }
            v
        })
        .collect();
    let mut g = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let mut s = CycScalar::zero();
            for &(a, b, x) in &nz[i] {
                let y = &ads[j][(b, a)];
                if !y.is_zero() {
                    s += &(x * y);
                }
            }
            g[(j, i)] = s.clone();
            g[(i, j)] = s;
        }
    }
    SymmetricForm::new(g)
}

/// Signature of the Killing form.
pub fn killing_signature(l: &AlgebraTable) -> Result<i64> {
    killing_form(l)?.signature()
}

/// The unique r with κ_L|_{L0} = r·κ_{L0}, for a simple subalgebra L0 spanned by `basis`.
pub fn killing_ratio(l: &AlgebraTable, basis: &[Vec<CycScalar>]) -> Result<Rational> {
    let names = (0..basis.len()).map(|i| format!("s{i}")).collect();
    let sub = l.restrict(basis, names)?;
    let lie = check_lie(&sub);
    if !lie.passed {
        return Err(Error::Check(format!("subalgebra is not Lie: {:?}", lie.first_violation)));
    }
    let ev = simplicity_evidence(&sub)?;
    if !ev.looks_simple() {
        return Err(Error::Check(format!("subalgebra does not look simple: {ev:?}")));
    }
    let outer = killing_form(l)?.restrict(basis)?;
    let inner = killing_form(&sub)?;
    proportionality(outer.gram(), inner.gram())
}

/// r with a = r·b entrywise; `b` must be nonzero.
pub fn proportionality(a: &ExactMatrix, b: &ExactMatrix) -> Result<Rational> {
    let mut ratio: Option<CycScalar> = None;
    for (x, y) in a.entries().iter().zip(b.entries()) {
        match (&ratio, y.is_zero()) {
            (None, false) => ratio = Some(x.checked_div(y)?),
            (None, true) if !x.is_zero() => return Err(Error::Check("forms are not proportional".into())),
            _ => {}
        }
    }
    let r = ratio.ok_or_else(|| Error::Check("reference form vanishes".into()))?;
    for (x, y) in a.entries().iter().zip(b.entries()) {
        if x != &(&r * y) {
            return Err(Error::Check("forms are not proportional".into()));
        }
    }
    r.as_rational()
        .cloned()
        .ok_or_else(|| Error::Check(format!("ratio {r} is not rational")))
}

/// L^t: odd-odd products scaled by t, for a Z2-grading given on basis vectors.
pub fn twist_z2(l: &AlgebraTable, odd: &[bool], t: i64) -> Result<AlgebraTable> {
    if t != 1 && t != -1 {
        return Err(Error::Check("twist parameter must be ±1".into()));
    }
    if odd.len() != l.dim() {
        return Err(Error::Dimension("parity vector".into()));
    }
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            let par = odd[i] ^ odd[j];
            if l.basis_product(i, j).iter().any(|(k, _)| odd[*k] != par) {
                return Err(Error::InvalidGrading(format!(
                    "product of {} and {} breaks the Z2-grading",
                    l.names()[i],
                    l.names()[j]
                )));
            }
        }
    }
    l.scale_odd_products(odd, &CycScalar::from_int(t))
}

/// Gram matrix of the bilinear form `f` on the basis.
pub fn gram_matrix(n: usize, f: impl Fn(usize, usize) -> CycScalar) -> Result<SymmetricForm> {
    let mut g = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = f(i, j);
        }
    }
    SymmetricForm::new(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::structalg::AlgebraKind;

    fn so3() -> AlgebraTable {
        // [x_i, x_j] = ε_ijk x_k
        AlgebraTable::from_fn(vec!["x".into(), "y".into(), "z".into()], AlgebraKind::Lie, |i, j| {
            let mut v = vec![CycScalar::zero(); 3];
            if i != j {
                let k = 3 - i - j;
                let s = if (j + 3 - i) % 3 == 1 { 1 } else { -1 };
                v[k] = int(s);
            }
            v
        })
        .unwrap()
    }

    #[test]
    fn abelian_killing_form_vanishes() {
        let a = AlgebraTable::zero_algebra(2, AlgebraKind::Lie);
        assert!(killing_form(&a).unwrap().gram().is_zero());
    }

    #[test]
    fn compact_so3() {
        let l = so3();
        assert!(check_lie(&l).passed);
        assert_eq!(killing_signature(&l).unwrap(), -3);
        let basis: Vec<Vec<CycScalar>> = (0..3).map(|i| crate::exactla::unit_vec(3, i)).collect();
        assert_eq!(killing_ratio(&l, &basis).unwrap(), Rational::one());
    }

    #[test]
    fn twist_identity_and_validation() {
        let l = so3();
        let odd = [false, true, true];
        // x is even, y and z odd: [y,z] = x even, fine.
        let same = twist_z2(&l, &odd, 1).unwrap();
        assert_eq!(same.to_json().entries, l.to_json().entries);
        let tw = twist_z2(&l, &odd, -1).unwrap();
        assert!(check_lie(&tw).passed);
        assert_eq!(killing_signature(&tw).unwrap(), 1);
        assert!(twist_z2(&l, &[true, true, false], -1).is_ok());
        assert!(twist_z2(&l, &[true, false, false], -1).is_err());
        assert!(twist_z2(&l, &[true, true, true], -1).is_err());
    }
}
