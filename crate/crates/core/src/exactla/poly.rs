use super::matrix::{axpy, is_zero_vec, unit_vec, ExactMatrix};
use crate::error::Result;
use crate::scalar::CycScalar;

/// Univariate polynomial over Q(ζ₁₂), coefficients from degree 0 upward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<CycScalar>);

impl Poly {
    pub fn new(mut c: Vec<CycScalar>) -> Self {
        while c.last().is_some_and(CycScalar::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn coeffs(&self) -> &[CycScalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn monic(&self) -> Self {
        match self.0.last() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                Poly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &CycScalar::from_int(k as i64))
                .collect(),
        )
    }

    pub fn mul(&self, o: &Poly) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly(Vec::new());
        }
        let mut c = vec![CycScalar::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        Poly::new(c)
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.0[dd].inv().expect("nonzero");
        let mut r = self.0.clone();
        let mut q = vec![CycScalar::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let c = &r[k] * &lead_inv;
            if !c.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    r[k - dd + j] -= &(&c * dj);
                }
                q[k - dd] = c;
            }
            r.pop();
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly(Vec::new());
        }
        self.mul(o).div_rem(&self.gcd(o)).0.monic()
    }

    /// No repeated factors over the algebraic closure.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

/// Minimal polynomial of a square matrix, as the lcm of the local
/// minimal polynomials of the standard basis vectors.
pub fn minimal_polynomial(a: &ExactMatrix) -> Result<Poly> {
    let n = a.rows();
    let mut acc = Poly::new(vec![CycScalar::one()]);
    let mut covered = super::elim::Echelon::new(n);
    for i in 0..n {
        let e = unit_vec(n, i);
        if covered.contains(&e) {
            // The cyclic space of e sits inside one already handled.
            continue;
        }
        let (p, krylov) = local_minimal_polynomial(a, &e)?;
        for v in &krylov {
            covered.insert(v);
        }
        acc = acc.lcm(&p);
    }
    Ok(acc)
}

/// Smallest monic p with p(A)v = 0, plus the Krylov vectors spanning the cyclic space.
fn local_minimal_polynomial(a: &ExactMatrix, v: &[CycScalar]) -> Result<(Poly, Vec<Vec<CycScalar>>)> {
    let n = a.rows();
    let mut rows: Vec<(usize, Vec<CycScalar>, Vec<CycScalar>)> = Vec::new();
    let mut krylov = Vec::new();
    let mut cur = v.to_vec();
    for k in 0..=n {
        krylov.push(cur.clone());
        let mut r = cur.clone();
        let mut tag = unit_vec(k + 1, k);
        for (p, row, t) in &rows {
            let c = r[*p].clone();
            if !c.is_zero() {
                axpy(&mut r, &(-&c), row);
                axpy(&mut tag, &(-&c), t);
            }
        }
        if is_zero_vec(&r) {
            krylov.pop();
            return Ok((Poly::new(tag).monic(), krylov));
        }
        let p = r.iter().position(|x| !x.is_zero()).expect("nonzero");
        let inv = r[p].inv()?;
        let r: Vec<CycScalar> = r.iter().map(|x| x * &inv).collect();
        let tag: Vec<CycScalar> = tag.iter().map(|x| x * &inv).collect();
        rows.push((p, r, tag));
        cur = a.mul_vec(&cur)?;
    }
    unreachable!("Krylov sequence exceeds the dimension")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 2, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert!(a.is_squarefree());
        assert!(!b.is_squarefree());
        assert_eq!(a.lcm(&b), p(&[-1, -1, 1, 1]));
    }

    #[test]
    fn minimal_polynomials() {
        let j = ExactMatrix::from_int_rows(&[vec![2, 1], vec![0, 2]]).unwrap();
        assert_eq!(minimal_polynomial(&j).unwrap(), p(&[4, -4, 1]));
        let d = ExactMatrix::diagonal(&[int(1), int(1), int(-1)]);
        let m = minimal_polynomial(&d).unwrap();
        assert_eq!(m, p(&[-1, 0, 1]));
        assert!(m.is_squarefree());
        let rot = ExactMatrix::from_int_rows(&[vec![0, -1], vec![1, 0]]).unwrap();
        assert_eq!(minimal_polynomial(&rot).unwrap(), p(&[1, 0, 1]));
    }
}
