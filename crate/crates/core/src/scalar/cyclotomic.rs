use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// Powers of ζ in the basis {1, ζ, ζ², ζ³}, using ζ⁴ = ζ² − 1.
const POW: [[i64; 4]; 12] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [-1, 0, 1, 0],
    [0, -1, 0, 1],
    [-1, 0, 0, 0],
    [0, -1, 0, 0],
    [0, 0, -1, 0],
    [0, 0, 0, -1],
    [1, 0, -1, 0],
    [0, 1, 0, -1],
];

/// Element of Q(ζ) with ζ a primitive 12th root of unity.
///
/// Stored in the power basis {1, ζ, ζ², ζ³}; ζ satisfies ζ⁴ − ζ² + 1 = 0.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycScalar {
    c: [Rational; 4],
}

impl CycScalar {
    pub fn from_coords(c: [Rational; 4]) -> Self {
        CycScalar { c }
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        CycScalar {
            c: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    /// `n/d` as a scalar. Panics when `d == 0`.
    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(n, d).expect("zero denominator"))
    }

    fn from_small(v: [i64; 4]) -> Self {
        CycScalar {
            c: v.map(Rational::from_int),
        }
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        Self::from_small(POW[k.rem_euclid(12) as usize])
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// The imaginary unit ζ³.
    pub fn i() -> Self {
        Self::zeta_pow(3)
    }

    /// The primitive cube root of unity ζ⁴ = ζ² − 1.
    pub fn omega() -> Self {
        Self::zeta_pow(4)
    }

    /// √3 = ζ + ζ⁻¹ = 2ζ − ζ³.
    pub fn sqrt3() -> Self {
        Self::from_small([0, 2, 0, -1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.is_rational()
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_one() {
            return self.clone();
        }
        CycScalar {
            c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r],
        }
    }

    /// The field automorphism ζ ↦ ζ^k, for k coprime to 12.
    pub fn galois(&self, k: i64) -> Self {
        debug_assert!(matches!(k.rem_euclid(12), 1 | 5 | 7 | 11));
        let mut out = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let img = POW[(j as i64 * k).rem_euclid(12) as usize];
            for (o, m) in out.iter_mut().zip(img) {
                match m {
                    0 => {}
                    1 => *o += cj,
                    -1 => *o -= cj,
                    _ => unreachable!(),
                }
            }
        }
        CycScalar { c: out }
    }

    /// Complex conjugation, ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        self.galois(11)
    }

    pub fn is_real(&self) -> bool {
        // Real elements are exactly c0 + c1 ζ − (c1/2) ζ³.
        self.c[2].is_zero() && (&self.c[1] + &(&self.c[3] + &self.c[3])).is_zero()
    }

    /// Writes a real element as p + q√3.
    pub fn real_parts(&self) -> Result<(Rational, Rational)> {
        if !self.is_real() {
            return Err(Error::NotReal(self.to_string()));
        }
        let half = Rational::new(1, 2).expect("nonzero");
        Ok((self.c[0].clone(), &self.c[1] * &half))
    }

    /// Sign of a real element under the embedding with √3 > 0.
    pub fn sign_real(&self) -> Result<i32> {
        let (p, q) = self.real_parts()?;
        let (sp, sq) = (p.signum(), q.signum());
        if sq == 0 {
            return Ok(sp);
        }
        if sp == 0 || sp == sq {
            return Ok(sq);
        }
        let p2 = &p * &p;
        let q2 = &(&q * &q) * &Rational::from_int(3);
        Ok(match p2.cmp(&q2) {
            std::cmp::Ordering::Greater => sp,
            std::cmp::Ordering::Less => sq,
            std::cmp::Ordering::Equal => 0,
        })
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        if let Some(r) = self.as_rational() {
            return r.pow(4);
        }
        let n = self * &self.cofactor();
        n.as_rational().expect("norm is rational").clone()
    }

    fn cofactor(&self) -> Self {
        &(&self.galois(5) * &self.galois(7)) * &self.galois(11)
    }

    pub fn inv(&self) -> Result<Self> {
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.inv()?));
        }
        let y = self.cofactor();
        let n = (self * &y).as_rational().expect("norm is rational").clone();
        Ok(y.scale(&n.inv()?))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if let Some(r) = rhs.as_rational() {
            return Ok(self.scale(&r.inv()?));
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Numerical value as (re, im), for display and sampling checks only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, cj) in self.c.iter().enumerate() {
            let a = std::f64::consts::PI * j as f64 / 6.0;
            re += cj.to_f64() * a.cos();
            im += cj.to_f64() * a.sin();
        }
        (re, im)
    }

    pub fn to_strings(&self) -> [String; 4] {
        [
            self.c[0].to_pq_string(),
            self.c[1].to_pq_string(),
            self.c[2].to_pq_string(),
            self.c[3].to_pq_string(),
        ]
    }
}

impl From<Rational> for CycScalar {
    fn from(r: Rational) -> Self {
        CycScalar::from_rational(r)
    }
}

impl From<i64> for CycScalar {
    fn from(n: i64) -> Self {
        CycScalar::from_int(n)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.c[0]);
        }
        let names = ["", "z", "z^2", "z^3"];
        let mut first = true;
        for (cj, name) in self.c.iter().zip(names) {
            if cj.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if name.is_empty() {
                write!(f, "{cj}")?;
            } else {
                write!(f, "({cj}){name}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.c.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let c = <[Rational; 4]>::deserialize(d)?;
        Ok(CycScalar { c })
    }
}

fn add_ref(a: &CycScalar, b: &CycScalar) -> CycScalar {
    if a.is_rational() && b.is_rational() {
        return CycScalar::from_rational(&a.c[0] + &b.c[0]);
    }
    CycScalar {
        c: [
            &a.c[0] + &b.c[0],
            &a.c[1] + &b.c[1],
            &a.c[2] + &b.c[2],
            &a.c[3] + &b.c[3],
        ],
    }
}

fn neg_ref(a: &CycScalar) -> CycScalar {
    CycScalar {
        c: [-&a.c[0], -&a.c[1], -&a.c[2], -&a.c[3]],
    }
}

fn sub_ref(a: &CycScalar, b: &CycScalar) -> CycScalar {
    CycScalar {
        c: [
            &a.c[0] - &b.c[0],
            &a.c[1] - &b.c[1],
            &a.c[2] - &b.c[2],
            &a.c[3] - &b.c[3],
        ],
    }
}

fn mul_ref(a: &CycScalar, b: &CycScalar) -> CycScalar {
    if b.is_rational() {
        return a.scale(&b.c[0]);
    }
    if a.is_rational() {
        return b.scale(&a.c[0]);
    }
    let mut p: [Rational; 7] = Default::default();
    for (i, ai) in a.c.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.c.iter().enumerate() {
            if !bj.is_zero() {
                p[i + j] += &(ai * bj);
            }
        }
    }
    let [mut p0, mut p1, mut p2, mut p3, p4, p5, p6] = p;
    p0 -= &p6;
    p3 += &p5;
    p1 -= &p5;
    p2 += &p4;
    p0 -= &p4;
    CycScalar {
        c: [p0, p1, p2, p3],
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        neg_ref(self)
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        neg_ref(&self)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&CycScalar> for &CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &CycScalar) -> CycScalar {
                $f(self, rhs)
            }
        }
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                $f(&self, &rhs)
            }
        }
        impl $tr<&CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &CycScalar) -> CycScalar {
                $f(&self, rhs)
            }
        }
        impl $tr<CycScalar> for &CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                $f(self, &rhs)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        if rhs.is_zero() {
            return;
        }
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a += b;
        }
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        if rhs.is_zero() {
            return;
        }
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a -= b;
        }
    }
}

impl MulAssign<&CycScalar> for CycScalar {
    fn mul_assign(&mut self, rhs: &CycScalar) {
        *self = mul_ref(self, rhs);
    }
}

impl std::iter::Sum for CycScalar {
    fn sum<I: Iterator<Item = CycScalar>>(iter: I) -> Self {
        iter.fold(CycScalar::zero(), |mut a, b| {
            a += &b;
            a
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        let i = CycScalar::i();
        assert_eq!(&i * &i, CycScalar::from_int(-1));
        let w = CycScalar::omega();
        assert_eq!(w.pow(3), CycScalar::one());
        assert_ne!(w, CycScalar::one());
        assert!((&(&w * &w) + &w + CycScalar::one()).is_zero());
        let s = CycScalar::sqrt3();
        assert_eq!(&s * &s, CycScalar::from_int(3));
        assert_eq!(s, CycScalar::zeta() + CycScalar::zeta().conj());
        assert_eq!(CycScalar::zeta().pow(12), CycScalar::one());
        assert_ne!(CycScalar::zeta().pow(6), CycScalar::one());
    }

    #[test]
    fn sign_of_real_elements() {
        let s = CycScalar::sqrt3();
        assert_eq!(CycScalar::zero().sign_real().unwrap(), 0);
        assert_eq!((CycScalar::one() - &s).sign_real().unwrap(), -1);
        assert_eq!((CycScalar::from_int(2) - &s).sign_real().unwrap(), 1);
        assert_eq!((-&s).sign_real().unwrap(), -1);
        assert!(CycScalar::i().sign_real().is_err());
    }

    #[test]
    fn inverse_and_norm() {
        let x = CycScalar::from_small([3, -1, 2, 5]);
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, CycScalar::one());
        assert!(CycScalar::zero().inv().is_err());
        assert_eq!(CycScalar::i().norm(), Rational::one());
    }

    #[test]
    fn conjugation_of_units() {
        assert_eq!(CycScalar::i().conj(), -CycScalar::i());
        assert_eq!(CycScalar::omega().conj(), CycScalar::omega().pow(2));
        assert!(CycScalar::sqrt3().is_real());
        assert!(!CycScalar::i().is_real());
    }

    #[test]
    fn json_format() {
        let x = CycScalar::frac(-1, 2) + CycScalar::i();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"["-1/2","0/1","0/1","1/1"]"#);
        let back: CycScalar = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
