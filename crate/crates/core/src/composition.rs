//! Octonions, split octonions and the small composition algebras used as
//! coefficient rings for Hermitian matrices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{unit_vec, ExactMatrix};
use crate::gradings::{FgAbelianGroup, GradedDecomposition};
use crate::scalar::{CycScalar, Rational};
use crate::structalg::{AlgebraKind, AlgebraTable};

/// Oriented Fano lines (a, b, c) with e_a e_b = e_c, read cyclically.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [5, 7, 2],
    [4, 7, 1],
    [6, 7, 3],
    [6, 2, 4],
    [5, 1, 6],
    [4, 3, 5],
    [1, 2, 3],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CompositionKind {
    Real,
    Complex,
    SplitComplex,
    Octonion,
    SplitOctonion,
}

/// Unital composition algebra on the basis {1, u1, …}, with u_k² = ±1.
#[derive(Clone, Debug)]
pub struct CompositionAlgebra {
    kind: CompositionKind,
    table: AlgebraTable,
    /// Norms of the basis vectors; the basis is orthogonal.
    norms: Vec<i64>,
}

fn octonion_products(split: bool) -> Vec<Vec<(usize, i64)>> {
    let mut prod = vec![Vec::new(); 64];
    let at = |i: usize, j: usize| i * 8 + j;
    for k in 0..8 {
        prod[at(0, k)] = vec![(k, 1)];
        prod[at(k, 0)] = vec![(k, 1)];
    }
    for k in 1..8 {
        let s = if split && k >= 4 { 1 } else { -1 };
        prod[at(k, k)] = vec![(0, s)];
    }
    for line in FANO_LINES {
        for r in 0..3 {
            let (a, b, c) = (line[r], line[(r + 1) % 3], line[(r + 2) % 3]);
            prod[at(a, b)] = vec![(c, 1)];
            prod[at(b, a)] = vec![(c, -1)];
        }
    }
    if split {
        // Cayley-Dickson over span{1,e1,e2,e3} with e7² = +1: products of two
        // elements of the complement change sign.
        for i in 4..8 {
            for j in 4..8 {
                if i != j {
                    for t in prod[at(i, j)].iter_mut() {
                        t.1 = -t.1;
                    }
                }
            }
        }
    }
    prod
}

impl CompositionAlgebra {
    pub fn build(kind: CompositionKind) -> Self {
        let (names, prods, norms): (Vec<&str>, Vec<Vec<(usize, i64)>>, Vec<i64>) = match kind {
            CompositionKind::Real => (vec!["1"], vec![vec![(0, 1)]], vec![1]),
            CompositionKind::Complex => (
                vec!["1", "i"],
                vec![vec![(0, 1)], vec![(1, 1)], vec![(1, 1)], vec![(0, -1)]],
                vec![1, 1],
            ),
            CompositionKind::SplitComplex => (
                vec!["1", "j"],
                vec![vec![(0, 1)], vec![(1, 1)], vec![(1, 1)], vec![(0, 1)]],
                vec![1, -1],
            ),
            CompositionKind::Octonion => (
                vec!["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"],
                octonion_products(false),
                vec![1; 8],
            ),
            CompositionKind::SplitOctonion => (
                vec!["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"],
                octonion_products(true),
                vec![1, 1, 1, 1, -1, -1, -1, -1],
            ),
        };
        let n = names.len();
        let table = AlgebraTable::from_sparse(
            names.into_iter().map(String::from).collect(),
            AlgebraKind::Plain,
            prods
                .into_iter()
                .map(|v| v.into_iter().map(|(k, c)| (k, CycScalar::from_int(c))).collect())
                .collect(),
        )
        .expect("well-formed table");
        debug_assert_eq!(table.dim(), n);
        CompositionAlgebra { kind, table, norms }
    }

    pub fn octonions() -> Self {
        Self::build(CompositionKind::Octonion)
    }

    pub fn kind(&self) -> CompositionKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn table(&self) -> &AlgebraTable {
        &self.table
    }

    pub fn basis(&self, k: usize) -> Vec<CycScalar> {
        unit_vec(self.dim(), k)
    }

    pub fn one(&self) -> Vec<CycScalar> {
        self.basis(0)
    }

    pub fn mul(&self, x: &[CycScalar], y: &[CycScalar]) -> Vec<CycScalar> {
        self.table.mul(x, y)
    }

    /// x̄ = r·1 − Σ s_i u_i.
    pub fn conj(&self, x: &[CycScalar]) -> Vec<CycScalar> {
        x.iter()
            .enumerate()
            .map(|(k, c)| if k == 0 { c.clone() } else { -c })
            .collect()
    }

    /// n(x) = x x̄.
    pub fn norm(&self, x: &[CycScalar]) -> CycScalar {
        x.iter()
            .zip(&self.norms)
            .map(|(c, &n)| &(c * c) * &CycScalar::from_int(n))
            .sum()
    }

    /// Polar form n(x, y) with n(x, x) = n(x).
    pub fn norm_bilinear(&self, x: &[CycScalar], y: &[CycScalar]) -> CycScalar {
        x.iter()
            .zip(y)
            .zip(&self.norms)
            .map(|((a, b), &n)| &(a * b) * &CycScalar::from_int(n))
            .sum()
    }

    /// t(x) = x + x̄, as a scalar.
    pub fn trace(&self, x: &[CycScalar]) -> CycScalar {
        &x[0] + &x[0]
    }

    pub fn commutator(&self, x: &[CycScalar], y: &[CycScalar]) -> Vec<CycScalar> {
        let a = self.mul(x, y);
        let b = self.mul(y, x);
        a.iter().zip(&b).map(|(p, q)| p - q).collect()
    }

    /// Matrix of left multiplication by x.
    pub fn left_mult(&self, x: &[CycScalar]) -> ExactMatrix {
        self.table.left_mult(x)
    }

    pub fn right_mult(&self, x: &[CycScalar]) -> ExactMatrix {
        self.table.right_mult(x)
    }

    /// d_{a,b}(c) = [[a,b],c] + 3(ac)b − 3a(cb).
    pub fn d_ab(&self, a: &[CycScalar], b: &[CycScalar]) -> Result<ExactMatrix> {
        if !self.trace(a).is_zero() || !self.trace(b).is_zero() {
            return Err(Error::Check("d_ab needs traceless arguments".into()));
        }
        let n = self.dim();
        let ab = self.commutator(a, b);
        let three = CycScalar::from_int(3);
        let cols: Vec<Vec<CycScalar>> = (0..n)
            .map(|k| {
                let c = self.basis(k);
                let t1 = self.commutator(&ab, &c);
                let t2 = self.mul(&self.mul(a, &c), b);
                let t3 = self.mul(a, &self.mul(&c, b));
                (0..n).map(|i| &t1[i] + &(&three * &(&t2[i] - &t3[i]))).collect()
            })
            .collect();
        Ok(ExactMatrix::from_columns(n, &cols))
    }

    /// Exhaustive n(xy) = n(x)n(y) on basis pairs.
    pub fn norm_multiplicative_on_basis(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (x, y) = (self.basis(i), self.basis(j));
                self.norm(&self.mul(&x, &y)) == &self.norm(&x) * &self.norm(&y)
            })
        })
    }

    /// Multiplicativity of the polar form n(xy, xw) = n(x) n(y, w), which
    /// is equivalent to composition for all elements.
    pub fn norm_multiplicative_polar(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    (0..n).all(|l| {
                        let xi = self.basis(i);
                        let xj = self.basis(j);
                        let yk = self.basis(k);
                        let yl = self.basis(l);
                        // Fully polarized: n(x y, x' y') + n(x y', x' y) = 2 n(x, x') n(y, y')
                        let lhs = &self.norm_bilinear(&self.mul(&xi, &yk), &self.mul(&xj, &yl))
                            + &self.norm_bilinear(&self.mul(&xi, &yl), &self.mul(&xj, &yk));
                        let rhs = &CycScalar::from_int(2)
                            * &(&self.norm_bilinear(&xi, &xj) * &self.norm_bilinear(&yk, &yl));
                        lhs == rhs
                    })
                })
            })
        })
    }

    /// (xx)y = x(xy) and (yx)x = y(xx) on basis pairs, plus the polarized
    /// form (xz)y + (zx)y = x(zy) + z(xy) on basis triples.
    pub fn alternative_on_basis(&self) -> bool {
        let n = self.dim();
        let pairs = (0..n).all(|i| {
            (0..n).all(|j| {
                let (x, y) = (self.basis(i), self.basis(j));
                let xx = self.mul(&x, &x);
                self.mul(&xx, &y) == self.mul(&x, &self.mul(&x, &y))
                    && self.mul(&self.mul(&y, &x), &x) == self.mul(&y, &xx)
            })
        });
        let triples = (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let (x, z, y) = (self.basis(i), self.basis(j), self.basis(k));
                    let l1 = self.mul(&self.mul(&x, &z), &y);
                    let l2 = self.mul(&self.mul(&z, &x), &y);
                    let r1 = self.mul(&x, &self.mul(&z, &y));
                    let r2 = self.mul(&z, &self.mul(&x, &y));
                    (0..n).all(|m| &l1[m] + &l2[m] == &r1[m] + &r2[m])
                })
            })
        });
        pairs && triples
    }

    /// Span of {d_{e_i, e_j}} over pairs of traceless basis elements.
    pub fn inner_derivations(&self) -> Result<Vec<ExactMatrix>> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 1..n {
            for j in i + 1..n {
                out.push(self.d_ab(&self.basis(i), &self.basis(j))?);
            }
        }
        Ok(out)
    }
}

/// An octonion with rational coordinates on {1, e1, …, e7}.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Octonion(pub [Rational; 8]);

impl Octonion {
    pub fn basis(k: usize) -> Self {
        let mut c: [Rational; 8] = Default::default();
        c[k] = Rational::one();
        Octonion(c)
    }

    fn to_cyc(&self) -> Vec<CycScalar> {
        self.0.iter().cloned().map(CycScalar::from_rational).collect()
    }

    fn from_cyc(v: &[CycScalar]) -> Self {
        let mut c: [Rational; 8] = Default::default();
        for (a, b) in c.iter_mut().zip(v) {
            *a = b.as_rational().expect("rational octonion").clone();
        }
        Octonion(c)
    }

    pub fn mul(&self, other: &Octonion) -> Octonion {
        let o = CompositionAlgebra::octonions();
        Octonion::from_cyc(&o.mul(&self.to_cyc(), &other.to_cyc()))
    }

    pub fn conj(&self) -> Octonion {
        let mut c = self.0.clone();
        for x in c.iter_mut().skip(1) {
            *x = -&*x;
        }
        Octonion(c)
    }

    pub fn norm(&self) -> Rational {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn trace(&self) -> Rational {
        &self.0[0] + &self.0[0]
    }
}

/// Degree in Z2³ of each basis vector of O; 1 ↦ 0, e1, e2, e7 are the generators.
pub fn octonion_degrees() -> Vec<Vec<i64>> {
    vec![
        vec![0, 0, 0],
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![1, 1, 0],
        vec![1, 0, 1],
        vec![0, 1, 1],
        vec![1, 1, 1],
        vec![0, 0, 1],
    ]
}

/// The Z2³-grading of O with one-dimensional components.
pub fn octonion_grading() -> Result<GradedDecomposition> {
    GradedDecomposition::from_basis_degrees(FgAbelianGroup::elementary(2, 3), &octonion_degrees())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradings::check_grading;

    #[test]
    fn unit_and_squares() {
        let o = CompositionAlgebra::octonions();
        for k in 0..8 {
            let e = o.basis(k);
            assert_eq!(o.mul(&o.one(), &e), e);
            assert_eq!(o.mul(&e, &o.one()), e);
            if k > 0 {
                let sq = o.mul(&e, &e);
                assert_eq!(sq, crate::exactla::scale_vec(&o.one(), &CycScalar::from_int(-1)));
                assert!(o.trace(&e).is_zero());
            }
            assert_eq!(o.norm(&e), CycScalar::one());
        }
    }

    #[test]
    fn line_products_have_unit_norm() {
        let o = CompositionAlgebra::octonions();
        for line in FANO_LINES {
            for &a in &line {
                for &b in &line {
                    if a != b {
                        let p = o.mul(&o.basis(a), &o.basis(b));
                        assert_eq!(p.iter().filter(|x| !x.is_zero()).count(), 1);
                        assert_eq!(o.norm(&p), CycScalar::one());
                    }
                }
            }
        }
    }

    #[test]
    fn the_other_circle_orientation_fails() {
        // Reversing the circle line breaks multiplicativity of the norm.
        let mut prods = octonion_products(false);
        for r in 0..3 {
            let l = [1usize, 2, 3];
            let (a, b) = (l[r], l[(r + 1) % 3]);
            for t in prods[a * 8 + b].iter_mut() {
                t.1 = -t.1;
            }
            for t in prods[b * 8 + a].iter_mut() {
                t.1 = -t.1;
            }
        }
        let table = AlgebraTable::from_sparse(
            (0..8).map(|i| format!("b{i}")).collect(),
            AlgebraKind::Plain,
            prods
                .into_iter()
                .map(|v| v.into_iter().map(|(k, c)| (k, CycScalar::from_int(c))).collect())
                .collect(),
        )
        .unwrap();
        let bad = CompositionAlgebra {
            kind: CompositionKind::Octonion,
            table,
            norms: vec![1; 8],
        };
        assert!(!bad.norm_multiplicative_polar());
    }

    #[test]
    fn composition_algebras_compose() {
        for kind in [
            CompositionKind::Real,
            CompositionKind::Complex,
            CompositionKind::SplitComplex,
            CompositionKind::Octonion,
            CompositionKind::SplitOctonion,
        ] {
            let a = CompositionAlgebra::build(kind);
            assert!(a.norm_multiplicative_on_basis(), "{kind:?}");
            assert!(a.norm_multiplicative_polar(), "{kind:?}");
            assert!(a.alternative_on_basis(), "{kind:?}");
        }
    }

    #[test]
    fn typed_octonions() {
        let e1 = Octonion::basis(1);
        let e2 = Octonion::basis(2);
        assert_eq!(e1.mul(&e2), Octonion::basis(3));
        assert_eq!(e2.mul(&e1).conj(), Octonion::basis(3));
        assert_eq!(e1.mul(&e1).trace(), Rational::from_int(-2));
        assert_eq!(e1.norm(), Rational::one());
    }

    #[test]
    fn z2_cubed_grading() {
        let o = CompositionAlgebra::octonions();
        let g = octonion_grading().unwrap();
        assert_eq!(g.components.len(), 8);
        assert!(check_grading(o.table(), &g).unwrap().passed());
    }

    #[test]
    fn d_ab_is_antisymmetric() {
        let o = CompositionAlgebra::octonions();
        let e = o.basis(3);
        assert!(o.d_ab(&e, &e).unwrap().is_zero());
        assert!(o.d_ab(&o.one(), &e).is_err());
    }
}
