//! Hermitian 3×3 matrices over composition algebras with the symmetrized product.

use serde::Serialize;

use crate::composition::{octonion_degrees, CompositionAlgebra, CompositionKind};
use crate::error::{Error, Result};
use crate::exactla::{kernel, simultaneous_eigensplit, unit_vec, ExactMatrix, SymmetricForm};
use crate::gradings::{refine, Component, FgAbelianGroup, GradedDecomposition};
use crate::scalar::{frac, int, CycScalar};
use crate::structalg::{AlgebraKind, AlgebraTable};

/// The twisting matrix γ, monomial: γ_{i, π(i)} = g_i.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gamma {
    pub perm: [usize; 3],
    pub signs: [i64; 3],
}

impl Gamma {
    pub fn identity() -> Self {
        Gamma {
            perm: [0, 1, 2],
            signs: [1, 1, 1],
        }
    }

    pub fn diag(signs: [i64; 3]) -> Self {
        Gamma { perm: [0, 1, 2], signs }
    }

    /// E11 + E23 + E32.
    pub fn swap23() -> Self {
        Gamma {
            perm: [0, 2, 1],
            signs: [1, 1, 1],
        }
    }
}

/// The named Jordan algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum H3Kind {
    /// H3(O, I3), the Euclidean Albert algebra.
    AlbertCompact,
    /// H3(O, diag(1,-1,1)).
    Albert,
    /// H3(C, E11+E23+E32).
    Complex,
    /// H3(R⊕R, E11+E23+E32), with R⊕R realized as the split complex numbers.
    SplitComplex,
}

/// 3×3 matrix with entries in a composition algebra (coordinates per entry).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HMatrix {
    pub entries: Vec<Vec<CycScalar>>,
}

impl HMatrix {
    pub fn zero(d: usize) -> Self {
        HMatrix {
            entries: vec![vec![CycScalar::zero(); d]; 9],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &[CycScalar] {
        &self.entries[i * 3 + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vec<CycScalar>) {
        self.entries[i * 3 + j] = v;
    }

    pub fn add(&self, o: &HMatrix) -> HMatrix {
        HMatrix {
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }

    pub fn scale(&self, s: &CycScalar) -> HMatrix {
        HMatrix {
            entries: self.entries.iter().map(|a| a.iter().map(|x| x * s).collect()).collect(),
        }
    }

    pub fn mul(&self, o: &HMatrix, c: &CompositionAlgebra) -> HMatrix {
        let d = c.dim();
        let mut out = HMatrix::zero(d);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = vec![CycScalar::zero(); d];
                for k in 0..3 {
                    let p = c.mul(self.get(i, k), o.get(k, j));
                    for (a, b) in acc.iter_mut().zip(&p) {
                        *a += b;
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// γ x̄ᵗ γ⁻¹.
    pub fn gamma_transform(&self, g: &Gamma, c: &CompositionAlgebra) -> HMatrix {
        let mut out = HMatrix::zero(c.dim());
        for i in 0..3 {
            for j in 0..3 {
                let s = CycScalar::from_int(g.signs[i] * g.signs[j]);
                let v = c.conj(self.get(g.perm[j], g.perm[i]));
                out.set(i, j, v.iter().map(|x| x * &s).collect());
            }
        }
        out
    }

    /// Sum of diagonal entries, as an element of the coefficient algebra.
    pub fn trace(&self) -> Vec<CycScalar> {
        let d = self.entries[0].len();
        (0..d)
            .map(|k| &(&self.get(0, 0)[k] + &self.get(1, 1)[k]) + &self.get(2, 2)[k])
            .collect()
    }
}

/// One basis element of H3 and the entry that carries its coordinate.
#[derive(Clone, Debug)]
struct Slot {
    name: String,
    matrix: HMatrix,
    row: usize,
    col: usize,
    comp: usize,
}

/// A Jordan algebra H3(C, γ) on a realified basis.
#[derive(Clone, Debug)]
pub struct JordanH3 {
    pub kind: H3Kind,
    pub gamma: Gamma,
    coeff: CompositionAlgebra,
    slots: Vec<Slot>,
    table: AlgebraTable,
}

/// Diagonal entry e, off-diagonal entry a placed by ι_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeirceElement {
    pub diag: [CycScalar; 3],
    pub off: [Vec<CycScalar>; 3],
}

const IOTA_POS: [(usize, usize); 3] = [(1, 2), (2, 0), (0, 1)];

impl JordanH3 {
    pub fn build(kind: H3Kind) -> Result<Self> {
        let (ckind, gamma) = match kind {
            H3Kind::AlbertCompact => (CompositionKind::Octonion, Gamma::identity()),
            H3Kind::Albert => (CompositionKind::Octonion, Gamma::diag([1, -1, 1])),
            H3Kind::Complex => (CompositionKind::Complex, Gamma::swap23()),
            H3Kind::SplitComplex => (CompositionKind::SplitComplex, Gamma::swap23()),
        };
        let coeff = CompositionAlgebra::build(ckind);
        let d = coeff.dim();
        let cnames: Vec<String> = coeff.table().names().to_vec();
        let mut slots = Vec::new();
        let unit = |i: usize, j: usize, v: Vec<CycScalar>, m: &mut HMatrix| m.set(i, j, v);
        if gamma.perm == [0, 1, 2] {
            for i in 0..3 {
                let mut m = HMatrix::zero(d);
                unit(i, i, coeff.one(), &mut m);
                slots.push(Slot {
                    name: format!("E{}{}", i + 1, i + 1),
                    matrix: m,
                    row: i,
                    col: i,
                    comp: 0,
                });
            }
            for (k, &(r, c)) in IOTA_POS.iter().enumerate() {
                for e in 0..d {
                    slots.push(Slot {
                        name: format!("i{}({})", k + 1, cnames[e]),
                        matrix: Self::iota_matrix(&coeff, &gamma, k, &coeff.basis(e)),
                        row: r,
                        col: c,
                        comp: e,
                    });
                }
            }
        } else {
            // π swaps 2 and 3: x_ij = conj(x_{π(j) π(i)}).
            let mut single = |name: &str, i: usize, j: usize| {
                let mut m = HMatrix::zero(d);
                m.set(i, j, coeff.one());
                slots.push(Slot {
                    name: name.into(),
                    matrix: m,
                    row: i,
                    col: j,
                    comp: 0,
                });
            };
            single("E11", 0, 0);
            single("E23", 1, 2);
            single("E32", 2, 1);
            for (i, j) in [(0, 1), (0, 2), (1, 1)] {
                let (pi, pj) = (gamma.perm[j], gamma.perm[i]);
                for e in 0..d {
                    let a = coeff.basis(e);
                    let mut m = HMatrix::zero(d);
                    m.set(i, j, a.clone());
                    m.set(pi, pj, coeff.conj(&a));
                    slots.push(Slot {
                        name: format!("x{}{}({})", i + 1, j + 1, cnames[e]),
                        matrix: m,
                        row: i,
                        col: j,
                        comp: e,
                    });
                }
            }
        }
        let mut h = JordanH3 {
            kind,
            gamma,
            coeff,
            slots,
            table: AlgebraTable::zero_algebra(0, AlgebraKind::Jordan),
        };
        for s in &h.slots {
            if !h.is_member(&s.matrix) {
                return Err(Error::Check(format!("basis element {} is not hermitian", s.name)));
            }
        }
        let n = h.slots.len();
        let names = h.slots.iter().map(|s| s.name.clone()).collect();
        let mut prods = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let p = h.jordan_matrix_product(&h.slots[i].matrix, &h.slots[j].matrix);
                prods.push(h.coords(&p)?);
            }
        }
        let mut it = prods.into_iter();
        h.table = AlgebraTable::from_fn(names, AlgebraKind::Jordan, |_, _| it.next().expect("n²"))?;
        Ok(h)
    }

    fn iota_matrix(c: &CompositionAlgebra, g: &Gamma, k: usize, a: &[CycScalar]) -> HMatrix {
        let (r, col) = IOTA_POS[k];
        let mut m = HMatrix::zero(c.dim());
        m.set(r, col, a.to_vec());
        let s = CycScalar::from_int(g.signs[r] * g.signs[col]);
        m.set(col, r, c.conj(a).iter().map(|x| x * &s).collect());
        m
    }

    pub fn coefficients(&self) -> &CompositionAlgebra {
        &self.coeff
    }

    pub fn table(&self) -> &AlgebraTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.slots.len()
    }

    pub fn is_member(&self, x: &HMatrix) -> bool {
        &x.gamma_transform(&self.gamma, &self.coeff) == x
    }

    /// ½(xy + yx).
    pub fn jordan_matrix_product(&self, x: &HMatrix, y: &HMatrix) -> HMatrix {
        x.mul(y, &self.coeff).add(&y.mul(x, &self.coeff)).scale(&frac(1, 2))
    }

    pub fn matrix(&self, coords: &[CycScalar]) -> HMatrix {
        let mut m = HMatrix::zero(self.coeff.dim());
        for (c, s) in coords.iter().zip(&self.slots) {
            if !c.is_zero() {
                m = m.add(&s.matrix.scale(c));
            }
        }
        m
    }

    /// Coordinates of a hermitian matrix; fails for non-members.
    pub fn coords(&self, x: &HMatrix) -> Result<Vec<CycScalar>> {
        let v: Vec<CycScalar> = self.slots.iter().map(|s| x.get(s.row, s.col)[s.comp].clone()).collect();
        if &self.matrix(&v) != x {
            return Err(Error::NotInSubspace);
        }
        Ok(v)
    }

    pub fn basis_vector(&self, name: &str) -> Result<Vec<CycScalar>> {
        let i = self
            .slots
            .iter()
            .position(|s| s.name == name)
            .ok_or_else(|| Error::Unknown(name.into()))?;
        Ok(unit_vec(self.dim(), i))
    }

    pub fn identity(&self) -> Vec<CycScalar> {
        let mut m = HMatrix::zero(self.coeff.dim());
        for i in 0..3 {
            m.set(i, i, self.coeff.one());
        }
        self.coords(&m).expect("identity is hermitian")
    }

    /// ι_k(a) for k ∈ {1,2,3}; only for diagonal γ.
    pub fn iota(&self, k: usize, a: &[CycScalar]) -> Result<Vec<CycScalar>> {
        if self.gamma.perm != [0, 1, 2] || !(1..=3).contains(&k) {
            return Err(Error::Check("ι_k needs a diagonal twist and k in 1..=3".into()));
        }
        self.coords(&Self::iota_matrix(&self.coeff, &self.gamma, k - 1, a))
    }

    pub fn peirce_element(&self, p: &PeirceElement) -> Result<Vec<CycScalar>> {
        let mut v = vec![CycScalar::zero(); self.dim()];
        for i in 0..3 {
            let e = self.basis_vector(&format!("E{}{}", i + 1, i + 1))?;
            crate::exactla::axpy(&mut v, &p.diag[i], &e);
            let o = self.iota(i + 1, &p.off[i])?;
            crate::exactla::axpy(&mut v, &CycScalar::one(), &o);
        }
        Ok(v)
    }

    pub fn to_peirce(&self, x: &[CycScalar]) -> Result<PeirceElement> {
        if self.gamma.perm != [0, 1, 2] {
            return Err(Error::Check("Peirce form needs a diagonal twist".into()));
        }
        let m = self.matrix(x);
        Ok(PeirceElement {
            diag: [0, 1, 2].map(|i| m.get(i, i)[0].clone()),
            off: [0, 1, 2].map(|k| {
                let (r, c) = IOTA_POS[k];
                m.get(r, c).to_vec()
            }),
        })
    }

    pub fn mul(&self, x: &[CycScalar], y: &[CycScalar]) -> Vec<CycScalar> {
        self.table.mul(x, y)
    }

    /// Trace, which must be a real scalar.
    pub fn trace(&self, x: &[CycScalar]) -> Result<CycScalar> {
        let t = self.matrix(x).trace();
        if t[1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::Check("trace is not a scalar".into()));
        }
        Ok(t[0].clone())
    }

    /// Gram matrix of (x, y) ↦ tr(x·y) on the given vectors.
    pub fn trace_form_on(&self, basis: &[Vec<CycScalar>]) -> Result<SymmetricForm> {
        let k = basis.len();
        let mut g = ExactMatrix::zeros(k, k);
        for i in 0..k {
            for j in i..k {
                let t = self.trace(&self.mul(&basis[i], &basis[j]))?;
                g[(i, j)] = t.clone();
                g[(j, i)] = t;
            }
        }
        SymmetricForm::new(g)
    }

    pub fn trace_form(&self) -> Result<SymmetricForm> {
        let b: Vec<Vec<CycScalar>> = (0..self.dim()).map(|i| unit_vec(self.dim(), i)).collect();
        self.trace_form_on(&b)
    }

    /// Basis of the traceless part.
    pub fn traceless_basis(&self) -> Result<Vec<Vec<CycScalar>>> {
        if self.gamma.perm == [0, 1, 2] {
            let n = self.dim();
            let mut out = Vec::new();
            let mut d1 = vec![CycScalar::zero(); n];
            d1[0] = int(1);
            d1[1] = int(-1);
            let mut d2 = vec![CycScalar::zero(); n];
            d2[1] = int(1);
            d2[2] = int(-1);
            out.push(d1);
            out.push(d2);
            for i in 3..n {
                out.push(unit_vec(n, i));
            }
            return Ok(out);
        }
        let row: Vec<CycScalar> = (0..self.dim())
            .map(|i| self.trace(&unit_vec(self.dim(), i)))
            .collect::<Result<_>>()?;
        Ok(kernel(&ExactMatrix::from_rows(vec![row])?))
    }

    /// x ∗ y = x·y − ⅓ tr(x·y) I.
    pub fn star(&self, x: &[CycScalar], y: &[CycScalar]) -> Result<Vec<CycScalar>> {
        let p = self.mul(x, y);
        let t = &self.trace(&p)? * &frac(-1, 3);
        let id = self.identity();
        Ok(p.iter().zip(&id).map(|(a, b)| a + &(&t * b)).collect())
    }

    /// Matrix of R_x (equal to L_x).
    pub fn mult_operator(&self, x: &[CycScalar]) -> ExactMatrix {
        self.table.left_mult(x)
    }

    /// Z2³ × Z2² degree of each basis vector (octonions only, diagonal γ).
    fn octonion_peirce_degrees(&self) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
        if self.coeff.kind() != CompositionKind::Octonion || self.gamma.perm != [0, 1, 2] {
            return Err(Error::Check("needs an Albert algebra".into()));
        }
        let od = octonion_degrees();
        let peirce = [vec![0, 1], vec![1, 0], vec![1, 1]];
        let mut a = Vec::new();
        let mut b = Vec::new();
        for s in &self.slots {
            if s.row == s.col {
                a.push(vec![0, 0, 0]);
                b.push(vec![0, 0]);
            } else {
                let k = IOTA_POS.iter().position(|&p| p == (s.row, s.col)).expect("slot");
                a.push(od[s.comp].clone());
                b.push(peirce[k].clone());
            }
        }
        Ok((a, b))
    }

    /// J_g = Σ ι_i(O_g) with the diagonal in degree 0.
    pub fn octonion_part_grading(&self) -> Result<GradedDecomposition> {
        let (a, _) = self.octonion_peirce_degrees()?;
        GradedDecomposition::from_basis_degrees(FgAbelianGroup::elementary(2, 3), &a)
    }

    /// Z2² grading with J_{(0,1)} = ι1(O), J_{(1,0)} = ι2(O), J_{(1,1)} = ι3(O).
    pub fn peirce_grading(&self) -> Result<GradedDecomposition> {
        let (_, b) = self.octonion_peirce_degrees()?;
        GradedDecomposition::from_basis_degrees(FgAbelianGroup::elementary(2, 2), &b)
    }

    /// The Z2⁵ grading, refining the octonion part by the Peirce part.
    pub fn jordan_octonion_grading(&self) -> Result<GradedDecomposition> {
        refine(&self.octonion_part_grading()?, &self.peirce_grading()?)
    }

    /// The derivation 4[R_{ι1(1)}, R_{E22}].
    pub fn z_grading_derivation(&self) -> Result<ExactMatrix> {
        let a = self.mult_operator(&self.iota(1, &self.coeff.one())?);
        let b = self.mult_operator(&self.basis_vector("E22")?);
        Ok(a.commutator(&b)?.scale(&int(4)))
    }

    /// Eigenspace decomposition of 4[R_{ι1(1)}, R_{E22}], over Z.
    pub fn jordan_z_grading(&self) -> Result<GradedDecomposition> {
        if self.kind != H3Kind::Albert {
            return Err(Error::Check("the Z-grading is built on H3(O, diag(1,-1,1))".into()));
        }
        let d = self.z_grading_derivation()?;
        let eig: Vec<CycScalar> = (-2..=2).map(int).collect();
        let split = simultaneous_eigensplit(&[d], &[eig])?;
        let comps = split
            .into_iter()
            .map(|s| Component {
                degree: vec![s.eigenvalues[0].as_rational().and_then(|r| r.to_i64()).expect("integer")],
                basis: s.basis,
            })
            .collect();
        GradedDecomposition::from_components(FgAbelianGroup::free(1), self.dim(), comps)
    }

    /// Realified coordinates of a complex 3×3 matrix given with entries in
    /// Q(ζ₁₂), for the algebras over C.
    pub fn complex_matrix(&self, m: &[[CycScalar; 3]; 3]) -> Result<HMatrix> {
        if self.coeff.kind() != CompositionKind::Complex {
            return Err(Error::Check("complex matrices need C coefficients".into()));
        }
        let half = frac(1, 2);
        let mi = -CycScalar::i();
        let mut h = HMatrix::zero(2);
        for i in 0..3 {
            for j in 0..3 {
                let z = &m[i][j];
                let re = &(z + &z.conj()) * &half;
                let im = &(&(z - &z.conj()) * &half) * &mi;
                h.set(i, j, vec![re, im]);
            }
        }
        Ok(h)
    }

    /// Z3² grading of H3(C, γ3) by the Pauli-type matrices P, D.
    pub fn pauli_grading(&self) -> Result<GradedDecomposition> {
        if self.kind != H3Kind::Complex {
            return Err(Error::Check("the Pauli grading lives on H3(C, γ3)".into()));
        }
        let z = CycScalar::zero;
        let o = CycScalar::one;
        let w = CycScalar::omega();
        let p = [[z(), z(), o()], [o(), z(), z()], [z(), o(), z()]];
        let d = [[o(), z(), z()], [z(), w.clone(), z()], [z(), z(), w.pow(2)]];
        let mut comps = Vec::new();
        for a in 0..3i64 {
            for b in 0..3i64 {
                let q = cmat_mul(&cmat_pow(&p, a), &cmat_pow(&d, b));
                let v = self.hermitian_multiple(&q)?;
                comps.push(Component {
                    degree: vec![a, b],
                    basis: vec![v],
                });
            }
        }
        GradedDecomposition::from_components(FgAbelianGroup::elementary(3, 2), self.dim(), comps)
    }

    /// The unique (up to real scalars) element of C·Q lying in the algebra.
    pub fn hermitian_multiple(&self, q: &[[CycScalar; 3]; 3]) -> Result<Vec<CycScalar>> {
        let hq = self.complex_matrix(q)?;
        let iq = q.clone().map(|r| r.map(|x| &x * &CycScalar::i()));
        let hiq = self.complex_matrix(&iq)?;
        // Solve s·F(Q) + t·F(iQ) = 0 with F(x) = x − γ x̄ᵗ γ⁻¹.
        let f = |x: &HMatrix| -> Vec<CycScalar> {
            let t = x.gamma_transform(&self.gamma, &self.coeff);
            x.entries.iter().zip(&t.entries).flat_map(|(a, b)| a.iter().zip(b).map(|(p, q)| p - q)).collect()
        };
        let (fa, fb) = (f(&hq), f(&hiq));
        let m = ExactMatrix::from_columns(fa.len(), &[fa, fb]);
        let ker = kernel(&m);
        if ker.len() != 1 {
            return Err(Error::Check(format!("C·Q meets the algebra in dimension {}", ker.len())));
        }
        let x = hq.scale(&ker[0][0]).add(&hiq.scale(&ker[0][1]));
        self.coords(&x)
    }
}

type CMat = [[CycScalar; 3]; 3];

fn cmat_mul(a: &CMat, b: &CMat) -> CMat {
    let mut out: CMat = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| &a[i][k] * &b[k][j]).sum();
        }
    }
    out
}

fn cmat_pow(a: &CMat, e: i64) -> CMat {
    let mut out: CMat = Default::default();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = CycScalar::one();
    }
    for _ in 0..e {
        out = cmat_mul(&out, a);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(JordanH3::build(H3Kind::Albert).unwrap().dim(), 27);
        assert_eq!(JordanH3::build(H3Kind::AlbertCompact).unwrap().dim(), 27);
        assert_eq!(JordanH3::build(H3Kind::Complex).unwrap().dim(), 9);
        assert_eq!(JordanH3::build(H3Kind::SplitComplex).unwrap().dim(), 9);
    }

    #[test]
    fn peirce_roundtrip() {
        let j = JordanH3::build(H3Kind::Albert).unwrap();
        let o = j.coefficients().clone();
        let p = PeirceElement {
            diag: [int(1), int(2), int(-3)],
            off: [o.basis(3), o.basis(0), o.basis(7)],
        };
        let v = j.peirce_element(&p).unwrap();
        assert_eq!(j.to_peirce(&v).unwrap(), p);
    }

    #[test]
    fn identity_is_unit() {
        for k in [H3Kind::Albert, H3Kind::Complex, H3Kind::SplitComplex] {
            let j = JordanH3::build(k).unwrap();
            let id = j.identity();
            for i in 0..j.dim() {
                let e = unit_vec(j.dim(), i);
                assert_eq!(j.mul(&id, &e), e);
            }
        }
    }

    #[test]
    fn pauli_generators_are_members() {
        let m = JordanH3::build(H3Kind::Complex).unwrap();
        let g = m.pauli_grading().unwrap();
        assert_eq!(g.components.len(), 9);
        let id = g.component(&[0, 0]).unwrap();
        assert_eq!(crate::exactla::rank(&ExactMatrix::from_rows(vec![id.basis[0].clone(), m.identity()]).unwrap()), 1);
    }
}
