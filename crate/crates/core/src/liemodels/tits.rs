use super::{embed, Part};
use crate::composition::{octonion_degrees, octonion_grading, CompositionAlgebra, CompositionKind};
use crate::error::{Error, Result};
use crate::exactla::{Echelon, ExactMatrix};
use crate::gradings::{induced_derivation_grading, Component, FgAbelianGroup, GradedDecomposition};
use crate::jordan::{H3Kind, JordanH3};
use crate::scalar::{frac, int, CycScalar};
use crate::structalg::{derivations, AlgebraKind, AlgebraTable, DerivationAlgebra};

/// Der(C) ⊕ (C_0 ⊗ M_0) ⊕ Der(M) for C the octonions or split octonions.
#[derive(Clone, Debug)]
pub struct TitsModel {
    pub octonions: CompositionAlgebra,
    pub m: JordanH3,
    pub der_o: DerivationAlgebra,
    pub der_m: DerivationAlgebra,
    pub m0: Vec<Vec<CycScalar>>,
    m0_coords: Echelon,
    table: AlgebraTable,
}

pub fn build_tits(variant: CompositionKind) -> Result<TitsModel> {
    if !matches!(variant, CompositionKind::Octonion | CompositionKind::SplitOctonion) {
        return Err(Error::Check("the Tits model needs an octonion algebra".into()));
    }
    let o = CompositionAlgebra::build(variant);
    let m = JordanH3::build(H3Kind::Complex)?;
    let der_o = derivations(o.table())?;
    let der_m = derivations(m.table())?;
    let m0 = m.traceless_basis()?;
    let m0_coords = Echelon::from_basis(m.dim(), &m0)?;
    let (no, nm, k) = (der_o.dim(), der_m.dim(), m0.len());
    let t0 = no;
    let t1 = no + 7 * k;
    let n = t1 + nm;
    let tensor = |a: usize, x: usize| t0 + a * k + x;
    let mut prod = vec![vec![CycScalar::zero(); n]; n * n];

    for i in 0..no {
        for j in 0..no {
            for (c, v) in der_o.table.basis_product(i, j) {
                prod[i * n + j][*c] = v.clone();
            }
        }
        for a in 0..7 {
            let da = der_o.basis[i].mul_vec(&o.basis(a + 1))?;
            if !da[0].is_zero() {
                return Err(Error::Check("derivation does not preserve C_0".into()));
            }
            for x in 0..k {
                for b in 0..7 {
                    let c = &da[b + 1];
                    if !c.is_zero() {
                        prod[i * n + tensor(a, x)][tensor(b, x)] = c.clone();
                        prod[tensor(a, x) * n + i][tensor(b, x)] = -c;
                    }
                }
            }
        }
    }
    for i in 0..nm {
        for j in 0..nm {
            for (c, v) in der_m.table.basis_product(i, j) {
                prod[(t1 + i) * n + t1 + j][t1 + *c] = v.clone();
            }
        }
        for x in 0..k {
            let dx = m0_coords.coords(&der_m.basis[i].mul_vec(&m0[x])?)?;
            for a in 0..7 {
                for (y, c) in dx.iter().enumerate() {
                    if !c.is_zero() {
                        prod[(t1 + i) * n + tensor(a, x)][tensor(a, y)] = c.clone();
                        prod[tensor(a, x) * n + t1 + i][tensor(a, y)] = -c;
                    }
                }
            }
        }
    }

    // [a⊗x, b⊗y] = ⅓ tr(x·y) d_{a,b} + [a,b]⊗(x∗y) + 2 t(ab) [R_x, R_y]
    let third = frac(1, 3);
    let two = int(2);
    let rx: Vec<ExactMatrix> = m0.iter().map(|x| m.mult_operator(x)).collect();
    let dab: Vec<Vec<Vec<CycScalar>>> = (0..7)
        .map(|a| {
            (0..7)
                .map(|b| der_o.coords(&o.d_ab(&o.basis(a + 1), &o.basis(b + 1))?))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    for x in 0..k {
        for y in 0..k {
            let trxy = m.trace(&m.mul(&m0[x], &m0[y]))?;
            let star = m0_coords.coords(&m.star(&m0[x], &m0[y])?)?;
            let rr = der_m.coords(&rx[x].commutator(&rx[y])?)?;
            for a in 0..7 {
                let ea = o.basis(a + 1);
                for b in 0..7 {
                    let eb = o.basis(b + 1);
                    let out = &mut prod[tensor(a, x) * n + tensor(b, y)];
                    let s = &third * &trxy;
                    if !s.is_zero() {
                        for (c, v) in dab[a][b].iter().enumerate() {
                            out[c] = &s * v;
                        }
                    }
                    let comm = o.commutator(&ea, &eb);
                    for c in 0..7 {
                        if comm[c + 1].is_zero() {
                            continue;
                        }
                        for (z, v) in star.iter().enumerate() {
                            out[tensor(c, z)] += &(&comm[c + 1] * v);
                        }
                    }
                    let t = &two * &o.trace(&o.mul(&ea, &eb));
                    if !t.is_zero() {
                        for (c, v) in rr.iter().enumerate() {
                            out[t1 + c] = &t * v;
                        }
                    }
                }
            }
        }
    }
    let mut names: Vec<String> = (0..no).map(|i| format!("dO{i}")).collect();
    let onames = o.table().names().to_vec();
    for a in 0..7 {
        for x in 0..k {
            names.push(format!("{}*m{x}", onames[a + 1]));
        }
    }
    names.extend((0..nm).map(|i| format!("dM{i}")));
    let mut it = prod.into_iter();
    let table = AlgebraTable::from_fn(names, AlgebraKind::Lie, |_, _| it.next().expect("n²"))?;
    Ok(TitsModel {
        octonions: o,
        m,
        der_o,
        der_m,
        m0,
        m0_coords,
        table,
    })
}

impl TitsModel {
    pub fn table(&self) -> &AlgebraTable {
        &self.table
    }

    pub fn parts(&self) -> Vec<Part> {
        let (no, nm, k) = (self.der_o.dim(), self.der_m.dim(), self.m0.len());
        vec![
            Part::new("Der(O)", 0, no),
            Part::new("O0*M0", no, 7 * k),
            Part::new("Der(M)", no + 7 * k, nm),
        ]
    }

    /// e_a ⊗ x for a ∈ 1..=7 and x ∈ M_0 in M coordinates.
    pub fn tensor(&self, a: usize, x: &[CycScalar]) -> Result<Vec<CycScalar>> {
        if !(1..=7).contains(&a) {
            return Err(Error::Check("tensor factor must be e1..e7".into()));
        }
        let c = self.m0_coords.coords(x)?;
        let k = self.m0.len();
        let mut v = vec![CycScalar::zero(); self.table.dim()];
        for (i, x) in c.into_iter().enumerate() {
            v[self.der_o.dim() + (a - 1) * k + i] = x;
        }
        Ok(v)
    }

    /// Z2³ × Z3² grading from the octonion and Pauli gradings.
    pub fn gamma3(&self) -> Result<GradedDecomposition> {
        let z2 = FgAbelianGroup::elementary(2, 3);
        let z3 = FgAbelianGroup::elementary(3, 2);
        let group = z2.product(&z3);
        let n = self.table.dim();
        let parts = self.parts();
        let og = octonion_grading()?;
        let pg = self.m.pauli_grading()?;
        let mut comps = Vec::new();
        for c in &induced_derivation_grading(&og, &self.der_o)?.components {
            comps.push(Component {
                degree: z2.pair(&z3, &c.degree, &[0, 0]),
                basis: c.basis.iter().map(|v| embed(n, &parts[0], v)).collect(),
            });
        }
        for c in &induced_derivation_grading(&pg, &self.der_m)?.components {
            comps.push(Component {
                degree: z2.pair(&z3, &[0, 0, 0], &c.degree),
                basis: c.basis.iter().map(|v| embed(n, &parts[2], v)).collect(),
            });
        }
        let od = octonion_degrees();
        for (a, deg) in od.iter().enumerate().skip(1) {
            for pc in pg.components.iter().filter(|c| c.degree != [0, 0]) {
                let basis = pc.basis.iter().map(|p| self.tensor(a, p)).collect::<Result<_>>()?;
                comps.push(Component {
                    degree: z2.pair(&z3, deg, &pc.degree),
                    basis,
                });
            }
        }
        GradedDecomposition::from_components(group, n, comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn needs_octonions() {
        assert!(build_tits(CompositionKind::Real).is_err());
    }
}
