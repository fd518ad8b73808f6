use super::{check_dims, embed, Part};
use crate::error::{Error, Result};
use crate::exactla::{intersect, Echelon, ExactMatrix};
use crate::gradings::{
    induced_derivation_grading, Component, FgAbelianGroup, GradedDecomposition,
};
use crate::jordan::{H3Kind, JordanH3};
use crate::scalar::{int, CycScalar};
use crate::structalg::{derivations, AlgebraKind, AlgebraTable, DerivationAlgebra};

/// (Der(J) ⊕ J_0)^ε with [x, y] = ε[R_x, R_y] on J_0.
#[derive(Clone, Debug)]
pub struct AlbertModel {
    pub epsilon: i64,
    pub jordan: JordanH3,
    pub der: DerivationAlgebra,
    pub j0: Vec<Vec<CycScalar>>,
    j0_coords: Echelon,
    table: AlgebraTable,
}

pub fn build_albert(epsilon: i64) -> Result<AlbertModel> {
    if epsilon != 1 && epsilon != -1 {
        return Err(Error::Check("epsilon must be +1 or -1".into()));
    }
    let jordan = JordanH3::build(H3Kind::Albert)?;
    let der = derivations(jordan.table())?;
    let j0 = jordan.traceless_basis()?;
    let j0_coords = Echelon::from_basis(jordan.dim(), &j0)?;
    let nd = der.dim();
    let n = nd + j0.len();
    let rx: Vec<ExactMatrix> = j0.iter().map(|x| jordan.mult_operator(x)).collect();

    let mut prod = vec![vec![CycScalar::zero(); n]; n * n];
    for i in 0..nd {
        for j in 0..nd {
            for (k, c) in der.table.basis_product(i, j) {
                prod[i * n + j][*k] = c.clone();
            }
        }
        for (a, x) in j0.iter().enumerate() {
            let dx = j0_coords.coords(&der.basis[i].mul_vec(x)?)?;
            for (b, c) in dx.into_iter().enumerate() {
                prod[i * n + nd + a][nd + b] = c.clone();
                prod[(nd + a) * n + i][nd + b] = -c;
            }
        }
    }
    let eps = int(epsilon);
    for a in 0..j0.len() {
        for b in a + 1..j0.len() {
            let c = der.coords(&rx[a].commutator(&rx[b])?)?;
            for (k, v) in c.into_iter().enumerate() {
                let v = &v * &eps;
                prod[(nd + b) * n + nd + a][k] = -v.clone();
                prod[(nd + a) * n + nd + b][k] = v;
            }
        }
    }
    let names = (0..nd)
        .map(|i| format!("d{i}"))
        .chain((0..j0.len()).map(|a| format!("x{a}")))
        .collect();
    let mut it = prod.into_iter();
    let table = AlgebraTable::from_fn(names, AlgebraKind::Lie, |_, _| it.next().expect("n²"))?;
    Ok(AlbertModel {
        epsilon,
        jordan,
        der,
        j0,
        j0_coords,
        table,
    })
}

impl AlbertModel {
    pub fn table(&self) -> &AlgebraTable {
        &self.table
    }

    pub fn parts(&self) -> Vec<Part> {
        let nd = self.der.dim();
        let parts = vec![Part::new("Der(J)", 0, nd), Part::new("J0", nd, self.j0.len())];
        debug_assert!(check_dims(&parts, self.table.dim()).is_ok());
        parts
    }

    /// Parity of each basis vector: J_0 is odd.
    pub fn odd(&self) -> Vec<bool> {
        (0..self.table.dim()).map(|i| i >= self.der.dim()).collect()
    }

    /// Coordinates of x ∈ J_0 (given in J coordinates) in the model.
    pub fn embed_j0(&self, x: &[CycScalar]) -> Result<Vec<CycScalar>> {
        let c = self.j0_coords.coords(x)?;
        Ok(embed(self.table.dim(), &self.parts()[1], &c))
    }

    pub fn embed_der(&self, d: &[CycScalar]) -> Vec<CycScalar> {
        embed(self.table.dim(), &self.parts()[0], d)
    }

    /// A G-grading on J gives a G × Z2 grading on the model: Der(J)_g in
    /// degree (g, 0) and (J_0 ∩ J_g) in degree (g, 1).
    pub fn lift_grading(&self, g: &GradedDecomposition) -> Result<GradedDecomposition> {
        let z2 = FgAbelianGroup::elementary(2, 1);
        let group = g.group.product(&z2);
        let ind = induced_derivation_grading(g, &self.der)?;
        let mut comps = Vec::new();
        for c in &ind.components {
            comps.push(Component {
                degree: g.group.pair(&z2, &c.degree, &[0]),
                basis: c.basis.iter().map(|v| self.embed_der(v)).collect(),
            });
        }
        let mut odd_dim = 0;
        for c in &g.components {
            let meet = intersect(self.jordan.dim(), &c.basis, &self.j0);
            odd_dim += meet.len();
            comps.push(Component {
                degree: g.group.pair(&z2, &c.degree, &[1]),
                basis: meet.iter().map(|v| self.embed_j0(v)).collect::<Result<_>>()?,
            });
        }
        if odd_dim != self.j0.len() {
            return Err(Error::InvalidGrading("the grading does not restrict to J0".into()));
        }
        GradedDecomposition::from_components(group, self.table.dim(), comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_epsilon() {
        assert!(build_albert(2).is_err());
    }

    #[test]
    fn parity_vector() {
        let a = build_albert(-1).unwrap();
        let odd = a.odd();
        assert_eq!(odd.iter().filter(|&&o| o).count(), 26);
        assert!(!odd[0] && odd[77]);
    }
}
