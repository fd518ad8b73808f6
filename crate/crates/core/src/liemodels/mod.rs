//! Four constructions of the real form of E6 with Killing signature −14.

mod albert;
mod chevalley;
mod flag;
mod tits;

pub use albert::{build_albert, AlbertModel};
pub use chevalley::{build_chevalley_form, corollary_basis_report, ChevalleyRealForm, CorollaryReport};
pub use flag::{build_flag, FlagModel, FlagScales};
pub use tits::{build_tits, TitsModel};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{Echelon, ExactMatrix};
use crate::scalar::CycScalar;

/// A summand of a model, as a contiguous range of basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Part {
    pub name: String,
    pub start: usize,
    pub dim: usize,
}

impl Part {
    pub fn new(name: &str, start: usize, dim: usize) -> Self {
        Part {
            name: name.into(),
            start,
            dim,
        }
    }

    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.dim
    }

    pub fn basis(&self, n: usize) -> Vec<Vec<CycScalar>> {
        self.range().map(|i| crate::exactla::unit_vec(n, i)).collect()
    }
}

/// Matrix of `op` on the span of `basis`, which must be invariant.
pub fn restrict_operator(op: &ExactMatrix, basis: &[Vec<CycScalar>]) -> Result<ExactMatrix> {
    let n = op.rows();
    let coords = Echelon::from_basis(n, basis)?;
    let cols: Vec<Vec<CycScalar>> = basis
        .iter()
        .map(|b| coords.coords(&op.mul_vec(b)?))
        .collect::<Result<_>>()?;
    Ok(ExactMatrix::from_columns(basis.len(), &cols))
}

/// Places a vector of a summand into the coordinates of the whole model.
pub(crate) fn embed(n: usize, part: &Part, v: &[CycScalar]) -> Vec<CycScalar> {
    let mut out = vec![CycScalar::zero(); n];
    out[part.range()].clone_from_slice(v);
    out
}

pub(crate) fn check_dims(parts: &[Part], n: usize) -> Result<()> {
    let total: usize = parts.iter().map(|p| p.dim).sum();
    if total != n {
        return Err(Error::Dimension(format!("parts add up to {total}, not {n}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn parts_and_embedding() {
        let p = Part::new("x", 2, 3);
        assert_eq!(p.range(), 2..5);
        assert_eq!(p.basis(6).len(), 3);
        let v = embed(6, &p, &[int(1), int(2), int(3)]);
        assert_eq!(v[4], int(3));
        assert!(v[0].is_zero());
        assert!(check_dims(&[p.clone(), Part::new("y", 0, 2)], 5).is_ok());
        assert!(check_dims(&[p], 6).is_err());
    }
}
