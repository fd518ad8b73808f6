use std::collections::BTreeMap;

use serde::Serialize;

use super::group::{FgAbelianGroup, GroupElement};
use crate::error::{Error, Result};
use crate::exactla::{intersect, inverse, is_zero_vec, lattice_basis, smith_normal_form, unit_vec, ExactMatrix};
use crate::scalar::CycScalar;
use crate::structalg::{AlgebraTable, DerivationAlgebra};

/// Homogeneous component: a degree and a basis of the subspace.
#[derive(Clone, Debug, Serialize)]
pub struct Component {
    pub degree: GroupElement,
    #[serde(rename = "basis_vectors")]
    pub basis: Vec<Vec<CycScalar>>,
}

impl Component {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Direct sum decomposition labelled by elements of an abelian group.
#[derive(Clone, Debug, Serialize)]
pub struct GradedDecomposition {
    pub group: FgAbelianGroup,
    #[serde(skip)]
    pub ambient_dim: usize,
    pub components: Vec<Component>,
}

impl GradedDecomposition {
    /// Merges components of equal degree and drops empty ones.
    pub fn from_components(group: FgAbelianGroup, ambient_dim: usize, comps: Vec<Component>) -> Result<Self> {
        let mut by_deg: BTreeMap<GroupElement, Vec<Vec<CycScalar>>> = BTreeMap::new();
        for c in comps {
            if c.basis.iter().any(|v| v.len() != ambient_dim) {
                return Err(Error::Dimension("component vector length".into()));
            }
            let d = group.normalize(&c.degree)?;
            by_deg.entry(d).or_default().extend(c.basis);
        }
        let components = by_deg
            .into_iter()
            .filter(|(_, b)| !b.is_empty())
            .map(|(degree, basis)| Component { degree, basis })
            .collect();
        Ok(GradedDecomposition {
            group,
            ambient_dim,
            components,
        })
    }

    /// Grading in which basis vector `i` is homogeneous of degree `degrees[i]`.
    pub fn from_basis_degrees(group: FgAbelianGroup, degrees: &[GroupElement]) -> Result<Self> {
        let n = degrees.len();
        let comps = degrees
            .iter()
            .enumerate()
            .map(|(i, d)| Component {
                degree: d.clone(),
                basis: vec![unit_vec(n, i)],
            })
            .collect();
        Self::from_components(group, n, comps)
    }

    pub fn trivial(n: usize) -> Self {
        GradedDecomposition {
            group: FgAbelianGroup::trivial(),
            ambient_dim: n,
            components: vec![Component {
                degree: Vec::new(),
                basis: (0..n).map(|i| unit_vec(n, i)).collect(),
            }],
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(Component::dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims().iter().sum()
    }

    /// (h1, …, hr): number of components of each dimension.
    pub fn type_vector(&self) -> Vec<usize> {
        let max = self.dims().into_iter().max().unwrap_or(0);
        let mut h = vec![0; max];
        for d in self.dims() {
            if d > 0 {
                h[d - 1] += 1;
            }
        }
        h
    }

    pub fn support(&self) -> Vec<GroupElement> {
        self.components.iter().map(|c| c.degree.clone()).collect()
    }

    pub fn component(&self, degree: &[i64]) -> Option<&Component> {
        let d = self.group.normalize(degree).ok()?;
        self.components.iter().find(|c| c.degree == d)
    }

    pub fn neutral_dim(&self) -> usize {
        self.component(&self.group.zero()).map_or(0, Component::dim)
    }

    /// Σ dim L_g over g ≠ e with 2g = e.
    pub fn order_two_dim(&self) -> usize {
        self.components
            .iter()
            .filter(|c| self.group.order(&c.degree) == Some(2))
            .map(Component::dim)
            .sum()
    }

    /// Columns: all component basis vectors; also the component index of each column.
    pub fn adapted_basis(&self) -> (ExactMatrix, Vec<usize>) {
        let mut cols = Vec::new();
        let mut owner = Vec::new();
        for (ci, c) in self.components.iter().enumerate() {
            for v in &c.basis {
                cols.push(v.clone());
                owner.push(ci);
            }
        }
        (ExactMatrix::from_columns(self.ambient_dim, &cols), owner)
    }

    /// Applies a map to every degree, merging components that collide.
    pub fn coarsen(&self, target: FgAbelianGroup, f: impl Fn(&[i64]) -> GroupElement) -> Result<Self> {
        let comps = self
            .components
            .iter()
            .map(|c| Component {
                degree: f(&c.degree),
                basis: c.basis.clone(),
            })
            .collect();
        Self::from_components(target, self.ambient_dim, comps)
    }

    /// Embeds each component into a larger space via `embed`.
    pub fn map_vectors(&self, n: usize, embed: impl Fn(&[CycScalar]) -> Vec<CycScalar>) -> Result<Self> {
        let comps = self
            .components
            .iter()
            .map(|c| Component {
                degree: c.degree.clone(),
                basis: c.basis.iter().map(|v| embed(v)).collect(),
            })
            .collect();
        Self::from_components(self.group.clone(), n, comps)
    }

    /// Concatenation of two decompositions of complementary subspaces.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.group != other.group || self.ambient_dim != other.ambient_dim {
            return Err(Error::InvalidGrading("direct sum of incompatible decompositions".into()));
        }
        let comps = self.components.iter().chain(&other.components).cloned().collect();
        Self::from_components(self.group.clone(), self.ambient_dim, comps)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// A product of homogeneous elements that leaves the expected component.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub degree_left: GroupElement,
    pub degree_right: GroupElement,
    pub left_vector: usize,
    pub right_vector: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GradingReport {
    pub direct_sum: bool,
    pub compatible: bool,
    pub violations: Vec<Violation>,
    /// (a, b, k): the product of components a and b is nonzero and lies in component k.
    #[serde(skip)]
    pub relations: Vec<(usize, usize, usize)>,
}

impl GradingReport {
    pub fn passed(&self) -> bool {
        self.direct_sum && self.compatible
    }
}

/// Exact check of the direct sum property and of A_g A_h ⊆ A_{g+h}.
pub fn check_grading(alg: &AlgebraTable, g: &GradedDecomposition) -> Result<GradingReport> {
    let n = alg.dim();
    if g.ambient_dim != n {
        return Err(Error::Dimension("grading and algebra dimensions differ".into()));
    }
    let (p, owner) = g.adapted_basis();
    let mut rep = GradingReport {
        direct_sum: p.cols() == n,
        compatible: true,
        violations: Vec::new(),
        relations: Vec::new(),
    };
    if !rep.direct_sum {
        rep.compatible = false;
        return Ok(rep);
    }
    let pinv = match inverse(&p) {
        Ok(m) => m,
        Err(_) => {
            rep.direct_sum = false;
            rep.compatible = false;
            return Ok(rep);
        }
    };
    let index: BTreeMap<&GroupElement, usize> =
        g.components.iter().enumerate().map(|(i, c)| (&c.degree, i)).collect();
    for (a, ca) in g.components.iter().enumerate() {
        for (b, cb) in g.components.iter().enumerate() {
            let target = index.get(&g.group.add(&ca.degree, &cb.degree)?).copied();
            let mut nonzero = false;
            for (iu, u) in ca.basis.iter().enumerate() {
                for (iv, v) in cb.basis.iter().enumerate() {
                    let w = alg.mul(u, v);
                    if is_zero_vec(&w) {
                        continue;
                    }
                    nonzero = true;
                    let c = pinv.mul_vec(&w)?;
                    let ok = c
                        .iter()
                        .zip(&owner)
                        .all(|(x, &o)| x.is_zero() || Some(o) == target);
                    if !ok {
                        rep.compatible = false;
                        if rep.violations.len() < 16 {
                            rep.violations.push(Violation {
                                degree_left: ca.degree.clone(),
                                degree_right: cb.degree.clone(),
                                left_vector: iu,
                                right_vector: iv,
                            });
                        }
                    }
                }
            }
            if nonzero {
                if let Some(k) = target {
                    rep.relations.push((a, b, k));
                }
            }
        }
    }
    Ok(rep)
}

/// Universal group with the image of each component's degree.
#[derive(Clone, Debug, Serialize)]
pub struct UniversalGroup {
    pub group: FgAbelianGroup,
    pub degrees: Vec<GroupElement>,
}

/// Group generated by the support subject to g + h = k whenever
/// 0 ≠ A_g A_h ⊆ A_k, in invariant factor form.
pub fn universal_group(g: &GradedDecomposition, rep: &GradingReport) -> Result<UniversalGroup> {
    if !rep.passed() {
        return Err(Error::InvalidGrading("universal group of a failed grading".into()));
    }
    let s = g.components.len();
    let mut rows: Vec<Vec<i128>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for &(a, b, k) in &rep.relations {
        let key = (a.min(b), a.max(b), k);
        if !seen.insert(key) {
            continue;
        }
        let mut r = vec![0i128; s];
        r[a] += 1;
        r[b] += 1;
        r[k] -= 1;
        if r.iter().any(|&x| x != 0) {
            rows.push(r);
        }
    }
    let basis = lattice_basis(&rows, s)?;
    let snf = if basis.is_empty() {
        None
    } else {
        Some(smith_normal_form(&basis)?)
    };
    let (inv, v) = match &snf {
        Some(f) => {
            let mut inv = f.invariants();
            inv.resize(s, 0);
            (inv, f.v.clone())
        }
        None => (vec![0; s], (0..s).map(|i| (0..s).map(|j| i128::from(i == j)).collect()).collect()),
    };
    let free: Vec<usize> = (0..s).filter(|&i| inv[i] == 0).collect();
    let tors: Vec<usize> = (0..s).filter(|&i| inv[i] > 1).collect();
    let group = FgAbelianGroup::new(free.len(), tors.iter().map(|&i| inv[i] as u64).collect())?;
    let mut degrees = Vec::with_capacity(s);
    for row in v.iter().take(s) {
        let mut d = Vec::with_capacity(group.len());
        for &i in &free {
            d.push(i64::try_from(row[i]).map_err(|_| Error::Overflow("universal group"))?);
        }
        for &i in &tors {
            d.push(row[i].rem_euclid(inv[i]) as i64);
        }
        degrees.push(d);
    }
    Ok(UniversalGroup { group, degrees })
}

/// Common refinement: components are the nonzero pairwise intersections.
pub fn refine(a: &GradedDecomposition, b: &GradedDecomposition) -> Result<GradedDecomposition> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::Dimension("refining gradings of different spaces".into()));
    }
    let n = a.ambient_dim;
    let group = a.group.product(&b.group);
    let mut comps = Vec::new();
    for ca in &a.components {
        for cb in &b.components {
            let basis = intersect(n, &ca.basis, &cb.basis);
            if !basis.is_empty() {
                comps.push(Component {
                    degree: a.group.pair(&b.group, &ca.degree, &cb.degree),
                    basis,
                });
            }
        }
    }
    let r = GradedDecomposition::from_components(group, n, comps)?;
    if r.total_dim() != n {
        return Err(Error::InvalidGrading(format!(
            "gradings are not compatible: intersections span {} of {n}",
            r.total_dim()
        )));
    }
    Ok(r)
}

/// Der(A)_g = {d : d(A_h) ⊆ A_{g+h}}, as subspaces in the coordinates of `der`.
pub fn induced_derivation_grading(g: &GradedDecomposition, der: &DerivationAlgebra) -> Result<GradedDecomposition> {
    let (p, owner) = g.adapted_basis();
    let pinv = inverse(&p)?;
    let n = p.rows();
    let mut parts: BTreeMap<GroupElement, Vec<Vec<CycScalar>>> = BTreeMap::new();
    let mut diff: BTreeMap<(usize, usize), GroupElement> = BTreeMap::new();
    for (cr, a) in g.components.iter().enumerate() {
        for (cc, b) in g.components.iter().enumerate() {
            diff.insert((cr, cc), g.group.add(&a.degree, &g.group.neg(&b.degree)?)?);
        }
    }
    for d in &der.basis {
        let dd = pinv.mul(&d.mul(&p)?)?;
        let mut blocks: BTreeMap<GroupElement, ExactMatrix> = BTreeMap::new();
        for r in 0..n {
            for c in 0..n {
                let x = &dd[(r, c)];
                if x.is_zero() {
                    continue;
                }
                let deg = diff[&(owner[r], owner[c])].clone();
                blocks.entry(deg).or_insert_with(|| ExactMatrix::zeros(n, n))[(r, c)] = x.clone();
            }
        }
        for (deg, blk) in blocks {
            let back = p.mul(&blk)?.mul(&pinv)?;
            let coords = der.coords(&back).map_err(|_| {
                Error::InvalidGrading("homogeneous part of a derivation is not a derivation".into())
            })?;
            parts.entry(deg).or_default().push(coords);
        }
    }
    let k = der.dim();
    let comps = parts
        .into_iter()
        .map(|(degree, vecs)| Component {
            degree,
            basis: crate::structalg::Subspace::span(k, vecs).basis,
        })
        .collect();
    let out = GradedDecomposition::from_components(g.group.clone(), k, comps)?;
    if out.total_dim() != k {
        return Err(Error::InvalidGrading("induced components do not form a direct sum".into()));
    }
    Ok(out)
}

/// Outcome of the bound |s − dim L_e| ≤ Σ_{2g=e, g≠e} dim L_g.
#[derive(Clone, Debug, Serialize)]
pub struct IntervalReport {
    pub signature: i64,
    pub neutral_dim: usize,
    pub order_two_dim: usize,
    pub holds: bool,
    pub boundary: bool,
    pub interval: String,
}

pub fn interval_check(g: &GradedDecomposition, signature: i64) -> IntervalReport {
    let e = g.neutral_dim();
    let t = g.order_two_dim();
    let gap = (signature - e as i64).unsigned_abs() as usize;
    IntervalReport {
        signature,
        neutral_dim: e,
        order_two_dim: t,
        holds: gap <= t,
        boundary: gap == t,
        interval: format!("{e}±{t}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::structalg::AlgebraKind;

    fn sl2() -> AlgebraTable {
        AlgebraTable::from_fn(["h", "e", "f"].map(String::from).to_vec(), AlgebraKind::Lie, |i, j| {
            let mut v = vec![CycScalar::zero(); 3];
            match (i, j) {
                (0, 1) => v[1] = int(2),
                (1, 0) => v[1] = int(-2),
                (0, 2) => v[2] = int(-2),
                (2, 0) => v[2] = int(2),
                (1, 2) => v[0] = int(1),
                (2, 1) => v[0] = int(-1),
                _ => {}
            }
            v
        })
        .unwrap()
    }

    #[test]
    fn root_grading_of_sl2() {
        let l = sl2();
        let g = GradedDecomposition::from_basis_degrees(FgAbelianGroup::free(1), &[vec![0], vec![1], vec![-1]]).unwrap();
        let rep = check_grading(&l, &g).unwrap();
        assert!(rep.passed());
        assert_eq!(g.type_vector(), vec![3]);
        let u = universal_group(&g, &rep).unwrap();
        assert_eq!(u.group, FgAbelianGroup::free(1));
        let t = GradedDecomposition::trivial(3);
        assert!(check_grading(&l, &t).unwrap().passed());
    }

    #[test]
    fn corrupted_degrees_are_caught() {
        let l = sl2();
        let g = GradedDecomposition::from_basis_degrees(FgAbelianGroup::free(1), &[vec![0], vec![1], vec![2]]).unwrap();
        let rep = check_grading(&l, &g).unwrap();
        assert!(!rep.passed());
        assert!(!rep.violations.is_empty());
    }

    #[test]
    fn refinement_with_trivial_is_identity() {
        let g = GradedDecomposition::from_basis_degrees(FgAbelianGroup::elementary(2, 1), &[vec![0], vec![1], vec![1]]).unwrap();
        let r = refine(&g, &GradedDecomposition::trivial(3)).unwrap();
        assert_eq!(r.dims(), g.dims());
    }

    #[test]
    fn interval_numbers() {
        let g = GradedDecomposition::from_basis_degrees(FgAbelianGroup::elementary(2, 1), &[vec![0], vec![1], vec![1]]).unwrap();
        let r = interval_check(&g, -1);
        assert_eq!(r.interval, "1±2");
        assert!(r.holds);
    }
}
