use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::smith_normal_form;

/// Z^r × Z_{m1} × … × Z_{mk}.
///
/// Elements are integer vectors: the first `free_rank` coordinates are free,
/// coordinate `free_rank + i` is taken modulo `torsion[i]`. The canonical
/// presentation has `m1 | m2 | …` and no factor equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FgAbelianGroup {
    #[serde(rename = "rank")]
    free_rank: usize,
    torsion: Vec<u64>,
}

pub type GroupElement = Vec<i64>;

impl FgAbelianGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if torsion.contains(&0) {
            return Err(Error::InvalidGrading("torsion order 0; use the free rank".into()));
        }
        Ok(FgAbelianGroup { free_rank, torsion })
    }

    pub fn trivial() -> Self {
        FgAbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(r: usize) -> Self {
        FgAbelianGroup {
            free_rank: r,
            torsion: Vec::new(),
        }
    }

    pub fn elementary(p: u64, k: usize) -> Self {
        FgAbelianGroup {
            free_rank: 0,
            torsion: vec![p; k],
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Number of coordinates of an element.
    pub fn len(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Direct product; coordinates are concatenated with free parts first.
    pub fn product(&self, other: &Self) -> Self {
        FgAbelianGroup {
            free_rank: self.free_rank + other.free_rank,
            torsion: self.torsion.iter().chain(&other.torsion).copied().collect(),
        }
    }

    /// Embeds a pair of elements into `self.product(other)`.
    pub fn pair(&self, other: &Self, a: &[i64], b: &[i64]) -> GroupElement {
        let mut g = Vec::with_capacity(self.len() + other.len());
        g.extend_from_slice(&a[..self.free_rank]);
        g.extend_from_slice(&b[..other.free_rank]);
        g.extend_from_slice(&a[self.free_rank..]);
        g.extend_from_slice(&b[other.free_rank..]);
        g
    }

    pub fn zero(&self) -> GroupElement {
        vec![0; self.len()]
    }

    pub fn normalize(&self, g: &[i64]) -> Result<GroupElement> {
        if g.len() != self.len() {
            return Err(Error::Dimension(format!("element of length {} for group {self}", g.len())));
        }
        let mut out = g.to_vec();
        for (x, &m) in out[self.free_rank..].iter_mut().zip(&self.torsion) {
            *x = x.rem_euclid(m as i64);
        }
        Ok(out)
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Result<GroupElement> {
        if a.len() != b.len() {
            return Err(Error::Dimension("group elements of different groups".into()));
        }
        let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.normalize(&s)
    }

    pub fn neg(&self, a: &[i64]) -> Result<GroupElement> {
        let s: Vec<i64> = a.iter().map(|x| -x).collect();
        self.normalize(&s)
    }

    pub fn is_zero(&self, a: &[i64]) -> bool {
        self.normalize(a).is_ok_and(|g| g.iter().all(|&x| x == 0))
    }

    /// Order of an element; `None` for infinite order.
    pub fn order(&self, a: &[i64]) -> Option<u64> {
        let g = self.normalize(a).ok()?;
        if g[..self.free_rank].iter().any(|&x| x != 0) {
            return None;
        }
        let mut ord = 1u64;
        for (x, &m) in g[self.free_rank..].iter().zip(&self.torsion) {
            let o = m / num_integer::gcd(*x as u64, m);
            ord = num_integer::lcm(ord, o);
        }
        Some(ord)
    }

    /// Invariant factor presentation Z^r × Z_{d1} × … with d1 | d2 | ….
    pub fn canonical(&self) -> Result<Self> {
        let k = self.torsion.len();
        let m: Vec<Vec<i128>> = (0..k)
            .map(|i| (0..k).map(|j| if i == j { self.torsion[i] as i128 } else { 0 }).collect())
            .collect();
        let inv = if k > 0 { smith_normal_form(&m)?.invariants() } else { Vec::new() };
        Ok(FgAbelianGroup {
            free_rank: self.free_rank,
            torsion: inv.into_iter().filter(|&d| d != 1).map(|d| d as u64).collect(),
        })
    }

    pub fn is_canonical(&self) -> bool {
        self.torsion.iter().all(|&m| m > 1) && self.torsion.windows(2).all(|w| w[1] % w[0] == 0)
    }

    pub fn isomorphic(&self, other: &Self) -> Result<bool> {
        Ok(self.canonical()? == other.canonical()?)
    }

    /// Multiplicity of each prime power cyclic factor.
    pub fn primary_decomposition(&self) -> BTreeMap<u64, usize> {
        let mut out = BTreeMap::new();
        for &m in &self.torsion {
            let mut m = m;
            let mut p = 2;
            while m > 1 {
                if m % p == 0 {
                    let mut q = 1;
                    while m % p == 0 {
                        m /= p;
                        q *= p;
                    }
                    *out.entry(q).or_insert(0) += 1;
                }
                p += 1;
            }
        }
        out
    }

    /// Human-readable form such as `Z^2 x Z2^3` or `Z2^3 x Z3^2`.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for (q, c) in self.primary_decomposition() {
            parts.push(if c == 1 { format!("Z{q}") } else { format!("Z{q}^{c}") });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" x ")
        }
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Homomorphism given by the images of the coordinate generators.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub source: FgAbelianGroup,
    pub target: FgAbelianGroup,
    pub images: Vec<GroupElement>,
}

impl GroupHom {
    pub fn new(source: FgAbelianGroup, target: FgAbelianGroup, images: Vec<GroupElement>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::Dimension("one image per generator".into()));
        }
        for (i, img) in images.iter().enumerate() {
            let g = target.normalize(img)?;
            // A torsion generator of order m must map to an element killed by m.
            if i >= source.free_rank() {
                let m = source.torsion()[i - source.free_rank()] as i64;
                let mg: Vec<i64> = g.iter().map(|x| x * m).collect();
                if !target.is_zero(&mg) {
                    return Err(Error::InvalidGrading("map is not well defined".into()));
                }
            }
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn apply(&self, g: &[i64]) -> Result<GroupElement> {
        let g = self.source.normalize(g)?;
        let mut out = self.target.zero();
        for (x, img) in g.iter().zip(&self.images) {
            let t: Vec<i64> = img.iter().map(|y| x * y).collect();
            out = self.target.add(&out, &t)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        let g = FgAbelianGroup::new(0, vec![2, 2, 2, 3, 3]).unwrap();
        assert_eq!(g.canonical().unwrap().torsion(), &[2, 6, 6]);
        assert_eq!(g.describe(), "Z2^3 x Z3^2");
        assert_eq!(g.canonical().unwrap().describe(), "Z2^3 x Z3^2");
        let h = FgAbelianGroup::new(2, vec![4, 1, 2]).unwrap();
        assert_eq!(h.canonical().unwrap().torsion(), &[2, 4]);
        assert!(h.canonical().unwrap().is_canonical());
        assert!(!h.is_canonical());
    }

    #[test]
    fn arithmetic_and_orders() {
        let g = FgAbelianGroup::new(1, vec![2, 3]).unwrap();
        let a = vec![0, 1, 2];
        assert_eq!(g.add(&a, &a).unwrap(), vec![0, 0, 1]);
        assert_eq!(g.order(&a), Some(6));
        assert_eq!(g.order(&[1, 0, 0]), None);
        assert!(g.is_zero(&[0, 2, 3]));
    }

    #[test]
    fn homomorphisms() {
        let z = FgAbelianGroup::free(1);
        let z2 = FgAbelianGroup::elementary(2, 1);
        let h = GroupHom::new(z.clone(), z2.clone(), vec![vec![1]]).unwrap();
        assert_eq!(h.apply(&[5]).unwrap(), vec![1]);
        let z3 = FgAbelianGroup::elementary(3, 1);
        assert!(GroupHom::new(z2, z3, vec![vec![1]]).is_err());
    }
}
