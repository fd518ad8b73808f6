//! gl(V) ⊕ ∧³V ⊕ ∧³V* ⊕ ∧⁶V ⊕ ∧⁶V* with dim V = 6, and its real form with
//! L_0 = su(5,1) ⊕ R·I6.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{restrict_operator, Part};
use crate::error::{Error, Result};
use crate::exactla::{kernel, simultaneous_eigensplit, solve, unit_vec, Echelon, ExactMatrix};
use crate::gradings::{Component, FgAbelianGroup, GradedDecomposition};
use crate::scalar::{frac, int, CycScalar, Rational};
use crate::structalg::{change_basis, AlgebraKind, AlgebraTable, SparseVec};

const GL: usize = 0;
const P3: usize = 36;
const M3: usize = 56;
const Z: usize = 76;
const ZS: usize = 77;
const N: usize = 78;

fn gl(a: usize, b: usize) -> usize {
    GL + a * 6 + b
}

type Triple = [usize; 3];

fn triples() -> Vec<Triple> {
    let mut out = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                out.push([i, j, k]);
            }
        }
    }
    out
}

fn perm_sign(v: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                s = -s;
            }
            if v[i] == v[j] {
                return 0;
            }
        }
    }
    s
}

/// Sign of e_I ∧ e_J against e_1 ∧ … ∧ e_6; zero if they overlap.
fn wedge_sign(i: &Triple, j: &Triple) -> i64 {
    let v: Vec<usize> = i.iter().chain(j).copied().collect();
    perm_sign(&v)
}

fn complement(i: &Triple) -> Triple {
    let r: Vec<usize> = (0..6).filter(|x| !i.contains(x)).collect();
    [r[0], r[1], r[2]]
}

/// Replaces the index `from` of I by `to`. Gives the sign and the sorted triple.
fn substitute(i: &Triple, from: usize, to: usize) -> Option<(i64, Triple)> {
    let p = i.iter().position(|&x| x == from)?;
    let mut l = *i;
    l[p] = to;
    let s = perm_sign(&l);
    if s == 0 {
        return None;
    }
    l.sort();
    Some((s, l))
}

/// The bracket scales. [e_I, e_J] = λ1 e_I∧e_J, [e*_I, e*_J] = λ2 e*_I∧e*_J,
/// [z, e*_I] = λ3 ⋆, [z*, e_I] = λ4 ⋆, [e_I, e*_J] = λ5 M + ν tr(M) I,
/// [z, z*] = λ6 I.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagScales {
    pub l1: Rational,
    pub l2: Rational,
    pub l3: Rational,
    pub l4: Rational,
    pub l5: Rational,
    pub nu: Rational,
    pub l6: Rational,
}

impl FlagScales {
    fn from_vec(v: &[Rational]) -> Self {
        FlagScales {
            l1: v[0].clone(),
            l2: v[1].clone(),
            l3: v[2].clone(),
            l4: v[3].clone(),
            l5: v[4].clone(),
            nu: v[5].clone(),
            l6: v[6].clone(),
        }
    }
}

fn complex_table(p: &FlagScales) -> Result<AlgebraTable> {
    let t3 = triples();
    let tidx: BTreeMap<Triple, usize> = t3.iter().enumerate().map(|(i, t)| (*t, i)).collect();
    let mut prod: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); N * N];
    let mut put = |i: usize, j: usize, k: usize, c: Rational| {
        if c.is_zero() {
            return;
        }
        *prod[i * N + j].entry(k).or_insert_with(Rational::zero) += &c;
        *prod[j * N + i].entry(k).or_insert_with(Rational::zero) -= &c;
    };
    let one = Rational::one;
    for a in 0..6 {
        for b in 0..6 {
            for c in 0..6 {
                for d in 0..6 {
                    if (a, b) >= (c, d) {
                        continue;
                    }
                    if b == c {
                        put(gl(a, b), gl(c, d), gl(a, d), one());
                    }
                    if d == a {
                        put(gl(a, b), gl(c, d), gl(c, b), -one());
                    }
                }
            }
        }
    }
    for a in 0..6 {
        for b in 0..6 {
            for (k, i) in t3.iter().enumerate() {
                // E_ab e_b = e_a and E_ab e*_a = −e*_b
                if let Some((s, j)) = substitute(i, b, a) {
                    put(gl(a, b), P3 + k, P3 + tidx[&j], Rational::from_int(s));
                }
                if let Some((s, j)) = substitute(i, a, b) {
                    put(gl(a, b), M3 + k, M3 + tidx[&j], Rational::from_int(-s));
                }
            }
            if a == b {
                put(gl(a, a), Z, Z, one());
                put(gl(a, a), ZS, ZS, -one());
            }
        }
    }
    for (ki, i) in t3.iter().enumerate() {
        for (kj, j) in t3.iter().enumerate().skip(ki + 1) {
            let s = wedge_sign(i, j);
            if s != 0 {
                put(P3 + ki, P3 + kj, Z, &p.l1 * &Rational::from_int(s));
                put(M3 + ki, M3 + kj, ZS, &p.l2 * &Rational::from_int(s));
            }
        }
        let c = complement(i);
        let s = Rational::from_int(wedge_sign(i, &c));
        put(Z, M3 + ki, P3 + tidx[&c], &p.l3 * &s);
        put(ZS, P3 + ki, M3 + tidx[&c], &p.l4 * &s);
    }
    for (ki, i) in t3.iter().enumerate() {
        for (kj, j) in t3.iter().enumerate() {
            // M = Σ ±E_ba over E_ab e_I = ±e_J
            let mut m = [[0i64; 6]; 6];
            for a in 0..6 {
                for b in 0..6 {
                    if let Some((s, t)) = substitute(i, b, a) {
                        if t == *j {
                            m[b][a] += s;
                        }
                    }
                }
            }
            let tr: i64 = (0..6).map(|x| m[x][x]).sum();
            for x in 0..6 {
                for y in 0..6 {
                    let mut c = &p.l5 * &Rational::from_int(m[x][y]);
                    if x == y {
                        c = &c + &(&p.nu * &Rational::from_int(tr));
                    }
                    put(P3 + ki, M3 + kj, gl(x, y), c);
                }
            }
        }
    }
    for x in 0..6 {
        put(Z, ZS, gl(x, x), p.l6.clone());
    }
    let names = flag_names();
    let sparse: Vec<SparseVec> = prod
        .into_iter()
        .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, CycScalar::from_rational(c))).collect())
        .collect();
    AlgebraTable::from_sparse(names, AlgebraKind::Lie, sparse)
}

fn flag_names() -> Vec<String> {
    let t3 = triples();
    let lab = |t: &Triple| t.iter().map(|x| (x + 1).to_string()).collect::<String>();
    let mut names: Vec<String> = (0..36).map(|i| format!("E{}{}", i / 6 + 1, i % 6 + 1)).collect();
    names.extend(t3.iter().map(|t| format!("e{}", lab(t))));
    names.extend(t3.iter().map(|t| format!("e*{}", lab(t))));
    names.push("z".into());
    names.push("z*".into());
    names
}

/// Jacobi expressions of basis triples, concatenated.
fn jacobi_residual(t: &AlgebraTable, list: &[(usize, usize, usize)]) -> Vec<CycScalar> {
    let mut out = Vec::with_capacity(list.len() * N);
    for &(i, j, k) in list {
        let b = |x: usize| vec![(x, CycScalar::one())];
        let ij = t.basis_product(i, j).clone();
        let jk = t.basis_product(j, k).clone();
        let ki = t.basis_product(k, i).clone();
        let a = t.mul_sparse(&ij, &b(k));
        let bb = t.mul_sparse(&jk, &b(i));
        let c = t.mul_sparse(&ki, &b(j));
        out.extend((0..N).map(|m| &(&a[m] + &bb[m]) + &c[m]));
    }
    out
}

/// Solves for the scales listed in `unknowns`, given the others, by requiring
/// the Jacobi identity on `list`. The residual is affine in the unknowns.
fn solve_scales(base: &[Rational], unknowns: &[usize], list: &[(usize, usize, usize)]) -> Result<Vec<Rational>> {
    let build = |v: &[Rational]| complex_table(&FlagScales::from_vec(v));
    let r0 = jacobi_residual(&build(base)?, list);
    let mut cols = Vec::new();
    for &u in unknowns {
        let mut v = base.to_vec();
        v[u] = &v[u] + &Rational::one();
        let r = jacobi_residual(&build(&v)?, list);
        cols.push(r.iter().zip(&r0).map(|(a, b)| a - b).collect::<Vec<_>>());
    }
    // Keep a set of rows on which [A | −r0] has full rank.
    let k = unknowns.len();
    let mut e = Echelon::new(k + 1);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for m in 0..r0.len() {
        let row: Vec<CycScalar> = cols.iter().map(|c| c[m].clone()).chain([-&r0[m]]).collect();
        if e.insert(&row) {
            rows.push(row[..k].to_vec());
            rhs.push(row[k].clone());
        }
    }
    let sol = solve(&ExactMatrix::from_rows(rows)?, &rhs)?
        .ok_or_else(|| Error::Check("Jacobi has no solution for these scales".into()))?;
    let mut out = base.to_vec();
    for (&u, s) in unknowns.iter().zip(sol) {
        out[u] = s.as_rational().cloned().ok_or_else(|| Error::Check("irrational scale".into()))?;
    }
    if !is_zero(&jacobi_residual(&build(&out)?, list)) {
        return Err(Error::Check("Jacobi still fails after solving".into()));
    }
    Ok(out)
}

fn is_zero(v: &[CycScalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Fixes λ1 = λ2 = λ5 = 1 and solves the remaining scales from Jacobi.
pub fn solve_flag_scales() -> Result<FlagScales> {
    let z = Rational::zero;
    let o = Rational::one;
    let base = vec![o(), o(), z(), z(), o(), z(), z()];
    let mut ppm = Vec::new();
    let mut mmp = Vec::new();
    for i in 0..20 {
        for j in i + 1..20 {
            for k in 0..20 {
                ppm.push((P3 + i, P3 + j, M3 + k));
                mmp.push((M3 + i, M3 + j, P3 + k));
            }
        }
    }
    let s1 = solve_scales(&base, &[2, 5], &ppm)?;
    let s2 = solve_scales(&s1, &[3], &mmp)?;
    let zzp: Vec<_> = (0..20).map(|k| (Z, ZS, P3 + k)).collect();
    let s3 = solve_scales(&s2, &[6], &zzp)?;
    Ok(FlagScales::from_vec(&s3))
}

const SIGNS: [i64; 6] = [1, 1, 1, 1, 1, -1];

/// The complex algebra S, its real form L, and the automorphisms used for gradings.
#[derive(Clone, Debug)]
pub struct FlagModel {
    pub scales: FlagScales,
    pub complex: AlgebraTable,
    /// Basis of L in S coordinates, ordered by degree −2, …, 2.
    pub basis: Vec<Vec<CycScalar>>,
    coords: Echelon,
    table: AlgebraTable,
}

fn real_basis() -> (Vec<Vec<CycScalar>>, Vec<String>) {
    let s = SIGNS;
    let i = CycScalar::i();
    let t3 = triples();
    let tidx: BTreeMap<Triple, usize> = t3.iter().enumerate().map(|(k, t)| (*t, k)).collect();
    let lab = |t: &Triple| t.iter().map(|x| (x + 1).to_string()).collect::<String>();
    let v = |entries: &[(usize, CycScalar)]| {
        let mut out = vec![CycScalar::zero(); N];
        for (k, c) in entries {
            out[*k] = c.clone();
        }
        out
    };
    let mut out = Vec::new();
    let mut names = Vec::new();
    let odd = |off: usize, star: &str, out: &mut Vec<Vec<CycScalar>>, names: &mut Vec<String>| {
        for t in t3.iter().filter(|t| t[0] == 0) {
            let c = complement(t);
            let sg = wedge_sign(t, &c) * s[t[0]] * s[t[1]] * s[t[2]];
            let (a, b) = (off + tidx[t], off + tidx[&c]);
            out.push(v(&[(a, int(1)), (b, int(-sg))]));
            out.push(v(&[(a, i.clone()), (b, &i * &int(sg))]));
            names.push(format!("e{star}{}-e{star}{}", lab(t), lab(&c)));
            names.push(format!("i(e{star}{}+e{star}{})", lab(t), lab(&c)));
        }
    };
    out.push(v(&[(ZS, i.clone())]));
    names.push("iz*".into());
    odd(M3, "*", &mut out, &mut names);
    for a in 0..6 {
        for b in a + 1..6 {
            let c = s[a] * s[b];
            out.push(v(&[(gl(a, b), int(1)), (gl(b, a), int(-c))]));
            out.push(v(&[(gl(a, b), i.clone()), (gl(b, a), &i * &int(c))]));
            names.push(format!("E{}{}-E{}{}", a + 1, b + 1, b + 1, a + 1));
            names.push(format!("i(E{}{}+E{}{})", a + 1, b + 1, b + 1, a + 1));
        }
    }
    for a in 0..5 {
        out.push(v(&[(gl(a, a), i.clone()), (gl(a + 1, a + 1), -&i)]));
        names.push(format!("i(E{}{}-E{}{})", a + 1, a + 1, a + 2, a + 2));
    }
    out.push(v(&(0..6).map(|a| (gl(a, a), int(1))).collect::<Vec<_>>()));
    names.push("I6".into());
    odd(P3, "", &mut out, &mut names);
    out.push(v(&[(Z, i.clone())]));
    names.push("iz".into());
    (out, names)
}

pub fn build_flag() -> Result<FlagModel> {
    let scales = solve_flag_scales()?;
    let complex = complex_table(&scales)?;
    let (basis, names) = real_basis();
    let coords = Echelon::from_basis(N, &basis)?;
    let table = change_basis(&complex, &basis, names, true)?;
    Ok(FlagModel {
        scales,
        complex,
        basis,
        coords,
        table,
    })
}

/// Sample identities of ad(L_{−1}) on L_1.
#[derive(Clone, Debug, Serialize)]
pub struct FlagSanity {
    /// [e*_I − c e*_J, e_I − c e_J] = −I6/3
    pub partner_bracket_central: bool,
    pub partner_image_in_cartan: bool,
}

impl FlagModel {
    pub fn table(&self) -> &AlgebraTable {
        &self.table
    }

    /// L_{−2}, L_{−1}, L_0, L_1, L_2.
    pub fn parts(&self) -> Vec<Part> {
        vec![
            Part::new("L-2", 0, 1),
            Part::new("L-1", 1, 20),
            Part::new("L0", 21, 36),
            Part::new("L1", 57, 20),
            Part::new("L2", 77, 1),
        ]
    }

    pub fn degree_of(&self, i: usize) -> i64 {
        match i {
            0 => -2,
            1..=20 => -1,
            21..=56 => 0,
            57..=76 => 1,
            _ => 2,
        }
    }

    /// Coordinates in L of a vector of S lying in L.
    pub fn coords_of(&self, v: &[CycScalar]) -> Result<Vec<CycScalar>> {
        let c = self.coords.coords(v)?;
        if c.iter().any(|x| !x.is_real()) {
            return Err(Error::NotInSubspace);
        }
        Ok(c)
    }

    /// Matrix on L of an operator of S preserving L.
    pub fn restrict(&self, op: &ExactMatrix) -> Result<ExactMatrix> {
        let m = restrict_operator(op, &self.basis)?;
        if !m.is_real() {
            return Err(Error::Check("operator does not preserve L".into()));
        }
        Ok(m)
    }

    /// θ on S.
    pub fn theta(&self) -> ExactMatrix {
        let t3 = triples();
        let tidx: BTreeMap<Triple, usize> = t3.iter().enumerate().map(|(k, t)| (*t, k)).collect();
        let i = CycScalar::i();
        let mut m = ExactMatrix::zeros(N, N);
        let third = frac(1, 3);
        for a in 0..6 {
            for b in 0..6 {
                // θ(s I + x) = s I − xᵀ
                m[(gl(b, a), gl(a, b))] = int(-1);
                if a == b {
                    for c in 0..6 {
                        m[(gl(c, c), gl(a, a))] = &m[(gl(c, c), gl(a, a))] + &third;
                    }
                }
            }
        }
        for (k, t) in t3.iter().enumerate() {
            let c = complement(t);
            let s = int(wedge_sign(t, &c));
            m[(P3 + tidx[&c], P3 + k)] = &i * &s;
            m[(M3 + tidx[&c], M3 + k)] = -&(&i * &s);
        }
        m[(Z, Z)] = int(-1);
        m[(ZS, ZS)] = int(-1);
        m
    }

    /// φ_A on S for A = diag(a), a_i = ±1.
    pub fn phi_diag(&self, a: [i64; 6]) -> Result<ExactMatrix> {
        if a.iter().any(|&x| x != 1 && x != -1) {
            return Err(Error::Check("diagonal entries must be ±1".into()));
        }
        let t3 = triples();
        let mut d = vec![CycScalar::zero(); N];
        for x in 0..6 {
            for y in 0..6 {
                d[gl(x, y)] = int(a[x] * a[y]);
            }
        }
        for (k, t) in t3.iter().enumerate() {
            let p = a[t[0]] * a[t[1]] * a[t[2]];
            d[P3 + k] = int(p);
            d[M3 + k] = int(p);
        }
        let all: i64 = a.iter().product();
        d[Z] = int(all);
        d[ZS] = int(all);
        Ok(ExactMatrix::diagonal(&d))
    }

    /// F_1, …, F_4.
    pub fn f_ops(&self) -> Result<Vec<ExactMatrix>> {
        (1..=4)
            .map(|j| {
                let mut a = [1; 6];
                a[0] = -1;
                a[j] = -1;
                self.phi_diag(a)
            })
            .collect()
    }

    /// E = i(E56 − E65) as a vector of S.
    pub fn e_element(&self) -> Vec<CycScalar> {
        let mut v = vec![CycScalar::zero(); N];
        v[gl(4, 5)] = CycScalar::i();
        v[gl(5, 4)] = -CycScalar::i();
        v
    }

    /// ⅓ ad(I6) on S: the Z-degree operator.
    pub fn degree_operator(&self) -> ExactMatrix {
        let mut v = vec![CycScalar::zero(); N];
        for a in 0..6 {
            v[gl(a, a)] = frac(1, 3);
        }
        self.complex.ad(&v)
    }

    /// The antilinear involution of ∧³V whose fixed points are L_1, on the
    /// real basis e_I, i e_I.
    pub fn wedge_involution(&self) -> ExactMatrix {
        let t3 = triples();
        let tidx: BTreeMap<Triple, usize> = t3.iter().enumerate().map(|(k, t)| (*t, k)).collect();
        let mut m = ExactMatrix::zeros(40, 40);
        for (k, t) in t3.iter().enumerate() {
            let c = complement(t);
            let st = SIGNS[t[0]] * SIGNS[t[1]] * SIGNS[t[2]];
            let coef = int(st * wedge_sign(&c, t));
            let j = tidx[&c];
            m[(j, k)] = coef.clone();
            m[(20 + j, 20 + k)] = -&coef;
        }
        m
    }

    /// Dimensions of the ±1 eigenspaces of the involution, and whether the
    /// +1 eigenspace is the L_1 part of the basis.
    pub fn wedge_involution_eigenspaces(&self) -> Result<(usize, usize, bool)> {
        let t = self.wedge_involution();
        let id = ExactMatrix::identity(40);
        let plus = kernel(&t.sub(&id)?);
        let minus = kernel(&t.add(&id)?);
        let mut e = Echelon::new(40);
        for v in &plus {
            e.insert(v);
        }
        let l1 = self.parts()[3].clone();
        let mut same = true;
        for b in l1.range() {
            let w = &self.basis[b];
            let half = frac(1, 2);
            let re = |z: &CycScalar| &(z + &z.conj()) * &half;
            let im = |z: &CycScalar| &(&(z - &z.conj()) * &half) * &(-&CycScalar::i());
            let real: Vec<CycScalar> = (0..20)
                .map(|k| re(&w[P3 + k]))
                .chain((0..20).map(|k| im(&w[P3 + k])))
                .collect();
            if !e.contains(&real) {
                same = false;
            }
        }
        Ok((plus.len(), minus.len(), same))
    }

    /// ad(e*_I − c e*_J) sends e_I − c e_J to −I6/3 and i(e_I + c e_J) into i·(diagonal).
    pub fn sanity(&self) -> Result<FlagSanity> {
        let l1 = self.parts()[3].clone();
        let lm1 = self.parts()[1].clone();
        let mut central = true;
        let mut cartan = true;
        for p in 0..10 {
            let f = &self.basis[lm1.start + 2 * p];
            let u = &self.basis[l1.start + 2 * p];
            let w = &self.basis[l1.start + 2 * p + 1];
            let mut third = vec![CycScalar::zero(); N];
            for a in 0..6 {
                third[gl(a, a)] = frac(-1, 3);
            }
            if self.complex.mul(f, u) != third {
                central = false;
            }
            let img = self.complex.mul(f, w);
            for (k, x) in img.iter().enumerate() {
                let diag = k < 36 && k / 6 == k % 6;
                if !x.is_zero() && !diag {
                    cartan = false;
                }
            }
        }
        Ok(FlagSanity {
            partner_bracket_central: central,
            partner_image_in_cartan: cartan,
        })
    }

    fn grading_from_ops(
        &self,
        ops: Vec<ExactMatrix>,
        eigen: Vec<Vec<CycScalar>>,
        integer_slots: usize,
        group: FgAbelianGroup,
    ) -> Result<GradedDecomposition> {
        let split = simultaneous_eigensplit(&ops, &eigen)?;
        let comps = split
            .into_iter()
            .map(|sp| Component {
                degree: sp
                    .eigenvalues
                    .iter()
                    .enumerate()
                    .map(|(k, e)| {
                        if k < integer_slots {
                            e.as_rational().and_then(|r| r.to_i64()).expect("integer eigenvalue")
                        } else {
                            i64::from(!e.is_one())
                        }
                    })
                    .collect(),
                basis: sp.basis,
            })
            .collect();
        GradedDecomposition::from_components(group, self.table.dim(), comps)
    }

    /// Z × Z2⁵: the degree and the eigenvalues of F_1..F_4, θ.
    pub fn gamma12(&self) -> Result<GradedDecomposition> {
        let mut ops = vec![self.restrict(&self.degree_operator())?];
        for f in self.f_ops()? {
            ops.push(self.restrict(&f)?);
        }
        ops.push(self.restrict(&self.theta())?);
        let zs: Vec<CycScalar> = (-2..=2).map(int).collect();
        let pm = vec![int(1), int(-1)];
        let mut eig = vec![zs];
        eig.extend(std::iter::repeat_n(pm, 5));
        let group = FgAbelianGroup::free(1).product(&FgAbelianGroup::elementary(2, 5));
        self.grading_from_ops(ops, eig, 1, group)
    }

    /// Z² × Z2³: eigenvalues of ad E, the degree, and θ, F_1, F_2.
    pub fn gamma10(&self) -> Result<GradedDecomposition> {
        let fs = self.f_ops()?;
        let ops = vec![
            self.restrict(&self.complex.ad(&self.e_element()))?,
            self.restrict(&self.degree_operator())?,
            self.restrict(&self.theta())?,
            self.restrict(&fs[0])?,
            self.restrict(&fs[1])?,
        ];
        let zs: Vec<CycScalar> = (-2..=2).map(int).collect();
        let pm = vec![int(1), int(-1)];
        let eig = vec![zs.clone(), zs, pm.clone(), pm.clone(), pm];
        let group = FgAbelianGroup::free(2).product(&FgAbelianGroup::elementary(2, 3));
        self.grading_from_ops(ops, eig, 2, group)
    }

    /// The Z-grading by degree, on L.
    pub fn z_grading(&self) -> Result<GradedDecomposition> {
        let degs: Vec<Vec<i64>> = (0..self.table.dim()).map(|i| vec![self.degree_of(i)]).collect();
        GradedDecomposition::from_basis_degrees(FgAbelianGroup::free(1), &degs)
    }

    /// Eigenvalues of ad E on L with multiplicities.
    pub fn ad_e_spectrum(&self) -> Result<Vec<(i64, usize)>> {
        let m = self.restrict(&self.complex.ad(&self.e_element()))?;
        let zs: Vec<CycScalar> = (-2..=2).map(int).collect();
        let split = simultaneous_eigensplit(&[m], &[zs])?;
        Ok(split
            .into_iter()
            .map(|s| (s.eigenvalues[0].as_rational().and_then(|r| r.to_i64()).expect("int"), s.basis.len()))
            .collect())
    }

    pub fn unit(&self, i: usize) -> Vec<CycScalar> {
        unit_vec(self.table.dim(), i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge_sign(&[0, 1, 2], &[3, 4, 5]), 1);
        assert_eq!(wedge_sign(&[3, 4, 5], &[0, 1, 2]), -1);
        assert_eq!(wedge_sign(&[0, 1, 2], &[2, 3, 4]), 0);
        assert_eq!(complement(&[1, 3, 5]), [0, 2, 4]);
    }

    #[test]
    fn substitution_sorts_with_sign() {
        assert_eq!(substitute(&[0, 1, 2], 0, 3), Some((1, [1, 2, 3])));
        assert_eq!(substitute(&[0, 1, 2], 1, 3), Some((-1, [0, 2, 3])));
        assert_eq!(substitute(&[0, 1, 2], 0, 1), None);
        assert_eq!(substitute(&[0, 1, 2], 4, 5), None);
        assert_eq!(triples().len(), 20);
    }

    #[test]
    fn gl_part_is_gl6() {
        let t = complex_table(&solve_flag_scales().unwrap()).unwrap();
        // [E12, E21] = E11 − E22
        let v = t.basis_product(gl(0, 1), gl(1, 0));
        assert_eq!(v, &vec![(gl(0, 0), CycScalar::one()), (gl(1, 1), -CycScalar::one())]);
    }

    #[test]
    fn real_basis_has_78_vectors() {
        let (b, names) = real_basis();
        assert_eq!(b.len(), 78);
        assert_eq!(names.len(), 78);
        assert!(Echelon::from_basis(N, &b).is_ok());
    }
}
