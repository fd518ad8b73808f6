//! Batch verification: one function per acceptance criterion, and the
//! aggregate report written by the command-line tool.

use serde::Serialize;
use serde_json::Value;

use crate::composition::{CompositionAlgebra, CompositionKind};
use crate::error::Result;
use crate::exactla::{unit_vec, ExactMatrix};
use crate::gradings::{check_grading, verify_named_grading, GradingName, Models, NamedGradingReport};
use crate::jordan::{H3Kind, JordanH3};
use crate::liemodels::{build_albert, build_tits, corollary_basis_report, Part};
use crate::rootsys::{ChevalleyBasisE6, RootSystemE6, SIGN_CONVENTION};
use crate::scalar::{CycScalar, Rational};
use crate::sp8::sp8_lemma;
use crate::structalg::{
    center, check_jordan, check_lie, derived_algebra, derivations, is_automorphism, killing_form, killing_ratio,
    killing_signature, proportionality, twist_z2, AlgebraTable,
};

/// The signature shared by the four models.
pub const TARGET_SIGNATURE: i64 = -14;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub measured: Value,
    pub expected: Value,
}

fn check(id: &str, measured: impl Serialize, expected: impl Serialize) -> Check {
    let measured = serde_json::to_value(measured).expect("serializable");
    let expected = serde_json::to_value(expected).expect("serializable");
    Check {
        id: id.into(),
        passed: measured == expected,
        measured,
        expected,
    }
}

fn flag(id: &str, ok: bool) -> Check {
    check(id, ok, true)
}

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub number: u8,
    pub title: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Criterion {
    fn new(number: u8, title: &str, checks: Vec<Check>) -> Self {
        Criterion {
            number,
            title: title.into(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    /// Ids of the failed checks.
    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.id.as_str()).collect()
    }

    pub fn summary_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("criterion {:>2} {status}  {}", self.number, self.title);
        let f = self.failures();
        if !f.is_empty() {
            s.push_str(&format!("  (failed: {})", f.join(", ")));
        }
        s
    }
}

fn part_basis(n: usize, p: &Part) -> Vec<Vec<CycScalar>> {
    p.basis(n)
}

pub fn criterion_1() -> Result<Criterion> {
    let o = CompositionAlgebra::octonions();
    let der = derivations(o.table())?;
    Ok(Criterion::new(
        1,
        "octonions: composition, alternativity, Der(O) = g2 compact",
        vec![
            flag("norm multiplicative on basis pairs", o.norm_multiplicative_on_basis()),
            flag("norm multiplicative, polarized", o.norm_multiplicative_polar()),
            flag("alternative on basis triples", o.alternative_on_basis()),
            check("dim Der(O)", der.dim(), 14),
            check("signature Der(O)", killing_signature(&der.table)?, -14),
        ],
    ))
}

pub fn criterion_2() -> Result<Criterion> {
    let mut checks = Vec::new();
    for kind in [H3Kind::AlbertCompact, H3Kind::Albert, H3Kind::Complex, H3Kind::SplitComplex] {
        let j = JordanH3::build(kind)?;
        let r = check_jordan(j.table());
        checks.push(flag(&format!("Jordan identity {kind:?}"), r.passed));
    }
    let j = JordanH3::build(H3Kind::Albert)?;
    let j0 = j.traceless_basis()?;
    checks.push(check("trace form J0 (Albert)", j.trace_form_on(&j0)?.signature()?, -6));
    checks.push(check("trace form J (Albert, informational)", j.trace_form()?.signature()?, -5));
    let m = JordanH3::build(H3Kind::Complex)?;
    let m0 = m.traceless_basis()?;
    checks.push(check("trace form M0", m.trace_form_on(&m0)?.signature()?, 0));
    let jc = JordanH3::build(H3Kind::AlbertCompact)?;
    checks.push(check("trace form Jc", jc.trace_form()?.signature()?, 27));
    Ok(Criterion::new(2, "Jordan algebras and trace forms", checks))
}

fn model_checks(name: &str, l: &AlgebraTable, sig: i64, checks: &mut Vec<Check>) -> Result<()> {
    checks.push(flag(&format!("Jacobi {name}"), check_lie(l).passed));
    checks.push(check(&format!("dim {name}"), l.dim(), 78));
    checks.push(check(&format!("signature {name}"), killing_signature(l)?, sig));
    Ok(())
}

pub fn criterion_3(models: &Models) -> Result<Criterion> {
    let mut checks = Vec::new();
    model_checks("albert eps=-1", models.albert()?.table(), TARGET_SIGNATURE, &mut checks)?;
    model_checks("tits O", models.tits()?.table(), TARGET_SIGNATURE, &mut checks)?;
    model_checks("flag", models.flag()?.table(), TARGET_SIGNATURE, &mut checks)?;
    model_checks("chevalley t(-1,1,1,1,1,1)", models.chevalley()?.table(), TARGET_SIGNATURE, &mut checks)?;
    model_checks("albert eps=+1", build_albert(1)?.table(), -26, &mut checks)?;
    Ok(Criterion::new(3, "four models: Jacobi, dimension, signature", checks))
}

/// κ(a⊗x, b⊗y) against n(a,b)·tr(x·y) on the tensor part of the Tits model.
pub fn tits_tensor_constant(models: &Models) -> Result<Option<Rational>> {
    let t = models.tits()?;
    let l = t.table();
    let g = killing_form(l)?;
    let k = t.m0.len();
    let off = t.parts()[1].start;
    let o = &t.octonions;
    let nn = 7 * k;
    let mut kappa = ExactMatrix::zeros(nn, nn);
    let mut model = ExactMatrix::zeros(nn, nn);
    for a in 0..7 {
        for b in 0..7 {
            let nab = o.norm_bilinear(&o.basis(a + 1), &o.basis(b + 1));
            for x in 0..k {
                for y in 0..k {
                    let (p, q) = (a * k + x, b * k + y);
                    kappa[(p, q)] = g.gram()[(off + p, off + q)].clone();
                    let tr = t.m.trace(&t.m.mul(&t.m0[x], &t.m0[y]))?;
                    model[(p, q)] = &nab * &tr;
                }
            }
        }
    }
    Ok(proportionality(&kappa, &model).ok())
}

pub fn criterion_4(models: &Models) -> Result<Criterion> {
    let t = models.tits()?;
    let l = t.table();
    let n = l.dim();
    let parts = t.parts();
    let r_o = killing_ratio(l, &part_basis(n, &parts[0]))?;
    let r_m = killing_ratio(l, &part_basis(n, &parts[2]))?;
    let c = tits_tensor_constant(models)?;
    let g = killing_form(l)?;
    let mut orth = true;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for p in parts[i].range() {
                for q in parts[j].range() {
                    if !g.gram()[(p, q)].is_zero() {
                        orth = false;
                    }
                }
            }
        }
    }
    Ok(Criterion::new(
        4,
        "Killing form of the Tits model",
        vec![
            check("ratio on Der(O)", r_o.to_string(), "3"),
            check("ratio on Der(M)", r_m.to_string(), "8"),
            check(
                "tensor constant kappa/(n(a,b) tr(xy))",
                c.map(|r| r.to_string()).unwrap_or_else(|| "not proportional".into()),
                "-60",
            ),
            flag("summands mutually orthogonal", orth),
        ],
    ))
}

pub fn criterion_5(models: &Models) -> Result<Criterion> {
    let a = models.albert()?;
    let l = a.table();
    let odd = a.odd();
    let lt = twist_z2(l, &odd, -1)?;
    let s = killing_signature(l)?;
    let st = killing_signature(&lt)?;
    let even: Vec<Vec<CycScalar>> = (0..l.dim()).filter(|&i| !odd[i]).map(|i| unit_vec(l.dim(), i)).collect();
    let s0 = killing_form(l)?.restrict(&even)?.signature()?;
    let plus = build_albert(1)?;
    let g = killing_form(l)?;
    let mut cross_zero = true;
    for i in (0..l.dim()).filter(|&i| !odd[i]) {
        for j in (0..l.dim()).filter(|&j| odd[j]) {
            if !g.gram()[(i, j)].is_zero() {
                cross_zero = false;
            }
        }
    }
    Ok(Criterion::new(
        5,
        "twist identity sign(L) + sign(L^-1) = 2 sign(L_even)",
        vec![
            check("sign(L)", s, -14),
            check("sign(L^-1)", st, -26),
            check("sign(L_even)", s0, -20),
            check("identity", s + st, 2 * s0),
            flag("L^-1 equals the eps=+1 model", same_products(&lt, plus.table())),
            flag("kappa(L_even, L_odd) = 0", cross_zero),
        ],
    ))
}

fn same_products(a: &AlgebraTable, b: &AlgebraTable) -> bool {
    a.dim() == b.dim()
        && (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.basis_product(i, j) == b.basis_product(i, j)))
}

/// Named grading reports, in the order of the reference table.
pub fn named_grading_reports(models: &Models) -> Result<Vec<NamedGradingReport>> {
    GradingName::ALL
        .iter()
        .map(|&n| verify_named_grading(n, models, Some(TARGET_SIGNATURE)).map(|(_, r)| r))
        .collect()
}

pub fn criterion_6(reports: &[NamedGradingReport]) -> Criterion {
    let mut checks = Vec::new();
    for r in reports {
        checks.push(flag(&format!("{} is a grading", r.name), r.check.passed() && r.total_dim == 78));
        checks.push(check(&format!("{} type", r.name), &r.type_vector, &r.expected.type_vector));
        checks.push(check(&format!("{} universal group", r.name), &r.universal_group, &r.expected.group));
        checks.push(flag(&format!("{} isotropic components", r.name), r.isotropic));
    }
    Criterion::new(6, "six fine gradings: types and universal groups", checks)
}

pub fn criterion_7(reports: &[NamedGradingReport]) -> Criterion {
    let mut checks = Vec::new();
    for r in reports {
        checks.push(check(&format!("{} interval", r.name), &r.interval.interval, &r.expected.interval));
        checks.push(flag(&format!("{} bound holds", r.name), r.interval.holds));
        if r.name == "gamma10" {
            checks.push(check("gamma10 boundary |s - dim L_e| = 16", r.interval.boundary, true));
        }
    }
    Criterion::new(7, "interval bound", checks)
}

pub fn criterion_8() -> Result<Criterion> {
    let rs = RootSystemE6::build();
    let c = ChevalleyBasisE6::build()?;
    let even = rs.positive.iter().filter(|r| r[0] % 2 == 0).count();
    let t = c.torus_auto([-1, 1, 1, 1, 1, 1])?;
    let f = c.fixed_dim(&t)?;
    let g = c.z_grading_from_weights([0, 1, 0, 0, 0, 0])?;
    let dims: Vec<usize> = g.components.iter().map(|x| x.dim()).collect();
    let others: Vec<[i64; 6]> = c.five_term_weightings().into_iter().filter(|l| *l != [0, 1, 0, 0, 0, 0]).collect();
    let mut top_dims = Vec::new();
    for l in &others {
        let z = c.z_grading_from_weights(*l)?;
        top_dims.push(z.component(&[2]).map(|x| x.dim()).unwrap_or(0));
    }
    Ok(Criterion::new(
        8,
        "root system and Z-gradings of e6",
        vec![
            check("roots", rs.num_roots(), 72),
            check("positive roots", rs.positive.len(), 36),
            check("k1 even / odd", (even, rs.positive.len() - even), (20, 16)),
            check("dim fix t", f, 46),
            check("78 - 2 dim fix", 78 - 2 * f as i64, -14),
            check("contact grading dims", dims, vec![1, 20, 36, 20, 1]),
            flag("contact grading is a grading", check_grading(c.table(), &g)?.passed()),
            check("other five-term weightings", others.len(), 3),
            flag("those have dim S2 > 1", top_dims.iter().all(|&d| d > 1)),
        ],
    ))
}

pub fn criterion_9(models: &Models) -> Result<Criterion> {
    let r = corollary_basis_report(models.chevalley()?)?;
    Ok(Criterion::new(
        9,
        "orthogonal basis adapted to the Z2^7 grading",
        vec![
            flag("kappa-orthogonal", r.orthogonal),
            check("norms (negative, positive)", (r.negative_norms, r.positive_norms), (46, 32)),
            flag("ad u_i semisimple", r.all_semisimple),
            flag("structure constants rational", r.rational_constants),
            flag("complete antisymmetry of kappa([u_i,u_j],u_k)", r.lowered_antisymmetric),
        ],
    ))
}

pub fn criterion_10(models: &Models) -> Result<Criterion> {
    let f = models.flag()?;
    let l = f.table();
    let parts = f.parts();
    let l0 = l.restrict(&part_basis(l.dim(), &parts[2]), (0..36).map(|i| format!("l{i}")).collect())?;
    let der = derived_algebra(&l0);
    let der_table = l0.restrict(&der.basis, (0..der.dim()).map(|i| format!("d{i}")).collect())?;
    let (plus, minus, same) = f.wedge_involution_eigenspaces()?;
    let id = ExactMatrix::identity(78);
    let mut invol = true;
    let mut preserve = true;
    let mut autos = true;
    let mut ops = f.f_ops()?;
    ops.push(f.theta());
    for op in &ops {
        invol &= op.mul(op)? == id;
        preserve &= f.restrict(op).is_ok();
        autos &= is_automorphism(&f.complex, op)?;
    }
    let spec = f.ad_e_spectrum()?;
    let sanity = f.sanity()?;
    Ok(Criterion::new(
        10,
        "flag model structure",
        vec![
            check("dim L2", parts[4].dim, 1),
            check("dims L-2..L2", parts.iter().map(|p| p.dim).collect::<Vec<_>>(), vec![1, 20, 36, 20, 1]),
            check("wedge involution eigenspaces", (plus, minus), (20, 20)),
            flag("+1 eigenspace is L1", same),
            check("dim [L0,L0]", der.dim(), 35),
            check("signature [L0,L0]", killing_signature(&der_table)?, -15),
            check("dim center L0", center(&l0).dim(), 1),
            flag("theta^2 = F_i^2 = id", invol),
            flag("theta, F_i preserve L", preserve),
            flag("theta, F_i automorphisms", autos),
            check(
                "ad E spectrum",
                spec,
                vec![(-2i64, 1usize), (-1, 20), (0, 36), (1, 20), (2, 1)],
            ),
            flag("[e*_I - c e*_J, e_I - c e_J] = -I6/3", sanity.partner_bracket_central),
        ],
    ))
}

pub fn criterion_11() -> Result<(Criterion, crate::sp8::Sp8Report)> {
    let r = sp8_lemma()?;
    let c = Criterion::new(
        11,
        "sp8 real forms twisted by <A1..A4>",
        vec![
            check("dim sp8", r.dim, 36),
            check("fixed dimensions", &r.fixed_dims, vec![16, 24]),
            check("signatures", &r.signatures, vec![-12, 4]),
            flag("24 exactly on A1 A2 A3^s A4^r", r.family_matches),
            flag("36 - 2 dim fix equals the direct signature", r.formula_agrees),
        ],
    );
    Ok((c, r))
}

/// Conventions the numbers depend on.
#[derive(Clone, Debug, Serialize)]
pub struct Conventions {
    pub scalars: &'static str,
    pub chevalley_signs: &'static str,
    pub octonions: &'static str,
    pub albert_gamma: &'static str,
    pub chevalley_real_form: &'static str,
    pub flag_signs: &'static str,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            scalars: "Q(zeta12), i = zeta^3, sqrt3 = zeta + zeta^11 > 0",
            chevalley_signs: SIGN_CONVENTION,
            octonions: "e_i e_(i+1) = e_(i+3), indices mod 7",
            albert_gamma: "diag(1,-1,1); M uses gamma = E11 + E23 + E32",
            chevalley_real_form: "fixed points of sigma0 omega t, t = t(-1,1,1,1,1,1)",
            flag_signs: "V = C^6 with hermitian form diag(1,1,1,1,1,-1)",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub include_sp8: bool,
    pub include_twist: bool,
    pub include_split_octonions: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub grading: String,
    pub model: String,
    pub type_vector: String,
    pub universal_group: String,
    pub interval: String,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub tool: String,
    pub conventions: Conventions,
    pub criteria: Vec<Criterion>,
    pub gradings: Vec<NamedGradingReport>,
    pub table: Vec<TableRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sp8: Option<crate::sp8::Sp8Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split_octonions: Option<Vec<Check>>,
    pub passed: bool,
}

fn format_type(t: &[usize]) -> String {
    format!("({})", t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

impl VerificationReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Text table of the six gradings followed by the criteria.
    pub fn human(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!(
            "{:<8} {:<10} {:<20} {:<14} {:<8} {}\n",
            "grading", "model", "type", "group", "interval", "ok"
        ));
        for r in &self.table {
            s.push_str(&format!(
                "{:<8} {:<10} {:<20} {:<14} {:<8} {}\n",
                r.grading,
                r.model,
                r.type_vector,
                r.universal_group,
                r.interval,
                if r.matches { "yes" } else { "no" }
            ));
        }
        s.push('\n');
        for c in &self.criteria {
            s.push_str(&c.summary_line());
            s.push('\n');
        }
        s
    }
}

/// Split octonion variant of the Tits model.
pub fn split_octonion_checks() -> Result<Vec<Check>> {
    let t = build_tits(CompositionKind::SplitOctonion)?;
    let l = t.table();
    Ok(vec![
        flag("Jacobi tits Os", check_lie(l).passed),
        check("dim tits Os", l.dim(), 78),
        check("signature tits Os", killing_signature(l)?, 2),
    ])
}

pub fn verify_all(opts: &VerifyOptions) -> Result<VerificationReport> {
    let models = Models::new();
    let gradings = named_grading_reports(&models)?;
    let mut criteria = vec![
        criterion_1()?,
        criterion_2()?,
        criterion_3(&models)?,
        criterion_4(&models)?,
    ];
    if opts.include_twist {
        criteria.push(criterion_5(&models)?);
    }
    criteria.push(criterion_6(&gradings));
    criteria.push(criterion_7(&gradings));
    criteria.push(criterion_8()?);
    criteria.push(criterion_9(&models)?);
    criteria.push(criterion_10(&models)?);
    let sp8 = if opts.include_sp8 {
        let (c, r) = criterion_11()?;
        criteria.push(c);
        Some(r)
    } else {
        None
    };
    let split_octonions = if opts.include_split_octonions {
        Some(split_octonion_checks()?)
    } else {
        None
    };
    let table = gradings
        .iter()
        .map(|r| TableRow {
            grading: r.name.clone(),
            model: r.model.to_string(),
            type_vector: format_type(&r.type_vector),
            universal_group: r.universal_group.clone(),
            interval: r.interval.interval.clone(),
            matches: r.passed(),
        })
        .collect();
    let passed = criteria.iter().all(|c| c.passed)
        && split_octonions.as_ref().is_none_or(|v| v.iter().all(|c| c.passed));
    Ok(VerificationReport {
        tool: format!("e6grad {}", env!("CARGO_PKG_VERSION")),
        conventions: Conventions::default(),
        criteria,
        gradings,
        table,
        sp8,
        split_octonions,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_compares_values() {
        assert!(check("a", 3, 3).passed);
        assert!(!check("a", (1, 2), (2, 1)).passed);
        assert!(check("s", vec![1, 2], [1, 2]).passed);
    }

    #[test]
    fn criterion_passes_only_if_all_checks_pass() {
        let c = Criterion::new(1, "t", vec![flag("x", true), flag("y", false)]);
        assert!(!c.passed);
        assert_eq!(c.failures(), vec!["y"]);
        assert!(c.summary_line().contains("FAIL"));
    }

    #[test]
    fn type_formatting() {
        assert_eq!(format_type(&[64, 7]), "(64,7)");
    }

    #[test]
    fn same_products_on_equal_tables() {
        let a = crate::structalg::AlgebraTable::zero_algebra(3, crate::structalg::AlgebraKind::Lie);
        assert!(same_products(&a, &a.clone()));
    }
}
