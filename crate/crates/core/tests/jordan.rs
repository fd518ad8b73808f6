use e6grad::exactla::rank;
use e6grad::gradings::{check_grading, induced_derivation_grading, universal_group};
use e6grad::jordan::{H3Kind, JordanH3};
use e6grad::structalg::{check_jordan, derivations, killing_signature};

#[test]
fn jordan_identity_holds() {
    for k in [H3Kind::Albert, H3Kind::AlbertCompact, H3Kind::Complex, H3Kind::SplitComplex] {
        let j = JordanH3::build(k).unwrap();
        let r = check_jordan(j.table());
        assert!(r.passed, "{k:?}: {:?}", r.first_violation);
    }
}

#[test]
fn trace_form_signatures() {
    let j = JordanH3::build(H3Kind::Albert).unwrap();
    assert_eq!(j.trace_form().unwrap().signature().unwrap(), -5);
    let j0 = j.traceless_basis().unwrap();
    assert_eq!(j0.len(), 26);
    assert_eq!(j.trace_form_on(&j0).unwrap().signature().unwrap(), -6);
    let jc = JordanH3::build(H3Kind::AlbertCompact).unwrap();
    assert_eq!(jc.trace_form().unwrap().signature().unwrap(), 27);
    let m = JordanH3::build(H3Kind::Complex).unwrap();
    assert_eq!(m.traceless_basis().unwrap().len(), 8);
}

#[test]
fn z_grading_dimensions() {
    let j = JordanH3::build(H3Kind::Albert).unwrap();
    let g = j.jordan_z_grading().unwrap();
    let dims: Vec<(i64, usize)> = g.components.iter().map(|c| (c.degree[0], c.basis.len())).collect();
    assert_eq!(dims, vec![(-2, 1), (-1, 8), (0, 9), (1, 8), (2, 1)]);
    assert!(check_grading(j.table(), &g).unwrap().passed());
}

#[test]
fn jordan_gradings_are_gradings() {
    let j = JordanH3::build(H3Kind::Albert).unwrap();
    let g = j.jordan_octonion_grading().unwrap();
    let rep = check_grading(j.table(), &g).unwrap();
    assert!(rep.passed());
    assert_eq!(g.neutral_dim(), 3);
    let u = universal_group(&g, &rep).unwrap();
    assert_eq!(u.group.describe(), "Z2^5");

    let m = JordanH3::build(H3Kind::Complex).unwrap();
    let p = m.pauli_grading().unwrap();
    let rep = check_grading(m.table(), &p).unwrap();
    assert!(rep.passed());
    assert_eq!(universal_group(&p, &rep).unwrap().group.describe(), "Z3^2");
}

#[test]
fn derivations_of_m() {
    for (k, sig) in [(H3Kind::Complex, 0), (H3Kind::SplitComplex, 2)] {
        let m = JordanH3::build(k).unwrap();
        let d = derivations(m.table()).unwrap();
        assert_eq!(d.dim(), 8);
        assert_eq!(killing_signature(&d.table).unwrap(), sig, "{k:?}");
    }
    let m = JordanH3::build(H3Kind::Complex).unwrap();
    let d = derivations(m.table()).unwrap();
    let p = m.pauli_grading().unwrap();
    let ind = induced_derivation_grading(&p, &d).unwrap();
    assert_eq!(ind.neutral_dim(), 0);
    assert_eq!(ind.type_vector(), vec![8]);
}

#[test]
fn derivations_of_albert() {
    let j = JordanH3::build(H3Kind::Albert).unwrap();
    let d = derivations(j.table()).unwrap();
    assert_eq!(d.dim(), 52);
    assert_eq!(killing_signature(&d.table).unwrap(), -20);
    let zd = j.z_grading_derivation().unwrap();
    assert!(d.coords(&zd).is_ok());
    let ranks: usize = d.basis.iter().map(|m| rank(m).min(1)).sum();
    assert_eq!(ranks, 52);
}
