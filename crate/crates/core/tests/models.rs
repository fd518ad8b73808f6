use e6grad::composition::CompositionKind;
use e6grad::exactla::{unit_vec, ExactMatrix};
use e6grad::liemodels::*;
use e6grad::report::tits_tensor_constant;
use e6grad::gradings::Models;
use e6grad::structalg::{check_lie, is_automorphism, killing_form, killing_signature, twist_z2};

#[test]
fn albert_models() {
    let a = build_albert(-1).unwrap();
    let l = a.table();
    assert_eq!(l.dim(), 78);
    assert!(check_lie(l).passed);
    assert_eq!(killing_signature(l).unwrap(), -14);
    let dims: Vec<usize> = a.parts().iter().map(|p| p.dim).collect();
    assert_eq!(dims, vec![52, 26]);

    let p = build_albert(1).unwrap();
    assert!(check_lie(p.table()).passed);
    assert_eq!(killing_signature(p.table()).unwrap(), -26);
    assert!(build_albert(0).is_err());
}

#[test]
fn twist_swaps_the_albert_models() {
    let a = build_albert(-1).unwrap();
    let t = twist_z2(a.table(), &a.odd(), -1).unwrap();
    assert_eq!(killing_signature(&t).unwrap(), -26);
    let k = killing_form(a.table()).unwrap();
    let n = a.table().dim();
    let even: Vec<_> = (0..52).map(|i| unit_vec(n, i)).collect();
    assert_eq!(k.restrict(&even).unwrap().signature().unwrap(), -20);
    // κ(Der J, J0) = 0
    for i in 0..52 {
        for j in 52..n {
            assert!(k.gram()[(i, j)].is_zero());
        }
    }
}

#[test]
fn tits_model() {
    let t = build_tits(CompositionKind::Octonion).unwrap();
    let l = t.table();
    assert!(check_lie(l).passed);
    assert_eq!(killing_signature(l).unwrap(), -14);
    let dims: Vec<usize> = t.parts().iter().map(|p| p.dim).collect();
    assert_eq!(dims, vec![14, 56, 8]);
    assert!(t.tensor(0, &t.m0[0]).is_err());
}

#[test]
fn tits_tensor_constant_is_uniform() {
    let m = Models::new();
    let c = tits_tensor_constant(&m).unwrap().expect("proportional");
    assert_eq!(c.to_string(), "-48");
}

#[test]
fn split_tits_model() {
    let t = build_tits(CompositionKind::SplitOctonion).unwrap();
    assert!(check_lie(t.table()).passed);
    assert_eq!(killing_signature(t.table()).unwrap(), 2);
    assert!(build_tits(CompositionKind::Complex).is_err());
}

#[test]
fn flag_model() {
    let f = build_flag().unwrap();
    let s = &f.scales;
    assert_eq!(
        [&s.l3, &s.nu, &s.l4, &s.l6].map(|r| r.to_string()),
        ["-1", "-1/9", "-1", "-1/3"]
    );
    assert!(check_lie(&f.complex).passed);
    assert!(check_lie(f.table()).passed);
    assert!(f.table().is_real());
    assert_eq!(killing_signature(f.table()).unwrap(), -14);
    let k = killing_form(f.table()).unwrap();
    // L_n ⊕ L_{-n} has signature 0 for n ≠ 0
    let p = f.parts();
    for (a, b) in [(0, 4), (1, 3)] {
        let basis: Vec<_> = p[a].range().chain(p[b].range()).map(|i| unit_vec(78, i)).collect();
        assert_eq!(k.restrict(&basis).unwrap().signature().unwrap(), 0);
    }
    assert_eq!(f.wedge_involution_eigenspaces().unwrap(), (20, 20, true));
    let id = ExactMatrix::identity(78);
    for op in f.f_ops().unwrap().into_iter().chain([f.theta()]) {
        assert!(op.mul(&op).unwrap() == id);
        assert!(is_automorphism(&f.complex, &op).unwrap());
        assert!(f.restrict(&op).is_ok());
    }
    assert!(f.phi_diag([1, 1, 1, 1, 1, 2]).is_err());
}

#[test]
fn chevalley_forms() {
    let c = build_chevalley_form([-1, 1, 1, 1, 1, 1]).unwrap();
    assert!(check_lie(c.table()).passed);
    assert_eq!(killing_signature(c.table()).unwrap(), -14);
    let compact = build_chevalley_form([1; 6]).unwrap();
    assert_eq!(killing_signature(compact.table()).unwrap(), -78);
    assert!(build_chevalley_form([1, 1, 1, 1, 1, 0]).is_err());
    let ops = c.gamma13_operators().unwrap();
    for a in &ops {
        for b in &ops {
            assert!(a.commutator(b).unwrap().is_zero());
        }
    }
}

#[test]
fn corollary_basis() {
    let c = build_chevalley_form([-1, 1, 1, 1, 1, 1]).unwrap();
    let r = corollary_basis_report(&c).unwrap();
    assert!(r.passed());
    assert!(r.first_negative_then_positive);
    assert!(r.denominators_in_z_1_60);
}

#[test]
fn restrict_operator_identity() {
    let basis = vec![unit_vec(3, 0), unit_vec(3, 2)];
    let m = restrict_operator(&ExactMatrix::identity(3), &basis).unwrap();
    assert!(m == ExactMatrix::identity(2));
}
