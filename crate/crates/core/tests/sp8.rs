use e6grad::sp8::*;

#[test]
fn worked_cases() {
    let r = sp8_lemma().unwrap();
    assert_eq!(r.dim, 36);
    assert!(r.formula_agrees);
    let case = |w: &[usize]| r.cases.iter().find(|c| c.word == w).unwrap();
    let a12 = case(&[1, 2]);
    assert_eq!((a12.fixed_dim, a12.signature), (24, -12));
    assert!(a12.in_family);
    let id = case(&[]);
    assert_eq!((id.fixed_dim, id.signature), (16, 4));
    assert_eq!(r.involutive_cases, r.cases.len());
}

#[test]
fn generators_are_symplectic_up_to_scalars() {
    let c = symplectic_c();
    for a in generators() {
        let m = a.mul(&c).unwrap().mul(&a.transpose()).unwrap();
        assert!(m == c || m == c.scale(&e6grad::scalar::int(-1)));
    }
}
