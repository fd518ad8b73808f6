use e6grad::composition::{octonion_grading, CompositionAlgebra, CompositionKind};
use e6grad::exactla::{rank, ExactMatrix};
use e6grad::gradings::induced_derivation_grading;
use e6grad::scalar::{CycScalar, Rational};
use e6grad::structalg::{check_lie, derivations, is_derivation, killing_signature};
use rand::{Rng, SeedableRng};

fn random_octonion(rng: &mut impl Rng) -> Vec<CycScalar> {
    (0..8)
        .map(|_| CycScalar::from_rational(Rational::new(rng.gen_range(-9..10), rng.gen_range(1..6)).unwrap()))
        .collect()
}

#[test]
fn norm_is_multiplicative_on_random_pairs() {
    let o = CompositionAlgebra::octonions();
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..1000 {
        let x = random_octonion(&mut rng);
        let y = random_octonion(&mut rng);
        assert_eq!(o.norm(&o.mul(&x, &y)), &o.norm(&x) * &o.norm(&y));
    }
}

#[test]
fn conjugation_reverses_products() {
    let o = CompositionAlgebra::octonions();
    let mut rng = rand::rngs::StdRng::seed_from_u64(8);
    for _ in 0..100 {
        let x = random_octonion(&mut rng);
        let y = random_octonion(&mut rng);
        assert_eq!(o.conj(&o.mul(&x, &y)), o.mul(&o.conj(&y), &o.conj(&x)));
        let nx = o.mul(&x, &o.conj(&x));
        assert_eq!(nx[0], o.norm(&x));
        assert!(nx[1..].iter().all(CycScalar::is_zero));
    }
}

#[test]
fn derivation_algebra_is_compact_g2() {
    let o = CompositionAlgebra::octonions();
    let der = derivations(o.table()).unwrap();
    assert_eq!(der.dim(), 14);
    assert!(check_lie(&der.table).passed);
    assert_eq!(killing_signature(&der.table).unwrap(), -14);
}

#[test]
fn inner_derivations_span_everything() {
    let o = CompositionAlgebra::octonions();
    let ds = o.inner_derivations().unwrap();
    for d in &ds {
        assert!(is_derivation(o.table(), d).unwrap());
    }
    let flat: Vec<Vec<CycScalar>> = ds.iter().map(|d| d.entries().to_vec()).collect();
    assert_eq!(rank(&ExactMatrix::from_rows(flat).unwrap()), 14);
    let mut rng = rand::rngs::StdRng::seed_from_u64(9);
    let e1 = o.basis(1);
    for _ in 0..20 {
        let mut x = random_octonion(&mut rng);
        x[0] = CycScalar::zero();
        let b = o.mul(&e1, &x);
        let mut b0 = b.clone();
        b0[0] = CycScalar::zero();
        assert!(is_derivation(o.table(), &o.d_ab(&e1, &b0).unwrap()).unwrap());
    }
}

#[test]
fn induced_grading_on_g2() {
    let o = CompositionAlgebra::octonions();
    let der = derivations(o.table()).unwrap();
    let g = induced_derivation_grading(&octonion_grading().unwrap(), &der).unwrap();
    assert_eq!(g.neutral_dim(), 0);
    assert_eq!(g.type_vector(), vec![0, 7]);
}

#[test]
fn split_octonion_derivations() {
    let os = CompositionAlgebra::build(CompositionKind::SplitOctonion);
    let der = derivations(os.table()).unwrap();
    assert_eq!(der.dim(), 14);
    assert_eq!(killing_signature(&der.table).unwrap(), 2);
}
