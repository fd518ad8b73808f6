use e6grad::gradings::*;
use proptest::prelude::*;

#[test]
fn six_gradings_match_the_reference_rows() {
    let m = Models::new();
    for n in GradingName::ALL {
        let (g, r) = verify_named_grading(n, &m, Some(-14)).unwrap();
        assert!(r.passed(), "{n}: {r:?}");
        assert_eq!(g.total_dim(), 78);
        assert!(r.fine);
    }
}

#[test]
fn gamma10_is_the_boundary_case() {
    let m = Models::new();
    let (_, r) = verify_named_grading(GradingName::Gamma10, &m, Some(-14)).unwrap();
    assert!(r.interval.boundary);
    assert_eq!(r.interval.interval, "2±16");
}

#[test]
fn corrupted_degree_is_detected() {
    let m = Models::new();
    let g = build_named_grading(GradingName::Gamma13, &m).unwrap();
    let mut bad = g.clone();
    // move one component to a degree already in use
    let d = bad.components[1].degree.clone();
    bad.components[2].degree = d;
    let l = m.table(ModelName::Chevalley).unwrap();
    let merged = GradedDecomposition::from_components(bad.group.clone(), 78, bad.components).unwrap();
    assert!(!check_grading(l, &merged).unwrap().passed());
}

#[test]
fn refinement_contains_its_pieces() {
    let m = Models::new();
    let a = m.albert().unwrap();
    let z = a.jordan.jordan_z_grading().unwrap();
    let o = a.jordan.octonion_part_grading().unwrap();
    let r = refine(&z, &o).unwrap();
    assert_eq!(r.total_dim(), 27);
    for c in &r.components {
        let zc = z.component(&c.degree[..1]).unwrap();
        let span = e6grad::structalg::Subspace::span(27, zc.basis.clone());
        assert!(c.basis.iter().all(|v| span.contains(v)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn universal_group_ignores_relabeling(shear in proptest::collection::vec(0i64..2, 21)) {
        // unipotent upper triangular automorphism of Z2^7
        let m = Models::new();
        let g = build_named_grading(GradingName::Gamma13, &m).unwrap();
        let grp = g.group.clone();
        let relabeled = g
            .coarsen(grp.clone(), |d| {
                let mut out = d.to_vec();
                let mut k = 0;
                for i in 0..7 {
                    for j in i + 1..7 {
                        out[i] = (out[i] + shear[k] * d[j]) % 2;
                        k += 1;
                    }
                }
                out
            })
            .unwrap();
        let l = m.table(ModelName::Chevalley).unwrap();
        let rep = check_grading(l, &relabeled).unwrap();
        prop_assert!(rep.passed());
        prop_assert_eq!(universal_group(&relabeled, &rep).unwrap().group.describe(), "Z2^7");
        prop_assert_eq!(relabeled.type_vector(), g.type_vector());
    }
}
