use e6grad::gradings::{check_grading, universal_group};
use e6grad::rootsys::ChevalleyBasisE6;
use e6grad::structalg::{check_lie, killing_form};

#[test]
fn chevalley_table_is_lie_and_split() {
    let c = ChevalleyBasisE6::build().unwrap();
    assert_eq!(c.dim(), 78);
    assert!(c.table().is_rational());
    let r = check_lie(c.table());
    assert!(r.passed, "{:?}", r.first_violation);
    let k = killing_form(c.table()).unwrap().inertia().unwrap();
    assert!(k.is_nondegenerate());
    assert_eq!(k.signature(), 6);
}

#[test]
fn structure_constants() {
    let c = ChevalleyBasisE6::build().unwrap();
    let roots = c.roots.roots();
    let mut triples = 0;
    for a in &roots {
        for b in &roots {
            let s: [i64; 6] = std::array::from_fn(|i| a[i] + b[i]);
            let n = c.structure_constant(a, b).unwrap();
            if c.roots.is_root(&s) {
                assert!(n == 1 || n == -1);
                assert_eq!(n.unsigned_abs() as usize, 1 + c.roots.string_down(a, b));
                let g = s.map(|x| -x);
                assert_eq!(n, c.structure_constant(b, &g).unwrap());
                assert_eq!(n, c.structure_constant(&g, a).unwrap());
                triples += 1;
            } else {
                assert_eq!(n, 0);
            }
        }
    }
    assert_eq!(triples, 72 * 20);
}

#[test]
fn automorphisms() {
    let c = ChevalleyBasisE6::build().unwrap();
    let w = c.omega_auto();
    assert!(c.is_automorphism(&w).unwrap());
    assert!(w.mul(&w).unwrap() == e6grad::exactla::ExactMatrix::identity(78));
    let id = c.torus_auto([1; 6]).unwrap();
    assert!(id == e6grad::exactla::ExactMatrix::identity(78));
    for j in 0..6 {
        let mut s = [1; 6];
        s[j] = -1;
        let t = c.torus_auto(s).unwrap();
        assert!(c.is_automorphism(&t).unwrap());
        assert!(t.commutator(&w).unwrap().is_zero());
    }
    let t = c.torus_auto([-1, 1, 1, 1, 1, 1]).unwrap();
    let f = c.fixed_dim(&t).unwrap();
    assert_eq!(f, 46);
    assert_eq!(78 - 2 * f as i64, -14);
}

#[test]
fn z_gradings() {
    let c = ChevalleyBasisE6::build().unwrap();
    let g = c.z_grading_from_weights([0, 1, 0, 0, 0, 0]).unwrap();
    let dims: Vec<(i64, usize)> = g.components.iter().map(|x| (x.degree[0], x.dim())).collect();
    assert_eq!(dims, vec![(-2, 1), (-1, 20), (0, 36), (1, 20), (2, 1)]);
    assert!(check_grading(c.table(), &g).unwrap().passed());
    for l in c.five_term_weightings() {
        if l != [0, 1, 0, 0, 0, 0] {
            let g = c.z_grading_from_weights(l).unwrap();
            assert!(g.component(&[2]).unwrap().dim() > 1, "{l:?}");
        }
    }
    let z = c.z_grading_from_weights([0; 6]).unwrap();
    assert_eq!(z.components.len(), 1);
}

#[test]
fn root_grading_universal_group() {
    let c = ChevalleyBasisE6::build().unwrap();
    let g = c.root_grading().unwrap();
    let rep = check_grading(c.table(), &g).unwrap();
    assert!(rep.passed());
    assert_eq!(universal_group(&g, &rep).unwrap().group.describe(), "Z^6");
    assert_eq!(g.type_vector(), vec![72, 0, 0, 0, 0, 1]);
}
