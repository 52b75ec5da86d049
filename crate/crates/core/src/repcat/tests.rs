use super::*;
use crate::bqa::{Quiver, Relation};
use crate::exactla::int;

fn a3() -> Algebra {
    Algebra::build(Quiver::from_triples(3, &[("a", 0, 1), ("b", 1, 2)]).unwrap(), vec![]).unwrap()
}

fn a3_mod_ba() -> Algebra {
    Algebra::build(Quiver::from_triples(3, &[("a", 0, 1), ("b", 1, 2)]).unwrap(), vec![Relation::zero_path(vec![0, 1])])
        .unwrap()
}

fn pi_a2() -> Algebra {
    let q = Quiver::from_triples(2, &[("a", 0, 1), ("a*", 1, 0)]).unwrap();
    Algebra::build(q, vec![Relation::zero_path(vec![0, 1]), Relation::zero_path(vec![1, 0])]).unwrap()
}

fn pi_a3() -> Algebra {
    let q = Quiver::from_triples(3, &[("a", 0, 1), ("a*", 1, 0), ("b", 1, 2), ("b*", 2, 1)]).unwrap();
    let mid = Relation { terms: vec![(int(1), vec![1, 0]), (int(-1), vec![2, 3])] };
    Algebra::build(q, vec![Relation::zero_path(vec![0, 1]), mid, Relation::zero_path(vec![3, 2])]).unwrap()
}

fn kronecker() -> Algebra {
    Algebra::build(Quiver::from_triples(2, &[("a", 0, 1), ("b", 0, 1)]).unwrap(), vec![]).unwrap()
}

#[test]
fn projectives_and_injectives_over_a3() {
    let a = a3();
    assert_eq!(Rep::projective(&a, 0).unwrap().dims(), &[1, 1, 1]);
    assert_eq!(Rep::projective(&a, 2).unwrap().dims(), &[0, 0, 1]);
    assert_eq!(Rep::injective(&a, 0).unwrap().dims(), &[1, 0, 0]);
    assert_eq!(Rep::injective(&a, 2).unwrap().dims(), &[1, 1, 1]);
    // I_i = D(P_i over the opposite algebra)
    for i in 0..3 {
        let di = Rep::projective(&a.opposite(), i).unwrap().dual();
        assert_eq!(di, Rep::injective(&a, i).unwrap());
    }
}

#[test]
fn hom_dimensions() {
    let a = a3();
    let s1 = Rep::simple(&a, 0).unwrap();
    let s2 = Rep::simple(&a, 1).unwrap();
    assert_eq!(hom_dim(&s1, &s2).unwrap(), 0);
    assert_eq!(hom_dim(&s1, &s1).unwrap(), 1);
    let b = a3_mod_ba();
    let p1 = Rep::projective(&b, 0).unwrap();
    let p2 = Rep::projective(&b, 1).unwrap();
    assert_eq!(hom_basis(&p1, &p2).unwrap().len(), 0);
    assert_eq!(hom_basis(&p2, &p1).unwrap().len(), 1);
    assert!(hom_basis(&p1, &Rep::projective(&a, 0).unwrap()).is_err());
}

#[test]
fn hom_from_projective_counts_vertex_dimension() {
    for alg in [a3(), a3_mod_ba(), pi_a2(), pi_a3(), kronecker()] {
        let reg = Rep::regular(&alg);
        let dual = Rep::dual_regular(&alg);
        for i in 0..alg.vertex_count() {
            let p = Rep::projective(&alg, i).unwrap();
            assert_eq!(hom_dim(&p, &reg).unwrap(), reg.dim(i));
            assert_eq!(hom_dim(&p, &dual).unwrap(), dual.dim(i));
        }
    }
}

#[test]
fn kernel_cokernel_image() {
    let a = a3();
    let p2 = Rep::projective(&a, 1).unwrap();
    let id = Morphism::identity(&p2);
    assert!(id.kernel().0.is_zero());
    let z = Morphism::zero(&Rep::zero(&a), &p2);
    assert_eq!(z.cokernel().0, p2);
    let s3 = Rep::simple(&a, 2).unwrap();
    let incl = &hom_basis(&s3, &p2).unwrap()[0];
    let (c, pi) = incl.cokernel();
    assert_eq!(c.dims(), &[0, 1, 0]);
    assert!(pi.is_surjective());
    let (img, _) = incl.image();
    assert_eq!(img.dims(), &[0, 0, 1]);
}

#[test]
fn radical_and_top() {
    let a = a3();
    let p1 = Rep::projective(&a, 0).unwrap();
    assert_eq!(radical(&p1).0.dims(), &[0, 1, 1]);
    assert_eq!(top(&Rep::regular(&a)).0.dims(), &[1, 1, 1]);
    assert!(radical(&Rep::simple(&a, 1).unwrap()).0.is_zero());
    let reg = Rep::regular(&pi_a3());
    let t = top(&reg).0;
    assert_eq!(t.dims(), &[1, 1, 1]);
    assert!(t.arrows().iter().all(Matrix::is_zero));
}

#[test]
fn minimal_presentations() {
    let b = a3_mod_ba();
    let p = min_presentation(&Rep::simple(&b, 0).unwrap());
    assert_eq!(p.p0.multiplicities(), vec![1, 0, 0]);
    assert_eq!(p.p1.multiplicities(), vec![0, 1, 0]);
    let a = a3();
    let p = min_presentation(&Rep::simple(&a, 0).unwrap());
    assert_eq!(p.p1.multiplicities(), vec![0, 1, 0]);
    let proj = min_presentation(&Rep::projective(&a, 1).unwrap());
    assert!(proj.p1.is_zero());
    assert_eq!(proj.p0.multiplicities(), vec![0, 1, 0]);
}

#[test]
fn presentation_is_exact_and_radical() {
    for alg in [a3(), a3_mod_ba(), pi_a3()] {
        let cat = ModCat::new(&alg);
        cat.saturate(200).unwrap();
        for id in cat.ids() {
            let m = cat.rep(id);
            let p = min_presentation(&m);
            assert!(p.d0.is_surjective());
            assert!(p.d0.after(&p.d1).is_zero());
            let img = p.d1.image().0.total_dim();
            assert_eq!(img, p.syzygy.total_dim());
            // entries of d1 lie in the radical: no idempotent coefficients
            for row in p.d1_elements() {
                for x in row {
                    for v in 0..alg.vertex_count() {
                        let e = alg.block(v, v)[0];
                        assert!(x[e].is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn element_matrix_round_trips() {
    let alg = pi_a3();
    let m = Rep::injective(&alg, 0).unwrap();
    let p = min_presentation(&m);
    let e = element_matrix(&p.p1, &p.p0, &p.d1);
    assert_eq!(morphism_from_elements(&p.p1, &p.p0, &e), p.d1);
    let (_, _, s) = star(&p.p1, &p.p0, &p.d1);
    assert!(s.intertwines());
}

#[test]
fn decompose_examples() {
    let a = a3();
    let cat = ModCat::new(&a);
    let d = cat.decompose(&Rep::regular(&a)).unwrap();
    assert_eq!(d.parts.len(), 3);
    assert!(d.parts.iter().all(|p| p.1 == 1));
    for v in 0..3 {
        assert!(d.contains(cat.projective_id(v).unwrap()));
    }
    let p1 = Rep::projective(&a, 0).unwrap();
    let d = cat.decompose(&p1.power(2)).unwrap();
    assert_eq!(d.parts, vec![(cat.projective_id(0).unwrap(), 2)]);
    let m = Rep::direct_sum(&a, &[radical(&p1).0, Rep::simple(&a, 0).unwrap()]);
    let d = cat.decompose(&m).unwrap();
    let want = Decomposition::from_ids([cat.projective_id(1).unwrap(), cat.simple_id(0).unwrap()]);
    assert_eq!(d, want);
}

#[test]
fn decomposition_is_additive() {
    let alg = pi_a3();
    let cat = ModCat::new(&alg);
    cat.saturate(200).unwrap();
    let ids = cat.ids();
    for w in ids.windows(3).step_by(2) {
        let m = cat.assemble_ids(w);
        let d = cat.decompose(&m).unwrap();
        assert_eq!(d, Decomposition::from_ids(w.iter().copied()));
        assert_eq!(cat.decompose(&cat.assemble(&d)).unwrap(), d);
    }
}

#[test]
fn isomorphism_tests() {
    let p = pi_a2();
    let cat = ModCat::new(&p);
    let p1 = Rep::projective(&p, 0).unwrap();
    assert!(cat.is_isomorphic(&p1, &p1).unwrap());
    let semi = Rep::with_zero_arrows(&p, p1.dims().to_vec());
    assert!(!cat.is_isomorphic(&p1, &semi).unwrap());
    assert!(!indecomposables_isomorphic(&Rep::simple(&p, 0).unwrap(), &Rep::simple(&p, 1).unwrap()).unwrap());
    // a twisted copy of P1 is still P1
    let twisted = Rep::new(&p, p1.dims().to_vec(), p1.arrows().iter().map(|m| m.scale(&int(3))).collect()).unwrap();
    assert!(indecomposables_isomorphic(&p1, &twisted).unwrap());
}

#[test]
fn kronecker_regular_modules_are_distinguished() {
    let k = kronecker();
    let cat = ModCat::new(&k);
    // R_λ: x ↦ (x, λx) for λ = 0, 1, and the point at infinity
    let mk = |a: i64, b: i64| {
        Rep::new(&k, vec![1, 1], vec![Matrix::from_ints(1, 1, &[a]), Matrix::from_ints(1, 1, &[b])]).unwrap()
    };
    let ids: Vec<_> = [(1, 0), (1, 1), (0, 1), (2, 2)].iter().map(|&(a, b)| cat.identify(&mk(a, b)).unwrap()).collect();
    assert_eq!(ids[0..3], [0, 1, 2]);
    assert_eq!(ids[3], ids[1]);
}

#[test]
fn tau_examples() {
    let a = a3();
    let s = |v| Rep::simple(&a, v).unwrap();
    let cat = ModCat::new(&a);
    assert!(cat.is_isomorphic(&tau(&s(0)).unwrap(), &s(1)).unwrap());
    assert!(cat.is_isomorphic(&tau(&s(1)).unwrap(), &s(2)).unwrap());
    for v in 0..3 {
        assert!(tau(&Rep::projective(&a, v).unwrap()).unwrap().is_zero());
        assert!(transpose(&Rep::projective(&a, v).unwrap()).unwrap().is_zero());
    }
    let b = a3_mod_ba();
    let cat = ModCat::new(&b);
    assert!(cat.is_isomorphic(&tau(&Rep::simple(&b, 0).unwrap()).unwrap(), &Rep::simple(&b, 1).unwrap()).unwrap());
    // Tr S1 contains the opposite simple at vertex 2
    let tr = transpose(&Rep::simple(&b, 0).unwrap()).unwrap();
    assert_eq!(tr.algebra(), &b.opposite());
    assert_eq!(tr.dims(), &[0, 1, 0]);
}

#[test]
fn ext_and_stable_hom() {
    let a = a3();
    let s1 = Rep::simple(&a, 0).unwrap();
    let s2 = Rep::simple(&a, 1).unwrap();
    assert_eq!(ext1_dim(&s1, &s2).unwrap(), 1);
    assert_eq!(ext1_dim(&s2, &s1).unwrap(), 0);
    assert_eq!(ext1_dim(&Rep::projective(&a, 0).unwrap(), &s2).unwrap(), 0);
    assert_eq!(stable_hom_dim(&Rep::projective(&a, 0).unwrap(), &s1).unwrap(), 0);
    assert_eq!(stable_hom_dim(&s1, &s1).unwrap(), 1);
}

fn check_ar_theory(alg: &Algebra, cap: usize) {
    let cat = ModCat::new(alg);
    let n = cat.saturate(cap).unwrap();
    assert!(n < cap, "saturation should close");
    let ids = cat.ids();
    let mut tau_images = std::collections::HashSet::new();
    for &x in &ids {
        let m = cat.rep(x);
        match cat.tau_id(x).unwrap() {
            None => assert!(cat.is_projective(x)),
            Some(t) => {
                assert!(tau_images.insert(t), "tau must be injective");
                assert_eq!(cat.tau_minus_id(t).unwrap(), Some(x));
                assert!(!cat.is_injective(t));
            }
        }
        let tr = transpose(&m).unwrap();
        if !cat.is_projective(x) {
            let trtr = transpose(&tr).unwrap();
            assert!(cat.is_isomorphic(&trtr, &m).unwrap());
        }
        let tm = tau(&m).unwrap();
        // tau-rigid implies rigid
        if hom_dim(&m, &tm).unwrap() == 0 {
            assert_eq!(ext1_dim(&m, &m).unwrap(), 0);
        }
        for &y in &ids {
            let yr = cat.rep(y);
            assert_eq!(stable_hom_dim(&m, &yr).unwrap(), ext1_dim(&yr, &tm).unwrap(), "duality at ({x},{y})");
        }
    }
}

#[test]
fn ar_theory_a3() {
    check_ar_theory(&a3(), 100);
    check_ar_theory(&a3_mod_ba(), 100);
}

#[test]
fn ar_theory_preprojective() {
    check_ar_theory(&pi_a2(), 100);
    check_ar_theory(&pi_a3(), 200);
}

#[test]
fn a3_registry_is_complete() {
    // path algebra of A3 has six indecomposables (one per interval)
    let cat = ModCat::new(&a3());
    assert_eq!(cat.saturate(100).unwrap(), 6);
}

#[test]
fn apr_tilting() {
    let a = a3();
    let t = apr_tilt(&a, 2).unwrap();
    let cat = ModCat::new(&a);
    let d = cat.decompose(&t).unwrap();
    assert_eq!(d.distinct(), 3);
    assert_eq!(ext1_dim(&t, &t).unwrap(), 0);
    assert!(matches!(apr_tilt(&a, 0), Err(Error::NotSink(0))));
    let a2 = Algebra::build(Quiver::from_triples(2, &[("a", 0, 1)]).unwrap(), vec![]).unwrap();
    let t = apr_tilt(&a2, 1).unwrap();
    let cat = ModCat::new(&a2);
    let want = Rep::direct_sum(&a2, &[Rep::projective(&a2, 0).unwrap(), Rep::simple(&a2, 0).unwrap()]);
    assert!(cat.is_isomorphic(&t, &want).unwrap());
    assert!(matches!(apr_tilt(&a3_mod_ba(), 2), Err(Error::NotHereditary)));
}

#[test]
fn annihilator_and_faithfulness() {
    let a = a3();
    assert!(Rep::regular(&a).is_faithful());
    assert_eq!(Rep::simple(&a, 0).unwrap().annihilator().cols(), 5);
    assert!(Rep::dual_regular(&a).is_faithful());
    assert!(Rep::projective(&a, 0).unwrap().is_faithful());
    assert!(!Rep::projective(&a, 2).unwrap().is_faithful());
    assert!(Rep::projective(&a, 0).unwrap().is_sincere());
}

#[test]
fn relation_violations_are_rejected() {
    let b = a3_mod_ba();
    let one = || Matrix::from_ints(1, 1, &[1]);
    assert!(matches!(Rep::new(&b, vec![1, 1, 1], vec![one(), one()]), Err(Error::InvalidRelation(_))));
    assert!(matches!(Rep::new(&b, vec![1, 1], vec![one(), one()]), Err(Error::Shape(_))));
}
