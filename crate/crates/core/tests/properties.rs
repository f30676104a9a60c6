use std::collections::BTreeSet;

use varchenko_core::corpus;
use varchenko_core::polyring::weight;
use varchenko_core::tits::tits_suite;
use varchenko_core::varchenko::{
    det_bareiss, det_cofactor, det_modular, det_symbolic, multiplicity, product_formula, varchenko_matrix,
    verify_factorization, DetConfig, DetMode,
};
use varchenko_core::{
    central_apartment_around, enumerate_apartments, enumerate_faces, Apartment, Arrangement, FaceComplex, FaceId,
    Monomial, Polynomial, Sign, VarId,
};

fn small_corpus() -> Vec<Arrangement> {
    let mut all = vec![corpus::r1(), corpus::crossing_lines(), corpus::generic3(), corpus::parallel2(), corpus::figure1()];
    all.extend(corpus::random_corpus(31, 2, 4, 3));
    all
}

fn all_apartments(arr: &Arrangement) -> Vec<Apartment> {
    let m = arr.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        let subset: Vec<usize> = (0..m).filter(|&h| mask >> h & 1 == 1).collect();
        out.extend(enumerate_apartments(arr, &subset).unwrap());
    }
    out
}

#[test]
fn tits_semigroup_laws() {
    for arr in small_corpus() {
        let c = enumerate_faces(&arr).unwrap();
        let e = tits_suite(&c, 200, 9, 200);
        assert!(e.passed(), "{e:?}");
    }
}

#[test]
fn opposite_is_an_involution() {
    for arr in small_corpus() {
        let c = enumerate_faces(&arr).unwrap();
        for pair in c.nested_pairs_to_chambers() {
            let o = c.opposite_through(pair.lower, pair.upper).unwrap();
            assert!(c.is_chamber(o));
            assert_eq!(c.opposite_through(pair.lower, o).unwrap(), pair.upper);
            assert_eq!(c.tits_product(pair.lower, o).unwrap(), o);
        }
    }
}

#[test]
fn apartments_partition_chambers() {
    for arr in small_corpus() {
        let c = enumerate_faces(&arr).unwrap();
        let m = arr.len();
        for mask in 0u32..(1 << m) {
            let subset: Vec<usize> = (0..m).filter(|&h| mask >> h & 1 == 1).collect();
            let aps = enumerate_apartments(&arr, &subset).unwrap();
            let mut seen = BTreeSet::new();
            for k in &aps {
                for ch in k.chambers_in(&c) {
                    assert!(seen.insert(ch), "chamber in two apartments");
                }
                for f in k.faces_in(&c) {
                    for g in c.ids().filter(|&g| c.leq(f, g)) {
                        assert!(k.contains(c.signs(g).signs()));
                    }
                }
                assert!(!k.chambers_in(&c).is_empty());
            }
            assert_eq!(seen.len(), c.chambers().len());
        }
    }
}

#[test]
fn central_apartments_are_central() {
    for arr in small_corpus() {
        let c = enumerate_faces(&arr).unwrap();
        for e in c.ids().filter(|&f| !c.is_chamber(f)) {
            let k = central_apartment_around(&c, e).unwrap();
            let zeros = c.signs(e).zero_set();
            assert!(k.contains(c.signs(e).signs()));
            for f in k.faces_in(&c) {
                for h in c.signs(f).zero_set() {
                    assert!(zeros.contains(&h));
                }
            }
        }
    }
}

fn kronecker(a: &[Polynomial; 4], b: &[Polynomial; 4]) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            out.push(&a[(i / 2) * 2 + j / 2] * &b[(i % 2) * 2 + j % 2]);
        }
    }
    out
}

#[test]
fn crossing_lines_matrix_is_a_kronecker_product() {
    let c = enumerate_faces(&corpus::crossing_lines()).unwrap();
    let m = varchenko_matrix(&c, c.chambers()).unwrap();
    let block = |h: usize| {
        [Polynomial::one(), Polynomial::var(VarId::minus(h)), Polynomial::var(VarId::plus(h)), Polynomial::one()]
    };
    assert_eq!(m.entries(), kronecker(&block(0), &block(1)).as_slice());
    let one_minus = |h| &Polynomial::one() - &(&Polynomial::var(VarId::plus(h)) * &Polynomial::var(VarId::minus(h)));
    let expected = &one_minus(0).pow(2) * &one_minus(1).pow(2);
    assert_eq!(det_cofactor(m.entries(), 4), expected);
}

#[test]
fn matrix_entries_have_the_right_shape() {
    for arr in small_corpus() {
        let c = enumerate_faces(&arr).unwrap();
        varchenko_matrix(&c, c.chambers()).unwrap().check_shape().unwrap();
    }
}

#[test]
fn cofactor_and_bareiss_agree() {
    for arr in small_corpus() {
        let c = enumerate_faces(&arr).unwrap();
        for k in all_apartments(&arr) {
            let chambers = k.chambers_in(&c);
            if chambers.len() > 7 {
                continue;
            }
            let m = varchenko_matrix(&c, &chambers).unwrap();
            let a = det_cofactor(m.entries(), m.size());
            let b = det_bareiss(m.entries().to_vec(), m.size()).unwrap();
            assert_eq!(a, b);
            assert!(a.constant_term() == 1.into());
        }
    }
}

#[test]
fn factorization_holds_on_every_apartment() {
    let cfg = DetConfig::default();
    for arr in small_corpus() {
        let c = enumerate_faces(&arr).unwrap();
        for k in all_apartments(&arr) {
            let e = verify_factorization(&c, &k, &cfg);
            assert!(e.passed(), "{k}: {e:?}");
        }
    }
}

#[test]
fn modular_trials_agree_with_symbolic_determinant() {
    let p = varchenko_core::modp::DEFAULT_PRIME;
    for arr in [corpus::generic3(), corpus::figure1()] {
        let c = enumerate_faces(&arr).unwrap();
        let m = varchenko_matrix(&c, c.chambers()).unwrap();
        let det = det_symbolic(&m).unwrap();
        for t in det_modular(&m, 3, 5, p) {
            assert_eq!(det.eval_mod_p(|v| t.assignment.value(v), p), t.value);
        }
    }
    let c = enumerate_faces(&corpus::generic3()).unwrap();
    let cfg = DetConfig { mode: DetMode::Modular, seed: 11, ..DetConfig::default() };
    assert!(verify_factorization(&c, &Apartment::whole_space(), &cfg).passed());
}

#[test]
fn multiplicities_agree_between_full_and_apartment_context() {
    for arr in small_corpus() {
        let c = enumerate_faces(&arr).unwrap();
        for k in all_apartments(&arr) {
            let inside = k.chambers_in(&c);
            for f in k.faces_in(&c).into_iter().filter(|&f| !c.is_chamber(f)) {
                for h in c.signs(f).zero_set() {
                    assert_eq!(
                        multiplicity(&c, f, h, &inside).unwrap(),
                        multiplicity(&c, f, h, c.chambers()).unwrap()
                    );
                }
            }
        }
    }
}

fn walls(c: &FaceComplex, k: &Apartment) -> Vec<FaceId> {
    k.faces_in(c).into_iter().filter(|&f| !c.is_chamber(f)).collect()
}

#[test]
fn leading_monomial_of_central_apartments() {
    for arr in small_corpus() {
        let c = enumerate_faces(&arr).unwrap();
        for e in c.ids().filter(|&f| !c.is_chamber(f)) {
            let k = central_apartment_around(&c, e).unwrap();
            let chambers = k.chambers_in(&c);
            if chambers.len() > 8 {
                continue;
            }
            let det = det_symbolic(&varchenko_matrix(&c, &chambers).unwrap()).unwrap();
            let b = weight(&c, e).unwrap();
            let expected = b.as_monomial().unwrap().pow((chambers.len() / 2) as u32);
            let (lead, coef) = det.leading_term().unwrap();
            assert_eq!(lead, &expected, "around {}", c.signs(e));
            assert!(coef == &1.into() || coef == &(-1).into());
            let product = product_formula(&c, &walls(&c, &k), &chambers).unwrap();
            assert_eq!(product.expand(), det);
        }
    }
}

#[test]
fn zeroing_facet_variables_splits_the_matrix() {
    for arr in small_corpus() {
        let c = enumerate_faces(&arr).unwrap();
        let m = varchenko_matrix(&c, c.chambers()).unwrap();
        for k in all_apartments(&arr) {
            let facets = k.facet_hyperplanes(&c);
            let vanish = |v: VarId| facets.contains(&v.hyperplane);
            for (i, &row) in c.chambers().iter().enumerate() {
                for (j, &col) in c.chambers().iter().enumerate() {
                    let a = k.contains(c.signs(row).signs());
                    let b = k.contains(c.signs(col).signs());
                    if a != b {
                        assert!(m.entry(i, j).substitute_zero(vanish).is_zero(), "{k}");
                    }
                }
            }
        }
    }
}

#[test]
fn monomial_ring_sanity() {
    let x = Monomial::var(VarId::new(0, Sign::Plus));
    assert_eq!(x.pow(3).degree(), 3);
}
