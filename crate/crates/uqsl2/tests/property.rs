//! Randomized property suites: q-integer identities, field axioms,
//! specialization homomorphism with a floating-point cross-check, PBW
//! associativity, Hopf axioms on random products, matrix-representation
//! oracles for the rewriting engine, and agreement of the elimination
//! path with an independent dense row reduction.

mod common;

use common::*;
use proptest::prelude::*;

use uqsl2::repmod::{make_t_abl, make_t_omega_k};
use uqsl2::scalars::{parse::parse_scalar, specialize, FieldMode, RationalFunction, Scalar};
use uqsl2::uq::UqAlgebra;

fn all_modes() -> Vec<FieldMode> {
    vec![
        FieldMode::Generic,
        FieldMode::root_of_unity(3).unwrap(),
        FieldMode::root_of_unity(4).unwrap(),
        FieldMode::root_of_unity(5).unwrap(),
        FieldMode::root_of_unity(8).unwrap(),
    ]
}

#[test]
fn q_integer_difference_identity() {
    // [m][n+1] - [n][m+1] = [m-n]
    for mode in all_modes() {
        for m in -20i64..=20 {
            for n in -20i64..=20 {
                let lhs = &(&mode.q_integer(m) * &mode.q_integer(n + 1))
                    - &(&mode.q_integer(n) * &mode.q_integer(m + 1));
                assert_eq!(lhs, mode.q_integer(m - n), "m={} n={} mode={}", m, n, mode);
            }
        }
    }
}

#[test]
fn q_integer_half_parameter_identity() {
    // [k+m][k-m+1] - [k-m][k+m+1] = [2m] for half-integers k <= 10,
    // m in -k..=k, written in twice-integer form
    for mode in [FieldMode::Generic, FieldMode::root_of_unity(3).unwrap()] {
        for twok in 0i64..=20 {
            let mut twom = -twok;
            while twom <= twok {
                let kpm = (twok + twom) / 2;
                let kmm = (twok - twom) / 2;
                let lhs = &(&mode.q_integer(kpm) * &mode.q_integer(kmm + 1))
                    - &(&mode.q_integer(kmm) * &mode.q_integer(kpm + 1));
                assert_eq!(lhs, mode.q_integer(twom), "twok={} twom={}", twok, twom);
                twom += 2;
            }
        }
    }
}

#[test]
fn field_axioms_randomized() {
    for mode in all_modes() {
        let mut rng = rng(7 + mode.p_prime().unwrap_or(0) as u64);
        for _ in 0..120 {
            let a = random_scalar(&mut rng, mode);
            let b = random_scalar(&mut rng, mode);
            let c = random_scalar(&mut rng, mode);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert_eq!(&a * &b, &b * &a);
            assert!((&a + &(-&a)).is_zero());
            let inv = a.invert().unwrap();
            assert!((&a * &inv).is_one());
        }
    }
}

#[test]
fn specialize_is_a_ring_homomorphism() {
    for p_prime in [3u32, 5, 8] {
        let mut rng = rng(100 + p_prime as u64);
        for _ in 0..100 {
            let x = pole_free_rational(&mut rng);
            let y = pole_free_rational(&mut rng);
            let sx = specialize(&x, p_prime).unwrap();
            let sy = specialize(&y, p_prime).unwrap();
            assert_eq!(specialize(&x.mul(&y), p_prime).unwrap(), sx.mul(&sy));
            assert_eq!(specialize(&x.add(&y), p_prime).unwrap(), sx.add(&sy));
        }
    }
}

fn pole_free_rational(rng: &mut rand::rngs::StdRng) -> RationalFunction {
    match random_scalar(rng, FieldMode::Generic) {
        Scalar::Rational(r) => r,
        Scalar::Cyclotomic(_) => unreachable!(),
    }
}

#[test]
fn specialize_matches_float_evaluation() {
    // the worked case first: q + q^-1 vanishes at a primitive 4th root,
    // visible both numerically (i - i) and in the exact residue
    let x = parse_scalar("q + q^-1", FieldMode::Generic).unwrap();
    let Scalar::Rational(x) = x else { unreachable!() };
    assert!(eval_rational_at_root(&x, 4).norm() < 1e-12);
    assert!(specialize(&x, 4).unwrap().is_zero());

    for p_prime in [3u32, 4, 5, 6, 8] {
        let mut rng = rng(4000 + p_prime as u64);
        for _ in 0..50 {
            let x = pole_free_rational(&mut rng);
            let exact = specialize(&x, p_prime).unwrap();
            let direct = eval_rational_at_root(&x, p_prime);
            let via_residue = eval_cyclotomic(&exact);
            let err = (direct - via_residue).norm();
            assert!(err < 1e-8, "p'={} err={}", p_prime, err);
        }
    }
}

#[test]
fn pbw_associativity_randomized() {
    for mode in [FieldMode::Generic, FieldMode::root_of_unity(5).unwrap()] {
        let alg = UqAlgebra::new(mode);
        let mut rng = rng(31 + mode.p_prime().unwrap_or(0) as u64);
        for _ in 0..100 {
            let a = random_uq_element(&mut rng, mode, 3);
            let b = random_uq_element(&mut rng, mode, 3);
            let c = random_uq_element(&mut rng, mode, 3);
            let ab_c = alg.multiply(&alg.multiply(&a, &b).unwrap(), &c).unwrap();
            let a_bc = alg.multiply(&a, &alg.multiply(&b, &c).unwrap()).unwrap();
            assert_eq!(ab_c, a_bc);
        }
    }
}

#[test]
fn hopf_axioms_on_random_products() {
    for mode in [FieldMode::Generic, FieldMode::root_of_unity(3).unwrap()] {
        let alg = UqAlgebra::new(mode);
        let mut rng = rng(57);
        for _ in 0..25 {
            // a product of up to three generators stays within degree 3
            let gens = [alg.e(), alg.f(), alg.k(1), alg.k(-1)];
            let mut x = alg.one();
            for _ in 0..rng.random_range(1..=3usize) {
                let pick = gens[rng.random_range(0..gens.len())].clone();
                x = alg.multiply(&x, &pick).unwrap();
            }
            assert!(alg.coassociativity_holds(&x).unwrap());
            assert!(alg.counit_laws_hold(&x).unwrap());
            assert!(alg.antipode_law_holds(&x).unwrap());
        }
    }
}

use rand::Rng;

#[test]
fn multiplication_matches_matrix_representation() {
    // normal forms act correctly: act(x * y) = act(x) act(y) on the
    // four-dimensional module with twok = 3, including the worked F^2 E^2
    let mode = FieldMode::Generic;
    let alg = UqAlgebra::new(mode);
    let m = make_t_omega_k(1, 3, mode).unwrap();

    let f2 = alg.power(&alg.f(), 2).unwrap();
    let e2 = alg.power(&alg.e(), 2).unwrap();
    let nf = alg.multiply(&f2, &e2).unwrap();
    assert_eq!(m.act(&nf), m.act(&f2).mul(&m.act(&e2)));

    let mut rng = rng(91);
    for _ in 0..60 {
        let x = random_uq_element(&mut rng, mode, 2);
        let y = random_uq_element(&mut rng, mode, 2);
        let xy = alg.multiply(&x, &y).unwrap();
        assert_eq!(m.act(&xy), m.act(&x).mul(&m.act(&y)));
    }
}

#[test]
fn elimination_agrees_with_dense_oracle() {
    // every finite module of dimension <= 6 the constructors can produce
    let mut cases = Vec::new();
    for omega in [1i8, -1] {
        for twok in 0..=5u32 {
            cases.push(make_t_omega_k(omega, twok, FieldMode::Generic).unwrap());
            let r5 = FieldMode::root_of_unity(5).unwrap();
            cases.push(make_t_omega_k(omega, twok, r5).unwrap());
        }
    }
    for p_prime in [3u32, 5] {
        let mode = FieldMode::root_of_unity(p_prime).unwrap();
        let mut rng = rng(600 + p_prime as u64);
        let zero = mode.zero();
        let one = mode.one();
        let mut params = vec![
            (zero.clone(), zero.clone(), one.clone()),
            (zero.clone(), one.clone(), mode.integer(2)),
            (one.clone(), zero.clone(), mode.integer(2)),
            (one.clone(), one.clone(), mode.integer(3)),
            (zero.clone(), zero.clone(), mode.q_pow(1)),
        ];
        for _ in 0..6 {
            params.push((
                random_scalar(&mut rng, mode),
                random_scalar(&mut rng, mode),
                random_scalar(&mut rng, mode),
            ));
        }
        for (a, b, lambda) in params {
            cases.push(make_t_abl(&a, &b, &lambda, mode).unwrap());
        }
    }
    let mut instances = 0;
    for m in cases {
        assert!(m.dim() <= 6);
        let report = uqsl2::cohomology::dirac_cohomology_finite(&m).unwrap();
        let (oracle_minus, oracle_plus) = oracle_cohomology_dims(&m);
        assert_eq!(
            (report.s_minus.len(), report.s_plus.len()),
            (oracle_minus, oracle_plus),
            "module {}",
            m.descriptor()
        );
        instances += 1;
    }
    assert!(instances >= 30);
}

#[test]
fn tensor_product_associativity_randomized() {
    use uqsl2::tensoralg::{TensorAlgebra, TensorElement};
    for mode in [FieldMode::Generic, FieldMode::root_of_unity(3).unwrap()] {
        let t = TensorAlgebra::new(mode);
        let mut rng = rng(73);
        for _ in 0..40 {
            let rand_tensor = |rng: &mut rand::rngs::StdRng| {
                let mut out = TensorElement::zero();
                for _ in 0..rng.random_range(1..=2usize) {
                    let i = rng.random_range(0..=1u32);
                    let j = rng.random_range(-1..=1i32);
                    let k = rng.random_range(0..=1u32);
                    let cliff = rng.random_range(0..4usize);
                    out.add_term((i, j, k), cliff, &random_scalar(rng, mode));
                }
                out
            };
            let a = rand_tensor(&mut rng);
            let b = rand_tensor(&mut rng);
            let c = rand_tensor(&mut rng);
            let ab_c = t.t_multiply(&t.t_multiply(&a, &b).unwrap(), &c).unwrap();
            let a_bc = t.t_multiply(&a, &t.t_multiply(&b, &c).unwrap()).unwrap();
            assert_eq!(ab_c, a_bc);
        }
    }
}

#[test]
fn delta_homomorphism_randomized() {
    use uqsl2::tensoralg::TensorAlgebra;
    use uqsl2::uq::UqKElement;
    for mode in [FieldMode::Generic, FieldMode::root_of_unity(5).unwrap()] {
        let t = TensorAlgebra::new(mode);
        let mut rng = rng(74);
        for _ in 0..40 {
            let rand_k_poly = |rng: &mut rand::rngs::StdRng| {
                let mut out = UqKElement::zero();
                for _ in 0..rng.random_range(1..=3usize) {
                    let j = rng.random_range(-3..=3i32);
                    out.add_term(j, &random_scalar(rng, mode));
                }
                out
            };
            let x = rand_k_poly(&mut rng);
            let y = rand_k_poly(&mut rng);
            let lhs = t
                .t_multiply(&t.delta(&x).unwrap(), &t.delta(&y).unwrap())
                .unwrap();
            assert_eq!(lhs, t.delta(&x.mul(&y)).unwrap());
        }
    }
}

#[test]
fn shared_algebra_is_usable_across_threads() {
    // the memo table is the only shared state; hammer it from several
    // threads and compare against a fresh single-threaded computation
    use uqsl2::uq::UqElement;
    let alg = std::sync::Arc::new(UqAlgebra::new(FieldMode::Generic));
    let handles: Vec<_> = (0..4u32)
        .map(|t| {
            let alg = std::sync::Arc::clone(&alg);
            std::thread::spawn(move || {
                let f = UqElement::monomial((0, 0, 3 + t % 2), FieldMode::Generic.one());
                let e = UqElement::monomial((3 + (t / 2) % 2, 0, 0), FieldMode::Generic.one());
                alg.multiply(&f, &e).unwrap()
            })
        })
        .collect();
    let results: Vec<UqElement> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    let fresh = UqAlgebra::new(FieldMode::Generic);
    for (t, got) in results.iter().enumerate() {
        let t = t as u32;
        let f = UqElement::monomial((0, 0, 3 + t % 2), FieldMode::Generic.one());
        let e = UqElement::monomial((3 + (t / 2) % 2, 0, 0), FieldMode::Generic.one());
        assert_eq!(got, &fresh.multiply(&f, &e).unwrap());
    }
}

#[test]
fn conjugation_relations_randomized() {
    // alpha(K^j) c(E0) alpha(K^-j) = q^{2j} c(E0) and the cF analogue
    use uqsl2::clifford::{alpha_k_pow, cl_multiply, CliffordElement};
    let g = FieldMode::Generic;
    let ce = CliffordElement::c_e0(g);
    let cf = CliffordElement::c_f0(g);
    for j in -50i64..=50 {
        let a = alpha_k_pow(g, j);
        let a_inv = alpha_k_pow(g, -j);
        let conj_e = cl_multiply(&cl_multiply(&a, &ce), &a_inv);
        assert_eq!(conj_e, ce.scale(&g.q_pow(2 * j)));
        let conj_f = cl_multiply(&cl_multiply(&a, &cf), &a_inv);
        assert_eq!(conj_f, cf.scale(&g.q_pow(-2 * j)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn scalar_parse_display_roundtrip(exps in proptest::collection::vec((-4i64..=4, -5i64..=5), 1..4)) {
        let g = FieldMode::Generic;
        let mut value = g.zero();
        for (e, c) in exps {
            value = &value + &(&g.integer(c) * &g.q_pow(e));
        }
        let text = value.to_string();
        let parsed = parse_scalar(&text, g).unwrap();
        prop_assert_eq!(parsed, value);
    }

    #[test]
    fn cyclotomic_parse_display_roundtrip(exps in proptest::collection::vec((-6i64..=6, -5i64..=5), 1..4)) {
        let mode = FieldMode::root_of_unity(5).unwrap();
        let mut value = mode.zero();
        for (e, c) in exps {
            value = &value + &(&mode.integer(c) * &mode.q_pow(e));
        }
        let text = value.annotated();
        let parsed = parse_scalar(&text, mode).unwrap();
        prop_assert_eq!(parsed, value);
    }
}
