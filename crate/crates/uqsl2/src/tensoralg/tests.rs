use super::*;
use crate::scalars::FieldMode;

fn generic() -> TensorAlgebra {
    TensorAlgebra::new(FieldMode::Generic)
}

fn root(p_prime: u32) -> TensorAlgebra {
    TensorAlgebra::new(FieldMode::root_of_unity(p_prime).unwrap())
}

#[test]
fn tensor_product_of_pure_tensors() {
    let t = generic();
    let m = t.mode();
    let x = TensorElement::pure(uq::KEY_E, CL_F, m.one());
    let y = TensorElement::pure(uq::KEY_F, CL_E, m.one());
    let prod = t.t_multiply(&x, &y).unwrap();
    // (E (x) cF)(F (x) cE) = EF (x) cF cE = EF (x) (1 - cEcF)
    let ef = t.uq().multiply(&t.uq().e(), &t.uq().f()).unwrap();
    let cfce = clifford::cl_multiply(
        &CliffordElement::c_f0(m),
        &CliffordElement::c_e0(m),
    );
    let expected = TensorElement::outer(&ef, &cfce);
    assert_eq!(prod, expected);
    assert_eq!(prod.coeff((1, 0, 1), CL_ONE), Some(&m.one()));
}

#[test]
fn one_is_identity() {
    let t = generic();
    let x = t.dirac();
    let one = TensorElement::one(t.mode());
    assert_eq!(t.t_multiply(&one, &x).unwrap(), x);
    assert_eq!(t.t_multiply(&x, &one).unwrap(), x);
}

#[test]
fn dirac_support() {
    for t in [generic(), root(3)] {
        let d = t.dirac();
        assert_eq!(d.term_count(), 2);
        assert!(d.coeff(uq::KEY_E, CL_F).unwrap().is_one());
        assert!(d.coeff(uq::KEY_F, CL_E).unwrap().is_one());
        assert!(d.has_no_k_only_terms());
    }
}

#[test]
fn delta_of_k_and_inverse() {
    let t = generic();
    let m = t.mode();
    let dk = t.delta(&UqKElement::monomial(1, m.one())).unwrap();
    let qmq = &m.q_pow(1) - &m.q_pow(-1);
    let mut expected = TensorElement::zero();
    expected.add_term(uq::KEY_K, CL_ONE, &m.q_pow(-1));
    expected.add_term(uq::KEY_K, CL_EF, &qmq);
    assert_eq!(dk, expected);

    let dki = t.delta(&UqKElement::monomial(-1, m.one())).unwrap();
    let prod = t.t_multiply(&dk, &dki).unwrap();
    assert_eq!(prod, TensorElement::one(m));
}

#[test]
fn delta_of_casimir_k() {
    // delta(Cas_q(k)) = (q+q^-1)(q^-1 K + q K^-1 - 2)/(q-q^-1)^2 (x) 1
    //                 + (q+q^-1)(K - K^-1)/(q-q^-1) (x) cEcF
    let t = generic();
    let m = t.mode();
    let lhs = t.delta(&t.uq().casimir_k()).unwrap();
    let qpq = &m.q_pow(1) + &m.q_pow(-1);
    let v2 = (&m.q_pow(1) - &m.q_pow(-1)).pow(-2).unwrap();
    let v1 = (&m.q_pow(1) - &m.q_pow(-1)).invert().unwrap();
    let mut expected = TensorElement::zero();
    expected.add_term(uq::KEY_K, CL_ONE, &(&(&qpq * &m.q_pow(-1)) * &v2));
    expected.add_term(uq::KEY_K_INV, CL_ONE, &(&(&qpq * &m.q_pow(1)) * &v2));
    expected.add_term(uq::KEY_ONE, CL_ONE, &(-&(&(&qpq * &m.integer(2)) * &v2)));
    expected.add_term(uq::KEY_K, CL_EF, &(&qpq * &v1));
    expected.add_term(uq::KEY_K_INV, CL_EF, &(-&(&qpq * &v1)));
    assert_eq!(lhs, expected);
}

#[test]
fn delta_is_a_homomorphism() {
    let t = generic();
    let m = t.mode();
    // a few Laurent polynomials in K of degree <= 3
    let mut x = UqKElement::zero();
    x.add_term(3, &m.q_integer(2));
    x.add_term(-1, &m.one());
    let mut y = UqKElement::zero();
    y.add_term(2, &m.q_pow(-1));
    y.add_term(0, &m.integer(-3));
    y.add_term(-3, &m.q_integer(3));
    let lhs = t
        .t_multiply(&t.delta(&x).unwrap(), &t.delta(&y).unwrap())
        .unwrap();
    let rhs = t.delta(&x.mul(&y)).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn d_squared_identity_all_modes() {
    for t in [generic(), root(3), root(4), root(5), root(6), root(8)] {
        let check = t.verify_d_squared().unwrap();
        assert!(check.ok, "mode {}", t.mode());
        assert!(check.difference.is_zero());
    }
}

#[test]
fn d_squared_checker_detects_perturbation() {
    let t = generic();
    let d = t.dirac();
    let lhs = t.t_multiply(&d, &d).unwrap();
    // replace the 1/2 Casimir coefficient by 1
    let m = t.mode();
    let rhs = t.d_squared_rhs().unwrap();
    let half = m.integer(2).invert().unwrap();
    let perturbed = rhs.add(&TensorElement::from_uq(&t.uq().casimir_q()).scale(&half));
    let difference = lhs.sub(&perturbed);
    assert!(!difference.is_zero());
}

#[test]
fn k_invariance_examples() {
    let t = generic();
    assert!(t.verify_k_invariance(&t.dirac()).unwrap());
    let e_tensor_one = TensorElement::from_uq(&t.uq().e());
    assert!(!t.verify_k_invariance(&e_tensor_one).unwrap());
    let ce = TensorElement::pure(uq::KEY_ONE, CL_E, t.mode().one());
    assert!(!t.verify_k_invariance(&ce).unwrap());
}

#[test]
fn zeta_of_casimir_matches_delta_form() {
    // zeta(Cas_q) = (2/(q+q^-1)) delta(Cas_q(k))
    //             - 2 (q+q^-1-2)/(q-q^-1)^2 (x) 1   (q + q^-1 nonzero)
    for t in [generic(), root(3), root(5), root(6), root(8)] {
        let m = t.mode();
        let lhs = t.zeta(&t.uq().casimir_q()).unwrap();
        let qpq = &m.q_pow(1) + &m.q_pow(-1);
        let delta_cas = t.delta(&t.uq().casimir_k()).unwrap();
        let coeff = &m.integer(2) * &qpq.invert().unwrap();
        let v = (&m.q_pow(1) - &m.q_pow(-1)).pow(-2).unwrap();
        let c = &(&m.integer(2) * &(&qpq - &m.integer(2))) * &v;
        let rhs = delta_cas
            .scale(&coeff)
            .sub(&TensorElement::one(m).scale(&c));
        assert_eq!(lhs, rhs, "mode {}", m);
    }
}

#[test]
fn zeta_of_central_powers_at_root() {
    let t = root(3);
    let k3 = t.uq().k(3);
    let expected = TensorElement::from_uq(&k3);
    assert_eq!(t.zeta(&k3).unwrap(), expected);

    let e3 = t.uq().power(&t.uq().e(), 3).unwrap();
    assert!(t.zeta(&e3).unwrap().is_zero());
}

#[test]
fn vogan_for_casimir() {
    for t in [generic(), root(3), root(4), root(5), root(6), root(8)] {
        let check = t.verify_vogan(&t.uq().casimir_q()).unwrap();
        assert!(check.ok(), "mode {}", t.mode());
        assert_eq!(check.witness, t.dirac());
    }
}

#[test]
fn vogan_for_root_generators() {
    let t = root(3);
    let e3 = t.uq().power(&t.uq().e(), 3).unwrap();
    let check = t.verify_vogan(&e3).unwrap();
    assert!(check.ok());
    assert_eq!(
        check.witness,
        TensorElement::pure((2, 0, 0), CL_E, t.mode().one())
    );

    let check = t.verify_vogan(&t.uq().k(3)).unwrap();
    assert!(check.ok());
    assert!(check.witness.is_zero());

    let f3 = t.uq().power(&t.uq().f(), 3).unwrap();
    assert!(t.verify_vogan(&f3).unwrap().ok());
    assert!(t.verify_vogan(&t.uq().k(-3)).unwrap().ok());
}

#[test]
fn vogan_for_products() {
    let t = root(3);
    let e3 = t.uq().power(&t.uq().e(), 3).unwrap();
    let z = t.uq().multiply(&t.uq().casimir_q(), &e3).unwrap();
    let check = t.verify_vogan(&z).unwrap();
    assert!(check.ok());
    assert!(t.verify_k_invariance(&check.witness).unwrap());
}

#[test]
fn vogan_rejects_unsupported() {
    let t = root(3);
    assert_eq!(
        t.verify_vogan(&t.uq().e()),
        Err(TensorError::Uq(UqError::NotCentral))
    );
    // central, but not a generator or pairwise product
    let cas = t.uq().casimir_q();
    let cas2 = t.uq().multiply(&cas, &cas).unwrap();
    let cas3 = t.uq().multiply(&cas2, &cas).unwrap();
    assert_eq!(
        t.verify_vogan(&cas3),
        Err(TensorError::UnsupportedCentralElement)
    );
}

#[test]
fn t_multiply_associativity_small() {
    let t = generic();
    let m = t.mode();
    let a = t.dirac();
    let mut b = TensorElement::pure(uq::KEY_K, CL_EF, m.q_pow(-1));
    b.add_term(uq::KEY_F, CL_F, &m.q_integer(2));
    let mut c = TensorElement::pure((1, -1, 0), CL_F, m.one());
    c.add_term(uq::KEY_ONE, CL_E, &m.integer(-2));
    let ab_c = t
        .t_multiply(&t.t_multiply(&a, &b).unwrap(), &c)
        .unwrap();
    let a_bc = t
        .t_multiply(&a, &t.t_multiply(&b, &c).unwrap())
        .unwrap();
    assert_eq!(ab_c, a_bc);
}

#[test]
fn suite_passes_everywhere() {
    for t in [generic(), root(3), root(4), root(5), root(6), root(8)] {
        let reports = t.verify_suite().unwrap();
        assert!(!reports.is_empty());
        for r in reports {
            assert!(r.ok, "{} failed in mode {}", r.name, t.mode());
        }
    }
}
