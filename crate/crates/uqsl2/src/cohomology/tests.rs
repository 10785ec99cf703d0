use super::*;
use crate::repmod::{make_t_abl, make_t_omega_k, make_verma};
use crate::scalars::FieldMode;
use crate::tensoralg::TensorAlgebra;

fn g() -> FieldMode {
    FieldMode::Generic
}

fn r(p_prime: u32) -> FieldMode {
    FieldMode::root_of_unity(p_prime).unwrap()
}

#[test]
fn t_omega_k_generic_two_classes() {
    for omega in [1i8, -1] {
        for twok in [0u32, 1, 4] {
            let m = make_t_omega_k(omega, twok, g()).unwrap();
            let report = dirac_cohomology_finite(&m).unwrap();
            assert_eq!(report.total_dim, Some(2));
            assert_eq!(report.s_minus.len(), 1);
            assert_eq!(report.s_plus.len(), 1);
            assert_eq!(report.s_minus[0].vector, m.labels()[0]);
            assert_eq!(report.s_plus[0].vector, m.labels()[m.dim() - 1]);
            let om = g().integer(omega as i64);
            let expected_minus = &om * &g().q_pow(-(twok as i64) - 1);
            let expected_plus = &om * &g().q_pow(twok as i64 + 1);
            assert_eq!(report.s_minus[0].eigenvalue, expected_minus.to_string());
            assert_eq!(report.s_plus[0].eigenvalue, expected_plus.to_string());
        }
    }
}

#[test]
fn cyclic_module_has_zero_cohomology() {
    let mode = r(5);
    let m = make_t_abl(&mode.one(), &mode.one(), &mode.integer(2), mode).unwrap();
    let report = dirac_cohomology_finite(&m).unwrap();
    assert_eq!(report.total_dim, Some(0));
    assert!(report.s_minus.is_empty());
    assert!(report.s_plus.is_empty());
    assert!(report.notes.is_empty());
}

#[test]
fn semicyclic_modules_have_vanishing_cohomology() {
    // For b nonzero F closes the cycle (F v_{p-1} = b v_0) and is
    // bijective, so the kernel class v_0 (x) s_1 is a boundary; the exact
    // cohomology is zero even though Ker(E) is one-dimensional.
    let mode = r(5);
    let m = make_t_abl(&mode.zero(), &mode.one(), &mode.integer(2), mode).unwrap();
    assert_eq!(kernel(m.mat_e()).len(), 1);
    assert_eq!(rank(m.mat_f()), m.dim());
    let report = dirac_cohomology_finite(&m).unwrap();
    assert_eq!(report.total_dim, Some(0));
    assert!(report.s_plus.is_empty());
    assert_eq!(report.notes.len(), 1);
    assert!(report.notes[0].contains("bijective"));

    // mirror case: a nonzero makes E bijective and kills Ker(F)
    let m = make_t_abl(&mode.one(), &mode.zero(), &mode.integer(2), mode).unwrap();
    assert_eq!(kernel(m.mat_f()).len(), 1);
    assert_eq!(rank(m.mat_e()), m.dim());
    let report = dirac_cohomology_finite(&m).unwrap();
    assert_eq!(report.total_dim, Some(0));
    assert!(report.s_minus.is_empty());
}

#[test]
fn t_zero_zero_lambda_eigenvalues_carry_lambda_factor() {
    // with a = b = 0 both extreme classes survive and the computed
    // delta(K)-eigenvalue is lambda*q on each of them
    let mode = r(5);
    let lambda = mode.integer(3);
    let m = make_t_abl(&mode.zero(), &mode.zero(), &lambda, mode).unwrap();
    let report = dirac_cohomology_finite(&m).unwrap();
    assert_eq!(report.total_dim, Some(2));
    assert_eq!(report.s_plus[0].vector, "v_0");
    assert_eq!(report.s_minus[0].vector, "v_4");
    let expected = &lambda * &mode.q_pow(1);
    assert_eq!(report.s_plus[0].eigenvalue, expected.to_string());
    assert_eq!(report.s_minus[0].eigenvalue, expected.to_string());
    assert_eq!(report.notes.len(), 1);
    assert!(report.notes[0].contains("lambda*q"));
}

#[test]
fn indecomposable_example_at_root_three() {
    let mode = r(3);
    let m = make_t_abl(&mode.zero(), &mode.zero(), &mode.one(), mode).unwrap();
    let report = dirac_cohomology_finite(&m).unwrap();
    assert_eq!(report.total_dim, Some(2));
    assert_eq!(report.s_minus.len(), 1);
    assert_eq!(report.s_minus[0].vector, "v_2");
    assert_eq!(report.s_plus.len(), 1);
    assert_eq!(report.s_plus[0].vector, "v_0");
    // with lambda = 1 both eigenvalues are exactly q
    assert_eq!(report.s_minus[0].eigenvalue, mode.q_pow(1).to_string());
    assert_eq!(report.s_plus[0].eigenvalue, mode.q_pow(1).to_string());
}

#[test]
fn verma_lambda_zero_at_root_three() {
    let m = make_verma(0, 20, r(3)).unwrap();
    let report = dirac_cohomology_window(&m).unwrap();
    assert_eq!(report.total_dim, Some(1));
    assert!(report.s_minus.is_empty());
    assert_eq!(report.s_plus.len(), 1);
    assert_eq!(report.s_plus[0].vector, "v_0");
    assert_eq!(report.s_plus[0].eigenvalue, r(3).q_pow(1).to_string());
    assert!(report.infinite_hint.is_none());
    let cw = report.certified_window.unwrap();
    assert_eq!(cw.window, 20);
    assert_eq!(cw.s_plus_t_max, 20);
    assert_eq!(cw.s_minus_t_max, 19);
}

#[test]
fn verma_kernels_match_expected_pattern_at_root_three() {
    // lambda = 0, p' = 3: Ker(F) = {v_{-4-6i}} and Im(E) = Im(F) in-window
    let m = make_verma(0, 20, r(3)).unwrap();
    let ker_f: Vec<usize> = (0..=20).filter(|&t| m.f_coeff(t).is_zero()).collect();
    let expected: Vec<usize> = (0..=20).filter(|t| t % 3 == 2).collect();
    assert_eq!(ker_f, expected);
    for t in ker_f {
        assert_eq!(m.label(t), format!("v_{}", -4 - 6 * (t as i64 - 2) / 3));
    }
    // Im(E) at t needs e(t+1) != 0; Im(F) at t needs t >= 1, f(t-1) != 0
    let im_e: Vec<usize> = (0..20).filter(|&t| !m.e_coeff(t + 1).is_zero()).collect();
    let im_f: Vec<usize> = (1..20).filter(|&t| !m.f_coeff(t - 1).is_zero()).collect();
    // in-window and away from the t = 0 edge the two images agree
    let im_e_interior: Vec<usize> = im_e.into_iter().filter(|&t| t >= 1).collect();
    assert_eq!(im_e_interior, im_f);
}

#[test]
fn verma_lambda_one_at_root_three() {
    let m = make_verma(1, 20, r(3)).unwrap();
    let report = dirac_cohomology_window(&m).unwrap();
    assert_eq!(report.total_dim, Some(1));
    assert_eq!(report.s_plus.len(), 1);
    assert_eq!(report.s_plus[0].vector, "v_1");
    assert!(report.s_minus.is_empty());
}

#[test]
fn verma_lambda_two_at_root_three_is_periodic() {
    let m = make_verma(2, 20, r(3)).unwrap();
    let report = dirac_cohomology_window(&m).unwrap();
    assert_eq!(report.total_dim, None);
    let hint = report.infinite_hint.unwrap();
    assert_eq!(hint.weight_period, 6);
    let plus: Vec<String> = report.s_plus.iter().map(|c| c.vector.clone()).collect();
    let expected_plus: Vec<String> = (0..=6).map(|i| format!("v_{}", 2 - 6 * i)).collect();
    assert_eq!(plus, expected_plus);
    // the s_{-1} side is certified only through t = 19, giving six classes
    let minus: Vec<String> = report.s_minus.iter().map(|c| c.vector.clone()).collect();
    let expected_minus: Vec<String> = (0..=5).map(|i| format!("v_{}", -2 - 6 * i)).collect();
    assert_eq!(minus, expected_minus);
}

#[test]
fn generic_verma_highest_weight_class() {
    for lambda in [-3i64, -2, -1, 5, 6, 7, 8] {
        let m = make_verma(lambda, 20, g()).unwrap();
        let report = dirac_cohomology_window(&m).unwrap();
        assert_eq!(report.total_dim, Some(1), "lambda = {}", lambda);
        assert_eq!(report.s_plus.len(), 1);
        assert_eq!(report.s_plus[0].vector, format!("v_{}", lambda));
        assert_eq!(
            report.s_plus[0].eigenvalue,
            g().q_pow(lambda + 1).to_string()
        );
        assert!(report.s_minus.is_empty());
        assert!(report.infinite_hint.is_none());
    }
}

#[test]
fn euler_characteristic_consistency() {
    let mode = r(5);
    let modules = vec![
        make_t_omega_k(1, 3, g()).unwrap(),
        make_t_omega_k(-1, 4, mode).unwrap(),
        make_t_abl(&mode.zero(), &mode.one(), &mode.integer(2), mode).unwrap(),
        make_t_abl(&mode.one(), &mode.one(), &mode.integer(3), mode).unwrap(),
    ];
    for m in modules {
        let report = dirac_cohomology_finite(&m).unwrap();
        let dim_ker_e = m.dim() - rank(m.mat_e());
        let dim_ker_f = m.dim() - rank(m.mat_f());
        let dim_im_f_cap_ker_e = {
            let ef = m.mat_e().mul(m.mat_f());
            let spanning: Vec<Vec<Scalar>> =
                kernel(&ef).iter().map(|u| m.mat_f().apply(u)).collect();
            elim::echelon_span(&spanning, m.mode(), m.dim()).unwrap().len()
        };
        let dim_im_e_cap_ker_f = {
            let fe = m.mat_f().mul(m.mat_e());
            let spanning: Vec<Vec<Scalar>> =
                kernel(&fe).iter().map(|u| m.mat_e().apply(u)).collect();
            elim::echelon_span(&spanning, m.mode(), m.dim()).unwrap().len()
        };
        let expected =
            dim_ker_e - dim_im_f_cap_ker_e + dim_ker_f - dim_im_e_cap_ker_f;
        assert_eq!(report.total_dim, Some(expected));
    }
}

#[test]
fn delta_k_eigenvalue_rule_on_tensor_matrix() {
    // the 2n x 2n matrix of delta(K) acts on v (x) s_{+-1} by q^{+-1}
    // times the K-eigenvalue
    let m = make_t_omega_k(1, 2, g()).unwrap();
    let t = TensorAlgebra::new(g());
    let delta_k = t
        .delta(&crate::uq::UqKElement::monomial(1, g().one()))
        .unwrap();
    let mat = m.act_tensor(&delta_k);
    let n = m.dim();
    for i in 0..n {
        let mu = m.mat_k()[(i, i)].clone();
        assert_eq!(mat[(i, i)], &g().q_pow(-1) * &mu);
        assert_eq!(mat[(n + i, n + i)], &g().q_pow(1) * &mu);
    }
}

#[test]
fn d_squared_on_module_matches_tensor_identity() {
    for mode in [g(), r(3), r(5)] {
        let t = TensorAlgebra::new(mode);
        let rhs = t.d_squared_rhs().unwrap();
        let modules = if mode.is_root_of_unity() {
            vec![
                make_t_omega_k(1, 1, mode).unwrap(),
                make_t_abl(&mode.one(), &mode.integer(2), &mode.integer(3), mode).unwrap(),
            ]
        } else {
            vec![make_t_omega_k(-1, 3, mode).unwrap()]
        };
        for m in modules {
            let d = dirac_action_matrix(&m);
            let lhs = d.mul(&d);
            let rhs_mat = m.act_tensor(&rhs);
            assert_eq!(lhs, rhs_mat, "mode {}", mode);
        }
    }
}

#[test]
fn dirac_action_matrix_agrees_with_act_tensor() {
    let m = make_t_omega_k(1, 2, g()).unwrap();
    let t = TensorAlgebra::new(g());
    assert_eq!(dirac_action_matrix(&m), m.act_tensor(&t.dirac()));
}

#[test]
fn infinitesimal_character_for_t_omega_k() {
    let alg = crate::uq::UqAlgebra::new(g());
    for omega in [1i8, -1] {
        for twok in 0..=5u32 {
            let m = make_t_omega_k(omega, twok, g()).unwrap();
            let check = infinitesimal_character_check(&m, &alg).unwrap();
            assert!(check.ok, "omega={} twok={}", omega, twok);
            assert_eq!(check.comparisons.len(), 2);
        }
    }
    // trivial module: scalar 0 at eigenvalue q
    let m = make_t_omega_k(1, 0, g()).unwrap();
    let check = infinitesimal_character_check(&m, &alg).unwrap();
    assert_eq!(check.casimir_scalar, "0");
    assert_eq!(check.comparisons[1].eigenvalue, "q");
}

#[test]
fn infinitesimal_character_tabl() {
    let mode = r(5);
    let alg = crate::uq::UqAlgebra::new(mode);
    // semicyclic: Casimir acts as a scalar; the check is vacuous since
    // the cohomology vanishes
    let m = make_t_abl(&mode.zero(), &mode.one(), &mode.integer(2), mode).unwrap();
    let check = infinitesimal_character_check(&m, &alg).unwrap();
    assert!(check.ok);
    assert!(check.comparisons.is_empty());

    // a = b = 0: two classes, both at eigenvalue lambda*q, both matching
    // the Casimir scalar
    let m = make_t_abl(&mode.zero(), &mode.zero(), &mode.integer(2), mode).unwrap();
    let check = infinitesimal_character_check(&m, &alg).unwrap();
    assert!(check.ok);
    assert_eq!(check.comparisons.len(), 2);
}

#[test]
fn report_roundtrips_through_json() {
    let m = make_verma(2, 20, r(3)).unwrap();
    let report = dirac_cohomology_window(&m).unwrap();
    let json = serde_json::to_string(&report).unwrap();
    let back: DiracCohomologyReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
}
