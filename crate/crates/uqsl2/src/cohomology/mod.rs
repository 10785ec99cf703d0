//! Dirac cohomology H_D(M) = Ker(D)/(Im(D) cap Ker(D)) on M (x) S,
//! computed through the weight decomposition
//!
//! ```text
//! H_D(M) = Ker(F)/(Ker(F) cap Im(E)) (x) s_{-1}
//!        + Ker(E)/(Ker(E) cap Im(F)) (x) s_1,
//! ```
//!
//! with the delta(K)-eigenvalue of a class equal to q^{-1} (s_{-1} side)
//! or q^{+1} (s_1 side) times the K-eigenvalue of its representative.
//!
//! Finite modules go through exact elimination; windowed modules are
//! handled weight by weight, certifying the s_1 side on t = 0..=N and the
//! s_{-1} side on t = 0..=N-1 (membership of weight t in Im(E) needs
//! weight t+1). When the in-window class pattern repeats at least twice
//! at a root of unity, the report flags an infinite answer with the
//! detected weight period instead of a total dimension.

pub mod elim;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use elim::{image, kernel, quotient_basis, rank, rref_in_place};

use crate::matrix::ExactMatrix;
use crate::report::{ModeInfo, SCHEMA_VERSION};
use crate::repmod::{
    check_relations_finite, check_relations_window, BuiltModule, FiniteModule,
    GradedWindowModule, ModuleDescriptor,
};
use crate::scalars::{Scalar, ScalarError};
use crate::uq::{UqAlgebra, UqError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("defining relations failed for the module")]
    RelationCheckFailed,
    #[error("the Casimir element does not act as a scalar")]
    NotInfinitesimalCharacter,
    #[error("a cohomology representative is not a K-weight vector")]
    NonWeightRepresentative,
    #[error(transparent)]
    Uq(#[from] UqError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// One cohomology class: a rendered representative and its exact
/// delta(K)-eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CohClass {
    pub vector: String,
    pub eigenvalue: String,
}

/// Index ranges (in the window coordinate t) on which each summand is
/// certified exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CertifiedWindow {
    pub window: usize,
    pub s_plus_t_max: usize,
    pub s_minus_t_max: usize,
}

/// Evidence of an infinite answer: the class pattern repeats with this
/// period in the weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InfiniteHint {
    pub weight_period: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DiracCohomologyReport {
    pub schema_version: u32,
    pub module: String,
    pub mode: ModeInfo,
    pub s_minus: Vec<CohClass>,
    pub s_plus: Vec<CohClass>,
    /// Total dimension; absent when the window shows a repeating pattern.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub total_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certified_window: Option<CertifiedWindow>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub infinite_hint: Option<InfiniteHint>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

/// Exact cohomology data of a finite module, before rendering.
#[derive(Clone, Debug)]
pub struct FiniteCohomology {
    /// (representative in module coordinates, delta(K)-eigenvalue)
    pub s_minus: Vec<(Vec<Scalar>, Scalar)>,
    pub s_plus: Vec<(Vec<Scalar>, Scalar)>,
}

fn k_eigenvalue(m: &FiniteModule, v: &[Scalar]) -> Result<Scalar, CohomologyError> {
    let image = m.mat_k().apply(v);
    let idx = v
        .iter()
        .position(|c| !c.is_zero())
        .ok_or(CohomologyError::NonWeightRepresentative)?;
    let mu = &image[idx] * &v[idx].invert()?;
    for (w, x) in image.iter().zip(v.iter()) {
        if w != &(&mu * x) {
            return Err(CohomologyError::NonWeightRepresentative);
        }
    }
    Ok(mu)
}

fn render_vector(labels: &[String], v: &[Scalar]) -> String {
    let mut parts = Vec::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            parts.push(labels[i].clone());
        } else {
            parts.push(format!("({})*{}", c, labels[i]));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// The exact classes of H_D for a finite module.
///
/// # Errors
/// `RelationCheckFailed` when the module data violates the defining
/// relations.
pub fn dirac_cohomology_classes(m: &FiniteModule) -> Result<FiniteCohomology, CohomologyError> {
    if !check_relations_finite(m) {
        return Err(CohomologyError::RelationCheckFailed);
    }
    let mode = m.mode();
    let mat_e = m.mat_e();
    let mat_f = m.mat_f();

    // Ker F cap Im E = E(Ker(F E)), reduced to an echelon basis.
    let ker_f = kernel(mat_f);
    let fe = mat_f.mul(mat_e);
    let sub_minus: Vec<Vec<Scalar>> = kernel(&fe).iter().map(|u| mat_e.apply(u)).collect();
    let sub_minus = elim::echelon_span(&sub_minus, mode, m.dim())?;
    let reps_minus = quotient_basis(&sub_minus, &ker_f, mode)?;

    // Ker E cap Im F = F(Ker(E F)).
    let ker_e = kernel(mat_e);
    let ef = mat_e.mul(mat_f);
    let sub_plus: Vec<Vec<Scalar>> = kernel(&ef).iter().map(|u| mat_f.apply(u)).collect();
    let sub_plus = elim::echelon_span(&sub_plus, mode, m.dim())?;
    let reps_plus = quotient_basis(&sub_plus, &ker_e, mode)?;

    let q = mode.q_pow(1);
    let q_inv = mode.q_pow(-1);
    let s_minus = reps_minus
        .into_iter()
        .map(|v| {
            let mu = k_eigenvalue(m, &v)?;
            Ok((v, &q_inv * &mu))
        })
        .collect::<Result<Vec<_>, CohomologyError>>()?;
    let s_plus = reps_plus
        .into_iter()
        .map(|v| {
            let mu = k_eigenvalue(m, &v)?;
            Ok((v, &q * &mu))
        })
        .collect::<Result<Vec<_>, CohomologyError>>()?;
    Ok(FiniteCohomology { s_minus, s_plus })
}

fn tabl_notes(desc: &ModuleDescriptor, total: usize) -> Vec<String> {
    let ModuleDescriptor::Tabl { a, b, lambda } = desc else {
        return Vec::new();
    };
    let mut notes = Vec::new();
    if total > 0 {
        notes.push(format!(
            "delta(K)-eigenvalue on each class equals lambda*q (here lambda = {}); \
             it reduces to q exactly when lambda = 1",
            crate::repmod::compact_scalar(lambda)
        ));
    } else if a.is_zero() && !b.is_zero() {
        notes.push(
            "F is bijective when b is nonzero (F v_{p-1} = b v_0 closes the cycle), \
             so Im(F) is the whole module and every Ker(E) class is a boundary"
                .to_string(),
        );
    } else if !a.is_zero() && b.is_zero() {
        notes.push(
            "E is bijective when a is nonzero (E v_0 = a v_{p-1} closes the cycle), \
             so Im(E) is the whole module and every Ker(F) class is a boundary"
                .to_string(),
        );
    }
    notes
}

/// Dirac cohomology of a finite module as a serializable report.
pub fn dirac_cohomology_finite(
    m: &FiniteModule,
) -> Result<DiracCohomologyReport, CohomologyError> {
    let classes = dirac_cohomology_classes(m)?;
    let render = |side: &[(Vec<Scalar>, Scalar)]| {
        side.iter()
            .map(|(v, eig)| CohClass {
                vector: render_vector(m.labels(), v),
                eigenvalue: eig.to_string(),
            })
            .collect::<Vec<_>>()
    };
    let s_minus = render(&classes.s_minus);
    let s_plus = render(&classes.s_plus);
    let total = s_minus.len() + s_plus.len();
    let notes = tabl_notes(m.descriptor(), total);
    Ok(DiracCohomologyReport {
        schema_version: SCHEMA_VERSION,
        module: m.descriptor().to_string(),
        mode: m.mode().into(),
        s_minus,
        s_plus,
        total_dim: Some(total),
        certified_window: None,
        infinite_hint: None,
        notes,
    })
}

/// In-window cohomology indices of a graded window module: the s_1 side
/// over t = 0..=N and the s_{-1} side over t = 0..=N-1.
pub fn window_cohomology_indices(m: &GradedWindowModule) -> (Vec<usize>, Vec<usize>) {
    let n = m.window();
    let in_ker_e = |t: usize| t == 0 || m.e_coeff(t).is_zero();
    let in_im_f = |t: usize| t >= 1 && !m.f_coeff(t - 1).is_zero();
    let s_plus: Vec<usize> = (0..=n).filter(|&t| in_ker_e(t) && !in_im_f(t)).collect();
    let in_ker_f = |t: usize| m.f_coeff(t).is_zero();
    let in_im_e = |t: usize| !m.e_coeff(t + 1).is_zero();
    let s_minus: Vec<usize> = (0..n).filter(|&t| in_ker_f(t) && !in_im_e(t)).collect();
    (s_minus, s_plus)
}

fn is_periodic(set: &[usize], period: usize, t_max: usize) -> bool {
    if period == 0 || t_max < period {
        return false;
    }
    let member = |t: usize| set.binary_search(&t).is_ok();
    (0..=t_max - period).all(|t| member(t) == member(t + period))
}

/// Smallest period (in t) under which both certified class patterns
/// repeat at least twice inside the window; `None` if there is none or
/// both sides are empty.
fn detect_period(
    s_minus: &[usize],
    s_plus: &[usize],
    s_minus_t_max: usize,
    s_plus_t_max: usize,
) -> Option<usize> {
    if s_minus.is_empty() && s_plus.is_empty() {
        return None;
    }
    // A period must be observed at least twice inside both certified ranges.
    let t_min = s_minus_t_max.min(s_plus_t_max);
    for period in 1..=(t_min + 1) / 2 {
        if is_periodic(s_plus, period, s_plus_t_max)
            && is_periodic(s_minus, period, s_minus_t_max)
        {
            return Some(period);
        }
    }
    None
}

/// Dirac cohomology of a windowed module, weight by weight.
pub fn dirac_cohomology_window(
    m: &GradedWindowModule,
) -> Result<DiracCohomologyReport, CohomologyError> {
    if !check_relations_window(m) {
        return Err(CohomologyError::RelationCheckFailed);
    }
    let mode = m.mode();
    let n = m.window();
    let (s_minus_ts, s_plus_ts) = window_cohomology_indices(m);
    let class = |t: usize, twist: i64| CohClass {
        vector: m.label(t),
        eigenvalue: mode.q_pow(m.weight_exponent(t) + twist).to_string(),
    };
    let s_minus: Vec<CohClass> = s_minus_ts.iter().map(|&t| class(t, -1)).collect();
    let s_plus: Vec<CohClass> = s_plus_ts.iter().map(|&t| class(t, 1)).collect();
    let period = detect_period(&s_minus_ts, &s_plus_ts, n - 1, n);
    let (total_dim, infinite_hint) = match period {
        Some(p) => (
            None,
            Some(InfiniteHint {
                weight_period: 2 * p as i64,
            }),
        ),
        None => (Some(s_minus.len() + s_plus.len()), None),
    };
    Ok(DiracCohomologyReport {
        schema_version: SCHEMA_VERSION,
        module: m.descriptor().to_string(),
        mode: mode.into(),
        s_minus,
        s_plus,
        total_dim,
        certified_window: Some(CertifiedWindow {
            window: n,
            s_plus_t_max: n,
            s_minus_t_max: n - 1,
        }),
        infinite_hint,
        notes: Vec::new(),
    })
}

/// Dispatch on the module kind.
pub fn dirac_cohomology(m: &BuiltModule) -> Result<DiracCohomologyReport, CohomologyError> {
    match m {
        BuiltModule::Finite(fm) => dirac_cohomology_finite(fm),
        BuiltModule::Window(wm) => dirac_cohomology_window(wm),
    }
}

/// One eigenvalue comparison inside the infinitesimal-character check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CharacterComparison {
    pub class: String,
    pub eigenvalue: String,
    pub zeta_casimir_value: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CharacterCheck {
    pub casimir_scalar: String,
    pub comparisons: Vec<CharacterComparison>,
    pub ok: bool,
}

/// Evaluate zeta(Cas_q) under K -> mu:
/// 2 (q - q^-1)^-2 ((mu + mu^-1) - (q + q^-1)).
pub fn zeta_casimir_at(mu: &Scalar) -> Result<Scalar, ScalarError> {
    let mode = mu.mode();
    let v = (&mode.q_pow(1) - &mode.q_pow(-1)).pow(-2)?;
    let inner = &(mu + &mu.invert()?) - &(&mode.q_pow(1) + &mode.q_pow(-1));
    Ok(&(&mode.integer(2) * &v) * &inner)
}

/// Check that the Casimir scalar of the module matches the evaluation of
/// zeta(Cas_q) at every delta(K)-eigenvalue in its Dirac cohomology.
///
/// # Errors
/// `NotInfinitesimalCharacter` when the Casimir does not act as a scalar.
pub fn infinitesimal_character_check(
    m: &FiniteModule,
    alg: &UqAlgebra,
) -> Result<CharacterCheck, CohomologyError> {
    let scalar = m
        .casimir_scalar(alg)
        .ok_or(CohomologyError::NotInfinitesimalCharacter)?;
    let classes = dirac_cohomology_classes(m)?;
    let mut comparisons = Vec::new();
    let mut ok = true;
    for (v, eig) in classes.s_minus.iter().chain(classes.s_plus.iter()) {
        let value = zeta_casimir_at(eig)?;
        let matches = value == scalar;
        ok &= matches;
        comparisons.push(CharacterComparison {
            class: render_vector(m.labels(), v),
            eigenvalue: eig.to_string(),
            zeta_casimir_value: value.to_string(),
            matches,
        });
    }
    Ok(CharacterCheck {
        casimir_scalar: scalar.to_string(),
        comparisons,
        ok,
    })
}

/// The 2 dim x 2 dim matrix of D on M (x) S.
pub fn dirac_action_matrix(m: &FiniteModule) -> ExactMatrix {
    let n = m.dim();
    let mode = m.mode();
    let mut out = ExactMatrix::zero(mode, 2 * n, 2 * n);
    // D(v (x) s_{-1}) = F v (x) s_1, D(v (x) s_1) = E v (x) s_{-1}
    for r in 0..n {
        for c in 0..n {
            if !m.mat_f()[(r, c)].is_zero() {
                out[(n + r, c)] = m.mat_f()[(r, c)].clone();
            }
            if !m.mat_e()[(r, c)].is_zero() {
                out[(r, n + c)] = m.mat_e()[(r, c)].clone();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests;
