//! Weight-module constructors: the finite families T_{omega,k} (rescaled
//! basis) and T_{a,b,lambda}, and windowed Verma-type modules V_lambda,
//! together with relation checking, irreducibility predicates, and the
//! action of algebra elements as exact matrices.
//!
//! The (2k+1)-dimensional family is built in a diagonally rescaled basis
//! with E v_m = [k-m] v_{m+1} and F v_m = omega [k+m] v_{m-1}, which keeps
//! every matrix entry in the base field. The rescaling leaves K-eigenvalues,
//! kernels and images of E and F, and all cohomology data unchanged; the
//! basis-invariant products of consecutive E/F coefficients are preserved.

pub mod family;

use std::fmt;

use thiserror::Error;

use crate::clifford::{spin_matrix, CliffordElement};
use crate::matrix::ExactMatrix;
use crate::scalars::{FieldMode, Scalar, ScalarError};
use crate::tensoralg::TensorElement;
use crate::uq::UqElement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepmodError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("defining relations failed at construction")]
    RelationCheck,
    #[error("irreducibility is not defined for this family")]
    IrreducibilityNotApplicable,
    #[error("unknown module family '{0}'")]
    UnknownFamily(String),
    #[error("descriptor: {0}")]
    Descriptor(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Family tag plus parameters, rendered in the descriptor grammar
/// `Tok omega=<+1|-1> twok=<int>`, `Tabl a=<scalar> b=<scalar>
/// lambda=<scalar>`, `verma lambda=<int> window=<int>`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ModuleDescriptor {
    TOmegaK { omega: i8, twok: u32 },
    Tabl { a: Scalar, b: Scalar, lambda: Scalar },
    Verma { lambda: i64, window: usize },
}

/// Render a scalar without spaces so descriptors stay one shell word.
pub(crate) fn compact_scalar(s: &Scalar) -> String {
    s.to_string().replace(' ', "")
}

impl fmt::Display for ModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleDescriptor::TOmegaK { omega, twok } => {
                write!(
                    f,
                    "Tok omega={} twok={}",
                    if *omega >= 0 { "+1" } else { "-1" },
                    twok
                )
            }
            ModuleDescriptor::Tabl { a, b, lambda } => write!(
                f,
                "Tabl a={} b={} lambda={}",
                compact_scalar(a),
                compact_scalar(b),
                compact_scalar(lambda)
            ),
            ModuleDescriptor::Verma { lambda, window } => {
                write!(f, "verma lambda={} window={}", lambda, window)
            }
        }
    }
}

/// A finite-dimensional module given by exact generator matrices.
///
/// The defining relations and K K^-1 = 1 are verified at construction, so
/// a value of this type always satisfies them.
#[derive(Clone, Debug)]
pub struct FiniteModule {
    dim: usize,
    labels: Vec<String>,
    mat_e: ExactMatrix,
    mat_f: ExactMatrix,
    mat_k: ExactMatrix,
    mat_k_inv: ExactMatrix,
    mode: FieldMode,
    descriptor: ModuleDescriptor,
}

impl FiniteModule {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mat_e(&self) -> &ExactMatrix {
        &self.mat_e
    }

    pub fn mat_f(&self) -> &ExactMatrix {
        &self.mat_f
    }

    pub fn mat_k(&self) -> &ExactMatrix {
        &self.mat_k
    }

    pub fn mat_k_inv(&self) -> &ExactMatrix {
        &self.mat_k_inv
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn descriptor(&self) -> &ModuleDescriptor {
        &self.descriptor
    }

    /// The matrix of K^j.
    pub fn k_power(&self, j: i64) -> ExactMatrix {
        if j >= 0 {
            self.mat_k.pow(j as u32)
        } else {
            self.mat_k_inv.pow((-j) as u32)
        }
    }

    /// The matrix of a PBW element: sum of c * E^i K^j F^k actions.
    pub fn act(&self, x: &UqElement) -> ExactMatrix {
        let mut out = ExactMatrix::zero(self.mode, self.dim, self.dim);
        for ((i, j, k), c) in x.iter() {
            let mut m = self.mat_e.pow(*i);
            m = m.mul(&self.k_power(*j as i64));
            m = m.mul(&self.mat_f.pow(*k));
            out = out.add(&m.scale(c));
        }
        out
    }

    /// The 2 dim x 2 dim matrix of a tensor-algebra element on M (x) S,
    /// basis ordered as all v_i (x) s_{-1} then all v_i (x) s_1.
    pub fn act_tensor(&self, x: &TensorElement) -> ExactMatrix {
        let n = self.dim;
        let mut out = ExactMatrix::zero(self.mode, 2 * n, 2 * n);
        for ((key, cliff), c) in x.iter() {
            let m = self.act(&UqElement::monomial(*key, self.mode.one()));
            let s = spin_matrix(&CliffordElement::basis(self.mode, *cliff));
            for part_row in 0..2 {
                for part_col in 0..2 {
                    if s[part_row][part_col].is_zero() {
                        continue;
                    }
                    let factor = c * &s[part_row][part_col];
                    for r in 0..n {
                        for col in 0..n {
                            if m[(r, col)].is_zero() {
                                continue;
                            }
                            let idx = (part_row * n + r, part_col * n + col);
                            out[idx] = &out[idx] + &(&m[(r, col)] * &factor);
                        }
                    }
                }
            }
        }
        out
    }

    /// `Some(c)` if the normalized Casimir acts as c times the identity.
    pub fn casimir_scalar(&self, alg: &crate::uq::UqAlgebra) -> Option<Scalar> {
        self.act(&alg.casimir_q()).as_scalar_multiple_of_identity()
    }
}

/// A window t = 0..=N of a weight-graded module with one-dimensional
/// weight spaces, E: t -> t-1 and F: t -> t+1.
///
/// `f_coeff[N]` is the coefficient of the out-of-window step, kept so that
/// kernel membership of the last basis vector is still decided exactly.
/// Nothing about weight N's membership in Im(E) is stored; consumers must
/// treat the s_{-1}-side data at t = N as uncertified.
#[derive(Clone, Debug)]
pub struct GradedWindowModule {
    lambda: i64,
    window: usize,
    e_coeff: Vec<Scalar>,
    f_coeff: Vec<Scalar>,
    mode: FieldMode,
    descriptor: ModuleDescriptor,
}

impl GradedWindowModule {
    pub fn lambda(&self) -> i64 {
        self.lambda
    }

    /// The window bound N; indices run over t = 0..=N.
    pub fn window(&self) -> usize {
        self.window
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn descriptor(&self) -> &ModuleDescriptor {
        &self.descriptor
    }

    /// Coefficient of E: t -> t-1; zero at t = 0 (highest weight).
    pub fn e_coeff(&self, t: usize) -> &Scalar {
        &self.e_coeff[t]
    }

    /// Coefficient of F: t -> t+1; `t = N` steps out of the window.
    pub fn f_coeff(&self, t: usize) -> &Scalar {
        &self.f_coeff[t]
    }

    /// The K-eigenvalue exponent of basis vector t: lambda - 2t.
    pub fn weight_exponent(&self, t: usize) -> i64 {
        self.lambda - 2 * t as i64
    }

    pub fn label(&self, t: usize) -> String {
        format!("v_{}", self.weight_exponent(t))
    }
}

fn q_int_label(two_m: i64) -> String {
    if two_m % 2 == 0 {
        format!("{}", two_m / 2)
    } else {
        format!("{}/2", two_m)
    }
}

/// The (2k+1)-dimensional module T_{omega,k} in the rescaled basis:
/// K v_m = omega q^{2m} v_m, E v_m = [k-m] v_{m+1}, F v_m = omega [k+m]
/// v_{m-1}. `twok` is 2k, so half-integer k never leaves the integers.
pub fn make_t_omega_k(
    omega: i8,
    twok: u32,
    mode: FieldMode,
) -> Result<FiniteModule, RepmodError> {
    if omega != 1 && omega != -1 {
        return Err(RepmodError::InvalidParameter(format!(
            "omega must be +1 or -1, got {}",
            omega
        )));
    }
    let dim = twok as usize + 1;
    let omega_s = mode.integer(omega as i64);
    let mut mat_e = ExactMatrix::zero(mode, dim, dim);
    let mut mat_f = ExactMatrix::zero(mode, dim, dim);
    let mut mat_k = ExactMatrix::zero(mode, dim, dim);
    let mut mat_k_inv = ExactMatrix::zero(mode, dim, dim);
    let mut labels = Vec::with_capacity(dim);
    for r in 0..dim {
        let two_m = -(twok as i64) + 2 * r as i64;
        labels.push(format!("v_{}", q_int_label(two_m)));
        mat_k[(r, r)] = &omega_s * &mode.q_pow(two_m);
        mat_k_inv[(r, r)] = &omega_s * &mode.q_pow(-two_m);
        if r + 1 < dim {
            // E v_r = [2k - r] v_{r+1}
            mat_e[(r + 1, r)] = mode.q_integer(twok as i64 - r as i64);
        }
        if r > 0 {
            // F v_r = omega [r] v_{r-1}
            mat_f[(r - 1, r)] = &omega_s * &mode.q_integer(r as i64);
        }
    }
    let module = FiniteModule {
        dim,
        labels,
        mat_e,
        mat_f,
        mat_k,
        mat_k_inv,
        mode,
        descriptor: ModuleDescriptor::TOmegaK { omega, twok },
    };
    if !check_relations_finite(&module) {
        return Err(RepmodError::RelationCheck);
    }
    Ok(module)
}

/// The p-dimensional module T_{a,b,lambda} (root-of-unity mode only):
/// K v_m = lambda q^{-2m} v_m, F v_m = v_{m+1} (F v_{p-1} = b v_0),
/// E v_0 = a v_{p-1}, and for m > 0
/// `E v_m = (ab + [m](lambda q^(1-m) - lambda^-1 q^(m-1))/(q - q^-1)) v_(m-1)`.
pub fn make_t_abl(
    a: &Scalar,
    b: &Scalar,
    lambda: &Scalar,
    mode: FieldMode,
) -> Result<FiniteModule, RepmodError> {
    let p = mode.p().ok_or_else(|| {
        RepmodError::InvalidParameter("Tabl requires root-of-unity mode".to_string())
    })? as usize;
    if lambda.is_zero() {
        return Err(RepmodError::InvalidParameter(
            "lambda must be nonzero".to_string(),
        ));
    }
    let lambda_inv = lambda.invert()?;
    let mut mat_e = ExactMatrix::zero(mode, p, p);
    let mut mat_f = ExactMatrix::zero(mode, p, p);
    let mut mat_k = ExactMatrix::zero(mode, p, p);
    let mut mat_k_inv = ExactMatrix::zero(mode, p, p);
    let mut labels = Vec::with_capacity(p);
    for m in 0..p {
        labels.push(format!("v_{}", m));
        mat_k[(m, m)] = lambda * &mode.q_pow(-2 * m as i64);
        mat_k_inv[(m, m)] = &lambda_inv * &mode.q_pow(2 * m as i64);
        if m + 1 < p {
            mat_f[(m + 1, m)] = mode.one();
        }
        if m > 0 {
            mat_e[(m - 1, m)] = t_abl_e_coeff(a, b, lambda, &lambda_inv, mode, m as i64);
        }
    }
    mat_f[(0, p - 1)] = b.clone();
    mat_e[(p - 1, 0)] = a.clone();
    let module = FiniteModule {
        dim: p,
        labels,
        mat_e,
        mat_f,
        mat_k,
        mat_k_inv,
        mode,
        descriptor: ModuleDescriptor::Tabl {
            a: a.clone(),
            b: b.clone(),
            lambda: lambda.clone(),
        },
    };
    if !check_relations_finite(&module) {
        return Err(RepmodError::RelationCheck);
    }
    Ok(module)
}

/// `ab + [m](lambda q^(1-m) - lambda^-1 q^(m-1))/(q - q^-1)`, the E
/// coefficient of T_{a,b,lambda} at v_m (m > 0) and the quantity whose
/// nonvanishing over m = 0..p-1 characterizes irreducibility of the
/// cyclic modules.
pub fn t_abl_e_coeff(
    a: &Scalar,
    b: &Scalar,
    lambda: &Scalar,
    lambda_inv: &Scalar,
    mode: FieldMode,
    m: i64,
) -> Scalar {
    let qmq_inv = (&mode.q_pow(1) - &mode.q_pow(-1))
        .invert()
        .expect("q - q^-1 is nonzero for p' >= 3");
    let bracket = &(lambda * &mode.q_pow(1 - m)) - &(lambda_inv * &mode.q_pow(m - 1));
    &(a * b) + &(&(&mode.q_integer(m) * &bracket) * &qmq_inv)
}

/// Default window size: three vanishing periods in root-of-unity mode,
/// a fixed medium window for generic q.
pub fn default_window(mode: FieldMode) -> usize {
    match mode.p_prime() {
        Some(pp) => 3 * pp as usize + 2,
        None => 20,
    }
}

/// The windowed Verma-type module V_lambda for integer lambda:
/// K v_{lambda-2t} = q^{lambda-2t} v_{lambda-2t},
/// F v_{lambda-2t} = [t+1] v_{lambda-2t-2},
/// E v_{lambda-2t} = [lambda-t+1] v_{lambda-2t+2}, with E v_lambda = 0.
pub fn make_verma(
    lambda: i64,
    window: usize,
    mode: FieldMode,
) -> Result<GradedWindowModule, RepmodError> {
    if window < 2 {
        return Err(RepmodError::InvalidParameter(
            "window must be at least 2".to_string(),
        ));
    }
    let mut e_coeff = Vec::with_capacity(window + 1);
    let mut f_coeff = Vec::with_capacity(window + 1);
    e_coeff.push(mode.zero());
    for t in 1..=window {
        e_coeff.push(mode.q_integer(lambda - t as i64 + 1));
    }
    for t in 0..=window {
        f_coeff.push(mode.q_integer(t as i64 + 1));
    }
    let module = GradedWindowModule {
        lambda,
        window,
        e_coeff,
        f_coeff,
        mode,
        descriptor: ModuleDescriptor::Verma { lambda, window },
    };
    if !check_relations_window(&module) {
        return Err(RepmodError::RelationCheck);
    }
    Ok(module)
}

/// Exact verification of the defining relations as matrix identities,
/// plus K K^-1 = 1.
pub fn check_relations_finite(m: &FiniteModule) -> bool {
    let mode = m.mode;
    let id = ExactMatrix::identity(mode, m.dim);
    if m.mat_k.mul(&m.mat_k_inv) != id || m.mat_k_inv.mul(&m.mat_k) != id {
        return false;
    }
    let ke = m.mat_k.mul(&m.mat_e);
    if ke != m.mat_e.mul(&m.mat_k).scale(&mode.q_pow(2)) {
        return false;
    }
    let kf = m.mat_k.mul(&m.mat_f);
    if kf != m.mat_f.mul(&m.mat_k).scale(&mode.q_pow(-2)) {
        return false;
    }
    let comm = m.mat_e.mul(&m.mat_f).sub(&m.mat_f.mul(&m.mat_e));
    let qmq_inv = (&mode.q_pow(1) - &mode.q_pow(-1))
        .invert()
        .expect("q - q^-1 is nonzero for p' >= 3");
    let rhs = m.mat_k.sub(&m.mat_k_inv).scale(&qmq_inv);
    comm == rhs
}

/// Weight-by-weight verification of (EF - FE) v_t = [lambda - 2t] v_t on
/// t = 0..N-1, the window interior where both contributions exist.
pub fn check_relations_window(m: &GradedWindowModule) -> bool {
    for t in 0..m.window {
        let ef = m.f_coeff(t) * m.e_coeff(t + 1);
        let fe = if t == 0 {
            m.mode.zero()
        } else {
            m.e_coeff(t) * m.f_coeff(t - 1)
        };
        let lhs = &ef - &fe;
        if lhs != m.mode.q_integer(m.weight_exponent(t)) {
            return false;
        }
    }
    true
}

/// A module handed back by the family registry: finite matrices or a
/// graded window.
#[derive(Clone, Debug)]
pub enum BuiltModule {
    Finite(FiniteModule),
    Window(GradedWindowModule),
}

impl BuiltModule {
    pub fn descriptor(&self) -> &ModuleDescriptor {
        match self {
            BuiltModule::Finite(m) => m.descriptor(),
            BuiltModule::Window(m) => m.descriptor(),
        }
    }

    pub fn mode(&self) -> FieldMode {
        match self {
            BuiltModule::Finite(m) => m.mode(),
            BuiltModule::Window(m) => m.mode(),
        }
    }

    pub fn check_relations(&self) -> bool {
        match self {
            BuiltModule::Finite(m) => check_relations_finite(m),
            BuiltModule::Window(m) => check_relations_window(m),
        }
    }
}

/// Outcome of an irreducibility test together with the criterion instance
/// that decided it.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IrreducibilityVerdict {
    pub irreducible: bool,
    pub criterion: String,
}

/// Evaluate the exact irreducibility criterion for a descriptor.
///
/// # Errors
/// `IrreducibilityNotApplicable` for windowed Verma modules, and
/// `InvalidParameter` when the descriptor does not fit the mode.
pub fn is_irreducible(
    desc: &ModuleDescriptor,
    mode: FieldMode,
) -> Result<IrreducibilityVerdict, RepmodError> {
    match desc {
        ModuleDescriptor::TOmegaK { twok, .. } => match mode.p() {
            None => Ok(IrreducibilityVerdict {
                irreducible: true,
                criterion: "generic q: every T_{omega,k} is irreducible".to_string(),
            }),
            Some(p) => {
                if (*twok as u64) < p as u64 {
                    Ok(IrreducibilityVerdict {
                        irreducible: true,
                        criterion: format!("2k = {} < p = {}", twok, p),
                    })
                } else {
                    Ok(IrreducibilityVerdict {
                        irreducible: false,
                        criterion: format!("2k = {} >= p = {}", twok, p),
                    })
                }
            }
        },
        ModuleDescriptor::Tabl { a, b, lambda } => {
            let p = mode.p().ok_or_else(|| {
                RepmodError::InvalidParameter("Tabl requires root-of-unity mode".to_string())
            })? as i64;
            if lambda.is_zero() {
                return Err(RepmodError::InvalidParameter(
                    "lambda must be nonzero".to_string(),
                ));
            }
            let a_zero = a.is_zero();
            let b_zero = b.is_zero();
            if a_zero && b_zero {
                for m in 0..=(p - 2) {
                    let qm = mode.q_pow(m);
                    if *lambda == qm {
                        return Ok(IrreducibilityVerdict {
                            irreducible: false,
                            criterion: format!("lambda = q^{}", m),
                        });
                    }
                    if *lambda == -&qm {
                        return Ok(IrreducibilityVerdict {
                            irreducible: false,
                            criterion: format!("lambda = -q^{}", m),
                        });
                    }
                }
                Ok(IrreducibilityVerdict {
                    irreducible: true,
                    criterion: format!(
                        "lambda avoids +-q^m for m = 0..{}",
                        p - 2
                    ),
                })
            } else if !a_zero && !b_zero {
                let lambda_inv = lambda.invert()?;
                for m in 0..p {
                    let val = t_abl_e_coeff(a, b, lambda, &lambda_inv, mode, m);
                    if val.is_zero() {
                        return Ok(IrreducibilityVerdict {
                            irreducible: false,
                            criterion: format!(
                                "ab + [m](lambda q^(1-m) - lambda^-1 q^(m-1))/(q - q^-1) = 0 at m = {}",
                                m
                            ),
                        });
                    }
                }
                Ok(IrreducibilityVerdict {
                    irreducible: true,
                    criterion: format!(
                        "ab + [m](lambda q^(1-m) - lambda^-1 q^(m-1))/(q - q^-1) nonzero for m = 0..{}",
                        p - 1
                    ),
                })
            } else {
                // semicyclic: exactly one of a, b nonzero
                let lp = lambda.pow(p)?;
                if lp == mode.one() || lp == mode.integer(-1) {
                    Ok(IrreducibilityVerdict {
                        irreducible: false,
                        criterion: format!(
                            "lambda^{} = {}",
                            p,
                            if lp == mode.one() { "+1" } else { "-1" }
                        ),
                    })
                } else {
                    Ok(IrreducibilityVerdict {
                        irreducible: true,
                        criterion: format!("lambda^{} avoids +-1", p),
                    })
                }
            }
        }
        ModuleDescriptor::Verma { .. } => Err(RepmodError::IrreducibilityNotApplicable),
    }
}
