//! The four-dimensional Clifford algebra C(p) on two isotropic dual
//! generators c(E0), c(F0), its two-dimensional spin module S, and the
//! homomorphism alpha from Laurent polynomials in K into C(p).
//!
//! Basis order is fixed as (1, cE, cF, cEcF), with relations
//!
//! ```text
//! cE^2 = 0,   cF^2 = 0,   cE cF + cF cE = 1.
//! ```
//!
//! The algebra is the ordinary, undeformed Clifford algebra; only alpha
//! depends on q. Everything here is a pure value type.

use std::fmt;

use crate::scalars::{FieldMode, Scalar};
use crate::uq::UqKElement;

/// Index of a Clifford basis element in the order (1, cE, cF, cEcF).
pub type CliffordIndex = usize;

pub const CL_ONE: CliffordIndex = 0;
pub const CL_E: CliffordIndex = 1;
pub const CL_F: CliffordIndex = 2;
pub const CL_EF: CliffordIndex = 3;

pub const CL_BASIS_NAMES: [&str; 4] = ["1", "cE", "cF", "cEcF"];

/// An element of C(p): four coefficients on the fixed basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliffordElement {
    coeffs: [Scalar; 4],
}

impl CliffordElement {
    pub fn zero(mode: FieldMode) -> Self {
        CliffordElement {
            coeffs: [mode.zero(), mode.zero(), mode.zero(), mode.zero()],
        }
    }

    pub fn one(mode: FieldMode) -> Self {
        Self::basis(mode, CL_ONE)
    }

    pub fn c_e0(mode: FieldMode) -> Self {
        Self::basis(mode, CL_E)
    }

    pub fn c_f0(mode: FieldMode) -> Self {
        Self::basis(mode, CL_F)
    }

    pub fn c_e0_c_f0(mode: FieldMode) -> Self {
        Self::basis(mode, CL_EF)
    }

    pub fn basis(mode: FieldMode, idx: CliffordIndex) -> Self {
        let mut out = Self::zero(mode);
        out.coeffs[idx] = mode.one();
        out
    }

    pub fn from_coeffs(coeffs: [Scalar; 4]) -> Self {
        CliffordElement { coeffs }
    }

    pub fn coeff(&self, idx: CliffordIndex) -> &Scalar {
        &self.coeffs[idx]
    }

    pub fn coeffs(&self) -> &[Scalar; 4] {
        &self.coeffs
    }

    pub fn mode(&self) -> FieldMode {
        self.coeffs[0].mode()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        CliffordElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        CliffordElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &other.coeffs[i]),
        }
    }

    pub fn neg(&self) -> Self {
        CliffordElement {
            coeffs: std::array::from_fn(|i| -&self.coeffs[i]),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        CliffordElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * s),
        }
    }

    /// Commutator x y - y x.
    pub fn commutator(&self, other: &Self) -> Self {
        cl_multiply(self, other).sub(&cl_multiply(other, self))
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            if i == CL_ONE {
                if crate::scalars::needs_parens(&cs) {
                    write!(f, "({})", cs)?;
                } else {
                    write!(f, "{}", cs)?;
                }
            } else if c.is_one() {
                write!(f, "{}", CL_BASIS_NAMES[i])?;
            } else if crate::scalars::needs_parens(&cs) || cs.starts_with('-') {
                write!(f, "({})*{}", cs, CL_BASIS_NAMES[i])?;
            } else {
                write!(f, "{}*{}", cs, CL_BASIS_NAMES[i])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Structure constants: product of basis elements i and j as coefficients
/// (as small integers) on the basis. Derived from the defining relations;
/// the only non-monomial product is cF*cE = 1 - cEcF.
const CL_TABLE: [[[i8; 4]; 4]; 4] = {
    let mut t = [[[0i8; 4]; 4]; 4];
    t[CL_ONE][CL_ONE][CL_ONE] = 1;
    t[CL_ONE][CL_E][CL_E] = 1;
    t[CL_ONE][CL_F][CL_F] = 1;
    t[CL_ONE][CL_EF][CL_EF] = 1;
    t[CL_E][CL_ONE][CL_E] = 1;
    t[CL_F][CL_ONE][CL_F] = 1;
    t[CL_EF][CL_ONE][CL_EF] = 1;
    // cE cE = 0; cE cF = cEcF; cE cEcF = 0
    t[CL_E][CL_F][CL_EF] = 1;
    // cF cE = 1 - cEcF; cF cF = 0; cF cEcF = cF
    t[CL_F][CL_E][CL_ONE] = 1;
    t[CL_F][CL_E][CL_EF] = -1;
    t[CL_F][CL_EF][CL_F] = 1;
    // cEcF cE = cE; cEcF cF = 0; cEcF cEcF = cEcF
    t[CL_EF][CL_E][CL_E] = 1;
    t[CL_EF][CL_EF][CL_EF] = 1;
    t
};

/// Integer coefficients of the product of two basis elements on the basis.
pub fn basis_product_coeffs(i: CliffordIndex, j: CliffordIndex) -> [i8; 4] {
    CL_TABLE[i][j]
}

/// Product in C(p) under the defining relations.
pub fn cl_multiply(x: &CliffordElement, y: &CliffordElement) -> CliffordElement {
    let mode = x.mode();
    let mut out = CliffordElement::zero(mode);
    for i in 0..4 {
        if x.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..4 {
            if y.coeffs[j].is_zero() {
                continue;
            }
            let prod = &x.coeffs[i] * &y.coeffs[j];
            for (target, &sign) in CL_TABLE[i][j].iter().enumerate() {
                if sign == 0 {
                    continue;
                }
                let signed = if sign > 0 { prod.clone() } else { -&prod };
                out.coeffs[target] = &out.coeffs[target] + &signed;
            }
        }
    }
    out
}

/// alpha(H) = 2 cE cF - 1, the image of the Cartan generator.
pub fn alpha_h(mode: FieldMode) -> CliffordElement {
    let mut out = CliffordElement::zero(mode);
    out.coeffs[CL_ONE] = mode.integer(-1);
    out.coeffs[CL_EF] = mode.integer(2);
    out
}

/// alpha(K) = q^-1 + (q - q^-1) cE cF.
pub fn alpha_k(mode: FieldMode) -> CliffordElement {
    let mut out = CliffordElement::zero(mode);
    out.coeffs[CL_ONE] = mode.q_pow(-1);
    out.coeffs[CL_EF] = &mode.q_pow(1) - &mode.q_pow(-1);
    out
}

/// alpha(K^-1) = q - (q - q^-1) cE cF.
pub fn alpha_k_inv(mode: FieldMode) -> CliffordElement {
    let mut out = CliffordElement::zero(mode);
    out.coeffs[CL_ONE] = mode.q_pow(1);
    out.coeffs[CL_EF] = &mode.q_pow(-1) - &mode.q_pow(1);
    out
}

/// alpha(K)^j by repeated multiplication, either sign of j.
pub fn alpha_k_pow(mode: FieldMode, j: i64) -> CliffordElement {
    let base = if j >= 0 {
        alpha_k(mode)
    } else {
        alpha_k_inv(mode)
    };
    let mut out = CliffordElement::one(mode);
    for _ in 0..j.unsigned_abs() {
        out = cl_multiply(&out, &base);
    }
    out
}

/// The multiplicative extension of alpha to Laurent polynomials in K.
pub fn alpha(mode: FieldMode, x: &UqKElement) -> CliffordElement {
    let mut out = CliffordElement::zero(mode);
    for (j, c) in x.iter() {
        out = out.add(&alpha_k_pow(mode, *j as i64).scale(c));
    }
    out
}

/// An element of the spin module S on the basis (s_{-1}, s_1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinVector {
    coeffs: [Scalar; 2],
}

pub const SPIN_BASIS_NAMES: [&str; 2] = ["s_-1", "s_1"];

impl SpinVector {
    pub fn zero(mode: FieldMode) -> Self {
        SpinVector {
            coeffs: [mode.zero(), mode.zero()],
        }
    }

    /// s_{-1}, killed by cF.
    pub fn s_minus(mode: FieldMode) -> Self {
        SpinVector {
            coeffs: [mode.one(), mode.zero()],
        }
    }

    /// s_1, killed by cE.
    pub fn s_plus(mode: FieldMode) -> Self {
        SpinVector {
            coeffs: [mode.zero(), mode.one()],
        }
    }

    pub fn from_coeffs(coeffs: [Scalar; 2]) -> Self {
        SpinVector { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar; 2] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
}

impl fmt::Display for SpinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{}", SPIN_BASIS_NAMES[i])?;
            } else {
                write!(f, "({})*{}", c, SPIN_BASIS_NAMES[i])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The 2x2 matrix of a Clifford basis element on (s_{-1}, s_1):
/// `SPIN_ACTION[idx][row][col]` is the coefficient of basis row in the
/// image of basis col. Defined by cE s_{-1} = s_1, cE s_1 = 0,
/// cF s_{-1} = 0, cF s_1 = s_{-1}.
const SPIN_ACTION: [[[i8; 2]; 2]; 4] = [
    [[1, 0], [0, 1]], // 1
    [[0, 0], [1, 0]], // cE
    [[0, 1], [0, 0]], // cF
    [[0, 0], [0, 1]], // cEcF = cE(cF .)
];

/// The spin action of a Clifford element, extended linearly.
pub fn spin_act(x: &CliffordElement, v: &SpinVector) -> SpinVector {
    let mode = x.mode();
    let mut out = SpinVector::zero(mode);
    for idx in 0..4 {
        if x.coeffs()[idx].is_zero() {
            continue;
        }
        for row in 0..2 {
            for col in 0..2 {
                let sign = SPIN_ACTION[idx][row][col];
                if sign == 0 || v.coeffs[col].is_zero() {
                    continue;
                }
                let term = &x.coeffs()[idx] * &v.coeffs[col];
                let signed = if sign > 0 { term } else { -&term };
                out.coeffs[row] = &out.coeffs[row] + &signed;
            }
        }
    }
    out
}

/// The 2x2 spin matrix of a Clifford element, rows/cols on (s_{-1}, s_1).
pub fn spin_matrix(x: &CliffordElement) -> [[Scalar; 2]; 2] {
    let mode = x.mode();
    let mut out = [
        [mode.zero(), mode.zero()],
        [mode.zero(), mode.zero()],
    ];
    for idx in 0..4 {
        if x.coeffs()[idx].is_zero() {
            continue;
        }
        for row in 0..2 {
            for col in 0..2 {
                let sign = SPIN_ACTION[idx][row][col];
                if sign == 0 {
                    continue;
                }
                let signed = if sign > 0 {
                    x.coeffs()[idx].clone()
                } else {
                    -&x.coeffs()[idx]
                };
                out[row][col] = &out[row][col] + &signed;
            }
        }
    }
    out
}
