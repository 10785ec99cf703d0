//! Exact coefficient arithmetic for the two supported base fields:
//! the rational function field Q(q) (generic mode) and the cyclotomic
//! field Q\[q\]/(Phi_p'(q)) (root-of-unity mode, q a primitive p'-th root).
//!
//! All values are immutable; all operations are pure. Mixing scalars from
//! different field modes is a programming error and panics.

mod cyclotomic;
mod laurent;
pub mod parse;
mod poly;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigRational;
use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicNumber};
pub use laurent::LaurentPoly;
pub use ratfunc::RationalFunction;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at a primitive {0}-th root of unity")]
    SpecializationPole(u32),
    #[error("root-of-unity order must be at least 3, got {0}")]
    InvalidOrder(u32),
}

/// The active coefficient field.
///
/// In root-of-unity mode the stored order is p'; the derived exponent p
/// (the order at which E^p, F^p, K^p become central) is p' for odd p' and
/// p'/2 for even p'.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldMode {
    Generic,
    RootOfUnity(u32),
}

impl FieldMode {
    /// Root-of-unity mode at a primitive p'-th root, p' >= 3.
    pub fn root_of_unity(p_prime: u32) -> Result<Self, ScalarError> {
        if p_prime < 3 {
            return Err(ScalarError::InvalidOrder(p_prime));
        }
        Ok(FieldMode::RootOfUnity(p_prime))
    }

    pub fn is_root_of_unity(&self) -> bool {
        matches!(self, FieldMode::RootOfUnity(_))
    }

    /// The root order p', when in root-of-unity mode.
    pub fn p_prime(&self) -> Option<u32> {
        match self {
            FieldMode::Generic => None,
            FieldMode::RootOfUnity(p) => Some(*p),
        }
    }

    /// p = p' for odd p', p'/2 for even p'.
    pub fn p(&self) -> Option<u32> {
        self.p_prime()
            .map(|pp| if pp % 2 == 0 { pp / 2 } else { pp })
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldMode::Generic => Scalar::Rational(RationalFunction::zero()),
            FieldMode::RootOfUnity(n) => Scalar::Cyclotomic(CyclotomicNumber::zero(*n)),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldMode::Generic => Scalar::Rational(RationalFunction::one()),
            FieldMode::RootOfUnity(n) => Scalar::Cyclotomic(CyclotomicNumber::one(*n)),
        }
    }

    pub fn integer(&self, n: i64) -> Scalar {
        match self {
            FieldMode::Generic => Scalar::Rational(RationalFunction::from_integer(n)),
            FieldMode::RootOfUnity(p) => Scalar::Cyclotomic(CyclotomicNumber::from_integer(*p, n)),
        }
    }

    pub fn rational(&self, c: BigRational) -> Scalar {
        match self {
            FieldMode::Generic => Scalar::Rational(RationalFunction::from_rational(c)),
            FieldMode::RootOfUnity(p) => Scalar::Cyclotomic(CyclotomicNumber::from_rational(*p, c)),
        }
    }

    /// The scalar q^n.
    pub fn q_pow(&self, n: i64) -> Scalar {
        match self {
            FieldMode::Generic => Scalar::Rational(RationalFunction::q_pow(n)),
            FieldMode::RootOfUnity(p) => Scalar::Cyclotomic(CyclotomicNumber::q_pow(*p, n)),
        }
    }

    pub fn q(&self) -> Scalar {
        self.q_pow(1)
    }

    /// The image of a Laurent polynomial in the active field.
    pub fn laurent(&self, p: &LaurentPoly) -> Scalar {
        match self {
            FieldMode::Generic => Scalar::Rational(RationalFunction::from_laurent(p.clone())),
            FieldMode::RootOfUnity(n) => Scalar::Cyclotomic(CyclotomicNumber::from_laurent(*n, p)),
        }
    }

    /// The q-integer `[n] = (q^n - q^-n)/(q - q^-1)`, extended to all
    /// integers by `[0] = 0` and `[-n] = -[n]`.
    pub fn q_integer(&self, n: i64) -> Scalar {
        self.laurent(&LaurentPoly::q_integer(n))
    }
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Generic => write!(f, "generic"),
            FieldMode::RootOfUnity(p) => write!(f, "root:{}", p),
        }
    }
}

/// The q-integer `[n]` in the given field mode.
pub fn q_integer(n: i64, mode: FieldMode) -> Scalar {
    mode.q_integer(n)
}

/// An element of the active coefficient field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rational(RationalFunction),
    Cyclotomic(CyclotomicNumber),
}

impl Scalar {
    pub fn mode(&self) -> FieldMode {
        match self {
            Scalar::Rational(_) => FieldMode::Generic,
            Scalar::Cyclotomic(c) => FieldMode::RootOfUnity(c.order()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Cyclotomic(c) => c.is_one(),
        }
    }

    /// Multiplicative inverse.
    ///
    /// # Errors
    /// `DivisionByZero` on the zero element.
    pub fn invert(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(r) => Ok(Scalar::Rational(r.invert()?)),
            Scalar::Cyclotomic(c) => Ok(Scalar::Cyclotomic(c.invert()?)),
        }
    }

    pub fn pow(&self, n: i64) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(r) => Ok(Scalar::Rational(r.pow(n)?)),
            Scalar::Cyclotomic(c) => Ok(Scalar::Cyclotomic(c.pow(n)?)),
        }
    }

    /// Split into (leading sign, magnitude) for sum rendering: a value
    /// whose leading coefficient is negative renders as `- |x|`.
    pub fn render_sign_split(&self) -> (bool, Scalar) {
        let negative = match self {
            Scalar::Rational(r) => r.numerator().leading_negative(),
            Scalar::Cyclotomic(c) => c.residue_leading_negative(),
        };
        if negative {
            (true, -self)
        } else {
            (false, self.clone())
        }
    }

    /// Canonical text form; cyclotomic values carry an `@root p'` suffix.
    pub fn annotated(&self) -> String {
        match self {
            Scalar::Rational(r) => r.to_string(),
            Scalar::Cyclotomic(c) => format!("{} @root {}", c, c.order()),
        }
    }

    fn binop(
        a: &Scalar,
        b: &Scalar,
        rat: impl Fn(&RationalFunction, &RationalFunction) -> RationalFunction,
        cyc: impl Fn(&CyclotomicNumber, &CyclotomicNumber) -> CyclotomicNumber,
    ) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(rat(x, y)),
            (Scalar::Cyclotomic(x), Scalar::Cyclotomic(y)) => Scalar::Cyclotomic(cyc(x, y)),
            _ => panic!("scalar arithmetic across field modes"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", r),
            Scalar::Cyclotomic(c) => write!(f, "{}", c),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::binop(self, rhs, RationalFunction::add, CyclotomicNumber::add)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::binop(self, rhs, RationalFunction::sub, CyclotomicNumber::sub)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::binop(self, rhs, RationalFunction::mul, CyclotomicNumber::mul)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.neg()),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(c.neg()),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// True if a rendered scalar needs parentheses before `*`: it contains a
/// top-level `+`, `-` or space (sums), as opposed to signs nested inside
/// an already-parenthesized fraction.
pub(crate) fn needs_parens(rendered: &str) -> bool {
    let mut depth = 0usize;
    for c in rendered.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '+' | '-' | ' ' if depth == 0 => return true,
            _ => {}
        }
    }
    false
}

/// Evaluate a rational function at a primitive p'-th root of unity.
///
/// # Errors
/// `SpecializationPole` if the denominator reduces to zero mod Phi_p',
/// `InvalidOrder` if p' < 3.
pub fn specialize(x: &RationalFunction, p_prime: u32) -> Result<CyclotomicNumber, ScalarError> {
    if p_prime < 3 {
        return Err(ScalarError::InvalidOrder(p_prime));
    }
    let num = CyclotomicNumber::from_laurent(p_prime, x.numerator());
    let den = CyclotomicNumber::from_laurent(p_prime, x.denominator());
    let den_inv = den
        .invert()
        .map_err(|_| ScalarError::SpecializationPole(p_prime))?;
    Ok(num.mul(&den_inv))
}
