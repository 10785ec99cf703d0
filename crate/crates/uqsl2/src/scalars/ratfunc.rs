//! The rational function field Q(q), represented as reduced fractions of
//! Laurent polynomials.
//!
//! Canonical form: the denominator is an ordinary polynomial in q (nonzero
//! constant term) and monic; q-power units are cleared into the numerator;
//! numerator and denominator share no polynomial factor. Equality is
//! therefore structural.

use std::fmt;

use num::One;

use super::laurent::LaurentPoly;
use super::poly::{self, Q};
use super::ScalarError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_integer(n))
    }

    pub fn from_rational(c: Q) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn q_pow(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(n))
    }

    /// Build `num/den` in canonical reduced form.
    ///
    /// # Errors
    /// `DivisionByZero` if `den` is the zero polynomial.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    /// Reduce an arbitrary fraction of Laurent polynomials. `den` nonzero.
    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (vn, mut n) = num.to_dense();
        let (vd, mut d) = den.to_dense();
        if d.len() > 1 {
            let g = poly::gcd(&n, &d);
            if poly::degree(&g) != Some(0) {
                n = poly::exact_div(&n, &g);
                d = poly::exact_div(&d, &g);
            }
        }
        // Monic denominator: push its leading coefficient into the numerator.
        let lead = d.last().unwrap().clone();
        if !lead.is_one() {
            for c in d.iter_mut() {
                *c /= &lead;
            }
            for c in n.iter_mut() {
                *c /= &lead;
            }
        }
        RationalFunction {
            num: LaurentPoly::from_dense(vn - vd, &n),
            den: LaurentPoly::from_dense(0, &d),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True if the value is a Laurent polynomial (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return Self::from_laurent(num);
            }
            return Self::reduced(num, self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::reduced(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_laurent(self.num.mul(&other.num));
        }
        // Cross-cancel before multiplying; inputs are reduced, so the
        // result is reduced up to the monic normalization.
        let (va, mut na) = self.num.to_dense();
        let (vb, mut nb) = other.num.to_dense();
        let (_, mut da) = self.den.to_dense();
        let (_, mut db) = other.den.to_dense();
        let g1 = poly::gcd(&na, &db);
        if poly::degree(&g1) != Some(0) {
            na = poly::exact_div(&na, &g1);
            db = poly::exact_div(&db, &g1);
        }
        let g2 = poly::gcd(&nb, &da);
        if poly::degree(&g2) != Some(0) {
            nb = poly::exact_div(&nb, &g2);
            da = poly::exact_div(&da, &g2);
        }
        let mut n = poly::mul(&na, &nb);
        let mut d = poly::mul(&da, &db);
        let lead = d.last().unwrap().clone();
        if !lead.is_one() {
            for c in d.iter_mut() {
                *c /= &lead;
            }
            for c in n.iter_mut() {
                *c /= &lead;
            }
        }
        RationalFunction {
            num: LaurentPoly::from_dense(va + vb, &n),
            den: LaurentPoly::from_dense(0, &d),
        }
    }

    /// Multiplicative inverse.
    ///
    /// # Errors
    /// `DivisionByZero` on the zero element.
    pub fn invert(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i64) -> Result<Self, ScalarError> {
        let base = if n < 0 { self.invert()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
