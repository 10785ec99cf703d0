//! Laurent polynomials in q with exact rational coefficients.
//!
//! `LaurentPoly` maps integer exponents to nonzero `BigRational`
//! coefficients; the zero polynomial has empty support.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use super::poly::Q;

/// A Laurent polynomial in q over the rationals.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, Q::one())
    }

    /// The monomial c * q^exp. Zero `c` yields the zero polynomial.
    pub fn monomial(exp: i64, c: Q) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(Q::from_integer(n.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map_or(false, |c| c.is_one())
    }

    /// True if the support is a single exponent (a unit of the Laurent ring).
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn coeff(&self, exp: i64) -> Q {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// True if the highest-degree coefficient is negative.
    pub(crate) fn leading_negative(&self) -> bool {
        self.coeffs
            .values()
            .next_back()
            .map_or(false, Signed::is_negative)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Q)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, exp: i64, c: &Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.coeffs.iter() {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.coeffs.iter() {
            out.add_term(*e, &(-c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.coeffs.iter() {
            for (e2, c2) in other.coeffs.iter() {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply by q^n.
    pub fn shift(&self, n: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + n, c.clone())).collect(),
        }
    }

    /// Split into `(v, p)` with `self = q^v * p` and `p` an ordinary
    /// polynomial with nonzero constant term, in dense ascending order.
    /// The zero polynomial yields `(0, [])`.
    pub(crate) fn to_dense(&self) -> (i64, Vec<Q>) {
        match self.min_exp() {
            None => (0, Vec::new()),
            Some(v) => {
                let deg = (self.max_exp().unwrap() - v) as usize;
                let mut dense = vec![Q::zero(); deg + 1];
                for (e, c) in self.coeffs.iter() {
                    dense[(e - v) as usize] = c.clone();
                }
                (v, dense)
            }
        }
    }

    pub(crate) fn from_dense(shift: i64, dense: &[Q]) -> Self {
        let mut out = LaurentPoly::zero();
        for (i, c) in dense.iter().enumerate() {
            out.add_term(shift + i as i64, c);
        }
        out
    }

    /// The q-integer `[n] = (q^n - q^-n)/(q - q^-1)` expanded as
    /// q^{n-1} + q^{n-3} + ... + q^{1-n}; zero for n = 0, odd under n -> -n.
    pub fn q_integer(n: i64) -> Self {
        if n == 0 {
            return LaurentPoly::zero();
        }
        let (sign, m) = if n > 0 { (Q::one(), n) } else { (-Q::one(), -n) };
        let mut out = LaurentPoly::zero();
        let mut e = m - 1;
        while e >= 1 - m {
            out.add_term(e, &sign);
            e -= 2;
        }
        out
    }

}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Q, exp: i64, leading: bool) -> fmt::Result {
    let mag = c.abs();
    if leading {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else if c.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if exp == 0 {
        write!(f, "{}", mag)
    } else {
        if !mag.is_one() {
            write!(f, "{}*", mag)?;
        }
        if exp == 1 {
            write!(f, "q")
        } else {
            write!(f, "q^{}", exp)
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending powers of q, e.g. `q^2 - 2 + q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            write_coeff(f, c, *e, i == 0)?;
        }
        Ok(())
    }
}
