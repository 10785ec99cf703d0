//! Cyclotomic field arithmetic: Q[q]/(Phi_n(q)) for a primitive n-th root
//! of unity, with inversion by the extended Euclidean algorithm.
//!
//! Residues are stored in dense ascending order with degree < deg Phi_n and
//! trailing zeros stripped, so equality is structural.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::{One, Zero};

use super::laurent::LaurentPoly;
use super::poly::{self, Q};
use super::ScalarError;

/// Dense coefficients of the n-th cyclotomic polynomial, ascending order.
///
/// Computed as (x^n - 1) / prod_{d|n, d<n} Phi_d and cached per order.
pub fn cyclotomic_polynomial(n: u32) -> Vec<Q> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<Q>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let phi = compute_cyclotomic(n);
    cache.lock().unwrap().insert(n, phi.clone());
    phi
}

fn compute_cyclotomic(n: u32) -> Vec<Q> {
    assert!(n >= 1, "cyclotomic order must be positive");
    // x^n - 1
    let mut xn1 = vec![Q::zero(); n as usize + 1];
    xn1[0] = -Q::one();
    xn1[n as usize] = Q::one();
    if n == 1 {
        return xn1;
    }
    let mut quotient = xn1;
    for d in 1..n {
        if n % d == 0 {
            quotient = poly::exact_div(&quotient, &cyclotomic_polynomial(d));
        }
    }
    quotient
}

/// An element of Q\[q\]/(Phi_order(q)).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicNumber {
    order: u32,
    residue: Vec<Q>,
}

impl CyclotomicNumber {
    /// The zero element of the field of the given root order.
    pub fn zero(order: u32) -> Self {
        CyclotomicNumber {
            order,
            residue: Vec::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Q::one())
    }

    pub fn from_rational(order: u32, c: Q) -> Self {
        CyclotomicNumber {
            order,
            residue: poly::constant(c),
        }
    }

    pub fn from_integer(order: u32, n: i64) -> Self {
        Self::from_rational(order, Q::from_integer(n.into()))
    }

    /// The image of q^exp; negative exponents use q^order = 1.
    pub fn q_pow(order: u32, exp: i64) -> Self {
        let e = exp.rem_euclid(order as i64) as usize;
        let mut residue = vec![Q::zero(); e + 1];
        residue[e] = Q::one();
        Self::reduce(order, residue)
    }

    /// The image of a Laurent polynomial under q -> primitive root.
    pub fn from_laurent(order: u32, p: &LaurentPoly) -> Self {
        let mut residue = vec![Q::zero(); order as usize];
        for (e, c) in p.iter() {
            residue[e.rem_euclid(order as i64) as usize] += c;
        }
        Self::reduce(order, residue)
    }

    fn reduce(order: u32, raw: Vec<Q>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let mut residue = raw;
        poly::trim(&mut residue);
        if residue.len() >= phi.len() {
            let (_, rem) = poly::divrem(&residue, &phi);
            residue = rem;
        }
        CyclotomicNumber { order, residue }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Residue coefficients, ascending degree, trailing zeros stripped.
    pub fn residue(&self) -> &[Q] {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.residue.len() == 1 && self.residue[0].is_one()
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic arithmetic across different root orders"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        CyclotomicNumber {
            order: self.order,
            residue: poly::add(&self.residue, &other.residue),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        CyclotomicNumber {
            order: self.order,
            residue: poly::sub(&self.residue, &other.residue),
        }
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            order: self.order,
            residue: self.residue.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        Self::reduce(self.order, poly::mul(&self.residue, &other.residue))
    }

    /// Field inverse via extended gcd against Phi_order.
    ///
    /// # Errors
    /// `DivisionByZero` on the zero element.
    pub fn invert(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let phi = cyclotomic_polynomial(self.order);
        let (g, s) = poly::egcd_mod(&self.residue, &phi);
        // Phi is irreducible over Q, so the gcd with a nonzero residue is 1.
        debug_assert_eq!(poly::degree(&g), Some(0));
        Ok(Self::reduce(self.order, s))
    }

    pub fn pow(&self, n: i64) -> Result<Self, ScalarError> {
        let base = if n < 0 { self.invert()? } else { self.clone() };
        let mut out = Self::one(self.order);
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Render without the `@root` annotation.
    pub(crate) fn residue_poly(&self) -> LaurentPoly {
        LaurentPoly::from_dense(0, &self.residue)
    }

    pub(crate) fn residue_leading_negative(&self) -> bool {
        use num::Signed;
        self.residue.last().map_or(false, Signed::is_negative)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue_poly())
    }
}
