//! The algebra U_q(sl2) in the Poincare-Birkhoff-Witt basis E^i K^j F^k.
//!
//! Elements are finitely supported maps from monomial keys (i, j, k) to
//! scalars, with no zero coefficients stored, so the normal form is unique
//! and equality is structural. Products are normalized by the rewriting
//! rules
//!
//! ```text
//! K E = q^2 E K,    K F = q^-2 F K,    F E = E F - (K - K^-1)/(q - q^-1),
//! ```
//!
//! applied one step at a time; normal forms of F^k E^i are memoized per
//! algebra instance. An `UqAlgebra` fixes the coefficient field and a term
//! bound that aborts products whose normal form grows past it.

pub mod parse;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use thiserror::Error;

use crate::scalars::{FieldMode, Scalar, ScalarError};

/// Exponents (i, j, k) of a PBW monomial E^i K^j F^k.
pub type MonomialKey = (u32, i32, u32);

pub const KEY_ONE: MonomialKey = (0, 0, 0);
pub const KEY_E: MonomialKey = (1, 0, 0);
pub const KEY_F: MonomialKey = (0, 0, 1);
pub const KEY_K: MonomialKey = (0, 1, 0);
pub const KEY_K_INV: MonomialKey = (0, -1, 0);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UqError {
    #[error("element is not central")]
    NotCentral,
    #[error("normal form exceeds the configured bound of {limit} terms")]
    TermLimit { limit: usize },
    #[error("element is not invertible in U_q(sl2)")]
    NotInvertible,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// An element of U_q(sl2) in PBW normal form.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UqElement {
    terms: BTreeMap<MonomialKey, Scalar>,
}

impl UqElement {
    pub fn zero() -> Self {
        UqElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(key: MonomialKey, coeff: Scalar) -> Self {
        let mut out = UqElement::zero();
        out.add_term(key, &coeff);
        out
    }

    pub fn one(mode: FieldMode) -> Self {
        Self::monomial(KEY_ONE, mode.one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MonomialKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: MonomialKey) -> Option<&Scalar> {
        self.terms.get(&key)
    }

    pub fn add_term(&mut self, key: MonomialKey, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms.iter() {
            out.add_term(*k, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms.iter() {
            out.add_term(*k, &(-c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        UqElement {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return UqElement::zero();
        }
        UqElement {
            terms: self.terms.iter().map(|(k, c)| (*k, c * s)).collect(),
        }
    }

    /// `Some((j, c))` if the element is a unit c*K^j of the PBW basis.
    pub fn as_unit(&self) -> Option<(i32, &Scalar)> {
        if self.terms.len() != 1 {
            return None;
        }
        let ((i, j, k), c) = self.terms.iter().next().unwrap();
        if *i == 0 && *k == 0 {
            Some((*j, c))
        } else {
            None
        }
    }

    /// `Some(c)` if the element is a multiple of the identity.
    pub fn as_scalar(&self, mode: FieldMode) -> Option<Scalar> {
        if self.is_zero() {
            return Some(mode.zero());
        }
        match self.as_unit() {
            Some((0, c)) => Some(c.clone()),
            _ => None,
        }
    }
}

pub(crate) fn render_monomial(key: MonomialKey) -> String {
    let (i, j, k) = key;
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("E".to_string()),
        _ => parts.push(format!("E^{}", i)),
    }
    match j {
        0 => {}
        1 => parts.push("K".to_string()),
        _ => parts.push(format!("K^{}", j)),
    }
    match k {
        0 => {}
        1 => parts.push("F".to_string()),
        _ => parts.push(format!("F^{}", k)),
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

fn render_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Scalar)>,
) -> fmt::Result {
    let mut first = true;
    for (mono, coeff) in terms {
        let (neg, magnitude) = coeff.render_sign_split();
        let mag = magnitude.to_string();
        let compound = crate::scalars::needs_parens(&mag);
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if mono == "1" {
            if compound {
                write!(f, "({})", mag)?;
            } else {
                write!(f, "{}", mag)?;
            }
        } else if mag == "1" {
            write!(f, "{}", mono)?;
        } else if compound {
            write!(f, "({})*{}", mag, mono)?;
        } else {
            write!(f, "{}*{}", mag, mono)?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for UqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(f, self.terms.iter().rev().map(|(k, c)| (render_monomial(*k), c)))
    }
}

/// An element of U_q(k) = Laurent polynomials in K.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UqKElement {
    terms: BTreeMap<i32, Scalar>,
}

impl UqKElement {
    pub fn zero() -> Self {
        UqKElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(j: i32, coeff: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(j, &coeff);
        out
    }

    pub fn one(mode: FieldMode) -> Self {
        Self::monomial(0, mode.one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i32, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, j: i32) -> Option<&Scalar> {
        self.terms.get(&j)
    }

    pub fn add_term(&mut self, j: i32, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(j) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (j, c) in other.terms.iter() {
            out.add_term(*j, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (j, c) in other.terms.iter() {
            out.add_term(*j, &(-c));
        }
        out
    }

    /// Commutative product of Laurent polynomials in K.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (j1, c1) in self.terms.iter() {
            for (j2, c2) in other.terms.iter() {
                out.add_term(j1 + j2, &(c1 * c2));
            }
        }
        out
    }

    /// Inclusion into U_q(sl2) as monomials with i = k = 0.
    pub fn embed(&self) -> UqElement {
        let mut out = UqElement::zero();
        for (j, c) in self.terms.iter() {
            out.add_term((0, *j, 0), c);
        }
        out
    }
}

impl fmt::Display for UqKElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(
            f,
            self.terms
                .iter()
                .rev()
                .map(|(j, c)| (render_monomial((0, *j, 0)), c)),
        )
    }
}

/// An element of U_q(sl2) tensor U_q(sl2), normal form in each factor.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UqTensorSquare {
    terms: BTreeMap<(MonomialKey, MonomialKey), Scalar>,
}

impl UqTensorSquare {
    pub fn zero() -> Self {
        UqTensorSquare {
            terms: BTreeMap::new(),
        }
    }

    pub fn one(mode: FieldMode) -> Self {
        Self::monomial(KEY_ONE, KEY_ONE, mode.one())
    }

    pub fn monomial(left: MonomialKey, right: MonomialKey, coeff: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(left, right, &coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(MonomialKey, MonomialKey), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: MonomialKey, right: MonomialKey) -> Option<&Scalar> {
        self.terms.get(&(left, right))
    }

    pub fn add_term(&mut self, left: MonomialKey, right: MonomialKey, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in other.terms.iter() {
            out.add_term(*l, *r, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in other.terms.iter() {
            out.add_term(*l, *r, &(-c));
        }
        out
    }
}

impl fmt::Display for UqTensorSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(
            f,
            self.terms.iter().rev().map(|((l, r), c)| {
                (
                    format!("{} (x) {}", render_monomial(*l), render_monomial(*r)),
                    c,
                )
            }),
        )
    }
}

/// Default bound on the number of PBW terms a normal form may reach.
pub const DEFAULT_TERM_LIMIT: usize = 1_000_000;

/// Arithmetic context for U_q(sl2) over a fixed coefficient field.
///
/// The memo table of F^k E^i normal forms is the only shared state; it is
/// guarded by a mutex, so a single instance may be used from several
/// threads. All public operations are pure in their observable results.
pub struct UqAlgebra {
    mode: FieldMode,
    term_limit: usize,
    fe_memo: Mutex<HashMap<(u32, u32), UqElement>>,
}

impl UqAlgebra {
    pub fn new(mode: FieldMode) -> Self {
        Self::with_term_limit(mode, DEFAULT_TERM_LIMIT)
    }

    pub fn with_term_limit(mode: FieldMode, term_limit: usize) -> Self {
        UqAlgebra {
            mode,
            term_limit,
            fe_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn term_limit(&self) -> usize {
        self.term_limit
    }

    // ---- Generators ----

    pub fn zero(&self) -> UqElement {
        UqElement::zero()
    }

    pub fn one(&self) -> UqElement {
        UqElement::one(self.mode)
    }

    pub fn e(&self) -> UqElement {
        UqElement::monomial(KEY_E, self.mode.one())
    }

    pub fn f(&self) -> UqElement {
        UqElement::monomial(KEY_F, self.mode.one())
    }

    pub fn k(&self, j: i32) -> UqElement {
        UqElement::monomial((0, j, 0), self.mode.one())
    }

    fn qmq_inv(&self) -> Scalar {
        let qmq = &self.mode.q_pow(1) - &self.mode.q_pow(-1);
        qmq.invert().expect("q - q^-1 is nonzero for p' >= 3")
    }

    // ---- Multiplication by rewriting ----

    /// Product in PBW normal form.
    ///
    /// # Errors
    /// `TermLimit` if the normal form exceeds the configured bound.
    pub fn multiply(&self, x: &UqElement, y: &UqElement) -> Result<UqElement, UqError> {
        let mut out = UqElement::zero();
        for ((i1, j1, k1), c1) in x.terms.iter() {
            for ((i2, j2, k2), c2) in y.terms.iter() {
                let c12 = c1 * c2;
                let mid = self.f_pow_e_pow(*k1, *i2)?;
                for ((a, b, c), w) in mid.terms.iter() {
                    // E^i1 K^j1 (E^a K^b F^c) K^j2 F^k2: moving K^j1 left
                    // past E^a and K^j2 left past F^c contributes q powers.
                    let exp = 2 * (*j1 as i64 * *a as i64 + *j2 as i64 * *c as i64);
                    let coeff = &(&c12 * w) * &self.mode.q_pow(exp);
                    out.add_term((i1 + a, j1 + b + j2, c + k2), &coeff);
                    if out.term_count() > self.term_limit {
                        return Err(UqError::TermLimit {
                            limit: self.term_limit,
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    /// Normal form of F^k E^i, memoized.
    fn f_pow_e_pow(&self, k: u32, i: u32) -> Result<UqElement, UqError> {
        if k == 0 || i == 0 {
            return Ok(UqElement::monomial((i, 0, k), self.mode.one()));
        }
        if let Some(hit) = self.fe_memo.lock().unwrap().get(&(k, i)) {
            return Ok(hit.clone());
        }
        let result = if k == 1 {
            // F E^i = E (F E^{i-1}) - (K - K^-1)/(q - q^-1) E^{i-1}
            let tail = self.f_pow_e_pow(1, i - 1)?;
            let mut out = UqElement::zero();
            for ((a, b, c), w) in tail.terms.iter() {
                out.add_term((a + 1, *b, *c), w);
            }
            let s = self.qmq_inv();
            let e_tail = i as i64 - 1;
            out.add_term(
                (i - 1, 1, 0),
                &(-&(&s * &self.mode.q_pow(2 * e_tail))),
            );
            out.add_term(
                (i - 1, -1, 0),
                &(&s * &self.mode.q_pow(-2 * e_tail)),
            );
            out
        } else {
            // F^k E^i = F^{k-1} (F E^i)
            let fe = self.f_pow_e_pow(1, i)?;
            let front = UqElement::monomial((0, 0, k - 1), self.mode.one());
            self.multiply(&front, &fe)?
        };
        self.fe_memo
            .lock()
            .unwrap()
            .insert((k, i), result.clone());
        Ok(result)
    }

    /// x^n for non-negative n; negative n requires a unit c*K^j.
    pub fn power(&self, x: &UqElement, n: i64) -> Result<UqElement, UqError> {
        if n < 0 {
            let (j, c) = x.as_unit().ok_or(UqError::NotInvertible)?;
            let inv = UqElement::monomial((0, -j, 0), c.invert()?);
            return self.power(&inv, -n);
        }
        let mut out = self.one();
        for _ in 0..n {
            out = self.multiply(&out, x)?;
        }
        Ok(out)
    }

    /// Commutator x y - y x.
    pub fn commutator(&self, x: &UqElement, y: &UqElement) -> Result<UqElement, UqError> {
        Ok(self.multiply(x, y)?.sub(&self.multiply(y, x)?))
    }

    // ---- Casimir elements ----

    /// The normalized Casimir element
    /// 2EF + (2qK^-1 + 2q^-1K - 2(q + q^-1))/(q - q^-1)^2.
    pub fn casimir_q(&self) -> UqElement {
        let v = self
            .qmq_inv()
            .pow(2)
            .expect("inverse square of q - q^-1");
        let two = self.mode.integer(2);
        let mut out = UqElement::zero();
        out.add_term((1, 0, 1), &two);
        out.add_term(KEY_K_INV, &(&(&two * &self.mode.q_pow(1)) * &v));
        out.add_term(KEY_K, &(&(&two * &self.mode.q_pow(-1)) * &v));
        let qpq = &self.mode.q_pow(1) + &self.mode.q_pow(-1);
        out.add_term(KEY_ONE, &(-&(&(&two * &qpq) * &v)));
        out
    }

    /// The unnormalized Casimir element EF + (qK^-1 + q^-1K)/(q - q^-1)^2.
    pub fn casimir_q_prime(&self) -> UqElement {
        let v = self
            .qmq_inv()
            .pow(2)
            .expect("inverse square of q - q^-1");
        let mut out = UqElement::zero();
        out.add_term((1, 0, 1), &self.mode.one());
        out.add_term(KEY_K_INV, &(&self.mode.q_pow(1) * &v));
        out.add_term(KEY_K, &(&self.mode.q_pow(-1) * &v));
        out
    }

    /// The U_q(k) Casimir (q + q^-1)(K + K^-1 - 2)/(q - q^-1)^2.
    pub fn casimir_k(&self) -> UqKElement {
        let v = self
            .qmq_inv()
            .pow(2)
            .expect("inverse square of q - q^-1");
        let qpq = &self.mode.q_pow(1) + &self.mode.q_pow(-1);
        let c = &qpq * &v;
        let mut out = UqKElement::zero();
        out.add_term(1, &c);
        out.add_term(-1, &c);
        out.add_term(0, &(-&(&c * &self.mode.integer(2))));
        out
    }

    // ---- Center ----

    /// True iff z commutes with E, F and K (which, with K^-1, generate).
    pub fn is_central(&self, z: &UqElement) -> Result<bool, UqError> {
        for g in [self.e(), self.f(), self.k(1)] {
            if !self.commutator(z, &g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    // ---- Hopf structure ----

    /// Coproduct of the generators.
    fn coproduct_e(&self) -> UqTensorSquare {
        let mut out = UqTensorSquare::zero();
        out.add_term(KEY_E, KEY_K, &self.mode.one());
        out.add_term(KEY_ONE, KEY_E, &self.mode.one());
        out
    }

    fn coproduct_f(&self) -> UqTensorSquare {
        let mut out = UqTensorSquare::zero();
        out.add_term(KEY_F, KEY_ONE, &self.mode.one());
        out.add_term(KEY_K_INV, KEY_F, &self.mode.one());
        out
    }

    fn coproduct_k(&self, j: i32) -> UqTensorSquare {
        UqTensorSquare::monomial((0, j, 0), (0, j, 0), self.mode.one())
    }

    /// Product in U_q(sl2) tensor U_q(sl2), factorwise normal form.
    pub fn ts_multiply(
        &self,
        x: &UqTensorSquare,
        y: &UqTensorSquare,
    ) -> Result<UqTensorSquare, UqError> {
        let mut out = UqTensorSquare::zero();
        for ((l1, r1), c1) in x.terms.iter() {
            for ((l2, r2), c2) in y.terms.iter() {
                let left = self.multiply(
                    &UqElement::monomial(*l1, self.mode.one()),
                    &UqElement::monomial(*l2, self.mode.one()),
                )?;
                let right = self.multiply(
                    &UqElement::monomial(*r1, self.mode.one()),
                    &UqElement::monomial(*r2, self.mode.one()),
                )?;
                let c12 = c1 * c2;
                for (lk, lc) in left.terms.iter() {
                    for (rk, rc) in right.terms.iter() {
                        out.add_term(*lk, *rk, &(&(&c12 * lc) * rc));
                        if out.term_count() > self.term_limit {
                            return Err(UqError::TermLimit {
                                limit: self.term_limit,
                            });
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn ts_power(&self, x: &UqTensorSquare, n: u32) -> Result<UqTensorSquare, UqError> {
        let mut out = UqTensorSquare::one(self.mode);
        for _ in 0..n {
            out = self.ts_multiply(&out, x)?;
        }
        Ok(out)
    }

    /// The coproduct, extended from generators as an algebra homomorphism.
    pub fn coproduct(&self, x: &UqElement) -> Result<UqTensorSquare, UqError> {
        let mut out = UqTensorSquare::zero();
        for ((i, j, k), c) in x.terms.iter() {
            let mut term = self.ts_power(&self.coproduct_e(), *i)?;
            let dk = if *j >= 0 {
                self.ts_power(&self.coproduct_k(1), *j as u32)?
            } else {
                self.ts_power(&self.coproduct_k(-1), (-*j) as u32)?
            };
            term = self.ts_multiply(&term, &dk)?;
            term = self.ts_multiply(&term, &self.ts_power(&self.coproduct_f(), *k)?)?;
            for ((l, r), w) in term.terms.iter() {
                out.add_term(*l, *r, &(c * w));
            }
        }
        Ok(out)
    }

    /// The counit: 1 on K^j, 0 on monomials containing E or F.
    pub fn counit(&self, x: &UqElement) -> Scalar {
        let mut out = self.mode.zero();
        for ((i, _, k), c) in x.terms.iter() {
            if *i == 0 && *k == 0 {
                out = &out + c;
            }
        }
        out
    }

    /// The antipode, the algebra anti-homomorphism with
    /// S(E) = -EK^-1, S(F) = -KF, S(K) = K^-1.
    pub fn antipode(&self, x: &UqElement) -> Result<UqElement, UqError> {
        let s_e = UqElement::monomial((1, -1, 0), -&self.mode.one());
        let s_f = UqElement::monomial((0, 1, 1), -&self.mode.one());
        let mut out = UqElement::zero();
        for ((i, j, k), c) in x.terms.iter() {
            // anti-homomorphism: S(E^i K^j F^k) = S(F)^k S(K)^j S(E)^i
            let mut term = self.power(&s_f, *k as i64)?;
            term = self.multiply(&term, &self.k(-j))?;
            term = self.multiply(&term, &self.power(&s_e, *i as i64)?)?;
            out = out.add(&term.scale(c));
        }
        Ok(out)
    }

    // ---- Hopf axiom checks ----

    /// (coproduct tensor id) coproduct = (id tensor coproduct) coproduct.
    pub fn coassociativity_holds(&self, x: &UqElement) -> Result<bool, UqError> {
        let d = self.coproduct(x)?;
        let mut left: BTreeMap<(MonomialKey, MonomialKey, MonomialKey), Scalar> = BTreeMap::new();
        let mut right = left.clone();
        let add =
            |map: &mut BTreeMap<(MonomialKey, MonomialKey, MonomialKey), Scalar>,
             key: (MonomialKey, MonomialKey, MonomialKey),
             c: Scalar| {
                if c.is_zero() {
                    return;
                }
                match map.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get() + &c;
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            };
        for ((a, b), c) in d.terms.iter() {
            let da = self.coproduct(&UqElement::monomial(*a, self.mode.one()))?;
            for ((a1, a2), ca) in da.terms.iter() {
                add(&mut left, (*a1, *a2, *b), c * ca);
            }
            let db = self.coproduct(&UqElement::monomial(*b, self.mode.one()))?;
            for ((b1, b2), cb) in db.terms.iter() {
                add(&mut right, (*a, *b1, *b2), c * cb);
            }
        }
        Ok(left == right)
    }

    /// (counit tensor id) coproduct = id = (id tensor counit) coproduct.
    pub fn counit_laws_hold(&self, x: &UqElement) -> Result<bool, UqError> {
        let d = self.coproduct(x)?;
        let mut left = UqElement::zero();
        let mut right = UqElement::zero();
        for ((a, b), c) in d.terms.iter() {
            let ea = self.counit(&UqElement::monomial(*a, self.mode.one()));
            left.add_term(*b, &(&ea * c));
            let eb = self.counit(&UqElement::monomial(*b, self.mode.one()));
            right.add_term(*a, &(&eb * c));
        }
        Ok(&left == x && &right == x)
    }

    /// Multiply-contract of (antipode tensor id) coproduct equals
    /// counit(x) * 1.
    pub fn antipode_law_holds(&self, x: &UqElement) -> Result<bool, UqError> {
        let d = self.coproduct(x)?;
        let mut contracted = UqElement::zero();
        for ((a, b), c) in d.terms.iter() {
            let sa = self.antipode(&UqElement::monomial(*a, self.mode.one()))?;
            let prod = self.multiply(&sa, &UqElement::monomial(*b, self.mode.one()))?;
            contracted = contracted.add(&prod.scale(c));
        }
        let expected = UqElement::monomial(KEY_ONE, self.counit(x));
        Ok(contracted == expected)
    }

    // ---- Harish-Chandra maps ----

    /// Projection onto U_q(k) along the span of monomials with E or F.
    pub fn hc_mu(&self, z: &UqElement) -> UqKElement {
        let mut out = UqKElement::zero();
        for ((i, j, k), c) in z.terms.iter() {
            if *i == 0 && *k == 0 {
                out.add_term(*j, c);
            }
        }
        out
    }

    /// The shift automorphism of U_q(k): K^j -> q^j K^j.
    pub fn hc_sigma(&self, x: &UqKElement) -> UqKElement {
        let mut out = UqKElement::zero();
        for (j, c) in x.terms.iter() {
            out.add_term(*j, &(c * &self.mode.q_pow(*j as i64)));
        }
        out
    }

    /// The Harish-Chandra map sigma after mu, defined on the center only.
    ///
    /// # Errors
    /// `NotCentral` if the argument fails the centrality test.
    pub fn hc_gamma(&self, z: &UqElement) -> Result<UqKElement, UqError> {
        if !self.is_central(z)? {
            return Err(UqError::NotCentral);
        }
        Ok(self.hc_sigma(&self.hc_mu(z)))
    }
}
