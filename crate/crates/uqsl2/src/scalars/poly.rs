//! Dense univariate polynomials over the rationals, used internally by the
//! scalar types for gcd, division and cyclotomic reduction.
//!
//! A polynomial is a `Vec<Q>` in ascending degree order; the canonical form
//! is either empty (zero) or has a nonzero last element.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

pub(crate) type Q = BigRational;

/// Strip trailing zeros so the last coefficient is nonzero.
pub(crate) fn trim(v: &mut Vec<Q>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}


/// Degree, or `None` for the zero polynomial.
pub(crate) fn degree(p: &[Q]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub(crate) fn constant(c: Q) -> Vec<Q> {
    if c.is_zero() {
        Vec::new()
    } else {
        vec![c]
    }
}

pub(crate) fn one() -> Vec<Q> {
    vec![Q::one()]
}

pub(crate) fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            out[i + j] += ca * cb;
        }
    }
    trim(&mut out);
    out
}

/// Euclidean division: returns `(quotient, remainder)` with
/// `a = q*b + r` and `deg r < deg b`. Panics if `b` is zero.
pub(crate) fn divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem: Vec<Q> = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap();
    let mut quot = vec![Q::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let factor = rem.last().unwrap() / lead;
        quot[shift] = factor.clone();
        for (i, c) in b.iter().enumerate() {
            let t = &factor * c;
            rem[shift + i] -= t;
        }
        trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    trim(&mut quot);
    (quot, rem)
}

/// Exact division; panics if the remainder is nonzero.
pub(crate) fn exact_div(a: &[Q], b: &[Q]) -> Vec<Q> {
    let (q, r) = divrem(a, b);
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

/// Divide by the rational content so the coefficients become coprime
/// integers with positive leading coefficient.
pub(crate) fn make_primitive(p: &mut Vec<Q>) {
    if p.is_empty() {
        return;
    }
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for c in p.iter() {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut scale = Q::new(den_lcm, num_gcd);
    if p.last().unwrap().is_negative() {
        scale = -scale;
    }
    for c in p.iter_mut() {
        *c *= &scale;
    }
}

/// Divide by the leading coefficient.
pub(crate) fn monic(p: &mut [Q]) {
    if let Some(lead) = p.last().cloned() {
        for c in p.iter_mut() {
            *c /= &lead;
        }
    }
}

/// Monic gcd via the Euclidean algorithm, rescaling each remainder to a
/// primitive integer polynomial to keep coefficient growth in check.
pub(crate) fn gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    make_primitive(&mut a);
    make_primitive(&mut b);
    while !b.is_empty() {
        let (_, mut r) = divrem(&a, &b);
        make_primitive(&mut r);
        a = b;
        b = r;
    }
    let mut g = a;
    monic(&mut g);
    g
}

/// Extended gcd: returns `(g, s)` with `g = gcd(a, b)` monic and
/// `s*a ≡ g (mod b)`.
pub(crate) fn egcd_mod(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut old_r = a.to_vec();
    let mut r = b.to_vec();
    trim(&mut old_r);
    trim(&mut r);
    let mut old_s = one();
    let mut s: Vec<Q> = Vec::new();
    while !r.is_empty() {
        let (q, rem) = divrem(&old_r, &r);
        old_r = r;
        r = rem;
        let next_s = sub(&old_s, &mul(&q, &s));
        old_s = s;
        s = next_s;
    }
    if let Some(lead) = old_r.last().cloned() {
        for c in old_r.iter_mut() {
            *c /= &lead;
        }
        for c in old_s.iter_mut() {
            *c /= &lead;
        }
    }
    (old_r, old_s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Vec<Q> {
        let mut v: Vec<Q> = coeffs.iter().map(|&c| Q::from_integer(c.into())).collect();
        trim(&mut v);
        v
    }

    #[test]
    fn divrem_splits_exactly() {
        // (x^2 - 1) = (x + 1)(x - 1)
        let (q, r) = divrem(&p(&[-1, 0, 1]), &p(&[1, 1]));
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_empty());
    }

    #[test]
    fn gcd_of_common_factor() {
        // gcd(x^2 - 1, x^2 + 2x + 1) = x + 1
        let g = gcd(&p(&[-1, 0, 1]), &p(&[1, 2, 1]));
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        let g = gcd(&p(&[1, 1]), &p(&[2, 0, 1]));
        assert_eq!(g, one());
    }

    #[test]
    fn egcd_inverts_mod() {
        // inverse of x modulo x^2 + x + 1 is -(x + 1)
        let (g, s) = egcd_mod(&p(&[0, 1]), &p(&[1, 1, 1]));
        assert_eq!(g, one());
        let prod = mul(&s, &p(&[0, 1]));
        let (_, rem) = divrem(&prod, &p(&[1, 1, 1]));
        assert_eq!(rem, one());
    }
}
