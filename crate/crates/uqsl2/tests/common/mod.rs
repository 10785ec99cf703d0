//! Shared helpers for the integration and acceptance suites: seeded
//! random generators for scalars and PBW elements, a dense row-reduction
//! oracle kept independent of the library's elimination path, and a
//! floating-point evaluation oracle for root-of-unity specialization.

#![allow(dead_code)]

use num::complex::Complex64;
use num::{BigRational, ToPrimitive};
use rand::rngs::StdRng;
use rand::Rng;
use rand::SeedableRng;

use uqsl2::matrix::ExactMatrix;
use uqsl2::scalars::{CyclotomicNumber, FieldMode, LaurentPoly, RationalFunction, Scalar};
use uqsl2::uq::UqElement;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random Laurent polynomial with small support and small integer
/// coefficients; never zero.
pub fn random_laurent(rng: &mut StdRng) -> LaurentPoly {
    loop {
        let mut p = LaurentPoly::zero();
        let terms = rng.random_range(1..=3);
        for _ in 0..terms {
            let exp = rng.random_range(-3..=3);
            let coeff = rng.random_range(-4i64..=4);
            p.add_term(exp, &BigRational::from_integer(coeff.into()));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random nonzero scalar in the given mode. Generic values are built
/// from random Laurent numerators over denominators that stay pole-free
/// at every root of unity with order >= 3.
pub fn random_scalar(rng: &mut StdRng, mode: FieldMode) -> Scalar {
    loop {
        let s = match mode {
            FieldMode::Generic => {
                let num = random_laurent(rng);
                let den = match rng.random_range(0..3) {
                    0 => LaurentPoly::one(),
                    1 => LaurentPoly::q_pow(1).sub(&LaurentPoly::q_pow(-1)),
                    _ => {
                        let d = LaurentPoly::q_pow(1).sub(&LaurentPoly::q_pow(-1));
                        d.mul(&d)
                    }
                };
                Scalar::Rational(RationalFunction::new(num, den).unwrap())
            }
            FieldMode::RootOfUnity(p_prime) => {
                Scalar::Cyclotomic(CyclotomicNumber::from_laurent(p_prime, &random_laurent(rng)))
            }
        };
        if !s.is_zero() {
            return s;
        }
    }
}

/// A random PBW element with a few terms of bounded degree.
pub fn random_uq_element(rng: &mut StdRng, mode: FieldMode, max_terms: usize) -> UqElement {
    let mut out = UqElement::zero();
    let terms = rng.random_range(1..=max_terms);
    for _ in 0..terms {
        let i = rng.random_range(0..=2u32);
        let j = rng.random_range(-2..=2i32);
        let k = rng.random_range(0..=2u32);
        out.add_term((i, j, k), &random_scalar(rng, mode));
    }
    out
}

// ---- independent dense row-reduction oracle ----

/// Forward elimination without pivot normalization or back substitution,
/// counting the nonzero rows left: a second, deliberately plain route to
/// the rank.
pub fn oracle_rank(rows: Vec<Vec<Scalar>>) -> usize {
    let mut rows: Vec<Vec<Scalar>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut rank = 0;
    let width = rows.first().map_or(0, Vec::len);
    let mut used = vec![false; rows.len()];
    for col in 0..width {
        let Some(pivot) = (0..rows.len())
            .find(|&r| !used[r] && !rows[r][col].is_zero())
        else {
            continue;
        };
        used[pivot] = true;
        rank += 1;
        let pivot_row = rows[pivot].clone();
        let pivot_inv = pivot_row[col].invert().unwrap();
        for (r, row) in rows.iter_mut().enumerate() {
            if used[r] || row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &pivot_inv;
            for c in 0..width {
                let t = &factor * &pivot_row[c];
                row[c] = &row[c] - &t;
            }
        }
    }
    rank
}

pub fn matrix_rows(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

pub fn matrix_cols(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    (0..m.cols())
        .map(|c| (0..m.rows()).map(|r| m[(r, c)].clone()).collect())
        .collect()
}

/// dim(A + B) for row-span subspaces given by spanning sets.
pub fn oracle_sum_dim(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> usize {
    let mut stacked: Vec<Vec<Scalar>> = a.to_vec();
    stacked.extend(b.to_vec());
    oracle_rank(stacked)
}

/// Cohomology dimensions (s_minus, s_plus) of a finite module computed by
/// rank arithmetic only: dim(U cap W) = dim U + dim W - dim(U + W).
pub fn oracle_cohomology_dims(m: &uqsl2::repmod::FiniteModule) -> (usize, usize) {
    let n = m.dim();
    let rank_e = oracle_rank(matrix_rows(m.mat_e()));
    let rank_f = oracle_rank(matrix_rows(m.mat_f()));
    let dim_ker_f = n - rank_f;
    let dim_ker_e = n - rank_e;
    // spanning sets: kernels via the library is forbidden here, so build
    // them from scratch by solving with the plain elimination
    let ker_f = oracle_kernel(m.mat_f());
    let ker_e = oracle_kernel(m.mat_e());
    assert_eq!(ker_f.len(), dim_ker_f);
    assert_eq!(ker_e.len(), dim_ker_e);
    let im_e = matrix_cols(m.mat_e());
    let im_f = matrix_cols(m.mat_f());
    let dim_ker_f_cap_im_e = dim_ker_f + rank_e - oracle_sum_dim(&ker_f, &im_e);
    let dim_ker_e_cap_im_f = dim_ker_e + rank_f - oracle_sum_dim(&ker_e, &im_f);
    (dim_ker_f - dim_ker_f_cap_im_e, dim_ker_e - dim_ker_e_cap_im_f)
}

/// Textbook kernel computation: full Gauss-Jordan on an augmented copy,
/// written independently of the library's routine.
pub fn oracle_kernel(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    let mode = m.mode();
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<Scalar>> = (0..rows).map(|r| m.row(r).to_vec()).collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut row = 0;
    for col in 0..cols {
        let mut pivot = None;
        for r in row..rows {
            if !a[r][col].is_zero() {
                pivot = Some(r);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        a.swap(row, p);
        let inv = a[row][col].invert().unwrap();
        for c in 0..cols {
            a[row][c] = &a[row][c] * &inv;
        }
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..cols {
                    let t = &factor * &a[row][c];
                    a[r][c] = &a[r][c] - &t;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![mode.zero(); cols];
        v[free] = mode.one();
        for col in 0..cols {
            if let Some(r) = pivot_of_col[col] {
                v[col] = -&a[r][free];
            }
        }
        basis.push(v);
    }
    basis
}

// ---- floating-point evaluation oracle ----

fn rational_to_f64(c: &BigRational) -> f64 {
    c.numer().to_f64().unwrap() / c.denom().to_f64().unwrap()
}

/// Evaluate a Laurent polynomial at the primitive root e^{2 pi i / order}.
pub fn eval_laurent_at_root(p: &LaurentPoly, order: u32) -> Complex64 {
    let root = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / order as f64);
    p.iter().fold(Complex64::new(0.0, 0.0), |acc, (e, c)| {
        acc + root.powi(*e as i32) * rational_to_f64(c)
    })
}

pub fn eval_rational_at_root(x: &RationalFunction, order: u32) -> Complex64 {
    eval_laurent_at_root(x.numerator(), order) / eval_laurent_at_root(x.denominator(), order)
}

pub fn eval_cyclotomic(x: &CyclotomicNumber) -> Complex64 {
    let order = x.order();
    let root = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / order as f64);
    x.residue()
        .iter()
        .enumerate()
        .fold(Complex64::new(0.0, 0.0), |acc, (e, c)| {
            acc + root.powi(e as i32) * rational_to_f64(c)
        })
}
