//! Fraction-managed Gaussian elimination over the active field: reduced
//! row echelon form, kernel and image bases, and quotient representatives.
//!
//! Pivoting takes the first nonzero entry in row order; magnitude-based
//! strategies are meaningless over exact fields, and this choice keeps the
//! output deterministic. Kernel bases come from the free-variable
//! parametrization, so a coordinate-subspace kernel is returned as actual
//! standard basis vectors, which in turn lets quotient representatives be
//! named basis vectors whenever possible.

use crate::matrix::ExactMatrix;
use crate::scalars::{FieldMode, Scalar};

use super::CohomologyError;

/// Reduce to reduced row echelon form in place; returns the pivot columns.
pub fn rref_in_place(m: &mut ExactMatrix) -> Vec<usize> {
    let rows = m.rows();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot_row) = (row..rows).find(|&r| !m[(r, col)].is_zero()) else {
            continue;
        };
        if pivot_row != row {
            for c in 0..cols {
                let tmp = m[(pivot_row, c)].clone();
                m[(pivot_row, c)] = m[(row, c)].clone();
                m[(row, c)] = tmp;
            }
        }
        let inv = m[(row, col)]
            .invert()
            .expect("pivot entries are nonzero by construction");
        for c in col..cols {
            m[(row, c)] = &m[(row, c)] * &inv;
        }
        for r in 0..rows {
            if r == row || m[(r, col)].is_zero() {
                continue;
            }
            let factor = m[(r, col)].clone();
            for c in col..cols {
                let t = &m[(row, c)] * &factor;
                m[(r, c)] = &m[(r, c)] - &t;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(m: &ExactMatrix) -> usize {
    let mut work = m.clone();
    rref_in_place(&mut work).len()
}

/// Basis of the null space, one vector per free column, in ascending
/// free-column order.
pub fn kernel(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    let mode = m.mode();
    let mut work = m.clone();
    let pivots = rref_in_place(&mut work);
    let cols = m.cols();
    let mut out = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![mode.zero(); cols];
        v[free] = mode.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -&work[(r, free)];
        }
        out.push(v);
    }
    out
}

/// Echelon basis of the column space (row space of the transpose).
pub fn image(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    let mut work = m.transpose();
    let pivots = rref_in_place(&mut work);
    (0..pivots.len())
        .map(|r| work.row(r).to_vec())
        .collect()
}

fn leading_index(v: &[Scalar]) -> Option<usize> {
    v.iter().position(|c| !c.is_zero())
}

/// Row-reduce a list of vectors to an echelon basis of their span.
pub fn echelon_span(
    vectors: &[Vec<Scalar>],
    mode: FieldMode,
    len: usize,
) -> Result<Vec<Vec<Scalar>>, CohomologyError> {
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for v in vectors {
        if v.len() != len {
            return Err(CohomologyError::DimensionMismatch);
        }
        insert_into_echelon(&mut rows, v.clone(), mode);
    }
    Ok(rows)
}

/// Reduce `v` against echelon rows; the remainder is zero iff `v` lies in
/// their span.
fn reduce_against(rows: &[Vec<Scalar>], mut v: Vec<Scalar>) -> Vec<Scalar> {
    for row in rows {
        let Some(lead) = leading_index(row) else { continue };
        if v[lead].is_zero() {
            continue;
        }
        let factor = &v[lead] * &row[lead].invert().expect("echelon leading entries are nonzero");
        for (a, b) in v.iter_mut().zip(row.iter()) {
            let t = &factor * b;
            *a = &*a - &t;
        }
    }
    v
}

fn insert_into_echelon(rows: &mut Vec<Vec<Scalar>>, v: Vec<Scalar>, _mode: FieldMode) {
    let reduced = reduce_against(rows, v);
    if let Some(lead) = leading_index(&reduced) {
        let pos = rows
            .iter()
            .position(|r| leading_index(r).map_or(true, |l| l > lead))
            .unwrap_or(rows.len());
        rows.insert(pos, reduced);
    }
}

/// Representatives of span(space)/span(sub), chosen among the given
/// spanning vectors of `space` (echelon-pivot basis vectors in practice).
///
/// # Errors
/// `DimensionMismatch` when the ambient lengths disagree.
pub fn quotient_basis(
    sub: &[Vec<Scalar>],
    space: &[Vec<Scalar>],
    mode: FieldMode,
) -> Result<Vec<Vec<Scalar>>, CohomologyError> {
    let len = space
        .first()
        .or_else(|| sub.first())
        .map(Vec::len)
        .unwrap_or(0);
    let mut work = echelon_span(sub, mode, len)?;
    let mut reps = Vec::new();
    for w in space {
        if w.len() != len {
            return Err(CohomologyError::DimensionMismatch);
        }
        let reduced = reduce_against(&work, w.clone());
        if leading_index(&reduced).is_some() {
            reps.push(w.clone());
            insert_into_echelon(&mut work, reduced, mode);
        }
    }
    Ok(reps)
}
