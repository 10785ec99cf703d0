//! Dense matrices of scalars over the active field.
//!
//! This is the storage type shared by the module constructors and the
//! elimination routines in [`crate::cohomology`]; it provides only exact
//! ring operations, no pivoting logic.

use std::fmt;

use crate::scalars::{FieldMode, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    mode: FieldMode,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zero(mode: FieldMode, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            mode,
            entries: vec![mode.zero(); rows * cols],
        }
    }

    pub fn identity(mode: FieldMode, n: usize) -> Self {
        let mut m = Self::zero(mode, n, n);
        for i in 0..n {
            m[(i, i)] = mode.one();
        }
        m
    }

    pub fn from_fn(
        mode: FieldMode,
        rows: usize,
        cols: usize,
        mut entry: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut m = Self::zero(mode, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = entry(r, c);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// `Some(c)` if the matrix equals c times the identity.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<Scalar> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self[(0, 0)].clone();
        for r in 0..self.rows {
            for col in 0..self.cols {
                let expected = if r == col { &c } else { &self.mode.zero() };
                if &self[(r, col)] != expected {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(other.entries.iter()) {
            *a = &*a + b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(other.entries.iter()) {
            *a = &*a - b;
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = &*a * s;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matrix dimensions do not match for multiplication"
        );
        let mut out = Self::zero(self.mode, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(r, c)] = &out[(r, c)] + &(a * b);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        assert!(self.is_square());
        let mut out = Self::identity(self.mode, self.rows);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = self.mode.zero();
                for c in 0..self.cols {
                    if self[(r, c)].is_zero() || v[c].is_zero() {
                        continue;
                    }
                    acc = &acc + &(&self[(r, c)] * &v[c]);
                }
                acc
            })
            .collect()
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.mode, self.cols, self.rows, |r, c| self[(c, r)].clone())
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
