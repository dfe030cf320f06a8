//! Dense matrices over the exact coefficient rings used in this crate.

use super::loc::LocElem;
use super::poly::PolyZ;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;

/// Minimal commutative-ring interface for matrix entries.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for PolyZ {
    fn zero() -> Self {
        PolyZ::zero()
    }
    fn one() -> Self {
        PolyZ::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        PolyZ::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        PolyZ::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        PolyZ::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        PolyZ::neg(self)
    }
    fn is_zero(&self) -> bool {
        PolyZ::is_zero(self)
    }
}

impl Ring for LocElem {
    fn zero() -> Self {
        LocElem::zero()
    }
    fn one() -> Self {
        LocElem::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        LocElem::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        LocElem::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        LocElem::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        LocElem::neg(self)
    }
    fn is_zero(&self) -> bool {
        LocElem::is_zero(self)
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct ExactMatrix<T> {
    nrows: usize,
    ncols: usize,
    entries: Vec<T>,
}

impl<T: Ring> ExactMatrix<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        ExactMatrix {
            nrows,
            ncols,
            entries: vec![T::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Size("ragged rows".into()));
        }
        Ok(ExactMatrix {
            nrows,
            ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.ncols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &T) {
        let e = &mut self.entries[i * self.ncols + j];
        *e = e.add(v);
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        if self.nrows != self.ncols {
            return false;
        }
        for i in 0..self.nrows {
            for j in (i + 1)..self.ncols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols));
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        ExactMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols));
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        ExactMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries,
        }
    }

    pub fn neg(&self) -> Self {
        ExactMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().map(|e| e.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols, rhs.nrows, "matrix product size mismatch");
        let mut out = Self::zeros(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let t = a.mul(rhs.get(k, j));
                    out.add_to(i, j, &t);
                }
            }
        }
        out
    }

    pub fn scalar_mul(&self, c: &T) -> Self {
        ExactMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().map(|e| e.mul(c)).collect(),
        }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.nrows + rhs.nrows, self.ncols + rhs.ncols);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..rhs.nrows {
            for j in 0..rhs.ncols {
                out.set(self.nrows + i, self.ncols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    /// Column-vector times row-vector.
    pub fn outer(col: &[T], row: &[T]) -> Self {
        let mut out = Self::zeros(col.len(), row.len());
        for (i, a) in col.iter().enumerate() {
            for (j, b) in row.iter().enumerate() {
                out.set(i, j, a.mul(b));
            }
        }
        out
    }

    /// `I + c * (col ⊗ row)` with `c = ±1`, the congruence factors used by
    /// the move checks.
    pub fn rank_one_id(col: &[T], row: &[T], negate: bool) -> Self {
        assert_eq!(col.len(), row.len());
        let o = Self::outer(col, row);
        let id = Self::identity(col.len());
        if negate {
            id.sub(&o)
        } else {
            id.add(&o)
        }
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Conjugates by a permutation of indices: `out[p[i]][p[j]] = self[i][j]`.
    pub fn permute_symmetric(&self, p: &[usize]) -> Self {
        assert_eq!(self.nrows, self.ncols);
        assert_eq!(p.len(), self.nrows);
        let mut out = Self::zeros(self.nrows, self.ncols);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out.set(p[i], p[j], self.get(i, j).clone());
            }
        }
        out
    }
}

impl ExactMatrix<PolyZ> {
    /// Entrywise evaluation at a rational point.
    pub fn eval(&self, x0: &BigRational) -> ExactMatrix<BigRational> {
        self.map(|p| p.eval(x0))
    }

    pub fn to_loc(&self) -> ExactMatrix<LocElem> {
        self.map(|p| LocElem::from_poly(p.clone()))
    }

    /// Entrywise substitution `x -> -x`.
    pub fn flip_x(&self) -> Self {
        self.map(|p| p.flip_x())
    }
}

impl<T: fmt::Display> fmt::Debug for ExactMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.nrows, self.ncols)?;
        for i in 0..self.nrows {
            let row: Vec<String> = (0..self.ncols)
                .map(|j| self.entries[i * self.ncols + j].to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
