//! Maps of finite index sets and the push-forward / pull-back calculus.

use super::matrix::{ExactMatrix, Ring};
use crate::{Error, Result};

/// A map `{0..domain-1} -> {0..image-1}` given by its value table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMap {
    domain: usize,
    image: usize,
    values: Vec<usize>,
}

impl FiniteMap {
    pub fn new(image: usize, values: Vec<usize>) -> Result<Self> {
        if let Some(&v) = values.iter().find(|&&v| v >= image) {
            return Err(Error::Size(format!(
                "map value {v} outside image of size {image}"
            )));
        }
        Ok(FiniteMap {
            domain: values.len(),
            image,
            values,
        })
    }

    pub fn identity(n: usize) -> Self {
        FiniteMap {
            domain: n,
            image: n,
            values: (0..n).collect(),
        }
    }

    pub fn domain_size(&self) -> usize {
        self.domain
    }

    pub fn image_size(&self) -> usize {
        self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.image];
        self.values.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.image];
        for &v in &self.values {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.image];
        for &v in &self.values {
            sizes[v] += 1;
        }
        sizes
    }

    /// `then ∘ self`.
    pub fn compose(&self, then: &FiniteMap) -> Result<FiniteMap> {
        if self.image != then.domain {
            return Err(Error::Size("composition size mismatch".into()));
        }
        FiniteMap::new(
            then.image,
            self.values.iter().map(|&v| then.values[v]).collect(),
        )
    }

    /// Pull-back: `(p^* v)(i) = v(p(i))`.
    pub fn pull_back<T: Clone>(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.image {
            return Err(Error::Size(format!(
                "pull_back: vector length {} != image size {}",
                v.len(),
                self.image
            )));
        }
        Ok(self.values.iter().map(|&j| v[j].clone()).collect())
    }

    /// Push-forward: `(p_* v)(y) = Σ_{x ∈ p⁻¹(y)} v(x)`.
    pub fn push_forward_vec<T: Ring>(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.domain {
            return Err(Error::Size(format!(
                "push_forward: vector length {} != domain size {}",
                v.len(),
                self.domain
            )));
        }
        let mut out = vec![T::zero(); self.image];
        for (x, val) in v.iter().enumerate() {
            let y = self.values[x];
            out[y] = out[y].add(val);
        }
        Ok(out)
    }

    /// Push-forward of a matrix along the pair `(p, q) = (self, q)`.
    pub fn push_forward_matrix<T: Ring>(
        &self,
        q: &FiniteMap,
        a: &ExactMatrix<T>,
    ) -> Result<ExactMatrix<T>> {
        if a.nrows() != self.domain || a.ncols() != q.domain {
            return Err(Error::Size(format!(
                "push_forward_matrix: {}x{} matrix vs maps with domains {}x{}",
                a.nrows(),
                a.ncols(),
                self.domain,
                q.domain
            )));
        }
        let mut out = ExactMatrix::zeros(self.image, q.image);
        for i in 0..a.nrows() {
            for j in 0..a.ncols() {
                let e = a.get(i, j);
                if !e.is_zero() {
                    out.add_to(self.values[i], q.values[j], e);
                }
            }
        }
        Ok(out)
    }

    /// Symmetric push-forward along `(self, self)`.
    pub fn push_forward_sym<T: Ring>(&self, a: &ExactMatrix<T>) -> Result<ExactMatrix<T>> {
        self.push_forward_matrix(self, a)
    }

    /// `w` is compatible when pulling back its push-forward returns `w`.
    pub fn is_compatible<T: Ring>(&self, w: &[T]) -> Result<bool> {
        let round_trip = self.pull_back(&self.push_forward_vec(w)?)?;
        Ok(round_trip == w)
    }

    /// The adjunction `(p_* v)ᵀ u = vᵀ (p^* u)`.
    pub fn adjunction_holds<T: Ring>(&self, v: &[T], u: &[T]) -> Result<bool> {
        let lhs = dot(&self.push_forward_vec(v)?, u);
        let rhs = dot(v, &self.pull_back(u)?);
        Ok(lhs == rhs)
    }
}

pub fn dot<T: Ring>(a: &[T], b: &[T]) -> T {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
}
