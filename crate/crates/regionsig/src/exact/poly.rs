//! Dense univariate polynomials over arbitrary-precision integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial in one indeterminate `x` with `BigInt` coefficients.
///
/// Coefficients are stored by degree (`coeffs[k]` is the coefficient of
/// `x^k`) with no trailing zeros; the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyZ::constant(1)
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        PolyZ::from_ints(&[0, 1])
    }

    pub fn constant(c: i64) -> Self {
        PolyZ::from_coeffs(vec![BigInt::from(c)])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = PolyZ { coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from low-to-high `i64` coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        PolyZ::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        PolyZ::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &PolyZ) -> PolyZ {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> PolyZ {
        PolyZ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &PolyZ) -> PolyZ {
        if self.is_zero() || rhs.is_zero() {
            return PolyZ::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyZ::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> PolyZ {
        PolyZ::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, x0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact quotient `self / d`; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &PolyZ) -> Option<PolyZ> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(PolyZ::zero());
        }
        let dd = d.degree().unwrap();
        let mut rem = self.clone();
        let mut quo = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        let lead_d = d.leading().unwrap().clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                return None;
            }
            let lead_r = rem.leading().unwrap();
            let (c, r) = (lead_r / &lead_d, lead_r % &lead_d);
            if !r.is_zero() {
                return None;
            }
            let k = dr - dd;
            for (j, b) in d.coeffs.iter().enumerate() {
                rem.coeffs[k + j] -= &c * b;
            }
            rem.trim();
            quo[k] = c;
        }
        Some(PolyZ::from_coeffs(quo))
    }

    /// Substitutes `x -> -x` (negates odd-degree coefficients).
    pub fn flip_x(&self) -> PolyZ {
        PolyZ {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// True when the coefficient of `x^k` is divisible by `2^k` for all `k`,
    /// i.e. the polynomial lies in the subring generated by `2x`.
    pub fn in_two_x_subring(&self) -> bool {
        let two = BigInt::from(2);
        let mut pow = BigInt::one();
        for c in &self.coeffs {
            if !(c % &pow).is_zero() {
                return false;
            }
            pow *= &two;
        }
        true
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push('-');
            } else {
                out.push('+');
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if k > 0 {
                if show_coeff && !latex {
                    out.push('*');
                }
                out.push('x');
                if k > 1 {
                    if latex {
                        out.push_str(&format!("^{{{k}}}"));
                    } else {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyZ({self})")
    }
}

impl Add for &PolyZ {
    type Output = PolyZ;
    fn add(self, rhs: &PolyZ) -> PolyZ {
        PolyZ::add(self, rhs)
    }
}

impl Sub for &PolyZ {
    type Output = PolyZ;
    fn sub(self, rhs: &PolyZ) -> PolyZ {
        PolyZ::sub(self, rhs)
    }
}

impl Mul for &PolyZ {
    type Output = PolyZ;
    fn mul(self, rhs: &PolyZ) -> PolyZ {
        PolyZ::mul(self, rhs)
    }
}

impl Neg for &PolyZ {
    type Output = PolyZ;
    fn neg(self) -> PolyZ {
        PolyZ::neg(self)
    }
}
