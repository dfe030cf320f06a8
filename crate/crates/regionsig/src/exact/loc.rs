//! Elements of the localisation of `Z[x]` at powers of `2x+1`.

use super::poly::PolyZ;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `num / (2x+1)^k`, kept in normal form: either `k == 0` or `2x+1` does
/// not divide `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LocElem {
    num: PolyZ,
    k: u32,
}

/// The distinguished denominator `2x+1`.
pub fn denom_poly() -> PolyZ {
    PolyZ::from_ints(&[1, 2])
}

impl LocElem {
    /// Builds `num / (2x+1)^k` and cancels common factors of `2x+1`.
    pub fn new(num: PolyZ, k: u32) -> Self {
        let mut e = LocElem { num, k };
        e.normalize();
        e
    }

    pub fn from_poly(num: PolyZ) -> Self {
        LocElem { num, k: 0 }
    }

    pub fn zero() -> Self {
        LocElem::from_poly(PolyZ::zero())
    }

    pub fn one() -> Self {
        LocElem::from_poly(PolyZ::one())
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.k = 0;
            return;
        }
        let d = denom_poly();
        while self.k > 0 {
            match self.num.div_exact(&d) {
                Some(q) => {
                    self.num = q;
                    self.k -= 1;
                }
                None => break,
            }
        }
    }

    pub fn num(&self) -> &PolyZ {
        &self.num
    }

    pub fn denom_exponent(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &LocElem) -> LocElem {
        let k = self.k.max(rhs.k);
        let d = denom_poly();
        let mut a = self.num.clone();
        for _ in self.k..k {
            a = a.mul(&d);
        }
        let mut b = rhs.num.clone();
        for _ in rhs.k..k {
            b = b.mul(&d);
        }
        LocElem::new(a.add(&b), k)
    }

    pub fn sub(&self, rhs: &LocElem) -> LocElem {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> LocElem {
        LocElem {
            num: self.num.neg(),
            k: self.k,
        }
    }

    pub fn mul(&self, rhs: &LocElem) -> LocElem {
        LocElem::new(self.num.mul(&rhs.num), self.k + rhs.k)
    }

    /// Inverse, when the element is a unit (`±(2x+1)^m` up to the stored
    /// denominator).
    pub fn try_invert(&self) -> Option<LocElem> {
        if self.num.is_zero() {
            return None;
        }
        let d = denom_poly();
        let mut m = 0u32;
        let mut core = self.num.clone();
        while let Some(q) = core.div_exact(&d) {
            core = q;
            m += 1;
        }
        if core == PolyZ::one() || core == PolyZ::constant(-1) {
            // self = s * (2x+1)^(m-k); inverse = s * (2x+1)^(k-m).
            let sign = core;
            let mut num = sign;
            if self.k >= m {
                for _ in 0..(self.k - m) {
                    num = num.mul(&d);
                }
                Some(LocElem::new(num, 0))
            } else {
                Some(LocElem::new(num, m - self.k))
            }
        } else {
            None
        }
    }
}

impl From<PolyZ> for LocElem {
    fn from(p: PolyZ) -> Self {
        LocElem::from_poly(p)
    }
}

impl fmt::Display for LocElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/(2*x+1)^{}", self.num, self.k)
        }
    }
}

impl fmt::Debug for LocElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LocElem({self})")
    }
}

impl Add for &LocElem {
    type Output = LocElem;
    fn add(self, rhs: &LocElem) -> LocElem {
        LocElem::add(self, rhs)
    }
}

impl Sub for &LocElem {
    type Output = LocElem;
    fn sub(self, rhs: &LocElem) -> LocElem {
        LocElem::sub(self, rhs)
    }
}

impl Mul for &LocElem {
    type Output = LocElem;
    fn mul(self, rhs: &LocElem) -> LocElem {
        LocElem::mul(self, rhs)
    }
}

impl Neg for &LocElem {
    type Output = LocElem;
    fn neg(self) -> LocElem {
        LocElem::neg(self)
    }
}
