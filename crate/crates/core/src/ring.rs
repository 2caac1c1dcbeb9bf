//! Minimal algebraic traits shared by every exact type in the crate.
//!
//! The methods take references and return owned values; operator impls on
//! the concrete types delegate to these.

use core::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use alloc::vec;
use alloc::vec::Vec;

use crate::poly::Poly;

/// A commutative ring with identity whose elements carry no external context.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn from_int(v: i64) -> Self;

    /// Coefficient list of a product of two nonzero polynomials.
    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        let mut out = vec![Self::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = out[i + j].add(&x.mul(y));
                }
            }
        }
        out
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// A field: every nonzero element is invertible.
pub trait Field: Ring {
    /// `None` exactly when `self` is zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    /// Monic gcd of two polynomials that are not both zero.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        a.euclid_gcd(b)
    }

    /// Resultant of two nonconstant polynomials.
    fn poly_resultant(a: &Poly<Self>, b: &Poly<Self>) -> Self {
        a.euclid_resultant(b)
    }

    /// Inverse of `a` modulo a nonconstant `m`.
    fn poly_inverse_mod(a: &Poly<Self>, m: &Poly<Self>) -> Option<Poly<Self>> {
        a.euclid_inverse_mod(m)
    }

    /// Integer power allowing negative exponents.
    fn powi(&self, e: i64) -> Option<Self> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.inv()
        } else {
            Some(p)
        }
    }
}

/// Exact rationals.
pub type Q = BigRational;

impl Ring for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Field for Q {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Height of a rational: the larger of |numerator| and denominator.
pub(crate) fn rational_height(q: &Q) -> BigInt {
    let a = q.numer().abs();
    let b = q.denom().clone();
    if a > b {
        a
    } else {
        b
    }
}
