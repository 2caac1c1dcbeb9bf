//! Residue rings `F[y]/(f)` for a monic modulus `f`.

use alloc::format;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Field;

/// A class in `F[y]/(f)`, stored by its reduced representative.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuotientElement<F> {
    modulus: Poly<F>,
    rep: Poly<F>,
}

impl<F: Field> QuotientElement<F> {
    /// Reduce `value` modulo the monic, nonconstant `modulus`.
    pub fn new(modulus: Poly<F>, value: &Poly<F>) -> Result<Self> {
        if modulus.is_constant() || !modulus.is_monic() {
            return Err(Error::Invalid(format!("modulus must be monic and nonconstant: {modulus:?}")));
        }
        let rep = value.rem(&modulus);
        Ok(QuotientElement { modulus, rep })
    }

    pub fn from_scalar(modulus: Poly<F>, c: F) -> Result<Self> {
        Self::new(modulus, &Poly::constant(c))
    }

    pub fn one(modulus: Poly<F>) -> Result<Self> {
        Self::from_scalar(modulus, F::one())
    }

    /// The class of the variable, a root of the modulus.
    pub fn generator(modulus: Poly<F>) -> Result<Self> {
        Self::new(modulus, &Poly::var())
    }

    pub fn modulus(&self) -> &Poly<F> {
        &self.modulus
    }

    pub fn rep(&self) -> &Poly<F> {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_constant() && self.rep.lc().is_one()
    }

    /// The representative when it is a constant.
    pub fn as_constant(&self) -> Option<F> {
        self.rep.is_constant().then(|| self.rep.constant_term())
    }

    fn same(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "quotient elements over different moduli");
    }

    fn with_rep(&self, rep: Poly<F>) -> Self {
        QuotientElement { modulus: self.modulus.clone(), rep }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same(other);
        self.with_rep(self.rep.add(&other.rep))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same(other);
        self.with_rep(self.rep.sub(&other.rep))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same(other);
        self.with_rep(self.rep.mul(&other.rep).rem(&self.modulus))
    }

    pub fn scale(&self, c: &F) -> Self {
        self.with_rep(self.rep.scale(c))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.with_rep(Poly::one());
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

    /// Inverse via the extended gcd with the modulus.
    pub fn invert(&self) -> Result<Self> {
        if self.rep.is_zero() {
            return Err(Error::Zero);
        }
        match self.rep.inverse_mod(&self.modulus) {
            Some(s) => Ok(self.with_rep(s)),
            None => Err(Error::NotInvertible(format!("{:?}", self.modulus))),
        }
    }

    /// Integer power, negative exponents through the exact inverse.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let p = self.pow(e.unsigned_abs());
        if e < 0 {
            p.invert()
        } else {
            Ok(p)
        }
    }

    /// Norm down to `F`: the resultant of the modulus and the
    /// representative, i.e. the product of the representative over the
    /// roots of the modulus.
    pub fn norm(&self) -> Result<F> {
        if self.rep.is_zero() {
            return Err(Error::Zero);
        }
        Ok(self.modulus.resultant(&self.rep))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac::{RatFunc, UniPoly};
    use crate::ring::Ring;
    use crate::scalar::Scalar;
    use alloc::vec;

    fn p(c: &[i64]) -> UniPoly {
        Poly::new(c.iter().map(|&v| Scalar::int(v)).collect())
    }

    #[test]
    fn norm_examples() {
        let u = QuotientElement::new(p(&[1, 0, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(u.norm().unwrap(), Scalar::int(2));
        let c = QuotientElement::new(p(&[1, 0, 0, 1]), &p(&[3])).unwrap();
        assert_eq!(c.norm().unwrap(), Scalar::int(27));
        // y^2 - x over k0(x), theta has norm -x.
        let x = RatFunc::var();
        let f = Poly::new(vec![x.neg(), RatFunc::zero(), RatFunc::one()]);
        let th = QuotientElement::generator(f).unwrap();
        assert_eq!(th.norm().unwrap(), x.neg());
    }

    #[test]
    fn invert_examples() {
        let th = QuotientElement::generator(p(&[1, 0, 1])).unwrap();
        assert_eq!(th.invert().unwrap().rep(), &p(&[0, -1]));
        let c = QuotientElement::new(p(&[1, 0, 1]), &p(&[4])).unwrap();
        assert_eq!(c.invert().unwrap().as_constant(), Some(Scalar::ratio(1, 4)));
        let bad = QuotientElement::new(p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap();
        assert!(matches!(bad.invert(), Err(Error::NotInvertible(_))));
    }
}
