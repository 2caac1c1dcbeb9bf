//! Dense univariate polynomials over an exact ring.

use alloc::vec;
use alloc::vec::Vec;
use core::mem;

use crate::ring::{Field, Ring};

/// Dense polynomial, coefficients stored low degree first.
///
/// The coefficient vector never has trailing zeros, so the zero polynomial is
/// the empty vector and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k];
        v.push(c);
        Self::new(v)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn constant_term(&self) -> R {
        self.coeff(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::new(R::poly_mul(&self.coeffs, &other.coeffs))
    }

    /// `lc(b)^k * self mod b`, computed without division.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let lb = b.lc();
        let mut r = self.clone();
        while !r.is_zero() && r.deg() >= b.deg() {
            let shift = Self::monomial(r.lc(), r.deg() - b.deg());
            r = r.scale(&lb).sub(&shift.mul(b));
        }
        r
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn pow(&self, mut e: u32) -> Self {
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

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&R::from_int(i as i64)))
                .collect(),
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division. Panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv_lc = d.lc().inv().expect("leading coefficient invertible");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul(&inv_lc);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(dc));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lc().is_one()
    }

    /// Scale to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Some(i) if !self.lc().is_one() => self.scale(&i),
            _ => self.clone(),
        }
    }

    /// Monic gcd; `None` when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Option<Self> {
        if self.is_zero() && other.is_zero() {
            return None;
        }
        Some(F::poly_gcd(self, other))
    }

    /// Plain Euclidean gcd with monic remainders.
    pub fn euclid_gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            let r = if r.is_zero() { r } else { r.monic() };
            a = mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// Extended gcd: `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> Option<(Self, Self, Self)> {
        if self.is_zero() && other.is_zero() {
            return None;
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = mem::replace(&mut t1, t);
        }
        let inv = r0.lc().inv().expect("nonzero gcd");
        Some((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Inverse of `self` modulo a nonconstant `m`, or `None` when they
    /// share a factor.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        let u = self.rem(m);
        match u.degree() {
            None => None,
            Some(0) => Some(Self::constant(u.lc().inv().expect("nonzero"))),
            Some(_) => F::poly_inverse_mod(&u, m),
        }
    }

    /// Extended Euclid with monic remainders.
    pub fn euclid_inverse_mod(&self, m: &Self) -> Option<Self> {
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut s0, mut s1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let inv = r1.lc().inv().expect("nonzero");
            r1 = r1.scale(&inv);
            s1 = s1.scale(&inv);
            let (q, r) = r0.divrem(&r1);
            r0 = mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1).rem(m));
            s0 = mem::replace(&mut s1, s);
        }
        (r0.deg() == 0).then(|| s0.scale(&r0.lc().inv().expect("nonzero")).rem(m))
    }

    /// Resultant, equal to the Sylvester determinant.
    ///
    /// Conventions: zero if either input is zero; `c^deg f` against a constant.
    pub fn resultant(&self, other: &Self) -> F {
        if self.is_zero() || other.is_zero() {
            return F::zero();
        }
        match (self.deg(), other.deg()) {
            (m, 0) => other.lc().pow(m as u32),
            (0, k) => self.lc().pow(k as u32),
            _ => F::poly_resultant(self, other),
        }
    }

    /// Resultant by the Euclidean remainder sequence.
    pub fn euclid_resultant(&self, other: &Self) -> F {
        if self.is_zero() || other.is_zero() {
            return F::zero();
        }
        let mut f = self.clone();
        let mut g = other.clone();
        let mut scale = F::one();
        loop {
            let m = f.deg();
            let k = g.deg();
            if k == 0 {
                return scale.mul(&g.lc().pow(m as u32));
            }
            if m == 0 {
                return scale.mul(&f.lc().pow(k as u32));
            }
            if m < k {
                if (m * k) % 2 == 1 {
                    scale = scale.neg();
                }
                mem::swap(&mut f, &mut g);
                continue;
            }
            let r = f.rem(&g);
            if r.is_zero() {
                return F::zero();
            }
            if (m * k) % 2 == 1 {
                scale = scale.neg();
            }
            scale = scale.mul(&g.lc().pow((m - r.deg()) as u32));
            // Res(g, c r') = c^deg g Res(g, r')
            let c = r.lc();
            scale = scale.mul(&c.pow(k as u32));
            let r = r.scale(&c.inv().expect("nonzero"));
            f = mem::replace(&mut g, r);
        }
    }

    /// Largest `k` with `d^k | self`; `self` must be nonzero, `d` nonconstant.
    pub fn multiplicity(&self, d: &Self) -> (usize, Self) {
        debug_assert!(!self.is_zero() && !d.is_constant());
        let mut k = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.exact_div(d) {
            cur = q;
            k += 1;
        }
        (k, cur)
    }

    /// Yun's squarefree decomposition: monic pairwise coprime squarefree parts
    /// with strictly increasing multiplicities. Constants give an empty list.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let p = self.monic();
        let dp = p.derivative();
        let a0 = p.gcd(&dp).expect("nonzero");
        let mut b = p.exact_div(&a0).expect("gcd divides");
        let c = dp.exact_div(&a0).expect("gcd divides");
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d).expect("b nonzero");
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("gcd divides");
            let c = d.exact_div(&a).expect("gcd divides");
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        self.squarefree_decomposition()
            .into_iter()
            .fold(Self::one(), |acc, (p, _)| acc.mul(&p))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_some_and(|g| g.is_constant())
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn from_int(v: i64) -> Self {
        Poly::constant(R::from_int(v))
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> core::ops::$tr<&Poly<R>> for &Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: &Poly<R>) -> Poly<R> {
                Poly::$m(self, rhs)
            }
        }
        impl<R: Ring> core::ops::$tr<Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                Poly::$m(&self, &rhs)
            }
        }
    };
}
poly_binop!(Add, add);
poly_binop!(Sub, sub);
poly_binop!(Mul, mul);

impl<R: Ring> core::ops::Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Q;

    fn p(c: &[i64]) -> Poly<Q> {
        Poly::new(c.iter().map(|&v| Q::from_int(v)).collect())
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        // (t-1)^2 (t+2) = t^3 - 3t + 2
        let f = p(&[2, -3, 0, 1]);
        assert_eq!(f.gcd(&f.derivative()).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[4, 2]).gcd(&Poly::zero()).unwrap(), p(&[2, 1]));
        assert!(Poly::<Q>::zero().gcd(&Poly::zero()).is_none());
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(p(&[1, 0, 1]).squarefree_decomposition(), vec![(p(&[1, 0, 1]), 1)]);
        let f = p(&[-1, 1]).pow(2).mul(&p(&[2, 1]).pow(3));
        assert_eq!(
            f.squarefree_decomposition(),
            vec![(p(&[-1, 1]), 2), (p(&[2, 1]), 3)]
        );
        assert!(p(&[5]).squarefree_decomposition().is_empty());
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(p(&[1, 0, 1]).resultant(&p(&[-1, 1])), Q::from_int(2));
        assert_eq!(p(&[3, 0, 1, 1]).resultant(&p(&[5])), Q::from_int(125));
        assert_eq!(p(&[5]).resultant(&p(&[1, 1])), Q::from_int(5));
        assert_eq!(p(&[1, 1]).resultant(&p(&[1, 1])), Q::from_int(0));
    }

    #[test]
    fn xgcd_bezout() {
        let a = p(&[1, 2, 3, 1]);
        let b = p(&[-2, 0, 1]);
        let (g, s, t) = a.xgcd(&b).unwrap();
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
