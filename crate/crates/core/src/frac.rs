//! Reduced fractions of univariate polynomials over a field.

use alloc::vec;
use alloc::vec::Vec;

use crate::poly::Poly;
use crate::ring::{Field, Ring};
use crate::scalar::Scalar;

/// `num / den` with `gcd(num, den) = 1` and `den` monic, so structural
/// equality is equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Frac<F> {
    num: Poly<F>,
    den: Poly<F>,
}

/// Elements of `l = k0(x)`.
pub type RatFunc = Frac<Scalar>;
/// Elements of `l(y) = k0(x)(y)`.
pub type BiRatFunc = Frac<RatFunc>;
/// Univariate polynomials over the ground field.
pub type UniPoly = Poly<Scalar>;
/// Polynomials in `y` over `l`.
pub type LPoly = Poly<RatFunc>;

impl<F: Field> Frac<F> {
    /// `None` when the denominator is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = num.gcd(&den).expect("den nonzero");
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        Some(Self::normalize_den(num, den))
    }

    fn normalize_den(num: Poly<F>, den: Poly<F>) -> Self {
        let lc = den.lc();
        if lc.is_one() {
            Frac { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            Frac { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        Frac { num: p, den: Poly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn into_parts(self) -> (Poly<F>, Poly<F>) {
        (self.num, self.den)
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_constant()
    }

    /// The constant value, when this is a constant.
    pub fn as_constant(&self) -> Option<F> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.constant_term())
    }

    /// Value at a point; `None` at a pole.
    pub fn eval(&self, at: &F) -> Option<F> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(at).mul(&d.inv().expect("nonzero")))
    }

    /// `deg(num) - deg(den)`; the negated valuation at infinity.
    pub fn degree(&self) -> Option<i64> {
        (!self.num.is_zero()).then(|| self.num.deg() as i64 - self.den.deg() as i64)
    }

    /// Ratio of leading coefficients, the unit part at infinity.
    pub fn leading_ratio(&self) -> F {
        self.num.lc()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Frac<G> {
        Frac::new(self.num.map(&f), self.den.map(&f)).expect("nonzero image of denominator")
    }

    /// Compose with a polynomial: `self(p)`. `None` if the denominator
    /// vanishes identically.
    pub fn compose(&self, p: &Poly<F>) -> Option<Self> {
        Frac::new(self.num.compose(p), self.den.compose(p))
    }

    /// Compose with a rational function: `self(r)`.
    pub fn compose_frac(&self, r: &Frac<F>) -> Option<Self> {
        let d = self.num.deg().max(self.den.deg());
        let homog = |p: &Poly<F>| {
            let mut acc = Poly::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let t = r.num.pow(i as u32).mul(&r.den.pow((d - i) as u32)).scale(c);
                acc = acc.add(&t);
            }
            acc
        };
        Frac::new(homog(&self.num), homog(&self.den))
    }
}

impl<F: Field> Ring for Frac<F> {
    fn zero() -> Self {
        Frac { num: Poly::zero(), den: Poly::one() }
    }
    fn one() -> Self {
        Frac { num: Poly::one(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.den.is_constant() && self.num.is_constant() && self.num.lc().is_one()
    }
    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Frac::new(self.num.add(&other.num), self.den.clone()).expect("nonzero");
        }
        if self.den.is_constant() {
            return Frac::normalize_den(self.num.mul(&other.den).add(&other.num), other.den.clone());
        }
        if other.den.is_constant() {
            return Frac::normalize_den(other.num.mul(&self.den).add(&self.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Frac::new(num, self.den.mul(&other.den)).expect("nonzero")
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn neg(&self) -> Self {
        Frac { num: self.num.neg(), den: self.den.clone() }
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let cancel = |n: &Poly<F>, d: &Poly<F>| {
            if d.is_constant() || n.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = n.gcd(d).expect("nonzero");
            if g.is_constant() {
                (n.clone(), d.clone())
            } else {
                (n.exact_div(&g).expect("divides"), d.exact_div(&g).expect("divides"))
            }
        };
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        Frac::normalize_den(n1.mul(&n2), d1.mul(&d2))
    }
    fn from_int(v: i64) -> Self {
        Self::constant(F::from_int(v))
    }
}

impl<F: Field> Field for Frac<F> {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Frac::normalize_den(self.den.clone(), self.num.clone()))
    }

    // Primitive remainder sequence over F[x]; Euclid over F(x) swells.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        if a.is_zero() || b.is_zero() {
            return if a.is_zero() { b.monic() } else { a.monic() };
        }
        let (mut r0, mut r1) = (primitive(&split_denominator(a).1), primitive(&split_denominator(b).1));
        if r0.deg() < r1.deg() {
            core::mem::swap(&mut r0, &mut r1);
        }
        while !r1.is_zero() {
            let r = primitive(&r0.pseudo_rem(&r1));
            r0 = core::mem::replace(&mut r1, r);
        }
        r0.map(|c| Frac::from_poly(c.clone())).monic()
    }

    fn poly_resultant(a: &Poly<Self>, b: &Poly<Self>) -> Self {
        let (da, pa) = split_denominator(a);
        let (db, pb) = split_denominator(b);
        let det = bareiss(sylvester(&pa, &pb), false).map(|(det, _)| det).unwrap_or_else(Poly::zero);
        // Res(pa/da, pb/db) = Res(pa, pb) / (da^deg b * db^deg a)
        let den = da.pow(b.deg() as u32).mul(&db.pow(a.deg() as u32));
        Frac::new(det, den).expect("nonzero denominator")
    }

    fn poly_inverse_mod(a: &Poly<Self>, m: &Poly<Self>) -> Option<Poly<Self>> {
        let (_, pm) = split_denominator(m);
        let (da, pa) = split_denominator(a);
        // z * Syl(m, a) = (0, ..., 0, 1) with z = (t | s), s*pa + t*pm = 1
        let syl = sylvester(&pm, &pa);
        let size = syl.len();
        let mut aug: Vec<Vec<Poly<F>>> = (0..size).map(|i| syl.iter().map(|row| row[i].clone()).collect()).collect();
        for (i, row) in aug.iter_mut().enumerate() {
            row.push(if i + 1 == size { Poly::one() } else { Poly::zero() });
        }
        let (_, tri) = bareiss(aug, true)?;
        let (y, d) = back_substitute(&tri);
        // s occupies the last deg m entries, highest power first; inverse = da * s
        let s = y[a.deg()..].iter().rev().map(|c| Frac::new(c.mul(&da), d.clone()).expect("nonzero")).collect();
        Some(Poly::new(s))
    }
}

/// `(d, p)` with `p = d * a` over `F[x]` and `d` monic.
fn split_denominator<F: Field>(a: &Poly<Frac<F>>) -> (Poly<F>, Poly<Poly<F>>) {
    let lcm = a.coeffs().iter().fold(Poly::one(), |l: Poly<F>, c| {
        let g = l.gcd(&c.den).expect("nonzero");
        l.mul(&c.den.exact_div(&g).expect("gcd divides"))
    });
    let p = a.map(|c| c.num.mul(&lcm.exact_div(&c.den).expect("divides lcm")));
    (lcm, p)
}

/// Rows: `deg b` shifts of `a`, then `deg a` shifts of `b`, highest power first.
fn sylvester<R: Ring>(a: &Poly<R>, b: &Poly<R>) -> Vec<Vec<R>> {
    let (m, k) = (a.deg(), b.deg());
    let size = m + k;
    let mut rows = Vec::with_capacity(size);
    for (p, count) in [(a, k), (b, m)] {
        let desc: Vec<R> = p.coeffs().iter().rev().cloned().collect();
        for shift in 0..count {
            let mut row = vec![R::zero(); size];
            for (j, c) in desc.iter().enumerate() {
                row[shift + j] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Fraction-free elimination. Returns the determinant of the square part
/// and the triangularized matrix; `None` if singular.
fn bareiss<F: Field>(mut m: Vec<Vec<Poly<F>>>, augmented: bool) -> Option<(Poly<F>, Vec<Vec<Poly<F>>>)> {
    let n = m.len();
    let width = if augmented { n + 1 } else { n };
    let mut prev = Poly::one();
    let mut negate = false;
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..width {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = if negate { prev.neg() } else { prev };
    Some((det, m))
}

/// Solution of a triangularized augmented system as `(numerators, d)`;
/// `d * x` is polynomial by Cramer's rule.
fn back_substitute<F: Field>(tri: &[Vec<Poly<F>>]) -> (Vec<Poly<F>>, Poly<F>) {
    let n = tri.len();
    let d = tri[n - 1][n - 1].clone();
    let mut y = vec![Poly::zero(); n];
    for i in (0..n).rev() {
        let mut acc = d.mul(&tri[i][n]);
        for j in i + 1..n {
            acc = acc.sub(&tri[i][j].mul(&y[j]));
        }
        y[i] = acc.exact_div(&tri[i][i]).expect("Cramer numerators are polynomial");
    }
    (y, d)
}

fn primitive<F: Field>(p: &Poly<Poly<F>>) -> Poly<Poly<F>> {
    let Some(content) = p.coeffs().iter().filter(|c| !c.is_zero()).fold(None, |g: Option<Poly<F>>, c| {
        Some(g.map_or_else(|| c.monic(), |g| g.gcd(c).expect("nonzero")))
    }) else {
        return Poly::zero();
    };
    if content.is_one() {
        return p.clone();
    }
    p.map(|c| c.exact_div(&content).expect("content divides"))
}

macro_rules! frac_binop {
    ($tr:ident, $m:ident) => {
        impl<F: Field> core::ops::$tr<&Frac<F>> for &Frac<F> {
            type Output = Frac<F>;
            fn $m(self, rhs: &Frac<F>) -> Frac<F> {
                Ring::$m(self, rhs)
            }
        }
        impl<F: Field> core::ops::$tr<Frac<F>> for Frac<F> {
            type Output = Frac<F>;
            fn $m(self, rhs: Frac<F>) -> Frac<F> {
                Ring::$m(&self, &rhs)
            }
        }
    };
}
frac_binop!(Add, add);
frac_binop!(Sub, sub);
frac_binop!(Mul, mul);

impl<F: Field> core::ops::Neg for Frac<F> {
    type Output = Frac<F>;
    fn neg(self) -> Frac<F> {
        Ring::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        Poly::new(c.iter().map(|&v| Scalar::int(v)).collect())
    }

    #[test]
    fn gcd_over_rational_functions() {
        let x = RatFunc::var();
        let lin = |c: RatFunc| Poly::new(vec![c, RatFunc::one()]);
        let (a, b, c) = (lin(x.clone()), lin(x.neg()), lin(RatFunc::one()));
        assert!(a.gcd(&b).unwrap().is_one());
        let y = Poly::<RatFunc>::var();
        assert_eq!(y.mul(&a).gcd(&y.mul(&y)).unwrap(), y);
        let g = a.mul(&c).gcd(&a.mul(&b)).unwrap();
        assert_eq!(g, a);
        let half = Poly::constant(x.inv().unwrap());
        assert_eq!(a.mul(&half).gcd(&a.mul(&a)).unwrap(), a);
    }

    #[test]
    fn fraction_free_matches_euclid() {
        let x = RatFunc::var();
        let c = |v: i64| RatFunc::from_int(v);
        let f = Poly::new(vec![x.clone(), c(3), x.mul(&x).inv().unwrap(), c(1)]);
        let g = Poly::new(vec![c(2).sub(&x), x.add(&c(1)).inv().unwrap(), c(-4)]);
        assert_eq!(f.resultant(&g), f.euclid_resultant(&g));
        assert_eq!(g.resultant(&f), g.euclid_resultant(&f));
        let inv = g.inverse_mod(&f).unwrap();
        assert_eq!(inv, g.euclid_inverse_mod(&f).unwrap());
        assert!(inv.mul(&g).rem(&f).is_one());
        let shared = Poly::new(vec![c(1), c(1)]);
        assert!(shared.mul(&g).inverse_mod(&shared.mul(&f)).is_none());
    }

    #[test]
    fn reduces_and_normalizes() {
        let f = Frac::new(p(&[-1, 0, 1]), p(&[-2, 2])).unwrap();
        assert_eq!(f.num(), &p(&[1, 1]).scale(&Scalar::ratio(1, 2)));
        assert_eq!(f.den(), &p(&[1]));
        assert!(Frac::new(p(&[1]), p(&[])).is_none());
    }

    #[test]
    fn field_ops() {
        let a = Frac::new(p(&[1, 1]), p(&[0, 1])).unwrap();
        let b = Frac::new(p(&[0, 1]), p(&[-1, 1])).unwrap();
        let s = a.add(&b);
        assert_eq!(s.sub(&b), a);
        assert!(a.mul(&a.inv().unwrap()).is_one());
        assert_eq!(a.mul(&b).div(&b).unwrap(), a);
    }

    #[test]
    fn compose_with_fraction() {
        // (t^2 + 1) at t = 1/(t+1) is (t^2 + 2t + 2)/(t+1)^2.
        let f = RatFunc::from_poly(p(&[1, 0, 1]));
        let r = Frac::new(p(&[1]), p(&[1, 1])).unwrap();
        let got = f.compose_frac(&r).unwrap();
        assert_eq!(got, Frac::new(p(&[2, 2, 1]), p(&[1, 2, 1])).unwrap());
        let _ = vec![0u8];
    }
}
