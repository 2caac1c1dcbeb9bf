//! The ground field: the cyclotomic field Q(rho), rho a primitive n-th root
//! of unity, standing in for an algebraically closed base field.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::error::Error;
use crate::poly::Poly;
use crate::ring::{rational_height, Field, Ring, Q};

/// Largest supported root-of-unity order.
pub const MAX_ORDER: u32 = 48;

const W: usize = MAX_ORDER as usize + 1;

const fn table_degree(p: &[i64; W]) -> usize {
    let mut d = W - 1;
    while d > 0 && p[d] == 0 {
        d -= 1;
    }
    d
}

const fn build_cyclotomic_table() -> [[i64; W]; W] {
    let mut table = [[0i64; W]; W];
    let mut m = 1;
    while m < W {
        let mut cur = [0i64; W];
        cur[0] = -1;
        cur[m] = 1;
        let mut cur_deg = m;
        let mut d = 1;
        while d < m {
            if m % d == 0 {
                let div = table[d];
                let dd = table_degree(&div);
                let mut quot = [0i64; W];
                let mut k = cur_deg - dd + 1;
                while k > 0 {
                    k -= 1;
                    let c = cur[k + dd];
                    quot[k] = c;
                    let mut j = 0;
                    while j <= dd {
                        cur[k + j] -= c * div[j];
                        j += 1;
                    }
                }
                cur = quot;
                cur_deg -= dd;
            }
            d += 1;
        }
        table[m] = cur;
        m += 1;
    }
    table
}

static CYCLOTOMIC: [[i64; W]; W] = build_cyclotomic_table();

/// Coefficients of the m-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_coeffs(m: u32) -> &'static [i64] {
    assert!((1..=MAX_ORDER).contains(&m), "cyclotomic order out of range");
    let row = &CYCLOTOMIC[m as usize];
    &row[..=table_degree(row)]
}

/// Euler's totient, as the degree of the cyclotomic polynomial.
pub fn totient(m: u32) -> usize {
    cyclotomic_coeffs(m).len() - 1
}

/// The m-th cyclotomic polynomial over Q.
pub fn cyclotomic_poly(m: u32) -> Poly<Q> {
    Poly::new(cyclotomic_coeffs(m).iter().map(|&c| Q::from_int(c)).collect())
}

/// Element of Q(rho) in the power basis `1, rho, ..., rho^(phi(n)-1)`.
///
/// Rational values carry `order == 0` so that they compare equal regardless
/// of which cyclotomic field they were produced in.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    order: u32,
    coords: Vec<Q>,
}

fn merge_order(a: u32, b: u32) -> u32 {
    match (a, b) {
        (0, o) | (o, 0) => o,
        (a, b) if a == b => a,
        _ => panic!("mixing cyclotomic orders {a} and {b}"),
    }
}

/// Common denominator and integer coordinate vectors.
fn integral(cs: &[Scalar]) -> (BigInt, Vec<Vec<BigInt>>) {
    let den = cs.iter().flat_map(|c| c.coords.iter()).fold(BigInt::from(1), |l, q| l.lcm(q.denom()));
    let nums = cs
        .iter()
        .map(|c| c.coords.iter().map(|q| q.numer() * (&den / q.denom())).collect())
        .collect();
    (den, nums)
}

/// In-place reduction of integer coordinates modulo the monic cyclotomic polynomial.
fn reduce_cyclotomic(order: u32, c: &mut Vec<BigInt>) {
    if order > 1 {
        let phi = cyclotomic_coeffs(order);
        let d = phi.len() - 1;
        for k in (0..c.len().saturating_sub(d)).rev() {
            let top = core::mem::take(&mut c[k + d]);
            if num_traits::Zero::is_zero(&top) {
                continue;
            }
            for (j, &pj) in phi[..d].iter().enumerate() {
                if pj != 0 {
                    c[k + j] -= &top * pj;
                }
            }
        }
        c.truncate(d);
    }
}

impl Scalar {
    fn normalize(order: u32, mut coords: Vec<Q>) -> Self {
        if order > 1 && coords.len() > totient(order) {
            let phi = cyclotomic_coeffs(order);
            let d = phi.len() - 1;
            for k in (0..coords.len() - d).rev() {
                let c = coords[k + d].clone();
                if c.is_zero() {
                    continue;
                }
                for (j, &pj) in phi.iter().enumerate() {
                    if pj != 0 {
                        coords[k + j] = &coords[k + j] - &c * Q::from_int(pj);
                    }
                }
            }
            coords.truncate(d);
        } else if order == 1 && coords.len() > 1 {
            let s = coords.iter().fold(Q::zero(), |a, b| a + b);
            coords = vec![s];
        }
        while coords.last().is_some_and(|c| c.is_zero()) {
            coords.pop();
        }
        let order = if coords.len() <= 1 { 0 } else { order };
        Scalar { order, coords }
    }

    pub fn rational(q: Q) -> Self {
        Self::normalize(0, vec![q])
    }

    pub fn int(v: i64) -> Self {
        Self::rational(Q::from_int(v))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::rational(Q::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Build from power-basis coordinates, reducing modulo the cyclotomic
    /// polynomial of the given order.
    pub fn from_coords(order: u32, coords: Vec<Q>) -> Result<Self, Error> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::UnsupportedOrder(order));
        }
        Ok(Self::normalize(order, coords))
    }

    /// The fixed primitive root of unity of order `n`.
    pub fn rho(n: u32) -> Result<Self, Error> {
        Self::from_coords(n, vec![Q::zero(), Q::one()])
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn is_rational(&self) -> bool {
        self.coords.len() <= 1
    }

    pub fn as_rational(&self) -> Option<Q> {
        match self.coords.len() {
            0 => Some(Q::zero()),
            1 => Some(self.coords[0].clone()),
            _ => None,
        }
    }

    pub fn height(&self) -> BigInt {
        self.coords
            .iter()
            .map(rational_height)
            .max()
            .unwrap_or_default()
    }

    /// Total order used for deterministic searches: height first, then the
    /// number of basis coordinates, then coordinates lexicographically.
    pub fn cmp_height(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then(self.coords.len().cmp(&other.coords.len()))
            .then_with(|| {
                for (a, b) in self.coords.iter().zip(&other.coords) {
                    let key = |q: &Q| (q.abs(), q.is_negative());
                    match key(a).cmp(&key(b)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }

    fn as_poly(&self) -> Poly<Q> {
        Poly::new(self.coords.clone())
    }

    /// Canonical text form, parseable back by the expression grammar.
    pub fn to_expr(&self) -> String {
        let mut s = String::new();
        fmt::write(&mut s, format_args!("{self}")).expect("string write");
        s
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar { order: 0, coords: Vec::new() }
    }
    fn one() -> Self {
        Self::int(1)
    }
    fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
    fn is_one(&self) -> bool {
        self.coords.len() == 1 && self.coords[0].is_one()
    }
    fn add(&self, other: &Self) -> Self {
        let order = merge_order(self.order, other.order);
        let n = self.coords.len().max(other.coords.len());
        let coords = (0..n)
            .map(|i| match (self.coords.get(i), other.coords.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::normalize(order, coords)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn neg(&self) -> Self {
        Scalar { order: self.order, coords: self.coords.iter().map(|c| -c).collect() }
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.coords.len() == 1 || other.coords.len() == 1 {
            let (s, v) = if self.coords.len() == 1 { (self, other) } else { (other, self) };
            let c = &s.coords[0];
            return Self::normalize(v.order, v.coords.iter().map(|x| x * c).collect());
        }
        let order = merge_order(self.order, other.order);
        let mut out = vec![Q::zero(); self.coords.len() + other.coords.len() - 1];
        for (i, a) in self.coords.iter().enumerate() {
            for (j, b) in other.coords.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        Self::normalize(order, out)
    }
    fn from_int(v: i64) -> Self {
        Self::int(v)
    }

    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        let order = a.iter().chain(b).fold(0, |o, c| merge_order(o, c.order));
        let (da, ia) = integral(a);
        let (db, ib) = integral(b);
        let width = ia.iter().chain(&ib).map(Vec::len).max().unwrap_or(0);
        let mut out = vec![vec![BigInt::from(0); 2 * width.max(1) - 1]; a.len() + b.len() - 1];
        for (i, x) in ia.iter().enumerate() {
            for (j, y) in ib.iter().enumerate() {
                let acc = &mut out[i + j];
                for (k, u) in x.iter().enumerate() {
                    if num_traits::Zero::is_zero(u) {
                        continue;
                    }
                    for (l, v) in y.iter().enumerate() {
                        acc[k + l] += u * v;
                    }
                }
            }
        }
        let den = da * db;
        out.into_iter()
            .map(|mut c| {
                reduce_cyclotomic(order, &mut c);
                Self::normalize(order, c.into_iter().map(|n| Q::new(n, den.clone())).collect())
            })
            .collect()
    }
}

impl Field for Scalar {
    fn inv(&self) -> Option<Self> {
        match self.coords.len() {
            0 => None,
            1 => Some(Self::rational(self.coords[0].recip())),
            _ => {
                let modulus = cyclotomic_poly(self.order);
                let (g, s, _) = self.as_poly().xgcd(&modulus)?;
                debug_assert!(g.is_constant(), "cyclotomic polynomial is irreducible");
                Some(Self::normalize(self.order, s.into_coeffs()))
            }
        }
    }

    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        if a.deg() > 0 && b.deg() > 0 && crate::modp::coprime_certificate(a, b) {
            return Poly::one();
        }
        if a.deg() > 0 && b.deg() > 0 {
            if let Some(g) = crate::modp::modular_gcd(a, b, 64) {
                return g;
            }
        }
        a.euclid_gcd(b)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write_rational(f, &q);
        }
        f.write_str("(")?;
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write_rational(f, &a)?,
                _ => {
                    if !a.is_one() {
                        write_rational(f, &a)?;
                        f.write_str("*")?;
                    }
                    f.write_str("rho")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        f.write_str(")")
    }
}

pub(crate) fn write_rational(f: &mut fmt::Formatter<'_>, q: &Q) -> fmt::Result {
    if num_traits::One::is_one(q.denom()) {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Format a rational as `p` or `p/q`.
pub fn rational_string(q: &Q) -> String {
    if num_traits::One::is_one(q.denom()) {
        alloc::format!("{}", q.numer())
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $m:ident) => {
        impl core::ops::$tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                Ring::$m(self, rhs)
            }
        }
        impl core::ops::$tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                Ring::$m(&self, &rhs)
            }
        }
    };
}
scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl core::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Ring::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_table_matches_known_values() {
        assert_eq!(cyclotomic_coeffs(1), &[-1, 1]);
        assert_eq!(cyclotomic_coeffs(2), &[1, 1]);
        assert_eq!(cyclotomic_coeffs(3), &[1, 1, 1]);
        assert_eq!(cyclotomic_coeffs(4), &[1, 0, 1]);
        assert_eq!(cyclotomic_coeffs(6), &[1, -1, 1]);
        assert_eq!(cyclotomic_coeffs(12), &[1, 0, -1, 0, 1]);
        assert_eq!(totient(48), 16);
    }

    #[test]
    fn ground_examples() {
        let i = Scalar::rho(4).unwrap();
        assert_eq!(i.mul(&i), Scalar::int(-1));
        let w = Scalar::rho(3).unwrap();
        assert_eq!(w.add(&w.mul(&w)), Scalar::int(-1));
        assert_eq!(Scalar::ratio(3, 6).add(&Scalar::ratio(1, 2)), Scalar::int(1));
        assert_eq!(Scalar::rho(2).unwrap(), Scalar::int(-1));
    }

    #[test]
    fn inverse_in_cyclotomic_field() {
        let w = Scalar::rho(5).unwrap();
        let a = Scalar::int(2).add(&w.pow(3)).sub(&Scalar::ratio(1, 3).mul(&w));
        let b = a.inv().unwrap();
        assert!(a.mul(&b).is_one());
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn display() {
        let w = Scalar::rho(3).unwrap();
        assert_eq!(Scalar::ratio(-3, 6).to_expr(), "-1/2");
        assert_eq!(Scalar::int(1).sub(&w.scale_half()).to_expr(), "(1 - 1/2*rho)");
    }

    impl Scalar {
        fn scale_half(&self) -> Scalar {
            self.mul(&Scalar::ratio(1, 2))
        }
    }

    #[test]
    fn cleared_product_matches_schoolbook() {
        let r = Scalar::rho(5).unwrap();
        let a = vec![Scalar::ratio(1, 3), r.pow(3), Scalar::zero(), r.add(&Scalar::ratio(-2, 7))];
        let b = vec![r.pow(4).mul(&Scalar::ratio(5, 2)), Scalar::int(-1)];
        let mut naive = vec![Scalar::zero(); 5];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                naive[i + j] = naive[i + j].add(&x.mul(y));
            }
        }
        assert_eq!(Scalar::poly_mul(&a, &b), naive);
    }
}
