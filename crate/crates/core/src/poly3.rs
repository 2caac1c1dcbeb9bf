//! Sparse polynomials in `x, y, z` over the ground field, the bridge
//! between homogeneous plane-curve equations, the dense `k0(x)(y)` tower,
//! and the textual syntax.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::frac::{BiRatFunc, Frac, LPoly, RatFunc, UniPoly};
use crate::poly::Poly;
use crate::ring::{Field, Ring};
use crate::scalar::{write_rational, Scalar};

/// Exponents of `(x, y, z)`.
pub type Exp = [u32; 3];

/// A 3x3 matrix over the ground field, row-major.
pub type Matrix3 = [[Scalar; 3]; 3];

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly3 {
    terms: BTreeMap<Exp, Scalar>,
}

impl Poly3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: Scalar, e: Exp) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly3 { terms }
    }

    /// The variable with index 0, 1, 2 for `x, y, z`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(Scalar::one(), e)
    }

    /// The linear form `a*x + b*y + c*z`.
    pub fn linear(row: &[Scalar; 3]) -> Self {
        (0..3).fold(Self::zero(), |acc, i| acc.add(&Self::var(i).scale(&row[i])))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exp) -> Scalar {
        self.terms.get(&e).cloned().unwrap_or_else(Scalar::zero)
    }

    fn insert_add(terms: &mut BTreeMap<Exp, Scalar>, e: Exp, c: Scalar) {
        let v = terms.get(&e).map(|a| a.add(&c)).unwrap_or(c);
        if v.is_zero() {
            terms.remove(&e);
        } else {
            terms.insert(e, v);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_add(&mut terms, *e, c.clone());
        }
        Poly3 { terms }
    }

    pub fn neg(&self) -> Self {
        Poly3 { terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Poly3 { terms: self.terms.iter().map(|(e, c)| (*e, c.mul(s))).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                Self::insert_add(&mut terms, e, c1.mul(c2));
            }
        }
        Poly3 { terms }
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

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e[0] + e[1] + e[2]).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e[0] + e[1] + e[2]);
        match degs.next() {
            Some(d) => degs.all(|k| k == d),
            None => true,
        }
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Poly3 {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[0] + e[1] + e[2] == d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Homogenize with `z` to total degree `d` (at least the current one).
    pub fn homogenize_to(&self, d: u32) -> Self {
        Poly3 {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0], e[1], e[2] + d - (e[0] + e[1] + e[2])], c.clone()))
                .collect(),
        }
    }

    pub fn homogenize(&self) -> Self {
        self.homogenize_to(self.total_degree().unwrap_or(0))
    }

    /// Set `z = 1`.
    pub fn dehomogenize(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            Self::insert_add(&mut terms, [e[0], e[1], 0], c.clone());
        }
        Poly3 { terms }
    }

    pub fn eval(&self, at: &[Scalar; 3]) -> Scalar {
        self.terms.iter().fold(Scalar::zero(), |acc, (e, c)| {
            let m = (0..3).fold(c.clone(), |m, i| m.mul(&at[i].pow(e[i])));
            acc.add(&m)
        })
    }

    /// Substitute the linear forms `rows[i]` (in the new coordinates) for
    /// the old variable `i`.
    pub fn substitute_linear(&self, rows: &Matrix3) -> Self {
        let forms: Vec<Poly3> = rows.iter().map(Self::linear).collect();
        let mut cache: [Vec<Poly3>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        let mut power = |i: usize, k: u32| -> Poly3 {
            let k = k as usize;
            while cache[i].len() <= k {
                let next = match cache[i].last() {
                    Some(p) => p.mul(&forms[i]),
                    None => Poly3::one(),
                };
                cache[i].push(next);
            }
            cache[i][k].clone()
        };
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let t = power(0, e[0]).mul(&power(1, e[1])).mul(&power(2, e[2])).scale(c);
            out = out.add(&t);
        }
        out
    }

    /// View a polynomial free of `z` as a polynomial in `y` over `k0[x]`.
    pub fn to_bipoly(&self) -> Option<Poly<UniPoly>> {
        if self.degree_in(2).unwrap_or(0) > 0 {
            return None;
        }
        let dy = self.degree_in(1).unwrap_or(0) as usize;
        let mut rows: Vec<Vec<Scalar>> = (0..=dy).map(|_| Vec::new()).collect();
        for (e, c) in &self.terms {
            let row = &mut rows[e[1] as usize];
            let i = e[0] as usize;
            if row.len() <= i {
                row.resize(i + 1, Scalar::zero());
            }
            row[i] = c.clone();
        }
        Some(Poly::new(rows.into_iter().map(Poly::new).collect()))
    }

    pub fn from_bipoly(b: &Poly<UniPoly>) -> Self {
        let mut terms = BTreeMap::new();
        for (j, cx) in b.coeffs().iter().enumerate() {
            for (i, c) in cx.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    terms.insert([i as u32, j as u32, 0], c.clone());
                }
            }
        }
        Poly3 { terms }
    }

    pub fn from_uni(p: &UniPoly, var: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let mut e = [0; 3];
                e[var] = i as u32;
                terms.insert(e, c.clone());
            }
        }
        Poly3 { terms }
    }

    /// The affine polynomial (`z = 1`) as an element of `l[y]`.
    pub fn to_lpoly(&self) -> LPoly {
        let b = self.dehomogenize().to_bipoly().expect("z eliminated");
        bipoly_to_lpoly(&b)
    }

    /// Coefficient of the leading term in the display order.
    fn leading(&self) -> Option<(&Exp, &Scalar)> {
        self.terms.iter().max_by(|a, b| display_key(a.0).cmp(&display_key(b.0)))
    }
}

fn display_key(e: &Exp) -> (u32, u32, u32, u32) {
    (e[0] + e[1] + e[2], e[0], e[1], e[2])
}

pub fn bipoly_to_lpoly(b: &Poly<UniPoly>) -> LPoly {
    Poly::new(b.coeffs().iter().map(|c| RatFunc::from_poly(c.clone())).collect())
}

/// Clear `x`-denominators: `p = num / den` with `num` over `k0[x]`.
pub fn lpoly_to_bipoly(p: &LPoly) -> (Poly<UniPoly>, UniPoly) {
    let den = p.coeffs().iter().fold(UniPoly::one(), |acc, c| lcm(&acc, c.den()));
    let num = Poly::new(
        p.coeffs()
            .iter()
            .map(|c| c.num().mul(&den.exact_div(c.den()).expect("lcm")))
            .collect(),
    );
    (num, den)
}

fn lcm(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if b.is_constant() {
        return a.clone();
    }
    let g = a.gcd(b).expect("nonzero");
    a.mul(&b.exact_div(&g).expect("gcd divides")).monic()
}

fn content(b: &Poly<UniPoly>) -> UniPoly {
    b.coeffs()
        .iter()
        .fold(UniPoly::zero(), |acc, c| acc.gcd(c).unwrap_or_else(UniPoly::zero))
}

/// Numerator and denominator in `k0[x, y]`, without common factors and
/// with the denominator's leading term (in display order) monic.
pub fn birat_parts(e: &BiRatFunc) -> (Poly3, Poly3) {
    let (nl, dl) = (e.num(), e.den());
    let (n, dn) = lpoly_to_bipoly(nl);
    let (d, dd) = lpoly_to_bipoly(dl);
    // e = (n / dn) / (d / dd) = (n * dd) / (d * dn)
    let n = Poly::new(n.coeffs().iter().map(|c| c.mul(&dd)).collect());
    let d = Poly::new(d.coeffs().iter().map(|c| c.mul(&dn)).collect());
    let g = content(&n).gcd(&content(&d)).unwrap_or_else(UniPoly::one);
    let cut = |p: &Poly<UniPoly>| -> Poly<UniPoly> {
        Poly::new(p.coeffs().iter().map(|c| c.exact_div(&g).expect("content")).collect())
    };
    let (n3, d3) = (Poly3::from_bipoly(&cut(&n)), Poly3::from_bipoly(&cut(&d)));
    let lc = d3.leading().map(|(_, c)| c.clone()).expect("nonzero denominator");
    let inv = lc.inv().expect("nonzero");
    (n3.scale(&inv), d3.scale(&inv))
}

/// The rational function `num / den`; `None` if `den` is zero.
pub fn birat_from_parts(num: &Poly3, den: &Poly3) -> Option<BiRatFunc> {
    Frac::new(num.to_lpoly(), den.to_lpoly())
}

/// Apply the coordinate change `old_i = rows[i] . (X', Y', Z')` to an
/// element of `k0(x, y)` viewed in the chart `z = 1`.
pub fn substitute(e: &BiRatFunc, rows: &Matrix3) -> Option<BiRatFunc> {
    if e.is_zero() {
        return Some(e.clone());
    }
    let (n, d) = birat_parts(e);
    let (dn, dd) = (n.total_degree().unwrap_or(0), d.total_degree().unwrap_or(0));
    let mut num = n.homogenize().substitute_linear(rows);
    let mut den = d.homogenize().substitute_linear(rows);
    let lz = Poly3::linear(&rows[2]);
    if dd >= dn {
        num = num.mul(&lz.pow(dd - dn));
    } else {
        den = den.mul(&lz.pow(dn - dd));
    }
    birat_from_parts(&num.dehomogenize(), &den.dehomogenize())
}

const VARS: [&str; 3] = ["x", "y", "z"];

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &Exp) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(VARS[i])?;
        if k > 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Exp, &Scalar)> = self.terms.iter().collect();
        terms.sort_by(|a, b| display_key(b.0).cmp(&display_key(a.0)));
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let constant = *e == [0, 0, 0];
            match c.as_rational() {
                Some(q) => {
                    let neg = q < num_traits::Zero::zero();
                    let a = if neg { -q } else { q };
                    if idx == 0 {
                        if neg {
                            f.write_str("-")?;
                        }
                    } else {
                        f.write_str(if neg { " - " } else { " + " })?;
                    }
                    let unit = num_traits::One::is_one(&a);
                    if constant || !unit {
                        write_rational(f, &a)?;
                        if !constant {
                            f.write_str("*")?;
                        }
                    }
                }
                None => {
                    if idx > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{c}")?;
                    if !constant {
                        f.write_str("*")?;
                    }
                }
            }
            write_monomial(f, e)?;
        }
        Ok(())
    }
}

/// Text form of an element of `k0(x, y)`: `N` or `(N)/(D)`.
pub fn format_birat(e: &BiRatFunc) -> String {
    let (n, d) = birat_parts(e);
    if d == Poly3::one() {
        alloc::format!("{n}")
    } else {
        alloc::format!("({n})/({d})")
    }
}

/// Text form of an element of `l = k0(x)`.
pub fn format_ratfunc(r: &RatFunc) -> String {
    format_birat(&BiRatFunc::constant(r.clone()))
}

/// Text form of a polynomial in `y` over `l`.
pub fn format_lpoly(p: &LPoly) -> String {
    format_birat(&BiRatFunc::from_poly(p.clone()))
}

/// Text form of a polynomial in one variable.
pub fn format_uni(p: &UniPoly, var: usize) -> String {
    alloc::format!("{}", Poly3::from_uni(p, var))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn s(v: i64) -> Scalar {
        Scalar::int(v)
    }

    fn x() -> Poly3 {
        Poly3::var(0)
    }
    fn y() -> Poly3 {
        Poly3::var(1)
    }

    fn identity() -> Matrix3 {
        [[s(1), s(0), s(0)], [s(0), s(1), s(0)], [s(0), s(0), s(1)]]
    }

    #[test]
    fn display_forms() {
        let p = x().pow(2).mul(&y()).sub(&x().scale(&Scalar::ratio(3, 2))).add(&Poly3::constant(s(-1)));
        assert_eq!(p.to_string(), "x^2*y - 3/2*x - 1");
        let r = Scalar::rho(3).unwrap();
        let q = y().scale(&r.add(&s(1))).add(&Poly3::one());
        assert_eq!(q.to_string(), "(1 + rho)*y + 1");
    }

    #[test]
    fn shift_substitution() {
        // x -> x + 2 applied to x^2 + 1
        let e = birat_from_parts(&x().pow(2).add(&Poly3::one()), &Poly3::one()).unwrap();
        let mut m = identity();
        m[0][2] = s(2);
        let got = substitute(&e, &m).unwrap();
        let want = x().pow(2).add(&x().scale(&s(4))).add(&Poly3::constant(s(5)));
        assert_eq!(birat_parts(&got).0, want);
        assert_eq!(substitute(&e, &identity()).unwrap(), e);
    }

    #[test]
    fn parts_round_trip() {
        let n = y().pow(3).sub(&x());
        let d = x().add(&Poly3::one());
        let e = birat_from_parts(&n, &d).unwrap();
        assert_eq!(birat_parts(&e), (n, d));
        assert_eq!(format_birat(&e), "(y^3 - x)/(x + 1)");
        let inv_x = birat_from_parts(&Poly3::one(), &x()).unwrap();
        assert_eq!(format_birat(&inv_x), "(1)/(x)");
        let _ = vec![0];
    }
}
