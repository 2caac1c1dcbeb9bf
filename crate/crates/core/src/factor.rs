//! Factorization of low-degree polynomials over the ground field `Q(rho)`.
//!
//! Method: clear denominators to a monic polynomial over `Z[rho]`, pick a
//! prime `l = 1 mod n` at which every embedding `rho -> r_i` keeps the
//! polynomial squarefree, factor each image over `F_l`, Hensel-lift to
//! `l^k`, and recombine subsets of modular factors across embeddings by
//! solving the Vandermonde system in the `r_i`. Candidates are accepted
//! only after exact division, so a too-small lifting bound can only miss a
//! split, never produce a wrong factor.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::frac::UniPoly;
use crate::modp;
use crate::poly::Poly;
use crate::ring::{Field, Ring, Q};
use crate::scalar::{cyclotomic_coeffs, totient, Scalar};

/// Default degree bound for factorization.
pub const DEFAULT_BOUND: usize = 8;

const RECOMBINATION_BUDGET: usize = 200_000;
const CANDIDATE_PRIMES: usize = 5;

/// `unit * prod(factors)`, factors monic irreducible and listed with
/// multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: Scalar,
    pub factors: Vec<UniPoly>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        self.factors.iter().fold(Poly::constant(self.unit.clone()), |acc, f| acc.mul(f))
    }
}

fn cmp_poly(a: &UniPoly, b: &UniPoly) -> Ordering {
    a.deg().cmp(&b.deg()).then_with(|| {
        for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
            match x.cmp_height(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

fn check_order(p: &UniPoly, order: u32) -> Result<()> {
    if order == 0 || order > crate::scalar::MAX_ORDER {
        return Err(Error::UnsupportedOrder(order));
    }
    for c in p.coeffs() {
        if c.order() != 0 && c.order() != order {
            return Err(Error::Invalid(format!(
                "coefficient lives in Q(rho_{}), expected Q(rho_{order})",
                c.order()
            )));
        }
    }
    Ok(())
}

/// Irreducible factorization over `Q(rho_order)` for degree at most `bound`.
pub fn factor(p: &UniPoly, order: u32, bound: usize) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::Zero);
    }
    if p.deg() > bound {
        return Err(Error::DegreeBound { degree: p.deg(), bound });
    }
    check_order(p, order)?;
    let mut factors = Vec::new();
    for (part, mult) in p.squarefree_decomposition() {
        for f in factor_squarefree_monic(&part, order)? {
            factors.extend(core::iter::repeat_n(f, mult));
        }
    }
    factors.sort_by(cmp_poly);
    Ok(Factorization { unit: p.lc(), factors })
}

/// Whether `p` (nonconstant) is irreducible over `Q(rho_order)`.
pub fn is_irreducible(p: &UniPoly, order: u32, bound: usize) -> Result<bool> {
    if p.is_constant() {
        return Ok(false);
    }
    Ok(factor(p, order, bound)?.factors.len() == 1)
}

/// Distinct roots in `Q(rho_order)`, by ascending height.
pub fn roots(p: &UniPoly, order: u32, bound: usize) -> Result<Vec<Scalar>> {
    if p.is_zero() {
        return Err(Error::Zero);
    }
    let sf = p.squarefree_part();
    let mut out: Vec<Scalar> = factor(&sf, order, bound)?
        .factors
        .iter()
        .filter(|f| f.deg() == 1)
        .map(|f| f.constant_term().neg())
        .collect();
    out.sort_by(|a, b| a.cmp_height(b));
    Ok(out)
}

/// The root of smallest height, if any.
pub fn find_root(p: &UniPoly, order: u32, bound: usize) -> Result<Option<Scalar>> {
    Ok(roots(p, order, bound)?.into_iter().next())
}

type ZPoly = Vec<BigInt>;

fn modm(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

fn zmul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out.iter().map(|c| modm(c, m)).collect()
}

/// Division by a monic divisor over `Z/m`.
fn zdivrem_monic(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let dd = d.len() - 1;
    let mut rem: ZPoly = a.iter().map(|c| modm(c, m)).collect();
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigInt::from(0); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        for (j, dc) in d.iter().enumerate() {
            rem[k + j] = modm(&(&rem[k + j] - &c * dc), m);
        }
        quot[k] = c;
    }
    rem.truncate(dd);
    (quot, rem)
}

fn to_u64_poly(a: &[BigInt], l: u64) -> Vec<u64> {
    let lb = BigInt::from(l);
    modp::trim(a.iter().map(|c| modm(c, &lb).to_u64().expect("small")).collect())
}

fn from_u64_poly(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lift a monic factor `g0` of `q mod l` (coprime to its cofactor) to a
/// factor of `q mod l^k`.
fn hensel_lift(q: &[BigInt], g0: &[u64], l: u64, k: u32) -> ZPoly {
    let (h0, r) = modp::divrem(&to_u64_poly(q, l), g0, l);
    debug_assert!(r.is_empty());
    let (one, _s, t) = modp::xgcd(g0, &h0, l);
    debug_assert_eq!(one, vec![1]);
    let lb = BigInt::from(l);
    let mut g = from_u64_poly(g0);
    let mut m = lb.clone();
    for _ in 1..k {
        let next = &m * &lb;
        let (_, r) = zdivrem_monic(q, &g, &next);
        let e: Vec<u64> = modp::trim(
            r.iter().map(|c| modm(&(c / &m), &lb).to_u64().expect("small")).collect(),
        );
        let dg = modp::rem(&modp::mul(&t, &e, l), g0, l);
        for (i, c) in dg.iter().enumerate() {
            g[i] = modm(&(&g[i] + &m * BigInt::from(*c)), &next);
        }
        m = next;
    }
    g
}

fn lift_root(cyc: &[BigInt], r0: u64, l: u64, k: u32) -> BigInt {
    let lp: Vec<u64> = to_u64_poly(cyc, l);
    let u = modp::inv_mod(modp::eval(&modp::derivative(&lp, l), r0, l), l);
    let lb = BigInt::from(l);
    let m = lb.pow(k);
    let mut r = BigInt::from(r0);
    for _ in 1..k {
        let v = cyc.iter().rev().fold(BigInt::from(0), |acc, c| modm(&(acc * &r + c), &m));
        r = modm(&(&r - v * BigInt::from(u)), &m);
    }
    r
}

fn inv_mod_big(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = modm(a, m).extended_gcd(m);
    (e.gcd == BigInt::from(1)).then(|| modm(&e.x, m))
}

/// Inverse of a square matrix over `Z/m` whose reduction mod the prime is
/// invertible.
fn invert_matrix(mut a: Vec<Vec<BigInt>>, m: &BigInt) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as u8)).collect()).collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| inv_mod_big(&a[r][col], m).is_some())
            .expect("Vandermonde matrix invertible modulo the prime");
        a.swap(col, piv);
        inv.swap(col, piv);
        let pinv = inv_mod_big(&a[col][col], m).expect("unit pivot");
        for j in 0..n {
            a[col][j] = modm(&(&a[col][j] * &pinv), m);
            inv[col][j] = modm(&(&inv[col][j] * &pinv), m);
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a[r][col].clone();
            if f.sign() == Sign::NoSign {
                continue;
            }
            for j in 0..n {
                a[r][j] = modm(&(&a[r][j] - &f * &a[col][j]), m);
                inv[r][j] = modm(&(&inv[r][j] - &f * &inv[col][j]), m);
            }
        }
    }
    inv
}

struct Embeddings {
    l: u64,
    roots: Vec<u64>,
    factors: Vec<Vec<Vec<u64>>>,
}

/// Subsets of `items` (by index) whose degrees sum to `d`.
fn subsets_with_degree(degs: &[usize], d: usize) -> Vec<Vec<usize>> {
    fn go(degs: &[usize], start: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..degs.len() {
            if degs[i] <= left {
                cur.push(i);
                go(degs, i + 1, left - degs[i], cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(degs, 0, d, &mut Vec::new(), &mut out);
    out
}

fn subset_sums(degs: &[usize]) -> Vec<bool> {
    let total: usize = degs.iter().sum();
    let mut can = vec![false; total + 1];
    can[0] = true;
    for &d in degs {
        for s in (d..=total).rev() {
            if can[s - d] {
                can[s] = true;
            }
        }
    }
    can
}

fn factor_squarefree_monic(p: &UniPoly, order: u32) -> Result<Vec<UniPoly>> {
    if p.deg() <= 1 {
        return Ok(vec![p.clone()]);
    }
    let m = order.max(1);
    let phi = totient(m);
    let deg = p.deg();

    // q(t) = D^deg p(t/D) is monic over Z[rho].
    let mut den = BigInt::from(1);
    for c in p.coeffs() {
        for q in c.coords() {
            den = den.lcm(q.denom());
        }
    }
    let mut q: Vec<Vec<BigInt>> = Vec::with_capacity(deg + 1);
    for (i, c) in p.coeffs().iter().enumerate() {
        let scale = den.pow((deg - i) as u32);
        let mut coords: Vec<BigInt> = c
            .coords()
            .iter()
            .map(|x| (x * Q::from_integer(scale.clone())).to_integer())
            .collect();
        coords.resize(phi, BigInt::from(0));
        q.push(coords);
    }
    let cyc: Vec<BigInt> = cyclotomic_coeffs(m).iter().map(|&c| BigInt::from(c)).collect();

    let embed_mod_l = |r: u64, l: u64| -> Vec<u64> {
        let lb = BigInt::from(l);
        let coeffs: Vec<u64> = q
            .iter()
            .map(|coords| {
                let mut acc = 0u64;
                let mut pw = 1u64;
                for c in coords {
                    let cm = modm(c, &lb).to_u64().expect("small");
                    acc = (acc + modp::mul_mod(cm, pw, l)) % l;
                    pw = modp::mul_mod(pw, r, l);
                }
                acc
            })
            .collect();
        modp::trim(coeffs)
    };

    let mut best: Option<(u128, Embeddings)> = None;
    let mut tried = 0;
    for l in modp::primes_one_mod(m as u64, 60).take(60) {
        let mut rng = ChaCha8Rng::seed_from_u64(l);
        let cyc_l = to_u64_poly(&cyc, l);
        let roots = modp::roots(&cyc_l, l, &mut rng);
        if roots.len() != phi {
            continue;
        }
        let images: Vec<Vec<u64>> = roots.iter().map(|&r| embed_mod_l(r, l)).collect();
        if images.iter().any(|f| f.len() != deg + 1 || !modp::is_squarefree(f, l)) {
            continue;
        }
        let factors: Vec<Vec<Vec<u64>>> =
            images.iter().map(|f| modp::factor_squarefree(f, l, &mut rng)).collect();
        if factors.iter().any(|fs| fs.len() == 1) {
            return Ok(vec![p.clone()]);
        }
        let score = factors.iter().fold(1u128, |acc, fs| acc.saturating_mul(1u128 << fs.len()));
        if best.as_ref().is_none_or(|(s, _)| score < *s) {
            best = Some((score, Embeddings { l, roots, factors }));
        }
        tried += 1;
        if tried == CANDIDATE_PRIMES {
            break;
        }
    }
    let Some((_, emb)) = best else {
        return Err(Error::Invariant("no admissible prime for modular factorization".into()));
    };

    // A proper factor needs a matching degree in every embedding.
    let sums: Vec<Vec<bool>> = emb
        .factors
        .iter()
        .map(|fs| subset_sums(&fs.iter().map(|f| f.len() - 1).collect::<Vec<_>>()))
        .collect();
    if !(1..deg).any(|d| sums.iter().all(|s| s[d])) {
        return Ok(vec![p.clone()]);
    }

    // Lifting precision from a root bound on the complex embeddings.
    let radius: BigInt = q
        .iter()
        .take(deg)
        .map(|coords| coords.iter().map(|c| c.abs()).sum::<BigInt>())
        .max()
        .unwrap_or_default()
        + 1;
    let bound = BigInt::from(2).pow(deg as u32)
        * radius.pow(deg as u32)
        * BigInt::from(phi)
        * BigInt::from(2).pow(phi as u32);
    let lb = BigInt::from(emb.l);
    let mut k = 1u32;
    while lb.pow(k) <= &bound * 2 {
        k += 1;
    }
    let modulus = lb.pow(k);
    let half = &modulus / 2;

    let lifted_roots: Vec<BigInt> = emb.roots.iter().map(|&r| lift_root(&cyc, r, emb.l, k)).collect();
    let vander: Vec<Vec<BigInt>> = lifted_roots
        .iter()
        .map(|r| (0..phi).map(|j| r.modpow(&BigInt::from(j), &modulus)).collect())
        .collect();
    let vinv = invert_matrix(vander, &modulus);

    let mut lists: Vec<Vec<ZPoly>> = Vec::with_capacity(phi);
    for (i, r) in lifted_roots.iter().enumerate() {
        let qi: ZPoly = q
            .iter()
            .map(|coords| {
                let mut acc = BigInt::from(0);
                for c in coords.iter().rev() {
                    acc = modm(&(acc * r + c), &modulus);
                }
                acc
            })
            .collect();
        lists.push(emb.factors[i].iter().map(|g| hensel_lift(&qi, g, emb.l, k)).collect());
    }

    let to_scalar = |coords: Vec<BigInt>| -> Scalar {
        let coords = coords
            .into_iter()
            .map(|c| if c > half { c - &modulus } else { c })
            .map(Q::from_integer)
            .collect();
        Scalar::from_coords(m, coords).expect("valid order")
    };

    let mut rest = Poly::new(
        q.iter()
            .map(|coords| Scalar::from_coords(m, coords.iter().cloned().map(Q::from_integer).collect()).expect("order"))
            .collect(),
    );
    let mut found = Vec::new();
    let mut budget = 0usize;
    let mut d = 1;
    while 2 * d <= rest.deg() {
        let degs: Vec<Vec<usize>> = lists.iter().map(|fs| fs.iter().map(|f| f.len() - 1).collect()).collect();
        let choices: Vec<Vec<Vec<usize>>> = degs.iter().map(|ds| subsets_with_degree(ds, d)).collect();
        let mut hit: Option<(Vec<Vec<usize>>, UniPoly, UniPoly)> = None;
        if choices.iter().all(|c| !c.is_empty()) {
            let products: Vec<Vec<ZPoly>> = choices
                .iter()
                .zip(&lists)
                .map(|(cs, fs)| {
                    cs.iter()
                        .map(|s| s.iter().fold(vec![BigInt::from(1)], |acc, &i| zmul(&acc, &fs[i], &modulus)))
                        .collect()
                })
                .collect();
            let mut idx = vec![0usize; phi];
            'search: loop {
                budget += 1;
                if budget > RECOMBINATION_BUDGET {
                    return Err(Error::RecombinationBudget);
                }
                let coeffs: Vec<Scalar> = (0..=d)
                    .map(|j| {
                        let e: Vec<BigInt> = (0..phi).map(|i| products[i][idx[i]][j].clone()).collect();
                        let coords: Vec<BigInt> = vinv
                            .iter()
                            .map(|row| modm(&row.iter().zip(&e).map(|(a, b)| a * b).sum::<BigInt>(), &modulus))
                            .collect();
                        to_scalar(coords)
                    })
                    .collect();
                let cand = Poly::new(coeffs);
                if cand.deg() == d {
                    if let Some(quot) = rest.exact_div(&cand) {
                        let chosen = (0..phi).map(|i| choices[i][idx[i]].clone()).collect();
                        hit = Some((chosen, cand, quot));
                        break 'search;
                    }
                }
                let mut pos = 0;
                loop {
                    if pos == phi {
                        break 'search;
                    }
                    idx[pos] += 1;
                    if idx[pos] < choices[pos].len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
            }
        }
        match hit {
            Some((chosen, cand, quot)) => {
                for (i, s) in chosen.iter().enumerate() {
                    let keep: Vec<ZPoly> = lists[i]
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| !s.contains(j))
                        .map(|(_, f)| f.clone())
                        .collect();
                    lists[i] = keep;
                }
                found.push(cand);
                rest = quot;
            }
            None => d += 1,
        }
    }
    if rest.deg() > 0 {
        found.push(rest);
    }

    // Undo the scaling: G(t) | q  <=>  G(D t) / D^deg G | p.
    let dscal = Scalar::rational(Q::from_integer(den));
    let dpoly = Poly::new(vec![Scalar::zero(), dscal.clone()]);
    let out = found
        .into_iter()
        .map(|g| {
            let c = dscal.powi(-(g.deg() as i64)).expect("nonzero");
            g.compose(&dpoly).scale(&c)
        })
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        Poly::new(c.iter().map(|&v| Scalar::int(v)).collect())
    }

    #[test]
    fn quartic_over_rationals() {
        let f = factor(&p(&[-1, 0, 0, 0, 1]), 2, 8).unwrap();
        assert_eq!(f.factors, vec![p(&[1, 1]), p(&[-1, 1]), p(&[1, 0, 1])]);
        assert_eq!(f.expand(), p(&[-1, 0, 0, 0, 1]));
    }

    #[test]
    fn cube_root_of_two_is_irreducible() {
        assert!(is_irreducible(&p(&[-2, 0, 0, 1]), 2, 8).unwrap());
        assert_eq!(factor(&p(&[0, 0, 1]), 2, 8).unwrap().factors, vec![p(&[0, 1]), p(&[0, 1])]);
    }

    #[test]
    fn splits_over_cyclotomic_field() {
        assert_eq!(find_root(&p(&[-1, 0, 0, 1]), 2, 8).unwrap(), Some(Scalar::int(1)));
        assert_eq!(find_root(&p(&[1, 0, 1]), 2, 8).unwrap(), None);
        let i = Scalar::rho(4).unwrap();
        let r = roots(&p(&[1, 0, 1]), 4, 8).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.contains(&i) && r.contains(&i.neg()));
        let f = factor(&p(&[1, 0, 0, 0, 1]), 8, 8).unwrap();
        assert_eq!(f.factors.len(), 4);
    }

    #[test]
    fn degree_bound() {
        let f = p(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert!(matches!(factor(&f, 2, 8), Err(Error::DegreeBound { degree: 9, bound: 8 })));
    }

    #[test]
    fn rational_coefficients() {
        // (t - 1/2)(t^2 + 1/3)
        let f = p(&[-1, 2]).mul(&p(&[1, 0, 3]));
        let fz = factor(&f, 4, 8).unwrap();
        assert_eq!(fz.factors.len(), 2);
        assert_eq!(fz.expand(), f);
        assert_eq!(find_root(&f, 4, 8).unwrap(), Some(Scalar::ratio(1, 2)));
    }
}
