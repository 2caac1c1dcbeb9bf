//! Arithmetic in prime fields `F_p` with `p < 2^32`, and dense polynomials
//! over them as `Vec<u64>` (low degree first, no trailing zeros).

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use rand::Rng;

use crate::poly::Poly;
use crate::ring::Q;
use crate::scalar::Scalar;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes congruent to 1 modulo `n`, ascending from `start`.
pub fn primes_one_mod(n: u64, start: u64) -> impl Iterator<Item = u64> {
    let n = n.max(2);
    let first = start.max(3).div_ceil(n) * n + 1;
    (0..).map(move |k| first + k * n).filter(|&p| is_prime(p))
}

/// Reduce a rational modulo `p`; `None` if `p` divides the denominator.
pub fn reduce_rational(q: &Q, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let d = q.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    let n = q.numer().mod_floor(&pb).to_u64()?;
    Some(mul_mod(n, inv_mod(d, p), p))
}

/// Image of a ground scalar under `rho -> rho_image` in `F_p`.
pub fn reduce_scalar(s: &Scalar, p: u64, rho_image: u64) -> Option<u64> {
    let mut acc = 0;
    let mut power = 1;
    for c in s.coords() {
        acc = (acc + mul_mod(reduce_rational(c, p)?, power, p)) % p;
        power = mul_mod(power, rho_image, p);
    }
    Some(acc)
}

/// An element of exact multiplicative order `n` in `F_p`, for `p = 1 mod n`.
pub fn root_of_unity<R: Rng>(n: u64, p: u64, rng: &mut R) -> u64 {
    assert!((p - 1).is_multiple_of(n), "p must be 1 mod n");
    let prime_divisors: Vec<u64> = (2..=n).filter(|&q| n.is_multiple_of(q) && is_prime(q)).collect();
    loop {
        let g = rng.gen_range(2..p);
        let z = pow_mod(g, (p - 1) / n, p);
        if z != 0 && prime_divisors.iter().all(|&q| pow_mod(z, n / q, p) != 1) && (n > 1 || z == 1) {
            return z;
        }
    }
}

fn first_root_of_unity(n: u64, p: u64) -> u64 {
    let prime_divisors: Vec<u64> = (2..=n).filter(|&q| n.is_multiple_of(q) && is_prime(q)).collect();
    (2..p)
        .map(|g| pow_mod(g, (p - 1) / n, p))
        .find(|&z| prime_divisors.iter().all(|&q| pow_mod(z, n / q, p) != 1))
        .expect("F_p^* is cyclic")
}

/// `true` only when the gcd over `Q(rho)` is certainly constant: some
/// reduction modulo a prime above `p = 1 mod n` keeps a leading
/// coefficient and has constant gcd.
pub fn coprime_certificate(a: &Poly<Scalar>, b: &Poly<Scalar>) -> bool {
    let n = a.coeffs().iter().chain(b.coeffs()).map(|c| u64::from(c.order()).max(1)).fold(1, |l, o| l.lcm(&o));
    for p in primes_one_mod(n, 1 << 30).take(2) {
        let r = first_root_of_unity(n, p);
        let reduce = |f: &Poly<Scalar>| -> Option<Vec<u64>> {
            f.coeffs()
                .iter()
                .map(|c| {
                    let m = u64::from(c.order()).max(1);
                    reduce_scalar(c, p, pow_mod(r, n / m, p))
                })
                .collect()
        };
        let (Some(fa), Some(fb)) = (reduce(a), reduce(b)) else { continue };
        if fa.last() == Some(&0) && fb.last() == Some(&0) {
            continue;
        }
        if degree(&gcd(&trim(fa), &trim(fb), p)) == Some(0) {
            return true;
        }
    }
    false
}

/// Monic gcd over `Q(rho)` by reduction at every prime above several
/// `p = 1 mod n`, interpolation of the coordinates, CRT and rational
/// reconstruction. The candidate is accepted only after exact trial
/// division; `None` if no candidate emerges within `max_primes`.
pub fn modular_gcd(a: &Poly<Scalar>, b: &Poly<Scalar>, max_primes: usize) -> Option<Poly<Scalar>> {
    let n = a.coeffs().iter().chain(b.coeffs()).map(|c| u64::from(c.order()).max(1)).fold(1, |l, o| l.lcm(&o));
    let exps: Vec<u64> = (1..=n).filter(|k| k.gcd(&n) == 1).collect();
    let width = exps.len();
    let mut best: Option<usize> = None;
    let mut residues: Vec<Vec<BigInt>> = Vec::new();
    let mut modulus = BigInt::from(1);
    let mut last: Option<Poly<Scalar>> = None;
    for p in primes_one_mod(n, 1 << 30).take(max_primes) {
        let r = first_root_of_unity(n, p);
        let nodes: Vec<u64> = exps.iter().map(|&k| pow_mod(r, k, p)).collect();
        let mut images = Vec::with_capacity(width);
        for &node in &nodes {
            let reduce = |f: &Poly<Scalar>| -> Option<Vec<u64>> {
                f.coeffs()
                    .iter()
                    .map(|c| reduce_scalar(c, p, pow_mod(node, n / u64::from(c.order()).max(1), p)))
                    .collect()
            };
            let (Some(fa), Some(fb)) = (reduce(a), reduce(b)) else { break };
            if fa.last() == Some(&0) || fb.last() == Some(&0) {
                break;
            }
            images.push(gcd(&fa, &fb, p));
        }
        if images.len() < width {
            continue;
        }
        let d = images[0].len() - 1;
        if images.iter().any(|g| g.len() != d + 1) {
            continue;
        }
        if d == 0 {
            return Some(Poly::one());
        }
        match best {
            Some(bd) if d > bd => continue,
            Some(bd) if d == bd => {}
            _ => {
                best = Some(d);
                residues = vec![vec![BigInt::from(0); width]; d + 1];
                modulus = BigInt::from(1);
                last = None;
            }
        }
        let vinv = vandermonde_inverse(&nodes, p);
        let step = inv_mod((&modulus % p).to_u64().expect("small"), p);
        for (j, slot) in residues.iter_mut().enumerate() {
            for (t, x) in slot.iter_mut().enumerate() {
                let v = (0..width).fold(0, |acc, k| (acc + mul_mod(vinv[t][k], images[k][j], p)) % p);
                let old = (&*x % p).to_u64().expect("small");
                let lift = mul_mod((v + p - old) % p, step, p);
                *x += &modulus * lift;
            }
        }
        modulus *= p;
        let Some(candidate) = reconstruct(&residues, &modulus, n as u32) else { continue };
        if last.as_ref() == Some(&candidate)
            && a.exact_div(&candidate).is_some()
            && b.exact_div(&candidate).is_some()
        {
            return Some(candidate);
        }
        last = Some(candidate);
    }
    None
}

/// Rows give power-basis coordinates from values at the nodes.
fn vandermonde_inverse(nodes: &[u64], p: u64) -> Vec<Vec<u64>> {
    let w = nodes.len();
    let mut m: Vec<Vec<u64>> = nodes
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            let mut row: Vec<u64> = (0..w).map(|t| pow_mod(x, t as u64, p)).collect();
            row.extend((0..w).map(|c| u64::from(c == k)));
            row
        })
        .collect();
    for col in 0..w {
        let piv = (col..w).find(|&i| m[i][col] != 0).expect("distinct nodes");
        m.swap(col, piv);
        let inv = inv_mod(m[col][col], p);
        for x in m[col].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..w {
            if i != col && m[i][col] != 0 {
                let f = m[i][col];
                let pivot_row = m[col].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = (*x + p - mul_mod(f, *y, p)) % p;
                }
            }
        }
    }
    m.into_iter().map(|row| row[w..].to_vec()).collect()
}

fn reconstruct(residues: &[Vec<BigInt>], modulus: &BigInt, order: u32) -> Option<Poly<Scalar>> {
    let coeffs = residues
        .iter()
        .map(|slot| {
            let coords = slot.iter().map(|u| rational_reconstruction(u, modulus)).collect::<Option<Vec<Q>>>()?;
            if order > 1 {
                Scalar::from_coords(order, coords).ok()
            } else {
                Some(Scalar::rational(coords[0].clone()))
            }
        })
        .collect::<Option<Vec<Scalar>>>()?;
    Some(Poly::new(coeffs))
}

/// `n/d` with `n, |d| <= sqrt(m/2)` and `n = u d mod m`.
fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<Q> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::from(0), BigInt::from(1));
    while r1 > bound {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = core::mem::replace(&mut r1, r);
        let t = &t0 - &q * &t1;
        t0 = core::mem::replace(&mut t1, t);
    }
    if t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Q::new(r1, t1))
}

pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p).collect())
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(out)
}

pub fn scale(a: &[u64], c: u64, p: u64) -> Vec<u64> {
    trim(a.iter().map(|&x| mul_mod(x, c, p)).collect())
}

pub fn monic(a: &[u64], p: u64) -> Vec<u64> {
    match a.last() {
        Some(&lc) => scale(a, inv_mod(lc, p), p),
        None => Vec::new(),
    }
}

pub fn divrem(a: &[u64], d: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let dd = degree(d).expect("division by zero polynomial");
    let inv = inv_mod(d[dd], p);
    let mut rem = a.to_vec();
    if rem.len() <= dd {
        return (Vec::new(), trim(rem));
    }
    let mut quot = vec![0u64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = mul_mod(rem[k + dd], inv, p);
        if c == 0 {
            continue;
        }
        for (j, &dc) in d.iter().enumerate() {
            rem[k + j] = (rem[k + j] + p - mul_mod(c, dc, p)) % p;
        }
        quot[k] = c;
    }
    rem.truncate(dd);
    (trim(quot), trim(rem))
}

pub fn rem(a: &[u64], d: &[u64], p: u64) -> Vec<u64> {
    divrem(a, d, p).1
}

/// Monic gcd (empty when both are zero).
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = core::mem::replace(&mut b, r);
    }
    monic(&a, p)
}

/// `(g, s, t)` with `s*a + t*b = g` monic.
pub fn xgcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        r0 = core::mem::replace(&mut r1, r);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        s0 = core::mem::replace(&mut s1, s);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        t0 = core::mem::replace(&mut t1, t);
    }
    let inv = inv_mod(*r0.last().expect("nonzero gcd"), p);
    (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
}

pub fn derivative(a: &[u64], p: u64) -> Vec<u64> {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| mul_mod(c, i as u64 % p, p)).collect())
}

pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}

/// `base^e mod m`.
pub fn pow_poly_mod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], m, p);
    let b = rem(base, m, p);
    for i in (0..e.bits()).rev() {
        acc = rem(&mul(&acc, &acc, p), m, p);
        if e.bit(i) {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
    }
    acc
}

pub fn is_squarefree(a: &[u64], p: u64) -> bool {
    degree(a).is_some_and(|_| degree(&gcd(a, &derivative(a, p), p)) == Some(0))
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs `(product of all irreducible factors of degree d, d)`.
pub fn distinct_degree(f: &[u64], p: u64) -> Vec<(Vec<u64>, usize)> {
    let mut out = Vec::new();
    let mut rest = monic(f, p);
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let pb = BigUint::from(p);
    let mut d = 0;
    while degree(&rest).is_some_and(|dr| dr >= 2 * (d + 1)) {
        d += 1;
        h = pow_poly_mod(&h, &pb, &rest, p);
        let g = gcd(&rest, &sub(&h, &x, p), p);
        if degree(&g).is_some_and(|dg| dg > 0) {
            rest = divrem(&rest, &g, p).0;
            h = rem(&h, &rest, p);
            out.push((g, d));
        }
    }
    if degree(&rest).is_some_and(|dr| dr > 0) {
        let dr = degree(&rest).unwrap();
        out.push((rest, dr));
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting, odd `p`.
pub fn equal_degree<R: Rng>(f: &[u64], d: usize, p: u64, rng: &mut R) -> Vec<Vec<u64>> {
    let n = degree(f).expect("nonzero");
    if n == d {
        return vec![monic(f, p)];
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: Vec<u64> = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if degree(&a).is_none_or(|da| da == 0) {
            continue;
        }
        let g = gcd(f, &a, p);
        let g = if degree(&g).is_some_and(|dg| dg > 0) {
            g
        } else {
            let b = pow_poly_mod(&a, &e, f, p);
            gcd(f, &sub(&b, &[1], p), p)
        };
        if let Some(dg) = degree(&g) {
            if dg > 0 && dg < n {
                let h = divrem(f, &g, p).0;
                let mut out = equal_degree(&g, d, p, rng);
                out.extend(equal_degree(&h, d, p, rng));
                return out;
            }
        }
    }
}

/// Monic irreducible factors of a squarefree polynomial, sorted.
pub fn factor_squarefree<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        out.extend(equal_degree(&g, d, p, rng));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Distinct roots in `F_p`, ascending.
pub fn roots<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Vec<u64> {
    let f = trim(f.to_vec());
    if degree(&f).is_none_or(|d| d == 0) {
        return Vec::new();
    }
    let x = vec![0u64, 1];
    let xp = pow_poly_mod(&x, &BigUint::from(p), &f, p);
    let g = gcd(&f, &sub(&xp, &x, p), p);
    if degree(&g).is_none_or(|d| d == 0) {
        return Vec::new();
    }
    let mut out: Vec<u64> = equal_degree(&g, 1, p, rng).iter().map(|l| (p - l[0]) % p).collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primes_and_roots_of_unity() {
        let ps: Vec<u64> = primes_one_mod(3, 2).take(4).collect();
        assert_eq!(ps, vec![7, 13, 19, 31]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let z = root_of_unity(4, 13, &mut rng);
        assert_eq!(pow_mod(z, 4, 13), 1);
        assert_ne!(pow_mod(z, 2, 13), 1);
    }

    #[test]
    fn factors_reproduce_input() {
        let p = 101;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // (t^2 + 1)(t - 3)(t^3 + t + 1)
        let f = mul(&mul(&[1, 0, 1], &[p - 3, 1], p), &[1, 1, 0, 1], p);
        let fs = factor_squarefree(&f, p, &mut rng);
        let prod = fs.iter().fold(vec![1u64], |acc, g| mul(&acc, g, p));
        assert_eq!(prod, f);
        for g in &fs {
            assert!(roots(g, p, &mut rng).is_empty() || g.len() == 2);
        }
        assert!(roots(&f, p, &mut rng).contains(&3));
    }

    #[test]
    fn reduce_scalars() {
        let half = Scalar::ratio(1, 2);
        assert_eq!(reduce_scalar(&half, 7, 2), Some(4));
        assert_eq!(reduce_scalar(&half, 2, 1), None);
    }

    #[test]
    fn coprimality_agrees_with_euclid() {
        let r = Scalar::rho(3).unwrap();
        let lin = |c: Scalar| Poly::new(vec![c, Scalar::int(1)]);
        let a = lin(r.clone()).mul(&lin(Scalar::int(2)));
        let b = lin(r.clone()).mul(&lin(Scalar::int(-5)));
        let c = lin(Scalar::ratio(1, 3)).mul(&lin(Scalar::int(-5)));
        assert!(!coprime_certificate(&a, &b));
        assert_eq!(a.euclid_gcd(&b).deg(), 1);
        assert!(coprime_certificate(&a, &c));
        assert_eq!(a.euclid_gcd(&c).deg(), 0);
        assert_eq!(a.gcd(&b), Some(a.euclid_gcd(&b)));
    }

    #[test]
    fn modular_gcd_recovers_common_factor() {
        let r = Scalar::rho(5).unwrap();
        let common = Poly::new(vec![r.pow(2).mul(&Scalar::ratio(-7, 3)), Scalar::ratio(1, 11), Scalar::int(1)]);
        let a = common.mul(&Poly::new(vec![r.clone(), Scalar::int(2), Scalar::ratio(5, 4)]));
        let b = common.mul(&Poly::new(vec![Scalar::int(-9), r.pow(3)]));
        assert_eq!(modular_gcd(&a, &b, 32), Some(common.clone()));
        assert_eq!(a.euclid_gcd(&b), common);
        let q = Poly::new(vec![Scalar::ratio(-1, 6), Scalar::int(1)]);
        let qa = q.mul(&Poly::new(vec![Scalar::int(3), Scalar::int(1)]));
        assert_eq!(modular_gcd(&qa, &q.mul(&q), 32), Some(q));
    }
}
