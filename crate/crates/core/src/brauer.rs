//! Brauer classes over `l(y)`, `l = k0(x)`: symbol presentations, residues
//! by the tame symbol, corestrictions, reciprocity, and triviality checks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::factor;
use crate::frac::{BiRatFunc, LPoly, RatFunc, UniPoly};
use crate::modp;
use crate::poly::Poly;
use crate::poly3::{birat_parts, format_lpoly};
use crate::quotient::QuotientElement;
use crate::ring::{Field, Ring};
use crate::scalar::Scalar;

/// Residue-field elements: `l[y]/(f)` at a finite point, and `l[y]/(y)`
/// standing for `l` itself at infinity.
pub type ResidueElement = QuotientElement<RatFunc>;

/// A closed point of the projective line over `l`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ClosedPoint {
    /// A monic polynomial in `y` over `l`, irreducible by assertion.
    Finite(LPoly),
    Infinity,
}

impl ClosedPoint {
    /// The point of a nonconstant polynomial, made monic.
    pub fn finite(f: &LPoly) -> Result<Self> {
        if f.is_constant() {
            return Err(Error::Invalid("a point needs positive degree in y".into()));
        }
        Ok(ClosedPoint::Finite(f.monic()))
    }

    /// The point `y - c`.
    pub fn linear(c: &RatFunc) -> Self {
        ClosedPoint::Finite(Poly::new(vec![c.neg(), RatFunc::one()]))
    }

    pub fn degree(&self) -> usize {
        match self {
            ClosedPoint::Finite(f) => f.deg(),
            ClosedPoint::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ClosedPoint::Infinity)
    }

    /// Modulus presenting the residue field.
    pub fn modulus(&self) -> LPoly {
        match self {
            ClosedPoint::Finite(f) => f.clone(),
            ClosedPoint::Infinity => Poly::var(),
        }
    }

    /// For a degree-one finite point `y - c`, the coordinate `c`.
    pub fn linear_root(&self) -> Option<RatFunc> {
        match self {
            ClosedPoint::Finite(f) if f.deg() == 1 => Some(f.constant_term().neg()),
            _ => None,
        }
    }

    /// The residue-field element of a polynomial in `y` over `l`.
    pub fn reduce(&self, p: &LPoly) -> Result<ResidueElement> {
        match self {
            ClosedPoint::Finite(f) => QuotientElement::new(f.clone(), p),
            ClosedPoint::Infinity => {
                if !p.is_constant() {
                    return Err(Error::Invalid("only elements of l reduce at infinity".into()));
                }
                QuotientElement::new(self.modulus(), p)
            }
        }
    }

    pub fn constant(&self, c: &RatFunc) -> ResidueElement {
        self.reduce(&Poly::constant(c.clone())).expect("valid modulus")
    }

    /// Valuation of a nonzero element of `l(y)`.
    pub fn valuation(&self, e: &BiRatFunc) -> Result<i64> {
        Ok(self.split(e)?.0)
    }

    /// `e = pi^v * u` with `u` a unit; returns `v` and the residue of `u`.
    pub fn split(&self, e: &BiRatFunc) -> Result<(i64, ResidueElement)> {
        if e.is_zero() {
            return Err(Error::Zero);
        }
        match self {
            ClosedPoint::Finite(f) => {
                let (vn, nu) = e.num().multiplicity(f);
                let (vd, du) = e.den().multiplicity(f);
                let u = self.reduce(&nu)?.mul(&self.reduce(&du)?.invert()?);
                Ok((vn as i64 - vd as i64, u))
            }
            ClosedPoint::Infinity => {
                let v = e.den().deg() as i64 - e.num().deg() as i64;
                let u = e.num().lc().div(&e.den().lc()).expect("nonzero");
                Ok((v, self.constant(&u)))
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            ClosedPoint::Finite(f) => format_lpoly(f),
            ClosedPoint::Infinity => "inf".into(),
        }
    }
}

/// Valuation along the line at infinity of the projective plane: the
/// total degree of the denominator minus that of the numerator.
pub fn infinite_line_valuation(e: &BiRatFunc) -> Result<i64> {
    if e.is_zero() {
        return Err(Error::Zero);
    }
    let (n, d) = birat_parts(e);
    Ok(d.total_degree().unwrap_or(0) as i64 - n.total_degree().unwrap_or(0) as i64)
}

/// The symbol algebra `(a, b)_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymbolAlgebra {
    pub a: BiRatFunc,
    pub b: BiRatFunc,
}

impl SymbolAlgebra {
    pub fn new(a: BiRatFunc, b: BiRatFunc) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::Zero);
        }
        Ok(SymbolAlgebra { a, b })
    }

    pub fn swapped(&self) -> Self {
        SymbolAlgebra { a: self.b.clone(), b: self.a.clone() }
    }

    /// Tame symbol `(-1)^(v(a) v(b)) a^v(b) / b^v(a)` at a point.
    pub fn residue(&self, point: &ClosedPoint) -> Result<ResidueElement> {
        let (va, ua) = point.split(&self.a)?;
        let (vb, ub) = point.split(&self.b)?;
        let mut r = ua.powi(vb)?.mul(&ub.powi(-va)?);
        if (va * vb) % 2 != 0 {
            r = r.scale(&RatFunc::from_int(-1));
        }
        Ok(r)
    }
}

/// Reduce an exponent into `(-n/2, n/2]`.
pub fn reduce_exponent(e: i64, n: u32) -> i64 {
    let n = n as i64;
    let r = e.rem_euclid(n);
    if 2 * r > n {
        r - n
    } else {
        r
    }
}

/// A formal product of degree-`n` symbols with integer exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BrauerPresentation {
    n: u32,
    terms: Vec<(SymbolAlgebra, i64)>,
}

impl BrauerPresentation {
    pub fn new(n: u32, terms: Vec<(SymbolAlgebra, i64)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid(format!("symbol degree must exceed 1, got {n}")));
        }
        let terms = terms
            .into_iter()
            .map(|(s, e)| (s, reduce_exponent(e, n)))
            .filter(|(_, e)| *e != 0)
            .collect();
        Ok(BrauerPresentation { n, terms })
    }

    pub fn single(n: u32, symbol: SymbolAlgebra) -> Result<Self> {
        Self::new(n, vec![(symbol, 1)])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> &[(SymbolAlgebra, i64)] {
        &self.terms
    }

    /// Formal difference `self - other`.
    pub fn minus(&self, other: &Self) -> Result<Self> {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().map(|(s, e)| (s.clone(), -e)));
        Self::new(self.n, terms)
    }

    pub fn map_slots(&self, mut f: impl FnMut(&BiRatFunc) -> Result<BiRatFunc>) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(s, e)| Ok((SymbolAlgebra::new(f(&s.a)?, f(&s.b)?)?, *e)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.n, terms)
    }

    fn slots(&self) -> impl Iterator<Item = &BiRatFunc> {
        self.terms.iter().flat_map(|(s, _)| [&s.a, &s.b])
    }

    /// Residue class at a point.
    pub fn residue_at(&self, point: &ClosedPoint) -> Result<ResidueClass> {
        let mut acc = point.constant(&RatFunc::one());
        for (s, e) in &self.terms {
            acc = acc.mul(&s.residue(point)?.powi(*e)?);
        }
        if acc.is_zero() {
            return Err(Error::Invariant("residue representative vanished".into()));
        }
        Ok(ResidueClass { point: point.clone(), value: acc, n: self.n })
    }

    /// Finite points where some slot has nonzero valuation: the coprime
    /// base of all slot numerators and denominators, sorted.
    pub fn finite_candidates(&self) -> Vec<ClosedPoint> {
        let polys: Vec<LPoly> = self.slots().flat_map(|e| [e.num().clone(), e.den().clone()]).collect();
        let mut pts: Vec<ClosedPoint> = coprime_base(&polys).into_iter().map(ClosedPoint::Finite).collect();
        sort_points(&mut pts);
        pts
    }

    /// All candidate points including infinity.
    pub fn candidate_points(&self) -> Vec<ClosedPoint> {
        let mut pts = self.finite_candidates();
        pts.push(ClosedPoint::Infinity);
        pts
    }
}

pub fn sort_points(pts: &mut [ClosedPoint]) {
    pts.sort_by_cached_key(|p| (p.is_infinity(), p.degree(), p.label()));
}

/// Monic, squarefree, pairwise coprime polynomials such that every input
/// is a constant times a product of powers of them, each base element
/// occurring with a single multiplicity in each input.
pub fn coprime_base(polys: &[LPoly]) -> Vec<LPoly> {
    let mut base: Vec<LPoly> = Vec::new();
    for p in polys {
        if p.is_zero() || p.is_constant() {
            continue;
        }
        for (part, _) in p.squarefree_decomposition() {
            let mut todo = vec![part];
            while let Some(a) = todo.pop() {
                if a.is_constant() {
                    continue;
                }
                let hit = base.iter().enumerate().find_map(|(i, b)| {
                    let g = a.gcd(b).expect("nonzero");
                    (!g.is_constant()).then_some((i, g))
                });
                match hit {
                    Some((i, g)) => {
                        let b = base.swap_remove(i);
                        if g == b && g == a.monic() {
                            base.push(g);
                            continue;
                        }
                        todo.push(b.exact_div(&g).expect("gcd divides").monic());
                        todo.push(a.exact_div(&g).expect("gcd divides").monic());
                        todo.push(g);
                    }
                    None => base.push(a.monic()),
                }
            }
        }
    }
    base
}

/// A residue: a unit of the residue field at a point, modulo n-th powers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ResidueClass {
    pub point: ClosedPoint,
    pub value: ResidueElement,
    pub n: u32,
}

impl ResidueClass {
    pub fn new(point: ClosedPoint, value: ResidueElement, n: u32) -> Result<Self> {
        if value.modulus() != &point.modulus() {
            return Err(Error::Invalid("residue value not reduced at its point".into()));
        }
        if value.is_zero() {
            return Err(Error::Zero);
        }
        Ok(ResidueClass { point, value, n })
    }

    /// Residue from a polynomial representative in `theta` (i.e. `y`).
    pub fn from_poly(point: ClosedPoint, rep: &LPoly, n: u32) -> Result<Self> {
        let value = point.reduce(rep)?;
        Self::new(point, value, n)
    }

    pub fn trivial(point: ClosedPoint, n: u32) -> Self {
        let value = point.constant(&RatFunc::one());
        ResidueClass { point, value, n }
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(ResidueClass { point: self.point.clone(), value: self.value.invert()?, n: self.n })
    }

    pub fn times(&self, other: &Self) -> Result<Self> {
        if self.point != other.point {
            return Err(Error::Invalid("residues at different points".into()));
        }
        Ok(ResidueClass { point: self.point.clone(), value: self.value.mul(&other.value), n: self.n })
    }

    /// Norm to `l`.
    pub fn norm(&self) -> Result<RatFunc> {
        self.value.norm()
    }

    /// The representative with `n`-th powers of polynomials in `x` removed,
    /// when the value lies in `l`; otherwise the stored representative.
    pub fn reduced_representative(&self) -> LPoly {
        let rep = self.value.rep();
        if rep.deg() > 0 {
            return rep.clone();
        }
        Poly::constant(strip_nth_powers(&rep.coeff(0), self.n))
    }
}

/// `r` with each squarefree part's multiplicity taken mod `n`.
pub fn strip_nth_powers(r: &RatFunc, n: u32) -> RatFunc {
    let part = |p: &UniPoly| {
        p.squarefree_decomposition()
            .into_iter()
            .fold(Poly::constant(p.lc()), |acc, (q, e)| acc.mul(&q.pow(e as u32 % n)))
    };
    RatFunc::new(part(r.num()), part(r.den())).expect("nonzero denominator")
}

/// Certificate that two residues agree: `r1 = c * w^n * r2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Witness {
    pub w: ResidueElement,
    pub c: Scalar,
}

impl Witness {
    pub fn unit(point: &ClosedPoint) -> Self {
        Witness { w: point.constant(&RatFunc::one()), c: Scalar::one() }
    }
}

/// Check `r1 = c * w^n * r2` exactly in the residue field.
pub fn residue_equal_with_witness(r1: &ResidueClass, r2: &ResidueClass, witness: &Witness) -> Result<bool> {
    if r1.point != r2.point || r1.n != r2.n {
        return Err(Error::Invalid(format!(
            "residues at different points: {} vs {}",
            r1.point.label(),
            r2.point.label()
        )));
    }
    if witness.w.modulus() != r1.value.modulus() {
        return Err(Error::Invalid("witness not reduced at the point".into()));
    }
    let c = RatFunc::constant(witness.c.clone());
    let rhs = r2.value.mul(&witness.w.pow(r1.n as u64)).scale(&c);
    Ok(rhs == r1.value)
}

/// An element of `l*` modulo constants and n-th powers, as the product of
/// its squarefree parts grouped by multiplicity mod n.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CorProfile {
    pub n: u32,
    /// `(multiplicity in 1..n, product of the parts with it)`.
    pub entries: Vec<(u32, UniPoly)>,
}

impl CorProfile {
    pub fn of(g: &RatFunc, n: u32) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::Zero);
        }
        let mut groups: BTreeMap<u32, UniPoly> = BTreeMap::new();
        let mut add = |p: &UniPoly, sign: i64| {
            for (part, m) in p.squarefree_decomposition() {
                let k = (sign * m as i64).rem_euclid(n as i64) as u32;
                if k != 0 {
                    let e = groups.entry(k).or_insert_with(UniPoly::one);
                    *e = e.mul(&part);
                }
            }
        };
        add(g.num(), 1);
        add(g.den(), -1);
        Ok(CorProfile { n, entries: groups.into_iter().collect() })
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Whether `g` is a constant times an n-th power in `l`.
pub fn nth_power_mod_constants(g: &RatFunc, n: u32) -> Result<bool> {
    Ok(CorProfile::of(g, n)?.is_trivial())
}

/// `g = c * w^n` with `c` constant, when such `w` exists.
pub fn nth_root_mod_constants(g: &RatFunc, n: u32) -> Result<Option<(RatFunc, Scalar)>> {
    if g.is_zero() {
        return Err(Error::Zero);
    }
    let mut w = RatFunc::one();
    for (p, sign) in [(g.num(), 1i64), (g.den(), -1)] {
        for (part, m) in p.squarefree_decomposition() {
            if !(m as u32).is_multiple_of(n) {
                return Ok(None);
            }
            let f = RatFunc::from_poly(part.pow(m as u32 / n));
            w = if sign > 0 { w.mul(&f) } else { w.div(&f).expect("nonzero") };
        }
    }
    let c = g.div(&w.pow(n)).expect("nonzero").as_constant().expect("constant quotient");
    Ok(Some((w, c)))
}

/// Corestriction of a residue to `l`, as a profile of its norm.
pub fn corestriction_at(r: &ResidueClass) -> Result<CorProfile> {
    CorProfile::of(&r.norm()?, r.n)
}

/// One row of a reciprocity ledger.
#[derive(Clone, Debug, PartialEq)]
pub struct LedgerRow {
    pub residue: ResidueClass,
    pub norm: RatFunc,
    pub profile: CorProfile,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReciprocityLedger {
    pub rows: Vec<LedgerRow>,
    pub combined: CorProfile,
    /// The product of all norms is exactly one (Weil reciprocity for the
    /// tame symbol), a sharper check than the profile.
    pub exact_product_is_one: bool,
    pub verdict: bool,
}

/// Reciprocity ledger over the given points, which must cover every
/// finite candidate point and infinity.
pub fn reciprocity_check(a: &BrauerPresentation, points: &[ClosedPoint]) -> Result<ReciprocityLedger> {
    let mut missed = Vec::new();
    if !points.contains(&ClosedPoint::Infinity) {
        missed.push(String::from("inf"));
    }
    for req in a.finite_candidates() {
        let ClosedPoint::Finite(f) = &req else { unreachable!() };
        let cover = points.iter().fold(LPoly::one(), |acc, p| match p {
            ClosedPoint::Finite(g) if f.rem(g).is_zero() => acc.mul(g),
            _ => acc,
        });
        if &cover != f {
            missed.push(req.label());
        }
    }
    if !missed.is_empty() {
        return Err(Error::MissedPoints(missed.join(", ")));
    }
    let mut rows = Vec::new();
    let mut product = RatFunc::one();
    for p in points {
        let residue = a.residue_at(p)?;
        let norm = residue.norm()?;
        product = product.mul(&norm);
        let profile = CorProfile::of(&norm, a.n())?;
        rows.push(LedgerRow { residue, norm, profile });
    }
    let combined = CorProfile::of(&product, a.n())?;
    let verdict = combined.is_trivial();
    Ok(ReciprocityLedger { rows, combined, exact_product_is_one: product.is_one(), verdict })
}

/// Parameters of the randomized certificate and irreducibility checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub seed: u64,
    pub rounds: u32,
    pub factor_bound: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { seed: 0, rounds: 20, factor_bound: factor::DEFAULT_BOUND }
    }
}

/// Two `F_p`-points of the reduced curve at which the residue has
/// different n-th power characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationCertificate {
    pub prime: u64,
    pub rho_image: u64,
    /// `(x0, y0, character value)`.
    pub samples: [(u64, u64, u64); 2],
}

#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// The element of `l` itself (degree-one points) has this profile.
    Profile(CorProfile),
    /// The norm to `l` has a nontrivial profile.
    Norm(CorProfile),
    Specialization(SpecializationCertificate),
}

#[derive(Clone, Debug, PartialEq)]
pub enum TrivialityStatus {
    UnramifiedExact(Witness),
    NontrivialCertified(Certificate),
    Undetermined,
}

fn reduce_ratfunc(r: &RatFunc, x0: u64, p: u64, rho: u64) -> Option<u64> {
    let ev = |u: &UniPoly| -> Option<u64> {
        let mut acc = 0;
        for c in u.coeffs().iter().rev() {
            acc = (modp::mul_mod(acc, x0, p) + modp::reduce_scalar(c, p, rho)?) % p;
        }
        Some(acc)
    };
    let d = ev(r.den())?;
    if d == 0 {
        return None;
    }
    Some(modp::mul_mod(ev(r.num())?, modp::inv_mod(d, p), p))
}

fn reduce_lpoly(f: &LPoly, x0: u64, p: u64, rho: u64) -> Option<Vec<u64>> {
    let v: Option<Vec<u64>> = f.coeffs().iter().map(|c| reduce_ratfunc(c, x0, p, rho)).collect();
    Some(modp::trim(v?))
}

/// Sound, incomplete test that a residue is not a constant times an n-th
/// power: reduce modulo primes `p = 1 mod n`, evaluate at `F_p`-points of
/// the curve, and look for two points with different characters
/// `r^((p-1)/n)`. Constants cancel between the two points. Assumes good
/// reduction of the point's curve at the sampled prime.
pub fn nontriviality_certificate(r: &ResidueClass, rounds: u32, seed: u64) -> Result<Option<SpecializationCertificate>> {
    if r.value.is_one() {
        return Ok(None);
    }
    let n = r.n as u64;
    let modulus = r.point.modulus();
    let mut sampled_any = false;
    for round in 0..rounds as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ round.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let start = rng.gen_range(1_000u64..60_000);
        let p = modp::primes_one_mod(n, start).next().expect("infinitely many primes");
        let rho = modp::root_of_unity(n, p, &mut rng);
        let mut seen: Option<(u64, u64, u64)> = None;
        for _ in 0..64 {
            let x0 = rng.gen_range(0..p);
            let Some(fbar) = reduce_lpoly(&modulus, x0, p, rho) else { continue };
            if modp::degree(&fbar) != Some(modulus.deg()) || !modp::is_squarefree(&fbar, p) {
                continue;
            }
            let Some(rbar) = reduce_lpoly(r.value.rep(), x0, p, rho) else { continue };
            for y0 in modp::roots(&fbar, p, &mut rng) {
                let v = modp::eval(&rbar, y0, p);
                if v == 0 {
                    continue;
                }
                sampled_any = true;
                let chi = modp::pow_mod(v, (p - 1) / n, p);
                match seen {
                    None => seen = Some((x0, y0, chi)),
                    Some(first) if first.2 != chi => {
                        return Ok(Some(SpecializationCertificate {
                            prime: p,
                            rho_image: rho,
                            samples: [first, (x0, y0, chi)],
                        }));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    if !sampled_any {
        return Err(Error::SamplingExhausted(format!("no usable F_p-points at {}", r.point.label())));
    }
    Ok(None)
}

/// Decide triviality modulo constants and n-th powers as far as possible.
pub fn triviality_status(r: &ResidueClass, opts: &CheckOptions) -> Result<TrivialityStatus> {
    let unit = Witness::unit(&r.point);
    if let Some(c) = r.value.as_constant() {
        if let Some(c) = c.as_constant() {
            return Ok(TrivialityStatus::UnramifiedExact(Witness { c, ..unit }));
        }
        if let Some((w, c)) = nth_root_mod_constants(&c, r.n)? {
            return Ok(TrivialityStatus::UnramifiedExact(Witness { w: r.point.constant(&w), c }));
        }
        if r.point.degree() == 1 {
            return Ok(TrivialityStatus::NontrivialCertified(Certificate::Profile(CorProfile::of(&c, r.n)?)));
        }
    }
    let profile = corestriction_at(r)?;
    if !profile.is_trivial() {
        return Ok(TrivialityStatus::NontrivialCertified(Certificate::Norm(profile)));
    }
    Ok(match nontriviality_certificate(r, opts.rounds, opts.seed)? {
        Some(cert) => TrivialityStatus::NontrivialCertified(Certificate::Specialization(cert)),
        None => TrivialityStatus::Undetermined,
    })
}

/// A witness that `r1` and `r2` agree, found by deciding the ratio.
pub fn find_witness(r1: &ResidueClass, r2: &ResidueClass) -> Result<Option<Witness>> {
    let ratio = ResidueClass::new(r1.point.clone(), r1.value.mul(&r2.value.invert()?), r1.n)?;
    let Some(g) = ratio.value.as_constant() else { return Ok(None) };
    Ok(nth_root_mod_constants(&g, r1.n)?.map(|(w, c)| Witness { w: r1.point.constant(&w), c }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    /// The specialization at `x = x0` is irreducible of the same degree.
    Certified { x0: Scalar },
    /// Irreducibility over `k0(x)` is taken as an input assertion.
    Asserted,
}

/// Certify irreducibility over `k0(x)` by an irreducible specialization.
pub fn certify_irreducible(f: &LPoly, order: u32, bound: usize) -> Result<Irreducibility> {
    if f.deg() > bound {
        return Err(Error::DegreeBound { degree: f.deg(), bound });
    }
    if f.deg() == 1 {
        return Ok(Irreducibility::Certified { x0: Scalar::zero() });
    }
    for k in 0..12i64 {
        let x0 = Scalar::int(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 });
        let spec: Option<Vec<Scalar>> = f.coeffs().iter().map(|c| c.eval(&x0)).collect();
        let Some(spec) = spec else { continue };
        let spec = Poly::new(spec);
        if spec.deg() != f.deg() {
            continue;
        }
        if factor::is_irreducible(&spec, order, bound)? {
            return Ok(Irreducibility::Certified { x0 });
        }
    }
    Ok(Irreducibility::Asserted)
}

/// One row of a ramification profile.
#[derive(Clone, Debug, PartialEq)]
pub struct RamificationRow {
    pub residue: ResidueClass,
    pub status: TrivialityStatus,
    pub irreducibility: Irreducibility,
}

/// Residues at every candidate point whose representative is not exactly
/// one, with their triviality status.
pub fn ramification_profile(a: &BrauerPresentation, order: u32, opts: &CheckOptions) -> Result<Vec<RamificationRow>> {
    let mut out = Vec::new();
    for p in a.candidate_points() {
        let irreducibility = match &p {
            ClosedPoint::Finite(f) => certify_irreducible(f, order, opts.factor_bound)?,
            ClosedPoint::Infinity => Irreducibility::Certified { x0: Scalar::zero() },
        };
        let residue = a.residue_at(&p)?;
        if residue.is_one() {
            continue;
        }
        let status = triviality_status(&residue, opts)?;
        out.push(RamificationRow { residue, status, irreducibility });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac::Frac;

    fn x() -> RatFunc {
        RatFunc::var()
    }
    fn c(v: i64) -> RatFunc {
        RatFunc::from_int(v)
    }
    fn lp(cs: &[RatFunc]) -> LPoly {
        Poly::new(cs.to_vec())
    }
    fn bi(p: LPoly) -> BiRatFunc {
        Frac::from_poly(p)
    }

    #[test]
    fn valuation_examples() {
        let y = lp(&[c(0), c(1)]);
        let e = Frac::new(y.pow(2), lp(&[c(1), c(1)])).unwrap();
        assert_eq!(ClosedPoint::finite(&y).unwrap().valuation(&e).unwrap(), 2);
        let xy = bi(lp(&[c(0), x()]));
        assert_eq!(ClosedPoint::Infinity.valuation(&xy).unwrap(), -1);
        let f = lp(&[x().neg(), c(0), c(1)]);
        let e = bi(f.pow(3).mul(&lp(&[c(1), c(1)])));
        assert_eq!(ClosedPoint::finite(&f).unwrap().valuation(&e).unwrap(), 3);
    }

    #[test]
    fn tame_symbol_examples() {
        let t = bi(lp(&[c(0), c(1)]));
        let t1 = bi(lp(&[c(-1), c(1)]));
        let s = SymbolAlgebra::new(t.clone(), t1).unwrap();
        let at_t = ClosedPoint::finite(&lp(&[c(0), c(1)])).unwrap();
        assert_eq!(s.residue(&at_t).unwrap().as_constant(), Some(c(-1)));
        let unit = SymbolAlgebra::new(bi(lp(&[c(2), c(1)])), bi(lp(&[c(3), c(1)]))).unwrap();
        assert!(unit.residue(&at_t).unwrap().is_one());
    }

    #[test]
    fn profile_examples() {
        assert!(nth_power_mod_constants(&x().pow(2), 2).unwrap());
        assert!(!nth_power_mod_constants(&x().mul(&(x() + c(1))), 2).unwrap());
        assert!(nth_power_mod_constants(&(x() + c(1)).pow(6).mul(&c(5)), 3).unwrap());
    }

    #[test]
    fn coprime_base_refines() {
        let y = lp(&[c(0), c(1)]);
        let y1 = lp(&[c(1), c(1)]);
        let base = coprime_base(&[y.pow(2).mul(&y1), y.mul(&y1).mul(&y1)]);
        assert_eq!(base.len(), 2);
        assert!(base.contains(&y) && base.contains(&y1));
    }

    #[test]
    fn nth_powers_are_stripped() {
        let x = Poly::new(vec![Scalar::zero(), Scalar::one()]);
        let x1 = Poly::new(vec![Scalar::one(), Scalar::one()]);
        let num = x.pow(7).mul(&x1.pow(3)).scale(&Scalar::int(5));
        let r = Frac::new(num, x1.pow(5)).unwrap();
        let expect = Frac::new(x.scale(&Scalar::int(5)), x1.pow(2)).unwrap();
        assert_eq!(strip_nth_powers(&r, 3), expect);
    }
}
