//! Plane quartic configurations and the projective changes of coordinates
//! that bring them into one of the shapes handled by the constructions.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::brauer::{certify_irreducible, BrauerPresentation, ClosedPoint, Irreducibility};
use crate::error::{Error, Result};
use crate::factor;
use crate::frac::{BiRatFunc, LPoly, UniPoly};
use crate::poly::Poly;
use crate::poly3::{substitute, Matrix3, Poly3};
use crate::ring::{Field, Ring};
use crate::scalar::Scalar;

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

/// A nonzero homogeneous polynomial in `X, Y, Z`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HomPoly {
    poly: Poly3,
    degree: u32,
}

impl HomPoly {
    /// Accepts a homogeneous polynomial, or an affine one which is then
    /// homogenized with `z`.
    pub fn new(p: Poly3) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::Zero);
        }
        let poly = if p.is_homogeneous() { p } else { p.homogenize() };
        let degree = poly.total_degree().expect("nonzero");
        Ok(HomPoly { poly, degree })
    }

    pub fn poly(&self) -> &Poly3 {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The chart `z = 1`.
    pub fn affine(&self) -> Poly3 {
        self.poly.dehomogenize()
    }

    pub fn coeff(&self, e: [u32; 3]) -> Scalar {
        self.poly.coeff(e)
    }

    pub fn transform(&self, map: &ProjectiveMap) -> Self {
        let poly = self.poly.substitute_linear(&map.inverse_matrix());
        HomPoly { poly, degree: self.degree }
    }

    pub fn proportional(&self, other: &Self) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let (e, c) = self.poly.terms().next().expect("nonzero");
        let d = other.poly.coeff(*e);
        !d.is_zero() && self.poly.scale(&d) == other.poly.scale(c)
    }

    /// The binary form `F(X, Y, 0)` as `sum a_i t^i` with `a_i` the
    /// coefficient of `X^i Y^(d-i)`.
    fn leading_form(&self) -> UniPoly {
        let d = self.degree;
        Poly::new((0..=d).map(|i| self.coeff([i, d - i, 0])).collect())
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

pub fn det3(m: &Matrix3) -> Scalar {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        m[r1][c1].mul(&m[r2][c2]).sub(&m[r1][c2].mul(&m[r2][c1]))
    };
    m[0][0]
        .mul(&minor(1, 2, 1, 2))
        .sub(&m[0][1].mul(&minor(1, 2, 0, 2)))
        .add(&m[0][2].mul(&minor(1, 2, 0, 1)))
}

pub fn inverse3(m: &Matrix3) -> Option<Matrix3> {
    let inv_det = det3(m).inv()?;
    let cof = |r: usize, c: usize| {
        let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
        let (c1, c2) = ((c + 1) % 3, (c + 2) % 3);
        m[r1][c1].mul(&m[r2][c2]).sub(&m[r1][c2].mul(&m[r2][c1]))
    };
    Some(core::array::from_fn(|i| core::array::from_fn(|j| cof(j, i).mul(&inv_det))))
}

pub fn mul3(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    core::array::from_fn(|i| {
        core::array::from_fn(|j| (0..3).fold(Scalar::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
    })
}

pub fn identity3() -> Matrix3 {
    core::array::from_fn(|i| core::array::from_fn(|j| if i == j { Scalar::one() } else { Scalar::zero() }))
}

fn unit_row(i: usize) -> [Scalar; 3] {
    identity3()[i].clone()
}

/// Which coordinate was moved to the affine slot by a chart change.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ChartSwap {
    /// Index of the intermediate coordinate that became `Z`.
    pub affine: usize,
    /// Index of the intermediate coordinate that became `X`.
    pub base: usize,
}

/// An invertible change of homogeneous coordinates, stored by its action
/// on points: new coordinates are `matrix * old`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjectiveMap {
    matrix: Matrix3,
    inverse: Matrix3,
    pub chart: Option<ChartSwap>,
}

impl ProjectiveMap {
    pub fn new(matrix: Matrix3) -> Result<Self> {
        let inverse = inverse3(&matrix).ok_or_else(|| Error::Invalid("singular projective map".into()))?;
        Ok(ProjectiveMap { matrix, inverse, chart: None })
    }

    pub fn identity() -> Self {
        Self::new(identity3()).expect("invertible")
    }

    pub fn matrix(&self) -> &Matrix3 {
        &self.matrix
    }

    /// Rows express the old coordinates as linear forms in the new ones.
    pub fn inverse_matrix(&self) -> Matrix3 {
        self.inverse.clone()
    }

    pub fn det(&self) -> Scalar {
        det3(&self.matrix)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity3()
    }

    /// Apply `self`, then `next`.
    pub fn then(&self, next: &ProjectiveMap) -> Self {
        let mut out = Self::new(mul3(&next.matrix, &self.matrix)).expect("product of invertible maps");
        out.chart = next.chart.or(self.chart);
        out
    }

    pub fn inverse(&self) -> Self {
        ProjectiveMap { matrix: self.inverse.clone(), inverse: self.matrix.clone(), chart: None }
    }

    pub fn apply_point(&self, p: &[Scalar; 3]) -> [Scalar; 3] {
        core::array::from_fn(|i| (0..3).fold(Scalar::zero(), |acc, k| acc.add(&self.matrix[i][k].mul(&p[k]))))
    }

    /// Transport an element of `k0(x, y)` (chart `z = 1`).
    pub fn apply(&self, e: &BiRatFunc) -> Result<BiRatFunc> {
        substitute(e, &self.inverse).ok_or_else(|| Error::Invariant("substitution produced a zero denominator".into()))
    }
}

/// Transport every slot of a presentation along a coordinate change.
pub fn apply_map_to_presentation(a: &BrauerPresentation, map: &ProjectiveMap) -> Result<BrauerPresentation> {
    a.map_slots(|e| map.apply(e))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ConfigurationKind {
    FourLines,
    TwoLinesConic,
    TwoConics,
    LineCubic,
    IrreducibleQuartic,
}

impl ConfigurationKind {
    pub fn name(self) -> &'static str {
        match self {
            ConfigurationKind::FourLines => "FourLines",
            ConfigurationKind::TwoLinesConic => "TwoLinesConic",
            ConfigurationKind::TwoConics => "TwoConics",
            ConfigurationKind::LineCubic => "LineCubic",
            ConfigurationKind::IrreducibleQuartic => "IrreducibleQuartic",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Component {
    pub equation: HomPoly,
    /// Geometric irreducibility as asserted by the input.
    pub asserted_irreducible: bool,
    /// What could be checked over the ground field.
    pub check: Irreducibility,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveConfiguration {
    pub n: u32,
    pub components: Vec<Component>,
    pub kind: ConfigurationKind,
}

impl CurveConfiguration {
    pub fn equations(&self) -> Vec<HomPoly> {
        self.components.iter().map(|c| c.equation.clone()).collect()
    }
}

fn conic_matrix(c: &HomPoly) -> Matrix3 {
    let half = Scalar::ratio(1, 2);
    let sq = |i: usize| {
        let mut e = [0; 3];
        e[i] = 2;
        c.coeff(e)
    };
    let mixed = |i: usize, j: usize| {
        let mut e = [0; 3];
        e[i] = 1;
        e[j] = 1;
        c.coeff(e).mul(&half)
    };
    core::array::from_fn(|i| core::array::from_fn(|j| if i == j { sq(i) } else { mixed(i, j) }))
}

/// A shear making the `Y^d` coefficient of every input nonzero, so that
/// in the chart `z = 1` each is primitive of full degree in `y`.
fn generic_chart(polys: &[&HomPoly]) -> ProjectiveMap {
    for k in 0..64i64 {
        let (s, t) = (Scalar::int(k % 8), Scalar::int(k / 8));
        // old X = X + sY, old Z = Z + tY
        let inv = [
            [Scalar::one(), s.clone(), Scalar::zero()],
            [Scalar::zero(), Scalar::one(), Scalar::zero()],
            [Scalar::zero(), t.clone(), Scalar::one()],
        ];
        if polys.iter().all(|p| !p.poly().eval(&[s.clone(), Scalar::one(), t.clone()]).is_zero()) {
            return ProjectiveMap::new(inv).expect("unipotent").inverse();
        }
    }
    unreachable!("a nonzero form of degree at most 4 has a nonzero value on an 8x8 grid")
}

fn divisible_by_z(p: &HomPoly) -> bool {
    p.poly().terms().all(|(e, _)| e[Z] > 0)
}

fn share_component(a: &HomPoly, b: &HomPoly) -> bool {
    let chart = generic_chart(&[a, b]);
    let (a, b) = (a.transform(&chart), b.transform(&chart));
    if divisible_by_z(&a) && divisible_by_z(&b) {
        return true;
    }
    let g = a.affine().to_lpoly().gcd(&b.affine().to_lpoly()).expect("nonzero");
    !g.is_constant()
}

fn check_component(eq: &HomPoly, order: u32, bound: usize) -> Result<Irreducibility> {
    match eq.degree() {
        1 => Ok(Irreducibility::Certified { x0: Scalar::zero() }),
        2 => {
            if det3(&conic_matrix(eq)).is_zero() {
                return Err(Error::Invalid(format!("component not irreducible: {eq}")));
            }
            Ok(Irreducibility::Certified { x0: Scalar::zero() })
        }
        _ => {
            let g = eq.transform(&generic_chart(&[eq]));
            if divisible_by_z(&g) {
                return Err(Error::Invalid(format!("component not irreducible: {eq}")));
            }
            certify_irreducible(&g.affine().to_lpoly(), order, bound)
        }
    }
}

/// Validate and classify the components of a quartic locus.
pub fn classify_configuration(
    components: Vec<(HomPoly, bool)>,
    n: u32,
    order: u32,
    bound: usize,
) -> Result<CurveConfiguration> {
    let total: u32 = components.iter().map(|(c, _)| c.degree()).sum();
    if total != 4 {
        return Err(Error::Invalid(format!("component degrees sum to {total}, expected 4")));
    }
    for i in 0..components.len() {
        for j in 0..i {
            if share_component(&components[i].0, &components[j].0) {
                return Err(Error::Invalid(format!(
                    "components not coprime: {} and {}",
                    components[j].0, components[i].0
                )));
            }
        }
    }
    let mut out = Vec::new();
    for (equation, asserted_irreducible) in components {
        let check = check_component(&equation, order, bound)?;
        if !asserted_irreducible && check == Irreducibility::Asserted {
            return Err(Error::Invalid(format!("irreducibility of {equation} neither asserted nor certified")));
        }
        out.push(Component { equation, asserted_irreducible, check });
    }
    let mut degs: Vec<u32> = out.iter().map(|c| c.equation.degree()).collect();
    degs.sort_unstable();
    let kind = match degs.as_slice() {
        [1, 1, 1, 1] => ConfigurationKind::FourLines,
        [1, 1, 2] => ConfigurationKind::TwoLinesConic,
        [2, 2] => ConfigurationKind::TwoConics,
        [1, 3] => ConfigurationKind::LineCubic,
        [4] => ConfigurationKind::IrreducibleQuartic,
        _ => unreachable!("degree multiset with sum 4"),
    };
    Ok(CurveConfiguration { n, components: out, kind })
}

/// The finite point of `P^1` over `k0(x)` cut out by an affine equation.
pub fn component_to_point(f: &Poly3) -> Result<ClosedPoint> {
    let p: LPoly = f.dehomogenize().to_lpoly();
    if p.is_zero() || p.is_constant() {
        return Err(Error::Invalid(format!("vertical component {f} has no point over k0(x)")));
    }
    ClosedPoint::finite(&p)
}

/// A normalizing map with the transformed components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Normalization {
    pub map: ProjectiveMap,
    pub components: Vec<HomPoly>,
    pub notes: Vec<String>,
}

impl Normalization {
    fn build(config: &CurveConfiguration, map: ProjectiveMap, notes: Vec<String>) -> Self {
        let components = config.components.iter().map(|c| c.equation.transform(&map)).collect();
        Normalization { map, components, notes }
    }
}

/// Rows `[first; e_j; last]` (or with the free row elsewhere) completed by
/// the first standard basis vector keeping the matrix invertible.
fn complete_rows(fixed: &[(usize, [Scalar; 3])]) -> Result<Matrix3> {
    let free: Vec<usize> = (0..3).filter(|i| fixed.iter().all(|(j, _)| j != i)).collect();
    let picks: Vec<Vec<usize>> = match free.len() {
        1 => (0..3).map(|a| vec![a]).collect(),
        2 => (0..3).flat_map(|a| (a + 1..3).map(move |b| vec![a, b])).collect(),
        _ => return Err(Error::Invariant("bad completion request".into())),
    };
    for pick in picks {
        let mut m = identity3();
        for (i, row) in fixed {
            m[*i] = row.clone();
        }
        for (slot, basis) in free.iter().zip(&pick) {
            m[*slot] = unit_row(*basis);
        }
        if !det3(&m).is_zero() {
            return Ok(m);
        }
    }
    Err(Error::Invalid("linear forms are dependent".into()))
}

fn line_row(l: &HomPoly) -> [Scalar; 3] {
    core::array::from_fn(|i| {
        let mut e = [0; 3];
        e[i] = 1;
        l.coeff(e)
    })
}

fn pick_line(lines: &[&HomPoly], like: usize, skip: Option<usize>) -> usize {
    let target = HomPoly::new(Poly3::var(like)).expect("nonzero");
    lines
        .iter()
        .enumerate()
        .position(|(i, l)| Some(i) != skip && l.proportional(&target))
        .or_else(|| (0..lines.len()).find(|&i| Some(i) != skip))
        .expect("at least two lines")
}

/// Send one line to `Z = 0` and another to `X = 0`.
pub fn lines_to_standard(config: &CurveConfiguration) -> Result<Normalization> {
    if !matches!(config.kind, ConfigurationKind::FourLines | ConfigurationKind::TwoLinesConic) {
        return Err(Error::Invalid("lines_to_standard needs at least two lines".into()));
    }
    let lines: Vec<&HomPoly> = config.components.iter().map(|c| &c.equation).filter(|e| e.degree() == 1).collect();
    let at_inf = pick_line(&lines, Z, None);
    let at_zero = pick_line(&lines, X, Some(at_inf));
    let m = complete_rows(&[(X, line_row(lines[at_zero])), (Z, line_row(lines[at_inf]))])?;
    let notes = vec![format!("{} -> Z, {} -> X", lines[at_inf], lines[at_zero])];
    Ok(Normalization::build(config, ProjectiveMap::new(m)?, notes))
}

/// A root `a` of the leading form so that `x = x' + a y` kills the top
/// `y`-power, and the corresponding map.
pub fn shear_to_kill_top_y(f: &HomPoly, order: u32, bound: usize) -> Result<(ProjectiveMap, Option<String>)> {
    let form = f.leading_form();
    if form.is_zero() {
        return Err(Error::Invalid(format!("{f} contains the line at infinity")));
    }
    if form.constant_term().is_zero() {
        return Ok((ProjectiveMap::identity(), None));
    }
    if let Some(a) = factor::find_root(&form, order, bound)? {
        let m = [[Scalar::one(), a.neg(), Scalar::zero()], unit_row(Y), unit_row(Z)];
        return Ok((ProjectiveMap::new(m)?, Some(format!("shear x = x' + ({a})*y"))));
    }
    // the only rational point at infinity may be (1:0:0)
    if (form.deg() as u32) < f.degree() {
        let m = [unit_row(Y), unit_row(X), unit_row(Z)];
        return Ok((ProjectiveMap::new(m)?, Some("swap x and y".into())));
    }
    Err(Error::ExtensionRequired(format!("leading form of {f} has no root in the ground field")))
}

/// Send the line to infinity, then shear the cubic to degree two in `y`.
pub fn normalize_line_cubic(config: &CurveConfiguration, order: u32, bound: usize) -> Result<Normalization> {
    let line = config.components.iter().find(|c| c.equation.degree() == 1).expect("line");
    let cubic = config.components.iter().find(|c| c.equation.degree() == 3).expect("cubic");
    let first = ProjectiveMap::new(complete_rows(&[(Z, line_row(&line.equation))])?)?;
    let (shear, note) = shear_to_kill_top_y(&cubic.equation.transform(&first), order, bound)?;
    let notes = core::iter::once(format!("{} -> Z", line.equation)).chain(note).collect();
    Ok(Normalization::build(config, first.then(&shear), notes))
}

fn scalar_roots(p: &UniPoly, order: u32, bound: usize) -> Result<Vec<Scalar>> {
    if p.is_zero() {
        return Err(Error::Invalid("conics share a component".into()));
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    factor::roots(p, order, bound)
}

/// A common point with ground-field coordinates, searched in the chart
/// `z = 1` through the resultant in `y`, then on the line at infinity.
pub fn conics_common_point(c1: &HomPoly, c2: &HomPoly, order: u32, bound: usize) -> Result<[Scalar; 3]> {
    let (p1, p2) = (c1.affine().to_lpoly(), c2.affine().to_lpoly());
    if p1.deg() > 0 && p2.deg() > 0 {
        let res = p1.resultant(&p2);
        for x0 in scalar_roots(res.num(), order, bound)? {
            let spec = |p: &LPoly| -> UniPoly {
                Poly::new(p.coeffs().iter().map(|c| c.eval(&x0).expect("polynomial coefficient")).collect())
            };
            let g = spec(&p1).gcd(&spec(&p2));
            if let Some(g) = g.filter(|g| !g.is_constant()) {
                if let Some(y0) = factor::find_root(&g, order, bound)? {
                    return Ok([x0, y0, Scalar::one()]);
                }
            }
        }
    } else {
        let (vert, other) = if p1.deg() == 0 { (&p1, &p2) } else { (&p2, &p1) };
        // a conic free of y in the chart; the other gives y once x is fixed
        for x0 in scalar_roots(vert.constant_term().num(), order, bound)? {
            let spec: UniPoly = Poly::new(other.coeffs().iter().map(|c| c.eval(&x0).expect("polynomial")).collect());
            if spec.is_zero() {
                return Ok([x0, Scalar::zero(), Scalar::one()]);
            }
            if let Some(y0) = factor::find_root(&spec, order, bound)? {
                return Ok([x0, y0, Scalar::one()]);
            }
        }
    }
    let at_inf = |c: &HomPoly| -> UniPoly { Poly::new((0..=2).map(|i| c.coeff([i, 2 - i, 0])).collect()) };
    let (f1, f2) = (at_inf(c1), at_inf(c2));
    if let Some(g) = f1.gcd(&f2).filter(|g| !g.is_constant()) {
        if let Some(t) = factor::find_root(&g, order, bound)? {
            return Ok([t, Scalar::one(), Scalar::zero()]);
        }
    }
    if f1.coeff(2).is_zero() && f2.coeff(2).is_zero() {
        return Ok([Scalar::one(), Scalar::zero(), Scalar::zero()]);
    }
    Err(Error::ExtensionRequired("the conics have no common point over the ground field".into()))
}

/// Move a common point of the two conics to `(0:1:0)`.
pub fn normalize_two_conics(config: &CurveConfiguration, order: u32, bound: usize) -> Result<Normalization> {
    let eqs = config.equations();
    let p = conics_common_point(&eqs[0], &eqs[1], order, bound)?;
    // columns of M are the images of the new basis points; P is the second
    let rows = complete_rows(&[(Y, p.clone())])?;
    let m: Matrix3 = core::array::from_fn(|i| core::array::from_fn(|j| rows[j][i].clone()));
    let map = ProjectiveMap::new(m)?.inverse();
    let point = format!("({} : {} : {})", p[0], p[1], p[2]);
    Ok(Normalization::build(config, map, vec![format!("common point {point} -> (0 : 1 : 0)")]))
}

/// Kill the `y^4` term of a quartic, then make it monic of degree three
/// in the fiber variable, changing chart when the `y^3` coefficient
/// depends on `x`.
pub fn quartic_monicize(f: &HomPoly, order: u32, bound: usize) -> Result<(ProjectiveMap, HomPoly, Vec<String>)> {
    let mut notes = Vec::new();
    let (shear, note) = shear_to_kill_top_y(f, order, bound)?;
    notes.extend(note);
    let g = f.transform(&shear);
    let a1 = g.coeff([1, 3, 0]);
    let a0 = g.coeff([0, 3, 1]);
    if a1.is_zero() && a0.is_zero() {
        return Err(Error::Invalid(format!("{f} has degree at most two in y after the shear")));
    }
    if a1.is_zero() {
        notes.push(format!("divide by {a0}"));
        let g = HomPoly::new(g.poly().scale(&a0.inv().expect("nonzero")))?;
        return Ok((shear, g, notes));
    }
    // (X'', Y'', Z'') = (Z, Y, a1 X + a0 Z)
    let swap = [
        unit_row(Z),
        unit_row(Y),
        [a1.clone(), Scalar::zero(), a0.clone()],
    ];
    let mut swap = ProjectiveMap::new(swap)?;
    swap.chart = Some(ChartSwap { affine: X, base: Z });
    notes.push(format!("x' = ({a1})*x + ({a0})*z, chart x' = 1"));
    let map = shear.then(&swap);
    let h = f.transform(&map);
    Ok((map, h, notes))
}

/// Dispatch to the normalizer of the configuration's kind.
pub fn normalize(config: &CurveConfiguration, order: u32, bound: usize) -> Result<Normalization> {
    match config.kind {
        ConfigurationKind::FourLines | ConfigurationKind::TwoLinesConic => lines_to_standard(config),
        ConfigurationKind::LineCubic => normalize_line_cubic(config, order, bound),
        ConfigurationKind::TwoConics => normalize_two_conics(config, order, bound),
        ConfigurationKind::IrreducibleQuartic => {
            let (map, _, notes) = quartic_monicize(&config.components[0].equation, order, bound)?;
            Ok(Normalization::build(config, map, notes))
        }
    }
}

/// The syntactic shape each normalizer promises.
pub fn check_normal_form(kind: ConfigurationKind, components: &[HomPoly]) -> bool {
    let y_degree = |h: &HomPoly| h.affine().degree_in(Y).unwrap_or(0);
    match kind {
        ConfigurationKind::FourLines | ConfigurationKind::TwoLinesConic => {
            let has = |v: usize| components.iter().any(|c| c.proportional(&HomPoly::new(Poly3::var(v)).expect("var")));
            has(X) && has(Z) && components.iter().all(|c| y_degree(c) <= c.degree().min(2))
        }
        ConfigurationKind::TwoConics => components.iter().all(|c| c.coeff([0, 2, 0]).is_zero()),
        ConfigurationKind::LineCubic => {
            let has_z = components.iter().any(|c| c.proportional(&HomPoly::new(Poly3::var(Z)).expect("var")));
            has_z && components.iter().filter(|c| c.degree() == 3).all(|c| y_degree(c) <= 2)
        }
        ConfigurationKind::IrreducibleQuartic => components.iter().all(|c| {
            let p = c.affine().to_lpoly();
            p.deg() == 3 && p.lc().is_one()
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(a: i64, b: i64, c: i64) -> HomPoly {
        HomPoly::new(Poly3::linear(&[Scalar::int(a), Scalar::int(b), Scalar::int(c)])).unwrap()
    }

    #[test]
    fn inverse_roundtrip() {
        let m = [
            [Scalar::int(1), Scalar::int(2), Scalar::int(0)],
            [Scalar::int(0), Scalar::int(1), Scalar::int(3)],
            [Scalar::int(1), Scalar::int(0), Scalar::int(1)],
        ];
        let inv = inverse3(&m).unwrap();
        assert_eq!(mul3(&m, &inv), identity3());
    }

    #[test]
    fn classify_and_standardize_lines() {
        let comps = vec![(lin(1, 0, 0), true), (lin(0, 1, 0), true), (lin(0, 0, 1), true), (lin(1, 1, 1), true)];
        let cfg = classify_configuration(comps, 2, 2, 8).unwrap();
        assert_eq!(cfg.kind, ConfigurationKind::FourLines);
        let norm = lines_to_standard(&cfg).unwrap();
        assert!(norm.map.is_identity());
        assert!(check_normal_form(cfg.kind, &norm.components));
    }

    #[test]
    fn repeated_component_rejected() {
        let comps = vec![(lin(1, 0, 0), true), (lin(2, 0, 0), true), (lin(0, 0, 1), true), (lin(1, 1, 1), true)];
        assert!(classify_configuration(comps, 2, 2, 8).is_err());
    }

    #[test]
    fn shear_leading_form() {
        // X^3 terms: a0 = 1 (Y^3), a3 = -1 (X^3)
        let y3 = Poly3::monomial(Scalar::one(), [0, 3, 0]);
        let x3 = Poly3::monomial(Scalar::int(-1), [3, 0, 0]);
        let z3 = Poly3::monomial(Scalar::one(), [0, 0, 3]);
        let f = HomPoly::new(y3.add(&x3).add(&z3)).unwrap();
        let (map, note) = shear_to_kill_top_y(&f, 2, 8).unwrap();
        assert_eq!(note.as_deref(), Some("shear x = x' + (1)*y"));
        assert!(f.transform(&map).coeff([0, 3, 0]).is_zero());
        // Y^3 + X^2*Y + Y*Z^2 + Z^3 has only (1:0:0) rational at infinity
        let x2y = Poly3::monomial(Scalar::one(), [2, 1, 0]);
        let g = HomPoly::new(Poly3::monomial(Scalar::one(), [0, 3, 0]).add(&x2y).add(&z3)).unwrap();
        let g = HomPoly::new(g.poly().add(&Poly3::monomial(Scalar::one(), [0, 1, 2]))).unwrap();
        let (map, note) = shear_to_kill_top_y(&g, 2, 8).unwrap();
        assert_eq!(note.as_deref(), Some("swap x and y"));
        assert!(g.transform(&map).coeff([0, 3, 0]).is_zero());
    }
}
