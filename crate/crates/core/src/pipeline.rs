//! End to end: classify the locus, normalize it, transport the algebra,
//! read off its residues, build one symbol and check it against the input
//! at every point.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::brauer::{
    coprime_base, find_witness, reciprocity_check, residue_equal_with_witness, sort_points, triviality_status,
    BrauerPresentation, CheckOptions, ClosedPoint, CorProfile, Irreducibility, ReciprocityLedger, ResidueClass,
    TrivialityStatus, Witness, certify_irreducible,
};
use crate::cyclify::{
    construct_for, construct_three_linear_at, realizability, verify_construction, CyclicOutput, Role, Verification,
};
use crate::error::{Error, Result};
use crate::frac::{LPoly, RatFunc};
use crate::geometry::{
    apply_map_to_presentation, check_normal_form, classify_configuration, normalize, ConfigurationKind,
    CurveConfiguration, HomPoly, Normalization,
};
use crate::ring::Ring;

/// Residue of the input algebra at one point after normalization.
#[derive(Clone, Debug, PartialEq)]
pub struct ProfileRow {
    pub residue: ResidueClass,
    pub on_locus: bool,
    pub status: TrivialityStatus,
    pub irreducibility: Irreducibility,
}

impl ProfileRow {
    pub fn is_target(&self) -> bool {
        self.on_locus && !matches!(self.status, TrivialityStatus::UnramifiedExact(_))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Agreement {
    /// Exact witness that the two residues agree.
    Witnessed,
    /// A certificate that they differ.
    Refuted,
    /// Equality taken on trust: the input algebra's residue off its
    /// ramification locus is trivial.
    Assumed,
}

/// Comparison of the constructed symbol with the input at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonRow {
    pub point: ClosedPoint,
    pub role: Option<Role>,
    pub input: ResidueClass,
    pub output: ResidueClass,
    pub witness: Option<Witness>,
    pub agreement: Agreement,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineResult {
    pub configuration: CurveConfiguration,
    pub normalization: Normalization,
    pub normal_form_ok: bool,
    pub transformed: BrauerPresentation,
    pub locus_points: Vec<ClosedPoint>,
    pub profile: Vec<ProfileRow>,
    pub input_reciprocity: ReciprocityLedger,
    pub construction: CyclicOutput,
    pub verification: Verification,
    pub comparison: Vec<ComparisonRow>,
    /// The constructed symbol pulled back to the input coordinates.
    pub pulled_back: BrauerPresentation,
    pub assumptions: Vec<String>,
    pub notes: Vec<String>,
    pub verified: bool,
}

fn slot_polys(a: &BrauerPresentation) -> Vec<LPoly> {
    a.terms().iter().flat_map(|(s, _)| [&s.a, &s.b]).flat_map(|e| [e.num().clone(), e.den().clone()]).collect()
}

/// Points separating every slot factor of the given presentations and the
/// locus, plus infinity.
fn joint_points(presentations: &[&BrauerPresentation], extra: &[LPoly]) -> Vec<ClosedPoint> {
    let mut polys: Vec<LPoly> = extra.to_vec();
    for a in presentations {
        polys.extend(slot_polys(a));
    }
    let mut pts: Vec<ClosedPoint> = coprime_base(&polys).into_iter().map(ClosedPoint::Finite).collect();
    pts.push(ClosedPoint::Infinity);
    sort_points(&mut pts);
    pts
}

/// Residues of `a` with triviality decided as far as possible.
pub fn profile_on(
    a: &BrauerPresentation,
    points: &[ClosedPoint],
    locus: &[ClosedPoint],
    opts: &CheckOptions,
) -> Result<Vec<ProfileRow>> {
    let order = a.n();
    points
        .iter()
        .map(|p| {
            let residue = a.residue_at(p)?;
            let on_locus = locus.contains(p);
            let irreducibility = match p {
                ClosedPoint::Finite(f) => certify_irreducible(f, order, opts.factor_bound)?,
                ClosedPoint::Infinity => Irreducibility::Certified { x0: crate::Scalar::zero() },
            };
            let status = triviality_status(&residue, opts)?;
            Ok(ProfileRow { residue, on_locus, status, irreducibility })
        })
        .collect()
}

/// Pick and run the construction matching the pattern of target points.
pub fn construct(targets: &[ResidueClass], n: u32) -> Result<CyclicOutput> {
    let linear = targets.iter().all(|r| r.point.degree() == 1);
    if linear && targets.len() <= 3 {
        let as_l = |r: &ResidueClass| -> (ClosedPoint, RatFunc) {
            (r.point.clone(), r.value.as_constant().expect("degree one residue"))
        };
        let free: Vec<_> = targets.iter().take(2).map(as_l).collect();
        return construct_three_linear_at(&free, targets.get(2).map(|r| &r.point), n);
    }
    let higher: Vec<&ResidueClass> = targets.iter().filter(|r| r.point.degree() >= 2).collect();
    let others: Vec<&ResidueClass> = targets.iter().filter(|r| r.point.degree() < 2).collect();
    match (higher.as_slice(), others.as_slice()) {
        ([q], rest) if q.point.degree() == 2 && rest.iter().all(|r| r.point.is_infinity()) => construct_for(q),
        ([c], []) if c.point.degree() == 3 => construct_for(c),
        _ => {
            let pattern: Vec<String> = targets.iter().map(|r| format!("{} (degree {})", r.point.label(), r.point.degree())).collect();
            Err(Error::Unsupported(format!("ramification pattern not covered: {}", pattern.join(", "))))
        }
    }
}

fn compare(
    input: &ResidueClass,
    output: &ResidueClass,
    claim_witness: Option<&Witness>,
    opts: &CheckOptions,
) -> Result<(Agreement, Option<Witness>)> {
    if let Some(w) = claim_witness {
        if residue_equal_with_witness(output, input, w)? {
            return Ok((Agreement::Witnessed, Some(w.clone())));
        }
    }
    if let Some(w) = find_witness(output, input)? {
        return Ok((Agreement::Witnessed, Some(w)));
    }
    let ratio = output.times(&input.inverse()?)?;
    Ok(match triviality_status(&ratio, opts)? {
        TrivialityStatus::UnramifiedExact(w) => (Agreement::Witnessed, Some(w)),
        TrivialityStatus::NontrivialCertified(_) => (Agreement::Refuted, None),
        TrivialityStatus::Undetermined => (Agreement::Assumed, None),
    })
}

/// Run everything on a presentation ramified along the given components.
pub fn run_pipeline(
    a: &BrauerPresentation,
    components: Vec<(HomPoly, bool)>,
    opts: &CheckOptions,
) -> Result<PipelineResult> {
    let n = a.n();
    let configuration = classify_configuration(components, n, n, opts.factor_bound)?;
    let normalization = normalize(&configuration, n, opts.factor_bound)?;
    let normal_form_ok = check_normal_form(configuration.kind, &normalization.components);
    let mut notes = normalization.notes.clone();
    if configuration.kind == ConfigurationKind::TwoConics {
        notes.push(String::from("two conics become two linear points; routed by the observed point pattern"));
    }
    let mut assumptions = Vec::new();
    for c in &configuration.components {
        if c.asserted_irreducible {
            assumptions.push(format!("{} is geometrically irreducible (input assertion)", c.equation));
        }
    }
    let transformed = apply_map_to_presentation(a, &normalization.map)?;
    let mut locus_polys = Vec::new();
    let mut locus_points = Vec::new();
    for h in &normalization.components {
        let p = h.affine().to_lpoly();
        if p.deg() > 0 {
            let point = ClosedPoint::finite(&p)?;
            locus_polys.push(point.modulus());
            locus_points.push(point);
        }
    }
    let points = joint_points(&[&transformed], &locus_polys);
    for p in &locus_points {
        if !points.contains(p) {
            return Err(Error::Invariant(format!("locus point {} split by the coprime base", p.label())));
        }
    }
    let mut profile = profile_on(&transformed, &points, &locus_points, opts)?;
    // infinity counts as part of the locus for the constructions
    for row in profile.iter_mut() {
        if row.residue.point.is_infinity() {
            row.on_locus = true;
        }
    }
    let input_reciprocity = reciprocity_check(&transformed, &points)?;
    let mut targets: Vec<ResidueClass> = profile.iter().filter(|r| r.is_target()).map(|r| r.residue.clone()).collect();
    sort_residues(&mut targets);
    let construction = construct(&targets, n)?;
    let verification = verify_construction(&construction)?;
    let output = construction.presentation();
    let all_points = joint_points(&[&transformed, &output], &locus_polys);
    let mut comparison = Vec::new();
    for p in &all_points {
        let input = transformed.residue_at(p)?;
        let out_res = output.residue_at(p)?;
        let claim = construction.claims.iter().find(|c| c.point() == p);
        // the claims witness the symbol against the targets, which are the
        // input's residues
        let claim_witness = claim.filter(|c| c.expected == input).map(|c| &c.witness);
        let (agreement, witness) = compare(&input, &out_res, claim_witness, opts)?;
        if agreement == Agreement::Assumed {
            assumptions.push(format!("residue of the input at {} is trivial", p.label()));
        }
        comparison.push(ComparisonRow {
            point: p.clone(),
            role: claim.map(|c| c.role),
            input,
            output: out_res,
            witness,
            agreement,
        });
    }
    let pulled_back = apply_map_to_presentation(&output, &normalization.map.inverse())?;
    let verified = verification.passed
        && input_reciprocity.verdict
        && comparison.iter().all(|r| r.agreement != Agreement::Refuted);
    Ok(PipelineResult {
        configuration,
        normalization,
        normal_form_ok,
        transformed,
        locus_points,
        profile,
        input_reciprocity,
        construction,
        verification,
        comparison,
        pulled_back,
        assumptions,
        notes,
        verified,
    })
}

/// A prescribed residue, optionally with a user-supplied witness that the
/// emitted symbol's residue equals `c * w^n * residue`.
#[derive(Clone, Debug, PartialEq)]
pub struct TargetInput {
    pub residue: ResidueClass,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CyclifyResult {
    pub realizable: bool,
    pub combined: CorProfile,
    pub target_profiles: Vec<(ClosedPoint, CorProfile)>,
    /// Points whose corestriction keeps the data from being realizable.
    pub offending: Vec<ClosedPoint>,
    pub construction: Option<CyclicOutput>,
    pub verification: Option<Verification>,
    pub comparison: Vec<ComparisonRow>,
    pub assumptions: Vec<String>,
    pub verified: bool,
}

/// Build and check a symbol for explicit residue data; every point not
/// listed is meant to be unramified.
pub fn run_cyclify(targets: &[TargetInput], n: u32, opts: &CheckOptions) -> Result<CyclifyResult> {
    for (i, t) in targets.iter().enumerate() {
        if t.residue.n != n {
            return Err(Error::Invalid(format!("residue at {} has the wrong degree", t.residue.point.label())));
        }
        if targets[..i].iter().any(|s| s.residue.point == t.residue.point) {
            return Err(Error::Invalid(format!("point {} listed twice", t.residue.point.label())));
        }
    }
    let residues: Vec<ResidueClass> = targets.iter().map(|t| t.residue.clone()).collect();
    let (realizable, combined, target_profiles) = realizability(&residues, n)?;
    let mut result = CyclifyResult {
        realizable,
        combined,
        offending: Vec::new(),
        target_profiles,
        construction: None,
        verification: None,
        comparison: Vec::new(),
        assumptions: Vec::new(),
        verified: false,
    };
    if !realizable {
        result.offending = result
            .target_profiles
            .iter()
            .filter(|(_, p)| !p.is_trivial())
            .map(|(pt, _)| pt.clone())
            .collect();
        return Ok(result);
    }
    let mut nontrivial: Vec<ResidueClass> = residues.iter().filter(|r| !r.is_one()).cloned().collect();
    sort_residues(&mut nontrivial);
    let construction = construct(&nontrivial, n)?;
    let verification = verify_construction(&construction)?;
    let output = construction.presentation();
    let mut points: Vec<ClosedPoint> = residues.iter().map(|r| r.point.clone()).collect();
    for p in verification.rows.iter().map(|r| &r.residue.point) {
        if !points.contains(p) {
            points.push(p.clone());
        }
    }
    sort_points(&mut points);
    for p in &points {
        let given = targets.iter().find(|t| &t.residue.point == p);
        let input = given.map(|t| t.residue.clone()).unwrap_or_else(|| ResidueClass::trivial(p.clone(), n));
        let out_res = output.residue_at(p)?;
        let claim = construction.claims.iter().find(|c| c.point() == p);
        let (agreement, witness) = match given.and_then(|t| t.witness.as_ref()) {
            Some(w) => {
                let ok = residue_equal_with_witness(&out_res, &input, w)?;
                (if ok { Agreement::Witnessed } else { Agreement::Refuted }, Some(w.clone()))
            }
            None => {
                let claim_witness = claim.filter(|c| c.expected == input).map(|c| &c.witness);
                compare(&input, &out_res, claim_witness, opts)?
            }
        };
        if agreement == Agreement::Assumed {
            result.assumptions.push(format!("residues agree at {}", p.label()));
        }
        result.comparison.push(ComparisonRow {
            point: p.clone(),
            role: claim.map(|c| c.role),
            input,
            output: out_res,
            witness,
            agreement,
        });
    }
    result.verified = verification.passed && result.comparison.iter().all(|r| r.agreement != Agreement::Refuted);
    result.construction = Some(construction);
    result.verification = Some(verification);
    Ok(result)
}

/// Finite points by degree and label, infinity last.
fn sort_residues(rs: &mut [ResidueClass]) {
    rs.sort_by_cached_key(|r| (r.point.is_infinity(), r.point.degree(), r.point.label()));
}
