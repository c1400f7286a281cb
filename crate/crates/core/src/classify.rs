//! Causal classification of the surface families.
//!
//! The sign of det = EG - F^2 decides the causal character of a surface
//! point: positive spacelike, negative timelike, inside a scale-aware
//! band lightlike. Everything here runs on closed-form partials, so
//! classification needs no quadrature; only ambient locus points do.
//!
//! Closed-form factorizations used by the predictors (all derivable by
//! expanding EG - F^2 with the analytic partials):
//!   spacelike circles:  det = (r^2/D^2) (a r^2 cos t + D + 1)(a r^2 cos t + D - 1)
//!   hyperbola type I:   det = -(r^2/D^2) ((A r^2 + D)^2 + 1),  A = a cosh t - b sinh t
//!   hyperbola type II:  det = (r^2/D^2) (1 - (D - B r^2)^2),   B = a sinh t - b cosh t
//!   parabolic circles:  det = 2 (a v^2 - 2 (b/r) v + 2 g')
//! with D = Delta(r). Type I is timelike everywhere; type II reduces to
//! the range of W(t) = b cosh t - a sinh t against (+-1 - D)/r^2.

use crate::error::{Error, Result};
use crate::families::{FamilySpec, HyperbolaKind, ParabolaTriple, SurfaceFamily};
use crate::minkowski::{
    lorentz_cross, lorentz_dot, one_parameter_isometry, AxisKind, CausalCharacter, Vector3L,
};
use serde::{Deserialize, Serialize};

/// Relative half-width of the lightlike band on det = EG - F^2.
pub const LIGHTLIKE_BAND: f64 = 1e-9;

/// Exact-equality tolerance for parameter clauses like b = 2a.
fn eq12(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-12 * 1.0f64.max(x.abs()).max(y.abs())
}

/// First and second fundamental forms at a parameter point.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FundamentalForms {
    pub e: f64,
    pub f: f64,
    pub g: f64,
    pub l: f64,
    pub m: f64,
    pub n: f64,
    /// det = EG - F^2.
    pub det: f64,
    /// Lightlike band half-width at this point's scale.
    pub band: f64,
    /// +1 spacelike, -1 timelike, 0 lightlike (|det| within band).
    pub epsilon: i8,
    /// Unit normal when epsilon != 0 (<n,n> = -epsilon), raw cross
    /// product X1 x X2 when the point is lightlike.
    pub normal: Vector3L,
}

impl FundamentalForms {
    pub fn character(&self) -> CausalCharacter {
        match self.epsilon {
            1 => CausalCharacter::Spacelike,
            -1 => CausalCharacter::Timelike,
            _ => CausalCharacter::Lightlike,
        }
    }
}

/// Causal character of the span of two tangent vectors, under the same
/// scale-aware banding rule as [`fundamental_forms`]. Returns (det, char).
pub fn span_character(x1: Vector3L, x2: Vector3L) -> (f64, CausalCharacter) {
    let e = lorentz_dot(x1, x1);
    let f = lorentz_dot(x1, x2);
    let g = lorentz_dot(x2, x2);
    let det = e * g - f * f;
    let band = LIGHTLIKE_BAND * 1.0f64.max(x1.euclid_norm_sq() * x2.euclid_norm_sq());
    let ch = if det > band {
        CausalCharacter::Spacelike
    } else if det < -band {
        CausalCharacter::Timelike
    } else {
        CausalCharacter::Lightlike
    };
    (det, ch)
}

pub fn fundamental_forms(fam: &SurfaceFamily, p1: f64, p2: f64) -> Result<FundamentalForms> {
    let pa = fam.partials(p1, p2)?;
    let e = lorentz_dot(pa.x1, pa.x1);
    let f = lorentz_dot(pa.x1, pa.x2);
    let g = lorentz_dot(pa.x2, pa.x2);
    let det = e * g - f * f;
    let band = LIGHTLIKE_BAND * 1.0f64.max(pa.x1.euclid_norm_sq() * pa.x2.euclid_norm_sq());
    let epsilon: i8 = if det > band {
        1
    } else if det < -band {
        -1
    } else {
        0
    };
    let cross = lorentz_cross(pa.x1, pa.x2);
    let normal = if epsilon == 0 {
        cross
    } else {
        cross.scale(det.abs().sqrt().recip())
    };
    Ok(FundamentalForms {
        e,
        f,
        g,
        l: lorentz_dot(pa.x11, normal),
        m: lorentz_dot(pa.x12, normal),
        n: lorentz_dot(pa.x22, normal),
        det,
        band,
        epsilon,
        normal,
    })
}

/// Scale-guarded zero-mean-curvature residual |EN - 2FM + GL| / (|det| + 1).
/// Undefined on the lightlike band.
pub fn mean_curvature_residual(fam: &SurfaceFamily, p1: f64, p2: f64) -> Result<f64> {
    let ff = fundamental_forms(fam, p1, p2)?;
    if ff.epsilon == 0 {
        return Err(Error::LightlikePoint(format!(
            "mean curvature undefined at lightlike point ({p1}, {p2})"
        )));
    }
    let num = (ff.e * ff.n - 2.0 * ff.f * ff.m + ff.g * ff.l).abs();
    Ok(num / (ff.det.abs() + 1.0))
}

/// Evenly spaced closed range lo..=hi with `count` points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RangeSpec {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl RangeSpec {
    pub fn new(lo: f64, hi: f64, count: usize) -> Result<Self> {
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() || count < 2 {
            return Err(Error::InvalidParams(format!(
                "range needs finite lo < hi and count >= 2, got {lo}:{hi}:{count}"
            )));
        }
        Ok(RangeSpec { lo, hi, count })
    }

    pub fn value(&self, i: usize) -> f64 {
        self.lo + (self.hi - self.lo) * i as f64 / (self.count - 1) as f64
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.count).map(|i| self.value(i)).collect()
    }

    pub fn step(&self) -> f64 {
        (self.hi - self.lo) / (self.count - 1) as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub p1: RangeSpec,
    pub p2: RangeSpec,
}

impl GridSpec {
    /// Default sampling grid over the family's compact window. Odd
    /// counts place grid lines on the symmetric loci (theta = pi, v = 0).
    pub fn default_for(fam: &SurfaceFamily) -> GridSpec {
        let ((p1lo, p1hi), (p2lo, p2hi)) = fam.default_window();
        GridSpec {
            p1: RangeSpec { lo: p1lo, hi: p1hi, count: 49 },
            p2: RangeSpec { lo: p2lo, hi: p2hi, count: 65 },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LocusKind {
    StraightLine,
    NullCurve,
}

/// How the transverse parameter p2 depends on p1 along a locus.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum TransverseLaw {
    /// p2 constant along the locus.
    ConstP2(f64),
    /// Parabolic-family line v(u) = b / (a r(u)).
    ParabolaLine,
    /// Interpolate linearly between the sampled param_curve points.
    Samples,
}

/// A connected lightlike locus, sampled along p1.
#[derive(Debug, Clone, Serialize)]
pub struct LightlikeLocus {
    pub kind: LocusKind,
    pub law: TransverseLaw,
    /// ((p1, p2), ambient point) along the locus.
    pub param_curve: Vec<((f64, f64), Vector3L)>,
    /// Normalized chord direction (meaningful for straight lines).
    pub direction: Option<Vector3L>,
    /// Max Euclidean deviation from the first-last chord over chord length.
    pub straightness_residual: f64,
    /// Max relative |<d,d>| over consecutive secants (near zero exactly
    /// when the samples advance in a lightlike direction).
    pub tangent_null_residual: f64,
    /// Straightness fell between the line and curve thresholds.
    pub indeterminate: bool,
    pub description: String,
}

impl LightlikeLocus {
    /// Transverse parameter value on the locus at p1.
    pub fn p2_at(&self, fam: &SurfaceFamily, p1: f64) -> Result<f64> {
        match &self.law {
            TransverseLaw::ConstP2(v) => Ok(*v),
            TransverseLaw::ParabolaLine => match fam.spec() {
                FamilySpec::Parabola(t) => {
                    let rfg = SurfaceFamily::parabola_rfg(t, p1)?;
                    if rfg.r == 0.0 || t.a() == 0.0 {
                        return Err(Error::ZeroRadius(format!("no locus radius at u = {p1}")));
                    }
                    Ok(t.b() / (t.a() * rfg.r))
                }
                _ => Err(Error::Inconsistent(
                    "parabolic locus law on a non-parabolic family".into(),
                )),
            },
            TransverseLaw::Samples => {
                let pts = &self.param_curve;
                if pts.len() < 2 {
                    return Err(Error::TooFewSamples("locus has fewer than 2 samples".into()));
                }
                // linear interpolation in p1 (samples sorted by construction)
                let mut prev = pts[0].0;
                for &(cur, _) in &pts[1..] {
                    let (a, b) = (prev, cur);
                    let (lo, hi) = if a.0 <= b.0 { (a, b) } else { (b, a) };
                    if (lo.0..=hi.0).contains(&p1) {
                        let t = if hi.0 > lo.0 { (p1 - lo.0) / (hi.0 - lo.0) } else { 0.0 };
                        return Ok(lo.1 + t * (hi.1 - lo.1));
                    }
                    prev = cur;
                }
                Err(Error::OutOfDomain(format!("p1 = {p1} outside locus samples")))
            }
        }
    }

    /// p1 span covered by the samples.
    pub fn p1_span(&self) -> (f64, f64) {
        let first = self.param_curve.first().map(|p| p.0 .0).unwrap_or(0.0);
        let last = self.param_curve.last().map(|p| p.0 .0).unwrap_or(0.0);
        (first, last)
    }
}

/// Max Euclidean distance of the points from the chord through the first
/// and last points, normalized by the chord length.
pub fn straightness_residual(points: &[Vector3L]) -> Result<f64> {
    if points.len() < 3 {
        return Err(Error::TooFewSamples(format!(
            "straightness needs >= 3 samples, got {}",
            points.len()
        )));
    }
    let a = points[0];
    let chord = *points.last().unwrap() - a;
    let len2 = chord.euclid_norm_sq();
    if len2 == 0.0 {
        return Err(Error::TooFewSamples("chord endpoints coincide".into()));
    }
    let mut worst: f64 = 0.0;
    for &p in points {
        let d = p - a;
        let t = (d.x * chord.x + d.y * chord.y + d.t * chord.t) / len2;
        let off = d - chord.scale(t);
        worst = worst.max(off.euclid_norm());
    }
    Ok(worst / len2.sqrt())
}

fn tangent_null_residual(points: &[Vector3L]) -> f64 {
    let mut worst: f64 = 0.0;
    for w in points.windows(2) {
        let d = w[1] - w[0];
        let n2 = d.euclid_norm_sq();
        if n2 == 0.0 {
            continue;
        }
        worst = worst.max(lorentz_dot(d, d).abs() / n2.max(1.0));
    }
    worst
}

const STRAIGHT_TOL: f64 = 1e-8;
const CURVE_TOL: f64 = 1e-4;

fn build_locus(
    fam: &SurfaceFamily,
    pts: Vec<(f64, f64)>,
    law: TransverseLaw,
    description: String,
) -> Result<LightlikeLocus> {
    let mut param_curve = Vec::with_capacity(pts.len());
    for (p1, p2) in pts {
        param_curve.push(((p1, p2), fam.evaluate(p1, p2)?));
    }
    let ambient: Vec<Vector3L> = param_curve.iter().map(|p| p.1).collect();
    let straight = straightness_residual(&ambient)?;
    let nullres = tangent_null_residual(&ambient);
    let chord = *ambient.last().unwrap() - ambient[0];
    let direction = {
        let n = chord.euclid_norm();
        if n > 0.0 { Some(chord.scale(1.0 / n)) } else { None }
    };
    let kind = if straight < STRAIGHT_TOL {
        LocusKind::StraightLine
    } else {
        LocusKind::NullCurve
    };
    Ok(LightlikeLocus {
        kind,
        law,
        param_curve,
        direction,
        straightness_residual: straight,
        tangent_null_residual: nullres,
        indeterminate: (STRAIGHT_TOL..CURVE_TOL).contains(&straight),
        description,
    })
}

/// Classification report: analytic prediction plus (after sampling) the
/// empirical side.
#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub family: String,
    pub predicted: Vec<CausalCharacter>,
    pub sampled: Vec<CausalCharacter>,
    pub lightlike_loci: Vec<LightlikeLocus>,
    pub agreement: bool,
    pub notes: String,
}

fn charset(mut v: Vec<CausalCharacter>) -> Vec<CausalCharacter> {
    v.sort();
    v.dedup();
    v
}

use CausalCharacter::{Lightlike as L, Spacelike as S, Timelike as T};

/// Analytic causal-character prediction from the family parameters.
///
/// The sampled side of the returned report is empty; `sample_class`
/// fills it. The decision tree follows the closed-form factorizations in
/// the module docs, with exact parameter clauses at relative 1e-12.
pub fn predict_class(fam: &SurfaceFamily) -> Result<ClassReport> {
    let inner = fam.component().contains(0.0);
    let (classes, notes): (Vec<CausalCharacter>, String) = match fam.spec() {
        FamilySpec::EuclideanGeneral { a, b } => {
            let a = *a;
            let b = *b;
            if eq12(b, 2.0 * a) {
                (vec![S, L], "touching profile: lightlike line along theta = pi, spacelike elsewhere".into())
            } else if b > 2.0 * a {
                (vec![S], "det > 0 everywhere: maximal spacelike".into())
            } else if eq12(b, -2.0 * a) {
                if inner {
                    (vec![T, L], "inner component: lightlike line along theta = 0, timelike elsewhere".into())
                } else {
                    (vec![S, T, L], "outer component: lightlike line along theta = pi plus two null curves".into())
                }
            } else if b < -2.0 * a {
                if inner {
                    (vec![T], "inner component: det < 0 everywhere".into())
                } else {
                    (vec![S, T, L], "outer component: four lightlike null curves bound the spacelike part".into())
                }
            } else {
                (vec![S, T, L], "two lightlike null curves where a r^2 cos theta + Delta = 1".into())
            }
        }
        FamilySpec::EuclideanSingular { .. } => (
            vec![T, L],
            "det = -sin^2(theta)/a: lightlike lines at theta = 0 and pi, timelike elsewhere".into(),
        ),
        FamilySpec::HyperbolaGeneral { kind: HyperbolaKind::TypeI, .. } => (
            vec![T],
            "type I is timelike on its whole domain: det = -(r^2/D^2)((A r^2 + D)^2 + 1) < 0".into(),
        ),
        FamilySpec::HyperbolaGeneral { a, b, delta, kind: HyperbolaKind::TypeII } => {
            let (a, b, delta) = (*a, *b, *delta);
            if b * b > a * a && !eq12(b * b, a * a) {
                let c = (b * b - a * a).sqrt();
                if eq12(delta, c) {
                    if b > 0.0 {
                        if inner {
                            (vec![T, L], "lightlike line at theta = artanh(a/b), timelike elsewhere".into())
                        } else {
                            (vec![T], "outer component: det < 0 everywhere".into())
                        }
                    } else if inner {
                        (vec![S, T, L], "inner component: two null curves bound the spacelike part".into())
                    } else {
                        (vec![T, L], "outer component: lightlike line at theta = artanh(a/b), timelike elsewhere".into())
                    }
                } else if delta < c {
                    if b > 0.0 {
                        (vec![T], "W >= c > delta keeps |D - B r^2| > 1: timelike".into())
                    } else {
                        (vec![S, T, L], "W <= -c with delta < c: all three characters".into())
                    }
                } else {
                    // delta > c: split components
                    if inner {
                        (vec![S, T, L], "inner component: two null curves bound the spacelike part".into())
                    } else {
                        (vec![T], "outer component: det < 0 everywhere".into())
                    }
                }
            } else if eq12(b * b, a * a) {
                if b > 0.0 && delta <= 0.0 {
                    (vec![T], "exponential W > 0 with delta <= 0: timelike".into())
                } else if b > 0.0 {
                    (vec![S, T, L], "exponential W > 0 with delta > 0: all three characters".into())
                } else {
                    (vec![S, T, L], "exponential W < 0: all three characters".into())
                }
            } else {
                (vec![S, T, L], "a^2 > b^2 makes W surjective: all three characters".into())
            }
        }
        FamilySpec::HyperbolaSingular { kind: HyperbolaKind::TypeI, .. } => (
            vec![T],
            "det = -(a sinh - b cosh)^2/c^3 < 0 since |b| > |a|: timelike".into(),
        ),
        FamilySpec::HyperbolaSingular { kind: HyperbolaKind::TypeII, .. } => (
            vec![T, L],
            "det = -(a cosh - b sinh)^2/c^3: lightlike line at theta = artanh(a/b)".into(),
        ),
        FamilySpec::Parabola(t) => parabola_prediction(t),
    };
    Ok(ClassReport {
        family: fam.kind_name().to_string(),
        predicted: charset(classes),
        sampled: vec![],
        lightlike_loci: vec![],
        agreement: false,
        notes,
    })
}

fn parabola_prediction(t: &ParabolaTriple) -> (Vec<CausalCharacter>, String) {
    let p = t.p();
    match t {
        ParabolaTriple::GenZero { b, .. } => {
            if *b == 0.0 {
                // unchecked rotational fixture: det = 4 p (c - 2u)^2
                if eq12(p, 0.0) {
                    (vec![L], "degenerate rotational fixture with p = 0: lightlike plane".into())
                } else if p > 0.0 {
                    (vec![S], "rotational fixture, p > 0: spacelike".into())
                } else {
                    (vec![T], "rotational fixture, p < 0: timelike".into())
                }
            } else {
                (vec![S, T, L], "linear v-term (a = 0, b != 0): one null curve v(u), all characters".into())
            }
        }
        ParabolaTriple::GenPos { .. } => {
            let note = "discriminant -2 a p cos^2(w) decides the sign: spacelike iff p > 0 \
                        for a > 0; the alternative convention (spacelike iff p < 0) contradicts \
                        this discriminant and is not used"
                .to_string();
            if eq12(p, 0.0) {
                (vec![S, L], format!("p = 0: lightlike line v(u) = b/(a r(u)); {note}"))
            } else if p > 0.0 {
                (vec![S], note)
            } else {
                (vec![S, T, L], format!("p < 0: two null curves bound the timelike part; {note}"))
            }
        }
        ParabolaTriple::GenNeg { .. } => {
            if eq12(p, 0.0) {
                (vec![T, L], "discriminant -2 a p cosh^2(w) = 0: lightlike line v(u) = b/(a r(u))".into())
            } else if p < 0.0 {
                (vec![T], "discriminant -2 a p cosh^2(w) < 0: timelike".into())
            } else {
                (vec![S, T, L], "discriminant > 0: two null curves bound the spacelike part".into())
            }
        }
        ParabolaTriple::Singular { .. } => {
            if eq12(p, 0.0) {
                (vec![T, L], "constant radius, p = 0: lightlike line at constant v".into())
            } else if p > 0.0 {
                (vec![T], "discriminant 4 a m p e^{-2mu} < 0: timelike".into())
            } else {
                (vec![S, T, L], "discriminant > 0: two null curves bound the spacelike part".into())
            }
        }
    }
}

/// Grid sampling of causal characters with lightlike-locus extraction.
///
/// Scans det along each p1 row, refining strict sign changes by
/// bisection and tangential minima by ternary search; crossings are
/// chained across rows into loci. Deterministic: row-major order,
/// greedy nearest-chain matching with slope extrapolation.
pub fn sample_class(fam: &SurfaceFamily, grid: &GridSpec) -> Result<ClassReport> {
    let mut report = predict_class(fam)?;
    let p1s = grid.p1.values();
    let p2s = grid.p2.values();
    let mut seen = [false; 3]; // S, T, L
    let mut chains: Vec<Chain> = Vec::new();

    for (row, &p1) in p1s.iter().enumerate() {
        let cells: Vec<Option<(f64, f64)>> = p2s
            .iter()
            .map(|&p2| fundamental_forms(fam, p1, p2).ok().map(|ff| (ff.det, ff.band)))
            .collect();
        for c in cells.iter().flatten() {
            let (det, band) = *c;
            if det > band {
                seen[0] = true;
            } else if det < -band {
                seen[1] = true;
            } else {
                seen[2] = true;
            }
        }
        let mut crossings = row_crossings(fam, p1, &p2s, &cells);
        crossings.sort_by(|a, b| a.partial_cmp(b).unwrap());
        crossings.dedup_by(|a, b| (*a - *b).abs() < 0.3 * grid.p2.step());
        attach_to_chains(&mut chains, row, &crossings, grid.p2.step());
    }

    let mut loci = Vec::new();
    for chain in &chains {
        if chain.pts.len() < 3 {
            continue;
        }
        seen[2] = true;
        let pts: Vec<(f64, f64)> = chain.pts.iter().map(|&(row, p2)| (p1s[row], p2)).collect();
        loci.push(build_locus(
            fam,
            pts,
            TransverseLaw::Samples,
            "sampled det = 0 locus".into(),
        )?);
    }

    let mut sampled = Vec::new();
    if seen[0] {
        sampled.push(S);
    }
    if seen[1] {
        sampled.push(T);
    }
    if seen[2] {
        sampled.push(L);
    }
    report.sampled = charset(sampled);
    report.agreement = report.sampled == report.predicted;
    if loci.iter().any(|l| l.indeterminate) {
        report.notes.push_str(
            "; indeterminate locus straightness (between line and curve thresholds)",
        );
    }
    report.lightlike_loci = loci;
    Ok(report)
}

struct Chain {
    /// (row index, p2 value)
    pts: Vec<(usize, f64)>,
    last_row: usize,
}

fn attach_to_chains(chains: &mut Vec<Chain>, row: usize, crossings: &[f64], p2_step: f64) {
    let tol = 3.0 * p2_step;
    let mut extended: Vec<bool> = chains.iter().map(|_| false).collect();
    for &x in crossings {
        let mut best: Option<(usize, f64)> = None;
        for (ci, chain) in chains.iter().enumerate() {
            if extended[ci] || row == 0 || chain.last_row != row - 1 {
                continue;
            }
            // extrapolate the chain one row ahead
            let n = chain.pts.len();
            let predicted = if n >= 2 {
                2.0 * chain.pts[n - 1].1 - chain.pts[n - 2].1
            } else {
                chain.pts[n - 1].1
            };
            let d = (x - predicted).abs();
            if d <= tol && best.map_or(true, |(_, bd)| d < bd) {
                best = Some((ci, d));
            }
        }
        match best {
            Some((ci, _)) => {
                chains[ci].pts.push((row, x));
                chains[ci].last_row = row;
                extended[ci] = true;
            }
            None => {
                chains.push(Chain { pts: vec![(row, x)], last_row: row });
                extended.push(true);
            }
        }
    }
}

/// Lightlike crossings of det along one p1 row.
fn row_crossings(fam: &SurfaceFamily, p1: f64, p2s: &[f64], cells: &[Option<(f64, f64)>]) -> Vec<f64> {
    let det_at = |p2: f64| -> Option<(f64, f64)> {
        fundamental_forms(fam, p1, p2).ok().map(|ff| (ff.det, ff.band))
    };
    let mut out = Vec::new();
    // direct band hits
    for (j, c) in cells.iter().enumerate() {
        if let Some((det, band)) = c {
            if det.abs() <= *band {
                out.push(p2s[j]);
            }
        }
    }
    // strict sign changes: bisection
    for j in 0..cells.len() - 1 {
        if let (Some((d0, b0)), Some((d1, b1))) = (cells[j], cells[j + 1]) {
            if d0.abs() <= b0 || d1.abs() <= b1 {
                continue;
            }
            if d0.signum() * d1.signum() < 0.0 {
                let (mut lo, mut hi) = (p2s[j], p2s[j + 1]);
                let mut flo = d0;
                for _ in 0..60 {
                    let mid = 0.5 * (lo + hi);
                    match det_at(mid) {
                        Some((dm, _)) => {
                            if dm.signum() == flo.signum() {
                                lo = mid;
                                flo = dm;
                            } else {
                                hi = mid;
                            }
                        }
                        None => break,
                    }
                }
                out.push(0.5 * (lo + hi));
            }
        }
    }
    // tangencies: |det| local minima that dip into the band after refinement
    for j in 1..cells.len().saturating_sub(1) {
        if let (Some((dm1, bm1)), Some((d0, b0)), Some((dp1, bp1))) =
            (cells[j - 1], cells[j], cells[j + 1])
        {
            let outside =
                dm1.abs() > bm1 && d0.abs() > b0 && dp1.abs() > bp1;
            let same_sign = dm1.signum() == dp1.signum() && dm1.signum() == d0.signum();
            if !(outside && same_sign && d0.abs() < dm1.abs() && d0.abs() < dp1.abs()) {
                continue;
            }
            // ternary search for the minimum of |det|
            let (mut lo, mut hi) = (p2s[j - 1], p2s[j + 1]);
            for _ in 0..90 {
                let m1 = lo + (hi - lo) / 3.0;
                let m2 = hi - (hi - lo) / 3.0;
                let f1 = det_at(m1).map(|c| c.0.abs());
                let f2 = det_at(m2).map(|c| c.0.abs());
                match (f1, f2) {
                    (Some(a), Some(b)) => {
                        if a <= b {
                            hi = m2;
                        } else {
                            lo = m1;
                        }
                    }
                    _ => break,
                }
            }
            let mid = 0.5 * (lo + hi);
            if let Some((d, b)) = det_at(mid) {
                if d.abs() <= b {
                    out.push(mid);
                }
            }
        }
    }
    out
}

/// Closed-form lightlike loci for the family's predicted class.
///
/// Straight lines come with exact transverse laws (constant p2 or the
/// parabolic v(u) = b/(a r(u))); null curves are sampled from their
/// closed-form p2(p1) relations. Errors with NoLightlikePart when the
/// prediction has no lightlike points.
pub fn lightlike_locus_analytic(fam: &SurfaceFamily) -> Result<Vec<LightlikeLocus>> {
    let predicted = predict_class(fam)?.predicted;
    if !predicted.contains(&L) {
        return Err(Error::NoLightlikePart(format!(
            "{} with these parameters has no lightlike points",
            fam.kind_name()
        )));
    }
    let inner = fam.component().contains(0.0);
    const N: usize = 33;
    let mut out = Vec::new();
    match fam.spec() {
        FamilySpec::EuclideanGeneral { a, b } => {
            let (a, b) = (*a, *b);
            let sa = a.sqrt();
            if eq12(b, 2.0 * a) {
                let (lo, hi) = locus_window(fam, 0.25, 2.5);
                out.push(line_locus(fam, std::f64::consts::PI, lo, hi, N, "straight lightlike line theta = pi")?);
            } else if eq12(b, -2.0 * a) {
                if inner {
                    let (lo, hi) = locus_window(fam, 0.25 / sa, 0.85 / sa);
                    out.push(line_locus(fam, 0.0, lo, hi, N, "straight lightlike line theta = 0")?);
                } else {
                    let (lo, hi) = locus_window(fam, 1.15 / sa, 3.5 / sa);
                    out.push(line_locus(fam, std::f64::consts::PI, lo, hi, N, "straight lightlike line theta = pi")?);
                    // eta = 0 curves: cos theta = (2 - a r^2) / (a r^2)
                    for sign in [1.0, -1.0] {
                        let f = |r: f64| -> Option<f64> {
                            let q = (2.0 - a * r * r) / (a * r * r);
                            if q.abs() <= 1.0 { Some(mirror_angle(q.acos(), sign)) } else { None }
                        };
                        if let Some(locus) = curve_locus(fam, &f, lo, hi, N, "null curve where a r^2 cos theta + a r^2 = 2")? {
                            out.push(locus);
                        }
                    }
                }
            } else if b < 2.0 * a {
                // all-three ranges: factor zeros cos = (+-1 - Delta)/(a r^2)
                let ((lo, hi), _) = fam.default_window();
                for target in [1.0, -1.0] {
                    for sign in [1.0, -1.0] {
                        let f = |r: f64| -> Option<f64> {
                            let d = fam.profile_delta(r).ok()?;
                            let q = (target - d) / (a * r * r);
                            if q.abs() <= 1.0 { Some(mirror_angle(q.acos(), sign)) } else { None }
                        };
                        if let Some(locus) = curve_locus(fam, &f, lo, hi, N, "null curve where a r^2 cos theta + Delta = +-1")? {
                            out.push(locus);
                        }
                    }
                }
            }
        }
        FamilySpec::EuclideanSingular { .. } => {
            // theta = pi first: its line matches the normalized frame's
            // negative constant alpha
            out.push(line_locus(fam, std::f64::consts::PI, -1.5, 1.5, N, "straight lightlike line theta = pi")?);
            out.push(line_locus(fam, 0.0, -1.5, 1.5, N, "straight lightlike line theta = 0")?);
        }
        FamilySpec::HyperbolaGeneral { a, b, delta, kind: HyperbolaKind::TypeII } => {
            let (a, b, delta) = (*a, *b, *delta);
            let line_theta = if b * b > a * a { Some((a / b).atanh()) } else { None };
            let c = if b * b > a * a { (b * b - a * a).sqrt() } else { 0.0 };
            let has_line = b * b > a * a
                && eq12(delta, c)
                && ((b > 0.0 && inner) || (b < 0.0 && !inner));
            if has_line {
                let sc = c.sqrt();
                let (lo, hi) = if inner {
                    locus_window(fam, 0.25 / sc, 0.85 / sc)
                } else {
                    locus_window(fam, 1.15 / sc, 3.5 / sc)
                };
                out.push(line_locus(fam, line_theta.unwrap(), lo, hi, N, "straight lightlike line at theta = artanh(a/b)")?);
            }
            if predicted.len() == 3 {
                let ((lo, hi), _) = fam.default_window();
                for target in [1.0, -1.0] {
                    for branch in [0usize, 1usize] {
                        let f = |r: f64| -> Option<f64> {
                            let d = fam.profile_delta(r).ok()?;
                            let w = (target - d) / (r * r);
                            let sols = hyperbolic_w_solutions(a, b, w);
                            sols.get(branch).copied()
                        };
                        if let Some(locus) = curve_locus(fam, &f, lo, hi, N, "null curve where Delta - B r^2 = +-1")? {
                            out.push(locus);
                        }
                    }
                }
            }
        }
        FamilySpec::HyperbolaGeneral { kind: HyperbolaKind::TypeI, .. } => unreachable!(),
        FamilySpec::HyperbolaSingular { a, b, kind: HyperbolaKind::TypeII } => {
            out.push(line_locus(fam, (a / b).atanh(), -1.5, 1.5, N, "straight lightlike line at theta = artanh(a/b)")?);
        }
        FamilySpec::HyperbolaSingular { kind: HyperbolaKind::TypeI, .. } => unreachable!(),
        FamilySpec::Parabola(t) => {
            let p = t.p();
            let line = eq12(p, 0.0);
            match t {
                ParabolaTriple::GenZero { b, .. } => {
                    if *b != 0.0 {
                        let ((lo, hi), _) = fam.default_window();
                        let f = |u: f64| -> Option<f64> {
                            let d = t.data(u).ok()?;
                            // linear zero of -2(b/r) v + 2 g'
                            Some(d.gp * d.r / b)
                        };
                        if let Some(locus) = curve_locus(fam, &f, lo, hi, N, "null curve v(u) = g'(u) r(u) / b")? {
                            out.push(locus);
                        }
                    }
                }
                ParabolaTriple::GenPos { .. } | ParabolaTriple::GenNeg { .. } => {
                    let comp = fam.component();
                    let (lo, hi) = if matches!(t, ParabolaTriple::GenPos { .. }) {
                        let w = comp.width();
                        (comp.lo + 0.2 * w, comp.hi - 0.2 * w)
                    } else if comp.hi.is_finite() {
                        // keep away from the r = 0 breakpoint at u = c
                        (comp.hi - 3.0, comp.hi - 0.6)
                    } else {
                        (comp.lo + 0.6, comp.lo + 3.0)
                    };
                    if line {
                        out.push(parabola_line_locus(fam, lo, hi, N)?);
                    } else {
                        push_parabola_curves(fam, t, &mut out, N)?;
                    }
                }
                ParabolaTriple::Singular { a, b, .. } => {
                    if line {
                        let m = (-2.0 * a).sqrt();
                        let v0 = 2.0 * b / (a * m);
                        out.push(line_locus(fam, v0, -1.5, 1.5, N, "straight lightlike line at constant v")?);
                    } else {
                        push_parabola_curves(fam, t, &mut out, N)?;
                    }
                }
            }
        }
    }
    if out.is_empty() {
        return Err(Error::NoLightlikePart(format!(
            "no closed-form locus available for {} in this configuration",
            fam.kind_name()
        )));
    }
    Ok(out)
}

// reflect an angle in [0, pi] to the other branch in [0, 2 pi)
fn mirror_angle(theta: f64, sign: f64) -> f64 {
    if sign > 0.0 {
        theta
    } else {
        2.0 * std::f64::consts::PI - theta
    }
}

/// Solutions theta of b cosh(theta) - a sinh(theta) = w, ascending.
fn hyperbolic_w_solutions(a: f64, b: f64, w: f64) -> Vec<f64> {
    if eq12(b * b, a * a) {
        // exponential form: W = b e^{-theta} (a = b), W = b e^{theta} (a = -b)
        if b == 0.0 || w / b <= 0.0 {
            return vec![];
        }
        let l = (w / b).ln();
        return if a * b > 0.0 { vec![-l] } else { vec![l] };
    }
    if b * b > a * a {
        let c = (b * b - a * a).sqrt();
        let phi = (a / b).atanh();
        let q = w / (b.signum() * c);
        if q < 1.0 {
            vec![]
        } else {
            let d = q.acosh();
            if d == 0.0 { vec![phi] } else { vec![phi - d, phi + d] }
        }
    } else {
        let q = (a * a - b * b).sqrt();
        let phi = (b / a).atanh();
        // W = -sign(a) q sinh(theta - phi)
        vec![phi + (-w / (a.signum() * q)).asinh()]
    }
}

fn locus_window(fam: &SurfaceFamily, lo: f64, hi: f64) -> (f64, f64) {
    let comp = fam.component();
    let mid = 0.5 * (lo + hi);
    if comp.contains(mid) && comp.contains(lo) && comp.contains(hi) {
        (lo, hi)
    } else if comp.contains(-mid) {
        (-hi, -lo)
    } else {
        comp.clip_window(lo, hi).unwrap_or((lo, hi))
    }
}

fn line_locus(
    fam: &SurfaceFamily,
    p2: f64,
    lo: f64,
    hi: f64,
    n: usize,
    desc: &str,
) -> Result<LightlikeLocus> {
    let pts: Vec<(f64, f64)> = (0..n)
        .map(|i| (lo + (hi - lo) * i as f64 / (n - 1) as f64, p2))
        .collect();
    build_locus(fam, pts, TransverseLaw::ConstP2(p2), desc.into())
}

fn parabola_line_locus(fam: &SurfaceFamily, lo: f64, hi: f64, n: usize) -> Result<LightlikeLocus> {
    let t = match fam.spec() {
        FamilySpec::Parabola(t) => t,
        _ => unreachable!(),
    };
    let mut pts = Vec::with_capacity(n);
    for i in 0..n {
        let u = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let rfg = SurfaceFamily::parabola_rfg(t, u)?;
        pts.push((u, t.b() / (t.a() * rfg.r)));
    }
    build_locus(
        fam,
        pts,
        TransverseLaw::ParabolaLine,
        "straight lightlike line v(u) = b/(a r(u))".into(),
    )
}

fn push_parabola_curves(
    fam: &SurfaceFamily,
    t: &ParabolaTriple,
    out: &mut Vec<LightlikeLocus>,
    n: usize,
) -> Result<()> {
    let ((lo, hi), _) = fam.default_window();
    for sign in [1.0, -1.0] {
        let f = |u: f64| -> Option<f64> {
            let d = t.data(u).ok()?;
            let a = t.a();
            let half = t.b() / d.r; // half the linear coefficient over a
            let disc = half * half - 2.0 * a * d.gp;
            if disc < 0.0 {
                return None;
            }
            Some((half + sign * disc.sqrt()) / a)
        };
        if let Some(locus) = curve_locus(fam, &f, lo, hi, n, "null curve root of a v^2 - 2(b/r) v + 2 g'")? {
            out.push(locus);
        }
    }
    Ok(())
}

fn curve_locus(
    fam: &SurfaceFamily,
    p2_of_p1: &dyn Fn(f64) -> Option<f64>,
    lo: f64,
    hi: f64,
    n: usize,
    desc: &str,
) -> Result<Option<LightlikeLocus>> {
    let mut pts = Vec::new();
    for i in 0..n {
        let p1 = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        if !fam.component().contains(p1) {
            continue;
        }
        if let Some(p2) = p2_of_p1(p1) {
            pts.push((p1, p2));
        }
    }
    if pts.len() < 5 {
        return Ok(None);
    }
    Ok(Some(build_locus(fam, pts, TransverseLaw::Samples, desc.into())?))
}

/// Invariance test under the null-rotation group fixing span(0,1,1).
///
/// Rotates sampled surface points by several group elements, re-solves
/// the surface parameters of the image (u from the preserved y - t = 2u,
/// v from the x slot), and measures the Euclidean gap to the surface.
/// Returns (rotational, max deviation): rotational exactly for the
/// f = 0, r(u) = -1/(2u) triple.
pub fn rotational_check(triple: &ParabolaTriple, samples: usize) -> Result<(bool, f64)> {
    let fam = SurfaceFamily::parabola(*triple, None)?;
    let ((ulo, uhi), (vlo, vhi)) = fam.default_window();
    let thetas = [-0.75, -0.3, 0.4, 0.9];
    let mut max_dev: f64 = 0.0;
    for i in 0..samples.max(4) {
        let s = (i as f64 + 0.5) / samples.max(4) as f64;
        let u = ulo + (uhi - ulo) * s;
        let v = vlo + (vhi - vlo) * ((0.618_033_988_749_895 * (i as f64 + 1.0)).fract());
        let p = match fam.evaluate(u, v) {
            Ok(p) => p,
            Err(_) => continue,
        };
        for &th in &thetas {
            let q = one_parameter_isometry(AxisKind::LightlikeAxis, th).apply(p);
            let u2 = 0.5 * (q.y - q.t);
            if !fam.component().contains(u2) {
                continue;
            }
            let d = triple.data(u2)?;
            let v2 = q.x - d.f;
            let back = fam.evaluate(u2, v2)?;
            max_dev = max_dev.max((q - back).euclid_norm());
        }
    }
    Ok((max_dev < 1e-8, max_dev))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::HyperbolaKind::{TypeI, TypeII};

    fn euclid(a: f64, b: f64) -> SurfaceFamily {
        SurfaceFamily::euclidean_general(a, b, None).unwrap()
    }

    #[test]
    fn determinant_matches_closed_form_values() {
        let f = euclid(1.0, 2.0);
        let ff = fundamental_forms(&f, 1.0, 0.0).unwrap();
        assert!((ff.det - 2.0).abs() < 1e-12);
        // theta = pi is the lightlike line for b = 2a, any radius
        for r in [0.3, 1.0, 2.2] {
            let ff = fundamental_forms(&f, r, std::f64::consts::PI).unwrap();
            assert_eq!(ff.epsilon, 0, "det {} at r = {r}", ff.det);
        }
        let t = ParabolaTriple::singular(-2.0, 0.0, -1.0).unwrap();
        let f = SurfaceFamily::parabola(t, None).unwrap();
        let ff = fundamental_forms(&f, 0.0, 0.0).unwrap();
        assert!((ff.det - 16.0).abs() < 1e-12);
    }

    #[test]
    fn normal_is_unit_and_orthogonal_off_the_band() {
        let f = euclid(1.0, 0.0);
        let pa = f.partials(0.7, 1.1).unwrap();
        let ff = fundamental_forms(&f, 0.7, 1.1).unwrap();
        assert_ne!(ff.epsilon, 0);
        let nn = lorentz_dot(ff.normal, ff.normal);
        assert!((nn + ff.epsilon as f64).abs() < 1e-8);
        assert!(lorentz_dot(ff.normal, pa.x1).abs() < 1e-8);
        assert!(lorentz_dot(ff.normal, pa.x2).abs() < 1e-8);
    }

    #[test]
    fn mean_curvature_residual_is_tiny_or_errors_on_band() {
        let fams = [
            euclid(1.0, 2.0),
            euclid(0.5, -3.0),
            SurfaceFamily::hyperbola_general(1.0, 0.5, 1.0, TypeI, None).unwrap(),
            SurfaceFamily::hyperbola_general(0.0, 1.0, 0.5, TypeII, None).unwrap(),
            SurfaceFamily::hyperbola_singular(0.0, 1.0, TypeI).unwrap(),
            SurfaceFamily::parabola(ParabolaTriple::gen_zero(1.0, 0.0, 1.0).unwrap(), None).unwrap(),
        ];
        for f in &fams {
            let ((lo, hi), (plo, phi)) = f.default_window();
            for i in 0..5 {
                let p1 = lo + (hi - lo) * (0.13 + 0.17 * i as f64);
                let p2 = plo + (phi - plo) * (0.21 + 0.13 * i as f64);
                match mean_curvature_residual(f, p1, p2) {
                    Ok(res) => assert!(res < 1e-8, "{}: residual {res}", f.kind_name()),
                    Err(Error::LightlikePoint(_)) => {}
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
        }
        let f = euclid(1.0, 2.0);
        assert!(matches!(
            mean_curvature_residual(&f, 1.0, std::f64::consts::PI),
            Err(Error::LightlikePoint(_))
        ));
    }

    #[test]
    fn euclidean_predictions_follow_the_b_against_2a_tree() {
        assert_eq!(predict_class(&euclid(1.0, 3.0)).unwrap().predicted, vec![S]);
        assert_eq!(predict_class(&euclid(1.0, 2.0)).unwrap().predicted, vec![S, L]);
        assert_eq!(predict_class(&euclid(1.0, 0.0)).unwrap().predicted, vec![S, T, L]);
        assert_eq!(predict_class(&euclid(1.0, -2.0)).unwrap().predicted, vec![T, L]);
        assert_eq!(predict_class(&euclid(1.0, -3.0)).unwrap().predicted, vec![T]);
        let outer = SurfaceFamily::euclidean_general(1.0, -2.0, Some(2.0)).unwrap();
        assert_eq!(predict_class(&outer).unwrap().predicted, vec![S, T, L]);
        let outer = SurfaceFamily::euclidean_general(1.0, -3.0, Some(2.0)).unwrap();
        assert_eq!(predict_class(&outer).unwrap().predicted, vec![S, T, L]);
    }

    #[test]
    fn hyperbola_predictions_cover_the_type_ii_clauses() {
        let mk = |a: f64, b: f64, d: f64, r0: Option<f64>| {
            SurfaceFamily::hyperbola_general(a, b, d, TypeII, r0).unwrap()
        };
        // b > 0, delta < c: timelike on the whole line
        assert_eq!(predict_class(&mk(0.0, 1.0, 0.5, None)).unwrap().predicted, vec![T]);
        assert_eq!(predict_class(&mk(0.0, 1.0, -2.0, None)).unwrap().predicted, vec![T]);
        // b > 0, delta = c: inner line, outer timelike
        assert_eq!(predict_class(&mk(0.0, 1.0, 1.0, None)).unwrap().predicted, vec![T, L]);
        assert_eq!(
            predict_class(&mk(0.0, 1.0, 1.0, Some(1.5))).unwrap().predicted,
            vec![T]
        );
        // b > 0, delta > c: inner all three, outer timelike
        assert_eq!(
            predict_class(&mk(0.0, 1.0, 2.0, None)).unwrap().predicted,
            vec![S, T, L]
        );
        let outer_r0 = ((2.0f64 + 3.0f64.sqrt()).sqrt()) + 0.3;
        assert_eq!(
            predict_class(&mk(0.0, 1.0, 2.0, Some(outer_r0))).unwrap().predicted,
            vec![T]
        );
        // b < 0 mirror: delta = c gives the line on the outer component
        assert_eq!(
            predict_class(&mk(0.0, -1.0, 1.0, Some(1.5))).unwrap().predicted,
            vec![T, L]
        );
        assert_eq!(predict_class(&mk(0.0, -1.0, 1.0, None)).unwrap().predicted, vec![S, T, L]);
        // a^2 > b^2: always all three
        assert_eq!(predict_class(&mk(2.0, 1.0, 0.0, None)).unwrap().predicted, vec![S, T, L]);
        // |a| = |b|: sign of b decides
        assert_eq!(predict_class(&mk(1.0, 1.0, -0.5, None)).unwrap().predicted, vec![T]);
        assert_eq!(predict_class(&mk(1.0, 1.0, 0.5, None)).unwrap().predicted, vec![S, T, L]);
        assert_eq!(predict_class(&mk(1.0, -1.0, -0.5, None)).unwrap().predicted, vec![S, T, L]);
        // type I: always timelike
        let f = SurfaceFamily::hyperbola_general(1.0, 0.5, 1.0, TypeI, None).unwrap();
        assert_eq!(predict_class(&f).unwrap().predicted, vec![T]);
    }

    #[test]
    fn parabola_predictions_follow_the_discriminant() {
        let pos = |p: f64| SurfaceFamily::parabola(ParabolaTriple::gen_pos(2.0, 1.0, 0.0, p).unwrap(), None).unwrap();
        assert_eq!(predict_class(&pos(1.0)).unwrap().predicted, vec![S]);
        assert_eq!(predict_class(&pos(0.0)).unwrap().predicted, vec![S, L]);
        assert_eq!(predict_class(&pos(-1.0)).unwrap().predicted, vec![S, T, L]);
        assert!(predict_class(&pos(1.0)).unwrap().notes.contains("not used"));
        let neg = |p: f64| SurfaceFamily::parabola(ParabolaTriple::gen_neg(-2.0, 1.0, 0.0, p).unwrap(), None).unwrap();
        assert_eq!(predict_class(&neg(-1.0)).unwrap().predicted, vec![T]);
        assert_eq!(predict_class(&neg(0.0)).unwrap().predicted, vec![T, L]);
        assert_eq!(predict_class(&neg(1.0)).unwrap().predicted, vec![S, T, L]);
        let sing = |p: f64| SurfaceFamily::parabola(ParabolaTriple::singular(-2.0, 0.5, p).unwrap(), None).unwrap();
        assert_eq!(predict_class(&sing(1.0)).unwrap().predicted, vec![T]);
        assert_eq!(predict_class(&sing(0.0)).unwrap().predicted, vec![T, L]);
        assert_eq!(predict_class(&sing(-1.0)).unwrap().predicted, vec![S, T, L]);
        let zero = SurfaceFamily::parabola(ParabolaTriple::gen_zero(1.0, 0.0, 0.5).unwrap(), None).unwrap();
        assert_eq!(predict_class(&zero).unwrap().predicted, vec![S, T, L]);
    }

    #[test]
    fn sampling_agrees_with_predictions_on_representative_cases() {
        let cases: Vec<SurfaceFamily> = vec![
            euclid(1.0, 3.0),
            euclid(1.0, 2.0),
            euclid(1.0, 0.0),
            euclid(1.0, -2.0),
            euclid(1.0, -3.0),
            SurfaceFamily::euclidean_singular(1.0).unwrap(),
            SurfaceFamily::hyperbola_general(1.0, 0.5, 1.0, TypeI, None).unwrap(),
            SurfaceFamily::hyperbola_general(0.0, 1.0, 1.0, TypeII, None).unwrap(),
            SurfaceFamily::hyperbola_singular(0.0, 1.0, TypeII).unwrap(),
            SurfaceFamily::parabola(ParabolaTriple::gen_neg(-2.0, 1.0, 0.0, 0.0).unwrap(), None).unwrap(),
            SurfaceFamily::parabola(ParabolaTriple::singular(-2.0, 0.0, -1.0).unwrap(), None).unwrap(),
        ];
        for f in &cases {
            let grid = GridSpec::default_for(f);
            let report = sample_class(f, &grid).unwrap();
            assert!(
                report.agreement,
                "{}: predicted {:?} sampled {:?}",
                f.kind_name(),
                report.predicted,
                report.sampled
            );
        }
    }

    #[test]
    fn sampled_loci_on_touching_profile_sit_at_theta_pi() {
        let f = euclid(1.0, 2.0);
        let report = sample_class(&f, &GridSpec::default_for(&f)).unwrap();
        assert!(!report.lightlike_loci.is_empty());
        let locus = &report.lightlike_loci[0];
        assert_eq!(locus.kind, LocusKind::StraightLine);
        for ((_, p2), _) in &locus.param_curve {
            assert!((p2 - std::f64::consts::PI).abs() < 1e-6);
        }
    }

    #[test]
    fn analytic_loci_are_straight_lightlike_lines_where_expected() {
        let f = euclid(1.0, 2.0);
        let loci = lightlike_locus_analytic(&f).unwrap();
        assert_eq!(loci.len(), 1);
        let l = &loci[0];
        assert_eq!(l.kind, LocusKind::StraightLine);
        assert!(l.straightness_residual < 1e-10);
        assert!(l.tangent_null_residual < 1e-10);
        // x + t = 0 along the touching-profile line
        for (_, pt) in &l.param_curve {
            assert!((pt.x + pt.t).abs() < 1e-10);
        }
        // the singular family has two lines, theta = pi listed first
        let f = SurfaceFamily::euclidean_singular(1.0).unwrap();
        let loci = lightlike_locus_analytic(&f).unwrap();
        assert_eq!(loci.len(), 2);
        assert!((loci[0].param_curve[0].0 .1 - std::f64::consts::PI).abs() < 1e-12);
        for l in &loci {
            assert_eq!(l.kind, LocusKind::StraightLine);
            let d = l.direction.unwrap();
            assert!((d.x.abs() - d.t.abs()).abs() < 1e-10 && d.y.abs() < 1e-10);
        }
    }

    #[test]
    fn null_curves_on_the_outer_component_are_not_straight() {
        let f = SurfaceFamily::euclidean_general(1.0, -2.0, Some(2.0)).unwrap();
        let loci = lightlike_locus_analytic(&f).unwrap();
        let lines: Vec<_> = loci.iter().filter(|l| l.kind == LocusKind::StraightLine).collect();
        let curves: Vec<_> = loci.iter().filter(|l| l.kind == LocusKind::NullCurve).collect();
        assert_eq!(lines.len(), 1);
        assert_eq!(curves.len(), 2);
        for c in curves {
            assert!(c.straightness_residual > 1e-2, "residual {}", c.straightness_residual);
        }
    }

    #[test]
    fn parabola_line_locus_matches_its_law_and_direction() {
        let t = ParabolaTriple::gen_neg(-2.0, 1.0, 0.0, 0.0).unwrap();
        let f = SurfaceFamily::parabola(t, None).unwrap();
        let loci = lightlike_locus_analytic(&f).unwrap();
        assert_eq!(loci.len(), 1);
        let l = &loci[0];
        assert_eq!(l.kind, LocusKind::StraightLine);
        let d = l.direction.unwrap();
        // direction parallel to (-2b/a, 1 - b^2/a^2, -1 - b^2/a^2) = (1, 3/4, -5/4)
        let expect = Vector3L::new(1.0, 0.75, -1.25);
        let crossn = lorentz_cross(d, expect).euclid_norm();
        assert!(crossn < 1e-8, "direction {d:?}");
    }

    #[test]
    fn straightness_needs_three_points() {
        let pts = [Vector3L::new(0.0, 0.0, 0.0), Vector3L::new(1.0, 0.0, 0.0)];
        assert!(matches!(
            straightness_residual(&pts),
            Err(Error::TooFewSamples(_))
        ));
    }

    #[test]
    fn rotational_check_accepts_exactly_the_canonical_triple() {
        let fixture = ParabolaTriple::rotational_fixture(0.7);
        let (rot, dev) = rotational_check(&fixture, 40).unwrap();
        assert!(rot, "fixture deviation {dev}");
        let non = [
            ParabolaTriple::gen_zero(1.0, 0.0, 0.0).unwrap(),
            ParabolaTriple::gen_zero(0.5, 1.0, 0.3).unwrap(),
            ParabolaTriple::gen_pos(2.0, 1.0, 0.0, 1.0).unwrap(),
            ParabolaTriple::gen_neg(-2.0, 1.0, 0.0, 0.0).unwrap(),
            ParabolaTriple::singular(-2.0, 0.0, -1.0).unwrap(),
            // shifted rotational axis: still rejected against the canonical axis
            ParabolaTriple::GenZero { b: 0.0, c: 1.0, p: 0.5 },
        ];
        for t in &non {
            let (rot, dev) = rotational_check(t, 40).unwrap();
            assert!(!rot && dev > 1e-3, "{t:?} deviation {dev}");
        }
    }
}
