//! Characteristic invariant along straight lightlike lines.
//!
//! On a surface whose lightlike locus is a straight line, normalize the
//! line to the canonical null position with a `null_normalizing_isometry`
//! and read off alpha(y) = (t_22 - y_22) / x_2^2 from the transverse
//! second-order jet. alpha satisfies the Riccati relation
//!     d(alpha)/dy + alpha^2 + mu = 0
//! for a constant mu, and the solution falls into one of six closed
//! forms after rescaling by sqrt(|mu|):
//!     alpha_plus      -tan(y + c)         (mu > 0)
//!     alpha_0_I       0                   (mu = 0, constant)
//!     alpha_0_II      1/(y + c)           (mu = 0)
//!     alpha_minus_I   tanh(y + c)         (mu < 0, |alpha| < sqrt(-mu))
//!     alpha_minus_II  coth(y + c)         (mu < 0, |alpha| > sqrt(-mu))
//!     alpha_minus_III +-1                 (mu < 0, constant)

use crate::classify::{LightlikeLocus, LocusKind};
use crate::error::{Error, Result};
use crate::families::SurfaceFamily;
use crate::minkowski::null_normalizing_isometry;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlphaType {
    #[serde(rename = "alpha_plus")]
    AlphaPlus,
    #[serde(rename = "alpha_0_I")]
    Alpha0I,
    #[serde(rename = "alpha_0_II")]
    Alpha0II,
    #[serde(rename = "alpha_minus_I")]
    AlphaMinusI,
    #[serde(rename = "alpha_minus_II")]
    AlphaMinusII,
    #[serde(rename = "alpha_minus_III")]
    AlphaMinusIII,
}

impl AlphaType {
    pub fn label(&self) -> &'static str {
        match self {
            AlphaType::AlphaPlus => "alpha_plus",
            AlphaType::Alpha0I => "alpha_0_I",
            AlphaType::Alpha0II => "alpha_0_II",
            AlphaType::AlphaMinusI => "alpha_minus_I",
            AlphaType::AlphaMinusII => "alpha_minus_II",
            AlphaType::AlphaMinusIII => "alpha_minus_III",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacteristicReport {
    /// (y, alpha) pairs in the normalized frame.
    pub samples: Vec<(f64, f64)>,
    pub mu: f64,
    pub mu_constancy_residual: f64,
    pub alpha_type: AlphaType,
    pub closed_form_fit_residual: f64,
}

/// Samples alpha(y) along a straight lightlike locus.
///
/// Builds the normalizing isometry from the locus direction and
/// basepoint, then evaluates analytic transverse partials at n evenly
/// spaced locus parameters. Samples with a degenerate transverse x-slot
/// are skipped; it is an error if all are.
pub fn alpha_along_line(
    fam: &SurfaceFamily,
    locus: &LightlikeLocus,
    n: usize,
) -> Result<Vec<(f64, f64)>> {
    if locus.kind != LocusKind::StraightLine {
        return Err(Error::NotALine(format!(
            "locus is not straight (straightness residual {:.3e})",
            locus.straightness_residual
        )));
    }
    let dir = locus
        .direction
        .ok_or_else(|| Error::NotALine("locus has no direction".into()))?;
    let base = locus
        .param_curve
        .first()
        .ok_or_else(|| Error::TooFewSamples("locus has no samples".into()))?
        .1;
    let iso = null_normalizing_isometry(dir, base)?;
    let (lo, hi) = locus.p1_span();
    if !(n >= 2 && lo != hi) {
        return Err(Error::TooFewSamples("need n >= 2 and a nonzero locus span".into()));
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let p1 = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let p2 = locus.p2_at(fam, p1)?;
        let pa = fam.partials(p1, p2)?;
        let x2 = iso.linear.apply(pa.x2);
        let x22 = iso.linear.apply(pa.x22);
        let scale = 1.0f64.max(pa.x2.euclid_norm_sq());
        if x2.x * x2.x < 1e-12 * scale {
            continue;
        }
        let alpha = (x22.t - x22.y) / (x2.x * x2.x);
        let y = iso.apply(fam.evaluate(p1, p2)?).y;
        out.push((y, alpha));
    }
    if out.is_empty() {
        return Err(Error::DegenerateTransverse(
            "transverse direction degenerate at every sample".into(),
        ));
    }
    Ok(out)
}

/// Derivative of the Lagrange interpolant through `pts` at node `at`.
/// Handles non-uniform spacing; with a centered 5-node window the
/// truncation error is fourth order in the spacing.
fn stencil_derivative(pts: &[(f64, f64)], at: usize) -> f64 {
    let yi = pts[at].0;
    let mut acc = 0.0;
    for (j, &(yj, aj)) in pts.iter().enumerate() {
        if j == at {
            let mut s = 0.0;
            for (k, &(yk, _)) in pts.iter().enumerate() {
                if k != at {
                    s += 1.0 / (yi - yk);
                }
            }
            acc += aj * s;
        } else {
            let mut w = 1.0 / (yj - yi);
            for (k, &(yk, _)) in pts.iter().enumerate() {
                if k != j && k != at {
                    w *= (yi - yk) / (yj - yk);
                }
            }
            acc += aj * w;
        }
    }
    acc
}

/// Recovers mu from the Riccati relation d(alpha)/dy = -(alpha^2 + mu).
///
/// Centered five-point Lagrange differences in y at the interior
/// samples give mu_i = -(d(alpha)/dy|_i + alpha_i^2); the median is
/// robust to the slightly larger truncation error near the ends.
pub fn mu_from_alpha(samples: &[(f64, f64)]) -> Result<(f64, f64)> {
    if samples.len() < 5 {
        return Err(Error::TooFewSamples(format!(
            "mu needs >= 5 samples, got {}",
            samples.len()
        )));
    }
    let increasing = samples.windows(2).all(|w| w[1].0 > w[0].0);
    let decreasing = samples.windows(2).all(|w| w[1].0 < w[0].0);
    if !increasing && !decreasing {
        return Err(Error::NonMonotoneY(
            "y is not strictly monotone along the locus".into(),
        ));
    }
    let mut mus = Vec::with_capacity(samples.len() - 4);
    for i in 2..samples.len() - 2 {
        let dady = stencil_derivative(&samples[i - 2..=i + 2], 2);
        mus.push(-(dady + samples[i].1 * samples[i].1));
    }
    let mut sorted = mus.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mid = sorted.len() / 2;
    let mu = if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        0.5 * (sorted[mid - 1] + sorted[mid])
    };
    let residual = mus.iter().fold(0.0f64, |acc, m| acc.max((m - mu).abs()));
    Ok((mu, residual))
}

const CONST_SPREAD: f64 = 1e-6;
const MU_ZERO: f64 = 1e-6;

/// Assigns the closed-form type from the sign of mu and the shape of
/// alpha. The tanh/coth split uses the analytic bound sqrt(-mu): tanh
/// solutions stay strictly inside it, coth solutions strictly outside.
pub fn classify_alpha_type(samples: &[(f64, f64)], mu: f64) -> Result<AlphaType> {
    if samples.is_empty() {
        return Err(Error::TooFewSamples("no samples to classify".into()));
    }
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut max_abs: f64 = 0.0;
    for &(_, a) in samples {
        min = min.min(a);
        max = max.max(a);
        max_abs = max_abs.max(a.abs());
    }
    if max - min < CONST_SPREAD {
        if max_abs < CONST_SPREAD {
            return Ok(AlphaType::Alpha0I);
        }
        if mu < 0.0 {
            return Ok(AlphaType::AlphaMinusIII);
        }
        return Err(Error::Inconsistent(format!(
            "constant alpha = {:.6} forces mu = -alpha^2 < 0, got mu = {mu:.6}",
            0.5 * (min + max)
        )));
    }
    if mu > MU_ZERO {
        Ok(AlphaType::AlphaPlus)
    } else if mu.abs() <= MU_ZERO {
        Ok(AlphaType::Alpha0II)
    } else if max_abs < (-mu).sqrt() * (1.0 - 1e-6) {
        Ok(AlphaType::AlphaMinusI)
    } else {
        Ok(AlphaType::AlphaMinusII)
    }
}

/// Fits the shift constant of the matching closed form at the middle
/// sample and returns the max deviation over all samples.
///
/// For scaled types the fit runs on beta = alpha/sqrt(|mu|) against
/// y_hat = sqrt(|mu|) y, where the models are -tan, tanh, coth, +-1.
pub fn closed_form_fit(samples: &[(f64, f64)], mu: f64, alpha_type: AlphaType) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::TooFewSamples("no samples to fit".into()));
    }
    let mid = samples[samples.len() / 2];
    let max_dev = |model: &dyn Fn(f64) -> f64| -> f64 {
        samples
            .iter()
            .fold(0.0f64, |acc, &(y, a)| acc.max((a - model(y)).abs()))
    };
    let res = match alpha_type {
        AlphaType::Alpha0I => samples.iter().fold(0.0f64, |acc, &(_, a)| acc.max(a.abs())),
        AlphaType::Alpha0II => {
            // 1/(y + c); use the largest-|alpha| sample if the middle one
            // sits on the zero crossing
            let anchor = if mid.1.abs() > 1e-12 {
                mid
            } else {
                *samples
                    .iter()
                    .max_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap())
                    .unwrap()
            };
            if anchor.1.abs() <= 1e-12 {
                return Ok(samples.iter().fold(0.0f64, |acc, &(_, a)| acc.max(a.abs())));
            }
            let c = 1.0 / anchor.1 - anchor.0;
            max_dev(&|y: f64| 1.0 / (y + c))
        }
        AlphaType::AlphaPlus => {
            let q = mu.sqrt();
            let c = (-mid.1 / q).atan() - q * mid.0;
            max_dev(&|y: f64| -q * (q * y + c).tan())
        }
        AlphaType::AlphaMinusI => {
            let q = (-mu).sqrt();
            let c = (mid.1 / q).atanh() - q * mid.0;
            max_dev(&|y: f64| q * (q * y + c).tanh())
        }
        AlphaType::AlphaMinusII => {
            let q = (-mu).sqrt();
            let c = (q / mid.1).atanh() - q * mid.0;
            max_dev(&|y: f64| q / (q * y + c).tanh())
        }
        AlphaType::AlphaMinusIII => {
            let q = (-mu).sqrt();
            let s = mid.1.signum();
            max_dev(&|_y: f64| s * q)
        }
    };
    Ok(res)
}

/// Default sample count: dense enough that the finite-difference
/// truncation in mu stays well under the 1e-4 constancy budget even on
/// the steep coth/tan windows.
pub const DEFAULT_ALPHA_SAMPLES: usize = 2001;

/// Full pipeline: sample alpha, recover mu, classify, fit.
pub fn characteristic_report(
    fam: &SurfaceFamily,
    locus: &LightlikeLocus,
    n: usize,
) -> Result<CharacteristicReport> {
    let samples = alpha_along_line(fam, locus, n)?;
    let (mu, mu_constancy_residual) = mu_from_alpha(&samples)?;
    let alpha_type = classify_alpha_type(&samples, mu)?;
    let closed_form_fit_residual = closed_form_fit(&samples, mu, alpha_type)?;
    Ok(CharacteristicReport {
        samples,
        mu,
        mu_constancy_residual,
        alpha_type,
        closed_form_fit_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::lightlike_locus_analytic;
    use crate::families::HyperbolaKind::TypeII;
    use crate::families::{ParabolaTriple, SurfaceFamily};

    fn line_of(fam: &SurfaceFamily) -> LightlikeLocus {
        lightlike_locus_analytic(fam)
            .unwrap()
            .into_iter()
            .find(|l| l.kind == LocusKind::StraightLine)
            .expect("family should have a straight lightlike line")
    }

    #[test]
    fn touching_profile_alpha_is_reciprocal_radius() {
        let fam = SurfaceFamily::euclidean_general(1.0, 2.0, None).unwrap();
        let locus = line_of(&fam);
        // locus spans r in [0.25, 2.5]; index 100 of 301 lands on r = 1
        let samples = alpha_along_line(&fam, &locus, 301).unwrap();
        assert_eq!(samples.len(), 301);
        assert!((samples[100].1 - 1.0).abs() < 1e-9, "alpha {}", samples[100].1);
        for (i, &(_, a)) in samples.iter().enumerate() {
            let r = 0.25 + 2.25 * i as f64 / 300.0;
            assert!((a - 1.0 / r).abs() < 1e-9);
        }
    }

    #[test]
    fn touching_profile_characteristic_is_alpha_plus_with_mu_a() {
        let fam = SurfaceFamily::euclidean_general(1.0, 2.0, None).unwrap();
        let rep = characteristic_report(&fam, &line_of(&fam), DEFAULT_ALPHA_SAMPLES).unwrap();
        assert!((rep.mu - 1.0).abs() < 1e-4, "mu {}", rep.mu);
        assert!(rep.mu_constancy_residual < 1e-4, "residual {}", rep.mu_constancy_residual);
        assert_eq!(rep.alpha_type, AlphaType::AlphaPlus);
        assert!(rep.closed_form_fit_residual < 1e-6, "fit {}", rep.closed_form_fit_residual);
    }

    #[test]
    fn singular_euclidean_alpha_is_constant_negative_root() {
        let fam = SurfaceFamily::euclidean_singular(1.0).unwrap();
        let rep = characteristic_report(&fam, &line_of(&fam), 601).unwrap();
        for &(_, a) in &rep.samples {
            assert!((a + 1.0).abs() < 1e-9, "alpha {a}");
        }
        assert!((rep.mu + 1.0).abs() < 1e-4);
        assert_eq!(rep.alpha_type, AlphaType::AlphaMinusIII);
        assert!(rep.closed_form_fit_residual < 1e-6);
    }

    #[test]
    fn hyperbola_line_alpha_hits_the_pinned_value() {
        let fam = SurfaceFamily::hyperbola_general(0.0, 1.0, 1.0, TypeII, None).unwrap();
        let locus = line_of(&fam);
        // span [0.25, 0.85]: index 10 of 25 lands on r = 0.5
        let samples = alpha_along_line(&fam, &locus, 25).unwrap();
        assert!((samples[10].1 - 2.0).abs() < 1e-9, "alpha {}", samples[10].1);
        let rep = characteristic_report(&fam, &locus, DEFAULT_ALPHA_SAMPLES).unwrap();
        assert!((rep.mu + 1.0).abs() < 1e-4, "mu {}", rep.mu);
        assert_eq!(rep.alpha_type, AlphaType::AlphaMinusII);
        assert!(rep.closed_form_fit_residual < 1e-6, "fit {}", rep.closed_form_fit_residual);
    }

    #[test]
    fn hyperbola_singular_characteristic_is_minus_c_cubed_over_b_squared() {
        let fam = SurfaceFamily::hyperbola_singular(0.0, 1.0, TypeII).unwrap();
        let rep = characteristic_report(&fam, &line_of(&fam), 601).unwrap();
        assert!((rep.mu + 1.0).abs() < 1e-4, "mu {}", rep.mu);
        assert_eq!(rep.alpha_type, AlphaType::AlphaMinusIII);
    }

    #[test]
    fn opposite_profile_splits_into_coth_and_tanh_branches() {
        // inner component: alpha = 1/r unbounded, coth branch
        let fam = SurfaceFamily::euclidean_general(1.0, -2.0, None).unwrap();
        let rep = characteristic_report(&fam, &line_of(&fam), DEFAULT_ALPHA_SAMPLES).unwrap();
        assert!((rep.mu + 1.0).abs() < 1e-4, "mu {}", rep.mu);
        assert_eq!(rep.alpha_type, AlphaType::AlphaMinusII);
        assert!(rep.closed_form_fit_residual < 1e-6, "fit {}", rep.closed_form_fit_residual);
        // outer component: alpha = -1/r inside the tanh bound
        let fam = SurfaceFamily::euclidean_general(1.0, -2.0, Some(2.0)).unwrap();
        let rep = characteristic_report(&fam, &line_of(&fam), DEFAULT_ALPHA_SAMPLES).unwrap();
        assert!((rep.mu + 1.0).abs() < 1e-4, "mu {}", rep.mu);
        assert_eq!(rep.alpha_type, AlphaType::AlphaMinusI);
        assert!(rep.closed_form_fit_residual < 1e-6, "fit {}", rep.closed_form_fit_residual);
    }

    #[test]
    fn parabolic_lines_match_the_quintic_mu_formula() {
        // gen-neg a=-1, b=0, p=0: mu = 2 a^5 / (a^2+b^2)^2 = -2, tanh branch
        let t = ParabolaTriple::gen_neg(-1.0, 0.0, 0.0, 0.0).unwrap();
        let fam = SurfaceFamily::parabola(t, None).unwrap();
        let rep = characteristic_report(&fam, &line_of(&fam), DEFAULT_ALPHA_SAMPLES).unwrap();
        assert!((rep.mu + 2.0).abs() < 1e-4, "mu {}", rep.mu);
        assert_eq!(rep.alpha_type, AlphaType::AlphaMinusI);
        assert!(rep.closed_form_fit_residual < 1e-6, "fit {}", rep.closed_form_fit_residual);
        // gen-pos a=2, b=1, p=0: mu = 2*32/25, tan branch
        let t = ParabolaTriple::gen_pos(2.0, 1.0, 0.0, 0.0).unwrap();
        let fam = SurfaceFamily::parabola(t, None).unwrap();
        let rep = characteristic_report(&fam, &line_of(&fam), DEFAULT_ALPHA_SAMPLES).unwrap();
        assert!((rep.mu - 2.56).abs() < 1e-4, "mu {}", rep.mu);
        assert_eq!(rep.alpha_type, AlphaType::AlphaPlus);
        assert!(rep.closed_form_fit_residual < 1e-6, "fit {}", rep.closed_form_fit_residual);
        // singular a=-2, b=0.5, p=0: constant alpha, mu = -2*32/(4.25)^2
        let t = ParabolaTriple::singular(-2.0, 0.5, 0.0).unwrap();
        let fam = SurfaceFamily::parabola(t, None).unwrap();
        let rep = characteristic_report(&fam, &line_of(&fam), 601).unwrap();
        let expect = 2.0 * (-2.0f64).powi(5) / (4.25f64 * 4.25);
        assert!((rep.mu - expect).abs() < 1e-4, "mu {} expect {expect}", rep.mu);
        assert_eq!(rep.alpha_type, AlphaType::AlphaMinusIII);
    }

    #[test]
    fn mu_requires_enough_monotone_samples() {
        let few = [(0.0, 1.0), (0.1, 1.1), (0.2, 1.2), (0.3, 1.3)];
        assert!(matches!(mu_from_alpha(&few), Err(Error::TooFewSamples(_))));
        let wiggle = [(0.0, 1.0), (0.2, 1.1), (0.1, 1.2), (0.3, 1.3), (0.4, 1.4)];
        assert!(matches!(mu_from_alpha(&wiggle), Err(Error::NonMonotoneY(_))));
    }

    #[test]
    fn constant_alpha_with_positive_mu_is_inconsistent() {
        let samples: Vec<(f64, f64)> = (0..9).map(|i| (i as f64 * 0.1, 1.0)).collect();
        assert!(matches!(
            classify_alpha_type(&samples, 1.0),
            Err(Error::Inconsistent(_))
        ));
        assert_eq!(
            classify_alpha_type(&samples, -1.0).unwrap(),
            AlphaType::AlphaMinusIII
        );
    }

    #[test]
    fn null_curves_are_rejected() {
        let fam = SurfaceFamily::euclidean_general(1.0, 0.0, None).unwrap();
        let loci = lightlike_locus_analytic(&fam).unwrap();
        let curve = loci
            .iter()
            .find(|l| l.kind == LocusKind::NullCurve)
            .expect("generic profile has null curves");
        assert!(matches!(
            alpha_along_line(&fam, curve, 33),
            Err(Error::NotALine(_))
        ));
    }

    #[test]
    fn mu_is_stable_under_locus_resampling() {
        let fam = SurfaceFamily::euclidean_general(1.0, 2.0, None).unwrap();
        let locus = line_of(&fam);
        let a = characteristic_report(&fam, &locus, 2001).unwrap();
        let b = characteristic_report(&fam, &locus, 1201).unwrap();
        assert!((a.mu - b.mu).abs() < 1e-6, "{} vs {}", a.mu, b.mu);
    }
}
