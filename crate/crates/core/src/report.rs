//! JSON report shapes for the command-line front end.
//!
//! Field order is the struct declaration order, so repeated runs emit
//! byte-identical documents. Schemas for these shapes ship under
//! schema/ in the repository root.

use crate::characteristic::{AlphaType, CharacteristicReport};
use crate::classify::{
    lightlike_locus_analytic, mean_curvature_residual, rotational_check, ClassReport, GridSpec,
    LocusKind,
};
use crate::families::{FamilySpec, SurfaceFamily};
use crate::graph::{
    graph_zmc_residual, lightlike_curve_tangents, lightlike_curves, solve_height,
    EntireGraphParams, GraphFunction,
};
use crate::minkowski::{lorentz_dot, CausalCharacter, Vector3L};
use serde::Serialize;
use serde_json::Value;

/// One lightlike locus as reported by the classify command.
#[derive(Debug, Clone, Serialize)]
pub struct LocusJson {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<Vector3L>,
    pub straightness_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyJson {
    pub family: String,
    pub params: Value,
    pub predicted: Vec<CausalCharacter>,
    pub sampled: Vec<CausalCharacter>,
    pub agreement: bool,
    pub loci: Vec<LocusJson>,
    pub notes: String,
}

pub fn classify_json(report: &ClassReport, params: Value) -> ClassifyJson {
    let loci = report
        .lightlike_loci
        .iter()
        .map(|l| LocusJson {
            kind: match l.kind {
                LocusKind::StraightLine => "line",
                LocusKind::NullCurve => "curve",
            },
            direction: match l.kind {
                LocusKind::StraightLine => l.direction,
                LocusKind::NullCurve => None,
            },
            straightness_residual: l.straightness_residual,
        })
        .collect();
    ClassifyJson {
        family: report.family.clone(),
        params,
        predicted: report.predicted.clone(),
        sampled: report.sampled.clone(),
        agreement: report.agreement,
        loci,
        notes: report.notes.clone(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacteristicJson {
    pub mu: f64,
    pub mu_residual: f64,
    pub alpha_type: AlphaType,
    pub closed_form_residual: f64,
    /// [y, alpha] pairs in the normalized frame.
    pub samples: Vec<(f64, f64)>,
}

pub fn characteristic_json(report: &CharacteristicReport) -> CharacteristicJson {
    CharacteristicJson {
        mu: report.mu,
        mu_residual: report.mu_constancy_residual,
        alpha_type: report.alpha_type,
        closed_form_residual: report.closed_form_fit_residual,
        samples: report.samples.clone(),
    }
}

/// One residual sweep inside a verify run.
#[derive(Debug, Clone, Serialize)]
pub struct CheckJson {
    pub name: &'static str,
    pub max_residual: f64,
    pub tolerance: f64,
    pub points: usize,
    pub pass: bool,
}

impl CheckJson {
    fn below(name: &'static str, max_residual: f64, tolerance: f64, points: usize) -> CheckJson {
        CheckJson {
            name,
            max_residual,
            tolerance,
            points,
            pass: points > 0 && max_residual < tolerance,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyJson {
    pub family: String,
    pub params: Value,
    pub checks: Vec<CheckJson>,
    /// Parabolic families: whether the triple generates a null-rotation
    /// orbit surface. Informational, does not gate `pass`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rotational: Option<bool>,
    /// Entire graph: whether every probed point admits a straight ruling.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ruled: Option<bool>,
    /// Entire graph: the positive control for the ruledness test.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub helicoid_ruled: Option<bool>,
    pub pass: bool,
}

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Residual sweep for one surface family: mean curvature over the grid,
/// the defining ODE system along p1, and the analytic lightlike loci.
/// `zmc_tol` overrides the default 1e-6 mean curvature gate.
pub fn verify_family(
    fam: &SurfaceFamily,
    grid: &GridSpec,
    params: Value,
    zmc_tol: Option<f64>,
) -> VerifyJson {
    let mut checks = Vec::new();

    let mut max_zmc = 0.0f64;
    let mut n_zmc = 0usize;
    for i in 0..grid.p1.count {
        for j in 0..grid.p2.count {
            // skip band and out-of-domain points; they carry no residual
            if let Ok(r) = mean_curvature_residual(fam, grid.p1.value(i), grid.p2.value(j)) {
                max_zmc = max_zmc.max(r);
                n_zmc += 1;
            }
        }
    }
    checks.push(CheckJson::below(
        "zmc_residual",
        max_zmc,
        zmc_tol.unwrap_or(1e-6),
        n_zmc,
    ));

    let mut max_ode = 0.0f64;
    let mut n_ode = 0usize;
    for k in 0..100 {
        let s = (k as f64 * GOLDEN).fract();
        let p1 = grid.p1.lo + (grid.p1.hi - grid.p1.lo) * s;
        if let Ok(r) = fam.ode_residual(p1) {
            max_ode = max_ode.max(r);
            n_ode += 1;
        }
    }
    checks.push(CheckJson::below("ode_residual", max_ode, 1e-8, n_ode));

    if let Ok(loci) = lightlike_locus_analytic(fam) {
        let lines: Vec<_> = loci
            .iter()
            .filter(|l| l.kind == LocusKind::StraightLine)
            .collect();
        if !lines.is_empty() {
            let straight = lines
                .iter()
                .map(|l| l.straightness_residual)
                .fold(0.0f64, f64::max);
            let null = lines
                .iter()
                .map(|l| l.tangent_null_residual)
                .fold(0.0f64, f64::max);
            checks.push(CheckJson::below(
                "line_straightness_residual",
                straight,
                1e-8,
                lines.len(),
            ));
            checks.push(CheckJson::below(
                "line_null_tangent_residual",
                null,
                1e-8,
                lines.len(),
            ));
        }
    }

    let rotational = match fam.spec() {
        FamilySpec::Parabola(t) => rotational_check(t, 33).ok().map(|(is_rot, _)| is_rot),
        _ => None,
    };

    let pass = checks.iter().all(|c| c.pass);
    VerifyJson {
        family: fam.kind_name().to_string(),
        params,
        checks,
        rotational,
        ruled: None,
        helicoid_ruled: None,
        pass,
    }
}

/// Residual sweep for the entire graph: height round trip, graph ZMC
/// residual, the two lightlike curves, plus the ruledness probes with
/// the helicoid as positive control.
pub fn verify_graph(
    g: &EntireGraphParams,
    grid: &GridSpec,
    params: Value,
    zmc_tol: Option<f64>,
) -> VerifyJson {
    let mut checks = Vec::new();
    let entire = GraphFunction::entire(*g, 1e-15);

    let mut max_rt = 0.0f64;
    let mut max_zmc = 0.0f64;
    let n = grid.p1.count * grid.p2.count;
    for i in 0..grid.p1.count {
        for j in 0..grid.p2.count {
            let (u, v) = (grid.p1.value(i), grid.p2.value(j));
            let pt = crate::graph::eval_graph_param(g, u, v);
            let t = solve_height(g, pt.x, pt.y, 1e-15).expect("monotone profile");
            max_rt = max_rt.max((t - pt.t).abs());
            max_zmc = max_zmc.max(graph_zmc_residual(&entire, pt.x, pt.y));
        }
    }
    checks.push(CheckJson::below("height_round_trip", max_rt, 1e-10, n));
    checks.push(CheckJson::below(
        "graph_zmc_residual",
        max_zmc,
        zmc_tol.unwrap_or(1e-5),
        n,
    ));

    let mut max_null = 0.0f64;
    let mut max_on = 0.0f64;
    for i in 0..grid.p1.count {
        let u = grid.p1.value(i);
        let (dp, dm) = lightlike_curve_tangents(g, u);
        max_null = max_null.max(lorentz_dot(dp, dp).abs());
        max_null = max_null.max(lorentz_dot(dm, dm).abs());
        let (cp, cm) = lightlike_curves(g, u);
        for c in [cp, cm] {
            let t = solve_height(g, c.x, c.y, 1e-15).expect("monotone profile");
            max_on = max_on.max((t - c.t).abs());
        }
    }
    checks.push(CheckJson::below(
        "lightlike_curve_null_residual",
        max_null,
        1e-8,
        grid.p1.count,
    ));
    checks.push(CheckJson::below(
        "lightlike_curve_on_surface",
        max_on,
        1e-8,
        grid.p1.count,
    ));

    // ruledness probes straddle the lightlike band, where curvature is
    // strongest; far out the graph flattens toward a parabolic cylinder
    let m = g.m();
    let mut probes = Vec::new();
    for u in [0.0, 0.4, 0.8] {
        let e = g.p() * (-2.0 * m * u).exp();
        let v_star = (-8.0 * e / m).sqrt();
        for v in [0.6 * v_star, -1.3 * v_star] {
            let pt = crate::graph::eval_graph_param(g, u, v);
            probes.push((pt.x, pt.y));
        }
    }
    let ruled = crate::graph::ruled_line_test(&entire, &probes, 1.0)
        .map(|devs| devs.iter().all(|d| *d < 1e-8))
        .unwrap_or(false);

    let heli = GraphFunction::helicoid();
    let heli_points = [(1.0, 1.0), (0.5, -0.5), (2.0, 0.3)];
    let helicoid_ruled = crate::graph::ruled_line_test(&heli, &heli_points, 1.0)
        .map(|devs| devs.iter().all(|d| *d < 1e-8))
        .unwrap_or(false);
    let mut max_control = 0.0f64;
    for (x, y) in [(1.0, 1.0), (0.3, 0.7), (-0.8, 0.2)] {
        max_control = max_control.max(graph_zmc_residual(&heli, x, y));
        max_control = max_control.max(graph_zmc_residual(&GraphFunction::scherk(), x, y));
    }
    checks.push(CheckJson::below(
        "control_graph_zmc_residual",
        max_control,
        1e-8,
        6,
    ));

    let pass = checks.iter().all(|c| c.pass);
    VerifyJson {
        family: "entire_graph".to_string(),
        params,
        checks,
        rotational: None,
        ruled: Some(ruled),
        helicoid_ruled: Some(helicoid_ruled),
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::sample_class;

    #[test]
    fn classify_json_reduces_loci_and_keeps_flags() {
        let fam = SurfaceFamily::euclidean_general(1.0, 2.0, None).unwrap();
        let grid = GridSpec::default_for(&fam);
        let mut report = sample_class(&fam, &grid).unwrap();
        report.lightlike_loci = lightlike_locus_analytic(&fam).unwrap();
        let json = classify_json(&report, serde_json::json!({"a": 1.0, "b": 2.0}));
        assert!(json.agreement);
        assert_eq!(json.loci.len(), 1);
        assert_eq!(json.loci[0].kind, "line");
        assert!(json.loci[0].direction.is_some());
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.starts_with("{\"family\""));
        assert!(text.contains("\"predicted\":[\"spacelike\",\"lightlike\"]"));
    }

    #[test]
    fn characteristic_json_round_trips_the_fields() {
        let rep = CharacteristicReport {
            samples: vec![(0.1, 1.0), (0.2, 0.9)],
            mu: -1.0,
            mu_constancy_residual: 1e-7,
            alpha_type: AlphaType::AlphaMinusII,
            closed_form_fit_residual: 1e-9,
        };
        let json = characteristic_json(&rep);
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.contains("\"mu\":-1.0"));
        assert!(text.contains("\"alpha_type\":\"alpha_minus_II\""));
        assert!(text.contains("\"samples\":[[0.1,1.0],[0.2,0.9]]"));
    }

    #[test]
    fn verify_family_passes_on_default_grids() {
        let cases = [
            SurfaceFamily::euclidean_general(1.0, 2.0, None).unwrap(),
            SurfaceFamily::euclidean_singular(2.0).unwrap(),
            SurfaceFamily::parabola(
                crate::families::ParabolaTriple::gen_neg(-1.0, 0.0, 0.0, 0.0).unwrap(),
                None,
            )
            .unwrap(),
        ];
        for fam in &cases {
            let grid = GridSpec::default_for(fam);
            let v = verify_family(fam, &grid, Value::Null, None);
            assert!(v.pass, "{}: {:?}", fam.kind_name(), v.checks);
            assert!(v.checks.iter().any(|c| c.name == "zmc_residual"));
        }
    }

    #[test]
    fn verify_graph_reports_non_ruled_with_ruled_control() {
        let g = EntireGraphParams::new(-2.0, -1.0).unwrap();
        let grid = GridSpec {
            p1: crate::classify::RangeSpec::new(-1.0, 1.0, 9).unwrap(),
            p2: crate::classify::RangeSpec::new(-2.0, 2.0, 9).unwrap(),
        };
        let v = verify_graph(&g, &grid, Value::Null, None);
        assert!(v.pass, "{:?}", v.checks);
        assert_eq!(v.ruled, Some(false));
        assert_eq!(v.helicoid_ruled, Some(true));
    }
}
