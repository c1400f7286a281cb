//! A zero-mean-curvature entire graph over the full (x, y) plane.
//!
//! The surface X(u,v) = (v, p e^{-2mu} + u + (m/4) v^2 ... ) with
//! m = sqrt(-2a) projects bijectively to the x-y plane: x = v is free
//! and phi(u) = p e^{-2mu} + u is strictly increasing for p < 0, so the
//! height t(x, y) solves by bracketed bisection. The graph carries all
//! three causal characters, split by two disjoint lightlike curves, and
//! is not ruled (checked numerically; the helicoid of the second kind
//! serves as the ruled positive control).

use crate::error::{Error, Result};
use crate::minkowski::Vector3L;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntireGraphParams {
    a: f64,
    p: f64,
}

impl EntireGraphParams {
    pub fn new(a: f64, p: f64) -> Result<Self> {
        if !(a < 0.0) || !(p < 0.0) || !a.is_finite() || !p.is_finite() {
            return Err(Error::InvalidParams(format!(
                "entire graph needs a < 0 and p < 0, got a = {a}, p = {p}"
            )));
        }
        Ok(EntireGraphParams { a, p })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// m = sqrt(-2a); the exponential rate of the profile.
    pub fn m(&self) -> f64 {
        (-2.0 * self.a).sqrt()
    }

    /// Coefficient of v^2/2 in the height slots: sqrt(-a/2) = m/2.
    pub fn bend(&self) -> f64 {
        0.5 * self.m()
    }
}

/// X(u, v) = (v, E + u + q v^2/2, E - u + q v^2/2) with
/// E = p e^{-2mu}, q = sqrt(-a/2). Entire: defined for all (u, v).
pub fn eval_graph_param(g: &EntireGraphParams, u: f64, v: f64) -> Vector3L {
    let e = g.p * (-2.0 * g.m() * u).exp();
    let bend = 0.5 * g.bend() * v * v;
    Vector3L::new(v, e + u + bend, e - u + bend)
}

/// Solves t(x, y) on the graph: finds the unique u* with
/// phi(u*) = p e^{-2mu*} + u* = y - q x^2/2, then reads off t.
///
/// phi' = 1 - 2mp e^{-2mu} > 1 for p < 0, so a sign-changing bracket
/// always exists; it is found by doubling from [-1, 1].
pub fn solve_height(g: &EntireGraphParams, x: f64, y: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParams(format!("tol must be positive, got {tol}")));
    }
    let m = g.m();
    let q = g.bend();
    let target = y - 0.5 * q * x * x;
    let phi = |u: f64| g.p * (-2.0 * m * u).exp() + u;
    let (mut lo, mut hi) = (-1.0, 1.0);
    let mut doublings = 0;
    while phi(lo) > target {
        lo *= 2.0;
        doublings += 1;
        if doublings > 1000 {
            return Err(Error::BracketFailure(format!(
                "no lower bracket for target {target}"
            )));
        }
    }
    while phi(hi) < target {
        hi *= 2.0;
        doublings += 1;
        if doublings > 1000 {
            return Err(Error::BracketFailure(format!(
                "no upper bracket for target {target}"
            )));
        }
    }
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..200 {
        mid = 0.5 * (lo + hi);
        let val = phi(mid);
        if (val - target).abs() < tol || hi - lo <= f64::EPSILON * (1.0 + mid.abs()) {
            break;
        }
        if val < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let e = g.p * (-2.0 * m * mid).exp();
    Ok(e - mid + 0.5 * q * x * x)
}

/// The two disjoint lightlike curves on the graph, evaluated at u.
/// Both have exactly null tangents; they differ only in the sign of
/// the x slot, which never vanishes.
pub fn lightlike_curves(g: &EntireGraphParams, u: f64) -> (Vector3L, Vector3L) {
    let m = g.m();
    let e = g.p * (-2.0 * m * u).exp();
    let xslot = (-8.0 * e / m).sqrt();
    let plus = Vector3L::new(xslot, -e + u, -e - u);
    let minus = Vector3L::new(-xslot, -e + u, -e - u);
    (plus, minus)
}

/// Analytic partials of the parametrization:
/// X_u = (0, E' + 1, E' - 1) with E' = -2mE, X_v = (1, qv, qv).
/// det = EG - F^2 = 4(E' - q^2 v^2) vanishes exactly on the two
/// lightlike curves v^2 = -8E/m.
pub fn graph_param_partials(g: &EntireGraphParams, u: f64, v: f64) -> (Vector3L, Vector3L) {
    let m = g.m();
    let e = g.p * (-2.0 * m * u).exp();
    let de = -2.0 * m * e;
    let q = g.bend();
    (
        Vector3L::new(0.0, de + 1.0, de - 1.0),
        Vector3L::new(1.0, q * v, q * v),
    )
}

/// Analytic tangents of the two lightlike curves at u; both are null:
/// <c', c'> = m^2 x^2 - 8mE = -8mE + 8mE = 0.
pub fn lightlike_curve_tangents(g: &EntireGraphParams, u: f64) -> (Vector3L, Vector3L) {
    let m = g.m();
    let e = g.p * (-2.0 * m * u).exp();
    let xslot = (-8.0 * e / m).sqrt();
    let de = -2.0 * m * e;
    let plus = Vector3L::new(-m * xslot, -de + 1.0, -de - 1.0);
    let minus = Vector3L::new(m * xslot, -de + 1.0, -de - 1.0);
    (plus, minus)
}

/// A height function t = f(x, y) over the whole plane, with optional
/// analytic partials. Without them, the jet falls back to central
/// differences with h = 1e-4.
pub struct GraphFunction {
    eval: Box<dyn Fn(f64, f64) -> f64 + Send + Sync>,
    grad: Option<Box<dyn Fn(f64, f64) -> (f64, f64) + Send + Sync>>,
    hess: Option<Box<dyn Fn(f64, f64) -> (f64, f64, f64) + Send + Sync>>,
}

/// Value and first/second partials of a graph function at a point.
#[derive(Debug, Clone, Copy)]
pub struct GraphJet {
    pub f: f64,
    pub fx: f64,
    pub fy: f64,
    pub fxx: f64,
    pub fxy: f64,
    pub fyy: f64,
}

const FD_STEP: f64 = 1e-4;

impl GraphFunction {
    pub fn from_fn(f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        GraphFunction { eval: Box::new(f), grad: None, hess: None }
    }

    pub fn with_partials(
        f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        grad: impl Fn(f64, f64) -> (f64, f64) + Send + Sync + 'static,
        hess: impl Fn(f64, f64) -> (f64, f64, f64) + Send + Sync + 'static,
    ) -> Self {
        GraphFunction {
            eval: Box::new(f),
            grad: Some(Box::new(grad)),
            hess: Some(Box::new(hess)),
        }
    }

    /// The entire-graph height function backed by the bisection solver.
    pub fn entire(g: EntireGraphParams, tol: f64) -> Self {
        GraphFunction::from_fn(move |x, y| {
            solve_height(&g, x, y, tol).expect("entire graph height solve cannot fail")
        })
    }

    /// Helicoid of the second kind, f = x tanh y: the ruled control.
    pub fn helicoid() -> Self {
        GraphFunction::with_partials(
            |x, y| x * y.tanh(),
            |x, y| {
                let s = y.cosh().recip();
                (y.tanh(), x * s * s)
            },
            |x, y| {
                let s = y.cosh().recip();
                (0.0, s * s, -2.0 * x * s * s * y.tanh())
            },
        )
    }

    /// Scherk-type graph, f = log cosh x - log cosh y.
    pub fn scherk() -> Self {
        GraphFunction::with_partials(
            |x, y| x.cosh().ln() - y.cosh().ln(),
            |x, y| (x.tanh(), -y.tanh()),
            |x, y| {
                let sx = x.cosh().recip();
                let sy = y.cosh().recip();
                (sx * sx, 0.0, -sy * sy)
            },
        )
    }

    pub fn value(&self, x: f64, y: f64) -> f64 {
        (self.eval)(x, y)
    }

    pub fn jet(&self, x: f64, y: f64) -> GraphJet {
        let f = (self.eval)(x, y);
        let (fx, fy) = match &self.grad {
            Some(g) => g(x, y),
            None => {
                let h = FD_STEP;
                (
                    ((self.eval)(x + h, y) - (self.eval)(x - h, y)) / (2.0 * h),
                    ((self.eval)(x, y + h) - (self.eval)(x, y - h)) / (2.0 * h),
                )
            }
        };
        let (fxx, fxy, fyy) = match &self.hess {
            Some(hs) => hs(x, y),
            None => {
                let h = FD_STEP;
                let e = &self.eval;
                (
                    (e(x + h, y) - 2.0 * f + e(x - h, y)) / (h * h),
                    (e(x + h, y + h) - e(x + h, y - h) - e(x - h, y + h) + e(x - h, y - h))
                        / (4.0 * h * h),
                    (e(x, y + h) - 2.0 * f + e(x, y - h)) / (h * h),
                )
            }
        };
        GraphJet { f, fx, fy, fxx, fxy, fyy }
    }
}

/// Divergence-form zero-mean-curvature residual of a graph:
/// |(1 - f_y^2) f_xx + 2 f_x f_y f_xy + (1 - f_x^2) f_yy|.
pub fn graph_zmc_residual(f: &GraphFunction, x: f64, y: f64) -> f64 {
    let j = f.jet(x, y);
    ((1.0 - j.fy * j.fy) * j.fxx + 2.0 * j.fx * j.fy * j.fxy + (1.0 - j.fx * j.fx) * j.fyy).abs()
}

/// Causal indicator of a graph point: 1 - f_x^2 - f_y^2
/// (positive spacelike, negative timelike, zero lightlike).
pub fn graph_causal_indicator(f: &GraphFunction, x: f64, y: f64) -> f64 {
    let j = f.jet(x, y);
    1.0 - j.fx * j.fx - j.fy * j.fy
}

/// Candidate ruling directions in the (dx, dy) parameter plane: the
/// null directions of fxx dx^2 + 2 fxy dxdy + fyy dy^2 when the form is
/// indefinite or degenerate, otherwise none (caller falls back).
fn asymptotic_directions(j: &GraphJet) -> Vec<(f64, f64)> {
    let disc = j.fxy * j.fxy - j.fxx * j.fyy;
    if disc < 0.0 {
        return vec![];
    }
    let root = disc.sqrt();
    let mut dirs = Vec::new();
    // solve in the better-conditioned slope variable
    if j.fxx.abs() >= j.fyy.abs() && j.fxx.abs() > 1e-300 {
        // fxx s^2 + 2 fxy s + fyy = 0 with s = dx/dy ... use dy/dx form:
        for sign in [1.0, -1.0] {
            let s = (-j.fxy + sign * root) / j.fxx;
            let n = s.hypot(1.0);
            dirs.push((s / n, 1.0 / n));
        }
    } else if j.fyy.abs() > 1e-300 {
        for sign in [1.0, -1.0] {
            let s = (-j.fxy + sign * root) / j.fyy;
            let n = s.hypot(1.0);
            dirs.push((1.0 / n, s / n));
        }
    } else if j.fxy.abs() > 1e-300 {
        // pure cross term: the axes are the null directions
        dirs.push((1.0, 0.0));
        dirs.push((0.0, 1.0));
    } else {
        // flat point: every direction is asymptotic; let caller sample
        return vec![];
    }
    dirs.dedup_by(|a, b| (a.0 - b.0).abs() + (a.1 - b.1).abs() < 1e-12);
    dirs
}

/// Straight-line deviation test at each point: how far the graph bends
/// away from its tangent line along the best candidate direction.
///
/// Returns, per point, the minimum over candidate directions of the
/// maximum |f(x + s dx, y + s dy) - (t0 + s dt)| for s in
/// [-half_length, half_length]. A value below 1e-8 means a ruling line
/// lies on the surface to numerical accuracy.
pub fn ruled_line_test(
    f: &GraphFunction,
    points: &[(f64, f64)],
    half_length: f64,
) -> Result<Vec<f64>> {
    if !(half_length > 0.0) {
        return Err(Error::InvalidParams(format!(
            "half_length must be positive, got {half_length}"
        )));
    }
    const SEGMENT_SAMPLES: usize = 41;
    const FALLBACK_DIRECTIONS: usize = 36;
    let mut out = Vec::with_capacity(points.len());
    for &(x, y) in points {
        let j = f.jet(x, y);
        let mut dirs = asymptotic_directions(&j);
        if dirs.is_empty() {
            for k in 0..FALLBACK_DIRECTIONS {
                let ang = std::f64::consts::PI * k as f64 / FALLBACK_DIRECTIONS as f64;
                dirs.push((ang.cos(), ang.sin()));
            }
        }
        let mut best = f64::INFINITY;
        for (dx, dy) in dirs {
            let dt = j.fx * dx + j.fy * dy;
            let mut worst: f64 = 0.0;
            for i in 0..SEGMENT_SAMPLES {
                let s = half_length * (2.0 * i as f64 / (SEGMENT_SAMPLES - 1) as f64 - 1.0);
                let dev = (f.value(x + s * dx, y + s * dy) - (j.f + s * dt)).abs();
                worst = worst.max(dev);
            }
            best = best.min(worst);
        }
        out.push(best);
    }
    Ok(out)
}
