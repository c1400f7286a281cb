//! The six Riemann-type zero mean curvature surface families.
//!
//! Every family is foliated by circles (Euclidean, hyperbolic, or
//! parabolic) in parallel planes. The general spacelike-circle and
//! hyperbola families are given by profile integrals against
//! Delta(s) = sqrt(c4 s^4 + c2 s^2 + c0); the singular families and the
//! parabolic family are closed-form. Evaluation positions may need
//! quadrature, but all first and second partial derivatives are
//! closed-form, so curvature and causal-character work never integrates.
//!
//! Parameter conventions per family (p1, p2):
//!   EuclideanGeneral   (r, theta)   X = (Ia + r cos, r sin, I0)
//!   EuclideanSingular  (u, theta)   X = (u + cos/sqrt(a), sin/sqrt(a), u)
//!   HyperbolaGeneral   (r, theta)   X = (I0, Ia, Ib) + r * hyperbolic circle
//!   HyperbolaSingular  (u, theta)   X = (u/c)(c,a,b) + hyperbolic circle / sqrt(c)
//!   Parabola           (u, v)       X = (f+v, g+u+rv^2/2, g-u+rv^2/2)
//! with I0 = int 1/Delta, Ia = int a s^2/Delta, Ib = int b s^2/Delta,
//! all from the base point r0.

use crate::error::{Error, Result};
use crate::minkowski::Vector3L;
use crate::quad;
use std::f64::consts::PI;

/// Relative tolerance used for positions produced by `evaluate`.
pub const EVAL_TOL: f64 = 1e-12;

/// Default relative tolerance for `profile_integrals`.
pub const DEFAULT_INTEGRAL_TOL: f64 = 1e-10;

/// Open interval, possibly unbounded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Clip a requested closed window into the open interval, keeping a
    /// small interior margin away from singular endpoints.
    pub fn clip_window(&self, want_lo: f64, want_hi: f64) -> Option<(f64, f64)> {
        let margin = if self.width().is_finite() {
            0.01 * self.width().min(1.0)
        } else {
            0.01
        };
        let mut lo = if self.lo.is_finite() {
            want_lo.max(self.lo + margin)
        } else {
            want_lo
        };
        let mut hi = if self.hi.is_finite() {
            want_hi.min(self.hi - margin)
        } else {
            want_hi
        };
        if lo >= hi {
            // requested window misses the component, recenter inside it
            lo = if self.lo.is_finite() {
                self.lo + margin
            } else {
                self.hi - margin - (want_hi - want_lo)
            };
            hi = if self.hi.is_finite() {
                self.hi - margin
            } else {
                lo + (want_hi - want_lo)
            };
            if lo >= hi {
                return None;
            }
        }
        Some((lo, hi))
    }
}

/// Which hyperbolic rotation a hyperbola family uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HyperbolaKind {
    /// Circle (cosh, sinh): the foliating circles are timelike.
    TypeI,
    /// Circle (sinh, cosh): the foliating circles are spacelike.
    TypeII,
}

/// Data triple (r, f, g) defining a parabolic-circle surface.
///
/// The triple solves r' = 2r^2 + a, r^2 f' = b, b^2/r^3 + 4 r g' + g'' = 0
/// on each domain component; the branch tag records the sign of a.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParabolaTriple {
    /// a = 0, r = 1/(c - 2u). Requires b != 0 except for the rotational
    /// control fixture.
    GenZero { b: f64, c: f64, p: f64 },
    /// a > 0, r = sqrt(a/2) tan(sqrt(2a)(u + c)).
    GenPos { a: f64, b: f64, c: f64, p: f64 },
    /// a < 0, r = sqrt(-a/2) tanh(sqrt(-2a)(-u + c)).
    GenNeg { a: f64, b: f64, c: f64, p: f64 },
    /// a < 0, constant r = sqrt(-a/2).
    Singular { a: f64, b: f64, p: f64 },
}

/// Closed-form parabola data at one u, with enough derivatives for
/// second-order geometry.
#[derive(Debug, Clone, Copy)]
pub struct ParabolaData {
    pub r: f64,
    pub rp: f64,
    pub rpp: f64,
    pub f: f64,
    pub fp: f64,
    pub fpp: f64,
    pub g: f64,
    pub gp: f64,
    pub gpp: f64,
}

/// The (r, f, g, g') slice of [`ParabolaData`] exposed as the public
/// profile accessor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParabolaRfg {
    pub r: f64,
    pub f: f64,
    pub g: f64,
    pub g_prime: f64,
}

impl ParabolaTriple {
    pub fn gen_zero(b: f64, c: f64, p: f64) -> Result<Self> {
        if b == 0.0 || !b.is_finite() {
            return Err(Error::InvalidParams(
                "parabolic a=0 branch needs b != 0 (b = 0 degenerates to a rotational surface)"
                    .into(),
            ));
        }
        Ok(ParabolaTriple::GenZero { b, c, p })
    }

    pub fn gen_pos(a: f64, b: f64, c: f64, p: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::InvalidParams(format!(
                "tan branch needs a > 0, got a = {a}"
            )));
        }
        Ok(ParabolaTriple::GenPos { a, b, c, p })
    }

    pub fn gen_neg(a: f64, b: f64, c: f64, p: f64) -> Result<Self> {
        if !(a < 0.0) {
            return Err(Error::InvalidParams(format!(
                "tanh branch needs a < 0, got a = {a}"
            )));
        }
        Ok(ParabolaTriple::GenNeg { a, b, c, p })
    }

    pub fn singular(a: f64, b: f64, p: f64) -> Result<Self> {
        if !(a < 0.0) {
            return Err(Error::InvalidParams(format!(
                "constant-r branch needs a < 0, got a = {a}"
            )));
        }
        Ok(ParabolaTriple::Singular { a, b, p })
    }

    /// The rotational control triple r = -1/(2u), f = 0. It is excluded
    /// from the Riemann-type families precisely because it is rotational;
    /// `rotational_check` uses it as a positive control.
    pub fn rotational_fixture(p: f64) -> Self {
        ParabolaTriple::GenZero { b: 0.0, c: 0.0, p }
    }

    pub fn a(&self) -> f64 {
        match *self {
            ParabolaTriple::GenZero { .. } => 0.0,
            ParabolaTriple::GenPos { a, .. }
            | ParabolaTriple::GenNeg { a, .. }
            | ParabolaTriple::Singular { a, .. } => a,
        }
    }

    pub fn b(&self) -> f64 {
        match *self {
            ParabolaTriple::GenZero { b, .. }
            | ParabolaTriple::GenPos { b, .. }
            | ParabolaTriple::GenNeg { b, .. }
            | ParabolaTriple::Singular { b, .. } => b,
        }
    }

    pub fn p(&self) -> f64 {
        match *self {
            ParabolaTriple::GenZero { p, .. }
            | ParabolaTriple::GenPos { p, .. }
            | ParabolaTriple::GenNeg { p, .. }
            | ParabolaTriple::Singular { p, .. } => p,
        }
    }

    pub fn c(&self) -> Option<f64> {
        match *self {
            ParabolaTriple::GenZero { c, .. }
            | ParabolaTriple::GenPos { c, .. }
            | ParabolaTriple::GenNeg { c, .. } => Some(c),
            ParabolaTriple::Singular { .. } => None,
        }
    }

    /// Sorted breakpoints where the triple data blows up or r crosses 0.
    /// The tan branch is periodic; callers see breakpoints near `around`.
    fn breakpoints(&self, around: f64) -> Vec<f64> {
        match *self {
            ParabolaTriple::GenZero { c, .. } => vec![c / 2.0],
            ParabolaTriple::GenNeg { c, .. } => vec![c],
            ParabolaTriple::Singular { .. } => vec![],
            ParabolaTriple::GenPos { a, c, .. } => {
                let k = (2.0 * a).sqrt();
                let half = PI / (2.0 * k);
                let n0 = ((around + c) / half).floor() as i64;
                (n0 - 2..=n0 + 3).map(|n| n as f64 * half - c).collect()
            }
        }
    }

    fn default_base(&self) -> f64 {
        match *self {
            ParabolaTriple::GenZero { c, .. } => c / 2.0 - 0.5,
            ParabolaTriple::GenPos { a, c, .. } => PI / (4.0 * (2.0 * a).sqrt()) - c,
            ParabolaTriple::GenNeg { c, .. } => c - 1.0,
            ParabolaTriple::Singular { .. } => 0.0,
        }
    }

    /// u-range on the component of `base` where the radius stays inside
    /// [0.05, 3]. Where r blows up, grid coordinates explode and the
    /// relative lightlike band outgrows the bounded determinant, so
    /// default windows track the radius, matching the explicit r-window
    /// of the circle and hyperbola families. Negative-radius components
    /// and the constant-radius branch keep the plain (-3, 3) window.
    fn radius_window(&self, base: f64) -> (f64, f64) {
        const R_LO: f64 = 0.05;
        const R_HI: f64 = 3.0;
        match *self {
            // r = 1/(c - 2u) increases toward the breakpoint; keeping r
            // and 1/r below 3 avoids both the pole and the long flat
            // tail where the null curve sits far outside any bounded v
            ParabolaTriple::GenZero { c, .. } if base < c / 2.0 => {
                ((c - R_HI) / 2.0, (c - 1.0 / R_HI) / 2.0)
            }
            ParabolaTriple::GenPos { a, c, .. } => {
                let k = (2.0 * a).sqrt();
                let scale = (a / 2.0).sqrt();
                let half = PI / (2.0 * k);
                let n = ((base + c) / half).floor();
                let cell = n * half - c;
                let alo = (R_LO / scale).atan() / k;
                let ahi = (R_HI / scale).atan() / k;
                if (n as i64).rem_euclid(2) == 0 {
                    // |tan| rising through the cell
                    (cell + alo, cell + ahi)
                } else {
                    (cell + half - ahi, cell + half - alo)
                }
            }
            // r = sqrt(-a/2) tanh(k (c - u)) climbs to its bound going left
            ParabolaTriple::GenNeg { a, c, .. } if base < c => {
                let k = (-2.0 * a).sqrt();
                let rmax = (-a / 2.0).sqrt();
                let hi = c - (R_LO.min(0.9 * rmax) / rmax).atanh() / k;
                // past k(c - u) = 3 the tanh sits within half a percent
                // of its bound: the tail is flat and the saturated
                // profile loses the digits separating 2 r^2 from -a
                let mut s = 3.0 / k;
                if rmax > R_HI {
                    s = s.min((R_HI / rmax).atanh() / k);
                }
                (c - s, hi)
            }
            _ => (-3.0, 3.0),
        }
    }

    /// Evaluate the triple and its derivatives at u.
    pub fn data(&self, u: f64) -> Result<ParabolaData> {
        let out = match *self {
            ParabolaTriple::GenZero { b, c, p } => {
                let q = c - 2.0 * u;
                if q == 0.0 {
                    return Err(Error::OutOfDomain(format!("r pole at u = {u}")));
                }
                let r = 1.0 / q;
                let pu = b * b * (u * u - c * u) + p;
                ParabolaData {
                    r,
                    rp: 2.0 * r * r,
                    rpp: 8.0 * r * r * r,
                    f: b * u * (4.0 / 3.0 * u * u - 2.0 * c * u + c * c),
                    fp: b * q * q,
                    fpp: -4.0 * b * q,
                    g: 0.8 * b * b * u.powi(5) - 2.0 * b * b * c * u.powi(4)
                        + (5.0 * b * b * c * c + 4.0 * p) / 3.0 * u.powi(3)
                        - (b * b * c * c * c + 4.0 * p * c) / 2.0 * u * u
                        + p * c * c * u,
                    gp: pu * q * q,
                    gpp: b * b * (2.0 * u - c) * q * q - 4.0 * q * pu,
                }
            }
            ParabolaTriple::GenPos { a, b, c, p } => {
                let k = (2.0 * a).sqrt();
                let w = k * (u + c);
                let (sw, cw) = w.sin_cos();
                if sw == 0.0 || cw == 0.0 {
                    return Err(Error::OutOfDomain(format!("data pole at u = {u}")));
                }
                let t = sw / cw;
                let ct = 1.0 / t;
                let cw2 = cw * cw;
                let s2w = 2.0 * sw * cw;
                ParabolaData {
                    r: 0.5 * k * t,
                    rp: a * (1.0 + t * t),
                    rpp: 2.0 * a * k * t * (1.0 + t * t),
                    f: -2.0 * b / (a * k) * ct - 2.0 * b / a * (u + c),
                    fp: 2.0 * b / a * ct * ct,
                    fpp: -4.0 * b * k / a * ct * (1.0 + ct * ct),
                    g: -b * b / (a * a * k) * ct + p / (4.0 * k) * s2w
                        + (p / 2.0 - b * b / (a * a)) * (u + c),
                    gp: b * b / (a * a) * ct * ct + p * cw2,
                    gpp: -2.0 * k * b * b / (a * a) * ct * (1.0 + ct * ct) - p * k * s2w,
                }
            }
            ParabolaTriple::GenNeg { a, b, c, p } => {
                let m = (-2.0 * a).sqrt();
                let w = m * (c - u);
                if w == 0.0 {
                    return Err(Error::OutOfDomain(format!("r zero at u = {u}")));
                }
                let t = w.tanh();
                let h = 1.0 / t;
                let ch2 = w.cosh() * w.cosh();
                let s2w = (2.0 * w).sinh();
                ParabolaData {
                    r: 0.5 * m * t,
                    rp: a * (1.0 - t * t),
                    rpp: 2.0 * a * m * t * (1.0 - t * t),
                    f: -2.0 * b / (a * m) * h - 2.0 * b / a * (u + c),
                    fp: -2.0 * b / a * h * h,
                    fpp: -4.0 * b * m / a * h * (h * h - 1.0),
                    g: -b * b / (a * a * m) * h - p / (4.0 * m) * s2w
                        + (b * b / (a * a) - p / 2.0) * (c - u),
                    gp: -b * b / (a * a) * h * h + p * ch2,
                    gpp: -2.0 * m * b * b / (a * a) * h * (h * h - 1.0) - p * m * s2w,
                }
            }
            ParabolaTriple::Singular { a, b, p } => {
                let m = (-2.0 * a).sqrt();
                let e = p * (-2.0 * m * u).exp();
                ParabolaData {
                    r: 0.5 * m,
                    rp: 0.0,
                    rpp: 0.0,
                    f: -2.0 * b / a * u,
                    fp: -2.0 * b / a,
                    fpp: 0.0,
                    g: e - b * b / (a * a) * u,
                    gp: -2.0 * m * e - b * b / (a * a),
                    gpp: 4.0 * m * m * e,
                }
            }
        };
        Ok(out)
    }
}

/// Family tag plus parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilySpec {
    EuclideanGeneral { a: f64, b: f64 },
    EuclideanSingular { a: f64 },
    HyperbolaGeneral {
        a: f64,
        b: f64,
        delta: f64,
        kind: HyperbolaKind,
    },
    HyperbolaSingular { a: f64, b: f64, kind: HyperbolaKind },
    Parabola(ParabolaTriple),
}

/// Profile polynomial Delta^2(s) = c4 s^4 + c2 s^2 + c0 and its real
/// breakpoints, for the two integral families.
#[derive(Debug, Clone)]
struct Profile {
    c4: f64,
    c2: f64,
    c0: f64,
    /// Sorted s-roots of Delta^2 paired with a double-root flag.
    roots: Vec<(f64, bool)>,
    /// The s^2-root not at a given endpoint, for factored evaluation
    /// near simple roots. None when Delta^2 is linear in s^2.
    z_roots: Vec<f64>,
}

impl Profile {
    fn new(c4: f64, c2: f64, c0: f64) -> Profile {
        let mut z_roots = Vec::new();
        let mut double = false;
        if c4 == 0.0 {
            if c2 != 0.0 {
                z_roots.push(-c0 / c2);
            }
        } else {
            let disc = c2 * c2 - 4.0 * c4 * c0;
            let scale = (c2 * c2).max((4.0 * c4 * c0).abs()).max(1e-300);
            if disc.abs() <= 1e-12 * scale {
                z_roots.push(-c2 / (2.0 * c4));
                double = true;
            } else if disc > 0.0 {
                let q = -0.5 * (c2 + c2.signum() * disc.sqrt());
                let (z1, z2) = if c2 == 0.0 {
                    let root = (disc.sqrt()) / (2.0 * c4);
                    (root, -root)
                } else {
                    (q / c4, c0 / q)
                };
                z_roots.push(z1.min(z2));
                z_roots.push(z1.max(z2));
            }
        }
        let mut roots = Vec::new();
        for &z in &z_roots {
            if z > 0.0 {
                let s = z.sqrt();
                roots.push((-s, double));
                roots.push((s, double));
            }
        }
        roots.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        Profile {
            c4,
            c2,
            c0,
            roots,
            z_roots,
        }
    }

    fn delta2(&self, s: f64) -> f64 {
        let z = s * s;
        (self.c4 * z + self.c2) * z + self.c0
    }

    /// d(Delta^2)/ds / (2s) at radius s, i.e. 2 c4 s^2 + c2.
    fn half_slope(&self, s: f64) -> f64 {
        2.0 * self.c4 * s * s + self.c2
    }

    /// Positive components of Delta^2.
    fn components(&self) -> Vec<Interval> {
        let mut cuts = vec![f64::NEG_INFINITY];
        cuts.extend(self.roots.iter().map(|r| r.0));
        cuts.push(f64::INFINITY);
        let mut out = Vec::new();
        for w in cuts.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            if lo >= hi {
                continue;
            }
            let probe = if lo.is_infinite() && hi.is_infinite() {
                0.0
            } else if lo.is_infinite() {
                hi - 1.0
            } else if hi.is_infinite() {
                lo + 1.0
            } else {
                0.5 * (lo + hi)
            };
            if self.delta2(probe) > 0.0 {
                out.push(Interval { lo, hi });
            }
        }
        out
    }

    /// Delta^2(s) / (s^2 - z_e) for the simple s^2-root z_e, evaluated
    /// stably (no cancellation at s^2 -> z_e).
    fn cofactor(&self, z_e: f64, s: f64) -> f64 {
        if self.c4 == 0.0 {
            self.c2
        } else {
            let z_other = if self.z_roots.len() == 2 {
                if (self.z_roots[0] - z_e).abs() <= (self.z_roots[1] - z_e).abs() {
                    self.z_roots[1]
                } else {
                    self.z_roots[0]
                }
            } else {
                // single stored root only happens in the double case,
                // which never reaches the factored path
                self.z_roots[0]
            };
            self.c4 * (s * s - z_other)
        }
    }
}

/// A surface family instance with a fixed base point for the profile
/// integrals. Evaluation is pure, so values are Send + Sync.
#[derive(Debug, Clone)]
pub struct SurfaceFamily {
    spec: FamilySpec,
    base: f64,
    components: Vec<Interval>,
    comp: Interval,
    profile: Option<Profile>,
}

/// First and second partial derivatives of the parametrization.
#[derive(Debug, Clone, Copy)]
pub struct Partials {
    pub x1: Vector3L,
    pub x2: Vector3L,
    pub x11: Vector3L,
    pub x12: Vector3L,
    pub x22: Vector3L,
}

impl SurfaceFamily {
    pub fn euclidean_general(a: f64, b: f64, r0: Option<f64>) -> Result<Self> {
        if !(a > 0.0) || !b.is_finite() {
            return Err(Error::InvalidParams(format!(
                "spacelike-circle family needs a > 0 (mirror b for a < 0), got a = {a}"
            )));
        }
        let profile = Profile::new(a * a, b, 1.0);
        let base = r0.unwrap_or(0.0);
        Self::with_profile(FamilySpec::EuclideanGeneral { a, b }, profile, base)
    }

    pub fn euclidean_singular(a: f64) -> Result<Self> {
        if !(a > 0.0) {
            return Err(Error::InvalidParams(format!(
                "singular spacelike-circle family needs a > 0, got a = {a}"
            )));
        }
        let all = Interval {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        };
        Ok(SurfaceFamily {
            spec: FamilySpec::EuclideanSingular { a },
            base: 0.0,
            components: vec![all],
            comp: all,
            profile: None,
        })
    }

    pub fn hyperbola_general(
        a: f64,
        b: f64,
        delta: f64,
        kind: HyperbolaKind,
        r0: Option<f64>,
    ) -> Result<Self> {
        if (a == 0.0 && b == 0.0) || !a.is_finite() || !b.is_finite() || !delta.is_finite() {
            return Err(Error::InvalidParams(
                "hyperbola family needs (a, b) != (0, 0)".into(),
            ));
        }
        let profile = match kind {
            HyperbolaKind::TypeI => Profile::new(a * a - b * b, 2.0 * delta, -1.0),
            HyperbolaKind::TypeII => Profile::new(b * b - a * a, -2.0 * delta, 1.0),
        };
        let components = profile.components();
        let base = match r0 {
            Some(r) => r,
            None => {
                if components.iter().any(|c| c.contains(0.0)) {
                    0.0
                } else {
                    // first component on the positive axis
                    let comp = components
                        .iter()
                        .find(|c| c.hi > 0.0 && c.lo >= 0.0)
                        .or_else(|| components.iter().find(|c| c.hi > 0.0))
                        .ok_or_else(|| {
                            Error::InvalidParams("profile curve has empty domain".into())
                        })?;
                    if comp.hi.is_finite() {
                        0.5 * (comp.lo + comp.hi)
                    } else {
                        comp.lo + 1.0
                    }
                }
            }
        };
        Self::with_profile(FamilySpec::HyperbolaGeneral { a, b, delta, kind }, profile, base)
    }

    pub fn hyperbola_singular(a: f64, b: f64, kind: HyperbolaKind) -> Result<Self> {
        if !(b * b > a * a) {
            return Err(Error::InvalidParams(format!(
                "singular hyperbola family needs b^2 > a^2, got a = {a}, b = {b}"
            )));
        }
        let all = Interval {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        };
        Ok(SurfaceFamily {
            spec: FamilySpec::HyperbolaSingular { a, b, kind },
            base: 0.0,
            components: vec![all],
            comp: all,
            profile: None,
        })
    }

    pub fn parabola(triple: ParabolaTriple, u0: Option<f64>) -> Result<Self> {
        let base = u0.unwrap_or_else(|| triple.default_base());
        let breaks = triple.breakpoints(base);
        if breaks.iter().any(|&b| b == base) {
            return Err(Error::OutOfDomain(format!(
                "base point u0 = {base} sits on a data breakpoint"
            )));
        }
        let periodic = matches!(triple, ParabolaTriple::GenPos { .. });
        let mut cuts = Vec::new();
        if !periodic {
            cuts.push(f64::NEG_INFINITY);
        }
        cuts.extend(breaks.iter().copied());
        if !periodic {
            cuts.push(f64::INFINITY);
        }
        let components: Vec<Interval> = cuts
            .windows(2)
            .filter(|w| w[0] < w[1])
            .map(|w| Interval { lo: w[0], hi: w[1] })
            .collect();
        let comp = *components
            .iter()
            .find(|c| c.contains(base))
            .ok_or_else(|| Error::OutOfDomain(format!("u0 = {base} outside all components")))?;
        Ok(SurfaceFamily {
            spec: FamilySpec::Parabola(triple),
            base,
            components,
            comp,
            profile: None,
        })
    }

    fn with_profile(spec: FamilySpec, profile: Profile, base: f64) -> Result<Self> {
        let components = profile.components();
        let comp = *components.iter().find(|c| c.contains(base)).ok_or_else(|| {
            if components.is_empty() {
                Error::InvalidParams("profile curve has empty domain".into())
            } else {
                Error::OutOfDomain(format!("base point r0 = {base} has Delta^2 <= 0"))
            }
        })?;
        Ok(SurfaceFamily {
            spec,
            base,
            components,
            comp,
            profile: Some(profile),
        })
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    /// Base point of the profile integrals (r0 or u0).
    pub fn base(&self) -> f64 {
        self.base
    }

    /// Domain component of the base point.
    pub fn component(&self) -> Interval {
        self.comp
    }

    /// All domain components in p1. For the periodic tan branch this
    /// lists the base component and its neighbors within one period on
    /// each side; the full domain repeats them.
    pub fn maximal_domain(&self) -> &[Interval] {
        &self.components
    }

    pub fn kind_name(&self) -> &'static str {
        match &self.spec {
            FamilySpec::EuclideanGeneral { .. } => "euclidean-general",
            FamilySpec::EuclideanSingular { .. } => "euclidean-singular",
            FamilySpec::HyperbolaGeneral { kind, .. } => match kind {
                HyperbolaKind::TypeI => "hyperbola-i",
                HyperbolaKind::TypeII => "hyperbola-ii",
            },
            FamilySpec::HyperbolaSingular { kind, .. } => match kind {
                HyperbolaKind::TypeI => "hyperbola-singular-i",
                HyperbolaKind::TypeII => "hyperbola-singular-ii",
            },
            FamilySpec::Parabola(t) => match t {
                ParabolaTriple::GenZero { .. } => "parabola-gen-zero",
                ParabolaTriple::GenPos { .. } => "parabola-gen-pos",
                ParabolaTriple::GenNeg { .. } => "parabola-gen-neg",
                ParabolaTriple::Singular { .. } => "parabola-singular",
            },
        }
    }

    /// Names of (p1, p2) for report output.
    pub fn param_names(&self) -> (&'static str, &'static str) {
        match &self.spec {
            FamilySpec::EuclideanGeneral { .. } | FamilySpec::HyperbolaGeneral { .. } => {
                ("r", "theta")
            }
            FamilySpec::EuclideanSingular { .. } | FamilySpec::HyperbolaSingular { .. } => {
                ("u", "theta")
            }
            FamilySpec::Parabola(_) => ("u", "v"),
        }
    }

    /// Default compact sampling window (p1, then p2).
    pub fn default_window(&self) -> ((f64, f64), (f64, f64)) {
        let p2 = match &self.spec {
            FamilySpec::EuclideanGeneral { .. } | FamilySpec::EuclideanSingular { .. } => {
                (0.0, 2.0 * PI)
            }
            _ => (-3.0, 3.0),
        };
        let want = match &self.spec {
            FamilySpec::EuclideanGeneral { .. } | FamilySpec::HyperbolaGeneral { .. } => {
                (0.05, 3.0)
            }
            FamilySpec::Parabola(t) => t.radius_window(self.base),
            _ => (-3.0, 3.0),
        };
        let p1 = self
            .comp
            .clip_window(want.0, want.1)
            .expect("base component admits a window");
        (p1, p2)
    }

    fn profile(&self) -> Result<&Profile> {
        self.profile.as_ref().ok_or_else(|| {
            Error::InvalidParams(format!(
                "{} has no profile integrals (closed form family)",
                self.kind_name()
            ))
        })
    }

    /// Delta(s) on the profile families.
    pub fn profile_delta(&self, s: f64) -> Result<f64> {
        let p = self.profile()?;
        let d2 = p.delta2(s);
        if d2 <= 0.0 {
            return Err(Error::OutOfDomain(format!("Delta^2({s}) = {d2} <= 0")));
        }
        Ok(d2.sqrt())
    }

    /// Cumulative profile integrals (I0, Ia, Ib) from the base point to r.
    ///
    /// I0 = int 1/Delta, Ia = int a s^2/Delta, Ib = int b s^2/Delta.
    /// Both endpoints must lie in the base component. Near simple roots
    /// of Delta^2 at the component ends, integration switches to the
    /// substitution s = root -/+ w^2, which absorbs the 1/sqrt
    /// singularity exactly.
    pub fn profile_integrals(&self, r: f64, tol: f64) -> Result<(f64, f64, f64)> {
        let profile = self.profile()?;
        if !self.comp.contains(r) {
            return Err(Error::OutOfDomain(format!(
                "r = {r} outside base component ({}, {})",
                self.comp.lo, self.comp.hi
            )));
        }
        let (ca, cb) = match &self.spec {
            FamilySpec::EuclideanGeneral { a, b } => (*a, *b),
            FamilySpec::HyperbolaGeneral { a, b, .. } => (*a, *b),
            _ => unreachable!(),
        };
        let i0 = self.integrate_profile(profile, false, r, tol)?;
        let i1 = self.integrate_profile(profile, true, r, tol)?;
        Ok((i0, ca * i1, cb * i1))
    }

    /// Integrate s^num_pow / Delta(s) from base to r on the base component.
    fn integrate_profile(&self, p: &Profile, square: bool, r: f64, tol: f64) -> Result<f64> {
        let (x0, x1, sign) = if self.base <= r {
            (self.base, r, 1.0)
        } else {
            (r, self.base, -1.0)
        };
        let comp = self.comp;
        // zone boundaries where integration switches to the absorbing
        // substitution; only simple-root endpoints get a zone
        let root_info = |e: f64| -> Option<bool> {
            p.roots
                .iter()
                .find(|(s, _)| *s == e)
                .map(|(_, double)| *double)
        };
        let reach = if comp.width().is_finite() {
            (0.45 * comp.width()).min(1.0)
        } else {
            1.0
        };
        let zone_lo = match root_info(comp.lo) {
            Some(false) => comp.lo + reach,
            _ => f64::NEG_INFINITY,
        };
        let zone_hi = match root_info(comp.hi) {
            Some(false) => comp.hi - reach,
            _ => f64::INFINITY,
        };
        let plain = |s: f64| -> f64 {
            let d = p.delta2(s).max(0.0).sqrt();
            let num = if square { s * s } else { 1.0 };
            num / d
        };
        let mut total = 0.0;
        // piece below the lo zone boundary, substituted s = lo + w^2
        if x0 < zone_lo {
            let e = comp.lo;
            let z_e = e * e;
            let c1 = x1.min(zone_lo);
            let w0 = (x0 - e).sqrt();
            let w1 = (c1 - e).sqrt();
            let f = |w: f64| {
                let s = e + w * w;
                let n = (s + e) * p.cofactor(z_e, s);
                let num = if square { s * s } else { 1.0 };
                2.0 * num / n.sqrt()
            };
            total += quad::adaptive(&f, w0, w1, tol, 0.0)?;
        }
        // middle plain piece
        let mid0 = if zone_lo.is_finite() { x0.max(zone_lo) } else { x0 };
        let mid1 = if zone_hi.is_finite() { x1.min(zone_hi) } else { x1 };
        if mid0 < mid1 {
            total += quad::adaptive(&plain, mid0, mid1, tol, 0.0)?;
        }
        // piece above the hi zone boundary, substituted s = hi - w^2
        if x1 > zone_hi {
            let e = comp.hi;
            let z_e = e * e;
            let c0 = x0.max(zone_hi);
            let w0 = (e - x1).sqrt();
            let w1 = (e - c0).sqrt();
            let f = |w: f64| {
                let s = e - w * w;
                let n = -(s + e) * p.cofactor(z_e, s);
                let num = if square { s * s } else { 1.0 };
                2.0 * num / n.sqrt()
            };
            total += quad::adaptive(&f, w0, w1, tol, 0.0)?;
        }
        Ok(sign * total)
    }

    fn check_p1(&self, p1: f64) -> Result<()> {
        if self.comp.contains(p1) {
            Ok(())
        } else {
            Err(Error::OutOfDomain(format!(
                "p1 = {p1} outside base component ({}, {})",
                self.comp.lo, self.comp.hi
            )))
        }
    }

    /// Position in Lorentz-Minkowski space at parameters (p1, p2).
    pub fn evaluate(&self, p1: f64, p2: f64) -> Result<Vector3L> {
        self.check_p1(p1)?;
        match &self.spec {
            FamilySpec::EuclideanGeneral { .. } => {
                let (i0, ia, _) = self.profile_integrals(p1, EVAL_TOL)?;
                let (s, c) = p2.sin_cos();
                Ok(Vector3L::new(ia + p1 * c, p1 * s, i0))
            }
            FamilySpec::EuclideanSingular { a } => {
                let ra = a.sqrt().recip();
                let (s, c) = p2.sin_cos();
                Ok(Vector3L::new(p1 + ra * c, ra * s, p1))
            }
            FamilySpec::HyperbolaGeneral { kind, .. } => {
                let (i0, ia, ib) = self.profile_integrals(p1, EVAL_TOL)?;
                let (sh, ch) = (p2.sinh(), p2.cosh());
                Ok(match kind {
                    HyperbolaKind::TypeI => {
                        Vector3L::new(i0, ia + p1 * ch, ib + p1 * sh)
                    }
                    HyperbolaKind::TypeII => {
                        Vector3L::new(i0, ia + p1 * sh, ib + p1 * ch)
                    }
                })
            }
            FamilySpec::HyperbolaSingular { a, b, kind } => {
                let c = (b * b - a * a).sqrt();
                let rc = c.sqrt().recip();
                let (sh, ch) = (p2.sinh(), p2.cosh());
                let (ye, te) = match kind {
                    HyperbolaKind::TypeI => (ch, sh),
                    HyperbolaKind::TypeII => (sh, ch),
                };
                Ok(Vector3L::new(
                    p1,
                    a / c * p1 + rc * ye,
                    b / c * p1 + rc * te,
                ))
            }
            FamilySpec::Parabola(t) => {
                let d = t.data(p1)?;
                let bend = d.g + d.r * p2 * p2 / 2.0;
                Ok(Vector3L::new(d.f + p2, bend + p1, bend - p1))
            }
        }
    }

    /// Closed-form first and second partial derivatives at (p1, p2).
    /// No quadrature is involved.
    pub fn partials(&self, p1: f64, p2: f64) -> Result<Partials> {
        self.check_p1(p1)?;
        match &self.spec {
            FamilySpec::EuclideanGeneral { a, b } => {
                let p = self.profile()?;
                let r = p1;
                let d2 = p.delta2(r);
                let d = d2.sqrt();
                let d3 = d2 * d;
                let dd = r * p.half_slope(r); // Delta Delta' = 2 a^2 r^3 + b r
                let (s, c) = p2.sin_cos();
                Ok(Partials {
                    x1: Vector3L::new(a * r * r / d + c, s, 1.0 / d),
                    x2: Vector3L::new(-r * s, r * c, 0.0),
                    x11: Vector3L::new(a * r * (b * r * r + 2.0) / d3, 0.0, -dd / d3),
                    x12: Vector3L::new(-s, c, 0.0),
                    x22: Vector3L::new(-r * c, -r * s, 0.0),
                })
            }
            FamilySpec::EuclideanSingular { a } => {
                let ra = a.sqrt().recip();
                let (s, c) = p2.sin_cos();
                Ok(Partials {
                    x1: Vector3L::new(1.0, 0.0, 1.0),
                    x2: Vector3L::new(-ra * s, ra * c, 0.0),
                    x11: Vector3L::ZERO,
                    x12: Vector3L::ZERO,
                    x22: Vector3L::new(-ra * c, -ra * s, 0.0),
                })
            }
            FamilySpec::HyperbolaGeneral { a, b, kind, .. } => {
                let p = self.profile()?;
                let r = p1;
                let d2 = p.delta2(r);
                let d = d2.sqrt();
                let d3 = d2 * d;
                let dd = r * p.half_slope(r);
                // d/dr (k r^2 / Delta) = k r (c2 r^2 + 2 c0) / Delta^3
                let centre2 = |k: f64| k * r * (p.c2 * r * r + 2.0 * p.c0) / d3;
                let (sh, ch) = (p2.sinh(), p2.cosh());
                let (ye, te, yd, td) = match kind {
                    HyperbolaKind::TypeI => (ch, sh, sh, ch),
                    HyperbolaKind::TypeII => (sh, ch, ch, sh),
                };
                Ok(Partials {
                    x1: Vector3L::new(1.0 / d, a * r * r / d + ye, b * r * r / d + te),
                    x2: Vector3L::new(0.0, r * yd, r * td),
                    x11: Vector3L::new(-dd / d3, centre2(*a), centre2(*b)),
                    x12: Vector3L::new(0.0, yd, td),
                    x22: Vector3L::new(0.0, r * ye, r * te),
                })
            }
            FamilySpec::HyperbolaSingular { a, b, kind } => {
                let c = (b * b - a * a).sqrt();
                let rc = c.sqrt().recip();
                let (sh, ch) = (p2.sinh(), p2.cosh());
                let (ye, te, yd, td) = match kind {
                    HyperbolaKind::TypeI => (ch, sh, sh, ch),
                    HyperbolaKind::TypeII => (sh, ch, ch, sh),
                };
                Ok(Partials {
                    x1: Vector3L::new(1.0, a / c, b / c),
                    x2: Vector3L::new(0.0, rc * yd, rc * td),
                    x11: Vector3L::ZERO,
                    x12: Vector3L::ZERO,
                    x22: Vector3L::new(0.0, rc * ye, rc * te),
                })
            }
            FamilySpec::Parabola(t) => {
                let d = t.data(p1)?;
                let v = p2;
                Ok(Partials {
                    x1: Vector3L::new(
                        d.fp,
                        d.gp + 1.0 + d.rp * v * v / 2.0,
                        d.gp - 1.0 + d.rp * v * v / 2.0,
                    ),
                    x2: Vector3L::new(1.0, d.r * v, d.r * v),
                    x11: Vector3L::new(
                        d.fpp,
                        d.gpp + d.rpp * v * v / 2.0,
                        d.gpp + d.rpp * v * v / 2.0,
                    ),
                    x12: Vector3L::new(0.0, d.rp * v, d.rp * v),
                    x22: Vector3L::new(0.0, d.r, d.r),
                })
            }
        }
    }

    /// Public profile accessor for the parabolic family.
    pub fn parabola_rfg(triple: &ParabolaTriple, u: f64) -> Result<ParabolaRfg> {
        let d = triple.data(u)?;
        Ok(ParabolaRfg {
            r: d.r,
            f: d.f,
            g: d.g,
            g_prime: d.gp,
        })
    }

    /// Residual of the family's defining ODE system at p1 (max over the
    /// system's equations). Zero in exact arithmetic for every family.
    pub fn ode_residual(&self, p1: f64) -> Result<f64> {
        self.check_p1(p1)?;
        match &self.spec {
            FamilySpec::EuclideanGeneral { a, .. } => {
                let p = self.profile()?;
                let r = p1;
                let d2 = p.delta2(r);
                // along the arc parameter r' = Delta, r'' = Delta Delta'
                let rpp = r * p.half_slope(r);
                let res1 = (a * a * r.powi(4) - 1.0 - r * rpp + d2).abs();
                let d = d2.sqrt();
                let res2 = ((a * r * r / d) * d - a * r * r).abs();
                Ok(res1.max(res2))
            }
            FamilySpec::EuclideanSingular { a } => {
                let r2 = 1.0 / a;
                let res1 = (a * a * r2 * r2 - 1.0).abs();
                let res2 = (1.0 - a * r2).abs();
                Ok(res1.max(res2))
            }
            FamilySpec::HyperbolaGeneral { a, b, kind, .. } => {
                let p = self.profile()?;
                let r = p1;
                let d2 = p.delta2(r);
                let rpp = r * p.half_slope(r);
                let res1 = match kind {
                    HyperbolaKind::TypeI => {
                        (1.0 + (a * a - b * b) * r.powi(4) + d2 - r * rpp).abs()
                    }
                    HyperbolaKind::TypeII => {
                        (1.0 + (a * a - b * b) * r.powi(4) - d2 + r * rpp).abs()
                    }
                };
                let d = d2.sqrt();
                let res2 = ((a * r * r / d) * d - a * r * r).abs();
                let res3 = ((b * r * r / d) * d - b * r * r).abs();
                Ok(res1.max(res2).max(res3))
            }
            FamilySpec::HyperbolaSingular { a, b, kind } => {
                let c2 = b * b - a * a;
                let r2 = 1.0 / c2.sqrt();
                let quartic = (a * a - b * b) * r2 * r2;
                let res1 = match kind {
                    HyperbolaKind::TypeI | HyperbolaKind::TypeII => (1.0 + quartic).abs(),
                };
                let res2 = (a / c2.sqrt() - a * r2).abs();
                let res3 = (b / c2.sqrt() - b * r2).abs();
                Ok(res1.max(res2).max(res3))
            }
            FamilySpec::Parabola(t) => {
                let d = t.data(p1)?;
                let res1 = (d.rp - 2.0 * d.r * d.r - t.a()).abs();
                let res2 = (d.r * d.r * d.fp - t.b()).abs();
                let res3 = (t.b() * t.b() / d.r.powi(3) + 4.0 * d.r * d.gp + d.gpp).abs();
                Ok(res1.max(res2).max(res3))
            }
        }
    }
}
