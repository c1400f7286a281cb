//! Lorentz-Minkowski 3-space primitives.
//!
//! The ambient space is R^3 with coordinates (x, y, t) and the metric
//! dx^2 + dy^2 - dt^2 (signature +,+,-). Everything downstream (surface
//! families, causal classification, characteristic extraction) is built
//! on the vector algebra in this module.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

/// Point or vector in Lorentz-Minkowski 3-space, components (x, y, t).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vector3L {
    pub x: f64,
    pub y: f64,
    pub t: f64,
}

impl Vector3L {
    pub const fn new(x: f64, y: f64, t: f64) -> Self {
        Vector3L { x, y, t }
    }

    pub const ZERO: Vector3L = Vector3L::new(0.0, 0.0, 0.0);

    /// Euclidean norm squared, used only for scale-relative tolerances.
    pub fn euclid_norm_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.t * self.t
    }

    pub fn euclid_norm(&self) -> f64 {
        self.euclid_norm_sq().sqrt()
    }

    pub fn scale(&self, k: f64) -> Self {
        Vector3L::new(self.x * k, self.y * k, self.t * k)
    }
}

impl Add for Vector3L {
    type Output = Vector3L;
    fn add(self, o: Vector3L) -> Vector3L {
        Vector3L::new(self.x + o.x, self.y + o.y, self.t + o.t)
    }
}

impl Sub for Vector3L {
    type Output = Vector3L;
    fn sub(self, o: Vector3L) -> Vector3L {
        Vector3L::new(self.x - o.x, self.y - o.y, self.t - o.t)
    }
}

impl Mul<f64> for Vector3L {
    type Output = Vector3L;
    fn mul(self, k: f64) -> Vector3L {
        self.scale(k)
    }
}

impl Neg for Vector3L {
    type Output = Vector3L;
    fn neg(self) -> Vector3L {
        self.scale(-1.0)
    }
}

/// Lorentzian inner product <u,v> = ux vx + uy vy - ut vt.
pub fn lorentz_dot(u: Vector3L, v: Vector3L) -> f64 {
    u.x * v.x + u.y * v.y - u.t * v.t
}

/// Causal character of a tangent vector.
///
/// The zero vector counts as spacelike, matching the convention that a
/// vector is spacelike when <v,v> > 0 or v = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CausalCharacter {
    Spacelike,
    Timelike,
    Lightlike,
}

impl CausalCharacter {
    /// Single-letter code used in CSV output (S/T/L).
    pub fn code(&self) -> char {
        match self {
            CausalCharacter::Spacelike => 'S',
            CausalCharacter::Timelike => 'T',
            CausalCharacter::Lightlike => 'L',
        }
    }
}

impl std::fmt::Display for CausalCharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CausalCharacter::Spacelike => "spacelike",
            CausalCharacter::Timelike => "timelike",
            CausalCharacter::Lightlike => "lightlike",
        };
        write!(f, "{s}")
    }
}

/// Relative tolerance for deciding that <v,v> vanishes.
pub const CAUSAL_TOL: f64 = 1e-9;

/// Exact causal character (sign of <v,v>, zero vector spacelike).
pub fn causal_character(v: Vector3L) -> CausalCharacter {
    causal_character_eps(v, 0.0)
}

/// Causal character with a relative lightlike band:
/// |<v,v>| <= tol * max(1, ||v||_E^2) classifies as lightlike (v != 0).
pub fn causal_character_eps(v: Vector3L, tol: f64) -> CausalCharacter {
    let q = lorentz_dot(v, v);
    let scale = v.euclid_norm_sq();
    if scale == 0.0 {
        return CausalCharacter::Spacelike;
    }
    let band = tol * scale.max(1.0);
    if q > band {
        CausalCharacter::Spacelike
    } else if q < -band {
        CausalCharacter::Timelike
    } else {
        CausalCharacter::Lightlike
    }
}

/// Lorentzian cross product, defined by <u x v, w> = det(u, v, w).
///
/// Componentwise: (uy vt - ut vy, ut vx - ux vt, -(ux vy - uy vx)).
/// Satisfies <u x v, u x v> = -<u,u><v,v> + <u,v>^2.
pub fn lorentz_cross(u: Vector3L, v: Vector3L) -> Vector3L {
    Vector3L::new(
        u.y * v.t - u.t * v.y,
        u.t * v.x - u.x * v.t,
        -(u.x * v.y - u.y * v.x),
    )
}

/// Row-major 3x3 matrix acting on (x, y, t) columns.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat3(pub [[f64; 3]; 3]);

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    pub fn apply(&self, v: Vector3L) -> Vector3L {
        let m = &self.0;
        Vector3L::new(
            m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.t,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.t,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.t,
        )
    }

    pub fn mul(&self, o: &Mat3) -> Mat3 {
        let a = &self.0;
        let b = &o.0;
        let mut r = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
            }
        }
        Mat3(r)
    }

    /// Maximum deviation of M^T diag(1,1,-1) M from diag(1,1,-1).
    /// Zero (to roundoff) exactly for Lorentz transformations.
    pub fn gram_defect(&self) -> f64 {
        let g = [1.0, 1.0, -1.0];
        let m = &self.0;
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0.0;
                for k in 0..3 {
                    s += m[k][i] * g[k] * m[k][j];
                }
                let target = if i == j { g[i] } else { 0.0 };
                worst = worst.max((s - target).abs());
            }
        }
        worst
    }
}

/// Affine isometry p -> linear p + translation of Lorentz-Minkowski space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Isometry {
    pub linear: Mat3,
    pub translation: Vector3L,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry {
        linear: Mat3::IDENTITY,
        translation: Vector3L::ZERO,
    };

    pub fn linear_only(m: Mat3) -> Self {
        Isometry {
            linear: m,
            translation: Vector3L::ZERO,
        }
    }

    pub fn apply(&self, p: Vector3L) -> Vector3L {
        self.linear.apply(p) + self.translation
    }

    /// Tangent vectors see only the linear part.
    pub fn apply_vector(&self, v: Vector3L) -> Vector3L {
        self.linear.apply(v)
    }

    /// self after other: (self ∘ other)(p) = self(other(p)).
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            linear: self.linear.mul(&other.linear),
            translation: self.linear.apply(other.translation) + self.translation,
        }
    }
}

/// The three one-parameter families of linear isometries fixing an axis,
/// one per causal character of the fixed set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AxisKind {
    /// Euclidean rotations about the t-axis.
    TimelikeAxis,
    /// Boosts fixing the x-axis.
    SpacelikeAxis,
    /// Null rotations fixing span{(0,1,1)} pointwise.
    LightlikeAxis,
}

/// Group element at parameter theta for the chosen axis kind.
///
/// Each returned map is a Lorentz isometry and the family is a
/// one-parameter group: A(s) A(t) = A(s+t).
pub fn one_parameter_isometry(kind: AxisKind, theta: f64) -> Isometry {
    let m = match kind {
        AxisKind::TimelikeAxis => {
            let (s, c) = theta.sin_cos();
            Mat3([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
        }
        AxisKind::SpacelikeAxis => {
            let (sh, ch) = (theta.sinh(), theta.cosh());
            Mat3([[1.0, 0.0, 0.0], [0.0, ch, sh], [0.0, sh, ch]])
        }
        AxisKind::LightlikeAxis => {
            let h = theta * theta / 2.0;
            Mat3([
                [1.0, theta, -theta],
                [-theta, 1.0 - h, h],
                [-theta, -h, 1.0 + h],
            ])
        }
    };
    Isometry::linear_only(m)
}

/// Isometry taking the line {p0 + s d} (d lightlike, d.t != 0) into the
/// normalized lightlike line {(0, t, t)}, with A d a positive multiple
/// of (0, 1, 1).
///
/// Construction: a rotation about the t-axis kills the x-component of d
/// and aligns the y-component with sign(d.t); when d.t < 0 a reflection
/// (x, y, t) -> (x, -y, -t) restores positive orientation. Translation
/// then moves the image of p0 to the origin. The result can be
/// orientation- or time-reversing.
pub fn null_normalizing_isometry(d: Vector3L, p0: Vector3L) -> Result<Isometry> {
    let scale = d.euclid_norm_sq();
    if scale < 1e-300 {
        return Err(Error::DegenerateDirection(format!(
            "direction ({}, {}, {}) is numerically zero",
            d.x, d.y, d.t
        )));
    }
    let q = lorentz_dot(d, d);
    if q.abs() > CAUSAL_TOL * scale.max(1.0) {
        return Err(Error::NotLightlike(format!(
            "direction ({}, {}, {}) has <d,d> = {q}",
            d.x, d.y, d.t
        )));
    }
    let rho = d.x.hypot(d.y);
    if rho < 1e-300 || d.t == 0.0 {
        // lightlike with d.t = 0 forces d = 0, already rejected above
        return Err(Error::DegenerateDirection(
            "lightlike direction needs a nonzero t-component".into(),
        ));
    }
    let s = d.t.signum();
    let (sin_phi, cos_phi) = (s * d.x / rho, s * d.y / rho);
    let rot = Mat3([
        [cos_phi, -sin_phi, 0.0],
        [sin_phi, cos_phi, 0.0],
        [0.0, 0.0, 1.0],
    ]);
    let linear = if d.t < 0.0 {
        // time reversal keeps the image direction a positive multiple of (0,1,1)
        Mat3([[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, -1.0]]).mul(&rot)
    } else {
        rot
    };
    let translation = -linear.apply(p0);
    Ok(Isometry {
        linear,
        translation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const E1: Vector3L = Vector3L::new(1.0, 0.0, 0.0);
    const E2: Vector3L = Vector3L::new(0.0, 1.0, 0.0);
    const E3: Vector3L = Vector3L::new(0.0, 0.0, 1.0);

    #[test]
    fn causal_characters_of_basis_and_null_vectors() {
        assert_eq!(causal_character(E1), CausalCharacter::Spacelike);
        assert_eq!(causal_character(E3), CausalCharacter::Timelike);
        assert_eq!(
            causal_character(Vector3L::new(1.0, 0.0, 1.0)),
            CausalCharacter::Lightlike
        );
        assert_eq!(
            causal_character(Vector3L::new(0.6, 0.8, 1.0)),
            CausalCharacter::Lightlike
        );
        assert_eq!(causal_character(Vector3L::ZERO), CausalCharacter::Spacelike);
    }

    #[test]
    fn near_null_band_is_relative() {
        // <v,v> = 1e-12 but scale ~ 2, inside the 1e-9 relative band
        let v = Vector3L::new(1.0, 0.0, (1.0f64 - 1e-12).sqrt());
        assert_eq!(
            causal_character_eps(v, CAUSAL_TOL),
            CausalCharacter::Lightlike
        );
        // same quadratic defect on a tiny vector is spacelike: band uses max(1, scale)
        let w = v.scale(1e-6);
        assert_eq!(
            causal_character_eps(w, CAUSAL_TOL),
            CausalCharacter::Lightlike
        );
        let s = Vector3L::new(1.0, 0.0, 0.9);
        assert_eq!(causal_character_eps(s, CAUSAL_TOL), CausalCharacter::Spacelike);
    }

    #[test]
    fn cross_products_of_basis_vectors() {
        let c12 = lorentz_cross(E1, E2);
        assert_eq!(c12, Vector3L::new(0.0, 0.0, -1.0));
        let c23 = lorentz_cross(E2, E3);
        assert_eq!(c23, E1);
    }

    #[test]
    fn cross_square_identity_on_fixed_vectors() {
        let u = Vector3L::new(0.3, -1.2, 0.7);
        let v = Vector3L::new(-2.0, 0.5, 1.9);
        let c = lorentz_cross(u, v);
        let lhs = lorentz_dot(c, c);
        let rhs = -lorentz_dot(u, u) * lorentz_dot(v, v) + lorentz_dot(u, v).powi(2);
        assert!((lhs - rhs).abs() < 1e-12 * (1.0 + lhs.abs()));
    }

    #[test]
    fn one_parameter_groups_are_isometries_with_group_law() {
        for kind in [
            AxisKind::TimelikeAxis,
            AxisKind::SpacelikeAxis,
            AxisKind::LightlikeAxis,
        ] {
            for &(s, t) in &[(0.3, -0.9), (1.7, 0.4), (-1.1, -0.2)] {
                let a = one_parameter_isometry(kind, s);
                let b = one_parameter_isometry(kind, t);
                assert!(a.linear.gram_defect() < 1e-12);
                let ab = a.compose(&b);
                let sum = one_parameter_isometry(kind, s + t);
                for i in 0..3 {
                    for j in 0..3 {
                        assert!((ab.linear.0[i][j] - sum.linear.0[i][j]).abs() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn null_rotation_fixes_its_axis() {
        let axis = Vector3L::new(0.0, 1.0, 1.0);
        for theta in [-2.0, -0.5, 0.1, 3.0] {
            let a = one_parameter_isometry(AxisKind::LightlikeAxis, theta);
            let img = a.apply_vector(axis);
            assert!((img - axis).euclid_norm() < 1e-12);
        }
    }

    #[test]
    fn normalizing_the_canonical_direction_is_identity() {
        let a = null_normalizing_isometry(Vector3L::new(0.0, 1.0, 1.0), Vector3L::ZERO).unwrap();
        assert_eq!(a.linear, Mat3::IDENTITY);
        assert_eq!(a.translation, Vector3L::ZERO);
    }

    #[test]
    fn normalizing_negative_x_null_direction_is_quarter_turn() {
        let a = null_normalizing_isometry(Vector3L::new(-1.0, 0.0, 1.0), Vector3L::ZERO).unwrap();
        let expect = Mat3([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]);
        for i in 0..3 {
            for j in 0..3 {
                assert!((a.linear.0[i][j] - expect.0[i][j]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn normalizing_maps_line_into_canonical_null_line() {
        let cases = [
            (Vector3L::new(3.0, 4.0, 5.0), Vector3L::new(0.2, -1.0, 0.7)),
            (Vector3L::new(3.0, 4.0, -5.0), Vector3L::new(-2.0, 0.0, 1.0)),
            (Vector3L::new(-0.6, 0.8, -1.0), Vector3L::new(0.0, 5.0, -3.0)),
        ];
        for (d, p0) in cases {
            let a = null_normalizing_isometry(d, p0).unwrap();
            assert!(a.linear.gram_defect() < 1e-12);
            let dd = a.apply_vector(d);
            assert!(dd.x.abs() < 1e-12 * d.euclid_norm());
            assert!((dd.y - dd.t).abs() < 1e-12 * d.euclid_norm());
            assert!(dd.t > 0.0);
            for s in [-2.0, 0.0, 1.5] {
                let q = a.apply(p0 + d.scale(s));
                assert!(q.x.abs() < 1e-12 * (1.0 + p0.euclid_norm() + d.euclid_norm()));
                assert!((q.y - q.t).abs() < 1e-12 * (1.0 + p0.euclid_norm() + d.euclid_norm()));
            }
        }
    }

    #[test]
    fn normalizing_rejects_non_null_and_degenerate_directions() {
        let err = null_normalizing_isometry(E1, Vector3L::ZERO).unwrap_err();
        assert!(matches!(err, Error::NotLightlike(_)));
        let err = null_normalizing_isometry(Vector3L::ZERO, Vector3L::ZERO).unwrap_err();
        assert!(matches!(err, Error::DegenerateDirection(_)));
    }
}
