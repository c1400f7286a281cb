//! Minkowski linear algebra: the metric, causal characters, the
//! Lorentzian cross product, and the isometries used to normalize
//! lightlike lines.
//!
//! Run with: cargo run --example minkowski_basics

use zmc_riemann::minkowski::{
    causal_character, lorentz_cross, lorentz_dot, null_normalizing_isometry,
    one_parameter_isometry, AxisKind, Vector3L,
};

fn main() {
    // the metric is dx^2 + dy^2 - dt^2, so the t-axis is timelike
    let vectors = [
        ("x-axis", Vector3L::new(1.0, 0.0, 0.0)),
        ("t-axis", Vector3L::new(0.0, 0.0, 1.0)),
        ("null (0,1,1)", Vector3L::new(0.0, 1.0, 1.0)),
        ("generic", Vector3L::new(0.3, -1.2, 0.7)),
    ];
    println!("causal characters under <v,v> = x^2 + y^2 - t^2:");
    for (name, v) in vectors {
        println!(
            "  {name:13} <v,v> = {:+.4}  ->  {:?}",
            lorentz_dot(v, v),
            causal_character(v)
        );
    }

    // the cross product is metric-adjoint to the determinant:
    // <u x v, w> = det[u, v, w], so u x v is Lorentz-orthogonal to both
    let u = Vector3L::new(1.0, 0.5, 0.2);
    let v = Vector3L::new(-0.3, 1.0, 0.8);
    let n = lorentz_cross(u, v);
    println!("\ncross product n = u x v = ({:.4}, {:.4}, {:.4})", n.x, n.y, n.t);
    println!("  <n,u> = {:.2e}, <n,v> = {:.2e}", lorentz_dot(n, u), lorentz_dot(n, v));

    // one-parameter subgroups: rotation, boost, null rotation
    println!("\none-parameter isometry groups, A(s)A(t) = A(s+t):");
    for kind in [AxisKind::TimelikeAxis, AxisKind::SpacelikeAxis, AxisKind::LightlikeAxis] {
        let a = one_parameter_isometry(kind, 0.4);
        let b = one_parameter_isometry(kind, 0.7);
        let combined = a.compose(&b);
        let direct = one_parameter_isometry(kind, 1.1);
        let p = Vector3L::new(0.2, -0.6, 1.3);
        let gap = {
            let d = combined.apply(p);
            let e = direct.apply(p);
            ((d.x - e.x).powi(2) + (d.y - e.y).powi(2) + (d.t - e.t).powi(2)).sqrt()
        };
        println!("  {kind:?}: |A(0.4)A(0.7)p - A(1.1)p| = {gap:.2e}");
    }

    // every lightlike line can be moved onto {(0, s, s)}
    let d = Vector3L::new(3.0, 4.0, 5.0); // 9 + 16 - 25 = 0
    let p0 = Vector3L::new(1.0, -2.0, 0.5);
    let iso = null_normalizing_isometry(d, p0).expect("d is lightlike");
    println!("\nnormalizing the line p0 + s d, d = (3, 4, 5):");
    for s in [-1.0, 0.0, 2.0] {
        let q = iso.apply(Vector3L::new(p0.x + s * d.x, p0.y + s * d.y, p0.t + s * d.t));
        println!("  s = {s:+.1} -> ({:+.6}, {:+.6}, {:+.6})", q.x, q.y, q.t);
    }
    println!("  image points satisfy x = 0 and y = t");
}
