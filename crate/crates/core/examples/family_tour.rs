//! Builds one surface from each of the six families, evaluates the
//! embedding, and checks the zero mean curvature and profile ODE
//! residuals at a few points.
//!
//! Run with: cargo run --example family_tour

use zmc_riemann::classify::mean_curvature_residual;
use zmc_riemann::families::{HyperbolaKind, ParabolaTriple, SurfaceFamily};

fn main() {
    let families = [
        ("spacelike circles", SurfaceFamily::euclidean_general(1.0, 2.0, None)),
        ("spacelike circles, singular profile", SurfaceFamily::euclidean_singular(1.5)),
        (
            "timelike circles, type I",
            SurfaceFamily::hyperbola_general(1.5, 0.5, 0.3, HyperbolaKind::TypeI, None),
        ),
        (
            "timelike circles, type II",
            SurfaceFamily::hyperbola_general(0.5, 1.5, 0.4, HyperbolaKind::TypeII, None),
        ),
        (
            "timelike circles, singular profile",
            SurfaceFamily::hyperbola_singular(0.5, 1.2, HyperbolaKind::TypeII),
        ),
        (
            "lightlike circles (parabolas)",
            ParabolaTriple::gen_neg(-1.0, 0.2, 0.0, 0.5)
                .and_then(|t| SurfaceFamily::parabola(t, None)),
        ),
    ];

    for (title, fam) in families {
        let fam = fam.expect("parameters are valid");
        let ((p1_lo, p1_hi), (p2_lo, p2_hi)) = fam.default_window();
        let (n1, n2) = fam.param_names();
        println!("{title}  [{}]", fam.kind_name());
        println!("  window {n1} in [{p1_lo:.3}, {p1_hi:.3}], {n2} in [{p2_lo:.3}, {p2_hi:.3}]");

        // probe the middle and the quarter points of the window
        let mut worst_h = 0.0f64;
        for (s, t) in [(0.5, 0.5), (0.25, 0.75), (0.75, 0.25)] {
            let p1 = p1_lo + s * (p1_hi - p1_lo);
            let p2 = p2_lo + t * (p2_hi - p2_lo);
            let x = fam.evaluate(p1, p2).expect("inside the window");
            if let Ok(h) = mean_curvature_residual(&fam, p1, p2) {
                worst_h = worst_h.max(h);
            }
            if s == 0.5 {
                println!(
                    "  X({p1:.3}, {p2:.3}) = ({:+.4}, {:+.4}, {:+.4})",
                    x.x, x.y, x.t
                );
            }
        }
        println!("  max |H| residual at probes: {worst_h:.2e}");

        // the profile functions satisfy the defining first-order system
        let mid = 0.5 * (p1_lo + p1_hi);
        let ode = fam.ode_residual(mid).expect("inside the window");
        println!("  profile ODE residual at {n1} = {mid:.3}: {ode:.2e}\n");
    }
}
