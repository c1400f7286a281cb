//! The characteristic of a straight lightlike line: the invariant
//! alpha(y) sampled in the normalized frame, the constant mu of its
//! Riccati-type equation, and the canonical solution type. mu has a
//! closed form in every family that contains a line.
//!
//! Run with: cargo run --example characteristic_mu

use zmc_riemann::characteristic::{characteristic_report, DEFAULT_ALPHA_SAMPLES};
use zmc_riemann::classify::{lightlike_locus_analytic, LocusKind};
use zmc_riemann::families::{HyperbolaKind, ParabolaTriple, SurfaceFamily};

fn main() {
    let a = 1.2f64;
    let (hb, hd) = (1.3f64, (1.3f64 * 1.3 - 0.25).sqrt());
    let (pa, pb) = (-1.0f64, 0.4f64);
    let cases: [(&str, SurfaceFamily, f64); 5] = [
        (
            "spacelike circles, b = 2a",
            SurfaceFamily::euclidean_general(a, 2.0 * a, None).unwrap(),
            a,
        ),
        (
            "spacelike circles, b = -2a, inner",
            SurfaceFamily::euclidean_general(a, -2.0 * a, None).unwrap(),
            -a,
        ),
        (
            "spacelike circles, singular profile",
            SurfaceFamily::euclidean_singular(a).unwrap(),
            -a,
        ),
        (
            "timelike circles II, delta = sqrt(b^2 - a^2)",
            SurfaceFamily::hyperbola_general(0.5, hb, hd, HyperbolaKind::TypeII, None).unwrap(),
            -hd.powi(3) / (hb * hb),
        ),
        (
            "parabolic circles, tanh profile, p = 0",
            SurfaceFamily::parabola(ParabolaTriple::gen_neg(pa, pb, 0.0, 0.0).unwrap(), None)
                .unwrap(),
            2.0 * pa.powi(5) / (pa * pa + pb * pb).powi(2),
        ),
    ];

    for (label, fam, mu_closed) in cases {
        let line = lightlike_locus_analytic(&fam)
            .expect("family has lightlike points")
            .into_iter()
            .find(|l| l.kind == LocusKind::StraightLine)
            .expect("family has a straight line");
        let rep = characteristic_report(&fam, &line, DEFAULT_ALPHA_SAMPLES)
            .expect("line is analyzable");
        println!("{label}");
        println!("  mu = {:+.8}   closed form {:+.8}", rep.mu, mu_closed);
        println!(
            "  constancy residual {:.1e}, fit residual {:.1e}",
            rep.mu_constancy_residual, rep.closed_form_fit_residual
        );
        println!("  alpha type: {}", rep.alpha_type.label());
        // a few alpha samples along the line, y in the normalized frame
        let k = rep.samples.len() / 4;
        for (y, alpha) in rep.samples.iter().step_by(k.max(1)).take(4) {
            println!("    alpha({y:+.4}) = {alpha:+.6}");
        }
        println!();
    }
}
