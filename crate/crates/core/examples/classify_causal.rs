//! Causal classification: the closed-form prediction of which causal
//! characters a family exhibits, the grid sampler that checks it, and
//! the lightlike loci (straight lines or null curves) in between.
//!
//! Run with: cargo run --example classify_causal

use zmc_riemann::classify::{
    lightlike_locus_analytic, predict_class, sample_class, GridSpec, LocusKind,
};
use zmc_riemann::families::{HyperbolaKind, ParabolaTriple, SurfaceFamily};

fn main() {
    let cases = [
        // spacelike everywhere: 2a < b
        ("a=1 b=3", SurfaceFamily::euclidean_general(1.0, 3.0, None).unwrap()),
        // spacelike + a straight lightlike line at theta = pi
        ("a=1 b=2", SurfaceFamily::euclidean_general(1.0, 2.0, None).unwrap()),
        // outer component of b = -2a: line plus two null curves
        ("a=1 b=-2 outer", SurfaceFamily::euclidean_general(1.0, -2.0, Some(2.0)).unwrap()),
        // hyperbolic circles with delta = sqrt(b^2 - a^2): timelike + line
        (
            "type II delta=c inner",
            SurfaceFamily::hyperbola_general(
                0.5,
                1.3,
                (1.3f64 * 1.3 - 0.25).sqrt(),
                HyperbolaKind::TypeII,
                None,
            )
            .unwrap(),
        ),
        // parabolic circles, all three characters when p < 0
        (
            "parabola constant r, p<0",
            SurfaceFamily::parabola(ParabolaTriple::singular(-2.0, 0.0, -1.0).unwrap(), None)
                .unwrap(),
        ),
    ];

    for (label, fam) in &cases {
        let predicted = predict_class(fam).expect("valid family");
        let report = sample_class(fam, &GridSpec::default_for(fam)).expect("window is sampleable");
        println!("{} ({label})", fam.kind_name());
        println!("  predicted {:?}", predicted.predicted);
        println!("  sampled   {:?}  agreement: {}", report.sampled, report.agreement);
        if !report.notes.is_empty() {
            println!("  notes: {}", report.notes);
        }

        // closed-form loci carry exact directions and residuals
        match lightlike_locus_analytic(fam) {
            Ok(loci) => {
                for l in &loci {
                    match l.kind {
                        LocusKind::StraightLine => {
                            let d = l.direction.expect("lines carry a direction");
                            println!(
                                "  line, direction ({:+.4}, {:+.4}, {:+.4}), straightness {:.1e}",
                                d.x, d.y, d.t, l.straightness_residual
                            );
                        }
                        LocusKind::NullCurve => println!(
                            "  null curve, straightness {:.1e} (not a line)",
                            l.straightness_residual
                        ),
                    }
                }
            }
            Err(_) => println!("  no lightlike points"),
        }
        println!();
    }
}
