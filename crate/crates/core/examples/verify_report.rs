//! Builds the machine-readable verification reports that back the
//! `zmc verify` command: residual sweeps with per-check tolerances,
//! emitted as JSON that validates against schema/verify.schema.json.
//!
//! Run with: cargo run --example verify_report

use serde_json::json;
use zmc_riemann::classify::{GridSpec, RangeSpec};
use zmc_riemann::families::{ParabolaTriple, SurfaceFamily};
use zmc_riemann::graph::EntireGraphParams;
use zmc_riemann::report::{verify_family, verify_graph};

fn main() {
    let fam = SurfaceFamily::parabola(
        ParabolaTriple::gen_neg(-1.0, 0.0, 0.0, 0.0).unwrap(),
        None,
    )
    .unwrap();
    let grid = GridSpec::default_for(&fam);
    let report = verify_family(&fam, &grid, json!({"a": -1.0, "b": 0.0, "c": 0.0, "p": 0.0}), None);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    assert!(report.pass, "default grids stay below every tolerance");

    let g = EntireGraphParams::new(-2.0, -1.0).unwrap();
    let ggrid = GridSpec {
        p1: RangeSpec::new(-1.0, 1.0, 49).unwrap(),
        p2: RangeSpec::new(-3.0, 3.0, 65).unwrap(),
    };
    let graph_report = verify_graph(&g, &ggrid, json!({"a": -2.0, "p": -1.0}), None);
    println!("{}", serde_json::to_string_pretty(&graph_report).unwrap());
    assert!(graph_report.pass);
    assert_eq!(graph_report.ruled, Some(false));
    assert_eq!(graph_report.helicoid_ruled, Some(true));
}
