//! The lightlike-plane family that is an entire graph t = f(x, y):
//! height recovery, the two lightlike curves, all three causal
//! characters, and the ruledness probe with the helicoid as control.
//! Also the rotational detector for parabolic triples.
//!
//! Run with: cargo run --example entire_graph

use zmc_riemann::classify::rotational_check;
use zmc_riemann::families::ParabolaTriple;
use zmc_riemann::graph::{
    eval_graph_param, graph_zmc_residual, lightlike_curve_tangents, lightlike_curves,
    ruled_line_test, solve_height, EntireGraphParams, GraphFunction,
};
use zmc_riemann::minkowski::lorentz_dot;

fn main() {
    // a < 0 and p < 0 give a graph over the whole (x, y) plane
    let g = EntireGraphParams::new(-2.0, -1.0).unwrap();
    let f = GraphFunction::entire(g, 1e-15);

    // the parametrization and the graph function agree: solve the
    // height back from (x, y)
    let mut worst = 0.0f64;
    for (u, v) in [(0.0, 0.0), (0.4, 1.0), (-0.6, 2.5), (1.2, -3.0)] {
        let pt = eval_graph_param(&g, u, v);
        let t = solve_height(&g, pt.x, pt.y, 1e-14).unwrap();
        worst = worst.max((t - pt.t).abs());
    }
    println!("height round trip, max |t - f(x,y)| = {worst:.2e}");

    // zero mean curvature in the graph formulation
    let mut worst_h = 0.0f64;
    for (x, y) in [(0.0, 0.0), (1.0, 2.0), (-2.0, 0.5), (3.0, -1.0)] {
        worst_h = worst_h.max(graph_zmc_residual(&f, x, y));
    }
    println!("graph ZMC residual at probes: {worst_h:.2e}");

    // two lightlike curves split the graph into timelike and spacelike
    // parts; their tangents are null and they lie on the surface
    let mut worst_null = 0.0f64;
    let mut worst_on = 0.0f64;
    for i in 0..9 {
        let u = -1.0 + 0.25 * i as f64;
        let (dp, dm) = lightlike_curve_tangents(&g, u);
        worst_null = worst_null.max(lorentz_dot(dp, dp).abs().max(lorentz_dot(dm, dm).abs()));
        let (cp, cm) = lightlike_curves(&g, u);
        for c in [cp, cm] {
            let t = solve_height(&g, c.x, c.y, 1e-14).unwrap();
            worst_on = worst_on.max((t - c.t).abs());
        }
    }
    println!("lightlike curves: max |<c',c'>| = {worst_null:.2e}, off-surface {worst_on:.2e}");

    // ruledness: the helicoid of the second kind x tanh(y) carries a
    // straight line through every point, this graph does not
    let probes = [(0.0, 0.3), (0.5, 0.8), (-0.7, 1.2)];
    let heli = GraphFunction::helicoid();
    let heli_dev = ruled_line_test(&heli, &probes, 1.0).unwrap();
    let graph_dev = ruled_line_test(&f, &probes, 1.0).unwrap();
    println!("\nruling deviation per probe (below 1e-8 means a line lies on the surface):");
    for (i, (x, y)) in probes.iter().enumerate() {
        println!(
            "  ({x:+.1}, {y:+.1})  helicoid {:.1e}   entire graph {:.1e}",
            heli_dev[i], graph_dev[i]
        );
    }

    // the one rotational triple among the parabolic families
    println!("\nnull-rotation orbit detector:");
    let fixture = ParabolaTriple::rotational_fixture(0.5);
    let (is_rot, dev) = rotational_check(&fixture, 33).unwrap();
    println!("  f = 0, r = -1/(2u) triple: rotational = {is_rot}, deviation {dev:.1e}");
    let generic = ParabolaTriple::gen_neg(-1.0, 0.3, 0.0, 0.5).unwrap();
    let (is_rot, dev) = rotational_check(&generic, 33).unwrap();
    println!("  generic tanh triple:       rotational = {is_rot}, deviation {dev:.1e}");
}
