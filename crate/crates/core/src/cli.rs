//! Command-line front end: generate | classify | characteristic | verify.
//!
//! Every flag can also come from a JSON config file (--config FILE);
//! explicit flags override the file. Exit codes: 0 success, 1
//! mathematical disagreement or residual over tolerance, 2 invalid
//! parameters, 3 i/o failure, 4 unmet precondition (e.g. asking for a
//! characteristic where no straight lightlike line exists).

use crate::characteristic::{characteristic_report, DEFAULT_ALPHA_SAMPLES};
use crate::classify::{
    lightlike_locus_analytic, sample_class, GridSpec, LocusKind, RangeSpec,
};
use crate::error::{Error, Result};
use crate::families::{HyperbolaKind, ParabolaTriple, SurfaceFamily};
use crate::graph::EntireGraphParams;
use crate::mesh::{sample_graph_mesh, sample_mesh, write_csv, write_ply, Mesh};
use crate::report::{characteristic_json, classify_json, verify_family, verify_graph};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(
    name = "zmc",
    version,
    about = "Zero mean curvature surfaces of Riemann type in Lorentz-Minkowski 3-space"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a surface mesh with causal colors (PLY or CSV)
    Generate(CommonArgs),
    /// Predict and sample causal characters, report agreement and loci
    Classify(CommonArgs),
    /// Slope alpha(y) along a straight lightlike line and its constant mu
    Characteristic(CommonArgs),
    /// Residual sweeps: mean curvature, ODE system, loci, graph checks
    Verify(CommonArgs),
}

#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommonArgs {
    /// Family: euclidean-general | euclidean-singular | hyperbola-i |
    /// hyperbola-ii | hyperbola-singular-i | hyperbola-singular-ii |
    /// parabola-gen-zero | parabola-gen-pos | parabola-gen-neg |
    /// parabola-singular | entire-graph
    #[arg(long)]
    pub family: Option<String>,

    /// Variant for the short names "hyperbola", "hyperbola-singular"
    /// (i | ii) and "parabola" (gen-zero | gen-pos | gen-neg | singular)
    #[arg(long)]
    #[serde(default)]
    pub variant: Option<String>,

    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub a: Option<f64>,

    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub b: Option<f64>,

    /// Hyperbola axis offset delta
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub delta: Option<f64>,

    /// Parabolic translation weight p, or the entire graph profile scale
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub p: Option<f64>,

    /// Parabolic integration constant c (default 0)
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub c: Option<f64>,

    /// Base parameter selecting the domain component (r0 or u0)
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub r0: Option<f64>,

    /// Radius range lo:hi:count (circle and hyperbola families)
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub r: Option<String>,

    /// Angle range lo:hi:count (circle and hyperbola families)
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub theta: Option<String>,

    /// First-parameter range lo:hi:count (parabolic families, graph)
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub u: Option<String>,

    /// Second-parameter range lo:hi:count (parabolic families, graph)
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub v: Option<String>,

    /// Residual gate: verify ZMC tolerance, characteristic mu gate
    #[arg(long)]
    #[serde(default)]
    pub tol: Option<f64>,

    /// Output file; stdout when omitted
    #[arg(long)]
    #[serde(default)]
    pub out: Option<PathBuf>,

    /// Compact single-line JSON instead of pretty-printed
    #[arg(long)]
    #[serde(default)]
    pub json: bool,

    /// JSON file with these same fields; explicit flags win
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,

    /// Worker threads for mesh sampling (default 1)
    #[arg(long)]
    #[serde(default)]
    pub threads: Option<usize>,

    /// Sample count along the lightlike line (characteristic)
    #[arg(long)]
    #[serde(default)]
    pub samples: Option<usize>,

    /// Index of the straight lightlike line to analyze (characteristic)
    #[arg(long)]
    #[serde(default)]
    pub locus: Option<usize>,

    /// Mesh format ply | csv (default: from --out extension, else ply)
    #[arg(long)]
    #[serde(default)]
    pub format: Option<String>,
}

impl CommonArgs {
    /// Fills unset fields from the config file, if one was given.
    fn merged(mut self) -> Result<CommonArgs> {
        let Some(path) = self.config.take() else {
            return Ok(self);
        };
        let text = fs::read_to_string(&path)?;
        let file: CommonArgs = serde_json::from_str(&text)
            .map_err(|e| Error::InvalidParams(format!("config {}: {e}", path.display())))?;
        Ok(CommonArgs {
            family: self.family.or(file.family),
            variant: self.variant.or(file.variant),
            a: self.a.or(file.a),
            b: self.b.or(file.b),
            delta: self.delta.or(file.delta),
            p: self.p.or(file.p),
            c: self.c.or(file.c),
            r0: self.r0.or(file.r0),
            r: self.r.or(file.r),
            theta: self.theta.or(file.theta),
            u: self.u.or(file.u),
            v: self.v.or(file.v),
            tol: self.tol.or(file.tol),
            out: self.out.or(file.out),
            json: self.json || file.json,
            config: None,
            threads: self.threads.or(file.threads),
            samples: self.samples.or(file.samples),
            locus: self.locus.or(file.locus),
            format: self.format.or(file.format),
        })
    }
}

/// The resolved surface to work on.
pub enum Target {
    Family(SurfaceFamily),
    Graph(EntireGraphParams),
}

fn need(name: &str, v: Option<f64>) -> Result<f64> {
    v.ok_or_else(|| Error::InvalidParams(format!("missing required parameter --{name}")))
}

fn hyperbola_kind(s: &str) -> Result<HyperbolaKind> {
    match s {
        "i" | "I" | "1" => Ok(HyperbolaKind::TypeI),
        "ii" | "II" | "2" => Ok(HyperbolaKind::TypeII),
        other => Err(Error::InvalidParams(format!(
            "unknown hyperbola variant {other:?}, expected i or ii"
        ))),
    }
}

fn build_target(args: &CommonArgs) -> Result<Target> {
    let family = args
        .family
        .as_deref()
        .ok_or_else(|| Error::InvalidParams("missing required flag --family".into()))?;
    let variant = args.variant.as_deref();
    let name = match (family, variant) {
        ("hyperbola", Some(v)) => format!("hyperbola-{}", v.to_lowercase()),
        ("hyperbola-singular", Some(v)) => format!("hyperbola-singular-{}", v.to_lowercase()),
        ("parabola", Some(v)) => format!("parabola-{}", v.to_lowercase()),
        _ => family.to_string(),
    };
    let c = args.c.unwrap_or(0.0);
    let fam = match name.as_str() {
        "euclidean-general" => {
            SurfaceFamily::euclidean_general(need("a", args.a)?, need("b", args.b)?, args.r0)?
        }
        "euclidean-singular" => SurfaceFamily::euclidean_singular(need("a", args.a)?)?,
        "hyperbola-i" | "hyperbola-ii" => SurfaceFamily::hyperbola_general(
            need("a", args.a)?,
            need("b", args.b)?,
            need("delta", args.delta)?,
            hyperbola_kind(&name["hyperbola-".len()..])?,
            args.r0,
        )?,
        "hyperbola-singular-i" | "hyperbola-singular-ii" => SurfaceFamily::hyperbola_singular(
            need("a", args.a)?,
            need("b", args.b)?,
            hyperbola_kind(&name["hyperbola-singular-".len()..])?,
        )?,
        "parabola-gen-zero" => SurfaceFamily::parabola(
            ParabolaTriple::gen_zero(need("b", args.b)?, c, need("p", args.p)?)?,
            args.r0,
        )?,
        "parabola-gen-pos" => SurfaceFamily::parabola(
            ParabolaTriple::gen_pos(need("a", args.a)?, need("b", args.b)?, c, need("p", args.p)?)?,
            args.r0,
        )?,
        "parabola-gen-neg" => SurfaceFamily::parabola(
            ParabolaTriple::gen_neg(need("a", args.a)?, need("b", args.b)?, c, need("p", args.p)?)?,
            args.r0,
        )?,
        "parabola-singular" => SurfaceFamily::parabola(
            ParabolaTriple::singular(need("a", args.a)?, need("b", args.b)?, need("p", args.p)?)?,
            args.r0,
        )?,
        "entire-graph" => {
            let g = EntireGraphParams::new(need("a", args.a)?, need("p", args.p)?)?;
            return Ok(Target::Graph(g));
        }
        other => {
            return Err(Error::InvalidParams(format!(
                "unknown family {other:?}; see --help for the list"
            )))
        }
    };
    Ok(Target::Family(fam))
}

fn parse_range(name: &str, s: &str) -> Result<RangeSpec> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || Error::InvalidParams(format!("--{name} expects lo:hi:count, got {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo: f64 = parts[0].parse().map_err(|_| bad())?;
    let hi: f64 = parts[1].parse().map_err(|_| bad())?;
    let count: usize = parts[2].parse().map_err(|_| bad())?;
    RangeSpec::new(lo, hi, count)
}

fn resolve_grid(args: &CommonArgs, target: &Target) -> Result<GridSpec> {
    let p1_flag = match (args.r.as_deref(), args.u.as_deref()) {
        (Some(r), _) => Some(parse_range("r", r)?),
        (None, Some(u)) => Some(parse_range("u", u)?),
        (None, None) => None,
    };
    let p2_flag = match (args.theta.as_deref(), args.v.as_deref()) {
        (Some(t), _) => Some(parse_range("theta", t)?),
        (None, Some(v)) => Some(parse_range("v", v)?),
        (None, None) => None,
    };
    let default = match target {
        Target::Family(fam) => GridSpec::default_for(fam),
        Target::Graph(_) => GridSpec {
            p1: RangeSpec::new(-1.0, 1.0, 49)?,
            p2: RangeSpec::new(-3.0, 3.0, 65)?,
        },
    };
    Ok(GridSpec {
        p1: p1_flag.unwrap_or(default.p1),
        p2: p2_flag.unwrap_or(default.p2),
    })
}

/// Parameter echo for the JSON reports: only the provided fields.
fn params_value(args: &CommonArgs) -> Value {
    let mut map = serde_json::Map::new();
    let mut put = |k: &str, v: Option<f64>| {
        if let Some(x) = v {
            map.insert(k.to_string(), json!(x));
        }
    };
    put("a", args.a);
    put("b", args.b);
    put("delta", args.delta);
    put("p", args.p);
    put("c", args.c);
    put("r0", args.r0);
    Value::Object(map)
}

fn write_out(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => fs::write(path, bytes)?,
        None => std::io::stdout().write_all(bytes)?,
    }
    Ok(())
}

fn emit_json<T: serde::Serialize>(value: &T, args: &CommonArgs) -> Result<()> {
    let mut bytes = if args.json {
        serde_json::to_vec(value)?
    } else {
        serde_json::to_vec_pretty(value)?
    };
    bytes.push(b'\n');
    write_out(args.out.as_deref(), &bytes)
}

fn mesh_bytes(mesh: &Mesh, format: &str) -> Result<Vec<u8>> {
    let mut bytes = Vec::new();
    match format {
        "ply" => write_ply(mesh, &mut bytes)?,
        "csv" => write_csv(mesh, &mut bytes)?,
        other => {
            return Err(Error::InvalidParams(format!(
                "unknown format {other:?}, expected ply or csv"
            )))
        }
    }
    Ok(bytes)
}

fn cmd_generate(args: &CommonArgs) -> Result<i32> {
    let target = build_target(args)?;
    let grid = resolve_grid(args, &target)?;
    let threads = args.threads.unwrap_or(1);
    let mesh = match &target {
        Target::Family(fam) => {
            // snap onto the analytic loci so the lightlike set is visible
            let loci = lightlike_locus_analytic(fam).unwrap_or_default();
            sample_mesh(fam, &grid, threads, &loci)?
        }
        Target::Graph(g) => sample_graph_mesh(g, &grid, threads, true),
    };
    let format = match (&args.format, &args.out) {
        (Some(f), _) => f.clone(),
        (None, Some(path)) => match path.extension().and_then(|e| e.to_str()) {
            Some("csv") => "csv".to_string(),
            _ => "ply".to_string(),
        },
        (None, None) => "ply".to_string(),
    };
    let bytes = mesh_bytes(&mesh, &format)?;
    write_out(args.out.as_deref(), &bytes)?;
    Ok(0)
}

fn cmd_classify(args: &CommonArgs) -> Result<i32> {
    let target = build_target(args)?;
    let Target::Family(fam) = &target else {
        return Err(Error::InvalidParams(
            "classify applies to the Riemann-type families; the entire graph \
             always carries all three characters (use verify)"
                .into(),
        ));
    };
    let grid = resolve_grid(args, &target)?;
    let report = sample_class(fam, &grid)?;
    let agreement = report.agreement;
    let json = classify_json(&report, params_value(args));
    emit_json(&json, args)?;
    Ok(if agreement { 0 } else { 1 })
}

fn cmd_characteristic(args: &CommonArgs) -> Result<i32> {
    let target = build_target(args)?;
    let Target::Family(fam) = &target else {
        return Err(Error::NoLightlikePart(
            "the entire graph's lightlike locus is a pair of curves, not a line".into(),
        ));
    };
    let loci = lightlike_locus_analytic(fam)?;
    let lines: Vec<_> = loci
        .into_iter()
        .filter(|l| l.kind == LocusKind::StraightLine)
        .collect();
    if lines.is_empty() {
        return Err(Error::NotALine(format!(
            "{} has no straight lightlike line at these parameters",
            fam.kind_name()
        )));
    }
    let idx = args.locus.unwrap_or(0);
    let locus = lines.get(idx).ok_or_else(|| {
        Error::InvalidParams(format!(
            "--locus {idx} out of range: {} straight line(s) found",
            lines.len()
        ))
    })?;
    let n = args.samples.unwrap_or(DEFAULT_ALPHA_SAMPLES);
    let report = characteristic_report(fam, locus, n)?;
    let gate = args.tol.unwrap_or(1e-4);
    let ok = report.mu_constancy_residual <= gate;
    emit_json(&characteristic_json(&report), args)?;
    Ok(if ok { 0 } else { 1 })
}

fn cmd_verify(args: &CommonArgs) -> Result<i32> {
    let target = build_target(args)?;
    let grid = resolve_grid(args, &target)?;
    let report = match &target {
        Target::Family(fam) => verify_family(fam, &grid, params_value(args), args.tol),
        Target::Graph(g) => verify_graph(g, &grid, params_value(args), args.tol),
    };
    let pass = report.pass;
    emit_json(&report, args)?;
    Ok(if pass { 0 } else { 1 })
}

/// Runs one parsed command; returns the process exit code.
pub fn run(cli: Cli) -> Result<i32> {
    let (run_cmd, args): (fn(&CommonArgs) -> Result<i32>, CommonArgs) = match cli.command {
        Command::Generate(a) => (cmd_generate, a),
        Command::Classify(a) => (cmd_classify, a),
        Command::Characteristic(a) => (cmd_characteristic, a),
        Command::Verify(a) => (cmd_verify, a),
    };
    run_cmd(&args.merged()?)
}

/// Entry point for the zmc binary: parse, run, map errors to exit codes.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        // a closed stdout (| head) is not a failure of ours
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(pairs: &[(&str, &str)]) -> CommonArgs {
        let mut a = CommonArgs::default();
        for (k, v) in pairs {
            match *k {
                "family" => a.family = Some(v.to_string()),
                "variant" => a.variant = Some(v.to_string()),
                "a" => a.a = Some(v.parse().unwrap()),
                "b" => a.b = Some(v.parse().unwrap()),
                "delta" => a.delta = Some(v.parse().unwrap()),
                "p" => a.p = Some(v.parse().unwrap()),
                "r" => a.r = Some(v.to_string()),
                "theta" => a.theta = Some(v.to_string()),
                other => panic!("unknown key {other}"),
            }
        }
        a
    }

    #[test]
    fn family_names_resolve_to_targets() {
        let t = build_target(&args(&[("family", "euclidean-general"), ("a", "1"), ("b", "2")]));
        assert!(matches!(t, Ok(Target::Family(_))));
        let t = build_target(&args(&[
            ("family", "hyperbola"),
            ("variant", "ii"),
            ("a", "0"),
            ("b", "-1"),
            ("delta", "0.5"),
        ]));
        assert!(matches!(t, Ok(Target::Family(_))));
        let t = build_target(&args(&[("family", "entire-graph"), ("a", "-2"), ("p", "-1")]));
        assert!(matches!(t, Ok(Target::Graph(_))));
    }

    #[test]
    fn missing_parameters_are_invalid() {
        let e = build_target(&args(&[("family", "euclidean-general"), ("a", "1")]));
        assert!(matches!(e, Err(Error::InvalidParams(_))));
        let e = build_target(&args(&[("family", "nonsense")]));
        assert!(matches!(e, Err(Error::InvalidParams(_))));
    }

    #[test]
    fn range_parsing_accepts_lo_hi_count() {
        let r = parse_range("r", "0.05:3:200").unwrap();
        assert_eq!((r.lo, r.hi, r.count), (0.05, 3.0, 200));
        assert!(parse_range("r", "1:2").is_err());
        assert!(parse_range("r", "2:1:5").is_err());
        assert!(parse_range("r", "a:b:c").is_err());
    }

    #[test]
    fn config_file_fills_gaps_and_flags_win() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.json");
        fs::write(
            &path,
            r#"{"family": "euclidean-general", "a": 1.0, "b": 3.0, "threads": 4}"#,
        )
        .unwrap();
        let mut a = CommonArgs::default();
        a.config = Some(path);
        a.b = Some(2.0);
        let merged = a.merged().unwrap();
        assert_eq!(merged.family.as_deref(), Some("euclidean-general"));
        assert_eq!(merged.a, Some(1.0));
        assert_eq!(merged.b, Some(2.0), "explicit flag beats the file");
        assert_eq!(merged.threads, Some(4));
    }

    #[test]
    fn classify_exit_zero_on_agreement() {
        let mut a = args(&[("family", "euclidean-general"), ("a", "1"), ("b", "3")]);
        let dir = tempfile::tempdir().unwrap();
        a.out = Some(dir.path().join("report.json"));
        let code = cmd_classify(&a).unwrap();
        assert_eq!(code, 0);
        let text = fs::read_to_string(a.out.as_ref().unwrap()).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["agreement"], Value::Bool(true));
        assert_eq!(v["predicted"][0], "spacelike");
    }

    #[test]
    fn characteristic_requires_a_straight_line() {
        // all-spacelike surface: no lightlike part at all
        let a = args(&[("family", "euclidean-general"), ("a", "1"), ("b", "3")]);
        let e = cmd_characteristic(&a).unwrap_err();
        assert_eq!(e.exit_code(), 4);
    }
}
