//! Command-line front end of `bolalg`, as a library so the acceptance suite
//! can drive it in-process.
//!
//! Exit codes: 0 when every verdict passed and no finding was logged, 1 for a
//! verified failure or finding, 2 for usage and input errors.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use bolalg::algebra::{check_bol, check_lie, check_lts, check_pseudo_derivation, LieAlgebraSpec};
use bolalg::classification::{
    action_on_params, canonical_form_iso, canonical_form_isotopy, isotopy_class,
    isotopy_list_check, orbit_agrees, orbit_search, printed_display_checks,
    printed_isotopy_representatives, IsoClass, OrbitGrid, ParamsF64,
};
use bolalg::enveloping::{check_enveloping, family_bol, induced_bol, EnvelopingPair};
use bolalg::findings::DisplayCheck;
use bolalg::linalg::rational::{format_rational, parse_rational};
use bolalg::linalg::Rational;
use bolalg::loops::printed::printed_loop_checks;
use bolalg::loops::{
    bol_batch, loop_compose, sample_web, tangent_convergence, write_web_csv, LoopChart, WebGrid,
};
use bolalg::report::{emit_report, ReportFormat, RunReport, Timing, Verdict};
use bolalg::specfile::{emit_algebra, parse_algebra};
use bolalg::{Sign, SubalgebraParams};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

const BOL_TOL: f64 = 1e-8;
const WEB_TOL: f64 = 1e-12;
const ORBIT_TOL: f64 = 1e-8;

#[derive(Parser)]
#[command(
    name = "bolalg",
    version,
    about = "Verify three-dimensional Bol algebras of type V and their loops"
)]
struct Cli {
    /// Seed for every random sample (ChaCha8).
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Append wall-clock timings (makes output run-dependent).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct Params {
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
    sign: Sign,
    #[arg(long, value_parser = parse_q, allow_hyphen_values = true, default_value = "0")]
    x: Rational,
    #[arg(long, value_parser = parse_q, allow_hyphen_values = true, default_value = "0")]
    y: Rational,
    #[arg(long, value_parser = parse_q, allow_hyphen_values = true, default_value = "0")]
    z: Rational,
}

impl Params {
    fn subalgebra(&self) -> SubalgebraParams {
        SubalgebraParams::new(self.sign, self.x.clone(), self.y.clone(), self.z.clone())
    }

    fn to_json(&self) -> Value {
        json!({
            "sign": self.sign.as_str(),
            "x": format_rational(&self.x),
            "y": format_rational(&self.y),
            "z": format_rational(&self.z),
        })
    }
}

#[derive(Args, Clone)]
struct ChartArgs {
    /// minus1, minus2, plus1 or plus2.
    #[arg(long)]
    chart: String,
    /// `y` of the case-2 charts.
    #[arg(long, allow_hyphen_values = true)]
    y: Option<f64>,
}

impl ChartArgs {
    fn chart(&self) -> Result<LoopChart, String> {
        LoopChart::parse(&self.chart, self.y).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of an algebra file.
    Verify { file: PathBuf },
    /// Write the algebra induced by the line h_{x,y,z}.
    Family {
        #[command(flatten)]
        params: Params,
        /// Write the file here and print a report instead of the file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Isomorphism class with an exact witness.
    Classify {
        #[command(flatten)]
        params: Params,
    },
    /// Isotopy class with orbit-search evidence.
    IsotopyClassify {
        #[command(flatten)]
        params: Params,
    },
    /// Check the enveloping pair and the algebra it induces.
    Envelope {
        #[command(flatten)]
        params: Params,
    },
    /// Left Bol residual statistics over random triples.
    BolCheck {
        #[command(flatten)]
        chart: ChartArgs,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0.1)]
        radius: f64,
    },
    /// Recover the bilinear operation from the loop by finite differences.
    TangentCheck {
        #[command(flatten)]
        chart: ChartArgs,
        #[arg(long, default_value_t = 1e-3)]
        eps: f64,
        #[arg(long, default_value_t = 4)]
        halvings: usize,
    },
    /// Sample the 3-web on a lattice and write CSV.
    WebSample {
        #[command(flatten)]
        chart: ChartArgs,
        /// Points per axis; the lattice has grid³ points and grid⁶ rows.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=8))]
        grid: u64,
        #[arg(long, default_value_t = 0.1)]
        radius: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare every printed closed form with the computation.
    Displays,
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    s.parse()
}

fn parse_q(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Error that maps to exit code 2.
struct UsageError(String);

impl From<String> for UsageError {
    fn from(s: String) -> Self {
        UsageError(s)
    }
}

struct Stages {
    enabled: bool,
    last: Instant,
    out: Vec<Timing>,
}

impl Stages {
    fn new(enabled: bool) -> Self {
        Stages {
            enabled,
            last: Instant::now(),
            out: Vec::new(),
        }
    }

    fn mark(&mut self, stage: &str) {
        let now = Instant::now();
        self.out.push(Timing {
            stage: stage.to_string(),
            seconds: (now - self.last).as_secs_f64(),
        });
        self.last = now;
    }

    fn finish(self) -> Option<Vec<Timing>> {
        self.enabled.then_some(self.out)
    }
}

fn digest(command: &str, inputs: &Value, extra: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(command.as_bytes());
    h.update([0]);
    h.update(inputs.to_string().as_bytes());
    h.update([0]);
    h.update(extra);
    hex::encode(h.finalize())
}

fn triple(p: &SubalgebraParams) -> String {
    format!(
        "({},{},{})",
        format_rational(&p.x),
        format_rational(&p.y),
        format_rational(&p.z)
    )
}

fn push_finding(report: &mut RunReport, check: DisplayCheck) {
    if let Some(f) = check.as_finding() {
        report.findings.push(f);
    }
}

enum Outcome {
    Report(RunReport),
    Raw(String),
}

fn run(cli: &Cli, stages: &mut Stages) -> Result<Outcome, UsageError> {
    let seed = cli.seed;
    let out = match &cli.command {
        Command::Verify { file } => {
            let text = fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
            let alg = parse_algebra(&text).map_err(|e| format!("{}: {e}", file.display()))?;
            stages.mark("parse");
            let inputs = json!({ "file": file.display().to_string() });
            let mut r = RunReport::new(
                "verify",
                inputs.clone(),
                digest("verify", &inputs, text.as_bytes()),
            );
            let info = json!({ "label": alg.label, "dim": alg.dim() });
            if alg.trilinear.is_zero() && !alg.bilinear.is_zero() {
                let lie = LieAlgebraSpec::new(alg.label.clone(), alg.bilinear.clone());
                let rep = check_lie(&lie);
                r.verdicts.push(Verdict::new(
                    "lie",
                    rep.passed(),
                    json!({ "algebra": info, "report": rep }),
                ));
            } else {
                let lts = check_lts(&alg);
                r.verdicts.push(Verdict::new(
                    "lts",
                    lts.passed(),
                    json!({ "algebra": info, "report": lts }),
                ));
                let bol = check_bol(&alg);
                r.verdicts.push(Verdict::new("bol", bol.passed(), &bol));
                if !alg.bilinear.is_zero() {
                    let pd = check_pseudo_derivation(&alg);
                    let data = json!({
                        "bilinear_skew": pd.bilinear_skew,
                        "pseudo_derivation": pd.pseudo_derivation,
                        "derivation": pd.derivation,
                        "failures": pd.failures,
                    });
                    r.verdicts
                        .push(Verdict::new("pseudo-derivation", pd.passed(), data));
                }
            }
            stages.mark("check");
            Outcome::Report(r)
        }
        Command::Family { params, out } => {
            let mut alg = family_bol(&params.subalgebra());
            alg.label = format!("type-V {} {}", params.sign, triple(&params.subalgebra()));
            let text = emit_algebra(&alg);
            match out {
                None => Outcome::Raw(text),
                Some(path) => {
                    fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
                    let inputs =
                        json!({ "params": params.to_json(), "out": path.display().to_string() });
                    let mut r =
                        RunReport::new("family", inputs.clone(), digest("family", &inputs, &[]));
                    let bol = check_bol(&alg);
                    r.verdicts.push(Verdict::new(
                        "bol",
                        bol.passed(),
                        json!({ "label": alg.label }),
                    ));
                    stages.mark("family");
                    Outcome::Report(r)
                }
            }
        }
        Command::Classify { params } => {
            let s = params.subalgebra();
            let inputs = params.to_json();
            let mut r =
                RunReport::new("classify", inputs.clone(), digest("classify", &inputs, &[]));
            let (label, w) = canonical_form_iso(&s);
            let rep = label.representative();
            let ok = action_on_params(&w, &s).is_ok_and(|img| img == rep);
            let data = json!({
                "class": label.kind(),
                "representative": triple(&rep),
                "witness": {
                    "b": format_rational(&w.b),
                    "f": format_rational(&w.f),
                    "d": format_rational(&w.d),
                    "eps": w.eps,
                },
            });
            r.verdicts.push(Verdict::new("witness", ok, data));
            if label.class == IsoClass::XCase {
                if let Some(c) = printed_display_checks()
                    .into_iter()
                    .find(|c| c.id == "iso-x-class")
                {
                    push_finding(&mut r, c);
                }
            }
            stages.mark("classify");
            Outcome::Report(r)
        }
        Command::IsotopyClassify { params } => {
            let s = params.subalgebra();
            let inputs = params.to_json();
            let mut r = RunReport::new(
                "isotopy-classify",
                inputs.clone(),
                digest("isotopy-classify", &inputs, &[]),
            );
            let red = canonical_form_isotopy(&s).map_err(|e| e.to_string());
            match red {
                Ok(red) => {
                    let data = json!({
                        "class": red.class,
                        "representative": triple(&red.class.representative(s.sign)),
                        "xi": red.xi,
                        "residual": red.residual,
                    });
                    r.verdicts
                        .push(Verdict::new("reduction", red.residual < ORBIT_TOL, data));
                }
                Err(e) => r
                    .verdicts
                    .push(Verdict::new("reduction", false, json!({ "error": e }))),
            }
            stages.mark("canonical-form");
            let reached = orbit_search(&ParamsF64::from(&s), &OrbitGrid::default());
            let data = json!({ "exact_class": isotopy_class(&s), "reached": reached });
            r.verdicts.push(Verdict::new(
                "orbit-agreement",
                orbit_agrees(&s, &reached),
                data,
            ));
            stages.mark("orbit-search");
            let class = isotopy_class(&s);
            if !printed_isotopy_representatives(s.sign)
                .iter()
                .any(|p| isotopy_class(p) == class)
            {
                push_finding(&mut r, isotopy_list_check(s.sign));
            }
            Outcome::Report(r)
        }
        Command::Envelope { params } => {
            let s = params.subalgebra();
            let inputs = params.to_json();
            let mut r =
                RunReport::new("envelope", inputs.clone(), digest("envelope", &inputs, &[]));
            let pair = EnvelopingPair::family(&s);
            let env = check_enveloping(&pair);
            r.verdicts.push(Verdict::new(
                "enveloping",
                env.passed(),
                json!({ "report": env, "derived_dim": pair.derived_dim() }),
            ));
            match induced_bol(&pair) {
                Ok(alg) => {
                    let same = alg.same_operations(&family_bol(&s));
                    r.verdicts
                        .push(Verdict::new("induced-matches-family", same, Value::Null));
                    let bol = check_bol(&alg);
                    r.verdicts
                        .push(Verdict::new("induced-bol", bol.passed(), &bol));
                }
                Err(e) => r.verdicts.push(Verdict::new(
                    "induced-matches-family",
                    false,
                    json!({ "error": e.to_string() }),
                )),
            }
            stages.mark("envelope");
            Outcome::Report(r)
        }
        Command::BolCheck {
            chart,
            samples,
            radius,
        } => {
            let c = chart.chart()?;
            if !(*radius > 0.0 && *radius <= c.radius) {
                return Err(UsageError(format!("--radius must be in (0, {}]", c.radius)));
            }
            let inputs =
                json!({ "chart": c.name(), "samples": samples, "radius": radius, "seed": seed });
            let mut r = RunReport::new(
                "bol-check",
                inputs.clone(),
                digest("bol-check", &inputs, &[]),
            );
            let stats = bol_batch(&c, *samples as usize, *radius, seed);
            r.verdicts
                .push(Verdict::new("left-bol", stats.passed(BOL_TOL), &stats));
            stages.mark("bol-batch");
            Outcome::Report(r)
        }
        Command::TangentCheck {
            chart,
            eps,
            halvings,
        } => {
            let c = chart.chart()?;
            if !(1e-4..=1e-1).contains(eps) {
                return Err(UsageError("--eps must be in [1e-4, 1e-1]".into()));
            }
            let inputs = json!({ "chart": c.name(), "eps": eps, "halvings": halvings });
            let mut r = RunReport::new(
                "tangent-check",
                inputs.clone(),
                digest("tangent-check", &inputs, &[]),
            );
            for i in 0..3 {
                for j in 0..3 {
                    if i == j {
                        continue;
                    }
                    let name = format!("e{}.e{}", i + 1, j + 1);
                    let v = match tangent_convergence(&c, i, j, *eps, *halvings) {
                        Ok(t) => Verdict::new(name, t.passed(1.0, 1e-3), &t),
                        Err(e) => Verdict::new(name, false, json!({ "error": e.to_string() })),
                    };
                    r.verdicts.push(v);
                }
            }
            stages.mark("tangent");
            Outcome::Report(r)
        }
        Command::WebSample {
            chart,
            grid,
            radius,
            out,
        } => {
            let c = chart.chart()?;
            if !(*radius >= 0.0 && *radius <= c.radius) {
                return Err(UsageError(format!("--radius must be in [0, {}]", c.radius)));
            }
            let g = WebGrid {
                n: *grid as usize,
                radius: *radius,
            };
            let inputs = json!({ "chart": c.name(), "grid": g, "out": out.display().to_string() });
            let mut r = RunReport::new(
                "web-sample",
                inputs.clone(),
                digest("web-sample", &inputs, &[]),
            );
            match sample_web(&c, &g) {
                Ok(rows) => {
                    stages.mark("sample");
                    let mut buf = Vec::new();
                    write_web_csv(&rows, &mut buf).expect("writing to memory");
                    fs::write(out, buf).map_err(|e| format!("{}: {e}", out.display()))?;
                    let mut max = 0.0f64;
                    for row in &rows {
                        let again = loop_compose(&row.a, &row.b, &c)
                            .map(|p| p.dist(&row.ab))
                            .unwrap_or(f64::INFINITY);
                        max = max.max(again);
                    }
                    let data = json!({ "rows": rows.len(), "max_recompute_deviation": max });
                    r.verdicts
                        .push(Verdict::new("self-consistency", max <= WEB_TOL, data));
                    stages.mark("recompute");
                }
                Err(e) => r.verdicts.push(Verdict::new(
                    "sample",
                    false,
                    json!({ "error": e.to_string() }),
                )),
            }
            Outcome::Report(r)
        }
        Command::Displays => {
            let inputs = json!({});
            let mut r =
                RunReport::new("displays", inputs.clone(), digest("displays", &inputs, &[]));
            let mut checks = printed_display_checks();
            checks.extend(printed_loop_checks());
            stages.mark("displays");
            let matched = checks.iter().filter(|c| c.is_matched()).count();
            let data = json!({ "displays": checks.len(), "matched": matched, "findings": checks.len() - matched });
            r.verdicts
                .push(Verdict::new("every-display-accounted", true, data));
            for c in checks {
                push_finding(&mut r, c);
            }
            Outcome::Report(r)
        }
    };
    Ok(out)
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (program name first) and run the command. Nothing is
/// printed; the binary forwards the captured streams.
pub fn run_cli<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return CliOutput {
                code: e.exit_code(),
                stdout,
                stderr,
            };
        }
    };
    let mut stages = Stages::new(cli.timings);
    match run(&cli, &mut stages) {
        Err(UsageError(msg)) => CliOutput {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Ok(Outcome::Raw(text)) => CliOutput {
            code: 0,
            stdout: text,
            stderr: String::new(),
        },
        Ok(Outcome::Report(mut r)) => {
            r.timings = stages.finish();
            let format = match cli.format {
                Format::Text => ReportFormat::Text,
                Format::Json => ReportFormat::Json,
            };
            CliOutput {
                code: r.exit_code(),
                stdout: emit_report(&r, format),
                stderr: String::new(),
            }
        }
    }
}
