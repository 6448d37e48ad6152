//! Command-line surface binding the analysis layers into reproducible runs.

mod scenario;
mod verify;

use clap::{Args, Parser, Subcommand};
use gaudin::figure::{emit_figure, to_json_string, FigureData, FigureFormat};
use gaudin::linear::{self, Side};
use gaudin::model::{FixedPoint, ModelParams};
use gaudin::momentum;
use gaudin::normal_form::{self, CoefficientSource};
use scenario::load_scenario;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_DOMAIN: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_SCHEMA: u8 = 65;

#[derive(Parser)]
#[command(
    name = "gaudin",
    about = "Generalized coupled angular momenta: Hopf bifurcations and momentum-map images",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ScenarioArg {
    /// Fixture name (in the scenario directory) or path to a scenario file
    #[arg(long)]
    scenario: String,
    /// Override the scenario's t4
    #[arg(long)]
    t4: Option<f64>,
}

impl ScenarioArg {
    fn params(&self) -> Result<(String, ModelParams), u8> {
        let sc = load_scenario(&self.scenario).map_err(|e| {
            eprintln!("scenario error: {e}");
            EXIT_SCHEMA
        })?;
        let mut p = sc.model_params().map_err(|e| {
            eprintln!("scenario error: {e}");
            EXIT_SCHEMA
        })?;
        if let Some(t4) = self.t4 {
            p.t4 = t4;
        }
        Ok((sc.name, p))
    }

    fn scenario(&self) -> Result<scenario::Scenario, u8> {
        load_scenario(&self.scenario).map_err(|e| {
            eprintln!("scenario error: {e}");
            EXIT_SCHEMA
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify rank-0 points by eigenvalue type
    Classify {
        #[command(flatten)]
        scenario: ScenarioArg,
        /// Restrict to one fixed point (m0, m1, m2, m3)
        #[arg(long)]
        point: Option<String>,
    },
    /// Closed-form bifurcation thresholds at m0 or m2
    Thresholds {
        #[command(flatten)]
        scenario: ScenarioArg,
        #[arg(long, default_value = "m0")]
        point: String,
    },
    /// Sixth-order normal-form coefficients along both routes
    NormalForm {
        #[command(flatten)]
        scenario: ScenarioArg,
        #[arg(long, default_value = "m0")]
        point: String,
        #[arg(long, default_value = "plus")]
        side: String,
        /// Coefficient source for the verdict: appendix or lie-series
        #[arg(long, default_value = "lie-series")]
        source: String,
        /// Evaluate at the scenario's t4 instead of substituting the threshold
        #[arg(long)]
        at_current_t4: bool,
    },
    /// Linear unfolding and transversality at a threshold
    Unfold {
        #[command(flatten)]
        scenario: ScenarioArg,
        #[arg(long, default_value = "m0")]
        point: String,
        #[arg(long, default_value = "plus")]
        side: String,
    },
    /// Emit one momentum-map figure
    Image {
        #[command(flatten)]
        scenario: ScenarioArg,
        #[arg(long, default_value_t = 1024)]
        resolution: usize,
        #[arg(long, default_value = "svg")]
        format: String,
        /// Output directory
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Grid points for the curve sweep
        #[arg(long, default_value_t = 600)]
        j_samples: usize,
    },
    /// Scan a t4 range for bifurcation events
    Events {
        #[command(flatten)]
        scenario: ScenarioArg,
        /// Range as lo:hi
        #[arg(long, value_name = "LO:HI")]
        t4_range: String,
    },
    /// Emit figures for every t4 in the scenario sweep
    Sweep {
        #[command(flatten)]
        scenario: ScenarioArg,
        #[arg(long, default_value_t = 512)]
        resolution: usize,
        #[arg(long, default_value = "svg")]
        format: String,
        #[arg(long, default_value = "out")]
        out: PathBuf,
        #[arg(long, default_value_t = 400)]
        j_samples: usize,
    },
    /// Cross-validate the closed forms against the Lie-series oracle
    Verify {
        /// Suite: appendix, polyalg, or all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Number of random parameter draws
        #[arg(long, default_value_t = 20)]
        draws: usize,
        /// Relative tolerance for floating comparisons
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
        /// Run the exact-rational checks as well
        #[arg(long)]
        rational: bool,
    },
}

fn parse_point(s: &str) -> Result<FixedPoint, u8> {
    FixedPoint::parse(s).ok_or_else(|| {
        eprintln!("unknown fixed point {s:?}; expected one of m0, m1, m2, m3");
        EXIT_USAGE
    })
}

fn parse_side(s: &str) -> Result<Side, u8> {
    Side::parse(s).ok_or_else(|| {
        eprintln!("unknown side {s:?}; expected plus or minus");
        EXIT_USAGE
    })
}

fn domain(e: gaudin::GaudinError) -> u8 {
    eprintln!("error: {e}");
    EXIT_DOMAIN
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), u8> {
    let s = to_json_string(value).map_err(domain)?;
    print!("{s}");
    Ok(())
}

fn run(cli: Cli) -> Result<(), u8> {
    match cli.command {
        Command::Classify { scenario, point } => {
            let (name, params) = scenario.params()?;
            let points = match point {
                Some(p) => vec![parse_point(&p)?],
                None => FixedPoint::ALL.to_vec(),
            };
            let records: Vec<serde_json::Value> = points
                .iter()
                .map(|&fp| {
                    let c = linear::classify(&params, fp);
                    serde_json::json!({
                        "scenario": name,
                        "point": fp.name(),
                        "t4": params.t4,
                        "class": c.class.name(),
                        "eigenvalues": c.eigenvalues.iter()
                            .map(|z| serde_json::json!({"re": z.re, "im": z.im}))
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            print_json(&records)
        }
        Command::Thresholds { scenario, point } => {
            let (name, params) = scenario.params()?;
            let fp = parse_point(&point)?;
            let th = linear::thresholds(&params, fp).map_err(domain)?;
            print_json(&serde_json::json!({
                "scenario": name,
                "point": fp.name(),
                "t4_minus": th.t4_minus,
                "t4_plus": th.t4_plus,
                "window_realized": th.window_realized,
            }))
        }
        Command::NormalForm { scenario, point, side, source, at_current_t4 } => {
            let (name, params) = scenario.params()?;
            let fp = parse_point(&point)?;
            let side = parse_side(&side)?;
            let source = match source.as_str() {
                "appendix" => CoefficientSource::Appendix,
                "lie-series" => CoefficientSource::LieSeries,
                other => {
                    eprintln!("unknown source {other:?}; expected appendix or lie-series");
                    return Err(EXIT_USAGE);
                }
            };
            let t4 = if at_current_t4 {
                params.t4
            } else {
                normal_form::threshold_t4(&params, fp, side).map_err(domain)?
            };
            let at = params.with_t4(t4);
            let raw = normal_form::raw_coefficients_at(&at, fp, side).map_err(domain)?;
            let scaled = normal_form::scale(&raw).map_err(domain)?;
            let gen = normal_form::generating_coefficients_at(&at, fp, side).map_err(domain)?;
            let run = normal_form::lie_series_normal_form(&at, fp, side, 6).map_err(domain)?;
            let crit =
                normal_form::classify_criticality(&params, fp, side, source).map_err(domain)?;
            print_json(&serde_json::json!({
                "scenario": name,
                "point": fp.name(),
                "side": side.name(),
                "t4": t4,
                "source": source.name(),
                "raw": {"a_tilde": raw.a_tilde, "b": raw.b},
                "scaled": {"a": scaled.a},
                "generating": {"e": gen.e, "f": gen.f},
                "lie_series": {
                    "raw": {"a_tilde": run.raw.a_tilde, "b": run.raw.b},
                    "scaled": {"a": run.scaled.a},
                    "generating": {"e": run.generating.e, "f": run.generating.f},
                },
                "criticality": crit,
                "residuals": {
                    "non_normal_form": run.residual,
                    "odd_degree": run.odd_degree_residual,
                },
                "conventions": {
                    "closed_form_a3_ratio": normal_form::CLOSED_FORM_A3_RATIO,
                    "generating_ratio": normal_form::GENERATING_RATIO,
                },
            }))
        }
        Command::Unfold { scenario, point, side } => {
            let (name, params) = scenario.params()?;
            let fp = parse_point(&point)?;
            let side = parse_side(&side)?;
            let u = linear::unfolding(&params, fp, side).map_err(domain)?;
            print_json(&serde_json::json!({
                "scenario": name,
                "unfolding": u,
            }))
        }
        Command::Image { scenario, resolution, format, out, j_samples } => {
            let (name, params) = scenario.params()?;
            let format = FigureFormat::parse(&format).ok_or_else(|| {
                eprintln!("unknown format; expected svg, csv, or json");
                EXIT_USAGE
            })?;
            let data = build_figure(&name, &params, resolution, j_samples)?;
            std::fs::create_dir_all(&out).map_err(|e| domain(e.into()))?;
            let path = out.join(format!("{name}_t4_{}.{}", fmt_t4(params.t4), format.extension()));
            emit_figure(&data, format, &path).map_err(domain)?;
            print_json(&serde_json::json!({
                "written": path.display().to_string(),
                "segments": data.curves.segments.len(),
                "hyperbolic_segments": data.curves.hyperbolic_segment_count(),
                "cusps": data.curves.cusps.len(),
            }))
        }
        Command::Events { scenario, t4_range } => {
            let (name, params) = scenario.params()?;
            let (lo, hi) = parse_range(&t4_range)?;
            let events = momentum::detect_events(&params, lo, hi).map_err(domain)?;
            print_json(&serde_json::json!({
                "scenario": name,
                "t4_range": [lo, hi],
                "events": events,
            }))
        }
        Command::Sweep { scenario, resolution, format, out, j_samples } => {
            let sc = scenario.scenario()?;
            let (name, params) = scenario.params()?;
            let format = FigureFormat::parse(&format).ok_or_else(|| {
                eprintln!("unknown format; expected svg, csv, or json");
                EXIT_USAGE
            })?;
            if sc.t4_sweep.is_empty() {
                eprintln!("scenario {name} has no t4_sweep");
                return Err(EXIT_DOMAIN);
            }
            std::fs::create_dir_all(&out).map_err(|e| domain(e.into()))?;
            let mut written = Vec::new();
            for &t4 in &sc.t4_sweep {
                let p = params.with_t4(t4);
                let data = build_figure(&name, &p, resolution, j_samples)?;
                let path = out.join(format!("{name}_t4_{}.{}", fmt_t4(t4), format.extension()));
                emit_figure(&data, format, &path).map_err(domain)?;
                written.push(path.display().to_string());
            }
            print_json(&serde_json::json!({"written": written}))
        }
        Command::Verify { suite, draws, tolerance, rational } => {
            let report = verify::run_suite(&suite, draws, tolerance, rational).map_err(|e| {
                eprintln!("error: {e}");
                EXIT_DOMAIN
            })?;
            print_json(&report)?;
            if report.failed == 0 {
                Ok(())
            } else {
                Err(EXIT_VERIFY)
            }
        }
    }
}

fn fmt_t4(t4: f64) -> String {
    format!("{t4:.6}").replace('-', "m").replace('.', "p")
}

fn parse_range(s: &str) -> Result<(f64, f64), u8> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 2 {
        eprintln!("range must be lo:hi, got {s:?}");
        return Err(EXIT_USAGE);
    }
    let lo: f64 = parts[0].parse().map_err(|_| {
        eprintln!("bad range endpoint {:?}", parts[0]);
        EXIT_USAGE
    })?;
    let hi: f64 = parts[1].parse().map_err(|_| {
        eprintln!("bad range endpoint {:?}", parts[1]);
        EXIT_USAGE
    })?;
    if !(lo < hi) {
        eprintln!("range must satisfy lo < hi");
        return Err(EXIT_USAGE);
    }
    Ok((lo, hi))
}

fn build_figure(
    name: &str,
    params: &ModelParams,
    resolution: usize,
    j_samples: usize,
) -> Result<FigureData, u8> {
    let occupancy = momentum::sample_image(params, resolution).map_err(domain)?;
    let curves = if params.t3 != 0.0 {
        let span = params.r1 + params.r2;
        let margin = 1e-3 * span;
        let n = j_samples.max(16);
        let grid: Vec<f64> = (0..=n)
            .map(|i| -span + margin + (2.0 * span - 2.0 * margin) * i as f64 / n as f64)
            .collect();
        momentum::trace_curves(params, &grid).map_err(domain)?
    } else {
        Default::default()
    };
    Ok(FigureData {
        occupancy: Some(occupancy),
        curves,
        events: Vec::new(),
        title: format!("{name} at t4 = {}", params.t4),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::from(EXIT_OK);
            }
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(code) => ExitCode::from(code),
    }
}
