//! Command-line front end for the teleportation toolkit: one-shot fidelity
//! records, fidelity sweeps over squeezing grids, Bell-angle optimization,
//! resource diagnostics, pump planning for the cascade scheme, and plot-ready
//! figure tables.
//!
//! Records are emitted as JSON, tables as CSV; every number carries 12
//! significant digits and identical invocations produce byte-identical
//! output. File outputs get a `<out>.meta.json` sidecar with the resolved
//! parameters and convention flags.

mod config;
mod figures;
mod output;

use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cvtelep::{
    build_resource, delta_closed_form, fidelity, fidelity_quadrature, metric_report,
    optimize_delta, overlap, simulate_cascade, solve_pump_amplitudes, suggested_cutoff, sweep,
    Error, InputSpec, Method, ResourceSpec, SearchMethod, SqueezeParam, WEAK_PUMP_LIMIT,
};
use num_complex::Complex64 as C64;
use serde_json::{json, Map, Value};

use config::FileConfig;
use output::{fmt12, json_num, write_csv, write_record};

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Compute(Error),
    Io(std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Compute(err) => match err {
                Error::Convergence { .. } | Error::NoConvergence { .. } => 3,
                _ => 2,
            },
            CliError::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "{msg}"),
            CliError::Compute(err) => write!(f, "{err}"),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Compute(err)
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

#[derive(Parser)]
#[command(
    name = "cvtelep",
    version,
    about = "Continuous-variable teleportation with non-Gaussian two-mode resources: \
             fidelities, Bell-angle optimization, diagnostics, generation planning, \
             and figure data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Teleportation fidelity for one input/resource pair (JSON record).
    Fidelity(FidelityArgs),
    /// Fidelity table over inputs x resources x a squeezing grid (CSV).
    Sweep(SweepArgs),
    /// Best Bell superposition angle for an input at fixed squeezing (JSON record).
    Optimize(OptimizeArgs),
    /// Entanglement, non-Gaussianity, and squeezed-vacuum affinity of a resource (JSON record).
    Metrics(MetricsArgs),
    /// Pump amplitudes and heralded-state check for the cascade scheme (JSON record).
    Plan(PlanArgs),
    /// Plot-ready data behind one of the standard figures (CSV).
    Figure(FigureArgs),
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Flat JSON file supplying defaults for any flag; explicit flags win.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Output file; stdout when omitted. File outputs get a <out>.meta.json sidecar.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Output format: json for single records, csv for tables.
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args)]
struct FidelityArgs {
    /// Input state: coherent | squeezed-vacuum | fock1 | photon-added-coherent | squeezed-fock1.
    #[arg(long)]
    input: Option<String>,
    /// Resource: twin-beam | squeezed-number | photon-added | photon-subtracted | squeezed-bell.
    #[arg(long)]
    resource: Option<String>,
    /// Resource squeezing modulus.
    #[arg(long)]
    r: Option<f64>,
    /// Resource squeezing phase (default pi).
    #[arg(long)]
    phi: Option<f64>,
    /// Bell superposition angle, squeezed-bell resource only (default pi/4).
    #[arg(long)]
    delta: Option<f64>,
    /// Bell superposition phase, squeezed-bell resource only (default 0).
    #[arg(long)]
    theta: Option<f64>,
    /// Coherent amplitude for coherent-type inputs (default 0.3).
    #[arg(long)]
    beta: Option<f64>,
    /// Input squeezing modulus for squeezed-type inputs (default 0.8).
    #[arg(long)]
    s: Option<f64>,
    /// Input squeezing phase (default 0).
    #[arg(long)]
    varphi: Option<f64>,
    /// Evaluation method: closed-form | quadrature.
    #[arg(long)]
    method: Option<String>,
    /// Quadrature error tolerance (default 1e-8).
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated input names, or "all".
    #[arg(long)]
    input: Option<String>,
    /// Comma-separated resource names, or "all".
    #[arg(long)]
    resource: Option<String>,
    /// Squeezing grid: "start:stop:step" or comma-separated values.
    #[arg(long)]
    grid: Option<String>,
    /// Resource squeezing phase (default pi).
    #[arg(long)]
    phi: Option<f64>,
    /// Bell superposition angle for squeezed-bell templates (default pi/4).
    #[arg(long)]
    delta: Option<f64>,
    /// Bell superposition phase for squeezed-bell templates (default 0).
    #[arg(long)]
    theta: Option<f64>,
    /// Coherent amplitude for coherent-type inputs (default 0.3).
    #[arg(long)]
    beta: Option<f64>,
    /// Input squeezing modulus for squeezed-type inputs (default 0.8).
    #[arg(long)]
    s: Option<f64>,
    /// Input squeezing phase (default 0).
    #[arg(long)]
    varphi: Option<f64>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct OptimizeArgs {
    /// Input state: coherent | squeezed-vacuum | fock1 | photon-added-coherent | squeezed-fock1.
    #[arg(long)]
    input: Option<String>,
    /// Resource squeezing modulus.
    #[arg(long)]
    r: Option<f64>,
    /// Resource squeezing phase (default pi).
    #[arg(long)]
    phi: Option<f64>,
    /// Bell superposition phase held fixed during the search (default 0).
    #[arg(long)]
    theta: Option<f64>,
    /// Coherent amplitude for coherent-type inputs (default 0.3).
    #[arg(long)]
    beta: Option<f64>,
    /// Input squeezing modulus for squeezed-type inputs (default 0.8).
    #[arg(long)]
    s: Option<f64>,
    /// Input squeezing phase (default 0).
    #[arg(long)]
    varphi: Option<f64>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct MetricsArgs {
    /// Resource: twin-beam | squeezed-number | photon-added | photon-subtracted | squeezed-bell.
    #[arg(long)]
    resource: Option<String>,
    /// Resource squeezing modulus.
    #[arg(long)]
    r: Option<f64>,
    /// Resource squeezing phase (default pi).
    #[arg(long)]
    phi: Option<f64>,
    /// Bell superposition angle, squeezed-bell resource only (default pi/4).
    #[arg(long)]
    delta: Option<f64>,
    /// Bell superposition phase, squeezed-bell resource only (default 0).
    #[arg(long)]
    theta: Option<f64>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct PlanArgs {
    /// Target resource family (default squeezed-bell).
    #[arg(long)]
    resource: Option<String>,
    /// Target squeezing modulus.
    #[arg(long)]
    r: Option<f64>,
    /// Target squeezing phase (default pi).
    #[arg(long)]
    phi: Option<f64>,
    /// Bell superposition angle of the target (default pi/4).
    #[arg(long)]
    delta: Option<f64>,
    /// Bell superposition phase of the target (default 0).
    #[arg(long)]
    theta: Option<f64>,
    /// Weak-pump gain the larger pump amplitude is scaled to (default 0.01).
    #[arg(long)]
    gain: Option<f64>,
    /// Fock cutoff for the heralded-state check (default chosen from r).
    #[arg(long)]
    cutoff: Option<usize>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct FigureArgs {
    /// Figure id: fig1 | fig2 | fig3 | fig4 | fig5 | fig6 | fig7_deltaF | fig8 | fig9_affinity.
    id: String,
    #[command(flatten)]
    common: CommonArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Fidelity(args) => cmd_fidelity(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Optimize(args) => cmd_optimize(args),
        Command::Metrics(args) => cmd_metrics(args),
        Command::Plan(args) => cmd_plan(args),
        Command::Figure(args) => cmd_figure(args),
    }
}

fn missing(name: &str) -> CliError {
    CliError::Config(format!(
        "missing required parameter: {name} (flag --{name} or config key \"{name}\")"
    ))
}

fn input_spec(name: &str, beta: f64, s: f64, varphi: f64) -> Result<InputSpec, CliError> {
    let spec = match name {
        "coherent" => InputSpec::Coherent { beta: C64::new(beta, 0.0) },
        "squeezed-vacuum" => InputSpec::SqueezedVacuum { s, varphi },
        "fock1" => InputSpec::Fock1,
        "photon-added-coherent" => InputSpec::PhotonAddedCoherent { beta: C64::new(beta, 0.0) },
        "squeezed-fock1" => InputSpec::SqueezedFock1 { s, varphi },
        other => {
            return Err(CliError::Config(format!(
                "unknown input state {other:?}; expected coherent, squeezed-vacuum, fock1, \
                 photon-added-coherent, or squeezed-fock1"
            )))
        }
    };
    spec.validate()?;
    Ok(spec)
}

fn resource_spec(
    name: &str,
    r: f64,
    phi: f64,
    delta: f64,
    theta: f64,
) -> Result<ResourceSpec, CliError> {
    let zeta = SqueezeParam::new(r, phi)?;
    Ok(match name {
        "twin-beam" => ResourceSpec::TwinBeam { zeta },
        "squeezed-number" => ResourceSpec::SqueezedNumber { zeta },
        "photon-added" => ResourceSpec::PhotonAdded { zeta },
        "photon-subtracted" => ResourceSpec::PhotonSubtracted { zeta },
        "squeezed-bell" => ResourceSpec::SqueezedBell { zeta, delta, theta },
        other => {
            return Err(CliError::Config(format!(
                "unknown resource {other:?}; expected twin-beam, squeezed-number, photon-added, \
                 photon-subtracted, or squeezed-bell"
            )))
        }
    })
}

fn resolve_out(common: &CommonArgs, file: &FileConfig) -> Option<PathBuf> {
    common.out.clone().or_else(|| file.out.as_ref().map(PathBuf::from))
}

fn check_format(
    common: &CommonArgs,
    file: &FileConfig,
    natural: &str,
    command: &str,
) -> Result<(), CliError> {
    match common.format.as_deref().or(file.format.as_deref()) {
        None => Ok(()),
        Some(f) if f.eq_ignore_ascii_case(natural) => Ok(()),
        Some(other) => Err(CliError::Config(format!(
            "{command} emits {natural} output, got format {other:?}"
        ))),
    }
}

fn conventions() -> Value {
    json!({
        "vacuum_covariance": "identity/2",
        "entropy_units": "nats",
        "default_resource_phase": "pi",
        "significant_digits": 12
    })
}

fn meta(command: &str, parameters: Map<String, Value>) -> Value {
    json!({
        "command": command,
        "parameters": Value::Object(parameters),
        "conventions": conventions(),
    })
}

fn method_name(method: Method) -> String {
    match method {
        Method::ClosedForm => "closed-form".into(),
        Method::Quadrature { grid } => format!("quadrature({grid})"),
    }
}

fn search_name(method: SearchMethod) -> &'static str {
    match method {
        SearchMethod::GridRefine => "grid-refine",
        SearchMethod::ClosedForm => "closed-form",
    }
}

fn parse_grid(text: &str) -> Result<Vec<f64>, CliError> {
    let bad = |msg: String| CliError::Config(msg);
    let values: Vec<f64> = if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(bad(format!(
                "grid {text:?} must be start:stop:step or a comma-separated list"
            )));
        }
        let nums: Vec<f64> = parts
            .iter()
            .map(|p| {
                p.trim()
                    .parse::<f64>()
                    .map_err(|_| bad(format!("grid entry {p:?} is not a number")))
            })
            .collect::<Result<_, _>>()?;
        let (start, stop, step) = (nums[0], nums[1], nums[2]);
        if step.is_nan() || step <= 0.0 || stop < start {
            return Err(bad(format!(
                "grid {text:?} needs stop >= start and step > 0"
            )));
        }
        let n = ((stop - start) / step + 1e-9).floor() as usize;
        (0..=n).map(|i| start + i as f64 * step).collect()
    } else {
        text.split(',')
            .map(|t| {
                t.trim()
                    .parse::<f64>()
                    .map_err(|_| bad(format!("grid entry {t:?} is not a number")))
            })
            .collect::<Result<_, _>>()?
    };
    if values.is_empty() {
        return Err(bad("grid must not be empty".into()));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(bad("grid values must be finite".into()));
    }
    Ok(values)
}

fn cmd_fidelity(args: FidelityArgs) -> Result<(), CliError> {
    let file = config::load(args.common.config.as_deref())?;
    let input_name = args.input.or_else(|| file.input.clone()).ok_or_else(|| missing("input"))?;
    let resource_name =
        args.resource.or_else(|| file.resource.clone()).ok_or_else(|| missing("resource"))?;
    let r = args.r.or(file.r).ok_or_else(|| missing("r"))?;
    let phi = args.phi.or(file.phi).unwrap_or(PI);
    let delta = args.delta.or(file.delta).unwrap_or(PI / 4.0);
    let theta = args.theta.or(file.theta).unwrap_or(0.0);
    let beta = args.beta.or(file.beta).unwrap_or(0.3);
    let s = args.s.or(file.s).unwrap_or(0.8);
    let varphi = args.varphi.or(file.varphi).unwrap_or(0.0);
    let method = args.method.or_else(|| file.method.clone()).unwrap_or_else(|| "closed-form".into());
    let tol = args.tol.or(file.tol).unwrap_or(1e-8);
    if tol.is_nan() || tol <= 0.0 {
        return Err(CliError::Config(format!("tolerance must be positive, got {tol}")));
    }
    check_format(&args.common, &file, "json", "fidelity")?;

    let input = input_spec(&input_name, beta, s, varphi)?;
    let resource = resource_spec(&resource_name, r, phi, delta, theta)?;
    let result = match method.as_str() {
        "closed-form" => fidelity(&input, &resource)?,
        "quadrature" => fidelity_quadrature(&input, &resource, tol)?,
        other => {
            return Err(CliError::Config(format!(
                "unknown method {other:?}; expected closed-form or quadrature"
            )))
        }
    };

    let mut record = Map::new();
    record.insert("command".into(), json!("fidelity"));
    record.insert("input".into(), json!(input.label()));
    record.insert("resource".into(), json!(resource.label()));
    record.insert("r".into(), json_num(r));
    record.insert("phi".into(), json_num(phi));
    if matches!(resource, ResourceSpec::SqueezedBell { .. }) {
        record.insert("delta".into(), json_num(delta));
        record.insert("theta".into(), json_num(theta));
    }
    record.insert("fidelity".into(), json_num(result.value));
    record.insert("est_error".into(), json_num(result.est_error));
    record.insert("method".into(), json!(method_name(result.method)));
    record.insert("envelope_ok".into(), json!(result.envelope_ok));

    let mut params = record.clone();
    params.insert("tol".into(), json_num(tol));
    write_record(record, resolve_out(&args.common, &file).as_deref(), meta("fidelity", params))
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let file = config::load(args.common.config.as_deref())?;
    let input_names = args.input.or_else(|| file.input.clone()).unwrap_or_else(|| "all".into());
    let resource_names =
        args.resource.or_else(|| file.resource.clone()).unwrap_or_else(|| "all".into());
    let grid_text = args.grid.or_else(|| file.grid.clone()).ok_or_else(|| missing("grid"))?;
    let phi = args.phi.or(file.phi).unwrap_or(PI);
    let delta = args.delta.or(file.delta).unwrap_or(PI / 4.0);
    let theta = args.theta.or(file.theta).unwrap_or(0.0);
    let beta = args.beta.or(file.beta).unwrap_or(0.3);
    let s = args.s.or(file.s).unwrap_or(0.8);
    let varphi = args.varphi.or(file.varphi).unwrap_or(0.0);
    check_format(&args.common, &file, "csv", "sweep")?;

    let all_inputs = ["coherent", "squeezed-vacuum", "fock1", "photon-added-coherent", "squeezed-fock1"];
    let all_resources =
        ["twin-beam", "squeezed-number", "photon-added", "photon-subtracted", "squeezed-bell"];
    let expand = |text: &str, all: &[&str]| -> Vec<String> {
        if text == "all" {
            all.iter().map(|s| s.to_string()).collect()
        } else {
            text.split(',').map(|t| t.trim().to_string()).collect()
        }
    };

    let inputs: Vec<InputSpec> = expand(&input_names, &all_inputs)
        .iter()
        .map(|name| input_spec(name, beta, s, varphi))
        .collect::<Result<_, _>>()?;
    let resources: Vec<ResourceSpec> = expand(&resource_names, &all_resources)
        .iter()
        .map(|name| resource_spec(name, 0.0, phi, delta, theta))
        .collect::<Result<_, _>>()?;
    let grid = parse_grid(&grid_text)?;

    let rows = sweep(&inputs, &resources, &grid);
    let headers: Vec<String> =
        ["input", "resource", "r", "fidelity", "error"].map(String::from).to_vec();
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            vec![
                row.input.clone(),
                row.resource.clone(),
                fmt12(row.r),
                row.fidelity.map(fmt12).unwrap_or_default(),
                row.error.clone().unwrap_or_default(),
            ]
        })
        .collect();

    let mut params = Map::new();
    params.insert("input".into(), json!(input_names));
    params.insert("resource".into(), json!(resource_names));
    params.insert("grid".into(), json!(grid_text));
    params.insert("phi".into(), json_num(phi));
    params.insert("delta".into(), json_num(delta));
    params.insert("theta".into(), json_num(theta));
    params.insert("beta".into(), json_num(beta));
    params.insert("s".into(), json_num(s));
    params.insert("varphi".into(), json_num(varphi));
    params.insert("method".into(), json!("closed-form"));
    write_csv(&headers, &table, resolve_out(&args.common, &file).as_deref(), meta("sweep", params))
}

fn cmd_optimize(args: OptimizeArgs) -> Result<(), CliError> {
    let file = config::load(args.common.config.as_deref())?;
    let input_name = args.input.or_else(|| file.input.clone()).ok_or_else(|| missing("input"))?;
    let r = args.r.or(file.r).ok_or_else(|| missing("r"))?;
    let phi = args.phi.or(file.phi).unwrap_or(PI);
    let theta = args.theta.or(file.theta).unwrap_or(0.0);
    let beta = args.beta.or(file.beta).unwrap_or(0.3);
    let s = args.s.or(file.s).unwrap_or(0.8);
    let varphi = args.varphi.or(file.varphi).unwrap_or(0.0);
    check_format(&args.common, &file, "json", "optimize")?;

    let input = input_spec(&input_name, beta, s, varphi)?;
    let zeta = SqueezeParam::new(r, phi)?;
    let opt = optimize_delta(&input, zeta, theta)?;

    let mut record = Map::new();
    record.insert("command".into(), json!("optimize"));
    record.insert("input".into(), json!(input.label()));
    record.insert("r".into(), json_num(r));
    record.insert("phi".into(), json_num(phi));
    record.insert("theta".into(), json_num(theta));
    record.insert("delta_star".into(), json_num(opt.delta_star));
    record.insert("fidelity_star".into(), json_num(opt.fidelity_star));
    record.insert("method".into(), json!(search_name(opt.method)));
    record.insert("iterations".into(), json!(opt.iterations));
    if let Some(exact) = delta_closed_form(&input, r) {
        record.insert("closed_form_delta".into(), json_num(exact));
    }

    let params = record.clone();
    write_record(record, resolve_out(&args.common, &file).as_deref(), meta("optimize", params))
}

fn cmd_metrics(args: MetricsArgs) -> Result<(), CliError> {
    let file = config::load(args.common.config.as_deref())?;
    let resource_name =
        args.resource.or_else(|| file.resource.clone()).ok_or_else(|| missing("resource"))?;
    let r = args.r.or(file.r).ok_or_else(|| missing("r"))?;
    let phi = args.phi.or(file.phi).unwrap_or(PI);
    let delta = args.delta.or(file.delta).unwrap_or(PI / 4.0);
    let theta = args.theta.or(file.theta).unwrap_or(0.0);
    check_format(&args.common, &file, "json", "metrics")?;

    let resource = resource_spec(&resource_name, r, phi, delta, theta)?;
    let report = metric_report(&resource)?;

    let mut record = Map::new();
    record.insert("command".into(), json!("metrics"));
    record.insert("resource".into(), json!(resource.label()));
    record.insert("r".into(), json_num(r));
    record.insert("phi".into(), json_num(phi));
    if matches!(resource, ResourceSpec::SqueezedBell { .. }) {
        record.insert("delta".into(), json_num(delta));
        record.insert("theta".into(), json_num(theta));
    }
    record.insert("entropy".into(), json_num(report.entropy));
    record.insert("non_gaussianity".into(), json_num(report.non_gaussianity));
    record.insert(
        "tb_relative_non_gaussianity".into(),
        json_num(report.tb_relative_non_gaussianity),
    );
    record.insert(
        "nearest_twin_beam".into(),
        json!({
            "r": json_num(report.nearest_twin_beam.r()),
            "phi": json_num(report.nearest_twin_beam.phi()),
        }),
    );
    record.insert("affinity".into(), json_num(report.affinity));
    record.insert("affinity_squeezing".into(), json_num(report.affinity_squeezing));

    let params = record.clone();
    write_record(record, resolve_out(&args.common, &file).as_deref(), meta("metrics", params))
}

fn cmd_plan(args: PlanArgs) -> Result<(), CliError> {
    let file = config::load(args.common.config.as_deref())?;
    let resource_name = args
        .resource
        .or_else(|| file.resource.clone())
        .unwrap_or_else(|| "squeezed-bell".into());
    let r = args.r.or(file.r).ok_or_else(|| missing("r"))?;
    let phi = args.phi.or(file.phi).unwrap_or(PI);
    let delta = args.delta.or(file.delta).unwrap_or(PI / 4.0);
    let theta = args.theta.or(file.theta).unwrap_or(0.0);
    let gain = args.gain.or(file.gain).unwrap_or(0.01);
    check_format(&args.common, &file, "json", "plan")?;

    let target = resource_spec(&resource_name, r, phi, delta, theta)?;
    let plan = solve_pump_amplitudes(&target, gain)?;
    if plan.exceeds_weak_regime() {
        eprintln!(
            "warning: pump scale {} exceeds the weak-pump limit {WEAK_PUMP_LIMIT}; \
             the first-order plan is unreliable",
            fmt12(plan.pump_scale())
        );
    }
    let cutoff = args.cutoff.or(file.cutoff).unwrap_or_else(|| suggested_cutoff(r, 1e-12));
    let (state, herald_weight) = simulate_cascade(&plan, cutoff)?;
    let reference = build_resource(&target, cutoff + 1)?;
    let overlap_sq = overlap(&state, &reference)?.norm_sqr();

    let mut record = Map::new();
    record.insert("command".into(), json!("plan"));
    record.insert(
        "target".into(),
        json!({
            "family": target.label(),
            "r": json_num(r),
            "phi": json_num(phi),
            "delta": json_num(delta),
            "theta": json_num(theta),
        }),
    );
    record.insert(
        "kappa_a".into(),
        json!({"re": json_num(plan.kappa_a.re), "im": json_num(plan.kappa_a.im)}),
    );
    record.insert(
        "kappa_b".into(),
        json!({"re": json_num(plan.kappa_b.re), "im": json_num(plan.kappa_b.im)}),
    );
    record.insert("gain".into(), json_num(gain));
    record.insert("pump_scale".into(), json_num(plan.pump_scale()));
    record.insert("exceeds_weak_regime".into(), json!(plan.exceeds_weak_regime()));
    record.insert("predicted_success_weight".into(), json_num(plan.predicted_success_weight));
    record.insert("herald_weight".into(), json_num(herald_weight));
    record.insert("overlap_sq".into(), json_num(overlap_sq));
    record.insert("cutoff".into(), json!(cutoff));

    let params = record.clone();
    write_record(record, resolve_out(&args.common, &file).as_deref(), meta("plan", params))
}

fn cmd_figure(args: FigureArgs) -> Result<(), CliError> {
    let file = config::load(args.common.config.as_deref())?;
    check_format(&args.common, &file, "csv", "figure")?;
    let out = resolve_out(&args.common, &file)
        .ok_or_else(|| CliError::Config("figure requires --out (or config key \"out\")".into()))?;

    let table = figures::build(&args.id)?;
    let rows: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|row| row.iter().map(|cell| cell.map(fmt12).unwrap_or_default()).collect())
        .collect();
    let mut params = Map::new();
    params.insert("figure".into(), table.meta.clone());
    write_csv(&table.headers, &rows, Some(out.as_path()), meta("figure", params))
}
