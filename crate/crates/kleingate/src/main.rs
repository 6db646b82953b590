//! Command-line front end. Parsing and output formatting only; all physics
//! lives in the library. Exit codes: 0 success, 2 input error, 3 I/O error,
//! 4 numeric failure.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::json;

use kleingate::cascade::{run_cascade, CascadeConfig, SpinHalf};
use kleingate::coupling::{coupling_j, estimate_coupling, DotGeometry, QmcSettings};
use kleingate::error::{Error, Result};
use kleingate::gates::{
    classify_gate, find_sqrt_swap_j, find_swap_j, DEFAULT_TOL_CLASS, DEFAULT_TOL_UNITARY,
};
use kleingate::kinematics::{
    band_gap, incidence_angle, transverse_wavevector, validate_delta_regime, Branch,
    PhysicalConstants, RibbonConfig,
};
use kleingate::manifest::RunManifest;
use kleingate::scattering::{spin_resolved_amplitudes, EnergySign, ScatteringProblem, Spinor2};
use kleingate::sweep::{
    self, figures_preset, run_sweep1d, run_sweep2d, AxisSpec, Sweep1dSpec, Sweep2dSpec,
};

#[derive(Parser)]
#[command(
    name = "kleingate",
    version,
    about = "Klein-tunneling spin gates in graphene nanoribbons: scattering amplitudes, \
             gate classification, coupling estimates, and the two-dot entanglement protocol"
)]
struct Cli {
    /// Optional TOML or JSON config file (schema_version = 1); flags override its values.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Override hbar*v_F in eV·Å (default 6.582).
    #[arg(long, global = true, value_name = "EVA")]
    hbar_vf: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spin-resolved amplitudes, success probability and gate class at one point.
    Amplitudes(AmplitudesArgs),
    /// Sweep incidence angle x coupling; CSV grid plus optional SVG heatmaps.
    Sweep2d(Sweep2dArgs),
    /// Sweep coupling at frontal incidence; CSV plus optional SVG line plot.
    Sweep1d(Sweep1dArgs),
    /// SWAP and sqrt-SWAP couplings: root-finder vs closed form.
    SpecialJ(SpecialJArgs),
    /// Exchange coupling J from dot geometry via overlap and Coulomb integrals.
    Coupling(CouplingArgs),
    /// Double scattering off two dot spins with optional post-selection.
    Cascade(CascadeArgs),
    /// Contact-potential and inelastic-length validity report.
    Validate(ValidateArgs),
    /// Write the standard figure set (two heatmaps and the transmission curve).
    Figures(FiguresArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct ThetaArg {
    /// Incidence angle in radians (|theta| < pi/2).
    #[arg(long, value_name = "RAD", conflicts_with = "theta_deg", allow_hyphen_values = true)]
    theta_rad: Option<f64>,
    /// Incidence angle in degrees.
    #[arg(long, value_name = "DEG", allow_hyphen_values = true)]
    theta_deg: Option<f64>,
}

impl ThetaArg {
    fn radians(&self) -> f64 {
        self.theta_rad.or(self.theta_deg.map(f64::to_radians)).unwrap_or(0.0)
    }
}

#[derive(Args)]
struct AmplitudesArgs {
    /// Contact coupling J in eV·Å.
    #[arg(long, value_name = "EVA", allow_hyphen_values = true)]
    j_eva: f64,
    #[command(flatten)]
    theta: ThetaArg,
    /// Solve the hole branch (s = -1) instead of the electron branch.
    #[arg(long)]
    hole: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to a file (with a manifest sidecar) instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Unitarity threshold on the gate condition.
    #[arg(long, value_name = "TOL")]
    tol_unitary: Option<f64>,
    /// Amplitude threshold separating gate classes.
    #[arg(long, value_name = "TOL")]
    tol_class: Option<f64>,
}

#[derive(Args)]
struct Sweep2dArgs {
    #[arg(long, default_value_t = -std::f64::consts::FRAC_PI_8, allow_hyphen_values = true)]
    theta_min_rad: f64,
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_8, allow_hyphen_values = true)]
    theta_max_rad: f64,
    #[arg(long, default_value_t = 65)]
    theta_count: usize,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    j_min_eva: f64,
    #[arg(long, default_value_t = 100.0, allow_hyphen_values = true)]
    j_max_eva: f64,
    #[arg(long, default_value_t = 101)]
    j_count: usize,
    /// Solve the hole branch (s = -1).
    #[arg(long)]
    hole: bool,
    /// Output CSV path.
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
    /// Also write success-probability and gate-condition heatmap SVGs.
    #[arg(long)]
    svg: bool,
}

#[derive(Args)]
struct Sweep1dArgs {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    j_min_eva: f64,
    #[arg(long, default_value_t = 120.0, allow_hyphen_values = true)]
    j_max_eva: f64,
    #[arg(long, default_value_t = 601)]
    count: usize,
    /// Output CSV path.
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
    /// Also write the transmission line plot SVG.
    #[arg(long)]
    svg: bool,
}

#[derive(Args)]
struct SpecialJArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CouplingArgs {
    /// Dot length along transport, nm.
    #[arg(long, default_value_t = 21.0)]
    dx_nm: f64,
    /// Ribbon width, nm.
    #[arg(long, default_value_t = 30.0)]
    w_nm: f64,
    /// Ballistic carrier energy, meV.
    #[arg(long, default_value_t = 60.0)]
    energy_mev: f64,
    /// Bypass the overlap integral with a given t (eV). Requires --u-ev.
    #[arg(long, value_name = "EV", requires = "u_ev")]
    t_ev: Option<f64>,
    /// Bypass the Coulomb integral with a given U (eV). Requires --t-ev.
    #[arg(long, value_name = "EV", requires = "t_ev")]
    u_ev: Option<f64>,
    /// Normalization length of the ballistic mode, nm (default: one de Broglie wavelength).
    #[arg(long, value_name = "NM")]
    ballistic_length_nm: Option<f64>,
    /// QMC sample budget for the Coulomb integral.
    #[arg(long, value_name = "N")]
    samples: Option<u64>,
    /// QMC seed.
    #[arg(long, value_name = "SEED")]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

/// Coupling argument: a number in eV·Å, or one of the named special points.
#[derive(Clone, Debug)]
enum CouplingValue {
    Value(f64),
    Swap,
    SqrtSwapLow,
    SqrtSwapHigh,
}

impl FromStr for CouplingValue {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "swap" => Ok(Self::Swap),
            "sqrt-swap" | "sqrt-swap-low" => Ok(Self::SqrtSwapLow),
            "sqrt-swap-high" => Ok(Self::SqrtSwapHigh),
            other => other
                .parse::<f64>()
                .map(Self::Value)
                .map_err(|_| format!("expected a number or swap/sqrt-swap/sqrt-swap-high, got `{other}`")),
        }
    }
}

impl CouplingValue {
    fn resolve(&self, consts: &PhysicalConstants) -> Result<f64> {
        match self {
            Self::Value(v) => Ok(*v),
            Self::Swap => find_swap_j(consts),
            Self::SqrtSwapLow => Ok(find_sqrt_swap_j(consts)?.0),
            Self::SqrtSwapHigh => Ok(find_sqrt_swap_j(consts)?.1),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpinArg {
    Up,
    Down,
}

impl SpinArg {
    fn spinor(self) -> Spinor2 {
        match self {
            SpinArg::Up => Spinor2::up(),
            SpinArg::Down => Spinor2::down(),
        }
    }

    fn spin_half(self) -> SpinHalf {
        match self {
            SpinArg::Up => SpinHalf::Up,
            SpinArg::Down => SpinHalf::Down,
        }
    }

    fn name(self) -> &'static str {
        match self {
            SpinArg::Up => "up",
            SpinArg::Down => "down",
        }
    }
}

#[derive(Args)]
struct CascadeArgs {
    /// Coupling at the first dot: eV·Å value, or swap/sqrt-swap/sqrt-swap-high.
    #[arg(long, value_name = "J")]
    j1_eva: CouplingValue,
    /// Coupling at the second dot: eV·Å value, or swap/sqrt-swap/sqrt-swap-high.
    #[arg(long, value_name = "J")]
    j2_eva: CouplingValue,
    #[command(flatten)]
    theta: ThetaArg,
    #[arg(long, value_enum, default_value = "up")]
    electron: SpinArg,
    #[arg(long, value_enum, default_value = "down")]
    dot1: SpinArg,
    #[arg(long, value_enum, default_value = "down")]
    dot2: SpinArg,
    /// Post-select the final electron spin; omit to report both outcomes.
    #[arg(long, value_enum)]
    postselect: Option<SpinArg>,
    /// Dot separation, nm (validity metadata only).
    #[arg(long, default_value_t = 100.0)]
    separation_nm: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    /// Dot length, nm.
    #[arg(long, default_value_t = 21.0)]
    dx_nm: f64,
    /// Ballistic carrier energy, meV.
    #[arg(long, default_value_t = 60.0)]
    energy_mev: f64,
    /// Dot separation, nm.
    #[arg(long, default_value_t = 100.0)]
    separation_nm: f64,
    /// Ribbon width for the mode/angle context, nm.
    #[arg(long, default_value_t = 30.0)]
    w_nm: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct FiguresArgs {
    /// Output directory for the figure CSVs and SVGs.
    #[arg(long, value_name = "DIR", default_value = "figures_out")]
    out_dir: PathBuf,
}

/// Optional config file; any field may be omitted.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    schema_version: Option<u32>,
    hbar_vf_eva: Option<f64>,
    tol_unitary: Option<f64>,
    tol_class: Option<f64>,
    seed: Option<u64>,
    qmc_samples: Option<u64>,
}

impl FileConfig {
    fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let parsed: FileConfig = if path.extension().and_then(|e| e.to_str()) == Some("json") {
            serde_json::from_str(&text)
                .map_err(|e| Error::InvalidInput(format!("config {}: {e}", path.display())))?
        } else {
            toml::from_str(&text)
                .map_err(|e| Error::InvalidInput(format!("config {}: {e}", path.display())))?
        };
        match parsed.schema_version {
            Some(1) => Ok(parsed),
            Some(v) => Err(Error::InvalidInput(format!(
                "config {}: unsupported schema_version {v} (expected 1)",
                path.display()
            ))),
            None => Err(Error::InvalidInput(format!(
                "config {}: missing schema_version",
                path.display()
            ))),
        }
    }
}

struct Resolved {
    consts: PhysicalConstants,
    tol_unitary: f64,
    tol_class: f64,
    seed: u64,
    qmc_samples: u64,
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}

fn run(cli: Cli) -> Result<()> {
    let file_config = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let defaults = QmcSettings::default();
    let resolved = Resolved {
        consts: PhysicalConstants::new(
            cli.hbar_vf
                .or(file_config.hbar_vf_eva)
                .unwrap_or(PhysicalConstants::default().hbar_vf_ev_angstrom),
        )?,
        tol_unitary: file_config.tol_unitary.unwrap_or(DEFAULT_TOL_UNITARY),
        tol_class: file_config.tol_class.unwrap_or(DEFAULT_TOL_CLASS),
        seed: file_config.seed.unwrap_or(defaults.seed),
        qmc_samples: file_config.qmc_samples.unwrap_or(defaults.samples),
    };

    match cli.command {
        Command::Amplitudes(args) => cmd_amplitudes(args, &resolved),
        Command::Sweep2d(args) => cmd_sweep2d(args, &resolved),
        Command::Sweep1d(args) => cmd_sweep1d(args, &resolved),
        Command::SpecialJ(args) => cmd_special_j(args, &resolved),
        Command::Coupling(args) => cmd_coupling(args, &resolved),
        Command::Cascade(args) => cmd_cascade(args, &resolved),
        Command::Validate(args) => cmd_validate(args, &resolved),
        Command::Figures(args) => cmd_figures(args, &resolved),
    }
}

fn complex_json(z: Complex64) -> serde_json::Value {
    json!({ "re": z.re, "im": z.im })
}

fn emit(output: Option<&Path>, text: &str, manifest: &RunManifest) -> Result<()> {
    match output {
        Some(path) => {
            std::fs::write(path, text)?;
            manifest.write_sidecar(path)?;
            println!("wrote {}", path.display());
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn cmd_amplitudes(args: AmplitudesArgs, resolved: &Resolved) -> Result<()> {
    let sign = if args.hole { EnergySign::Hole } else { EnergySign::Electron };
    let theta = args.theta.radians();
    let problem = ScatteringProblem::new(args.j_eva, theta, sign, resolved.consts)?;
    let amps = spin_resolved_amplitudes(&problem)?;
    let tol_unitary = args.tol_unitary.unwrap_or(resolved.tol_unitary);
    let tol_class = args.tol_class.unwrap_or(resolved.tol_class);
    let report = classify_gate(&problem, tol_unitary, tol_class)?;

    let config = json!({
        "j_eva": args.j_eva,
        "theta_rad": theta,
        "sign": if args.hole { "hole" } else { "electron" },
        "tol_unitary": tol_unitary,
        "tol_class": tol_class,
    });
    let manifest = RunManifest::new("amplitudes", config, &resolved.consts, None);

    let text = match args.format {
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!(
                "J = {} eV·Å   theta = {} rad   branch = {}\n",
                args.j_eva,
                theta,
                if args.hole { "hole" } else { "electron" }
            ));
            for (name, z) in
                [("t_n", amps.t_n), ("t_s", amps.t_s), ("r_n", amps.r_n), ("r_s", amps.r_s)]
            {
                s.push_str(&format!(
                    "{name} = {:+.16} {:+.16}i   |{name}|^2 = {:.16}\n",
                    z.re,
                    z.im,
                    z.norm_sqr()
                ));
            }
            s.push_str(&format!("success probability = {:.16}\n", report.success_probability));
            s.push_str(&format!("gate condition      = {:+.16e}\n", report.gate_condition));
            s.push_str(&format!("classification      = {}\n", report.classification));
            s.push_str(&format!("output concurrence  = {:.16}\n", report.concurrence_of_output));
            s
        }
        Format::Json => {
            let body = json!({
                "manifest": serde_json::to_value(&manifest).expect("manifest"),
                "result": {
                    "t_n": complex_json(amps.t_n),
                    "t_s": complex_json(amps.t_s),
                    "r_n": complex_json(amps.r_n),
                    "r_s": complex_json(amps.r_s),
                    "p_success": report.success_probability,
                    "gate_condition": report.gate_condition,
                    "classification": report.classification.to_string(),
                    "concurrence_of_output": report.concurrence_of_output,
                },
            });
            format!("{}\n", serde_json::to_string_pretty(&body).expect("json"))
        }
        Format::Csv => {
            let g17 = sweep::format_g17;
            format!(
                "{},classification\n{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                sweep::SWEEP2D_CSV_HEADER,
                g17(theta),
                g17(args.j_eva),
                g17(report.success_probability),
                g17(report.gate_condition),
                g17(amps.t_n.re),
                g17(amps.t_n.im),
                g17(amps.t_s.re),
                g17(amps.t_s.im),
                g17(amps.r_n.re),
                g17(amps.r_n.im),
                g17(amps.r_s.re),
                g17(amps.r_s.im),
                report.classification,
            )
        }
    };
    emit(args.output.as_deref(), &text, &manifest)
}

fn cmd_sweep2d(args: Sweep2dArgs, resolved: &Resolved) -> Result<()> {
    let spec = Sweep2dSpec {
        theta: AxisSpec::new(args.theta_min_rad, args.theta_max_rad, args.theta_count)?,
        j: AxisSpec::new(args.j_min_eva, args.j_max_eva, args.j_count)?,
        sign: if args.hole { EnergySign::Hole } else { EnergySign::Electron },
        consts: resolved.consts,
    };
    let rows = run_sweep2d(&spec)?;

    let mut buf = Vec::new();
    sweep::write_sweep2d_csv(&mut buf, &rows)?;
    std::fs::write(&args.out, &buf)?;

    let config = serde_json::to_value(spec).expect("spec serializes");
    let manifest = RunManifest::new("sweep2d", config, &resolved.consts, None);
    manifest.write_sidecar(&args.out)?;
    println!("wrote {} ({} rows)", args.out.display(), rows.len());

    if args.svg {
        let stem = args.out.with_extension("");
        let success = PathBuf::from(format!("{}_success.svg", stem.display()));
        std::fs::write(&success, sweep::success_heatmap_svg(&spec, &rows))?;
        manifest.write_sidecar(&success)?;
        let condition = PathBuf::from(format!("{}_gate_condition.svg", stem.display()));
        std::fs::write(&condition, sweep::gate_condition_heatmap_svg(&spec, &rows))?;
        manifest.write_sidecar(&condition)?;
        println!("wrote {}", success.display());
        println!("wrote {}", condition.display());
    }
    Ok(())
}

fn cmd_sweep1d(args: Sweep1dArgs, resolved: &Resolved) -> Result<()> {
    let spec = Sweep1dSpec {
        j: AxisSpec::new(args.j_min_eva, args.j_max_eva, args.count)?,
        consts: resolved.consts,
    };
    let rows = run_sweep1d(&spec)?;

    let mut buf = Vec::new();
    sweep::write_sweep1d_csv(&mut buf, &rows)?;
    std::fs::write(&args.out, &buf)?;

    let config = serde_json::to_value(spec).expect("spec serializes");
    let manifest = RunManifest::new("sweep1d", config, &resolved.consts, None);
    manifest.write_sidecar(&args.out)?;
    println!("wrote {} ({} rows)", args.out.display(), rows.len());

    if args.svg {
        let svg_path = args.out.with_extension("svg");
        std::fs::write(&svg_path, sweep::transmission_lines_svg(&rows))?;
        manifest.write_sidecar(&svg_path)?;
        println!("wrote {}", svg_path.display());
    }
    Ok(())
}

fn cmd_special_j(args: SpecialJArgs, resolved: &Resolved) -> Result<()> {
    let consts = &resolved.consts;
    let a = consts.hbar_vf_ev_angstrom;
    let swap_root = find_swap_j(consts)?;
    let (sqrt_low_root, sqrt_high_root) = find_sqrt_swap_j(consts)?;
    let swap_closed = 8.0 / 3.0_f64.sqrt() * a;
    let sqrt7 = 7.0_f64.sqrt();
    let sqrt_low_closed = 8.0 / 3.0 * a * (11.0 - 4.0 * sqrt7).sqrt();
    let sqrt_high_closed = 8.0 / 3.0 * a * (11.0 + 4.0 * sqrt7).sqrt();

    let manifest =
        RunManifest::new("special-j", json!({ "hbar_vf_ev_angstrom": a }), consts, None);
    match args.format {
        Format::Json => {
            let body = json!({
                "manifest": serde_json::to_value(&manifest).expect("manifest"),
                "result": {
                    "swap": { "root_finder": swap_root, "closed_form": swap_closed },
                    "sqrt_swap_low": { "root_finder": sqrt_low_root, "closed_form": sqrt_low_closed },
                    "sqrt_swap_high": { "root_finder": sqrt_high_root, "closed_form": sqrt_high_closed },
                },
            });
            println!("{}", serde_json::to_string_pretty(&body).expect("json"));
        }
        _ => {
            println!("special couplings (hbar*v_F = {a} eV·Å)");
            println!(
                "{:<16} {:>20} {:>20} {:>12}",
                "gate", "root finder eV·Å", "closed form eV·Å", "rel. gap"
            );
            for (name, root, closed) in [
                ("SWAP", swap_root, swap_closed),
                ("sqrt-SWAP low", sqrt_low_root, sqrt_low_closed),
                ("sqrt-SWAP high", sqrt_high_root, sqrt_high_closed),
            ] {
                println!(
                    "{name:<16} {root:>20.12} {closed:>20.12} {:>12.3e}",
                    ((root - closed) / closed).abs()
                );
            }
        }
    }
    Ok(())
}

fn cmd_coupling(args: CouplingArgs, resolved: &Resolved) -> Result<()> {
    let geometry = DotGeometry::new(args.dx_nm, args.w_nm)?;
    let energy_ev = args.energy_mev * 1e-3;
    let seed = args.seed.unwrap_or(resolved.seed);
    let samples = args.samples.unwrap_or(resolved.qmc_samples);

    let (estimate, mode) = match (args.t_ev, args.u_ev) {
        (Some(t_ev), Some(u_ev)) => {
            let j = coupling_j(args.dx_nm, t_ev, u_ev)?;
            (
                kleingate::coupling::CouplingEstimate {
                    dx_nm: args.dx_nm,
                    t_overlap_ev: t_ev,
                    t_error_ev: 0.0,
                    u_coulomb_ev: u_ev,
                    u_std_error_ev: 0.0,
                    j_ev_angstrom: j,
                    ballistic_length_nm: 0.0,
                    qmc_samples: 0,
                    qmc_seed: seed,
                },
                "bypass",
            )
        }
        _ => {
            let settings = QmcSettings { samples, replicas: 16, seed };
            (
                estimate_coupling(
                    &geometry,
                    energy_ev,
                    &resolved.consts,
                    args.ballistic_length_nm,
                    &settings,
                )?,
                "integral",
            )
        }
    };

    let config = json!({
        "mode": mode,
        "dx_nm": args.dx_nm,
        "w_nm": args.w_nm,
        "energy_mev": args.energy_mev,
        "ballistic_length_nm": args.ballistic_length_nm,
        "t_ev": args.t_ev,
        "u_ev": args.u_ev,
        "samples": samples,
    });
    let manifest = RunManifest::new("coupling", config, &resolved.consts, Some(seed));

    let text = match args.format {
        Format::Json => {
            let body = json!({
                "manifest": serde_json::to_value(&manifest).expect("manifest"),
                "result": serde_json::to_value(estimate).expect("estimate"),
            });
            format!("{}\n", serde_json::to_string_pretty(&body).expect("json"))
        }
        _ => {
            let mut s = String::new();
            s.push_str(&format!("coupling estimate ({mode} mode)\n"));
            s.push_str(&format!(
                "t = {:.6} eV  (quadrature error {:.2e} eV)\n",
                estimate.t_overlap_ev, estimate.t_error_ev
            ));
            s.push_str(&format!(
                "U = {:.6} eV  (QMC std error {:.2e} eV, {} samples, seed {})\n",
                estimate.u_coulomb_ev,
                estimate.u_std_error_ev,
                estimate.qmc_samples,
                estimate.qmc_seed
            ));
            s.push_str(&format!("J = 4·Δx·t²/U = {:.6} eV·Å\n", estimate.j_ev_angstrom));
            if mode == "integral" {
                s.push_str(&format!(
                    "ballistic normalization length = {:.4} nm\n",
                    estimate.ballistic_length_nm
                ));
            }
            s.push_str(&format!("manifest: {}\n", manifest.to_json().replace('\n', " ")));
            s
        }
    };
    emit(args.output.as_deref(), &text, &manifest)
}

fn cmd_cascade(args: CascadeArgs, resolved: &Resolved) -> Result<()> {
    let theta = args.theta.radians();
    let j1 = args.j1_eva.resolve(&resolved.consts)?;
    let j2 = args.j2_eva.resolve(&resolved.consts)?;
    let mut config = CascadeConfig::from_couplings(
        j1,
        j2,
        theta,
        EnergySign::Electron,
        resolved.consts,
        args.electron.spinor(),
        args.dot1.spinor(),
        args.dot2.spinor(),
        args.postselect.map(SpinArg::spin_half),
    )?;
    config.separation_nm = args.separation_nm;
    let result = run_cascade(&config);

    let manifest_config = json!({
        "j1_eva": j1,
        "j2_eva": j2,
        "theta_rad": theta,
        "electron": args.electron.name(),
        "dot1": args.dot1.name(),
        "dot2": args.dot2.name(),
        "postselect": args.postselect.map(|p| p.spin_half().to_string()),
        "separation_nm": args.separation_nm,
    });
    let manifest = RunManifest::new("cascade", manifest_config, &resolved.consts, None);

    let selected: Vec<&kleingate::cascade::PostselectOutcome> = match config.postselect {
        Some(spin) => vec![result.outcome(spin)],
        None => result.outcomes.iter().collect(),
    };
    let within_inelastic =
        args.separation_nm <= kleingate::kinematics::INELASTIC_LENGTH_NM;

    let text = match args.format {
        Format::Json => {
            let outcomes: Vec<serde_json::Value> = selected
                .iter()
                .map(|o| {
                    json!({
                        "electron": o.electron.to_string(),
                        "probability": o.probability,
                        "dot_state": o
                            .dot_state
                            .map(|s| s.iter().copied().map(complex_json).collect::<Vec<_>>()),
                        "concurrence": o.concurrence,
                    })
                })
                .collect();
            let body = json!({
                "manifest": serde_json::to_value(&manifest).expect("manifest"),
                "result": {
                    "joint_state": result
                        .joint_state
                        .iter()
                        .copied()
                        .map(complex_json)
                        .collect::<Vec<_>>(),
                    "p_transmit_both": result.p_transmit_both,
                    "outcomes": outcomes,
                    "separation_within_inelastic_length": within_inelastic,
                },
            });
            format!("{}\n", serde_json::to_string_pretty(&body).expect("json"))
        }
        _ => {
            let basis = ["uuu", "uud", "udu", "udd", "duu", "dud", "ddu", "ddd"];
            let mut s = String::new();
            s.push_str(&format!(
                "cascade: J1 = {j1} eV·Å, J2 = {j2} eV·Å, theta = {theta} rad\n"
            ));
            s.push_str("joint state (electron, dot1, dot2):\n");
            for (label, amp) in basis.iter().zip(result.joint_state.iter()) {
                if amp.norm() > 1e-14 {
                    s.push_str(&format!(
                        "  |{label}>  {:+.16} {:+.16}i   (weight {:.16})\n",
                        amp.re,
                        amp.im,
                        amp.norm_sqr()
                    ));
                }
            }
            s.push_str(&format!("p(transmit both) = {:.16}\n", result.p_transmit_both));
            for outcome in &selected {
                s.push_str(&format!(
                    "electron {} : probability {:.16}\n",
                    outcome.electron, outcome.probability
                ));
                match (&outcome.dot_state, outcome.concurrence) {
                    (Some(state), Some(c)) => {
                        let labels = ["uu", "ud", "du", "dd"];
                        for (label, amp) in labels.iter().zip(state.iter()) {
                            if amp.norm() > 1e-14 {
                                s.push_str(&format!(
                                    "    dots |{label}>  {:+.16} {:+.16}i   |amp| = {:.16}\n",
                                    amp.re,
                                    amp.im,
                                    amp.norm()
                                ));
                            }
                        }
                        s.push_str(&format!("    concurrence = {c:.16}\n"));
                    }
                    _ => s.push_str("    outcome has zero probability (no conditioned state)\n"),
                }
            }
            s.push_str(&format!(
                "separation {} nm within inelastic length: {}\n",
                args.separation_nm, within_inelastic
            ));
            s
        }
    };
    emit(args.output.as_deref(), &text, &manifest)
}

fn cmd_validate(args: ValidateArgs, resolved: &Resolved) -> Result<()> {
    let energy_ev = args.energy_mev * 1e-3;
    let report =
        validate_delta_regime(args.dx_nm, energy_ev, args.separation_nm, &resolved.consts)?;
    let ribbon = RibbonConfig::new(args.w_nm, 0, Branch::Plus)?;
    let gap_ev = band_gap(&ribbon, &resolved.consts);
    let k0y = transverse_wavevector(&ribbon);
    let theta = incidence_angle(energy_ev, k0y, &resolved.consts);

    let manifest = RunManifest::new(
        "validate",
        json!({
            "dx_nm": args.dx_nm,
            "energy_mev": args.energy_mev,
            "separation_nm": args.separation_nm,
            "w_nm": args.w_nm,
        }),
        &resolved.consts,
        None,
    );
    match args.format {
        Format::Json => {
            let body = json!({
                "manifest": serde_json::to_value(&manifest).expect("manifest"),
                "result": {
                    "lambda_nm": report.lambda_nm,
                    "delta_regime_ok": report.delta_regime_ok,
                    "ratio_5dx_over_lambda": report.ratio_5dx_over_lambda,
                    "within_inelastic_length": report.within_inelastic_length,
                    "band_gap_ev": gap_ev,
                    "incidence_angle_rad": theta.as_ref().ok().copied(),
                },
            });
            println!("{}", serde_json::to_string_pretty(&body).expect("json"));
        }
        _ => {
            println!("de Broglie wavelength = {:.4} nm", report.lambda_nm);
            println!(
                "contact regime 5·Δx < λ: {} (ratio 5·Δx/λ = {:.4})",
                if report.delta_regime_ok { "ok" } else { "NOT satisfied" },
                report.ratio_5dx_over_lambda
            );
            println!(
                "separation {} nm within inelastic length (100 nm): {}",
                args.separation_nm, report.within_inelastic_length
            );
            println!("band gap at W = {} nm: {:.4} meV", args.w_nm, gap_ev * 1e3);
            match theta {
                Ok(t) => println!(
                    "fundamental-mode incidence angle at {} meV: {:.4} rad ({:.2} deg)",
                    args.energy_mev,
                    t,
                    t.to_degrees()
                ),
                Err(e) => println!("fundamental mode does not propagate: {e}"),
            }
        }
    }
    Ok(())
}

fn cmd_figures(args: FiguresArgs, resolved: &Resolved) -> Result<()> {
    let output = figures_preset(&args.out_dir, resolved.consts)?;
    let manifest = RunManifest::new(
        "figures",
        json!({ "out_dir": args.out_dir.display().to_string() }),
        &resolved.consts,
        None,
    );
    for path in [
        &output.map_csv,
        &output.success_svg,
        &output.gate_condition_svg,
        &output.transmission_csv,
        &output.transmission_svg,
    ] {
        manifest.write_sidecar(path)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
