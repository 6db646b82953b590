//! Parameter-sweep engine over (theta, J) grids, CSV emission with a fixed
//! numeric format, and the figure presets bundling the standard maps.
//!
//! Grid cells are independent pure solves; they are evaluated on the rayon
//! pool and assembled in grid order, so output is deterministic regardless of
//! scheduling.

use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gates::{gate_condition, success_probability};
use crate::kinematics::PhysicalConstants;
use crate::scattering::{spin_resolved_amplitudes, EnergySign, ScatteringProblem};
use crate::svg;

/// One linearly spaced sweep axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl AxisSpec {
    pub fn new(min: f64, max: f64, count: usize) -> Result<Self> {
        if count < 2 {
            return Err(Error::InvalidInput(format!(
                "sweep axis needs at least 2 points, got {count}"
            )));
        }
        if !min.is_finite() || !max.is_finite() || min >= max {
            return Err(Error::InvalidInput(format!(
                "sweep axis range must be finite with min < max, got [{min}, {max}]"
            )));
        }
        Ok(Self { min, max, count })
    }

    pub fn value(&self, index: usize) -> f64 {
        self.min + index as f64 * (self.max - self.min) / (self.count - 1) as f64
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.count).map(|i| self.value(i)).collect()
    }
}

/// Two-axis sweep over incidence angle and coupling.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sweep2dSpec {
    pub theta: AxisSpec,
    pub j: AxisSpec,
    pub sign: EnergySign,
    pub consts: PhysicalConstants,
}

impl Sweep2dSpec {
    /// Default map: theta in [-pi/8, pi/8] x 65, J in [0, 100] eV·Å x 101.
    pub fn default_grid(consts: PhysicalConstants) -> Self {
        Self {
            theta: AxisSpec::new(-std::f64::consts::FRAC_PI_8, std::f64::consts::FRAC_PI_8, 65)
                .expect("static axis"),
            j: AxisSpec::new(0.0, 100.0, 101).expect("static axis"),
            sign: EnergySign::Electron,
            consts,
        }
    }
}

/// One grid cell of a two-axis sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub theta_rad: f64,
    #[serde(rename = "J_eVA")]
    pub j_ev_angstrom: f64,
    pub p_success: f64,
    pub gate_condition: f64,
    pub tn_re: f64,
    pub tn_im: f64,
    pub ts_re: f64,
    pub ts_im: f64,
    pub rn_re: f64,
    pub rn_im: f64,
    pub rs_re: f64,
    pub rs_im: f64,
}

pub const SWEEP2D_CSV_HEADER: &str =
    "theta_rad,J_eVA,p_success,gate_condition,tn_re,tn_im,ts_re,ts_im,rn_re,rn_im,rs_re,rs_im";

/// Runs the sweep row-major (theta outer, J inner).
pub fn run_sweep2d(spec: &Sweep2dSpec) -> Result<Vec<SweepRow>> {
    let thetas = spec.theta.values();
    let js = spec.j.values();
    let cells: Vec<(f64, f64)> = thetas
        .iter()
        .flat_map(|&theta| js.iter().map(move |&j| (theta, j)))
        .collect();
    cells
        .into_par_iter()
        .map(|(theta_rad, j)| {
            let problem = ScatteringProblem::new(j, theta_rad, spec.sign, spec.consts)?;
            let amps = spin_resolved_amplitudes(&problem)?;
            Ok(SweepRow {
                theta_rad,
                j_ev_angstrom: j,
                p_success: success_probability(amps.t_n, amps.t_s),
                gate_condition: gate_condition(amps.t_n, amps.t_s),
                tn_re: amps.t_n.re,
                tn_im: amps.t_n.im,
                ts_re: amps.t_s.re,
                ts_im: amps.t_s.im,
                rn_re: amps.r_n.re,
                rn_im: amps.r_n.im,
                rs_re: amps.r_s.re,
                rs_im: amps.r_s.im,
            })
        })
        .collect()
}

/// Frontal transmission sweep over the coupling.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sweep1dSpec {
    pub j: AxisSpec,
    pub consts: PhysicalConstants,
}

impl Sweep1dSpec {
    /// Default curve: J in [0, 120] eV·Å x 601 (covers both amplitude crossings).
    pub fn default_grid(consts: PhysicalConstants) -> Self {
        Self { j: AxisSpec::new(0.0, 120.0, 601).expect("static axis"), consts }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sweep1dRow {
    #[serde(rename = "J_eVA")]
    pub j_ev_angstrom: f64,
    pub tn_sq: f64,
    pub ts_sq: f64,
}

pub const SWEEP1D_CSV_HEADER: &str = "J_eVA,tn_sq,ts_sq";

pub fn run_sweep1d(spec: &Sweep1dSpec) -> Result<Vec<Sweep1dRow>> {
    spec.j
        .values()
        .into_par_iter()
        .map(|j| {
            let problem = ScatteringProblem {
                j_ev_angstrom: j,
                theta_rad: 0.0,
                sign: EnergySign::Electron,
                consts: spec.consts,
            };
            let amps = spin_resolved_amplitudes(&problem)?;
            Ok(Sweep1dRow {
                j_ev_angstrom: j,
                tn_sq: amps.t_n.norm_sqr(),
                ts_sq: amps.t_s.norm_sqr(),
            })
        })
        .collect()
}

/// Fixed numeric formatting of every CSV cell: 17 significant digits,
/// scientific notation, `.` decimal separator.
pub fn format_g17(value: f64) -> String {
    format!("{value:.16e}")
}

pub fn write_sweep2d_csv<W: Write>(mut out: W, rows: &[SweepRow]) -> Result<()> {
    writeln!(out, "{SWEEP2D_CSV_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            format_g17(r.theta_rad),
            format_g17(r.j_ev_angstrom),
            format_g17(r.p_success),
            format_g17(r.gate_condition),
            format_g17(r.tn_re),
            format_g17(r.tn_im),
            format_g17(r.ts_re),
            format_g17(r.ts_im),
            format_g17(r.rn_re),
            format_g17(r.rn_im),
            format_g17(r.rs_re),
            format_g17(r.rs_im),
        )?;
    }
    Ok(())
}

pub fn write_sweep1d_csv<W: Write>(mut out: W, rows: &[Sweep1dRow]) -> Result<()> {
    writeln!(out, "{SWEEP1D_CSV_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{}",
            format_g17(r.j_ev_angstrom),
            format_g17(r.tn_sq),
            format_g17(r.ts_sq),
        )?;
    }
    Ok(())
}

/// Extracts the (theta x J) grid of one column for the heatmap writers.
fn column_grid<F: Fn(&SweepRow) -> f64>(
    rows: &[SweepRow],
    theta_count: usize,
    j_count: usize,
    f: F,
) -> Vec<Vec<f64>> {
    (0..theta_count)
        .map(|ti| (0..j_count).map(|ji| f(&rows[ti * j_count + ji])).collect())
        .collect()
}

/// Renders the success-probability heatmap of a 2D sweep.
pub fn success_heatmap_svg(spec: &Sweep2dSpec, rows: &[SweepRow]) -> String {
    let grid = column_grid(rows, spec.theta.count, spec.j.count, |r| r.p_success);
    svg::heatmap_svg(
        "Gate success probability |t_n|^2 + |t_s|^2",
        "J (eV A)",
        "theta (rad)",
        (spec.j.min, spec.j.max),
        (spec.theta.min, spec.theta.max),
        &grid,
    )
}

/// Renders the gate-condition heatmap of a 2D sweep.
pub fn gate_condition_heatmap_svg(spec: &Sweep2dSpec, rows: &[SweepRow]) -> String {
    let grid = column_grid(rows, spec.theta.count, spec.j.count, |r| r.gate_condition);
    svg::heatmap_svg(
        "Gate condition |t_n + t_s| - |t_n - t_s|",
        "J (eV A)",
        "theta (rad)",
        (spec.j.min, spec.j.max),
        (spec.theta.min, spec.theta.max),
        &grid,
    )
}

/// Renders the frontal transmission curves |t_n|^2 and |t_s|^2 against J.
pub fn transmission_lines_svg(rows: &[Sweep1dRow]) -> String {
    let tn: Vec<(f64, f64)> = rows.iter().map(|r| (r.j_ev_angstrom, r.tn_sq)).collect();
    let ts: Vec<(f64, f64)> = rows.iter().map(|r| (r.j_ev_angstrom, r.ts_sq)).collect();
    svg::line_plot_svg(
        "Frontal transmission probabilities",
        "J (eV A)",
        "probability",
        &[("|t_n|^2", svg::BLUE, &tn), ("|t_s|^2", svg::RED, &ts)],
    )
}

/// Files written by the figure preset.
#[derive(Debug, Clone, Serialize)]
pub struct FiguresOutput {
    pub map_csv: PathBuf,
    pub success_svg: PathBuf,
    pub gate_condition_svg: PathBuf,
    pub transmission_csv: PathBuf,
    pub transmission_svg: PathBuf,
}

/// Runs the default angle-coupling map and the frontal transmission curve,
/// writing CSV data and the three SVG plots into `out_dir`.
pub fn figures_preset(out_dir: &Path, consts: PhysicalConstants) -> Result<FiguresOutput> {
    std::fs::create_dir_all(out_dir)?;

    let spec2d = Sweep2dSpec::default_grid(consts);
    let rows2d = run_sweep2d(&spec2d)?;
    let map_csv = out_dir.join("gate_maps.csv");
    let mut buf = Vec::new();
    write_sweep2d_csv(&mut buf, &rows2d)?;
    std::fs::write(&map_csv, &buf)?;

    let success_svg = out_dir.join("gate_success_map.svg");
    std::fs::write(&success_svg, success_heatmap_svg(&spec2d, &rows2d))?;
    let gate_condition_svg = out_dir.join("gate_condition_map.svg");
    std::fs::write(&gate_condition_svg, gate_condition_heatmap_svg(&spec2d, &rows2d))?;

    let spec1d = Sweep1dSpec::default_grid(consts);
    let rows1d = run_sweep1d(&spec1d)?;
    let transmission_csv = out_dir.join("spin_flip_transmission.csv");
    let mut buf = Vec::new();
    write_sweep1d_csv(&mut buf, &rows1d)?;
    std::fs::write(&transmission_csv, &buf)?;
    let transmission_svg = out_dir.join("spin_flip_transmission.svg");
    std::fs::write(&transmission_svg, transmission_lines_svg(&rows1d))?;

    Ok(FiguresOutput {
        map_csv,
        success_svg,
        gate_condition_svg,
        transmission_csv,
        transmission_svg,
    })
}
