//! Armchair-nanoribbon kinematics: transverse-mode quantization, band gap,
//! incidence-angle geometry, de Broglie wavelength and the contact-potential
//! validity checks.
//!
//! Lengths entering this module are in nm and energies in eV; couplings and
//! the velocity constant are carried in eV·Å (1 eV·Å = 0.1 eV·nm) because the
//! contact coupling J multiplies a 1D delta function.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Inelastic mean free path of hot ballistic carriers, nm.
pub const INELASTIC_LENGTH_NM: f64 = 100.0;

/// Material constants of the Dirac model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// hbar * v_F in eV·Å.
    pub hbar_vf_ev_angstrom: f64,
}

impl Default for PhysicalConstants {
    /// hbar = 6.582e-16 eV·s and v_F = 1e6 m/s give 6.582 eV·Å.
    fn default() -> Self {
        Self { hbar_vf_ev_angstrom: 6.582 }
    }
}

impl PhysicalConstants {
    pub fn new(hbar_vf_ev_angstrom: f64) -> Result<Self> {
        if !(hbar_vf_ev_angstrom > 0.0) || !hbar_vf_ev_angstrom.is_finite() {
            return Err(Error::InvalidInput(format!(
                "hbar*v_F must be positive and finite, got {hbar_vf_ev_angstrom}"
            )));
        }
        Ok(Self { hbar_vf_ev_angstrom })
    }

    /// hbar * v_F in eV·nm.
    pub fn hbar_vf_ev_nm(&self) -> f64 {
        self.hbar_vf_ev_angstrom * 0.1
    }
}

/// Which of the two quantization branches (n ± 1/3) a mode sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn offset(self) -> f64 {
        match self {
            Branch::Plus => 1.0 / 3.0,
            Branch::Minus => -1.0 / 3.0,
        }
    }
}

/// Semiconducting armchair nanoribbon geometry and transverse mode selection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RibbonConfig {
    /// Ribbon width, nm.
    pub width_nm: f64,
    /// Transverse mode index n.
    pub mode_n: i32,
    pub branch: Branch,
}

impl RibbonConfig {
    pub fn new(width_nm: f64, mode_n: i32, branch: Branch) -> Result<Self> {
        if !(width_nm > 0.0) || !width_nm.is_finite() {
            return Err(Error::InvalidGeometry(format!(
                "ribbon width must be positive, got {width_nm} nm"
            )));
        }
        Ok(Self { width_nm, mode_n, branch })
    }

    /// Lowest-mode wavevector (n = 0, plus branch), nm^-1. Sets the band gap.
    pub fn fundamental_wavevector(&self) -> f64 {
        std::f64::consts::PI / (3.0 * self.width_nm)
    }
}

/// Quantized transverse wavevector k_ny = (n ± 1/3)·π/W, nm^-1.
pub fn transverse_wavevector(ribbon: &RibbonConfig) -> f64 {
    (ribbon.mode_n as f64 + ribbon.branch.offset()) * std::f64::consts::PI / ribbon.width_nm
}

/// Band gap of the semiconducting ribbon, eV: 2·hbar·v_F·k_0y.
pub fn band_gap(ribbon: &RibbonConfig, consts: &PhysicalConstants) -> f64 {
    2.0 * consts.hbar_vf_ev_nm() * ribbon.fundamental_wavevector()
}

/// Incidence angle imposed by the transverse quantization, radians.
///
/// The mode propagates only when |energy| exceeds hbar·v_F·|k_ny|; below the
/// band edge the mode is evanescent and rejected.
pub fn incidence_angle(energy_ev: f64, k_ny_per_nm: f64, consts: &PhysicalConstants) -> Result<f64> {
    let band_edge_ev = consts.hbar_vf_ev_nm() * k_ny_per_nm.abs();
    if energy_ev.abs() <= band_edge_ev {
        return Err(Error::EvanescentMode { energy_ev: energy_ev.abs(), band_edge_ev });
    }
    Ok((k_ny_per_nm * consts.hbar_vf_ev_nm() / energy_ev.abs()).asin())
}

/// Ballistic de Broglie wavelength 2π·hbar·v_F/|energy|, nm.
pub fn de_broglie_wavelength(energy_ev: f64, consts: &PhysicalConstants) -> Result<f64> {
    if energy_ev == 0.0 {
        return Err(Error::ZeroEnergy);
    }
    Ok(2.0 * std::f64::consts::PI * consts.hbar_vf_ev_nm() / energy_ev.abs())
}

/// Plane-wave kinematics of a propagating carrier in a fixed transverse mode.
///
/// `energy_ev` may be negative (hole branch); `s` records its sign and the
/// wavevector magnitudes are built from |energy|. The longitudinal component
/// is positive (rightward propagation).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ElectronKinematics {
    pub energy_ev: f64,
    /// sgn(energy): +1 electron, -1 hole.
    pub s: f64,
    /// Total wavevector |energy|/(hbar v_F), nm^-1.
    pub k_per_nm: f64,
    pub k_x_per_nm: f64,
    pub k_y_per_nm: f64,
    pub theta_rad: f64,
}

impl ElectronKinematics {
    pub fn new(energy_ev: f64, k_ny_per_nm: f64, consts: &PhysicalConstants) -> Result<Self> {
        if energy_ev == 0.0 {
            return Err(Error::ZeroEnergy);
        }
        let theta_rad = incidence_angle(energy_ev, k_ny_per_nm, consts)?;
        let k_per_nm = energy_ev.abs() / consts.hbar_vf_ev_nm();
        let k_x_per_nm = (k_per_nm * k_per_nm - k_ny_per_nm * k_ny_per_nm).sqrt();
        Ok(Self {
            energy_ev,
            s: energy_ev.signum(),
            k_per_nm,
            k_x_per_nm,
            k_y_per_nm: k_ny_per_nm,
            theta_rad,
        })
    }
}

/// Outcome of the contact-potential validity checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ValidityReport {
    /// de Broglie wavelength at the probe energy, nm.
    pub lambda_nm: f64,
    /// Whether 5·Δx < λ, the regime where the dot acts as a contact potential.
    pub delta_regime_ok: bool,
    pub ratio_5dx_over_lambda: f64,
    /// Whether the dot separation stays within the inelastic length (100 nm).
    pub within_inelastic_length: bool,
}

/// Checks the contact-potential regime (5·Δx < λ) and the inelastic-length
/// budget for a dot of length `dot_length_nm` probed at `energy_ev`, with the
/// dots `separation_nm` apart. Report-only: marginal inputs are not rejected.
pub fn validate_delta_regime(
    dot_length_nm: f64,
    energy_ev: f64,
    separation_nm: f64,
    consts: &PhysicalConstants,
) -> Result<ValidityReport> {
    if !(dot_length_nm > 0.0) {
        return Err(Error::InvalidGeometry(format!(
            "dot length must be positive, got {dot_length_nm} nm"
        )));
    }
    if !(separation_nm >= 0.0) {
        return Err(Error::InvalidGeometry(format!(
            "separation must be nonnegative, got {separation_nm} nm"
        )));
    }
    let lambda_nm = de_broglie_wavelength(energy_ev, consts)?;
    let ratio = 5.0 * dot_length_nm / lambda_nm;
    Ok(ValidityReport {
        lambda_nm,
        delta_regime_ok: ratio < 1.0,
        ratio_5dx_over_lambda: ratio,
        within_inelastic_length: separation_nm <= INELASTIC_LENGTH_NM,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn consts() -> PhysicalConstants {
        PhysicalConstants::default()
    }

    fn ribbon(w: f64, n: i32, branch: Branch) -> RibbonConfig {
        RibbonConfig::new(w, n, branch).unwrap()
    }

    #[test]
    fn transverse_wavevector_lowest_mode() {
        let k = transverse_wavevector(&ribbon(30.0, 0, Branch::Plus));
        assert_relative_eq!(k, std::f64::consts::PI / 90.0, epsilon = 1e-15);
        assert_relative_eq!(k, 0.034907, epsilon = 1e-6);
    }

    #[test]
    fn transverse_wavevector_minus_branch_flips_sign() {
        let plus = transverse_wavevector(&ribbon(30.0, 0, Branch::Plus));
        let minus = transverse_wavevector(&ribbon(30.0, 0, Branch::Minus));
        assert_relative_eq!(minus, -plus, epsilon = 1e-15);
    }

    #[test]
    fn transverse_wavevector_excited_mode() {
        let k = transverse_wavevector(&ribbon(90.0, 1, Branch::Plus));
        assert_relative_eq!(k, (4.0 / 3.0) * std::f64::consts::PI / 90.0, epsilon = 1e-15);
        assert_relative_eq!(k, 0.046542, epsilon = 1e-6);
    }

    #[test]
    fn nonpositive_width_is_invalid_geometry() {
        assert!(matches!(
            RibbonConfig::new(0.0, 0, Branch::Plus),
            Err(Error::InvalidGeometry(_))
        ));
        assert!(matches!(
            RibbonConfig::new(-3.0, 0, Branch::Plus),
            Err(Error::InvalidGeometry(_))
        ));
    }

    #[test]
    fn band_gap_matches_formula_at_30_nm() {
        let gap = band_gap(&ribbon(30.0, 0, Branch::Plus), &consts());
        assert_relative_eq!(gap, 0.045951, epsilon = 1e-6);
    }

    #[test]
    fn band_gap_doubles_when_width_halves_and_closes_in_bulk() {
        let gap15 = band_gap(&ribbon(15.0, 0, Branch::Plus), &consts());
        assert_relative_eq!(gap15, 0.0919021, epsilon = 1e-6);
        let bulk = band_gap(&ribbon(1e12, 0, Branch::Plus), &consts());
        assert!(bulk < 1e-9);
    }

    #[test]
    fn incidence_angle_at_paper_operating_point() {
        let k0y = transverse_wavevector(&ribbon(30.0, 0, Branch::Plus));
        let theta = incidence_angle(0.060, k0y, &consts()).unwrap();
        assert_relative_eq!(theta, 0.3929608, epsilon = 1e-6);
        assert_relative_eq!(theta.to_degrees(), 22.515, epsilon = 1e-3);
    }

    #[test]
    fn frontal_incidence_for_zero_transverse_momentum() {
        assert_eq!(incidence_angle(0.060, 0.0, &consts()).unwrap(), 0.0);
    }

    #[test]
    fn angle_vanishes_at_large_energy() {
        let k0y = transverse_wavevector(&ribbon(30.0, 0, Branch::Plus));
        let theta = incidence_angle(1e6, k0y, &consts()).unwrap();
        assert!(theta.abs() < 1e-7);
    }

    #[test]
    fn evanescent_mode_is_rejected() {
        let k0y = transverse_wavevector(&ribbon(30.0, 0, Branch::Plus));
        let band_edge = consts().hbar_vf_ev_nm() * k0y;
        match incidence_angle(band_edge * 0.99, k0y, &consts()) {
            Err(Error::EvanescentMode { band_edge_ev, .. }) => {
                assert_relative_eq!(band_edge_ev, band_edge, epsilon = 1e-15);
            }
            other => panic!("expected evanescent-mode error, got {other:?}"),
        }
    }

    #[test]
    fn hole_energy_uses_magnitude_and_keeps_sign() {
        let k0y = transverse_wavevector(&ribbon(30.0, 0, Branch::Plus));
        let kin = ElectronKinematics::new(-0.060, k0y, &consts()).unwrap();
        assert_eq!(kin.s, -1.0);
        let electron = ElectronKinematics::new(0.060, k0y, &consts()).unwrap();
        assert_relative_eq!(kin.theta_rad, electron.theta_rad, epsilon = 1e-15);
        assert_relative_eq!(
            kin.k_per_nm * kin.k_per_nm,
            kin.k_x_per_nm * kin.k_x_per_nm + kin.k_y_per_nm * kin.k_y_per_nm,
            max_relative = 1e-12
        );
    }

    #[test]
    fn de_broglie_wavelength_cases() {
        let c = consts();
        assert_relative_eq!(de_broglie_wavelength(0.060, &c).unwrap(), 68.9265, epsilon = 1e-3);
        assert_relative_eq!(de_broglie_wavelength(0.120, &c).unwrap(), 34.4633, epsilon = 1e-3);
        assert_relative_eq!(de_broglie_wavelength(0.0413, &c).unwrap(), 100.135, epsilon = 1e-2);
        assert!(matches!(de_broglie_wavelength(0.0, &c), Err(Error::ZeroEnergy)));
    }

    #[test]
    fn validity_report_at_10_and_21_nm() {
        let c = consts();
        let ok = validate_delta_regime(10.0, 0.060, 100.0, &c).unwrap();
        assert!(ok.delta_regime_ok);
        assert!(ok.within_inelastic_length);
        assert_relative_eq!(ok.ratio_5dx_over_lambda, 50.0 / 68.9265, epsilon = 1e-4);

        // the 21 nm dot is marginal: 105 > 68.9
        let marginal = validate_delta_regime(21.0, 0.060, 100.0, &c).unwrap();
        assert!(!marginal.delta_regime_ok);
        assert_relative_eq!(marginal.ratio_5dx_over_lambda, 105.0 / 68.9265, epsilon = 1e-4);

        let far = validate_delta_regime(10.0, 0.060, 250.0, &c).unwrap();
        assert!(!far.within_inelastic_length);
    }

    #[test]
    fn tiny_dot_always_in_delta_regime() {
        let rep = validate_delta_regime(1e-6, 0.060, 50.0, &consts()).unwrap();
        assert!(rep.delta_regime_ok);
        assert!(rep.ratio_5dx_over_lambda < 1e-6);
    }

    proptest! {
        #[test]
        fn angle_inverts_to_transverse_momentum(
            energy in 0.05f64..10.0,
            k_ny in -0.05f64..0.05,
        ) {
            let c = consts();
            prop_assume!(energy.abs() / c.hbar_vf_ev_nm() > k_ny.abs() * 1.0001);
            let theta = incidence_angle(energy, k_ny, &c).unwrap();
            let recovered = theta.sin() * energy.abs() / c.hbar_vf_ev_nm();
            prop_assert!((recovered - k_ny).abs() <= 1e-12 * k_ny.abs().max(1.0));
        }

        #[test]
        fn angle_decreases_with_energy(e1 in 0.1f64..5.0, factor in 1.01f64..10.0) {
            let c = consts();
            let k_ny = 0.03;
            let t1 = incidence_angle(e1, k_ny, &c);
            prop_assume!(t1.is_ok());
            let t1 = t1.unwrap();
            let t2 = incidence_angle(e1 * factor, k_ny, &c).unwrap();
            prop_assert!(t2 < t1);
        }

        #[test]
        fn gap_width_product_is_constant(w in 1.0f64..1e4) {
            let c = consts();
            let gap = band_gap(&ribbon(w, 0, Branch::Plus), &c);
            let expected = 2.0 * std::f64::consts::PI * c.hbar_vf_ev_nm() / 3.0;
            prop_assert!((gap * w - expected).abs() <= 1e-12 * expected);
        }

        #[test]
        fn wavelength_energy_product_is_constant(e in 1e-4f64..10.0) {
            let c = consts();
            let lambda = de_broglie_wavelength(e, &c).unwrap();
            let expected = 2.0 * std::f64::consts::PI * c.hbar_vf_ev_nm();
            prop_assert!((lambda * e - expected).abs() <= 1e-12 * expected);
        }
    }
}
