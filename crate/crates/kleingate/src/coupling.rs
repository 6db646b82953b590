//! Estimate of the contact exchange coupling from dot geometry and energies:
//! hopping overlap t (2D quadrature), on-site Coulomb repulsion U (regularized
//! 4D quasi-Monte-Carlo integral) and J = 4·Δx·t²/U.
//!
//! The wavefunction models are deliberately simple and fully documented knobs:
//! the dot is a hard-wall box ground state, the ballistic carrier a plane wave
//! normalized over one de Broglie wavelength, both with hard-wall sine
//! transverse profiles. These choices target order-of-magnitude agreement;
//! only the J arithmetic from given (t, U) is exact.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kinematics::{ElectronKinematics, PhysicalConstants, RibbonConfig};
use crate::numeric::quadrature::Rect;
use crate::numeric::{integrate_2d_adaptive, qmc_integrate, QmcEstimate};

/// Coulomb prefactor e²/(4π·ε₀) in eV·nm (= 14.3996 eV·Å). No dielectric
/// screening constant is applied.
pub const COULOMB_EV_NM: f64 = 1.43996;

/// Radial extent of a carbon π-orbital, nm; regularizes the Coulomb kernel.
pub const PI_ORBITAL_EXTENT_NM: f64 = 0.0814;

/// Relative tolerance of the overlap quadrature.
pub const OVERLAP_REL_TOL: f64 = 1e-6;

/// Rectangular dot geometry embedded in the ribbon.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DotGeometry {
    /// Dot length along the transport direction, nm.
    pub dx_nm: f64,
    /// Ribbon (and dot) width, nm.
    pub width_nm: f64,
    /// Coulomb regularization length, nm.
    pub coulomb_delta_nm: f64,
}

impl DotGeometry {
    pub fn new(dx_nm: f64, width_nm: f64) -> Result<Self> {
        Self::with_delta(dx_nm, width_nm, PI_ORBITAL_EXTENT_NM)
    }

    pub fn with_delta(dx_nm: f64, width_nm: f64, coulomb_delta_nm: f64) -> Result<Self> {
        if !(dx_nm > 0.0) || !(width_nm > 0.0) {
            return Err(Error::InvalidGeometry(format!(
                "dot geometry must have positive extents, got dx = {dx_nm} nm, W = {width_nm} nm"
            )));
        }
        if !(coulomb_delta_nm > 0.0) {
            return Err(Error::InvalidGeometry(format!(
                "Coulomb regularization length must be positive, got {coulomb_delta_nm} nm"
            )));
        }
        Ok(Self { dx_nm, width_nm, coulomb_delta_nm })
    }
}

/// Functional form of a model wavefunction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum WavefunctionKind {
    /// Hard-wall box mode: sin(m·π·ξ)·sin(n·π·η) over the domain rectangle.
    DotBoxMode { mode_x: u32, mode_y: u32 },
    /// Longitudinal plane wave times a hard-wall transverse sine.
    BallisticMode { k_x_per_nm: f64, mode_y: u32 },
}

/// A separable 2D model wavefunction with compact rectangular support.
///
/// `scale` multiplies the normalized form; the model is normalized iff
/// scale² = 1, and the integral routines reject anything else.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionModel {
    pub kind: WavefunctionKind,
    pub domain: Rect,
    pub scale: f64,
}

impl WavefunctionModel {
    const NORM_TOL: f64 = 1e-9;

    /// Ground-state box mode of the dot region [0, Δx] × [0, W].
    pub fn dot_ground(geometry: &DotGeometry) -> Self {
        Self {
            kind: WavefunctionKind::DotBoxMode { mode_x: 1, mode_y: 1 },
            domain: Rect::new(0.0, geometry.dx_nm, 0.0, geometry.width_nm),
            scale: 1.0,
        }
    }

    /// Box mode with explicit domain and mode numbers.
    pub fn dot_box(domain: Rect, mode_x: u32, mode_y: u32) -> Result<Self> {
        if !(domain.width() > 0.0) || !(domain.height() > 0.0) || mode_x == 0 || mode_y == 0 {
            return Err(Error::InvalidGeometry(
                "box mode needs a positive-area domain and mode numbers >= 1".into(),
            ));
        }
        Ok(Self { kind: WavefunctionKind::DotBoxMode { mode_x, mode_y }, domain, scale: 1.0 })
    }

    /// Ballistic plane-wave mode normalized over `length_nm` × width, centered
    /// longitudinally on `center_x_nm`.
    pub fn ballistic(
        k_x_per_nm: f64,
        length_nm: f64,
        width_nm: f64,
        center_x_nm: f64,
        mode_y: u32,
    ) -> Result<Self> {
        if !(length_nm > 0.0) || !(width_nm > 0.0) || mode_y == 0 {
            return Err(Error::InvalidGeometry(
                "ballistic mode needs positive extents and a transverse mode >= 1".into(),
            ));
        }
        Ok(Self {
            kind: WavefunctionKind::BallisticMode { k_x_per_nm, mode_y },
            domain: Rect::new(
                center_x_nm - 0.5 * length_nm,
                center_x_nm + 0.5 * length_nm,
                0.0,
                width_nm,
            ),
            scale: 1.0,
        })
    }

    pub fn is_normalized(&self) -> bool {
        (self.scale * self.scale - 1.0).abs() <= Self::NORM_TOL
    }

    fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized { norm_sq: self.scale * self.scale })
        }
    }

    /// Wavefunction value at (x, y); zero outside the support.
    pub fn value(&self, x_nm: f64, y_nm: f64) -> Complex64 {
        let d = &self.domain;
        if x_nm < d.x_min || x_nm > d.x_max || y_nm < d.y_min || y_nm > d.y_max {
            return Complex64::ZERO;
        }
        let xi = (x_nm - d.x_min) / d.width();
        let eta = (y_nm - d.y_min) / d.height();
        match self.kind {
            WavefunctionKind::DotBoxMode { mode_x, mode_y } => {
                let norm = (4.0 / d.area()).sqrt();
                Complex64::from(
                    self.scale
                        * norm
                        * (mode_x as f64 * std::f64::consts::PI * xi).sin()
                        * (mode_y as f64 * std::f64::consts::PI * eta).sin(),
                )
            }
            WavefunctionKind::BallisticMode { k_x_per_nm, mode_y } => {
                let norm = (2.0 / d.area()).sqrt();
                let transverse = (mode_y as f64 * std::f64::consts::PI * eta).sin();
                self.scale
                    * norm
                    * transverse
                    * Complex64::new(0.0, k_x_per_nm * (x_nm - d.x_min)).exp()
            }
        }
    }

    /// Probability density |ψ|² at (x, y).
    pub fn density(&self, x_nm: f64, y_nm: f64) -> f64 {
        self.value(x_nm, y_nm).norm_sqr()
    }

    /// Quadrature check of ∫|ψ|² − 1 over the support.
    pub fn normalization_defect(&self) -> f64 {
        let (val, _) = integrate_2d_adaptive(
            |x, y| Complex64::from(self.density(x, y)),
            self.domain,
            1e-9,
        );
        val.re - 1.0
    }
}

/// Settings of the randomized QMC Coulomb integration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QmcSettings {
    pub samples: u64,
    pub replicas: u32,
    pub seed: u64,
}

impl Default for QmcSettings {
    fn default() -> Self {
        Self { samples: 1 << 20, replicas: 16, seed: 42 }
    }
}

/// Hopping overlap t = ε_b·|∫ ψ_b ψ_d| over the shared support, with the
/// quadrature-change error estimate (both in eV).
///
/// The magnitude is taken because the plane-wave phase of ψ_b is a
/// normalization convention; t enters observables only through t².
pub fn overlap_t(
    psi_b: &WavefunctionModel,
    psi_d: &WavefunctionModel,
    energy_ev: f64,
) -> Result<(f64, f64)> {
    psi_b.require_normalized()?;
    psi_d.require_normalized()?;
    let a = &psi_b.domain;
    let b = &psi_d.domain;
    let overlap = Rect::new(
        a.x_min.max(b.x_min),
        a.x_max.min(b.x_max),
        a.y_min.max(b.y_min),
        a.y_max.min(b.y_max),
    );
    if overlap.width() <= 0.0 || overlap.height() <= 0.0 {
        return Ok((0.0, 0.0));
    }
    let (integral, err) = integrate_2d_adaptive(
        |x, y| psi_b.value(x, y) * psi_d.value(x, y),
        overlap,
        OVERLAP_REL_TOL,
    );
    Ok((energy_ev.abs() * integral.norm(), energy_ev.abs() * err))
}

/// Regularized Coulomb repulsion
/// U = (e²/4πε₀) ∬ ρ_d(r₁) ρ_b(r₂) / (|r₁ − r₂| + δ) d²r₁ d²r₂ in eV,
/// by randomized quasi-Monte-Carlo over the two supports.
pub fn coulomb_u(
    psi_d: &WavefunctionModel,
    psi_b: &WavefunctionModel,
    delta_nm: f64,
    settings: &QmcSettings,
) -> Result<QmcEstimate> {
    psi_d.require_normalized()?;
    psi_b.require_normalized()?;
    if !(delta_nm > 0.0) {
        return Err(Error::InvalidGeometry(format!(
            "Coulomb regularization length must be positive, got {delta_nm} nm"
        )));
    }
    let d1 = psi_d.domain;
    let d2 = psi_b.domain;
    let jacobian = d1.area() * d2.area();
    let estimate = qmc_integrate::<4, _>(
        |p| {
            let x1 = d1.x_min + p[0] * d1.width();
            let y1 = d1.y_min + p[1] * d1.height();
            let x2 = d2.x_min + p[2] * d2.width();
            let y2 = d2.y_min + p[3] * d2.height();
            let dist = ((x1 - x2) * (x1 - x2) + (y1 - y2) * (y1 - y2)).sqrt();
            COULOMB_EV_NM * jacobian * psi_d.density(x1, y1) * psi_b.density(x2, y2)
                / (dist + delta_nm)
        },
        settings.samples,
        settings.replicas,
        settings.seed,
    );
    Ok(estimate)
}

/// Exchange coupling J = 4·Δx·t²/U in eV·Å (Δx converted from nm).
pub fn coupling_j(dx_nm: f64, t_ev: f64, u_ev: f64) -> Result<f64> {
    if !(u_ev > 0.0) {
        return Err(Error::InvalidInput(format!(
            "Coulomb repulsion must be positive, got U = {u_ev} eV"
        )));
    }
    if !(dx_nm > 0.0) {
        return Err(Error::InvalidGeometry(format!("dot length must be positive, got {dx_nm} nm")));
    }
    Ok(4.0 * (dx_nm * 10.0) * t_ev * t_ev / u_ev)
}

/// Full coupling estimate with the documented default models.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingEstimate {
    pub dx_nm: f64,
    pub t_overlap_ev: f64,
    pub t_error_ev: f64,
    pub u_coulomb_ev: f64,
    pub u_std_error_ev: f64,
    pub j_ev_angstrom: f64,
    pub ballistic_length_nm: f64,
    pub qmc_samples: u64,
    pub qmc_seed: u64,
}

/// Default model pair (ψ_d, ψ_b) for a geometry probed at `energy_ev`: dot box
/// ground state, and a plane wave at the fundamental-mode longitudinal
/// momentum normalized over `ballistic_length_nm` (one de Broglie wavelength
/// when `None`) centered on the dot.
pub fn default_models(
    geometry: &DotGeometry,
    energy_ev: f64,
    consts: &PhysicalConstants,
    ballistic_length_nm: Option<f64>,
) -> Result<(WavefunctionModel, WavefunctionModel, f64)> {
    let ribbon = RibbonConfig::new(geometry.width_nm, 0, crate::kinematics::Branch::Plus)?;
    let k0y = crate::kinematics::transverse_wavevector(&ribbon);
    let kinematics = ElectronKinematics::new(energy_ev, k0y, consts)?;
    let length = match ballistic_length_nm {
        Some(l) if l > 0.0 => l,
        Some(l) => {
            return Err(Error::InvalidGeometry(format!(
                "ballistic normalization length must be positive, got {l} nm"
            )))
        }
        None => crate::kinematics::de_broglie_wavelength(energy_ev, consts)?,
    };
    let psi_d = WavefunctionModel::dot_ground(geometry);
    let psi_b = WavefunctionModel::ballistic(
        kinematics.k_x_per_nm,
        length,
        geometry.width_nm,
        0.5 * geometry.dx_nm,
        1,
    )?;
    Ok((psi_d, psi_b, length))
}

/// Computes t, U and J for `geometry` at `energy_ev` with the default models.
pub fn estimate_coupling(
    geometry: &DotGeometry,
    energy_ev: f64,
    consts: &PhysicalConstants,
    ballistic_length_nm: Option<f64>,
    settings: &QmcSettings,
) -> Result<CouplingEstimate> {
    let (psi_d, psi_b, length) = default_models(geometry, energy_ev, consts, ballistic_length_nm)?;
    let (t_ev, t_err) = overlap_t(&psi_b, &psi_d, energy_ev)?;
    let u = coulomb_u(&psi_d, &psi_b, geometry.coulomb_delta_nm, settings)?;
    let j = coupling_j(geometry.dx_nm, t_ev, u.value)?;
    Ok(CouplingEstimate {
        dx_nm: geometry.dx_nm,
        t_overlap_ev: t_ev,
        t_error_ev: t_err,
        u_coulomb_ev: u.value,
        u_std_error_ev: u.std_error,
        j_ev_angstrom: j,
        ballistic_length_nm: length,
        qmc_samples: u.samples,
        qmc_seed: u.seed,
    })
}
