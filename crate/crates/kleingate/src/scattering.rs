//! Scattering of a ballistic Dirac carrier off a contact Heisenberg coupling
//! to a localized spin-1/2, solved two independent ways:
//!
//! * singlet/triplet channel decomposition, where the exchange term reduces to
//!   a spinless contact potential V_S = (J/2)(S(S+1) - 3/2) per channel and a
//!   2x2 pseudospin solve gives each channel's (r, t);
//! * a direct 8x8 linear solve over pseudospin ⊗ electron-spin ⊗ dot-spin.
//!
//! The jump condition across the contact potential uses the symmetric-average
//! regularization of the discontinuous spinor: the interaction term enters as
//! (V/2)[psi(0+) + psi(0-)] against the kinetic jump -i·hbar·v_F·sigma_x
//! [psi(0+) - psi(0-)]. Scattering is elastic, so incoming and outgoing
//! longitudinal momenta are equal and no flux weights appear.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kinematics::PhysicalConstants;
use crate::numeric::solve_dense;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Carrier branch: electron (positive energy) or hole (negative energy).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnergySign {
    Electron,
    Hole,
}

impl EnergySign {
    pub fn value(self) -> f64 {
        match self {
            EnergySign::Electron => 1.0,
            EnergySign::Hole => -1.0,
        }
    }
}

/// One scattering configuration: contact coupling, incidence angle, carrier branch.
///
/// Negative J (ferromagnetic coupling) is accepted; all formulas are smooth in J.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScatteringProblem {
    /// Heisenberg contact coupling, eV·Å.
    pub j_ev_angstrom: f64,
    pub theta_rad: f64,
    pub sign: EnergySign,
    pub consts: PhysicalConstants,
}

impl ScatteringProblem {
    pub fn new(
        j_ev_angstrom: f64,
        theta_rad: f64,
        sign: EnergySign,
        consts: PhysicalConstants,
    ) -> Result<Self> {
        if !j_ev_angstrom.is_finite() {
            return Err(Error::InvalidInput(format!("coupling must be finite, got {j_ev_angstrom}")));
        }
        if !(theta_rad.abs() < std::f64::consts::FRAC_PI_2) {
            return Err(Error::InvalidInput(format!(
                "incidence angle must satisfy |theta| < pi/2, got {theta_rad}"
            )));
        }
        Ok(Self { j_ev_angstrom, theta_rad, sign, consts })
    }

    /// Frontal electron-branch problem with default constants.
    pub fn frontal(j_ev_angstrom: f64) -> Self {
        Self {
            j_ev_angstrom,
            theta_rad: 0.0,
            sign: EnergySign::Electron,
            consts: PhysicalConstants::default(),
        }
    }
}

/// Two-component sublattice spinor of a propagating Dirac state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudospinSpinor {
    pub a: Complex64,
    pub b: Complex64,
}

impl PseudospinSpinor {
    /// Right-mover (1, s·e^{i·theta}); also the transmitted form.
    pub fn incident(s: f64, theta_rad: f64) -> Self {
        Self { a: Complex64::ONE, b: s * (I * theta_rad).exp() }
    }

    /// Left-mover (1, -s·e^{-i·theta}).
    pub fn reflected(s: f64, theta_rad: f64) -> Self {
        Self { a: Complex64::ONE, b: -s * (-I * theta_rad).exp() }
    }
}

/// Normalized two-component spin-1/2 amplitude pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Spinor2 {
    pub up: Complex64,
    pub down: Complex64,
}

impl Spinor2 {
    const NORM_TOL: f64 = 1e-9;

    pub fn new(up: Complex64, down: Complex64) -> Result<Self> {
        let norm_sq = up.norm_sqr() + down.norm_sqr();
        if (norm_sq - 1.0).abs() > Self::NORM_TOL {
            return Err(Error::NotNormalized { norm_sq });
        }
        Ok(Self { up, down })
    }

    pub fn up() -> Self {
        Self { up: Complex64::ONE, down: Complex64::ZERO }
    }

    pub fn down() -> Self {
        Self { up: Complex64::ZERO, down: Complex64::ONE }
    }
}

/// Product input state: electron spin ⊗ dot spin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpinConfiguration {
    pub electron: Spinor2,
    pub dot: Spinor2,
}

impl SpinConfiguration {
    pub fn new(electron: Spinor2, dot: Spinor2) -> Self {
        Self { electron, dot }
    }

    /// Electron up, dot down: the anti-aligned reference input.
    pub fn anti_aligned() -> Self {
        Self { electron: Spinor2::up(), dot: Spinor2::down() }
    }

    /// Amplitudes on the basis {up-up, up-down, down-up, down-down}.
    pub fn joint_amplitudes(&self) -> [Complex64; 4] {
        [
            self.electron.up * self.dot.up,
            self.electron.up * self.dot.down,
            self.electron.down * self.dot.up,
            self.electron.down * self.dot.down,
        ]
    }
}

/// Per-channel reflection/transmission amplitudes of the decoupled
/// singlet/triplet contact potentials.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelAmplitudes {
    pub r_singlet: Complex64,
    pub t_singlet: Complex64,
    pub r_triplet: Complex64,
    pub t_triplet: Complex64,
}

/// Spin-resolved amplitudes for the anti-aligned input, electron up / dot down:
/// `t_n`/`r_n` keep the spins, `t_s`/`r_s` swap them.
///
/// Sign convention: singlet state (|ud> - |du>)/sqrt(2), so t_s = (t_T - t_S)/2.
/// At theta = 0 this puts the numerator of t_s at -32i·(hbar v_F)·J; the
/// equivalent closed form in [`closed_form_theta0`] carries the opposite
/// (printed) sign, a global phase with no observable content.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpinResolvedAmplitudes {
    pub t_n: Complex64,
    pub t_s: Complex64,
    pub r_n: Complex64,
    pub r_s: Complex64,
}

impl SpinResolvedAmplitudes {
    /// Triplet-channel transmission t_T = t_n + t_s (aligned spins acquire it).
    pub fn t_aligned(&self) -> Complex64 {
        self.t_n + self.t_s
    }

    /// |t_n|^2 + |t_s|^2, the transmission-conditioned success probability.
    pub fn transmission_probability(&self) -> f64 {
        self.t_n.norm_sqr() + self.t_s.norm_sqr()
    }

    pub fn total_probability(&self) -> f64 {
        self.transmission_probability() + self.r_n.norm_sqr() + self.r_s.norm_sqr()
    }
}

/// Full 8-amplitude solution of one scattering event on the basis
/// {up-up, up-down, down-up, down-down} of electron ⊗ dot spin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FullSolution {
    pub reflected: [Complex64; 4],
    pub transmitted: [Complex64; 4],
}

impl FullSolution {
    pub fn reflected_probability(&self) -> f64 {
        self.reflected.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn transmitted_probability(&self) -> f64 {
        self.transmitted.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn total_probability(&self) -> f64 {
        self.reflected_probability() + self.transmitted_probability()
    }
}

/// Contact potential seen by the total-spin-S channel: V_S = (J/2)(S(S+1) - 3/2).
///
/// S must be 0 (singlet, -3J/4) or 1 (triplet, +J/4).
pub fn channel_potential(j_ev_angstrom: f64, total_spin: u32) -> Result<f64> {
    if total_spin > 1 {
        return Err(Error::InvalidInput(format!(
            "two spin-1/2 particles couple to S in {{0, 1}}, got {total_spin}"
        )));
    }
    let s = total_spin as f64;
    Ok(0.5 * j_ev_angstrom * (s * (s + 1.0) - 1.5))
}

/// Reflection and transmission of a Dirac carrier off a spinless contact
/// potential of strength `v_ev_angstrom`, at incidence angle `theta_rad`.
///
/// Inserts the right/left-mover pseudospinors into the symmetric-average jump
/// condition and solves the resulting 2x2 complex system. Flux is conserved:
/// |r|^2 + |t|^2 = 1.
pub fn scalar_delta_scattering(
    v_ev_angstrom: f64,
    theta_rad: f64,
    sign: EnergySign,
    consts: &PhysicalConstants,
) -> Result<(Complex64, Complex64)> {
    if !(theta_rad.abs() < std::f64::consts::FRAC_PI_2) {
        return Err(Error::InvalidInput(format!(
            "incidence angle must satisfy |theta| < pi/2, got {theta_rad}"
        )));
    }
    let alpha = consts.hbar_vf_ev_angstrom;
    let c = Complex64::from(0.5 * v_ev_angstrom);
    let s = sign.value();
    let u = s * (I * theta_rad).exp();
    let v = s * (-I * theta_rad).exp();

    // unknowns (t, r); rows are the two sublattice components of the jump condition
    let a11 = c - I * alpha * u;
    let a12 = c - I * alpha * v;
    let a21 = c * u - I * alpha;
    let a22 = I * alpha - c * v;
    let b1 = -(c + I * alpha * u);
    let b2 = -(I * alpha + c * u);

    let det = a11 * a22 - a12 * a21;
    let scale = [a11, a12, a21, a22].iter().map(|z| z.norm()).fold(0.0, f64::max);
    if det.norm() < 1e-14 * scale * scale {
        return Err(Error::Numeric(format!(
            "pseudospin jump system is singular at theta = {theta_rad}"
        )));
    }
    let t = (b1 * a22 - a12 * b2) / det;
    let r = (a11 * b2 - b1 * a21) / det;
    Ok((r, t))
}

/// Channel amplitudes of a scattering problem: one scalar contact solve per
/// total-spin channel.
pub fn channel_amplitudes(problem: &ScatteringProblem) -> Result<ChannelAmplitudes> {
    let v_triplet = channel_potential(problem.j_ev_angstrom, 1)?;
    let v_singlet = channel_potential(problem.j_ev_angstrom, 0)?;
    let (r_triplet, t_triplet) =
        scalar_delta_scattering(v_triplet, problem.theta_rad, problem.sign, &problem.consts)?;
    let (r_singlet, t_singlet) =
        scalar_delta_scattering(v_singlet, problem.theta_rad, problem.sign, &problem.consts)?;
    Ok(ChannelAmplitudes { r_singlet, t_singlet, r_triplet, t_triplet })
}

/// Spin-resolved amplitudes by channel recombination for the anti-aligned input:
/// t_n = (t_T + t_S)/2, t_s = (t_T - t_S)/2, likewise for reflection.
pub fn spin_resolved_amplitudes(problem: &ScatteringProblem) -> Result<SpinResolvedAmplitudes> {
    let ch = channel_amplitudes(problem)?;
    Ok(SpinResolvedAmplitudes {
        t_n: 0.5 * (ch.t_triplet + ch.t_singlet),
        t_s: 0.5 * (ch.t_triplet - ch.t_singlet),
        r_n: 0.5 * (ch.r_triplet + ch.r_singlet),
        r_s: 0.5 * (ch.r_triplet - ch.r_singlet),
    })
}

/// Literal evaluation of the frontal (theta = 0) closed-form transmissions:
///
/// t_n = (64 a^2 - 3 J^2) / (64 a^2 - 16 i a J + 3 J^2),
/// t_s = 32 i a J / (64 a^2 - 16 i a J + 3 J^2),        a = hbar v_F.
///
/// Kept as the independent oracle for [`spin_resolved_amplitudes`]; note the
/// printed t_s sign is opposite to the channel convention there, so compare
/// t_s by magnitude.
pub fn closed_form_theta0(j_ev_angstrom: f64, consts: &PhysicalConstants) -> (Complex64, Complex64) {
    let a = consts.hbar_vf_ev_angstrom;
    let j = j_ev_angstrom;
    let denom = Complex64::new(64.0 * a * a + 3.0 * j * j, -16.0 * a * j);
    let t_n = Complex64::from(64.0 * a * a - 3.0 * j * j) / denom;
    let t_s = Complex64::new(0.0, 32.0 * a * j) / denom;
    (t_n, t_s)
}

/// S_e·S_i on the basis {up-up, up-down, down-up, down-down}, in units hbar = 1:
/// (1/4)·(sigma_e · sigma_d), i.e. +1/4 on the triplet and -3/4 on the singlet.
fn exchange_matrix() -> [[f64; 4]; 4] {
    [
        [0.25, 0.0, 0.0, 0.0],
        [0.0, -0.25, 0.5, 0.0],
        [0.0, 0.5, -0.25, 0.0],
        [0.0, 0.0, 0.0, 0.25],
    ]
}

/// Solves the full scattering event for an arbitrary product input by a dense
/// LU solve of the 8x8 system over {reflected, transmitted} ⊗ spin basis.
///
/// The eight unknowns are the four reflected and four transmitted spin
/// amplitudes; the pseudospin structure is fixed by the propagation direction
/// (right-movers (1, s e^{i theta}), left-movers (1, -s e^{-i theta})).
pub fn direct_solve(problem: &ScatteringProblem, input: &SpinConfiguration) -> Result<FullSolution> {
    if !(problem.theta_rad.abs() < std::f64::consts::FRAC_PI_2) {
        return Err(Error::InvalidInput(format!(
            "incidence angle must satisfy |theta| < pi/2, got {}",
            problem.theta_rad
        )));
    }
    let alpha = problem.consts.hbar_vf_ev_angstrom;
    let s = problem.sign.value();
    let u = s * (I * problem.theta_rad).exp();
    let v = s * (-I * problem.theta_rad).exp();
    let phi_in = input.joint_amplitudes();

    // half the interaction matrix, J/2 * S_e.S_i
    let ex = exchange_matrix();
    let half_m =
        |i: usize, j: usize| Complex64::from(0.5 * problem.j_ev_angstrom * ex[i][j]);

    let mut a = vec![vec![Complex64::ZERO; 8]; 8];
    let mut b = vec![Complex64::ZERO; 8];
    for i in 0..4 {
        for j in 0..4 {
            let diag = if i == j { Complex64::ONE } else { Complex64::ZERO };
            // sublattice-A rows
            a[i][j] = -I * alpha * v * diag + half_m(i, j);
            a[i][4 + j] = -I * alpha * u * diag + half_m(i, j);
            // sublattice-B rows
            a[4 + i][j] = I * alpha * diag - v * half_m(i, j);
            a[4 + i][4 + j] = -I * alpha * diag + u * half_m(i, j);
        }
        let m_phi: Complex64 = (0..4).map(|j| half_m(i, j) * phi_in[j]).sum();
        b[i] = -I * alpha * u * phi_in[i] - m_phi;
        b[4 + i] = -I * alpha * phi_in[i] - u * m_phi;
    }

    let x = solve_dense(a, b)?;
    Ok(FullSolution {
        reflected: [x[0], x[1], x[2], x[3]],
        transmitted: [x[4], x[5], x[6], x[7]],
    })
}
