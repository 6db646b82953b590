//! Gate-level view of one scattering event: the unitarity condition
//! |t_n + t_s| = |t_n - t_s|, the transmission-conditioned map on the
//! two-qubit density matrix, gate classification, the special couplings that
//! realize SWAP and sqrt-SWAP, and pure-state concurrence.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kinematics::PhysicalConstants;
use crate::numeric::{bisect, hermitian_eigenvalues};
use crate::scattering::{spin_resolved_amplitudes, ScatteringProblem, SpinResolvedAmplitudes};

/// Default unitarity threshold on the gate condition.
pub const DEFAULT_TOL_UNITARY: f64 = 1e-6;
/// Default amplitude threshold separating the gate classes.
pub const DEFAULT_TOL_CLASS: f64 = 1e-6;

pub type Mat4 = [[Complex64; 4]; 4];

/// Gate taxonomy of a scattering event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GateClassification {
    IdentityLike,
    Swap,
    SqrtSwap,
    Entangling,
    NonUnitary,
}

impl std::fmt::Display for GateClassification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            GateClassification::IdentityLike => "IDENTITY_LIKE",
            GateClassification::Swap => "SWAP",
            GateClassification::SqrtSwap => "SQRT_SWAP",
            GateClassification::Entangling => "ENTANGLING",
            GateClassification::NonUnitary => "NON_UNITARY",
        };
        f.write_str(name)
    }
}

/// Summary of the gate implemented by one scattering configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GateReport {
    /// |t_n + t_s| - |t_n - t_s|; zero iff the transmitted spin map is unitary.
    pub gate_condition: f64,
    /// |t_n|^2 + |t_s|^2, probability that the carrier is transmitted at all.
    pub success_probability: f64,
    pub classification: GateClassification,
    /// Concurrence of the transmitted state for the anti-aligned product input.
    pub concurrence_of_output: f64,
}

/// |t_n + t_s| - |t_n - t_s|. Vanishes iff Re(t_n conj(t_s)) = 0, via
/// |a+b|^2 - |a-b|^2 = 4 Re(a conj(b)).
pub fn gate_condition(t_n: Complex64, t_s: Complex64) -> f64 {
    (t_n + t_s).norm() - (t_n - t_s).norm()
}

/// |t_n|^2 + |t_s|^2.
pub fn success_probability(t_n: Complex64, t_s: Complex64) -> f64 {
    t_n.norm_sqr() + t_s.norm_sqr()
}

/// Pure-state concurrence C = 2|ad - bc| of a normalized two-qubit state
/// (a, b, c, d) on {up-up, up-down, down-up, down-down}.
pub fn concurrence(state: &[Complex64; 4]) -> Result<f64> {
    let norm_sq: f64 = state.iter().map(|z| z.norm_sqr()).sum();
    if (norm_sq - 1.0).abs() > 1e-8 {
        return Err(Error::NotNormalized { norm_sq });
    }
    Ok((2.0 * (state[0] * state[3] - state[1] * state[2]).norm()).min(1.0))
}

/// Transmission-amplitude matrix T on the electron ⊗ dot spin basis: aligned
/// states carry the triplet amplitude, the anti-aligned block mixes through
/// [[t_n, t_s], [t_s, t_n]]. All other entries are exactly zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransmissionMatrix {
    t_aligned: Complex64,
    t_n: Complex64,
    t_s: Complex64,
}

impl TransmissionMatrix {
    pub fn from_amplitudes(amps: &SpinResolvedAmplitudes) -> Self {
        Self { t_aligned: amps.t_aligned(), t_n: amps.t_n, t_s: amps.t_s }
    }

    /// Explicit block entries; the aligned amplitude need not equal t_n + t_s
    /// (used by the convention layer that strips aligned-channel phases).
    pub fn from_parts(t_aligned: Complex64, t_n: Complex64, t_s: Complex64) -> Self {
        Self { t_aligned, t_n, t_s }
    }

    pub fn identity() -> Self {
        Self { t_aligned: Complex64::ONE, t_n: Complex64::ONE, t_s: Complex64::ZERO }
    }

    /// Ideal full spin exchange: t_n = 0, t_s = 1 on every sector.
    pub fn ideal_swap() -> Self {
        Self { t_aligned: Complex64::ONE, t_n: Complex64::ZERO, t_s: Complex64::ONE }
    }

    pub fn matrix(&self) -> Mat4 {
        let z = Complex64::ZERO;
        [
            [self.t_aligned, z, z, z],
            [z, self.t_n, self.t_s, z],
            [z, self.t_s, self.t_n, z],
            [z, z, z, self.t_aligned],
        ]
    }

    pub fn apply_to_state(&self, state: &[Complex64; 4]) -> [Complex64; 4] {
        [
            self.t_aligned * state[0],
            self.t_n * state[1] + self.t_s * state[2],
            self.t_s * state[1] + self.t_n * state[2],
            self.t_aligned * state[3],
        ]
    }
}

/// Two-qubit density matrix: Hermitian, unit-trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoQubitDensity {
    matrix: Mat4,
}

impl TwoQubitDensity {
    const HERMITICITY_TOL: f64 = 1e-12;
    const TRACE_TOL: f64 = 1e-12;
    const EIGENVALUE_TOL: f64 = -1e-10;

    pub fn new(matrix: Mat4) -> Result<Self> {
        for i in 0..4 {
            for j in 0..4 {
                if (matrix[i][j] - matrix[j][i].conj()).norm() > Self::HERMITICITY_TOL {
                    return Err(Error::InvalidInput(format!(
                        "density matrix is not Hermitian at ({i}, {j})"
                    )));
                }
            }
        }
        let trace: Complex64 = (0..4).map(|i| matrix[i][i]).sum();
        if (trace - Complex64::ONE).norm() > Self::TRACE_TOL {
            return Err(Error::InvalidInput(format!(
                "density matrix trace must be 1, got {trace}"
            )));
        }
        let rows: Vec<Vec<Complex64>> = matrix.iter().map(|r| r.to_vec()).collect();
        let eigs = hermitian_eigenvalues(&rows);
        if eigs[0] < Self::EIGENVALUE_TOL {
            return Err(Error::InvalidInput(format!(
                "density matrix is not positive semidefinite (min eigenvalue {})",
                eigs[0]
            )));
        }
        Ok(Self { matrix })
    }

    /// Projector onto a normalized pure state.
    pub fn from_pure_state(state: &[Complex64; 4]) -> Result<Self> {
        let norm_sq: f64 = state.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > 1e-8 {
            return Err(Error::NotNormalized { norm_sq });
        }
        let mut matrix = [[Complex64::ZERO; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                matrix[i][j] = state[i] * state[j].conj() / norm_sq;
            }
        }
        Self::new(matrix)
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.matrix
    }

    pub fn min_eigenvalue(&self) -> f64 {
        let rows: Vec<Vec<Complex64>> = self.matrix.iter().map(|r| r.to_vec()).collect();
        hermitian_eigenvalues(&rows)[0]
    }
}

/// The transmission-conditioned channel rho -> T rho T^dag / Tr[T rho T^dag].
///
/// Returns the conditioned state and the transmission probability Tr[T rho T^dag].
pub fn apply_transmission_map(
    t: &TransmissionMatrix,
    rho: &TwoQubitDensity,
) -> Result<(TwoQubitDensity, f64)> {
    let tm = t.matrix();
    let r = rho.matrix();
    // T rho
    let mut trho = [[Complex64::ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                trho[i][j] += tm[i][k] * r[k][j];
            }
        }
    }
    // (T rho) T^dag
    let mut out = [[Complex64::ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                out[i][j] += trho[i][k] * tm[j][k].conj();
            }
        }
    }
    let p: f64 = (0..4).map(|i| out[i][i].re).sum();
    if p <= 1e-300 {
        return Err(Error::NonNormalizable);
    }
    for row in &mut out {
        for entry in row {
            *entry /= p;
        }
    }
    // re-symmetrize round-off so the validated constructor accepts the output
    let mut sym = [[Complex64::ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            sym[i][j] = 0.5 * (out[i][j] + out[j][i].conj());
        }
    }
    let trace: f64 = (0..4).map(|i| sym[i][i].re).sum();
    for i in 0..4 {
        sym[i][i] = Complex64::from(sym[i][i].re / trace);
    }
    Ok((TwoQubitDensity::new(sym)?, p))
}

/// Frontal spin-resolved amplitudes at coupling `j`, used by the root finders.
fn frontal_amps(j: f64, consts: &PhysicalConstants) -> SpinResolvedAmplitudes {
    let problem = ScatteringProblem {
        j_ev_angstrom: j,
        theta_rad: 0.0,
        sign: crate::scattering::EnergySign::Electron,
        consts: *consts,
    };
    spin_resolved_amplitudes(&problem).expect("frontal problem is always solvable")
}

/// Coupling at which the frontal gate is a perfect SWAP (t_n = 0), found by
/// bisection on [1, 100] eV·Å. Agrees with (8/sqrt(3))·hbar·v_F to 1e-9 relative.
pub fn find_swap_j(consts: &PhysicalConstants) -> Result<f64> {
    // |t_n| has no sign change at its zero; Im(t_n conj(t_T)) does, and it
    // vanishes exactly where t_n does inside the bracket.
    let f = |j: f64| {
        let amps = frontal_amps(j, consts);
        (amps.t_n * amps.t_aligned().conj()).im
    };
    bisect(1.0, 100.0, f, 1e-12, 300)
}

/// The two couplings at which the frontal gate is a sqrt-SWAP
/// (|t_n| = |t_s| = 1/sqrt(2)), bracketed on either side of the SWAP point.
/// Closed forms: (8/3)·hbar·v_F·sqrt(11 ∓ 4 sqrt(7)).
pub fn find_sqrt_swap_j(consts: &PhysicalConstants) -> Result<(f64, f64)> {
    let swap_j = find_swap_j(consts)?;
    let f = |j: f64| {
        let amps = frontal_amps(j, consts);
        amps.t_n.norm() - amps.t_s.norm()
    };
    let low = bisect(1e-6, swap_j, f, 1e-12, 300)?;
    let high = bisect(swap_j, 200.0 * consts.hbar_vf_ev_angstrom / 6.582, f, 1e-12, 300)?;
    Ok((low, high))
}

/// Classifies the gate implemented by `problem`.
///
/// Order: non-unitary if |gate condition| exceeds `tol_unitary`; otherwise
/// SWAP when |t_n| < `tol_class`, sqrt-SWAP when ||t_n| - |t_s|| < `tol_class`,
/// identity-like when |t_s| < `tol_class`, else a generic entangling gate.
pub fn classify_gate(
    problem: &ScatteringProblem,
    tol_unitary: f64,
    tol_class: f64,
) -> Result<GateReport> {
    let amps = spin_resolved_amplitudes(problem)?;
    let g = gate_condition(amps.t_n, amps.t_s);
    let p = success_probability(amps.t_n, amps.t_s);

    let classification = if g.abs() > tol_unitary {
        GateClassification::NonUnitary
    } else if amps.t_n.norm() < tol_class {
        GateClassification::Swap
    } else if (amps.t_n.norm() - amps.t_s.norm()).abs() < tol_class {
        GateClassification::SqrtSwap
    } else if amps.t_s.norm() < tol_class {
        GateClassification::IdentityLike
    } else {
        GateClassification::Entangling
    };

    let scale = p.sqrt();
    let out_state = [
        Complex64::ZERO,
        amps.t_n / scale,
        amps.t_s / scale,
        Complex64::ZERO,
    ];
    Ok(GateReport {
        gate_condition: g,
        success_probability: p,
        classification,
        concurrence_of_output: concurrence(&out_state)?,
    })
}
