//! Sequential frontal scattering of one ballistic carrier off two separated
//! dot spins. Only the doubly-transmitted branch is kept: each reflection is
//! counted as loss and no round trips between the dots are modeled, which is
//! what makes the branch bookkeeping triangular.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gates::{concurrence, Mat4, TransmissionMatrix};
use crate::kinematics::PhysicalConstants;
use crate::scattering::{
    spin_resolved_amplitudes, EnergySign, ScatteringProblem, SpinResolvedAmplitudes, Spinor2,
};

/// Dot separation used for validity reporting when none is given, nm.
pub const DEFAULT_SEPARATION_NM: f64 = 100.0;

/// A definite spin-1/2 orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpinHalf {
    Up,
    Down,
}

impl SpinHalf {
    fn index(self) -> usize {
        match self {
            SpinHalf::Up => 0,
            SpinHalf::Down => 1,
        }
    }
}

impl std::fmt::Display for SpinHalf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SpinHalf::Up => "up",
            SpinHalf::Down => "down",
        })
    }
}

/// Inputs of a two-dot cascade: per-dot scattering amplitudes and the three
/// input spinors. `separation_nm` is metadata for validity reporting only;
/// free propagation between the dots adds no relative phase between branches.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CascadeConfig {
    pub gate1: SpinResolvedAmplitudes,
    pub gate2: SpinResolvedAmplitudes,
    pub electron_in: Spinor2,
    pub dot1_in: Spinor2,
    pub dot2_in: Spinor2,
    pub postselect: Option<SpinHalf>,
    pub separation_nm: f64,
}

impl CascadeConfig {
    pub fn new(
        gate1: SpinResolvedAmplitudes,
        gate2: SpinResolvedAmplitudes,
        electron_in: Spinor2,
        dot1_in: Spinor2,
        dot2_in: Spinor2,
        postselect: Option<SpinHalf>,
    ) -> Self {
        Self {
            gate1,
            gate2,
            electron_in,
            dot1_in,
            dot2_in,
            postselect,
            separation_nm: DEFAULT_SEPARATION_NM,
        }
    }

    /// Resolves the two gates from couplings at a common incidence angle.
    #[allow(clippy::too_many_arguments)]
    pub fn from_couplings(
        j1_ev_angstrom: f64,
        j2_ev_angstrom: f64,
        theta_rad: f64,
        sign: EnergySign,
        consts: PhysicalConstants,
        electron_in: Spinor2,
        dot1_in: Spinor2,
        dot2_in: Spinor2,
        postselect: Option<SpinHalf>,
    ) -> Result<Self> {
        let gate1 = spin_resolved_amplitudes(&ScatteringProblem::new(
            j1_ev_angstrom,
            theta_rad,
            sign,
            consts,
        )?)?;
        let gate2 = spin_resolved_amplitudes(&ScatteringProblem::new(
            j2_ev_angstrom,
            theta_rad,
            sign,
            consts,
        )?)?;
        Ok(Self::new(gate1, gate2, electron_in, dot1_in, dot2_in, postselect))
    }
}

/// One post-selection branch of the final electron measurement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PostselectOutcome {
    pub electron: SpinHalf,
    /// Joint probability of double transmission and this electron outcome.
    pub probability: f64,
    /// Normalized dot1 ⊗ dot2 state on {uu, ud, du, dd}; `None` when the
    /// outcome has zero probability.
    pub dot_state: Option<[Complex64; 4]>,
    pub concurrence: Option<f64>,
}

/// Joint result of the double scattering, conditioned on transmission at both dots.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CascadeResult {
    /// Unnormalized amplitudes on electron ⊗ dot1 ⊗ dot2, index = 4e + 2d1 + d2
    /// with 0 = up, 1 = down. Its squared norm is the double-transmission
    /// probability.
    pub joint_state: [Complex64; 8],
    pub p_transmit_both: f64,
    /// Electron-up and electron-down outcomes, in that order.
    pub outcomes: [PostselectOutcome; 2],
}

impl CascadeResult {
    pub fn outcome(&self, spin: SpinHalf) -> &PostselectOutcome {
        &self.outcomes[spin.index()]
    }
}

/// Transmission-conditioned map of one scattering event on electron ⊗ dot.
/// Unitary exactly when the gate condition holds (always at frontal incidence).
pub fn single_scattering_map(amps: &SpinResolvedAmplitudes) -> TransmissionMatrix {
    TransmissionMatrix::from_amplitudes(amps)
}

fn apply_on_electron_dot1(map: &TransmissionMatrix, state: &mut [Complex64; 8]) {
    for d2 in 0..2 {
        let gather = [
            state[d2],         // e=up,   d1=up
            state[2 + d2],     // e=up,   d1=down
            state[4 + d2],     // e=down, d1=up
            state[6 + d2],     // e=down, d1=down
        ];
        let out = map.apply_to_state(&gather);
        state[d2] = out[0];
        state[2 + d2] = out[1];
        state[4 + d2] = out[2];
        state[6 + d2] = out[3];
    }
}

fn apply_on_electron_dot2(map: &TransmissionMatrix, state: &mut [Complex64; 8]) {
    for d1 in 0..2 {
        let gather = [
            state[2 * d1],         // e=up,   d2=up
            state[2 * d1 + 1],     // e=up,   d2=down
            state[4 + 2 * d1],     // e=down, d2=up
            state[4 + 2 * d1 + 1], // e=down, d2=down
        ];
        let out = map.apply_to_state(&gather);
        state[2 * d1] = out[0];
        state[2 * d1 + 1] = out[1];
        state[4 + 2 * d1] = out[2];
        state[4 + 2 * d1 + 1] = out[3];
    }
}

/// Runs the double scattering: gate 1 acts on (electron, dot 1), then gate 2
/// on (electron, dot 2). Returns the joint conditioned state and both
/// electron post-selection outcomes; a zero-probability outcome carries no
/// dot state rather than failing.
pub fn run_cascade(config: &CascadeConfig) -> CascadeResult {
    let mut state = [Complex64::ZERO; 8];
    for e in 0..2 {
        let e_amp = [config.electron_in.up, config.electron_in.down][e];
        for d1 in 0..2 {
            let d1_amp = [config.dot1_in.up, config.dot1_in.down][d1];
            for d2 in 0..2 {
                let d2_amp = [config.dot2_in.up, config.dot2_in.down][d2];
                state[4 * e + 2 * d1 + d2] = e_amp * d1_amp * d2_amp;
            }
        }
    }

    apply_on_electron_dot1(&single_scattering_map(&config.gate1), &mut state);
    apply_on_electron_dot2(&single_scattering_map(&config.gate2), &mut state);

    let p_transmit_both: f64 = state.iter().map(|z| z.norm_sqr()).sum();

    let outcome = |spin: SpinHalf| {
        let base = 4 * spin.index();
        let branch = [state[base], state[base + 1], state[base + 2], state[base + 3]];
        let probability: f64 = branch.iter().map(|z| z.norm_sqr()).sum();
        if probability <= 1e-30 {
            return PostselectOutcome { electron: spin, probability, dot_state: None, concurrence: None };
        }
        let scale = probability.sqrt();
        let dot_state = [branch[0] / scale, branch[1] / scale, branch[2] / scale, branch[3] / scale];
        let c = concurrence(&dot_state).expect("normalized by construction");
        PostselectOutcome {
            electron: spin,
            probability,
            dot_state: Some(dot_state),
            concurrence: Some(c),
        }
    };

    CascadeResult {
        joint_state: state,
        p_transmit_both,
        outcomes: [outcome(SpinHalf::Up), outcome(SpinHalf::Down)],
    }
}

fn branch_matrix_with(
    amps1: &SpinResolvedAmplitudes,
    amps2: &SpinResolvedAmplitudes,
    aligned1: Complex64,
    aligned2: Complex64,
) -> Mat4 {
    let z = Complex64::ZERO;
    let (n1, s1) = (amps1.t_n, amps1.t_s);
    let (n2, s2) = (amps2.t_n, amps2.t_s);
    // columns are input dot-dot states (uu, ud, du, dd) for an electron
    // injected up; each entry is the single surviving transmission branch
    // reaching that output dot-dot state
    [
        [aligned1 * aligned2, aligned1 * s2, s1 * n2, z],
        [z, aligned1 * n2, s1 * s2, s1 * aligned2],
        [z, z, n1 * aligned2, n1 * s2],
        [z, z, z, n1 * n2],
    ]
}

/// Branch-amplitude matrix on the dot1 ⊗ dot2 basis (uu, ud, du, dd) for an
/// electron injected spin-up, with the aligned-channel amplitudes divided out
/// so fully aligned branches carry unit weight. Upper triangular because only
/// transmission branches survive.
pub fn branch_amplitude_matrix(
    amps1: &SpinResolvedAmplitudes,
    amps2: &SpinResolvedAmplitudes,
) -> Mat4 {
    branch_matrix_with(amps1, amps2, Complex64::ONE, Complex64::ONE)
}

/// Same bookkeeping with the aligned-channel phases kept.
pub fn branch_amplitude_matrix_raw(
    amps1: &SpinResolvedAmplitudes,
    amps2: &SpinResolvedAmplitudes,
) -> Mat4 {
    branch_matrix_with(amps1, amps2, amps1.t_aligned(), amps2.t_aligned())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::find_sqrt_swap_j;
    use crate::gates::find_swap_j;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn consts() -> PhysicalConstants {
        PhysicalConstants::default()
    }

    fn frontal_amps(j: f64) -> SpinResolvedAmplitudes {
        spin_resolved_amplitudes(&ScatteringProblem::frontal(j)).unwrap()
    }

    fn config(j1: f64, j2: f64) -> CascadeConfig {
        CascadeConfig::new(
            frontal_amps(j1),
            frontal_amps(j2),
            Spinor2::up(),
            Spinor2::down(),
            Spinor2::down(),
            Some(SpinHalf::Down),
        )
    }

    #[test]
    fn identity_gates_pass_the_input_through() {
        let cfg = config(0.0, 0.0);
        let result = run_cascade(&cfg);
        assert_relative_eq!(result.p_transmit_both, 1.0, epsilon = 1e-14);
        // electron up, dots down-down: index 0b011 = 3
        assert!((result.joint_state[3] - Complex64::ONE).norm() < 1e-14);
        let up = result.outcome(SpinHalf::Up);
        assert_relative_eq!(up.probability, 1.0, epsilon = 1e-14);
        assert_eq!(up.concurrence, Some(0.0));
    }

    #[test]
    fn swap_map_exchanges_spins_up_to_phase() {
        let swap = frontal_amps(find_swap_j(&consts()).unwrap());
        let map = single_scattering_map(&swap);
        let up_down = [Complex64::ZERO, Complex64::ONE, Complex64::ZERO, Complex64::ZERO];
        let out = map.apply_to_state(&up_down);
        assert!(out[1].norm() < 1e-10);
        assert_relative_eq!(out[2].norm(), 1.0, epsilon = 1e-10);
    }

    #[test]
    fn aligned_branch_picks_up_only_triplet_phases() {
        let cfg = CascadeConfig::new(
            frontal_amps(23.0),
            frontal_amps(57.0),
            Spinor2::up(),
            Spinor2::up(),
            Spinor2::up(),
            None,
        );
        let result = run_cascade(&cfg);
        let expected = cfg.gate1.t_aligned() * cfg.gate2.t_aligned();
        assert!((result.joint_state[0] - expected).norm() < 1e-13);
        for amp in &result.joint_state[1..] {
            assert!(amp.norm() < 1e-14);
        }
        assert_relative_eq!(expected.norm(), 1.0, epsilon = 1e-13);
    }

    #[test]
    fn sqrt_swap_then_swap_entangles_the_dots_deterministically() {
        let (sqrt_j, _) = find_sqrt_swap_j(&consts()).unwrap();
        let swap_j = find_swap_j(&consts()).unwrap();
        let result = run_cascade(&config(sqrt_j, swap_j));

        assert_relative_eq!(result.p_transmit_both, 1.0, epsilon = 1e-12);
        let up = result.outcome(SpinHalf::Up);
        assert!(up.probability < 1e-12, "electron must exit down, p_up = {}", up.probability);
        let down = result.outcome(SpinHalf::Down);
        assert_relative_eq!(down.probability, 1.0, epsilon = 1e-12);
        assert_relative_eq!(down.concurrence.unwrap(), 1.0, epsilon = 1e-10);
    }

    #[test]
    fn twin_entangling_gates_reproduce_the_conditioned_state() {
        let result = run_cascade(&config(4.1, 4.1));
        let down = result.outcome(SpinHalf::Down);
        assert_relative_eq!(down.probability, 0.1745024, epsilon = 1e-6);
        let state = down.dot_state.unwrap();
        // basis (uu, ud, du, dd): weight on up-down and down-up only
        assert!(state[0].norm() < 1e-14);
        assert!(state[3].norm() < 1e-14);
        assert_relative_eq!(state[1].norm(), 0.7238458, epsilon = 1e-6);
        assert_relative_eq!(state[2].norm(), 0.6899618, epsilon = 1e-6);

        let up = result.outcome(SpinHalf::Up);
        assert_relative_eq!(up.probability + down.probability, result.p_transmit_both, epsilon = 1e-13);
    }

    #[test]
    fn impossible_postselection_is_flagged_not_fatal() {
        let cfg = CascadeConfig::new(
            frontal_amps(10.0),
            frontal_amps(10.0),
            Spinor2::up(),
            Spinor2::up(),
            Spinor2::up(),
            Some(SpinHalf::Down),
        );
        let result = run_cascade(&cfg);
        let down = result.outcome(SpinHalf::Down);
        assert_eq!(down.probability, 0.0);
        assert!(down.dot_state.is_none());
        assert!(down.concurrence.is_none());
    }

    #[test]
    fn branch_matrix_matches_the_printed_convention() {
        let a1 = frontal_amps(9.0);
        let a2 = frontal_amps(31.0);
        let m = branch_amplitude_matrix(&a1, &a2);
        assert_eq!(m[0][0], Complex64::ONE);
        assert!((m[0][1] - a2.t_s).norm() < 1e-15);
        assert!((m[0][2] - a1.t_s * a2.t_n).norm() < 1e-15);
        assert!((m[1][1] - a2.t_n).norm() < 1e-15);
        assert!((m[1][2] - a1.t_s * a2.t_s).norm() < 1e-15);
        assert!((m[1][3] - a1.t_s).norm() < 1e-15);
        assert!((m[2][2] - a1.t_n).norm() < 1e-15);
        assert!((m[2][3] - a1.t_n * a2.t_s).norm() < 1e-15);
        assert!((m[3][3] - a1.t_n * a2.t_n).norm() < 1e-15);
        // strictly lower entries vanish
        for i in 0..4 {
            for j in 0..i {
                assert_eq!(m[i][j], Complex64::ZERO);
            }
        }
    }

    #[test]
    fn identity_amplitudes_give_the_identity_branch_matrix() {
        let id = frontal_amps(0.0);
        let m = branch_amplitude_matrix(&id, &id);
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j { Complex64::ONE } else { Complex64::ZERO };
                assert!((m[i][j] - expected).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn raw_branch_matrix_agrees_with_cascade_on_basis_inputs() {
        let a1 = frontal_amps(14.0);
        let a2 = frontal_amps(77.0);
        let m = branch_amplitude_matrix_raw(&a1, &a2);
        let basis = [
            (Spinor2::up(), Spinor2::up()),
            (Spinor2::up(), Spinor2::down()),
            (Spinor2::down(), Spinor2::up()),
            (Spinor2::down(), Spinor2::down()),
        ];
        for (col, (d1, d2)) in basis.into_iter().enumerate() {
            let cfg = CascadeConfig::new(a1, a2, Spinor2::up(), d1, d2, None);
            let result = run_cascade(&cfg);
            // sum branches per output dot-dot state irrespective of electron spin
            for row in 0..4 {
                let total = result.joint_state[row] + result.joint_state[4 + row];
                assert!(
                    (total - m[row][col]).norm() < 1e-13,
                    "entry ({row}, {col}) mismatch"
                );
            }
        }
    }

    #[test]
    fn changing_the_second_gate_leaves_dot1_marginal_unchanged() {
        let marginal = |j2: f64| {
            let cfg = config(4.1, j2);
            let s = run_cascade(&cfg).joint_state;
            let mut rho = [[Complex64::ZERO; 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    for e in 0..2 {
                        for d2 in 0..2 {
                            rho[i][j] +=
                                s[4 * e + 2 * i + d2] * s[4 * e + 2 * j + d2].conj();
                        }
                    }
                }
            }
            rho
        };
        let a = marginal(3.0);
        let b = marginal(95.0);
        for i in 0..2 {
            for j in 0..2 {
                assert!((a[i][j] - b[i][j]).norm() < 1e-12);
            }
        }
    }

    proptest! {
        #[test]
        fn frontal_cascade_is_norm_preserving(
            j1 in 0.0f64..150.0,
            j2 in 0.0f64..150.0,
            w_e in 0.0f64..1.0,
            w_d in 0.0f64..1.0,
            phase in 0.0f64..std::f64::consts::TAU,
        ) {
            let e = Spinor2::new(
                Complex64::from(w_e.sqrt()),
                Complex64::new(0.0, phase).exp() * (1.0 - w_e).sqrt(),
            ).unwrap();
            let d = Spinor2::new(
                Complex64::from(w_d.sqrt()),
                Complex64::from((1.0 - w_d).sqrt()),
            ).unwrap();
            let cfg = CascadeConfig::new(
                frontal_amps(j1), frontal_amps(j2), e, d, Spinor2::down(), None,
            );
            let result = run_cascade(&cfg);
            prop_assert!((result.p_transmit_both - 1.0).abs() < 1e-12);
            let sum: f64 = result.outcomes.iter().map(|o| o.probability).sum();
            prop_assert!((sum - result.p_transmit_both).abs() < 1e-12);
        }

        #[test]
        fn branch_matrices_are_upper_triangular(
            j1 in 0.0f64..150.0,
            j2 in 0.0f64..150.0,
            theta in -0.8f64..0.8,
        ) {
            let p1 = ScatteringProblem::new(j1, theta, EnergySign::Electron, consts()).unwrap();
            let p2 = ScatteringProblem::new(j2, theta, EnergySign::Electron, consts()).unwrap();
            let a1 = spin_resolved_amplitudes(&p1).unwrap();
            let a2 = spin_resolved_amplitudes(&p2).unwrap();
            for m in [branch_amplitude_matrix(&a1, &a2), branch_amplitude_matrix_raw(&a1, &a2)] {
                for i in 0..4 {
                    for j in 0..i {
                        prop_assert_eq!(m[i][j], Complex64::ZERO);
                    }
                }
            }
        }
    }
}
