//! `kleingate` — quantum gates from Klein tunneling in graphene nanoribbons.
//!
//! A ballistic electron spin in a semiconducting armchair nanoribbon scatters
//! off the spin of a gated quantum dot through a contact Heisenberg coupling
//! `J S_e·S_d δ(x)`. Because the carrier is a massless Dirac fermion, frontal
//! scattering transmits with probability one for any coupling strength, and
//! the transmitted two-spin map is a unitary gate: identity-like at small J,
//! sqrt-SWAP at J ≈ 11.3 eV·Å, SWAP at J ≈ 30.4 eV·Å. A second dot further
//! along the ribbon turns the electron into an entanglement mediator between
//! two static spins.
//!
//! The library solves the scattering problem two independent ways (a
//! singlet/triplet channel decomposition and a direct 8x8 linear solve),
//! classifies the resulting gates, estimates J from dot geometry, and
//! simulates the two-dot cascade protocol.
//!
//! ## Examples
//!
//! One runnable example per capability:
//!
//! ```text
//! examples/
//! ├── band_structure_basics.rs    # gap, incidence angle, contact-regime checks
//! ├── scattering_amplitudes.rs    # spin-resolved amplitudes, both solvers
//! ├── special_couplings.rs        # SWAP and sqrt-SWAP couplings by root finding
//! ├── gate_classification.rs      # gate condition, classification, concurrence
//! ├── coupling_estimate.rs        # t, U and J from the overlap/Coulomb integrals
//! ├── entanglement_cascade.rs     # the two-dot mediation protocol
//! └── figure_sweeps.rs            # angle-coupling maps and transmission curves
//! ```
//!
//! ```bash
//! cargo run -p kleingate --example scattering_amplitudes
//! cargo run -p kleingate --example entanglement_cascade
//! ```
//!
//! The `kleingate` binary exposes the same capabilities as subcommands
//! (`amplitudes`, `sweep2d`, `sweep1d`, `special-j`, `coupling`, `cascade`,
//! `validate`, `figures`).
//!
//! ## Quick start
//!
//! ```
//! use kleingate::{PhysicalConstants, ScatteringProblem};
//! use kleingate::scattering::spin_resolved_amplitudes;
//! use kleingate::gates::{classify_gate, DEFAULT_TOL_CLASS, DEFAULT_TOL_UNITARY};
//!
//! let problem = ScatteringProblem::frontal(30.400956);
//! let amps = spin_resolved_amplitudes(&problem)?;
//! assert!(amps.t_n.norm() < 1e-6);          // no spin flip is suppressed
//! assert!((amps.t_s.norm() - 1.0).abs() < 1e-6); // the flip is certain
//!
//! let report = classify_gate(&problem, DEFAULT_TOL_UNITARY, DEFAULT_TOL_CLASS)?;
//! assert_eq!(report.classification.to_string(), "SWAP");
//! # Ok::<(), kleingate::Error>(())
//! ```

pub mod cascade;
pub mod coupling;
pub mod error;
pub mod gates;
pub mod kinematics;
pub mod manifest;
pub mod numeric;
pub mod scattering;
pub mod svg;
pub mod sweep;

pub use cascade::{CascadeConfig, CascadeResult, PostselectOutcome, SpinHalf};
pub use coupling::{CouplingEstimate, DotGeometry, QmcSettings, WavefunctionModel};
pub use error::{Error, Result};
pub use gates::{GateClassification, GateReport, TransmissionMatrix, TwoQubitDensity};
pub use kinematics::{
    Branch, ElectronKinematics, PhysicalConstants, RibbonConfig, ValidityReport,
};
pub use manifest::RunManifest;
pub use scattering::{
    ChannelAmplitudes, EnergySign, FullSolution, PseudospinSpinor, ScatteringProblem,
    SpinConfiguration, SpinResolvedAmplitudes, Spinor2,
};
pub use sweep::{AxisSpec, Sweep1dSpec, Sweep2dSpec};
