//! Gate-level view: the unitarity condition, success probability, gate
//! classes across the coupling range, and the entanglement created by the
//! transmission-conditioned map.
//!
//! Run with: cargo run -p kleingate --example gate_classification

use num_complex::Complex64;

use kleingate::gates::{
    apply_transmission_map, classify_gate, TransmissionMatrix, TwoQubitDensity,
    DEFAULT_TOL_CLASS, DEFAULT_TOL_UNITARY,
};
use kleingate::scattering::{spin_resolved_amplitudes, EnergySign, ScatteringProblem};
use kleingate::PhysicalConstants;

fn main() -> kleingate::Result<()> {
    let consts = PhysicalConstants::default();

    println!("frontal gate classes across the coupling range:");
    println!("{:>10} {:>14} {:>14} {:>14} {:>14}", "J (eVÅ)", "p_success", "gate cond.", "class", "concurrence");
    for j in [0.0, 2.0, 4.1, 11.334227, 20.0, 30.400956, 50.0, 81.542227, 110.0] {
        let problem = ScatteringProblem::frontal(j);
        let report = classify_gate(&problem, DEFAULT_TOL_UNITARY, DEFAULT_TOL_CLASS)?;
        println!(
            "{j:>10.3} {:>14.9} {:>14.2e} {:>14} {:>14.6}",
            report.success_probability,
            report.gate_condition,
            report.classification.to_string(),
            report.concurrence_of_output
        );
    }

    println!("\noblique incidence breaks unitarity except at the SWAP coupling:");
    for (j, theta) in [(30.400956, 0.4), (50.0, 0.4), (50.0, 0.0)] {
        let problem = ScatteringProblem::new(j, theta, EnergySign::Electron, consts)?;
        let report = classify_gate(&problem, DEFAULT_TOL_UNITARY, DEFAULT_TOL_CLASS)?;
        println!(
            "  J = {j:>7.3}, theta = {theta:>4.2}: gate condition {:+.3e}  ->  {}",
            report.gate_condition, report.classification
        );
    }

    // conditioned evolution of a density matrix through a sqrt-SWAP gate
    let amps = spin_resolved_amplitudes(&ScatteringProblem::frontal(11.334227))?;
    let t = TransmissionMatrix::from_amplitudes(&amps);
    let up_down = [Complex64::ZERO, Complex64::ONE, Complex64::ZERO, Complex64::ZERO];
    let rho_in = TwoQubitDensity::from_pure_state(&up_down)?;
    let (rho_out, p) = apply_transmission_map(&t, &rho_in)?;
    println!("\nsqrt-SWAP on |up,down><up,down| (transmission probability {p:.9}):");
    for (i, row) in rho_out.matrix().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|z| format!("{:+.3}{:+.3}i", z.re, z.im)).collect();
        println!("  row {i}: [{}]", cells.join(", "));
    }
    Ok(())
}
