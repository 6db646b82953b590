//! The couplings that realize a perfect SWAP and the two sqrt-SWAP points,
//! located by bracketed bisection on solver output and compared with their
//! closed forms.
//!
//! Run with: cargo run -p kleingate --example special_couplings

use kleingate::gates::{find_sqrt_swap_j, find_swap_j};
use kleingate::scattering::{spin_resolved_amplitudes, ScatteringProblem};
use kleingate::PhysicalConstants;

fn main() -> kleingate::Result<()> {
    let consts = PhysicalConstants::default();
    let a = consts.hbar_vf_ev_angstrom;

    let swap = find_swap_j(&consts)?;
    let (sqrt_low, sqrt_high) = find_sqrt_swap_j(&consts)?;
    let sqrt7 = 7.0_f64.sqrt();

    println!("special couplings for hbar*v_F = {a} eV·Å:");
    for (name, root, closed) in [
        ("SWAP           ", swap, 8.0 / 3.0_f64.sqrt() * a),
        ("sqrt-SWAP low  ", sqrt_low, 8.0 / 3.0 * a * (11.0 - 4.0 * sqrt7).sqrt()),
        ("sqrt-SWAP high ", sqrt_high, 8.0 / 3.0 * a * (11.0 + 4.0 * sqrt7).sqrt()),
    ] {
        println!(
            "  {name} root finder {root:>18.12}   closed form {closed:>18.12}   rel gap {:.2e}",
            ((root - closed) / closed).abs()
        );
    }

    println!("\namplitudes at those couplings (frontal):");
    for (name, j) in [("SWAP", swap), ("sqrt-SWAP low", sqrt_low), ("sqrt-SWAP high", sqrt_high)] {
        let amps = spin_resolved_amplitudes(&ScatteringProblem::frontal(j))?;
        println!(
            "  {name:<15} J = {j:>9.4} eV·Å   |t_n|^2 = {:.12}   |t_s|^2 = {:.12}",
            amps.t_n.norm_sqr(),
            amps.t_s.norm_sqr()
        );
    }

    // everything scales through J/(hbar v_F): double the velocity, double the roots
    let doubled = PhysicalConstants::new(2.0 * a)?;
    println!(
        "\nscale check: find_swap_j at doubled hbar*v_F = {:.12} (ratio {:.12})",
        find_swap_j(&doubled)?,
        find_swap_j(&doubled)? / swap
    );
    Ok(())
}
