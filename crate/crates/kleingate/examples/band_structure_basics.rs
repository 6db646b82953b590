//! Nanoribbon kinematics: band gap vs width, the incidence angle forced by
//! transverse quantization, and the contact-potential validity checks.
//!
//! Run with: cargo run -p kleingate --example band_structure_basics

use kleingate::kinematics::{
    band_gap, de_broglie_wavelength, incidence_angle, transverse_wavevector,
    validate_delta_regime, Branch, PhysicalConstants, RibbonConfig,
};

fn main() -> kleingate::Result<()> {
    let consts = PhysicalConstants::default();
    println!("hbar*v_F = {} eV·Å\n", consts.hbar_vf_ev_angstrom);

    println!("band gap of semiconducting armchair ribbons:");
    println!("{:>10} {:>14} {:>16}", "W (nm)", "k0y (1/nm)", "E_gap (meV)");
    for width in [10.0, 15.0, 30.0, 60.0, 120.0] {
        let ribbon = RibbonConfig::new(width, 0, Branch::Plus)?;
        println!(
            "{width:>10} {:>14.6} {:>16.3}",
            transverse_wavevector(&ribbon),
            band_gap(&ribbon, &consts) * 1e3
        );
    }

    let ribbon = RibbonConfig::new(30.0, 0, Branch::Plus)?;
    let k0y = transverse_wavevector(&ribbon);
    println!("\nincidence angle of the fundamental mode at W = 30 nm:");
    println!("{:>14} {:>12} {:>12}", "energy (meV)", "theta (rad)", "theta (deg)");
    for energy_mev in [40.0, 60.0, 120.0, 300.0, 1000.0] {
        let theta = incidence_angle(energy_mev * 1e-3, k0y, &consts)?;
        println!("{energy_mev:>14} {theta:>12.5} {:>12.3}", theta.to_degrees());
    }
    println!("(frontal scattering is approached by raising the carrier energy)");

    println!("\ncontact-potential validity at 60 meV:");
    let lambda = de_broglie_wavelength(0.060, &consts)?;
    println!("de Broglie wavelength = {lambda:.2} nm");
    for dx in [5.0, 10.0, 13.0, 21.0] {
        let report = validate_delta_regime(dx, 0.060, 100.0, &consts)?;
        println!(
            "  dx = {dx:>5} nm: 5·dx/λ = {:.3}  contact regime {}",
            report.ratio_5dx_over_lambda,
            if report.delta_regime_ok { "ok" } else { "NOT satisfied" }
        );
    }
    Ok(())
}
