//! Build a Gibbs state numerically and compare it with the closed-form density matrix.

use thermoent::models::{DMParams, ModelParams, XXZParams};
use thermoent::thermal::{closed_rho_dm, closed_rho_xxz, thermal_state, Temperature};

fn main() -> thermoent::Result<()> {
    let t = Temperature::new(0.8)?;

    let p = XXZParams::new(1.0, 0.5)?;
    let numeric = thermal_state(&ModelParams::Xxz(p), t)?;
    let closed = closed_rho_xxz(&p, t)?;
    println!("xxz rho(T=0.8):\n{:?}", closed.rho());
    println!("max |numeric - closed| = {:.1e}", numeric.rho().max_abs_diff(closed.rho()));

    let p = DMParams::new(1.0, 1.5)?;
    let numeric = thermal_state(&ModelParams::Dm(p), t)?;
    let closed = closed_rho_dm(&p, t)?;
    let h = ModelParams::Dm(p).hamiltonian();
    println!("dm rho(T=0.8):\n{:?}", closed.rho());
    println!("max |numeric - closed| = {:.1e}", numeric.rho().max_abs_diff(closed.rho()));
    println!("|[rho, H]| = {:.1e}", numeric.rho().commutator(&h).frobenius_norm());
    Ok(())
}
