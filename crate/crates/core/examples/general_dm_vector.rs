//! Numeric pipeline for an XXZ exchange with an arbitrary DM vector, where no
//! closed form exists. Rotating the vector about z leaves the concurrence fixed.

use thermoent::concurrence::{closed_concurrence, numeric_concurrence};
use thermoent::models::{GeneralHeisenbergDMParams, ModelParams};
use thermoent::thermal::Temperature;

fn main() -> thermoent::Result<()> {
    let t = Temperature::new(0.7)?;
    for angle in [0.0f64, 0.5, 1.0, 2.0] {
        let dvec = [0.8 * angle.cos(), 0.8 * angle.sin(), 0.6];
        let model: ModelParams = GeneralHeisenbergDMParams::new(1.0, 0.5, dvec)?.into();
        let c = numeric_concurrence(&model, t)?;
        println!("Dvec = ({:+.3}, {:+.3}, {:+.3})  C = {:.12}", dvec[0], dvec[1], dvec[2], c.value);
    }

    let model: ModelParams = GeneralHeisenbergDMParams::new(1.0, 0.5, [0.0, 0.0, 1.0])?.into();
    match closed_concurrence(&model, t) {
        Ok(_) => unreachable!(),
        Err(e) => println!("closed form: {e}"),
    }
    Ok(())
}
