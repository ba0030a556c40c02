//! Closed-form concurrence against the numeric pipeline over a parameter grid.

use thermoent::concurrence::{closed_concurrence, numeric_concurrence};
use thermoent::models::{DMParams, ModelParams, XXZParams};
use thermoent::thermal::Temperature;

fn main() -> thermoent::Result<()> {
    let mut models: Vec<ModelParams> = Vec::new();
    for j in [-1.0, 1.0] {
        for delta in [-2.0, -0.5, 0.0, 1.0, 2.0] {
            models.push(XXZParams::new(j, delta)?.into());
        }
        for d in [0.0, 1.0, 2.0] {
            models.push(DMParams::new(j, d)?.into());
        }
    }

    let mut worst: f64 = 0.0;
    for model in &models {
        for t in [0.1, 0.5, 1.0, 2.0] {
            let t = Temperature::new(t)?;
            let closed = closed_concurrence(model, t)?;
            let numeric = numeric_concurrence(model, t)?;
            worst = worst.max((closed - numeric.value).abs());
            if t.value() == 0.5 {
                println!("{model:<28} C(T=0.5) = {closed:.10}  λ = {:.4?}", numeric.lambdas);
            }
        }
    }
    println!("max |closed - numeric| = {worst:.1e}");
    Ok(())
}
