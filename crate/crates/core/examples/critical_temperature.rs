//! Critical temperature of the XXZ model against Δ for both signs of J.

use thermoent::critical::{tc_phase_curve, Phase};

fn main() {
    let grid: Vec<f64> = (0..=8).map(|i| -1.0 + 0.5 * i as f64).collect();
    let afm = tc_phase_curve(Phase::Antiferromagnetic, &grid, 1.0);
    let fm = tc_phase_curve(Phase::Ferromagnetic, &grid, -1.0);

    let show = |r: &thermoent::Result<thermoent::critical::TcResult>| match r {
        Ok(r) => r.tc.map_or("-".to_string(), |t| format!("{t:.6}")),
        Err(e) => format!("error: {e}"),
    };
    println!("{:>6} {:>10} {:>10}", "delta", "Tc_AFM", "Tc_FM");
    for ((delta, a), (_, f)) in afm.iter().zip(&fm) {
        println!("{delta:>6} {:>10} {:>10}", show(a), show(f));
    }
    println!("2/ln 3 = {:.6}", 2.0 / 3f64.ln());
}
