//! Concurrence of the DM model against temperature for several D.

use thermoent::concurrence::concurrence_dm;
use thermoent::critical::tc_dm;
use thermoent::models::DMParams;
use thermoent::thermal::Temperature;

fn main() -> thermoent::Result<()> {
    let ds = [0.0, 0.5, 1.0, 2.0];
    let params: Vec<DMParams> = ds.iter().map(|&d| DMParams::new(1.0, d)).collect::<Result<_, _>>()?;

    print!("{:>5}", "T");
    for d in ds {
        print!("  C(D={d:<3})");
    }
    println!();
    for i in 1..=16 {
        let t = Temperature::new(0.25 * i as f64)?;
        print!("{:>5.2}", t.value());
        for p in &params {
            print!("  {:>8.5}", concurrence_dm(p, t)?);
        }
        println!();
    }
    for p in &params {
        println!("D = {}: Tc = {:.6}", p.d, tc_dm(p)?.tc.unwrap());
    }
    Ok(())
}
