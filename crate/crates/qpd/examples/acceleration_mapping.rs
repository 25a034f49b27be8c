//! How a proper acceleration maps onto the dimensionless parameter r, and
//! how the Unruh horizon mixes the shared state as r grows.
//!
//! ```bash
//! cargo run --example acceleration_mapping
//! ```

use std::f64::consts::FRAC_PI_4;

use qpd::rindler::{self, Acceleration, Entanglement};

fn main() -> qpd::Result<()> {
    println!("proper acceleration a (units of omega*c)   ->   r (radians, max pi/4)");
    for a in [0.0, 1.0, 2.0 * std::f64::consts::PI, 50.0, 1e3, 1e6, 1e12] {
        let r = rindler::acceleration_to_r(a, 1.0, 1.0)?;
        println!("  a = {a:>14.4e}   r = {:.12}", r.r());
    }

    println!();
    println!("purity tr(rho^2) of the traced state vs r (gamma = pi/2):");
    let initial = rindler::initial_minkowski_state(Entanglement::MAXIMAL);
    for k in 0..=8 {
        let r = FRAC_PI_4 * k as f64 / 8.0;
        let out = rindler::to_rindler_traced(&initial, Acceleration::new(r)?)?;
        let bar = "#".repeat((out.purity() * 40.0).round() as usize);
        println!("  r = {r:.4}   purity = {:.6}  {bar}", out.purity());
    }
    println!("(monotone loss of purity: the traced wedge carries information away)");
    Ok(())
}
