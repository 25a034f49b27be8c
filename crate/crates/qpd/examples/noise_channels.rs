//! Amplitude damping as a Kraus channel: population transfer, coherence
//! decay, the composition law, and lifting to one qubit of a pair.
//!
//! ```bash
//! cargo run --example noise_channels
//! ```

use num_complex::Complex64;

use qpd::noise::{self, DecoherenceParams};
use qpd::qmat::DensityMatrix;
use qpd::rindler::{self, Acceleration, Entanglement};

fn main() -> qpd::Result<()> {
    let excited = DensityMatrix::from_pure(
        vec![2],
        &[Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
    )?;
    println!("excited-state population after damping strength p:");
    for p in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let out = noise::amplitude_damping(p)?.apply(&excited)?;
        println!(
            "  p = {p:.2}   ground {:.3}   excited {:.3}",
            out.diagonal()[0],
            out.diagonal()[1]
        );
    }

    let s = std::f64::consts::FRAC_1_SQRT_2;
    let plus =
        DensityMatrix::from_pure(vec![2], &[Complex64::new(s, 0.0), Complex64::new(s, 0.0)])?;
    println!();
    println!("coherence |rho01| of |+> after damping (decays like sqrt(1-p)):");
    for p in [0.0, 0.5, 0.96] {
        let out = noise::amplitude_damping(p)?.apply(&plus)?;
        println!(
            "  p = {p:.2}   |rho01| = {:.6}   sqrt(1-p)/2 = {:.6}",
            out.matrix().get(0, 1).norm(),
            (1.0 - p).sqrt() / 2.0
        );
    }

    println!();
    println!("composition law: damping p then q equals damping p + q - pq");
    let (p, q) = (0.3, 0.5);
    let two = noise::amplitude_damping(q)?.apply(&noise::amplitude_damping(p)?.apply(&plus)?)?;
    let one = noise::amplitude_damping(p + q - p * q)?.apply(&plus)?;
    println!(
        "  max entry difference: {:.3e}",
        two.matrix().max_abs_diff(one.matrix())?
    );

    println!();
    println!("local lifting: damping only Bob of the Unruh-traced pair");
    let pair = rindler::to_rindler_traced(
        &rindler::initial_minkowski_state(Entanglement::MAXIMAL),
        Acceleration::new(0.5)?,
    )?;
    let damped = noise::apply_two_local(&pair, &DecoherenceParams::new(0.0, 0.7)?)?;
    println!("  populations before: {:?}", round3(&pair.diagonal()));
    println!("  populations after:  {:?}", round3(&damped.diagonal()));
    println!("  trace defect after: {:.3e}", damped.report().trace_defect);
    Ok(())
}

fn round3(xs: &[f64]) -> Vec<f64> {
    xs.iter().map(|x| (x * 1000.0).round() / 1000.0).collect()
}
