//! Play single games across the interesting regimes and print the payoffs.
//!
//! ```bash
//! cargo run --example single_game
//! ```

use std::f64::consts::FRAC_PI_4;

use qpd::engine::{self, GameConfig, PayoffTable, Strategy};
use qpd::noise::DecoherenceParams;
use qpd::rindler::{Acceleration, Entanglement};

fn main() -> qpd::Result<()> {
    let show = |label: &str, config: &GameConfig, a: Strategy, b: Strategy| -> qpd::Result<()> {
        let pay = engine::play(config, &a, &b)?;
        println!(
            "{label:<58} Alice {:>7.4}   Bob {:>7.4}",
            pay.alice, pay.bob
        );
        Ok(())
    };

    let classical = GameConfig::default();
    println!("-- classical limit (gamma = 0, at rest, no noise)");
    show(
        "  both cooperate",
        &classical,
        Strategy::COOPERATE,
        Strategy::COOPERATE,
    )?;
    show(
        "  both defect",
        &classical,
        Strategy::DEFECT,
        Strategy::DEFECT,
    )?;
    show(
        "  Alice defects alone",
        &classical,
        Strategy::DEFECT,
        Strategy::COOPERATE,
    )?;

    let accelerated = GameConfig {
        acceleration: Acceleration::new(FRAC_PI_4)?,
        ..classical
    };
    println!("-- Bob maximally accelerated (r = pi/4), still unentangled");
    show(
        "  both cooperate",
        &accelerated,
        Strategy::COOPERATE,
        Strategy::COOPERATE,
    )?;
    show(
        "  both defect",
        &accelerated,
        Strategy::DEFECT,
        Strategy::DEFECT,
    )?;

    let entangled = GameConfig {
        gamma: Entanglement::MAXIMAL,
        ..classical
    };
    println!("-- maximally entangled (gamma = pi/2), inertial, noiseless");
    show(
        "  both play the quantum move Q",
        &entangled,
        Strategy::QUANTUM,
        Strategy::QUANTUM,
    )?;
    show(
        "  Q against defection",
        &entangled,
        Strategy::QUANTUM,
        Strategy::DEFECT,
    )?;
    show(
        "  miracle move against cooperation",
        &entangled,
        Strategy::MIRACLE,
        Strategy::COOPERATE,
    )?;

    let noisy = GameConfig {
        gamma: Entanglement::MAXIMAL,
        acceleration: Acceleration::new(FRAC_PI_4)?,
        noise: DecoherenceParams::symmetric(1.0)?,
        payoffs: PayoffTable::default(),
    };
    println!("-- fully decohered at r = pi/4: the fair endpoint");
    show(
        "  miracle move against defection",
        &noisy,
        Strategy::MIRACLE,
        Strategy::DEFECT,
    )?;
    show("  both defect", &noisy, Strategy::DEFECT, Strategy::DEFECT)?;
    show(
        "  cooperate vs defect",
        &noisy,
        Strategy::COOPERATE,
        Strategy::DEFECT,
    )?;

    Ok(())
}
