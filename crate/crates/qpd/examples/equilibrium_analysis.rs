//! Nash equilibria, Pareto optimality and dominance across the regimes the
//! game moves through as entanglement, acceleration and noise change.
//!
//! ```bash
//! cargo run --example equilibrium_analysis
//! ```

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use qpd::engine::{GameConfig, PayoffTable, Strategy};
use qpd::equilibria::{self, FiniteGame, NamedStrategy, DEFAULT_TOL};
use qpd::noise::DecoherenceParams;
use qpd::rindler::{Acceleration, Entanglement};
use qpd::Player;

fn analyze(label: &str, config: &GameConfig, strategies: Vec<NamedStrategy>) -> qpd::Result<()> {
    let game = FiniteGame::from_play(config, strategies)?;
    let show = |set: &[(usize, usize)]| {
        set.iter()
            .map(|&(i, j)| {
                format!(
                    "({},{})",
                    game.strategies()[i].name,
                    game.strategies()[j].name
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    let dominant = |player| {
        equilibria::dominant_strategy(&game, player, DEFAULT_TOL)
            .map(|i| game.strategies()[i].name.clone())
            .unwrap_or_else(|| "-".into())
    };
    println!("{label}");
    println!(
        "  nash:     {}",
        show(&equilibria::nash_equilibria(&game, DEFAULT_TOL))
    );
    println!(
        "  pareto:   {}",
        show(&equilibria::pareto_optimal(&game, DEFAULT_TOL))
    );
    println!(
        "  dominant: Alice {}   Bob {}",
        dominant(Player::Alice),
        dominant(Player::Bob)
    );
    Ok(())
}

fn main() -> qpd::Result<()> {
    let cd = vec![
        NamedStrategy::new("C", Strategy::COOPERATE),
        NamedStrategy::new("D", Strategy::DEFECT),
    ];
    let mut cdq = cd.clone();
    cdq.push(NamedStrategy::new("Q", Strategy::QUANTUM));

    analyze("classical game", &GameConfig::default(), cd.clone())?;

    let entangled = GameConfig {
        gamma: Entanglement::MAXIMAL,
        ..GameConfig::default()
    };
    analyze(
        "\nmaximally entangled, classical moves",
        &entangled,
        cd.clone(),
    )?;
    analyze(
        "\nmaximally entangled, quantum move allowed",
        &entangled,
        cdq,
    )?;

    let decohered = GameConfig {
        gamma: Entanglement::MAXIMAL,
        acceleration: Acceleration::new(FRAC_PI_4)?,
        noise: DecoherenceParams::symmetric(1.0)?,
        payoffs: PayoffTable::default(),
    };
    analyze(
        "\nfully decohered at the acceleration limit (no dilemma left)",
        &decohered,
        cd,
    )?;

    println!();
    for r in [0.0, FRAC_PI_2 / 4.0, FRAC_PI_4] {
        let p = equilibria::diagonal_profile_crossing(Acceleration::new(r)?)?;
        match p {
            Some(p) => println!(
                "at r = {r:.4}, same-move profiles pay below the mixed profiles for p > {p:.4}"
            ),
            None => println!("at r = {r:.4}, same-move profiles stay competitive for all p"),
        }
    }
    Ok(())
}
