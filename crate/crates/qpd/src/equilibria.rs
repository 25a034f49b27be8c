//! Game-theoretic analysis over finite strategy sets, plus the parameter
//! sweeps behind the payoff-surface data sets.
//!
//! Analysis works on a [`FiniteGame`]: an ordered list of named strategies
//! and the full payoff matrix obtained from [`engine::play`]. Ties are
//! resolved with an explicit tolerance (default [`DEFAULT_TOL`]) because the
//! interesting degenerate points (full decoherence, the acceleration
//! limit) produce exactly equal payoffs up to rounding.
//!
//! "Pareto optimal" means not strictly dominated: no other profile improves
//! one player by more than the tolerance without costing the other more than
//! the tolerance. That set is never empty.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_6, PI};

use crate::engine::{self, GameConfig, PayoffPair, PayoffTable, Strategy};
use crate::noise::DecoherenceParams;
use crate::rindler::{Acceleration, Entanglement};
use crate::{Error, Player, Result};

/// Default tie tolerance for equilibrium analysis.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A strategy together with the label used in reports.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedStrategy {
    pub name: String,
    pub strategy: Strategy,
}

impl NamedStrategy {
    pub fn new(name: impl Into<String>, strategy: Strategy) -> Self {
        Self {
            name: name.into(),
            strategy,
        }
    }
}

/// A two-player game restricted to a finite common strategy set.
#[derive(Debug, Clone)]
pub struct FiniteGame {
    strategies: Vec<NamedStrategy>,
    payoffs: Vec<Vec<PayoffPair>>,
}

impl FiniteGame {
    /// Wraps an explicit payoff matrix; `payoffs[i][j]` is the outcome when
    /// Alice plays strategy `i` and Bob plays strategy `j`.
    pub fn new(strategies: Vec<NamedStrategy>, payoffs: Vec<Vec<PayoffPair>>) -> Result<Self> {
        let n = strategies.len();
        if n == 0 {
            return Err(Error::InvalidArgument(
                "finite game needs at least one strategy".into(),
            ));
        }
        if payoffs.len() != n || payoffs.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "payoff matrix must be {n}x{n}"
            )));
        }
        Ok(Self {
            strategies,
            payoffs,
        })
    }

    /// Builds the game by evaluating the engine on every profile.
    pub fn from_play(config: &GameConfig, strategies: Vec<NamedStrategy>) -> Result<Self> {
        let bare: Vec<Strategy> = strategies.iter().map(|s| s.strategy).collect();
        let payoffs = engine::payoff_matrix(config, &bare)?;
        Self::new(strategies, payoffs)
    }

    pub fn len(&self) -> usize {
        self.strategies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strategies.is_empty()
    }

    pub fn strategies(&self) -> &[NamedStrategy] {
        &self.strategies
    }

    pub fn payoff(&self, alice: usize, bob: usize) -> PayoffPair {
        self.payoffs[alice][bob]
    }

    pub fn payoffs(&self) -> &[Vec<PayoffPair>] {
        &self.payoffs
    }
}

/// All pure-strategy Nash profiles: `(i, j)` such that neither player can
/// gain more than `tol` by a unilateral deviation. Row-major order.
pub fn nash_equilibria(game: &FiniteGame, tol: f64) -> Vec<(usize, usize)> {
    let n = game.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let here = game.payoff(i, j);
            let alice_best = (0..n).all(|i2| game.payoff(i2, j).alice <= here.alice + tol);
            let bob_best = (0..n).all(|j2| game.payoff(i, j2).bob <= here.bob + tol);
            if alice_best && bob_best {
                out.push((i, j));
            }
        }
    }
    out
}

/// All profiles that are not strictly dominated: no other profile improves
/// one player by more than `tol` while costing the other at most `tol`.
pub fn pareto_optimal(game: &FiniteGame, tol: f64) -> Vec<(usize, usize)> {
    let n = game.len();
    let dominated = |a: PayoffPair, b: PayoffPair| -> bool {
        // b dominates a.
        (b.alice > a.alice + tol && b.bob >= a.bob - tol)
            || (b.bob > a.bob + tol && b.alice >= a.alice - tol)
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let here = game.payoff(i, j);
            let beaten = (0..n)
                .flat_map(|i2| (0..n).map(move |j2| (i2, j2)))
                .any(|(i2, j2)| (i2, j2) != (i, j) && dominated(here, game.payoff(i2, j2)));
            if !beaten {
                out.push((i, j));
            }
        }
    }
    out
}

/// The player's payoff at profile (alice_idx, bob_idx).
fn payoff_for(game: &FiniteGame, player: Player, alice_idx: usize, bob_idx: usize) -> f64 {
    let pair = game.payoff(alice_idx, bob_idx);
    match player {
        Player::Alice => pair.alice,
        Player::Bob => pair.bob,
    }
}

/// The set of the player's best responses (within `tol` of the maximum)
/// to a fixed opponent strategy.
pub fn best_response(
    game: &FiniteGame,
    player: Player,
    opponent: usize,
    tol: f64,
) -> Result<Vec<usize>> {
    let n = game.len();
    if opponent >= n {
        return Err(Error::InvalidArgument(format!(
            "opponent strategy index {opponent} out of range for {n} strategies"
        )));
    }
    let value = |own: usize| match player {
        Player::Alice => payoff_for(game, player, own, opponent),
        Player::Bob => payoff_for(game, player, opponent, own),
    };
    let best = (0..n).map(value).fold(f64::NEG_INFINITY, f64::max);
    Ok((0..n).filter(|&own| value(own) >= best - tol).collect())
}

/// A strategy that is a best response (within `tol`) to every opponent
/// strategy, if one exists. The lowest-index qualifier is returned.
pub fn dominant_strategy(game: &FiniteGame, player: Player, tol: f64) -> Option<usize> {
    let n = game.len();
    (0..n).find(|&own| {
        (0..n).all(|opp| {
            let mine = match player {
                Player::Alice => payoff_for(game, player, own, opp),
                Player::Bob => payoff_for(game, player, opp, own),
            };
            (0..n).all(|rival| {
                let theirs = match player {
                    Player::Alice => payoff_for(game, player, rival, opp),
                    Player::Bob => payoff_for(game, player, opp, rival),
                };
                theirs <= mine + tol
            })
        })
    })
}

/// A parameter that a sweep axis can vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepParam {
    /// Symmetric decoherence: sets both p1 and p2.
    P,
    P1,
    P2,
    R,
    Gamma,
    /// Bob's move angle θ_B (overrides his profile strategy's θ).
    ThetaB,
    /// Bob's move phase α_B (overrides his profile strategy's α).
    AlphaB,
}

impl SweepParam {
    pub fn name(&self) -> &'static str {
        match self {
            Self::P => "p",
            Self::P1 => "p1",
            Self::P2 => "p2",
            Self::R => "r",
            Self::Gamma => "gamma",
            Self::ThetaB => "thetaB",
            Self::AlphaB => "alphaB",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "p" => Some(Self::P),
            "p1" => Some(Self::P1),
            "p2" => Some(Self::P2),
            "r" => Some(Self::R),
            "gamma" => Some(Self::Gamma),
            "thetab" | "theta_b" => Some(Self::ThetaB),
            "alphab" | "alpha_b" => Some(Self::AlphaB),
            _ => None,
        }
    }

    /// Legal closed interval for this parameter.
    pub fn legal_range(&self) -> (f64, f64) {
        match self {
            Self::P | Self::P1 | Self::P2 => (0.0, 1.0),
            Self::R => (0.0, FRAC_PI_4),
            Self::Gamma => (0.0, FRAC_PI_2),
            Self::ThetaB => (0.0, PI),
            Self::AlphaB => (-PI, PI),
        }
    }
}

/// One evenly spaced sweep axis.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepAxis {
    param: SweepParam,
    start: f64,
    stop: f64,
    steps: usize,
}

impl SweepAxis {
    /// `steps >= 1` points from `start` to `stop`, both within the
    /// parameter's legal range.
    pub fn new(param: SweepParam, start: f64, stop: f64, steps: usize) -> Result<Self> {
        if steps == 0 {
            return Err(Error::InvalidArgument(format!(
                "axis {}: needs at least one step",
                param.name()
            )));
        }
        let (lo, hi) = param.legal_range();
        if !(start.is_finite() && stop.is_finite()) || start > stop || start < lo || stop > hi {
            return Err(Error::InvalidArgument(format!(
                "axis {}: bounds [{start}, {stop}] outside legal range [{lo}, {hi}]",
                param.name()
            )));
        }
        Ok(Self {
            param,
            start,
            stop,
            steps,
        })
    }

    pub fn param(&self) -> SweepParam {
        self.param
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.start];
        }
        (0..self.steps)
            .map(|k| self.start + (self.stop - self.start) * k as f64 / (self.steps - 1) as f64)
            .collect()
    }
}

/// A grid of axis values crossed with a set of strategy profiles.
#[derive(Debug, Clone)]
pub struct SweepGrid {
    axes: Vec<SweepAxis>,
    profiles: Vec<(NamedStrategy, NamedStrategy)>,
}

impl SweepGrid {
    pub fn new(
        axes: Vec<SweepAxis>,
        profiles: Vec<(NamedStrategy, NamedStrategy)>,
    ) -> Result<Self> {
        if profiles.is_empty() {
            return Err(Error::InvalidArgument(
                "sweep needs at least one strategy profile".into(),
            ));
        }
        for (i, a) in axes.iter().enumerate() {
            for b in &axes[i + 1..] {
                if a.param() == b.param() {
                    return Err(Error::InvalidArgument(format!(
                        "duplicate sweep axis {}",
                        a.param().name()
                    )));
                }
                let clash = matches!(
                    (a.param(), b.param()),
                    (SweepParam::P, SweepParam::P1 | SweepParam::P2)
                        | (SweepParam::P1 | SweepParam::P2, SweepParam::P)
                );
                if clash {
                    return Err(Error::InvalidArgument(
                        "axis p cannot be combined with p1 or p2".into(),
                    ));
                }
            }
        }
        Ok(Self { axes, profiles })
    }

    pub fn axes(&self) -> &[SweepAxis] {
        &self.axes
    }

    pub fn profiles(&self) -> &[(NamedStrategy, NamedStrategy)] {
        &self.profiles
    }

    /// Number of records [`sweep`] will emit.
    pub fn record_count(&self) -> usize {
        self.profiles.len() * self.axes.iter().map(|a| a.steps()).product::<usize>()
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone)]
pub struct SweepRecord {
    pub gamma: f64,
    pub r: f64,
    pub p1: f64,
    pub p2: f64,
    pub alice: Strategy,
    pub bob: Strategy,
    pub alice_name: String,
    pub bob_name: String,
    pub payoffs: PayoffPair,
}

/// Evaluates the engine at every grid point.
///
/// Records are ordered profile by profile, then row-major over the axes
/// (first axis outermost), so output order is deterministic regardless of
/// how the evaluation is scheduled.
pub fn sweep(template: &GameConfig, grid: &SweepGrid) -> Result<Vec<SweepRecord>> {
    let axis_values: Vec<Vec<f64>> = grid.axes.iter().map(|a| a.values()).collect();
    let mut records = Vec::with_capacity(grid.record_count());

    for (alice_named, bob_named) in &grid.profiles {
        let mut cursor = vec![0usize; axis_values.len()];
        loop {
            let mut gamma = template.gamma;
            let mut accel = template.acceleration;
            let (mut p1, mut p2) = (template.noise.p1(), template.noise.p2());
            let mut bob = bob_named.strategy;

            for (axis, &k) in grid.axes.iter().zip(&cursor) {
                let v = axis_values[grid
                    .axes
                    .iter()
                    .position(|a| a.param() == axis.param())
                    .expect("axis exists")][k];
                match axis.param() {
                    SweepParam::P => {
                        p1 = v;
                        p2 = v;
                    }
                    SweepParam::P1 => p1 = v,
                    SweepParam::P2 => p2 = v,
                    SweepParam::R => accel = Acceleration::new(v)?,
                    SweepParam::Gamma => gamma = Entanglement::new(v)?,
                    SweepParam::ThetaB => bob = Strategy::new(bob.alpha(), v)?,
                    SweepParam::AlphaB => bob = Strategy::new(v, bob.theta())?,
                }
            }

            let config = GameConfig {
                gamma,
                acceleration: accel,
                noise: DecoherenceParams::new(p1, p2)?,
                payoffs: template.payoffs,
            };
            let payoffs = engine::play(&config, &alice_named.strategy, &bob)?;
            records.push(SweepRecord {
                gamma: gamma.gamma(),
                r: accel.r(),
                p1,
                p2,
                alice: alice_named.strategy,
                bob,
                alice_name: alice_named.name.clone(),
                bob_name: bob_named.name.clone(),
                payoffs,
            });

            // Row-major increment: last axis fastest.
            let mut pos = cursor.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                cursor[pos] += 1;
                if cursor[pos] < axis_values[pos].len() {
                    break;
                }
                cursor[pos] = 0;
            }
            if cursor.iter().all(|&k| k == 0) {
                break;
            }
        }
    }
    Ok(records)
}

/// The four classical profiles as named sweep profiles.
pub fn classical_profiles() -> Vec<(NamedStrategy, NamedStrategy)> {
    let c = |n: &str, s: Strategy| NamedStrategy::new(n, s);
    vec![
        (c("C", Strategy::COOPERATE), c("C", Strategy::COOPERATE)),
        (c("C", Strategy::COOPERATE), c("D", Strategy::DEFECT)),
        (c("D", Strategy::DEFECT), c("C", Strategy::COOPERATE)),
        (c("D", Strategy::DEFECT), c("D", Strategy::DEFECT)),
    ]
}

/// Preset sweeps for the three bundled payoff-surface data sets:
///
/// 1. maximally entangled classical profiles over `p × r` (101×101 each);
/// 2. the same profiles over `p` at the acceleration limit `r = π/4`;
/// 3. Alice playing the miracle move against Bob's classical span
///    `U(0, θ_B)` over `p × θ_B` at `r = π/6`.
pub fn figure_preset(figure: u8) -> Result<(GameConfig, SweepGrid)> {
    let base = GameConfig {
        gamma: Entanglement::MAXIMAL,
        acceleration: Acceleration::NONE,
        noise: DecoherenceParams::default(),
        payoffs: PayoffTable::default(),
    };
    match figure {
        1 => {
            let grid = SweepGrid::new(
                vec![
                    SweepAxis::new(SweepParam::P, 0.0, 1.0, 101)?,
                    SweepAxis::new(SweepParam::R, 0.0, FRAC_PI_4, 101)?,
                ],
                classical_profiles(),
            )?;
            Ok((base, grid))
        }
        2 => {
            let config = GameConfig {
                acceleration: Acceleration::LIMIT,
                ..base
            };
            let grid = SweepGrid::new(
                vec![SweepAxis::new(SweepParam::P, 0.0, 1.0, 101)?],
                classical_profiles(),
            )?;
            Ok((config, grid))
        }
        3 => {
            let config = GameConfig {
                acceleration: Acceleration::new(FRAC_PI_6)?,
                ..base
            };
            let grid = SweepGrid::new(
                vec![
                    SweepAxis::new(SweepParam::P, 0.0, 1.0, 101)?,
                    SweepAxis::new(SweepParam::ThetaB, 0.0, PI, 101)?,
                ],
                vec![(
                    NamedStrategy::new("M", Strategy::MIRACLE),
                    NamedStrategy::new("theta_B", Strategy::COOPERATE),
                )],
            )?;
            Ok((config, grid))
        }
        other => Err(Error::InvalidArgument(format!(
            "unknown figure preset {other}; expected 1, 2 or 3"
        ))),
    }
}

/// Decoherence level above which, in the maximally entangled classical game
/// with symmetric noise at the given acceleration, both same-move profiles
/// pay every player less than either mixed-move profile. `None` if the
/// same-move profiles stay competitive across the whole range.
///
/// Found by bisecting `play(C,C).alice − play(C,D).alice` (the best
/// same-move payoff against the worst mixed-move payoff).
pub fn diagonal_profile_crossing(accel: Acceleration) -> Result<Option<f64>> {
    let gap = |p: f64| -> Result<f64> {
        let config = GameConfig {
            gamma: Entanglement::MAXIMAL,
            acceleration: accel,
            noise: DecoherenceParams::symmetric(p)?,
            payoffs: PayoffTable::default(),
        };
        let cc = engine::play(&config, &Strategy::COOPERATE, &Strategy::COOPERATE)?;
        let cd = engine::play(&config, &Strategy::COOPERATE, &Strategy::DEFECT)?;
        Ok(cc.alice - cd.alice)
    };
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    if gap(lo)? <= 0.0 {
        return Ok(Some(0.0));
    }
    if gap(hi)? > 0.0 {
        return Ok(None);
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if gap(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(0.5 * (lo + hi)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(gamma: f64, r: f64, p1: f64, p2: f64) -> GameConfig {
        GameConfig {
            gamma: Entanglement::new(gamma).unwrap(),
            acceleration: Acceleration::new(r).unwrap(),
            noise: DecoherenceParams::new(p1, p2).unwrap(),
            payoffs: PayoffTable::default(),
        }
    }

    fn cd_set() -> Vec<NamedStrategy> {
        vec![
            NamedStrategy::new("C", Strategy::COOPERATE),
            NamedStrategy::new("D", Strategy::DEFECT),
        ]
    }

    fn cdq_set() -> Vec<NamedStrategy> {
        let mut set = cd_set();
        set.push(NamedStrategy::new("Q", Strategy::QUANTUM));
        set
    }

    #[test]
    fn classical_game_has_the_textbook_structure() {
        let game = FiniteGame::from_play(&config(0.0, 0.0, 0.0, 0.0), cd_set()).unwrap();
        assert_eq!(nash_equilibria(&game, DEFAULT_TOL), vec![(1, 1)]);
        assert_eq!(
            pareto_optimal(&game, DEFAULT_TOL),
            vec![(0, 0), (0, 1), (1, 0)]
        );
        assert_eq!(
            dominant_strategy(&game, Player::Alice, DEFAULT_TOL),
            Some(1)
        );
        assert_eq!(dominant_strategy(&game, Player::Bob, DEFAULT_TOL), Some(1));
        assert_eq!(
            best_response(&game, Player::Alice, 0, DEFAULT_TOL).unwrap(),
            vec![1]
        );
    }

    #[test]
    fn fully_decohered_entangled_game_flips_the_equilibria() {
        let game =
            FiniteGame::from_play(&config(FRAC_PI_2, FRAC_PI_4, 1.0, 1.0), cd_set()).unwrap();
        assert_eq!(nash_equilibria(&game, DEFAULT_TOL), vec![(0, 1), (1, 0)]);
        assert_eq!(pareto_optimal(&game, DEFAULT_TOL), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn singleton_game() {
        let game = FiniteGame::from_play(
            &config(0.0, 0.0, 0.0, 0.0),
            vec![NamedStrategy::new("C", Strategy::COOPERATE)],
        )
        .unwrap();
        assert_eq!(nash_equilibria(&game, DEFAULT_TOL), vec![(0, 0)]);
        assert_eq!(pareto_optimal(&game, DEFAULT_TOL), vec![(0, 0)]);
        assert_eq!(
            dominant_strategy(&game, Player::Alice, DEFAULT_TOL),
            Some(0)
        );
    }

    #[test]
    fn all_equal_game_keeps_everything() {
        let pair = PayoffPair {
            alice: 1.0,
            bob: 1.0,
        };
        let game = FiniteGame::new(cd_set(), vec![vec![pair; 2]; 2]).unwrap();
        assert_eq!(pareto_optimal(&game, DEFAULT_TOL).len(), 4);
        assert_eq!(nash_equilibria(&game, DEFAULT_TOL).len(), 4);
        assert_eq!(
            best_response(&game, Player::Bob, 0, DEFAULT_TOL).unwrap(),
            vec![0, 1]
        );
    }

    #[test]
    fn no_dominant_strategy_with_quantum_move_available() {
        let game = FiniteGame::from_play(&config(FRAC_PI_2, 0.0, 0.0, 0.0), cdq_set()).unwrap();
        assert_eq!(dominant_strategy(&game, Player::Alice, DEFAULT_TOL), None);
        // Against defection the best reply is the quantum move.
        assert_eq!(
            best_response(&game, Player::Alice, 1, DEFAULT_TOL).unwrap(),
            vec![2]
        );
        assert!(best_response(&game, Player::Alice, 7, DEFAULT_TOL).is_err());
    }

    #[test]
    fn quantum_profile_is_nash_and_pareto_optimal() {
        let game = FiniteGame::from_play(&config(FRAC_PI_2, 0.0, 0.0, 0.0), cdq_set()).unwrap();
        let nash = nash_equilibria(&game, DEFAULT_TOL);
        assert!(nash.contains(&(2, 2)), "nash set: {nash:?}");
        let pareto = pareto_optimal(&game, DEFAULT_TOL);
        assert!(pareto.contains(&(2, 2)), "pareto set: {pareto:?}");
    }

    #[test]
    fn defection_dominates_for_alice_when_unentangled() {
        for p2 in crate::closedform::linspace(0.0, 1.0, 5) {
            for r in crate::closedform::linspace(0.0, FRAC_PI_4, 5) {
                let game = FiniteGame::from_play(&config(0.0, r, 0.0, p2), cd_set()).unwrap();
                assert_eq!(
                    dominant_strategy(&game, Player::Alice, DEFAULT_TOL),
                    Some(1),
                    "p2={p2} r={r}"
                );
            }
        }
    }

    #[test]
    fn nash_profiles_are_best_response_fixed_points() {
        for cfg in [
            config(0.0, 0.0, 0.0, 0.0),
            config(FRAC_PI_2, 0.2, 0.3, 0.6),
            config(FRAC_PI_2, FRAC_PI_4, 1.0, 1.0),
        ] {
            let game = FiniteGame::from_play(&cfg, cdq_set()).unwrap();
            for (i, j) in nash_equilibria(&game, DEFAULT_TOL) {
                assert!(best_response(&game, Player::Alice, j, DEFAULT_TOL)
                    .unwrap()
                    .contains(&i));
                assert!(best_response(&game, Player::Bob, i, DEFAULT_TOL)
                    .unwrap()
                    .contains(&j));
            }
        }
    }

    #[test]
    fn pareto_set_is_never_empty() {
        for cfg in [
            config(0.0, 0.3, 0.2, 0.9),
            config(FRAC_PI_2, FRAC_PI_4, 1.0, 1.0),
            config(1.0, 0.1, 0.5, 0.5),
        ] {
            let game = FiniteGame::from_play(&cfg, cdq_set()).unwrap();
            assert!(!pareto_optimal(&game, DEFAULT_TOL).is_empty());
        }
    }

    #[test]
    fn sweep_single_point_matches_play() {
        let cfg = config(FRAC_PI_2, 0.2, 0.3, 0.3);
        let grid = SweepGrid::new(
            vec![],
            vec![(
                NamedStrategy::new("Q", Strategy::QUANTUM),
                NamedStrategy::new("D", Strategy::DEFECT),
            )],
        )
        .unwrap();
        let records = sweep(&cfg, &grid).unwrap();
        assert_eq!(records.len(), 1);
        let direct = engine::play(&cfg, &Strategy::QUANTUM, &Strategy::DEFECT).unwrap();
        assert!(records[0].payoffs.max_abs_diff(&direct) < 1e-15);
    }

    #[test]
    fn acceleration_limit_sweep_shape_and_endpoint() {
        let (cfg, grid) = figure_preset(2).unwrap();
        let records = sweep(&cfg, &grid).unwrap();
        assert_eq!(records.len(), 404);
        for rec in records.iter().filter(|rec| rec.p1 == 1.0) {
            let same_move = rec.alice_name == rec.bob_name;
            let want = if same_move { 2.0 } else { 2.5 };
            assert!(
                (rec.payoffs.alice - want).abs() < 1e-12 && (rec.payoffs.bob - want).abs() < 1e-12,
                "{}/{} at p=1: {:?}",
                rec.alice_name,
                rec.bob_name,
                rec.payoffs
            );
        }
    }

    #[test]
    fn miracle_sweep_fully_decohered_boundary() {
        let (cfg, grid) = figure_preset(3).unwrap();
        assert_eq!(grid.record_count(), 101 * 101);
        let records = sweep(&cfg, &grid).unwrap();
        // At p = 1, Bob's classical endpoint moves give the fair 2.25/2.25;
        // the interior follows the (9 ± {7,−3} sin θ)/4 profile.
        for rec in records.iter().filter(|rec| rec.p1 == 1.0) {
            let st = rec.bob.theta().sin();
            assert!((rec.payoffs.alice - (9.0 + 7.0 * st) / 4.0).abs() < 1e-12);
            assert!((rec.payoffs.bob - (9.0 - 3.0 * st) / 4.0).abs() < 1e-12);
            if rec.bob.theta() == 0.0 || rec.bob.theta() == PI {
                assert!((rec.payoffs.alice - 2.25).abs() < 1e-12);
                assert!((rec.payoffs.bob - 2.25).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn sweep_rejects_conflicting_axes() {
        assert!(SweepGrid::new(
            vec![
                SweepAxis::new(SweepParam::P, 0.0, 1.0, 3).unwrap(),
                SweepAxis::new(SweepParam::P1, 0.0, 1.0, 3).unwrap(),
            ],
            classical_profiles(),
        )
        .is_err());
        assert!(SweepAxis::new(SweepParam::R, 0.0, 1.0, 5).is_err());
        assert!(SweepAxis::new(SweepParam::P, 0.0, 1.0, 0).is_err());
    }

    #[test]
    fn crossing_at_the_acceleration_limit() {
        let p = diagonal_profile_crossing(Acceleration::LIMIT)
            .unwrap()
            .expect("crossing exists at r = pi/4");
        assert!((p - 0.860_546).abs() < 1e-4, "crossing at {p}");
        // Above the crossing the same-move profiles lose to the mixed ones.
        let cfg = config(FRAC_PI_2, FRAC_PI_4, 0.0, 0.0);
        for step in 0..10 {
            let pv = p + (1.0 - p) * (step as f64 + 0.5) / 10.0;
            let cfg = GameConfig {
                noise: DecoherenceParams::symmetric(pv).unwrap(),
                ..cfg
            };
            let cc = engine::play(&cfg, &Strategy::COOPERATE, &Strategy::COOPERATE).unwrap();
            let dd = engine::play(&cfg, &Strategy::DEFECT, &Strategy::DEFECT).unwrap();
            let cd = engine::play(&cfg, &Strategy::COOPERATE, &Strategy::DEFECT).unwrap();
            let floor = cd.alice.min(cd.bob);
            assert!(cc.alice.max(dd.alice) < floor, "p={pv}");
        }
    }

    #[test]
    fn crossing_exists_everywhere_and_moves_down_with_acceleration() {
        // The fully decohered endpoint pays (2,2) vs (2.5,2.5) regardless of
        // r, so a crossing exists at every acceleration; it arrives earlier
        // as r grows.
        let at_rest = diagonal_profile_crossing(Acceleration::NONE)
            .unwrap()
            .expect("crossing exists at r = 0");
        let at_limit = diagonal_profile_crossing(Acceleration::LIMIT)
            .unwrap()
            .expect("crossing exists at r = pi/4");
        // Root of p^2 + 2.5p - 3 over [0, 1]: (sqrt(18.25) - 2.5)/2.
        let by_hand = (18.25f64.sqrt() - 2.5) / 2.0;
        assert!((at_rest - by_hand).abs() < 1e-9, "at rest: {at_rest}");
        assert!(at_limit < at_rest);
        assert!((0.5..1.0).contains(&at_limit));
    }
}
