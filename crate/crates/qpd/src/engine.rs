//! The quantized game pipeline: entangled initial state, Unruh transformation,
//! local noise, strategy unitaries, disentangling gate, payoff measurement.
//!
//! A strategy is a point `(α, θ)` with the move unitary
//!
//! ```text
//! U(α, θ) = [[e^{iα} cos(θ/2),  i sin(θ/2)],
//!            [i sin(θ/2),       e^{−iα} cos(θ/2)]]
//! ```
//!
//! so cooperation is `U(0, 0) = I`, defection is `U(0, π)`, the quantum
//! counter-move is `Q = U(π/2, 0) = diag(i, −i)` and the miracle move is
//! `M = U(−π/2, π/2)`.
//!
//! [`play`] runs the full pipeline and reads the four diagonal elements of
//! the final state in the basis |00⟩,|01⟩,|10⟩,|11⟩ (Alice's bit first), so
//! they line up with the classical outcomes CC, CD, DC, DD and the payoff is
//! the reward-weighted sum. Invariants are checked after every stage and
//! violations surface as errors, never as clamped values.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::noise::{apply_two_local, DecoherenceParams};
use crate::qmat::{CMatrix, DensityMatrix};
use crate::rindler::{initial_minkowski_state, to_rindler_traced, Acceleration, Entanglement};
use crate::{Error, Result};

/// A two-parameter strategy `(α, θ)` with `α ∈ [−π, π]`, `θ ∈ [0, π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Strategy {
    alpha: f64,
    theta: f64,
}

impl Strategy {
    /// Cooperate: the identity move.
    pub const COOPERATE: Strategy = Strategy {
        alpha: 0.0,
        theta: 0.0,
    };
    /// Defect: the bit-flip move `U(0, π)`.
    pub const DEFECT: Strategy = Strategy {
        alpha: 0.0,
        theta: PI,
    };
    /// The quantum move `Q = U(π/2, 0)`.
    pub const QUANTUM: Strategy = Strategy {
        alpha: FRAC_PI_2,
        theta: 0.0,
    };
    /// The miracle move `M = U(−π/2, π/2)`.
    pub const MIRACLE: Strategy = Strategy {
        alpha: -FRAC_PI_2,
        theta: FRAC_PI_2,
    };

    pub fn new(alpha: f64, theta: f64) -> Result<Self> {
        let alpha = crate::admit_range(alpha, -PI, PI).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "strategy alpha must be in [-pi, pi] radians, got {alpha}"
            ))
        })?;
        let theta = crate::admit_range(theta, 0.0, PI).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "strategy theta must be in [0, pi] radians, got {theta}"
            ))
        })?;
        Ok(Self { alpha, theta })
    }

    /// Looks up one of the four named moves: C, D, Q or M (case-insensitive).
    pub fn from_name(name: &str) -> Option<Strategy> {
        match name.trim().to_ascii_uppercase().as_str() {
            "C" => Some(Self::COOPERATE),
            "D" => Some(Self::DEFECT),
            "Q" => Some(Self::QUANTUM),
            "M" => Some(Self::MIRACLE),
            _ => None,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// The move unitary `U(α, θ)`.
    pub fn unitary(&self) -> CMatrix {
        let half = self.theta / 2.0;
        let (c, s) = (half.cos(), half.sin());
        let phase = Complex64::new(self.alpha.cos(), self.alpha.sin());
        CMatrix::new(
            2,
            2,
            vec![
                phase * c,
                Complex64::new(0.0, s),
                Complex64::new(0.0, s),
                phase.conj() * c,
            ],
        )
        .expect("finite strategy angles")
    }
}

/// The four classical outcomes, in diagonal order of the final state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalProfile {
    CC,
    CD,
    DC,
    DD,
}

impl ClassicalProfile {
    pub const ALL: [ClassicalProfile; 4] = [Self::CC, Self::CD, Self::DC, Self::DD];

    /// Index into the diagonal basis |00⟩,|01⟩,|10⟩,|11⟩.
    pub fn index(&self) -> usize {
        match self {
            Self::CC => 0,
            Self::CD => 1,
            Self::DC => 2,
            Self::DD => 3,
        }
    }

    /// The pair of moves this profile stands for.
    pub fn strategies(&self) -> (Strategy, Strategy) {
        match self {
            Self::CC => (Strategy::COOPERATE, Strategy::COOPERATE),
            Self::CD => (Strategy::COOPERATE, Strategy::DEFECT),
            Self::DC => (Strategy::DEFECT, Strategy::COOPERATE),
            Self::DD => (Strategy::DEFECT, Strategy::DEFECT),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::CC => "CC",
            Self::CD => "CD",
            Self::DC => "DC",
            Self::DD => "DD",
        }
    }
}

/// Classical reward table, one entry per outcome CC, CD, DC, DD for each
/// player. Defaults to the standard Prisoner's Dilemma values
/// (3,3), (0,5), (5,0), (1,1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffTable {
    alice: [f64; 4],
    bob: [f64; 4],
}

impl Default for PayoffTable {
    fn default() -> Self {
        Self {
            alice: [3.0, 0.0, 5.0, 1.0],
            bob: [3.0, 5.0, 0.0, 1.0],
        }
    }
}

impl PayoffTable {
    /// Rewards ordered CC, CD, DC, DD per player; all entries must be finite.
    pub fn new(alice: [f64; 4], bob: [f64; 4]) -> Result<Self> {
        if alice.iter().chain(bob.iter()).any(|x| !x.is_finite()) {
            return Err(Error::InvalidArgument(
                "payoff table entries must be finite".into(),
            ));
        }
        Ok(Self { alice, bob })
    }

    pub fn alice(&self, profile: ClassicalProfile) -> f64 {
        self.alice[profile.index()]
    }

    pub fn bob(&self, profile: ClassicalProfile) -> f64 {
        self.bob[profile.index()]
    }

    pub fn alice_rewards(&self) -> [f64; 4] {
        self.alice
    }

    pub fn bob_rewards(&self) -> [f64; 4] {
        self.bob
    }

    /// (min, max) of Alice's rewards.
    pub fn alice_bounds(&self) -> (f64, f64) {
        bounds(&self.alice)
    }

    /// (min, max) of Bob's rewards.
    pub fn bob_bounds(&self) -> (f64, f64) {
        bounds(&self.bob)
    }
}

fn bounds(xs: &[f64; 4]) -> (f64, f64) {
    xs.iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        })
}

/// Everything that defines one game instance except the players' moves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameConfig {
    pub gamma: Entanglement,
    pub acceleration: Acceleration,
    pub noise: DecoherenceParams,
    pub payoffs: PayoffTable,
}

impl Default for GameConfig {
    /// The classical, inertial, noiseless game.
    fn default() -> Self {
        Self {
            gamma: Entanglement::NONE,
            acceleration: Acceleration::NONE,
            noise: DecoherenceParams::default(),
            payoffs: PayoffTable::default(),
        }
    }
}

/// Expected payoffs of the two players.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffPair {
    pub alice: f64,
    pub bob: f64,
}

impl PayoffPair {
    /// max(|Δalice|, |Δbob|) against another pair.
    pub fn max_abs_diff(&self, other: &PayoffPair) -> f64 {
        (self.alice - other.alice)
            .abs()
            .max((self.bob - other.bob).abs())
    }
}

/// The entangling gate `J = exp[i (γ/2) D ⊗ D]` built from the symmetric
/// defection matrix `D = U(0, π)`; since `(D ⊗ D)² = I` this is
/// `cos(γ/2)·I + i sin(γ/2)·(D ⊗ D)`, a symmetric unitary.
pub fn entangling_gate(gamma: Entanglement) -> CMatrix {
    let half = gamma.gamma() / 2.0;
    let d = Strategy::DEFECT.unitary();
    let dd = d.kron(&d);
    CMatrix::identity(4)
        .scaled(Complex64::new(half.cos(), 0.0))
        .add(&dd.scaled(Complex64::new(0.0, half.sin())))
        .expect("4x4 shapes agree")
}

/// Final state of the game: initial entangled state → Rindler trace →
/// local noise → moves `U_A ⊗ U_B` → disentangling gate `J†`.
pub fn final_state(config: &GameConfig, alice: &Strategy, bob: &Strategy) -> Result<DensityMatrix> {
    let rho = initial_minkowski_state(config.gamma);
    let rho = to_rindler_traced(&rho, config.acceleration)?;
    let rho = apply_two_local(&rho, &config.noise)?;
    let moves = alice.unitary().kron(&bob.unitary());
    let rho = rho.apply_unitary(&moves)?;
    rho.apply_unitary(&entangling_gate(config.gamma).dagger())
}

/// Reads payoffs off the diagonal of a final two-qubit state.
///
/// The diagonal must be a probability distribution; if rounding has pushed
/// it outside tolerance the call fails rather than clamping.
pub fn measure_payoffs(table: &PayoffTable, state: &DensityMatrix) -> Result<PayoffPair> {
    if state.dims() != [2, 2] {
        return Err(Error::DimensionMismatch(format!(
            "payoffs need a two-qubit state, got subsystems {:?}",
            state.dims()
        )));
    }
    let d = state.diagonal();
    let total: f64 = d.iter().sum();
    if (total - 1.0).abs() > 1e-12 || d.iter().any(|&x| x < -1e-12) {
        return Err(Error::InvariantViolation(format!(
            "final diagonal is not a probability distribution: {d:?}"
        )));
    }
    let mut pair = PayoffPair {
        alice: 0.0,
        bob: 0.0,
    };
    for profile in ClassicalProfile::ALL {
        let w = d[profile.index()];
        pair.alice += table.alice(profile) * w;
        pair.bob += table.bob(profile) * w;
    }
    Ok(pair)
}

/// Runs one game and returns the expected payoffs.
pub fn play(config: &GameConfig, alice: &Strategy, bob: &Strategy) -> Result<PayoffPair> {
    let state = final_state(config, alice, bob)?;
    measure_payoffs(&config.payoffs, &state)
}

/// Tabulates [`play`] over a finite strategy set; entry `(i, j)` is the
/// payoff pair when Alice plays strategy `i` and Bob plays strategy `j`.
pub fn payoff_matrix(config: &GameConfig, strategies: &[Strategy]) -> Result<Vec<Vec<PayoffPair>>> {
    if strategies.is_empty() {
        return Err(Error::InvalidArgument(
            "payoff matrix needs at least one strategy".into(),
        ));
    }
    strategies
        .iter()
        .map(|a| strategies.iter().map(|b| play(config, a, b)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn config(gamma: f64, r: f64, p1: f64, p2: f64) -> GameConfig {
        GameConfig {
            gamma: Entanglement::new(gamma).unwrap(),
            acceleration: Acceleration::new(r).unwrap(),
            noise: DecoherenceParams::new(p1, p2).unwrap(),
            payoffs: PayoffTable::default(),
        }
    }

    #[test]
    fn cooperate_is_identity() {
        let u = Strategy::COOPERATE.unitary();
        assert!(u.max_abs_diff(&CMatrix::identity(2)).unwrap() < 1e-15);
    }

    #[test]
    fn quantum_move_is_diag_i_minus_i() {
        let u = Strategy::QUANTUM.unitary();
        assert!((u.get(0, 0) - c(0.0, 1.0)).norm() < 1e-15);
        assert!((u.get(1, 1) - c(0.0, -1.0)).norm() < 1e-15);
        assert!(u.get(0, 1).norm() < 1e-15 && u.get(1, 0).norm() < 1e-15);
    }

    #[test]
    fn miracle_move_matrix() {
        let u = Strategy::MIRACLE.unitary();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let expect = [[c(0.0, -s), c(0.0, s)], [c(0.0, s), c(0.0, s)]];
        for (i, row) in expect.iter().enumerate() {
            for (j, want) in row.iter().enumerate() {
                assert!((u.get(i, j) - want).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn entangling_gate_limits() {
        let j0 = entangling_gate(Entanglement::NONE);
        assert!(j0.max_abs_diff(&CMatrix::identity(4)).unwrap() < 1e-15);

        // Maximal entanglement sends |00> to (|00> - i|11>)/sqrt(2).
        let j = entangling_gate(Entanglement::MAXIMAL);
        let ket00 = CMatrix::new(
            4,
            1,
            vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        let out = j.matmul(&ket00).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((out.get(0, 0) - c(s, 0.0)).norm() < 1e-15);
        assert!((out.get(3, 0) - c(0.0, -s)).norm() < 1e-15);

        let j3 = entangling_gate(Entanglement::new(PI / 3.0).unwrap());
        assert!(j3.unitarity_defect().unwrap() < 1e-13);
        // Symmetric: J equals its transpose.
        for i in 0..4 {
            for k in 0..4 {
                assert!((j3.get(i, k) - j3.get(k, i)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn classical_limit_reproduces_the_reward_table() {
        let cfg = config(0.0, 0.0, 0.0, 0.0);
        let expect = [
            (ClassicalProfile::CC, (3.0, 3.0)),
            (ClassicalProfile::CD, (0.0, 5.0)),
            (ClassicalProfile::DC, (5.0, 0.0)),
            (ClassicalProfile::DD, (1.0, 1.0)),
        ];
        for (profile, (pa, pb)) in expect {
            let (a, b) = profile.strategies();
            let got = play(&cfg, &a, &b).unwrap();
            assert!((got.alice - pa).abs() < 1e-12, "{profile:?}");
            assert!((got.bob - pb).abs() < 1e-12, "{profile:?}");
        }
    }

    #[test]
    fn unentangled_defection_at_the_acceleration_limit() {
        // Both defect, Bob maximally accelerated, no noise:
        // Alice gets 3 - 2cos(pi/2) = 3, Bob cos^2(pi/4) = 1/2.
        let cfg = config(0.0, FRAC_PI_4, 0.0, 0.0);
        let got = play(&cfg, &Strategy::DEFECT, &Strategy::DEFECT).unwrap();
        assert!((got.alice - 3.0).abs() < 1e-12);
        assert!((got.bob - 0.5).abs() < 1e-12);
    }

    #[test]
    fn quantum_beats_defection_when_maximally_entangled() {
        let cfg = config(FRAC_PI_2, 0.0, 0.0, 0.0);
        let got = play(&cfg, &Strategy::QUANTUM, &Strategy::DEFECT).unwrap();
        assert!((got.alice - 5.0).abs() < 1e-12);
        assert!(got.bob.abs() < 1e-12);
    }

    #[test]
    fn quantum_versus_cooperation_lands_on_mutual_defection_rewards() {
        // Final state is |11> by direct state-vector computation.
        let cfg = config(FRAC_PI_2, 0.0, 0.0, 0.0);
        let got = play(&cfg, &Strategy::QUANTUM, &Strategy::COOPERATE).unwrap();
        assert!((got.alice - 1.0).abs() < 1e-12);
        assert!((got.bob - 1.0).abs() < 1e-12);
    }

    #[test]
    fn payoff_matrix_classical_game() {
        let cfg = config(0.0, 0.0, 0.0, 0.0);
        let set = [Strategy::COOPERATE, Strategy::DEFECT];
        let m = payoff_matrix(&cfg, &set).unwrap();
        let expect = [[(3.0, 3.0), (0.0, 5.0)], [(5.0, 0.0), (1.0, 1.0)]];
        for (row, want_row) in m.iter().zip(&expect) {
            for (got, want) in row.iter().zip(want_row) {
                assert!((got.alice - want.0).abs() < 1e-12);
                assert!((got.bob - want.1).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn full_bob_decoherence_restores_the_classical_table() {
        for r in [0.1, 0.5, FRAC_PI_4] {
            let cfg = config(0.0, r, 0.0, 1.0);
            let set = [Strategy::COOPERATE, Strategy::DEFECT];
            let m = payoff_matrix(&cfg, &set).unwrap();
            let expect = [[(3.0, 3.0), (0.0, 5.0)], [(5.0, 0.0), (1.0, 1.0)]];
            for i in 0..2 {
                for j in 0..2 {
                    assert!((m[i][j].alice - expect[i][j].0).abs() < 1e-10, "r={r}");
                    assert!((m[i][j].bob - expect[i][j].1).abs() < 1e-10, "r={r}");
                }
            }
        }
    }

    #[test]
    fn singleton_payoff_matrix() {
        let cfg = config(0.0, 0.0, 0.0, 0.0);
        let m = payoff_matrix(&cfg, &[Strategy::COOPERATE]).unwrap();
        assert_eq!(m.len(), 1);
        assert!((m[0][0].alice - 3.0).abs() < 1e-12);
        assert!(payoff_matrix(&cfg, &[]).is_err());
    }

    #[test]
    fn alices_environment_is_irrelevant_when_unentangled() {
        for p1 in [0.0, 0.5, 1.0] {
            let cfg = config(0.0, 0.4, p1, 0.3);
            let base = config(0.0, 0.4, 0.0, 0.3);
            for profile in ClassicalProfile::ALL {
                let (a, b) = profile.strategies();
                let x = play(&cfg, &a, &b).unwrap();
                let y = play(&base, &a, &b).unwrap();
                assert!(x.max_abs_diff(&y) < 1e-13, "{profile:?} p1={p1}");
            }
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;
        // The explicit import outranks both globs (proptest's prelude also
        // exports a `Strategy` trait); the trait itself comes in unnamed so
        // its methods still resolve.
        use crate::engine::Strategy;
        use proptest::strategy::Strategy as _;

        fn angles() -> impl proptest::strategy::Strategy<Value = Strategy> {
            (-PI..=PI, 0.0f64..=PI).prop_map(|(alpha, theta)| Strategy::new(alpha, theta).unwrap())
        }

        proptest! {
            #![proptest_config(proptest::test_runner::Config::with_cases(1000))]
            #[test]
            fn strategy_unitaries_are_unitary(s in angles()) {
                prop_assert!(s.unitary().unitarity_defect().unwrap() < 1e-13);
            }
        }

        proptest! {
            #[test]
            fn final_diagonal_is_a_distribution(
                gamma in 0.0f64..=FRAC_PI_2,
                r in 0.0f64..=FRAC_PI_4,
                p1 in 0.0f64..=1.0,
                p2 in 0.0f64..=1.0,
                a in angles(),
                b in angles(),
            ) {
                let cfg = config(gamma, r, p1, p2);
                let state = final_state(&cfg, &a, &b).unwrap();
                let d = state.diagonal();
                let sum: f64 = d.iter().sum();
                prop_assert!((sum - 1.0).abs() < 1e-12);
                prop_assert!(d.iter().all(|&x| x >= -1e-12));
            }

            #[test]
            fn payoffs_stay_within_table_bounds(
                gamma in 0.0f64..=FRAC_PI_2,
                r in 0.0f64..=FRAC_PI_4,
                p in 0.0f64..=1.0,
                a in angles(),
                b in angles(),
            ) {
                let cfg = config(gamma, r, p, p);
                let pay = play(&cfg, &a, &b).unwrap();
                let (alo, ahi) = cfg.payoffs.alice_bounds();
                let (blo, bhi) = cfg.payoffs.bob_bounds();
                prop_assert!(pay.alice >= alo - 1e-10 && pay.alice <= ahi + 1e-10);
                prop_assert!(pay.bob >= blo - 1e-10 && pay.bob <= bhi + 1e-10);
            }

            // With no acceleration and symmetric noise, swapping the players
            // swaps the payoffs.
            #[test]
            fn inertial_symmetric_games_are_exchange_symmetric(
                gamma in 0.0f64..=FRAC_PI_2,
                p in 0.0f64..=1.0,
                a in angles(),
                b in angles(),
            ) {
                let cfg = config(gamma, 0.0, p, p);
                let xy = play(&cfg, &a, &b).unwrap();
                let yx = play(&cfg, &b, &a).unwrap();
                prop_assert!((xy.alice - yx.bob).abs() < 1e-12);
                prop_assert!((xy.bob - yx.alice).abs() < 1e-12);
            }

            // At theta = pi the phase alpha drops out of the move unitary,
            // so it must drop out of the payoffs too.
            #[test]
            fn phase_is_irrelevant_at_theta_pi(
                alpha1 in -PI..=PI,
                alpha2 in -PI..=PI,
                gamma in 0.0f64..=FRAC_PI_2,
                r in 0.0f64..=FRAC_PI_4,
                p in 0.0f64..=1.0,
            ) {
                let u1 = Strategy::new(alpha1, PI).unwrap();
                let u2 = Strategy::new(alpha2, PI).unwrap();
                prop_assert!(u1.unitary().max_abs_diff(&u2.unitary()).unwrap() < 1e-15);
                let cfg = config(gamma, r, p, p);
                let x = play(&cfg, &u1, &Strategy::QUANTUM).unwrap();
                let y = play(&cfg, &u2, &Strategy::QUANTUM).unwrap();
                prop_assert!(x.max_abs_diff(&y) < 1e-12);
            }
        }

        // The classical-move exchange symmetry of the maximally entangled
        // game with symmetric noise, now at nonzero acceleration.
        proptest! {
            #[test]
            fn entangled_classical_symmetry(
                p in 0.0f64..=1.0,
                r in 0.0f64..=FRAC_PI_4,
            ) {
                let cfg = config(FRAC_PI_2, r, p, p);
                for a in [Strategy::COOPERATE, Strategy::DEFECT] {
                    for b in [Strategy::COOPERATE, Strategy::DEFECT] {
                        let xy = play(&cfg, &a, &b).unwrap();
                        let yx = play(&cfg, &b, &a).unwrap();
                        prop_assert!((xy.alice - yx.bob).abs() < 1e-12);
                    }
                }
            }
        }
    }
}
