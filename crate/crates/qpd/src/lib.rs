//! Quantum Prisoner's Dilemma in a noninertial frame with amplitude-damping
//! noise.
//!
//! The crate simulates the EWL-quantized two-player Prisoner's Dilemma where
//! the second player (Bob) moves with uniform acceleration, so his
//! field mode is observed through a Rindler horizon, and where both qubits
//! may couple to local amplitude-damping environments before the moves are
//! executed.
//!
//! The full pipeline is:
//!
//! 1. prepare the entangled two-qubit initial state (entanglement `γ`),
//! 2. rewrite Bob's mode in Rindler coordinates (acceleration parameter `r`)
//!    and trace out the causally disconnected wedge,
//! 3. apply local amplitude damping (`p₁` on Alice, `p₂` on Bob),
//! 4. apply the players' two-parameter strategy unitaries `U(α, θ)`,
//! 5. disentangle and read the payoffs off the diagonal of the final
//!    density matrix.
//!
//! Everything is pure, deterministic double-precision arithmetic on matrices
//! of dimension at most 8×8, with the density-matrix invariants (Hermitian,
//! unit trace, positive semidefinite) enforced after every stage.
//!
//! Module map:
//!
//! - [`qmat`]: dense complex matrices, tensor products, partial traces, and
//!   density-matrix validity checks backed by a cyclic Jacobi eigensolver;
//! - [`rindler`]: the shared initial state and the accelerated observer's
//!   frame change;
//! - [`noise`]: Kraus channels and the amplitude-damping family;
//! - [`engine`]: the game pipeline and payoff evaluation;
//! - [`closedform`]: independent analytic payoff formulas used to
//!   cross-validate the engine;
//! - [`equilibria`]: Nash / Pareto / dominance analysis and parameter
//!   sweeps;
//! - [`cli`]: the `qpd` command-line front end (CSV/JSON output).
//!
//! The `examples/` directory has one runnable example per capability; start
//! with `single_game`.

pub mod cli;
pub mod closedform;
pub mod engine;
pub mod equilibria;
pub mod noise;
pub mod qmat;
pub mod rindler;

#[cfg(test)]
pub(crate) mod testutil;

/// The two players. Alice is always the inertial player; Bob is the one
/// whose acceleration and Rindler horizon enter the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    Alice,
    Bob,
}

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller-supplied value is outside its legal range or malformed.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Matrix or subsystem shapes do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A physical invariant (trace, Hermiticity, positivity, completeness,
    /// probability normalization) failed beyond tolerance. Never clamped.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Range admission shared by the bounded domain types. Values inside the
/// closed interval pass through; values within `1e-9` of a boundary snap
/// onto it (finite-precision renderings of boundary values, e.g. π/2
/// printed at 15 digits, land there); anything farther out is rejected.
pub(crate) fn admit_range(value: f64, lo: f64, hi: f64) -> Option<f64> {
    const GRACE: f64 = 1e-9;
    if !value.is_finite() {
        None
    } else if (lo..=hi).contains(&value) {
        Some(value)
    } else if value < lo && lo - value <= GRACE {
        Some(lo)
    } else if value > hi && value - hi <= GRACE {
        Some(hi)
    } else {
        None
    }
}
