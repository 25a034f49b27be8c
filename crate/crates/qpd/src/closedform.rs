//! Independent analytic payoff formulas, used to cross-validate the engine.
//!
//! Each function here evaluates a closed-form expression for the expected
//! payoffs in a restricted slice of the game: the unentangled classical
//! table, the maximally entangled classical table with independent local
//! damping, and the two quantum slices where Alice plays `Q` or the miracle
//! move while Bob varies. None of them touch the density-matrix pipeline, so
//! [`cross_validate`] is a genuine two-route check: any disagreement beyond
//! tolerance is reported, never patched; the pipeline is ground truth.
//!
//! The entangled cases take `γ = π/2` as given; the two quantum cases
//! additionally take symmetric noise `p₁ = p₂ = p` as given. That is the
//! full domain on which the formulas are defined here; no extrapolation to
//! asymmetric noise is offered for them.

use crate::engine::{self, ClassicalProfile, GameConfig, PayoffPair, PayoffTable, Strategy};
use crate::noise::DecoherenceParams;
use crate::rindler::{Acceleration, Entanglement};
use crate::{Error, Result};

/// Default tolerance for engine/closed-form agreement.
pub const CROSS_VALIDATION_TOL: f64 = 1e-10;

/// Closed-form payoffs for the unentangled game (γ = 0) under classical
/// moves. Only Bob's damping `p2` and the acceleration enter; Alice's local
/// environment provably drops out in this slice.
pub fn unentangled_payoff(
    profile: ClassicalProfile,
    p2: f64,
    accel: Acceleration,
) -> Result<PayoffPair> {
    check_unit("p2", p2)?;
    let r = accel.r();
    let (c2, s2, c2r) = (r.cos().powi(2), r.sin().powi(2), (2.0 * r).cos());
    let pair = match profile {
        ClassicalProfile::CC => PayoffPair {
            alice: 3.0 * (c2 + p2 * s2),
            bob: 4.0 - c2r - 2.0 * p2 * s2,
        },
        ClassicalProfile::CD => PayoffPair {
            alice: 3.0 * (1.0 - p2) * s2,
            bob: 4.0 + c2r + 2.0 * p2 * s2,
        },
        ClassicalProfile::DC => PayoffPair {
            alice: 3.0 + 2.0 * c2r + 4.0 * p2 * s2,
            bob: (1.0 - p2) * s2,
        },
        ClassicalProfile::DD => PayoffPair {
            alice: 3.0 - 2.0 * c2r - 4.0 * p2 * s2,
            bob: c2 + p2 * s2,
        },
    };
    Ok(pair)
}

/// Closed-form payoffs for the maximally entangled game (γ = π/2) under
/// classical moves, with independent damping `p1` on Alice and `p2` on Bob.
///
/// The same-move profiles pay both players identically; the mixed profiles
/// satisfy the cross-symmetry `alice(CD) = bob(DC)` and `alice(DC) = bob(CD)`.
pub fn entangled_classical_payoff(
    profile: ClassicalProfile,
    p1: f64,
    p2: f64,
    accel: Acceleration,
) -> Result<PayoffPair> {
    check_unit("p1", p1)?;
    check_unit("p2", p2)?;
    let r = accel.r();
    let c2r = (2.0 * r).cos();
    let root = ((1.0 - p1) * (1.0 - p2)).sqrt() * r.cos();
    let shared = p2 * (0.125 - p1 / 2.0 + 0.125 * c2r);
    let pair = match profile {
        ClassicalProfile::CC | ClassicalProfile::DD => {
            let sign = if profile == ClassicalProfile::CC {
                1.0
            } else {
                -1.0
            };
            let v = 17.0 / 8.0 + p1 / 4.0 + sign * root - 0.125 * c2r + shared;
            PayoffPair { alice: v, bob: v }
        }
        ClassicalProfile::CD | ClassicalProfile::DC => {
            let base = 19.0 / 8.0 - p1 / 4.0 + 0.125 * c2r - shared;
            let mixed = 2.5 * root;
            if profile == ClassicalProfile::CD {
                PayoffPair {
                    alice: base - mixed,
                    bob: base + mixed,
                }
            } else {
                PayoffPair {
                    alice: base + mixed,
                    bob: base - mixed,
                }
            }
        }
    };
    Ok(pair)
}

/// Closed-form payoffs when Alice plays `Q` against Bob's `U(α_B, θ_B)`,
/// maximally entangled, symmetric noise `p`.
///
/// At `p = 1` both payoffs collapse to `(18 − 2cos θ_B)/8`, independent of
/// the acceleration and of Bob's phase.
pub fn alice_q_payoff(
    p: f64,
    accel: Acceleration,
    alpha_b: f64,
    theta_b: f64,
) -> Result<PayoffPair> {
    check_unit("p", p)?;
    let r = accel.r();
    let (ct, c2a) = (theta_b.cos(), (2.0 * alpha_b).cos());
    let depol = 1.0 - (3.0 - 4.0 * p) * p + (1.0 - p) * (2.0 * r).cos();
    let shared = 18.0 - depol * ct;
    let brace_a = 2.0 * c2a * (1.0 + ct) + 5.0 * ct - 5.0;
    let brace_b = 2.0 * c2a * (1.0 + ct) - 5.0 * ct + 5.0;
    let scale = 2.0 * (1.0 - p) * r.cos();
    Ok(PayoffPair {
        alice: (shared - scale * brace_a) / 8.0,
        bob: (shared - scale * brace_b) / 8.0,
    })
}

/// Closed-form payoffs when Alice plays the miracle move against Bob's
/// classical `U(0, θ_B)`, maximally entangled, symmetric noise `p`.
pub fn alice_miracle_payoff(p: f64, accel: Acceleration, theta_b: f64) -> Result<PayoffPair> {
    check_unit("p", p)?;
    let r = accel.r();
    let st = theta_b.sin();
    let depol = 1.0 + p * (4.0 * p - 3.0) + (1.0 - p) * (2.0 * r).cos();
    let cr = (1.0 - p) * r.cos();
    Ok(PayoffPair {
        alice: (3.5 * depol * st + cr * (st + 3.0) + 9.0) / 4.0,
        bob: (-1.5 * depol * st + cr * (st - 7.0) + 9.0) / 4.0,
    })
}

fn check_unit(name: &str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "decoherence parameter {name} must be in [0, 1], got {p}"
        )));
    }
    Ok(())
}

/// The four validated slices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormCase {
    /// γ = 0, classical moves, against [`unentangled_payoff`].
    Unentangled,
    /// γ = π/2, classical moves, against [`entangled_classical_payoff`].
    EntangledClassical,
    /// γ = π/2, Alice plays `Q`, against [`alice_q_payoff`].
    AliceQ,
    /// γ = π/2, Alice plays the miracle move, against
    /// [`alice_miracle_payoff`].
    AliceMiracle,
}

impl ClosedFormCase {
    pub const ALL: [ClosedFormCase; 4] = [
        Self::Unentangled,
        Self::EntangledClassical,
        Self::AliceQ,
        Self::AliceMiracle,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Unentangled => "unentangled",
            Self::EntangledClassical => "entangled-classical",
            Self::AliceQ => "alice-q",
            Self::AliceMiracle => "alice-miracle",
        }
    }
}

/// Axis values for a validation grid. Each case reads the axes it uses and
/// ignores the rest. [`ValidationGrid::default_for`] pins the default grids.
#[derive(Debug, Clone)]
pub struct ValidationGrid {
    pub p: Vec<f64>,
    pub p1: Vec<f64>,
    pub p2: Vec<f64>,
    pub r: Vec<f64>,
    pub theta_b: Vec<f64>,
    pub alpha_b: Vec<f64>,
}

/// `count` evenly spaced values across [lo, hi].
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    if count <= 1 {
        return vec![lo];
    }
    (0..count)
        .map(|k| lo + (hi - lo) * k as f64 / (count - 1) as f64)
        .collect()
}

impl ValidationGrid {
    pub fn default_for(case: ClosedFormCase) -> Self {
        use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
        match case {
            ClosedFormCase::Unentangled => Self {
                p: vec![],
                p1: vec![0.0],
                p2: linspace(0.0, 1.0, 11),
                r: linspace(0.0, FRAC_PI_4, 5),
                theta_b: vec![],
                alpha_b: vec![],
            },
            ClosedFormCase::EntangledClassical => Self {
                p: vec![],
                p1: linspace(0.0, 1.0, 6),
                p2: linspace(0.0, 1.0, 6),
                r: linspace(0.0, FRAC_PI_4, 5),
                theta_b: vec![],
                alpha_b: vec![],
            },
            ClosedFormCase::AliceQ => Self {
                p: linspace(0.0, 1.0, 6),
                p1: vec![],
                p2: vec![],
                r: linspace(0.0, FRAC_PI_4, 5),
                theta_b: linspace(0.0, PI, 5),
                alpha_b: vec![-FRAC_PI_2, 0.0, FRAC_PI_2],
            },
            ClosedFormCase::AliceMiracle => Self {
                p: linspace(0.0, 1.0, 6),
                p1: vec![],
                p2: vec![],
                r: linspace(0.0, FRAC_PI_4, 5),
                theta_b: linspace(0.0, PI, 5),
                alpha_b: vec![],
            },
        }
    }
}

/// One evaluated grid point: the game parameters, both routes' payoffs, and
/// their absolute deviation.
#[derive(Debug, Clone)]
pub struct DeviationPoint {
    pub gamma: f64,
    pub r: f64,
    pub p1: f64,
    pub p2: f64,
    pub alice: Strategy,
    pub bob: Strategy,
    pub engine: PayoffPair,
    pub closed: PayoffPair,
    pub deviation: f64,
}

/// Outcome of one cross-validation run.
#[derive(Debug, Clone)]
pub struct DeviationReport {
    pub case: ClosedFormCase,
    pub points: usize,
    pub max_abs_deviation: f64,
    /// The grid point achieving the maximum deviation (first one in grid
    /// order on ties).
    pub worst: Option<DeviationPoint>,
    pub tolerance: f64,
}

impl DeviationReport {
    pub fn passed(&self) -> bool {
        self.max_abs_deviation < self.tolerance
    }
}

/// Evaluates the closed form and the engine on every grid point of a case
/// and reports the worst disagreement.
pub fn cross_validate(
    case: ClosedFormCase,
    grid: &ValidationGrid,
    tolerance: f64,
) -> Result<DeviationReport> {
    let mut report = DeviationReport {
        case,
        points: 0,
        max_abs_deviation: 0.0,
        worst: None,
        tolerance,
    };

    let mut consider = |gamma: Entanglement,
                        accel: Acceleration,
                        noise: DecoherenceParams,
                        alice: Strategy,
                        bob: Strategy,
                        closed: PayoffPair|
     -> Result<()> {
        let config = GameConfig {
            gamma,
            acceleration: accel,
            noise,
            payoffs: PayoffTable::default(),
        };
        let engine_pair = engine::play(&config, &alice, &bob)?;
        let deviation = engine_pair.max_abs_diff(&closed);
        report.points += 1;
        if deviation > report.max_abs_deviation || report.worst.is_none() {
            report.max_abs_deviation = report.max_abs_deviation.max(deviation);
            if report
                .worst
                .as_ref()
                .map(|w| deviation > w.deviation)
                .unwrap_or(true)
            {
                report.worst = Some(DeviationPoint {
                    gamma: gamma.gamma(),
                    r: accel.r(),
                    p1: noise.p1(),
                    p2: noise.p2(),
                    alice,
                    bob,
                    engine: engine_pair,
                    closed,
                    deviation,
                });
            }
        }
        Ok(())
    };

    match case {
        ClosedFormCase::Unentangled => {
            for &p1 in &grid.p1 {
                for &p2 in &grid.p2 {
                    for &r in &grid.r {
                        let accel = Acceleration::new(r)?;
                        for profile in ClassicalProfile::ALL {
                            let (a, b) = profile.strategies();
                            let closed = unentangled_payoff(profile, p2, accel)?;
                            consider(
                                Entanglement::NONE,
                                accel,
                                DecoherenceParams::new(p1, p2)?,
                                a,
                                b,
                                closed,
                            )?;
                        }
                    }
                }
            }
        }
        ClosedFormCase::EntangledClassical => {
            for &p1 in &grid.p1 {
                for &p2 in &grid.p2 {
                    for &r in &grid.r {
                        let accel = Acceleration::new(r)?;
                        for profile in ClassicalProfile::ALL {
                            let (a, b) = profile.strategies();
                            let closed = entangled_classical_payoff(profile, p1, p2, accel)?;
                            consider(
                                Entanglement::MAXIMAL,
                                accel,
                                DecoherenceParams::new(p1, p2)?,
                                a,
                                b,
                                closed,
                            )?;
                        }
                    }
                }
            }
        }
        ClosedFormCase::AliceQ => {
            for &p in &grid.p {
                for &r in &grid.r {
                    let accel = Acceleration::new(r)?;
                    for &theta in &grid.theta_b {
                        for &alpha in &grid.alpha_b {
                            let bob = Strategy::new(alpha, theta)?;
                            let closed = alice_q_payoff(p, accel, alpha, theta)?;
                            consider(
                                Entanglement::MAXIMAL,
                                accel,
                                DecoherenceParams::symmetric(p)?,
                                Strategy::QUANTUM,
                                bob,
                                closed,
                            )?;
                        }
                    }
                }
            }
        }
        ClosedFormCase::AliceMiracle => {
            for &p in &grid.p {
                for &r in &grid.r {
                    let accel = Acceleration::new(r)?;
                    for &theta in &grid.theta_b {
                        let bob = Strategy::new(0.0, theta)?;
                        let closed = alice_miracle_payoff(p, accel, theta)?;
                        consider(
                            Entanglement::MAXIMAL,
                            accel,
                            DecoherenceParams::symmetric(p)?,
                            Strategy::MIRACLE,
                            bob,
                            closed,
                        )?;
                    }
                }
            }
        }
    }

    if report.points == 0 {
        return Err(Error::InvalidArgument(
            "cross-validation grid is empty".into(),
        ));
    }
    Ok(report)
}
