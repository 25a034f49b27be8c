//! Shared initial state and the accelerated player's frame change.
//!
//! Alice is always inertial. Bob moves with uniform acceleration, so his
//! Minkowski mode must be re-expressed in Rindler coordinates. Under the
//! single-mode approximation (both detectors highly monochromatic at a
//! common frequency ω) the fermionic transformation is
//!
//! ```text
//! |0⟩_M → cos r |0⟩_I |0⟩_II + sin r |1⟩_I |1⟩_II
//! |1⟩_M → |1⟩_I |0⟩_II
//! ```
//!
//! where `I`/`II` are the two causally disconnected Rindler wedges and the
//! dimensionless acceleration parameter `r ∈ [0, π/4]` is fixed by
//! `cos r = (e^{−2πωc/a} + 1)^{−1/2}`. Region II is inaccessible to Bob and
//! is traced out, which is where the Unruh mixing enters the game.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::qmat::{CMatrix, DensityMatrix};
use crate::{Error, Result};

/// Degree of entanglement γ of the shared initial state, in radians.
///
/// γ = 0 is a product state, γ = π/2 is maximally entangled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Entanglement(f64);

impl Entanglement {
    pub const NONE: Entanglement = Entanglement(0.0);
    pub const MAXIMAL: Entanglement = Entanglement(FRAC_PI_2);

    /// γ must lie in [0, π/2] (a 1e-9 grace band snaps onto the bounds).
    pub fn new(gamma: f64) -> Result<Self> {
        crate::admit_range(gamma, 0.0, FRAC_PI_2)
            .map(Self)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "entanglement gamma must be in [0, pi/2] radians, got {gamma}"
                ))
            })
    }

    pub fn gamma(&self) -> f64 {
        self.0
    }
}

/// Dimensionless acceleration parameter `r` of Bob's frame, in radians.
///
/// r = 0 at rest, r = π/4 in the infinite-acceleration limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Acceleration(f64);

impl Acceleration {
    pub const NONE: Acceleration = Acceleration(0.0);
    pub const LIMIT: Acceleration = Acceleration(FRAC_PI_4);

    /// r must lie in [0, π/4] (a 1e-9 grace band snaps onto the bounds).
    pub fn new(r: f64) -> Result<Self> {
        crate::admit_range(r, 0.0, FRAC_PI_4)
            .map(Self)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "acceleration parameter r must be in [0, pi/4] radians, got {r}"
                ))
            })
    }

    pub fn r(&self) -> f64 {
        self.0
    }
}

/// Converts a proper acceleration to the dimensionless parameter via
/// `r = arccos((e^{−2πωc/a} + 1)^{−1/2})`.
///
/// `a` is Bob's proper acceleration, `omega` the mode frequency of his
/// detector, `c` the speed of light (any consistent unit system). `a = 0`
/// short-circuits to `r = 0`; an infinite `a` gives the limit `r = π/4`.
pub fn acceleration_to_r(a: f64, omega: f64, c: f64) -> Result<Acceleration> {
    if a.is_nan() || a < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "proper acceleration must be nonnegative, got {a}"
        )));
    }
    if omega <= 0.0 || c <= 0.0 || omega.is_nan() || c.is_nan() {
        return Err(Error::InvalidArgument(
            "mode frequency and speed of light must be positive".into(),
        ));
    }
    if a == 0.0 {
        return Ok(Acceleration(0.0));
    }
    if a.is_infinite() {
        return Ok(Acceleration(FRAC_PI_4));
    }
    let r = ((-2.0 * PI * omega * c / a).exp() + 1.0).powf(-0.5).acos();
    // acos can land a hair above pi/4 when the exponential underflows.
    Acceleration::new(r.min(FRAC_PI_4))
}

/// The entangled two-qubit state shared in the inertial frame:
/// `cos(γ/2)|00⟩ − i sin(γ/2)|11⟩`, as a density matrix over
/// (Alice, Bob) qubits.
pub fn initial_minkowski_state(gamma: Entanglement) -> DensityMatrix {
    let half = gamma.gamma() / 2.0;
    let amps = [
        Complex64::new(half.cos(), 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, -half.sin()),
    ];
    DensityMatrix::from_pure(vec![2, 2], &amps).expect("unit-norm two-qubit pure state")
}

/// Rewrites Bob's qubit in Rindler coordinates and traces out the
/// inaccessible wedge.
///
/// The input must be a two-qubit state over (Alice_M, Bob_M). Bob's qubit is
/// pushed through the vacuum/excited-state isometry above, giving a
/// three-subsystem state ordered (Alice_M, Bob_I, Bob_II), and region II is
/// traced out. At `r = 0` the isometry is trivial and the state is returned
/// unchanged up to the embedding round trip.
pub fn to_rindler_traced(rho: &DensityMatrix, accel: Acceleration) -> Result<DensityMatrix> {
    if rho.dims() != [2, 2] {
        return Err(Error::DimensionMismatch(format!(
            "expected a two-qubit state, got subsystems {:?}",
            rho.dims()
        )));
    }
    let (cr, sr) = (accel.r().cos(), accel.r().sin());

    // Isometry on Bob's qubit: columns are the images of |0>_M and |1>_M in
    // the (Bob_I ⊗ Bob_II) basis |00>,|01>,|10>,|11>.
    let mut v = CMatrix::zeros(4, 2);
    v.set(0, 0, Complex64::new(cr, 0.0));
    v.set(3, 0, Complex64::new(sr, 0.0));
    v.set(2, 1, Complex64::new(1.0, 0.0));

    let lift = CMatrix::identity(2).kron(&v);
    let big = lift.matmul(rho.matrix())?.matmul(&lift.dagger())?;
    let three = DensityMatrix::new(vec![2, 2, 2], big)?;
    three.partial_trace(&[0, 1])
}
