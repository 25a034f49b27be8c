//! Kraus-operator channels and local amplitude damping.
//!
//! A channel is a finite set of Kraus operators `{K_n}` satisfying the
//! completeness relation `Σ K_n† K_n = I`; it acts on a state as
//! `ρ → Σ K_n ρ K_n†`. The game couples each qubit to its own local
//! environment, so single-qubit channels are lifted with an identity on the
//! other qubit (`K ⊗ I` for Alice, `I ⊗ K` for Bob) and the two lifted
//! channels are composed; they act on disjoint qubits, so the order is
//! unobservable.
//!
//! The amplitude-damping operators used throughout are
//!
//! ```text
//! K₀ = [[1, 0], [0, √(1−p)]],   K₁ = [[0, √p], [0, 0]]
//! ```
//!
//! which transfer excited-state population to the ground state with
//! probability `p`. The population-preserving variant with `K₁ = diag(0, √p)`
//! is provided as [`phase_damping`]; it only decays coherences and is kept
//! around because the engine's regression tests demonstrate it cannot
//! reproduce the fully-decohered payoffs (see `engine`).

use num_complex::Complex64;

use crate::qmat::{CMatrix, DensityMatrix};
use crate::{Error, Player, Result};

/// Tolerance on the completeness relation ‖Σ K†K − I‖_max.
pub const COMPLETENESS_TOL: f64 = 1e-12;

/// Decoherence strengths of the two local environments: `p1` acts on
/// Alice's qubit, `p2` on Bob's. Both lie in [0, 1]; 0 leaves the qubit
/// untouched and 1 damps it completely.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DecoherenceParams {
    p1: f64,
    p2: f64,
}

impl DecoherenceParams {
    pub fn new(p1: f64, p2: f64) -> Result<Self> {
        let admit = |name: &str, p: f64| {
            crate::admit_range(p, 0.0, 1.0).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "decoherence parameter {name} must be in [0, 1], got {p}"
                ))
            })
        };
        Ok(Self {
            p1: admit("p1", p1)?,
            p2: admit("p2", p2)?,
        })
    }

    /// Both qubits coupled with the same strength.
    pub fn symmetric(p: f64) -> Result<Self> {
        Self::new(p, p)
    }

    pub fn p1(&self) -> f64 {
        self.p1
    }

    pub fn p2(&self) -> f64 {
        self.p2
    }
}

/// A completely positive trace-preserving map given by its Kraus operators.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    label: String,
    operators: Vec<CMatrix>,
}

impl KrausChannel {
    /// Builds a channel, verifying that all operators share one square shape
    /// and satisfy the completeness relation within [`COMPLETENESS_TOL`].
    pub fn new(label: impl Into<String>, operators: Vec<CMatrix>) -> Result<Self> {
        let label = label.into();
        let dim = match operators.first() {
            Some(op) if op.is_square() => op.rows(),
            Some(_) => {
                return Err(Error::InvalidArgument(format!(
                    "channel {label}: Kraus operators must be square"
                )))
            }
            None => {
                return Err(Error::InvalidArgument(format!(
                    "channel {label}: needs at least one Kraus operator"
                )))
            }
        };
        if operators
            .iter()
            .any(|op| op.rows() != dim || op.cols() != dim)
        {
            return Err(Error::DimensionMismatch(format!(
                "channel {label}: mixed Kraus operator shapes"
            )));
        }
        let mut sum = CMatrix::zeros(dim, dim);
        for op in &operators {
            sum = sum.add(&op.dagger().matmul(op)?)?;
        }
        let defect = sum.max_abs_diff(&CMatrix::identity(dim))?;
        if defect >= COMPLETENESS_TOL {
            return Err(Error::InvariantViolation(format!(
                "channel {label}: completeness defect {defect:.3e}"
            )));
        }
        Ok(Self { label, operators })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn operators(&self) -> &[CMatrix] {
        &self.operators
    }

    pub fn dim(&self) -> usize {
        self.operators[0].rows()
    }

    /// The do-nothing channel on a space of the given dimension.
    pub fn identity(dim: usize) -> Self {
        Self {
            label: "identity".into(),
            operators: vec![CMatrix::identity(dim)],
        }
    }

    /// ρ → Σ K ρ K†. The output is re-validated as a density matrix.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        if self.dim() != rho.dim() {
            return Err(Error::DimensionMismatch(format!(
                "channel {} acts on dimension {}, state has dimension {}",
                self.label,
                self.dim(),
                rho.dim()
            )));
        }
        let mut out = CMatrix::zeros(rho.dim(), rho.dim());
        for op in &self.operators {
            out = out.add(&op.matmul(rho.matrix())?.matmul(&op.dagger())?)?;
        }
        DensityMatrix::new(rho.dims().to_vec(), out)
    }

    /// Lifts a single-qubit channel to a two-qubit channel acting on the
    /// given player's qubit: `K ⊗ I` for Alice, `I ⊗ K` for Bob.
    pub fn lift_local(&self, target: Player, n_qubits: usize) -> Result<KrausChannel> {
        if self.dim() != 2 {
            return Err(Error::DimensionMismatch(format!(
                "channel {} is not single-qubit",
                self.label
            )));
        }
        if n_qubits != 2 {
            return Err(Error::InvalidArgument(format!(
                "local lift is defined for the two-qubit game, got {n_qubits} qubits"
            )));
        }
        let eye = CMatrix::identity(2);
        let operators = self
            .operators
            .iter()
            .map(|k| match target {
                Player::Alice => k.kron(&eye),
                Player::Bob => eye.kron(k),
            })
            .collect();
        Ok(KrausChannel {
            label: format!("{} on {:?}", self.label, target),
            operators,
        })
    }
}

/// The single-qubit amplitude-damping channel of strength `p ∈ [0, 1]`.
pub fn amplitude_damping(p: f64) -> Result<KrausChannel> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "decoherence parameter p must be in [0, 1], got {p}"
        )));
    }
    let z = Complex64::new(0.0, 0.0);
    let k0 = CMatrix::new(
        2,
        2,
        vec![
            Complex64::new(1.0, 0.0),
            z,
            z,
            Complex64::new((1.0 - p).sqrt(), 0.0),
        ],
    )?;
    let k1 = CMatrix::new(2, 2, vec![z, Complex64::new(p.sqrt(), 0.0), z, z])?;
    KrausChannel::new(format!("amplitude damping p={p}"), vec![k0, k1])
}

/// The single-qubit phase-damping channel of strength `p`: populations are
/// untouched, coherences shrink by √(1−p).
pub fn phase_damping(p: f64) -> Result<KrausChannel> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "decoherence parameter p must be in [0, 1], got {p}"
        )));
    }
    let z = Complex64::new(0.0, 0.0);
    let k0 = CMatrix::new(
        2,
        2,
        vec![
            Complex64::new(1.0, 0.0),
            z,
            z,
            Complex64::new((1.0 - p).sqrt(), 0.0),
        ],
    )?;
    let k1 = CMatrix::new(2, 2, vec![z, z, z, Complex64::new(p.sqrt(), 0.0)])?;
    KrausChannel::new(format!("phase damping p={p}"), vec![k0, k1])
}

/// Applies independent local amplitude damping to both qubits of a two-qubit
/// state: Alice's channel with `p1`, then Bob's with `p2`. Equivalent to the
/// double-index Kraus sum `Σ_{i,j} E_i^A E_j^B ρ E_j^{B†} E_i^{A†}`, and
/// order-independent because the lifted channels act on disjoint qubits.
pub fn apply_two_local(rho: &DensityMatrix, params: &DecoherenceParams) -> Result<DensityMatrix> {
    if rho.dims() != [2, 2] {
        return Err(Error::DimensionMismatch(format!(
            "expected a two-qubit state, got subsystems {:?}",
            rho.dims()
        )));
    }
    let alice = amplitude_damping(params.p1())?.lift_local(Player::Alice, 2)?;
    let bob = amplitude_damping(params.p2())?.lift_local(Player::Bob, 2)?;
    bob.apply(&alice.apply(rho)?)
}
