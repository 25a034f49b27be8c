//! Shared helpers for the unit tests.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::qmat::{CMatrix, DensityMatrix};

/// A random mixed two-qubit state: a two-component mixture of random pure
/// states, so it exercises coherences as well as populations.
pub(crate) fn random_two_qubit(rng: &mut ChaCha8Rng) -> DensityMatrix {
    let pure = |rng: &mut ChaCha8Rng| -> Vec<Complex64> {
        let amps: Vec<Complex64> = (0..4)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        amps.into_iter().map(|z| z / norm).collect()
    };
    let a = pure(rng);
    let b = pure(rng);
    let w: f64 = rng.gen_range(0.0..1.0);
    let mut m = CMatrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            m.set(
                i,
                j,
                w * a[i] * a[j].conj() + (1.0 - w) * b[i] * b[j].conj(),
            );
        }
    }
    DensityMatrix::new(vec![2, 2], m).expect("mixture of pure states is a density matrix")
}
