//! Dense complex-matrix kernel for small Hilbert spaces (dimensions 2–8).
//!
//! All operators and states in the pipeline are [`CMatrix`] values: row-major
//! complex matrices with an explicit shape. [`DensityMatrix`] wraps a square
//! matrix together with its subsystem dimensions and enforces the physical
//! invariants (Hermitian, unit trace, positive semidefinite) on every
//! construction. Positivity is checked with a cyclic Jacobi eigensolver for
//! Hermitian matrices, which is foolproof at these sizes.
//!
//! Nothing here is tuned for large dimensions; 8×8 is the design point.

use num_complex::Complex64;

use crate::{Error, Result};

/// Tolerance for Hermiticity defects of density matrices.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Tolerance for |tr(ρ) − 1| of density matrices.
pub const TRACE_TOL: f64 = 1e-12;
/// Lowest eigenvalue accepted as "positive semidefinite" in double precision.
pub const MIN_EIGENVALUE_FLOOR: f64 = -1e-10;

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    /// Builds a matrix from row-major entries.
    ///
    /// Errors if the entry count does not match the shape or if any entry is
    /// non-finite.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 || rows * cols != data.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        if !data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidArgument(
                "matrix entries must be finite".into(),
            ));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from a slice of equally long rows.
    pub fn from_rows(rows: &[&[Complex64]]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data: Vec<Complex64> = rows.iter().flat_map(|row| row.iter().copied()).collect();
        Self::new(r, c, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).conj();
            }
        }
        out
    }

    /// Matrix product `self · rhs`.
    pub fn matmul(&self, rhs: &CMatrix) -> Result<CMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product: block (i, j) of the result is `self[i][j] · rhs`.
    pub fn kron(&self, rhs: &CMatrix) -> CMatrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.data[(i * rhs.rows + k) * cols + (j * rhs.cols + l)] =
                            a * rhs.get(k, l);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &CMatrix) -> Result<CMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch("add: shape mismatch".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scaled(&self, k: Complex64) -> CMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * k).collect(),
        }
    }

    pub fn trace(&self) -> Result<Complex64> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "trace of non-square matrix".into(),
            ));
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise |self − rhs|.
    pub fn max_abs_diff(&self, rhs: &CMatrix) -> Result<f64> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch("diff: shape mismatch".into()));
        }
        Ok(self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// max |M − M†| over entries.
    pub fn hermiticity_defect(&self) -> Result<f64> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "hermiticity of non-square matrix".into(),
            ));
        }
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        Ok(worst)
    }

    /// max |M·M† − I| over entries; near zero for unitary matrices.
    pub fn unitarity_defect(&self) -> Result<f64> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "unitarity of non-square matrix".into(),
            ));
        }
        let prod = self.matmul(&self.dagger())?;
        prod.max_abs_diff(&CMatrix::identity(self.rows))
    }
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, sorted
/// ascending.
///
/// The iteration runs on the Hermitian part `(M + M†)/2`; any Hermiticity
/// defect of the input is the caller's concern (see [`check_density`]).
/// Each rotation annihilates one off-diagonal element with a phased Givens
/// rotation; convergence is quadratic and unconditional for Hermitian input.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(
            "eigenvalues of non-square matrix".into(),
        ));
    }
    let n = m.rows();
    let idx = |i: usize, j: usize| i * n + j;

    // Hermitian part, so near-Hermitian numerical input is handled cleanly.
    let mut a = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            a[idx(i, j)] = 0.5 * (m.get(i, j) + m.get(j, i).conj());
        }
    }

    let scale = a.iter().map(|z| z.norm()).fold(1.0f64, f64::max);
    let stop = 1e-15 * scale;

    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[idx(p, q)].norm());
            }
        }
        if off <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[idx(p, q)];
                let mag = apq.norm();
                if mag <= stop * 1e-2 {
                    continue;
                }
                let app = a[idx(p, p)].re;
                let aqq = a[idx(q, q)].re;
                let phase = apq / mag;
                // Rotation angle from the real 2x2 problem [[app, mag], [mag, aqq]].
                let tau = (aqq - app) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (tau - (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let cp = phase * c;
                let sp = phase * s;
                // A <- A R with R[p][p] = c·phase, R[p][q] = s·phase,
                // R[q][p] = −s, R[q][q] = c.
                for i in 0..n {
                    let aip = a[idx(i, p)];
                    let aiq = a[idx(i, q)];
                    a[idx(i, p)] = aip * cp - aiq * s;
                    a[idx(i, q)] = aip * sp + aiq * c;
                }
                // A <- R† A.
                for j in 0..n {
                    let apj = a[idx(p, j)];
                    let aqj = a[idx(q, j)];
                    a[idx(p, j)] = apj * cp.conj() - aqj * s;
                    a[idx(q, j)] = apj * sp.conj() + aqj * c;
                }
            }
        }
    }

    let mut evs: Vec<f64> = (0..n).map(|i| a[idx(i, i)].re).collect();
    evs.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    Ok(evs)
}

/// Raw numbers behind a density-matrix validity decision.
#[derive(Debug, Clone)]
pub struct DensityReport {
    /// max |M − M†| over entries.
    pub hermiticity_defect: f64,
    /// |tr(M) − 1|.
    pub trace_defect: f64,
    /// Smallest eigenvalue of the Hermitian part.
    pub min_eigenvalue: f64,
    /// All eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
}

impl DensityReport {
    /// Validity against explicit tolerances.
    pub fn is_valid_with(&self, herm_tol: f64, trace_tol: f64, eig_floor: f64) -> bool {
        self.hermiticity_defect < herm_tol
            && self.trace_defect < trace_tol
            && self.min_eigenvalue >= eig_floor
    }

    /// Validity against the module defaults.
    pub fn is_valid(&self) -> bool {
        self.is_valid_with(HERMITICITY_TOL, TRACE_TOL, MIN_EIGENVALUE_FLOOR)
    }
}

/// Measures how far a square matrix is from being a density matrix.
///
/// Errors on non-square input; never errors on content (the report carries
/// the defects instead).
pub fn check_density(m: &CMatrix) -> Result<DensityReport> {
    if !m.is_square() {
        return Err(Error::InvalidArgument(
            "density check requires a square matrix".into(),
        ));
    }
    let hermiticity_defect = m.hermiticity_defect()?;
    let trace_defect = (m.trace()? - Complex64::new(1.0, 0.0)).norm();
    let eigenvalues = hermitian_eigenvalues(m)?;
    let min_eigenvalue = eigenvalues[0];
    Ok(DensityReport {
        hermiticity_defect,
        trace_defect,
        min_eigenvalue,
        eigenvalues,
    })
}

/// A density matrix over an ordered list of subsystems.
///
/// Construction validates the physical invariants and fails loudly instead
/// of clamping; all operations return freshly validated values. Immutable
/// after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: Vec<usize>,
    mat: CMatrix,
}

impl DensityMatrix {
    /// Wraps a matrix as a density matrix over the given subsystem
    /// dimensions, enforcing Hermiticity, unit trace and positivity.
    pub fn new(dims: Vec<usize>, mat: CMatrix) -> Result<Self> {
        if dims.is_empty() || dims.iter().any(|&d| d < 2) {
            return Err(Error::InvalidArgument(
                "subsystem dimensions must each be at least 2".into(),
            ));
        }
        let total: usize = dims.iter().product();
        if mat.rows() != total || mat.cols() != total {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{} but subsystems give dimension {}",
                mat.rows(),
                mat.cols(),
                total
            )));
        }
        let report = check_density(&mat)?;
        if !report.is_valid() {
            return Err(Error::InvariantViolation(format!(
                "not a density matrix: hermiticity defect {:.3e}, trace defect {:.3e}, min eigenvalue {:.3e}",
                report.hermiticity_defect, report.trace_defect, report.min_eigenvalue
            )));
        }
        Ok(Self { dims, mat })
    }

    /// Density matrix |ψ⟩⟨ψ| of a pure state given by its amplitudes.
    pub fn from_pure(dims: Vec<usize>, amplitudes: &[Complex64]) -> Result<Self> {
        let total: usize = dims.iter().product();
        if amplitudes.len() != total {
            return Err(Error::DimensionMismatch(format!(
                "state vector has {} amplitudes, subsystems give dimension {}",
                amplitudes.len(),
                total
            )));
        }
        let mut m = CMatrix::zeros(total, total);
        for i in 0..total {
            for j in 0..total {
                m.set(i, j, amplitudes[i] * amplitudes[j].conj());
            }
        }
        Self::new(dims, m)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total Hilbert-space dimension.
    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    /// Real parts of the diagonal, in basis order.
    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim()).map(|i| self.mat.get(i, i).re).collect()
    }

    /// tr(ρ²).
    pub fn purity(&self) -> f64 {
        self.mat.entries().iter().map(|z| z.norm_sqr()).sum()
    }

    /// Re-measures the validity defects of the stored matrix.
    pub fn report(&self) -> DensityReport {
        check_density(&self.mat).expect("stored matrix is square")
    }

    /// Reduced density matrix over the subsystems listed in `keep`
    /// (kept in their original relative order).
    ///
    /// `keep` must be a nonempty proper subset of the subsystem indices;
    /// duplicates and out-of-range indices are rejected.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let n = self.dims.len();
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        if keep.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(
                "partial trace: duplicate subsystem index".into(),
            ));
        }
        if keep.iter().any(|&k| k >= n) {
            return Err(Error::InvalidArgument(
                "partial trace: subsystem index out of range".into(),
            ));
        }
        if keep.is_empty() || keep.len() == n {
            return Err(Error::InvalidArgument(
                "partial trace: kept subsystems must be a nonempty proper subset".into(),
            ));
        }

        let traced: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
        // Row-major strides over subsystems.
        let mut strides = vec![1usize; n];
        for i in (0..n - 1).rev() {
            strides[i] = strides[i + 1] * self.dims[i + 1];
        }
        let kept_dims: Vec<usize> = keep.iter().map(|&k| self.dims[k]).collect();
        let out_dim: usize = kept_dims.iter().product();
        let traced_dim: usize = traced.iter().map(|&k| self.dims[k]).product();

        // Linear index of the full space from a kept index and a traced index.
        let embed = |kept_lin: usize, traced_lin: usize| -> usize {
            let mut full = 0usize;
            let mut rem = kept_lin;
            for (pos, &sub) in keep.iter().enumerate().rev() {
                let d = self.dims[sub];
                full += (rem % d) * strides[sub];
                rem /= d;
                let _ = pos;
            }
            let mut rem = traced_lin;
            for &sub in traced.iter().rev() {
                let d = self.dims[sub];
                full += (rem % d) * strides[sub];
                rem /= d;
            }
            full
        };

        let mut out = CMatrix::zeros(out_dim, out_dim);
        for i in 0..out_dim {
            for j in 0..out_dim {
                let mut acc = Complex64::new(0.0, 0.0);
                for t in 0..traced_dim {
                    acc += self.mat.get(embed(i, t), embed(j, t));
                }
                out.set(i, j, acc);
            }
        }
        DensityMatrix::new(kept_dims, out)
    }

    /// Conjugation ρ → U ρ U†. The result is re-validated, so passing a
    /// non-unitary `u` surfaces as an invariant violation.
    pub fn apply_unitary(&self, u: &CMatrix) -> Result<DensityMatrix> {
        if u.rows() != self.dim() || u.cols() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "unitary is {}x{}, state dimension is {}",
                u.rows(),
                u.cols(),
                self.dim()
            )));
        }
        let out = u.matmul(&self.mat)?.matmul(&u.dagger())?;
        DensityMatrix::new(self.dims.clone(), out)
    }
}
