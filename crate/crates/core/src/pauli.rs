//! The Pauli tensor basis of n-qubit Hermitian matrix space.
//!
//! Every Hermitian 2^n x 2^n matrix is a unique real combination
//! `rho = sum_I s_I sigma_I` over base-4 multiindices `I`. This module builds
//! the `sigma_I`, extracts the coefficients `s_I`, and inverts the expansion.
//! Indexing convention: base-4 lexicographic with qubit 1 as the most
//! significant digit, matching the bit order used for computational-basis
//! states.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::CMatrix;

/// Single-qubit Pauli matrix: `sigma(0)` is the identity, then x, y, z.
pub fn sigma(i: u8) -> CMatrix {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let rows = match i {
        0 => vec![
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0)],
        ],
        1 => vec![
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ],
        2 => vec![
            vec![c(0.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ],
        3 => vec![
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(-1.0, 0.0)],
        ],
        _ => panic!("Pauli index must be 0..=3, got {i}"),
    };
    CMatrix::from_rows(rows)
}

/// Base-4 multiindex `i_1 i_2 ... i_n` with each digit in 0..=3.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    digits: Vec<u8>,
}

impl MultiIndex {
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::InvalidArgument(
                "multiindex must have length >= 1".into(),
            ));
        }
        if let Some(&d) = digits.iter().find(|&&d| d > 3) {
            return Err(Error::InvalidArgument(format!(
                "multiindex digit {d} out of range 0..=3"
            )));
        }
        Ok(MultiIndex { digits })
    }

    /// Decode a linear index (qubit 1 most significant).
    pub fn from_linear(mut idx: usize, n: usize) -> Self {
        let mut digits = vec![0u8; n];
        for k in (0..n).rev() {
            digits[k] = (idx % 4) as u8;
            idx /= 4;
        }
        debug_assert_eq!(idx, 0, "linear index out of range for {n} qubits");
        MultiIndex { digits }
    }

    pub fn to_linear(&self) -> usize {
        self.digits
            .iter()
            .fold(0usize, |acc, &d| acc * 4 + d as usize)
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }
}

/// `sigma_I = sigma_{i_1} (x) ... (x) sigma_{i_n}`.
pub fn sigma_tensor(index: &MultiIndex) -> CMatrix {
    let mut out = sigma(index.digits[0]);
    for &d in &index.digits[1..] {
        out = out.kron(&sigma(d));
    }
    out
}

/// Real coefficient vector of the Pauli expansion of a Hermitian matrix,
/// with `coeffs[I] = s_I` in linear multiindex order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PauliVector {
    pub n: usize,
    pub coeffs: Vec<f64>,
}

impl PauliVector {
    pub fn zeros(n: usize) -> Self {
        PauliVector {
            n,
            coeffs: vec![0.0; 4usize.pow(n as u32)],
        }
    }

    pub fn new(n: usize, coeffs: Vec<f64>) -> Result<Self> {
        let want = 4usize.checked_pow(n as u32).ok_or_else(|| {
            Error::InvalidArgument(format!("qubit count {n} too large for a Pauli vector"))
        })?;
        if n == 0 || coeffs.len() != want {
            return Err(Error::InvalidArgument(format!(
                "Pauli vector for n={n} needs {want} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(PauliVector { n, coeffs })
    }

    pub fn get(&self, index: &MultiIndex) -> f64 {
        self.coeffs[index.to_linear()]
    }
}

// Per-qubit structure of a Pauli factor: each sigma_i has one nonzero per
// row, at column row^flip, with value weight(i, row).
fn flips_column(digit: u8) -> bool {
    digit == 1 || digit == 2
}

fn weight(digit: u8, row_bit: usize) -> Complex64 {
    match (digit, row_bit) {
        (0, _) | (1, _) => Complex64::ONE,
        (2, 0) => Complex64::new(0.0, -1.0),
        (2, _) => Complex64::new(0.0, 1.0),
        (3, 0) => Complex64::ONE,
        (3, _) => -Complex64::ONE,
        _ => unreachable!(),
    }
}

fn check_shape(rho: &CMatrix, n: usize) -> Result<usize> {
    let dim = 1usize << n;
    if rho.rows() != dim || rho.cols() != dim {
        return Err(Error::DimMismatch(format!(
            "expected a {dim}x{dim} matrix for n={n}, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    Ok(dim)
}

/// Expand a Hermitian matrix into Pauli coefficients,
/// `s_I = 2^{-n} tr(sigma_I rho)`.
pub fn expand(rho: &CMatrix, n: usize) -> Result<PauliVector> {
    let dim = check_shape(rho, n)?;
    let scale = rho.max_abs().max(1.0);
    let herm_tol = 1e-12 * scale;
    let dev = rho.hermiticity_deviation();
    if dev > herm_tol {
        return Err(Error::NotHermitian {
            deviation: dev,
            tol: herm_tol,
        });
    }

    let norm = 1.0 / dim as f64;
    let mut coeffs = vec![0.0f64; 4usize.pow(n as u32)];
    for (lin, c) in coeffs.iter_mut().enumerate() {
        let index = MultiIndex::from_linear(lin, n);
        // Column mask: bits of the rows flipped by this sigma_I.
        let mut mask = 0usize;
        for (k, &d) in index.digits().iter().enumerate() {
            if flips_column(d) {
                mask |= 1 << (n - 1 - k);
            }
        }
        // tr(sigma_I rho) = sum_r sigma_I[r, r^mask] rho[r^mask, r]
        let mut acc = Complex64::ZERO;
        for r in 0..dim {
            let mut w = Complex64::ONE;
            for (k, &d) in index.digits().iter().enumerate() {
                let bit = (r >> (n - 1 - k)) & 1;
                w *= weight(d, bit);
            }
            acc += w * rho[(r ^ mask, r)];
        }
        let s = acc * norm;
        if s.im.abs() > herm_tol {
            return Err(Error::NotHermitian {
                deviation: s.im.abs(),
                tol: herm_tol,
            });
        }
        *c = s.re;
    }
    PauliVector::new(n, coeffs)
}

/// Rebuild `sum_I v_I sigma_I` from Pauli coefficients.
pub fn reconstruct(v: &PauliVector) -> CMatrix {
    let n = v.n;
    let dim = 1usize << n;
    let mut out = CMatrix::zeros(dim, dim);
    for (lin, &s) in v.coeffs.iter().enumerate() {
        if s == 0.0 {
            continue;
        }
        let index = MultiIndex::from_linear(lin, n);
        let mut mask = 0usize;
        for (k, &d) in index.digits().iter().enumerate() {
            if flips_column(d) {
                mask |= 1 << (n - 1 - k);
            }
        }
        for r in 0..dim {
            let mut w = Complex64::ONE;
            for (k, &d) in index.digits().iter().enumerate() {
                let bit = (r >> (n - 1 - k)) & 1;
                w *= weight(d, bit);
            }
            out[(r, r ^ mask)] += s * w;
        }
    }
    out
}
