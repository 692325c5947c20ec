//! Dense complex/real linear algebra used by every other module.
//!
//! Matrices here are small (at most a few thousand rows), so everything is
//! row-major dense with straightforward O(n^3) kernels: Kronecker and matrix
//! products, a cyclic Jacobi eigensolver for Hermitian matrices, a
//! rank-revealing elimination null space for real systems, and the
//! Hilbert-Schmidt pairing.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default relative tolerance for rank and null-space decisions.
pub const DEFAULT_REL_TOL: f64 = 1e-8;

/// Default tolerance for residual assertions (invariance checks, containment).
pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-10;

/// Dense complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Self {
        let r = rows.len();
        assert!(r > 0, "matrix must have at least one row");
        let c = rows[0].len();
        assert!(
            c > 0 && rows.iter().all(|row| row.len() == c),
            "ragged rows"
        );
        CMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = CMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Column vector from a slice of amplitudes.
    pub fn column_vector(v: &[Complex64]) -> Self {
        assert!(!v.is_empty());
        CMatrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
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

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a == Complex64::ZERO {
                    continue;
                }
                for k in 0..other.rows {
                    let dst_row = i * other.rows + k;
                    for l in 0..other.cols {
                        out[(dst_row, j * other.cols + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Matrix product; panics on inner-dimension mismatch.
    pub fn matmul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matmul dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::ZERO {
                    continue;
                }
                let src = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += a * s;
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace requires a square matrix");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Hilbert-Schmidt pairing `tr(self^H other)`, conjugate-linear in `self`.
    pub fn hs_inner(&self, other: &CMatrix) -> Complex64 {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "hs_inner requires equal shapes"
        );
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: Complex64) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len(), "apply dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, x)| a * x)
                    .sum()
            })
            .collect()
    }

    /// Max entrywise deviation from `self = self^H`.
    pub fn hermiticity_deviation(&self) -> f64 {
        assert!(self.is_square());
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    /// `(self + self^H) / 2`; exact for already-Hermitian input.
    pub fn hermitian_part(&self) -> CMatrix {
        assert!(self.is_square());
        CMatrix::from_fn(self.rows, self.cols, |i, j| {
            (self[(i, j)] + self[(j, i)].conj()) * 0.5
        })
    }

    pub fn commutator(&self, other: &CMatrix) -> CMatrix {
        &self.matmul(other) - &other.matmul(self)
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl std::ops::Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "add shape mismatch"
        );
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "sub shape mismatch"
        );
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl std::ops::Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        self.matmul(rhs)
    }
}

impl std::fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Dense real matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl RMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        RMatrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Self {
        let r = rows.len();
        assert!(r > 0, "matrix must have at least one row");
        let c = rows[0].len();
        assert!(
            c > 0 && rows.iter().all(|row| row.len() == c),
            "ragged rows"
        );
        RMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

impl std::ops::Index<(usize, usize)> for RMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

const MAX_JACOBI_SWEEPS: usize = 100;

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order and the unitary of eigenvectors as
/// columns, so that `a = V diag(lambda) V^H`. Rejects input whose hermiticity
/// deviation exceeds `tol`.
pub fn hermitian_eig(a: &CMatrix, tol: f64) -> Result<(Vec<f64>, CMatrix)> {
    if !a.is_square() {
        return Err(Error::DimMismatch(format!(
            "eigendecomposition requires a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let dev = a.hermiticity_deviation();
    if dev > tol {
        return Err(Error::NotHermitian {
            deviation: dev,
            tol,
        });
    }

    let n = a.rows();
    // Work on the exactly-Hermitian part so rounding asymmetry cannot bias
    // the rotations.
    let mut m = a.hermitian_part();
    let mut v = CMatrix::identity(n);
    let scale = m.frobenius_norm();
    if n == 1 || scale == 0.0 {
        let vals = (0..n).map(|i| m[(i, i)].re).collect();
        return Ok((vals, v));
    }

    let target = 1e-13 * scale;
    let mut converged = false;
    let mut last_off = f64::INFINITY;
    for _sweep in 0..MAX_JACOBI_SWEEPS {
        let mut off_sq = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off_sq += 2.0 * m[(p, q)].norm_sqr();
            }
        }
        last_off = off_sq.sqrt();
        if last_off <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps: MAX_JACOBI_SWEEPS,
            off: last_off,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let vals = order.iter().map(|&i| m[(i, i)].re).collect();
    let vecs = CMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok((vals, vecs))
}

/// One complex Jacobi rotation zeroing `m[(p, q)]`, accumulated into `v`.
fn rotate(m: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let beta = m[(p, q)];
    let r = beta.norm();
    if r <= 1e-300 {
        return;
    }
    let phase = beta / r; // e^{i theta}
    let alpha = m[(p, p)].re;
    let gamma = m[(q, q)].re;
    let tau = (gamma - alpha) / (2.0 * r);
    // stable root of t^2 - 2 tau t - 1 = 0, the annihilation condition for
    // the rotation columns below
    let t = if tau >= 0.0 {
        -1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // Columns of the plane rotation:
    //   u_p = c e_p + s e^{-i theta} e_q,   u_q = -s e^{i theta} e_p + c e_q
    let n = m.rows();
    let sp = phase.conj() * s; // s e^{-i theta}
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let mkp = m[(k, p)];
        let mkq = m[(k, q)];
        m[(k, p)] = c * mkp + sp * mkq;
        m[(k, q)] = -sp.conj() * mkp + c * mkq;
        m[(p, k)] = m[(k, p)].conj();
        m[(q, k)] = m[(k, q)].conj();
    }
    m[(p, p)] = Complex64::new(alpha + t * r, 0.0);
    m[(q, q)] = Complex64::new(gamma - t * r, 0.0);
    m[(p, q)] = Complex64::ZERO;
    m[(q, p)] = Complex64::ZERO;

    for k in 0..v.rows() {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = c * vkp + sp * vkq;
        v[(k, q)] = -sp.conj() * vkp + c * vkq;
    }
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues(a: &CMatrix, tol: f64) -> Result<Vec<f64>> {
    hermitian_eig(a, tol).map(|(vals, _)| vals)
}

/// Numerical rank of a Hermitian PSD Gram matrix: the number of eigenvalues
/// above `rel_tol * lambda_max`. Returns 0 when `lambda_max <= 0`.
pub fn rank_psd(gram: &CMatrix, rel_tol: f64) -> usize {
    let sym = gram.hermitian_part();
    let vals = hermitian_eigenvalues(&sym, f64::INFINITY)
        .expect("Jacobi eigensolver failed on a symmetrized Gram matrix");
    let lambda_max = vals.last().copied().unwrap_or(0.0);
    if lambda_max <= 0.0 {
        return 0;
    }
    vals.iter().filter(|&&l| l > rel_tol * lambda_max).count()
}

/// Orthonormal basis of the numerical null space of `m`.
///
/// Rank-revealing Gauss-Jordan elimination with full pivoting: pivots are
/// accepted while the largest remaining entry exceeds `rel_tol` times the
/// largest entry of the input. Free columns yield null vectors, which are
/// then orthonormalized. Output order is deterministic (free columns
/// ascending before orthonormalization).
pub fn real_nullspace(m: &RMatrix, rel_tol: f64) -> Vec<Vec<f64>> {
    let rows = m.rows();
    let cols = m.cols();
    let scale = m.max_abs();
    if scale == 0.0 {
        // Zero map: the whole domain, as standard unit vectors.
        return (0..cols)
            .map(|j| {
                let mut e = vec![0.0; cols];
                e[j] = 1.0;
                e
            })
            .collect();
    }

    let mut a = m.clone();
    let thresh = rel_tol * scale;
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut is_pivot = vec![false; cols];
    let max_rank = rows.min(cols);

    while pivot_cols.len() < max_rank {
        let r = pivot_cols.len();
        // Full pivoting over the untouched block.
        let mut best = (r, 0, 0.0f64);
        for i in r..rows {
            for j in 0..cols {
                if is_pivot[j] {
                    continue;
                }
                let v = a[(i, j)].abs();
                if v > best.2 {
                    best = (i, j, v);
                }
            }
        }
        let (pi, pj, pmax) = best;
        if pmax <= thresh {
            break;
        }
        if pi != r {
            for j in 0..cols {
                let tmp = a[(r, j)];
                a[(r, j)] = a[(pi, j)];
                a[(pi, j)] = tmp;
            }
        }
        let d = a[(r, pj)];
        for j in 0..cols {
            a[(r, j)] /= d;
        }
        a[(r, pj)] = 1.0;
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a[(i, pj)];
            if f != 0.0 {
                for j in 0..cols {
                    a[(i, j)] -= f * a[(r, j)];
                }
                a[(i, pj)] = 0.0;
            }
        }
        pivot_cols.push(pj);
        is_pivot[pj] = true;
    }

    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(cols - pivot_cols.len());
    for f in 0..cols {
        if is_pivot[f] {
            continue;
        }
        let mut x = vec![0.0; cols];
        x[f] = 1.0;
        for (k, &pc) in pivot_cols.iter().enumerate() {
            x[pc] = -a[(k, f)];
        }
        basis.push(x);
    }
    orthonormalize(&mut basis);
    basis
}

/// Modified Gram-Schmidt in place. Assumes the input is linearly independent.
fn orthonormalize(basis: &mut [Vec<f64>]) {
    for i in 0..basis.len() {
        for j in 0..i {
            let proj: f64 = basis[i].iter().zip(&basis[j]).map(|(a, b)| a * b).sum();
            let prev = basis[j].clone();
            for (x, p) in basis[i].iter_mut().zip(&prev) {
                *x -= proj * p;
            }
        }
        let norm: f64 = basis[i].iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!(
            norm > 0.0,
            "null-space basis degenerated during orthonormalization"
        );
        for x in basis[i].iter_mut() {
            *x /= norm;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::sigma;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn kron_identities() {
        let i2 = CMatrix::identity(2);
        assert_eq!(i2.kron(&i2), CMatrix::identity(4));
    }

    #[test]
    fn kron_sigma_x_sigma_z() {
        let m = sigma(1).kron(&sigma(3));
        for i in 0..4 {
            for j in 0..4 {
                let expect = match (i, j) {
                    (0, 2) => c(1.0, 0.0),
                    (1, 3) => c(-1.0, 0.0),
                    (2, 0) => c(1.0, 0.0),
                    (3, 1) => c(-1.0, 0.0),
                    _ => Complex64::ZERO,
                };
                assert_eq!(m[(i, j)], expect, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn kron_factors_on_vectors() {
        // (a (x) b)(u (x) v) = (a u) (x) (b v), against direct multiplication
        let a = CMatrix::from_rows(vec![
            vec![c(0.3, -0.1), c(1.2, 0.4)],
            vec![c(-0.7, 0.9), c(0.0, 2.0)],
        ]);
        let b = CMatrix::from_rows(vec![
            vec![c(1.0, 1.0), c(0.5, 0.0)],
            vec![c(-0.2, 0.3), c(0.8, -0.6)],
        ]);
        let u = [c(0.4, 0.1), c(-1.1, 0.7)];
        let v = [c(0.9, -0.3), c(0.2, 0.5)];
        let uv: Vec<Complex64> = u
            .iter()
            .flat_map(|x| v.iter().map(move |y| x * y))
            .collect();
        let lhs = a.kron(&b).apply(&uv);
        let au = a.apply(&u);
        let bv = b.apply(&v);
        let rhs: Vec<Complex64> = au
            .iter()
            .flat_map(|x| bv.iter().map(move |y| x * y))
            .collect();
        for (l, r) in lhs.iter().zip(&rhs) {
            assert!((l - r).norm() < 1e-12);
        }
    }

    #[test]
    fn trace_and_hs_inner() {
        assert_eq!(CMatrix::identity(4).trace(), c(4.0, 0.0));
        let sx = sigma(1);
        let sy = sigma(2);
        assert!((sx.hs_inner(&sx) - c(2.0, 0.0)).norm() < 1e-15);
        assert!(sx.hs_inner(&sy).norm() < 1e-15);
    }

    #[test]
    fn dagger_reverses_products() {
        let a = CMatrix::from_rows(vec![
            vec![c(1.0, 2.0), c(0.0, -1.0)],
            vec![c(3.0, 0.5), c(-2.0, 1.0)],
        ]);
        let b = CMatrix::from_rows(vec![
            vec![c(0.2, -0.8), c(1.5, 0.0)],
            vec![c(0.0, 0.3), c(-0.4, -0.9)],
        ]);
        let lhs = a.matmul(&b).dagger();
        let rhs = b.dagger().matmul(&a.dagger());
        assert!((&lhs - &rhs).frobenius_norm() < 1e-12);
    }

    #[test]
    fn eig_sigma_z() {
        let vals = hermitian_eigenvalues(&sigma(3), 1e-12).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = CMatrix::from_rows(vec![
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ]);
        assert!(matches!(
            hermitian_eigenvalues(&m, 1e-12),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn eig_reconstructs() {
        // Fixed dense Hermitian matrix: residual and trace identities.
        let n = 6;
        let mut h = CMatrix::zeros(n, n);
        let mut state = 88172645463325252u64;
        let mut next = || {
            // xorshift64
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for i in 0..n {
            h[(i, i)] = c(next(), 0.0);
            for j in (i + 1)..n {
                let z = c(next(), next());
                h[(i, j)] = z;
                h[(j, i)] = z.conj();
            }
        }
        let (vals, v) = hermitian_eig(&h, 1e-12).unwrap();
        let sum: f64 = vals.iter().sum();
        assert!((sum - h.trace().re).abs() < 1e-10 * h.frobenius_norm().max(1.0));
        let mut lam = CMatrix::zeros(n, n);
        for i in 0..n {
            lam[(i, i)] = c(vals[i], 0.0);
        }
        let recon = v.matmul(&lam).matmul(&v.dagger());
        assert!((&recon - &h).frobenius_norm() <= 1e-10 * h.frobenius_norm());
        // V unitary
        let vtv = v.dagger().matmul(&v);
        assert!((&vtv - &CMatrix::identity(n)).frobenius_norm() < 1e-12);
    }

    #[test]
    fn rank_psd_basics() {
        let z = CMatrix::zeros(3, 3);
        assert_eq!(rank_psd(&z, DEFAULT_REL_TOL), 0);
        assert_eq!(rank_psd(&CMatrix::identity(3), DEFAULT_REL_TOL), 3);
    }

    #[test]
    fn nullspace_basics() {
        let id = RMatrix::from_rows(vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
        ]);
        assert!(real_nullspace(&id, DEFAULT_REL_TOL).is_empty());

        let zero = RMatrix::zeros(2, 3);
        let basis = real_nullspace(&zero, DEFAULT_REL_TOL);
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn nullspace_known_kernel() {
        // Rows sum: kernel of [1 1 1] is 2-dimensional and orthonormal.
        let m = RMatrix::from_rows(vec![vec![1.0, 1.0, 1.0]]);
        let basis = real_nullspace(&m, DEFAULT_REL_TOL);
        assert_eq!(basis.len(), 2);
        for (i, v) in basis.iter().enumerate() {
            let s: f64 = v.iter().sum();
            assert!(s.abs() < 1e-12, "not in kernel");
            for w in &basis[..i] {
                let dot: f64 = v.iter().zip(w).map(|(a, b)| a * b).sum();
                assert!(dot.abs() < 1e-12, "not orthogonal");
            }
            let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-12, "not normalized");
        }
    }
}
