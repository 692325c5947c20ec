//! Invariance checks and first-principles dimension counts for the algebra
//! of matrices commuting with every collective rotation g^(x)n.
//!
//! The commutant is computed in Pauli coordinates: [J_a, sigma_I] expands
//! over single-digit substitutions of I with structure constants from
//! [sigma_a, sigma_b] = 2i eps_abc sigma_c, so each generator becomes a
//! sparse real matrix on R^{4^n} and the commutant is its null space.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagrams::{catalan, enumerate_noncrossing_partitions};
use crate::error::{Error, Result};
use crate::linalg::{rank_psd, real_nullspace, CMatrix, RMatrix, DEFAULT_REL_TOL};
use crate::pauli::{expand, reconstruct, sigma, MultiIndex, PauliVector};
use crate::states::{
    all_permutations, diagram_density, permute_qubits, radial_element, sym_element, PureState,
};

/// sigma_axis acting on qubit `k` (0-based) of an n-qubit register.
pub fn single_qubit_operator(op: &CMatrix, k: usize, n: usize) -> CMatrix {
    assert!(k < n, "qubit index out of range");
    let left = CMatrix::identity(1 << k);
    let right = CMatrix::identity(1 << (n - 1 - k));
    left.kron(op).kron(&right)
}

/// Collective generator J_axis = sum_k sigma_axis^(k), axis in 1..=3.
pub fn collective_generator(n: usize, axis: u8) -> CMatrix {
    assert!((1..=3).contains(&axis), "axis must be 1..=3");
    assert!(n >= 1);
    let op = sigma(axis);
    let mut acc = CMatrix::zeros(1 << n, 1 << n);
    for k in 0..n {
        acc = &acc + &single_qubit_operator(&op, k, n);
    }
    acc
}

fn infer_n(rho: &CMatrix) -> Result<usize> {
    if rho.rows() != rho.cols() {
        return Err(Error::DimMismatch(format!(
            "matrix must be square, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    let dim = rho.rows();
    if dim < 2 || !dim.is_power_of_two() {
        return Err(Error::DimMismatch(format!(
            "matrix side {dim} is not 2^n with n >= 1"
        )));
    }
    Ok(dim.trailing_zeros() as usize)
}

/// max over axes of the Frobenius norm of [J_axis, rho].
pub fn werner_residual(rho: &CMatrix) -> Result<f64> {
    let n = infer_n(rho)?;
    let mut worst = 0.0f64;
    for axis in 1..=3 {
        let j = collective_generator(n, axis);
        worst = worst.max(j.commutator(rho).frobenius_norm());
    }
    Ok(worst)
}

/// max over axes of || J_axis |psi> ||_2. Zero exactly on pure states fixed
/// by every collective rotation.
pub fn pure_werner_residual(psi: &PureState) -> f64 {
    let n = psi.n();
    let amps = psi.amps();
    let mut worst = 0.0f64;
    for axis in 1..=3u8 {
        let mut out = vec![Complex64::ZERO; amps.len()];
        for (i, &a) in amps.iter().enumerate() {
            if a == Complex64::ZERO {
                continue;
            }
            for k in 0..n {
                let bit = (i >> (n - 1 - k)) & 1;
                match axis {
                    1 => out[i ^ (1 << (n - 1 - k))] += a,
                    2 => {
                        let phase = if bit == 0 {
                            Complex64::new(0.0, 1.0)
                        } else {
                            Complex64::new(0.0, -1.0)
                        };
                        out[i ^ (1 << (n - 1 - k))] += phase * a;
                    }
                    _ => out[i] += if bit == 0 { a } else { -a },
                }
            }
        }
        let norm = out.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        worst = worst.max(norm);
    }
    worst
}

/// Haar-random SU(2) element from a normalized Gaussian quaternion.
pub fn haar_su2<R: Rng + ?Sized>(rng: &mut R) -> CMatrix {
    let mut gauss = [0.0f64; 4];
    for pair in gauss.chunks_mut(2) {
        // Box-Muller on (0, 1] x [0, 1)
        let u1: f64 = 1.0 - rng.random::<f64>();
        let u2: f64 = rng.random();
        let r = (-2.0 * u1.ln()).sqrt();
        pair[0] = r * (2.0 * std::f64::consts::PI * u2).cos();
        if pair.len() > 1 {
            pair[1] = r * (2.0 * std::f64::consts::PI * u2).sin();
        }
    }
    let norm = gauss.iter().map(|x| x * x).sum::<f64>().sqrt();
    let [a, b, c, d] = gauss.map(|x| x / norm);
    CMatrix::from_rows(vec![
        vec![Complex64::new(a, b), Complex64::new(c, d)],
        vec![Complex64::new(-c, d), Complex64::new(a, -b)],
    ])
}

fn tensor_power(g: &CMatrix, n: usize) -> CMatrix {
    let mut out = g.clone();
    for _ in 1..n {
        out = out.kron(g);
    }
    out
}

/// Outcome of the invariance check on a candidate density matrix.
#[derive(Clone, Debug, Serialize)]
pub struct WernerReport {
    pub n: usize,
    pub residual: f64,
    pub random_conjugation_max: f64,
    pub random_checks: usize,
    pub seed: u64,
    pub tol: f64,
    pub is_werner: bool,
}

/// Checks [J_a, rho] = 0 and spot-checks invariance under seeded random
/// collective rotations.
pub fn is_werner(rho: &CMatrix, tol: f64, random_checks: usize, seed: u64) -> Result<WernerReport> {
    let n = infer_n(rho)?;
    let residual = werner_residual(rho)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..random_checks {
        let g = tensor_power(&haar_su2(&mut rng), n);
        let conj = &(&g * rho) * &g.dagger();
        worst = worst.max((&conj - rho).frobenius_norm());
    }
    Ok(WernerReport {
        n,
        residual,
        random_conjugation_max: worst,
        random_checks,
        seed,
        tol,
        is_werner: residual < tol && worst < tol,
    })
}

fn levi_civita(a: u8, b: u8) -> Option<(u8, f64)> {
    // returns (c, eps_abc) with eps the sign of (a b c) as a permutation of
    // (1 2 3); None when a == b
    match (a, b) {
        (1, 2) => Some((3, 1.0)),
        (2, 1) => Some((3, -1.0)),
        (2, 3) => Some((1, 1.0)),
        (3, 2) => Some((1, -1.0)),
        (3, 1) => Some((2, 1.0)),
        (1, 3) => Some((2, -1.0)),
        _ => None,
    }
}

/// Orthonormal basis, in Pauli coordinates, of the algebra commuting with
/// every J_axis.
pub struct CommutantBasis {
    n: usize,
    basis: Vec<Vec<f64>>,
}

impl CommutantBasis {
    pub fn new(n: usize, rel_tol: f64) -> Self {
        assert!(n >= 1);
        let side = 4usize.pow(n as u32);
        // stacked action of ad_{J_1}, ad_{J_2}, ad_{J_3} on Pauli coordinates
        let mut m = RMatrix::zeros(3 * side, side);
        for lin in 0..side {
            let index = MultiIndex::from_linear(lin, n);
            for axis in 1..=3u8 {
                for (k, &d) in index.digits().iter().enumerate() {
                    if let Some((c, eps)) = levi_civita(axis, d) {
                        let mut digits = index.digits().to_vec();
                        digits[k] = c;
                        let target = MultiIndex::new(digits).expect("digit stays in range");
                        let row = (axis as usize - 1) * side + target.to_linear();
                        m[(row, lin)] += 2.0 * eps;
                    }
                }
            }
        }
        CommutantBasis {
            n,
            basis: real_nullspace(&m, rel_tol),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Basis vectors in Pauli coordinates, orthonormal for the Euclidean
    /// inner product (hence Hilbert-Schmidt orthogonal as matrices).
    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.basis
    }

    /// Orthogonal projection of a Pauli coefficient vector onto the
    /// commutant.
    pub fn project_coords(&self, v: &PauliVector) -> Result<PauliVector> {
        if v.n != self.n {
            return Err(Error::DimMismatch(format!(
                "coefficient vector for n={} against basis for n={}",
                v.n, self.n
            )));
        }
        let mut out = vec![0.0f64; v.coeffs.len()];
        for b in &self.basis {
            let dot: f64 = b.iter().zip(&v.coeffs).map(|(x, y)| x * y).sum();
            for (o, &x) in out.iter_mut().zip(b) {
                *o += dot * x;
            }
        }
        PauliVector::new(self.n, out)
    }

    /// Hilbert-Schmidt orthogonal projection of a Hermitian matrix onto the
    /// commutant.
    pub fn project(&self, rho: &CMatrix) -> Result<CMatrix> {
        let v = expand(rho, self.n)?;
        Ok(reconstruct(&self.project_coords(&v)?))
    }

    /// Frobenius distance from rho to its commutant projection.
    pub fn span_residual(&self, rho: &CMatrix) -> Result<f64> {
        Ok((&self.project(rho)? - rho).frobenius_norm())
    }
}

/// Dimension of the commutant algebra, from the numerical null space.
pub fn commutant_dimension(n: usize) -> usize {
    CommutantBasis::new(n, DEFAULT_REL_TOL).dimension()
}

/// Dimension of the space of state vectors annihilated by every J_axis,
/// from the null space of the stacked (realified) collective generators.
pub fn pure_werner_dimension(n: usize) -> usize {
    assert!(n >= 1);
    let dim = 1usize << n;
    let mut stacked = CMatrix::zeros(3 * dim, dim);
    for axis in 1..=3u8 {
        let j = collective_generator(n, axis);
        for r in 0..dim {
            for c in 0..dim {
                stacked[((axis as usize - 1) * dim + r, c)] = j[(r, c)];
            }
        }
    }
    // complex kernel via [[Re, -Im], [Im, Re]] acting on [Re x; Im x]
    let rows = stacked.rows();
    let cols = stacked.cols();
    let mut real = RMatrix::zeros(2 * rows, 2 * cols);
    for r in 0..rows {
        for c in 0..cols {
            let z = stacked[(r, c)];
            real[(r, c)] = z.re;
            real[(r, cols + c)] = -z.im;
            real[(rows + r, c)] = z.im;
            real[(rows + r, cols + c)] = z.re;
        }
    }
    let null = real_nullspace(&real, DEFAULT_REL_TOL);
    debug_assert!(
        null.len().is_multiple_of(2),
        "realified kernel dimension must be even"
    );
    null.len() / 2
}

/// Hilbert-Schmidt projection onto the commutant (the exact twirl).
pub fn twirl_project(rho: &CMatrix) -> Result<CMatrix> {
    let n = infer_n(rho)?;
    CommutantBasis::new(n, DEFAULT_REL_TOL).project(rho)
}

/// Empirical twirl: average of g^(x)n rho g^(x)n-dagger over seeded
/// Haar-random g. Converges to `twirl_project` at the Monte Carlo rate.
pub fn monte_carlo_twirl(rho: &CMatrix, samples: usize, seed: u64) -> Result<CMatrix> {
    let n = infer_n(rho)?;
    assert!(samples > 0, "need at least one sample");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = rho.rows();
    let mut acc = CMatrix::zeros(dim, dim);
    for _ in 0..samples {
        let g = tensor_power(&haar_su2(&mut rng), n);
        acc = &acc + &(&(&g * rho) * &g.dagger());
    }
    Ok(acc.scale(Complex64::new(1.0 / samples as f64, 0.0)))
}

/// Gram matrix of Hilbert-Schmidt inner products and its numerical rank.
pub fn gram_rank_test(states: &[CMatrix], rel_tol: f64) -> Result<(CMatrix, usize)> {
    if states.is_empty() {
        return Ok((CMatrix::zeros(0, 0), 0));
    }
    let (rows, cols) = (states[0].rows(), states[0].cols());
    if states.iter().any(|s| s.rows() != rows || s.cols() != cols) {
        return Err(Error::DimMismatch(
            "Gram inputs must share one shape".into(),
        ));
    }
    let k = states.len();
    let mut gram = CMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] = states[i].hs_inner(&states[j]);
        }
    }
    let rank = rank_psd(&gram, rel_tol);
    Ok((gram, rank))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Consistent,
    RefutedIndependence,
    RefutedSpan,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::RefutedIndependence => "refuted-independence",
            Verdict::RefutedSpan => "refuted-span",
        })
    }
}

/// Numerical test of the claim that the non-crossing polygon-diagram states
/// on n qubits are a linearly independent spanning set for the commutant.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub num_diagrams: usize,
    pub gram_rank: usize,
    pub catalan: u64,
    pub commutant_dim: usize,
    pub max_werner_residual: f64,
    pub max_span_residual: f64,
    pub verdict: Verdict,
}

pub fn conjecture_test(n: usize, rel_tol: f64, residual_tol: f64) -> Result<ConjectureReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one qubit".into()));
    }
    let diagrams = enumerate_noncrossing_partitions(n);
    let states: Vec<CMatrix> = diagrams.iter().map(diagram_density).collect();
    let basis = CommutantBasis::new(n, rel_tol);

    let mut max_werner = 0.0f64;
    let mut max_span = 0.0f64;
    for (d, rho) in diagrams.iter().zip(&states) {
        let w = werner_residual(rho)?;
        if w > residual_tol {
            return Err(Error::Numerical(format!(
                "diagram state {d} has commutator residual {w:.3e} (tol {residual_tol:.1e})"
            )));
        }
        let s = basis.span_residual(rho)?;
        if s > residual_tol {
            return Err(Error::Numerical(format!(
                "diagram state {d} is off its commutant projection by {s:.3e} (tol {residual_tol:.1e})"
            )));
        }
        max_werner = max_werner.max(w);
        max_span = max_span.max(s);
    }

    let (_, gram_rank) = gram_rank_test(&states, rel_tol)?;
    let num_diagrams = states.len();
    let commutant_dim = basis.dimension();
    let cat = catalan(n as u32);

    let verdict = if gram_rank < num_diagrams {
        Verdict::RefutedIndependence
    } else if commutant_dim != num_diagrams || cat != num_diagrams as u64 {
        Verdict::RefutedSpan
    } else {
        Verdict::Consistent
    };

    Ok(ConjectureReport {
        n,
        num_diagrams,
        gram_rank,
        catalan: cat,
        commutant_dim,
        max_werner_residual: max_werner,
        max_span_residual: max_span,
        verdict,
    })
}

/// Checks the radial family and measures the span of twirled symmetric
/// elements inside the permutation-invariant commutant.
#[derive(Clone, Debug, Serialize)]
pub struct SymmetricReport {
    pub n: usize,
    pub max_radial_residual: f64,
    pub max_permutation_deviation: f64,
    pub span_dimension: usize,
    pub expected_dimension: usize,
    pub consistent: bool,
}

pub fn symmetric_werner_test(n: usize, rel_tol: f64, residual_tol: f64) -> Result<SymmetricReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one qubit".into()));
    }
    let perms = all_permutations(n);
    let mut max_residual = 0.0f64;
    let mut max_perm = 0.0f64;
    for m in 0..=n / 2 {
        let r = radial_element(m, n)?;
        let w = werner_residual(&r)?;
        if w > residual_tol * r.frobenius_norm().max(1.0) {
            return Err(Error::Numerical(format!(
                "radial element m={m} has commutator residual {w:.3e}"
            )));
        }
        max_residual = max_residual.max(w);
        for perm in &perms {
            let dev = (&permute_qubits(&r, perm) - &r).frobenius_norm();
            if dev > residual_tol * r.frobenius_norm().max(1.0) {
                return Err(Error::Numerical(format!(
                    "radial element m={m} moves by {dev:.3e} under a qubit relabeling"
                )));
            }
            max_perm = max_perm.max(dev);
        }
    }

    let basis = CommutantBasis::new(n, rel_tol);
    let mut projected = Vec::new();
    for n1 in 0..=n {
        for n2 in 0..=(n - n1) {
            for n3 in 0..=(n - n1 - n2) {
                projected.push(basis.project(&sym_element(n1, n2, n3, n)?)?);
            }
        }
    }
    let (_, span_dimension) = gram_rank_test(&projected, rel_tol)?;
    let expected_dimension = n / 2 + 1;

    Ok(SymmetricReport {
        n,
        max_radial_residual: max_residual,
        max_permutation_deviation: max_perm,
        span_dimension,
        expected_dimension,
        consistent: span_dimension == expected_dimension,
    })
}
