//! Stabilizer algebra of a state under independent local rotations.
//!
//! For a mixture rho, the stabilizer is the null space of
//! (A_1, ..., A_n) -> sum_k [A_k^(k), rho] over tuples of traceless
//! Hermitian single-qubit operators, coordinatized by x in R^{3n} with
//! A_k = sum_a x_{k,a} sigma_a. For a pure state the condition relaxes to
//! sum_k A_k^(k) |psi> = t |psi> with one real slack t.

use num_complex::Complex64;
use serde::Serialize;

use crate::analysis::single_qubit_operator;
use crate::diagrams::{common_coarsening, Matching, Partition};
use crate::error::{Error, Result};
use crate::linalg::{real_nullspace, CMatrix, RMatrix};
use crate::pauli::sigma;
use crate::states::{chord_state, diagram_density, PureState};

/// Orthonormal basis of stabilizer directions; element e assigns qubit k the
/// coefficients `coords[e][3k..3k+3]` of (sigma_x, sigma_y, sigma_z).
#[derive(Clone, Debug)]
pub struct StabilizerBasis {
    n: usize,
    coords: Vec<Vec<f64>>,
}

impl StabilizerBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Vec<f64>] {
        &self.coords
    }

    /// Reassemble element e as the tuple of single-qubit matrices it applies.
    pub fn local_operators(&self, e: usize) -> Vec<CMatrix> {
        let x = &self.coords[e];
        (0..self.n)
            .map(|k| {
                let mut op = CMatrix::zeros(2, 2);
                for a in 0..3 {
                    op = &op + &sigma(a as u8 + 1).scale(Complex64::new(x[3 * k + a], 0.0));
                }
                op
            })
            .collect()
    }
}

fn realify_columns(columns: &[Vec<Complex64>]) -> RMatrix {
    let rows = columns.first().map_or(0, Vec::len);
    let mut m = RMatrix::zeros(2 * rows, columns.len());
    for (c, col) in columns.iter().enumerate() {
        for (r, z) in col.iter().enumerate() {
            m[(r, c)] = z.re;
            m[(rows + r, c)] = z.im;
        }
    }
    m
}

/// Stabilizer algebra of a density-like matrix: null space of
/// x -> sum_{k,a} x_{k,a} [sigma_a^(k), rho].
pub fn stabilizer_algebra(rho: &CMatrix, rel_tol: f64) -> Result<StabilizerBasis> {
    if rho.rows() != rho.cols() || !rho.rows().is_power_of_two() || rho.rows() < 2 {
        return Err(Error::DimMismatch(format!(
            "expected a square 2^n matrix, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    let n = rho.rows().trailing_zeros() as usize;
    let dim = rho.rows();
    let mut columns = Vec::with_capacity(3 * n);
    for k in 0..n {
        for a in 1..=3u8 {
            let op = single_qubit_operator(&sigma(a), k, n);
            let comm = op.commutator(rho);
            let mut col = Vec::with_capacity(dim * dim);
            for r in 0..dim {
                for c in 0..dim {
                    col.push(comm[(r, c)]);
                }
            }
            columns.push(col);
        }
    }
    let m = realify_columns(&columns);
    Ok(StabilizerBasis {
        n,
        coords: real_nullspace(&m, rel_tol),
    })
}

/// Dimension of the block-collective algebra of a partition: three rotation
/// axes per block.
pub fn delta_d_dimension(d: &Partition) -> usize {
    3 * d.num_blocks()
}

/// Greatest lower bound, in the coarsening order, of the diagrams appearing
/// with nonzero coefficient.
pub fn glb_prediction(terms: &[(Partition, f64)]) -> Result<Partition> {
    let active: Vec<Partition> = terms
        .iter()
        .filter(|(_, c)| *c != 0.0)
        .map(|(d, _)| d.clone())
        .collect();
    if active.is_empty() {
        return Err(Error::InvalidArgument("every coefficient is zero".into()));
    }
    common_coarsening(&active)
}

/// Normalized mixture sum_D a_D rho_D; left unnormalized when the
/// coefficients sum to zero.
pub fn diagram_mixture(terms: &[(Partition, f64)]) -> Result<CMatrix> {
    let first = terms
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty diagram mixture".into()))?;
    let n = first.0.n();
    if let Some((bad, _)) = terms.iter().find(|(d, _)| d.n() != n) {
        return Err(Error::DimMismatch(format!(
            "diagrams on different qubit counts: n={n} vs n={}",
            bad.n()
        )));
    }
    let dim = 1usize << n;
    let mut acc = CMatrix::zeros(dim, dim);
    let mut total = 0.0f64;
    for (d, coeff) in terms {
        if *coeff == 0.0 {
            continue;
        }
        acc = &acc + &diagram_density(d).scale(Complex64::new(*coeff, 0.0));
        total += coeff;
    }
    if total.abs() > 1e-12 {
        acc = acc.scale(Complex64::new(1.0 / total, 0.0));
    }
    Ok(acc)
}

/// || sum_{k in block} [sigma_axis^(k), rho] ||_F, the containment residual
/// of one predicted stabilizer generator.
pub fn block_generator_residual(rho: &CMatrix, block: &[usize], axis: u8) -> f64 {
    let n = rho.rows().trailing_zeros() as usize;
    let dim = rho.rows();
    let mut acc = CMatrix::zeros(dim, dim);
    for &q in block {
        let op = single_qubit_operator(&sigma(axis), q - 1, n);
        acc = &acc + &op.commutator(rho);
    }
    acc.frobenius_norm()
}

/// Comparison of the computed stabilizer dimension against the lattice
/// prediction 3 * #blocks(glb), plus the proved containment direction.
#[derive(Clone, Debug, Serialize)]
pub struct StabilizerReport {
    pub n: usize,
    pub num_terms: usize,
    pub glb: String,
    pub computed_dim: usize,
    pub predicted_dim: usize,
    pub max_containment_residual: f64,
    pub containment_ok: bool,
    #[serde(rename = "match")]
    pub dims_match: bool,
}

pub fn stabilizer_conjecture_test(
    terms: &[(Partition, f64)],
    rel_tol: f64,
    residual_tol: f64,
) -> Result<StabilizerReport> {
    let glb = glb_prediction(terms)?;
    let rho = diagram_mixture(terms)?;
    let basis = stabilizer_algebra(&rho, rel_tol)?;
    let mut max_res = 0.0f64;
    for block in glb.blocks() {
        for axis in 1..=3u8 {
            max_res = max_res.max(block_generator_residual(&rho, block, axis));
        }
    }
    let scale = rho.frobenius_norm().max(1.0);
    let predicted_dim = delta_d_dimension(&glb);
    Ok(StabilizerReport {
        n: glb.n(),
        num_terms: terms.iter().filter(|(_, c)| *c != 0.0).count(),
        glb: glb.to_string(),
        computed_dim: basis.dimension(),
        predicted_dim,
        max_containment_residual: max_res,
        containment_ok: max_res <= residual_tol * scale,
        dims_match: basis.dimension() == predicted_dim,
    })
}

/// True when every bipartition of the qubits is crossed by a chord of some
/// matching with nonzero coefficient.
pub fn bipartition_criterion(terms: &[(Matching, f64)]) -> Result<bool> {
    let first = terms
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty matching list".into()))?;
    let n = first.0.n();
    if let Some((bad, _)) = terms.iter().find(|(m, _)| m.n() != n) {
        return Err(Error::DimMismatch(format!(
            "matchings on different qubit counts: n={n} vs n={}",
            bad.n()
        )));
    }
    let chords: Vec<(usize, usize)> = terms
        .iter()
        .filter(|(_, c)| *c != 0.0)
        .flat_map(|(m, _)| m.pairs().collect::<Vec<_>>())
        .collect();
    if chords.is_empty() {
        return Err(Error::InvalidArgument("every coefficient is zero".into()));
    }
    let full = (1usize << n) - 1;
    // subsets containing qubit 1 (bit n-1), proper and nonempty
    let anchor = 1usize << (n - 1);
    for mask in 0..=full {
        if mask & anchor == 0 || mask == full {
            continue;
        }
        let crossed = chords.iter().any(|&(a, b)| {
            let ina = (mask >> (n - a)) & 1;
            let inb = (mask >> (n - b)) & 1;
            ina != inb
        });
        if !crossed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Normalized combination sum_M c_M |chord(M)>; errors when it vanishes.
pub fn chord_mixture(terms: &[(Matching, f64)]) -> Result<PureState> {
    let first = terms
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty matching list".into()))?;
    let n = first.0.n();
    if let Some((bad, _)) = terms.iter().find(|(m, _)| m.n() != n) {
        return Err(Error::DimMismatch(format!(
            "matchings on different qubit counts: n={n} vs n={}",
            bad.n()
        )));
    }
    let dim = 1usize << n;
    let mut amps = vec![Complex64::ZERO; dim];
    for (m, coeff) in terms {
        if *coeff == 0.0 {
            continue;
        }
        for (i, &a) in chord_state(m).amps().iter().enumerate() {
            amps[i] += a * coeff;
        }
    }
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if norm < 1e-12 {
        return Err(Error::InvalidArgument("chord combination vanishes".into()));
    }
    let inv = Complex64::new(1.0 / norm, 0.0);
    PureState::new(n, amps.into_iter().map(|a| a * inv).collect())
}

/// Pure-state stabilizer: solutions (x, t) of
/// sum_k A_k^(k) |psi> = t |psi|, A_k = sum_a x_{k,a} sigma_a.
/// The diagonal tuples (A, ..., A) contribute three dimensions for every
/// collective-rotation-invariant state, so 3 is the floor.
#[derive(Clone, Debug, Serialize)]
pub struct PureStabilizerReport {
    pub n: usize,
    pub computed_dim: usize,
    #[serde(rename = "criterion")]
    pub criterion_holds: bool,
    pub consistent: bool,
}

pub fn pure_stabilizer_cross_check(
    terms: &[(Matching, f64)],
    rel_tol: f64,
) -> Result<PureStabilizerReport> {
    let psi = chord_mixture(terms)?;
    let n = psi.n();
    let mut columns = Vec::with_capacity(3 * n + 1);
    for k in 0..n {
        for a in 1..=3u8 {
            let op = single_qubit_operator(&sigma(a), k, n);
            columns.push(op.apply(psi.amps()));
        }
    }
    columns.push(psi.amps().iter().map(|z| -z).collect());
    let m = realify_columns(&columns);
    let computed_dim = real_nullspace(&m, rel_tol).len();
    let criterion_holds = bipartition_criterion(terms)?;
    Ok(PureStabilizerReport {
        n,
        computed_dim,
        criterion_holds,
        consistent: criterion_holds == (computed_dim == 3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DEFAULT_REL_TOL;
    use crate::states::singlet;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn singlet_stabilizer_is_diagonal() {
        let basis = stabilizer_algebra(&singlet().projector(), DEFAULT_REL_TOL).unwrap();
        assert_eq!(basis.dimension(), 3);
        // each element acts identically on both qubits
        for e in 0..3 {
            let ops = basis.local_operators(e);
            assert!((&ops[0] - &ops[1]).frobenius_norm() < 1e-9);
        }
    }

    #[test]
    fn maximally_mixed_state_has_full_stabilizer() {
        let rho = CMatrix::identity(8).scale(Complex64::new(1.0 / 8.0, 0.0));
        let basis = stabilizer_algebra(&rho, DEFAULT_REL_TOL).unwrap();
        assert_eq!(basis.dimension(), 9);
    }

    #[test]
    fn product_of_singlets_stabilizer() {
        let rho = diagram_mixture(&[(p("1 2 | 3 4"), 1.0)]).unwrap();
        let basis = stabilizer_algebra(&rho, DEFAULT_REL_TOL).unwrap();
        assert_eq!(basis.dimension(), delta_d_dimension(&p("1 2 | 3 4")));
    }

    #[test]
    fn glb_ignores_zero_coefficients() {
        let glb = glb_prediction(&[(p("1 2 | 3 4"), 1.0), (p("1 | 2 3 | 4"), 0.0)]).unwrap();
        assert_eq!(glb.to_string(), "1 2 | 3 4");
        let glb2 = glb_prediction(&[(p("1 2 | 3 4"), 1.0), (p("1 | 2 3 | 4"), 0.5)]).unwrap();
        assert_eq!(glb2.to_string(), "1 2 3 4");
        assert!(glb_prediction(&[(p("1 2"), 0.0)]).is_err());
    }

    #[test]
    fn conjecture_test_on_a_pair() {
        let report = stabilizer_conjecture_test(
            &[(p("1 2 | 3 4"), 1.0), (p("1 | 2 3 | 4"), 1.0)],
            DEFAULT_REL_TOL,
            1e-10,
        )
        .unwrap();
        assert_eq!(report.glb, "1 2 3 4");
        assert_eq!(report.predicted_dim, 3);
        assert!(report.containment_ok);
        assert!(report.computed_dim >= 3);
    }

    #[test]
    fn bipartition_criterion_examples() {
        assert!(!bipartition_criterion(&[(m("1 2 | 3 4"), 1.0)]).unwrap());
        assert!(bipartition_criterion(&[(m("1 2 | 3 4"), 1.0), (m("1 4 | 2 3"), 2.0)]).unwrap());
        // zero coefficient deactivates a matching
        assert!(!bipartition_criterion(&[(m("1 2 | 3 4"), 1.0), (m("1 4 | 2 3"), 0.0)]).unwrap());
        assert!(bipartition_criterion(&[(m("1 2"), 1.0)]).unwrap());
        assert!(bipartition_criterion(&[]).is_err());
    }

    #[test]
    fn pure_cross_check_single_matching() {
        let report =
            pure_stabilizer_cross_check(&[(m("1 2 | 3 4"), 1.0)], DEFAULT_REL_TOL).unwrap();
        assert_eq!(report.computed_dim, 6);
        assert!(!report.criterion_holds);
        assert!(report.consistent);
    }

    #[test]
    fn pure_cross_check_generic_combination() {
        let report = pure_stabilizer_cross_check(
            &[(m("1 2 | 3 4"), 1.0), (m("1 4 | 2 3"), 2.0)],
            DEFAULT_REL_TOL,
        )
        .unwrap();
        assert_eq!(report.computed_dim, 3);
        assert!(report.criterion_holds);
        assert!(report.consistent);
    }

    #[test]
    fn chord_mixture_detects_vanishing() {
        // 1 3 | 2 4 chord state = (1 2 | 3 4) - (1 4 | 2 3) combinations can cancel
        let psi = chord_mixture(&[(m("1 2 | 3 4"), 1.0), (m("1 2 | 3 4"), -1.0)]);
        assert!(psi.is_err());
        let ok = chord_mixture(&[(m("1 2 | 3 4"), 0.3)]).unwrap();
        let norm: f64 = ok.amps().iter().map(|a| a.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }
}
