//! Randomized structural invariants over small sizes.

use num_complex::Complex64;
use proptest::prelude::*;

use werner_core::diagrams::{enumerate_noncrossing_partitions, Partition};
use werner_core::linalg::{real_nullspace, CMatrix, RMatrix};
use werner_core::pauli::{expand, reconstruct, PauliVector};
use werner_core::states::{all_permutations, permute_qubits};
use werner_core::{glue_matching, gram_rank_test, Matching};

fn complex_strategy() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = CMatrix> {
    proptest::collection::vec(complex_strategy(), rows * cols)
        .prop_map(move |data| CMatrix::from_fn(rows, cols, |i, j| data[i * cols + j]))
}

fn hermitian_strategy(n: usize) -> impl Strategy<Value = CMatrix> {
    matrix_strategy(n, n).prop_map(|m| m.hermitian_part())
}

fn partition_strategy(n: usize) -> impl Strategy<Value = Partition> {
    let parts = enumerate_noncrossing_partitions(n);
    let len = parts.len();
    (0..len).prop_map(move |i| parts[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_is_associative(a in matrix_strategy(2, 2), b in matrix_strategy(2, 3), c in matrix_strategy(3, 2)) {
        let left = a.kron(&b).kron(&c);
        let right = a.kron(&b.kron(&c));
        prop_assert!((&left - &right).frobenius_norm() < 1e-12);
    }

    #[test]
    fn dagger_reverses_products(a in matrix_strategy(3, 3), b in matrix_strategy(3, 3)) {
        let lhs = (&a * &b).dagger();
        let rhs = &b.dagger() * &a.dagger();
        prop_assert!((&lhs - &rhs).frobenius_norm() < 1e-12);
    }

    #[test]
    fn eigenvalue_sum_matches_trace(h in hermitian_strategy(5)) {
        let vals = werner_core::linalg::hermitian_eigenvalues(&h, 1e-9).unwrap();
        let sum: f64 = vals.iter().sum();
        prop_assert!((sum - h.trace().re).abs() < 1e-9 * (1.0 + h.frobenius_norm()));
    }

    #[test]
    fn expand_reconstruct_roundtrip(coeffs in proptest::collection::vec(-1.0f64..1.0, 16)) {
        let v = PauliVector::new(2, coeffs).unwrap();
        let rho = reconstruct(&v);
        let back = expand(&rho, 2).unwrap();
        for (a, b) in v.coeffs.iter().zip(&back.coeffs) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn nullity_plus_rank_is_width(entries in proptest::collection::vec(-1.0f64..1.0, 12), dup in 0usize..3) {
        // a 4x3 matrix with a duplicated column has nullity >= 1
        let mut m = RMatrix::zeros(4, 4);
        for i in 0..4 {
            for j in 0..3 {
                m[(i, j)] = entries[i * 3 + j];
            }
            m[(i, 3)] = entries[i * 3 + dup];
        }
        let null = real_nullspace(&m, 1e-8);
        prop_assert!(!null.is_empty());
        for v in &null {
            // each null vector really is annihilated
            for i in 0..4 {
                let dot: f64 = (0..4).map(|j| m[(i, j)] * v[j]).sum();
                prop_assert!(dot.abs() < 1e-8);
            }
        }
    }

    #[test]
    fn gram_rank_is_permutation_invariant(h1 in hermitian_strategy(4), h2 in hermitian_strategy(4), h3 in hermitian_strategy(4)) {
        let fwd = gram_rank_test(&[h1.clone(), h2.clone(), h3.clone()], 1e-8).unwrap().1;
        let rev = gram_rank_test(&[h3, h2, h1], 1e-8).unwrap().1;
        prop_assert_eq!(fwd, rev);
    }

    #[test]
    fn qubit_relabeling_preserves_invariance_residual(d in partition_strategy(3), perm_idx in 0usize..6) {
        let rho = werner_core::diagram_density(&d);
        let perm = all_permutations(3)[perm_idx].clone();
        let moved = permute_qubits(&rho, &perm);
        let r1 = werner_core::werner_residual(&rho).unwrap();
        let r2 = werner_core::werner_residual(&moved).unwrap();
        prop_assert!((r1 - r2).abs() < 1e-10);
    }

    #[test]
    fn glue_respects_ground_set(pairs_seed in 0usize..15) {
        // all matchings of 6 points, glued down to partitions of 3
        let all = werner_core::enumerate_all_matchings(6).unwrap();
        let m: &Matching = &all[pairs_seed % all.len()];
        let glued = glue_matching(m).unwrap();
        prop_assert_eq!(glued.n(), 3);
    }

    #[test]
    fn partition_text_roundtrip(d in partition_strategy(5)) {
        let back: Partition = d.to_string().parse().unwrap();
        prop_assert_eq!(back, d);
    }
}
