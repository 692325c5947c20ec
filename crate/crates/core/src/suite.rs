//! The eleven-point verification suite: known dimension counts, worked
//! examples, the two conjecture experiments, and oracle cross-checks. Shared
//! by the `acceptance` test target and the CLI `suite` subcommand.

use num_complex::Complex64;
use serde::Serialize;

use crate::analysis::{
    commutant_dimension, conjecture_test, gram_rank_test, monte_carlo_twirl, pure_werner_dimension,
    pure_werner_residual, symmetric_werner_test, twirl_project,
};
use crate::diagrams::{
    catalan, enumerate_all_matchings, enumerate_all_partitions, enumerate_noncrossing_matchings,
    enumerate_noncrossing_partitions,
};
use crate::linalg::{hermitian_eigenvalues, CMatrix};
use crate::oracles::{bipartition_criterion_bruteforce, is_noncrossing_bruteforce};
use crate::pauli::{reconstruct, PauliVector};
use crate::stabilizer::{
    bipartition_criterion, block_generator_residual, delta_d_dimension,
    pure_stabilizer_cross_check, stabilizer_algebra, stabilizer_conjecture_test,
};
use crate::states::{chord_state, cn_density, cyclic_state, diagram_density, singlet, BitString};

pub const NUM_CRITERIA: usize = 11;

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub rel_tol: f64,
    pub residual_tol: f64,
    pub mc_samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            rel_tol: 1e-8,
            residual_tol: 1e-10,
            mc_samples: 100_000,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

fn outcome(
    id: usize,
    name: &'static str,
    failures: Vec<String>,
    summary: String,
) -> CriterionOutcome {
    if failures.is_empty() {
        CriterionOutcome {
            id,
            name,
            passed: true,
            details: summary,
        }
    } else {
        CriterionOutcome {
            id,
            name,
            passed: false,
            details: failures.join("; "),
        }
    }
}

fn c1_commutant_dimensions(cfg: &SuiteConfig) -> CriterionOutcome {
    let _ = cfg;
    let expected = [1usize, 2, 5, 14, 42];
    let mut failures = Vec::new();
    let mut dims = Vec::new();
    for n in 1..=5usize {
        let d = commutant_dimension(n);
        dims.push(d);
        if d != expected[n - 1] {
            failures.push(format!(
                "n={n}: commutant dim {d}, expected {}",
                expected[n - 1]
            ));
        }
    }
    outcome(
        1,
        "commutant dimensions",
        failures,
        format!("dims {dims:?} for n=1..5"),
    )
}

fn c2_pure_dimensions(cfg: &SuiteConfig) -> CriterionOutcome {
    let _ = cfg;
    let mut failures = Vec::new();
    let mut dims = Vec::new();
    for n in 1..=8usize {
        let d = pure_werner_dimension(n);
        dims.push(d);
        let expected = if n % 2 == 1 {
            0
        } else {
            catalan(n as u32 / 2) as usize
        };
        if d != expected {
            failures.push(format!("n={n}: pure dim {d}, expected {expected}"));
        }
    }
    outcome(
        2,
        "pure state dimensions",
        failures,
        format!("dims {dims:?} for n=1..8"),
    )
}

fn c3_chord_basis(cfg: &SuiteConfig) -> CriterionOutcome {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for m in 1..=4u32 {
        let n = 2 * m as usize;
        let states: Vec<_> = match enumerate_noncrossing_matchings(n) {
            Ok(ms) => ms.iter().map(chord_state).collect(),
            Err(e) => {
                failures.push(format!("2m={n}: {e}"));
                continue;
            }
        };
        let mut worst = 0.0f64;
        for s in &states {
            worst = worst.max(pure_werner_residual(s));
        }
        if worst >= cfg.residual_tol {
            failures.push(format!("2m={n}: chord residual {worst:.3e}"));
        }
        let columns: Vec<CMatrix> = states.iter().map(|s| s.column()).collect();
        match gram_rank_test(&columns, cfg.rel_tol) {
            Ok((_, rank)) => {
                let expect = catalan(m) as usize;
                summary.push(format!("2m={n}: rank {rank}/{}", states.len()));
                if rank != expect {
                    failures.push(format!("2m={n}: Gram rank {rank}, expected {expect}"));
                }
            }
            Err(e) => failures.push(format!("2m={n}: {e}")),
        }
    }
    outcome(3, "chord states form a basis", failures, summary.join(", "))
}

fn c4_cyclic_mixture_family(cfg: &SuiteConfig) -> CriterionOutcome {
    let mut failures = Vec::new();
    let gap = (&cn_density(2) - &singlet().projector()).frobenius_norm();
    if gap > 1e-14 {
        failures.push(format!("cn_density(2) vs singlet projector: {gap:.3e}"));
    }
    let mut worst_res = 0.0f64;
    for n in 1..=5usize {
        let rho = cn_density(n);
        let tr = rho.trace();
        if (tr.re - 1.0).abs() > 1e-12 || tr.im.abs() > 1e-12 {
            failures.push(format!("n={n}: trace {tr}"));
        }
        match hermitian_eigenvalues(&rho, 1e-12) {
            Ok(vals) => {
                let min = vals.iter().cloned().fold(f64::INFINITY, f64::min);
                if min < -1e-10 {
                    failures.push(format!("n={n}: min eigenvalue {min:.3e}"));
                }
            }
            Err(e) => failures.push(format!("n={n}: eig failed: {e}")),
        }
        match crate::analysis::werner_residual(&rho) {
            Ok(r) => {
                worst_res = worst_res.max(r);
                if r >= cfg.residual_tol {
                    failures.push(format!("n={n}: commutator residual {r:.3e}"));
                }
            }
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    outcome(
        4,
        "cyclic mixture family",
        failures,
        format!("singlet gap {gap:.1e}, max residual {worst_res:.1e} for n=1..5"),
    )
}

fn c5_cyclic_worked_example(cfg: &SuiteConfig) -> CriterionOutcome {
    let _ = cfg;
    let mut failures = Vec::new();
    let input: BitString = "001".parse().expect("literal");
    match cyclic_state(&input) {
        Some(psi) => {
            let r3 = 1.0 / 3f64.sqrt();
            let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
            let mut expect = vec![Complex64::ZERO; 8];
            expect[1] = Complex64::new(r3, 0.0);
            expect[2] = w * r3;
            expect[4] = w * w * r3;
            for (i, (&got, &want)) in psi.amps().iter().zip(&expect).enumerate() {
                if (got - want).norm() > 1e-12 {
                    failures.push(format!("amplitude {i}: {got} vs {want}"));
                }
            }
        }
        None => failures.push("cyclic_state(001) returned zero".into()),
    }
    for s in ["00", "11"] {
        let bits: BitString = s.parse().expect("literal");
        if cyclic_state(&bits).is_some() {
            failures.push(format!("cyclic_state({s}) should vanish"));
        }
    }
    outcome(
        5,
        "cyclic state worked example",
        failures,
        "C(001) amplitudes match, C(00) and C(11) vanish".into(),
    )
}

fn c6_diagram_conjecture(cfg: &SuiteConfig) -> CriterionOutcome {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for n in 2..=5usize {
        match conjecture_test(n, cfg.rel_tol, cfg.residual_tol) {
            Ok(report) => {
                let cat = report.catalan as usize;
                if report.num_diagrams != cat || report.commutant_dim != cat {
                    failures.push(format!(
                        "n={n}: {} diagrams, commutant dim {}, Catalan {cat}",
                        report.num_diagrams, report.commutant_dim
                    ));
                }
                summary.push(format!(
                    "n={n}: rank {}/{} ({})",
                    report.gram_rank, report.num_diagrams, report.verdict
                ));
            }
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    outcome(6, "diagram basis conjecture", failures, summary.join(", "))
}

fn c7_symmetric_radial(cfg: &SuiteConfig) -> CriterionOutcome {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for n in 1..=4usize {
        match symmetric_werner_test(n, cfg.rel_tol, cfg.residual_tol) {
            Ok(report) => {
                summary.push(format!("n={n}: span {}", report.span_dimension));
                if n >= 2 && !report.consistent {
                    failures.push(format!(
                        "n={n}: span dim {}, expected {}",
                        report.span_dimension, report.expected_dimension
                    ));
                }
            }
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    outcome(
        7,
        "symmetric and radial family",
        failures,
        summary.join(", "),
    )
}

fn c8_stabilizer_baseline(cfg: &SuiteConfig) -> CriterionOutcome {
    let mut failures = Vec::new();
    let mut cases = 0usize;
    for n in 1..=4usize {
        for d in enumerate_noncrossing_partitions(n) {
            cases += 1;
            let rho = diagram_density(&d);
            match stabilizer_algebra(&rho, cfg.rel_tol) {
                Ok(basis) => {
                    let expect = delta_d_dimension(&d);
                    if basis.dimension() != expect {
                        failures.push(format!(
                            "{d}: stabilizer dim {}, expected {expect}",
                            basis.dimension()
                        ));
                    }
                }
                Err(e) => failures.push(format!("{d}: {e}")),
            }
            let mut worst = 0.0f64;
            for block in d.blocks() {
                for axis in 1..=3u8 {
                    worst = worst.max(block_generator_residual(&rho, block, axis));
                }
            }
            if worst >= cfg.residual_tol {
                failures.push(format!("{d}: containment residual {worst:.3e}"));
            }
        }
    }
    outcome(
        8,
        "single-diagram stabilizers",
        failures,
        format!("{cases} diagram states over n=1..4"),
    )
}

fn c9_glb_experiment(cfg: &SuiteConfig) -> CriterionOutcome {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for n in [3usize, 4] {
        let parts = enumerate_noncrossing_partitions(n);
        let mut pairs = 0usize;
        let mut matches = 0usize;
        for i in 0..parts.len() {
            for j in (i + 1)..parts.len() {
                pairs += 1;
                let terms = [(parts[i].clone(), 1.0), (parts[j].clone(), 1.0)];
                match stabilizer_conjecture_test(&terms, cfg.rel_tol, cfg.residual_tol) {
                    Ok(report) => {
                        if !report.containment_ok || report.computed_dim < report.predicted_dim {
                            failures.push(format!(
                                "{} + {}: containment violated (residual {:.3e}, dim {} < {})",
                                parts[i],
                                parts[j],
                                report.max_containment_residual,
                                report.computed_dim,
                                report.predicted_dim
                            ));
                        }
                        if report.dims_match {
                            matches += 1;
                        }
                    }
                    Err(e) => failures.push(format!("{} + {}: {e}", parts[i], parts[j])),
                }
            }
        }
        summary.push(format!(
            "n={n}: {matches}/{pairs} pairs match the glb prediction"
        ));
    }
    outcome(9, "glb stabilizer experiment", failures, summary.join(", "))
}

fn c10_pure_bipartition(cfg: &SuiteConfig) -> CriterionOutcome {
    let mut failures = Vec::new();
    let singles = match enumerate_all_matchings(4) {
        Ok(ms) => ms,
        Err(e) => {
            return outcome(
                10,
                "pure bipartition criterion",
                vec![e.to_string()],
                String::new(),
            )
        }
    };
    for m in &singles {
        match pure_stabilizer_cross_check(&[(m.clone(), 1.0)], cfg.rel_tol) {
            Ok(report) => {
                if report.computed_dim != 6 {
                    failures.push(format!("{m}: dim {}, expected 6", report.computed_dim));
                }
                if report.criterion_holds {
                    failures.push(format!("{m}: criterion should be false"));
                }
            }
            Err(e) => failures.push(format!("{m}: {e}")),
        }
    }
    let combo = [
        ("1 2 | 3 4".parse().expect("literal"), 1.0),
        ("1 4 | 2 3".parse().expect("literal"), 2.0),
    ];
    match pure_stabilizer_cross_check(&combo, cfg.rel_tol) {
        Ok(report) => {
            if report.computed_dim != 3 {
                failures.push(format!(
                    "combination dim {}, expected 3",
                    report.computed_dim
                ));
            }
            if !report.criterion_holds {
                failures.push("combination criterion should be true".into());
            }
        }
        Err(e) => failures.push(format!("combination: {e}")),
    }
    outcome(
        10,
        "pure bipartition criterion",
        failures,
        format!("{} singles at dim 6, combination at dim 3", singles.len()),
    )
}

fn mc_twirl_inputs() -> Vec<CMatrix> {
    let proj = |n: usize, idx: usize| {
        CMatrix::from_fn(1 << n, 1 << n, |i, j| {
            if i == idx && j == idx {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        })
    };
    let mut fixed = PauliVector::zeros(3);
    fixed.coeffs[0] = 0.125; // identity weight
    fixed.coeffs[21] = 0.05; // a few fixed off-diagonal words
    fixed.coeffs[38] = -0.03;
    fixed.coeffs[7] = 0.02;
    vec![
        proj(2, 0),
        proj(2, 1),
        singlet().projector(),
        proj(3, 0),
        reconstruct(&fixed),
    ]
}

fn c11_oracle_cross_checks(cfg: &SuiteConfig) -> CriterionOutcome {
    let mut failures = Vec::new();
    let mut worst_gap = 0.0f64;
    for (i, rho) in mc_twirl_inputs().iter().enumerate() {
        let exact = match twirl_project(rho) {
            Ok(m) => m,
            Err(e) => {
                failures.push(format!("input {i}: {e}"));
                continue;
            }
        };
        match monte_carlo_twirl(rho, cfg.mc_samples, cfg.seed + i as u64) {
            Ok(approx) => {
                let gap = (&approx - &exact).frobenius_norm();
                worst_gap = worst_gap.max(gap);
                if gap > 1e-2 {
                    failures.push(format!("input {i}: Monte Carlo gap {gap:.3e}"));
                }
            }
            Err(e) => failures.push(format!("input {i}: {e}")),
        }
    }

    let mut partitions_checked = 0usize;
    for n in 1..=6usize {
        for d in enumerate_all_partitions(n) {
            partitions_checked += 1;
            if d.is_noncrossing() != is_noncrossing_bruteforce(&d) {
                failures.push(format!("crossing detectors disagree on {d}"));
            }
        }
    }

    let mut matchings_checked = 0usize;
    for n in [2usize, 4, 6] {
        let all = match enumerate_all_matchings(n) {
            Ok(ms) => ms,
            Err(e) => {
                failures.push(e.to_string());
                continue;
            }
        };
        for a in &all {
            let single = [(a.clone(), 1.0)];
            matchings_checked += 1;
            match (
                bipartition_criterion(&single),
                bipartition_criterion_bruteforce(&single),
            ) {
                (Ok(x), Ok(y)) if x == y => {}
                (x, y) => failures.push(format!("bipartition mismatch on {a}: {x:?} vs {y:?}")),
            }
            for b in &all {
                let pair = [(a.clone(), 1.0), (b.clone(), -0.5)];
                matchings_checked += 1;
                match (
                    bipartition_criterion(&pair),
                    bipartition_criterion_bruteforce(&pair),
                ) {
                    (Ok(x), Ok(y)) if x == y => {}
                    (x, y) => {
                        failures.push(format!("bipartition mismatch on {a} + {b}: {x:?} vs {y:?}"))
                    }
                }
            }
        }
    }

    outcome(
        11,
        "oracle cross-checks",
        failures,
        format!(
            "Monte Carlo gap {worst_gap:.2e} over 5 inputs, {partitions_checked} partitions, {matchings_checked} matching sets"
        ),
    )
}

pub fn run_criterion(id: usize, cfg: &SuiteConfig) -> CriterionOutcome {
    match id {
        1 => c1_commutant_dimensions(cfg),
        2 => c2_pure_dimensions(cfg),
        3 => c3_chord_basis(cfg),
        4 => c4_cyclic_mixture_family(cfg),
        5 => c5_cyclic_worked_example(cfg),
        6 => c6_diagram_conjecture(cfg),
        7 => c7_symmetric_radial(cfg),
        8 => c8_stabilizer_baseline(cfg),
        9 => c9_glb_experiment(cfg),
        10 => c10_pure_bipartition(cfg),
        11 => c11_oracle_cross_checks(cfg),
        _ => panic!("criterion id must be 1..={NUM_CRITERIA}"),
    }
}

pub fn run_all(cfg: &SuiteConfig) -> Vec<CriterionOutcome> {
    (1..=NUM_CRITERIA)
        .map(|id| run_criterion(id, cfg))
        .collect()
}
