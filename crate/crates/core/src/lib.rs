//! Construction and numerical verification of multiqubit states invariant
//! under collective single-qubit rotations, together with the diagram
//! combinatorics (non-crossing matchings and partitions) that index them.
//!
//! The main entry points:
//! - [`states`]: singlet products over chord diagrams, cyclic superpositions,
//!   polygon-diagram mixtures, symmetric and radial elements;
//! - [`analysis`]: invariance residuals, commutant bases and dimensions,
//!   twirl projections, Gram-rank experiments for the basis conjecture;
//! - [`stabilizer`]: local-rotation stabilizer algebras and the lattice
//!   glb prediction;
//! - [`suite`]: the eleven-point verification suite.

pub mod analysis;
pub mod diagrams;
pub mod error;
pub mod linalg;
pub mod oracles;
pub mod pauli;
pub mod stabilizer;
pub mod states;
pub mod suite;

pub use analysis::{
    commutant_dimension, conjecture_test, gram_rank_test, is_werner, monte_carlo_twirl,
    pure_werner_dimension, pure_werner_residual, symmetric_werner_test, twirl_project,
    werner_residual, CommutantBasis, ConjectureReport, SymmetricReport, Verdict, WernerReport,
};
pub use diagrams::{
    catalan, common_coarsening, enumerate_all_matchings, enumerate_all_partitions,
    enumerate_noncrossing_matchings, enumerate_noncrossing_partitions, glue_matching, Matching,
    Partition,
};
pub use error::{Error, Result};
pub use linalg::{CMatrix, RMatrix};
pub use pauli::{expand, reconstruct, sigma, sigma_tensor, MultiIndex, PauliVector};
pub use stabilizer::{
    bipartition_criterion, delta_d_dimension, glb_prediction, pure_stabilizer_cross_check,
    stabilizer_algebra, stabilizer_conjecture_test, PureStabilizerReport, StabilizerBasis,
    StabilizerReport,
};
pub use states::{
    chord_state, cn_density, cyclic_state, diagram_density, radial_element, singlet, sym_element,
    BitString, PureState,
};
pub use suite::{run_all, run_criterion, CriterionOutcome, SuiteConfig, NUM_CRITERIA};
