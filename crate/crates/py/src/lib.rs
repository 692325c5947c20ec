//! Python bindings. Diagrams become small frozen classes, states and
//! density matrices cross the boundary as nested lists of complex numbers,
//! and the verification entry points return plain dicts.

use num_complex::Complex64;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use werner_core::diagrams::{
    common_coarsening, enumerate_noncrossing_matchings, enumerate_noncrossing_partitions,
    glue_matching, Matching, Partition,
};
use werner_core::linalg::CMatrix;
use werner_core::pauli::PauliVector;
use werner_core::states::BitString;

fn core_err(e: werner_core::Error) -> PyErr {
    use werner_core::Error as E;
    match e {
        E::Parse { .. } | E::InvalidArgument(_) | E::DimMismatch(_) => {
            PyValueError::new_err(e.to_string())
        }
        E::NotHermitian { .. } | E::NoConvergence { .. } | E::Numerical(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
    }
}

fn to_rows(m: &CMatrix) -> Vec<Vec<Complex64>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)]).collect())
        .collect()
}

fn from_rows(rows: Vec<Vec<Complex64>>) -> PyResult<CMatrix> {
    let r = rows.len();
    if r == 0 {
        return Err(PyValueError::new_err("matrix must be nonempty"));
    }
    let c = rows[0].len();
    if rows.iter().any(|row| row.len() != c) {
        return Err(PyValueError::new_err("matrix rows have unequal lengths"));
    }
    let mut m = CMatrix::zeros(r, c);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, z) in row.into_iter().enumerate() {
            m[(i, j)] = z;
        }
    }
    Ok(m)
}

fn amps_list(state: &werner_core::states::PureState) -> Vec<Complex64> {
    state.amps().to_vec()
}

/// A set partition of {1..n}; text form "1 2 4 | 3 | 5".
#[pyclass(frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Diagram {
    inner: Partition,
}

#[pymethods]
impl Diagram {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse()
            .map(|inner| Diagram { inner })
            .map_err(core_err)
    }

    #[staticmethod]
    fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> PyResult<Self> {
        Partition::new(n, blocks)
            .map(|inner| Diagram { inner })
            .map_err(core_err)
    }

    #[staticmethod]
    fn all_noncrossing(n: usize) -> Vec<Diagram> {
        enumerate_noncrossing_partitions(n)
            .into_iter()
            .map(|inner| Diagram { inner })
            .collect()
    }

    /// Finest diagram coarser than every input: the meet when diagrams are
    /// ordered by coarsening, which sets the predicted stabilizer.
    #[staticmethod]
    fn glb(diagrams: Vec<Diagram>) -> PyResult<Diagram> {
        let parts: Vec<Partition> = diagrams.into_iter().map(|d| d.inner).collect();
        common_coarsening(&parts)
            .map(|inner| Diagram { inner })
            .map_err(core_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn blocks(&self) -> Vec<Vec<usize>> {
        self.inner.blocks().to_vec()
    }

    #[getter]
    fn noncrossing(&self) -> bool {
        self.inner.is_noncrossing()
    }

    fn refines(&self, other: &Diagram) -> bool {
        self.inner.refines(&other.inner)
    }

    /// Density matrix of the polygon diagram state: cyclic mixtures on each
    /// block, tensored together.
    fn density(&self) -> Vec<Vec<Complex64>> {
        to_rows(&werner_core::states::diagram_density(&self.inner))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Diagram(\"{}\")", self.inner)
    }
}

/// A perfect matching of {1..n}; text form "1 4 | 2 3".
#[pyclass(frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct ChordDiagram {
    inner: Matching,
}

#[pymethods]
impl ChordDiagram {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let p: Partition = text.parse().map_err(core_err)?;
        Matching::new(p)
            .map(|inner| ChordDiagram { inner })
            .map_err(core_err)
    }

    #[staticmethod]
    fn all_noncrossing(n: usize) -> PyResult<Vec<ChordDiagram>> {
        Ok(enumerate_noncrossing_matchings(n)
            .map_err(core_err)?
            .into_iter()
            .map(|inner| ChordDiagram { inner })
            .collect())
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn pairs(&self) -> Vec<(usize, usize)> {
        self.inner.pairs().collect()
    }

    #[getter]
    fn noncrossing(&self) -> bool {
        self.inner.is_noncrossing()
    }

    /// Amplitudes of the product of singlets over the chords.
    fn amps(&self) -> Vec<Complex64> {
        amps_list(&werner_core::states::chord_state(&self.inner))
    }

    /// The polygon diagram obtained by merging each chord's endpoints into
    /// consecutive-pair blocks.
    fn glue(&self) -> PyResult<Diagram> {
        glue_matching(&self.inner)
            .map(|inner| Diagram { inner })
            .map_err(core_err)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ChordDiagram(\"{}\")", self.inner)
    }
}

#[derive(FromPyObject)]
enum DiagramArg {
    Object(Diagram),
    Text(String),
}

impl DiagramArg {
    fn partition(self) -> PyResult<Partition> {
        match self {
            DiagramArg::Object(d) => Ok(d.inner),
            DiagramArg::Text(s) => s.parse().map_err(core_err),
        }
    }
}

#[derive(FromPyObject)]
enum ChordArg {
    Object(ChordDiagram),
    Text(String),
}

impl ChordArg {
    fn matching(self) -> PyResult<Matching> {
        match self {
            ChordArg::Object(d) => Ok(d.inner),
            ChordArg::Text(s) => {
                let p: Partition = s.parse().map_err(core_err)?;
                Matching::new(p).map_err(core_err)
            }
        }
    }
}

#[pyfunction]
fn catalan(m: u32) -> u64 {
    werner_core::diagrams::catalan(m)
}

#[pyfunction]
fn singlet() -> Vec<Complex64> {
    amps_list(&werner_core::states::singlet())
}

/// Cyclic superposition of the shifts of a bit string, or None when the
/// shift orbit degenerates and the superposition vanishes.
#[pyfunction]
fn cyclic(bits: &str) -> PyResult<Option<Vec<Complex64>>> {
    let b: BitString = bits.parse().map_err(core_err)?;
    Ok(werner_core::states::cyclic_state(&b).map(|s| amps_list(&s)))
}

/// Uniform mixture of the projectors onto all nonzero cyclic states.
#[pyfunction]
fn cn_density(n: usize) -> PyResult<Vec<Vec<Complex64>>> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be at least 1"));
    }
    Ok(to_rows(&werner_core::states::cn_density(n)))
}

#[pyfunction]
fn sym_element(n1: usize, n2: usize, n3: usize, n: usize) -> PyResult<Vec<Vec<Complex64>>> {
    werner_core::states::sym_element(n1, n2, n3, n)
        .map(|m| to_rows(&m))
        .map_err(core_err)
}

#[pyfunction]
fn radial_element(m: usize, n: usize) -> PyResult<Vec<Vec<Complex64>>> {
    werner_core::states::radial_element(m, n)
        .map(|m| to_rows(&m))
        .map_err(core_err)
}

/// Coefficients over the n-qubit Pauli basis, base-4 lexicographic order.
#[pyfunction]
fn pauli_expand(rho: Vec<Vec<Complex64>>) -> PyResult<Vec<f64>> {
    let m = from_rows(rho)?;
    let dim = m.rows();
    if !dim.is_power_of_two() || m.cols() != dim {
        return Err(PyValueError::new_err(format!(
            "expected a square matrix of size 2^n, got {}x{}",
            dim,
            m.cols()
        )));
    }
    let n = dim.trailing_zeros() as usize;
    werner_core::pauli::expand(&m, n)
        .map(|v| v.coeffs)
        .map_err(core_err)
}

#[pyfunction]
fn pauli_reconstruct(coeffs: Vec<f64>) -> PyResult<Vec<Vec<Complex64>>> {
    let len = coeffs.len();
    let mut n = 0usize;
    while 1usize << (2 * n) < len {
        n += 1;
    }
    if 1usize << (2 * n) != len {
        return Err(PyValueError::new_err(format!(
            "coefficient list length {len} is not a power of four"
        )));
    }
    let v = PauliVector::new(n, coeffs).map_err(core_err)?;
    Ok(to_rows(&werner_core::pauli::reconstruct(&v)))
}

#[pyfunction]
fn commutant_dimension(n: usize) -> PyResult<usize> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be at least 1"));
    }
    Ok(werner_core::commutant_dimension(n))
}

#[pyfunction]
fn pure_werner_dimension(n: usize) -> PyResult<usize> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be at least 1"));
    }
    Ok(werner_core::pure_werner_dimension(n))
}

/// Collective-rotation invariance report for a density matrix.
#[pyfunction]
#[pyo3(signature = (rho, tol=1e-10, samples=100, seed=42))]
fn is_werner<'py>(
    py: Python<'py>,
    rho: Vec<Vec<Complex64>>,
    tol: f64,
    samples: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let m = from_rows(rho)?;
    let r = werner_core::is_werner(&m, tol, samples, seed).map_err(core_err)?;
    let d = PyDict::new(py);
    d.set_item("n", r.n)?;
    d.set_item("residual", r.residual)?;
    d.set_item("random_conjugation_max", r.random_conjugation_max)?;
    d.set_item("random_checks", r.random_checks)?;
    d.set_item("seed", r.seed)?;
    d.set_item("tol", r.tol)?;
    d.set_item("is_werner", r.is_werner)?;
    Ok(d)
}

/// Exact projection onto the collective-rotation invariant subspace.
#[pyfunction]
fn twirl(rho: Vec<Vec<Complex64>>) -> PyResult<Vec<Vec<Complex64>>> {
    let m = from_rows(rho)?;
    werner_core::twirl_project(&m)
        .map(|t| to_rows(&t))
        .map_err(core_err)
}

#[pyfunction]
#[pyo3(signature = (rho, samples=100_000, seed=42))]
fn monte_carlo_twirl(
    rho: Vec<Vec<Complex64>>,
    samples: usize,
    seed: u64,
) -> PyResult<Vec<Vec<Complex64>>> {
    let m = from_rows(rho)?;
    werner_core::monte_carlo_twirl(&m, samples, seed)
        .map(|t| to_rows(&t))
        .map_err(core_err)
}

/// Diagram-basis experiment at n qubits: counts, Gram rank, verdict.
#[pyfunction]
#[pyo3(signature = (n, tol=1e-8, residual_tol=1e-10))]
fn conjecture<'py>(
    py: Python<'py>,
    n: usize,
    tol: f64,
    residual_tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let r = werner_core::conjecture_test(n, tol, residual_tol).map_err(core_err)?;
    let d = PyDict::new(py);
    d.set_item("n", r.n)?;
    d.set_item("num_diagrams", r.num_diagrams)?;
    d.set_item("gram_rank", r.gram_rank)?;
    d.set_item("catalan", r.catalan)?;
    d.set_item("commutant_dim", r.commutant_dim)?;
    d.set_item("max_werner_residual", r.max_werner_residual)?;
    d.set_item("max_span_residual", r.max_span_residual)?;
    d.set_item("verdict", r.verdict.to_string())?;
    Ok(d)
}

/// Radial elements against permutation symmetry and span dimension.
#[pyfunction]
#[pyo3(signature = (n, tol=1e-8, residual_tol=1e-10))]
fn symmetric_check<'py>(
    py: Python<'py>,
    n: usize,
    tol: f64,
    residual_tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let r = werner_core::symmetric_werner_test(n, tol, residual_tol).map_err(core_err)?;
    let d = PyDict::new(py);
    d.set_item("n", r.n)?;
    d.set_item("max_radial_residual", r.max_radial_residual)?;
    d.set_item("max_permutation_deviation", r.max_permutation_deviation)?;
    d.set_item("span_dimension", r.span_dimension)?;
    d.set_item("expected_dimension", r.expected_dimension)?;
    d.set_item("consistent", r.consistent)?;
    Ok(d)
}

/// Stabilizer algebra of a weighted diagram mixture against the lattice
/// prediction. Terms are (diagram, coefficient) pairs; diagrams may be
/// Diagram objects or their text form.
#[pyfunction]
#[pyo3(signature = (terms, tol=1e-8, residual_tol=1e-10))]
fn stabilizer<'py>(
    py: Python<'py>,
    terms: Vec<(DiagramArg, f64)>,
    tol: f64,
    residual_tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let parsed: Vec<(Partition, f64)> = terms
        .into_iter()
        .map(|(arg, c)| arg.partition().map(|p| (p, c)))
        .collect::<PyResult<_>>()?;
    let r = werner_core::stabilizer::stabilizer_conjecture_test(&parsed, tol, residual_tol)
        .map_err(core_err)?;
    let d = PyDict::new(py);
    d.set_item("n", r.n)?;
    d.set_item("num_terms", r.num_terms)?;
    d.set_item("glb", r.glb)?;
    d.set_item("computed_dim", r.computed_dim)?;
    d.set_item("predicted_dim", r.predicted_dim)?;
    d.set_item("max_containment_residual", r.max_containment_residual)?;
    d.set_item("containment_ok", r.containment_ok)?;
    d.set_item("match", r.dims_match)?;
    Ok(d)
}

/// Stabilizer of a pure chord combination against the bipartition criterion.
#[pyfunction]
#[pyo3(signature = (terms, tol=1e-8))]
fn pure_stabilizer<'py>(
    py: Python<'py>,
    terms: Vec<(ChordArg, f64)>,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let parsed: Vec<(Matching, f64)> = terms
        .into_iter()
        .map(|(arg, c)| arg.matching().map(|m| (m, c)))
        .collect::<PyResult<_>>()?;
    let r = werner_core::stabilizer::pure_stabilizer_cross_check(&parsed, tol).map_err(core_err)?;
    let d = PyDict::new(py);
    d.set_item("n", r.n)?;
    d.set_item("computed_dim", r.computed_dim)?;
    d.set_item("criterion", r.criterion_holds)?;
    d.set_item("consistent", r.consistent)?;
    Ok(d)
}

#[pymodule]
fn werner_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Diagram>()?;
    m.add_class::<ChordDiagram>()?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(singlet, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic, m)?)?;
    m.add_function(wrap_pyfunction!(cn_density, m)?)?;
    m.add_function(wrap_pyfunction!(sym_element, m)?)?;
    m.add_function(wrap_pyfunction!(radial_element, m)?)?;
    m.add_function(wrap_pyfunction!(pauli_expand, m)?)?;
    m.add_function(wrap_pyfunction!(pauli_reconstruct, m)?)?;
    m.add_function(wrap_pyfunction!(commutant_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(pure_werner_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(is_werner, m)?)?;
    m.add_function(wrap_pyfunction!(twirl, m)?)?;
    m.add_function(wrap_pyfunction!(monte_carlo_twirl, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture, m)?)?;
    m.add_function(wrap_pyfunction!(symmetric_check, m)?)?;
    m.add_function(wrap_pyfunction!(stabilizer, m)?)?;
    m.add_function(wrap_pyfunction!(pure_stabilizer, m)?)?;
    Ok(())
}
