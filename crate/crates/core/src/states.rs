//! State constructions: singlet products over chord diagrams, cyclic states,
//! polygon-diagram densities, and symmetric / radial basis elements.
//!
//! Computational-basis indexing: qubit 1 is the most significant bit, so
//! |b_1 b_2 ... b_n> sits at index sum_k b_k 2^{n-k}.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::diagrams::{Matching, Partition};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;

/// Bit string b_1 ... b_n, qubit 1 first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitString {
    bits: Vec<u8>,
}

impl BitString {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidArgument("bit string must be nonempty".into()));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidArgument(
                "bit string entries must be 0 or 1".into(),
            ));
        }
        Ok(BitString { bits })
    }

    pub fn from_index(index: usize, n: usize) -> Self {
        let bits = (0..n).map(|k| ((index >> (n - 1 - k)) & 1) as u8).collect();
        BitString { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Basis index of |b_1 ... b_n>.
    pub fn to_index(&self) -> usize {
        self.bits
            .iter()
            .fold(0usize, |acc, &b| (acc << 1) | b as usize)
    }

    /// Cyclic shift moving contents one position toward lower index:
    /// the new k-th bit is the old (k+1)-th, and the new last bit is the
    /// old first.
    pub fn shifted(&self) -> BitString {
        let n = self.bits.len();
        let bits = (0..n).map(|k| self.bits[(k + 1) % n]).collect();
        BitString { bits }
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty bit string".into(),
            });
        }
        let mut bits = Vec::with_capacity(s.len());
        for (pos, ch) in s.char_indices() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("expected '0' or '1', got '{ch}'"),
                    })
                }
            }
        }
        BitString::new(bits)
    }
}

/// Normalized n-qubit state vector.
#[derive(Clone, Debug)]
pub struct PureState {
    n: usize,
    amps: Vec<Complex64>,
}

impl PureState {
    /// Validates length 2^n and unit norm (within 1e-9).
    pub fn new(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        if n == 0 || amps.len() != 1usize << n {
            return Err(Error::InvalidArgument(format!(
                "state for n={n} needs {} amplitudes, got {}",
                1usize << n,
                amps.len()
            )));
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidArgument(format!(
                "state norm {norm} is not 1"
            )));
        }
        Ok(PureState { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    /// <self|other>, conjugate-linear in `self`.
    pub fn inner(&self, other: &PureState) -> Complex64 {
        assert_eq!(self.n, other.n, "states on different qubit counts");
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Rank-one density matrix |psi><psi|.
    pub fn projector(&self) -> CMatrix {
        let dim = self.amps.len();
        let mut out = CMatrix::zeros(dim, dim);
        for (i, a) in self.amps.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            for (j, b) in self.amps.iter().enumerate() {
                out[(i, j)] = a * b.conj();
            }
        }
        out
    }

    /// Amplitudes as a 2^n x 1 column matrix.
    pub fn column(&self) -> CMatrix {
        CMatrix::column_vector(&self.amps)
    }
}

/// Two-qubit singlet (|01> - |10>) / sqrt(2).
pub fn singlet() -> PureState {
    let r = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    PureState::new(2, vec![Complex64::ZERO, r, -r, Complex64::ZERO]).expect("unit norm")
}

/// Product of singlets over the pairs of a matching: qubit pair {a, b} with
/// a < b carries (|0_a 1_b> - |1_a 0_b>) / sqrt(2). Defined for crossing and
/// non-crossing matchings alike.
pub fn chord_state(m: &Matching) -> PureState {
    let n = m.n();
    let dim = 1usize << n;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let pairs: Vec<(usize, usize)> = m.pairs().collect();
    let mut amps = vec![Complex64::ZERO; dim];
    for (i, amp) in amps.iter_mut().enumerate() {
        let mut value = 1.0f64;
        for &(a, b) in &pairs {
            let ba = (i >> (n - a)) & 1;
            let bb = (i >> (n - b)) & 1;
            value *= match (ba, bb) {
                (0, 1) => r,
                (1, 0) => -r,
                _ => 0.0,
            };
            if value == 0.0 {
                break;
            }
        }
        *amp = Complex64::new(value, 0.0);
    }
    PureState::new(n, amps).expect("singlet product has unit norm")
}

/// Cyclic state C(I) = n^{-1/2} sum_k w^k |pi^k I> with w = exp(2 pi i / n).
/// Returns `None` exactly when the shift orbit of I is shorter than n, which
/// makes the sum vanish.
pub fn cyclic_state(input: &BitString) -> Option<PureState> {
    let n = input.len();
    let mut orbit = Vec::with_capacity(n);
    let mut cur = input.clone();
    for _ in 0..n {
        orbit.push(cur.to_index());
        cur = cur.shifted();
    }
    // orbit length divides n; shorter than n iff some earlier repeat
    if orbit[1..].contains(&orbit[0]) {
        return None;
    }
    let dim = 1usize << n;
    let scale = 1.0 / (n as f64).sqrt();
    let mut amps = vec![Complex64::ZERO; dim];
    for (k, &idx) in orbit.iter().enumerate() {
        let angle = 2.0 * PI * k as f64 / n as f64;
        amps[idx] = Complex64::from_polar(scale, angle);
    }
    Some(PureState::new(n, amps).expect("full orbit gives unit norm"))
}

/// Uniform mixture of all nonzero cyclic states on n qubits, trace 1.
pub fn cn_density(n: usize) -> CMatrix {
    assert!(n >= 1, "need at least one qubit");
    let dim = 1usize << n;
    let mut acc = CMatrix::zeros(dim, dim);
    let mut count = 0usize;
    for index in 0..dim {
        if let Some(state) = cyclic_state(&BitString::from_index(index, n)) {
            acc = &acc + &state.projector();
            count += 1;
        }
    }
    assert!(count > 0, "every n has at least one full-orbit string");
    acc.scale(Complex64::new(1.0 / count as f64, 0.0))
}

/// Polygon-diagram state: one cyclic mixture per block of the partition,
/// tensored together on the block's qubits (block elements in increasing
/// order), trace 1.
pub fn diagram_density(d: &Partition) -> CMatrix {
    let n = d.n();
    let dim = 1usize << n;
    // slot t of the factor product holds actual qubit actual_of_slot[t]
    let mut actual_of_slot = Vec::with_capacity(n);
    let mut factor = CMatrix::identity(1);
    for block in d.blocks() {
        actual_of_slot.extend(block.iter().copied());
        factor = factor.kron(&cn_density(block.len()));
    }
    let slot_index = |i: usize| -> usize {
        actual_of_slot
            .iter()
            .enumerate()
            .fold(0usize, |acc, (t, &q)| {
                acc | (((i >> (n - q)) & 1) << (n - 1 - t))
            })
    };
    CMatrix::from_fn(dim, dim, |i, j| factor[(slot_index(i), slot_index(j))])
}

/// Average of sigma_I over all multiindices with n1 ones, n2 twos, n3 threes
/// (and n - n1 - n2 - n3 zeros).
pub fn sym_element(n1: usize, n2: usize, n3: usize, n: usize) -> Result<CMatrix> {
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one qubit".into()));
    }
    if n1 + n2 + n3 > n {
        return Err(Error::InvalidArgument(format!(
            "digit counts ({n1}, {n2}, {n3}) exceed {n} qubits"
        )));
    }
    let dim = 1usize << n;
    let mut acc = CMatrix::zeros(dim, dim);
    let mut count = 0usize;
    for lin in 0..4usize.pow(n as u32) {
        let mut counts = [0usize; 4];
        let mut rest = lin;
        for _ in 0..n {
            counts[rest % 4] += 1;
            rest /= 4;
        }
        if counts[1] == n1 && counts[2] == n2 && counts[3] == n3 {
            let index = crate::pauli::MultiIndex::from_linear(lin, n);
            acc = &acc + &crate::pauli::sigma_tensor(&index);
            count += 1;
        }
    }
    Ok(acc.scale(Complex64::new(1.0 / count as f64, 0.0)))
}

fn multinomial(m: usize, parts: &[usize]) -> u128 {
    debug_assert_eq!(parts.iter().sum::<usize>(), m);
    let mut value: u128 = 1;
    let mut k: u128 = 0;
    for &p in parts {
        for j in 1..=p as u128 {
            k += 1;
            value = value * k / j;
        }
    }
    value
}

/// Image of the radial polynomial r^{2m} = (x^2 + y^2 + z^2)^m under the
/// symmetrization map: sum over a + b + c = m of multinomial(m; a, b, c)
/// times the (2a, 2b, 2c) symmetric element.
pub fn radial_element(m: usize, n: usize) -> Result<CMatrix> {
    if 2 * m > n {
        return Err(Error::InvalidArgument(format!(
            "radial degree 2m={} exceeds qubit count {n}",
            2 * m
        )));
    }
    let dim = 1usize << n;
    let mut acc = CMatrix::zeros(dim, dim);
    for a in 0..=m {
        for b in 0..=(m - a) {
            let c = m - a - b;
            let coeff = multinomial(m, &[a, b, c]) as f64;
            let term = sym_element(2 * a, 2 * b, 2 * c, n)?;
            acc = &acc + &term.scale(Complex64::new(coeff, 0.0));
        }
    }
    Ok(acc)
}

/// Relabel qubits of a 2^n x 2^n matrix: the qubit at position k (0-based)
/// moves to position perm[k].
pub fn permute_qubits(rho: &CMatrix, perm: &[usize]) -> CMatrix {
    let n = perm.len();
    let dim = 1usize << n;
    assert_eq!(
        rho.rows(),
        dim,
        "matrix size does not match permutation length"
    );
    assert_eq!(
        rho.cols(),
        dim,
        "matrix size does not match permutation length"
    );
    let map = |i: usize| -> usize {
        (0..n).fold(0usize, |acc, k| {
            acc | (((i >> (n - 1 - k)) & 1) << (n - 1 - perm[k]))
        })
    };
    let mut out = CMatrix::zeros(dim, dim);
    for i in 0..dim {
        let mi = map(i);
        for j in 0..dim {
            out[(mi, map(j))] = rho[(i, j)];
        }
    }
    out
}

/// All permutations of 0..n (Heap's algorithm), deterministic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}
