//! Independent reference implementations used to cross-validate the fast
//! paths. Each is deliberately written with a different algorithm than its
//! production counterpart.

use crate::diagrams::{Matching, Partition};
use crate::error::{Error, Result};

/// Catalan numbers by the convolution recurrence
/// C_0 = 1, C_{k+1} = sum_i C_i C_{k-i}.
pub fn catalan_recurrence(m: u32) -> u64 {
    let mut c = vec![1u64; m as usize + 1];
    for k in 1..=m as usize {
        c[k] = (0..k).map(|i| c[i] * c[k - 1 - i]).sum();
    }
    c[m as usize]
}

/// Quadruple-loop crossing detector: searches directly for a < b < c < d
/// with a, c in one block and b, d in another.
pub fn is_noncrossing_bruteforce(p: &Partition) -> bool {
    let n = p.n();
    let mut owner = vec![0usize; n + 1];
    for (id, block) in p.blocks().iter().enumerate() {
        for &e in block {
            owner[e] = id;
        }
    }
    for a in 1..=n {
        for b in (a + 1)..=n {
            for c in (b + 1)..=n {
                for d in (c + 1)..=n {
                    if owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Bipartition criterion by exhaustive set accumulation: collect the set of
/// bipartitions crossed by each active chord, then check every bipartition
/// was collected.
#[allow(clippy::needless_range_loop)]
pub fn bipartition_criterion_bruteforce(terms: &[(Matching, f64)]) -> Result<bool> {
    let first = terms
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty matching list".into()))?;
    let n = first.0.n();
    if terms.iter().any(|(m, _)| m.n() != n) {
        return Err(Error::DimMismatch(
            "matchings on different qubit counts".into(),
        ));
    }
    if terms.iter().all(|(_, c)| *c == 0.0) {
        return Err(Error::InvalidArgument("every coefficient is zero".into()));
    }
    // represent a bipartition by the subset containing qubit 1
    let anchor = 1usize << (n - 1);
    let full = (1usize << n) - 1;
    let mut crossed = vec![false; 1 << n];
    for (m, coeff) in terms {
        if *coeff == 0.0 {
            continue;
        }
        for (a, b) in m.pairs() {
            for mask in 0..=full {
                if mask & anchor == 0 || mask == full {
                    continue;
                }
                let ina = (mask >> (n - a)) & 1 == 1;
                let inb = (mask >> (n - b)) & 1 == 1;
                if ina != inb {
                    crossed[mask] = true;
                }
            }
        }
    }
    for mask in 0..=full {
        if mask & anchor == 0 || mask == full {
            continue;
        }
        if !crossed[mask] {
            return Ok(false);
        }
    }
    Ok(true)
}
