//! Set partitions and perfect matchings of {1, ..., n}, their text format,
//! non-crossing tests, enumeration, and lattice operations.
//!
//! Canonical form everywhere: elements sorted within each block, blocks
//! sorted by least element. Text format is blocks separated by `|` with
//! whitespace-separated elements, e.g. `1 4 | 2 3`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Set partition of {1, ..., n} in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Canonicalizes and validates: blocks must be nonempty, disjoint, and
    /// cover {1, ..., n} exactly.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "partition ground set must be nonempty".into(),
            ));
        }
        let mut seen = vec![false; n + 1];
        let mut canon: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidArgument("empty block in partition".into()));
            }
            block.sort_unstable();
            for &e in &block {
                if e == 0 || e > n {
                    return Err(Error::InvalidArgument(format!(
                        "element {e} outside 1..={n}"
                    )));
                }
                if seen[e] {
                    return Err(Error::InvalidArgument(format!(
                        "element {e} appears in more than one block"
                    )));
                }
                seen[e] = true;
            }
            canon.push(block);
        }
        if let Some(missing) = (1..=n).find(|&e| !seen[e]) {
            return Err(Error::InvalidArgument(format!(
                "element {missing} is not covered by any block"
            )));
        }
        canon.sort();
        Ok(Partition { n, blocks: canon })
    }

    /// The finest partition: n singleton blocks.
    pub fn singletons(n: usize) -> Self {
        Partition::new(n, (1..=n).map(|e| vec![e]).collect()).expect("singletons are valid")
    }

    /// The coarsest partition: one block.
    pub fn full(n: usize) -> Self {
        Partition::new(n, vec![(1..=n).collect()]).expect("full block is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Index into `blocks()` of the block containing `element`.
    pub fn block_of(&self, element: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&element).is_ok())
            .expect("element within ground set")
    }

    /// No two blocks interleave: there is no a < b < c < d with a, c in one
    /// block and b, d in another. Linear scan with a stack of open blocks.
    #[allow(clippy::needless_range_loop)]
    pub fn is_noncrossing(&self) -> bool {
        let mut owner = vec![0usize; self.n + 1];
        let mut last = vec![0usize; self.blocks.len()];
        for (id, block) in self.blocks.iter().enumerate() {
            for &e in block {
                owner[e] = id;
            }
            last[id] = *block.last().unwrap();
        }
        let mut stack: Vec<usize> = Vec::new();
        for e in 1..=self.n {
            let id = owner[e];
            if stack.last() == Some(&id) {
                // continuing the innermost open block
            } else if e == self.blocks[id][0] {
                stack.push(id);
            } else {
                return false;
            }
            if e == last[id] {
                stack.pop();
            }
        }
        true
    }

    /// True when every block of `self` is contained in a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        if self.n != other.n {
            return false;
        }
        self.blocks.iter().all(|block| {
            block
                .iter()
                .all(|&e| other.block_of(e) == other.block_of(block[0]))
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            for (j, e) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the `1 4 | 2 3` format. The ground set size is the largest
    /// element mentioned; every element 1..=n must appear exactly once.
    fn from_str(s: &str) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        let mut chars = s.char_indices().peekable();
        let mut saw_digit_in_block = false;
        while let Some(&(pos, ch)) = chars.peek() {
            if ch.is_whitespace() {
                chars.next();
            } else if ch == '|' {
                if !saw_digit_in_block {
                    return Err(Error::Parse {
                        pos,
                        msg: "empty block before '|'".into(),
                    });
                }
                blocks.push(std::mem::take(&mut current));
                saw_digit_in_block = false;
                chars.next();
            } else if ch.is_ascii_digit() {
                let start = pos;
                let mut value = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        value.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let e: usize = value.parse().map_err(|_| Error::Parse {
                    pos: start,
                    msg: format!("element '{value}' out of range"),
                })?;
                if e == 0 {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "elements start at 1".into(),
                    });
                }
                current.push(e);
                saw_digit_in_block = true;
            } else {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character '{ch}'"),
                });
            }
        }
        if !saw_digit_in_block {
            return Err(Error::Parse {
                pos: s.len(),
                msg: "empty trailing block".into(),
            });
        }
        blocks.push(current);
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        Partition::new(n, blocks).map_err(|e| match e {
            Error::InvalidArgument(msg) => Error::Parse { pos: 0, msg },
            other => other,
        })
    }
}

/// Perfect matching: a partition whose blocks all have size 2.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching(Partition);

impl Matching {
    pub fn new(p: Partition) -> Result<Self> {
        if let Some(bad) = p.blocks().iter().find(|b| b.len() != 2) {
            return Err(Error::InvalidArgument(format!(
                "matching blocks must be pairs, got block of size {}",
                bad.len()
            )));
        }
        Ok(Matching(p))
    }

    pub fn from_pairs(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        Matching::new(Partition::new(
            n,
            pairs.into_iter().map(|(a, b)| vec![a, b]).collect(),
        )?)
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.blocks().iter().map(|b| (b[0], b[1]))
    }

    pub fn is_noncrossing(&self) -> bool {
        self.0.is_noncrossing()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Matching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Matching::new(s.parse::<Partition>()?).map_err(|e| match e {
            Error::InvalidArgument(msg) => Error::Parse { pos: 0, msg },
            other => other,
        })
    }
}

/// Catalan number C_m. Exact for m <= 36 (largest that fits in u64).
pub fn catalan(m: u32) -> u64 {
    assert!(m <= 36, "catalan({m}) overflows u64");
    // C_m = binom(2m, m) / (m + 1), computed with u128 intermediates
    let mut binom: u128 = 1;
    for k in 1..=m as u128 {
        binom = binom * (m as u128 + k) / k;
    }
    u64::try_from(binom / (m as u128 + 1)).expect("checked bound")
}

/// All partitions of {1, ..., n} via restricted growth strings, in canonical
/// sorted order.
pub fn enumerate_all_partitions(n: usize) -> Vec<Partition> {
    assert!(n >= 1, "ground set must be nonempty");
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let num_blocks = rgs.iter().copied().max().unwrap() + 1;
        let mut blocks = vec![Vec::new(); num_blocks];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        out.push(Partition::new(n, blocks).expect("growth string yields a partition"));
        // next restricted growth string: rgs[i] <= 1 + max(rgs[..i])
        let mut i = n;
        loop {
            if i == 1 {
                out.sort();
                return out;
            }
            i -= 1;
            let prefix_max = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for r in rgs[i + 1..].iter_mut() {
                    *r = 0;
                }
                break;
            }
        }
    }
}

/// Non-crossing partitions of {1, ..., n}, sorted; there are C_n of them.
pub fn enumerate_noncrossing_partitions(n: usize) -> Vec<Partition> {
    enumerate_all_partitions(n)
        .into_iter()
        .filter(Partition::is_noncrossing)
        .collect()
}

/// All perfect matchings of {1, ..., n}, sorted. Errors when n is odd.
pub fn enumerate_all_matchings(n: usize) -> Result<Vec<Matching>> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "perfect matchings need an even ground set, got n={n}"
        )));
    }
    fn rec(
        unmatched: &[usize],
        pairs: &mut Vec<(usize, usize)>,
        n: usize,
        out: &mut Vec<Matching>,
    ) {
        if unmatched.is_empty() {
            out.push(Matching::from_pairs(n, pairs.clone()).expect("pairs form a matching"));
            return;
        }
        let a = unmatched[0];
        for i in 1..unmatched.len() {
            let b = unmatched[i];
            let mut rest = unmatched[1..].to_vec();
            rest.remove(i - 1);
            pairs.push((a, b));
            rec(&rest, pairs, n, out);
            pairs.pop();
        }
    }
    let mut out = Vec::new();
    let ground: Vec<usize> = (1..=n).collect();
    rec(&ground, &mut Vec::new(), n, &mut out);
    out.sort();
    Ok(out)
}

/// Non-crossing perfect matchings of {1, ..., n}, sorted; there are C_{n/2}.
pub fn enumerate_noncrossing_matchings(n: usize) -> Result<Vec<Matching>> {
    Ok(enumerate_all_matchings(n)?
        .into_iter()
        .filter(Matching::is_noncrossing)
        .collect())
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[rb] = ra;
        }
    }

    fn into_partition(mut self, n: usize) -> Partition {
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in 0..n {
            let root = self.find(e);
            groups[root].push(e + 1);
        }
        groups.retain(|g| !g.is_empty());
        Partition::new(n, groups).expect("components partition the ground set")
    }
}

/// Least upper bound in the partition lattice: the finest partition coarser
/// than every input. Blocks are the connected components of the union of all
/// input blocks. Errors on an empty list or mismatched ground sets.
pub fn common_coarsening(parts: &[Partition]) -> Result<Partition> {
    let first = parts
        .first()
        .ok_or_else(|| Error::InvalidArgument("common coarsening of an empty list".into()))?;
    let n = first.n();
    if let Some(bad) = parts.iter().find(|p| p.n() != n) {
        return Err(Error::DimMismatch(format!(
            "partitions of different ground sets: n={n} vs n={}",
            bad.n()
        )));
    }
    let mut uf = UnionFind::new(n);
    for p in parts {
        for block in p.blocks() {
            for &e in &block[1..] {
                uf.union(block[0] - 1, e - 1);
            }
        }
    }
    Ok(uf.into_partition(n))
}

/// Collapse a matching of {1, ..., 2n} to a partition of {1, ..., n} by
/// gluing points 2j-1 and 2j into vertex j; blocks are the connected
/// components traced by the chords.
pub fn glue_matching(m: &Matching) -> Result<Partition> {
    if !m.n().is_multiple_of(2) {
        return Err(Error::InvalidArgument(
            "glue needs a matching on an even ground set".into(),
        ));
    }
    let n = m.n() / 2;
    if n == 0 {
        return Err(Error::InvalidArgument(
            "glue needs at least two points".into(),
        ));
    }
    let mut uf = UnionFind::new(n);
    for (a, b) in m.pairs() {
        uf.union((a - 1) / 2, (b - 1) / 2);
    }
    Ok(uf.into_partition(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form() {
        let part = Partition::new(4, vec![vec![3, 2], vec![4, 1]]).unwrap();
        assert_eq!(part.blocks(), &[vec![1, 4], vec![2, 3]]);
        assert_eq!(part.to_string(), "1 4 | 2 3");
    }

    #[test]
    fn new_rejects_bad_blocks() {
        assert!(Partition::new(3, vec![vec![1, 2]]).is_err()); // 3 missing
        assert!(Partition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err()); // overlap
        assert!(Partition::new(3, vec![vec![1, 2, 3], vec![]]).is_err()); // empty block
        assert!(Partition::new(2, vec![vec![1, 2, 3]]).is_err()); // out of range
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        assert_eq!(p("1 4 | 2 3").blocks(), &[vec![1, 4], vec![2, 3]]);
        assert_eq!(p("  2 1|3  ").to_string(), "1 2 | 3");
        assert!(matches!(
            "1 4 | 2 x".parse::<Partition>(),
            Err(Error::Parse { pos: 8, .. })
        ));
        assert!("1 | | 2".parse::<Partition>().is_err());
        assert!("1 3".parse::<Partition>().is_err()); // 2 missing
        assert!("1 2 | 2 3".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("0 1".parse::<Partition>().is_err());
    }

    #[test]
    fn noncrossing_examples() {
        assert!(p("1 2 | 3 4").is_noncrossing());
        assert!(p("1 4 | 2 3").is_noncrossing());
        assert!(!p("1 3 | 2 4").is_noncrossing());
        assert!(p("1 2 4 | 3 | 5").is_noncrossing());
        assert!(!p("1 3 5 | 2 4").is_noncrossing());
        assert!(p("1 2 3 4 5").is_noncrossing());
        assert!(p("1").is_noncrossing());
    }

    #[test]
    fn catalan_small_values() {
        let expect = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
        for (m, &c) in expect.iter().enumerate() {
            assert_eq!(catalan(m as u32), c);
        }
        assert_eq!(catalan(20), 6_564_120_420);
    }

    #[test]
    fn enumeration_counts() {
        // Bell numbers for all partitions, Catalan for non-crossing
        let bell = [1usize, 2, 5, 15, 52, 203];
        for (i, &b) in bell.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_all_partitions(n).len(), b, "bell({n})");
            assert_eq!(
                enumerate_noncrossing_partitions(n).len(),
                catalan(n as u32) as usize,
                "catalan({n})"
            );
        }
        for m in 1..=4u32 {
            let n = 2 * m as usize;
            let all = enumerate_all_matchings(n).unwrap();
            // (2m - 1)!! matchings in total
            let double_fact: usize = (1..=n).step_by(2).product();
            assert_eq!(all.len(), double_fact);
            assert_eq!(
                enumerate_noncrossing_matchings(n).unwrap().len(),
                catalan(m) as usize
            );
        }
        assert!(enumerate_all_matchings(3).is_err());
    }

    #[test]
    fn enumeration_order_for_n4_matchings() {
        let ms = enumerate_noncrossing_matchings(4).unwrap();
        assert_eq!(ms[0].to_string(), "1 2 | 3 4");
        assert_eq!(ms[1].to_string(), "1 4 | 2 3");
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        let parts = enumerate_all_partitions(5);
        for w in parts.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn refinement_relation() {
        assert!(p("1 | 2 | 3").refines(&p("1 2 | 3")));
        assert!(p("1 2 | 3").refines(&p("1 2 3")));
        assert!(!p("1 2 | 3").refines(&p("1 | 2 3")));
        assert!(p("1 2 | 3").refines(&p("1 2 | 3")));
    }

    #[test]
    fn coarsening_examples() {
        let glb = common_coarsening(&[p("1 2 | 3 4"), p("1 | 2 3 | 4")]).unwrap();
        assert_eq!(glb.to_string(), "1 2 3 4");
        let same = common_coarsening(&[p("1 2 | 3 4"), p("1 2 | 3 4")]).unwrap();
        assert_eq!(same.to_string(), "1 2 | 3 4");
        let disjoint = common_coarsening(&[p("1 2 | 3 4 | 5"), p("1 | 2 | 3 4 | 5")]).unwrap();
        assert_eq!(disjoint.to_string(), "1 2 | 3 4 | 5");
        assert!(common_coarsening(&[]).is_err());
        assert!(common_coarsening(&[p("1 2"), p("1 2 3")]).is_err());
    }

    #[test]
    fn coarsening_bounds_inputs() {
        let parts = enumerate_all_partitions(4);
        for a in &parts {
            for b in &parts {
                let g = common_coarsening(&[a.clone(), b.clone()]).unwrap();
                assert!(a.refines(&g));
                assert!(b.refines(&g));
            }
        }
    }

    #[test]
    fn glue_examples() {
        let m: Matching = "1 2 | 3 4".parse().unwrap();
        assert_eq!(glue_matching(&m).unwrap().to_string(), "1 | 2");
        let m: Matching = "1 4 | 2 3".parse().unwrap();
        assert_eq!(glue_matching(&m).unwrap().to_string(), "1 2");
        let m: Matching = "1 2 | 3 6 | 4 5".parse().unwrap();
        assert_eq!(glue_matching(&m).unwrap().to_string(), "1 | 2 3");
    }

    #[test]
    fn matching_rejects_odd_blocks() {
        assert!("1 2 3 | 4 5 6".parse::<Matching>().is_err());
        assert!("1 | 2".parse::<Matching>().is_err());
    }
}
