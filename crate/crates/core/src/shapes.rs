//! Partitions, compositions, skew shapes and block-diagonal shapes.
//!
//! Cells are addressed as `(row, column)` with both coordinates starting at 1,
//! rows numbered top to bottom (English convention).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored as its weakly decreasing list of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts increase anywhere.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part (0 for the empty partition).
    pub fn width(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.width();
        let parts = (1..=w)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition(parts)
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= 1 && c <= self.part(r)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |c| (i + 1, c)))
    }

    /// `b(λ) = Σ (i-1) λ_i`.
    pub fn b(&self) -> usize {
        b_statistic(&self.0)
    }

    /// Hook lengths, one row per part.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let r = i + 1;
                (1..=p)
                    .map(|c| p - c + conj.part(c) - r + 1)
                    .collect()
            })
            .collect()
    }

    pub fn hook_sum(&self) -> usize {
        self.hook_lengths().iter().flatten().sum()
    }

    /// Multiplicity of each hook length: `H_i(λ)`.
    pub fn hook_profile(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for h in self.hook_lengths().into_iter().flatten() {
            *out.entry(h).or_insert(0) += 1;
        }
        out
    }

    /// Removable cells, top to bottom.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (1..=self.len())
            .filter(|&r| self.part(r + 1) < self.part(r))
            .map(|r| (r, self.part(r)))
            .collect()
    }

    /// Addable cells lying strictly inside the bounding rectangle of the diagram.
    pub fn notches(&self) -> Vec<(usize, usize)> {
        (2..=self.len())
            .filter(|&r| self.part(r) < self.part(r - 1))
            .map(|r| (r, self.part(r) + 1))
            .collect()
    }

    pub fn is_rectangle(&self) -> bool {
        !self.is_empty() && self.0.iter().all(|&p| p == self.0[0])
    }

    /// A rectangle with at least two rows and two columns.
    pub fn is_big_rectangle(&self) -> bool {
        self.is_rectangle() && self.len() >= 2 && self.width() >= 2
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `b(α) = Σ (i-1) α_i` for any sequence of nonnegative integers.
pub fn b_statistic(alpha: &[usize]) -> usize {
    alpha.iter().enumerate().map(|(i, &a)| i * a).sum()
}

/// Weak compositions of `n` with exactly `m` parts, in lexicographic order.
pub fn weak_compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0; m];
    fn rec(i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i + 1 == cur.len() {
            cur[i] = rem;
            out.push(cur.clone());
            return;
        }
        for a in 0..=rem {
            cur[i] = a;
            rec(i + 1, rem - a, cur, out);
        }
    }
    rec(0, n, &mut cur, &mut out);
    out
}

/// A skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        let ok = inner.len() <= outer.len()
            && (1..=inner.len()).all(|i| inner.part(i) <= outer.part(i));
        if !ok {
            return Err(Error::NotContained {
                outer: outer.0,
                inner: inner.0,
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(p: Partition) -> Self {
        SkewShape {
            outer: p,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer diagram.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Columns occupied in row `r`, as an inclusive range `(first, last)`; empty rows give `first > last`.
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (self.inner.part(r) + 1, self.outer.part(r))
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        self.outer.contains_cell(r, c) && !self.inner.contains_cell(r, c)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.rows())
            .flat_map(|r| {
                let (a, b) = self.row_span(r);
                (a..=b).map(move |c| (r, c))
            })
            .collect()
    }

    pub fn transpose(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Longest row.
    pub fn max_row_length(&self) -> usize {
        (1..=self.rows())
            .map(|r| self.outer.part(r) - self.inner.part(r))
            .max()
            .unwrap_or(0)
    }

    /// Longest column.
    pub fn max_column_length(&self) -> usize {
        self.transpose().max_row_length()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// `outer` or `outer/inner`, e.g. `3,3/2`.
impl FromStr for SkewShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// A sequence of partitions placed block-diagonally: block `j` sits above and to
/// the right of block `j + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BlockShape {
    blocks: Vec<Partition>,
}

impl BlockShape {
    pub fn new(blocks: Vec<Partition>) -> Self {
        BlockShape { blocks }
    }

    /// Blocks that are single rows of the given lengths.
    pub fn one_rows(alpha: &[usize]) -> Self {
        BlockShape {
            blocks: alpha
                .iter()
                .map(|&a| Partition::new(vec![a]).expect("single part"))
                .collect(),
        }
    }

    pub fn blocks(&self) -> &[Partition] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn m(&self) -> usize {
        self.blocks.len()
    }

    /// Total number of cells.
    pub fn n(&self) -> usize {
        self.blocks.iter().map(Partition::size).sum()
    }

    /// `α(λ̄)`: block sizes.
    pub fn alpha(&self) -> Vec<usize> {
        self.blocks.iter().map(Partition::size).collect()
    }

    pub fn b_alpha(&self) -> usize {
        b_statistic(&self.alpha())
    }

    /// `Σ b(λ^(i))`.
    pub fn b(&self) -> usize {
        self.blocks.iter().map(Partition::b).sum()
    }

    pub fn hook_sum(&self) -> usize {
        self.blocks.iter().map(Partition::hook_sum).sum()
    }

    pub fn is_one_row_blocks(&self) -> bool {
        self.blocks.iter().all(|p| p.len() <= 1)
    }

    /// First row of each block in the combined diagram (1-based) and its column offset.
    fn offsets(&self) -> Vec<(usize, usize)> {
        let m = self.m();
        let mut out = Vec::with_capacity(m);
        let mut row = 1;
        for j in 0..m {
            let col: usize = self.blocks[j + 1..].iter().map(Partition::width).sum();
            out.push((row, col));
            row += self.blocks[j].len();
        }
        out
    }

    pub fn to_skew(&self) -> SkewShape {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        for (blk, (_, col)) in self.blocks.iter().zip(self.offsets()) {
            for &p in blk.parts() {
                outer.push(col + p);
                inner.push(col);
            }
        }
        SkewShape::new(
            Partition::new(outer).expect("block layout is a partition"),
            Partition::new(inner).expect("block layout is a partition"),
        )
        .expect("inner fits in outer")
    }

    /// Block index (0-based) owning row `r` of the combined diagram.
    pub fn block_of_row(&self, r: usize) -> Option<usize> {
        self.offsets()
            .iter()
            .enumerate()
            .find(|(j, (start, _))| r >= *start && r < start + self.blocks[*j].len())
            .map(|(j, _)| j)
    }

    /// Row map for every row of the combined diagram.
    pub fn row_blocks(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(j, p)| std::iter::repeat(j).take(p.len()))
            .collect()
    }

    /// Applies `σ^s`, where `σ (λ_1, …, λ_m) = (λ_m, λ_1, …, λ_{m-1})`.
    pub fn rotated(&self, s: usize) -> BlockShape {
        let m = self.m();
        if m == 0 {
            return self.clone();
        }
        let s = s % m;
        let mut blocks = self.blocks.clone();
        blocks.rotate_right(s);
        BlockShape { blocks }
    }

    /// Distinct shapes in the orbit under the cyclic group generated by `σ^{m/d}`.
    pub fn orbit(&self, d: usize) -> Result<Vec<BlockShape>> {
        let m = self.m();
        if d == 0 || m % d != 0 {
            return Err(Error::DNotDividingM { d, m });
        }
        let step = m / d;
        let mut out: Vec<BlockShape> = Vec::new();
        for j in 0..d {
            let r = self.rotated(j * step);
            if !out.contains(&r) {
                out.push(r);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for BlockShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.blocks.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("|"))
    }
}

impl FromStr for BlockShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .trim()
            .split('|')
            .map(str::parse)
            .collect::<Result<Vec<Partition>>>()?;
        Ok(BlockShape { blocks })
    }
}
