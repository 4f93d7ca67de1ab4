//! Standard Young tableaux of skew and block shapes: construction, enumeration,
//! descent statistics and the distinguished tableaux of a straight shape.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shapes::{BlockShape, Partition, SkewShape};

/// Default cap on the number of cells accepted by [`enumerate`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 20;

/// A standard filling of a skew shape with `1..=n`.
///
/// `rows[r-1]` lists the entries of row `r` from left to right, and `pos[v-1]`
/// is the cell holding `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    blocks: Option<BlockShape>,
    rows: Vec<Vec<usize>>,
    pos: Vec<(usize, usize)>,
}

impl Tableau {
    /// Validates `rows` against `shape` and the standardness conditions.
    pub fn from_rows(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = shape.size();
        if rows.len() != shape.rows() {
            return Err(Error::NotStandard(format!(
                "expected {} rows, got {}",
                shape.rows(),
                rows.len()
            )));
        }
        let mut pos = vec![(0, 0); n];
        for (i, row) in rows.iter().enumerate() {
            let r = i + 1;
            let (a, b) = shape.row_span(r);
            if row.len() != (b + 1).saturating_sub(a) {
                return Err(Error::NotStandard(format!("row {r} has the wrong length")));
            }
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v > n || pos[v - 1] != (0, 0) {
                    return Err(Error::NotStandard(format!("entry {v} is repeated or out of range")));
                }
                pos[v - 1] = (r, a + j);
            }
        }
        let t = Tableau {
            shape,
            blocks: None,
            rows,
            pos,
        };
        if !t.is_standard() {
            return Err(Error::NotStandard(t.to_string()));
        }
        Ok(t)
    }

    /// A tableau of straight shape given by its rows.
    pub fn straight(rows: Vec<Vec<usize>>) -> Result<Self> {
        let p = Partition::new(rows.iter().map(Vec::len).collect())?;
        Tableau::from_rows(SkewShape::straight(p), rows)
    }

    /// A tableau of block shape given by the rows of the combined diagram.
    pub fn of_blocks(blocks: BlockShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut t = Tableau::from_rows(blocks.to_skew(), rows)?;
        t.blocks = Some(blocks);
        Ok(t)
    }

    /// Builds from cell positions without checking standardness.
    fn from_positions(shape: SkewShape, blocks: Option<BlockShape>, pos: Vec<(usize, usize)>) -> Self {
        let mut rows: Vec<Vec<usize>> = (1..=shape.rows())
            .map(|r| {
                let (a, b) = shape.row_span(r);
                vec![0; (b + 1).saturating_sub(a)]
            })
            .collect();
        for (i, &(r, c)) in pos.iter().enumerate() {
            let a = shape.row_span(r).0;
            rows[r - 1][c - a] = i + 1;
        }
        Tableau {
            shape,
            blocks,
            rows,
            pos,
        }
    }

    fn is_standard(&self) -> bool {
        (1..=self.shape.rows()).all(|r| {
            let (a, b) = self.shape.row_span(r);
            (a..=b).all(|c| {
                let v = self.get(r, c).expect("cell in shape");
                let right_ok = c == b || v < self.get(r, c + 1).expect("cell in shape");
                let down_ok = self.get(r + 1, c).map_or(true, |w| v < w);
                right_ok && down_ok
            })
        })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Block structure, when the tableau was built on a block shape.
    pub fn blocks(&self) -> Option<&BlockShape> {
        self.blocks.as_ref()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    /// Entry in cell `(r, c)`, if that cell belongs to the shape.
    pub fn get(&self, r: usize, c: usize) -> Option<usize> {
        if !self.shape.contains(r, c) {
            return None;
        }
        let a = self.shape.row_span(r).0;
        Some(self.rows[r - 1][c - a])
    }

    /// Cell holding `v`; `None` outside `1..=n`.
    pub fn position(&self, v: usize) -> Option<(usize, usize)> {
        if v == 0 {
            return None;
        }
        self.pos.get(v - 1).copied()
    }

    pub fn positions(&self) -> &[(usize, usize)] {
        &self.pos
    }

    /// `i` is a descent when `i + 1` sits in a strictly lower row.
    pub fn is_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.n() && self.pos[i].0 > self.pos[i - 1].0
    }

    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.is_descent(i)).collect()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    /// Mirror in the main diagonal. Block structure, if any, is dropped.
    pub fn transpose(&self) -> Tableau {
        let pos = self.pos.iter().map(|&(r, c)| (c, r)).collect();
        Tableau::from_positions(self.shape.transpose(), None, pos)
    }

    /// Rows read from bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Replaces each entry `v` by `f(v)`; `f` must permute `1..=n` and the result must be standard.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Result<Tableau> {
        let n = self.n();
        let mut pos = vec![(0, 0); n];
        for (i, &cell) in self.pos.iter().enumerate() {
            let w = f(i + 1);
            if w == 0 || w > n || pos[w - 1] != (0, 0) {
                return Err(Error::NotStandard("relabelling is not a permutation".into()));
            }
            pos[w - 1] = cell;
        }
        let t = Tableau::from_positions(self.shape.clone(), self.blocks.clone(), pos);
        if t.is_standard() {
            Ok(t)
        } else {
            Err(Error::NotStandard(t.to_string()))
        }
    }

    /// Applies a product of disjoint cycles, each written `(a_1, a_2, …)` meaning `a_1 ↦ a_2 ↦ … ↦ a_1`.
    pub fn apply_cycles(&self, cycles: &[Vec<usize>]) -> Result<Tableau> {
        let mut map: Vec<usize> = (0..=self.n()).collect();
        for cyc in cycles {
            for (i, &a) in cyc.iter().enumerate() {
                let b = cyc[(i + 1) % cyc.len()];
                if a == 0 || a > self.n() || b == 0 || b > self.n() {
                    return Err(Error::NotStandard(format!("cycle entry out of range in {cyc:?}")));
                }
                map[a] = b;
            }
        }
        self.relabel(|v| map[v])
    }

    /// Block (0-based) holding `v`, for tableaux built on block shapes.
    pub fn block_of_value(&self, v: usize) -> Option<usize> {
        let (r, _) = self.position(v)?;
        self.blocks.as_ref()?.block_of_row(r)
    }

    /// Word whose `i`-th letter records the block holding `i`, counting blocks from
    /// the bottom of the diagram (the last block gives letter 1).
    pub fn to_word(&self) -> Result<Vec<usize>> {
        let blocks = self.blocks.as_ref().ok_or(Error::ShapeNotOneRowBlocks)?;
        if !blocks.is_one_row_blocks() {
            return Err(Error::ShapeNotOneRowBlocks);
        }
        let row_blocks = blocks.row_blocks();
        let m = blocks.m();
        Ok(self.pos.iter().map(|&(r, _)| m - row_blocks[r - 1]).collect())
    }

    /// Inverse of [`Tableau::to_word`] for one-row blocks `((α_k), …, (α_1))`.
    pub fn from_word(word: &[usize], m: usize) -> Result<Tableau> {
        let mut alpha = vec![0; m];
        for &w in word {
            if w == 0 || w > m {
                return Err(Error::Parse(format!("letter {w} outside 1..={m}")));
            }
            alpha[m - w] += 1;
        }
        let blocks = BlockShape::one_rows(&alpha);
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (i, &w) in word.iter().enumerate() {
            rows[m - w].push(i + 1);
        }
        rows.retain(|r| !r.is_empty());
        Tableau::of_blocks(blocks, rows)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Tableau", 2)?;
        if let Some(b) = &self.blocks {
            st.serialize_field("blocks", b)?;
        } else if self.shape.is_straight() {
            st.serialize_field("shape", self.shape.outer())?;
        } else {
            st.serialize_field(
                "shape",
                &serde_json::json!({
                    "outer": self.shape.outer(),
                    "inner": self.shape.inner(),
                }),
            )?;
        }
        st.serialize_field("rows", &self.rows)?;
        st.end()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;
    /// Straight-shape tableau such as `1,2,4/3,6/5`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .trim()
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad entry {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::straight(rows)
    }
}

// ---------------------------------------------------------------------------
// Enumeration

/// Depth-first enumeration of `SYT(shape)`. Each value goes into the first
/// available cell in row-major order, so output order is deterministic.
pub struct SytIter {
    shape: SkewShape,
    blocks: Option<BlockShape>,
    cells: Vec<(usize, usize)>,
    north: Vec<Option<usize>>,
    west: Vec<Option<usize>>,
    filled: Vec<bool>,
    stack: Vec<usize>,
    started: bool,
    done: bool,
}

impl SytIter {
    fn new(shape: SkewShape, blocks: Option<BlockShape>) -> Self {
        let cells = shape.cells();
        let index = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c));
        let north = cells.iter().map(|&(r, c)| index(r.wrapping_sub(1), c)).collect();
        let west = cells.iter().map(|&(r, c)| index(r, c.wrapping_sub(1))).collect();
        let n = cells.len();
        SytIter {
            shape,
            blocks,
            cells,
            north,
            west,
            filled: vec![false; n],
            stack: Vec::with_capacity(n),
            started: false,
            done: false,
        }
    }

    fn addable(&self, i: usize) -> bool {
        !self.filled[i]
            && self.north[i].map_or(true, |j| self.filled[j])
            && self.west[i].map_or(true, |j| self.filled[j])
    }

    fn current(&self) -> Tableau {
        let pos = self.stack.iter().map(|&i| self.cells[i]).collect();
        Tableau::from_positions(self.shape.clone(), self.blocks.clone(), pos)
    }
}

impl Iterator for SytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let n = self.cells.len();
        let mut start = 0;
        if self.started {
            match self.stack.pop() {
                Some(last) => {
                    self.filled[last] = false;
                    start = last + 1;
                }
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
        self.started = true;
        if n == 0 {
            return Some(self.current());
        }
        loop {
            match (start..n).find(|&i| self.addable(i)) {
                Some(i) => {
                    self.filled[i] = true;
                    self.stack.push(i);
                    start = 0;
                    if self.stack.len() == n {
                        return Some(self.current());
                    }
                }
                None => match self.stack.pop() {
                    Some(last) => {
                        self.filled[last] = false;
                        start = last + 1;
                    }
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }
}

/// All standard tableaux of `shape`, refusing shapes with more than
/// [`DEFAULT_ENUMERATION_BOUND`] cells.
pub fn enumerate(shape: &SkewShape) -> Result<SytIter> {
    enumerate_with_bound(shape, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_with_bound(shape: &SkewShape, bound: usize) -> Result<SytIter> {
    let size = shape.size();
    if size > bound {
        return Err(Error::BoundExceeded { size, bound });
    }
    Ok(SytIter::new(shape.clone(), None))
}

/// All standard tableaux of a straight shape.
pub fn enumerate_straight(p: &Partition) -> Result<SytIter> {
    enumerate(&SkewShape::straight(p.clone()))
}

/// All standard tableaux of a block shape; the results carry their block structure.
pub fn enumerate_blocks(blocks: &BlockShape) -> Result<SytIter> {
    let shape = blocks.to_skew();
    let size = shape.size();
    if size > DEFAULT_ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            size,
            bound: DEFAULT_ENUMERATION_BOUND,
        });
    }
    Ok(SytIter::new(shape, Some(blocks.clone())))
}

// ---------------------------------------------------------------------------
// Distinguished tableaux

/// Fills successive outermost maximal horizontal strips with the largest
/// remaining values, right to left.
pub fn minmaj_tableau(p: &Partition) -> Tableau {
    let n = p.size();
    let mut pos = vec![(0, 0); n];
    let mut mu: Vec<usize> = p.parts().to_vec();
    let mut next = n;
    while !mu.is_empty() {
        let mut strip: Vec<(usize, usize)> = Vec::new();
        for i in 0..mu.len() {
            let below = mu.get(i + 1).copied().unwrap_or(0);
            strip.extend((below + 1..=mu[i]).map(|c| (i + 1, c)));
        }
        strip.sort_by(|a, b| b.1.cmp(&a.1));
        for cell in strip {
            pos[next - 1] = cell;
            next -= 1;
        }
        mu.remove(0);
    }
    Tableau::from_positions(SkewShape::straight(p.clone()), None, pos)
}

/// Fills successive outermost maximal vertical strips with the largest
/// remaining values, bottom to top.
pub fn maxmaj_tableau(p: &Partition) -> Tableau {
    let n = p.size();
    let mut pos = vec![(0, 0); n];
    let mut cols: Vec<usize> = p.conjugate().parts().to_vec();
    let mut next = n;
    while !cols.is_empty() {
        let mut strip: Vec<(usize, usize)> = Vec::new();
        for j in 0..cols.len() {
            let right = cols.get(j + 1).copied().unwrap_or(0);
            strip.extend((right + 1..=cols[j]).map(|r| (r, j + 1)));
        }
        strip.sort_by(|a, b| b.0.cmp(&a.0));
        for cell in strip {
            pos[next - 1] = cell;
            next -= 1;
        }
        cols.remove(0);
    }
    Tableau::from_positions(SkewShape::straight(p.clone()), None, pos)
}

/// The tableaux excluded from the maj-increasing map, in increasing maj:
/// the max-maj tableau; for rectangles also the min-maj tableau; for rectangles
/// with at least two rows and columns also the max-maj tableau relabelled by the
/// cycle `(2, 3, …, ℓ+1)`.
pub fn exceptional_set(p: &Partition) -> Vec<Tableau> {
    let max = maxmaj_tableau(p);
    let mut out = Vec::new();
    if p.is_rectangle() {
        let min = minmaj_tableau(p);
        if min != max {
            out.push(min);
        }
    }
    if p.is_big_rectangle() {
        let cycle: Vec<usize> = (2..=p.len() + 1).collect();
        out.push(
            max.apply_cycles(&[cycle])
                .expect("cycled max-maj tableau is standard"),
        );
    }
    out.push(max);
    out
}

pub fn is_exceptional(t: &Tableau) -> bool {
    t.shape().is_straight() && exceptional_set(t.shape().outer()).contains(t)
}

/// Canonical representatives of the orbit tableaux of `{λ̄}^d`: tableaux on the
/// orbit shapes whose largest entry lies in one of the first `m/d` blocks.
/// Each comes with its statistic `b(α(μ̄))`.
pub fn canonical_orbit_tableaux(blocks: &BlockShape, d: usize) -> Result<Vec<(Tableau, usize)>> {
    let orbit = blocks.orbit(d)?;
    let n = blocks.n();
    if n == 0 {
        return Err(Error::EmptyShape);
    }
    let limit = blocks.m() / d;
    let mut out = Vec::new();
    for mu in orbit {
        let b = mu.b_alpha();
        for t in enumerate_blocks(&mu)? {
            if t.block_of_value(n).expect("n is placed") < limit {
                out.push((t, b));
            }
        }
    }
    Ok(out)
}
