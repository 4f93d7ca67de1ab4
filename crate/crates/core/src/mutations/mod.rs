//! Maj-increasing mutations of standard tableaux: rotations, the block rules
//! B1–B5, the map `φ`, and the posets they generate.

mod poset;

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableau::{is_exceptional, Tableau};

pub use poset::{
    strong_covers, strong_poset, verify_ranked, weak_covers, weak_poset, PosetOrder, RankReport, TableauPoset,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RotationSign {
    Positive,
    Negative,
}

/// A block rule together with the parameters read off the tableau it applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BlockRule {
    B1 { a: usize, b: usize, c: usize },
    B2 { a: usize, b: usize, c: usize, k: usize },
    B3 { a: usize, k: usize },
    B4 { k: usize, l: usize },
    B5 { k: usize },
}

impl BlockRule {
    /// The relabelling, as disjoint cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        match *self {
            BlockRule::B1 { a, c, .. } => vec![(2..=a + 1).collect(), vec![c, c + 1]],
            BlockRule::B2 { a, b, c, .. } => {
                let mut cyc: Vec<usize> = (2..=a).collect();
                cyc.extend((2..b).map(|i| i * a));
                cyc.extend(((b - 1) * a + 1..=c).rev());
                cyc.extend((1..b - 1).rev().map(|i| i * a + 1));
                vec![cyc]
            }
            BlockRule::B3 { a, k } => {
                let mut cyc: Vec<usize> = (2..=a).collect();
                cyc.push(a + k + 1);
                cyc.push(a + 1);
                vec![cyc]
            }
            BlockRule::B4 { k, l } => vec![
                (2..=k + 1).rev().collect(),
                (k * (l - 1) + 1..=k * l + 1).collect(),
            ],
            BlockRule::B5 { k } => {
                let mut cyc: Vec<usize> = (2..=k).rev().collect();
                cyc.extend(k + 1..=2 * k - 1);
                vec![cyc]
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            BlockRule::B1 { .. } => "B1",
            BlockRule::B2 { .. } => "B2",
            BlockRule::B3 { .. } => "B3",
            BlockRule::B4 { .. } => "B4",
            BlockRule::B5 { .. } => "B5",
        }
    }
}

/// One maj-raising move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Move {
    /// `[start, end]` rotation whose moving descent is `moving_descent`.
    Rotation {
        sign: RotationSign,
        start: usize,
        end: usize,
        moving_descent: usize,
    },
    Block(BlockRule),
    /// Transpose, undo the given block rule (whose parameters refer to the
    /// transposed preimage), transpose back.
    InverseTransposeBlock(BlockRule),
}

impl Move {
    pub fn apply(&self, t: &Tableau) -> Result<Tableau> {
        match self {
            Move::Rotation {
                sign, start, end, ..
            } => t.apply_cycles(&[rotation_cycle(*sign, *start, *end)]),
            Move::Block(rule) => t.apply_cycles(&rule.cycles()),
            Move::InverseTransposeBlock(rule) => {
                let inverse: Vec<Vec<usize>> = rule
                    .cycles()
                    .into_iter()
                    .map(|mut c| {
                        c.reverse();
                        c
                    })
                    .collect();
                Ok(t.transpose().apply_cycles(&inverse)?.transpose())
            }
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Rotation {
                sign,
                start,
                end,
                moving_descent,
            } => {
                let s = match sign {
                    RotationSign::Positive => '+',
                    RotationSign::Negative => '-',
                };
                write!(f, "{s}[{start},{end}] (j={moving_descent})")
            }
            Move::Block(r) => write!(f, "{} {r:?}", r.name()),
            Move::InverseTransposeBlock(r) => write!(f, "inverse-transpose {} {r:?}", r.name()),
        }
    }
}

fn rotation_cycle(sign: RotationSign, i: usize, k: usize) -> Vec<usize> {
    match sign {
        RotationSign::Positive => (i..=k).collect(),
        RotationSign::Negative => (i..=k).rev().collect(),
    }
}

// ---------------------------------------------------------------------------
// Geometry helpers

fn in_bounding_rect(t: &Tableau, v: usize, x: usize, y: usize) -> bool {
    let (Some(p), Some(a), Some(b)) = (t.position(v), t.position(x), t.position(y)) else {
        return false;
    };
    let (r0, r1) = (a.0.min(b.0), a.0.max(b.0));
    let (c0, c1) = (a.1.min(b.1), a.1.max(b.1));
    (r0..=r1).contains(&p.0) && (c0..=c1).contains(&p.1)
}

/// `x` strictly north-east of `y`.
fn strictly_ne(t: &Tableau, x: usize, y: usize) -> bool {
    let (a, b) = (t.position(x).unwrap(), t.position(y).unwrap());
    a.0 < b.0 && a.1 > b.1
}

// ---------------------------------------------------------------------------
// Rotations

/// Moving descent of the positive `[i, k]` rotation, if it applies.
pub fn positive_rotation_descent(t: &Tableau, i: usize, k: usize) -> Option<usize> {
    let n = t.n();
    if !(1 <= i && i < k && k <= n) {
        return None;
    }
    let inside: Vec<usize> = (i..k).filter(|&x| t.is_descent(x)).collect();
    let j = match inside.as_slice() {
        [] if i >= 2 && t.is_descent(i - 1) => i,
        [s] => s + 1,
        _ => return None,
    };
    if i < j {
        if !strictly_ne(t, i, k) || in_bounding_rect(t, i - 1, i, k) {
            return None;
        }
    } else if !in_bounding_rect(t, i - 1, i, k) {
        return None;
    }
    if j < k {
        if !strictly_ne(t, k, k - 1) || in_bounding_rect(t, k + 1, k, k - 1) {
            return None;
        }
    } else if !in_bounding_rect(t, k + 1, k, k - 1) {
        return None;
    }
    Some(j)
}

/// Moving descent of the negative `[i, k]` rotation, if it applies.
pub fn negative_rotation_descent(t: &Tableau, i: usize, k: usize) -> Option<usize> {
    let n = t.n();
    if !(1 <= i && i < k && k <= n) {
        return None;
    }
    let gaps: Vec<usize> = (i..k).filter(|&x| !t.is_descent(x)).collect();
    let j = match gaps.as_slice() {
        [] if k < n && !t.is_descent(k) => k,
        [s] => *s,
        _ => return None,
    };
    if i < j {
        // i + 1 strictly south-west of i
        if !strictly_ne(t, i, i + 1) || in_bounding_rect(t, i - 1, i, i + 1) {
            return None;
        }
    } else if !in_bounding_rect(t, i - 1, i, i + 1) {
        return None;
    }
    if j < k {
        if !strictly_ne(t, k, i) || in_bounding_rect(t, k + 1, i, k) {
            return None;
        }
    } else if !in_bounding_rect(t, k + 1, i, k) {
        return None;
    }
    Some(j)
}

fn rotation_move(t: &Tableau, sign: RotationSign, i: usize, k: usize) -> Option<Move> {
    let j = match sign {
        RotationSign::Positive => positive_rotation_descent(t, i, k),
        RotationSign::Negative => negative_rotation_descent(t, i, k),
    }?;
    Some(Move::Rotation {
        sign,
        start: i,
        end: k,
        moving_descent: j,
    })
}

/// Every positive rotation applicable to `t`, ordered by `(start, end)`.
pub fn positive_rotations(t: &Tableau) -> Vec<Move> {
    all_rotations(t, RotationSign::Positive)
}

/// Every negative rotation applicable to `t`, ordered by `(start, end)`.
pub fn negative_rotations(t: &Tableau) -> Vec<Move> {
    all_rotations(t, RotationSign::Negative)
}

fn all_rotations(t: &Tableau, sign: RotationSign) -> Vec<Move> {
    let n = t.n();
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |k| (i, k)))
        .filter_map(|(i, k)| rotation_move(t, sign, i, k))
        .collect()
}

/// The transposition `(x, x+1)`, read as whichever rotation it is.
fn adjacent_swap(t: &Tableau, x: usize) -> Option<Move> {
    rotation_move(t, RotationSign::Positive, x, x + 1)
        .or_else(|| rotation_move(t, RotationSign::Negative, x, x + 1))
}

// ---------------------------------------------------------------------------
// Block rules

/// `(a, b, c)`: `c` is the largest value for which `T|[c]` agrees with the
/// row-by-row filling of an `a`-column rectangle, and `b = ⌈c / a⌉`.
pub fn rectangle_prefix(t: &Tableau) -> (usize, usize, usize) {
    let n = t.n();
    let mut a = 0;
    while a < n && t.position(a + 1) == Some((1, a + 1)) {
        a += 1;
    }
    if a == 0 {
        return (0, 0, 0);
    }
    let mut c = a;
    while c < n && t.position(c + 1) == Some((c / a + 1, c % a + 1)) {
        c += 1;
    }
    (a, c.div_ceil(a), c)
}

fn entry(t: &Tableau, r: usize, c: usize) -> Option<usize> {
    t.get(r, c)
}

/// All block rules whose hypotheses hold for `t` (at most one is expected).
pub fn matching_block_rules(t: &Tableau) -> Vec<BlockRule> {
    let mut out = Vec::new();
    if !t.shape().is_straight() || is_exceptional(t) || t.n() < 3 || t.is_descent(1) {
        return out;
    }
    let (a, b, c) = rectangle_prefix(t);
    if a < 2 || b < 2 {
        return out;
    }
    if c == a * b
        && entry(t, 1, a + 1) == Some(c + 1)
        && entry(t, 2, a + 1) == Some(c + 2)
        && a + 2 < c
    {
        out.push(BlockRule::B1 { a, b, c });
    }
    if c < a * b && c >= a + 2 {
        let k = c - (b - 1) * a;
        out.push(BlockRule::B2 { a, b, c, k });
    }
    if a >= 3 && c == a + 1 {
        if let Some(t22) = entry(t, 2, 2) {
            if t22 >= a + 3 {
                let k = t22 - a - 1;
                let column = (1..=k).all(|i| entry(t, i + 1, 1) == Some(a + i));
                if column && entry(t, 3, 2) == Some(a + k + 2) {
                    out.push(BlockRule::B3 { a, k });
                }
            }
        }
    }
    if a == 2 {
        let mut r = 1;
        while entry(t, r + 1, 1) == Some(r + 2) {
            r += 1;
        }
        let col2 = |k: usize| (2..=k).all(|i| entry(t, i, 2) == Some(k + i));
        // B4 with k = r: columns 3..=l hold consecutive runs of length k.
        if r >= 2 && col2(r) {
            let k = r;
            let mut l = 2;
            while (1..=k).all(|i| entry(t, i, l + 1) == Some(l * k + i)) {
                l += 1;
            }
            if l >= 3 && entry(t, k + 1, 1) == Some(k * l + 1) && entry(t, k + 1, 2) != Some(k * l + 2) {
                out.push(BlockRule::B4 { k, l });
            }
        }
        // B5 with k = r + 1.
        let k = r + 1;
        if k > 3
            && c == 3
            && (2..k).all(|i| entry(t, i, 2) == Some(k + i - 1))
            && entry(t, k, 1) == Some(2 * k - 1)
            && entry(t, k, 2) != Some(2 * k)
        {
            out.push(BlockRule::B5 { k });
        }
    }
    out
}

/// The block rule applicable to `t`, if any.
pub fn block_rule(t: &Tableau) -> Option<BlockRule> {
    matching_block_rules(t).into_iter().next()
}

// ---------------------------------------------------------------------------
// The map φ

/// Largest `z` such that `T|[z]` is an initial segment of some max-maj tableau,
/// together with the vertical-strip index of each of `1..=z`.
fn maxmaj_prefix(t: &Tableau) -> (usize, Vec<usize>, Vec<usize>) {
    let n = t.n();
    let mut heights: Vec<usize> = Vec::new();
    let mut pending: VecDeque<(usize, usize)> = VecDeque::new();
    let mut strip_of = Vec::new();
    let mut strip = 0;
    for v in 1..=n {
        let p = t.position(v).expect("value in range");
        let ok = if let Some(&front) = pending.front() {
            pending.pop_front();
            p == front
        } else if p == (heights.first().copied().unwrap_or(0) + 1, 1) {
            true
        } else if !heights.is_empty() && p == (1, heights.len() + 1) {
            strip += 1;
            let r = heights.len();
            let mut cells = VecDeque::new();
            for j in (2..=r + 1).rev() {
                let old = if j - 1 < r { heights[j - 1] } else { 0 };
                let new = heights[j - 2];
                cells.extend((old + 1..=new).map(|row| (row, j)));
            }
            cells.pop_front();
            pending = cells;
            true
        } else {
            false
        };
        if !ok {
            break;
        }
        if heights.len() < p.1 {
            heights.push(0);
        }
        heights[p.1 - 1] = p.0;
        strip_of.push(strip);
    }
    (strip_of.len(), strip_of, heights)
}

/// Negative rotation ending at the max-maj prefix bound `z`.
fn maxmaj_prefix_rotation(t: &Tableau) -> Option<Move> {
    let (z, strip_of, heights) = maxmaj_prefix(t);
    if z == 0 {
        return None;
    }
    let row_len = |r: usize| heights.iter().filter(|&&h| h >= r).count();
    let zr = t.position(z)?.0;
    let lowest = heights[0];
    let (i, j) = if zr < lowest {
        let r = (zr + 1..=lowest).find(|&r| row_len(r + 1) < row_len(r))?;
        let i = t.get(r, row_len(r))?;
        let s = strip_of[i - 1];
        let j = (1..=z).filter(|&v| strip_of[v - 1] == s).max()?;
        (i, j)
    } else {
        let r = t.position(z + 1)?.0.checked_sub(1)?;
        let len = row_len(r);
        if r == 0 || len == 0 {
            return None;
        }
        (t.get(r, len)?, z)
    };
    if i >= z {
        return None;
    }
    let mv = rotation_move(t, RotationSign::Negative, i, z)?;
    match mv {
        Move::Rotation { moving_descent, .. } if moving_descent == j => Some(mv),
        _ => None,
    }
}

/// Case `1, 2 ∉ Des(T)`.
fn phi_top_row(t: &Tableau) -> Option<Move> {
    let (a, b, c) = rectangle_prefix(t);
    let p = t.position(a + 2)?;
    if p == (1, a + 1) {
        maxmaj_prefix_rotation(t)
    } else if p == (2, 2) {
        rectangle_step(t, a, b, c)
    } else if p == (3, 1) {
        let k = (2..).find(|&j| !t.is_descent(a + j))?;
        let q = t.position(a + k + 1)?;
        if q == (1, a + 1) {
            maxmaj_prefix_rotation(t)
        } else if q == (2, 2) {
            if t.get(3, 2) == Some(a + k + 2) {
                Some(Move::Block(BlockRule::B3 { a, k }))
            } else {
                adjacent_swap(t, a + k)
            }
        } else {
            None
        }
    } else {
        None
    }
}

/// Subcases keyed on whether `T|[c]` fills the `a × b` rectangle.
fn rectangle_step(t: &Tableau, a: usize, b: usize, c: usize) -> Option<Move> {
    if c == a * b {
        if t.position(c + 1) != Some((1, a + 1)) {
            return None;
        }
        if t.get(2, a + 1) == Some(c + 2) && a + 2 < c {
            Some(Move::Block(BlockRule::B1 { a, b, c }))
        } else {
            let i = t.get(b, 1)?;
            rotation_move(t, RotationSign::Positive, i, c + 1)
        }
    } else {
        let k = c - (b - 1) * a;
        Some(Move::Block(BlockRule::B2 { a, b, c, k }))
    }
}

/// Case `1 ∉ Des(T)`, `2 ∈ Des(T)`.
fn phi_first_column(t: &Tableau) -> Option<Move> {
    let n = t.n();
    let k = (3..=n).find(|&j| !t.is_descent(j))?;
    let p = t.position(k + 1)?;
    if p == (1, 3) {
        return maxmaj_prefix_rotation(t);
    }
    if p != (2, 2) {
        return None;
    }
    let mut ell = k;
    while t.position(ell + 1) == Some((ell + 2 - k, 2)) {
        ell += 1;
    }
    let h = k - 1;
    if ell < 2 * h {
        return rotation_move(t, RotationSign::Negative, k, ell);
    }
    match t.position(ell + 1)? {
        (1, 3) => {
            // Columns of height h filled consecutively, left to right.
            let mut r = 2;
            loop {
                let p = r * h;
                match t.position(p + 1)? {
                    pos if pos == (1, r + 1) => {
                        let mut q = p + 1;
                        while q - p < h && t.position(q + 1) == Some((q - p + 1, r + 1)) {
                            q += 1;
                        }
                        if q < (r + 1) * h {
                            if h == 2 && r == 2 {
                                // T|[4] is the 2 x 2 square: the rectangle case.
                                let (a, b, c) = rectangle_prefix(t);
                                return rectangle_step(t, a, b, c);
                            }
                            return rotation_move(t, RotationSign::Negative, p, q);
                        }
                        r += 1;
                    }
                    pos if pos == (k, 1) => {
                        return if t.position(p + 2) == Some((k, 2)) {
                            adjacent_swap(t, p)
                        } else {
                            Some(Move::Block(BlockRule::B4 { k: h, l: r }))
                        };
                    }
                    _ => return None,
                }
            }
        }
        pos if pos == (k, 1) => {
            if k > 3 {
                if t.get(k, 2) != Some(ell + 2) {
                    Some(Move::Block(BlockRule::B5 { k }))
                } else {
                    adjacent_swap(t, ell)
                }
            } else {
                let (a, b, c) = rectangle_prefix(t);
                rectangle_step(t, a, b, c)
            }
        }
        _ => None,
    }
}

/// `φ(T)`: a tableau of the same shape with major index one larger, together
/// with the move producing it. Defined off the exceptional set.
pub fn phi(t: &Tableau) -> Result<(Move, Tableau)> {
    if !t.shape().is_straight() {
        return Err(Error::NotStraight);
    }
    if is_exceptional(t) {
        return Err(Error::ExceptionalTableau);
    }
    let mv = if t.is_descent(1) {
        maxmaj_prefix_rotation(t)
    } else if !t.is_descent(2) {
        phi_top_row(t)
    } else {
        phi_first_column(t)
    };
    let fail = || Error::NoRuleApplies(t.to_string());
    let mv = mv.ok_or_else(fail)?;
    let out = mv.apply(t).map_err(|_| fail())?;
    if out.maj() != t.maj() + 1 {
        return Err(fail());
    }
    Ok((mv, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn spans(moves: &[Move]) -> Vec<(usize, usize)> {
        moves
            .iter()
            .map(|m| match m {
                Move::Rotation { start, end, .. } => (*start, *end),
                _ => unreachable!(),
            })
            .collect()
    }

    #[test]
    fn positive_rotation_example() {
        let x = t("1,2,6,7,9/3,4,8,13/5,11,12,15/10,14");
        assert_eq!(
            spans(&positive_rotations(&x)),
            vec![(5, 6), (8, 9), (8, 10), (8, 11), (9, 13)]
        );
    }

    #[test]
    fn negative_rotation_example() {
        let x = t("1,3,8,10,15/2,4,9,11/5,7,13,14/6,12");
        assert_eq!(spans(&negative_rotations(&x)), vec![(4, 6), (6, 7), (11, 12)]);
    }

    #[test]
    fn rotation_free_examples() {
        for s in ["1,2,3,4,5/6,7,8,9/10,11,12,13/14,15", "1,2,3,8,12/4,6,9,13/5,7,10,14/11,15"] {
            let x = t(s);
            assert!(positive_rotations(&x).is_empty());
            assert!(negative_rotations(&x).is_empty());
        }
    }

    #[test]
    fn prefix_parameters() {
        assert_eq!(rectangle_prefix(&t("1,2,3,4,5,16/6,7,8,9,10,17/11,12,13,14,15")), (5, 3, 15));
        assert_eq!(rectangle_prefix(&t("1,2,3,4,5/6,7,8,9,10/11,12,13")), (5, 3, 13));
        assert_eq!(rectangle_prefix(&t("1,2,3,4/5,9/6,10/7/8")), (4, 2, 5));
        assert_eq!(rectangle_prefix(&t("1,2,7,10/3,5,8,11/4,6,9,12/13")), (2, 2, 3));
    }

    fn check_rule(before: &str, after: &str, name: &str) {
        let x = t(before);
        let rule = block_rule(&x).unwrap_or_else(|| panic!("no rule for {before}"));
        assert_eq!(rule.name(), name);
        assert_eq!(matching_block_rules(&x).len(), 1);
        let y = Move::Block(rule).apply(&x).unwrap();
        assert_eq!(y, t(after));
        assert_eq!(y.maj(), x.maj() + 1);
    }

    #[test]
    fn block_rule_examples() {
        check_rule("1,2,3,7/4,5,6,8", "1,3,4,6/2,5,7,8", "B1");
        check_rule("1,2,3,4/5,6,7", "1,3,4,7/2,5,6", "B2");
        check_rule("1,2,3/4,6/5,7", "1,3,6/2,4/5,7", "B3");
        check_rule("1,2,7/3,5,8/4,6,9/10", "1,4,8/2,5,9/3,6,10/7", "B4");
        check_rule("1,2/3,5/4,6/7", "1,5/2,6/3,7/4", "B5");
        check_rule(
            "1,2,3,4,5,16/6,7,8,9,10,17/11,12,13,14,15",
            "1,3,4,5,6,15/2,7,8,9,10,17/11,12,13,14,16",
            "B1",
        );
        check_rule("1,2,3,4,5/6,7,8,9,10/11,12,13", "1,3,4,5,10/2,7,8,9,13/6,11,12", "B2");
        check_rule("1,2,3,4/5,9/6,10/7/8", "1,3,4,9/2,5/6,10/7/8", "B3");
        check_rule("1,2,7,10/3,5,8,11/4,6,9,12/13", "1,4,7,11/2,5,8,12/3,6,9,13/10", "B4");
        check_rule("1,2/3,6/4,7/5,8/9", "1,6/2,7/3,8/4,9/5", "B5");
    }

    #[test]
    fn maxmaj_prefix_rotations() {
        let x = t("1,3,6,11/2,4,7,12/5,8/9,13/10");
        let (mv, y) = phi(&x).unwrap();
        assert_eq!(
            mv,
            Move::Rotation {
                sign: RotationSign::Negative,
                start: 8,
                end: 12,
                moving_descent: 10
            }
        );
        assert_eq!(y, t("1,3,6,10/2,4,7,11/5,12/8,13/9"));

        let x = t("1,3,6/2,4,7/5,8,11/9/10");
        let (mv, y) = phi(&x).unwrap();
        assert!(matches!(mv, Move::Rotation { start: 7, end: 10, .. }));
        assert_eq!(y, t("1,3,6/2,4,10/5,7,11/8/9"));
    }

    #[test]
    fn phi_rejects_exceptional() {
        let x = t("1,4,7/2,5,8/3,6,9");
        assert_eq!(phi(&x), Err(Error::ExceptionalTableau));
    }
}
