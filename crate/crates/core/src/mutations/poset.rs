use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::{block_rule, negative_rotations, phi, positive_rotations, BlockRule, Move};
use crate::error::Result;
use crate::par;
use crate::shapes::Partition;
use crate::tableau::{enumerate_straight, is_exceptional, maxmaj_tableau, minmaj_tableau, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PosetOrder {
    Weak,
    Strong,
}

/// A poset on (most of) `SYT(λ)` given by its cover edges, each raising maj by one.
#[derive(Debug, Clone)]
pub struct TableauPoset {
    shape: Partition,
    order: PosetOrder,
    elements: Vec<Tableau>,
    covers: Vec<Vec<usize>>,
}

/// `SYT(λ)`, minus the min- and max-maj tableaux when `λ` is a rectangle with at
/// least two rows and two columns.
fn ground_set(shape: &Partition) -> Result<Vec<Tableau>> {
    let mut all: Vec<Tableau> = enumerate_straight(shape)?.collect();
    if shape.is_big_rectangle() {
        let lo = minmaj_tableau(shape);
        let hi = maxmaj_tableau(shape);
        all.retain(|t| *t != lo && *t != hi);
    }
    Ok(all)
}

fn index_of(elements: &[Tableau]) -> HashMap<Tableau, usize> {
    elements.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect()
}

fn finish(
    shape: &Partition,
    order: PosetOrder,
    elements: Vec<Tableau>,
    edges: impl IntoIterator<Item = (usize, usize)>,
) -> TableauPoset {
    let mut covers = vec![BTreeSet::new(); elements.len()];
    for (a, b) in edges {
        covers[a].insert(b);
    }
    TableauPoset {
        shape: shape.clone(),
        order,
        elements,
        covers: covers.into_iter().map(|s| s.into_iter().collect()).collect(),
    }
}

/// Covers from every rotation, every block rule, and every inverse-transpose block rule.
pub fn strong_poset(shape: &Partition) -> Result<TableauPoset> {
    let elements = ground_set(shape)?;
    let index = index_of(&elements);

    let forward = par::map(&elements, |t| {
        let mut moves: Vec<Move> = positive_rotations(t);
        moves.extend(negative_rotations(t));
        moves.extend(block_rule(t).map(Move::Block));
        moves
            .into_iter()
            .map(|mv| mv.apply(t).expect("applicable moves give standard tableaux"))
            .collect::<Vec<_>>()
    });
    let mut edges = Vec::new();
    for (i, targets) in forward.into_iter().enumerate() {
        for u in targets {
            if let Some(&j) = index.get(&u) {
                edges.push((i, j));
            }
        }
    }

    let conj: Vec<Tableau> = enumerate_straight(&shape.conjugate())?.collect();
    let backward = par::map(&conj, |x| {
        block_rule(x).map(|rule| {
            let y = Move::Block(rule).apply(x).expect("block rules give standard tableaux");
            (y.transpose(), x.transpose())
        })
    });
    for (src, dst) in backward.into_iter().flatten() {
        if let (Some(&i), Some(&j)) = (index.get(&src), index.get(&dst)) {
            edges.push((i, j));
        }
    }
    Ok(finish(shape, PosetOrder::Strong, elements, edges))
}

/// Covers `T → φ(T)` together with `φ(T')' → T'` coming from the conjugate shape.
pub fn weak_poset(shape: &Partition) -> Result<TableauPoset> {
    let elements = ground_set(shape)?;
    let index = index_of(&elements);

    let forward = par::map(&elements, |t| {
        if is_exceptional(t) {
            Ok(None)
        } else {
            phi(t).map(|(_, u)| Some(u))
        }
    });
    let mut edges = Vec::new();
    for (i, u) in forward.into_iter().enumerate() {
        if let Some(u) = u? {
            if let Some(&j) = index.get(&u) {
                edges.push((i, j));
            }
        }
    }

    let conj: Vec<Tableau> = enumerate_straight(&shape.conjugate())?.collect();
    let backward = par::map(&conj, |y| {
        if is_exceptional(y) {
            Ok(None)
        } else {
            phi(y).map(|(_, z)| Some((z.transpose(), y.transpose())))
        }
    });
    for pair in backward {
        if let Some((src, dst)) = pair? {
            if let (Some(&i), Some(&j)) = (index.get(&src), index.get(&dst)) {
                edges.push((i, j));
            }
        }
    }
    Ok(finish(shape, PosetOrder::Weak, elements, edges))
}

impl TableauPoset {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn order(&self) -> PosetOrder {
        self.order
    }

    pub fn elements(&self) -> &[Tableau] {
        &self.elements
    }

    /// Upper covers of element `i`, by index.
    pub fn covers(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.covers
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |&j| (i, j)))
    }

    pub fn edge_count(&self) -> usize {
        self.covers.iter().map(Vec::len).sum()
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.elements.iter().position(|x| x == t)
    }

    /// `a ≤ b` in the transitive closure of the cover relation.
    pub fn less_equal(&self, a: usize, b: usize) -> bool {
        let mut seen = vec![false; self.elements.len()];
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            if x == b {
                return true;
            }
            if std::mem::replace(&mut seen[x], true) {
                continue;
            }
            stack.extend(self.covers[x].iter().copied());
        }
        false
    }

    fn label(&self, i: usize) -> String {
        let word = self.elements[i].reading_word();
        let sep = if self.elements[i].n() >= 10 { " " } else { "" };
        word.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep)
    }

    /// Graphviz digraph; nodes carry the row reading word and a `rank` attribute equal to maj.
    pub fn to_dot(&self) -> String {
        let mut out = format!(
            "digraph \"{}({})\" {{\n  rankdir=BT;\n",
            match self.order {
                PosetOrder::Weak => "weak",
                PosetOrder::Strong => "strong",
            },
            self.shape
        );
        for (i, t) in self.elements.iter().enumerate() {
            out.push_str(&format!(
                "  t{i} [label=\"{}\", rank={}];\n",
                self.label(i),
                t.maj()
            ));
        }
        for (i, j) in self.edges() {
            out.push_str(&format!("  t{i} -> t{j};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Adjacency list keyed by reading word.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Node {
            covers: Vec<String>,
            maj: usize,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            nodes: BTreeMap<String, Node>,
            order: PosetOrder,
            shape: &'a Partition,
        }
        let nodes = (0..self.elements.len())
            .map(|i| {
                let mut covers: Vec<String> = self.covers[i].iter().map(|&j| self.label(j)).collect();
                covers.sort();
                (
                    self.label(i),
                    Node {
                        covers,
                        maj: self.elements[i].maj(),
                    },
                )
            })
            .collect();
        serde_json::to_string(&Doc {
            nodes,
            order: self.order,
            shape: &self.shape,
        })
        .expect("serializable")
    }
}

/// Outcome of checking that a poset is graded by maj.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub elements: usize,
    pub edges: usize,
    /// Subtracted from maj to get the rank.
    pub rank_offset: usize,
    pub minimal_elements: usize,
    pub maximal_elements: usize,
    pub covers_raise_maj_by_one: bool,
    pub minimum_has_rank_zero: bool,
    pub ranked: bool,
}

/// Checks unique minimum and maximum, that every cover raises maj by one, and
/// that the minimum sits at rank zero for `rank = maj - b(λ)` (minus two more
/// for rectangles with at least two rows and columns). An empty poset passes
/// vacuously.
pub fn verify_ranked(p: &TableauPoset) -> RankReport {
    let n = p.elements.len();
    let offset = p.shape.b() + if p.shape.is_big_rectangle() { 2 } else { 0 };
    let mut has_lower = vec![false; n];
    let mut covers_ok = true;
    for (i, j) in p.edges() {
        has_lower[j] = true;
        covers_ok &= p.elements[j].maj() == p.elements[i].maj() + 1;
    }
    let minimal: Vec<usize> = (0..n).filter(|&i| !has_lower[i]).collect();
    let maximal = (0..n).filter(|&i| p.covers[i].is_empty()).count();
    let min_ok = minimal.len() == 1 && p.elements[minimal[0]].maj() == offset;
    let ranked = n == 0 || (covers_ok && minimal.len() == 1 && maximal == 1 && min_ok);
    RankReport {
        elements: n,
        edges: p.edge_count(),
        rank_offset: offset,
        minimal_elements: minimal.len(),
        maximal_elements: maximal,
        covers_raise_maj_by_one: covers_ok,
        minimum_has_rank_zero: n == 0 || min_ok,
        ranked,
    }
}

fn in_ground_set(t: &Tableau) -> bool {
    let p = t.shape().outer();
    t.shape().is_straight() && !(p.is_big_rectangle() && (*t == minmaj_tableau(p) || *t == maxmaj_tableau(p)))
}

fn push_unique(out: &mut Vec<Tableau>, t: Tableau) {
    if !out.contains(&t) {
        out.push(t);
    }
}

/// Every block rule whose cycles only touch values in `1..=n`.
fn candidate_rules(n: usize) -> Vec<BlockRule> {
    let mut out = Vec::new();
    for a in 2..=n {
        for b in 2..=n / a + 1 {
            let c = a * b;
            if c < n {
                out.push(BlockRule::B1 { a, b, c });
            }
            for c in (b - 1) * a + 1..c {
                if c <= n {
                    out.push(BlockRule::B2 { a, b, c, k: c - (b - 1) * a });
                }
            }
        }
        for k in 1..=n {
            if a + k + 1 <= n {
                out.push(BlockRule::B3 { a, k });
            }
        }
    }
    for k in 2..=n {
        for l in 3..=n {
            if k * l < n {
                out.push(BlockRule::B4 { k, l });
            }
        }
        if 2 * k - 1 <= n {
            out.push(BlockRule::B5 { k });
        }
    }
    out
}

/// Upper covers of `t` in the strong order: rotations, the block rule, and inverse-transpose
/// block rules, restricted to the ground set.
pub fn strong_covers(t: &Tableau) -> Vec<Tableau> {
    if !in_ground_set(t) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut moves: Vec<Move> = positive_rotations(t);
    moves.extend(negative_rotations(t));
    moves.extend(block_rule(t).map(Move::Block));
    for u in moves.into_iter().filter_map(|mv| mv.apply(t).ok()) {
        push_unique(&mut out, u);
    }
    let tt = t.transpose();
    for rule in candidate_rules(t.n()) {
        let Ok(x) = Move::InverseTransposeBlock(rule).apply(t).map(|u| u.transpose()) else { continue };
        if block_rule(&x) == Some(rule) && Move::Block(rule).apply(&x).is_ok_and(|y| y == tt) {
            push_unique(&mut out, x.transpose());
        }
    }
    out.retain(in_ground_set);
    out
}

/// Upper covers of `t` in the weak order: `φ(t)` and every `X'` with `φ(X)' = t`.
pub fn weak_covers(t: &Tableau) -> Result<Vec<Tableau>> {
    if !in_ground_set(t) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    if !is_exceptional(t) {
        out.push(phi(t)?.1);
    }
    let tt = t.transpose();
    for x in enumerate_straight(&t.shape().outer().conjugate())? {
        if !is_exceptional(&x) && phi(&x)?.1 == tt {
            push_unique(&mut out, x.transpose());
        }
    }
    out.retain(in_ground_set);
    Ok(out)
}
