//! Batch verification of the closed formulas against brute-force oracles.
//!
//! Each check sweeps a family of shapes in parallel (see [`crate::par`]) and
//! returns a [`CheckReport`] listing any counterexamples.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::deformed::{
    deformed_multinomial, deformed_multinomial_by_partial_sums, deformed_multinomial_by_ratio,
    partial_sum_multinomial,
};
use crate::genfun::{
    gmdn_fake_degree, gmdn_fake_degree_by_orbit_sum, stanley, syt_gf, wreath_fake_degree,
};
use crate::mutations::{
    block_rule, negative_rotations, phi, positive_rotations, strong_poset, verify_ranked,
    weak_poset, Move,
};
use crate::par;
use crate::qpoly::{q_binomial, q_factorial, q_integer, QPoly};
use crate::shapes::{weak_compositions, BlockShape, Partition, SkewShape};
use crate::tableau::{
    canonical_orbit_tableaux, enumerate_blocks, enumerate_straight, exceptional_set, Tableau,
};
use crate::zeros::{support_des, support_gmdn, support_type_a, support_wreath, verify_support};

const MAX_REPORTED: usize = 20;

/// Result of one verification sweep.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub cases: usize,
    pub elapsed_ms: u128,
    pub failures: Vec<String>,
    pub name: &'static str,
    pub time_limit_ms: Option<u128>,
}

impl CheckReport {
    fn new(name: &'static str, cases: usize, failures: Vec<String>, start: Instant, limit: Option<Duration>) -> Self {
        let mut failures = failures;
        let total = failures.len();
        if total > MAX_REPORTED {
            failures.truncate(MAX_REPORTED);
            failures.push(format!("... {} more", total - MAX_REPORTED));
        }
        CheckReport {
            cases,
            elapsed_ms: start.elapsed().as_millis(),
            failures,
            name,
            time_limit_ms: limit.map(|d| d.as_millis()),
        }
    }

    pub fn within_time(&self) -> bool {
        self.time_limit_ms.map_or(true, |l| self.elapsed_ms <= l)
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.within_time()
    }

    /// One-line summary: `PASS name (cases, time)` or `FAIL …` with the first counterexample.
    pub fn summary(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{status} {} ({} cases, {} ms",
            self.name, self.cases, self.elapsed_ms
        );
        if let Some(l) = self.time_limit_ms {
            s.push_str(&format!(", limit {l} ms"));
        }
        s.push(')');
        if let Some(f) = self.failures.first() {
            s.push_str(&format!(": {f}"));
        } else if !self.within_time() {
            s.push_str(": time limit exceeded");
        }
        s
    }
}

fn partitions_up_to(max_n: usize) -> Vec<Partition> {
    (0..=max_n).flat_map(Partition::all).collect()
}

fn collect_failures(results: Vec<Vec<String>>) -> Vec<String> {
    results.into_iter().flatten().collect()
}

/// Generating function of a statistic over a set of tableaux.
fn gf_of(values: impl Iterator<Item = usize>) -> QPoly {
    let mut c: Vec<BigInt> = Vec::new();
    for v in values {
        if c.len() <= v {
            c.resize(v + 1, BigInt::from(0));
        }
        c[v] += 1;
    }
    QPoly::from_dense(c)
}

/// maj generating function by enumeration equals the expanded hook product.
pub fn check_stanley(max_n: usize) -> CheckReport {
    let start = Instant::now();
    let shapes = partitions_up_to(max_n);
    let fails = par::map(&shapes, |p| {
        let brute = gf_of(enumerate_straight(p).expect("within bound").map(|t| t.maj()));
        if brute == syt_gf(p) {
            vec![]
        } else {
            vec![format!("{p}: enumeration {brute} vs formula {}", syt_gf(p))]
        }
    });
    CheckReport::new("stanley-vs-enumeration", shapes.len(), collect_failures(fails), start, Some(Duration::from_secs(120)))
}

/// Predicted maj support equals the set of maj values actually attained.
pub fn check_type_a_support(max_n: usize) -> CheckReport {
    let start = Instant::now();
    let shapes = partitions_up_to(max_n);
    let fails = par::map(&shapes, |p| {
        let seen: BTreeSet<usize> = enumerate_straight(p).expect("within bound").map(|t| t.maj()).collect();
        let pred = support_type_a(p);
        let brute: Vec<usize> = seen.into_iter().collect();
        let mut fails = Vec::new();
        if pred.degrees != brute {
            fails.push(format!("{p}: predicted {:?}, attained {:?}", pred.degrees, brute));
        }
        let (lo, hi) = (p.b(), (p.size() * p.size().saturating_sub(1) / 2).saturating_sub(p.conjugate().b()));
        let gaps: Vec<usize> = (lo..=hi).filter(|k| brute.binary_search(k).is_err()).collect();
        let mut expected_gaps = if p.is_big_rectangle() { vec![lo + 1, hi - 1] } else { vec![] };
        expected_gaps.dedup();
        if gaps != expected_gaps {
            fails.push(format!("{p}: internal zeros at {gaps:?}"));
        }
        fails
    });
    CheckReport::new("type-a-support", shapes.len(), collect_failures(fails), start, None)
}

/// `φ` is defined exactly off the exceptional set and raises maj by one.
pub fn check_phi(max_n: usize) -> CheckReport {
    let start = Instant::now();
    let shapes: Vec<Partition> = partitions_up_to(max_n).into_iter().filter(|p| !p.is_empty()).collect();
    let results = par::map(&shapes, |p| {
        let ex = exceptional_set(p);
        let mut fails = Vec::new();
        let mut count = 0;
        for t in enumerate_straight(p).expect("within bound") {
            count += 1;
            let is_ex = ex.contains(&t);
            match (phi(&t), is_ex) {
                (Ok((_, u)), false) => {
                    if u.shape() != t.shape() || u.maj() != t.maj() + 1 {
                        fails.push(format!("{p}: φ({t}) = {u} has maj {}", u.maj()));
                    }
                }
                (Err(crate::Error::ExceptionalTableau), true) => {}
                (r, _) => fails.push(format!("{p}: φ({t}) gave {:?} (exceptional: {is_ex})", r.map(|x| x.1.to_string()))),
            }
        }
        (count, fails)
    });
    let cases = results.iter().map(|r| r.0).sum();
    let fails = results.into_iter().flat_map(|r| r.1).collect();
    CheckReport::new("phi-total-and-maj-plus-one", cases, fails, start, None)
}

/// Both posets are graded with unique extremes, every weak cover lies in the
/// strong order, and the `(3,2,1)` digraph has 16 nodes.
pub fn check_posets(max_n: usize) -> CheckReport {
    let start = Instant::now();
    let shapes: Vec<Partition> = partitions_up_to(max_n).into_iter().filter(|p| !p.is_empty()).collect();
    let mut fails = collect_failures(par::map(&shapes, |p| {
        let mut fails = Vec::new();
        let weak = match weak_poset(p) {
            Ok(w) => w,
            Err(e) => return vec![format!("{p}: weak poset failed: {e}")],
        };
        let strong = strong_poset(p).expect("within bound");
        for (name, poset) in [("weak", &weak), ("strong", &strong)] {
            let r = verify_ranked(poset);
            if !r.ranked {
                fails.push(format!("{p}: {name} poset not graded: {r:?}"));
            }
        }
        for (a, b) in weak.edges() {
            if !strong.less_equal(a, b) {
                fails.push(format!(
                    "{p}: weak cover {} -> {} missing from strong order",
                    weak.elements()[a],
                    weak.elements()[b]
                ));
            }
        }
        fails
    }));
    if max_n >= 6 {
        let p: Partition = "3,2,1".parse().expect("valid");
        match weak_poset(&p) {
            Ok(w) => {
                let nodes = w.to_dot().lines().filter(|l| l.contains("[label=")).count();
                if nodes != 16 {
                    fails.push(format!("(3,2,1) digraph has {nodes} nodes"));
                }
            }
            Err(e) => fails.push(format!("(3,2,1) weak poset failed: {e}")),
        }
    }
    CheckReport::new("posets-graded", shapes.len(), fails, start, None)
}

/// des support is the full interval (straight shapes), and maj - des has no gaps.
pub fn check_des(max_n: usize, maj_minus_des_n: usize) -> CheckReport {
    let start = Instant::now();
    let shapes = partitions_up_to(max_n);
    let fails = par::map(&shapes, |p| {
        let mut fails = Vec::new();
        let tabs: Vec<Tableau> = enumerate_straight(p).expect("within bound").collect();
        let des: BTreeSet<usize> = tabs.iter().map(Tableau::des).collect();
        let pred = support_des(&SkewShape::straight(p.clone()));
        let got: Vec<usize> = des.into_iter().collect();
        if pred.degrees != got {
            fails.push(format!("{p}: des predicted {:?}, attained {got:?}", pred.degrees));
        }
        if p.size() <= maj_minus_des_n {
            let v: BTreeSet<usize> = tabs.iter().map(|t| t.maj() - t.des()).collect();
            let (lo, hi) = (*v.first().unwrap(), *v.last().unwrap());
            if v.len() != hi - lo + 1 {
                fails.push(format!("{p}: maj-des values {v:?} have a gap"));
            }
        }
        fails
    });
    CheckReport::new("des-interval", shapes.len(), collect_failures(fails), start, None)
}

fn ints(offset: usize, c: &[i64]) -> QPoly {
    QPoly::from_ints(offset, c)
}

/// Polynomial with unit coefficients in the listed degrees, or given coefficients.
fn sparse(terms: &[(usize, i64)]) -> QPoly {
    terms.iter().map(|&(k, c)| QPoly::monomial(k).scale(&BigInt::from(c))).sum()
}

fn tab(s: &str) -> Tableau {
    s.parse().expect("valid tableau literal")
}

fn blocks(s: &str) -> BlockShape {
    s.parse().expect("valid block literal")
}

fn spans(moves: &[Move]) -> Vec<(usize, usize)> {
    moves
        .iter()
        .filter_map(|m| match m {
            Move::Rotation { start, end, .. } => Some((*start, *end)),
            _ => None,
        })
        .collect()
}

/// The worked examples: hook data, specific generating functions, rotations,
/// block rules, exceptional sets and the deformed multinomial example.
pub fn check_examples() -> CheckReport {
    let start = Instant::now();
    let mut fails = Vec::new();
    let mut cases = 0;
    let mut expect = |ok: bool, what: &str| {
        cases += 1;
        if !ok {
            fails.push(what.to_string());
        }
    };

    let p: Partition = "6,3,3".parse().unwrap();
    expect(
        p.hook_lengths() == vec![vec![8, 7, 6, 3, 2, 1], vec![4, 3, 2], vec![3, 2, 1]],
        "hooks of (6,3,3)",
    );
    let mut corners = p.corners();
    corners.sort();
    expect(corners == vec![(1, 6), (3, 3)], "corners of (6,3,3)");
    expect(p.notches() == vec![(2, 4)], "notch of (6,3,3)");

    let t = tab("1,2,4,7,9,12/3,6,10/5,8,11");
    expect(t.descent_set() == vec![2, 4, 7, 9, 10] && t.maj() == 32, "descents of the (6,3,3) sample");

    let b = blocks("3,2|1,1|3").to_skew();
    expect(b.outer().parts() == [7, 6, 4, 4, 3] && b.inner().parts() == [4, 4, 3, 3], "block layout 76443/4433");
    let bt = Tableau::of_blocks(blocks("2|2|3"), vec![vec![2, 6], vec![4, 5], vec![1, 3, 7]]);
    expect(
        bt.as_ref().is_ok_and(|x| x.descent_set() == vec![2, 6] && x.maj() == 8 && x.to_word().unwrap() == vec![1, 3, 1, 2, 2, 3, 1]),
        "block tableau descents and word",
    );

    let f42 = syt_gf(&"4,2".parse().unwrap());
    expect(f42 == ints(2, &[1, 1, 2, 1, 2, 1, 1]), "SYT(4,2) generating function");
    expect(
        f42.to_json() == r#"{"offset":2,"coeffs":["1","1","2","1","2","1","1"]}"#,
        "SYT(4,2) JSON",
    );
    expect(
        syt_gf(&"4,2,1".parse().unwrap()) == (&q_integer(7) * &q_integer(5)).shift(4),
        "SYT(4,2,1) = q^4 [7][5]",
    );

    let wb1 = wreath_fake_degree(&blocks("2|3,1"), 2).unwrap();
    expect(
        wb1 == sparse(&[(6, 1), (8, 2), (10, 4), (12, 5), (14, 7), (16, 7), (18, 7), (20, 5), (22, 4), (24, 2), (26, 1)]),
        "B6 fake degree of ((2),(3,1))",
    );
    let wb2 = wreath_fake_degree(&blocks("|3,3"), 2).unwrap();
    expect(wb2 == sparse(&[(12, 1), (16, 1), (18, 1), (20, 1), (24, 1)]), "B6 fake degree of (∅,(3,3))");
    let gd1 = gmdn_fake_degree(&blocks("2|3,1"), 2, 2).unwrap();
    expect(
        gd1 == sparse(&[(4, 1), (6, 3), (8, 6), (10, 8), (12, 9), (14, 8), (16, 6), (18, 3), (20, 1)]),
        "D6 fake degree of {(2),(3,1)}",
    );
    let gd2 = gmdn_fake_degree(&blocks("|3,3"), 2, 2).unwrap();
    expect(gd2 == sparse(&[(6, 1), (10, 1), (12, 1), (14, 1), (18, 1)]), "D6 fake degree of {∅,(3,3)}");
    let g_nu2 = gmdn_fake_degree(&blocks("3,3|"), 2, 2).unwrap();
    let g_nu1 = gmdn_fake_degree(&blocks("3,3|"), 2, 1).unwrap();
    let g_mu1 = gmdn_fake_degree(&blocks("|3,3"), 2, 1).unwrap();
    expect(gd2 != g_mu1 && gd2 == g_nu2 && g_nu2 == g_nu1, "D6 versus B6 for (∅,(3,3)) and ((3,3),∅)");

    let alpha = [2, 1, 1, 1];
    let plain = crate::qpoly::q_multinomial_of(&alpha).substitute_power(4);
    expect(
        plain == sparse(&[(0, 1), (4, 3), (8, 6), (12, 9), (16, 11), (20, 11), (24, 9), (28, 6), (32, 3), (36, 1)]),
        "(5;2,1,1,1) at q^4",
    );
    expect(plain.divide_exact(&q_integer(2).substitute_power(10)).is_err(), "(5;2,1,1,1)_{q^4} not divisible by 1+q^10");
    let deformed = sparse(&[
        (6, 1), (8, 1), (10, 3), (12, 3), (14, 6), (16, 5), (18, 8), (20, 6), (22, 8), (24, 5),
        (26, 6), (28, 3), (30, 3), (32, 1), (34, 1),
    ]);
    expect(deformed_multinomial(&alpha, 2).unwrap() == deformed, "deformed (5;2,1,1,1) with d=2");

    let e = exceptional_set(&"5,5,5".parse().unwrap());
    expect(
        e == vec![
            tab("1,2,3,4,5/6,7,8,9,10/11,12,13,14,15"),
            tab("1,2,7,10,13/3,5,8,11,14/4,6,9,12,15"),
            tab("1,4,7,10,13/2,5,8,11,14/3,6,9,12,15"),
        ],
        "E(5,5,5)",
    );
    let e2 = exceptional_set(&"6,4,3,3,1".parse().unwrap());
    expect(e2.len() == 1, "E(6,4,3,3,1) is a single tableau");

    let x = tab("1,2,6,7,9/3,4,8,13/5,11,12,15/10,14");
    expect(
        spans(&positive_rotations(&x)) == vec![(5, 6), (8, 9), (8, 10), (8, 11), (9, 13)],
        "positive rotations of the (5,4,4,2) sample",
    );
    let x = tab("1,3,8,10,15/2,4,9,11/5,7,13,14/6,12");
    expect(spans(&negative_rotations(&x)) == vec![(4, 6), (6, 7), (11, 12)], "negative rotations of the (5,4,4,2) sample");
    let shape5442: Partition = "5,4,4,2".parse().unwrap();
    expect(enumerate_straight(&shape5442).unwrap().count() == 81081, "81081 tableaux of shape (5,4,4,2)");
    let rotation_free = |s: &str| {
        let t = tab(s);
        positive_rotations(&t).is_empty() && negative_rotations(&t).is_empty()
    };
    expect(
        rotation_free("1,2,3,4,5/6,7,8,9/10,11,12,13/14,15") && rotation_free("1,2,3,8,12/4,6,9,13/5,7,10,14/11,15"),
        "listed rotation-free tableaux",
    );

    for (before, after, name) in [
        ("1,2,3,7/4,5,6,8", "1,3,4,6/2,5,7,8", "B1"),
        ("1,2,3,4/5,6,7", "1,3,4,7/2,5,6", "B2"),
        ("1,2,3/4,6/5,7", "1,3,6/2,4/5,7", "B3"),
        ("1,2,7/3,5,8/4,6,9/10", "1,4,8/2,5,9/3,6,10/7", "B4"),
        ("1,2/3,5/4,6/7", "1,5/2,6/3,7/4", "B5"),
        ("1,2,3,4,5,16/6,7,8,9,10,17/11,12,13,14,15", "1,3,4,5,6,15/2,7,8,9,10,17/11,12,13,14,16", "B1"),
        ("1,2,3,4,5/6,7,8,9,10/11,12,13", "1,3,4,5,10/2,7,8,9,13/6,11,12", "B2"),
        ("1,2,3,4/5,9/6,10/7/8", "1,3,4,9/2,5/6,10/7/8", "B3"),
        ("1,2,7,10/3,5,8,11/4,6,9,12/13", "1,4,7,11/2,5,8,12/3,6,9,13/10", "B4"),
        ("1,2/3,6/4,7/5,8/9", "1,6/2,7/3,8/4,9/5", "B5"),
    ] {
        let x = tab(before);
        let ok = block_rule(&x).is_some_and(|r| {
            r.name() == name && Move::Block(r).apply(&x).is_ok_and(|y| y == tab(after))
        });
        expect(ok, &format!("{name} on {before}"));
    }

    for (before, after) in [
        ("1,3,6,11/2,4,7,12/5,8/9,13/10", "1,3,6,10/2,4,7,11/5,12/8,13/9"),
        ("1,3,6/2,4,7/5,8,11/9/10", "1,3,6/2,4,10/5,7,11/8/9"),
    ] {
        let x = tab(before);
        expect(phi(&x).is_ok_and(|(_, y)| y == tab(after)), &format!("φ on {before}"));
    }

    expect(
        weak_poset(&"3,2,1".parse().unwrap())
            .map(|w| w.to_dot().lines().filter(|l| l.contains("[label=")).count() == 16)
            .unwrap_or(false),
        "(3,2,1) poset has 16 nodes",
    );

    CheckReport::new("worked-examples", cases, fails, start, None)
}

/// Every `m`-tuple of partitions with `n` cells in total.
pub fn multipartitions(n: usize, m: usize) -> Vec<BlockShape> {
    let mut out = Vec::new();
    for alpha in weak_compositions(n, m) {
        let mut acc: Vec<Vec<Partition>> = vec![vec![]];
        for &a in &alpha {
            let parts = Partition::all(a);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    parts.iter().map(move |p| {
                        let mut v = prefix.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(BlockShape::new));
    }
    out
}

/// Inversion generating functions of `{w ∈ W_α : w_1 ≤ k}` for every `k`, by
/// listing the words.
pub fn words_first_letter_inversions(alpha: &[usize]) -> Vec<QPoly> {
    let m = alpha.len();
    let n: usize = alpha.iter().sum();
    let mut by_first: Vec<Vec<u64>> = vec![vec![0; n * n / 2 + 2]; m + 1];
    let mut left = alpha.to_vec();
    let mut word: Vec<usize> = Vec::with_capacity(n);
    fn rec(left: &mut Vec<usize>, word: &mut Vec<usize>, inv: usize, n: usize, by_first: &mut Vec<Vec<u64>>) {
        if word.len() == n {
            by_first[word[0]][inv] += 1;
            return;
        }
        for letter in 1..=left.len() {
            if left[letter - 1] == 0 {
                continue;
            }
            let added = word.iter().filter(|&&w| w > letter).count();
            left[letter - 1] -= 1;
            word.push(letter);
            rec(left, word, inv + added, n, by_first);
            word.pop();
            left[letter - 1] += 1;
        }
    }
    if n == 0 {
        return vec![QPoly::zero(); m + 1];
    }
    rec(&mut left, &mut word, 0, n, &mut by_first);
    let mut out = Vec::with_capacity(m + 1);
    let mut acc = QPoly::zero();
    out.push(acc.clone());
    for row in by_first.iter().skip(1) {
        let f = QPoly::from_dense(row.iter().map(|&c| BigInt::from(c)).collect());
        acc = &acc + &f;
        out.push(acc.clone());
    }
    out
}

/// Deformed multinomials: summation = ratio = partial-sum form = scaled
/// one-row fake degree; partial-sum multinomials match the word model and are
/// symmetric and unimodal.
pub fn check_deformed(max_n: usize, max_m: usize) -> CheckReport {
    let start = Instant::now();
    let mut inputs = Vec::new();
    for n in 1..=max_n {
        for m in 1..=max_m {
            inputs.extend(weak_compositions(n, m));
        }
    }
    let fails = par::map(&inputs, |alpha| {
        let mut fails = Vec::new();
        let m = alpha.len();
        for d in (1..=m).filter(|d| m % d == 0) {
            let sum = deformed_multinomial(alpha, d).expect("d divides m");
            match deformed_multinomial_by_ratio(alpha, d) {
                Ok(r) if r == sum => {}
                other => fails.push(format!("{alpha:?} d={d}: summation {sum} vs ratio {other:?}")),
            }
            let ps = deformed_multinomial_by_partial_sums(alpha, d).unwrap();
            if ps != sum {
                fails.push(format!("{alpha:?} d={d}: partial-sum form {ps} vs {sum}"));
            }
            let bs = BlockShape::one_rows(alpha);
            let orbit = bs.orbit(d).unwrap().len();
            let g = gmdn_fake_degree(&bs, m, d).unwrap();
            if g.scale(&BigInt::from(d)) != sum.scale(&BigInt::from(orbit)) {
                fails.push(format!("{alpha:?} d={d}: one-row fake degree disagrees"));
            }
        }
        let words = words_first_letter_inversions(alpha);
        for k in 1..=m {
            let p = partial_sum_multinomial(alpha, k);
            if p != words[k] {
                fails.push(format!("{alpha:?} k={k}: product {p} vs words {}", words[k]));
            }
            if !p.is_zero() && !(p.is_symmetric() && p.is_unimodal()) {
                fails.push(format!("{alpha:?} k={k}: {p} not symmetric unimodal"));
            }
        }
        fails
    });
    CheckReport::new("deformed-multinomials", inputs.len(), collect_failures(fails), start, None)
}

/// `G(m,d,n)` fake degrees against the canonical orbit tableaux, plus the orbit-sum
/// form and the predicted support.
pub fn check_gmdn(max_n: usize, max_m: usize) -> CheckReport {
    let start = Instant::now();
    let mut inputs = Vec::new();
    for n in 1..=max_n {
        for m in 1..=max_m {
            for bs in multipartitions(n, m) {
                for d in (1..=m).filter(|d| m % d == 0) {
                    inputs.push((bs.clone(), d));
                }
            }
        }
    }
    let fails = par::map(&inputs, |(bs, d)| {
        let (m, d) = (bs.m(), *d);
        let mut fails = Vec::new();
        let brute = gf_of(
            canonical_orbit_tableaux(bs, d)
                .expect("valid")
                .into_iter()
                .map(|(t, b)| b + m * t.maj()),
        );
        let g = gmdn_fake_degree(bs, m, d).expect("valid");
        if g != brute {
            fails.push(format!("{bs} m={m} d={d}: formula {g} vs tableaux {brute}"));
        }
        match gmdn_fake_degree_by_orbit_sum(bs, m, d) {
            Ok(h) if h == g => {}
            other => fails.push(format!("{bs} m={m} d={d}: orbit-sum form {other:?}")),
        }
        let pred = support_gmdn(bs, m, d).expect("valid");
        let rep = verify_support(bs, &pred, &brute);
        if !rep.equal {
            fails.push(format!("{bs} m={m} d={d}: support mismatch at {:?}", rep.mismatches()));
        }
        fails
    });
    CheckReport::new("gmdn-vs-orbit-tableaux", inputs.len(), collect_failures(fails), start, None)
}

/// `[k]_{q}! / Π [h_c]_{q}` by direct division.
fn hook_quotient(p: &Partition) -> QPoly {
    let den: QPoly = p.hook_lengths().into_iter().flatten().map(q_integer).product();
    q_factorial(p.size()).divide_exact(&den).expect("hook quotient is a polynomial")
}

/// Type B and type D product formulas for bipartitions, and the matching supports.
pub fn check_closed_forms(max_n: usize) -> CheckReport {
    let start = Instant::now();
    let inputs: Vec<BlockShape> = (1..=max_n).flat_map(|n| multipartitions(n, 2)).collect();
    let fails = par::map(&inputs, |bs| {
        let mut fails = Vec::new();
        let (lam, mu) = (&bs.blocks()[0], &bs.blocks()[1]);
        let (k, n) = (lam.size(), bs.n());
        let core = &(&q_binomial(n as i64, k as i64) * &hook_quotient(lam)) * &hook_quotient(mu);
        let core = core.substitute_power(2);
        let type_b = core.shift(mu.size() + 2 * lam.b() + 2 * mu.b());
        let wreath = wreath_fake_degree(bs, 2).unwrap();
        if type_b != wreath {
            fails.push(format!("{bs}: type B product {type_b} vs {wreath}"));
        }
        let num = &(&QPoly::monomial(k) + &QPoly::monomial(n - k)) * &core.shift(2 * lam.b() + 2 * mu.b());
        let mut type_d = num
            .divide_exact(&(&QPoly::one() + &QPoly::monomial(n)))
            .expect("type D ratio is a polynomial");
        if lam == mu {
            type_d = type_d.div_scalar_exact(&BigInt::from(2)).expect("even coefficients");
        }
        let g = gmdn_fake_degree(bs, 2, 2).unwrap();
        if type_d != g {
            fails.push(format!("{bs}: type D product {type_d} vs {g}"));
        }
        let rb = verify_support(bs, &support_wreath(bs, 2).unwrap(), &wreath);
        if !rb.equal {
            fails.push(format!("{bs}: type B support mismatch at {:?}", rb.mismatches()));
        }
        let rd = verify_support(bs, &support_gmdn(bs, 2, 2).unwrap(), &g);
        if !rd.equal {
            fails.push(format!("{bs}: type D support mismatch at {:?}", rd.mismatches()));
        }
        fails
    });
    CheckReport::new("type-b-d-closed-forms", inputs.len(), collect_failures(fails), start, None)
}

/// A staircase-like partition of `size`: the staircase `(r, r-1, …, 1)` with
/// the first few rows lengthened by one.
pub fn staircase_like(size: usize) -> Partition {
    let mut r = 0;
    while (r + 1) * (r + 2) / 2 <= size {
        r += 1;
    }
    let mut parts: Vec<usize> = (1..=r).rev().collect();
    let extra = size - r * (r + 1) / 2;
    for p in parts.iter_mut().take(extra) {
        *p += 1;
    }
    if extra > r {
        parts.push(extra - r);
    }
    Partition::new(parts).expect("still decreasing")
}

/// Expands the hook product for a large shape and checks `q = 1` against
/// `n! / Π h_c` in integers.
pub fn check_large_expansion(size: usize) -> CheckReport {
    let start = Instant::now();
    let p = staircase_like(size);
    let f = stanley(&p).expand().expect("polynomial");
    let mut fact = BigInt::one();
    for i in 2..=p.size() {
        fact *= i;
    }
    let hooks: BigInt = p.hook_lengths().into_iter().flatten().map(BigInt::from).product();
    let mut fails = Vec::new();
    if f.eval_one() != &fact / &hooks || &fact % &hooks != BigInt::from(0) {
        fails.push(format!("({p}): value at 1 differs from the hook length count"));
    }
    if f.min_degree() != Some(p.b()) {
        fails.push(format!("({p}): lowest degree {:?}", f.min_degree()));
    }
    CheckReport::new("large-expansion", 1, fails, start, Some(Duration::from_secs(10)))
}

/// Every straight-shape maj generating function is parity-unimodal.
pub fn check_parity_unimodal(max_n: usize) -> CheckReport {
    let start = Instant::now();
    let shapes = partitions_up_to(max_n);
    let fails = par::map(&shapes, |p| {
        if syt_gf(p).is_parity_unimodal() {
            vec![]
        } else {
            vec![format!("{p} is not parity-unimodal")]
        }
    });
    CheckReport::new("parity-unimodal", shapes.len(), collect_failures(fails), start, Some(Duration::from_secs(300)))
}

/// Generating functions of one-row-block words agree with block enumeration.
pub fn check_block_enumeration(max_n: usize, max_m: usize) -> CheckReport {
    let start = Instant::now();
    let mut inputs = Vec::new();
    for n in 0..=max_n {
        for m in 1..=max_m {
            inputs.extend(multipartitions(n, m));
        }
    }
    let fails = par::map(&inputs, |bs| {
        let brute = gf_of(enumerate_blocks(bs).expect("small").map(|t| t.maj()));
        let f = crate::genfun::block_maj_gf(bs);
        if brute == f {
            vec![]
        } else {
            vec![format!("{bs}: enumeration {brute} vs product {f}")]
        }
    });
    CheckReport::new("block-enumeration", inputs.len(), collect_failures(fails), start, None)
}

/// Suites selectable from the command line.
pub const SUITES: &[&str] = &[
    "stanley", "support", "phi", "poset", "des", "examples", "deformed", "gmdn", "closed", "expansion",
    "parity", "blocks",
];

/// Runs the named suite (or `all`), capping each check at its own default size.
pub fn run_suite(name: &str, max_n: usize) -> Option<Vec<CheckReport>> {
    let pick = |s: &str| name == "all" || name == s;
    if name != "all" && !SUITES.contains(&name) {
        return None;
    }
    let mut out = Vec::new();
    if pick("stanley") {
        out.push(check_stanley(max_n.min(12)));
    }
    if pick("support") {
        out.push(check_type_a_support(max_n.min(12)));
    }
    if pick("phi") {
        out.push(check_phi(max_n.min(9)));
    }
    if pick("poset") {
        out.push(check_posets(max_n.min(8)));
    }
    if pick("des") {
        out.push(check_des(max_n.min(12), max_n.min(10)));
    }
    if pick("examples") {
        out.push(check_examples());
    }
    if pick("deformed") {
        out.push(check_deformed(max_n.min(8), 6));
    }
    if pick("gmdn") {
        out.push(check_gmdn(max_n.min(6), 4));
    }
    if pick("closed") {
        out.push(check_closed_forms(max_n.min(6)));
    }
    if pick("expansion") {
        out.push(check_large_expansion(200));
    }
    if pick("parity") {
        out.push(check_parity_unimodal(max_n.min(20)));
    }
    if pick("blocks") {
        out.push(check_block_enumeration(max_n.min(8), 3));
    }
    Some(out)
}
