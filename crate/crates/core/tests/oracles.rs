//! Brute-force oracles for the structural results.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use sytq::deformed::{
    deformed_binomial, deformed_multinomial, partial_sum_multinomial, partial_sum_multinomial_by_sum,
    q_mult_recurrence_check,
};
use sytq::genfun::{
    block_maj_gf, coefficient_via_hooks, gmdn_fake_degree, mahonian_count, syt_gf,
};
use sytq::mutations::{
    block_rule, matching_block_rules, negative_rotations, phi, positive_rotations, strong_covers,
    strong_poset, weak_covers, weak_poset, Move, RotationSign,
};
use sytq::qpoly::{q_factorial, q_multinomial_of};
use sytq::shapes::{b_statistic, weak_compositions};
use sytq::tableau::{enumerate_blocks, enumerate_straight, maxmaj_tableau, minmaj_tableau};
use sytq::verify::{self, multipartitions};
use sytq::{BlockShape, Partition, QPoly, Tableau};

/// Rotations found by applying every simple cycle and comparing descent sets.
fn rotations_by_definition(t: &Tableau, sign: RotationSign) -> Vec<(usize, usize, usize)> {
    let n = t.n();
    let des: BTreeSet<usize> = t.descent_set().into_iter().collect();
    let mut out = Vec::new();
    for i in 1..=n {
        for k in i + 1..=n {
            let mut cyc: Vec<usize> = (i..=k).collect();
            if sign == RotationSign::Negative {
                cyc.reverse();
            }
            let Ok(u) = t.apply_cycles(&[cyc]) else { continue };
            let des2: BTreeSet<usize> = u.descent_set().into_iter().collect();
            let added: Vec<usize> = des2.difference(&des).copied().collect();
            let removed: Vec<usize> = des.difference(&des2).copied().collect();
            if let ([j], [r]) = (added.as_slice(), removed.as_slice()) {
                if *r + 1 == *j {
                    out.push((i, k, *j));
                }
            }
        }
    }
    out
}

fn triples(moves: &[Move]) -> Vec<(usize, usize, usize)> {
    moves
        .iter()
        .map(|m| match m {
            Move::Rotation { start, end, moving_descent, .. } => (*start, *end, *moving_descent),
            other => panic!("unexpected move {other}"),
        })
        .collect()
}

#[test]
fn rotations_match_definition() {
    for n in 1..=8 {
        for p in Partition::all(n) {
            for t in enumerate_straight(&p).unwrap() {
                assert_eq!(
                    triples(&positive_rotations(&t)),
                    rotations_by_definition(&t, RotationSign::Positive),
                    "positive rotations of {t}"
                );
                assert_eq!(
                    triples(&negative_rotations(&t)),
                    rotations_by_definition(&t, RotationSign::Negative),
                    "negative rotations of {t}"
                );
            }
        }
    }
}

/// Tableaux of shape (5,4,4,2) admitting no rotation. No simple cycle of
/// either direction raises maj by one on any of them, so the count cannot be
/// larger under any narrower notion of rotation.
#[test]
fn rotation_free_5442() {
    let p: Partition = "5,4,4,2".parse().unwrap();
    let mut free = Vec::new();
    for t in enumerate_straight(&p).unwrap() {
        if positive_rotations(&t).is_empty() && negative_rotations(&t).is_empty() {
            free.push(t);
        }
    }
    for t in &free {
        let n = t.n();
        for i in 1..=n {
            for k in i + 1..=n {
                let up: Vec<usize> = (i..=k).collect();
                let down: Vec<usize> = (i..=k).rev().collect();
                for cyc in [up, down] {
                    if let Ok(u) = t.apply_cycles(&[cyc]) {
                        assert_ne!(u.maj(), t.maj() + 1, "{t} [{i},{k}]");
                    }
                }
            }
        }
    }
    assert_eq!(free.len(), 22);
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn straight_tableaux(max_n: usize) -> impl Iterator<Item = Tableau> {
    (1..=max_n).flat_map(Partition::all).flat_map(|p| enumerate_straight(&p).unwrap().collect::<Vec<_>>())
}

#[test]
fn notches_count_corners_less_one() {
    for n in 1..=12 {
        for p in Partition::all(n) {
            let ones = p.hook_profile().get(&1).copied().unwrap_or(0);
            assert_eq!(p.notches().len() + 1, ones, "{p}");
            assert_eq!(p.corners().len(), ones, "{p}");
        }
    }
}

#[test]
fn max_maj_identity() {
    for n in 0..=12 {
        for p in Partition::all(n) {
            assert_eq!(
                choose2(n) + p.hook_sum(),
                p.b() + choose2(n + 1) + p.conjugate().b(),
                "{p}"
            );
        }
    }
}

#[test]
fn block_layout_is_a_skew_shape() {
    for n in 0..=10 {
        for m in 1..=4 {
            if n == 10 && m == 4 {
                continue;
            }
            for bs in multipartitions(n, m) {
                let s = bs.to_skew();
                assert_eq!(s.size(), n, "{bs}");
                assert!(s.outer().parts().windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }
}

#[test]
fn hook_value_at_one() {
    for n in 0..=30 {
        for p in Partition::all(n).into_iter().step_by(if n > 20 { 97 } else { 1 }) {
            let mut fact = BigInt::from(1);
            for i in 2..=n {
                fact *= i;
            }
            let hooks: BigInt = p.hook_lengths().into_iter().flatten().map(BigInt::from).product();
            assert_eq!(syt_gf(&p).eval_one(), fact / hooks, "{p}");
        }
    }
}

#[test]
fn q_multinomials_symmetric_unimodal() {
    for n in 0..=8 {
        for m in 1..=n.max(1) {
            for alpha in weak_compositions(n, m) {
                let f = q_multinomial_of(&alpha);
                assert!(f.is_symmetric() && f.is_unimodal() && !f.has_internal_zeros(), "{alpha:?}");
            }
        }
    }
}

#[test]
fn extreme_tableaux_are_unique() {
    for n in 1..=12 {
        for p in Partition::all(n) {
            let lo = minmaj_tableau(&p);
            let hi = maxmaj_tableau(&p);
            assert_eq!(lo.maj(), p.b(), "{p}");
            assert_eq!(hi.maj(), choose2(n) - p.conjugate().b(), "{p}");
            if n <= 10 {
                let at_lo: Vec<Tableau> = enumerate_straight(&p).unwrap().filter(|t| t.maj() == lo.maj()).collect();
                let at_hi: Vec<Tableau> = enumerate_straight(&p).unwrap().filter(|t| t.maj() == hi.maj()).collect();
                assert_eq!(at_lo, vec![lo], "{p}");
                assert_eq!(at_hi, vec![hi], "{p}");
            }
        }
    }
}

fn inversions(w: &[usize]) -> usize {
    (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count()
}

#[test]
fn words_of_one_row_blocks() {
    for n in 0..=7 {
        for m in 1..=3 {
            for alpha in weak_compositions(n, m) {
                let bs = BlockShape::one_rows(&alpha);
                let mut words = BTreeSet::new();
                let mut inv: BTreeMap<usize, i64> = BTreeMap::new();
                for t in enumerate_blocks(&bs).unwrap() {
                    let w = t.to_word().unwrap();
                    let mut content = vec![0; m];
                    for &x in &w {
                        content[x - 1] += 1;
                    }
                    content.reverse();
                    assert_eq!(content, alpha);
                    let word_des: Vec<usize> = (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect();
                    assert_eq!(word_des, t.descent_set(), "{t}");
                    assert_eq!(Tableau::from_word(&w, m).unwrap(), t, "{bs}");
                    *inv.entry(inversions(&w)).or_default() += 1;
                    assert!(words.insert(w));
                }
                let multinomial = q_multinomial_of(&alpha);
                assert_eq!(BigInt::from(words.len()), multinomial.eval_one(), "{alpha:?}");
                let gf: QPoly = inv.iter().map(|(&k, &c)| QPoly::monomial(k).scale(&BigInt::from(c))).sum();
                assert_eq!(gf, multinomial, "{alpha:?}");
            }
        }
    }
}

#[test]
fn block_gf_matches_enumeration() {
    let r = verify::check_block_enumeration(10, 2);
    assert!(r.passed(), "{}", r.summary());
    let r = verify::check_block_enumeration(8, 3);
    assert!(r.passed(), "{}", r.summary());
}

#[test]
fn hook_coefficients_and_mahonian_numbers() {
    for n in 0..=10 {
        for p in Partition::all(n) {
            let f = syt_gf(&p);
            for d in 0..=choose2(n) {
                assert_eq!(coefficient_via_hooks(&p, d), f.coeff(p.b() + d), "{p} d={d}");
            }
        }
    }
    for n in 0..=8 {
        let f = q_factorial(n);
        for d in 0..=choose2(n) + 1 {
            assert_eq!(mahonian_count(n, d), f.coeff(d), "n={n} d={d}");
        }
    }
}

#[test]
fn rotations_keep_des_and_block_rules_add_one() {
    for t in straight_tableaux(9) {
        for mv in positive_rotations(&t).into_iter().chain(negative_rotations(&t)) {
            let u = mv.apply(&t).unwrap();
            assert_eq!(u.des(), t.des(), "{t} {mv}");
            assert_eq!(u.maj() - u.des(), t.maj() - t.des() + 1, "{t} {mv}");
        }
        let rules = matching_block_rules(&t);
        assert!(rules.len() <= 1, "{t}: {rules:?}");
        if let Some(r) = block_rule(&t) {
            let u = Move::Block(r).apply(&t).unwrap();
            assert_eq!(u.maj(), t.maj() + 1, "{t} {r:?}");
            assert_eq!(u.des(), t.des() + 1, "{t} {r:?}");
            assert!(u.descent_set().contains(&1) && !t.descent_set().contains(&1), "{t}");
        }
    }
}

#[test]
fn phi_block_moves_are_the_block_rule() {
    for t in straight_tableaux(9) {
        if let Ok((Move::Block(r), _)) = phi(&t) {
            assert_eq!(block_rule(&t), Some(r), "{t}");
        }
    }
}

#[test]
fn covers_agree_with_posets() {
    for n in 1..=7 {
        for p in Partition::all(n) {
            let strong = strong_poset(&p).unwrap();
            let weak = weak_poset(&p).unwrap();
            let strong_edges: BTreeSet<(usize, usize)> = strong.edges().collect();
            for e in weak.edges() {
                assert!(strong_edges.contains(&e), "{p}: weak cover {e:?} is not a strong cover");
            }
            for (i, t) in strong.elements().iter().enumerate() {
                let mut want: Vec<Tableau> = strong.covers(i).iter().map(|&j| strong.elements()[j].clone()).collect();
                let mut got = strong_covers(t);
                want.sort_by_key(|x| x.to_string());
                got.sort_by_key(|x| x.to_string());
                assert_eq!(got, want, "strong covers of {t}");
                let mut want: Vec<Tableau> = weak.covers(i).iter().map(|&j| weak.elements()[j].clone()).collect();
                let mut got = weak_covers(t).unwrap();
                want.sort_by_key(|x| x.to_string());
                got.sort_by_key(|x| x.to_string());
                assert_eq!(got, want, "weak covers of {t}");
            }
        }
    }
}

#[test]
fn empty_rectangle_poset() {
    let p: Partition = "2,2".parse().unwrap();
    let w = weak_poset(&p).unwrap();
    assert!(w.elements().is_empty());
    assert!(sytq::mutations::verify_ranked(&w).ranked);
}

#[test]
fn block_gf_internal_zeros() {
    for n in 1..=8 {
        for m in 1..=3 {
            for bs in multipartitions(n, m) {
                let nonempty: Vec<&Partition> = bs.blocks().iter().filter(|p| !p.is_empty()).collect();
                let expect = nonempty.len() == 1 && nonempty[0].is_big_rectangle();
                assert_eq!(block_maj_gf(&bs).has_internal_zeros(), expect, "{bs}");
            }
        }
    }
}

#[test]
fn partial_sum_multinomial_properties() {
    for n in 1..=8 {
        for m in 1..=4 {
            for alpha in weak_compositions(n, m) {
                let dmax = choose2(n) - alpha.iter().map(|&a| choose2(a)).sum::<usize>();
                for k in 1..=m {
                    let p = partial_sum_multinomial(&alpha, k);
                    assert_eq!(p, partial_sum_multinomial_by_sum(&alpha, k), "{alpha:?} k={k}");
                    if alpha[..k].iter().sum::<usize>() == 0 {
                        assert!(p.is_zero());
                        continue;
                    }
                    let tail: usize = alpha[k..].iter().sum();
                    assert_eq!(p.coeff(0), BigInt::from(1), "{alpha:?} k={k}");
                    assert_eq!(p.degree(), Some(dmax - tail), "{alpha:?} k={k}");
                    assert!(!p.has_internal_zeros());
                }
                assert_eq!(partial_sum_multinomial(&alpha, m), q_multinomial_of(&alpha));
            }
        }
    }
}

#[test]
fn partial_sum_multinomial_constant_cases() {
    // Nothing in the first k letters.
    assert!(partial_sum_multinomial(&[0, 0, 3, 2], 2).is_zero());
    // One letter among the first k, and a later letter filling the rest.
    assert_eq!(partial_sum_multinomial(&[0, 1, 4], 2), QPoly::one());
    assert_eq!(partial_sum_multinomial(&[1, 0, 0, 5], 3), QPoly::one());
    // A single letter within the first k uses everything.
    assert_eq!(partial_sum_multinomial(&[0, 5, 0], 2), QPoly::one());
    assert_eq!(partial_sum_multinomial(&[4, 0], 1), QPoly::one());
    // Otherwise the polynomial is not constant.
    assert_ne!(partial_sum_multinomial(&[1, 1, 4], 2), QPoly::one());
    assert_eq!(partial_sum_multinomial(&[2, 1], 1), QPoly::from_ints(0, &[1, 1]));
}

#[test]
fn multinomial_recurrence() {
    assert!(q_mult_recurrence_check(&[1, 1]));
    assert!(q_mult_recurrence_check(&[2, 1, 1, 1]));
    for n in 0..=8 {
        for m in 1..=4 {
            for alpha in weak_compositions(n, m) {
                assert!(q_mult_recurrence_check(&alpha), "{alpha:?}");
            }
        }
    }
}

#[test]
fn deformed_binomials() {
    assert_eq!(deformed_binomial(2, 1), QPoly::from_ints(1, &[2]));
    for n in 1..=9 {
        for k in 0..=n {
            let f = deformed_binomial(n, k);
            assert_eq!(f, deformed_binomial(n, n - k), "n={n} k={k}");
            assert_eq!(f, deformed_multinomial(&[k, n - k], 2).unwrap(), "n={n} k={k}");
        }
    }
    assert_eq!(deformed_binomial(4, 0), QPoly::one());
}

#[test]
fn deformed_value_at_one_is_multinomial() {
    for n in 1..=7 {
        for m in [2, 4, 6] {
            for alpha in weak_compositions(n, m) {
                let f = deformed_multinomial(&alpha, 2).unwrap();
                assert_eq!(f.eval_one(), q_multinomial_of(&alpha).eval_one(), "{alpha:?}");
                let d1 = deformed_multinomial(&alpha, 1).unwrap();
                assert_eq!(d1, q_multinomial_of(&alpha).substitute_power(m).shift(b_statistic(&alpha)));
            }
        }
    }
}

#[test]
fn type_d_value_at_one() {
    let f = |p: &Partition| syt_gf(p).eval_one();
    for n in 1..=6 {
        for bs in multipartitions(n, 2) {
            let (l, u) = (&bs.blocks()[0], &bs.blocks()[1]);
            let mut expect = q_multinomial_of(&[l.size(), u.size()]).eval_one() * f(l) * f(u);
            if l == u {
                expect /= 2;
            }
            assert_eq!(gmdn_fake_degree(&bs, 2, 2).unwrap().eval_one(), expect, "{bs}");
        }
    }
}

#[test]
fn type_d_rotation_invariance() {
    for n in 1..=6 {
        for bs in multipartitions(n, 2) {
            assert_eq!(
                gmdn_fake_degree(&bs, 2, 2).unwrap(),
                gmdn_fake_degree(&bs.rotated(1), 2, 2).unwrap(),
                "{bs}"
            );
        }
    }
}
