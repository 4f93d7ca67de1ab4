//! Major index generating functions: SYT of straight and block shapes, fake
//! degrees of `G(m,1,n)` and `G(m,d,n)`, and coefficient formulas.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::deformed::deformed_multinomial;
use crate::error::{Error, Result};
use crate::qpoly::{q_integer, q_multinomial_of, CycloProduct, QPoly};
use crate::shapes::{BlockShape, Partition};

/// `q^{b(λ)} [n]_q! / Π_c [h_c]_q` as a cyclotomic product: the exponent of
/// `Φ_j` is `⌊n/j⌋` minus the number of hooks divisible by `j`.
pub fn stanley(p: &Partition) -> CycloProduct {
    let n = p.size();
    let hooks: Vec<usize> = p.hook_lengths().into_iter().flatten().collect();
    let mut c = CycloProduct::with_shift(p.b());
    for j in 2..=n {
        let e = (n / j) as i64 - hooks.iter().filter(|&&h| h % j == 0).count() as i64;
        c.add_exponent(j, e);
    }
    c
}

/// `SYT(λ)^maj(q)`, expanded.
pub fn syt_gf(p: &Partition) -> QPoly {
    stanley(p).expand().expect("Stanley products are polynomials")
}

/// `SYT(λ̄)^maj(q) = (n; α(λ̄))_q · Π SYT(λ^(i))^maj(q)`.
pub fn block_maj_gf(blocks: &BlockShape) -> QPoly {
    blocks
        .blocks()
        .iter()
        .map(syt_gf)
        .fold(q_multinomial_of(&blocks.alpha()), |acc, f| &acc * &f)
}

/// Fake degree of the irreducible `G(m,1,n)` character indexed by the `m`-tuple
/// `λ̄`: `q^{b(α(λ̄))} · SYT(λ̄)^maj(q^m)`.
pub fn wreath_fake_degree(blocks: &BlockShape, m: usize) -> Result<QPoly> {
    if blocks.m() != m {
        return Err(Error::BlockCountMismatch {
            expected: m,
            found: blocks.m(),
        });
    }
    Ok(block_maj_gf(blocks).substitute_power(m).shift(blocks.b_alpha()))
}

/// Fake degree of the `G(m,d,n)` irreducible indexed by the orbit `{λ̄}^d`,
/// computed as `(#orbit/d) · deformed(α(λ̄), d) · Π SYT(λ^(i))^maj(q^m)`.
pub fn gmdn_fake_degree(blocks: &BlockShape, m: usize, d: usize) -> Result<QPoly> {
    if blocks.m() != m {
        return Err(Error::BlockCountMismatch {
            expected: m,
            found: blocks.m(),
        });
    }
    if blocks.n() == 0 {
        return Err(Error::EmptyShape);
    }
    let orbit = blocks.orbit(d)?;
    let deformed = deformed_multinomial(&blocks.alpha(), d)?;
    let prod = blocks
        .blocks()
        .iter()
        .map(|b| syt_gf(b).substitute_power(m))
        .fold(deformed, |acc, f| &acc * &f);
    let scaled = prod.scale(&BigInt::from(orbit.len()));
    scaled.div_scalar_exact(&BigInt::from(d))
}

/// The same fake degree through the orbit form:
/// `[Σ_{μ̄ ∈ {λ̄}^d} q^{b(α(μ̄))}] / [d]_{q^{nm/d}} · SYT(λ̄)^maj(q^m)`.
pub fn gmdn_fake_degree_by_orbit_sum(blocks: &BlockShape, m: usize, d: usize) -> Result<QPoly> {
    if blocks.m() != m {
        return Err(Error::BlockCountMismatch {
            expected: m,
            found: blocks.m(),
        });
    }
    let n = blocks.n();
    if n == 0 {
        return Err(Error::EmptyShape);
    }
    let orbit = blocks.orbit(d)?;
    let orbit_sum: QPoly = orbit.iter().map(|mu| QPoly::monomial(mu.b_alpha())).sum();
    let num = &orbit_sum * &block_maj_gf(blocks).substitute_power(m);
    num.divide_exact(&q_integer(d).substitute_power(n * m / d))
}

/// Generalized binomial `C(x, t) = x (x-1) ⋯ (x-t+1) / t!` for any integer `x`.
pub fn gbinom(x: i64, t: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..t {
        num *= BigInt::from(x - i as i64);
        den *= BigInt::from(i as i64 + 1);
    }
    num / den
}

/// Coefficient of `q^{b(λ)+d}` in `SYT(λ)^maj(q)` from the hook profile:
/// `Σ_{μ ⊢ d, μ_1 ≤ n} Π_i C(H_i + m_i(μ) - 2, m_i(μ))`.
pub fn coefficient_via_hooks(p: &Partition, d: usize) -> BigInt {
    let n = p.size();
    let profile = p.hook_profile();
    let h: Vec<i64> = (0..=n)
        .map(|i| profile.get(&i).copied().unwrap_or(0) as i64)
        .collect();
    let mut total = BigInt::zero();
    sum_over_multiplicities(n.min(d), d, &BigInt::one(), &mut |i, mult| {
        gbinom(h[i] + mult as i64 - 2, mult)
    }, &mut total);
    total
}

/// Sums `Π_i f(i, m_i)` over partitions of `rem` with parts at most `max_part`,
/// recursing on the largest part size still allowed.
fn sum_over_multiplicities(
    max_part: usize,
    rem: usize,
    acc: &BigInt,
    f: &mut impl FnMut(usize, usize) -> BigInt,
    total: &mut BigInt,
) {
    if rem == 0 {
        *total += acc;
        return;
    }
    if max_part == 0 {
        return;
    }
    let i = max_part;
    for mult in 0..=rem / i {
        let factor = if mult == 0 { BigInt::one() } else { f(i, mult) };
        if factor.is_zero() {
            continue;
        }
        let next_max = (i - 1).min(rem - mult * i);
        sum_over_multiplicities(next_max, rem - mult * i, &(acc * &factor), f, total);
    }
}

/// Number of permutations of `n` with major index `d`, via
/// `Σ (-1)^{#parts > 1} C(n + m_1(μ) - 2, m_1(μ))` over `μ ⊢ d` with `μ_1 ≤ n`
/// and distinct parts above 1.
pub fn mahonian_count(n: usize, d: usize) -> BigInt {
    if n == 0 {
        return BigInt::from(u8::from(d == 0));
    }
    let mut total = BigInt::zero();
    for_distinct_parts(n, d, &mut |s, k| {
        let ones = d - s;
        let term = gbinom(n as i64 + ones as i64 - 2, ones);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    });
    total
}

/// `T(d, n)`: partitions of `d` with parts at most `n` whose parts above 1 are distinct.
pub fn count_t(d: usize, n: usize) -> usize {
    let mut count = 0;
    if n == 0 {
        return usize::from(d == 0);
    }
    for_distinct_parts(n, d, &mut |_, _| count += 1);
    count
}

/// Calls `f(sum, count)` for every set of distinct parts in `2..=n` with sum at most `d`.
fn for_distinct_parts(n: usize, d: usize, f: &mut impl FnMut(usize, usize)) {
    fn rec(next: usize, hi: usize, sum: usize, k: usize, d: usize, f: &mut impl FnMut(usize, usize)) {
        f(sum, k);
        for part in next..=hi {
            if sum + part > d {
                break;
            }
            rec(part + 1, hi, sum + part, k + 1, d, f);
        }
    }
    if n == 0 {
        return;
    }
    rec(2, n, 0, 0, d, f);
}

/// The hook profile `i ↦ H_i(λ)` as an ordered map.
pub fn hook_profile(p: &Partition) -> BTreeMap<usize, usize> {
    p.hook_profile()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn stanley_small_shapes() {
        assert_eq!(syt_gf(&p("4,2")), QPoly::from_ints(2, &[1, 1, 2, 1, 2, 1, 1]));
        let expected = &q_integer(7) * &q_integer(5);
        assert_eq!(syt_gf(&p("4,2,1")), expected.shift(4));
        assert_eq!(syt_gf(&Partition::empty()), QPoly::one());
    }

    #[test]
    fn hook_formula_matches_expansion() {
        for n in 1..=7 {
            for lam in Partition::all(n) {
                let f = syt_gf(&lam);
                let b = lam.b();
                for d in 0..=n * (n - 1) / 2 {
                    assert_eq!(coefficient_via_hooks(&lam, d), f.coeff(b + d), "{lam} d={d}");
                }
            }
        }
    }

    #[test]
    fn t_examples() {
        assert_eq!(count_t(1, 1), 1);
        assert_eq!(count_t(3, 3), 3);
        assert_eq!(mahonian_count(3, 1), BigInt::from(2));
        assert_eq!(mahonian_count(1, 0), BigInt::from(1));
    }

    #[test]
    fn gbinom_negative_top() {
        assert_eq!(gbinom(-1, 2), BigInt::from(1));
        assert_eq!(gbinom(-2, 3), BigInt::from(-4));
        assert_eq!(gbinom(5, 0), BigInt::from(1));
    }
}
