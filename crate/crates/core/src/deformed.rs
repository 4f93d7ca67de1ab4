//! Deformed q-multinomials and partial-sum multinomials.
//!
//! Throughout, `α = (α_1, …, α_m)` is a weak composition and
//! `σα = (α_m, α_1, …, α_{m-1})`. For `d | m` the cyclic group `C_d` is
//! generated by `σ^{m/d}`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qpoly::{q_binomial, q_integer, q_multinomial, q_multinomial_of, QPoly};
use crate::shapes::b_statistic;

fn rotate(alpha: &[usize], s: usize) -> Vec<usize> {
    let mut v = alpha.to_vec();
    if !v.is_empty() {
        let s = s % v.len();
        v.rotate_right(s);
    }
    v
}

/// `(n-1; α_1, …, α_i - 1, …, α_m)_q`, zero when `α_i = 0`.
fn decremented_multinomial(alpha: &[usize], i: usize) -> QPoly {
    let n: usize = alpha.iter().sum();
    if n == 0 {
        return QPoly::zero();
    }
    let dec: Vec<i64> = alpha
        .iter()
        .enumerate()
        .map(|(j, &a)| a as i64 - i64::from(j == i))
        .collect();
    q_multinomial(n - 1, &dec)
}

/// `p_α^{(k)}(q) = Π_{i ≤ k} (α_1+…+α_i; α_i)_q · Π_{i > k} (α_1+…+α_i - 1; α_i)_q`.
pub fn partial_sum_multinomial(alpha: &[usize], k: usize) -> QPoly {
    let mut prefix = 0i64;
    let mut acc = QPoly::one();
    for (idx, &a) in alpha.iter().enumerate() {
        prefix += a as i64;
        let top = if idx < k { prefix } else { prefix - 1 };
        let f = q_binomial(top, a as i64);
        if f.is_zero() {
            return QPoly::zero();
        }
        acc = &acc * &f;
    }
    acc
}

/// `Σ_{i ≤ k} q^{α_1+…+α_{i-1}} (n-1; dec_i α)_q`, the summation form of
/// [`partial_sum_multinomial`].
pub fn partial_sum_multinomial_by_sum(alpha: &[usize], k: usize) -> QPoly {
    let mut prefix = 0;
    let mut acc = QPoly::zero();
    for (i, &a) in alpha.iter().enumerate().take(k) {
        acc = &acc + &decremented_multinomial(alpha, i).shift(prefix);
        prefix += a;
    }
    acc
}

fn check_divides(d: usize, m: usize) -> Result<()> {
    if d == 0 || m % d != 0 {
        return Err(Error::DNotDividingM { d, m });
    }
    Ok(())
}

/// Deformed multinomial `⟮n; α⟯_{q,d}` by the summation identity
/// `Σ_{σ ∈ C_d} q^{b(σα)} Σ_{v=1}^{m/d} q^{m(σα_1+…+σα_{v-1})} (n-1; dec_v σα)_{q^m}`.
///
/// For `n = 0` the sum is empty while the defining ratio equals 1; the ratio's
/// value is returned.
pub fn deformed_multinomial(alpha: &[usize], d: usize) -> Result<QPoly> {
    let m = alpha.len();
    check_divides(d, m)?;
    if alpha.iter().all(|&a| a == 0) {
        return Ok(QPoly::one());
    }
    let step = m / d;
    let mut acc = QPoly::zero();
    for j in 0..d {
        let sa = rotate(alpha, j * step);
        let mut inner = QPoly::zero();
        let mut prefix = 0;
        for (v, &a) in sa.iter().enumerate().take(step) {
            let term = decremented_multinomial(&sa, v)
                .substitute_power(m)
                .shift(m * prefix);
            inner = &inner + &term;
            prefix += a;
        }
        acc = &acc + &inner.shift(b_statistic(&sa));
    }
    Ok(acc)
}

/// Deformed multinomial by its definition:
/// `[Σ_{σ ∈ C_d} q^{b(σα)}] / [d]_{q^{nm/d}} · (n; α)_{q^m}`, by exact division.
pub fn deformed_multinomial_by_ratio(alpha: &[usize], d: usize) -> Result<QPoly> {
    let m = alpha.len();
    check_divides(d, m)?;
    let n: usize = alpha.iter().sum();
    let step = m / d;
    let orbit: QPoly = (0..d)
        .map(|j| QPoly::monomial(b_statistic(&rotate(alpha, j * step))))
        .sum();
    let num = &orbit * &q_multinomial_of(alpha).substitute_power(m);
    let den = q_integer(d).substitute_power(n * m / d);
    if n == 0 {
        return num.div_scalar_exact(&BigInt::from(d));
    }
    num.divide_exact(&den)
}

/// Both routes, failing with [`Error::NonzeroRemainder`] if they disagree.
pub fn deformed_multinomial_checked(alpha: &[usize], d: usize) -> Result<QPoly> {
    let a = deformed_multinomial(alpha, d)?;
    let b = deformed_multinomial_by_ratio(alpha, d)?;
    if a != b {
        return Err(Error::NonzeroRemainder);
    }
    Ok(a)
}

/// `Σ_{σ ∈ C_d} q^{b(σα)} p^{(m/d)}_{σα}(q^m)`.
pub fn deformed_multinomial_by_partial_sums(alpha: &[usize], d: usize) -> Result<QPoly> {
    let m = alpha.len();
    check_divides(d, m)?;
    if alpha.iter().all(|&a| a == 0) {
        return Ok(QPoly::one());
    }
    let step = m / d;
    Ok((0..d)
        .map(|j| {
            let sa = rotate(alpha, j * step);
            partial_sum_multinomial(&sa, step)
                .substitute_power(m)
                .shift(b_statistic(&sa))
        })
        .sum())
}

/// Checks `(n; α)_q = Σ_i q^{α_1 + … + α_{i-1}} (n-1; dec_i α)_q`.
pub fn q_mult_recurrence_check(alpha: &[usize]) -> bool {
    let n: usize = alpha.iter().sum();
    if n == 0 {
        return true;
    }
    let mut prefix = 0;
    let mut rhs = QPoly::zero();
    for i in 0..alpha.len() {
        let dec: Vec<i64> = alpha
            .iter()
            .enumerate()
            .map(|(j, &a)| a as i64 - i64::from(j == i))
            .collect();
        rhs = &rhs + &q_multinomial(n - 1, &dec).shift(prefix);
        prefix += alpha[i];
    }
    rhs == q_multinomial_of(alpha)
}

/// `⟮n; k, n-k⟯_{q,2} = q^{n-k} (n-1; k-1)_{q²} + q^k (n-1; k)_{q²}`.
pub fn deformed_binomial(n: usize, k: usize) -> QPoly {
    let (n, k) = (n as i64, k as i64);
    let a = q_binomial(n - 1, k - 1).substitute_power(2).shift((n - k).max(0) as usize);
    let b = q_binomial(n - 1, k).substitute_power(2).shift(k as usize);
    &a + &b
}
