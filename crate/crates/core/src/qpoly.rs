//! Integer polynomials in `q` with arbitrary-precision coefficients, q-analogues,
//! and products of cyclotomic polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial `Σ c_k q^k` stored densely from its lowest nonzero degree.
///
/// Invariant: `coeffs` is either empty (the zero polynomial, `offset == 0`) or
/// has nonzero first and last entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    offset: usize,
    coeffs: Vec<BigInt>,
}

impl QPoly {
    /// Builds `q^offset · Σ coeffs[i] q^i`, trimming zeros on both ends.
    pub fn new(offset: usize, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return QPoly::zero();
        }
        coeffs.drain(..lead);
        QPoly {
            offset: offset + lead,
            coeffs,
        }
    }

    pub fn from_ints(offset: usize, coeffs: &[i64]) -> Self {
        QPoly::new(offset, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Polynomial from a dense coefficient list starting at degree 0.
    pub fn from_dense(coeffs: Vec<BigInt>) -> Self {
        QPoly::new(0, coeffs)
    }

    pub fn zero() -> Self {
        QPoly {
            offset: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        QPoly::monomial(0)
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        QPoly {
            offset: k,
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        QPoly::new(0, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest degree carrying a nonzero coefficient (0 for the zero polynomial).
    pub fn offset(&self) -> usize {
        self.offset
    }

    /// Coefficients from degree `offset` to the top degree.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn min_degree(&self) -> Option<usize> {
        (!self.is_zero()).then_some(self.offset)
    }

    pub fn degree(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() - 1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        if k < self.offset {
            return BigInt::zero();
        }
        self.coeffs
            .get(k - self.offset)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Dense coefficient list from degree 0.
    pub fn dense(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.offset];
        out.extend(self.coeffs.iter().cloned());
        out
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Degrees with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| self.offset + i)
            .collect()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `p(q^m)`.
    pub fn substitute_power(&self, m: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        if m == 0 {
            return QPoly::constant(self.eval_one());
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m] = c.clone();
        }
        QPoly::new(self.offset * m, coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        QPoly::new(self.offset, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides every coefficient by `c`, failing unless all divisions are exact.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<QPoly> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NonzeroRemainder);
            }
            out.push(q);
        }
        Ok(QPoly::new(self.offset, out))
    }

    /// Exact quotient `self / den` over the integers.
    pub fn divide_exact(&self, den: &QPoly) -> Result<QPoly> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        if self.offset < den.offset || self.coeffs.len() < den.coeffs.len() {
            return Err(Error::NonzeroRemainder);
        }
        let mut rem = self.coeffs.clone();
        let dl = den.coeffs.len();
        let ql = rem.len() - dl + 1;
        let lead = den.coeffs.last().expect("nonzero");
        let mut quot = vec![BigInt::zero(); ql];
        for i in (0..ql).rev() {
            let top = &rem[i + dl - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonzeroRemainder);
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonzeroRemainder);
        }
        Ok(QPoly::new(self.offset - den.offset, quot))
    }

    /// Coefficients read the same forwards and backwards.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Coefficients weakly rise then weakly fall.
    pub fn is_unimodal(&self) -> bool {
        is_unimodal_seq(&self.coeffs)
    }

    /// A zero coefficient strictly between two nonzero ones.
    pub fn has_internal_zeros(&self) -> bool {
        self.coeffs.iter().any(Zero::is_zero)
    }

    /// Even-degree and odd-degree coefficient sequences are each unimodal.
    pub fn is_parity_unimodal(&self) -> bool {
        let dense = self.dense();
        let evens: Vec<BigInt> = dense.iter().step_by(2).cloned().collect();
        let odds: Vec<BigInt> = dense.iter().skip(1).step_by(2).cloned().collect();
        is_unimodal_seq(&evens) && is_unimodal_seq(&odds)
    }

    pub fn shape_predicates(&self) -> ShapePredicates {
        ShapePredicates {
            symmetric: self.is_symmetric(),
            unimodal: self.is_unimodal(),
            internal_zeros: self.has_internal_zeros(),
            parity_unimodal: self.is_parity_unimodal(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

fn is_unimodal_seq(c: &[BigInt]) -> bool {
    let mut i = 1;
    while i < c.len() && c[i - 1] <= c[i] {
        i += 1;
    }
    while i < c.len() && c[i - 1] >= c[i] {
        i += 1;
    }
    i >= c.len()
}

/// Coefficient-shape summary of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShapePredicates {
    pub symmetric: bool,
    pub unimodal: bool,
    pub internal_zeros: bool,
    pub parity_unimodal: bool,
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let hi = self.degree().unwrap().max(rhs.degree().unwrap());
        let mut out = vec![BigInt::zero(); hi - lo + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[self.offset - lo + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[rhs.offset - lo + i] += c;
        }
        QPoly::new(lo, out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(self.offset + rhs.offset, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $f(self, rhs: QPoly) -> QPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |a, b| &a * &b)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.offset + i;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}q^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct QPolyRepr {
    offset: usize,
    coeffs: Vec<String>,
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QPolyRepr {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = QPolyRepr::deserialize(d)?;
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QPoly::new(r.offset, coeffs))
    }
}

// ---------------------------------------------------------------------------
// Small number theory

pub(crate) fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub(crate) fn mobius(n: usize) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub(crate) fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

fn cyclotomic_cache() -> &'static Mutex<HashMap<usize, QPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, QPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The cyclotomic polynomial `Φ_j`, computed as `(q^j - 1) / Π_{d | j, d < j} Φ_d`
/// and memoized process-wide.
pub fn cyclotomic(j: usize) -> QPoly {
    assert!(j >= 1, "Φ_0 is undefined");
    if let Some(p) = cyclotomic_cache().lock().expect("cache poisoned").get(&j) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); j + 1];
    num[0] = BigInt::from(-1);
    num[j] = BigInt::one();
    let mut p = QPoly::from_dense(num);
    for d in divisors(j).into_iter().filter(|&d| d < j) {
        p = p
            .divide_exact(&cyclotomic(d))
            .expect("q^j - 1 is divisible by Φ_d for d | j");
    }
    cyclotomic_cache()
        .lock()
        .expect("cache poisoned")
        .entry(j)
        .or_insert(p)
        .clone()
}

/// `q^shift · Π_{j ≥ 2} Φ_j^{e_j}`, with exponents allowed to go negative while
/// building ratios.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycloProduct {
    shift: usize,
    exponents: BTreeMap<usize, i64>,
}

impl CycloProduct {
    pub fn one() -> Self {
        CycloProduct::default()
    }

    pub fn with_shift(shift: usize) -> Self {
        CycloProduct {
            shift,
            exponents: BTreeMap::new(),
        }
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    /// Nonzero exponents, keyed by `j ≥ 2`.
    pub fn exponents(&self) -> &BTreeMap<usize, i64> {
        &self.exponents
    }

    pub fn exponent(&self, j: usize) -> i64 {
        self.exponents.get(&j).copied().unwrap_or(0)
    }

    /// Multiplies in `Φ_j^e`.
    pub fn add_exponent(&mut self, j: usize, e: i64) {
        assert!(j >= 2, "only Φ_j with j ≥ 2 are tracked");
        let slot = self.exponents.entry(j).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exponents.remove(&j);
        }
    }

    /// Multiplies in `[k]_q^e`.
    pub fn add_q_integer(&mut self, k: usize, e: i64) {
        for j in divisors(k).into_iter().filter(|&j| j >= 2) {
            self.add_exponent(j, e);
        }
    }

    /// Multiplies in `[k]_q!^e`.
    pub fn add_q_factorial(&mut self, k: usize, e: i64) {
        for j in 2..=k {
            self.add_exponent(j, e * (k / j) as i64);
        }
    }

    pub fn mul(&self, other: &CycloProduct) -> CycloProduct {
        let mut out = self.clone();
        out.shift += other.shift;
        for (&j, &e) in &other.exponents {
            out.add_exponent(j, e);
        }
        out
    }

    pub fn is_polynomial(&self) -> bool {
        self.exponents.values().all(|&e| e >= 0)
    }

    /// Degree of the expanded product.
    pub fn degree(&self) -> i64 {
        self.shift as i64
            + self
                .exponents
                .iter()
                .map(|(&j, &e)| e * euler_phi(j) as i64)
                .sum::<i64>()
    }

    fn check_nonnegative(&self) -> Result<()> {
        match self.exponents.iter().find(|(_, &e)| e < 0) {
            Some((&index, &exponent)) => Err(Error::NegativeExponent { index, exponent }),
            None => Ok(()),
        }
    }

    /// Expands into a dense polynomial.
    ///
    /// Factors are taken in increasing `j`. Each `Φ_j` is applied through
    /// `Φ_j = Π_{d | j} (1 - q^d)^{μ(j/d)}`, working modulo `q^{L}` where `L - 1`
    /// is the degree after the factor, so every step is a linear pass and the
    /// truncation is exact.
    pub fn expand(&self) -> Result<QPoly> {
        self.check_nonnegative()?;
        let mut v = vec![BigInt::one()];
        for (&j, &e) in &self.exponents {
            let steps: Vec<(usize, i64)> = divisors(j)
                .into_iter()
                .map(|d| (d, mobius(j / d)))
                .filter(|&(_, mu)| mu != 0)
                .collect();
            let grow = euler_phi(j);
            for _ in 0..e {
                v.resize(v.len() + grow, BigInt::zero());
                for &(d, mu) in steps.iter().filter(|s| s.1 > 0) {
                    debug_assert_eq!(mu, 1);
                    mul_one_minus_qd(&mut v, d);
                }
                for &(d, _) in steps.iter().filter(|s| s.1 < 0) {
                    div_one_minus_qd(&mut v, d);
                }
            }
        }
        Ok(QPoly::new(self.shift, v))
    }

    /// Expands by multiplying the memoized `Φ_j` one at a time.
    pub fn expand_by_multiplication(&self) -> Result<QPoly> {
        self.check_nonnegative()?;
        let mut acc = QPoly::monomial(self.shift);
        for (&j, &e) in &self.exponents {
            let phi = cyclotomic(j);
            for _ in 0..e {
                acc = &acc * &phi;
            }
        }
        Ok(acc)
    }
}

/// In place `v ← v · (1 - q^d) mod q^{len}`.
fn mul_one_minus_qd(v: &mut [BigInt], d: usize) {
    for k in (d..v.len()).rev() {
        let (lo, hi) = v.split_at_mut(k);
        if !lo[k - d].is_zero() {
            hi[0] -= &lo[k - d];
        }
    }
}

/// In place `v ← v / (1 - q^d) mod q^{len}`.
fn div_one_minus_qd(v: &mut [BigInt], d: usize) {
    for k in d..v.len() {
        let (lo, hi) = v.split_at_mut(k);
        if !lo[k - d].is_zero() {
            hi[0] += &lo[k - d];
        }
    }
}

// ---------------------------------------------------------------------------
// q-analogues

/// `[k]_q = 1 + q + … + q^{k-1}`.
pub fn q_integer(k: usize) -> QPoly {
    QPoly::new(0, vec![BigInt::one(); k])
}

pub fn q_factorial(n: usize) -> QPoly {
    let mut c = CycloProduct::one();
    c.add_q_factorial(n, 1);
    c.expand().expect("factorials are polynomials")
}

/// Gaussian binomial; zero when `k < 0`, `k > n` or `n < 0`.
pub fn q_binomial(n: i64, k: i64) -> QPoly {
    if n < 0 || k < 0 || k > n {
        return QPoly::zero();
    }
    q_multinomial(n as usize, &[k, n - k])
}

/// `[n]_q! / Π [α_i]_q!`; zero if an entry is negative or the entries do not sum to `n`.
pub fn q_multinomial(n: usize, alpha: &[i64]) -> QPoly {
    if alpha.iter().any(|&a| a < 0) || alpha.iter().sum::<i64>() != n as i64 {
        return QPoly::zero();
    }
    let mut c = CycloProduct::one();
    c.add_q_factorial(n, 1);
    for &a in alpha {
        c.add_q_factorial(a as usize, -1);
    }
    c.expand().expect("q-multinomials are polynomials")
}

/// `q_multinomial` for unsigned entries.
pub fn q_multinomial_of(alpha: &[usize]) -> QPoly {
    let signed: Vec<i64> = alpha.iter().map(|&a| a as i64).collect();
    q_multinomial(alpha.iter().sum(), &signed)
}
