//! Predicted supports (degrees with nonzero coefficient) of the generating
//! functions, and comparison against computed polynomials.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qpoly::QPoly;
use crate::shapes::{BlockShape, Partition, SkewShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// maj on `SYT(λ)`.
    TypeA,
    /// des on `SYT(λ/ν)`.
    Des,
    /// Fake degrees of `G(m,1,n)`.
    Wreath,
    /// Fake degrees of `G(m,d,n)`.
    Gmdn,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::TypeA => "typea",
            Family::Des => "des",
            Family::Wreath => "wreath",
            Family::Gmdn => "gmdn",
        }
    }
}

/// A finite predicted support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportPrediction {
    pub family: Family,
    pub degrees: Vec<usize>,
    /// `false` when only the smallest and largest degrees are known to be right.
    pub interval_verified: bool,
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `{b(λ), …, C(n,2) - b(λ')}`, less `b(λ)+1` and the penultimate degree for
/// rectangles with at least two rows and columns.
pub fn support_type_a(p: &Partition) -> SupportPrediction {
    let lo = p.b();
    let hi = choose2(p.size()) - p.conjugate().b();
    let mut degrees: Vec<usize> = (lo..=hi).collect();
    if p.is_big_rectangle() {
        degrees.retain(|&k| k != lo + 1 && k + 1 != hi);
    }
    SupportPrediction {
        family: Family::TypeA,
        degrees,
        interval_verified: true,
    }
}

/// des takes every value between `c - 1` and `n - r`, where `c` and `r` are
/// the longest column and row. For skew shapes the interior is not claimed.
pub fn support_des(shape: &SkewShape) -> SupportPrediction {
    let n = shape.size();
    if n == 0 {
        return SupportPrediction {
            family: Family::Des,
            degrees: vec![0],
            interval_verified: true,
        };
    }
    let lo = shape.max_column_length() - 1;
    let hi = n - shape.max_row_length();
    SupportPrediction {
        family: Family::Des,
        degrees: (lo..=hi).collect(),
        interval_verified: shape.is_straight(),
    }
}

/// Exceptional offsets for a tuple with a single nonempty block that is a
/// rectangle with at least two rows and columns.
fn wreath_exceptions(blocks: &BlockShape) -> BTreeSet<usize> {
    let nonempty: Vec<&Partition> = blocks.blocks().iter().filter(|p| !p.is_empty()).collect();
    match nonempty.as_slice() {
        [p] if p.is_big_rectangle() => {
            let n = p.size();
            [1, choose2(n + 1) - p.hook_sum() - 1].into_iter().collect()
        }
        _ => BTreeSet::new(),
    }
}

/// Degrees of `q^{b(α)} SYT(λ̄)^maj(q^m)` predicted from the block structure.
pub fn support_wreath(blocks: &BlockShape, m: usize) -> Result<SupportPrediction> {
    if blocks.m() != m {
        return Err(Error::BlockCountMismatch {
            expected: m,
            found: blocks.m(),
        });
    }
    let n = blocks.n();
    let top = choose2(n + 1) - blocks.hook_sum();
    let skip = wreath_exceptions(blocks);
    let base = blocks.b_alpha() + m * blocks.b();
    let degrees = (0..=top)
        .filter(|t| !skip.contains(t))
        .map(|t| base + m * t)
        .collect();
    Ok(SupportPrediction {
        family: Family::Wreath,
        degrees,
        interval_verified: true,
    })
}

/// Exceptional offsets for one orbit member `μ̄` whose first `m/d` blocks hold `s > 0` cells.
fn gmdn_exceptions(mu: &BlockShape, s: usize) -> BTreeSet<usize> {
    let n = mu.n();
    let mut out = BTreeSet::new();
    for p in mu.blocks().iter().filter(|p| p.is_big_rectangle()) {
        if p.size() == n {
            out.extend([1, choose2(n + 1) - p.hook_sum() - 1]);
        } else if p.size() + 1 == n && s == 1 {
            // One below the top degree, where the rectangle's gap sits.
            out.extend([1, choose2(n) - p.hook_sum() - 1]);
        }
    }
    out
}

/// Union over orbit members `μ̄` with `s = |μ^(1)| + … + |μ^(m/d)| > 0` of
/// `b(α(μ̄)) + m (b(μ̄) + t)` for `t ∈ {0, …, s + C(n,2) - Σ h} ∖ D`.
pub fn support_gmdn(blocks: &BlockShape, m: usize, d: usize) -> Result<SupportPrediction> {
    if blocks.m() != m {
        return Err(Error::BlockCountMismatch {
            expected: m,
            found: blocks.m(),
        });
    }
    let orbit = blocks.orbit(d)?;
    let n = blocks.n();
    let step = m / d;
    let mut degrees = BTreeSet::new();
    for mu in &orbit {
        let s: usize = mu.alpha()[..step].iter().sum();
        if s == 0 {
            continue;
        }
        let top = s + choose2(n) - mu.hook_sum();
        let skip = gmdn_exceptions(mu, s);
        let base = mu.b_alpha() + m * mu.b();
        degrees.extend((0..=top).filter(|t| !skip.contains(t)).map(|t| base + m * t));
    }
    Ok(SupportPrediction {
        family: Family::Gmdn,
        degrees: degrees.into_iter().collect(),
        interval_verified: true,
    })
}

/// Predicted versus actual support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportReport {
    pub actual: Vec<usize>,
    pub equal: bool,
    pub family: &'static str,
    pub predicted: Vec<usize>,
    pub shape: String,
}

impl SupportReport {
    /// Degrees in exactly one of the two sets.
    pub fn mismatches(&self) -> Vec<usize> {
        let a: BTreeSet<usize> = self.predicted.iter().copied().collect();
        let b: BTreeSet<usize> = self.actual.iter().copied().collect();
        a.symmetric_difference(&b).copied().collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Compares a prediction with the nonzero degrees of `actual`. Predictions
/// whose interior is unverified are compared on their endpoints only.
pub fn verify_support(shape: impl ToString, prediction: &SupportPrediction, actual: &QPoly) -> SupportReport {
    let support = actual.support();
    let equal = if prediction.interval_verified {
        prediction.degrees == support
    } else {
        prediction.degrees.first() == support.first() && prediction.degrees.last() == support.last()
    };
    SupportReport {
        actual: support,
        equal,
        family: prediction.family.name(),
        predicted: prediction.degrees.clone(),
        shape: shape.to_string(),
    }
}

pub fn check_parity_unimodal(p: &QPoly) -> bool {
    p.is_parity_unimodal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::{gmdn_fake_degree, syt_gf, wreath_fake_degree};

    #[test]
    fn rectangle_gaps() {
        let p: Partition = "2,2".parse().unwrap();
        assert_eq!(support_type_a(&p).degrees, vec![2, 4]);
        let p: Partition = "4,2".parse().unwrap();
        let pred = support_type_a(&p);
        assert!(verify_support(&p, &pred, &syt_gf(&p)).equal);
    }

    #[test]
    fn wreath_examples() {
        let b: BlockShape = "|3,3".parse().unwrap();
        let pred = support_wreath(&b, 2).unwrap();
        assert_eq!(pred.degrees, vec![12, 16, 18, 20, 24]);
        assert!(verify_support(&b, &pred, &wreath_fake_degree(&b, 2).unwrap()).equal);
        let b: BlockShape = "2|3,1".parse().unwrap();
        assert_eq!(support_wreath(&b, 2).unwrap().degrees, (6..=26).step_by(2).collect::<Vec<_>>());
    }

    #[test]
    fn gmdn_examples() {
        let b: BlockShape = "|3,3".parse().unwrap();
        let pred = support_gmdn(&b, 2, 2).unwrap();
        assert_eq!(pred.degrees, vec![6, 10, 12, 14, 18]);
        assert!(verify_support(&b, &pred, &gmdn_fake_degree(&b, 2, 2).unwrap()).equal);
        let b: BlockShape = "2|3,1".parse().unwrap();
        assert_eq!(support_gmdn(&b, 2, 2).unwrap().degrees, (4..=20).step_by(2).collect::<Vec<_>>());
    }

    #[test]
    fn des_interval() {
        let p: Partition = "3,2,1".parse().unwrap();
        assert_eq!(support_des(&SkewShape::straight(p)).degrees, vec![2, 3]);
        let s = SkewShape::new("3,3".parse().unwrap(), "2".parse().unwrap()).unwrap();
        assert!(!support_des(&s).interval_verified);
    }
}
