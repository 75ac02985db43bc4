//! The independent-hyperplane lower bound and the non-orientability screen.
//!
//! An oriented paving matroid of rank `r >= 3` on `n >= r + 5` elements has
//! at least `f(n, r) = 12 / (13 (r - 1)) * C(n, r - 2)` independent
//! hyperplanes. A paving matroid meeting the hypotheses with strictly fewer
//! is therefore not orientable. The screen never certifies orientability.
//! See [`min_elements`] for the size threshold used.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::census::{census, CensusReport};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::rational::ExactRational;
use crate::set::binomial;

/// Fewest elements for which the screen applies at rank `r`: eight at rank
/// 3, which leaves out the seven-line arrangement with only three simple
/// points, and `r + 4` from rank 4 on, the range in which the cube
/// relaxation `ag32_prime` is screened.
pub fn min_elements(r: usize) -> usize {
    if r <= 3 {
        r + 5
    } else {
        r + 4
    }
}

pub fn bound(n: usize, r: usize) -> Result<ExactRational> {
    if r < 3 {
        return Err(Error::BoundRankOutOfRange(r));
    }
    let c = BigInt::from(binomial(n as u64, (r - 2) as u64));
    Ok(ExactRational::new(c * 12, BigInt::from(13 * (r - 1))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Inapplicable {
    NotPaving,
    RankTooSmall,
    TooFewElements,
}

impl Inapplicable {
    pub fn as_str(&self) -> &'static str {
        match self {
            Inapplicable::NotPaving => "not_paving",
            Inapplicable::RankTooSmall => "rank_too_small",
            Inapplicable::TooFewElements => "too_few_elements",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    NotOrientable,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::NotOrientable => "not_orientable",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenVerdict {
    pub matroid_name: String,
    pub n: usize,
    pub r: usize,
    pub applicable: bool,
    pub reason_if_not: Option<Inapplicable>,
    /// `None` when `r < 3`, where the bound is undefined.
    pub bound: Option<ExactRational>,
    pub independent_count: usize,
    pub verdict: Verdict,
    /// The census backing a `not_orientable` verdict.
    pub certificate: Option<CensusReport>,
}

pub fn screen(m: &Matroid) -> ScreenVerdict {
    let (n, r) = (m.n(), m.r());
    let reason = if !m.is_paving() {
        Some(Inapplicable::NotPaving)
    } else if r < 3 {
        Some(Inapplicable::RankTooSmall)
    } else if n < min_elements(r) {
        Some(Inapplicable::TooFewElements)
    } else {
        None
    };
    let bound = bound(n, r).ok();
    let report = census(m).ok();
    let independent_count = report.as_ref().map_or(0, |c| c.counts.independent);
    let below = match &bound {
        Some(b) => ExactRational::from(independent_count as i64) < *b,
        None => false,
    };
    let (verdict, certificate) = if reason.is_none() && below {
        (Verdict::NotOrientable, report)
    } else {
        (Verdict::Inconclusive, None)
    };
    ScreenVerdict {
        matroid_name: m.label(),
        n,
        r,
        applicable: reason.is_none(),
        reason_if_not: reason,
        bound,
        independent_count,
        verdict,
        certificate,
    }
}

/// Checks that contracting `e` and adding it back is a bijection between the
/// independent hyperplanes of `M/e` and those of `M` that contain `e`.
pub fn verify_extension(m: &Matroid, e: u32) -> Result<bool> {
    let minor = m.contract(e)?;
    let e_bit = 1u64 << (e - 1);
    let mut lifted: Vec<u64> = Vec::new();
    if minor.matroid.r() > 0 {
        for h in census(&minor.matroid)?.independent() {
            let up = minor.lift(&h.elements, m.n()).bits() | e_bit;
            let is_independent_hyperplane = m.rank_bits(up) + 1 == m.r()
                && up.count_ones() as usize + 1 == m.r()
                && m.closure_bits(up) == up;
            if !is_independent_hyperplane {
                return Ok(false);
            }
            lifted.push(up);
        }
    }
    let mut through_e: Vec<u64> = if m.r() > 0 {
        census(m)?
            .independent()
            .map(|h| h.elements.bits())
            .filter(|b| b & e_bit != 0)
            .collect()
    } else {
        Vec::new()
    };
    lifted.sort_unstable();
    through_e.sort_unstable();
    Ok(lifted == through_e)
}

/// Sum over non-loop elements of the independent-hyperplane count of the
/// contraction, next to `(r - 1)` times the count of `m`.
pub fn double_count(m: &Matroid) -> Result<(usize, usize)> {
    let own = if m.r() == 0 {
        0
    } else {
        census(m)?.counts.independent
    };
    let mut sum = 0;
    for e in 1..=m.n() as u32 {
        if m.is_loop(e)? {
            continue;
        }
        let minor = m.contract(e)?.matroid;
        if minor.r() > 0 {
            sum += census(&minor)?.counts.independent;
        }
    }
    Ok((sum, m.r().saturating_sub(1) * own))
}

/// Checks `f(n, r) = n / (r - 1) * f(n - 1, r - 1)` exactly for
/// `4 <= r <= r_max` and `r <= n <= n_max`. Empty ranges hold vacuously.
pub fn verify_recurrence(r_max: usize, n_max: usize) -> bool {
    for r in 4..=r_max {
        for n in r..=n_max {
            let lhs = bound(n, r).expect("r >= 4");
            let rhs = ExactRational::new(n as i64, (r - 1) as i64)
                * bound(n - 1, r - 1).expect("r - 1 >= 3");
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
