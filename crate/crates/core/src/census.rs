//! Hyperplane enumeration and classification.
//!
//! A hyperplane `H` of a rank-`r` matroid is *independent* when `|H| = r - 1`,
//! *simple* when some `e` in `H` leaves a flat `H \ {e}`, and *multiple*
//! otherwise. Independent hyperplanes are simple for every element, so the
//! `simple` count in a [`Counts`] includes them.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{lex_cmp, Combinations, ElementSet, MaskIter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Independent,
    Simple,
    Multiple,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Independent => "independent",
            Classification::Simple => "simple",
            Classification::Multiple => "multiple",
        }
    }

    /// True for independent and simple hyperplanes.
    pub fn is_simple(&self) -> bool {
        !matches!(self, Classification::Multiple)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneRecord {
    #[serde(with = "element_list")]
    pub elements: ElementSet,
    pub size: usize,
    pub classification: Classification,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub independent: usize,
    /// Hyperplanes that are simple, independent ones included.
    pub simple: usize,
    pub multiple: usize,
}

impl Counts {
    pub fn total(&self) -> usize {
        self.simple + self.multiple
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetProfile {
    #[serde(with = "element_list")]
    pub subset: ElementSet,
    pub simple: usize,
    pub multiple: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub matroid_name: String,
    pub n: usize,
    pub r: usize,
    pub counts: Counts,
    pub hyperplanes: Vec<HyperplaneRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub per_subset_profiles: Option<Vec<SubsetProfile>>,
}

impl CensusReport {
    pub fn independent(&self) -> impl Iterator<Item = &HyperplaneRecord> {
        self.hyperplanes
            .iter()
            .filter(|h| h.classification == Classification::Independent)
    }

    /// (simple, multiple) counts over hyperplanes containing `s`.
    pub fn profile(&self, s: &ElementSet) -> (usize, usize) {
        let mut simple = 0;
        let mut multiple = 0;
        for h in self.hyperplanes.iter().filter(|h| s.is_subset(&h.elements)) {
            if h.classification.is_simple() {
                simple += 1;
            } else {
                multiple += 1;
            }
        }
        (simple, multiple)
    }
}

pub(crate) mod element_list {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::set::ElementSet;

    pub fn serialize<S: Serializer>(set: &ElementSet, s: S) -> Result<S::Ok, S::Error> {
        set.to_vec().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ElementSet, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        let n = v.iter().copied().max().unwrap_or(0) as usize;
        ElementSet::new(n, v).map_err(serde::de::Error::custom)
    }
}

/// Rank-`(r-1)` flats as masks, sorted lexicographically.
pub(crate) fn hyperplane_masks(m: &Matroid) -> Vec<u64> {
    let r = m.r();
    if r == 0 {
        return Vec::new();
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in Combinations::new(m.n(), r - 1) {
        if m.rank_bits(s) == r - 1 {
            let h = m.closure_bits(s);
            if seen.insert(h) {
                out.push(h);
            }
        }
    }
    out.sort_by(|a, b| lex_cmp(*a, *b));
    out
}

fn hyperplane_masks_sharded(m: &Matroid, workers: usize) -> Vec<u64> {
    let r = m.r();
    if r == 0 {
        return Vec::new();
    }
    let subsets: Vec<u64> = Combinations::new(m.n(), r - 1).collect();
    let chunk = subsets.len().div_ceil(workers.max(1) * 4).max(1);
    let mut out: Vec<u64> = subsets
        .par_chunks(chunk)
        .flat_map_iter(|part| {
            part.iter()
                .filter(|&&s| m.rank_bits(s) == r - 1)
                .map(|&s| m.closure_bits(s))
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort_by(|a, b| lex_cmp(*a, *b));
    out.dedup();
    out
}

/// All hyperplanes of `m`, sorted lexicographically.
pub fn hyperplanes(m: &Matroid) -> Result<Vec<ElementSet>> {
    if m.r() == 0 {
        return Err(Error::RankZero);
    }
    Ok(hyperplane_masks(m).into_iter().map(|h| m.set(h)).collect())
}

fn classify_mask(m: &Matroid, h: u64) -> Classification {
    let size = h.count_ones() as usize;
    if size + 1 == m.r() {
        Classification::Independent
    } else if MaskIter(h).any(|e| {
        let rest = h & !(1u64 << (e - 1));
        m.closure_bits(rest) == rest
    }) {
        Classification::Simple
    } else {
        Classification::Multiple
    }
}

pub fn classify(m: &Matroid, h: &ElementSet) -> Result<Classification> {
    let r = m.r();
    if r == 0 {
        return Err(Error::RankZero);
    }
    if m.rank(h)? != r - 1 || !m.is_flat(h)? {
        return Err(Error::NotAHyperplane(h.to_string()));
    }
    Ok(classify_mask(m, h.bits()))
}

fn build_report(m: &Matroid, masks: Vec<u64>) -> CensusReport {
    let mut counts = Counts::default();
    let hyperplanes = masks
        .into_iter()
        .map(|h| {
            let classification = classify_mask(m, h);
            match classification {
                Classification::Independent => {
                    counts.independent += 1;
                    counts.simple += 1;
                }
                Classification::Simple => counts.simple += 1,
                Classification::Multiple => counts.multiple += 1,
            }
            HyperplaneRecord {
                elements: m.set(h),
                size: h.count_ones() as usize,
                classification,
            }
        })
        .collect();
    CensusReport {
        matroid_name: m.label(),
        n: m.n(),
        r: m.r(),
        counts,
        hyperplanes,
        per_subset_profiles: None,
    }
}

pub fn census(m: &Matroid) -> Result<CensusReport> {
    if m.r() == 0 {
        return Err(Error::RankZero);
    }
    Ok(build_report(m, hyperplane_masks(m)))
}

/// Same report as [`census`], with the closure work spread over `workers`
/// threads. The merged output does not depend on `workers`.
pub fn census_with_workers(m: &Matroid, workers: usize) -> Result<CensusReport> {
    if m.r() == 0 {
        return Err(Error::RankZero);
    }
    if workers <= 1 {
        return census(m);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::ParameterOutOfRange(e.to_string()))?;
    let masks = pool.install(|| hyperplane_masks_sharded(m, workers));
    Ok(build_report(m, masks))
}

/// Census plus the simple/multiple profile of every `(r-2)`-subset.
pub fn census_with_profiles(m: &Matroid) -> Result<CensusReport> {
    let mut report = census(m)?;
    if m.r() >= 2 {
        let profiles = Combinations::new(m.n(), m.r() - 2)
            .map(|s| {
                let subset = m.set(s);
                let (simple, multiple) = report.profile(&subset);
                SubsetProfile {
                    subset,
                    simple,
                    multiple,
                }
            })
            .collect();
        report.per_subset_profiles = Some(profiles);
    }
    Ok(report)
}

/// Counts hyperplanes containing `s`, split into (simple, multiple).
pub fn subset_profile(m: &Matroid, s: &ElementSet) -> Result<(usize, usize)> {
    let r = m.r();
    if r < 2 || s.len() + 2 != r {
        return Err(Error::WrongSubsetSize {
            got: s.len(),
            expected: r.saturating_sub(2),
        });
    }
    m.rank(s)?;
    let report = census(m)?;
    Ok(report.profile(s))
}
