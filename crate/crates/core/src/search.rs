//! Sparse paving generation and the independent-hyperplane scans.
//!
//! A sparse paving matroid of rank `r` on `n` elements is fixed by a family of
//! `r`-subsets (its circuit-hyperplanes) no two of which share `r - 1`
//! elements, i.e. a stable set in the Johnson graph `J(n, r)`.

use std::collections::HashSet;
use std::fmt;
use std::io::{self, BufRead, Write};
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::{census, CensusReport};
use crate::error::{Error, Result};
use crate::matroid::{Matroid, Representation};
use crate::rational::ExactRational;
use crate::screen::{bound, screen, Verdict};
use crate::set::{binomial, full_mask, Combinations, ElementSet, MaskIter};

pub const SCHEMA: &str = "pav-search-v1";
pub const MAX_SEARCH_N: usize = 16;
pub const MAX_EXHAUSTIVE_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GenerationMode {
    /// Seeded shuffle of all `r`-subsets, then greedy insertion; repeated.
    Random,
    /// The lexicographically greedy maximal family; a single matroid.
    Greedy,
    /// Every stable family in lexicographic order, starting from the empty one.
    Exhaustive,
}

impl GenerationMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            GenerationMode::Random => "random",
            GenerationMode::Greedy => "greedy",
            GenerationMode::Exhaustive => "exhaustive",
        }
    }
}

impl fmt::Display for GenerationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GenerationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(GenerationMode::Random),
            "greedy" => Ok(GenerationMode::Greedy),
            "exhaustive" => Ok(GenerationMode::Exhaustive),
            other => Err(Error::ParameterOutOfRange(format!(
                "unknown mode '{other}'"
            ))),
        }
    }
}

/// The `r(n - r)` sets adjacent to `s` in the Johnson graph.
fn johnson_neighbors(s: u64, n: usize) -> impl Iterator<Item = u64> {
    let outside = full_mask(n) & !s;
    MaskIter(s).flat_map(move |a| {
        MaskIter(outside).map(move |b| (s & !(1u64 << (a - 1))) | (1u64 << (b - 1)))
    })
}

fn greedy_family(order: &[u64], n: usize) -> Vec<u64> {
    let mut forbidden: HashSet<u64> = HashSet::new();
    let mut family = Vec::new();
    for &s in order {
        if forbidden.contains(&s) {
            continue;
        }
        family.push(s);
        forbidden.insert(s);
        forbidden.extend(johnson_neighbors(s, n));
    }
    family
}

/// Candidate blocks: all `r`-subsets except the whole ground set.
fn candidates(n: usize, r: usize) -> Vec<u64> {
    let ground = full_mask(n);
    Combinations::new(n, r).filter(|&s| s != ground).collect()
}

enum Source {
    Random {
        rng: Box<ChaCha8Rng>,
        pool: Vec<u64>,
    },
    Greedy {
        done: bool,
    },
    Exhaustive(ExhaustiveWalk),
}

/// Preorder walk over stable sets of `J(n, r)` with `n <= 8`.
struct ExhaustiveWalk {
    vertices: Vec<u64>,
    adjacency: Vec<u128>,
    stack: Vec<(usize, u128)>,
    chosen: Vec<usize>,
    started: bool,
}

impl ExhaustiveWalk {
    fn new(n: usize, r: usize) -> Self {
        let vertices = candidates(n, r);
        let adjacency = vertices
            .iter()
            .map(|&a| {
                vertices.iter().enumerate().fold(0u128, |m, (j, &b)| {
                    if (a & b).count_ones() as usize + 1 == r && a != b {
                        m | (1u128 << j)
                    } else {
                        m
                    }
                })
            })
            .collect();
        ExhaustiveWalk {
            vertices,
            adjacency,
            stack: Vec::new(),
            chosen: Vec::new(),
            started: false,
        }
    }

    fn family(&self) -> Vec<u64> {
        self.chosen.iter().map(|&i| self.vertices[i]).collect()
    }

    fn next_family(&mut self) -> Option<Vec<u64>> {
        if !self.started {
            self.started = true;
            self.stack.push((0, 0));
            return Some(self.family());
        }
        loop {
            let len = self.vertices.len();
            let (start, forbidden) = *self.stack.last()?;
            match (start..len).find(|&v| forbidden & (1u128 << v) == 0) {
                Some(v) => {
                    self.stack.last_mut().expect("nonempty").0 = v + 1;
                    self.chosen.push(v);
                    self.stack.push((v + 1, forbidden | self.adjacency[v]));
                    return Some(self.family());
                }
                None => {
                    self.stack.pop();
                    self.chosen.pop();
                }
            }
        }
    }
}

/// Stream of sparse paving matroids; see [`generate_sparse_paving`].
pub struct SparsePavingStream {
    n: usize,
    r: usize,
    remaining: usize,
    emitted: usize,
    label: String,
    source: Source,
}

impl Iterator for SparsePavingStream {
    type Item = Matroid;

    fn next(&mut self) -> Option<Matroid> {
        if self.remaining == 0 {
            return None;
        }
        let family = match &mut self.source {
            Source::Random { rng, pool } => {
                pool.shuffle(rng.as_mut());
                greedy_family(pool, self.n)
            }
            Source::Greedy { done } => {
                if *done {
                    return None;
                }
                *done = true;
                greedy_family(&candidates(self.n, self.r), self.n)
            }
            Source::Exhaustive(walk) => walk.next_family()?,
        };
        self.remaining -= 1;
        let index = self.emitted;
        self.emitted += 1;
        let m = Matroid::from_paving_masks(self.n, self.r, family)
            .expect("stable families of r-sets are sparse paving");
        Some(m.with_name(format!("{}:{}", self.label, index)))
    }
}

/// Emits at most `budget` sparse paving matroids of rank `r` on `n` elements.
pub fn generate_sparse_paving(
    n: usize,
    r: usize,
    mode: GenerationMode,
    seed: u64,
    budget: usize,
) -> Result<SparsePavingStream> {
    if !(3 <= r && r <= n && n <= MAX_SEARCH_N) {
        return Err(Error::ParameterOutOfRange(format!(
            "need 3 <= r <= n <= {MAX_SEARCH_N}, got n = {n}, r = {r}"
        )));
    }
    if budget == 0 {
        return Err(Error::ParameterOutOfRange(
            "budget must be at least 1".into(),
        ));
    }
    let source = match mode {
        GenerationMode::Random => Source::Random {
            rng: Box::new(ChaCha8Rng::seed_from_u64(seed)),
            pool: candidates(n, r),
        },
        GenerationMode::Greedy => Source::Greedy { done: false },
        GenerationMode::Exhaustive => {
            if n > MAX_EXHAUSTIVE_N {
                return Err(Error::ExhaustiveTooLarge(n));
            }
            Source::Exhaustive(ExhaustiveWalk::new(n, r))
        }
    };
    Ok(SparsePavingStream {
        n,
        r,
        remaining: budget,
        emitted: 0,
        label: format!("sparse_paving({n},{r},{mode},{seed})"),
        source,
    })
}

fn witness_from_report(m: &Matroid, report: &CensusReport) -> Option<ElementSet> {
    Combinations::new(m.n(), m.r() - 2)
        .map(|s| m.set(s))
        .find(|s| {
            let (simple, multiple) = report.profile(s);
            simple >= multiple
        })
}

/// The lexicographically first `(r-2)`-subset lying in at least as many
/// simple as multiple hyperplanes (counting hyperplanes that contain the
/// whole subset), or `None` when there is none.
pub fn problem2_scan(m: &Matroid) -> Result<Option<ElementSet>> {
    if !m.is_paving() {
        return Err(Error::NotPaving);
    }
    if m.r() < 3 {
        return Err(Error::ParameterOutOfRange(format!(
            "rank must be at least 3, got {}",
            m.r()
        )));
    }
    let report = census(m)?;
    Ok(witness_from_report(m, &report))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub index: usize,
    pub n: usize,
    pub r: usize,
    pub blocks: Vec<Vec<u32>>,
    pub independent_count: usize,
    pub hyperplane_total: usize,
    pub bound: ExactRational,
    /// `independent_count / C(n, r - 2)`
    pub ratio_binomial: ExactRational,
    /// `independent_count / n^3`
    pub ratio_cubic: ExactRational,
    pub problem2_witness: Option<Vec<u32>>,
    pub not_orientable: bool,
    pub seed: u64,
    pub generation_mode: String,
}

impl SearchRecord {
    pub fn from_matroid(
        index: usize,
        m: &Matroid,
        seed: u64,
        mode: GenerationMode,
    ) -> Result<SearchRecord> {
        let (n, r) = (m.n(), m.r());
        let Representation::Paving(pf) = m.representation() else {
            return Err(Error::NotPavingRep);
        };
        let report = census(m)?;
        let independent = report.counts.independent;
        let witness = if r >= 3 {
            witness_from_report(m, &report).map(|s| s.to_vec())
        } else {
            None
        };
        let verdict = screen(m);
        Ok(SearchRecord {
            index,
            n,
            r,
            blocks: pf
                .block_masks()
                .iter()
                .map(|&b| MaskIter(b).collect())
                .collect(),
            independent_count: independent,
            hyperplane_total: report.hyperplanes.len(),
            bound: bound(n, r)?,
            ratio_binomial: ExactRational::new(
                independent as i64,
                binomial(n as u64, (r - 2) as u64) as i64,
            ),
            ratio_cubic: ExactRational::new(independent as i64, (n * n * n) as i64),
            problem2_witness: witness,
            not_orientable: verdict.verdict == Verdict::NotOrientable,
            seed,
            generation_mode: mode.as_str().to_string(),
        })
    }

    pub fn matroid(&self) -> Result<Matroid> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| ElementSet::new(self.n, b.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Matroid::from_paving(self.n, self.r, &blocks)
    }

    /// Rebuilds the matroid from `blocks` and checks the recorded counts.
    pub fn verify(&self) -> Result<bool> {
        let m = self.matroid()?;
        let report = census(&m)?;
        let witness = witness_from_report(&m, &report).map(|s| s.to_vec());
        Ok(report.counts.independent == self.independent_count
            && report.hyperplanes.len() == self.hyperplane_total
            && witness == self.problem2_witness
            && self.independent_count <= self.hyperplane_total
            && (screen(&m).verdict == Verdict::NotOrientable) == self.not_orientable)
    }
}

fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::ParameterOutOfRange(e.to_string()))?;
    Ok(pool.install(f))
}

/// Generates and records matroids in generation order. The output does not
/// depend on `workers`.
pub fn scan(
    n: usize,
    r: usize,
    mode: GenerationMode,
    seed: u64,
    budget: usize,
    workers: usize,
) -> Result<Vec<SearchRecord>> {
    let matroids: Vec<Matroid> = generate_sparse_paving(n, r, mode, seed, budget)?.collect();
    with_pool(workers, || {
        matroids
            .par_iter()
            .enumerate()
            .map(|(i, m)| SearchRecord::from_matroid(i, m, seed, mode))
            .collect::<Result<Vec<_>>>()
    })?
}

/// Rank-4 scan over a range of `n`, sorted by ascending independent count
/// within each `n` (ties keep generation order).
pub fn problem1_scan(
    n_range: RangeInclusive<usize>,
    r: usize,
    mode: GenerationMode,
    seed: u64,
    budget: usize,
    workers: usize,
) -> Result<Vec<SearchRecord>> {
    if r != 4 {
        return Err(Error::ParameterOutOfRange(format!(
            "the rank-4 scan needs r = 4, got {r}"
        )));
    }
    let mut out = Vec::new();
    for n in n_range {
        let mut records = scan(n, r, mode, seed, budget, workers)?;
        records.sort_by_key(|rec| (rec.independent_count, rec.index));
        out.extend(records);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHeader {
    pub schema: String,
    pub version: u32,
    pub n: usize,
    pub r: usize,
    pub mode: String,
    pub seed: u64,
    pub budget: usize,
}

impl SearchHeader {
    pub fn new(n: usize, r: usize, mode: GenerationMode, seed: u64, budget: usize) -> Self {
        SearchHeader {
            schema: SCHEMA.to_string(),
            version: 1,
            n,
            r,
            mode: mode.as_str().to_string(),
            seed,
            budget,
        }
    }
}

/// Writes the header line followed by one record per line.
pub fn write_jsonl<W: Write>(
    mut out: W,
    header: &SearchHeader,
    records: &[SearchRecord],
) -> io::Result<()> {
    serde_json::to_writer(&mut out, header)?;
    out.write_all(b"\n")?;
    for rec in records {
        serde_json::to_writer(&mut out, rec)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn read_jsonl<R: BufRead>(input: R) -> io::Result<(SearchHeader, Vec<SearchRecord>)> {
    let mut lines = input.lines();
    let first = lines
        .next()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidData, "missing header"))??;
    let header: SearchHeader = serde_json::from_str(&first)?;
    if header.schema != SCHEMA {
        return Err(io::Error::new(
            io::ErrorKind::InvalidData,
            format!("unexpected schema '{}'", header.schema),
        ));
    }
    let mut records = Vec::new();
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        records.push(serde_json::from_str(&line)?);
    }
    Ok((header, records))
}
