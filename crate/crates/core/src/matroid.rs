//! Matroid representations, rank and closure oracles, minors and duality.
//!
//! Two representations are supported. A paving family stores only the
//! nontrivial hyperplanes (blocks of size at least `r`) and answers rank
//! queries with a closed formula. A circuit list stores the circuits and
//! answers rank queries greedily. Values are immutable once built.

use std::collections::HashSet;

use crate::census::hyperplane_masks;
use crate::error::{Error, Result};
use crate::set::{
    format_mask, full_mask, lex_cmp, Combinations, ElementSet, MaskIter, MAX_ELEMENTS,
};

/// Nontrivial hyperplanes of a paving matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PavingFamily {
    r: usize,
    blocks: Vec<u64>,
}

impl PavingFamily {
    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn block_masks(&self) -> &[u64] {
        &self.blocks
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitList {
    circuits: Vec<u64>,
}

impl CircuitList {
    pub fn circuit_masks(&self) -> &[u64] {
        &self.circuits
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Representation {
    Paving(PavingFamily),
    Circuits(CircuitList),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    r: usize,
    rep: Representation,
    name: Option<String>,
}

/// A minor together with the original id of each of its elements:
/// `labels[i]` is the element of the parent that became `i + 1`.
#[derive(Debug, Clone)]
pub struct Minor {
    pub matroid: Matroid,
    pub labels: Vec<u32>,
}

impl Minor {
    /// Maps a set of the minor back to the parent's labels.
    pub fn lift(&self, set: &ElementSet, parent_n: usize) -> ElementSet {
        let bits = set
            .iter()
            .fold(0u64, |m, e| m | 1u64 << (self.labels[e as usize - 1] - 1));
        ElementSet::from_bits_unchecked(parent_n, bits)
    }
}

#[inline]
fn bit(e: u32) -> u64 {
    1u64 << (e - 1)
}

/// Removes bit position `p`, shifting higher bits down by one.
#[inline]
fn squeeze(bits: u64, p: u32) -> u64 {
    let low = (1u64 << p) - 1;
    let b = bits & !(1u64 << p);
    (b & low) | ((b >> 1) & !low)
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_ELEMENTS {
        Err(Error::GroundSetTooLarge(n))
    } else {
        Ok(())
    }
}

fn check_mask(n: usize, bits: u64) -> Result<()> {
    if bits & !full_mask(n) != 0 {
        Err(Error::ElementOutOfRange {
            element: 64 - bits.leading_zeros(),
            n,
        })
    } else {
        Ok(())
    }
}

fn sort_masks(v: &mut [u64]) {
    v.sort_by(|a, b| lex_cmp(*a, *b));
}

impl Matroid {
    /// Builds a paving matroid of rank `r` on `{1..n}` from its nontrivial
    /// hyperplanes.
    pub fn from_paving(n: usize, r: usize, blocks: &[ElementSet]) -> Result<Matroid> {
        check_n(n)?;
        let masks: Vec<u64> = blocks.iter().map(|b| b.bits()).collect();
        Self::from_paving_masks(n, r, masks)
    }

    pub(crate) fn from_paving_masks(n: usize, r: usize, mut blocks: Vec<u64>) -> Result<Matroid> {
        check_n(n)?;
        if r > n {
            return Err(Error::RankOutOfRange { r, n });
        }
        if r == 0 && !blocks.is_empty() {
            return Err(Error::BlocksAtRankZero);
        }
        let ground = full_mask(n);
        for &b in &blocks {
            check_mask(n, b)?;
            let size = b.count_ones() as usize;
            if size < r {
                return Err(Error::BlockTooSmall {
                    block: format_mask(b),
                    size,
                    r,
                });
            }
            if b == ground {
                return Err(Error::BlockSpansGround(format_mask(b)));
            }
        }
        sort_masks(&mut blocks);
        blocks.dedup();
        let max = r as i64 - 2;
        for (i, &a) in blocks.iter().enumerate() {
            for &b in &blocks[i + 1..] {
                let shared = (a & b).count_ones() as i64;
                if shared > max {
                    return Err(Error::BlockOverlap {
                        first: format_mask(a),
                        second: format_mask(b),
                        shared: shared as usize,
                        max,
                    });
                }
            }
        }
        Ok(Matroid {
            n,
            r,
            rep: Representation::Paving(PavingFamily { r, blocks }),
            name: None,
        })
    }

    /// Builds a matroid from its circuits; the rank is inferred. Circuit
    /// elimination is checked exhaustively when `n <= 12`.
    pub fn from_circuits(n: usize, circuits: &[ElementSet]) -> Result<Matroid> {
        check_n(n)?;
        let mut masks: Vec<u64> = Vec::with_capacity(circuits.len());
        for c in circuits {
            check_mask(n, c.bits())?;
            if c.is_empty() {
                return Err(Error::EmptyCircuit);
            }
            masks.push(c.bits());
        }
        sort_masks(&mut masks);
        masks.dedup();
        for (i, &a) in masks.iter().enumerate() {
            for (j, &b) in masks.iter().enumerate() {
                if i != j && a & !b == 0 {
                    return Err(Error::NotAnAntichain {
                        inner: format_mask(a),
                        outer: format_mask(b),
                    });
                }
            }
        }
        let m = Self::from_circuit_masks_unchecked(n, masks);
        if n <= 12 {
            m.validate_circuit_axioms()?;
        }
        Ok(m)
    }

    pub(crate) fn from_circuit_masks_unchecked(n: usize, mut masks: Vec<u64>) -> Matroid {
        sort_masks(&mut masks);
        masks.dedup();
        let mut m = Matroid {
            n,
            r: 0,
            rep: Representation::Circuits(CircuitList { circuits: masks }),
            name: None,
        };
        m.r = m.rank_bits(full_mask(n));
        m
    }

    /// Uniform matroid `U_{r,n}`: every `r`-subset is a basis.
    pub fn uniform(n: usize, r: usize) -> Result<Matroid> {
        Ok(Self::from_paving_masks(n, r, Vec::new())?.with_name(format!("uniform({n},{r})")))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Matroid {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| "unnamed".to_string())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the whole ground set.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::from_bits_unchecked(self.n, full_mask(self.n))
    }

    pub(crate) fn ground_bits(&self) -> u64 {
        full_mask(self.n)
    }

    fn checked(&self, s: &ElementSet) -> Result<u64> {
        check_mask(self.n, s.bits())?;
        Ok(s.bits())
    }

    pub(crate) fn set(&self, bits: u64) -> ElementSet {
        ElementSet::from_bits_unchecked(self.n, bits)
    }

    pub fn rank(&self, s: &ElementSet) -> Result<usize> {
        Ok(self.rank_bits(self.checked(s)?))
    }

    pub fn closure(&self, s: &ElementSet) -> Result<ElementSet> {
        Ok(self.set(self.closure_bits(self.checked(s)?)))
    }

    pub fn is_independent(&self, s: &ElementSet) -> Result<bool> {
        Ok(self.rank(s)? == s.len())
    }

    pub fn is_flat(&self, s: &ElementSet) -> Result<bool> {
        let b = self.checked(s)?;
        Ok(self.closure_bits(b) == b)
    }

    pub fn is_loop(&self, e: u32) -> Result<bool> {
        let s = ElementSet::new(self.n, [e])?;
        Ok(self.rank_bits(s.bits()) == 0)
    }

    pub(crate) fn rank_bits(&self, s: u64) -> usize {
        match &self.rep {
            Representation::Paving(p) => {
                let k = s.count_ones() as usize;
                if k < self.r {
                    k
                } else if p.blocks.iter().any(|&b| s & !b == 0) {
                    self.r - 1
                } else {
                    self.r
                }
            }
            Representation::Circuits(c) => {
                let mut indep = 0u64;
                for x in MaskIter(s) {
                    let xb = bit(x);
                    let cand = indep | xb;
                    if !c
                        .circuits
                        .iter()
                        .any(|&circ| circ & xb != 0 && circ & !cand == 0)
                    {
                        indep = cand;
                    }
                }
                indep.count_ones() as usize
            }
        }
    }

    pub(crate) fn closure_bits(&self, s: u64) -> u64 {
        let rk = self.rank_bits(s);
        if let Representation::Paving(_) = self.rep {
            // sets of size <= r-2 are closed in a paving matroid
            if rk + 2 <= self.r && rk == s.count_ones() as usize {
                return s;
            }
        }
        let mut out = s;
        for x in MaskIter(self.ground_bits() & !s) {
            if self.rank_bits(s | bit(x)) == rk {
                out |= bit(x);
            }
        }
        out
    }

    /// Contracts `e`, relabeling the remaining elements to `1..n-1`.
    pub fn contract(&self, e: u32) -> Result<Minor> {
        ElementSet::new(self.n, [e])?;
        if self.rank_bits(bit(e)) == 0 {
            return Err(Error::LoopContraction(e));
        }
        let p = e - 1;
        let n = self.n - 1;
        let matroid = match &self.rep {
            Representation::Paving(pf) => {
                let blocks = pf
                    .blocks
                    .iter()
                    .filter(|&&b| b & bit(e) != 0)
                    .map(|&b| squeeze(b, p))
                    .collect();
                Self::from_paving_masks(n, self.r - 1, blocks)
                    .expect("contraction of a paving family is paving")
            }
            Representation::Circuits(c) => {
                let mut cands: Vec<u64> = c.circuits.iter().map(|&x| x & !bit(e)).collect();
                cands.sort_by_key(|m| m.count_ones());
                cands.dedup();
                let mut minimal: Vec<u64> = Vec::new();
                for cand in cands {
                    if !minimal.iter().any(|&m| m & !cand == 0) {
                        minimal.push(cand);
                    }
                }
                let masks = minimal.into_iter().map(|m| squeeze(m, p)).collect();
                Self::from_circuit_masks_unchecked(n, masks)
            }
        };
        Ok(Minor {
            matroid: matroid.with_name(format!("{}/{}", self.label(), e)),
            labels: (1..=self.n as u32).filter(|&x| x != e).collect(),
        })
    }

    /// Deletes `e`, relabeling the remaining elements to `1..n-1`.
    pub fn delete(&self, e: u32) -> Result<Minor> {
        ElementSet::new(self.n, [e])?;
        let p = e - 1;
        let n = self.n - 1;
        let matroid = match &self.rep {
            Representation::Paving(pf) => {
                let rest = self.ground_bits() & !bit(e);
                let r = self.rank_bits(rest);
                let blocks = if r == self.r {
                    pf.blocks
                        .iter()
                        .map(|&b| b & !bit(e))
                        .filter(|b| b.count_ones() as usize >= r)
                        .map(|b| squeeze(b, p))
                        .collect()
                } else {
                    // e is a coloop; what remains is uniform of rank r-1
                    Vec::new()
                };
                Self::from_paving_masks(n, r, blocks)
                    .expect("deletion of a paving family is paving")
            }
            Representation::Circuits(c) => {
                let masks = c
                    .circuits
                    .iter()
                    .filter(|&&m| m & bit(e) == 0)
                    .map(|&m| squeeze(m, p))
                    .collect();
                Self::from_circuit_masks_unchecked(n, masks)
            }
        };
        Ok(Minor {
            matroid: matroid.with_name(format!("{}\\{}", self.label(), e)),
            labels: (1..=self.n as u32).filter(|&x| x != e).collect(),
        })
    }

    /// The dual matroid: its circuits are the complements of hyperplanes.
    pub fn dual(&self) -> Matroid {
        let ground = self.ground_bits();
        let masks = hyperplane_masks(self)
            .into_iter()
            .map(|h| ground & !h)
            .collect();
        let name = match self.name.as_deref() {
            Some(s) if s.ends_with('*') => s[..s.len() - 1].to_string(),
            _ => format!("{}*", self.label()),
        };
        let d = Self::from_circuit_masks_unchecked(self.n, masks).with_name(name);
        debug_assert_eq!(d.r, self.n - self.r);
        d
    }

    /// All circuits, sorted lexicographically.
    pub fn circuits(&self) -> Vec<ElementSet> {
        self.circuit_masks()
            .into_iter()
            .map(|m| self.set(m))
            .collect()
    }

    pub(crate) fn circuit_masks(&self) -> Vec<u64> {
        match &self.rep {
            Representation::Circuits(c) => c.circuits.clone(),
            Representation::Paving(pf) => {
                let r = self.r;
                let mut out = Vec::new();
                for &b in &pf.blocks {
                    let members: Vec<u32> = MaskIter(b).collect();
                    for sub in Combinations::new(members.len(), r) {
                        out.push(MaskIter(sub).fold(0u64, |m, i| m | bit(members[i as usize - 1])));
                    }
                }
                for s in Combinations::new(self.n, r + 1) {
                    if pf
                        .blocks
                        .iter()
                        .all(|&b| ((s & b).count_ones() as usize) < r)
                    {
                        out.push(s);
                    }
                }
                sort_masks(&mut out);
                out
            }
        }
    }

    pub fn bases(&self) -> Vec<ElementSet> {
        Combinations::new(self.n, self.r)
            .filter(|&s| self.rank_bits(s) == self.r)
            .map(|s| self.set(s))
            .collect()
    }

    /// Every circuit has size `r` or `r + 1`, i.e. all `(r-1)`-sets are independent.
    pub fn is_paving(&self) -> bool {
        match &self.rep {
            Representation::Paving(_) => true,
            Representation::Circuits(c) => {
                c.circuits.iter().all(|m| m.count_ones() as usize >= self.r)
            }
        }
    }

    /// Paving, with any two `r`-circuits sharing at most `r - 2` elements.
    pub fn is_sparse_paving(&self) -> bool {
        if !self.is_paving() {
            return false;
        }
        let r = self.r;
        match &self.rep {
            Representation::Paving(pf) => pf.blocks.iter().all(|b| b.count_ones() as usize == r),
            Representation::Circuits(c) => {
                let small: Vec<u64> = c
                    .circuits
                    .iter()
                    .copied()
                    .filter(|m| m.count_ones() as usize == r)
                    .collect();
                small.iter().enumerate().all(|(i, &a)| {
                    small[i + 1..]
                        .iter()
                        .all(|&b| ((a & b).count_ones() as i64) <= r as i64 - 2)
                })
            }
        }
    }

    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        if let Representation::Paving(_) = self.rep {
            if self.r >= 3 {
                return true;
            }
        }
        let n = self.n as u32;
        for a in 1..=n {
            if self.rank_bits(bit(a)) == 0 {
                return false;
            }
            for b in a + 1..=n {
                if self.rank_bits(bit(a) | bit(b)) < 2 {
                    return false;
                }
            }
        }
        true
    }

    /// Re-expresses a paving matroid through its block family.
    pub fn to_paving(&self) -> Option<Matroid> {
        if !self.is_paving() {
            return None;
        }
        if let Representation::Paving(_) = self.rep {
            return Some(self.clone());
        }
        let blocks = if self.r == 0 {
            Vec::new()
        } else {
            hyperplane_masks(self)
                .into_iter()
                .filter(|h| h.count_ones() as usize >= self.r)
                .collect()
        };
        let m = Self::from_paving_masks(self.n, self.r, blocks).ok()?;
        Some(match &self.name {
            Some(name) => m.with_name(name.clone()),
            None => m,
        })
    }

    /// Declares the circuit-hyperplane `h` a basis.
    pub fn relax(&self, h: &ElementSet) -> Result<Matroid> {
        let hb = self.checked(h)?;
        let paving = self.to_paving().ok_or(Error::NotPavingRep)?;
        let Representation::Paving(pf) = &paving.rep else {
            unreachable!()
        };
        if hb.count_ones() as usize != self.r || !pf.blocks.contains(&hb) {
            return Err(Error::NotCircuitHyperplane(h.to_string()));
        }
        let blocks = pf.blocks.iter().copied().filter(|&b| b != hb).collect();
        Self::from_paving_masks(self.n, self.r, blocks)
    }

    /// Same ground set, rank and circuits.
    pub fn equivalent(&self, other: &Matroid) -> bool {
        self.n == other.n && self.r == other.r && self.circuit_masks() == other.circuit_masks()
    }

    /// Exhaustive check of the circuit axioms (antichain, nonempty, weak
    /// elimination). For circuit lists above 12 elements this is the slow
    /// path that construction skips.
    pub fn validate_circuit_axioms(&self) -> Result<()> {
        let circuits = self.circuit_masks();
        let set: HashSet<u64> = circuits.iter().copied().collect();
        for (i, &a) in circuits.iter().enumerate() {
            if a == 0 {
                return Err(Error::EmptyCircuit);
            }
            for (j, &b) in circuits.iter().enumerate() {
                if i != j && a & !b == 0 {
                    return Err(Error::NotAnAntichain {
                        inner: format_mask(a),
                        outer: format_mask(b),
                    });
                }
            }
        }
        for (i, &a) in circuits.iter().enumerate() {
            for &b in &circuits[i + 1..] {
                let union = a | b;
                for e in MaskIter(a & b) {
                    let target = union & !bit(e);
                    if set.contains(&target) {
                        continue;
                    }
                    if !circuits.iter().any(|&c| c & !target == 0) {
                        return Err(Error::AxiomViolation {
                            first: format_mask(a),
                            second: format_mask(b),
                            element: e,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}
