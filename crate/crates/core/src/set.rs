//! Subsets of the ground set `{1..n}` stored as 64-bit masks.
//!
//! Element `e` occupies bit `e - 1`. Ordering is lexicographic on the sorted
//! element lists, so `{1,2,3,4} < {1,2,5,6} < {1,3}`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

pub const MAX_ELEMENTS: usize = 64;

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Lexicographic comparison of two masks read as sorted element lists.
pub(crate) fn lex_cmp(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let p = diff.trailing_zeros();
    let above = if p == 63 { 0 } else { !((1u64 << (p + 1)) - 1) };
    if a & (1u64 << p) != 0 {
        // `a` continues with p+1; `b` either skips it (larger) or has ended.
        if b & above != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if a & above != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

pub(crate) fn format_mask(bits: u64) -> String {
    let mut s = String::from("{");
    let mut first = true;
    for e in MaskIter(bits) {
        if !first {
            s.push(',');
        }
        first = false;
        s.push_str(&e.to_string());
    }
    s.push('}');
    s
}

/// Ascending 1-based elements of a mask.
#[derive(Debug, Clone)]
pub(crate) struct MaskIter(pub u64);

impl Iterator for MaskIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

/// A subset of `{1..universe}`. Equality and hashing look only at members.
#[derive(Clone, Copy)]
pub struct ElementSet {
    bits: u64,
    universe: u8,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Result<Self> {
        check_universe(universe)?;
        Ok(ElementSet {
            bits: 0,
            universe: universe as u8,
        })
    }

    pub fn full(universe: usize) -> Result<Self> {
        check_universe(universe)?;
        Ok(ElementSet {
            bits: full_mask(universe),
            universe: universe as u8,
        })
    }

    pub fn new<I: IntoIterator<Item = u32>>(universe: usize, elements: I) -> Result<Self> {
        check_universe(universe)?;
        let mut bits = 0u64;
        for e in elements {
            if e == 0 || e as usize > universe {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    n: universe,
                });
            }
            bits |= 1u64 << (e - 1);
        }
        Ok(ElementSet {
            bits,
            universe: universe as u8,
        })
    }

    pub fn from_bits(universe: usize, bits: u64) -> Result<Self> {
        check_universe(universe)?;
        if bits & !full_mask(universe) != 0 {
            let element = 64 - bits.leading_zeros();
            return Err(Error::ElementOutOfRange {
                element,
                n: universe,
            });
        }
        Ok(ElementSet {
            bits,
            universe: universe as u8,
        })
    }

    /// Caller guarantees `bits` fits the universe.
    pub(crate) fn from_bits_unchecked(universe: usize, bits: u64) -> Self {
        debug_assert!(bits & !full_mask(universe) == 0);
        ElementSet {
            bits,
            universe: universe as u8,
        }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, e: u32) -> bool {
        (1..=64).contains(&e) && self.bits & (1u64 << (e - 1)) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        MaskIter(self.bits)
    }

    pub fn to_vec(&self) -> Vec<u32> {
        MaskIter(self.bits).collect()
    }

    pub fn with(&self, e: u32) -> Result<Self> {
        let single = ElementSet::new(self.universe(), [e])?;
        Ok(ElementSet {
            bits: self.bits | single.bits,
            universe: self.universe,
        })
    }

    pub fn without(&self, e: u32) -> Self {
        let mask = if (1..=64).contains(&e) {
            1u64 << (e - 1)
        } else {
            0
        };
        ElementSet {
            bits: self.bits & !mask,
            universe: self.universe,
        }
    }

    pub fn union(&self, other: &ElementSet) -> Self {
        ElementSet {
            bits: self.bits | other.bits,
            universe: self.universe.max(other.universe),
        }
    }

    pub fn intersection(&self, other: &ElementSet) -> Self {
        ElementSet {
            bits: self.bits & other.bits,
            universe: self.universe.max(other.universe),
        }
    }

    pub fn difference(&self, other: &ElementSet) -> Self {
        ElementSet {
            bits: self.bits & !other.bits,
            universe: self.universe,
        }
    }

    pub fn complement(&self) -> Self {
        ElementSet {
            bits: !self.bits & full_mask(self.universe()),
            universe: self.universe,
        }
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits & !other.bits == 0
    }
}

fn check_universe(universe: usize) -> Result<()> {
    if universe > MAX_ELEMENTS {
        Err(Error::GroundSetTooLarge(universe))
    } else {
        Ok(())
    }
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for ElementSet {}

impl Hash for ElementSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(self.bits, other.bits)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_mask(self.bits))
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_mask(self.bits))
    }
}

/// All `k`-subsets of `{1..n}` as masks, in lexicographic order.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().fold(0u64, |m, &i| m | (1u64 << i));
        let k = self.idx.len();
        // advance to the next index tuple
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    }
}

/// `C(n, k)` in u128; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
