//! Matroids of exact rational point and vector configurations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::rational::ExactRational;
use crate::set::{Combinations, MAX_ELEMENTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Points of affine space; ranks are taken after prepending a 1.
    #[default]
    Affine,
    /// Vectors; ranks are plain linear ranks.
    Linear,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    pub points: Vec<Vec<ExactRational>>,
    pub dimension: usize,
    pub mode: Mode,
}

impl PointConfiguration {
    pub fn new(points: Vec<Vec<ExactRational>>, mode: Mode) -> Result<Self> {
        let dimension = points.first().ok_or(Error::NoPoints)?.len();
        for p in &points {
            if p.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    got: p.len(),
                });
            }
        }
        Ok(PointConfiguration {
            points,
            dimension,
            mode,
        })
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_fractions(points: &[&[(i64, i64)]], mode: Mode) -> Result<Self> {
        let pts = points
            .iter()
            .map(|p| p.iter().map(|&(a, b)| ExactRational::new(a, b)).collect())
            .collect();
        Self::new(pts, mode)
    }

    pub fn from_integers(points: &[&[i64]], mode: Mode) -> Result<Self> {
        let pts = points
            .iter()
            .map(|p| p.iter().map(|&a| ExactRational::from(a)).collect())
            .collect();
        Self::new(pts, mode)
    }

    /// Each point as a primitive-free integer row: homogenized in affine mode
    /// and cleared of denominators. Scaling a row does not change any rank.
    pub(crate) fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.points
            .iter()
            .map(|p| {
                let mut coords: Vec<ExactRational> = Vec::with_capacity(p.len() + 1);
                if self.mode == Mode::Affine {
                    coords.push(ExactRational::one());
                }
                coords.extend(p.iter().cloned());
                let lcm = coords
                    .iter()
                    .fold(BigInt::one(), |acc, c| acc.lcm(c.denominator()));
                coords
                    .iter()
                    .map(|c| c.numerator() * (&lcm / c.denominator()))
                    .collect()
            })
            .collect()
    }
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let m = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == m {
            break;
        }
        let Some(pivot) = (rank..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for i in rank + 1..m {
            for j in col + 1..cols {
                let v = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                // exact by Sylvester's identity
                a[i][j] = v / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank of the configuration restricted to the points in `bits`.
pub(crate) fn subset_rank(rows: &[Vec<BigInt>], bits: u64) -> usize {
    let sub: Vec<Vec<BigInt>> = rows
        .iter()
        .enumerate()
        .filter(|(i, _)| bits & (1u64 << i) != 0)
        .map(|(_, r)| r.clone())
        .collect();
    integer_rank(&sub)
}

/// The matroid on `1..=m` whose rank function is the rank of the coordinate
/// submatrix. The circuits are found by enumerating minimal dependent sets.
pub fn from_points(config: &PointConfiguration) -> Result<Matroid> {
    let m = config.points.len();
    if m == 0 {
        return Err(Error::NoPoints);
    }
    if m > MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge(m));
    }
    let rows = config.integer_rows();
    let full = integer_rank(&rows);
    let mut circuits: Vec<u64> = Vec::new();
    for k in 1..=(full + 1).min(m) {
        for s in Combinations::new(m, k) {
            if circuits.iter().any(|&c| c & !s == 0) {
                continue;
            }
            if subset_rank(&rows, s) < k {
                circuits.push(s);
            }
        }
    }
    let matroid = Matroid::from_circuit_masks_unchecked(m, circuits);
    debug_assert_eq!(matroid.r(), full);
    Ok(matroid)
}
