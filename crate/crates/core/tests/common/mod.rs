//! Brute-force oracles. Nothing here calls the rank, closure or
//! enumeration code under test.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub fn popcount(s: u64) -> usize {
    s.count_ones() as usize
}

pub fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|s| popcount(*s) == k).collect()
}

/// Circuits of the paving matroid with nontrivial hyperplanes `blocks`:
/// the r-subsets of blocks, and the (r+1)-sets containing no such r-subset.
pub fn paving_circuits(n: usize, r: usize, blocks: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    for s in subsets_of_size(n, r) {
        if blocks.iter().any(|&b| s & !b == 0) {
            out.push(s);
        }
    }
    for s in subsets_of_size(n, r + 1) {
        if !out.iter().any(|&c| c & !s == 0) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// rank[s] for every subset, from the independent sets (no circuit inside).
pub fn rank_table(n: usize, circuits: &[u64]) -> Vec<usize> {
    let size = 1usize << n;
    let mut rank = vec![0usize; size];
    for s in 0..size as u64 {
        let independent = !circuits.iter().any(|&c| c & !s == 0);
        rank[s as usize] = if independent {
            popcount(s)
        } else {
            (0..n)
                .filter(|i| s & (1 << i) != 0)
                .map(|i| rank[(s & !(1 << i)) as usize])
                .max()
                .unwrap_or(0)
        };
    }
    rank
}

pub fn closure_from_table(n: usize, rank: &[usize], s: u64) -> u64 {
    let mut out = s;
    for i in 0..n {
        if rank[(s | 1 << i) as usize] == rank[s as usize] {
            out |= 1 << i;
        }
    }
    out
}

/// Maximal proper flats, sorted as element lists.
pub fn hyperplanes_from_table(n: usize, rank: &[usize]) -> Vec<Vec<u32>> {
    let ground = (1u64 << n) - 1;
    let flats: Vec<u64> = (0..=ground)
        .filter(|&s| s != ground && closure_from_table(n, rank, s) == s)
        .collect();
    let mut out: Vec<Vec<u32>> = flats
        .iter()
        .filter(|&&f| !flats.iter().any(|&g| g != f && f & !g == 0))
        .map(|&f| elements(f))
        .collect();
    out.sort();
    out
}

pub fn elements(s: u64) -> Vec<u32> {
    (0..64)
        .filter(|i| s & (1u64 << i) != 0)
        .map(|i| i + 1)
        .collect()
}

pub fn mask(elems: &[u32]) -> u64 {
    elems.iter().fold(0, |m, &e| m | 1u64 << (e - 1))
}

/// Graph rank: vertices touched minus connected components.
pub fn graphic_rank(edges: &[(u8, u8)], s: u64) -> usize {
    let mut parent: Vec<usize> = (0..16).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut rank = 0;
    for (i, &(a, b)) in edges.iter().enumerate() {
        if s & (1 << i) == 0 {
            continue;
        }
        let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
        if ra != rb {
            parent[ra] = rb;
            rank += 1;
        }
    }
    rank
}

/// Rank by Gaussian elimination over the rationals.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut a = rows.to_vec();
    let m = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in 0..m {
            if i != rank && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[rank][c];
                let pivot = a[rank].clone();
                for (x, p) in a[i].iter_mut().zip(pivot).skip(c) {
                    *x -= p * &f;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Number of families of r-subsets of {1..n} pairwise sharing at most r-2
/// elements, by checking every subset of the C(n, r) candidates.
pub fn count_stable_families(n: usize, r: usize) -> usize {
    let vertices = subsets_of_size(n, r);
    let v = vertices.len();
    assert!(v <= 24);
    let mut adj = vec![0u32; v];
    for i in 0..v {
        for j in 0..v {
            if i != j && popcount(vertices[i] & vertices[j]) + 1 == r {
                adj[i] |= 1 << j;
            }
        }
    }
    (0u32..1 << v)
        .filter(|&fam| (0..v).all(|i| fam & (1 << i) == 0 || fam & adj[i] == 0))
        .count()
}

/// Every family of subsets of size >= r (excluding the ground set) whose
/// members pairwise share at most r - 2 elements.
pub fn paving_families(n: usize, r: usize) -> Vec<Vec<u64>> {
    let ground = (1u64 << n) - 1;
    let cands: Vec<u64> = (0..ground).filter(|&s| popcount(s) >= r).collect();
    let mut out = Vec::new();
    fn rec(cands: &[u64], r: usize, start: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        out.push(cur.clone());
        for i in start..cands.len() {
            let c = cands[i];
            if cur
                .iter()
                .all(|&b| (popcount(b & c) as i64) <= r as i64 - 2)
            {
                cur.push(c);
                rec(cands, r, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    if r == 0 {
        return vec![Vec::new()];
    }
    rec(&cands, r, 0, &mut Vec::new(), &mut out);
    out
}

/// Same count as [`count_stable_families`], by depth-first extension in
/// increasing vertex order; usable beyond 24 vertices.
pub fn count_stable_families_dfs(n: usize, r: usize) -> usize {
    let vertices = subsets_of_size(n, r);
    fn rec(v: &[u64], r: usize, start: usize, chosen: &mut Vec<u64>) -> usize {
        let mut total = 1;
        for i in start..v.len() {
            if chosen.iter().all(|&c| popcount(c & v[i]) + 2 <= r) {
                chosen.push(v[i]);
                total += rec(v, r, i + 1, chosen);
                chosen.pop();
            }
        }
        total
    }
    rec(&vertices, r, 0, &mut Vec::new())
}
