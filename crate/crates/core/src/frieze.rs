//! Frieze entries `a(i,j)` in exact arithmetic.
//!
//! Indexing follows the diagonal convention: `a(i,j)` is the continuant of the
//! window `a_i, ..., a_j` of the quiddity row, so `a(i,i) = a_i`, with the
//! boundary rows `a(i,i-1) = 1` and `a(i,i-2) = 0`. Row `k` of the frieze
//! (counting the quiddity row as row 1) holds the windows of length `k`.
//!
//! Three independent evaluators are provided: the three-term continuant
//! recurrence (memoized in [`FriezeGrid`]), a fraction-free determinant of the
//! tridiagonal matrix, and the signed sum over pair-excluding subsets.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{FriezeError, Result};
use crate::quiddity::{Classification, QuidditySequence};

/// Memoized frieze entries for one quiddity sequence.
///
/// The grid is not shared between threads; it is cheap to clone, and the
/// intended pattern is one grid per worker.
#[derive(Debug, Clone)]
pub struct FriezeGrid {
    quiddity: QuidditySequence,
    /// `diagonals[s][d]` is `a(s+1, s+d-1)`; `d = 0, 1` hold the 0 and 1 rows.
    diagonals: Vec<Vec<BigInt>>,
}

impl FriezeGrid {
    pub fn new(quiddity: QuidditySequence) -> Self {
        let n = quiddity.len();
        FriezeGrid {
            quiddity,
            diagonals: vec![vec![BigInt::zero(), BigInt::one()]; n],
        }
    }

    pub fn quiddity(&self) -> &QuidditySequence {
        &self.quiddity
    }

    pub fn period(&self) -> usize {
        self.quiddity.len()
    }

    /// `a(i,j)` for any `j >= i-2`.
    pub fn entry(&mut self, i: i64, j: i64) -> Result<BigInt> {
        if j < i - 2 {
            return Err(FriezeError::IndexOutOfRange { i, j, min_j: i - 2 });
        }
        Ok(self.entry_unchecked(i, j))
    }

    pub(crate) fn entry_unchecked(&mut self, i: i64, j: i64) -> BigInt {
        debug_assert!(j >= i - 2);
        let n = self.period() as i64;
        let start = (i - 1).rem_euclid(n);
        let shift = i - 1 - start;
        let offset = (j - shift - start + 1) as usize;
        let diagonal = &mut self.diagonals[start as usize];
        while diagonal.len() <= offset {
            // a(i, j) = a_j * a(i, j-1) - a(i, j-2)
            let d = diagonal.len();
            let column = start + d as i64 - 1;
            let next = BigInt::from(self.quiddity.at(column)) * &diagonal[d - 1] - &diagonal[d - 2];
            diagonal.push(next);
        }
        diagonal[offset].clone()
    }

    /// Row `k` (window length `k`): `[a(1,k), a(2,k+1), ..., a(n,n+k-1)]`.
    pub fn row(&mut self, k: usize) -> Vec<BigInt> {
        let n = self.period() as i64;
        (1..=n)
            .map(|c| self.entry_unchecked(c, c + k as i64 - 1))
            .collect()
    }
}

/// `a(i,j)` via the continuant recurrence.
pub fn entry(q: &QuidditySequence, i: i64, j: i64) -> Result<BigInt> {
    FriezeGrid::new(q.clone()).entry(i, j)
}

fn window(q: &QuidditySequence, i: i64, j: i64) -> Result<Vec<BigInt>> {
    if j < i {
        return Err(FriezeError::IndexOutOfRange { i, j, min_j: i });
    }
    Ok((i..=j).map(|k| BigInt::from(q.at(k))).collect())
}

/// `a(i,j)` as the determinant of the tridiagonal matrix with `a_i..a_j` on
/// the diagonal and 1's beside it, by Bareiss fraction-free elimination.
pub fn entry_determinant(q: &QuidditySequence, i: i64, j: i64) -> Result<BigInt> {
    let diag = window(q, i, j)?;
    let size = diag.len();
    let mut m: Vec<Vec<BigInt>> = (0..size)
        .map(|r| {
            (0..size)
                .map(|c| {
                    if r == c {
                        diag[r].clone()
                    } else if r.abs_diff(c) == 1 {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(bareiss_determinant(&mut m))
}

fn bareiss_determinant(m: &mut [Vec<BigInt>]) -> BigInt {
    let size = m.len();
    let mut sign = BigInt::one();
    let mut prev_pivot = BigInt::one();
    for k in 0..size {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for r in k + 1..size {
            for c in k + 1..size {
                let value = (&m[r][c] * &m[k][k] - &m[r][k] * &m[k][c]) / &prev_pivot;
                m[r][c] = value;
            }
        }
        prev_pivot = m[k][k].clone();
    }
    sign * &m[size - 1][size - 1]
}

/// A subset of `{1, ..., n}` obtained by deleting disjoint adjacent pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PairExcludingSubset {
    /// 1-based members, increasing.
    pub members: Vec<usize>,
    /// Number of pairs removed, `(n - |I|) / 2`.
    pub excluded_pairs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetFamily {
    pub ground_size: usize,
    pub subsets: Vec<PairExcludingSubset>,
}

impl SubsetFamily {
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }
}

/// Visits every pair-excluding subset of a path of `len` positions as a keep
/// mask (`keep[p]` is false for deleted positions) with its number of deleted
/// pairs. Nothing is materialized.
pub fn for_each_pair_excluding(len: usize, mut visit: impl FnMut(&[bool], usize)) {
    fn walk(pos: usize, keep: &mut Vec<bool>, pairs: usize, visit: &mut dyn FnMut(&[bool], usize)) {
        let len = keep.len();
        if pos >= len {
            visit(keep, pairs);
            return;
        }
        keep[pos] = true;
        walk(pos + 1, keep, pairs, visit);
        if pos + 1 < len {
            keep[pos] = false;
            keep[pos + 1] = false;
            walk(pos + 2, keep, pairs + 1, visit);
            keep[pos + 1] = true;
            keep[pos] = true;
        }
    }
    let mut keep = vec![true; len];
    walk(0, &mut keep, 0, &mut visit);
}

/// Visits every distinct cyclic pair-excluding subset of a cycle of `len`
/// positions: the path subsets, then those deleting the pair `(len, 1)`. The
/// empty set is reached twice when `len` is even and is reported once.
pub fn for_each_cyclic_pair_excluding(len: usize, mut visit: impl FnMut(&[bool], usize)) {
    for_each_pair_excluding(len, &mut visit);
    if len < 3 {
        // for len = 2 the wrap pair is the pair (1,2) again
        return;
    }
    let mut keep = vec![false; len];
    for_each_pair_excluding(len - 2, |inner, pairs| {
        if len % 2 == 0 && pairs == (len - 2) / 2 {
            return;
        }
        keep[1..len - 1].copy_from_slice(inner);
        visit(&keep, pairs + 1);
    });
}

fn collect_family(n: usize, cyclic: bool) -> SubsetFamily {
    let mut subsets = Vec::new();
    let mut push = |keep: &[bool], pairs: usize| {
        subsets.push(PairExcludingSubset {
            members: (0..keep.len()).filter(|&p| keep[p]).map(|p| p + 1).collect(),
            excluded_pairs: pairs,
        });
    };
    if cyclic {
        for_each_cyclic_pair_excluding(n, &mut push);
    } else {
        for_each_pair_excluding(n, &mut push);
    }
    SubsetFamily {
        ground_size: n,
        subsets,
    }
}

pub fn pair_excluding_subsets(n: usize) -> SubsetFamily {
    collect_family(n, false)
}

pub fn cyclic_pair_excluding_subsets(n: usize) -> SubsetFamily {
    collect_family(n, true)
}

pub(crate) fn signed_product(values: &[BigInt], keep: &[bool], pairs: usize) -> BigInt {
    let product = values
        .iter()
        .zip(keep)
        .filter(|(_, &k)| k)
        .fold(BigInt::one(), |acc, (v, _)| acc * v);
    if pairs % 2 == 0 {
        product
    } else {
        -product
    }
}

/// `a(i,j)` as the signed sum over pair-excluding subsets of `{i..j}`.
/// Exponential in the window length.
pub fn entry_pair_excluding(q: &QuidditySequence, i: i64, j: i64) -> Result<BigInt> {
    let values = window(q, i, j)?;
    let mut total = BigInt::zero();
    for_each_pair_excluding(values.len(), |keep, pairs| {
        total += signed_product(&values, keep, pairs);
    });
    Ok(total)
}

/// The first `depth` non-trivial rows of the frieze.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriezeRows {
    pub quiddity: QuidditySequence,
    /// `rows[k-1][c-1] = a(c, c+k-1)`.
    pub rows: Vec<Vec<BigInt>>,
}

pub fn rows(q: &QuidditySequence, depth: usize) -> Result<FriezeRows> {
    let class = q.classify();
    if class != Classification::InfiniteType {
        return Err(FriezeError::NotInfiniteType(class));
    }
    let mut grid = FriezeGrid::new(q.clone());
    let rows = (1..=depth.max(1)).map(|k| grid.row(k)).collect();
    Ok(FriezeRows {
        quiddity: q.clone(),
        rows,
    })
}

impl FriezeRows {
    /// Text rendering with the 0 and 1 rows on top. Each row repeats the
    /// period twice and is shifted half a cell against its neighbours.
    pub fn render_text(&self) -> String {
        let n = self.quiddity.len();
        let cells: Vec<Vec<String>> = std::iter::once(vec!["0".to_string(); n])
            .chain(std::iter::once(vec!["1".to_string(); n]))
            .chain(
                self.rows
                    .iter()
                    .map(|r| r.iter().map(BigInt::to_string).collect()),
            )
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1) + 2;
        let mut out = String::new();
        // Display row `k` holds windows of length `k - 1`; the window
        // `[c, c+k-2]` is centred at half-cell `2(c-1) + k - 2`.
        for (k, row) in cells.iter().enumerate() {
            let parity = k % 2;
            let shift = (parity as i64 + 2 - k as i64) / 2;
            let mut line = " ".repeat(parity * width / 2);
            for slot in 0..2 * n as i64 {
                let cell = &row[(slot + shift).rem_euclid(n as i64) as usize];
                let _ = write!(line, "{cell:>width$}");
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}
