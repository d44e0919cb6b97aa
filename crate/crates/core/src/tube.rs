//! The rank `n` tube as an index lattice, with the specialized
//! Caldero-Chapoton value `s(M_{i,j}) = a(i,j)`.
//!
//! Modules are indexed by windows `[i, j]` of the quiddity row; the level is
//! the window length. Mouth modules have level 1, `tau` shifts both ends
//! down by one.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{FriezeError, Result};
use crate::frieze::FriezeGrid;
use crate::growth::growth_coefficient_formula;
use crate::quiddity::QuidditySequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TubeModuleIndex {
    pub rank: usize,
    pub start: i64,
    pub end: i64,
}

impl TubeModuleIndex {
    /// Module over the window `[start, end]`, which must be non-empty.
    pub fn new(rank: usize, start: i64, end: i64) -> Result<Self> {
        if end < start {
            return Err(FriezeError::IndexOutOfRange { i: start, j: end, min_j: start });
        }
        Ok(TubeModuleIndex { rank, start, end })
    }

    pub fn with_level(rank: usize, start: i64, level: usize) -> Result<Self> {
        Self::new(rank, start, start + level as i64 - 1)
    }

    pub fn level(&self) -> usize {
        (self.end - self.start + 1) as usize
    }

    pub fn is_at_mouth(&self) -> bool {
        self.level() == 1
    }

    pub fn tau(&self) -> Self {
        TubeModuleIndex {
            start: self.start - 1,
            end: self.end - 1,
            ..*self
        }
    }

    /// Modules `(u, v)` with `start <= u <= v <= end`.
    pub fn wing(&self) -> Vec<TubeModuleIndex> {
        (self.start..=self.end)
            .flat_map(|u| (u..=self.end).map(move |v| (u, v)))
            .map(|(u, v)| TubeModuleIndex { rank: self.rank, start: u, end: v })
            .collect()
    }

    /// Middle terms of the almost split sequence ending in this module: one at
    /// the mouth, two above it.
    pub fn middle_terms(&self) -> Vec<TubeModuleIndex> {
        let mut terms = vec![TubeModuleIndex {
            start: self.start - 1,
            ..*self
        }];
        if !self.is_at_mouth() {
            terms.push(TubeModuleIndex {
                end: self.end - 1,
                ..*self
            });
        }
        terms
    }
}

fn check_rank(q: &QuidditySequence, m: &TubeModuleIndex) -> Result<()> {
    if m.rank != q.len() {
        return Err(FriezeError::RankMismatch { tube: m.rank, quiddity: q.len() });
    }
    Ok(())
}

/// `s(M_{i,j})`, the frieze entry `a(i,j)`.
pub fn cc_value(q: &QuidditySequence, m: &TubeModuleIndex) -> Result<BigInt> {
    check_rank(q, m)?;
    crate::frieze::entry(q, m.start, m.end)
}

/// Start positions (relative to the window) of the pairs, after checking
/// that they stay inside the window and do not overlap.
fn window_pairs(start: i64, level: usize, excluded: &[i64]) -> Result<Vec<bool>> {
    let mut covered = vec![false; level];
    for &j in excluded {
        let offset = j - start;
        if offset < 0 || offset >= level as i64 || level < 2 {
            return Err(FriezeError::OverlappingPairs(format!(
                "pair starting at {j} is outside the window {start}..{}",
                start + level as i64 - 1
            )));
        }
        let first = offset as usize;
        for p in [first, (first + 1) % level] {
            if covered[p] {
                return Err(FriezeError::OverlappingPairs(format!(
                    "position {} is covered twice",
                    start + p as i64
                )));
            }
            covered[p] = true;
        }
    }
    Ok(covered)
}

/// `s` of the mouth summands left after removing the pairs `{j, j+1}` for
/// `j` in `excluded`; pairs wrap around inside the window `[start, start+level-1]`.
pub fn quotient_value(q: &QuidditySequence, start: i64, level: usize, excluded: &[i64]) -> Result<BigInt> {
    let covered = window_pairs(start, level, excluded)?;
    Ok(covered
        .iter()
        .enumerate()
        .filter(|(_, &c)| !c)
        .fold(BigInt::one(), |acc, (p, _)| acc * q.at(start + p as i64)))
}

/// Calls `visit(covered, pairs)` for every set of disjoint cyclic pairs in a
/// cycle of length `len`. Both perfect matchings of an even cycle are visited.
fn for_each_cyclic_matching(len: usize, mut visit: impl FnMut(&[bool], usize)) {
    fn path(covered: &mut Vec<bool>, pos: usize, end: usize, pairs: usize, visit: &mut dyn FnMut(&[bool], usize)) {
        if pos >= end {
            visit(covered, pairs);
            return;
        }
        path(covered, pos + 1, end, pairs, visit);
        if pos + 1 < end {
            covered[pos] = true;
            covered[pos + 1] = true;
            path(covered, pos + 2, end, pairs + 1, visit);
            covered[pos] = false;
            covered[pos + 1] = false;
        }
    }
    let mut covered = vec![false; len];
    path(&mut covered, 0, len, 0, &mut visit);
    if len >= 3 {
        covered[len - 1] = true;
        covered[0] = true;
        path(&mut covered, 1, len - 1, 1, &mut visit);
    }
}

/// The alternating sum `s(N) - sum s(N_j) + sum s(N_{j1,j2}) - ...` over all
/// sets of disjoint cyclic pairs in the window of length `level` at `start`,
/// where `N` is the direct sum of the mouth modules of the window.
pub fn repth_rhs(q: &QuidditySequence, start: i64, level: usize) -> Result<BigInt> {
    if level < 3 {
        return Err(FriezeError::LevelTooSmall(level));
    }
    let values: Vec<u64> = (0..level as i64).map(|p| q.at(start + p)).collect();
    let max = values.iter().copied().max().unwrap_or(1).max(1) as f64;
    if (level as f64) * max.log2() < 100.0 {
        // Every product fits in 100 bits and there are fewer than 2^level terms.
        let mut total: i128 = 0;
        for_each_cyclic_matching(level, |covered, pairs| {
            let product = values
                .iter()
                .zip(covered)
                .filter(|(_, &c)| !c)
                .fold(1i128, |acc, (&v, _)| acc * v as i128);
            total += if pairs % 2 == 0 { product } else { -product };
        });
        return Ok(BigInt::from(total));
    }
    let mut total = BigInt::zero();
    for_each_cyclic_matching(level, |covered, pairs| {
        let product = values
            .iter()
            .zip(covered)
            .filter(|(_, &c)| !c)
            .fold(BigInt::one(), |acc, (&v, _)| acc * v);
        if pairs % 2 == 0 {
            total += product;
        } else {
            total -= product;
        }
    });
    Ok(total)
}

/// `s(M) - s(M~)` for `M = M_{i, i+t-1}` and `M~ = M_{i+1, i+t-2}`.
pub fn level_difference(grid: &mut FriezeGrid, start: i64, level: usize) -> BigInt {
    let end = start + level as i64 - 1;
    grid.entry_unchecked(start, end) - grid.entry_unchecked(start + 1, end - 1)
}

/// `s(tau M) s(M) - s(B) = 1`, with `B` the sum of the middle terms.
pub fn verify_ar_diamond(q: &QuidditySequence, m: &TubeModuleIndex) -> Result<bool> {
    check_rank(q, m)?;
    let mut grid = FriezeGrid::new(q.clone());
    Ok(ar_diamond_holds(&mut grid, m))
}

fn ar_diamond_holds(grid: &mut FriezeGrid, m: &TubeModuleIndex) -> bool {
    let value = |grid: &mut FriezeGrid, x: &TubeModuleIndex| grid.entry_unchecked(x.start, x.end);
    let tau = m.tau();
    let product = value(grid, &tau) * value(grid, m);
    let middle = m
        .middle_terms()
        .iter()
        .fold(BigInt::one(), |acc, x| acc * value(grid, x));
    product - middle == BigInt::one()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TubeCheck {
    /// The alternating sum equals `s(M) - s(M~)` for every start and level.
    Repth,
    /// At level `n` the difference is the growth coefficient.
    Growth,
    /// Almost split sequences satisfy `s(tau M) s(M) - s(B) = 1`.
    Ar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TubeCounterexample {
    pub start: i64,
    pub level: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TubeReport {
    pub check: TubeCheck,
    pub rank: usize,
    pub max_level: usize,
    pub checked: usize,
    pub failures: Vec<TubeCounterexample>,
    /// Levels above the rank, where the identity is checked on frieze entries
    /// only.
    pub extended_levels: Vec<usize>,
}

impl TubeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs one identity over every start `1..=n` and the relevant levels up to
/// `max_level`.
pub fn check_tube(q: &QuidditySequence, check: TubeCheck, max_level: usize) -> Result<TubeReport> {
    let n = q.len();
    let mut grid = FriezeGrid::new(q.clone());
    let mut failures = Vec::new();
    let mut checked = 0;
    let levels: Vec<usize> = match check {
        TubeCheck::Repth => (3..=max_level).collect(),
        TubeCheck::Growth => vec![n],
        TubeCheck::Ar => (1..=max_level).collect(),
    };
    let growth = match check {
        TubeCheck::Growth => Some(growth_coefficient_formula(q)?),
        _ => None,
    };
    for &level in &levels {
        for start in 1..=n as i64 {
            let ok = match check {
                TubeCheck::Repth => repth_rhs(q, start, level)? == level_difference(&mut grid, start, level),
                TubeCheck::Growth => {
                    let difference = level_difference(&mut grid, start, level);
                    let rhs = if level >= 3 { repth_rhs(q, start, level)? } else { difference.clone() };
                    Some(&difference) == growth.as_ref() && rhs == difference
                }
                TubeCheck::Ar => ar_diamond_holds(&mut grid, &TubeModuleIndex::with_level(n, start, level)?),
            };
            checked += 1;
            if !ok {
                failures.push(TubeCounterexample { start, level });
            }
        }
    }
    Ok(TubeReport {
        check,
        rank: n,
        max_level,
        checked,
        failures,
        extended_levels: levels.into_iter().filter(|&t| t > n).collect(),
    })
}
