//! Quiddity sequences as cyclic words of positive integers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclic;
use crate::error::{FriezeError, Result};
use crate::frieze::FriezeGrid;

/// One period of the first non-trivial row of a frieze. Indices are read
/// modulo the length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "QuiddityJson", into = "QuiddityJson")]
pub struct QuidditySequence {
    entries: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct QuiddityJson {
    entries: Vec<i64>,
}

impl TryFrom<QuiddityJson> for QuidditySequence {
    type Error = FriezeError;

    fn try_from(raw: QuiddityJson) -> Result<Self> {
        let entries = raw
            .entries
            .into_iter()
            .map(|e| u64::try_from(e).map_err(|_| FriezeError::NonPositiveEntry(e)))
            .collect::<Result<Vec<_>>>()?;
        QuidditySequence::new(entries)
    }
}

impl From<QuidditySequence> for QuiddityJson {
    fn from(q: QuidditySequence) -> Self {
        QuiddityJson {
            entries: q.entries.iter().map(|&e| e as i64).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    InfiniteType,
    FiniteType,
    Invalid,
}

/// Run-length form `(a_1, 2^(k_1), a_2, 2^(k_2), ...)` of a skeletal sequence:
/// each block is a head entry greater than 2 followed by `run` twos.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub head: u64,
    pub run: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockForm {
    pub blocks: Vec<Block>,
}

impl BlockForm {
    pub fn to_sequence(&self) -> QuidditySequence {
        let entries = self
            .blocks
            .iter()
            .flat_map(|b| std::iter::once(b.head).chain(std::iter::repeat_n(2, b.run)))
            .collect();
        QuidditySequence { entries }
    }
}

impl QuidditySequence {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(FriezeError::Empty);
        }
        if entries.contains(&0) {
            return Err(FriezeError::NonPositiveEntry(0));
        }
        Ok(QuidditySequence { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// Entry `a_k` with the 1-based cyclic indexing used for frieze entries.
    pub fn at(&self, k: i64) -> u64 {
        let n = self.entries.len() as i64;
        self.entries[(k - 1).rem_euclid(n) as usize]
    }

    /// The rotation starting at (0-based) position `start`.
    pub fn rotated(&self, start: usize) -> Self {
        QuidditySequence {
            entries: cyclic::rotate(&self.entries, start),
        }
    }

    pub fn canonical_rotation(&self) -> Self {
        QuidditySequence {
            entries: cyclic::least_rotation_of(&self.entries),
        }
    }

    pub fn cyclically_equal(&self, other: &Self) -> bool {
        cyclic::is_rotation(&self.entries, &other.entries)
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.iter().all(|&e| e == 2)
    }

    pub fn is_skeletal(&self) -> bool {
        !self.entries.contains(&1) && !self.is_trivial()
    }

    fn legal_reduction(&self, index: usize) -> Result<()> {
        let n = self.len();
        if index >= n {
            return Err(FriezeError::PositionOutOfRange { index, len: n });
        }
        let value = self.entries[index];
        if value != 1 {
            return Err(FriezeError::NotAOne { index, value });
        }
        let illegal = |reason: &str| FriezeError::IllegalReduction {
            index,
            reason: reason.to_string(),
        };
        match n {
            1 => Err(illegal("a sequence of length 1 cannot be reduced")),
            2 => {
                let k = self.entries[1 - index];
                if k >= 3 {
                    Ok(())
                } else {
                    Err(illegal("(1,k) reduces only when k >= 3"))
                }
            }
            _ => {
                let prev = self.entries[(index + n - 1) % n];
                let next = self.entries[(index + 1) % n];
                if prev >= 2 && next >= 2 {
                    Ok(())
                } else {
                    Err(illegal("a neighbouring entry is 1"))
                }
            }
        }
    }

    /// Deletes the 1 at `index` and decrements its two neighbours; `(1,k)`
    /// becomes `(k-2)`.
    pub fn reduce_once(&self, index: usize) -> Result<Self> {
        self.legal_reduction(index)?;
        let n = self.len();
        if n == 2 {
            let k = self.entries[1 - index];
            return Ok(QuidditySequence { entries: vec![k - 2] });
        }
        let mut entries = self.entries.clone();
        entries[(index + n - 1) % n] -= 1;
        entries[(index + 1) % n] -= 1;
        entries.remove(index);
        Ok(QuidditySequence { entries })
    }

    /// Positions where `reduce_once` is legal.
    pub fn legal_reductions(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.legal_reduction(i).is_ok())
            .collect()
    }

    /// Reduces leftmost-first until no legal reduction remains. Returns the
    /// final sequence; it still contains 1's when reduction got stuck.
    pub fn reduce_exhaustively(&self) -> Self {
        let mut current = self.clone();
        loop {
            match current.legal_reductions().first() {
                Some(&i) => current = current.reduce_once(i).expect("legal reduction"),
                None => return current,
            }
        }
    }

    /// The reduced sequence `q^s`: no entry equals 1.
    pub fn reduce_to_skeletal(&self) -> Result<Self> {
        let class = self.classify();
        if class != Classification::InfiniteType {
            return Err(FriezeError::NotInfiniteType(class));
        }
        Ok(self.reduce_exhaustively())
    }

    /// Inserts a 1 after position `gap` (taken modulo the length) and
    /// increments both neighbours. `(k)` becomes `(1, k+2)`.
    pub fn reverse_reduce(&self, gap: usize) -> Self {
        let n = self.len();
        if n == 1 {
            return QuidditySequence {
                entries: vec![1, self.entries[0] + 2],
            };
        }
        let gap = gap % n;
        let mut entries = self.entries.clone();
        entries[gap] += 1;
        entries[(gap + 1) % n] += 1;
        entries.insert(gap + 1, 1);
        QuidditySequence { entries }
    }

    /// Position of the 1 inserted by `reverse_reduce(gap)`.
    pub fn reverse_reduce_position(&self, gap: usize) -> usize {
        if self.len() == 1 {
            0
        } else {
            gap % self.len() + 1
        }
    }

    /// Reduction decides infinite type; rows decide the finite
    /// (Conway-Coxeter) pattern for sequences where reduction gets stuck.
    pub fn classify(&self) -> Classification {
        let reduced = self.reduce_exhaustively();
        if !reduced.entries.contains(&1) {
            return Classification::InfiniteType;
        }
        if self.has_finite_frieze_pattern() {
            Classification::FiniteType
        } else {
            Classification::Invalid
        }
    }

    /// A length-`n` quiddity sequence of a triangulated `n`-gon: rows
    /// 1..n-3 are positive, row n-2 is all 1's and row n-1 all 0's.
    fn has_finite_frieze_pattern(&self) -> bool {
        let n = self.len() as i64;
        if n < 3 {
            return false;
        }
        let mut grid = FriezeGrid::new(self.clone());
        for start in 1..=n {
            for len in 1..=n - 3 {
                if !grid.entry_unchecked(start, start + len - 1).is_positive() {
                    return false;
                }
            }
            if !grid.entry_unchecked(start, start + n - 3).is_one()
                || !grid.entry_unchecked(start, start + n - 2).is_zero()
            {
                return false;
            }
        }
        true
    }

    /// Independent classifier that only looks at rows: finite pattern, or
    /// strictly positive entries down to row `3n`.
    pub fn classify_by_rows(&self) -> Classification {
        if self.has_finite_frieze_pattern() {
            return Classification::FiniteType;
        }
        let n = self.len() as i64;
        let mut grid = FriezeGrid::new(self.clone());
        let positive = (1..=n).all(|start| {
            (1..=3 * n).all(|len| grid.entry_unchecked(start, start + len - 1) > BigInt::zero())
        });
        if positive {
            Classification::InfiniteType
        } else {
            Classification::Invalid
        }
    }

    /// Block form, rotated so that it starts at the first entry greater
    /// than 2 in the given order.
    pub fn block_form(&self) -> Result<BlockForm> {
        if !self.is_skeletal() {
            return Err(FriezeError::NotSkeletal);
        }
        let start = self
            .entries
            .iter()
            .position(|&e| e > 2)
            .expect("skeletal sequences have an entry above 2");
        let rotated = cyclic::rotate(&self.entries, start);
        let mut blocks: Vec<Block> = Vec::new();
        for e in rotated {
            if e > 2 {
                blocks.push(Block { head: e, run: 0 });
            } else {
                blocks.last_mut().expect("starts with a head").run += 1;
            }
        }
        Ok(BlockForm { blocks })
    }

    /// Quiddity sequence of the inner boundary of the skeletal triangulation
    /// whose outer boundary reads `self`.
    pub fn partner(&self) -> Result<Self> {
        let form = self.block_form()?;
        let mut entries = Vec::new();
        for block in &form.blocks {
            entries.extend(std::iter::repeat_n(2, (block.head - 3) as usize));
            entries.push(block.run as u64 + 3);
        }
        Ok(QuidditySequence { entries })
    }

    pub fn to_bigints(&self) -> Vec<BigInt> {
        self.entries.iter().map(|&e| BigInt::from(e)).collect()
    }

    pub fn product(&self) -> BigInt {
        self.entries
            .iter()
            .fold(BigInt::one(), |acc, &e| acc * BigInt::from(e))
    }
}

impl fmt::Display for QuidditySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for QuidditySequence {
    type Err = FriezeError;

    /// Comma-separated entries, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = trimmed
            .split(',')
            .map(|part| {
                let part = part.trim();
                let value: i64 = part.parse().map_err(|_| FriezeError::Parse {
                    input: s.to_string(),
                    reason: format!("{part:?} is not an integer"),
                })?;
                u64::try_from(value)
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or(FriezeError::NonPositiveEntry(value))
            })
            .collect::<Result<Vec<_>>>()?;
        QuidditySequence::new(entries)
    }
}

/// Shorthand for tests and examples; panics on invalid input.
pub fn q(entries: &[u64]) -> QuidditySequence {
    QuidditySequence::new(entries.to_vec()).expect("valid quiddity sequence")
}
