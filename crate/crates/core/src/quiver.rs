//! Non-oriented cyclic quivers, stored as cyclic arrow words.
//!
//! Vertices are `1..=n` around the cycle; letter `k` (1-based) describes the
//! arrow between vertex `k` and vertex `k+1` (vertex `n` wraps to 1).

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cyclic;
use crate::error::{FriezeError, Result};
use crate::quiddity::QuidditySequence;

/// Orientation of the arrow between consecutive vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Arrow {
    /// `k -> k+1`
    Increasing,
    /// `k <- k+1`
    Decreasing,
}

impl Arrow {
    pub fn letter(self) -> char {
        match self {
            Arrow::Increasing => 'I',
            Arrow::Decreasing => 'D',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    HeadOfIncreasing,
    TailOfDecreasing,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WordJson", into = "WordJson")]
pub struct NonOrientedCycle {
    word: Vec<Arrow>,
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    word: String,
}

impl TryFrom<WordJson> for NonOrientedCycle {
    type Error = FriezeError;

    fn try_from(raw: WordJson) -> Result<Self> {
        raw.word.parse()
    }
}

impl From<NonOrientedCycle> for WordJson {
    fn from(q: NonOrientedCycle) -> Self {
        WordJson { word: q.to_string() }
    }
}

impl NonOrientedCycle {
    pub fn new(word: Vec<Arrow>) -> Result<Self> {
        if word.len() < 2 {
            return Err(FriezeError::NotACycleWord(format!(
                "a cycle needs at least 2 vertices, got {}",
                word.len()
            )));
        }
        if !word.contains(&Arrow::Increasing) || !word.contains(&Arrow::Decreasing) {
            return Err(FriezeError::NotACycleWord(
                "the cycle is oriented: it needs both increasing and decreasing arrows".into(),
            ));
        }
        Ok(NonOrientedCycle { word })
    }

    pub fn word(&self) -> &[Arrow] {
        &self.word
    }

    pub fn vertex_count(&self) -> usize {
        self.word.len()
    }

    /// Letter `k` with 0-based cyclic index.
    fn letter(&self, k: isize) -> Arrow {
        let n = self.word.len() as isize;
        self.word[k.rem_euclid(n) as usize]
    }

    /// Role of vertex `v` (0-based), decided by the arrow coming from `v-1`.
    pub fn vertex_role(&self, v: usize) -> VertexRole {
        match self.letter(v as isize - 1) {
            Arrow::Increasing => VertexRole::HeadOfIncreasing,
            Arrow::Decreasing => VertexRole::TailOfDecreasing,
        }
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.letter(v as isize - 1) == Arrow::Decreasing && self.letter(v as isize) == Arrow::Increasing
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.letter(v as isize - 1) == Arrow::Increasing && self.letter(v as isize) == Arrow::Decreasing
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.is_source(v)).collect()
    }

    pub fn rotated(&self, start: usize) -> Self {
        NonOrientedCycle {
            word: cyclic::rotate(&self.word, start),
        }
    }

    /// Relabelled so that vertex 1 is the first source.
    fn from_first_source(&self) -> Self {
        let source = self.sources()[0];
        self.rotated(source)
    }

    /// Length of the run of `arrow` letters starting at letter `k`.
    fn run_from(&self, k: usize, arrow: Arrow) -> u64 {
        let n = self.word.len();
        (0..n).take_while(|&s| self.word[(k + s) % n] == arrow).count() as u64
    }

    /// Outer quiddity: one entry per tail of a decreasing arrow, two plus the
    /// length of the maximal increasing path leaving it.
    pub fn sigma(&self) -> QuidditySequence {
        let q = self.from_first_source();
        let entries = (0..q.vertex_count())
            .filter(|&v| q.vertex_role(v) == VertexRole::TailOfDecreasing)
            .map(|v| q.run_from(v, Arrow::Increasing) + 2)
            .collect();
        QuidditySequence::new(entries).expect("non-oriented cycles give non-empty sequences")
    }

    /// Inner quiddity: one entry per head of an increasing arrow, two plus the
    /// length of the maximal decreasing path ending there.
    pub fn sigma_tilde(&self) -> QuidditySequence {
        let q = self.from_first_source();
        let entries = (0..q.vertex_count())
            .filter(|&v| q.vertex_role(v) == VertexRole::HeadOfIncreasing)
            .map(|v| q.run_from(v, Arrow::Decreasing) + 2)
            .collect();
        QuidditySequence::new(entries).expect("non-oriented cycles give non-empty sequences")
    }

    /// Least rotation; it always starts at a source.
    pub fn canonicalize(&self) -> Self {
        let canonical = NonOrientedCycle {
            word: cyclic::least_rotation_of(&self.word),
        };
        debug_assert!(canonical.is_source(0));
        canonical
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.canonicalize() == other.canonicalize()
    }

    /// Graphviz rendering with vertices `1..=n`.
    pub fn to_dot(&self) -> String {
        let n = self.vertex_count();
        let mut out = String::from("digraph Q {\n  layout=circo;\n");
        for v in 1..=n {
            let _ = writeln!(out, "  {v};");
        }
        for (k, arrow) in self.word.iter().enumerate() {
            let (a, b) = (k + 1, (k + 1) % n + 1);
            let (tail, head) = match arrow {
                Arrow::Increasing => (a, b),
                Arrow::Decreasing => (b, a),
            };
            let _ = writeln!(out, "  {tail} -> {head};");
        }
        out.push_str("}\n");
        out
    }
}

/// The quiver read off a skeletal sequence in block form: for each block, a
/// source, `head - 2` increasing arrows, a sink, then `run + 1` decreasing
/// arrows.
pub fn mu(q: &QuidditySequence) -> Result<NonOrientedCycle> {
    let form = q.block_form()?;
    let mut word = Vec::new();
    for block in &form.blocks {
        word.extend(std::iter::repeat_n(Arrow::Increasing, (block.head - 2) as usize));
        word.extend(std::iter::repeat_n(Arrow::Decreasing, block.run + 1));
    }
    NonOrientedCycle::new(word)
}

/// Vertex count of `mu(q)`: `p + sum (a_k - 2)`.
pub fn quiver_vertex_count(q: &QuidditySequence) -> usize {
    q.len() + q.entries().iter().map(|&a| a.saturating_sub(2) as usize).sum::<usize>()
}

impl fmt::Display for NonOrientedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.word {
            f.write_char(a.letter())?;
        }
        Ok(())
    }
}

impl FromStr for NonOrientedCycle {
    type Err = FriezeError;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .trim()
            .chars()
            .filter(|c| !matches!(c, ',' | ' '))
            .map(|c| match c.to_ascii_uppercase() {
                'I' => Ok(Arrow::Increasing),
                'D' => Ok(Arrow::Decreasing),
                other => Err(FriezeError::Parse {
                    input: s.to_string(),
                    reason: format!("unexpected letter {other:?}, use I and D"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        NonOrientedCycle::new(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiddity::q;

    fn word(s: &str) -> NonOrientedCycle {
        s.parse().unwrap()
    }

    /// The nine-vertex example: 1->2, 2->3, 3<-4, 4->5, 5<-6, 6<-7, 7<-8,
    /// 8->9 and the arrow 1->9.
    fn nine_vertex_example() -> NonOrientedCycle {
        word("IIDIDDDID")
    }

    #[test]
    fn nine_vertex_example_maps() {
        let quiver = nine_vertex_example();
        assert_eq!(quiver.sigma(), q(&[4, 3, 2, 2, 3]));
        assert_eq!(quiver.sigma_tilde(), q(&[2, 3, 5, 3]));
        assert_eq!(quiver.sigma().sum() + quiver.sigma_tilde().sum(), 27);
    }

    #[test]
    fn four_vertex_example() {
        let quiver = word("IIDD");
        assert_eq!(quiver.sigma(), q(&[4, 2]));
        assert!(quiver.sigma_tilde().cyclically_equal(&q(&[2, 4])));
        assert_eq!(quiver.sigma().sum() + quiver.sigma_tilde().sum(), 12);
        assert_eq!(mu(&q(&[4, 2])).unwrap(), quiver);
    }

    #[test]
    fn oriented_words_are_rejected() {
        assert!(matches!("IIII".parse::<NonOrientedCycle>(), Err(FriezeError::NotACycleWord(_))));
        assert!(matches!("D".parse::<NonOrientedCycle>(), Err(FriezeError::NotACycleWord(_))));
        assert!(matches!("IXD".parse::<NonOrientedCycle>(), Err(FriezeError::Parse { .. })));
    }

    #[test]
    fn mu_examples() {
        let nine = mu(&q(&[4, 3, 2, 2, 3])).unwrap();
        assert_eq!(nine.vertex_count(), 9);
        assert!(nine.is_isomorphic(&nine_vertex_example()));
        for a in 3..9u64 {
            let path = mu(&q(&[a])).unwrap();
            assert_eq!(path.vertex_count() as u64, a - 1);
            assert_eq!(path.word().iter().filter(|&&x| x == Arrow::Decreasing).count(), 1);
        }
        assert_eq!(mu(&q(&[2, 2])), Err(FriezeError::NotSkeletal));
    }

    #[test]
    fn canonical_forms() {
        let canonical = word("IIDD").canonicalize();
        for s in ["IIDD", "IDDI", "DDII", "DIID"] {
            assert_eq!(word(s).canonicalize(), canonical);
        }
        assert_eq!(word("ID").canonicalize(), word("ID"));
        assert_eq!(word("DI").canonicalize(), word("ID"));
    }

    #[test]
    fn every_vertex_has_exactly_one_role() {
        let quiver = nine_vertex_example();
        let tails = (0..9)
            .filter(|&v| quiver.vertex_role(v) == VertexRole::TailOfDecreasing)
            .map(|v| v + 1)
            .collect::<Vec<_>>();
        assert_eq!(tails, vec![1, 4, 6, 7, 8]);
        let heads = (0..9)
            .filter(|&v| quiver.vertex_role(v) == VertexRole::HeadOfIncreasing)
            .map(|v| v + 1)
            .collect::<Vec<_>>();
        assert_eq!(heads, vec![2, 3, 5, 9]);
    }

    #[test]
    fn dot_output() {
        let dot = word("IIDD").to_dot();
        assert!(dot.contains("1 -> 2;"));
        assert!(dot.contains("2 -> 3;"));
        assert!(dot.contains("4 -> 3;"));
        assert!(dot.contains("1 -> 4;"));
    }

    #[test]
    fn json_schema() {
        let json = serde_json::to_string(&word("IIDD")).unwrap();
        assert_eq!(json, r#"{"word":"IIDD"}"#);
        let back: NonOrientedCycle = serde_json::from_str(&json).unwrap();
        assert_eq!(back, word("IIDD"));
        assert!(serde_json::from_str::<NonOrientedCycle>(r#"{"word":"II"}"#).is_err());
    }

    #[test]
    fn exhaustive_round_trips_small() {
        for n in 2..=10usize {
            for mask in 0u32..1 << n {
                let letters = (0..n)
                    .map(|b| if mask & (1 << b) != 0 { Arrow::Increasing } else { Arrow::Decreasing })
                    .collect();
                let Ok(quiver) = NonOrientedCycle::new(letters) else { continue };
                let sigma = quiver.sigma();
                let tilde = quiver.sigma_tilde();
                assert!(sigma.is_skeletal() && tilde.is_skeletal());
                assert_eq!(sigma.sum() + tilde.sum(), 3 * n as u64);
                assert!(mu(&sigma).unwrap().is_isomorphic(&quiver));
                assert!(sigma.partner().unwrap().cyclically_equal(&tilde));
                assert_eq!(quiver_vertex_count(&sigma), n);
            }
        }
    }
}
