//! Enumerators and seeded generators used by the verification suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclic;
use crate::quiddity::{Classification, QuidditySequence};
use crate::quiver::{Arrow, NonOrientedCycle};

pub const DEFAULT_SEED: u64 = 20_240_611;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Least representatives of the rotation classes of words of length `n` over
/// `alphabet` (sorted ascending), in lexicographic order. Fredricksen,
/// Kessler and Maiorana's algorithm.
pub fn necklaces(n: usize, alphabet: &[u64]) -> Vec<Vec<u64>> {
    fn go(t: usize, p: usize, n: usize, k: usize, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if t > n {
            if n % p == 0 {
                out.push(word[1..].to_vec());
            }
            return;
        }
        word[t] = word[t - p];
        go(t + 1, p, n, k, word, out);
        for letter in word[t - p] + 1..k {
            word[t] = letter;
            go(t + 1, t, n, k, word, out);
        }
    }
    if n == 0 || alphabet.is_empty() {
        return Vec::new();
    }
    let mut word = vec![0; n + 1];
    let mut raw = Vec::new();
    go(1, 1, n, alphabet.len(), &mut word, &mut raw);
    raw.into_iter()
        .map(|w| w.into_iter().map(|i| alphabet[i]).collect())
        .collect()
}

/// One sequence per rotation class, lengths `1..=max_len`, entries in
/// `1..=max_entry`.
pub fn sequences_up_to_rotation(max_len: usize, max_entry: u64) -> Vec<QuidditySequence> {
    let alphabet: Vec<u64> = (1..=max_entry).collect();
    (1..=max_len)
        .flat_map(|n| necklaces(n, &alphabet))
        .map(|w| QuidditySequence::new(w).expect("non-empty positive word"))
        .collect()
}

/// Skeletal sequences, one per rotation class, with entries in
/// `2..=max_entry` and lengths `1..=max_len`.
pub fn skeletal_up_to_rotation(max_len: usize, max_entry: u64) -> Vec<QuidditySequence> {
    let alphabet: Vec<u64> = (2..=max_entry).collect();
    (1..=max_len)
        .flat_map(|n| necklaces(n, &alphabet))
        .map(|w| QuidditySequence::new(w).expect("non-empty positive word"))
        .filter(QuidditySequence::is_skeletal)
        .collect()
}

/// Skeletal sequences, one per rotation class, whose triangulation has at most
/// `max_arcs` arcs, i.e. `sum (a_i - 1) <= max_arcs`.
pub fn skeletal_by_arc_count(max_arcs: usize) -> Vec<QuidditySequence> {
    fn go(budget: usize, word: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if !word.is_empty() {
            out.push(word.clone());
        }
        for part in 1..=budget {
            word.push(part as u64 + 1);
            go(budget - part, word, out);
            word.pop();
        }
    }
    let mut words = Vec::new();
    go(max_arcs, &mut Vec::new(), &mut words);
    words
        .into_iter()
        .filter(|w| *w == cyclic::least_rotation_of(w))
        .map(|w| QuidditySequence::new(w).expect("non-empty positive word"))
        .filter(QuidditySequence::is_skeletal)
        .collect()
}

/// Every labelled non-oriented cycle word with `n` vertices.
pub fn cycle_words(n: usize) -> Vec<NonOrientedCycle> {
    (0u64..1 << n)
        .filter_map(|mask| {
            let word = (0..n)
                .map(|b| if mask >> b & 1 == 1 { Arrow::Decreasing } else { Arrow::Increasing })
                .collect();
            NonOrientedCycle::new(word).ok()
        })
        .collect()
}

/// Uniform sequence with length in `min_len..=max_len` and entries in
/// `1..=max_entry`, redrawn until it has infinite type.
pub fn random_infinite_type(rng: &mut impl Rng, min_len: usize, max_len: usize, max_entry: u64) -> QuidditySequence {
    loop {
        let n = rng.random_range(min_len..=max_len);
        let entries = (0..n).map(|_| rng.random_range(1..=max_entry)).collect();
        let seq = QuidditySequence::new(entries).expect("non-empty positive word");
        if seq.classify() == Classification::InfiniteType {
            return seq;
        }
    }
}

/// Random non-oriented cycle word with `2..=max_n` vertices.
pub fn random_cycle_word(rng: &mut impl Rng, max_n: usize) -> NonOrientedCycle {
    loop {
        let n = rng.random_range(2..=max_n);
        let word = (0..n)
            .map(|_| if rng.random_bool(0.5) { Arrow::Increasing } else { Arrow::Decreasing })
            .collect();
        if let Ok(q) = NonOrientedCycle::new(word) {
            return q;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necklace_counts() {
        // binary necklaces: 2, 3, 4, 6, 8, 14, 20, 36
        let counts: Vec<usize> = (1..=8).map(|n| necklaces(n, &[0, 1]).len()).collect();
        assert_eq!(counts, vec![2, 3, 4, 6, 8, 14, 20, 36]);
        assert_eq!(necklaces(4, &[1, 2, 3]).len(), 24);
    }

    #[test]
    fn necklaces_are_least_rotations_and_distinct() {
        let all = necklaces(6, &[2, 3, 5]);
        for w in &all {
            assert_eq!(*w, cyclic::least_rotation_of(w));
        }
        let mut sorted = all.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }

    #[test]
    fn arc_count_enumeration_matches_filtering() {
        let by_arcs = skeletal_by_arc_count(8);
        let brute: Vec<_> = skeletal_up_to_rotation(8, 9)
            .into_iter()
            .filter(|q| q.entries().iter().map(|&a| a - 1).sum::<u64>() <= 8)
            .collect();
        let mut a: Vec<_> = by_arcs.iter().map(|q| q.entries().to_vec()).collect();
        let mut b: Vec<_> = brute.iter().map(|q| q.entries().to_vec()).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn cycle_word_counts() {
        for n in 2..10 {
            assert_eq!(cycle_words(n).len(), (1usize << n) - 2);
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let draw = |seed| {
            let mut rng = seeded_rng(seed);
            (0..20).map(|_| random_infinite_type(&mut rng, 1, 12, 9)).collect::<Vec<_>>()
        };
        assert_eq!(draw(7), draw(7));
        assert_ne!(draw(7), draw(8));
    }
}
