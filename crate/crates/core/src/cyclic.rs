//! Helpers for words read up to rotation.

/// Start index of the lexicographically least rotation of `word` (Booth's
/// algorithm, linear time). Returns 0 for the empty word.
pub fn least_rotation<T: Ord>(word: &[T]) -> usize {
    let n = word.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &word[i % n];
    // failure function over the doubled word
    let mut fail: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let mut i = fail[j - k - 1];
        while i != -1 && at(j) != at(k + i as usize + 1) {
            if at(j) < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && at(j) != at(k) {
            if at(j) < at(k) {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k % n
}

pub fn rotate<T: Clone>(word: &[T], start: usize) -> Vec<T> {
    if word.is_empty() {
        return Vec::new();
    }
    let start = start % word.len();
    word[start..].iter().chain(&word[..start]).cloned().collect()
}

pub fn least_rotation_of<T: Ord + Clone>(word: &[T]) -> Vec<T> {
    rotate(word, least_rotation(word))
}

/// True iff `b` is a rotation of `a`.
pub fn is_rotation<T: Ord + Clone>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len() && least_rotation_of(a) == least_rotation_of(b)
}

/// Smallest `d` dividing `word.len()` such that the word is `len / d` copies of
/// its first `d` letters.
pub fn minimal_period<T: PartialEq>(word: &[T]) -> usize {
    let n = word.len();
    (1..=n)
        .filter(|d| n % d == 0)
        .find(|&d| (0..n).all(|i| word[i] == word[(i + d) % n]))
        .unwrap_or(n)
}
