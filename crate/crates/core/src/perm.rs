//! Bijections `σ: [n] → E` in single-line notation, ranked by Lehmer code.
//!
//! Ranks follow lexicographic order of the single-line words, so
//! `(0..n!).map(|r| Permutation::unrank(n, r))` enumerates `S_n` in
//! lexicographic order.

use std::fmt;

/// A permutation of `{0, …, n-1}` stored as its single-line word:
/// `self[i]` is `σ(i+1)` in 1-indexed notation, shifted down by one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Returns `None` unless `word` is a rearrangement of `0..word.len()`.
    pub fn new(word: Vec<usize>) -> Option<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(Self(word))
    }

    /// Parses 1-indexed single-line notation such as `"2,3,1"`.
    pub fn from_one_indexed(word: &[usize]) -> Option<Self> {
        if word.contains(&0) {
            return None;
        }
        Self::new(word.iter().map(|v| v - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `σ(i)` for a 0-indexed position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `σ∘τ_i`: swaps positions `i` and `i+1` (0-indexed).
    pub fn swap_adjacent(&self, i: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(i, i + 1);
        Self(w)
    }

    /// Inserts `value` so that it lands at 0-indexed position `pos`.
    pub fn insert(&self, pos: usize, value: usize) -> Vec<usize> {
        let mut w = self.0.clone();
        w.insert(pos, value);
        w
    }

    /// Lexicographic rank in `0..n!`.
    pub fn rank(&self) -> usize {
        rank_word(&self.0)
    }

    pub fn unrank(n: usize, rank: usize) -> Self {
        let mut pool: Vec<usize> = (0..n).collect();
        let mut word = Vec::with_capacity(n);
        let mut r = rank;
        for i in (0..n).rev() {
            let f = factorial(i);
            let d = r / f;
            r %= f;
            word.push(pool.remove(d));
        }
        Self(word)
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..factorial(n)).map(move |r| Self::unrank(n, r))
    }

    /// Comma-joined 1-indexed notation, e.g. `"2,3,1"`.
    pub fn key(&self) -> String {
        self.0.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.key())
    }
}

/// Lexicographic rank of a single-line word over `0..word.len()`.
pub fn rank_word(word: &[usize]) -> usize {
    let n = word.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller_after = word[i + 1..].iter().filter(|&&v| v < word[i]).count();
        rank += smaller_after * factorial(n - 1 - i);
    }
    rank
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_unrank_roundtrip() {
        for n in 0..=5 {
            let all: Vec<_> = Permutation::all(n).collect();
            assert_eq!(all.len(), factorial(n));
            for (r, p) in all.iter().enumerate() {
                assert_eq!(p.rank(), r);
            }
            assert!(all.windows(2).all(|w| w[0] < w[1]), "lexicographic order");
        }
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_none());
        assert!(Permutation::new(vec![1, 2]).is_none());
        assert!(Permutation::from_one_indexed(&[0, 1]).is_none());
        assert_eq!(Permutation::from_one_indexed(&[2, 3, 1]).unwrap().key(), "2,3,1");
    }

    #[test]
    fn insertion_family() {
        // μ = 123, inserting 4 at positions 4,3,2,1 gives 1234, 1243, 1423, 4123
        let mu = Permutation::identity(3);
        assert_eq!(mu.insert(3, 3), vec![0, 1, 2, 3]);
        assert_eq!(mu.insert(2, 3), vec![0, 1, 3, 2]);
        assert_eq!(mu.insert(0, 3), vec![3, 0, 1, 2]);
    }
}
