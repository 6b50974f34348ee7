//! Alphabets, strings over rank alphabets, n-gram count vectors, and the
//! angle pseudometric.
//!
//! Strings store symbol *ranks* (`0..alphabet.size()`), not text, so
//! alphabets with arbitrary display symbols behave identically. The two
//! ranks `size` and `size + 1` are reserved as sentinels for the suffix
//! structure and never appear in string content.

use std::collections::HashMap;
use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rand::Rng;

use crate::{Error, Result};

/// Character pool used when an alphabet is built from a bare size.
const DEFAULT_SYMBOLS: &str = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

/// A finite alphabet mapping display symbols to ranks `0..size`.
#[derive(Debug, Clone)]
pub struct Alphabet {
    symbols: Vec<char>,
    ranks: HashMap<char, u32>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl Hash for Alphabet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl Alphabet {
    /// Alphabet of `size` ranks with default display symbols.
    pub fn new(size: usize) -> Result<Arc<Self>> {
        if size == 0 {
            return Err(Error::InvalidAlphabet("size must be at least 1".into()));
        }
        if size > DEFAULT_SYMBOLS.chars().count() {
            return Err(Error::InvalidAlphabet(format!(
                "no default symbols for size {size}; use from_chars"
            )));
        }
        Self::from_chars(DEFAULT_SYMBOLS.chars().take(size))
    }

    /// Alphabet with the given display symbols; rank = position.
    pub fn from_chars(chars: impl IntoIterator<Item = char>) -> Result<Arc<Self>> {
        let symbols: Vec<char> = chars.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("size must be at least 1".into()));
        }
        let mut ranks = HashMap::with_capacity(symbols.len());
        for (i, &c) in symbols.iter().enumerate() {
            if ranks.insert(c, i as u32).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {c:?}")));
            }
        }
        Ok(Arc::new(Alphabet { symbols, ranks }))
    }

    /// Alphabet consisting of the distinct characters of `text`, sorted.
    pub fn inferred(text: impl IntoIterator<Item = char>) -> Result<Arc<Self>> {
        let mut chars: Vec<char> = text.into_iter().collect();
        chars.sort_unstable();
        chars.dedup();
        Self::from_chars(chars)
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbol(&self, rank: u32) -> Option<char> {
        self.symbols.get(rank as usize).copied()
    }

    pub fn rank(&self, symbol: char) -> Option<u32> {
        self.ranks.get(&symbol).copied()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }
}

/// A finite string of symbol ranks over a shared [`Alphabet`].
#[derive(Clone)]
pub struct Str {
    symbols: Vec<u32>,
    alphabet: Arc<Alphabet>,
}

impl PartialEq for Str {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols && self.alphabet == other.alphabet
    }
}

impl Eq for Str {}

impl Hash for Str {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl fmt::Debug for Str {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Str({:?})", self.to_text())
    }
}

impl Str {
    /// The empty string over `alphabet`.
    pub fn empty(alphabet: &Arc<Alphabet>) -> Self {
        Str {
            symbols: Vec::new(),
            alphabet: Arc::clone(alphabet),
        }
    }

    /// Build from ranks, validating each against the alphabet size.
    pub fn from_ranks(alphabet: &Arc<Alphabet>, symbols: Vec<u32>) -> Result<Self> {
        let size = alphabet.size();
        for &r in &symbols {
            if r as usize >= size {
                return Err(Error::RankOutOfRange { rank: r, size });
            }
        }
        Ok(Str {
            symbols,
            alphabet: Arc::clone(alphabet),
        })
    }

    /// Parse display text into ranks.
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let mut symbols = Vec::with_capacity(text.len());
        for c in text.chars() {
            symbols.push(alphabet.rank(c).ok_or(Error::UnknownSymbol(c))?);
        }
        Ok(Str {
            symbols,
            alphabet: Arc::clone(alphabet),
        })
    }

    /// Uniformly random string of the given length.
    pub fn random<R: Rng + ?Sized>(alphabet: &Arc<Alphabet>, len: usize, rng: &mut R) -> Self {
        let size = alphabet.size() as u32;
        let symbols = (0..len).map(|_| rng.random_range(0..size)).collect();
        Str {
            symbols,
            alphabet: Arc::clone(alphabet),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn ranks(&self) -> &[u32] {
        &self.symbols
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn to_text(&self) -> String {
        self.symbols
            .iter()
            .map(|&r| self.alphabet.symbol(r).unwrap_or('?'))
            .collect()
    }

    pub fn concat(&self, other: &Str) -> Result<Str> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Ok(Str {
            symbols,
            alphabet: Arc::clone(&self.alphabet),
        })
    }

    pub fn repeat(&self, times: usize) -> Str {
        Str {
            symbols: self.symbols.repeat(times),
            alphabet: Arc::clone(&self.alphabet),
        }
    }

    pub fn slice(&self, start: usize, end: usize) -> Str {
        Str {
            symbols: self.symbols[start..end].to_vec(),
            alphabet: Arc::clone(&self.alphabet),
        }
    }

    pub fn reversed(&self) -> Str {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Str {
            symbols,
            alphabet: Arc::clone(&self.alphabet),
        }
    }

    /// Apply a symbol permutation given as `rank -> perm[rank]`.
    pub fn permuted(&self, perm: &[u32]) -> Result<Str> {
        let size = self.alphabet.size();
        if perm.len() != size {
            return Err(Error::InvalidAlphabet(format!(
                "permutation has length {}, alphabet size {size}",
                perm.len()
            )));
        }
        let symbols = self
            .symbols
            .iter()
            .map(|&r| perm[r as usize])
            .collect::<Vec<_>>();
        Str::from_ranks(&self.alphabet, symbols)
    }
}

/// Sparse nonnegative integer count vector over `Sigma^n` at a fixed
/// scale `n`. Zero entries are omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NGramVector {
    scale: usize,
    counts: HashMap<Vec<u32>, u64>,
}

impl NGramVector {
    pub fn scale(&self) -> usize {
        self.scale
    }

    pub fn get(&self, key: &[u32]) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn counts(&self) -> &HashMap<Vec<u32>, u64> {
        &self.counts
    }

    /// Sum of all counts: `max(0, |S| - n + 1)` when built from `S`.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Squared Euclidean norm.
    pub fn norm_sq(&self) -> u64 {
        self.counts.values().map(|&c| c * c).sum()
    }

    /// Dot product with another vector of the same scale.
    pub fn dot(&self, other: &NGramVector) -> Result<u64> {
        if self.scale != other.scale {
            return Err(Error::ScaleMismatch {
                left: self.scale,
                right: other.scale,
            });
        }
        // Iterate the smaller map.
        let (small, large) = if self.counts.len() <= other.counts.len() {
            (self, other)
        } else {
            (other, self)
        };
        Ok(small
            .counts
            .iter()
            .map(|(k, &c)| c * large.get(k))
            .sum())
    }
}

/// Number of pairs `(P1, P2)` with `S = P1 Q P2`. The empty string has
/// multiplicity `|S| + 1` (one split per position) per the definition,
/// though no caller depends on that case.
pub fn multiplicity(s: &Str, q: &Str) -> Result<u64> {
    if s.alphabet != q.alphabet {
        return Err(Error::AlphabetMismatch);
    }
    if q.is_empty() {
        return Ok(s.len() as u64 + 1);
    }
    if q.len() > s.len() {
        return Ok(0);
    }
    Ok(s.ranks()
        .windows(q.len())
        .filter(|w| *w == q.ranks())
        .count() as u64)
}

/// Count vector of all length-`n` substrings of `s`. Zero vector when
/// `n > |s|`.
pub fn ngram_counts(s: &Str, n: usize) -> NGramVector {
    assert!(n >= 1, "n-gram scale must be at least 1");
    let mut counts = HashMap::new();
    if n <= s.len() {
        for w in s.ranks().windows(n) {
            *counts.entry(w.to_vec()).or_insert(0u64) += 1;
        }
    }
    NGramVector { scale: n, counts }
}

/// Angle from integer aggregates: `arccos(dot / sqrt(nu * nv))`, with
/// the cosine argument clamped to `[-1, 1]`. Conventions: 0 when both
/// vectors vanish, `pi/2` when exactly one does.
pub fn angle_from_moments(norm_sq_u: u64, norm_sq_v: u64, dot: u64) -> f64 {
    match (norm_sq_u == 0, norm_sq_v == 0) {
        (true, true) => 0.0,
        (true, false) | (false, true) => FRAC_PI_2,
        (false, false) => {
            let cos = dot as f64 / ((norm_sq_u as f64).sqrt() * (norm_sq_v as f64).sqrt());
            cos.clamp(-1.0, 1.0).acos()
        }
    }
}

/// Angle distance between two count vectors of the same scale, in
/// `[0, pi/2]`.
pub fn angle(u: &NGramVector, v: &NGramVector) -> Result<f64> {
    let dot = u.dot(v)?;
    Ok(angle_from_moments(u.norm_sq(), v.norm_sq(), dot))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ab() -> Arc<Alphabet> {
        Alphabet::from_chars("ab".chars()).unwrap()
    }

    fn s(alphabet: &Arc<Alphabet>, text: &str) -> Str {
        Str::parse(alphabet, text).unwrap()
    }

    /// All split pairs (P1, P2) with S = P1 Q P2, by brute force.
    fn multiplicity_by_splits(s: &Str, q: &Str) -> u64 {
        let mut count = 0;
        for i in 0..=s.len() {
            for j in i..=s.len() {
                if &s.ranks()[i..j] == q.ranks() {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn multiplicity_paper_example() {
        let a = ab();
        assert_eq!(multiplicity(&s(&a, "abab"), &s(&a, "ab")).unwrap(), 2);
        assert_eq!(multiplicity(&s(&a, "abab"), &s(&a, "ba")).unwrap(), 1);
    }

    #[test]
    fn multiplicity_absent_substring() {
        let abc = Alphabet::from_chars("abcx".chars()).unwrap();
        assert_eq!(multiplicity(&s(&abc, "abc"), &s(&abc, "x")).unwrap(), 0);
    }

    #[test]
    fn multiplicity_overlapping() {
        let a = ab();
        let expected = multiplicity_by_splits(&s(&a, "aaa"), &s(&a, "aa"));
        assert_eq!(expected, 2);
        assert_eq!(multiplicity(&s(&a, "aaa"), &s(&a, "aa")).unwrap(), expected);
    }

    #[test]
    fn multiplicity_empty_needle() {
        let a = ab();
        assert_eq!(multiplicity(&s(&a, "aba"), &Str::empty(&a)).unwrap(), 4);
    }

    #[test]
    fn multiplicity_alphabet_mismatch() {
        let a = ab();
        let b = Alphabet::from_chars("abc".chars()).unwrap();
        assert!(matches!(
            multiplicity(&s(&a, "ab"), &s(&b, "ab")),
            Err(Error::AlphabetMismatch)
        ));
    }

    #[test]
    fn ngram_counts_paper_example() {
        let a = ab();
        let v = ngram_counts(&s(&a, "abab"), 2);
        assert_eq!(v.get(&[0, 1]), 2);
        assert_eq!(v.get(&[1, 0]), 1);
        assert_eq!(v.get(&[1, 1]), 0);
        assert_eq!(v.counts().len(), 2);
    }

    #[test]
    fn ngram_counts_scale_exceeds_length() {
        let a = ab();
        assert!(ngram_counts(&s(&a, "ab"), 3).is_zero());
    }

    #[test]
    fn ngram_counts_single_symbol() {
        let a = ab();
        let v = ngram_counts(&s(&a, "aaa"), 1);
        assert_eq!(v.get(&[0]), 3);
        assert_eq!(v.counts().len(), 1);
    }

    #[test]
    fn angle_identical_direction() {
        let a = ab();
        let u = ngram_counts(&s(&a, "ababababababab"), 2);
        assert_eq!(angle(&u, &u).unwrap(), 0.0);
    }

    #[test]
    fn angle_orthogonal_bigrams() {
        let a = ab();
        let u = ngram_counts(&s(&a, "ab"), 2);
        let v = ngram_counts(&s(&a, "ba"), 2);
        assert_eq!(angle(&u, &v).unwrap(), FRAC_PI_2);
    }

    #[test]
    fn angle_known_value() {
        // u = {a:4, b:3}, v = {a:20, b:19}: arccos(137 / (5 * sqrt(761)))
        let got = angle_from_moments(25, 761, 137);
        let expected = (137.0 / (5.0 * 761.0_f64.sqrt())).acos();
        assert!((got - expected).abs() < 1e-15);
    }

    #[test]
    fn angle_zero_conventions() {
        let a = ab();
        let z = ngram_counts(&s(&a, "a"), 2);
        let u = ngram_counts(&s(&a, "ab"), 2);
        assert_eq!(angle(&z, &z).unwrap(), 0.0);
        assert_eq!(angle(&u, &z).unwrap(), FRAC_PI_2);
        assert_eq!(angle(&z, &u).unwrap(), FRAC_PI_2);
    }

    #[test]
    fn angle_scale_mismatch() {
        let a = ab();
        let u = ngram_counts(&s(&a, "ab"), 1);
        let v = ngram_counts(&s(&a, "ab"), 2);
        assert!(matches!(
            angle(&u, &v),
            Err(Error::ScaleMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn window_count_identity() {
        let a = Alphabet::new(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let len = rng.random_range(0..40usize);
            let w = Str::random(&a, len, &mut rng);
            for n in 1..=(len + 2).min(12) {
                let total = ngram_counts(&w, n).total();
                assert_eq!(total, (len + 1).saturating_sub(n) as u64);
            }
        }
    }

    proptest! {
        #[test]
        fn angle_symmetry_and_scale_invariance(
            u in proptest::collection::vec(0u64..50, 4),
            v in proptest::collection::vec(0u64..50, 4),
            c in 1u64..5,
        ) {
            // Treat the vectors as moments over a fixed 4-key support.
            let nu: u64 = u.iter().map(|x| x * x).sum();
            let nv: u64 = v.iter().map(|x| x * x).sum();
            let dot: u64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
            let fwd = angle_from_moments(nu, nv, dot);
            let bwd = angle_from_moments(nv, nu, dot);
            prop_assert_eq!(fwd, bwd);
            // Scaling one vector by a positive constant keeps the angle.
            let scaled = angle_from_moments(nu * c * c, nv, dot * c);
            prop_assert!((fwd - scaled).abs() < 1e-12);
        }

        #[test]
        fn angle_triangle_inequality(
            u in proptest::collection::vec(0u64..30, 5),
            v in proptest::collection::vec(0u64..30, 5),
            w in proptest::collection::vec(0u64..30, 5),
        ) {
            let moments = |x: &[u64], y: &[u64]| {
                let nx: u64 = x.iter().map(|a| a * a).sum();
                let ny: u64 = y.iter().map(|a| a * a).sum();
                let d: u64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
                angle_from_moments(nx, ny, d)
            };
            let uw = moments(&u, &w);
            let uv = moments(&u, &v);
            let vw = moments(&v, &w);
            prop_assert!(uw <= uv + vw + 1e-9);
        }
    }
}
