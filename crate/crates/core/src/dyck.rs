//! Balanced-parenthesis words packed as bit sequences, with depth-bounded
//! membership evaluation.
//!
//! The letter encoding is fixed throughout the crate: bit `0` is an opening
//! parenthesis `(` and bit `1` is a closing parenthesis `)`. The *imbalance*
//! of a word is its number of opening minus closing parentheses; a word
//! belongs to the depth-`k` Dyck language exactly when every prefix imbalance
//! stays within `[0, k]` and the whole word is balanced.

use std::fmt;
use std::str::FromStr;

use bitvec::prelude::*;
use thiserror::Error;

/// Error returned when parsing a parenthesis string fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid character {found:?} at position {position}; expected '(' or ')'")]
pub struct ParseWordError {
    /// Byte offset of the offending character.
    pub position: usize,
    /// The offending character.
    pub found: char,
}

/// A word over `{(, )}`, stored as a packed bit sequence.
///
/// Bit `0` encodes `(` and bit `1` encodes `)`. Equality, hashing, and
/// ordering-free containers all work on the packed representation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DyckWord {
    bits: BitVec,
}

impl DyckWord {
    /// Creates the empty word.
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a word from letters given as `0`/`1` bytes.
    ///
    /// # Panics
    ///
    /// Panics if any entry is not `0` or `1`.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut word = Self::with_capacity(bits.len());
        for &bit in bits {
            word.push_bit(bit);
        }
        word
    }

    /// Builds a word from letters given as booleans (`false` = `(`).
    pub fn from_bools(bits: &[bool]) -> Self {
        Self {
            bits: bits.iter().copied().collect(),
        }
    }

    /// Builds a word of length `n` whose `i`-th letter is bit `i` of `mask`.
    ///
    /// # Panics
    ///
    /// Panics if `n > 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "mask words are limited to 64 letters, got {n}");
        let mut bits = BitVec::with_capacity(n);
        for i in 0..n {
            bits.push((mask >> i) & 1 == 1);
        }
        Self { bits }
    }

    /// Creates an empty word with space reserved for `n` letters.
    pub fn with_capacity(n: usize) -> Self {
        Self {
            bits: BitVec::with_capacity(n),
        }
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Whether the word has no letters.
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The `i`-th letter as a bit: `0` for `(`, `1` for `)`.
    ///
    /// # Panics
    ///
    /// Panics if `i` is out of bounds.
    pub fn bit(&self, i: usize) -> u8 {
        u8::from(self.bits[i])
    }

    /// Iterates over the letters as `0`/`1` bits.
    pub fn bits(&self) -> impl Iterator<Item = u8> + '_ {
        self.bits.iter().by_vals().map(u8::from)
    }

    /// The letters as a vector of `0`/`1` bytes.
    pub fn to_bits(&self) -> Vec<u8> {
        self.bits().collect()
    }

    /// Appends one letter given as a `0`/`1` bit.
    ///
    /// # Panics
    ///
    /// Panics if `bit` is not `0` or `1`.
    pub fn push_bit(&mut self, bit: u8) {
        assert!(bit <= 1, "letters must be 0 or 1, got {bit}");
        self.bits.push(bit == 1);
    }

    /// Appends every letter of `other`.
    pub fn extend_word(&mut self, other: &DyckWord) {
        self.bits.extend_from_bitslice(&other.bits);
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bit in self.bits() {
            f.write_str(if bit == 0 { "(" } else { ")" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckWord(\"{self}\")")
    }
}

impl FromStr for DyckWord {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = BitVec::with_capacity(s.len());
        for (position, found) in s.chars().enumerate() {
            match found {
                '(' => bits.push(false),
                ')' => bits.push(true),
                _ => return Err(ParseWordError { position, found }),
            }
        }
        Ok(Self { bits })
    }
}

/// Number of opening minus closing parentheses in `word`.
pub fn imbalance(word: &DyckWord) -> i64 {
    let closing = word.bits.count_ones() as i64;
    let opening = word.len() as i64 - closing;
    opening - closing
}

/// Per-prefix imbalance data for a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthProfile {
    /// Imbalance of every prefix, starting with the empty prefix; has length
    /// `word.len() + 1`.
    pub prefix_imbalances: Vec<i64>,
    /// Largest prefix imbalance (at least `0`, attained by the empty prefix).
    pub max_depth: i64,
    /// Smallest prefix imbalance (at most `0`).
    pub min_depth: i64,
    /// Imbalance of the full word.
    pub final_imbalance: i64,
}

/// Computes the imbalance of every prefix of `word` along with its extremes.
pub fn depth_profile(word: &DyckWord) -> DepthProfile {
    let mut prefix_imbalances = Vec::with_capacity(word.len() + 1);
    let mut depth = 0i64;
    let mut max_depth = 0i64;
    let mut min_depth = 0i64;
    prefix_imbalances.push(0);
    for bit in word.bits() {
        depth += if bit == 0 { 1 } else { -1 };
        max_depth = max_depth.max(depth);
        min_depth = min_depth.min(depth);
        prefix_imbalances.push(depth);
    }
    DepthProfile {
        prefix_imbalances,
        max_depth,
        min_depth,
        final_imbalance: depth,
    }
}

/// Membership in the depth-`k` Dyck language: every prefix imbalance lies in
/// `[0, k]` and the full word is balanced.
pub fn eval_dyck(k: usize, word: &DyckWord) -> bool {
    let profile = depth_profile(word);
    profile.min_depth >= 0 && profile.max_depth <= k as i64 && profile.final_imbalance == 0
}

/// Whether `word` is a `(w, h)`-block: it has even length `w`, every prefix
/// imbalance lies in `[0, h]`, and its final imbalance is `0` or `2`.
pub fn is_block(word: &DyckWord, w: usize, h: usize) -> bool {
    if word.len() != w || !w.is_multiple_of(2) {
        return false;
    }
    let mut depth = 0i64;
    for bit in word.bits() {
        depth += if bit == 0 { 1 } else { -1 };
        if depth < 0 || depth > h as i64 {
            return false;
        }
    }
    depth == 0 || depth == 2
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn display_and_parse_round_trip() {
        let word: DyckWord = "(())()".parse().unwrap();
        assert_eq!(word.to_string(), "(())()");
        assert_eq!(word.to_bits(), vec![0, 0, 1, 1, 0, 1]);
        assert_eq!(word.len(), 6);
        assert_eq!(word.bit(2), 1);
    }

    #[test]
    fn parse_reports_position_of_bad_character() {
        let err = "(()x)".parse::<DyckWord>().unwrap_err();
        assert_eq!(
            err,
            ParseWordError {
                position: 3,
                found: 'x'
            }
        );
    }

    #[test]
    fn mask_constructor_orders_bits_by_position() {
        // mask 0b0110 over 4 letters: positions 1 and 2 are closing.
        let word = DyckWord::from_mask(4, 0b0110);
        assert_eq!(word.to_string(), "())(");
        assert_eq!(word, DyckWord::from_bits(&[0, 1, 1, 0]));
        assert_eq!(DyckWord::from_mask(0, u64::MAX), DyckWord::new());
    }

    #[test]
    fn profile_of_reference_word() {
        let word: DyckWord = "(())((())())".parse().unwrap();
        let profile = depth_profile(&word);
        assert_eq!(profile.max_depth, 3);
        assert_eq!(profile.min_depth, 0);
        assert_eq!(profile.final_imbalance, 0);
        assert_eq!(profile.prefix_imbalances.len(), 13);
        assert_eq!(
            profile.prefix_imbalances,
            vec![0, 1, 2, 1, 0, 1, 2, 3, 2, 1, 2, 1, 0]
        );
        assert_eq!(imbalance(&word), 0);
    }

    #[test]
    fn membership_depends_on_depth_bound() {
        let shallow: DyckWord = "()()()".parse().unwrap();
        let deep: DyckWord = "((()))".parse().unwrap();
        let dipping: DyckWord = "())(".parse().unwrap();
        assert!(eval_dyck(2, &shallow));
        assert!(!eval_dyck(2, &deep));
        assert!(eval_dyck(3, &deep));
        assert!(!eval_dyck(5, &dipping));
        assert!(!eval_dyck(4, &"((".parse().unwrap()));
        assert!(eval_dyck(0, &DyckWord::new()));
        assert!(!eval_dyck(0, &shallow));
    }

    #[test]
    fn block_shape_examples() {
        let open_pair: DyckWord = "((".parse().unwrap();
        let closed_pair: DyckWord = "()".parse().unwrap();
        let tall: DyckWord = "(())((".parse().unwrap();
        let dips: DyckWord = "()()))".parse().unwrap();
        assert!(is_block(&open_pair, 2, 2));
        assert!(is_block(&closed_pair, 2, 2));
        assert!(is_block(&tall, 6, 2));
        assert!(!is_block(&tall, 6, 1), "exceeds the height bound");
        assert!(!is_block(&tall, 4, 2), "wrong width");
        assert!(!is_block(&dips, 6, 4), "prefix imbalance goes negative");
        assert!(is_block(&DyckWord::new(), 0, 0));
    }

    fn letters() -> impl Strategy<Value = Vec<u8>> {
        proptest::collection::vec(0u8..2, 0..200)
    }

    proptest! {
        #[test]
        fn round_trip_preserves_every_word(bits in letters()) {
            let word = DyckWord::from_bits(&bits);
            let reparsed: DyckWord = word.to_string().parse().unwrap();
            prop_assert_eq!(&reparsed, &word);
            prop_assert_eq!(reparsed.to_bits(), bits);
        }

        #[test]
        fn profile_is_the_running_sum(bits in letters()) {
            let word = DyckWord::from_bits(&bits);
            let profile = depth_profile(&word);
            prop_assert_eq!(profile.prefix_imbalances.len(), word.len() + 1);
            prop_assert_eq!(profile.prefix_imbalances[0], 0);
            for (i, bit) in word.bits().enumerate() {
                let step = if bit == 0 { 1 } else { -1 };
                prop_assert_eq!(
                    profile.prefix_imbalances[i + 1],
                    profile.prefix_imbalances[i] + step
                );
            }
            prop_assert_eq!(
                profile.max_depth,
                *profile.prefix_imbalances.iter().max().unwrap()
            );
            prop_assert_eq!(
                profile.min_depth,
                *profile.prefix_imbalances.iter().min().unwrap()
            );
            prop_assert_eq!(profile.final_imbalance, imbalance(&word));
            prop_assert_eq!(
                profile.final_imbalance,
                *profile.prefix_imbalances.last().unwrap()
            );
        }

        #[test]
        fn membership_is_monotone_in_the_depth_bound(bits in letters(), k in 0usize..12) {
            let word = DyckWord::from_bits(&bits);
            if eval_dyck(k, &word) {
                prop_assert!(eval_dyck(k + 1, &word));
            }
        }

        #[test]
        fn concatenation_adds_imbalances(a in letters(), b in letters()) {
            let left = DyckWord::from_bits(&a);
            let right = DyckWord::from_bits(&b);
            let mut joined = left.clone();
            joined.extend_word(&right);
            prop_assert_eq!(joined.len(), left.len() + right.len());
            prop_assert_eq!(imbalance(&joined), imbalance(&left) + imbalance(&right));
        }
    }
}
