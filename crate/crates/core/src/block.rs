//! Encoding composed counting-gadget instances as bounded-depth parenthesis
//! blocks, and reducing an AND of block values to one Dyck membership query.
//!
//! A `(w, h)`-*block* is a parenthesis word of even length `w` whose prefix
//! imbalances stay within `[0, h]` and whose final imbalance is `0` or `2`.
//! Leaf bits encode as two-letter blocks (`0` ↦ `((`, `1` ↦ `()`), and one
//! composition level wraps `2m` equal-sized blocks by concatenating them and
//! appending `2m` closing parentheses. Under the counting promise the final
//! imbalance tracks the gadget's value (`0` for value `1`, `2` for value
//! `0`), so a balanced top-level block certifies that the composed function
//! evaluates to `1`.

use thiserror::Error;

use crate::dyck::{is_block, DyckWord};
use crate::ex::ExInstance;

/// Error produced by block constructors and encoders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    /// The word does not satisfy the `(w, h)`-block shape conditions.
    #[error("word is not a ({width}, {height})-block")]
    NotABlock {
        /// Claimed width.
        width: usize,
        /// Claimed height bound.
        height: usize,
    },
    /// Blocks that must share dimensions do not.
    #[error(
        "blocks must share dimensions: expected ({expected_width}, {expected_height}), \
         got ({width}, {height})"
    )]
    DimensionMismatch {
        /// Width of the first block.
        expected_width: usize,
        /// Height of the first block.
        expected_height: usize,
        /// Width of the offending block.
        width: usize,
        /// Height of the offending block.
        height: usize,
    },
    /// The dimension recurrence left the representable range.
    #[error("block dimensions overflow for m={m}, levels={levels}")]
    Overflow {
        /// Width parameter.
        m: usize,
        /// Composition depth.
        levels: usize,
    },
}

/// A parenthesis word together with the `(width, height)` block shape it is
/// declared to have.
///
/// Values built through [`Block::new`] are always valid blocks. Encoder
/// outputs carry the dimensions dictated by the construction; when encoder
/// inputs break the counting promise the declared shape can fail to hold,
/// which [`Block::check`] detects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    word: DyckWord,
    width: usize,
    height: usize,
}

impl Block {
    /// Wraps a word as a `(width, height)`-block, validating the shape.
    pub fn new(word: DyckWord, width: usize, height: usize) -> Result<Self, BlockError> {
        if !is_block(&word, width, height) {
            return Err(BlockError::NotABlock { width, height });
        }
        Ok(Self {
            word,
            width,
            height,
        })
    }

    /// Wraps a word with declared dimensions without validating the shape.
    fn unchecked(word: DyckWord, width: usize, height: usize) -> Self {
        Self {
            word,
            width,
            height,
        }
    }

    /// The underlying parenthesis word.
    pub fn word(&self) -> &DyckWord {
        &self.word
    }

    /// Declared width (the word's length).
    pub fn width(&self) -> usize {
        self.width
    }

    /// Declared height bound on prefix imbalances.
    pub fn height(&self) -> usize {
        self.height
    }

    /// Re-validates that the word satisfies its declared block shape.
    pub fn check(&self) -> Result<(), BlockError> {
        if is_block(&self.word, self.width, self.height) {
            Ok(())
        } else {
            Err(BlockError::NotABlock {
                width: self.width,
                height: self.height,
            })
        }
    }
}

/// Dimensions of the block encoding a composed instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockDims {
    /// Width (word length) of the encoding.
    pub width: u64,
    /// Height bound of the encoding.
    pub height: u64,
}

/// Dimensions of the block encoding a depth-`levels` composition with width
/// parameter `m`: width follows `w(0) = 2`, `w(ℓ) = 2m·(w(ℓ-1) + 1)` and the
/// height is `2 + 2·levels·(m + 1)`.
///
/// # Panics
///
/// Panics if `m == 0`.
pub fn block_dims(m: usize, levels: usize) -> Result<BlockDims, BlockError> {
    assert!(m >= 1, "width parameter must be at least 1");
    let overflow = || BlockError::Overflow { m, levels };
    let arity = 2u64.checked_mul(m as u64).ok_or_else(overflow)?;
    let mut width: u64 = 2;
    for _ in 0..levels {
        width = width
            .checked_add(1)
            .and_then(|w| w.checked_mul(arity))
            .ok_or_else(overflow)?;
    }
    let height = (levels as u64)
        .checked_mul(2)
        .and_then(|h| h.checked_mul(m as u64 + 1))
        .and_then(|h| h.checked_add(2))
        .ok_or_else(overflow)?;
    Ok(BlockDims { width, height })
}

/// Encodes one leaf bit as a `(2, 2)`-block: `0` ↦ `((`, `1` ↦ `()`.
///
/// # Panics
///
/// Panics if `bit` is not `0` or `1`.
pub fn encode_leaf(bit: u8) -> Block {
    assert!(bit <= 1, "leaf bits must be 0 or 1, got {bit}");
    let word = DyckWord::from_bits(if bit == 0 { &[0, 0] } else { &[0, 1] });
    Block::unchecked(word, 2, 2)
}

/// Concatenates the words of one group and appends the group's closing run.
fn level_word<'a>(words: impl IntoIterator<Item = &'a DyckWord>, m: usize) -> DyckWord {
    let mut out = DyckWord::new();
    for word in words {
        out.extend_word(word);
    }
    for _ in 0..2 * m {
        out.push_bit(1);
    }
    out
}

/// Wraps `2m` blocks of equal dimensions `(w, h)` into one level of the
/// encoding: their concatenation followed by `2m` closing parentheses, with
/// declared dimensions `(2m·(w + 1), h + 2·(m + 1))`.
///
/// Inputs are validated (shape and matching dimensions); the output carries
/// the declared dimensions unconditionally, since they are guaranteed to hold
/// only when the block values respect the counting promise.
///
/// # Panics
///
/// Panics if the number of blocks is zero or odd.
pub fn encode_level(blocks: &[Block]) -> Result<Block, BlockError> {
    assert!(
        !blocks.is_empty() && blocks.len().is_multiple_of(2),
        "one level wraps an even, positive number of blocks, got {}",
        blocks.len()
    );
    let m = blocks.len() / 2;
    let (width, height) = (blocks[0].width(), blocks[0].height());
    for block in blocks {
        if block.width() != width || block.height() != height {
            return Err(BlockError::DimensionMismatch {
                expected_width: width,
                expected_height: height,
                width: block.width(),
                height: block.height(),
            });
        }
        block.check()?;
    }
    let word = level_word(blocks.iter().map(Block::word), m);
    Ok(Block::unchecked(
        word,
        2 * m * (width + 1),
        height + 2 * (m + 1),
    ))
}

/// Encodes a composed instance as a block, leaf bits first, then one wrapping
/// pass per composition level.
///
/// The encoding is purely syntactic and total: the returned block always has
/// the dimensions given by [`block_dims`], and it satisfies the block shape
/// (checkable via [`Block::check`]) whenever the instance satisfies the
/// counting promise.
pub fn encode_composed(instance: &ExInstance) -> Block {
    let m = instance.spec().m();
    let arity = instance.spec().arity();
    let mut words: Vec<DyckWord> = instance
        .leaves()
        .iter()
        .map(|&bit| encode_leaf(bit).word().clone())
        .collect();
    let mut width = 2usize;
    for _ in 0..instance.levels() {
        words = words
            .chunks(arity)
            .map(|group| level_word(group, m))
            .collect();
        width = arity * (width + 1);
    }
    debug_assert_eq!(words.len(), 1);
    let height = 2 + 2 * instance.levels() * (m + 1);
    Block::unchecked(words.pop().expect("composition has a root"), width, height)
}

/// Reduces an AND of block values to one Dyck membership query.
///
/// Validates that all blocks share one dimension pair `(w, h)` and satisfy
/// the block shape, then returns their plain concatenation together with the
/// depth bound `h`: the concatenation belongs to the depth-`h` Dyck language
/// exactly when every block is balanced. An empty list yields the empty word
/// and depth bound `0` (an empty AND is true, and the empty word is a member).
pub fn concat_and_reduction(blocks: &[Block]) -> Result<(DyckWord, usize), BlockError> {
    let Some(first) = blocks.first() else {
        return Ok((DyckWord::new(), 0));
    };
    let (width, height) = (first.width(), first.height());
    let mut word = DyckWord::with_capacity(width * blocks.len());
    for block in blocks {
        if block.width() != width || block.height() != height {
            return Err(BlockError::DimensionMismatch {
                expected_width: width,
                expected_height: height,
                width: block.width(),
                height: block.height(),
            });
        }
        block.check()?;
        word.extend_word(block.word());
    }
    Ok((word, height))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use crate::dyck::{eval_dyck, imbalance};
    use crate::ex::{enumerate_promise_inputs, eval_ex_composed, ExInstance, ExSpec};

    use super::*;

    #[test]
    fn leaves_encode_as_two_letter_blocks() {
        let zero = encode_leaf(0);
        let one = encode_leaf(1);
        assert_eq!(zero.word().to_string(), "((");
        assert_eq!(one.word().to_string(), "()");
        assert_eq!((zero.width(), zero.height()), (2, 2));
        assert_eq!((one.width(), one.height()), (2, 2));
        assert!(zero.check().is_ok());
        assert!(one.check().is_ok());
        assert_eq!(imbalance(zero.word()), 2, "value 0 leaves a surplus of 2");
        assert_eq!(imbalance(one.word()), 0, "value 1 is balanced");
    }

    #[test]
    fn dimension_recurrence_matches_hand_computed_values() {
        assert_eq!(
            block_dims(1, 0).unwrap(),
            BlockDims {
                width: 2,
                height: 2
            }
        );
        assert_eq!(
            block_dims(1, 1).unwrap(),
            BlockDims {
                width: 6,
                height: 6
            }
        );
        assert_eq!(
            block_dims(1, 2).unwrap(),
            BlockDims {
                width: 14,
                height: 10
            }
        );
        assert_eq!(
            block_dims(2, 1).unwrap(),
            BlockDims {
                width: 12,
                height: 8
            }
        );
        assert_eq!(
            block_dims(2, 2).unwrap(),
            BlockDims {
                width: 52,
                height: 14
            }
        );
        assert_eq!(
            block_dims(3, 0).unwrap(),
            BlockDims {
                width: 2,
                height: 2
            }
        );
    }

    #[test]
    fn dimension_recurrence_detects_overflow() {
        assert_eq!(
            block_dims(8, 40),
            Err(BlockError::Overflow { m: 8, levels: 40 })
        );
    }

    #[test]
    fn one_level_wraps_blocks_and_closes_them() {
        let block = encode_level(&[encode_leaf(0), encode_leaf(1)]).unwrap();
        assert_eq!(block.word().to_string(), "((()))");
        assert_eq!((block.width(), block.height()), (6, 6));
        assert!(block.check().is_ok());

        let surplus = encode_level(&[encode_leaf(0), encode_leaf(0)]).unwrap();
        assert_eq!(surplus.word().to_string(), "(((())");
        assert_eq!(imbalance(surplus.word()), 2);
        assert!(surplus.check().is_ok());
    }

    #[test]
    fn level_encoding_rejects_mismatched_dimensions() {
        let small = encode_leaf(1);
        let large = encode_level(&[encode_leaf(0), encode_leaf(1)]).unwrap();
        assert_eq!(
            encode_level(&[small, large]),
            Err(BlockError::DimensionMismatch {
                expected_width: 2,
                expected_height: 2,
                width: 6,
                height: 6,
            })
        );
    }

    #[test]
    fn promise_breaking_output_is_flagged_only_when_reused() {
        // Two value-1 leaves violate the m=1 promise (no zeros); the wrap is
        // still produced with its declared dimensions, but it is not a block.
        let bad = encode_level(&[encode_leaf(1), encode_leaf(1)]).unwrap();
        assert_eq!(bad.word().to_string(), "()()))");
        assert_eq!(
            bad.check(),
            Err(BlockError::NotABlock {
                width: 6,
                height: 6
            })
        );
        // Feeding it back into the next level is rejected by input validation.
        assert_eq!(
            encode_level(&[bad.clone(), bad]),
            Err(BlockError::NotABlock {
                width: 6,
                height: 6
            })
        );
    }

    #[test]
    fn composed_encoding_matches_levelwise_construction() {
        let spec = ExSpec::new(1);
        let instance = ExInstance::new(spec, 2, vec![0, 1, 0, 0]).unwrap();
        let block = encode_composed(&instance);
        assert_eq!(block.word().to_string(), "((()))(((())))");
        assert_eq!((block.width(), block.height()), (14, 10));
        assert!(block.check().is_ok());
        assert_eq!(imbalance(block.word()), 0);
        assert_eq!(eval_ex_composed(&instance), Ok(1));
    }

    #[test]
    fn concatenation_is_balanced_iff_every_block_is() {
        let one = encode_leaf(1);
        let zero = encode_leaf(0);
        let (word, k) = concat_and_reduction(&[one.clone(), one.clone()]).unwrap();
        assert_eq!(word.to_string(), "()()");
        assert_eq!(k, 2);
        assert!(eval_dyck(k, &word));

        let (word, k) = concat_and_reduction(&[zero, one]).unwrap();
        assert_eq!(word.to_string(), "((()");
        assert!(!eval_dyck(k, &word));

        let (word, k) = concat_and_reduction(&[]).unwrap();
        assert!(word.is_empty());
        assert_eq!(k, 0);
        assert!(eval_dyck(k, &word));
    }

    #[test]
    fn concatenation_rejects_mismatched_dimensions() {
        let small = encode_leaf(1);
        let large = encode_level(&[encode_leaf(0), encode_leaf(1)]).unwrap();
        assert!(matches!(
            concat_and_reduction(&[large, small]),
            Err(BlockError::DimensionMismatch { .. })
        ));
    }

    proptest! {
        #[test]
        fn promise_instances_encode_to_valid_blocks(
            m in 1usize..4,
            levels in 1usize..3,
            seed in 0u64..200,
        ) {
            let spec = ExSpec::new(m);
            for instance in enumerate_promise_inputs(spec, levels, 1, seed) {
                let block = encode_composed(&instance);
                let dims = block_dims(m, levels).unwrap();
                prop_assert_eq!(block.width() as u64, dims.width);
                prop_assert_eq!(block.height() as u64, dims.height);
                prop_assert_eq!(block.word().len(), block.width());
                prop_assert!(block.check().is_ok());
                let value = eval_ex_composed(&instance).unwrap();
                let expected_imbalance = if value == 1 { 0 } else { 2 };
                prop_assert_eq!(imbalance(block.word()), expected_imbalance);
            }
        }

        #[test]
        fn composed_encoding_equals_iterated_level_encoding(
            seed in 0u64..100,
        ) {
            let spec = ExSpec::new(2);
            for instance in enumerate_promise_inputs(spec, 2, 1, seed) {
                let direct = encode_composed(&instance);
                let inner: Vec<Block> = instance
                    .leaves()
                    .chunks(spec.arity())
                    .map(|group| {
                        let leaves: Vec<Block> =
                            group.iter().map(|&b| encode_leaf(b)).collect();
                        encode_level(&leaves).unwrap()
                    })
                    .collect();
                let wrapped = encode_level(&inner).unwrap();
                prop_assert_eq!(wrapped, direct);
            }
        }
    }
}
