//! The "exactly `m` zeros out of `2m` bits" partial Boolean function, its
//! recursive composition, and generation of inputs that satisfy its promise.
//!
//! For a width parameter `m ≥ 1` the base function reads `2m` bits and
//! evaluates to `1` when exactly `m` of them are `0`, to `0` when exactly
//! `m + 1` of them are `0`, and is undefined otherwise (a *promise
//! violation*). Composing the function with itself `ℓ` times yields a partial
//! function on `(2m)^ℓ` leaves, where every group at every level must satisfy
//! the promise.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Width parameter of the base counting function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExSpec {
    m: usize,
}

impl ExSpec {
    /// Creates the spec for the `2m`-bit base function.
    ///
    /// # Panics
    ///
    /// Panics if `m == 0`.
    pub fn new(m: usize) -> Self {
        assert!(m >= 1, "width parameter must be at least 1");
        Self { m }
    }

    /// The width parameter `m`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of input bits of the base function (`2m`), which is also the
    /// branching factor of composed instances.
    pub fn arity(&self) -> usize {
        2 * self.m
    }

    /// Number of zero bits that makes the base function evaluate to `1`.
    pub fn zeros_for_one(&self) -> usize {
        self.m
    }

    /// Number of zero bits that makes the base function evaluate to `0`.
    pub fn zeros_for_zero(&self) -> usize {
        self.m + 1
    }
}

/// A base-function input whose zero count matches neither defined case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("promise violated: {zeros} zeros in a group where only m or m+1 are defined")]
pub struct PromiseViolation {
    /// Number of zero bits in the offending group.
    pub zeros: usize,
}

/// A promise violation inside a composed instance.
///
/// Violations are reported for the first offending group in depth-first
/// order, checking each group's children before the group itself; this makes
/// the reported group the leftmost one among those at the innermost violating
/// level along that path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("promise violated at level {level}, group {group}: {zeros} zeros")]
pub struct ComposedViolation {
    /// Level of the offending group, counted from `1` at the innermost
    /// (leaf-adjacent) level up to the composition depth at the root.
    pub level: usize,
    /// Zero-based index of the offending group among all groups of that
    /// level, ordered left to right.
    pub group: usize,
    /// Number of zero values feeding the offending group.
    pub zeros: usize,
}

/// Error constructing a composed instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExInstanceError {
    /// The composition depth was zero.
    #[error("composition depth must be at least 1")]
    ZeroLevels,
    /// The number of leaves does not equal `arity^levels`.
    #[error("expected {expected} leaves for arity {arity} and depth {levels}, got {got}")]
    LeafCount {
        /// Required number of leaves.
        expected: u128,
        /// Branching factor `2m`.
        arity: usize,
        /// Composition depth.
        levels: usize,
        /// Number of leaves supplied.
        got: usize,
    },
    /// A leaf value other than `0` or `1` was supplied.
    #[error("leaf values must be 0 or 1; found {found} at index {index}")]
    BadLeaf {
        /// Index of the offending leaf.
        index: usize,
        /// The value found there.
        found: u8,
    },
}

/// A fully specified input to the `levels`-fold composition of the base
/// function: `arity^levels` leaf bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExInstance {
    spec: ExSpec,
    levels: usize,
    leaves: Vec<u8>,
}

impl ExInstance {
    /// Wraps leaf bits as a composed instance, validating the shape.
    pub fn new(spec: ExSpec, levels: usize, leaves: Vec<u8>) -> Result<Self, ExInstanceError> {
        if levels == 0 {
            return Err(ExInstanceError::ZeroLevels);
        }
        let expected = (spec.arity() as u128)
            .checked_pow(levels as u32)
            .unwrap_or(u128::MAX);
        if leaves.len() as u128 != expected {
            return Err(ExInstanceError::LeafCount {
                expected,
                arity: spec.arity(),
                levels,
                got: leaves.len(),
            });
        }
        if let Some((index, &found)) = leaves.iter().enumerate().find(|(_, &b)| b > 1) {
            return Err(ExInstanceError::BadLeaf { index, found });
        }
        Ok(Self {
            spec,
            levels,
            leaves,
        })
    }

    /// The base-function spec.
    pub fn spec(&self) -> ExSpec {
        self.spec
    }

    /// The composition depth.
    pub fn levels(&self) -> usize {
        self.levels
    }

    /// The leaf bits, left to right.
    pub fn leaves(&self) -> &[u8] {
        &self.leaves
    }
}

/// Evaluates the base function on one group of `2m` bits.
///
/// Returns `Ok(1)` for exactly `m` zeros, `Ok(0)` for exactly `m + 1` zeros,
/// and a [`PromiseViolation`] otherwise.
///
/// # Panics
///
/// Panics if `bits` does not have length `2m` or contains values other than
/// `0` and `1`.
pub fn eval_ex(spec: ExSpec, bits: &[u8]) -> Result<u8, PromiseViolation> {
    assert_eq!(
        bits.len(),
        spec.arity(),
        "base function reads exactly 2m bits"
    );
    let zeros = bits
        .iter()
        .map(|&b| {
            assert!(b <= 1, "input bits must be 0 or 1, got {b}");
            usize::from(b == 0)
        })
        .sum();
    if zeros == spec.zeros_for_one() {
        Ok(1)
    } else if zeros == spec.zeros_for_zero() {
        Ok(0)
    } else {
        Err(PromiseViolation { zeros })
    }
}

/// Evaluates the composed function on an instance, checking the promise at
/// every group of every level.
///
/// Groups are visited depth-first, children before parents, so the returned
/// [`ComposedViolation`] (if any) identifies the first bad group in that
/// order.
pub fn eval_ex_composed(instance: &ExInstance) -> Result<u8, ComposedViolation> {
    fn eval_node(
        spec: ExSpec,
        leaves: &[u8],
        level: usize,
        group: usize,
    ) -> Result<u8, ComposedViolation> {
        if level == 0 {
            return Ok(leaves[group]);
        }
        let arity = spec.arity();
        let mut values = Vec::with_capacity(arity);
        for i in 0..arity {
            values.push(eval_node(spec, leaves, level - 1, group * arity + i)?);
        }
        eval_ex(spec, &values).map_err(|violation| ComposedViolation {
            level,
            group,
            zeros: violation.zeros,
        })
    }
    eval_node(instance.spec(), instance.leaves(), instance.levels(), 0)
}

/// Binomial coefficient in `u128`, saturating on overflow.
fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    result
}

/// Saturating power in `u128`.
fn pow_sat(base: u128, exp: usize) -> u128 {
    if base <= 1 {
        return if base == 0 && exp == 0 { 1 } else { base };
    }
    match u32::try_from(exp) {
        Ok(e) => base.checked_pow(e).unwrap_or(u128::MAX),
        Err(_) => u128::MAX,
    }
}

/// Number of promise-satisfying inputs with root value `0` and with root
/// value `1`, for the `levels`-fold composition.
fn promise_counts(spec: ExSpec, levels: usize) -> (u128, u128) {
    assert!(levels >= 1, "composition depth must be at least 1");
    let m = spec.m();
    let patterns_one = binomial(2 * m, m);
    let patterns_zero = binomial(2 * m, m + 1);
    // One level below the leaves there is exactly one way to realise each value.
    let mut zero: u128 = 1;
    let mut one: u128 = 1;
    for _ in 0..levels {
        let next_one = patterns_one
            .saturating_mul(pow_sat(zero, m))
            .saturating_mul(pow_sat(one, m));
        let next_zero = patterns_zero
            .saturating_mul(pow_sat(zero, m + 1))
            .saturating_mul(pow_sat(one, m - 1));
        zero = next_zero;
        one = next_one;
    }
    (zero, one)
}

/// Number of leaf assignments that satisfy the promise at every group of the
/// `levels`-fold composition (either root value), saturating at `u128::MAX`.
pub fn count_promise_inputs(spec: ExSpec, levels: usize) -> u128 {
    let (zero, one) = promise_counts(spec, levels);
    zero.saturating_add(one)
}

/// Ascending masks of `width` bits with exactly `ones` set bits.
pub(crate) fn masks_with_popcount(width: usize, ones: usize) -> Vec<u64> {
    assert!(width < 64);
    if ones > width {
        return Vec::new();
    }
    if ones == 0 {
        return vec![0];
    }
    let limit = 1u64 << width;
    let mut mask = (1u64 << ones) - 1;
    let mut out = Vec::new();
    while mask < limit {
        out.push(mask);
        // Gosper's hack: next mask with the same popcount.
        let carry = mask & mask.wrapping_neg();
        let ripple = mask + carry;
        mask = (((ripple ^ mask) >> 2) / carry) | ripple;
    }
    out
}

/// All child-value patterns (length `2m`, ascending by packed value with
/// position `i` as bit `i`) with exactly `zeros` zero entries.
fn value_patterns(arity: usize, zeros: usize) -> Vec<Vec<u8>> {
    masks_with_popcount(arity, arity - zeros)
        .into_iter()
        .map(|mask| (0..arity).map(|i| ((mask >> i) & 1) as u8).collect())
        .collect()
}

/// Exhaustively enumerates every promise input of the composition, grouped by
/// root value (`0` first), each group in a fixed deterministic order.
fn enumerate_all(spec: ExSpec, levels: usize) -> Vec<ExInstance> {
    let arity = spec.arity();
    // Leaf-level subtrees: the single-leaf realisations of each value.
    let mut by_value: [Vec<Vec<u8>>; 2] = [vec![vec![0]], vec![vec![1]]];
    for _ in 0..levels {
        let mut next: [Vec<Vec<u8>>; 2] = [Vec::new(), Vec::new()];
        for (value, bucket) in next.iter_mut().enumerate() {
            let zeros = if value == 1 {
                spec.zeros_for_one()
            } else {
                spec.zeros_for_zero()
            };
            for pattern in value_patterns(arity, zeros) {
                // Odometer over the realisations of each child value, with
                // the rightmost child advancing fastest.
                let choices: Vec<&Vec<Vec<u8>>> =
                    pattern.iter().map(|&v| &by_value[v as usize]).collect();
                let mut indices = vec![0usize; arity];
                loop {
                    let mut leaves = Vec::new();
                    for (child, &index) in indices.iter().enumerate() {
                        leaves.extend_from_slice(&choices[child][index]);
                    }
                    bucket.push(leaves);
                    let mut position = arity;
                    loop {
                        if position == 0 {
                            break;
                        }
                        position -= 1;
                        indices[position] += 1;
                        if indices[position] < choices[position].len() {
                            break;
                        }
                        indices[position] = 0;
                    }
                    if indices.iter().all(|&i| i == 0) {
                        break;
                    }
                }
            }
        }
        by_value = next;
    }
    let [zero_rooted, one_rooted] = by_value;
    zero_rooted
        .into_iter()
        .chain(one_rooted)
        .map(|leaves| {
            ExInstance::new(spec, levels, leaves).expect("enumerated leaves have the right shape")
        })
        .collect()
}

/// Recursively fills `out` with leaves of a random promise subtree whose root
/// evaluates to `value`.
fn fill_random(spec: ExSpec, level: usize, value: u8, out: &mut Vec<u8>, rng: &mut ChaCha8Rng) {
    if level == 0 {
        out.push(value);
        return;
    }
    let zeros = if value == 1 {
        spec.zeros_for_one()
    } else {
        spec.zeros_for_zero()
    };
    let arity = spec.arity();
    let mut child_values = vec![1u8; arity];
    for position in rand::seq::index::sample(rng, arity, zeros) {
        child_values[position] = 0;
    }
    for child_value in child_values {
        fill_random(spec, level - 1, child_value, out, rng);
    }
}

/// Produces promise inputs of the `levels`-fold composition.
///
/// When the total number of promise inputs is at most `budget`, all of them
/// are returned (zero-rooted instances first, in a fixed deterministic
/// order). Otherwise `budget` independent samples are drawn, each with a
/// uniformly random root value and uniformly random zero positions at every
/// group, seeded from `seed` so repeated calls agree.
///
/// # Panics
///
/// Panics if `budget == 0` or `levels == 0`.
pub fn enumerate_promise_inputs(
    spec: ExSpec,
    levels: usize,
    budget: usize,
    seed: u64,
) -> Vec<ExInstance> {
    assert!(budget >= 1, "budget must be at least 1");
    assert!(levels >= 1, "composition depth must be at least 1");
    let total = count_promise_inputs(spec, levels);
    if total <= budget as u128 {
        return enumerate_all(spec, levels);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let leaf_count = spec.arity().pow(levels as u32);
    (0..budget)
        .map(|_| {
            let root: u8 = rng.gen_range(0..2);
            let mut leaves = Vec::with_capacity(leaf_count);
            fill_random(spec, levels, root, &mut leaves, &mut rng);
            ExInstance::new(spec, levels, leaves).expect("sampled leaves have the right shape")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use proptest::prelude::*;

    use super::*;

    #[test]
    fn base_function_counts_zeros() {
        let spec = ExSpec::new(1);
        assert_eq!(eval_ex(spec, &[0, 1]), Ok(1));
        assert_eq!(eval_ex(spec, &[1, 0]), Ok(1));
        assert_eq!(eval_ex(spec, &[0, 0]), Ok(0));
        assert_eq!(eval_ex(spec, &[1, 1]), Err(PromiseViolation { zeros: 0 }));

        let spec = ExSpec::new(2);
        assert_eq!(eval_ex(spec, &[0, 1, 0, 1]), Ok(1));
        assert_eq!(eval_ex(spec, &[0, 0, 0, 1]), Ok(0));
        assert_eq!(
            eval_ex(spec, &[0, 1, 1, 1]),
            Err(PromiseViolation { zeros: 1 })
        );
        assert_eq!(
            eval_ex(spec, &[0, 0, 0, 0]),
            Err(PromiseViolation { zeros: 4 })
        );
    }

    #[test]
    fn composition_evaluates_groups_bottom_up() {
        let spec = ExSpec::new(1);
        // Inner groups: [0,1] -> 1 and [0,0] -> 0; outer sees [1,0] -> one zero -> 1.
        let instance = ExInstance::new(spec, 2, vec![0, 1, 0, 0]).unwrap();
        assert_eq!(eval_ex_composed(&instance), Ok(1));
        // Inner groups: [0,0] -> 0 and [0,1] -> 1; outer sees [0,1] -> 1.
        let instance = ExInstance::new(spec, 2, vec![0, 0, 0, 1]).unwrap();
        assert_eq!(eval_ex_composed(&instance), Ok(1));
        // Both inner groups 0: outer sees [0,0] -> two zeros -> 0.
        let instance = ExInstance::new(spec, 2, vec![0, 0, 0, 0]).unwrap();
        assert_eq!(eval_ex_composed(&instance), Ok(0));
    }

    #[test]
    fn violations_identify_level_and_group() {
        let spec = ExSpec::new(1);
        // First inner group [1,1] has no zeros.
        let instance = ExInstance::new(spec, 2, vec![1, 1, 0, 1]).unwrap();
        assert_eq!(
            eval_ex_composed(&instance),
            Err(ComposedViolation {
                level: 1,
                group: 0,
                zeros: 0
            })
        );
        // Second inner group is the first offender, left to right.
        let instance = ExInstance::new(spec, 2, vec![0, 1, 1, 1]).unwrap();
        assert_eq!(
            eval_ex_composed(&instance),
            Err(ComposedViolation {
                level: 1,
                group: 1,
                zeros: 0
            })
        );
        // Inner groups are fine (both 1); the root sees [1,1] with no zeros.
        let instance = ExInstance::new(spec, 2, vec![0, 1, 0, 1]).unwrap();
        assert_eq!(
            eval_ex_composed(&instance),
            Err(ComposedViolation {
                level: 2,
                group: 0,
                zeros: 0
            })
        );
        // A deeper composition: the offender sits at level 1, group 3.
        let instance = ExInstance::new(spec, 3, vec![0, 1, 0, 0, 0, 1, 1, 1]).unwrap();
        assert_eq!(
            eval_ex_composed(&instance),
            Err(ComposedViolation {
                level: 1,
                group: 3,
                zeros: 0
            })
        );
    }

    #[test]
    fn instance_shape_is_validated() {
        let spec = ExSpec::new(2);
        assert!(matches!(
            ExInstance::new(spec, 0, vec![]),
            Err(ExInstanceError::ZeroLevels)
        ));
        assert!(matches!(
            ExInstance::new(spec, 2, vec![0; 15]),
            Err(ExInstanceError::LeafCount {
                expected: 16,
                got: 15,
                ..
            })
        ));
        assert!(matches!(
            ExInstance::new(spec, 1, vec![0, 1, 2, 1]),
            Err(ExInstanceError::BadLeaf { index: 2, found: 2 })
        ));
        assert!(ExInstance::new(spec, 1, vec![0, 1, 0, 1]).is_ok());
    }

    #[test]
    fn promise_input_counts_match_hand_computed_values() {
        let one = ExSpec::new(1);
        assert_eq!(count_promise_inputs(one, 1), 3);
        assert_eq!(count_promise_inputs(one, 2), 5);
        assert_eq!(count_promise_inputs(one, 3), 9);
        let two = ExSpec::new(2);
        assert_eq!(count_promise_inputs(two, 1), 10);
        assert_eq!(count_promise_inputs(two, 2), 4992);
    }

    #[test]
    fn large_counts_saturate_instead_of_overflowing() {
        let spec = ExSpec::new(8);
        assert_eq!(count_promise_inputs(spec, 40), u128::MAX);
    }

    #[test]
    fn exhaustive_enumeration_is_complete_and_valid() {
        let spec = ExSpec::new(1);
        let instances = enumerate_promise_inputs(spec, 2, 100, 0);
        assert_eq!(instances.len(), 5);
        let distinct: HashSet<_> = instances.iter().map(|i| i.leaves().to_vec()).collect();
        assert_eq!(distinct.len(), 5);
        let mut by_value = [0usize; 2];
        for instance in &instances {
            let value = eval_ex_composed(instance).expect("enumerated inputs satisfy the promise");
            by_value[value as usize] += 1;
        }
        assert_eq!(by_value, [1, 4]);
        // Zero-rooted instances come first.
        assert_eq!(eval_ex_composed(&instances[0]), Ok(0));
    }

    #[test]
    fn sampling_is_deterministic_and_valid() {
        let spec = ExSpec::new(2);
        let a = enumerate_promise_inputs(spec, 3, 50, 7);
        let b = enumerate_promise_inputs(spec, 3, 50, 7);
        assert_eq!(a, b);
        assert_eq!(a.len(), 50);
        for instance in &a {
            assert_eq!(instance.leaves().len(), 64);
            assert!(eval_ex_composed(instance).is_ok());
        }
        let c = enumerate_promise_inputs(spec, 3, 50, 8);
        assert_ne!(a, c, "different seeds should draw different samples");
    }

    proptest! {
        #[test]
        fn sampled_inputs_always_satisfy_the_promise(
            m in 1usize..4,
            levels in 1usize..3,
            seed in 0u64..1000,
        ) {
            let spec = ExSpec::new(m);
            // A budget of 1 forces the sampling path for every m >= 1.
            for instance in enumerate_promise_inputs(spec, levels, 1, seed) {
                prop_assert!(eval_ex_composed(&instance).is_ok());
            }
        }

        #[test]
        fn zero_counts_determine_the_value(bits in proptest::collection::vec(0u8..2, 4)) {
            let spec = ExSpec::new(2);
            let zeros = bits.iter().filter(|&&b| b == 0).count();
            match eval_ex(spec, &bits) {
                Ok(1) => prop_assert_eq!(zeros, 2),
                Ok(0) => prop_assert_eq!(zeros, 3),
                Ok(_) => prop_assert!(false, "values are 0 or 1"),
                Err(violation) => {
                    prop_assert_eq!(violation.zeros, zeros);
                    prop_assert!(zeros != 2 && zeros != 3);
                }
            }
        }
    }
}
