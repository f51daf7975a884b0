//! Dimension adapters between two-dimensional layouts and `d`-dimensional
//! grids.
//!
//! [`fold_map`] merges the last two axes of a grid into one by snaking: layer
//! `b` of the last axis traverses the second-to-last axis forwards when `b`
//! is even and backwards when `b` is odd, so consecutive merged coordinates
//! are always adjacent in the original grid. Applying it repeatedly reduces
//! any grid to two axes while pulling unit edges back to unit edges, which
//! lets [`embed_undirected_dd`] install the folded band of
//! [`super::embed_dyck_undirected_folded`] inside a grid that is long in
//! only its merged axes. [`parallel_embed_directed_dd`] instead treats a
//! `d`-dimensional grid as a stack of independent two-dimensional slabs and
//! wires their corners together, computing the OR of the slab instances.

use crate::grid::{EdgeAssignment, GridInstance, GridSpec};

use super::fold::embed_folded_with_width;
use super::trapezoid::embed_dyck_directed;
use super::EmbedError;

fn check_fold_dims(dims: &[usize]) -> Result<(), EmbedError> {
    if dims.len() < 2 {
        return Err(EmbedError::InvalidParam(format!(
            "folding needs at least 2 axes, got {}",
            dims.len()
        )));
    }
    Ok(())
}

/// Side length of the merged axis obtained by folding the last two axes of
/// `dims`, checking for overflow.
fn merged_side(dims: &[usize]) -> Result<usize, EmbedError> {
    let d = dims.len();
    let s = dims[d - 2] + 1;
    (dims[d - 1] + 1)
        .checked_mul(s)
        .and_then(|v| v.checked_sub(1))
        .ok_or_else(|| EmbedError::Geometry("merged axis side length overflows".into()))
}

/// The shape obtained by merging the last two axes of `dims`.
pub fn folded_dims(dims: &[usize]) -> Result<Vec<usize>, EmbedError> {
    check_fold_dims(dims)?;
    let mut out = dims[..dims.len() - 2].to_vec();
    out.push(merged_side(dims)?);
    Ok(out)
}

/// Maps a vertex of the grid with shape `dims` to the grid with the last two
/// axes merged (see [`folded_dims`]).
///
/// With `s` the side count of the second-to-last axis, the vertex
/// `(…, a, b)` maps to `(…, b·s + a)` when `b` is even and to
/// `(…, b·s + s - 1 - a)` when `b` is odd. The map is a bijection and both
/// it and its inverse send grid neighbours to grid neighbours.
pub fn fold_map(v: &[usize], dims: &[usize]) -> Result<Vec<usize>, EmbedError> {
    check_fold_dims(dims)?;
    let d = dims.len();
    if v.len() != d {
        return Err(EmbedError::InvalidParam(format!(
            "vertex has {} coordinates but the grid has {d} axes",
            v.len()
        )));
    }
    for (i, (&c, &n)) in v.iter().zip(dims).enumerate() {
        if c > n {
            return Err(EmbedError::InvalidParam(format!(
                "coordinate {c} exceeds side {n} on axis {i}"
            )));
        }
    }
    merged_side(dims)?;
    let s = dims[d - 2] + 1;
    let (a, b) = (v[d - 2], v[d - 1]);
    let merged = if b % 2 == 0 {
        b * s + a
    } else {
        b * s + s - 1 - a
    };
    let mut out = v[..d - 2].to_vec();
    out.push(merged);
    Ok(out)
}

/// Inverse of [`fold_map`]: maps a vertex of the merged grid back to the
/// grid with shape `dims`.
pub fn fold_map_inv(v: &[usize], dims: &[usize]) -> Result<Vec<usize>, EmbedError> {
    check_fold_dims(dims)?;
    let d = dims.len();
    if v.len() != d - 1 {
        return Err(EmbedError::InvalidParam(format!(
            "vertex has {} coordinates but the merged grid has {} axes",
            v.len(),
            d - 1
        )));
    }
    let merged = v[d - 2];
    if merged > merged_side(dims)? {
        return Err(EmbedError::InvalidParam(format!(
            "merged coordinate {merged} exceeds side {}",
            merged_side(dims)?
        )));
    }
    for (i, (&c, &n)) in v[..d - 2].iter().zip(dims).enumerate() {
        if c > n {
            return Err(EmbedError::InvalidParam(format!(
                "coordinate {c} exceeds side {n} on axis {i}"
            )));
        }
    }
    let s = dims[d - 2] + 1;
    let b = merged / s;
    let r = merged % s;
    let a = if b.is_multiple_of(2) { r } else { s - 1 - r };
    let mut out = v[..d - 2].to_vec();
    out.push(a);
    out.push(b);
    Ok(out)
}

/// Swaps the two axes of a two-dimensional instance.
pub(crate) fn transpose_2d(instance: &GridInstance) -> Result<GridInstance, EmbedError> {
    let dims = instance.spec().dims();
    if dims.len() != 2 {
        return Err(EmbedError::InvalidParam(format!(
            "transposition needs a 2-dimensional instance, got {} axes",
            dims.len()
        )));
    }
    let spec = GridSpec::new(vec![dims[1], dims[0]], instance.spec().directed())?;
    let source = instance.source();
    let target = instance.target();
    let mut out = GridInstance::all_never(
        spec,
        vec![source[1], source[0]],
        vec![target[1], target[0]],
        instance.arity(),
    )?;
    for (edge, assignment) in instance.assignments() {
        if assignment != EdgeAssignment::Never {
            out.set_assignment(&[edge.tail[1], edge.tail[0]], 1 - edge.axis, assignment);
        }
    }
    Ok(out)
}

/// Embeds the folded band for an `m`-letter word with depth bound `depth`
/// into the undirected grid with shape `dims`, which may have any number of
/// axes but must be short in its first axis and is traversed along the
/// merged remainder.
///
/// The last `dims.len() - 1` axes are merged by repeated folding; the band
/// of height `dims[0]` is laid along the merged axis and every edge is
/// pulled back through the folds to an edge of the original grid. The source
/// is the origin; the target is the pullback of the far corner of the merged
/// grid, which for an odd last side sits at coordinate 0 of the
/// second-to-last axis rather than at the far corner of the original grid.
pub fn embed_undirected_dd(
    dims: &[usize],
    m: usize,
    depth: usize,
) -> Result<GridInstance, EmbedError> {
    if dims.len() < 2 {
        return Err(EmbedError::InvalidParam(format!(
            "the grid needs at least 2 axes, got {}",
            dims.len()
        )));
    }
    if dims.iter().any(|&n| n < 1) {
        return Err(EmbedError::InvalidParam(
            "every axis needs at least one edge".into(),
        ));
    }

    // Fold down to two axes, remembering each intermediate shape.
    let mut chain = vec![dims.to_vec()];
    while chain.last().unwrap().len() > 2 {
        chain.push(folded_dims(chain.last().unwrap())?);
    }
    let flat = chain.last().unwrap().clone();

    // The band runs along the merged axis with height dims[0]; the band
    // builder grows rows upwards, so build with the axes swapped and
    // transpose.
    let band = embed_folded_with_width(m, depth, flat[0], flat[1])?;
    let band = transpose_2d(&band)?;
    debug_assert_eq!(band.spec().dims(), &flat[..]);

    if chain.len() == 1 {
        return Ok(band);
    }

    let unfold = |v: &[usize]| -> Result<Vec<usize>, EmbedError> {
        let mut coords = v.to_vec();
        for shape in chain[..chain.len() - 1].iter().rev() {
            coords = fold_map_inv(&coords, shape)?;
        }
        Ok(coords)
    };

    let spec = GridSpec::new(dims.to_vec(), false)?;
    let source = unfold(band.source())?;
    let target = unfold(band.target())?;
    let mut out = GridInstance::all_never(spec, source, target, m)?;
    for (edge, assignment) in band.assignments() {
        if assignment == EdgeAssignment::Never {
            continue;
        }
        let tail = unfold(&edge.tail)?;
        let head = unfold(&edge.head())?;
        let mut diff = None;
        for axis in 0..dims.len() {
            if tail[axis] != head[axis] {
                if diff.is_some() || tail[axis].abs_diff(head[axis]) != 1 {
                    return Err(EmbedError::Geometry(format!(
                        "unfolded endpoints {tail:?} and {head:?} are not adjacent"
                    )));
                }
                diff = Some(axis);
            }
        }
        let axis = diff
            .ok_or_else(|| EmbedError::Geometry(format!("unfolded endpoints {tail:?} coincide")))?;
        let low: Vec<usize> = tail.iter().zip(&head).map(|(&t, &h)| t.min(h)).collect();
        out.set_assignment(&low, axis, assignment);
    }
    Ok(out)
}

/// Runs independent directed two-dimensional instances in parallel inside a
/// directed grid with shape `dims`, computing the OR of the instances.
///
/// `dims` must have at least three axes; the grid is viewed as one
/// two-dimensional slab over the last two axes per vertex of the leading
/// axes, and `instances` supplies one slab in rank order of those leading
/// coordinates. Every instance must be directed, two-dimensional with shape
/// `[dims[d-2], dims[d-1]]`, and run from its origin to its far corner.
/// Permanent edges connect all slab entry corners to the grid source and all
/// exit corners to the grid target. Instance `r` reads its bits at offset
/// `arity(0) + … + arity(r-1)`; the result's arity is the total.
pub fn parallel_embed_directed_dd(
    dims: &[usize],
    instances: &[GridInstance],
) -> Result<GridInstance, EmbedError> {
    let d = dims.len();
    if d < 3 {
        return Err(EmbedError::InvalidParam(format!(
            "parallel slabs need at least 3 axes, got {d}"
        )));
    }
    let slab_dims = [dims[d - 2], dims[d - 1]];
    let prefix = &dims[..d - 2];
    let count: usize = prefix
        .iter()
        .try_fold(1usize, |acc, &n| acc.checked_mul(n + 1))
        .ok_or_else(|| EmbedError::Geometry("leading-axis vertex count overflows".into()))?;
    if instances.len() != count {
        return Err(EmbedError::InvalidParam(format!(
            "the leading axes have {count} vertices but {} instances were supplied",
            instances.len()
        )));
    }
    for (r, instance) in instances.iter().enumerate() {
        if !instance.spec().directed() {
            return Err(EmbedError::InvalidParam(format!(
                "instance {r} is undirected"
            )));
        }
        if instance.spec().dims() != slab_dims {
            return Err(EmbedError::InvalidParam(format!(
                "instance {r} has shape {:?} but slabs have shape {slab_dims:?}",
                instance.spec().dims()
            )));
        }
        if instance.source() != [0, 0] || instance.target() != slab_dims {
            return Err(EmbedError::InvalidParam(format!(
                "instance {r} must run corner to corner"
            )));
        }
    }

    let arity = instances.iter().map(|i| i.arity()).sum();
    let spec = GridSpec::new(dims.to_vec(), true)?;
    let mut out = GridInstance::all_never(spec, vec![0; d], dims.to_vec(), arity)?;

    let mut offset = 0usize;
    for (rank, instance) in instances.iter().enumerate() {
        // Leading coordinates of this slab, in row-major rank order.
        let mut coords = vec![0usize; d];
        let mut rest = rank;
        for (i, &n) in prefix.iter().enumerate().rev() {
            coords[i] = rest % (n + 1);
            rest /= n + 1;
        }
        debug_assert_eq!(rest, 0);

        // Permanent lattice over the entry and exit corners of the slabs.
        for axis in 0..d - 2 {
            if coords[axis] < dims[axis] {
                coords[d - 2] = 0;
                coords[d - 1] = 0;
                out.set_assignment(&coords, axis, EdgeAssignment::Always);
                coords[d - 2] = dims[d - 2];
                coords[d - 1] = dims[d - 1];
                out.set_assignment(&coords, axis, EdgeAssignment::Always);
            }
        }

        for (edge, assignment) in instance.assignments() {
            let assignment = match assignment {
                EdgeAssignment::Never => continue,
                EdgeAssignment::Always => EdgeAssignment::Always,
                EdgeAssignment::Literal { bit, expected } => EdgeAssignment::Literal {
                    bit: bit + offset,
                    expected,
                },
            };
            coords[d - 2] = edge.tail[0];
            coords[d - 1] = edge.tail[1];
            out.set_assignment(&coords, d - 2 + edge.axis, assignment);
        }
        offset += instance.arity();
    }
    Ok(out)
}

/// Convenience wrapper around [`parallel_embed_directed_dd`] that builds one
/// directed trapezoid instance per slab from `(word length, depth bound)`
/// pairs via [`embed_dyck_directed`].
pub fn parallel_embed_trapezoids(
    dims: &[usize],
    specs: &[(usize, usize)],
) -> Result<GridInstance, EmbedError> {
    let instances = specs
        .iter()
        .map(|&(m, depth)| embed_dyck_directed(m, depth))
        .collect::<Result<Vec<_>, _>>()?;
    parallel_embed_directed_dd(dims, &instances)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::{eval_dyck, DyckWord};

    #[test]
    fn fold_map_snakes_through_layers() {
        // Second-to-last axis has 3 vertices; layer 1 runs backwards.
        assert_eq!(fold_map(&[0, 0], &[2, 3]).unwrap(), vec![0]);
        assert_eq!(fold_map(&[2, 0], &[2, 3]).unwrap(), vec![2]);
        assert_eq!(fold_map(&[2, 1], &[2, 3]).unwrap(), vec![3]);
        assert_eq!(fold_map(&[0, 1], &[2, 3]).unwrap(), vec![5]);
        assert_eq!(fold_map(&[0, 2], &[2, 3]).unwrap(), vec![6]);
        assert_eq!(folded_dims(&[2, 3]).unwrap(), vec![11]);
        assert_eq!(folded_dims(&[4, 2, 3]).unwrap(), vec![4, 11]);
    }

    #[test]
    fn fold_map_is_a_bijection_with_inverse() {
        let dims = [2usize, 3];
        let mut seen = [false; 12];
        for a in 0..=2usize {
            for b in 0..=3usize {
                let z = fold_map(&[a, b], &dims).unwrap()[0];
                assert!(z <= 11);
                assert!(!seen[z], "merged coordinate {z} hit twice");
                seen[z] = true;
                assert_eq!(fold_map_inv(&[z], &dims).unwrap(), vec![a, b]);
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn consecutive_merged_vertices_are_adjacent() {
        let dims = [3usize, 4, 2];
        for z in 0..folded_dims(&dims).unwrap()[1] {
            let u = fold_map_inv(&[3, z], &dims).unwrap();
            let v = fold_map_inv(&[3, z + 1], &dims).unwrap();
            let diff: usize = u.iter().zip(&v).map(|(&a, &b)| a.abs_diff(b)).sum();
            assert_eq!(diff, 1, "{u:?} -> {v:?}");
        }
    }

    #[test]
    fn fold_map_rejects_out_of_range_input() {
        assert!(matches!(
            fold_map(&[3, 0], &[2, 3]),
            Err(EmbedError::InvalidParam(_))
        ));
        assert!(matches!(
            fold_map(&[0], &[2, 3]),
            Err(EmbedError::InvalidParam(_))
        ));
        assert!(matches!(
            fold_map_inv(&[12], &[2, 3]),
            Err(EmbedError::InvalidParam(_))
        ));
        assert!(matches!(
            fold_map(&[0, 0], &[2]),
            Err(EmbedError::InvalidParam(_))
        ));
    }

    fn exhaustive_dd_check(dims: &[usize], m: usize, depth: usize) {
        let instance = embed_undirected_dd(dims, m, depth).unwrap();
        assert_eq!(instance.spec().dims(), dims);
        for mask in 0..1u64 << m {
            let bits: Vec<u8> = (0..m).map(|i| ((mask >> i) & 1) as u8).collect();
            let word = DyckWord::from_bits(&bits);
            assert_eq!(
                instance.eval(&bits),
                eval_dyck(depth, &word),
                "dims={dims:?} m={m} depth={depth} word={word}"
            );
        }
    }

    #[test]
    fn two_axis_embedding_is_the_band_itself() {
        let instance = embed_undirected_dd(&[6, 15], 8, 2).unwrap();
        assert_eq!(instance.source(), &[0, 0]);
        assert_eq!(instance.target(), &[6, 15]);
        assert_eq!(instance.arity(), 8);
        exhaustive_dd_check(&[6, 15], 8, 2);
    }

    #[test]
    fn three_axis_embedding_matches_word_evaluation() {
        exhaustive_dd_check(&[6, 3, 3], 8, 2);
    }

    #[test]
    fn odd_last_axis_moves_the_target_corner() {
        let instance = embed_undirected_dd(&[6, 3, 3], 8, 2).unwrap();
        assert_eq!(instance.target(), &[6, 0, 3]);
        let instance = embed_undirected_dd(&[6, 3, 2], 8, 2).unwrap();
        assert_eq!(instance.target(), &[6, 3, 2]);
    }

    #[test]
    fn four_axis_embedding_matches_word_evaluation() {
        // The trailing axes [1, 1, 3] merge to [1, 7] and then to [15].
        exhaustive_dd_check(&[5, 1, 1, 3], 6, 2);
    }

    #[test]
    fn short_first_axis_is_rejected() {
        assert!(matches!(
            embed_undirected_dd(&[4, 3, 3], 8, 2),
            Err(EmbedError::Geometry(_))
        ));
        assert!(matches!(
            embed_undirected_dd(&[6], 8, 2),
            Err(EmbedError::InvalidParam(_))
        ));
    }

    #[test]
    fn parallel_slabs_compute_the_disjunction() {
        let slab = embed_dyck_directed(4, 2).unwrap();
        let instance =
            parallel_embed_directed_dd(&[1, 2, 2], &[slab.clone(), slab.clone()]).unwrap();
        assert_eq!(instance.arity(), 8);
        assert_eq!(instance.source(), &[0, 0, 0]);
        assert_eq!(instance.target(), &[1, 2, 2]);
        for mask in 0..1u64 << 8 {
            let bits: Vec<u8> = (0..8).map(|i| ((mask >> i) & 1) as u8).collect();
            let expected = bits
                .chunks(4)
                .any(|chunk| eval_dyck(2, &DyckWord::from_bits(chunk)));
            assert_eq!(instance.eval(&bits), expected, "mask={mask:08b}");
        }
    }

    #[test]
    fn trapezoid_wrapper_matches_the_manual_stack() {
        let slab = embed_dyck_directed(4, 2).unwrap();
        let manual = parallel_embed_directed_dd(&[1, 2, 2], &[slab.clone(), slab]).unwrap();
        let wrapped = parallel_embed_trapezoids(&[1, 2, 2], &[(4, 2), (4, 2)]).unwrap();
        assert_eq!(manual, wrapped);
    }

    #[test]
    fn parallel_slabs_validate_their_inputs() {
        let slab = embed_dyck_directed(4, 2).unwrap();
        assert!(matches!(
            parallel_embed_directed_dd(&[1, 2, 2], std::slice::from_ref(&slab)),
            Err(EmbedError::InvalidParam(_))
        ));
        assert!(matches!(
            parallel_embed_directed_dd(&[2, 2], &[slab.clone(), slab.clone()]),
            Err(EmbedError::InvalidParam(_))
        ));
        let mismatched = embed_dyck_directed(6, 2).unwrap();
        assert!(matches!(
            parallel_embed_directed_dd(&[1, 2, 2], &[slab.clone(), mismatched]),
            Err(EmbedError::InvalidParam(_))
        ));
        let undirected = embed_undirected_dd(&[6, 15], 8, 2).unwrap();
        assert!(matches!(
            parallel_embed_directed_dd(&[1, 15, 6], &[undirected.clone(), undirected]),
            Err(EmbedError::InvalidParam(_))
        ));
    }
}
