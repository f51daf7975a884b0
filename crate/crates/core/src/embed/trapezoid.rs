//! Directed two-dimensional reachability instances for bounded-depth words.
//!
//! A word of even length `m` is read letter by letter; after `x` letters a
//! valid prefix sits at depth `y` inside the trapezoid
//! `0 ≤ y ≤ min(depth, x, m - x)`. Each letter contributes a fan of diagonal
//! steps (up for `(`, down for `)`), and rotating the diagonal picture by 45°
//! turns every step into a unit grid edge: up-steps become axis-0 edges and
//! down-steps become axis-1 edges of an `[m/2, m/2]` grid. A directed path
//! from corner to corner then exists exactly when the word is balanced and
//! stays within the depth bound.

use crate::grid::{EdgeAssignment, GridInstance};

use super::{
    rotate_to_grid, variable_edges, DiagPoint, EmbedError, Paren, PlaneBuilder, TrapezoidLayout,
};

fn require_even_positive_m(m: usize) -> Result<(), EmbedError> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(EmbedError::InvalidParam(format!(
            "word length must be even and at least 2, got {m}"
        )));
    }
    Ok(())
}

fn require_positive_depth(depth: usize) -> Result<(), EmbedError> {
    if depth < 1 {
        return Err(EmbedError::InvalidParam(
            "depth bound must be at least 1".into(),
        ));
    }
    Ok(())
}

/// Builds the directed `[m/2, m/2]` instance whose source→target
/// reachability under an `m`-bit input equals membership of the input word
/// in the depth-`depth` Dyck language.
///
/// Bit `i` of the input is letter `i + 1` of the word (`0` = `(`, `1` = `)`).
pub fn embed_dyck_directed(m: usize, depth: usize) -> Result<GridInstance, EmbedError> {
    require_even_positive_m(m)?;
    require_positive_depth(depth)?;
    let trapezoid = TrapezoidLayout::new(m, depth);
    let mut builder = PlaneBuilder::new();

    for x in 0..=m as i64 {
        for y in 0..=depth as i64 {
            let p = DiagPoint::new(x, y);
            if (x + y) % 2 == 0 && trapezoid.contains(p) {
                let cell = rotate_to_grid(p)?;
                builder.claim_cell(cell, format!("point ({x}, {y})"))?;
            }
        }
    }

    for pos in 1..=m {
        for (paren, expected) in [(Paren::Open, 0u8), (Paren::Close, 1u8)] {
            for (tail, head) in variable_edges(pos, paren, depth) {
                if trapezoid.contains(tail) && trapezoid.contains(head) {
                    builder.add_edge(
                        rotate_to_grid(tail)?,
                        rotate_to_grid(head)?,
                        EdgeAssignment::Literal {
                            bit: pos - 1,
                            expected,
                        },
                        format!("letter {pos}"),
                    )?;
                }
            }
        }
    }

    let n = m / 2;
    builder.finish(n, n, true, (0, 0), (n, n), m)
}

/// Builds a directed instance computing the OR of `t` depth-`depth` Dyck
/// tests on consecutive `m`-bit segments of a `t·m`-bit input.
///
/// Strip `j` occupies a mirrored copy of the trapezoid anchored at column
/// `j·(depth+1)`; a permanent bottom path feeds every strip's entry, and a
/// permanent top path collects every strip's exit, so the target is
/// reachable exactly when at least one segment is a valid word. The grid is
/// `[(depth+1)(t-1) + m/2, m/2 + 1]` with source `(0, 0)` and target at the
/// far corner.
pub fn or_parallel_embed(t: usize, m: usize, depth: usize) -> Result<GridInstance, EmbedError> {
    if t < 1 {
        return Err(EmbedError::InvalidParam(
            "strip count must be at least 1".into(),
        ));
    }
    require_even_positive_m(m)?;
    require_positive_depth(depth)?;

    let trapezoid = TrapezoidLayout::new(m, depth);
    let n = (depth + 1) * (t - 1) + m / 2;
    let k = m / 2 + 1;
    let mut builder = PlaneBuilder::new();

    // Mirrored placement of strip j: the diagonal point (x, y) sits at
    // column e_j + (x - y)/2 and row (x + y)/2, so up-steps are vertical
    // (axis 1) and down-steps horizontal (axis 0). The mirror keeps every
    // strip's interior off row 0, which the feed path needs for itself.
    let place = |j: usize, p: DiagPoint| -> Result<(i64, i64), EmbedError> {
        if (p.x + p.y) % 2 != 0 {
            return Err(EmbedError::Parity);
        }
        let e = (j * (depth + 1)) as i64;
        Ok((e + (p.x - p.y) / 2, (p.x + p.y) / 2))
    };

    for j in 0..t {
        for x in 0..=m as i64 {
            for y in 0..=depth as i64 {
                let p = DiagPoint::new(x, y);
                if (x + y) % 2 == 0 && trapezoid.contains(p) {
                    builder.claim_cell(place(j, p)?, format!("strip {j} point ({x}, {y})"))?;
                }
            }
        }
        for pos in 1..=m {
            for (paren, expected) in [(Paren::Open, 0u8), (Paren::Close, 1u8)] {
                for (tail, head) in variable_edges(pos, paren, depth) {
                    if trapezoid.contains(tail) && trapezoid.contains(head) {
                        builder.add_edge(
                            place(j, tail)?,
                            place(j, head)?,
                            EdgeAssignment::Literal {
                                bit: j * m + pos - 1,
                                expected,
                            },
                            format!("strip {j} letter {pos}"),
                        )?;
                    }
                }
            }
        }
        // Riser from the strip's exit up to the collection row.
        let exit = place(j, DiagPoint::new(m as i64, 0))?;
        builder.add_edge(
            exit,
            (exit.0, exit.1 + 1),
            EdgeAssignment::Always,
            format!("riser {j}"),
        )?;
    }

    // Feed path along row 0 to every strip entry.
    let last_entry = ((t - 1) * (depth + 1)) as i64;
    for c in 0..last_entry {
        builder.add_edge((c, 0), (c + 1, 0), EdgeAssignment::Always, "feed path")?;
    }
    for c in 1..=last_entry {
        if c.rem_euclid((depth + 1) as i64) != 0 {
            builder.claim_cell((c, 0), "feed path")?;
        }
    }

    // Collection path along the top row to the target.
    let first_exit = (m / 2) as i64;
    for c in first_exit..n as i64 {
        builder.add_edge(
            (c, k as i64),
            (c + 1, k as i64),
            EdgeAssignment::Always,
            "collection path",
        )?;
    }
    for c in first_exit..=n as i64 {
        builder.claim_cell((c, k as i64), "collection path")?;
    }

    builder.finish(n, k, true, (0, 0), (n, k), t * m)
}
