//! Undirected folded layout: a long depth-bounded word inside a short band.
//!
//! The directed trapezoid strip for an `m`-letter word is `m/2` cells tall,
//! so it cannot live in a grid whose second axis is small. This module folds
//! the strip: the word is cut into *arms* of `L` positions, laid out
//! alternately left-to-right (rows rise with position) and right-to-left
//! (rows fall), all inside rows `0..=k`. Consecutive arms are joined at the
//! cut positions by *connectors* — one corridor per depth the word can have
//! at the cut — wrapping around the top of the band after a forward arm and
//! under the bottom after a backward arm. A permanent lead-in joins the grid
//! source to the first arm and a permanent lead-out joins the last arm to
//! the target, so source–target connectivity under an input equals
//! membership of the word in the depth-bounded Dyck language.
//!
//! Only even depths can occur at a cut (cuts sit at even positions), so a
//! connector carries `⌊depth/2⌋ + 1` corridors. Deeper corridors turn
//! further out: the depth-`Y` corridor of a top connector turns exactly at
//! row `k`, which forces `k ≥ k_min` as recorded in [`FoldPlan`]. For odd
//! depth bounds the arms are lifted one row (odd-depth cells protrude one
//! diagonal below the even lattice, and the bottom corridors need that row).

use crate::grid::{EdgeAssignment, GridInstance};

use super::{variable_edges, DiagPoint, EmbedError, Paren, PlaneBuilder, TrapezoidLayout};

/// One arm-to-arm connector of a folded layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectorInfo {
    /// Word position at which the two arms hand over.
    pub position: usize,
    /// Whether the corridors wrap over the top of the band (else under the
    /// bottom).
    pub at_top: bool,
    /// Number of parallel corridors (one per even depth up to the bound).
    pub tracks: usize,
}

/// Shape summary of a folded layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldPlan {
    /// Word length.
    pub m: usize,
    /// Depth bound.
    pub depth: usize,
    /// Height of the band (second-axis side length of the grid).
    pub k: usize,
    /// Number of word positions per full arm.
    pub arm_len: usize,
    /// Number of connectors.
    pub fold_count: usize,
    /// The connectors, in word order.
    pub connectors: Vec<ConnectorInfo>,
    /// First-axis side length of the grid.
    pub width: usize,
    /// Number of grid diagonals each arm occupies (one per depth level).
    pub strip_diagonals: usize,
}

impl FoldPlan {
    /// Word positions packed per unit of grid width — the payoff of folding,
    /// compared to one position per two columns for the unfolded strip.
    pub fn density(&self) -> f64 {
        self.m as f64 / self.width as f64
    }
}

struct Frame {
    depth: usize,
    /// Largest even depth ≤ the bound.
    y_max: i64,
    /// Row of a forward arm's depth-0 cells (backward arms peak here).
    r_bot: i64,
    /// Row of a backward arm's depth-0 cells (forward arms peak here).
    r_top: i64,
    /// Positions per full arm.
    arm_len: i64,
    /// One extra row under the arms when the depth bound is odd.
    lift: i64,
}

impl Frame {
    fn new(m: usize, depth: usize, k: usize) -> Result<(Self, usize), EmbedError> {
        if m < 2 || !m.is_multiple_of(2) {
            return Err(EmbedError::InvalidParam(format!(
                "word length must be even and at least 2, got {m}"
            )));
        }
        if depth < 1 {
            return Err(EmbedError::InvalidParam(
                "depth bound must be at least 1".into(),
            ));
        }
        let y_max = 2 * (depth as i64 / 2);
        let lift = (depth % 2) as i64;
        let tracks = y_max / 2 + 1;
        let r_bot = y_max + lift;
        let k_min = r_bot + tracks + 1;
        if (k as i64) < k_min {
            return Err(EmbedError::Geometry(format!(
                "band height {k} is below the minimum {k_min} for depth bound {depth}"
            )));
        }
        let r_top = k as i64 - tracks;
        let frame = Frame {
            depth,
            y_max,
            r_bot,
            r_top,
            arm_len: 2 * (r_top - (y_max + lift)),
            lift,
        };
        Ok((frame, tracks as usize))
    }

    /// Anchor column of forward arm `j`.
    fn fwd_anchor(&self, j: usize) -> i64 {
        (j as i64) * (self.depth as i64 + 2)
    }

    /// Anchor column of backward arm `j`.
    fn bwd_anchor(&self, j: usize) -> i64 {
        self.arm_len / 2 - self.depth as i64 + self.fwd_anchor(j)
    }

    /// Grid cell of arm `j` for the diagonal point at absolute position `x`
    /// and depth `y`.
    fn place(&self, j: usize, x: i64, y: i64) -> (i64, i64) {
        let p = x - (j as i64) * self.arm_len;
        debug_assert!((p - y) % 2 == 0, "cell off the arm lattice");
        if j.is_multiple_of(2) {
            (self.fwd_anchor(j) + (p - y) / 2, self.r_bot + (p + y) / 2)
        } else {
            (self.bwd_anchor(j) - (p - y) / 2, self.r_top - (p + y) / 2)
        }
    }
}

fn build_folded(
    m: usize,
    depth: usize,
    k: usize,
    width: Option<usize>,
) -> Result<(GridInstance, FoldPlan), EmbedError> {
    let (frame, tracks) = Frame::new(m, depth, k)?;
    let arm_len = frame.arm_len as usize;
    let fold_count = m.div_ceil(arm_len) - 1;
    let trapezoid = TrapezoidLayout::new(m, depth);
    let mut builder = PlaneBuilder::new();

    // Arms: cells, then the edge fan of every position the arm owns.
    for j in 0..=fold_count {
        let first = j * arm_len;
        let last = (first + arm_len).min(m);
        for x in first..=last {
            for y in 0..=depth as i64 {
                let p = DiagPoint::new(x as i64, y);
                if (p.x + p.y) % 2 == 0 && trapezoid.contains(p) {
                    builder.claim_cell(
                        frame.place(j, p.x, p.y),
                        format!("arm {j} position {x} depth {y}"),
                    )?;
                }
            }
        }
        for pos in first + 1..=last {
            for (paren, expected) in [(Paren::Open, 0u8), (Paren::Close, 1u8)] {
                for (tail, head) in variable_edges(pos, paren, depth) {
                    if trapezoid.contains(tail) && trapezoid.contains(head) {
                        builder.add_edge(
                            frame.place(j, tail.x, tail.y),
                            frame.place(j, head.x, head.y),
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
    }

    // Connectors: one corridor per even depth, nested so that deeper
    // corridors turn further from the arms.
    let mut connectors = Vec::with_capacity(fold_count);
    for i in 1..=fold_count {
        let f = (i * arm_len) as i64;
        let at_top = i % 2 == 1;
        connectors.push(ConnectorInfo {
            position: i * arm_len,
            at_top,
            tracks,
        });
        let mut y = 0i64;
        while y <= frame.y_max {
            let a = frame.place(i - 1, f, y);
            let b = frame.place(i, f, y);
            let tag = format!("connector {i} track {y}");
            if at_top {
                let turn = frame.r_top + 1 + y / 2;
                debug_assert_eq!(turn, a.1 + 1);
                builder.claim_cell((a.0, turn), tag.clone())?;
                builder.add_edge(a, (a.0, turn), EdgeAssignment::Always, tag.clone())?;
                for c in a.0..b.0 {
                    if c > a.0 {
                        builder.claim_cell((c, turn), tag.clone())?;
                    }
                    builder.add_edge(
                        (c, turn),
                        (c + 1, turn),
                        EdgeAssignment::Always,
                        tag.clone(),
                    )?;
                }
                builder.claim_cell((b.0, turn), tag.clone())?;
                for r in b.1..turn {
                    if r > b.1 {
                        builder.claim_cell((b.0, r), tag.clone())?;
                    }
                    builder.add_edge(
                        (b.0, r),
                        (b.0, r + 1),
                        EdgeAssignment::Always,
                        tag.clone(),
                    )?;
                }
            } else {
                let turn = frame.r_bot - frame.y_max / 2 - (frame.y_max - y) / 2 - frame.lift;
                debug_assert!(turn >= 0);
                for r in turn..a.1 {
                    builder.claim_cell((a.0, r), tag.clone())?;
                    builder.add_edge(
                        (a.0, r),
                        (a.0, r + 1),
                        EdgeAssignment::Always,
                        tag.clone(),
                    )?;
                }
                for c in a.0..b.0 {
                    if c > a.0 {
                        builder.claim_cell((c, turn), tag.clone())?;
                    }
                    builder.add_edge(
                        (c, turn),
                        (c + 1, turn),
                        EdgeAssignment::Always,
                        tag.clone(),
                    )?;
                }
                for r in turn..b.1 {
                    builder.claim_cell((b.0, r), tag.clone())?;
                    builder.add_edge(
                        (b.0, r),
                        (b.0, r + 1),
                        EdgeAssignment::Always,
                        tag.clone(),
                    )?;
                }
            }
            y += 2;
        }
    }

    // Lead-in: up the first column to the first arm's start.
    let start = frame.place(0, 0, 0);
    debug_assert_eq!(start, (0, frame.r_bot));
    for r in 0..frame.r_bot {
        builder.claim_cell((0, r), "lead-in")?;
        builder.add_edge((0, r), (0, r + 1), EdgeAssignment::Always, "lead-in")?;
    }

    // Width: everything placed so far, plus one fresh column for the
    // lead-out's final climb (or the caller's width when embedding into a
    // larger grid).
    let content_cols = builder.max_col() + 1;
    let n = match width {
        Some(w) => {
            if content_cols > w as i64 {
                return Err(EmbedError::Geometry(format!(
                    "layout needs width {content_cols} but only {w} is available"
                )));
            }
            w as i64
        }
        None => content_cols,
    };

    // Lead-out: from the last arm's end to the far corner. After a forward
    // arm the end row is clear to the right; after a backward arm the path
    // drops to row 0 (clear beyond the last bottom connector) and runs right.
    let end = frame.place(fold_count, m as i64, 0);
    if fold_count.is_multiple_of(2) {
        for c in end.0..n {
            if c > end.0 {
                builder.claim_cell((c, end.1), "lead-out")?;
            }
            builder.add_edge(
                (c, end.1),
                (c + 1, end.1),
                EdgeAssignment::Always,
                "lead-out",
            )?;
        }
        builder.claim_cell((n, end.1), "lead-out")?;
        for r in end.1..k as i64 {
            if r > end.1 {
                builder.claim_cell((n, r), "lead-out")?;
            }
            builder.add_edge((n, r), (n, r + 1), EdgeAssignment::Always, "lead-out")?;
        }
        builder.claim_cell((n, k as i64), "lead-out")?;
    } else {
        for r in 0..end.1 {
            builder.claim_cell((end.0, r), "lead-out")?;
            builder.add_edge(
                (end.0, r),
                (end.0, r + 1),
                EdgeAssignment::Always,
                "lead-out",
            )?;
        }
        for c in end.0..n {
            if c > end.0 {
                builder.claim_cell((c, 0), "lead-out")?;
            }
            builder.add_edge((c, 0), (c + 1, 0), EdgeAssignment::Always, "lead-out")?;
        }
        builder.claim_cell((n, 0), "lead-out")?;
        for r in 0..k as i64 {
            if r > 0 {
                builder.claim_cell((n, r), "lead-out")?;
            }
            builder.add_edge((n, r), (n, r + 1), EdgeAssignment::Always, "lead-out")?;
        }
        builder.claim_cell((n, k as i64), "lead-out")?;
    }

    let n = n as usize;
    let plan = FoldPlan {
        m,
        depth,
        k,
        arm_len,
        fold_count,
        connectors,
        width: n,
        strip_diagonals: depth + 1,
    };
    let instance = builder.finish(n, k, false, (0, 0), (n, k), m)?;
    Ok((instance, plan))
}

/// Computes the shape of the folded layout for an `m`-letter word with depth
/// bound `depth` in a band of height `k`, without the instance itself.
pub fn fold_plan(m: usize, depth: usize, k: usize) -> Result<FoldPlan, EmbedError> {
    build_folded(m, depth, k, None).map(|(_, plan)| plan)
}

/// Builds the undirected folded instance for an `m`-letter word with depth
/// bound `depth` in a band of height `k`.
///
/// The grid is `[width, k]` with the width chosen by the layout (see
/// [`fold_plan`]); the source is `(0, 0)` and the target `(width, k)`. Bit
/// `i` of the input is letter `i + 1` of the word (`0` = `(`, `1` = `)`).
pub fn embed_dyck_undirected_folded(
    m: usize,
    depth: usize,
    k: usize,
) -> Result<GridInstance, EmbedError> {
    build_folded(m, depth, k, None).map(|(instance, _)| instance)
}

/// Same layout as [`embed_dyck_undirected_folded`] but on a caller-fixed
/// width, for embedding the band into a larger grid.
pub(crate) fn embed_folded_with_width(
    m: usize,
    depth: usize,
    k: usize,
    width: usize,
) -> Result<GridInstance, EmbedError> {
    build_folded(m, depth, k, Some(width)).map(|(instance, _)| instance)
}
