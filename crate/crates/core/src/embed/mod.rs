//! Constructions that lay Dyck membership out on grid graphs.
//!
//! The submodules build progressively richer reachability instances:
//!
//! * [`trapezoid`] — a directed two-dimensional strip whose paths track the
//!   depth profile of a word, and the parallel OR combination of several
//!   strips.
//! * [`fold`] — an undirected layout that folds a long strip back and forth
//!   inside a band of fixed height, handing paths between arms through
//!   per-depth corridors.
//! * [`dd`] — dimension adapters: folding the last two axes of a grid into
//!   one, embedding the folded band into higher-dimensional grids that are
//!   long in only one axis, and running independent two-dimensional
//!   instances in parallel inside a `d`-dimensional grid.
//!
//! Words are drawn in *diagonal coordinates*: position `x` after reading `x`
//! letters, at height `y` equal to the prefix imbalance. Constructions fix an
//! affine map from diagonal coordinates to grid cells and assign each letter
//! a fan of candidate edges, clipped to the region a valid prefix can reach.

use std::collections::HashMap;

use thiserror::Error;

use crate::grid::{EdgeAssignment, GridError, GridInstance, GridSpec};

mod dd;
mod fold;
mod trapezoid;

pub use dd::{
    embed_undirected_dd, fold_map, fold_map_inv, folded_dims, parallel_embed_directed_dd,
    parallel_embed_trapezoids,
};
pub use fold::{embed_dyck_undirected_folded, fold_plan, ConnectorInfo, FoldPlan};
pub use trapezoid::{embed_dyck_directed, or_parallel_embed};

/// Error produced by the embedding constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    /// A diagonal point with odd coordinate sum has no grid image.
    #[error("diagonal point has odd coordinate sum and no grid image")]
    Parity,
    /// The requested layout cannot be realised.
    #[error("layout is infeasible: {0}")]
    Geometry(String),
    /// A parameter is outside the construction's domain.
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
}

impl From<GridError> for EmbedError {
    fn from(e: GridError) -> Self {
        EmbedError::Geometry(e.to_string())
    }
}

/// A point in diagonal coordinates: `x` letters read, prefix imbalance `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiagPoint {
    /// Number of letters read.
    pub x: i64,
    /// Prefix imbalance after reading them.
    pub y: i64,
}

impl DiagPoint {
    /// Convenience constructor.
    pub fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

/// A parenthesis letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Paren {
    /// `(` — bit `0`; raises the imbalance.
    Open,
    /// `)` — bit `1`; lowers the imbalance.
    Close,
}

/// The candidate edges for reading one letter at 1-based position `pos`,
/// before clipping to any particular region.
///
/// An opening letter moves from `(pos-1, l)` to `(pos, l+1)` for every level
/// `l` in `0..depth`; a closing letter moves from `(pos-1, l)` to
/// `(pos, l-1)` for every `l` in `1..=depth`. Only levels with `pos-1+l`
/// even are realisable (the imbalance after `x` letters has the parity of
/// `x`), so the fan keeps exactly those.
pub fn variable_edges(pos: usize, paren: Paren, depth: usize) -> Vec<(DiagPoint, DiagPoint)> {
    assert!(pos >= 1, "positions are 1-based");
    let x = pos as i64;
    let mut edges = Vec::new();
    match paren {
        Paren::Open => {
            for l in 0..depth as i64 {
                if (x - 1 + l) % 2 == 0 {
                    edges.push((DiagPoint::new(x - 1, l), DiagPoint::new(x, l + 1)));
                }
            }
        }
        Paren::Close => {
            for l in 1..=depth as i64 {
                if (x - 1 + l) % 2 == 0 {
                    edges.push((DiagPoint::new(x - 1, l), DiagPoint::new(x, l - 1)));
                }
            }
        }
    }
    edges
}

/// Rotates a diagonal point to grid coordinates `((x+y)/2, (x-y)/2)`.
///
/// Fails with [`EmbedError::Parity`] when `x + y` is odd (such points fall
/// between grid cells).
pub fn rotate_to_grid(p: DiagPoint) -> Result<(i64, i64), EmbedError> {
    if (p.x + p.y).rem_euclid(2) != 0 {
        return Err(EmbedError::Parity);
    }
    Ok(((p.x + p.y) / 2, (p.x - p.y) / 2))
}

/// The region of diagonal points reachable by a prefix of a word of length
/// `m` that stays within depth `depth`: `0 ≤ y ≤ min(depth, x, m - x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrapezoidLayout {
    /// Word length.
    pub m: usize,
    /// Depth bound.
    pub depth: usize,
}

impl TrapezoidLayout {
    /// Creates the layout for words of length `m` and depth bound `depth`.
    pub fn new(m: usize, depth: usize) -> Self {
        Self { m, depth }
    }

    /// Whether the point lies in the trapezoid.
    pub fn contains(&self, p: DiagPoint) -> bool {
        p.y >= 0 && p.y <= self.depth as i64 && p.y <= p.x && p.y <= self.m as i64 - p.x
    }
}

/// Incrementally lays out a two-dimensional instance, detecting collisions.
///
/// Construction code claims each cell for exactly one structural element and
/// adds each edge exactly once; a second claim or a second edge on the same
/// slot signals a geometry bug and surfaces as [`EmbedError::Geometry`]
/// rather than silently producing an unsound instance.
pub(crate) struct PlaneBuilder {
    cells: HashMap<(i64, i64), String>,
    edges: HashMap<((i64, i64), usize), (EdgeAssignment, String)>,
    max_col: i64,
    max_row: i64,
}

impl PlaneBuilder {
    pub(crate) fn new() -> Self {
        Self {
            cells: HashMap::new(),
            edges: HashMap::new(),
            max_col: 0,
            max_row: 0,
        }
    }

    /// Claims a cell for the named structural element.
    pub(crate) fn claim_cell(
        &mut self,
        cell: (i64, i64),
        tag: impl Into<String>,
    ) -> Result<(), EmbedError> {
        let tag = tag.into();
        if cell.0 < 0 || cell.1 < 0 {
            return Err(EmbedError::Geometry(format!(
                "{tag} claims cell {cell:?} outside the first quadrant"
            )));
        }
        self.max_col = self.max_col.max(cell.0);
        self.max_row = self.max_row.max(cell.1);
        if let Some(existing) = self.cells.insert(cell, tag) {
            let tag = &self.cells[&cell];
            return Err(EmbedError::Geometry(format!(
                "cell {cell:?} claimed by both {existing} and {tag}"
            )));
        }
        Ok(())
    }

    /// Adds one edge between adjacent cells, normalising the orientation.
    pub(crate) fn add_edge(
        &mut self,
        a: (i64, i64),
        b: (i64, i64),
        assignment: EdgeAssignment,
        tag: impl Into<String>,
    ) -> Result<(), EmbedError> {
        let tag = tag.into();
        let (tail, head) = if a <= b { (a, b) } else { (b, a) };
        let axis = match (head.0 - tail.0, head.1 - tail.1) {
            (1, 0) => 0,
            (0, 1) => 1,
            _ => {
                return Err(EmbedError::Geometry(format!(
                    "{tag} joins non-adjacent cells {a:?} and {b:?}"
                )))
            }
        };
        if tail.0 < 0 || tail.1 < 0 {
            return Err(EmbedError::Geometry(format!(
                "{tag} reaches cell {tail:?} outside the first quadrant"
            )));
        }
        self.max_col = self.max_col.max(head.0);
        self.max_row = self.max_row.max(head.1);
        if let Some((_, existing)) = self.edges.insert((tail, axis), (assignment, tag)) {
            let (_, tag) = &self.edges[&(tail, axis)];
            return Err(EmbedError::Geometry(format!(
                "edge at {tail:?} along axis {axis} assigned by both {existing} and {tag}"
            )));
        }
        Ok(())
    }

    /// Largest column touched by any cell or edge.
    pub(crate) fn max_col(&self) -> i64 {
        self.max_col
    }

    /// Materialises the instance on the grid `[width, height]`.
    pub(crate) fn finish(
        self,
        width: usize,
        height: usize,
        directed: bool,
        source: (usize, usize),
        target: (usize, usize),
        arity: usize,
    ) -> Result<GridInstance, EmbedError> {
        if self.max_col > width as i64 || self.max_row > height as i64 {
            return Err(EmbedError::Geometry(format!(
                "layout reaches ({}, {}) but the grid is [{width}, {height}]",
                self.max_col, self.max_row
            )));
        }
        let spec = GridSpec::new(vec![width, height], directed)?;
        let mut instance = GridInstance::all_never(
            spec,
            vec![source.0, source.1],
            vec![target.0, target.1],
            arity,
        )?;
        for (&(tail, axis), &(assignment, _)) in &self.edges {
            instance.set_assignment(&[tail.0 as usize, tail.1 as usize], axis, assignment);
        }
        Ok(instance)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letter_fans_respect_parity() {
        assert_eq!(
            variable_edges(1, Paren::Open, 2),
            vec![(DiagPoint::new(0, 0), DiagPoint::new(1, 1))]
        );
        assert_eq!(
            variable_edges(2, Paren::Open, 2),
            vec![(DiagPoint::new(1, 1), DiagPoint::new(2, 2))]
        );
        assert_eq!(
            variable_edges(2, Paren::Close, 2),
            vec![(DiagPoint::new(1, 1), DiagPoint::new(2, 0))]
        );
        assert_eq!(
            variable_edges(3, Paren::Close, 4),
            vec![
                (DiagPoint::new(2, 2), DiagPoint::new(3, 1)),
                (DiagPoint::new(2, 4), DiagPoint::new(3, 3)),
            ]
        );
        // The fan is not clipped to reachable points: position 1 keeps its
        // even-level close edge even though depth 2 is unreachable there.
        assert_eq!(
            variable_edges(1, Paren::Close, 3),
            vec![(DiagPoint::new(0, 2), DiagPoint::new(1, 1))]
        );
    }

    #[test]
    fn rotation_halves_coordinate_sums() {
        assert_eq!(rotate_to_grid(DiagPoint::new(0, 0)), Ok((0, 0)));
        assert_eq!(rotate_to_grid(DiagPoint::new(2, 0)), Ok((1, 1)));
        assert_eq!(rotate_to_grid(DiagPoint::new(1, 1)), Ok((1, 0)));
        assert_eq!(rotate_to_grid(DiagPoint::new(4, 2)), Ok((3, 1)));
        assert_eq!(
            rotate_to_grid(DiagPoint::new(1, 0)),
            Err(EmbedError::Parity)
        );
    }

    #[test]
    fn trapezoid_membership() {
        let t = TrapezoidLayout::new(6, 2);
        assert!(t.contains(DiagPoint::new(0, 0)));
        assert!(t.contains(DiagPoint::new(3, 2)));
        assert!(t.contains(DiagPoint::new(6, 0)));
        assert!(!t.contains(DiagPoint::new(3, 3)), "deeper than the bound");
        assert!(!t.contains(DiagPoint::new(1, 2)), "unreachable this early");
        assert!(
            !t.contains(DiagPoint::new(5, 2)),
            "cannot return to zero in time"
        );
        assert!(!t.contains(DiagPoint::new(2, -1)), "below the floor");
    }

    #[test]
    fn builder_rejects_collisions() {
        let mut b = PlaneBuilder::new();
        b.claim_cell((0, 0), "first").unwrap();
        assert!(matches!(
            b.claim_cell((0, 0), "second"),
            Err(EmbedError::Geometry(_))
        ));
        b.add_edge((1, 0), (1, 1), EdgeAssignment::Always, "up")
            .unwrap();
        assert!(matches!(
            b.add_edge((1, 1), (1, 0), EdgeAssignment::Never, "down"),
            Err(EmbedError::Geometry(_))
        ));
        assert!(matches!(
            b.add_edge((0, 0), (1, 1), EdgeAssignment::Always, "diagonal"),
            Err(EmbedError::Geometry(_))
        ));
    }
}
