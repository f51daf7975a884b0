//! Finite `d`-dimensional grid graphs whose edges are present always, never,
//! or according to one bit of an input word.
//!
//! A grid with side lengths `n₁ … n_d` has vertices at all integer points
//! `(c₁, …, c_d)` with `0 ≤ cᵢ ≤ nᵢ`, and one edge from each vertex to its
//! successor along each axis (directed towards increasing coordinate, or
//! undirected). Vertices are ranked row-major (first coordinate most
//! significant); every edge strictly increases the rank of its endpoint, so
//! rank order is a topological order of the directed grid. Edges are ranked
//! axis-major, then by lexicographic tail coordinates.
//!
//! A [`GridInstance`] attaches an [`EdgeAssignment`] to every edge together
//! with a source, a target, and the arity of the input word; instantiating it
//! on a concrete word keeps the edges whose assignment is satisfied, and
//! evaluation asks whether the target is reachable from the source.

use bitvec::prelude::*;
use thiserror::Error;

/// Error produced by grid constructors, accessors, and the text parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    /// Fewer than two axes were supplied.
    #[error("grids need at least 2 axes, got {got}")]
    TooFewAxes {
        /// Number of axes supplied.
        got: usize,
    },
    /// An axis of length zero was supplied.
    #[error("axis {axis} has length 0; every side must be at least 1")]
    EmptyAxis {
        /// Index of the offending axis.
        axis: usize,
    },
    /// The vertex or edge space does not fit in `usize`.
    #[error("grid is too large to index")]
    TooLarge,
    /// A vertex coordinate vector is outside the grid.
    #[error("vertex {coords:?} is outside the grid")]
    VertexOutOfRange {
        /// The offending coordinates.
        coords: Vec<usize>,
    },
    /// DOT export was requested for a grid that is not two-dimensional.
    #[error("dot export needs a 2-axis grid, got {got} axes")]
    DotDimension {
        /// Number of axes of the grid.
        got: usize,
    },
    /// The text form is malformed.
    #[error("line {line}: {message}")]
    Parse {
        /// 1-based line number.
        line: usize,
        /// What went wrong.
        message: String,
    },
}

/// Shape of a grid: side lengths per axis, and whether edges are directed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    dims: Vec<usize>,
    directed: bool,
    vertex_strides: Vec<usize>,
    vertex_count: usize,
    /// `axis_offsets[a]` is the rank of the first axis-`a` edge;
    /// `axis_offsets[d]` is the total edge count.
    axis_offsets: Vec<usize>,
    /// `tail_strides[a][j]` ranks axis-`a` edge tails lexicographically.
    tail_strides: Vec<Vec<usize>>,
}

impl GridSpec {
    /// Creates a grid shape from side lengths (`d ≥ 2`, every side `≥ 1`).
    pub fn new(dims: Vec<usize>, directed: bool) -> Result<Self, GridError> {
        if dims.len() < 2 {
            return Err(GridError::TooFewAxes { got: dims.len() });
        }
        if let Some(axis) = dims.iter().position(|&n| n == 0) {
            return Err(GridError::EmptyAxis { axis });
        }
        let d = dims.len();
        let sides = dims
            .iter()
            .map(|&n| n.checked_add(1).ok_or(GridError::TooLarge))
            .collect::<Result<Vec<usize>, _>>()?;
        let mut vertex_strides = vec![1usize; d];
        for j in (0..d - 1).rev() {
            vertex_strides[j] = vertex_strides[j + 1]
                .checked_mul(sides[j + 1])
                .ok_or(GridError::TooLarge)?;
        }
        let vertex_count = vertex_strides[0]
            .checked_mul(sides[0])
            .ok_or(GridError::TooLarge)?;
        let mut tail_strides = Vec::with_capacity(d);
        let mut axis_offsets: Vec<usize> = Vec::with_capacity(d + 1);
        axis_offsets.push(0);
        for a in 0..d {
            let radix = |i: usize| if i == a { dims[i] } else { sides[i] };
            let mut strides = vec![1usize; d];
            for j in (0..d - 1).rev() {
                strides[j] = strides[j + 1]
                    .checked_mul(radix(j + 1))
                    .ok_or(GridError::TooLarge)?;
            }
            let block = strides[0]
                .checked_mul(radix(0))
                .ok_or(GridError::TooLarge)?;
            let offset = axis_offsets[a]
                .checked_add(block)
                .ok_or(GridError::TooLarge)?;
            axis_offsets.push(offset);
            tail_strides.push(strides);
        }
        Ok(Self {
            dims,
            directed,
            vertex_strides,
            vertex_count,
            axis_offsets,
            tail_strides,
        })
    }

    /// Number of axes.
    pub fn dimension(&self) -> usize {
        self.dims.len()
    }

    /// Side lengths per axis.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Whether edges are directed (towards increasing coordinates).
    pub fn directed(&self) -> bool {
        self.directed
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        *self.axis_offsets.last().expect("offsets are nonempty")
    }

    /// Whether `coords` names a vertex of the grid.
    pub fn contains_vertex(&self, coords: &[usize]) -> bool {
        coords.len() == self.dims.len() && coords.iter().zip(&self.dims).all(|(&c, &n)| c <= n)
    }

    /// Row-major rank of a vertex.
    ///
    /// # Panics
    ///
    /// Panics if `coords` is not a vertex of the grid.
    pub fn vertex_rank(&self, coords: &[usize]) -> usize {
        assert!(
            self.contains_vertex(coords),
            "vertex {coords:?} is outside the grid"
        );
        coords
            .iter()
            .zip(&self.vertex_strides)
            .map(|(&c, &s)| c * s)
            .sum()
    }

    /// Coordinates of the vertex with the given rank.
    ///
    /// # Panics
    ///
    /// Panics if `rank` is out of range.
    pub fn vertex_coords(&self, rank: usize) -> Vec<usize> {
        assert!(
            rank < self.vertex_count,
            "vertex rank {rank} is out of range"
        );
        self.vertex_strides
            .iter()
            .zip(&self.dims)
            .map(|(&stride, &n)| (rank / stride) % (n + 1))
            .collect()
    }

    /// Whether `(tail, axis)` names an edge: `tail` is a vertex whose
    /// coordinate along `axis` can still be incremented.
    pub fn contains_edge(&self, tail: &[usize], axis: usize) -> bool {
        axis < self.dims.len() && self.contains_vertex(tail) && tail[axis] < self.dims[axis]
    }

    /// Rank of an edge: axis-major, then lexicographic in the tail.
    ///
    /// # Panics
    ///
    /// Panics if `(tail, axis)` is not an edge of the grid.
    pub fn edge_rank(&self, tail: &[usize], axis: usize) -> usize {
        assert!(
            self.contains_edge(tail, axis),
            "edge at {tail:?} along axis {axis} is outside the grid"
        );
        self.axis_offsets[axis]
            + tail
                .iter()
                .zip(&self.tail_strides[axis])
                .map(|(&c, &s)| c * s)
                .sum::<usize>()
    }

    /// The edge with the given rank.
    ///
    /// # Panics
    ///
    /// Panics if `rank` is out of range.
    pub fn edge_from_rank(&self, rank: usize) -> EdgeId {
        assert!(rank < self.edge_count(), "edge rank {rank} is out of range");
        let axis = (0..self.dims.len())
            .find(|&a| rank < self.axis_offsets[a + 1])
            .expect("rank is below the total edge count");
        let mut remainder = rank - self.axis_offsets[axis];
        let tail = self.tail_strides[axis]
            .iter()
            .map(|&stride| {
                let c = remainder / stride;
                remainder %= stride;
                c
            })
            .collect();
        EdgeId { tail, axis }
    }

    /// Iterates over all edges in rank order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edge_count()).map(|rank| self.edge_from_rank(rank))
    }
}

/// An edge, identified by its lower endpoint and the axis it advances along.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeId {
    /// The lower endpoint.
    pub tail: Vec<usize>,
    /// The axis along which the edge advances.
    pub axis: usize,
}

impl EdgeId {
    /// The upper endpoint: the tail advanced one step along the axis.
    pub fn head(&self) -> Vec<usize> {
        let mut head = self.tail.clone();
        head[self.axis] += 1;
        head
    }
}

/// How one edge of an instance depends on the input word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeAssignment {
    /// The edge is always present.
    Always,
    /// The edge is never present.
    Never,
    /// The edge is present exactly when input bit `bit` equals `expected`.
    Literal {
        /// Index of the input bit consulted.
        bit: usize,
        /// Required value of that bit (`0` or `1`).
        expected: u8,
    },
}

/// A grid with an edge assignment, a source, a target, and an input arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridInstance {
    spec: GridSpec,
    assignments: Vec<EdgeAssignment>,
    source: Vec<usize>,
    target: Vec<usize>,
    arity: usize,
}

impl GridInstance {
    /// Creates an instance with every edge assigned [`EdgeAssignment::Never`].
    pub fn all_never(
        spec: GridSpec,
        source: Vec<usize>,
        target: Vec<usize>,
        arity: usize,
    ) -> Result<Self, GridError> {
        if !spec.contains_vertex(&source) {
            return Err(GridError::VertexOutOfRange { coords: source });
        }
        if !spec.contains_vertex(&target) {
            return Err(GridError::VertexOutOfRange { coords: target });
        }
        let assignments = vec![EdgeAssignment::Never; spec.edge_count()];
        Ok(Self {
            spec,
            assignments,
            source,
            target,
            arity,
        })
    }

    /// The grid shape.
    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    /// The source vertex.
    pub fn source(&self) -> &[usize] {
        &self.source
    }

    /// The target vertex.
    pub fn target(&self) -> &[usize] {
        &self.target
    }

    /// Length of input words the instance reads.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Assigns an edge.
    ///
    /// # Panics
    ///
    /// Panics if `(tail, axis)` is not an edge, or if a literal reads a bit
    /// at or beyond the arity.
    pub fn set_assignment(&mut self, tail: &[usize], axis: usize, assignment: EdgeAssignment) {
        if let EdgeAssignment::Literal { bit, expected } = assignment {
            assert!(
                bit < self.arity,
                "literal reads bit {bit} but the arity is {}",
                self.arity
            );
            assert!(
                expected <= 1,
                "expected bit values are 0 or 1, got {expected}"
            );
        }
        let rank = self.spec.edge_rank(tail, axis);
        self.assignments[rank] = assignment;
    }

    /// The assignment of an edge.
    ///
    /// # Panics
    ///
    /// Panics if `(tail, axis)` is not an edge of the grid.
    pub fn assignment(&self, tail: &[usize], axis: usize) -> EdgeAssignment {
        self.assignments[self.spec.edge_rank(tail, axis)]
    }

    /// Iterates over `(edge, assignment)` pairs in edge-rank order.
    pub fn assignments(&self) -> impl Iterator<Item = (EdgeId, EdgeAssignment)> + '_ {
        self.spec.edges().zip(self.assignments.iter().copied())
    }

    /// Resolves every edge against an input word.
    ///
    /// # Panics
    ///
    /// Panics if `input` does not have exactly `arity` entries, or contains
    /// values other than `0` and `1`.
    pub fn instantiate(&self, input: &[u8]) -> ConcreteGrid {
        assert_eq!(
            input.len(),
            self.arity,
            "instance reads {} input bits, got {}",
            self.arity,
            input.len()
        );
        for (index, &bit) in input.iter().enumerate() {
            assert!(
                bit <= 1,
                "input bits must be 0 or 1; found {bit} at index {index}"
            );
        }
        let presence = self
            .assignments
            .iter()
            .map(|assignment| match *assignment {
                EdgeAssignment::Always => true,
                EdgeAssignment::Never => false,
                EdgeAssignment::Literal { bit, expected } => input[bit] == expected,
            })
            .collect();
        ConcreteGrid {
            spec: self.spec.clone(),
            presence,
        }
    }

    /// Whether the target is reachable from the source on the given input.
    pub fn eval(&self, input: &[u8]) -> bool {
        self.instantiate(input)
            .reachable(&self.source, &self.target)
    }
}

/// A grid whose edges have been resolved to present or absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcreteGrid {
    spec: GridSpec,
    presence: BitVec,
}

impl ConcreteGrid {
    /// The grid shape.
    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    /// Whether the edge `(tail, axis)` is present.
    ///
    /// # Panics
    ///
    /// Panics if `(tail, axis)` is not an edge of the grid.
    pub fn present(&self, tail: &[usize], axis: usize) -> bool {
        self.presence[self.spec.edge_rank(tail, axis)]
    }

    /// Whether `target` is reachable from `source` through present edges,
    /// respecting direction on directed grids.
    ///
    /// # Panics
    ///
    /// Panics if either endpoint is outside the grid.
    pub fn reachable(&self, source: &[usize], target: &[usize]) -> bool {
        let source_rank = self.spec.vertex_rank(source);
        let target_rank = self.spec.vertex_rank(target);
        if self.spec.directed() {
            self.reachable_directed(source_rank, target_rank)
        } else {
            self.reachable_undirected(source_rank, target_rank)
        }
    }

    /// Dynamic program over vertex ranks. Every edge goes from a lower to a
    /// higher rank, so ascending rank order is a topological order and a
    /// single sweep suffices.
    fn reachable_directed(&self, source_rank: usize, target_rank: usize) -> bool {
        if source_rank == target_rank {
            return true;
        }
        if source_rank > target_rank {
            return false;
        }
        let d = self.spec.dimension();
        let mut reached = bitvec![0; target_rank + 1];
        reached.set(source_rank, true);
        let mut coords = vec![0usize; d];
        for rank in source_rank..target_rank {
            if !reached[rank] {
                continue;
            }
            for (j, c) in coords.iter_mut().enumerate() {
                *c = (rank / self.spec.vertex_strides[j]) % (self.spec.dims[j] + 1);
            }
            for axis in 0..d {
                if coords[axis] >= self.spec.dims[axis] {
                    continue;
                }
                let edge = self.spec.axis_offsets[axis]
                    + coords
                        .iter()
                        .zip(&self.spec.tail_strides[axis])
                        .map(|(&c, &s)| c * s)
                        .sum::<usize>();
                if !self.presence[edge] {
                    continue;
                }
                let head = rank + self.spec.vertex_strides[axis];
                if head == target_rank {
                    return true;
                }
                if head < target_rank {
                    reached.set(head, true);
                }
            }
        }
        false
    }

    /// Breadth-first search ignoring edge direction.
    fn reachable_undirected(&self, source_rank: usize, target_rank: usize) -> bool {
        if source_rank == target_rank {
            return true;
        }
        let d = self.spec.dimension();
        let mut visited = bitvec![0; self.spec.vertex_count()];
        visited.set(source_rank, true);
        let mut queue = std::collections::VecDeque::from([source_rank]);
        let mut coords = vec![0usize; d];
        while let Some(rank) = queue.pop_front() {
            for (j, c) in coords.iter_mut().enumerate() {
                *c = (rank / self.spec.vertex_strides[j]) % (self.spec.dims[j] + 1);
            }
            for axis in 0..d {
                let tail_stride: usize = coords
                    .iter()
                    .zip(&self.spec.tail_strides[axis])
                    .map(|(&c, &s)| c * s)
                    .sum();
                // Forward: this vertex is the tail.
                if coords[axis] < self.spec.dims[axis] {
                    let edge = self.spec.axis_offsets[axis] + tail_stride;
                    let head = rank + self.spec.vertex_strides[axis];
                    if self.presence[edge] && !visited[head] {
                        if head == target_rank {
                            return true;
                        }
                        visited.set(head, true);
                        queue.push_back(head);
                    }
                }
                // Backward: this vertex is the head of its predecessor's edge.
                if coords[axis] > 0 {
                    let edge = self.spec.axis_offsets[axis] + tail_stride
                        - self.spec.tail_strides[axis][axis];
                    let neighbour = rank - self.spec.vertex_strides[axis];
                    if self.presence[edge] && !visited[neighbour] {
                        if neighbour == target_rank {
                            return true;
                        }
                        visited.set(neighbour, true);
                        queue.push_back(neighbour);
                    }
                }
            }
        }
        false
    }
}

impl GridInstance {
    /// Serialises the instance in its canonical text form.
    ///
    /// The form is one header line (`GRID d directed|undirected n₁ … n_d
    /// arity A`), a `SRC` and a `DST` line, and one `E axis c₁ … c_d
    /// ALWAYS|NEVER|LIT bit expected` line per edge in edge-rank order, each
    /// line terminated by a newline. Parsing accepts exactly this form, so
    /// serialisation round-trips byte for byte.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "GRID {} {}",
            self.spec.dimension(),
            if self.spec.directed() {
                "directed"
            } else {
                "undirected"
            }
        ));
        for &n in self.spec.dims() {
            out.push_str(&format!(" {n}"));
        }
        out.push_str(&format!(" arity {}\n", self.arity));
        out.push_str("SRC");
        for &c in &self.source {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
        out.push_str("DST");
        for &c in &self.target {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
        for (edge, assignment) in self.assignments() {
            out.push_str(&format!("E {}", edge.axis));
            for &c in &edge.tail {
                out.push_str(&format!(" {c}"));
            }
            match assignment {
                EdgeAssignment::Always => out.push_str(" ALWAYS"),
                EdgeAssignment::Never => out.push_str(" NEVER"),
                EdgeAssignment::Literal { bit, expected } => {
                    out.push_str(&format!(" LIT {bit} {expected}"));
                }
            }
            out.push('\n');
        }
        out
    }

    /// Parses the canonical text form produced by [`GridInstance::to_text`].
    ///
    /// The parser is strict: lines must appear in order, edges must appear in
    /// edge-rank order, and spacing must be canonical, so that parsing and
    /// re-serialising reproduces the input byte for byte.
    pub fn from_text(text: &str) -> Result<Self, GridError> {
        let parse_error = |line: usize, message: &str| GridError::Parse {
            line,
            message: message.to_string(),
        };
        let parse_usize = |line: usize, token: &str, what: &str| {
            token.parse::<usize>().map_err(|_| GridError::Parse {
                line,
                message: format!("invalid {what}: {token:?}"),
            })
        };
        let mut lines = text.split('\n').enumerate();

        let (_, header) = lines
            .next()
            .ok_or_else(|| parse_error(1, "missing header"))?;
        let tokens: Vec<&str> = header.split(' ').collect();
        if tokens.len() < 5 || tokens[0] != "GRID" {
            return Err(parse_error(
                1,
                "header must be `GRID d directed|undirected n… arity A`",
            ));
        }
        let d = parse_usize(1, tokens[1], "axis count")?;
        let directed = match tokens[2] {
            "directed" => true,
            "undirected" => false,
            other => {
                return Err(GridError::Parse {
                    line: 1,
                    message: format!("expected `directed` or `undirected`, got {other:?}"),
                })
            }
        };
        if tokens.len() != d + 5 {
            return Err(parse_error(1, "header has the wrong number of tokens"));
        }
        let mut dims = Vec::with_capacity(d);
        for token in &tokens[3..3 + d] {
            dims.push(parse_usize(1, token, "side length")?);
        }
        if tokens[3 + d] != "arity" {
            return Err(parse_error(
                1,
                "expected `arity` before the final header token",
            ));
        }
        let arity = parse_usize(1, tokens[4 + d], "arity")?;
        let spec = GridSpec::new(dims, directed).map_err(|e| GridError::Parse {
            line: 1,
            message: e.to_string(),
        })?;

        let endpoint =
            |keyword: &str, entry: Option<(usize, &str)>| -> Result<Vec<usize>, GridError> {
                let (index, line) = entry.ok_or_else(|| GridError::Parse {
                    line: if keyword == "SRC" { 2 } else { 3 },
                    message: "unexpected end of input".to_string(),
                })?;
                let number = index + 1;
                let tokens: Vec<&str> = line.split(' ').collect();
                if tokens.len() != d + 1 || tokens[0] != keyword {
                    return Err(GridError::Parse {
                        line: number,
                        message: format!("expected `{keyword}` followed by {d} coordinates"),
                    });
                }
                let mut coords = Vec::with_capacity(d);
                for token in &tokens[1..] {
                    coords.push(parse_usize(number, token, "coordinate")?);
                }
                if !spec.contains_vertex(&coords) {
                    return Err(GridError::Parse {
                        line: number,
                        message: format!("vertex {coords:?} is outside the grid"),
                    });
                }
                Ok(coords)
            };
        let source = endpoint("SRC", lines.next())?;
        let target = endpoint("DST", lines.next())?;

        let mut instance =
            GridInstance::all_never(spec, source, target, arity).expect("endpoints were validated");
        for rank in 0..instance.spec.edge_count() {
            let (index, line) = lines
                .next()
                .ok_or_else(|| parse_error(rank + 4, "missing edge line"))?;
            let number = index + 1;
            let tokens: Vec<&str> = line.split(' ').collect();
            if tokens.len() < d + 3 || tokens[0] != "E" {
                return Err(parse_error(number, "expected `E axis c… ASSIGNMENT`"));
            }
            let axis = parse_usize(number, tokens[1], "axis")?;
            let mut tail = Vec::with_capacity(d);
            for token in &tokens[2..2 + d] {
                tail.push(parse_usize(number, token, "coordinate")?);
            }
            if !instance.spec.contains_edge(&tail, axis) {
                return Err(GridError::Parse {
                    line: number,
                    message: format!("edge at {tail:?} along axis {axis} is outside the grid"),
                });
            }
            if instance.spec.edge_rank(&tail, axis) != rank {
                return Err(parse_error(number, "edges are out of canonical order"));
            }
            let assignment = match tokens[d + 2] {
                "ALWAYS" if tokens.len() == d + 3 => EdgeAssignment::Always,
                "NEVER" if tokens.len() == d + 3 => EdgeAssignment::Never,
                "LIT" if tokens.len() == d + 5 => {
                    let bit = parse_usize(number, tokens[d + 3], "bit index")?;
                    if bit >= arity {
                        return Err(GridError::Parse {
                            line: number,
                            message: format!("literal reads bit {bit} but the arity is {arity}"),
                        });
                    }
                    let expected = match tokens[d + 4] {
                        "0" => 0,
                        "1" => 1,
                        other => {
                            return Err(GridError::Parse {
                                line: number,
                                message: format!("expected bit value 0 or 1, got {other:?}"),
                            })
                        }
                    };
                    EdgeAssignment::Literal { bit, expected }
                }
                _ => return Err(parse_error(number, "malformed edge assignment")),
            };
            instance.assignments[rank] = assignment;
        }
        match lines.next() {
            Some((_, "")) => {
                if let Some((extra, _)) = lines.next() {
                    return Err(parse_error(
                        extra + 1,
                        "trailing content after the edge list",
                    ));
                }
            }
            Some((index, _)) => {
                return Err(parse_error(
                    index + 1,
                    "trailing content after the edge list",
                ))
            }
            None => {
                return Err(GridError::Parse {
                    line: instance.spec.edge_count() + 4,
                    message: "missing trailing newline".to_string(),
                })
            }
        }
        let canonical = instance.to_text();
        if canonical != text {
            return Err(parse_error(1, "input is not in canonical form"));
        }
        Ok(instance)
    }

    /// Renders a two-dimensional instance in Graphviz DOT form.
    ///
    /// Vertices appear in rank order as `"c₀,c₁"`, with the source and
    /// target annotated; `Never` edges are omitted; a literal edge is
    /// labelled `x{bit+1}={expected}`.
    pub fn to_dot(&self) -> Result<String, GridError> {
        if self.spec.dimension() != 2 {
            return Err(GridError::DotDimension {
                got: self.spec.dimension(),
            });
        }
        let name = |coords: &[usize]| format!("\"{},{}\"", coords[0], coords[1]);
        let (keyword, arrow) = if self.spec.directed() {
            ("digraph", "->")
        } else {
            ("graph", "--")
        };
        let mut out = format!("{keyword} grid {{\n");
        for rank in 0..self.spec.vertex_count() {
            let coords = self.spec.vertex_coords(rank);
            let mut roles = Vec::new();
            if coords == self.source {
                roles.push("source");
            }
            if coords == self.target {
                roles.push("target");
            }
            if roles.is_empty() {
                out.push_str(&format!("  {};\n", name(&coords)));
            } else {
                out.push_str(&format!(
                    "  {} [xlabel=\"{}\"];\n",
                    name(&coords),
                    roles.join(",")
                ));
            }
        }
        for (edge, assignment) in self.assignments() {
            let line = match assignment {
                EdgeAssignment::Never => continue,
                EdgeAssignment::Always => {
                    format!("  {} {arrow} {};\n", name(&edge.tail), name(&edge.head()))
                }
                EdgeAssignment::Literal { bit, expected } => format!(
                    "  {} {arrow} {} [label=\"x{}={}\"];\n",
                    name(&edge.tail),
                    name(&edge.head()),
                    bit + 1,
                    expected
                ),
            };
            out.push_str(&line);
        }
        out.push_str("}\n");
        Ok(out)
    }
}
