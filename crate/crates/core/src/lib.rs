//! Bounded-depth balanced-parenthesis words, composed counting gadgets, and
//! grid-graph reachability instances that encode them.
//!
//! The crate is organised around one pipeline:
//!
//! * [`dyck`] — packed parenthesis words, depth profiles, and membership in
//!   the depth-bounded Dyck language.
//! * [`ex`] — the "exactly `m` of `2m`" partial Boolean function, its
//!   recursive composition, and enumeration of promise inputs.
//! * [`block`] — encoding composed instances as bounded-depth parenthesis
//!   blocks, and the AND-of-blocks concatenation reduction.
//! * [`grid`] — finite grid graphs whose edges are present always, never, or
//!   according to one bit of an input word, with reachability evaluation.
//! * [`embed`] — constructions that lay Dyck membership out on grids:
//!   directed two-dimensional strips, their parallel OR combination, folded
//!   undirected layouts, and dimension-reducing embeddings.
//! * [`adversary`] — spectral certificates separating the counting gadget's
//!   difficulty from its arity, via sparse 0/1 matrices and power iteration.

pub mod adversary;
pub mod block;
pub mod dyck;
pub mod embed;
pub mod ex;
pub mod grid;
