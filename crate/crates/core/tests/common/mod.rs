//! Independent oracles the integration suites check the crate against.
//!
//! Everything here is written from first principles — a plain counter scan
//! for word membership, depth-first search and union–find for reachability —
//! deliberately sharing no logic with the crate's own evaluators.

// Each integration test target compiles this module separately and uses
// its own subset of the oracles.
#![allow(dead_code)]

use dyckgrid::grid::ConcreteGrid;

/// Depth-bounded balance by a single streaming counter.
pub fn oracle_dyck(k: usize, bits: &[u8]) -> bool {
    let mut depth: i64 = 0;
    for &b in bits {
        depth += if b == 0 { 1 } else { -1 };
        if depth < 0 || depth > k as i64 {
            return false;
        }
    }
    depth == 0
}

/// Directed reachability by an explicit depth-first search.
pub fn oracle_reachable_directed(grid: &ConcreteGrid, source: &[usize], target: &[usize]) -> bool {
    let spec = grid.spec();
    let d = spec.dimension();
    let target_rank = spec.vertex_rank(target);
    let mut visited = vec![false; spec.vertex_count()];
    let mut stack = vec![spec.vertex_rank(source)];
    visited[spec.vertex_rank(source)] = true;
    while let Some(rank) = stack.pop() {
        if rank == target_rank {
            return true;
        }
        let coords = spec.vertex_coords(rank);
        for axis in 0..d {
            if coords[axis] < spec.dims()[axis] && grid.present(&coords, axis) {
                let mut head = coords.clone();
                head[axis] += 1;
                let head_rank = spec.vertex_rank(&head);
                if !visited[head_rank] {
                    visited[head_rank] = true;
                    stack.push(head_rank);
                }
            }
        }
    }
    false
}

/// Undirected reachability by union–find over present edges.
pub fn oracle_reachable_undirected(
    grid: &ConcreteGrid,
    source: &[usize],
    target: &[usize],
) -> bool {
    let spec = grid.spec();
    let mut parent: Vec<usize> = (0..spec.vertex_count()).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for edge in spec.edges() {
        if grid.present(&edge.tail, edge.axis) {
            let a = find(&mut parent, spec.vertex_rank(&edge.tail));
            let b = find(&mut parent, spec.vertex_rank(&edge.head()));
            parent[a] = b;
        }
    }
    find(&mut parent, spec.vertex_rank(source)) == find(&mut parent, spec.vertex_rank(target))
}

/// Reachability by the oracle matching the grid's directedness.
pub fn oracle_reachable(grid: &ConcreteGrid, source: &[usize], target: &[usize]) -> bool {
    if grid.spec().directed() {
        oracle_reachable_directed(grid, source, target)
    } else {
        oracle_reachable_undirected(grid, source, target)
    }
}

/// The low `len` bits of `mask`, least significant first.
pub fn bits_of(mask: u64, len: usize) -> Vec<u8> {
    (0..len).map(|i| ((mask >> i) & 1) as u8).collect()
}
