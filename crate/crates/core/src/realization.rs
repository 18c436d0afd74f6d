//! Graph realization by exhaustive search.
//!
//! Fix a basis `B`. A binary matroid is graphic exactly when the elements of
//! `B` can be laid out as a spanning tree in which the basis part of every
//! fundamental circuit is a path; each non-basis element then joins the
//! ends of its path. Connected components are solved separately and glued
//! at vertex 0.

use crate::error::{Error, Result};
use crate::graph::{Edge, Multigraph};
use crate::matroid::BinaryMatroid;
use crate::recognition::Limits;
use crate::vectors::bits;

/// A multigraph whose cycle matroid is `m` with the same labels, or `None`
/// when `m` is not graphic.
pub fn graphic_by_realization(m: &BinaryMatroid, limits: &Limits) -> Result<Option<Multigraph>> {
    if m.len() > limits.realization_max {
        return Err(Error::EnumerationBound { size: m.len(), bound: limits.realization_max });
    }
    let cols = m.columns();
    let n = cols.len();
    // In echelon form the pivot of row k is the first column equal to e_k.
    let mut basis = Vec::with_capacity(m.rank());
    for k in 0..m.rank() {
        basis.push(cols.iter().position(|&c| c == 1 << k).expect("echelon pivot"));
    }
    // fundamental paths as masks over basis positions (row indices)
    let paths: Vec<(usize, u64)> =
        (0..n).filter(|e| !basis.contains(e)).map(|e| (e, cols[e])).collect();

    let mut parent: Vec<usize> = (0..m.rank()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(_, path) in &paths {
        let mut it = bits(path);
        if let Some(first) = it.next() {
            for other in it {
                let (a, b) = (find(&mut parent, first), find(&mut parent, other));
                parent[a] = b;
            }
        }
    }

    let mut ends = vec![(0usize, 0usize); m.rank()];
    let mut next_vertex = 1;
    for root in 0..m.rank() {
        if find(&mut parent, root) != root {
            continue;
        }
        let members: Vec<usize> = (0..m.rank()).filter(|&k| find(&mut parent, k) == root).collect();
        let local: Vec<u64> = paths
            .iter()
            .filter(|&&(_, p)| p != 0 && bits(p).next().map(|k| find(&mut parent, k)) == Some(root))
            .map(|&(_, p)| members.iter().enumerate().fold(0u64, |a, (i, &k)| a | (((p >> k) & 1) << i)))
            .collect();
        let Some(tree) = TreeSearch::new(members.len(), local).solve() else {
            return Ok(None);
        };
        // local vertex 0 is glued to global vertex 0
        let map = |v: usize| if v == 0 { 0 } else { next_vertex + v - 1 };
        for (i, &k) in members.iter().enumerate() {
            ends[k] = (map(tree[i].0), map(tree[i].1));
        }
        next_vertex += members.len();
    }

    let vertex_count = m.rank() + 1;
    let mut edges = Vec::with_capacity(n);
    for (e, &col) in cols.iter().enumerate().take(n) {
        let (u, v) = match basis.iter().position(|&b| b == e) {
            Some(k) => ends[k],
            None => path_ends(col, &ends),
        };
        edges.push(Edge { label: m.label(e).clone(), u, v });
    }
    Ok(Some(Multigraph::new(vertex_count, edges)?))
}

/// Endpoints of the path formed by the tree edges in `path`; a loop at 0
/// for the empty path.
fn path_ends(path: u64, ends: &[(usize, usize)]) -> (usize, usize) {
    if path == 0 {
        return (0, 0);
    }
    let mut odd: Vec<usize> = Vec::new();
    for k in bits(path) {
        for w in [ends[k].0, ends[k].1] {
            match odd.iter().position(|&x| x == w) {
                Some(i) => {
                    odd.swap_remove(i);
                }
                None => odd.push(w),
            }
        }
    }
    debug_assert_eq!(odd.len(), 2);
    (odd[0].min(odd[1]), odd[0].max(odd[1]))
}

/// Lays out `edges` tree edges on `edges + 1` vertices so that every
/// constraint mask is a path.
struct TreeSearch {
    edges: usize,
    constraints: Vec<u64>,
    order: Vec<usize>,
    placed: Vec<(usize, usize)>,
}

impl TreeSearch {
    fn new(edges: usize, constraints: Vec<u64>) -> Self {
        // place edges that share constraints with already placed ones first
        let mut order = Vec::with_capacity(edges);
        let mut done = 0u64;
        for _ in 0..edges {
            let next = (0..edges)
                .filter(|&e| (done >> e) & 1 == 0)
                .max_by_key(|&e| {
                    let touching = constraints.iter().filter(|&&c| (c >> e) & 1 == 1 && c & done != 0).count();
                    let weight = constraints.iter().filter(|&&c| (c >> e) & 1 == 1).count();
                    (touching, weight, std::cmp::Reverse(e))
                })
                .unwrap();
            order.push(next);
            done |= 1 << next;
        }
        TreeSearch { edges, constraints, order, placed: vec![(usize::MAX, usize::MAX); edges] }
    }

    fn solve(mut self) -> Option<Vec<(usize, usize)>> {
        if self.extend(0, 0, 0) {
            Some(self.placed)
        } else {
            None
        }
    }

    /// `used` vertices are introduced so far; `mask` holds the placed edges.
    fn extend(&mut self, pos: usize, used: usize, mask: u64) -> bool {
        if pos == self.edges {
            return true;
        }
        let e = self.order[pos];
        // endpoints are existing vertices or the next fresh ones, in order
        for a in 0..=used {
            for b in a + 1..=used + 1 {
                if (b == used + 1 && a != used) || b > self.edges {
                    continue;
                }
                let new_used = used.max(b + 1);
                self.placed[e] = (a, b);
                let mask2 = mask | (1 << e);
                if self.acyclic(mask2, new_used) && self.feasible(mask2, new_used) && self.extend(pos + 1, new_used, mask2)
                {
                    return true;
                }
            }
        }
        self.placed[e] = (usize::MAX, usize::MAX);
        false
    }

    fn acyclic(&self, mask: u64, vertices: usize) -> bool {
        let mut parent: Vec<usize> = (0..vertices).collect();
        for e in bits(mask) {
            let (a, b) = self.placed[e];
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }

    /// Within each component of the placed forest, the placed edges of each
    /// constraint must form a single path.
    fn feasible(&self, mask: u64, vertices: usize) -> bool {
        let mut parent: Vec<usize> = (0..vertices).collect();
        for e in bits(mask) {
            let (a, b) = self.placed[e];
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            parent[ra] = rb;
        }
        let comp: Vec<usize> = (0..vertices).map(|v| root(&mut parent, v)).collect();
        let mut degree = vec![0u8; vertices];
        for &c in &self.constraints {
            let here = c & mask;
            if here.count_ones() < 2 {
                continue;
            }
            degree.iter_mut().for_each(|d| *d = 0);
            for e in bits(here) {
                let (a, b) = self.placed[e];
                degree[a] += 1;
                degree[b] += 1;
                if degree[a] > 2 || degree[b] > 2 {
                    return false;
                }
            }
            // a forest of paths has (vertices - edges) pieces; per component
            // there may be only one
            let mut pieces = vec![0i32; vertices];
            for v in 0..vertices {
                if degree[v] > 0 {
                    pieces[comp[v]] += 1;
                }
            }
            for e in bits(here) {
                pieces[comp[self.placed[e].0]] -= 1;
            }
            if pieces.iter().any(|&p| p > 1) {
                return false;
            }
        }
        true
    }
}

fn root(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::gf2::BitMatrix;

    fn realize(m: &BinaryMatroid) -> Option<Multigraph> {
        graphic_by_realization(m, &Limits::default()).unwrap()
    }

    #[test]
    fn free_matroid_is_a_tree() {
        let m = BinaryMatroid::from_matrix_numbered(&BitMatrix::identity(3));
        let g = realize(&m).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges().len(), 3);
        assert!(g.is_connected());
        assert!(BinaryMatroid::from_graph(&g).same_matroid(&m).unwrap());
    }

    #[test]
    fn matrix_b_realizes_g1() {
        let b = catalog::matrix_b();
        let g = realize(&b).unwrap();
        assert!(BinaryMatroid::from_graph(&g).same_matroid(&b).unwrap());
        assert!(BinaryMatroid::from_graph(&g).is_isomorphic(&catalog::matroid("G1").unwrap()));
    }

    #[test]
    fn fano_and_k33_dual_are_not_graphic() {
        assert!(realize(&catalog::f7()).is_none());
        assert!(realize(&catalog::matroid("K33dual").unwrap()).is_none());
        assert!(realize(&catalog::matroid("K33").unwrap()).is_some());
    }

    #[test]
    fn loops_and_disconnected_pieces() {
        let m = BinaryMatroid::from_matrix_numbered(
            &BitMatrix::from_rows(&[[1, 1, 0, 0, 0, 0], [0, 0, 1, 0, 1, 0], [0, 0, 0, 1, 1, 0]]).unwrap(),
        );
        let g = realize(&m).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert!(BinaryMatroid::from_graph(&g).same_matroid(&m).unwrap());
    }

    #[test]
    fn size_bound() {
        assert!(matches!(
            graphic_by_realization(&catalog::r10(), &Limits::default()),
            Err(Error::EnumerationBound { .. })
        ));
    }
}
