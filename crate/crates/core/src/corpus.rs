//! Test corpora: connected multigraphs up to isomorphism, random binary
//! matroids, and the minors of `R10`.

use std::collections::HashSet;

use rand::Rng;

use crate::catalog;
use crate::gf2::BitMatrix;
use crate::graph::{permutations, Multigraph};
use crate::matroid::{BinaryMatroid, ElementLabel};
use crate::recognition::for_each_minor;

type EdgeList = Vec<(u8, u8)>;

/// Smallest sorted edge list over all vertex relabelings.
fn canonical(vertices: usize, edges: &[(u8, u8)]) -> EdgeList {
    let mut best: Option<EdgeList> = None;
    let mut perm: Vec<usize> = (0..vertices).collect();
    permutations(&mut perm, 0, &mut |p| {
        let mut relabeled: EdgeList = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (p[u as usize] as u8, p[v as usize] as u8);
                (a.min(b), a.max(b))
            })
            .collect();
        relabeled.sort_unstable();
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            best = Some(relabeled);
        }
        false
    });
    best.unwrap_or_default()
}

/// Every connected multigraph (loops and parallel edges allowed) with
/// `1..=max_edges` edges and at most `max_vertices` vertices, one per
/// isomorphism class. Edges are labeled `e0`, `e1`, ... .
pub fn connected_multigraphs(max_edges: usize, max_vertices: usize) -> Vec<Multigraph> {
    // every connected graph grows from a smaller one by adding an edge
    // inside the vertex set or a pendant edge to a new vertex
    let mut level: Vec<(usize, EdgeList)> = vec![(1, Vec::new())];
    let mut out = Vec::new();
    for _ in 0..max_edges {
        let mut seen: HashSet<(usize, EdgeList)> = HashSet::new();
        let mut next = Vec::new();
        for (vertices, edges) in &level {
            let mut push = |vertices: usize, extra: (u8, u8)| {
                let mut grown = edges.clone();
                grown.push(extra);
                let key = (vertices, canonical(vertices, &grown));
                if seen.insert(key.clone()) {
                    next.push(key);
                }
            };
            for u in 0..*vertices as u8 {
                for v in u..*vertices as u8 {
                    push(*vertices, (u, v));
                }
            }
            if *vertices < max_vertices {
                for u in 0..*vertices as u8 {
                    push(vertices + 1, (u, *vertices as u8));
                }
            }
        }
        next.sort();
        out.extend(next.iter().map(|(v, e)| to_graph(*v, e)));
        level = next;
    }
    out
}

fn to_graph(vertices: usize, edges: &[(u8, u8)]) -> Multigraph {
    let named: Vec<(String, usize, usize)> =
        edges.iter().enumerate().map(|(i, &(u, v))| (format!("e{i}"), u as usize, v as usize)).collect();
    let refs: Vec<(&str, usize, usize)> = named.iter().map(|(l, u, v)| (l.as_str(), *u, *v)).collect();
    Multigraph::from_edges(vertices, &refs).expect("generated graphs are valid")
}

/// A uniformly random `rows x n` matrix's vector matroid, labeled `1..=n`.
pub fn random_matroid<R: Rng>(rng: &mut R, n: usize, rows: usize) -> BinaryMatroid {
    let data: Vec<Vec<u8>> = (0..rows).map(|_| (0..n).map(|_| rng.gen_range(0..2u8)).collect()).collect();
    let m = if rows == 0 { BitMatrix::zeros(0, n) } else { BitMatrix::from_rows(&data).expect("0/1 entries") };
    BinaryMatroid::from_matrix_numbered(&m)
}

/// Random matroids with `1..=max_n` elements and at most `max_n` rows.
pub fn random_matroids<R: Rng>(rng: &mut R, count: usize, max_n: usize) -> Vec<BinaryMatroid> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let rows = rng.gen_range(0..=n);
            random_matroid(rng, n, rows)
        })
        .collect()
}

/// One representative of each isomorphism class of minors of `m` with at
/// least `min_size` elements.
pub fn minors_up_to_isomorphism(m: &BinaryMatroid, min_size: usize) -> Vec<BinaryMatroid> {
    let mut classes: Vec<BinaryMatroid> = Vec::new();
    for size in (min_size..=m.len()).rev() {
        for rank in 0..=size.min(m.rank()) {
            let mut bucket: Vec<BinaryMatroid> = Vec::new();
            for_each_minor(m.columns(), size, rank, |d, c, _| {
                let minor = m.minor_by_mask(d, c);
                if !bucket.iter().any(|b| b.is_isomorphic(&minor)) {
                    bucket.push(minor);
                }
                false
            });
            classes.extend(bucket);
        }
    }
    classes
}

/// `R10` and its minors with at least `min_size` elements.
pub fn r10_minors(min_size: usize) -> Vec<BinaryMatroid> {
    minors_up_to_isomorphism(&catalog::r10(), min_size)
}

/// Appends a column to `m` under a fresh label.
pub fn extend(m: &BinaryMatroid, column: &[u8], label: &str) -> BinaryMatroid {
    let a = m.representation();
    assert_eq!(column.len(), a.row_count());
    let rows: Vec<Vec<u8>> =
        (0..a.row_count()).map(|i| (0..a.col_count()).map(|j| a.get(i, j) as u8).chain([column[i]]).collect()).collect();
    let mut labels = m.elements().to_vec();
    labels.push(ElementLabel::new(label).expect("valid label"));
    let matrix = if rows.is_empty() { BitMatrix::zeros(0, labels.len()) } else { BitMatrix::from_rows(&rows).unwrap() };
    BinaryMatroid::from_matrix(&matrix, labels).expect("fresh label")
}

/// Coextension: the dual of extending the dual by `column`.
pub fn coextend(m: &BinaryMatroid, column: &[u8], label: &str) -> BinaryMatroid {
    extend(&m.dual(), column, label).dual()
}

/// Adds a coloop under a fresh label.
pub fn add_coloop(m: &BinaryMatroid, label: &str) -> BinaryMatroid {
    coextend(m, &vec![0; m.corank()], label)
}

/// Adds an element in series with `with`.
pub fn add_in_series(m: &BinaryMatroid, with: &str, label: &str) -> BinaryMatroid {
    let d = m.dual();
    let i = d.index_of(with).expect("known label");
    let col: Vec<u8> = (0..d.rank()).map(|r| d.representation().get(r, i) as u8).collect();
    extend(&d, &col, label).dual()
}
