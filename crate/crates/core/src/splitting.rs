//! The splitting operation on binary matroids and on graphs.
//!
//! For a matroid with standard representation `A`, the splitting matroid
//! `M_{x,y}` is the vector matroid of `A` with one extra row that is 1
//! exactly in the columns of `x` and `y`. For a graph, the edges `x = vv1`
//! and `y = vv2` are detached from `v` and attached to a new vertex.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::graph::{Edge, Multigraph};
use crate::matroid::{BinaryMatroid, ElementLabel};

/// Two distinct elements to split on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SplitPair {
    pub x: ElementLabel,
    pub y: ElementLabel,
}

impl SplitPair {
    pub fn new(x: ElementLabel, y: ElementLabel) -> Result<Self> {
        if x == y {
            return Err(Error::SameElement(x.to_string()));
        }
        Ok(SplitPair { x, y })
    }

    pub fn parse(x: &str, y: &str) -> Result<Self> {
        Self::new(ElementLabel::new(x)?, ElementLabel::new(y)?)
    }
}

/// `a` with an appended row that is 1 in columns `x` and `y` only.
pub fn adjoin_pair_row(a: &BitMatrix, x: usize, y: usize) -> BitMatrix {
    assert!(x != y && x < a.col_count() && y < a.col_count());
    let mut out = a.clone();
    out.push_row((1 << x) | (1 << y));
    out
}

/// The matrix `A_{x,y}` built on the standard representation of `m`,
/// in the element order of `m`.
pub fn split_representation(m: &BinaryMatroid, p: &SplitPair) -> Result<BitMatrix> {
    let (i, j) = m.pair_indices(p.x.as_str(), p.y.as_str())?;
    let standard = m.representation().standard_form().unpermuted();
    Ok(adjoin_pair_row(&standard, i, j))
}

/// The splitting matroid `M_{x,y}`.
pub fn split(m: &BinaryMatroid, p: &SplitPair) -> Result<BinaryMatroid> {
    let (i, j) = m.pair_indices(p.x.as_str(), p.y.as_str())?;
    Ok(split_by_index(m, i, j))
}

pub(crate) fn split_by_index(m: &BinaryMatroid, i: usize, j: usize) -> BinaryMatroid {
    let mut cols = m.columns().to_vec();
    let new_row = 1u64 << m.rank();
    cols[i] |= new_row;
    cols[j] |= new_row;
    BinaryMatroid::from_columns(m.elements().to_vec(), &cols)
}

/// Splits the adjacent edges `x = v v1` and `y = v v2` away from `v`.
///
/// The two edges keep their labels and are reattached to a new vertex
/// (index `vertex_count`) joined to `v1` and `v2`. When the edges share both
/// endpoints, the first endpoint of `x` with degree at least three is used.
pub fn split_graph(g: &Multigraph, p: &SplitPair) -> Result<Multigraph> {
    let ex = g.edge(p.x.as_str())?;
    let ey = g.edge(p.y.as_str())?;
    if ex.is_loop() || ey.is_loop() {
        return Err(Error::GraphSplit("loop edges cannot be split".into()));
    }
    let shared: Vec<usize> = [ex.u, ex.v].into_iter().filter(|&w| ey.other(w).is_some()).collect();
    if shared.is_empty() {
        return Err(Error::GraphSplit(format!("edges {} and {} share no endpoint", p.x, p.y)));
    }
    let v = shared
        .iter()
        .copied()
        .find(|&w| g.degree(w) >= 3)
        .ok_or_else(|| Error::GraphSplit(format!("shared endpoint {} has degree below three", shared[0])))?;
    let (v1, v2) = (ex.other(v).unwrap(), ey.other(v).unwrap());
    let fresh = g.vertex_count();
    let edges = g
        .edges()
        .iter()
        .map(|e| {
            if e.label == p.x {
                Edge { label: e.label.clone(), u: fresh, v: v1 }
            } else if e.label == p.y {
                Edge { label: e.label.clone(), u: fresh, v: v2 }
            } else {
                e.clone()
            }
        })
        .collect();
    Multigraph::new(fresh + 1, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::CircuitKind;

    fn k4() -> Multigraph {
        Multigraph::from_edges(
            4,
            &[("01", 0, 1), ("02", 0, 2), ("03", 0, 3), ("12", 1, 2), ("13", 1, 3), ("23", 2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn k4_split_bookkeeping() {
        let g = k4();
        let s = split_graph(&g, &SplitPair::parse("01", "02").unwrap()).unwrap();
        assert_eq!(s.vertex_count(), 5);
        assert_eq!(s.edges().len(), 6);
        assert_eq!(s.degree(4), 2);
        assert_eq!(s.degree(0), 1);
    }

    #[test]
    fn triangle_with_pendant() {
        // triangle 0-1-2 with pendant edge 0-3; split the triangle edges at 0
        let g = Multigraph::from_edges(4, &[("a", 0, 1), ("b", 1, 2), ("c", 2, 0), ("p", 0, 3)]).unwrap();
        let s = split_graph(&g, &SplitPair::parse("a", "c").unwrap()).unwrap();
        // new vertex 4 adjacent to 1 (via a) and 2 (via c): cycle 4-1-2-4 and vertex 0 hangs off p
        let expected = Multigraph::from_edges(5, &[("a", 4, 1), ("b", 1, 2), ("c", 4, 2), ("p", 0, 3)]).unwrap();
        assert_eq!(s, expected);
        let m = BinaryMatroid::from_graph(&s);
        let circuits = m.circuits(CircuitKind::Circuit).unwrap();
        assert_eq!(circuits.len(), 1);
        assert_eq!(circuits[0].iter().map(|l| l.as_str()).collect::<Vec<_>>(), ["a", "b", "c"]);
        assert!(!s.is_connected());
    }

    #[test]
    fn split_graph_errors() {
        let g = Multigraph::from_edges(4, &[("a", 0, 1), ("b", 2, 3), ("c", 1, 2), ("l", 1, 1)]).unwrap();
        assert!(matches!(split_graph(&g, &SplitPair::parse("a", "b").unwrap()), Err(Error::GraphSplit(_))));
        assert!(matches!(split_graph(&g, &SplitPair::parse("a", "l").unwrap()), Err(Error::GraphSplit(_))));
        let path = Multigraph::from_edges(3, &[("a", 0, 1), ("b", 1, 2)]).unwrap();
        assert!(matches!(split_graph(&path, &SplitPair::parse("a", "b").unwrap()), Err(Error::GraphSplit(_))));
        assert!(SplitPair::parse("a", "a").is_err());
    }

    #[test]
    fn split_adds_the_pair_row() {
        let m = BinaryMatroid::from_graph(&k4());
        let p = SplitPair::parse("01", "23").unwrap();
        let a = split_representation(&m, &p).unwrap();
        assert_eq!(a.row_count(), 4);
        assert_eq!(a.row(3), 0b100001);
        let s = split(&m, &p).unwrap();
        assert_eq!(s.rank(), 4);
        assert!(s.is_2_cocircuit("01", "23").unwrap());
        assert!(matches!(split(&m, &SplitPair::parse("01", "99").unwrap()), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn loop_split_is_executed() {
        let m = BinaryMatroid::from_matrix(
            &BitMatrix::from_rows(&[[1, 1, 0]]).unwrap(),
            ElementLabel::list(&["a", "b", "z"]).unwrap(),
        )
        .unwrap();
        let s = split(&m, &SplitPair::parse("z", "a").unwrap()).unwrap();
        assert_eq!(s.rank(), 2);
        assert!(s.loops_coloops().0.is_empty());
    }
}
