//! Named matroids and graphs: the Fano matroid, `R10`, complete graphs and
//! the small graphs `G1`..`G7` whose cycle matroids are the excluded minors
//! for graphic or cographic splitting.
//!
//! Several graphs are decoded from drawings, so every relationship they are
//! expected to satisfy is recorded as a named obligation and checked by
//! [`check_obligation`].

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::graph::Multigraph;
use crate::matroid::{BinaryMatroid, CircuitKind, ElementLabel};
use crate::recognition::{self, Limits};

pub const NAMES: [&str; 17] = [
    "F7", "F7dual", "R10", "MA1", "K4", "K5", "K33", "K5dual", "K33dual", "G1", "G2", "G3", "G4", "G5", "G6", "G7",
    "MG1matrixB",
];

/// The 5x10 representation of `R10`, columns labeled 1..10.
pub const R10_ROWS: [[u8; 10]; 5] = [
    [1, 0, 0, 0, 0, 1, 1, 0, 0, 1],
    [0, 1, 0, 0, 0, 1, 1, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 1, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 1, 1, 0, 0, 1, 1],
];

/// `R10 / {4, 5}` in standard form, columns labeled 1,2,3,6,7,8,9,10.
pub const MATRIX_B_ROWS: [[u8; 8]; 3] =
    [[1, 0, 0, 1, 1, 0, 0, 1], [0, 1, 0, 1, 1, 1, 0, 0], [0, 0, 1, 0, 1, 1, 1, 0]];
pub const MATRIX_B_LABELS: [&str; 8] = ["1", "2", "3", "6", "7", "8", "9", "10"];

/// `R10` with a coloop appended: the 6x11 matrix `A1`.
pub const A1_ROWS: [[u8; 11]; 6] = [
    [1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0],
    [0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
];

/// Columns I3 followed by 110, 101, 011, 111.
pub const F7_ROWS: [[u8; 7]; 3] = [[1, 0, 0, 1, 1, 0, 1], [0, 1, 0, 1, 0, 1, 1], [0, 0, 1, 0, 1, 1, 1]];

#[derive(Clone, Debug)]
pub enum CatalogValue {
    Matroid(BinaryMatroid),
    Graph(Multigraph),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub value: CatalogValue,
    pub verification_obligations: Vec<&'static str>,
}

impl CatalogEntry {
    /// The entry as a matroid; graphs give their cycle matroid.
    pub fn matroid(&self) -> BinaryMatroid {
        match &self.value {
            CatalogValue::Matroid(m) => m.clone(),
            CatalogValue::Graph(g) => BinaryMatroid::from_graph(g),
        }
    }

    pub fn graph(&self) -> Option<&Multigraph> {
        match &self.value {
            CatalogValue::Graph(g) => Some(g),
            CatalogValue::Matroid(_) => None,
        }
    }

    /// Text export: the graph format for graphs, the matrix format otherwise.
    pub fn to_text(&self) -> String {
        match &self.value {
            CatalogValue::Graph(g) => g.to_text(),
            CatalogValue::Matroid(m) => m.to_text(),
        }
    }
}

fn matrix<const C: usize>(rows: &[[u8; C]]) -> BitMatrix {
    BitMatrix::from_rows(rows).expect("catalog matrices are 0/1")
}

/// Edges named `uv` after their endpoints, with `'` appended for repeats.
fn graph(vertices: usize, pairs: &[(usize, usize)]) -> Multigraph {
    let mut names: Vec<String> = Vec::new();
    let edges: Vec<(String, usize, usize)> = pairs
        .iter()
        .map(|&(u, v)| {
            let mut name = format!("{u}{v}");
            while names.contains(&name) {
                name.push('\'');
            }
            names.push(name.clone());
            (name, u, v)
        })
        .collect();
    let refs: Vec<(&str, usize, usize)> = edges.iter().map(|(n, u, v)| (n.as_str(), *u, *v)).collect();
    Multigraph::from_edges(vertices, &refs).expect("catalog graphs are well formed")
}

fn complete(n: usize) -> Multigraph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    graph(n, &pairs)
}

fn k33() -> Multigraph {
    let pairs: Vec<(usize, usize)> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    graph(6, &pairs)
}

fn g1() -> Multigraph {
    // K4 with the opposite edges 01 and 23 doubled
    graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 1), (2, 3)])
}

fn g2() -> Multigraph {
    // square 0-1-2-3, apex 4 on 0, 1, 3, and a second 2-3 edge
    graph(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 3), (2, 3)])
}

fn g4() -> Multigraph {
    // 0,5,1 down the left side and 2,6,3 down the right, apex 4 above
    graph(
        7,
        &[(0, 4), (4, 2), (2, 6), (6, 3), (3, 1), (1, 5), (5, 0), (0, 3), (4, 1), (5, 2), (6, 5)],
    )
}

fn g5() -> Multigraph {
    // K33 on {0,3,5} x {1,2,4} plus the edge 12 inside a part
    graph(6, &[(0, 1), (1, 2), (2, 3), (1, 3), (2, 0), (4, 5), (1, 5), (5, 2), (0, 4), (4, 3)])
}

fn g6() -> Multigraph {
    // G5 without 12 and 45: K33 minus one edge
    graph(6, &[(0, 1), (2, 3), (1, 3), (2, 0), (1, 5), (5, 2), (0, 4), (4, 3)])
}

fn g7() -> Multigraph {
    // K5 without 41 and 42
    graph(5, &[(0, 3), (3, 2), (2, 1), (1, 0), (0, 4), (4, 3), (0, 2), (1, 3)])
}

fn numbered<const C: usize>(rows: &[[u8; C]]) -> BinaryMatroid {
    BinaryMatroid::from_matrix_numbered(&matrix(rows))
}

pub fn f7() -> BinaryMatroid {
    numbered(&F7_ROWS)
}

pub fn r10() -> BinaryMatroid {
    numbered(&R10_ROWS)
}

pub fn ma1() -> BinaryMatroid {
    numbered(&A1_ROWS)
}

pub fn matrix_b() -> BinaryMatroid {
    BinaryMatroid::from_matrix(&matrix(&MATRIX_B_ROWS), ElementLabel::list(&MATRIX_B_LABELS).unwrap()).unwrap()
}

/// Looks up a catalog entry by name.
pub fn get(name: &str) -> Result<CatalogEntry> {
    use CatalogValue::{Graph, Matroid};
    let (name, value, obligations): (&'static str, CatalogValue, Vec<&'static str>) = match name {
        "F7" => ("F7", Matroid(f7()), vec!["fano-lines"]),
        "F7dual" => ("F7dual", Matroid(f7().dual()), vec!["fano-lines", "fano-not-self-dual"]),
        "R10" => ("R10", Matroid(r10()), vec!["r10-contract-4-5-is-b", "r10-regular-not-graphic-not-cographic"]),
        "MA1" => ("MA1", Matroid(ma1()), vec!["ma1-contains-r10"]),
        "K4" => ("K4", Graph(complete(4)), vec![]),
        "K5" => ("K5", Graph(complete(5)), vec!["g3-is-k5", "g7-minor-of-k5"]),
        "K33" => ("K33", Graph(k33()), vec!["g6-minor-of-k33"]),
        "K5dual" => ("K5dual", Matroid(BinaryMatroid::from_graph(&complete(5)).dual()), vec![]),
        "K33dual" => ("K33dual", Matroid(BinaryMatroid::from_graph(&k33()).dual()), vec![]),
        "G1" => ("G1", Graph(g1()), vec!["g1-is-b", "g1-minor-of-g4"]),
        "G2" => ("G2", Graph(g2()), vec!["g7-dual-is-g2"]),
        "G3" => ("G3", Graph(complete(5)), vec!["g3-is-k5"]),
        "G4" => ("G4", Graph(g4()), vec!["g1-minor-of-g4"]),
        "G5" => ("G5", Graph(g5()), vec!["g5-shape"]),
        "G6" => ("G6", Graph(g6()), vec!["g6-dual-is-g1", "g6-minor-of-k33"]),
        "G7" => ("G7", Graph(g7()), vec!["g7-dual-is-g2", "g7-minor-of-k5"]),
        "MG1matrixB" => ("MG1matrixB", Matroid(matrix_b()), vec!["g1-is-b", "r10-contract-4-5-is-b"]),
        other => return Err(Error::UnknownName(other.to_owned())),
    };
    Ok(CatalogEntry { name, value, verification_obligations: obligations })
}

/// Shorthand for `get(name)?.matroid()`.
pub fn matroid(name: &str) -> Result<BinaryMatroid> {
    Ok(get(name)?.matroid())
}

fn m(name: &str) -> BinaryMatroid {
    matroid(name).expect("catalog name")
}

pub const OBLIGATIONS: [&str; 13] = [
    "fano-lines",
    "fano-not-self-dual",
    "r10-contract-4-5-is-b",
    "r10-regular-not-graphic-not-cographic",
    "ma1-contains-r10",
    "g1-is-b",
    "g6-dual-is-g1",
    "g7-dual-is-g2",
    "g3-is-k5",
    "g1-minor-of-g4",
    "g6-minor-of-k33",
    "g7-minor-of-k5",
    "g5-shape",
];

/// Runs one named obligation.
pub fn check_obligation(name: &str) -> Result<bool> {
    let limits = Limits::default();
    let minor_of = |small: &str, big: &str| -> Result<bool> {
        Ok(recognition::has_minor(&m(big), &m(small), &limits)?.is_some())
    };
    Ok(match name {
        "fano-lines" => {
            let f = m("F7");
            let lines = f.circuits(CircuitKind::Circuit)?.iter().filter(|c| c.len() == 3).count();
            f.len() == 7 && f.rank() == 3 && lines == 7
        }
        "fano-not-self-dual" => !m("F7").is_isomorphic(&m("F7dual")),
        "r10-contract-4-5-is-b" => {
            let contracted = r10().contract(&["4", "5"])?;
            let b = matrix_b();
            contracted.elements() == b.elements()
                && contracted.representation().row_space_equal(&b.representation())?
                && contracted.same_matroid(&b)?
        }
        "r10-regular-not-graphic-not-cographic" => {
            let flags = recognition::classify(&r10(), &limits)?;
            flags.regular && !flags.graphic && !flags.cographic
        }
        "ma1-contains-r10" => minor_of("R10", "MA1")?,
        "g1-is-b" => m("G1").is_isomorphic(&matrix_b()),
        "g6-dual-is-g1" => m("G6").dual().is_isomorphic(&m("G1")),
        "g7-dual-is-g2" => m("G7").dual().is_isomorphic(&m("G2")),
        "g3-is-k5" => m("G3").is_isomorphic(&m("K5")),
        "g1-minor-of-g4" => minor_of("G1", "G4")?,
        "g6-minor-of-k33" => minor_of("G6", "K33")?,
        "g7-minor-of-k5" => minor_of("G7", "K5")?,
        "g5-shape" => {
            let g5 = m("G5");
            g5.len() == 10 && g5.rank() == 5
        }
        other => return Err(Error::UnknownName(other.to_owned())),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ObligationResult {
    pub name: &'static str,
    pub passed: bool,
    pub millis: u128,
}

/// Runs every obligation of every entry.
pub fn verify_obligations() -> Vec<ObligationResult> {
    OBLIGATIONS
        .iter()
        .map(|&name| {
            let start = Instant::now();
            let passed = check_obligation(name).unwrap_or(false);
            ObligationResult { name, passed, millis: start.elapsed().as_millis() }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for name in NAMES {
            let e = get(name).unwrap();
            assert_eq!(e.name, name);
            for ob in &e.verification_obligations {
                assert!(OBLIGATIONS.contains(ob), "{ob}");
            }
        }
        assert!(matches!(get("K7"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn sizes() {
        let r = r10();
        assert_eq!((r.len(), r.rank()), (10, 5));
        let b = matrix_b();
        assert_eq!((b.len(), b.rank()), (8, 3));
        let a1 = ma1();
        assert_eq!((a1.len(), a1.rank()), (11, 6));
        for (name, edges, vertices) in
            [("G1", 8, 4), ("G2", 8, 5), ("G3", 10, 5), ("G4", 11, 7), ("G5", 10, 6), ("G6", 8, 6), ("G7", 8, 5)]
        {
            let g = get(name).unwrap();
            let g = g.graph().unwrap();
            assert_eq!((g.edges().len(), g.vertex_count()), (edges, vertices), "{name}");
            assert!(g.is_connected());
        }
    }

    #[test]
    fn cheap_obligations() {
        for ob in ["fano-lines", "fano-not-self-dual", "r10-contract-4-5-is-b", "g1-is-b", "g6-dual-is-g1", "g7-dual-is-g2", "g3-is-k5", "g5-shape"] {
            assert!(check_obligation(ob).unwrap(), "{ob}");
        }
    }

    #[test]
    fn graph_labels_mark_parallel_edges() {
        let g = get("G1").unwrap();
        let names: Vec<&str> = g.graph().unwrap().edges().iter().map(|e| e.label.as_str()).collect();
        assert_eq!(names, ["01", "02", "03", "12", "13", "23", "01'", "23'"]);
    }
}
