//! The binary matroid value type and its algebra.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::graph::Multigraph;
use crate::iso::{self, Profile};
use crate::vectors::{self, bits, full_mask};

/// Default bound on ground-set size for exhaustive enumerations.
pub const DEFAULT_ENUMERATION_BOUND: usize = 14;

/// Name of a ground-set element: a nonempty token without whitespace.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ElementLabel(String);

impl ElementLabel {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(Error::InvalidLabel(name));
        }
        Ok(ElementLabel(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Labels `prefix0, prefix1, ...`.
    pub fn numbered(prefix: &str, count: usize) -> Vec<ElementLabel> {
        (0..count).map(|i| ElementLabel(format!("{prefix}{i}"))).collect()
    }

    /// Parses whitespace-free tokens, failing on the first bad one.
    pub fn list<S: AsRef<str>>(names: &[S]) -> Result<Vec<ElementLabel>> {
        names.iter().map(|s| ElementLabel::new(s.as_ref())).collect()
    }
}

impl TryFrom<String> for ElementLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        ElementLabel::new(s)
    }
}

impl TryFrom<&str> for ElementLabel {
    type Error = Error;
    fn try_from(s: &str) -> Result<Self> {
        ElementLabel::new(s)
    }
}

impl From<ElementLabel> for String {
    fn from(l: ElementLabel) -> String {
        l.0
    }
}

impl fmt::Display for ElementLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for ElementLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A delete set `T1` and a contract set `T2`; the minor is `M \ T1 / T2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorSpec {
    pub delete: BTreeSet<ElementLabel>,
    pub contract: BTreeSet<ElementLabel>,
}

impl MinorSpec {
    pub fn new<D, C>(delete: D, contract: C) -> Self
    where
        D: IntoIterator<Item = ElementLabel>,
        C: IntoIterator<Item = ElementLabel>,
    {
        MinorSpec { delete: delete.into_iter().collect(), contract: contract.into_iter().collect() }
    }

    pub fn delete_only<D: IntoIterator<Item = ElementLabel>>(delete: D) -> Self {
        Self::new(delete, [])
    }

    pub fn contract_only<C: IntoIterator<Item = ElementLabel>>(contract: C) -> Self {
        Self::new([], contract)
    }

    pub fn is_empty(&self) -> bool {
        self.delete.is_empty() && self.contract.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CircuitKind {
    Circuit,
    Cocircuit,
}

/// A binary matroid: labeled elements and a GF(2) representation.
///
/// The representation is kept in reduced row echelon form with no zero
/// rows, so its row count is the rank and two matroids on the same label
/// sequence are equal exactly when their representations are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatroid {
    elements: Vec<ElementLabel>,
    cols: Vec<u64>,
    rank: usize,
}

impl BinaryMatroid {
    /// The vector matroid of `m` with columns named by `labels`.
    pub fn from_matrix(m: &BitMatrix, labels: Vec<ElementLabel>) -> Result<Self> {
        if labels.len() != m.col_count() {
            return Err(Error::LabelCount { labels: labels.len(), columns: m.col_count() });
        }
        check_distinct(&labels)?;
        Ok(Self::from_columns(labels, &m.columns()))
    }

    /// Matrix with columns labeled `1..=n` as in printed matrix headers.
    pub fn from_matrix_numbered(m: &BitMatrix) -> Self {
        let labels = (1..=m.col_count()).map(|i| ElementLabel(i.to_string())).collect();
        Self::from_columns(labels, &m.columns())
    }

    /// The cycle matroid of a multigraph, from its vertex-edge incidence matrix.
    pub fn from_graph(g: &Multigraph) -> Self {
        let cols: Vec<u64> = g
            .edges()
            .iter()
            .map(|e| if e.u == e.v { 0 } else { (1u64 << e.u) | (1u64 << e.v) })
            .collect();
        Self::from_columns(g.edges().iter().map(|e| e.label.clone()).collect(), &cols)
    }

    /// Labels must already be distinct and match `cols` in length.
    pub(crate) fn from_columns(elements: Vec<ElementLabel>, cols: &[u64]) -> Self {
        assert_eq!(elements.len(), cols.len());
        assert!(cols.len() <= 64, "at most 64 elements are supported");
        let (cols, rank) = vectors::rref(cols);
        BinaryMatroid { elements, cols, rank }
    }

    pub(crate) fn columns(&self) -> &[u64] {
        &self.cols
    }

    pub fn elements(&self) -> &[ElementLabel] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.len() - self.rank
    }

    /// The representation in reduced row echelon form (`rank` rows).
    pub fn representation(&self) -> BitMatrix {
        BitMatrix::from_columns(self.rank, &self.cols)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|l| l.as_str() == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    pub fn label(&self, index: usize) -> &ElementLabel {
        &self.elements[index]
    }

    pub(crate) fn mask_of<'a, I: IntoIterator<Item = &'a ElementLabel>>(&self, labels: I) -> Result<u64> {
        labels.into_iter().try_fold(0u64, |m, l| Ok(m | (1 << self.index_of(l.as_str())?)))
    }

    pub(crate) fn labels_of(&self, mask: u64) -> BTreeSet<ElementLabel> {
        bits(mask).map(|i| self.elements[i].clone()).collect()
    }

    /// Rank of a set of elements.
    pub fn rank_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize> {
        let mut mask = 0u64;
        for l in labels {
            mask |= 1 << self.index_of(l.as_ref())?;
        }
        Ok(vectors::rank_of_mask(&self.cols, mask))
    }

    pub(crate) fn rank_of_mask(&self, mask: u64) -> usize {
        vectors::rank_of_mask(&self.cols, mask)
    }

    pub fn is_independent<S: AsRef<str>>(&self, labels: &[S]) -> Result<bool> {
        Ok(self.rank_of(labels)? == labels.len())
    }

    /// The dual matroid on the same labels.
    pub fn dual(&self) -> Self {
        Self::from_columns(self.elements.clone(), &vectors::dual(&self.cols))
    }

    /// `M \ T1 / T2`. Contracting a loop deletes it.
    pub fn minor(&self, spec: &MinorSpec) -> Result<Self> {
        if let Some(both) = spec.delete.intersection(&spec.contract).next() {
            return Err(Error::OverlappingMinorSpec(both.to_string()));
        }
        let del = self.mask_of(&spec.delete)?;
        let con = self.mask_of(&spec.contract)?;
        Ok(self.minor_by_mask(del, con))
    }

    pub(crate) fn minor_by_mask(&self, delete: u64, contract: u64) -> Self {
        let cols = vectors::minor(&self.cols, delete, contract);
        let gone = delete | contract;
        let elements = (0..self.len()).filter(|i| (gone >> i) & 1 == 0).map(|i| self.elements[i].clone()).collect();
        Self::from_columns(elements, &cols)
    }

    pub fn delete<S: AsRef<str>>(&self, labels: &[S]) -> Result<Self> {
        self.minor(&MinorSpec::delete_only(self.resolve(labels)?))
    }

    pub fn contract<S: AsRef<str>>(&self, labels: &[S]) -> Result<Self> {
        self.minor(&MinorSpec::contract_only(self.resolve(labels)?))
    }

    fn resolve<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<ElementLabel>> {
        labels.iter().map(|l| Ok(self.elements[self.index_of(l.as_ref())?].clone())).collect()
    }

    pub(crate) fn circuit_masks(&self, kind: CircuitKind) -> Vec<u64> {
        match kind {
            CircuitKind::Circuit => vectors::circuits(&self.cols),
            CircuitKind::Cocircuit => vectors::cocircuits(&self.cols),
        }
    }

    /// All circuits or cocircuits, ordered by size and then by element position.
    pub fn circuits(&self, kind: CircuitKind) -> Result<Vec<BTreeSet<ElementLabel>>> {
        self.check_bound(DEFAULT_ENUMERATION_BOUND)?;
        Ok(self.circuit_masks(kind).into_iter().map(|m| self.labels_of(m)).collect())
    }

    pub(crate) fn check_bound(&self, bound: usize) -> Result<()> {
        if self.len() > bound {
            return Err(Error::EnumerationBound { size: self.len(), bound });
        }
        Ok(())
    }

    pub(crate) fn loop_mask(&self) -> u64 {
        vectors::loops(&self.cols)
    }

    pub(crate) fn coloop_mask(&self) -> u64 {
        vectors::coloops(&self.cols)
    }

    /// `(loops, coloops)`.
    pub fn loops_coloops(&self) -> (BTreeSet<ElementLabel>, BTreeSet<ElementLabel>) {
        (self.labels_of(self.loop_mask()), self.labels_of(self.coloop_mask()))
    }

    pub(crate) fn pair_indices(&self, x: &str, y: &str) -> Result<(usize, usize)> {
        if x == y {
            return Err(Error::SameElement(x.to_owned()));
        }
        Ok((self.index_of(x)?, self.index_of(y)?))
    }

    /// True iff `{x, y}` is a cocircuit, i.e. `E - {x, y}` is a hyperplane.
    pub fn is_2_cocircuit(&self, x: &str, y: &str) -> Result<bool> {
        let (i, j) = self.pair_indices(x, y)?;
        Ok(self.is_2_cocircuit_idx(i, j))
    }

    pub(crate) fn is_2_cocircuit_idx(&self, i: usize, j: usize) -> bool {
        let all = full_mask(self.len());
        let r = self.rank;
        r > 0
            && self.rank_of_mask(all & !(1 << i)) == r
            && self.rank_of_mask(all & !(1 << j)) == r
            && self.rank_of_mask(all & !(1 << i) & !(1 << j)) == r - 1
    }

    /// An isomorphism onto `other`, as a label map, if one exists.
    pub fn isomorphic(&self, other: &BinaryMatroid) -> Result<Option<BTreeMap<ElementLabel, ElementLabel>>> {
        self.check_bound(DEFAULT_ENUMERATION_BOUND)?;
        other.check_bound(DEFAULT_ENUMERATION_BOUND)?;
        Ok(self.isomorphism_indices(other).map(|map| {
            map.iter().enumerate().map(|(i, &j)| (self.elements[i].clone(), other.elements[j].clone())).collect()
        }))
    }

    pub(crate) fn isomorphism_indices(&self, other: &BinaryMatroid) -> Option<Vec<usize>> {
        if self.len() != other.len() || self.rank != other.rank {
            return None;
        }
        iso::find_isomorphism(&mut Profile::new(&self.cols), &Profile::refined_new(&other.cols))
    }

    pub fn is_isomorphic(&self, other: &BinaryMatroid) -> bool {
        self.isomorphism_indices(other).is_some()
    }

    /// Same matroid on the same labels, decided by comparing the rank of
    /// every subset. Returns false when the label sets differ.
    pub fn same_matroid(&self, other: &BinaryMatroid) -> Result<bool> {
        self.check_bound(DEFAULT_ENUMERATION_BOUND)?;
        let Some(perm) = self.label_alignment(other) else {
            return Ok(false);
        };
        let n = self.len();
        Ok((0u64..(1 << n)).all(|s| {
            let t = bits(s).fold(0u64, |a, i| a | (1 << perm[i]));
            self.rank_of_mask(s) == other.rank_of_mask(t)
        }))
    }

    /// Same matroid on the same labels, decided by comparing row spaces.
    pub fn same_matroid_by_row_space(&self, other: &BinaryMatroid) -> bool {
        let Some(perm) = self.label_alignment(other) else {
            return false;
        };
        let mut reordered = vec![0u64; self.len()];
        for (i, &p) in perm.iter().enumerate() {
            reordered[i] = other.cols[p];
        }
        vectors::rref(&reordered).0 == self.cols
    }

    /// `perm[i]` = index in `other` of this matroid's element `i`.
    fn label_alignment(&self, other: &BinaryMatroid) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        self.elements.iter().map(|l| other.elements.iter().position(|m| m == l)).collect()
    }

    /// Renames elements; `labels` must be distinct and of the right length.
    pub fn relabeled(&self, labels: Vec<ElementLabel>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::LabelCount { labels: labels.len(), columns: self.len() });
        }
        check_distinct(&labels)?;
        Ok(BinaryMatroid { elements: labels, cols: self.cols.clone(), rank: self.rank })
    }

    /// Matrix text format with a labels line.
    pub fn to_text(&self) -> String {
        let labels: Vec<String> = self.elements.iter().map(|l| l.0.clone()).collect();
        self.representation().to_text(Some(&labels))
    }

    /// Parses the matrix text format; columns default to labels `1..=n`.
    pub fn parse_text(text: &str) -> Result<Self> {
        let (m, labels) = BitMatrix::parse_text(text)?;
        match labels {
            Some(l) => Self::from_matrix(&m, ElementLabel::list(&l)?),
            None => Ok(Self::from_matrix_numbered(&m)),
        }
    }
}

fn check_distinct(labels: &[ElementLabel]) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(Error::DuplicateLabel(l.0.clone()));
        }
    }
    Ok(())
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatroid(rank {}, elements {:?})\n{}", self.rank, self.elements, self.representation())
    }
}
