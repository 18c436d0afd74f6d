//! Minor testing and excluded-minor classification.
//!
//! Every minor `N` of `M` can be written `M \ D / C` with `C` independent
//! and `D` coindependent in `M / C`, so `|C| = r(M) - r(N)` and the search
//! only visits such normalized pairs. Each candidate is reduced to echelon
//! form and skipped if the same labeled minor was already tested.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::catalog;
use crate::error::{Error, Result};
use crate::iso::{self, Profile};
use crate::matroid::{BinaryMatroid, ElementLabel, MinorSpec, DEFAULT_ENUMERATION_BOUND};
use crate::vectors::{self, bits, full_mask, rank_of_mask};

pub use crate::realization::graphic_by_realization;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest host accepted by the minor searches.
    pub max_elements: usize,
    /// Largest matroid accepted by the realization search.
    pub realization_max: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_elements: DEFAULT_ENUMERATION_BOUND, realization_max: 9 }
    }
}

impl Limits {
    pub fn with_max_elements(max_elements: usize) -> Self {
        Limits { max_elements, ..Limits::default() }
    }

    fn check(&self, m: &BinaryMatroid) -> Result<()> {
        m.check_bound(self.max_elements)
    }
}

/// `minor(M, spec)` is isomorphic to the target via `bijection`, which maps
/// the minor's labels to the target's.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    #[serde(flatten)]
    pub spec: MinorSpec,
    pub bijection: BTreeMap<ElementLabel, ElementLabel>,
}

/// A matroid prepared for repeated use as a minor-search target.
#[derive(Clone, Debug)]
pub struct MinorTarget {
    matroid: BinaryMatroid,
    profile: Profile,
}

impl MinorTarget {
    pub fn new(matroid: &BinaryMatroid) -> Self {
        MinorTarget { profile: Profile::refined_new(matroid.columns()), matroid: matroid.clone() }
    }

    pub fn matroid(&self) -> &BinaryMatroid {
        &self.matroid
    }

    fn len(&self) -> usize {
        self.matroid.len()
    }

    fn rank(&self) -> usize {
        self.matroid.rank()
    }

    /// Index map from `cols` onto the target, if isomorphic.
    fn matches(&self, cols: &[u64]) -> Option<Vec<usize>> {
        if cols.len() != self.len() {
            return None;
        }
        iso::find_isomorphism(&mut Profile::new(cols), &self.profile)
    }
}

/// All `k`-subsets of the set bits of `universe`, in lexicographic order.
pub(crate) fn subsets(universe: u64, k: usize) -> Vec<u64> {
    fn go(items: &[usize], k: usize, start: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..=items.len() - k {
            go(items, k - 1, i + 1, acc | (1 << items[i]), out);
        }
    }
    let items: Vec<usize> = bits(universe).collect();
    let mut out = Vec::new();
    if k <= items.len() {
        go(&items, k, 0, 0, &mut out);
    }
    out
}

/// Visits each distinct labeled minor of `cols` with `size` elements and
/// the given rank, as `(delete, contract, echelon columns)`. Stops when
/// `visit` returns true.
pub(crate) fn for_each_minor(
    cols: &[u64],
    size: usize,
    rank: usize,
    mut visit: impl FnMut(u64, u64, &[u64]) -> bool,
) -> bool {
    let n = cols.len();
    let r = vectors::rank(cols);
    if size > n || rank > r || rank > size || size - rank > n - r {
        return false;
    }
    let all = full_mask(n);
    let mut seen: HashSet<(u64, Vec<u64>)> = HashSet::new();
    for contract in subsets(all, r - rank) {
        if rank_of_mask(cols, contract) != (r - rank) {
            continue;
        }
        let remaining: Vec<usize> = bits(all & !contract).collect();
        let contracted = vectors::minor(cols, 0, contract);
        for keep in subsets(full_mask(remaining.len()), size) {
            if rank_of_mask(&contracted, keep) != rank {
                continue;
            }
            let picked: Vec<u64> = bits(keep).map(|i| contracted[i]).collect();
            let (canon, _) = vectors::rref(&picked);
            let kept = bits(keep).fold(0u64, |a, i| a | (1 << remaining[i]));
            if !seen.insert((kept, canon.clone())) {
                continue;
            }
            if visit(all & !contract & !kept, contract, &canon) {
                return true;
            }
        }
    }
    false
}

/// Moves contracted elements into the deletion set when that leaves the
/// minor unchanged, as happens for coloops.
fn normalize(cols: &[u64], mut delete: u64, mut contract: u64) -> (u64, u64) {
    let reference = vectors::rref(&vectors::minor(cols, delete, contract)).0;
    for c in bits(contract) {
        let (d, k) = (delete | (1 << c), contract & !(1 << c));
        if vectors::rref(&vectors::minor(cols, d, k)).0 == reference {
            delete = d;
            contract = k;
        }
    }
    (delete, contract)
}

pub(crate) fn find_minor(host: &BinaryMatroid, target: &MinorTarget) -> Option<MinorWitness> {
    let cols = host.columns();
    let mut found = None;
    for_each_minor(cols, target.len(), target.rank(), |d, c, minor| match target.matches(minor) {
        Some(map) => {
            found = Some((d, c, map));
            true
        }
        None => false,
    });
    let (delete, contract, map) = found?;
    let (delete, contract) = normalize(cols, delete, contract);
    let kept = full_mask(host.len()) & !delete & !contract;
    let bijection = bits(kept)
        .zip(map)
        .map(|(i, j)| (host.label(i).clone(), target.matroid.label(j).clone()))
        .collect();
    Some(MinorWitness { spec: MinorSpec::new(host.labels_of(delete), host.labels_of(contract)), bijection })
}

/// A minor of `host` isomorphic to `target`, if one exists.
pub fn has_minor(host: &BinaryMatroid, target: &BinaryMatroid, limits: &Limits) -> Result<Option<MinorWitness>> {
    limits.check(host)?;
    if target.len() > host.len() {
        return Err(Error::TargetLarger { target: target.len(), host: host.len() });
    }
    Ok(find_minor(host, &MinorTarget::new(target)))
}

/// Like [`has_minor`] with a prepared target.
pub fn has_minor_target(host: &BinaryMatroid, target: &MinorTarget, limits: &Limits) -> Result<Option<MinorWitness>> {
    limits.check(host)?;
    if target.len() > host.len() {
        return Ok(None);
    }
    Ok(find_minor(host, target))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Regular,
    Graphic,
    Cographic,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::Regular => "regular",
            Property::Graphic => "graphic",
            Property::Cographic => "cographic",
        }
    }

    /// Catalog names of the excluded minors beyond `F7` and `F7dual`.
    fn extra_excluded(self) -> &'static [&'static str] {
        match self {
            Property::Regular => &[],
            Property::Graphic => &["K33dual", "K5dual"],
            Property::Cographic => &["K33", "K5"],
        }
    }
}

impl Serialize for Property {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// An excluded minor found in a matroid, named by its catalog entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExcludedMinor {
    pub minor: &'static str,
    pub witness: MinorWitness,
}

/// Prepared minor target for a catalog entry, built once per process.
pub fn catalog_target(name: &str) -> Option<&'static MinorTarget> {
    static CACHE: OnceLock<Vec<(&'static str, MinorTarget)>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        catalog::NAMES
            .into_iter()
            .map(|n| (n, MinorTarget::new(&catalog::matroid(n).expect("catalog entry"))))
            .collect()
    });
    cache.iter().find(|(n, _)| *n == name).map(|(_, t)| t)
}

/// Canonical `'static` spelling of a catalog name.
pub(crate) fn static_name(name: &str) -> Option<&'static str> {
    catalog::NAMES.iter().copied().find(|n| *n == name)
}

fn first_excluded(m: &BinaryMatroid, names: &[&'static str]) -> Option<ExcludedMinor> {
    names.iter().find_map(|&name| {
        let target = catalog_target(name).expect("catalog name");
        if target.len() > m.len() {
            return None;
        }
        find_minor(m, target).map(|witness| ExcludedMinor { minor: name, witness })
    })
}

/// An excluded minor for `property` contained in `m`, or `None` when `m`
/// has the property.
pub fn excluded_minor(m: &BinaryMatroid, property: Property, limits: &Limits) -> Result<Option<ExcludedMinor>> {
    limits.check(m)?;
    let mut names = vec!["F7", "F7dual"];
    names.extend_from_slice(property.extra_excluded());
    Ok(first_excluded(m, &names))
}

pub fn has_property(m: &BinaryMatroid, property: Property, limits: &Limits) -> Result<bool> {
    Ok(excluded_minor(m, property, limits)?.is_none())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassificationWitnesses {
    pub regular: Option<ExcludedMinor>,
    pub graphic: Option<ExcludedMinor>,
    pub cographic: Option<ExcludedMinor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationFlags {
    pub regular: bool,
    pub graphic: bool,
    pub cographic: bool,
    /// The excluded minor behind each false flag.
    pub witnesses: ClassificationWitnesses,
}

impl ClassificationFlags {
    pub fn get(&self, property: Property) -> bool {
        match property {
            Property::Regular => self.regular,
            Property::Graphic => self.graphic,
            Property::Cographic => self.cographic,
        }
    }
}

pub fn classify(m: &BinaryMatroid, limits: &Limits) -> Result<ClassificationFlags> {
    limits.check(m)?;
    let regular = first_excluded(m, &["F7", "F7dual"]);
    let (graphic, cographic) = match &regular {
        Some(w) => (Some(w.clone()), Some(w.clone())),
        None => (
            first_excluded(m, Property::Graphic.extra_excluded()),
            first_excluded(m, Property::Cographic.extra_excluded()),
        ),
    };
    Ok(ClassificationFlags {
        regular: regular.is_none(),
        graphic: graphic.is_none(),
        cographic: cographic.is_none(),
        witnesses: ClassificationWitnesses { regular, graphic, cographic },
    })
}

/// Which clause of the tilde definition a witness satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TildeCondition {
    /// `N \ {x, y}` is the target.
    DeletePair,
    /// `{x, y}` is a 2-cocircuit and `N / x` is the target.
    ContractOne,
    /// `{x, y}` is a 2-cocircuit and `N / {x, y}` is the target.
    ContractPair,
}

/// A minor `N = minor(M, spec)` and a pair of its elements meeting one of
/// the tilde conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TildeWitness {
    pub condition: TildeCondition,
    pub spec: MinorSpec,
    pub x: ElementLabel,
    pub y: ElementLabel,
}

fn series_pair(cols: &[u64], rank: usize, i: usize, j: usize) -> bool {
    let all = full_mask(cols.len());
    rank > 0
        && rank_of_mask(cols, all & !(1 << i)) == rank
        && rank_of_mask(cols, all & !(1 << j)) == rank
        && rank_of_mask(cols, all & !(1 << i) & !(1 << j)) == rank - 1
}

fn remove_pair(cols: &[u64], i: usize, j: usize) -> Vec<u64> {
    cols.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &c)| c).collect()
}

pub(crate) fn find_tilde_minor(m: &BinaryMatroid, target: &MinorTarget) -> Option<TildeWitness> {
    let (nf, rf) = (target.len(), target.rank());
    let shapes = [(nf + 2, rf), (nf + 2, rf + 1), (nf + 2, rf + 2), (nf + 1, rf + 1)];
    let cols = m.columns();
    let mut found = None;
    for (size, rank) in shapes {
        let hit = for_each_minor(cols, size, rank, |d, c, minor| {
            let hit = (0..size).flat_map(|i| (i + 1..size).map(move |j| (i, j))).find_map(|(i, j)| {
                let series = series_pair(minor, rank, i, j);
                let condition = if size == nf + 2 {
                    if rank_of_mask(minor, full_mask(size) & !(1 << i) & !(1 << j)) == rf
                        && target.matches(&remove_pair(minor, i, j)).is_some()
                    {
                        Some(TildeCondition::DeletePair)
                    } else if rank == rf + 2
                        && series
                        && target.matches(&vectors::minor(minor, 0, (1 << i) | (1 << j))).is_some()
                    {
                        Some(TildeCondition::ContractPair)
                    } else {
                        None
                    }
                } else if series && target.matches(&vectors::minor(minor, 0, 1 << i)).is_some() {
                    Some(TildeCondition::ContractOne)
                } else {
                    None
                };
                condition.map(|cond| (cond, i, j))
            });
            if let Some((cond, i, j)) = hit {
                let kept: Vec<usize> = bits(full_mask(m.len()) & !d & !c).collect();
                found = Some(TildeWitness {
                    condition: cond,
                    spec: MinorSpec::new(m.labels_of(d), m.labels_of(c)),
                    x: m.label(kept[i]).clone(),
                    y: m.label(kept[j]).clone(),
                });
                true
            } else {
                false
            }
        });
        if hit {
            break;
        }
    }
    found
}

/// A minor of `m` in the tilde class of `f`, if any.
pub fn tilde_minor(m: &BinaryMatroid, f: &BinaryMatroid, limits: &Limits) -> Result<Option<TildeWitness>> {
    limits.check(m)?;
    Ok(find_tilde_minor(m, &MinorTarget::new(f)))
}

pub fn has_tilde_minor(m: &BinaryMatroid, f: &BinaryMatroid, limits: &Limits) -> Result<bool> {
    Ok(tilde_minor(m, f, limits)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitMatrix;
    use crate::matroid::ElementLabel;

    fn lim() -> Limits {
        Limits::default()
    }

    fn names(set: &std::collections::BTreeSet<ElementLabel>) -> Vec<&str> {
        set.iter().map(|l| l.as_str()).collect()
    }

    fn check_witness(host: &BinaryMatroid, target: &BinaryMatroid, w: &MinorWitness) {
        let minor = host.minor(&w.spec).unwrap();
        let map = &w.bijection;
        assert_eq!(map.len(), target.len());
        let relabeled: Vec<ElementLabel> = minor.elements().iter().map(|l| map[l].clone()).collect();
        let image = minor.relabeled(relabeled).unwrap();
        assert!(image.same_matroid_by_row_space(target));
    }

    #[test]
    fn subsets_in_order() {
        assert_eq!(subsets(0b1011, 2), vec![0b0011, 0b1001, 0b1010]);
        assert_eq!(subsets(0b11, 0), vec![0]);
        assert!(subsets(0b1, 2).is_empty());
    }

    #[test]
    fn identity_minor() {
        let r = catalog::r10();
        let w = has_minor(&r, &r, &lim()).unwrap().unwrap();
        assert!(w.spec.is_empty());
        check_witness(&r, &r, &w);
    }

    #[test]
    fn r10_contains_g1_by_contracting_a_pair() {
        let r = catalog::r10();
        let g1 = catalog::matroid("G1").unwrap();
        let w = has_minor(&r, &g1, &lim()).unwrap().unwrap();
        assert!(w.spec.delete.is_empty());
        assert_eq!(w.spec.contract.len(), 2);
        check_witness(&r, &g1, &w);
    }

    #[test]
    fn ma1_contains_r10_by_deleting_the_coloop() {
        let a1 = catalog::ma1();
        let r = catalog::r10();
        let w = has_minor(&a1, &r, &lim()).unwrap().unwrap();
        assert_eq!(names(&w.spec.delete), ["11"]);
        assert!(w.spec.contract.is_empty());
        check_witness(&a1, &r, &w);
    }

    #[test]
    fn minor_errors() {
        let f7 = catalog::f7();
        let k4 = catalog::matroid("K4").unwrap();
        assert!(matches!(has_minor(&k4, &f7, &lim()), Err(Error::TargetLarger { .. })));
        assert!(matches!(
            has_minor(&catalog::r10(), &k4, &Limits::with_max_elements(8)),
            Err(Error::EnumerationBound { .. })
        ));
    }

    #[test]
    fn classification_examples() {
        let k5 = classify(&catalog::matroid("K5").unwrap(), &lim()).unwrap();
        assert!(k5.regular && k5.graphic && !k5.cographic);
        let w = k5.witnesses.cographic.unwrap();
        assert_eq!(w.minor, "K5");
        assert!(w.witness.spec.is_empty());

        let r10 = classify(&catalog::r10(), &lim()).unwrap();
        assert!(r10.regular && !r10.graphic && !r10.cographic);

        let f7 = classify(&catalog::f7(), &lim()).unwrap();
        assert!(!f7.regular && !f7.graphic && !f7.cographic);
        assert_eq!(f7.witnesses.regular.unwrap().minor, "F7");
        assert!(!has_property(&catalog::matroid("F7dual").unwrap(), Property::Regular, &lim()).unwrap());
    }

    fn with_coloops(m: &BinaryMatroid, extra: usize) -> BinaryMatroid {
        let base = m.representation();
        let (r, n) = (base.row_count(), base.col_count());
        let mut rows = vec![vec![0u8; n + extra]; r + extra];
        for (i, row) in rows.iter_mut().enumerate().take(r) {
            for (j, cell) in row.iter_mut().enumerate().take(n) {
                *cell = base.get(i, j) as u8;
            }
        }
        for k in 0..extra {
            rows[r + k][n + k] = 1;
        }
        let mut labels = m.elements().to_vec();
        labels.extend((0..extra).map(|k| ElementLabel::new(format!("z{k}")).unwrap()));
        BinaryMatroid::from_matrix(&BitMatrix::from_rows(&rows).unwrap(), labels).unwrap()
    }

    #[test]
    fn tilde_by_two_coloops() {
        let k4 = catalog::matroid("K4").unwrap();
        let host = with_coloops(&k4, 2);
        let w = tilde_minor(&host, &k4, &lim()).unwrap().unwrap();
        assert_eq!(w.condition, TildeCondition::DeletePair);
        assert!(!has_tilde_minor(&k4, &k4, &lim()).unwrap());
    }

    #[test]
    fn tilde_by_series_coextension() {
        // subdivide one edge of K5: the new edge is in series with the old one
        let k5 = catalog::get("K5").unwrap();
        let g = k5.graph().unwrap();
        let mut edges: Vec<(String, usize, usize)> =
            g.edges().iter().map(|e| (e.label.to_string(), e.u, e.v)).collect();
        edges[0].2 = 5;
        edges.push(("s".into(), 5, 1));
        let refs: Vec<(&str, usize, usize)> = edges.iter().map(|(l, u, v)| (l.as_str(), *u, *v)).collect();
        let host = BinaryMatroid::from_graph(&crate::graph::Multigraph::from_edges(6, &refs).unwrap());
        assert!(host.is_2_cocircuit("01", "s").unwrap());
        let w = tilde_minor(&host, &k5.matroid(), &lim()).unwrap().unwrap();
        assert_eq!(w.condition, TildeCondition::ContractOne);
        assert!(w.spec.is_empty());
    }
}
