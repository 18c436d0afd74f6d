//! Decision procedures for whether every splitting of a matroid stays
//! graphic or cographic, checked two ways: by excluded minors, and by
//! splitting on every pair and classifying the result.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matroid::BinaryMatroid;
use crate::recognition::{
    self, catalog_target, static_name, ExcludedMinor, Limits, MinorWitness, Property, TildeWitness,
};
use crate::splitting::{split_by_index, SplitPair};
use crate::catalog;

/// Largest matroid accepted by the all-pairs oracle.
pub const ORACLE_MAX_ELEMENTS: usize = 12;

/// Input class and target property of a characterization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    GraphicToGraphic,
    CographicToCographic,
    GraphicToCographic,
    CographicToGraphic,
    RegularToGraphic,
    RegularToCographic,
}

impl CaseId {
    pub const ALL: [CaseId; 6] = [
        CaseId::GraphicToGraphic,
        CaseId::CographicToCographic,
        CaseId::GraphicToCographic,
        CaseId::CographicToGraphic,
        CaseId::RegularToGraphic,
        CaseId::RegularToCographic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::GraphicToGraphic => "graphic-graphic",
            CaseId::CographicToCographic => "cographic-cographic",
            CaseId::GraphicToCographic => "graphic-cographic",
            CaseId::CographicToGraphic => "cographic-graphic",
            CaseId::RegularToGraphic => "regular-graphic",
            CaseId::RegularToCographic => "regular-cographic",
        }
    }

    pub fn input(self) -> Property {
        match self {
            CaseId::GraphicToGraphic | CaseId::GraphicToCographic => Property::Graphic,
            CaseId::CographicToCographic | CaseId::CographicToGraphic => Property::Cographic,
            CaseId::RegularToGraphic | CaseId::RegularToCographic => Property::Regular,
        }
    }

    pub fn target(self) -> Property {
        match self {
            CaseId::GraphicToGraphic | CaseId::CographicToGraphic | CaseId::RegularToGraphic => Property::Graphic,
            _ => Property::Cographic,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseId::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::UnknownName(s.to_owned()))
    }
}

impl Serialize for CaseId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A characterization: the forbidden minors and the tilde exclusions the
/// input must avoid, all given by catalog name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCase {
    pub id: CaseId,
    pub forbidden: Vec<&'static str>,
    pub tilde_exclusions: Vec<&'static str>,
}

impl TheoremCase {
    pub fn new(id: CaseId) -> Self {
        let (forbidden, tilde): (&[&'static str], &[&'static str]) = match id {
            CaseId::GraphicToGraphic => (&["G1", "G2", "G3"], &[]),
            CaseId::CographicToCographic => (&["G1", "G2"], &[]),
            CaseId::GraphicToCographic => (&["G1", "G2", "G5"], &["K5", "K33"]),
            CaseId::CographicToGraphic => (&["G1", "G2"], &["K5dual", "K33dual"]),
            CaseId::RegularToGraphic => (&["G1", "G2", "K5"], &["K5dual", "K33dual"]),
            CaseId::RegularToCographic => (&["G1", "G2", "G3"], &["K5", "K33"]),
        };
        TheoremCase { id, forbidden: forbidden.to_vec(), tilde_exclusions: tilde.to_vec() }
    }

    /// The same case with another forbidden set.
    pub fn with_forbidden(mut self, names: &[&str]) -> Result<Self> {
        self.forbidden = names
            .iter()
            .map(|n| static_name(n).ok_or_else(|| Error::UnknownName((*n).to_owned())))
            .collect::<Result<_>>()?;
        Ok(self)
    }

    pub fn input(&self) -> Property {
        self.id.input()
    }

    pub fn target(&self) -> Property {
        self.id.target()
    }

    /// Why `m` falls outside the case, if it does: a missing input class
    /// is an error, a tilde minor is reported as a violated precondition.
    pub fn precondition(&self, m: &BinaryMatroid, limits: &Limits) -> Result<PreconditionStatus> {
        if let Some(excluded) = recognition::excluded_minor(m, self.input(), limits)? {
            return Err(Error::InputClass {
                required: self.input().as_str(),
                reason: format!("the matroid has a minor isomorphic to {}", excluded.minor),
            });
        }
        for &name in &self.tilde_exclusions {
            let target = catalog_target(name).expect("catalog name");
            if let Some(witness) = recognition::find_tilde_minor(m, target) {
                return Ok(PreconditionStatus::Violated { excluded: name, witness });
            }
        }
        Ok(PreconditionStatus::Passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum PreconditionStatus {
    Passed,
    /// A minor in the tilde class of `excluded`; the characterization says
    /// nothing about such inputs.
    Violated { excluded: &'static str, witness: TildeWitness },
    /// Not checked (the oracle route has no precondition).
    NotApplicable,
}

impl PreconditionStatus {
    pub fn passed(&self) -> bool {
        !matches!(self, PreconditionStatus::Violated { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    ForbiddenMinors,
    AllSplits,
}

/// A pair whose splitting lacks the property, with the excluded minor found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailingSplit {
    pub pair: SplitPair,
    pub property: Property,
    pub excluded: ExcludedMinor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenMinor {
    pub minor: &'static str,
    pub witness: MinorWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecisionReport {
    pub verdict: bool,
    pub route: Route,
    pub forbidden_minor: Option<ForbiddenMinor>,
    pub failing_split: Option<FailingSplit>,
    pub precondition: PreconditionStatus,
}

/// Splits `m` on every pair in element order and reports the first pair
/// whose splitting lacks `property`.
pub fn oracle_all_splits(m: &BinaryMatroid, property: Property, limits: &Limits) -> Result<DecisionReport> {
    m.check_bound(ORACLE_MAX_ELEMENTS.min(limits.max_elements))?;
    let n = m.len();
    let mut failing = None;
    'pairs: for i in 0..n {
        for j in i + 1..n {
            let s = split_by_index(m, i, j);
            if let Some(excluded) = recognition::excluded_minor(&s, property, limits)? {
                let pair = SplitPair { x: m.label(i).clone(), y: m.label(j).clone() };
                failing = Some(FailingSplit { pair, property, excluded });
                break 'pairs;
            }
        }
    }
    Ok(DecisionReport {
        verdict: failing.is_none(),
        route: Route::AllSplits,
        forbidden_minor: None,
        failing_split: failing,
        precondition: PreconditionStatus::NotApplicable,
    })
}

/// First member of `names` that is a minor of `m`.
fn first_forbidden(m: &BinaryMatroid, names: &[&'static str]) -> Option<ForbiddenMinor> {
    names.iter().find_map(|&name| {
        let target = catalog_target(name).expect("catalog name");
        recognition::has_minor_target(m, target, &Limits::with_max_elements(usize::MAX))
            .ok()
            .flatten()
            .map(|witness| ForbiddenMinor { minor: name, witness })
    })
}

/// Decides the case for `m` from its forbidden minors.
pub fn decide_by_forbidden_minors(m: &BinaryMatroid, case: &TheoremCase, limits: &Limits) -> Result<DecisionReport> {
    m.check_bound(limits.max_elements)?;
    let precondition = case.precondition(m, limits)?;
    let forbidden = first_forbidden(m, &case.forbidden);
    Ok(DecisionReport {
        verdict: forbidden.is_none(),
        route: Route::ForbiddenMinors,
        forbidden_minor: forbidden,
        failing_split: None,
        precondition,
    })
}

/// Outcome of [`verify_minimality`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub name: &'static str,
    pub case: CaseId,
    /// Some splitting of the entry lacks the target property.
    pub has_bad_split: bool,
    pub bad_split: Option<FailingSplit>,
    /// Every single-element deletion and contraction inside the case has
    /// only good splittings.
    pub minors_all_good: bool,
    /// First offending one-element minor, as `("delete" | "contract", label)`.
    pub offending_minor: Option<(&'static str, String)>,
    /// One-element minors skipped because they fall outside the case.
    pub skipped_minors: usize,
}

impl MinimalityReport {
    pub fn passed(&self) -> bool {
        self.has_bad_split && self.minors_all_good
    }
}

/// Checks that a catalog entry is a minor-minimal obstruction for the case.
pub fn verify_minimality(name: &str, case: &TheoremCase, limits: &Limits) -> Result<MinimalityReport> {
    let name = static_name(name).ok_or_else(|| Error::UnknownName(name.to_owned()))?;
    let m = catalog::matroid(name)?;
    m.check_bound(ORACLE_MAX_ELEMENTS)?;
    let property = case.target();
    let top = oracle_all_splits(&m, property, limits)?;

    let mut offending = None;
    let mut skipped = 0;
    'elements: for i in 0..m.len() {
        for (op, minor) in [("delete", m.minor_by_mask(1 << i, 0)), ("contract", m.minor_by_mask(0, 1 << i))] {
            match case.precondition(&minor, limits) {
                Ok(PreconditionStatus::Violated { .. }) | Err(Error::InputClass { .. }) => {
                    skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
                Ok(_) => {}
            }
            if !oracle_all_splits(&minor, property, limits)?.verdict {
                offending = Some((op, m.label(i).to_string()));
                break 'elements;
            }
        }
    }
    Ok(MinimalityReport {
        name,
        case: case.id,
        has_bad_split: !top.verdict,
        bad_split: top.failing_split,
        minors_all_good: offending.is_none(),
        offending_minor: offending,
        skipped_minors: skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{catalog, BitMatrix};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn case_ids_round_trip() {
        for id in CaseId::ALL {
            assert_eq!(id.as_str().parse::<CaseId>().unwrap(), id);
        }
        assert!("1.3".parse::<CaseId>().is_err());
        let c = TheoremCase::new(CaseId::RegularToCographic);
        assert_eq!(c.forbidden, ["G1", "G2", "G3"]);
        assert_eq!(c.tilde_exclusions, ["K5", "K33"]);
        assert!(c.clone().with_forbidden(&["G1", "nope"]).is_err());
        assert_eq!(c.with_forbidden(&["G1", "G2", "MA1"]).unwrap().forbidden, ["G1", "G2", "MA1"]);
    }

    #[test]
    fn k4_splits_are_graphic() {
        let k4 = catalog::matroid("K4").unwrap();
        assert!(oracle_all_splits(&k4, Property::Graphic, &lim()).unwrap().verdict);
        let d = decide_by_forbidden_minors(&k4, &TheoremCase::new(CaseId::GraphicToGraphic), &lim()).unwrap();
        assert!(d.verdict);
        assert_eq!(d.precondition, PreconditionStatus::Passed);
    }

    #[test]
    fn matrix_b_has_a_bad_split() {
        let r = oracle_all_splits(&catalog::matrix_b(), Property::Graphic, &lim()).unwrap();
        assert!(!r.verdict);
        assert!(r.failing_split.is_some());
    }

    #[test]
    fn series_pairs_split_to_themselves() {
        // a circuit of size 4: every pair is a 2-cocircuit
        let m = BinaryMatroid::from_matrix_numbered(
            &BitMatrix::from_rows(&[[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]]).unwrap(),
        );
        for i in 0..4 {
            for j in i + 1..4 {
                assert!(m.is_2_cocircuit_idx(i, j));
                assert_eq!(split_by_index(&m, i, j), m);
            }
        }
        assert!(oracle_all_splits(&m, Property::Graphic, &lim()).unwrap().verdict);
    }

    #[test]
    fn r10_decision() {
        let d = decide_by_forbidden_minors(&catalog::r10(), &TheoremCase::new(CaseId::RegularToGraphic), &lim())
            .unwrap();
        assert!(!d.verdict);
        let w = d.forbidden_minor.unwrap();
        assert_eq!(w.minor, "G1");
        assert!(w.witness.spec.delete.is_empty());
        assert_eq!(w.witness.spec.contract.len(), 2);
    }

    #[test]
    fn g3_decision_and_input_errors() {
        let g3 = catalog::matroid("G3").unwrap();
        let d = decide_by_forbidden_minors(&g3, &TheoremCase::new(CaseId::RegularToCographic), &lim()).unwrap();
        assert!(!d.verdict);
        let w = d.forbidden_minor.unwrap();
        assert_eq!(w.minor, "G3");
        assert!(w.witness.spec.is_empty());
        let err = decide_by_forbidden_minors(&catalog::f7(), &TheoremCase::new(CaseId::RegularToGraphic), &lim());
        assert!(matches!(err, Err(Error::InputClass { .. })));
        let err = decide_by_forbidden_minors(&g3, &TheoremCase::new(CaseId::CographicToGraphic), &lim());
        assert!(matches!(err, Err(Error::InputClass { .. })));
    }

    #[test]
    fn oracle_size_bound() {
        let big = BinaryMatroid::from_matrix_numbered(&BitMatrix::identity(13));
        assert!(matches!(oracle_all_splits(&big, Property::Graphic, &lim()), Err(Error::EnumerationBound { .. })));
    }
}
