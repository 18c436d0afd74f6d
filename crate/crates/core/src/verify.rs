//! The reproduction suite: each criterion is an exhaustive or seeded check
//! with a wall-clock budget, reported as one [`CriterionResult`].

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog;
use crate::corpus;
use crate::error::Result;
use crate::graph::Multigraph;
use crate::matroid::{BinaryMatroid, CircuitKind, ElementLabel, MinorSpec};
use crate::recognition::{self, classify, graphic_by_realization, has_minor, Limits, MinorWitness};
use crate::splitting::{adjoin_pair_row, split, split_graph, split_representation, SplitPair};
use crate::theorems::{self, CaseId, PreconditionStatus, TheoremCase};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub limits: Limits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: DEFAULT_SEED, limits: Limits::default() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub millis: u128,
    pub budget_secs: u64,
    pub detail: String,
}

pub const CRITERIA: [(u8, &str, u64); 9] = [
    (1, "R10 / {4,5} equals matrix B and M(G1)", 1),
    (2, "dual identities for G6 and G7", 1),
    (3, "catalog minor and isomorphism identities", 60),
    (4, "classification agrees with graph realization", 600),
    (5, "splitting observations on random matroids", 300),
    (6, "forbidden minors agree with all-pairs splitting", 900),
    (7, "minimality and redundancy of forbidden minors", 600),
    (8, "planted tilde minors survive some splitting", 600),
    (9, "graph splitting matches matroid splitting", 120),
];

/// A check either passes with a summary or fails with the reason.
type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn run(id: u8, cfg: &VerifyConfig) -> CriterionResult {
    let (_, title, budget) = CRITERIA.iter().copied().find(|c| c.0 == id).expect("criterion id 1..=9");
    let start = Instant::now();
    let outcome = match id {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(cfg),
        4 => criterion_4(cfg),
        5 => criterion_5(cfg),
        6 => criterion_6(cfg),
        7 => criterion_7(cfg),
        8 => criterion_8(cfg),
        _ => criterion_9(),
    };
    let elapsed = start.elapsed();
    let in_time = elapsed <= Duration::from_secs(budget);
    let (passed, mut detail) = match outcome {
        Ok(s) => (in_time, s),
        Err(s) => (false, s),
    };
    if !in_time {
        detail = format!("over budget ({:.1}s > {budget}s); {detail}", elapsed.as_secs_f64());
    }
    CriterionResult { id, title, passed, millis: elapsed.as_millis(), budget_secs: budget, detail }
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionResult> {
    CRITERIA.iter().map(|c| run(c.0, cfg)).collect()
}

/// Circuits of `a` carried by `map` are exactly the circuits of `b`.
fn circuits_correspond(
    a: &BinaryMatroid,
    b: &BinaryMatroid,
    map: &std::collections::BTreeMap<ElementLabel, ElementLabel>,
) -> Result<bool> {
    let image: BTreeSet<BTreeSet<ElementLabel>> = a
        .circuits(CircuitKind::Circuit)?
        .into_iter()
        .map(|c| c.iter().map(|l| map[l].clone()).collect())
        .collect();
    let target: BTreeSet<BTreeSet<ElementLabel>> = b.circuits(CircuitKind::Circuit)?.into_iter().collect();
    Ok(image == target)
}

fn iso_with_circuits(a: &BinaryMatroid, b: &BinaryMatroid) -> Result<bool> {
    match a.isomorphic(b)? {
        Some(map) => circuits_correspond(a, b, &map),
        None => Ok(false),
    }
}

fn witness_holds(host: &BinaryMatroid, target: &BinaryMatroid, w: &MinorWitness) -> Result<bool> {
    let minor = host.minor(&w.spec)?;
    circuits_correspond(&minor, target, &w.bijection)
}

fn criterion_1() -> Outcome {
    let contracted = lift(catalog::r10().contract(&["4", "5"]))?;
    let b = catalog::matrix_b();
    let g1 = lift(catalog::matroid("G1"))?;
    ensure(contracted.elements() == b.elements(), || "labels differ from 1,2,3,6,7,8,9,10".into())?;
    let standard = contracted.representation().standard_form().unpermuted();
    ensure(lift(standard.row_space_equal(&b.representation()))?, || "row space differs from B".into())?;
    let own: BTreeSet<_> = lift(contracted.circuits(CircuitKind::Circuit))?.into_iter().collect();
    let of_b: BTreeSet<_> = lift(b.circuits(CircuitKind::Circuit))?.into_iter().collect();
    ensure(own == of_b, || "circuit families of R10/{4,5} and B differ".into())?;
    ensure(lift(iso_with_circuits(&contracted, &g1))?, || "R10/{4,5} is not isomorphic to M(G1)".into())?;
    Ok(format!("{} circuits match B and M(G1)", own.len()))
}

fn criterion_2() -> Outcome {
    for (graph, image) in [("G6", "G1"), ("G7", "G2")] {
        let d = lift(catalog::matroid(graph))?.dual();
        let m = lift(catalog::matroid(image))?;
        ensure(lift(iso_with_circuits(&d, &m))?, || format!("dual of M({graph}) is not M({image})"))?;
    }
    Ok("M*(G6) = M(G1), M*(G7) = M(G2)".into())
}

fn criterion_3(cfg: &VerifyConfig) -> Outcome {
    let m = |n: &str| lift(catalog::matroid(n));
    ensure(lift(iso_with_circuits(&m("G3")?, &m("K5")?))?, || "M(G3) is not M(K5)".into())?;
    for (host, target) in [("G4", "G1"), ("MA1", "R10"), ("MA1", "G1")] {
        let (h, t) = (m(host)?, m(target)?);
        let w = lift(has_minor(&h, &t, &cfg.limits))?.ok_or_else(|| format!("{target} is not a minor of {host}"))?;
        ensure(lift(witness_holds(&h, &t, &w))?, || format!("bad witness for {target} in {host}"))?;
    }
    Ok("G3 = K5; G1 <= G4; R10 <= MA1; G1 <= MA1".into())
}

/// Every matroid used by the classification and theorem sweeps.
fn sweep_corpus(max_elements: usize) -> Vec<(String, BinaryMatroid)> {
    let mut out: Vec<(String, BinaryMatroid)> = Vec::new();
    for (k, g) in corpus::connected_multigraphs(8, 5).into_iter().enumerate() {
        let m = BinaryMatroid::from_graph(&g);
        out.push((format!("graph#{k}"), m.clone()));
        out.push((format!("cograph#{k}"), m.dual()));
    }
    for (k, m) in corpus::r10_minors(1).into_iter().enumerate() {
        out.push((format!("r10-minor#{k}"), m));
    }
    for name in catalog::NAMES {
        out.push((name.to_string(), catalog::matroid(name).expect("catalog entry")));
    }
    out.retain(|(_, m)| m.len() <= max_elements);
    out
}

fn criterion_4(cfg: &VerifyConfig) -> Outcome {
    let r10 = lift(classify(&catalog::r10(), &cfg.limits))?;
    ensure(r10.regular && !r10.graphic && !r10.cographic, || "classify(R10) is wrong".into())?;
    let f7 = lift(classify(&catalog::f7(), &cfg.limits))?;
    ensure(!f7.regular && !f7.graphic && !f7.cographic, || "classify(F7) is wrong".into())?;

    let cap = cfg.limits.realization_max;
    let mut items = sweep_corpus(cap);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for (k, m) in corpus::random_matroids(&mut rng, 400, cap).into_iter().enumerate() {
        items.push((format!("random#{k}"), m));
    }
    let failures: Vec<String> = items
        .par_iter()
        .filter_map(|(name, m)| {
            let check = || -> Result<bool> {
                let by_minors = classify(m, &cfg.limits)?.graphic;
                let realized = graphic_by_realization(m, &cfg.limits)?;
                let certified = match &realized {
                    Some(g) => BinaryMatroid::from_graph(g).same_matroid(m)?,
                    None => true,
                };
                Ok(certified && by_minors == realized.is_some())
            };
            match check() {
                Ok(true) => None,
                Ok(false) => Some(name.clone()),
                Err(e) => Some(format!("{name}: {e}")),
            }
        })
        .collect();
    ensure(failures.is_empty(), || format!("{} disagreements, first: {}", failures.len(), failures[0]))?;
    Ok(format!("{} matroids with at most {cap} elements agree", items.len()))
}

/// A standard representation of `m` on a random basis, in element order.
fn other_standard_form<R: Rng>(m: &BinaryMatroid, rng: &mut R) -> crate::gf2::BitMatrix {
    let a = m.representation();
    let mut order: Vec<usize> = (0..m.len()).collect();
    order.shuffle(rng);
    let permuted = a.select_columns(&order).standard_form().unpermuted();
    let mut back = vec![0; order.len()];
    for (pos, &col) in order.iter().enumerate() {
        back[col] = pos;
    }
    permuted.select_columns(&back)
}

fn criterion_5(cfg: &VerifyConfig) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 5);
    let matroids = corpus::random_matroids(&mut rng, 600, 8);
    let seeds: Vec<u64> = (0..matroids.len()).map(|_| rng.gen()).collect();
    let checked: std::result::Result<Vec<usize>, String> = matroids
        .par_iter()
        .zip(seeds)
        .map(|(m, seed)| observations(m, &mut ChaCha8Rng::seed_from_u64(seed)))
        .collect();
    let pairs: usize = checked?.iter().sum();
    Ok(format!("{} matroids, {pairs} pairs", matroids.len()))
}

fn observations<R: Rng>(m: &BinaryMatroid, rng: &mut R) -> std::result::Result<usize, String> {
    let fail = |what: &str, p: &SplitPair| format!("{what} fails for {{{}, {}}} in\n{}", p.x, p.y, m.to_text());
    let labels: Vec<String> = m.elements().iter().map(|l| l.to_string()).collect();
    let (_, coloops) = m.loops_coloops();
    let mut pairs = 0;
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            let p = lift(SplitPair::parse(&labels[i], &labels[j]))?;
            let s = lift(split(m, &p))?;
            let (_, split_coloops) = s.loops_coloops();
            if coloops.contains(&p.x) || coloops.contains(&p.y) {
                ensure(split_coloops.contains(&p.x) && split_coloops.contains(&p.y), || fail("(i)", &p))?;
            } else {
                ensure(lift(s.is_2_cocircuit(&labels[i], &labels[j]))?, || fail("(ii)", &p))?;
            }
            if lift(m.is_2_cocircuit(&labels[i], &labels[j]))? {
                ensure(s == *m, || fail("(iii)", &p))?;
            }
            // the same split from a different standard representation
            let alt = adjoin_pair_row(&other_standard_form(m, rng), i, j);
            let alt = lift(BinaryMatroid::from_matrix(&alt, m.elements().to_vec()))?;
            ensure(lift(alt.same_matroid(&s))?, || fail("well-definedness", &p))?;
            ensure(lift(split_representation(m, &p))?.rank() == s.rank(), || fail("representation rank", &p))?;
            // splitting commutes with minors avoiding x and y
            let mut delete = BTreeSet::new();
            let mut contract = BTreeSet::new();
            for (k, l) in m.elements().iter().enumerate() {
                if k != i && k != j {
                    match rng.gen_range(0..3) {
                        0 => {
                            delete.insert(l.clone());
                        }
                        1 => {
                            contract.insert(l.clone());
                        }
                        _ => {}
                    }
                }
            }
            let spec = MinorSpec { delete, contract };
            let lhs = lift(split(&lift(m.minor(&spec))?, &p))?;
            let rhs = lift(s.minor(&spec))?;
            ensure(lhs == rhs, || fail("minor commutation", &p))?;
            pairs += 1;
        }
    }
    Ok(pairs)
}

/// Per-case counts from criterion 6.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CaseTally {
    pub case: String,
    pub compared: usize,
    pub skipped_tilde: usize,
    pub disagreements: Vec<String>,
}

/// Case index, decided verdict (None when a tilde minor excludes the
/// input) and a disagreement description.
type SweepRow = (usize, Option<bool>, Option<String>);

/// Compares both deciders for each case on every corpus matroid in the
/// case's input class.
pub fn theorem_sweep(cases: &[TheoremCase], limits: &Limits) -> Result<Vec<CaseTally>> {
    let items = sweep_corpus(theorems::ORACLE_MAX_ELEMENTS);
    let per_item: Vec<Vec<SweepRow>> = items
        .par_iter()
        .map(|(name, m)| -> Result<Vec<SweepRow>> {
            let flags = classify(m, limits)?;
            let mut oracle = std::collections::HashMap::new();
            let mut rows = Vec::new();
            for (c, case) in cases.iter().enumerate() {
                if !flags.get(case.input()) {
                    continue;
                }
                let decided = theorems::decide_by_forbidden_minors(m, case, limits)?;
                if let PreconditionStatus::Violated { .. } = decided.precondition {
                    rows.push((c, None, None));
                    continue;
                }
                let property = case.target();
                let verdict = match oracle.get(&property) {
                    Some(&v) => v,
                    None => {
                        let v = theorems::oracle_all_splits(m, property, limits)?.verdict;
                        oracle.insert(property, v);
                        v
                    }
                };
                let disagreement = (decided.verdict != verdict).then(|| {
                    format!("{name} (decided {}, oracle {verdict})", decided.verdict)
                });
                rows.push((c, Some(decided.verdict), disagreement));
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;
    let mut tallies: Vec<CaseTally> =
        cases.iter().map(|c| CaseTally { case: case_label(c), ..CaseTally::default() }).collect();
    for rows in per_item {
        for (c, verdict, disagreement) in rows {
            match verdict {
                None => tallies[c].skipped_tilde += 1,
                Some(_) => tallies[c].compared += 1,
            }
            tallies[c].disagreements.extend(disagreement);
        }
    }
    Ok(tallies)
}

fn case_label(case: &TheoremCase) -> String {
    if *case == TheoremCase::new(case.id) {
        case.id.to_string()
    } else {
        format!("{} with {{{}}}", case.id, case.forbidden.join(","))
    }
}

fn describe(tallies: &[CaseTally]) -> String {
    tallies
        .iter()
        .map(|t| {
            let mut s = format!("{}: {} compared, {} tilde-skipped, {} disagree", t.case, t.compared, t.skipped_tilde, t.disagreements.len());
            if !t.disagreements.is_empty() {
                s.push_str(&format!(" [{}]", t.disagreements.join(", ")));
            }
            s
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn criterion_6(cfg: &VerifyConfig) -> Outcome {
    let cases: Vec<TheoremCase> = CaseId::ALL.into_iter().map(TheoremCase::new).collect();
    let tallies = lift(theorem_sweep(&cases, &cfg.limits))?;
    let summary = describe(&tallies);
    if tallies.iter().all(|t| t.disagreements.is_empty()) {
        return Ok(summary);
    }
    // for the record: the same sweep with alternative forbidden sets
    let alternatives: Vec<TheoremCase> = [["G1", "G2", "G5"], ["G1", "G2", "MA1"]]
        .iter()
        .map(|set| TheoremCase::new(CaseId::RegularToCographic).with_forbidden(set))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    let extra = lift(theorem_sweep(&alternatives, &cfg.limits))?;
    Err(format!("{summary}. Alternatives: {}", describe(&extra)))
}

fn criterion_7(cfg: &VerifyConfig) -> Outcome {
    let expectations = [
        ("G1", CaseId::GraphicToGraphic, true),
        ("G2", CaseId::GraphicToGraphic, true),
        ("G3", CaseId::GraphicToGraphic, true),
        ("G1", CaseId::RegularToGraphic, true),
        ("G2", CaseId::RegularToGraphic, true),
        ("K5", CaseId::RegularToGraphic, true),
        ("G4", CaseId::GraphicToGraphic, false),
        ("MA1", CaseId::RegularToCographic, false),
    ];
    let mut notes = Vec::new();
    for (name, id, minimal) in expectations {
        let r = lift(theorems::verify_minimality(name, &TheoremCase::new(id), &cfg.limits))?;
        if minimal {
            ensure(r.passed(), || format!("{name} is not minimal for {id}: {r:?}"))?;
        } else {
            // redundant entries still have a bad split but a smaller minor does too
            ensure(r.has_bad_split && !r.minors_all_good, || format!("{name} is not redundant for {id}: {r:?}"))?;
            let (op, label) = r.offending_minor.clone().unwrap_or_default();
            notes.push(format!("{name}: {op} {label}"));
        }
    }
    Ok(format!("6 minimal, redundant: {}", notes.join(", ")))
}

/// How a host was built from the excluded minor `F`.
#[derive(Clone, Copy, Debug)]
enum Planting {
    Extension,
    SeriesElement,
    SeriesPair,
}

/// A host with a minor in the tilde class of `base`, the planted pair, and
/// the padding elements added around it.
fn planted_host<R: Rng>(base: &BinaryMatroid, how: Planting, pads: usize, rng: &mut R) -> (BinaryMatroid, SplitPair) {
    let random_col = |rng: &mut R, rows: usize| -> Vec<u8> { (0..rows).map(|_| rng.gen_range(0..2u8)).collect() };
    let mut n = match how {
        Planting::Extension => {
            let c = random_col(rng, base.rank());
            let once = corpus::extend(base, &c, "x");
            let c = random_col(rng, once.rank());
            corpus::extend(&once, &c, "y")
        }
        Planting::SeriesElement => {
            let partner = base.label(rng.gen_range(0..base.len())).to_string();
            let with = corpus::add_in_series(base, &partner, "x");
            with.relabeled(
                with.elements()
                    .iter()
                    .map(|l| if l.as_str() == partner { ElementLabel::new("y").unwrap() } else { l.clone() })
                    .collect(),
            )
            .expect("fresh labels")
        }
        Planting::SeriesPair => {
            let c = random_col(rng, base.corank());
            let once = corpus::coextend(base, &c, "x");
            corpus::add_in_series(&once, "x", "y")
        }
    };
    for k in 0..pads {
        let label = format!("p{k}");
        n = if rng.gen_bool(0.5) {
            let c = random_col(rng, n.rank());
            corpus::extend(&n, &c, &label)
        } else {
            let c = random_col(rng, n.corank());
            corpus::coextend(&n, &c, &label)
        };
    }
    (n, SplitPair::parse("x", "y").expect("distinct"))
}

fn criterion_8(cfg: &VerifyConfig) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 8);
    let jobs: Vec<(BinaryMatroid, SplitPair, &'static str)> = (0..50)
        .map(|k| {
            let name = if k % 2 == 0 { "K5" } else { "K33" };
            let base = catalog::matroid(name).expect("catalog entry");
            let how = [Planting::Extension, Planting::SeriesElement, Planting::SeriesPair][k % 3];
            let pads = rng.gen_range(0..=1);
            let (host, pair) = planted_host(&base, how, pads, &mut rng);
            (host, pair, name)
        })
        .collect();
    let results: std::result::Result<Vec<bool>, String> = jobs
        .par_iter()
        .map(|(host, planted, name)| {
            let target = recognition::catalog_target(name).expect("catalog name");
            ensure(
                lift(recognition::has_tilde_minor(host, target.matroid(), &cfg.limits))?,
                || format!("host for {name} has no tilde minor:\n{}", host.to_text()),
            )?;
            let hit = |p: &SplitPair| -> std::result::Result<bool, String> {
                let s = lift(split(host, p))?;
                Ok(lift(recognition::has_minor_target(&s, target, &cfg.limits))?.is_some())
            };
            if hit(planted)? {
                return Ok(true);
            }
            let labels: Vec<String> = host.elements().iter().map(|l| l.to_string()).collect();
            for i in 0..labels.len() {
                for j in i + 1..labels.len() {
                    if hit(&lift(SplitPair::parse(&labels[i], &labels[j]))?)? {
                        return Ok(false);
                    }
                }
            }
            Err(format!("no splitting of the {name} host contains {name}:\n{}", host.to_text()))
        })
        .collect();
    let results = results?;
    let planted_hits = results.iter().filter(|&&b| b).count();
    Ok(format!("{} hosts; planted pair sufficed for {planted_hits}", results.len()))
}

/// Every pair of adjacent edges that may be split away from a common vertex.
pub fn splittable_pairs(g: &Multigraph) -> Vec<SplitPair> {
    let edges = g.edges();
    let mut out = Vec::new();
    for (a, ex) in edges.iter().enumerate() {
        for ey in &edges[a + 1..] {
            let p = SplitPair { x: ex.label.clone(), y: ey.label.clone() };
            if split_graph(g, &p).is_ok() {
                out.push(p);
            }
        }
    }
    out
}

fn criterion_9() -> Outcome {
    let graphs = corpus::connected_multigraphs(6, 7);
    let checked: std::result::Result<Vec<usize>, String> = graphs
        .par_iter()
        .map(|g| {
            let m = BinaryMatroid::from_graph(g);
            let pairs = splittable_pairs(g);
            for p in &pairs {
                let by_graph = BinaryMatroid::from_graph(&lift(split_graph(g, p))?);
                let by_matrix = lift(split(&m, p))?;
                ensure(by_graph.is_isomorphic(&by_matrix), || {
                    format!("split on {{{}, {}}} differs for\n{}", p.x, p.y, g.to_text())
                })?;
            }
            Ok(pairs.len())
        })
        .collect();
    let pairs: usize = checked?.iter().sum();
    Ok(format!("{} graphs, {pairs} splittable pairs", graphs.len()))
}
