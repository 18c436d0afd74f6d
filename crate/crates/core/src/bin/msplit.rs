use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use matroid_split::catalog::{self, CatalogValue};
use matroid_split::recognition::{self, Limits};
use matroid_split::splitting::split_representation;
use matroid_split::theorems::{self, CaseId, PreconditionStatus, TheoremCase};
use matroid_split::verify::{self, VerifyConfig, CRITERIA};
use matroid_split::{split_graph, BinaryMatroid, Error, Multigraph, SplitPair};

/// Binary matroid splitting, minors and forbidden-minor characterizations.
///
/// Wherever a matroid or graph is expected, a catalog name (F7, R10, G1, ...)
/// or a path to a matrix or graph file may be given.
#[derive(Parser)]
#[command(name = "msplit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Largest matroid accepted by the minor searches.
    #[arg(long, global = true, default_value_t = Limits::default().max_elements)]
    max_elements: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the representation of the splitting matroid on {x, y}.
    Split { matroid: String, x: String, y: String },
    /// Split the adjacent edges x and y away from their common vertex.
    SplitGraph { graph: String, x: String, y: String },
    /// Report whether a matroid is regular, graphic and cographic.
    Classify { matroid: String },
    /// Search the host for a minor isomorphic to the target.
    HasMinor { host: String, target: String },
    /// Decide whether every splitting keeps the case's target property.
    Decide {
        /// One of graphic-graphic, cographic-cographic, graphic-cographic,
        /// cographic-graphic, regular-graphic, regular-cographic.
        #[arg(long = "case")]
        case: CaseId,
        matroid: String,
        /// Split on every pair instead of testing forbidden minors.
        #[arg(long)]
        oracle: bool,
    },
    /// Write a catalog entry in the matrix or graph text format.
    Export { name: String },
    /// Run the reproduction criteria and print one record per criterion.
    VerifyPaper {
        /// Run only these criteria.
        #[arg(long = "only", value_delimiter = ',')]
        only: Vec<u8>,
    },
}

enum Loaded {
    Matroid(BinaryMatroid),
    Graph(Multigraph),
}

impl Loaded {
    fn matroid(self) -> BinaryMatroid {
        match self {
            Loaded::Matroid(m) => m,
            Loaded::Graph(g) => BinaryMatroid::from_graph(&g),
        }
    }
}

/// Catalog names take precedence over files.
fn load(source: &str) -> Result<Loaded, Error> {
    if let Ok(entry) = catalog::get(source) {
        return Ok(match entry.value {
            CatalogValue::Matroid(m) => Loaded::Matroid(m),
            CatalogValue::Graph(g) => Loaded::Graph(g),
        });
    }
    let text = fs::read_to_string(source)
        .map_err(|e| Error::UnknownName(format!("{source} is neither a catalog name nor a readable file ({e})")))?;
    match BinaryMatroid::parse_text(&text) {
        Ok(m) => Ok(Loaded::Matroid(m)),
        Err(matrix_err) => Multigraph::parse_text(&text)
            .map(Loaded::Graph)
            .map_err(|graph_err| Error::Parse(format!("{source}: not a matrix ({matrix_err}) nor a graph ({graph_err})"))),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let limits = Limits::with_max_elements(cli.max_elements);
    let verdict = |b: bool| if b { ExitCode::SUCCESS } else { ExitCode::from(1) };
    match cli.command {
        Command::Split { matroid, x, y } => {
            let m = load(&matroid)?.matroid();
            let p = SplitPair::parse(&x, &y)?;
            let a = split_representation(&m, &p)?;
            if cli.json {
                let rows: Vec<Vec<u8>> =
                    (0..a.row_count()).map(|i| (0..a.col_count()).map(|j| a.get(i, j) as u8).collect()).collect();
                print_json(&json!({ "labels": m.elements(), "rows": rows }));
            } else {
                let labels: Vec<String> = m.elements().iter().map(|l| l.to_string()).collect();
                print!("{}", a.to_text(Some(&labels)));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SplitGraph { graph, x, y } => {
            let Loaded::Graph(g) = load(&graph)? else {
                return Err(Error::Graph(format!("{graph} is a matrix, not a graph")));
            };
            let s = split_graph(&g, &SplitPair::parse(&x, &y)?)?;
            if cli.json {
                print_json(&s);
            } else {
                print!("{}", s.to_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { matroid } => {
            let flags = recognition::classify(&load(&matroid)?.matroid(), &limits)?;
            if cli.json {
                print_json(&flags);
            } else {
                println!("regular: {}\ngraphic: {}\ncographic: {}", flags.regular, flags.graphic, flags.cographic);
                let w = &flags.witnesses;
                for (what, found) in [("regular", &w.regular), ("graphic", &w.graphic), ("cographic", &w.cographic)] {
                    if let Some(e) = found {
                        println!("not {what}: has a {} minor", e.minor);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::HasMinor { host, target } => {
            let host = load(&host)?.matroid();
            let target = load(&target)?.matroid();
            let found = recognition::has_minor(&host, &target, &limits)?;
            match (&found, cli.json) {
                (_, true) => print_json(&found),
                (Some(w), false) => {
                    let names = |set: &std::collections::BTreeSet<matroid_split::ElementLabel>| {
                        set.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
                    };
                    println!("delete: {}\ncontract: {}", names(&w.spec.delete), names(&w.spec.contract));
                    for (from, to) in &w.bijection {
                        println!("{from} -> {to}");
                    }
                }
                (None, false) => println!("no minor isomorphic to the target"),
            }
            Ok(verdict(found.is_some()))
        }
        Command::Decide { case, matroid, oracle } => {
            let m = load(&matroid)?.matroid();
            let case = TheoremCase::new(case);
            let report = if oracle {
                theorems::oracle_all_splits(&m, case.target(), &limits)?
            } else {
                theorems::decide_by_forbidden_minors(&m, &case, &limits)?
            };
            if cli.json {
                print_json(&report);
            } else {
                println!("verdict: {}", report.verdict);
                if let PreconditionStatus::Violated { excluded, witness } = &report.precondition {
                    println!(
                        "precondition violated: tilde minor of {excluded} on pair {{{}, {}}}; the verdict is not covered by the characterization",
                        witness.x, witness.y
                    );
                }
                if let Some(f) = &report.forbidden_minor {
                    println!("forbidden minor: {}", f.minor);
                }
                if let Some(f) = &report.failing_split {
                    println!("splitting on {{{}, {}}} is not {}: has a {} minor", f.pair.x, f.pair.y, f.property.as_str(), f.excluded.minor);
                }
            }
            Ok(verdict(report.verdict))
        }
        Command::Export { name } => {
            print!("{}", catalog::get(&name)?.to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { only } => {
            let cfg = VerifyConfig { seed: cli.seed, limits };
            let results: Vec<_> = CRITERIA
                .iter()
                .filter(|c| only.is_empty() || only.contains(&c.0))
                .map(|c| verify::run(c.0, &cfg))
                .collect();
            if cli.json {
                print_json(&results);
            } else {
                for r in &results {
                    let status = if r.passed { "PASS" } else { "FAIL" };
                    println!("{status} {} {} ({} ms): {}", r.id, r.title, r.millis, r.detail);
                }
            }
            Ok(verdict(results.iter().all(|r| r.passed)))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
