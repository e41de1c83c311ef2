//! Stream verification runs: decode or generate graphs, filter, solve,
//! judge against a bound, and aggregate attainment counts plus violation
//! certificates. Work is distributed by static chunking, and the table merge
//! is a commutative monoid, so results are identical for every worker count.

use crate::report::{girth_to_option, AttainmentTable, UnresolvedRecord, ViolationRecord};
use injchroma::conjectures::{verdict_from_invariants, BoundKind, StreamVerdict, VerdictKind};
use injchroma::graph6;
use injchroma::metrics;
use injchroma::smallgen::{self, GenSpec};
use injchroma::solver;
use injchroma::Graph;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::sync::mpsc::{sync_channel, Receiver, SyncSender};
use std::sync::Mutex;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CheckError {
    #[error("input {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("decode failure in strict mode: {0}")]
    StrictDecode(#[from] graph6::StreamError),
    #[error(transparent)]
    Generate(#[from] smallgen::GenError),
}

#[derive(Debug, Clone)]
pub enum InputSource {
    /// Newline-delimited graph6 file.
    File(PathBuf),
    /// In-memory graphs (family members, tests).
    Graphs(Vec<Graph>),
    /// Internal exhaustive generator.
    Generator(GenSpec),
}

#[derive(Debug, Clone, Default)]
pub struct Filters {
    pub min_degree: Option<usize>,
    pub girth_min: Option<usize>,
    pub connectivity_min: Option<usize>,
    pub planar: bool,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub source: InputSource,
    pub filters: Filters,
    pub bound: BoundKind,
    pub workers: usize,
    pub node_budget: Option<u64>,
    pub strict: bool,
    /// Directory receiving `table.csv`, `table.json` and `violations.jsonl`.
    pub output: Option<PathBuf>,
}

#[derive(Debug, Default)]
pub struct RunSummary {
    /// Graphs that passed the filters and received a verdict or ran out of
    /// budget.
    pub judged: u64,
    pub filtered: u64,
    pub outside_domain: u64,
    pub satisfies: u64,
    pub attains: u64,
    pub decode_errors: u64,
    pub violations: Vec<ViolationRecord>,
    pub unresolved: Vec<UnresolvedRecord>,
    pub table: AttainmentTable,
    pub wall: Duration,
    /// Summed solver time across workers.
    pub solve_time: Duration,
}

impl RunSummary {
    fn absorb(&mut self, part: RunSummary) {
        self.judged += part.judged;
        self.filtered += part.filtered;
        self.outside_domain += part.outside_domain;
        self.satisfies += part.satisfies;
        self.attains += part.attains;
        self.violations.extend(part.violations);
        self.unresolved.extend(part.unresolved);
        self.table.merge(&part.table);
        self.solve_time += part.solve_time;
    }

    pub fn exit_code(&self) -> u8 {
        if self.violations.is_empty() {
            0
        } else {
            1
        }
    }
}

pub fn run_check(config: &RunConfig) -> Result<RunSummary, CheckError> {
    let start = Instant::now();
    let workers = config.workers.max(1);
    let violation_sink: Option<Mutex<BufWriter<File>>> = match &config.output {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|source| CheckError::Io {
                path: dir.display().to_string(),
                source,
            })?;
            let path = dir.join("violations.jsonl");
            let file = File::options()
                .create(true)
                .append(true)
                .open(&path)
                .map_err(|source| CheckError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
            Some(Mutex::new(BufWriter::new(file)))
        }
        None => None,
    };

    let (senders, receivers): (Vec<SyncSender<Graph>>, Vec<Receiver<Graph>>) =
        (0..workers).map(|_| sync_channel::<Graph>(1024)).unzip();

    let mut summary = RunSummary::default();
    let mut produce_result: Result<u64, CheckError> = Ok(0);

    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for receiver in receivers {
            let sink = violation_sink.as_ref();
            let cfg = config;
            handles.push(scope.spawn(move || worker_loop(cfg, receiver, sink)));
        }
        // Static chunking: graph i goes to worker i mod workers.
        produce_result = produce(config, &senders);
        drop(senders);
        for handle in handles {
            let part = handle.join().expect("worker panicked");
            summary.absorb(part);
        }
    });

    summary.decode_errors = match produce_result {
        Ok(skipped) => skipped,
        Err(e) => return Err(e),
    };
    // Deterministic report order regardless of worker interleaving.
    summary.violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    summary.unresolved.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    summary.wall = start.elapsed();

    if let Some(dir) = &config.output {
        let write = |name: &str, text: &str| -> Result<(), CheckError> {
            std::fs::write(dir.join(name), text).map_err(|source| CheckError::Io {
                path: dir.join(name).display().to_string(),
                source,
            })
        };
        write("table.csv", &summary.table.to_csv())?;
        write("table.json", &summary.table.to_json())?;
    }
    Ok(summary)
}

/// Feeds the workers; returns the number of skipped undecodable lines.
fn produce(config: &RunConfig, senders: &[SyncSender<Graph>]) -> Result<u64, CheckError> {
    let workers = senders.len();
    let mut index = 0usize;
    let mut skipped = 0u64;
    let mut dispatch = |g: Graph| {
        let _ = senders[index % workers].send(g);
        index += 1;
    };
    match &config.source {
        InputSource::Graphs(graphs) => {
            for g in graphs {
                dispatch(g.clone());
            }
        }
        InputSource::Generator(spec) => {
            smallgen::generate(spec, |g| dispatch(g.clone()))?;
        }
        InputSource::File(path) => {
            let file = File::open(path).map_err(|source| CheckError::Io {
                path: path.display().to_string(),
                source,
            })?;
            for item in graph6::read_stream(BufReader::new(file)) {
                match item {
                    Ok(g) => dispatch(g),
                    Err(e) if config.strict => return Err(CheckError::StrictDecode(e)),
                    Err(_) => skipped += 1,
                }
            }
        }
    }
    Ok(skipped)
}

fn worker_loop(
    config: &RunConfig,
    receiver: Receiver<Graph>,
    sink: Option<&Mutex<BufWriter<File>>>,
) -> RunSummary {
    let mut part = RunSummary::default();
    while let Ok(g) = receiver.recv() {
        process_one(config, &g, &mut part, sink);
    }
    part
}

fn process_one(
    config: &RunConfig,
    g: &Graph,
    part: &mut RunSummary,
    sink: Option<&Mutex<BufWriter<File>>>,
) {
    let f = &config.filters;
    if let Some(d) = f.min_degree {
        if g.min_degree() < d {
            part.filtered += 1;
            return;
        }
    }
    let girth = metrics::girth(g);
    if let Some(gmin) = f.girth_min {
        if !girth.at_least(gmin) {
            part.filtered += 1;
            return;
        }
    }
    if f.planar && !injchroma::planarity::is_planar(g) {
        part.filtered += 1;
        return;
    }
    if let Some(k) = f.connectivity_min {
        if !metrics::vertex_connectivity_at_least(g, k) {
            part.filtered += 1;
            return;
        }
    }

    let delta = g.max_degree();
    part.judged += 1;
    let solved = solver::injective_chromatic_number_budgeted(g, config.node_budget);
    let result = match solved {
        Ok(r) => {
            part.solve_time += r.stats.elapsed;
            r
        }
        Err(solver::SolveError::BudgetExhausted { bounds }) => {
            part.unresolved.push(UnresolvedRecord {
                graph6: graph6::write_graph6(g),
                lower: bounds.lower,
                upper: bounds.upper,
            });
            return;
        }
    };
    match verdict_from_invariants(delta, girth, result.chi_i, config.bound) {
        StreamVerdict::OutsideDomain => part.outside_domain += 1,
        StreamVerdict::Judged(v) => match v.kind {
            VerdictKind::Satisfies => part.satisfies += 1,
            VerdictKind::Attains => {
                part.attains += 1;
                part.table.record(g.order(), delta);
            }
            VerdictKind::Violates => {
                let record = ViolationRecord {
                    graph6: graph6::write_graph6(g),
                    order: g.order(),
                    max_degree: delta,
                    girth: girth_to_option(girth),
                    chi_i: result.chi_i,
                    bound: v.bound,
                    witness: result.witness.colors.clone(),
                };
                if let Some(mutex) = sink {
                    let mut w = mutex.lock().expect("violation sink poisoned");
                    let line = serde_json::to_string(&record).expect("record serializes");
                    let _ = writeln!(w, "{line}");
                    let _ = w.flush();
                }
                part.violations.push(record);
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use injchroma::families;

    fn prisms() -> Vec<Graph> {
        (3..=12).map(families::prism).collect()
    }

    #[test]
    fn prism_run_has_no_violations_and_attains_on_multiples_of_three() {
        let config = RunConfig {
            source: InputSource::Graphs(prisms()),
            filters: Filters {
                girth_min: Some(4),
                ..Default::default()
            },
            bound: BoundKind::LaStorgel,
            workers: 2,
            node_budget: None,
            strict: false,
            output: None,
        };
        let summary = run_check(&config).unwrap();
        assert!(summary.violations.is_empty());
        // k = 3 has girth 3 and is filtered; of k = 4..12 the prisms with
        // chi_i = 4 attain the delta=3 bound, i.e. k not divisible by 3.
        assert_eq!(summary.filtered, 1);
        assert_eq!(summary.judged, 9);
        assert_eq!(summary.attains, 6);
        assert_eq!(summary.exit_code(), 0);
    }

    #[test]
    fn table_is_identical_across_worker_counts() {
        let mut tables = Vec::new();
        for workers in [1, 3, 8] {
            let config = RunConfig {
                source: InputSource::Graphs(prisms()),
                filters: Filters::default(),
                bound: BoundKind::Luzar,
                workers,
                node_budget: None,
                strict: false,
                output: None,
            };
            tables.push(run_check(&config).unwrap().table);
        }
        assert_eq!(tables[0], tables[1]);
        assert_eq!(tables[1], tables[2]);
    }

    #[test]
    fn violations_re_verify_standalone() {
        // The order-9 quartic graph violates the ceil(3/2 delta) bound.
        let d4 = families::fixture("d4_chi9").unwrap().graph;
        let config = RunConfig {
            source: InputSource::Graphs(vec![d4]),
            filters: Filters::default(),
            bound: BoundKind::Chen,
            workers: 1,
            node_budget: None,
            strict: false,
            output: None,
        };
        let summary = run_check(&config).unwrap();
        assert_eq!(summary.exit_code(), 1);
        assert_eq!(summary.violations.len(), 1);
        let rec = &summary.violations[0];
        let back = graph6::parse_graph6(&rec.graph6).unwrap();
        let re = solver::injective_chromatic_number(&back);
        assert_eq!(re.chi_i, rec.chi_i);
        assert!(rec.chi_i > rec.bound);
        let witness = solver::Coloring {
            colors: rec.witness.clone(),
            k: rec.chi_i,
        };
        assert_eq!(solver::verify_injective(&back, &witness), Ok(true));
    }

    #[test]
    fn girth5_bound_over_dodecahedra() {
        // Cubic girth-5 graphs: delta + 1 = 4 is attained exactly when the
        // injective chromatic number is 4.
        let graphs: Vec<Graph> = (5..=9)
            .map(|r| families::gen_dodecahedron(r).unwrap())
            .collect();
        let config = RunConfig {
            source: InputSource::Graphs(graphs),
            filters: Filters {
                girth_min: Some(5),
                ..Default::default()
            },
            bound: BoundKind::Girth5,
            workers: 2,
            node_budget: None,
            strict: false,
            output: None,
        };
        let summary = run_check(&config).unwrap();
        assert!(summary.violations.is_empty());
        assert_eq!(summary.attains, 3); // r = 5, 7, 8
        assert_eq!(summary.satisfies, 2); // r = 6, 9
        // Table counts exactly mirror the Attains verdicts.
        assert_eq!(summary.table.total(), summary.attains);
    }

    #[test]
    fn budget_exhaustion_lands_in_unresolved() {
        let config = RunConfig {
            source: InputSource::Graphs(vec![families::prism(12)]),
            filters: Filters::default(),
            bound: BoundKind::Luzar,
            workers: 1,
            node_budget: Some(1),
            strict: false,
            output: None,
        };
        let summary = run_check(&config).unwrap();
        assert_eq!(summary.judged, 1);
        assert_eq!(summary.unresolved.len(), 1);
        assert_eq!(summary.satisfies + summary.attains, 0);
    }

    #[test]
    fn output_files_are_written() {
        let dir = std::env::temp_dir().join(format!("injchroma-check-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let config = RunConfig {
            source: InputSource::Graphs(vec![families::fixture("d4_chi9").unwrap().graph]),
            filters: Filters::default(),
            bound: BoundKind::Chen,
            workers: 1,
            node_budget: None,
            strict: false,
            output: Some(dir.clone()),
        };
        let summary = run_check(&config).unwrap();
        assert_eq!(summary.violations.len(), 1);
        let jsonl = std::fs::read_to_string(dir.join("violations.jsonl")).unwrap();
        let parsed: ViolationRecord = serde_json::from_str(jsonl.lines().next().unwrap()).unwrap();
        assert_eq!(parsed, summary.violations[0]);
        assert!(dir.join("table.csv").exists());
        assert!(dir.join("table.json").exists());
        let _ = std::fs::remove_dir_all(&dir);
    }
}
