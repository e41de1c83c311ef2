//! `injchroma`: compute injective chromatic numbers of graph6 streams,
//! generate small-order graph classes, build the named graph families, run
//! bound-verification sweeps, and manage fixtures.
//!
//! Exit codes for `check`: 0 = no violations, 1 = violations found,
//! 2 = operational error.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use injchroma::conjectures::BoundKind;
use injchroma::metrics::{self, Girth};
use injchroma::smallgen::GenSpec;
use injchroma::solver;
use injchroma::{families, graph6, Graph};
use injchroma_cli::check::{run_check, Filters, InputSource, RunConfig};
use injchroma_cli::fixtures_cmd;
use std::io::{BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "injchroma", version, about = "Exact injective chromatic number toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Read graph6 lines (file or stdin) and print `n maxdeg girth chi_i` per graph.
    ChiI {
        /// Input file; stdin when omitted.
        input: Option<PathBuf>,
        /// Fail with exit code 2 on the first undecodable line.
        #[arg(long)]
        strict: bool,
        /// Node budget per graph; budget-exhausted graphs report a range.
        #[arg(long)]
        node_budget: Option<u64>,
    },
    /// Exhaustively generate connected graphs of one order as graph6 lines.
    Gen {
        /// Number of vertices.
        #[arg(short = 'n', long)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        min_degree: usize,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long)]
        connectivity_min: Option<usize>,
        /// Keep planar graphs only (also prunes the search tree).
        #[arg(long)]
        planar: bool,
        /// Override the desk-scale order ceiling.
        #[arg(long)]
        allow_large: bool,
        /// Emit only share `i` of `c` of the output, written `i/c`.
        #[arg(long)]
        split: Option<String>,
    },
    /// Construct one member of a named family and print its graph6 line.
    Family(FamilyArgs),
    /// Stream graphs through filters, solve, and judge against a bound.
    Check {
        /// graph6 input file.
        #[arg(long, conflicts_with_all = ["gen_order", "family"])]
        input: Option<PathBuf>,
        /// Use the internal generator at this order.
        #[arg(long = "gen", conflicts_with = "family")]
        gen_order: Option<usize>,
        /// Use one family member as the input (with the family flags).
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        family_params: FamilyParams,
        /// Bound to verify: chen | luzar | la-storgel | girth5.
        #[arg(long)]
        bound: String,
        /// Minimum-degree filter (pendant vertices never matter for the
        /// conjecture bounds); pass 0 to disable.
        #[arg(long, default_value_t = 2)]
        min_degree: usize,
        #[arg(long)]
        girth_min: Option<usize>,
        #[arg(long)]
        connectivity_min: Option<usize>,
        /// Keep planar graphs only.
        #[arg(long)]
        planar: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        node_budget: Option<u64>,
        /// Abort on undecodable input lines.
        #[arg(long)]
        strict: bool,
        /// Directory for table.csv, table.json and violations.jsonl.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
    /// List, verify or fetch the fixture graphs.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// g4 | h | ls-base | cubic | shannon | k | prism | dodecahedron
    name: String,
    #[command(flatten)]
    params: FamilyParams,
}

#[derive(Args, Clone, Default)]
struct FamilyParams {
    /// Construction steps (g4, k) or half-steps (h).
    #[arg(long)]
    steps: Option<usize>,
    /// Maximum degree parameter (ls-base, shannon).
    #[arg(long)]
    delta: Option<usize>,
    /// Odd size parameter of the cubic family.
    #[arg(long = "cycles")]
    cycles: Option<usize>,
    /// Prism cycle length.
    #[arg(long)]
    k: Option<usize>,
    /// Generalised dodecahedron ring length.
    #[arg(long)]
    r: Option<usize>,
    /// Extension rounds (shannon).
    #[arg(long, default_value_t = 0)]
    extensions: usize,
    /// Base fixture for the h family.
    #[arg(long, default_value = "g5_base")]
    base: String,
}

#[derive(Subcommand)]
enum FixturesAction {
    /// Print the fixture manifest.
    List,
    /// Recompute all fixture invariants (optionally against a directory).
    Verify {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Download a fixture by House of Graphs id and store it after verification.
    Fetch {
        #[arg(long)]
        id: u64,
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Without this flag the command refuses to touch the network.
        #[arg(long)]
        enable_network: bool,
    },
}

fn main() -> ExitCode {
    match dispatch() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::ChiI {
            input,
            strict,
            node_budget,
        } => chi_i_cmd(input, strict, node_budget),
        Command::Gen {
            order,
            min_degree,
            max_edges,
            connectivity_min,
            planar,
            allow_large,
            split,
        } => {
            let spec = GenSpec {
                order,
                min_degree,
                max_edges,
                connectivity_min: connectivity_min.unwrap_or(0),
                planar_only: planar,
                allow_large,
            };
            let split = parse_split(split.as_deref())?;
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            injchroma::smallgen::generate_split(&spec, split, |g| {
                let _ = writeln!(out, "{}", graph6::write_graph6(g));
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Family(args) => {
            let g = build_family(&args.name, &args.params)?;
            println!("{}", graph6::write_graph6(&g));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            input,
            gen_order,
            family,
            family_params,
            bound,
            min_degree,
            girth_min,
            connectivity_min,
            planar,
            workers,
            node_budget,
            strict,
            output,
            allow_large,
        } => {
            let bound = BoundKind::parse(&bound)
                .ok_or_else(|| anyhow!("unknown bound `{bound}` (chen | luzar | la-storgel | girth5)"))?;
            let source = match (input, gen_order, family) {
                (Some(path), None, None) => InputSource::File(path),
                // Degree, edge and planarity constraints are pushed into the
                // generator so whole subtrees get pruned; the stream filters
                // below re-check them (cheaply) like for any other source.
                (None, Some(order), None) => InputSource::Generator(GenSpec {
                    order,
                    min_degree,
                    max_edges: planar.then(|| 3 * order.saturating_sub(2)),
                    connectivity_min: 0,
                    planar_only: planar,
                    allow_large,
                }),
                (None, None, Some(name)) => {
                    InputSource::Graphs(vec![build_family(&name, &family_params)?])
                }
                _ => bail!("exactly one of --input, --gen, --family is required"),
            };
            let config = RunConfig {
                source,
                filters: Filters {
                    min_degree: (min_degree > 0).then_some(min_degree),
                    girth_min,
                    connectivity_min,
                    planar,
                },
                bound,
                workers,
                node_budget,
                strict,
                output,
            };
            let summary = run_check(&config)?;
            print!("{}", render_summary(&summary, bound));
            Ok(ExitCode::from(summary.exit_code()))
        }
        Command::Fixtures { action } => fixtures_cmd_dispatch(action),
    }
}

fn parse_split(text: Option<&str>) -> Result<(usize, usize)> {
    match text {
        None => Ok((0, 1)),
        Some(t) => {
            let (i, c) = t
                .split_once('/')
                .ok_or_else(|| anyhow!("--split expects i/c, e.g. 0/4"))?;
            let (i, c): (usize, usize) = (i.parse()?, c.parse()?);
            if c == 0 || i >= c {
                bail!("--split needs i < c");
            }
            Ok((i, c))
        }
    }
}

fn chi_i_cmd(input: Option<PathBuf>, strict: bool, node_budget: Option<u64>) -> Result<ExitCode> {
    let reader: Box<dyn Read> = match &input {
        Some(path) => Box::new(std::fs::File::open(path).with_context(|| path.display().to_string())?),
        None => Box::new(std::io::stdin()),
    };
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    for item in graph6::read_stream(BufReader::new(reader)) {
        match item {
            Ok(g) => {
                let line = describe_graph(&g, node_budget);
                writeln!(out, "{line}")?;
            }
            Err(e) => {
                eprintln!("{e}");
                if strict {
                    out.flush()?;
                    return Ok(ExitCode::from(2));
                }
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn describe_graph(g: &Graph, node_budget: Option<u64>) -> String {
    let girth = match metrics::girth(g) {
        Girth::Finite(v) => v.to_string(),
        Girth::Infinite => "inf".to_string(),
    };
    match solver::injective_chromatic_number_budgeted(g, node_budget) {
        Ok(r) => format!("{} {} {} {}", g.order(), g.max_degree(), girth, r.chi_i),
        Err(solver::SolveError::BudgetExhausted { bounds }) => format!(
            "{} {} {} {}..{}(budget)",
            g.order(),
            g.max_degree(),
            girth,
            bounds.lower,
            bounds.upper
        ),
    }
}

fn build_family(name: &str, p: &FamilyParams) -> Result<Graph> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| anyhow!("family `{name}` needs --{flag}"))
    };
    let g = match name {
        "g4" => families::family_g4(need(p.steps, "steps")?).graph,
        "h" => {
            let base = families::fixture(&p.base)?;
            families::h_family(&base, need(p.steps, "steps")?)?.graph
        }
        "ls-base" => families::ls_base(need(p.delta, "delta")?)?.graph,
        "cubic" => families::cubic_family(need(p.cycles, "cycles")?)?.graph,
        "shannon" => families::shannon_subdivided(need(p.delta, "delta")?, p.extensions),
        "k" => families::k_family(need(p.steps, "steps")?).graph,
        "prism" => families::prism(need(p.k, "k")?),
        "dodecahedron" => families::gen_dodecahedron(need(p.r, "r")?)?,
        other => bail!("unknown family `{other}` (g4 | h | ls-base | cubic | shannon | k | prism | dodecahedron)"),
    };
    Ok(g)
}

fn render_summary(s: &injchroma_cli::check::RunSummary, bound: BoundKind) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "bound={} judged={} attains={} satisfies={} outside-domain={} filtered={} decode-errors={}\n",
        bound.name(),
        s.judged,
        s.attains,
        s.satisfies,
        s.outside_domain,
        s.filtered,
        s.decode_errors
    ));
    out.push_str(&format!(
        "violations={} unresolved={} wall={:.2?} solve-time={:.2?}\n",
        s.violations.len(),
        s.unresolved.len(),
        s.wall,
        s.solve_time
    ));
    if !s.table.is_empty() {
        out.push_str("attainment table (rows = order, columns = max degree):\n");
        out.push_str(&s.table.to_csv());
    }
    for v in &s.violations {
        out.push_str(&format!(
            "VIOLATION {} n={} maxdeg={} chi_i={} bound={}\n",
            v.graph6, v.order, v.max_degree, v.chi_i, v.bound
        ));
    }
    for u in &s.unresolved {
        out.push_str(&format!(
            "UNRESOLVED {} chi_i in {}..={}\n",
            u.graph6, u.lower, u.upper
        ));
    }
    out
}

fn fixtures_cmd_dispatch(action: FixturesAction) -> Result<ExitCode> {
    match action {
        FixturesAction::List => {
            print!("{}", fixtures_cmd::list());
            Ok(ExitCode::SUCCESS)
        }
        FixturesAction::Verify { dir } => {
            let dir = dir.or_else(fixtures_cmd::default_dir);
            let failures = fixtures_cmd::verify(dir.as_deref());
            if failures.is_empty() {
                println!("all {} fixtures verify", families::manifest().len());
                Ok(ExitCode::SUCCESS)
            } else {
                for f in &failures {
                    eprintln!("FAIL {f}");
                }
                Ok(ExitCode::from(2))
            }
        }
        FixturesAction::Fetch {
            id,
            dir,
            enable_network,
        } => {
            let dir = dir
                .or_else(fixtures_cmd::default_dir)
                .ok_or_else(|| anyhow!("pass --dir or set {}", fixtures_cmd::FIXTURE_DIR_ENV))?;
            let path = fixtures_cmd::fetch(id, &dir, enable_network)?;
            println!("stored {}", path.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}
