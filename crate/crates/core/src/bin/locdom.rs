use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use locdom::corpus::{RandomCorpus, RandomKind};
use locdom::families::{gen, FamilySpec};
use locdom::graph6::{emit_graph6, parse_graphs};
use locdom::greedy::{greedy_determining_set, greedy_partition};
use locdom::harness::{corpus_extremes, find_ore_witness, statement_ids, verify, Corpus, VerifyParams, STATEMENTS};
use locdom::invariants::{
    chromatic_number, clique_number, domination_number, independence_number, k_domination_number,
    location_domination_number, metric_dimension, upper_domination_number,
};
use locdom::matching::{maximum_matching, v1_construction};
use locdom::symmetry::determining_number;
use locdom::trees::tree_metric_dimension;
use locdom::{Error, Graph, InvariantResult, Result, SolverConfig};

#[derive(Parser)]
#[command(name = "locdom", version, about = "Metric dimension, determining sets and locating-dominating sets of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Override the solver's order cap.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Abort exact solvers after this many milliseconds (exit code 4).
    #[arg(long, global = true)]
    time_budget_ms: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an invariant of each input graph.
    Compute {
        #[arg(value_enum)]
        invariant: Invariant,
        /// graph6 stream or edge list; stdin when absent.
        input: Option<PathBuf>,
        /// k for gamma-k.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Seed vertex for the greedy partition.
        #[arg(long, default_value_t = 0)]
        seed_vertex: usize,
        /// Run the greedy partition from every vertex and report size ranges.
        #[arg(long)]
        all_seeds: bool,
    },
    /// Check a statement over a corpus and print the report.
    Verify(VerifyArgs),
    /// Generate named graph families.
    Families {
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// Maxima of dim - Det, lambda - Det and twin-free lambda over a corpus of one order.
    CorpusExtremes {
        /// graph6 stream; stdin when absent and --all-connected is not given.
        input: Option<PathBuf>,
        /// Use every connected graph of this order instead of reading input.
        #[arg(long)]
        all_connected: Option<usize>,
    },
    /// Search twin-free graphs for a minimal locating-dominating set whose complement is not one.
    FindOreWitness {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum FamilyAction {
    /// Print one family member, e.g. `families gen G 6` or `families gen Tqs 7 3`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Statement id; `list` prints the available ids.
    statement: String,
    /// all-connected, all-twin-free, all-trees, random-twinfree, random-trees,
    /// random-c4free, random-connected or file; `all-connected-n7` fixes the order.
    #[arg(long)]
    corpus: Option<String>,
    /// Corpus graphs for `--corpus file`; stdin when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Single corpus order (sets both bounds).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Seed vertex for the greedy checks (all vertices when absent).
    #[arg(long)]
    seed_vertex: Option<usize>,
    /// Accepted for symmetry with `compute`; the greedy checks sweep every seed by default.
    #[arg(long)]
    all_seeds: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Invariant {
    Dim,
    Det,
    Lambda,
    Gamma,
    GammaK,
    #[value(name = "Gamma")]
    UpperGamma,
    Alpha,
    Omega,
    Chi,
    AlphaPrime,
    Greedy,
    MatchingLd,
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) => Ok(std::fs::read_to_string(p)?),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn invariant_name(inv: Invariant) -> String {
    inv.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn result_json(r: &InvariantResult) -> serde_json::Value {
    serde_json::to_value(r).expect("result serializes")
}

fn compute_one(g: &Graph, inv: Invariant, k: usize, seed_vertex: usize, all_seeds: bool, cfg: &SolverConfig) -> Result<serde_json::Value> {
    let v = match inv {
        Invariant::Dim if g.is_tree() => result_json(&tree_metric_dimension(g)?),
        Invariant::Dim => result_json(&metric_dimension(g, cfg)?),
        Invariant::Det => result_json(&determining_number(g, cfg)?),
        Invariant::Lambda => result_json(&location_domination_number(g, cfg)?),
        Invariant::Gamma => result_json(&domination_number(g, cfg)?),
        Invariant::GammaK => {
            let mut v = result_json(&k_domination_number(g, k, cfg)?);
            v["k"] = json!(k);
            v
        }
        Invariant::UpperGamma => result_json(&upper_domination_number(g, cfg)?),
        Invariant::Alpha => result_json(&independence_number(g, cfg)?),
        Invariant::Omega => result_json(&clique_number(g, cfg)?),
        Invariant::Chi => result_json(&chromatic_number(g, cfg)?),
        Invariant::AlphaPrime => {
            let m = maximum_matching(g);
            json!({ "value": m.len(), "edges": m.edges, "unmatched": m.mbar })
        }
        Invariant::Greedy if all_seeds => {
            let mut ld_sizes = Vec::new();
            let mut det_sizes = Vec::new();
            for u0 in 0..g.order() {
                let gp = greedy_partition(g, u0)?;
                ld_sizes.push(gp.ld_set(g)?.len());
                det_sizes.push(greedy_determining_set(&gp).len());
            }
            let range = |v: &[usize]| json!({ "min": v.iter().min(), "max": v.iter().max() });
            json!({ "seeds": g.order(), "ld_size": range(&ld_sizes), "determining_size": range(&det_sizes) })
        }
        Invariant::Greedy => {
            let gp = greedy_partition(g, seed_vertex)?;
            let ld = gp.ld_set(g)?;
            json!({
                "u0": gp.u0, "a": gp.a, "b": gp.b, "c": gp.c, "a_order": gp.a_order,
                "value": ld.len(), "witness": ld, "determining": greedy_determining_set(&gp),
            })
        }
        Invariant::MatchingLd => {
            let mp = v1_construction(g)?;
            json!({ "value": mp.v1.len(), "witness": mp.v1, "v2": mp.v2, "edges": mp.matching.edges, "unmatched": mp.matching.mbar })
        }
    };
    Ok(v)
}

fn tsv_set(v: &serde_json::Value) -> String {
    v.as_array().map_or(String::new(), |a| a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn parse_corpus(args: &VerifyArgs) -> Result<Option<Corpus>> {
    let Some(name) = args.corpus.as_deref() else { return Ok(None) };
    let (base, fixed) = match name.rsplit_once("-n") {
        Some((b, n)) if !n.is_empty() && n.chars().all(|c| c.is_ascii_digit()) => (b, n.parse().ok()),
        _ => (name, None),
    };
    let order = fixed.or(args.n);
    let n_min = order.or(args.n_min);
    let n_max = order.or(args.n_max);
    let exhaustive = |lo: usize, hi: usize| (n_min.unwrap_or(lo), n_max.unwrap_or(hi));
    let random = |kind: RandomKind, lo: usize, hi: usize| {
        let (n_min, n_max) = exhaustive(lo, hi);
        Corpus::Random(RandomCorpus { kind, seed: args.seed.unwrap_or(1), count: args.count, n_min, n_max })
    };
    let corpus = match base {
        "all-connected" => {
            let (n_min, n_max) = exhaustive(1, 7);
            Corpus::AllConnected { n_min, n_max }
        }
        "all-twin-free" | "all-twinfree" => {
            let (n_min, n_max) = exhaustive(4, 7);
            Corpus::AllTwinFree { n_min, n_max }
        }
        "all-trees" => {
            let (n_min, n_max) = exhaustive(1, 10);
            Corpus::AllTrees { n_min, n_max }
        }
        "random-twinfree" | "random-twin-free" => random(RandomKind::TwinFree, 8, 24),
        "random-trees" => random(RandomKind::Tree, 4, 30),
        "random-c4free" | "random-c4-free" => random(RandomKind::C4FreeTwinFree, 4, 24),
        "random-connected" => random(RandomKind::Connected, 4, 12),
        "file" => Corpus::supplied(parse_graphs(&read_input(args.input.as_ref())?)?),
        other => return Err(Error::BadParams(format!("unknown corpus `{other}`"))),
    };
    Ok(Some(corpus))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<()> {
    let cfg = SolverConfig { cap: cli.cap, time_budget: cli.time_budget_ms.map(Duration::from_millis) };
    let json_out = cli.format == Format::Json;
    match cli.command {
        Command::Compute { invariant, input, k, seed_vertex, all_seeds } => {
            let graphs = parse_graphs(&read_input(input.as_ref())?)?;
            let name = invariant_name(invariant);
            if !json_out {
                writeln!(out, "graph6\tinvariant\tvalue\twitness")?;
            }
            for g in &graphs {
                let mut v = compute_one(g, invariant, k, seed_vertex, all_seeds, &cfg)?;
                let g6 = emit_graph6(g);
                if json_out {
                    v["graph6"] = json!(g6);
                    v["invariant"] = json!(name);
                    writeln!(out, "{v}")?;
                } else {
                    writeln!(out, "{g6}\t{name}\t{}\t{}", v["value"], tsv_set(&v["witness"]))?;
                }
            }
        }
        Command::Verify(args) => {
            if args.statement == "list" {
                for s in STATEMENTS {
                    writeln!(out, "{}\t{}", s.id, s.summary)?;
                }
                return Ok(());
            }
            if !statement_ids().contains(&args.statement.as_str()) {
                return Err(Error::UnknownStatement(args.statement));
            }
            let params = VerifyParams {
                corpus: parse_corpus(&args)?,
                seed: args.seed,
                r: args.r,
                q: args.q,
                orders: args.n_min.zip(args.n_max).or(args.n.map(|n| (n, n))).filter(|_| args.corpus.is_none()),
                seed_vertex: if args.all_seeds { None } else { args.seed_vertex },
                cfg,
            };
            let report = verify(&args.statement, &params)?;
            let text = if json_out { report.to_json_lines() } else { report.to_tsv() };
            out.write_all(text.as_bytes())?;
        }
        Command::Families { action: FamilyAction::Gen { spec } } => {
            let spec: FamilySpec = spec.join(" ").parse()?;
            let g = gen(spec)?;
            if json_out {
                let labels: Vec<String> = (0..g.order()).map(|v| g.label(v)).collect();
                let edges: Vec<(usize, usize)> = g.edges().collect();
                let v = json!({ "family": spec.to_string(), "n": g.order(), "graph6": emit_graph6(&g), "labels": labels, "edges": edges });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{}\t{}", spec, emit_graph6(&g))?;
            }
        }
        Command::CorpusExtremes { input, all_connected } => {
            let graphs = match all_connected {
                Some(n) => locdom::corpus::connected_graphs(n)?,
                None => parse_graphs(&read_input(input.as_ref())?)?,
            };
            let report = corpus_extremes(&graphs, &cfg)?;
            if json_out {
                writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
            } else {
                writeln!(out, "function\tmax\tgraph6")?;
                writeln!(out, "dim-det\t{}\t{}", report.max_dim_minus_det.value, report.max_dim_minus_det.graph6)?;
                writeln!(out, "lambda-det\t{}\t{}", report.max_lambda_minus_det.value, report.max_lambda_minus_det.graph6)?;
                if let Some(m) = &report.max_twin_free_lambda {
                    writeln!(out, "twin-free-lambda\t{}\t{}", m.value, m.graph6)?;
                }
            }
        }
        Command::FindOreWitness { max_n } => {
            let found = find_ore_witness(max_n, &cfg)?;
            match (found, json_out) {
                (Some(w), true) => writeln!(out, "{}", serde_json::to_string(&w).expect("witness serializes"))?,
                (Some(w), false) => writeln!(out, "{}\t{}\t{}", w.graph6, tsv_set(&json!(w.set)), tsv_set(&json!(w.complement)))?,
                (None, true) => writeln!(out, "{}", json!({ "found": false, "max_n": max_n }))?,
                (None, false) => writeln!(out, "none")?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
