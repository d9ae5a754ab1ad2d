//! Command-line interface: construct Mycielskians, compute symmetry
//! parameters, inspect twin structure, and verify the identity registry.
//!
//! Exit codes: 0 success (all verdicts pass), 1 verification failures,
//! 2 usage or input errors.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};

use mycsym::corpus::{generate_corpus, load_corpus};
use mycsym::registry::{run_verification, VerifyOptions};
use mycsym::report::{render_json, render_table};
use mycsym::{
    encode_graph6, generalized_mycielskian, iterated_mycielskian, minimum_twin_cover,
    param_report, parse_edge_list, parse_graph6, quotient_graph, twin_partition, Graph,
    ParamSelection, VertexRole, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "mycsym",
    version,
    about = "Generalized Mycielskian graphs and their symmetry parameters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build mu_t(G) and print it in graph6
    Construct {
        /// Number of shadow levels t >= 1
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Apply the classical construction (t = 1) this many times instead
        #[arg(long, conflicts_with = "t")]
        iterate: Option<usize>,
        /// After the graph6 line, print one `vertex role` line per vertex
        #[arg(long)]
        roles: bool,
        /// Input graph file (edge list or graph6); `-` reads stdin
        input: String,
    },
    /// Compute symmetry parameters of a graph, as JSON
    Params {
        /// Determining number
        #[arg(long)]
        det: bool,
        /// Distinguishing number
        #[arg(long)]
        dist: bool,
        /// Cost of 2-distinguishing
        #[arg(long)]
        rho: bool,
        /// Distinguishing index (edge colorings)
        #[arg(long)]
        dist_prime: bool,
        /// Colorings examined per search before reporting bounds
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Input graph file (edge list or graph6); `-` reads stdin
        input: String,
    },
    /// Print twin classes, a minimum twin cover, and the twin quotient
    Quotient {
        /// Input graph file (edge list or graph6); `-` reads stdin
        input: String,
    },
    /// Check the identity registry over a corpus of small graphs
    Verify {
        /// Comma-separated identity ids, or `all`
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Largest base-graph order (generated corpora are exhaustive up to this)
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        /// Comma-separated shadow-level counts
        #[arg(long, default_value = "1,2")]
        t: String,
        /// Read base graphs from this graph6 file instead of generating them
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Shift every expected value by this amount (a non-zero shift must fail)
        #[arg(long, default_value_t = 0)]
        inject_fault: i64,
        /// Colorings examined per search before reporting bounds
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

/// Accepts either a single graph6 line or an edge list whose first
/// non-comment line is the vertex count.
fn parse_graph_input(text: &str) -> Result<Graph, String> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    match lines.as_slice() {
        [] => Err("empty input".to_string()),
        [first, rest @ ..] if first.chars().all(|c| c.is_ascii_digit()) => {
            let n: usize = first
                .parse()
                .map_err(|_| format!("bad vertex count `{first}`"))?;
            parse_edge_list(&rest.join("\n"), n).map_err(|e| e.to_string())
        }
        [one] => parse_graph6(one).map_err(|e| e.to_string()),
        _ => Err(
            "expected a single graph: one graph6 line, or a vertex count followed by edge lines"
                .to_string(),
        ),
    }
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|_| format!("bad integer `{p}` in list")))
        .collect()
}

fn cmd_construct(t: usize, iterate: Option<usize>, roles: bool, input: &str) -> Result<i32, String> {
    let g = parse_graph_input(&read_input(input)?)?;
    let m = match iterate {
        Some(k) => iterated_mycielskian(&g, k),
        None => generalized_mycielskian(&g, t),
    }
    .map_err(|e| e.to_string())?;
    println!("{}", encode_graph6(m.graph()).map_err(|e| e.to_string())?);
    if roles {
        for v in 0..m.graph().n() {
            match m.vertex_role(v) {
                VertexRole::Original(i) => println!("{v} original {i}"),
                VertexRole::Shadow { level, base } => println!("{v} shadow level {level} of {base}"),
                VertexRole::Root => println!("{v} root"),
            }
        }
    }
    Ok(0)
}

fn cmd_params(
    det: bool,
    dist: bool,
    rho: bool,
    dist_prime: bool,
    budget: u64,
    input: &str,
) -> Result<i32, String> {
    if budget == 0 {
        return Err("budget must be at least 1".to_string());
    }
    let g = parse_graph_input(&read_input(input)?)?;
    let sel = if det || dist || rho || dist_prime {
        ParamSelection {
            determining: det,
            distinguishing: dist,
            cost_two: rho,
            edge_distinguishing: dist_prime,
        }
    } else {
        ParamSelection::all()
    };
    let report = param_report(&g, sel, budget);
    let rendered =
        serde_json::to_string_pretty(&report).expect("parameter reports always serialize");
    println!("{rendered}");
    Ok(0)
}

fn cmd_quotient(input: &str) -> Result<i32, String> {
    let g = parse_graph_input(&read_input(input)?)?;
    let part = twin_partition(&g);
    let cover = minimum_twin_cover(&g);
    let q = quotient_graph(&g);
    let classes: Vec<Vec<usize>> =
        part.classes().iter().map(|c| c.iter().copied().collect()).collect();
    let payload = serde_json::json!({
        "n": g.n(),
        "twin_free": part.is_twin_free(),
        "classes": classes,
        "cover": cover.members.iter().copied().collect::<Vec<usize>>(),
        "representatives": q.representatives,
        "quotient_graph6": encode_graph6(&q.graph).ok(),
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&payload).expect("quotient reports always serialize")
    );
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    theorem: &str,
    nmax: usize,
    t: &str,
    corpus: Option<&str>,
    format: Format,
    jobs: usize,
    inject_fault: i64,
    budget: u64,
) -> Result<i32, String> {
    let t_values = parse_usize_list(t)?;
    let theorems: Vec<String> = theorem
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect();
    let mut graphs = match corpus {
        Some(path) => load_corpus(&read_input(path)?).map_err(|e| e.to_string())?,
        None => generate_corpus(nmax).map_err(|e| e.to_string())?,
    };
    let before = graphs.len();
    graphs.retain(|g| g.n() <= nmax);
    let dropped = before - graphs.len();
    let opts = VerifyOptions { theorems, n_max: nmax, t_values, budget, fault: inject_fault, jobs };
    let mut report = run_verification(&graphs, &opts).map_err(|e| e.to_string())?;
    if dropped > 0 {
        report
            .warnings
            .insert(0, format!("dropped {dropped} corpus graphs with more than {nmax} vertices"));
    }
    match format {
        Format::Table => print!("{}", render_table(&report)),
        Format::Json => print!("{}", render_json(&report)),
    }
    Ok(report.exit_code())
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct { t, iterate, roles, input } => {
            cmd_construct(t, iterate, roles, &input)
        }
        Command::Params { det, dist, rho, dist_prime, budget, input } => {
            cmd_params(det, dist, rho, dist_prime, budget, &input)
        }
        Command::Quotient { input } => cmd_quotient(&input),
        Command::Verify { theorem, nmax, t, corpus, format, jobs, inject_fault, budget } => {
            cmd_verify(&theorem, nmax, &t, corpus.as_deref(), format, jobs, inject_fault, budget)
        }
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}
