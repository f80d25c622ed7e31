use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gturan::canon::canonical_form;
use gturan::count::{copies_per_vertex, count_target};
use gturan::formula::{best_bipartite_plus_edge, f_value, predicted_ex, TheoremCase};
use gturan::free::{find_witness, ForbiddenPattern};
use gturan::graph6;
use gturan::oracle::{Oracle, OracleResult, DEFAULT_LIMIT};
use gturan::parse::{parse_graph, parse_graph_list, parse_pattern};
use gturan::symmetrize::{run, Mode};
use gturan::verify::{case_params, verify, Suite, VerifyConfig, VerifyReport};
use gturan::{Error, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "gturan",
    version,
    about = "Generalized Turán numbers for generalized books"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Append-only JSON-lines cache of oracle results.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Seed for `random:n,p` graph specs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a spec and print it.
    Construct {
        /// Graph spec, e.g. `turan:7,3`, `book:3,1`, `join-turan:2,2,9`.
        spec: String,
    },
    /// Count copies of H in G.
    Count {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        /// Also report copies through each vertex.
        #[arg(long)]
        per_vertex: bool,
    },
    /// Exit 0 if G is F-free, 1 if it contains F.
    CheckFree {
        #[arg(long)]
        g: String,
        /// Pattern spec, e.g. `book:3,1`, `clique:4`, `union:clique:3+clique:2`.
        #[arg(long)]
        f: String,
    },
    /// Evaluate a predicted extremal value on its construction.
    Formula(FormulaArgs),
    /// Run symmetrization and print the trace as JSON lines.
    Symmetrize {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        /// `plain:r` (K_r-free) or `restricted:r,s` (B_{r,s}-free).
        #[arg(long)]
        mode: String,
        /// Step limit (default 10 n^2).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Exhaustive ex(n, H, F).
    Ex {
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "family")]
        h: Option<String>,
        #[arg(long)]
        f: String,
        /// `;`-separated target graphs whose counts are summed.
        #[arg(long, conflicts_with = "h")]
        family: Option<String>,
        #[arg(long, default_value_t = 10)]
        witnesses: usize,
        #[arg(long, env = "GTURAN_ORACLE_LIMIT", default_value_t = DEFAULT_LIMIT)]
        oracle_limit: usize,
    },
    /// Run a theorem-verification suite.
    Verify {
        /// zykov, thm1, thm2, thm3, thm4, krr1 or f_props.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        r_max: Option<usize>,
        #[arg(long, env = "GTURAN_ORACLE_LIMIT")]
        oracle_limit: Option<usize>,
    },
}

#[derive(Args)]
struct FormulaArgs {
    /// thm1i, thm1ii, thm2lower, thm2iii, thm3, thm4, zykov, moon, krr1, br1 or f.
    #[arg(long)]
    case: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Argument(_) | Error::Parse { .. } | Error::Infeasible(_) => 2,
            Error::Capacity(_) => 3,
            Error::Consistency(_) => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn arg_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::Construct { spec } => {
            let graph = graph_arg(spec, g.seed)?;
            emit(g.format, &describe(&graph));
            Ok(0)
        }
        Command::Count {
            g: gs,
            h,
            per_vertex,
        } => {
            let graph = graph_arg(gs, g.seed)?;
            let h = graph_arg(h, g.seed)?;
            let mut out = json!({
                "n": graph.n(),
                "h": graph6::encode(&h),
                "count": count_target(&graph, &h).to_string(),
            });
            if *per_vertex {
                let d: Vec<String> = copies_per_vertex(&graph, &h)
                    .iter()
                    .map(|c| c.to_string())
                    .collect();
                out["per_vertex"] = json!(d);
            }
            emit(g.format, &out);
            Ok(0)
        }
        Command::CheckFree { g: gs, f } => {
            let graph = graph_arg(gs, g.seed)?;
            let f = parse_pattern(f)?;
            let witness = find_witness(&graph, &f);
            emit(
                g.format,
                &json!({
                    "pattern": f.key(),
                    "free": witness.is_none(),
                    "witness": witness,
                }),
            );
            Ok(if witness.is_none() { 0 } else { 1 })
        }
        Command::Formula(args) => formula(args, g.format),
        Command::Symmetrize {
            g: gs,
            h,
            mode,
            cap,
        } => {
            let graph = graph_arg(gs, g.seed)?;
            let h = graph_arg(h, g.seed)?;
            let (mode, constraint) = parse_mode(mode)?;
            let trace = run(&graph, &h, &constraint, mode, *cap)?;
            for (step, after) in trace.steps.iter().zip(&trace.graphs) {
                let mut line = serde_json::to_value(step).expect("step serializes");
                line["graph"] = json!(graph6::encode(after));
                out(&format!("{line}\n"));
            }
            let last = json!({
                "final": graph6::encode(trace.final_graph()),
                "steps": trace.steps.len(),
                "terminated": trace.terminated,
                "complete_multipartite": trace.final_graph().is_complete_multipartite(),
            });
            out(&format!("{last}\n"));
            Ok(0)
        }
        Command::Ex {
            n,
            h,
            f,
            family,
            witnesses,
            oracle_limit,
        } => {
            let hs = match (h, family) {
                (_, Some(list)) => parse_graph_list(list)?,
                (Some(h), None) => vec![graph_arg(h, g.seed)?],
                (None, None) => return Err(arg_failure("either --h or --family is required")),
            };
            let f = parse_pattern(f)?;
            let oracle = Oracle {
                limit: *oracle_limit,
                witness_cap: *witnesses,
            };
            let (result, cached) = ex_cached(g.cache.as_deref(), &oracle, *n, &hs, &f)?;
            let mut out = serde_json::to_value(&result).expect("result serializes");
            out["n"] = json!(n);
            out["forbidden"] = json!(f.key());
            out["cached"] = json!(cached);
            emit(g.format, &out);
            Ok(0)
        }
        Command::Verify {
            suite,
            n_min,
            n_max,
            r_max,
            oracle_limit,
        } => {
            let suite: Suite = suite.parse()?;
            let mut cfg = VerifyConfig::for_suite(suite);
            cfg.n_min = n_min.unwrap_or(cfg.n_min);
            cfg.n_max = n_max.unwrap_or(cfg.n_max);
            cfg.r_max = r_max.unwrap_or(cfg.r_max);
            cfg.oracle_limit = oracle_limit.unwrap_or(cfg.oracle_limit);
            let report = verify(&cfg)?;
            match g.format {
                Format::Json => out(&format!("{}\n", report.to_json())),
                Format::Md => out(&report.to_markdown()),
                Format::Csv => out(&verify_csv(&report)),
            }
            Ok(0)
        }
    }
}

/// Graph spec, with `random:n,p` (G(n, p) from `--seed`) on top of the
/// library's specs.
fn graph_arg(spec: &str, seed: u64) -> Result<Graph, Failure> {
    if let Some(args) = spec.strip_prefix("random:") {
        let (n, p) = args
            .split_once(',')
            .ok_or_else(|| arg_failure(format!("`{spec}` needs n,p")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| arg_failure(format!("bad vertex count in `{spec}`")))?;
        let p: f64 = p
            .trim()
            .parse()
            .map_err(|_| arg_failure(format!("bad probability in `{spec}`")))?;
        if !(0.0..=1.0).contains(&p) {
            return Err(arg_failure(format!("probability {p} outside [0, 1]")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        return Ok(Graph::from_edges(n, &edges)?);
    }
    Ok(parse_graph(spec)?)
}

fn describe(g: &Graph) -> Value {
    json!({
        "graph6": graph6::encode(g),
        "canonical": canonical_form(g).to_string(),
        "n": g.n(),
        "edges": g.edge_count(),
    })
}

fn parse_mode(mode: &str) -> Result<(Mode, ForbiddenPattern), Failure> {
    let bad = || arg_failure(format!("mode `{mode}` is not plain:r or restricted:r,s"));
    let (kind, args) = mode.split_once(':').ok_or_else(bad)?;
    let nums: Vec<usize> = args
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    match (kind, nums.as_slice()) {
        ("plain", [r]) => Ok((Mode::Plain, ForbiddenPattern::Clique(*r))),
        ("restricted", [r, s]) if s < r => Ok((
            Mode::Restricted { r: *r, s: *s },
            ForbiddenPattern::Book { r: *r, s: *s },
        )),
        _ => Err(bad()),
    }
}

fn formula(a: &FormulaArgs, format: Format) -> Outcome {
    let need = |x: Option<usize>, name: &str| {
        x.ok_or_else(|| arg_failure(format!("--case {} needs --{name}", a.case)))
    };
    let n = a.n;
    if a.case == "f" {
        let (r, s, t) = (need(a.r, "r")?, need(a.s, "s")?, need(a.t, "t")?);
        let v = f_value(n, r, s, t)?;
        emit(
            format,
            &json!({"case": "f", "n": n, "r": r, "s": s, "t": t, "value": v}),
        );
        return Ok(0);
    }
    let case = match a.case.as_str() {
        "thm1i" => TheoremCase::Thm1I {
            n,
            k: need(a.k, "k")?,
            r: need(a.r, "r")?,
        },
        "thm1ii" => TheoremCase::Thm1Ii {
            n,
            k: need(a.k, "k")?,
            r: need(a.r, "r")?,
        },
        "thm2lower" => TheoremCase::Thm2Lower {
            n,
            r: need(a.r, "r")?,
            s: need(a.s, "s")?,
            t: need(a.t, "t")?,
        },
        "thm2iii" => TheoremCase::Thm2Iii {
            n,
            r: need(a.r, "r")?,
            t: need(a.t, "t")?,
        },
        "thm3" => TheoremCase::Thm3 {
            n,
            k: need(a.k, "k")?,
            r: need(a.r, "r")?,
        },
        "thm4" => TheoremCase::Thm4 {
            n,
            a: need(a.a, "a")?,
            b: need(a.b, "b")?,
        },
        "zykov" => TheoremCase::Zykov {
            n,
            k: need(a.k, "k")?,
            r: need(a.r, "r")?,
        },
        "moon" => TheoremCase::MoonEdges {
            n,
            k: need(a.k, "k")?,
            r: need(a.r, "r")?,
        },
        "krr1" => TheoremCase::PropKrr1 {
            n,
            r: need(a.r, "r")?,
        },
        "br1" => TheoremCase::BR1Edges {
            n,
            r: need(a.r, "r")?,
        },
        other => return Err(arg_failure(format!("unknown case `{other}`"))),
    };
    let p = predicted_ex(case)?;
    let mut out = json!({
        "case": case.id(),
        "params": case_params(&case),
        "predicted": p.value,
        "construction": graph6::encode(&p.construction),
        "forbidden": p.forbidden.key(),
    });
    if let TheoremCase::Thm4 { n, a, b } = case {
        let best = best_bipartite_plus_edge(n, a, b)?;
        out["m"] = json!(best.m);
        out["edge_part"] = json!(best.side);
    }
    emit(format, &out);
    Ok(0)
}

#[derive(Serialize, Deserialize, PartialEq, Eq)]
struct CacheKey {
    n: usize,
    targets: Vec<String>,
    forbidden: String,
    witness_cap: usize,
}

#[derive(Serialize, Deserialize)]
struct CacheLine {
    key: CacheKey,
    result: OracleResult,
}

fn ex_cached(
    cache: Option<&Path>,
    oracle: &Oracle,
    n: usize,
    hs: &[Graph],
    f: &ForbiddenPattern,
) -> Result<(OracleResult, bool), Failure> {
    let mut targets: Vec<String> = hs.iter().map(|h| canonical_form(h).to_string()).collect();
    targets.sort();
    let key = CacheKey {
        n,
        targets,
        forbidden: f.key(),
        witness_cap: oracle.witness_cap,
    };
    if let Some(path) = cache {
        if path.exists() {
            let file = std::fs::File::open(path)?;
            for line in BufReader::new(file).lines() {
                let line = line?;
                // unreadable lines are skipped, not fatal
                if let Ok(entry) = serde_json::from_str::<CacheLine>(&line) {
                    if entry.key == key {
                        return Ok((entry.result, true));
                    }
                }
            }
        }
    }
    let result = oracle.ex_family(n, hs, f)?;
    if let Some(path) = cache {
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        let line = CacheLine {
            key,
            result: result.clone(),
        };
        writeln!(
            file,
            "{}",
            serde_json::to_string(&line).expect("cache line serializes")
        )?;
    }
    Ok((result, false))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Writes to stdout. A reader that has gone away (`| head`) is not an error.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(format: Format, v: &Value) {
    let fields: Vec<(&String, &Value)> = v
        .as_object()
        .map(|o| o.iter().collect())
        .unwrap_or_default();
    match format {
        Format::Json => out(&format!(
            "{}\n",
            serde_json::to_string_pretty(v).expect("value serializes")
        )),
        Format::Md => {
            let mut text = String::from("| field | value |\n|---|---|\n");
            for (k, x) in fields {
                text.push_str(&format!("| {k} | {} |\n", scalar(x)));
            }
            out(&text);
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            let _ = w.write_record(fields.iter().map(|(k, _)| k.as_str()));
            let _ = w.write_record(fields.iter().map(|(_, x)| scalar(x)));
            let _ = w.flush();
        }
    }
}

fn verify_csv(report: &VerifyReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if report.config.suite == Suite::FProps {
        let _ = w.write_record(["r", "s", "t", "n1", "n2", "f_n1", "f_n2", "f_sum", "holds"]);
        for p in &report.props {
            let _ = w.write_record([
                p.r.to_string(),
                p.s.to_string(),
                p.t.to_string(),
                p.n1.to_string(),
                p.n2.to_string(),
                p.f_n1.to_string(),
                p.f_n2.to_string(),
                p.f_sum.to_string(),
                p.holds.to_string(),
            ]);
        }
    } else {
        let _ = w.write_record([
            "case",
            "params",
            "forbidden",
            "predicted",
            "oracle",
            "relation",
            "witness",
        ]);
        for r in &report.rows {
            let _ = w.write_record([
                r.case.id().to_string(),
                case_params(&r.case),
                r.forbidden.clone(),
                r.predicted.to_string(),
                r.oracle.as_ref().map_or(String::new(), |o| o.to_string()),
                r.relation.name().to_string(),
                r.witnesses.first().cloned().unwrap_or_default(),
            ]);
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}
