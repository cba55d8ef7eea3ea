use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sintur_cli::formats::{
    self, coloring_from_json, exact_result_to_json, graph_to_json, report_to_json, to_dot,
    SCHEMA_VERSION,
};
use sintur_cli::parallel::solve_parallel;
use sintur_cli::tables::{build_table, render_csv, render_markdown, Family};
use sintur_core::constructions::{self, Construction, IntraStrategy};
use sintur_core::graph::{Graph, PartSizes};
use sintur_core::pattern::PatternGraph;
use sintur_core::singular::find_singular_copy;
use sintur_core::solve::{Problem, SolveOptions};
use sintur_core::verify::{verify_construction, VerifySpec};
use sintur_core::worm::{check_worm, WormCheck, WormViolationKind};

#[derive(Parser)]
#[command(
    name = "sintur",
    version,
    about = "Singular Turán numbers, WORM colorings and regular Turán problems: \
             constructions, checkers, exact solvers and comparison tables"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Graph6,
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Markdown,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a named construction; optionally verify it and report
    Construct {
        /// caro-tuza-k3 | property-r | clique-extension | matching-removal |
        /// hanson-toft | p3-extremal | worm-turan | distinct-parts-turan |
        /// regular-odd-girth | complete-multipartite | turan
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Odd girth the construction must exceed (regular-odd-girth)
        #[arg(long)]
        g: Option<usize>,
        /// Size of the reattached set A (hanson-toft)
        #[arg(long, default_value_t = 1)]
        a_size: usize,
        /// Comma-separated part sizes (complete-multipartite)
        #[arg(long)]
        parts: Option<String>,
        /// Part count (turan)
        #[arg(long)]
        q: Option<usize>,
        /// Pattern name for worm-turan, e.g. S3 or P3
        #[arg(long)]
        pattern: Option<String>,
        /// none | cliques:<k> | regular:<d> (worm-turan)
        #[arg(long)]
        intra: Option<String>,
        #[arg(long, value_enum, default_value_t = OutFormat::Graph6)]
        format: OutFormat,
        /// Check the predicted edge count and the construction's predicate
        #[arg(long)]
        verify: bool,
    },
    /// Report singular copies, or validate a WORM coloring, as JSON.
    /// Exit 0: free/valid, 1: witness found, 2: input error.
    Check {
        /// Host graph in graph6
        #[arg(long)]
        graph: String,
        /// Pattern by registry name (K3, P3, C4, S3, ...)
        #[arg(long)]
        pattern: Option<String>,
        /// Arbitrary pattern in graph6
        #[arg(long)]
        pattern_g6: Option<String>,
        /// JSON file with a color per vertex; switches to WORM checking
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Exact solver: prints the optimum, extremal graphs and search stats
    Solve {
        /// ts | wex | ex | rex
        #[arg(long)]
        problem: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        pattern_g6: Option<String>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Certified lower bound restricting the search window
        #[arg(long)]
        min_edges: Option<usize>,
    },
    /// Compare formulas, constructions and oracle values over a range.
    /// Exit 1 when any row mismatches.
    Table {
        /// ts-k3 | ts-p3 | wex-p3 | rex-k3 | clique
        #[arg(long)]
        family: String,
        /// Inclusive range, e.g. 3..9
        #[arg(long)]
        n_range: String,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        with_oracle: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
        format: TableFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            println!("{}", json!({"schema": SCHEMA_VERSION, "error": msg}));
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Construct {
            name,
            n,
            r,
            g,
            a_size,
            parts,
            q,
            pattern,
            intra,
            format,
            verify,
        } => construct(
            &name, n, r, g, a_size, parts, q, pattern, intra, format, verify,
        ),
        Cmd::Check {
            graph,
            pattern,
            pattern_g6,
            coloring,
        } => check(&graph, pattern.as_deref(), pattern_g6.as_deref(), coloring),
        Cmd::Solve {
            problem,
            n,
            pattern,
            pattern_g6,
            workers,
            min_edges,
        } => solve_cmd(
            &problem,
            n,
            pattern.as_deref(),
            pattern_g6.as_deref(),
            workers,
            min_edges,
        ),
        Cmd::Table {
            family,
            n_range,
            r,
            with_oracle,
            workers,
            format,
        } => table_cmd(&family, &n_range, r, with_oracle, workers, format),
    }
}

fn need(v: Option<usize>, what: &str) -> Result<usize, String> {
    v.ok_or_else(|| format!("--{what} is required for this construction"))
}

fn resolve_pattern(name: Option<&str>, g6: Option<&str>) -> Result<PatternGraph, String> {
    match (name, g6) {
        (Some(n), _) => {
            PatternGraph::by_name(n).ok_or_else(|| format!("unknown pattern name {n:?}"))
        }
        (None, Some(s)) => {
            let g = formats::graph6::parse_graph6(s).map_err(|e| format!("{e}"))?;
            PatternGraph::new(g).map_err(|e| format!("{e}"))
        }
        (None, None) => Err("one of --pattern or --pattern-g6 is required".into()),
    }
}

fn clique_pattern(size: usize) -> Result<PatternGraph, String> {
    PatternGraph::by_name(&format!("K{size}"))
        .map(Ok)
        .unwrap_or_else(|| PatternGraph::new(Graph::complete(size)).map_err(|e| format!("{e}")))
}

fn parse_intra(spec: Option<&str>) -> Result<IntraStrategy, String> {
    match spec.unwrap_or("none") {
        "none" => Ok(IntraStrategy::None),
        other => {
            if let Some(k) = other.strip_prefix("cliques:") {
                let k: usize = k
                    .parse()
                    .map_err(|_| format!("bad clique size in {other:?}"))?;
                Ok(IntraStrategy::DisjointCliques(k))
            } else if let Some(d) = other.strip_prefix("regular:") {
                let d: usize = d.parse().map_err(|_| format!("bad degree in {other:?}"))?;
                Ok(IntraStrategy::Regular(d))
            } else {
                Err(format!("unknown intra strategy {other:?}"))
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn construct(
    name: &str,
    n: Option<usize>,
    r: Option<usize>,
    g: Option<usize>,
    a_size: usize,
    parts: Option<String>,
    q: Option<usize>,
    pattern: Option<String>,
    intra: Option<String>,
    format: OutFormat,
    verify: bool,
) -> Result<ExitCode, String> {
    let err = |e: sintur_core::ConstructionError| format!("{e}");
    let mut worm_pattern: Option<PatternGraph> = None;
    let construction: Construction = match name {
        "caro-tuza-k3" => constructions::caro_tuza_k3(need(n, "n")?).map_err(err)?,
        "property-r" => {
            constructions::property_r_graph(need(n, "n")?, need(r, "r")?).map_err(err)?
        }
        "clique-extension" => {
            constructions::clique_extension_graph(need(n, "n")?, need(r, "r")?).map_err(err)?
        }
        "matching-removal" => {
            constructions::matching_removal_graph(need(n, "n")?, need(r, "r")?).map_err(err)?
        }
        "hanson-toft" => {
            constructions::hanson_toft_graph(need(n, "n")?, need(r, "r")?, a_size).map_err(err)?
        }
        "p3-extremal" => constructions::p3_extremal(need(n, "n")?).map_err(err)?,
        "worm-turan" => {
            let pat = resolve_pattern(pattern.as_deref(), None)?;
            let strategy = parse_intra(intra.as_deref())?;
            let c = constructions::worm_turan_graph(need(n, "n")?, &pat, strategy).map_err(err)?;
            worm_pattern = Some(pat);
            c
        }
        "distinct-parts-turan" => {
            constructions::distinct_parts_turan(need(n, "n")?, need(r, "r")?).map_err(err)?
        }
        "regular-odd-girth" => {
            constructions::regular_odd_girth_graph(need(n, "n")?, need(g, "g")?).map_err(err)?
        }
        "complete-multipartite" => {
            let spec = parts.ok_or("--parts is required, e.g. --parts 1,1,3,3")?;
            let sizes: Result<Vec<usize>, _> = spec.split(',').map(|s| s.trim().parse()).collect();
            let sizes = sizes.map_err(|_| format!("bad part list {spec:?}"))?;
            let ps = PartSizes::new(sizes).map_err(|e| format!("{e}"))?;
            let graph = Graph::complete_multipartite(&ps);
            let predicted = graph.edge_count();
            Construction {
                graph,
                predicted_edges: predicted,
                coloring: None,
            }
        }
        "turan" => {
            let graph = Graph::turan(need(n, "n")?, need(q, "q")?).map_err(|e| format!("{e}"))?;
            let predicted = graph.edge_count();
            Construction {
                graph,
                predicted_edges: predicted,
                coloring: None,
            }
        }
        other => return Err(format!("unknown construction {other:?}")),
    };

    match format {
        OutFormat::Graph6 => println!(
            "{}",
            formats::graph6::to_graph6(&construction.graph).map_err(|e| format!("{e}"))?
        ),
        OutFormat::Dot => print!("{}", to_dot(&construction.graph)),
        OutFormat::Json => println!("{}", graph_to_json(&construction.graph)),
    }

    if !verify {
        return Ok(ExitCode::SUCCESS);
    }
    let k3;
    let p3;
    let kr1;
    let spec = match name {
        "caro-tuza-k3" => {
            k3 = clique_pattern(3)?;
            VerifySpec::SingularFree(&k3)
        }
        "property-r" | "clique-extension" | "matching-removal" => {
            kr1 = clique_pattern(need(r, "r")? + 1)?;
            VerifySpec::SingularFree(&kr1)
        }
        "hanson-toft" => VerifySpec::CliqueFree(need(r, "r")? + 1),
        "p3-extremal" => {
            p3 = PatternGraph::by_name("P3").expect("registry");
            VerifySpec::SingularFree(&p3)
        }
        "worm-turan" => VerifySpec::Worm(
            worm_pattern.as_ref().expect("set above"),
            construction.coloring.as_ref().expect("worm-turan colors"),
        ),
        "distinct-parts-turan" => VerifySpec::DistinctDegrees,
        "regular-odd-girth" => VerifySpec::RegularWithOddGirthAbove(need(g, "g")?),
        _ => VerifySpec::EdgesOnly,
    };
    let report = verify_construction(&construction.graph, spec, construction.predicted_edges)
        .map_err(|e| format!("{e}"))?;
    println!("{}", report_to_json(&report));
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn check(
    graph: &str,
    pattern: Option<&str>,
    pattern_g6: Option<&str>,
    coloring: Option<PathBuf>,
) -> Result<ExitCode, String> {
    let g = formats::graph6::parse_graph6(graph).map_err(|e| format!("{e}"))?;
    let pat = resolve_pattern(pattern, pattern_g6)?;
    match coloring {
        None => {
            let witness = find_singular_copy(&g, &pat).map_err(|e| format!("{e}"))?;
            match witness {
                None => {
                    println!(
                        "{}",
                        json!({
                            "schema": SCHEMA_VERSION,
                            "pattern": pat.display_name(),
                            "singular_free": true,
                        })
                    );
                    Ok(ExitCode::SUCCESS)
                }
                Some(w) => {
                    println!(
                        "{}",
                        json!({
                            "schema": SCHEMA_VERSION,
                            "pattern": pat.display_name(),
                            "singular_free": false,
                            "witness": {
                                "vertices": w.vertices,
                                "degrees": w.degrees,
                                "mode": match w.mode {
                                    sintur_core::singular::SingularMode::AllEqual => "all-equal",
                                    sintur_core::singular::SingularMode::AllDistinct => "all-distinct",
                                },
                            },
                        })
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| format!("bad coloring JSON: {e}"))?;
            let coloring =
                coloring_from_json(&value).ok_or("coloring must be a JSON array of integers")?;
            match check_worm(&g, &pat, &coloring).map_err(|e| format!("{e}"))? {
                WormCheck::Valid => {
                    println!(
                        "{}",
                        json!({
                            "schema": SCHEMA_VERSION,
                            "pattern": pat.display_name(),
                            "worm_valid": true,
                        })
                    );
                    Ok(ExitCode::SUCCESS)
                }
                WormCheck::Violation(v) => {
                    println!(
                        "{}",
                        json!({
                            "schema": SCHEMA_VERSION,
                            "pattern": pat.display_name(),
                            "worm_valid": false,
                            "violation": {
                                "kind": match v.kind {
                                    WormViolationKind::Monochromatic => "monochromatic",
                                    WormViolationKind::Rainbow => "rainbow",
                                },
                                "vertices": v.vertices,
                            },
                        })
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn solve_cmd(
    problem: &str,
    n: usize,
    pattern: Option<&str>,
    pattern_g6: Option<&str>,
    workers: usize,
    min_edges: Option<usize>,
) -> Result<ExitCode, String> {
    let problem = Problem::from_tag(problem)
        .ok_or_else(|| format!("unknown problem {problem:?}; use ts, wex, ex or rex"))?;
    let pat = resolve_pattern(pattern, pattern_g6)?;
    let opts = SolveOptions {
        min_edges_hint: min_edges,
    };
    let (result, elapsed) =
        solve_parallel(problem, n, &pat, &opts, workers.max(1)).map_err(|e| format!("{e}"))?;
    println!(
        "{}",
        exact_result_to_json(&result, elapsed.as_millis(), workers.max(1))
    );
    Ok(ExitCode::SUCCESS)
}

fn table_cmd(
    family: &str,
    n_range: &str,
    r: Option<usize>,
    with_oracle: bool,
    workers: usize,
    format: TableFormat,
) -> Result<ExitCode, String> {
    let family = Family::from_name(family).ok_or_else(|| {
        format!("unknown family {family:?}; use ts-k3, ts-p3, wex-p3, rex-k3 or clique")
    })?;
    let (from, to) = n_range
        .split_once("..")
        .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
        .ok_or_else(|| format!("bad range {n_range:?}; expected e.g. 3..9"))?;
    if from > to {
        return Err(format!("empty range {n_range:?}"));
    }
    let table = build_table(family, from, to, r, with_oracle, workers.max(1))?;
    match format {
        TableFormat::Markdown => print!("{}", render_markdown(&table)),
        TableFormat::Csv => print!("{}", render_csv(&table)),
    }
    Ok(if table.all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
