use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use shephard::complex::{
    build_fundamental_domain, build_theta_hat_ball, cat0_report, RadiusPolicy,
};
use shephard::dihedral::{
    certify_girth, classify, sample_pairs, BruteForce, DihedralSession, ElementOrder, SyllableWord,
};
use shephard::graph::{parse_graph, ExtendedPresentationGraph, DEFAULT_MOUSSONG_LIMIT};
use shephard::report::{
    build_dihedral_report, build_verdict_report, domain_dot, graph_dot, theta_dot, to_sorted_json,
    ReportOptions,
};
use shephard::triangle::{ball_json, ball_svg, CayleyBall, TriangleGroup, DEFAULT_BUDGET};
use shephard::{Error, Result};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "shephard",
    version,
    about = "Dihedral and 2-dimensional Shephard groups"
)]
struct Cli {
    /// Element budget for enumerations.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Ball radius; commands that need one pick a default when omitted.
    #[arg(long, global = true)]
    radius: Option<u32>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Triple {
    p: u32,
    q: u32,
    r: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a triple, or report verdicts for a graph file.
    Classify {
        #[arg(num_args = 3, value_names = ["P", "Q", "R"], required_unless_present = "graph")]
        triple: Vec<u32>,
        #[arg(long, conflicts_with = "triple")]
        graph: Option<PathBuf>,
    },
    /// Word problem queries in Sh(p, q, r).
    Word {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, value_name = "WORD")]
        trivial: Option<String>,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        equal: Option<Vec<String>>,
        #[arg(long, value_name = "WORD")]
        order: Option<String>,
        #[arg(long, value_name = "WORD")]
        normalform: Option<String>,
        /// Compare the two equality oracles on this many seeded random pairs.
        #[arg(long, value_name = "N")]
        sample: Option<usize>,
        /// Largest image order tried when computing element orders.
        #[arg(long, default_value_t = 10_000)]
        cutoff: u64,
    },
    /// Search for trivial cyclically reduced words below syllable length 2q.
    Girth {
        #[command(flatten)]
        triple: Triple,
        /// Largest syllable length searched.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Links, fundamental domains and link-girth certificates.
    Complex {
        #[command(subcommand)]
        what: ComplexCommand,
    },
    /// Write figures and data files.
    Export {
        #[command(subcommand)]
        what: ExportCommand,
    },
    /// Full verdict report for a graph file.
    Report {
        graph: PathBuf,
        /// Also run the link-girth certificate.
        #[arg(long)]
        certificate: bool,
        #[arg(long, default_value_t = DEFAULT_MOUSSONG_LIMIT)]
        moussong_limit: usize,
    },
}

#[derive(Subcommand)]
enum ComplexCommand {
    /// Ball in the coset graph of <s> and <t>.
    ThetaHat {
        #[command(flatten)]
        triple: Triple,
    },
    Domain {
        graph: PathBuf,
    },
    Certificate {
        graph: PathBuf,
    },
}

#[derive(Subcommand)]
enum ExportCommand {
    /// Tiling ball of the triangle group containing the central quotient.
    Tiling {
        #[command(flatten)]
        triple: Triple,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long = "out-json")]
        out_json: Option<PathBuf>,
    },
    /// Ball of the coset graph.
    Ball {
        #[command(flatten)]
        triple: Triple,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long = "out-json")]
        out_json: Option<PathBuf>,
    },
    Domain {
        graph: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long = "out-json")]
        out_json: Option<PathBuf>,
    },
    Certificate {
        graph: PathBuf,
        #[arg(long = "out-json")]
        out_json: Option<PathBuf>,
    },
    /// The presentation graph itself.
    Graph {
        graph: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

fn read_graph(path: &Path) -> Result<ExtendedPresentationGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    parse_graph(&text)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn word(s: &str) -> Result<SyllableWord> {
    SyllableWord::parse(s)
}

struct Output {
    json: Value,
    text: String,
}

fn out(json: Value, text: impl Into<String>) -> Output {
    Output {
        json,
        text: text.into(),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn run(cli: &Cli) -> Result<Output> {
    let budget = cli.budget;
    match &cli.command {
        Command::Classify { triple, graph } => {
            if let Some(path) = graph {
                let g = read_graph(path)?;
                let r = build_verdict_report(&g, ReportOptions::default())?;
                return Ok(out(to_value(&r), r.to_text()));
            }
            let r = build_dihedral_report(triple[0], triple[1], triple[2])?;
            Ok(out(to_value(&r), r.to_text()))
        }
        Command::Word {
            triple: Triple { p, q, r },
            trivial,
            equal,
            order,
            normalform,
            sample,
            cutoff,
        } => {
            let mut s = DihedralSession::new(*p, *q, *r, budget)?;
            if let Some(w) = trivial {
                let v = s.is_trivial(&word(w)?)?;
                return Ok(out(
                    json!({"query": "trivial", "word": w, "result": v}),
                    v.to_string(),
                ));
            }
            if let Some(uv) = equal {
                let v = s.are_equal(&word(&uv[0])?, &word(&uv[1])?)?;
                return Ok(out(
                    json!({"query": "equal", "words": uv, "result": v}),
                    v.to_string(),
                ));
            }
            if let Some(w) = order {
                let o = s.element_order(&word(w)?, *cutoff)?;
                let text = match o {
                    ElementOrder::Finite(n) => n.to_string(),
                    ElementOrder::Infinite => "infinite".into(),
                };
                return Ok(out(json!({"query": "order", "word": w, "result": o}), text));
            }
            if let Some(w) = normalform {
                let nf = s.normalize(&word(w)?)?;
                let j = s.normal_form_json(&nf);
                let text = format!(
                    "deltaImage = {}, z = {}",
                    if j["deltaIsIdentity"] == true {
                        "identity".to_string()
                    } else {
                        format!("section word {}", nf.section_witness)
                    },
                    nf.z_exponent
                );
                return Ok(out(
                    json!({"query": "normalform", "word": w, "result": j}),
                    text,
                ));
            }
            if let Some(n) = sample {
                let oracle = BruteForce::new(*p, *q, *r, budget)?;
                let pairs = sample_pairs(*p, *q, *r, *n, 12, cli.seed)?;
                let mut agree = 0;
                let mut equal = 0;
                let mut disagreements = Vec::new();
                for (u, v) in &pairs {
                    let a = s.are_equal(u, v)?;
                    let b = oracle.equal(u, v)?;
                    equal += usize::from(a);
                    if a == b {
                        agree += 1;
                    } else {
                        disagreements.push(json!([u, v]));
                    }
                }
                let text = format!("{agree}/{} pairs agree ({equal} equal)", pairs.len());
                let j = json!({
                    "query": "sample", "seed": cli.seed, "pairs": pairs.len(),
                    "agree": agree, "equal": equal, "disagreements": disagreements,
                });
                return Ok(out(j, text));
            }
            Err(Error::InvalidInput(
                "one of --trivial, --equal, --order, --normalform, --sample is required".into(),
            ))
        }
        Command::Girth {
            triple: Triple { p, q, r },
            max,
        } => {
            let top = max.unwrap_or(2 * *q as usize - 1);
            let c = certify_girth(*p, *q, *r, top, budget as u64)?;
            let text = if c.certified {
                format!(
                    "no trivial word below {}; bound 2q = {} certified ({} candidates, searched to {})",
                    c.bound, c.bound, c.candidates, c.searched_up_to
                )
            } else {
                format!(
                    "{} trivial words below {}: bound refuted",
                    c.trivial_below_bound.len(),
                    c.bound
                )
            };
            let text = match &c.minimal_trivial_word {
                Some(w) => format!(
                    "{text}\nshortest trivial word found: {w} (length {})",
                    w.len()
                ),
                None => text,
            };
            Ok(out(to_value(&c), text))
        }
        Command::Complex { what } => match what {
            ComplexCommand::ThetaHat {
                triple: Triple { p, q, r },
            } => {
                let radius = cli.radius.unwrap_or(2 * q + 2);
                let b = build_theta_hat_ball(*p, *q, *r, radius, budget)?;
                let girth = b.girth().map(|c| c.length);
                let quotient = if classify(*p, *q, *r)?.regime.is_infinite() {
                    Some(b.check_quotient(budget)?)
                } else {
                    None
                };
                let girth_text = match girth {
                    Some(g) => format!("girth {g}"),
                    None => "no cycle".into(),
                };
                let text = format!(
                    "radius {radius}: {} vertices ({} of <s>, {} of <t>), {} edges\nbipartite: {}  interior valences: {}  complete: {}\n{girth_text} (required 2q = {})",
                    b.vertex_count(),
                    b.count_of(shephard::dihedral::Gen::S),
                    b.count_of(shephard::dihedral::Gen::T),
                    b.edges.len(),
                    b.is_bipartite(),
                    b.interior_valences_ok(),
                    b.complete,
                    2 * q
                );
                let j = json!({
                    "schemaVersion": 1, "triple": [p, q, r], "radius": radius,
                    "vertices": b.vertex_count(), "edges": b.edges.len(),
                    "bipartite": b.is_bipartite(), "interiorValencesOk": b.interior_valences_ok(),
                    "complete": b.complete, "girth": girth, "requiredGirth": 2 * q,
                    "edgeLengthOverPi": b.edge_length_over_pi.to_string(),
                    "quotientCheck": quotient,
                });
                Ok(out(j, text))
            }
            ComplexCommand::Domain { graph } => {
                let d = build_fundamental_domain(&read_graph(graph)?)?;
                let text = format!(
                    "{} spherical subsets, {} cells, dimension {}, simplices by dimension {:?}",
                    d.poset.len(),
                    d.cells.len(),
                    d.dimension,
                    d.simplex_counts
                );
                Ok(out(to_value(&d), text))
            }
            ComplexCommand::Certificate { graph } => certificate(cli, &read_graph(graph)?),
        },
        Command::Export { what } => export(cli, what),
        Command::Report {
            graph,
            certificate,
            moussong_limit,
        } => {
            let g = read_graph(graph)?;
            let opts = ReportOptions {
                moussong_limit: *moussong_limit,
                certificate: certificate.then_some((policy(cli), budget)),
            };
            let r = build_verdict_report(&g, opts)?;
            Ok(out(to_value(&r), r.to_text()))
        }
    }
}

fn policy(cli: &Cli) -> RadiusPolicy {
    match cli.radius {
        Some(r) => RadiusPolicy::Fixed(r),
        None => RadiusPolicy::TwiceLabelPlusFour,
    }
}

fn certificate(cli: &Cli, g: &ExtendedPresentationGraph) -> Result<Output> {
    let c = cat0_report(g, policy(cli), cli.budget, DEFAULT_MOUSSONG_LIMIT)?;
    let mut text = format!("verdict: {}\n", to_value(&c.verdict).as_str().unwrap_or(""));
    for e in &c.per_edge {
        let found = match &e.shortest_cycle_found {
            Some(s) => format!("shortest cycle {}", s.length),
            None => "no cycle".into(),
        };
        text += &format!(
            "  {} -{}- {}: {}  required {}  radius {:?}  {found}\n",
            e.a,
            e.m,
            e.b,
            to_value(&e.status).as_str().unwrap_or(""),
            e.required_girth,
            e.certified_radius
        );
    }
    if let Some(reason) = &c.reason {
        text += &format!("  {reason}\n");
    }
    Ok(out(to_value(&c), text))
}

fn export(cli: &Cli, what: &ExportCommand) -> Result<Output> {
    let budget = cli.budget;
    let mut written = Vec::new();
    let mut save = |path: &Option<PathBuf>, contents: &str| -> Result<()> {
        if let Some(p) = path {
            write_file(p, contents)?;
            written.push(p.display().to_string());
        }
        Ok(())
    };
    // printed to stdout when no output path is given
    let fallback = match what {
        ExportCommand::Tiling {
            triple: Triple { p, q, r },
            svg,
            out_json,
        } => {
            let (a, b, c) = classify(*p, *q, *r)?.triangle();
            let group = Arc::new(TriangleGroup::new(a, b, c)?);
            let ball = CayleyBall::new(group, cli.radius.unwrap_or(6), budget)?;
            let table = ball.faces();
            if svg.is_some() {
                save(svg, &ball_svg(&ball, &table)?)?;
            }
            let j = to_sorted_json(&ball_json(&ball, &table));
            save(out_json, &j)?;
            j
        }
        ExportCommand::Ball {
            triple: Triple { p, q, r },
            dot,
            out_json,
        } => {
            let b = build_theta_hat_ball(*p, *q, *r, cli.radius.unwrap_or(2 * q + 2), budget)?;
            let d = theta_dot(&b);
            save(dot, &d)?;
            save(
                out_json,
                &to_sorted_json(&json!({"schemaVersion": 1, "ball": b})),
            )?;
            d
        }
        ExportCommand::Domain {
            graph,
            dot,
            out_json,
        } => {
            let dom = build_fundamental_domain(&read_graph(graph)?)?;
            let d = domain_dot(&dom);
            save(dot, &d)?;
            save(
                out_json,
                &to_sorted_json(&json!({"schemaVersion": 1, "domain": dom})),
            )?;
            d
        }
        ExportCommand::Certificate { graph, out_json } => {
            let c = certificate(cli, &read_graph(graph)?)?;
            let j = to_sorted_json(&json!({"schemaVersion": 1, "certificate": c.json}));
            save(out_json, &j)?;
            j
        }
        ExportCommand::Graph { graph, dot } => {
            let d = graph_dot(&read_graph(graph)?);
            save(dot, &d)?;
            d
        }
    };
    if written.is_empty() {
        return Ok(out(
            json!({"schemaVersion": 1, "content": fallback}),
            fallback,
        ));
    }
    let text = format!("wrote {}", written.join(", "));
    Ok(out(json!({"schemaVersion": 1, "written": written}), text))
}

/// Print to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(o) => {
            if cli.json {
                let mut j = o.json;
                if let Value::Object(m) = &mut j {
                    m.entry("schemaVersion").or_insert(json!(1));
                }
                emit(&to_sorted_json(&j));
            } else {
                emit(o.text.trim_end());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
