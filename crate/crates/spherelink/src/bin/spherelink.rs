//! Command-line front end: enumeration, intrinsic checking, minimality
//! certification, minor oracles, moves, claim verification, bounded
//! search, rendering, and certificate replay.
//!
//! Exit codes: 0 success / property holds, 1 property fails or claim
//! mismatch, 2 usage error, 3 invalid input data.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use spherelink::arrange::{is_outerplanar, is_planar, spherical_arrangements, write_arrangement};
use spherelink::catalog::{self, CatalogError, MoveSpec};
use spherelink::graph::Graph;
use spherelink::intrinsic::{
    apply_sub_dangle, apply_vert_bar, check_sub_dangle, check_vert_bar, dehkordi_farr_oracle,
    is_intrinsically_linked, is_minor_minimal, HypothesisReport, MinimalityFailure, Settings,
};
use spherelink::io::{
    doc_from_json, doc_to_json, from_graph6, intrinsic_doc, load_graph, load_graph6_stream,
    minimality_doc, replay, save_graph, to_graph6, verify_claims, ClaimStatus,
};
use spherelink::link::LinkShape;
use spherelink::render::render_svg;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DATA: u8 = 3;

#[derive(Parser)]
#[command(name = "spherelink", version, about = "spherical embeddings and intrinsic 3-linking")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// worker threads (results are independent of this)
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct Source {
    /// catalog name (e.g. D2, K4uK4)
    name: Option<String>,
    /// read the graph from a file (text format or graph6)
    #[arg(long)]
    file: Option<PathBuf>,
    /// read the graph from standard input
    #[arg(long)]
    stdin: bool,
}

#[derive(Args)]
struct Convention {
    /// treat mirror-image embeddings as distinct
    #[arg(long)]
    no_reflection: bool,
    /// restrict type-I links to nested configurations
    #[arg(long)]
    nested_only: bool,
}

impl Convention {
    fn settings(&self) -> Settings {
        Settings {
            reflection: !self.no_reflection,
            nested_only: self.nested_only,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate spherical embeddings up to equivalence
    Embeddings {
        #[command(flatten)]
        src: Source,
        /// print only the number of classes (default)
        #[arg(long)]
        count: bool,
        /// print every arrangement
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        conv: Convention,
    },
    /// Decide intrinsic linkedness for a link shape
    Check {
        #[command(flatten)]
        src: Source,
        /// link shape: 2link, type1 or type2
        #[arg(long)]
        link: String,
        #[command(flatten)]
        conv: Convention,
        /// write a replayable certificate
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Certify minor-minimality for a link shape
    Minimal {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        link: String,
        #[command(flatten)]
        conv: Convention,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Forbidden-minor analysis (planarity, outerplanarity, 2-link oracle)
    Minor {
        #[command(flatten)]
        src: Source,
    },
    /// Evaluate the move hypotheses attached to a catalog entry
    Moves {
        /// catalog entry with a move (D9a, D10a: vert-bar; D3: sub-dangle)
        name: String,
        #[command(flatten)]
        conv: Convention,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Check every claim of the built-in manifest
    VerifyPaper {
        #[command(flatten)]
        conv: Convention,
    },
    /// Bounded search for minor-minimal intrinsically linked graphs
    Search {
        #[arg(long)]
        link: String,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        max_edges: Option<usize>,
        /// graph6 stream of external candidates
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        conv: Convention,
        /// write all hit certificates as a JSON array
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Render the first arrangement to SVG
    Render {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        conv: Convention,
    },
    /// Validate a certificate file without re-deriving it
    Replay {
        file: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn parse_graph_text(text: &str) -> Result<Graph, Failure> {
    match load_graph(text) {
        Ok(g) => Ok(g),
        Err(text_err) => {
            let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
            if lines.len() == 1 {
                if let Ok(g) = from_graph6(lines[0]) {
                    return Ok(g);
                }
            }
            Err(fail(EXIT_DATA, text_err.to_string()))
        }
    }
}

fn resolve_source(src: &Source) -> Result<Graph, Failure> {
    let picked =
        usize::from(src.name.is_some()) + usize::from(src.file.is_some()) + usize::from(src.stdin);
    if picked != 1 {
        return Err(fail(
            EXIT_USAGE,
            "give exactly one graph source: a catalog name, --file or --stdin",
        ));
    }
    if let Some(name) = &src.name {
        return catalog::builtin(name).map_err(|e| match e {
            CatalogError::Unknown(_) | CatalogError::PendingDefinition(_) => {
                fail(EXIT_DATA, e.to_string())
            }
            CatalogError::File(_, _) => fail(EXIT_DATA, e.to_string()),
        });
    }
    let text = if let Some(path) = &src.file {
        std::fs::read_to_string(path)
            .map_err(|e| fail(EXIT_DATA, format!("{}: {e}", path.display())))?
    } else {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| fail(EXIT_DATA, format!("stdin: {e}")))?;
        buf
    };
    parse_graph_text(&text)
}

fn parse_shape(s: &str) -> Result<LinkShape, Failure> {
    LinkShape::parse(s).ok_or_else(|| {
        fail(
            EXIT_USAGE,
            format!("unknown link shape {s:?} (expected 2link, type1 or type2)"),
        )
    })
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| fail(EXIT_DATA, format!("{}: {e}", path.display())))
}

fn print_hypotheses(report: &HypothesisReport) {
    for h in &report.hypotheses {
        let status = if h.pass { "PASS" } else { "FAIL" };
        println!("hypothesis {}: {status}  {}", h.label, h.detail);
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.cmd {
        Cmd::Embeddings {
            src,
            count,
            list,
            conv,
        } => {
            if *count && *list {
                return Err(fail(EXIT_USAGE, "--count and --list are exclusive"));
            }
            let g = resolve_source(src)?;
            let arrs = spherical_arrangements(&g, !conv.no_reflection);
            if *list {
                let convention = if conv.no_reflection {
                    "chiral"
                } else {
                    "reflective"
                };
                println!("{} arrangement classes ({convention} equivalence)", arrs.len());
                for (i, a) in arrs.iter().enumerate() {
                    println!("arrangement {i}:");
                    print!("{}", write_arrangement(a));
                }
            } else {
                println!("{}", arrs.len());
            }
            Ok(0)
        }

        Cmd::Check {
            src,
            link,
            conv,
            certificate,
        } => {
            let g = resolve_source(src)?;
            let shape = parse_shape(link)?;
            let s = conv.settings();
            let verdict = is_intrinsically_linked(&g, shape, &s)
                .map_err(|e| fail(EXIT_DATA, e.to_string()))?;
            if let Some(path) = certificate {
                write_file(path, &doc_to_json(&intrinsic_doc(&g, &verdict, &s)))?;
            }
            if verdict.holds {
                println!(
                    "intrinsically {shape} linked: yes ({} arrangement classes)",
                    verdict.witnesses.len()
                );
                for (i, (a, p)) in verdict.witnesses.iter().enumerate() {
                    println!("arrangement {i}:");
                    print!("{}", write_arrangement(a));
                    println!("witness:");
                    print!("{p}");
                }
                Ok(0)
            } else {
                println!("intrinsically {shape} linked: no");
                println!("link-free arrangement:");
                print!(
                    "{}",
                    write_arrangement(verdict.witness_arrangement.as_ref().expect("counterexample"))
                );
                Ok(EXIT_FAIL)
            }
        }

        Cmd::Minimal {
            src,
            link,
            conv,
            certificate,
        } => {
            let g = resolve_source(src)?;
            let shape = parse_shape(link)?;
            let s = conv.settings();
            match is_minor_minimal(&g, shape, &s, 1) {
                Ok(cert) => {
                    if let Some(path) = certificate {
                        write_file(path, &doc_to_json(&minimality_doc(&cert, &s)))?;
                    }
                    println!(
                        "minor-minimal intrinsically {shape} linked: yes ({} immediate-minor classes refuted)",
                        cert.refutations.len()
                    );
                    Ok(0)
                }
                Err(MinimalityFailure::NonPlanar) => {
                    Err(fail(EXIT_DATA, "graph is not planar"))
                }
                Err(MinimalityFailure::NotIntrinsic(v)) => {
                    if let Some(path) = certificate {
                        write_file(path, &doc_to_json(&intrinsic_doc(&g, &v, &s)))?;
                    }
                    println!("minor-minimal intrinsically {shape} linked: no (not intrinsically linked)");
                    print!(
                        "{}",
                        write_arrangement(v.witness_arrangement.as_ref().expect("counterexample"))
                    );
                    Ok(EXIT_FAIL)
                }
                Err(MinimalityFailure::MinorIntrinsic(step)) => {
                    println!(
                        "minor-minimal intrinsically {shape} linked: no (proper minor via {step} is already intrinsically linked)"
                    );
                    Ok(EXIT_FAIL)
                }
            }
        }

        Cmd::Minor { src } => {
            let g = resolve_source(src)?;
            let named = |name: &str| catalog::builtin(name).expect("builtin name");
            let k5 = Graph::complete(5);
            let k33 = named("K33");
            let planar = !g.has_minor(&k5) && !g.has_minor(&k33);
            println!(
                "planar: {} (K5 minor: {}, K3,3 minor: {})",
                if planar { "yes" } else { "no" },
                if g.has_minor(&k5) { "yes" } else { "no" },
                if g.has_minor(&k33) { "yes" } else { "no" }
            );
            let k4 = named("K4");
            let k32 = named("K32");
            println!(
                "outerplanar: {} (K4 minor: {}, K3,2 minor: {})",
                if !g.has_minor(&k4) && !g.has_minor(&k32) {
                    "yes"
                } else {
                    "no"
                },
                if g.has_minor(&k4) { "yes" } else { "no" },
                if g.has_minor(&k32) { "yes" } else { "no" }
            );
            let linked = dehkordi_farr_oracle(&g);
            println!(
                "2link minor oracle: {} (K4uK1: {}, K32uK1: {}, K311: {})",
                if linked { "linked" } else { "not linked" },
                if g.has_minor(&named("K4uK1")) { "yes" } else { "no" },
                if g.has_minor(&named("K32uK1")) { "yes" } else { "no" },
                if g.has_minor(&named("K311")) { "yes" } else { "no" }
            );
            Ok(if linked { 0 } else { EXIT_FAIL })
        }

        Cmd::Moves {
            name,
            conv,
            certificate,
        } => {
            let s = conv.settings();
            let spec = catalog::move_spec(name)
                .ok_or_else(|| fail(EXIT_DATA, format!("no move is defined for {name}")))?;
            let (report, applied, move_name) = match spec {
                MoveSpec::VertBar(inp) => {
                    let report =
                        check_vert_bar(&inp, &s).map_err(|e| fail(EXIT_DATA, e.to_string()))?;
                    let applied =
                        apply_vert_bar(&inp).map_err(|e| fail(EXIT_DATA, e.to_string()))?;
                    (report, applied, "vert-bar")
                }
                MoveSpec::SubDangle(inp) => {
                    let report =
                        check_sub_dangle(&inp, &s).map_err(|e| fail(EXIT_DATA, e.to_string()))?;
                    let applied =
                        apply_sub_dangle(&inp).map_err(|e| fail(EXIT_DATA, e.to_string()))?;
                    (report, applied, "sub-dangle")
                }
            };
            println!("move: {move_name} on {name}");
            print_hypotheses(&report);
            println!("applied graph:");
            print!("{}", save_graph(&applied));
            let ok = match is_minor_minimal(&applied, LinkShape::Type2, &s, 1) {
                Ok(cert) => {
                    if let Some(path) = certificate {
                        write_file(path, &doc_to_json(&minimality_doc(&cert, &s)))?;
                    }
                    println!(
                        "applied graph minor-minimal intrinsically type2 linked: yes ({} classes refuted)",
                        cert.refutations.len()
                    );
                    true
                }
                Err(e) => {
                    println!("applied graph minor-minimal intrinsically type2 linked: no ({e})");
                    false
                }
            };
            Ok(if report.all_pass() && ok { 0 } else { EXIT_FAIL })
        }

        Cmd::VerifyPaper { conv } => {
            let s = conv.settings();
            println!(
                "claim report (reflection: {}, nested-only: {})",
                if s.reflection { "on" } else { "off" },
                if s.nested_only { "on" } else { "off" }
            );
            let report = verify_claims(&catalog::default_manifest(), &s);
            for r in &report.results {
                println!("{}", r.line());
            }
            let published_pass = report
                .results
                .iter()
                .filter(|r| matches!(r.status, ClaimStatus::Pass))
                .count();
            let deviations = report
                .results
                .iter()
                .filter(|r| matches!(r.status, ClaimStatus::Deviation { .. }))
                .count();
            let skipped = report
                .results
                .iter()
                .filter(|r| matches!(r.status, ClaimStatus::Skipped { .. }))
                .count();
            let failed = report.results.len() - published_pass - deviations - skipped;
            println!(
                "summary: {published_pass} pass, {deviations} deviations, {failed} fail, {skipped} skipped (pending figures)"
            );
            Ok(if report.all_published_pass() { 0 } else { EXIT_FAIL })
        }

        Cmd::Search {
            link,
            max_vertices,
            max_edges,
            input,
            conv,
            certificate,
        } => {
            let shape = parse_shape(link)?;
            let s = conv.settings();
            let mut progress = |line: &str| println!("{line}");
            let hits = if let Some(path) = input {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| fail(EXIT_DATA, format!("{}: {e}", path.display())))?;
                let graphs =
                    load_graph6_stream(&text).map_err(|e| fail(EXIT_DATA, e.to_string()))?;
                spherelink::intrinsic::search_stream(graphs, shape, &s, &mut progress)
            } else {
                let max_vertices = max_vertices.ok_or_else(|| {
                    fail(EXIT_USAGE, "search needs --max-vertices or --input")
                })?;
                spherelink::intrinsic::search_minor_minimal(
                    shape,
                    max_vertices,
                    *max_edges,
                    &s,
                    &mut progress,
                )
            };
            for hit in &hits {
                println!(
                    "minor-minimal: {} (n={} e={})",
                    to_graph6(&hit.graph),
                    hit.graph.vertex_count(),
                    hit.graph.edge_count()
                );
            }
            println!("total hits: {}", hits.len());
            if let Some(path) = certificate {
                let docs: Vec<_> = hits
                    .iter()
                    .map(|h| minimality_doc(&h.certificate, &s))
                    .collect();
                let mut json = serde_json::to_string_pretty(&docs)
                    .map_err(|e| fail(EXIT_DATA, e.to_string()))?;
                json.push('\n');
                write_file(path, &json)?;
            }
            Ok(0)
        }

        Cmd::Render { src, out, conv } => {
            let g = resolve_source(src)?;
            if !is_planar(&g) {
                return Err(fail(EXIT_DATA, "graph is not planar"));
            }
            let arrs = spherical_arrangements(&g, !conv.no_reflection);
            let a = arrs
                .first()
                .ok_or_else(|| fail(EXIT_DATA, "graph has no spherical arrangement"))?;
            write_file(out, &render_svg(a))?;
            println!(
                "wrote {} (arrangement 1 of {}, outerplanar: {})",
                out.display(),
                arrs.len(),
                if is_outerplanar(&g) { "yes" } else { "no" }
            );
            Ok(0)
        }

        Cmd::Replay { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| fail(EXIT_DATA, format!("{}: {e}", file.display())))?;
            let docs = if text.trim_start().starts_with('[') {
                serde_json::from_str::<Vec<spherelink::io::CertificateDoc>>(&text)
                    .map_err(|e| fail(EXIT_DATA, format!("certificate: {e}")))?
            } else {
                vec![doc_from_json(&text).map_err(|e| fail(EXIT_DATA, e.to_string()))?]
            };
            for (i, doc) in docs.iter().enumerate() {
                match replay(doc) {
                    Ok(()) => println!("certificate {i}: valid"),
                    Err(e) => {
                        println!("certificate {i}: INVALID ({e})");
                        return Ok(EXIT_FAIL);
                    }
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs.max(1);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
