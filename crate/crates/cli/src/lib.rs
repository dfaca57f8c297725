//! `hybridcm` command-line front end.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 input error, 3 search
//! budget exhausted.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hybridcm::complex::format_set;
use hybridcm::ideal::{emit, IdealFormat};
use hybridcm::io::{format_edge_list, Document, GraphJson, SpecJson};
use hybridcm::{
    chordal_cm_check, find_shelling, is_shelling_order, recognize_hybrid, selftest, CmVerdict,
    Graph, HybridSpec, MonomialGenerators, ShellingCertificate, ShellingCheck, ShellingSearch,
    SimplicialComplex, VariableOrder, DEFAULT_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "hybridcm",
    version,
    about = "Hybrid graphs, shellings and Cohen-Macaulay checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Input file (graph, complex, hybrid spec or certificate); `-` or
    /// absent reads stdin.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Node budget for shelling searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Emit JSON instead of the human-readable report.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the hybrid graph of a spec.
    Build,
    /// List facets: blocks for a spec, facets of the independence complex
    /// for a graph.
    Facets,
    /// Produce a shelling certificate.
    Shell,
    /// Check a certificate (or a proposed facet order) against the input.
    VerifyShell {
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Comma-separated facet positions, 1-based, in lexicographic facet order.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
    },
    /// Decide whether a graph is hybrid.
    Recognize,
    /// Cohen-Macaulay test for chordal graphs (with shelling fallback).
    CmChordal,
    /// Decide whether a graph is unmixed.
    Unmixed,
    /// Emit the edge ideal (graph, spec) or Stanley-Reisner ideal (complex).
    Ideal,
    /// Run the randomised oracle suites.
    Selftest {
        #[arg(long, default_value_t = 100)]
        random: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    M2,
    Singular,
    Text,
}

/// Exit code and the text to print.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn new(code: i32, output: String) -> Self {
        Outcome { code, output }
    }
}

#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn read_text(path: Option<&Path>) -> Result<String, InputError> {
    match path {
        None => read_stdin(),
        Some(p) if p.as_os_str() == "-" => read_stdin(),
        Some(p) => fs::read_to_string(p).map_err(|e| InputError(format!("{}: {e}", p.display()))),
    }
}

fn read_stdin() -> Result<String, InputError> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

fn load(path: Option<&Path>) -> Result<Document, InputError> {
    Ok(Document::parse(&read_text(path)?)?)
}

fn load_graph(path: Option<&Path>) -> Result<Graph, InputError> {
    match load(path)? {
        Document::Graph(g) => Ok(g),
        Document::Spec(spec) => Ok(spec.build()),
        _ => Err(InputError("expected a graph or hybrid spec".into())),
    }
}

fn load_spec(path: Option<&Path>) -> Result<HybridSpec, InputError> {
    match load(path)? {
        Document::Spec(spec) => Ok(spec),
        _ => Err(InputError("expected a hybrid spec".into())),
    }
}

/// The complex a command acts on: independence complex for graphs and
/// specs, the complex itself otherwise.
fn load_complex(path: Option<&Path>) -> Result<SimplicialComplex, InputError> {
    match load(path)? {
        Document::Graph(g) => Ok(SimplicialComplex::independence_complex(&g)),
        Document::Spec(spec) => Ok(SimplicialComplex::independence_complex(&spec.build())),
        Document::Complex(c) => Ok(c),
        Document::Certificate(_) => Err(InputError(
            "expected a graph, spec or complex, got a certificate".into(),
        )),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(outcome) => outcome,
        Err(InputError(msg)) => Outcome::new(EXIT_INPUT, format!("error: {msg}\n")),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, InputError> {
    let input = cli.input.as_deref();
    match &cli.command {
        Command::Build => build(cli, load_spec(input)?),
        Command::Facets => facets(cli, load(input)?),
        Command::Shell => shell(cli, load(input)?),
        Command::VerifyShell { certificate, order } => verify_shell(
            cli,
            load_complex(input)?,
            certificate.as_deref(),
            order.as_deref(),
        ),
        Command::Recognize => recognize(cli, load_graph(input)?),
        Command::CmChordal => cm_chordal(cli, load_graph(input)?),
        Command::Unmixed => unmixed(cli, load_graph(input)?),
        Command::Ideal => ideal(cli, load(input)?),
        Command::Selftest { random } => Ok(run_selftest(cli, *random)),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON value serialises") + "\n"
}

fn sets_json<'a, I: IntoIterator<Item = &'a hybridcm::VertexSet>>(sets: I) -> Value {
    Value::Array(sets.into_iter().map(|s| json!(s)).collect())
}

fn wants_json(cli: &Cli) -> bool {
    cli.json || cli.format == Some(Format::Json)
}

fn build(cli: &Cli, spec: HybridSpec) -> Result<Outcome, InputError> {
    let g = spec.build();
    let out = match cli.format {
        Some(Format::Text) => format_edge_list(&g),
        None | Some(Format::Json) => {
            serde_json::to_string(&GraphJson::from(&g)).expect("graph serialises") + "\n"
        }
        Some(f) => return Err(InputError(format!("build does not support {f:?} output"))),
    };
    Ok(Outcome::new(EXIT_OK, out))
}

fn facets(cli: &Cli, doc: Document) -> Result<Outcome, InputError> {
    match doc {
        Document::Spec(spec) => {
            let blocks = spec.facet_blocks();
            let total: usize = blocks.iter().map(|b| b.len()).sum();
            if wants_json(cli) {
                let blocks_json: Vec<Value> = blocks
                    .iter()
                    .map(|b| json!({"face": b.face, "facets": sets_json(&b.facets)}))
                    .collect();
                return Ok(Outcome::new(
                    EXIT_OK,
                    pretty(&json!({"r": spec.r(), "total": total, "blocks": blocks_json})),
                ));
            }
            let mut out = format!(
                "{} facets of size {} in {} blocks\n",
                total,
                spec.r(),
                blocks.len()
            );
            for b in &blocks {
                let face = if b.face.is_empty() {
                    "∅".to_string()
                } else {
                    format_set(&b.face)
                };
                out.push_str(&format!("{face} [{}]: {}\n", b.len(), b.display_facets()));
            }
            Ok(Outcome::new(EXIT_OK, out))
        }
        Document::Graph(g) => complex_facets(cli, &SimplicialComplex::independence_complex(&g)),
        Document::Complex(c) => complex_facets(cli, &c),
        Document::Certificate(_) => {
            Err(InputError("facets expects a spec, graph or complex".into()))
        }
    }
}

fn complex_facets(cli: &Cli, c: &SimplicialComplex) -> Result<Outcome, InputError> {
    if wants_json(cli) {
        return Ok(Outcome::new(
            EXIT_OK,
            pretty(&json!({
                "dimension": c.dimension(),
                "pure": c.is_pure(),
                "facets": sets_json(c.facets()),
            })),
        ));
    }
    let mut out = format!(
        "{} facets, dimension {}, {}\n",
        c.n_facets(),
        c.dimension(),
        if c.is_pure() { "pure" } else { "not pure" }
    );
    for f in c.facets() {
        out.push_str(&format_set(f));
        out.push('\n');
    }
    Ok(Outcome::new(EXIT_OK, out))
}

fn certificate_report(cli: &Cli, cert: &ShellingCertificate, how: &str) -> Outcome {
    if wants_json(cli) {
        let v = serde_json::to_value(cert).expect("certificate serialises");
        return Outcome::new(EXIT_OK, pretty(&v));
    }
    let mut out = format!(
        "shelling found ({how}): {} facets, {} witnesses\n",
        cert.facets.len(),
        cert.witnesses.len()
    );
    for (pos, f) in cert.facets.iter().enumerate() {
        out.push_str(&format!("{:>4}  {}\n", pos + 1, format_set(f)));
    }
    Outcome::new(EXIT_OK, out)
}

fn shell(cli: &Cli, doc: Document) -> Result<Outcome, InputError> {
    let complex = match doc {
        Document::Spec(spec) => {
            let (_, cert) = spec.canonical_shelling_order()?;
            return Ok(certificate_report(cli, &cert, "canonical hybrid order"));
        }
        Document::Graph(g) => SimplicialComplex::independence_complex(&g),
        Document::Complex(c) => c,
        Document::Certificate(_) => {
            return Err(InputError("shell expects a spec, graph or complex".into()))
        }
    };
    if !complex.is_pure() {
        return Ok(Outcome::new(
            EXIT_NEGATIVE,
            "complex is not pure; only pure shellings are searched\n".into(),
        ));
    }
    Ok(match find_shelling(&complex, cli.budget)? {
        ShellingSearch::Found(cert) => certificate_report(cli, &cert, "search"),
        ShellingSearch::NotShellable => Outcome::new(
            EXIT_NEGATIVE,
            "not shellable (search space exhausted)\n".into(),
        ),
        ShellingSearch::BudgetExhausted { nodes } => Outcome::new(
            EXIT_BUDGET,
            format!("budget exhausted after {nodes} nodes; shellability undetermined\n"),
        ),
    })
}

fn verify_shell(
    cli: &Cli,
    complex: SimplicialComplex,
    certificate: Option<&Path>,
    order: Option<&[usize]>,
) -> Result<Outcome, InputError> {
    match (certificate, order) {
        (Some(path), None) => {
            let cert: ShellingCertificate = match Document::parse(&read_text(Some(path))?)? {
                Document::Certificate(c) => c,
                _ => return Err(InputError("--certificate is not a certificate".into())),
            };
            Ok(match cert.verify(&complex) {
                Ok(()) => Outcome::new(EXIT_OK, "certificate valid\n".into()),
                Err(e) => Outcome::new(EXIT_NEGATIVE, format!("not a shelling: {e}\n")),
            })
        }
        (None, Some(order)) => {
            let order: Vec<usize> = order
                .iter()
                .map(|&p| {
                    p.checked_sub(1)
                        .ok_or_else(|| InputError("--order positions start at 1".into()))
                })
                .collect::<Result<_, _>>()?;
            Ok(match is_shelling_order(&complex, &order)? {
                ShellingCheck::Valid(cert) => certificate_report(cli, &cert, "given order"),
                ShellingCheck::Violation { i, j } => Outcome::new(
                    EXIT_NEGATIVE,
                    format!("not a shelling: pair ({i}, {j}) has no witness\n"),
                ),
            })
        }
        _ => Err(InputError(
            "verify-shell needs exactly one of --certificate or --order".into(),
        )),
    }
}

fn recognize(cli: &Cli, g: Graph) -> Result<Outcome, InputError> {
    Ok(match recognize_hybrid(&g) {
        Some(dec) => {
            let out = if wants_json(cli) {
                let mut v = serde_json::to_value(SpecJson::from(&dec)).expect("spec serialises");
                v["r"] = json!(dec.r());
                pretty(&v)
            } else {
                let mut out = format!("hybrid, r = {}\n", dec.r());
                for (i, (a, b)) in dec.parts().iter().zip(dec.whiskers()).enumerate() {
                    let b: hybridcm::VertexSet = b.iter().copied().collect();
                    out.push_str(&format!(
                        "  A_{} = {}  B_{} = {}\n",
                        i + 1,
                        format_set(a),
                        i + 1,
                        format_set(&b)
                    ));
                }
                out
            };
            Outcome::new(EXIT_OK, out)
        }
        None => {
            let out = if wants_json(cli) {
                pretty(&json!({"hybrid": false}))
            } else {
                "not hybrid\n".to_string()
            };
            Outcome::new(EXIT_NEGATIVE, out)
        }
    })
}

fn verdict_code(v: &CmVerdict) -> i32 {
    match v {
        CmVerdict::CohenMacaulay { .. } => EXIT_OK,
        CmVerdict::NotCohenMacaulay { .. } => EXIT_NEGATIVE,
        CmVerdict::Undetermined {
            budget_exhausted: true,
            ..
        } => EXIT_BUDGET,
        CmVerdict::Undetermined { .. } => EXIT_NEGATIVE,
    }
}

fn cm_chordal(cli: &Cli, g: Graph) -> Result<Outcome, InputError> {
    let report = chordal_cm_check(&g, cli.budget)?;
    let code = verdict_code(&report.verdict);
    if wants_json(cli) {
        let v = json!({
            "chordal": report.chordal,
            "elimination_order": report.elimination_order,
            "unmixed": report.unmixed,
            "free_facets": report.free_facets,
            "free_facet_partition": report.free_facet_partition,
            "hybrid": report.hybrid.as_ref().map(SpecJson::from),
            "conditions_agree": report.conditions_agree,
            "verdict": report.verdict,
            "certificate": report.certificate,
        });
        return Ok(Outcome::new(code, pretty(&v)));
    }
    let mut out = String::new();
    if report.chordal {
        out.push_str("chordal: yes\n");
        out.push_str(&format!("unmixed: {}\n", yes_no(report.unmixed)));
        for f in &report.free_facets {
            out.push_str(&format!(
                "free-vertex facet {} (free {})\n",
                format_set(&f.facet),
                format_set(&f.free_vertices)
            ));
        }
        out.push_str(&format!(
            "free-vertex facets partition V: {}\n",
            yes_no(report.free_facet_partition.is_some())
        ));
        out.push_str(&format!("hybrid: {}\n", yes_no(report.hybrid.is_some())));
        out.push_str(&format!(
            "conditions agree: {}\n",
            yes_no(report.conditions_agree == Some(true))
        ));
    } else {
        out.push_str("chordal: no (characterization inapplicable, shelling fallback)\n");
        out.push_str(&format!("unmixed: {}\n", yes_no(report.unmixed)));
        out.push_str(&format!("hybrid: {}\n", yes_no(report.hybrid.is_some())));
    }
    out.push_str(&match &report.verdict {
        CmVerdict::CohenMacaulay { via } => format!("Cohen-Macaulay (via {via})\n"),
        CmVerdict::NotCohenMacaulay { reason } => format!("not Cohen-Macaulay ({reason})\n"),
        CmVerdict::Undetermined { reason, .. } => {
            format!("CM undetermined by this tool ({reason})\n")
        }
    });
    Ok(Outcome::new(code, out))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn unmixed(cli: &Cli, g: Graph) -> Result<Outcome, InputError> {
    let covers = g.minimal_vertex_covers();
    let is_unmixed = g.is_unmixed();
    let code = if is_unmixed { EXIT_OK } else { EXIT_NEGATIVE };
    if wants_json(cli) {
        return Ok(Outcome::new(
            code,
            pretty(&json!({"unmixed": is_unmixed, "minimal_vertex_covers": sets_json(&covers)})),
        ));
    }
    let mut out = format!("unmixed: {}\n", yes_no(is_unmixed));
    for c in &covers {
        out.push_str(&format!("  cover {} (size {})\n", format_set(c), c.len()));
    }
    Ok(Outcome::new(code, out))
}

fn ideal(cli: &Cli, doc: Document) -> Result<Outcome, InputError> {
    let (gens, vertices, order) = match doc {
        Document::Graph(g) => (
            MonomialGenerators::edge_ideal(&g),
            g.labels().to_vec(),
            VariableOrder::for_graph(&g),
        ),
        Document::Spec(spec) => {
            let g = spec.build();
            (
                MonomialGenerators::edge_ideal(&g),
                g.labels().to_vec(),
                spec.variable_order(),
            )
        }
        Document::Complex(c) => {
            let g = Graph::edgeless(c.universe())?;
            (
                c.stanley_reisner_generators(),
                c.universe().to_vec(),
                VariableOrder::for_graph(&g),
            )
        }
        Document::Certificate(_) => {
            return Err(InputError("ideal expects a graph, spec or complex".into()))
        }
    };
    let format = match cli.format {
        Some(Format::M2) => IdealFormat::Macaulay2,
        Some(Format::Singular) => IdealFormat::Singular,
        Some(Format::Text) | None if !cli.json => IdealFormat::Text,
        _ => {
            let v = json!({"vertices": vertices, "generators": sets_json(gens.generators())});
            return Ok(Outcome::new(EXIT_OK, pretty(&v)));
        }
    };
    Ok(Outcome::new(
        EXIT_OK,
        emit(&gens, &vertices, &order, format),
    ))
}

fn run_selftest(cli: &Cli, cases: usize) -> Outcome {
    let results = selftest::run(cases, cli.seed);
    let ok = results.iter().all(|r| r.passed());
    let code = if ok { EXIT_OK } else { EXIT_NEGATIVE };
    if wants_json(cli) {
        return Outcome::new(code, pretty(&json!(results)));
    }
    let mut out = String::new();
    for r in &results {
        out.push_str(&format!(
            "{} {:<32} {} cases, {} failures\n",
            if r.passed() { "PASS" } else { "FAIL" },
            r.name,
            r.cases,
            r.failures.len()
        ));
        for f in r.failures.iter().take(3) {
            out.push_str(&format!("     {f}\n"));
        }
    }
    Outcome::new(code, out)
}

/// Writes the outcome to `--output` or stdout and returns the exit code.
pub fn finish(cli: &Cli, outcome: Outcome) -> i32 {
    let target = if outcome.code == EXIT_INPUT {
        None
    } else {
        cli.output.as_deref()
    };
    match target {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.output) {
                eprintln!("error: {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        None if outcome.code == EXIT_INPUT => eprint!("{}", outcome.output),
        None => print!("{}", outcome.output),
    }
    outcome.code
}
