use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context as _};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use centracover::atlas::AtlasError;
use centracover::covers::SweepConfig;
use centracover::group::{self, DEFAULT_CLOSURE_CAP};
use centracover::report::{self, SCHEMA};
use centracover::{catalog, dot, CentralizerAtlas, CentralizerGraph, Group};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_ABELIAN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "centracover",
    version,
    about = "Centralizer covers of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one group.
    Analyze {
        /// Cayley or permutation JSON file, or catalog:<name>.
        input: String,
        /// Emit a Graphviz diagram instead of the report.
        #[arg(long, value_enum)]
        dot: Option<DotKind>,
        #[command(flatten)]
        common: Common,
    },
    /// Run the theorem registry on each input.
    Verify {
        /// Files or catalog:<name>; catalog:* expands to the whole catalog.
        #[arg(required = true)]
        inputs: Vec<String>,
        /// `all`, or a comma-separated list of registry ids.
        #[arg(long, default_value = "all")]
        theorems: String,
        #[command(flatten)]
        common: Common,
    },
    /// List the statement registry: ids and one-line statements.
    Theorems,
    /// Built-in group catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Names with orders.
    List,
    /// Cayley JSON for one member.
    Emit { name: String },
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest family size swept exhaustively; larger families are sampled.
    #[arg(long, default_value_t = centracover::covers::DEFAULT_SUBSET_CAP)]
    subset_cap: usize,
    /// Largest group enumerated from permutation generators.
    #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
    closure_cap: usize,
    /// Sampling seed, hexadecimal.
    #[arg(long, value_parser = parse_hex)]
    seed: Option<u64>,
    /// Record per-theorem wall time (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
}

impl Common {
    fn sweep(&self) -> SweepConfig {
        let mut cfg = SweepConfig::with_cap(self.subset_cap);
        if let Some(seed) = self.seed {
            cfg.seed = seed;
        }
        cfg
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum DotKind {
    Hasse,
    Graph,
}

fn parse_hex(s: &str) -> Result<u64, String> {
    let digits = s.trim_start_matches("0x").trim_start_matches("0X");
    u64::from_str_radix(digits, 16).map_err(|e| format!("bad hex seed {s:?}: {e}"))
}

enum Failure {
    Input(anyhow::Error),
    Abelian(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Abelian(_) => EXIT_ABELIAN,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(e) => format!("{e:#}"),
            Failure::Abelian(m) => m.clone(),
        }
    }
}

fn expand(inputs: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    for input in inputs {
        if input == "catalog:*" {
            out.extend(catalog::list().into_iter().map(|n| format!("catalog:{n}")));
        } else {
            out.push(input.clone());
        }
    }
    out
}

fn load(input: &str, closure_cap: usize) -> anyhow::Result<Group> {
    if let Some(name) = input.strip_prefix("catalog:") {
        return Ok(catalog::build(name)?);
    }
    let path = Path::new(input);
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {input}"))?;
    let g = group::load_group_json(&text, closure_cap)
        .with_context(|| format!("cannot load {input}"))?;
    Ok(g)
}

fn prepare(input: &str, common: &Common) -> Result<(CentralizerAtlas, CentralizerGraph), Failure> {
    let g = load(input, common.closure_cap).map_err(Failure::Input)?;
    let atlas = CentralizerAtlas::build(g).map_err(|e| match e {
        AtlasError::AbelianGroup(_) => Failure::Abelian(format!("{input}: {e}")),
        other => Failure::Input(anyhow!(other)),
    })?;
    let graph = CentralizerGraph::build(&atlas);
    Ok((atlas, graph))
}

fn print_json(v: &impl serde::Serialize) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn analyze(input: &str, dot_kind: Option<DotKind>, common: &Common) -> anyhow::Result<u8> {
    let (atlas, graph) = match prepare(input, common) {
        Ok(x) => x,
        Err(f) => {
            eprintln!("error: {}", f.message());
            return Ok(f.code());
        }
    };
    match (dot_kind, common.format) {
        (Some(DotKind::Hasse), _) => print!("{}", dot::hasse(&atlas)),
        (Some(DotKind::Graph), _) => print!("{}", dot::graph(&atlas, &graph)),
        (None, Format::Json) => print_json(&report::analyze(&atlas, &graph))?,
        (None, Format::Text) => print!("{}", report::analyze(&atlas, &graph).to_text()),
    }
    Ok(0)
}

fn verify(inputs: &[String], theorems: &str, common: &Common) -> anyhow::Result<u8> {
    let only: Option<Vec<String>> = match theorems {
        "all" => None,
        list => {
            let ids: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
            let known = report::registry_ids();
            if let Some(bad) = ids.iter().find(|id| !known.contains(&id.as_str())) {
                eprintln!("error: unknown theorem id {bad:?}");
                return Ok(EXIT_INPUT);
            }
            Some(ids)
        }
    };
    let inputs = expand(inputs);
    let results: Vec<_> = inputs
        .par_iter()
        .map(|input| {
            prepare(input, common).map(|(atlas, graph)| {
                report::run_theorems(
                    &atlas,
                    &graph,
                    common.sweep(),
                    only.as_deref(),
                    common.timings,
                )
            })
        })
        .collect();

    let mut saw_input_error = false;
    let mut saw_abelian = false;
    let mut saw_fail = false;
    let mut docs = Vec::new();
    for (input, result) in inputs.iter().zip(&results) {
        match result {
            Ok(r) => {
                saw_fail |= !r.passed();
                match common.format {
                    Format::Json => {
                        let mut v = serde_json::to_value(r)?;
                        v["input"] = json!(input);
                        docs.push(v);
                    }
                    Format::Text => print!("{}", r.to_text()),
                }
            }
            Err(f) => {
                saw_input_error |= matches!(f, Failure::Input(_));
                saw_abelian |= matches!(f, Failure::Abelian(_));
                eprintln!("error: {}", f.message());
                if common.format == Format::Json {
                    docs.push(json!({ "input": input, "error": f.message(), "exit": f.code() }));
                }
            }
        }
    }
    if common.format == Format::Json {
        print_json(&json!({ "schema": SCHEMA, "reports": docs }))?;
    }
    Ok(if saw_input_error {
        EXIT_INPUT
    } else if saw_abelian {
        EXIT_ABELIAN
    } else if saw_fail {
        EXIT_FAIL
    } else {
        0
    })
}

fn catalog_cmd(action: CatalogAction, format: Format) -> anyhow::Result<u8> {
    match action {
        CatalogAction::List => {
            let names = catalog::list();
            let orders: Vec<usize> = names
                .par_iter()
                .map(|n| catalog::build(n).map(|g| g.order()))
                .collect::<Result<_, _>>()?;
            match format {
                Format::Json => {
                    let rows: Vec<_> = names
                        .iter()
                        .zip(&orders)
                        .map(|(n, o)| json!({ "name": n, "order": o }))
                        .collect();
                    print_json(&rows)?;
                }
                Format::Text => {
                    for (n, o) in names.iter().zip(&orders) {
                        println!("{n:<12} {o}");
                    }
                }
            }
            Ok(0)
        }
        CatalogAction::Emit { name } => match catalog::build(&name) {
            Ok(g) => {
                print_json(&g.to_document())?;
                Ok(0)
            }
            Err(e) => {
                eprintln!("error: {e}");
                Ok(EXIT_INPUT)
            }
        },
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Analyze { input, dot, common } => analyze(&input, dot, &common),
        Command::Verify {
            inputs,
            theorems,
            common,
        } => {
            if inputs.is_empty() {
                bail!("verify needs at least one input");
            }
            verify(&inputs, &theorems, &common)
        }
        Command::Theorems => {
            for (id, statement) in report::registry_statements() {
                println!("{id:<14} {statement}");
            }
            Ok(0)
        }
        Command::Catalog { action, format } => catalog_cmd(action, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
