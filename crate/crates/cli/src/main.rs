//! `frieze`: command line access to quiddity sequences, friezes, growth
//! coefficients, annulus triangulations, cyclic quivers and tube identities.
//!
//! Exit status: 0 on success, 1 on a domain error or a failed check, 2 on a
//! usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use frieze_core::growth::{growth_report, GrowthMethod};
use frieze_core::json::bigint_to_value;
use frieze_core::quiver::{self, NonOrientedCycle};
use frieze_core::sweep::DEFAULT_SEED;
use frieze_core::triangulation::triangulation_from_quiddity;
use frieze_core::tube::{check_tube, TubeCheck};
use frieze_core::verify::{self, VerifyConfig};
use frieze_core::{frieze, FriezeError, QuidditySequence};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "frieze", version, about = "Exact computations with infinite periodic friezes")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a quiddity sequence to its skeletal form.
    Reduce {
        #[arg(long, value_parser = parse_q)]
        q: QuidditySequence,
    },
    /// Classify as InfiniteType, FiniteType or Invalid.
    Classify {
        #[arg(long, value_parser = parse_q)]
        q: QuidditySequence,
    },
    /// Quiddity sequence of the other boundary of the skeletal triangulation.
    Partner {
        #[arg(long, value_parser = parse_q)]
        q: QuidditySequence,
    },
    /// Growth coefficient s_q and the sequence s_1..s_r.
    Growth {
        #[arg(long, value_parser = parse_q)]
        q: QuidditySequence,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// Length of the sequence s_1..s_r in the JSON report.
        #[arg(long, default_value_t = 3)]
        r: usize,
    },
    /// The first rows of the frieze.
    #[command(alias = "frieze")]
    Rows {
        #[arg(long, value_parser = parse_q)]
        q: QuidditySequence,
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
    /// Skeletal triangulation of the annulus with outer boundary q.
    Triangulate {
        #[arg(long, value_parser = parse_q)]
        q: QuidditySequence,
        /// Write an SVG drawing to this path.
        #[arg(long, alias = "out")]
        svg: Option<PathBuf>,
    },
    /// Non-oriented cyclic quivers.
    Quiver {
        /// Arrow word over I (increasing) and D (decreasing).
        #[arg(long, value_parser = parse_word, conflicts_with = "from_q", required_unless_present = "from_q")]
        word: Option<NonOrientedCycle>,
        /// Build the quiver of a skeletal quiddity sequence.
        #[arg(long, value_parser = parse_q)]
        from_q: Option<QuidditySequence>,
        #[arg(long, value_enum, default_value_t = Emit::Word)]
        emit: Emit,
        /// Write the output to this path instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check identities on the tube of rank n.
    Tube {
        #[arg(long, value_parser = parse_q)]
        q: QuidditySequence,
        #[arg(long, value_enum, default_value_t = CheckArg::Repth)]
        check: CheckArg,
        #[arg(long, default_value_t = 12)]
        max_level: usize,
    },
    /// Run the verification suites.
    Verify {
        /// Run every suite (the default).
        #[arg(long)]
        all: bool,
        /// Seed for the random samples; FRIEZE_SEED takes precedence.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Run a reduced sweep.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Rows,
    Formula,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Word,
    Sigma,
    SigmaTilde,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Repth,
    Growth,
    Ar,
}

fn parse_q(s: &str) -> Result<QuidditySequence, String> {
    s.parse().map_err(|e: FriezeError| e.to_string())
}

fn parse_word(s: &str) -> Result<NonOrientedCycle, String> {
    s.parse().map_err(|e: FriezeError| e.to_string())
}

/// Result of a command: text and JSON renderings, and whether it passed.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, ok: true }
    }
}

fn entries(q: &QuidditySequence) -> Value {
    json!({ "entries": q.entries() })
}

fn run(command: Command) -> Result<Output, FriezeError> {
    match command {
        Command::Reduce { q } => {
            let skeletal = q.reduce_to_skeletal()?;
            let trivial = skeletal.is_trivial();
            Ok(Output::ok(
                format!("skeletal: {skeletal}{}", if trivial { " (trivial)" } else { "" }),
                json!({ "input": entries(&q), "skeletal": entries(&skeletal), "trivial": trivial }),
            ))
        }
        Command::Classify { q } => {
            let class = q.classify();
            Ok(Output::ok(format!("{class:?}"), json!({ "input": entries(&q), "classification": class })))
        }
        Command::Partner { q } => {
            let partner = q.partner()?;
            Ok(Output::ok(
                format!("partner: {partner}"),
                json!({ "input": entries(&q), "partner": entries(&partner) }),
            ))
        }
        Command::Growth { q, method, r } => {
            let method = match method {
                MethodArg::Rows => GrowthMethod::Rows,
                MethodArg::Formula => GrowthMethod::Formula,
                MethodArg::Both => GrowthMethod::Both,
            };
            let report = growth_report(&q, r, method)?;
            let text = match (&report.s_q_rows, &report.s_q_formula) {
                (Some(rows), Some(formula)) => format!("rows: {rows}, formula: {formula}"),
                _ => match method {
                    GrowthMethod::Rows => format!("rows: {}", report.s_q),
                    _ => format!("formula: {}", report.s_q),
                },
            };
            let ok = report.s_q_rows == report.s_q_formula;
            let json = serde_json::to_value(&report).expect("serializable report");
            Ok(Output { text, json, ok })
        }
        Command::Rows { q, depth } => {
            let rows = frieze::rows(&q, depth)?;
            let json_rows: Vec<Value> = rows
                .rows
                .iter()
                .map(|row| Value::Array(row.iter().map(bigint_to_value).collect()))
                .collect();
            Ok(Output::ok(
                rows.render_text().trim_end().to_string(),
                json!({ "quiddity": entries(&q), "depth": depth, "rows": json_rows }),
            ))
        }
        Command::Triangulate { q, svg } => {
            let t = triangulation_from_quiddity(&q)?;
            if let Some(path) = &svg {
                t.write_svg(path)?;
            }
            let (outer, inner) = t.quiddity_pair();
            let mut text = format!(
                "annulus: C_{{{},{}}}\nouter: {outer}\ninner: {inner}\nquiver: {}\n{}",
                t.outer_count(),
                t.inner_count(),
                t.quiver(),
                t.render_net()
            );
            if let Some(path) = &svg {
                text.push_str(&format!("svg: {}\n", path.display()));
            }
            let json = serde_json::to_value(&t).expect("serializable triangulation");
            Ok(Output::ok(text.trim_end().to_string(), json))
        }
        Command::Quiver { word, from_q, emit, out } => {
            let quiver = match (word, from_q) {
                (Some(w), _) => w,
                (None, Some(q)) => quiver::mu(&q)?,
                (None, None) => unreachable!("clap requires one of --word and --from-q"),
            };
            let (text, json) = match emit {
                Emit::Word => (quiver.to_string(), serde_json::to_value(&quiver).expect("serializable")),
                Emit::Sigma => {
                    let s = quiver.sigma();
                    (s.to_string(), entries(&s))
                }
                Emit::SigmaTilde => {
                    let s = quiver.sigma_tilde();
                    (s.to_string(), entries(&s))
                }
                Emit::Dot => {
                    let dot = quiver.to_dot();
                    (dot.trim_end().to_string(), json!({ "dot": dot }))
                }
            };
            if let Some(path) = out {
                std::fs::write(&path, format!("{text}\n"))?;
                return Ok(Output::ok(format!("wrote {}", path.display()), json!({ "written": path })));
            }
            Ok(Output::ok(text, json))
        }
        Command::Tube { q, check, max_level } => {
            let check = match check {
                CheckArg::Repth => TubeCheck::Repth,
                CheckArg::Growth => TubeCheck::Growth,
                CheckArg::Ar => TubeCheck::Ar,
            };
            let report = check_tube(&q, check, max_level)?;
            let mut text = format!(
                "{} on ({q}): {} ({} cases, rank {}, max level {})",
                format!("{check:?}").to_lowercase(),
                if report.passed() { "PASS" } else { "FAIL" },
                report.checked,
                report.rank,
                report.max_level
            );
            if !report.extended_levels.is_empty() {
                text.push_str(&format!(
                    "\nlevels above the rank, checked on frieze entries only: {:?}",
                    report.extended_levels
                ));
            }
            for c in &report.failures {
                text.push_str(&format!("\ncounterexample: start {}, level {}", c.start, c.level));
            }
            let ok = report.passed();
            Ok(Output { text, json: serde_json::to_value(&report).expect("serializable"), ok })
        }
        Command::Verify { all: _, seed, quick } => {
            let seed = std::env::var("FRIEZE_SEED")
                .ok()
                .and_then(|s| s.trim().parse().ok())
                .unwrap_or(seed);
            let config = VerifyConfig { seed, ..VerifyConfig::default() };
            let outcomes = if quick {
                let small = VerifyConfig { oracle_samples: 8, growth_samples: 500, ..config };
                vec![
                    verify::reference_values(),
                    verify::oracle_equivalence(&small),
                    verify::growth_equivalence(&small),
                    verify::bijections(8),
                    verify::skeleton_commutation(7, 2),
                    verify::tube_identities(5, 3),
                    verify::negative_controls(),
                    verify::reduction_invariants(4, 4),
                ]
            } else {
                verify::run_all(&config)
            };
            let mut text = format!("seed {seed}\n{:<28} {:>10} {:>9}  result\n", "suite", "cases", "failures");
            for o in &outcomes {
                text.push_str(&format!(
                    "{:<28} {:>10} {:>9}  {}\n",
                    o.name,
                    o.cases,
                    o.failures,
                    if o.passed() { "PASS" } else { "FAIL" }
                ));
                for e in &o.examples {
                    text.push_str(&format!("    {e}\n"));
                }
            }
            let ok = outcomes.iter().all(|o| o.passed());
            Ok(Output {
                text: text.trim_end().to_string(),
                json: json!({ "seed": seed, "passed": ok, "suites": outcomes }),
                ok,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli.command) {
        Ok(output) => {
            let rendered = match format {
                Format::Text => output.text,
                Format::Json => serde_json::to_string_pretty(&output.json).expect("valid json"),
            };
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{rendered}");
            if output.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            match format {
                Format::Text => eprintln!("error: {}: {err}", err.name()),
                Format::Json => eprintln!("{}", json!({ "error": err.name(), "message": err.to_string() })),
            }
            ExitCode::from(1)
        }
    }
}
