use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use stopset_core::construct::{self, SearchPredicate};
use stopset_core::decoder::{iterative_decode, optimal_decode};
use stopset_core::harness::{monte_carlo, table1_report, ChannelConfig};
use stopset_core::stopsets::{self, StoppingProfile};
use stopset_core::{catalog, BitMatrix, DecodeOutcome, LinearCode, ReceivedWord};

/// Stopping-set and erasure-decoding analysis of binary linear codes.
///
/// Wherever a FILE is expected, a catalog name such as `H4`, `H14`, `rm`,
/// `golay` or `repetition(5)` is accepted as well. Code files hold a
/// parity-check matrix in the same text format as matrix files.
#[derive(Parser)]
#[command(name = "stopset", version)]
struct Cli {
    /// Print human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stopping-set and dead-end-set enumerators of a parity-check matrix.
    Enumerate {
        #[arg(long, value_name = "FILE")]
        matrix: String,
        /// Code the matrix belongs to; defaults to the null space of the matrix.
        #[arg(long, value_name = "FILE")]
        code: Option<String>,
        /// Also compute the enumerators of the complete parity-check matrix.
        #[arg(long)]
        optimal: bool,
    },
    /// Decode a received word over {0,1,?} by peeling and exhaustively.
    Decode {
        #[arg(long, value_name = "FILE")]
        matrix: String,
        #[arg(long, value_name = "STRING")]
        word: String,
    },
    /// Monte Carlo run on the erasure channel next to the analytic values.
    Simulate {
        #[arg(long, value_name = "FILE")]
        code: String,
        #[arg(long, value_name = "FILE")]
        matrix: String,
        #[arg(long)]
        epsilon: f64,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build a parity-check matrix for a code.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        /// Print the bare matrix text format instead of JSON.
        #[arg(long, global = true)]
        text: bool,
    },
    /// Row-count bounds for parity-check matrices with good stopping behaviour.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Recompute the reference table for the [8,4,4] Reed-Muller code.
    VerifyTable1,
}

#[derive(Args)]
struct CodeArg {
    #[arg(long, value_name = "FILE")]
    code: String,
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Every dual codeword, zero word included.
    Complete(CodeArg),
    /// Every dual codeword of weight 1..=WEIGHT.
    LowWeight {
        #[command(flatten)]
        code: CodeArg,
        /// Defaults to k+1.
        #[arg(long)]
        weight: Option<usize>,
    },
    /// A matrix with stopping distance 3 for a permuted copy of the code.
    Bad(CodeArg),
    /// Fewest-row matrix of dual codewords satisfying a predicate.
    Search {
        #[command(flatten)]
        code: CodeArg,
        /// One of s=d, S=S*, D=I.
        #[arg(long)]
        predicate: SearchPredicate,
        #[arg(long, default_value_t = 20)]
        max_rows: usize,
    },
}

/// Failure of a verification, as opposed to bad input.
#[derive(Debug)]
struct Mismatch;

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification mismatch")
    }
}

impl std::error::Error for Mismatch {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Mismatch>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_matrix(source: &str) -> Result<BitMatrix> {
    if Path::new(source).is_file() {
        let text = std::fs::read_to_string(source).with_context(|| format!("reading {source}"))?;
        return BitMatrix::parse_text(&text).with_context(|| format!("parsing {source}"));
    }
    catalog::matrix(source).with_context(|| format!("`{source}` is neither a file nor a catalog matrix"))
}

fn load_code(source: &str) -> Result<LinearCode> {
    if Path::new(source).is_file() {
        return Ok(LinearCode::from_parity_check(&load_matrix(source)?));
    }
    catalog::code(source).with_context(|| format!("`{source}` is neither a file nor a catalog code"))
}

fn matrix_json(h: &BitMatrix) -> Value {
    json!({
        "n": h.col_count(),
        "rows": h.rows().map(|r| r.to_string()).collect::<Vec<_>>(),
        "rank": h.rank(),
    })
}

fn code_json(c: &LinearCode) -> Result<Value> {
    Ok(json!({
        "n": c.n(),
        "k": c.k(),
        "d": c.minimum_distance()?,
        "weight_enumerator": c.weight_enumerator()?,
        "incorrigible": stopsets::incorrigible_enumerator(c)?,
    }))
}

fn emit(value: &Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Enumerate {
            matrix,
            code,
            optimal,
        } => enumerate(cli.pretty, matrix, code.as_deref(), *optimal),
        Command::Decode { matrix, word } => decode(cli.pretty, matrix, word),
        Command::Simulate {
            code,
            matrix,
            epsilon,
            trials,
            seed,
        } => {
            let c = load_code(code)?;
            let h = load_matrix(matrix)?;
            let cfg = ChannelConfig::new(*epsilon, *trials, *seed)?;
            let report = monte_carlo(&c, &h, &cfg)?;
            if cli.pretty {
                println!("epsilon {}  trials {}  seed {}", cfg.epsilon, cfg.trials, cfg.seed);
                println!("{:<10} {:>14} {:>14} {:>12}", "decoder", "analytic", "empirical", "±99%");
                for (name, a, e) in [
                    ("optimal", report.analytic_opt, report.empirical_opt),
                    ("iterative", report.analytic_it, report.empirical_it),
                ] {
                    println!("{name:<10} {a:>14.6e} {:>14.6e} {:>12.2e}", e.rate, e.half_width_99);
                }
                println!("event mismatches: {}", report.event_mismatches);
                println!("rng: {}", report.rng);
                Ok(())
            } else {
                emit(&serde_json::to_value(&report)?)
            }
        }
        Command::Construct { kind, text } => construct_cmd(cli.pretty, *text, kind),
        Command::Bounds { n, k, d, m } => {
            let report = construct::redundancy_bounds(*n, *k, *d, *m)?;
            if cli.pretty {
                println!("[n={n}, k={k}, d={d}]");
                let rows = [
                    ("s = d (sv)", report.sv_bound.value.map(|v| v.to_string()), &report.sv_bound.note),
                    ("s = d (hs)", report.hs_bound.value.map(|v| v.to_string()), &report.hs_bound.note),
                    ("D_i = I_i, i <= m", report.ht_bound.value.map(|v| v.to_string()), &report.ht_bound.note),
                    ("D = I", report.holtol_bound.value.map(|v| v.to_string()), &report.holtol_bound.note),
                    ("D = I (entropy)", report.entropy_bound.value.map(|v| format!("{v:.1}")), &report.entropy_bound.note),
                ];
                for (goal, value, note) in rows {
                    let value = value.unwrap_or_else(|| "-".into());
                    let note = note.as_deref().unwrap_or("");
                    println!("{goal:<20} {value:>12}  {note}");
                }
                Ok(())
            } else {
                emit(&serde_json::to_value(&report)?)
            }
        }
        Command::VerifyTable1 => {
            let report = table1_report()?;
            if cli.pretty {
                for e in &report.entries {
                    let mark = if e.matches { "ok" } else { "MISMATCH" };
                    println!("{:<5} {}  {:<40} {mark}", e.matrix, e.quantity, e.computed.to_string());
                    if !e.matches {
                        println!("{:<8} expected {}", "", e.expected);
                    }
                }
                println!("S(H14) = S*: {}", report.h14_stopping_is_optimal);
                println!("D = I for: {}", report.optimal_dead_end_matrices.join(", "));
            } else {
                emit(&serde_json::to_value(&report)?)?;
            }
            if report.all_match {
                Ok(())
            } else {
                Err(Mismatch.into())
            }
        }
    }
}

fn profile_rows(label: &str, p: &StoppingProfile) {
    println!("{label}");
    println!("  S(x) = {}", p.stopping);
    println!("  D(x) = {}", p.dead_end);
    match p.stopping_distance.finite() {
        Some(s) => println!("  s    = {s}"),
        None => println!("  s    = none (no nonempty stopping set)"),
    }
}

fn enumerate(pretty: bool, matrix: &str, code: Option<&str>, optimal: bool) -> Result<()> {
    let h = load_matrix(matrix)?;
    let c = match code {
        Some(source) => {
            let c = load_code(source)?;
            if !c.is_parity_check_matrix(&h) {
                bail!("{matrix} is not a parity-check matrix of {source}");
            }
            c
        }
        None => LinearCode::from_parity_check(&h),
    };
    let profile = stopsets::stopping_profile(&h)?;
    let opt = if optimal {
        Some(stopsets::optimal_enumerators(&c)?)
    } else {
        None
    };

    if pretty {
        println!(
            "[{}, {}, {}] code, {} x {} matrix of rank {}",
            c.n(),
            c.k(),
            c.minimum_distance()?,
            h.row_count(),
            h.col_count(),
            h.rank()
        );
        println!("  A(x) = {}", c.weight_enumerator()?);
        println!("  I(x) = {}", stopsets::incorrigible_enumerator(&c)?);
        profile_rows("matrix", &profile);
        if let Some(p) = &opt {
            profile_rows("complete matrix", p);
        }
        return Ok(());
    }
    let mut out = json!({
        "matrix": matrix_json(&h),
        "code": code_json(&c)?,
        "profile": profile,
    });
    if let Some(p) = opt {
        out["optimal"] = serde_json::to_value(p)?;
    }
    emit(&out)
}

fn decode(pretty: bool, matrix: &str, word: &str) -> Result<()> {
    let h = load_matrix(matrix)?;
    let received: ReceivedWord = word.parse()?;
    if received.len() != h.col_count() {
        bail!(
            "word has length {} but the matrix has {} columns",
            received.len(),
            h.col_count()
        );
    }
    let c = LinearCode::from_parity_check(&h);
    let it = iterative_decode(&h, &received)?;
    let opt = optimal_decode(&c, &received)?;
    if pretty {
        println!("received  {received}  ({} erased)", received.erasure_count());
        for (name, out) in [("iterative", &it), ("optimal", &opt)] {
            let line = match out {
                DecodeOutcome::Decoded { codeword } => format!("decoded   {codeword}"),
                DecodeOutcome::Stalled {
                    partial, residual, ..
                } => format!("stalled   {partial}  stopping set {residual}"),
                DecodeOutcome::Ambiguous {
                    erasures,
                    free_dimension,
                } => format!("ambiguous {erasures}, {} candidate codewords", 1u64 << free_dimension),
            };
            println!("{name:<10}{line}");
        }
        return Ok(());
    }
    emit(&json!({
        "received": received,
        "iterative": it,
        "optimal": opt,
    }))
}

fn construct_cmd(pretty: bool, text: bool, kind: &ConstructKind) -> Result<()> {
    let (h, extra) = match kind {
        ConstructKind::Complete(a) => (construct::complete_matrix(&load_code(&a.code)?)?, Value::Null),
        ConstructKind::LowWeight { code, weight } => {
            let c = load_code(&code.code)?;
            let w = weight.unwrap_or(c.k() + 1);
            (
                construct::weight_bounded_dual_matrix(&c, w)?,
                json!({ "weight": w }),
            )
        }
        ConstructKind::Bad(a) => {
            let bad = construct::bad_matrix(&load_code(&a.code)?)?;
            let extra = json!({
                "permutation": bad.permutation,
                "codeword": bad.codeword.to_string(),
            });
            (bad.matrix, extra)
        }
        ConstructKind::Search {
            code,
            predicate,
            max_rows,
        } => {
            let c = load_code(&code.code)?;
            match construct::minimal_matrix_search(&c, *predicate, *max_rows)? {
                Some(h) => (h, json!({ "predicate": predicate.to_string() })),
                None => bail!("no matrix with at most {max_rows} rows satisfies {predicate}"),
            }
        }
    };

    if text {
        print!("{}", h.to_text());
        return Ok(());
    }
    let profile = stopsets::stopping_profile(&h)?;
    if pretty {
        print!("{}", h.to_text());
        println!("rows {}, rank {}", h.row_count(), h.rank());
        profile_rows("enumerators", &profile);
        return Ok(());
    }
    let mut out = json!({
        "matrix": matrix_json(&h),
        "text": h.to_text(),
        "profile": profile,
    });
    if let Value::Object(fields) = extra {
        for (k, v) in fields {
            out[k] = v;
        }
    }
    emit(&out)
}
