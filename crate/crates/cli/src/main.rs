//! Batch front end: parse JSON input, dispatch to the library, print
//! deterministic JSON with the resolved configuration embedded.
//!
//! Exit codes: 0 success, 1 verification failure (a falsified invariant or a
//! failing axiom report), 2 input error. Errors are structured JSON on
//! stderr.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use ashift::betti::b_sequence;
use ashift::error::Error;
use ashift::gin::gin;
use ashift::monom::{
    complex_of, plugin_order, stanley_reisner, MonomialIdeal, TermOrder,
};
use ashift::shift::{
    delta_lex_opts, delta_rl_opts, iterate_lex, limit_usli, probe_conjecture, verify_axioms,
    ShiftOptions,
};
use ashift::simplex::{enumerate_shifted, SimplicialComplex};
use ashift::usli::{is_almost_usli, is_usli};

#[derive(Parser)]
#[command(name = "ashift", about = "Algebraic shifting of simplicial complexes", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Lex,
    #[value(alias = "revlex")]
    Rl,
    X1block,
}

impl OrderArg {
    fn to_order(self) -> TermOrder {
        match self {
            OrderArg::Lex => TermOrder::lex(),
            OrderArg::Rl => TermOrder::revlex(),
            OrderArg::X1block => TermOrder::plugin(
                plugin_order("x1block").expect("registered plug-in"),
            ),
        }
    }
}

#[derive(Clone, Debug, Parser)]
struct CommonArgs {
    /// Random seed; 0 derives one from entropy and echoes it in the output.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Independently seeded generic matrices that must agree.
    #[arg(long, default_value_t = 2)]
    trials: u32,
    /// Degree bound for sequences, prefixes and limits.
    #[arg(long, default_value_t = 6)]
    dbound: u32,
    /// Orbit step budget.
    #[arg(long, default_value_t = 32)]
    max_steps: u32,
    /// Input file; stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Shift a complex: reverse lexicographic (rl) keeps the vertex set, lex
    /// may grow it.
    Shift {
        #[arg(long, value_enum, default_value_t = OrderArg::Rl)]
        order: OrderArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Certified generic initial ideal of a monomial ideal.
    Gin {
        #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
        order: OrderArg,
        /// Ambient variable count; defaults to the largest support index.
        #[arg(long)]
        n: Option<u32>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Iterate lexicographic shifting until it stabilizes or the budget runs out.
    Iterate {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// The limit of the lex-shifting orbit, computed analytically.
    Limit {
        #[arg(long)]
        n: Option<u32>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Stability / lexsegment classification of a monomial ideal.
    Classify {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// B-sequence of an ideal or a complex.
    Bseq {
        #[arg(long)]
        n: Option<u32>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check the four shifting axioms for the reverse lexicographic shift.
    VerifyAxioms {
        /// Enumerate all shifted complexes on up to this many vertices.
        #[arg(long, default_value_t = 4)]
        n: u32,
        /// Random complexes on n+1 vertices, and nested monotonicity pairs.
        #[arg(long, default_value_t = 200)]
        samples: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// List every shifted complex on [n], one JSON object per line.
    EnumerateShifted {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Probe the fixed-point conjecture for a term order other than revlex.
    ProbeConjecture {
        #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
        order: OrderArg,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Serialize)]
struct ResolvedConfig {
    command: &'static str,
    order: Option<String>,
    seed: u64,
    trials: u32,
    dbound: u32,
    max_steps: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<u32>,
}

enum Input {
    Complex(SimplicialComplex),
    Ideal(MonomialIdeal),
}

fn read_input(common: &CommonArgs) -> Result<Input, Error> {
    let mut text = String::new();
    match &common.input {
        Some(path) => {
            text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        }
        None => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
        }
    }
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
    if value.get("facets").is_some() {
        let c: SimplicialComplex =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Input::Complex(c))
    } else if value.get("generators").is_some() {
        let i: MonomialIdeal =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Input::Ideal(i))
    } else {
        Err(Error::Parse(
            "input must have a 'facets' (complex) or 'generators' (ideal) field".into(),
        ))
    }
}

fn as_ideal(input: Input) -> Result<(MonomialIdeal, u32), Error> {
    match input {
        Input::Ideal(i) => {
            let n = i.max_support();
            Ok((i, n))
        }
        Input::Complex(c) => {
            let n = c.n();
            Ok((stanley_reisner(&c)?, n))
        }
    }
}

fn write_output(common: &CommonArgs, value: &serde_json::Value) -> Result<(), Error> {
    let text = format!("{value}\n");
    match &common.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Error::Parse(format!("cannot write stdout: {e}"))),
    }
}

fn resolve_seed(seed: u64) -> u64 {
    if seed == 0 {
        rand::random::<u64>() | 1
    } else {
        seed
    }
}

fn shift_options(common: &CommonArgs, seed: u64) -> ShiftOptions {
    ShiftOptions {
        seed,
        trials: common.trials,
        ..ShiftOptions::default()
    }
}

fn error_kind(e: &Error) -> (&'static str, u8) {
    match e {
        Error::Parse(_)
        | Error::VertexOutOfRange(..)
        | Error::EnumerationCap(..)
        | Error::UnitIdeal
        | Error::NotSquarefree(_)
        | Error::ZeroIdeal
        | Error::SupportExceedsUniverse(..)
        | Error::EmptyComplex
        | Error::NotSqStronglyStable
        | Error::NotStronglyStable
        | Error::NotHomogeneous
        | Error::BadHVector
        | Error::ZeroKSequence
        | Error::UniverseTooSmall(..)
        | Error::InvalidArgument(_) => ("input", 2),
        Error::NotShifted
        | Error::NotRealizable(..)
        | Error::GinTrialsDisagree
        | Error::StabilityCertificate
        | Error::HilbertCertificate(_)
        | Error::PhiImageEscapes(..)
        | Error::OrderNotPhiCompatible(_)
        | Error::LexIncreaseViolated(_)
        | Error::BudgetExceeded(_) => ("verification", 1),
    }
}

fn run() -> Result<u8, (Error, u8)> {
    let cli = Cli::parse();
    let fail = |e: Error| {
        let (_, code) = error_kind(&e);
        (e, code)
    };

    match cli.command {
        Command::Shift { order, common } => {
            let seed = resolve_seed(common.seed);
            let config = config("shift", Some(order), seed, &common, None, None);
            let input = read_input(&common).map_err(fail)?;
            let Input::Complex(gamma) = input else {
                return Err(fail(Error::Parse("shift expects a complex".into())));
            };
            let opts = shift_options(&common, seed);
            let (complex, ideal) = match order {
                OrderArg::Rl => {
                    let shifted = delta_rl_opts(&gamma, &opts).map_err(fail)?;
                    let ideal = if shifted.is_void() {
                        MonomialIdeal::zero()
                    } else {
                        stanley_reisner(&shifted).map_err(fail)?
                    };
                    (shifted, ideal)
                }
                OrderArg::Lex => {
                    if gamma.is_void() {
                        (gamma.clone(), MonomialIdeal::zero())
                    } else {
                        let ideal = stanley_reisner(&gamma).map_err(fail)?;
                        let shifted = delta_lex_opts(&ideal, &opts).map_err(fail)?;
                        let n = gamma.n().max(shifted.max_support());
                        (complex_of(&shifted, n).map_err(fail)?, shifted)
                    }
                }
                OrderArg::X1block => {
                    return Err(fail(Error::OrderNotPhiCompatible("x1block".into())));
                }
            };
            let out = json!({"config": config, "complex": complex, "ideal": ideal});
            write_output(&common, &out).map_err(fail)?;
            Ok(0)
        }
        Command::Gin { order, n, common } => {
            let seed = resolve_seed(common.seed);
            let config = config("gin", Some(order), seed, &common, n, None);
            let (ideal, support_n) = as_ideal(read_input(&common).map_err(fail)?).map_err(fail)?;
            let n = n.unwrap_or(support_n);
            let result =
                gin(&ideal, n, &order.to_order(), seed, common.trials).map_err(fail)?;
            let out = json!({"config": config, "ideal": result});
            write_output(&common, &out).map_err(fail)?;
            Ok(0)
        }
        Command::Iterate { common } => {
            let seed = resolve_seed(common.seed);
            let config = config("iterate", None, seed, &common, None, None);
            let (ideal, _) = as_ideal(read_input(&common).map_err(fail)?).map_err(fail)?;
            let opts = shift_options(&common, seed);
            let orbit =
                iterate_lex(&ideal, common.max_steps, common.dbound, &opts).map_err(fail)?;
            let mut out = serde_json::to_value(&orbit).expect("orbit serializes");
            out["config"] = serde_json::to_value(&config).expect("config serializes");
            write_output(&common, &out).map_err(fail)?;
            Ok(0)
        }
        Command::Limit { n, common } => {
            let seed = resolve_seed(common.seed);
            let config = config("limit", None, seed, &common, n, None);
            let (ideal, support_n) = as_ideal(read_input(&common).map_err(fail)?).map_err(fail)?;
            let n = n.unwrap_or(support_n);
            let limit = limit_usli(&ideal, n, common.dbound).map_err(fail)?;
            let out = json!({"config": config, "limit": limit});
            write_output(&common, &out).map_err(fail)?;
            Ok(0)
        }
        Command::Classify { common } => {
            let seed = resolve_seed(common.seed);
            let config = config("classify", None, seed, &common, None, None);
            let (ideal, _) = as_ideal(read_input(&common).map_err(fail)?).map_err(fail)?;
            let sqss = ideal.is_squarefree() && ideal.is_sq_strongly_stable().map_err(fail)?;
            let out = json!({
                "config": config,
                "squarefree_strongly_stable": sqss,
                "usli": is_usli(&ideal),
                "almost_usli": is_almost_usli(&ideal),
            });
            write_output(&common, &out).map_err(fail)?;
            Ok(0)
        }
        Command::Bseq { n, common } => {
            let seed = resolve_seed(common.seed);
            let config = config("bseq", None, seed, &common, n, None);
            let (ideal, support_n) = as_ideal(read_input(&common).map_err(fail)?).map_err(fail)?;
            let n = n.unwrap_or(support_n);
            let b = b_sequence(&ideal, n, common.dbound).map_err(fail)?;
            let out = json!({"config": config, "b": b});
            write_output(&common, &out).map_err(fail)?;
            Ok(0)
        }
        Command::VerifyAxioms { n, samples, common } => {
            let seed = resolve_seed(common.seed);
            let config = config("verify-axioms", None, seed, &common, Some(n), Some(samples));
            let opts = ShiftOptions {
                force_groebner: true,
                ..shift_options(&common, seed)
            };
            let report = verify_axioms(n, samples, seed, &opts).map_err(fail)?;
            let pass = report.passed();
            let out = json!({"config": config, "report": report, "pass": pass});
            write_output(&common, &out).map_err(fail)?;
            Ok(if pass { 0 } else { 1 })
        }
        Command::EnumerateShifted { n, common } => {
            let seed = resolve_seed(common.seed);
            let config = config("enumerate-shifted", None, seed, &common, Some(n), None);
            let complexes = enumerate_shifted(n).map_err(fail)?;
            let mut lines = String::new();
            lines.push_str(&format!(
                "{}\n",
                json!({"config": config, "count": complexes.len()})
            ));
            for c in &complexes {
                lines.push_str(&serde_json::to_string(c).expect("complex serializes"));
                lines.push('\n');
            }
            match &common.output {
                Some(path) => std::fs::write(path, lines)
                    .map_err(|e| fail(Error::Parse(format!("cannot write: {e}"))))?,
                None => print!("{lines}"),
            }
            Ok(0)
        }
        Command::ProbeConjecture { order, common } => {
            let seed = resolve_seed(common.seed);
            let config = config("probe-conjecture", Some(order), seed, &common, None, None);
            let opts = shift_options(&common, seed);
            let probe = probe_conjecture(&order.to_order(), &opts).map_err(fail)?;
            let out = json!({"config": config, "probe": probe});
            write_output(&common, &out).map_err(fail)?;
            Ok(0)
        }
    }
}

fn config(
    command: &'static str,
    order: Option<OrderArg>,
    seed: u64,
    common: &CommonArgs,
    n: Option<u32>,
    samples: Option<u32>,
) -> ResolvedConfig {
    ResolvedConfig {
        command,
        order: order.map(|o| {
            match o {
                OrderArg::Lex => "lex",
                OrderArg::Rl => "rl",
                OrderArg::X1block => "x1block",
            }
            .to_string()
        }),
        seed,
        trials: common.trials,
        dbound: common.dbound,
        max_steps: common.max_steps,
        n,
        samples,
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err((e, code)) => {
            let (kind, _) = error_kind(&e);
            eprintln!(
                "{}",
                json!({"error": {"kind": kind, "message": e.to_string()}})
            );
            ExitCode::from(code)
        }
    }
}
