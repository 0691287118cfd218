//! `witt-paths`: exact counters, brute-force oracles, generator dimensions
//! and identity verifiers for closed non-backtracking paths on bouquet
//! graphs. All values print as exact integers or `p/q` rationals; JSON
//! output is machine-stable.
//!
//! Exit codes: 0 success/pass, 1 verification or internal-consistency
//! failure, 2 usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use std::process::ExitCode;
use std::time::Instant;
use witt_paths_core::identities::{
    verify_cancellation, verify_gen_witt, verify_plus_minus_products, verify_sherman,
    verify_witt_classical, Corruption, VerificationReport,
};
use witt_paths_core::lie_dims::{dims_faa, dims_series};
use witt_paths_core::oracle::{
    enumerate_words, necklace_m_oracle, necklace_m_representatives, signed_necklace_oracle,
    signed_necklace_representatives, theta_class_representatives, theta_oracle, OracleError,
    DEFAULT_ENUMERATION_BOUND,
};
use witt_paths_core::path_counts::{theta, witt_f, witt_f_prime, witt_m, WittFunctionKind};
use witt_paths_core::sign_counts::{h_value, p_value, theta_minus, theta_plus, witt_g};
use witt_paths_core::MultiDegree;

#[derive(Parser)]
#[command(
    name = "witt-paths",
    version,
    about = "Exact path-class counting on bouquet graphs, with identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit a machine-readable JSON record instead of plain text
    #[arg(long, global = true)]
    json: bool,

    /// Suppress the elapsed-time field (byte-identical reruns)
    #[arg(long = "no-timing", global = true)]
    no_timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form class counts and partition values for one multidegree
    Count {
        /// Comma-separated positive edge multiplicities, e.g. 2,2
        #[arg(short = 'm', long = "multidegree", value_name = "M1,M2,...")]
        multidegree: String,
    },
    /// Brute-force enumeration cross-checks
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Generator dimensions by two independent routes
    Dims {
        /// Witt partition function selecting the dimension family
        #[arg(long, value_enum, ignore_case = true)]
        kind: KindArg,
        /// Comma-separated positive entries of the grading vector
        #[arg(short = 'k', long = "multidegree", value_name = "K1,K2,...")]
        multidegree: String,
    },
    /// Coefficientwise identity verification over truncated series
    Verify {
        #[command(subcommand)]
        identity: IdentityCommand,
    },
}

#[derive(Args)]
struct OracleArgs {
    /// Comma-separated positive edge multiplicities
    #[arg(short = 'm', long = "multidegree", value_name = "M1,M2,...")]
    multidegree: String,

    /// Also list the canonical class representatives
    #[arg(long)]
    list: bool,

    /// Enumeration bound on the total length N
    #[arg(long = "max-n", value_name = "BOUND", default_value_t = DEFAULT_ENUMERATION_BOUND)]
    max_n: u64,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Enumerate all words and count nonperiodic rotation classes
    Words(OracleArgs),
    /// Count nonperiodic plain necklace colourings
    Necklaces(OracleArgs),
    /// Count nonperiodic signed necklace colourings
    SignedNecklaces(OracleArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Number of loop edges (series variables)
    #[arg(long, value_name = "R")]
    edges: usize,

    /// Total-degree truncation bound
    #[arg(long, value_name = "D")]
    degree: u64,

    /// Corrupt one exponent by +1 at this vector (testing affordance;
    /// demonstrates verifier sensitivity)
    #[arg(long, value_name = "M1,M2,...")]
    corrupt: Option<String>,
}

#[derive(Subcommand)]
enum IdentityCommand {
    /// Product over all multidegrees vs the squared linear factors
    Sherman(VerifyArgs),
    /// Plus/minus product over positive multidegrees vs 1
    Cancellation(VerifyArgs),
    /// Generalized Witt identity for a chosen partition function
    GenWitt {
        #[command(flatten)]
        args: VerifyArgs,
        #[arg(long, value_enum, ignore_case = true, default_value_t = KindArg::F)]
        kind: KindArg,
    },
    /// The two exponential product forms
    PlusMinus(VerifyArgs),
    /// Classical Witt product vs 1 - sum of the variables
    WittClassical(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    F,
    G,
    H,
}

impl KindArg {
    fn to_kind(self) -> WittFunctionKind {
        match self {
            KindArg::F => WittFunctionKind::F,
            KindArg::G => WittFunctionKind::G,
            KindArg::H => WittFunctionKind::H,
        }
    }
}

/// A usage problem: reported on stderr, exit code 2.
struct UsageError(String);

/// Ordered result record rendered as plain text or JSON.
struct OutputRecord {
    command: &'static str,
    input: Value,
    results: Vec<(String, String)>,
    status: &'static str,
    mismatch: Option<Value>,
    classes: Option<Vec<String>>,
}

impl OutputRecord {
    fn new(command: &'static str, input: Value) -> Self {
        OutputRecord {
            command,
            input,
            results: Vec::new(),
            status: "ok",
            mismatch: None,
            classes: None,
        }
    }

    fn push(&mut self, name: &str, value: impl ToString) {
        self.results.push((name.to_string(), value.to_string()));
    }

    fn render(&self, json_mode: bool, elapsed_ms: Option<u128>) {
        if json_mode {
            let mut results = Map::new();
            for (k, v) in &self.results {
                results.insert(k.clone(), Value::String(v.clone()));
            }
            let mut record = Map::new();
            record.insert("command".into(), Value::String(self.command.into()));
            record.insert("input".into(), self.input.clone());
            record.insert("results".into(), Value::Object(results));
            record.insert("status".into(), Value::String(self.status.into()));
            if let Some(m) = &self.mismatch {
                record.insert("mismatch".into(), m.clone());
            }
            if let Some(classes) = &self.classes {
                record.insert(
                    "classes".into(),
                    Value::Array(classes.iter().cloned().map(Value::String).collect()),
                );
            }
            if let Some(ms) = elapsed_ms {
                record.insert("elapsed_ms".into(), json!(ms));
            }
            println!("{}", serde_json::to_string(&Value::Object(record)).unwrap());
        } else {
            for (k, v) in &self.results {
                println!("{k} = {v}");
            }
            if let Some(m) = &self.mismatch {
                println!("mismatch: {m}");
            }
            if let Some(classes) = &self.classes {
                for c in classes {
                    println!("  {c}");
                }
            }
            println!("status: {}", self.status);
            if let Some(ms) = elapsed_ms {
                println!("elapsed: {ms} ms");
            }
        }
    }
}

fn parse_multidegree(raw: &str) -> Result<(Vec<u64>, MultiDegree), UsageError> {
    let mut values = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        let v: u64 = part
            .parse()
            .map_err(|_| UsageError(format!("invalid multidegree entry '{part}'")))?;
        values.push(v);
    }
    let stripped = MultiDegree::stripping_zeros(&values)
        .ok_or_else(|| UsageError("multidegree has no positive entries".to_string()))?;
    if stripped.num_edges() != values.len() {
        eprintln!("note: stripped zero entries; using {stripped}");
    }
    Ok((values, stripped))
}

fn run_count(raw: &str, record_out: &mut Option<OutputRecord>) -> Result<ExitCode, UsageError> {
    let (raw_values, m) = parse_multidegree(raw)?;
    let mut record = OutputRecord::new(
        "count",
        json!({ "raw": raw_values, "multidegree": m.entries() }),
    );
    record.push("theta", theta(&m));
    record.push("theta_plus", theta_plus(&m));
    record.push("theta_minus", theta_minus(&m));
    if m.num_edges() >= 2 {
        record.push("F", witt_f(&m));
        record.push("F_prime", witt_f_prime(&m));
        record.push("G", witt_g(&m));
        record.push("H", h_value(&m));
        record.push("P", p_value(&m));
    }
    record.push("M", witt_m(&m));
    *record_out = Some(record);
    Ok(ExitCode::SUCCESS)
}

fn run_oracle(
    which: &OracleCommand,
    record_out: &mut Option<OutputRecord>,
) -> Result<ExitCode, UsageError> {
    let (name, args): (&'static str, &OracleArgs) = match which {
        OracleCommand::Words(a) => ("oracle words", a),
        OracleCommand::Necklaces(a) => ("oracle necklaces", a),
        OracleCommand::SignedNecklaces(a) => ("oracle signed-necklaces", a),
    };
    let (raw_values, m) = parse_multidegree(&args.multidegree)?;
    let mut record = OutputRecord::new(
        name,
        json!({ "raw": raw_values, "multidegree": m.entries(), "max_n": args.max_n }),
    );
    let bound_err = |e: OracleError| UsageError(format!("enumeration refused: {e}"));
    match which {
        OracleCommand::Words(_) => {
            let classes = theta_oracle(&m, args.max_n).map_err(bound_err)?;
            let total = enumerate_words(&m).len();
            record.push("total_words", total);
            record.push("nonperiodic_classes", classes);
            if args.list {
                let reps = theta_class_representatives(&m, args.max_n).map_err(bound_err)?;
                record.classes = Some(reps.iter().map(|w| w.to_string()).collect());
            }
        }
        OracleCommand::Necklaces(_) => {
            let classes = necklace_m_oracle(&m, args.max_n).map_err(bound_err)?;
            record.push("nonperiodic_classes", classes);
            if args.list {
                let reps = necklace_m_representatives(&m, args.max_n).map_err(bound_err)?;
                record.classes = Some(reps.iter().map(|n| n.to_string()).collect());
            }
        }
        OracleCommand::SignedNecklaces(_) => {
            let classes = signed_necklace_oracle(&m, args.max_n).map_err(bound_err)?;
            record.push("nonperiodic_classes", classes);
            if args.list {
                let reps = signed_necklace_representatives(&m, args.max_n).map_err(bound_err)?;
                record.classes = Some(reps.iter().map(|n| n.to_string()).collect());
            }
        }
    }
    *record_out = Some(record);
    Ok(ExitCode::SUCCESS)
}

fn run_dims(
    kind: KindArg,
    raw: &str,
    record_out: &mut Option<OutputRecord>,
) -> Result<ExitCode, UsageError> {
    let (raw_values, k) = parse_multidegree(raw)?;
    if k.num_edges() < 2 {
        return Err(UsageError(
            "dims needs a grading vector with at least two entries".to_string(),
        ));
    }
    let kind_label = kind.to_kind().label();
    let mut record = OutputRecord::new(
        "dims",
        json!({ "raw": raw_values, "multidegree": k.entries(), "kind": kind_label }),
    );
    let faa = dims_faa(kind.to_kind(), &k);
    let series = dims_series(kind.to_kind(), &k);
    let agree = faa == series;
    record.push("dims_faa", &faa);
    record.push("dims_series", &series);
    record.push("agree", agree);
    if !agree {
        record.status = "fail";
    }
    *record_out = Some(record);
    Ok(if agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn parse_corruption(
    args: &VerifyArgs,
    strictly_positive: bool,
) -> Result<Option<Corruption>, UsageError> {
    let Some(raw) = &args.corrupt else {
        return Ok(None);
    };
    let mut at = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        let v: u64 = part
            .parse()
            .map_err(|_| UsageError(format!("invalid corruption entry '{part}'")))?;
        at.push(v);
    }
    if at.len() != args.edges {
        return Err(UsageError(format!(
            "corruption vector must have {} entries, got {}",
            args.edges,
            at.len()
        )));
    }
    if at.iter().all(|&v| v == 0) {
        return Err(UsageError("corruption vector must be nonzero".to_string()));
    }
    if strictly_positive && at.contains(&0) {
        return Err(UsageError(
            "this identity's product ranges over strictly positive vectors; \
             the corruption vector may not contain zeros"
                .to_string(),
        ));
    }
    Ok(Some(Corruption { at, delta: 1 }))
}

fn run_verify(
    identity: &IdentityCommand,
    record_out: &mut Option<OutputRecord>,
) -> Result<ExitCode, UsageError> {
    let (args, needs_positive) = match identity {
        IdentityCommand::Sherman(a) => (a, false),
        IdentityCommand::Cancellation(a) => (a, true),
        IdentityCommand::GenWitt { args, .. } => (args, true),
        IdentityCommand::PlusMinus(a) => (a, true),
        IdentityCommand::WittClassical(a) => (a, false),
    };
    if args.degree < 1 {
        return Err(UsageError("degree bound must be at least 1".to_string()));
    }
    let min_edges = match identity {
        IdentityCommand::WittClassical(_) => 1,
        _ => 2,
    };
    if args.edges < min_edges {
        return Err(UsageError(format!(
            "this identity needs at least {min_edges} edge(s)"
        )));
    }
    let corrupt = parse_corruption(args, needs_positive)?;
    let report: VerificationReport = match identity {
        IdentityCommand::Sherman(_) => verify_sherman(args.edges, args.degree, corrupt.as_ref()),
        IdentityCommand::Cancellation(_) => {
            verify_cancellation(args.edges, args.degree, corrupt.as_ref())
        }
        IdentityCommand::GenWitt { kind, .. } => {
            verify_gen_witt(kind.to_kind(), args.edges, args.degree, corrupt.as_ref())
        }
        IdentityCommand::PlusMinus(_) => {
            verify_plus_minus_products(args.edges, args.degree, corrupt.as_ref())
        }
        IdentityCommand::WittClassical(_) => {
            verify_witt_classical(args.edges, args.degree, corrupt.as_ref())
        }
    };

    let mut input = Map::new();
    input.insert("edges".into(), json!(args.edges));
    input.insert("degree".into(), json!(args.degree));
    if let Some(c) = &corrupt {
        input.insert("corrupt".into(), json!(c.at));
    }
    let mut record = OutputRecord::new("verify", Value::Object(input));
    record.push("identity", &report.identity);
    record.push("passed", report.passed);
    if let Some(m) = &report.first_mismatch {
        let mut mismatch = Map::new();
        mismatch.insert("exponents".into(), json!(m.exponents));
        mismatch.insert("lhs".into(), Value::String(m.lhs.to_string()));
        mismatch.insert("rhs".into(), Value::String(m.rhs.to_string()));
        if let Some(note) = &m.note {
            mismatch.insert("note".into(), Value::String(note.clone()));
        }
        record.mismatch = Some(Value::Object(mismatch));
    }
    record.status = if report.passed { "ok" } else { "fail" };
    *record_out = Some(record);
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let mut record: Option<OutputRecord> = None;
    let outcome = match &cli.command {
        Command::Count { multidegree } => run_count(multidegree, &mut record),
        Command::Oracle { which } => run_oracle(which, &mut record),
        Command::Dims { kind, multidegree } => run_dims(*kind, multidegree, &mut record),
        Command::Verify { identity } => run_verify(identity, &mut record),
    };
    match outcome {
        Ok(code) => {
            let elapsed = if cli.no_timing {
                None
            } else {
                Some(started.elapsed().as_millis())
            };
            if let Some(record) = record {
                record.render(cli.json, elapsed);
            }
            code
        }
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
