//! Command-line front end: construct / capset / verify / bounds / search /
//! trace with stable exit codes and machine-readable output.
//!
//! Exit codes: 0 success or verdict-true; 1 verdict-false or uncertified
//! trace; 2 usage or input error; 3 resource cap or budget exceeded.
//! Results go to stdout, diagnostics to stderr, artifacts to files
//! (written atomically via a temp file and rename).

use clap::{Args, Parser, Subcommand, ValueEnum};
use sepcodes::bounds::bound_report;
use sepcodes::code::Code;
use sepcodes::construct::{
    build_ssc, capset_exact, capset_greedy, difference_matrix, CapSet, ConstructError, PointOrder,
};
use sepcodes::field::{FieldElement, FieldSpec};
use sepcodes::search::search_optimal;
use sepcodes::trace::{parse_observation, trace_with_cap, TraceError};
use sepcodes::verify::{
    is_fpc, is_fpc2_fast, is_sc, is_sc3_fast, is_ssc3_fast, is_ssc_with_cap, Property,
    VerificationReport, VerifyError, DEFAULT_CANDIDATE_CAP,
};
use serde_json::json;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "sepcodes", version, about = "Separable-code construction and verification toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build difference matrices and separable codes
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Find cap sets in AG(n, q)
    Capset {
        #[command(subcommand)]
        what: CapsetCmd,
    },
    /// Verify frameproof / separable / strongly separable properties
    Verify(VerifyArgs),
    /// Evaluate size bounds for given parameters
    Bounds(BoundsArgs),
    /// Exhaustively determine optimal sizes at tiny parameters
    Search(SearchArgs),
    /// Trace a coalition from an observed descendant set
    Trace(TraceArgs),
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Emit the canonical 3 x q difference matrix over GF(q)
    Dm {
        /// Field order (prime power)
        #[arg(long)]
        q: u64,
        /// Multiplier for the third row, as an integer encoding; defaults
        /// to the sixth root of unity when q = 1 (mod 6), else 2
        #[arg(long)]
        alpha: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run the cap-set pipeline: a (3, q|S|, q) strongly separable code
    Ssc {
        /// Base field order, a prime power congruent to 1 mod 6
        #[arg(long)]
        q1: u64,
        /// Vector-space dimension; the code alphabet is q = q1^n
        #[arg(long)]
        n: usize,
        /// Cap-set file to use as S; greedy search when omitted
        #[arg(long)]
        cap_file: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        /// Provenance JSON path; defaults to <out>.provenance.json
        #[arg(long)]
        provenance: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CapsetCmd {
    /// Maximal-under-inclusion cap by a greedy scan
    Greedy {
        #[arg(long)]
        q1: u64,
        #[arg(long)]
        dim: usize,
        /// Point order: canonical or parabola (dim 2 only)
        #[arg(long, value_enum, default_value_t = OrderArg::Canonical)]
        order: OrderArg,
        /// Shuffle the scan order with this seed
        #[arg(long, conflicts_with = "order")]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Maximum cap by exhaustive backtracking
    Exact {
        #[arg(long)]
        q1: u64,
        #[arg(long)]
        dim: usize,
        /// Node budget before returning best-found
        #[arg(long, default_value_t = 1 << 24)]
        budget: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Canonical,
    Parabola,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Fpc,
    Sc,
    Ssc,
}

impl PropertyArg {
    fn property(self) -> Property {
        match self {
            PropertyArg::Fpc => Property::Fpc,
            PropertyArg::Sc => Property::Sc,
            PropertyArg::Ssc => Property::Ssc,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    /// Fast characterization when its hypotheses hold, else definitional
    Auto,
    Fast,
    Definitional,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    property: PropertyArg,
    #[arg(long)]
    t: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Candidate cap for the definitional strong-separability check
    #[arg(long, default_value_t = DEFAULT_CANDIDATE_CAP)]
    cap: usize,
    #[arg(long)]
    json: bool,
    /// Code file to verify
    code: PathBuf,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    t: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: u64,
    /// A constructed code file; once verified it enters as a certified
    /// lower bound
    #[arg(long)]
    cert_code: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    t: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: u32,
    #[arg(long, value_enum)]
    property: PropertyArg,
    #[arg(long, default_value_t = 1 << 24)]
    budget: u64,
    /// Write the witness code here
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TraceArgs {
    #[arg(long)]
    code: PathBuf,
    /// Observation file: "n q" then one value-set line per coordinate
    #[arg(long)]
    obs: PathBuf,
    /// Claimed coalition size bound (recorded, not enforced)
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_CANDIDATE_CAP)]
    cap: usize,
    #[arg(long)]
    json: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::usage(e.to_string())
    }
}

impl From<sepcodes::code::CodeError> for Failure {
    fn from(e: sepcodes::code::CodeError) -> Failure {
        Failure::usage(e.to_string())
    }
}

impl From<sepcodes::field::FieldError> for Failure {
    fn from(e: sepcodes::field::FieldError) -> Failure {
        Failure::usage(e.to_string())
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Failure {
        Failure::usage(e.to_string())
    }
}

impl From<sepcodes::bounds::BoundsError> for Failure {
    fn from(e: sepcodes::bounds::BoundsError) -> Failure {
        Failure::usage(e.to_string())
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Failure {
        let code = match e {
            VerifyError::CandidateCapExceeded { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<TraceError> for Failure {
    fn from(e: TraceError) -> Failure {
        let code = match e {
            TraceError::CapExceeded { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path)
        .map_err(|e| Failure::usage(format!("cannot write {}: {}", path.display(), e.error)))?;
    Ok(())
}

fn read_code(path: &Path) -> Result<Code, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(Code::parse(&text)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Construct { what } => match what {
            ConstructCmd::Dm { q, alpha, out, json } => construct_dm(q, alpha, &out, json),
            ConstructCmd::Ssc { q1, n, cap_file, out, provenance, json } => {
                construct_ssc(q1, n, cap_file.as_deref(), &out, provenance.as_deref(), json)
            }
        },
        Command::Capset { what } => match what {
            CapsetCmd::Greedy { q1, dim, order, seed, out, json } => {
                capset_greedy_cmd(q1, dim, order, seed, &out, json)
            }
            CapsetCmd::Exact { q1, dim, budget, out, json } => {
                capset_exact_cmd(q1, dim, budget, &out, json)
            }
        },
        Command::Verify(args) => verify_cmd(args),
        Command::Bounds(args) => bounds_cmd(args),
        Command::Search(args) => search_cmd(args),
        Command::Trace(args) => trace_cmd(args),
    }
}

fn default_alpha(spec: &FieldSpec) -> Result<FieldElement, Failure> {
    if spec.order() % 6 == 1 {
        Ok(spec.sixth_root_of_unity()?)
    } else {
        Ok(spec.element(2)?)
    }
}

fn construct_dm(q: u64, alpha: Option<u64>, out: &Path, json: bool) -> Result<u8, Failure> {
    let spec = FieldSpec::of_order(q)?;
    let alpha = match alpha {
        Some(a) => spec.element(a)?,
        None => default_alpha(&spec)?,
    };
    let dm = difference_matrix(&spec, &alpha)?;
    let mut text = format!("3 {q} {q}\n");
    for row in dm.rows() {
        let syms: Vec<String> = row.iter().map(|e| e.encode().to_string()).collect();
        text.push_str(&syms.join(" "));
        text.push('\n');
    }
    write_atomic(out, &text)?;
    if json {
        println!(
            "{}",
            json!({ "q": q, "alpha": dm.alpha().encode(), "out": out.display().to_string() })
        );
    } else {
        println!("difference matrix over GF({q}) with alpha = {} -> {}", dm.alpha().encode(), out.display());
    }
    Ok(0)
}

fn construct_ssc(
    q1: u64,
    n: usize,
    cap_file: Option<&Path>,
    out: &Path,
    provenance: Option<&Path>,
    json: bool,
) -> Result<u8, Failure> {
    let cap = match cap_file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            Some(CapSet::parse(&text)?)
        }
        None => None,
    };
    let built = build_ssc(q1, n, cap.as_ref())?;
    write_atomic(out, &built.code.serialize())?;
    let prov_path = provenance
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from(format!("{}.provenance.json", out.display())));
    let prov_json = built.provenance.to_json();
    write_atomic(&prov_path, &format!("{prov_json:#}\n"))?;
    if json {
        println!(
            "{}",
            json!({
                "n": 3,
                "m": built.code.size(),
                "q": built.code.alphabet(),
                "out": out.display().to_string(),
                "provenance": prov_path.display().to_string(),
            })
        );
    } else {
        println!(
            "(3, {}, {}) code -> {} (provenance {})",
            built.code.size(),
            built.code.alphabet(),
            out.display(),
            prov_path.display()
        );
    }
    Ok(0)
}

fn capset_greedy_cmd(
    q1: u64,
    dim: usize,
    order: OrderArg,
    seed: Option<u64>,
    out: &Path,
    json: bool,
) -> Result<u8, Failure> {
    let base = FieldSpec::of_order(q1)?;
    let order = match (seed, order) {
        (Some(s), _) => PointOrder::Seeded(s),
        (None, OrderArg::Canonical) => PointOrder::Canonical,
        (None, OrderArg::Parabola) => PointOrder::Parabola,
    };
    let cap = capset_greedy(&base, dim, &order)?;
    write_atomic(out, &cap.serialize())?;
    if json {
        println!(
            "{}",
            json!({ "q1": q1, "dim": dim, "size": cap.len(), "out": out.display().to_string() })
        );
    } else {
        println!("greedy cap of size {} in AG({dim}, {q1}) -> {}", cap.len(), out.display());
    }
    Ok(0)
}

fn capset_exact_cmd(q1: u64, dim: usize, budget: u64, out: &Path, json: bool) -> Result<u8, Failure> {
    let base = FieldSpec::of_order(q1)?;
    let res = capset_exact(&base, dim, budget)?;
    write_atomic(out, &res.cap.serialize())?;
    if json {
        println!(
            "{}",
            json!({
                "q1": q1,
                "dim": dim,
                "size": res.cap.len(),
                "nodes_explored": res.nodes_explored,
                "exhaustive": res.exhaustive,
                "out": out.display().to_string(),
            })
        );
    } else {
        println!(
            "{} cap of size {} in AG({dim}, {q1}) after {} nodes -> {}",
            if res.exhaustive { "maximum" } else { "best-found (budget hit)" },
            res.cap.len(),
            res.nodes_explored,
            out.display()
        );
    }
    Ok(if res.exhaustive { 0 } else { 3 })
}

fn verify_cmd(args: VerifyArgs) -> Result<u8, Failure> {
    let code = read_code(&args.code)?;
    let property = args.property.property();
    if args.t < 2 && property != Property::Fpc {
        return Err(Failure::usage("separability properties need --t of at least 2"));
    }
    if args.t < 1 {
        return Err(Failure::usage("--t must be at least 1"));
    }
    let fast_applicable = code.length() == 3
        && match property {
            Property::Fpc => args.t == 2,
            Property::Sc => args.t == 3,
            Property::Ssc => args.t == 3 && code.alphabet() >= 3,
        };
    let use_fast = match args.method {
        MethodArg::Fast => {
            if !fast_applicable {
                return Err(Failure::usage(
                    "fast verifiers require length 3 with t = 2 (fpc) or t = 3 (sc, ssc; \
                     alphabet at least 3 for ssc)",
                ));
            }
            true
        }
        MethodArg::Definitional => false,
        MethodArg::Auto => fast_applicable,
    };
    let report: VerificationReport = if use_fast {
        match property {
            Property::Fpc => is_fpc2_fast(&code)?,
            Property::Sc => is_sc3_fast(&code)?,
            Property::Ssc => is_ssc3_fast(&code)?,
        }
    } else {
        match property {
            Property::Fpc => is_fpc(&code, args.t),
            Property::Sc => is_sc(&code, args.t),
            Property::Ssc => is_ssc_with_cap(&code, args.t, args.cap)?,
        }
    };
    if args.json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
    }
    Ok(if report.verdict { 0 } else { 1 })
}

fn bounds_cmd(args: BoundsArgs) -> Result<u8, Failure> {
    let certified = match &args.cert_code {
        None => None,
        Some(path) => {
            let code = read_code(path)?;
            if code.length() != args.n || code.alphabet() as u64 != args.q {
                return Err(Failure::usage(format!(
                    "certificate code is a ({}, {}, {}) code, parameters ask for n = {}, q = {}",
                    code.length(),
                    code.size(),
                    code.alphabet(),
                    args.n,
                    args.q
                )));
            }
            let report = if code.length() == 3 && args.t == 3 && code.alphabet() >= 3 {
                is_sc3_fast(&code)?
            } else {
                is_sc(&code, args.t)
            };
            if !report.verdict {
                return Err(Failure::usage("certificate code failed verification"));
            }
            Some(code.size() as u128)
        }
    };
    let report = bound_report(args.t, args.n, args.q, certified)?;
    if args.json {
        println!("{}", report.to_json());
    } else {
        println!("M({}, {}, {}) bounds:", args.t, args.n, args.q);
        for e in &report.all {
            let note = e.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default();
            println!("  {:<24} {:<5} {}{}", e.source, e.kind.as_str(), e.value, note);
        }
        if let Some(lo) = &report.best_lower {
            println!("  best lower: {} [{}]", lo.value, lo.source);
        }
        if let Some(hi) = &report.best_upper {
            println!("  best upper: {} [{}]", hi.value, hi.source);
        }
    }
    Ok(0)
}

fn search_cmd(args: SearchArgs) -> Result<u8, Failure> {
    if args.n < 1 || args.q < 2 {
        return Err(Failure::usage("search needs --n >= 1 and --q >= 2"));
    }
    let property = args.property.property();
    if args.t < 2 && property != Property::Fpc {
        return Err(Failure::usage("separability properties need --t of at least 2"));
    }
    if (args.q as u64).pow(args.n as u32) > 81 {
        eprintln!("note: search space q^n exceeds the intended desk scale of 81 words");
    }
    let res = search_optimal(args.t, args.n, args.q, property, args.budget)?;
    if let Some(out) = &args.out {
        write_atomic(out, &res.witness.serialize())?;
    }
    if args.json {
        println!("{}", res.to_json());
    } else {
        println!(
            "optimal {}-size for (t, n, q) = ({}, {}, {}): {}{} [{} nodes]",
            res.property.as_str(),
            res.t,
            res.n,
            res.q,
            res.optimum,
            if res.exhaustive { "" } else { " (not certified: budget hit)" },
            res.nodes_explored
        );
    }
    Ok(if res.exhaustive { 0 } else { 3 })
}

fn trace_cmd(args: TraceArgs) -> Result<u8, Failure> {
    let code = read_code(&args.code)?;
    let text = std::fs::read_to_string(&args.obs)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", args.obs.display())))?;
    let observation = parse_observation(&text)?;
    let res = trace_with_cap(&code, &observation, args.cap)?;
    if args.json {
        let mut value = res.to_json();
        if let Some(t) = args.t {
            value["claimed_t"] = json!(t);
        }
        println!("{value}");
    } else {
        println!(
            "guilty {:?} of candidates {:?} ({}; {} codewords scanned)",
            res.guilty.one_based(),
            res.candidates.one_based(),
            if res.certified { "certified" } else { "not certified" },
            res.codewords_scanned
        );
    }
    Ok(if res.certified { 0 } else { 1 })
}
