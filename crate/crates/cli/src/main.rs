//! `hopfseq`: exact sequence transforms, Hopf algebra classification and the
//! free-algebra kernel from the command line.
//!
//! Exit codes: 0 success or YES, 1 NO, 2 usage or input error, 3 environment
//! (network or cache) error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hopfseq::classify::{self, Certificate};
use hopfseq::freealg::{
    embed_subalgebra, eulerian_idempotent, primitive_space_basis, verify_opg, NcPoly, OrderedPrimGenSet,
    Surjection,
};
use hopfseq::lyndon::{count_balanced_binary_lyndon, count_words, enumerate_lyndon, GradedAlphabet};
use hopfseq::oeis::OeisClient;
use hopfseq::transform::{a_to_p, TransformKind};
use hopfseq::{ClassifyError, FreeAlgError, LyndonError, OeisError, Sequence};

#[derive(Parser)]
#[command(name = "hopfseq", version, about = "Exact tools for free graded connected cocommutative Hopf algebras")]
struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Never use the network for OEIS lookups.
    #[arg(long, global = true)]
    offline: bool,
    /// OEIS cache directory (default: $HOPFSEQ_OEIS_CACHE or the user cache dir).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply one of the six transfer maps.
    Transform {
        /// invert, inverti, euler, euleri, a2p or p2a
        #[arg(long)]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
    },
    /// Is this the dimension sequence of a free graded connected cocommutative Hopf algebra?
    Realize {
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        /// Treat the input as a primitive-dimension sequence instead.
        #[arg(long)]
        primitive: bool,
    },
    /// Does the algebra with dimensions FROM surject onto the one with dimensions TO?
    Surjects {
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Does the algebra with dimensions HOST contain one with dimensions SUB?
    Embeds {
        #[arg(long, allow_hyphen_values = true)]
        host: String,
        #[arg(long, allow_hyphen_values = true)]
        sub: String,
    },
    /// List generator sequences of the Hopf subalgebras of HOST.
    EnumerateSubs {
        #[arg(long, allow_hyphen_values = true)]
        host: String,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Lyndon words over a graded alphabet
    #[command(subcommand)]
    Lyndon(LyndonCommand),
    /// Explicit computations in the free algebra on a graded alphabet
    #[command(subcommand)]
    Kernel(KernelCommand),
    /// Fetch OEIS b-files or match a sequence against cached ones
    #[command(subcommand)]
    Oeis(OeisCommand),
}

#[derive(Args)]
struct AlphabetDegree {
    /// Letter counts per degree, e.g. `2,1` for x, y in degree 1 and z in
    /// degree 2; degrees past the end of the list have no letters.
    #[arg(long)]
    alphabet: String,
    #[arg(long)]
    degree: usize,
}

#[derive(Subcommand)]
enum LyndonCommand {
    /// Number of words and of Lyndon words of the given degree.
    Count(AlphabetDegree),
    /// The Lyndon words of the given degree, in lexicographic order.
    List(AlphabetDegree),
    /// Binary Lyndon words with DEGREE zeros and DEGREE ones.
    Balanced {
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Subcommand)]
enum KernelCommand {
    /// Dimensions of the primitive space in degrees 1..=DEGREE.
    PrimitiveDims(AlphabetDegree),
    /// Apply the Eulerian idempotent to a polynomial.
    EulerIdempotent {
        #[arg(long)]
        alphabet: String,
        /// e.g. `g2_1 + g1_1.g1_2`
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Check that the given elements form an ordered primitive generating set.
    VerifyOpg {
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        degree: usize,
        /// Generator, repeatable; grouped by degree in the order given.
        #[arg(long = "elem", allow_hyphen_values = true)]
        elems: Vec<String>,
    },
    /// Apply the surjection determined by two generating sets.
    Surjection {
        #[arg(long)]
        host_alphabet: String,
        #[arg(long)]
        target_alphabet: String,
        /// Host generator, repeatable; the letters themselves if omitted.
        #[arg(long = "host-gen", allow_hyphen_values = true)]
        host_gens: Vec<String>,
        /// Target generator, repeatable; the letters themselves if omitted.
        #[arg(long = "target-gen", allow_hyphen_values = true)]
        target_gens: Vec<String>,
        #[arg(long)]
        degree: usize,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// Build explicit generators of a subalgebra with generator counts SUB.
    Embed {
        /// Generator counts of the host.
        #[arg(long)]
        host: String,
        /// Generator counts of the subalgebra.
        #[arg(long)]
        sub: String,
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Subcommand)]
enum OeisCommand {
    /// Fetch a b-file (cache, then network, then bundled snapshot).
    Fetch {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 20)]
        terms: usize,
    },
    /// Find local sequences containing the given terms.
    Identify {
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
    },
}

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn input(kind: &'static str, message: impl ToString) -> Self {
        Self { code: 2, kind, message: message.to_string() }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        Failure::input("ClassifyError", e)
    }
}

impl From<LyndonError> for Failure {
    fn from(e: LyndonError) -> Self {
        Failure::input("LyndonError", e)
    }
}

impl From<FreeAlgError> for Failure {
    fn from(e: FreeAlgError) -> Self {
        let code = match e {
            FreeAlgError::NoSurjectionExists { .. } | FreeAlgError::NoEmbeddingExists { .. } => 1,
            _ => 2,
        };
        Self { code, kind: "FreeAlgError", message: e.to_string() }
    }
}

impl From<OeisError> for Failure {
    fn from(e: OeisError) -> Self {
        let code = match e {
            OeisError::InvalidId(_) | OeisError::InvalidQuery(_) | OeisError::NotFound(_) => 2,
            OeisError::Unavailable { .. } | OeisError::Parse { .. } | OeisError::Io(_) => 3,
        };
        Self { code, kind: "OeisError", message: e.to_string() }
    }
}

/// What a command prints, and whether it answered YES.
struct Report {
    yes: bool,
    text: String,
    json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Self { yes: true, text, json }
    }

    fn certificate(c: Certificate) -> Self {
        Self {
            yes: c.is_yes(),
            text: c.to_string().trim_end().to_string(),
            json: serde_json::to_value(&c).expect("certificate serializes"),
        }
    }
}

fn seq(text: &str) -> Result<Sequence, Failure> {
    text.parse().map_err(|e| Failure::input("SeqError", e))
}

fn alphabet(text: &str) -> Result<GradedAlphabet, Failure> {
    text.parse().map_err(|e: LyndonError| e.into())
}

/// `text` as an alphabet covering at least degrees `1..=degree`.
fn padded_alphabet(text: &str, degree: usize) -> Result<GradedAlphabet, Failure> {
    let a = alphabet(text)?;
    Ok(a.with_truncation(a.truncation_degree().max(degree)))
}

fn poly(text: &str, alpha: &GradedAlphabet) -> Result<NcPoly, Failure> {
    Ok(NcPoly::parse(text, alpha)?)
}

fn generating_set(
    alpha: &GradedAlphabet,
    elems: &[String],
    degree: usize,
) -> Result<OrderedPrimGenSet, Failure> {
    if elems.is_empty() {
        return Ok(OrderedPrimGenSet::canonical(alpha, degree));
    }
    let parsed = elems.iter().map(|e| poly(e, alpha)).collect::<Result<Vec<_>, _>>()?;
    Ok(OrderedPrimGenSet::from_elements(alpha, parsed, degree)?)
}

fn csv<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Transform { kind, seq: s } => {
            let kind: TransformKind = kind.parse().map_err(|e| Failure::input("usage", e))?;
            let out = kind.apply(&seq(s)?);
            Ok(Report::ok(out.to_string(), json!({ "result": out })))
        }
        Command::Realize { seq: s, primitive } => {
            let s = seq(s)?;
            let c = if *primitive { classify::primitive_realizable(&s)? } else { classify::realizable(&s)? };
            Ok(Report::certificate(c))
        }
        Command::Surjects { from, to } => {
            Ok(Report::certificate(classify::surjection_exists(&seq(from)?, &seq(to)?)?))
        }
        Command::Embeds { host, sub } => {
            Ok(Report::certificate(classify::subalgebra_exists(&seq(host)?, &seq(sub)?)?))
        }
        Command::EnumerateSubs { host, max_degree, limit } => {
            let e = classify::enumerate_subalgebra_sequences(&seq(host)?, *max_degree, *limit)?;
            let mut text: Vec<String> = e.sequences.iter().map(|b| b.to_string()).collect();
            text.push(format!(
                "{} sequence(s){}",
                e.sequences.len(),
                if e.exhausted { "" } else { ", stopped at the limit" }
            ));
            Ok(Report::ok(text.join("\n"), serde_json::to_value(&e).expect("serializes")))
        }
        Command::Lyndon(cmd) => lyndon(cmd),
        Command::Kernel(cmd) => kernel(cmd),
        Command::Oeis(cmd) => oeis(cli, cmd),
    }
}

fn lyndon(cmd: &LyndonCommand) -> Result<Report, Failure> {
    match cmd {
        LyndonCommand::Count(AlphabetDegree { alphabet: a, degree }) => {
            let alpha = padded_alphabet(a, (*degree).max(1))?;
            let words = count_words(&alpha, *degree)?;
            let lyndon = if *degree == 0 {
                0.into()
            } else {
                a_to_p(&alpha.count_sequence()).at(*degree).to_integer()
            };
            Ok(Report::ok(
                format!("words: {words}\nlyndon: {lyndon}"),
                json!({ "degree": degree, "words": words.to_string(), "lyndon": lyndon.to_string() }),
            ))
        }
        LyndonCommand::List(AlphabetDegree { alphabet: a, degree }) => {
            let alpha = padded_alphabet(a, *degree)?;
            let words = enumerate_lyndon(&alpha, *degree)?;
            let list: Vec<String> = words.iter().map(|w| w.to_string()).collect();
            Ok(Report::ok(list.join("\n"), json!({ "degree": degree, "lyndon": list })))
        }
        LyndonCommand::Balanced { degree } => {
            let c = count_balanced_binary_lyndon(*degree);
            Ok(Report::ok(c.to_string(), json!({ "degree": degree, "count": c })))
        }
    }
}

fn kernel(cmd: &KernelCommand) -> Result<Report, Failure> {
    match cmd {
        KernelCommand::PrimitiveDims(AlphabetDegree { alphabet: a, degree }) => {
            let alpha = padded_alphabet(a, *degree)?;
            let expected = a_to_p(&alpha.count_sequence().truncated(*degree));
            let mut rows = Vec::new();
            let mut dims = Vec::new();
            for n in 1..=*degree {
                let d = primitive_space_basis(&alpha, n)?.len();
                rows.push(format!("{n} {d}"));
                dims.push(d);
            }
            let ok = expected.to_counts().as_deref() == Some(dims.as_slice());
            Ok(Report {
                yes: ok,
                text: rows.join("\n"),
                json: json!({ "dims": dims, "expected": expected, "agree": ok }),
            })
        }
        KernelCommand::EulerIdempotent { alphabet: a, poly: p } => {
            let alpha = alphabet(a)?;
            let e = eulerian_idempotent(&poly(p, &alpha)?)?;
            Ok(Report::ok(e.to_string(), json!({ "result": e.to_string() })))
        }
        KernelCommand::VerifyOpg { alphabet: a, degree, elems } => {
            let alpha = padded_alphabet(a, *degree)?;
            let parsed = elems.iter().map(|e| poly(e, &alpha)).collect::<Result<Vec<_>, _>>()?;
            let gens = OrderedPrimGenSet::from_elements(&alpha, parsed, *degree)?;
            let v = verify_opg(&gens, *degree)?;
            let text = match &v.failure {
                None => format!("valid up to degree {}", v.checked_degree),
                Some(f) => format!("invalid: {f}"),
            };
            Ok(Report { yes: v.valid, text, json: serde_json::to_value(&v).expect("serializes") })
        }
        KernelCommand::Surjection { host_alphabet, target_alphabet, host_gens, target_gens, degree, input } => {
            let ha = padded_alphabet(host_alphabet, *degree)?;
            let ka = padded_alphabet(target_alphabet, *degree)?;
            let host = generating_set(&ha, host_gens, *degree)?;
            let target = generating_set(&ka, target_gens, *degree)?;
            let f = Surjection::new(&host, &target)?;
            let image = f.apply(&poly(input, &ha)?)?;
            let letters: Vec<String> = ha
                .letters()
                .into_iter()
                .filter_map(|l| f.map().image_of(l).map(|img| format!("{l} -> {img}")))
                .collect();
            Ok(Report::ok(
                format!("{}\nimage: {image}", letters.join("\n")),
                json!({ "letters": letters, "image": image.to_string() }),
            ))
        }
        KernelCommand::Embed { host, sub, degree } => {
            let host = padded_alphabet(host, *degree)?.count_sequence();
            let sub = padded_alphabet(sub, *degree)?.count_sequence();
            let e = embed_subalgebra(&host, &sub, *degree)?;
            let gens: Vec<Value> = e
                .generators
                .elements()
                .map(|(d, g)| json!({ "degree": d, "element": g.to_string() }))
                .collect();
            Ok(Report::ok(
                format!("{}dims: {}", e.generators, e.dims),
                json!({ "generators": gens, "dims": e.dims, "lie_dims": e.lie_dims }),
            ))
        }
    }
}

fn oeis(cli: &Cli, cmd: &OeisCommand) -> Result<Report, Failure> {
    let client = match &cli.cache_dir {
        Some(dir) => OeisClient::new(dir),
        None => OeisClient::from_env(),
    }
    .offline(cli.offline);
    match cmd {
        OeisCommand::Fetch { id, terms } => {
            let e = client.fetch(id, *terms)?;
            Ok(Report::ok(
                format!(
                    "{} (offset {}, from {})\nraw: {}\naligned: {}",
                    e.a_number,
                    e.offset,
                    e.source,
                    csv(&e.raw),
                    csv(&e.aligned)
                ),
                serde_json::to_value(&e).expect("serializes"),
            ))
        }
        OeisCommand::Identify { seq: s } => {
            let matches = client.identify(&seq(s)?)?;
            let text: Vec<String> = matches
                .iter()
                .map(|m| format!("{} from index {} (shift {})", m.a_number, m.start_index, m.shift))
                .collect();
            Ok(Report {
                yes: !matches.is_empty(),
                text: if text.is_empty() { "no local match".into() } else { text.join("\n") },
                json: json!({ "matches": matches }),
            })
        }
    }
}

/// Like `println!`, but a closed pipe (`hopfseq ... | head`) is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                emit(&serde_json::to_string_pretty(&report.json).expect("serializes"));
            } else {
                emit(&report.text);
            }
            ExitCode::from(if report.yes { 0 } else { 1 })
        }
        Err(f) => {
            if cli.json {
                emit(
                    &serde_json::to_string_pretty(&json!({ "error": f.kind, "message": f.message }))
                        .expect("serializes"),
                );
            }
            eprintln!("error: {}: {}", f.kind, f.message);
            ExitCode::from(f.code)
        }
    }
}
