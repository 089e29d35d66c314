//! Command-line front end. `run` is pure apart from reading `@file`
//! arguments, so the binary and the golden tests share it.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::autos::{Automorphism, AutomorphismRecord, Endomorphism};
use crate::characterize::{self, Check};
use crate::error::{Error, Result};
use crate::families::{
    delta_word, epsilon_word, equal_elements, normalize_zeta, pure_generator, represent, Family, FamilyKind,
    GroupWord, PureGenerator, PureKind,
};
use crate::presentations::{
    builtin_assignment, builtin_presentation, check_assignment, kernel_scan, AssignmentReport,
    PresentationKind,
};
use crate::semidirect::ThetaTable;

#[derive(Debug, Parser)]
#[command(name = "necklace", version, about = "Braid-like groups acting on free groups")]
pub struct Cli {
    /// Print the bare answer instead of JSON.
    #[arg(long, global = true)]
    pub plain: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub family: FamilyKind,
    #[arg(long)]
    pub n: usize,
}

/// Either `--auto` (an automorphism record, inline JSON or `@path`) or
/// `--from-word` with `--family` and `--n`.
#[derive(Debug, Args)]
pub struct MapArgs {
    #[arg(long, conflicts_with = "from_word")]
    pub auto: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["family", "n"])]
    pub from_word: Option<String>,
    #[arg(long)]
    pub family: Option<FamilyKind>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Automorphism record of the representation of a word.
    Eval {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Decide whether two words are the same group element.
    Equal {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Exponent sum of the rotation generator.
    Epsilon {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Rewrite a circular word as `z^k` times a rotation-free tail.
    Normalize {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Run a membership test on an automorphism.
    Member {
        #[arg(long)]
        check: Check,
        #[command(flatten)]
        map: MapArgs,
    },
    /// Find a group word realizing an automorphism.
    Witness {
        #[arg(long)]
        target: WitnessTarget,
        #[command(flatten)]
        map: MapArgs,
    },
    /// Check a built-in presentation against its representation.
    Relations {
        #[arg(long)]
        family: PresentationKind,
        #[arg(long)]
        n: usize,
    },
    /// Enumerate short circular words acting trivially.
    KernelScan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_len: usize,
    },
    /// Decide equality of circular words through the semidirect product.
    OracleEqual {
        #[arg(long)]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// A pure braid or welded generator.
    PureGen {
        #[arg(long)]
        kind: PureKindArg,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum WitnessTarget {
    Braid,
    Welded,
    Necklace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PureKindArg {
    Lambda,
    Delta,
}

#[derive(Serialize)]
struct WitnessOutput {
    family: FamilyKind,
    n: usize,
    word: String,
    verified: bool,
}

#[derive(Serialize)]
struct RelationsOutput<'a> {
    presentation: String,
    n: usize,
    generators: &'a [String],
    #[serde(flatten)]
    report: &'a AssignmentReport,
}

#[derive(Serialize)]
struct PureGenOutput {
    kind: PureKind,
    word: String,
    automorphism: crate::autos::AutomorphismRecord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => 3,
        _ => 2,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::Input(_) => "input",
        Error::RankMismatch { .. } => "rank-mismatch",
        Error::Certification(_) => "certification",
        Error::Internal(_) => "internal",
    }
}

/// Parses `argv` (program name first) and executes the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                stdout: e.render().to_string(),
                code,
            };
        }
    };
    match execute(&cli) {
        Ok(o) => o,
        Err(e) => Outcome {
            stdout: if cli.plain {
                format!("error: {e}\n")
            } else {
                format!("{}\n", json!({"error": error_kind(&e), "message": e.to_string()}))
            },
            code: exit_code(&e),
        },
    }
}

fn emit<T: Serialize>(cli: &Cli, value: &T, plain: impl FnOnce() -> String, code: i32) -> Outcome {
    let stdout = if cli.plain {
        format!("{}\n", plain())
    } else {
        format!("{}\n", serde_json::to_string(value).expect("serializable"))
    };
    Outcome { stdout, code }
}

pub fn parse_group_word(text: &str, kind: FamilyKind, n: usize) -> Result<GroupWord> {
    GroupWord::parse(text, Family::new(kind, n)?)
}

fn read_arg(text: &str) -> Result<String> {
    match text.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| Error::input(format!("cannot read {path}: {e}")))
        }
        None => Ok(text.to_string()),
    }
}

fn load_map(map: &MapArgs) -> Result<Endomorphism> {
    match (&map.auto, &map.from_word, map.family, map.n) {
        (Some(auto), None, _, _) => {
            let record: AutomorphismRecord = serde_json::from_str(&read_arg(auto)?)
                .map_err(|e| Error::input(format!("bad automorphism record: {e}")))?;
            Ok(Automorphism::from_record(&record)?.forward().clone())
        }
        (None, Some(word), Some(kind), Some(n)) => {
            Ok(represent(&parse_group_word(word, kind, n)?).forward().clone())
        }
        _ => Err(Error::input(
            "give either --auto or --from-word with --family and --n",
        )),
    }
}

fn plain_images(e: &Endomorphism) -> String {
    e.images()
        .iter()
        .enumerate()
        .map(|(i, w)| format!("x{} -> {w}", i + 1))
        .collect::<Vec<_>>()
        .join("\n")
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let truth = |b: bool| if b { 0 } else { 1 };
    Ok(match &cli.command {
        Command::Eval { family, word } => {
            let w = parse_group_word(word, family.family, family.n)?;
            let a = represent(&w);
            emit(cli, &a.to_record(), || plain_images(a.forward()), 0)
        }
        Command::Equal { family, left, right } => {
            let u = parse_group_word(left, family.family, family.n)?;
            let v = parse_group_word(right, family.family, family.n)?;
            let eq = equal_elements(&u, &v)?;
            emit(cli, &json!({ "equal": eq }), || eq.to_string(), truth(eq))
        }
        Command::Epsilon { family, word } => {
            let e = epsilon_word(&parse_group_word(word, family.family, family.n)?)?;
            emit(cli, &json!({ "epsilon": e }), || e.to_string(), 0)
        }
        Command::Normalize { family, word } => {
            let (k, tail) = normalize_zeta(&parse_group_word(word, family.family, family.n)?)?;
            let tail = tail.to_string();
            emit(cli, &json!({ "k": k, "tail": tail }), || format!("{k} {tail}"), 0)
        }
        Command::Member { check, map } => {
            let v = characterize::check(*check, &load_map(map)?);
            let label = if v.accepted { "accepted" } else { "rejected" };
            emit(cli, &v, || label.to_string(), truth(v.accepted))
        }
        Command::Witness { target, map } => {
            let phi = load_map(map)?;
            let w = match target {
                WitnessTarget::Braid => characterize::artin_witness(&phi)?,
                WitnessTarget::Welded => characterize::welded_witness(&phi)?,
                WitnessTarget::Necklace => characterize::necklace_witness(&phi)?,
            };
            let out = WitnessOutput {
                family: w.family().kind(),
                n: w.family().n(),
                word: w.to_string(),
                verified: true,
            };
            emit(cli, &out, || out.word.clone(), 0)
        }
        Command::Relations { family, n } => {
            let p = builtin_presentation(*family, *n)?;
            let report = check_assignment(&p, &builtin_assignment(*family, *n)?)?;
            let out = RelationsOutput {
                presentation: family.to_string(),
                n: *n,
                generators: p.generators(),
                report: &report,
            };
            let plain = format!("{}/{}", report.passed, report.relations.len());
            emit(cli, &out, || plain, truth(report.all_pass()))
        }
        Command::KernelScan { n, max_len } => {
            let r = kernel_scan(*n, *max_len)?;
            let plain = format!(
                "scanned {} kernel_hits {} violations {}",
                r.scanned, r.kernel_hits, r.violations
            );
            emit(cli, &r, || plain, truth(r.violations == 0))
        }
        Command::OracleEqual { n, left, right } => {
            let table = ThetaTable::new(*n)?;
            let u = parse_group_word(left, FamilyKind::Circular, *n)?;
            let v = parse_group_word(right, FamilyKind::Circular, *n)?;
            let eq = table.equal(&table.theta(&u)?, &table.theta(&v)?);
            emit(cli, &json!({ "equal": eq }), || eq.to_string(), truth(eq))
        }
        Command::PureGen { kind, i, j, n } => {
            let kind = match kind {
                PureKindArg::Lambda => PureKind::Lambda,
                PureKindArg::Delta => PureKind::Delta,
            };
            let g = pure_generator(kind, *i, *j, *n)?;
            let word = match &g {
                PureGenerator::Lambda(w) => w.clone(),
                PureGenerator::Delta(_) => delta_word(*i, *j, *n)?,
            };
            let out = PureGenOutput {
                kind,
                word: word.to_string(),
                automorphism: g.automorphism().to_record(),
            };
            emit(cli, &out, || out.word.clone(), 0)
        }
    })
}
