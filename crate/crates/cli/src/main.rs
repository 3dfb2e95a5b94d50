use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use darboux::codec::{CertificateFile, InstanceFile};
use darboux::normal_form::{
    random_self_adjoint, symplectic_normal_form, verify_certificate, InstanceSpec, Options,
};
use darboux::symplectic::SymplecticSpace;
use darboux::{Error, Field, FieldDescriptor};

const OK: u8 = 0;
const PREDICATE_FALSE: u8 = 1;
const UNSUPPORTED: u8 = 2;
const PARSE: u8 = 3;

/// Symplectic normal forms diag(B, Bᵀ) for self-adjoint matrices.
#[derive(Parser)]
#[command(name = "darboux", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report whether an instance matrix satisfies AᵀΩ = ΩA.
    Check { instance: PathBuf },
    /// Compute and write a normal-form certificate.
    NormalForm {
        instance: PathBuf,
        /// Certificate path; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Seed for randomized polynomial factorization.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Re-check a certificate from scratch.
    Verify { certificate: PathBuf },
    /// Write a seeded random self-adjoint instance.
    Random {
        /// rational | prime:p | ext:p:c0,...,1
        #[arg(long)]
        field: String,
        /// Block spec, e.g. "1:[2,1];2:[1]" or "{1,0,1}:[1]".
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Expected n; must equal the spec's total size.
        #[arg(long)]
        n: Option<usize>,
        /// Instance path; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

/// Failure carrying the process exit code.
struct Failure(u8, String);

type CmdResult = Result<u8, Failure>;

fn parse_failure(e: impl std::fmt::Display) -> Failure {
    Failure(PARSE, e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(PARSE, format!("{}: {e}", path.display())))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure(PARSE, format!("{}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure(PARSE, e.to_string())),
    }
}

fn load_instance(path: &Path) -> Result<(SymplecticSpace, darboux::Mat), Failure> {
    let file = InstanceFile::from_json(&read(path)?).map_err(parse_failure)?;
    file.decode().map_err(parse_failure)
}

fn check(instance: &Path) -> CmdResult {
    let (space, a) = load_instance(instance)?;
    let ok = space.is_self_adjoint(&a).map_err(parse_failure)?;
    println!("self-adjoint: {ok}");
    Ok(if ok { OK } else { PREDICATE_FALSE })
}

fn normal_form(instance: &Path, out: Option<&Path>, seed: u64) -> CmdResult {
    let (space, a) = load_instance(instance)?;
    let cert = symplectic_normal_form(
        &space,
        &a,
        &Options {
            seed,
            ..Options::default()
        },
    )
    .map_err(|e| match e {
        Error::UnsupportedFieldPath => Failure(UNSUPPORTED, e.to_string()),
        other => Failure(PREDICATE_FALSE, other.to_string()),
    })?;
    let report = verify_certificate(&cert);
    let file = CertificateFile::new(&cert, &report).map_err(parse_failure)?;
    write_output(out, &file.to_json())?;
    let spec = cert
        .jordan_spec
        .as_ref()
        .map_or_else(|| "none".to_string(), |s| s.format(&cert.field));
    let summary = format!("case: {}\njordan_spec: {spec}", cert.case);
    if out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(OK)
}

fn verify(certificate: &Path) -> CmdResult {
    let file = CertificateFile::from_json(&read(certificate)?).map_err(parse_failure)?;
    let cert = file.decode().map_err(parse_failure)?;
    let report = verify_certificate(&cert);
    for (name, outcome) in report.entries() {
        println!("{name:<12} {}", outcome.as_str());
    }
    Ok(if report.passed() { OK } else { PREDICATE_FALSE })
}

fn random(field: &str, spec: &str, seed: u64, n: Option<usize>, out: Option<&Path>) -> CmdResult {
    let desc: FieldDescriptor = field.parse().map_err(parse_failure)?;
    let field = Field::from_descriptor(&desc).map_err(parse_failure)?;
    let spec = InstanceSpec::parse(&field, spec).map_err(parse_failure)?;
    let dim = spec.dim();
    if let Some(n) = n {
        if n != dim {
            return Err(Failure(PARSE, format!("spec has total size {dim}, --n is {n}")));
        }
    }
    let space = SymplecticSpace::new(&field, dim).map_err(parse_failure)?;
    let a = random_self_adjoint(&space, seed, &spec).map_err(parse_failure)?;
    let file = InstanceFile::new(&a).map_err(parse_failure)?;
    write_output(out, &file.to_json())?;
    Ok(OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { PARSE } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Check { instance } => check(instance),
        Command::NormalForm { instance, out, seed } => normal_form(instance, out.as_deref(), *seed),
        Command::Verify { certificate } => verify(certificate),
        Command::Random {
            field,
            spec,
            seed,
            n,
            out,
        } => random(field, spec, *seed, *n, out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
