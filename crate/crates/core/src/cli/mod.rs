//! The `monideal` command line.
//!
//! Exit codes: 0 success, 1 a checked property fails, 2 input error, 3
//! resource cap hit or unstable generic initial ideal. Errors are printed to
//! stderr as a single `error[<class>]: <message>` line.

mod verify;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

pub use verify::{fixture_components, verify_fixture, verify_paper, CheckResult, PaperFixture, VerifyReport};

use crate::error::Error;
use crate::groebner::{buchberger_with, gin_with, GinOptions, GroebnerOptions, IdealGens};
use crate::monoideal::{
    associated_primes, check_theorem, is_borel_fixed, primary_decomposition,
    saturated_chain_property, MonomialIdeal, TheoremStatus,
};
use crate::poly::{Field, MonomialOrder, VarContext};
use crate::textio::{print_canonical, IdealFile, OutputFormat, Render};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "monideal", version, about = "Gröbner bases, initial ideals and associated primes of monomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Gröbner basis of the ideal.
    Gb(Common),
    /// Minimal generators of the initial ideal.
    Initial(Common),
    /// Borel-fixedness of the initial ideal (elementary-move criterion).
    Borel(Common),
    /// Irreducible components of the initial ideal, grouped by radical.
    Decomp {
        #[command(flatten)]
        common: Common,
        /// Intersect components with the same radical into one primary ideal.
        #[arg(long)]
        merge: bool,
    },
    /// Associated primes of the initial ideal.
    Ass(Common),
    /// Saturated chain property of the initial ideal.
    Chains(Common),
    /// Generic initial ideal via random coordinate changes.
    Gin(Common),
    /// Hypotheses and conclusion of the dimension-two theorem on Borel-fixed
    /// initial ideals.
    CheckTheorem(Common),
    /// Re-run the substituted toric ideal counterexample from embedded data.
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Ideal file, or `-` for stdin.
    pub input: String,
    /// Monomial order (lex, grlex, grevlex); overrides the file header.
    #[arg(long)]
    pub order: Option<MonomialOrder>,
    /// Coefficient field (`Q` or `Fp:<prime>`); overrides the file header.
    #[arg(long)]
    pub field: Option<Field>,
    #[arg(long)]
    pub json: bool,
    /// Seed for random coordinate changes.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of independent random changes that must agree.
    #[arg(long, default_value_t = 2)]
    pub trials: usize,
    /// Abort Buchberger's algorithm after this many critical pairs.
    #[arg(long)]
    pub max_pairs: Option<usize>,
    /// Abort when a basis element exceeds this degree.
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Analyse the generic initial ideal instead of the initial ideal.
    #[arg(long)]
    pub via_gin: bool,
}

impl Common {
    fn format(&self) -> OutputFormat {
        if self.json {
            OutputFormat::Json
        } else {
            OutputFormat::Text
        }
    }

    fn groebner(&self) -> GroebnerOptions {
        GroebnerOptions {
            max_pairs: self.max_pairs,
            max_degree: self.max_degree,
        }
    }

    fn gin(&self) -> GinOptions {
        GinOptions {
            seed: self.seed,
            trials: self.trials,
            groebner: self.groebner(),
            ..GinOptions::default()
        }
    }
}

fn error_class(e: &Error) -> (&'static str, i32) {
    match e {
        Error::Resource(_) => ("resource", EXIT_RESOURCE),
        Error::UnstableGin { .. } => ("unstable", EXIT_RESOURCE),
        _ => ("input", EXIT_INPUT),
    }
}

struct Loaded {
    ctx: Arc<VarContext>,
    order: MonomialOrder,
    ideal: IdealGens,
}

fn load(common: &Common, stdin: &mut dyn Read) -> Result<Loaded, Error> {
    let text = if common.input == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Error::InvalidInput(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&common.input)
            .map_err(|e| Error::InvalidInput(format!("reading {}: {e}", common.input)))?
    };
    let file = IdealFile::parse(&text)?;
    let order = common.order.unwrap_or(file.order);
    let ideal = file.ideal(Some(order), common.field)?;
    Ok(Loaded {
        ctx: ideal.context().clone(),
        order,
        ideal,
    })
}

/// The monomial ideal the analysis commands work on: the initial ideal of
/// the input (the input itself when it is monomial), or its generic initial
/// ideal with `--via-gin`.
fn monomial_input(common: &Common, loaded: &Loaded) -> Result<MonomialIdeal, Error> {
    if common.via_gin {
        gin_with(&loaded.ideal, loaded.order, &common.gin())
    } else {
        Ok(buchberger_with(&loaded.ideal, loaded.order, &common.groebner())?.initial_ideal())
    }
}

fn emit<T: Render + ?Sized>(out: &mut dyn Write, value: &T, ctx: &VarContext, format: OutputFormat) {
    let mut s = print_canonical(value, ctx, format);
    if !s.ends_with('\n') {
        s.push('\n');
    }
    let _ = out.write_all(s.as_bytes());
}

fn execute(command: &Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Error> {
    if let Command::VerifyPaper { json } = command {
        let report = verify_paper()?;
        let ctx = VarContext::new(&PaperFixture::default().vars)?;
        let format = if *json { OutputFormat::Json } else { OutputFormat::Text };
        emit(out, &report, &ctx, format);
        return Ok(if report.passed() { EXIT_OK } else { EXIT_PROPERTY });
    }
    let common = match command {
        Command::Gb(c)
        | Command::Initial(c)
        | Command::Borel(c)
        | Command::Ass(c)
        | Command::Chains(c)
        | Command::Gin(c)
        | Command::CheckTheorem(c) => c,
        Command::Decomp { common, .. } => common,
        Command::VerifyPaper { .. } => unreachable!(),
    };
    let loaded = load(common, stdin)?;
    let ctx = loaded.ctx.clone();
    let format = common.format();
    match command {
        Command::Gb(_) => {
            let gb = buchberger_with(&loaded.ideal, loaded.order, &common.groebner())?;
            emit(out, &gb, &ctx, format);
            Ok(EXIT_OK)
        }
        Command::Initial(_) => {
            emit(out, &monomial_input(common, &loaded)?, &ctx, format);
            Ok(EXIT_OK)
        }
        Command::Gin(_) => {
            let g = gin_with(&loaded.ideal, loaded.order, &common.gin())?;
            emit(out, &g, &ctx, format);
            Ok(EXIT_OK)
        }
        Command::Borel(_) => {
            let report = is_borel_fixed(&monomial_input(common, &loaded)?);
            emit(out, &report, &ctx, format);
            Ok(if report.fixed { EXIT_OK } else { EXIT_PROPERTY })
        }
        Command::Decomp { merge, .. } => {
            let comps = primary_decomposition(&monomial_input(common, &loaded)?, *merge)?;
            emit(out, comps.as_slice(), &ctx, format);
            Ok(EXIT_OK)
        }
        Command::Ass(_) => {
            let ass = associated_primes(&monomial_input(common, &loaded)?)?;
            emit(out, &ass, &ctx, format);
            Ok(EXIT_OK)
        }
        Command::Chains(_) => {
            let ass = associated_primes(&monomial_input(common, &loaded)?)?;
            let report = saturated_chain_property(&ass);
            emit(out, &report, &ctx, format);
            Ok(if report.holds { EXIT_OK } else { EXIT_PROPERTY })
        }
        Command::CheckTheorem(_) => {
            let report = check_theorem(&monomial_input(common, &loaded)?)?;
            emit(out, &report, &ctx, format);
            Ok(if report.status == TheoremStatus::Violated {
                EXIT_PROPERTY
            } else {
                EXIT_OK
            })
        }
        Command::VerifyPaper { .. } => unreachable!(),
    }
}

/// Parses `args` (including the program name) and runs the command. Never
/// panics on bad input; always returns one of the four exit codes.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let first = rendered
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            let _ = writeln!(err, "error[input]: {first}");
            return EXIT_INPUT;
        }
    };
    match execute(&cli.command, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let (class, code) = error_class(&e);
            let _ = writeln!(err, "error[{class}]: {e}");
            code
        }
    }
}
