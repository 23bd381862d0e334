use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use springer_points::error::{Error, Result};
use springer_points::rewrite::{normalize_deletion, render_trace, two_column_trace, DeletionSite};
use springer_points::schubert_points::{monomial, schubert_factorization, SchubertPoints};
use springer_points::shapes::{enumerate_row_strict, enumerate_standard, Partition, RowStrictTableau};
use springer_points::springer::{ell_vector, springer_poincare};
use springer_points::verify::{self, Claim, Family, VerificationReport};
use springer_points::weyl::{union_poincare, PoincarePolynomial};

#[derive(Parser)]
#[command(name = "springer-points", version, about = "Schubert points of row-strict tableaux and Springer fiber Betti numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the row-strict or standard tableaux of a shape.
    Enumerate {
        #[arg(long)]
        shape: Partition,
        #[arg(long, value_enum, default_value_t = Kind::RowStrict)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The Schubert point of a tableau.
    SchubertPoint {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        tableau: String,
        /// Also print the monomial of the tableau.
        #[arg(long)]
        monomial: bool,
    },
    /// Poincaré polynomials of the Springer fiber and of the union of Schubert varieties.
    Poincare {
        #[arg(long)]
        shape: Partition,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Erase one letter of a Schubert point and renormalize.
    Delete {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        tableau: String,
        /// Index j of the string w_j.
        #[arg(long)]
        string: usize,
        /// Position of the letter within w_j, counting from 1 on the left.
        #[arg(long)]
        pos: usize,
        /// Draw the box diagrams (at most two columns).
        #[arg(long)]
        trace: bool,
    },
    /// Check one claim for one shape.
    Verify(VerifyArgs),
    /// Polynomial comparison and closure over a family of shapes.
    Scan {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        max_n: usize,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct VerifyArgs {
    #[command(subcommand)]
    dominance: Option<VerifyCommand>,
    #[arg(long)]
    shape: Option<Partition>,
    #[arg(long, value_enum)]
    claim: Option<ClaimArg>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Point set of λ inside the point set of μ for λ ≥ μ.
    Dominance {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        versus: Partition,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    RowStrict,
    Standard,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Springer,
    Schubert,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimArg {
    Theorem1,
    Closure,
    Deletion,
    Maximality,
}

impl From<ClaimArg> for Claim {
    fn from(c: ClaimArg) -> Claim {
        match c {
            ClaimArg::Theorem1 => Claim::Theorem1,
            ClaimArg::Closure => Claim::Closure,
            ClaimArg::Deletion => Claim::Deletion,
            ClaimArg::Maximality => Claim::Maximality,
        }
    }
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Outcome {
    Holds,
    Fails,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Holds) => ExitCode::SUCCESS,
        Ok(Outcome::Fails) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Enumerate { shape, kind, format } => {
            let tableaux = match kind {
                Kind::RowStrict => enumerate_row_strict(&shape),
                Kind::Standard => enumerate_standard(&shape).into_iter().map(Into::into).collect(),
            };
            match format {
                Format::Text => tableaux.iter().for_each(|t| println!("{t}")),
                Format::Json => print_json(&tableaux),
            }
            Ok(Outcome::Holds)
        }
        Command::SchubertPoint { shape, tableau, monomial: with_monomial } => {
            let t = RowStrictTableau::parse_with_shape(&tableau, &shape)?;
            let f = schubert_factorization(&t);
            let w = f.to_permutation();
            println!("factorization: {f}");
            println!("word: {}", f.to_word());
            println!("one-line: {w}");
            println!("length: {}", w.length());
            println!("ell: {}", ell_vector(&t));
            if with_monomial {
                println!("monomial: {}", monomial(&t));
            }
            Ok(Outcome::Holds)
        }
        Command::Poincare { shape, side, format } => {
            let springer = matches!(side, Side::Springer | Side::Both).then(|| springer_poincare(&shape));
            let schubert = matches!(side, Side::Schubert | Side::Both)
                .then(|| union_poincare(SchubertPoints::new(&shape).points()))
                .transpose()?;
            #[derive(Serialize)]
            struct Polys {
                shape: Partition,
                springer: Option<PoincarePolynomial>,
                schubert: Option<PoincarePolynomial>,
            }
            let equal = match (&springer, &schubert) {
                (Some(a), Some(b)) => a == b,
                _ => true,
            };
            match format {
                Format::Text => {
                    if let Some(p) = &springer {
                        println!("springer: {p}");
                    }
                    if let Some(p) = &schubert {
                        println!("schubert: {p}");
                    }
                }
                Format::Json => print_json(&Polys { shape, springer, schubert }),
            }
            Ok(if equal { Outcome::Holds } else { Outcome::Fails })
        }
        Command::Delete { shape, tableau, string, pos, trace } => {
            let t = RowStrictTableau::parse_with_shape(&tableau, &shape)?;
            let site = DeletionSite::new(string, pos);
            let f = schubert_factorization(&t);
            let rewrite = normalize_deletion(&f, site)?;
            println!("start: {f}");
            for (step, state) in rewrite.steps.iter().zip(&rewrite.states) {
                println!(
                    "i={} case {}: star {} -> {}, string length {} -> {}  [{}]",
                    step.i,
                    step.case,
                    step.star_before,
                    step.star_after,
                    step.string_len,
                    step.new_string_len,
                    state.word()
                );
            }
            let w = rewrite.result.to_permutation();
            println!("result: {}", rewrite.result);
            println!("one-line: {w}");
            let found = SchubertPoints::new(&shape).lookup(&w).cloned();
            match &found {
                Some(t) => println!("schubert point of: {t}"),
                None => println!("schubert point of: none"),
            }
            if trace {
                print!("{}", render_trace(&two_column_trace(&t, site)?));
            }
            Ok(if found.is_some() { Outcome::Holds } else { Outcome::Fails })
        }
        Command::Verify(args) => {
            let report = match args.dominance {
                Some(VerifyCommand::Dominance { shape, versus, format }) => {
                    let report = verify::check_dominance(&shape, &versus)?;
                    return Ok(emit(&[report], format));
                }
                None => {
                    let shape = args.shape.ok_or_else(|| Error::Parse("--shape is required".into()))?;
                    let claim = args.claim.ok_or_else(|| Error::Parse("--claim is required".into()))?;
                    verify::check(&shape, claim.into())?
                }
            };
            Ok(emit(&[report], args.format))
        }
        Command::Scan { family, max_n, jobs, format } => {
            if max_n == 0 {
                return Err(Error::Parse("--max-n must be at least 1".into()));
            }
            let reports = verify::scan(family, max_n, jobs)?;
            Ok(emit(&reports, format))
        }
    }
}

fn emit(reports: &[VerificationReport], format: Format) -> Outcome {
    match format {
        Format::Text => reports.iter().for_each(|r| println!("{r}")),
        Format::Json => reports.iter().for_each(|r| println!("{}", r.to_json())),
    }
    if reports.iter().all(VerificationReport::holds) {
        Outcome::Holds
    } else {
        Outcome::Fails
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("values serialize"));
}
