use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polydual::fixtures::Case;
use polydual::newton::parse_polynomial;
use polydual::polytope::io::parse_polytope;
use polydual::report::{build_report, TargetSelection, Verdict, VerifyOptions};
use polydual::search::{segment_census, EmbeddingMode};
use polydual::{
    enumerate_intermediate_reflexive, find_unimodular_embedding, is_reflexive, kernel_basis,
    newton_polytope, polar_dual, weight_polytope, Error, LatticeBasis, LatticePolytope,
    SandwichProblem, WeightSystem,
};

mod render;

use render::Conventions;

#[derive(Parser)]
#[command(
    name = "polydual",
    version,
    about = "Exact lattice-polytope duality checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisChoice {
    /// The printed basis for a shipped weight system
    Paper,
    /// Hermite normal form basis of the kernel lattice
    Canonical,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum ConventionArg {
    Total,
    Interior,
    #[default]
    Both,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum TargetArg {
    Statement,
    Proof,
    #[default]
    Both,
}

#[derive(Args)]
struct Output {
    /// Also write machine-readable output to this path
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    convention: ConventionArg,
}

/// Where a polytope comes from: a file, or a weight system (plus polynomial).
#[derive(Args)]
struct Source {
    /// Polytope file (JSON or one point per line)
    #[arg(long, value_name = "PATH", conflicts_with_all = ["weights", "poly"])]
    file: Option<PathBuf>,
    /// Weight system, e.g. 2,3,7,9
    #[arg(long)]
    weights: Option<String>,
    /// Polynomial whose Newton polytope to use (requires --weights)
    #[arg(long, requires = "weights")]
    poly: Option<String>,
    #[arg(long, value_enum, default_value = "canonical")]
    basis: BasisChoice,
}

#[derive(Subcommand)]
enum Command {
    /// Weight polytope of a weighted projective 3-space
    Polytope {
        weights: String,
        #[arg(long, value_enum, default_value = "canonical")]
        basis: BasisChoice,
        #[command(flatten)]
        out: Output,
    },
    /// Newton polytope of a weighted-homogeneous polynomial
    Newton {
        polynomial: String,
        #[arg(long)]
        weights: String,
        #[arg(long, value_enum, default_value = "canonical")]
        basis: BasisChoice,
        #[command(flatten)]
        out: Output,
    },
    /// Polar dual of a polytope
    Dual {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Reflexivity verdict with witness
    Reflexive {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Reflexive polytopes between a lower and an upper polytope
    Enumerate {
        /// Use the Newton and weight polytopes of a shipped case
        #[arg(long, conflicts_with_all = ["lower", "upper"])]
        case: Option<String>,
        #[arg(long, requires = "upper")]
        lower: Option<PathBuf>,
        #[arg(long, requires = "lower")]
        upper: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Longest lattice segments inside a polytope
    Census {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Search for a unimodular map of one polytope into another
    Embed {
        #[arg(long)]
        candidate: PathBuf,
        #[arg(long)]
        target: PathBuf,
        /// Dualize the candidate before searching
        #[arg(long)]
        dual: bool,
        /// Allow translations
        #[arg(long)]
        affine: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Full duality check for Q16 or S16
    Verify {
        case: String,
        #[arg(long, value_enum, default_value_t)]
        target: TargetArg,
        /// Allow translations in the embedding search
        #[arg(long)]
        affine: bool,
        #[command(flatten)]
        out: Output,
    },
}

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_FIXTURE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;
const EXIT_VERDICT: u8 = 5;

enum Failure {
    Lib(Error),
    Io(String),
    Verdict(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. }
        | Error::DuplicateMonomial(_)
        | Error::InvalidWeights { .. }
        | Error::UnknownCase(_)
        | Error::Format(_)
        | Error::WrongDegree { .. }
        | Error::WrongArity(_) => EXIT_PARSE,
        Error::FixtureMismatch { .. } => EXIT_FIXTURE,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_FAILURE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
        Err(Failure::Verdict(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_VERDICT)
        }
    }
}

fn basis_for(w: &WeightSystem, choice: BasisChoice) -> Result<LatticeBasis, Failure> {
    match choice {
        BasisChoice::Canonical => Ok(kernel_basis(w)?),
        BasisChoice::Paper => Case::ALL
            .iter()
            .map(|c| c.fixture())
            .find(|f| f.weights == *w)
            .map(|f| f.lattice_basis())
            .transpose()?
            .ok_or_else(|| {
                Failure::Io(format!(
                    "no printed basis ships for weight system {w}; use --basis canonical"
                ))
            }),
    }
}

fn read_polytope(path: &PathBuf) -> Result<LatticePolytope, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(parse_polytope(&text)?)
}

fn load(source: &Source) -> Result<LatticePolytope, Failure> {
    if let Some(path) = &source.file {
        return read_polytope(path);
    }
    let Some(weights) = &source.weights else {
        return Err(Failure::Io("give either --file or --weights".into()));
    };
    let w: WeightSystem = weights.parse()?;
    let b = basis_for(&w, source.basis)?;
    match &source.poly {
        Some(text) => Ok(newton_polytope(&parse_polynomial(text)?, &w, &b)?),
        None => Ok(weight_polytope(&w, &b)?),
    }
}

fn write_json<T: serde::Serialize>(out: &Output, value: &T) -> Result<(), Failure> {
    if let Some(path) = &out.json {
        let mut text = serde_json::to_string_pretty(value).expect("serializable");
        text.push('\n');
        fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn conventions(out: &Output) -> Conventions {
    match out.convention {
        ConventionArg::Total => Conventions::Total,
        ConventionArg::Interior => Conventions::Interior,
        ConventionArg::Both => Conventions::Both,
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Polytope {
            weights,
            basis,
            out,
        } => {
            let w: WeightSystem = weights.parse()?;
            let b = basis_for(&w, basis)?;
            let p = weight_polytope(&w, &b)?;
            println!("weight system {w}");
            print!("{}", render::basis(&b));
            print!("{}", render::polytope(&p, conventions(&out)));
            write_json(&out, &p)
        }
        Command::Newton {
            polynomial,
            weights,
            basis,
            out,
        } => {
            let w: WeightSystem = weights.parse()?;
            let b = basis_for(&w, basis)?;
            let f = parse_polynomial(&polynomial)?;
            let p = newton_polytope(&f, &w, &b)?;
            println!("polynomial {f}");
            println!("weight system {w}");
            print!("{}", render::polytope(&p, conventions(&out)));
            write_json(&out, &p)
        }
        Command::Dual { source, out } => {
            let p = load(&source)?;
            let d = polar_dual(&p)?;
            print!("{}", render::rational_polytope(&d));
            write_json(&out, &d)
        }
        Command::Reflexive { source, out } => {
            let p = load(&source)?;
            let v = is_reflexive(&p);
            println!("{}", render::verdict(&v));
            println!("unit facet offsets: {}", p.has_unit_offsets());
            write_json(&out, &v)
        }
        Command::Enumerate {
            case,
            lower,
            upper,
            out,
        } => {
            let prob = match (case, lower, upper) {
                (Some(c), _, _) => {
                    let fx = c.parse::<Case>()?.fixture();
                    let b = fx.lattice_basis()?;
                    let f = parse_polynomial(fx.projectivisation)?;
                    SandwichProblem::new(
                        newton_polytope(&f, &fx.weights, &b)?,
                        weight_polytope(&fx.weights, &b)?,
                    )?
                }
                (None, Some(l), Some(u)) => {
                    SandwichProblem::new(read_polytope(&l)?, read_polytope(&u)?)?
                }
                _ => {
                    return Err(Failure::Io(
                        "give --case or both --lower and --upper".into(),
                    ))
                }
            };
            let found = enumerate_intermediate_reflexive(&prob)?;
            println!("{} reflexive intermediate polytopes", found.len());
            for (i, p) in found.iter().enumerate() {
                println!(
                    "  [{i}] {} lattice points, vertices {}",
                    p.lattice_points().len(),
                    render::points(p.vertices())
                );
            }
            write_json(&out, &found)
        }
        Command::Census { source, out } => {
            let p = load(&source)?;
            let c = segment_census(&p);
            print!("{}", render::census(&c, conventions(&out)));
            write_json(&out, &c)
        }
        Command::Embed {
            candidate,
            target,
            dual,
            affine,
            out,
        } => {
            let mut q = read_polytope(&candidate)?;
            if dual {
                q = polar_dual(&q)?.to_lattice().ok_or_else(|| {
                    Failure::Io("dual of the candidate is not a lattice polytope".into())
                })?;
            }
            let p = read_polytope(&target)?;
            let mode = if affine {
                EmbeddingMode::Affine
            } else {
                EmbeddingMode::OriginFixing
            };
            let w = find_unimodular_embedding(&q, &p, mode)?;
            match &w {
                Some(w) => print!("{}", render::witness(w)),
                None => println!("exhausted: none"),
            }
            write_json(&out, &w)
        }
        Command::Verify {
            case,
            target,
            affine,
            out,
        } => {
            let case: Case = case.parse()?;
            let options = VerifyOptions {
                targets: match target {
                    TargetArg::Statement => TargetSelection::Statement,
                    TargetArg::Proof => TargetSelection::Proof,
                    TargetArg::Both => TargetSelection::Both,
                },
                mode: if affine {
                    EmbeddingMode::Affine
                } else {
                    EmbeddingMode::OriginFixing
                },
            };
            let report = build_report(case, options)?;
            print!("{}", render::report(&report, conventions(&out)));
            write_json(&out, &report)?;
            let failed = report.failed_checks();
            if !failed.is_empty() {
                let e = Error::FixtureMismatch {
                    what: failed
                        .iter()
                        .map(|c| c.name.as_str())
                        .collect::<Vec<_>>()
                        .join("; "),
                    expected: failed
                        .iter()
                        .map(|c| c.expected.as_str())
                        .collect::<Vec<_>>()
                        .join("; "),
                    computed: failed
                        .iter()
                        .map(|c| c.computed.as_str())
                        .collect::<Vec<_>>()
                        .join("; "),
                };
                return Err(e.into());
            }
            if report.verdict != Verdict::NoDuality {
                return Err(Failure::Verdict(format!(
                    "verdict for {case} is \"{}\", contradicting the expected \"no duality\"",
                    report.verdict
                )));
            }
            Ok(())
        }
    }
}
