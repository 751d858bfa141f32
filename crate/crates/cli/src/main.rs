//! `bergman`: command-line access to Bergman complexes, minimum-weight bases
//! and the ultrametric / equidistant-tree correspondence.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bergman_core::bergman::{
    coarse_cells_of, export_coarse, export_complex, lattice_json, lattice_of_flats, mobius_hat,
    order_complex_fine, ExportFormat,
};
use bergman_core::json::{
    bases_json, distance_json, parse_distance_matrix, parse_matroid, parse_tree, parse_weights,
    to_text, tree_json,
};
use bergman_core::treespace::{is_ultrametric, tree_to_ultrametric, ultrametric_to_tree};
use bergman_core::verify::{self, Options, Suite};
use bergman_core::weights::{in_bergman_fan, min_bases_greedy, WeightVector};
use bergman_core::{Error, Matroid};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "bergman",
    version,
    about = "Bergman complexes of matroids and equidistant tree space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Input JSON file; reads stdin when omitted or `-`.
    input: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Newick,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice of flats with cover relations.
    Flats {
        #[command(flatten)]
        io: Io,
    },
    /// Fine subdivision: the order complex of the proper part of the lattice of flats.
    Fine {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Coarse subdivision: valid flags grouped by their minimum-basis matroid.
    Coarse {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Möbius number (-1)^r mu(0, 1) of the lattice of flats.
    Mobius {
        #[command(flatten)]
        io: Io,
    },
    /// All minimum-weight bases for a weight vector.
    Minbases {
        #[command(flatten)]
        io: Io,
        /// Weight vector: a JSON array, or a path to a file holding one.
        #[arg(long)]
        weights: String,
    },
    /// Whether a weight vector lies in the Bergman fan.
    Member {
        #[command(flatten)]
        io: Io,
        /// Weight vector: a JSON array, or a path to a file holding one.
        #[arg(long)]
        weights: String,
    },
    /// Ultrametric of an equidistant tree.
    TreeToDist {
        #[command(flatten)]
        io: Io,
    },
    /// Equidistant tree of an ultrametric.
    DistToTree {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Decimal places for Newick branch lengths (lossy).
        #[arg(long, default_value_t = 6)]
        places: usize,
    },
    /// Whether a distance matrix is an ultrametric.
    CheckUltrametric {
        #[command(flatten)]
        io: Io,
    },
    /// Run property suites and report pass/fail per check as JSON.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Core(Error),
    Io(String),
    SuiteFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidInput(_) => 2,
        Error::NotUltrametric { .. } | Error::Inconsistent(_) => 1,
        Error::ResourceLimit(_) => 3,
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)
            .map_err(|e| Failure::Io(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Io(format!("cannot read stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn read_weights(arg: &str) -> Result<WeightVector, Failure> {
    if arg.trim_start().starts_with('[') {
        Ok(parse_weights(arg)?)
    } else {
        Ok(parse_weights(&read_input(Some(Path::new(arg)))?)?)
    }
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("cannot write stdout: {e}"))),
    }
}

fn matroid(io: &Io) -> Result<Matroid, Failure> {
    Ok(parse_matroid(&read_input(io.input.as_deref())?)?)
}

fn export_format(format: Format) -> Result<ExportFormat, Failure> {
    match format {
        Format::Json => Ok(ExportFormat::Json),
        Format::Dot => Ok(ExportFormat::Dot),
        Format::Newick => Err(Error::InvalidInput(
            "newick output is only available for dist-to-tree".into(),
        )
        .into()),
    }
}

fn boolean(value: bool) -> String {
    format!("{value}\n")
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Flats { io } => {
            let m = matroid(&io)?;
            write_output(
                io.out.as_deref(),
                &to_text(&lattice_json(&lattice_of_flats(&m)?)),
            )
        }
        Command::Fine { io, format } => {
            let format = export_format(format)?;
            let m = matroid(&io)?;
            write_output(
                io.out.as_deref(),
                &export_complex(&order_complex_fine(&m)?, format)?,
            )
        }
        Command::Coarse { io, format } => {
            let format = export_format(format)?;
            let m = matroid(&io)?;
            let complex = order_complex_fine(&m)?;
            let cells = coarse_cells_of(&m, &complex)?;
            write_output(io.out.as_deref(), &export_coarse(&complex, &cells, format)?)
        }
        Command::Mobius { io } => {
            let m = matroid(&io)?;
            write_output(
                io.out.as_deref(),
                &format!("{}\n", mobius_hat(&lattice_of_flats(&m)?)),
            )
        }
        Command::Minbases { io, weights } => {
            let m = matroid(&io)?;
            let w = read_weights(&weights)?;
            write_output(
                io.out.as_deref(),
                &to_text(&bases_json(&min_bases_greedy(&m, &w)?)),
            )
        }
        Command::Member { io, weights } => {
            let m = matroid(&io)?;
            let w = read_weights(&weights)?;
            write_output(io.out.as_deref(), &boolean(in_bergman_fan(&m, &w)?))
        }
        Command::TreeToDist { io } => {
            let tree = parse_tree(&read_input(io.input.as_deref())?)?;
            write_output(
                io.out.as_deref(),
                &to_text(&distance_json(&tree_to_ultrametric(&tree))),
            )
        }
        Command::DistToTree { io, format, places } => {
            if format == Format::Dot {
                return Err(
                    Error::InvalidInput("dist-to-tree writes json or newick".into()).into(),
                );
            }
            let delta = parse_distance_matrix(&read_input(io.input.as_deref())?)?;
            let tree = ultrametric_to_tree(&delta)?;
            let text = match format {
                Format::Newick => format!("{}\n", tree.to_newick(places)),
                _ => to_text(&tree_json(&tree)),
            };
            write_output(io.out.as_deref(), &text)
        }
        Command::CheckUltrametric { io } => {
            let delta = parse_distance_matrix(&read_input(io.input.as_deref())?)?;
            write_output(io.out.as_deref(), &boolean(is_ultrametric(&delta)))
        }
        Command::Verify {
            suite,
            n,
            max_n,
            samples,
            seed,
            out,
        } => {
            let suites = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>()?]
            };
            let options = Options {
                n,
                max_n,
                samples,
                seed,
            };
            let reports = suites
                .into_iter()
                .map(|s| verify::run(s, &options))
                .collect::<Result<Vec<_>, _>>()?;
            let passed = reports.iter().all(|r| r.passed());
            let value = json!({
                "passed": passed,
                "seed": seed,
                "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            });
            write_output(out.as_deref(), &to_text(&value))?;
            if passed {
                Ok(())
            } else {
                Err(Failure::SuiteFailed)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::SuiteFailed) => {
            eprintln!("error: verification failed");
            ExitCode::from(1)
        }
    }
}
