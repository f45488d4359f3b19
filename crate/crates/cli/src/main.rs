//! `quadop`: verdict tables, decompositions and verification suites for
//! quadratic operads with binary generators.

mod commands;
mod report;

use clap::{Parser, Subcommand};
use commands::CliError;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "quadop", version, about = "Exact checks on quadratic operads with binary generators")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Specialize the parameter q to this rational value.
    #[arg(long, global = true, value_name = "RATIONAL", allow_hyphen_values = true)]
    q: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cyclicity, dihedrality and Hopf verdicts (all three when no flag is given).
    Check {
        /// Presentation file or builtin name.
        source: String,
        #[arg(long)]
        cyclic: bool,
        #[arg(long)]
        dihedral: bool,
        #[arg(long)]
        hopf: bool,
    },
    /// The nine-row verdict table.
    Table,
    /// Characters of Γ±(E)(3) and of the relation space.
    Decompose {
        source: Option<String>,
        #[arg(long, conflicts_with = "source")]
        builtin: Option<String>,
    },
    /// Rewrites every symmetry-free generator as a commutative and an anticommutative one.
    Polarize { source: String },
    /// Whether a generator substitution carries the relations of TARGET onto those of SOURCE.
    Iso {
        source: String,
        target: String,
        /// identity, star, sign, or a substitution such as "m(x,y) = c(x,y) + b(x,y)".
        #[arg(long, default_value = "identity")]
        map: String,
    },
    /// Star product on polynomials in x, p versus its LL_{t²} polarization.
    Quantize {
        #[arg(long, default_value = "moyal")]
        example: String,
        #[arg(long, default_value_t = 4)]
        order: usize,
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
    /// Randomized identities for multilinear maps.
    Mlab {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        triples: usize,
        #[arg(long, default_value_t = 50)]
        pairs: usize,
    },
}

fn run(cli: Cli) -> Result<report::Report, CliError> {
    let q = cli.q.as_deref().map(commands::parse_q).transpose()?;
    let q = q.as_ref();
    match cli.command {
        Command::Check {
            source,
            cyclic,
            dihedral,
            hopf,
        } => commands::check(&source, [cyclic, dihedral, hopf], q),
        Command::Table => commands::table(q),
        Command::Decompose { source, builtin } => {
            let src = source
                .or(builtin)
                .ok_or_else(|| CliError::Parse("decompose needs a presentation".into()))?;
            commands::decompose_cmd(&src, q)
        }
        Command::Polarize { source } => commands::polarize(&source, q),
        Command::Iso { source, target, map } => commands::iso(&source, &target, &map, q),
        Command::Quantize { example, order, degree } => commands::quantize(&example, order, degree),
        Command::Mlab { seed, triples, pairs } => commands::mlab(seed, triples, pairs),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(r) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&r).expect("report serializes"));
            } else {
                print!("{}", r.render());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("quadop: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
