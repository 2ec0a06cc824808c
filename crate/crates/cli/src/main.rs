use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tube_torsion_cli::commands::{self, Caps, Format};
use tube_torsion_cli::{CliError, CliResult};

/// Count, enumerate, verify and draw torsion pairs in cluster tubes.
#[derive(Parser)]
#[command(name = "tubetors", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest rank for the exhaustive subset scan.
    #[arg(long, global = true, default_value_t = 5)]
    brute_cap: usize,

    /// Largest rank for the structured enumeration.
    #[arg(long, global = true, default_value_t = 9)]
    structured_cap: usize,
}

#[derive(Args)]
struct Rank {
    /// Rank of the cluster tube.
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Number of torsion pairs, optionally by triangles, cliques and empty cells.
    Count {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        refined: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Every torsion pair as one JSON record per line.
    Enumerate {
        #[command(flatten)]
        rank: Rank,
    },
    /// Cross-check enumerators, formulas, series and bijections.
    Verify {
        #[command(flatten)]
        rank: Rank,
    },
    /// Cyclic sieving table under the AR translation.
    Sieve {
        #[command(flatten)]
        rank: Rank,
        #[command(flatten)]
        output: Output,
    },
    /// Number of AR-translation orbits of torsion pairs.
    Orbits {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        refined: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Perpendicular category of a periodic diagram.
    Perp {
        /// Diagram JSON; read from --input when absent.
        #[arg(long)]
        diagram: Option<String>,
        /// File holding the diagram JSON, or - for standard input.
        #[arg(long, default_value = "-")]
        input: String,
        /// Expected rank of the diagram.
        #[arg(long)]
        n: Option<usize>,
        /// Test membership of the arc i,j.
        #[arg(long, allow_hyphen_values = true)]
        arc: Option<String>,
        /// List perpendicular orbits of length at most this.
        #[arg(long)]
        max_len: Option<i64>,
        #[command(flatten)]
        output: Output,
    },
    /// Draw a torsion pair on the AR quiver as SVG.
    Render {
        /// File holding the torsion pair JSON, or - for standard input.
        #[arg(long, default_value = "-")]
        pair: String,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<String>,
    },
    /// Coefficients of the polygon series P(z) or of the torsion series.
    Series {
        /// Highest power of z.
        #[arg(long = "series-order", alias = "order", default_value_t = 24)]
        order: usize,
        /// Print 2zP'/(1 - P) instead of P.
        #[arg(long)]
        torsion: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Wing decompositions of finite halves or torsion pairs, line by line.
    Decompose {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Reassemble diagrams or torsion pairs from wing decompositions.
    Compose {
        #[arg(long, default_value = "-")]
        input: String,
    },
}

fn run(cli: Cli, out: &mut dyn Write) -> CliResult {
    let caps = Caps {
        brute: cli.brute_cap,
        structured: cli.structured_cap,
    };
    match cli.command {
        Command::Count { rank, refined, output } => commands::count(out, rank.n, refined, output.format),
        Command::Enumerate { rank } => commands::enumerate(out, rank.n, caps),
        Command::Verify { rank } => commands::verify(out, rank.n, caps),
        Command::Sieve { rank, output } => commands::sieve(out, rank.n, caps, output.format),
        Command::Orbits { rank, refined, output } => {
            commands::orbits(out, rank.n, refined, caps, output.format)
        }
        Command::Perp {
            diagram,
            input,
            n,
            arc,
            max_len,
            output,
        } => {
            let text = match diagram {
                Some(d) => d,
                None => commands::read_input(&input)?,
            };
            let x = commands::parse_diagram(&text)?;
            if let Some(n) = n.filter(|&n| n != x.rank()) {
                return Err(CliError::Input(format!("--n {n} but the diagram has rank {}", x.rank())));
            }
            let arc = arc.as_deref().map(commands::parse_arc).transpose()?;
            commands::perp(out, &x, arc, max_len, output.format)
        }
        Command::Render { pair, out: path } => {
            let input = commands::read_input(&pair)?;
            match path {
                Some(p) => {
                    let mut file = BufWriter::new(File::create(&p)?);
                    commands::render(&mut file, &input)?;
                    file.flush()?;
                    Ok(())
                }
                None => commands::render(out, &input),
            }
        }
        Command::Series { order, torsion, output } => commands::series(out, order, torsion, output.format),
        Command::Decompose { input } => commands::decompose_lines(out, &commands::read_input(&input)?),
        Command::Compose { input } => commands::compose_lines(out, &commands::read_input(&input)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    drop(out);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("tubetors: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
