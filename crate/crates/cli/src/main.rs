use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tempered_atlas_cli::{
    cmd_catalog, cmd_classify, cmd_figure, cmd_krep, cmd_match, cmd_validate, CmdResult, Direction, FigureFormat,
    Format, KrepQuery,
};

/// Tempered representations with real infinitesimal character, indexed by
/// genuine K-types.
#[derive(Parser)]
#[command(name = "tempered-atlas", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List built-in groups, or print one as a descriptor file.
    Catalog { name: Option<String> },
    /// Check a descriptor file.
    Validate { path: PathBuf },
    /// All components with |kappa| <= radius.
    Classify {
        group: String,
        #[arg(long)]
        radius: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
    /// Component of a weight: forward takes kappa, inverse a minimal K-type.
    Match {
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, value_enum, default_value_t = DirectionArg::Inverse)]
        direction: DirectionArg,
    },
    /// Grid of minimal K-types (m, n) over a box.
    Figure {
        group: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-6..6")]
        m_range: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-6..6")]
        n_range: String,
        #[arg(long, value_enum, default_value_t = FigureFormatArg::Text)]
        format: FigureFormatArg,
    },
    /// Finite-dimensional K-representations.
    Krep {
        group: String,
        #[command(subcommand)]
        query: KrepCommand,
    },
}

#[derive(Subcommand)]
enum KrepCommand {
    /// Weyl dimension.
    Dim {
        #[arg(allow_hyphen_values = true)]
        hw: String,
    },
    /// Weight multiplicities.
    Weights {
        #[arg(allow_hyphen_values = true)]
        hw: String,
    },
    /// Irreducible constituents of a tensor product.
    Tensor {
        #[arg(allow_hyphen_values = true)]
        hw1: String,
        #[arg(allow_hyphen_values = true)]
        hw2: String,
    },
    /// Weights of the spin module.
    Spin,
    /// Multiplicity of tau in V tensor spin.
    Diracmult {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Forward,
    Inverse,
}

#[derive(Clone, Copy, ValueEnum)]
enum FigureFormatArg {
    Text,
    Csv,
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Catalog { name } => cmd_catalog(name.as_deref()),
        Command::Validate { path } => cmd_validate(&path),
        Command::Classify { group, radius, format } => {
            let format = match format {
                FormatArg::Table => Format::Table,
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            };
            cmd_classify(&group, &radius, format)
        }
        Command::Match { group, mu, direction } => {
            let direction = match direction {
                DirectionArg::Forward => Direction::Forward,
                DirectionArg::Inverse => Direction::Inverse,
            };
            cmd_match(&group, &mu, direction)
        }
        Command::Figure { group, m_range, n_range, format } => {
            let format = match format {
                FigureFormatArg::Text => FigureFormat::Text,
                FigureFormatArg::Csv => FigureFormat::Csv,
            };
            cmd_figure(&group, &m_range, &n_range, format)
        }
        Command::Krep { group, query } => {
            let query = match query {
                KrepCommand::Dim { hw } => KrepQuery::Dim(hw),
                KrepCommand::Weights { hw } => KrepQuery::Weights(hw),
                KrepCommand::Tensor { hw1, hw2 } => KrepQuery::Tensor(hw1, hw2),
                KrepCommand::Spin => KrepQuery::Spin,
                KrepCommand::Diracmult { tau, v } => KrepQuery::DiracMult { tau, v },
            };
            cmd_krep(&group, &query)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
