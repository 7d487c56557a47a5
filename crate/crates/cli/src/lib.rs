//! Command-line frontend and JSON API for `ibox-core`.

pub mod commands;
pub mod config;
pub mod schema;
pub mod server;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::commands::{Output, SeedFormat};
use crate::config::Config;

#[derive(Debug, Parser)]
#[command(name = "ibox", version, about = "i-boxes, admissible chains and their monoidal seeds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List `k i_k t_k` over the window and validate the sequence.
    Sequence {
        #[command(flatten)]
        config: Config,
        #[arg(long)]
        json: bool,
    },
    /// Boxes, envelopes and movable positions of a chain literal `a:LLRL`.
    Chain {
        #[arg(allow_hyphen_values = true)]
        literal: String,
        #[command(flatten)]
        config: Config,
        #[arg(long)]
        json: bool,
    },
    /// Box moves taking one chain to another.
    Connect {
        #[arg(allow_hyphen_values = true)]
        from: String,
        #[arg(allow_hyphen_values = true)]
        to: String,
        /// With --type, each move is classified as permutation or mutation.
        #[command(flatten)]
        config: Config,
        #[arg(long)]
        json: bool,
    },
    /// Seed of a chain (or of the canonical chain of --range) as JSON or DOT.
    Seed {
        #[command(flatten)]
        config: Config,
        #[arg(long, allow_hyphen_values = true)]
        chain: Option<String>,
        /// Vertices to mutate at, in order.
        #[arg(long, value_delimiter = ',')]
        mutate: Vec<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: SeedFormat,
        /// Also write the DOT quiver to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run every check on a range and print a JSON report.
    Verify {
        #[command(flatten)]
        config: Config,
        /// Replace the canonical seed's Λ-matrix with this JSON table.
        #[arg(long)]
        lambda: Option<PathBuf>,
    },
    /// q-character of a KR module, by box or by node and heights.
    Qchar {
        #[command(flatten)]
        config: Config,
        #[arg(long = "box", allow_hyphen_values = true)]
        ibox: Option<String>,
        #[arg(long)]
        node: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<i64>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        json: bool,
    },
    /// Serve the JSON API.
    Serve {
        #[arg(long, default_value = "127.0.0.1")]
        bind: String,
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

pub fn run(cli: Cli) -> anyhow::Result<Output> {
    match cli.command {
        Command::Sequence { config, json } => Ok(commands::sequence(&config.build()?, json)),
        Command::Chain { literal, config, json } => {
            let chain = commands::parse_chain(&literal)?;
            commands::chain_report(&commands::setup_for_chain(&config, &chain)?, &chain, json)
        }
        Command::Connect { from, to, config, json } => {
            let (from, to) = (commands::parse_chain(&from)?, commands::parse_chain(&to)?);
            let setup = match config.type_label {
                Some(_) => Some(commands::setup_for_chain(&config, &from)?),
                None => None,
            };
            commands::connect(setup.as_ref(), &from, &to, json)
        }
        Command::Seed { config, chain, mutate, format, dot } => {
            let chain = chain.as_deref().map(commands::parse_chain).transpose()?;
            let setup = match &chain {
                Some(c) => commands::setup_for_chain(&config, c)?,
                None => config.build()?,
            };
            commands::seed(&setup, chain.as_ref(), &mutate, format, dot.as_deref())
        }
        Command::Verify { config, lambda } => commands::verify(&config.build()?, lambda.as_deref()),
        Command::Qchar { config, ibox, node, t, count, json } => {
            let setup = config.build()?;
            let desc = commands::kr_descriptor(&setup, ibox.as_deref(), node, t, count)?;
            commands::qchar(&setup, &desc, json)
        }
        Command::Serve { bind, port } => {
            let runtime = tokio::runtime::Runtime::new()?;
            runtime.block_on(server::serve(&bind, port))?;
            Ok(Output { text: String::new(), success: true })
        }
    }
}
