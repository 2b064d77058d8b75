use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use lame_core::permgrp::is_prime;

/// Environment variable naming the default catalog file.
pub const CATALOG_ENV: &str = "LAME_ATLAS_CATALOG";
pub const DEFAULT_CATALOG: &str = "data/groups.txt";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Trees of groups with end labels 2,2,2,3 [anchor: normalizer-trees]
    Normalizers {
        /// Largest cyclic or dihedral parameter tried.
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(2..))]
        n_cap: u64,
        /// Largest number of vertices in a tree shape.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        shape_cap: u64,
    },
    /// Four-point Riemann-Hurwitz types per characteristic [anchor: rh-four-point]
    Rh {
        /// Characteristic (0 or a prime); repeatable. Default: 0 and primes up to 97.
        #[arg(long = "p", value_parser = parse_characteristic)]
        p: Vec<u64>,
    },
    /// Quotients of the normalizers onto catalog groups [anchor: classification-by-genus]
    Classify {
        /// Genus to search (5..=8); repeatable. Default: all four.
        #[arg(long, value_parser = clap::value_parser!(u64).range(5..=8))]
        genus: Vec<u64>,
    },
    /// Order 48/72 exclusions, five-Sylow count and lemma checks [anchor: appendix-exclusions]
    Appendix,
    /// Symmetry, bitangents, degenerations and pencils of the quartic family [anchor: quartic-bitangents]
    Quartic,
    /// Degeneration centers of the sextic family [anchor: sextic-degenerations]
    Sextic,
    /// Quotients of the reduction graphs and their double covers [anchor: reduction-graphs]
    Reduction,
    /// Catalog maintenance [anchor: catalog-integrity]
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Every check above
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum CatalogAction {
    /// Record counts, declared orders, pairwise non-isomorphism and Sylow counts
    Verify,
}

#[derive(Debug, Parser)]
#[command(name = "lame-atlas", version, about = "Exact checks for (2,2,2,3) normalizer quotients and their plane curve models")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Group catalog file.
    #[arg(long, global = true, env = CATALOG_ENV)]
    catalog: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

fn parse_characteristic(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if p == 0 || is_prime(p) {
        Ok(p)
    } else {
        Err(format!("{p} is neither 0 nor a prime"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub catalog: PathBuf,
    pub command: Command,
    pub format: Format,
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig { catalog: PathBuf::from(DEFAULT_CATALOG), command, format: Format::Text, threads: None }
    }
}

/// Strict parsing; `Err` carries clap's usage message and exit code.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    Ok(RunConfig {
        catalog: cli.catalog.unwrap_or_else(|| PathBuf::from(DEFAULT_CATALOG)),
        command: cli.command,
        format: cli.format,
        threads: cli.threads.map(|t| t as usize),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_with_catalog() {
        let c = parse_args(["lame-atlas", "classify", "--genus", "6", "--catalog", "data/groups.txt"]).unwrap();
        assert_eq!(c.command, Command::Classify { genus: vec![6] });
        assert_eq!(c.catalog, PathBuf::from("data/groups.txt"));
    }

    #[test]
    fn usage_errors_exit_two() {
        for argv in [
            vec!["lame-atlas", "bogus"],
            vec!["lame-atlas", "classify", "--genus", "9"],
            vec!["lame-atlas", "rh", "--p", "4"],
            vec!["lame-atlas", "quartic", "--frobnicate"],
            vec!["lame-atlas", "normalizers", "--n-cap", "0"],
        ] {
            assert_eq!(parse_args(argv).unwrap_err().exit_code(), 2);
        }
    }

    #[test]
    fn all_json() {
        let c = parse_args(["lame-atlas", "all", "--format", "json"]).unwrap();
        assert_eq!(c.command, Command::All);
        assert_eq!(c.format, Format::Json);
        let c = parse_args(["lame-atlas", "rh", "--p", "2", "--p", "3", "--p", "7"]).unwrap();
        assert_eq!(c.command, Command::Rh { p: vec![2, 3, 7] });
        let c = parse_args(["lame-atlas", "catalog", "verify"]).unwrap();
        assert_eq!(c.command, Command::Catalog { action: CatalogAction::Verify });
    }
}
