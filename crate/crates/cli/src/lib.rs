//! Command-line driver: runs the exact checks and reports them as text or JSON.

pub mod checks;
pub mod config;
pub mod report;

use anyhow::{anyhow, Result};

use crate::checks::CatalogState;
use crate::config::{CatalogAction, Command, RunConfig};
use crate::report::VerificationReport;

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Normalizers { .. } => "normalizers",
        Command::Rh { .. } => "rh",
        Command::Classify { .. } => "classify",
        Command::Appendix => "appendix",
        Command::Quartic => "quartic",
        Command::Sextic => "sextic",
        Command::Reduction => "reduction",
        Command::Catalog { action: CatalogAction::Verify } => "catalog verify",
        Command::All => "all",
    }
}

fn execute(cfg: &RunConfig) -> Result<VerificationReport> {
    let mut warnings = Vec::new();
    let mut catalog = || {
        let s = CatalogState::load(&cfg.catalog);
        warnings.extend(s.warning.clone());
        s
    };
    let checks = match &cfg.command {
        Command::Normalizers { n_cap, shape_cap } => checks::normalizers(*n_cap, *shape_cap as usize)?,
        Command::Rh { p } => {
            checks::rh(&if p.is_empty() { checks::default_characteristics() } else { p.clone() })?
        }
        Command::Classify { genus } => {
            let g = if genus.is_empty() { vec![5, 6, 7, 8] } else { genus.clone() };
            checks::classify(&catalog(), &g)?
        }
        Command::Appendix => checks::appendix(&catalog())?,
        Command::Quartic => checks::quartic()?,
        Command::Sextic => checks::sextic()?,
        Command::Reduction => checks::reduction()?,
        Command::Catalog { action: CatalogAction::Verify } => checks::catalog_verify(&catalog()),
        Command::All => {
            let s = catalog();
            let mut v = checks::normalizers(30, 2)?;
            v.extend(checks::rh(&checks::default_characteristics())?);
            v.extend(checks::catalog_verify(&s));
            v.extend(checks::classify(&s, &[5, 6, 7, 8])?);
            v.extend(checks::appendix(&s)?);
            v.extend(checks::quartic()?);
            v.extend(checks::sextic()?);
            v.extend(checks::reduction()?);
            v
        }
    };
    VerificationReport::new(command_name(&cfg.command), checks, warnings).map_err(|e| anyhow!(e))
}

/// Runs the configured command, on a pool of `cfg.threads` workers if given.
pub fn run(cfg: &RunConfig) -> Result<VerificationReport> {
    match cfg.threads {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(|| execute(cfg)),
        None => execute(cfg),
    }
}
