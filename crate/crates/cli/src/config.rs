use std::path::PathBuf;

use traceconst::cauchy::MIN_QUADRATURE;
use traceconst::constants::{MAX_GRID, MIN_GRID};

use crate::error::CliError;
use crate::table::Format;

/// Settings shared by every subcommand.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub output_dir: PathBuf,
    pub a_grid: usize,
    pub s_grid: usize,
    pub quadrature_points: usize,
    pub seed: u64,
    pub format: Format,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        for (name, value, lo) in [
            ("--a-grid", self.a_grid, MIN_GRID),
            ("--s-grid", self.s_grid, MIN_GRID),
            ("--quad", self.quadrature_points, MIN_QUADRATURE),
        ] {
            if !(lo..=MAX_GRID).contains(&value) {
                return Err(CliError::Input(format!("{name} = {value} outside [{lo}, {MAX_GRID}]")));
            }
        }
        std::fs::create_dir_all(&self.output_dir)
            .map_err(|e| CliError::Input(format!("{}: {e}", self.output_dir.display())))
    }
}

/// Reads `TRACECONST_THREADS`; `None` when unset.
pub fn thread_cap() -> Result<Option<usize>, CliError> {
    match std::env::var("TRACECONST_THREADS") {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Input(format!("TRACECONST_THREADS must be a positive integer, got '{v}'"))),
        },
        Err(e) => Err(CliError::Input(format!("TRACECONST_THREADS: {e}"))),
    }
}
