//! flowlab — command-line laboratory for the band-rearrangement models.
//!
//! One binary exposes the three descriptions of a band inversion side by
//! side: the boundary Dirac model on a disk (spectra, branch-tracked sweeps,
//! spectral flow), the planar/spherical two-band model (winding numbers,
//! Chern numbers and their jumps), and the molecular rotor model (band
//! counts and the level transfer).  The `report` subcommand runs all three
//! and prints a consistency verdict.
//!
//! Exit codes: 0 on success, 1 for domain errors (invalid channels, windows,
//! unresolvable spectra, I/O failures), 2 for usage errors.  Tabular output
//! is CSV by default and JSON with `--format json`; `--out FILE` redirects
//! it.  `FLOWLAB_THREADS` caps the worker pool used for per-channel sweeps.

pub mod cli;
mod commands;
mod report;
mod svg;
mod table;

use std::ffi::OsString;

use clap::Parser;

/// Parse `argv` and execute the chosen subcommand, returning the process
/// exit code.  Kept in the library so integration tests can drive the full
/// command path in process.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match cli::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // clap routes --help/--version to stdout and errors to stderr.
            let _ = err.print();
            return err.exit_code();
        }
    };
    if let Err(message) = configure_threads() {
        eprintln!("flowlab: {message}");
        return 2;
    }
    match commands::dispatch(&cli.command) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("flowlab: error: {err:#}");
            1
        }
    }
}

/// Cap the global worker pool from `FLOWLAB_THREADS` (a positive integer).
/// An unset or empty variable keeps the library default; anything else that
/// fails to parse is a usage error.  Installing the pool twice is harmless —
/// the first installation wins — so `run` may be called repeatedly in one
/// process.
fn configure_threads() -> Result<(), String> {
    let Some(raw) = std::env::var_os("FLOWLAB_THREADS") else {
        return Ok(());
    };
    let raw = raw.to_string_lossy();
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Ok(());
    }
    let threads: usize = trimmed
        .parse()
        .map_err(|_| format!("FLOWLAB_THREADS must be a positive integer, got {trimmed:?}"))?;
    if threads == 0 {
        return Err("FLOWLAB_THREADS must be a positive integer, got \"0\"".to_string());
    }
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

// ============================================================================
// Tests
// ============================================================================
