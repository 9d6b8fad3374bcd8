//! Library half of the `gnslab` command-line tool: the self-describing
//! document format for semigroups and the JSON / CSV / SVG exporters. The
//! binary in `main.rs` is a thin argument-parsing wrapper over this.

pub mod document;
pub mod export;

use thiserror::Error;

/// Errors surfaced by the command-line layer. All of them map to exit
/// code 2 (bad input or environment); verification failures are not errors
/// but explicit exit-1 outcomes.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] gnslab_core::Error),

    #[error("svg export needs a 2-dimensional document, got dimension {dimension}")]
    UnsupportedDimension { dimension: usize },

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("document parse: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("{0}")]
    Usage(String),
}
