//! File formats, reports, a matrix-level oracle and the `ginv` command line
//! for the tensor generalized inverses in `ginv-core`.

pub mod cli;
pub mod examples;
pub mod io;
pub mod oracle;
pub mod report;

pub use cli::run;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Io(#[from] io::IoError),
    #[error(transparent)]
    Core(#[from] ginv_core::Error),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
}
