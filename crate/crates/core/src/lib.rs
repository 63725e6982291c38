//! Exact enumeration of Dyck paths and Dyck-path prefixes whose descents
//! have odd length, computed three independent ways: a layered automaton,
//! brute-force enumeration, and kernel-method closed forms built on the
//! small root of the kernel cubic.

pub mod automaton;
pub mod class;
pub mod error;
pub mod kernel;
pub mod oeis;
pub mod oracle;
pub mod series;
pub mod table;
pub mod verify;

pub use class::{Layer, LayerState, PathClass, Step};
pub use error::{AutomatonError, KernelError, OeisError, OracleError, SeriesError};
pub use series::Series;
pub use table::CountTable;

/// Any error raised by this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Oeis(#[from] OeisError),
}
