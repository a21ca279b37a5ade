//! Command-line front end for `lascoux-core`: argument parsing, output
//! formatting, the persistent ψ cache and multi-threaded suite execution.

pub mod app;
pub mod cache;
pub mod output;
pub mod shared;

pub use app::{run, run_with, Cli};
pub use cache::{CacheError, PsiCache};
pub use shared::SharedPsiTable;
