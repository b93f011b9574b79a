//! Command-line front end: graph file formats, JSON reports and parallel
//! verification sweeps over the reductions in `bredux-core`.

pub mod cli;
pub mod io;
pub mod report;
pub mod sweep;

pub use cli::run;
