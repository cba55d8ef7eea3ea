//! Library side of the command-line tool: file formats, the parallel solve
//! driver, and table building. The binary in `main.rs` is a thin wrapper.

pub mod formats;
pub mod parallel;
pub mod tables;
