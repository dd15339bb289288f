//! File formats, reports and the command-line front end for `discq-core`.

pub mod cli;
pub mod descriptor;
pub mod render;
pub mod report;
