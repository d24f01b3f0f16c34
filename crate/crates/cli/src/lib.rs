//! File formats, rendering and the command-line front end for `posetrep-core`.

pub mod cli;
pub mod commands;
pub mod format;
pub mod render;

pub use format::{parse_poset, write_poset, ParseError};
