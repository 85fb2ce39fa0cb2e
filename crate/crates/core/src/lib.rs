#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod compat;
pub mod endo;
pub mod error;
pub mod oracle;
pub mod quiver;
pub mod sweep;
pub mod tilting;
pub mod tree;
pub mod two_term;

pub use error::{Error, Result};
