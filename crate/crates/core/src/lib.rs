pub mod biext;
pub mod cli;
pub mod curve;
pub mod error;
pub mod ff;
pub mod idele;
pub mod parse;
pub mod selftest;
pub mod shadow;
pub mod tame;
pub mod weil;

pub use error::{Error, Result};
