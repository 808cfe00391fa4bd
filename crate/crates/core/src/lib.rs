pub mod cli;
pub mod error;
pub mod exactalg;
pub mod flags;
pub mod formulas;
pub mod oracles;
pub mod parse;
pub mod polytope;
pub mod residue;
pub mod symbol;
pub mod verify;

pub use error::{Error, Result};
