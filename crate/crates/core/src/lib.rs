pub mod canon;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod fock;
pub mod hecke;
pub mod linalg;
pub mod multiseg;
pub mod shapes;
pub mod specht;

pub use error::{Error, Result};
