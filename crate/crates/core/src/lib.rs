pub mod bijections;
pub mod budget;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod fock;
pub mod ideal;
pub mod poly;
pub mod stdmono;

pub use error::{Error, Result};
