pub mod cli;
pub mod composite;
pub mod error;
pub mod exactnum;
pub mod gcdengine;
pub mod ideals;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod ringdesc;
pub mod spectrum;

pub use error::{Error, Result};
