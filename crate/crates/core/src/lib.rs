pub mod asymptotics;
pub mod characters;
pub mod cli;
pub mod error;
pub mod gl;
pub mod hsp;
pub mod numeric;
pub mod partition;
pub mod rng;
mod serde_util;
pub mod series;
pub mod walk;

pub use error::{Error, Result};
pub use partition::Partition;
