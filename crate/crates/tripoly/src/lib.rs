pub mod cli;
pub mod error;
pub mod experiments;
pub mod fastmod;
pub mod geom;
pub mod nearedge;
pub mod oracle;
pub mod poly;
pub mod transform;

pub use error::{Error, Result};
