pub mod algebra;
pub mod classifier;
pub mod error;
pub mod families;
pub mod fibers;
pub mod hyperelliptic;
pub mod local;
pub mod pipelines;

pub use error::{Error, Result};
