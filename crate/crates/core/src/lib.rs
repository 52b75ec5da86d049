#![allow(clippy::needless_range_loop, clippy::type_complexity, clippy::len_without_is_empty)]

pub mod bqa;
pub mod cluster;
pub mod error;
pub mod exactla;
pub mod models;
pub mod repcat;
pub mod silt2;
pub mod taut;

pub use error::{Error, Result};
