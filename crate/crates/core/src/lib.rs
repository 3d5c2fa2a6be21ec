//! Exact negative-base (−β) expansions and the symbolic dynamics built on them.

pub mod codes;
pub mod error;
pub mod expansion;
pub mod gaps;
pub mod language;
pub mod laps;
pub mod numerics;
pub mod order;
mod poly;
pub mod series;

pub use error::{Error, Result};
