//! Abelian squares, regular Abelian periods and longest common Abelian
//! factors computed directly on run-length encoded strings.
//!
//! Positions are 1-based throughout. Every fast routine has a brute-force
//! counterpart in [`oracles`] that works on plain text.

pub mod bench;
pub mod cli;
pub mod error;
pub mod lcaf;
pub mod oracles;
pub mod periods;
pub mod rle;
pub mod squares;

pub use error::{Error, Result};
pub use lcaf::{find_lcaf, Constraint, LcafMatch, LcafResult};
pub use periods::{find_regular_periods, RegularPeriod};
pub use rle::{AlphabetMap, ParikhVector, RleString};
pub use squares::{find_all_squares, SquareRun};
