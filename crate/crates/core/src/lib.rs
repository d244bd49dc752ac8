//! Change-ringing mathematics: permutations of bell positions, the
//! classical methods, the ringing rules, and unicursal generation of
//! permutation groups by Cayley-graph search.

pub mod cli;
pub mod error;
pub mod leads;
pub mod methods;
pub mod notation;
pub mod perm;
pub mod rules;
pub mod unicursal;

pub use error::{Error, Result};
pub use perm::{Parity, Perm, Row};
