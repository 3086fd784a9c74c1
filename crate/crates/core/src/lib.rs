//! Crystals of tableaux and their decomposition into quasicrystals indexed by fundamental
//! quasisymmetric functions.

pub mod combinatorics;
pub mod correspondences;
pub mod crystal;
pub mod error;
pub mod export;
pub mod quasicrystal;
pub mod skeleton;
pub mod symfunc;
pub mod verify;

pub use combinatorics::*;
pub use correspondences::*;
pub use crystal::*;
pub use error::{Error, Result};
pub use quasicrystal::*;
pub use skeleton::*;
pub use symfunc::*;
