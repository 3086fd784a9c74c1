//! RSK insertion, jeu de taquin, the `Rot` involution on words and evacuation.

pub mod evac;
pub mod jdt;
pub mod rsk;

pub use evac::{
    evacuate, evacuate_default, rot_word, rotate180_complement, rsk_of_rot, RotIdentity,
};
pub use jdt::{jdt_rectify, SkewTableau};
pub use rsk::{insertion_tableau, rsk, rsk_inverse, RskPair};
