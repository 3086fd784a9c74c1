use serde::{Deserialize, Serialize};

use super::jdt::{jdt_rectify, SkewTableau};
use super::rsk::{rsk, RskPair};
use crate::combinatorics::partition::Partition;
use crate::combinatorics::tableau::Tableau;
use crate::combinatorics::word::Word;
use crate::error::{Error, Result};

/// Reverse the word and complement each letter `ℓ ↦ n+1−ℓ`.
pub fn rot_word(w: &Word) -> Word {
    let n = w.alphabet_bound();
    Word::from_parts_unchecked(w.letters().iter().rev().map(|&l| n + 1 - l).collect(), n)
}

/// Rotates `t` by 180° inside the rectangle `λ₁^ℓ` and complements entries `v ↦ n+1−v`.
pub fn rotate180_complement(t: &Tableau, n: u32) -> Result<SkewTableau> {
    let max = t.max_entry();
    if max > n {
        return Err(Error::EntryOutOfRange { entry: max, max: n });
    }
    let shape = t.shape();
    let (l, w) = (shape.len(), shape.part(0));
    let outer = Partition::trimmed(vec![w; l])?;
    let inner = Partition::trimmed((0..l).map(|r| w - shape.part(l - 1 - r)).collect())?;
    let rows = (0..l)
        .map(|r| {
            t.rows()[l - 1 - r]
                .iter()
                .rev()
                .map(|&v| n + 1 - v)
                .collect()
        })
        .collect();
    SkewTableau::new(outer, inner, rows)
}

/// Schützenberger evacuation at alphabet bound `n`.
pub fn evacuate(t: &Tableau, n: u32) -> Result<Tableau> {
    if t.is_empty() {
        return Ok(t.clone());
    }
    Ok(jdt_rectify(&rotate180_complement(t, n)?))
}

/// Evacuation with `n` taken as the largest entry of `t`.
pub fn evacuate_default(t: &Tableau) -> Tableau {
    evacuate(t, t.max_entry()).expect("the maximal entry is in range")
}

/// Both sides of `RSK(Rot(w)) = (EVAC(P(w)), EVAC(Q(w)))`, computed independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotIdentity {
    pub lhs: RskPair,
    pub rhs: RskPair,
}

impl RotIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn rsk_of_rot(w: &Word) -> Result<RotIdentity> {
    let lhs = rsk(&rot_word(w))?;
    let pair = rsk(w)?;
    let rhs = RskPair {
        p: evacuate(&pair.p, w.alphabet_bound())?,
        q: evacuate(&pair.q, w.len() as u32)?,
    };
    Ok(RotIdentity { lhs, rhs })
}
