use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::partition::{parse_parts, write_parts, Partition};
use crate::error::{Error, Result};

/// A sequence of positive integers.
///
/// The derived order is lexicographic, with a proper prefix smaller than its extensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "{parts:?} has a zero part"
            )));
        }
        Ok(Composition(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Composition(parts)
    }

    /// Builds the composition of `m` whose descent set (partial sums, excluding `m`) is `set`.
    pub fn from_descent_set(set: &[usize], m: usize) -> Result<Self> {
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &d in set.iter().chain(std::iter::once(&m)) {
            if d <= prev {
                return Err(Error::InvalidComposition(format!(
                    "descent set {set:?} is not strictly increasing inside 1..{m}"
                )));
            }
            parts.push(d - prev);
            prev = d;
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Partial sums `α₁, α₁+α₂, …`, omitting the total.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// The weakly decreasing reordering of the parts.
    pub fn sorted_partition(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_parts_unchecked(parts)
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.parts().to_vec())
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.parts().to_vec())
    }
}

impl TryFrom<&Composition> for Partition {
    type Error = Error;
    fn try_from(c: &Composition) -> Result<Partition> {
        Partition::new(c.0.clone())
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

/// True iff `beta` refines `alpha`, i.e. consecutive blocks of `beta` sum to the parts of `alpha`.
pub fn refines(alpha: &Composition, beta: &Composition) -> bool {
    let mut it = beta.parts().iter();
    for &a in alpha.parts() {
        let mut acc = 0;
        while acc < a {
            match it.next() {
                Some(&b) => acc += b,
                None => return false,
            }
        }
        if acc != a {
            return false;
        }
    }
    it.next().is_none()
}

/// A weight: one count per letter of the alphabet, zeros allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<usize>);

impl WeightVector {
    pub fn zeros(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Deletes zero counts.
    pub fn strip_zeros(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&c| c > 0).collect())
    }

    /// `Σ_j j·γ_j` with 1-indexed letters.
    pub fn moment(&self) -> usize {
        self.0.iter().enumerate().map(|(j, &c)| (j + 1) * c).sum()
    }
}

impl From<&Composition> for WeightVector {
    fn from(c: &Composition) -> Self {
        WeightVector(c.parts().to_vec())
    }
}

impl FromStr for WeightVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(WeightVector(parse_parts(s)?))
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}
