//! Integer combinations of fundamental quasisymmetric functions or Schur functions.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::combinatorics::composition::Composition;
use crate::combinatorics::partition::Partition;
use crate::error::{Error, Result};

/// Index set of a basis: compositions for `F`, partitions for `s`.
pub trait BasisKey: Clone + Ord + Hash + fmt::Display {
    const SYMBOL: &'static str;
    fn key_parts(&self) -> &[usize];
    fn from_key_parts(parts: Vec<usize>) -> Result<Self>;
    fn degree(&self) -> usize {
        self.key_parts().iter().sum()
    }
}

impl BasisKey for Composition {
    const SYMBOL: &'static str = "F";
    fn key_parts(&self) -> &[usize] {
        self.parts()
    }
    fn from_key_parts(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl BasisKey for Partition {
    const SYMBOL: &'static str = "s";
    fn key_parts(&self) -> &[usize] {
        self.parts()
    }
    fn from_key_parts(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// A homogeneous integer combination of basis elements. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion<K: BasisKey> {
    degree: Option<usize>,
    terms: BTreeMap<K, BigInt>,
}

pub type FExpansion = Expansion<Composition>;
pub type SchurExpansion = Expansion<Partition>;

impl<K: BasisKey> Default for Expansion<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: BasisKey> Expansion<K> {
    pub fn zero() -> Self {
        Expansion {
            degree: None,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(key: K, coefficient: impl Into<BigInt>) -> Self {
        let mut e = Self::zero();
        e.add_term(key, coefficient.into())
            .expect("a single term is homogeneous");
        e
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (K, C)>) -> Result<Self> {
        let mut e = Self::zero();
        for (k, c) in terms {
            e.add_term(k, c.into())?;
        }
        Ok(e)
    }

    /// Adds `c·key`; fails if `key` has a different degree from the existing terms.
    pub fn add_term(&mut self, key: K, c: BigInt) -> Result<()> {
        let d = key.degree();
        match self.degree {
            Some(e) if e != d => {
                return Err(Error::DegreeMismatch {
                    expected: e,
                    found: d,
                })
            }
            _ => self.degree = Some(d),
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
        Ok(())
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &Self, c: &BigInt) -> Result<()> {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c)?;
        }
        Ok(())
    }

    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<K, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The lexicographically greatest key with a non-zero coefficient.
    pub fn leading(&self) -> Option<(&K, &BigInt)> {
        self.terms.iter().next_back()
    }
}

/// Terms in decreasing order of keys, e.g. `F[4,3] + 2*F[2,3,2] - F[1,2,2,2]`; zero prints `0`.
impl<K: BasisKey> fmt::Display for Expansion<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (key, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            let parts: Vec<String> = key.key_parts().iter().map(usize::to_string).collect();
            write!(f, "{}[{}]", K::SYMBOL, parts.join(","))?;
        }
        Ok(())
    }
}

/// Parses `term (("+"|"-") term)*` with `term := [coeff "*"] SYMBOL "[" int ("," int)* "]"`,
/// ignoring whitespace. A leading sign is allowed, and `0` is the zero expansion.
impl<K: BasisKey> FromStr for Expansion<K> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |msg: &str| Error::Parse(format!("{msg} in expansion {s:?}"));
        if text == "0" {
            return Ok(Self::zero());
        }
        if text.is_empty() {
            return Err(err("empty input"));
        }
        let bytes = text.as_bytes();
        let mut out = Self::zero();
        let mut i = 0;
        let mut first = true;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            match bytes[i] {
                b'+' if !first => i += 1,
                b'-' => {
                    sign = -sign;
                    i += 1;
                }
                _ if first => {}
                _ => return Err(err("expected '+' or '-'")),
            }
            first = false;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff = if i > start {
                let c: BigInt = text[start..i].parse().map_err(|_| err("bad coefficient"))?;
                if bytes.get(i) != Some(&b'*') {
                    return Err(err("expected '*' after coefficient"));
                }
                i += 1;
                c
            } else {
                BigInt::one()
            };
            if !text[i..].starts_with(K::SYMBOL) {
                return Err(err(&format!("expected '{}['", K::SYMBOL)));
            }
            i += K::SYMBOL.len();
            if bytes.get(i) != Some(&b'[') {
                return Err(err("expected '['"));
            }
            let close = text[i..].find(']').ok_or_else(|| err("missing ']'"))? + i;
            let parts = text[i + 1..close]
                .split(',')
                .map(|x| {
                    x.parse::<usize>()
                        .map_err(|_| err(&format!("bad part {x:?}")))
                })
                .collect::<Result<Vec<usize>>>()?;
            out.add_term(K::from_key_parts(parts)?, sign * coeff)?;
            i = close + 1;
        }
        Ok(out)
    }
}

/// Serialized as a list of `{"parts": [...], "coefficient": "..."}` with exact decimal
/// coefficients, in decreasing order of keys.
impl<K: BasisKey> Serialize for Expansion<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (k, c) in self.terms.iter().rev() {
            seq.serialize_element(&TermJson {
                parts: k.key_parts().to_vec(),
                coefficient: c.to_string(),
            })?;
        }
        seq.end()
    }
}

impl<'de, K: BasisKey> Deserialize<'de> for Expansion<K> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw: Vec<TermJson> = Vec::deserialize(d)?;
        let mut out = Self::zero();
        for t in raw {
            let key = K::from_key_parts(t.parts).map_err(D::Error::custom)?;
            let c: BigInt = t.coefficient.parse().map_err(D::Error::custom)?;
            out.add_term(key, c).map_err(D::Error::custom)?;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    parts: Vec<usize>,
    coefficient: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let f: FExpansion = "2*F[2,3,2] + F[4,3]".parse().unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "F[4,3] + 2*F[2,3,2]");
        assert_eq!(f.degree(), Some(7));
        let g: FExpansion = " -F[1, 2] +3 * F[2,1] - F[3]".parse().unwrap();
        assert_eq!(g.to_string(), "-F[3] + 3*F[2,1] - F[1,2]");
        assert_eq!(g.to_string().parse::<FExpansion>().unwrap(), g);
        assert!("0".parse::<FExpansion>().unwrap().is_zero());
        assert_eq!(FExpansion::zero().to_string(), "0");
        let s: SchurExpansion = "s[1]".parse().unwrap();
        assert_eq!(s.to_string(), "s[1]");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "F[1,2] + F[2]".parse::<FExpansion>(),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!("F[1,0]".parse::<FExpansion>().is_err());
        assert!("s[1,2]".parse::<SchurExpansion>().is_err());
        assert!("2F[1]".parse::<FExpansion>().is_err());
        assert!("F[1] F[1]".parse::<FExpansion>().is_err());
        assert!("".parse::<FExpansion>().is_err());
        assert!("G[1]".parse::<FExpansion>().is_err());
    }

    #[test]
    fn arithmetic_cancels() {
        let mut f: FExpansion = "F[2,1] + F[1,2]".parse().unwrap();
        f.add_scaled(&"F[2,1]".parse().unwrap(), &BigInt::from(-1))
            .unwrap();
        assert_eq!(f.to_string(), "F[1,2]");
        assert_eq!(f.leading().unwrap().0.parts(), &[1, 2]);
    }

    #[test]
    fn json_round_trip() {
        let f: FExpansion = "F[4,3] + 2*F[2,3,2]".parse().unwrap();
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(
            j,
            r#"[{"parts":[4,3],"coefficient":"1"},{"parts":[2,3,2],"coefficient":"2"}]"#
        );
        assert_eq!(serde_json::from_str::<FExpansion>(&j).unwrap(), f);
    }
}
