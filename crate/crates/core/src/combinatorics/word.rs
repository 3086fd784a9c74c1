use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::composition::Composition;
use crate::error::{Error, Result};

/// A word over the alphabet `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<u32>,
    alphabet_bound: u32,
}

impl Word {
    pub fn new(letters: Vec<u32>, alphabet_bound: u32) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > alphabet_bound) {
            return Err(Error::InvalidWord(format!(
                "letter {bad} outside 1..={alphabet_bound}"
            )));
        }
        Ok(Word {
            letters,
            alphabet_bound,
        })
    }

    /// Uses the largest letter as the alphabet bound.
    pub fn from_letters(letters: Vec<u32>) -> Result<Self> {
        let n = letters.iter().copied().max().unwrap_or(0);
        Self::new(letters, n)
    }

    pub(crate) fn from_parts_unchecked(letters: Vec<u32>, alphabet_bound: u32) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1 && l <= alphabet_bound));
        Word {
            letters,
            alphabet_bound,
        }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn alphabet_bound(&self) -> u32 {
        self.alphabet_bound
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters over a larger alphabet.
    pub fn with_alphabet_bound(&self, n: u32) -> Result<Word> {
        Word::new(self.letters.clone(), n)
    }

    pub fn weight(&self) -> super::composition::WeightVector {
        let mut counts = vec![0; self.alphabet_bound as usize];
        for &l in &self.letters {
            counts[l as usize - 1] += 1;
        }
        super::composition::WeightVector(counts)
    }

    /// 1-indexed positions `j` with `w_j > w_{j+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        descent_positions(&self.letters)
    }
}

pub(crate) fn descent_positions(letters: &[u32]) -> Vec<usize> {
    letters
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(j, _)| j + 1)
        .collect()
}

/// Lengths of the maximal weakly increasing factors of `w`.
pub fn word_descent_composition(w: &Word) -> Result<Composition> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    Composition::from_descent_set(&w.descent_set(), w.len())
}

/// Relabels letters to `1..=len`, equal letters numbered left to right.
pub fn standardize_word(w: &Word) -> Word {
    let letters = standardize_letters(&w.letters);
    let n = letters.len() as u32;
    Word::from_parts_unchecked(letters, n)
}

pub(crate) fn standardize_letters(letters: &[u32]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..letters.len()).collect();
    order.sort_by_key(|&j| (letters[j], j));
    let mut out = vec![0; letters.len()];
    for (label, &j) in order.iter().enumerate() {
        out[j] = label as u32 + 1;
    }
    out
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet_bound <= 9 {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Accepts a run of digits such as `1331233` or comma/space separated letters.
impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let letters: Vec<u32> = if t.chars().all(|c| c.is_ascii_digit()) {
            t.chars().map(|c| c.to_digit(10).unwrap()).collect()
        } else {
            t.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| {
                    x.parse::<u32>()
                        .map_err(|e| Error::Parse(format!("bad letter {x:?}: {e}")))
                })
                .collect::<Result<_>>()?
        };
        Word::from_letters(letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn descent_compositions() {
        assert_eq!(
            word_descent_composition(&w("534223511234"))
                .unwrap()
                .parts(),
            &[1, 2, 4, 5]
        );
        assert_eq!(word_descent_composition(&w("1111")).unwrap().parts(), &[4]);
        assert_eq!(
            word_descent_composition(&w("4321")).unwrap().parts(),
            &[1, 1, 1, 1]
        );
        assert_eq!(
            word_descent_composition(&Word::new(vec![], 3).unwrap()),
            Err(Error::EmptyInput)
        );
    }

    #[test]
    fn standardization() {
        let s = standardize_word(&w("1331233312233"));
        assert_eq!(s.letters(), &[1, 7, 8, 2, 4, 9, 10, 11, 3, 5, 6, 12, 13]);
        assert_eq!(s.descent_set(), w("1331233312233").descent_set());
        assert_eq!(standardize_word(&w("123")), w("123"));
        assert_eq!(standardize_word(&w("3142")), w("3142"));
    }

    #[test]
    fn parsing_and_bounds() {
        assert_eq!(w("3,10,2").letters(), &[3, 10, 2]);
        assert_eq!(w("3,10,2").to_string(), "3,10,2");
        assert!(Word::new(vec![0], 3).is_err());
        assert!(Word::new(vec![4], 3).is_err());
        assert_eq!(w("112").weight().counts(), &[2, 1]);
    }
}
