use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::composition::WeightVector;
use super::partition::Partition;
use super::word::Word;
use crate::error::{Error, Result};

/// A semistandard Young tableau in English notation, stored as ragged rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        check_semistandard(&rows).map_err(Error::InvalidTableau)?;
        Ok(Tableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(check_semistandard(&rows).is_ok(), "{rows:?}");
        Tableau { rows }
    }

    /// The tableau `1_λ`: row `i` filled with `i`.
    pub fn highest_weight(shape: &Partition) -> Tableau {
        Tableau {
            rows: shape
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &len)| vec![i as u32 + 1; len])
                .collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_parts_unchecked(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Letter counts over `1..=n`; `n` is raised to the maximal entry if smaller.
    pub fn weight(&self, n: u32) -> WeightVector {
        let n = n.max(self.max_entry());
        let mut counts = vec![0; n as usize];
        for &v in self.rows.iter().flatten() {
            counts[v as usize - 1] += 1;
        }
        WeightVector(counts)
    }

    pub fn is_standard(&self) -> bool {
        let m = self.size();
        let mut seen = vec![false; m];
        for &v in self.rows.iter().flatten() {
            if v == 0 || v as usize > m || seen[v as usize - 1] {
                return false;
            }
            seen[v as usize - 1] = true;
        }
        true
    }

    /// Cells `(row, col)` in reading order: rows bottom to top, each left to right.
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        reading_cells_of(&self.shape())
    }

    pub fn reading_letters(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// The row reading word over the alphabet bounded by the maximal entry.
    pub fn reading_word(&self) -> Word {
        Word::from_parts_unchecked(self.reading_letters(), self.max_entry())
    }

    /// Position of each value of a standard tableau, indexed by `value - 1`.
    pub fn positions_of_standard(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                pos[v as usize - 1] = (r, c);
            }
        }
        pos
    }

    pub fn map_entries(&self, f: impl Fn(u32) -> u32) -> Tableau {
        Tableau::from_rows_unchecked(
            self.rows
                .iter()
                .map(|r| r.iter().map(|&v| f(v)).collect())
                .collect(),
        )
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: u32) {
        self.rows[row][col] = value;
    }
}

pub(crate) fn reading_cells_of(shape: &Partition) -> Vec<(usize, usize)> {
    shape
        .parts()
        .iter()
        .enumerate()
        .rev()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect()
}

pub(crate) fn check_semistandard(rows: &[Vec<u32>]) -> std::result::Result<(), String> {
    for (r, row) in rows.iter().enumerate() {
        if row.is_empty() {
            return Err(format!("row {} is empty", r + 1));
        }
        if r > 0 && row.len() > rows[r - 1].len() {
            return Err(format!("row {} is longer than the row above", r + 1));
        }
        for (c, &v) in row.iter().enumerate() {
            if v == 0 {
                return Err(format!("entry at ({},{}) is zero", r + 1, c + 1));
            }
            if c > 0 && row[c - 1] > v {
                return Err(format!("row {} decreases at column {}", r + 1, c + 1));
            }
            if r > 0 && rows[r - 1][c] >= v {
                return Err(format!(
                    "column {} does not strictly increase at row {}",
                    c + 1,
                    r + 1
                ));
            }
        }
    }
    Ok(())
}

impl From<Tableau> for Vec<Vec<u32>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl TryFrom<Vec<Vec<u32>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

/// Rows separated by `/`, e.g. `1123/223/3/4`. Entries are comma separated when any exceeds 9.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_entry() > 9;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for (j, v) in row.iter().enumerate() {
                if wide && j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Accepts JSON (`[[1,1,2],[2]]`) or the slash form produced by `Display`.
impl FromStr for Tableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('[') {
            let rows: Vec<Vec<u32>> =
                serde_json::from_str(t).map_err(|e| Error::Parse(format!("tableau JSON: {e}")))?;
            return Tableau::new(rows);
        }
        let rows = t
            .split('/')
            .map(|row| {
                let row = row.trim();
                if row.contains(',') {
                    row.split(',')
                        .map(|x| {
                            x.trim()
                                .parse::<u32>()
                                .map_err(|e| Error::Parse(format!("bad entry {x:?}: {e}")))
                        })
                        .collect::<Result<Vec<u32>>>()
                } else {
                    row.chars()
                        .map(|c| {
                            c.to_digit(10)
                                .ok_or_else(|| Error::Parse(format!("bad entry {c:?} in {s:?}")))
                        })
                        .collect()
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}
