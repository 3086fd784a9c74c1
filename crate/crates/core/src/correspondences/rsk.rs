use serde::{Deserialize, Serialize};

use crate::combinatorics::tableau::Tableau;
use crate::combinatorics::word::Word;
use crate::error::{Error, Result};

/// Insertion tableau `p` and standard recording tableau `q` of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RskPair {
    pub p: Tableau,
    pub q: Tableau,
}

/// Schensted row insertion of `x`; returns the row where the new cell was created.
pub(crate) fn row_insert(rows: &mut Vec<Vec<u32>>, mut x: u32) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(c) => x = std::mem::replace(&mut row[c], x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Row-insertion RSK.
pub fn rsk(w: &Word) -> Result<RskPair> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (k, &x) in w.letters().iter().enumerate() {
        let r = row_insert(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(k as u32 + 1);
    }
    Ok(RskPair {
        p: Tableau::from_rows_unchecked(p),
        q: Tableau::from_rows_unchecked(q),
    })
}

/// Insertion tableau of a word given as letters.
pub fn insertion_tableau(letters: &[u32]) -> Tableau {
    let mut p = Vec::new();
    for &x in letters {
        row_insert(&mut p, x);
    }
    Tableau::from_rows_unchecked(p)
}

/// Reverse bumping. The alphabet bound of the result is the maximal entry of `p`.
pub fn rsk_inverse(pair: &RskPair) -> Result<Word> {
    if pair.p.shape() != pair.q.shape() {
        return Err(Error::InvalidPair(format!(
            "shapes {} and {} differ",
            pair.p.shape(),
            pair.q.shape()
        )));
    }
    if !pair.q.is_standard() {
        return Err(Error::InvalidPair(
            "recording tableau is not standard".into(),
        ));
    }
    let pos = pair.q.positions_of_standard();
    let mut p: Vec<Vec<u32>> = pair.p.rows().to_vec();
    let mut letters = vec![0; pos.len()];
    for k in (0..pos.len()).rev() {
        let (r, c) = pos[k];
        debug_assert_eq!(c + 1, p[r].len());
        let mut x = p[r].pop().expect("cell of Q exists in P");
        if p[r].is_empty() {
            p.pop();
        }
        for row in p[..r].iter_mut().rev() {
            let j = row
                .iter()
                .rposition(|&y| y < x)
                .expect("a smaller entry bumped x");
            x = std::mem::replace(&mut row[j], x);
        }
        letters[k] = x;
    }
    Ok(Word::from_parts_unchecked(letters, pair.p.max_entry()))
}
