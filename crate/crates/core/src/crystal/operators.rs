//! Crystal operators on words and tableaux via the parenthesis rule.

use serde::{Deserialize, Serialize};

use crate::combinatorics::tableau::Tableau;
use crate::combinatorics::word::Word;

/// Letters `i` (closing) and `i+1` (opening) left unpaired by the parenthesis rule.
/// Positions are 0-indexed. After pairing, the word reduces to `)^φ (^ε`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParenReduction {
    pub unpaired_close_positions: Vec<usize>,
    pub unpaired_open_positions: Vec<usize>,
}

impl ParenReduction {
    pub fn phi(&self) -> usize {
        self.unpaired_close_positions.len()
    }

    pub fn epsilon(&self) -> usize {
        self.unpaired_open_positions.len()
    }
}

pub fn paren_reduce(w: &Word, i: u32) -> ParenReduction {
    reduce_letters(w.letters(), i)
}

pub(crate) fn reduce_letters(letters: &[u32], i: u32) -> ParenReduction {
    let mut open = Vec::new();
    let mut close = Vec::new();
    for (j, &l) in letters.iter().enumerate() {
        if l == i + 1 {
            open.push(j);
        } else if l == i && open.pop().is_none() {
            close.push(j);
        }
    }
    ParenReduction {
        unpaired_close_positions: close,
        unpaired_open_positions: open,
    }
}

/// Position of the rightmost unpaired letter `i`.
pub(crate) fn f_position(letters: &[u32], i: u32) -> Option<usize> {
    reduce_letters(letters, i)
        .unpaired_close_positions
        .last()
        .copied()
}

/// Position of the leftmost unpaired letter `i+1`.
pub(crate) fn e_position(letters: &[u32], i: u32) -> Option<usize> {
    reduce_letters(letters, i)
        .unpaired_open_positions
        .first()
        .copied()
}

fn label_in_range(i: u32, n: u32) -> bool {
    i >= 1 && i < n
}

/// `f_i(w)`, or `None` when the action is null or `i` is outside `1..n`.
pub fn f_word(w: &Word, i: u32) -> Option<Word> {
    if !label_in_range(i, w.alphabet_bound()) {
        return None;
    }
    let p = f_position(w.letters(), i)?;
    let mut letters = w.letters().to_vec();
    letters[p] = i + 1;
    Some(Word::from_parts_unchecked(letters, w.alphabet_bound()))
}

/// `e_i(w)`, or `None` when the action is null or `i` is outside `1..n`.
pub fn e_word(w: &Word, i: u32) -> Option<Word> {
    if !label_in_range(i, w.alphabet_bound()) {
        return None;
    }
    let p = e_position(w.letters(), i)?;
    let mut letters = w.letters().to_vec();
    letters[p] = i;
    Some(Word::from_parts_unchecked(letters, w.alphabet_bound()))
}

/// `f_i(T)` computed on the reading word. The caller bounds `i` by the ambient alphabet.
pub fn f_tableau(t: &Tableau, i: u32) -> Option<Tableau> {
    if i == 0 {
        return None;
    }
    let letters = t.reading_letters();
    let p = f_position(&letters, i)?;
    let (r, c) = t.reading_cells()[p];
    let mut out = t.clone();
    out.set(r, c, i + 1);
    Some(out)
}

pub fn e_tableau(t: &Tableau, i: u32) -> Option<Tableau> {
    if i == 0 {
        return None;
    }
    let letters = t.reading_letters();
    let p = e_position(&letters, i)?;
    let (r, c) = t.reading_cells()[p];
    let mut out = t.clone();
    out.set(r, c, i);
    Some(out)
}
