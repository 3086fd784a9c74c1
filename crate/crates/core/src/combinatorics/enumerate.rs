//! Exhaustive enumeration of partitions, compositions and tableaux.

use super::composition::Composition;
use super::partition::Partition;
use super::tableau::{reading_cells_of, Tableau};

/// Partitions of `m` with at most `max_length` parts, in lexicographically decreasing order.
pub fn partitions_of(m: usize, max_length: Option<usize>) -> Vec<Partition> {
    fn go(
        rem: usize,
        max_part: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            out.push(Partition::from_parts_unchecked(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rem)).rev() {
            cur.push(p);
            go(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, max_length.unwrap_or(m), &mut Vec::new(), &mut out);
    out
}

/// All `2^{m-1}` compositions of `m`, in lexicographically increasing order.
pub fn compositions_of(m: usize) -> Vec<Composition> {
    fn go(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rem == 0 {
            out.push(Composition::from_parts_unchecked(cur.clone()));
            return;
        }
        for p in 1..=rem {
            cur.push(p);
            go(rem - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        go(m, &mut Vec::new(), &mut out);
    }
    out
}

/// Standard tableaux of the shape. Label `k` is placed in each admissible row, top row first.
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    fn go(shape: &[usize], rows: &mut Vec<Vec<u32>>, next: u32, m: u32, out: &mut Vec<Tableau>) {
        if next > m {
            out.push(Tableau::from_rows_unchecked(rows.clone()));
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                go(shape, rows, next + 1, m, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    go(shape.parts(), &mut rows, 1, shape.size() as u32, &mut out);
    out
}

/// Semistandard tableaux of the shape with entries in `1..=n`, in lexicographic order of
/// their reading words.
pub fn enumerate_ssyt(shape: &Partition, n: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.len() > n as usize {
        return out;
    }
    let cells = reading_cells_of(shape);
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    fill(&cells, 0, &mut rows, n, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<u32>>,
    n: u32,
    out: &mut Vec<Tableau>,
) {
    if k == cells.len() {
        out.push(Tableau::from_rows_unchecked(rows.clone()));
        return;
    }
    let (r, c) = cells[k];
    let mut lo = r as u32 + 1;
    if c > 0 {
        lo = lo.max(rows[r][c - 1]);
    }
    let hi = match rows.get(r + 1).and_then(|row| row.get(c)) {
        Some(&below) => below - 1,
        None => n,
    };
    for v in lo..=hi {
        rows[r][c] = v;
        fill(cells, k + 1, rows, n, out);
    }
    rows[r][c] = 0;
}

pub fn highest_weight_tableau(shape: &Partition) -> Tableau {
    Tableau::highest_weight(shape)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        assert_eq!(partitions_of(1, None), vec![Partition::row(1)]);
        let p4: Vec<String> = partitions_of(4, None)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(p4, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(partitions_of(7, None).len(), 15);
        assert_eq!(partitions_of(7, Some(2)).len(), 4);
    }

    #[test]
    fn compositions() {
        assert_eq!(compositions_of(5).len(), 16);
        let c3: Vec<String> = compositions_of(3).iter().map(|c| c.to_string()).collect();
        assert_eq!(c3, ["(1,1,1)", "(1,2)", "(2,1)", "(3)"]);
    }

    #[test]
    fn tableaux_counts() {
        assert_eq!(enumerate_syt(&"4,3".parse().unwrap()).len(), 14);
        assert_eq!(enumerate_syt(&Partition::row(6)).len(), 1);
        assert_eq!(enumerate_syt(&"2,1".parse().unwrap()).len(), 2);
        assert_eq!(enumerate_ssyt(&"4,3".parse().unwrap(), 4).len(), 140);
        assert_eq!(enumerate_ssyt(&Partition::row(1), 3).len(), 3);
        assert_eq!(enumerate_ssyt(&"2,2".parse().unwrap(), 2).len(), 1);
        assert!(enumerate_ssyt(&"1,1,1".parse().unwrap(), 2).is_empty());
    }

    #[test]
    fn ssyt_order_is_reading_word_lex() {
        let all = enumerate_ssyt(&"2,1".parse().unwrap(), 3);
        let words: Vec<Vec<u32>> = all.iter().map(|t| t.reading_letters()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert_eq!(all.len(), 8);
    }
}
