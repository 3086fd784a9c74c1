use serde::{Deserialize, Serialize};

use crate::combinatorics::partition::Partition;
use crate::combinatorics::tableau::Tableau;
use crate::error::{Error, Result};

/// A filling of `outer / inner`. `rows[r]` holds the entries of columns `inner[r]..outer[r]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewTableau {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<u32>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidSkewTableau(m));
        if !outer.contains(&inner) {
            return bad(format!("{inner} is not contained in {outer}"));
        }
        if rows.len() != outer.len() {
            return bad(format!("expected {} rows, got {}", outer.len(), rows.len()));
        }
        for (r, row) in rows.iter().enumerate() {
            let (a, b) = (inner.part(r), outer.part(r));
            if row.len() != b - a {
                return bad(format!("row {} should hold {} entries", r + 1, b - a));
            }
            if row.contains(&0) {
                return bad(format!("row {} has a zero entry", r + 1));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("row {} decreases", r + 1));
            }
            if r > 0 {
                for (k, &v) in row.iter().enumerate() {
                    let c = a + k;
                    let above_start = inner.part(r - 1);
                    if c >= above_start && rows[r - 1][c - above_start] >= v {
                        return bad(format!("column {} does not strictly increase", c + 1));
                    }
                }
            }
        }
        Ok(SkewTableau { outer, inner, rows })
    }

    pub fn from_tableau(t: &Tableau) -> SkewTableau {
        SkewTableau {
            outer: t.shape(),
            inner: Partition::empty(),
            rows: t.rows().to_vec(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Option<u32> {
        let start = self.inner.part(r);
        if c < start {
            return None;
        }
        self.rows.get(r).and_then(|row| row.get(c - start)).copied()
    }

    /// Filled entries, rows bottom to top, each left to right.
    pub fn reading_letters(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Cells of the inner shape that can start a slide.
    pub fn inner_corners(&self) -> Vec<(usize, usize)> {
        (0..self.inner.len())
            .filter(|&r| self.inner.part(r + 1) < self.inner.part(r))
            .map(|r| (r, self.inner.part(r) - 1))
            .collect()
    }

    /// One forward slide into the inner corner `corner`.
    pub fn slide(&self, corner: (usize, usize)) -> Result<SkewTableau> {
        if !self.inner_corners().contains(&corner) {
            return Err(Error::InvalidParameters(format!(
                "({},{}) is not an inner corner",
                corner.0 + 1,
                corner.1 + 1
            )));
        }
        let mut grid: Vec<Vec<Option<u32>>> = (0..self.outer.len())
            .map(|r| (0..self.outer.part(r)).map(|c| self.get(r, c)).collect())
            .collect();
        let (mut r, mut c) = corner;
        loop {
            let below = grid
                .get(r + 1)
                .and_then(|row| row.get(c))
                .copied()
                .flatten();
            let right = grid[r].get(c + 1).copied().flatten();
            let down = match (below, right) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(b), Some(x)) => b <= x,
            };
            let (nr, nc) = if down { (r + 1, c) } else { (r, c + 1) };
            grid[r][c] = grid[nr][nc].take();
            r = nr;
            c = nc;
        }
        grid[r].pop();
        let mut inner: Vec<usize> = self.inner.parts().to_vec();
        inner[corner.0] -= 1;
        let outer = Partition::trimmed(grid.iter().map(Vec::len).collect())
            .expect("slides keep a partition shape");
        let inner = Partition::trimmed(inner).expect("removing a corner keeps a partition");
        grid.truncate(outer.len());
        let rows = grid
            .into_iter()
            .map(|row| row.into_iter().flatten().collect())
            .collect();
        Ok(SkewTableau { outer, inner, rows })
    }

    /// Rectifies, letting `choose` pick the next inner corner from the current list.
    pub fn rectify_with(&self, mut choose: impl FnMut(&[(usize, usize)]) -> usize) -> Tableau {
        let mut s = self.clone();
        while !s.inner.is_empty() {
            let corners = s.inner_corners();
            let k = choose(&corners).min(corners.len() - 1);
            s = s.slide(corners[k]).expect("chosen cell is an inner corner");
        }
        Tableau::from_rows_unchecked(s.rows)
    }
}

/// Rectification by jeu de taquin, always sliding into the south-east-most inner corner.
pub fn jdt_rectify(s: &SkewTableau) -> Tableau {
    s.rectify_with(|corners| corners.len() - 1)
}
