//! Dual equivalence graphs on standard tableaux.

use serde::{Deserialize, Serialize};

use crate::combinatorics::enumerate::enumerate_syt;
use crate::combinatorics::partition::Partition;
use crate::combinatorics::tableau::Tableau;

/// Reading-word position of each value of a standard tableau, indexed by `value - 1`.
fn reading_positions(t: &Tableau) -> Vec<usize> {
    let mut pos = vec![0; t.size()];
    for (k, &v) in t.reading_letters().iter().enumerate() {
        pos[v as usize - 1] = k;
    }
    pos
}

/// The elementary dual equivalence `d_i`, `2 ≤ i ≤ m−1`, on a standard tableau: it fixes `t`
/// when `i` sits between `i−1` and `i+1` in the reading word, swaps `i` and `i−1` when `i+1`
/// sits between them, and swaps `i` and `i+1` when `i−1` sits between them.
pub fn dual_equivalence_involution(t: &Tableau, i: u32) -> Tableau {
    let m = t.size() as u32;
    if i < 2 || i + 1 > m {
        return t.clone();
    }
    let pos = reading_positions(t);
    let at = |x: u32| pos[x as usize - 1];
    let between = |mid: u32, a: u32, b: u32| {
        let (lo, hi) = (at(a).min(at(b)), at(a).max(at(b)));
        lo < at(mid) && at(mid) < hi
    };
    let (x, y) = if between(i, i - 1, i + 1) {
        return t.clone();
    } else if between(i + 1, i - 1, i) {
        (i, i - 1)
    } else {
        (i, i + 1)
    };
    t.map_entries(|v| {
        if v == x {
            y
        } else if v == y {
            x
        } else {
            v
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualEquivalenceGraph {
    pub shape: Partition,
    pub vertices: Vec<Tableau>,
    /// Unordered edges `(a, b, i)` with `a < b` and `d_i` exchanging `a` and `b`.
    pub edges: Vec<(usize, usize, u32)>,
}

pub fn dual_equivalence_graph(shape: &Partition) -> DualEquivalenceGraph {
    let vertices = enumerate_syt(shape);
    let m = shape.size() as u32;
    let mut edges = Vec::new();
    for (a, t) in vertices.iter().enumerate() {
        for i in 2..m {
            let u = dual_equivalence_involution(t, i);
            if &u != t {
                let b = vertices
                    .iter()
                    .position(|v| v == &u)
                    .expect("d_i keeps standardness");
                if a < b {
                    edges.push((a, b, i));
                }
            }
        }
    }
    edges.sort_unstable();
    DualEquivalenceGraph {
        shape: shape.clone(),
        vertices,
        edges,
    }
}
