//! `Skeleton(λ)_n`: the quotient of `B(λ)_n` collapsing every subcomponent to its standard
//! tableau and keeping the minimal label of the crystal edges between two subcomponents.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::combinatorics::enumerate::enumerate_syt;
use crate::combinatorics::parsing::descent_composition;
use crate::combinatorics::partition::Partition;
use crate::combinatorics::tableau::Tableau;
use crate::crystal::graph::{generate_crystal, CrystalGraph};
use crate::error::{Error, Result};
use crate::quasicrystal::{decompose, Decomposition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonGraph {
    pub shape: Partition,
    pub n: u32,
    /// Maximal length of a descent composition of a standard tableau of the shape.
    pub s_max: usize,
    /// Standard tableaux whose descent composition has at most `n` parts.
    pub vertices: Vec<Tableau>,
    /// `(from, to, minimal label)`, sorted.
    pub edges: Vec<(usize, usize, u32)>,
}

impl SkeletonGraph {
    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.vertices.iter().position(|v| v == t)
    }

    /// Number of descents of vertex `v`.
    pub fn descents(&self, v: usize) -> usize {
        descent_composition(&self.vertices[v]).len() - 1
    }

    /// Equal vertex lists and edge lists, regardless of `n`.
    pub fn same_graph(&self, other: &SkeletonGraph) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }

    /// The induced subgraph on vertices whose descent composition has at most `len` parts.
    pub fn restrict_to_length(&self, len: usize) -> SkeletonGraph {
        let keep: Vec<usize> = (0..self.vertices.len())
            .filter(|&v| self.descents(v) < len)
            .collect();
        let new_index: HashMap<usize, usize> =
            keep.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v, i)| Some((*new_index.get(&u)?, *new_index.get(&v)?, i)))
            .collect();
        SkeletonGraph {
            shape: self.shape.clone(),
            n: len as u32,
            s_max: self.s_max,
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            edges,
        }
    }

    /// Number of ordered edges between each unordered pair `(a, b)` with `a < b`.
    pub fn pair_multiplicities(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for &(u, v, _) in &self.edges {
            *out.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        }
        out
    }
}

/// `S`: the maximal number of parts of a descent composition of `SYT(λ)`.
pub fn max_descent_length(shape: &Partition) -> usize {
    enumerate_syt(shape)
        .iter()
        .map(|t| descent_composition(t).len())
        .max()
        .unwrap_or(0)
}

pub fn build_skeleton(shape: &Partition, n: u32) -> SkeletonGraph {
    let g = generate_crystal(shape, n);
    let d = decompose(&g);
    skeleton_from_decomposition(shape, &g, &d)
}

/// Builds the skeleton from an already decomposed crystal.
pub fn skeleton_from_decomposition(
    shape: &Partition,
    g: &CrystalGraph<Tableau>,
    d: &Decomposition,
) -> SkeletonGraph {
    let n = g.max_entry();
    let syt: Vec<Tableau> = enumerate_syt(shape);
    let s_max = syt
        .iter()
        .map(|t| descent_composition(t).len())
        .max()
        .unwrap_or(0);
    let vertices: Vec<Tableau> = syt
        .into_iter()
        .filter(|t| descent_composition(t).len() <= n as usize)
        .collect();
    let index: HashMap<&Tableau, usize> =
        vertices.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let sub_vertex: Vec<usize> = d.subcomponents.iter().map(|s| index[&s.standard]).collect();
    let mut best: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for &(u, v, i) in g.edges() {
        let (a, b) = (d.component_of[u], d.component_of[v]);
        if a != b {
            let key = (sub_vertex[a], sub_vertex[b]);
            let e = best.entry(key).or_insert(i);
            *e = (*e).min(i);
        }
    }
    SkeletonGraph {
        shape: shape.clone(),
        n,
        s_max,
        vertices,
        edges: best.into_iter().map(|((a, b), i)| (a, b, i)).collect(),
    }
}

/// `Skeleton(λ) = Skeleton(λ)_S`, checked against `Skeleton(λ)_{S+1}`.
pub fn skeleton_stable(shape: &Partition) -> Result<SkeletonGraph> {
    let s = max_descent_length(shape) as u32;
    let a = build_skeleton(shape, s);
    let b = build_skeleton(shape, s + 1);
    if !a.same_graph(&b) {
        return Err(Error::Internal(format!(
            "skeleton of {shape} differs at n = {s} and n = {}",
            s + 1
        )));
    }
    Ok(a)
}
