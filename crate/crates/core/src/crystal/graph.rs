//! Crystal graphs `B(λ)_n` and connected components of word crystals.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use rayon::prelude::*;

use super::operators::{e_word, f_tableau, f_word};
use crate::combinatorics::partition::Partition;
use crate::combinatorics::tableau::Tableau;
use crate::combinatorics::word::Word;
use crate::error::{Error, Result};

/// A labeled directed graph whose edge `(u, v, i)` records `f_i(u) = v`.
#[derive(Debug, Clone)]
pub struct CrystalGraph<V> {
    vertices: Vec<V>,
    edges: Vec<(usize, usize, u32)>,
    source: Option<usize>,
    max_entry: u32,
    index: HashMap<V, usize>,
    out_adj: Vec<Vec<Option<usize>>>,
    in_adj: Vec<Vec<Option<usize>>>,
}

impl<V: Clone + Eq + Hash> CrystalGraph<V> {
    /// Builds the graph and its adjacency tables. Fails if a vertex repeats, an edge label
    /// leaves `1..n`, or some vertex has two outgoing or incoming edges with the same label.
    pub fn from_parts(
        vertices: Vec<V>,
        mut edges: Vec<(usize, usize, u32)>,
        max_entry: u32,
    ) -> Result<Self> {
        let nl = max_entry.saturating_sub(1) as usize;
        let mut index = HashMap::with_capacity(vertices.len());
        for (k, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), k).is_some() {
                return Err(Error::InvalidParameters(format!("vertex {k} is repeated")));
            }
        }
        let mut out_adj = vec![vec![None; nl]; vertices.len()];
        let mut in_adj = vec![vec![None; nl]; vertices.len()];
        edges.sort_unstable();
        for &(u, v, i) in &edges {
            if u >= vertices.len() || v >= vertices.len() || i == 0 || i as usize > nl {
                return Err(Error::InvalidParameters(format!(
                    "edge ({u},{v},{i}) out of range"
                )));
            }
            let l = i as usize - 1;
            if out_adj[u][l].replace(v).is_some() || in_adj[v][l].replace(u).is_some() {
                return Err(Error::InvalidParameters(format!(
                    "label {i} repeated at edge ({u},{v})"
                )));
            }
        }
        let mut sources = (0..vertices.len()).filter(|&v| in_adj[v].iter().all(Option::is_none));
        let source = sources.next();
        Ok(CrystalGraph {
            vertices,
            edges,
            source,
            max_entry,
            index,
            out_adj,
            in_adj,
        })
    }

    pub fn empty(max_entry: u32) -> Self {
        Self::from_parts(Vec::new(), Vec::new(), max_entry).expect("empty graph is valid")
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn vertex(&self, k: usize) -> &V {
        &self.vertices[k]
    }

    /// Edges `(from, to, label)` sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    /// The first vertex without incoming edges.
    pub fn source(&self) -> Option<usize> {
        self.source
    }

    pub fn max_entry(&self) -> u32 {
        self.max_entry
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn f(&self, v: usize, i: u32) -> Option<usize> {
        self.out_adj[v]
            .get((i as usize).checked_sub(1)?)
            .copied()
            .flatten()
    }

    pub fn e(&self, v: usize, i: u32) -> Option<usize> {
        self.in_adj[v]
            .get((i as usize).checked_sub(1)?)
            .copied()
            .flatten()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].iter().flatten().count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].iter().flatten().count()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.in_degree(v) == 0)
            .collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.out_degree(v) == 0)
            .collect()
    }

    /// Directed distance from `start` along edges, `None` when unreachable.
    pub fn distances_from(&self, start: usize) -> Vec<Option<usize>> {
        self.bfs(start, true)
    }

    /// Directed distance to `end`, i.e. distance from `end` along reversed edges.
    pub fn distances_to(&self, end: usize) -> Vec<Option<usize>> {
        self.bfs(end, false)
    }

    fn bfs(&self, start: usize, forward: bool) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        let mut queue = VecDeque::from([start]);
        dist[start] = Some(0);
        while let Some(u) = queue.pop_front() {
            let adj = if forward {
                &self.out_adj[u]
            } else {
                &self.in_adj[u]
            };
            for &v in adj.iter().flatten() {
                if dist[v].is_none() {
                    dist[v] = Some(dist[u].unwrap() + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// For each vertex, the lexicographically least shortest label sequence reaching it from
    /// the source. Isomorphic crystals assign equal addresses to corresponding vertices.
    pub fn bfs_addresses(&self) -> Vec<Option<Vec<u32>>> {
        let mut addr: Vec<Option<Vec<u32>>> = vec![None; self.len()];
        let Some(s) = self.source else {
            return addr;
        };
        addr[s] = Some(Vec::new());
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for (l, &v) in self.out_adj[u].iter().enumerate() {
                if let Some(v) = v {
                    if addr[v].is_none() {
                        let mut a = addr[u].clone().unwrap();
                        a.push(l as u32 + 1);
                        addr[v] = Some(a);
                        queue.push_back(v);
                    }
                }
            }
        }
        addr
    }
}

/// `B(λ)_n`: the closure of `{1_λ}` under `f_1..f_{n-1}`, indexed in breadth-first
/// discovery order with children visited by ascending label.
pub fn generate_crystal(shape: &Partition, n: u32) -> CrystalGraph<Tableau> {
    generate(shape, n, false)
}

/// Same graph as [`generate_crystal`], computing each frontier's successors in parallel.
pub fn generate_crystal_par(shape: &Partition, n: u32) -> CrystalGraph<Tableau> {
    generate(shape, n, true)
}

fn generate(shape: &Partition, n: u32, parallel: bool) -> CrystalGraph<Tableau> {
    if shape.len() > n as usize {
        return CrystalGraph::empty(n);
    }
    let source = Tableau::highest_weight(shape);
    let mut vertices = vec![source.clone()];
    let mut index: HashMap<Tableau, usize> = HashMap::from([(source, 0)]);
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    let successors = |t: &Tableau| -> Vec<(u32, Tableau)> {
        (1..n)
            .filter_map(|i| f_tableau(t, i).map(|x| (i, x)))
            .collect()
    };
    while !frontier.is_empty() {
        let children: Vec<Vec<(u32, Tableau)>> = if parallel {
            frontier
                .par_iter()
                .map(|&u| successors(&vertices[u]))
                .collect()
        } else {
            frontier.iter().map(|&u| successors(&vertices[u])).collect()
        };
        let mut next = Vec::new();
        for (&u, kids) in frontier.iter().zip(children) {
            for (i, t) in kids {
                let v = match index.get(&t) {
                    Some(&v) => v,
                    None => {
                        let v = vertices.len();
                        index.insert(t.clone(), v);
                        vertices.push(t);
                        next.push(v);
                        v
                    }
                };
                edges.push((u, v, i));
            }
        }
        frontier = next;
    }
    CrystalGraph::from_parts(vertices, edges, n).expect("crystal operators are partial bijections")
}

/// The connected component of `w` in the crystal of words over `1..=n`, closed under all
/// `e_i` and `f_i`, indexed in breadth-first discovery order (`f` labels, then `e` labels).
pub fn word_crystal_component(w: &Word) -> CrystalGraph<Word> {
    let n = w.alphabet_bound();
    let mut vertices = vec![w.clone()];
    let mut index: HashMap<Word, usize> = HashMap::from([(w.clone(), 0)]);
    let mut queue = VecDeque::from([0usize]);
    let mut edges = Vec::new();
    while let Some(u) = queue.pop_front() {
        let cur = vertices[u].clone();
        for forward in [true, false] {
            for i in 1..n {
                let next = if forward {
                    f_word(&cur, i)
                } else {
                    e_word(&cur, i)
                };
                let Some(x) = next else { continue };
                let v = match index.get(&x) {
                    Some(&v) => v,
                    None => {
                        let v = vertices.len();
                        index.insert(x.clone(), v);
                        vertices.push(x);
                        queue.push_back(v);
                        v
                    }
                };
                if forward {
                    edges.push((u, v, i));
                }
            }
        }
    }
    CrystalGraph::from_parts(vertices, edges, n).expect("crystal operators are partial bijections")
}
