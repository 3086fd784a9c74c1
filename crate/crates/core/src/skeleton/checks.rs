//! Checkers for the structure of skeletons, dual equivalence graphs, descent-composition
//! reorderings and the duality of subcomponents under evacuation.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::dual::dual_equivalence_graph;
use super::quotient::{skeleton_stable, SkeletonGraph};
use crate::combinatorics::composition::Composition;
use crate::combinatorics::enumerate::{compositions_of, enumerate_syt, partitions_of};
use crate::combinatorics::parsing::descent_composition;
use crate::combinatorics::partition::Partition;
use crate::combinatorics::tableau::Tableau;
use crate::correspondences::evac::evacuate;
use crate::crystal::graph::generate_crystal;
use crate::error::Result;
use crate::quasicrystal::{decompose, subcomponent_sink};

/// A subgraph of a skeleton, by skeleton vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subgraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize, u32)>,
}

/// The induced subgraph on standard tableaux with exactly `d` descents.
pub fn induced_by_descent_count(skel: &SkeletonGraph, d: usize) -> Subgraph {
    let vertices: Vec<usize> = (0..skel.vertices.len())
        .filter(|&v| skel.descents(v) == d)
        .collect();
    let set: HashSet<usize> = vertices.iter().copied().collect();
    let edges = skel
        .edges
        .iter()
        .copied()
        .filter(|(u, v, _)| set.contains(u) && set.contains(v))
        .collect();
    Subgraph { vertices, edges }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Classification {
    Singletons,
    Chains,
    EvenCyclesWithOptionalSourceSink,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Singleton,
    Path,
    Cyclic,
    Other,
}

struct Undirected {
    adj: HashMap<usize, BTreeSet<usize>>,
}

impl Undirected {
    fn new(vertices: &[usize], edges: &[(usize, usize, u32)]) -> Self {
        let mut adj: HashMap<usize, BTreeSet<usize>> =
            vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
        for &(u, v, _) in edges {
            if u != v && adj.contains_key(&u) && adj.contains_key(&v) {
                adj.get_mut(&u).unwrap().insert(v);
                adj.get_mut(&v).unwrap().insert(u);
            }
        }
        Undirected { adj }
    }

    fn induced(&self, keep: &BTreeSet<usize>) -> Self {
        let adj = keep
            .iter()
            .map(|&v| (v, self.adj[&v].intersection(keep).copied().collect()))
            .collect();
        Undirected { adj }
    }

    fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    fn components(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = HashSet::new();
        let mut keys: Vec<usize> = self.adj.keys().copied().collect();
        keys.sort_unstable();
        let mut out = Vec::new();
        for s in keys {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = BTreeSet::from([s]);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[&u] {
                    if seen.insert(v) {
                        comp.insert(v);
                        queue.push_back(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    fn is_bipartite(&self) -> bool {
        let mut colour: HashMap<usize, bool> = HashMap::new();
        for comp in self.components() {
            let s = *comp.iter().next().unwrap();
            colour.insert(s, false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[&u] {
                    match colour.get(&v) {
                        Some(&c) if c == colour[&u] => return false,
                        Some(_) => {}
                        None => {
                            colour.insert(v, !colour[&u]);
                            queue.push_back(v);
                        }
                    }
                }
            }
        }
        true
    }

    fn connected_without(&self, a: usize, b: usize) -> bool {
        let mut seen = HashSet::from([a]);
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[&u] {
                if (u == a && v == b) || (u == b && v == a) {
                    continue;
                }
                if v == b {
                    return true;
                }
                if seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        false
    }

    /// Connected, bipartite, and every edge lies on a cycle: a union of even cycles.
    fn is_even_cycle_union(&self) -> bool {
        if self.adj.len() < 4 || self.components().len() != 1 || !self.is_bipartite() {
            return false;
        }
        self.adj
            .iter()
            .all(|(&u, nb)| nb.iter().all(|&v| self.connected_without(u, v)))
    }

    fn is_path(&self) -> bool {
        self.components().len() == 1
            && self.edge_count() + 1 == self.adj.len()
            && self.adj.values().all(|nb| nb.len() <= 2)
    }
}

fn classify_component(g: &Subgraph, full: &Undirected, comp: &BTreeSet<usize>) -> Kind {
    if comp.len() == 1 {
        return Kind::Singleton;
    }
    let h = full.induced(comp);
    if h.is_path() {
        return Kind::Path;
    }
    if h.is_even_cycle_union() {
        return Kind::Cyclic;
    }
    let mut indeg: HashMap<usize, usize> = comp.iter().map(|&v| (v, 0)).collect();
    let mut outdeg = indeg.clone();
    for &(u, v, _) in &g.edges {
        if comp.contains(&u) && comp.contains(&v) {
            *outdeg.get_mut(&u).unwrap() += 1;
            *indeg.get_mut(&v).unwrap() += 1;
        }
    }
    let removed: BTreeSet<usize> = comp
        .iter()
        .copied()
        .filter(|v| indeg[v] == 0 || outdeg[v] == 0)
        .collect();
    let rest: BTreeSet<usize> = comp.difference(&removed).copied().collect();
    if rest.is_empty() {
        return Kind::Other;
    }
    let core = h.induced(&rest);
    let cores = core.components();
    let ok = cores.iter().all(|c| core.induced(c).is_even_cycle_union())
        && removed.len() <= 2 * cores.len()
        && cores.iter().all(|c| {
            removed
                .iter()
                .filter(|r| h.adj[r].iter().any(|x| c.contains(x)))
                .count()
                <= 2
        });
    if ok {
        Kind::Cyclic
    } else {
        Kind::Other
    }
}

/// Classifies a subgraph as a disjoint union of singletons, of chains, or of even cycles
/// possibly with attached source and sink vertices. Orientation is ignored except to
/// identify sources and sinks.
pub fn classify_subgraph(g: &Subgraph) -> Classification {
    let full = Undirected::new(&g.vertices, &g.edges);
    let kinds: Vec<Kind> = full
        .components()
        .iter()
        .map(|c| classify_component(g, &full, c))
        .collect();
    if kinds.iter().all(|&k| k == Kind::Singleton) {
        Classification::Singletons
    } else if kinds
        .iter()
        .all(|&k| matches!(k, Kind::Singleton | Kind::Path))
    {
        Classification::Chains
    } else if kinds.iter().all(|&k| k == Kind::Cyclic) {
        Classification::EvenCyclesWithOptionalSourceSink
    } else {
        Classification::Other
    }
}

/// Per-shape outcome of the fixed-descent-count classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub shape: Partition,
    /// `(number of parts s, classification of H_s)`.
    pub layers: Vec<(usize, Classification)>,
    /// Unordered pairs inside one `H_s` joined by edges in both directions.
    pub multi_edges_within_layers: Vec<(Tableau, Tableau)>,
    pub pass: bool,
}

pub fn check_skeleton_structure(shape: &Partition) -> Result<StructureReport> {
    let skel = skeleton_stable(shape)?;
    let mut layers = Vec::new();
    for s in 1..=skel.s_max {
        let h = induced_by_descent_count(&skel, s - 1);
        if !h.vertices.is_empty() {
            layers.push((s, classify_subgraph(&h)));
        }
    }
    let multi_edges_within_layers: Vec<(Tableau, Tableau)> = skel
        .pair_multiplicities()
        .into_iter()
        .filter(|&((a, b), r)| r > 1 && skel.descents(a) == skel.descents(b))
        .map(|((a, b), _)| (skel.vertices[a].clone(), skel.vertices[b].clone()))
        .collect();
    let pass = layers.iter().all(|(_, c)| *c != Classification::Other)
        && multi_edges_within_layers.is_empty();
    Ok(StructureReport {
        shape: shape.clone(),
        layers,
        multi_edges_within_layers,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairComparison {
    pub a: Tableau,
    pub b: Tableau,
    pub skeleton_edges: usize,
    pub dual_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualEquivalenceReport {
    pub shape: Partition,
    pub convention: String,
    pub skeleton_edge_count: usize,
    pub dual_edge_count: usize,
    /// Pairs joined in exactly one of the two graphs, or with different multiplicities.
    pub differing_pairs: Vec<PairComparison>,
    /// Unordered pairs with skeleton edges and no dual equivalence edge.
    pub extra_skeleton_pairs: usize,
    pub violations: Vec<PairComparison>,
    pub pass: bool,
}

/// For each unordered pair of standard tableaux: `r` dual equivalence edges force at least
/// `r` skeleton edges, and `r > 1` skeleton edges force exactly `r` dual equivalence edges.
pub fn check_dual_equivalence_conjecture(shape: &Partition) -> Result<DualEquivalenceReport> {
    let skel = skeleton_stable(shape)?;
    let deg = dual_equivalence_graph(shape);
    debug_assert_eq!(skel.vertices, deg.vertices);
    let skel_pairs = skel.pair_multiplicities();
    let mut deg_pairs: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(a, b, _) in &deg.edges {
        *deg_pairs.entry((a, b)).or_insert(0) += 1;
    }
    let keys: BTreeSet<(usize, usize)> =
        skel_pairs.keys().chain(deg_pairs.keys()).copied().collect();
    let mut differing_pairs = Vec::new();
    let mut violations = Vec::new();
    let mut extra = 0;
    for (a, b) in keys {
        let rs = skel_pairs.get(&(a, b)).copied().unwrap_or(0);
        let rd = deg_pairs.get(&(a, b)).copied().unwrap_or(0);
        let cmp = PairComparison {
            a: skel.vertices[a].clone(),
            b: skel.vertices[b].clone(),
            skeleton_edges: rs,
            dual_edges: rd,
        };
        if rd == 0 && rs > 0 {
            extra += 1;
        }
        if (rd > 0 && rs < rd) || (rs > 1 && rd != rs) {
            violations.push(cmp.clone());
        }
        if rs != rd {
            differing_pairs.push(cmp);
        }
    }
    Ok(DualEquivalenceReport {
        shape: shape.clone(),
        convention: "skeleton multiplicity of a pair counts its ordered edges (at most one per \
                     direction); dual equivalence multiplicity counts the labels i with d_i \
                     exchanging the pair"
            .into(),
        skeleton_edge_count: skel.edges.len(),
        dual_edge_count: deg.edges.len(),
        pass: violations.is_empty(),
        differing_pairs,
        extra_skeleton_pairs: extra,
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReorderingReport {
    pub m: usize,
    pub checked: usize,
    /// Compositions `α` that are not descent compositions of the sorted partition.
    pub violations: Vec<Composition>,
    pub pass: bool,
}

/// Every composition `α ⊨ m` is a descent composition of a standard tableau whose shape is
/// the weakly decreasing reordering of `α`.
pub fn check_reordering_conjecture(m: usize) -> ReorderingReport {
    let occurring: HashMap<Partition, HashSet<Composition>> = partitions_of(m, None)
        .into_iter()
        .map(|lam| {
            let set = enumerate_syt(&lam)
                .iter()
                .map(descent_composition)
                .collect();
            (lam, set)
        })
        .collect();
    let all = compositions_of(m);
    let violations: Vec<Composition> = all
        .iter()
        .filter(|a| !occurring[&a.sorted_partition()].contains(a))
        .cloned()
        .collect();
    ReorderingReport {
        m,
        checked: all.len(),
        pass: violations.is_empty(),
        violations,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvacDualityReport {
    pub shape: Partition,
    pub n: u32,
    pub vertices: usize,
    pub subcomponents: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Evacuation maps every subcomponent of type `α` onto one of type `reverse(α)`, reverses
/// edges with `i ↦ n−i`, sends the source to the sink, and exchanges distance from the
/// source of `B(λ)_n` with distance to its sink.
pub fn check_evac_duality(shape: &Partition, n: u32) -> Result<EvacDualityReport> {
    let g = generate_crystal(shape, n);
    let d = decompose(&g);
    let mut failures = Vec::new();
    let mut image = Vec::with_capacity(g.len());
    for t in g.vertices() {
        let e = evacuate(t, n)?;
        match g.index_of(&e) {
            Some(k) => image.push(k),
            None => {
                failures.push(format!("EVAC({t}) = {e} is not a vertex"));
                image.push(usize::MAX);
            }
        }
    }
    if failures.is_empty() {
        for sub in &d.subcomponents {
            let targets: BTreeSet<usize> = sub
                .vertex_indices
                .iter()
                .map(|&v| d.component_of[image[v]])
                .collect();
            if targets.len() != 1 {
                failures.push(format!("subcomponent of {} is split by EVAC", sub.source));
                continue;
            }
            let target = &d.subcomponents[*targets.iter().next().unwrap()];
            if target.alpha != sub.alpha.reverse() || target.len() != sub.len() {
                failures.push(format!(
                    "subcomponent {} of type {} maps to type {}",
                    sub.source, sub.alpha, target.alpha
                ));
            }
            let sink = subcomponent_sink(target, n);
            if g.vertex(image[sub.source_index]) != &sink {
                failures.push(format!("source {} does not map to a sink", sub.source));
            }
        }
        for &(u, v, i) in g.edges() {
            if g.f(image[v], n - i) != Some(image[u]) {
                failures.push(format!(
                    "edge {} -{i}-> {} is not reversed with label {}",
                    g.vertex(u),
                    g.vertex(v),
                    n - i
                ));
            }
        }
        if let (Some(src), [sink]) = (g.source(), g.sinks().as_slice()) {
            let from_source = g.distances_from(src);
            let to_sink = g.distances_to(*sink);
            for v in 0..g.len() {
                if from_source[v] != to_sink[image[v]] {
                    failures.push(format!("depth of {} is not dual", g.vertex(v)));
                }
            }
        } else if !g.is_empty() {
            failures.push("crystal lacks a unique source and sink".into());
        }
    }
    Ok(EvacDualityReport {
        shape: shape.clone(),
        n,
        vertices: g.len(),
        subcomponents: d.subcomponents.len(),
        pass: failures.is_empty(),
        failures,
    })
}
