//! Decomposition of `B(λ)_n` into subcomponents `B(T_α)` and the exact counting formulas.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::composition::{refines, Composition, WeightVector};
use crate::combinatorics::enumerate::enumerate_syt;
use crate::combinatorics::parsing::{
    descent_composition, sources_of_type, standard_descent_set, standardize_tableau,
};
use crate::combinatorics::partition::Partition;
use crate::combinatorics::tableau::Tableau;
use crate::crystal::graph::{generate_crystal, CrystalGraph};
use crate::error::{Error, Result};

/// A connected induced subgraph of a crystal whose vertices share one descent composition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subcomponent {
    pub alpha: Composition,
    /// Index in the host graph of the first vertex without incoming induced edges.
    pub source_index: usize,
    pub source: Tableau,
    /// Standardization of the source.
    pub standard: Tableau,
    /// Host vertex indices, increasing.
    pub vertex_indices: Vec<usize>,
    /// Host edges with both ends inside the subcomponent.
    pub induced_edges: Vec<(usize, usize, u32)>,
}

impl Subcomponent {
    pub fn len(&self) -> usize {
        self.vertex_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_indices.is_empty()
    }

    pub fn m(&self) -> usize {
        self.alpha.size()
    }

    pub fn s(&self) -> usize {
        self.alpha.len()
    }

    fn degrees(&self) -> (HashMap<usize, usize>, HashMap<usize, usize>) {
        let mut ins: HashMap<usize, usize> = self.vertex_indices.iter().map(|&v| (v, 0)).collect();
        let mut outs = ins.clone();
        for &(u, v, _) in &self.induced_edges {
            *outs.get_mut(&u).unwrap() += 1;
            *ins.get_mut(&v).unwrap() += 1;
        }
        (ins, outs)
    }

    /// Vertices with no incoming induced edge.
    pub fn induced_sources(&self) -> Vec<usize> {
        let (ins, _) = self.degrees();
        self.vertex_indices
            .iter()
            .copied()
            .filter(|v| ins[v] == 0)
            .collect()
    }

    /// Vertices with no outgoing induced edge.
    pub fn induced_sinks(&self) -> Vec<usize> {
        let (_, outs) = self.degrees();
        self.vertex_indices
            .iter()
            .copied()
            .filter(|v| outs[v] == 0)
            .collect()
    }

    /// Number of vertices on a longest directed path.
    pub fn height(&self) -> usize {
        let (mut ins, _) = self.degrees();
        let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
        for &(u, v, _) in &self.induced_edges {
            adj.entry(u).or_default().push(v);
        }
        let mut best: HashMap<usize, usize> = self.vertex_indices.iter().map(|&v| (v, 1)).collect();
        let mut queue: VecDeque<usize> = self
            .vertex_indices
            .iter()
            .copied()
            .filter(|v| ins[v] == 0)
            .collect();
        let mut seen = 0;
        while let Some(u) = queue.pop_front() {
            seen += 1;
            for &v in adj.get(&u).map(Vec::as_slice).unwrap_or(&[]) {
                let cand = best[&u] + 1;
                let b = best.get_mut(&v).unwrap();
                *b = (*b).max(cand);
                let d = ins.get_mut(&v).unwrap();
                *d -= 1;
                if *d == 0 {
                    queue.push_back(v);
                }
            }
        }
        assert_eq!(seen, self.len(), "crystal subgraphs are acyclic");
        best.values().copied().max().unwrap_or(0)
    }
}

/// Subcomponents of a crystal, plus the subcomponent index of every host vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub subcomponents: Vec<Subcomponent>,
    pub component_of: Vec<usize>,
}

impl Decomposition {
    /// Number of subcomponents of each type.
    pub fn multiplicities(&self) -> BTreeMap<Composition, usize> {
        let mut out = BTreeMap::new();
        for s in &self.subcomponents {
            *out.entry(s.alpha.clone()).or_insert(0) += 1;
        }
        out
    }
}

/// Groups vertices by descent composition, then splits each group into weakly connected
/// components of its induced subgraph. Ordered by `α`, then by source index.
pub fn decompose(g: &CrystalGraph<Tableau>) -> Decomposition {
    decompose_with(g, false)
}

pub fn decompose_with(g: &CrystalGraph<Tableau>, parallel: bool) -> Decomposition {
    let descomps: Vec<Composition> = if parallel {
        g.vertices().par_iter().map(descent_composition).collect()
    } else {
        g.vertices().iter().map(descent_composition).collect()
    };
    let n = g.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(u, v, _) in g.edges() {
        if descomps[u] == descomps[v] {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    let mut edges_of: HashMap<usize, Vec<(usize, usize, u32)>> = HashMap::new();
    for &(u, v, i) in g.edges() {
        if descomps[u] == descomps[v] {
            let r = find(&mut parent, u);
            edges_of.entry(r).or_default().push((u, v, i));
        }
    }
    let mut subs: Vec<Subcomponent> = groups
        .into_iter()
        .map(|(root, vertex_indices)| {
            let induced_edges = edges_of.remove(&root).unwrap_or_default();
            let mut has_in: HashMap<usize, bool> = HashMap::new();
            for &(_, v, _) in &induced_edges {
                has_in.insert(v, true);
            }
            let source_index = *vertex_indices
                .iter()
                .find(|v| !has_in.contains_key(v))
                .expect("a finite acyclic graph has a source");
            let source = g.vertex(source_index).clone();
            Subcomponent {
                alpha: descomps[root].clone(),
                source_index,
                standard: standardize_tableau(&source),
                source,
                vertex_indices,
                induced_edges,
            }
        })
        .collect();
    subs.sort_by(|a, b| (&a.alpha, a.source_index).cmp(&(&b.alpha, b.source_index)));
    let mut component_of = vec![0; n];
    for (k, s) in subs.iter().enumerate() {
        for &v in &s.vertex_indices {
            component_of[v] = k;
        }
    }
    Decomposition {
        subcomponents: subs,
        component_of,
    }
}

/// The source with every entry `i` replaced by `n − s + i`.
pub fn subcomponent_sink(sub: &Subcomponent, n: u32) -> Tableau {
    let shift = n - sub.s() as u32;
    sub.source.map_entries(|v| v + shift)
}

/// `B(m)_{n−s+1}` with `m = |α|` and `s = ℓ(α)`.
pub fn canonical_quasicrystal(alpha: &Composition, n: u32) -> Result<CrystalGraph<Tableau>> {
    let s = alpha.len() as u32;
    if s > n || alpha.is_empty() {
        return Err(Error::InvalidParameters(format!(
            "composition {alpha} has more than {n} parts"
        )));
    }
    Ok(generate_crystal(&Partition::row(alpha.size()), n - s + 1))
}

/// Outcome of checking the explicit isomorphism onto `B(m)_{n−s+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub ok: bool,
    /// Pairs `(host vertex, canonical vertex)`.
    pub bijection: Vec<(usize, usize)>,
    pub counterexample: Option<String>,
}

/// Sends each vertex to the one-row tableau obtained by listing its entries in the order of
/// the standard labels and subtracting from each entry the index of its band. Edge labels
/// map `i ↦ i − b` where `b` is the band of the modified cell.
pub fn verify_subcomponent_iso(
    sub: &Subcomponent,
    host: &CrystalGraph<Tableau>,
    n: u32,
) -> Result<IsoReport> {
    let canonical = canonical_quasicrystal(&sub.alpha, n)?;
    Ok(verify_subcomponent_iso_with(sub, host, &canonical))
}

/// As [`verify_subcomponent_iso`], reusing a prebuilt canonical quasicrystal.
pub fn verify_subcomponent_iso_with(
    sub: &Subcomponent,
    host: &CrystalGraph<Tableau>,
    canonical: &CrystalGraph<Tableau>,
) -> IsoReport {
    let fail = |bijection, msg: String| IsoReport {
        ok: false,
        bijection,
        counterexample: Some(msg),
    };
    let pos = sub.standard.positions_of_standard();
    let descents = standard_descent_set(&sub.standard);
    let band_of_label: Vec<u32> = (1..=pos.len())
        .map(|k| descents.iter().filter(|&&d| d < k).count() as u32)
        .collect();
    let top = canonical.max_entry();
    let mut image: HashMap<usize, usize> = HashMap::new();
    let mut bijection = Vec::with_capacity(sub.len());
    let mut used = vec![false; canonical.len()];
    for &v in &sub.vertex_indices {
        let t = host.vertex(v);
        let row: Vec<u32> = pos
            .iter()
            .zip(&band_of_label)
            .map(|(&(r, c), &b)| t.rows()[r][c].wrapping_sub(b))
            .collect();
        if row.iter().any(|&x| x == 0 || x > top) || row.windows(2).any(|w| w[0] > w[1]) {
            return fail(
                bijection,
                format!("{t} does not map to a tableau of B(m)_{top}"),
            );
        }
        let Some(k) = canonical.index_of(&Tableau::from_rows_unchecked(vec![row])) else {
            return fail(bijection, format!("{t} has no image"));
        };
        if std::mem::replace(&mut used[k], true) {
            return fail(bijection, format!("{t} collides with another vertex"));
        }
        image.insert(v, k);
        bijection.push((v, k));
    }
    if bijection.len() != canonical.len() {
        return fail(
            bijection,
            format!(
                "{} vertices against {} in B(m)_{top}",
                sub.len(),
                canonical.len()
            ),
        );
    }
    if sub.induced_edges.len() != canonical.edges().len() {
        return fail(
            bijection,
            format!(
                "{} induced edges against {} in B(m)_{top}",
                sub.induced_edges.len(),
                canonical.edges().len()
            ),
        );
    }
    for &(u, v, i) in &sub.induced_edges {
        let (tu, tv) = (host.vertex(u), host.vertex(v));
        let changed = pos
            .iter()
            .position(|&(r, c)| tu.rows()[r][c] != tv.rows()[r][c])
            .expect("an edge changes one cell");
        let label = i as i64 - band_of_label[changed] as i64;
        if label < 1 || canonical.f(image[&u], label as u32) != Some(image[&v]) {
            return fail(
                bijection,
                format!("edge {tu} -{i}-> {tv} has no image with label {label}"),
            );
        }
    }
    IsoReport {
        ok: true,
        bijection,
        counterexample: None,
    }
}

/// Checks that matching vertices of equal weight is a label-preserving isomorphism.
pub fn weight_matching_isomorphism(
    a: &Subcomponent,
    b: &Subcomponent,
    host: &CrystalGraph<Tableau>,
) -> bool {
    if a.len() != b.len() || a.induced_edges.len() != b.induced_edges.len() {
        return false;
    }
    let n = host.max_entry();
    let by_weight: HashMap<WeightVector, usize> = b
        .vertex_indices
        .iter()
        .map(|&v| (host.vertex(v).weight(n), v))
        .collect();
    if by_weight.len() != b.len() {
        return false;
    }
    let mut map = HashMap::new();
    for &v in &a.vertex_indices {
        match by_weight.get(&host.vertex(v).weight(n)) {
            Some(&w) => {
                map.insert(v, w);
            }
            None => return false,
        }
    }
    a.induced_edges
        .iter()
        .all(|&(u, v, i)| host.f(map[&u], i) == Some(map[&v]))
}

fn binomial(n: BigUint, k: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for j in 0..k {
        acc = acc * (&n - BigUint::from(j)) / BigUint::from(j + 1);
    }
    acc
}

/// `|B(m)_k| = C(m+k−1, k−1)`.
pub fn count_bm(m: usize, k: usize) -> BigUint {
    if k == 0 {
        return BigUint::zero();
    }
    binomial(BigUint::from(m + k - 1), m.min(k - 1))
}

/// `f^λ_d`: number of standard tableaux of shape `λ` with `d` descents, indexed by `d`.
pub fn descent_census(shape: &Partition) -> Vec<usize> {
    let mut census = Vec::new();
    for t in enumerate_syt(shape) {
        let d = standard_descent_set(&t).len();
        if census.len() <= d {
            census.resize(d + 1, 0);
        }
        census[d] += 1;
    }
    census
}

/// `|SSYT(λ)_n| = Σ_d f^λ_d · C(|λ|+n−d−1, n−d−1)`.
pub fn count_ssyt_formula(shape: &Partition, n: impl Into<BigUint>) -> BigUint {
    let n: BigUint = n.into();
    let m = shape.size();
    descent_census(shape)
        .into_iter()
        .enumerate()
        .filter(|&(d, f)| f > 0 && n > BigUint::from(d))
        .map(|(d, f)| {
            let top = &n + BigUint::from(m) - BigUint::from(d + 1);
            binomial(top, m) * BigUint::from(f)
        })
        .sum()
}

/// `K^λ_μ` as the number of standard tableaux of shape `λ` whose descent composition is
/// refined by `μ`.
pub fn kostka(shape: &Partition, mu: &Composition) -> Result<u64> {
    if shape.size() != mu.size() {
        return Err(Error::InvalidParameters(format!(
            "|{shape}| = {} but |{mu}| = {}",
            shape.size(),
            mu.size()
        )));
    }
    Ok(enumerate_syt(shape)
        .iter()
        .filter(|t| refines(&descent_composition(t), mu))
        .count() as u64)
}

/// `K^λ_μ` for a weight with possible zero entries.
pub fn kostka_weight(shape: &Partition, mu: &WeightVector) -> Result<u64> {
    kostka(shape, &mu.strip_zeros())
}

/// The tableau of the subcomponent with weight `mu`, if any: the cells are filled in the
/// order of the standard labels with `1^{μ₁} 2^{μ₂} …`, and the filling must stand in the
/// same band structure.
pub fn weight_vertex(sub: &Subcomponent, mu: &WeightVector) -> Option<Tableau> {
    if mu.size() != sub.m() {
        return None;
    }
    let values: Vec<u32> = mu
        .counts()
        .iter()
        .enumerate()
        .flat_map(|(j, &c)| std::iter::repeat_n(j as u32 + 1, c))
        .collect();
    let pos = sub.standard.positions_of_standard();
    let mut rows: Vec<Vec<u32>> = sub
        .standard
        .rows()
        .iter()
        .map(|r| vec![0; r.len()])
        .collect();
    for (&(r, c), &v) in pos.iter().zip(&values) {
        rows[r][c] = v;
    }
    let t = Tableau::new(rows).ok()?;
    (standardize_tableau(&t) == sub.standard).then_some(t)
}

/// 1 if the weight occurs in the subcomponent, else 0.
pub fn weight_multiplicity_in_subcomponent(sub: &Subcomponent, mu: &WeightVector) -> usize {
    usize::from(weight_vertex(sub, mu).is_some())
}

/// Necessary conditions on a descent composition of `λ`, and whether `α` actually occurs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionsReport {
    pub shape: Partition,
    pub alpha: Composition,
    pub n: Option<u32>,
    /// `1 ≤ α_i ≤ λ₁`.
    pub parts_bounded: bool,
    /// `α₁+…+α_j ≤ λ₁+…+λ_j` for all `j`.
    pub dominated: bool,
    /// `s ≤ λ₂+…+λ_ℓ + 1`.
    pub length_bounded_by_lower_rows: bool,
    /// `ℓ ≤ s`, and `s ≤ n` when `n` is given.
    pub length_between: bool,
    /// `s ≤ k`, read with `k = |λ|`.
    pub length_at_most_size: bool,
    pub note: String,
    pub all_conditions: bool,
    pub occurs: bool,
    pub multiplicity: usize,
}

pub fn check_descent_composition_conditions(
    shape: &Partition,
    alpha: &Composition,
    n: Option<u32>,
) -> ConditionsReport {
    let lam = shape.parts();
    let a = alpha.parts();
    let s = a.len();
    let parts_bounded = a.iter().all(|&x| x >= 1 && x <= shape.part(0));
    let dominated = (1..=s.max(lam.len()))
        .all(|j| a.iter().take(j).sum::<usize>() <= lam.iter().take(j).sum::<usize>());
    let lower: usize = lam.iter().skip(1).sum();
    let length_bounded_by_lower_rows = s <= lower + 1;
    let length_between = shape.len() <= s && n.is_none_or(|n| s <= n as usize);
    let length_at_most_size = s <= shape.size();
    let multiplicity = sources_of_type(shape, alpha).len();
    let all_conditions = parts_bounded
        && dominated
        && length_bounded_by_lower_rows
        && length_between
        && length_at_most_size
        && shape.size() == alpha.size();
    ConditionsReport {
        shape: shape.clone(),
        alpha: alpha.clone(),
        n,
        parts_bounded,
        dominated,
        length_bounded_by_lower_rows,
        length_between,
        length_at_most_size,
        note: "the last condition bounds s by an unspecified k; it is read as k = |λ|".into(),
        all_conditions,
        occurs: multiplicity > 0,
        multiplicity,
    }
}

/// Converts a count to `u64` when it fits.
pub fn to_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn decomposition_of_43() {
        let g = generate_crystal(&p("4,3"), 4);
        let d = decompose(&g);
        assert_eq!(d.subcomponents.len(), 14);
        let mult = d.multiplicities();
        assert_eq!(mult.len(), 13);
        assert_eq!(mult[&c("2,3,2")], 2);
    }

    #[test]
    fn one_row_is_one_subcomponent() {
        let g = generate_crystal(&Partition::row(3), 3);
        let d = decompose(&g);
        assert_eq!(d.subcomponents.len(), 1);
        assert_eq!(d.subcomponents[0].len(), g.len());
    }

    #[test]
    fn small_decomposition() {
        let g = generate_crystal(&p("2,1"), 3);
        let mult = decompose(&g).multiplicities();
        assert_eq!(mult, BTreeMap::from([(c("1,2"), 1), (c("2,1"), 1)]));
    }

    #[test]
    fn sinks_heights_and_iso() {
        let g = generate_crystal(&p("4,3"), 4);
        for sub in decompose(&g).subcomponents {
            let sinks = sub.induced_sinks();
            assert_eq!(sinks.len(), 1);
            assert_eq!(g.vertex(sinks[0]), &subcomponent_sink(&sub, 4));
            assert_eq!(sub.height(), sub.m() * (4 - sub.s()) + 1);
            let rep = verify_subcomponent_iso(&sub, &g, 4).unwrap();
            assert!(rep.ok, "{:?}", rep.counterexample);
        }
        let hw = decompose(&g)
            .subcomponents
            .into_iter()
            .find(|s| s.alpha == c("4,3"))
            .unwrap();
        assert_eq!(subcomponent_sink(&hw, 4).to_string(), "3333/444");
    }

    #[test]
    fn canonical_sizes() {
        assert_eq!(canonical_quasicrystal(&c("2,3,2"), 4).unwrap().len(), 8);
        assert_eq!(canonical_quasicrystal(&c("4,3"), 4).unwrap().len(), 36);
        assert_eq!(canonical_quasicrystal(&c("1,1,1"), 3).unwrap().len(), 1);
        assert!(canonical_quasicrystal(&c("1,1,1"), 2).is_err());
    }

    #[test]
    fn counting() {
        assert_eq!(count_bm(10, 5), BigUint::from(1001u32));
        assert_eq!(count_bm(4, 1), BigUint::from(1u32));
        assert_eq!(count_bm(7, 2), BigUint::from(8u32));
        assert_eq!(descent_census(&p("4,3")), vec![0, 2, 8, 4]);
        let counts: Vec<u64> = (4..=7u32)
            .map(|n| to_u64(&count_ssyt_formula(&p("4,3"), n)).unwrap())
            .collect();
        assert_eq!(counts, vec![140, 560, 1764, 4704]);
        assert!(count_ssyt_formula(&p("1,1,1"), 2u32).is_zero());
    }

    #[test]
    fn kostka_numbers() {
        assert_eq!(kostka(&p("2,1"), &c("1,1,1")).unwrap(), 2);
        assert_eq!(kostka(&p("3,2"), &c("3,2")).unwrap(), 1);
        assert!(kostka(&p("3,2"), &c("3")).is_err());
        assert_eq!(
            kostka_weight(&p("2,1"), &"1,0,1,1".parse().unwrap()).unwrap(),
            2
        );
    }

    #[test]
    fn weights_in_subcomponents() {
        let g = generate_crystal(&p("4,3"), 4);
        let d = decompose(&g);
        for sub in d.subcomponents.iter().filter(|s| s.alpha == c("2,3,2")) {
            let mu: WeightVector = "2,1,2,2".parse().unwrap();
            let t = weight_vertex(sub, &mu).unwrap();
            assert!(sub.vertex_indices.contains(&g.index_of(&t).unwrap()));
            assert_eq!(
                weight_multiplicity_in_subcomponent(sub, &"3,2,2".parse().unwrap()),
                0
            );
            assert_eq!(
                weight_multiplicity_in_subcomponent(sub, &"2,3,2".parse().unwrap()),
                1
            );
        }
        let pair: Vec<&Subcomponent> = d
            .subcomponents
            .iter()
            .filter(|s| s.alpha == c("2,3,2"))
            .collect();
        assert!(weight_matching_isomorphism(pair[0], pair[1], &g));
    }

    #[test]
    fn conditions() {
        let r = check_descent_composition_conditions(&p("3,3"), &c("1,2,3"), None);
        assert!(r.all_conditions);
        assert!(!r.occurs);
        let r = check_descent_composition_conditions(&p("4,3"), &c("2,3,2"), Some(4));
        assert!(r.all_conditions && r.occurs);
        assert_eq!(r.multiplicity, 2);
        let r = check_descent_composition_conditions(&p("4,3"), &c("4,3"), Some(4));
        assert!(r.occurs);
    }
}
