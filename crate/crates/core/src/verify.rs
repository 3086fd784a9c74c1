//! Exhaustive theorem suites and conjecture checks, reported as structured data.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::composition::{Composition, WeightVector};
use crate::combinatorics::enumerate::{enumerate_ssyt, enumerate_syt, partitions_of};
use crate::combinatorics::parsing::{descent_composition, standardize_tableau};
use crate::combinatorics::partition::Partition;
use crate::combinatorics::tableau::Tableau;
use crate::combinatorics::word::{word_descent_composition, Word};
use crate::correspondences::evac::{evacuate, rot_word, rsk_of_rot};
use crate::correspondences::rsk::{rsk, rsk_inverse};
use crate::crystal::graph::{generate_crystal, generate_crystal_par};
use crate::crystal::operators::{e_tableau, f_tableau, f_word};
use crate::quasicrystal::{
    canonical_quasicrystal, count_ssyt_formula, decompose_with, kostka, subcomponent_sink,
    verify_subcomponent_iso_with,
};
use crate::skeleton::checks::{
    check_dual_equivalence_conjecture, check_evac_duality, check_reordering_conjecture,
    check_skeleton_structure,
};
use crate::skeleton::quotient::{build_skeleton, skeleton_stable};
use crate::symfunc::expansion::SchurExpansion;
use crate::symfunc::schurify::{schur_to_f, schurify};

const MAX_WITNESSES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SectionKind {
    Theorem,
    Conjecture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Theorems,
    Conjectures,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    pub kind: SectionKind,
    pub checked: usize,
    pub failure_count: usize,
    /// At most twenty failure descriptions.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    /// `pass`/`fail` for theorems, `consistent`/`counterexample` for conjectures.
    pub status: String,
}

impl Section {
    fn new(name: &str, kind: SectionKind) -> Self {
        Section {
            name: name.into(),
            kind,
            checked: 0,
            failure_count: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            status: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_WITNESSES {
                self.failures.push(what());
            }
        }
    }

    fn merge(&mut self, other: Section) {
        self.checked += other.checked;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_WITNESSES {
                self.failures.push(f);
            }
        }
        self.notes.extend(other.notes);
    }

    fn finish(mut self) -> Self {
        let ok = self.failure_count == 0;
        self.status = match (self.kind, ok) {
            (SectionKind::Theorem, true) => "pass",
            (SectionKind::Theorem, false) => "fail",
            (SectionKind::Conjecture, true) => "consistent",
            (SectionKind::Conjecture, false) => "counterexample",
        }
        .into();
        self
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckConfig {
    /// Largest `|λ|` examined.
    pub max_size: usize,
    /// Largest alphabet bound for crystal-based suites.
    pub max_entry: u32,
    pub parallel: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            max_size: 6,
            max_entry: 4,
            parallel: false,
        }
    }
}

/// Result of a `check` run. The wall time is kept out of the serialized payload.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub sections: Vec<Section>,
    pub theorems_pass: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

fn shapes(max_size: usize) -> Vec<Partition> {
    (1..=max_size)
        .flat_map(|m| partitions_of(m, None))
        .collect()
}

/// Runs `f` on every shape, in parallel if asked, merging in shape order.
fn per_shape(
    name: &str,
    kind: SectionKind,
    shapes: &[Partition],
    parallel: bool,
    f: impl Fn(&Partition, &mut Section) + Sync,
) -> Section {
    let run = |lam: &Partition| {
        let mut s = Section::new(name, kind);
        f(lam, &mut s);
        s
    };
    let parts: Vec<Section> = if parallel {
        shapes.par_iter().map(run).collect()
    } else {
        shapes.iter().map(run).collect()
    };
    let mut out = Section::new(name, kind);
    for p in parts {
        out.merge(p);
    }
    out.finish()
}

fn crystal_structure(cfg: &CheckConfig) -> Section {
    per_shape(
        "crystal_structure",
        SectionKind::Theorem,
        &shapes(cfg.max_size),
        cfg.parallel,
        |lam, s| {
            for n in lam.len() as u32..=cfg.max_entry {
                let g = if cfg.parallel {
                    generate_crystal_par(lam, n)
                } else {
                    generate_crystal(lam, n)
                };
                let brute: HashSet<Tableau> = enumerate_ssyt(lam, n).into_iter().collect();
                let verts: HashSet<Tableau> = g.vertices().iter().cloned().collect();
                s.check(g.len() == brute.len() && verts == brute, || {
                    format!("B({lam})_{n}: vertex set differs from SSYT enumeration")
                });
                s.check(g.sources() == vec![0] && g.sinks().len() == 1, || {
                    format!("B({lam})_{n}: source/sink not unique")
                });
                s.check(g.vertex(0) == &Tableau::highest_weight(lam), || {
                    format!("B({lam})_{n}: source is not 1_λ")
                });
                let base = Tableau::highest_weight(lam).weight(n).moment();
                let dist = g.distances_from(0);
                for (k, t) in g.vertices().iter().enumerate() {
                    s.check(dist[k] == Some(t.weight(n).moment() - base), || {
                        format!("B({lam})_{n}: depth law fails at {t}")
                    });
                    let w = t
                        .reading_word()
                        .with_alphabet_bound(n)
                        .expect("entries bounded by n");
                    for i in 1..n {
                        let ft = f_tableau(t, i);
                        let fw = f_word(&w, i);
                        s.check(
                            ft.as_ref().map(Tableau::reading_letters)
                                == fw.map(|x| x.letters().to_vec()),
                            || format!("reading word does not commute with f_{i} at {t}"),
                        );
                        if let Some(u) = ft {
                            s.check(Tableau::new(u.rows().to_vec()).is_ok(), || {
                                format!("f_{i}({t}) is not semistandard")
                            });
                            s.check(e_tableau(&u, i).as_ref() == Some(t), || {
                                format!("e_{i} does not invert f_{i} at {t}")
                            });
                        }
                    }
                }
            }
        },
    )
}

fn decomposition(cfg: &CheckConfig) -> Section {
    per_shape(
        "quasicrystal_decomposition",
        SectionKind::Theorem,
        &shapes(cfg.max_size),
        cfg.parallel,
        |lam, s| {
            let mut syt_counts: BTreeMap<Composition, usize> = BTreeMap::new();
            for t in enumerate_syt(lam) {
                *syt_counts.entry(descent_composition(&t)).or_insert(0) += 1;
            }
            let base = Tableau::highest_weight(lam).weight(1).moment();
            for n in lam.len() as u32..=cfg.max_entry {
                let g = generate_crystal(lam, n);
                let d = decompose_with(&g, cfg.parallel);
                let total: usize = d.subcomponents.iter().map(|x| x.len()).sum();
                s.check(total == g.len(), || {
                    format!("B({lam})_{n}: subcomponents do not partition")
                });
                let expected: BTreeMap<Composition, usize> = syt_counts
                    .iter()
                    .filter(|(a, _)| a.len() <= n as usize)
                    .map(|(a, &c)| (a.clone(), c))
                    .collect();
                s.check(d.multiplicities() == expected, || {
                    format!("B({lam})_{n}: multiplicities differ from SYT counts")
                });
                let mut canon: HashMap<Composition, _> = HashMap::new();
                let dist = g.distances_from(0);
                let mut depth_by_alpha: HashMap<&Composition, HashSet<Option<usize>>> =
                    HashMap::new();
                for sub in &d.subcomponents {
                    let src = sub.induced_sources();
                    s.check(src == vec![sub.source_index], || {
                        format!(
                            "B({lam})_{n}: subcomponent {} has sources {src:?}",
                            sub.alpha
                        )
                    });
                    s.check(sub.source.weight(n) == pad(&sub.alpha, n), || {
                        format!("source {} does not have weight {}", sub.source, sub.alpha)
                    });
                    s.check(
                        sub.vertex_indices.iter().all(|&v| {
                            let t = g.vertex(v);
                            descent_composition(t) == sub.alpha
                                && standardize_tableau(t) == sub.standard
                        }),
                        || format!("subcomponent {} mixes standardizations", sub.source),
                    );
                    let sinks = sub.induced_sinks();
                    s.check(
                        sinks.len() == 1 && g.vertex(sinks[0]) == &subcomponent_sink(sub, n),
                        || format!("subcomponent {} has the wrong sink", sub.source),
                    );
                    s.check(sub.height() == sub.m() * (n as usize - sub.s()) + 1, || {
                        format!("subcomponent {} has height {}", sub.source, sub.height())
                    });
                    let c = canon
                        .entry(sub.alpha.clone())
                        .or_insert_with(|| canonical_quasicrystal(&sub.alpha, n).expect("s ≤ n"));
                    let rep = verify_subcomponent_iso_with(sub, &g, c);
                    s.check(rep.ok, || {
                        format!(
                            "isomorphism fails for {}: {:?}",
                            sub.source, rep.counterexample
                        )
                    });
                    depth_by_alpha
                        .entry(&sub.alpha)
                        .or_default()
                        .insert(dist[sub.source_index]);
                    let expected_depth = pad(&sub.alpha, n).moment() - base;
                    s.check(dist[sub.source_index] == Some(expected_depth), || {
                        format!("source {} lies at the wrong depth", sub.source)
                    });
                }
                s.check(depth_by_alpha.values().all(|v| v.len() == 1), || {
                    format!("B({lam})_{n}: sources of one type lie at different depths")
                });
            }
        },
    )
}

fn pad(alpha: &Composition, n: u32) -> WeightVector {
    let mut w = alpha.parts().to_vec();
    w.resize((n as usize).max(w.len()), 0);
    WeightVector(w)
}

fn counting(cfg: &CheckConfig) -> Section {
    let lams = shapes(cfg.max_size.min(7));
    per_shape(
        "counting",
        SectionKind::Theorem,
        &lams,
        cfg.parallel,
        |lam, s| {
            for n in 1..=6u32 {
                let brute = enumerate_ssyt(lam, n).len();
                s.check(count_ssyt_formula(lam, n) == brute.into(), || {
                    format!("|SSYT({lam})_{n}| formula differs from {brute}")
                });
            }
            let m = lam.size();
            let mut by_weight: HashMap<WeightVector, u64> = HashMap::new();
            for t in enumerate_ssyt(lam, m as u32) {
                *by_weight.entry(t.weight(m as u32)).or_insert(0) += 1;
            }
            for mu in crate::combinatorics::enumerate::compositions_of(m) {
                let k = kostka(lam, &mu).expect("sizes agree");
                let brute = by_weight.get(&pad(&mu, m as u32)).copied().unwrap_or(0);
                s.check(k == brute, || {
                    format!("K^{lam}_{mu} = {k}, brute force {brute}")
                });
            }
        },
    )
}

fn evacuation(cfg: &CheckConfig) -> Section {
    per_shape(
        "evacuation",
        SectionKind::Theorem,
        &shapes(cfg.max_size.min(5)),
        cfg.parallel,
        |lam, s| {
            for n in lam.len() as u32..=cfg.max_entry {
                let g = generate_crystal(lam, n);
                for t in g.vertices() {
                    let e = evacuate(t, n).expect("entries bounded by n");
                    s.check(e.shape() == t.shape(), || {
                        format!("EVAC({t}) changes shape")
                    });
                    s.check(evacuate(&e, n).ok().as_ref() == Some(t), || {
                        format!("EVAC is not an involution at {t}")
                    });
                    s.check(
                        descent_composition(&e) == descent_composition(t).reverse(),
                        || format!("EVAC({t}) does not reverse the descent composition"),
                    );
                    for i in 1..n {
                        let lhs = f_tableau(t, i).map(|x| evacuate(&x, n).expect("bounded"));
                        let rhs = e_tableau(&e, n - i);
                        s.check(lhs == rhs, || {
                            format!("EVAC∘f_{i} ≠ e_{}∘EVAC at {t}", n - i)
                        });
                    }
                }
                match check_evac_duality(lam, n) {
                    Ok(r) => {
                        let failures = r.failures;
                        s.check(r.pass, || format!("B({lam})_{n}: {failures:?}"))
                    }
                    Err(e) => s.check(false, || e.to_string()),
                }
            }
        },
    )
}

fn all_words(n: u32, len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u32>| {
                (1..=n).map(move |l| {
                    let mut x = w.clone();
                    x.push(l);
                    x
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|l| Word::new(l, n).expect("letters in range"))
        .collect()
}

fn rsk_rot(cfg: &CheckConfig) -> Section {
    let mut s = Section::new("rsk_and_rot", SectionKind::Theorem);
    let max_len = cfg.max_size.min(7);
    for n in 1..=3u32 {
        for len in 1..=max_len {
            for w in all_words(n, len) {
                let pair = rsk(&w).expect("non-empty");
                s.check(
                    crate::combinatorics::parsing::standard_descent_set(&pair.q) == w.descent_set(),
                    || format!("Des(Q) ≠ Des(w) for {w}"),
                );
                s.check(
                    rsk_inverse(&pair)
                        .ok()
                        .map(|x| x.letters().to_vec())
                        .as_deref()
                        == Some(w.letters()),
                    || format!("RSK inverse fails for {w}"),
                );
                for i in 1..n {
                    if let Some(fw) = f_word(&w, i) {
                        let lhs = rsk(&fw).expect("non-empty").p;
                        s.check(Some(lhs) == f_tableau(&pair.p, i), || {
                            format!("P(f_{i}(w)) ≠ f_{i}(P(w)) for {w}")
                        });
                    }
                }
                let r = rot_word(&w);
                s.check(rot_word(&r) == w, || {
                    format!("Rot is not an involution at {w}")
                });
                s.check(
                    word_descent_composition(&r).ok()
                        == word_descent_composition(&w).ok().map(|c| c.reverse()),
                    || format!("Rot does not reverse the descent composition of {w}"),
                );
                s.check(rsk_of_rot(&w).map(|x| x.holds()).unwrap_or(false), || {
                    format!("RSK(Rot(w)) ≠ (EVAC P, EVAC Q) for {w}")
                });
            }
        }
    }
    s.finish()
}

fn schurification(cfg: &CheckConfig) -> Section {
    per_shape(
        "schurify_round_trip",
        SectionKind::Theorem,
        &shapes(cfg.max_size),
        cfg.parallel,
        |lam, s| {
            let got = schurify(&schur_to_f(lam));
            s.check(got == Ok(SchurExpansion::single(lam.clone(), 1)), || {
                format!("schurify(s_{lam}) = {got:?}")
            });
        },
    )
}

fn skeleton_theorem(cfg: &CheckConfig) -> Section {
    per_shape(
        "skeleton",
        SectionKind::Theorem,
        &shapes(cfg.max_size),
        cfg.parallel,
        |lam, s| {
            let stable = match skeleton_stable(lam) {
                Ok(k) => k,
                Err(e) => return s.check(false, || e.to_string()),
            };
            let big_s = stable.s_max as u32;
            for n in big_s..=big_s + 2 {
                s.check(build_skeleton(lam, n).same_graph(&stable), || {
                    format!("Skeleton({lam})_{n} differs from Skeleton({lam})")
                });
            }
            for n in 1..big_s {
                s.check(
                    build_skeleton(lam, n).same_graph(&stable.restrict_to_length(n as usize)),
                    || format!("Skeleton({lam})_{n} is not the induced subgraph"),
                );
            }
            for &(u, v, _) in &stable.edges {
                s.check(stable.descents(u).abs_diff(stable.descents(v)) <= 1, || {
                    format!("Skeleton({lam}) edge {u}->{v} jumps descent counts")
                });
            }
        },
    )
}

fn reordering(cfg: &CheckConfig) -> Section {
    let mut s = Section::new("reordering_conjecture", SectionKind::Conjecture);
    for m in 1..=cfg.max_size {
        let r = check_reordering_conjecture(m);
        s.checked += r.checked - 1;
        let v = r.violations;
        s.check(v.is_empty(), || format!("m = {m}: {v:?}"));
    }
    s.finish()
}

fn structure(cfg: &CheckConfig) -> Section {
    let mut s = per_shape(
        "skeleton_layers_conjecture",
        SectionKind::Conjecture,
        &shapes(cfg.max_size),
        cfg.parallel,
        |lam, s| match check_skeleton_structure(lam) {
            Ok(r) => {
                let detail = format!(
                    "{lam}: layers {:?}, multi-edges {:?}",
                    r.layers, r.multi_edges_within_layers
                );
                s.check(r.pass, || detail)
            }
            Err(e) => s.check(false, || e.to_string()),
        },
    );
    s.notes.push(
        "a layer is a union of even cycles when, after removing at most two source/sink \
         vertices per cycle block, each block is connected, bipartite and bridgeless"
            .into(),
    );
    s
}

fn dual_equivalence(cfg: &CheckConfig) -> Section {
    let mut s = per_shape(
        "dual_equivalence_conjecture",
        SectionKind::Conjecture,
        &shapes(cfg.max_size),
        cfg.parallel,
        |lam, s| match check_dual_equivalence_conjecture(lam) {
            Ok(r) => {
                let v = r.violations;
                s.check(v.is_empty(), || format!("{lam}: {v:?}"))
            }
            Err(e) => s.check(false, || e.to_string()),
        },
    );
    s.notes.push(
        "skeleton multiplicity counts ordered edges per unordered pair; the 'at least r' \
         reading is used for the first clause"
            .into(),
    );
    s
}

/// Runs the selected suites on every partition of size at most `max_size`.
pub fn run_checks(cfg: &CheckConfig, which: Which) -> RunReport {
    let start = std::time::Instant::now();
    let mut sections = Vec::new();
    if matches!(which, Which::Theorems | Which::All) {
        sections.push(crystal_structure(cfg));
        sections.push(decomposition(cfg));
        sections.push(counting(cfg));
        sections.push(evacuation(cfg));
        sections.push(rsk_rot(cfg));
        sections.push(schurification(cfg));
        sections.push(skeleton_theorem(cfg));
    }
    if matches!(which, Which::Conjectures | Which::All) {
        sections.push(reordering(cfg));
        sections.push(structure(cfg));
        sections.push(dual_equivalence(cfg));
    }
    let theorems_pass = sections
        .iter()
        .filter(|s| s.kind == SectionKind::Theorem)
        .all(Section::passed);
    let parameters = BTreeMap::from([
        ("max_size".to_string(), cfg.max_size.to_string()),
        ("max_entry".to_string(), cfg.max_entry.to_string()),
        ("which".to_string(), format!("{which:?}").to_lowercase()),
    ]);
    RunReport {
        command: "check".into(),
        parameters,
        sections,
        theorems_pass,
        wall_time: start.elapsed(),
    }
}
