//! DOT and JSON renderings of crystals, skeletons and dual equivalence graphs.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::combinatorics::composition::Composition;
use crate::combinatorics::tableau::Tableau;
use crate::crystal::graph::CrystalGraph;
use crate::error::{Error, Result};
use crate::quasicrystal::Decomposition;
use crate::skeleton::dual::DualEquivalenceGraph;
use crate::skeleton::quotient::SkeletonGraph;

/// JSON layout of a crystal: `{vertices, edges: [[u,v,i]...], source, max_entry}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalJson {
    pub vertices: Vec<Tableau>,
    pub edges: Vec<(usize, usize, u32)>,
    pub source: Option<usize>,
    pub max_entry: u32,
}

pub fn crystal_to_json(g: &CrystalGraph<Tableau>) -> CrystalJson {
    CrystalJson {
        vertices: g.vertices().to_vec(),
        edges: g.edges().to_vec(),
        source: g.source(),
        max_entry: g.max_entry(),
    }
}

/// Rebuilds a crystal from its JSON form, checking the recorded source.
pub fn crystal_from_json(text: &str) -> Result<CrystalGraph<Tableau>> {
    let raw: CrystalJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("crystal JSON: {e}")))?;
    let g = CrystalGraph::from_parts(raw.vertices, raw.edges, raw.max_entry)?;
    if g.source() != raw.source {
        return Err(Error::Parse(format!(
            "recorded source {:?} differs from {:?}",
            raw.source,
            g.source()
        )));
    }
    Ok(g)
}

fn fnv1a(bytes: impl IntoIterator<Item = u8>) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// A colour that depends only on `{α, reverse(α)}`; the two members get different saturations.
pub fn composition_colour(alpha: &Composition) -> String {
    let rev = alpha.reverse();
    let key = alpha.clone().min(rev.clone());
    let h = fnv1a(key.parts().iter().flat_map(|p| (*p as u64).to_le_bytes()));
    let hue = (h % 1000) as f64 / 1000.0;
    let sat = if *alpha == rev {
        0.55
    } else if *alpha == key {
        0.35
    } else {
        0.75
    };
    format!("{hue:.3} {sat:.2} 0.95")
}

fn tableau_label(t: &Tableau) -> String {
    t.to_string().replace('/', "\\n")
}

/// DOT digraph with one node per tableau. With a decomposition, nodes are filled by
/// subcomponent type.
pub fn crystal_to_dot(g: &CrystalGraph<Tableau>, decomposition: Option<&Decomposition>) -> String {
    let mut out = String::from("digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n");
    for (k, t) in g.vertices().iter().enumerate() {
        let style = match decomposition {
            Some(d) => {
                let alpha = &d.subcomponents[d.component_of[k]].alpha;
                format!(
                    ", style=filled, fillcolor=\"{}\", tooltip=\"{}\"",
                    composition_colour(alpha),
                    alpha
                )
            }
            None => String::new(),
        };
        writeln!(out, "  v{k} [label=\"{}\"{style}];", tableau_label(t)).unwrap();
    }
    for &(u, v, i) in g.edges() {
        writeln!(out, "  v{u} -> v{v} [label=\"{i}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn skeleton_to_dot(s: &SkeletonGraph) -> String {
    let mut out = String::from("digraph skeleton {\n  node [shape=box, fontname=\"monospace\"];\n");
    for (k, t) in s.vertices.iter().enumerate() {
        writeln!(
            out,
            "  v{k} [label=\"{}\", style=filled, fillcolor=\"{}\"];",
            tableau_label(t),
            composition_colour(&crate::combinatorics::parsing::descent_composition(t))
        )
        .unwrap();
    }
    for &(u, v, i) in &s.edges {
        writeln!(out, "  v{u} -> v{v} [label=\"{i}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn dual_equivalence_to_dot(d: &DualEquivalenceGraph) -> String {
    let mut out =
        String::from("graph dual_equivalence {\n  node [shape=box, fontname=\"monospace\"];\n");
    for (k, t) in d.vertices.iter().enumerate() {
        writeln!(out, "  v{k} [label=\"{}\"];", tableau_label(t)).unwrap();
    }
    for &(u, v, i) in &d.edges {
        writeln!(out, "  v{u} -- v{v} [label=\"{i}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}
