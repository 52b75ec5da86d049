use serde::{Deserialize, Serialize};

use taumute::bqa::{Algebra, Arrow, Quiver, Relation};
use taumute::exactla::parse_scalar;
use taumute::repcat::{radical, IndecId, Rep};
use taumute::taut::{Edge, ExchangePoset, StPair, TauTilting};

use crate::names::{indec_name, pair_name, slot_name};
use crate::{CliError, CliResult};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub vertices: usize,
    pub arrows: Vec<ArrowEntry>,
    #[serde(default)]
    pub relations: Vec<Vec<TermEntry>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowEntry {
    pub name: String,
    /// 1-based.
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermEntry {
    pub coef: String,
    /// Arrow names in traversal order.
    pub path: Vec<String>,
}

fn json_error(e: serde_json::Error) -> CliError {
    CliError::Input(format!("parse error at line {}, column {}: {e}", e.line(), e.column()))
}

pub fn parse_algebra(text: &str) -> CliResult<Algebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(json_error)?;
    algebra_from_file(&file)
}

pub fn algebra_from_file(file: &AlgebraFile) -> CliResult<Algebra> {
    let n = file.vertices;
    let mut arrows = Vec::new();
    for a in &file.arrows {
        for v in [a.from, a.to] {
            if v == 0 || v > n {
                return Err(CliError::Input(format!("arrow {}: vertex {v} out of range 1..{n}", a.name)));
            }
        }
        arrows.push(Arrow { name: a.name.clone(), source: a.from - 1, target: a.to - 1 });
    }
    let quiver = Quiver::new(n, arrows)?;
    let mut relations = Vec::new();
    for (k, rel) in file.relations.iter().enumerate() {
        let mut terms = Vec::new();
        for t in rel {
            let c = parse_scalar(&t.coef).map_err(|e| CliError::Input(format!("relation {}: {e}", k + 1)))?;
            let path = t
                .path
                .iter()
                .map(|name| {
                    quiver
                        .arrow_index(name)
                        .ok_or_else(|| CliError::Input(format!("relation {}: unknown arrow '{name}'", k + 1)))
                })
                .collect::<CliResult<Vec<_>>>()?;
            terms.push((c, path));
        }
        relations.push(Relation { terms });
    }
    Ok(Algebra::build(quiver, relations)?)
}

pub fn algebra_to_file(alg: &Algebra) -> AlgebraFile {
    let q = alg.quiver();
    let name = |a: usize| q.arrows()[a].name.clone();
    AlgebraFile {
        vertices: q.vertex_count(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| ArrowEntry { name: a.name.clone(), from: a.source + 1, to: a.target + 1 })
            .collect(),
        relations: alg
            .relations()
            .iter()
            .map(|r| {
                r.terms
                    .iter()
                    .map(|(c, p)| TermEntry { coef: c.to_string(), path: p.iter().map(|&a| name(a)).collect() })
                    .collect()
            })
            .collect(),
    }
}

pub fn algebra_to_json(alg: &Algebra) -> String {
    serde_json::to_string_pretty(&algebra_to_file(alg)).expect("algebra serializes")
}

/// Dimension vectors of `M/rad M`, `rad M/rad² M`, ...
pub fn loewy_layers(m: &Rep) -> Vec<Vec<usize>> {
    let mut layers = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        let (r, _) = radical(&cur);
        layers.push(cur.dims().iter().zip(r.dims()).map(|(a, b)| a - b).collect());
        cur = r;
    }
    layers
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandExport {
    pub id: IndecId,
    pub name: String,
    pub dims: Vec<usize>,
    pub loewy: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeExport {
    pub index: usize,
    pub name: String,
    pub summands: Vec<SummandExport>,
    /// Composition-factor multiplicities of the module part.
    pub composition: Vec<usize>,
    /// 1-based.
    pub support: Vec<usize>,
    /// Columns are g-vectors.
    pub g_matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeExport {
    pub upper: usize,
    pub lower: usize,
    pub upper_slot: String,
    pub lower_slot: String,
    pub edge: Edge,
}

/// Poset export; nodes in BFS order, edges directed from upper to lower.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetExport {
    pub algebra: String,
    pub vertices: usize,
    pub complete: bool,
    pub cap: usize,
    pub nodes: Vec<NodeExport>,
    pub edges: Vec<EdgeExport>,
}

impl PosetExport {
    pub fn new(name: &str, tt: &TauTilting, poset: &ExchangePoset) -> PosetExport {
        let cat = tt.cat();
        let nodes = poset
            .nodes
            .iter()
            .enumerate()
            .map(|(index, p)| NodeExport {
                index,
                name: pair_name(tt, p),
                summands: p
                    .module
                    .iter()
                    .map(|&id| SummandExport {
                        id,
                        name: indec_name(cat, id),
                        dims: cat.dims(id),
                        loewy: loewy_layers(&cat.rep(id)),
                    })
                    .collect(),
                composition: tt.module(p).dims().to_vec(),
                support: p.support.iter().map(|v| v + 1).collect(),
                g_matrix: tt.g_vectors(p),
            })
            .collect();
        let edges = poset
            .edges
            .iter()
            .map(|e| EdgeExport {
                upper: e.upper,
                lower: e.lower,
                upper_slot: slot_name(tt, e.upper_slot),
                lower_slot: slot_name(tt, e.lower_slot),
                edge: e.clone(),
            })
            .collect();
        PosetExport {
            algebra: name.to_string(),
            vertices: tt.n(),
            complete: poset.complete,
            cap: poset.cap,
            nodes,
            edges,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("poset serializes")
    }

    pub fn from_json(text: &str) -> CliResult<PosetExport> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn to_poset(&self) -> ExchangePoset {
        ExchangePoset {
            nodes: self
                .nodes
                .iter()
                .map(|n| {
                    StPair::new(n.summands.iter().map(|s| s.id).collect(), n.support.iter().map(|v| v - 1).collect())
                })
                .collect(),
            edges: self.edges.iter().map(|e| e.edge.clone()).collect(),
            complete: self.complete,
            cap: self.cap,
        }
    }

    /// Record-shaped nodes, one column per summand showing its Loewy series
    /// top to bottom, then `P[1]` columns for the support part.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=TB;\n  node [shape=record, fontname=\"monospace\"];\n");
        for n in &self.nodes {
            let mut fields: Vec<String> = n.summands.iter().map(|s| format!("{{{}}}", stacked(&s.loewy))).collect();
            fields.extend(n.support.iter().map(|v| format!("P{v}[1]")));
            if fields.is_empty() {
                fields.push("0".into());
            }
            out.push_str(&format!("  n{} [label=\"{}\"];\n", n.index, fields.join("|")));
        }
        for e in &self.edges {
            out.push_str(&format!("  n{} -> n{} [label=\"{}\"];\n", e.upper, e.lower, e.upper_slot));
        }
        out.push_str("}\n");
        out
    }
}

/// Each layer lists its composition factors by vertex, `2 3` for `S2 ⊕ S3`.
fn stacked(layers: &[Vec<usize>]) -> String {
    layers
        .iter()
        .map(|l| {
            l.iter()
                .enumerate()
                .flat_map(|(v, &k)| std::iter::repeat_n((v + 1).to_string(), k))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("|")
}
