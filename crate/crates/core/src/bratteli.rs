//! The Bratteli tower of `T_0 ⊆ T_{1/2} ⊆ T_1 ⊆ …` built from necklaces.
//!
//! Down-step (l to l+1/2): delete an inner corner from some slot `t` and color
//! slot `t`. Up-step (l+1/2 to l+1): from color slot `t`, add a box to slot
//! `t+1 (mod r)` and split the result into `u(ν)` nodes `(ν, δ)`.

use std::collections::{BTreeMap, HashMap};

use num::{BigUint, One, ToPrimitive, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::level::Level;
use crate::limits::Limits;
use crate::necklace::{factorial, ColoredNecklace, Necklace, RTuple};
use crate::tanabe::TanabeParams;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Integer { necklace: Necklace, delta: usize },
    Half(ColoredNecklace),
}

impl NodeKind {
    pub fn label(&self) -> String {
        match self {
            NodeKind::Integer { necklace, delta } => format!("({necklace};{delta})"),
            NodeKind::Half(c) => c.to_string(),
        }
    }

    pub fn tuple(&self) -> &RTuple {
        match self {
            NodeKind::Integer { necklace, .. } => necklace.tuple(),
            NodeKind::Half(c) => c.tuple(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    /// Index of the node one level down.
    pub lower: usize,
    /// Content of the box added (into an integer level) or removed (into a half level).
    pub content: i64,
}

#[derive(Clone, Debug)]
pub struct Node {
    pub kind: NodeKind,
    pub label: String,
    pub path_count: BigUint,
    pub irrep_dim: BigUint,
    pub down: Vec<Edge>,
}

#[derive(Clone, Debug)]
pub struct BratteliGraph {
    pub params: TanabeParams,
    /// `levels[2l]` holds the nodes of level `l`.
    pub levels: Vec<Vec<Node>>,
}

/// Tower up to `kmax`, which must not exceed `floor(n/2)` unless guards are lifted.
pub fn build_tower(params: TanabeParams, kmax: usize) -> Result<BratteliGraph> {
    if Limits::from_env().tower_stable_only && kmax > params.n / 2 {
        return Err(Error::SizeLimit(format!(
            "kmax = {kmax} exceeds floor(n/2) = {}",
            params.n / 2
        )));
    }
    build_tower_to(params, Level::integer(kmax))
}

/// Tower up to any level, ignoring the stable range. Beyond `floor(n/2)` the
/// nodes still index the recursion but the dimension identities need not hold.
pub fn build_tower_to(params: TanabeParams, top: Level) -> Result<BratteliGraph> {
    let r = params.r as usize;
    let (m, p, n) = (params.m() as usize, params.p as usize, params.n);
    let root = Necklace::new(RTuple::root(r, n), m, p)?;
    let mut levels = vec![vec![make_node(NodeKind::Integer { necklace: root, delta: 0 }, vec![])]];
    levels[0][0].path_count = BigUint::one();
    for two_l in 1..=top.two_l() {
        let lower = &levels[two_l - 1];
        let mut nodes: Vec<Node> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut link = |kind: NodeKind, edge: Edge, nodes: &mut Vec<Node>| -> Result<()> {
            let label = kind.label();
            let at = *index.entry(label).or_insert_with(|| {
                nodes.push(make_node(kind, vec![]));
                nodes.len() - 1
            });
            match nodes[at].down.iter().find(|e| e.lower == edge.lower) {
                Some(e) if e.content != edge.content => Err(Error::Invariant(format!(
                    "edge into {} carries contents {} and {}",
                    nodes[at].label, e.content, edge.content
                ))),
                Some(_) => Ok(()),
                None => {
                    nodes[at].down.push(edge);
                    Ok(())
                }
            }
        };
        for (a, node) in lower.iter().enumerate() {
            match &node.kind {
                NodeKind::Integer { necklace, .. } => {
                    let t = necklace.tuple();
                    for slot in 0..r {
                        for row in t.0[slot].removable_rows() {
                            let (y, content) = t.0[slot].remove_box(row);
                            let c = ColoredNecklace::new(t.with_slot(slot, y), slot, m, p, n)?;
                            link(NodeKind::Half(c), Edge { lower: a, content }, &mut nodes)?;
                        }
                    }
                }
                NodeKind::Half(c) => {
                    let t = c.tuple();
                    let slot = (c.color() + 1) % r;
                    for row in t.0[slot].addable_rows() {
                        let (y, content) = t.0[slot].add_box(row);
                        let nu = Necklace::new(t.with_slot(slot, y), m, p)?;
                        for delta in 0..nu.u() {
                            let kind = NodeKind::Integer { necklace: nu.clone(), delta };
                            link(kind, Edge { lower: a, content }, &mut nodes)?;
                        }
                    }
                }
            }
        }
        for node in nodes.iter_mut() {
            node.path_count = node
                .down
                .iter()
                .map(|e| &lower[e.lower].path_count)
                .fold(BigUint::zero(), |acc, x| acc + x);
        }
        levels.push(nodes);
    }
    Ok(BratteliGraph { params, levels })
}

fn make_node(kind: NodeKind, down: Vec<Edge>) -> Node {
    let irrep_dim = match &kind {
        NodeKind::Integer { necklace, .. } => {
            necklace.tuple().tab_count() / BigUint::from(necklace.u())
        }
        NodeKind::Half(c) => c.tuple().tab_count(),
    };
    Node {
        label: kind.label(),
        kind,
        path_count: BigUint::zero(),
        irrep_dim,
        down,
    }
}

impl BratteliGraph {
    pub fn top(&self) -> Level {
        Level::from_two_l(self.levels.len() - 1)
    }

    pub fn level(&self, level: Level) -> Result<&[Node]> {
        self.levels
            .get(level.two_l())
            .map(Vec::as_slice)
            .ok_or_else(|| Error::Params(format!("tower has no level {level}")))
    }

    pub fn find(&self, level: Level, label: &str) -> Option<&Node> {
        self.level(level).ok()?.iter().find(|x| x.label == label)
    }

    /// `(lower label, upper label)` pairs between `level - 1/2` and `level`.
    pub fn edges_into(&self, level: Level) -> Result<Vec<(String, String)>> {
        let prev = level
            .prev()
            .ok_or_else(|| Error::Params("level 0 has no incoming edges".into()))?;
        let lower = self.level(prev)?;
        Ok(self
            .level(level)?
            .iter()
            .flat_map(|x| x.down.iter().map(|e| (lower[e.lower].label.clone(), x.label.clone())))
            .collect())
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph bratteli {\n  rankdir=TB;\n  node [shape=plaintext];\n");
        let id = |two_l: usize, i: usize| format!("n{two_l}_{i}");
        for (two_l, nodes) in self.levels.iter().enumerate() {
            s.push_str(&format!("  subgraph level{two_l} {{ rank=same;"));
            for (i, x) in nodes.iter().enumerate() {
                s.push_str(&format!(" {} [label=\"{}\"];", id(two_l, i), x.label));
            }
            s.push_str(" }\n");
        }
        for (two_l, nodes) in self.levels.iter().enumerate().skip(1) {
            for (i, x) in nodes.iter().enumerate() {
                for e in &x.down {
                    s.push_str(&format!("  {} -- {};\n", id(two_l - 1, e.lower), id(two_l, i)));
                }
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let levels: Vec<serde_json::Value> = self
            .levels
            .iter()
            .enumerate()
            .map(|(two_l, nodes)| {
                let ns: Vec<serde_json::Value> = nodes
                    .iter()
                    .map(|x| {
                        json!({
                            "id": x.label,
                            "label": x.label,
                            "dim": x.irrep_dim.to_string(),
                            "paths": x.path_count.to_string(),
                        })
                    })
                    .collect();
                let edges: Vec<serde_json::Value> = if two_l == 0 {
                    vec![]
                } else {
                    let lower = &self.levels[two_l - 1];
                    nodes
                        .iter()
                        .flat_map(|x| x.down.iter().map(|e| json!([lower[e.lower].label, x.label])))
                        .collect()
                };
                json!({ "twoL": two_l, "nodes": ns, "edges": edges })
            })
            .collect();
        json!({ "levels": levels })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimsRow {
    pub label: String,
    pub irrep_dim: BigUint,
    pub path_count: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimsTable {
    pub level: Level,
    pub rows: Vec<DimsRow>,
    /// `Σ irrepDim · pathCount`.
    pub sum_dim_paths: BigUint,
    /// `Σ pathCount²`.
    pub sum_paths_sq: BigUint,
}

pub fn dims(graph: &BratteliGraph, level: Level) -> Result<DimsTable> {
    let rows: Vec<DimsRow> = graph
        .level(level)?
        .iter()
        .map(|x| DimsRow {
            label: x.label.clone(),
            irrep_dim: x.irrep_dim.clone(),
            path_count: x.path_count.clone(),
        })
        .collect();
    let sum_dim_paths = rows.iter().map(|r| &r.irrep_dim * &r.path_count).sum();
    let sum_paths_sq = rows.iter().map(|r| &r.path_count * &r.path_count).sum();
    Ok(DimsTable {
        level,
        rows,
        sum_dim_paths,
        sum_paths_sq,
    })
}

/// Whether `(r,p,n) = (2,2,2k)` and `level = k`, where `M_{k,2,2}` joins the family.
pub fn has_m22(params: TanabeParams, level: Level) -> bool {
    params.r == 2 && params.p == 2 && !level.is_half() && params.n == 2 * level.floor() && params.n > 0
}

/// Predicted joint JM eigenvalue tuples with the dimension of each joint eigenspace.
///
/// Along a path, `ε_{1/2} = 1`, `ε_j` is the content of the box added at step
/// `j`, and `ε_{j+1/2}` is minus the content of the box removed. For
/// `(2,2,2k)` at level `k` the `M_{k,2,2}` eigenvalue is appended: `+k!` on
/// `(((k),(k));0)`, `−k!` on `(((k),(k));1)` and `0` elsewhere.
pub fn predict_jm_spectrum(graph: &BratteliGraph, level: Level) -> Result<BTreeMap<Vec<i64>, BigUint>> {
    graph.level(level)?;
    let mut up: Vec<Vec<Vec<(usize, i64)>>> = graph.levels.iter().map(|l| vec![vec![]; l.len()]).collect();
    for (two_l, nodes) in graph.levels.iter().enumerate().skip(1) {
        for (i, x) in nodes.iter().enumerate() {
            for e in &x.down {
                up[two_l - 1][e.lower].push((i, e.content));
            }
        }
    }
    let m22 = has_m22(graph.params, level);
    let k = level.floor();
    let kfact = factorial(k).to_i64().unwrap_or(i64::MAX);
    let mut out: BTreeMap<Vec<i64>, BigUint> = BTreeMap::new();
    let mut stack: Vec<(usize, usize, Vec<i64>)> = vec![(0, 0, vec![])];
    while let Some((two_l, i, tuple)) = stack.pop() {
        if two_l == level.two_l() {
            let node = &graph.levels[two_l][i];
            let mut t = tuple;
            if m22 {
                t.push(match &node.kind {
                    NodeKind::Integer { necklace, delta } if necklace.u() == 2 => {
                        if *delta == 0 { kfact } else { -kfact }
                    }
                    _ => 0,
                });
            }
            *out.entry(t).or_insert_with(BigUint::zero) += &node.irrep_dim;
            continue;
        }
        for &(j, content) in &up[two_l][i] {
            let next = two_l + 1;
            let eps = if next == 1 {
                1
            } else if next % 2 == 0 {
                content
            } else {
                -content
            };
            let mut t = tuple.clone();
            t.push(eps);
            stack.push((next, j, t));
        }
    }
    Ok(out)
}

/// Content sums `Σ_{b∈λ} c(b)` over the integer-level nodes at `level`.
pub fn content_sums(graph: &BratteliGraph, level: Level) -> Result<Vec<i64>> {
    let mut v: Vec<i64> = graph.level(level)?.iter().map(|x| x.kind.tuple().content_sum()).collect();
    v.sort();
    v.dedup();
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(r: u32, p: u32, n: usize) -> TanabeParams {
        TanabeParams::new(r, p, n).unwrap()
    }

    #[test]
    fn root_and_first_step() {
        for (r, p, n) in [(1, 1, 3), (2, 2, 4), (3, 1, 2), (4, 2, 5)] {
            let g = build_tower_to(params(r, p, n), Level::half(0)).unwrap();
            assert_eq!(g.levels[0].len(), 1);
            assert_eq!(g.levels[1].len(), 1);
            let t = dims(&g, Level::integer(0)).unwrap();
            assert_eq!((t.rows[0].irrep_dim.clone(), t.rows[0].path_count.clone()), (BigUint::one(), BigUint::one()));
        }
    }

    #[test]
    fn guard_on_kmax() {
        if std::env::var(crate::limits::OVERRIDE_VAR).is_err() {
            assert!(matches!(build_tower(params(2, 2, 4), 3), Err(Error::SizeLimit(_))));
        }
    }

    #[test]
    fn partition_algebra_case() {
        // r = 1: level 1 nodes are (n) and (n-1,1)
        let g = build_tower(params(1, 1, 4), 2).unwrap();
        let labels: Vec<&str> = g.levels[2].iter().map(|x| x.label.as_str()).collect();
        assert_eq!(labels.len(), 2);
        let t = dims(&g, Level::integer(2)).unwrap();
        assert_eq!(t.sum_dim_paths, BigUint::from(16u32));
        assert_eq!(t.sum_paths_sq, BigUint::from(15u32));
    }

    #[test]
    fn level_half_spectrum() {
        let g = build_tower(params(3, 1, 4), 1).unwrap();
        let s = predict_jm_spectrum(&g, Level::half(0)).unwrap();
        assert_eq!(s, BTreeMap::from([(vec![1], BigUint::one())]));
        let s = predict_jm_spectrum(&g, Level::integer(1)).unwrap();
        assert_eq!(s, BTreeMap::from([(vec![1, 0], BigUint::from(4u32))]));
    }
}
