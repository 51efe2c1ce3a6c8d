//! Crystal-graph materialization, axiom checking, rooted isomorphism and
//! serialization.
//!
//! Graphs are produced by breadth-first closure under all lowering
//! operators from a seed element. Node ids are assigned in discovery order
//! (BFS layer, then color ascending), so identical inputs produce
//! bit-identical graphs.

use std::collections::HashMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::cartan::{alpha, pairing, Weight};
use crate::crystal::Crystal;
use crate::{Error, Result};

/// Default bound on generated nodes. The B(infinity) models are infinite;
/// exceeding the cap is reported as an error, never as a truncated graph.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

/// One node: the serialized element plus its weight and string statistics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphNode {
    pub elem: serde_json::Value,
    pub wt: Vec<i64>,
    pub eps: Vec<i64>,
    pub phi: Vec<i64>,
}

/// A rooted, edge-colored crystal graph. Edge `(u, i, v)` records that the
/// `i`-th lowering operator sends node `u` to node `v`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrystalGraph {
    pub n: usize,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<(usize, usize, usize)>,
    pub root: usize,
    pub depth: Option<usize>,
}

/// A generated graph together with the typed elements behind its nodes.
#[derive(Debug, Clone)]
pub struct Generated<E> {
    pub graph: CrystalGraph,
    pub elements: Vec<E>,
    pub index: HashMap<E, usize>,
    /// BFS layer of each node (distance from the root).
    pub layers: Vec<usize>,
}

/// Breadth-first closure of `seed` under all lowering operators.
///
/// `depth` bounds the number of lowering steps from the seed; `node_cap`
/// bounds the total node count and is enforced before committing the
/// offending node.
pub fn generate<C>(
    crystal: &C,
    seed: C::Elem,
    depth: Option<usize>,
    node_cap: usize,
) -> Result<Generated<C::Elem>>
where
    C: Crystal,
    C::Elem: Serialize,
{
    let n = crystal.rank().n();
    let mut elements = vec![seed.clone()];
    let mut index = HashMap::new();
    index.insert(seed, 0usize);
    let mut layers = vec![0usize];
    let mut edges = Vec::new();
    let mut head = 0usize;
    while head < elements.len() {
        let layer = layers[head];
        if depth.is_none_or(|d| layer < d) {
            for i in 1..=n {
                let u = elements[head].clone();
                if let Some(v) = crystal.lower(&u, i) {
                    debug_assert_eq!(
                        crystal.raise(&v, i).as_ref(),
                        Some(&u),
                        "raising must invert lowering"
                    );
                    let id = match index.get(&v) {
                        Some(&id) => id,
                        None => {
                            if elements.len() >= node_cap {
                                return Err(Error::NodeCapExceeded { cap: node_cap });
                            }
                            let id = elements.len();
                            elements.push(v.clone());
                            index.insert(v, id);
                            layers.push(layer + 1);
                            id
                        }
                    };
                    edges.push((head, i, id));
                }
            }
        }
        head += 1;
    }
    let nodes = elements
        .iter()
        .map(|e| {
            let s = crystal.stats(e);
            GraphNode {
                elem: serde_json::to_value(e).expect("element serialization"),
                wt: s.wt.0,
                eps: s.eps,
                phi: s.phi,
            }
        })
        .collect();
    Ok(Generated {
        graph: CrystalGraph {
            n,
            nodes,
            edges,
            root: 0,
            depth,
        },
        elements,
        index,
        layers,
    })
}

/// One violated axiom with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub condition: String,
    pub witness: String,
}

/// Result of an axiom check; an empty violation list means the graph
/// satisfies every checked condition.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, condition: &str, witness: String) {
        self.violations.push(AxiomViolation {
            condition: condition.to_string(),
            witness,
        });
    }
}

/// Checks the defining conditions of an abstract crystal on graph data:
/// the string identity at every node, the weight drop and string steps
/// along every edge, single-valuedness of both operators per color, and
/// reachability of every node from the root. The minus-infinity clause is
/// vacuous for the models here.
pub fn check_axioms(g: &CrystalGraph) -> AxiomReport {
    let mut report = AxiomReport::default();
    let n = g.n;
    for (id, node) in g.nodes.iter().enumerate() {
        if node.wt.len() != n + 1 || node.eps.len() != n || node.phi.len() != n {
            report.push("shape", format!("node {id} has malformed statistics"));
            continue;
        }
        let wt = Weight(node.wt.clone());
        for i in 1..=n {
            let expect = node.eps[i - 1] + pairing(i, &wt).unwrap();
            if node.phi[i - 1] != expect {
                report.push(
                    "string-identity",
                    format!(
                        "node {id}, i={i}: phi={} but eps + <wt> = {expect}",
                        node.phi[i - 1]
                    ),
                );
            }
        }
    }
    let mut out_seen = HashMap::new();
    let mut in_seen = HashMap::new();
    for &(u, i, v) in &g.edges {
        if u >= g.nodes.len() || v >= g.nodes.len() || i == 0 || i > n {
            report.push("edge-range", format!("edge ({u},{i},{v}) out of range"));
            continue;
        }
        if out_seen.insert((u, i), v).is_some() {
            report.push(
                "lowering-single-valued",
                format!("node {u} has two outgoing {i}-edges"),
            );
        }
        if in_seen.insert((v, i), u).is_some() {
            report.push(
                "raising-single-valued",
                format!("node {v} has two incoming {i}-edges"),
            );
        }
        let wu = Weight(g.nodes[u].wt.clone());
        let wv = Weight(g.nodes[v].wt.clone());
        if wv != wu.sub(&alpha(wu.rank(), i).unwrap()) {
            report.push(
                "weight-step",
                format!("edge ({u},{i},{v}): target weight is not source minus the simple root"),
            );
        }
        if g.nodes[v].eps[i - 1] != g.nodes[u].eps[i - 1] + 1 {
            report.push(
                "eps-step",
                format!("edge ({u},{i},{v}): eps_{i} does not rise by 1"),
            );
        }
        if g.nodes[v].phi[i - 1] != g.nodes[u].phi[i - 1] - 1 {
            report.push(
                "phi-step",
                format!("edge ({u},{i},{v}): phi_{i} does not fall by 1"),
            );
        }
    }
    // Reachability from the root.
    let mut seen = vec![false; g.nodes.len()];
    if g.root < g.nodes.len() {
        seen[g.root] = true;
        let mut stack = vec![g.root];
        let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
        for &(u, _, v) in &g.edges {
            adj.entry(u).or_default().push(v);
        }
        while let Some(u) = stack.pop() {
            for &v in adj.get(&u).into_iter().flatten() {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    } else {
        report.push("root", format!("root id {} out of range", g.root));
    }
    for (id, s) in seen.iter().enumerate() {
        if !s {
            report.push("reachability", format!("node {id} unreachable from root"));
        }
    }
    report
}

/// Rechecks a generated graph against its model: every recorded edge must
/// be inverted by the raising operator (the mutual-inverse condition that
/// plain graph data cannot express).
pub fn check_mutual_inverse<C>(crystal: &C, gen: &Generated<C::Elem>) -> AxiomReport
where
    C: Crystal,
{
    let mut report = AxiomReport::default();
    for &(u, i, v) in &gen.graph.edges {
        if crystal.raise(&gen.elements[v], i).as_ref() != Some(&gen.elements[u]) {
            report.push(
                "mutual-inverse",
                format!("edge ({u},{i},{v}): raising does not return to the source"),
            );
        }
    }
    report
}

/// Rooted, color-preserving digraph isomorphism.
///
/// Because every node is reachable from the root and each (node, color)
/// pair has at most one outgoing edge, a color-preserving rooted
/// isomorphism is unique if it exists; it is found by following edges from
/// the matched roots.
pub fn graph_isomorphic(a: &CrystalGraph, b: &CrystalGraph) -> bool {
    if a.n != b.n || a.nodes.len() != b.nodes.len() || a.edges.len() != b.edges.len() {
        return false;
    }
    let succ = |g: &CrystalGraph| {
        let mut m: HashMap<(usize, usize), usize> = HashMap::new();
        for &(u, i, v) in &g.edges {
            if m.insert((u, i), v).is_some() {
                return None; // not operator-valued; cannot be a crystal graph
            }
        }
        Some(m)
    };
    let (sa, sb) = match (succ(a), succ(b)) {
        (Some(x), Some(y)) => (x, y),
        _ => return false,
    };
    let mut map = vec![usize::MAX; a.nodes.len()];
    let mut hit = vec![false; b.nodes.len()];
    map[a.root] = b.root;
    hit[b.root] = true;
    let mut queue = std::collections::VecDeque::from([a.root]);
    while let Some(u) = queue.pop_front() {
        let w = map[u];
        for i in 1..=a.n {
            match (sa.get(&(u, i)), sb.get(&(w, i))) {
                (None, None) => {}
                (Some(&v), Some(&x)) => {
                    if map[v] == usize::MAX {
                        if hit[x] {
                            return false;
                        }
                        map[v] = x;
                        hit[x] = true;
                        queue.push_back(v);
                    } else if map[v] != x {
                        return false;
                    }
                }
                _ => return false,
            }
        }
    }
    map.iter().all(|&m| m != usize::MAX)
}

/// Returns the graph with every edge color `i` replaced by `n + 1 - i`.
pub fn relabel_colors(g: &CrystalGraph) -> CrystalGraph {
    let mut out = g.clone();
    for e in &mut out.edges {
        e.1 = g.n + 1 - e.1;
    }
    out
}

/// DOT rendering: one line per node, one line per edge.
pub fn to_dot(g: &CrystalGraph) -> String {
    let mut s = String::from("digraph crystal {\n");
    for (id, node) in g.nodes.iter().enumerate() {
        let label = node.elem.to_string().replace('"', "\\\"");
        s.push_str(&format!("  {id} [label=\"{label}\"];\n"));
    }
    for &(u, i, v) in &g.edges {
        s.push_str(&format!("  {u} -> {v} [label=\"{i}\"];\n"));
    }
    s.push_str("}\n");
    s
}

/// Compact JSON for any serializable value (elements or graphs).
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization cannot fail")
}

/// Parses JSON produced by [`to_json`]; errors carry line and column.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}
