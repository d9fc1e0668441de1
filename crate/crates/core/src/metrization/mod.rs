//! Decides whether a channel admits a matched distance.
//!
//! The channel's decreasing rank matrix turns into equalities and strict
//! inequalities between the pair variables `d(i, j)`. Equalities are
//! contracted with union-find; the strict edges between the resulting
//! classes must form a DAG. If they do, every class gets the length of its
//! longest strict path from the zero class, which yields the smallest
//! integer distance matched to the channel. If they do not, the offending
//! cycle is returned as a certificate.

mod certificate;
mod graph;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use certificate::{check_certificate, Certificate, Step};
pub use graph::{extract_constraints, ConstraintGraph, Edge, Node, PairVar, Relation};

use crate::orders::{to_metric, Channel, DistanceMatrix};
use crate::rational::int;

/// Which kind of distance to look for.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Off-diagonal zeros allowed when the channel ties them with the diagonal.
    #[default]
    Distance,
    Semimetric,
    /// A semimetric pushed through `1 + d / max d`.
    Metric,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "distance" => Ok(Mode::Distance),
            "semimetric" => Ok(Mode::Semimetric),
            "metric" => Ok(Mode::Metric),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Distance => "distance",
            Mode::Semimetric => "semimetric",
            Mode::Metric => "metric",
        })
    }
}

/// Pairs forced equal, with their canonical integer value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairClass {
    pub members: Vec<PairVar>,
    pub value: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedDistance {
    /// The returned distance (after the metric transform when requested).
    pub distance: DistanceMatrix,
    /// Equality classes in ascending value order.
    pub classes: Vec<PairClass>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetrizationResult {
    Matched(MatchedDistance),
    Infeasible(Certificate),
}

impl MetrizationResult {
    pub fn is_matched(&self) -> bool {
        matches!(self, MetrizationResult::Matched(_))
    }

    pub fn distance(&self) -> Option<&DistanceMatrix> {
        match self {
            MetrizationResult::Matched(m) => Some(&m.distance),
            MetrizationResult::Infeasible(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            MetrizationResult::Matched(_) => None,
            MetrizationResult::Infeasible(c) => Some(c),
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Keeps the smaller root, so the zero node (index 0) always represents its class.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

fn nodes(n: usize) -> Vec<Node> {
    std::iter::once(Node::Zero)
        .chain((0..n).flat_map(|i| (i + 1..n).map(move |j| Node::Pair(PairVar::new(i, j).unwrap()))))
        .collect()
}

/// Equality edges as an adjacency list, for recovering the chain of
/// equalities that put two nodes in the same class.
struct EqualityPaths {
    adjacency: Vec<Vec<Edge>>,
    n: usize,
}

impl EqualityPaths {
    fn new(graph: &ConstraintGraph, size: usize) -> Self {
        let mut adjacency = vec![Vec::new(); size];
        for &e in &graph.equalities {
            adjacency[e.from.index(graph.n)].push(e);
            adjacency[e.to.index(graph.n)].push(e.reversed());
        }
        Self {
            adjacency,
            n: graph.n,
        }
    }

    /// BFS path of equality steps from `start` to `goal`.
    fn path(&self, start: Node, goal: Node) -> Vec<Step> {
        let (s, g) = (start.index(self.n), goal.index(self.n));
        let mut prev: Vec<Option<Edge>> = vec![None; self.adjacency.len()];
        let mut seen = vec![false; self.adjacency.len()];
        let mut queue = std::collections::VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            if u == g {
                break;
            }
            for &e in &self.adjacency[u] {
                let v = e.to.index(self.n);
                if !seen[v] {
                    seen[v] = true;
                    prev[v] = Some(e);
                    queue.push_back(v);
                }
            }
        }
        let mut steps = Vec::new();
        let mut at = g;
        while at != s {
            let e = prev[at].expect("nodes share an equality class");
            steps.push(Step::from_edge(e, Relation::Equal));
            at = e.from.index(self.n);
        }
        steps.reverse();
        steps
    }
}

/// Turns a list of strict edges whose heads and next tails share classes
/// into a closed chain, then rotates it to start at its smallest node.
fn close_cycle(stricts: &[Edge], paths: &EqualityPaths) -> Certificate {
    let mut steps = Vec::new();
    for (t, &e) in stricts.iter().enumerate() {
        steps.push(Step::from_edge(e, Relation::Less));
        let next = stricts[(t + 1) % stricts.len()];
        steps.extend(paths.path(e.to, next.from));
    }
    let start = (0..steps.len())
        .min_by_key(|&t| steps[t].from)
        .expect("nonempty cycle");
    steps.rotate_left(start);
    Certificate::Cycle(steps)
}

/// Finds a cycle in the class digraph, as the strict edges along it.
fn find_class_cycle(
    class_count: usize,
    out: &[Vec<(usize, Edge)>],
) -> Option<Vec<Edge>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Grey,
        Black,
    }
    let mut color = vec![Color::White; class_count];
    let mut via: Vec<Option<(usize, Edge)>> = vec![None; class_count];
    for root in 0..class_count {
        if color[root] != Color::White {
            continue;
        }
        // iterative DFS: (node, next edge index)
        let mut stack = vec![(root, 0usize)];
        color[root] = Color::Grey;
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if let Some(&(v, edge)) = out[u].get(*next) {
                *next += 1;
                match color[v] {
                    Color::White => {
                        color[v] = Color::Grey;
                        via[v] = Some((u, edge));
                        stack.push((v, 0));
                    }
                    Color::Grey => {
                        let mut cycle = vec![edge];
                        let mut at = u;
                        while at != v {
                            let (p, e) = via[at].expect("on stack");
                            cycle.push(e);
                            at = p;
                        }
                        cycle.reverse();
                        return Some(cycle);
                    }
                    Color::Black => {}
                }
            } else {
                color[u] = Color::Black;
                stack.pop();
            }
        }
    }
    None
}

/// Finds a distance matched to `channel`, or a certificate that none exists.
///
/// Runs in O(n³): one pass over the column comparisons, near-linear
/// union-find, and a linear pass over the class digraph.
pub fn metrize(channel: &Channel, mode: Mode) -> MetrizationResult {
    let graph = extract_constraints(channel, mode);
    let n = graph.n;

    if !graph.diagonal_ok {
        let index = (0..n).find(|&i| graph.order.rank(i, i) != 1).expect("violation");
        let row = (0..n).find(|&k| graph.order.rank(k, index) == 1).expect("rank 1 exists");
        return MetrizationResult::Infeasible(Certificate::Diagonal { index, row });
    }
    if mode != Mode::Distance && !graph.diagonal_strict {
        let (row, column) = (0..n)
            .flat_map(|j| (0..n).map(move |i| (i, j)))
            .find(|&(i, j)| i != j && graph.order.rank(i, j) == 1)
            .expect("violation");
        return MetrizationResult::Infeasible(Certificate::OffDiagonalZero { column, row });
    }

    let all_nodes = nodes(n);
    let size = all_nodes.len();
    let mut uf = UnionFind::new(size);
    for e in &graph.equalities {
        uf.union(e.from.index(n), e.to.index(n));
    }
    let paths = EqualityPaths::new(&graph, size);

    if let Some(&e) = graph
        .stricts
        .iter()
        .find(|e| uf.find(e.from.index(n)) == uf.find(e.to.index(n)))
    {
        return MetrizationResult::Infeasible(close_cycle(&[e], &paths));
    }

    // Classes numbered by their smallest node; the zero node's class is 0.
    let mut class_of_root = BTreeMap::new();
    let mut class_of = vec![0usize; size];
    for idx in 0..size {
        let root = uf.find(idx);
        let next = class_of_root.len();
        class_of[idx] = *class_of_root.entry(root).or_insert(next);
    }
    let class_count = class_of_root.len();
    let mut out: Vec<Vec<(usize, Edge)>> = vec![Vec::new(); class_count];
    for &e in &graph.stricts {
        let (a, b) = (class_of[e.from.index(n)], class_of[e.to.index(n)]);
        if !out[a].iter().any(|&(c, _)| c == b) {
            out[a].push((b, e));
        }
    }

    if let Some(cycle) = find_class_cycle(class_count, &out) {
        return MetrizationResult::Infeasible(close_cycle(&cycle, &paths));
    }

    // Longest strict path from the zero class, in topological order.
    let mut indegree = vec![0usize; class_count];
    for edges in &out {
        for &(b, _) in edges {
            indegree[b] += 1;
        }
    }
    let mut ready: std::collections::BTreeSet<usize> =
        (0..class_count).filter(|&c| indegree[c] == 0).collect();
    let mut value = vec![0u32; class_count];
    while let Some(c) = ready.pop_first() {
        for &(b, _) in &out[c] {
            value[b] = value[b].max(value[c] + 1);
            indegree[b] -= 1;
            if indegree[b] == 0 {
                ready.insert(b);
            }
        }
    }

    let mut members: Vec<Vec<PairVar>> = vec![Vec::new(); class_count];
    for (idx, node) in all_nodes.iter().enumerate() {
        if let Node::Pair(p) = node {
            members[class_of[idx]].push(*p);
        }
    }
    let mut classes: Vec<PairClass> = members
        .into_iter()
        .zip(&value)
        .filter(|(m, _)| !m.is_empty())
        .map(|(members, &value)| PairClass { members, value })
        .collect();
    classes.sort_by(|a, b| (a.value, &a.members).cmp(&(b.value, &b.members)));

    let canonical = DistanceMatrix::from_pairs(n, |i, j| {
        let idx = Node::at(i, j).index(n);
        int(i64::from(value[class_of[idx]]))
    })
    .expect("canonical values form a distance");
    let distance = match mode {
        Mode::Metric => to_metric(&canonical).expect("diagonal_strict gives a semimetric"),
        Mode::Distance | Mode::Semimetric => canonical,
    };
    MetrizationResult::Matched(MatchedDistance { distance, classes })
}
