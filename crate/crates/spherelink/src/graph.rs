//! Finite simple labeled graphs and minor operations.
//!
//! Graphs are stored as a vertex count plus a sorted set of undirected
//! edges `(u, v)` with `u < v`. Isolated vertices are first-class: the
//! vertex count may exceed the number of edge endpoints.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use canonical_form::Canonize;
use thiserror::Error;

/// An undirected edge, always normalized so the smaller endpoint comes first.
pub type Edge = (usize, usize);

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GraphError {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("edge {0}-{1} is a loop")]
    Loop(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

/// A finite simple graph, possibly disconnected.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
    labels: Option<Vec<String>>,
}

// Labels are display metadata only; they never participate in equality,
// ordering, hashing, or canonical forms.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}
impl Eq for Graph {}
impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Graph {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, &self.edges).cmp(&(other.n, &other.edges))
    }
}
impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

fn norm(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
            labels: None,
        }
    }

    /// Build a graph from an edge list. Edges are normalized; duplicates
    /// collapse silently (set semantics). Loops and out-of-range endpoints
    /// are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::Loop(u, v));
            }
            g.edges.insert(norm(u, v));
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        Ok(())
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.edges.insert((u, v));
            }
        }
        g
    }

    /// The complete multipartite graph with the given part sizes. Vertices
    /// are grouped by part in order; edges run exactly between distinct parts.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(i).take(p));
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.edges.insert((u, v));
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are relabeled with an offset.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        g.labels = None;
        let off = self.n;
        g.n += other.n;
        for &(u, v) in &other.edges {
            g.edges.insert((u + off, v + off));
        }
        g
    }

    /// Replace edge `e` by a path through `k` new degree-2 vertices.
    /// Returns the new graph and the new vertices in path order from the
    /// smaller endpoint of `e`.
    pub fn subdivide(&self, e: (usize, usize), k: usize) -> Result<(Graph, Vec<usize>), GraphError> {
        let e = norm(e.0, e.1);
        if !self.edges.contains(&e) {
            return Err(GraphError::MissingEdge(e.0, e.1));
        }
        let mut g = self.clone();
        g.labels = None;
        g.edges.remove(&e);
        let new: Vec<usize> = (g.n..g.n + k).collect();
        g.n += k;
        let mut prev = e.0;
        for &s in &new {
            g.edges.insert(norm(prev, s));
            prev = s;
        }
        g.edges.insert(norm(prev, e.1));
        Ok((g, new))
    }

    /// Attach one new vertex adjacent only to `v` (a pendant `K_2`).
    pub fn attach_pendant(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.labels = None;
        let w = g.n;
        g.n += 1;
        g.edges.insert((v, w));
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&norm(u, v))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        debug_assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Apply a permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for &(u, v) in &self.edges {
            g.edges.insert(norm(perm[u], perm[v]));
        }
        g
    }

    /// Connected components, each as a graph on local indices plus the map
    /// from local index to parent vertex. Isolated vertices are singleton
    /// components. Components are ordered by their smallest parent vertex.
    pub fn components(&self) -> Vec<(Graph, Vec<usize>)> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut verts = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                verts.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            verts.sort_unstable();
            let index_of = |v: usize| verts.binary_search(&v).unwrap();
            let mut comp = Graph::empty(verts.len());
            for &(u, v) in &self.edges {
                if verts.binary_search(&u).is_ok() && verts.binary_search(&v).is_ok() {
                    comp.edges.insert(norm(index_of(u), index_of(v)));
                }
            }
            out.push((comp, verts));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Delete an edge.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let e = norm(u, v);
        if !self.edges.contains(&e) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.labels = None;
        g.edges.remove(&e);
        Ok(g)
    }

    /// Delete a vertex and all incident edges; higher indices shift down.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let mut g = Graph::empty(self.n - 1);
        for &(a, b) in &self.edges {
            if a != v && b != v {
                g.edges.insert(norm(shift(a), shift(b)));
            }
        }
        Ok(g)
    }

    /// Contract an edge: the endpoints merge, then loops and parallel
    /// duplicates are dropped (simple-graph convention). The merged vertex
    /// keeps the smaller endpoint's index; higher indices shift down.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let (u, v) = norm(u, v);
        if !self.edges.contains(&(u, v)) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let remap = |x: usize| {
            let x = if x == v { u } else { x };
            if x > v {
                x - 1
            } else {
                x
            }
        };
        let mut g = Graph::empty(self.n - 1);
        for &(a, b) in &self.edges {
            let (a, b) = (remap(a), remap(b));
            if a != b {
                g.edges.insert(norm(a, b));
            }
        }
        Ok(g)
    }

    pub fn apply_minor_step(&self, step: &MinorStep) -> Result<Graph, GraphError> {
        match *step {
            MinorStep::DeleteEdge(u, v) => self.delete_edge(u, v),
            MinorStep::ContractEdge(u, v) => self.contract_edge(u, v),
            MinorStep::DeleteVertex(v) => self.delete_vertex(v),
        }
    }

    /// All single minor steps applicable to this graph, in a fixed order.
    pub fn minor_steps(&self) -> Vec<MinorStep> {
        let mut steps = Vec::new();
        for &(u, v) in &self.edges {
            steps.push(MinorStep::DeleteEdge(u, v));
        }
        for &(u, v) in &self.edges {
            steps.push(MinorStep::ContractEdge(u, v));
        }
        for v in 0..self.n {
            steps.push(MinorStep::DeleteVertex(v));
        }
        steps
    }

    /// One representative per isomorphism class of single-step minors,
    /// each with the first step that generates it.
    pub fn immediate_minors(&self) -> Vec<(MinorStep, Graph)> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for step in self.minor_steps() {
            let m = self.apply_minor_step(&step).expect("step from minor_steps");
            if seen.insert(m.canonical_form()) {
                out.push((step, m));
            }
        }
        out
    }

    fn adj(&self) -> AdjGraph {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        AdjGraph { adj }
    }

    /// Canonical byte certificate: equal for two graphs iff they are
    /// isomorphic, invariant under relabeling.
    pub fn canonical_form(&self) -> Vec<u8> {
        let canon = self.adj().canonical();
        let mut out = format!("n{}", self.n).into_bytes();
        for (u, l) in canon.adj.iter().enumerate() {
            for &v in l {
                if u < v {
                    out.extend_from_slice(format!(";{}-{}", u, v).as_bytes());
                }
            }
        }
        out
    }

    /// A permutation carrying this graph onto its canonical relabeling.
    pub fn canonical_permutation(&self) -> Vec<usize> {
        self.adj().morphism_to_canonical()
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && self.canonical_form() == other.canonical_form()
    }

    /// Minor containment with a replayable witness: `Some(steps)` iff some
    /// sequence of minor steps transforms `self` into a graph isomorphic to
    /// `h`. Iterative deepening is unnecessary because every step strictly
    /// shrinks the graph; plain depth-first search with canonical-form
    /// memoization of refuted graphs is exact.
    pub fn find_minor(&self, h: &Graph) -> Option<Vec<MinorStep>> {
        let target = h.canonical_form();
        let mut refuted: HashSet<Vec<u8>> = HashSet::new();
        self.find_minor_inner(h, &target, &mut refuted)
    }

    fn find_minor_inner(
        &self,
        h: &Graph,
        target: &[u8],
        refuted: &mut HashSet<Vec<u8>>,
    ) -> Option<Vec<MinorStep>> {
        if self.n < h.n || self.edges.len() < h.edges.len() {
            return None;
        }
        let canon = self.canonical_form();
        if canon == target {
            return Some(Vec::new());
        }
        if self.n == h.n && self.edges.len() == h.edges.len() {
            return None; // same size but not isomorphic; steps only shrink
        }
        if refuted.contains(&canon) {
            return None;
        }
        let mut child_seen = HashSet::new();
        for step in self.minor_steps() {
            let m = self.apply_minor_step(&step).expect("valid step");
            if !child_seen.insert(m.canonical_form()) {
                continue;
            }
            if let Some(mut seq) = m.find_minor_inner(h, target, refuted) {
                seq.insert(0, step);
                return Some(seq);
            }
        }
        refuted.insert(canon);
        None
    }

    pub fn has_minor(&self, h: &Graph) -> bool {
        self.find_minor(h).is_some()
    }
}

/// One elementary minor operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum MinorStep {
    DeleteEdge(usize, usize),
    ContractEdge(usize, usize),
    DeleteVertex(usize),
}

impl std::fmt::Display for MinorStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MinorStep::DeleteEdge(u, v) => write!(f, "delete-edge {}-{}", u, v),
            MinorStep::ContractEdge(u, v) => write!(f, "contract-edge {}-{}", u, v),
            MinorStep::DeleteVertex(v) => write!(f, "delete-vertex {}", v),
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct AdjGraph {
    adj: Vec<Vec<usize>>,
}

impl Canonize for AdjGraph {
    fn size(&self) -> usize {
        self.adj.len()
    }
    fn apply_morphism(&self, perm: &[usize]) -> Self {
        let mut adj = vec![Vec::new(); self.adj.len()];
        for (u, l) in self.adj.iter().enumerate() {
            adj[perm[u]] = l.iter().map(|&v| perm[v]).collect();
            adj[perm[u]].sort_unstable();
        }
        AdjGraph { adj }
    }
    fn invariant_neighborhood(&self, u: usize) -> Vec<Vec<usize>> {
        vec![self.adj[u].clone()]
    }
}
