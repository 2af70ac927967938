//! Simple graphs, multigraphs and vertex orders.
//!
//! Every value here is immutable once built. Transforms return new values and
//! keep vertex labels intact, so a vertex can be followed through the whole
//! pipeline by its label.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub type Label = u32;
pub type VertexSet = BTreeSet<Label>;

/// Simple undirected graph over integer labels.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Label, BTreeSet<Label>>,
    edge_count: usize,
}

/// Accumulates vertices and edges, then freezes into a [`Graph`].
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    graph: Graph,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: Label) -> &mut Self {
        self.graph.adj.entry(v).or_default();
        self
    }

    /// Adds the edge `uv`; duplicates collapse. Self-loops are rejected.
    pub fn add_edge(&mut self, u: Label, v: Label) -> Result<&mut Self> {
        if u == v {
            return Err(Error::Precondition(format!("self-loop at vertex {u}")));
        }
        if self.graph.adj.entry(u).or_default().insert(v) {
            self.graph.adj.entry(v).or_default().insert(u);
            self.graph.edge_count += 1;
        }
        Ok(self)
    }

    pub fn has_vertex(&self, v: Label) -> bool {
        self.graph.adj.contains_key(&v)
    }

    pub fn build(self) -> Graph {
        self.graph
    }
}

impl Graph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Edgeless graph on the given labels.
    pub fn edgeless<I: IntoIterator<Item = Label>>(vertices: I) -> Self {
        let mut b = GraphBuilder::new();
        for v in vertices {
            b.add_vertex(v);
        }
        b.build()
    }

    pub fn from_edges<I: IntoIterator<Item = (Label, Label)>>(edges: I) -> Result<Self> {
        let mut b = GraphBuilder::new();
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn complete<I: IntoIterator<Item = Label>>(vertices: I) -> Self {
        let vs: Vec<Label> = vertices.into_iter().collect();
        let mut b = GraphBuilder::new();
        for (i, &u) in vs.iter().enumerate() {
            b.add_vertex(u);
            for &v in &vs[i + 1..] {
                b.add_edge(u, v).expect("distinct labels");
            }
        }
        b.build()
    }

    pub fn cycle(n: Label) -> Self {
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.add_vertex(i);
        }
        if n >= 3 {
            for i in 0..n {
                b.add_edge(i, (i + 1) % n).expect("n >= 3");
            }
        }
        b.build()
    }

    pub fn path(n: Label) -> Self {
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.add_vertex(i);
            if i > 0 {
                b.add_edge(i - 1, i).expect("distinct");
            }
        }
        b.build()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn contains(&self, v: Label) -> bool {
        self.adj.contains_key(&v)
    }

    /// Vertices in ascending label order.
    pub fn vertices(&self) -> impl Iterator<Item = Label> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    /// Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: Label) -> &BTreeSet<Label> {
        &self.adj[&v]
    }

    pub fn try_neighbors(&self, v: Label) -> Result<&BTreeSet<Label>> {
        self.adj.get(&v).ok_or(Error::UnknownVertex(v))
    }

    pub fn degree(&self, v: Label) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Label, v: Label) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn max_label(&self) -> Option<Label> {
        self.adj.keys().next_back().copied()
    }

    /// Smallest label strictly above every existing label.
    pub fn fresh_label(&self) -> Label {
        self.max_label().map_or(0, |m| m + 1)
    }

    pub fn check_subset(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|v| !self.contains(**v)) {
            Some(&v) => Err(Error::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_subset(s)?;
        let mut b = GraphBuilder::new();
        for &u in s {
            b.add_vertex(u);
            for &v in self.adj[&u].range(u + 1..) {
                if s.contains(&v) {
                    b.add_edge(u, v)?;
                }
            }
        }
        Ok(b.build())
    }

    /// Keeps all vertices and only the edges accepted by `keep`.
    pub fn filter_edges<F: FnMut(Label, Label) -> bool>(&self, mut keep: F) -> Graph {
        let mut b = GraphBuilder::new();
        for v in self.vertices() {
            b.add_vertex(v);
        }
        for (u, v) in self.edges() {
            if keep(u, v) {
                b.add_edge(u, v).expect("edge of a simple graph");
            }
        }
        b.build()
    }

    pub fn complement(&self) -> Graph {
        let vs: Vec<Label> = self.vertices().collect();
        let mut b = GraphBuilder::new();
        for (i, &u) in vs.iter().enumerate() {
            b.add_vertex(u);
            for &v in &vs[i + 1..] {
                if !self.has_edge(u, v) {
                    b.add_edge(u, v).expect("distinct labels");
                }
            }
        }
        b.build()
    }

    /// Checks that `s` is pairwise non-adjacent.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|&u| self.adj.get(&u).is_none_or(|ns| ns.is_disjoint(s)))
    }

    /// Parses the edge-list text format (`# comment`, `v <id>`, `e <u> <v>`).
    pub fn parse(text: &str) -> Result<Graph> {
        let mut b = GraphBuilder::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = body.split_whitespace().collect();
            let label = |tok: &str| -> Result<Label> {
                tok.parse::<Label>().map_err(|_| Error::Parse {
                    line,
                    message: format!("invalid vertex label {tok:?}"),
                })
            };
            match tokens.as_slice() {
                ["v", id] => {
                    b.add_vertex(label(id)?);
                }
                ["e", u, v] => {
                    let (u, v) = (label(u)?, label(v)?);
                    if u == v {
                        return Err(Error::Parse {
                            line,
                            message: format!("self-loop at line {line}"),
                        });
                    }
                    b.add_edge(u, v)?;
                }
                _ => {
                    return Err(Error::Parse {
                        line,
                        message: format!("unrecognised line {body:?}"),
                    })
                }
            }
        }
        Ok(b.build())
    }

    /// Canonical text: every vertex as a `v` line, then every edge with `u < v`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub(crate) fn indexed(&self) -> IndexedGraph {
        IndexedGraph::new(self)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.vertices() {
            writeln!(f, "v {v}")?;
        }
        for (u, v) in self.edges() {
            writeln!(f, "e {u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse(s)
    }
}

/// Dense 0-based view of a [`Graph`]; index order is ascending label order.
#[derive(Debug, Clone)]
pub(crate) struct IndexedGraph {
    pub labels: Vec<Label>,
    pub adj: Vec<Vec<usize>>,
}

impl IndexedGraph {
    fn new(g: &Graph) -> Self {
        let labels: Vec<Label> = g.vertices().collect();
        let index: HashMap<Label, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let adj = labels
            .iter()
            .map(|l| g.neighbors(*l).iter().map(|n| index[n]).collect())
            .collect();
        Self { labels, adj }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }
}

/// Undirected multigraph; `multiplicity` is keyed by `(u, v)` with `u < v`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multigraph {
    vertices: VertexSet,
    multiplicity: BTreeMap<(Label, Label), u32>,
}

fn ordered(u: Label, v: Label) -> (Label, Label) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Multigraph {
    pub fn new<I: IntoIterator<Item = Label>>(vertices: I) -> Self {
        Self {
            vertices: vertices.into_iter().collect(),
            multiplicity: BTreeMap::new(),
        }
    }

    pub fn add_edge(&mut self, u: Label, v: Label) -> Result<()> {
        if u == v {
            return Err(Error::Precondition(format!("self-loop at vertex {u}")));
        }
        self.vertices.insert(u);
        self.vertices.insert(v);
        *self.multiplicity.entry(ordered(u, v)).or_insert(0) += 1;
        Ok(())
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn multiplicity(&self, u: Label, v: Label) -> u32 {
        self.multiplicity.get(&ordered(u, v)).copied().unwrap_or(0)
    }

    /// Distinct vertex pairs with their multiplicity, `u < v`.
    pub fn pairs(&self) -> impl Iterator<Item = ((Label, Label), u32)> + '_ {
        self.multiplicity.iter().map(|(&k, &m)| (k, m))
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.multiplicity.values().map(|&m| u64::from(m)).sum()
    }

    /// Degree counted with multiplicity.
    pub fn degree(&self, v: Label) -> u64 {
        self.multiplicity
            .iter()
            .filter(|((a, b), _)| *a == v || *b == v)
            .map(|(_, &m)| u64::from(m))
            .sum()
    }

    /// Distinct neighbours of `v`.
    pub fn neighbors(&self, v: Label) -> VertexSet {
        self.multiplicity
            .keys()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn max_degree(&self) -> u64 {
        self.vertices.iter().map(|&v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn underlying_simple(&self) -> Graph {
        let mut b = GraphBuilder::new();
        for &v in &self.vertices {
            b.add_vertex(v);
        }
        for &(u, v) in self.multiplicity.keys() {
            b.add_edge(u, v).expect("multigraph has no loops");
        }
        b.build()
    }
}

/// A permutation of a vertex set, with position lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder {
    sequence: Vec<Label>,
    position: HashMap<Label, usize>,
}

impl VertexOrder {
    /// Builds an order; repeated labels are rejected.
    pub fn new(sequence: Vec<Label>) -> Result<Self> {
        let mut position = HashMap::with_capacity(sequence.len());
        for (i, &v) in sequence.iter().enumerate() {
            if position.insert(v, i).is_some() {
                return Err(Error::NotPermutation(format!("label {v} repeated")));
            }
        }
        Ok(Self { sequence, position })
    }

    /// Checks that the order is a permutation of `V(g)`.
    pub fn check_for(&self, g: &Graph) -> Result<()> {
        if self.sequence.len() != g.vertex_count() {
            return Err(Error::NotPermutation(format!(
                "order has {} labels, graph has {} vertices",
                self.sequence.len(),
                g.vertex_count()
            )));
        }
        match self.sequence.iter().find(|v| !g.contains(**v)) {
            Some(v) => Err(Error::NotPermutation(format!("label {v} is not a vertex"))),
            None => Ok(()),
        }
    }

    pub fn as_slice(&self) -> &[Label] {
        &self.sequence
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn position(&self, v: Label) -> Option<usize> {
        self.position.get(&v).copied()
    }

    /// Neighbours of `v` placed strictly after it.
    pub fn later_neighbors<'a>(&'a self, g: &'a Graph, v: Label) -> impl Iterator<Item = Label> + 'a {
        let pos = self.position[&v];
        g.neighbors(v)
            .iter()
            .copied()
            .filter(move |w| self.position[w] > pos)
    }

    /// Neighbours of `v` placed strictly before it.
    pub fn earlier_neighbors<'a>(&'a self, g: &'a Graph, v: Label) -> impl Iterator<Item = Label> + 'a {
        let pos = self.position[&v];
        g.neighbors(v)
            .iter()
            .copied()
            .filter(move |w| self.position[w] < pos)
    }

    /// True when the members of `s` occupy a contiguous block.
    pub fn is_consecutive(&self, s: &VertexSet) -> bool {
        let mut pos: Vec<usize> = match s.iter().map(|v| self.position(*v)).collect() {
            Some(p) => p,
            None => return false,
        };
        if pos.is_empty() {
            return true;
        }
        pos.sort_unstable();
        pos[pos.len() - 1] - pos[0] + 1 == pos.len()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut seq = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let body = line.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            for tok in body.split_whitespace() {
                seq.push(tok.parse::<Label>().map_err(|_| Error::Parse {
                    line: idx + 1,
                    message: format!("invalid vertex label {tok:?}"),
                })?);
            }
        }
        Self::new(seq)
    }
}

impl fmt::Display for VertexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.sequence {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Serialized as the vertex list plus `[u, v, multiplicity]` triples.
impl Serialize for Multigraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let edges: Vec<(Label, Label, u32)> = self.pairs().map(|((u, v), m)| (u, v, m)).collect();
        let mut st = s.serialize_struct("Multigraph", 2)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

impl Serialize for VertexOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.sequence.serialize(s)
    }
}

/// Reads a clique file: one vertex label per line, `#` comments allowed.
pub fn parse_vertex_list(text: &str) -> Result<VertexSet> {
    let mut out = VertexSet::new();
    for (idx, line) in text.lines().enumerate() {
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        for tok in body.split_whitespace() {
            out.insert(tok.parse::<Label>().map_err(|_| Error::Parse {
                line: idx + 1,
                message: format!("invalid vertex label {tok:?}"),
            })?);
        }
    }
    Ok(out)
}

pub fn format_vertex_list(s: &VertexSet) -> String {
    s.iter().map(|v| format!("{v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[Label]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn parse_basic_and_dedup() {
        let g = Graph::parse("v 0\nv 1\ne 0 1").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));

        let g = Graph::parse("# header\ne 0 1\ne 1 0\n\ne 0 1").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_rejects_self_loop_with_line_number() {
        let err = Graph::parse("e 3 3").unwrap_err();
        assert_eq!(
            err,
            Error::Parse { line: 1, message: "self-loop at line 1".into() }
        );
        assert!(err.to_string().contains("self-loop at line 1"));
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        assert!(matches!(Graph::parse("v 0\ne 0 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse("e -1 2"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Graph::parse("q 1 2"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn canonical_text() {
        let g = Graph::parse("e 2 1\nv 7\ne 0 2").unwrap();
        assert_eq!(g.to_text(), "v 0\nv 1\nv 2\nv 7\ne 0 2\ne 1 2\n");
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(0..4);
        let k3 = k4.induced_subgraph(&set(&[0, 2, 3])).unwrap();
        assert_eq!(k3, Graph::complete([0, 2, 3]));

        let empty = k4.induced_subgraph(&VertexSet::new()).unwrap();
        assert!(empty.is_empty());

        let c5 = Graph::cycle(5);
        let p = c5.induced_subgraph(&set(&[0, 1, 2])).unwrap();
        assert_eq!(p, Graph::path(3));

        assert_eq!(
            c5.induced_subgraph(&set(&[0, 9])).unwrap_err(),
            Error::UnknownVertex(9)
        );
    }

    #[test]
    fn complements() {
        assert_eq!(Graph::complete(0..5).complement(), Graph::edgeless(0..5));
        assert_eq!(Graph::edgeless(0..6).complement(), Graph::complete(0..6));
        let c5 = Graph::cycle(5);
        let comp = c5.complement();
        // the complement of C5 is the pentagram 0-2-4-1-3-0
        let star = Graph::from_edges([(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(comp, star);
    }

    #[test]
    fn underlying_simple_collapses_multiplicity() {
        let mut m = Multigraph::new([0, 1]);
        for _ in 0..3 {
            m.add_edge(0, 1).unwrap();
        }
        assert_eq!(m.multiplicity(1, 0), 3);
        assert_eq!(m.degree(0), 3);
        let g = m.underlying_simple();
        assert_eq!(g, Graph::from_edges([(0, 1)]).unwrap());
        assert!(Multigraph::default().underlying_simple().is_empty());
    }

    #[test]
    fn vertex_order_basics() {
        assert!(VertexOrder::new(vec![1, 2, 1]).is_err());
        let o = VertexOrder::new(vec![3, 1, 2, 0]).unwrap();
        assert_eq!(o.position(2), Some(2));
        assert_eq!(o.to_string(), "3 1 2 0");
        assert_eq!(VertexOrder::parse("3 1\n2 0").unwrap(), o);
        assert!(o.is_consecutive(&set(&[1, 2])));
        assert!(!o.is_consecutive(&set(&[3, 2])));
        assert!(o.is_consecutive(&VertexSet::new()));
        let g = Graph::edgeless(0..4);
        o.check_for(&g).unwrap();
        assert!(o.check_for(&Graph::edgeless(0..5)).is_err());
    }

    #[test]
    fn vertex_list_round_trip() {
        let s = set(&[4, 0, 9]);
        assert_eq!(parse_vertex_list(&format_vertex_list(&s)).unwrap(), s);
        assert!(parse_vertex_list("").unwrap().is_empty());
    }
}
