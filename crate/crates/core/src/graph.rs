//! Finite directed multigraphs with `{0,1}`-graded edges, relative vertex
//! sets, and the derived integer matrices (vertex inclusion and signed
//! adjacency).
//!
//! Conventions: an edge points *into* its range, so a vertex is regular
//! exactly when it receives at least one edge. The signed adjacency entry at
//! `(v, w)` sums `(−1)^parity` over the edges from `w` into `v`. Matrix rows
//! and columns follow the vertex declaration order of the input document;
//! relative-set indices use the induced subsequence order.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Edge grading value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_int(value: i64) -> Option<Parity> {
        match value {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn as_int(self) -> i64 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    /// `(−1)^parity`
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn flipped(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub source: String,
    pub range: String,
    pub parity: Parity,
}

/// Finite directed graph with named vertices, parallel edges and loops
/// allowed, and a parity per edge. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    index_of: HashMap<String, usize>,
}

impl Graph {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>) -> Result<Graph> {
        let mut index_of = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index_of.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut edge_ids = HashSet::with_capacity(edges.len());
        for e in &edges {
            if !edge_ids.insert(e.id.clone()) {
                return Err(Error::DuplicateEdge(e.id.clone()));
            }
            for (role, endpoint) in [("source", &e.source), ("range", &e.range)] {
                if !index_of.contains_key(endpoint) {
                    return Err(Error::DanglingEndpoint {
                        edge: e.id.clone(),
                        role,
                        vertex: endpoint.clone(),
                    });
                }
            }
        }
        Ok(Graph {
            vertices,
            edges,
            index_of,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.index_of.get(id).copied()
    }

    pub fn has_vertex(&self, id: &str) -> bool {
        self.index_of.contains_key(id)
    }

    /// Vertices receiving at least one edge, in declaration order.
    /// Finiteness of `vE¹` is automatic for these graphs.
    pub fn regular_vertices(&self) -> Vec<String> {
        let mut receives = vec![false; self.vertices.len()];
        for e in &self.edges {
            receives[self.index_of[&e.range]] = true;
        }
        self.vertices
            .iter()
            .zip(&receives)
            .filter(|(_, r)| **r)
            .map(|(v, _)| v.clone())
            .collect()
    }

    pub fn is_regular(&self, id: &str) -> bool {
        self.edges.iter().any(|e| e.range == id)
    }

    /// Vertex-by-vertex edge count matrix: entry `(v, w)` counts the edges
    /// from `w` into `v`.
    pub fn adjacency_counts(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.vertex_count(), self.vertex_count());
        for e in &self.edges {
            m[(self.index_of[&e.range], self.index_of[&e.source])] += BigInt::from(1);
        }
        m.with_labels(self.vertices.clone(), self.vertices.clone())
    }

    /// Copy of the graph with every edge parity replaced by `parity`.
    pub fn with_uniform_parity(&self, parity: Parity) -> Graph {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.parity = parity;
        }
        g
    }

    /// Copy of the graph with every edge parity flipped.
    pub fn with_flipped_parities(&self) -> Graph {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.parity = e.parity.flipped();
        }
        g
    }

    /// Attaches a tail of `length` fresh vertices feeding into `at`:
    /// edges `at_1 → at`, `at_2 → at_1`, …, all with parity 0. Fresh
    /// identifiers get a `~n` suffix if the plain `at_k` name is taken.
    /// The original graph is left unmodified.
    pub fn add_tail(&self, at: &str, length: usize) -> Result<Graph> {
        if length < 1 {
            return Err(Error::ZeroTailLength);
        }
        if !self.has_vertex(at) {
            return Err(Error::UnknownVertex(at.to_string()));
        }
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        let mut vertex_ids: HashSet<String> = vertices.iter().cloned().collect();
        let mut edge_ids: HashSet<String> = edges.iter().map(|e| e.id.clone()).collect();

        let mut previous = at.to_string();
        for k in 1..=length {
            let vertex = fresh_id(&format!("{at}_{k}"), |id| vertex_ids.contains(id));
            vertex_ids.insert(vertex.clone());
            vertices.push(vertex.clone());
            let edge_id = fresh_id(&format!("{at}_tail_{k}"), |id| edge_ids.contains(id));
            edge_ids.insert(edge_id.clone());
            edges.push(Edge {
                id: edge_id,
                source: vertex.clone(),
                range: previous,
                parity: Parity::Even,
            });
            previous = vertex;
        }
        Graph::new(vertices, edges)
    }
}

fn fresh_id(base: &str, taken: impl Fn(&str) -> bool) -> String {
    if !taken(base) {
        return base.to_string();
    }
    let mut n = 2usize;
    loop {
        let candidate = format!("{base}~{n}");
        if !taken(&candidate) {
            return candidate;
        }
        n += 1;
    }
}

/// Validated subset of the regular vertices, stored in the induced vertex
/// declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeSet {
    members: Vec<String>,
}

impl RelativeSet {
    /// Validates `members ⊆ regular_vertices(graph)`, dropping duplicates
    /// and normalizing to declaration order.
    pub fn new<I, S>(graph: &Graph, members: I) -> Result<RelativeSet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut indices = Vec::new();
        for member in members {
            let member: String = member.into();
            let Some(idx) = graph.vertex_index(&member) else {
                return Err(Error::UnknownVertex(member));
            };
            if !graph.is_regular(&member) {
                return Err(Error::NotRegular(member));
            }
            indices.push(idx);
        }
        indices.sort_unstable();
        indices.dedup();
        Ok(RelativeSet {
            members: indices
                .into_iter()
                .map(|i| graph.vertices()[i].clone())
                .collect(),
        })
    }

    pub fn empty() -> RelativeSet {
        RelativeSet {
            members: Vec::new(),
        }
    }

    pub fn all_regular(graph: &Graph) -> RelativeSet {
        RelativeSet {
            members: graph.regular_vertices(),
        }
    }

    pub fn members(&self) -> &[String] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.members.iter().any(|m| m == id)
    }
}

impl fmt::Display for RelativeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.members.join(", "))
    }
}

/// A graph together with a validated relative vertex set and the two
/// matrices everything downstream consumes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTheoryProblem {
    graph: Graph,
    relative_set: RelativeSet,
    /// Matrix of the inclusion `ZV → ZE⁰`: rows indexed by the vertices,
    /// columns by the relative set, one 1 per column.
    inclusion_matrix: IntMatrix,
    /// Signed adjacency: rows indexed by the relative set, columns by the
    /// vertices; entry `(v, w)` sums `(−1)^parity` over edges from `w`
    /// into `v`. Cancelling parallel edges leave a plain 0.
    signed_adjacency: IntMatrix,
}

impl KTheoryProblem {
    pub fn new(graph: Graph, relative_set: RelativeSet) -> Result<KTheoryProblem> {
        // RelativeSet is validated against *some* graph at construction;
        // revalidate against this one so mismatched pairs cannot sneak in.
        let relative_set = RelativeSet::new(&graph, relative_set.members.iter().cloned())?;
        let v_labels = relative_set.members().to_vec();
        let e_labels = graph.vertices().to_vec();

        let mut inclusion = IntMatrix::zero(graph.vertex_count(), relative_set.len());
        for (col, v) in relative_set.members().iter().enumerate() {
            inclusion[(graph.vertex_index(v).unwrap(), col)] = BigInt::from(1);
        }

        let row_of: HashMap<&str, usize> = relative_set
            .members()
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut signed = IntMatrix::zero(relative_set.len(), graph.vertex_count());
        for e in graph.edges() {
            if let Some(&row) = row_of.get(e.range.as_str()) {
                let col = graph.vertex_index(&e.source).unwrap();
                signed[(row, col)] += BigInt::from(e.parity.sign());
            }
        }

        Ok(KTheoryProblem {
            inclusion_matrix: inclusion.with_labels(e_labels.clone(), v_labels.clone()),
            signed_adjacency: signed.with_labels(v_labels, e_labels),
            graph,
            relative_set,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn relative_set(&self) -> &RelativeSet {
        &self.relative_set
    }

    pub fn inclusion_matrix(&self) -> &IntMatrix {
        &self.inclusion_matrix
    }

    pub fn signed_adjacency(&self) -> &IntMatrix {
        &self.signed_adjacency
    }
}

/// Builds a [`KTheoryProblem`] after validating `v_set` against the graph's
/// regular vertices.
pub fn make_problem<I, S>(graph: &Graph, v_set: I) -> Result<KTheoryProblem>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let relative_set = RelativeSet::new(graph, v_set)?;
    KTheoryProblem::new(graph.clone(), relative_set)
}

/// How a document designates its relative vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelativeSetSpec {
    /// `"all_regular"`: every regular vertex, the graph-algebra case.
    AllRegular,
    /// `"empty"`: the Toeplitz case.
    Empty,
    /// Explicit vertex list.
    Explicit(Vec<String>),
}

impl RelativeSetSpec {
    pub fn resolve(&self, graph: &Graph) -> Result<RelativeSet> {
        match self {
            RelativeSetSpec::AllRegular => Ok(RelativeSet::all_regular(graph)),
            RelativeSetSpec::Empty => Ok(RelativeSet::empty()),
            RelativeSetSpec::Explicit(members) => RelativeSet::new(graph, members.iter().cloned()),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawEdge {
    id: String,
    source: String,
    range: String,
    parity: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawRelativeSet {
    Keyword(String),
    List(Vec<String>),
}

#[derive(Serialize, Deserialize)]
struct RawDocument {
    vertices: Vec<String>,
    edges: Vec<RawEdge>,
    relative_set: RawRelativeSet,
}

/// Parsed graph document: the graph plus its relative-set designation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    pub relative_spec: RelativeSetSpec,
}

impl GraphDocument {
    /// Parses a UTF-8 JSON graph document:
    ///
    /// ```json
    /// { "vertices": ["u", "v"],
    ///   "edges": [ {"id": "e1", "source": "u", "range": "v", "parity": 1} ],
    ///   "relative_set": ["v"] }
    /// ```
    ///
    /// `relative_set` is a vertex list, `"all_regular"`, or `"empty"`.
    /// Vertex and edge declaration order is preserved; it fixes row and
    /// column order in every derived matrix.
    pub fn parse(text: &str) -> Result<GraphDocument> {
        let raw: RawDocument =
            serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
        let mut edges = Vec::with_capacity(raw.edges.len());
        for e in raw.edges {
            let Some(parity) = Parity::from_int(e.parity) else {
                return Err(Error::InvalidParity {
                    edge: e.id,
                    parity: e.parity,
                });
            };
            edges.push(Edge {
                id: e.id,
                source: e.source,
                range: e.range,
                parity,
            });
        }
        let graph = Graph::new(raw.vertices, edges)?;
        let relative_spec = match raw.relative_set {
            RawRelativeSet::Keyword(word) => match word.as_str() {
                "all_regular" => RelativeSetSpec::AllRegular,
                "empty" => RelativeSetSpec::Empty,
                other => {
                    return Err(Error::MalformedDocument(format!(
                        "relative_set must be a vertex list, \"all_regular\" or \"empty\"; got \"{other}\""
                    )))
                }
            },
            RawRelativeSet::List(members) => {
                // Validate eagerly so parse errors carry the offending id.
                RelativeSet::new(&graph, members.iter().cloned())?;
                RelativeSetSpec::Explicit(members)
            }
        };
        Ok(GraphDocument {
            graph,
            relative_spec,
        })
    }

    pub fn problem(&self) -> Result<KTheoryProblem> {
        let relative_set = self.relative_spec.resolve(&self.graph)?;
        KTheoryProblem::new(self.graph.clone(), relative_set)
    }

    /// Canonical single-line serialization: parsed content only, explicit
    /// relative sets normalized to declaration order. Whitespace and JSON
    /// field order in the source cannot affect this form, so it is the
    /// right thing to feed a digest.
    pub fn to_canonical_json(&self) -> String {
        let relative_set = match &self.relative_spec {
            RelativeSetSpec::AllRegular => RawRelativeSet::Keyword("all_regular".into()),
            RelativeSetSpec::Empty => RawRelativeSet::Keyword("empty".into()),
            RelativeSetSpec::Explicit(members) => RawRelativeSet::List(
                // normalized order; validated at parse time
                RelativeSet::new(&self.graph, members.iter().cloned())
                    .map(|s| s.members().to_vec())
                    .unwrap_or_else(|_| members.clone()),
            ),
        };
        let raw = RawDocument {
            vertices: self.graph.vertices().to_vec(),
            edges: self
                .graph
                .edges()
                .iter()
                .map(|e| RawEdge {
                    id: e.id.clone(),
                    source: e.source.clone(),
                    range: e.range.clone(),
                    parity: e.parity.as_int(),
                })
                .collect(),
            relative_set,
        };
        serde_json::to_string(&raw).expect("document serialization cannot fail")
    }
}

/// Parses the graph portion of a document, discarding the relative set.
pub fn parse_graph(text: &str) -> Result<Graph> {
    Ok(GraphDocument::parse(text)?.graph)
}

/// The 1-vertex graph with `n` parity-0 loops (the `O_n` graph for `n ≥ 2`).
pub fn cuntz_graph(n: usize) -> Graph {
    graded_cuntz_graph(n, 0)
}

/// The 1-vertex graph with `n` loops of which `odd` have parity 1.
pub fn graded_cuntz_graph(n: usize, odd: usize) -> Graph {
    assert!(odd <= n, "more odd loops than loops");
    let edges = (0..n)
        .map(|i| Edge {
            id: format!("e{}", i + 1),
            source: "v".into(),
            range: "v".into(),
            parity: if i < odd { Parity::Odd } else { Parity::Even },
        })
        .collect();
    Graph::new(vec!["v".into()], edges).expect("loop graph is always valid")
}
