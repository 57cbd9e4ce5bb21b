//! Immutable simple graphs and digraphs with dense `0..n` vertex labels.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// An unordered pair stored as `(u, v)` with `u < v`, or an arc `u -> v`.
pub type Edge = (usize, usize);

/// A nonnegative size that may also be infinite (girth of a forest, cyclic
/// edge connectivity of a graph without cyclic cuts).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extent {
    Finite(usize),
    Infinite,
}

impl Extent {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extent::Finite(k) => Some(k),
            Extent::Infinite => None,
        }
    }

    /// `self >= k`, treating infinity as larger than every integer.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Extent::Finite(x) => x >= k,
            Extent::Infinite => true,
        }
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(k) => write!(f, "{k}"),
            Extent::Infinite => f.write_str("inf"),
        }
    }
}

/// Undirected simple graph.
///
/// The edge list is canonical: every pair is stored as `(u, v)` with `u < v`
/// and the list is sorted, so two graphs built from the same edge set in any
/// order compare equal. An edge is identified by its position in that list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<FixedBitSet>,
    nbrs: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting out-of-range vertices, loops and repeated
    /// edges (in either orientation).
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { edge: (u, v), n });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        Ok(Self::from_canonical(n, list))
    }

    /// Caller guarantees `edges` is sorted, deduplicated and loop-free with
    /// `u < v` in each pair.
    pub(crate) fn from_canonical(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let mut nbrs = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].insert(v);
            adj[v].insert(u);
            nbrs[u].push(v);
            nbrs[v].push(u);
            incident[u].push(id);
            incident[v].push(id);
        }
        for v in 0..n {
            let mut pairs: Vec<(usize, usize)> = nbrs[v]
                .iter()
                .copied()
                .zip(incident[v].iter().copied())
                .collect();
            pairs.sort_unstable();
            nbrs[v] = pairs.iter().map(|p| p.0).collect();
            incident[v] = pairs.iter().map(|p| p.1).collect();
        }
        Graph {
            n,
            edges,
            adj,
            nbrs,
            incident,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    /// Edge ids incident to `v`, aligned with [`Graph::neighbors`].
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn adjacency(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == k)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_k_regular(3)
    }

    /// Non-edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adj[u].contains(v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    /// Graph on the same vertex set with the given edge ids removed.
    pub fn without_edges(&self, removed: &[usize]) -> Graph {
        let mut keep = vec![true; self.edges.len()];
        for &id in removed {
            keep[id] = false;
        }
        let edges = self
            .edges
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(&e, _)| e)
            .collect();
        Graph::from_canonical(self.n, edges)
    }

    /// Removes the listed vertices and relabels the rest in increasing order.
    /// Returns the new graph and the map old label -> new label.
    pub fn without_vertices(&self, removed: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !removed.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        (Graph::from_canonical(next, edges), map)
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.nbrs[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Length of a shortest cycle; infinite for forests.
    pub fn girth(&self) -> Extent {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                if 2 * dist[v] + 1 >= best {
                    break;
                }
                for &w in &self.nbrs[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Extent::Infinite
        } else {
            Extent::Finite(best)
        }
    }

    /// Proper 2-colouring `(A, B)` if one exists. In every component the
    /// smallest vertex lands in `A`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.nbrs[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let a = (0..self.n).filter(|&v| side[v] == 0).collect();
        let b = (0..self.n).filter(|&v| side[v] == 1).collect();
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Edge ids of all bridges (low-link DFS).
    pub fn bridges(&self) -> Vec<usize> {
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0; self.n];
        let mut out = Vec::new();
        let mut time = 0;
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            // frames: (vertex, edge id used to enter, next neighbour index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(frame) = stack.last_mut() {
                let (v, via, i) = *frame;
                if i < self.nbrs[v].len() {
                    frame.2 += 1;
                    let w = self.nbrs[v][i];
                    let id = self.incident[v][i];
                    if id == via {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, id, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.push(via);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }

    /// Minimum number of edges whose removal disconnects the graph
    /// (0 when already disconnected). Exhaustive over edge subsets of size
    /// below the minimum degree, so meant for small connectivity values.
    pub fn edge_connectivity(&self) -> usize {
        if self.n <= 1 {
            return 0;
        }
        if !self.is_connected() {
            return 0;
        }
        let bound = self.min_degree();
        let m = self.size();
        for k in 1..bound {
            let mut chosen = Vec::with_capacity(k);
            if any_subset(m, k, 0, &mut chosen, &mut |ids| {
                !self.without_edges(ids).is_connected()
            }) {
                return k;
            }
        }
        bound
    }

    /// Minimum number of vertices whose removal disconnects the graph
    /// (`n - 1` for complete graphs). Exhaustive over vertex subsets of size
    /// below the minimum degree.
    pub fn vertex_connectivity(&self) -> usize {
        if self.n <= 1 {
            return 0;
        }
        if !self.is_connected() {
            return 0;
        }
        if self.size() == self.n * (self.n - 1) / 2 {
            return self.n - 1;
        }
        let bound = self.min_degree();
        for k in 1..bound {
            let mut chosen = Vec::with_capacity(k);
            if any_subset(self.n, k, 0, &mut chosen, &mut |vs| {
                !self.without_vertices(vs).0.is_connected()
            }) {
                return k;
            }
        }
        bound
    }
}

/// Calls `test` on every `k`-subset of `0..m` (lexicographic) until it
/// returns true.
pub(crate) fn any_subset(
    m: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    test: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if chosen.len() == k {
        return test(chosen);
    }
    let need = k - chosen.len();
    for i in start..=m.saturating_sub(need) {
        if i >= m {
            break;
        }
        chosen.push(i);
        let hit = any_subset(m, k, i + 1, chosen, test);
        chosen.pop();
        if hit {
            return true;
        }
    }
    false
}

/// Directed simple graph: no loops, no repeated arcs; antiparallel arcs are
/// allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<Edge>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs)
            .finish()
    }
}

impl Digraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list = Vec::new();
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { edge: (u, v), n });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            list.push((u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateArc(w[0]));
        }
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in &list {
            out[u].push(v);
            inn[v].push(u);
        }
        for l in inn.iter_mut() {
            l.sort_unstable();
        }
        Ok(Digraph {
            n,
            arcs: list,
            out,
            inn,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Edge] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    pub fn is_k_diregular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.out_degree(v) == k && self.in_degree(v) == k)
    }
}

/// A set of edges separating two vertex classes of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    pub edges: Vec<Edge>,
    pub sides: (Vec<usize>, Vec<usize>),
}

impl EdgeCut {
    /// The cut `δ(side)`; `side` need not be sorted.
    pub fn around(g: &Graph, side: &[usize]) -> EdgeCut {
        let mut inside = vec![false; g.order()];
        for &v in side {
            inside[v] = true;
        }
        let edges = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| inside[u] != inside[v])
            .collect();
        let a = (0..g.order()).filter(|&v| inside[v]).collect();
        let b = (0..g.order()).filter(|&v| !inside[v]).collect();
        EdgeCut {
            edges,
            sides: (a, b),
        }
    }

    /// Recovers the separation induced by an edge set: the components of
    /// `G - edges` must split into two classes so that every listed edge
    /// crosses between them and no unlisted edge does.
    pub fn from_edges(g: &Graph, edges: &[Edge]) -> Result<EdgeCut> {
        let mut ids = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            let id = g.edge_id(u, v).ok_or(Error::MissingEdge((u, v)))?;
            if ids.contains(&id) {
                return Err(Error::DuplicateEdge(g.edge(id)));
            }
            ids.push(id);
        }
        let rest = g.without_edges(&ids);
        let comps = rest.components();
        if comps.len() < 2 {
            return Err(Error::NotAnEdgeCut(
                "removing the edges leaves the graph connected".into(),
            ));
        }
        let mut comp_of = vec![0; g.order()];
        for (c, vs) in comps.iter().enumerate() {
            for &v in vs {
                comp_of[v] = c;
            }
        }
        // 2-colour the component graph whose edges are the cut edges.
        let mut colour = vec![u8::MAX; comps.len()];
        let mut links = vec![Vec::new(); comps.len()];
        for &id in &ids {
            let (u, v) = g.edge(id);
            let (a, b) = (comp_of[u], comp_of[v]);
            if a == b {
                return Err(Error::NotAnEdgeCut(format!(
                    "edge {u}-{v} does not cross the separation"
                )));
            }
            links[a].push(b);
            links[b].push(a);
        }
        for s in 0..comps.len() {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(c) = queue.pop_front() {
                for &d in &links[c] {
                    if colour[d] == u8::MAX {
                        colour[d] = 1 - colour[c];
                        queue.push_back(d);
                    } else if colour[d] == colour[c] {
                        return Err(Error::NotAnEdgeCut(
                            "edges do not form the boundary of a vertex set".into(),
                        ));
                    }
                }
            }
        }
        let a: Vec<usize> = (0..g.order())
            .filter(|&v| colour[comp_of[v]] == 0)
            .collect();
        let b: Vec<usize> = (0..g.order())
            .filter(|&v| colour[comp_of[v]] == 1)
            .collect();
        if b.is_empty() {
            return Err(Error::NotAnEdgeCut("one side is empty".into()));
        }
        let mut sorted: Vec<Edge> = ids.iter().map(|&id| g.edge(id)).collect();
        sorted.sort_unstable();
        Ok(EdgeCut {
            edges: sorted,
            sides: (a, b),
        })
    }
}
