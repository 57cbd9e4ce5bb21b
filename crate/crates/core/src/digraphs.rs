//! Directed 2-factors (cycle covers) and the bipartite graph that encodes
//! them.
//!
//! For a digraph `D` on `n` vertices the associated bipartite graph has
//! `u' = 2u` and `u'' = 2u + 1`, an edge `u' v''` for every arc `u -> v`,
//! and the perfect matching `L0 = {u' u''}`. A cycle cover of `D` together
//! with `L0` forms a 2-factor in which every directed cycle of length `l`
//! becomes an undirected cycle of length `2l`.

use std::ops::ControlFlow;

use crate::error::Result;
use crate::graph::{Digraph, Edge, Graph};
use crate::matchings::OneFactor;
use crate::two_factors::{ClassificationReport, CycleType, HierarchyAccumulator, TwoFactor};

/// A spanning set of vertex-disjoint directed cycles.
///
/// Cycles start at their smallest vertex and follow the arcs; they are
/// sorted by `(length, first vertex)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectedTwoFactor {
    arcs: Vec<Edge>,
    cycles: Vec<Vec<usize>>,
}

impl DirectedTwoFactor {
    fn from_successors(succ: &[usize]) -> Self {
        let n = succ.len();
        let arcs = (0..n).map(|u| (u, succ[u])).collect();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                c.push(v);
                v = succ[v];
            }
            cycles.push(c);
        }
        cycles.sort_by_key(|c| (c.len(), c[0]));
        DirectedTwoFactor { arcs, cycles }
    }

    /// Arcs sorted by tail; the `u`-th arc leaves `u`.
    pub fn arcs(&self) -> &[Edge] {
        &self.arcs
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles.iter().map(Vec::len).collect())
    }

    pub fn successor(&self, u: usize) -> usize {
        self.arcs[u].1
    }
}

struct CoverSearch<'d> {
    d: &'d Digraph,
    succ: Vec<usize>,
    taken: Vec<bool>,
}

impl CoverSearch<'_> {
    fn run(
        &mut self,
        u: usize,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if u == self.d.order() {
            return visit(&self.succ);
        }
        for &v in self.d.out_neighbors(u) {
            if self.taken[v] {
                continue;
            }
            self.taken[v] = true;
            self.succ[u] = v;
            let flow = self.run(u + 1, visit);
            self.taken[v] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Assigns each vertex, in label order, an unused out-neighbour as its
/// successor; arc lists therefore come out in lexicographic order.
fn visit_covers(
    d: &Digraph,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = d.order();
    if (0..n).any(|v| d.out_degree(v) == 0 || d.in_degree(v) == 0) {
        return ControlFlow::Continue(());
    }
    let mut search = CoverSearch {
        d,
        succ: vec![usize::MAX; n],
        taken: vec![false; n],
    };
    search.run(0, visit)
}

pub fn for_each_directed_two_factor<F>(d: &Digraph, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&DirectedTwoFactor) -> ControlFlow<()>,
{
    visit_covers(d, &mut |succ| f(&DirectedTwoFactor::from_successors(succ)))
}

pub fn directed_two_factors(d: &Digraph) -> Vec<DirectedTwoFactor> {
    let mut out = Vec::new();
    let _ = visit_covers(d, &mut |succ| {
        out.push(DirectedTwoFactor::from_successors(succ));
        ControlFlow::Continue(())
    });
    out
}

fn lengths_of(succ: &[usize], seen: &mut [bool]) -> Vec<usize> {
    seen.iter_mut().for_each(|s| *s = false);
    let mut lengths = Vec::new();
    for s in 0..succ.len() {
        let mut len = 0;
        let mut v = s;
        while !seen[v] {
            seen[v] = true;
            v = succ[v];
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    lengths.sort_unstable();
    lengths
}

/// Hierarchy classification over cycle covers, with directed cycle lengths.
/// `pu` and `spu` of the report are the directed notions.
pub fn classify_digraph(d: &Digraph) -> ClassificationReport {
    let mut acc = HierarchyAccumulator::new(d.order());
    let mut seen = vec![false; d.order()];
    let _ = visit_covers(d, &mut |succ| {
        acc.add(&lengths_of(succ, &mut seen));
        ControlFlow::Continue(())
    });
    acc.finish(false)
}

/// Directed pseudo 2-factor isomorphism with early exit; `None` without a
/// cycle cover.
pub fn is_directed_pseudo_two_factor_isomorphic(d: &Digraph) -> Option<bool> {
    let mut first = None;
    let mut verdict = true;
    let mut seen = vec![false; d.order()];
    let _ = visit_covers(d, &mut |succ| {
        let parity = lengths_of(succ, &mut seen).len() % 2;
        if *first.get_or_insert(parity) != parity {
            verdict = false;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    first.map(|_| verdict)
}

/// The bipartite graph on `2n` vertices with edges `u' v''` for each arc,
/// together with `L0 = {u' u''}`.
pub fn associated_bipartite(d: &Digraph) -> Result<(Graph, OneFactor)> {
    let n = d.order();
    let mut edges: Vec<Edge> = d.arcs().iter().map(|&(u, v)| (2 * u, 2 * v + 1)).collect();
    let l0: Vec<Edge> = (0..n).map(|u| (2 * u, 2 * u + 1)).collect();
    edges.extend(&l0);
    let g = Graph::new(2 * n, edges)?;
    let m = OneFactor::new(&g, l0)?;
    Ok((g, m))
}

/// The arc edges alone: perfect matchings of this graph correspond to
/// cycle covers of `d`.
pub fn arc_bipartite(d: &Digraph) -> Graph {
    Graph::new(
        d.order() * 2,
        d.arcs().iter().map(|&(u, v)| (2 * u, 2 * v + 1)),
    )
    .expect("arcs are distinct and loop-free")
}

/// The 2-factor of the associated bipartite graph formed by `L0` and the
/// arc edges of a cover.
pub fn cover_to_two_factor(d: &Digraph, cover: &DirectedTwoFactor) -> Result<TwoFactor> {
    let (g, l0) = associated_bipartite(d)?;
    let mut edges: Vec<Edge> = l0.edges().to_vec();
    edges.extend(cover.arcs().iter().map(|&(u, v)| (2 * u, 2 * v + 1)));
    TwoFactor::new(&g, edges)
}

/// Inverse of [`cover_to_two_factor`]: `None` if `f` does not contain `L0`.
pub fn two_factor_to_cover(d: &Digraph, f: &TwoFactor) -> Option<DirectedTwoFactor> {
    let n = d.order();
    let mut succ = vec![usize::MAX; n];
    for u in 0..n {
        if !f.contains_edge(2 * u, 2 * u + 1) {
            return None;
        }
    }
    for &(a, b) in f.edges() {
        if b == a + 1 && a % 2 == 0 {
            continue;
        }
        let (out, inn) = if a % 2 == 0 { (a, b) } else { (b, a) };
        succ[out / 2] = inn / 2;
    }
    Some(DirectedTwoFactor::from_successors(&succ))
}
