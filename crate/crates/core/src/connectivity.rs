//! Cyclic edge connectivity.
//!
//! A cyclic edge cut is a set of edges whose removal leaves two components
//! that each contain a cycle. The search below is exhaustive over edge
//! subsets in increasing size, stopping at the first cut found or at an
//! explicit upper bound, so its cost is governed by the answer rather than by
//! the graph size. It is intended for catalog-sized graphs.

use crate::graph::{any_subset, Edge, EdgeCut, Extent, Graph};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Number of components of `G - removed` that contain a cycle, restricted to
/// vertices not in `dead`.
fn cyclic_components(g: &Graph, removed: &[bool], dead: &[bool]) -> usize {
    let n = g.order();
    let mut uf = UnionFind::new(n);
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if !removed[id] && !dead[u] && !dead[v] {
            uf.union(u, v);
        }
    }
    let mut verts = vec![0usize; n];
    let mut edges = vec![0usize; n];
    for v in 0..n {
        if !dead[v] {
            let r = uf.find(v);
            verts[r] += 1;
        }
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if !removed[id] && !dead[u] && !dead[v] {
            let r = uf.find(u);
            edges[r] += 1;
        }
    }
    (0..n)
        .filter(|&r| verts[r] > 0 && edges[r] >= verts[r])
        .count()
}

fn has_cycle_outside(g: &Graph, cycle: &[usize]) -> bool {
    let mut dead = vec![false; g.order()];
    for &v in cycle {
        dead[v] = true;
    }
    cyclic_components(g, &vec![false; g.size()], &dead) > 0
}

/// A shortest cycle through `s`, as a vertex list.
fn shortest_cycle_through(g: &Graph, s: usize) -> Option<Vec<usize>> {
    let n = g.order();
    // BFS labelling every vertex with the first edge on its tree path from s
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut branch = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    let mut best: Option<(usize, usize, usize)> = None;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                branch[w] = if v == s { w } else { branch[v] };
                queue.push_back(w);
            } else if w != parent[v] && v != s && w != s && branch[v] != branch[w] {
                let len = dist[v] + dist[w] + 1;
                if best.is_none_or(|b| len < b.0) {
                    best = Some((len, v, w));
                }
            }
        }
    }
    let (_, a, b) = best?;
    let mut left = vec![a];
    while *left.last().unwrap() != s {
        left.push(parent[*left.last().unwrap()]);
    }
    let mut right = vec![b];
    while parent[*right.last().unwrap()] != s {
        right.push(parent[*right.last().unwrap()]);
    }
    left.reverse();
    left.extend(right);
    Some(left)
}

/// Searches simple cycles for one whose complement still contains a cycle.
fn disjoint_cycle_witness(g: &Graph) -> Option<Vec<usize>> {
    for s in 0..g.order() {
        if let Some(c) = shortest_cycle_through(g, s) {
            if has_cycle_outside(g, &c) {
                return Some(c);
            }
        }
    }
    // Fallback: all simple cycles, each generated once from its smallest vertex.
    let n = g.order();
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        on_path[s] = true;
        if let Some(c) = extend_cycles(g, s, &mut path, &mut on_path) {
            return Some(c);
        }
        on_path[s] = false;
    }
    None
}

fn extend_cycles(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> Option<Vec<usize>> {
    let v = *path.last().unwrap();
    for &w in g.neighbors(v) {
        if w == s && path.len() >= 3 && path[1] < v {
            if has_cycle_outside(g, path) {
                return Some(path.clone());
            }
        } else if w > s && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            let hit = extend_cycles(g, s, path, on_path);
            path.pop();
            on_path[w] = false;
            if hit.is_some() {
                return hit;
            }
        }
    }
    None
}

/// Smallest cyclic edge cut with fewer than `limit` edges, if any.
fn cyclic_cut_below(g: &Graph, limit: usize) -> Option<Vec<usize>> {
    let m = g.size();
    let dead = vec![false; g.order()];
    let mut removed = vec![false; m];
    for k in 0..limit.min(m + 1) {
        let mut chosen = Vec::with_capacity(k);
        let mut witness = None;
        any_subset(m, k, 0, &mut chosen, &mut |ids| {
            for &id in ids {
                removed[id] = true;
            }
            let hit = cyclic_components(g, &removed, &dead) >= 2;
            for &id in ids {
                removed[id] = false;
            }
            if hit {
                witness = Some(ids.to_vec());
            }
            hit
        });
        if witness.is_some() {
            return witness;
        }
    }
    None
}

/// Size of a smallest cyclic edge cut, or infinite when the graph has no two
/// vertex-disjoint cycles.
pub fn cyclic_edge_connectivity(g: &Graph) -> Extent {
    minimum_cyclic_cut(g).map_or(Extent::Infinite, |cut| Extent::Finite(cut.edges.len()))
}

/// A smallest cyclic edge cut, if one exists.
pub fn minimum_cyclic_cut(g: &Graph) -> Option<EdgeCut> {
    let first = disjoint_cycle_witness(g)?;
    // Upper bound: the boundary of a cycle whose complement has a cycle.
    let mut best = EdgeCut::around(g, &first);
    for s in 0..g.order() {
        if let Some(c) = shortest_cycle_through(g, s) {
            if has_cycle_outside(g, &c) {
                let cut = EdgeCut::around(g, &c);
                if cut.edges.len() < best.edges.len() {
                    best = cut;
                }
            }
        }
    }
    if let Some(ids) = cyclic_cut_below(g, best.edges.len()) {
        let edges: Vec<Edge> = ids.iter().map(|&id| g.edge(id)).collect();
        return Some(cut_from_removed(g, &edges));
    }
    Some(best)
}

/// Whether every cyclic edge cut has at least `k` edges.
pub fn is_cyclically_k_edge_connected(g: &Graph, k: usize) -> bool {
    if disjoint_cycle_witness(g).is_none() {
        return true;
    }
    cyclic_cut_below(g, k).is_none()
}

/// Turns a removed edge set containing a cyclic cut into the separation of
/// one cycle-containing component from the rest.
fn cut_from_removed(g: &Graph, removed_edges: &[Edge]) -> EdgeCut {
    let ids: Vec<usize> = removed_edges
        .iter()
        .map(|&(u, v)| g.edge_id(u, v).expect("edge of g"))
        .collect();
    let rest = g.without_edges(&ids);
    let side = rest
        .components()
        .into_iter()
        .find(|comp| {
            let edges = comp.iter().map(|&v| rest.neighbors(v).len()).sum::<usize>() / 2;
            edges >= comp.len()
        })
        .expect("cyclic component");
    EdgeCut::around(g, &side)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_edges(vs: &[usize]) -> Vec<Edge> {
        (0..vs.len())
            .map(|i| (vs[i], vs[(i + 1) % vs.len()]))
            .collect()
    }

    #[test]
    fn k4_has_no_cyclic_cut() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(cyclic_edge_connectivity(&k4), Extent::Infinite);
        assert!(is_cyclically_k_edge_connected(&k4, 100));
    }

    #[test]
    fn disjoint_triangles_are_zero() {
        let mut e = cycle_edges(&[0, 1, 2]);
        e.extend(cycle_edges(&[3, 4, 5]));
        let g = Graph::new(6, e).unwrap();
        assert_eq!(cyclic_edge_connectivity(&g), Extent::Finite(0));
    }

    #[test]
    fn prism_is_three() {
        let mut e = cycle_edges(&[0, 1, 2]);
        e.extend(cycle_edges(&[3, 4, 5]));
        e.extend([(0, 3), (1, 4), (2, 5)]);
        let g = Graph::new(6, e).unwrap();
        assert_eq!(cyclic_edge_connectivity(&g), Extent::Finite(3));
        let cut = minimum_cyclic_cut(&g).unwrap();
        assert_eq!(cut.edges, vec![(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn shortest_cycle_is_simple() {
        let mut e = cycle_edges(&[0, 1, 2, 3, 4]);
        e.push((0, 5));
        let g = Graph::new(6, e).unwrap();
        let c = shortest_cycle_through(&g, 0).unwrap();
        assert_eq!(c.len(), 5);
        let mut sorted = c.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 5);
        assert!(shortest_cycle_through(&g, 5).is_none());
    }
}
