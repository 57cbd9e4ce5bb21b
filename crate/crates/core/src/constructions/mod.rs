//! Graph generators: flower snarks, star products, 3-joins, the `H(n)` and
//! `H*(5(2k+1))` families, 4-seed grafts and triangle inflation.
//!
//! Every generator documents its labeling so that outputs are byte-stable.

mod catalog;

pub use catalog::{named, NamedGraph, CATALOG_KEYS};

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeCut, Graph};
use crate::two_factors;

/// Graph from LCF notation: a Hamilton cycle `0..n` plus chords
/// `i ~ i + shifts[i mod len]`.
pub fn lcf(n: usize, shifts: &[isize], repeats: usize) -> Result<Graph> {
    if shifts.is_empty() || shifts.len() * repeats != n {
        return Err(Error::InvalidParameter(format!(
            "LCF code of length {} repeated {repeats} times does not cover {n} vertices",
            shifts.len()
        )));
    }
    let mut edges: Vec<Edge> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let j = (i as isize + shifts[i % shifts.len()]).rem_euclid(n as isize) as usize;
        edges.push((i.min(j), i.max(j)));
    }
    edges
        .iter_mut()
        .for_each(|e| *e = (e.0.min(e.1), e.0.max(e.1)));
    edges.sort_unstable();
    edges.dedup();
    Graph::new(n, edges)
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("valid")
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::new(a + b, edges).expect("valid")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle length {n} < 3")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Flower snark `J(t)` for odd `t >= 5`.
///
/// Interchange `i` (1-based) has hub `h_i = 4(i-1)` and `u_i, v_i, w_i` at
/// `+1, +2, +3`. Besides the spokes, `u`, `v` and `w` each run along a path
/// through the interchanges; the `w` path closes into a cycle while the `u`
/// and `v` paths close crosswise (`u_t v_1`, `v_t u_1`) into one long cycle.
pub fn flower_snark(t: usize) -> Result<Graph> {
    if t < 5 || t.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "flower snark needs odd t >= 5, got {t}"
        )));
    }
    let (h, u, v, w) = (
        |i: usize| 4 * i,
        |i: usize| 4 * i + 1,
        |i: usize| 4 * i + 2,
        |i: usize| 4 * i + 3,
    );
    let mut edges = Vec::with_capacity(6 * t);
    for i in 0..t {
        edges.extend([(h(i), u(i)), (h(i), v(i)), (h(i), w(i))]);
        if i + 1 < t {
            edges.extend([(u(i), u(i + 1)), (v(i), v(i + 1)), (w(i), w(i + 1))]);
        }
    }
    edges.extend([(u(t - 1), v(0)), (v(t - 1), u(0)), (w(0), w(t - 1))]);
    Graph::new(4 * t, edges)
}

/// Star product `G1 * G2`: delete `y` from `G1` and `x` from `G2` and join
/// their former neighbourhoods by three edges.
///
/// `G1 - y` keeps its relative order on labels `0..n1-1`, followed by
/// `G2 - x`. Neighbours are paired in ascending order; the returned cut is
/// the three joining edges.
pub fn star_product(g1: &Graph, y: usize, g2: &Graph, x: usize) -> Result<(Graph, EdgeCut)> {
    star_product_paired(g1, y, g2, x, [0, 1, 2])
}

/// As [`star_product`], with the `i`-th neighbour of `y` joined to the
/// `pairing[i]`-th neighbour of `x` (both in ascending order).
pub fn star_product_paired(
    g1: &Graph,
    y: usize,
    g2: &Graph,
    x: usize,
    pairing: [usize; 3],
) -> Result<(Graph, EdgeCut)> {
    for (g, v) in [(g1, y), (g2, x)] {
        if v >= g.order() {
            return Err(Error::MissingVertex(v));
        }
        if g.degree(v) != 3 {
            return Err(Error::Degree {
                vertex: v,
                expected: 3,
                found: g.degree(v),
            });
        }
    }
    let mut sorted = pairing;
    sorted.sort_unstable();
    if sorted != [0, 1, 2] {
        return Err(Error::InvalidParameter(format!(
            "pairing {pairing:?} is not a permutation of 0, 1, 2"
        )));
    }
    let (h1, map1) = g1.without_vertices(&[y]);
    let (h2, map2) = g2.without_vertices(&[x]);
    let off = h1.order();
    let mut edges: Vec<Edge> = h1.edges().to_vec();
    edges.extend(h2.edges().iter().map(|&(a, b)| (a + off, b + off)));
    let ys = g1.neighbors(y);
    let xs = g2.neighbors(x);
    let mut cut = Vec::new();
    for i in 0..3 {
        let a = map1[ys[i]].expect("kept");
        let b = map2[xs[pairing[i]]].expect("kept") + off;
        edges.push((a, b));
        cut.push((a, b));
    }
    let g = Graph::new(off + h2.order(), edges)?;
    let cut = EdgeCut::from_edges(&g, &cut)?;
    Ok((g, cut))
}

/// 3-join of three cubic graphs: delete `e_i = x_i y_i` from each, add hubs
/// `u`, `v` and edges `x_i u`, `y_i v`, with `x_i` the smaller endpoint.
///
/// The copies are laid out in argument order; `u` and `v` take the last two
/// labels.
pub fn three_join(parts: [(&Graph, Edge); 3]) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut hooks = Vec::new();
    let mut off = 0;
    for (g, (a, b)) in parts {
        if !g.is_cubic() {
            return Err(Error::NotRegular(3));
        }
        let (x, y) = (a.min(b), a.max(b));
        let id = g.edge_id(x, y).ok_or(Error::MissingEdge((x, y)))?;
        edges.extend(
            g.edges()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != id)
                .map(|(_, &(p, q))| (p + off, q + off)),
        );
        hooks.push((x + off, y + off));
        off += g.order();
    }
    let (u, v) = (off, off + 1);
    for (x, y) in hooks {
        edges.push((x, u));
        edges.push((y, v));
    }
    Graph::new(off + 2, edges)
}

/// Block of a cycle inflation: internal edges and the two attachment
/// vertices (towards the predecessor, towards the successor).
struct Block {
    size: usize,
    edges: Vec<Edge>,
    attach: (usize, usize),
}

impl Block {
    /// `g` minus its lexicographically last edge `(a, b)`; `a` attaches to
    /// the predecessor.
    fn minus_last_edge(g: Graph) -> Block {
        let mut edges = g.edges().to_vec();
        let (a, b) = edges.pop().expect("nonempty");
        Block {
            size: g.order(),
            edges,
            attach: (a, b),
        }
    }
}

fn inflate_cycle(blocks: &[Block]) -> Result<Graph> {
    let len = blocks.len();
    let mut offsets = Vec::with_capacity(len);
    let mut edges = Vec::new();
    let mut off = 0;
    for b in blocks {
        offsets.push(off);
        edges.extend(b.edges.iter().map(|&(p, q)| (p + off, q + off)));
        off += b.size;
    }
    for i in 0..len {
        let j = (i + 1) % len;
        edges.push((
            offsets[i] + blocks[i].attach.1,
            offsets[j] + blocks[j].attach.0,
        ));
    }
    Graph::new(off, edges)
}

/// Number of `K*_{3,3}` blocks and cycle length of `H(n)`.
pub fn h_family_shape(n: usize) -> Result<(usize, usize)> {
    if n < 14 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "H(n) needs even n >= 14, got {n}"
        )));
    }
    let j = (n % 8) / 2;
    let theta = (j + 2) % 4;
    let frame = (n - 2 * theta) / 4;
    Ok((theta, frame))
}

/// `H(n)`: a cycle whose first `θ` positions are inflated to `K*_{3,3}`
/// (parts `{0,1,2}`, `{3,4,5}`, edge `2 5` removed) and the rest to `K*_4`
/// (edge `2 3` removed). Blocks are labelled consecutively around the cycle;
/// the smaller deficient vertex of each block attaches to the previous block.
pub fn h_family(n: usize) -> Result<Graph> {
    let (theta, _) = h_family_shape(n)?;
    let positions: Vec<usize> = (0..theta).collect();
    h_family_arranged(n, &positions)
}

/// `H(n)` with the `K*_{3,3}` blocks at the given cycle positions.
pub fn h_family_arranged(n: usize, k33_positions: &[usize]) -> Result<Graph> {
    let (theta, frame) = h_family_shape(n)?;
    let mut marked = vec![false; frame];
    for &p in k33_positions {
        if p >= frame || marked[p] {
            return Err(Error::InvalidParameter(format!(
                "bad K*3,3 position {p} for a cycle of length {frame}"
            )));
        }
        marked[p] = true;
    }
    if k33_positions.len() != theta {
        return Err(Error::InvalidParameter(format!(
            "H({n}) needs {theta} K*3,3 blocks, got {}",
            k33_positions.len()
        )));
    }
    let blocks: Vec<Block> = marked
        .iter()
        .map(|&big| {
            Block::minus_last_edge(if big {
                complete_bipartite(3, 3)
            } else {
                complete(4)
            })
        })
        .collect();
    inflate_cycle(&blocks)
}

/// `H*(5(2k+1))`: every vertex of `C_{2k+1}` inflated to `K*_5` (edge `3 4`
/// removed). Block `i` occupies `5i..5i+4`; vertex `3` attaches to block
/// `i-1` and vertex `4` to block `i+1`.
pub fn h_star(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidParameter("H* needs k >= 1".into()));
    }
    let blocks: Vec<Block> = (0..2 * k + 1)
        .map(|_| Block::minus_last_edge(complete(5)))
        .collect();
    inflate_cycle(&blocks)
}

/// 4-seed graft: four copies of a 4-regular seed at offsets `i * n`, edge
/// `e = x y` (x < y) removed from each, and clips `u = 4n`, `v = 4n + 1`
/// joined to every `x_i` and `y_i` respectively.
pub fn four_seed_graft(g: &Graph, e: Edge) -> Result<Graph> {
    if !g.is_k_regular(4) {
        return Err(Error::NotRegular(4));
    }
    let (x, y) = (e.0.min(e.1), e.0.max(e.1));
    let id = g.edge_id(x, y).ok_or(Error::MissingEdge((x, y)))?;
    if !two_factors::pseudo_loyal_edges(g).contains(&(x, y)) {
        return Err(Error::NotPseudoLoyal((x, y)));
    }
    let n = g.order();
    let (u, v) = (4 * n, 4 * n + 1);
    let mut edges = Vec::new();
    for i in 0..4 {
        let off = i * n;
        edges.extend(
            g.edges()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != id)
                .map(|(_, &(p, q))| (p + off, q + off)),
        );
        edges.push((x + off, u));
        edges.push((y + off, v));
    }
    Graph::new(4 * n + 2, edges)
}

/// Replaces a degree-3 vertex `v` by a triangle. `v` keeps its label and its
/// smallest neighbour; new vertices `n` and `n + 1` take the other two.
pub fn inflate_triangle(g: &Graph, v: usize) -> Result<Graph> {
    if v >= g.order() {
        return Err(Error::MissingVertex(v));
    }
    if g.degree(v) != 3 {
        return Err(Error::Degree {
            vertex: v,
            expected: 3,
            found: g.degree(v),
        });
    }
    let n = g.order();
    let nb = g.neighbors(v);
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| a != v && b != v)
        .collect();
    edges.extend([(v, nb[0]), (n, nb[1]), (n + 1, nb[2])]);
    edges.extend([(v, n), (v, n + 1), (n, n + 1)]);
    Graph::new(n + 2, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Extent;

    #[test]
    fn flower_shape() {
        for t in [5, 7, 9] {
            let g = flower_snark(t).unwrap();
            assert_eq!((g.order(), g.size()), (4 * t, 6 * t));
            assert!(g.is_cubic());
        }
        assert!(flower_snark(4).is_err());
        assert!(flower_snark(3).is_err());
        let j5 = flower_snark(5).unwrap();
        assert!(j5.has_edge(18, 1) && j5.has_edge(17, 2) && j5.has_edge(3, 19));
    }

    #[test]
    fn h_family_shapes() {
        let expect = [
            (14, 1, 3),
            (16, 2, 3),
            (18, 3, 3),
            (20, 0, 5),
            (22, 1, 5),
            (24, 2, 5),
        ];
        for (n, theta, frame) in expect {
            assert_eq!(h_family_shape(n).unwrap(), (theta, frame));
            let g = h_family(n).unwrap();
            assert_eq!(g.order(), n);
            assert!(g.is_cubic());
        }
        assert!(h_family(12).is_err());
        assert!(h_family(15).is_err());
        assert!(h_family_arranged(16, &[0]).is_err());
    }

    #[test]
    fn h14_matches_drawing() {
        // K*3,3 then two K*4 blocks around a triangle.
        let g = h_family(14).unwrap();
        assert!(g.has_edge(5, 8) && g.has_edge(9, 12) && g.has_edge(13, 2));
        assert!(!g.has_edge(2, 5));
        assert_eq!(g.girth(), Extent::Finite(3));
    }

    #[test]
    fn h_star_is_four_regular() {
        let g = h_star(1).unwrap();
        assert_eq!(g.order(), 15);
        assert!(g.is_k_regular(4));
        assert_eq!(g.edge_connectivity(), 2);
        assert!(h_star(0).is_err());
    }

    #[test]
    fn star_product_of_k4s_is_prism() {
        let (g, cut) = star_product(&complete(4), 0, &complete(4), 0).unwrap();
        assert_eq!(
            g.edges(),
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 4),
                (2, 5),
                (3, 4),
                (3, 5),
                (4, 5)
            ]
        );
        assert_eq!(cut.edges, vec![(0, 3), (1, 4), (2, 5)]);
        assert!(star_product(&complete(5), 0, &complete(4), 0).is_err());
        assert!(star_product_paired(&complete(4), 0, &complete(4), 0, [0, 0, 1]).is_err());
    }

    #[test]
    fn inflating_k4_gives_prism() {
        let g = inflate_triangle(&complete(4), 0).unwrap();
        assert!(g.is_cubic());
        assert_eq!(g.order(), 6);
        let (prism, _) = star_product(&complete(4), 0, &complete(4), 0).unwrap();
        assert!(crate::iso::are_isomorphic(&g, &prism));
        assert!(inflate_triangle(&complete(5), 0).is_err());
    }

    #[test]
    fn three_join_layout() {
        let k4 = complete(4);
        let g = three_join([(&k4, (1, 0)), (&k4, (2, 3)), (&k4, (0, 3))]).unwrap();
        assert_eq!(g.order(), 14);
        assert!(g.is_cubic());
        assert!(g.has_edge(0, 12) && g.has_edge(1, 13));
        assert!(g.has_edge(6, 12) && g.has_edge(7, 13));
        assert!(g.has_edge(8, 12) && g.has_edge(11, 13));
        assert!(!g.has_edge(0, 1));
        assert!(three_join([(&complete(5), (0, 1)), (&k4, (0, 1)), (&k4, (0, 1))]).is_err());
    }

    #[test]
    fn lcf_rejects_bad_length() {
        assert!(lcf(10, &[5, -5], 4).is_err());
        assert_eq!(lcf(8, &[3, -3], 4).unwrap().size(), 12);
    }
}
