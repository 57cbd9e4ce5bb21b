#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use twofactor::{Digraph, Graph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Balanced bipartite graph with sides `0..n` and `n..2n`.
pub fn random_bipartite(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if rng.gen_bool(p) {
                edges.push((u, n + v));
            }
        }
    }
    Graph::new(2 * n, edges).unwrap()
}

pub fn random_digraph(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, arcs).unwrap()
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// A k-regular graph: a circulant start scrambled by double-edge switches.
/// Odd `k` needs even `n`.
pub fn random_regular(rng: &mut impl Rng, n: usize, k: usize) -> Graph {
    assert!(k < n && (k.is_multiple_of(2) || n.is_multiple_of(2)));
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..n {
        for s in 1..=k / 2 {
            edges.insert(key(i, (i + s) % n));
        }
        if k % 2 == 1 {
            edges.insert(key(i, (i + n / 2) % n));
        }
    }
    let mut list: Vec<_> = edges.iter().copied().collect();
    for _ in 0..20 * list.len() {
        let i = rng.gen_range(0..list.len());
        let j = rng.gen_range(0..list.len());
        let (a, b) = list[i];
        let (mut c, mut d) = list[j];
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut c, &mut d);
        }
        if a == c || a == d || b == c || b == d {
            continue;
        }
        let (e, f) = (key(a, d), key(c, b));
        if edges.contains(&e) || edges.contains(&f) {
            continue;
        }
        edges.remove(&list[i]);
        edges.remove(&list[j]);
        edges.insert(e);
        edges.insert(f);
        list[i] = e;
        list[j] = f;
    }
    Graph::new(n, list).unwrap()
}

/// A k-diregular digraph: arcs `i -> i+1..i+k` scrambled by arc switches.
pub fn random_diregular(rng: &mut impl Rng, n: usize, k: usize) -> Digraph {
    assert!(k < n);
    let mut arcs: BTreeSet<(usize, usize)> = (0..n)
        .flat_map(|i| (1..=k).map(move |s| (i, (i + s) % n)))
        .collect();
    let mut list: Vec<_> = arcs.iter().copied().collect();
    for _ in 0..20 * list.len() {
        let i = rng.gen_range(0..list.len());
        let j = rng.gen_range(0..list.len());
        let ((a, b), (c, d)) = (list[i], list[j]);
        if a == d || c == b || a == c {
            continue;
        }
        if arcs.contains(&(a, d)) || arcs.contains(&(c, b)) {
            continue;
        }
        arcs.remove(&(a, b));
        arcs.remove(&(c, d));
        arcs.insert((a, d));
        arcs.insert((c, b));
        list[i] = (a, d);
        list[j] = (c, b);
    }
    Digraph::new(n, list).unwrap()
}

pub fn shuffled_labels(rng: &mut impl Rng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    Graph::new(
        g.order(),
        g.edges().iter().map(|&(u, v)| (perm[u], perm[v])),
    )
    .unwrap()
}
