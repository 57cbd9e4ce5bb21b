//! Isomorphism testing for small graphs by colour refinement and
//! individualisation.
//!
//! Both graphs are refined together as one disjoint union so colour names
//! are shared. A pair of vertices in the same class is individualised and
//! the search backtracks over the choice in the second graph.

use std::collections::HashMap;

use crate::graph::Graph;

/// Returns a bijection `phi` with `uv ∈ E(g) ⇔ phi(u)phi(v) ∈ E(h)`, if any.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let mut dg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let n = g.order();
    let union = Union { g, h, n };
    let colours: Vec<usize> = (0..2 * n).map(|x| union.degree(x)).collect();
    union.search(colours)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

struct Union<'a> {
    g: &'a Graph,
    h: &'a Graph,
    n: usize,
}

impl Union<'_> {
    fn degree(&self, x: usize) -> usize {
        self.neighbors(x).len()
    }

    fn neighbors(&self, x: usize) -> &[usize] {
        if x < self.n {
            self.g.neighbors(x)
        } else {
            self.h.neighbors(x - self.n)
        }
    }

    fn offset(&self, x: usize) -> usize {
        if x < self.n {
            0
        } else {
            self.n
        }
    }

    /// Refines to a stable colouring; `None` if the two halves disagree on
    /// some class size.
    fn refine(&self, mut colours: Vec<usize>) -> Option<Vec<usize>> {
        let mut classes = count(&colours);
        loop {
            let mut names: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let mut sigs = Vec::with_capacity(2 * self.n);
            for x in 0..2 * self.n {
                let off = self.offset(x);
                let mut nb: Vec<usize> = self
                    .neighbors(x)
                    .iter()
                    .map(|&y| colours[y + off])
                    .collect();
                nb.sort_unstable();
                sigs.push((colours[x], nb));
            }
            let mut order: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
            order.sort();
            order.dedup();
            for (i, s) in order.into_iter().enumerate() {
                names.insert(s.clone(), i);
            }
            let next: Vec<usize> = sigs.iter().map(|s| names[s]).collect();
            let next_classes = count(&next);
            if !balanced(&next, self.n) {
                return None;
            }
            colours = next;
            if next_classes == classes {
                return Some(colours);
            }
            classes = next_classes;
        }
    }

    fn search(&self, colours: Vec<usize>) -> Option<Vec<usize>> {
        let colours = self.refine(colours)?;
        // Smallest non-singleton class on the g side.
        let mut size = HashMap::new();
        for &c in &colours[..self.n] {
            *size.entry(c).or_insert(0usize) += 1;
        }
        let target = size
            .iter()
            .filter(|&(_, &s)| s > 1)
            .min_by_key(|&(&c, &s)| (s, c))
            .map(|(&c, _)| c);
        let Some(c) = target else {
            let mut phi = vec![0; self.n];
            let mut at = HashMap::new();
            for x in self.n..2 * self.n {
                at.insert(colours[x], x - self.n);
            }
            for v in 0..self.n {
                phi[v] = at[&colours[v]];
            }
            return self.verify(&phi).then_some(phi);
        };
        let a = (0..self.n)
            .find(|&v| colours[v] == c)
            .expect("class is nonempty");
        let fresh = colours.iter().max().copied().unwrap_or(0) + 1;
        for b in (self.n..2 * self.n).filter(|&x| colours[x] == c) {
            let mut next = colours.clone();
            next[a] = fresh;
            next[b] = fresh;
            if let Some(phi) = self.search(next) {
                return Some(phi);
            }
        }
        None
    }

    fn verify(&self, phi: &[usize]) -> bool {
        self.g
            .edges()
            .iter()
            .all(|&(u, v)| self.h.has_edge(phi[u], phi[v]))
    }
}

fn count(colours: &[usize]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn balanced(colours: &[usize], n: usize) -> bool {
    let mut tally: HashMap<usize, isize> = HashMap::new();
    for (x, &c) in colours.iter().enumerate() {
        *tally.entry(c).or_insert(0) += if x < n { 1 } else { -1 };
    }
    tally.values().all(|&t| t == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, lcf, named};

    #[test]
    fn relabelled_copies_match() {
        let p = named("petersen").unwrap().graph;
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        let q = Graph::new(10, p.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap();
        let phi = find_isomorphism(&p, &q).unwrap();
        for &(u, v) in p.edges() {
            assert!(q.has_edge(phi[u], phi[v]));
        }
    }

    #[test]
    fn petersen_differs_from_mobius_ladder() {
        // Same order, cubic, different graphs.
        let p = named("petersen").unwrap().graph;
        let prism5 = lcf(10, &[5], 10).unwrap();
        assert!(!are_isomorphic(&p, &prism5));
        assert!(!are_isomorphic(&complete(4), &complete(5)));
    }

    #[test]
    fn regular_graphs_need_individualisation() {
        // C6 versus two triangles: refinement alone cannot tell them apart.
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let tt = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&c6, &tt));
        assert!(are_isomorphic(&c6, &c6));
    }
}
