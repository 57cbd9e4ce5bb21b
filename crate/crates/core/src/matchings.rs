//! Perfect matchings (1-factors), permutation signs of bipartite matchings,
//! permanents and determinants of 0/1 bipartite adjacency matrices.

use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A perfect matching of a host graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneFactor {
    n: usize,
    edges: Vec<Edge>,
}

impl OneFactor {
    /// Validates that `edges` is a perfect matching of `g`.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list: Vec<Edge> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        list.sort_unstable();
        let mut covered = vec![false; g.order()];
        for &(u, v) in &list {
            if !g.has_edge(u, v) {
                return Err(Error::MissingEdge((u, v)));
            }
            if covered[u] || covered[v] {
                return Err(Error::NotAPerfectMatching);
            }
            covered[u] = true;
            covered[v] = true;
        }
        if covered.iter().any(|c| !c) {
            return Err(Error::NotAPerfectMatching);
        }
        Ok(OneFactor {
            n: g.order(),
            edges: list,
        })
    }

    pub(crate) fn from_ids(g: &Graph, ids: &[usize]) -> Self {
        OneFactor {
            n: g.order(),
            edges: ids.iter().map(|&id| g.edge(id)).collect(),
        }
    }

    pub fn host_order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `mate[v]` is the vertex matched to `v`.
    pub fn mates(&self) -> Vec<usize> {
        let mut mate = vec![usize::MAX; self.n];
        for &(u, v) in &self.edges {
            mate[u] = v;
            mate[v] = u;
        }
        mate
    }
}

/// Which way candidate partners are tried at each branching vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Order {
    /// Lexicographic order of the sorted edge lists.
    Ascending,
    /// Reverse lexicographic order.
    Descending,
}

const FREE: usize = usize::MAX;

struct MatchingSearch<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    chosen: Vec<usize>,
    order: Order,
}

impl MatchingSearch<'_> {
    fn has_free_neighbor(&self, x: usize) -> bool {
        self.g.neighbors(x).iter().any(|&y| self.mate[y] == FREE)
    }

    fn viable_after(&self, v: usize, w: usize) -> bool {
        [v, w].iter().all(|&a| {
            self.g
                .neighbors(a)
                .iter()
                .all(|&x| self.mate[x] != FREE || self.has_free_neighbor(x))
        })
    }

    fn run(
        &mut self,
        from: usize,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let n = self.g.order();
        let Some(v) = (from..n).find(|&v| self.mate[v] == FREE) else {
            return visit(&self.chosen);
        };
        let deg = self.g.degree(v);
        for k in 0..deg {
            let i = match self.order {
                Order::Ascending => k,
                Order::Descending => deg - 1 - k,
            };
            let w = self.g.neighbors(v)[i];
            if self.mate[w] != FREE {
                continue;
            }
            self.mate[v] = w;
            self.mate[w] = v;
            self.chosen.push(self.g.incident_edges(v)[i]);
            let flow = if self.viable_after(v, w) {
                self.run(v + 1, visit)
            } else {
                ControlFlow::Continue(())
            };
            self.chosen.pop();
            self.mate[v] = FREE;
            self.mate[w] = FREE;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Branch on the lowest uncovered vertex, trying its partners in the given
/// order. Matched edges are pushed in increasing order of their smaller
/// endpoint, so the id list handed to `visit` is sorted.
pub(crate) fn visit_matching_ids(
    g: &Graph,
    order: Order,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if g.order() % 2 == 1 {
        return ControlFlow::Continue(());
    }
    let mut search = MatchingSearch {
        g,
        mate: vec![FREE; g.order()],
        chosen: Vec::with_capacity(g.order() / 2),
        order,
    };
    search.run(0, visit)
}

/// Streams every perfect matching exactly once, in lexicographic order of
/// the canonical edge lists. Graphs of odd order produce nothing.
pub fn for_each_perfect_matching<F>(g: &Graph, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&OneFactor) -> ControlFlow<()>,
{
    visit_matching_ids(g, Order::Ascending, &mut |ids| {
        f(&OneFactor::from_ids(g, ids))
    })
}

pub fn perfect_matchings(g: &Graph) -> Vec<OneFactor> {
    let mut out = Vec::new();
    let _ = for_each_perfect_matching(g, |m| {
        out.push(m.clone());
        ControlFlow::Continue(())
    });
    out
}

pub fn count_perfect_matchings(g: &Graph) -> u64 {
    let mut count = 0;
    let _ = visit_matching_ids(g, Order::Ascending, &mut |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// Number of cycles of length divisible by four in `L1 ∪ L2`. Edges shared
/// by both matchings form 2-cycles, which never count.
pub fn union_cycle_count_mod4(a: &OneFactor, b: &OneFactor) -> Result<usize> {
    if a.n != b.n {
        return Err(Error::HostMismatch);
    }
    let (ma, mb) = (a.mates(), b.mates());
    let mut seen = vec![false; a.n];
    let mut count = 0;
    for s in 0..a.n {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut v = s;
        loop {
            seen[v] = true;
            let w = ma[v];
            seen[w] = true;
            len += 2;
            v = mb[w];
            if v == s {
                break;
            }
        }
        if len % 4 == 0 {
            count += 1;
        }
    }
    Ok(count)
}

/// 0/1 biadjacency matrix of a bipartite graph. Row `i` is the `i`-th
/// smallest vertex of one side, column `j` the `j`-th smallest of the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteMatrix {
    rows: Vec<usize>,
    cols: Vec<usize>,
    entries: Vec<Vec<u8>>,
}

impl BipartiteMatrix {
    /// Uses the canonical bipartition of [`Graph::bipartition`].
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let (a, b) = g.bipartition().ok_or(Error::NotBipartite)?;
        let entries = a
            .iter()
            .map(|&x| b.iter().map(|&y| u8::from(g.has_edge(x, y))).collect())
            .collect();
        Ok(BipartiteMatrix {
            rows: a,
            cols: b,
            entries,
        })
    }

    /// A matrix with rows labelled `0..r` and columns `r..r+c`; every entry
    /// must be 0 or 1.
    pub fn from_entries(entries: Vec<Vec<u8>>) -> Result<Self> {
        let r = entries.len();
        let c = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidParameter("ragged matrix".into()));
        }
        if entries.iter().flatten().any(|&x| x > 1) {
            return Err(Error::InvalidParameter("entries must be 0 or 1".into()));
        }
        Ok(BipartiteMatrix {
            rows: (0..r).collect(),
            cols: (r..r + c).collect(),
            entries,
        })
    }

    /// The bipartite graph on `rows ∪ cols` (only valid for matrices built
    /// with [`BipartiteMatrix::from_entries`] or from a graph whose labels
    /// are exactly the row and column labels).
    pub fn to_graph(&self) -> Graph {
        let n = self.rows.len() + self.cols.len();
        let edges = self.entries.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &x)| x == 1)
                .map(move |(j, _)| (self.rows[i], self.cols[j]))
        });
        Graph::new(n, edges).expect("valid bipartite edges")
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.entries[i][j]
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows.len())
        } else {
            Err(Error::NotSquare {
                rows: self.rows.len(),
                cols: self.cols.len(),
            })
        }
    }

    /// The permutation `i -> j` realised by a perfect matching.
    pub fn permutation_of(&self, l: &OneFactor) -> Result<Vec<usize>> {
        let n = self.require_square()?;
        let row_of = |v: usize| self.rows.iter().position(|&x| x == v);
        let col_of = |v: usize| self.cols.iter().position(|&x| x == v);
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if l.edges().len() != n {
            return Err(Error::NotAPerfectMatching);
        }
        for &(u, v) in l.edges() {
            let (i, j) = match (row_of(u), col_of(v), row_of(v), col_of(u)) {
                (Some(i), Some(j), _, _) => (i, j),
                (_, _, Some(i), Some(j)) => (i, j),
                _ => return Err(Error::NotAPerfectMatching),
            };
            if self.entries[i][j] == 0 || perm[i] != usize::MAX || used[j] {
                return Err(Error::NotAPerfectMatching);
            }
            perm[i] = j;
            used[j] = true;
        }
        Ok(perm)
    }
}

/// Sign of a permutation given as `perm[i] = image of i`.
pub fn permutation_sign(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for s in 0..perm.len() {
        let mut len = 0;
        let mut v = s;
        while !seen[v] {
            seen[v] = true;
            v = perm[v];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    if transpositions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the permutation of `{1..n}` corresponding to a perfect matching.
pub fn matching_sign(m: &BipartiteMatrix, l: &OneFactor) -> Result<i8> {
    Ok(permutation_sign(&m.permutation_of(l)?))
}

/// Permanent by Ryser's inclusion–exclusion over column subsets in Gray-code
/// order. Exact: machine integers while they suffice, big integers after.
pub fn permanent(m: &BipartiteMatrix) -> Result<u128> {
    let n = m.require_square()?;
    if n == 0 {
        return Ok(1);
    }
    if n > 30 {
        return Err(Error::TooLarge {
            what: "permanent dimension",
            limit: 30,
        });
    }
    if let Some(p) = ryser_i128(&m.entries, n) {
        return Ok(p as u128);
    }
    let p = ryser_big(&m.entries, n);
    Ok(p.to_u128().expect("permanent bounded by n!"))
}

fn ryser_i128(a: &[Vec<u8>], n: usize) -> Option<i128> {
    let mut row_sums = vec![0i128; n];
    let mut total: i128 = 0;
    let mut gray: u64 = 0;
    for k in 1u64..(1u64 << n) {
        let next = k ^ (k >> 1);
        let j = (gray ^ next).trailing_zeros() as usize;
        let add = next & (1 << j) != 0;
        gray = next;
        for (i, s) in row_sums.iter_mut().enumerate() {
            let x = i128::from(a[i][j]);
            *s += if add { x } else { -x };
        }
        let mut prod: i128 = 1;
        for &s in &row_sums {
            prod = prod.checked_mul(s)?;
            if prod == 0 {
                break;
            }
        }
        let size = gray.count_ones() as usize;
        total = if (n - size).is_multiple_of(2) {
            total.checked_add(prod)?
        } else {
            total.checked_sub(prod)?
        };
    }
    Some(total)
}

fn ryser_big(a: &[Vec<u8>], n: usize) -> BigInt {
    let mut row_sums = vec![0i64; n];
    let mut total = BigInt::zero();
    let mut gray: u64 = 0;
    for k in 1u64..(1u64 << n) {
        let next = k ^ (k >> 1);
        let j = (gray ^ next).trailing_zeros() as usize;
        let add = next & (1 << j) != 0;
        gray = next;
        for (i, s) in row_sums.iter_mut().enumerate() {
            let x = i64::from(a[i][j]);
            *s += if add { x } else { -x };
        }
        if row_sums.contains(&0) {
            continue;
        }
        let prod = row_sums
            .iter()
            .fold(BigInt::from(1), |acc, &s| acc * BigInt::from(s));
        if (n - gray.count_ones() as usize).is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

/// Determinant by fraction-free (Bareiss) elimination over big integers.
pub fn determinant(m: &BipartiteMatrix) -> Result<BigInt> {
    let n = m.require_square()?;
    let mut a: Vec<Vec<BigInt>> = m
        .entries
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    Ok(&a[n - 1][n - 1] * sign)
}

fn balanced_matrix(g: &Graph) -> Result<BipartiteMatrix> {
    let m = BipartiteMatrix::from_graph(g)?;
    if !m.is_square() {
        return Err(Error::Unbalanced {
            left: m.rows.len(),
            right: m.cols.len(),
        });
    }
    Ok(m)
}

/// det-extremality through `|det A| = per A` with a 1-factor present.
pub fn det_extremal_by_determinant(g: &Graph) -> Result<bool> {
    let m = balanced_matrix(g)?;
    let per = permanent(&m)?;
    let det = determinant(&m)?.abs();
    Ok(per > 0 && det == BigInt::from(per))
}

/// det-extremality through sign uniformity of all perfect matchings.
pub fn det_extremal_by_signs(g: &Graph) -> Result<bool> {
    let m = balanced_matrix(g)?;
    let mut first: Option<i8> = None;
    let mut uniform = true;
    let mut failure = None;
    let _ = for_each_perfect_matching(g, |l| match matching_sign(&m, l) {
        Ok(s) => {
            if *first.get_or_insert(s) != s {
                uniform = false;
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        }
        Err(e) => {
            failure = Some(e);
            ControlFlow::Break(())
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(first.is_some() && uniform)
}

/// Whether a balanced bipartite graph has a 1-factor and `|det A| = per A`.
pub fn is_det_extremal(g: &Graph) -> Result<bool> {
    let by_det = det_extremal_by_determinant(g)?;
    debug_assert_eq!(Ok(by_det), det_extremal_by_signs(g));
    Ok(by_det)
}
