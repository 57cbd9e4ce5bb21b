//! 2-factor enumeration and the 2-factor hierarchy.
//!
//! A 2-factor is a spanning 2-regular subgraph. Classification walks every
//! 2-factor and tracks:
//!
//! * the cycle type (sorted cycle lengths), deciding 2-factor hamiltonian
//!   (`hu`, only the Hamilton type) and 2-factor isomorphic (`u`, one type);
//! * the parity of the number of cycles, deciding pseudo 2-factor isomorphic
//!   (`pu`);
//! * the parities `t0`, `t1` of the number of cycles of length `0` and `2`
//!   modulo 4, deciding strongly pseudo 2-factor isomorphic (`spu`);
//! * whether every cycle is odd (`odd_two_factored`).

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeCut, Graph};
use crate::matchings::{self, Order};

/// Sorted multiset of cycle lengths of a 2-factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mut lengths: Vec<usize>) -> Self {
        lengths.sort_unstable();
        CycleType(lengths)
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    pub fn cycle_count(&self) -> usize {
        self.0.len()
    }

    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn parity_profile(&self) -> ParityProfile {
        ParityProfile::from_lengths(&self.0)
    }
}

impl<const N: usize> From<[usize; N]> for CycleType {
    fn from(lengths: [usize; N]) -> Self {
        CycleType::new(lengths.to_vec())
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

/// Cycle-count parities of a single 2-factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParityProfile {
    /// Number of cycles modulo 2.
    pub cycle_count_parity: u8,
    /// Cycles of length ≡ 0 (mod 4).
    pub t0_star: usize,
    /// Cycles of length ≡ 2 (mod 4).
    pub t1_star: usize,
    pub t0: u8,
    pub t1: u8,
    pub odd_cycles: usize,
}

impl ParityProfile {
    pub fn from_lengths(lengths: &[usize]) -> Self {
        let t0_star = lengths.iter().filter(|&&l| l % 4 == 0).count();
        let t1_star = lengths.iter().filter(|&&l| l % 4 == 2).count();
        let odd_cycles = lengths.iter().filter(|&&l| l % 2 == 1).count();
        ParityProfile {
            cycle_count_parity: (lengths.len() % 2) as u8,
            t0_star,
            t1_star,
            t0: (t0_star % 2) as u8,
            t1: (t1_star % 2) as u8,
            odd_cycles,
        }
    }
}

/// A 2-factor of a host graph.
///
/// Cycles are canonical: each starts at its smallest vertex and continues
/// towards the smaller of that vertex's two cycle neighbours; the list is
/// sorted by `(length, smallest vertex)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoFactor {
    edges: Vec<Edge>,
    cycles: Vec<Vec<usize>>,
}

impl TwoFactor {
    /// Validates that `edges` span a 2-regular subgraph of `g`.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut ids = Vec::new();
        for (u, v) in edges {
            ids.push(g.edge_id(u, v).ok_or(Error::MissingEdge((u, v)))?);
        }
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(g.edge(w[0])));
        }
        let mut deg = vec![0usize; g.order()];
        for &id in &ids {
            let (u, v) = g.edge(id);
            deg[u] += 1;
            deg[v] += 1;
        }
        if let Some(v) = (0..g.order()).find(|&v| deg[v] != 2) {
            return Err(Error::Degree {
                vertex: v,
                expected: 2,
                found: deg[v],
            });
        }
        Ok(Self::from_ids(g, &ids))
    }

    /// `ids` must be sorted and describe a 2-regular spanning subgraph.
    pub(crate) fn from_ids(g: &Graph, ids: &[usize]) -> Self {
        let pair = partner_table(g, ids);
        let n = g.order();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let [a, b] = pair[s];
            let mut cycle = vec![s];
            seen[s] = true;
            let (mut prev, mut cur) = (s, a.min(b));
            while cur != s {
                seen[cur] = true;
                cycle.push(cur);
                let [x, y] = pair[cur];
                let next = if x == prev { y } else { x };
                prev = cur;
                cur = next;
            }
            cycles.push(cycle);
        }
        cycles.sort_by_key(|c| (c.len(), c[0]));
        TwoFactor {
            edges: ids.iter().map(|&id| g.edge(id)).collect(),
            cycles,
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles.iter().map(Vec::len).collect())
    }

    pub fn parity_profile(&self) -> ParityProfile {
        self.cycle_type().parity_profile()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }
}

fn partner_table(g: &Graph, ids: &[usize]) -> Vec<[usize; 2]> {
    let mut pair = vec![[usize::MAX; 2]; g.order()];
    for &id in ids {
        let (u, v) = g.edge(id);
        let su = if pair[u][0] == usize::MAX { 0 } else { 1 };
        pair[u][su] = v;
        let sv = if pair[v][0] == usize::MAX { 0 } else { 1 };
        pair[v][sv] = u;
    }
    pair
}

/// Cycle length through each vertex, plus the sorted length list.
fn cycle_lengths(g: &Graph, ids: &[usize], through: &mut [usize]) -> Vec<usize> {
    let pair = partner_table(g, ids);
    through.iter_mut().for_each(|x| *x = 0);
    let mut lengths = Vec::new();
    let mut members = Vec::new();
    for s in 0..g.order() {
        if through[s] != 0 {
            continue;
        }
        members.clear();
        let (mut prev, mut cur) = (usize::MAX, s);
        loop {
            members.push(cur);
            through[cur] = usize::MAX;
            let [x, y] = pair[cur];
            let next = if x != prev { x } else { y };
            prev = cur;
            cur = next;
            if cur == s {
                break;
            }
        }
        for &v in &members {
            through[v] = members.len();
        }
        lengths.push(members.len());
    }
    lengths.sort_unstable();
    lengths
}

struct DirectSearch<'g> {
    g: &'g Graph,
    deg: Vec<u8>,
    open: Vec<usize>,
    chosen: Vec<usize>,
}

impl DirectSearch<'_> {
    fn run(
        &mut self,
        e: usize,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if e == self.g.size() {
            return visit(&self.chosen);
        }
        let (u, v) = self.g.edge(e);
        self.open[u] -= 1;
        self.open[v] -= 1;
        let mut flow = ControlFlow::Continue(());
        if self.deg[u] < 2 && self.deg[v] < 2 {
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.chosen.push(e);
            flow = self.run(e + 1, visit);
            self.chosen.pop();
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
        if flow.is_continue()
            && self.deg[u] as usize + self.open[u] >= 2
            && self.deg[v] as usize + self.open[v] >= 2
        {
            flow = self.run(e + 1, visit);
        }
        self.open[u] += 1;
        self.open[v] += 1;
        flow
    }
}

/// Edge-by-edge backtracking (include before exclude), pruning any vertex
/// that already has two chosen edges or can no longer reach two.
fn visit_direct(g: &Graph, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
    if g.min_degree() < 2 && g.order() > 0 {
        return ControlFlow::Continue(());
    }
    let mut search = DirectSearch {
        g,
        deg: vec![0; g.order()],
        open: (0..g.order()).map(|v| g.degree(v)).collect(),
        chosen: Vec::with_capacity(g.order()),
    };
    search.run(0, visit)
}

/// In a cubic graph the 2-factors are exactly the complements of the
/// perfect matchings. Matchings in reverse lexicographic order give
/// complements in lexicographic order.
fn visit_via_matchings(
    g: &Graph,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let mut in_matching = vec![false; g.size()];
    let mut complement = Vec::with_capacity(g.size());
    matchings::visit_matching_ids(g, Order::Descending, &mut |ids| {
        for &id in ids {
            in_matching[id] = true;
        }
        complement.clear();
        complement.extend((0..g.size()).filter(|&id| !in_matching[id]));
        for &id in ids {
            in_matching[id] = false;
        }
        visit(&complement)
    })
}

pub(crate) fn visit_two_factor_ids(
    g: &Graph,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if g.order() > 0 && g.is_cubic() {
        visit_via_matchings(g, visit)
    } else {
        visit_direct(g, visit)
    }
}

/// Streams every 2-factor exactly once, in lexicographic order of the
/// canonical edge lists.
pub fn for_each_two_factor<F>(g: &Graph, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&TwoFactor) -> ControlFlow<()>,
{
    visit_two_factor_ids(g, &mut |ids| f(&TwoFactor::from_ids(g, ids)))
}

pub fn two_factors(g: &Graph) -> Vec<TwoFactor> {
    collect(g, visit_two_factor_ids)
}

/// 2-factors by direct backtracking, whatever the degrees.
pub fn two_factors_direct(g: &Graph) -> Vec<TwoFactor> {
    collect(g, visit_direct)
}

/// 2-factors as complements of perfect matchings; cubic graphs only.
pub fn two_factors_via_matchings(g: &Graph) -> Result<Vec<TwoFactor>> {
    if !g.is_cubic() {
        return Err(Error::NotRegular(3));
    }
    Ok(collect(g, visit_via_matchings))
}

type Visitor<'a> = &'a mut dyn FnMut(&[usize]) -> ControlFlow<()>;

fn collect(g: &Graph, engine: fn(&Graph, Visitor<'_>) -> ControlFlow<()>) -> Vec<TwoFactor> {
    let mut out = Vec::new();
    let _ = engine(g, &mut |ids| {
        out.push(TwoFactor::from_ids(g, ids));
        ControlFlow::Continue(())
    });
    out
}

pub fn count_two_factors(g: &Graph) -> u64 {
    let mut count = 0;
    let _ = visit_two_factor_ids(g, &mut |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// Parities shared by every 2-factor. `t0`/`t1` are present only when the
/// graph is strongly pseudo 2-factor isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CommonProfile {
    pub parity: u8,
    pub t0: Option<u8>,
    pub t1: Option<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Enumeration stops, and the report is marked inconclusive, once more
    /// than this many 2-factors have been seen.
    pub max_factors: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            max_factors: 10_000_000,
        }
    }
}

/// Position of a graph (or digraph) in the 2-factor hierarchy.
///
/// When `inconclusive` is set the enumeration was cut short: `false` flags
/// are still refutations, but `true` flags only mean "not refuted yet".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub has_two_factor: bool,
    pub two_factor_count: u64,
    pub types: BTreeSet<CycleType>,
    pub hu: bool,
    pub u: bool,
    pub spu: bool,
    pub pu: bool,
    pub odd_two_factored: bool,
    pub profile: Option<CommonProfile>,
    pub inconclusive: bool,
}

/// Folds cycle-length lists into a [`ClassificationReport`].
#[derive(Debug, Clone)]
pub(crate) struct HierarchyAccumulator {
    order: usize,
    count: u64,
    types: BTreeSet<CycleType>,
    parities: [bool; 2],
    t0: [bool; 2],
    t1: [bool; 2],
    all_odd: bool,
}

impl HierarchyAccumulator {
    pub(crate) fn new(order: usize) -> Self {
        HierarchyAccumulator {
            order,
            count: 0,
            types: BTreeSet::new(),
            parities: [false; 2],
            t0: [false; 2],
            t1: [false; 2],
            all_odd: true,
        }
    }

    pub(crate) fn count(&self) -> u64 {
        self.count
    }

    pub(crate) fn add(&mut self, sorted_lengths: &[usize]) {
        self.count += 1;
        let p = ParityProfile::from_lengths(sorted_lengths);
        self.parities[p.cycle_count_parity as usize] = true;
        self.t0[p.t0 as usize] = true;
        self.t1[p.t1 as usize] = true;
        self.all_odd &= p.odd_cycles == sorted_lengths.len();
        if !self.types.contains(sorted_lengths) {
            self.types.insert(CycleType(sorted_lengths.to_vec()));
        }
    }

    pub(crate) fn finish(self, inconclusive: bool) -> ClassificationReport {
        let has = self.count > 0;
        let constant = |seen: [bool; 2]| seen[0] != seen[1];
        let pu = has && constant(self.parities);
        let spu = has && constant(self.t0) && constant(self.t1);
        let u = has && self.types.len() == 1;
        let hu = u
            && self
                .types
                .iter()
                .all(|t| t.lengths() == [self.order].as_slice());
        let odd = has && self.all_odd;
        let bit = |seen: [bool; 2]| u8::from(seen[1]);
        let profile = pu.then(|| CommonProfile {
            parity: bit(self.parities),
            t0: spu.then(|| bit(self.t0)),
            t1: spu.then(|| bit(self.t1)),
        });
        ClassificationReport {
            has_two_factor: has,
            two_factor_count: self.count,
            types: self.types,
            hu,
            u,
            spu,
            pu,
            odd_two_factored: odd,
            profile,
            inconclusive,
        }
    }
}

impl std::borrow::Borrow<[usize]> for CycleType {
    fn borrow(&self) -> &[usize] {
        &self.0
    }
}

pub fn classify(g: &Graph) -> ClassificationReport {
    classify_with(g, &ClassifyOptions::default())
}

/// Exhausts the 2-factor stream (up to the configured cap).
pub fn classify_with(g: &Graph, options: &ClassifyOptions) -> ClassificationReport {
    let mut acc = HierarchyAccumulator::new(g.order());
    let mut through = vec![0; g.order()];
    let mut capped = false;
    let _ = visit_two_factor_ids(g, &mut |ids| {
        if acc.count() >= options.max_factors {
            capped = true;
            return ControlFlow::Break(());
        }
        let lengths = cycle_lengths(g, ids, &mut through);
        acc.add(&lengths);
        ControlFlow::Continue(())
    });
    acc.finish(capped)
}

/// Decides pseudo 2-factor isomorphism, stopping at the first pair of
/// 2-factors with different cycle-count parity. `None` when there is no
/// 2-factor.
pub fn is_pseudo_two_factor_isomorphic(g: &Graph) -> Option<bool> {
    let mut first: Option<usize> = None;
    let mut verdict = true;
    let mut through = vec![0; g.order()];
    let _ = visit_two_factor_ids(g, &mut |ids| {
        let parity = cycle_lengths(g, ids, &mut through).len() % 2;
        if *first.get_or_insert(parity) != parity {
            verdict = false;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    first.map(|_| verdict)
}

/// Occurrence statistics of one edge over all 2-factors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeLoyalty {
    pub containing: u64,
    pub avoiding: u64,
    /// Lengths of the cycle through the edge, over the containing 2-factors.
    pub lengths: BTreeSet<usize>,
}

impl EdgeLoyalty {
    fn both_ways(&self) -> bool {
        self.containing > 0 && self.avoiding > 0
    }

    pub fn is_loyal(&self) -> bool {
        self.both_ways() && self.lengths.len() == 1
    }

    pub fn is_pseudo_loyal(&self) -> bool {
        self.both_ways()
            && self
                .lengths
                .iter()
                .map(|l| l % 4)
                .collect::<BTreeSet<_>>()
                .len()
                == 1
    }
}

/// Per-edge statistics, indexed like [`Graph::edges`].
pub fn edge_loyalty(g: &Graph) -> Vec<EdgeLoyalty> {
    let mut stats = vec![EdgeLoyalty::default(); g.size()];
    let mut through = vec![0; g.order()];
    let mut inside = vec![false; g.size()];
    let _ = visit_two_factor_ids(g, &mut |ids| {
        cycle_lengths(g, ids, &mut through);
        for &id in ids {
            inside[id] = true;
            let (u, _) = g.edge(id);
            stats[id].containing += 1;
            stats[id].lengths.insert(through[u]);
        }
        for (id, s) in stats.iter_mut().enumerate() {
            if !inside[id] {
                s.avoiding += 1;
            }
        }
        for &id in ids {
            inside[id] = false;
        }
        ControlFlow::Continue(())
    });
    stats
}

/// Edges lying on some 2-factor and off another whose cycle length modulo 4
/// is the same in every 2-factor containing them.
pub fn pseudo_loyal_edges(g: &Graph) -> Vec<Edge> {
    edge_loyalty(g)
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_pseudo_loyal())
        .map(|(id, _)| g.edge(id))
        .collect()
}

/// As [`pseudo_loyal_edges`] with the exact cycle length held constant.
pub fn loyal_edges(g: &Graph) -> Vec<Edge> {
    edge_loyalty(g)
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_loyal())
        .map(|(id, _)| g.edge(id))
        .collect()
}

/// Whether every perfect matching of a cubic graph meets the 3-edge cut in
/// exactly one edge.
pub fn is_tight_cut(g: &Graph, cut: &EdgeCut) -> Result<bool> {
    if !g.is_cubic() {
        return Err(Error::NotRegular(3));
    }
    if cut.edges.len() != 3 {
        return Err(Error::NotAnEdgeCut(format!(
            "expected 3 edges, got {}",
            cut.edges.len()
        )));
    }
    let checked = EdgeCut::from_edges(g, &cut.edges)?;
    let ids: Vec<usize> = checked
        .edges
        .iter()
        .map(|&(u, v)| g.edge_id(u, v).expect("validated"))
        .collect();
    let mut tight = true;
    let _ = matchings::visit_matching_ids(g, Order::Ascending, &mut |m| {
        let hits = m.iter().filter(|id| ids.contains(id)).count();
        if hits != 1 {
            tight = false;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    Ok(tight)
}
