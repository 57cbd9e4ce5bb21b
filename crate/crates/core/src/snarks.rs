//! Cubic edge colouring, snark checks, odd 2-factoredness and the scan for
//! odd 2-factored snarks outside the known families.

use std::ops::ControlFlow;

use crate::connectivity::is_cyclically_k_edge_connected;
use crate::constructions::{flower_snark, named};
use crate::error::{Error, Result};
use crate::graph::{Extent, Graph};
use crate::iso::are_isomorphic;
use crate::two_factors::{visit_two_factor_ids, CycleType, TwoFactor};

/// Chromatic index of a cubic graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeColoring {
    /// A proper colouring with colours `0..3`, indexed like `Graph::edges`.
    Three(Vec<u8>),
    Four,
}

impl EdgeColoring {
    pub fn class(&self) -> u8 {
        match self {
            EdgeColoring::Three(_) => 3,
            EdgeColoring::Four => 4,
        }
    }
}

/// Whether `colours` is a proper edge colouring of `g`.
pub fn is_proper_edge_coloring(g: &Graph, colours: &[u8]) -> bool {
    colours.len() == g.size()
        && (0..g.order()).all(|v| {
            let mut seen = [false; 256];
            g.incident_edges(v).iter().all(|&id| {
                let c = colours[id] as usize;
                !std::mem::replace(&mut seen[c], true)
            })
        })
}

struct Colouring<'g> {
    g: &'g Graph,
    colour: Vec<u8>,
    /// Bit mask of colours used at each vertex.
    used: Vec<u8>,
}

const NONE: u8 = u8::MAX;

impl Colouring<'_> {
    fn free(&self, id: usize) -> u8 {
        let (u, v) = self.g.edge(id);
        !(self.used[u] | self.used[v]) & 0b111
    }

    /// Most constrained uncoloured edge, or `None` when all are coloured.
    /// `Some(Err(()))` signals a dead end.
    fn pick(&self) -> Option<std::result::Result<usize, ()>> {
        let mut best: Option<(u32, usize)> = None;
        for id in 0..self.g.size() {
            if self.colour[id] != NONE {
                continue;
            }
            let options = self.free(id).count_ones();
            if options == 0 {
                return Some(Err(()));
            }
            if best.is_none_or(|b| options < b.0) {
                best = Some((options, id));
                if options == 1 {
                    break;
                }
            }
        }
        best.map(|(_, id)| Ok(id))
    }

    fn set(&mut self, id: usize, c: u8) {
        let (u, v) = self.g.edge(id);
        self.colour[id] = c;
        self.used[u] |= 1 << c;
        self.used[v] |= 1 << c;
    }

    fn unset(&mut self, id: usize) {
        let (u, v) = self.g.edge(id);
        let c = self.colour[id];
        self.colour[id] = NONE;
        self.used[u] &= !(1 << c);
        self.used[v] &= !(1 << c);
    }

    fn solve(&mut self) -> bool {
        let id = match self.pick() {
            None => return true,
            Some(Err(())) => return false,
            Some(Ok(id)) => id,
        };
        let free = self.free(id);
        for c in 0..3 {
            if free & (1 << c) != 0 {
                self.set(id, c);
                if self.solve() {
                    return true;
                }
                self.unset(id);
            }
        }
        false
    }
}

/// Decides whether a cubic graph is 3-edge-colourable, by backtracking on
/// the most constrained edge. The colours of one vertex's edges are fixed
/// up front since any colouring can be permuted to agree there.
pub fn edge_chromatic_class(g: &Graph) -> Result<EdgeColoring> {
    if !g.is_cubic() {
        return Err(Error::NotRegular(3));
    }
    let mut search = Colouring {
        g,
        colour: vec![NONE; g.size()],
        used: vec![0; g.order()],
    };
    if g.order() > 0 {
        for (c, &id) in g.incident_edges(0).iter().enumerate() {
            search.set(id, c as u8);
        }
    }
    Ok(if search.solve() {
        debug_assert!(is_proper_edge_coloring(g, &search.colour));
        EdgeColoring::Three(search.colour)
    } else {
        EdgeColoring::Four
    })
}

/// Thresholds for [`is_snark`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SnarkCriteria {
    pub girth: usize,
    pub cyclic_connectivity: usize,
}

impl Default for SnarkCriteria {
    fn default() -> Self {
        SnarkCriteria {
            girth: 5,
            cyclic_connectivity: 4,
        }
    }
}

/// Per-criterion verdicts. Criteria that need a cubic graph are `None`
/// when it is not cubic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnarkVerdict {
    pub criteria: SnarkCriteria,
    pub cubic: bool,
    pub bridgeless: bool,
    pub class_four: Option<bool>,
    pub girth: Extent,
    pub girth_ok: bool,
    pub cyclically_connected: Option<bool>,
}

impl SnarkVerdict {
    pub fn is_snark(&self) -> bool {
        self.cubic
            && self.bridgeless
            && self.class_four == Some(true)
            && self.girth_ok
            && self.cyclically_connected == Some(true)
    }
}

pub fn is_snark(g: &Graph, criteria: SnarkCriteria) -> SnarkVerdict {
    let cubic = g.order() > 0 && g.is_cubic();
    let girth = g.girth();
    SnarkVerdict {
        criteria,
        cubic,
        bridgeless: g.is_bridgeless(),
        class_four: cubic.then(|| matches!(edge_chromatic_class(g), Ok(EdgeColoring::Four))),
        girth,
        girth_ok: girth.at_least(criteria.girth),
        cyclically_connected: cubic
            .then(|| is_cyclically_k_edge_connected(g, criteria.cyclic_connectivity)),
    }
}

/// Outcome of [`odd_two_factored`]; `witness` is the first 2-factor found
/// with an even cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddTwoFactored {
    pub has_two_factor: bool,
    pub witness: Option<TwoFactor>,
}

impl OddTwoFactored {
    pub fn holds(&self) -> bool {
        self.has_two_factor && self.witness.is_none()
    }

    pub fn witness_type(&self) -> Option<CycleType> {
        self.witness.as_ref().map(TwoFactor::cycle_type)
    }
}

/// Whether every cycle of every 2-factor is odd, stopping at the first even
/// cycle.
pub fn odd_two_factored(g: &Graph) -> OddTwoFactored {
    let mut has = false;
    let mut witness = None;
    let _ = visit_two_factor_ids(g, &mut |ids| {
        has = true;
        let f = TwoFactor::from_ids(g, ids);
        if f.cycles().iter().any(|c| c.len() % 2 == 0) {
            witness = Some(f);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    OddTwoFactored {
        has_two_factor: has,
        witness,
    }
}

/// Families of odd 2-factored snarks known in advance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnownFamily {
    Petersen,
    Blanusa2,
    Flower(usize),
}

impl std::fmt::Display for KnownFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KnownFamily::Petersen => f.write_str("petersen"),
            KnownFamily::Blanusa2 => f.write_str("blanusa2"),
            KnownFamily::Flower(t) => write!(f, "flower{t}"),
        }
    }
}

pub fn known_family(g: &Graph) -> Option<KnownFamily> {
    let n = g.order();
    let same = |key: &str| named(key).is_ok_and(|ng| are_isomorphic(g, &ng.graph));
    if n == 10 && same("petersen") {
        return Some(KnownFamily::Petersen);
    }
    if n == 18 && same("blanusa2") {
        return Some(KnownFamily::Blanusa2);
    }
    if n.is_multiple_of(4) && (n / 4) % 2 == 1 && n / 4 >= 5 {
        let t = n / 4;
        if are_isomorphic(g, &flower_snark(t).expect("valid t")) {
            return Some(KnownFamily::Flower(t));
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanEntry {
    pub index: usize,
    pub order: usize,
    /// Cubic, bridgeless, class 4 and cyclically 4-edge-connected.
    pub snark: bool,
    pub odd_two_factored: bool,
    pub family: Option<KnownFamily>,
}

impl ScanEntry {
    /// An odd 2-factored snark outside the known families.
    pub fn candidate(&self) -> bool {
        self.snark && self.odd_two_factored && self.family.is_none()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanReport {
    pub entries: Vec<ScanEntry>,
}

impl ScanReport {
    pub fn snarks(&self) -> usize {
        self.entries.iter().filter(|e| e.snark).count()
    }

    pub fn odd_two_factored(&self) -> usize {
        self.entries.iter().filter(|e| e.odd_two_factored).count()
    }

    pub fn candidates(&self) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|e| e.candidate())
            .map(|e| e.index)
            .collect()
    }
}

pub fn scan_entry(index: usize, g: &Graph) -> ScanEntry {
    let criteria = SnarkCriteria {
        girth: 0,
        cyclic_connectivity: 4,
    };
    let snark = is_snark(g, criteria).is_snark();
    let odd = odd_two_factored(g).holds();
    ScanEntry {
        index,
        order: g.order(),
        snark,
        odd_two_factored: odd,
        family: if odd { known_family(g) } else { None },
    }
}

/// Checks each graph for being an odd 2-factored, cyclically
/// 4-edge-connected snark and matches those against the known families.
pub fn conjecture_scan<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> ScanReport {
    ScanReport {
        entries: graphs
            .into_iter()
            .enumerate()
            .map(|(i, g)| scan_entry(i, g))
            .collect(),
    }
}
