//! Reference classification tables for the catalog graphs, and a checker
//! that recomputes each row and reports disagreements.
//!
//! A row's type list is exhaustive unless marked open, in which case the
//! listed types only have to occur.

use std::fmt::Write as _;

use crate::constructions::named;
use crate::two_factors::{classify, ClassificationReport, CycleType};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section {
    /// Hierarchy membership of small regular graphs.
    Hierarchy,
    /// Odd 2-factoredness of named snarks.
    Snarks,
}

impl Section {
    pub fn keys(self) -> &'static [&'static str] {
        match self {
            Section::Hierarchy => &HIERARCHY_KEYS,
            Section::Snarks => &SNARK_KEYS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HierarchyFlags {
    pub hu: bool,
    pub u: bool,
    pub spu: bool,
    pub pu: bool,
}

/// Expected classification of one catalog graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expectation {
    pub section: Section,
    pub label: &'static str,
    pub flags: Option<HierarchyFlags>,
    pub odd_two_factored: Option<bool>,
    /// As printed in the reference table; shown for comparison only.
    pub bipartite: Option<bool>,
    pub types: &'static [&'static [usize]],
    /// `false` when further types are allowed.
    pub exhaustive: bool,
}

const HIERARCHY_KEYS: [&str; 11] = [
    "k4",
    "k33",
    "heawood",
    "petersen",
    "coxeter",
    "pappus",
    "dodecahedron",
    "octahedron",
    "cube",
    "k5",
    "icosahedron",
];

const SNARK_KEYS: [&str; 7] = [
    "blanusa1",
    "blanusa2",
    "loupekine1",
    "loupekine2",
    "celmins_swart1",
    "double_star",
    "szekeres",
];

const fn row(
    label: &'static str,
    [hu, u, spu, pu]: [bool; 4],
    bipartite: bool,
    types: &'static [&'static [usize]],
    exhaustive: bool,
) -> Expectation {
    Expectation {
        section: Section::Hierarchy,
        label,
        flags: Some(HierarchyFlags { hu, u, spu, pu }),
        odd_two_factored: None,
        bipartite: Some(bipartite),
        types,
        exhaustive,
    }
}

const fn snark(
    label: &'static str,
    odd: bool,
    types: &'static [&'static [usize]],
    exhaustive: bool,
) -> Expectation {
    Expectation {
        section: Section::Snarks,
        label,
        flags: None,
        odd_two_factored: Some(odd),
        bipartite: None,
        types,
        exhaustive,
    }
}

const Y: bool = true;
const N: bool = false;

pub fn expectation(key: &str) -> Option<Expectation> {
    Some(match key {
        "k4" => row("Tetrahedron = K4", [Y, Y, Y, Y], N, &[&[4]], true),
        "k33" => row("K3,3", [Y, Y, Y, Y], Y, &[&[6]], true),
        "heawood" => row("Heawood", [Y, Y, Y, Y], Y, &[&[14]], true),
        "petersen" => row("Petersen", [N, Y, Y, Y], N, &[&[5, 5]], true),
        "coxeter" => row("Coxeter", [N, Y, Y, Y], N, &[&[14, 14]], true),
        "pappus" => row("Pappus", [N, N, Y, Y], Y, &[&[18], &[6, 6, 6]], true),
        "dodecahedron" => row("Dodecahedron", [N, N, N, Y], N, &[&[5, 5, 10], &[20]], true),
        "octahedron" => row("Octahedron", [N, N, N, N], N, &[&[3, 3], &[6]], true),
        "cube" => row("Cube", [N, N, N, N], N, &[&[4, 4], &[8]], true),
        "k5" => row("K5", [Y, Y, Y, Y], N, &[&[5]], true),
        "icosahedron" => row(
            "Icosahedron",
            [N, N, N, N],
            N,
            &[&[3, 3, 3, 3], &[12]],
            false,
        ),
        "blanusa1" => snark("Blanuša snark 1", N, &[&[5, 5, 8]], false),
        "blanusa2" => snark("Blanuša snark 2", Y, &[&[5, 13], &[9, 9]], true),
        "loupekine1" => snark("Loupekine snark 1", N, &[&[5, 8, 9]], false),
        "loupekine2" => snark("Loupekine snark 2", N, &[&[5, 8, 9]], false),
        "celmins_swart1" => snark("Celmins-Swart snark 1", N, &[&[5, 5, 8, 8]], false),
        "double_star" => snark("Double Star snark", N, &[&[7, 7, 16]], false),
        "szekeres" => snark("Szekeres snark", N, &[&[5, 5, 40]], false),
        _ => return None,
    })
}

/// Outcome of recomputing one row.
#[derive(Debug, Clone)]
pub struct RowCheck {
    pub key: &'static str,
    pub expected: Expectation,
    pub report: Option<ClassificationReport>,
    pub bipartite: Option<bool>,
    /// Disagreements with the expected flags or types; empty means the row
    /// matches.
    pub mismatches: Vec<String>,
    /// Differences in informational columns.
    pub notes: Vec<String>,
}

impl RowCheck {
    pub fn matches(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn check_row(key: &'static str) -> Option<RowCheck> {
    let expected = expectation(key)?;
    let mut check = RowCheck {
        key,
        expected,
        report: None,
        bipartite: None,
        mismatches: Vec::new(),
        notes: Vec::new(),
    };
    let graph = match named(key) {
        Ok(ng) => ng.graph,
        Err(e) => {
            check.mismatches.push(e.to_string());
            return Some(check);
        }
    };
    let report = classify(&graph);
    let bip = graph.is_bipartite();
    if let Some(f) = expected.flags {
        let pairs = [
            ("HU", f.hu, report.hu),
            ("U", f.u, report.u),
            ("SPU", f.spu, report.spu),
            ("PU", f.pu, report.pu),
        ];
        for (name, want, got) in pairs {
            if want != got {
                check.mismatches.push(format!(
                    "{name}: expected {}, computed {}",
                    yes_no(want),
                    yes_no(got)
                ));
            }
        }
    }
    if let Some(want) = expected.odd_two_factored {
        if want != report.odd_two_factored {
            check.mismatches.push(format!(
                "odd 2-factored: expected {}, computed {}",
                yes_no(want),
                yes_no(report.odd_two_factored)
            ));
        }
    }
    if let Some(want) = expected.bipartite {
        if want != bip {
            check.notes.push(format!(
                "bipartite column reads {}, graph is {}bipartite",
                yes_no(want),
                if bip { "" } else { "not " }
            ));
        }
    }
    for &t in expected.types {
        if !report.types.contains(t) {
            check
                .mismatches
                .push(format!("type {} not found", CycleType::new(t.to_vec())));
        }
    }
    if expected.exhaustive {
        for t in &report.types {
            if !expected.types.contains(&t.lengths()) {
                check.mismatches.push(format!("unexpected type {t}"));
            }
        }
    }
    check.bipartite = Some(bip);
    check.report = Some(report);
    Some(check)
}

pub fn check_section(section: Section) -> Vec<RowCheck> {
    section
        .keys()
        .iter()
        .map(|&k| check_row(k).expect("section keys have expectations"))
        .collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "-"
    }
}

fn type_list(report: &ClassificationReport) -> String {
    report
        .types
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Plain-text rendering: one line per row, then any mismatch detail.
pub fn render(section: Section, rows: &[RowCheck]) -> String {
    let mut out = String::new();
    match section {
        Section::Hierarchy => {
            let _ = writeln!(
                out,
                "{:<18} {:<4} {:<4} {:<4} {:<4} {:<4} {:<6} types",
                "graph", "HU", "U", "SPU", "PU", "bip", "check"
            );
        }
        Section::Snarks => {
            let _ = writeln!(out, "{:<22} {:<4} {:<6} types", "graph", "odd", "check");
        }
    }
    for r in rows {
        let status = if r.matches() { "ok" } else { "FAIL" };
        match (&r.report, section) {
            (Some(rep), Section::Hierarchy) => {
                let _ = writeln!(
                    out,
                    "{:<18} {:<4} {:<4} {:<4} {:<4} {:<4} {:<6} {}",
                    r.expected.label,
                    mark(rep.hu),
                    mark(rep.u),
                    mark(rep.spu),
                    mark(rep.pu),
                    mark(r.bipartite == Some(true)),
                    status,
                    type_list(rep)
                );
            }
            (Some(rep), Section::Snarks) => {
                let _ = writeln!(
                    out,
                    "{:<22} {:<4} {:<6} {}",
                    r.expected.label,
                    mark(rep.odd_two_factored),
                    status,
                    type_list(rep)
                );
            }
            (None, _) => {
                let _ = writeln!(out, "{:<22} unavailable  {status}", r.expected.label);
            }
        }
        for m in &r.mismatches {
            let _ = writeln!(out, "    mismatch: {m}");
        }
        for n in &r.notes {
            let _ = writeln!(out, "    note: {n}");
        }
    }
    out
}
