//! graph6 codec, a plain-text digraph format and JSON renderings of the
//! reports.
//!
//! The digraph format is a header line `n m` followed by `m` lines `u v`,
//! one per arc `u -> v`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Extent, Graph};
use crate::snarks::{ScanEntry, ScanReport, SnarkVerdict};
use crate::two_factors::{ClassificationReport, CommonProfile};

const HEADER: &str = ">>graph6<<";
/// Largest order representable by graph6.
pub const GRAPH6_MAX_ORDER: usize = (1 << 36) - 1;

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn encode_order(n: usize, out: &mut String) {
    let push6 = |out: &mut String, shift: u32| out.push(char::from(((n >> shift) & 63) as u8 + 63));
    if n <= 62 {
        out.push(char::from(n as u8 + 63));
    } else if n <= 258_047 {
        out.push('~');
        for s in [12, 6, 0] {
            push6(out, s);
        }
    } else {
        out.push_str("~~");
        for s in [30, 24, 18, 12, 6, 0] {
            push6(out, s);
        }
    }
}

/// graph6 encoding without header or newline.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::TooLarge {
            what: "graph6 order",
            limit: GRAPH6_MAX_ORDER,
        });
    }
    let mut out = String::new();
    encode_order(n, &mut out);
    let (mut acc, mut bits) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(char::from(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(char::from((acc << (6 - bits)) + 63));
    }
    Ok(out)
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and a trailing
/// line break are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    if line.is_empty() {
        return Err(g6_err("empty line"));
    }
    let bytes = line.as_bytes();
    if let Some(p) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6_err(format!("invalid character at position {p}")));
    }
    let vals: Vec<usize> = bytes.iter().map(|&b| (b - 63) as usize).collect();
    let (n, body) = if vals[0] < 63 {
        (vals[0], &vals[1..])
    } else if vals.len() >= 2 && vals[1] == 63 {
        if vals.len() < 8 {
            return Err(g6_err("truncated order field"));
        }
        (vals[2..8].iter().fold(0, |a, &v| (a << 6) | v), &vals[8..])
    } else {
        if vals.len() < 4 {
            return Err(g6_err("truncated order field"));
        }
        (vals[1..4].iter().fold(0, |a, &v| (a << 6) | v), &vals[4..])
    };
    let total = n * n.saturating_sub(1) / 2;
    let need = total.div_ceil(6);
    if body.len() < need {
        return Err(g6_err(format!(
            "truncated bit field: {} of {need} bytes",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(g6_err("trailing characters after the bit field"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if need > 0 {
        let pad = need * 6 - total;
        if body[need - 1] & ((1 << pad) - 1) != 0 {
            return Err(g6_err("nonzero padding bits"));
        }
    }
    Graph::new(n, edges)
}

/// Parses every non-blank line; errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim_end()).map_err(|e| g6_err(format!("line {}: {e}", i + 1)))
        })
        .collect()
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("{} {}\n", d.order(), d.size());
    for &(u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn two_numbers(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let bad = |reason: &str| Error::DigraphText {
        line: lineno,
        reason: reason.to_string(),
    };
    let mut it = line.split_whitespace();
    let a = it.next().ok_or_else(|| bad("expected two integers"))?;
    let b = it.next().ok_or_else(|| bad("expected two integers"))?;
    if it.next().is_some() {
        return Err(bad("expected exactly two integers"));
    }
    let a = a.parse().map_err(|_| bad("not a nonnegative integer"))?;
    let b = b.parse().map_err(|_| bad("not a nonnegative integer"))?;
    Ok((a, b))
}

/// Parses the `n m` / arc-list format. Blank lines are ignored.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or(Error::DigraphText {
        line: 1,
        reason: "missing header".into(),
    })?;
    let (n, m) = two_numbers(header, hl)?;
    let mut arcs = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, l) in lines {
        let (u, v) = two_numbers(l, ln)?;
        if u >= n || v >= n {
            return Err(Error::DigraphText {
                line: ln,
                reason: format!("vertex out of range 0..{n}"),
            });
        }
        arcs.push((u, v));
        last = ln;
    }
    if arcs.len() != m {
        return Err(Error::DigraphText {
            line: last,
            reason: format!("header announces {m} arcs, found {}", arcs.len()),
        });
    }
    Digraph::new(n, arcs).map_err(|e| Error::DigraphText {
        line: 0,
        reason: e.to_string(),
    })
}

#[derive(Serialize)]
struct GraphInfo {
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph6: Option<String>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    directed: bool,
}

#[derive(Serialize)]
struct Flags {
    hu: bool,
    u: bool,
    spu: bool,
    pu: bool,
    odd_two_factored: bool,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    graph: GraphInfo,
    has_two_factor: bool,
    two_factor_count: u64,
    types: Vec<&'a [usize]>,
    flags: Flags,
    profile: Option<CommonProfile>,
    inconclusive: bool,
}

fn report_json(graph: GraphInfo, r: &ClassificationReport) -> String {
    let json = ReportJson {
        graph,
        has_two_factor: r.has_two_factor,
        two_factor_count: r.two_factor_count,
        types: r.types.iter().map(|t| t.lengths()).collect(),
        flags: Flags {
            hu: r.hu,
            u: r.u,
            spu: r.spu,
            pu: r.pu,
            odd_two_factored: r.odd_two_factored,
        },
        profile: r.profile,
        inconclusive: r.inconclusive,
    };
    serde_json::to_string(&json).expect("plain data serializes")
}

/// One-line JSON with a fixed field order.
pub fn report_to_json(g: &Graph, r: &ClassificationReport) -> Result<String> {
    let info = GraphInfo {
        n: g.order(),
        m: g.size(),
        graph6: Some(write_graph6(g)?),
        directed: false,
    };
    Ok(report_json(info, r))
}

pub fn digraph_report_to_json(d: &Digraph, r: &ClassificationReport) -> String {
    let info = GraphInfo {
        n: d.order(),
        m: d.size(),
        graph6: None,
        directed: true,
    };
    report_json(info, r)
}

#[derive(Serialize)]
#[serde(untagged)]
enum ExtentJson {
    Finite(usize),
    Infinite(&'static str),
}

impl From<Extent> for ExtentJson {
    fn from(e: Extent) -> Self {
        match e {
            Extent::Finite(k) => ExtentJson::Finite(k),
            Extent::Infinite => ExtentJson::Infinite("inf"),
        }
    }
}

#[derive(Serialize)]
struct SnarkJson {
    graph: GraphInfo,
    cubic: bool,
    bridgeless: bool,
    class_four: Option<bool>,
    girth: ExtentJson,
    girth_at_least: usize,
    girth_ok: bool,
    cyclic_connectivity_at_least: usize,
    cyclically_connected: Option<bool>,
    snark: bool,
}

pub fn snark_verdict_to_json(g: &Graph, v: &SnarkVerdict) -> Result<String> {
    let json = SnarkJson {
        graph: GraphInfo {
            n: g.order(),
            m: g.size(),
            graph6: Some(write_graph6(g)?),
            directed: false,
        },
        cubic: v.cubic,
        bridgeless: v.bridgeless,
        class_four: v.class_four,
        girth: v.girth.into(),
        girth_at_least: v.criteria.girth,
        girth_ok: v.girth_ok,
        cyclic_connectivity_at_least: v.criteria.cyclic_connectivity,
        cyclically_connected: v.cyclically_connected,
        snark: v.is_snark(),
    };
    Ok(serde_json::to_string(&json).expect("plain data serializes"))
}

#[derive(Serialize)]
struct ScanEntryJson {
    index: usize,
    n: usize,
    snark: bool,
    odd_two_factored: bool,
    family: Option<String>,
    candidate: bool,
}

pub fn scan_entry_to_json(e: &ScanEntry) -> String {
    let json = ScanEntryJson {
        index: e.index,
        n: e.order,
        snark: e.snark,
        odd_two_factored: e.odd_two_factored,
        family: e.family.map(|f| f.to_string()),
        candidate: e.candidate(),
    };
    serde_json::to_string(&json).expect("plain data serializes")
}

#[derive(Serialize)]
struct ScanSummary {
    graphs: usize,
    snarks: usize,
    odd_two_factored: usize,
    candidates: Vec<usize>,
}

#[derive(Serialize)]
struct SummaryJson {
    summary: ScanSummary,
}

/// One line per entry followed by a summary line.
pub fn scan_report_to_json_lines(r: &ScanReport) -> String {
    let mut out = String::new();
    for e in &r.entries {
        out.push_str(&scan_entry_to_json(e));
        out.push('\n');
    }
    let summary = SummaryJson {
        summary: ScanSummary {
            graphs: r.entries.len(),
            snarks: r.snarks(),
            odd_two_factored: r.odd_two_factored(),
            candidates: r.candidates(),
        },
    };
    out.push_str(&serde_json::to_string(&summary).expect("plain data serializes"));
    out.push('\n');
    out
}
