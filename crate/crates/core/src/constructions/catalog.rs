use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::tables::{self, Expectation};

use super::{complete, complete_bipartite, lcf};

pub const CATALOG_KEYS: [&str; 18] = [
    "k4",
    "k5",
    "k33",
    "heawood",
    "pappus",
    "petersen",
    "coxeter",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
    "blanusa1",
    "blanusa2",
    "loupekine1",
    "loupekine2",
    "celmins_swart1",
    "double_star",
    "szekeres",
];

#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub key: &'static str,
    pub name: &'static str,
    pub graph: Graph,
    /// Flags and cycle types expected from the classification tables.
    pub expected: Option<Expectation>,
}

/// Looks up a catalog graph by key.
pub fn named(key: &str) -> Result<NamedGraph> {
    let key = CATALOG_KEYS
        .iter()
        .copied()
        .find(|k| *k == key)
        .ok_or_else(|| Error::UnknownKey(key.to_string()))?;
    let (name, graph) = match key {
        "k4" => ("K4", complete(4)),
        "k5" => ("K5", complete(5)),
        "k33" => ("K3,3", complete_bipartite(3, 3)),
        "heawood" => ("Heawood", lcf(14, &[5, -5], 7)?),
        "pappus" => ("Pappus", lcf(18, &[5, 7, -7, 7, -7, -5], 3)?),
        "petersen" => ("Petersen", petersen()),
        "coxeter" => ("Coxeter", coxeter()),
        "cube" => ("Cube", lcf(8, &[3, -3], 4)?),
        "octahedron" => ("Octahedron", octahedron()),
        "dodecahedron" => (
            "Dodecahedron",
            lcf(20, &[10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2)?,
        ),
        "icosahedron" => ("Icosahedron", icosahedron()),
        "blanusa1" => ("Blanuša 1", blanusa1()),
        "blanusa2" => ("Blanuša 2", blanusa2()),
        "loupekine1" => ("Loupekine 1", loupekine([0, 0, 0])),
        "loupekine2" => ("Loupekine 2", loupekine([0, 0, 1])),
        "celmins_swart1" => return Err(Error::NoData(key.to_string())),
        "double_star" => ("Double Star", double_star()),
        "szekeres" => ("Szekeres", szekeres()),
        _ => unreachable!("key list and match arms agree"),
    };
    Ok(NamedGraph {
        key,
        name,
        graph,
        expected: tables::expectation(key),
    })
}

fn build(n: usize, edges: Vec<Edge>) -> Graph {
    Graph::new(n, edges).expect("catalog data is well formed")
}

fn ring(vs: &[usize], edges: &mut Vec<Edge>) {
    for i in 0..vs.len() {
        edges.push((vs[i], vs[(i + 1) % vs.len()]));
    }
}

/// Outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram.
fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    build(10, e)
}

/// `K_{2,2,2}`: all pairs except `i ~ i+3`.
fn octahedron() -> Graph {
    let e = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .filter(|&(u, v)| v != u + 3)
        .collect();
    build(6, e)
}

/// Apex `0`, upper ring `1..6`, lower ring `6..11`, apex `11`.
fn icosahedron() -> Graph {
    let mut e = Vec::new();
    for k in 0..5 {
        let up = 1 + k;
        let lo = 6 + k;
        e.push((0, up));
        e.push((up, 1 + (k + 1) % 5));
        e.push((lo, 6 + (k + 1) % 5));
        e.push((lo, 11));
        e.push((up, lo));
        e.push((up, 6 + (k + 1) % 5));
    }
    build(12, e)
}

// Adjacency data for the Coxeter graph and the Blanuša, Double Star and
// Szekeres snarks follows the Sage small-graphs database.

fn coxeter() -> Graph {
    let mut e = Vec::new();
    ring(&(0..24).collect::<Vec<_>>(), &mut e);
    for (c, nb) in [
        (24, [0, 7, 18]),
        (25, [8, 15, 2]),
        (26, [10, 16, 23]),
        (27, [6, 22, 14]),
    ] {
        e.extend(nb.iter().map(|&v| (c, v)));
    }
    e.extend([(5, 11), (9, 20), (12, 1), (13, 19), (17, 4), (3, 21)]);
    build(28, e)
}

/// 17-cycle with one extra vertex; the odd 2-factored member of the pair.
/// Some catalogs list this one first.
fn blanusa2() -> Graph {
    let mut e = Vec::new();
    ring(&(0..17).collect::<Vec<_>>(), &mut e);
    e.extend([(17, 4), (17, 7), (17, 1)]);
    e.extend([
        (0, 5),
        (3, 8),
        (13, 9),
        (12, 16),
        (10, 15),
        (11, 6),
        (14, 2),
    ]);
    build(18, e)
}

/// Two pentagons `0..5` and `8..13`, a hexagon on `5,6,7,13,14,15`, and
/// connectors `16`, `17`.
fn blanusa1() -> Graph {
    let mut e = Vec::new();
    ring(&[0, 1, 2, 3, 4], &mut e);
    ring(&[8, 9, 10, 11, 12], &mut e);
    ring(&[5, 6, 7, 13, 14, 15], &mut e);
    e.extend([(16, 0), (16, 12), (16, 17), (17, 3), (17, 9)]);
    e.extend([(2, 5), (6, 4), (7, 1), (15, 10), (8, 14), (11, 13)]);
    build(18, e)
}

fn double_star() -> Graph {
    const ADJ: [[usize; 3]; 30] = [
        [1, 14, 15],
        [0, 2, 11],
        [1, 3, 7],
        [2, 4, 18],
        [3, 5, 14],
        [10, 4, 6],
        [5, 21, 7],
        [8, 2, 6],
        [9, 13, 7],
        [24, 8, 10],
        [9, 11, 5],
        [1, 10, 12],
        [11, 27, 13],
        [8, 12, 14],
        [0, 4, 13],
        [0, 16, 29],
        [15, 20, 23],
        [25, 18, 28],
        [3, 17, 19],
        [18, 26, 23],
        [16, 28, 21],
        [20, 6, 22],
        [26, 21, 29],
        [16, 24, 19],
        [25, 9, 23],
        [24, 17, 29],
        [27, 19, 22],
        [12, 26, 28],
        [17, 27, 20],
        [25, 22, 15],
    ];
    let e = ADJ
        .iter()
        .enumerate()
        .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
        .collect();
    build(30, e)
}

/// Five blocks of nine path vertices `9i..9i+9` and centres `45+i`.
fn szekeres() -> Graph {
    let p = |i: usize, j: usize| 9 * (i % 5) + j;
    let mut e = Vec::new();
    for i in 0..5 {
        for j in 0..8 {
            e.push((p(i, j), p(i, j + 1)));
        }
        let c = 45 + i;
        e.extend([(c, p(i, 1)), (c, p(i, 4)), (c, p(i, 7))]);
        e.extend([(p(i, 0), p(i, 5)), (p(i, 8), p(i, 3))]);
        e.extend([(p(i, 0), p(i + 1, 8)), (p(i, 6), p(i + 2, 2))]);
    }
    build(50, e)
}

/// Three copies of the Petersen graph minus a 3-vertex path, around a
/// central vertex `21`.
///
/// Each block is the Petersen graph above with `0, 1, 2` removed, relabelled
/// `3..10 -> 7i..7i+7`. The vertex that lost `1` joins the centre; the pair
/// that lost `2` joins the pair that lost `0` in the next block, straight or
/// crossed according to `cross`.
fn loupekine(cross: [u8; 3]) -> Graph {
    let p = petersen();
    let local = |v: usize| v - 3;
    let mut e = Vec::new();
    for i in 0..3 {
        let off = 7 * i;
        for &(a, b) in p.edges() {
            if a >= 3 && b >= 3 {
                e.push((local(a) + off, local(b) + off));
            }
        }
        e.push((local(6) + off, 21));
        let next = 7 * ((i + 1) % 3);
        let from = [local(3) + off, local(7) + off];
        let mut to = [local(4) + next, local(5) + next];
        if cross[i] == 1 {
            to.swap(0, 1);
        }
        e.push((from[0], to[0]));
        e.push((from[1], to[1]));
    }
    build(22, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Extent;

    #[test]
    fn orders_and_degrees() {
        let expect: [(&str, usize, usize); 17] = [
            ("k4", 4, 3),
            ("k5", 5, 4),
            ("k33", 6, 3),
            ("heawood", 14, 3),
            ("pappus", 18, 3),
            ("petersen", 10, 3),
            ("coxeter", 28, 3),
            ("cube", 8, 3),
            ("octahedron", 6, 4),
            ("dodecahedron", 20, 3),
            ("icosahedron", 12, 5),
            ("blanusa1", 18, 3),
            ("blanusa2", 18, 3),
            ("loupekine1", 22, 3),
            ("loupekine2", 22, 3),
            ("double_star", 30, 3),
            ("szekeres", 50, 3),
        ];
        for (key, n, k) in expect {
            let g = named(key).unwrap().graph;
            assert_eq!(g.order(), n, "{key}");
            assert!(g.is_k_regular(k), "{key}");
        }
    }

    #[test]
    fn girths() {
        let expect = [
            ("heawood", 6),
            ("pappus", 6),
            ("petersen", 5),
            ("coxeter", 7),
            ("cube", 4),
            ("dodecahedron", 5),
            ("icosahedron", 3),
            ("blanusa1", 5),
            ("blanusa2", 5),
            ("loupekine1", 5),
            ("loupekine2", 5),
            ("double_star", 6),
            ("szekeres", 5),
        ];
        for (key, girth) in expect {
            assert_eq!(
                named(key).unwrap().graph.girth(),
                Extent::Finite(girth),
                "{key}"
            );
        }
    }

    #[test]
    fn bipartite_members() {
        for key in ["k33", "heawood", "pappus", "cube"] {
            assert!(named(key).unwrap().graph.is_bipartite(), "{key}");
        }
        for key in ["k4", "petersen", "coxeter", "octahedron", "dodecahedron"] {
            assert!(!named(key).unwrap().graph.is_bipartite(), "{key}");
        }
    }

    #[test]
    fn unknown_and_missing() {
        assert_eq!(named("k7").unwrap_err(), Error::UnknownKey("k7".into()));
        assert_eq!(
            named("celmins_swart1").unwrap_err(),
            Error::NoData("celmins_swart1".into())
        );
    }

    #[test]
    fn loupekine_pair_differs() {
        let a = named("loupekine1").unwrap().graph;
        let b = named("loupekine2").unwrap().graph;
        assert!(!crate::iso::are_isomorphic(&a, &b));
    }
}
