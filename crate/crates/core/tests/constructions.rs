use std::collections::BTreeSet;

use twofactor::connectivity::is_cyclically_k_edge_connected;
use twofactor::constructions::{
    complete, complete_bipartite, flower_snark, four_seed_graft, h_family, h_family_arranged,
    h_family_shape, h_star, inflate_triangle, named, star_product, three_join, CATALOG_KEYS,
};
use twofactor::iso::are_isomorphic;
use twofactor::matchings::{is_det_extremal, perfect_matchings};
use twofactor::snarks::{
    conjecture_scan, edge_chromatic_class, is_snark, known_family, odd_two_factored, KnownFamily,
    SnarkCriteria,
};
use twofactor::tables::Section;
use twofactor::two_factors::{
    classify, edge_loyalty, is_tight_cut, loyal_edges, pseudo_loyal_edges, two_factors, CycleType,
};
use twofactor::{EdgeCut, Graph};

fn ct(lengths: &[usize]) -> CycleType {
    CycleType::new(lengths.to_vec())
}

fn catalog() -> Vec<(&'static str, Graph)> {
    CATALOG_KEYS
        .iter()
        .filter_map(|&k| named(k).ok().map(|ng| (k, ng.graph)))
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

#[test]
fn flower_snark_sizes() {
    for t in [5, 7, 9, 11] {
        let g = flower_snark(t).unwrap();
        assert_eq!((g.order(), g.size()), (4 * t, 6 * t));
        assert!(g.is_cubic());
    }
    assert!(flower_snark(4).is_err());
    assert!(flower_snark(3).is_err());
}

#[test]
fn flower_snark_two_factors() {
    let g = flower_snark(5).unwrap();
    let r = classify(&g);
    assert!(r.types.contains(&ct(&[5, 15])));
    assert_eq!(r.two_factor_count, 32);
    assert_eq!(
        r.types,
        BTreeSet::from([ct(&[5, 15]), ct(&[7, 13]), ct(&[9, 11])])
    );
}

#[test]
fn star_product_of_prisms_and_bipartite_graphs() {
    let k4 = complete(4);
    let (prism, cut) = star_product(&k4, 0, &k4, 0).unwrap();
    assert_eq!(prism.order(), 6);
    assert!(prism.is_cubic());
    let expected = Graph::new(
        6,
        [
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap();
    assert!(are_isomorphic(&prism, &expected));
    assert!(!classify(&prism).hu);
    assert_eq!(cut.edges.len(), 3);

    let k33 = complete_bipartite(3, 3);
    let (g, cut) = star_product(&k33, 0, &k33, 5).unwrap();
    assert!(classify(&g).hu);
    assert!(is_tight_cut(&g, &cut).unwrap());
    assert!(g.is_bipartite());
}

#[test]
fn vertex_stars_are_tight() {
    for g in [
        named("petersen").unwrap().graph,
        complete(4),
        flower_snark(5).unwrap(),
    ] {
        for v in 0..g.order() {
            assert!(is_tight_cut(&g, &EdgeCut::around(&g, &[v])).unwrap());
        }
    }
    let p = named("petersen").unwrap().graph;
    let two = EdgeCut::around(&p, &[0, 1]);
    assert!(is_tight_cut(&p, &two).is_err());
}

#[test]
fn inflating_k33() {
    let k33 = complete_bipartite(3, 3);
    for v in 0..6 {
        let g = inflate_triangle(&k33, v).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_cubic());
        assert!(classify(&g).pu);
        assert!(!g.is_bipartite());
        let near = (0..g.size())
            .any(|a| (a + 1..g.size()).any(|b| g.without_edges(&[a, b]).is_bipartite()));
        assert!(near);
        let single = (0..g.size()).any(|a| g.without_edges(&[a]).is_bipartite());
        assert!(!single);
    }
    let prism = inflate_triangle(&complete(4), 0).unwrap();
    assert!(are_isomorphic(
        &prism,
        &star_product(&complete(4), 0, &complete(4), 0).unwrap().0
    ));
    assert!(inflate_triangle(&complete(5), 0).is_err());
}

#[test]
fn three_joins_are_two_but_not_three_edge_connected() {
    let parts = [
        complete(4),
        named("petersen").unwrap().graph,
        named("heawood").unwrap().graph,
    ];
    for a in &parts {
        for b in &parts {
            let g = three_join([(a, a.edge(0)), (b, b.edge(1)), (a, a.edge(2))]).unwrap();
            assert_eq!(g.order(), 2 * a.order() + b.order() + 2);
            assert!(g.is_cubic());
            assert_eq!(g.edge_connectivity(), 2);
        }
    }
}

#[test]
fn joined_flower_snarks_are_not_snarks() {
    let j5 = flower_snark(5).unwrap();
    let e = (1, 18);
    let g = three_join([(&j5, e), (&j5, e), (&j5, e)]).unwrap();
    assert!(!is_cyclically_k_edge_connected(&g, 4));
    let v = is_snark(&g, SnarkCriteria::default());
    assert_eq!(v.cyclically_connected, Some(false));
    assert!(!v.is_snark());
}

#[test]
fn even_three_joins_are_spu() {
    let parts = [
        complete_bipartite(3, 3),
        named("heawood").unwrap().graph,
        named("pappus").unwrap().graph,
    ];
    for a in 0..3 {
        for b in a..3 {
            for c in b..3 {
                let (ga, gb, gc) = (&parts[a], &parts[b], &parts[c]);
                let g = three_join([(ga, ga.edge(0)), (gb, gb.edge(3)), (gc, gc.edge(5))]).unwrap();
                let r = classify(&g);
                assert!(r.spu, "{a}{b}{c}");
            }
        }
    }
}

#[test]
fn h_family_shapes() {
    assert_eq!(h_family_shape(14).unwrap(), (1, 3));
    assert_eq!(h_family_shape(16).unwrap(), (2, 3));
    assert!(h_family_shape(13).is_err());
    assert!(h_family_shape(12).is_err());
    let r = classify(&h_family(14).unwrap());
    assert_eq!(r.types, BTreeSet::from([ct(&[4, 4, 6]), ct(&[14])]));
    assert!(r.spu && !r.u);
}

#[test]
fn h_family_classification_ignores_block_placement() {
    for n in (14..=24).step_by(2) {
        let (theta, frame) = h_family_shape(n).unwrap();
        let reference = classify(&h_family(n).unwrap());
        for positions in combinations(frame, theta) {
            let g = h_family_arranged(n, &positions).unwrap();
            assert_eq!(g.order(), n);
            assert!(g.is_cubic());
            let r = classify(&g);
            assert!(r.spu && !r.u, "n={n} positions={positions:?}");
            assert_eq!(
                r.profile, reference.profile,
                "n={n} positions={positions:?}"
            );
        }
    }
}

#[test]
fn h_star_loyalty() {
    let g = h_star(1).unwrap();
    assert_eq!(g.order(), 15);
    assert!(g.is_k_regular(4));
    assert_eq!(g.edge_connectivity(), 2);
    let pl: BTreeSet<_> = pseudo_loyal_edges(&g).into_iter().collect();
    for (u, v) in [(4, 8), (9, 13), (3, 14)] {
        assert!(g.has_edge(u, v), "{u}-{v}");
        assert!(pl.contains(&(u, v)), "{u}-{v}");
    }
    let g25 = h_star(2).unwrap();
    assert_eq!(pseudo_loyal_edges(&g25).len(), g25.size());
    let r = classify(&g);
    assert!(r.spu && !r.u);
}

#[test]
fn loyalty_examples() {
    let k5 = complete(5);
    assert_eq!(loyal_edges(&k5).len(), 10);
    let k4 = complete(4);
    assert_eq!(pseudo_loyal_edges(&k4).len(), 6);
    let dodec = named("dodecahedron").unwrap().graph;
    let witness = edge_loyalty(&dodec).into_iter().find(|l| {
        l.containing > 0 && l.avoiding > 0 && l.lengths.contains(&20) && l.lengths.contains(&10)
    });
    assert!(witness.is_some_and(|l| !l.is_loyal()));
    for (_, g) in catalog().into_iter().filter(|(_, g)| g.order() <= 20) {
        let pl: BTreeSet<_> = pseudo_loyal_edges(&g).into_iter().collect();
        assert!(loyal_edges(&g).iter().all(|e| pl.contains(e)));
    }
}

#[test]
fn graft_of_k5() {
    let k5 = complete(5);
    let reference = classify(&four_seed_graft(&k5, (0, 1)).unwrap());
    for &e in k5.edges() {
        let g = four_seed_graft(&k5, e).unwrap();
        assert_eq!(g.order(), 22);
        assert!(g.is_k_regular(4));
        assert_eq!(g.vertex_connectivity(), 2);
        let r = classify(&g);
        assert!(r.spu);
        assert_eq!(r.profile, reference.profile);
    }
    assert!(four_seed_graft(&named("petersen").unwrap().graph, (0, 1)).is_err());
}

#[test]
fn heawood_minus_any_matching_is_det_extremal() {
    let h = named("heawood").unwrap().graph;
    let matchings = perfect_matchings(&h);
    assert_eq!(matchings.len(), 24);
    for m in &matchings {
        let ids: Vec<usize> = m
            .edges()
            .iter()
            .map(|&(u, v)| h.edge_id(u, v).unwrap())
            .collect();
        assert!(is_det_extremal(&h.without_edges(&ids)).unwrap());
    }
    assert!(is_det_extremal(&h).unwrap());
}

#[test]
fn bipartite_pu_catalog_graphs_have_a_low_degree_vertex() {
    let mut checked = 0;
    for (key, g) in catalog() {
        if !g.is_bipartite() || g.order() > 30 || !classify(&g).pu {
            continue;
        }
        let n = g.order() / 2;
        let bound = n.ilog2() as usize + 2;
        assert!(g.min_degree() <= bound, "{key}");
        checked += 1;
    }
    assert_eq!(checked, 3);
}

#[test]
fn odd_two_factored_catalog_graphs_are_snarks() {
    for (key, g) in catalog() {
        if g.is_cubic() && g.vertex_connectivity() >= 3 && odd_two_factored(&g).holds() {
            assert_eq!(edge_chromatic_class(&g).unwrap().class(), 4, "{key}");
        }
    }
}

#[test]
fn odd_two_factored_implies_spu_zero_profile() {
    for (_, g) in catalog().into_iter().filter(|(_, g)| g.order() <= 30) {
        let r = classify(&g);
        assert_eq!(r.odd_two_factored, odd_two_factored(&g).holds());
        if r.odd_two_factored {
            let p = r.profile.unwrap();
            assert_eq!((p.t0, p.t1), (Some(0), Some(0)));
        }
    }
}

#[test]
fn cubic_catalog_duality() {
    for (key, g) in catalog() {
        if g.is_cubic() && g.order() <= 30 {
            let direct = twofactor::two_factors::two_factors_direct(&g);
            assert_eq!(direct, two_factors(&g), "{key}");
        }
    }
}

#[test]
fn snark_witnesses() {
    let b1 = odd_two_factored(&named("blanusa1").unwrap().graph);
    assert!(!b1.holds());
    let b2 = named("blanusa2").unwrap().graph;
    assert!(odd_two_factored(&b2).holds());
    assert_eq!(
        classify(&b2).types,
        BTreeSet::from([ct(&[5, 13]), ct(&[9, 9])])
    );
    assert_eq!(
        edge_chromatic_class(&flower_snark(7).unwrap())
            .unwrap()
            .class(),
        4
    );
    assert_eq!(
        edge_chromatic_class(&complete_bipartite(3, 3))
            .unwrap()
            .class(),
        3
    );
    assert!(!is_snark(&complete(4), SnarkCriteria::default()).is_snark());
    assert!(is_snark(&named("petersen").unwrap().graph, SnarkCriteria::default()).is_snark());
}

#[test]
fn catalog_scan() {
    let mut keys = vec!["petersen"];
    keys.extend(Section::Snarks.keys());
    let graphs: Vec<(&str, Graph)> = catalog()
        .into_iter()
        .filter(|(k, _)| keys.contains(k))
        .collect();
    let refs: Vec<&Graph> = graphs.iter().map(|(_, g)| g).collect();
    let report = conjecture_scan(refs.iter().copied());
    assert!(report.candidates().is_empty());
    let odd: Vec<&str> = report
        .entries
        .iter()
        .filter(|e| e.odd_two_factored)
        .map(|e| graphs[e.index].0)
        .collect();
    assert_eq!(odd, ["petersen", "blanusa2"]);

    let flowers: Vec<Graph> = [5, 7, 9]
        .iter()
        .map(|&t| flower_snark(t).unwrap())
        .collect();
    let report = conjecture_scan(&flowers);
    assert!(report.candidates().is_empty());
    for (e, t) in report.entries.iter().zip([5, 7, 9]) {
        assert!(e.snark && e.odd_two_factored);
        assert_eq!(e.family, Some(KnownFamily::Flower(t)));
    }
    assert!(conjecture_scan(Vec::<&Graph>::new()).entries.is_empty());
    assert_eq!(
        known_family(&named("blanusa2").unwrap().graph),
        Some(KnownFamily::Blanusa2)
    );
}
