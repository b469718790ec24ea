mod common;

use geoblock::export::{parse_edge_list, parse_structured, to_dot, to_edge_list, to_structured};
use geoblock::verify::local_vertex_connectivity;
use geoblock::{
    build_complete_triples, build_projective_plane, build_star, build_sts, build_triple_system,
    cover_from_design, geodesic_spectrum, mu, vertex_connectivity, Cover, Graph, LabeledGraph,
    Spectrum, Spectrum64, VertexLabel,
};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.05f64..0.7).prop_map(|(n, seed, p)| {
        common::random_connected_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
    })
}

fn labeled(g: &Graph) -> LabeledGraph {
    let labels = (0..g.vertex_count())
        .map(|v| VertexLabel::Named(format!("v{v:02}")))
        .collect();
    LabeledGraph::new(g.clone(), labels).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectrum_matches_path_enumeration(g in arb_connected_graph(11)) {
        let spectrum: Spectrum64 = geodesic_spectrum(&g).unwrap();
        let brute = common::brute_geodesics(&g).unwrap();
        let got: Vec<_> = spectrum
            .records
            .iter()
            .map(|r| (r.u, r.v, r.distance, r.count))
            .collect();
        prop_assert_eq!(got, brute);
    }

    #[test]
    fn wide_and_narrow_counts_agree(g in arb_connected_graph(12)) {
        let wide: Spectrum = geodesic_spectrum(&g).unwrap();
        let narrow: Spectrum64 = geodesic_spectrum(&g).unwrap();
        prop_assert_eq!(wide.records.len(), narrow.records.len());
        for (a, b) in wide.records.iter().zip(&narrow.records) {
            prop_assert_eq!(&a.count, &BigUint::from(b.count));
        }
    }

    #[test]
    fn connectivity_matches_subset_deletion(g in arb_connected_graph(12)) {
        prop_assert_eq!(vertex_connectivity(&g), common::brute_connectivity(&g));
    }

    #[test]
    fn local_connectivity_bounds_global(g in arb_connected_graph(10)) {
        let kappa = vertex_connectivity(&g);
        let n = g.vertex_count();
        for u in 0..n {
            for v in u + 1..n {
                if !g.has_edge(u, v) {
                    let local = local_vertex_connectivity(&g, u, v);
                    prop_assert!(local >= kappa);
                    prop_assert!(local <= g.degree(u).min(g.degree(v)));
                }
            }
        }
    }

    #[test]
    fn edge_list_round_trip(g in arb_connected_graph(12)) {
        let lg = labeled(&g);
        let text = to_edge_list(&lg);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &lg);
        prop_assert_eq!(to_edge_list(&back), text);
    }

    #[test]
    fn structured_round_trip(g in arb_connected_graph(12)) {
        let lg = labeled(&g);
        let text = to_structured(&lg, None, None, None).unwrap();
        prop_assert_eq!(parse_structured(&text).unwrap().graph, lg);
    }

    #[test]
    fn star_of_arbitrary_cover(n in 2usize..9, seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut members: Vec<Vec<usize>> = (0..n)
            .map(|_| (0..n).filter(|_| rng.gen_bool(0.4)).collect::<Vec<_>>())
            .filter(|m: &Vec<usize>| !m.is_empty())
            .collect();
        members.push((0..n).filter(|x| x % 2 == 0).collect());
        members.push((0..n).filter(|x| x % 2 == 1).collect());
        members.retain(|m| !m.is_empty());
        let cover = Cover::new(n, members.clone()).unwrap();
        let star = build_star(&cover);
        let sizes: usize = members.iter().map(Vec::len).sum();
        let clique_edges: usize = members.iter().map(|m| m.len() * (m.len() - 1) / 2).sum();
        prop_assert_eq!(star.graph().vertex_count(), n + sizes);
        prop_assert_eq!(star.graph().edge_count(), sizes + clique_edges);
        for x in 0..n {
            let hits = members.iter().filter(|m| m.contains(&x)).count();
            prop_assert_eq!(star.graph().degree(star.hub(x)), hits);
        }
    }
}

#[test]
fn star_hub_degrees_equal_replication() {
    for d in [build_sts(13).unwrap(), build_triple_system(10, 2).unwrap(), build_projective_plane(4).unwrap()] {
        let p = d.params().unwrap();
        let star = build_star(&cover_from_design(&d).unwrap());
        for x in 0..d.ground_size() {
            assert_eq!(star.graph().degree(star.hub(x)) as u64, p.r);
        }
        for (i, block) in d.blocks().iter().enumerate() {
            for &x in block {
                assert_eq!(star.graph().degree(star.copy(i, x).unwrap()) as u64, p.k);
            }
        }
    }
}

#[test]
fn theta_cover_gadgets_share_no_pair() {
    let d = build_sts(15).unwrap();
    let star = build_star(&cover_from_design(&d).unwrap());
    assert!(star.cover().is_theta());
    let mut seen = std::collections::BTreeSet::new();
    for (u, v) in star.graph().edges() {
        let (VertexLabel::Copy { member: i, element: x }, VertexLabel::Copy { member: j, element: y }) =
            (star.labeled().label(u), star.labeled().label(v))
        else {
            continue;
        };
        assert_eq!(i, j);
        assert!(seen.insert((*x.min(y), *x.max(y))), "pair {x},{y} in two gadgets");
    }
    assert!(!cover_from_design(&build_complete_triples(5).unwrap()).unwrap().is_theta());
}

#[test]
fn exports_are_deterministic() {
    let d = build_triple_system(9, 3).unwrap();
    let star = build_star(&cover_from_design(&d).unwrap());
    let again = build_star(&cover_from_design(&build_triple_system(9, 3).unwrap()).unwrap());
    assert_eq!(to_dot(star.labeled()), to_dot(again.labeled()));
    assert_eq!(to_edge_list(star.labeled()), to_edge_list(again.labeled()));
    assert!(mu(&d).unwrap() >= 3);
}
