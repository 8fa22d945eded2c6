use energy_core::graph6::{self, Graph6Code, Graph6Error, MAX_GRAPH6_VERTICES};
use energy_core::search::{self, SearchSpec};
use energy_core::Graph;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn round_trip(g: &Graph) {
    let code = graph6::encode(g).unwrap();
    assert_eq!(code.as_str().len(), 1 + (g.n() * g.n().saturating_sub(1) / 2).div_ceil(6));
    assert!(code.as_str().bytes().all(|b| (63..=126).contains(&b)));
    assert_eq!(&graph6::decode(code.as_str()).unwrap(), g);
}

#[test]
fn every_labelled_graph_up_to_7_vertices() {
    for n in 0..=7usize {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0..(1u64 << pairs) {
            round_trip(&from_mask(n, mask));
        }
    }
}

#[test]
fn every_8_vertex_class_under_random_relabellings() {
    let mut rng = StdRng::seed_from_u64(8);
    let classes = search::enumerate(&SearchSpec::new(8)).unwrap().graphs;
    assert_eq!(classes.len(), 12346);
    let mut perm: Vec<usize> = (0..8).collect();
    for g in &classes {
        round_trip(g);
        perm.shuffle(&mut rng);
        round_trip(&g.relabel(&perm));
    }
}

#[test]
fn ten_thousand_random_graphs_up_to_62_vertices() {
    let mut rng = StdRng::seed_from_u64(62);
    for _ in 0..10_000 {
        let n = rng.random_range(0..=MAX_GRAPH6_VERTICES);
        let p: f64 = rng.random();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        round_trip(&Graph::from_edges(n, &edges).unwrap());
    }
}

#[test]
fn published_codes() {
    let expected = [
        ("F`~~w", 7, 17),
        ("G`lv~{", 8, 21),
        ("HEutZhj", 9, 21),
        ("I~qkzXZLw", 10, 30),
        ("JJ^em]uj[v_", 11, 36),
        ("K~z\\c\\qRXVa~", 12, 42),
    ];
    for (code, n, m) in expected {
        let g = graph6::decode(code).unwrap();
        assert_eq!((g.n(), g.m()), (n, m), "{code}");
        assert_eq!(graph6::encode(&g).unwrap().as_str(), code);
        assert_eq!(Graph6Code::parse(code).unwrap().to_graph(), g);
    }
}

#[test]
fn strict_decoding() {
    assert!(matches!(graph6::decode(""), Err(Graph6Error::Empty)));
    assert!(matches!(graph6::decode("A"), Err(Graph6Error::Truncated { .. })));
    assert!(matches!(graph6::decode("A_?"), Err(Graph6Error::TrailingData { .. })));
    assert!(matches!(graph6::decode("A@"), Err(Graph6Error::NonZeroPadding { .. })));
    assert!(matches!(graph6::decode(":A_"), Err(Graph6Error::Unsupported(_))));
    assert!(matches!(graph6::decode("A\x7f"), Err(Graph6Error::InvalidByte { .. })));
    assert!(graph6::encode(&Graph::empty(63).unwrap()).is_err());
}

proptest! {
    #[test]
    fn arbitrary_edge_sets_round_trip(n in 0usize..=62, seed in any::<u64>(), density in 0.0f64..1.0) {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(density) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let code = graph6::encode(&g).unwrap();
        prop_assert_eq!(graph6::decode(code.as_str()).unwrap(), g);
    }

    #[test]
    fn arbitrary_strings_never_panic(s in "[ -~]{0,40}") {
        let _ = graph6::decode(&s);
    }
}
