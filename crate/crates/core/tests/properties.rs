use proptest::prelude::*;
use zappatic::gen;
use zappatic::homology::{betti, ChainComplex};
use zappatic::invariants::{chi_o, degree, sectional_genus};
use zappatic::ZappaticGraph;

fn graph(seed: u64) -> ZappaticGraph {
    gen::zappatic_graph(&mut gen::seeded(seed), 12, 6)
}

/// Reverses the id order, which flips every orientation.
fn reversed(g: &ZappaticGraph) -> ZappaticGraph {
    let top = g.max_vertex_id() + 1;
    g.relabel(|v| top - v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn euler_identity(seed in any::<u64>()) {
        let g = graph(seed);
        let c = g.counts();
        prop_assert!(ChainComplex::new(&g).composes_to_zero());
        prop_assert_eq!(betti(&g).euler(), c.v as i64 - c.e as i64 + c.f as i64);
        prop_assert_eq!(g.chi_graph(), g.one_skeleton().euler() + c.f as i64);
    }

    #[test]
    fn section_genus_matches_curve(seed in any::<u64>()) {
        let g = graph(seed);
        let h = g.hyperplane_section();
        prop_assert_eq!(sectional_genus(&g), h.arithmetic_genus().unwrap());
        prop_assert_eq!(degree(&g), h.degree().unwrap());
        prop_assert_eq!(h.counts().0, g.vertices().len());
        let c: u32 = g.edges().iter().map(|e| e.curve_degree).sum();
        prop_assert_eq!(h.counts().1, c as usize);
        if g.is_planar() {
            prop_assert_eq!(h, g.one_skeleton());
        }
    }

    #[test]
    fn invariants_ignore_labels(seed in any::<u64>(), shift in 1u32..50) {
        let g = graph(seed);
        for h in [reversed(&g), g.relabel(|v| v + shift).unwrap()] {
            prop_assert_eq!(betti(&h), betti(&g));
            prop_assert_eq!(sectional_genus(&h), sectional_genus(&g));
            prop_assert_eq!(chi_o(&h), chi_o(&g));
            prop_assert_eq!(h.counts(), g.counts());
        }
    }

    #[test]
    fn canonicalization_is_idempotent(seed in any::<u64>()) {
        let g = graph(seed);
        prop_assert_eq!(g.raw().clone().canonicalized(), g.raw().clone());
        prop_assert_eq!(ZappaticGraph::new(g.raw().clone()).unwrap(), g.clone());
        for f in g.closed_faces() {
            prop_assert_eq!(f.clone().canonical(), f.clone());
        }
    }

    #[test]
    fn curve_invariants(seed in any::<u64>()) {
        let c = gen::curve_graph(&mut gen::seeded(seed), 10);
        let (v, e) = c.counts();
        let genera: u64 = c.vertices().iter().map(|x| x.genus as u64).sum();
        let h1 = c.h1().unwrap();
        prop_assert_eq!(h1 as i64, e as i64 - v as i64 + 1);
        prop_assert_eq!(c.arithmetic_genus().unwrap(), h1 + genera);
        prop_assert_eq!(c.chi_o(), 1 - c.arithmetic_genus().unwrap() as i64);
    }
}
