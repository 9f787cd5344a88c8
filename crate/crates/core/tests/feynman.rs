use num_rational::BigRational;
use renormkit::feynman::{gaussian_oracle, graph_expansion, graph_weight, ExpansionOptions, Theory};
use renormkit::graphs::{enumerate_vacuum_graphs, GraphBuilder, VacuumOptions};
use renormkit::rational::ratio;

fn one_color(c3: BigRational, c4: BigRational) -> Theory {
    Theory::one_color(ratio(1, 1), &[(3, c3), (4, c4)]).unwrap()
}

#[test]
fn one_color_agrees_through_third_order() {
    let t = one_color(ratio(2, 3), ratio(-5, 7));
    let graphs = graph_expansion(&t, 3, &ExpansionOptions::default()).unwrap();
    let wick = gaussian_oracle(&t, 3, None).unwrap();
    assert_eq!(graphs, wick);
}

#[test]
fn two_colors_agree_through_second_order() {
    let metric = vec![vec![ratio(3, 2), ratio(1, 3)], vec![ratio(1, 3), ratio(-2, 1)]];
    let t = Theory::new(
        metric,
        vec![
            (vec![0, 0, 0], ratio(1, 2)),
            (vec![0, 0, 1], ratio(-1, 3)),
            (vec![0, 1, 1], ratio(2, 1)),
            (vec![1, 1, 1], ratio(5, 4)),
            (vec![0, 0, 0, 0], ratio(1, 1)),
            (vec![0, 0, 1, 1], ratio(-3, 5)),
            (vec![0, 1, 1, 1], ratio(1, 7)),
        ],
    )
    .unwrap();
    assert_eq!(
        graph_expansion(&t, 2, &ExpansionOptions::default()).unwrap(),
        gaussian_oracle(&t, 2, None).unwrap()
    );
}

#[test]
fn low_valences_agree_with_a_shared_vertex_cap() {
    let t = Theory::one_color(ratio(2, 1), &[(1, ratio(1, 3)), (2, ratio(1, 5)), (3, ratio(1, 1))]).unwrap();
    let opts = ExpansionOptions { vacuum: VacuumOptions { vertex_cap: Some(4), ..VacuumOptions::default() } };
    let graphs = graph_expansion(&t, 2, &opts).unwrap();
    let wick = gaussian_oracle(&t, 2, Some(4)).unwrap();
    assert_eq!(graphs.low(), -2);
    assert_eq!(graphs, wick);
}

#[test]
fn weights_are_invariant_and_multiplicative() {
    let t = Theory::new(
        vec![vec![ratio(1, 1), ratio(1, 2)], vec![ratio(1, 2), ratio(1, 1)]],
        vec![(vec![0, 0, 1], ratio(1, 1)), (vec![1, 1, 1], ratio(2, 1)), (vec![0, 1, 1, 1], ratio(-1, 1))],
    )
    .unwrap();
    let graphs = enumerate_vacuum_graphs(2, &[3, 4].into(), &VacuumOptions::default()).unwrap();
    for g in graphs.iter().filter(|g| g.vertex_count() <= 2) {
        let relabeled = g.canonical_label().unwrap().to_graph();
        assert_eq!(graph_weight(g, &t).unwrap(), graph_weight(&relabeled, &t).unwrap());
        for h in graphs.iter().filter(|h| h.vertex_count() <= 2) {
            let u = g.disjoint_union(h).unwrap();
            assert_eq!(
                graph_weight(&u, &t).unwrap(),
                graph_weight(g, &t).unwrap() * graph_weight(h, &t).unwrap()
            );
        }
    }
    let mut b = GraphBuilder::new();
    let [u, v] = [b.vertex(), b.vertex()];
    b.edge(u, v).edge(u, v).edge(u, u);
    let g = b.build().unwrap();
    let weight = graph_weight(&g, &t).unwrap();
    assert_eq!(graph_weight(&g.canonical_label().unwrap().to_graph(), &t).unwrap(), weight);
}
