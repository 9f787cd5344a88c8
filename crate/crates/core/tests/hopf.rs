use renormkit::graphs::{Dir, GraphBuilder};
use renormkit::hopf::{verify_axioms, HopfContext, HopfElement, Monomial};

#[test]
fn axioms_on_three_vertices_six_flags() {
    let r = verify_axioms(3, 6).unwrap();
    assert!(r.all_passed(), "{r:#?}");
    println!("{} basis graphs, {} generators", r.monomials, r.generators);
}

#[test]
fn antipode_of_a_wheel_with_a_tail() {
    // A 2-cycle cannot be cut, so with an extra outgoing arrow only the
    // wheel-above-leaf cut is proper.
    let mut b = GraphBuilder::new();
    let [u, v, w] = [b.vertex(), b.vertex(), b.vertex()];
    b.arrow(u, v).arrow(v, u).arrow(v, w).oriented_tail(w, Dir::Out);
    let g = b.build().unwrap();
    let mut ctx = HopfContext::new();
    let m = Monomial::from_graph(&g).unwrap();
    let reduced = ctx.reduced_coproduct(&m).unwrap();
    assert_eq!(reduced.len(), 1);
    let x = HopfElement::monomial(m);
    let (l, r) = ctx.antipode_convolutions(&x).unwrap();
    assert!(l.is_zero() && r.is_zero());
}
