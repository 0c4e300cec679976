use proptest::prelude::*;
use stringchar::formula::{frieze_entry, walk_count, walk_laurent, FriezeWord, Placement};
use stringchar::quiver::{enumerate_strings, families, BoundIceQuiver};
use stringchar::VertexId;

fn fixtures() -> Vec<BoundIceQuiver> {
    vec![
        families::five_vertex(),
        families::ice_a2(),
        families::cyclic(4),
        families::kronecker(3),
        families::double_arrow(),
        families::affine_a(4),
        families::oriented_a(&[true, false, false, true]),
    ]
}

#[test]
fn inverse_walk_has_the_same_polynomial() {
    for q in fixtures() {
        for c in enumerate_strings(&q, 6) {
            assert_eq!(
                walk_laurent(&q, &c).unwrap(),
                walk_laurent(&q, &c.inverse()).unwrap(),
                "{c}"
            );
        }
    }
}

#[test]
fn count_is_the_value_at_ones() {
    for q in fixtures() {
        for c in enumerate_strings(&q, 6) {
            assert_eq!(
                walk_laurent(&q, &c).unwrap().eval_at_ones(),
                walk_count(&c),
                "{c}"
            );
        }
    }
}

#[test]
fn walks_with_loops_and_two_cycles_are_accepted() {
    let q = BoundIceQuiver::builder()
        .vertices(["1", "2"])
        .arrow("a", "1", "2")
        .arrow("b", "2", "1")
        .arrow("l", "1", "1")
        .build()
        .unwrap();
    let l = walk_laurent(&q, &"a b l".parse().unwrap()).unwrap();
    assert!(l.is_nonnegative());
}

proptest! {
    #[test]
    fn frieze_matches_the_matrix_formula(below in prop::collection::vec(any::<bool>(), 0..8)) {
        let letters: Vec<VertexId> = (1..=below.len() + 3).map(|i| VertexId::from(i.to_string())).collect();
        let placements = below.iter().map(|&b| if b { Placement::Below } else { Placement::Left }).collect();
        let w = FriezeWord { letters, placements };
        let (q, c) = w.type_a_string().unwrap();
        prop_assert_eq!(frieze_entry(&w).unwrap(), walk_laurent(&q, &c).unwrap());
    }
}
