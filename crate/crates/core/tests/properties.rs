use proptest::prelude::*;

use indicator_burnside::criteria::{sat_b2, Criterion, Indicator};
use indicator_burnside::occgraph::{build_graph, same_components, Vertex};
use indicator_burnside::parser::{parse_identity, render, Identity};
use indicator_burnside::semigroups::{catalog, dual, satisfies_bruteforce};
use indicator_burnside::words::{analyze, has_power_factor, is_pq_trivial, Letter, Word};

fn word(letters: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..letters, 1..=max_len)
        .prop_map(|v| Word::new(v.into_iter().map(Letter).collect()).unwrap())
}

fn identity(letters: u32, max_len: usize) -> impl Strategy<Value = Identity> {
    (word(letters, max_len), word(letters, max_len)).prop_map(|(u, v)| Identity::new(u, v))
}

proptest! {
    #[test]
    fn reverse_is_an_involution(u in word(4, 12)) {
        prop_assert_eq!(u.reverse().reverse(), u);
    }

    #[test]
    fn profile_is_consistent(u in word(4, 12)) {
        let p = analyze(&u);
        prop_assert_eq!(p.occurrences.values().sum::<usize>(), u.len());
        prop_assert_eq!(p.left_core.len(), p.content.len());
        prop_assert_eq!(p.right_core.len(), p.content.len());
        prop_assert_eq!(p.head, u.letters()[0]);
        prop_assert_eq!(p.tail, *u.letters().last().unwrap());
        let r = analyze(&u.reverse());
        prop_assert_eq!(r.left_core, p.right_core.reverse());
        for x in &p.simple_letters {
            prop_assert_eq!(p.occ(*x), 1);
        }
    }

    #[test]
    fn pq_trivial_words_are_short_and_power_free(u in word(3, 8), p in 2usize..10, q in 2usize..4) {
        let t = is_pq_trivial(&u, p, q).unwrap();
        prop_assert_eq!(t, u.len() < p && !has_power_factor(&u, q).unwrap());
        if has_power_factor(&u, q + 1).unwrap() {
            prop_assert!(has_power_factor(&u, q).unwrap());
        }
    }

    #[test]
    fn render_then_parse(id in identity(5, 14)) {
        let text = render(&id);
        prop_assert_eq!(parse_identity(&text).unwrap(), id);
    }

    #[test]
    fn plain_text_parses(u in word(26, 10)) {
        prop_assert_eq!(u.plain().parse::<Word>().unwrap(), u);
    }

    #[test]
    fn graph_edges_are_adjacent_pairs(u in word(4, 12)) {
        let g = build_graph(&u);
        prop_assert_eq!(g.vertex_count(), 2 * u.content().len());
        for w in u.letters().windows(2) {
            prop_assert!(g.edges().contains(&(Vertex::new(w[0], 0), Vertex::new(w[1], 1))));
        }
        prop_assert!(g.edges().len() < u.len());
        let total: usize = g.components().iter().map(Vec::len).sum();
        prop_assert_eq!(total, g.vertex_count());
    }

    #[test]
    fn same_components_is_an_equivalence(u in word(3, 8), v in word(3, 8)) {
        prop_assert!(same_components(&u, &u));
        prop_assert_eq!(same_components(&u, &v), same_components(&v, &u));
        if same_components(&u, &v) {
            prop_assert_eq!(u.content(), v.content());
        }
    }

    #[test]
    fn b2_is_self_dual(id in identity(3, 7)) {
        prop_assert_eq!(sat_b2(&id), sat_b2(&id.reverse()));
    }

    #[test]
    fn dual_criteria_mirror(id in identity(3, 7)) {
        let pairs = [
            (Indicator::CLambda, Indicator::CRho),
            (Indicator::FLambda, Indicator::FRho),
            (Indicator::WLambda, Indicator::WRho),
            (Indicator::L21, Indicator::R21),
        ];
        for (left, right) in pairs {
            prop_assert_eq!(left.holds(&id), right.holds(&id.reverse()), "{} / {}", left, right);
        }
        for s in [Indicator::A, Indicator::B, Indicator::N3, Indicator::D, Indicator::K(2)] {
            prop_assert_eq!(s.holds(&id), s.holds(&id.reverse()), "{}", s);
        }
    }

    #[test]
    fn dual_tables_satisfy_reversed_identities(id in identity(2, 6)) {
        for name in ["C_lambda", "F_lambda", "W_lambda", "L2_1"] {
            let s = catalog(name, None).unwrap();
            prop_assert_eq!(satisfies_bruteforce(&dual(&s), &id), satisfies_bruteforce(&s, &id.reverse()));
        }
    }

    #[test]
    fn criteria_are_invariant_under_renaming(id in identity(3, 7), shift in 1u32..20) {
        let renamed = id.map_letters(|x| Letter(x.0 + shift));
        for c in Criterion::oracle_suite(3) {
            prop_assert_eq!(c.holds(&id), c.holds(&renamed), "{}", c);
        }
    }

    #[test]
    fn criteria_are_symmetric(id in identity(3, 7)) {
        for c in Criterion::oracle_suite(3) {
            prop_assert_eq!(c.holds(&id), c.holds(&id.flip()), "{}", c);
        }
    }
}
