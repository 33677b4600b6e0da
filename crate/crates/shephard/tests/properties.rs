use proptest::prelude::*;
use shephard::dihedral::{brute_force_equal, classify, DihedralSession, Gen, SyllableWord};
use shephard::triangle::DEFAULT_BUDGET;

const TRIPLES: [(u32, u32, u32); 6] = [
    (3, 6, 3),
    (4, 4, 4),
    (2, 12, 3),
    (4, 6, 4),
    (3, 5, 3),
    (3, 3, 3),
];

fn word() -> impl Strategy<Value = SyllableWord> {
    prop::collection::vec((any::<bool>(), -3i64..=3), 0..10).prop_map(|v| {
        SyllableWord::from_syllables(
            v.into_iter()
                .filter(|&(_, e)| e != 0)
                .map(|(s, e)| (if s { Gen::S } else { Gen::T }, e)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_cancels(i in 0..TRIPLES.len(), w in word()) {
        let (p, q, r) = TRIPLES[i];
        let mut s = DihedralSession::new(p, q, r, DEFAULT_BUDGET).unwrap();
        prop_assert!(s.is_trivial(&w.concat(&w.inverse())).unwrap());
    }

    #[test]
    fn normal_form_is_a_class_invariant(i in 0..TRIPLES.len(), u in word(), v in word()) {
        let (p, q, r) = TRIPLES[i];
        let mut s = DihedralSession::new(p, q, r, DEFAULT_BUDGET).unwrap();
        // conjugating by v and inserting a relator leave the element's class fixed
        let braid = SyllableWord::braid_relator(q);
        let w = u.concat(&v).concat(&braid).concat(&v.inverse());
        prop_assert!(s.are_equal(&u, &w).unwrap());
        if !s.classification().regime.is_infinite() {
            return Ok(());
        }
        let a = s.normalize(&u).unwrap();
        let b = s.normalize(&w).unwrap();
        prop_assert_eq!(s.normal_form_json(&a), s.normal_form_json(&b));
    }

    #[test]
    fn oracles_agree(i in 0..TRIPLES.len(), u in word(), v in word()) {
        let (p, q, r) = TRIPLES[i];
        let mut s = DihedralSession::new(p, q, r, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(
            s.are_equal(&u, &v).unwrap(),
            brute_force_equal(p, q, r, &u, &v, DEFAULT_BUDGET).unwrap()
        );
    }

    #[test]
    fn centre_commutes(i in 0..TRIPLES.len(), u in word()) {
        let (p, q, r) = TRIPLES[i];
        let c = classify(p, q, r).unwrap();
        let Some(z) = c.center_word else { return Ok(()) };
        let mut s = DihedralSession::new(p, q, r, DEFAULT_BUDGET).unwrap();
        prop_assert!(s.are_equal(&z.concat(&u), &u.concat(&z)).unwrap());
    }
}
