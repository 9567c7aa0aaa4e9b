use proptest::prelude::*;
use rackqm::word::{AbelianWord, GroupWord};
use rackqm::Int;

type Raw = Vec<(String, i64)>;

fn raw_word() -> impl Strategy<Value = Raw> {
    prop::collection::vec((prop::sample::select(vec!["a", "b", "c"]), -3i64..=3), 0..14)
        .prop_map(|v| v.into_iter().map(|(g, e)| (g.to_string(), e)).collect())
}

fn word(raw: &Raw) -> GroupWord {
    GroupWord::reduce(raw.iter().map(|(g, e)| (g.clone(), Int::from(*e))))
}

/// Letter-by-letter stack reduction, independent of the syllable code.
fn letters_reduced(raw: &Raw) -> Vec<(String, i64)> {
    let mut stack: Vec<(String, i64)> = Vec::new();
    for (g, e) in raw {
        for _ in 0..e.unsigned_abs() {
            let s = e.signum();
            if matches!(stack.last(), Some((h, t)) if h == g && *t == -s) {
                stack.pop();
            } else {
                stack.push((g.clone(), s));
            }
        }
    }
    stack
}

fn letters_of(w: &GroupWord) -> Vec<(String, i64)> {
    w.syllables()
        .iter()
        .flat_map(|(g, e)| {
            let e = i64::try_from(e).unwrap();
            std::iter::repeat_n((g.clone(), e.signum()), e.unsigned_abs() as usize)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn reduction_matches_letter_stack(raw in raw_word()) {
        let w = word(&raw);
        prop_assert_eq!(letters_of(&w), letters_reduced(&raw));
        let again = GroupWord::reduce(w.syllables().iter().cloned());
        prop_assert_eq!(&again, &w);
        prop_assert!(w.syllable_len() <= raw.len());
        for pair in w.syllables().windows(2) {
            prop_assert_ne!(&pair[0].0, &pair[1].0);
        }
    }
}

proptest! {
    #[test]
    fn multiplication_is_associative(u in raw_word(), v in raw_word(), w in raw_word()) {
        let (u, v, w) = (word(&u), word(&v), word(&w));
        prop_assert_eq!(u.multiply(&v).multiply(&w), u.multiply(&v.multiply(&w)));
    }

    #[test]
    fn inversion_is_an_involution(u in raw_word()) {
        let u = word(&u);
        prop_assert_eq!(u.invert().invert(), u.clone());
        prop_assert!(u.multiply(&u.invert()).is_identity());
    }

    #[test]
    fn powers_and_conjugates(u in raw_word(), h in raw_word(), n in -6i64..6) {
        let (u, h) = (word(&u), word(&h));
        let iterated = (0..n.unsigned_abs()).fold(GroupWord::identity(), |acc, _| {
            acc.multiply(&if n >= 0 { u.clone() } else { u.invert() })
        });
        prop_assert_eq!(u.pow(n), iterated);
        prop_assert_eq!(u.conjugate_by(&h), h.invert().multiply(&u).multiply(&h));
    }

    #[test]
    fn abelian_words_agree_with_abelianization(u in raw_word(), v in raw_word()) {
        let (gu, gv) = (word(&u), word(&v));
        let (au, av) = (gu.abelianize(), gv.abelianize());
        prop_assert_eq!(au.multiply(&av), av.multiply(&au));
        prop_assert_eq!(au.multiply(&av), gu.multiply(&gv).abelianize());
        let direct = AbelianWord::from_pairs(u.iter().chain(&v).map(|(g, e)| (g.clone(), Int::from(*e))));
        prop_assert_eq!(au.multiply(&av), direct);
        prop_assert!(au.multiply(&au.invert()).is_identity());
    }

    #[test]
    fn rendering_round_trips(u in raw_word()) {
        let w = word(&u);
        prop_assert_eq!(w.to_string().parse::<GroupWord>().unwrap(), w.clone());
        let a = w.abelianize();
        prop_assert_eq!(a.to_string().parse::<AbelianWord>().unwrap(), a);
    }
}

#[test]
fn examples() {
    assert_eq!("a b b^-1".parse::<GroupWord>().unwrap().to_string(), "a");
    assert_eq!("a^2 a^-2".parse::<GroupWord>().unwrap(), GroupWord::identity());
    let big: GroupWord = "x^123456789012345678901234567890 x".parse().unwrap();
    assert_eq!(big.to_string(), "x^123456789012345678901234567891");
}
