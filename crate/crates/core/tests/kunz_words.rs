use kunz_core::census::{enumerate_genus, OracleConfig};
use kunz_core::kunz::{is_kunz, is_q_kunz, is_stressed, prefix_decompose, Letter};
use kunz_core::{GapSet, KunzWord};
use proptest::prelude::*;

fn all_words(max_genus: u32) -> Vec<KunzWord> {
    let cfg = OracleConfig::default();
    (0..=max_genus)
        .flat_map(|g| enumerate_genus(g, &cfg).unwrap())
        .collect()
}

#[test]
fn round_trip_through_gaps() {
    for word in all_words(12) {
        let gaps = word.to_gaps();
        assert_eq!(gaps.to_word().unwrap(), word);
        let rebuilt = GapSet::new(gaps.gaps().iter().copied()).unwrap();
        assert_eq!(rebuilt, gaps);
    }
}

#[test]
fn properties_agree_with_gaps() {
    for word in all_words(12) {
        let p = word.properties();
        let gaps = word.to_gaps();
        assert_eq!(p.genus as usize, gaps.genus());
        assert_eq!(p.frobenius, gaps.frobenius());
        assert_eq!(p.multiplicity, gaps.multiplicity());
        if p.conductor > 0 {
            assert_eq!(u64::from(p.depth), p.conductor.div_ceil(u64::from(p.multiplicity)));
            assert!(p.frobenius < i64::from(p.depth * p.multiplicity));
            assert!(p.frobenius >= i64::from((p.depth - 1) * p.multiplicity));
        } else {
            assert_eq!(p.depth, 0);
        }
    }
}

/// Every 3-Kunz word of genus at most `max_genus`, built by appending letters
/// and filtering with the predicate.
fn three_kunz_words(max_genus: u32) -> Vec<Vec<Letter>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![(vec![], 0u32)];
    while let Some((word, genus)) = frontier.pop() {
        for letter in 1..=3u8 {
            if genus + u32::from(letter) > max_genus {
                continue;
            }
            let mut next: Vec<Letter> = word.clone();
            next.push(letter);
            if is_q_kunz(&next, 3).unwrap() {
                out.push(next.clone());
                frontier.push((next, genus + u32::from(letter)));
            }
        }
    }
    out
}

#[test]
fn concatenation_bijection() {
    let all = three_kunz_words(10);
    let stressed: Vec<_> = all.iter().filter(|w| is_stressed(w)).collect();
    let two_kunz: Vec<_> = all
        .iter()
        .filter(|w| w.iter().all(|&l| l <= 2) && w.iter().map(|&l| u32::from(l)).sum::<u32>() <= 6)
        .collect();
    assert!(!stressed.is_empty() && !two_kunz.is_empty());
    for u in &stressed {
        for v in &two_kunz {
            let mut joined = (*u).clone();
            joined.extend_from_slice(v);
            let word = KunzWord::new(joined).unwrap();
            assert_eq!(word.depth(), 3);
            let (prefix, suffix) = prefix_decompose(&word).unwrap();
            assert_eq!(prefix.letters(), u.as_slice());
            assert_eq!(suffix.letters(), v.as_slice());
        }
    }
}

#[test]
fn every_depth_three_word_splits() {
    for word in all_words(12).into_iter().filter(|w| w.depth() <= 3) {
        let (prefix, suffix) = prefix_decompose(&word).unwrap();
        if word.depth() == 3 {
            assert!(is_stressed(prefix.letters()), "{word}");
        } else {
            assert!(prefix.is_empty());
        }
        assert!(is_q_kunz(suffix.letters(), 2).unwrap());
        assert_eq!(prefix.concat(&suffix).unwrap(), word);
    }
}

#[test]
fn appending_and_deleting_preserve_three_kunz() {
    for word in three_kunz_words(11) {
        for letter in [1, 2] {
            let mut longer = word.clone();
            longer.push(letter);
            assert!(is_q_kunz(&longer, 3).unwrap(), "{word:?}{letter}");
        }
        if let Some((_, shorter)) = word.split_last() {
            assert!(is_q_kunz(shorter, 3).unwrap());
        }
    }
}

proptest! {
    #[test]
    fn words_over_one_two_are_two_kunz(word in prop::collection::vec(1u8..=2, 0..40)) {
        prop_assert!(is_q_kunz(&word, 2).unwrap());
    }

    #[test]
    fn kunz_predicate_matches_gap_closure(word in prop::collection::vec(1u8..=4, 0..8)) {
        // A word is Kunz exactly when the gap set it describes has an
        // additively closed complement.
        let m = word.len() as u32 + 1;
        let gaps = word.iter().enumerate().flat_map(|(i, &w)| {
            (0..u32::from(w)).map(move |k| k * m + i as u32 + 1)
        });
        prop_assert_eq!(is_kunz(&word).unwrap(), GapSet::new(gaps).is_ok());
    }

    #[test]
    fn gap_round_trip_for_valid_words(word in prop::collection::vec(1u8..=5, 0..10)) {
        if let Ok(word) = KunzWord::new(word) {
            prop_assert_eq!(word.to_gaps().to_word().unwrap(), word);
        }
    }
}
