use std::collections::BTreeSet;

use shuffle_squares::cyclic::{anti_square_scan, is_anti_square, ScanConfig};
use shuffle_squares::words::orbit_representative;
use shuffle_squares::{SymmetrySpec, Word};

fn listed(length: usize) -> Vec<Word> {
    include_str!("data/anti_squares.txt")
        .lines()
        .filter_map(|line| line.split_once(' '))
        .filter(|(len, _)| len.parse::<usize>() == Ok(length))
        .map(|(_, w)| w.parse().unwrap())
        .collect()
}

fn orbits(words: &[Word]) -> BTreeSet<Word> {
    words
        .iter()
        .map(|w| orbit_representative(w, SymmetrySpec::ALL).representative)
        .collect()
}

#[test]
fn listed_words_are_anti_squares() {
    for length in [24, 26, 28] {
        for w in listed(length) {
            assert!(is_anti_square(&w), "{w}");
        }
    }
}

#[test]
fn scan_matches_listed_orbits() {
    let config = ScanConfig {
        workers: 2,
        ..ScanConfig::default()
    };
    for (length, classes) in [(24, 1), (26, 26), (28, 103)] {
        let report = anti_square_scan(length, &config).unwrap();
        assert_eq!(report.s_min, 0);
        assert_eq!(report.class_count, classes);
        let listed_orbits = orbits(&listed(length));
        assert_eq!(listed_orbits.len(), classes, "listed words at {length} share an orbit");
        assert_eq!(orbits(&report.representatives), listed_orbits, "length {length}");
    }
}

#[test]
fn shortest_anti_square_representative() {
    let report = anti_square_scan(24, &ScanConfig::default()).unwrap();
    let expected = orbit_representative(&"000001001111000011101111".parse().unwrap(), SymmetrySpec::ALL);
    assert_eq!(report.representatives, vec![expected.representative]);
}
