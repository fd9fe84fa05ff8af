use std::collections::BTreeSet;

use mzeta_core::arith::{factorize, prime_factors_bounded};
use mzeta_core::ladder::{
    descriptor_from_spec, diff_table, eliminate, eliminate_until, nagura_check,
    powers_with_largest_prime, published_table, simple_catalog, DataSource, Family,
    SimpleGroupDescriptor, TABLE_ERRATUM,
};
use num_traits::Zero;

fn row(report: &mzeta_core::ladder::LadderReport, q: u64) -> BTreeSet<&str> {
    report
        .rows
        .iter()
        .find(|r| r.prime == q)
        .map(|r| r.groups.iter().map(String::as_str).collect())
        .unwrap_or_default()
}

#[test]
fn catalog_covers_all_families() {
    let cat = simple_catalog();
    let count = |f: Family| cat.iter().filter(|d| d.family == f).count();
    let primes = (5u64..=71)
        .filter(|&p| factorize(p).len() == 1 && factorize(p)[0].1 == 1)
        .count();
    assert_eq!(count(Family::Psl2), primes);
    assert_eq!(count(Family::AltPrime), primes);
    assert_eq!(count(Family::Alt2Power), 4);
    assert_eq!(count(Family::Sporadic), 26);
    let names: BTreeSet<&str> = cat.iter().map(|d| d.name.as_str()).collect();
    assert_eq!(names.len(), cat.len());
}

#[test]
fn formula_entries_match_constructors() {
    for d in simple_catalog()
        .iter()
        .filter(|d| d.source == DataSource::Formula)
    {
        let built = match d.family {
            Family::Psl2 => SimpleGroupDescriptor::psl2(d.params[0]),
            Family::AltPrime => SimpleGroupDescriptor::alternating(d.params[0]),
            Family::Alt2Power => SimpleGroupDescriptor::alternating(1 << d.params[0]),
            _ => panic!("{} has no formula", d.name),
        };
        assert_eq!(&built, d);
    }
}

#[test]
fn descriptor_invariants() {
    for d in simple_catalog() {
        assert_eq!(
            d.elimination_prime(),
            d.signature_primes.iter().max().copied(),
            "{}",
            d.name
        );
        for &p in &d.signature_primes {
            assert!(
                (&d.order % p).is_zero(),
                "{}: {p} does not divide the order",
                d.name
            );
        }
        for m in &d.useful_odd_indices {
            assert!(m.bit(0), "{}", d.name);
            assert!(
                (&d.order % m).is_zero(),
                "{}: index {m} does not divide the order",
                d.name
            );
            let primes: BTreeSet<u64> = prime_factors_bounded(m, 1 << 16)
                .unwrap()
                .into_iter()
                .collect();
            assert_eq!(primes, d.signature_primes, "{}", d.name);
        }
        match d.family {
            Family::AltPrime => assert_eq!(d.signature_primes, BTreeSet::from([d.params[0]])),
            Family::Psl2 => assert_eq!(d.elimination_prime(), Some(d.params[0])),
            _ => {}
        }
    }
    let sig = |s: &str| descriptor_from_spec(s).unwrap().signature_primes;
    assert_eq!(sig("alt:71"), BTreeSet::from([71]));
    assert_eq!(sig("alt2t:4"), BTreeSet::from([3, 5, 11, 13]));
    assert_eq!(sig("alt2t:3"), BTreeSet::from([3, 5]));
    assert_eq!(
        descriptor_from_spec("psl2:59").unwrap().elimination_prime(),
        Some(59)
    );
    assert_eq!(sig("Th"), BTreeSet::from([19]));
}

#[test]
fn full_ladder_reproduces_the_table() {
    let report = eliminate(simple_catalog());
    assert!(diff_table(&report, &published_table(true)).is_empty());
    assert_eq!(
        diff_table(&report, &published_table(false)),
        [format!(
            "row {}: computed adds [{}], lacks []",
            TABLE_ERRATUM.0, TABLE_ERRATUM.1
        )]
    );
    assert_eq!(report.rows.len(), 18);
    assert!(report.rows.windows(2).all(|w| w[0].prime > w[1].prime));
    assert_eq!(
        row(&report, 71),
        BTreeSet::from(["PSL(2,71)", "M", "Alt(71)"])
    );
    assert!(row(&report, 61).contains("Alt(2^6)"));
    assert!(row(&report, 31).is_superset(&BTreeSet::from(["Alt(2^5)", "O'N"])));
    assert!(row(&report, 13).contains("Alt(2^4)"));
    assert_eq!(
        row(&report, 5),
        BTreeSet::from(["PSL(2,5)", "Alt(5)", "Alt(2^3)"])
    );
    // Th sits by its signature prime, not by 31 | |Th|.
    assert!(row(&report, 19).contains("Th"));
    let th = simple_catalog().iter().find(|d| d.name == "Th").unwrap();
    assert!((&th.order % 31u32).is_zero());
}

#[test]
fn every_group_is_removed_exactly_once() {
    let cat = simple_catalog();
    let full = eliminate(cat);
    let placed: Vec<&String> = full.rows.iter().flat_map(|r| &r.groups).collect();
    assert_eq!(placed.len(), cat.len());
    assert!(full.leftovers.is_empty());
    for d in cat {
        assert!(row(&full, d.elimination_prime().unwrap()).contains(d.name.as_str()));
    }
    for stop in [5u64, 13, 29, 60, 72] {
        let head = eliminate_until(cat, stop);
        let rest: Vec<SimpleGroupDescriptor> = cat
            .iter()
            .filter(|d| head.leftovers.contains(&d.name))
            .cloned()
            .collect();
        let tail = eliminate(&rest);
        let mut rows = head.rows.clone();
        rows.extend(tail.rows);
        assert_eq!(rows, full.rows, "stop at {stop}");
    }
}

#[test]
fn small_catalogs() {
    let a5 = eliminate(&[SimpleGroupDescriptor::alternating(5)]);
    assert_eq!(a5.rows.len(), 1);
    assert_eq!(a5.rows[0].prime, 5);
    let pair = eliminate(&[
        SimpleGroupDescriptor::alternating(8),
        SimpleGroupDescriptor::psl2(5),
    ]);
    assert_eq!(pair.rows.len(), 1);
    assert_eq!(row(&pair, 5), BTreeSet::from(["Alt(2^3)", "PSL(2,5)"]));
}

#[test]
fn nagura_and_two_power_primes() {
    assert!(nagura_check(25, 1_000_000).is_empty());
    assert_eq!(nagura_check(1, 24), [1, 4, 8, 9, 14, 24]);
    assert!(!nagura_check(2, 2).contains(&2));
    assert_eq!(powers_with_largest_prime(13, 1 << 20), [4]);
    assert_eq!(powers_with_largest_prime(7, 1 << 20), [3]);
    assert!(powers_with_largest_prime(11, 1 << 20).is_empty());
}
