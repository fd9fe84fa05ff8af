mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{closure, group, subgroups_by_generation};
use mzeta_core::fixtures::{Q8, SL2_5};
use mzeta_core::{Permutation, SubgroupLattice};

type PermSet = BTreeSet<Permutation>;

fn lattice_sets(l: &SubgroupLattice) -> BTreeSet<PermSet> {
    l.subgroups()
        .iter()
        .map(|s| {
            s.elements()
                .into_iter()
                .map(|e| l.table().permutation(e))
                .collect()
        })
        .collect()
}

/// Möbius function of the poset of subgroups, by the defining recursion
/// from the top on plain element sets.
fn brute_moebius(subs: &BTreeSet<PermSet>) -> BTreeMap<PermSet, i64> {
    let mut by_size: Vec<&PermSet> = subs.iter().collect();
    by_size.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut mu: BTreeMap<PermSet, i64> = BTreeMap::new();
    for (i, h) in by_size.iter().enumerate() {
        let value = if i == 0 {
            1
        } else {
            -by_size[..i]
                .iter()
                .filter(|k| h.is_subset(k))
                .map(|k| mu[*k])
                .sum::<i64>()
        };
        mu.insert((*h).clone(), value);
    }
    mu
}

fn maximal(subs: &BTreeSet<PermSet>, order: usize) -> Vec<&PermSet> {
    subs.iter()
        .filter(|h| h.len() < order)
        .filter(|h| {
            !subs
                .iter()
                .any(|k| k.len() < order && k.len() > h.len() && h.is_subset(k))
        })
        .collect()
}

#[test]
fn lattice_matches_brute_force_enumeration() {
    // Every subgroup of these groups is generated by two elements.
    for (spec, count) in [
        ("alt:4", 10),
        ("sym:4", 30),
        ("alt:5", 59),
        ("dihedral:4", 10),
        (Q8, 6),
        ("cyclic:12", 6),
    ] {
        let g = group(spec);
        let brute = subgroups_by_generation(&g, 2);
        let l = SubgroupLattice::new(&g).unwrap();
        assert_eq!(brute.len(), count, "{spec}");
        assert_eq!(lattice_sets(&l), brute, "{spec}");
    }
}

#[test]
fn moebius_matches_brute_recursion() {
    for spec in ["alt:4", "sym:4", "alt:5", "dihedral:6", Q8] {
        let g = group(spec);
        let brute = brute_moebius(&subgroups_by_generation(&g, 2));
        let l = SubgroupLattice::new(&g).unwrap();
        let mu = l.moebius();
        for s in l.subgroups() {
            let set: PermSet = s
                .elements()
                .into_iter()
                .map(|e| l.table().permutation(e))
                .collect();
            assert_eq!(
                mu.get(s.id),
                brute[&set],
                "{spec}, subgroup of order {}",
                s.order
            );
        }
    }
}

#[test]
fn moebius_sums_vanish_below_the_top() {
    for spec in ["sym:4", "alt:5", "sym:5", "psl2:7", SL2_5] {
        let l = SubgroupLattice::new(&group(spec)).unwrap();
        let mu = l.moebius();
        assert_eq!(mu.get(l.top()), 1);
        for h in 0..l.top() {
            let sum: i64 = (0..l.len())
                .filter(|&k| l.leq(h, k))
                .map(|k| mu.get(k))
                .sum();
            assert_eq!(sum, 0, "{spec}: interval above subgroup {h}");
        }
        // Nonzero values only on intersections of maximal subgroups.
        let maxes = l.maximal_ids();
        for h in mu.support() {
            let mut meet = l.top();
            for &m in maxes {
                if l.leq(h, m) {
                    meet = l.meet(meet, m);
                }
            }
            assert_eq!(meet, h, "{spec}: support element {h}");
        }
    }
}

#[test]
fn frattini_is_the_intersection_of_maximal_subgroups() {
    for spec in [
        "cyclic:4",
        Q8,
        "dihedral:4",
        "sym:4",
        "alt:4",
        "cyclic:6",
        "sym:3",
        "dihedral:6",
        "cyclic:8",
    ] {
        let g = group(spec);
        let subs = subgroups_by_generation(&g, 2);
        let order = closure(g.degree(), g.generators()).len();
        let mut maxes = maximal(&subs, order).into_iter();
        let first = maxes.next().unwrap().clone();
        let brute: PermSet = maxes.fold(first, |acc, m| acc.intersection(m).cloned().collect());
        let l = SubgroupLattice::new(&g).unwrap();
        let phi = l.subgroup(l.frattini());
        let got: PermSet = phi
            .elements()
            .into_iter()
            .map(|e| l.table().permutation(e))
            .collect();
        assert_eq!(got, brute, "{spec}");
    }
}

#[test]
fn frattini_elements_are_non_generators() {
    // x is a non-generator iff dropping it from any generating pair
    // extended by x never loses generation.
    for spec in [Q8, "cyclic:8", "dihedral:4"] {
        let g = group(spec);
        let elems: Vec<Permutation> = closure(g.degree(), g.generators()).into_iter().collect();
        let n = elems.len();
        let l = SubgroupLattice::new(&g).unwrap();
        let phi = l.subgroup(l.frattini());
        for x in &elems {
            let nongen = elems.iter().all(|a| {
                elems.iter().all(|b| {
                    let with = closure(g.degree(), &[a.clone(), b.clone(), x.clone()]).len();
                    with < n || closure(g.degree(), &[a.clone(), b.clone()]).len() == n
                })
            });
            let id = l.table().index_of(x).unwrap();
            assert_eq!(nongen, phi.contains(id), "{spec}");
        }
    }
}

#[test]
fn socle_is_the_product_of_minimal_normal_subgroups() {
    for (spec, order) in [
        ("sym:4", 4),
        ("alt:5", 60),
        ("cyclic:6", 6),
        ("dihedral:6", 6),
        (SL2_5, 2),
    ] {
        let l = SubgroupLattice::new(&group(spec)).unwrap();
        let mins = l.minimal_normal_ids();
        let join = mins.iter().fold(l.bottom(), |acc, &m| l.join(acc, m));
        assert_eq!(l.socle(), join, "{spec}");
        assert_eq!(l.subgroup(l.socle()).order, order, "{spec}");
    }
}

#[test]
fn chief_series_are_valid_and_seed_independent_up_to_factors() {
    for spec in [
        "sym:4",
        "cyclic:6",
        "cyclic:30",
        "dihedral:6",
        SL2_5,
        "sym:5",
        Q8,
    ] {
        let l = SubgroupLattice::new(&group(spec)).unwrap();
        let normals: Vec<usize> = l.normal_ids();
        let mut multisets = BTreeSet::new();
        for seed in 0..6 {
            let steps = l.chief_series(seed).unwrap();
            assert_eq!(steps.first().unwrap().upper, l.top());
            assert_eq!(steps.last().unwrap().lower, l.bottom());
            let mut product = 1u64;
            for s in &steps {
                assert!(l.is_normal(s.upper) && l.is_normal(s.lower));
                assert!(l.leq(s.lower, s.upper) && s.lower != s.upper);
                // Nothing normal strictly between.
                assert!(!normals.iter().any(|&n| {
                    n != s.lower && n != s.upper && l.leq(s.lower, n) && l.leq(n, s.upper)
                }));
                let q = (l.subgroup(s.upper).order / l.subgroup(s.lower).order) as u64;
                assert_eq!(s.factor.order(), q);
                product *= q;
            }
            assert_eq!(product, l.order() as u64);
            let mut names: Vec<String> = steps.iter().map(|s| s.factor.to_string()).collect();
            names.sort();
            multisets.insert(names);
        }
        assert_eq!(multisets.len(), 1, "{spec}: {multisets:?}");
    }
}
