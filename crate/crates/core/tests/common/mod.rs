//! Brute-force oracles that work on raw permutations only.

#![allow(dead_code)]

use std::collections::BTreeSet;

use mzeta_core::{catalog_group, PermGroup, Permutation};

pub fn group(spec: &str) -> PermGroup {
    catalog_group(spec).unwrap()
}

/// Closure of `gens` under composition, by breadth-first search.
pub fn closure(degree: usize, gens: &[Permutation]) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::from([Permutation::identity(degree)]);
    let mut frontier = vec![Permutation::identity(degree)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

/// Every subgroup generated by at most `k` elements.
pub fn subgroups_by_generation(g: &PermGroup, k: usize) -> BTreeSet<BTreeSet<Permutation>> {
    let elems: Vec<Permutation> = closure(g.degree(), g.generators()).into_iter().collect();
    let mut found = BTreeSet::new();
    let mut tuple = Vec::new();
    fn rec(
        elems: &[Permutation],
        degree: usize,
        k: usize,
        start: usize,
        tuple: &mut Vec<Permutation>,
        found: &mut BTreeSet<BTreeSet<Permutation>>,
    ) {
        found.insert(closure(degree, tuple));
        if tuple.len() == k {
            return;
        }
        for i in start..elems.len() {
            tuple.push(elems[i].clone());
            rec(elems, degree, k, i, tuple, found);
            tuple.pop();
        }
    }
    rec(&elems, g.degree(), k, 0, &mut tuple, &mut found);
    found
}

/// Number of `t`-tuples of elements that generate the whole group.
pub fn generating_tuples(g: &PermGroup, t: u32) -> u64 {
    let elems: Vec<Permutation> = closure(g.degree(), g.generators()).into_iter().collect();
    let n = elems.len();
    let mut count = 0;
    let mut idx = vec![0usize; t as usize];
    loop {
        let gens: Vec<Permutation> = idx.iter().map(|&i| elems[i].clone()).collect();
        if closure(g.degree(), &gens).len() == n {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return count;
            }
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
