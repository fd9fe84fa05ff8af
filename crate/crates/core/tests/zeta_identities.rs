mod common;

use std::collections::BTreeSet;

use common::{closure, generating_tuples, group, subgroups_by_generation};
use mzeta_core::fixtures::{HALL_FIXTURES, Q8, SL2_5};
use mzeta_core::indices::{almost_simple_socle, omega_from_lattice};
use mzeta_core::zeta::{
    chief_factorization, gaschutz_count, pg_series, probgen, pxs_series, pxs_series_socle,
    relative_series,
};
use mzeta_core::{DirichletPoly, Permutation, SubgroupLattice};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn alt5_series() -> DirichletPoly {
    DirichletPoly::from_ints(&[
        (1, 1),
        (5, -5),
        (6, -6),
        (10, -10),
        (20, 20),
        (30, 60),
        (60, -60),
    ])
}

#[test]
fn probgen_matches_tuple_enumeration() {
    for (spec, t) in [
        ("cyclic:2", 1),
        ("cyclic:6", 1),
        ("cyclic:6", 2),
        ("sym:3", 2),
        ("dihedral:4", 2),
        (Q8, 2),
        ("alt:4", 2),
        ("sym:4", 2),
        ("alt:5", 2),
        ("sym:3", 3),
    ] {
        let g = group(spec);
        let n = closure(g.degree(), g.generators()).len() as i64;
        let expected = q(generating_tuples(&g, t) as i64, n.pow(t));
        assert_eq!(probgen(&g, t).unwrap(), expected, "{spec}, t = {t}");
    }
    assert_eq!(probgen(&group("cyclic:2"), 1).unwrap(), q(1, 2));
    assert_eq!(probgen(&group("sym:4"), 2).unwrap(), q(3, 8));
    assert_eq!(probgen(&group("alt:5"), 2).unwrap(), q(19, 30));
}

#[test]
fn hall_identity_on_fixtures() {
    for (name, spec) in HALL_FIXTURES {
        let g = group(spec);
        let pg = pg_series(&g).unwrap();
        assert!(pg.coeff(1) == q(1, 1), "{name}");
        for t in 1..=2 {
            assert_eq!(pg.evaluate(t), probgen(&g, t).unwrap(), "{name}, t = {t}");
        }
    }
}

#[test]
fn known_series() {
    assert_eq!(
        pg_series(&group("cyclic:7")).unwrap(),
        DirichletPoly::from_ints(&[(1, 1), (7, -1)])
    );
    let s4 = [(2, 1), (3, 3), (4, 4)]
        .iter()
        .map(|&(n, c)| DirichletPoly::from_ints(&[(1, 1), (n, -c)]))
        .product::<DirichletPoly>();
    assert_eq!(pg_series(&group("sym:4")).unwrap(), s4);
    assert_eq!(pg_series(&group("alt:5")).unwrap(), alt5_series());
    assert_eq!(
        pg_series(&group(Q8)).unwrap(),
        DirichletPoly::from_ints(&[(1, 1), (2, -3), (4, 2)])
    );
}

#[test]
fn factorization_identity_for_several_seeds() {
    for (name, spec) in HALL_FIXTURES {
        let g = group(spec);
        let mut multisets = BTreeSet::new();
        for seed in [0, 1, 7, 42] {
            let f = chief_factorization(&g, seed).unwrap();
            assert_eq!(f.product(), f.pg, "{name}, seed {seed}");
            for r in &f.reports {
                assert_eq!(
                    r.local_series, r.relative_series,
                    "{name}, factor {}",
                    r.factor
                );
            }
            let mut locals: Vec<String> = f
                .reports
                .iter()
                .map(|r| r.local_series.to_string())
                .collect();
            locals.sort();
            multisets.insert(locals);
        }
        assert_eq!(multisets.len(), 1, "{name}: {multisets:?}");
    }
}

/// Complements of `n/m` in `g/m`, counted over brute-force subgroups.
fn brute_complements(
    subs: &BTreeSet<BTreeSet<Permutation>>,
    order: usize,
    n: &BTreeSet<Permutation>,
    m: &BTreeSet<Permutation>,
) -> u64 {
    subs.iter()
        .filter(|h| {
            m.is_subset(h)
                && h.intersection(n).count() == m.len()
                && h.len() * n.len() == order * m.len()
        })
        .count() as u64
}

#[test]
fn gaschutz_counts_match_direct_enumeration() {
    for spec in [
        "sym:4",
        "cyclic:4",
        "dihedral:4",
        Q8,
        "alt:4",
        "dihedral:6",
        "cyclic:6",
    ] {
        let g = group(spec);
        let subs = subgroups_by_generation(&g, 2);
        let l = SubgroupLattice::new(&g).unwrap();
        let set = |id: usize| -> BTreeSet<Permutation> {
            l.subgroup(id)
                .elements()
                .into_iter()
                .map(|e| l.table().permutation(e))
                .collect()
        };
        let f = chief_factorization(&g, 0).unwrap();
        for r in f.reports.iter().filter(|r| r.factor.is_abelian()) {
            let c = gaschutz_count(&l, r.upper, r.lower).unwrap();
            assert_eq!(
                c,
                brute_complements(&subs, l.order(), &set(r.upper), &set(r.lower)),
                "{spec}"
            );
            assert_eq!(r.complement_count, Some(c));
            assert_eq!(r.is_frattini, c == 0, "{spec}");
            let expected = if r.is_frattini {
                DirichletPoly::one()
            } else {
                DirichletPoly::from_ints(&[(1, 1), (r.factor.order(), -(c as i64))])
            };
            assert_eq!(r.local_series, expected, "{spec}");
        }
    }
}

#[test]
fn sym4_and_cyclic4_reports() {
    let s4 = chief_factorization(&group("sym:4"), 0).unwrap();
    let counts: Vec<u64> = s4
        .reports
        .iter()
        .map(|r| r.complement_count.unwrap())
        .collect();
    assert_eq!(counts, [1, 3, 4]);
    assert!(s4.reports.iter().all(|r| !r.is_frattini));

    let c4 = chief_factorization(&group("cyclic:4"), 0).unwrap();
    assert_eq!(c4.reports.len(), 2);
    assert!(!c4.reports[0].is_frattini && c4.reports[1].is_frattini);
    assert_eq!(c4.reports[1].complement_count, Some(0));
    assert_eq!(c4.pg, DirichletPoly::from_ints(&[(1, 1), (2, -1)]));

    let l = SubgroupLattice::new(&group("sym:4")).unwrap();
    let r = &s4.reports[0];
    assert!(gaschutz_count(&l, r.upper, r.lower).is_ok());
    let a5 = SubgroupLattice::new(&group("alt:5")).unwrap();
    assert!(gaschutz_count(&a5, a5.top(), a5.bottom()).is_err());
}

#[test]
fn sl25_center_is_frattini() {
    let f = chief_factorization(&group(SL2_5), 0).unwrap();
    assert_eq!(f.reports.len(), 2);
    let (top, bottom) = (&f.reports[0], &f.reports[1]);
    assert_eq!(top.factor.to_string(), "Alt(5)");
    assert_eq!(top.local_series, alt5_series());
    assert!(bottom.is_frattini);
    assert_eq!(bottom.local_series, DirichletPoly::one());
    assert_eq!(f.pg, alt5_series());
}

#[test]
fn frattini_quotient_identity() {
    for spec in [
        "cyclic:4",
        "cyclic:8",
        Q8,
        "dihedral:4",
        SL2_5,
        "cyclic:12",
        "sym:4",
    ] {
        let g = group(spec);
        let l = SubgroupLattice::new(&g).unwrap();
        let quotient = l.quotient(l.frattini()).unwrap();
        assert_eq!(
            pg_series(&g).unwrap(),
            pg_series(&quotient).unwrap(),
            "{spec}"
        );
        // The relative series over the Frattini subgroup is the whole series.
        assert_eq!(
            relative_series(&l, &l.moebius(), l.frattini()),
            pg_series(&g).unwrap(),
            "{spec}"
        );
    }
    assert_eq!(
        pg_series(&group("cyclic:4")).unwrap(),
        pg_series(&group("cyclic:2")).unwrap()
    );
}

#[test]
fn supplement_series_of_almost_simple_groups() {
    assert_eq!(pxs_series_socle(&group("alt:5")).unwrap(), alt5_series());
    let psl27 = group("psl2:7");
    assert_eq!(
        pxs_series_socle(&psl27).unwrap(),
        pg_series(&psl27).unwrap()
    );

    let s5 = group("sym:5");
    let l = SubgroupLattice::new(&s5).unwrap();
    let mu = l.moebius();
    let soc = almost_simple_socle(&l).unwrap();
    let pxs = pxs_series(&l, &mu, soc).unwrap();
    assert!(pxs.coeff(2).is_zero());
    assert_eq!(pxs.coeff(1), q(1, 1));
    for n in pxs.indices() {
        let witnesses = l
            .subgroups()
            .iter()
            .filter(|h| l.index_of(h.id) as u64 == n && !l.leq(h.id, soc));
        assert!(
            witnesses.count() > 0,
            "index {n} needs a subgroup outside Alt(5)"
        );
    }

    // Sym(4) is not almost simple: its minimal normal subgroup is abelian.
    let s4 = SubgroupLattice::new(&group("sym:4")).unwrap();
    let v4 = s4.socle();
    assert!(pxs_series(&s4, &s4.moebius(), v4).is_err());
}

#[test]
fn useful_indices_carry_negative_coefficients() {
    for spec in ["alt:5", "sym:5", "psl2:7", "alt:6", "psl2:11"] {
        let l = SubgroupLattice::new(&group(spec)).unwrap();
        let mu = l.moebius();
        let soc = almost_simple_socle(&l).unwrap();
        let pxs = pxs_series(&l, &mu, soc).unwrap();
        let omega = omega_from_lattice(&l, soc, spec.into()).omega;
        for m in omega {
            assert!(pxs.coeff(m).is_negative(), "{spec}: coefficient at {m}");
        }
    }
}
