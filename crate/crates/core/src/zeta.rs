//! Probabilistic zeta polynomials, the generation-probability oracle, and
//! factorisation of `P_G(s)` along a chief series.

use dashmap::DashMap;
use fixedbitset::FixedBitSet;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dirichlet::{format_rational, DirichletPoly};
use crate::elements::{ElementTable, Generated};
use crate::error::{Error, Result};
use crate::lattice::{FactorDescriptor, MoebiusTable, SubgroupLattice};
use crate::perm::PermGroup;

pub const DEFAULT_TUPLE_CAP: u64 = 100_000_000;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `P_G(s) = Σ_H μ_G(H) |G:H|^{-s}`.
pub fn pg_series(g: &PermGroup) -> Result<DirichletPoly> {
    let lattice = SubgroupLattice::new(g)?;
    Ok(pg_series_of(&lattice, &lattice.moebius()))
}

pub fn pg_series_of(lattice: &SubgroupLattice, mu: &MoebiusTable) -> DirichletPoly {
    relative_series(lattice, mu, lattice.bottom())
}

/// `P_{G/N}(s)` for a normal subgroup `N`, read off the lattice of `G`: the
/// interval above `N` is the lattice of `G/N`, so `μ_{G/N}(H/N) = μ_G(H)`.
pub fn relative_series(
    lattice: &SubgroupLattice,
    mu: &MoebiusTable,
    normal: usize,
) -> DirichletPoly {
    DirichletPoly::from_terms(
        mu.support()
            .filter(|&h| lattice.leq(normal, h))
            .map(|h| (lattice.index_of(h) as u64, int(mu.get(h)))),
    )
}

/// Probability that `t` uniform random elements generate `G`, by exhaustive
/// count of generating `t`-tuples. Refuses when `|G|^t` exceeds the default
/// tuple cap.
pub fn probgen(g: &PermGroup, t: u32) -> Result<BigRational> {
    probgen_with_cap(g, t, DEFAULT_TUPLE_CAP)
}

pub fn probgen_with_cap(g: &PermGroup, t: u32, tuple_cap: u64) -> Result<BigRational> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    let n = g.order();
    let total = n.pow(t);
    if total > BigUint::from(tuple_cap) {
        return Err(Error::cap("tuple", format!("|G|^{t} = {total}"), tuple_cap));
    }
    let table = ElementTable::new(g)?;
    let count = generating_tuples(&table, t);
    Ok(BigRational::new(BigInt::from(count), BigInt::from(total)))
}

/// Number of `t`-tuples generating the whole group. Tuples are counted by
/// extending the subgroup generated so far one coordinate at a time, with
/// counts memoised per (subgroup, remaining length).
pub fn generating_tuples(table: &ElementTable, t: u32) -> u64 {
    let memo: DashMap<(FixedBitSet, u32), u64> = DashMap::new();
    let start = table.trivial();
    (0..table.len() as u32)
        .into_par_iter()
        .map(|x| count_completions(table, &memo, &table.extend(&start, x), t - 1))
        .sum()
}

fn count_completions(
    table: &ElementTable,
    memo: &DashMap<(FixedBitSet, u32), u64>,
    h: &Generated,
    k: u32,
) -> u64 {
    let n = table.len() as u64;
    if h.elements.len() as u64 == n {
        return n.pow(k);
    }
    if k == 0 {
        return 0;
    }
    let key = (h.members.clone(), k);
    if let Some(v) = memo.get(&key) {
        return *v;
    }
    let inside = h.elements.len() as u64 * count_completions(table, memo, h, k - 1);
    let outside: u64 = (0..table.len() as u32)
        .filter(|&x| !h.members.contains(x as usize))
        .map(|x| count_completions(table, memo, &table.extend(h, x), k - 1))
        .sum();
    memo.insert(key, inside + outside);
    inside + outside
}

/// `P_{X,S}(s)`: Möbius values of the supplements `H` of `S` (`X = SH`),
/// collected by index. `S` must be normal with trivial centraliser.
pub fn pxs_series(lattice: &SubgroupLattice, mu: &MoebiusTable, s: usize) -> Result<DirichletPoly> {
    if !lattice.is_normal(s) {
        return Err(Error::NotAlmostSimple(format!(
            "subgroup {s} is not normal"
        )));
    }
    if lattice.subgroup(lattice.centralizer(s)).order != 1 {
        return Err(Error::NotAlmostSimple(
            "the socle has a nontrivial centraliser".into(),
        ));
    }
    Ok(supplement_series(lattice, mu, s))
}

/// `P_{X,soc X}(s)` for an almost simple permutation group `X`.
pub fn pxs_series_socle(x: &PermGroup) -> Result<DirichletPoly> {
    let lattice = SubgroupLattice::new(x)?;
    let soc = crate::indices::almost_simple_socle(&lattice)?;
    pxs_series(&lattice, &lattice.moebius(), soc)
}

/// `Σ μ(H) |G:H|^{-s}` over `H` with `G = HN`.
pub fn supplement_series(
    lattice: &SubgroupLattice,
    mu: &MoebiusTable,
    normal: usize,
) -> DirichletPoly {
    let order = lattice.order();
    DirichletPoly::from_terms(
        mu.support()
            .filter(|&h| lattice.product_order(h, normal) == order)
            .map(|h| (lattice.index_of(h) as u64, int(mu.get(h)))),
    )
}

/// Number of complements of `upper/lower` in `G/lower`.
pub fn gaschutz_count(lattice: &SubgroupLattice, upper: usize, lower: usize) -> Result<u64> {
    let q = lattice.subgroup(upper).order / lattice.subgroup(lower).order;
    if crate::arith::prime_power(q as u64).is_none() {
        return Err(Error::NonAbelianFactor);
    }
    Ok(count_complements(lattice, upper, lower))
}

fn count_complements(lattice: &SubgroupLattice, upper: usize, lower: usize) -> u64 {
    let (n, m) = (lattice.subgroup(upper), lattice.subgroup(lower));
    let order = lattice.order();
    lattice
        .subgroups()
        .iter()
        .filter(|h| {
            h.order * n.order == order * m.order
                && m.members.is_subset(&h.members)
                && h.members.intersection_count(&n.members) == m.order
        })
        .count() as u64
}

/// The value at the exceptional index `|S|^r` of a nonabelian factor, where
/// the supplement sum and the exact local factor may differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalIndex {
    pub index: u64,
    pub supplement_sum: BigRational,
    pub local_value: BigRational,
}

#[derive(Debug, Clone)]
pub struct ChiefFactorReport {
    pub index_in_series: usize,
    /// Subgroup ids of `G_i` and `G_{i+1}` in the lattice of `G`.
    pub upper: usize,
    pub lower: usize,
    pub factor: FactorDescriptor,
    pub is_frattini: bool,
    /// Gaschütz complement count; abelian factors only.
    pub complement_count: Option<u64>,
    pub local_series: DirichletPoly,
    /// `P_{G/G_{i+1}} / P_{G/G_i}`, computed independently of `local_series`.
    pub relative_series: DirichletPoly,
    /// Nonabelian factors: supplement sum in the monolithic quotient.
    pub supplement_series: Option<DirichletPoly>,
    pub exceptional: Option<ExceptionalIndex>,
    /// Nonabelian factors: the almost simple group induced on one simple
    /// component of the socle of the monolithic quotient, on `|S|` points.
    pub induced: Option<PermGroup>,
    /// Order of the monolithic quotient `G / C_G(G_i/G_{i+1})`.
    pub monolithic_order: usize,
}

#[derive(Debug, Clone)]
pub struct ChiefFactorization {
    pub order: usize,
    pub pg: DirichletPoly,
    pub reports: Vec<ChiefFactorReport>,
}

impl ChiefFactorization {
    pub fn product(&self) -> DirichletPoly {
        self.reports
            .iter()
            .map(|r| r.local_series.clone())
            .product()
    }
}

pub fn chief_factorization(g: &PermGroup, seed: u64) -> Result<ChiefFactorization> {
    let lattice = SubgroupLattice::new(g)?;
    let mu = lattice.moebius();
    chief_factorization_of(&lattice, &mu, seed)
}

pub fn chief_factorization_of(
    lattice: &SubgroupLattice,
    mu: &MoebiusTable,
    seed: u64,
) -> Result<ChiefFactorization> {
    let steps = lattice.chief_series(seed)?;
    let cap = lattice.order() as u64;
    let mut reports = Vec::with_capacity(steps.len());
    for (i, step) in steps.into_iter().enumerate() {
        let (upper, lower) = (step.upper, step.lower);
        let relative = relative_series(lattice, mu, lower)
            .try_divide(&relative_series(lattice, mu, upper), cap)?;
        let is_frattini = lattice.leq(upper, lattice.frattini_above(lower));
        let mut report = ChiefFactorReport {
            index_in_series: i,
            upper,
            lower,
            factor: step.factor.clone(),
            is_frattini,
            complement_count: None,
            local_series: DirichletPoly::one(),
            relative_series: relative,
            supplement_series: None,
            exceptional: None,
            induced: None,
            monolithic_order: 0,
        };
        let centralizer = lattice.centralizer_of_section(upper, lower);
        report.monolithic_order = lattice.index_of(centralizer);
        match &step.factor {
            FactorDescriptor::Abelian { .. } => {
                let c = count_complements(lattice, upper, lower);
                report.complement_count = Some(c);
                if !is_frattini && c > 0 {
                    report.local_series =
                        DirichletPoly::one_minus(int(c as i64), step.factor.order());
                }
            }
            FactorDescriptor::Nonabelian { .. } => {
                nonabelian_local(lattice, centralizer, &mut report)?;
            }
        }
        reports.push(report);
    }
    Ok(ChiefFactorization {
        order: lattice.order(),
        pg: pg_series_of(lattice, mu),
        reports,
    })
}

/// Fills in the supplement sum over the monolithic quotient `L = G/C`, the
/// local series, and the induced almost simple group.
fn nonabelian_local(
    lattice: &SubgroupLattice,
    centralizer: usize,
    report: &mut ChiefFactorReport,
) -> Result<()> {
    let owned;
    let quotient: &SubgroupLattice = if centralizer == lattice.bottom() {
        lattice
    } else {
        owned = SubgroupLattice::new(&lattice.quotient(centralizer)?)?;
        &owned
    };
    let mu = quotient.moebius();
    let minimal = quotient.minimal_normal_ids();
    debug_assert_eq!(minimal.len(), 1, "monolithic quotient");
    let soc = minimal[0];
    let supplements = supplement_series(quotient, &mu, soc);
    let index = report.factor.order();
    let local_value = report.relative_series.coeff(index);
    let mut local = supplements.filter_indices(|n| n != index);
    local.add_term(index, local_value.clone());
    report.exceptional = Some(ExceptionalIndex {
        index,
        supplement_sum: supplements.coeff(index),
        local_value,
    });
    report.supplement_series = Some(supplements);
    report.local_series = local;
    report.induced = Some(induced_almost_simple(quotient, soc)?);
    Ok(())
}

/// `N_L(T)/C_L(T)` acting on `T` by conjugation, for a simple component `T`
/// of the socle.
pub fn induced_almost_simple(lattice: &SubgroupLattice, soc: usize) -> Result<PermGroup> {
    let t = lattice.table();
    let s = lattice.subgroup(soc);
    let component = lattice
        .subgroups()
        .iter()
        .filter(|k| {
            k.order > 1
                && lattice.leq(k.id, soc)
                && s.gens()
                    .iter()
                    .all(|&g| k.gens().iter().all(|&x| k.contains(t.conjugate(x, g))))
        })
        .min_by_key(|k| k.order)
        .expect("the socle itself qualifies");
    lattice.induced_by_normalizer(component.id)
}

/// Report in the CLI JSON shape.
pub fn report_json(
    name: &str,
    fact: &ChiefFactorization,
    hall: Option<(u32, &BigRational, &BigRational)>,
) -> Value {
    let factors: Vec<Value> = fact
        .reports
        .iter()
        .map(|r| {
            json!({
                "kind": if r.factor.is_abelian() { "abelian" } else { "nonabelian" },
                "S": r.factor.simple_name(),
                "r": r.factor.r(),
                "frattini": r.is_frattini,
                "c": r.complement_count,
                "local": r.local_series.to_json(),
            })
        })
        .collect();
    let mut out = json!({
        "group": name,
        "order": fact.order,
        "pg": fact.pg.to_json(),
        "factors": factors,
    });
    if let Some((t, lhs, rhs)) = hall {
        out["hall_check"] = json!({
            "t": t,
            "lhs": format_rational(lhs),
            "rhs": format_rational(rhs),
            "equal": lhs == rhs,
        });
    }
    out
}

/// Largest `t` with `|G|^t ≤ cap`.
pub fn max_tuple_length(order: u64, cap: u64) -> u32 {
    if order <= 1 {
        return u32::MAX;
    }
    let mut t = 0;
    let mut acc = 1u128;
    while acc * order as u128 <= cap as u128 {
        acc *= order as u128;
        t += 1;
    }
    t
}
