//! Index arithmetic: Lucas and Legendre, imprimitive indices `w(a,b)`,
//! minimal useful indices per family, and `Ω(X)` read off a subgroup lattice.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::{binomial, factorial, factorize, is_prime, smallest_prime_divisor};
use crate::error::{Error, Result};
use crate::ladder::{Family, SimpleGroupDescriptor};
use crate::lattice::SubgroupLattice;
use crate::perm::PermGroup;

/// `C(n, k) mod p` from the base-`p` digits of `n` and `k`.
pub fn lucas_binom_mod(mut n: u64, mut k: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return Ok(0);
        }
        let digit = binomial(nd, kd) % p;
        acc = acc * digit.to_u64().expect("reduced mod p") % p;
        n /= p;
        k /= p;
    }
    Ok(acc)
}

/// `v_p(n!) = (n - S_p(n)) / (p - 1)`, with `S_p` the base-`p` digit sum.
pub fn vp_factorial_digits(n: u64, p: u64) -> u64 {
    let mut digits = 0;
    let mut m = n;
    while m > 0 {
        digits += m % p;
        m /= p;
    }
    (n - digits) / (p - 1)
}

/// `v_p(n!) = Σ ⌊n / p^i⌋`.
pub fn vp_factorial_floor(n: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut q = n / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    total
}

/// `v_p(n!)`, computed both ways; the two must agree.
pub fn vp_factorial(n: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let a = vp_factorial_digits(n, p);
    let b = vp_factorial_floor(n, p);
    assert_eq!(
        a, b,
        "Legendre digit-sum and floor-sum disagree at n={n}, p={p}"
    );
    Ok(a)
}

/// `w(a, b) = (ab)! / ((a!)^b · b!)`, the index of `Sym(a) ≀ Sym(b)` in `Sym(ab)`.
pub fn w_imprimitive(a: u64, b: u64) -> Result<BigUint> {
    if a < 2 || b < 2 {
        return Err(Error::InvalidParameter(format!(
            "w({a},{b}) needs a, b ≥ 2"
        )));
    }
    Ok(factorial(a * b) / (factorial(a).pow(b as u32) * factorial(b)))
}

/// Minimal odd useful index of `Alt(2^t)`: `w(2^{t-1}, 2)` for `t > 3`, and 15
/// for `t = 3`, coming from the maximal `2^3:PSL(3,2)` of `Alt(8)`.
pub fn w_alt_2t(t: u32) -> Result<BigUint> {
    match t {
        0..=2 => Err(Error::InvalidParameter(format!(
            "w_alt_2t needs t ≥ 3, got {t}"
        ))),
        3 => Ok(BigUint::from(15u32)),
        _ if t > 40 => Err(Error::InvalidParameter(format!("t = {t} is out of range"))),
        _ => w_imprimitive(1 << (t - 1), 2),
    }
}

/// Index of `2^3:PSL(3,2) = AGL(3,2)` in `Alt(8)`.
pub const ALT8_AGL32_INDEX: u64 = 15;

/// Brute-force minimiser of `w(a, b)` over `m = ab`, `a, b ≥ 2`. Ties go to
/// the smaller `b`.
pub fn maroti_argmin(m: u64) -> Result<(u64, BigUint)> {
    if m < 8 || is_prime(m) {
        return Err(Error::InvalidParameter(format!(
            "{m} must be composite and at least 8"
        )));
    }
    let mut best: Option<(u64, BigUint)> = None;
    for b in (2..=m / 2).filter(|b| m.is_multiple_of(*b)) {
        let w = w_imprimitive(m / b, b)?;
        if best.as_ref().is_none_or(|(_, bw)| w < *bw) {
            best = Some((b, w));
        }
    }
    Ok(best.expect("composite m has a factorisation"))
}

/// Smallest prime divisor of `m`; the minimiser predicted by Maróti's lemma.
pub fn maroti_prediction(m: u64) -> u64 {
    smallest_prime_divisor(m).unwrap_or(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndexSource {
    LatticeComputed,
    FamilyFormula,
    CatalogTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UsefulIndexProfile {
    pub group: String,
    pub omega: BTreeSet<u64>,
    pub w: Option<u64>,
    pub source: IndexSource,
}

/// `Ω(X)` for an almost simple `X`: odd `m > 1` such that some supplement of
/// the socle has index `m`, and every such supplement is maximal.
pub fn omega_set_lattice(x: &PermGroup) -> Result<UsefulIndexProfile> {
    let lattice = SubgroupLattice::new(x)?;
    let soc = almost_simple_socle(&lattice)?;
    Ok(omega_from_lattice(
        &lattice,
        soc,
        format!("{} points, order {}", x.degree(), lattice.order()),
    ))
}

pub fn omega_from_lattice(
    lattice: &SubgroupLattice,
    soc: usize,
    name: String,
) -> UsefulIndexProfile {
    let order = lattice.order();
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    let mut rejected: BTreeSet<u64> = BTreeSet::new();
    for y in 0..lattice.top() {
        let m = lattice.index_of(y) as u64;
        if m.is_multiple_of(2) || lattice.product_order(y, soc) != order {
            continue;
        }
        seen.insert(m);
        if !lattice.maximal_ids().contains(&y) {
            rejected.insert(m);
        }
    }
    let omega: BTreeSet<u64> = seen.difference(&rejected).copied().collect();
    UsefulIndexProfile {
        group: name,
        w: omega.iter().next().copied(),
        omega,
        source: IndexSource::LatticeComputed,
    }
}

/// Socle of an almost simple group, or an error if the group is not almost
/// simple (unique minimal normal subgroup, nonabelian simple, trivial
/// centraliser).
pub fn almost_simple_socle(lattice: &SubgroupLattice) -> Result<usize> {
    let minimal = lattice.minimal_normal_ids();
    let [soc] = minimal.as_slice() else {
        return Err(Error::NotAlmostSimple(format!(
            "{} minimal normal subgroups",
            minimal.len()
        )));
    };
    let soc = *soc;
    let s = lattice.subgroup(soc);
    if factorize(s.order as u64).len() == 1 {
        return Err(Error::NotAlmostSimple("socle is abelian".into()));
    }
    let t = lattice.table();
    let has_proper_normal = lattice.subgroups().iter().any(|k| {
        k.id != soc
            && k.order > 1
            && lattice.leq(k.id, soc)
            && s.gens()
                .iter()
                .all(|&g| k.gens().iter().all(|&x| k.contains(t.conjugate(x, g))))
    });
    if has_proper_normal {
        return Err(Error::NotAlmostSimple("socle is not simple".into()));
    }
    if lattice.subgroup(lattice.centralizer(soc)).order != 1 {
        return Err(Error::NotAlmostSimple(
            "socle has a nontrivial centraliser".into(),
        ));
    }
    Ok(soc)
}

/// Useful-index data a family rule attaches to a simple group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyUsefulIndex {
    pub name: String,
    /// Indices the family rule declares useful (both parities for PSL(2,p)).
    pub useful_indices: Vec<BigUint>,
    /// Minimal odd useful index, when the family rule determines one.
    pub w: Option<BigUint>,
    pub source: IndexSource,
}

pub fn w_of(desc: &SimpleGroupDescriptor) -> Result<FamilyUsefulIndex> {
    let formula = |useful: Vec<BigUint>, w: BigUint| FamilyUsefulIndex {
        name: desc.name.clone(),
        useful_indices: useful,
        w: Some(w),
        source: IndexSource::FamilyFormula,
    };
    match desc.family {
        Family::AltPrime => {
            let p = BigUint::from(desc.params[0]);
            Ok(formula(vec![p.clone()], p))
        }
        Family::Alt2Power => {
            let w = w_alt_2t(desc.params[0] as u32)?;
            Ok(formula(vec![w.clone()], w))
        }
        Family::Psl2 => {
            let p = desc.params[0];
            let (lo, hi) = (p * (p - 1) / 2, p * (p + 1) / 2);
            let odd = if lo % 2 == 1 { lo } else { hi };
            Ok(formula(vec![lo.into(), hi.into()], odd.into()))
        }
        Family::Sporadic => Ok(FamilyUsefulIndex {
            name: desc.name.clone(),
            useful_indices: Vec::new(),
            w: None,
            source: IndexSource::CatalogTable,
        }),
        _ => Err(Error::UnsupportedFamily(desc.name.clone())),
    }
}

/// Comparison of the PSL(2,p) family rule with the lattice-computed `Ω`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Psl2IndexCheck {
    pub p: u64,
    pub family_index: u64,
    pub lattice_omega: BTreeSet<u64>,
    pub agrees: bool,
}

pub fn psl2_index_check(p: u64) -> Result<Psl2IndexCheck> {
    let g = crate::groups::psl2(p as usize)?;
    let profile = omega_set_lattice(&g)?;
    let family_index = w_of(&SimpleGroupDescriptor::psl2(p))?
        .w
        .and_then(|w| w.to_u64())
        .expect("PSL(2,p) has an odd useful index");
    Ok(Psl2IndexCheck {
        p,
        family_index,
        agrees: profile.omega.contains(&family_index),
        lattice_omega: profile.omega,
    })
}

/// `2^t = ab` with `a, b ≥ 2`.
pub fn two_power_factorizations(t: u32) -> impl Iterator<Item = (u64, u64)> {
    (1..t).map(move |i| (1u64 << (t - i), 1u64 << i))
}

/// `v_2` of numerator and denominator of `w(a, b)` via Legendre.
pub fn w_two_adic_parts(a: u64, b: u64) -> (u64, u64) {
    let num = vp_factorial_floor(a * b, 2);
    let den = b * vp_factorial_floor(a, 2) + vp_factorial_floor(b, 2);
    (num, den)
}

pub fn is_odd(n: &BigUint) -> bool {
    n.bit(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_binom_mod(8, 3, 2).unwrap(), 0);
        assert_eq!(lucas_binom_mod(5, 2, 5).unwrap(), 0);
        assert_eq!(lucas_binom_mod(17, 0, 7).unwrap(), 1);
        assert!(lucas_binom_mod(5, 2, 4).is_err());
        for n in 0..40u64 {
            for k in 0..=n {
                for p in [2u64, 3, 5, 7] {
                    let direct = (binomial(n, k) % p).to_u64().unwrap();
                    assert_eq!(lucas_binom_mod(n, k, p).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(vp_factorial(8, 2).unwrap(), 7);
        assert_eq!(vp_factorial(100, 5).unwrap(), 24);
        assert_eq!(vp_factorial(1, 3).unwrap(), 0);
    }

    #[test]
    fn imprimitive_examples() {
        assert_eq!(w_imprimitive(2, 2).unwrap(), BigUint::from(3u32));
        assert_eq!(w_imprimitive(4, 2).unwrap(), BigUint::from(35u32));
        assert_eq!(w_imprimitive(8, 2).unwrap(), BigUint::from(6435u32));
        assert!(w_imprimitive(1, 4).is_err());
    }

    #[test]
    fn alt_2t_values() {
        assert_eq!(w_alt_2t(3).unwrap(), BigUint::from(15u32));
        assert_eq!(w_alt_2t(4).unwrap(), BigUint::from(6435u32));
        assert_eq!(w_alt_2t(5).unwrap(), BigUint::from(300540195u64));
        assert!(w_alt_2t(2).is_err());
    }

    #[test]
    fn maroti_examples() {
        assert_eq!(maroti_argmin(8).unwrap(), (2, BigUint::from(35u32)));
        assert_eq!(maroti_argmin(12).unwrap(), (2, BigUint::from(462u32)));
        assert_eq!(maroti_argmin(9).unwrap(), (3, BigUint::from(280u32)));
        assert!(maroti_argmin(7).is_err());
        assert!(maroti_argmin(6).is_err());
        assert!(maroti_argmin(13).is_err());
    }

    #[test]
    fn family_rules() {
        let w = |d: SimpleGroupDescriptor| w_of(&d).unwrap().w.unwrap();
        assert_eq!(
            w(SimpleGroupDescriptor::alternating(7)),
            BigUint::from(7u32)
        );
        assert_eq!(
            w(SimpleGroupDescriptor::alternating(16)),
            BigUint::from(6435u32)
        );
        let psl = w_of(&SimpleGroupDescriptor::psl2(11)).unwrap();
        assert_eq!(
            psl.useful_indices,
            vec![BigUint::from(55u32), BigUint::from(66u32)]
        );
        assert_eq!(psl.w, Some(BigUint::from(55u32)));
        assert!(w_of(&SimpleGroupDescriptor::cyclic(5)).is_err());
    }

    #[test]
    fn omega_alt5() {
        let p = omega_set_lattice(&crate::groups::alternating(5).unwrap()).unwrap();
        assert_eq!(p.omega, BTreeSet::from([5]));
        assert_eq!(p.w, Some(5));
    }

    #[test]
    fn omega_rejects_non_almost_simple() {
        assert!(matches!(
            omega_set_lattice(&crate::groups::symmetric(4).unwrap()),
            Err(Error::NotAlmostSimple(_))
        ));
    }
}
