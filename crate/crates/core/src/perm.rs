//! Permutations on `{0, …, n-1}` and permutation groups given by generators.
//!
//! Permutations act on the right: `p^(xy) = (p^x)^y`, so `x * y` means
//! "apply `x`, then `y`".

use std::fmt;
use std::ops::Mul;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Default bound on the number of group elements any enumeration may touch.
pub const DEFAULT_ELEMENT_CAP: u64 = 10_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidParameter(format!(
                    "image list {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let p = p as usize;
                if p >= degree {
                    return Err(Error::InvalidParameter(format!(
                        "point {} outside degree {degree}",
                        p + 1
                    )));
                }
                if touched[p] {
                    return Err(Error::InvalidParameter(format!("repeated point {}", p + 1)));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u32);
                p = self.image(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        (0..self.degree()).find(|&i| self.image(i) != i)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

/// Standard cycle notation with 1-based points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Stabiliser chain with base `0, 1, …, n-1`.
///
/// Level `k` holds the transversal of the orbit of `k` under the pointwise
/// stabiliser of `{0, …, k-1}`. Built by Knuth's recursive variant of
/// Schreier–Sims.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    gens: Vec<Vec<Permutation>>,
    transversal: Vec<Vec<Option<Permutation>>>,
    inverse: Vec<Vec<Option<Permutation>>>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let id = Permutation::identity(degree);
        let mut transversal = vec![vec![None; degree]; degree];
        let mut inverse = vec![vec![None; degree]; degree];
        for k in 0..degree {
            transversal[k][k] = Some(id.clone());
            inverse[k][k] = Some(id.clone());
        }
        let mut chain = StabChain {
            degree,
            gens: vec![Vec::new(); degree],
            transversal,
            inverse,
        };
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if gens.is_empty() {
            return chain;
        }
        // Recursion depth grows with degree²; give it room.
        std::thread::scope(|scope| {
            std::thread::Builder::new()
                .stack_size(256 << 20)
                .spawn_scoped(scope, || {
                    for g in gens {
                        chain.add_generator(0, g);
                    }
                })
                .expect("spawn stabiliser-chain worker")
                .join()
                .expect("stabiliser-chain worker panicked");
        });
        chain
    }

    /// Sifts `perm` from `level`; true iff it lies in the stabiliser there.
    pub fn contains_from(&self, level: usize, perm: &Permutation) -> bool {
        let mut g = perm.clone();
        for l in level..self.degree {
            let j = g.image(l);
            match &self.inverse[l][j] {
                None => return false,
                Some(inv) => {
                    if j != l {
                        g = g.compose(inv);
                    }
                }
            }
        }
        true
    }

    fn add_generator(&mut self, level: usize, perm: Permutation) {
        if level >= self.degree || self.contains_from(level, &perm) {
            return;
        }
        self.gens[level].push(perm.clone());
        let reps: Vec<Permutation> = self.transversal[level].iter().flatten().cloned().collect();
        for rep in reps {
            self.extend_orbit(level, rep.compose(&perm));
        }
    }

    fn extend_orbit(&mut self, level: usize, perm: Permutation) {
        let j = perm.image(level);
        match &self.inverse[level][j] {
            None => {
                self.inverse[level][j] = Some(perm.inverse());
                self.transversal[level][j] = Some(perm.clone());
                let gens = self.gens[level].clone();
                for tau in gens {
                    self.extend_orbit(level, perm.compose(&tau));
                }
            }
            Some(inv) => {
                let schreier = perm.compose(inv);
                self.add_generator(level + 1, schreier);
            }
        }
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.transversal
            .iter()
            .map(|t| t.iter().filter(|x| x.is_some()).count())
            .collect()
    }

    pub fn order(&self) -> BigUint {
        self.orbit_sizes()
            .into_iter()
            .fold(BigUint::one(), |acc, s| acc * s)
    }

    /// Base points with nontrivial basic orbits.
    pub fn base(&self) -> Vec<usize> {
        self.orbit_sizes()
            .into_iter()
            .enumerate()
            .filter(|&(_, s)| s > 1)
            .map(|(k, _)| k)
            .collect()
    }
}

/// A permutation group given by generators.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    element_cap: u64,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            element_cap: self.element_cap,
            chain,
        }
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidParameter(format!(
                "generator {g} has degree {} instead of {degree}",
                g.degree()
            )));
        }
        Ok(PermGroup {
            degree,
            generators,
            element_cap: DEFAULT_ELEMENT_CAP,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("positive degree")
    }

    pub fn with_element_cap(mut self, cap: u64) -> Self {
        self.element_cap = cap;
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn element_cap(&self) -> u64 {
        self.element_cap
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn stab_chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::new(self.degree, &self.generators))
    }

    /// Exact group order from the stabiliser chain.
    pub fn order(&self) -> BigUint {
        self.stab_chain().order()
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn contains(&self, perm: &Permutation) -> bool {
        perm.degree() == self.degree && self.stab_chain().contains_from(0, perm)
    }

    /// Order as a `usize`, or a cap error if enumeration would be refused.
    pub fn checked_order(&self) -> Result<usize> {
        let order = self.order();
        match order.to_u64() {
            Some(n) if n <= self.element_cap => Ok(n as usize),
            _ => Err(Error::cap("element", order, self.element_cap)),
        }
    }

    /// Every element, identity first, in breadth-first order over the
    /// generators.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        let n = self.checked_order()?;
        let mut seen = rustc_hash::FxHashSet::default();
        let id = self.identity();
        seen.insert(id.clone());
        let mut out = vec![id];
        let mut head = 0;
        while head < out.len() {
            let x = out[head].clone();
            head += 1;
            for g in &self.generators {
                let y = x.compose(g);
                if seen.insert(y.clone()) {
                    out.push(y);
                }
            }
        }
        debug_assert_eq!(out.len(), n);
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, cycles: &[&[u32]]) -> Permutation {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn compose_acts_on_the_right() {
        let a = p(3, &[&[0, 1]]);
        let b = p(3, &[&[1, 2]]);
        // 0 -a-> 1 -b-> 2
        assert_eq!((&a * &b).image(0), 2);
        assert_eq!((&a * &b).to_string(), "(1 3 2)");
        assert!((&a * &a.inverse()).is_identity());
    }

    #[test]
    fn order_of_permutation() {
        assert_eq!(p(5, &[&[0, 1], &[2, 3, 4]]).order(), 6);
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(p(5, &[&[0, 1, 2]]).pow(3), Permutation::identity(5));
    }

    #[test]
    fn rejects_bad_permutations() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1, 1]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 3]]).is_err());
    }

    #[test]
    fn stab_chain_orders() {
        let sym4 = PermGroup::new(4, vec![p(4, &[&[0, 1]]), p(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(sym4.order(), BigUint::from(24u32));
        assert_eq!(sym4.elements().unwrap().len(), 24);
        assert!(sym4.contains(&p(4, &[&[1, 3]])));
        let trivial = PermGroup::trivial(3);
        assert_eq!(trivial.order(), BigUint::one());
        assert_eq!(trivial.elements().unwrap().len(), 1);
    }

    #[test]
    fn element_cap_is_enforced() {
        let sym5 = PermGroup::new(5, vec![p(5, &[&[0, 1]]), p(5, &[&[0, 1, 2, 3, 4]])])
            .unwrap()
            .with_element_cap(100);
        assert!(matches!(sym5.elements(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn large_alternating_order() {
        // Alt(12) = 12!/2
        let n = 12;
        let three = p(n, &[&[0, 1, 2]]);
        let long: Vec<u32> = (1..n as u32).collect();
        let g = PermGroup::new(n, vec![three, p(n, &[&long])]).unwrap();
        assert_eq!(g.order(), crate::arith::factorial(12) / 2u32);
    }
}
