//! Indexed element storage for a small permutation group.
//!
//! Every element gets a dense `u32` index. Products are resolved by computing
//! only the images of the stabiliser-chain base (which determine an element
//! uniquely) and looking the packed key up in a hash map.

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::perm::{PermGroup, Permutation};

pub type Elem = u32;

#[derive(Debug, Clone)]
enum Lookup {
    Packed {
        bits: u32,
        map: FxHashMap<u128, Elem>,
    },
    Wide(FxHashMap<Box<[u32]>, Elem>),
}

#[derive(Debug, Clone)]
pub struct ElementTable {
    degree: usize,
    images: Vec<u32>,
    base: Vec<usize>,
    lookup: Lookup,
    inverse: Vec<Elem>,
    orders: Vec<u32>,
    generators: Vec<Elem>,
    conj_by_gen: Vec<Vec<Elem>>,
}

/// A subgroup as a member bitset plus its element list and a generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub members: FixedBitSet,
    pub elements: Vec<Elem>,
    pub gens: Vec<Elem>,
}

impl ElementTable {
    pub fn new(group: &PermGroup) -> Result<Self> {
        Self::build(group, false)
    }

    fn build(group: &PermGroup, force_wide: bool) -> Result<Self> {
        let perms = group.elements()?;
        let degree = group.degree();
        let base = group.stab_chain().base();
        let bits = usize::BITS - degree.max(2).saturating_sub(1).leading_zeros();
        let mut images = Vec::with_capacity(perms.len() * degree);
        for p in &perms {
            images.extend_from_slice(p.images());
        }
        let lookup = if !force_wide && (bits as usize) * base.len() <= 128 {
            let mut map = FxHashMap::default();
            map.reserve(perms.len());
            for (i, p) in perms.iter().enumerate() {
                map.insert(
                    pack(bits, base.iter().map(|&b| p.image(b) as u32)),
                    i as Elem,
                );
            }
            Lookup::Packed { bits, map }
        } else {
            let mut map = FxHashMap::default();
            for (i, p) in perms.iter().enumerate() {
                let key: Box<[u32]> = base.iter().map(|&b| p.image(b) as u32).collect();
                map.insert(key, i as Elem);
            }
            Lookup::Wide(map)
        };
        let mut table = ElementTable {
            degree,
            images,
            base,
            lookup,
            inverse: Vec::new(),
            orders: perms.iter().map(|p| p.order() as u32).collect(),
            generators: Vec::new(),
            conj_by_gen: Vec::new(),
        };
        table.inverse = perms
            .iter()
            .map(|p| table.index_of(&p.inverse()).expect("closed under inverse"))
            .collect();
        table.generators = group
            .generators()
            .iter()
            .map(|g| table.index_of(g).expect("generator is an element"))
            .collect();
        table.conj_by_gen = table
            .generators
            .iter()
            .map(|&g| {
                (0..perms.len() as Elem)
                    .map(|e| table.conjugate(e, g))
                    .collect()
            })
            .collect();
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.inverse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub const IDENTITY: Elem = 0;

    #[inline]
    fn row(&self, e: Elem) -> &[u32] {
        let start = e as usize * self.degree;
        &self.images[start..start + self.degree]
    }

    pub fn permutation(&self, e: Elem) -> Permutation {
        Permutation::from_images(self.row(e).to_vec()).expect("stored rows are bijections")
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elem> {
        if p.degree() != self.degree {
            return None;
        }
        let idx = self.lookup_images(self.base.iter().map(|&b| p.image(b) as u32))?;
        (self.row(idx) == p.images()).then_some(idx)
    }

    #[inline]
    fn lookup_images(&self, imgs: impl Iterator<Item = u32>) -> Option<Elem> {
        match &self.lookup {
            Lookup::Packed { bits, map } => map.get(&pack(*bits, imgs)).copied(),
            Lookup::Wide(map) => {
                let key: Box<[u32]> = imgs.collect();
                map.get(&key).copied()
            }
        }
    }

    /// Product `a * b` (apply `a`, then `b`).
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let ra = self.row(a);
        let rb = self.row(b);
        self.lookup_images(self.base.iter().map(|&p| rb[ra[p] as usize]))
            .expect("group is closed under multiplication")
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a as usize]
    }

    /// `g^-1 a g`.
    #[inline]
    pub fn conjugate(&self, a: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn order_of(&self, a: Elem) -> u32 {
        self.orders[a as usize]
    }

    pub fn power(&self, a: Elem, k: u32) -> Elem {
        let mut acc = Self::IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Indices of the ambient group's generators.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    /// Conjugation tables `e ↦ g^-1 e g`, one per ambient generator `g`.
    pub fn conjugation_tables(&self) -> &[Vec<Elem>] {
        &self.conj_by_gen
    }

    pub fn trivial(&self) -> Generated {
        let mut members = FixedBitSet::with_capacity(self.len());
        members.insert(Self::IDENTITY as usize);
        Generated {
            members,
            elements: vec![Self::IDENTITY],
            gens: Vec::new(),
        }
    }

    pub fn whole(&self) -> Generated {
        let mut members = FixedBitSet::with_capacity(self.len());
        members.insert_range(..);
        Generated {
            members,
            elements: (0..self.len() as Elem).collect(),
            gens: self.generators.clone(),
        }
    }

    /// `⟨H, x⟩`, built as a union of right cosets of `H`.
    pub fn extend(&self, h: &Generated, x: Elem) -> Generated {
        if h.members.contains(x as usize) {
            return h.clone();
        }
        let mut members = h.members.clone();
        let mut elements = h.elements.clone();
        let mut gens = h.gens.clone();
        gens.push(x);
        let mut reps = vec![Self::IDENTITY];
        let mut head = 0;
        while head < reps.len() {
            let r = reps[head];
            head += 1;
            for &g in &gens {
                let e = self.mul(r, g);
                if members.contains(e as usize) {
                    continue;
                }
                for &y in &h.elements {
                    let z = self.mul(y, e);
                    members.insert(z as usize);
                    elements.push(z);
                }
                reps.push(e);
            }
        }
        Generated {
            members,
            elements,
            gens,
        }
    }

    pub fn generate(&self, gens: &[Elem]) -> Generated {
        gens.iter()
            .fold(self.trivial(), |acc, &g| self.extend(&acc, g))
    }

    /// Subgroup from a member bitset known to be closed; a small generating
    /// set is chosen greedily.
    pub fn from_members(&self, members: &FixedBitSet) -> Generated {
        let mut acc = self.trivial();
        for e in members.ones() {
            if !acc.members.contains(e) {
                acc = self.extend(&acc, e as Elem);
            }
        }
        debug_assert_eq!(&acc.members, members);
        acc
    }

    /// Image of a member set under conjugation by the `k`-th ambient generator.
    pub fn conjugate_set(&self, members: &FixedBitSet, k: usize) -> FixedBitSet {
        let table = &self.conj_by_gen[k];
        let mut out = FixedBitSet::with_capacity(self.len());
        for e in members.ones() {
            out.insert(table[e] as usize);
        }
        out
    }
}

#[inline]
fn pack(bits: u32, imgs: impl Iterator<Item = u32>) -> u128 {
    imgs.fold(0u128, |acc, x| (acc << bits) | x as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog_group;

    #[test]
    fn table_products_match_permutations() {
        let g = catalog_group("psl2:7").unwrap();
        let t = ElementTable::new(&g).unwrap();
        assert_eq!(t.len(), 168);
        for a in (0..168).step_by(7) {
            for b in (0..168).step_by(5) {
                let expect = t.permutation(a).compose(&t.permutation(b));
                assert_eq!(t.permutation(t.mul(a, b)), expect);
            }
            assert_eq!(t.mul(a, t.inv(a)), ElementTable::IDENTITY);
        }
        assert!(t.permutation(ElementTable::IDENTITY).is_identity());
    }

    #[test]
    fn generated_subgroups() {
        let g = catalog_group("sym:4").unwrap();
        let t = ElementTable::new(&g).unwrap();
        assert_eq!(t.generate(t.generators()).elements.len(), 24);
        let x = t
            .index_of(&Permutation::from_cycles(4, &[vec![0, 1, 2]]).unwrap())
            .unwrap();
        let y = t
            .index_of(&Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap())
            .unwrap();
        let h = t.generate(&[x, y]);
        assert_eq!(h.elements.len(), 12);
        assert_eq!(h.members.count_ones(..), 12);
        assert_eq!(t.from_members(&h.members).members, h.members);
    }

    #[test]
    fn wide_keys_fall_back() {
        let g = catalog_group("sym:5").unwrap();
        let t = ElementTable::build(&g, true).unwrap();
        assert!(matches!(t.lookup, Lookup::Wide(_)));
        for a in 0..120 {
            let b = (a * 7 + 3) % 120;
            assert_eq!(
                t.permutation(t.mul(a, b)),
                t.permutation(a).compose(&t.permutation(b))
            );
        }
    }
}
