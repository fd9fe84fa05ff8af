//! Complete subgroup lattices of small permutation groups.
//!
//! Subgroups are found by cyclic extension: starting from the trivial group,
//! every known subgroup `H` is joined with each cyclic subgroup of prime-power
//! order ("zuppo"). Only one representative per conjugacy class of subgroups is
//! extended, and only one zuppo per `N_G(H)`-orbit; every subgroup is still
//! stored individually, identified by its member bitset.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;
use serde_json::{json, Value};

use crate::arith::{is_prime, prime_power};
use crate::elements::{Elem, ElementTable, Generated};
use crate::error::{Error, Result};
use crate::ladder::SimpleGroupDescriptor;
use crate::perm::{PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupRecord {
    pub id: usize,
    pub members: FixedBitSet,
    pub order: usize,
    gens: Vec<Elem>,
}

impl SubgroupRecord {
    /// Small generating set, as element indices of the ambient group.
    pub fn gens(&self) -> &[Elem] {
        &self.gens
    }

    pub fn elements(&self) -> Vec<Elem> {
        self.members.ones().map(|e| e as Elem).collect()
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e as usize)
    }

    /// `other ≤ self`.
    pub fn contains_subgroup(&self, other: &SubgroupRecord) -> bool {
        self.order >= other.order
            && self.order.is_multiple_of(other.order)
            && other.members.is_subset(&self.members)
    }

    fn generated(&self) -> Generated {
        Generated {
            members: self.members.clone(),
            elements: self.elements(),
            gens: self.gens.clone(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    ambient: PermGroup,
    table: ElementTable,
    subgroups: Vec<SubgroupRecord>,
    index: FxHashMap<FixedBitSet, usize>,
    maximal_ids: Vec<usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

/// Möbius values `μ_G(H)`, indexed by subgroup id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusTable {
    pub values: Vec<i64>,
}

impl MoebiusTable {
    pub fn get(&self, id: usize) -> i64 {
        self.values[id]
    }

    /// Ids with nonzero Möbius value.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, _)| i)
    }
}

/// One step `upper > lower` of a chief series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiefStep {
    pub upper: usize,
    pub lower: usize,
    pub factor: FactorDescriptor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorDescriptor {
    /// Elementary abelian `p^r`.
    Abelian { p: u64, r: u32 },
    /// `S^r` for a nonabelian simple `S`; `simple` is `None` when the order
    /// of `S` falls outside the recognised families.
    Nonabelian {
        simple_order: u64,
        simple: Option<SimpleGroupDescriptor>,
        r: u32,
    },
}

impl FactorDescriptor {
    pub fn r(&self) -> u32 {
        match self {
            FactorDescriptor::Abelian { r, .. } | FactorDescriptor::Nonabelian { r, .. } => *r,
        }
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, FactorDescriptor::Abelian { .. })
    }

    /// Order of one simple component.
    pub fn simple_order(&self) -> u64 {
        match self {
            FactorDescriptor::Abelian { p, .. } => *p,
            FactorDescriptor::Nonabelian { simple_order, .. } => *simple_order,
        }
    }

    pub fn order(&self) -> u64 {
        self.simple_order().pow(self.r())
    }

    pub fn simple_name(&self) -> String {
        match self {
            FactorDescriptor::Abelian { p, .. } => format!("C{p}"),
            FactorDescriptor::Nonabelian {
                simple: Some(s), ..
            } => s.name.clone(),
            FactorDescriptor::Nonabelian { simple_order, .. } => {
                format!("simple group of order {simple_order}")
            }
        }
    }
}

impl std::fmt::Display for FactorDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.r() {
            1 => write!(f, "{}", self.simple_name()),
            r => write!(f, "{}^{r}", self.simple_name()),
        }
    }
}

pub fn all_subgroups(group: &PermGroup) -> Result<SubgroupLattice> {
    SubgroupLattice::new(group)
}

pub fn moebius_table(lattice: &SubgroupLattice) -> MoebiusTable {
    lattice.moebius()
}

pub fn frattini(group: &PermGroup) -> Result<SubgroupRecord> {
    let l = SubgroupLattice::new(group)?;
    Ok(l.subgroup(l.frattini()).clone())
}

pub fn socle(group: &PermGroup) -> Result<SubgroupRecord> {
    let l = SubgroupLattice::new(group)?;
    Ok(l.subgroup(l.socle()).clone())
}

pub fn chief_series(group: &PermGroup, seed: u64) -> Result<Vec<ChiefStep>> {
    SubgroupLattice::new(group)?.chief_series(seed)
}

impl SubgroupLattice {
    pub fn new(group: &PermGroup) -> Result<Self> {
        let table = ElementTable::new(group)?;
        let (found, classes) = enumerate(&table);

        let mut order: Vec<usize> = (0..found.len()).collect();
        order.sort_by(|&a, &b| {
            let (ma, mb) = (&found[a].members, &found[b].members);
            ma.count_ones(..)
                .cmp(&mb.count_ones(..))
                .then_with(|| ma.as_slice().cmp(mb.as_slice()))
        });
        let mut new_id = vec![0; found.len()];
        for (id, &old) in order.iter().enumerate() {
            new_id[old] = id;
        }
        let mut slots: Vec<Option<Generated>> = found.into_iter().map(Some).collect();
        let subgroups: Vec<SubgroupRecord> = order
            .iter()
            .enumerate()
            .map(|(id, &old)| {
                let g = slots[old].take().expect("each subgroup moved once");
                SubgroupRecord {
                    id,
                    order: g.members.count_ones(..),
                    members: g.members,
                    gens: g.gens,
                }
            })
            .collect();
        let mut classes: Vec<Vec<usize>> = classes
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|old| new_id[old]).collect();
                c.sort_unstable();
                c
            })
            .collect();
        classes.sort();
        let mut class_of = vec![0; subgroups.len()];
        for (k, c) in classes.iter().enumerate() {
            for &id in c {
                class_of[id] = k;
            }
        }
        let index = subgroups
            .iter()
            .map(|s| (s.members.clone(), s.id))
            .collect();

        let mut lattice = SubgroupLattice {
            ambient: group.clone(),
            table,
            subgroups,
            index,
            maximal_ids: Vec::new(),
            class_of,
            classes,
        };
        lattice.maximal_ids = lattice.compute_maximal();
        Ok(lattice)
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    pub fn table(&self) -> &ElementTable {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[SubgroupRecord] {
        &self.subgroups
    }

    pub fn subgroup(&self, id: usize) -> &SubgroupRecord {
        &self.subgroups[id]
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn index_of(&self, id: usize) -> usize {
        self.order() / self.subgroups[id].order
    }

    pub fn maximal_ids(&self) -> &[usize] {
        &self.maximal_ids
    }

    /// Subgroup `h ≤ k`.
    pub fn leq(&self, h: usize, k: usize) -> bool {
        self.subgroups[k].contains_subgroup(&self.subgroups[h])
    }

    pub fn id_of(&self, members: &FixedBitSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    pub fn conjugacy_class(&self, id: usize) -> &[usize] {
        &self.classes[self.class_of[id]]
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn is_normal(&self, id: usize) -> bool {
        self.conjugacy_class(id).len() == 1
    }

    pub fn normal_ids(&self) -> Vec<usize> {
        (0..self.len()).filter(|&id| self.is_normal(id)).collect()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        let mut m = self.subgroups[a].members.clone();
        m.intersect_with(&self.subgroups[b].members);
        self.id_of(&m)
            .expect("intersection of subgroups is a subgroup")
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        let g = self.subgroups[b]
            .gens
            .iter()
            .fold(self.subgroups[a].generated(), |acc, &x| {
                self.table.extend(&acc, x)
            });
        self.id_of(&g.members)
            .expect("join of subgroups is a subgroup")
    }

    /// Order of the product set `HK`.
    pub fn product_order(&self, h: usize, k: usize) -> usize {
        let (a, b) = (&self.subgroups[h], &self.subgroups[k]);
        let inter = a.members.intersection_count(&b.members);
        a.order * b.order / inter
    }

    /// Subgroup generated by a list of elements.
    pub fn generated_by(&self, elems: &[Elem]) -> usize {
        let g = self.table.generate(elems);
        self.id_of(&g.members).expect("generated set is a subgroup")
    }

    fn compute_maximal(&self) -> Vec<usize> {
        let top = self.top();
        let mut maximal: Vec<usize> = Vec::new();
        for id in (0..top).rev() {
            if !maximal.iter().any(|&m| self.leq(id, m)) {
                maximal.push(id);
            }
        }
        maximal.sort_unstable();
        maximal
    }

    /// Evaluates `μ(H) = -Σ_{H < K ≤ G} μ(K)` top-down. Only subgroups
    /// with nonzero value take part in later sums.
    pub fn moebius(&self) -> MoebiusTable {
        let top = self.top();
        let mut values = vec![0i64; self.len()];
        values[top] = 1;
        let mut support: Vec<usize> = vec![top];
        for id in (0..top).rev() {
            let h = &self.subgroups[id];
            let sum: i64 = support
                .iter()
                .filter(|&&k| self.subgroups[k].contains_subgroup(h))
                .map(|&k| values[k])
                .sum();
            values[id] = -sum;
            if sum != 0 {
                support.push(id);
            }
        }
        MoebiusTable { values }
    }

    /// Intersection of all maximal subgroups.
    pub fn frattini(&self) -> usize {
        self.frattini_above(self.bottom())
    }

    /// Preimage of `Frat(G/N)`: intersection of the maximal subgroups of `G`
    /// that contain `N`.
    pub fn frattini_above(&self, n: usize) -> usize {
        let mut members = self.subgroups[self.top()].members.clone();
        let mut any = false;
        for &m in &self.maximal_ids {
            if self.leq(n, m) {
                members.intersect_with(&self.subgroups[m].members);
                any = true;
            }
        }
        if !any {
            return self.top().min(self.id_of(&members).unwrap_or(self.top()));
        }
        self.id_of(&members).expect("intersection of subgroups")
    }

    /// Minimal normal subgroups of `G/N` (as normal subgroups of `G`
    /// properly containing `N`).
    pub fn minimal_normal_above(&self, n: usize) -> Vec<usize> {
        let normals: Vec<usize> = self
            .normal_ids()
            .into_iter()
            .filter(|&k| k != n && self.leq(n, k))
            .collect();
        normals
            .iter()
            .copied()
            .filter(|&k| !normals.iter().any(|&j| j != k && self.leq(j, k)))
            .collect()
    }

    pub fn minimal_normal_ids(&self) -> Vec<usize> {
        self.minimal_normal_above(self.bottom())
    }

    /// Product of all minimal normal subgroups.
    pub fn socle(&self) -> usize {
        self.minimal_normal_ids()
            .into_iter()
            .fold(self.bottom(), |acc, m| self.join(acc, m))
    }

    /// Elements of `G` normalising subgroup `id`.
    pub fn normalizer_members(&self, id: usize) -> FixedBitSet {
        normalizer(&self.table, &self.subgroups[id].generated())
    }

    pub fn normalizer(&self, id: usize) -> usize {
        self.id_of(&self.normalizer_members(id))
            .expect("normaliser is a subgroup")
    }

    /// `{g : [g, x] ∈ lower for every x ∈ upper}`, i.e. the centraliser of
    /// the section `upper/lower` (`lower` must be normalised by `upper`).
    pub fn centralizer_of_section(&self, upper: usize, lower: usize) -> usize {
        let t = &self.table;
        let gens = &self.subgroups[upper].gens;
        let low = &self.subgroups[lower];
        let mut members = FixedBitSet::with_capacity(t.len());
        for g in 0..t.len() as Elem {
            if gens.iter().all(|&x| low.contains(t.commutator(g, x))) {
                members.insert(g as usize);
            }
        }
        self.id_of(&members).expect("centraliser is a subgroup")
    }

    pub fn centralizer(&self, id: usize) -> usize {
        self.centralizer_of_section(id, self.bottom())
    }

    /// Descending chief series `G = N_0 > … > N_k = 1`, built bottom-up by
    /// choosing a minimal normal subgroup of the current quotient. The seed
    /// picks among the available choices.
    pub fn chief_series(&self, seed: u64) -> Result<Vec<ChiefStep>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut chain = vec![self.bottom()];
        let mut cur = self.bottom();
        while cur != self.top() {
            let options = self.minimal_normal_above(cur);
            cur = *options
                .choose(&mut rng)
                .expect("a proper normal subgroup has a cover");
            chain.push(cur);
        }
        chain.reverse();
        chain
            .windows(2)
            .map(|w| {
                Ok(ChiefStep {
                    upper: w[0],
                    lower: w[1],
                    factor: self.describe_factor(w[0], w[1])?,
                })
            })
            .collect()
    }

    /// Identifies the chief factor `upper/lower` as `p^r` or `S^r`.
    pub fn describe_factor(&self, upper: usize, lower: usize) -> Result<FactorDescriptor> {
        let q = (self.subgroups[upper].order / self.subgroups[lower].order) as u64;
        if let Some((p, r)) = prime_power(q) {
            return Ok(FactorDescriptor::Abelian { p, r });
        }
        let t = &self.table;
        let up = &self.subgroups[upper];
        // A minimal normal subgroup T/M of N/M is one simple component.
        let component = self
            .subgroups
            .iter()
            .filter(|s| {
                s.id != lower
                    && self.leq(lower, s.id)
                    && self.leq(s.id, upper)
                    && up
                        .gens
                        .iter()
                        .all(|&n| s.gens.iter().all(|&x| s.contains(t.conjugate(x, n))))
            })
            .min_by_key(|s| s.order)
            .expect("upper itself qualifies");
        let simple_order = (component.order / self.subgroups[lower].order) as u64;
        let mut r = 0u32;
        let mut acc = 1u64;
        while acc < q {
            acc *= simple_order;
            r += 1;
        }
        debug_assert_eq!(acc, q);
        let spectrum = self.section_spectrum(component.id, lower);
        let simple = identify_simple(simple_order, Some(&spectrum))?;
        Ok(FactorDescriptor::Nonabelian {
            simple_order,
            simple,
            r,
        })
    }

    /// Element-order multiset of the section `upper/lower`.
    pub fn section_spectrum(&self, upper: usize, lower: usize) -> BTreeMap<u64, u64> {
        let t = &self.table;
        let low = &self.subgroups[lower];
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for x in self.subgroups[upper].members.ones() {
            let mut y = x as Elem;
            let mut k = 1u64;
            while !low.contains(y) {
                y = t.mul(y, x as Elem);
                k += 1;
            }
            *counts.entry(k).or_default() += 1;
        }
        let m = low.order as u64;
        counts.values_mut().for_each(|c| *c /= m);
        counts
    }

    /// Intersection of the conjugates of subgroup `id`.
    pub fn core(&self, id: usize) -> usize {
        let mut members = self.subgroups[id].members.clone();
        for &c in self.conjugacy_class(id) {
            members.intersect_with(&self.subgroups[c].members);
        }
        self.id_of(&members).expect("core is a subgroup")
    }

    /// `G/N` as a permutation group, acting on the right cosets of the
    /// largest subgroup whose core is `N`.
    pub fn quotient(&self, normal: usize) -> Result<PermGroup> {
        if !self.is_normal(normal) {
            return Err(Error::InvalidParameter(format!(
                "subgroup {normal} is not normal"
            )));
        }
        let stabilizer = (0..self.len())
            .rev()
            .filter(|&k| self.leq(normal, k))
            .find(|&k| self.core(k) == normal)
            .expect("N itself has core N");
        self.coset_action(stabilizer)
    }

    /// Action of `G` on the right cosets of subgroup `id`.
    pub fn coset_action(&self, id: usize) -> Result<PermGroup> {
        let t = &self.table;
        let k = self.subgroups[id].elements();
        let mut coset_of = vec![u32::MAX; t.len()];
        let mut reps = Vec::new();
        for x in 0..t.len() as Elem {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &h in &k {
                coset_of[t.mul(h, x) as usize] = c;
            }
        }
        let degree = reps.len();
        let gens = t
            .generators()
            .iter()
            .map(|&g| {
                Permutation::from_images(
                    reps.iter()
                        .map(|&r| coset_of[t.mul(r, g) as usize])
                        .collect(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PermGroup::new(degree, gens)?.with_element_cap(self.ambient.element_cap()))
    }

    /// The group induced on subgroup `id` by conjugation from its normaliser,
    /// as a permutation group on the elements of `id`.
    pub fn induced_by_normalizer(&self, id: usize) -> Result<PermGroup> {
        let t = &self.table;
        let elems = self.subgroups[id].elements();
        let mut pos = vec![u32::MAX; t.len()];
        for (i, &e) in elems.iter().enumerate() {
            pos[e as usize] = i as u32;
        }
        let norm = self.normalizer(id);
        let gens = self.subgroups[norm]
            .gens
            .iter()
            .map(|&n| {
                Permutation::from_images(
                    elems
                        .iter()
                        .map(|&e| pos[t.conjugate(e, n) as usize])
                        .collect(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PermGroup::new(elems.len(), gens)?.with_element_cap(self.ambient.element_cap()))
    }

    /// Element-order multiset of the whole group.
    pub fn element_orders(&self) -> BTreeMap<u64, u64> {
        let mut counts = BTreeMap::new();
        for e in 0..self.table.len() as Elem {
            *counts.entry(self.table.order_of(e) as u64).or_default() += 1;
        }
        counts
    }

    /// JSON export: degree, order, subgroups, inclusion pairs, maximal ids
    /// and Möbius values.
    pub fn export_json(&self, moebius: &MoebiusTable) -> Value {
        let subgroups: Vec<Value> = self
            .subgroups
            .iter()
            .map(|s| json!({"id": s.id, "order": s.order, "members": s.elements()}))
            .collect();
        let mut leq = Vec::new();
        for h in 0..self.len() {
            for k in h..self.len() {
                if self.leq(h, k) {
                    leq.push(json!([h, k]));
                }
            }
        }
        let mu: serde_json::Map<String, Value> = moebius
            .values
            .iter()
            .enumerate()
            .map(|(id, v)| (id.to_string(), json!(v)))
            .collect();
        json!({
            "degree": self.ambient.degree(),
            "order": self.order(),
            "subgroups": subgroups,
            "leq": leq,
            "maximal": self.maximal_ids,
            "moebius": mu,
        })
    }
}

fn normalizer(t: &ElementTable, h: &Generated) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(t.len());
    for g in 0..t.len() as Elem {
        if h.members.contains(g as usize)
            || h.gens
                .iter()
                .all(|&x| h.members.contains(t.conjugate(x, g) as usize))
        {
            out.insert(g as usize);
        }
    }
    out
}

struct Zuppos {
    generator: Vec<Elem>,
    of_element: Vec<u32>,
}

const NO_ZUPPO: u32 = u32::MAX;

fn zuppos(t: &ElementTable) -> Zuppos {
    let mut generator = Vec::new();
    let mut of_element = vec![NO_ZUPPO; t.len()];
    for e in 0..t.len() as Elem {
        let ord = t.order_of(e);
        if of_element[e as usize] != NO_ZUPPO || ord == 1 || prime_power(ord as u64).is_none() {
            continue;
        }
        let id = generator.len() as u32;
        generator.push(e);
        let mut x = e;
        for k in 1..=ord {
            if crate::arith::gcd(k as u64, ord as u64) == 1 {
                of_element[x as usize] = id;
            }
            x = t.mul(x, e);
        }
    }
    Zuppos {
        generator,
        of_element,
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

/// All subgroups, plus the conjugacy classes as index lists into the result.
fn enumerate(t: &ElementTable) -> (Vec<Generated>, Vec<Vec<usize>>) {
    let z = zuppos(t);
    let mut found: Vec<Generated> = Vec::new();
    let mut known: FxHashMap<FixedBitSet, usize> = FxHashMap::default();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut pending: Vec<usize> = Vec::new();

    let add_class = |k: Generated,
                     found: &mut Vec<Generated>,
                     known: &mut FxHashMap<FixedBitSet, usize>,
                     classes: &mut Vec<Vec<usize>>|
     -> usize {
        let start = found.len();
        known.insert(k.members.clone(), start);
        found.push(k);
        let mut head = start;
        while head < found.len() {
            for (gi, table) in t.conjugation_tables().iter().enumerate() {
                let image = t.conjugate_set(&found[head].members, gi);
                if known.contains_key(&image) {
                    continue;
                }
                let gens: Vec<Elem> = found[head]
                    .gens
                    .iter()
                    .map(|&x| table[x as usize])
                    .collect();
                let elements: Vec<Elem> = image.ones().map(|e| e as Elem).collect();
                known.insert(image.clone(), found.len());
                found.push(Generated {
                    members: image,
                    elements,
                    gens,
                });
            }
            head += 1;
        }
        classes.push((start..found.len()).collect());
        classes.len() - 1
    };

    let c = add_class(t.trivial(), &mut found, &mut known, &mut classes);
    pending.push(c);

    while let Some(c) = pending.pop() {
        let rep = found[classes[c][0]].clone();
        if rep.elements.len() == t.len() {
            continue;
        }
        // Orbits of zuppos under the normaliser of the representative.
        let norm = normalizer(t, &rep);
        let mut norm_gens: Vec<Elem> = Vec::new();
        let mut acc = t.trivial();
        for g in norm.ones() {
            if !acc.members.contains(g) {
                acc = t.extend(&acc, g as Elem);
                norm_gens.push(g as Elem);
            }
        }
        let mut parent: Vec<u32> = (0..z.generator.len() as u32).collect();
        for (zi, &zg) in z.generator.iter().enumerate() {
            for &n in &norm_gens {
                let other = z.of_element[t.conjugate(zg, n) as usize];
                let (a, b) = (find(&mut parent, zi as u32), find(&mut parent, other));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        for (zi, &zg) in z.generator.iter().enumerate() {
            if find(&mut parent, zi as u32) != zi as u32 || rep.members.contains(zg as usize) {
                continue;
            }
            let k = t.extend(&rep, zg);
            if known.contains_key(&k.members) {
                continue;
            }
            let nc = add_class(k, &mut found, &mut known, &mut classes);
            pending.push(nc);
        }
    }
    (found, classes)
}

/// Names a simple group from its order, using the element-order multiset to
/// separate `Alt(8)` from `PSL(3,4)` (both of order 20160).
///
/// Recognised: cyclic groups of prime order, `Alt(n)` for `5 ≤ n ≤ 16`,
/// `PSL(2,p)` for primes `5 ≤ p ≤ 71`, and `PSL(3,4)`. Returns `Ok(None)`
/// for any other order.
pub fn identify_simple(
    order: u64,
    witnesses: Option<&BTreeMap<u64, u64>>,
) -> Result<Option<SimpleGroupDescriptor>> {
    if is_prime(order) {
        return Ok(Some(SimpleGroupDescriptor::cyclic(order)));
    }
    if order == PSL3_4_ORDER {
        let Some(w) = witnesses.filter(|w| !w.is_empty()) else {
            return Err(Error::AmbiguousOrder { order });
        };
        let max = w.keys().copied().max().unwrap_or(1);
        return Ok(match max {
            15 => Some(SimpleGroupDescriptor::alternating(8)),
            7 => Some(SimpleGroupDescriptor::psl3_4()),
            _ => None,
        });
    }
    for n in 5..=16u64 {
        if crate::arith::factorial(n) / 2u32 == num_bigint::BigUint::from(order) {
            return Ok(Some(SimpleGroupDescriptor::alternating(n)));
        }
    }
    for p in (5..=71u64).filter(|&p| is_prime(p)) {
        if p * (p * p - 1) / 2 == order {
            return Ok(Some(SimpleGroupDescriptor::psl2(p)));
        }
    }
    Ok(None)
}

const PSL3_4_ORDER: u64 = 20160;

/// Element-order spectra (orders that occur) of the two simple groups of
/// order 20160.
pub const ALT8_SPECTRUM: [u64; 8] = [1, 2, 3, 4, 5, 6, 7, 15];
pub const PSL3_4_SPECTRUM: [u64; 6] = [1, 2, 3, 4, 5, 7];
