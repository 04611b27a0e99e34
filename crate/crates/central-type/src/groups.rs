//! Finite groups as validated Cayley tables.
//!
//! Elements are dense indices with the identity fixed at 0. Groups are
//! immutable once validated, so everything downstream can share them via
//! `Arc` and read concurrently.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::arith::{gcd, lcm, MixedRadix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("subgroup is not normal")]
    NotNormal,
}

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
    generators: Vec<u32>,
    /// For x ≠ identity: (g, y) with x = g·y, g a generator and y found
    /// earlier in the generation order. Drives inductive constructions.
    decomp: Vec<Option<(u32, u32)>>,
}

impl FiniteGroup {
    /// Validate a raw table: identity at 0, Latin square, two-sided
    /// inverses, associativity. Associativity is checked on a generating
    /// set, which suffices once every element is reachable by left
    /// multiplication from generators.
    pub fn from_table(
        table: Vec<u32>,
        generators: Vec<u32>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let n2 = table.len();
        let n = (n2 as f64).sqrt().round() as usize;
        if n * n != n2 || n == 0 {
            return Err(GroupError::NotAGroup("table is not square".into()));
        }
        if table.iter().any(|&v| v as usize >= n) {
            return Err(GroupError::NotAGroup("entry out of range".into()));
        }
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        for g in 0..n {
            if at(0, g) != g || at(g, 0) != g {
                return Err(GroupError::NotAGroup("index 0 is not an identity".into()));
            }
        }
        // Latin square.
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for g in 0..n {
            seen_row.iter_mut().for_each(|v| *v = false);
            seen_col.iter_mut().for_each(|v| *v = false);
            for h in 0..n {
                let r = at(g, h);
                let c = at(h, g);
                if seen_row[r] || seen_col[c] {
                    return Err(GroupError::NotAGroup(format!(
                        "row or column {} is not a permutation",
                        g
                    )));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        // Inverses (two-sided).
        let mut inv = vec![0u32; n];
        for g in 0..n {
            let i = (0..n).find(|&h| at(g, h) == 0).unwrap();
            if at(i, g) != 0 {
                return Err(GroupError::NotAGroup(format!("element {} has no two-sided inverse", g)));
            }
            inv[g] = i as u32;
        }
        // Generating set: extend greedily until the left-closure covers G.
        let mut gens: Vec<u32> = generators.iter().copied().filter(|&g| g != 0).collect();
        gens.dedup();
        let mut decomp: Vec<Option<(u32, u32)>> = vec![None; n];
        let mut reached = vec![false; n];
        reached[0] = true;
        let mut frontier = vec![0u32];
        let mut count = 1usize;
        loop {
            while let Some(y) = frontier.pop() {
                for &g in &gens {
                    let x = at(g as usize, y as usize) as u32;
                    if !reached[x as usize] {
                        reached[x as usize] = true;
                        decomp[x as usize] = Some((g, y));
                        count += 1;
                        frontier.push(x);
                    }
                }
            }
            if count == n {
                break;
            }
            let fresh = (0..n).find(|&x| !reached[x]).unwrap() as u32;
            gens.push(fresh);
            reached[fresh as usize] = true;
            decomp[fresh as usize] = Some((fresh, 0));
            count += 1;
            frontier.push(fresh);
            // Re-sweep from everything already reached.
            frontier.extend((0..n as u32).filter(|&x| reached[x as usize]));
        }
        // Associativity on generators: (s·x)·y = s·(x·y) for s generating
        // propagates to all triples along the decomposition above.
        for &s in &gens {
            let s = s as usize;
            for x in 0..n {
                let sx = at(s, x);
                for y in 0..n {
                    if at(sx, y) != at(s, at(x, y)) {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            s, x, y
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { n, table, inv, labels, generators: gens, decomp })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn inv_of(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv_of(g))
    }

    pub fn commutator(&self, g: u32, h: u32) -> u32 {
        self.mul(self.mul(g, h), self.mul(self.inv_of(g), self.inv_of(h)))
    }

    pub fn pow(&self, g: u32, k: i64) -> u32 {
        let o = self.order_of(g) as i64;
        let mut e = k.rem_euclid(o);
        let mut acc = 0u32;
        let mut base = g;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn order_of(&self, g: u32) -> u32 {
        let mut x = g;
        let mut o = 1;
        while x != 0 {
            x = self.mul(x, g);
            o += 1;
        }
        o
    }

    pub fn exponent(&self) -> u32 {
        (0..self.n as u32).fold(1u64, |e, g| lcm(e, self.order_of(g) as u64)) as u32
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, g: u32) -> String {
        match &self.labels {
            Some(l) => l[g as usize].clone(),
            None => format!("g{}", g),
        }
    }

    /// (generator, shorter element) decomposition x = g·y, None for 1.
    pub fn decomp(&self, x: u32) -> Option<(u32, u32)> {
        self.decomp[x as usize]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n as u32).all(|g| (0..g).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.n as u32
    }

    /// Conjugacy classes as sorted index sets; the representative of each
    /// class is its minimal element and classes are listed by representative.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.n];
        let mut classes = Vec::new();
        for x in 0..self.n as u32 {
            if seen[x as usize] {
                continue;
            }
            let mut class: Vec<u32> = self.elements().map(|g| self.conj(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y as usize] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Index of the class of each element, matching `conjugacy_classes`.
    pub fn class_index(&self) -> Vec<usize> {
        let classes = self.conjugacy_classes();
        let mut idx = vec![0usize; self.n];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                idx[x as usize] = i;
            }
        }
        idx
    }

    pub fn centralizer(&self, g: u32) -> Subgroup {
        let elements = self
            .elements()
            .filter(|&h| self.mul(g, h) == self.mul(h, g))
            .collect();
        Subgroup { elements }
    }

    pub fn center(&self) -> Subgroup {
        let elements = self
            .elements()
            .filter(|&g| (0..self.n as u32).all(|h| self.mul(g, h) == self.mul(h, g)))
            .collect();
        Subgroup { elements }
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        let mut seed: Vec<u32> = Vec::new();
        for g in 0..self.n as u32 {
            for h in 0..self.n as u32 {
                seed.push(self.commutator(g, h));
            }
        }
        Subgroup { elements: self.closure(&seed) }
    }

    /// Closure of a seed set under multiplication, sorted.
    pub fn closure(&self, seed: &[u32]) -> Vec<u32> {
        let mut in_set = vec![false; self.n];
        in_set[0] = true;
        let mut members = vec![0u32];
        let mut frontier = vec![0u32];
        let mut seed: Vec<u32> = seed.to_vec();
        seed.sort_unstable();
        seed.dedup();
        for &s in &seed {
            if !in_set[s as usize] {
                in_set[s as usize] = true;
                members.push(s);
                frontier.push(s);
            }
        }
        while let Some(x) = frontier.pop() {
            for &s in &seed {
                for &(a, b) in &[(x, s), (s, x)] {
                    let y = self.mul(a, b);
                    if !in_set[y as usize] {
                        in_set[y as usize] = true;
                        members.push(y);
                        frontier.push(y);
                    }
                }
            }
        }
        // Close under internal products as well (seed products can escape
        // the seed-translate orbit for non-normal configurations).
        loop {
            let mut grew = false;
            let snapshot = members.clone();
            for &a in &snapshot {
                for &b in &snapshot {
                    let y = self.mul(a, b);
                    if !in_set[y as usize] {
                        in_set[y as usize] = true;
                        members.push(y);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        members.sort_unstable();
        members
    }

    /// The subgroup generated by a set of elements.
    pub fn subgroup(&self, seed: &[u32]) -> Subgroup {
        Subgroup { elements: self.closure(seed) }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup { elements: (0..self.n as u32).collect() }
    }

    /// Quotient by a normal subgroup. Returns the quotient group, the
    /// projection (element -> quotient index) and the coset representatives
    /// (minimal element of each coset, ascending).
    pub fn quotient(&self, normal: &Subgroup) -> Result<(FiniteGroup, Vec<u32>, Vec<u32>), GroupError> {
        if !normal.is_normal_in(self) {
            return Err(GroupError::NotNormal);
        }
        let mut coset_rep = vec![u32::MAX; self.n];
        for g in 0..self.n as u32 {
            let rep = normal.elements.iter().map(|&h| self.mul(g, h)).min().unwrap();
            coset_rep[g as usize] = rep;
        }
        let mut reps: Vec<u32> = coset_rep.clone();
        reps.sort_unstable();
        reps.dedup();
        let rep_index: HashMap<u32, u32> =
            reps.iter().enumerate().map(|(i, &r)| (r, i as u32)).collect();
        let proj: Vec<u32> = coset_rep.iter().map(|r| rep_index[r]).collect();
        let q = reps.len();
        let mut table = vec![0u32; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * q + j] = proj[self.mul(a, b) as usize];
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            reps.iter().map(|&r| format!("[{}]", l[r as usize])).collect()
        });
        let group = FiniteGroup::from_table(table, vec![], labels)?;
        Ok((group, proj, reps))
    }

    /// Hall test: |H| coprime to its index.
    pub fn is_hall(&self, h: &Subgroup) -> bool {
        let k = h.order();
        self.n % k == 0 && gcd(k as u64, (self.n / k) as u64) == 1
    }

    /// The cyclic group C_n with elements 0..n, g·h = g+h mod n.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = ((a + b) % n) as u32;
            }
        }
        FiniteGroup::from_table(table, vec![1 % n as u32], None).unwrap()
    }

    /// Direct product with lexicographic element order `(a, b) -> a·|B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let (na, nb) = (a.n, b.n);
        let n = na * nb;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            let (x1, x2) = ((x / nb) as u32, (x % nb) as u32);
            for y in 0..n {
                let (y1, y2) = ((y / nb) as u32, (y % nb) as u32);
                table[x * n + y] =
                    a.mul(x1, y1) * nb as u32 + b.mul(x2, y2);
            }
        }
        FiniteGroup::from_table(table, vec![], None).unwrap()
    }
}

/// A subgroup as a sorted element set of its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<u32>,
}

impl Subgroup {
    pub fn from_elements(parent: &FiniteGroup, mut elements: Vec<u32>) -> Result<Self, GroupError> {
        elements.sort_unstable();
        elements.dedup();
        let sg = Subgroup { elements };
        if !sg.is_closed_in(parent) {
            return Err(GroupError::NotAGroup("set is not closed".into()));
        }
        Ok(sg)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn contains(&self, g: u32) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_closed_in(&self, parent: &FiniteGroup) -> bool {
        self.contains(0)
            && self.elements.iter().all(|&a| {
                self.contains(parent.inv_of(a))
                    && self.elements.iter().all(|&b| self.contains(parent.mul(a, b)))
            })
    }

    pub fn is_normal_in(&self, parent: &FiniteGroup) -> bool {
        parent
            .elements()
            .all(|g| self.elements.iter().all(|&h| self.contains(parent.conj(g, h))))
    }

    pub fn is_cyclic_in(&self, parent: &FiniteGroup) -> bool {
        self.elements
            .iter()
            .any(|&g| parent.order_of(g) as usize == self.elements.len())
    }

    /// Reindex as a standalone group; returns the group and the map from
    /// new indices back to parent indices (which is just `elements`).
    pub fn as_group(&self, parent: &FiniteGroup) -> Result<(FiniteGroup, Vec<u32>), GroupError> {
        let k = self.elements.len();
        let index: HashMap<u32, u32> =
            self.elements.iter().enumerate().map(|(i, &e)| (e, i as u32)).collect();
        let mut table = vec![0u32; k * k];
        for (i, &a) in self.elements.iter().enumerate() {
            for (j, &b) in self.elements.iter().enumerate() {
                let p = parent.mul(a, b);
                table[i * k + j] = *index
                    .get(&p)
                    .ok_or_else(|| GroupError::NotAGroup("subgroup set not closed".into()))?;
            }
        }
        let labels = parent
            .labels
            .as_ref()
            .map(|l| self.elements.iter().map(|&e| l[e as usize].clone()).collect());
        Ok((FiniteGroup::from_table(table, vec![], labels)?, self.elements.clone()))
    }
}

/// Invariant factor decomposition of a finite abelian group, with explicit
/// generators and per-element coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianStructure {
    /// d_1 | d_2 | ... | d_k, each > 1, product = group order.
    pub invariant_factors: Vec<u32>,
    /// Element indices generating the cyclic factors, aligned with
    /// `invariant_factors`.
    pub generators: Vec<u32>,
    /// Coordinates of every element in the generator basis.
    pub coords: Vec<Vec<u32>>,
}

/// Invariant factors of an abelian group by maximal-order extraction:
/// split a cyclic factor of maximal order and recurse on the quotient,
/// adjusting lifted generators so the sum stays direct.
pub fn abelian_structure(g: &FiniteGroup) -> Result<AbelianStructure, GroupError> {
    if !g.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    let (mut factors, mut gens) = split_abelian(g)?;
    // Largest factor comes out first; the spec order is ascending.
    factors.reverse();
    gens.reverse();
    // Coordinates: enumerate all products; the decomposition is direct, so
    // every element appears exactly once.
    let n = g.order();
    let mut coords = vec![Vec::new(); n];
    let mut hit = vec![false; n];
    for tuple in MixedRadix::new(factors.clone()) {
        let mut x = 0u32;
        for (i, &t) in tuple.iter().enumerate() {
            x = g.mul(x, g.pow(gens[i], t as i64));
        }
        if hit[x as usize] {
            return Err(GroupError::NotAGroup("abelian decomposition not direct".into()));
        }
        hit[x as usize] = true;
        coords[x as usize] = tuple;
    }
    if hit.iter().any(|&h| !h) {
        return Err(GroupError::NotAGroup("abelian decomposition not spanning".into()));
    }
    Ok(AbelianStructure { invariant_factors: factors, generators: gens, coords })
}

fn split_abelian(g: &FiniteGroup) -> Result<(Vec<u32>, Vec<u32>), GroupError> {
    if g.order() == 1 {
        return Ok((vec![], vec![]));
    }
    // Element of maximal order, minimal index for determinism.
    let top = g
        .elements()
        .max_by_key(|&x| (g.order_of(x), std::cmp::Reverse(x)))
        .unwrap();
    let d = g.order_of(top);
    let cyc = g.subgroup(&[top]);
    let (q, proj, reps) = g.quotient(&cyc)?;
    let (qfactors, qgens) = split_abelian(&q)?;
    let mut factors = vec![d];
    let mut gens = vec![top];
    for (i, &qg) in qgens.iter().enumerate() {
        let dq = qfactors[i];
        let lift = reps[qg as usize];
        // lift^dq lands in <top>; divide out to make the order exactly dq.
        let p = g.pow(lift, dq as i64);
        let t = (0..d).find(|&t| g.pow(top, t as i64) == p).ok_or_else(|| {
            GroupError::NotAGroup("cyclic factor extraction failed".into())
        })?;
        if t % dq != 0 {
            return Err(GroupError::NotAGroup("maximal order extraction failed".into()));
        }
        let adjusted = g.mul(lift, g.pow(top, -((t / dq) as i64)));
        factors.push(dq);
        gens.push(adjusted);
        debug_assert_eq!(g.order_of(adjusted), dq);
        debug_assert_eq!(proj[adjusted as usize], qg);
    }
    Ok((factors, gens))
}

/// Whether an abelian group with invariant factors `a` embeds into one
/// with invariant factors `b`: align at the large end and compare
/// divisor-wise.
pub fn embeds(a: &AbelianStructure, b: &AbelianStructure) -> bool {
    let ka = a.invariant_factors.len();
    let kb = b.invariant_factors.len();
    if ka > kb {
        return false;
    }
    (0..ka).all(|i| {
        let da = a.invariant_factors[ka - 1 - i];
        let db = b.invariant_factors[kb - 1 - i];
        db % da == 0
    })
}

/// A 1-dimensional character of G as an exponent table into μ_m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub modulus: u32,
    pub values: Vec<u32>,
}

impl Character {
    pub fn trivial(n: usize) -> Character {
        Character { modulus: 1, values: vec![0; n] }
    }

    pub fn eval(&self, g: u32) -> crate::arith::RootOfUnity {
        crate::arith::RootOfUnity::new(self.modulus, self.values[g as usize] as i64)
    }

    pub fn exponent_at(&self, g: u32, m: u32) -> u32 {
        assert!(m % self.modulus == 0);
        self.values[g as usize] * (m / self.modulus)
    }

    pub fn mul(&self, other: &Character) -> Character {
        assert_eq!(self.modulus, other.modulus);
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| (a + b) % self.modulus)
            .collect();
        Character { modulus: self.modulus, values }
    }

    pub fn inv(&self) -> Character {
        let values = self.values.iter().map(|&a| (self.modulus - a) % self.modulus).collect();
        Character { modulus: self.modulus, values }
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

/// The group of 1-dimensional characters, in mixed-radix order over the
/// invariant factors of G/G'; the trivial character comes first. The
/// modulus is the exponent of G/G', the smallest faithful coefficient
/// ring.
pub fn character_group(g: &FiniteGroup) -> Vec<Character> {
    let n = g.order();
    let gprime = g.commutator_subgroup();
    let (q, proj, _) = g.quotient(&gprime).expect("commutator subgroup is normal");
    let st = abelian_structure(&q).expect("G/G' is abelian");
    let m = *st.invariant_factors.last().unwrap_or(&1);
    let mut out = Vec::new();
    for tuple in MixedRadix::new(st.invariant_factors.clone()) {
        let values = (0..n)
            .map(|x| {
                let c = &st.coords[proj[x] as usize];
                let mut e = 0u64;
                for (i, (&ti, &di)) in tuple.iter().zip(&st.invariant_factors).enumerate() {
                    e += ti as u64 * (m / di) as u64 * c[i] as u64;
                }
                (e % m as u64) as u32
            })
            .collect();
        out.push(Character { modulus: m, values });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let g = FiniteGroup::cyclic(4);
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        assert_eq!(g.order_of(1), 4);
        assert_eq!(g.inv_of(3), 1);
        assert_eq!(g.conjugacy_classes().len(), 4);
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::cyclic(1);
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes(), vec![vec![0]]);
        assert_eq!(abelian_structure(&g).unwrap().invariant_factors, Vec::<u32>::new());
        assert_eq!(character_group(&g).len(), 1);
    }

    #[test]
    fn bad_tables_rejected() {
        // 2x2 table that is not a Latin square.
        let err = FiniteGroup::from_table(vec![0, 1, 1, 1], vec![], None);
        assert!(matches!(err, Err(GroupError::NotAGroup(_))));
        // Latin square with wrong identity.
        let err = FiniteGroup::from_table(vec![1, 0, 0, 1], vec![], None);
        assert!(matches!(err, Err(GroupError::NotAGroup(_))));
    }

    #[test]
    fn abelian_structure_c2c2() {
        let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        let st = abelian_structure(&g).unwrap();
        assert_eq!(st.invariant_factors, vec![2, 2]);
    }

    #[test]
    fn abelian_structure_mixed() {
        let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(4), &FiniteGroup::cyclic(2));
        let st = abelian_structure(&g).unwrap();
        assert_eq!(st.invariant_factors, vec![2, 4]);
        let g = FiniteGroup::direct_product(
            &FiniteGroup::cyclic(2),
            &FiniteGroup::direct_product(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(4)),
        );
        let st = abelian_structure(&g).unwrap();
        assert_eq!(st.invariant_factors, vec![2, 12]);
    }

    #[test]
    fn embeds_on_invariant_factors() {
        let a = |f: &[u32]| AbelianStructure {
            invariant_factors: f.to_vec(),
            generators: vec![],
            coords: vec![],
        };
        // [p^2] does not embed into [p, p, p].
        assert!(!embeds(&a(&[9]), &a(&[3, 3, 3])));
        assert!(embeds(&a(&[3, 3, 3]), &a(&[3, 3, 3])));
        assert!(embeds(&a(&[2, 2]), &a(&[2, 4])));
        assert!(!embeds(&a(&[2, 2]), &a(&[4])));
        assert!(embeds(&a(&[]), &a(&[2])));
    }

    #[test]
    fn characters_of_cyclic() {
        let g = FiniteGroup::cyclic(6);
        let chars = character_group(&g);
        assert_eq!(chars.len(), 6);
        assert!(chars[0].is_trivial());
        for c in &chars {
            for x in 0..6u32 {
                for y in 0..6u32 {
                    let lhs = c.values[g.mul(x, y) as usize];
                    let rhs = (c.values[x as usize] + c.values[y as usize]) % c.modulus;
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn hall_tests() {
        let g = FiniteGroup::cyclic(12);
        let h = g.subgroup(&[g.pow(1, 4)]); // order 3
        assert!(g.is_hall(&h));
        let h2 = g.subgroup(&[g.pow(1, 6)]); // order 2, index 6
        assert!(!g.is_hall(&h2));
        assert!(g.is_hall(&g.trivial_subgroup()));
        assert!(g.is_hall(&g.full_subgroup()));
    }

    #[test]
    fn quotient_of_cyclic() {
        let g = FiniteGroup::cyclic(8);
        let n = g.subgroup(&[4]);
        let (q, proj, reps) = g.quotient(&n).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(proj[0], 0);
        assert_eq!(reps[0], 0);
        assert_eq!(proj[4], 0);
    }
}
