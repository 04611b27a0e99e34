//! Linear algebra over Z/m for composite m.
//!
//! Row reduction over Z/m needs more than Gaussian elimination: pivots can
//! be zero divisors, and an echelon form's row span does not expose vectors
//! whose leading coefficient is annihilated. The Howell form fixes both,
//! giving canonical coset representatives and exact membership tests.
//! Quotient group structure is extracted with an integer Smith normal form
//! on a small relation matrix.

use crate::arith::{egcd, gcd, unit_to_gcd};

/// Howell form of a subgroup of (Z/m)^n given by row generators.
///
/// Rows are kept in echelon order with pivots that divide m, entries above
/// a pivot reduced modulo it, and the span closed under annihilator
/// multiples. Reduction against the form yields canonical coset
/// representatives, so coset equality is vector equality.
#[derive(Debug, Clone)]
pub struct HowellForm {
    pub m: u32,
    pub ncols: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl HowellForm {
    pub fn new(m: u32, ncols: usize, generators: Vec<Vec<u32>>) -> Self {
        let mut h = HowellForm { m, ncols, rows: Vec::new(), pivots: Vec::new() };
        for row in generators {
            h.insert(row);
        }
        h
    }

    pub fn empty(m: u32, ncols: usize) -> Self {
        HowellForm { m, ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Order of the spanned subgroup: product over pivot rows of the order
    /// of the pivot in Z/m.
    pub fn subgroup_order(&self) -> u128 {
        let mut o: u128 = 1;
        for (r, &c) in self.rows.iter().zip(&self.pivots) {
            o *= (self.m / gcd(r[c] as u64, self.m as u64) as u32) as u128;
        }
        o
    }

    /// Insert one generator and re-close under annihilator multiples.
    pub fn insert(&mut self, row: Vec<u32>) {
        assert_eq!(row.len(), self.ncols);
        if self.m == 1 {
            return;
        }
        let mut queue = vec![row];
        while let Some(r) = queue.pop() {
            self.insert_raw(r, &mut queue);
        }
    }

    fn insert_raw(&mut self, mut row: Vec<u32>, queue: &mut Vec<Vec<u32>>) {
        let m = self.m;
        loop {
            let lead = match (0..self.ncols).find(|&c| row[c] != 0) {
                None => return,
                Some(c) => c,
            };
            let at = self.pivots.partition_point(|&p| p < lead);
            if at == self.rows.len() || self.pivots[at] > lead {
                // New pivot row: normalize so the pivot equals gcd(entry, m).
                let u = unit_to_gcd(row[lead], m);
                scale_row(&mut row, u, m);
                let piv = row[lead];
                let ann = m / gcd(piv as u64, m as u64) as u32;
                if ann > 1 {
                    let mut e = row.clone();
                    scale_row(&mut e, ann % m, m);
                    if e.iter().any(|&v| v != 0) {
                        queue.push(e);
                    }
                }
                self.rows.insert(at, row);
                self.pivots.insert(at, lead);
                self.normalize_above(at);
                return;
            }
            // Same pivot column: merge.
            let piv = self.rows[at][lead];
            let v = row[lead];
            if v % piv == 0 {
                let q = (v / piv) % m;
                let pivot_row = self.rows[at].clone();
                sub_scaled(&mut row, &pivot_row, q, m);
            } else {
                let (g, s, t) = egcd(piv as i64, v as i64);
                let g = g as u32;
                let s = s.rem_euclid(m as i64) as u64;
                let t = t.rem_euclid(m as i64) as u64;
                // [[s, t], [-v/g, piv/g]] has determinant 1, so (combo,
                // leftover) spans the same as (pivot_row, row).
                let a2 = ((m - (v / g) % m) % m) as u64;
                let b2 = ((piv / g) % m) as u64;
                let pivot_row = self.rows[at].clone();
                let mut combo = vec![0u32; self.ncols];
                let mut leftover = vec![0u32; self.ncols];
                for c in 0..self.ncols {
                    let x = pivot_row[c] as u64;
                    let y = row[c] as u64;
                    combo[c] = ((s * x + t * y) % m as u64) as u32;
                    leftover[c] = ((a2 * x + b2 * y) % m as u64) as u32;
                }
                let u = unit_to_gcd(combo[lead], m);
                scale_row(&mut combo, u, m);
                let new_ann = m / gcd(combo[lead] as u64, m as u64) as u32;
                if new_ann > 1 {
                    let mut e = combo.clone();
                    scale_row(&mut e, new_ann % m, m);
                    if e.iter().any(|&x| x != 0) {
                        queue.push(e);
                    }
                }
                self.rows[at] = combo;
                self.normalize_above(at);
                row = leftover;
            }
        }
    }

    fn normalize_above(&mut self, at: usize) {
        let lead = self.pivots[at];
        let piv = self.rows[at][lead];
        let m = self.m;
        let pivot_row = self.rows[at].clone();
        for i in 0..at {
            let q = (self.rows[i][lead] / piv) % m;
            if q != 0 {
                sub_scaled(&mut self.rows[i], &pivot_row, q, m);
            }
        }
    }

    /// Canonical representative of `v` modulo the row span.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let m = self.m;
        let mut out = v.to_vec();
        if m == 1 {
            out.iter_mut().for_each(|x| *x = 0);
            return out;
        }
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let q = (out[c] / row[c]) % m;
            if q != 0 {
                sub_scaled(&mut out, row, q, m);
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

fn scale_row(row: &mut [u32], u: u32, m: u32) {
    for v in row.iter_mut() {
        *v = (*v as u64 * u as u64 % m as u64) as u32;
    }
}

fn sub_scaled(row: &mut [u32], other: &[u32], q: u32, m: u32) {
    if q == 0 {
        return;
    }
    let qm = ((m - q) % m) as u64;
    for (v, &o) in row.iter_mut().zip(other) {
        *v = ((*v as u64 + qm * o as u64) % m as u64) as u32;
    }
}

/// A sparse linear condition Σ coeff · x[col] ≡ 0 (mod m).
pub type SparseEq = Vec<(u32, i64)>;

/// The computation ran past its wall-clock budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetExceeded;

/// Generators of the solution subgroup of a sparse homogeneous system
/// over (Z/m)^n.
///
/// Maintains row generators of the current solution space and eliminates
/// one equation at a time. Equations are evaluated in batches so the row
/// array is walked contiguously; that is what keeps the 6400-unknown
/// systems coming from order-81 groups tractable.
pub struct KernelBuilder {
    m: u32,
    ncols: usize,
    rows: Vec<Vec<u16>>,
    deadline: Option<std::time::Instant>,
}

impl KernelBuilder {
    pub fn new(m: u32, ncols: usize) -> Self {
        assert!(m > 1 && m < (1 << 15), "modulus out of supported range");
        let rows = (0..ncols)
            .map(|i| {
                let mut r = vec![0u16; ncols];
                r[i] = 1;
                r
            })
            .collect();
        KernelBuilder { m, ncols, rows, deadline: None }
    }

    pub fn with_deadline(mut self, deadline: Option<std::time::Instant>) -> Self {
        self.deadline = deadline;
        self
    }

    pub fn solve(
        mut self,
        equations: impl Iterator<Item = SparseEq>,
    ) -> Result<Vec<Vec<u32>>, BudgetExceeded> {
        let m = self.m;
        let batch_size = 512;
        let mut batch: Vec<Vec<(u32, u32)>> = Vec::with_capacity(batch_size);
        for eq in equations {
            let eq: Vec<(u32, u32)> = eq
                .into_iter()
                .filter_map(|(c, k)| {
                    let k = k.rem_euclid(m as i64) as u32;
                    if k == 0 { None } else { Some((c, k)) }
                })
                .collect();
            if eq.is_empty() {
                continue;
            }
            batch.push(eq);
            if batch.len() == batch_size {
                self.run_batch(&batch)?;
                batch.clear();
            }
        }
        if !batch.is_empty() {
            self.run_batch(&batch)?;
        }
        self.compact();
        Ok(self
            .rows
            .into_iter()
            .map(|r| r.into_iter().map(u32::from).collect())
            .collect())
    }

    fn check_deadline(&self) -> Result<(), BudgetExceeded> {
        if let Some(d) = self.deadline {
            if std::time::Instant::now() > d {
                return Err(BudgetExceeded);
            }
        }
        Ok(())
    }

    fn compact(&mut self) {
        self.rows.retain(|r| r.iter().any(|&v| v != 0));
    }

    fn run_batch(&mut self, batch: &[Vec<(u32, u32)>]) -> Result<(), BudgetExceeded> {
        self.check_deadline()?;
        self.compact();
        let m = self.m as u64;
        let nrows = self.rows.len();
        // values[e][i] = equation e applied to row i. Row-major sweep keeps
        // this pass cache-friendly.
        let mut values: Vec<Vec<u32>> = vec![vec![0u32; nrows]; batch.len()];
        for (i, row) in self.rows.iter().enumerate() {
            for (e, eq) in batch.iter().enumerate() {
                let mut acc: u64 = 0;
                for &(c, k) in eq {
                    acc += k as u64 * row[c as usize] as u64;
                }
                values[e][i] = (acc % m) as u32;
            }
        }
        for e in 0..batch.len() {
            if values[e].iter().all(|&v| v == 0) {
                continue;
            }
            self.check_deadline()?;
            let vals = values[e].clone();
            let touched = self.eliminate(&vals);
            // Row indices are stable inside a batch (dead rows are zeroed,
            // not removed), so only touched rows need re-evaluation.
            for e2 in e + 1..batch.len() {
                let eq = &batch[e2];
                for &i in &touched {
                    let row = &self.rows[i];
                    let mut acc: u64 = 0;
                    for &(c, k) in eq {
                        acc += k as u64 * row[c as usize] as u64;
                    }
                    values[e2][i] = (acc % m) as u32;
                }
            }
        }
        Ok(())
    }

    /// Replace the generator rows by generators of the kernel of the linear
    /// functional whose values on the rows are `values` (not all zero).
    /// Dead rows are zeroed in place; returns indices of changed rows.
    fn eliminate(&mut self, values: &[u32]) -> Vec<usize> {
        let m = self.m as u64;
        let mut touched: Vec<usize> = Vec::new();
        let mut acc: Option<(usize, u64)> = None;
        let mut vals: Vec<u64> = values.iter().map(|&v| v as u64).collect();
        for j in 0..self.rows.len() {
            if vals[j] == 0 {
                continue;
            }
            match acc {
                None => acc = Some((j, vals[j])),
                Some((ai, av)) => {
                    let vj = vals[j];
                    if vj % av == 0 {
                        let q = (vj / av) % m;
                        let (ra, rj) = two_rows(&mut self.rows, ai, j);
                        sub_scaled_u16(rj, ra, q as u32, self.m);
                        vals[j] = 0;
                        touched.push(j);
                    } else {
                        let (g, s, t) = egcd(av as i64, vj as i64);
                        let g = g as u64;
                        let s = s.rem_euclid(m as i64) as u64;
                        let t = t.rem_euclid(m as i64) as u64;
                        let a2 = (m - (vj / g) % m) % m;
                        let b2 = (av / g) % m;
                        let (ra, rj) = two_rows(&mut self.rows, ai, j);
                        combine_pair_u16(ra, rj, s, t, a2, b2, self.m);
                        vals[ai] = g;
                        vals[j] = 0;
                        touched.push(ai);
                        touched.push(j);
                        acc = Some((ai, g));
                    }
                }
            }
        }
        let (ai, av) = acc.expect("eliminate called with a zero functional");
        // The accumulator survives only through its annihilator multiple.
        let ann = m / gcd(av, m);
        let row = &mut self.rows[ai];
        if ann > 1 && ann < m {
            for v in row.iter_mut() {
                *v = ((*v as u64 * ann) % m) as u16;
            }
        } else {
            row.iter_mut().for_each(|v| *v = 0);
        }
        touched.push(ai);
        touched.sort_unstable();
        touched.dedup();
        touched
    }
}

fn two_rows<T>(rows: &mut [Vec<T>], a: usize, b: usize) -> (&mut Vec<T>, &mut Vec<T>) {
    assert_ne!(a, b);
    if a < b {
        let (l, r) = rows.split_at_mut(b);
        (&mut l[a], &mut r[0])
    } else {
        let (l, r) = rows.split_at_mut(a);
        (&mut r[0], &mut l[b])
    }
}

fn sub_scaled_u16(row: &mut [u16], other: &[u16], q: u32, m: u32) {
    if q == 0 {
        return;
    }
    let qm = ((m - q) % m) as u64;
    let m = m as u64;
    for (v, &o) in row.iter_mut().zip(other) {
        *v = ((*v as u64 + qm * o as u64) % m) as u16;
    }
}

fn combine_pair_u16(ra: &mut [u16], rb: &mut [u16], s: u64, t: u64, a2: u64, b2: u64, m: u32) {
    let m = m as u64;
    for (x, y) in ra.iter_mut().zip(rb.iter_mut()) {
        let xv = *x as u64;
        let yv = *y as u64;
        *x = ((s * xv + t * yv) % m) as u16;
        *y = ((a2 * xv + b2 * yv) % m) as u16;
    }
}

/// Smith normal form quotient of Z^ncols by the row span of `rel`.
///
/// Returns `(d, g)` pairs for the nontrivial cyclic factors Z/d, where `g`
/// is the integer combination of the original coordinates generating the
/// factor. The relation rows must make the quotient finite (include m·I).
pub fn smith_quotient(rel: Vec<Vec<i64>>, ncols: usize) -> Vec<(u64, Vec<i64>)> {
    let mut a = rel;
    let nrows = a.len();
    // winv tracks E^{-1} for the accumulated column transform E; quotient
    // generators in original coordinates are rows of E^{-1}.
    let mut winv: Vec<Vec<i64>> = (0..ncols)
        .map(|i| {
            let mut r = vec![0i64; ncols];
            r[i] = 1;
            r
        })
        .collect();
    let dim = nrows.min(ncols);

    loop {
        diagonalize(&mut a, &mut winv, ncols);
        // Enforce the divisibility chain d1 | d2 | ... by folding columns.
        let mut violated = None;
        for i in 0..dim.saturating_sub(1) {
            let d1 = a[i][i];
            let d2 = a[i + 1][i + 1];
            if d1 != 0 && d2 != 0 && d2 % d1 != 0 {
                violated = Some(i);
                break;
            }
        }
        match violated {
            None => break,
            Some(i) => {
                // col_i += col_{i+1}  =>  row_{i+1} of E^{-1} -= row_i.
                for row in a.iter_mut() {
                    row[i] += row[i + 1];
                }
                let wi = winv[i].clone();
                for (x, y) in winv[i + 1].iter_mut().zip(&wi) {
                    *x -= y;
                }
            }
        }
    }

    let mut out = Vec::new();
    for i in 0..dim {
        let d = a[i][i].abs();
        if d > 1 {
            out.push((d as u64, winv[i].clone()));
        }
    }
    out
}

fn diagonalize(a: &mut [Vec<i64>], winv: &mut [Vec<i64>], ncols: usize) {
    let nrows = a.len();
    let dim = nrows.min(ncols);
    let mut k = 0;
    while k < dim {
        let mut best: Option<(usize, usize)> = None;
        for i in k..nrows {
            for j in k..ncols {
                if a[i][j] != 0
                    && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let (pi, pj) = match best {
            None => return,
            Some(p) => p,
        };
        a.swap(k, pi);
        if pj != k {
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            winv.swap(k, pj);
        }
        if a[k][k] < 0 {
            for row in a.iter_mut() {
                row[k] = -row[k];
            }
            for v in winv[k].iter_mut() {
                *v = -*v;
            }
        }
        let p = a[k][k];
        let mut dirty = false;
        for i in k + 1..nrows {
            let q = div_round(a[i][k], p);
            if q != 0 {
                for j in k..ncols {
                    a[i][j] -= q * a[k][j];
                }
            }
            if a[i][k] != 0 {
                dirty = true;
            }
        }
        for j in k + 1..ncols {
            let q = div_round(a[k][j], p);
            if q != 0 {
                for row in a.iter_mut() {
                    row[j] -= q * row[k];
                }
                // col_j -= q·col_k  =>  row_k of E^{-1} += q·row_j.
                let wj = winv[j].clone();
                for (x, y) in winv[k].iter_mut().zip(&wj) {
                    *x += q * y;
                }
            }
            if a[k][j] != 0 {
                dirty = true;
            }
        }
        if !dirty {
            k += 1;
        }
    }
}

fn div_round(a: i64, b: i64) -> i64 {
    // Rounded division keeps entries small during elimination.
    let q = a / b;
    let r = a - q * b;
    if 2 * r.abs() > b.abs() {
        q + if (r < 0) != (b < 0) { -1 } else { 1 }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn howell_membership_z4() {
        let h = HowellForm::new(4, 2, vec![vec![2, 0]]);
        assert!(h.contains(&[2, 0]));
        assert!(!h.contains(&[1, 0]));
        assert!(!h.contains(&[0, 2]));
        assert_eq!(h.subgroup_order(), 2);
    }

    #[test]
    fn howell_annihilator_rows() {
        // 2·(2,1) = (0,2) is in the span but has zero leading entry; the
        // Howell closure must expose it.
        let h = HowellForm::new(4, 2, vec![vec![2, 1]]);
        assert!(h.contains(&[0, 2]));
        assert!(h.contains(&[2, 1]));
        assert!(h.contains(&[2, 3]));
        assert!(!h.contains(&[0, 1]));
        assert_eq!(h.subgroup_order(), 4);
    }

    #[test]
    fn howell_exhaustive_small() {
        // For random generator sets over (Z/8)^3, the Howell span must
        // contain exactly the brute-force span.
        let mut seed = 12345u64;
        let mut rng = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _case in 0..25 {
            let m = 8u32;
            let gens: Vec<Vec<u32>> =
                (0..2).map(|_| (0..3).map(|_| (rng() % m as u64) as u32).collect()).collect();
            let h = HowellForm::new(m, 3, gens.clone());
            // Brute-force: all combinations of the two generators.
            let mut span = std::collections::HashSet::new();
            for c1 in 0..m {
                for c2 in 0..m {
                    let v: Vec<u32> = (0..3)
                        .map(|i| (c1 * gens[0][i] + c2 * gens[1][i]) % m)
                        .collect();
                    span.insert(v);
                }
            }
            assert_eq!(h.subgroup_order() as usize, span.len());
            for v in &span {
                assert!(h.contains(v));
            }
        }
    }

    #[test]
    fn kernel_solves_dense_cases() {
        // x + y ≡ 0, x - y ≡ 0 mod 4  =>  2x ≡ 0: solutions {(0,0),(2,2)}.
        let eqs = vec![vec![(0u32, 1i64), (1, 1)], vec![(0, 1), (1, -1)]];
        let gens = KernelBuilder::new(4, 2).solve(eqs.into_iter()).unwrap();
        let h = HowellForm::new(4, 2, gens);
        assert_eq!(h.subgroup_order(), 2);
        assert!(h.contains(&[2, 2]));
        assert!(!h.contains(&[1, 1]));
    }

    #[test]
    fn kernel_matches_bruteforce_random() {
        let mut seed = 0x9e3779b9u64;
        let mut rng = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _case in 0..40 {
            let n = 4usize;
            let m = 12u32;
            let eqs: Vec<SparseEq> = (0..3)
                .map(|_| {
                    (0..n)
                        .filter_map(|c| {
                            let k = (rng() % 5) as i64 - 2;
                            if k == 0 { None } else { Some((c as u32, k)) }
                        })
                        .collect()
                })
                .collect();
            let gens = KernelBuilder::new(m, n).solve(eqs.clone().into_iter()).unwrap();
            let h = HowellForm::new(m, n, gens);
            let mut count = 0u64;
            for x0 in 0..m {
                for x1 in 0..m {
                    for x2 in 0..m {
                        for x3 in 0..m {
                            let x = [x0, x1, x2, x3];
                            let sat = eqs.iter().all(|eq| {
                                eq.iter()
                                    .map(|&(c, k)| k * x[c as usize] as i64)
                                    .sum::<i64>()
                                    .rem_euclid(m as i64)
                                    == 0
                            });
                            if sat {
                                count += 1;
                                assert!(h.contains(&x), "missing solution {:?}", x);
                            }
                        }
                    }
                }
            }
            assert_eq!(h.subgroup_order() as u64, count, "eqs {:?}", eqs);
        }
    }

    #[test]
    fn smith_quotient_structure() {
        let rel = vec![vec![2, 0], vec![0, 4], vec![8, 0], vec![0, 8]];
        let orders: Vec<u64> = smith_quotient(rel, 2).iter().map(|(d, _)| *d).collect();
        assert_eq!(orders, vec![2, 4]);
    }

    #[test]
    fn smith_quotient_divisibility_chain() {
        let rel = vec![vec![4, 0], vec![0, 6], vec![12, 0], vec![0, 12]];
        let orders: Vec<u64> = smith_quotient(rel, 2).iter().map(|(d, _)| *d).collect();
        assert_eq!(orders, vec![2, 12]);
    }

    #[test]
    fn smith_quotient_generators_valid() {
        // Z^2 / <(1,2), 4I> ≅ Z/4; the returned generator must have exact
        // order 4 in the quotient. Lattice membership: (a,b) with 2a ≡ b (4).
        let rel = vec![vec![1, 2], vec![4, 0], vec![0, 4]];
        let out = smith_quotient(rel, 2);
        assert_eq!(out.len(), 1);
        let (d, g) = &out[0];
        assert_eq!(*d, 4);
        let in_lattice = |v: (i64, i64)| (2 * v.0 - v.1).rem_euclid(4) == 0;
        for k in 1..4 {
            assert!(!in_lattice((k * g[0], k * g[1])));
        }
        assert!(in_lattice((4 * g[0], 4 * g[1])));
    }
}
