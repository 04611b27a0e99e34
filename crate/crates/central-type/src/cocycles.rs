//! μ_m-valued 2-cochains, cocycles, coboundaries, the antisymmetric form
//! α_f, and the computation of H²(G, C*).
//!
//! A class of H²(G, C*) always has a representative with values in μ_m for
//! m = |G|. Two such cocycles are C*-cohomologous exactly when their ratio
//! is δc for a 1-cochain c valued in μ_{m·e}, e the exponent of G: if δc
//! is μ_m-valued then c^m is a character, so c takes values in μ_{m·e}.
//! The finite computation below is therefore exactly the C*-quotient, a
//! fact the test suite checks against independent oracles.

use std::sync::Arc;

use thiserror::Error;

use crate::arith::{gcd, lcm, MixedRadix, RootOfUnity};
use crate::groups::{abelian_structure, FiniteGroup, Subgroup};
use crate::linalg::{HowellForm, KernelBuilder, SparseEq};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("not a cocycle: identity fails at ({x}, {y}, {z})")]
    NotACocycle { x: u32, y: u32, z: u32 },
    #[error("not normalized at element {0}")]
    NotNormalized(u32),
    #[error("elements {g} and {h} do not commute")]
    NotCommuting { g: u32, h: u32 },
    #[error("table dimensions do not match the group")]
    DimensionMismatch,
    #[error("cocycles live over different groups")]
    GroupMismatch,
    #[error("resource budget exceeded")]
    ResourceBudgetExceeded,
    #[error("too many cohomology classes to enumerate")]
    TooManyClasses,
    #[error("bad cocycle file: {0}")]
    BadFormat(String),
}

/// A normalized μ_m-valued 2-cocycle as an n×n table of exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    group: Arc<FiniteGroup>,
    modulus: u32,
    table: Vec<u32>,
}

/// Check the full cocycle identity and normalization on a raw table.
pub fn validate_table(group: &FiniteGroup, modulus: u32, table: &[u32]) -> Result<(), CocycleError> {
    let n = group.order();
    if table.len() != n * n || modulus == 0 {
        return Err(CocycleError::DimensionMismatch);
    }
    if table.iter().any(|&v| v >= modulus) {
        return Err(CocycleError::DimensionMismatch);
    }
    for g in 0..n as u32 {
        if table[g as usize * n] != 0 || table[g as usize] != 0 {
            return Err(CocycleError::NotNormalized(g));
        }
    }
    let m = modulus as u64;
    for x in 0..n as u32 {
        for y in 0..n as u32 {
            let xy = group.mul(x, y);
            let fxy = table[x as usize * n + y as usize] as u64;
            for z in 0..n as u32 {
                let lhs = fxy + table[xy as usize * n + z as usize] as u64;
                let rhs = table[y as usize * n + z as usize] as u64
                    + table[x as usize * n + group.mul(y, z) as usize] as u64;
                if lhs % m != rhs % m {
                    return Err(CocycleError::NotACocycle { x, y, z });
                }
            }
        }
    }
    Ok(())
}

impl Cocycle {
    pub fn new(group: Arc<FiniteGroup>, modulus: u32, table: Vec<u32>) -> Result<Self, CocycleError> {
        validate_table(&group, modulus, &table)?;
        Ok(Cocycle { group, modulus, table })
    }

    /// Skip validation; for internal construction of values that are
    /// cocycles by arithmetic (sums of validated cocycles, coboundaries).
    pub(crate) fn new_unchecked(group: Arc<FiniteGroup>, modulus: u32, table: Vec<u32>) -> Self {
        debug_assert!(validate_table(&group, modulus, &table).is_ok());
        Cocycle { group, modulus, table }
    }

    pub fn trivial(group: Arc<FiniteGroup>, modulus: u32) -> Self {
        let n = group.order();
        Cocycle { group, modulus, table: vec![0; n * n] }
    }

    pub fn validate(&self) -> Result<(), CocycleError> {
        validate_table(&self.group, self.modulus, &self.table)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    #[inline]
    pub fn entry(&self, x: u32, y: u32) -> u32 {
        self.table[x as usize * self.group.order() + y as usize]
    }

    pub fn value(&self, x: u32, y: u32) -> RootOfUnity {
        RootOfUnity::new(self.modulus, self.entry(x, y) as i64)
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn is_trivial_table(&self) -> bool {
        self.table.iter().all(|&v| v == 0)
    }

    /// Embed into μ_m' for a multiple m' of the modulus.
    pub fn embed(&self, new_modulus: u32) -> Cocycle {
        assert!(new_modulus % self.modulus == 0, "embedding needs m | m'");
        let k = new_modulus / self.modulus;
        Cocycle {
            group: self.group.clone(),
            modulus: new_modulus,
            table: self.table.iter().map(|&v| v * k).collect(),
        }
    }

    /// Divide out a common divisor of all entries and the modulus; the
    /// complex values are unchanged.
    pub fn reduce_modulus(&self) -> Cocycle {
        let mut g = self.modulus as u64;
        for &v in &self.table {
            g = gcd(g, v as u64);
            if g == 1 {
                break;
            }
        }
        let g = g as u32;
        if g <= 1 {
            return self.clone();
        }
        Cocycle {
            group: self.group.clone(),
            modulus: self.modulus / g,
            table: self.table.iter().map(|&v| v / g).collect(),
        }
    }

    /// Pointwise product of cocycles over a common modulus.
    pub fn mul(&self, other: &Cocycle) -> Result<Cocycle, CocycleError> {
        if self.group.order() != other.group.order() {
            return Err(CocycleError::GroupMismatch);
        }
        let m = lcm(self.modulus as u64, other.modulus as u64) as u32;
        let a = self.embed(m);
        let b = other.embed(m);
        let table = a.table.iter().zip(&b.table).map(|(&x, &y)| (x + y) % m).collect();
        Ok(Cocycle { group: self.group.clone(), modulus: m, table })
    }

    pub fn inv(&self) -> Cocycle {
        let m = self.modulus;
        Cocycle {
            group: self.group.clone(),
            modulus: m,
            table: self.table.iter().map(|&v| (m - v) % m).collect(),
        }
    }

    /// The antisymmetric form α_f(g, h) = f(g,h)·f(h,g)^{-1}, defined for
    /// commuting pairs.
    pub fn alpha(&self, g: u32, h: u32) -> Result<RootOfUnity, CocycleError> {
        if self.group.mul(g, h) != self.group.mul(h, g) {
            return Err(CocycleError::NotCommuting { g, h });
        }
        Ok(RootOfUnity::new(self.modulus, self.entry(g, h) as i64 - self.entry(h, g) as i64))
    }

    /// α exponent mod m without the commutation check, for callers that
    /// already iterate over centralizers.
    #[inline]
    pub fn alpha_exp(&self, g: u32, h: u32) -> u32 {
        let m = self.modulus;
        (self.entry(g, h) + m - self.entry(h, g)) % m
    }

    /// Restrict to a subgroup, reindexed as its own group. Also returns
    /// the element map from new indices to parent indices.
    pub fn restrict(&self, sub: &Subgroup) -> Result<(Cocycle, Vec<u32>), CocycleError> {
        let (h, map) = sub.as_group(&self.group).map_err(|_| CocycleError::GroupMismatch)?;
        let k = h.order();
        let mut table = vec![0u32; k * k];
        for i in 0..k {
            for j in 0..k {
                table[i * k + j] = self.entry(map[i], map[j]);
            }
        }
        let c = Cocycle::new(Arc::new(h), self.modulus, table)?;
        Ok((c, map))
    }

    /// Serialize in the exchange format: a header line then n rows of
    /// space-separated exponents.
    pub fn to_text(&self, group_id: &str) -> String {
        let n = self.group.order();
        let mut out = format!("cocycle modulus={} group={} n={}\n", self.modulus, group_id, n);
        for x in 0..n {
            let row: Vec<String> = (0..n).map(|y| self.table[x * n + y].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parse the exchange format against a known group.
    pub fn parse_text(group: Arc<FiniteGroup>, text: &str) -> Result<(Cocycle, String), CocycleError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| CocycleError::BadFormat("empty file".into()))?;
        let mut modulus = None;
        let mut gid = String::new();
        let mut n = None;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("cocycle") {
            return Err(CocycleError::BadFormat("missing 'cocycle' header".into()));
        }
        for p in parts {
            if let Some(v) = p.strip_prefix("modulus=") {
                modulus = v.parse::<u32>().ok();
            } else if let Some(v) = p.strip_prefix("group=") {
                gid = v.to_string();
            } else if let Some(v) = p.strip_prefix("n=") {
                n = v.parse::<usize>().ok();
            }
        }
        let modulus = modulus.ok_or_else(|| CocycleError::BadFormat("missing modulus".into()))?;
        let n = n.ok_or_else(|| CocycleError::BadFormat("missing n".into()))?;
        if n != group.order() {
            return Err(CocycleError::BadFormat(format!(
                "cocycle is on {} elements but the group has {}",
                n,
                group.order()
            )));
        }
        let mut table = Vec::with_capacity(n * n);
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            for tok in line.split_whitespace() {
                let v: u32 =
                    tok.parse().map_err(|_| CocycleError::BadFormat(format!("bad entry '{}'", tok)))?;
                table.push(v);
            }
        }
        if table.len() != n * n {
            return Err(CocycleError::BadFormat(format!(
                "expected {} entries, found {}",
                n * n,
                table.len()
            )));
        }
        Ok((Cocycle::new(group, modulus, table)?, gid))
    }
}

/// The coboundary δc of a normalized 1-cochain c (exponents mod m):
/// (δc)(x, y) = c(x) + c(y) − c(xy).
pub fn coboundary(group: &Arc<FiniteGroup>, modulus: u32, c: &[u32]) -> Cocycle {
    let n = group.order();
    assert_eq!(c.len(), n);
    assert_eq!(c[0] % modulus, 0, "1-cochains are normalized at the identity");
    let m = modulus as u64;
    let mut table = vec![0u32; n * n];
    for x in 0..n as u32 {
        for y in 0..n as u32 {
            let xy = group.mul(x, y);
            let v = (c[x as usize] as u64 % m + c[y as usize] as u64 % m + m
                - c[xy as usize] as u64 % m)
                % m;
            table[x as usize * n + y as usize] = v as u32;
        }
    }
    Cocycle::new_unchecked(group.clone(), modulus, table)
}

// Vector encoding for linear algebra: entries at pairs (x, y), x, y ≠ 1.

fn to_vector(c: &Cocycle) -> Vec<u32> {
    let n = c.group.order();
    let k = n - 1;
    let mut v = vec![0u32; k * k];
    for x in 1..n {
        for y in 1..n {
            v[(x - 1) * k + (y - 1)] = c.table[x * n + y];
        }
    }
    v
}

fn from_vector(group: &Arc<FiniteGroup>, modulus: u32, v: &[u32]) -> Cocycle {
    let n = group.order();
    let k = n - 1;
    let mut table = vec![0u32; n * n];
    for x in 1..n {
        for y in 1..n {
            table[x * n + y] = v[(x - 1) * k + (y - 1)] % modulus;
        }
    }
    Cocycle::new_unchecked(group.clone(), modulus, table)
}

/// Membership oracle for "is this μ_m-valued cocycle a C*-coboundary":
/// the subgroup generated by μ_m-valued coboundaries together with the
/// carry cocycles of a character basis (the divided coboundaries coming
/// from μ_{m·e}-valued 1-cochains).
pub struct CoboundaryTester {
    modulus: u32,
    howell: HowellForm,
}

impl CoboundaryTester {
    pub fn new(group: &Arc<FiniteGroup>, modulus: u32) -> Self {
        let n = group.order();
        let k = n.saturating_sub(1);
        let mut gens: Vec<Vec<u32>> = Vec::new();
        if n > 1 && modulus > 1 {
            for g in 1..n {
                let mut c = vec![0u32; n];
                c[g] = 1;
                gens.push(to_vector(&coboundary(group, modulus, &c)));
            }
            for carry in character_carries(group, modulus) {
                gens.push(to_vector(&carry));
            }
        }
        CoboundaryTester { modulus, howell: HowellForm::new(modulus.max(1), k * k, gens) }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_coboundary(&self, f: &Cocycle) -> bool {
        assert_eq!(f.modulus, self.modulus);
        self.howell.contains(&to_vector(f))
    }

    fn reduce_vec(&self, v: &[u32]) -> Vec<u32> {
        self.howell.reduce(v)
    }

    fn insert(&mut self, v: Vec<u32>) {
        self.howell.insert(v);
    }

    fn contains_vec(&self, v: &[u32]) -> bool {
        self.howell.contains(v)
    }
}

/// The carry cocycles b_χ(x,y) = [χ(x) + χ(y) wraps past e] for a basis of
/// characters lifted to μ_e, e = exp(G). Together with ordinary μ_m
/// coboundaries these generate every μ_m-valued C*-coboundary.
fn character_carries(group: &Arc<FiniteGroup>, modulus: u32) -> Vec<Cocycle> {
    let n = group.order();
    let e = group.exponent() as u64;
    if e <= 1 {
        return Vec::new();
    }
    let gprime = group.commutator_subgroup();
    let (q, proj, _) = group.quotient(&gprime).expect("G' is normal");
    let st = match abelian_structure(&q) {
        Ok(st) => st,
        Err(_) => return Vec::new(),
    };
    let mut out = Vec::new();
    for (i, &d) in st.invariant_factors.iter().enumerate() {
        // χ_i in exponent form, lifted into μ_e.
        let chi: Vec<u64> = (0..n)
            .map(|x| st.coords[proj[x] as usize][i] as u64 * (e / d as u64))
            .collect();
        let mut table = vec![0u32; n * n];
        for x in 0..n as u32 {
            for y in 0..n as u32 {
                let xy = group.mul(x, y);
                let v = chi[x as usize] + chi[y as usize] - chi[xy as usize];
                debug_assert!(v % e == 0);
                table[x as usize * n + y as usize] = ((v / e) % modulus as u64) as u32;
            }
        }
        out.push(Cocycle::new_unchecked(group.clone(), modulus, table));
    }
    out
}

/// Whether two cocycles represent the same class of H²(G, C*).
pub fn cohomologous(f1: &Cocycle, f2: &Cocycle) -> Result<bool, CocycleError> {
    if f1.group.order() != f2.group.order() {
        return Err(CocycleError::GroupMismatch);
    }
    let m = lcm(f1.modulus as u64, f2.modulus as u64) as u32;
    let diff = f1.embed(m).mul(&f2.embed(m).inv())?;
    let tester = CoboundaryTester::new(&f1.group, m);
    Ok(tester.is_coboundary(&diff))
}

/// A basis of H²(G, C*) by explicit cocycle representatives.
#[derive(Debug, Clone)]
pub struct CohomologyBasis {
    pub group: Arc<FiniteGroup>,
    pub modulus: u32,
    pub generators: Vec<Cocycle>,
    /// Orders of the generator classes (the elementary divisors); the
    /// class count is their product.
    pub orders: Vec<u32>,
}

impl CohomologyBasis {
    pub fn class_count(&self) -> u64 {
        self.orders.iter().map(|&d| d as u64).product()
    }
}

/// Caps for the H² computation.
#[derive(Debug, Clone)]
pub struct H2Options {
    /// Largest group order attempted (the equation system grows as n³).
    pub order_cap: usize,
    /// Abort if the class group outgrows this.
    pub class_cap: u64,
    /// Optional wall-clock deadline.
    pub deadline: Option<std::time::Instant>,
}

impl Default for H2Options {
    fn default() -> Self {
        H2Options { order_cap: 100, class_cap: 1 << 20, deadline: None }
    }
}

/// Compute a basis of H²(G, C*).
///
/// Cocycles are stored over μ_m with m = |G|; the coboundary subgroup is
/// taken over μ_{m·e} cochains as explained in the module docs. Abelian
/// groups take the exact bilinear-form route: the antisymmetric form α_f
/// determines the class, every alternating form arises from a bilinear
/// cocycle, and the pairwise gcd structure falls out.
pub fn h2_basis(group: &Arc<FiniteGroup>, opts: &H2Options) -> Result<CohomologyBasis, CocycleError> {
    let n = group.order();
    if n > opts.order_cap {
        return Err(CocycleError::ResourceBudgetExceeded);
    }
    if n == 1 {
        return Ok(CohomologyBasis {
            group: group.clone(),
            modulus: 1,
            generators: vec![],
            orders: vec![],
        });
    }
    let m = n as u32;
    if group.is_abelian() {
        return h2_basis_abelian(group, m);
    }
    h2_basis_generic(group, m, opts)
}

fn h2_basis_abelian(group: &Arc<FiniteGroup>, m: u32) -> Result<CohomologyBasis, CocycleError> {
    let st = abelian_structure(group).expect("abelian input");
    let n = group.order();
    let k = st.invariant_factors.len();
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let d = gcd(st.invariant_factors[i] as u64, st.invariant_factors[j] as u64) as u32;
            if d <= 1 {
                continue;
            }
            let step = m / d;
            let mut table = vec![0u32; n * n];
            for x in 0..n {
                for y in 0..n {
                    let xj = st.coords[x][j] as u64;
                    let yi = st.coords[y][i] as u64;
                    table[x * n + y] = (((xj * yi) % d as u64) as u32) * step;
                }
            }
            generators.push(Cocycle::new_unchecked(group.clone(), m, table));
            orders.push(d);
        }
    }
    Ok(CohomologyBasis { group: group.clone(), modulus: m, generators, orders })
}

fn h2_basis_generic(
    group: &Arc<FiniteGroup>,
    m: u32,
    opts: &H2Options,
) -> Result<CohomologyBasis, CocycleError> {
    let n = group.order();
    let k = n - 1;
    let ncols = k * k;
    let col = |x: u32, y: u32| -> u32 { ((x - 1) as usize * k + (y - 1) as usize) as u32 };

    // Normalized cocycle identities over triples of non-identity elements;
    // triples touching the identity hold automatically.
    let g2 = group.clone();
    let equations = (1..n as u32).flat_map(move |x| {
        let group = g2.clone();
        (1..n as u32).flat_map(move |y| {
            let group = group.clone();
            (1..n as u32).map(move |z| {
                let mut eq: SparseEq = Vec::with_capacity(4);
                let xy = group.mul(x, y);
                let yz = group.mul(y, z);
                eq.push((col(x, y), 1));
                if xy != 0 {
                    eq.push((col(xy, z), 1));
                }
                eq.push((col(y, z), -1));
                if yz != 0 {
                    eq.push((col(x, yz), -1));
                }
                eq.sort_unstable_by_key(|&(c, _)| c);
                let mut merged: SparseEq = Vec::with_capacity(eq.len());
                for (c, v) in eq {
                    match merged.last_mut() {
                        Some((lc, lv)) if *lc == c => *lv += v,
                        _ => merged.push((c, v)),
                    }
                }
                merged.retain(|&(_, v)| v != 0);
                merged
            })
        })
    });

    let kernel = KernelBuilder::new(m, ncols)
        .with_deadline(opts.deadline)
        .solve(equations)
        .map_err(|_| CocycleError::ResourceBudgetExceeded)?;

    let mut span = CoboundaryTester::new(group, m);
    let mut class_gens: Vec<Vec<u32>> = Vec::new();
    for z in &kernel {
        if !span.contains_vec(z) {
            class_gens.push(z.clone());
            span.insert(z.clone());
        }
    }
    // Clean coboundary form for canonical class keys.
    let b = CoboundaryTester::new(group, m);

    if class_gens.is_empty() {
        return Ok(CohomologyBasis {
            group: group.clone(),
            modulus: m,
            generators: vec![],
            orders: vec![],
        });
    }

    // Closure of the class group with one representation per element; the
    // closure edges feed the relation lattice of the chosen generators.
    let r = class_gens.len();
    let mut index: std::collections::HashMap<Vec<u32>, usize> = Default::default();
    let mut reps: Vec<Vec<u32>> = Vec::new();
    let mut vecs: Vec<Vec<u32>> = Vec::new();
    let mut relations: Vec<Vec<i64>> = Vec::new();
    let zero_key = b.reduce_vec(&vec![0u32; ncols]);
    index.insert(zero_key.clone(), 0);
    reps.push(vec![0u32; r]);
    vecs.push(zero_key);
    let mut head = 0usize;
    while head < reps.len() {
        if let Some(d) = opts.deadline {
            if std::time::Instant::now() > d {
                return Err(CocycleError::ResourceBudgetExceeded);
            }
        }
        let cur = head;
        head += 1;
        for (j, gj) in class_gens.iter().enumerate() {
            let mut sum = vecs[cur].clone();
            for (s, &g) in sum.iter_mut().zip(gj) {
                *s = (*s + g) % m;
            }
            let key = b.reduce_vec(&sum);
            let mut rep = reps[cur].clone();
            rep[j] = (rep[j] + 1) % m;
            match index.get(&key) {
                Some(&existing) => {
                    let rel: Vec<i64> = rep
                        .iter()
                        .zip(&reps[existing])
                        .map(|(&a, &bv)| a as i64 - bv as i64)
                        .collect();
                    if rel.iter().any(|&v| v != 0) {
                        relations.push(rel);
                    }
                }
                None => {
                    if reps.len() as u64 >= opts.class_cap {
                        return Err(CocycleError::ResourceBudgetExceeded);
                    }
                    index.insert(key.clone(), reps.len());
                    reps.push(rep);
                    vecs.push(key);
                }
            }
        }
    }
    let class_count = reps.len() as u128;

    for i in 0..r {
        let mut rel = vec![0i64; r];
        rel[i] = m as i64;
        relations.push(rel);
    }
    let quotient = crate::linalg::smith_quotient(relations, r);
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    for (d, combo) in quotient {
        let mut v = vec![0u32; ncols];
        for (j, &c) in combo.iter().enumerate() {
            let c = c.rem_euclid(m as i64) as u64;
            if c == 0 {
                continue;
            }
            for (t, &g) in v.iter_mut().zip(&class_gens[j]) {
                *t = ((*t as u64 + c * g as u64) % m as u64) as u32;
            }
        }
        // Exact order d, with d·gen a genuine coboundary.
        let mut power = vec![0u32; ncols];
        for (t, &g) in power.iter_mut().zip(&v) {
            *t = ((d % m as u64) * g as u64 % m as u64) as u32;
        }
        assert!(b.contains_vec(&power), "basis generator order is wrong");
        generators.push(from_vector(group, m, &v));
        orders.push(d as u32);
    }
    let product: u128 = orders.iter().map(|&d| d as u128).product();
    assert_eq!(product, class_count, "basis does not span the class group");
    Ok(CohomologyBasis { group: group.clone(), modulus: m, generators, orders })
}

/// Representatives of every cohomology class, one per class, in
/// mixed-radix counter order over the basis exponents. The first
/// representative is always the trivial cocycle.
pub fn enumerate_classes(basis: &CohomologyBasis, cap: u64) -> Result<Vec<Cocycle>, CocycleError> {
    if basis.class_count() > cap {
        return Err(CocycleError::TooManyClasses);
    }
    let n = basis.group.order();
    let m = basis.modulus;
    let mut out = Vec::new();
    for tuple in MixedRadix::new(basis.orders.clone()) {
        let mut table = vec![0u32; n * n];
        for (i, &t) in tuple.iter().enumerate() {
            if t == 0 {
                continue;
            }
            for (acc, &v) in table.iter_mut().zip(basis.generators[i].table()) {
                *acc = ((*acc as u64 + t as u64 * v as u64) % m as u64) as u32;
            }
        }
        out.push(Cocycle::new_unchecked(basis.group.clone(), m, table));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: FiniteGroup) -> Arc<FiniteGroup> {
        Arc::new(g)
    }

    fn c2c2() -> Arc<FiniteGroup> {
        arc(FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)))
    }

    fn nondeg_c2c2(g: &Arc<FiniteGroup>) -> Cocycle {
        // f((a1,a2),(b1,b2)) = (-1)^{a2 b1} in μ_2 ⊂ μ_4.
        let n = 4usize;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let a2 = (x % 2) as u32;
                let b1 = (y / 2) as u32;
                table[x * n + y] = 2 * ((a2 * b1) % 2);
            }
        }
        Cocycle::new(g.clone(), 4, table).unwrap()
    }

    #[test]
    fn trivial_cocycle_validates() {
        let f = Cocycle::trivial(c2c2(), 4);
        assert!(f.validate().is_ok());
    }

    #[test]
    fn bad_table_yields_witness() {
        let g = c2c2();
        let mut table = vec![0u32; 16];
        table[4 + 1] = 1;
        match validate_table(&g, 4, &table) {
            Err(CocycleError::NotACocycle { .. }) => {}
            other => panic!("expected NotACocycle, got {:?}", other),
        }
    }

    #[test]
    fn coboundaries_validate_and_are_trivial_classes() {
        let g = c2c2();
        let c = vec![0u32, 1, 2, 3];
        let f = coboundary(&g, 4, &c);
        assert!(f.validate().is_ok());
        let t = Cocycle::trivial(g.clone(), 4);
        assert!(cohomologous(&f, &t).unwrap());
    }

    #[test]
    fn nondegenerate_on_c2c2_not_cohomologous_to_trivial() {
        let g = c2c2();
        let f = nondeg_c2c2(&g);
        let t = Cocycle::trivial(g, 4);
        assert!(!cohomologous(&f, &t).unwrap());
        assert!(cohomologous(&f, &f).unwrap());
    }

    #[test]
    fn h2_of_cyclic_is_trivial() {
        for n in [1usize, 2, 3, 8, 12, 17, 32] {
            let g = arc(FiniteGroup::cyclic(n));
            let b = h2_basis(&g, &H2Options::default()).unwrap();
            assert_eq!(b.class_count(), 1, "C_{} should have trivial H²", n);
            let reps = enumerate_classes(&b, 1 << 20).unwrap();
            assert_eq!(reps.len(), 1);
            assert!(reps[0].is_trivial_table());
        }
    }

    #[test]
    fn h2_of_c2c2() {
        let g = c2c2();
        let b = h2_basis(&g, &H2Options::default()).unwrap();
        assert_eq!(b.orders, vec![2]);
        let reps = enumerate_classes(&b, 16).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(!cohomologous(&reps[0], &reps[1]).unwrap());
    }

    #[test]
    fn h2_of_c4c4() {
        let g = arc(FiniteGroup::direct_product(&FiniteGroup::cyclic(4), &FiniteGroup::cyclic(4)));
        let b = h2_basis(&g, &H2Options::default()).unwrap();
        assert_eq!(b.orders, vec![4]);
    }

    #[test]
    fn order_cap_is_enforced() {
        let g = arc(FiniteGroup::cyclic(8));
        let opts = H2Options { order_cap: 4, ..Default::default() };
        assert!(matches!(h2_basis(&g, &opts), Err(CocycleError::ResourceBudgetExceeded)));
    }

    #[test]
    fn alpha_is_antisymmetric() {
        let g = c2c2();
        let f = nondeg_c2c2(&g);
        for x in 0..4 {
            for y in 0..4 {
                let a = f.alpha(x, y).unwrap();
                let b = f.alpha(y, x).unwrap();
                assert!(a.mul(&b).is_one());
            }
        }
    }

    #[test]
    fn restrict_to_trivial_subgroup() {
        let g = c2c2();
        let f = Cocycle::trivial(g.clone(), 4);
        let sub = g.trivial_subgroup();
        let (rf, map) = f.restrict(&sub).unwrap();
        assert_eq!(rf.group().order(), 1);
        assert_eq!(map, vec![0]);
    }

    #[test]
    fn text_roundtrip_is_bit_exact() {
        let g = c2c2();
        let f = nondeg_c2c2(&g);
        let text = f.to_text("test");
        let (f2, gid) = Cocycle::parse_text(g, &text).unwrap();
        assert_eq!(gid, "test");
        assert_eq!(f, f2);
        assert_eq!(f2.to_text("test"), text);
    }
}
