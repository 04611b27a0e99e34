//! The twisted group algebra C^f G and its semi-center.
//!
//! Basis elements multiply by u_x·u_y = f(x,y)·u_{xy}. Conjugation
//! u_g(·)u_g^{-1} makes the algebra a G-module algebra; the semi-center is
//! spanned by the semi-invariant vectors S_{(λ,x)} attached to
//! (λ,f)-regular classes. For nondegenerate f everything is decided by
//! counting: the weight spaces are one-dimensional, the map φ sending a
//! weight to the supporting G'-coset is a homomorphism, and commutativity
//! and simplicity of the semi-center correspond to the two extremes of
//! ker φ.

use std::sync::Arc;

use thiserror::Error;

use crate::arith::{gcd, lcm, root_sum_is_zero, RootOfUnity};
use crate::cocycles::{coboundary, Cocycle};
use crate::groups::{character_group, Character, FiniteGroup, Subgroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistedError {
    #[error("cocycle is degenerate; the semi-center analysis needs a nondegenerate class")]
    DegenerateCocycle,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("commutator crosscheck inconclusive at basis pair ({i}, {j})")]
    CrosscheckInconclusive { i: usize, j: usize },
    #[error("power normalization failed")]
    NormalizationFailed,
}

/// A twisted group algebra, i.e. a group together with a normalized
/// 2-cocycle and the caches the analysis needs.
#[derive(Debug, Clone)]
pub struct TwistedAlgebra {
    group: Arc<FiniteGroup>,
    cocycle: Cocycle,
    power_normalized: bool,
}

impl TwistedAlgebra {
    /// Wrap a validated cocycle; the power-normalization flag is computed,
    /// not asserted.
    pub fn new(cocycle: Cocycle) -> TwistedAlgebra {
        let group = cocycle.group().clone();
        let power_normalized =
            group.elements().all(|g| power_scalar_exp(&cocycle, g, group.order_of(g)) == 0);
        TwistedAlgebra { group, cocycle, power_normalized }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn modulus(&self) -> u32 {
        self.cocycle.modulus()
    }

    pub fn is_power_normalized(&self) -> bool {
        self.power_normalized
    }

    /// u_g·u_h = scalar·u_{gh}.
    pub fn basis_product(&self, g: u32, h: u32) -> (RootOfUnity, u32) {
        (self.cocycle.value(g, h), self.group.mul(g, h))
    }

    /// u_g·u_h·u_g^{-1} = scalar·u_{ghg^{-1}}, from three cocycle lookups.
    pub fn conjugate_basis(&self, g: u32, h: u32) -> (RootOfUnity, u32) {
        let (s, target) = self.conjugate_exp(g, h);
        (RootOfUnity::new(self.modulus(), s as i64), target)
    }

    fn conjugate_exp(&self, g: u32, h: u32) -> (u32, u32) {
        let gi = self.group.inv_of(g);
        let gh = self.group.mul(g, h);
        let m = self.modulus();
        let e = self.cocycle.entry(g, h) + m - self.cocycle.entry(g, gi) + self.cocycle.entry(gh, gi);
        (e % m, self.group.mul(gh, gi))
    }

    /// u_g^k = scalar·u_{g^k}.
    pub fn basis_power(&self, g: u32, k: u32) -> (RootOfUnity, u32) {
        let s = power_scalar_exp(&self.cocycle, g, k);
        (RootOfUnity::new(self.modulus(), s as i64), self.group.pow(g, k as i64))
    }

    /// g is f-regular when α_f(g, h) = 1 for every h commuting with g.
    pub fn is_f_regular(&self, g: u32) -> bool {
        self.group
            .elements()
            .filter(|&h| self.group.mul(g, h) == self.group.mul(h, g))
            .all(|h| self.cocycle.alpha_exp(g, h) == 0)
    }

    /// Rescale the basis so u_g^{∘(g)} = 1 for every g. Always possible
    /// over C* by a coboundary with values in a larger root group; the
    /// class is unchanged.
    pub fn power_normalize(&self) -> Result<TwistedAlgebra, TwistedError> {
        if self.power_normalized {
            return Ok(self.clone());
        }
        let g = &self.group;
        let m = self.modulus();
        let e = g.exponent();
        let orders: Vec<u32> = g.elements().map(|x| g.order_of(x)).collect();
        let tele: Vec<u32> = g
            .elements()
            .map(|x| power_scalar_exp(&self.cocycle, x, orders[x as usize]))
            .collect();
        // Smallest extension factor L | e making ∘(g)·c ≡ -t(g)·L solvable
        // mod m·L for every g.
        let mut chosen: Option<(u32, Vec<u32>)> = None;
        'outer: for l in 1..=e {
            if e % l != 0 {
                continue;
            }
            let big = m as u64 * l as u64;
            let mut c = vec![0u32; g.order()];
            for x in g.elements() {
                let k = orders[x as usize] as u64;
                let t = tele[x as usize] as u64 * l as u64 % big;
                let rhs = (big - t) % big;
                let d = gcd(k, big);
                if rhs % d != 0 {
                    continue 'outer;
                }
                let sol = (rhs / d) as i64
                    * crate::arith::egcd((k / d) as i64, (big / d) as i64).1
                    % (big / d) as i64;
                c[x as usize] = sol.rem_euclid((big / d) as i64) as u32;
            }
            chosen = Some((l, c));
            break;
        }
        let (l, c) = chosen.ok_or(TwistedError::NormalizationFailed)?;
        let big = m * l;
        let rescaled = self.cocycle.embed(big).mul(&coboundary(g, big, &c)).expect("same group");
        let reduced = rescaled.reduce_modulus();
        let out = TwistedAlgebra::new(reduced);
        if !out.power_normalized {
            return Err(TwistedError::NormalizationFailed);
        }
        Ok(out)
    }
}

/// Exponent of the scalar in u_g^k = ζ^s·u_{g^k}.
fn power_scalar_exp(f: &Cocycle, g: u32, k: u32) -> u32 {
    let group = f.group();
    let mut s = 0u64;
    let mut x = g;
    for _ in 1..k {
        s += f.entry(x, g) as u64;
        x = group.mul(x, g);
    }
    (s % f.modulus() as u64) as u32
}

/// Where every character's (λ,f)-regular classes live.
#[derive(Debug, Clone)]
pub struct RegularityReport {
    pub characters: Vec<Character>,
    pub classes: Vec<Vec<u32>>,
    /// Per character, indices into `classes` of its regular classes.
    pub regular: Vec<Vec<usize>>,
    /// The trivial-character row: the f-regular classes.
    pub f_regular_classes: Vec<usize>,
    /// dim Z(C^f G) = number of f-regular classes.
    pub center_dim: usize,
    /// Nondegenerate iff the identity class is the only f-regular one.
    pub nondegenerate: bool,
}

impl RegularityReport {
    /// Distinct class indices regular for at least one character (Γ(f)).
    pub fn gamma(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.regular.iter().flatten().copied().collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Compute the full (λ,f)-regularity table.
///
/// Regularity is a class property; the whole class is verified, not just
/// the representative. On power-normalized algebras the commuting-pair
/// scalar bound (the order of [u_a,u_b] divides gcd(∘a,∘b)) is asserted
/// as an internal consistency check.
pub fn regularity_report(alg: &TwistedAlgebra) -> Result<RegularityReport, TwistedError> {
    let g = alg.group();
    let f = alg.cocycle();
    let characters = character_group(g);
    let classes = g.conjugacy_classes();
    let m = f.modulus();
    let cm = characters[0].modulus;
    let big = lcm(m as u64, cm as u64) as u32;

    if alg.is_power_normalized() {
        for a in g.elements() {
            for b in g.elements() {
                if g.mul(a, b) == g.mul(b, a) {
                    let bound = gcd(g.order_of(a) as u64, g.order_of(b) as u64) as u32;
                    let alpha = f.value(a, b).mul(&f.value(b, a).inv());
                    if bound % alpha.order() != 0 {
                        return Err(TwistedError::InternalInconsistency(format!(
                            "commuting scalar order {} exceeds gcd bound {} at ({}, {})",
                            alpha.order(),
                            bound,
                            a,
                            b
                        )));
                    }
                }
            }
        }
    }

    let centralizers: Vec<Vec<u32>> = g
        .elements()
        .map(|x| g.elements().filter(|&h| g.mul(x, h) == g.mul(h, x)).collect())
        .collect();

    let is_regular_for = |lam: &Character, x: u32| -> bool {
        centralizers[x as usize].iter().all(|&h| {
            let a = f.alpha_exp(h, x) as u64 * (big / m) as u64;
            let l = lam.values[h as usize] as u64 * (big / cm) as u64;
            a % big as u64 == l % big as u64
        })
    };

    let mut regular: Vec<Vec<usize>> = Vec::with_capacity(characters.len());
    for lam in &characters {
        let mut row = Vec::new();
        for (ci, class) in classes.iter().enumerate() {
            let rep_regular = is_regular_for(lam, class[0]);
            // Class property: every member must agree with the representative.
            for &x in class.iter().skip(1) {
                if is_regular_for(lam, x) != rep_regular {
                    return Err(TwistedError::InternalInconsistency(format!(
                        "regularity is not constant on the class of {}",
                        class[0]
                    )));
                }
            }
            if rep_regular {
                row.push(ci);
            }
        }
        regular.push(row);
    }
    let f_regular_classes = regular[0].clone();
    let center_dim = f_regular_classes.len();
    let nondegenerate = f_regular_classes == vec![0];
    Ok(RegularityReport {
        characters,
        classes,
        regular,
        f_regular_classes,
        center_dim,
        nondegenerate,
    })
}

/// One spanning vector S_{(λ,x)} of a weight space.
#[derive(Debug, Clone)]
pub struct SemicenterVector {
    pub character: usize,
    pub class_rep: u32,
    /// Support coefficients, one root of unity per support element.
    pub support: Vec<(u32, RootOfUnity)>,
}

/// The semi-center: dimension, spanning vectors, and (for nondegenerate
/// cocycles) the φ-map data and the commutative/simple classification.
#[derive(Debug, Clone)]
pub struct SemicenterReport {
    pub sz_dim: usize,
    pub basis: Vec<SemicenterVector>,
    /// Per character: minimal representative of the coset xG' carrying its
    /// unique regular class. Only for nondegenerate cocycles.
    pub phi: Option<Vec<u32>>,
    pub phi_kernel: Option<Vec<usize>>,
    pub commutative: Option<bool>,
    pub simple: Option<bool>,
}

/// The semi-center spanning vectors: for each (λ,f)-regular class pick the
/// minimal-index left transversal T of the centralizer and accumulate
/// λ^{-1}(t)·u_t u_x u_t^{-1}. Supports of distinct classes are disjoint;
/// a different transversal changes each vector by a scalar only, so
/// consumers compare supports and dimensions, never raw coefficients.
pub fn semicenter_basis(
    alg: &TwistedAlgebra,
    report: &RegularityReport,
) -> Result<Vec<SemicenterVector>, TwistedError> {
    let g = alg.group();
    let cm = report.characters[0].modulus;
    let mut out = Vec::new();
    for (li, lam) in report.characters.iter().enumerate() {
        for &ci in &report.regular[li] {
            let x = report.classes[ci][0];
            let cent = g.centralizer(x);
            // Minimal-index coset representatives.
            let mut coset_min = std::collections::HashMap::new();
            for t in g.elements() {
                let key = cent.elements().iter().map(|&c| g.mul(t, c)).min().unwrap();
                coset_min.entry(key).or_insert(t);
            }
            let mut transversal: Vec<u32> = coset_min.values().copied().collect();
            transversal.sort_unstable();
            let mut support = Vec::new();
            for &t in &transversal {
                let (s, target) = alg.conjugate_basis(t, x);
                let li_val = RootOfUnity::new(cm, cm as i64 - lam.values[t as usize] as i64);
                support.push((target, li_val.mul(&s)));
            }
            support.sort_unstable_by_key(|&(e, _)| e);
            // Distinct cosets conjugate x to distinct elements.
            debug_assert!(support.windows(2).all(|w| w[0].0 != w[1].0));
            out.push(SemicenterVector { character: li, class_rep: x, support });
        }
    }
    Ok(out)
}

/// dim Sz(C^f G), computed two independent ways: Σ_λ |Γ(λ,f)| over the
/// weight grading, and Σ_{x∈Γ(f)} [G : G'·C_G(x)] over regular classes.
pub fn sz_dim(alg: &TwistedAlgebra, report: &RegularityReport) -> Result<usize, TwistedError> {
    let by_weights: usize = report.regular.iter().map(|r| r.len()).sum();
    let g = alg.group();
    let gp = g.commutator_subgroup();
    let mut by_classes = 0usize;
    for &ci in &report.gamma() {
        let x = report.classes[ci][0];
        let cent = g.centralizer(x);
        let mut seed: Vec<u32> = gp.elements().to_vec();
        seed.extend_from_slice(cent.elements());
        let join = g.subgroup(&seed);
        by_classes += g.order() / join.order();
    }
    if by_weights != by_classes {
        return Err(TwistedError::InternalInconsistency(format!(
            "semi-center dimension mismatch: {} by weights, {} by classes",
            by_weights, by_classes
        )));
    }
    Ok(by_weights)
}

/// The homomorphism φ: Ĝ → G/G' of a nondegenerate cocycle, as the
/// minimal coset representative per character, plus its kernel.
pub fn phi_map(
    alg: &TwistedAlgebra,
    report: &RegularityReport,
) -> Result<(Vec<u32>, Vec<usize>), TwistedError> {
    if !report.nondegenerate {
        return Err(TwistedError::DegenerateCocycle);
    }
    let g = alg.group();
    let gp = g.commutator_subgroup();
    let coset_rep =
        |x: u32| -> u32 { gp.elements().iter().map(|&h| g.mul(x, h)).min().unwrap() };
    let mut phi = Vec::with_capacity(report.characters.len());
    for (li, row) in report.regular.iter().enumerate() {
        if row.len() != 1 {
            return Err(TwistedError::InternalInconsistency(format!(
                "weight {} has {} regular classes under a nondegenerate cocycle",
                li,
                row.len()
            )));
        }
        let x = report.classes[row[0]][0];
        // The support class must sit inside a single G'-coset.
        let rep = coset_rep(x);
        if report.classes[row[0]].iter().any(|&y| coset_rep(y) != rep) {
            return Err(TwistedError::InternalInconsistency(
                "conjugacy class spread over several commutator cosets".into(),
            ));
        }
        phi.push(rep);
    }
    // φ is a homomorphism: check on all pairs via the character product.
    let chars = &report.characters;
    let find = |c: &Character| chars.iter().position(|d| d == c).unwrap();
    for i in 0..chars.len() {
        for j in 0..chars.len() {
            let k = find(&chars[i].mul(&chars[j]));
            if coset_rep(g.mul(phi[i], phi[j])) != phi[k] {
                return Err(TwistedError::InternalInconsistency(
                    "phi is not a homomorphism".into(),
                ));
            }
        }
    }
    let kernel: Vec<usize> = phi
        .iter()
        .enumerate()
        .filter_map(|(i, &c)| if c == 0 { Some(i) } else { None })
        .collect();
    Ok((phi, kernel))
}

/// Classify the semi-center of a simple twisted group algebra: it is
/// commutative iff ker φ is everything, simple iff ker φ is trivial. The
/// equivalent counting condition Σ_{x∈Γ(f)∩G'} [G:G'C_G(x)] = |Ĝ| is
/// evaluated independently and must agree.
pub fn classify_semicenter(alg: &TwistedAlgebra) -> Result<SemicenterReport, TwistedError> {
    let report = regularity_report(alg)?;
    if !report.nondegenerate {
        return Err(TwistedError::DegenerateCocycle);
    }
    let dim = sz_dim(alg, &report)?;
    let g = alg.group();
    if dim != report.characters.len() {
        return Err(TwistedError::InternalInconsistency(format!(
            "nondegenerate cocycle with sz_dim {} != |Ĝ| {}",
            dim,
            report.characters.len()
        )));
    }
    let basis = semicenter_basis(alg, &report)?;
    let (phi, kernel) = phi_map(alg, &report)?;
    let commutative = kernel.len() == report.characters.len();
    let simple = kernel == vec![0];

    // Counting form of the commutativity criterion.
    let gp = g.commutator_subgroup();
    let mut inside = 0usize;
    for &ci in &report.gamma() {
        let x = report.classes[ci][0];
        if report.classes[ci].iter().all(|&y| gp.contains(y)) {
            let cent = g.centralizer(x);
            let mut seed: Vec<u32> = gp.elements().to_vec();
            seed.extend_from_slice(cent.elements());
            let join = g.subgroup(&seed);
            inside += g.order() / join.order();
        }
    }
    if (inside == report.characters.len()) != commutative {
        return Err(TwistedError::InternalInconsistency(
            "kernel and counting criteria disagree".into(),
        ));
    }
    // Commutative semi-centers force the center into the commutator
    // subgroup.
    if commutative {
        let z = g.center();
        if !z.elements().iter().all(|&x| gp.contains(x)) {
            return Err(TwistedError::InternalInconsistency(
                "commutative semi-center with Z(G) outside G'".into(),
            ));
        }
    }
    Ok(SemicenterReport {
        sz_dim: dim,
        basis,
        phi: Some(phi),
        phi_kernel: Some(kernel),
        commutative: Some(commutative),
        simple: Some(simple),
    })
}

/// Semi-center report for possibly degenerate cocycles: dimensions and
/// basis only, no φ.
pub fn semicenter_report(alg: &TwistedAlgebra) -> Result<SemicenterReport, TwistedError> {
    let report = regularity_report(alg)?;
    if report.nondegenerate {
        return classify_semicenter(alg);
    }
    let dim = sz_dim(alg, &report)?;
    let basis = semicenter_basis(alg, &report)?;
    Ok(SemicenterReport { sz_dim: dim, basis, phi: None, phi_kernel: None, commutative: None, simple: None })
}

/// Verify that all semi-center basis vectors pairwise commute by exact
/// computation in the surrogate ring Z[x]/(x^M − 1) of integer vectors
/// indexed by exponents mod M. Equality there implies equality of the
/// complex values; a nonzero difference is additionally tested for
/// divisibility by the M-th cyclotomic polynomial, which decides
/// vanishing of the complex value exactly.
pub fn sz_commutator_crosscheck(
    alg: &TwistedAlgebra,
    basis: &[SemicenterVector],
) -> Result<bool, TwistedError> {
    let m = alg.modulus();
    let mut big = m as u64;
    for v in basis {
        for (_, c) in &v.support {
            big = lcm(big, c.order() as u64);
        }
    }
    let big = big as u32;
    let g = alg.group();
    let n = g.order();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            // coefficient vectors per group element, one order each way
            let mut fwd = vec![vec![0i64; big as usize]; n];
            let mut bwd = vec![vec![0i64; big as usize]; n];
            for &(a, ca) in &basis[i].support {
                for &(b, cb) in &basis[j].support {
                    let e = (ca.exponent_in(big).unwrap() as u64
                        + cb.exponent_in(big).unwrap() as u64
                        + alg.cocycle().entry(a, b) as u64 * (big / m) as u64)
                        % big as u64;
                    fwd[g.mul(a, b) as usize][e as usize] += 1;
                    let e2 = (ca.exponent_in(big).unwrap() as u64
                        + cb.exponent_in(big).unwrap() as u64
                        + alg.cocycle().entry(b, a) as u64 * (big / m) as u64)
                        % big as u64;
                    bwd[g.mul(b, a) as usize][e2 as usize] += 1;
                }
            }
            for x in 0..n {
                let diff: Vec<i64> =
                    fwd[x].iter().zip(&bwd[x]).map(|(&p, &q)| p - q).collect();
                if diff.iter().any(|&v| v != 0) && !root_sum_is_zero(&diff, big) {
                    return Err(TwistedError::CrosscheckInconclusive { i, j });
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycles::Cocycle;

    fn c2c2() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)))
    }

    fn nondeg_c2c2(g: &Arc<FiniteGroup>) -> Cocycle {
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
    fn trivial_algebra_center_is_class_count() {
        let g = c2c2();
        let alg = TwistedAlgebra::new(Cocycle::trivial(g.clone(), 4));
        let rep = regularity_report(&alg).unwrap();
        assert_eq!(rep.center_dim, 4);
        assert!(!rep.nondegenerate);
        assert_eq!(sz_dim(&alg, &rep).unwrap(), 4);
    }

    #[test]
    fn identity_products_are_unit() {
        let g = c2c2();
        let alg = TwistedAlgebra::new(nondeg_c2c2(&g));
        for h in 0..4 {
            let (s, t) = alg.basis_product(0, h);
            assert!(s.is_one());
            assert_eq!(t, h);
            let (s, t) = alg.conjugate_basis(0, h);
            assert!(s.is_one());
            assert_eq!(t, h);
        }
    }

    #[test]
    fn nondegenerate_on_c2c2_is_simple_everything() {
        let g = c2c2();
        let alg = TwistedAlgebra::new(nondeg_c2c2(&g));
        let rep = regularity_report(&alg).unwrap();
        assert!(rep.nondegenerate);
        assert_eq!(rep.center_dim, 1);
        let sc = classify_semicenter(&alg).unwrap();
        assert_eq!(sc.sz_dim, 4);
        // G' is trivial so φ is injective: the semi-center is simple.
        assert_eq!(sc.simple, Some(true));
        assert_eq!(sc.commutative, Some(false));
    }

    #[test]
    fn power_normalization_rescales() {
        let g = Arc::new(FiniteGroup::direct_product(
            &FiniteGroup::cyclic(4),
            &FiniteGroup::cyclic(4),
        ));
        // Standard ζ_4 pairing cocycle: u_{(1,0)(0,1)-mixed} powers pick up
        // scalars so the raw algebra is not power-normalized.
        let n = 16usize;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let xj = (x % 4) as u32;
                let yi = (y / 4) as u32;
                table[x * n + y] = (xj * yi) % 4;
            }
        }
        let f = Cocycle::new(g.clone(), 4, table).unwrap();
        let alg = TwistedAlgebra::new(f);
        assert!(!alg.is_power_normalized());
        let fixed = alg.power_normalize().unwrap();
        assert!(fixed.is_power_normalized());
        // Same class: regularity agrees.
        let r1 = regularity_report(&alg).unwrap();
        let r2 = regularity_report(&fixed).unwrap();
        assert_eq!(r1.nondegenerate, r2.nondegenerate);
        assert_eq!(r1.center_dim, r2.center_dim);
    }

    #[test]
    fn degenerate_cocycle_refused_by_classifier() {
        let g = c2c2();
        let alg = TwistedAlgebra::new(Cocycle::trivial(g, 4));
        assert!(matches!(classify_semicenter(&alg), Err(TwistedError::DegenerateCocycle)));
    }

    #[test]
    fn crosscheck_commutes_for_abelian_trivial() {
        let g = c2c2();
        let alg = TwistedAlgebra::new(Cocycle::trivial(g, 4));
        let rep = regularity_report(&alg).unwrap();
        let basis = semicenter_basis(&alg, &rep).unwrap();
        // Conjugation is trivial on an abelian group algebra: everything is
        // invariant of trivial weight, one vector per class.
        assert_eq!(basis.len(), 4);
        assert!(sz_commutator_crosscheck(&alg, &basis).unwrap());
    }
}
