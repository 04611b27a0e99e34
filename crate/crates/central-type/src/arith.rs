//! Exact arithmetic in roots of unity and modular integers.
//!
//! Every scalar in this crate is a root of unity ζ_m^k, stored as the
//! exponent `k` modulo `m`. Nothing here is floating point.

/// Greatest common divisor of two non-negative integers.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple, panicking on overflow (moduli here are tiny).
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Extended gcd: returns `(g, x, y)` with `a*x + b*y = g`.
pub fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        let sign = if a < 0 { -1 } else { 1 };
        return (a.abs(), sign, 0);
    }
    let (g, x, y) = egcd(b, a % b);
    (g, y, x - (a / b) * y)
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = egcd(a as i64, m as i64);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i64) as u64)
}

/// Reduce a possibly negative integer into `[0, m)`.
pub fn reduce(v: i64, m: u32) -> u32 {
    v.rem_euclid(m as i64) as u32
}

/// A unit `u` mod `m` with `u * d ≡ gcd(d, m) (mod m)`.
///
/// Units act transitively on residues with a fixed gcd, so this always
/// exists. Used to normalize pivots in Howell forms.
pub fn unit_to_gcd(d: u32, m: u32) -> u32 {
    debug_assert!(m > 0);
    if d % m == 0 {
        return 1; // d ≡ 0: any unit works
    }
    let g = gcd(d as u64, m as u64) as u32;
    let d1 = (d / g) as u64;
    let m1 = (m / g) as u64;
    // d/g is invertible mod m/g; lift the inverse to a unit mod m.
    let u0 = mod_inv(d1 % m1, m1).expect("d/g coprime to m/g");
    let mut u = u0.max(1);
    while gcd(u, m as u64) != 1 {
        u += m1;
    }
    debug_assert_eq!(u as u128 * d as u128 % m as u128, (g % m) as u128);
    u as u32
}

/// A root of unity ζ_m^k held exactly as an exponent mod m.
///
/// Equality is of complex values: ζ_4^1 == ζ_8^2. The canonical form
/// divides both exponent and modulus by their gcd with the modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    modulus: u32,
    exponent: u32,
}

impl RootOfUnity {
    pub fn new(modulus: u32, exponent: i64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Self::canonical(modulus, reduce(exponent, modulus))
    }

    fn canonical(modulus: u32, exponent: u32) -> Self {
        if exponent == 0 {
            return RootOfUnity { modulus: 1, exponent: 0 };
        }
        let g = gcd(exponent as u64, modulus as u64) as u32;
        RootOfUnity { modulus: modulus / g, exponent: exponent / g }
    }

    pub fn one() -> Self {
        RootOfUnity { modulus: 1, exponent: 0 }
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    /// Multiplicative order of the value.
    pub fn order(&self) -> u32 {
        self.modulus
    }

    /// The exponent of this value with respect to ζ_m, when it lies in μ_m.
    pub fn exponent_in(&self, m: u32) -> Option<u32> {
        if m % self.modulus != 0 {
            return None;
        }
        Some(self.exponent * (m / self.modulus))
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let m = lcm(self.modulus as u64, other.modulus as u64) as u32;
        let e = (self.exponent as u64 * (m / self.modulus) as u64
            + other.exponent as u64 * (m / other.modulus) as u64)
            % m as u64;
        Self::canonical(m, e as u32)
    }

    pub fn inv(&self) -> RootOfUnity {
        Self::canonical(self.modulus, (self.modulus - self.exponent) % self.modulus)
    }

    pub fn pow(&self, k: i64) -> RootOfUnity {
        let e = (self.exponent as i64 * k).rem_euclid(self.modulus as i64) as u32;
        Self::canonical(self.modulus, e)
    }
}

impl std::fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.modulus, self.exponent) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (4, 1) => write!(f, "i"),
            (4, 3) => write!(f, "-i"),
            (m, e) => write!(f, "zeta_{}^{}", m, e),
        }
    }
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1 divided by the product of Φ_d over proper divisors d of n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = poly_div_exact(&num, &cyclotomic(d));
        }
    }
    num
}

/// Exact division of integer polynomials (panics if not exact).
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut num = num.to_vec();
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let nd = num.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = num[k + dd];
        quot[k] = c;
        if c != 0 {
            for j in 0..=dd {
                num[k + j] -= c * den[j];
            }
        }
    }
    assert!(num.iter().all(|&c| c == 0), "polynomial division not exact");
    quot
}

/// Remainder of an integer polynomial modulo a monic divisor.
pub fn poly_rem(poly: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1);
    let mut rem = poly.to_vec();
    if rem.len() <= dd {
        return rem;
    }
    for k in (dd..rem.len()).rev() {
        let c = rem[k];
        if c != 0 {
            rem[k] = 0;
            for j in 0..dd {
                rem[k - dd + j] -= c * den[j];
            }
        }
    }
    rem.truncate(dd);
    rem
}

/// True iff the exponent-indexed integer vector sums to zero as a complex
/// number: Σ v[k]·ζ_m^k = 0 exactly when Φ_m divides the polynomial.
pub fn root_sum_is_zero(v: &[i64], m: u32) -> bool {
    assert_eq!(v.len(), m as usize);
    if v.iter().all(|&c| c == 0) {
        return true;
    }
    let phi = cyclotomic(m);
    poly_rem(v, &phi).iter().all(|&c| c == 0)
}

/// Odometer over mixed radices, in lexicographic order starting at zero.
pub struct MixedRadix {
    radices: Vec<u32>,
    state: Vec<u32>,
    done: bool,
}

impl MixedRadix {
    pub fn new(radices: Vec<u32>) -> Self {
        let n = radices.len();
        let done = radices.iter().any(|&r| r == 0);
        MixedRadix { radices, state: vec![0; n], done }
    }

    pub fn total(&self) -> u64 {
        self.radices.iter().map(|&r| r as u64).product()
    }
}

impl Iterator for MixedRadix {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.state.clone();
        let mut i = self.radices.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.state[i] += 1;
            if self.state[i] < self.radices[i] {
                break;
            }
            self.state[i] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn egcd_bezout() {
        for a in -30i64..30 {
            for b in -30i64..30 {
                let (g, x, y) = egcd(a, b);
                assert_eq!(a * x + b * y, g);
                assert!(g >= 0);
            }
        }
    }

    #[test]
    fn unit_to_gcd_works() {
        for m in 2u32..60 {
            for d in 0..m {
                let u = unit_to_gcd(d, m);
                assert_eq!(gcd(u as u64, m as u64), 1);
                let g = gcd(d as u64, m as u64) as u32;
                if d != 0 {
                    assert_eq!((u as u64 * d as u64 % m as u64) as u32, g);
                }
            }
        }
    }

    #[test]
    fn roots_of_unity_canonical() {
        let i = RootOfUnity::new(4, 1);
        let z8sq = RootOfUnity::new(8, 2);
        assert_eq!(i, z8sq);
        assert_eq!(i.mul(&i), RootOfUnity::new(2, 1));
        assert_eq!(i.mul(&i.inv()), RootOfUnity::one());
        assert_eq!(i.order(), 4);
        assert_eq!(RootOfUnity::new(9, 3).order(), 3);
        assert_eq!(i.exponent_in(8), Some(2));
        assert_eq!(i.exponent_in(6), None);
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn vanishing_root_sums() {
        // 1 + ζ_3 + ζ_3^2 = 0 inside μ_9: exponents 0, 3, 6.
        let mut v = vec![0i64; 9];
        v[0] = 1;
        v[3] = 1;
        v[6] = 1;
        assert!(root_sum_is_zero(&v, 9));
        v[6] = 0;
        assert!(!root_sum_is_zero(&v, 9));
        // 1 - ζ_4^2 = 2 ≠ 0.
        let mut w = vec![0i64; 4];
        w[0] = 1;
        w[2] = -1;
        assert!(!root_sum_is_zero(&w, 4));
        // ζ_4 + ζ_4^3 = 0.
        let mut w = vec![0i64; 4];
        w[1] = 1;
        w[3] = 1;
        assert!(root_sum_is_zero(&w, 4));
    }

    #[test]
    fn mixed_radix_order() {
        let all: Vec<_> = MixedRadix::new(vec![2, 3]).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[5], vec![1, 2]);
        assert_eq!(MixedRadix::new(vec![]).count(), 1);
    }
}
