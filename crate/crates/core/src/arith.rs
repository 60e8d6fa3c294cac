//! Exact integer arithmetic: extended gcd, CRT reconstruction, the residue
//! map, coprimality checks, and small factoring utilities.
//!
//! Everything here is exact big-integer arithmetic; no floating point.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Errors from the arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// Two moduli share a nontrivial factor where coprimality is required.
    NonCoprimeModuli,
    /// An empty residue system was given.
    EmptyResidues,
    /// A residue is not reduced modulo its modulus.
    ResidueOutOfRange,
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::NonCoprimeModuli => write!(f, "moduli are not pairwise coprime"),
            ArithError::EmptyResidues => write!(f, "residue system is empty"),
            ArithError::ResidueOutOfRange => write!(f, "residue not reduced modulo its modulus"),
        }
    }
}

impl core::error::Error for ArithError {}

/// A Bezout identity `u*a + v*b = g` with `g = gcd(a, b)`.
///
/// `u` is normalized to the representative of minimal absolute value in its
/// residue class modulo `b/g` (ties broken toward the positive one), so the
/// triple returned for given inputs is canonical. The one exception is
/// `a = 1`, which always yields the identity witness `(1, 1, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutTriple {
    pub g: BigUint,
    pub u: BigInt,
    pub v: BigInt,
}

impl BezoutTriple {
    /// Checks `u*a + v*b = g` and `g | a`, `g | b` for the given inputs.
    pub fn verify(&self, a: &BigUint, b: &BigUint) -> bool {
        let a = BigInt::from(a.clone());
        let b = BigInt::from(b.clone());
        let g = BigInt::from(self.g.clone());
        &self.u * &a + &self.v * &b == g
            && (&a % &g).is_zero()
            && (&b % &g).is_zero()
    }
}

/// Extended Euclidean algorithm on positive integers.
///
/// Returns the canonical [`BezoutTriple`] for `(a, b)`.
///
/// Panics if `a` or `b` is zero.
pub fn ext_gcd(a: &BigUint, b: &BigUint) -> BezoutTriple {
    assert!(!a.is_zero() && !b.is_zero(), "ext_gcd requires positive inputs");
    if a.is_one() {
        return BezoutTriple { g: BigUint::one(), u: BigInt::one(), v: BigInt::zero() };
    }

    let (mut r0, mut r1) = (BigInt::from(a.clone()), BigInt::from(b.clone()));
    let (mut u0, mut u1) = (BigInt::one(), BigInt::zero());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = core::mem::replace(&mut r1, r2);
        let u2 = &u0 - &q * &u1;
        u0 = core::mem::replace(&mut u1, u2);
    }
    let g = r0.to_biguint().expect("gcd of positive integers is positive");

    // Reduce u to the minimal-|u| representative modulo b/g.
    let m = BigInt::from(b / &g);
    let u = if m.is_one() {
        // b divides a; u = 0 works and is minimal.
        BigInt::zero()
    } else {
        let mut u = u0.mod_floor(&m);
        let alt = &u - &m;
        if alt.abs() < u.abs() {
            u = alt;
        }
        u
    };
    let v = (BigInt::from(g.clone()) - &u * BigInt::from(a.clone())) / BigInt::from(b.clone());
    BezoutTriple { g, u, v }
}

/// A system of congruences `x = value (mod modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueVector {
    entries: Vec<(BigUint, BigUint)>,
}

impl ResidueVector {
    /// Builds a residue system, validating `value < modulus` for every entry.
    pub fn new(entries: Vec<(BigUint, BigUint)>) -> Result<Self, ArithError> {
        if entries.is_empty() {
            return Err(ArithError::EmptyResidues);
        }
        for (value, modulus) in &entries {
            if value >= modulus {
                return Err(ArithError::ResidueOutOfRange);
            }
        }
        Ok(ResidueVector { entries })
    }

    pub fn from_u64(entries: &[(u64, u64)]) -> Result<Self, ArithError> {
        Self::new(
            entries
                .iter()
                .map(|&(v, m)| (BigUint::from(v), BigUint::from(m)))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[(BigUint, BigUint)] {
        &self.entries
    }
}

/// Reconstructs the unique `x` in `[0, prod moduli)` matching every residue.
///
/// Fails with [`ArithError::NonCoprimeModuli`] if any two moduli share a
/// factor.
pub fn crt_reconstruct(residues: &ResidueVector) -> Result<BigUint, ArithError> {
    let mut entries = residues.entries.iter();
    let (r, m) = entries.next().ok_or(ArithError::EmptyResidues)?;
    let mut x = r.clone();
    let mut modulus = m.clone();
    for (r, m) in entries {
        let bez = ext_gcd(&modulus, m);
        if !bez.g.is_one() {
            return Err(ArithError::NonCoprimeModuli);
        }
        // x' = x + modulus * t with t = (r - x) * modulus^-1 mod m.
        let inv = bez.u.mod_floor(&BigInt::from(m.clone()));
        let diff = BigInt::from(r.clone()) - BigInt::from(x.clone());
        let t = (diff * inv).mod_floor(&BigInt::from(m.clone()));
        x += &modulus * t.to_biguint().expect("mod_floor of positive modulus");
        modulus *= m;
    }
    Ok(x)
}

/// The residue map: `x -> (x mod q_1, ..., x mod q_n)`.
///
/// Range checking against the amplitude is done by the caller (the moduli
/// alone do not carry it); see `ModuliVector::residue_map`.
pub fn residue_map(x: &BigUint, moduli: &[u64]) -> Vec<u64> {
    moduli
        .iter()
        .map(|&q| {
            let r = x % BigUint::from(q);
            r.iter_u64_digits().next().unwrap_or(0)
        })
        .collect()
}

/// True iff `gcd(q_i, q_j) = 1` for all `i < j`.
pub fn pairwise_coprime(moduli: &[u64]) -> bool {
    for (i, &a) in moduli.iter().enumerate() {
        for &b in &moduli[i + 1..] {
            if a.gcd(&b) != 1 {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// u64 factoring (Miller-Rabin + Pollard rho), used for the exact rational
// fallback when comparing log-ratio values.
// ---------------------------------------------------------------------------

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    // Floyd cycle detection; n must be an odd composite.
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y) = (2u64, 2u64);
        let d = loop {
            x = f(x);
            y = f(f(y));
            if x == y {
                break n; // cycle without factor; retry with a new constant
            }
            let d = x.abs_diff(y).gcd(&n);
            if d != 1 {
                break d;
            }
        };
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization of a u64 as `(prime, exponent)` pairs, ascending.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors: Vec<u64> = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while n % p == 0 {
            factors.push(p);
            n /= p;
        }
    }
    let mut stack = Vec::new();
    if n > 1 {
        stack.push(n);
    }
    while let Some(m) = stack.pop() {
        if is_prime_u64(m) {
            factors.push(m);
        } else {
            let d = pollard_rho(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    factors.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in factors {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn ext_gcd_small() {
        let t = ext_gcd(&big(6), &big(35));
        assert_eq!((t.g.clone(), t.u.clone(), t.v.clone()), (big(1), BigInt::from(6), BigInt::from(-1)));
        assert!(t.verify(&big(6), &big(35)));
    }

    #[test]
    fn ext_gcd_identity_case() {
        for k in [1u64, 2, 7, 35650] {
            let t = ext_gcd(&big(1), &big(k));
            assert_eq!((t.g.clone(), t.u.clone(), t.v.clone()), (big(1), BigInt::one(), BigInt::zero()));
        }
    }

    #[test]
    fn ext_gcd_group_products() {
        // 37*41*47 and 23*31*50
        let t = ext_gcd(&big(71299), &big(35650));
        assert_eq!((t.g.clone(), t.u.clone(), t.v.clone()), (big(1), BigInt::from(-1), BigInt::from(2)));
        assert!(t.verify(&big(71299), &big(35650)));
    }

    #[test]
    fn ext_gcd_divisor_case() {
        let t = ext_gcd(&big(6), &big(3));
        assert_eq!((t.g.clone(), t.u.clone(), t.v.clone()), (big(3), BigInt::zero(), BigInt::one()));
    }

    #[test]
    fn crt_reconstructs_table_generator() {
        let rv = ResidueVector::from_u64(&[(3, 71299), (1, 35650)]).unwrap();
        let x = crt_reconstruct(&rv).unwrap();
        assert_eq!(x, big(142601));
        assert_eq!(&x % big(71299), big(3));
        assert_eq!(&x % big(35650), big(1));
    }

    #[test]
    fn crt_single_and_constant() {
        let rv = ResidueVector::from_u64(&[(0, 97)]).unwrap();
        assert_eq!(crt_reconstruct(&rv).unwrap(), big(0));
        let rv = ResidueVector::from_u64(&[(1, 2), (1, 3), (1, 5)]).unwrap();
        assert_eq!(crt_reconstruct(&rv).unwrap(), big(1));
    }

    #[test]
    fn crt_rejects_shared_factor() {
        let rv = ResidueVector::from_u64(&[(1, 4), (2, 6)]).unwrap();
        assert_eq!(crt_reconstruct(&rv), Err(ArithError::NonCoprimeModuli));
    }

    #[test]
    fn residue_map_examples() {
        assert_eq!(residue_map(&big(0), &[2, 3, 5]), vec![0, 0, 0]);
        assert_eq!(residue_map(&big(3), &[2, 3, 5]), vec![1, 0, 3]);
    }

    #[test]
    fn residue_map_table_generator() {
        let q = [37u64, 41, 47, 23, 31, 50];
        let word = residue_map(&big(142601), &q);
        // congruent to 3 mod 37*41*47 and 1 mod 23*31*50
        assert_eq!(word, residue_map(&(big(3) + big(71299) * big(1)), &q[..3]).iter().chain(residue_map(&big(1), &q[3..]).iter()).copied().collect::<Vec<_>>());
        let rv = ResidueVector::new(q.iter().zip(&word).map(|(&m, &r)| (big(r), big(m))).collect()).unwrap();
        assert_eq!(crt_reconstruct(&rv).unwrap(), big(142601));
    }

    #[test]
    fn coprimality() {
        assert!(pairwise_coprime(&[2, 3, 5]));
        assert!(!pairwise_coprime(&[2, 3, 4]));
        assert!(pairwise_coprime(&[37, 41, 47, 23, 31, 50]));
    }

    #[test]
    fn factoring() {
        assert_eq!(factor_u64(1), vec![]);
        assert_eq!(factor_u64(2), vec![(2, 1)]);
        assert_eq!(factor_u64(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor_u64(71299), vec![(37, 1), (41, 1), (47, 1)]);
        assert_eq!(factor_u64(1_000_000_007), vec![(1_000_000_007, 1)]);
        // semiprime of two 31-bit primes
        let n = 2_147_483_647u64 * 2_147_483_629;
        assert_eq!(factor_u64(n), vec![(2_147_483_629, 1), (2_147_483_647, 1)]);
    }
}
