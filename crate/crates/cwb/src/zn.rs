//! Arithmetic in Z/n and q-cyclotomic cosets.
//!
//! Everything here is plain integer arithmetic on `u64`/`i64` with explicit
//! normalization of negative residues. Intermediate products use `u128` so no
//! operation in this module can overflow for the supported parameter ranges.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Reduces an integer (possibly negative) to its representative in `0..n`.
pub fn normalize_mod(a: i64, n: u64) -> u64 {
    assert!(n > 0, "modulus must be positive");
    let n_i = n as i64;
    ((a % n_i + n_i) % n_i) as u64
}

/// `a * b mod n` without overflow.
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// `a^e mod n` by square-and-multiply.
pub fn pow_mod(a: u64, mut e: u64, n: u64) -> u64 {
    assert!(n > 0, "modulus must be positive");
    let mut base = a % n;
    let mut acc = 1 % n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        e >>= 1;
    }
    acc
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` modulo `n`, if `gcd(a, n) = 1`.
pub fn inv_mod(a: i64, n: u64) -> Result<u64> {
    let a_n = normalize_mod(a, n);
    if n == 1 {
        return Ok(0);
    }
    // Extended Euclid on (a_n, n).
    let (mut r0, mut r1) = (a_n as i128, n as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return Err(Error::NotAUnit { a, n });
    }
    let n_i = n as i128;
    Ok(((s0 % n_i + n_i) % n_i) as u64)
}

/// Multiplicative order of `a` modulo `n`. Requires `gcd(a, n) = 1`.
pub fn mult_order(a: i64, n: u64) -> Result<u64> {
    let a_n = normalize_mod(a, n);
    if n == 1 {
        return Ok(1);
    }
    if gcd_u64(a_n, n) != 1 {
        return Err(Error::NotAUnit { a, n });
    }
    let mut x = a_n;
    let mut ord = 1u64;
    while x != 1 {
        x = mul_mod(x, a_n, n);
        ord += 1;
    }
    Ok(ord)
}

/// Whether `x mod n` lies in the cyclic subgroup of (Z/n)^* generated by `g`.
pub fn in_cyclic_subgroup(x: i64, g: i64, n: u64) -> Result<bool> {
    let x_n = normalize_mod(x, n);
    let g_n = normalize_mod(g, n);
    if n == 1 {
        return Ok(true);
    }
    if gcd_u64(g_n, n) != 1 {
        return Err(Error::NotAUnit { a: g, n });
    }
    if gcd_u64(x_n, n) != 1 {
        return Ok(false);
    }
    let mut cur = 1u64;
    loop {
        if cur == x_n {
            return Ok(true);
        }
        cur = mul_mod(cur, g_n, n);
        if cur == 1 {
            return Ok(false);
        }
    }
}

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    assert!(n > 0, "phi needs a positive argument");
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut pk = 1u64;
            n /= p;
            while n % p == 0 {
                pk *= p;
                n /= p;
            }
            phi *= pk * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "divisors needs a positive argument");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// A q-cyclotomic coset modulo n: the orbit of its smallest element under
/// multiplication by q. Elements are listed as rep, rep*q, rep*q^2, ...
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub rep: u64,
    pub elements: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn size(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.contains(&x)
    }
}

/// The q-cyclotomic coset of `a` modulo `n`, elements in orbit order starting
/// from the smallest member.
pub fn coset_of(a: u64, n: u64, q: u64) -> CyclotomicCoset {
    assert!(n > 0);
    assert!(gcd_u64(q % n.max(1), n) == 1 || n == 1, "gcd(q, n) must be 1");
    let start = a % n;
    let mut orbit = vec![start];
    let mut x = mul_mod(start, q, n);
    while x != start {
        orbit.push(x);
        x = mul_mod(x, q, n);
    }
    let rep = *orbit.iter().min().expect("orbit is nonempty");
    let pos = orbit.iter().position(|&e| e == rep).expect("rep is in orbit");
    orbit.rotate_left(pos);
    CyclotomicCoset { rep, elements: orbit }
}

/// All q-cyclotomic cosets modulo n, sorted by representative.
/// Requires gcd(n, q) = 1.
pub fn cyclotomic_cosets(n: u64, q: u64) -> Result<Vec<CyclotomicCoset>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if gcd_u64(q % n, n) != 1 && n != 1 {
        return Err(Error::RepeatedRoot { n, q });
    }
    let mut seen = vec![false; n as usize];
    let mut cosets = Vec::new();
    for a in 0..n {
        if seen[a as usize] {
            continue;
        }
        let coset = coset_of(a, n, q);
        for &e in &coset.elements {
            seen[e as usize] = true;
        }
        cosets.push(coset);
    }
    Ok(cosets)
}

/// Image of a coset under the multiplier x -> a*x mod n. The result is again
/// a full cyclotomic coset when gcd(a, n) = 1.
pub fn coset_image_under_multiplier(a: i64, coset: &CyclotomicCoset, n: u64, q: u64) -> Result<CyclotomicCoset> {
    let a_n = normalize_mod(a, n);
    if gcd_u64(a_n, n) != 1 && n != 1 {
        return Err(Error::NotAUnit { a, n });
    }
    let image: BTreeSet<u64> = coset.elements.iter().map(|&e| mul_mod(e, a_n, n)).collect();
    let out = coset_of(*image.iter().next().expect("nonempty"), n, q);
    if out.elements.len() != image.len() || !out.elements.iter().all(|e| image.contains(e)) {
        return Err(Error::internal(format!(
            "multiplier {a} does not permute the q-cyclotomic cosets mod {n}"
        )));
    }
    Ok(out)
}

/// Facts about the unit group of Z/n relevant to the multiplier subgroups
/// used by the orbit counts: the orders of q and -q, whether -1 lies in
/// <-q>, and (when q = p^e with e even) the orders of +/- p^(e/2).
#[derive(Debug, Clone)]
pub struct UnitGroupFacts {
    pub n: u64,
    pub q: u64,
    /// ord_n(q), the degree of the splitting field of x^n - 1 over GF(q).
    pub m: u64,
    /// ord_n(-q).
    pub m_neg: u64,
    /// Whether -1 mod n lies in the subgroup generated by -q.
    pub minus_one_in_neg_q: bool,
}

impl UnitGroupFacts {
    pub fn new(n: u64, q: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        if n != 1 && gcd_u64(q % n, n) != 1 {
            return Err(Error::RepeatedRoot { n, q });
        }
        let m = mult_order(q as i64, n)?;
        let m_neg = mult_order(-(q as i64), n)?;
        let minus_one_in_neg_q = in_cyclic_subgroup(-1, -(q as i64), n)?;
        Ok(UnitGroupFacts { n, q, m, m_neg, minus_one_in_neg_q })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets_mod_9_base_2() {
        let cosets = cyclotomic_cosets(9, 2).unwrap();
        let sets: Vec<Vec<u64>> = cosets
            .iter()
            .map(|c| {
                let mut v = c.elements.clone();
                v.sort_unstable();
                v
            })
            .collect();
        assert_eq!(sets, vec![vec![0], vec![1, 2, 4, 5, 7, 8], vec![3, 6]]);
        assert_eq!(cosets[1].elements, vec![1, 2, 4, 8, 7, 5]);
    }

    #[test]
    fn cosets_mod_15_base_2() {
        let cosets = cyclotomic_cosets(15, 2).unwrap();
        let reps: Vec<u64> = cosets.iter().map(|c| c.rep).collect();
        assert_eq!(reps, vec![0, 1, 3, 5, 7]);
        assert_eq!(cosets[2].elements, vec![3, 6, 12, 9]);
    }

    #[test]
    fn coset_sizes_divide_order_of_q() {
        for &(n, q) in &[(9u64, 2u64), (15, 2), (21, 8), (22, 3), (63, 4)] {
            let m = mult_order(q as i64, n).unwrap();
            for coset in cyclotomic_cosets(n, q).unwrap() {
                assert_eq!(m % coset.size(), 0, "coset {:?} mod {} base {}", coset, n, q);
            }
        }
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(2, 9).unwrap(), 6);
        assert_eq!(mult_order(8, 21).unwrap(), 2);
        assert_eq!(mult_order(3, 22).unwrap(), 5);
        assert_eq!(mult_order(-2, 15).unwrap(), 4);
    }

    #[test]
    fn minus_one_membership() {
        assert!(in_cyclic_subgroup(-1, -2, 7).unwrap());
        assert!(!in_cyclic_subgroup(-1, -2, 21).unwrap());
    }

    #[test]
    fn multiplier_images() {
        let c = coset_of(1, 7, 2);
        assert_eq!(c.elements, vec![1, 2, 4]);
        let img = coset_image_under_multiplier(3, &c, 7, 2).unwrap();
        let mut e = img.elements.clone();
        e.sort_unstable();
        assert_eq!(e, vec![3, 5, 6]);

        let c = coset_of(1, 15, 4);
        assert_eq!(c.elements, vec![1, 4]);
        let img = coset_image_under_multiplier(2, &c, 15, 4).unwrap();
        let mut e = img.elements.clone();
        e.sort_unstable();
        assert_eq!(e, vec![2, 8]);
        let img = coset_image_under_multiplier(-2, &c, 15, 4).unwrap();
        let mut e = img.elements.clone();
        e.sort_unstable();
        assert_eq!(e, vec![7, 13]);
    }

    #[test]
    fn phi_and_divisors() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(10), 4);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        let n = 60u64;
        let phi_sum: u64 = divisors(n).iter().map(|&d| euler_phi(d)).sum();
        assert_eq!(phi_sum, n);
    }

    #[test]
    fn inverse() {
        assert_eq!(inv_mod(8, 15).unwrap(), 2);
        assert_eq!(inv_mod(-2, 15).unwrap(), 7);
        assert!(inv_mod(6, 15).is_err());
        for a in 1..30i64 {
            if gcd_u64(normalize_mod(a, 31), 31) == 1 {
                let inv = inv_mod(a, 31).unwrap();
                assert_eq!(mul_mod(normalize_mod(a, 31), inv, 31), 1);
            }
        }
    }

    #[test]
    fn normalize_negative() {
        assert_eq!(normalize_mod(-1, 7), 6);
        assert_eq!(normalize_mod(-8, 7), 6);
        assert_eq!(normalize_mod(14, 7), 0);
    }

    #[test]
    fn unit_group_facts() {
        let f = UnitGroupFacts::new(7, 2).unwrap();
        assert_eq!(f.m, 3);
        assert_eq!(f.m_neg, 6);
        assert!(f.minus_one_in_neg_q);

        let f = UnitGroupFacts::new(21, 2).unwrap();
        assert_eq!(f.m, 6);
        assert!(!f.minus_one_in_neg_q);
    }
}
