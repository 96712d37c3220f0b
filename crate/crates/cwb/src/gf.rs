//! Finite field tables.
//!
//! A field GF(p^d) is represented by log/antilog tables over a canonical
//! modulus. Elements are `u32` indices whose base-p digits are the
//! coordinates in the polynomial basis 1, x, ..., x^(d-1), so the elements
//! 0..p are exactly the prime subfield and index arithmetic is stable across
//! rebuilds. The modulus is the monic irreducible polynomial of degree d
//! whose coefficient vector (c_0, ..., c_{d-1}), read as the base-p integer
//! sum c_i p^i, is smallest. The chosen generator `theta` is the element of
//! smallest index with multiplicative order p^d - 1.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::zn;

/// Largest table this crate will build, in elements.
pub const FIELD_CAP: u64 = 1 << 24;

/// A prime power q = p^e.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub p: u64,
    pub e: u32,
    pub q: u64,
}

impl PrimePower {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidParameter("exponent must be at least 1".into()));
        }
        let mut q: u64 = 1;
        for _ in 0..e {
            q = q
                .checked_mul(p)
                .ok_or_else(|| Error::InvalidParameter(format!("{p}^{e} overflows u64")))?;
        }
        Ok(PrimePower { p, e, q })
    }

    /// Factors q as p^e; errors when q is not a prime power.
    pub fn from_order(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
        }
        let mut p = q;
        for cand in 2..=q {
            if cand * cand > q {
                break;
            }
            if q % cand == 0 {
                p = cand;
                break;
            }
        }
        let mut e = 0u32;
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if rest != 1 {
            return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
        }
        PrimePower::new(p, e)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over GF(p), coefficients low-to-high, no trailing zeros.

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*f.last().unwrap(), 1, "modulus must be monic");
    let d = f.len() - 1;
    while a.len() > d {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - d;
        if lead != 0 {
            for (i, &fc) in f.iter().enumerate() {
                let idx = i + shift;
                a[idx] = (a[idx] + (p - lead % p) * fc) % p;
            }
        }
        a.pop();
        poly_trim(&mut a);
    }
    a
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ac) in a.iter().enumerate() {
        if ac == 0 {
            continue;
        }
        for (j, &bc) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ac * bc) % p;
        }
    }
    poly_trim(&mut prod);
    poly_rem(prod, f, p)
}

/// x^e mod f.
fn poly_pow_x(mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut base = poly_rem(vec![0, 1], f, p);
    let mut acc = poly_rem(vec![1], f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &base, f, p);
        }
        base = poly_mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let av = a.get(i).copied().unwrap_or(0);
        let bv = b.get(i).copied().unwrap_or(0);
        *o = (av + p - bv) % p;
    }
    poly_trim(&mut out);
    out
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        // Make b monic so poly_rem applies.
        let lead = *b.last().unwrap();
        if lead != 1 {
            let inv = zn::pow_mod(lead, p - 2, p);
            for c in &mut b {
                *c = (*c * inv) % p;
            }
        }
        let r = poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        if lead != 1 {
            let inv = zn::pow_mod(lead, p - 2, p);
            for c in &mut a {
                *c = (*c * inv) % p;
            }
        }
    }
    a
}

fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    // f is irreducible of degree d iff x^(p^d) = x mod f and, for every prime
    // l dividing d, gcd(f, x^(p^(d/l)) - x) is constant.
    let x = poly_rem(vec![0, 1], f, p);
    let mut pe = 1u64;
    for _ in 0..d {
        pe *= p;
    }
    if poly_pow_x(pe, f, p) != x {
        return false;
    }
    for l in prime_factors(d as u64) {
        let mut pe_sub = 1u64;
        for _ in 0..(d as u64 / l) {
            pe_sub *= p;
        }
        let g = poly_gcd(f.to_vec(), poly_sub(&poly_pow_x(pe_sub, f, p), &x, p), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// The canonical monic irreducible of degree d over GF(p): among all monic
/// irreducibles x^d + sum c_i x^i, the one minimizing the integer sum c_i p^i.
/// Coefficients are returned low-to-high with the leading 1 included.
pub fn find_irreducible(p: u64, d: u32) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if d == 0 {
        return Err(Error::InvalidParameter("degree must be at least 1".into()));
    }
    let mut order: u128 = 1;
    for _ in 0..d {
        order *= p as u128;
    }
    if order > FIELD_CAP as u128 {
        return Err(Error::FieldTooLarge { order, cap: FIELD_CAP });
    }
    let order = order as u64;
    for j in 0..order {
        let mut f = Vec::with_capacity(d as usize + 1);
        let mut rest = j;
        for _ in 0..d {
            f.push(rest % p);
            rest /= p;
        }
        f.push(1);
        if poly_is_irreducible(&f, p) {
            return Ok(f);
        }
    }
    Err(Error::internal(format!(
        "no irreducible of degree {d} over GF({p}) found"
    )))
}

/// Log/antilog tables for GF(p^degree).
#[derive(Debug, Clone)]
pub struct FieldTable {
    pub p: u64,
    /// Extension degree over the prime field.
    pub degree: u32,
    pub order: u64,
    /// Canonical modulus, coefficients low-to-high, monic of degree `degree`.
    pub modulus: Vec<u64>,
    /// Generator of the multiplicative group: smallest index of full order.
    pub theta: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    pow_p: Vec<u64>,
}

const LOG_ZERO: u32 = u32::MAX;

// Multiplication used only while tables are being built: quadratic in the
// degree, operating directly on digit vectors.
fn raw_mul(a: u64, b: u64, p: u64, d: u32, modulus: &[u64]) -> u64 {
    let digits = |mut x: u64| -> Vec<u64> {
        let mut v = Vec::with_capacity(d as usize);
        for _ in 0..d {
            v.push(x % p);
            x /= p;
        }
        v
    };
    let pa = {
        let mut v = digits(a);
        poly_trim(&mut v);
        v
    };
    let pb = {
        let mut v = digits(b);
        poly_trim(&mut v);
        v
    };
    let prod = poly_mulmod(&pa, &pb, modulus, p);
    let mut out = 0u64;
    for (i, &c) in prod.iter().enumerate() {
        let mut pw = 1u64;
        for _ in 0..i {
            pw *= p;
        }
        out += c * pw;
    }
    out
}

fn raw_pow(mut a: u64, mut e: u64, p: u64, d: u32, modulus: &[u64]) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = raw_mul(acc, a, p, d, modulus);
        }
        a = raw_mul(a, a, p, d, modulus);
        e >>= 1;
    }
    acc
}

/// Builds the table for GF(q^m) where q = p^e, i.e. GF(p^(e*m)).
pub fn build_field(pp: &PrimePower, m: u32) -> Result<FieldTable> {
    if m == 0 {
        return Err(Error::InvalidParameter("extension degree must be at least 1".into()));
    }
    let d = pp
        .e
        .checked_mul(m)
        .ok_or_else(|| Error::InvalidParameter("extension degree overflows".into()))?;
    let mut order: u128 = 1;
    for _ in 0..d {
        order *= pp.p as u128;
    }
    if order > FIELD_CAP as u128 {
        return Err(Error::FieldTooLarge { order, cap: FIELD_CAP });
    }
    let order = order as u64;
    let modulus = find_irreducible(pp.p, d)?;
    let p = pp.p;

    // theta: the smallest index whose multiplicative order is order - 1,
    // certified by the prime factors of order - 1.
    let factors = prime_factors(order - 1);
    let mut theta = 0u64;
    'outer: for cand in 1..order {
        for &f in &factors {
            if raw_pow(cand, (order - 1) / f, p, d, &modulus) == 1 {
                continue 'outer;
            }
        }
        theta = cand;
        break;
    }
    if theta == 0 && order > 2 {
        return Err(Error::internal(format!(
            "no generator found for GF({order})"
        )));
    }
    if order == 2 {
        theta = 1;
    }

    // exp by repeated multiplication with theta through its linear action on
    // the polynomial basis; log by inversion, with a collision check that
    // certifies theta really has full order.
    let theta_rows: Vec<u64> = (0..d)
        .map(|j| {
            let mut xj = 1u64;
            for _ in 0..j {
                xj *= p;
            }
            raw_mul(theta, xj, p, d, &modulus)
        })
        .collect();
    let mut pow_p = Vec::with_capacity(d as usize + 1);
    let mut pw = 1u64;
    for _ in 0..=d {
        pow_p.push(pw);
        pw = pw.saturating_mul(p);
    }

    let mut exp = vec![0u32; (order - 1) as usize];
    let mut log = vec![LOG_ZERO; order as usize];
    let mut cur = 1u64;
    for i in 0..(order - 1) {
        exp[i as usize] = cur as u32;
        if log[cur as usize] != LOG_ZERO {
            return Err(Error::internal(format!(
                "generator {theta} of GF({order}) revisited an element at step {i}"
            )));
        }
        log[cur as usize] = i as u32;
        // cur * theta = sum over digits of cur of digit * theta_rows[j].
        if p == 2 {
            let mut next = 0u64;
            let mut rest = cur;
            let mut j = 0usize;
            while rest != 0 {
                if rest & 1 == 1 {
                    next ^= theta_rows[j];
                }
                rest >>= 1;
                j += 1;
            }
            cur = next;
        } else {
            let mut acc = vec![0u64; d as usize];
            let mut rest = cur;
            for j in 0..d as usize {
                let digit = rest % p;
                rest /= p;
                if digit != 0 {
                    let mut row = theta_rows[j];
                    for a in acc.iter_mut() {
                        *a = (*a + digit * (row % p)) % p;
                        row /= p;
                    }
                }
            }
            cur = acc
                .iter()
                .enumerate()
                .map(|(i, &c)| c * pow_p[i])
                .sum();
        }
    }
    if cur != 1 {
        return Err(Error::internal(format!(
            "generator {theta} of GF({order}) has order other than {}",
            order - 1
        )));
    }

    Ok(FieldTable {
        p,
        degree: d,
        order,
        modulus,
        theta: theta as u32,
        exp,
        log,
        pow_p,
    })
}

impl FieldTable {
    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a as u64, b as u64);
        let p = self.p;
        let mut out = 0u64;
        let mut place = 1u64;
        while a != 0 || b != 0 {
            out += ((a + b) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut a = a as u64;
        let mut out = 0u64;
        let mut place = 1u64;
        while a != 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp[(s % (self.order - 1)) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::InvalidParameter("inverse of zero".into()));
        }
        let l = self.log[a as usize] as u64;
        Ok(self.exp[((self.order - 1 - l) % (self.order - 1)) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let l = self.log[a as usize] as u128;
        self.exp[((l * e as u128) % (self.order as u128 - 1)) as usize]
    }

    /// theta^e.
    pub fn theta_pow(&self, e: u64) -> u32 {
        self.exp[(e % (self.order - 1)) as usize]
    }

    /// Discrete log base theta; None for zero.
    pub fn dlog(&self, a: u32) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(self.log[a as usize])
        }
    }

    /// Base-p digits of an element, lowest power first, length `degree`.
    pub fn digits(&self, a: u32) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.degree as usize);
        let mut x = a as u64;
        for _ in 0..self.degree {
            v.push(x % self.p);
            x /= self.p;
        }
        v
    }

    pub fn from_digits(&self, ds: &[u64]) -> u32 {
        ds.iter()
            .enumerate()
            .map(|(i, &c)| (c % self.p) * self.pow_p[i])
            .sum::<u64>() as u32
    }

    /// Evaluates a polynomial with coefficients in this field at `x`.
    pub fn eval_poly(&self, coeffs: &[u32], x: u32) -> u32 {
        let mut acc = 0u32;
        for &c in coeffs.iter().rev() {
            acc = self.add(self.mul(acc, x), c);
        }
        acc
    }
}

/// A primitive n-th root of unity in `f`: theta^((order-1)/n).
/// Requires n to divide order - 1.
pub fn nth_root_of_unity(f: &FieldTable, n: u64) -> Result<u32> {
    if n == 0 || (f.order - 1) % n != 0 {
        return Err(Error::NoNthRoot { n, order: f.order });
    }
    Ok(f.theta_pow((f.order - 1) / n))
}

/// An embedding of GF(q_sub) into a larger field with the same
/// characteristic. The small field uses its own canonical table; the map
/// sends its basis 1, x, ..., x^(e_sub - 1) to powers of a fixed root `beta`
/// of the small modulus inside the big field.
#[derive(Debug, Clone)]
pub struct SubfieldEmbedding {
    pub sub: FieldTable,
    pub beta: u32,
    to_big: Vec<u32>,
    from_big: HashMap<u32, u32>,
}

impl SubfieldEmbedding {
    #[inline]
    pub fn embed(&self, a: u32) -> u32 {
        self.to_big[a as usize]
    }

    /// Inverse of `embed` on its image.
    pub fn project(&self, b: u32) -> Option<u32> {
        self.from_big.get(&b).copied()
    }
}

/// Builds the canonical embedding GF(q_sub) -> big. `beta` is the root of
/// the small modulus with the smallest discrete log in the big field, so the
/// map is deterministic.
pub fn subfield_embed(big: &FieldTable, q_sub: u64) -> Result<SubfieldEmbedding> {
    let pp_sub = PrimePower::from_order(q_sub)
        .map_err(|_| Error::NotASubfield { q_sub, order: big.order })?;
    if pp_sub.p != big.p || big.degree % pp_sub.e != 0 {
        return Err(Error::NotASubfield { q_sub, order: big.order });
    }
    let sub = build_field(&pp_sub, 1)?;

    // Roots of the small modulus lie in the unique subfield of order q_sub,
    // whose nonzero part is generated by theta^step.
    let step = (big.order - 1) / (q_sub - 1);
    let mut beta = None;
    if q_sub == big.p as u64 && sub.modulus == vec![0, 1] {
        // Degree-1 canonical modulus is x itself; its root is zero and the
        // embedding is the identity on 0..p.
        beta = Some(0u32);
    } else {
        let coeffs: Vec<u32> = sub.modulus.iter().map(|&c| c as u32).collect();
        for j in 0..(q_sub - 1) {
            let cand = big.theta_pow(j * step);
            if big.eval_poly(&coeffs, cand) == 0 {
                beta = Some(cand);
                break;
            }
        }
    }
    let beta = beta.ok_or_else(|| {
        Error::internal(format!(
            "modulus of GF({q_sub}) has no root in GF({})",
            big.order
        ))
    })?;

    let mut to_big = Vec::with_capacity(q_sub as usize);
    for a in 0..q_sub {
        let ds = {
            let mut v = Vec::with_capacity(pp_sub.e as usize);
            let mut x = a;
            for _ in 0..pp_sub.e {
                v.push((x % pp_sub.p) as u32);
                x /= pp_sub.p;
            }
            v
        };
        let mut acc = 0u32;
        for &c in ds.iter().rev() {
            acc = big.add(big.mul(acc, beta), c);
        }
        to_big.push(acc);
    }
    let mut from_big = HashMap::with_capacity(q_sub as usize);
    for (a, &b) in to_big.iter().enumerate() {
        if from_big.insert(b, a as u32).is_some() {
            return Err(Error::internal("subfield embedding is not injective".into()));
        }
    }

    let emb = SubfieldEmbedding { sub, beta, to_big, from_big };
    verify_embedding(big, &emb)?;
    Ok(emb)
}

fn verify_embedding(big: &FieldTable, emb: &SubfieldEmbedding) -> Result<()> {
    let q = emb.sub.order;
    if emb.embed(0) != 0 || emb.embed(1) != 1 {
        return Err(Error::internal("embedding moves 0 or 1".into()));
    }
    // Exhaustive check of both operations for small fields, strided otherwise.
    let stride = if q <= 256 { 1 } else { q / 151 + 1 };
    let mut a = 0u64;
    while a < q {
        let mut b = 0u64;
        while b < q {
            let (ia, ib) = (a as u32, b as u32);
            let sum = emb.embed(emb.sub.add(ia, ib));
            if sum != big.add(emb.embed(ia), emb.embed(ib)) {
                return Err(Error::internal("embedding does not respect addition".into()));
            }
            let prod = emb.embed(emb.sub.mul(ia, ib));
            if prod != big.mul(emb.embed(ia), emb.embed(ib)) {
                return Err(Error::internal("embedding does not respect multiplication".into()));
            }
            b += stride;
        }
        a += stride;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        assert_eq!(find_irreducible(2, 1).unwrap(), vec![0, 1]);
        assert_eq!(find_irreducible(2, 3).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(find_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(find_irreducible(2, 4).unwrap(), vec![1, 1, 0, 0, 1]);
    }

    #[test]
    fn gf4_tables() {
        let pp = PrimePower::new(2, 2).unwrap();
        let f = build_field(&pp, 1).unwrap();
        assert_eq!(f.order, 4);
        assert_eq!(f.theta, 2);
        // x * x = x + 1 under x^2 + x + 1.
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.add(2, 3), 1);
    }

    #[test]
    fn gf9_arithmetic() {
        let pp = PrimePower::new(3, 2).unwrap();
        let f = build_field(&pp, 1).unwrap();
        assert_eq!(f.order, 9);
        // Modulus x^2 + 1: x * x = -1 = 2.
        assert_eq!(f.mul(3, 3), 2);
        for a in 0..9u32 {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn field_axioms_sampled() {
        // Deterministic congruential sampling of triples in a few fields.
        for (p, e, m) in [(2u64, 1u32, 6u32), (3, 1, 3), (2, 2, 2), (5, 1, 3)] {
            let pp = PrimePower::new(p, e).unwrap();
            let f = build_field(&pp, m).unwrap();
            let n = f.order;
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = move || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % n) as u32
            };
            for _ in 0..1000 {
                let (a, b, c) = (next(), next(), next());
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        let pp = PrimePower::new(2, 1).unwrap();
        let f = build_field(&pp, 6).unwrap();
        for a in 0..f.order as u32 {
            for b in 0..f.order as u32 {
                let fr = |x: u32| f.pow(x, f.p);
                assert_eq!(fr(f.add(a, b)), f.add(fr(a), fr(b)));
            }
        }
    }

    #[test]
    fn roots_of_unity() {
        let pp = PrimePower::new(2, 1).unwrap();
        let f = build_field(&pp, 6).unwrap();
        let z = nth_root_of_unity(&f, 9).unwrap();
        assert_eq!(f.pow(z, 9), 1);
        for i in 1..9 {
            assert_ne!(f.pow(z, i), 1, "zeta^{i} should not be 1");
        }
        assert!(nth_root_of_unity(&f, 5).is_err());
    }

    #[test]
    fn embed_gf8_in_gf64() {
        let pp = PrimePower::new(2, 3).unwrap();
        let big = build_field(&pp, 2).unwrap();
        let emb = subfield_embed(&big, 8).unwrap();
        assert_eq!(emb.sub.order, 8);
        for a in 0..8u32 {
            for b in 0..8u32 {
                assert_eq!(
                    emb.embed(emb.sub.mul(a, b)),
                    big.mul(emb.embed(a), emb.embed(b))
                );
            }
        }
        // The image is closed and of the right size.
        let img: std::collections::HashSet<u32> = (0..8).map(|a| emb.embed(a)).collect();
        assert_eq!(img.len(), 8);
        assert!(emb.project(big.theta_pow(9)).is_some());
    }

    #[test]
    fn embed_prime_field_is_identity() {
        let pp = PrimePower::new(3, 1).unwrap();
        let big = build_field(&pp, 5).unwrap();
        let emb = subfield_embed(&big, 3).unwrap();
        for a in 0..3u32 {
            assert_eq!(emb.embed(a), a);
        }
    }

    #[test]
    fn rebuild_is_identical() {
        let pp = PrimePower::new(2, 2).unwrap();
        let f1 = build_field(&pp, 2).unwrap();
        let f2 = build_field(&pp, 2).unwrap();
        assert_eq!(f1.modulus, f2.modulus);
        assert_eq!(f1.theta, f2.theta);
        assert_eq!(f1.exp, f2.exp);
    }

    #[test]
    fn cap_is_enforced() {
        let pp = PrimePower::new(2, 1).unwrap();
        assert!(matches!(
            build_field(&pp, 30),
            Err(Error::FieldTooLarge { .. })
        ));
    }
}
