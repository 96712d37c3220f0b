//! Closed-form upper bounds on the number of nonzero weights of a
//! simple-root cyclic code, obtained by counting (or bounding) the orbits of
//! shift/scalar/multiplier groups on the nonzero codewords.
//!
//! Conventions shared by every function here:
//! - `q` is the field order, `n` the length with gcd(n, q) = 1;
//! - a coset is named by any member `i_t`; its size `k_t` is always checked
//!   against the actual q-cyclotomic coset of `i_t` modulo n;
//! - all arithmetic is exact big-integer arithmetic, every division is
//!   asserted to be exact, and gcd arguments are taken by absolute value
//!   with gcd(x, 0) = |x|;
//! - a violated hypothesis yields `Error::NotApplicable`; a failed exactness
//!   assertion yields `Error::Internal` since it would mean the formula was
//!   transcribed wrong.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::PrimePower;
use crate::zn;

fn bi(x: u64) -> BigInt {
    BigInt::from(x)
}

/// q^e as a big integer.
fn qp(q: u64, e: u64) -> BigInt {
    bi(q).pow(e as u32)
}

/// gcd of absolute values; gcd of an all-zero list is 0.
fn gcd_all<I: IntoIterator<Item = BigInt>>(items: I) -> BigInt {
    let mut acc = BigInt::zero();
    for x in items {
        acc = acc.gcd(&x);
    }
    acc.abs()
}

fn exact_div(num: &BigInt, den: &BigInt, what: &str) -> Result<BigInt> {
    if den.is_zero() {
        return Err(Error::internal(format!("division of {what} by zero")));
    }
    let (quo, rem) = num.div_rem(den);
    if !rem.is_zero() {
        return Err(Error::internal(format!(
            "{what}: {num} is not divisible by {den}"
        )));
    }
    Ok(quo)
}

fn to_unsigned(x: BigInt, what: &str) -> Result<BigUint> {
    x.to_biguint()
        .ok_or_else(|| Error::internal(format!("{what} is negative")))
}

/// Checks gcd(n, q) = 1 and that the q-cyclotomic coset of `i_t` mod n has
/// the claimed size; returns (coset size, order of q mod n).
fn check_coset(method: &'static str, q: u64, n: u64, i_t: u64, k: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if n != 1 && zn::gcd_u64(q % n, n) != 1 {
        return Err(Error::RepeatedRoot { n, q });
    }
    let actual = zn::coset_of(i_t, n, q).size();
    if actual != k {
        return Err(Error::InvalidParameter(format!(
            "{method}: coset of {i_t} mod {n} has size {actual}, not {k}"
        )));
    }
    zn::mult_order(q as i64, n)
}

/// (q^k - 1)/(q - 1) and i_t (q^k - 1)/n, the two quantities every bound
/// shares. Both divisions are exact for a genuine coset.
fn a_b(q: u64, n: u64, i_t: u64, k: u64) -> Result<(BigInt, BigInt)> {
    let qk1 = qp(q, k) - 1;
    let a = exact_div(&qk1, &(bi(q) - 1), "(q^k-1)/(q-1)")?;
    let b = exact_div(&(bi(i_t) * &qk1), &bi(n), "i_t(q^k-1)/n")?;
    Ok((a, b))
}

/// Orbit count of the shift/scalar/Frobenius-multiplier group on the nonzero
/// words of an irreducible code, in totient form. Evaluated a second time in
/// the literal form (average over all powers of q) as a consistency check;
/// the two agree because the coset size divides the order of q mod n.
pub fn thm31_irreducible(q: &PrimePower, n: u64, i_t: u64, k: u64) -> Result<BigUint> {
    let m = check_coset("thm31", q.q, n, i_t, k)?;
    let (a, b) = a_b(q.q, n, i_t, k)?;

    let mut totient = BigInt::zero();
    for r in zn::divisors(k) {
        let g = gcd_all([qp(q.q, r) - 1, a.clone(), b.clone()]);
        totient += bi(zn::euler_phi(k / r)) * g;
    }
    let mut literal = BigInt::zero();
    for r1 in 0..m {
        let g = zn::gcd_u64(k, r1);
        let e = if g == 0 { k } else { g };
        literal += gcd_all([qp(q.q, e) - 1, a.clone(), b.clone()]);
    }
    if &totient * bi(m) != &literal * bi(k) {
        return Err(Error::internal(format!(
            "orbit count for coset of {i_t} mod {n}: totient and literal forms disagree"
        )));
    }
    let val = exact_div(&totient, &bi(k), "orbit count sum / k")?;
    to_unsigned(val, "orbit count")
}

/// Orbit count of the shift/scalar group alone on the nonzero words of an
/// irreducible code: gcd((q^k-1)/(q-1), i_t(q^k-1)/n).
pub fn rho_sigma_irreducible(q: &PrimePower, n: u64, i_t: u64, k: u64) -> Result<BigUint> {
    check_coset("rho_sigma_irreducible", q.q, n, i_t, k)?;
    let (a, b) = a_b(q.q, n, i_t, k)?;
    to_unsigned(gcd_all([a, b]), "orbit count")
}

/// The condition under which the multiplier strictly improves on the
/// shift/scalar count for an irreducible code: k > 1 and
/// gcd(q-1, A, B) < gcd(A, B).
pub fn thm31_strictly_better(q: &PrimePower, n: u64, i_t: u64, k: u64) -> Result<bool> {
    check_coset("thm31_strictly_better", q.q, n, i_t, k)?;
    let (a, b) = a_b(q.q, n, i_t, k)?;
    Ok(k > 1 && gcd_all([bi(q.q) - 1, a.clone(), b.clone()]) < gcd_all([a, b]))
}

/// One per-subset term of a subset-sum bound: the rational
/// numerator/denominator pair, with the cosets that form the subset.
#[derive(Debug, Clone, Serialize)]
pub struct SubsetTerm {
    pub reps: Vec<u64>,
    #[serde(serialize_with = "ser_big")]
    pub numerator: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub denominator: BigUint,
}

fn ser_big<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl SubsetTerm {
    /// Compares the rational values of two terms.
    pub fn le(&self, other: &SubsetTerm) -> bool {
        &self.numerator * &other.denominator <= &other.numerator * &self.denominator
    }
}

/// A bound assembled as a sum over the nonempty coset subsets.
#[derive(Debug, Clone, Serialize)]
pub struct SubsetSum {
    #[serde(serialize_with = "ser_big")]
    pub total: BigUint,
    pub terms: Vec<SubsetTerm>,
}

/// Largest number of cosets for which the subset sums are evaluated.
pub const MAX_SUBSET_COSETS: usize = 12;

struct CosetItem {
    rep: u64,
    k: u64,
}

fn check_coset_family(method: &'static str, q: u64, n: u64, reps: &[u64]) -> Result<(Vec<CosetItem>, u64)> {
    if reps.is_empty() {
        return Err(Error::InvalidParameter(format!("{method}: no cosets given")));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if n != 1 && zn::gcd_u64(q % n, n) != 1 {
        return Err(Error::RepeatedRoot { n, q });
    }
    if reps.len() > MAX_SUBSET_COSETS {
        return Err(Error::not_applicable(
            method,
            format!("{} cosets exceed the subset-sum cap of {MAX_SUBSET_COSETS}", reps.len()),
        ));
    }
    let mut items = Vec::with_capacity(reps.len());
    let mut seen = std::collections::BTreeSet::new();
    for &r in reps {
        let c = zn::coset_of(r, n, q);
        if !seen.insert(c.rep) {
            return Err(Error::DuplicateCosets(reps.to_vec()));
        }
        items.push(CosetItem { rep: r % n, k: c.size() });
    }
    let m = zn::mult_order(q as i64, n)?;
    Ok((items, m))
}

/// The summand of the general orbit bound for one subset and one exponent r:
/// gcd(n, i_l I I_l / gcd(I, I_l), ..., (i_l' - i_l) I_l I_l' / gcd(I_l, I_l'), ...)
///   * gcd(I, I_1, ..., I_u) * prod_l (q^gcd(k_l, r) - 1)
/// with I = q - 1 and I_l = (q^k_l - 1)/(q^gcd(k_l, r) - 1). At r = 0 every
/// I_l is 1 and this degenerates to the shift/scalar fixed-point count.
fn subset_r_term(q: u64, n: u64, items: &[&CosetItem], r: u64) -> Result<BigInt> {
    let cap_i = bi(q) - 1;
    let mut caps = Vec::with_capacity(items.len());
    let mut prod = BigInt::one();
    for it in items {
        let g = zn::gcd_u64(it.k, r);
        let e = if g == 0 { it.k } else { g };
        let small = qp(q, e) - 1;
        let big = qp(q, it.k) - 1;
        caps.push(exact_div(&big, &small, "(q^k-1)/(q^gcd(k,r)-1)")?);
        prod *= small;
    }
    let mut args = vec![bi(n)];
    for (it, cap) in items.iter().zip(&caps) {
        let num = bi(it.rep) * &cap_i * cap;
        let den = gcd_all([cap_i.clone(), cap.clone()]);
        args.push(exact_div(&num, &den, "i I I_l / gcd(I, I_l)")?);
    }
    for l in 0..items.len() {
        for l2 in (l + 1)..items.len() {
            let diff = bi(items[l2].rep) - bi(items[l].rep);
            let num = diff * &caps[l] * &caps[l2];
            let den = gcd_all([caps[l].clone(), caps[l2].clone()]);
            args.push(exact_div(&num, &den, "(i'-i) I_l I_l' / gcd")?);
        }
    }
    let g1 = gcd_all(args);
    let mut g2_args = vec![cap_i];
    g2_args.extend(caps.iter().cloned());
    let g2 = gcd_all(g2_args);
    Ok(g1 * g2 * prod)
}

fn subset_masks(v: usize) -> impl Iterator<Item = u32> {
    (1u32..(1 << v)).map(|m| m as u32)
}

fn mask_items<'a>(items: &'a [CosetItem], mask: u32) -> Vec<&'a CosetItem> {
    items
        .iter()
        .enumerate()
        .filter(|(j, _)| mask >> j & 1 == 1)
        .map(|(_, it)| it)
        .collect()
}

/// Upper bound on the orbit count of the shift/scalar/Frobenius-multiplier
/// group for an arbitrary coset family: a sum over all nonempty subsets of
/// per-subset averaged fixed-point bounds. The per-subset terms are exact
/// rationals over m n (q-1); only the grand total is asserted to be an
/// integer.
pub fn thm32_general(q: &PrimePower, n: u64, reps: &[u64]) -> Result<SubsetSum> {
    let (items, m) = check_coset_family("thm32", q.q, n, reps)?;
    let denom = bi(m) * bi(n) * (bi(q.q) - 1);
    let denom_u = to_unsigned(denom.clone(), "denominator")?;
    let mut terms = Vec::new();
    let mut total_num = BigInt::zero();
    for mask in subset_masks(items.len()) {
        let sel = mask_items(&items, mask);
        let mut num = BigInt::zero();
        for r in 0..m {
            num += subset_r_term(q.q, n, &sel, r)?;
        }
        total_num += &num;
        terms.push(SubsetTerm {
            reps: sel.iter().map(|it| it.rep).collect(),
            numerator: to_unsigned(num, "subset numerator")?,
            denominator: denom_u.clone(),
        });
    }
    let total = exact_div(&total_num, &denom, "orbit bound total")?;
    Ok(SubsetSum { total: to_unsigned(total, "orbit bound")?, terms })
}

/// Exact orbit count of the shift/scalar group, summed over coset subsets.
/// Every per-subset term is an exact integer.
pub fn cz_corrected(q: &PrimePower, n: u64, reps: &[u64]) -> Result<SubsetSum> {
    let (items, _) = check_coset_family("cz_corrected", q.q, n, reps)?;
    let denom = bi(n) * (bi(q.q) - 1);
    let mut terms = Vec::new();
    let mut total = BigInt::zero();
    for mask in subset_masks(items.len()) {
        let sel = mask_items(&items, mask);
        let num = subset_r_term(q.q, n, &sel, 0)?;
        let val = exact_div(&num, &denom, "shift/scalar subset count")?;
        total += &val;
        terms.push(SubsetTerm {
            reps: sel.iter().map(|it| it.rep).collect(),
            numerator: to_unsigned(val, "subset count")?,
            denominator: BigUint::one(),
        });
    }
    Ok(SubsetSum { total: to_unsigned(total, "orbit count")?, terms })
}

/// The earlier published shift/scalar subset formula, kept for comparison;
/// it overcounts some subsets and is superseded by `cz_corrected`. Errors
/// with `NotApplicable` if some subset term is not an integer.
pub fn cz_published(q: &PrimePower, n: u64, reps: &[u64]) -> Result<SubsetSum> {
    let (items, _) = check_coset_family("cz_published", q.q, n, reps)?;
    let denom = bi(n) * (bi(q.q) - 1);
    let mut terms = Vec::new();
    let mut total = BigInt::zero();
    for mask in subset_masks(items.len()) {
        let sel = mask_items(&items, mask);
        let mut g1_args = vec![bi(n)];
        g1_args.extend(sel.iter().map(|it| bi(it.rep)));
        let g1 = gcd_all(g1_args);
        let mut g2_args = vec![bi(q.q) - 1];
        for it in &sel {
            g2_args.push(bi(n / zn::gcd_u64(n, it.rep)));
        }
        let g2 = gcd_all(g2_args);
        let mut prod = BigInt::one();
        for it in &sel {
            prod *= qp(q.q, it.k) - 1;
        }
        let num = g1 * g2 * prod;
        let (val, rem) = num.div_rem(&denom);
        if !rem.is_zero() {
            return Err(Error::not_applicable(
                "cz_published",
                format!(
                    "subset {:?} evaluates to the non-integer {num}/{denom}",
                    sel.iter().map(|it| it.rep).collect::<Vec<_>>()
                ),
            ));
        }
        total += &val;
        terms.push(SubsetTerm {
            reps: sel.iter().map(|it| it.rep).collect(),
            numerator: to_unsigned(val, "subset count")?,
            denominator: BigUint::one(),
        });
    }
    Ok(SubsetSum { total: to_unsigned(total, "orbit bound")?, terms })
}

/// Exact orbit count of the shift/scalar/Frobenius-multiplier group on a
/// two-coset code whose coset sizes satisfy k1 | k2.
pub fn thm33_two_cosets(q: &PrimePower, n: u64, i1: u64, k1: u64, i2: u64, k2: u64) -> Result<BigUint> {
    let m = check_coset("thm33", q.q, n, i1, k1)?;
    check_coset("thm33", q.q, n, i2, k2)?;
    let c1 = zn::coset_of(i1, n, q.q);
    let c2 = zn::coset_of(i2, n, q.q);
    if c1.rep == c2.rep {
        return Err(Error::DuplicateCosets(vec![i1, i2]));
    }
    if k2 % k1 != 0 {
        return Err(Error::not_applicable(
            "thm33",
            format!("coset size {k1} does not divide coset size {k2}"),
        ));
    }
    let s1 = thm31_irreducible(q, n, i1, k1)?;
    let s2 = thm31_irreducible(q, n, i2, k2)?;

    let qk1 = qp(q.q, k1) - 1;
    let qk2 = qp(q.q, k2) - 1;
    let b2 = exact_div(&(bi(i2) * &qk2), &bi(n), "i2(q^k2-1)/n")?;
    let diff = exact_div(
        &((bi(i2) - bi(i1)) * &qk1 * &qk2),
        &(bi(n) * (bi(q.q) - 1)),
        "(i2-i1)(q^k1-1)(q^k2-1)/(n(q-1))",
    )?;
    let mut s12_sum = BigInt::zero();
    for r in 0..m {
        let g1 = if r == 0 { k1 } else { zn::gcd_u64(k1, r) };
        let g2 = if r == 0 { k2 } else { zn::gcd_u64(k2, r) };
        let qg1 = qp(q.q, g1) - 1;
        let qg2 = qp(q.q, g2) - 1;
        let arg1 = exact_div(&(&qk1 * &qg2), &((bi(q.q) - 1) * &qg1), "(q^k1-1)(q^g2-1)/((q-1)(q^g1-1))")?;
        let arg2 = exact_div(&(bi(i1) * &qk1 * &qg2), &(bi(n) * &qg1), "i1(q^k1-1)(q^g2-1)/(n(q^g1-1))")?;
        let inner = gcd_all([qg2.clone(), arg1, arg2, b2.clone()]);
        s12_sum += gcd_all([&qg1 * inner, diff.clone()]);
    }
    let s12 = exact_div(&s12_sum, &bi(m), "cross-term sum / m")?;
    let s12 = to_unsigned(s12, "cross term")?;
    Ok(s1 + s2 + s12)
}

/// Exact orbit count for a two-coset code with one coset of size 1:
/// 1 + (1/k) sum over r | k of phi(k/r) [gcd(q^r-1, A, B2) + gcd(q^r-1, D)]
/// with D = (i2 - i1)(q^k - 1)/n.
pub fn cor33(q: &PrimePower, n: u64, i1: u64, i2: u64, k: u64) -> Result<BigUint> {
    check_coset("cor33", q.q, n, i1, 1)?;
    check_coset("cor33", q.q, n, i2, k)?;
    if zn::coset_of(i1, n, q.q).rep == zn::coset_of(i2, n, q.q).rep {
        return Err(Error::DuplicateCosets(vec![i1, i2]));
    }
    let (a, b2) = a_b(q.q, n, i2, k)?;
    let diff = exact_div(&((bi(i2) - bi(i1)) * (qp(q.q, k) - 1)), &bi(n), "(i2-i1)(q^k-1)/n")?;
    let mut sum = BigInt::zero();
    for r in zn::divisors(k) {
        let qr = qp(q.q, r) - 1;
        let t1 = gcd_all([qr.clone(), a.clone(), b2.clone()]);
        let t2 = gcd_all([qr, diff.clone()]);
        sum += bi(zn::euler_phi(k / r)) * (t1 + t2);
    }
    let val = exact_div(&sum, &bi(k), "sum / k")? + 1;
    to_unsigned(val, "orbit count")
}

/// Exact orbit count for a two-coset code whose cosets share size k.
pub fn cor34(q: &PrimePower, n: u64, i1: u64, i2: u64, k: u64) -> Result<BigUint> {
    check_coset("cor34", q.q, n, i1, k)?;
    check_coset("cor34", q.q, n, i2, k)?;
    if zn::coset_of(i1, n, q.q).rep == zn::coset_of(i2, n, q.q).rep {
        return Err(Error::DuplicateCosets(vec![i1, i2]));
    }
    let qk = qp(q.q, k) - 1;
    let a = exact_div(&qk, &(bi(q.q) - 1), "(q^k-1)/(q-1)")?;
    let b1 = exact_div(&(bi(i1) * &qk), &bi(n), "i1(q^k-1)/n")?;
    let b2 = exact_div(&(bi(i2) * &qk), &bi(n), "i2(q^k-1)/n")?;
    let diff = exact_div(
        &((bi(i2) - bi(i1)) * &qk * &qk),
        &(bi(n) * (bi(q.q) - 1)),
        "(i2-i1)(q^k-1)^2/(n(q-1))",
    )?;
    let mut sum = BigInt::zero();
    for r in zn::divisors(k) {
        let qr = qp(q.q, r) - 1;
        let t1 = gcd_all([qr.clone(), a.clone(), b1.clone()]);
        let t2 = gcd_all([qr.clone(), a.clone(), b2.clone()]);
        let inner = gcd_all([qr.clone(), a.clone(), b1.clone(), b2.clone()]);
        let t3 = gcd_all([qr * inner, diff.clone()]);
        sum += bi(zn::euler_phi(k / r)) * (t1 + t2 + t3);
    }
    let val = exact_div(&sum, &bi(k), "sum / k")?;
    to_unsigned(val, "orbit count")
}

fn check_negation_pairing(method: &'static str, q: u64, n: u64, i_t: u64) -> Result<()> {
    let c = zn::coset_of(i_t, n, q);
    let neg = zn::normalize_mod(-(i_t as i64), n);
    if c.contains(neg) {
        return Err(Error::not_applicable(
            method,
            format!("-{i_t} mod {n} lies in the coset of {i_t} itself"),
        ));
    }
    Ok(())
}

/// Exact orbit count on the code spanned by the coset of i_t together with
/// its negation, for the group extended by the multiplier -q, in the case
/// where -1 is a power of -q mod n. Totient form over the divisors of k.
pub fn thm34(q: &PrimePower, n: u64, i_t: u64, k: u64) -> Result<BigUint> {
    check_coset("thm34", q.q, n, i_t, k)?;
    check_negation_pairing("thm34", q.q, n, i_t)?;
    if !zn::in_cyclic_subgroup(-1, -(q.q as i64), n)? {
        return Err(Error::not_applicable(
            "thm34",
            format!("-1 is not a power of -{} mod {n}", q.q),
        ));
    }
    let (a, b) = a_b(q.q, n, i_t, k)?;
    let ba = &b * &a; // i_t (q^k-1)^2 / (n (q-1))
    let mut sum = BigInt::zero();
    for r in zn::divisors(k) {
        let qr = qp(q.q, r) - 1;
        let t1 = gcd_all([qr.clone(), a.clone(), b.clone()]);
        let t2 = gcd_all([qr.clone(), bi(2) * &a]);
        let t3 = gcd_all([&qr * &t1, bi(2) * &ba]);
        sum += bi(zn::euler_phi(k / r)) * (bi(2) * t1 + t2 + t3);
    }
    let val = exact_div(&sum, &bi(2 * k), "sum / 2k")?;
    to_unsigned(val, "orbit count")
}

/// Exact orbit count on the same paired code for the group extended by both
/// multipliers -1 and -q, in the case where -1 is not a power of -q mod n.
/// Literal form over r = 0..m-1 with m the order of q mod n.
pub fn thm35(q: &PrimePower, n: u64, i_t: u64, k: u64) -> Result<BigUint> {
    let m = check_coset("thm35", q.q, n, i_t, k)?;
    check_negation_pairing("thm35", q.q, n, i_t)?;
    if zn::in_cyclic_subgroup(-1, -(q.q as i64), n)? {
        return Err(Error::not_applicable(
            "thm35",
            format!("-1 is a power of -{} mod {n}", q.q),
        ));
    }
    let (a, b) = a_b(q.q, n, i_t, k)?;
    let ba = &b * &a;
    let mut sum = BigInt::zero();
    for r in 0..m {
        let g = if r == 0 { k } else { zn::gcd_u64(k, r) };
        let g2r = if r == 0 { k } else { zn::gcd_u64(k, 2 * r) };
        let qg = qp(q.q, g) - 1;
        let t1 = gcd_all([qg.clone(), a.clone(), b.clone()]);
        let t2 = gcd_all([qp(q.q, g2r) - 1, bi(2) * &a, &b * (qp(q.q, r) - 1)]);
        let t3 = gcd_all([&qg * &t1, bi(2) * &ba]);
        sum += bi(2) * t1 + t2 + t3;
    }
    let val = exact_div(&sum, &bi(2 * m), "sum / 2m")?;
    to_unsigned(val, "orbit count")
}

/// Exact orbit count on the code paired through the multiplier
/// (-1)^l0 p^(e/2), available when the field order q = p^e has even e.
/// `w` below is the representative of (-1)^l0 p^(-e/2) mod n.
pub fn thm36(q: &PrimePower, n: u64, i_t: u64, k: u64, l0: u8) -> Result<BigUint> {
    if q.e % 2 != 0 {
        return Err(Error::not_applicable(
            "thm36",
            format!("field order {} = {}^{} has odd exponent", q.q, q.p, q.e),
        ));
    }
    let m = check_coset("thm36", q.q, n, i_t, k)?;
    let mut root = 1u64; // p^(e/2) mod n
    for _ in 0..(q.e / 2) {
        root = zn::mul_mod(root, q.p % n.max(1), n);
    }
    let w_pos = zn::inv_mod(root as i64, n)?;
    let w = if l0 % 2 == 0 {
        w_pos
    } else {
        zn::normalize_mod(-(w_pos as i64), n)
    };
    // The paired coset must differ from the base coset.
    let c = zn::coset_of(i_t, n, q.q);
    let partner = zn::mul_mod(w, i_t % n, n);
    if c.contains(partner) {
        return Err(Error::not_applicable(
            "thm36",
            format!("(-1)^{l0} p^(-e/2) i_t = {partner} mod {n} lies in the coset of {i_t}"),
        ));
    }
    let (a, b) = a_b(q.q, n, i_t, k)?;
    let ba = &b * &a;
    let mut sum = BigInt::zero();
    for r in 0..m {
        let g = if r == 0 { k } else { zn::gcd_u64(k, r) };
        let qg = qp(q.q, g) - 1;
        let t1 = gcd_all([qg.clone(), a.clone(), b.clone()]);
        let mid_exp = zn::gcd_u64(k, 2 * r + 1);
        let t2 = gcd_all([
            qp(q.q, mid_exp) - 1,
            bi(2) * &a,
            (bi(w) + qp(q.q, r)) * &b,
        ]);
        let t3 = gcd_all([&qg * &t1, (bi(w) - 1) * &ba]);
        sum += bi(2) * t1 + t2 + t3;
    }
    let val = exact_div(&sum, &bi(2 * m), "sum / 2m")?;
    to_unsigned(val, "orbit count")
}

/// Witness that a length and coset fall in the two-weight family built from
/// q = 2^e (e > 1) with 3 | (q + 1): returns the divisor N of q - 1 with
/// n = (q^2 - 1)/(3N), if all hypotheses hold. A true result forces the
/// coset size to 2 and at most two nonzero weights.
pub fn predicate_cor31(q: &PrimePower, n: u64, i_t: u64) -> Result<Option<u64>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if n != 1 && zn::gcd_u64(q.q % n, n) != 1 {
        return Err(Error::RepeatedRoot { n, q: q.q });
    }
    if q.p != 2 || q.e < 2 {
        return Ok(None);
    }
    let qq = q.q;
    if zn::gcd_u64(qq - 1, 3) != 1 || (qq + 1) % 3 != 0 {
        return Ok(None);
    }
    let num = qq * qq - 1;
    if num % (3 * n) != 0 {
        return Ok(None);
    }
    let cap_n = num / (3 * n);
    if cap_n == 0 || (qq - 1) % cap_n != 0 {
        return Ok(None);
    }
    if zn::gcd_u64(i_t % n, (qq + 1) / 3) != 1 {
        return Ok(None);
    }
    Ok(Some(cap_n))
}

/// Witness that a length and coset fall in the three-weight family indexed
/// by a pair of odd primes (k, 2k+1): returns (k, N) with
/// n = (q^k - 1)/((2k+1) N) and N | q - 1, if all hypotheses hold. A true
/// result forces the coset size to k and at most three nonzero weights.
pub fn predicate_cor32(q: &PrimePower, n: u64, i_t: u64) -> Result<Option<(u64, u64)>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if n != 1 && zn::gcd_u64(q.q % n, n) != 1 {
        return Err(Error::RepeatedRoot { n, q: q.q });
    }
    let qq = q.q;
    let bound = bi(2 * 64 + 1) * bi(n) * (bi(qq) - 1); // loose, recomputed per k below
    let _ = bound;
    let mut k = 3u64;
    loop {
        // q^k - 1 = (2k+1) n N with N | q - 1 bounds the search.
        let qk1 = qp(qq, k) - 1;
        let limit = bi(2 * k + 1) * bi(n) * (bi(qq) - 1);
        if qk1 > limit {
            return Ok(None);
        }
        if crate::gf::is_prime(k) && crate::gf::is_prime(2 * k + 1) && !(qq == 2 && k == 3) {
            let ok_gcds = zn::gcd_u64(qq - 1, k) == 1 && zn::gcd_u64(qq - 1, 2 * k + 1) == 1;
            if ok_gcds && zn::pow_mod(qq, k, 2 * k + 1) == 1 % (2 * k + 1) {
                let den = bi((2 * k + 1) * n);
                let (cap_n, rem) = qk1.div_rem(&den);
                if rem.is_zero() {
                    if let Some(cap_n) = cap_n.to_u64() {
                        if cap_n > 0 && (qq - 1) % cap_n == 0 {
                            // l = (q^k - 1)/((2k+1)(q-1)) is an integer by the
                            // gcd hypotheses.
                            let l = exact_div(
                                &qk1,
                                &(bi(2 * k + 1) * (bi(qq) - 1)),
                                "(q^k-1)/((2k+1)(q-1))",
                            )?;
                            let g = gcd_all([bi(i_t % n), l]);
                            if g.is_one() {
                                return Ok(Some((k, cap_n)));
                            }
                        }
                    }
                }
            }
        }
        k += if k == 3 { 2 } else { 2 };
        if k > 200 {
            return Ok(None);
        }
    }
}

/// The bound methods reported for a coset family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Method {
    #[serde(rename = "thm31")]
    Thm31,
    #[serde(rename = "thm32")]
    Thm32,
    #[serde(rename = "thm33")]
    Thm33,
    #[serde(rename = "cor33")]
    Cor33,
    #[serde(rename = "cor34")]
    Cor34,
    #[serde(rename = "thm34")]
    Thm34,
    #[serde(rename = "thm35")]
    Thm35,
    #[serde(rename = "thm36_l0")]
    Thm36L0,
    #[serde(rename = "cz_published")]
    CzPublished,
    #[serde(rename = "cz_corrected")]
    CzCorrected,
    #[serde(rename = "rho_sigma_irreducible")]
    RhoSigmaIrreducible,
}

impl Method {
    pub const ALL: [Method; 11] = [
        Method::Thm31,
        Method::Thm32,
        Method::Thm33,
        Method::Cor33,
        Method::Cor34,
        Method::Thm34,
        Method::Thm35,
        Method::Thm36L0,
        Method::CzPublished,
        Method::CzCorrected,
        Method::RhoSigmaIrreducible,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Thm31 => "thm31",
            Method::Thm32 => "thm32",
            Method::Thm33 => "thm33",
            Method::Cor33 => "cor33",
            Method::Cor34 => "cor34",
            Method::Thm34 => "thm34",
            Method::Thm35 => "thm35",
            Method::Thm36L0 => "thm36_l0",
            Method::CzPublished => "cz_published",
            Method::CzCorrected => "cz_corrected",
            Method::RhoSigmaIrreducible => "rho_sigma_irreducible",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One method's outcome inside a report.
#[derive(Debug, Clone, Serialize)]
pub struct BoundEntry {
    pub method: Method,
    pub applicable: bool,
    /// Decimal value when applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    /// Failed hypothesis when not applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Which pairing sign variant produced the value (thm36 only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l0: Option<u8>,
}

impl BoundEntry {
    fn ok(method: Method, v: &BigUint) -> Self {
        BoundEntry { method, applicable: true, value: Some(v.to_string()), reason: None, l0: None }
    }

    fn no(method: Method, reason: String) -> Self {
        BoundEntry { method, applicable: false, value: None, reason: Some(reason), l0: None }
    }

    pub fn value_big(&self) -> Option<BigUint> {
        self.value.as_ref().map(|s| s.parse().expect("stored decimal value"))
    }
}

/// All method outcomes for one coset family, plus enough context to rank
/// them. `entries` always holds every method, in `Method::ALL` order.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub q: u64,
    pub n: u64,
    pub cosets: Vec<u64>,
    pub dim: u64,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn entry(&self, m: Method) -> &BoundEntry {
        self.entries.iter().find(|e| e.method == m).expect("all methods present")
    }

    pub fn value(&self, m: Method) -> Option<BigUint> {
        let e = self.entry(m);
        if e.applicable {
            e.value_big()
        } else {
            None
        }
    }

    /// Smallest applicable bound; ties break toward the earlier method.
    pub fn best(&self) -> Option<(Method, BigUint)> {
        let mut best: Option<(Method, BigUint)> = None;
        for e in &self.entries {
            if let (true, Some(v)) = (e.applicable, e.value_big()) {
                match &best {
                    Some((_, bv)) if *bv <= v => {}
                    _ => best = Some((e.method, v)),
                }
            }
        }
        best
    }

    /// JSON object with one key per method plus context and best pick.
    pub fn to_json(&self) -> serde_json::Value {
        let mut methods = serde_json::Map::new();
        for e in &self.entries {
            let mut obj = serde_json::Map::new();
            obj.insert("applicable".into(), e.applicable.into());
            if let Some(v) = &e.value {
                obj.insert("value".into(), serde_json::Value::String(v.clone()));
            }
            if let Some(r) = &e.reason {
                obj.insert("reason".into(), serde_json::Value::String(r.clone()));
            }
            if let Some(l0) = e.l0 {
                obj.insert("l0".into(), l0.into());
            }
            methods.insert(e.method.name().into(), serde_json::Value::Object(obj));
        }
        let best = self.best().map(|(m, v)| {
            serde_json::json!({"method": m.name(), "value": v.to_string()})
        });
        serde_json::json!({
            "q": self.q,
            "n": self.n,
            "cosets": self.cosets,
            "dim": self.dim,
            "methods": serde_json::Value::Object(methods),
            "best": best,
        })
    }
}

fn entry_from(method: Method, res: Result<BigUint>) -> Result<BoundEntry> {
    match res {
        Ok(v) => Ok(BoundEntry::ok(method, &v)),
        Err(Error::NotApplicable { reason, .. }) => Ok(BoundEntry::no(method, reason)),
        Err(e) => Err(e),
    }
}

/// Evaluates every bound method on the coset family, recording a value or a
/// reason per method. Reps are normalized to minimal coset representatives
/// and must name pairwise distinct cosets.
pub fn bound_report(q: &PrimePower, n: u64, reps: &[u64]) -> Result<BoundReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if n != 1 && zn::gcd_u64(q.q % n, n) != 1 {
        return Err(Error::RepeatedRoot { n, q: q.q });
    }
    if reps.is_empty() {
        return Err(Error::InvalidParameter("at least one coset is required".into()));
    }
    let mut cosets: Vec<zn::CyclotomicCoset> = Vec::new();
    for &r in reps {
        let c = zn::coset_of(r, n, q.q);
        if cosets.iter().any(|x| x.rep == c.rep) {
            return Err(Error::DuplicateCosets(reps.to_vec()));
        }
        cosets.push(c);
    }
    cosets.sort_by_key(|c| c.rep);
    let reps: Vec<u64> = cosets.iter().map(|c| c.rep).collect();
    let dim: u64 = cosets.iter().map(|c| c.size()).sum();
    let v = cosets.len();

    let mut entries = Vec::with_capacity(Method::ALL.len());

    // Irreducible-only methods.
    let not_irr = |m: Method| BoundEntry::no(m, format!("code has {v} cosets; needs exactly 1"));
    if v == 1 {
        let (i, k) = (cosets[0].rep, cosets[0].size());
        entries.push(entry_from(Method::Thm31, thm31_irreducible(q, n, i, k))?);
    } else {
        entries.push(not_irr(Method::Thm31));
    }

    entries.push(match thm32_general(q, n, &reps) {
        Ok(s) => BoundEntry::ok(Method::Thm32, &s.total),
        Err(Error::NotApplicable { reason, .. }) => BoundEntry::no(Method::Thm32, reason),
        Err(e) => return Err(e),
    });

    // Two-coset methods.
    let not_pair = |m: Method| BoundEntry::no(m, format!("code has {v} cosets; needs exactly 2"));
    if v == 2 {
        // Order so the smaller size comes first; ties by representative.
        let (ca, cb) = if (cosets[0].size(), cosets[0].rep) <= (cosets[1].size(), cosets[1].rep) {
            (&cosets[0], &cosets[1])
        } else {
            (&cosets[1], &cosets[0])
        };
        entries.push(entry_from(
            Method::Thm33,
            thm33_two_cosets(q, n, ca.rep, ca.size(), cb.rep, cb.size()),
        )?);
        if ca.size() == 1 {
            entries.push(entry_from(Method::Cor33, cor33(q, n, ca.rep, cb.rep, cb.size()))?);
        } else {
            entries.push(BoundEntry::no(
                Method::Cor33,
                format!("smaller coset has size {}; needs size 1", ca.size()),
            ));
        }
        if ca.size() == cb.size() {
            entries.push(entry_from(Method::Cor34, cor34(q, n, ca.rep, cb.rep, ca.size()))?);
        } else {
            entries.push(BoundEntry::no(
                Method::Cor34,
                format!("coset sizes {} and {} differ", ca.size(), cb.size()),
            ));
        }

        // Negation pairing: the second coset must be the image of the first
        // under x -> -x.
        let neg_rep = zn::coset_of(zn::normalize_mod(-(ca.rep as i64), n), n, q.q).rep;
        if neg_rep == cb.rep {
            entries.push(entry_from(Method::Thm34, thm34(q, n, ca.rep, ca.size()))?);
            entries.push(entry_from(Method::Thm35, thm35(q, n, ca.rep, ca.size()))?);
        } else {
            let why = format!(
                "coset of -{} mod {n} is {neg_rep}, not the partner coset {}",
                ca.rep, cb.rep
            );
            entries.push(BoundEntry::no(Method::Thm34, why.clone()));
            entries.push(BoundEntry::no(Method::Thm35, why));
        }

        // Square-root-of-q pairing, each sign separately; report the smaller
        // value when both apply.
        let mut thm36_entry: Option<BoundEntry> = None;
        let mut thm36_reasons = Vec::new();
        if q.e % 2 == 0 {
            for l0 in [0u8, 1u8] {
                let mut root = 1u64;
                for _ in 0..(q.e / 2) {
                    root = zn::mul_mod(root, q.p % n.max(1), n);
                }
                let w_pos = zn::inv_mod(root as i64, n)?;
                let w = if l0 == 0 { w_pos } else { zn::normalize_mod(-(w_pos as i64), n) };
                let partner = zn::coset_of(zn::mul_mod(w, ca.rep, n), n, q.q).rep;
                if partner != cb.rep {
                    thm36_reasons.push(format!(
                        "l0={l0}: coset of (-1)^l0 p^(-e/2) {} mod {n} is {partner}, not {}",
                        ca.rep, cb.rep
                    ));
                    continue;
                }
                match thm36(q, n, ca.rep, ca.size(), l0) {
                    Ok(v) => {
                        let better = match &thm36_entry {
                            Some(e) => e.value_big().map(|old| v < old).unwrap_or(true),
                            None => true,
                        };
                        if better {
                            let mut e = BoundEntry::ok(Method::Thm36L0, &v);
                            e.l0 = Some(l0);
                            thm36_entry = Some(e);
                        }
                    }
                    Err(Error::NotApplicable { reason, .. }) => {
                        thm36_reasons.push(format!("l0={l0}: {reason}"))
                    }
                    Err(e) => return Err(e),
                }
            }
        } else {
            thm36_reasons.push(format!("field order {} = {}^{} has odd exponent", q.q, q.p, q.e));
        }
        entries.push(thm36_entry.unwrap_or_else(|| {
            BoundEntry::no(Method::Thm36L0, thm36_reasons.join("; "))
        }));
    } else {
        entries.push(not_pair(Method::Thm33));
        entries.push(not_pair(Method::Cor33));
        entries.push(not_pair(Method::Cor34));
        entries.push(not_pair(Method::Thm34));
        entries.push(not_pair(Method::Thm35));
        entries.push(not_pair(Method::Thm36L0));
    }

    entries.push(match cz_published(q, n, &reps) {
        Ok(s) => BoundEntry::ok(Method::CzPublished, &s.total),
        Err(Error::NotApplicable { reason, .. }) => BoundEntry::no(Method::CzPublished, reason),
        Err(e) => return Err(e),
    });
    entries.push(match cz_corrected(q, n, &reps) {
        Ok(s) => BoundEntry::ok(Method::CzCorrected, &s.total),
        Err(Error::NotApplicable { reason, .. }) => BoundEntry::no(Method::CzCorrected, reason),
        Err(e) => return Err(e),
    });
    if v == 1 {
        entries.push(entry_from(
            Method::RhoSigmaIrreducible,
            rho_sigma_irreducible(q, n, cosets[0].rep, cosets[0].size()),
        )?);
    } else {
        entries.push(not_irr(Method::RhoSigmaIrreducible));
    }

    // Keep entries aligned with Method::ALL.
    debug_assert!(entries.iter().map(|e| e.method).eq(Method::ALL));

    Ok(BoundReport { q: q.q, n, cosets: reps, dim, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(p: u64, e: u32) -> PrimePower {
        PrimePower::new(p, e).unwrap()
    }

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn irreducible_counts() {
        assert_eq!(thm31_irreducible(&pp(2, 1), 9, 1, 6).unwrap(), u(3));
        assert_eq!(thm31_irreducible(&pp(2, 3), 21, 7, 2).unwrap(), u(2));
        assert_eq!(thm31_irreducible(&pp(3, 1), 22, 2, 5).unwrap(), u(3));
        assert_eq!(thm31_irreducible(&pp(2, 1), 9, 0, 1).unwrap(), u(1));
    }

    #[test]
    fn shift_scalar_counts() {
        assert_eq!(rho_sigma_irreducible(&pp(2, 1), 9, 1, 6).unwrap(), u(7));
        assert_eq!(rho_sigma_irreducible(&pp(2, 1), 7, 1, 3).unwrap(), u(1));
    }

    #[test]
    fn strictness_condition() {
        assert!(thm31_strictly_better(&pp(2, 1), 9, 1, 6).unwrap());
        assert!(!thm31_strictly_better(&pp(2, 1), 7, 1, 3).unwrap());
    }

    #[test]
    fn coset_size_is_checked() {
        assert!(thm31_irreducible(&pp(2, 1), 9, 1, 3).is_err());
    }

    #[test]
    fn two_coset_counts() {
        assert_eq!(cor33(&pp(2, 1), 15, 0, 3, 4).unwrap(), u(5));
        assert_eq!(cor34(&pp(2, 1), 15, 1, 3, 4).unwrap(), u(8));
        assert_eq!(cor34(&pp(2, 1), 7, 1, 3, 3).unwrap(), u(5));
        assert_eq!(cor34(&pp(2, 1), 21, 3, 9, 3).unwrap(), u(5));
        assert_eq!(cor34(&pp(4, 2), 15, 1, 2, 2).unwrap(), u(5));
        assert_eq!(cor34(&pp(4, 2), 15, 1, 7, 2).unwrap(), u(11));
        assert_eq!(cor33(&pp(2, 1), 7, 0, 1, 3).unwrap(), u(5));
    }

    #[test]
    fn general_theorem_agrees_with_its_corollaries() {
        let q2 = pp(2, 1);
        assert_eq!(
            thm33_two_cosets(&q2, 15, 0, 1, 3, 4).unwrap(),
            cor33(&q2, 15, 0, 3, 4).unwrap()
        );
        assert_eq!(
            thm33_two_cosets(&q2, 15, 1, 4, 3, 4).unwrap(),
            cor34(&q2, 15, 1, 3, 4).unwrap()
        );
        let q4 = pp(4, 2);
        assert_eq!(
            thm33_two_cosets(&q4, 15, 1, 2, 7, 2).unwrap(),
            cor34(&q4, 15, 1, 7, 2).unwrap()
        );
    }

    #[test]
    fn paired_code_counts() {
        assert_eq!(thm34(&pp(2, 1), 7, 1, 3).unwrap(), u(4));
        assert_eq!(thm35(&pp(2, 1), 21, 3, 3).unwrap(), u(4));
        assert_eq!(thm36(&pp(4, 2), 15, 1, 2, 0).unwrap(), u(3));
        assert_eq!(thm36(&pp(4, 2), 15, 1, 2, 1).unwrap(), u(6));
    }

    #[test]
    fn paired_code_hypotheses() {
        // -1 is a power of -2 mod 7, so the two-multiplier variant refuses.
        assert!(matches!(
            thm35(&pp(2, 1), 7, 1, 3),
            Err(Error::NotApplicable { .. })
        ));
        assert!(matches!(
            thm34(&pp(2, 1), 21, 3, 3),
            Err(Error::NotApplicable { .. })
        ));
        // mod 9 the coset of 1 contains -1 = 8, so there is no pairing.
        assert!(matches!(
            thm34(&pp(2, 1), 9, 1, 6),
            Err(Error::NotApplicable { .. })
        ));
    }

    #[test]
    fn subset_sums() {
        let q2 = pp(2, 1);
        assert_eq!(thm32_general(&q2, 15, &[0, 3]).unwrap().total, u(5));
        assert_eq!(thm32_general(&q2, 15, &[1, 3]).unwrap().total, u(8));
        assert_eq!(cz_published(&q2, 15, &[0, 3]).unwrap().total, u(7));
        assert_eq!(cz_published(&q2, 15, &[1, 3]).unwrap().total, u(19));
        assert_eq!(cz_published(&q2, 9, &[1]).unwrap().total, u(7));
        assert_eq!(cz_corrected(&q2, 9, &[1]).unwrap().total, u(7));
    }

    #[test]
    fn subset_chain_on_examples() {
        let q2 = pp(2, 1);
        for reps in [vec![0, 3], vec![1, 3], vec![1], vec![3, 5, 7]] {
            let t32 = thm32_general(&q2, 15, &reps).unwrap();
            let corr = cz_corrected(&q2, 15, &reps).unwrap();
            let publ = cz_published(&q2, 15, &reps).unwrap();
            assert!(t32.total <= corr.total, "{reps:?}");
            assert!(corr.total <= publ.total, "{reps:?}");
            for (a, b) in t32.terms.iter().zip(&corr.terms) {
                assert!(a.le(b), "{reps:?} term {:?}", a.reps);
            }
            for (a, b) in corr.terms.iter().zip(&publ.terms) {
                assert!(a.le(b), "{reps:?} term {:?}", a.reps);
            }
        }
    }

    #[test]
    fn family_predicates() {
        assert_eq!(predicate_cor31(&pp(8, 3), 21, 7).unwrap(), Some(1));
        assert_eq!(predicate_cor31(&pp(8, 3), 21, 3).unwrap(), None);
        assert_eq!(predicate_cor31(&pp(2, 1), 9, 1).unwrap(), None);
        assert_eq!(predicate_cor32(&pp(3, 1), 22, 2).unwrap(), Some((5, 1)));
        assert_eq!(predicate_cor32(&pp(2, 1), 9, 1).unwrap(), None);
    }

    #[test]
    fn report_shape() {
        let rep = bound_report(&pp(2, 1), 9, &[1]).unwrap();
        assert_eq!(rep.dim, 6);
        assert_eq!(rep.value(Method::Thm31), Some(u(3)));
        assert_eq!(rep.value(Method::RhoSigmaIrreducible), Some(u(7)));
        assert!(!rep.entry(Method::Thm33).applicable);
        let (m, v) = rep.best().unwrap();
        assert_eq!((m, v), (Method::Thm31, u(3)));

        let rep = bound_report(&pp(2, 1), 7, &[1, 3]).unwrap();
        assert_eq!(rep.value(Method::Thm34), Some(u(4)));
        assert_eq!(rep.value(Method::Cor34), Some(u(5)));
        assert!(!rep.entry(Method::Thm35).applicable);
        assert_eq!(rep.best().unwrap().1, u(4));

        let rep = bound_report(&pp(4, 2), 15, &[1, 2]).unwrap();
        let e = rep.entry(Method::Thm36L0);
        assert_eq!(e.l0, Some(0));
        assert_eq!(e.value_big(), Some(u(3)));

        let rep = bound_report(&pp(4, 2), 15, &[1, 7]).unwrap();
        let e = rep.entry(Method::Thm36L0);
        assert_eq!(e.l0, Some(1));
        assert_eq!(e.value_big(), Some(u(6)));
    }

    #[test]
    fn report_chain_invariants() {
        for (p, e, n) in [(2u64, 1u32, 15u64), (2, 1, 9), (3, 1, 13), (2, 2, 15)] {
            let q = pp(p, e);
            let all = zn::cyclotomic_cosets(n, q.q).unwrap();
            for c in &all {
                let rep = bound_report(&q, n, &[c.rep]).unwrap();
                let t31 = rep.value(Method::Thm31).unwrap();
                let rs = rep.value(Method::RhoSigmaIrreducible).unwrap();
                assert!(t31 <= rs);
                assert!(t31 >= u(1));
                let t32 = rep.value(Method::Thm32).unwrap();
                let corr = rep.value(Method::CzCorrected).unwrap();
                assert!(t32 <= corr);
                assert_eq!(rs, corr);
            }
        }
    }
}
