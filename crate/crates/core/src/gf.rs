//! Exact arithmetic in `F_p[x]/(f)`.
//!
//! Elements are coefficient vectors in ascending degree (index 0 is the
//! constant term). The canonical order on elements is the base-`p` integer
//! encoding `sum c_i p^i`, so `x + 1` in `F_9` encodes to 4.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{checked_pow, inv_mod_prime, is_prime, prime_divisors};
use crate::error::{Error, Result};

/// A field element as its coefficient vector over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FFElem {
    coeffs: Vec<u64>,
}

impl FFElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn degree_len(&self) -> usize {
        self.coeffs.len()
    }
}

/// Polynomial arithmetic modulo a monic `f` over `F_p`.
///
/// Irreducibility is not assumed here, so this also serves the
/// primitive-polynomial search and the irreducibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
struct QuotientRing {
    p: u64,
    d: usize,
    // ascending, length d + 1, leading coefficient 1
    modulus: Vec<u64>,
}

impl QuotientRing {
    fn zero(&self) -> FFElem {
        FFElem { coeffs: vec![0; self.d] }
    }

    fn one(&self) -> FFElem {
        let mut e = self.zero();
        e.coeffs[0] = 1;
        e
    }

    /// `x` reduced modulo `f` (equal to `-f_0` when `d = 1`).
    fn var(&self) -> FFElem {
        if self.d == 1 {
            let mut e = self.zero();
            e.coeffs[0] = (self.p - self.modulus[0]) % self.p;
            e
        } else {
            let mut e = self.zero();
            e.coeffs[1] = 1;
            e
        }
    }

    fn add(&self, a: &FFElem, b: &FFElem) -> FFElem {
        let p = self.p;
        FFElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| {
                    let s = x + y;
                    if s >= p {
                        s - p
                    } else {
                        s
                    }
                })
                .collect(),
        }
    }

    fn sub(&self, a: &FFElem, b: &FFElem) -> FFElem {
        let p = self.p;
        FFElem {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| if x >= y { x - y } else { x + p - y }).collect(),
        }
    }

    fn neg(&self, a: &FFElem) -> FFElem {
        let p = self.p;
        FFElem { coeffs: a.coeffs.iter().map(|&x| if x == 0 { 0 } else { p - x }).collect() }
    }

    fn scale(&self, a: &FFElem, c: u64) -> FFElem {
        let p = self.p;
        let c = c % p;
        FFElem { coeffs: a.coeffs.iter().map(|&x| (x as u128 * c as u128 % p as u128) as u64).collect() }
    }

    fn mul(&self, a: &FFElem, b: &FFElem) -> FFElem {
        let (p, d) = (self.p, self.d);
        let p128 = p as u128;
        let mut prod = vec![0u128; 2 * d - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] += x as u128 * y as u128;
            }
            // keep the accumulators bounded for large p
            if p > u32::MAX as u64 / 4 {
                for c in prod.iter_mut() {
                    *c %= p128;
                }
            }
        }
        let mut r: Vec<u64> = prod.into_iter().map(|c| (c % p128) as u64).collect();
        for top in (d..r.len()).rev() {
            let c = r[top];
            if c == 0 {
                continue;
            }
            r[top] = 0;
            let base = top - d;
            for j in 0..d {
                let m = self.modulus[j];
                if m == 0 {
                    continue;
                }
                let t = (c as u128 * m as u128 % p128) as u64;
                let v = r[base + j];
                r[base + j] = if v >= t { v - t } else { v + p - t };
            }
        }
        r.truncate(d);
        FFElem { coeffs: r }
    }

    fn pow(&self, a: &FFElem, mut e: u128) -> FFElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` by non-zero `b` over `F_p`, both ascending.
fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    trim(&mut a);
    let db = b.len() - 1;
    let lead_inv = inv_mod_prime(b[db], p);
    while a.len() > db {
        let top = a.len() - 1;
        let c = a[top] as u128 * lead_inv as u128 % p as u128;
        let shift = top - db;
        for (j, &bj) in b.iter().enumerate() {
            let t = (c * bj as u128 % p as u128) as u64;
            let v = a[shift + j];
            a[shift + j] = if v >= t { v - t } else { v + p - t };
        }
        trim(&mut a);
    }
    a
}

fn poly_gcd(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a, b);
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin's irreducibility test for a monic polynomial of degree `d`.
fn is_irreducible(ring: &QuotientRing) -> bool {
    let (p, d) = (ring.p, ring.d);
    if d == 1 {
        return true;
    }
    let x = ring.var();
    // x^(p^k) by k successive p-th powers
    let frob_iter = |k: usize| {
        let mut y = x.clone();
        for _ in 0..k {
            y = ring.pow(&y, p as u128);
        }
        y
    };
    if frob_iter(d) != x {
        return false;
    }
    for r in prime_divisors(d as u64) {
        let y = frob_iter(d / r as usize);
        let diff = ring.sub(&y, &x);
        let g = poly_gcd(ring.modulus.clone(), diff.coeffs, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// A validated finite field `F_{p^d}` with fixed modulus and generator.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    ring: QuotientRing,
    generator: FFElem,
    order: u64,
    order_primes: Vec<u64>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.generator == other.generator
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds `F_{p^d}`.
    ///
    /// `modulus` is ascending and monic of degree `d`. Without a modulus the
    /// smallest primitive polynomial is used (for `d = 1`, the polynomial
    /// `x`) and the generator defaults to `x`; otherwise it defaults to the
    /// smallest element of full order.
    pub fn new(p: u64, d: usize, modulus: Option<&[u64]>, generator: Option<&[u64]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > u32::MAX as u64 {
            return Err(Error::Unsupported(format!("characteristic {p} exceeds 32 bits")));
        }
        if d == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let size = checked_pow(p, d as u32)
            .filter(|&s| s < (1u64 << 62))
            .ok_or_else(|| Error::Unsupported(format!("field {p}^{d} is too large")))?;
        let order = size - 1;
        let order_primes = prime_divisors(order);

        let (ring, default_gen_is_x) = match modulus {
            Some(m) => {
                if m.len() != d + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected degree {d}, got degree {}",
                        m.len().saturating_sub(1)
                    )));
                }
                if m[d] != 1 {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(Error::OutOfRange(format!("coefficient {c} not in [0, {p})")));
                }
                let ring = QuotientRing { p, d, modulus: m.to_vec() };
                if !is_irreducible(&ring) {
                    return Err(Error::NotIrreducible { p });
                }
                (ring, false)
            }
            None if d == 1 => (QuotientRing { p, d, modulus: vec![0, 1] }, false),
            None => (smallest_primitive_polynomial(p, d, order, &order_primes), true),
        };

        let mut ctx = FieldCtx { ring, generator: FFElem { coeffs: vec![] }, order, order_primes };
        ctx.generator = match generator {
            Some(g) => {
                let g = ctx.from_coeffs(g)?;
                if g.is_zero() {
                    return Err(Error::ZeroArgument);
                }
                let ord = ctx.element_order(&g)?;
                if ord != order {
                    return Err(Error::NotGenerator { order: ord, expected: order });
                }
                g
            }
            None if default_gen_is_x => ctx.ring.var(),
            None => ctx.find_generator(),
        };
        Ok(ctx)
    }

    pub fn characteristic(&self) -> u64 {
        self.ring.p
    }

    pub fn degree(&self) -> usize {
        self.ring.d
    }

    /// Ascending coefficients of the monic modulus, length `d + 1`.
    pub fn modulus(&self) -> &[u64] {
        &self.ring.modulus
    }

    pub fn generator(&self) -> &FFElem {
        &self.generator
    }

    /// Order of the multiplicative group, `p^d - 1`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Number of elements, `p^d`.
    pub fn size(&self) -> u64 {
        self.order + 1
    }

    pub fn zero(&self) -> FFElem {
        self.ring.zero()
    }

    pub fn one(&self) -> FFElem {
        self.ring.one()
    }

    /// The class of `x` (the root of the modulus).
    pub fn var(&self) -> FFElem {
        self.ring.var()
    }

    /// The prime-field constant `c mod p`.
    pub fn constant(&self, c: u64) -> FFElem {
        let mut e = self.zero();
        e.coeffs[0] = c % self.ring.p;
        e
    }

    /// Validates a coefficient list; shorter lists are zero-padded.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FFElem> {
        if coeffs.len() > self.ring.d {
            return Err(Error::DimensionMismatch { expected: self.ring.d, got: coeffs.len() });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.ring.p) {
            return Err(Error::OutOfRange(format!("coefficient {c} not in [0, {})", self.ring.p)));
        }
        let mut v = coeffs.to_vec();
        v.resize(self.ring.d, 0);
        Ok(FFElem { coeffs: v })
    }

    /// Whether `a` has the shape of an element of this field.
    pub fn contains(&self, a: &FFElem) -> bool {
        a.coeffs.len() == self.ring.d && a.coeffs.iter().all(|&c| c < self.ring.p)
    }

    /// Base-`p` integer encoding, constant term least significant.
    pub fn encode(&self, a: &FFElem) -> u64 {
        a.coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.ring.p + c)
    }

    pub fn decode(&self, mut code: u64) -> FFElem {
        let p = self.ring.p;
        let coeffs = (0..self.ring.d)
            .map(|_| {
                let c = code % p;
                code /= p;
                c
            })
            .collect();
        FFElem { coeffs }
    }

    /// All elements in canonical (encoding) order.
    pub fn elements(&self) -> impl Iterator<Item = FFElem> + '_ {
        (0..self.size()).map(move |c| self.decode(c))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FFElem {
        self.decode(rng.gen_range(0..self.size()))
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FFElem {
        self.decode(rng.gen_range(1..self.size()))
    }

    pub fn add(&self, a: &FFElem, b: &FFElem) -> FFElem {
        self.ring.add(a, b)
    }

    pub fn sub(&self, a: &FFElem, b: &FFElem) -> FFElem {
        self.ring.sub(a, b)
    }

    pub fn neg(&self, a: &FFElem) -> FFElem {
        self.ring.neg(a)
    }

    pub fn mul(&self, a: &FFElem, b: &FFElem) -> FFElem {
        self.ring.mul(a, b)
    }

    /// Multiplication by a prime-field scalar.
    pub fn scale(&self, a: &FFElem, c: u64) -> FFElem {
        self.ring.scale(a, c)
    }

    pub fn inv(&self, a: &FFElem) -> Result<FFElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.ring.pow(a, self.order as u128 - 1))
    }

    /// `a^e` for `e >= 0`; `a^0 = 1` including `a = 0`.
    pub fn pow(&self, a: &FFElem, e: u64) -> FFElem {
        if e == 0 {
            return self.one();
        }
        if a.is_zero() {
            return self.zero();
        }
        self.ring.pow(a, (e % self.order) as u128)
    }

    /// `a^e` for any integer `e`; negative exponents invert first.
    pub fn pow_signed(&self, a: &FFElem, e: i64) -> Result<FFElem> {
        if e >= 0 {
            return Ok(self.pow(a, e as u64));
        }
        let inv = self.inv(a)?;
        Ok(self.pow(&inv, e.unsigned_abs()))
    }

    /// The absolute Frobenius `a^p`.
    pub fn frobenius(&self, a: &FFElem) -> FFElem {
        self.ring.pow(a, self.ring.p as u128)
    }

    /// Multiplicative order, by descending through the prime factors of `p^d - 1`.
    pub fn element_order(&self, a: &FFElem) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let one = self.one();
        let mut e = self.order;
        for &r in &self.order_primes {
            while e.is_multiple_of(r) && self.ring.pow(a, (e / r) as u128) == one {
                e /= r;
            }
        }
        Ok(e)
    }

    /// The smallest element (canonical order) of order `p^d - 1`.
    pub fn find_generator(&self) -> FFElem {
        let one = self.one();
        (1..self.size())
            .map(|c| self.decode(c))
            .find(|a| self.order_primes.iter().all(|&r| self.ring.pow(a, (self.order / r) as u128) != one))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// Renders `a` with descending powers and explicit coefficients, e.g.
    /// `3*x^2+2`.
    pub fn format(&self, a: &FFElem) -> String {
        format_poly(&a.coeffs)
    }

    /// Parses either ascending comma-separated coefficients (`2,0,3`) or
    /// polynomial syntax in `x` (`3*x^2+2`, `2x+1`, `x^4-1`). Powers of `x`
    /// at or above the degree are reduced modulo the modulus.
    pub fn parse(&self, text: &str) -> Result<FFElem> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse { pos: 0, msg: "empty element".into() });
        }
        if trimmed.contains(',') {
            return self.parse_coefficient_list(text);
        }
        self.parse_polynomial(text)
    }

    fn parse_coefficient_list(&self, text: &str) -> Result<FFElem> {
        let mut coeffs = Vec::new();
        let mut pos = 0;
        for tok in text.split(',') {
            let t = tok.trim();
            let at = pos + tok.len() - tok.trim_start().len();
            let c: u64 =
                t.parse().map_err(|_| Error::Parse { pos: at, msg: format!("expected a coefficient, found {t:?}") })?;
            if c >= self.ring.p {
                return Err(Error::OutOfRange(format!("coefficient {c} not in [0, {})", self.ring.p)));
            }
            coeffs.push(c);
            pos += tok.len() + 1;
        }
        if coeffs.len() > self.ring.d {
            return Err(Error::DimensionMismatch { expected: self.ring.d, got: coeffs.len() });
        }
        self.from_coeffs(&coeffs)
    }

    fn parse_polynomial(&self, text: &str) -> Result<FFElem> {
        let bytes = text.as_bytes();
        let mut i = 0;
        let mut acc = self.zero();
        let mut first = true;
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        let read_int = |i: &mut usize| -> Option<u64> {
            let start = *i;
            while *i < bytes.len() && bytes[*i].is_ascii_digit() {
                *i += 1;
            }
            if start == *i {
                None
            } else {
                text[start..*i].parse().ok()
            }
        };
        loop {
            skip_ws(&mut i);
            let mut negative = false;
            if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                negative = bytes[i] == b'-';
                i += 1;
                skip_ws(&mut i);
            } else if !first {
                return Err(Error::Parse { pos: i, msg: "expected '+' or '-'".into() });
            }
            if i >= bytes.len() {
                return Err(Error::Parse { pos: i, msg: "expected a term".into() });
            }
            let term_start = i;
            let coeff = read_int(&mut i);
            let before_ws = i;
            skip_ws(&mut i);
            if coeff.is_some() && i > before_ws && i < bytes.len() && bytes[i] == b'x' {
                return Err(Error::Parse { pos: i, msg: "write '3*x' or '3x', not '3 x'".into() });
            }
            let mut has_star = false;
            if coeff.is_some() && i < bytes.len() && bytes[i] == b'*' {
                has_star = true;
                i += 1;
                skip_ws(&mut i);
            }
            let mut power = 0u64;
            if i < bytes.len() && bytes[i] == b'x' {
                i += 1;
                power = 1;
                skip_ws(&mut i);
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    skip_ws(&mut i);
                    power =
                        read_int(&mut i).ok_or_else(|| Error::Parse { pos: i, msg: "expected an exponent".into() })?;
                }
            } else if has_star || coeff.is_none() {
                return Err(Error::Parse { pos: i, msg: "expected 'x'".into() });
            }
            let c = coeff.unwrap_or(1);
            if c >= self.ring.p {
                return Err(Error::OutOfRange(format!(
                    "coefficient {c} at position {term_start} not in [0, {})",
                    self.ring.p
                )));
            }
            let monomial = if power == 0 {
                self.one()
            } else if (power as usize) < self.ring.d {
                let mut e = self.zero();
                e.coeffs[power as usize] = 1;
                e
            } else {
                self.ring.pow(&self.ring.var(), power as u128)
            };
            let term = self.scale(&monomial, c);
            acc = if negative { self.sub(&acc, &term) } else { self.add(&acc, &term) };
            first = false;
            skip_ws(&mut i);
            if i >= bytes.len() {
                break;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let modulus = FFElem { coeffs: self.ring.modulus.clone() };
        let mut terms = Vec::new();
        for (i, &c) in modulus.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            terms.push(match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            });
        }
        write!(f, "F_{}^{} mod {}", self.ring.p, self.ring.d, terms.join("+"))
    }
}

/// Smallest monic primitive polynomial of degree `d >= 2`, comparing the
/// non-leading coefficients as base-`p` encodings.
fn smallest_primitive_polynomial(p: u64, d: usize, order: u64, order_primes: &[u64]) -> QuotientRing {
    let tail_count = p.pow(d as u32);
    for code in 1..tail_count {
        if code % p == 0 {
            // zero constant term: x divides f
            continue;
        }
        let mut modulus: Vec<u64> = Vec::with_capacity(d + 1);
        let mut c = code;
        for _ in 0..d {
            modulus.push(c % p);
            c /= p;
        }
        modulus.push(1);
        let ring = QuotientRing { p, d, modulus };
        let x = ring.var();
        let one = ring.one();
        if ring.pow(&x, order as u128) != one {
            continue;
        }
        if order_primes.iter().all(|&r| ring.pow(&x, (order / r) as u128) != one) {
            return ring;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

/// Renders ascending coefficients as a polynomial in `x` with descending
/// powers and explicit coefficients; zero renders as `0`.
pub fn format_poly(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|&(_, &c)| c != 0)
        .map(|(i, &c)| match i {
            0 => format!("{c}"),
            1 => format!("{c}*x"),
            _ => format!("{c}*x^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Parses a polynomial such as `x^4+2` into ascending coefficients of
/// length `d + 1`, without reducing it.
pub fn parse_modulus(p: u64, d: usize, text: &str) -> Result<Vec<u64>> {
    // Parse in a ring large enough that nothing wraps.
    let ring = QuotientRing {
        p,
        d: d + 2,
        modulus: {
            let mut m = vec![0; d + 2];
            m.push(1);
            m
        },
    };
    let tmp = FieldCtx { ring, generator: FFElem { coeffs: vec![] }, order: 0, order_primes: vec![] };
    let e = if text.contains(',') { tmp.parse_coefficient_list(text)? } else { tmp.parse_polynomial(text)? };
    let mut coeffs = e.coeffs;
    trim(&mut coeffs);
    if coeffs.len() != d + 1 {
        return Err(Error::InvalidModulus(format!("expected degree {d}, got degree {}", coeffs.len() as i64 - 1)));
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FieldCtx {
        FieldCtx::new(3, 2, Some(&[1, 0, 1]), None).unwrap()
    }

    #[test]
    fn f9_relations() {
        let f = f9();
        let x = f.var();
        assert_eq!(f.mul(&x, &x), f.constant(2));
        let a = f.parse("x+1").unwrap();
        let b = f.parse("2*x+2").unwrap();
        assert!(f.add(&a, &b).is_zero());
        assert_eq!(f.inv(&x).unwrap(), f.parse("2*x").unwrap());
        assert_eq!(f.pow(&a, 8), f.one());
    }

    #[test]
    fn f9_orders_and_generator() {
        let f = f9();
        assert_eq!(f.element_order(&f.one()).unwrap(), 1);
        assert_eq!(f.element_order(&f.constant(2)).unwrap(), 2);
        assert_eq!(f.element_order(&f.parse("x+1").unwrap()).unwrap(), 8);
        assert_eq!(f.element_order(&f.var()).unwrap(), 4);
        assert_eq!(f.generator(), &f.parse("x+1").unwrap());
        assert_eq!(f.encode(f.generator()), 4);
        assert_eq!(f.element_order(&f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn power_ladder_of_x_plus_one() {
        // (x+1)^2 = 2x, (x+1)^4 = 2, (x+1)^8 = 1
        let f = f9();
        let g = f.parse("x+1").unwrap();
        assert_eq!(f.pow(&g, 2), f.parse("2*x").unwrap());
        assert_eq!(f.pow(&g, 4), f.constant(2));
        assert_eq!(f.pow(&g, 8), f.one());
    }

    #[test]
    fn f625_with_x4_plus_2() {
        let f = FieldCtx::new(5, 4, Some(&[2, 0, 0, 0, 1]), Some(&[2, 1])).unwrap();
        let x = f.var();
        assert_eq!(f.pow(&x, 4), f.constant(3));
        assert_eq!(f.element_order(f.generator()).unwrap(), 624);
        let err = FieldCtx::new(5, 4, Some(&[2, 0, 0, 0, 1]), Some(&[0, 1])).unwrap_err();
        assert_eq!(err, Error::NotGenerator { order: 16, expected: 624 });
        // user modulus, default generator has full order
        let g = FieldCtx::new(5, 4, Some(&[2, 0, 0, 0, 1]), None).unwrap();
        assert_eq!(g.element_order(g.generator()).unwrap(), 624);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldCtx::new(4, 2, None, None).unwrap_err(), Error::NotPrime(4));
        // x^2 + 2 = (x+1)(x+2) over F_3
        assert_eq!(FieldCtx::new(3, 2, Some(&[2, 0, 1]), None).unwrap_err(), Error::NotIrreducible { p: 3 });
        assert!(matches!(FieldCtx::new(3, 2, Some(&[1, 0, 2]), None), Err(Error::InvalidModulus(_))));
        assert!(matches!(FieldCtx::new(3, 2, Some(&[1, 1]), None), Err(Error::InvalidModulus(_))));
        assert_eq!(FieldCtx::new(3, 2, Some(&[1, 0, 1]), Some(&[0])).unwrap_err(), Error::ZeroArgument);
    }

    #[test]
    fn prime_fields_use_modulus_x() {
        let f = FieldCtx::new(7, 1, None, None).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.generator(), &f.constant(3));
        assert_eq!(f.mul(&f.constant(3), &f.constant(5)), f.constant(1));
    }

    #[test]
    fn default_modulus_is_primitive_and_deterministic() {
        let a = FieldCtx::new(3, 2, None, None).unwrap();
        let b = FieldCtx::new(3, 2, None, None).unwrap();
        assert_eq!(a, b);
        // x^2 + 1 is not primitive (x has order 4); x^2 + x + 2 is the first primitive one
        assert_eq!(a.modulus(), &[2, 1, 1]);
        assert_eq!(a.generator(), &a.var());
        assert_eq!(a.element_order(&a.var()).unwrap(), 8);
    }

    #[test]
    fn parse_and_format() {
        let f = FieldCtx::new(5, 4, Some(&[2, 0, 0, 0, 1]), None).unwrap();
        assert!(f.parse("0").unwrap().is_zero());
        let a = f.parse("x^2+3").unwrap();
        assert_eq!(a.coeffs(), &[3, 0, 1, 0]);
        assert_eq!(f.parse("2,0,3,0").unwrap(), f.parse("3*x^2+2").unwrap());
        assert_eq!(f.parse("2,0,3").unwrap(), f.parse("3 * x^2 + 2").unwrap());
        assert_eq!(f.format(&f.parse("3*x^2+2").unwrap()), "3*x^2+2");
        assert_eq!(f.format(&f.var()), "1*x");
        assert_eq!(f.format(&f.zero()), "0");
        // x^4 = 3, so x^4 + 2 = 0
        assert!(f.parse("x^4+2").unwrap().is_zero());
        assert_eq!(f.parse("x-1").unwrap(), f.parse("x+4").unwrap());
        assert_eq!(f.parse("2x").unwrap(), f.parse("2*x").unwrap());
        assert!(matches!(f.parse("7*x"), Err(Error::OutOfRange(_))));
        assert!(matches!(f.parse("x^"), Err(Error::Parse { .. })));
        assert!(matches!(f.parse("3 x"), Err(Error::Parse { .. })));
        assert!(matches!(f.parse("1,2,3,4,0"), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(f.parse("1,a"), Err(Error::Parse { pos: 2, .. })));
    }

    #[test]
    fn modulus_text() {
        assert_eq!(parse_modulus(5, 4, "x^4+2").unwrap(), vec![2, 0, 0, 0, 1]);
        assert_eq!(parse_modulus(3, 2, "1,0,1").unwrap(), vec![1, 0, 1]);
        assert!(parse_modulus(3, 2, "x^3+1").is_err());
    }

    #[test]
    fn frobenius_is_additive_on_f9() {
        let f = f9();
        for a in f.elements() {
            for b in f.elements() {
                let lhs = f.frobenius(&f.add(&a, &b));
                let rhs = f.add(&f.frobenius(&a), &f.frobenius(&b));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
