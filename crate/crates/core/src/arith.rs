//! Integer helpers: primality, factorization and prime-power detection.

use std::collections::BTreeMap;

use num_prime::nt_funcs::{factorize64, is_prime64};

pub use num_integer::{gcd, lcm};

pub fn is_prime(n: u64) -> bool {
    is_prime64(n)
}

/// Prime factorization as `prime -> multiplicity`. `factorize(1)` is empty.
pub fn factorize(n: u64) -> BTreeMap<u64, usize> {
    if n <= 1 {
        return BTreeMap::new();
    }
    factorize64(n)
}

/// Distinct prime divisors in ascending order.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_keys().collect()
}

/// Returns `(p, l)` with `q = p^l` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factorize(q);
    if f.len() != 1 {
        return None;
    }
    let (&p, &l) = f.iter().next()?;
    Some((p, l as u32))
}

/// `base^exp`, or `None` on overflow.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1 % m;
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

/// Inverse of a non-zero residue modulo a prime.
pub fn inv_mod_prime(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn factor_group_orders() {
        // 7^9 - 1
        let f = factorize(40_353_606);
        let back: u64 = f.iter().map(|(p, e)| p.pow(*e as u32)).product();
        assert_eq!(back, 40_353_606);
        assert_eq!(prime_divisors(624), vec![2, 3, 13]);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(6), vec![1, 2, 3, 6]);
        assert_eq!(divisors(1), vec![1]);
    }
}
