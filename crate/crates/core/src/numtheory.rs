//! Digit-level integer arithmetic: base-b digits, Lucas binomials mod p,
//! the Thue–Morse parity, binary block counts and the ε symbol.

use crate::error::{Error, Result};

/// Base-`b` digits of a nonnegative integer, least significant first.
///
/// The vector is canonical: it never ends in a zero digit, so zero is the
/// empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitVector {
    digits: Vec<u64>,
    base: u64,
}

impl DigitVector {
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at position `i`, with implicit zeros past the top.
    pub fn get(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn value(&self) -> u128 {
        self.digits
            .iter()
            .rev()
            .fold(0u128, |acc, &d| acc * self.base as u128 + d as u128)
    }
}

pub fn digits(mut n: u64, b: u64) -> Result<DigitVector> {
    if b < 2 {
        return Err(Error::InvalidBase(b));
    }
    let mut out = Vec::new();
    while n > 0 {
        out.push(n % b);
        n /= b;
    }
    Ok(DigitVector { digits: out, base: b })
}

/// Trial-division primality; moduli in this crate are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) && p < (1 << 31) {
        Ok(())
    } else {
        Err(Error::InvalidModulus(p))
    }
}

/// If `q = p^l` with `l ≥ 0`, returns `l`.
pub fn prime_power_exponent(q: u64, p: u64) -> Option<u32> {
    if q == 0 || p < 2 {
        return None;
    }
    let mut l = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        l += 1;
    }
    (r == 1).then_some(l)
}

/// Decomposes a prime power `q > 1` as `(p, l)`.
pub fn as_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    prime_power_exponent(q, p).map(|l| (p, l))
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    (a != 0).then(|| pow_mod(a, p - 2, p))
}

/// C(a, b) mod p for single digits `a, b < p`.
fn small_binomial(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..b {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    // den is a product of integers below p, hence a unit.
    num * inv_mod(den, p).expect("unit denominator") % p
}

/// `C(n, k) mod p` by Lucas' digit product.
///
/// `C(n, k)` with `k > n` is 0.
pub fn binomial_mod_p(n: u64, k: u64, p: u64) -> Result<u64> {
    check_prime(p)?;
    Ok(lucas_unchecked(n, k, p))
}

pub(crate) fn lucas_unchecked(mut n: u64, mut k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    while k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = acc * small_binomial(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

/// Thue–Morse bit: parity of the binary digit sum.
pub fn thue_morse(n: u64) -> u8 {
    (n.count_ones() & 1) as u8
}

/// Thue–Morse bit by the recursion `s(2k) = s(k)`, `s(2k+1) = 1 − s(k)`.
pub fn thue_morse_recursive(n: u64) -> u8 {
    match n {
        0 => 0,
        _ if n.is_multiple_of(2) => thue_morse_recursive(n / 2),
        _ => 1 - thue_morse_recursive(n / 2),
    }
}

/// Number of maximal runs of ones in the binary expansion of `n`.
pub fn block_count(n: u64) -> u32 {
    // A run starts at every 1-bit whose lower neighbour is 0.
    (n & !(n << 1)).count_ones()
}

/// Block count by `b(2n) = b(n)`, `b(2n+1) = b(n) + 1 − (n mod 2)`, `b(0) = 0`.
pub fn block_count_recursive(n: u64) -> u32 {
    match n {
        0 => 0,
        _ if n.is_multiple_of(2) => block_count_recursive(n / 2),
        _ => {
            let m = n / 2;
            block_count_recursive(m) + 1 - (m % 2) as u32
        }
    }
}

/// Representative of `q mod 3` in `{−1, 0, 1}`.
pub fn epsilon(q: u64) -> i64 {
    match q % 3 {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Counts of digits 1 and 2 over the base-3 expansions of all integers `< n`.
pub fn ternary_digit_counts(n: u64) -> (u64, u64) {
    let mut ones = 0;
    let mut twos = 0;
    for i in 0..n {
        let mut m = i;
        while m > 0 {
            match m % 3 {
                1 => ones += 1,
                2 => twos += 1,
                _ => {}
            }
            m /= 3;
        }
    }
    (ones, twos)
}
