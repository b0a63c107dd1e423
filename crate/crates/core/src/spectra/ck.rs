//! Recovery of the universal cofactors `c_k(t) ∈ Z[t]` from the
//! characteristic polynomials `χ_{q+k} mod p`.
//!
//! For each prime power `q = p^l ≥ 2k`, dividing `χ_{q+k} mod p` by
//! `(t²+t+1)^{(q−ε)/3−k} (t−1)^{(q+2ε)/3−k}` leaves a residue of degree `4k`.
//! Residues for distinct primes are combined by CRT in the symmetric range.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::is_prime;
use crate::polyring::{crt_lift, FpPoly, ZPoly};

use super::formulas::{apply_factor_powers, chi_direct, prime_power_exponents};

/// Residue of `c_k` modulo one prime.
#[derive(Debug, Clone, PartialEq)]
pub struct CkResidue {
    pub p: u64,
    pub l: u32,
    pub residue: FpPoly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CkExtraction {
    pub k: u64,
    pub ck: ZPoly,
    /// The lift is unchanged when the last prime is dropped.
    pub stable: bool,
    pub palindromic: bool,
    pub residues: Vec<CkResidue>,
}

#[derive(Serialize)]
struct CkJson<'a> {
    k: u64,
    ck: Vec<String>,
    stable: bool,
    palindromic: bool,
    primes: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

impl CkExtraction {
    pub fn primes(&self) -> Vec<u64> {
        self.residues.iter().map(|r| r.p).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let note = (!self.stable).then_some("lift not stable: add more primes");
        serde_json::to_value(CkJson {
            k: self.k,
            ck: self.ck.to_strings(),
            stable: self.stable,
            palindromic: self.palindromic,
            primes: self.primes(),
            note,
        })
        .expect("plain data serializes")
    }
}

/// `c_k mod p` from `χ_{q+k} mod p` with `q = p^l`.
pub fn ck_residue(k: u64, p: u64, l: u32) -> Result<FpPoly> {
    let q = p
        .checked_pow(l)
        .ok_or_else(|| Error::Parameter(format!("{p}^{l} overflows")))?;
    if !is_prime(p) {
        return Err(Error::InvalidModulus(p));
    }
    if 2 * k > q {
        return Err(Error::Parameter(format!("k = {k} exceeds q/2 for q = {q}")));
    }
    let chi = chi_direct((q + k) as usize, p)?;
    let (a, b) = prime_power_exponents(q);
    let violation = |detail: String| Error::ConjectureViolation { p, l, k, detail };
    let residue = apply_factor_powers(&chi, k as i64 - a, k as i64 - b)?
        .ok_or_else(|| violation("known factor powers do not divide χ_{q+k}".into()))?;
    if residue.degree() != Some(4 * k as usize) {
        return Err(violation(format!(
            "cofactor has degree {:?}, expected {}",
            residue.degree(),
            4 * k
        )));
    }
    Ok(residue)
}

/// Smallest `l ≥ 1` with `p^l ≥ 2k`.
pub fn minimal_level(p: u64, k: u64) -> u32 {
    let mut l = 1;
    let mut q = p;
    while q < 2 * k {
        q *= p;
        l += 1;
    }
    l
}

/// Every prime `p ≤ bound`, each at its minimal level for `k`.
pub fn default_prime_powers(k: u64, bound: u64) -> Vec<(u64, u32)> {
    (2..=bound)
        .filter(|&p| is_prime(p))
        .map(|p| (p, minimal_level(p, k)))
        .collect()
}

pub const DEFAULT_PRIME_BOUND: u64 = 41;

/// Extracts `c_k` from the given prime powers, which must use distinct primes.
pub fn extract_ck(k: u64, prime_powers: &[(u64, u32)]) -> Result<CkExtraction> {
    if prime_powers.is_empty() {
        return Err(Error::Parameter("at least one prime power is required".into()));
    }
    let mut seen = std::collections::BTreeSet::new();
    for &(p, _) in prime_powers {
        if !seen.insert(p) {
            return Err(Error::Parameter(format!("prime {p} listed twice")));
        }
    }
    let residues = prime_powers
        .iter()
        .map(|&(p, l)| ck_residue(k, p, l).map(|residue| CkResidue { p, l, residue }))
        .collect::<Result<Vec<_>>>()?;
    let polys: Vec<FpPoly> = residues.iter().map(|r| r.residue.clone()).collect();
    let degree = 4 * k as usize;
    let ck = crt_lift(&polys, degree)?;
    let stable = polys.len() > 1 && crt_lift(&polys[..polys.len() - 1], degree)? == ck;
    let palindromic = ck.is_palindromic(1);
    Ok(CkExtraction {
        k,
        ck,
        stable,
        palindromic,
        residues,
    })
}
