//! The sequences γ(n) and γ₂(n): multiplicities of `t+1` and `t²+t+1` in
//! the characteristic polynomial of `P(n)` over F₂.
//!
//! The defining recursion `γ(2^l − k) = (2^l + 2(−1)^l)/3 − k + 2γ(k)` for
//! `0 ≤ k ≤ 2^{l−1}` strictly shrinks its argument (`k ≤ n/2`), so each
//! value costs `O(log n)` steps and no memo table is kept.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::block_count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaPair {
    pub gamma: u64,
    pub gamma2: u64,
}

/// `(2^l + 2(−1)^l)/3`, always an integer since `2^l ≡ (−1)^l (mod 3)`.
fn level_constant(l: u32) -> i64 {
    let pow = 1i64 << l;
    let sign = if l.is_multiple_of(2) { 1 } else { -1 };
    (pow + 2 * sign) / 3
}

fn ceil_log2(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros()
    }
}

fn floor_log2(n: u64) -> u32 {
    63 - n.leading_zeros()
}

/// γ(n) by the defining recursion.
pub fn gamma_value(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    gamma_at_level(n, ceil_log2(n)).expect("smallest level always applies")
}

/// γ(n) evaluated with the decomposition `n = 2^l − k`, if `0 ≤ k ≤ 2^{l−1}`.
///
/// `n = 2^{l−1}` admits two levels (`k = 2^{l−1}` at level `l`, `k = 0` at
/// level `l − 1`); both must agree.
pub fn gamma_at_level(n: u64, l: u32) -> Option<u64> {
    if l >= 63 {
        return None;
    }
    let top = 1u64 << l;
    let k = top.checked_sub(n)?;
    if 2 * k > top {
        return None;
    }
    let v = level_constant(l) - k as i64 + 2 * gamma_value(k) as i64;
    u64::try_from(v).ok()
}

pub fn gamma(n: u64) -> GammaPair {
    let g = gamma_value(n);
    debug_assert!(g <= n && (n - g).is_multiple_of(2));
    GammaPair { gamma: g, gamma2: (n - g) / 2 }
}

/// The alternative formulas for γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GammaIdentity {
    /// `γ(2^l + k) = (2^l + 2(−1)^l)/3 − k + 4γ(k)`, `0 ≤ k ≤ 2^{l−1}`
    Shift,
    /// `γ(2^l − k) = γ(k) + 2γ(2^{l−1} − k)`, `2^{l−2} ≤ k ≤ 2^{l−1}`
    Fold,
    /// `γ(2^l + k) = 1 + γ(2^l + k − 1) + 2γ(2^l − k) − 2γ(2^l + 1 − k)`, `1 ≤ k ≤ 2^l`
    Difference,
    /// `γ(2m) = m − γ(m)`
    HalvingEven,
    /// `γ(2m − 1) = m − γ(m) + (4^{b(2m−1)} − 1)/3`, `m ≥ 1`
    HalvingOddBelow,
    /// `γ(2m + 1) = m − γ(m) + (2^{1+2b(m)} + 1)/3`
    HalvingOddAbove,
}

impl GammaIdentity {
    pub const ALL: [GammaIdentity; 6] = [
        GammaIdentity::Shift,
        GammaIdentity::Fold,
        GammaIdentity::Difference,
        GammaIdentity::HalvingEven,
        GammaIdentity::HalvingOddBelow,
        GammaIdentity::HalvingOddAbove,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            GammaIdentity::Shift => "i",
            GammaIdentity::Fold => "ii",
            GammaIdentity::Difference => "iii",
            GammaIdentity::HalvingEven => "iv-even",
            GammaIdentity::HalvingOddBelow => "iv-odd-below",
            GammaIdentity::HalvingOddAbove => "iv-odd-above",
        }
    }
}

impl GammaIdentity {
    /// Whether `n` lies in the stated range of the identity.
    pub fn applies(&self, n: u64) -> bool {
        match self {
            GammaIdentity::Shift => {
                n >= 1 && {
                    let top = 1u64 << floor_log2(n);
                    2 * (n - top) <= top
                }
            }
            GammaIdentity::Fold => {
                n >= 2 && {
                    let top = 1u64 << (floor_log2(n) + 1);
                    4 * (top - n) >= top
                }
            }
            GammaIdentity::Difference => n >= 2,
            GammaIdentity::HalvingEven => n.is_multiple_of(2),
            GammaIdentity::HalvingOddBelow | GammaIdentity::HalvingOddAbove => n % 2 == 1,
        }
    }
}

/// γ(n) computed through one of the alternative identities.
///
/// Identities (i)–(iii) relate γ(n) to values at other arguments, which
/// are taken from the defining recursion. The three halving rules are
/// evaluated through [`gamma_by_halving`], which never touches the defining
/// recursion.
pub fn gamma_alt(n: u64, id: GammaIdentity) -> Result<u64> {
    if !id.applies(n) {
        return Err(Error::Parameter(format!(
            "n = {n} outside the range of identity ({})",
            id.label()
        )));
    }
    let g = |m: u64| gamma_value(m) as i64;
    let v: i64 = match id {
        GammaIdentity::Shift => {
            let l = floor_log2(n);
            let k = n - (1u64 << l);
            level_constant(l) - k as i64 + 4 * g(k)
        }
        GammaIdentity::Fold => {
            // n = 2^l − k with 2^{l−2} ≤ k ≤ 2^{l−1}
            let top = 1u64 << (floor_log2(n) + 1);
            let k = top - n;
            g(k) + 2 * g(top / 2 - k)
        }
        GammaIdentity::Difference => {
            // n = 2^l + k with 1 ≤ k ≤ 2^l
            let top = 1u64 << (ceil_log2(n) - 1);
            let k = n - top;
            1 + g(n - 1) + 2 * g(top - k) - 2 * g(top + 1 - k)
        }
        GammaIdentity::HalvingEven => {
            let m = n / 2;
            m as i64 - gamma_by_halving(m) as i64
        }
        GammaIdentity::HalvingOddBelow => {
            let m = n.div_ceil(2);
            let b = block_count(n);
            m as i64 - gamma_by_halving(m) as i64 + ((1i64 << (2 * b)) - 1) / 3
        }
        GammaIdentity::HalvingOddAbove => {
            let m = n / 2;
            let b = block_count(m);
            m as i64 - gamma_by_halving(m) as i64 + ((1i64 << (1 + 2 * b)) + 1) / 3
        }
    };
    u64::try_from(v).map_err(|_| Error::Parameter(format!("negative value {v} for n = {n}")))
}

/// γ(n) from `γ(0) = 0`, `γ(2m) = m − γ(m)` and
/// `γ(2m+1) = m − γ(m) + (2^{1+2b(m)} + 1)/3` alone.
pub fn gamma_by_halving(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let m = n / 2;
    let base = m - gamma_by_halving(m);
    if n.is_multiple_of(2) {
        base
    } else {
        base + ((1u64 << (1 + 2 * block_count(m))) + 1) / 3
    }
}
