//! Dense univariate polynomials over Z and F_p.
//!
//! Coefficients are stored low to high: `coeffs[i]` is the coefficient of
//! `t^i`. The representation is canonical, with no trailing zero and the
//! zero polynomial stored as the empty vector.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::domain::{Field, Integers, PrimeField, Ring};
use crate::error::{Error, Result};
use crate::numtheory::inv_mod;

#[derive(Clone, PartialEq)]
pub struct Poly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

pub type ZPoly = Poly<Integers>;
pub type FpPoly = Poly<PrimeField>;

impl<R: Ring> Poly<R> {
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Self { ring, coeffs }
    }

    pub fn from_i64s(ring: R, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&v| ring.from_i64(v)).collect();
        Self::new(ring, c)
    }

    pub fn zero(ring: R) -> Self {
        Self { ring, coeffs: Vec::new() }
    }

    pub fn one(ring: R) -> Self {
        let one = ring.one();
        Self::new(ring, vec![one])
    }

    /// The indeterminate `t`.
    pub fn t(ring: R) -> Self {
        let c = vec![ring.zero(), ring.one()];
        Self::new(ring, c)
    }

    /// `t + c` for an integer constant `c`.
    pub fn linear(ring: R, c: i64) -> Self {
        Self::from_i64s(ring, &[c, 1])
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.ring.is_one(c))
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                left: self.ring.tag().to_string(),
                right: other.ring.tag().to_string(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.ring.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Ok(Self::new(self.ring.clone(), c))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.ring.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        Ok(Self::new(self.ring.clone(), c))
    }

    pub fn neg(&self) -> Self {
        let c = self.coeffs.iter().map(|a| self.ring.neg(a)).collect();
        Self::new(self.ring.clone(), c)
    }

    pub fn scale(&self, s: &R::Elem) -> Self {
        let c = self.coeffs.iter().map(|a| self.ring.mul(a, s)).collect();
        Self::new(self.ring.clone(), c)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring.clone());
        }
        let r = &self.ring;
        let mut c = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = r.add(&c[i + j], &r.mul(a, b));
            }
        }
        Self::new(r.clone(), c)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ring.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Product of a list of polynomials over the same ring.
    pub fn product<'a>(ring: R, factors: impl IntoIterator<Item = &'a Self>) -> Result<Self>
    where
        R: 'a,
    {
        factors
            .into_iter()
            .try_fold(Self::one(ring), |acc, f| acc.mul(f))
    }

    /// Division with remainder, `self = q·g + r` with `deg r < deg g`.
    ///
    /// The divisor's leading coefficient must be a unit: any nonzero
    /// element over a field, and `±1` over Z.
    pub fn divrem(&self, g: &Self) -> Result<(Self, Self)> {
        self.check_ring(g)?;
        let lead = g.leading().ok_or(Error::DivisionByZero)?;
        let lead_inv = self.ring.inv(lead).ok_or(Error::NonMonicDivisor)?;
        let r = &self.ring;
        let dg = g.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return Ok((Self::zero(r.clone()), self.clone()));
        }
        let mut quot = vec![r.zero(); rem.len() - dg];
        for i in (0..quot.len()).rev() {
            let c = r.mul(&rem[i + dg], &lead_inv);
            if r.is_zero(&c) {
                continue;
            }
            for (j, gj) in g.coeffs.iter().enumerate() {
                rem[i + j] = r.sub(&rem[i + j], &r.mul(&c, gj));
            }
            quot[i] = c;
        }
        rem.truncate(dg);
        Ok((Self::new(r.clone(), quot), Self::new(r.clone(), rem)))
    }

    /// Exact quotient `self / g`, or `None` when the remainder is nonzero.
    pub fn div_exact(&self, g: &Self) -> Result<Option<Self>> {
        let (q, r) = self.divrem(g)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Largest `m` with `g^m | self`, together with `self / g^m`.
    pub fn extract_multiplicity(&self, g: &Self) -> Result<(u64, Self)> {
        if self.is_zero() {
            return Err(Error::UndefinedMultiplicity);
        }
        match g.degree() {
            Some(d) if d >= 1 && g.is_monic() => {}
            _ => {
                return Err(Error::Parameter(
                    "multiplicity needs a nonconstant monic factor".into(),
                ))
            }
        }
        let mut m = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(g)? {
            cur = q;
            m += 1;
        }
        Ok((m, cur))
    }

    /// `true` iff `coeffs[i] = sign·coeffs[deg − i]` for every `i`.
    pub fn is_palindromic(&self, sign: i64) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| {
            let mirrored = &self.coeffs[n - 1 - i];
            let expect = if sign < 0 {
                self.ring.neg(mirrored)
            } else {
                mirrored.clone()
            };
            self.coeffs[i] == expect
        })
    }

    pub fn eval(&self, x: &R::Elem) -> R::Elem {
        let r = &self.ring;
        self.coeffs
            .iter()
            .rev()
            .fold(r.zero(), |acc, c| r.add(&r.mul(&acc, x), c))
    }

    /// `f(t²)`.
    pub fn compose_square(&self) -> Self {
        let r = &self.ring;
        let mut c = vec![r.zero(); (2 * self.coeffs.len()).saturating_sub(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[2 * i] = a.clone();
        }
        Self::new(r.clone(), c)
    }

    /// `f(−t)`.
    pub fn negate_var(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 1 { self.ring.neg(a) } else { a.clone() })
            .collect();
        Self::new(self.ring.clone(), c)
    }

    pub fn derivative(&self) -> Self {
        let r = &self.ring;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| r.mul(&r.from_i64(i as i64), a))
            .collect();
        Self::new(r.clone(), c)
    }

    /// Coefficients as decimal strings, index = degree.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| self.ring.format(c)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(self.to_strings())
    }

    pub fn from_strings(ring: R, coeffs: &[String]) -> Result<Self> {
        let c = coeffs
            .iter()
            .map(|s| ring.parse(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(ring, c))
    }
}

impl<F: Field> Poly<F> {
    /// Scales to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = self.ring.inv(l).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `self^e mod m`.
    pub fn powmod(&self, e: &BigUint, m: &Self) -> Result<Self> {
        let mut acc = Self::one(self.ring.clone()).divrem(m)?.1;
        let base = self.divrem(m)?.1;
        for i in (0..e.bits()).rev() {
            acc = acc.mul_unchecked(&acc).divrem(m)?.1;
            if e.bit(i) {
                acc = acc.mul_unchecked(&base).divrem(m)?.1;
            }
        }
        Ok(acc)
    }
}

impl FpPoly {
    pub fn modulus(&self) -> u64 {
        self.ring.modulus()
    }

    /// Product of the distinct monic irreducible factors.
    ///
    /// When the derivative vanishes identically the polynomial is `h(t^p)`,
    /// which over F_p equals `h(t)^p`, so the radical of `h` is returned.
    pub fn radical(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::UndefinedMultiplicity);
        }
        let f = self.monic();
        if f.degree() == Some(0) {
            return Ok(f);
        }
        let d = f.derivative();
        if d.is_zero() {
            let p = self.modulus() as usize;
            let h: Vec<u64> = f.coeffs.iter().step_by(p).copied().collect();
            return Self::new(self.ring, h).radical();
        }
        let g = f.gcd(&d)?;
        let (u, _) = f.divrem(&g)?;
        let rg = g.radical()?;
        let common = u.gcd(&rg)?;
        let (rg_rest, _) = rg.divrem(&common)?;
        Ok(u.mul_unchecked(&rg_rest).monic())
    }

    /// Whether every root (in the algebraic closure of F_p) has
    /// multiplicative order a power of two.
    ///
    /// Tests `t^(2^M) ≡ 1` modulo the radical `g`, with `2^M ≥ p^deg g`,
    /// which bounds the 2-part of any root order.
    pub fn roots_have_two_power_order(&self) -> Result<bool> {
        if self.is_zero() || self.coeff(0) == 0 {
            return Err(Error::ZeroRoot);
        }
        let g = self.radical()?;
        let deg = g.degree().unwrap_or(0);
        if deg == 0 {
            return Ok(true);
        }
        let bound = BigUint::from(self.modulus()).pow(deg as u32);
        let m = (bound - 1u32).bits();
        let mut x = Self::t(self.ring).divrem(&g)?.1;
        for _ in 0..m {
            x = x.mul_unchecked(&x).divrem(&g)?.1;
        }
        Ok(x == Self::one(self.ring))
    }

    /// Symmetric-range integer lift of each coefficient.
    pub fn lift_symmetric(&self) -> ZPoly {
        let c = self
            .coeffs
            .iter()
            .map(|&a| BigInt::from(self.ring.signed(a)))
            .collect();
        ZPoly::new(Integers, c)
    }
}

impl ZPoly {
    /// Coefficient-wise reduction into F_p.
    pub fn reduce(&self, field: PrimeField) -> FpPoly {
        let c = self.coeffs.iter().map(|a| field.reduce(a)).collect();
        FpPoly::new(field, c)
    }

    /// `f(1/t)·t^deg`, i.e. the coefficient reversal.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(Integers, c)
    }
}

/// Lifts monic residues of degree `degree` modulo distinct primes to the
/// unique integer polynomial with coefficients in the symmetric range
/// `(−M/2, M/2]`, `M` the product of the primes.
pub fn crt_lift(residues: &[FpPoly], degree: usize) -> Result<ZPoly> {
    if residues.is_empty() {
        return Err(Error::Parameter("CRT lift needs at least one residue".into()));
    }
    for (i, r) in residues.iter().enumerate() {
        if r.degree() != Some(degree) || !r.is_monic() {
            return Err(Error::DegreeMismatch(format!(
                "residue mod {} has degree {:?}, expected monic of degree {degree}",
                r.modulus(),
                r.degree()
            )));
        }
        if residues[..i].iter().any(|s| s.modulus() == r.modulus()) {
            return Err(Error::Parameter(format!(
                "modulus {} repeated in CRT lift",
                r.modulus()
            )));
        }
    }
    let mut modulus = BigInt::one();
    let mut acc = vec![BigInt::zero(); degree + 1];
    for r in residues {
        let p = r.modulus();
        let pb = BigInt::from(p);
        let m_mod_p = u64::try_from(modulus.mod_floor(&pb)).expect("small residue");
        let m_inv = inv_mod(m_mod_p, p).expect("distinct primes are coprime");
        for (i, x) in acc.iter_mut().enumerate() {
            let x_mod_p = u64::try_from(x.mod_floor(&pb)).expect("small residue");
            let diff = (r.coeff(i) + p - x_mod_p) % p;
            let t = diff * m_inv % p;
            *x += &modulus * t;
        }
        modulus *= pb;
    }
    let half = &modulus / 2u32;
    for x in acc.iter_mut() {
        if *x > half {
            *x -= &modulus;
        }
    }
    Ok(ZPoly::new(Integers, acc))
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.ring.is_zero(c) {
                continue;
            }
            let s = self.ring.format(c);
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coef = if mag == "1" && i > 0 { String::new() } else { mag };
            match (i, coef.is_empty()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{coef}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{coef}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.ring.tag(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn zp(c: &[i64]) -> ZPoly {
        ZPoly::from_i64s(Integers, c)
    }

    #[test]
    fn canonical_form() {
        let f = zp(&[1, 2, 0, 0]);
        assert_eq!(f.degree(), Some(1));
        assert!(zp(&[0, 0]).is_zero());
        assert_eq!(zp(&[]).degree(), None);
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = zp(&[-1, 0, 1]).divrem(&zp(&[-1, 1])).unwrap();
        assert_eq!(q, zp(&[1, 1]));
        assert!(r.is_zero());

        let f3 = fp(3);
        let prod = FpPoly::from_i64s(f3, &[1, 1, 1])
            .mul(&FpPoly::from_i64s(f3, &[-1, 1]))
            .unwrap();
        assert_eq!(prod, FpPoly::from_i64s(f3, &[-1, 0, 0, 1]));
    }

    #[test]
    fn divrem_errors() {
        assert_eq!(zp(&[1, 1]).divrem(&zp(&[])), Err(Error::DivisionByZero));
        assert_eq!(zp(&[1, 1]).divrem(&zp(&[1, 2])), Err(Error::NonMonicDivisor));
        let a = FpPoly::one(fp(3));
        let b = FpPoly::one(fp(5));
        assert!(matches!(a.add(&b), Err(Error::DomainMismatch { .. })));
    }

    #[test]
    fn multiplicity_examples() {
        let f2 = fp(2);
        let t1 = FpPoly::linear(f2, 1);
        let cyc = FpPoly::from_i64s(f2, &[1, 1, 1]);
        let f = t1.pow(2).mul(&cyc).unwrap();
        assert_eq!(f.extract_multiplicity(&t1).unwrap(), (2, cyc.clone()));
        assert_eq!(cyc.extract_multiplicity(&t1).unwrap(), (0, cyc.clone()));
        assert_eq!(
            FpPoly::zero(f2).extract_multiplicity(&t1),
            Err(Error::UndefinedMultiplicity)
        );
    }

    #[test]
    fn multiplicity_recovers_constructed_powers() {
        let f5 = fp(5);
        let g = FpPoly::from_i64s(f5, &[1, 1, 1]);
        let h = FpPoly::from_i64s(f5, &[2, 0, 3, 1]);
        assert!(h.divrem(&g).unwrap().1 != FpPoly::zero(f5));
        for m in 0..=30 {
            let f = g.pow(m).mul(&h).unwrap();
            assert_eq!(f.extract_multiplicity(&g).unwrap(), (m, h.clone()));
        }
    }

    #[test]
    fn palindromy_examples() {
        assert!(zp(&[1, -2, 0, -2, 1]).is_palindromic(1));
        assert!(zp(&[-1, 9, -9, 1]).is_palindromic(-1));
        assert!(!zp(&[2, 1]).is_palindromic(1));
    }

    #[test]
    fn crt_examples() {
        let one5 = FpPoly::one(fp(5));
        let one7 = FpPoly::one(fp(7));
        assert_eq!(crt_lift(&[one5, one7], 0).unwrap(), zp(&[1]));

        let a = FpPoly::from_i64s(fp(3), &[2, 1]);
        let b = FpPoly::from_i64s(fp(5), &[4, 1]);
        // x ≡ 2 (3), x ≡ 4 (5) gives 14 ≡ −1 (15)
        assert_eq!(crt_lift(&[a.clone(), b], 1).unwrap(), zp(&[-1, 1]));

        let c1 = zp(&[1, -2, 0, -2, 1]);
        let residues: Vec<_> = [5, 7, 11].iter().map(|&p| c1.reduce(fp(p))).collect();
        assert_eq!(crt_lift(&residues, 4).unwrap(), c1);

        assert!(matches!(crt_lift(std::slice::from_ref(&a), 2), Err(Error::DegreeMismatch(_))));
        assert!(matches!(crt_lift(&[a.clone(), a], 1), Err(Error::Parameter(_))));
    }

    #[test]
    fn two_power_order_examples() {
        let f3 = fp(3);
        assert!(FpPoly::linear(f3, 1).pow(3).roots_have_two_power_order().unwrap());
        assert!(FpPoly::linear(f3, -1).roots_have_two_power_order().unwrap());
        // t^2 + t + 1 over F_7: primitive cube roots of unity, order 3.
        let f7 = fp(7);
        assert!(!FpPoly::from_i64s(f7, &[1, 1, 1])
            .roots_have_two_power_order()
            .unwrap());
        // t^2 + 1 over F_3: roots of order 4 in F_9.
        assert!(FpPoly::from_i64s(f3, &[1, 0, 1])
            .roots_have_two_power_order()
            .unwrap());
        assert_eq!(
            FpPoly::t(f3).roots_have_two_power_order(),
            Err(Error::ZeroRoot)
        );
    }

    #[test]
    fn radical_handles_pth_powers() {
        let f3 = fp(3);
        // (t+1)^3 (t^2+1)^6 has vanishing derivative.
        let a = FpPoly::linear(f3, 1);
        let b = FpPoly::from_i64s(f3, &[1, 0, 1]);
        let f = a.pow(3).mul(&b.pow(6)).unwrap();
        assert!(f.derivative().is_zero());
        assert_eq!(f.radical().unwrap(), a.mul(&b).unwrap());
        let g = a.pow(4).mul(&b.pow(2)).unwrap();
        assert_eq!(g.radical().unwrap(), a.mul(&b).unwrap());
    }

    #[test]
    fn display() {
        assert_eq!(zp(&[-1, 9, -9, 1]).to_string(), "t^3 - 9*t^2 + 9*t - 1");
        assert_eq!(zp(&[]).to_string(), "0");
        assert_eq!(zp(&[0, -1]).to_string(), "-t");
    }

    fn arb_fp_poly(p: u64, max_len: usize) -> impl Strategy<Value = FpPoly> {
        prop::collection::vec(0..p, 0..max_len).prop_map(move |c| FpPoly::new(fp(p), c))
    }

    fn arb_z_poly(max_len: usize) -> impl Strategy<Value = ZPoly> {
        prop::collection::vec(-50i64..50, 0..max_len).prop_map(|c| zp(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn divrem_round_trip_fp(
            p in prop::sample::select(vec![2u64, 3, 5]),
            seed in any::<u64>(),
        ) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f: Vec<u64> = (0..rng.gen_range(0..20)).map(|_| rng.gen_range(0..p)).collect();
            let mut g: Vec<u64> = (0..rng.gen_range(1..10)).map(|_| rng.gen_range(0..p)).collect();
            *g.last_mut().unwrap() = rng.gen_range(1..p);
            let f = FpPoly::new(fp(p), f);
            let g = FpPoly::new(fp(p), g);
            let (q, r) = f.divrem(&g).unwrap();
            prop_assert!(r.degree() < g.degree());
            prop_assert_eq!(q.mul(&g).unwrap().add(&r).unwrap(), f);
        }

        #[test]
        fn divrem_round_trip_z(f in arb_z_poly(20), mut g in prop::collection::vec(-50i64..50, 0..10)) {
            g.push(1);
            let g = zp(&g);
            let (q, r) = f.divrem(&g).unwrap();
            prop_assert!(r.degree() < g.degree());
            prop_assert_eq!(q.mul(&g).unwrap().add(&r).unwrap(), f);
        }

        #[test]
        fn crt_lift_reduces_back(c in prop::collection::vec(-500i64..500, 0..8)) {
            let mut c = c;
            c.push(1);
            let f = zp(&c);
            let deg = f.degree().unwrap();
            let res: Vec<_> = [7u64, 11, 13].iter().map(|&p| f.reduce(fp(p))).collect();
            let lifted = crt_lift(&res, deg).unwrap();
            for r in &res {
                prop_assert_eq!(&lifted.reduce(fp(r.modulus())), r);
            }
            // |coeffs| < 1001/2 is inside the symmetric range
            prop_assert_eq!(lifted, f);
        }

        #[test]
        fn radical_is_squarefree(f in arb_fp_poly(3, 12)) {
            prop_assume!(!f.is_zero());
            let r = f.radical().unwrap();
            if r.degree().unwrap_or(0) > 0 {
                let g = r.gcd(&r.derivative()).unwrap();
                prop_assert_eq!(g.degree(), Some(0));
            }
            // every irreducible factor of f divides the radical and vice versa
            prop_assert!(f.monic().divrem(&r).unwrap().1.is_zero());
        }
    }
}
