//! b-autosimilar matrices: infinite matrices whose `(s, t)` entry is the
//! product of seed entries over the base-b digit pairs of `s` and `t`.
//!
//! Equivalently, the infinite Kronecker power of a `b×b` seed with
//! `m[0][0] = 1`. A nondegenerate seed (nonzero leading minors) factors as
//! `L·D·U`, and the diagonal factor extends digit-wise, giving
//! `det M(n) = ∏_{i<n} ∏_{digits ν of i} d_ν`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::domain::{Rationals, Ring};
use crate::error::{Error, Result};
use crate::exactmat::QMatrix;
use crate::numtheory::digits;

#[derive(Debug, Clone, PartialEq)]
pub struct AutosimilarSpec {
    base: u64,
    seed: QMatrix,
    nondegenerate: bool,
}

/// Seed factorization `seed = L·D·U`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeedLdu {
    pub lower: QMatrix,
    pub diag: QMatrix,
    pub upper: QMatrix,
}

impl SeedLdu {
    /// The diagonal entries `d_0, …, d_{b−1}`.
    pub fn d(&self) -> Vec<BigRational> {
        (0..self.diag.rows()).map(|i| self.diag.get(i, i).clone()).collect()
    }
}

impl AutosimilarSpec {
    pub fn new(base: u64, seed: QMatrix) -> Result<Self> {
        if base < 2 {
            return Err(Error::InvalidBase(base));
        }
        let b = base as usize;
        if seed.rows() != b || seed.cols() != b {
            return Err(Error::Shape(format!(
                "seed must be {b}x{b}, got {}x{}",
                seed.rows(),
                seed.cols()
            )));
        }
        if !seed.get(0, 0).is_one() {
            return Err(Error::Parameter("seed entry (0,0) must be 1".into()));
        }
        let minors = seed.leading_principal_minors()?;
        let nondegenerate = minors.iter().all(|m| !m.is_zero());
        Ok(Self { base, seed, nondegenerate })
    }

    /// Parses a seed given as `b²` row-major rational strings.
    pub fn from_strings(base: u64, entries: &[String]) -> Result<Self> {
        let b = base as usize;
        let parsed = entries
            .iter()
            .map(|s| Rationals.parse(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, QMatrix::new(Rationals, b, b, parsed)?)
    }

    fn from_i64(base: u64, rows: &[&[i64]]) -> Self {
        Self::new(base, QMatrix::from_i64_rows(Rationals, rows).expect("square seed"))
            .expect("valid seed")
    }

    /// Seed `[[1,1],[1,0]]` of the mod-2 Pascal reduction.
    pub fn pascal_mod2() -> Self {
        Self::from_i64(2, &[&[1, 1], &[1, 0]])
    }

    /// Seed `[[1,1,1],[1,−1,0],[1,0,0]]` of the {−1,0,1} mod-3 Pascal reduction.
    pub fn pascal_mod3() -> Self {
        Self::from_i64(3, &[&[1, 1, 1], &[1, -1, 0], &[1, 0, 0]])
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn seed(&self) -> &QMatrix {
        &self.seed
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.nondegenerate
    }

    pub fn entry(&self, s: u64, t: u64) -> BigRational {
        let ds = digits(s, self.base).expect("base >= 2");
        let dt = digits(t, self.base).expect("base >= 2");
        let len = ds.len().max(dt.len());
        let mut acc = BigRational::one();
        for i in 0..len {
            let e = self.seed.get(ds.get(i) as usize, dt.get(i) as usize);
            if e.is_zero() {
                return BigRational::zero();
            }
            acc *= e;
        }
        acc
    }

    /// The finite block `M(n)`, indices `0 ≤ i, j < n`.
    pub fn materialize(&self, n: usize) -> QMatrix {
        QMatrix::from_fn(Rationals, n, n, |i, j| self.entry(i as u64, j as u64))
    }

    /// Doolittle `L·D·U` of the seed, without pivoting.
    pub fn ldu_seed(&self) -> Result<SeedLdu> {
        let b = self.base as usize;
        let q = Rationals;
        let mut a: Vec<BigRational> = self.seed.entries().to_vec();
        let mut lower = QMatrix::identity(q, b).entries().to_vec();
        let mut d = vec![BigRational::zero(); b];
        for k in 0..b {
            let pivot = a[k * b + k].clone();
            if pivot.is_zero() {
                return Err(Error::Degenerate(k + 1));
            }
            for i in k + 1..b {
                let f = &a[i * b + k] / &pivot;
                for j in k..b {
                    let t = &f * &a[k * b + j];
                    a[i * b + j] -= t;
                }
                lower[i * b + k] = f;
            }
            d[k] = pivot;
        }
        let upper = QMatrix::from_fn(q, b, b, |i, j| {
            if j < i {
                BigRational::zero()
            } else {
                &a[i * b + j] / &d[i]
            }
        });
        let diag = QMatrix::from_fn(q, b, b, |i, j| {
            if i == j {
                d[i].clone()
            } else {
                BigRational::zero()
            }
        });
        Ok(SeedLdu {
            lower: QMatrix::new(q, b, b, lower)?,
            diag,
            upper,
        })
    }

    /// `det M(n)` as the product of `d_ν` over every digit of every `i < n`.
    pub fn det_by_digits(&self, n: u64) -> Result<BigRational> {
        let d = self.ldu_seed()?.d();
        let mut acc = BigRational::one();
        for i in 0..n {
            for &nu in digits(i, self.base)?.digits() {
                acc *= &d[nu as usize];
            }
        }
        Ok(acc)
    }

    /// `det M(n)` for every `n ≤ max_n`, sharing one prefix product.
    pub fn det_by_digits_prefixes(&self, max_n: u64) -> Result<Vec<BigRational>> {
        let d = self.ldu_seed()?.d();
        let mut out = Vec::with_capacity(max_n as usize + 1);
        let mut acc = BigRational::one();
        out.push(acc.clone());
        for i in 0..max_n {
            for &nu in digits(i, self.base)?.digits() {
                acc *= &d[nu as usize];
            }
            out.push(acc.clone());
        }
        Ok(out)
    }
}

/// Integer-valued convenience for specs whose `d_k` are all integers.
pub fn as_integer(v: &BigRational) -> Option<BigInt> {
    v.is_integer().then(|| v.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::{lucas_unchecked, ternary_digit_counts, thue_morse};
    use crate::pascal::pascal_reduced;
    use rand::{Rng, SeedableRng};

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn random_seed(rng: &mut impl Rng, b: u64) -> AutosimilarSpec {
        loop {
            let bs = b as usize;
            let m = QMatrix::from_fn(Rationals, bs, bs, |i, j| {
                if i == 0 && j == 0 {
                    q(1)
                } else {
                    q(rng.gen_range(-3..=3))
                }
            });
            let spec = AutosimilarSpec::new(b, m).unwrap();
            if spec.is_nondegenerate() {
                return spec;
            }
        }
    }

    #[test]
    fn entry_examples() {
        let s = AutosimilarSpec::pascal_mod2();
        // 5 = 101_2, 2 = 010_2: m10·m01·m10 = 1; C(7,5) = 21 is odd
        assert_eq!(lucas_unchecked(7, 5, 2), 1);
        assert_eq!(s.entry(5, 2), q(1));
        assert_eq!(AutosimilarSpec::pascal_mod3().entry(0, 0), q(1));
        let id = AutosimilarSpec::new(3, QMatrix::identity(Rationals, 3)).unwrap();
        for a in 0..20 {
            for b in 0..20 {
                assert_eq!(id.entry(a, b), q((a == b) as i64));
            }
        }
    }

    #[test]
    fn materialize_examples() {
        let to_q = |m: crate::exactmat::ZMatrix| m.to_rationals();
        assert_eq!(
            AutosimilarSpec::pascal_mod2().materialize(4),
            to_q(pascal_reduced(4, 2).unwrap())
        );
        assert_eq!(AutosimilarSpec::pascal_mod2().materialize(0).rows(), 0);
        assert_eq!(
            AutosimilarSpec::pascal_mod3().materialize(9),
            to_q(pascal_reduced(9, 3).unwrap())
        );
    }

    #[test]
    fn materialize_reduced_pascal_large() {
        assert_eq!(
            AutosimilarSpec::pascal_mod2().materialize(100),
            pascal_reduced(100, 2).unwrap().to_rationals()
        );
        assert_eq!(
            AutosimilarSpec::pascal_mod3().materialize(100),
            pascal_reduced(100, 3).unwrap().to_rationals()
        );
    }

    #[test]
    fn ldu_examples() {
        let l2 = AutosimilarSpec::pascal_mod2().ldu_seed().unwrap();
        assert_eq!(l2.d(), vec![q(1), q(-1)]);
        let l3 = AutosimilarSpec::pascal_mod3().ldu_seed().unwrap();
        assert_eq!(l3.d(), vec![q(1), q(-2), frac(-1, 2)]);
        assert_eq!(*l3.lower.get(2, 1), frac(1, 2));
        assert_eq!(*l3.upper.get(1, 2), frac(1, 2));
        let id = AutosimilarSpec::new(2, QMatrix::identity(Rationals, 2)).unwrap();
        let lid = id.ldu_seed().unwrap();
        let i2 = QMatrix::identity(Rationals, 2);
        assert_eq!((lid.lower, lid.diag, lid.upper), (i2.clone(), i2.clone(), i2));
    }

    #[test]
    fn ldu_recombines() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for b in [2, 3, 4] {
            for _ in 0..10 {
                let s = random_seed(&mut rng, b);
                let f = s.ldu_seed().unwrap();
                let prod = f.lower.mul(&f.diag).unwrap().mul(&f.upper).unwrap();
                assert_eq!(&prod, s.seed());
            }
        }
    }

    #[test]
    fn degenerate_seed_is_reported() {
        let m = QMatrix::from_i64_rows(Rationals, &[&[1, 2, 0], &[2, 4, 1], &[0, 1, 1]]).unwrap();
        let s = AutosimilarSpec::new(3, m).unwrap();
        assert!(!s.is_nondegenerate());
        assert_eq!(s.ldu_seed(), Err(Error::Degenerate(2)));
        assert_eq!(s.det_by_digits(4), Err(Error::Degenerate(2)));
        let bad = QMatrix::from_i64_rows(Rationals, &[&[2, 0], &[0, 1]]).unwrap();
        assert!(AutosimilarSpec::new(2, bad).is_err());
    }

    #[test]
    fn det_by_digits_examples() {
        let s2 = AutosimilarSpec::pascal_mod2();
        let mut expect = 1i64;
        for n in 0..200u64 {
            assert_eq!(s2.det_by_digits(n).unwrap(), q(expect));
            expect *= if thue_morse(n) == 1 { -1 } else { 1 };
        }
        assert_eq!(AutosimilarSpec::pascal_mod3().det_by_digits(1).unwrap(), q(1));
        // cofactor det of [[1,1,1],[1,-1,0],[1,0,0]] is 1; a = b = 1
        assert_eq!(AutosimilarSpec::pascal_mod3().det_by_digits(3).unwrap(), q(1));
        assert_eq!(ternary_digit_counts(3), (1, 1));
    }

    #[test]
    fn det_by_digits_matches_direct_determinants() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let mut specs = vec![AutosimilarSpec::pascal_mod2(), AutosimilarSpec::pascal_mod3()];
        for i in 0..5 {
            specs.push(random_seed(&mut rng, 2 + (i % 2)));
        }
        for s in &specs {
            let by_digits = s.det_by_digits_prefixes(81).unwrap();
            let m = s.materialize(81);
            let minors = m.leading_principal_minors().unwrap();
            assert_eq!(minors, by_digits, "seed {:?}", s.seed());
            for n in [0usize, 1, 5, 17, 40] {
                assert_eq!(m.leading(n).unwrap().det_gauss().unwrap(), by_digits[n]);
            }
        }
    }

    #[test]
    fn powers_of_base_are_kronecker_powers() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let specs = [AutosimilarSpec::pascal_mod3(), random_seed(&mut rng, 2)];
        for s in &specs {
            let mut kp = QMatrix::identity(Rationals, 1);
            for m in 0..=4u32 {
                let size = s.base().pow(m) as usize;
                assert_eq!(s.materialize(size), kp, "m={m}");
                kp = s.seed().kron(&kp).unwrap();
            }
        }
    }
}
