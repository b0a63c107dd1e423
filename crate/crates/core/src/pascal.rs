//! Constructors for the symmetric Pascal matrix and its relatives.
//!
//! Matrices act on row vectors from the right throughout the crate. Under
//! that convention the symmetric-power map `A ↦ A^(n)` built by [`sympower`]
//! is multiplicative: `(AB)^(n) = A^(n)·B^(n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::domain::{DomainTag, Integers, PrimeField, Ring};
use crate::error::{Error, Result};
use crate::exactmat::{ExactMatrix, FpMatrix, ZMatrix};
use crate::numtheory::lucas_unchecked;

/// The matrix families constructed by this module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PascalKind {
    /// `C(i+j, i)`
    Symmetric,
    /// `C(i+j, i) mod 2` as a {0,1} integer matrix
    Reduced2,
    /// `C(i+j, i) mod 3` as a {−1,0,1} integer matrix
    Reduced3,
    /// `C(i, j)`
    LowerT,
    /// `(−1)^i C(i, j)`
    LowerL,
    /// `(−1)^j C(i, j)`
    LowerLtilde,
    /// `C(i+j+2k, i+k)`
    Shifted(u64),
    /// `C(i+j+k, i)`
    ShiftedUnit(u64),
}

impl fmt::Display for PascalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PascalKind::Symmetric => write!(f, "pascal"),
            PascalKind::Reduced2 => write!(f, "reduced2"),
            PascalKind::Reduced3 => write!(f, "reduced3"),
            PascalKind::LowerT => write!(f, "T"),
            PascalKind::LowerL => write!(f, "L"),
            PascalKind::LowerLtilde => write!(f, "Ltilde"),
            PascalKind::Shifted(k) => write!(f, "shifted:{k}"),
            PascalKind::ShiftedUnit(k) => write!(f, "shifted-unit:{k}"),
        }
    }
}

impl FromStr for PascalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let shift = |rest: &str| {
            rest.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad shift in {s:?}")))
        };
        Ok(match s {
            "pascal" | "symmetric" => PascalKind::Symmetric,
            "reduced2" => PascalKind::Reduced2,
            "reduced3" => PascalKind::Reduced3,
            "T" | "t" => PascalKind::LowerT,
            "L" | "l" => PascalKind::LowerL,
            "Ltilde" | "ltilde" => PascalKind::LowerLtilde,
            _ => {
                if let Some(k) = s.strip_prefix("shifted-unit:") {
                    PascalKind::ShiftedUnit(shift(k)?)
                } else if let Some(k) = s.strip_prefix("shifted:") {
                    PascalKind::Shifted(shift(k)?)
                } else {
                    return Err(Error::Parse(format!("unknown matrix family {s:?}")));
                }
            }
        })
    }
}

/// A member of one of the families: kind, size and optional prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PascalFamily {
    pub kind: PascalKind,
    pub n: usize,
    pub modulus: Option<u64>,
}

/// Either an integer matrix or a matrix over F_p.
#[derive(Debug, Clone, PartialEq)]
pub enum BuiltMatrix {
    Z(ZMatrix),
    Fp(FpMatrix),
}

impl PascalFamily {
    pub fn new(kind: PascalKind, n: usize, modulus: Option<u64>) -> Self {
        Self { kind, n, modulus }
    }

    /// Builds the matrix over Z, or over F_p when a modulus is set.
    ///
    /// The {0,1} and {−1,0,1} reductions are integer matrices by
    /// definition; with a modulus they are reduced further.
    pub fn build(&self) -> Result<BuiltMatrix> {
        let n = self.n;
        let z = match self.kind {
            PascalKind::Reduced2 => Some(pascal_reduced(n, 2)?),
            PascalKind::Reduced3 => Some(pascal_reduced(n, 3)?),
            PascalKind::ShiftedUnit(k) if self.modulus.is_none() => {
                Some(shifted_unit_pascal(n, k))
            }
            _ => None,
        };
        match (self.modulus, z) {
            (None, Some(m)) => Ok(BuiltMatrix::Z(m)),
            (Some(p), Some(m)) => Ok(BuiltMatrix::Fp(m.reduce(PrimeField::new(p)?))),
            (None, None) => Ok(BuiltMatrix::Z(self.build_in(Integers))),
            (Some(p), None) => Ok(BuiltMatrix::Fp(self.build_in(PrimeField::new(p)?))),
        }
    }

    fn build_in<R: Ring>(&self, ring: R) -> ExactMatrix<R> {
        let n = self.n;
        match self.kind {
            PascalKind::Symmetric => pascal_symmetric(n, ring),
            PascalKind::LowerT => triangular(TriangularKind::T, n, ring),
            PascalKind::LowerL => triangular(TriangularKind::L, n, ring),
            PascalKind::LowerLtilde => triangular(TriangularKind::Ltilde, n, ring),
            PascalKind::Shifted(k) => shifted_pascal(n, k, ring),
            PascalKind::ShiftedUnit(k) => {
                let k = k as usize;
                let b = Binomials::new(&ring, 2 * n + k);
                ExactMatrix::from_fn(ring, n, n, |i, j| b.get(i + j + k, i))
            }
            PascalKind::Reduced2 | PascalKind::Reduced3 => unreachable!("built over Z"),
        }
    }
}

/// Binomial coefficients `C(a, b)` for `a < limit`, in a given domain.
///
/// Over F_p the values come from Lucas' digit product; otherwise from
/// the additive Pascal recurrence on exact integers.
struct Binomials<R: Ring> {
    ring: R,
    table: Option<Vec<Vec<BigInt>>>,
}

impl<R: Ring> Binomials<R> {
    fn new(ring: &R, limit: usize) -> Self {
        let table = match ring.tag() {
            DomainTag::PrimeField(_) => None,
            _ => {
                let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(limit);
                for a in 0..limit {
                    let mut row = vec![BigInt::one(); a + 1];
                    for b in 1..a {
                        row[b] = &rows[a - 1][b - 1] + &rows[a - 1][b];
                    }
                    rows.push(row);
                }
                Some(rows)
            }
        };
        Self { ring: ring.clone(), table }
    }

    fn get(&self, a: usize, b: usize) -> R::Elem {
        if b > a {
            return self.ring.zero();
        }
        match (&self.table, self.ring.tag()) {
            (Some(t), _) => self.ring.from_bigint(&t[a][b]),
            (None, DomainTag::PrimeField(p)) => {
                self.ring.from_i64(lucas_unchecked(a as u64, b as u64, p) as i64)
            }
            (None, _) => unreachable!("table exists outside prime fields"),
        }
    }
}

/// `P(n)` with entries `C(i+j, i)`.
pub fn pascal_symmetric<R: Ring>(n: usize, ring: R) -> ExactMatrix<R> {
    match ring.tag() {
        DomainTag::PrimeField(p) => {
            let r = ring.clone();
            ExactMatrix::from_fn(ring, n, n, |i, j| {
                r.from_i64(lucas_unchecked((i + j) as u64, i as u64, p) as i64)
            })
        }
        _ => {
            let z = pascal_symmetric_z(n);
            z.map_into(ring.clone(), |e| ring.from_bigint(e))
        }
    }
}

/// `P(n)` over Z by `p(i,j) = p(i−1,j) + p(i,j−1)` with a border of ones.
pub fn pascal_symmetric_z(n: usize) -> ZMatrix {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let v = if i == 0 || j == 0 {
                BigInt::one()
            } else {
                &rows[i - 1][j] + &row[j - 1]
            };
            row.push(v);
        }
        rows.push(row);
    }
    ZMatrix::new(Integers, n, n, rows.into_iter().flatten().collect())
        .expect("square by construction")
}

/// Integer matrix of canonical residues of `C(i+j, i)`: values in {0,1}
/// for `p = 2`, in {−1,0,1} for `p = 3`.
pub fn pascal_reduced(n: usize, p: u64) -> Result<ZMatrix> {
    if p != 2 && p != 3 {
        return Err(Error::UnsupportedReduction(p));
    }
    let f = PrimeField::new(p)?;
    Ok(ZMatrix::from_fn(Integers, n, n, |i, j| {
        BigInt::from(f.signed(lucas_unchecked((i + j) as u64, i as u64, p)))
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangularKind {
    /// `C(i, j)`
    T,
    /// `(−1)^i C(i, j)`
    L,
    /// `(−1)^j C(i, j)`
    Ltilde,
}

pub fn triangular<R: Ring>(kind: TriangularKind, n: usize, ring: R) -> ExactMatrix<R> {
    let b = Binomials::new(&ring, n);
    let r = ring.clone();
    ExactMatrix::from_fn(ring, n, n, |i, j| {
        let v = b.get(i, j);
        let odd = match kind {
            TriangularKind::T => false,
            TriangularKind::L => i % 2 == 1,
            TriangularKind::Ltilde => j % 2 == 1,
        };
        if odd {
            r.neg(&v)
        } else {
            v
        }
    })
}

/// `P̃_k(n)` with entries `C(i+j+2k, i+k)`; `k = 0` is `P(n)`.
pub fn shifted_pascal<R: Ring>(n: usize, k: u64, ring: R) -> ExactMatrix<R> {
    if k == 0 {
        return pascal_symmetric(n, ring);
    }
    let k = k as usize;
    let b = Binomials::new(&ring, 2 * n + 2 * k);
    ExactMatrix::from_fn(ring, n, n, |i, j| b.get(i + j + 2 * k, i + k))
}

/// `r×r` integer matrix with entries `C(i+j+k, i)`; its determinant is 1.
pub fn shifted_unit_pascal(r: usize, k: u64) -> ZMatrix {
    if k == 0 {
        return pascal_symmetric_z(r);
    }
    PascalFamily::new(PascalKind::ShiftedUnit(k), r, None).build_in(Integers)
}

/// Coefficients (in `Y`) of `(u + vY)^m` for `m = 0..count`.
fn linear_powers(f: &PrimeField, u: u64, v: u64, count: usize) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = Vec::with_capacity(count);
    let mut cur = vec![f.one()];
    for _ in 0..count {
        let mut next = vec![0u64; cur.len() + 1];
        for (j, c) in cur.iter().enumerate() {
            next[j] = f.add(&next[j], &f.mul(c, &u));
            next[j + 1] = f.add(&next[j + 1], &f.mul(c, &v));
        }
        out.push(std::mem::replace(&mut cur, next));
    }
    out
}

/// Matrix of the substitution `X ↦ aX + bY`, `Y ↦ cX + dY` on homogeneous
/// polynomials of degree `n − 1`, in the basis `X^{n−1}, X^{n−2}Y, …, Y^{n−1}`.
///
/// Row `i` lists the coefficients of `(aX+bY)^{n−1−i} (cX+dY)^i`.
pub fn sympower(a: i64, b: i64, c: i64, d: i64, n: usize, field: PrimeField) -> Result<FpMatrix> {
    let [a, b, c, d] = [a, b, c, d].map(|v| field.from_i64(v));
    let det = field.sub(&field.mul(&a, &d), &field.mul(&b, &c));
    if det == 0 {
        return Err(Error::SingularGenerator);
    }
    if n == 0 {
        return Err(Error::Parameter("symmetric power needs n >= 1".into()));
    }
    // (a + bY)^m and (c + dY)^m, X dehomogenized away
    let first = linear_powers(&field, a, b, n);
    let second = linear_powers(&field, c, d, n);
    let mut entries = vec![0u64; n * n];
    for i in 0..n {
        let u = &first[n - 1 - i];
        let w = &second[i];
        for (s, us) in u.iter().enumerate() {
            if *us == 0 {
                continue;
            }
            for (t, wt) in w.iter().enumerate() {
                let slot = &mut entries[i * n + s + t];
                *slot = field.add(slot, &field.mul(us, wt));
            }
        }
    }
    FpMatrix::new(field, n, n, entries)
}

impl BuiltMatrix {
    pub fn to_json(&self) -> String {
        match self {
            BuiltMatrix::Z(m) => serde_json::to_string(&m.to_record()),
            BuiltMatrix::Fp(m) => serde_json::to_string(&m.to_record()),
        }
        .expect("record serializes")
    }

    pub fn size(&self) -> usize {
        match self {
            BuiltMatrix::Z(m) => m.rows(),
            BuiltMatrix::Fp(m) => m.rows(),
        }
    }
}

/// Whether a matrix is lower triangular with every diagonal entry `±1`.
pub fn is_unimodular_lower<R: Ring>(m: &ExactMatrix<R>) -> bool {
    let r = m.ring();
    let one = r.one();
    let minus = r.neg(&one);
    m.is_square()
        && (0..m.rows()).all(|i| {
            let d = m.get(i, i);
            (*d == one || *d == minus) && (i + 1..m.cols()).all(|j| r.is_zero(m.get(i, j)))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn z(rows: &[&[i64]]) -> ZMatrix {
        ZMatrix::from_i64_rows(Integers, rows).unwrap()
    }

    #[test]
    fn symmetric_examples() {
        assert_eq!(pascal_symmetric_z(3), z(&[&[1, 1, 1], &[1, 2, 3], &[1, 3, 6]]));
        assert_eq!(pascal_symmetric_z(0).rows(), 0);
        let expect = z(&[&[1, 1, 1, 1], &[1, 0, 1, 0], &[1, 1, 0, 0], &[1, 0, 0, 0]]);
        assert_eq!(pascal_symmetric(4, fp(2)), expect.reduce(fp(2)));
    }

    #[test]
    fn reduced_examples() {
        assert_eq!(pascal_reduced(2, 2).unwrap(), z(&[&[1, 1], &[1, 0]]));
        assert_eq!(
            pascal_reduced(3, 3).unwrap(),
            z(&[&[1, 1, 1], &[1, -1, 0], &[1, 0, 0]])
        );
        assert_eq!(pascal_reduced(1, 2).unwrap(), z(&[&[1]]));
        assert_eq!(pascal_reduced(3, 5), Err(Error::UnsupportedReduction(5)));
    }

    #[test]
    fn triangular_examples() {
        let t4 = triangular(TriangularKind::T, 4, Integers);
        assert_eq!(
            t4,
            z(&[&[1, 0, 0, 0], &[1, 1, 0, 0], &[1, 2, 1, 0], &[1, 3, 3, 1]])
        );
        let lt = triangular(TriangularKind::Ltilde, 3, fp(5));
        assert_eq!(lt.mul(&lt).unwrap(), FpMatrix::identity(fp(5), 3));
        assert_eq!(triangular(TriangularKind::T, 1, Integers), z(&[&[1]]));
        for kind in [TriangularKind::T, TriangularKind::L, TriangularKind::Ltilde] {
            assert!(is_unimodular_lower(&triangular(kind, 7, Integers)));
        }
    }

    #[test]
    fn t_inverse_has_alternating_binomials() {
        let t = triangular(TriangularKind::T, 6, Integers);
        let inv = t.inverse().unwrap();
        let t_again = triangular(TriangularKind::T, 6, Integers);
        for i in 0..6 {
            for j in 0..6 {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                assert_eq!(*inv.get(i, j), t_again.get(i, j) * sign);
            }
        }
    }

    #[test]
    fn shifted_examples() {
        assert_eq!(shifted_pascal(2, 1, Integers), z(&[&[2, 3], &[3, 6]]));
        assert_eq!(shifted_pascal(5, 0, Integers), pascal_symmetric_z(5));
        assert_eq!(shifted_pascal(2, 1, fp(2)), z(&[&[0, 1], &[1, 0]]).reduce(fp(2)));
        assert_eq!(shifted_unit_pascal(4, 0), pascal_symmetric_z(4));
        assert_eq!(shifted_unit_pascal(3, 2).det().unwrap(), BigInt::one());
        assert_eq!(shifted_unit_pascal(5, 7).det().unwrap(), BigInt::one());
    }

    #[test]
    fn shifted_unit_has_unit_determinant() {
        for r in 0..=10 {
            for k in 0..=10 {
                assert_eq!(shifted_unit_pascal(r, k).det().unwrap(), BigInt::one(), "r={r} k={k}");
            }
        }
    }

    #[test]
    fn sympower_examples() {
        for (p, q) in [(2u64, 8usize), (3, 9), (5, 5), (7, 7)] {
            let f = fp(p);
            assert_eq!(sympower(1, -1, 1, 0, q, f).unwrap(), pascal_symmetric(q, f));
            assert_eq!(
                sympower(1, 0, -1, -1, q, f).unwrap(),
                triangular(TriangularKind::L, q, f)
            );
            assert_eq!(
                sympower(1, 0, 1, -1, q, f).unwrap(),
                triangular(TriangularKind::Ltilde, q, f)
            );
        }
        assert_eq!(sympower(1, 0, 0, 1, 6, fp(5)).unwrap(), FpMatrix::identity(fp(5), 6));
        assert_eq!(sympower(1, 2, 2, 4, 3, fp(5)), Err(Error::SingularGenerator));
    }

    #[test]
    fn sympower_has_order_three_at_prime_powers() {
        for q in [2usize, 4, 8, 16, 3, 9, 27, 5, 25, 7] {
            let p = crate::numtheory::as_prime_power(q as u64).unwrap().0;
            let f = fp(p);
            let m = sympower(1, -1, 1, 0, q, f).unwrap();
            assert_eq!(m.pow(3).unwrap(), FpMatrix::identity(f, q), "q={q}");
        }
    }

    #[test]
    fn reductions_agree_with_integer_matrix() {
        for n in 0..=100 {
            let pz = pascal_symmetric_z(n);
            for p in [2u64, 3, 5, 7] {
                assert_eq!(pz.reduce(fp(p)), pascal_symmetric(n, fp(p)), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn pascal_factors_as_t_times_transpose() {
        for n in 0..=64 {
            let t = triangular(TriangularKind::T, n, Integers);
            assert_eq!(t.mul(&t.transpose()).unwrap(), pascal_symmetric_z(n));
        }
    }

    #[test]
    fn doubling_is_kronecker_with_p2_mod_2() {
        let f2 = fp(2);
        let p2 = pascal_symmetric(2, f2);
        for n in 0..=32 {
            let lhs = pascal_symmetric(2 * n, f2);
            assert_eq!(lhs, pascal_symmetric(n, f2).kron(&p2).unwrap(), "n={n}");
        }
    }

    #[test]
    fn family_parsing() {
        for s in ["pascal", "reduced2", "reduced3", "T", "L", "Ltilde", "shifted:3", "shifted-unit:2"] {
            assert_eq!(s.parse::<PascalKind>().unwrap().to_string(), s);
        }
        assert!("shifted:x".parse::<PascalKind>().is_err());
        let b = PascalFamily::new(PascalKind::Reduced3, 3, None).build().unwrap();
        assert_eq!(b, BuiltMatrix::Z(pascal_reduced(3, 3).unwrap()));
        let b = PascalFamily::new(PascalKind::Symmetric, 3, Some(3)).build().unwrap();
        assert_eq!(b, BuiltMatrix::Fp(pascal_symmetric(3, fp(3))));
    }

    fn invertible_2x2() -> impl Strategy<Value = [i64; 4]> {
        prop::array::uniform4(0i64..5).prop_filter("invertible mod 5", |m| {
            (m[0] * m[3] - m[1] * m[2]).rem_euclid(5) != 0
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn sympower_is_multiplicative(a in invertible_2x2(), b in invertible_2x2(), n in 1usize..=12) {
            let f = fp(5);
            // AB as 2x2 integer product
            let ab = [
                a[0] * b[0] + a[1] * b[2],
                a[0] * b[1] + a[1] * b[3],
                a[2] * b[0] + a[3] * b[2],
                a[2] * b[1] + a[3] * b[3],
            ];
            let sa = sympower(a[0], a[1], a[2], a[3], n, f).unwrap();
            let sb = sympower(b[0], b[1], b[2], b[3], n, f).unwrap();
            let sab = sympower(ab[0], ab[1], ab[2], ab[3], n, f).unwrap();
            prop_assert_eq!(sa.mul(&sb).unwrap(), sab);
        }
    }
}
