//! Dense exact linear algebra over Z, Q and F_p.
//!
//! Determinants use fraction-free Bareiss elimination over Z and plain
//! Gaussian elimination over fields. Characteristic polynomials use the
//! division-free Berkowitz recurrence over Z and Hessenberg reduction over
//! fields; both are public so they can be checked against each other.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::domain::{DomainTag, Field, Integers, PrimeField, Rationals, Ring};
use crate::error::{Error, Result};
use crate::polyring::Poly;

/// Row-major dense matrix over an exact domain.
#[derive(Clone, PartialEq)]
pub struct ExactMatrix<R: Ring> {
    ring: R,
    rows: usize,
    cols: usize,
    entries: Vec<R::Elem>,
}

pub type ZMatrix = ExactMatrix<Integers>;
pub type QMatrix = ExactMatrix<Rationals>;
pub type FpMatrix = ExactMatrix<PrimeField>;

impl<R: Ring> ExactMatrix<R> {
    pub fn new(ring: R, rows: usize, cols: usize, entries: Vec<R::Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { ring, rows, cols, entries })
    }

    pub fn from_fn(
        ring: R,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> R::Elem,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { ring, rows, cols, entries }
    }

    pub fn from_i64_rows(ring: R, rows: &[&[i64]]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&v| ring.from_i64(v)))
            .collect();
        Self::new(ring, r, c, entries)
    }

    pub fn zeros(ring: R, rows: usize, cols: usize) -> Self {
        let z = ring.zero();
        Self { entries: vec![z; rows * cols], ring, rows, cols }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let (zero, one) = (ring.zero(), ring.one());
        Self::from_fn(ring, n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[R::Elem] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[R::Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::Shape(format!(
                "square matrix required, got {}x{}",
                self.rows, self.cols
            )))
        }
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

    /// Converts every entry into another domain.
    pub fn map_into<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> ExactMatrix<S> {
        ExactMatrix {
            entries: self.entries.iter().map(f).collect(),
            ring: target,
            rows: self.rows,
            cols: self.cols,
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ring.clone(), self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    /// Leading `n×n` principal submatrix.
    pub fn leading(&self, n: usize) -> Result<Self> {
        if n > self.rows || n > self.cols {
            return Err(Error::Shape(format!(
                "leading {n}x{n} block of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(Self::from_fn(self.ring.clone(), n, n, |i, j| self.get(i, j).clone()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("addition of differently shaped matrices".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Self::new(self.ring.clone(), self.rows, self.cols, entries)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_into(self.ring.clone(), |a| self.ring.neg(a))
    }

    pub fn scale(&self, s: &R::Elem) -> Self {
        self.map_into(self.ring.clone(), |a| self.ring.mul(a, s))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let r = &self.ring;
        let mut out = vec![r.zero(); self.rows * other.cols];
        for i in 0..self.rows {
            let acc = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for (j, slot) in acc.iter_mut().enumerate() {
                    let b = other.get(k, j);
                    if !r.is_zero(b) {
                        *slot = r.add(slot, &r.mul(a, b));
                    }
                }
            }
        }
        Self::new(r.clone(), self.rows, other.cols, out)
    }

    /// Kronecker product; `(A ⊗ B)[(i,k),(j,l)] = A[i,j]·B[k,l]`.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let (br, bc) = (other.rows, other.cols);
        Ok(Self::from_fn(
            self.ring.clone(),
            self.rows * br,
            self.cols * bc,
            |i, j| self.ring.mul(self.get(i / br, j / bc), other.get(i % br, j % bc)),
        ))
    }

    /// `M^e` by binary powering; `M^0 = I`.
    pub fn pow(&self, mut e: u64) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::identity(self.ring.clone(), n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<R::Elem> {
        let n = self.require_square()?;
        Ok((0..n).fold(self.ring.zero(), |acc, i| self.ring.add(&acc, self.get(i, i))))
    }

    /// Determinant, by Bareiss over rings and Gaussian elimination over fields.
    pub fn det(&self) -> Result<R::Elem> {
        if self.ring.is_field() {
            self.det_gauss()
        } else {
            self.det_bareiss()
        }
    }

    /// Fraction-free Bareiss elimination with row pivoting.
    ///
    /// Every intermediate value is a minor of the input, so the only
    /// divisions are exact.
    pub fn det_bareiss(&self) -> Result<R::Elem> {
        let n = self.require_square()?;
        let r = &self.ring;
        if n == 0 {
            return Ok(r.one());
        }
        let mut a = self.entries.clone();
        let mut negate = false;
        let mut prev = r.one();
        for k in 0..n - 1 {
            if r.is_zero(&a[k * n + k]) {
                let Some(p) = (k + 1..n).find(|&i| !r.is_zero(&a[i * n + k])) else {
                    return Ok(r.zero());
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                negate = !negate;
            }
            let pivot = a[k * n + k].clone();
            let unit_step = pivot == prev;
            for i in k + 1..n {
                let aik = a[i * n + k].clone();
                if unit_step && r.is_zero(&aik) {
                    // (pivot·a_ij − 0)/prev = a_ij
                    continue;
                }
                for j in k + 1..n {
                    let num = r.sub(&r.mul(&pivot, &a[i * n + j]), &r.mul(&aik, &a[k * n + j]));
                    a[i * n + j] = r.div_exact(&num, &prev).expect("Bareiss division is exact");
                }
            }
            prev = pivot;
        }
        let d = a[n * n - 1].clone();
        Ok(if negate { r.neg(&d) } else { d })
    }

    /// Gaussian elimination; requires a field.
    pub fn det_gauss(&self) -> Result<R::Elem> {
        let n = self.require_square()?;
        self.require_field()?;
        let r = &self.ring;
        let mut a = self.entries.clone();
        let mut det = r.one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !r.is_zero(&a[i * n + k])) else {
                return Ok(r.zero());
            };
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                det = r.neg(&det);
            }
            let pivot = a[k * n + k].clone();
            det = r.mul(&det, &pivot);
            let inv = r.inv(&pivot).expect("nonzero pivot in a field");
            for i in k + 1..n {
                let f = r.mul(&a[i * n + k], &inv);
                if r.is_zero(&f) {
                    continue;
                }
                for j in k + 1..n {
                    a[i * n + j] = r.sub(&a[i * n + j], &r.mul(&f, &a[k * n + j]));
                }
            }
        }
        Ok(det)
    }

    /// Determinants of the leading `k×k` blocks for `k = 0, 1, …`, by one
    /// fraction-free elimination without pivoting.
    ///
    /// Stops after the first vanishing minor, so the result has fewer than
    /// `n + 1` entries exactly when some leading minor is zero (that zero is
    /// the last entry).
    pub fn leading_principal_minors(&self) -> Result<Vec<R::Elem>> {
        let n = self.require_square()?;
        let r = &self.ring;
        let mut out = vec![r.one()];
        let mut a = self.entries.clone();
        let mut prev = r.one();
        for k in 0..n {
            let pivot = a[k * n + k].clone();
            out.push(pivot.clone());
            if r.is_zero(&pivot) {
                break;
            }
            let unit_step = pivot == prev;
            for i in k + 1..n {
                let aik = a[i * n + k].clone();
                if unit_step && r.is_zero(&aik) {
                    continue;
                }
                for j in k + 1..n {
                    let num = r.sub(&r.mul(&pivot, &a[i * n + j]), &r.mul(&aik, &a[k * n + j]));
                    a[i * n + j] = r.div_exact(&num, &prev).expect("Bareiss division is exact");
                }
            }
            prev = pivot;
        }
        Ok(out)
    }

    fn require_field(&self) -> Result<()> {
        if self.ring.is_field() {
            Ok(())
        } else {
            Err(Error::UnsupportedDomain(self.ring.tag().to_string()))
        }
    }

    /// Monic `det(tI − M)`, by Hessenberg over fields and Berkowitz otherwise.
    pub fn charpoly(&self) -> Result<Poly<R>> {
        if self.ring.is_field() {
            self.charpoly_hessenberg()
        } else {
            self.charpoly_berkowitz()
        }
    }

    /// Division-free Berkowitz algorithm.
    ///
    /// Grows the characteristic polynomial of the leading `r×r` block one
    /// row and column at a time, multiplying by a Toeplitz matrix built from
    /// `a_rr` and the products `R·A_r^i·C`.
    pub fn charpoly_berkowitz(&self) -> Result<Poly<R>> {
        let n = self.require_square()?;
        let r = &self.ring;
        // coefficients high to low
        let mut v = vec![r.one()];
        for k in 0..n {
            // toeplitz column: 1, −a_kk, −R C, −R A C, …, −R A^{k−1} C
            let mut col = Vec::with_capacity(k + 2);
            col.push(r.one());
            col.push(r.neg(self.get(k, k)));
            let mut w: Vec<R::Elem> = (0..k).map(|i| self.get(i, k).clone()).collect();
            for step in 0..k {
                let dot = (0..k).fold(r.zero(), |acc, j| r.add(&acc, &r.mul(self.get(k, j), &w[j])));
                col.push(r.neg(&dot));
                if step + 1 < k {
                    w = (0..k)
                        .map(|i| {
                            (0..k).fold(r.zero(), |acc, j| r.add(&acc, &r.mul(self.get(i, j), &w[j])))
                        })
                        .collect();
                }
            }
            let mut next = vec![r.zero(); k + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, vj) in v.iter().enumerate().take(i + 1) {
                    *slot = r.add(slot, &r.mul(&col[i - j], vj));
                }
            }
            v = next;
        }
        v.reverse();
        Ok(Poly::new(r.clone(), v))
    }

    /// Similarity reduction to upper Hessenberg form, then the standard
    /// three-term-style recurrence on its leading blocks. O(n³); requires a
    /// field.
    pub fn charpoly_hessenberg(&self) -> Result<Poly<R>> {
        let n = self.require_square()?;
        self.require_field()?;
        let r = &self.ring;
        let mut h = self.entries.clone();
        for c in 0..n.saturating_sub(2) {
            let Some(p) = (c + 1..n).find(|&i| !r.is_zero(&h[i * n + c])) else {
                continue;
            };
            if p != c + 1 {
                for j in 0..n {
                    h.swap(p * n + j, (c + 1) * n + j);
                }
                for i in 0..n {
                    h.swap(i * n + p, i * n + c + 1);
                }
            }
            let inv = r.inv(&h[(c + 1) * n + c]).expect("nonzero pivot");
            for i in c + 2..n {
                let u = r.mul(&h[i * n + c], &inv);
                if r.is_zero(&u) {
                    continue;
                }
                for j in 0..n {
                    let t = r.mul(&u, &h[(c + 1) * n + j]);
                    h[i * n + j] = r.sub(&h[i * n + j], &t);
                }
                for row in 0..n {
                    let t = r.mul(&u, &h[row * n + i]);
                    h[row * n + c + 1] = r.add(&h[row * n + c + 1], &t);
                }
            }
        }
        // polys[m] = charpoly of the leading m×m block, low to high
        let mut polys: Vec<Vec<R::Elem>> = vec![vec![r.one()]];
        for m in 1..=n {
            let prev = &polys[m - 1];
            let mut next = vec![r.zero(); m + 1];
            let diag = &h[(m - 1) * n + m - 1];
            for (i, c) in prev.iter().enumerate() {
                next[i + 1] = r.add(&next[i + 1], c);
                next[i] = r.sub(&next[i], &r.mul(diag, c));
            }
            let mut prod = r.one();
            for i in 1..m {
                prod = r.mul(&prod, &h[(m - i) * n + m - i - 1]);
                if r.is_zero(&prod) {
                    break;
                }
                let coef = r.mul(&h[(m - i - 1) * n + m - 1], &prod);
                if r.is_zero(&coef) {
                    continue;
                }
                for (j, c) in polys[m - i - 1].iter().enumerate() {
                    next[j] = r.sub(&next[j], &r.mul(&coef, c));
                }
            }
            polys.push(next);
        }
        Ok(Poly::new(r.clone(), polys.pop().expect("at least one poly")))
    }

    /// Row rank by Gaussian elimination; requires a field.
    pub fn rank(&self) -> Result<usize> {
        self.require_field()?;
        let r = &self.ring;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.entries.clone();
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&i| !r.is_zero(&a[i * cols + c])) else {
                continue;
            };
            for j in 0..cols {
                a.swap(rank * cols + j, p * cols + j);
            }
            let inv = r.inv(&a[rank * cols + c]).expect("nonzero pivot");
            for i in rank + 1..rows {
                let f = r.mul(&a[i * cols + c], &inv);
                if r.is_zero(&f) {
                    continue;
                }
                for j in c..cols {
                    a[i * cols + j] = r.sub(&a[i * cols + j], &r.mul(&f, &a[rank * cols + j]));
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        Ok(rank)
    }

    /// Gauss–Jordan inverse over a field.
    fn inverse_field(&self) -> Result<Self> {
        let n = self.require_square()?;
        let r = &self.ring;
        let w = 2 * n;
        let mut a = vec![r.zero(); n * w];
        for i in 0..n {
            for j in 0..n {
                a[i * w + j] = self.get(i, j).clone();
            }
            a[i * w + n + i] = r.one();
        }
        for k in 0..n {
            let p = (k..n)
                .find(|&i| !r.is_zero(&a[i * w + k]))
                .ok_or(Error::Singular)?;
            for j in 0..w {
                a.swap(k * w + j, p * w + j);
            }
            let inv = r.inv(&a[k * w + k]).expect("nonzero pivot");
            for j in k..w {
                a[k * w + j] = r.mul(&a[k * w + j], &inv);
            }
            for i in 0..n {
                if i == k || r.is_zero(&a[i * w + k]) {
                    continue;
                }
                let f = a[i * w + k].clone();
                for j in k..w {
                    a[i * w + j] = r.sub(&a[i * w + j], &r.mul(&f, &a[k * w + j]));
                }
            }
        }
        Ok(Self::from_fn(r.clone(), n, n, |i, j| a[i * w + n + j].clone()))
    }

    pub fn display_rows(&self) -> String {
        let cells: Vec<String> = self.entries.iter().map(|e| self.ring.format(e)).collect();
        let width = cells.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_record(&self) -> MatrixRecord {
        MatrixRecord {
            rows: self.rows,
            cols: self.cols,
            domain: self.ring.tag().to_string(),
            entries: self.entries.iter().map(|e| self.ring.format(e)).collect(),
        }
    }

    fn from_record_in(ring: R, rec: &MatrixRecord) -> Result<Self> {
        let entries = rec
            .entries
            .iter()
            .map(|s| ring.parse(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, rec.rows, rec.cols, entries)
    }
}

impl<F: Field> ExactMatrix<F> {
    pub fn inverse(&self) -> Result<Self> {
        self.inverse_field()
    }
}

impl ZMatrix {
    /// Integer inverse of a unimodular matrix.
    ///
    /// Inverts over Q, then requires the result to be integral, which
    /// happens exactly when `det = ±1`.
    pub fn inverse(&self) -> Result<Self> {
        let q = self.to_rationals().inverse_field()?;
        if q.entries.iter().all(|e| e.is_integer()) {
            Ok(q.map_into(Integers, |e| e.to_integer()))
        } else {
            let d = self.det_bareiss()?;
            Err(Error::NonUnimodular(d.to_string()))
        }
    }

    pub fn reduce(&self, field: PrimeField) -> FpMatrix {
        self.map_into(field, |e| field.reduce(e))
    }

    pub fn to_rationals(&self) -> QMatrix {
        self.map_into(Rationals, |e| BigRational::from_integer(e.clone()))
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries.iter().map(|e| e.abs()).max().unwrap_or_default()
    }
}

impl FpMatrix {
    /// Matrix of symmetric-range integer representatives.
    pub fn lift_symmetric(&self) -> ZMatrix {
        let f = self.ring;
        self.map_into(Integers, |&e| BigInt::from(f.signed(e)))
    }
}

impl<R: Ring> fmt::Debug for ExactMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix[{}] {}x{}", self.ring.tag(), self.rows, self.cols)?;
        write!(f, "{}", self.display_rows())
    }
}

/// JSON form of a matrix: row-major decimal strings, rationals as `a/b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub rows: usize,
    pub cols: usize,
    pub domain: String,
    pub entries: Vec<String>,
}

/// A matrix over whichever domain its record names.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Z(ZMatrix),
    Q(QMatrix),
    Fp(FpMatrix),
}

impl AnyMatrix {
    pub fn from_record(rec: &MatrixRecord) -> Result<Self> {
        Ok(match rec.domain.parse::<DomainTag>()? {
            DomainTag::Integers => AnyMatrix::Z(ZMatrix::from_record_in(Integers, rec)?),
            DomainTag::Rationals => AnyMatrix::Q(QMatrix::from_record_in(Rationals, rec)?),
            DomainTag::PrimeField(p) => {
                AnyMatrix::Fp(FpMatrix::from_record_in(PrimeField::new(p)?, rec)?)
            }
        })
    }

    pub fn to_record(&self) -> MatrixRecord {
        match self {
            AnyMatrix::Z(m) => m.to_record(),
            AnyMatrix::Q(m) => m.to_record(),
            AnyMatrix::Fp(m) => m.to_record(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rec: MatrixRecord =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_record(&rec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("record serializes")
    }
}
