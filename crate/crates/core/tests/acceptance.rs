//! Acceptance criteria 1 to 11, one `criterion N: PASS|FAIL` line each.
//!
//! Runs without the libtest harness so the lines always reach stdout. The
//! process exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use pascal_core::domain::{Integers, PrimeField, Ring};
use pascal_core::exactmat::{FpMatrix, ZMatrix};
use pascal_core::groups::{dihedral6_check, gp_order, gp_order_check, trace_check, DEFAULT_CAP};
use pascal_core::numtheory::is_prime;
use pascal_core::pascal::{pascal_reduced, pascal_symmetric, pascal_symmetric_z, triangular, TriangularKind};
use pascal_core::polyring::{FpPoly, ZPoly};
use pascal_core::spectra::checks::*;
use pascal_core::spectra::gamma::{gamma, GammaIdentity};
use pascal_core::spectra::{CheckReport, Verdict};

/// Outcome of one criterion: failures are collected as short notes.
struct Outcome {
    notes: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Self {
        Self {
            notes: Vec::new(),
            summary: String::new(),
        }
    }

    fn require(&mut self, ok: bool, note: impl FnOnce() -> String) {
        if !ok {
            self.notes.push(note());
        }
    }

    fn require_reports(&mut self, reports: &[CheckReport]) {
        for r in reports.iter().filter(|r| r.verdict == Verdict::Fail) {
            self.notes.push(r.to_json_line());
        }
    }

    fn require_pass(&mut self, reports: &[CheckReport]) {
        for r in reports.iter().filter(|r| !r.passed()) {
            self.notes.push(r.to_json_line());
        }
    }
}

fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// `C(i+j, i)` is odd exactly when `i` and `j` share no binary digit.
fn reduced2_by_kummer(n: usize) -> ZMatrix {
    ZMatrix::from_fn(Integers, n, n, |i, j| BigInt::from(u8::from(i & j == 0)))
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    let n = 512;
    let m = pascal_reduced(n, 2).unwrap();
    o.require(m == reduced2_by_kummer(n), || "reduced2 disagrees with i&j==0".into());
    let minors = m.leading_principal_minors().unwrap();
    let mut sign = 1i64;
    for k in 0..n {
        if (k as u64).count_ones() % 2 == 1 {
            sign = -sign;
        }
        o.require(minors[k + 1] == BigInt::from(sign), || format!("n={}", k + 1));
    }
    for size in [1, 2, 7, 64, 100] {
        let d = m.leading(size).unwrap().det_bareiss().unwrap();
        o.require(d == minors[size], || format!("bareiss n={size}"));
    }
    let reports = check_thm1(n);
    o.require(reports.len() == n, || "report count".into());
    o.require_pass(&reports);
    o.summary = format!("{n} determinants");
    o
}

const PROP2_Q: [(u64, u64); 14] = [
    (2, 2), (4, 2), (8, 2), (16, 2), (32, 2), (3, 3), (9, 3), (27, 3),
    (5, 5), (25, 5), (7, 7), (49, 7), (11, 11), (13, 13),
];

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    for (q, p) in PROP2_Q {
        let m = pascal_symmetric(q as usize, fp(p));
        let cube = m.mul(&m).unwrap().mul(&m).unwrap();
        o.require(cube == FpMatrix::identity(fp(p), q as usize), || format!("P({q})^3 mod {p}"));
        // χ divides t³ − 1 to the power q, so its only roots are cube roots of unity.
        let chi = m.charpoly().unwrap();
        let t3 = FpPoly::from_i64s(fp(p), &[-1, 0, 0, 1]).pow(q);
        let divides = t3.divrem(&chi).unwrap().1.is_zero();
        o.require(divides, || format!("chi_{q} does not divide (t^3-1)^{q}"));
        o.require_pass(&[check_prop2(q)]);
    }
    o.summary = format!("{} prime powers", PROP2_Q.len());
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    let instances = thm3_instances(64);
    let mut checked = 0;
    for p in [2u64, 3, 5, 7] {
        let mut q = p;
        while q <= 64 {
            for k in 0..=q / 2 {
                o.require(instances.contains(&(q, k)), || format!("missing q={q} k={k}"));
                o.require_pass(&[check_thm3(q, k)]);
                checked += 1;
            }
            q *= p;
        }
    }
    o.summary = format!("{checked} (q, k) pairs");
    o
}

/// `(γ(n), γ₂(n))` for `n = 1..=32`.
const GAMMA_TABLE: [u64; 32] = [
    1, 0, 3, 2, 5, 0, 3, 2, 5, 0, 11, 6, 9, 4, 7, 6, 9, 4, 15, 10, 21, 0, 11, 6, 9, 4, 15, 10, 13, 8,
    11, 10,
];
const GAMMA2_TABLE: [u64; 32] = [
    0, 1, 0, 1, 0, 3, 2, 3, 2, 5, 0, 3, 2, 5, 4, 5, 4, 7, 2, 5, 0, 11, 6, 9, 8, 11, 6, 9, 8, 11, 10,
    11,
];

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    let reports: Vec<_> = (0..=256).map(check_thm4).collect();
    o.require_pass(&reports);
    for n in 1..=32u64 {
        let g = gamma(n);
        let i = n as usize - 1;
        o.require(g.gamma == GAMMA_TABLE[i], || format!("gamma({n})={}", g.gamma));
        o.require(g.gamma2 == GAMMA2_TABLE[i], || format!("gamma2({n})={}", g.gamma2));
    }
    // Multiplicities read straight off the characteristic polynomial mod 2.
    let f2 = fp(2);
    for n in 1..=64u64 {
        let chi = pascal_symmetric(n as usize, f2).charpoly().unwrap();
        let (m1, rest) = chi.extract_multiplicity(&FpPoly::linear(f2, 1)).unwrap();
        let (m2, rest) = rest.extract_multiplicity(&FpPoly::from_i64s(f2, &[1, 1, 1])).unwrap();
        let g = gamma(n);
        o.require(m1 == g.gamma && m2 == g.gamma2 && rest.degree() == Some(0), || {
            format!("n={n}: charpoly gives ({m1}, {m2})")
        });
    }
    o.summary = "257 charpolys, 64 table entries".into();
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    let max_n = 1 << 14;
    let mut total = 0;
    for id in GammaIdentity::ALL {
        let r = check_thm5(id, max_n);
        let checked = r.params["checked"].as_u64().unwrap();
        o.require(checked > 0, || format!("{} checked nothing", id.label()));
        total += checked;
        o.require_pass(&[r]);
    }
    o.require_pass(&[check_gamma_pairs(max_n)]);
    o.summary = format!("{} identities, {total} instances", GammaIdentity::ALL.len());
    o
}

fn zpoly(c: &[i64]) -> ZPoly {
    ZPoly::from_i64s(Integers, c)
}

/// Coefficients from the top degree down.
fn top_down(f: &ZPoly) -> Vec<BigInt> {
    f.coeffs().iter().rev().cloned().collect()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    let c1 = zpoly(&[1, -2, 0, -2, 1]);
    let exact = [
        (0, zpoly(&[1])),
        (1, c1.clone()),
        (2, zpoly(&[1, -6, 4, -4, 15, -4, 4, -6, 1])),
        (3, c1.mul(&zpoly(&[1, -16, 4, -4, 40, -4, 4, -16, 1])).unwrap()),
    ];
    let mut ck = Vec::new();
    for k in 0..=5u64 {
        let (r, ext) = check_conj6(k, &ck_prime_powers(k, None));
        o.require_pass(&[r]);
        match ext {
            Some(e) => {
                o.require(e.stable && e.palindromic, || format!("c{k} stable/palindromic"));
                ck.push(e.ck);
            }
            None => {
                o.notes.push(format!("c{k} not extracted"));
                return o;
            }
        }
    }
    for (k, expected) in &exact {
        o.require(&ck[*k] == expected, || format!("c{k} = {}", ck[*k]));
    }
    let c4 = top_down(&ck[4]);
    let printed = big(&[1, -58, 288, -240, 393, -1440, 836, -902, 2376, -902]);
    o.require(c4.len() == 17 && c4[..10] == printed[..], || format!("c4 = {}", ck[4]));
    o.require(c4[15..] == big(&[-58, 1])[..], || "c4 tail".into());
    match ck[5].div_exact(&c1).unwrap() {
        Some(q) => {
            let top = top_down(&q);
            let printed = big(&[1, -196, 2112, -792, 1290, -10560, 2768, -2972, 17424, -2972]);
            o.require(top.len() == 17 && top[..10] == printed[..], || format!("c5/c1 = {q}"));
            o.require(top[15..] == big(&[-196, 1])[..], || "c5/c1 tail".into());
            o.require(q.is_palindromic(1), || "c5/c1 not palindromic".into());
        }
        None => o.notes.push("c1 does not divide c5".into()),
    }
    for (k, c) in ck.iter().enumerate() {
        o.require(c.is_palindromic(1) && c.degree() == Some(4 * k), || format!("c{k} shape"));
    }
    o.summary = "c0..c5 stable and palindromic, printed coefficients match".into();
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let mut reports: Vec<_> = (0..=8).map(check_ck_mod3).collect();
    reports.extend((0..=243).map(check_chi_mod3));
    let fails = reports.iter().filter(|r| r.verdict == Verdict::Fail).count();
    o.require_pass(&reports);
    o.summary = format!("{} conjecture instances, {fails} failing", reports.len());
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    let qs = two_mod_three_prime_powers(64);
    o.require(qs == [2, 5, 8, 11, 17, 23, 29, 32, 41, 47, 53, 59], || format!("q list {qs:?}"));
    let mut reports = Vec::new();
    for &q in &qs {
        reports.push(check_final_conjecture(q));
        reports.push(check_selfdual_code(q));
        reports.push(check_shifted_conjecture(q));
    }
    o.require_reports(&reports);
    let applicable = reports.iter().filter(|r| r.verdict != Verdict::NotApplicable).count();
    o.require(applicable >= qs.len(), || "too few applicable instances".into());
    o.summary = format!("{applicable} applicable instances over {} prime powers", qs.len());
    o
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::new();
    let [(n2, s2), (n3, s3)] = pascal_specs();
    let d2 = s2.ldu_seed().unwrap().d();
    let d3 = s3.ldu_seed().unwrap().d();
    o.require(d2 == [rational(1, 1), rational(-1, 1)], || format!("{n2} d = {d2:?}"));
    o.require(d3 == [rational(1, 1), rational(-2, 1), rational(-1, 2)], || format!("{n3} d = {d3:?}"));
    o.require_pass(&[check_ldu(n2, &s2), check_ldu(n3, &s3)]);
    o.require_pass(&check_det_by_digits(n2, &s2, 243));
    o.require_pass(&check_det_by_digits(n3, &s3, 243));
    o.require_pass(&check_mod3_det(120));
    let inverses: Vec<_> = (1..=128).map(check_reduced2_inverse).collect();
    o.require_pass(&inverses);
    o.summary = "seed LDU, 486 digit determinants, 120 mod-3 determinants, 128 inverses".into();
    o
}

fn criterion_10() -> Outcome {
    let mut o = Outcome::new();
    let mut orders = Vec::new();
    for (p, expected) in [(5u64, 24u64), (7, 42), (29, 120)] {
        let r = gp_order_check(p, expected, true, DEFAULT_CAP);
        let order = gp_order(p, DEFAULT_CAP).unwrap().order();
        orders.push(format!("p={p}: {order} (expected {expected})"));
        o.require_pass(&[r]);
    }
    for q in [2u64, 4, 8, 3, 9, 5, 7] {
        let p = (2..=q).find(|&d| q % d == 0).unwrap();
        o.require_pass(&[dihedral6_check(q, p)]);
    }
    for p in (3..=31).filter(|&p| is_prime(p)) {
        o.require_pass(&[trace_check(p)]);
    }
    o.summary = format!("closure orders {}", orders.join(", "));
    o
}

/// `(−t)^n χ(1/t)` as a coefficient list.
fn reciprocal_signed(chi: &ZPoly, n: usize) -> ZPoly {
    let r = chi.reversed();
    let flipped: Vec<BigInt> = r
        .coeffs()
        .iter()
        .map(|c| if n % 2 == 1 { -c } else { c.clone() })
        .collect();
    ZPoly::new(Integers, flipped)
}

fn criterion_11() -> Outcome {
    let mut o = Outcome::new();
    for n in 0..=40usize {
        let chi = pascal_symmetric_z(n).charpoly().unwrap();
        o.require(reciprocal_signed(&chi, n) == chi, || format!("reciprocity n={n}"));
        if n % 2 == 1 && n <= 37 {
            o.require(Integers.is_zero(&chi.eval(&BigInt::from(1))), || format!("chi_{n}(1)"));
        }
    }
    for n in 0..=64usize {
        let t = triangular(TriangularKind::T, n, Integers);
        o.require(t.mul(&t.transpose()).unwrap() == pascal_symmetric_z(n), || format!("P=TT^t n={n}"));
    }
    for p in [2u64, 3, 5, 7] {
        for n in 0..=24usize {
            let m = pascal_symmetric(n, fp(p));
            let (b, h) = (m.charpoly_berkowitz().unwrap(), m.charpoly_hessenberg().unwrap());
            o.require(b == h, || format!("berkowitz/hessenberg n={n} p={p}"));
        }
    }
    o.summary = "reciprocity n<=40, chi(1)=0 odd n<=37, P=TT^t n<=64, 100 charpoly pairs".into();
    o
}

fn main() -> ExitCode {
    let criteria: [fn() -> Outcome; 11] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
        criterion_11,
    ];
    let mut failed = 0;
    for (i, run) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        if o.notes.is_empty() {
            println!("criterion {}: PASS ({}; {secs:.1}s)", i + 1, o.summary);
        } else {
            failed += 1;
            println!("criterion {}: FAIL ({}; {secs:.1}s)", i + 1, o.summary);
            for note in o.notes.iter().take(10) {
                println!("    {note}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
