//! Machine-readable verdicts and factor-multiplicity reports.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::domain::{DomainTag, Ring};
use crate::error::{Error, Result};
use crate::polyring::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

/// Whether a check instance rests on a proved statement or on a conjecture.
///
/// A failing theorem instance is a bug; a failing conjecture instance is
/// a finding, and only the former affects the process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    #[default]
    Theorem,
    Conjecture,
}

/// Outcome of one check instance.
///
/// Every failing report carries a witness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Map<String, Value>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip)]
    pub basis: Basis,
}

impl CheckReport {
    /// A passing report with no parameters yet.
    pub fn new(check: impl Into<String>, basis: Basis) -> Self {
        Self {
            check: check.into(),
            params: Map::new(),
            verdict: Verdict::Pass,
            witness: None,
            basis,
        }
    }

    pub fn theorem(check: impl Into<String>) -> Self {
        Self::new(check, Basis::Theorem)
    }

    pub fn conjecture(check: impl Into<String>) -> Self {
        Self::new(check, Basis::Conjecture)
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Attaches supporting data without changing the verdict.
    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn fail(mut self, witness: Value) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(witness);
        self
    }

    pub fn not_applicable(mut self, reason: &str) -> Self {
        self.verdict = Verdict::NotApplicable;
        self.params.insert("reason".into(), reason.into());
        self
    }

    /// Fails with `witness()` unless `ok`.
    pub fn expect(self, ok: bool, witness: impl FnOnce() -> Value) -> Self {
        if ok {
            self
        } else {
            self.fail(witness())
        }
    }

    /// Settles the verdict from a fallible comparison; errors become failures.
    pub fn settle(self, outcome: Result<Option<Value>>) -> Self {
        match outcome {
            Ok(None) => self,
            Ok(Some(w)) => self.fail(w),
            Err(e) => self.fail_with_error(&e),
        }
    }

    pub fn fail_with_error(self, e: &Error) -> Self {
        self.fail(serde_json::json!({ "error": e.to_string() }))
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn is_theorem_failure(&self) -> bool {
        self.verdict == Verdict::Fail && self.basis == Basis::Theorem
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Witness for two polynomials that should agree.
pub fn poly_mismatch<R: Ring>(expected: &Poly<R>, actual: &Poly<R>) -> Value {
    serde_json::json!({
        "expected": expected.to_strings(),
        "actual": actual.to_strings(),
    })
}

/// `None` when equal, a mismatch witness otherwise.
pub fn compare_polys<R: Ring>(expected: &Poly<R>, actual: &Poly<R>) -> Option<Value> {
    (expected != actual).then(|| poly_mismatch(expected, actual))
}

/// Multiplicities of `t−1`, `t+1` and `t²+t+1` in a polynomial, plus what is left.
///
/// Over F₂ the factors `t−1` and `t+1` coincide and the multiplicity is
/// recorded under `t+1`; over F₃ `t²+t+1 = (t−1)²` and is not split off.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorizationReport<R: Ring> {
    pub mult_t_minus_1: u64,
    pub mult_t_plus_1: u64,
    pub mult_t2_t_1: u64,
    pub cofactor: Poly<R>,
}

impl<R: Ring> FactorizationReport<R> {
    pub fn of(f: &Poly<R>) -> Result<Self> {
        let ring = f.ring().clone();
        let tag = ring.tag();
        let mut rest = f.clone();
        let mut take = |g: Poly<R>, skip: bool| -> Result<u64> {
            if skip {
                return Ok(0);
            }
            let (m, c) = rest.extract_multiplicity(&g)?;
            rest = c;
            Ok(m)
        };
        let mult_t2_t_1 = take(
            Poly::from_i64s(ring.clone(), &[1, 1, 1]),
            tag == DomainTag::PrimeField(3),
        )?;
        let mult_t_minus_1 = take(Poly::linear(ring.clone(), -1), tag == DomainTag::PrimeField(2))?;
        let mult_t_plus_1 = take(Poly::linear(ring.clone(), 1), false)?;
        Ok(Self {
            mult_t_minus_1,
            mult_t_plus_1,
            mult_t2_t_1,
            cofactor: rest,
        })
    }

    pub fn recombine(&self) -> Result<Poly<R>> {
        let ring = self.cofactor.ring().clone();
        let parts = [
            Poly::linear(ring.clone(), -1).pow(self.mult_t_minus_1),
            Poly::linear(ring.clone(), 1).pow(self.mult_t_plus_1),
            Poly::from_i64s(ring.clone(), &[1, 1, 1]).pow(self.mult_t2_t_1),
        ];
        parts.iter().try_fold(self.cofactor.clone(), |acc, g| acc.mul(g))
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "mult_t_minus_1": self.mult_t_minus_1,
            "mult_t_plus_1": self.mult_t_plus_1,
            "mult_t2_t_1": self.mult_t2_t_1,
            "cofactor": self.cofactor.to_strings(),
        })
    }
}
