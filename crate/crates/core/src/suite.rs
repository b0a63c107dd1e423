//! Verification targets and the driver that runs their instances.
//!
//! Each target expands to a list of independent jobs. Jobs run on a rayon
//! pool and their reports are concatenated in job order, so the output
//! does not depend on scheduling.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groups::{self, DEFAULT_CAP};
use crate::numtheory::{as_prime_power, is_prime};
use crate::spectra::checks::{self as ck, pascal_specs};
use crate::spectra::gamma::GammaIdentity;
use crate::spectra::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Thm1,
    Prop2,
    Thm3,
    Thm4,
    Thm5,
    Conj6,
    Conj7,
    Conj8,
    RemarkSelfdual,
    RemarkShifted,
    AutosimilarLdu,
    Mod3Det,
    Groups,
    All,
}

impl Target {
    pub const EACH: [Target; 13] = [
        Target::Thm1,
        Target::Prop2,
        Target::Thm3,
        Target::Thm4,
        Target::Thm5,
        Target::Conj6,
        Target::Conj7,
        Target::Conj8,
        Target::RemarkSelfdual,
        Target::RemarkShifted,
        Target::AutosimilarLdu,
        Target::Mod3Det,
        Target::Groups,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Target::Thm1 => "thm1",
            Target::Prop2 => "prop2",
            Target::Thm3 => "thm3",
            Target::Thm4 => "thm4",
            Target::Thm5 => "thm5",
            Target::Conj6 => "conj6",
            Target::Conj7 => "conj7",
            Target::Conj8 => "conj8",
            Target::RemarkSelfdual => "remark-selfdual",
            Target::RemarkShifted => "remark-shifted",
            Target::AutosimilarLdu => "autosimilar-ldu",
            Target::Mod3Det => "mod3-det",
            Target::Groups => "groups",
            Target::All => "all",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::EACH
            .into_iter()
            .chain([Target::All])
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown verification target '{s}'")))
    }
}

/// Bounds for a verification run; `None` selects the target's default.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_n: Option<u64>,
    pub max_q: Option<u64>,
    pub max_k: Option<u64>,
    /// Prime powers; their meaning depends on the target (see [`jobs`]).
    pub primes: Option<Vec<u64>>,
}

impl SuiteConfig {
    fn n(&self, default: u64) -> u64 {
        self.max_n.unwrap_or(default)
    }

    fn q(&self, default: u64) -> u64 {
        self.max_q.unwrap_or(default)
    }

    fn k(&self, default: u64) -> u64 {
        self.max_k.unwrap_or(default)
    }

    /// Given prime powers, else all prime powers `≤ max_q` passing `keep`.
    fn prime_powers(&self, default_max_q: u64, keep: impl Fn(u64) -> bool) -> Vec<u64> {
        match &self.primes {
            Some(ps) => ps.clone(),
            None => ck::prime_powers_up_to(self.q(default_max_q))
                .into_iter()
                .map(|(q, _, _)| q)
                .filter(|&q| keep(q))
                .collect(),
        }
    }
}

/// Prime powers for `P(q)³ = I` and the closed form of `χ_q` by default.
pub const PROP2_DEFAULT: [u64; 14] = [2, 4, 8, 16, 32, 3, 9, 27, 5, 25, 7, 49, 11, 13];
/// Prime powers for the dihedral relations by default.
pub const DIHEDRAL_DEFAULT: [u64; 7] = [2, 4, 8, 3, 9, 5, 7];
/// `(p, |G_p|)` as stated for the exceptional primes.
pub const STATED_GP_ORDERS: [(u64, u64); 3] = [(5, 24), (7, 42), (29, 120)];

pub type Job = Box<dyn Fn() -> Vec<CheckReport> + Send + Sync>;

fn job(f: impl Fn() -> Vec<CheckReport> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn one(f: impl Fn() -> CheckReport + Send + Sync + 'static) -> Job {
    Box::new(move || vec![f()])
}

/// Expands a target into independent jobs.
///
/// Defaults: `thm1` n ≤ 512; `prop2` the 14 prime powers of
/// [`PROP2_DEFAULT`] (or all prime powers ≤ `max_q` when given); `thm3`
/// q ≤ 64; `thm4` n ≤ 256; `thm5` n ≤ 2^14; `conj6`/`conj7` k ≤ 8 with
/// `conj7` also covering n ≤ 243; `conj8` and both remarks the prime
/// powers q ≤ 64 with q ≡ 2 (mod 3); `autosimilar-ldu` n ≤ 243 for the
/// determinants and n ≤ min(max_n, 128) for the inverses; `mod3-det`
/// n ≤ 120; `groups` the stated orders at 5, 7, 29, the prediction at 11
/// plus any listed primes, dihedral relations and traces for odd p ≤ 31.
///
/// `--primes` lists prime powers: the moduli for `conj6` (each raised to a
/// level with p^l ≥ 2k), the q values for `prop2`, `conj8` and the remarks,
/// and extra primes for the `groups` order prediction.
pub fn jobs(target: Target, cfg: &SuiteConfig) -> Result<Vec<Job>> {
    if let Some(ps) = &cfg.primes {
        if let Some(&bad) = ps.iter().find(|&&q| as_prime_power(q).is_none()) {
            return Err(Error::Parameter(format!("{bad} is not a prime power")));
        }
    }
    let mut out: Vec<Job> = Vec::new();
    match target {
        Target::All => {
            for t in Target::EACH {
                out.extend(jobs(t, cfg)?);
            }
        }
        Target::Thm1 => {
            let n = cfg.n(512) as usize;
            out.push(job(move || ck::check_thm1(n)));
        }
        Target::Prop2 => {
            let qs = match (&cfg.primes, cfg.max_q) {
                (None, None) => PROP2_DEFAULT.to_vec(),
                _ => cfg.prime_powers(64, |_| true),
            };
            out.extend(qs.into_iter().map(|q| one(move || ck::check_prop2(q))));
        }
        Target::Thm3 => {
            for (q, k) in ck::thm3_instances(cfg.q(64)) {
                out.push(one(move || ck::check_thm3(q, k)));
            }
        }
        Target::Thm4 => {
            out.extend((1..=cfg.n(256)).map(|n| one(move || ck::check_thm4(n))));
        }
        Target::Thm5 => {
            let n = cfg.n(1 << 14);
            for id in GammaIdentity::ALL {
                out.push(one(move || ck::check_thm5(id, n)));
            }
            out.push(one(move || ck::check_gamma_pairs(n)));
        }
        Target::Conj6 => {
            let given = cfg.primes.clone();
            for k in 0..=cfg.k(8) {
                let given = given.clone();
                out.push(job(move || {
                    let pps = ck::ck_prime_powers(k, given.as_deref());
                    match ck::check_conj6(k, &pps) {
                        (r, Some(ext)) => vec![r, ck::check_ck_reduction(&ext, 2)],
                        (r, None) => vec![r],
                    }
                }));
            }
        }
        Target::Conj7 => {
            for k in 0..=cfg.k(8) {
                out.push(one(move || ck::check_ck_mod3(k)));
            }
            for n in 1..=cfg.n(243) {
                out.push(job(move || vec![ck::check_chi_mod3(n), ck::check_two_power_order(n)]));
            }
        }
        Target::Conj8 => {
            for q in cfg.prime_powers(64, |q| q % 3 == 2) {
                out.push(one(move || ck::check_final_conjecture(q)));
            }
        }
        Target::RemarkSelfdual => {
            for q in cfg.prime_powers(64, |q| q % 3 == 2) {
                out.push(one(move || ck::check_selfdual_code(q)));
            }
        }
        Target::RemarkShifted => {
            for q in cfg.prime_powers(64, |q| q % 3 == 2) {
                out.push(one(move || ck::check_shifted_conjecture(q)));
            }
        }
        Target::AutosimilarLdu => {
            let n = cfg.n(243) as usize;
            for (name, spec) in pascal_specs() {
                let s = spec.clone();
                out.push(one(move || ck::check_ldu(name, &s)));
                out.push(job(move || ck::check_det_by_digits(name, &spec, n)));
            }
            for m in 1..=n.min(128) {
                out.push(one(move || ck::check_reduced2_inverse(m)));
            }
        }
        Target::Mod3Det => {
            let n = cfg.n(120) as usize;
            out.push(job(move || ck::check_mod3_det(n)));
        }
        Target::Groups => {
            for (p, order) in STATED_GP_ORDERS {
                out.push(one(move || groups::gp_order_check(p, order, true, DEFAULT_CAP)));
            }
            let mut extra = vec![11];
            if let Some(ps) = &cfg.primes {
                extra.extend(ps.iter().copied().filter(|&p| is_prime(p) && p > 3));
            }
            extra.retain(|p| !STATED_GP_ORDERS.iter().any(|(s, _)| s == p));
            extra.sort_unstable();
            extra.dedup();
            for p in extra {
                let expected = groups::predicted_gp_order(p);
                out.push(one(move || groups::gp_order_check(p, expected, false, DEFAULT_CAP)));
            }
            let dihedral: Vec<u64> = match cfg.max_q {
                Some(m) => ck::prime_powers_up_to(m).into_iter().map(|(q, _, _)| q).collect(),
                None => DIHEDRAL_DEFAULT.to_vec(),
            };
            for q in dihedral {
                let p = as_prime_power(q).expect("prime power").0;
                out.push(one(move || groups::dihedral6_check(q, p)));
            }
            for p in (3..=cfg.q(31)).filter(|&p| is_prime(p)) {
                out.push(one(move || groups::trace_check(p)));
            }
        }
    }
    Ok(out)
}

/// Runs every job on the current rayon pool, keeping job order.
pub fn run(target: Target, cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let jobs = jobs(target, cfg)?;
    let chunks: Vec<Vec<CheckReport>> = jobs.par_iter().map(|j| j()).collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// [`run`] on a dedicated pool of `threads` workers (rayon's default when `None`).
pub fn run_with_threads(target: Target, cfg: &SuiteConfig, threads: Option<usize>) -> Result<Vec<CheckReport>> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?;
    pool.install(|| run(target, cfg))
}
