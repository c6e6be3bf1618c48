//! Validated run parameters and the verification plan derived from them.

use std::fmt;

use minreal_core::GaussianRational;

use crate::report::{SuiteReport, VerifyReport};
use crate::suites::{self, SUITE_IDS};

pub const MAX_N: usize = 3;
pub const MAX_DEG: u32 = 8;
pub const DEFAULT_SEED: u64 = 20_170_601;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

pub fn check_n(n: usize) -> Result<usize, UsageError> {
    if (1..=MAX_N).contains(&n) {
        Ok(n)
    } else {
        Err(usage(format!("--n must be in 1..={MAX_N}, got {n}")))
    }
}

pub fn check_deg(d: u32) -> Result<u32, UsageError> {
    if d <= MAX_DEG {
        Ok(d)
    } else {
        Err(usage(format!(
            "degree caps are limited to {MAX_DEG}, got {d}"
        )))
    }
}

pub fn parse_scalar(flag: &str, s: &str) -> Result<GaussianRational, UsageError> {
    s.parse()
        .map_err(|_| usage(format!("{flag}: `{s}` is not a Gaussian rational")))
}

/// `a..b`, `a..=b` (same meaning) or a single `a`.
pub fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("`{s}` is not a degree range"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let a = num(s)?;
            (a, a)
        }
    };
    if lo > hi {
        return Err(format!("empty degree range `{s}`"));
    }
    Ok((lo, hi))
}

/// Parameters for all ten suites.
#[derive(Clone, Debug)]
pub struct Plan {
    pub homomorphism_ns: Vec<usize>,
    pub weyl_ns: Vec<usize>,
    pub weyl_symbol_deg: u32,
    pub weyl_u_deg: u32,
    pub weyl_alpha_deg: u32,
    pub star_n: usize,
    pub seed: u64,
    pub star_count: usize,
    pub star_deg: u32,
    pub bridge_ns: Vec<usize>,
    pub bridge_ms: Vec<u32>,
    pub h1: Vec<(usize, u32, u32)>,
    pub deformation_ns: Vec<usize>,
    pub deformation_order: usize,
    pub derived_order: usize,
    pub gram_ns: Vec<usize>,
    pub gram_lambdas: Vec<&'static str>,
    pub gram_pmax: u32,
    pub invariant_ns: Vec<usize>,
    pub invariant_ms: Vec<u32>,
    pub invariant_controls: Vec<&'static str>,
    pub invariant_cap: u32,
    pub su2_mmax: Option<u32>,
    pub heisenberg_ns: Vec<usize>,
}

/// Default `H^1` degree window for rank `n`.
pub fn default_h1_range(n: usize) -> (u32, u32) {
    match n {
        1 => (3, 6),
        2 => (3, 4),
        _ => (2, 3),
    }
}

impl Plan {
    /// The full acceptance ranges.
    pub fn acceptance(seed: u64) -> Self {
        Self {
            homomorphism_ns: vec![1, 2, 3],
            weyl_ns: vec![1, 2],
            weyl_symbol_deg: 5,
            weyl_u_deg: 3,
            weyl_alpha_deg: 3,
            star_n: 2,
            seed,
            star_count: 100,
            star_deg: 5,
            bridge_ns: vec![1, 2, 3],
            bridge_ms: (0..=3).collect(),
            h1: vec![(1, 3, 6), (2, 3, 4)],
            deformation_ns: vec![1, 2],
            deformation_order: 5,
            derived_order: 4,
            gram_ns: vec![1, 2],
            gram_lambdas: vec!["2", "3", "7/2"],
            gram_pmax: 5,
            invariant_ns: vec![1, 2],
            invariant_ms: (0..=4).collect(),
            invariant_controls: vec!["1/2", "5/3", "i"],
            invariant_cap: 6,
            su2_mmax: Some(5),
            heisenberg_ns: vec![2, 3],
        }
    }

    /// The acceptance plan restricted to rank `n`. Suites whose ranges do
    /// not contain `n` end up with nothing to run.
    pub fn for_n(n: usize, deg: Option<(u32, u32)>, seed: u64) -> Self {
        let mut p = Self::acceptance(seed);
        let only = |v: &[usize]| v.iter().copied().filter(|&k| k == n).collect::<Vec<_>>();
        p.homomorphism_ns = vec![n];
        p.weyl_ns = only(&p.weyl_ns);
        p.star_n = n;
        p.bridge_ns = vec![n];
        let (lo, hi) = deg.unwrap_or_else(|| default_h1_range(n));
        p.h1 = vec![(n, lo, hi)];
        p.deformation_ns = vec![n];
        p.gram_ns = only(&p.gram_ns);
        p.invariant_ns = only(&p.invariant_ns);
        if n != 1 {
            p.su2_mmax = None;
        }
        p.heisenberg_ns = only(&p.heisenberg_ns);
        p
    }

    pub fn applies(&self, id: &str) -> bool {
        match id {
            "tilde-homomorphism" => !self.homomorphism_ns.is_empty(),
            "weyl-multiplicativity" => !self.weyl_ns.is_empty(),
            "star-algebra" => self.star_count > 0,
            "bridge" => !self.bridge_ns.is_empty(),
            "h1" => !self.h1.is_empty(),
            "deformation" => !self.deformation_ns.is_empty(),
            "gram" => !self.gram_ns.is_empty(),
            "invariant-subspace" => !self.invariant_ns.is_empty(),
            "su2" => self.su2_mmax.is_some(),
            "heisenberg" => !self.heisenberg_ns.is_empty(),
            _ => false,
        }
    }

    pub fn run_suite(&self, id: &str) -> SuiteReport {
        match id {
            "tilde-homomorphism" => suites::tilde_homomorphism(&self.homomorphism_ns),
            "weyl-multiplicativity" => suites::weyl_multiplicativity(
                &self.weyl_ns,
                self.weyl_symbol_deg,
                self.weyl_u_deg,
                self.weyl_alpha_deg,
            ),
            "star-algebra" => {
                suites::star_algebra(self.star_n, self.seed, self.star_count, self.star_deg)
            }
            "bridge" => suites::bridge(&self.bridge_ns, &self.bridge_ms),
            "h1" => suites::h1(&self.h1),
            "deformation" => suites::deformation(
                &self.deformation_ns,
                self.deformation_order,
                self.derived_order,
            ),
            "gram" => suites::gram(&self.gram_ns, &self.gram_lambdas, self.gram_pmax),
            "invariant-subspace" => suites::invariant_subspace(
                &self.invariant_ns,
                &self.invariant_ms,
                &self.invariant_controls,
                self.invariant_cap,
            ),
            "su2" => suites::su2(self.su2_mmax.unwrap_or(0)),
            "heisenberg" => suites::heisenberg(&self.heisenberg_ns),
            other => {
                let mut r = SuiteReport::new(other, "unknown suite");
                r.check("known id", false, other);
                r
            }
        }
    }

    /// Resolves `all` or a single id to the suites to run.
    pub fn select(&self, suite: &str) -> Result<Vec<&'static str>, UsageError> {
        if suite == "all" {
            return Ok(SUITE_IDS
                .iter()
                .copied()
                .filter(|id| self.applies(id))
                .collect());
        }
        let id = SUITE_IDS
            .iter()
            .copied()
            .find(|&id| id == suite)
            .ok_or_else(|| {
                usage(format!(
                    "unknown suite `{suite}`; expected one of: all, {}",
                    SUITE_IDS.join(", ")
                ))
            })?;
        if !self.applies(id) {
            return Err(usage(format!("suite `{id}` does not apply at this rank")));
        }
        Ok(vec![id])
    }

    /// Runs the selected suites on separate threads; the report keeps the
    /// selection order.
    pub fn run(&self, n: usize, ids: &[&str]) -> VerifyReport {
        let suites = std::thread::scope(|s| {
            let handles: Vec<_> = ids
                .iter()
                .map(|id| s.spawn(move || self.run_suite(id)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("suite thread panicked"))
                .collect()
        });
        VerifyReport::new(n, self.seed, suites)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..6"), Ok((3, 6)));
        assert_eq!(parse_range("3..=6"), Ok((3, 6)));
        assert_eq!(parse_range("4"), Ok((4, 4)));
        assert!(parse_range("6..3").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn limits() {
        assert!(check_n(0).is_err());
        assert!(check_n(4).is_err());
        assert!(check_deg(9).is_err());
        assert!(parse_scalar("--lambda", "1/2+i").is_ok());
        assert!(parse_scalar("--lambda", "1/0").is_err());
    }

    #[test]
    fn rank_restriction() {
        let p = Plan::for_n(1, None, 1);
        assert!(!p.applies("heisenberg"));
        assert!(p.applies("su2"));
        assert!(p.select("heisenberg").is_err());
        let p = Plan::for_n(3, None, 1);
        assert!(!p.applies("weyl-multiplicativity"));
        assert!(p.applies("heisenberg"));
        assert!(p.select("nope").is_err());
    }
}
