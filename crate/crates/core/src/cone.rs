//! Membership in the saturated tensor cone `Γ₂` and saturation factors.
//!
//! A triple `(λ, μ, ν)` is a member when `L(Nν) ⊂ L(Nλ) ⊗ L(Nμ)` for some
//! `N ≥ 1`. Membership reduces to `ν ∈ (P(λ) + μ) ∩ (P(μ) + λ)`, decided here
//! by dominance, and is cross-checked against the δ-maximal component shift.

use std::fmt;

use num_rational::Rational64;
use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::multiplicity::{Coefficient, Oracle};
use crate::tensor::{delta_max_component, representatives, TensorTriple};
use crate::weight::Weight;
use crate::weyl::WeylElement;

/// `γ ∈ P(Λ)`: `γ ∈ Λ + Q` and the dominant representative of `γ` lies below `Λ`.
pub fn weight_in_module(algebra: Algebra, lambda: &Weight, gamma: &Weight) -> Result<bool> {
    algebra.require_dominant(lambda)?;
    if lambda.level2() <= 0 {
        return Err(Error::LevelZero(lambda.format(algebra)));
    }
    if gamma.level2() != lambda.level2() {
        return Err(Error::LevelMismatch(format!(
            "{} has level {}, {} has level {}",
            gamma.format(algebra),
            crate::weight::fmt_rational(gamma.level()),
            lambda.format(algebra),
            crate::weight::fmt_rational(lambda.level())
        )));
    }
    if algebra.root_lattice_diff(lambda, gamma).is_none() {
        return Ok(false);
    }
    let (d, _) = algebra.dominant_rep(gamma)?;
    Ok(algebra.dominates(lambda, &d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    /// `λ(xᵢ) + μ(wxᵢ) − ν(wxᵢ) ≥ 0`
    FixLambda,
    /// `λ(wxᵢ) + μ(xᵢ) − ν(wxᵢ) ≥ 0`
    FixMu,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::FixLambda => "lambda(x_i)+mu(w x_i)-nu(w x_i)",
            Family::FixMu => "lambda(w x_i)+mu(x_i)-nu(w x_i)",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuditedInequality {
    pub w: WeylElement,
    pub i: u8,
    pub family: Family,
    pub value: Rational64,
}

/// Evaluates both inequality families for every `w` of length at most
/// `len_bound` and `i ∈ {0, 1}`. A negative value certifies non-membership;
/// W is infinite, so all-nonnegative output is only evidence.
pub fn inequality_audit(
    algebra: Algebra,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    len_bound: u32,
) -> Vec<AuditedInequality> {
    let mut out = Vec::new();
    for w in WeylElement::all_up_to(len_bound) {
        for i in 0..2u8 {
            let x = algebra.x(i as usize);
            let wx = algebra.act_on_cartan(&w, &x);
            let tail = mu.pair(&wx) - nu.pair(&wx);
            out.push(AuditedInequality {
                w,
                i,
                family: Family::FixLambda,
                value: lambda.pair(&x) + tail,
            });
            out.push(AuditedInequality {
                w,
                i,
                family: Family::FixMu,
                value: lambda.pair(&wx) + mu.pair(&x) - nu.pair(&wx),
            });
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Member,
    NonMember,
    /// `λ + μ − ν ∉ Q`.
    ParityFailure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeReport {
    pub algebra: Algebra,
    pub lambda: Weight,
    pub mu: Weight,
    pub nu: Weight,
    pub verdict: Verdict,
    pub n1: Option<i64>,
    pub n2: Option<i64>,
    pub n_tilde: Option<i64>,
    pub audit: Vec<AuditedInequality>,
}

impl ConeReport {
    pub fn is_member(&self) -> bool {
        self.verdict == Verdict::Member
    }

    /// The dominance verdict agrees with the sign of `ñ` (vacuous when `ñ` is
    /// unavailable or on parity failure).
    pub fn consistent(&self) -> bool {
        match (self.verdict, self.n_tilde) {
            (Verdict::ParityFailure, _) | (_, None) => true,
            (v, Some(n)) => (v == Verdict::Member) == (n >= 0),
        }
    }

    pub fn violations(&self) -> impl Iterator<Item = &AuditedInequality> {
        self.audit.iter().filter(|a| a.value < Rational64::from(0))
    }
}

fn require_factor(algebra: Algebra, w: &Weight) -> Result<()> {
    algebra.require_dominant(w)?;
    if w.level2() <= 0 {
        // includes the W-invariant weights mδ
        return Err(Error::LevelZero(w.format(algebra)));
    }
    Ok(())
}

/// Decides `(λ, μ, ν) ∈ Γ₂` and collects witnesses. `audit_len` bounds the
/// Weyl words used in the inequality audit.
pub fn cone_membership(
    algebra: Algebra,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    audit_len: u32,
) -> Result<ConeReport> {
    require_factor(algebra, lambda)?;
    require_factor(algebra, mu)?;
    algebra.require_dominant(nu)?;
    if nu.level2() != lambda.level2() + mu.level2() {
        return Err(Error::LevelMismatch(format!(
            "ν(c) must equal λ(c) + μ(c) for {}",
            nu.format(algebra)
        )));
    }
    let audit = inequality_audit(algebra, lambda, mu, nu, audit_len);
    let mut report = ConeReport {
        algebra,
        lambda: *lambda,
        mu: *mu,
        nu: *nu,
        verdict: Verdict::ParityFailure,
        n1: None,
        n2: None,
        n_tilde: None,
        audit,
    };
    if algebra.root_lattice_diff(&(*lambda + *mu), nu).is_none() {
        return Ok(report);
    }
    let member = weight_in_module(algebra, lambda, &(*nu - *mu))?
        && weight_in_module(algebra, mu, &(*nu - *lambda))?;
    report.verdict = if member {
        Verdict::Member
    } else {
        Verdict::NonMember
    };
    report.n1 = crate::delta_max::delta_max_shift(algebra, lambda, &(*nu - *mu))?;
    report.n2 = crate::delta_max::delta_max_shift(algebra, mu, &(*nu - *lambda))?;
    report.n_tilde = match delta_max_component(algebra, lambda, mu, nu) {
        Ok(n) => Some(n),
        Err(Error::NoDeltaMaximal { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(report)
}

/// Whether `L(d₀ν)` occurs in `L(d₀λ) ⊗ L(d₀μ)`, read off the computed
/// branching string. `depth` caps how far below the δ-maximal component the
/// string is expanded.
pub fn saturation_witness<C: Coefficient>(
    oracle: &Oracle<C>,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    d0: i64,
    depth: usize,
) -> Result<bool> {
    let algebra = oracle.algebra();
    if d0 < 1 {
        return Err(Error::Hypothesis(format!("saturation factor {d0} must be positive")));
    }
    let (l, m, n) = (*lambda * d0, *mu * d0, *nu * d0);
    let top = delta_max_component(algebra, &l, &m, &n)?;
    if top < 0 {
        return Ok(false);
    }
    if top > depth as i64 {
        return Err(Error::DepthInsufficient {
            needed: top,
            depth: depth as i64,
        });
    }
    let triple = TensorTriple::new(algebra, n, l, m)?;
    let series = triple.branching_series(oracle, 0)?;
    Ok(series.get(&0).is_some_and(|c| c.is_positive()))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SaturationCounterexample {
    pub lambda: Weight,
    pub mu: Weight,
    pub nu: Weight,
    pub d0: i64,
    pub n_tilde: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationReport {
    pub algebra: Algebra,
    pub level_bound: Rational64,
    pub d0_list: Vec<i64>,
    pub depth: usize,
    /// Number of (member triple, d₀) pairs checked.
    pub checked: usize,
    /// Targets `ν̄` skipped because no δ-maximal component exists.
    pub skipped: usize,
    /// Scans cut short because `L(d₀ν)` sat deeper than `depth`.
    pub beyond_depth: usize,
    pub counterexamples: Vec<SaturationCounterexample>,
}

/// Dominant weights of positive level at most `level_bound` with zero
/// δ-coordinate.
pub fn dominant_grid(algebra: Algebra, level_bound: Rational64) -> Vec<Weight> {
    let max2 = (level_bound * 2).floor().to_integer();
    let step = match algebra {
        Algebra::A11 => 2,
        Algebra::A22 => 1,
    };
    (1..=max2)
        .filter(|l2| l2 % step == 0)
        .flat_map(|l2| algebra.dominant_at_level(l2))
        .collect()
}

/// Checks every member triple `(λ, μ, ν̄ + eδ)` with `λ, μ` on the level grid
/// and `0 ≤ ñ ≤ coord_bound` against each `d₀`, stopping along each δ-line once
/// `L(d₀ν)` would sit more than `depth` below the δ-maximal component.
pub fn saturation_scan<C: Coefficient>(
    oracle: &Oracle<C>,
    level_bound: Rational64,
    coord_bound: i64,
    d0_list: &[i64],
    depth: usize,
) -> Result<SaturationReport> {
    let algebra = oracle.algebra();
    let grid = dominant_grid(algebra, level_bound);
    let mut jobs = Vec::new();
    for lambda in &grid {
        for mu in &grid {
            for bar in representatives(algebra, lambda, mu) {
                jobs.push((*lambda, *mu, bar));
            }
        }
    }
    type Outcome = (usize, usize, usize, Vec<SaturationCounterexample>);
    let results: Vec<Outcome> = jobs
        .par_iter()
        .map(|(lambda, mu, bar)| -> Result<Outcome> {
            let top = match delta_max_component(algebra, lambda, mu, bar) {
                Ok(n) => n,
                Err(Error::NoDeltaMaximal { .. }) => return Ok((0, 1, 0, Vec::new())),
                Err(e) => return Err(e),
            };
            let mut checked = 0;
            let mut beyond = 0;
            let mut bad = Vec::new();
            for &d0 in d0_list {
                for n_tilde in 0..=coord_bound {
                    let nu = bar.shift_delta(top - n_tilde);
                    match saturation_witness(oracle, lambda, mu, &nu, d0, depth) {
                        Ok(true) => {}
                        Ok(false) => bad.push(SaturationCounterexample {
                            lambda: *lambda,
                            mu: *mu,
                            nu,
                            d0,
                            n_tilde,
                        }),
                        Err(Error::DepthInsufficient { .. }) => {
                            // deeper ñ only move further down
                            beyond += 1;
                            break;
                        }
                        Err(e) => return Err(e),
                    }
                    checked += 1;
                }
            }
            Ok((checked, 0, beyond, bad))
        })
        .collect::<Result<_>>()?;
    let mut report = SaturationReport {
        algebra,
        level_bound,
        d0_list: d0_list.to_vec(),
        depth,
        checked: 0,
        skipped: 0,
        beyond_depth: 0,
        counterexamples: Vec::new(),
    };
    for (checked, skipped, beyond, bad) in results {
        report.checked += checked;
        report.skipped += skipped;
        report.beyond_depth += beyond;
        report.counterexamples.extend(bad);
    }
    report.counterexamples.sort();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    const A11: Algebra = Algebra::A11;

    fn l0() -> Weight {
        Weight::BASIC
    }

    #[test]
    fn weight_in_module_examples() {
        assert!(weight_in_module(A11, &l0(), &l0()).unwrap());
        assert!(!weight_in_module(A11, &l0(), &(l0() - Weight::ALPHA)).unwrap());
        assert!(weight_in_module(A11, &l0(), &(l0() - Weight::DELTA)).unwrap());
        assert!(matches!(
            weight_in_module(A11, &l0(), &(l0() * 2)),
            Err(Error::LevelMismatch(_))
        ));
    }

    #[test]
    fn membership_examples() {
        let r = cone_membership(A11, &l0(), &l0(), &(l0() * 2), 8).unwrap();
        assert_eq!(r.verdict, Verdict::Member);
        assert_eq!(r.n_tilde, Some(0));
        assert!(r.violations().next().is_none());
        let r = cone_membership(A11, &l0(), &l0(), &(l0() * 2 + Weight::ALPHA), 8).unwrap();
        assert_eq!(r.verdict, Verdict::NonMember);
        assert_eq!(r.n_tilde, Some(-1));
        assert!(r.violations().next().is_some());
        let r = cone_membership(A11, &l0(), &l0(), &(l0() * 2 - Weight::DELTA), 8).unwrap();
        assert!(r.is_member() && r.consistent());
        let odd = Weight::from_doubled(4, 1, 0);
        let r = cone_membership(A11, &l0(), &l0(), &odd, 2).unwrap();
        assert_eq!(r.verdict, Verdict::ParityFailure);
        assert!(matches!(
            cone_membership(A11, &Weight::DELTA, &l0(), &l0(), 2),
            Err(Error::LevelZero(_))
        ));
    }

    #[test]
    fn audit_ignores_central_shift() {
        let (l, m, n) = (A11.from_labels(1, 1), A11.from_labels(2, 0), A11.from_labels(1, 3));
        let base = inequality_audit(A11, &l, &m, &n, 6);
        for a in &base {
            let t = Rational64::new(3, 2);
            let x = A11.x(a.i as usize) + crate::weight::CartanElement::central().scale(t);
            let wx = A11.act_on_cartan(&a.w, &x);
            let v = match a.family {
                Family::FixLambda => l.pair(&x) + m.pair(&wx) - n.pair(&wx),
                Family::FixMu => l.pair(&wx) + m.pair(&x) - n.pair(&wx),
            };
            assert_eq!(v, a.value);
        }
    }

    #[test]
    fn saturation_examples() {
        let oracle = Oracle::<i64>::new(A11);
        let nu = l0() * 2 - Weight::DELTA;
        assert!(saturation_witness(&oracle, &l0(), &l0(), &nu, 2, 8).unwrap());
        assert!(saturation_witness(&oracle, &l0(), &l0(), &(l0() * 2), 2, 8).unwrap());
        assert!(!saturation_witness(&oracle, &l0(), &l0(), &nu, 1, 8).unwrap());
        assert!(matches!(
            saturation_witness(&oracle, &l0(), &l0(), &(l0() * 2).shift_delta(-5), 2, 8),
            Err(Error::DepthInsufficient { needed: 10, depth: 8 })
        ));
    }

    #[test]
    fn scan_finds_remark_counterexample() {
        let oracle = Oracle::<i64>::new(A11);
        let report = saturation_scan(&oracle, Rational64::from(1), 2, &[1], 4).unwrap();
        let expected = SaturationCounterexample {
            lambda: l0(),
            mu: l0(),
            nu: l0() * 2 - Weight::DELTA,
            d0: 1,
            n_tilde: 1,
        };
        assert!(report.counterexamples.contains(&expected));
    }
}
