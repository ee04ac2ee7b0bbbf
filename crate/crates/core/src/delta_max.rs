//! δ-maximal weights: weights `λ` of `L(Λ)` with `λ + δ` not a weight.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::multiplicity::{Coefficient, Oracle};
use crate::weight::Weight;

/// Dominant δ-maximal weights of `L(Λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaMaxSet {
    pub highest: Weight,
    pub members: Vec<Weight>,
}

impl DeltaMaxSet {
    /// The member congruent to `d` modulo `ℤδ`, with the shift taking `d` to it.
    pub fn shift_for(&self, d: &Weight) -> Option<i64> {
        self.members.iter().find_map(|m| m.delta_offset(d))
    }
}

fn check_positive_dominant(algebra: Algebra, lambda: &Weight) -> Result<(i64, i64)> {
    let labels = algebra
        .labels(lambda)
        .filter(|&(a, b)| a >= 0 && b >= 0)
        .ok_or_else(|| Error::NotDominant(lambda.format(algebra)))?;
    if lambda.level2() == 0 {
        return Err(Error::LevelZero(lambda.format(algebra)));
    }
    Ok(labels)
}

/// The finite set of dominant δ-maximal weights of `L(Λ)`, for `Λ` dominant
/// integral of positive level.
pub fn delta_max_dominant_set(algebra: Algebra, lambda: &Weight) -> Result<DeltaMaxSet> {
    let (l0, l1) = check_positive_dominant(algebra, lambda)?;
    let alpha = Weight::ALPHA;
    let a0 = algebra.simple_root(0);
    let a1 = algebra.simple_root(1);
    let mut members = Vec::new();
    match algebra {
        Algebra::A11 => {
            // Λ − kα for k ≤ j/2, and Λ − l(δ − α) for l ≤ (m − j)/2
            for k in 0..=l1 / 2 {
                members.push(*lambda - alpha * k);
            }
            for l in 1..=l0 / 2 {
                members.push(*lambda - a0 * l);
            }
        }
        Algebra::A22 => {
            // Λ − jα, Λ + k(2α − δ), Λ + α − δ + l(2α − δ), kept when dominant
            for j in 0..=l1 / 2 {
                members.push(*lambda - alpha * j);
            }
            for k in 1..=l0 / 2 {
                members.push(*lambda - a0 * k);
            }
            for l in 0..=l0.max(1) {
                members.push(*lambda - a0 * (l + 1) - a1);
            }
        }
    }
    members.retain(|m| algebra.is_dominant_integral(m));
    let mut seen = std::collections::HashSet::new();
    members.retain(|m| seen.insert(*m));
    Ok(DeltaMaxSet {
        highest: *lambda,
        members,
    })
}

/// `S(Λ) ∩ P₊`, where `S(Λ)` consists of `Λ − n₀α₀ − n₁α₁` with some
/// coordinate strictly below the matching coefficient of δ. Equal to the
/// dominant δ-maximal set for positive level; used as an independent check.
pub fn dominant_delta_max_by_coefficients(algebra: Algebra, lambda: &Weight) -> Result<Vec<Weight>> {
    let (l0, l1) = check_positive_dominant(algebra, lambda)?;
    let (h0, h1) = algebra.delta_coords();
    let bound = 4 * (l0 + l1) + 8;
    let mut out = Vec::new();
    for n0 in 0..=bound {
        for n1 in 0..=bound {
            if n0 >= h0 && n1 >= h1 {
                continue;
            }
            let mu = *lambda - algebra.from_simple_coords(n0, n1);
            if algebra.is_dominant_integral(&mu) {
                out.push(mu);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The unique `n` with `Λ + kα + nδ` δ-maximal in `L(Λ)`, for A₁⁽¹⁾.
/// The answer is relative to `Λ`'s own δ-coordinate.
pub fn n_k_closed_form(algebra: Algebra, lambda: &Weight, k: i64) -> Result<i64> {
    algebra.require(Algebra::A11)?;
    let (l0, j) = check_positive_dominant(algebra, lambda)?;
    let m = l0 + j;
    let q = k.div_euclid(m);
    let r = k.rem_euclid(m);
    let n_r = if r <= m - j { -r } else { m - j - 2 * r };
    Ok(n_r - q * (k + r + j))
}

/// The unique `n` with `γ + nδ` δ-maximal in `L(Λ)`, found by moving `γ` to
/// the fundamental chamber and matching against the dominant δ-maximal set.
/// `None` when no δ-shift of `γ` is a weight.
pub fn delta_max_shift(algebra: Algebra, lambda: &Weight, gamma: &Weight) -> Result<Option<i64>> {
    check_positive_dominant(algebra, lambda)?;
    if gamma.level2() != lambda.level2() {
        return Err(Error::LevelMismatch(format!(
            "{} and {} have different levels",
            gamma.format(algebra),
            lambda.format(algebra)
        )));
    }
    if algebra.root_lattice_diff(lambda, gamma).is_none() {
        return Err(Error::Hypothesis(format!(
            "{} is not in {} + Q",
            gamma.format(algebra),
            lambda.format(algebra)
        )));
    }
    let set = delta_max_dominant_set(algebra, lambda)?;
    let (d, _) = algebra.dominant_rep(gamma)?;
    Ok(set.shift_for(&d))
}

/// Brute-force check that `γ ∈ P(Λ)` and `γ + δ ∉ P(Λ)` with the Freudenthal
/// engine, refusing weights deeper than height `depth`.
pub fn is_delta_maximal<C: Coefficient>(
    oracle: &Oracle<C>,
    lambda: &Weight,
    gamma: &Weight,
    depth: i64,
) -> Result<bool> {
    let here = oracle.weight_multiplicity(lambda, gamma, depth)?;
    if here.is_zero() {
        return Ok(false);
    }
    let above = oracle.weight_multiplicity(lambda, &gamma.shift_delta(1), depth)?;
    Ok(above.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    const A11: Algebra = Algebra::A11;
    const A22: Algebra = Algebra::A22;

    #[test]
    fn dominant_set_examples() {
        let l0 = Weight::BASIC;
        let set = delta_max_dominant_set(A11, &(l0 * 2)).unwrap();
        assert_eq!(
            set.members,
            vec![l0 * 2, l0 * 2 + Weight::ALPHA - Weight::DELTA]
        );
        assert_eq!(delta_max_dominant_set(A11, &l0).unwrap().members, vec![l0]);
        let set = delta_max_dominant_set(A22, &l0).unwrap();
        assert_eq!(set.members, vec![l0, l0 + Weight::ALPHA - Weight::DELTA]);
        assert!(matches!(
            delta_max_dominant_set(A11, &Weight::DELTA),
            Err(Error::LevelZero(_))
        ));
    }

    #[test]
    fn families_match_coefficient_criterion() {
        for alg in [A11, A22] {
            for l0 in 0..6 {
                for l1 in 0..6 {
                    if l0 + l1 == 0 {
                        continue;
                    }
                    let lam = alg.from_labels(l0, l1);
                    let mut a = delta_max_dominant_set(alg, &lam).unwrap().members;
                    a.sort();
                    let b = dominant_delta_max_by_coefficients(alg, &lam).unwrap();
                    assert_eq!(a, b, "{alg} labels ({l0}, {l1})");
                }
            }
        }
    }

    #[test]
    fn n_k_examples() {
        let lam = Weight::BASIC * 2;
        assert_eq!(n_k_closed_form(A11, &lam, 0).unwrap(), 0);
        assert_eq!(n_k_closed_form(A11, &lam, 1).unwrap(), -1);
        assert_eq!(n_k_closed_form(A11, &lam, 2).unwrap(), -2);
        assert_eq!(n_k_closed_form(A11, &lam, -1).unwrap(), -1);
        assert!(n_k_closed_form(A22, &lam, 0).is_err());
    }

    #[test]
    fn shift_examples() {
        let l0 = Weight::BASIC;
        assert_eq!(delta_max_shift(A11, &l0, &l0).unwrap(), Some(0));
        assert_eq!(delta_max_shift(A11, &l0, &(l0 - Weight::ALPHA)).unwrap(), Some(-1));
        assert_eq!(
            delta_max_shift(A11, &(l0 * 2), &(l0 * 2 + Weight::ALPHA)).unwrap(),
            Some(-1)
        );
        assert!(delta_max_shift(A11, &l0, &(l0 * 2)).is_err());
        assert!(delta_max_shift(A11, &l0, &Weight::from_doubled(2, 1, 0)).is_err());
    }

    #[test]
    fn shift_agrees_with_closed_form() {
        for m in 1..=4 {
            for j in 0..=m {
                let lam = A11.from_labels(m - j, j).shift_delta(2);
                for k in -15..=15 {
                    let gamma = lam + Weight::ALPHA * k;
                    let n = delta_max_shift(A11, &lam, &gamma).unwrap();
                    assert_eq!(n, Some(n_k_closed_form(A11, &lam, k).unwrap()), "m={m} j={j} k={k}");
                }
            }
        }
    }

    #[test]
    fn is_delta_maximal_examples() {
        let oracle = Oracle::<i64>::new(A11);
        let l0 = Weight::BASIC;
        assert!(is_delta_maximal(&oracle, &l0, &l0, 4).unwrap());
        assert!(!is_delta_maximal(&oracle, &l0, &l0.shift_delta(-1), 4).unwrap());
        let gamma = l0 * 2 + Weight::ALPHA - Weight::DELTA;
        assert!(is_delta_maximal(&oracle, &(l0 * 2), &gamma, 4).unwrap());
    }
}
