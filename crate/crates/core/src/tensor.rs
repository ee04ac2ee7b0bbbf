//! Tensor product decomposition through T-sets.
//!
//! For a target `Λ̄` (the "bar" weight) the T-set collects the δ-maximal
//! weights `λ` of `L(Λ′)` for which `λ + Λ″ + ρ` is W-conjugate to `Λ̄ + ρ`
//! up to a multiple `S·δ`. The branching string of `L(Λ̄)` in
//! `L(Λ′) ⊗ L(Λ″)` is then the alternating sum of the δ-strings of `L(Λ′)`
//! through these `λ`, shifted by `S`.

use std::collections::{BTreeMap, HashMap};

use num_rational::Rational64;
use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::delta_max::{delta_max_shift, n_k_closed_form};
use crate::error::{Error, Result};
use crate::multiplicity::{coeff, Coefficient, DeltaString, Oracle, Region};
use crate::weight::Weight;
use crate::weyl::WeylElement;

/// One element of a T-set. `k` is the α-offset of `λ` from `Λ′`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TSetEntry {
    pub k: i64,
    pub lambda: Weight,
    pub v: WeylElement,
    pub s: i64,
    pub sign: i8,
}

/// A target `Λ̄` together with the two tensor factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorTriple {
    pub algebra: Algebra,
    pub bar: Weight,
    pub lhs: Weight,
    pub rhs: Weight,
}

impl TensorTriple {
    pub fn new(algebra: Algebra, bar: Weight, lhs: Weight, rhs: Weight) -> Result<Self> {
        for w in [&bar, &lhs, &rhs] {
            algebra.require_dominant(w)?;
        }
        Ok(TensorTriple {
            algebra,
            bar,
            lhs,
            rhs,
        })
    }

    /// `Λ̄(c) = Λ′(c) + Λ″(c)` and `Λ′ + Λ″ − Λ̄ ∈ Q`.
    pub fn admissible(&self) -> bool {
        self.bar.level2() == self.lhs.level2() + self.rhs.level2()
            && self
                .algebra
                .root_lattice_diff(&(self.lhs + self.rhs), &self.bar)
                .is_some()
    }

    /// Same target with the factors exchanged.
    pub fn swapped(&self) -> Self {
        TensorTriple {
            lhs: self.rhs,
            rhs: self.lhs,
            ..*self
        }
    }

    fn norm4(&self, w: &Weight) -> i128 {
        self.algebra.form4(w, w) as i128
    }

    /// Numerator `U(k)` of the upper bound `S ≤ U(k)/D` for entries over
    /// `Λ′ + kα`, with `D` from [`Self::bound_denominator`]. Follows from
    /// `|λ|² ≤ |Λ′|²` and the norm identity for `S`.
    fn bound_numerator(&self, k: i64) -> i128 {
        let rho = self.algebra.rho();
        let gamma = self.lhs + Weight::ALPHA * k;
        let m2 = self.lhs.level2() as i128;
        let l2 = (self.bar + rho).level2() as i128;
        m2 * (self.norm4(&(gamma + self.rhs + rho)) - self.norm4(&(self.bar + rho)))
            + l2 * (self.norm4(&self.lhs) - self.norm4(&gamma))
    }

    fn bound_denominator(&self) -> i128 {
        let m2 = self.lhs.level2() as i128;
        let l2 = (self.bar + self.algebra.rho()).level2() as i128;
        4 * self.algebra.form_delta() as i128 * l2 * m2
    }

    /// Integer maximiser region of the concave bound: `(k_floor, U(k_best))`.
    fn bound_peak(&self) -> (i64, i128) {
        let c = self.bound_numerator(0);
        let up = self.bound_numerator(1);
        let down = self.bound_numerator(-1);
        let two_a = up + down - 2 * c;
        let b2 = up - down; // 2B
        // vertex −B/(2A) = −b2/(2·two_a)
        let (mut num, mut den) = (-b2, 2 * two_a);
        if den < 0 {
            num = -num;
            den = -den;
        }
        let k0 = num.div_euclid(den) as i64;
        [k0 - 1, k0, k0 + 1]
            .into_iter()
            .map(|k| (k, self.bound_numerator(k)))
            .max_by_key(|&(_, u)| u)
            .expect("nonempty")
    }

    /// Upper bound on every `S` in the T-set.
    pub fn s_upper_bound(&self) -> i64 {
        if self.lhs.level2() == 0 {
            return self.entry(0).ok().flatten().map_or(0, |e| e.s);
        }
        let (_, peak) = self.bound_peak();
        peak.div_euclid(self.bound_denominator()) as i64
    }

    /// Range of `k` containing every entry with `S ≥ cutoff`.
    pub fn window(&self, cutoff: i64) -> Option<(i64, i64)> {
        if self.lhs.level2() == 0 {
            return Some((0, 0));
        }
        let target = cutoff as i128 * self.bound_denominator();
        let (k_best, peak) = self.bound_peak();
        if peak < target {
            return None;
        }
        let (mut lo, mut hi) = (k_best, k_best);
        while self.bound_numerator(lo - 1) >= target {
            lo -= 1;
        }
        while self.bound_numerator(hi + 1) >= target {
            hi += 1;
        }
        let margin = (self.bar + self.algebra.rho()).level2() + 2;
        Some((lo - margin, hi + margin))
    }

    /// The T-set entry over `Λ′ + kα`, if there is one.
    pub fn entry(&self, k: i64) -> Result<Option<TSetEntry>> {
        let alg = self.algebra;
        let lambda = if self.lhs.level2() == 0 {
            if k != 0 {
                return Ok(None);
            }
            self.lhs
        } else {
            let gamma = self.lhs + Weight::ALPHA * k;
            match delta_max_shift(alg, &self.lhs, &gamma)? {
                Some(n) => gamma.shift_delta(n),
                None => return Ok(None),
            }
        };
        let rho = alg.rho();
        let (d, w) = alg.dominant_rep(&(lambda + self.rhs + rho))?;
        if !alg.is_regular_dominant(&d) {
            // fixed by a reflection: the alternating sum cancels
            return Ok(None);
        }
        let Some(s) = d.delta_offset(&(self.bar + rho)) else {
            return Ok(None);
        };
        let v = w.inverse();
        Ok(Some(TSetEntry {
            k,
            lambda,
            v,
            s,
            sign: v.sign(),
        }))
    }

    /// All entries with `S ≥ cutoff`, ordered by `k`.
    pub fn t_set(&self, cutoff: i64) -> Result<Vec<TSetEntry>> {
        if !self.admissible() {
            return Ok(Vec::new());
        }
        let Some((lo, hi)) = self.window(cutoff) else {
            return Ok(Vec::new());
        };
        let mut out = Vec::new();
        for k in lo..=hi {
            if let Some(e) = self.entry(k)? {
                if e.s >= cutoff {
                    debug_assert!(
                        self.lhs.level2() == 0
                            || e.s as i128 * self.bound_denominator() <= self.bound_numerator(k)
                    );
                    out.push(e);
                }
            }
        }
        Ok(out)
    }

    /// Largest `S` over entries of the given sign, with the `k` attaining it.
    pub fn max_s(&self, sign: i8) -> Result<Option<(i64, Vec<i64>)>> {
        if !self.admissible() {
            return Ok(None);
        }
        let top = self.s_upper_bound();
        let mut step = 4;
        let mut cutoff = top - step;
        while top - cutoff <= 1 << 16 {
            let entries: Vec<_> = self
                .t_set(cutoff)?
                .into_iter()
                .filter(|e| e.sign == sign)
                .collect();
            if let Some(max) = entries.iter().map(|e| e.s).max() {
                let ks = entries.iter().filter(|e| e.s == max).map(|e| e.k).collect();
                return Ok(Some((max, ks)));
            }
            step *= 2;
            cutoff = top - step;
        }
        Ok(None)
    }

    /// Exact branching coefficients at every exponent `≥ floor` (relative to
    /// `Λ̄`), zeros dropped.
    pub fn branching_series<C: Coefficient>(
        &self,
        oracle: &Oracle<C>,
        floor: i64,
    ) -> Result<BTreeMap<i64, C>> {
        self.algebra.require(oracle.algebra())?;
        let mut series: BTreeMap<i64, C> = BTreeMap::new();
        let mut lines: HashMap<Weight, Vec<C>> = HashMap::new();
        for entry in self.t_set(floor)? {
            let depth = (entry.s - floor) as usize;
            let (d, _) = self.algebra.dominant_rep(&entry.lambda)?;
            let line = match lines.get(&d) {
                Some(line) if line.len() > depth => line,
                _ => {
                    let line = oracle.delta_line(&self.lhs, &d, depth)?;
                    lines.insert(d, line);
                    &lines[&d]
                }
            };
            let sign = coeff::<C>(entry.sign as i64);
            for (j, c) in line.iter().take(depth + 1).enumerate() {
                if c.is_zero() {
                    continue;
                }
                let slot = series.entry(entry.s - j as i64).or_insert_with(C::zero);
                *slot = slot.clone() + sign.clone() * c.clone();
            }
        }
        series.retain(|_, v| !v.is_zero());
        Ok(series)
    }

    /// Branching string of `L(Λ̄ + top·δ)`, `depth + 1` coefficients from the top.
    pub fn branching_string<C: Coefficient>(
        &self,
        oracle: &Oracle<C>,
        depth: usize,
    ) -> Result<DeltaString<C>> {
        if !self.admissible() {
            return Ok(DeltaString::empty(self.bar));
        }
        let d = depth as i64;
        let ub = self.s_upper_bound();
        let limit = ub - (8 * (d + 1) + 64);
        let mut floor = ub - d;
        loop {
            let series = self.branching_series(oracle, floor)?;
            match series.keys().next_back().copied() {
                Some(top) if top - d >= floor => {
                    return string_from_series(self.bar, &series, top, depth);
                }
                Some(top) => floor = top - d,
                None if floor <= limit => return Err(Error::NoComponent(ub - floor)),
                None => floor -= d + 1,
            }
        }
    }
}

fn string_from_series<C: Coefficient>(
    base: Weight,
    series: &BTreeMap<i64, C>,
    top: i64,
    depth: usize,
) -> Result<DeltaString<C>> {
    let coeffs: Vec<C> = (0..=depth as i64)
        .map(|k| series.get(&(top - k)).cloned().unwrap_or_else(C::zero))
        .collect();
    if let Some((k, v)) = coeffs.iter().enumerate().find(|(_, v)| v.is_negative()) {
        return Err(Error::NegativeMultiplicity {
            offset: k as i64,
            value: v.to_string(),
        });
    }
    Ok(DeltaString { base, top, coeffs })
}

/// The T-set of `(Λ̄; Λ′, Λ″)` down to `S ≥ cutoff`.
pub fn compute_t_set(
    algebra: Algebra,
    bar: &Weight,
    lhs: &Weight,
    rhs: &Weight,
    cutoff: i64,
) -> Result<Vec<TSetEntry>> {
    TensorTriple::new(algebra, *bar, *lhs, *rhs)?.t_set(cutoff)
}

/// Branching string of `L(Λ̄)` in `L(Λ′) ⊗ L(Λ″)`.
pub fn branching_string<C: Coefficient>(
    oracle: &Oracle<C>,
    bar: &Weight,
    lhs: &Weight,
    rhs: &Weight,
    depth: usize,
) -> Result<DeltaString<C>> {
    TensorTriple::new(oracle.algebra(), *bar, *lhs, *rhs)?.branching_string(oracle, depth)
}

/// A₁⁽¹⁾ data of a triple: `(m, j)` for each weight.
fn a1_data(triple: &TensorTriple) -> Result<[(i64, i64); 3]> {
    triple.algebra.require(Algebra::A11)?;
    let get = |w: &Weight| {
        let (l0, l1) = triple.algebra.labels(w).expect("dominant integral");
        (l0 + l1, l1)
    };
    Ok([get(&triple.bar), get(&triple.lhs), get(&triple.rhs)])
}

/// T-set entry over `Λ′ + kα` from the explicit A₁⁽¹⁾ formulas: with
/// `M = m + 2`, `J = ½(j − j′ − j″)` and `K₀ = −½(j + j′ + j″) − 1`, entries sit
/// at `k ≡ J` (translation, `ε = +1`) and `k ≡ K₀` (reflected translation,
/// `ε = −1`) modulo `M`, with `S = n_k + (k − J)(k − K₀)/M`.
pub fn closed_form_vs(triple: &TensorTriple, k: i64) -> Result<TSetEntry> {
    let [(m, j), (m1, j1), (_, j2)] = a1_data(triple)?;
    if m1 == 0 {
        return Err(Error::LevelZero(triple.lhs.format(triple.algebra)));
    }
    let offset = triple
        .algebra
        .root_lattice_diff(&(triple.lhs + triple.rhs), &triple.bar)
        .filter(|_| triple.admissible())
        .ok_or_else(|| Error::Hypothesis("Λ′ + Λ″ − Λ̄ is not in Q".into()))?;
    let big_m = m + 2;
    let jj = (j - j1 - j2) / 2;
    let k0 = -(j + j1 + j2) / 2 - 1;
    let v = if (k - jj).rem_euclid(big_m) == 0 {
        WeylElement::translation_a1((k - jj) / big_m)
    } else if (k - k0).rem_euclid(big_m) == 0 {
        WeylElement::generator(1) * WeylElement::translation_a1(-(k - k0) / big_m)
    } else {
        return Err(Error::ResidueClass { k, modulus: big_m });
    };
    let n_k = n_k_closed_form(triple.algebra, &triple.lhs, k)?;
    let lambda = (triple.lhs + Weight::ALPHA * k).shift_delta(n_k);
    let s = n_k + (k - jj) * (k - k0) / big_m + offset.1;
    Ok(TSetEntry {
        k,
        lambda,
        v,
        s,
        sign: v.sign(),
    })
}

/// One irreducible family `L(Λ̄ + e·δ)` of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component<C = i64> {
    /// `Λ̄ + top·δ`, the δ-maximal member of the family.
    pub highest: Weight,
    pub string: DeltaString<C>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorDecomposition<C = i64> {
    pub algebra: Algebra,
    pub lhs: Weight,
    pub rhs: Weight,
    pub depth: usize,
    pub components: Vec<Component<C>>,
}

impl<C: Coefficient> TensorDecomposition<C> {
    /// Multiplicity of `L(Λ)`, if `Λ` lies within the computed depth.
    pub fn multiplicity_of(&self, lambda: &Weight) -> Option<C> {
        let floor = -(self.depth as i64);
        self.components.iter().find_map(|c| {
            let e = lambda.delta_offset(&c.string.base)?;
            (e >= floor).then(|| c.string.at_exponent(e))
        })
    }
}

/// Admissible targets `Λ̄` for `L(Λ′) ⊗ L(Λ″)`, with δ-coordinate
/// `Λ′(d) + Λ″(d)`.
pub fn representatives(algebra: Algebra, lhs: &Weight, rhs: &Weight) -> Vec<Weight> {
    let sum = *lhs + *rhs;
    algebra
        .dominant_at_level(sum.level2())
        .into_iter()
        .map(|w| w.with_delta2(sum.delta2()))
        .filter(|w| algebra.root_lattice_diff(&sum, w).is_some())
        .collect()
}

/// All components `L(Λ̄ + eδ)` of `L(Λ′) ⊗ L(Λ″)` with `e ≥ −depth`, where
/// `Λ̄` has δ-coordinate `Λ′(d) + Λ″(d)`.
pub fn decompose_tensor<C: Coefficient>(
    oracle: &Oracle<C>,
    lhs: &Weight,
    rhs: &Weight,
    depth: usize,
) -> Result<TensorDecomposition<C>> {
    let algebra = oracle.algebra();
    algebra.require_dominant(lhs)?;
    algebra.require_dominant(rhs)?;
    let floor = -(depth as i64);
    let bars = representatives(algebra, lhs, rhs);
    let found: Vec<Option<Component<C>>> = bars
        .par_iter()
        .map(|bar| {
            let triple = TensorTriple::new(algebra, *bar, *lhs, *rhs)?;
            let series = triple.branching_series(oracle, floor)?;
            let Some(top) = series.keys().next_back().copied() else {
                return Ok(None);
            };
            let string = string_from_series(*bar, &series, top, (top - floor) as usize)?;
            Ok(Some(Component {
                highest: bar.shift_delta(top),
                string,
            }))
        })
        .collect::<Result<_>>()?;
    let mut components: Vec<_> = found.into_iter().flatten().collect();
    components.sort_by_key(|c| c.string.base);
    Ok(TensorDecomposition {
        algebra,
        lhs: *lhs,
        rhs: *rhs,
        depth,
        components,
    })
}

/// Rebuilds the character of `L(Λ′) ⊗ L(Λ″)` from its decomposition and
/// compares it with the direct product of characters at every weight of
/// δ-depth at most `q` below `Λ′ + Λ″`. Returns the mismatching weights.
pub fn reassembly_mismatches<C: Coefficient>(
    oracle: &Oracle<C>,
    lhs: &Weight,
    rhs: &Weight,
    q: usize,
) -> Result<Vec<Weight>> {
    let decomposition = decompose_tensor(oracle, lhs, rhs, q)?;
    reassembly_mismatches_of(oracle, &decomposition, q)
}

/// As [`reassembly_mismatches`], for a given decomposition.
pub fn reassembly_mismatches_of<C: Coefficient>(
    oracle: &Oracle<C>,
    decomposition: &TensorDecomposition<C>,
    q: usize,
) -> Result<Vec<Weight>> {
    let algebra = oracle.algebra();
    let (lhs, rhs) = (&decomposition.lhs, &decomposition.rhs);
    let sum = *lhs + *rhs;
    let labels = algebra
        .labels(&sum)
        .ok_or_else(|| Error::NotDominant(sum.format(algebra)))?;
    let region = Region::delta_depth(algebra, labels, q as i64);
    let a = oracle.character_on(lhs, region.clone())?;
    let b = oracle.character_on(rhs, region.clone())?;
    let product = a.product(&b)?;
    let mut mismatches = Vec::new();
    for (n0, n1) in region.cells() {
        let mu = sum - algebra.from_simple_coords(n0, n1);
        let expected = product.get(n0, n1).cloned().expect("region covered");
        let mut got = C::zero();
        for comp in &decomposition.components {
            for (k, c) in comp.string.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let top = comp.string.weight_at(k);
                got = got + c.clone() * oracle.multiplicity(&top, &mu)?;
            }
        }
        if got != expected {
            mismatches.push(mu);
        }
    }
    Ok(mismatches)
}

/// The shift `n = min(n₁, n₂)` making `L(Λ̄ + nδ)` the δ-maximal component
/// through `Λ̄`.
pub fn delta_max_component(algebra: Algebra, lhs: &Weight, rhs: &Weight, bar: &Weight) -> Result<i64> {
    for w in [lhs, rhs] {
        if w.level2() == 0 {
            return Err(Error::LevelZero(w.format(algebra)));
        }
    }
    let triple = TensorTriple::new(algebra, *bar, *lhs, *rhs)?;
    if !triple.admissible() {
        return Err(Error::Hypothesis("Λ′ + Λ″ − Λ̄ is not in Q".into()));
    }
    let missing = |hw: &Weight, w: &Weight| Error::NoDeltaMaximal {
        highest: hw.format(algebra),
        weight: w.format(algebra),
    };
    let g1 = *bar - *rhs;
    let g2 = *bar - *lhs;
    let n1 = delta_max_shift(algebra, lhs, &g1)?.ok_or_else(|| missing(lhs, &g1))?;
    let n2 = delta_max_shift(algebra, rhs, &g2)?.ok_or_else(|| missing(rhs, &g2))?;
    Ok(n1.min(n2))
}

fn require_positive_levels(triple: &TensorTriple) -> Result<()> {
    if triple.lhs.level2() <= 0 || triple.rhs.level2() <= 0 {
        return Err(Error::Hypothesis("both factors need positive level".into()));
    }
    if !triple.admissible() {
        return Err(Error::Hypothesis("Λ′ + Λ″ − Λ̄ is not in Q".into()));
    }
    Ok(())
}

/// Predicted α-offsets `k` (with `π(λ) = Λ′ + kα`) where the maximum of `S`
/// over T-set entries of the given sign is attained.
pub fn predicted_argmax(triple: &TensorTriple, sign: i8) -> Result<Vec<i64>> {
    require_positive_levels(triple)?;
    match triple.algebra {
        Algebra::A11 => {
            let [(m, j), (_, j1), (_, j2)] = a1_data(triple)?;
            if sign > 0 {
                Ok(vec![(j - j1 - j2) / 2])
            } else {
                let k0 = -(j + j1 + j2) / 2 - 1;
                Ok(vec![k0, k0 + m + 2])
            }
        }
        Algebra::A22 => {
            let alg = triple.algebra;
            let m1 = |w: &Weight| alg.labels(w).expect("dominant integral").1;
            let (m, ma, mb) = (m1(&triple.bar), m1(&triple.lhs), m1(&triple.rhs));
            if sign > 0 {
                Ok(vec![(m - ma - mb) / 2])
            } else {
                let half = (ma + mb + m) / 2;
                // 2(Λ′(c) + Λ″(c) + 1) in doubled levels
                let shift = triple.lhs.level2() + triple.rhs.level2() + 2;
                Ok(vec![-(half + 1), -(half - shift)])
            }
        }
    }
}

/// Maxima `μ` (ε = +1) and `μ̄` (ε = −1) of `S` over a T-set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedMaxima {
    pub plus: Option<i64>,
    pub minus: Option<i64>,
}

impl SignedMaxima {
    pub fn tie(&self) -> bool {
        self.plus.is_some() && self.plus == self.minus
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonCancellationReport {
    pub forward: SignedMaxima,
    pub backward: SignedMaxima,
    /// Set when the triple falls outside the hypotheses of the check.
    pub hypothesis_violation: Option<String>,
}

impl NonCancellationReport {
    /// The two orderings never tie simultaneously.
    pub fn holds(&self) -> bool {
        !(self.forward.tie() && self.backward.tie())
    }
}

fn signed_maxima(triple: &TensorTriple) -> Result<SignedMaxima> {
    Ok(SignedMaxima {
        plus: triple.max_s(1)?.map(|(s, _)| s),
        minus: triple.max_s(-1)?.map(|(s, _)| s),
    })
}

/// Computes `μ`, `μ̄` for both orderings of the factors.
pub fn non_cancellation_check(triple: &TensorTriple) -> Result<NonCancellationReport> {
    require_positive_levels(triple)?;
    let mut violation = None;
    if triple.algebra == Algebra::A22 {
        let alg = triple.algebra;
        let m1 = |w: &Weight| alg.labels(w).expect("dominant integral").1;
        if triple.lhs.level2() < 4 || triple.rhs.level2() < 4 {
            violation = Some("factor level below 2".to_string());
        } else if m1(&triple.lhs) == 1 || m1(&triple.rhs) == 1 {
            violation = Some("factor with α₁-label 1".to_string());
        }
    }
    Ok(NonCancellationReport {
        forward: signed_maxima(triple)?,
        backward: signed_maxima(&triple.swapped())?,
        hypothesis_violation: violation,
    })
}

/// Central charge `3(m′/(m′+2) + m″/(m″+2) − m/(m+2))` of the coset Virasoro
/// action for A₁⁽¹⁾, `m = m′ + m″`.
pub fn coset_central_charge(algebra: Algebra, m1: Rational64, m2: Rational64) -> Result<Rational64> {
    algebra.require(Algebra::A11)?;
    let two = Rational64::from(2);
    if m1 < Rational64::zero() || m2 < Rational64::zero() {
        return Err(Error::Hypothesis("levels must be nonnegative".into()));
    }
    let m = m1 + m2;
    Ok(Rational64::from(3) * (m1 / (m1 + two) + m2 / (m2 + two) - m / (m + two)))
}

/// `(Λ|Λ + 2ρ) / 2(m + 2)` for the δ-free part of an A₁⁽¹⁾ weight.
fn casimir_weight(algebra: Algebra, w: &Weight) -> Rational64 {
    let p = w.project();
    let two_rho = algebra.rho() * 2;
    let num = Rational64::new(algebra.form4(&p, &(p + two_rho)), 4);
    num / (p.level() + 2) / 2
}

/// `L₀`-eigenvalue of the top of the family `L(Λ̄ + eδ)` in the coset
/// Virasoro module of A₁⁽¹⁾, with `Λ̄(d) = Λ′(d) + Λ″(d)`.
pub fn coset_conformal_weight(triple: &TensorTriple, e: i64) -> Result<Rational64> {
    triple.algebra.require(Algebra::A11)?;
    let alg = triple.algebra;
    Ok(casimir_weight(alg, &triple.lhs) + casimir_weight(alg, &triple.rhs)
        - casimir_weight(alg, &triple.bar)
        - Rational64::from(e))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TopStatus {
    Vacuum,
    NonVacuum,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChargeInfo {
    pub central_charge: Option<Rational64>,
    pub top: TopStatus,
}

impl ChargeInfo {
    /// Charge and top status for a component of an A₁⁽¹⁾ tensor product;
    /// `Unknown` data for A₂⁽²⁾.
    pub fn for_component(triple: &TensorTriple, top: i64) -> Result<Self> {
        if triple.algebra != Algebra::A11 {
            return Ok(ChargeInfo {
                central_charge: None,
                top: TopStatus::Unknown,
            });
        }
        let charge = coset_central_charge(triple.algebra, triple.lhs.level(), triple.rhs.level())?;
        let h = coset_conformal_weight(triple, top)?;
        Ok(ChargeInfo {
            central_charge: Some(charge),
            top: if h.is_zero() {
                TopStatus::Vacuum
            } else {
                TopStatus::NonVacuum
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VirasoroVerdict {
    Valid,
    Invalid { index: usize, reason: String },
}

impl VirasoroVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, VirasoroVerdict::Valid)
    }
}

/// Checks a branching string against the constraints of unitary Virasoro
/// modules. Each irreducible summand starting at the top level contributes
/// `L₋ₙv ≠ 0` for `n ≥ 1` (non-vacuum top) or `n ≥ 2` (vacuum top, nonzero
/// charge), so those coefficients are at least `c₀`; zero charge forces
/// one-dimensional summands.
pub fn validate_virasoro_string<C: Coefficient>(s: &DeltaString<C>, info: &ChargeInfo) -> VirasoroVerdict {
    let invalid = |index: usize, reason: &str| VirasoroVerdict::Invalid {
        index,
        reason: reason.to_string(),
    };
    let Some(c0) = s.coeffs.first() else {
        return VirasoroVerdict::Valid;
    };
    if !c0.is_positive() {
        return invalid(0, "top coefficient must be positive");
    }
    if let Some(k) = s.coeffs.iter().position(|c| c.is_negative()) {
        return invalid(k, "negative coefficient");
    }
    if info.central_charge.is_some_and(|c| c.is_zero()) {
        if info.top == TopStatus::NonVacuum {
            return invalid(0, "zero charge admits only the vacuum");
        }
        return match s.coeffs.iter().skip(1).position(|c| !c.is_zero()) {
            Some(p) => invalid(p + 1, "zero charge forces a one-dimensional module"),
            None => VirasoroVerdict::Valid,
        };
    }
    let start = match info.top {
        TopStatus::NonVacuum => 1,
        TopStatus::Vacuum | TopStatus::Unknown => 2,
    };
    for (k, c) in s.coeffs.iter().enumerate().skip(start) {
        if c < c0 {
            return invalid(k, "coefficient below the top multiplicity");
        }
    }
    VirasoroVerdict::Valid
}
