//! Root data for A₁⁽¹⁾ and A₂⁽²⁾ and the Weyl group action.
//!
//! Conventions (both algebras): `c` is the canonical central element, `α` the
//! finite root with `α(α∨) = 2`, `δ` the null root.
//!
//! | | α₀ | α₀∨ | α₁ | α₁∨ | δ |
//! |---|---|---|---|---|---|
//! | A₁⁽¹⁾ | δ − α | c − α∨ | α | α∨ | α₀ + α₁ |
//! | A₂⁽²⁾ | δ − 2α | c − ½α∨ | α | α∨ | α₀ + 2α₁ |
//!
//! The invariant form is normalised by `(α|α) = 2`, so `(Λ₀|δ) = 1` for
//! A₁⁽¹⁾ and `(ω₀|δ) = 4` for A₂⁽²⁾.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::weight::{CartanElement, Weight};
use crate::weyl::WeylElement;

/// Chamber-walk steps allowed before giving up.
const WALK_BUDGET: usize = 1 << 22;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Algebra {
    /// A₁⁽¹⁾
    A11,
    /// A₂⁽²⁾
    A22,
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::A11 => "a1_1",
            Algebra::A22 => "a2_2",
        })
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a1_1" | "a11" | "a1^(1)" => Ok(Algebra::A11),
            "a2_2" | "a22" | "a2^(2)" => Ok(Algebra::A22),
            other => Err(Error::Parse(format!("unknown algebra '{other}'"))),
        }
    }
}

/// A positive root given by its coordinates on the simple roots.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PositiveRoot {
    pub coords: (i64, i64),
    pub mult: i64,
}

impl Algebra {
    pub(crate) fn basic_symbol(self) -> &'static str {
        match self {
            Algebra::A11 => "L0",
            Algebra::A22 => "w0",
        }
    }

    pub fn require(self, expected: Algebra) -> Result<()> {
        if self == expected {
            Ok(())
        } else {
            Err(Error::WrongAlgebra {
                expected,
                got: self,
            })
        }
    }

    pub fn simple_root(self, i: usize) -> Weight {
        match (self, i) {
            (Algebra::A11, 0) => Weight::from_doubled(0, -2, 2),
            (Algebra::A22, 0) => Weight::from_doubled(0, -4, 2),
            (_, 1) => Weight::ALPHA,
            _ => panic!("simple root index {i} out of range"),
        }
    }

    pub fn simple_coroot(self, i: usize) -> CartanElement {
        let one = Rational64::from(1);
        let zero = Rational64::zero();
        match (self, i) {
            (Algebra::A11, 0) => CartanElement::new(one, -one, zero),
            (Algebra::A22, 0) => CartanElement::new(one, Rational64::new(-1, 2), zero),
            (_, 1) => CartanElement::new(zero, one, zero),
            _ => panic!("simple coroot index {i} out of range"),
        }
    }

    /// `2·μ(αᵢ∨)`, always an integer.
    pub fn coroot_pairing2(self, i: usize, mu: &Weight) -> i64 {
        let (w2, a2, _) = mu.doubled();
        match (self, i) {
            (Algebra::A11, 0) => w2 - 2 * a2,
            (Algebra::A22, 0) => w2 - a2,
            (_, 1) => 2 * a2,
            _ => panic!("simple coroot index {i} out of range"),
        }
    }

    /// μ(αᵢ∨).
    pub fn coroot_pairing(self, i: usize, mu: &Weight) -> Rational64 {
        Rational64::new(self.coroot_pairing2(i, mu), 2)
    }

    /// Dynkin labels `(μ(α₀∨), μ(α₁∨))` when both are integers.
    pub fn labels(self, mu: &Weight) -> Option<(i64, i64)> {
        let l0 = self.coroot_pairing2(0, mu);
        let l1 = self.coroot_pairing2(1, mu);
        (l0 % 2 == 0 && l1 % 2 == 0).then_some((l0 / 2, l1 / 2))
    }

    pub fn is_integral(self, mu: &Weight) -> bool {
        self.labels(mu).is_some()
    }

    pub fn is_dominant(self, mu: &Weight) -> bool {
        self.coroot_pairing2(0, mu) >= 0 && self.coroot_pairing2(1, mu) >= 0
    }

    pub fn is_dominant_integral(self, mu: &Weight) -> bool {
        matches!(self.labels(mu), Some((a, b)) if a >= 0 && b >= 0)
    }

    /// Regular dominant: both pairings strictly positive.
    pub fn is_regular_dominant(self, mu: &Weight) -> bool {
        self.coroot_pairing2(0, mu) > 0 && self.coroot_pairing2(1, mu) > 0
    }

    pub fn require_dominant(self, mu: &Weight) -> Result<()> {
        if self.is_dominant_integral(mu) {
            Ok(())
        } else {
            Err(Error::NotDominant(mu.format(self)))
        }
    }

    /// Fundamental weight Λᵢ (ωᵢ for A₂⁽²⁾) with zero δ-coordinate.
    pub fn fundamental(self, i: usize) -> Weight {
        match (self, i) {
            (_, 0) => Weight::BASIC,
            (Algebra::A11, 1) => Weight::from_doubled(2, 1, 0),
            (Algebra::A22, 1) => Weight::from_doubled(1, 1, 0),
            _ => panic!("fundamental weight index {i} out of range"),
        }
    }

    /// `m0·Λ₀ + m1·Λ₁` (resp. `m0·ω₀ + m1·ω₁`).
    pub fn from_labels(self, m0: i64, m1: i64) -> Weight {
        self.fundamental(0) * m0 + self.fundamental(1) * m1
    }

    pub fn rho(self) -> Weight {
        self.fundamental(0) + self.fundamental(1)
    }

    /// The element `xᵢ` with `αⱼ(xᵢ) = δᵢⱼ` and no `c`-component.
    pub fn x(self, i: usize) -> CartanElement {
        let zero = Rational64::zero();
        let half = Rational64::new(1, 2);
        match (self, i) {
            (_, 0) => CartanElement::derivation(),
            (Algebra::A11, 1) => CartanElement::new(zero, half, Rational64::from(1)),
            (Algebra::A22, 1) => CartanElement::new(zero, half, Rational64::from(2)),
            _ => panic!("index {i} out of range"),
        }
    }

    /// Coefficients of δ on the simple roots.
    pub fn delta_coords(self) -> (i64, i64) {
        match self {
            Algebra::A11 => (1, 1),
            Algebra::A22 => (1, 2),
        }
    }

    /// `(Λ₀|δ)`: the factor turning levels into form values.
    pub fn form_delta(self) -> i64 {
        match self {
            Algebra::A11 => 1,
            Algebra::A22 => 4,
        }
    }

    /// `4·(μ|ν)`, an integer.
    pub fn form4(self, mu: &Weight, nu: &Weight) -> i64 {
        let (w, a, n) = mu.doubled();
        let (w2, a2, n2) = nu.doubled();
        self.form_delta() * (w * n2 + n * w2) + 2 * a * a2
    }

    pub fn form(self, mu: &Weight, nu: &Weight) -> Rational64 {
        Rational64::new(self.form4(mu, nu), 4)
    }

    /// Gram matrix of the form on the simple roots.
    pub fn simple_gram(self) -> [[i64; 2]; 2] {
        match self {
            Algebra::A11 => [[2, -2], [-2, 2]],
            Algebra::A22 => [[8, -4], [-4, 2]],
        }
    }

    /// `n₀α₀ + n₁α₁`.
    pub fn from_simple_coords(self, n0: i64, n1: i64) -> Weight {
        self.simple_root(0) * n0 + self.simple_root(1) * n1
    }

    /// Coordinates of `β` on the simple roots, when `β ∈ Q`.
    pub fn simple_coords(self, beta: &Weight) -> Option<(i64, i64)> {
        let (p, q) = self.root_lattice_coords(beta)?;
        Some(match self {
            Algebra::A11 => (q, p + q),
            Algebra::A22 => (q, p + 2 * q),
        })
    }

    /// `(p, q)` with `β = pα + qδ`, when `β ∈ Q = ℤα ⊕ ℤδ`.
    pub fn root_lattice_coords(self, beta: &Weight) -> Option<(i64, i64)> {
        let (w, a, n) = beta.doubled();
        (w == 0 && a % 2 == 0 && n % 2 == 0).then_some((a / 2, n / 2))
    }

    /// `(p, q)` with `μ − ν = pα + qδ`.
    pub fn root_lattice_diff(self, mu: &Weight, nu: &Weight) -> Option<(i64, i64)> {
        self.root_lattice_coords(&(*mu - *nu))
    }

    /// Height of `β ∈ Q` (sum of simple-root coordinates).
    pub fn height(self, beta: &Weight) -> Option<i64> {
        self.simple_coords(beta).map(|(a, b)| a + b)
    }

    /// `Λ − μ ∈ Q₊`.
    pub fn dominates(self, lambda: &Weight, mu: &Weight) -> bool {
        matches!(self.simple_coords(&(*lambda - *mu)), Some((a, b)) if a >= 0 && b >= 0)
    }

    /// Positive roots of height at most `max_height`, all of multiplicity one.
    pub fn positive_roots(self, max_height: i64) -> Vec<PositiveRoot> {
        let mut roots = Vec::new();
        let mut push = |p: i64, q: i64| {
            let beta = Weight::new(0, p, q);
            let coords = self.simple_coords(&beta).expect("root lies in Q");
            if coords.0 + coords.1 <= max_height {
                roots.push(PositiveRoot { coords, mult: 1 });
            }
        };
        // every family has height growing at least linearly in n
        let n_max = max_height.max(0) + 1;
        for n in 0..=n_max {
            push(1, n);
            if n >= 1 {
                push(-1, n);
                push(0, n);
            }
            if self == Algebra::A22 {
                push(2, 2 * n + 1);
                push(-2, 2 * n + 1);
            }
        }
        roots.sort_by_key(|r| (r.coords.0 + r.coords.1, r.coords));
        roots
    }

    /// `sᵢμ = μ − μ(αᵢ∨)αᵢ`.
    pub fn reflect(self, i: usize, mu: &Weight) -> Weight {
        let p2 = self.coroot_pairing2(i, mu);
        let (w, a, n) = self.simple_root(i).doubled();
        // simple roots have even doubled coordinates
        *mu - Weight::from_doubled(w / 2, a / 2, n / 2) * p2
    }

    /// Left action: the rightmost letter acts first.
    pub fn act(self, w: &WeylElement, mu: &Weight) -> Weight {
        w.letters()
            .rev()
            .fold(*mu, |acc, i| self.reflect(i as usize, &acc))
    }

    /// `sᵢx = x − αᵢ(x)αᵢ∨`.
    pub fn reflect_cartan(self, i: usize, x: &CartanElement) -> CartanElement {
        let value = self.simple_root(i).pair(x);
        *x - self.simple_coroot(i).scale(value)
    }

    /// Contragredient action, so that `(wμ)(wx) = μ(x)`.
    pub fn act_on_cartan(self, w: &WeylElement, x: &CartanElement) -> CartanElement {
        w.letters()
            .rev()
            .fold(*x, |acc, i| self.reflect_cartan(i as usize, &acc))
    }

    /// `T_{nα∨}(μ) = μ + nμ(c)α − (nμ(α∨) + n²μ(c))δ` (A₁⁽¹⁾ only).
    pub fn translate_a1(self, n: i64, mu: &Weight) -> Result<Weight> {
        self.require(Algebra::A11)?;
        let (w2, a2, _) = mu.doubled();
        // μ(α∨) = a (doubled a2 = 2a), μ(c) = w2/2
        let shift_alpha2 = n * w2;
        let shift_delta2 = -(n * a2 * 2 + n * n * w2);
        Ok(*mu + Weight::from_doubled(0, shift_alpha2, shift_delta2))
    }

    /// Walks `μ` into the fundamental chamber, reflecting at the lowest-index
    /// negative wall. Returns `(d, w)` with `w·μ = d`.
    pub fn dominant_rep(self, mu: &Weight) -> Result<(Weight, WeylElement)> {
        let (w2, a2, _) = mu.doubled();
        if w2 < 0 || (w2 == 0 && a2 != 0) {
            return Err(Error::OutsideTitsCone(mu.format(self)));
        }
        let mut current = *mu;
        let mut word = WeylElement::IDENTITY;
        for _ in 0..WALK_BUDGET {
            let wall = (0..2).find(|&i| self.coroot_pairing2(i, &current) < 0);
            match wall {
                None => return Ok((current, word)),
                Some(i) => {
                    current = self.reflect(i, &current);
                    word = WeylElement::generator(i as u8) * word;
                }
            }
        }
        Err(Error::OutsideTitsCone(mu.format(self)))
    }

    /// Residue classes of dominant integral weights of `level2/2` with zero
    /// δ-coordinate, ordered by `α`-coordinate.
    pub fn dominant_at_level(self, level2: i64) -> Vec<Weight> {
        (-level2.abs() * 2..=level2.abs() * 2)
            .map(|a2| Weight::from_doubled(level2, a2, 0))
            .filter(|w| self.is_dominant_integral(w))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const A11: Algebra = Algebra::A11;
    const A22: Algebra = Algebra::A22;

    fn l0() -> Weight {
        Weight::BASIC
    }

    #[test]
    fn simple_reflections() {
        assert_eq!(A11.reflect(1, &l0()), l0());
        assert_eq!(A11.reflect(0, &l0()), l0() + Weight::ALPHA - Weight::DELTA);
        // s₁ρ = 2Λ₀ − ½α
        assert_eq!(A11.reflect(1, &A11.rho()), Weight::from_doubled(4, -1, 0));
    }

    #[test]
    fn cartan_matrices() {
        for (alg, expected) in [(A11, [[2, -2], [-2, 2]]), (A22, [[2, -1], [-4, 2]])] {
            for i in 0..2 {
                for j in 0..2 {
                    // a_ij = αⱼ(αᵢ∨)
                    let v = alg.simple_root(j).pair(&alg.simple_coroot(i));
                    assert_eq!(v, Rational64::from(expected[i][j]), "{alg} {i}{j}");
                    assert_eq!(alg.coroot_pairing(i, &alg.simple_root(j)), v);
                }
            }
        }
    }

    #[test]
    fn x_elements_are_dual_to_simple_roots() {
        for alg in [A11, A22] {
            for i in 0..2 {
                for j in 0..2 {
                    let v = alg.simple_root(j).pair(&alg.x(i));
                    assert_eq!(v, Rational64::from((i == j) as i64));
                }
            }
        }
    }

    #[test]
    fn rho_pairs_to_one() {
        for alg in [A11, A22] {
            assert_eq!(alg.labels(&alg.rho()), Some((1, 1)));
            assert_eq!(alg.labels(&alg.fundamental(0)), Some((1, 0)));
            assert_eq!(alg.labels(&alg.fundamental(1)), Some((0, 1)));
        }
    }

    #[test]
    fn delta_decomposes() {
        for alg in [A11, A22] {
            let (a, b) = alg.delta_coords();
            assert_eq!(alg.from_simple_coords(a, b), Weight::DELTA);
            assert_eq!(alg.simple_coords(&Weight::DELTA), Some((a, b)));
        }
    }

    #[test]
    fn gram_matches_form() {
        for alg in [A11, A22] {
            let g = alg.simple_gram();
            for i in 0..2 {
                for j in 0..2 {
                    let v = alg.form(&alg.simple_root(i), &alg.simple_root(j));
                    assert_eq!(v, Rational64::from(g[i][j]));
                }
            }
        }
    }

    #[test]
    fn form_against_simple_roots_follows_labels() {
        // (Λ|αᵢ) = ½(αᵢ|αᵢ)Λ(αᵢ∨)
        for alg in [A11, A22] {
            let lam = alg.from_labels(3, 2).shift_delta(5);
            for i in 0..2 {
                let ai = alg.simple_root(i);
                let lhs = alg.form(&lam, &ai);
                let rhs = alg.form(&ai, &ai) / 2 * alg.coroot_pairing(i, &lam);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn positive_roots_are_roots() {
        // real roots have norm 2 or 8, imaginary ones norm 0
        for alg in [A11, A22] {
            let roots = alg.positive_roots(12);
            for r in &roots {
                let beta = alg.from_simple_coords(r.coords.0, r.coords.1);
                let norm = alg.form(&beta, &beta);
                assert!(
                    norm.is_zero() || norm == Rational64::from(2) || norm == Rational64::from(8),
                    "{alg} {:?}",
                    r.coords
                );
                assert!(r.coords.0 >= 0 && r.coords.1 >= 0);
            }
            let simple: Vec<_> = roots.iter().filter(|r| r.coords.0 + r.coords.1 == 1).collect();
            assert_eq!(simple.len(), 2);
        }
    }

    #[test]
    fn positive_roots_closed_under_simple_reflection() {
        // sᵢ permutes positive real roots other than αᵢ
        for alg in [A11, A22] {
            let roots = alg.positive_roots(30);
            let set: std::collections::HashSet<_> = roots.iter().map(|r| r.coords).collect();
            for r in alg.positive_roots(20) {
                let beta = alg.from_simple_coords(r.coords.0, r.coords.1);
                for i in 0..2 {
                    if beta == alg.simple_root(i) {
                        continue;
                    }
                    let image = alg.simple_coords(&alg.reflect(i, &beta)).unwrap();
                    assert!(set.contains(&image), "{alg} {:?} -> {:?}", r.coords, image);
                }
            }
        }
    }

    #[test]
    fn act_word_examples() {
        let w = WeylElement::from_word(&[0, 1]).unwrap();
        assert_eq!(A11.act(&w, &l0()), l0() + Weight::ALPHA - Weight::DELTA);
        assert_eq!(A11.act(&WeylElement::IDENTITY, &A11.rho()), A11.rho());
    }

    #[test]
    fn translation_examples() {
        let t = A11.translate_a1(1, &l0()).unwrap();
        assert_eq!(t, l0() + Weight::ALPHA - Weight::DELTA);
        assert_eq!(A11.translate_a1(1, &Weight::DELTA).unwrap(), Weight::DELTA);
        assert!(A22.translate_a1(1, &l0()).is_err());
    }

    #[test]
    fn dominant_rep_examples() {
        assert_eq!(A11.dominant_rep(&l0()).unwrap(), (l0(), WeylElement::IDENTITY));
        let (d, w) = A11.dominant_rep(&(l0() - Weight::ALPHA)).unwrap();
        assert_eq!(d, l0() + Weight::DELTA);
        assert_eq!(w.to_string(), "s0s1");
        let mu = Weight::new(2, 3, 0);
        let (d, w) = A11.dominant_rep(&mu).unwrap();
        assert!(A11.is_dominant(&d));
        assert_eq!(A11.act(&w, &mu), d);
        assert!(A11.dominant_rep(&Weight::new(-1, 0, 0)).is_err());
        assert!(A11.dominant_rep(&Weight::new(0, 1, 0)).is_err());
        assert!(A11.dominant_rep(&Weight::new(0, 0, 3)).is_ok());
    }

    #[test]
    fn act_on_cartan_examples() {
        let d = CartanElement::derivation();
        assert_eq!(A11.act_on_cartan(&WeylElement::IDENTITY, &d), d);
        let s1 = WeylElement::generator(1);
        let x = A11.x(1);
        let expected = CartanElement::new(
            Rational64::zero(),
            Rational64::new(-1, 2),
            Rational64::from(1),
        );
        assert_eq!(A11.act_on_cartan(&s1, &x), expected);
        let s0 = WeylElement::generator(0);
        let rho = A11.rho();
        for x in [A11.x(0), A11.x(1)] {
            assert_eq!(
                A11.act(&s0, &rho).pair(&A11.act_on_cartan(&s0, &x)),
                rho.pair(&x)
            );
        }
    }

    #[test]
    fn root_lattice_diff_examples() {
        assert_eq!(A11.root_lattice_diff(&l0(), &l0()), Some((0, 0)));
        let nu = l0() + l0() + Weight::ALPHA - Weight::DELTA;
        assert_eq!(A11.root_lattice_diff(&(l0() * 2), &nu), Some((-1, 1)));
        assert_eq!(A11.root_lattice_diff(&l0(), &Weight::from_doubled(2, 1, 0)), None);
    }

    #[test]
    fn translation_is_a_short_word() {
        let mu = Weight::from_doubled(3, 1, -4);
        for n in -5i64..=5 {
            let target = A11.translate_a1(n, &mu).unwrap();
            let found = WeylElement::all_up_to(2 * n.unsigned_abs() as u32 + 1)
                .iter()
                .any(|w| A11.act(w, &mu) == target);
            assert!(found, "n = {n}");
            assert_eq!(A11.act(&WeylElement::translation_a1(n), &mu), target);
        }
    }

    fn weight() -> impl Strategy<Value = Weight> {
        (-12i64..=12, -12i64..=12, -12i64..=12).prop_map(|(l, a, d)| Weight::from_doubled(l, a, d))
    }

    fn algebra() -> impl Strategy<Value = Algebra> {
        prop_oneof![Just(A11), Just(A22)]
    }

    fn element() -> impl Strategy<Value = WeylElement> {
        (0u8..2, 0u32..=12).prop_map(|(f, l)| WeylElement::alternating(f, l))
    }

    proptest! {
        #[test]
        fn delta_is_fixed(alg in algebra(), w in element()) {
            prop_assert_eq!(alg.act(&w, &Weight::DELTA), Weight::DELTA);
        }

        #[test]
        fn reflections_are_involutions(alg in algebra(), mu in weight(), i in 0usize..2) {
            prop_assert_eq!(alg.reflect(i, &alg.reflect(i, &mu)), mu);
        }

        #[test]
        fn action_is_a_homomorphism(alg in algebra(), a in element(), b in element(), mu in weight()) {
            prop_assert_eq!(alg.act(&(a * b), &mu), alg.act(&a, &alg.act(&b, &mu)));
        }

        #[test]
        fn action_preserves_form(alg in algebra(), w in element(), mu in weight(), nu in weight()) {
            prop_assert_eq!(alg.form4(&alg.act(&w, &mu), &alg.act(&w, &nu)), alg.form4(&mu, &nu));
        }

        #[test]
        fn translation_round_trip(mu in weight(), n in -6i64..=6) {
            let there = A11.translate_a1(n, &mu).unwrap();
            prop_assert_eq!(A11.translate_a1(-n, &there).unwrap(), mu);
        }

        #[test]
        fn dominant_rep_is_dominant_and_conjugate(alg in algebra(), mu in weight()) {
            prop_assume!(mu.level2() > 0);
            let (d, w) = alg.dominant_rep(&mu).unwrap();
            prop_assert!(alg.is_dominant(&d));
            prop_assert_eq!(alg.act(&w, &mu), d);
        }

        #[test]
        fn pairing_duality(alg in algebra(), w in element(), mu in weight(), i in 0usize..2) {
            let x = alg.x(i) + alg.simple_coroot(1 - i);
            prop_assert_eq!(
                alg.act(&w, &mu).pair(&x),
                mu.pair(&alg.act_on_cartan(&w.inverse(), &x))
            );
        }
    }
}
