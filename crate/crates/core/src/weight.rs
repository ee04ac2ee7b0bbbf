//! Exact weights and Cartan elements.
//!
//! A weight is `w·Λ₀ + a·α + n·δ` (for A₂⁽²⁾ the first basis vector is ω₀) with
//! coordinates in `½ℤ`. Coordinates are stored doubled so all arithmetic is on
//! integers.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Weight {
    level2: i64,
    alpha2: i64,
    delta2: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight::from_doubled(0, 0, 0);
    /// Λ₀ (or ω₀ for A₂⁽²⁾).
    pub const BASIC: Weight = Weight::from_doubled(2, 0, 0);
    pub const ALPHA: Weight = Weight::from_doubled(0, 2, 0);
    pub const DELTA: Weight = Weight::from_doubled(0, 0, 2);

    /// Builds a weight from doubled coordinates `(2w, 2a, 2n)`.
    pub const fn from_doubled(level2: i64, alpha2: i64, delta2: i64) -> Self {
        Weight {
            level2,
            alpha2,
            delta2,
        }
    }

    /// `level·Λ₀ + alpha·α + delta·δ` with integer coefficients.
    pub const fn new(level: i64, alpha: i64, delta: i64) -> Self {
        Weight::from_doubled(2 * level, 2 * alpha, 2 * delta)
    }

    pub fn from_rationals(level: Rational64, alpha: Rational64, delta: Rational64) -> Result<Self> {
        Ok(Weight::from_doubled(
            doubled(level)?,
            doubled(alpha)?,
            doubled(delta)?,
        ))
    }

    pub const fn doubled(&self) -> (i64, i64, i64) {
        (self.level2, self.alpha2, self.delta2)
    }

    pub const fn level2(&self) -> i64 {
        self.level2
    }

    pub const fn alpha2(&self) -> i64 {
        self.alpha2
    }

    pub const fn delta2(&self) -> i64 {
        self.delta2
    }

    /// μ(c).
    pub fn level(&self) -> Rational64 {
        Rational64::new(self.level2, 2)
    }

    pub fn alpha(&self) -> Rational64 {
        Rational64::new(self.alpha2, 2)
    }

    pub fn delta(&self) -> Rational64 {
        Rational64::new(self.delta2, 2)
    }

    /// True for weights in `ℚδ`.
    pub fn is_delta_multiple(&self) -> bool {
        self.level2 == 0 && self.alpha2 == 0
    }

    pub fn with_delta2(self, delta2: i64) -> Self {
        Weight { delta2, ..self }
    }

    /// The weight shifted by `n·δ`.
    pub fn shift_delta(self, n: i64) -> Self {
        self + Weight::DELTA * n
    }

    /// Drops the δ-coordinate (the projection `π`).
    pub fn project(self) -> Self {
        self.with_delta2(0)
    }

    /// Integer `n` with `self − other = n·δ`, if any.
    pub fn delta_offset(&self, other: &Weight) -> Option<i64> {
        let diff = *self - *other;
        if diff.is_delta_multiple() && diff.delta2 % 2 == 0 {
            Some(diff.delta2 / 2)
        } else {
            None
        }
    }

    /// μ(x).
    pub fn pair(&self, x: &CartanElement) -> Rational64 {
        self.level() * x.c + self.alpha() * x.h * 2 + self.delta() * x.d
    }

    pub fn format(&self, algebra: Algebra) -> String {
        WeightDisplay {
            weight: *self,
            basic: algebra.basic_symbol(),
        }
        .to_string()
    }

    /// Parses `"m*L0 + a*alpha + n*delta"`. `w0`, `w1` (and `L1`) name the
    /// fundamental weights of `algebra`.
    pub fn parse(algebra: Algebra, text: &str) -> Result<Self> {
        parse_weight(algebra, text)
    }
}

fn doubled(q: Rational64) -> Result<i64> {
    let twice = q * 2;
    if twice.is_integer() {
        Ok(twice.to_integer())
    } else {
        Err(Error::Parse(format!(
            "coordinate {q} does not have denominator dividing 2"
        )))
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::from_doubled(
            self.level2 + rhs.level2,
            self.alpha2 + rhs.alpha2,
            self.delta2 + rhs.delta2,
        )
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        *self = *self + rhs;
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        self + (-rhs)
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, rhs: Weight) {
        *self = *self - rhs;
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::from_doubled(-self.level2, -self.alpha2, -self.delta2)
    }
}

impl Mul<i64> for Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        Weight::from_doubled(self.level2 * k, self.alpha2 * k, self.delta2 * k)
    }
}

struct WeightDisplay {
    weight: Weight,
    basic: &'static str,
}

impl fmt::Display for WeightDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.weight;
        write!(f, "{}*{}", fmt_rational(w.level()), self.basic)?;
        for (coeff, symbol) in [(w.alpha(), "alpha"), (w.delta(), "delta")] {
            if coeff.is_zero() {
                continue;
            }
            let sign = if coeff.is_negative() { '-' } else { '+' };
            write!(f, " {sign} {}*{symbol}", fmt_rational(coeff.abs()))?;
        }
        Ok(())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        WeightDisplay {
            weight: *self,
            basic: "L0",
        }
        .fmt(f)
    }
}

/// Rational as `p/q`, or `p` when the denominator is 1.
pub fn fmt_rational(q: Rational64) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Rational always as `p/q`.
pub fn fmt_rational_pq(q: Rational64) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(text: &str) -> Result<Rational64> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational '{text}'"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(p, q))
        }
        None => text.parse::<i64>().map(Rational64::from).map_err(|_| bad()),
    }
}

fn parse_weight(algebra: Algebra, text: &str) -> Result<Weight> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty weight".into()));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > start {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);

    let mut total = Weight::ZERO;
    for term in terms {
        let (negative, body) = match term.as_bytes().first() {
            Some(b'+') => (false, &term[1..]),
            Some(b'-') => (true, &term[1..]),
            _ => (false, term),
        };
        let split = body
            .find(|c: char| c.is_ascii_alphabetic())
            .ok_or_else(|| Error::Parse(format!("term '{term}' has no symbol")))?;
        let (coeff_text, symbol) = body.split_at(split);
        let coeff_text = coeff_text.trim_end_matches('*');
        let mut coeff = if coeff_text.is_empty() {
            Rational64::one()
        } else {
            parse_rational(coeff_text)?
        };
        if negative {
            coeff = -coeff;
        }
        let basis = match symbol {
            "L0" | "Lambda0" | "w0" | "omega0" => Weight::BASIC,
            "L1" | "Lambda1" | "w1" | "omega1" => algebra.fundamental(1),
            "alpha" => Weight::ALPHA,
            "delta" => Weight::DELTA,
            other => return Err(Error::Parse(format!("unknown symbol '{other}'"))),
        };
        let (l, a, d) = basis.doubled();
        // basis coordinates are doubled, so coeff·basis stays in ½ℤ only if
        // coeff·(doubled coordinate) is an integer
        let scaled = |x: i64| -> Result<i64> {
            let v = coeff * x;
            if v.is_integer() {
                Ok(v.to_integer())
            } else {
                Err(Error::Parse(format!(
                    "term '{term}' leaves the half-integer lattice"
                )))
            }
        };
        total += Weight::from_doubled(scaled(l)?, scaled(a)?, scaled(d)?);
    }
    Ok(total)
}

/// Element `c·c + h·α∨ + d·d` of the Cartan subalgebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CartanElement {
    pub c: Rational64,
    pub h: Rational64,
    pub d: Rational64,
}

impl CartanElement {
    pub fn new(c: Rational64, h: Rational64, d: Rational64) -> Self {
        CartanElement { c, h, d }
    }

    pub fn central() -> Self {
        CartanElement::new(Rational64::one(), Rational64::zero(), Rational64::zero())
    }

    pub fn derivation() -> Self {
        CartanElement::new(Rational64::zero(), Rational64::zero(), Rational64::one())
    }

    pub fn scale(self, k: Rational64) -> Self {
        CartanElement::new(self.c * k, self.h * k, self.d * k)
    }
}

impl Add for CartanElement {
    type Output = CartanElement;
    fn add(self, rhs: CartanElement) -> CartanElement {
        CartanElement::new(self.c + rhs.c, self.h + rhs.h, self.d + rhs.d)
    }
}

impl Sub for CartanElement {
    type Output = CartanElement;
    fn sub(self, rhs: CartanElement) -> CartanElement {
        CartanElement::new(self.c - rhs.c, self.h - rhs.h, self.d - rhs.d)
    }
}

impl fmt::Display for CartanElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}*c + {}*alpha_v + {}*d",
            fmt_rational(self.c),
            fmt_rational(self.h),
            fmt_rational(self.d)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        let w = Weight::parse(Algebra::A11, "2*L0 + 1/2*alpha - 1*delta").unwrap();
        assert_eq!(w, Weight::from_doubled(4, 1, -2));
        assert_eq!(w.to_string(), "2*L0 + 1/2*alpha - 1*delta");
        assert_eq!(Weight::parse(Algebra::A11, "L0").unwrap(), Weight::BASIC);
        assert_eq!(
            Weight::parse(Algebra::A11, "-alpha+delta").unwrap(),
            Weight::DELTA - Weight::ALPHA
        );
    }

    #[test]
    fn parse_fundamental_weights() {
        // ω₁ = ½ω₀ + ½α for A₂⁽²⁾
        let w = Weight::parse(Algebra::A22, "1*w0 + 1*w1").unwrap();
        assert_eq!(w, Weight::from_doubled(3, 1, 0));
        // Λ₁ = Λ₀ + ½α for A₁⁽¹⁾
        let w = Weight::parse(Algebra::A11, "L1").unwrap();
        assert_eq!(w, Weight::from_doubled(2, 1, 0));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Weight::parse(Algebra::A11, "").is_err());
        assert!(Weight::parse(Algebra::A11, "2*L9").is_err());
        assert!(Weight::parse(Algebra::A11, "1/3*alpha").is_err());
        assert!(Weight::parse(Algebra::A11, "1/0*alpha").is_err());
        assert!(Weight::parse(Algebra::A11, "3").is_err());
    }

    #[test]
    fn pairing_with_cartan() {
        let half = Rational64::new(1, 2);
        let x = CartanElement::new(Rational64::zero(), half, Rational64::one());
        // α(½α∨ + d) = 1, δ(½α∨ + d) = 1, Λ₀(…) = 0
        assert_eq!(Weight::ALPHA.pair(&x), Rational64::one());
        assert_eq!(Weight::DELTA.pair(&x), Rational64::one());
        assert_eq!(Weight::BASIC.pair(&x), Rational64::zero());
        assert_eq!(Weight::BASIC.pair(&CartanElement::central()), Rational64::one());
    }
}
