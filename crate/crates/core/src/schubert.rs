//! Schubert calculus for the two maximal parabolics of A₁⁽¹⁾.
//!
//! `W^P` for `P₀` (resp. `P₁`) consists of the alternating words ending in
//! `s₀` (resp. `s₁`), one in each length, so a Schubert class is just an index.

use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use num_rational::Rational64;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::weight::{CartanElement, Weight};
use crate::weyl::WeylElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parabolic {
    P0,
    P1,
}

impl Parabolic {
    pub const ALL: [Parabolic; 2] = [Parabolic::P0, Parabolic::P1];

    /// The simple root index `i_P` left out of the Levi.
    pub fn index(self) -> u8 {
        match self {
            Parabolic::P0 => 0,
            Parabolic::P1 => 1,
        }
    }

    /// `x_P`.
    pub fn x(self) -> CartanElement {
        Algebra::A11.x(self.index() as usize)
    }
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parabolic::P0 => "p0",
            Parabolic::P1 => "p1",
        })
    }
}

impl FromStr for Parabolic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "p0" | "0" => Ok(Parabolic::P0),
            "p1" | "1" => Ok(Parabolic::P1),
            other => Err(Error::Parse(format!("unknown parabolic '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchubertClass {
    pub parabolic: Parabolic,
    pub index: u32,
}

impl SchubertClass {
    pub fn new(parabolic: Parabolic, index: u32) -> Self {
        SchubertClass { parabolic, index }
    }

    pub fn word(&self) -> WeylElement {
        schubert_word(self.parabolic, self.index)
    }
}

/// `w_n = …s₁s₀` (P₀) or `v_n = …s₀s₁` (P₁), `n` letters.
pub fn schubert_word(p: Parabolic, n: u32) -> WeylElement {
    if n == 0 {
        return WeylElement::IDENTITY;
    }
    let last = p.index();
    let first = if n % 2 == 1 { last } else { 1 - last };
    WeylElement::alternating(first, n)
}

/// `ε^n · ε^m = C(n+m, n) ε^{n+m}` in either parabolic.
pub fn cup_coefficient(_p: Parabolic, n: u32, m: u32) -> u128 {
    binomial((n + m) as u128, n as u128)
}

/// `ρ(w x_P)`, i.e. `(w⁻¹ρ)(x_P)`.
fn rho_at(p: Parabolic, index: u32) -> Rational64 {
    let alg = Algebra::A11;
    let wx = alg.act_on_cartan(&schubert_word(p, index), &p.x());
    alg.rho().pair(&wx)
}

/// Exponent of `τ` in `ε^u ⊙ ε^v`: `(u⁻¹ρ + v⁻¹ρ − w⁻¹ρ − ρ)(x_P)`.
pub fn deformed_exponent(p: Parabolic, u: u32, v: u32, w: u32) -> Result<i64> {
    if u + v != w {
        return Err(Error::DegreeMismatch { u, v, w });
    }
    let e = rho_at(p, u) + rho_at(p, v) - rho_at(p, w) - rho_at(p, 0);
    if !e.is_integer() {
        return Err(Error::Arithmetic(format!("non-integral exponent {e}")));
    }
    Ok(e.to_integer())
}

/// The single term of `ε^n ⊙ ε^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeformedTerm {
    pub coefficient: u128,
    pub target: u32,
    pub exponent: i64,
}

impl DeformedTerm {
    /// Coefficient in `⊙₀` (τ set to zero).
    pub fn at_tau_zero(&self) -> u128 {
        if self.exponent == 0 {
            self.coefficient
        } else {
            0
        }
    }
}

pub fn deformed_product_coefficient(p: Parabolic, n: u32, m: u32) -> DeformedTerm {
    DeformedTerm {
        coefficient: cup_coefficient(p, n, m),
        target: n + m,
        exponent: deformed_exponent(p, n, m, n + m).expect("degrees match"),
    }
}

/// An inequality `λ(w₁x_P) + μ(w₂x_P) − ν(v x_P) ≥ 0` whose class appears with
/// coefficient one in `ε^{w₁} ⊙₀ ε^{w₂}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjectureInequality {
    pub parabolic: Parabolic,
    pub w1: u32,
    pub w2: u32,
    pub v: u32,
}

impl ConjectureInequality {
    pub fn evaluate(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Rational64 {
        let alg = Algebra::A11;
        let x = self.parabolic.x();
        let at = |w: &Weight, n: u32| {
            let wx = alg.act_on_cartan(&schubert_word(self.parabolic, n), &x);
            w.pair(&wx)
        };
        at(lambda, self.w1) + at(mu, self.w2) - at(nu, self.v)
    }
}

impl fmt::Display for ConjectureInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.parabolic;
        write!(
            f,
            "{p}: lambda({} x) + mu({} x) - nu({} x) >= 0",
            schubert_word(p, self.w1),
            schubert_word(p, self.w2),
            schubert_word(p, self.v)
        )
    }
}

/// All `(P, w₁, w₂, v)` with `v ≤ len_bound` and `⊙₀`-coefficient exactly one.
pub fn generate_conjecture_inequalities(len_bound: u32) -> Vec<ConjectureInequality> {
    let mut out = Vec::new();
    for p in Parabolic::ALL {
        for v in 0..=len_bound {
            for w1 in 0..=v {
                let w2 = v - w1;
                if deformed_product_coefficient(p, w1, w2).at_tau_zero() == 1 {
                    out.push(ConjectureInequality {
                        parabolic: p,
                        w1,
                        w2,
                        v,
                    });
                }
            }
        }
    }
    out
}

/// The families `(P, 0, m, m)` and `(P, m, 0, m)` for `m ≤ len_bound`.
pub fn cone_families(len_bound: u32) -> Vec<ConjectureInequality> {
    let mut out = Vec::new();
    for p in Parabolic::ALL {
        for m in 0..=len_bound {
            out.push(ConjectureInequality { parabolic: p, w1: 0, w2: m, v: m });
            out.push(ConjectureInequality { parabolic: p, w1: m, w2: 0, v: m });
        }
    }
    out.sort();
    out.dedup();
    out
}
