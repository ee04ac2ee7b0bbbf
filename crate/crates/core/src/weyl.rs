//! Elements of the infinite dihedral group generated by `s₀`, `s₁`.
//!
//! Every element other than the identity has exactly one reduced word, and it
//! alternates, so an element is determined by its first letter and length.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct WeylElement {
    len: u32,
    /// Leftmost letter; meaningless for the identity, kept at 0.
    first: u8,
}

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement { len: 0, first: 0 };

    pub fn generator(i: u8) -> Self {
        assert!(i < 2, "generator index must be 0 or 1");
        WeylElement { len: 1, first: i }
    }

    /// Alternating word of length `len` starting (on the left) with `first`.
    pub fn alternating(first: u8, len: u32) -> Self {
        assert!(first < 2, "generator index must be 0 or 1");
        if len == 0 {
            WeylElement::IDENTITY
        } else {
            WeylElement { len, first }
        }
    }

    /// Reduces an arbitrary word (letters left to right).
    pub fn from_word(word: &[u8]) -> Result<Self> {
        word.iter().try_fold(WeylElement::IDENTITY, |acc, &i| {
            if i > 1 {
                return Err(Error::Parse(format!("generator s{i} does not exist")));
            }
            Ok(acc * WeylElement::generator(i))
        })
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    pub fn first_letter(&self) -> Option<u8> {
        (self.len > 0).then_some(self.first)
    }

    pub fn last_letter(&self) -> Option<u8> {
        (self.len > 0).then(|| self.letter(self.len - 1))
    }

    fn letter(&self, index: u32) -> u8 {
        if index.is_multiple_of(2) {
            self.first
        } else {
            1 - self.first
        }
    }

    /// Letters from left to right.
    pub fn letters(&self) -> impl DoubleEndedIterator<Item = u8> + '_ {
        (0..self.len).map(|i| self.letter(i))
    }

    /// ε(w) = (−1)^ℓ(w).
    pub fn sign(&self) -> i8 {
        if self.len.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> Self {
        match self.last_letter() {
            None => WeylElement::IDENTITY,
            Some(last) => WeylElement::alternating(last, self.len),
        }
    }

    /// The translation `T_{nα∨} = (s₀s₁)ⁿ` of A₁⁽¹⁾.
    pub fn translation_a1(n: i64) -> Self {
        let len = u32::try_from(2 * n.unsigned_abs()).expect("translation too long");
        WeylElement::alternating(if n >= 0 { 0 } else { 1 }, len)
    }

    /// All elements of length at most `max_len`, ordered by length then first letter.
    pub fn all_up_to(max_len: u32) -> Vec<WeylElement> {
        let mut out = vec![WeylElement::IDENTITY];
        for len in 1..=max_len {
            out.push(WeylElement::alternating(0, len));
            out.push(WeylElement::alternating(1, len));
        }
        out
    }
}

impl Mul for WeylElement {
    type Output = WeylElement;

    fn mul(self, rhs: WeylElement) -> WeylElement {
        let (Some(last), Some(first)) = (self.last_letter(), rhs.first_letter()) else {
            return if self.is_identity() { rhs } else { self };
        };
        if last != first {
            return WeylElement::alternating(self.first, self.len + rhs.len);
        }
        // s_i s_i cancels, and the cancellation propagates through the whole overlap
        use std::cmp::Ordering::*;
        match self.len.cmp(&rhs.len) {
            Greater => WeylElement::alternating(self.first, self.len - rhs.len),
            Less => WeylElement::alternating(rhs.letter(self.len), rhs.len - self.len),
            Equal => WeylElement::IDENTITY,
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        for letter in self.letters() {
            write!(f, "s{letter}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn products_cancel() {
        let s0 = WeylElement::generator(0);
        let s1 = WeylElement::generator(1);
        assert_eq!(s0 * s0, WeylElement::IDENTITY);
        assert_eq!((s0 * s1).to_string(), "s0s1");
        assert_eq!((s0 * s1) * (s1 * s0), WeylElement::IDENTITY);
        let w = WeylElement::from_word(&[0, 1, 0, 0, 1]).unwrap();
        assert_eq!(w, WeylElement::from_word(&[0]).unwrap());
        assert!(WeylElement::from_word(&[2]).is_err());
    }

    #[test]
    fn inverse_reverses() {
        let w = WeylElement::alternating(0, 4);
        assert_eq!(w.to_string(), "s0s1s0s1");
        assert_eq!(w.inverse().to_string(), "s1s0s1s0");
        assert_eq!(w * w.inverse(), WeylElement::IDENTITY);
    }

    #[test]
    fn all_up_to_counts() {
        assert_eq!(WeylElement::all_up_to(3).len(), 7);
        assert_eq!(WeylElement::all_up_to(0), vec![WeylElement::IDENTITY]);
    }

    fn word() -> impl Strategy<Value = Vec<u8>> {
        prop::collection::vec(0u8..2, 0..24)
    }

    proptest! {
        #[test]
        fn reduction_matches_stack_cancellation(w in word()) {
            let mut stack: Vec<u8> = Vec::new();
            for &l in &w {
                if stack.last() == Some(&l) { stack.pop(); } else { stack.push(l); }
            }
            let reduced = WeylElement::from_word(&w).unwrap();
            prop_assert_eq!(reduced.letters().collect::<Vec<_>>(), stack);
            // parity survives rewriting
            prop_assert_eq!(reduced.sign(), if w.len() % 2 == 0 { 1 } else { -1 });
        }

        #[test]
        fn multiplication_is_associative(a in word(), b in word(), c in word()) {
            let (a, b, c) = (
                WeylElement::from_word(&a).unwrap(),
                WeylElement::from_word(&b).unwrap(),
                WeylElement::from_word(&c).unwrap(),
            );
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!((a * b).inverse(), b.inverse() * a.inverse());
        }
    }
}
