//! The genus-2 surface group `⟨a1, b1, a2, b2 | [a1,b1][a2,b2]⟩`.
//!
//! Words are solved with Dehn's algorithm: the relator is small-cancellation
//! (every piece has length 1), so a word is trivial exactly when repeatedly
//! replacing long relator fragments by their short complements empties it.
//! Commutators are `[x,y] = x y x⁻¹ y⁻¹`.

mod conjugacy;
pub(crate) mod dehn;

pub use conjugacy::{
    conjugator, conjugator_with, cyclic_reduce, inner_witness, inner_witness_with,
    DEFAULT_SLACK,
};
pub use dehn::{dehn_reduce, free_reduce, is_identity};

use std::fmt;
use std::str::FromStr;

/// One of `a1 b1 a2 b2` or an inverse, packed as `2 * generator + inverted`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceLetter(u8);

impl SurfaceLetter {
    pub const A1: Self = Self(0);
    pub const B1: Self = Self(2);
    pub const A2: Self = Self(4);
    pub const B2: Self = Self(6);

    /// `generator` in `0..4` for `a1, b1, a2, b2`.
    pub fn new(generator: u8, inverse: bool) -> Self {
        assert!(generator < 4, "surface generator index out of range");
        Self(generator << 1 | inverse as u8)
    }

    pub fn generator(self) -> u8 {
        self.0 >> 1
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn inverse(self) -> Self {
        Self(self.0 ^ 1)
    }

    pub fn code(self) -> u8 {
        self.0
    }

    pub(crate) fn from_code(code: u8) -> Self {
        debug_assert!(code < 8);
        Self(code)
    }

    pub fn sign(self) -> i64 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }
}

const NAMES: [&str; 4] = ["a1", "b1", "a2", "b2"];

impl fmt::Display for SurfaceLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(NAMES[self.generator() as usize])?;
        if self.is_inverse() {
            f.write_str("'")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SurfaceLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite word in the surface generators. No reduction is implied.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceWord(Vec<SurfaceLetter>);

impl SurfaceWord {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn from_letters(letters: Vec<SurfaceLetter>) -> Self {
        Self(letters)
    }

    pub fn letter(l: SurfaceLetter) -> Self {
        Self(vec![l])
    }

    /// The relator `a1 b1 a1' b1' a2 b2 a2' b2'`.
    pub fn relator() -> Self {
        use SurfaceLetter as L;
        Self(vec![
            L::A1,
            L::B1,
            L::A1.inverse(),
            L::B1.inverse(),
            L::A2,
            L::B2,
            L::A2.inverse(),
            L::B2.inverse(),
        ])
    }

    /// The four generators in the order `a1, b1, a2, b2`.
    pub fn generators() -> [Self; 4] {
        [0, 1, 2, 3].map(|g| Self::letter(SurfaceLetter::new(g, false)))
    }

    pub fn letters(&self) -> &[SurfaceLetter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<SurfaceLetter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Plain concatenation, without reduction.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Self(v)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        Self(v)
    }

    /// Exponent sums of `a1, b1, a2, b2`.
    pub fn abelianize(&self) -> [i64; 4] {
        let mut out = [0; 4];
        for l in &self.0 {
            out[l.generator() as usize] += l.sign();
        }
        out
    }
}

impl fmt::Display for SurfaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SurfaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for SurfaceWord {
    type Err = crate::Error;

    /// Whitespace-separated `a1 b1 a2 b2`, inverses marked with a trailing `'`.
    /// A lone `1` is the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, inverse) = match tok.strip_suffix('\'') {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let g = NAMES
                .iter()
                .position(|&n| n == name)
                .ok_or_else(|| crate::Error::parse(1, format!("unknown surface letter `{tok}`")))?;
            out.push(SurfaceLetter::new(g as u8, inverse));
        }
        Ok(Self(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let w: SurfaceWord = "a1 b1' a2 b2'".parse().unwrap();
        assert_eq!(w.to_string(), "a1 b1' a2 b2'");
        assert_eq!(w.len(), 4);
        assert!("a3".parse::<SurfaceWord>().is_err());
    }

    #[test]
    fn inverse_reverses_and_flips() {
        let w: SurfaceWord = "a1 b1'".parse().unwrap();
        assert_eq!(w.inverse().to_string(), "b1 a1'");
    }

    #[test]
    fn relator_abelianizes_to_zero() {
        assert_eq!(SurfaceWord::relator().abelianize(), [0; 4]);
        let w: SurfaceWord = "a1 a1 b2'".parse().unwrap();
        assert_eq!(w.abelianize(), [2, 0, 0, -1]);
    }
}
