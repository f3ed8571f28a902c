//! Ordered tuples of positive Dehn twists and the Hurwitz moves between them.
//!
//! Positions are 1-based. The R-move at `i` sends `(τ_i, τ_{i+1})` to
//! `(τ_{i+1}, (τ_i)_{τ_{i+1}})` and the L-move at `i` sends it to
//! `((τ_{i+1})_{τ_i⁻¹}, τ_i)`; they are mutually inverse and preserve the product.

mod certificate;
mod factor;
pub(crate) mod io;
pub mod named;
mod replay;
mod search;

pub use certificate::{block, carry, carry_block, invert as certificate_inverse, shift, CertStep, Direction, HurwitzCertificate, MacroCall, Move};
pub use factor::{TwistBase, TwistFactor, TwistKind};
pub use io::parse_factorization;
pub use replay::{check_certificate, replay, replay_with, Interner};
pub use search::{bounded_search, SearchOutcome};

use crate::error::{BoundExceeded, Error, Result};
use crate::mcg::{generates_s6, MCGWord};
use std::fmt;

#[derive(Clone, Default)]
pub struct Factorization {
    factors: Vec<TwistFactor>,
}

impl Factorization {
    pub fn new(factors: Vec<TwistFactor>) -> Self {
        Self { factors }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Chain twists `ζ_{i₁} ζ_{i₂} ⋯` with empty conjugators.
    pub fn from_chain(indices: &[u8]) -> Self {
        Self::new(indices.iter().map(|&i| TwistFactor::chain(i)).collect())
    }

    pub fn factors(&self) -> &[TwistFactor] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<TwistFactor> {
        self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The factor at 1-based position `i`.
    pub fn get(&self, i: usize) -> Option<&TwistFactor> {
        i.checked_sub(1).and_then(|j| self.factors.get(j))
    }

    pub fn concat(&self, other: &Factorization) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Self { factors }
    }

    pub fn repeat(&self, n: usize) -> Self {
        Self { factors: (0..n).flat_map(|_| self.factors.iter().cloned()).collect() }
    }

    /// Applies one Hurwitz move in place.
    pub fn apply_in_place(&mut self, m: Move) -> Result<()> {
        let i = m.position;
        if i == 0 || i >= self.factors.len() {
            return Err(Error::MoveOutOfRange { position: i, len: self.factors.len() });
        }
        let (a, b) = (&self.factors[i - 1], &self.factors[i]);
        let (x, y) = match m.direction {
            Direction::R => (b.clone(), a.conjugated_by(b)),
            Direction::L => (b.conjugated_by_inverse(a), a.clone()),
        };
        self.factors[i - 1] = x;
        self.factors[i] = y;
        Ok(())
    }

    pub fn apply_move(&self, i: usize, direction: Direction) -> Result<Self> {
        let mut out = self.clone();
        out.apply_in_place(Move { position: i, direction })?;
        Ok(out)
    }

    pub(crate) fn set(&mut self, i: usize, f: TwistFactor) {
        self.factors[i - 1] = f;
    }

    /// The product `τ1 ⋯ τr` as a word.
    pub fn product(&self) -> MCGWord {
        self.factors.iter().fold(MCGWord::empty(), |acc, f| acc.concat(&f.expand()))
    }

    /// Whether the product is trivial in the mapping class group.
    pub fn is_identity(&self) -> std::result::Result<bool, BoundExceeded> {
        crate::mcg::mcg_equal(&self.product(), &MCGWord::empty())
    }

    pub fn count_separating(&self) -> usize {
        self.factors.iter().filter(|f| f.is_separating()).count()
    }

    /// Whether the S₆ images of the factors generate S₆.
    pub fn is_transitive(&self) -> bool {
        let perms: Vec<_> = self.factors.iter().map(|f| f.s6_image()).collect();
        generates_s6(&perms)
    }

    /// Simultaneous conjugation `(F)_γ`.
    pub fn conjugate(&self, gamma: &MCGWord) -> Self {
        Self { factors: self.factors.iter().map(|f| f.conjugated_by_word(gamma)).collect() }
    }

    /// Factorwise equality in the mapping class group.
    pub fn factorwise_equal(&self, other: &Factorization) -> std::result::Result<bool, BoundExceeded> {
        if self.len() != other.len() {
            return Ok(false);
        }
        for (a, b) in self.factors.iter().zip(&other.factors) {
            if !a.equals(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The index (1-based) of the rightmost separating factor.
    pub fn rightmost_separating(&self) -> Option<usize> {
        self.factors.iter().rposition(|f| f.is_separating()).map(|j| j + 1)
    }
}

/// `F · (F')_φ`, the monodromy of a fiber sum glued by `φ`.
pub fn fiber_sum(f: &Factorization, g: &Factorization, phi: &MCGWord) -> Factorization {
    f.concat(&g.conjugate(phi))
}

pub fn conjugate_factorization(f: &Factorization, gamma: &MCGWord) -> Factorization {
    f.conjugate(gamma)
}

impl fmt::Display for Factorization {
    /// One factor per line, in the file syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.factors {
            writeln!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| format!("({x})")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcg::mcg_equal;

    #[test]
    fn r_then_l_restores() {
        let f = Factorization::from_chain(&[1, 2, 3, 2]);
        for i in 1..f.len() {
            let g = f.apply_move(i, Direction::R).unwrap().apply_move(i, Direction::L).unwrap();
            assert!(g.factorwise_equal(&f).unwrap());
            let h = f.apply_move(i, Direction::L).unwrap().apply_move(i, Direction::R).unwrap();
            assert!(h.factorwise_equal(&f).unwrap());
        }
    }

    #[test]
    fn moves_preserve_product_as_words() {
        let f = Factorization::from_chain(&[1, 3, 2, 5]);
        let g = f.apply_move(2, Direction::R).unwrap().apply_move(1, Direction::L).unwrap();
        assert_eq!(g.product().free_reduce(), f.product().free_reduce());
        assert!(mcg_equal(&g.product(), &f.product()).unwrap());
    }

    #[test]
    fn commuting_r_move() {
        let f = Factorization::from_chain(&[1, 3]);
        let g = f.apply_move(1, Direction::R).unwrap();
        assert_eq!(g.get(1).unwrap().to_string(), "z3");
        assert!(g.get(2).unwrap().equals(&TwistFactor::chain(1)).unwrap());
    }

    #[test]
    fn out_of_range_moves_fail() {
        let f = Factorization::from_chain(&[1, 2]);
        assert!(f.apply_move(0, Direction::R).is_err());
        assert!(f.apply_move(2, Direction::R).is_err());
    }

    #[test]
    fn counts_and_transitivity() {
        assert!(!Factorization::empty().is_transitive());
        assert!(Factorization::from_chain(&[1, 2, 3, 4, 5]).is_transitive());
        assert!(!Factorization::from_chain(&[1, 2, 4, 5]).is_transitive());
        let f = Factorization::new(vec![TwistFactor::sigma(), TwistFactor::chain(2)]);
        assert_eq!(f.count_separating(), 1);
        assert_eq!(f.rightmost_separating(), Some(1));
    }

    #[test]
    fn conjugation_conjugates_product() {
        let f = Factorization::from_chain(&[1, 2]);
        let g: MCGWord = "z3 z4'".parse().unwrap();
        let lhs = f.conjugate(&g).product();
        let rhs = f.product().conjugate(&g);
        assert!(mcg_equal(&lhs, &rhs).unwrap());
        assert!(f.conjugate(&MCGWord::empty()).factorwise_equal(&f).unwrap());
    }
}
