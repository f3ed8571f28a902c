//! Sphere braid group words on six points and their lift to the mapping class
//! group.
//!
//! `x_i` is the half-twist exchanging points `i` and `i+1`. The lift sends it
//! to `ζ_i`; it is a homomorphism onto `Map₂` modulo the hyperelliptic
//! involution `I`, so braid equality is decided modulo the center.

mod named;
mod verify;

pub use named::{braid_factorization, builtin_braid_factorizations, delta};
pub use verify::{
    nodal_tangency_certificate, triple_point_certificates, verify_b0_identities, verify_b2_identities, B0Report,
    B2Report, TriplePointCertificates,
};

use crate::error::{BoundExceeded, Error, Result};
use crate::factorization::{Direction, Factorization, Move, TwistBase, TwistFactor};
use crate::mcg::{mcg_equal, mcg_equal_mod_center, named as words, MCGLetter, MCGWord};
use crate::syntax::parse_word;
use std::fmt;
use std::str::FromStr;

/// `x_index` or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: u8,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn new(index: u8, inverse: bool) -> Self {
        assert!((1..=5).contains(&index), "braid generator index out of range");
        Self { index, inverse }
    }

    pub fn inv(self) -> Self {
        Self { inverse: !self.inverse, ..self }
    }
}

/// A word in `x1..x5`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: Vec<BraidLetter>) -> Self {
        Self { letters }
    }

    /// The positive word `x_{i1} x_{i2} …`.
    pub fn positive(indices: &[u8]) -> Self {
        Self::from_letters(indices.iter().map(|&i| BraidLetter::new(i, false)).collect())
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self::from_letters([&self.letters[..], &other.letters[..]].concat())
    }

    pub fn inverse(&self) -> Self {
        Self::from_letters(self.letters.iter().rev().map(|l| l.inv()).collect())
    }

    /// `c⁻¹ · self · c`.
    pub fn conjugate(&self, c: &Self) -> Self {
        c.inverse().concat(self).concat(c)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}{}", l.index, if l.inverse { "'" } else { "" })?;
        }
        Ok(())
    }
}

fn named_braid_word(name: &str) -> Option<Vec<(u8, bool)>> {
    (name == "delta").then(|| delta().letters.iter().map(|l| (l.index, l.inverse)).collect())
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Tokens `x1..x5`, inverses `x1'`, groups with `^n` and `'`, and `delta`.
    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_word(s, 'x', &named_braid_word).map_err(|m| Error::parse(1, m))?;
        Ok(Self::from_letters(letters.into_iter().map(|(i, inv)| BraidLetter::new(i, inv)).collect()))
    }
}

/// The positive half-twist `(x_base)_c = c⁻¹ x_base c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidFactor {
    pub base: u8,
    pub conjugator: BraidWord,
}

impl BraidFactor {
    pub fn new(base: u8, conjugator: BraidWord) -> Self {
        assert!((1..=5).contains(&base), "braid generator index out of range");
        Self { base, conjugator }
    }

    pub fn generator(base: u8) -> Self {
        Self::new(base, BraidWord::empty())
    }

    pub fn expand(&self) -> BraidWord {
        BraidWord::positive(&[self.base]).conjugate(&self.conjugator)
    }

    pub fn conjugated_by(&self, w: &BraidWord) -> Self {
        Self::new(self.base, self.conjugator.concat(w))
    }
}

/// An ordered list of positive half-twists.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BraidFactorization {
    factors: Vec<BraidFactor>,
}

impl BraidFactorization {
    pub fn new(factors: Vec<BraidFactor>) -> Self {
        Self { factors }
    }

    /// One generator factor per letter of a positive word.
    pub fn from_chain(indices: &[u8]) -> Self {
        Self::new(indices.iter().map(|&i| BraidFactor::generator(i)).collect())
    }

    pub fn factors(&self) -> &[BraidFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self::new([&self.factors[..], &other.factors[..]].concat())
    }

    pub fn repeat(&self, n: usize) -> Self {
        Self::new((0..n).flat_map(|_| self.factors.iter().cloned()).collect())
    }

    /// Every factor conjugated by `w`.
    pub fn conjugate(&self, w: &BraidWord) -> Self {
        Self::new(self.factors.iter().map(|f| f.conjugated_by(w)).collect())
    }

    pub fn product(&self) -> BraidWord {
        self.factors.iter().fold(BraidWord::empty(), |acc, f| acc.concat(&f.expand()))
    }

    /// The Hurwitz move with the same conventions as on `Map₂` factorizations:
    /// R at `i` sends `(a, b)` to `(b, a_b)`, L sends it to `(b_{a⁻¹}, a)`.
    pub fn apply_move(&self, m: Move) -> Result<Self> {
        let i = m.position;
        if i == 0 || i >= self.factors.len() {
            return Err(Error::MoveOutOfRange { position: i, len: self.factors.len() });
        }
        let (a, b) = (&self.factors[i - 1], &self.factors[i]);
        let (x, y) = match m.direction {
            Direction::R => (b.clone(), a.conjugated_by(&b.expand())),
            Direction::L => (b.conjugated_by(&a.expand().inverse()), a.clone()),
        };
        let mut out = self.factors.clone();
        out[i - 1] = x;
        out[i] = y;
        Ok(Self::new(out))
    }

    /// Text form, one factor per line under an `alphabet x` header.
    pub fn to_text(&self) -> String {
        let mut s = String::from("alphabet x\n");
        for f in &self.factors {
            if f.conjugator.is_empty() {
                s.push_str(&format!("x{}\n", f.base));
            } else {
                s.push_str(&format!("x{} @ {}\n", f.base, f.conjugator));
            }
        }
        s
    }
}

/// Parses the factorization file format over `x1..x5`; builtin names such as
/// `B0_nodal` expand in place.
pub fn parse_braid_factorization(text: &str) -> Result<BraidFactorization> {
    use crate::factorization::io::{parse_raw, RawFactor, Syntax};
    let named_fact = |name: &str| {
        braid_factorization(name).map(|b| {
            b.factors
                .iter()
                .map(|f| RawFactor {
                    base: Some(f.base),
                    conjugator: f.conjugator.letters.iter().map(|l| (l.index, l.inverse)).collect(),
                })
                .collect()
        })
    };
    let syntax = Syntax { prefix: 'x', named_word: &named_braid_word, named_factorization: &named_fact, allow_sigma: false };
    let raw = parse_raw(text, &syntax)?;
    Ok(BraidFactorization::new(
        raw.into_iter()
            .map(|r| {
                let conj = r.conjugator.into_iter().map(|(i, inv)| BraidLetter::new(i, inv)).collect();
                BraidFactor::new(r.base.expect("sigma is not a braid base"), BraidWord::from_letters(conj))
            })
            .collect(),
    ))
}

impl FromStr for BraidFactorization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid_factorization(s)
    }
}

/// Letterwise `x_i ↦ ζ_i`.
pub fn lift(w: &BraidWord) -> MCGWord {
    MCGWord::from_letters(w.letters.iter().map(|l| MCGLetter::new(l.index, l.inverse)).collect())
}

/// `u = v` in `B₆(S²)` modulo the center, decided through the lift.
pub fn braid_equal_mod_center(u: &BraidWord, v: &BraidWord) -> Result<bool, BoundExceeded> {
    mcg_equal_mod_center(&lift(u), &lift(v))
}

/// The central value of a lifted product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CentralProduct {
    One,
    Hyperelliptic,
}

/// A lifted factorization with its product classified.
#[derive(Clone)]
pub struct Lifted {
    pub factorization: Factorization,
    /// `None` when the product is neither `1` nor `I`, as for a piece of a
    /// monodromy factorization rather than the whole.
    pub product: Option<CentralProduct>,
}

fn lift_factor(f: &BraidFactor) -> TwistFactor {
    TwistFactor::new(TwistBase::Chain(f.base), lift(&f.conjugator))
}

/// Factorwise lift of each half-twist to the chain twist with the lifted
/// conjugator; the product is classified as `1`, `I`, or neither.
pub fn lift_factorization(b: &BraidFactorization) -> Result<Lifted, BoundExceeded> {
    let factorization = Factorization::new(b.factors.iter().map(lift_factor).collect());
    let p = factorization.product();
    let product = if mcg_equal(&p, &MCGWord::empty())? {
        Some(CentralProduct::One)
    } else if mcg_equal(&p, &words::hyperelliptic())? {
        Some(CentralProduct::Hyperelliptic)
    } else {
        None
    };
    Ok(Lifted { factorization, product })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::named as fnamed;

    fn bw(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn lift_is_letterwise() {
        assert_eq!(lift(&bw("x1")).to_string(), MCGWord::generator(1).to_string());
        assert!(lift(&BraidWord::empty()).is_empty());
        let (u, v) = (bw("x1 x3'"), bw("x5 x2"));
        assert_eq!(lift(&u.concat(&v)), lift(&u).concat(&lift(&v)));
    }

    #[test]
    fn sphere_relation_lifts_to_hyperelliptic() {
        let w = bw("x1 x2 x3 x4 x5^2 x4 x3 x2 x1");
        assert!(mcg_equal(&lift(&w), &words::hyperelliptic()).unwrap());
        assert!(braid_equal_mod_center(&w, &BraidWord::empty()).unwrap());
    }

    #[test]
    fn braid_relations_hold_mod_center() {
        assert!(braid_equal_mod_center(&bw("x1 x2 x1"), &bw("x2 x1 x2")).unwrap());
        for i in 1..=5u8 {
            for j in 1..=5u8 {
                let (a, b) = (BraidWord::positive(&[i]), BraidWord::positive(&[j]));
                if i.abs_diff(j) >= 2 {
                    assert!(braid_equal_mod_center(&a.concat(&b), &b.concat(&a)).unwrap());
                }
                if i.abs_diff(j) == 1 {
                    let aba = a.concat(&b).concat(&a);
                    let bab = b.concat(&a).concat(&b);
                    assert!(braid_equal_mod_center(&aba, &bab).unwrap());
                }
            }
        }
        assert!(braid_equal_mod_center(&bw("(x1 x2 x3 x4 x5)^6"), &BraidWord::empty()).unwrap());
        assert!(!braid_equal_mod_center(&bw("x1"), &bw("x2")).unwrap());
    }

    #[test]
    fn lifted_products_are_central() {
        let t = lift_factorization(&BraidFactorization::from_chain(&[1, 2, 3, 4, 5, 5, 4, 3, 2, 1])).unwrap();
        assert_eq!(t.product, Some(CentralProduct::Hyperelliptic));
        assert!(t.factorization.factorwise_equal(&fnamed::t()).unwrap());
        let b1 = lift_factorization(&braid_factorization("B1").unwrap()).unwrap();
        assert_eq!(b1.product, Some(CentralProduct::One));
        assert!(b1.factorization.factorwise_equal(&fnamed::w1()).unwrap());
        let b0 = lift_factorization(&braid_factorization("B0_tangency").unwrap()).unwrap();
        assert_eq!(b0.product, Some(CentralProduct::One));
        assert!(b0.factorization.factorwise_equal(&fnamed::w0()).unwrap());
        let nodal = lift_factorization(&braid_factorization("B0_nodal").unwrap()).unwrap();
        assert_eq!(nodal.product, Some(CentralProduct::One));
        let piece = lift_factorization(&braid_factorization("B2_nodes").unwrap()).unwrap();
        assert_eq!(piece.product, None);
    }

    #[test]
    fn moves_commute_with_lifting() {
        let b = braid_factorization("B2_nodes").unwrap();
        for i in 1..b.len() {
            for m in [Move::r(i), Move::l(i)] {
                let lifted_after = lift_factorization(&b.apply_move(m).unwrap()).unwrap().factorization;
                let after_lift = lift_factorization(&b).unwrap().factorization.apply_move(i, m.direction).unwrap();
                assert!(lifted_after.factorwise_equal(&after_lift).unwrap(), "{m:?}");
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let b = braid_factorization("B2_nodes").unwrap();
        assert_eq!(parse_braid_factorization(&b.to_text()).unwrap(), b);
        let named: BraidFactorization = "alphabet x\nB1 @ x2\n".parse().unwrap();
        assert_eq!(named, braid_factorization("B1").unwrap().conjugate(&bw("x2")));
        assert!(parse_braid_factorization("alphabet z\nx1\n").is_err());
        assert!(parse_braid_factorization("sigma\n").is_err());
        assert_eq!(bw("delta").len(), 12);
    }
}
