use crate::factorization::{carry, named, shift, Factorization, HurwitzCertificate, MacroCall};
use crate::mcg::MCGWord;
use std::fmt;
use std::str::FromStr;

/// The factorizations invariant under simultaneous conjugation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invariant {
    T,
    W0,
    W1,
}

impl Invariant {
    pub fn factorization(self) -> Factorization {
        match self {
            Invariant::T => named::t(),
            Invariant::W0 => named::w0(),
            Invariant::W1 => named::w1(),
        }
    }

    pub fn factor_count(self) -> usize {
        match self {
            Invariant::T => 10,
            Invariant::W0 => 20,
            Invariant::W1 => 30,
        }
    }

    /// Position of the first `ζ_i`; it is `i` in all three.
    fn first(self, i: u8) -> usize {
        i as usize
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Invariant {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "T" => Ok(Invariant::T),
            "W0" => Ok(Invariant::W0),
            "W1" => Ok(Invariant::W1),
            _ => Err(crate::Error::parse(1, format!("expected T, W0 or W1, found `{s}`"))),
        }
    }
}

/// `(F)_τ ∼ F` for a factorization `F` of length `len` with central product,
/// given `prefix` turning `F` into `τ·F'`.
///
/// Replaying `prefix` on `(F)_τ` gives `τ·(F')_τ`. Moving `τ` to the end
/// unchanged strips the conjugation: `F'·τ`. Carrying it back to the front
/// conjugates it by `(F')⁻¹`, which commutes with `τ` because
/// `τ·F'` is central: `τ·F'`. The inverse of `prefix` then returns `F`.
pub fn conjugation_invariance_certificate(len: usize, prefix: &HurwitzCertificate) -> HurwitzCertificate {
    let mut c = prefix.clone();
    c.extend_moves(shift(1, len));
    c.extend_moves(carry(len, 1));
    c.append(&prefix.inverse());
    c
}

/// `(X)_{ζ_i} ∼ X`, bringing the first `ζ_i` of `X` to the front.
fn generator_certificate(x: Invariant, i: u8) -> HurwitzCertificate {
    let prefix = HurwitzCertificate::from_moves(shift(x.first(i), 1));
    conjugation_invariance_certificate(x.factor_count(), &prefix)
}

/// `(X)_γ ∼ X`: one generator certificate per letter of `γ`, leftmost letter
/// first; an inverse letter uses the inverse certificate, since that takes
/// `(X)_{ζ_i⁻¹}` to `X`.
pub fn invariance_certificate(x: Invariant, gamma: &MCGWord) -> HurwitzCertificate {
    let mut c = HurwitzCertificate::new();
    for l in gamma.letters() {
        let g = generator_certificate(x, l.index);
        c.append(&if l.inverse { g.inverse() } else { g });
    }
    c
}

/// The macro standing for [`invariance_certificate`] acting after `offset` factors.
pub fn invariance_macro(offset: usize, x: Invariant, gamma: &MCGWord) -> MacroCall {
    let mut args = vec![offset.to_string(), x.to_string()];
    args.extend(gamma.letters().iter().map(|l| l.to_string()));
    MacroCall::new("invariance", args)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::check_certificate;

    fn invariant(x: Invariant, gamma: &str) -> bool {
        let g: MCGWord = gamma.parse().unwrap();
        let f = x.factorization();
        check_certificate(&f.conjugate(&g), &invariance_certificate(x, &g), &f).unwrap()
    }

    #[test]
    fn empty_word_gives_empty_certificate() {
        assert!(invariance_certificate(Invariant::W0, &MCGWord::empty()).is_empty());
    }

    #[test]
    fn each_generator_and_its_inverse() {
        for i in 1..=5 {
            assert!(invariant(Invariant::T, &format!("z{i}")));
            assert!(invariant(Invariant::T, &format!("z{i}'")));
        }
        assert!(invariant(Invariant::W0, "z2"));
        assert!(invariant(Invariant::W1, "z3 z5'"));
    }

    #[test]
    fn toy_identity_factorization() {
        // ζ1 followed by the nineteen letters of a positive ζ1⁻¹.
        let mut idx = vec![1u8];
        idx.extend(crate::mcg::positive_inverse(1).letters().iter().map(|l| l.index));
        let f = Factorization::from_chain(&idx);
        let tau = crate::factorization::TwistFactor::chain(1);
        let cert = conjugation_invariance_certificate(f.len(), &HurwitzCertificate::new());
        let conj = f.conjugate(&tau.expand());
        let out = crate::factorization::replay(&conj, &cert).unwrap();
        assert!(out.factorwise_equal(&f).unwrap());
        assert_eq!(out.count_separating(), 0);
    }
}
