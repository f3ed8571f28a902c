//! Stabilization: after fiber summing with enough copies of `W0`, every
//! identity factorization becomes `base·(W2)^m` with `base` free of
//! separating twists.

use super::{sigma_exchange_certificate, square_to_cube_certificate};
use crate::error::{Error, Result};
use crate::factorization::{
    block, carry, named, replay_with, shift, Factorization, HurwitzCertificate, Interner, MacroCall, Move,
    TwistBase, TwistFactor,
};
use crate::mcg::{positive_form, MCGWord};

/// A separating twist written as `(σ)_{φ⁻¹} = φ σ φ⁻¹`.
#[derive(Clone, Debug)]
pub struct SeparatingTwistPresentation {
    pub phi: MCGWord,
}

impl SeparatingTwistPresentation {
    /// `φ` with each `ζ_i⁻¹` spelled as nineteen positive letters.
    pub fn positive(&self) -> MCGWord {
        positive_form(&self.phi)
    }

    pub fn factor(&self) -> TwistFactor {
        TwistFactor::new(TwistBase::Sigma, self.phi.inverse())
    }
}

/// One elimination step: `F·(W0)^{n_used+4} ∼ reduced·W2`.
#[derive(Clone, Debug)]
pub struct Elimination {
    pub reduced: Factorization,
    pub n_used: usize,
    pub cert: HurwitzCertificate,
}

impl Elimination {
    pub fn endpoints(&self, f: &Factorization) -> (Factorization, Factorization) {
        (f.concat(&named::w0().repeat(self.n_used + 4)), self.reduced.concat(&named::w2()))
    }
}

/// `F·(W0)^n ∼ base·(W2)^m`, with `base` read as `(W0)^{n+k}·(W1)^ε` by
/// counting factors.
#[derive(Clone, Debug)]
pub struct StableForm {
    pub n: usize,
    pub k: usize,
    pub epsilon: u8,
    pub m: usize,
    pub base: Factorization,
    pub cert: HurwitzCertificate,
    /// Set when `base` is not literally `(W0)^{n+k}·(W1)^ε`. The last
    /// identification then rests on the external classification of transitive
    /// non-separating factorizations, not on a replayed certificate.
    pub base_oracle_flag: bool,
}

impl StableForm {
    pub fn endpoints(&self, f: &Factorization) -> (Factorization, Factorization) {
        (f.concat(&named::w0().repeat(self.n)), self.base.concat(&named::w2().repeat(self.m)))
    }

    /// `|F| + 20n = 20(n+k) + 30ε + 29m`.
    pub fn conserves(&self, original_len: usize) -> bool {
        original_len + 20 * self.n == 20 * (self.n + self.k) + 30 * self.epsilon as usize + 29 * self.m
    }
}

/// The smallest `n ≥ 0` with `n + k ≥ 3m/2 + 1`.
pub fn stabilization_threshold(k: usize, _epsilon: u8, m: usize) -> usize {
    (3 * m + 2).div_ceil(2).saturating_sub(k)
}

/// Reads `φ` off the stored conjugator, dropping leading letters that
/// commute with `σ` (those in `ζ1, ζ2, ζ4, ζ5`).
pub fn express_as_conjugate_of_sigma(f: &TwistFactor) -> Result<SeparatingTwistPresentation> {
    if f.base() != TwistBase::Sigma {
        return Err(Error::Precondition(format!("{f} is not separating")));
    }
    let letters = f.conjugator().letters();
    let skip = letters.iter().take_while(|l| l.index != 3).count();
    let c = MCGWord::from_letters(letters[skip..].to_vec());
    Ok(SeparatingTwistPresentation { phi: c.inverse().free_reduce() })
}

/// Certificate for `(σ)_{φ⁻¹}·(W0)ⁿ ∼ F″·σ`, one `W0` copy per letter of `φ`.
///
/// For `ζ_i` the copy is rearranged to lead with `ζ_i` and `σ̃` crosses it
/// with an `R` move. For `ζ_i⁻¹` the copy is rotated until `ζ_i` is last; the
/// other nineteen factors then multiply to `ζ_i⁻¹`, and `σ̃` crosses them with
/// `R` moves. Either way `σ̃` loses the first letter of `φ`.
pub fn transport_sigma_certificate(phi: &MCGWord, n: usize) -> Result<HurwitzCertificate> {
    if n < phi.len() {
        return Err(Error::Precondition(format!("need at least {} copies of W0, got {n}", phi.len())));
    }
    let mut c = HurwitzCertificate::new();
    for (k, letter) in phi.letters().iter().enumerate() {
        let p = 1 + 20 * k;
        let i = letter.index as usize;
        if letter.inverse {
            // The last occurrence of ζ_i sits at 21 - i; carrying a factor of an
            // identity factorization to the front leaves it unchanged.
            for _ in 1..i {
                c.extend_moves(carry(p + 20, p + 1));
            }
            c.extend_moves(carry(p, p + 19));
            c.push(Move::l(p + 19));
        } else {
            c.extend_moves(shift(p + i, p + 1));
            c.push(Move::r(p));
            c.extend_moves(shift(p + 1, p + 20));
        }
    }
    c.extend_moves(shift(1 + 20 * phi.len(), 1 + 20 * n));
    Ok(c)
}

/// Runs [`transport_sigma_certificate`] and returns `F″` with the certificate.
pub fn transport_sigma(phi: &MCGWord, n: usize) -> Result<(Factorization, HurwitzCertificate)> {
    let cert = transport_sigma_certificate(phi, n)?;
    let start = Factorization::new(vec![SeparatingTwistPresentation { phi: phi.clone() }.factor()])
        .concat(&named::w0().repeat(n));
    let out = replay_with(&start, &cert, &mut Interner::new())?;
    let mut factors = out.into_factors();
    factors.pop();
    Ok((Factorization::new(factors), cert))
}

/// Removes the rightmost separating twist of an identity factorization.
pub fn eliminate_separating(f: &Factorization) -> Result<Elimination> {
    eliminate_with(f, &mut Interner::new())
}

fn eliminate_with(f: &Factorization, interner: &mut Interner) -> Result<Elimination> {
    let s = f
        .rightmost_separating()
        .ok_or_else(|| Error::Precondition("no separating factor".into()))?;
    let r = f.len();
    let phi = express_as_conjugate_of_sigma(f.get(s).expect("in range"))?.phi;
    let n = phi.len();
    let after = r - s;

    // The W0 copies are brought next to σ̃ rather than σ̃ to the end: the
    // factors after σ̃ are then conjugated by trivial products only and keep
    // their curves, instead of all being twisted around σ̃.
    let mut cert = HurwitzCertificate::new();
    if after > 0 {
        cert.push_macro(MacroCall::new("block", [r as i64 + 1, 20 * (n as i64 + 4), -(after as i64)]));
    }
    cert.append(&square_to_cube_certificate().inverse().shifted(s + 20 * (n + 1))?);
    cert.append(&transport_sigma_certificate(&phi, n)?.shifted(s - 1)?);
    let o = s + 20 * n - 1;
    cert.append(&sigma_exchange_certificate().inverse().shifted(o)?);
    cert.push_macro(MacroCall::new("block", [o as i64 + 23, 29, 30]));
    if after > 0 {
        cert.push_macro(MacroCall::new("block", [o as i64 + 53, 29, after as i64]));
    }

    let out = replay_with(&f.concat(&named::w0().repeat(n + 4)), &cert, interner)?;
    let mut factors = out.into_factors();
    let tail = Factorization::new(factors.split_off(r + 20 * n + 51));
    if !tail.factorwise_equal(&named::w2())? {
        return Err(Error::Precondition("elimination did not end in W2".into()));
    }
    Ok(Elimination { reduced: Factorization::new(factors), n_used: n, cert })
}

/// Stabilizes an identity factorization; see [`StableForm`].
pub fn stable_reduce(f: &Factorization) -> Result<StableForm> {
    if !f.is_identity()? {
        return Err(Error::NotIdentity(format!("product of {} factors is not trivial", f.len())));
    }
    let mut interner = Interner::new();
    let mut steps = Vec::new();
    let mut cur = f.clone();
    while cur.count_separating() > 0 {
        let e = eliminate_with(&cur, &mut interner)?;
        cur = e.reduced.clone();
        steps.push(e);
    }
    let m = steps.len();
    let extra = usize::from(!cur.is_transitive());
    let n = steps.iter().map(|e| e.n_used + 4).sum::<usize>() + extra;

    let mut cert = HurwitzCertificate::new();
    let mut remaining = n - extra;
    for e in &steps {
        cert.append(&e.cert);
        remaining -= e.n_used + 4;
        if remaining > 0 {
            cert.extend_moves(block(e.reduced.len() + 1, 29, 20 * remaining as i64));
        }
    }
    let mut base = cur;
    if extra == 1 {
        cert.extend_moves(block(base.len() + 29 * m + 1, 20, -29 * m as i64));
        base = base.concat(&named::w0());
    }

    let rest = f.len() as i64 - 29 * m as i64;
    if rest < 0 || rest % 10 != 0 || rest == 10 {
        return Err(Error::Precondition(format!("{rest} factors left cannot be 20k + 30ε")));
    }
    let epsilon = u8::from(rest % 20 == 10);
    let k = ((rest - 30 * epsilon as i64) / 20) as usize;
    let literal = named::w0().repeat(n + k).concat(&named::w1().repeat(epsilon as usize));
    let base_oracle_flag = !base.factorwise_equal(&literal)?;
    Ok(StableForm { n, k, epsilon, m, base, cert, base_oracle_flag })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::check_certificate;

    #[test]
    fn threshold_examples() {
        assert_eq!(stabilization_threshold(0, 0, 0), 1);
        assert_eq!(stabilization_threshold(5, 0, 2), 0);
        assert_eq!(stabilization_threshold(0, 0, 2), 4);
        assert_eq!(stabilization_threshold(0, 1, 1), 3);
    }

    #[test]
    fn presentation_strips_commuting_prefix() {
        let f = TwistFactor::new(TwistBase::Sigma, "z1 z2' z3 z4".parse().unwrap());
        let p = express_as_conjugate_of_sigma(&f).unwrap();
        assert_eq!(p.phi, "z4' z3'".parse().unwrap());
        assert!(p.factor().equals(&f).unwrap());
        assert!(express_as_conjugate_of_sigma(&TwistFactor::chain(1)).is_err());
        let sigma = express_as_conjugate_of_sigma(&TwistFactor::sigma()).unwrap();
        assert!(sigma.phi.is_empty());
        let f = TwistFactor::new(TwistBase::Sigma, "z3".parse().unwrap());
        let p = express_as_conjugate_of_sigma(&f).unwrap();
        assert_eq!(p.positive().len(), 19);
        assert!(p.positive().is_positive());
    }

    #[test]
    fn transport_single_letter() {
        let phi = MCGWord::positive(&[3]);
        let (rest, cert) = transport_sigma(&phi, 1).unwrap();
        assert_eq!(rest.len(), 20);
        assert_eq!(rest.count_separating(), 0);
        let start = Factorization::new(vec![SeparatingTwistPresentation { phi }.factor()]).concat(&named::w0());
        let end = rest.concat(&Factorization::new(vec![TwistFactor::sigma()]));
        assert!(check_certificate(&start, &cert, &end).unwrap());
        assert!(transport_sigma(&MCGWord::positive(&[3, 3]), 1).is_err());
        for phi in ["z3'", "z5' z2 z3'", "z1' z4'"] {
            let phi: MCGWord = phi.parse().unwrap();
            let n = phi.len() + 1;
            let (rest, cert) = transport_sigma(&phi, n).unwrap();
            let start = Factorization::new(vec![SeparatingTwistPresentation { phi }.factor()])
                .concat(&named::w0().repeat(n));
            let end = rest.concat(&Factorization::new(vec![TwistFactor::sigma()]));
            assert!(check_certificate(&start, &cert, &end).unwrap());
        }
        let (empty, cert) = transport_sigma(&MCGWord::empty(), 0).unwrap();
        assert!(empty.is_empty() && cert.expand().unwrap().is_empty());
    }

    #[test]
    fn eliminate_w2() {
        let w2 = named::w2();
        let e = eliminate_separating(&w2).unwrap();
        assert_eq!(e.reduced.count_separating(), 0);
        assert_eq!(e.reduced.len(), w2.len() + 20 * (e.n_used + 4) - 29);
        assert!(e.reduced.is_identity().unwrap());
        let (lhs, rhs) = e.endpoints(&w2);
        assert!(check_certificate(&lhs, &e.cert, &rhs).unwrap());
    }

    #[test]
    fn basic_stable_forms() {
        for (f, want) in [(named::w0(), (0, 1, 0)), (named::w1(), (0, 0, 1)), (named::w2(), (1, 0, 0))] {
            let s = stable_reduce(&f).unwrap();
            assert_eq!((s.m, s.k, s.epsilon), want);
            assert!(s.conserves(f.len()));
            let (lhs, rhs) = s.endpoints(&f);
            assert!(check_certificate(&lhs, &s.cert, &rhs).unwrap());
        }
    }

    #[test]
    fn rejects_non_identity() {
        let f = Factorization::from_chain(&[1, 2]);
        assert!(matches!(stable_reduce(&f), Err(Error::NotIdentity(_))));
    }
}
