use super::{Factorization, HurwitzCertificate, Move, TwistFactor};
use crate::error::{BoundExceeded, Result};
use crate::mcg::{Fingerprint, Perm6, SymplecticMatrix};
use std::collections::HashMap;

/// Candidates kept per invariant key.
const BUCKET: usize = 12;

/// Replaces factors by previously seen equal factors with shorter conjugators.
///
/// Hurwitz moves append to conjugators, so long certificates would otherwise
/// carry words that grow with every step. Each new factor is compared (by the
/// equality oracle) against a few known factors with the same S₆, Sp₄ and S₅
/// fingerprint images;
/// on a match the known, shorter representative is used instead. The table is
/// seeded with `ζ1..ζ5` and `σ`.
pub struct Interner {
    table: HashMap<(Perm6, SymplecticMatrix, Fingerprint), Vec<TwistFactor>>,
}

impl Default for Interner {
    fn default() -> Self {
        Self::new()
    }
}

impl Interner {
    pub fn new() -> Self {
        let mut me = Self { table: HashMap::new() };
        for i in 1..=5 {
            me.insert(TwistFactor::chain(i));
        }
        me.insert(TwistFactor::sigma());
        me
    }

    fn insert(&mut self, f: TwistFactor) {
        let bucket = self.table.entry(Self::slot(&f)).or_default();
        let at = bucket.partition_point(|g| g.conjugator().len() <= f.conjugator().len());
        bucket.insert(at, f);
        bucket.truncate(BUCKET);
    }

    fn slot(f: &TwistFactor) -> (Perm6, SymplecticMatrix, Fingerprint) {
        let (p, s) = f.key();
        (p, s, f.fingerprint())
    }

    pub fn intern(&mut self, f: TwistFactor) -> std::result::Result<TwistFactor, BoundExceeded> {
        if let Some(bucket) = self.table.get(&Self::slot(&f)) {
            for g in bucket {
                if g.conjugator().len() <= f.conjugator().len() && g.equals(&f)? {
                    return Ok(g.clone());
                }
            }
        }
        let f = f.detached();
        self.insert(f.clone());
        Ok(f)
    }
}

/// Applies `moves` to `f`, interning the two touched factors after each move.
pub(crate) fn apply_interned(
    f: &mut Factorization,
    moves: &[Move],
    interner: &mut Interner,
) -> Result<()> {
    for &m in moves {
        f.apply_in_place(m)?;
        for i in [m.position, m.position + 1] {
            let x = interner.intern(f.get(i).expect("in range").clone())?;
            f.set(i, x);
        }
    }
    Ok(())
}

/// Replays the certificate on `f`, expanding macros one at a time.
pub fn replay(f: &Factorization, cert: &HurwitzCertificate) -> Result<Factorization> {
    let mut interner = Interner::new();
    replay_with(f, cert, &mut interner)
}

pub fn replay_with(f: &Factorization, cert: &HurwitzCertificate, interner: &mut Interner) -> Result<Factorization> {
    let mut cur = f.clone();
    for step in &cert.steps {
        apply_interned(&mut cur, &step.expand()?, interner)?;
    }
    Ok(cur)
}

/// Replays `cert` on `f` and compares the result factorwise with `g`.
/// Out-of-range positions are an error (a malformed certificate), not `false`.
pub fn check_certificate(f: &Factorization, cert: &HurwitzCertificate, g: &Factorization) -> Result<bool> {
    let out = replay(f, cert)?;
    Ok(out.factorwise_equal(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::Direction;

    #[test]
    fn empty_certificate_checks_against_itself() {
        let f = Factorization::from_chain(&[1, 2, 3]);
        assert!(check_certificate(&f, &HurwitzCertificate::new(), &f).unwrap());
    }

    #[test]
    fn single_move_against_hand_computed_result() {
        let f = Factorization::from_chain(&[1, 2]);
        let g = Factorization::new(vec![
            TwistFactor::chain(2),
            TwistFactor::new(super::super::TwistBase::Chain(1), "z2".parse().unwrap()),
        ]);
        let cert = HurwitzCertificate::from_moves([Move::r(1)]);
        assert!(check_certificate(&f, &cert, &g).unwrap());
        assert!(!check_certificate(&f, &HurwitzCertificate::new(), &g).unwrap());
        let bad = HurwitzCertificate::from_moves([Move::r(2)]);
        assert!(check_certificate(&f, &bad, &g).is_err());
    }

    #[test]
    fn interning_shortens_equal_factors() {
        // The braid relation: R at 1 then R at 2 turns (z1, z2, z1) into (z2, z1, z2).
        let f = Factorization::from_chain(&[1, 2, 1]);
        let out = replay(&f, &HurwitzCertificate::from_moves([Move::r(1), Move::r(2)])).unwrap();
        assert_eq!(format!("{out:?}"), "(z2) (z1) (z2)");
        let plain = f.apply_move(1, Direction::R).unwrap().apply_move(2, Direction::R).unwrap();
        assert!(plain.factorwise_equal(&out).unwrap());
    }
}
