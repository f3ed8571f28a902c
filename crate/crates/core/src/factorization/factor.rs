use crate::error::BoundExceeded;
use crate::mcg::{self, named, Fingerprint, MCGWord, Perm6, Realization, SymplecticMatrix};
use std::fmt;
use std::sync::{Arc, OnceLock};

/// The two kinds of twists in a relatively minimal genus-2 factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistKind {
    Nonseparating,
    Separating,
}

/// The twist a factor is conjugated from: a chain twist `ζ_i` or `σ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwistBase {
    Chain(u8),
    Sigma,
}

impl TwistBase {
    pub fn kind(self) -> TwistKind {
        match self {
            TwistBase::Chain(_) => TwistKind::Nonseparating,
            TwistBase::Sigma => TwistKind::Separating,
        }
    }

    pub fn word(self) -> MCGWord {
        match self {
            TwistBase::Chain(i) => MCGWord::generator(i),
            TwistBase::Sigma => named::sigma(),
        }
    }
}

impl fmt::Display for TwistBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistBase::Chain(i) => write!(f, "z{i}"),
            TwistBase::Sigma => f.write_str("sigma"),
        }
    }
}

/// How a factor was obtained, so its realization can be built from its
/// parents instead of from the (possibly very long) conjugator word.
enum Derivation {
    Word,
    /// `(of)_{by}` or, with `inverse`, `(of)_{by⁻¹}`.
    Conjugate { of: TwistFactor, by: TwistFactor, inverse: bool },
}

struct FactorData {
    perm: Perm6,
    sp: SymplecticMatrix,
    realization: OnceLock<Arc<Realization>>,
    fingerprint: OnceLock<Fingerprint>,
    derivation: Derivation,
}

/// A positive Dehn twist `(base)_c = c⁻¹ · base · c`.
///
/// The kind is fixed by the base and survives every Hurwitz move. The S₆ and
/// Sp₄ images are computed on construction; the surface-group realization is
/// computed on demand.
#[derive(Clone)]
pub struct TwistFactor {
    base: TwistBase,
    conjugator: MCGWord,
    data: Arc<FactorData>,
}

impl TwistFactor {
    pub fn new(base: TwistBase, conjugator: MCGWord) -> Self {
        if let TwistBase::Chain(i) = base {
            assert!((1..=5).contains(&i), "chain twist index out of range");
        }
        let w = base.word();
        let perm = conjugator.s6_image().inverse().then(&w.s6_image()).then(&conjugator.s6_image());
        let sp = conjugator.sp4_image().inverse().then(&w.sp4_image()).then(&conjugator.sp4_image());
        let data = FactorData { perm, sp, realization: OnceLock::new(), fingerprint: OnceLock::new(), derivation: Derivation::Word };
        Self { base, conjugator, data: Arc::new(data) }
    }

    /// The chain twist `ζ_i`.
    pub fn chain(i: u8) -> Self {
        Self::new(TwistBase::Chain(i), MCGWord::empty())
    }

    /// The separating twist `σ`.
    pub fn sigma() -> Self {
        Self::new(TwistBase::Sigma, MCGWord::empty())
    }

    pub fn base(&self) -> TwistBase {
        self.base
    }

    pub fn conjugator(&self) -> &MCGWord {
        &self.conjugator
    }

    pub fn kind(&self) -> TwistKind {
        self.base.kind()
    }

    pub fn is_separating(&self) -> bool {
        self.kind() == TwistKind::Separating
    }

    /// `c⁻¹ · base · c` as a word.
    pub fn expand(&self) -> MCGWord {
        self.base.word().conjugate(&self.conjugator)
    }

    pub fn s6_image(&self) -> Perm6 {
        self.data.perm
    }

    pub fn sp4_image(&self) -> SymplecticMatrix {
        self.data.sp
    }

    /// Invariant key used for hashing: S₆ and Sp₄ images.
    pub fn key(&self) -> (Perm6, SymplecticMatrix) {
        (self.data.perm, self.data.sp)
    }

    fn derive(&self, by: &TwistFactor, inverse: bool) -> Self {
        let (bp, bm) = if inverse {
            (by.data.perm.inverse(), by.data.sp.inverse())
        } else {
            (by.data.perm, by.data.sp)
        };
        let perm = bp.inverse().then(&self.data.perm).then(&bp);
        let sp = bm.inverse().then(&self.data.sp).then(&bm);
        let step = if inverse { by.expand().inverse() } else { by.expand() };
        let data = FactorData {
            perm,
            sp,
            realization: OnceLock::new(),
            fingerprint: OnceLock::new(),
            derivation: Derivation::Conjugate { of: self.clone(), by: by.clone(), inverse },
        };
        Self { base: self.base, conjugator: self.conjugator.concat(&step), data: Arc::new(data) }
    }

    /// `(self)_{by}`.
    pub fn conjugated_by(&self, by: &TwistFactor) -> Self {
        self.derive(by, false)
    }

    /// `(self)_{by⁻¹}`.
    pub fn conjugated_by_inverse(&self, by: &TwistFactor) -> Self {
        self.derive(by, true)
    }

    /// `(self)_γ` for an arbitrary word.
    pub fn conjugated_by_word(&self, gamma: &MCGWord) -> Self {
        if gamma.is_empty() {
            return self.clone();
        }
        Self::new(self.base, self.conjugator.concat(gamma))
    }

    /// The surface-group realization, derived from the parents where possible.
    /// Ancestors are resolved with an explicit stack, so long move histories
    /// do not recurse.
    pub fn realization(&self) -> Arc<Realization> {
        if let Some(r) = self.data.realization.get() {
            return r.clone();
        }
        let mut stack: Vec<TwistFactor> = vec![self.clone()];
        while let Some(top) = stack.last().cloned() {
            if top.data.realization.get().is_some() {
                stack.pop();
                continue;
            }
            match &top.data.derivation {
                Derivation::Word => {
                    let r = match (top.base, top.conjugator.is_empty()) {
                        (base, true) => base.word().realization(),
                        (base, false) => {
                            Arc::new(base.word().realization().conjugated_by(&top.conjugator.realization()))
                        }
                    };
                    let _ = top.data.realization.set(r);
                    stack.pop();
                }
                Derivation::Conjugate { of, by, inverse } => {
                    match (of.data.realization.get(), by.data.realization.get()) {
                        (Some(a), Some(b)) => {
                            let c = if *inverse { b.inverse() } else { (**b).clone() };
                            let _ = top.data.realization.set(Arc::new(a.conjugated_by(&c)));
                            stack.pop();
                        }
                        (a, b) => {
                            if a.is_none() {
                                stack.push(of.clone());
                            }
                            if b.is_none() {
                                stack.push(by.clone());
                            }
                        }
                    }
                }
            }
        }
        self.data.realization.get().expect("resolved above").clone()
    }

    /// Image of the realization in finite quotients; see [`Fingerprint`].
    pub fn fingerprint(&self) -> Fingerprint {
        *self.data.fingerprint.get_or_init(|| mcg::fingerprint(&self.realization()))
    }

    /// Whether the two factors are the same twist in the mapping class group.
    pub fn equals(&self, other: &TwistFactor) -> Result<bool, BoundExceeded> {
        if self.kind() != other.kind() || self.key() != other.key() {
            return Ok(false);
        }
        if Arc::ptr_eq(&self.data, &other.data) {
            return Ok(true);
        }
        // Literally equal after free reduction: no realization needed.
        if self.base == other.base && self.conjugator.free_reduce() == other.conjugator.free_reduce() {
            return Ok(true);
        }
        if self.fingerprint() != other.fingerprint() {
            return Ok(false);
        }
        mcg::is_inner(&self.realization().then(&other.realization().inverse()))
    }

    /// Drops the derivation history, keeping only the base and conjugator.
    pub fn detached(&self) -> Self {
        let data = FactorData {
            perm: self.data.perm,
            sp: self.data.sp,
            realization: OnceLock::new(),
            fingerprint: self.data.fingerprint.clone(),
            derivation: Derivation::Word,
        };
        if let Some(r) = self.data.realization.get() {
            let _ = data.realization.set(r.clone());
        }
        Self { base: self.base, conjugator: self.conjugator.clone(), data: Arc::new(data) }
    }
}

impl fmt::Display for TwistFactor {
    /// `z3`, `sigma`, or `z1 @ z2 z3'` when conjugated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conjugator.is_empty() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{} @ {}", self.base, self.conjugator)
        }
    }
}

impl fmt::Debug for TwistFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_by_convention() {
        let f = TwistFactor::new(TwistBase::Chain(1), "z2".parse().unwrap());
        assert_eq!(f.expand().to_string(), "z2' z1 z2");
        assert_eq!(TwistFactor::chain(1).expand().to_string(), "z1");
    }

    #[test]
    fn far_twists_commute_through_conjugation() {
        let a = TwistFactor::chain(1);
        let b = TwistFactor::chain(3);
        let c = a.conjugated_by(&b);
        assert!(c.equals(&a).unwrap());
        assert!(!c.equals(&b).unwrap());
    }

    #[test]
    fn derived_invariants_match_word_invariants() {
        let a = TwistFactor::chain(2);
        let b = TwistFactor::chain(3);
        let c = a.conjugated_by(&b).conjugated_by_inverse(&TwistFactor::sigma());
        let direct = TwistFactor::new(c.base(), c.conjugator().clone());
        assert_eq!(c.key(), direct.key());
        assert!(c.equals(&direct).unwrap());
    }

    #[test]
    fn braid_relation_as_conjugation() {
        // (ζ1)_{ζ2 ζ1} = ζ2
        let f = TwistFactor::new(TwistBase::Chain(1), "z2 z1".parse().unwrap());
        assert!(f.equals(&TwistFactor::chain(2)).unwrap());
        assert!(!TwistFactor::chain(1).equals(&TwistFactor::sigma()).unwrap());
    }
}
