use super::automorphism::Realization;
use super::invariants::{Perm6, SymplecticMatrix};
use super::twists::{twist_table, CHAIN_CLASSES};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

/// `ζ_index` or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MCGLetter {
    pub index: u8,
    pub inverse: bool,
}

impl MCGLetter {
    pub fn new(index: u8, inverse: bool) -> Self {
        assert!((1..=5).contains(&index), "generator index out of range");
        Self { index, inverse }
    }

    pub fn pos(index: u8) -> Self {
        Self::new(index, false)
    }

    pub fn neg(index: u8) -> Self {
        Self::new(index, true)
    }

    pub fn inv(self) -> Self {
        Self { index: self.index, inverse: !self.inverse }
    }
}

impl fmt::Display for MCGLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}{}", self.index, if self.inverse { "'" } else { "" })
    }
}

impl fmt::Debug for MCGLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Leaves below this size are merged when concatenated.
const LEAF_MERGE: usize = 64;

enum Kind {
    Leaf(Vec<MCGLetter>),
    Concat(MCGWord, MCGWord),
    Inverse(MCGWord),
}

struct Node {
    kind: Kind,
    len: usize,
    negatives: usize,
    images: OnceLock<(Perm6, SymplecticMatrix)>,
    realization: OnceLock<Arc<Realization>>,
}

/// A word in `ζ1..ζ5` and inverses, an element of the genus-2 mapping class group.
///
/// Stored as an immutable rope so that the long conjugators produced by
/// Hurwitz moves share structure; homomorphic images and the surface-group
/// realization are memoized per node. Words act left to right: in `u v`, `u`
/// acts first. Words are never reduced implicitly.
#[derive(Clone)]
pub struct MCGWord(Arc<Node>);

impl MCGWord {
    fn node(kind: Kind) -> Self {
        let (len, negatives) = match &kind {
            Kind::Leaf(v) => (v.len(), v.iter().filter(|l| l.inverse).count()),
            Kind::Concat(a, b) => (a.len() + b.len(), a.0.negatives + b.0.negatives),
            Kind::Inverse(a) => (a.len(), a.len() - a.0.negatives),
        };
        Self(Arc::new(Node { kind, len, negatives, images: OnceLock::new(), realization: OnceLock::new() }))
    }

    pub fn empty() -> Self {
        static EMPTY: OnceLock<MCGWord> = OnceLock::new();
        EMPTY.get_or_init(|| Self::node(Kind::Leaf(Vec::new()))).clone()
    }

    pub fn from_letters(letters: Vec<MCGLetter>) -> Self {
        Self::node(Kind::Leaf(letters))
    }

    /// Positive generators, e.g. `positive(&[1, 2])` is `ζ1 ζ2`.
    pub fn positive(indices: &[u8]) -> Self {
        Self::from_letters(indices.iter().map(|&i| MCGLetter::pos(i)).collect())
    }

    pub fn generator(index: u8) -> Self {
        Self::positive(&[index])
    }

    pub fn len(&self) -> usize {
        self.0.len
    }

    pub fn is_empty(&self) -> bool {
        self.0.len == 0
    }

    pub fn is_positive(&self) -> bool {
        self.0.negatives == 0
    }

    pub fn negative_count(&self) -> usize {
        self.0.negatives
    }

    /// Concatenation; shares structure unless both sides are short.
    pub fn concat(&self, other: &Self) -> Self {
        if other.is_empty() {
            return self.clone();
        }
        if self.is_empty() {
            return other.clone();
        }
        if self.len() + other.len() <= LEAF_MERGE {
            let mut v = self.letters();
            v.extend(other.letters());
            return Self::from_letters(v);
        }
        Self::node(Kind::Concat(self.clone(), other.clone()))
    }

    pub fn concat_all<'a>(words: impl IntoIterator<Item = &'a MCGWord>) -> Self {
        words.into_iter().fold(Self::empty(), |acc, w| acc.concat(w))
    }

    pub fn inverse(&self) -> Self {
        match &self.0.kind {
            Kind::Inverse(inner) => inner.clone(),
            _ if self.len() <= LEAF_MERGE => {
                Self::from_letters(self.letters().into_iter().rev().map(MCGLetter::inv).collect())
            }
            _ => Self::node(Kind::Inverse(self.clone())),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::empty(), |acc, _| acc.concat(&base))
    }

    /// `c⁻¹ self c`.
    pub fn conjugate(&self, c: &Self) -> Self {
        c.inverse().concat(self).concat(c)
    }

    /// Flattens the rope. Cost is linear in [`len`](Self::len).
    pub fn letters(&self) -> Vec<MCGLetter> {
        let mut out = Vec::with_capacity(self.len());
        // (node, inverted)
        let mut stack: Vec<(&MCGWord, bool)> = vec![(self, false)];
        while let Some((w, inv)) = stack.pop() {
            match &w.0.kind {
                Kind::Leaf(v) => {
                    if inv {
                        out.extend(v.iter().rev().map(|l| l.inv()));
                    } else {
                        out.extend_from_slice(v);
                    }
                }
                Kind::Concat(a, b) => {
                    if inv {
                        stack.push((a, true));
                        stack.push((b, true));
                    } else {
                        stack.push((b, false));
                        stack.push((a, false));
                    }
                }
                Kind::Inverse(a) => stack.push((a, !inv)),
            }
        }
        out
    }

    /// Cancels adjacent `ζ_i ζ_i⁻¹` pairs.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<MCGLetter> = Vec::with_capacity(self.len());
        for l in self.letters() {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self::from_letters(out)
    }

    /// The image in S₆ under `ζ_i ↦ (i, i+1)`.
    pub fn s6_image(&self) -> Perm6 {
        self.images().0
    }

    /// The action on `H₁(Σ₂; ℤ)`.
    pub fn sp4_image(&self) -> SymplecticMatrix {
        self.images().1
    }

    fn images(&self) -> (Perm6, SymplecticMatrix) {
        *self.0.images.get_or_init(|| match &self.0.kind {
            Kind::Leaf(v) => v.iter().fold((Perm6::IDENTITY, SymplecticMatrix::IDENTITY), |(p, m), l| {
                (p.then(&letter_perm(*l)), m.then(&letter_matrix(*l)))
            }),
            Kind::Concat(a, b) => {
                let (pa, ma) = a.images();
                let (pb, mb) = b.images();
                (pa.then(&pb), ma.then(&mb))
            }
            Kind::Inverse(a) => {
                let (p, m) = a.images();
                (p.inverse(), m.inverse())
            }
        })
    }

    /// The surface-group automorphism and its inverse, memoized.
    pub fn realization(&self) -> Arc<Realization> {
        self.0
            .realization
            .get_or_init(|| {
                Arc::new(match &self.0.kind {
                    Kind::Leaf(v) => v.iter().fold(Realization::identity(), |acc, l| {
                        let t = &twist_table()[l.index as usize - 1];
                        if l.inverse {
                            acc.then(&t.inverse())
                        } else {
                            acc.then(t)
                        }
                    }),
                    Kind::Concat(a, b) => a.realization().then(&b.realization()),
                    Kind::Inverse(a) => a.realization().inverse(),
                })
            })
            .clone()
    }
}

fn letter_perm(l: MCGLetter) -> Perm6 {
    Perm6::transposition(l.index)
}

fn letter_matrix(l: MCGLetter) -> SymplecticMatrix {
    static TABLE: OnceLock<[(SymplecticMatrix, SymplecticMatrix); 5]> = OnceLock::new();
    let t = TABLE.get_or_init(|| {
        CHAIN_CLASSES.map(|c| {
            let m = SymplecticMatrix::transvection(c);
            (m, m.inverse())
        })
    });
    let (m, inv) = t[l.index as usize - 1];
    if l.inverse {
        inv
    } else {
        m
    }
}

impl PartialEq for MCGWord {
    /// Letter-by-letter equality (not equality in the group; see
    /// [`mcg_equal`](super::mcg_equal)).
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.len() == other.len() && self.letters() == other.letters())
    }
}

impl Eq for MCGWord {}

impl Default for MCGWord {
    fn default() -> Self {
        Self::empty()
    }
}

impl fmt::Display for MCGWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MCGWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for MCGWord {
    type Err = crate::Error;

    /// Tokens `z1..z5`, inverses `z1'`, groups `( … )` with `^n` and `'`, and
    /// the named elements `I T sigma rho Phi`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let named = |name: &str| super::named::named_word(name).map(|w| w.letters().iter().map(|l| (l.index, l.inverse)).collect());
        let letters = crate::syntax::parse_word(s, 'z', &named).map_err(|m| crate::Error::parse(1, m))?;
        Ok(Self::from_letters(letters.into_iter().map(|(i, inv)| MCGLetter::new(i, inv)).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> MCGWord {
        s.parse().unwrap()
    }

    #[test]
    fn rope_flattening_matches_flat_words() {
        let a = w("z1 z2 z3'").pow(30);
        let b = w("z5 z4'").pow(40);
        let ab = a.concat(&b);
        assert_eq!(ab.len(), 170);
        assert_eq!(ab.inverse().letters(), {
            let mut v: Vec<MCGLetter> = ab.letters().into_iter().rev().map(MCGLetter::inv).collect();
            v.shrink_to_fit();
            v
        });
        assert_eq!(ab.inverse().inverse(), ab);
        assert_eq!(ab.negative_count(), 30 + 40);
        assert!(!ab.is_positive());
    }

    #[test]
    fn free_reduce_cancels() {
        assert!(w("z1 z2 z2' z1'").free_reduce().is_empty());
        assert_eq!(w("z1 z1'").free_reduce(), MCGWord::empty());
    }

    #[test]
    fn images_are_homomorphic_across_the_rope() {
        let a = w("z1 z2 z3' z4 z5'").pow(20);
        let b = w("z2 z5 z1'").pow(25);
        let flat = MCGWord::from_letters(a.concat(&b).letters());
        assert_eq!(a.concat(&b).s6_image(), flat.s6_image());
        assert_eq!(a.concat(&b).sp4_image(), flat.sp4_image());
        assert_eq!(a.concat(&b).inverse().sp4_image(), flat.sp4_image().inverse());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(w("z1 z2'").to_string(), "z1 z2'");
        assert_eq!(MCGWord::empty().to_string(), "1");
        assert_eq!(w("(z1 z2)^6").len(), 12);
    }
}
