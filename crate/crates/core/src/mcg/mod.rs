//! The genus-2 mapping class group on generators `ζ1..ζ5`.
//!
//! Elements are words ([`MCGWord`]); they act on the surface group through
//! [`realize`], and two words are equal exactly when the realization of
//! `u v⁻¹` is an inner automorphism. Cheap images in S₆ and Sp₄(ℤ) filter most
//! comparisons first; a check against a few representations into S₅ catches
//! most of the rest before any conjugacy search.

mod automorphism;
mod invariants;
pub mod named;
mod quotients;
mod twists;
mod word;

pub use automorphism::{MCGAutomorphism, Realization};
pub use quotients::Fingerprint;
pub use invariants::{generates_s6, intersection, Perm6, SymplecticMatrix};
pub use twists::{twist_action, CHAIN_CLASSES};
pub use word::{MCGLetter, MCGWord};

use crate::error::BoundExceeded;
use crate::surface;
use std::sync::atomic::{AtomicUsize, Ordering};

static SLACK: AtomicUsize = AtomicUsize::new(surface::DEFAULT_SLACK);

/// Sets the extra room of the centralizer window used by every equality test
/// in this process. The command-line `--slack` flag lands here.
pub fn set_conjugacy_slack(slack: usize) {
    SLACK.store(slack, Ordering::Relaxed);
}

pub fn conjugacy_slack() -> usize {
    SLACK.load(Ordering::Relaxed)
}

/// The automorphism induced by `w`, composed left to right with eagerly
/// Dehn-reduced images: `realize(u v)(x) = realize(v)(realize(u)(x))`.
pub fn realize(w: &MCGWord) -> MCGAutomorphism {
    w.realization().forward.clone()
}

pub fn s6_image(w: &MCGWord) -> Perm6 {
    w.s6_image()
}

pub fn sp4_image(w: &MCGWord) -> SymplecticMatrix {
    w.sp4_image()
}

/// The S₅ fingerprint of a realization; see [`Fingerprint`].
pub fn fingerprint(r: &Realization) -> Fingerprint {
    quotients::fingerprint(&r.forward.images)
}

/// Whether the realization `r` is inner, i.e. `r` is trivial in the mapping class group.
pub fn is_inner(r: &Realization) -> Result<bool, BoundExceeded> {
    if quotients::obstructs_inner(&r.forward.images) {
        return Ok(false);
    }
    Ok(surface::inner_witness_with(&r.forward.images, conjugacy_slack())?.is_some())
}

/// Decides `u = v` in the mapping class group.
pub fn mcg_equal(u: &MCGWord, v: &MCGWord) -> Result<bool, BoundExceeded> {
    if u.s6_image() != v.s6_image() || u.sp4_image() != v.sp4_image() {
        return Ok(false);
    }
    is_inner(&u.realization().then(&v.realization().inverse()))
}

/// Decides `u = v` or `u = v I`.
pub fn mcg_equal_mod_center(u: &MCGWord, v: &MCGWord) -> Result<bool, BoundExceeded> {
    Ok(mcg_equal(u, v)? || mcg_equal(u, &v.concat(&named::hyperelliptic()))?)
}

/// A positive word equal to `ζ_i⁻¹`: rotate `I² = 1` so that it starts with
/// `ζ_i` and drop that letter, leaving 19 letters.
pub fn positive_inverse(i: u8) -> MCGWord {
    let sq: Vec<u8> = [1, 2, 3, 4, 5, 5, 4, 3, 2, 1].repeat(2);
    let j = sq.iter().position(|&x| x == i).expect("every generator occurs in I");
    let rotated: Vec<u8> = sq[j + 1..].iter().chain(&sq[..j]).copied().collect();
    MCGWord::positive(&rotated)
}

/// Replaces every inverse letter by [`positive_inverse`].
pub fn positive_form(w: &MCGWord) -> MCGWord {
    if w.is_positive() {
        return w.clone();
    }
    let mut out = Vec::with_capacity(w.len() + 18 * w.negative_count());
    for l in w.letters() {
        if l.inverse {
            out.extend(positive_inverse(l.index).letters());
        } else {
            out.push(l);
        }
    }
    MCGWord::from_letters(out)
}

/// One checked relation of the presentation.
#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub name: String,
    pub outcome: Result<bool, BoundExceeded>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, Ok(true))
    }
}

fn check(name: impl Into<String>, u: &MCGWord, v: &MCGWord) -> RelationCheck {
    RelationCheck { name: name.into(), outcome: mcg_equal(u, v) }
}

/// Checks every defining relation of the presentation through [`mcg_equal`]:
/// far commutation, braid relations, `(ζ1⋯ζ5)⁶ = 1`, centrality of `I`,
/// `I² = 1`, and the three expressions of `σ`.
pub fn validate_presentation() -> Vec<RelationCheck> {
    let z = MCGWord::generator;
    let e = MCGWord::empty();
    let mut out = Vec::new();
    for i in 1..=5u8 {
        for j in i + 2..=5 {
            out.push(check(format!("z{i} z{j} = z{j} z{i}"), &z(i).concat(&z(j)), &z(j).concat(&z(i))));
        }
    }
    for i in 1..5u8 {
        out.push(check(
            format!("z{i} z{} z{i} = z{} z{i} z{}", i + 1, i + 1, i + 1),
            &MCGWord::positive(&[i, i + 1, i]),
            &MCGWord::positive(&[i + 1, i, i + 1]),
        ));
    }
    out.push(check("(z1 z2 z3 z4 z5)^6 = 1", &named::chain().pow(6), &e));
    let i_word = named::hyperelliptic();
    for k in 1..=5u8 {
        out.push(check(format!("I z{k} = z{k} I"), &i_word.concat(&z(k)), &z(k).concat(&i_word)));
    }
    out.push(check("I^2 = 1", &i_word.pow(2), &e));
    let s = named::sigma();
    let half = MCGWord::positive(&[1, 2]).pow(3).concat(&MCGWord::positive(&[4, 5]).pow(3));
    out.push(check("(z1 z2)^6 = (z4 z5)^6", &s, &MCGWord::positive(&[4, 5]).pow(6)));
    out.push(check("(z1 z2)^6 = (z1 z2)^3 (z4 z5)^3 I", &s, &half.concat(&i_word)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> MCGWord {
        s.parse().unwrap()
    }

    #[test]
    fn presentation_holds() {
        for c in validate_presentation() {
            assert!(c.passed(), "{}: {:?}", c.name, c.outcome);
        }
    }

    #[test]
    fn hyperelliptic_negates_homology() {
        assert_eq!(sp4_image(&w("I")), SymplecticMatrix::IDENTITY.negate());
        assert_eq!(realize(&w("I")).abelianize(), SymplecticMatrix::IDENTITY.negate());
        assert!(s6_image(&w("I")).is_identity());
        assert_eq!(surface::inner_witness(&realize(&w("I")).images).unwrap(), None);
    }

    #[test]
    fn sigma_is_homologically_trivial_but_not_trivial() {
        assert_eq!(sp4_image(&w("sigma")), SymplecticMatrix::IDENTITY);
        assert!(s6_image(&w("sigma")).is_identity());
        assert!(!mcg_equal(&w("sigma"), &MCGWord::empty()).unwrap());
        assert!(!mcg_equal(&w("I"), &MCGWord::empty()).unwrap());
    }

    #[test]
    fn distinct_generators_differ() {
        assert!(!mcg_equal(&w("z1"), &w("z2")).unwrap());
        assert!(mcg_equal(&w("z1 z1'"), &MCGWord::empty()).unwrap());
        assert_eq!(realize(&w("z1 z1'")), MCGAutomorphism::identity());
        assert_eq!(s6_image(&w("z1")), Perm6::transposition(1));
    }

    #[test]
    fn positive_inverses() {
        for i in 1..=5 {
            let p = positive_inverse(i);
            assert_eq!(p.len(), 19);
            assert!(p.is_positive());
            assert!(mcg_equal(&MCGWord::generator(i).concat(&p), &MCGWord::empty()).unwrap());
        }
        assert_eq!(positive_form(&w("z1 z2' z3")).len(), 2 + 19);
        assert_eq!(positive_form(&w("z1'")), positive_inverse(1));
    }

    #[test]
    fn abelianized_realization_matches_matrices() {
        let words = ["z1 z2 z3", "z5' z2 z4 z4", "z3 z1' z5 z2' z4", "sigma z3 rho'"];
        for s in words {
            let x = w(s);
            assert_eq!(realize(&x).abelianize(), sp4_image(&x), "{s}");
        }
    }
}
