//! Surface-group formulas for the five chain twists.
//!
//! The model is the hyperelliptic double cover. `π₁(Σ₂)` is the even-length
//! subgroup of the orbifold group `Γ = ⟨e1..e6 | e_i², e1⋯e6⟩` of the sphere
//! with six cone points of order two, via
//!
//! ```text
//! a1 = e6 e1    b1 = e2 e6    a2 = e2 e1 e6 e3    b2 = e4 e6 e1 e2
//! ```
//!
//! and back by pairing letters, `e_i e_j = g_i g_j⁻¹` with `g6 = 1` and
//! `g1 = a1'`, `g2 = b1`, `g3 = a2' b1 a1`, `g4 = b2 b1 a1`, `g5 = b2 a2 b1 a1`.
//! The half-twist swapping cone points `i, i+1` acts on `Γ` by
//! `e_i ↦ e_i e_{i+1} e_i`, `e_{i+1} ↦ e_i`; its lift is the twist `ζ_i` about
//! the curve over the arc joining those points. Conjugating by this Γ-level
//! recipe can shift every relation by an inner automorphism, which is
//! invisible in the mapping class group; the presentation suite in
//! [`super::validate_presentation`] certifies the table.
//!
//! The chain curves have homology classes (basis `a1, b1, a2, b2`)
//! `c1 = a1 + b1`, `c2 = a1 - a2`, `c3 = a2 + b2`, `c4 = a2`, `c5 = a1 + b1 + a2 + b2`.

use super::automorphism::{MCGAutomorphism, Realization};
use crate::surface::{SurfaceLetter, SurfaceWord};
use std::sync::OnceLock;

/// Orbifold letters `e1..e6` are `0..6`.
type OrbWord = Vec<u8>;

fn to_orbifold(l: SurfaceLetter) -> OrbWord {
    let w: OrbWord = match l.generator() {
        0 => vec![5, 0],
        1 => vec![1, 5],
        2 => vec![1, 0, 5, 2],
        _ => vec![3, 5, 0, 1],
    };
    // Every e_i is an involution, so inverses are reversals.
    if l.is_inverse() {
        w.into_iter().rev().collect()
    } else {
        w
    }
}

fn g_word(i: u8) -> SurfaceWord {
    let s = match i {
        0 => "a1'",
        1 => "b1",
        2 => "a2' b1 a1",
        3 => "b2 b1 a1",
        4 => "b2 a2 b1 a1",
        _ => "",
    };
    s.parse().expect("static word")
}

fn half_twist(i: usize, inverse: bool, e: u8) -> OrbWord {
    let (p, q) = (i as u8, i as u8 + 1);
    match (e == p, e == q, inverse) {
        (true, _, false) => vec![p, q, p],
        (_, true, false) => vec![p],
        (true, _, true) => vec![q],
        (_, true, true) => vec![q, p, q],
        _ => vec![e],
    }
}

fn orbifold_reduce(w: impl IntoIterator<Item = u8>) -> OrbWord {
    let mut out: OrbWord = Vec::new();
    for e in w {
        if out.last() == Some(&e) {
            out.pop();
        } else {
            out.push(e);
        }
    }
    out
}

fn twist_images(i: usize, inverse: bool) -> MCGAutomorphism {
    let images = SurfaceWord::generators().map(|x| {
        let orb = to_orbifold(x.letters()[0]);
        let moved = orbifold_reduce(orb.into_iter().flat_map(|e| half_twist(i, inverse, e)));
        assert!(moved.len() % 2 == 0, "half-twists preserve the even subgroup");
        let mut w = SurfaceWord::empty();
        for pair in moved.chunks(2) {
            w = w.concat(&g_word(pair[0])).concat(&g_word(pair[1]).inverse());
        }
        w
    });
    MCGAutomorphism::new(images)
}

/// Realizations of `ζ1..ζ5` (index 0 is `ζ1`).
pub(crate) fn twist_table() -> &'static [Realization; 5] {
    static TABLE: OnceLock<[Realization; 5]> = OnceLock::new();
    TABLE.get_or_init(|| {
        std::array::from_fn(|i| Realization { forward: twist_images(i, false), backward: twist_images(i, true) })
    })
}

/// The induced automorphism of the positive twist `ζ_i`, `i` in `1..=5`.
pub fn twist_action(i: u8) -> MCGAutomorphism {
    assert!((1..=5).contains(&i), "chain twist index out of range");
    twist_table()[i as usize - 1].forward.clone()
}

/// Homology classes of the chain curves.
pub const CHAIN_CLASSES: [[i64; 4]; 5] =
    [[1, 1, 0, 0], [1, 0, -1, 0], [0, 0, 1, 1], [0, 0, 1, 0], [1, 1, 1, 1]];
