use super::invariance::{invariance_macro, Invariant};
use crate::factorization::{named, Factorization, HurwitzCertificate, MacroCall, Move, TwistFactor};
use crate::mcg::named as words;
use crate::rewrite::positive_rewrite;
use std::sync::OnceLock;

const REWRITE_NODES: usize = 2_000_000;

/// Moves turning `ζ1ζ2ζ1·Φ·ζ5ζ4ζ5` into `(ζ1ζ2ζ3ζ4ζ5)³`.
fn unfold_moves() -> Vec<Move> {
    let phi: Vec<u8> = words::phi().letters().iter().map(|l| l.index).collect();
    let src: Vec<u8> = [&[1u8, 2, 1][..], &phi, &[5, 4, 5]].concat();
    positive_rewrite(&src, &[1, 2, 3, 4, 5].repeat(3), REWRITE_NODES).expect("equal positive words")
}

/// `(ζ1ζ2)³(ζ4ζ5)³·T·W2 ∼ σ·W0·W1`, fifty-one factors on both sides.
///
/// Writing `A = (ζ1ζ2)³(ζ4ζ5)³`, the left side is `A·T·σ·Φ·Φ·T`.
/// 1. `σ` moves to the front unchanged; it commutes with `ζ1, ζ2, ζ4, ζ5`, so
///    `A` is untouched and only `T` becomes `(T)_σ`.
/// 2. `(T)_σ ∼ T` by invariance with `σ = (ζ1ζ2)⁶`.
/// 3. `T` moves left across `A` unchanged; `A` is conjugated by the central `I`.
/// 4. `A·Φ·Φ` becomes `W1`: blocks are carried across `Φ`, which swaps
///    `ζ1 ↔ ζ4` and `ζ2 ↔ ζ5`, leaving two copies of `ζ1ζ2ζ1·Φ·ζ5ζ4ζ5`; each
///    is rewritten to `(ζ1⋯ζ5)³` by braid and commutation moves.
/// 5. The last `T` moves left across `W1`, whose product is trivial.
pub fn sigma_exchange_certificate() -> HurwitzCertificate {
    static CERT: OnceLock<HurwitzCertificate> = OnceLock::new();
    CERT.get_or_init(|| {
        let unfold = unfold_moves();
        let mut c = HurwitzCertificate::new();
        c.push_macro(MacroCall::new("shift", [23, 1]));
        c.push_macro(invariance_macro(13, Invariant::T, &words::sigma()));
        c.push_macro(MacroCall::new("block", [14, 10, -12]));
        // σ T | ζ1ζ2ζ1ζ2ζ1ζ2 (12..17) ζ4ζ5ζ4ζ5ζ4ζ5 (18..23) Φ (24..32) Φ (33..41) | T
        c.push_macro(MacroCall::new("carry_block", [18, 6, 9]));
        c.push_macro(MacroCall::new("carry_block", [30, 3, 9]));
        // … Φ (18..26) ζ1ζ2ζ1 (27..29) Φ (30..38) ζ5ζ4ζ5 (39..41)
        c.extend_moves(unfold.iter().map(|m| m.shifted(26)));
        c.push_macro(MacroCall::new("carry_block", [15, 3, 9]));
        // ζ1ζ2ζ1 (12..14) Φ (15..23) ζ5ζ4ζ5 (24..26)
        c.extend_moves(unfold.iter().map(|m| m.shifted(11)));
        c.push_macro(MacroCall::new("block", [42, 10, -30]));
        c
    })
    .clone()
}

pub fn sigma_exchange_endpoints() -> (Factorization, Factorization) {
    let lhs = named::sigma_halves().concat(&named::t()).concat(&named::w2());
    let rhs = Factorization::new(vec![TwistFactor::sigma()]).concat(&named::w0()).concat(&named::w1());
    (lhs, rhs)
}
