use super::invariance::{invariance_macro, Invariant};
use crate::factorization::{named, Factorization, HurwitzCertificate, MacroCall};
use crate::mcg::{named as words, MCGWord};

/// `(W1)² ∼ (W0)³`, sixty factors on both sides.
///
/// 1. The second `W1` becomes `(W1)_ρ = (ζ5ζ4ζ3ζ2ζ1)⁶` by the inverse
///    invariance certificate.
/// 2. The middle ten factors always read `ζ1⋯ζ5·ζ5⋯ζ1 = T`; carrying that block
///    to the right across the remaining `(ζ5⋯ζ1)^j` for `j = 5, 4, …, 1`
///    leaves `∏_{j=0}^{5} (T)_{(ζ5ζ4ζ3ζ2ζ1)^j}`.
/// 3. Each conjugated copy of `T` is normalized by the invariance certificate,
///    giving `T⁶ = (W0)³`.
pub fn square_to_cube_certificate() -> HurwitzCertificate {
    let mut c = HurwitzCertificate::new();
    c.push_macro(invariance_macro(30, Invariant::W1, &words::rho()).inverse());
    for t in 0..5 {
        let rest = 5 * (5 - t);
        c.push_macro(MacroCall::new("carry_block", [rest as i64 + 1, 10, rest as i64]));
    }
    let gamma = MCGWord::positive(&[5, 4, 3, 2, 1]);
    for j in 1..=5 {
        c.push_macro(invariance_macro(10 * j, Invariant::T, &gamma.pow(j as i64)));
    }
    c
}

pub fn square_to_cube_endpoints() -> (Factorization, Factorization) {
    (named::w1().repeat(2), named::w0().repeat(3))
}
