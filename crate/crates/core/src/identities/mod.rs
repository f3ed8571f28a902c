//! Constructive Hurwitz equivalences between the standard factorizations,
//! and the stabilization procedure built from them.
//!
//! Every generator returns a [`HurwitzCertificate`] that replays between
//! explicit endpoints; nothing here is trusted without replay.

mod invariance;
mod sigma_exchange;
mod square_to_cube;
mod stabilize;

pub use invariance::{conjugation_invariance_certificate, invariance_certificate, invariance_macro, Invariant};
pub use sigma_exchange::{sigma_exchange_certificate, sigma_exchange_endpoints};
pub use square_to_cube::{square_to_cube_certificate, square_to_cube_endpoints};
pub use stabilize::{
    eliminate_separating, express_as_conjugate_of_sigma, stabilization_threshold, stable_reduce,
    transport_sigma, transport_sigma_certificate, Elimination, SeparatingTwistPresentation, StableForm,
};

use crate::error::{Error, Result};
use crate::factorization::{HurwitzCertificate, MacroCall, Move};
use crate::mcg::MCGWord;

fn offset_moves(cert: HurwitzCertificate, offset: usize) -> Result<Vec<Move>> {
    cert.shifted(offset)?.expand()
}

/// Expands the identity macros `invariance`, `square_to_cube` and `sigma_exchange`.
pub(crate) fn expand_macro(call: &MacroCall) -> Result<Vec<Move>> {
    let bad = |m: &str| Error::MacroArgs { name: call.name.clone(), message: m.into() };
    let offset: usize = call
        .args
        .first()
        .ok_or_else(|| bad("missing offset"))?
        .parse()
        .map_err(|_| bad("offset must be a non-negative integer"))?;
    match call.name.as_str() {
        "invariance" => {
            let x: Invariant = call.args.get(1).ok_or_else(|| bad("missing factorization name"))?.parse()?;
            let gamma: MCGWord = call.args[2..].join(" ").parse()?;
            offset_moves(invariance_certificate(x, &gamma), offset)
        }
        "square_to_cube" => offset_moves(square_to_cube_certificate(), offset),
        "sigma_exchange" => offset_moves(sigma_exchange_certificate(), offset),
        _ => Err(Error::UnknownMacro(call.name.clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::check_certificate;

    #[test]
    fn square_to_cube_replays() {
        let (lhs, rhs) = square_to_cube_endpoints();
        assert_eq!((lhs.len(), rhs.len()), (60, 60));
        assert!(check_certificate(&lhs, &square_to_cube_certificate(), &rhs).unwrap());
    }

    #[test]
    fn sigma_exchange_replays() {
        let (lhs, rhs) = sigma_exchange_endpoints();
        assert_eq!((lhs.len(), rhs.len()), (51, 51));
        assert_eq!((lhs.count_separating(), rhs.count_separating()), (1, 1));
        assert!(check_certificate(&lhs, &sigma_exchange_certificate(), &rhs).unwrap());
    }

    #[test]
    fn macros_expand_like_their_generators() {
        let call = invariance_macro(3, Invariant::T, &"z2 z4'".parse().unwrap());
        let direct = invariance_certificate(Invariant::T, &"z2 z4'".parse().unwrap()).shifted(3).unwrap();
        assert_eq!(call.expand().unwrap(), direct.expand().unwrap());
        assert!(MacroCall::new("nope", [0]).expand().is_err());
    }
}
