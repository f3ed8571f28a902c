//! Named elements of the mapping class group.

use super::MCGWord;

/// `I = ζ1ζ2ζ3ζ4ζ5²ζ4ζ3ζ2ζ1`, the hyperelliptic involution.
pub fn hyperelliptic() -> MCGWord {
    MCGWord::positive(&[1, 2, 3, 4, 5, 5, 4, 3, 2, 1])
}

/// `σ = (ζ1ζ2)⁶`, the twist about the separating curve cutting off `a1, b1`.
pub fn sigma() -> MCGWord {
    MCGWord::positive(&[1, 2]).pow(6)
}

/// `ρ = ζ1ζ2ζ3ζ4ζ5·ζ1ζ2ζ3ζ4·ζ1ζ2ζ3·ζ1ζ2·ζ1`, conjugating `ζ_i` to `ζ_{6-i}`.
pub fn rho() -> MCGWord {
    MCGWord::positive(&[1, 2, 3, 4, 5, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1])
}

/// `Φ = ζ3ζ4ζ5·ζ2ζ3ζ4·ζ1ζ2ζ3`, conjugating `ζ_i` to `ζ_{6-i}` for `i ≠ 3`.
pub fn phi() -> MCGWord {
    MCGWord::positive(&[3, 4, 5, 2, 3, 4, 1, 2, 3])
}

/// `ζ1ζ2ζ3ζ4ζ5`, whose sixth power is trivial.
pub fn chain() -> MCGWord {
    MCGWord::positive(&[1, 2, 3, 4, 5])
}

/// Resolves `I`, `T`, `sigma`, `rho`, `Phi` (the word `T` equals `I`).
pub fn named_word(name: &str) -> Option<MCGWord> {
    Some(match name {
        "I" | "T" => hyperelliptic(),
        "sigma" => sigma(),
        "rho" => rho(),
        "Phi" => phi(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcg::mcg_equal;

    fn conj_is(i: u8, by: &MCGWord, j: u8) -> bool {
        mcg_equal(&MCGWord::generator(i).conjugate(by), &MCGWord::generator(j)).unwrap()
    }

    #[test]
    fn rho_reverses_the_chain() {
        for i in 1..=5 {
            assert!(conj_is(i, &rho(), 6 - i));
        }
    }

    #[test]
    fn phi_swaps_the_chain_halves() {
        for (i, j) in [(1, 4), (2, 5), (4, 1), (5, 2)] {
            assert!(conj_is(i, &phi(), j));
            assert!(conj_is(i, &phi().inverse(), j));
        }
        // Not the reversal: the S6 images already differ.
        let p = phi().s6_image();
        let moved = p.inverse().then(&crate::mcg::Perm6::transposition(1)).then(&p);
        assert_eq!(moved, crate::mcg::Perm6::transposition(4));
        assert!(!conj_is(1, &phi(), 5));
    }
}
