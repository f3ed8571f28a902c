//! The standard factorizations.

use super::{Factorization, TwistFactor};
use crate::mcg::named;

/// `ζ1ζ2ζ3ζ4ζ5ζ5ζ4ζ3ζ2ζ1`, ten twists with product `I`.
pub fn t() -> Factorization {
    Factorization::from_chain(&[1, 2, 3, 4, 5, 5, 4, 3, 2, 1])
}

/// `T·T`, twenty twists with trivial product.
pub fn w0() -> Factorization {
    t().repeat(2)
}

/// `(ζ1ζ2ζ3ζ4ζ5)⁶`, thirty twists with trivial product.
pub fn w1() -> Factorization {
    Factorization::from_chain(&[1, 2, 3, 4, 5]).repeat(6)
}

/// `Φ` as nine factors.
pub fn phi() -> Factorization {
    Factorization::from_chain(&named::phi().letters().iter().map(|l| l.index).collect::<Vec<_>>())
}

/// `σ·Φ·Φ·T`, twenty-nine twists (one separating) with trivial product.
pub fn w2() -> Factorization {
    Factorization::new(vec![TwistFactor::sigma()]).concat(&phi()).concat(&phi()).concat(&t())
}

/// `(ζ1ζ2)³(ζ4ζ5)³` as twelve factors; its product is `σ I`.
pub fn sigma_halves() -> Factorization {
    Factorization::from_chain(&[1, 2, 1, 2, 1, 2, 4, 5, 4, 5, 4, 5])
}

pub fn named_factorization(name: &str) -> Option<Factorization> {
    Some(match name {
        "T" => t(),
        "W0" => w0(),
        "W1" => w1(),
        "W2" => w2(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_separating_counts() {
        assert_eq!(w0().len(), 20);
        assert_eq!(w1().len(), 30);
        assert_eq!(w2().len(), 29);
        assert_eq!(w2().count_separating(), 1);
        assert_eq!(w0().count_separating(), 0);
        assert!(w0().is_transitive());
    }
}
