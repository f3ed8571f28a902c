//! Hurwitz certificates between the builtin braid factorizations, checked on
//! their lifts, and the assembly of the lifted `B2` monodromy.

use super::named::{b0_nodal, b0_tangency, b2_fiber, b2_nodes, b2_nodes_reduced, b2_tangency, delta};
use super::{lift, lift_factorization, BraidFactorization};
use crate::error::Result;
use crate::factorization::{check_certificate, named, Factorization, HurwitzCertificate, MacroCall, TwistFactor};
use crate::mcg::{mcg_equal_mod_center, named as words};
use crate::rewrite::positive_rewrite;

fn lifted(b: &BraidFactorization) -> Result<Factorization> {
    Ok(lift_factorization(b)?.factorization)
}

/// Inverse of the moves that unfold `a (a+1) … a` tangency blocks into
/// squared nodes: the last factor of the remaining tail is shifted left to sit
/// next to its twin, once per pair.
fn fold(blocks: &[(usize, usize)]) -> HurwitzCertificate {
    let mut unfold = HurwitzCertificate::new();
    for &(start, len) in blocks {
        for pair in 0..len / 2 - 1 {
            unfold.push_macro(MacroCall::new("shift", [start + len, start + 2 * pair + 2]));
        }
    }
    unfold.inverse()
}

/// `B0_nodal ∼ B0_tangency` on the lifts: each half folds back into
/// `x1x2x3x4x5x5x4x3x2x1`.
pub fn nodal_tangency_certificate() -> HurwitzCertificate {
    fold(&[(0, 10), (10, 10)])
}

/// The two rewrites from the nodes near the triple points to the reduced form.
pub struct TriplePointCertificates {
    /// `B2_nodes ∼ B2_tangency`.
    pub fold: HurwitzCertificate,
    /// `B2_tangency ∼ B2_nodes_reduced`.
    pub reduce: HurwitzCertificate,
}

impl TriplePointCertificates {
    /// `B2_nodes ∼ B2_nodes_reduced`.
    pub fn combined(&self) -> HurwitzCertificate {
        let mut c = self.fold.clone();
        c.append(&self.reduce);
        c
    }
}

/// In tangency form the blocks carry conjugators `1`, `x5x4x3`,
/// `x4x3x2x5x4x3`. Moving the last half of block one right across block two
/// strips that block's conjugator, and likewise for the next pair. What is
/// left is `x3x4x5x2x3x4x1x2x3` followed by its reverse, and the reverse is
/// rewritten positively since both are the permutation braid of the same
/// involution.
pub fn triple_point_certificates() -> TriplePointCertificates {
    let fold = fold(&[(0, 6), (6, 6), (12, 6)]);
    let mut reduce = HurwitzCertificate::new();
    reduce.push_macro(MacroCall::new("block", [4, 3, 6]));
    reduce.push_macro(MacroCall::new("block", [7, 6, 6]));
    let phi: Vec<u8> = words::phi().letters().iter().map(|l| l.index).collect();
    let rev: Vec<u8> = phi.iter().rev().copied().collect();
    let moves = positive_rewrite(&rev, &phi, 100_000).expect("both are the same permutation braid");
    reduce.extend_moves(moves.into_iter().map(|m| m.shifted(9)));
    TriplePointCertificates { fold, reduce }
}

/// Outcome for the `B0` identities.
#[derive(Clone, Debug)]
pub struct B0Report {
    pub nodal_tangency: bool,
    pub tangency_lifts_to_w0: bool,
    pub certificate: HurwitzCertificate,
}

impl B0Report {
    pub fn passed(&self) -> bool {
        self.nodal_tangency && self.tangency_lifts_to_w0
    }
}

/// Replays the nodal to tangency certificate on the lifts and compares the
/// lifted tangency form with `W0`.
pub fn verify_b0_identities() -> Result<B0Report> {
    let certificate = nodal_tangency_certificate();
    let tangency = lifted(&b0_tangency())?;
    let nodal_tangency = check_certificate(&lifted(&b0_nodal())?, &certificate, &tangency)?;
    let tangency_lifts_to_w0 = tangency.factorwise_equal(&named::w0())?;
    Ok(B0Report { nodal_tangency, tangency_lifts_to_w0, certificate })
}

/// Outcome for the `B2` identities.
#[derive(Clone, Debug)]
pub struct B2Report {
    pub nodes_to_tangency: bool,
    pub tangency_to_reduced: bool,
    /// `lift(δ) = σ` modulo `I`.
    pub delta_lifts_to_sigma: bool,
    /// Factor count of `σ · lift(B2_nodes_reduced) · lift(B2_fiber)`.
    pub assembly_len: usize,
    pub assembly_is_w2: bool,
    pub certificate: HurwitzCertificate,
}

impl B2Report {
    pub fn passed(&self) -> bool {
        self.nodes_to_tangency
            && self.tangency_to_reduced
            && self.delta_lifts_to_sigma
            && self.assembly_len == 29
            && self.assembly_is_w2
    }
}

/// Replays both triple-point rewrites, checks the lift of `δ`, and compares
/// the assembled monodromy with `W2` factor by factor.
pub fn verify_b2_identities() -> Result<B2Report> {
    let certs = triple_point_certificates();
    let (nodes, tangency, reduced) = (lifted(&b2_nodes())?, lifted(&b2_tangency())?, lifted(&b2_nodes_reduced())?);
    let nodes_to_tangency = check_certificate(&nodes, &certs.fold, &tangency)?;
    let tangency_to_reduced = check_certificate(&tangency, &certs.reduce, &reduced)?;
    let delta_lifts_to_sigma = mcg_equal_mod_center(&lift(&delta()), &words::sigma())?;
    let assembly = Factorization::new(vec![TwistFactor::sigma()]).concat(&reduced).concat(&lifted(&b2_fiber())?);
    let assembly_is_w2 = assembly.factorwise_equal(&named::w2())?;
    Ok(B2Report {
        nodes_to_tangency,
        tangency_to_reduced,
        delta_lifts_to_sigma,
        assembly_len: assembly.len(),
        assembly_is_w2,
        certificate: certs.combined(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::replay;

    #[test]
    fn b0_identities_hold() {
        let r = verify_b0_identities().unwrap();
        assert!(r.nodal_tangency && r.tangency_lifts_to_w0);
    }

    #[test]
    fn b2_identities_hold() {
        let r = verify_b2_identities().unwrap();
        assert!(r.nodes_to_tangency, "fold");
        assert!(r.tangency_to_reduced, "reduce");
        assert!(r.delta_lifts_to_sigma);
        assert_eq!(r.assembly_len, 29);
        assert!(r.assembly_is_w2);
        let end = replay(&lifted(&b2_nodes()).unwrap(), &r.certificate).unwrap();
        assert!(end.factorwise_equal(&lifted(&b2_nodes_reduced()).unwrap()).unwrap());
    }

    #[test]
    fn delta_is_not_sigma_on_the_nose() {
        // (ζ1ζ2)³(ζ4ζ5)³ = σ I, so equality needs the quotient by the center.
        assert!(!crate::mcg::mcg_equal(&lift(&delta()), &words::sigma()).unwrap());
    }
}
