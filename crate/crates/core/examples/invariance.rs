// Simultaneous conjugation leaves T, W0 and W1 unchanged up to Hurwitz moves.

use genus2::factorization::check_certificate;
use genus2::identities::{invariance_certificate, Invariant};
use genus2::mcg::{named, MCGWord};
use std::error::Error;

pub fn run() -> Result<(), Box<dyn Error>> {
    let gamma: MCGWord = "z2 z4' z1".parse()?;
    for x in [Invariant::T, Invariant::W0, Invariant::W1] {
        let cert = invariance_certificate(x, &gamma);
        let ok = check_certificate(&x.factorization().conjugate(&gamma), &cert, &x.factorization())?;
        println!("({x})_{{{gamma}}} ~ {x}: {} moves, {}", cert.move_count()?, if ok { "checked" } else { "FAILED" });
        assert!(ok);
    }
    let cert = invariance_certificate(Invariant::W1, &named::rho());
    assert!(check_certificate(&Invariant::W1.factorization().conjugate(&named::rho()), &cert, &Invariant::W1.factorization())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
