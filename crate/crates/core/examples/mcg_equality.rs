// Deciding equality in the mapping class group.

use genus2::mcg::{mcg_equal, named, validate_presentation, MCGWord};
use std::error::Error;

pub fn run() -> Result<(), Box<dyn Error>> {
    for check in validate_presentation() {
        println!("{:<45} {}", check.name, if check.passed() { "ok" } else { "FAILED" });
        assert!(check.passed());
    }

    let sigma: MCGWord = "(z1 z2)^6".parse()?;
    assert!(mcg_equal(&sigma, &named::sigma())?);
    assert!(!mcg_equal(&sigma, &MCGWord::empty())?);

    // Conjugation by Phi swaps the two halves of the chain.
    let z = MCGWord::generator;
    assert!(mcg_equal(&z(1).conjugate(&named::phi()), &z(4))?);
    assert!(mcg_equal(&z(2).conjugate(&named::phi()), &z(5))?);
    // Conjugation by rho reverses it.
    for i in 1..=5 {
        assert!(mcg_equal(&z(i).conjugate(&named::rho()), &z(6 - i))?);
    }
    println!("Phi swaps z1<->z4, z2<->z5; rho reverses the chain");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
