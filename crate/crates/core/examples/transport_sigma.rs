// Moving a conjugated separating twist back to sigma with copies of W0.

use genus2::factorization::{check_certificate, named, Factorization, TwistFactor, TwistBase};
use genus2::identities::{express_as_conjugate_of_sigma, transport_sigma};
use genus2::mcg::MCGWord;
use std::error::Error;

pub fn run() -> Result<(), Box<dyn Error>> {
    let factor = TwistFactor::new(TwistBase::Sigma, "z3 z2' z5".parse::<MCGWord>()?);
    let p = express_as_conjugate_of_sigma(&factor)?;
    println!("{factor} is sigma conjugated by phi^-1 with phi = {}", p.phi);

    let n = p.phi.len();
    let (moved, cert) = transport_sigma(&p.phi, n)?;
    println!("{} copies of W0, {} moves", n, cert.move_count()?);
    // The twist arrives as plain sigma at the right end, past 20n non-separating factors.
    let start = Factorization::new(vec![factor]).concat(&named::w0().repeat(n));
    let end = moved.concat(&Factorization::new(vec![TwistFactor::sigma()]));
    assert!(check_certificate(&start, &cert, &end)?);
    assert!(moved.len() == 20 * n && moved.count_separating() == 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
