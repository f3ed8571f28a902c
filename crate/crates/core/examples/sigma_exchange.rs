// Trading a separating twist plus W2 for W0 and W1.

use genus2::factorization::check_certificate;
use genus2::identities::{sigma_exchange_certificate, sigma_exchange_endpoints};
use std::error::Error;

pub fn run() -> Result<(), Box<dyn Error>> {
    let (lhs, rhs) = sigma_exchange_endpoints();
    let cert = sigma_exchange_certificate();
    println!("{} factors, {} separating on the left; {} moves", lhs.len(), lhs.count_separating(), cert.move_count()?);
    assert!(check_certificate(&lhs, &cert, &rhs)?);
    println!("right side: sigma, W0, W1");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
