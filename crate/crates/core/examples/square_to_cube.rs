// Two copies of W1 are Hurwitz equivalent to three copies of W0.

use genus2::factorization::check_certificate;
use genus2::identities::{square_to_cube_certificate, square_to_cube_endpoints};
use std::error::Error;

pub fn run() -> Result<(), Box<dyn Error>> {
    let (w1_squared, w0_cubed) = square_to_cube_endpoints();
    let cert = square_to_cube_certificate();
    println!("{} factors on both sides, {} moves", w1_squared.len(), cert.move_count()?);
    print!("{cert}");
    assert!(check_certificate(&w1_squared, &cert, &w0_cubed)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
