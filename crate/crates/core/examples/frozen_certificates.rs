// Checking the certificates shipped in `certificates/`.

use genus2::catalogue::{claims, default_certificate_dir, load};
use std::error::Error;

pub fn run() -> Result<(), Box<dyn Error>> {
    let dir = default_certificate_dir();
    for claim in claims()? {
        let frozen = load(&dir, &claim)?;
        let ok = claim.check_with(&frozen)?;
        println!("{:<24} {:>3} factors  {}", claim.name, claim.source.len(), if ok { "ok" } else { "FAILED" });
        assert!(ok);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
