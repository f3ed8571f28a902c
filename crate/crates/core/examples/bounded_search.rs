// Recovering a certificate between two factorizations by bidirectional search.

use genus2::factorization::{bounded_search, check_certificate, Factorization, Move, SearchOutcome};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::error::Error;

pub fn run() -> Result<(), Box<dyn Error>> {
    let f: Factorization = "z1\nz2 @ z3\nz4\nz5 @ z1'\n".parse()?;
    let mut g = f.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..4 {
        let i = rng.gen_range(1..g.len());
        g.apply_in_place(if rng.gen_bool(0.5) { Move::l(i) } else { Move::r(i) })?;
    }
    match bounded_search(&f, &g, 6, 100_000)? {
        SearchOutcome::Found(cert) => {
            println!("found {} moves:\n{cert}", cert.move_count()?);
            assert!(check_certificate(&f, &cert, &g)?);
        }
        other => return Err(format!("search failed: {other:?}").into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
