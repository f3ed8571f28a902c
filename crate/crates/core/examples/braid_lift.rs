// Braid monodromy factorizations and their lifts.

use genus2::braid::{
    braid_equal_mod_center, builtin_braid_factorizations, lift_factorization, verify_b0_identities,
    verify_b2_identities, BraidWord,
};
use std::error::Error;

pub fn run() -> Result<(), Box<dyn Error>> {
    let u: BraidWord = "x1 x2 x1".parse()?;
    let v: BraidWord = "x2 x1 x2".parse()?;
    assert!(braid_equal_mod_center(&u, &v)?);

    for (name, b) in builtin_braid_factorizations() {
        let lifted = lift_factorization(&b)?;
        println!("{name:<17} {:>2} factors, lifted product {:?}", b.len(), lifted.product);
    }
    let b0 = verify_b0_identities()?;
    println!("B0: nodal ~ tangency {}, lift is W0 {}", b0.nodal_tangency, b0.tangency_lifts_to_w0);
    let b2 = verify_b2_identities()?;
    println!(
        "B2: rewrites {} {}, delta lifts to sigma {}, assembly of {} factors is W2 {}",
        b2.nodes_to_tangency, b2.tangency_to_reduced, b2.delta_lifts_to_sigma, b2.assembly_len, b2.assembly_is_w2
    );
    assert!(b0.passed() && b2.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
