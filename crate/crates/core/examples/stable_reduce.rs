// Stabilizing a fiber sum into (W0)^{n+k} (W1)^eps (W2)^m.

use genus2::factorization::{check_certificate, fiber_sum, named};
use genus2::identities::{stabilization_threshold, stable_reduce};
use genus2::mcg::MCGWord;
use std::error::Error;

pub fn run() -> Result<(), Box<dyn Error>> {
    let glue: MCGWord = "z3".parse()?;
    let f = fiber_sum(&fiber_sum(&named::w2(), &named::w1(), &MCGWord::empty()), &named::w2(), &glue);
    let form = stable_reduce(&f)?;
    println!("n = {}, k = {}, eps = {}, m = {}", form.n, form.k, form.epsilon, form.m);
    println!("conserved: {}, oracle needed for base: {}", form.conserves(f.len()), form.base_oracle_flag);
    assert_eq!(form.m, 2);
    assert!(form.conserves(f.len()));
    let (start, end) = form.endpoints(&f);
    assert!(check_certificate(&start, &form.cert, &end)?);
    println!("copies of W0 needed for m = 2 with k = {}: {}", form.k, stabilization_threshold(form.k, form.epsilon, form.m));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
