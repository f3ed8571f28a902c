// The word problem and conjugacy in the genus-2 surface group.

use genus2::surface::{conjugator, dehn_reduce, is_identity, SurfaceWord};
use std::error::Error;

pub fn run() -> Result<(), Box<dyn Error>> {
    let r = SurfaceWord::relator();
    println!("relator: {r}");
    assert!(is_identity(&r));

    // Five letters of the relator collapse to the inverse of the other three.
    let w: SurfaceWord = "a1 b1 a1' b1' a2".parse()?;
    println!("{w}  ->  {}", dehn_reduce(&w));
    assert_eq!(dehn_reduce(&w).len(), 3);

    let x: SurfaceWord = "a1 b2".parse()?;
    let c: SurfaceWord = "b1 a2'".parse()?;
    let y = c.inverse().concat(&x).concat(&c);
    let found = conjugator(&x, &y)?.expect("conjugate words");
    println!("conjugator of {x} into {y}: {found}");
    assert!(is_identity(&found.inverse().concat(&x).concat(&found).concat(&y.inverse())));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
