// Hurwitz moves, certificate text and replay.

use genus2::factorization::{check_certificate, named, replay, Factorization, HurwitzCertificate, Move};
use std::error::Error;

pub fn run() -> Result<(), Box<dyn Error>> {
    let f: Factorization = "W0".parse()?;
    let moved = f.apply_move(3, genus2::factorization::Direction::R)?.apply_move(10, genus2::factorization::Direction::L)?;
    println!("after two moves, factor 4 is {}", moved.factors()[3]);

    let cert = HurwitzCertificate::from_moves([Move::r(3), Move::l(10)]);
    let text = cert.to_string();
    print!("certificate:\n{text}");
    let parsed: HurwitzCertificate = text.parse()?;
    assert!(check_certificate(&f, &parsed, &moved)?);
    assert!(replay(&moved, &parsed.inverse())?.factorwise_equal(&named::w0())?);

    // Macros expand into elementary moves deterministically; `inverse` undoes one.
    let macro_cert: HurwitzCertificate = "MACRO shift 10 1\nMACRO inverse shift 10 1\n".parse()?;
    println!("macro certificate expands to {} moves", macro_cert.move_count()?);
    assert!(check_certificate(&named::t(), &macro_cert, &named::t())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
