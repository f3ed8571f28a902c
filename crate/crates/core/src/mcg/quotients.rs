//! Finite-quotient obstruction to being inner.
//!
//! An inner automorphism `x ↦ w x w⁻¹` fixes every representation
//! `ρ: π₁ → S₅` up to conjugation. Checking a few fixed representations
//! refutes most non-inner candidates without any conjugacy search, in
//! particular Torelli-type coincidences that the S₆ and Sp₄ images miss.

use crate::surface::{SurfaceLetter, SurfaceWord};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

const REPRESENTATIONS: usize = 8;
const ORDER: usize = 120;

/// An element of S₅ by its index in [`Table::perms`].
type Elem = u8;

struct Table {
    /// `mul[a][b]` is `a` then `b`.
    mul: Vec<[Elem; ORDER]>,
    inv: [Elem; ORDER],
    /// `conj[g][x] = g⁻¹ x g`.
    conj: Vec<[Elem; ORDER]>,
    identity: Elem,
}

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        let perms: Vec<[u8; 5]> = (0..5u32.pow(5))
            .map(|n| [0, 1, 2, 3, 4].map(|i| (n / 5u32.pow(i) % 5) as u8))
            .filter(|p| (0..5u8).all(|x| p.contains(&x)))
            .collect();
        let index = |p: [u8; 5]| perms.iter().position(|q| *q == p).expect("closed") as Elem;
        let mul: Vec<[Elem; ORDER]> = perms
            .iter()
            .map(|p| std::array::from_fn(|b| index(p.map(|x| perms[b][x as usize]))))
            .collect();
        let identity = index([0, 1, 2, 3, 4]);
        let inv = std::array::from_fn(|a| (0..ORDER).find(|&b| mul[a][b] == identity).expect("group") as Elem);
        let conj = (0..ORDER)
            .map(|g| std::array::from_fn(|x| mul[mul[inv[g] as usize][x] as usize][g]))
            .collect();
        Table { mul, inv, conj, identity }
    })
}

struct Representation {
    /// Images of the letters, indexed by letter code.
    letters: [Elem; 8],
}

impl Representation {
    fn new(gens: [Elem; 4]) -> Self {
        let t = table();
        Self { letters: std::array::from_fn(|c| if c % 2 == 0 { gens[c / 2] } else { t.inv[gens[c / 2] as usize] }) }
    }

    fn eval(&self, w: &SurfaceWord) -> Elem {
        let t = table();
        w.letters()
            .iter()
            .fold(t.identity, |acc, l: &SurfaceLetter| t.mul[acc as usize][self.letters[l.code() as usize] as usize])
    }

    #[cfg(test)]
    fn generators(&self) -> [Elem; 4] {
        std::array::from_fn(|g| self.letters[2 * g])
    }
}

fn commute(a: Elem, b: Elem) -> bool {
    let t = table();
    t.mul[a as usize][b as usize] == t.mul[b as usize][a as usize]
}

fn representations() -> &'static [Representation] {
    static REPS: OnceLock<Vec<Representation>> = OnceLock::new();
    REPS.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
        let relator = SurfaceWord::relator();
        let mut out = Vec::new();
        while out.len() < REPRESENTATIONS {
            let mut pick = || rng.gen_range(0..ORDER) as Elem;
            let (x1, y1, x2) = (pick(), pick(), pick());
            if commute(x1, y1) {
                continue;
            }
            for y2 in 0..ORDER as Elem {
                let r = Representation::new([x1, y1, x2, y2]);
                if !commute(x2, y2) && r.eval(&relator) == table().identity {
                    out.push(r);
                    break;
                }
            }
        }
        out
    })
}

/// The tuples `ρ∘f(a1, b1, a2, b2)` up to simultaneous conjugation, one per
/// fixed representation `ρ`. Mapping classes that agree in the mapping class
/// group have equal fingerprints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint([[Elem; 4]; REPRESENTATIONS]);

fn canonical(x: [Elem; 4]) -> [Elem; 4] {
    table().conj.iter().map(|c| x.map(|e| c[e as usize])).min().expect("S5 is not empty")
}

pub(crate) fn fingerprint(images: &[SurfaceWord; 4]) -> Fingerprint {
    let mut out = [[0; 4]; REPRESENTATIONS];
    for (slot, rep) in out.iter_mut().zip(representations()) {
        *slot = canonical(std::array::from_fn(|j| rep.eval(&images[j])));
    }
    Fingerprint(out)
}

fn identity_fingerprint() -> Fingerprint {
    static ID: OnceLock<Fingerprint> = OnceLock::new();
    *ID.get_or_init(|| fingerprint(&SurfaceWord::generators()))
}

/// True when some representation shows that `images` (of `a1, b1, a2, b2`)
/// cannot come from an inner automorphism.
pub(crate) fn obstructs_inner(images: &[SurfaceWord; 4]) -> bool {
    fingerprint(images) != identity_fingerprint()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representations_are_homomorphisms() {
        let t = table();
        assert_eq!(t.mul.len(), 120);
        for a in 0..ORDER {
            assert_eq!(t.mul[a][t.inv[a] as usize], t.identity);
        }
        for rep in representations() {
            assert_eq!(rep.eval(&SurfaceWord::relator()), t.identity);
            assert!(!commute(rep.generators()[0], rep.generators()[1]));
        }
    }

    #[test]
    fn inner_automorphisms_pass() {
        let w: SurfaceWord = "a1 b2' a2".parse().unwrap();
        let images = SurfaceWord::generators().map(|x| w.concat(&x).concat(&w.inverse()));
        assert!(!obstructs_inner(&images));
        assert!(!obstructs_inner(&SurfaceWord::generators()));
    }

    #[test]
    fn fingerprints_ignore_inner_automorphisms() {
        let w: SurfaceWord = "b1 a2' b2 b2".parse().unwrap();
        let images = SurfaceWord::generators().map(|x| w.concat(&x).concat(&w.inverse()));
        assert_eq!(fingerprint(&images), fingerprint(&SurfaceWord::generators()));
    }

    #[test]
    fn swapping_generators_is_obstructed() {
        let [a1, b1, a2, b2] = SurfaceWord::generators();
        assert!(obstructs_inner(&[b1, a1, a2, b2]));
    }
}
