use crate::surface::{dehn_reduce, SurfaceLetter, SurfaceWord};
use std::fmt;

/// An endomorphism of the surface group given by the images of `a1, b1, a2, b2`.
/// Images are kept Dehn-reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MCGAutomorphism {
    pub images: [SurfaceWord; 4],
}

impl MCGAutomorphism {
    pub fn identity() -> Self {
        Self { images: SurfaceWord::generators() }
    }

    pub fn new(images: [SurfaceWord; 4]) -> Self {
        Self { images: images.map(|w| dehn_reduce(&w)) }
    }

    /// Substitutes the images into `w` and reduces.
    pub fn apply(&self, w: &SurfaceWord) -> SurfaceWord {
        let inverses: [SurfaceWord; 4] = std::array::from_fn(|j| self.images[j].inverse());
        let letters = w.letters().iter().flat_map(|l: &SurfaceLetter| {
            let g = l.generator() as usize;
            if l.is_inverse() {
                inverses[g].letters().iter().copied()
            } else {
                self.images[g].letters().iter().copied()
            }
        });
        crate::surface::dehn::dehn_reduce_letters(letters)
    }

    /// `self` followed by `next`: the map `x ↦ next(self(x))`.
    pub fn then(&self, next: &Self) -> Self {
        Self { images: std::array::from_fn(|j| next.apply(&self.images[j])) }
    }

    /// Exponent-sum images, the induced map on homology (column `j` is the image of generator `j`).
    pub fn abelianize(&self) -> super::SymplecticMatrix {
        super::SymplecticMatrix::from_columns(std::array::from_fn(|j| self.images[j].abelianize()))
    }

    pub fn total_len(&self) -> usize {
        self.images.iter().map(SurfaceWord::len).sum()
    }
}

impl fmt::Display for MCGAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, name) in ["a1", "b1", "a2", "b2"].iter().enumerate() {
            writeln!(f, "{name} -> {}", self.images[j])?;
        }
        Ok(())
    }
}

impl fmt::Debug for MCGAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An automorphism together with its inverse, so inverting a word never needs
/// to invert an automorphism from its images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub forward: MCGAutomorphism,
    pub backward: MCGAutomorphism,
}

impl Realization {
    pub fn identity() -> Self {
        Self { forward: MCGAutomorphism::identity(), backward: MCGAutomorphism::identity() }
    }

    pub fn then(&self, next: &Self) -> Self {
        Self {
            forward: self.forward.then(&next.forward),
            backward: next.backward.then(&self.backward),
        }
    }

    pub fn inverse(&self) -> Self {
        Self { forward: self.backward.clone(), backward: self.forward.clone() }
    }

    /// The realization of `c⁻¹ x c` given that of `x` (self) and `c`.
    pub fn conjugated_by(&self, c: &Self) -> Self {
        c.inverse().then(self).then(c)
    }
}
