//! Cheap homomorphic images of the mapping class group used to reject unequal
//! elements before the expensive inner-automorphism test.

use std::fmt;

/// A permutation of `{1..6}` stored zero-based: `p.0[x]` is the image of `x`.
///
/// Products follow the word order: `p.then(q)` applies `p` first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm6(pub [u8; 6]);

impl Perm6 {
    pub const IDENTITY: Perm6 = Perm6([0, 1, 2, 3, 4, 5]);

    /// The transposition `(i, i+1)` for `i` in `1..=5`.
    pub fn transposition(i: u8) -> Self {
        let mut p = Self::IDENTITY;
        p.0.swap(i as usize - 1, i as usize);
        p
    }

    pub fn then(&self, next: &Self) -> Self {
        Perm6(self.0.map(|x| next.0[x as usize]))
    }

    pub fn inverse(&self) -> Self {
        let mut out = [0u8; 6];
        for (x, &y) in self.0.iter().enumerate() {
            out[y as usize] = x as u8;
        }
        Perm6(out)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }
}

impl fmt::Display for Perm6 {
    /// Cycle notation on `{1..6}`, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 6];
        let mut any = false;
        for start in 0..6 {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.0[x] as usize;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Whether the permutations generate all of S₆.
pub fn generates_s6(perms: &[Perm6]) -> bool {
    let gens: Vec<Perm6> = perms.iter().copied().filter(|p| !p.is_identity()).collect();
    if gens.is_empty() {
        return false;
    }
    let mut group = std::collections::HashSet::from([Perm6::IDENTITY]);
    let mut frontier = vec![Perm6::IDENTITY];
    while let Some(p) = frontier.pop() {
        for g in &gens {
            let q = p.then(g);
            if group.insert(q) {
                frontier.push(q);
            }
        }
    }
    group.len() == 720
}

/// Entries live in ℤ/P for this prime so that products of long words never overflow.
pub const MODULUS: u64 = (1 << 61) - 1;

fn reduce(x: i128) -> u64 {
    x.rem_euclid(MODULUS as i128) as u64
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

/// The action on `H₁(Σ₂)` in the basis `a1, b1, a2, b2`; column `j` is the
/// image of basis vector `j`.
///
/// Entries are stored modulo the prime `2⁶¹ − 1`, so this is the image in
/// `Sp₄(ℤ/P)`; [`entry`](Self::entry) reads back the integer entry whenever
/// it is smaller than `P/2` in absolute value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymplecticMatrix([[u64; 4]; 4]);

/// `⟨a_i, b_i⟩ = 1`.
pub fn intersection(x: &[i64; 4], y: &[i64; 4]) -> i64 {
    x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2]
}

impl SymplecticMatrix {
    pub const IDENTITY: Self = Self([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);

    pub fn from_rows(rows: [[i64; 4]; 4]) -> Self {
        Self(rows.map(|r| r.map(|x| reduce(x as i128))))
    }

    pub fn from_columns(cols: [[i64; 4]; 4]) -> Self {
        Self::from_rows(std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i])))
    }

    /// The entry as a symmetric residue in `(-P/2, P/2]`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        let x = self.0[i][j];
        if x > MODULUS / 2 {
            x as i64 - MODULUS as i64
        } else {
            x as i64
        }
    }

    pub fn rows(&self) -> [[i64; 4]; 4] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.entry(i, j)))
    }

    pub fn column(&self, j: usize) -> [i64; 4] {
        [0, 1, 2, 3].map(|i| self.entry(i, j))
    }

    /// The transvection `x ↦ x + ⟨x, c⟩ c`, the homology action of a positive
    /// twist about a curve of class `c`.
    pub fn transvection(c: [i64; 4]) -> Self {
        let cols = [0, 1, 2, 3].map(|j| {
            let mut e = [0; 4];
            e[j] = 1;
            let t = intersection(&e, &c);
            [0, 1, 2, 3].map(|i| e[i] + t * c[i])
        });
        Self::from_columns(cols)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = [[0u64; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = 0u64;
                for k in 0..4 {
                    acc = (acc + mulmod(self.0[i][k], other.0[k][j])) % MODULUS;
                }
                m[i][j] = acc;
            }
        }
        Self(m)
    }

    /// Word-order product: the action of `u v` is `M(v) · M(u)`.
    pub fn then(&self, next: &Self) -> Self {
        next.mul(self)
    }

    fn transpose(&self) -> Self {
        Self(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i])))
    }

    /// `M⁻¹ = -J Mᵀ J`, valid because `M` is symplectic.
    pub fn inverse(&self) -> Self {
        let j = Self::form();
        j.mul(&self.transpose()).mul(&j).negate()
    }

    pub fn negate(&self) -> Self {
        Self(self.0.map(|row| row.map(|x| (MODULUS - x) % MODULUS)))
    }

    fn form() -> Self {
        Self::from_rows([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    }

    pub fn is_symplectic(&self) -> bool {
        self.transpose().mul(&Self::form()).mul(self) == Self::form()
    }
}

impl fmt::Display for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl fmt::Debug for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpositions_generate_s6() {
        let t: Vec<Perm6> = (1..=5).map(Perm6::transposition).collect();
        assert!(generates_s6(&t));
        assert!(!generates_s6(&t[..4]));
        assert!(!generates_s6(&[]));
        assert_eq!(Perm6::transposition(1).to_string(), "(1 2)");
    }

    #[test]
    fn perm_inverse_and_order() {
        let p = Perm6::transposition(1).then(&Perm6::transposition(2));
        assert!(p.then(&p.inverse()).is_identity());
        assert!(p.then(&p).then(&p).is_identity());
    }

    #[test]
    fn transvections_are_symplectic() {
        let c = [1, -1, 2, 0];
        let t = SymplecticMatrix::transvection(c);
        assert!(t.is_symplectic());
        assert_eq!(t.mul(&t.inverse()), SymplecticMatrix::IDENTITY);
        assert_eq!(t.column(0), [0, 1, -2, 0]);
        assert_eq!(SymplecticMatrix::IDENTITY.negate().entry(0, 0), -1);
    }
}
