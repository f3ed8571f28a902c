//! Braid monodromy factorizations of the branch curves.

use super::{BraidFactor, BraidFactorization, BraidWord};

/// `(x1x2)³(x4x5)³`, the local monodromy around the fiber with two triple points.
pub fn delta() -> BraidWord {
    BraidWord::positive(&[1, 2, 1, 2, 1, 2, 4, 5, 4, 5, 4, 5])
}

fn sq(base: u8, conj: &[u8]) -> [BraidFactor; 2] {
    let f = BraidFactor::new(base, BraidWord::positive(conj));
    [f.clone(), f]
}

/// `a² (a+1)_a² (a+2)_{(a+1)a}²`: three nodes near a triple point.
fn triple_nodes(a: u8) -> BraidFactorization {
    BraidFactorization::new([sq(a, &[]), sq(a + 1, &[a]), sq(a + 2, &[a + 1, a])].concat())
}

/// `a (a+1) (a+2)² (a+1) a`.
fn triple_tangency(a: u8) -> BraidFactorization {
    BraidFactorization::from_chain(&[a, a + 1, a + 2, a + 2, a + 1, a])
}

const B2_CONJ: [&[u8]; 3] = [&[], &[5, 4, 3], &[4, 3, 2, 5, 4, 3]];

fn b2_from(block: fn(u8) -> BraidFactorization) -> BraidFactorization {
    [3u8, 2, 1]
        .iter()
        .zip(B2_CONJ)
        .fold(BraidFactorization::default(), |acc, (&a, c)| acc.concat(&block(a).conjugate(&BraidWord::positive(c))))
}

/// Twenty factors: each of the five nodes per half gives a squared half-twist.
pub fn b0_nodal() -> BraidFactorization {
    let half: Vec<BraidFactor> = (1..=5u8)
        .flat_map(|j| {
            let conj: Vec<u8> = (1..j).rev().collect();
            sq(j, &conj)
        })
        .collect();
    BraidFactorization::new(half).repeat(2)
}

pub fn b0_tangency() -> BraidFactorization {
    BraidFactorization::from_chain(&[1, 2, 3, 4, 5, 5, 4, 3, 2, 1]).repeat(2)
}

pub fn b1() -> BraidFactorization {
    BraidFactorization::from_chain(&[1, 2, 3, 4, 5]).repeat(6)
}

/// Eighteen factors from the nodes near the two triple points.
pub fn b2_nodes() -> BraidFactorization {
    b2_from(triple_nodes)
}

/// The same eighteen factors after each node triple is folded into tangency form.
pub fn b2_tangency() -> BraidFactorization {
    b2_from(triple_tangency)
}

/// `(x3x4x5x2x3x4x1x2x3)²`.
pub fn b2_nodes_reduced() -> BraidFactorization {
    BraidFactorization::from_chain(&[3, 4, 5, 2, 3, 4, 1, 2, 3]).repeat(2)
}

pub fn b2_fiber() -> BraidFactorization {
    BraidFactorization::from_chain(&[1, 2, 3, 4, 5, 5, 4, 3, 2, 1])
}

/// All builtin factorizations by name; `delta` lists its letters as factors.
pub fn builtin_braid_factorizations() -> Vec<(&'static str, BraidFactorization)> {
    vec![
        ("B0_nodal", b0_nodal()),
        ("B0_tangency", b0_tangency()),
        ("B1", b1()),
        ("B2_nodes", b2_nodes()),
        ("B2_tangency", b2_tangency()),
        ("B2_nodes_reduced", b2_nodes_reduced()),
        ("B2_fiber", b2_fiber()),
        ("delta", BraidFactorization::from_chain(&[1, 2, 1, 2, 1, 2, 4, 5, 4, 5, 4, 5])),
    ]
}

pub fn braid_factorization(name: &str) -> Option<BraidFactorization> {
    builtin_braid_factorizations().into_iter().find(|(n, _)| *n == name).map(|(_, b)| b)
}
