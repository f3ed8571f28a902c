//! Rewriting between positive words in the braid relations, as Hurwitz moves.
//!
//! On a factorization whose factors are the letters of a positive word, an
//! R-move at `k` swaps two commuting neighbours, and R-moves at `k` then `k+1`
//! turn `(a, b, a)` into `(b, a, b)` when `|a - b| = 1`. So any chain of
//! commutation and braid rewrites between two positive words is a certificate
//! between the corresponding factorizations.

use crate::factorization::Move;
use std::collections::HashMap;

fn neighbours(w: &[u8]) -> Vec<(Vec<u8>, Vec<Move>)> {
    let mut out = Vec::new();
    for k in 0..w.len().saturating_sub(1) {
        let (a, b) = (w[k], w[k + 1]);
        if a.abs_diff(b) >= 2 {
            let mut v = w.to_vec();
            v.swap(k, k + 1);
            out.push((v, vec![Move::r(k + 1)]));
        }
        if k + 2 < w.len() && a.abs_diff(b) == 1 && w[k + 2] == a {
            let mut v = w.to_vec();
            v[k] = b;
            v[k + 1] = a;
            v[k + 2] = b;
            out.push((v, vec![Move::r(k + 1), Move::r(k + 2)]));
        }
    }
    out
}

type Seen = HashMap<Vec<u8>, Option<(Vec<u8>, Vec<Move>)>>;

fn path(seen: &Seen, mut w: Vec<u8>) -> Vec<Move> {
    let mut chunks = Vec::new();
    while let Some(Some((parent, moves))) = seen.get(&w) {
        chunks.push(moves.clone());
        w = parent.clone();
    }
    chunks.reverse();
    chunks.concat()
}

/// Moves rewriting the positive word `src` into `dst` (generator indices),
/// found by a two-sided breadth-first search over commutation and braid
/// rewrites; `None` if the words are not equal in the positive braid monoid
/// or `max_nodes` words were visited first.
pub fn positive_rewrite(src: &[u8], dst: &[u8], max_nodes: usize) -> Option<Vec<Move>> {
    if src == dst {
        return Some(Vec::new());
    }
    if src.len() != dst.len() {
        return None;
    }
    let mut seen: [Seen; 2] = [HashMap::new(), HashMap::new()];
    seen[0].insert(src.to_vec(), None);
    seen[1].insert(dst.to_vec(), None);
    let mut frontier = [vec![src.to_vec()], vec![dst.to_vec()]];
    while !frontier[0].is_empty() && !frontier[1].is_empty() {
        let s = if frontier[0].len() <= frontier[1].len() { 0 } else { 1 };
        let layer = std::mem::take(&mut frontier[s]);
        for w in layer {
            for (v, moves) in neighbours(&w) {
                if seen[s].contains_key(&v) {
                    continue;
                }
                seen[s].insert(v.clone(), Some((w.clone(), moves)));
                if seen[1 - s].contains_key(&v) {
                    let mut out = path(&seen[0], v.clone());
                    out.extend(crate::factorization::certificate_inverse(&path(&seen[1], v)));
                    return Some(out);
                }
                if seen[0].len() + seen[1].len() > max_nodes {
                    return None;
                }
                frontier[s].push(v);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::{check_certificate, Factorization, HurwitzCertificate};

    #[test]
    fn braid_and_commutation_rewrites_replay() {
        let src = [1u8, 2, 1, 4];
        let dst = [4u8, 2, 1, 2];
        let moves = positive_rewrite(&src, &dst, 10_000).unwrap();
        let cert = HurwitzCertificate::from_moves(moves);
        assert!(check_certificate(&Factorization::from_chain(&src), &cert, &Factorization::from_chain(&dst)).unwrap());
    }

    #[test]
    fn unequal_words_are_not_connected() {
        assert!(positive_rewrite(&[1, 2], &[2, 1], 10_000).is_none());
        assert!(positive_rewrite(&[1, 2], &[1, 2, 3], 10_000).is_none());
    }
}
