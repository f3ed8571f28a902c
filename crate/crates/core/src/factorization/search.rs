use super::certificate::invert;
use super::{check_certificate, Direction, Factorization, HurwitzCertificate, Move, TwistFactor};
use crate::error::{Error, Result};
use crate::error::BoundExceeded;
use crate::mcg::{Perm6, SymplecticMatrix};
use std::collections::HashMap;

/// Result of [`bounded_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(HurwitzCertificate),
    /// Every state within the depth bound was visited without a match.
    Exhausted,
    /// The node budget ran out first.
    NodeLimit,
}

impl SearchOutcome {
    pub fn certificate(self) -> Option<HurwitzCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

type Key = Vec<(Perm6, SymplecticMatrix)>;

fn key(factors: &[TwistFactor]) -> Key {
    factors.iter().map(TwistFactor::key).collect()
}

fn same_state(a: &[TwistFactor], b: &[TwistFactor]) -> std::result::Result<bool, BoundExceeded> {
    for (x, y) in a.iter().zip(b) {
        if !x.equals(y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Factors and the parent state with the move that produced them.
type State = (Vec<TwistFactor>, Option<(usize, Move)>);

struct Side {
    states: Vec<State>,
    /// States by invariant key; a hit is confirmed factor by factor.
    index: HashMap<Key, Vec<usize>>,
    frontier: Vec<usize>,
    depth: usize,
}

impl Side {
    fn new(start: &Factorization) -> Self {
        let f = start.factors().to_vec();
        let k = key(&f);
        Self { states: vec![(f, None)], index: HashMap::from([(k, vec![0])]), frontier: vec![0], depth: 0 }
    }

    /// A stored state equal to `factors` in the mapping class group.
    fn find(&self, k: &Key, factors: &[TwistFactor]) -> std::result::Result<Option<usize>, BoundExceeded> {
        for &i in self.index.get(k).into_iter().flatten() {
            if same_state(&self.states[i].0, factors)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    fn path(&self, mut i: usize) -> Vec<Move> {
        let mut out = Vec::new();
        while let Some((parent, m)) = self.states[i].1 {
            out.push(m);
            i = parent;
        }
        out.reverse();
        out
    }
}

fn step(factors: &[TwistFactor], m: Move) -> Vec<TwistFactor> {
    let mut out = factors.to_vec();
    let i = m.position;
    let (a, b) = (&factors[i - 1], &factors[i]);
    let (x, y) = match m.direction {
        Direction::R => (b.clone(), a.conjugated_by(b)),
        Direction::L => (b.conjugated_by_inverse(a), a.clone()),
    };
    out[i - 1] = x;
    out[i] = y;
    out
}

/// Looks for a certificate turning `f` into `g` with at most `max_depth` moves.
///
/// Two breadth-first searches grow from `f` and from `g`, one layer at a time
/// (the smaller frontier first). Moves are tried by ascending position with
/// `L` before `R`, so the result is deterministic. States are deduplicated
/// exactly: they are hashed by per-factor S₆ and Sp₄ images and a hash hit is
/// confirmed factor by factor with the equality oracle. When the two sides
/// meet, the joined certificate is still replayed and checked before it is
/// returned, so a returned certificate always passes [`check_certificate`].
pub fn bounded_search(
    f: &Factorization,
    g: &Factorization,
    max_depth: usize,
    max_nodes: usize,
) -> Result<SearchOutcome> {
    if f.len() != g.len() {
        return Err(Error::Precondition(format!(
            "search endpoints have different lengths ({} and {})",
            f.len(),
            g.len()
        )));
    }
    if f.factorwise_equal(g)? {
        return Ok(SearchOutcome::Found(HurwitzCertificate::new()));
    }
    let n = f.len();
    let mut sides = [Side::new(f), Side::new(g)];
    let moves: Vec<Move> = (1..n).flat_map(|i| [Move::l(i), Move::r(i)]).collect();
    loop {
        if sides[0].depth + sides[1].depth >= max_depth {
            return Ok(SearchOutcome::Exhausted);
        }
        let s = if sides[0].frontier.is_empty() {
            1
        } else if sides[1].frontier.is_empty() || sides[0].frontier.len() <= sides[1].frontier.len() {
            0
        } else {
            1
        };
        if sides[s].frontier.is_empty() {
            return Ok(SearchOutcome::Exhausted);
        }
        let frontier = std::mem::take(&mut sides[s].frontier);
        let mut next = Vec::new();
        for &i in &frontier {
            let state = sides[s].states[i].0.clone();
            for &m in &moves {
                let child = step(&state, m);
                let k = key(&child);
                if sides[s].find(&k, &child)?.is_some() {
                    continue;
                }
                let other = sides[1 - s].find(&k, &child)?;
                let id = sides[s].states.len();
                sides[s].states.push((child, Some((i, m))));
                sides[s].index.entry(k).or_default().push(id);
                next.push(id);
                if let Some(j) = other {
                    let (fi, gi) = if s == 0 { (id, j) } else { (j, id) };
                    let mut cert = HurwitzCertificate::from_moves(sides[0].path(fi));
                    cert.extend_moves(invert(&sides[1].path(gi)));
                    if check_certificate(f, &cert, g)? {
                        return Ok(SearchOutcome::Found(cert));
                    }
                }
                if sides[0].states.len() + sides[1].states.len() >= max_nodes {
                    return Ok(SearchOutcome::NodeLimit);
                }
            }
        }
        sides[s].frontier = next;
        sides[s].depth += 1;
    }
}
