use super::dehn::{dehn_reduce, dehn_reduce_letters, is_identity, relator_complement};
use super::{SurfaceLetter, SurfaceWord};
use crate::error::BoundExceeded;
use std::collections::{HashMap, VecDeque};

/// Extra room in the centralizer window `|k| ≤ |c₀| + max(|image| + 2) + slack`.
pub const DEFAULT_SLACK: usize = 16;
const DEFAULT_CONJUGACY_NODES: usize = 20_000;

fn concat(a: &[SurfaceLetter], b: &[SurfaceLetter]) -> Vec<SurfaceLetter> {
    let mut v = Vec::with_capacity(a.len() + b.len());
    v.extend_from_slice(a);
    v.extend_from_slice(b);
    v
}

/// Finds the first relator fragment of length ≥ 5 that wraps around the end of
/// the cyclic word `c`; returns how many of its letters sit at the front.
fn wrapping_fragment(c: &[SurfaceLetter]) -> Option<usize> {
    let n = c.len();
    for total in (5..=8.min(n)).rev() {
        for head in 1..total {
            let tail = total - head;
            let window = concat(&c[n - tail..], &c[..head]);
            if relator_complement(&window).is_some() {
                return Some(head);
            }
        }
    }
    None
}

/// Returns `(p, c)` with `w = p c p⁻¹` in the group and `c` cyclically
/// Dehn-reduced: every cyclic rotation of `c` is Dehn-reduced.
pub fn cyclic_reduce(w: &SurfaceWord) -> (SurfaceWord, SurfaceWord) {
    let mut p: Vec<SurfaceLetter> = Vec::new();
    let mut c = dehn_reduce(w).into_letters();
    loop {
        let n = c.len();
        if n >= 2 && c[0] == c[n - 1].inverse() {
            p.push(c[0]);
            c = c[1..n - 1].to_vec();
            continue;
        }
        if let Some(head) = wrapping_fragment(&c) {
            // c = x y with x = c[..head]; continue with y x = x⁻¹ c x.
            p.extend_from_slice(&c[..head]);
            c = dehn_reduce_letters(c[head..].iter().chain(&c[..head]).copied()).into_letters();
            continue;
        }
        break;
    }
    (dehn_reduce(&SurfaceWord::from_letters(p)), SurfaceWord::from_letters(c))
}

/// The least cyclic rotation of `w`, with the conjugator updated to match.
fn canonical(w: &[SurfaceLetter], q: &[SurfaceLetter]) -> (Vec<SurfaceLetter>, Vec<SurfaceLetter>) {
    let n = w.len();
    let best = (0..n.max(1))
        .min_by(|&i, &j| {
            let a = w[i..].iter().chain(&w[..i]);
            let b = w[j..].iter().chain(&w[..j]);
            a.cmp(b)
        })
        .unwrap_or(0);
    if n == 0 {
        return (Vec::new(), q.to_vec());
    }
    (concat(&w[best..], &w[..best]), concat(q, &w[..best]))
}

/// Node of the conjugacy search: a cyclically reduced word `w` together with
/// `q` such that `w = q⁻¹ s q` for the side's starting word `s`.
type Visited = HashMap<Vec<SurfaceLetter>, Vec<SurfaceLetter>>;

fn neighbours(w: &[SurfaceLetter], q: &[SurfaceLetter], cap: usize) -> Vec<(Vec<SurfaceLetter>, Vec<SurfaceLetter>)> {
    let mut out = Vec::new();
    let n = w.len();
    let mut push = |word: Vec<SurfaceLetter>, q: Vec<SurfaceLetter>| {
        let (p, c) = cyclic_reduce(&SurfaceWord::from_letters(word));
        if c.len() <= cap && !c.is_empty() {
            out.push(canonical(c.letters(), &concat(&q, p.letters())));
        }
    };
    for code in 0..8u8 {
        let l = SurfaceLetter::from_code(code);
        let mut word = vec![l.inverse()];
        word.extend_from_slice(w);
        word.push(l);
        push(word, concat(q, &[l]));
    }
    for m in [3usize, 4] {
        if m > n {
            continue;
        }
        for j in 0..n {
            let rot = concat(&w[j..], &w[..j]);
            if let Some(comp) = relator_complement(&rot[..m]) {
                push(concat(comp, &rot[m..]), concat(q, &w[..j]));
            }
        }
    }
    out
}

pub fn conjugator(u: &SurfaceWord, v: &SurfaceWord) -> Result<Option<SurfaceWord>, BoundExceeded> {
    conjugator_with(u, v, DEFAULT_CONJUGACY_NODES)
}

/// Some `c` with `c⁻¹ u c = v`, or `None` when the two are not conjugate.
///
/// Both words are cyclically reduced, then a two-sided breadth-first search
/// over cyclic rotations, single-letter conjugations and half-relator swaps
/// (lengths capped two above the longer input) looks for a common word.
/// Exhausting that search reports `None`; hitting `max_nodes` is an error.
pub fn conjugator_with(
    u: &SurfaceWord,
    v: &SurfaceWord,
    max_nodes: usize,
) -> Result<Option<SurfaceWord>, BoundExceeded> {
    if u.abelianize() != v.abelianize() {
        return Ok(None);
    }
    let (pu, cu) = cyclic_reduce(u);
    let (pv, cv) = cyclic_reduce(v);
    let finish = |qu: &[SurfaceLetter], qv: &[SurfaceLetter]| {
        let big_u = pu.concat(&SurfaceWord::from_letters(qu.to_vec()));
        let big_v = pv.concat(&SurfaceWord::from_letters(qv.to_vec()));
        let c = dehn_reduce(&big_u.concat(&big_v.inverse()));
        assert!(
            is_identity(&c.inverse().concat(u).concat(&c).concat(&v.inverse())),
            "conjugacy search produced an invalid witness"
        );
        c
    };
    if cu.is_empty() || cv.is_empty() {
        return Ok((cu.is_empty() && cv.is_empty()).then(|| finish(&[], &[])));
    }
    let cap = cu.len().max(cv.len()) + 2;
    let (su, qu0) = canonical(cu.letters(), &[]);
    let (sv, qv0) = canonical(cv.letters(), &[]);
    if su == sv {
        return Ok(Some(finish(&qu0, &qv0)));
    }
    let mut seen: [Visited; 2] = [HashMap::new(), HashMap::new()];
    let mut frontier: [VecDeque<Vec<SurfaceLetter>>; 2] = [VecDeque::new(), VecDeque::new()];
    seen[0].insert(su.clone(), qu0);
    seen[1].insert(sv.clone(), qv0);
    frontier[0].push_back(su);
    frontier[1].push_back(sv);
    let mut side = 0;
    while !frontier[0].is_empty() || !frontier[1].is_empty() {
        if frontier[side].is_empty() {
            side = 1 - side;
        }
        let layer: Vec<_> = frontier[side].drain(..).collect();
        for w in layer {
            let q = seen[side][&w].clone();
            for (nw, nq) in neighbours(&w, &q, cap) {
                if seen[side].contains_key(&nw) {
                    continue;
                }
                if let Some(other) = seen[1 - side].get(&nw) {
                    let (qu, qv) = if side == 0 { (&nq, other) } else { (other, &nq) };
                    return Ok(Some(finish(qu, qv)));
                }
                if seen[0].len() + seen[1].len() >= max_nodes {
                    return Err(BoundExceeded { what: "conjugacy search nodes", limit: max_nodes });
                }
                seen[side].insert(nw.clone(), nq);
                frontier[side].push_back(nw);
            }
        }
        side = 1 - side;
    }
    Ok(None)
}

pub fn inner_witness(images: &[SurfaceWord; 4]) -> Result<Option<SurfaceWord>, BoundExceeded> {
    inner_witness_with(images, DEFAULT_SLACK)
}

/// Some `c` with `images[j] = c x_j c⁻¹` for each generator `x_j`, or `None`.
///
/// Any such `c` lies in `c₀⟨a1⟩` where `c₀` conjugates `a1` to the first image,
/// because the centralizer of `a1` is cyclic. The exponent is pinned by `b1`
/// and searched in `|k| ≤ |c₀| + max(|image| + 2) + slack`; running off that
/// window is reported as [`BoundExceeded`].
pub fn inner_witness_with(images: &[SurfaceWord; 4], slack: usize) -> Result<Option<SurfaceWord>, BoundExceeded> {
    let gens = SurfaceWord::generators();
    // c₀⁻¹ images[0] c₀ = a1
    let Some(c0) = conjugator(&images[0], &gens[0])? else {
        return Ok(None);
    };
    let y1 = dehn_reduce(&c0.inverse().concat(&images[1]).concat(&c0));
    if conjugator(&y1, &gens[1])?.is_none() {
        return Ok(None);
    }
    let window = c0.len() + images.iter().map(|w| w.len() + 2).max().unwrap_or(2) + slack;
    let a1 = SurfaceLetter::A1;
    let guess = {
        let l = y1.letters();
        let run = l.iter().take_while(|&&x| x.generator() == 0 && x == l[0]).count() as i64;
        if l.first() == Some(&a1) {
            run
        } else {
            -run
        }
    };
    let pins = |k: i64| {
        let t = SurfaceWord::letter(a1).pow(k);
        is_identity(&t.inverse().concat(&y1).concat(&t).concat(&gens[1].inverse()))
    };
    let k = std::iter::once(guess)
        .chain((0..=window as i64).flat_map(|k| [k, -k]))
        .filter(|k| k.unsigned_abs() as usize <= window)
        .find(|&k| pins(k));
    let Some(k) = k else {
        return Err(BoundExceeded { what: "centralizer window", limit: window });
    };
    let c = dehn_reduce(&c0.concat(&SurfaceWord::letter(a1).pow(k)));
    for j in 2..4 {
        let test = c.inverse().concat(&images[j]).concat(&c).concat(&gens[j].inverse());
        if !is_identity(&test) {
            return Ok(None);
        }
    }
    Ok(Some(c))
}
