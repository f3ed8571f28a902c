use super::{SurfaceLetter, SurfaceWord};
use std::collections::HashMap;
use std::sync::OnceLock;

const RELATOR_LEN: usize = 8;
/// Subwords strictly longer than half the relator are replaced.
const DEHN_THRESHOLD: usize = RELATOR_LEN / 2 + 1;

fn pack(letters: &[SurfaceLetter]) -> u32 {
    let mut key = (letters.len() as u32) << 24;
    for (i, l) in letters.iter().enumerate() {
        key |= (l.code() as u32) << (3 * i);
    }
    key
}

/// Maps every subword `s` of a cyclic rotation of `r` or `r⁻¹` to the word
/// `t⁻¹` where `s t` is that rotation, so `s = t⁻¹` in the group.
fn relator_table() -> &'static HashMap<u32, Vec<SurfaceLetter>> {
    static TABLE: OnceLock<HashMap<u32, Vec<SurfaceLetter>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let r = SurfaceWord::relator();
        let mut table = HashMap::new();
        for cyc in [r.clone(), r.inverse()] {
            let l = cyc.letters();
            for shift in 0..RELATOR_LEN {
                let rot: Vec<SurfaceLetter> =
                    (0..RELATOR_LEN).map(|i| l[(shift + i) % RELATOR_LEN]).collect();
                for k in 1..=RELATOR_LEN {
                    let rest = SurfaceWord::from_letters(rot[k..].to_vec());
                    table.insert(pack(&rot[..k]), rest.inverse().into_letters());
                }
            }
        }
        table
    })
}

/// If `window` is a subword of a rotation of `r^{±1}`, the equal word made of the
/// complementary part.
pub(crate) fn relator_complement(window: &[SurfaceLetter]) -> Option<&'static [SurfaceLetter]> {
    if window.is_empty() || window.len() > RELATOR_LEN {
        return None;
    }
    relator_table().get(&pack(window)).map(Vec::as_slice)
}

pub fn free_reduce(w: &SurfaceWord) -> SurfaceWord {
    let mut out: Vec<SurfaceLetter> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    SurfaceWord::from_letters(out)
}

/// Dehn's algorithm. The output is freely reduced, contains no subword of
/// length ≥ 5 of a rotation of `r^{±1}`, and is empty iff `w` is trivial.
pub fn dehn_reduce(w: &SurfaceWord) -> SurfaceWord {
    dehn_reduce_letters(w.letters().iter().copied())
}

/// Each letter occurs exactly once in `r` and once in `r⁻¹`, so a subword of
/// a rotation is a run of cyclic successors. For both relators this holds the
/// successor of every letter and the three letters replacing the length-5 run
/// that starts at it.
struct Runs {
    succ: [[u8; 8]; 2],
    replace: [[[SurfaceLetter; 3]; 8]; 2],
}

fn runs() -> &'static Runs {
    static RUNS: OnceLock<Runs> = OnceLock::new();
    RUNS.get_or_init(|| {
        let r = SurfaceWord::relator();
        let mut out = Runs { succ: [[0; 8]; 2], replace: [[[SurfaceLetter::A1; 3]; 8]; 2] };
        for (c, cyc) in [r.clone(), r.inverse()].iter().enumerate() {
            let l = cyc.letters();
            for i in 0..RELATOR_LEN {
                let at = |k: usize| l[(i + k) % RELATOR_LEN];
                out.succ[c][at(0).code() as usize] = at(1).code();
                let tail = SurfaceWord::from_letters((DEHN_THRESHOLD..RELATOR_LEN).map(at).collect());
                let rep = tail.inverse();
                out.replace[c][at(0).code() as usize] = [rep.letters()[0], rep.letters()[1], rep.letters()[2]];
            }
        }
        out
    })
}

pub(crate) fn dehn_reduce_letters(input: impl Iterator<Item = SurfaceLetter>) -> SurfaceWord {
    let runs = runs();
    let mut stack: Vec<SurfaceLetter> = Vec::new();
    // Length of the successor run ending at each stack entry, per relator.
    let mut run: Vec<[u8; 2]> = Vec::new();
    // Letters produced by replacements are processed before the remaining input.
    let mut pending: Vec<SurfaceLetter> = Vec::new();
    let mut input = input;
    loop {
        let l = match pending.pop() {
            Some(l) => l,
            None => match input.next() {
                Some(l) => l,
                None => break,
            },
        };
        let top = stack.last().copied();
        if top == Some(l.inverse()) {
            stack.pop();
            run.pop();
            continue;
        }
        let len = |c: usize| match top {
            Some(t) if runs.succ[c][t.code() as usize] == l.code() => run.last().expect("parallel")[c] + 1,
            _ => 1,
        };
        let here = [len(0), len(1)];
        stack.push(l);
        run.push(here);
        if let Some(c) = (0..2).find(|&c| here[c] as usize >= DEHN_THRESHOLD) {
            let n = stack.len() - DEHN_THRESHOLD;
            let first = stack[n];
            stack.truncate(n);
            run.truncate(n);
            pending.extend(runs.replace[c][first.code() as usize].iter().rev());
        }
    }
    SurfaceWord::from_letters(stack)
}

pub fn is_identity(w: &SurfaceWord) -> bool {
    dehn_reduce(w).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Dehn's algorithm checking every window against the relator table.
    fn windowed(w: &SurfaceWord) -> SurfaceWord {
        let mut stack: Vec<SurfaceLetter> = Vec::new();
        let mut pending: Vec<SurfaceLetter> = w.letters().iter().rev().copied().collect();
        while let Some(l) = pending.pop() {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
                continue;
            }
            stack.push(l);
            let n = stack.len();
            for k in (DEHN_THRESHOLD..=RELATOR_LEN.min(n)).rev() {
                if let Some(rep) = relator_complement(&stack[n - k..]) {
                    stack.truncate(n - k);
                    pending.extend(rep.iter().rev());
                    break;
                }
            }
        }
        SurfaceWord::from_letters(stack)
    }

    proptest! {
        #[test]
        fn run_tracking_matches_window_lookup(codes in prop::collection::vec(0u8..8, 0..60)) {
            let w = SurfaceWord::from_letters(codes.into_iter().map(SurfaceLetter::from_code).collect());
            prop_assert_eq!(dehn_reduce(&w), windowed(&w));
        }

        #[test]
        fn relator_heavy_words_agree(picks in prop::collection::vec((0usize..8, 3usize..9, any::<bool>()), 0..12)) {
            let r = SurfaceWord::relator();
            let mut letters = Vec::new();
            for (start, len, inv) in picks {
                let cyc = if inv { r.inverse() } else { r.clone() };
                letters.extend((0..len).map(|i| cyc.letters()[(start + i) % 8]));
            }
            let w = SurfaceWord::from_letters(letters);
            prop_assert_eq!(dehn_reduce(&w), windowed(&w));
        }
    }

    fn w(s: &str) -> SurfaceWord {
        s.parse().unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(free_reduce(&w("a1 a1'")), w(""));
        assert_eq!(free_reduce(&w("")), w(""));
        assert_eq!(free_reduce(&w("a1 b1 b1' a1")), w("a1 a1"));
        assert_eq!(free_reduce(&w("a1 b1 b1' a1' a2")), w("a2"));
    }

    #[test]
    fn relator_is_trivial() {
        let r = SurfaceWord::relator();
        assert!(dehn_reduce(&r).is_empty());
        assert!(is_identity(&r.concat(&r)));
        assert!(is_identity(&r.inverse()));
        assert!(!is_identity(&w("a1")));
        assert_eq!(dehn_reduce(&w("a1")), w("a1"));
    }

    #[test]
    fn five_letters_of_relator_become_three() {
        let r = SurfaceWord::relator();
        let first5 = SurfaceWord::from_letters(r.letters()[..5].to_vec());
        let last3 = SurfaceWord::from_letters(r.letters()[5..].to_vec());
        assert_eq!(dehn_reduce(&first5), last3.inverse());
    }

    #[test]
    fn commutator_product_is_trivial() {
        assert!(is_identity(&w("a1 b1 a1' b1' a2 b2 a2' b2'")));
        // a rotation and a conjugate of the relator
        assert!(is_identity(&w("b2' a1 b1 a1' b1' a2 b2 a2'")));
        assert!(is_identity(&w("b1 a2 b2 a2' b2' a1 b1 a1' b1' b1'")));
    }

    #[test]
    fn reduction_never_lengthens() {
        let words = ["a1 b1 a1' b1' a2", "b2 a2 b1 a1 a1 b1' a2' b2'", "a1 b1 a1' b1' a2 b2 a2'"];
        for s in words {
            let x = w(s);
            assert!(dehn_reduce(&x).len() <= x.len());
        }
    }

    #[test]
    fn complement_table() {
        let r = SurfaceWord::relator();
        let half = &r.letters()[..4];
        let comp = relator_complement(half).unwrap();
        let back = SurfaceWord::from_letters(half.to_vec())
            .concat(&SurfaceWord::from_letters(comp.to_vec()).inverse());
        assert!(is_identity(&back));
    }
}
