//! Text format for factorizations.
//!
//! One factor per line, `base @ conjugator` (for example `z1 @ z2 z3'`), or
//! `base` alone. A line may instead list named factorizations, optionally
//! powered and conjugated: `W0^2 W1 @ z3`. `#` starts a comment. An optional
//! first line `alphabet z` (or `alphabet x` for braid files) names the letters.

use super::named::named_factorization;
use super::{Factorization, TwistBase, TwistFactor};
use crate::error::{Error, Result};
use crate::mcg::MCGWord;
use crate::syntax::{parse_word, GenLetter};

/// A factor as written: its base and conjugator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RawFactor {
    /// A generator index, or `None` for the separating twist.
    pub base: Option<u8>,
    pub conjugator: Vec<GenLetter>,
}

pub(crate) struct Syntax<'a> {
    pub prefix: char,
    pub named_word: &'a dyn Fn(&str) -> Option<Vec<GenLetter>>,
    pub named_factorization: &'a dyn Fn(&str) -> Option<Vec<RawFactor>>,
    pub allow_sigma: bool,
}

fn powered_name(tok: &str) -> (&str, Option<&str>) {
    match tok.split_once('^') {
        Some((n, k)) => (n, Some(k)),
        None => (tok, None),
    }
}

pub(crate) fn parse_raw(text: &str, syntax: &Syntax) -> Result<Vec<RawFactor>> {
    let mut out = Vec::new();
    let mut first = true;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if first {
            first = false;
            if let Some(rest) = line.strip_prefix("alphabet") {
                let alpha = rest.trim();
                if alpha != syntax.prefix.to_string() {
                    return Err(Error::parse(line_no, format!("expected alphabet `{}`, found `{alpha}`", syntax.prefix)));
                }
                continue;
            }
        }
        let (head, conj_text) = match line.split_once('@') {
            Some((h, c)) => (h.trim(), c.trim()),
            None => (line, ""),
        };
        let conj = parse_word(conj_text, syntax.prefix, syntax.named_word).map_err(|m| Error::parse(line_no, m))?;
        let toks: Vec<&str> = head.split_whitespace().collect();
        if toks.is_empty() {
            return Err(Error::parse(line_no, "missing factor before `@`"));
        }
        let as_base = |t: &str| -> Option<Option<u8>> {
            if syntax.allow_sigma && t == "sigma" {
                return Some(None);
            }
            let i: u8 = t.strip_prefix(syntax.prefix)?.parse().ok()?;
            (1..=5).contains(&i).then_some(Some(i))
        };
        if toks.len() == 1 {
            if let Some(base) = as_base(toks[0]) {
                out.push(RawFactor { base, conjugator: conj });
                continue;
            }
        }
        for t in toks {
            let (name, power) = powered_name(t);
            let k: usize = match power {
                Some(k) => k.parse().map_err(|_| Error::parse(line_no, format!("bad power in `{t}`")))?,
                None => 1,
            };
            let factors = (syntax.named_factorization)(name)
                .ok_or_else(|| Error::parse(line_no, format!("unknown factor or factorization `{t}`")))?;
            for _ in 0..k {
                for f in &factors {
                    let mut c = f.conjugator.clone();
                    c.extend_from_slice(&conj);
                    out.push(RawFactor { base: f.base, conjugator: c });
                }
            }
        }
    }
    Ok(out)
}

fn to_raw(f: &Factorization) -> Vec<RawFactor> {
    f.factors()
        .iter()
        .map(|x| RawFactor {
            base: match x.base() {
                TwistBase::Chain(i) => Some(i),
                TwistBase::Sigma => None,
            },
            conjugator: x.conjugator().letters().iter().map(|l| (l.index, l.inverse)).collect(),
        })
        .collect()
}

/// Parses the factorization file format; named `T W0 W1 W2` expand in place.
pub fn parse_factorization(text: &str) -> Result<Factorization> {
    let named_word = |name: &str| {
        crate::mcg::named::named_word(name).map(|w| w.letters().iter().map(|l| (l.index, l.inverse)).collect())
    };
    let named_fact = |name: &str| named_factorization(name).map(|f| to_raw(&f));
    let syntax = Syntax { prefix: 'z', named_word: &named_word, named_factorization: &named_fact, allow_sigma: true };
    let raw = parse_raw(text, &syntax)?;
    Ok(Factorization::new(
        raw.into_iter()
            .map(|r| {
                let conj = MCGWord::from_letters(
                    r.conjugator.into_iter().map(|(i, inv)| crate::mcg::MCGLetter::new(i, inv)).collect(),
                );
                match r.base {
                    Some(i) => TwistFactor::new(TwistBase::Chain(i), conj),
                    None => TwistFactor::new(TwistBase::Sigma, conj),
                }
            })
            .collect(),
    ))
}

impl std::str::FromStr for Factorization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_factorization(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_and_names() {
        let f = parse_factorization("# demo\nz1 @ z2 z3'\nsigma\nz4\n").unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.get(1).unwrap().to_string(), "z1 @ z2 z3'");
        assert_eq!(f.count_separating(), 1);
        let g = parse_factorization("W0 W1").unwrap();
        assert_eq!(g.len(), 50);
        let h = parse_factorization("alphabet z\nW0^2 @ z3\n").unwrap();
        assert_eq!(h.len(), 40);
        assert_eq!(h.get(1).unwrap().to_string(), "z1 @ z3");
    }

    #[test]
    fn display_round_trips() {
        let f = parse_factorization("z1 @ z2 z3'\nsigma @ rho\nW2").unwrap();
        let g = parse_factorization(&f.to_string()).unwrap();
        assert_eq!(f.to_string(), g.to_string());
    }

    #[test]
    fn errors_name_the_line() {
        let e = parse_factorization("z1\nz9\n").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        assert!(parse_factorization("alphabet x\nx1").is_err());
        assert!(parse_factorization("@ z1").is_err());
    }
}
