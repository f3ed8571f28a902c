//! Shared text syntax for words over five generators.
//!
//! `z1 z2' (z1 z2)^6 sigma'` style: letters `<prefix>1..<prefix>5`, a postfix
//! `'` inverts the preceding letter or group, `^n` raises it to an integer
//! power, parentheses group, and `1` is the empty word. Named words supplied by
//! the caller expand in place. `*` and `·` are accepted as separators.

/// A generator index in `1..=5` and whether it is inverted.
pub(crate) type GenLetter = (u8, bool);

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    Caret,
    Prime,
    Int(i64),
    Ident(String),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() || c == '*' || c == '·' => i += 1,
            '(' => {
                out.push(Tok::Open);
                i += 1
            }
            ')' => {
                out.push(Tok::Close);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '\'' => {
                out.push(Tok::Prime);
                i += 1
            }
            c if c.is_ascii_digit() || c == '-' => {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Tok::Int(text.parse().map_err(|_| format!("bad integer `{text}`"))?));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(format!("unexpected character `{other}`")),
        }
    }
    Ok(out)
}

fn invert(w: &[GenLetter]) -> Vec<GenLetter> {
    w.iter().rev().map(|&(i, inv)| (i, !inv)).collect()
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    prefix: char,
    named: &'a dyn Fn(&str) -> Option<Vec<GenLetter>>,
}

impl Parser<'_> {
    fn word(&mut self) -> Result<Vec<GenLetter>, String> {
        let mut out = Vec::new();
        while self.pos < self.toks.len() && self.toks[self.pos] != Tok::Close {
            let atom = self.atom()?;
            out.extend(self.postfix(atom)?);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Vec<GenLetter>, String> {
        let tok = self.toks[self.pos].clone();
        self.pos += 1;
        match tok {
            Tok::Open => {
                let inner = self.word()?;
                if self.toks.get(self.pos) != Some(&Tok::Close) {
                    return Err("unbalanced `(`".into());
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Int(1) => Ok(Vec::new()),
            Tok::Ident(name) => self.ident(&name),
            other => Err(format!("unexpected token {other:?}")),
        }
    }

    fn ident(&self, name: &str) -> Result<Vec<GenLetter>, String> {
        let mut cs = name.chars();
        if cs.next() == Some(self.prefix) {
            if let Ok(i) = cs.as_str().parse::<u8>() {
                if (1..=5).contains(&i) {
                    return Ok(vec![(i, false)]);
                }
                return Err(format!("generator index out of range in `{name}`"));
            }
        }
        (self.named)(name).ok_or_else(|| format!("unknown symbol `{name}`"))
    }

    fn postfix(&mut self, mut w: Vec<GenLetter>) -> Result<Vec<GenLetter>, String> {
        loop {
            match self.toks.get(self.pos) {
                Some(Tok::Prime) => {
                    self.pos += 1;
                    w = invert(&w);
                }
                Some(Tok::Caret) => {
                    self.pos += 1;
                    let Some(Tok::Int(k)) = self.toks.get(self.pos).cloned() else {
                        return Err("expected an integer after `^`".into());
                    };
                    self.pos += 1;
                    let base = if k < 0 { invert(&w) } else { w };
                    w = base.iter().copied().cycle().take(base.len() * k.unsigned_abs() as usize).collect();
                }
                _ => return Ok(w),
            }
        }
    }
}

pub(crate) fn parse_word(
    s: &str,
    prefix: char,
    named: &dyn Fn(&str) -> Option<Vec<GenLetter>>,
) -> Result<Vec<GenLetter>, String> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0, prefix, named };
    let w = p.word()?;
    if p.pos != p.toks.len() {
        return Err("unbalanced `)`".into());
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Vec<GenLetter> {
        let named = |n: &str| (n == "D").then(|| vec![(1, false), (2, false)]);
        parse_word(s, 'z', &named).unwrap()
    }

    #[test]
    fn letters_groups_and_powers() {
        assert_eq!(parse("z1 z2'"), vec![(1, false), (2, true)]);
        assert_eq!(parse("(z1 z2)^2"), vec![(1, false), (2, false), (1, false), (2, false)]);
        assert_eq!(parse("(z1 z2)'"), vec![(2, true), (1, true)]);
        assert_eq!(parse("z3^-2"), vec![(3, true), (3, true)]);
        assert_eq!(parse("D z5"), vec![(1, false), (2, false), (5, false)]);
        assert_eq!(parse("1"), vec![]);
        assert_eq!(parse(""), vec![]);
    }

    #[test]
    fn rejects_garbage() {
        let none = |_: &str| None;
        assert!(parse_word("z6", 'z', &none).is_err());
        assert!(parse_word("(z1", 'z', &none).is_err());
        assert!(parse_word("z1)", 'z', &none).is_err());
        assert!(parse_word("x1", 'z', &none).is_err());
        assert!(parse_word("z1^", 'z', &none).is_err());
    }
}
