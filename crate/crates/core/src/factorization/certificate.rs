use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    L,
    R,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::L => Direction::R,
            Direction::R => Direction::L,
        }
    }
}

/// One elementary Hurwitz move at a 1-based position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub position: usize,
    pub direction: Direction,
}

impl Move {
    pub fn l(position: usize) -> Self {
        Self { position, direction: Direction::L }
    }

    pub fn r(position: usize) -> Self {
        Self { position, direction: Direction::R }
    }

    pub fn inverse(self) -> Self {
        Self { position: self.position, direction: self.direction.flip() }
    }

    pub fn shifted(self, offset: usize) -> Self {
        Self { position: self.position + offset, direction: self.direction }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {}", self.direction, self.position)
    }
}

/// A named, deterministic block of moves, expanded at replay time.
///
/// | macro | arguments | effect |
/// |---|---|---|
/// | `shift` | `from to` | moves one factor unchanged; the ones it passes are conjugated |
/// | `carry` | `from to` | moves one factor, conjugating it; the ones it passes are unchanged |
/// | `block` | `start len dist` | moves a block unchanged by `dist` places (negative is leftwards) |
/// | `carry_block` | `start len dist` | moves a block conjugated, leaving the passed factors unchanged |
/// | `invariance` | `offset X word` | `(X)_γ ∼ X` for `X` in `T W0 W1` |
/// | `square_to_cube` | `offset` | `(W1)² ∼ (W0)³` |
/// | `sigma_exchange` | `offset` | `(ζ1ζ2)³(ζ4ζ5)³·T·W2 ∼ σ·W0·W1` |
/// | `inverse` | `name args…` | the inverse of another macro |
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacroCall {
    pub name: String,
    pub args: Vec<String>,
}

impl MacroCall {
    pub fn new(name: &str, args: impl IntoIterator<Item = impl ToString>) -> Self {
        Self { name: name.to_string(), args: args.into_iter().map(|a| a.to_string()).collect() }
    }

    pub fn inverse(&self) -> Self {
        if self.name == "inverse" {
            let mut args = self.args.clone();
            let name = args.remove(0);
            Self { name, args }
        } else {
            let mut args = vec![self.name.clone()];
            args.extend(self.args.iter().cloned());
            Self { name: "inverse".into(), args }
        }
    }

    fn arg_err(&self, message: impl Into<String>) -> Error {
        Error::MacroArgs { name: self.name.clone(), message: message.into() }
    }

    fn int(&self, k: usize) -> Result<i64> {
        let s = self.args.get(k).ok_or_else(|| self.arg_err(format!("missing argument {}", k + 1)))?;
        s.parse().map_err(|_| self.arg_err(format!("`{s}` is not an integer")))
    }

    fn pos(&self, k: usize) -> Result<usize> {
        let v = self.int(k)?;
        usize::try_from(v).map_err(|_| self.arg_err(format!("`{v}` is negative")))
    }

    /// The same macro acting `offset` places further right.
    pub fn shifted(&self, offset: usize) -> Result<Self> {
        let mut out = self.clone();
        let bump = |out: &mut Self, k: usize| -> Result<()> {
            let v = self.pos(k)?;
            out.args[k] = (v + offset).to_string();
            Ok(())
        };
        match self.name.as_str() {
            "shift" | "carry" => {
                bump(&mut out, 0)?;
                bump(&mut out, 1)?;
            }
            "inverse" => {
                let inner = MacroCall { name: self.args[0].clone(), args: self.args[1..].to_vec() };
                return Ok(inner.shifted(offset)?.inverse());
            }
            _ => bump(&mut out, 0)?,
        }
        Ok(out)
    }

    /// Deterministic expansion into elementary moves.
    pub fn expand(&self) -> Result<Vec<Move>> {
        match self.name.as_str() {
            "shift" => Ok(shift(self.pos(0)?, self.pos(1)?)),
            "carry" => Ok(carry(self.pos(0)?, self.pos(1)?)),
            "block" => Ok(block(self.pos(0)?, self.pos(1)?, self.int(2)?)),
            "carry_block" => Ok(carry_block(self.pos(0)?, self.pos(1)?, self.int(2)?)),
            "inverse" => {
                let name = self.args.first().ok_or_else(|| self.arg_err("missing macro name"))?;
                let inner = MacroCall { name: name.clone(), args: self.args[1..].to_vec() };
                Ok(invert(&inner.expand()?))
            }
            _ => crate::identities::expand_macro(self),
        }
    }
}

impl fmt::Display for MacroCall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MACRO {}", self.name)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

/// The inverse of a move sequence.
pub fn invert(moves: &[Move]) -> Vec<Move> {
    moves.iter().rev().map(|m| m.inverse()).collect()
}

/// Moves the factor at `from` to `to` unchanged.
pub fn shift(from: usize, to: usize) -> Vec<Move> {
    if from > to {
        (to..from).rev().map(Move::r).collect()
    } else {
        (from..to).map(Move::l).collect()
    }
}

/// Moves the factor at `from` to `to`, conjugating it by what it passes.
pub fn carry(from: usize, to: usize) -> Vec<Move> {
    if from < to {
        (from..to).map(Move::r).collect()
    } else {
        (to..from).rev().map(Move::l).collect()
    }
}

/// Moves the block `[start, start + len)` by `dist` places, the block unchanged.
pub fn block(start: usize, len: usize, dist: i64) -> Vec<Move> {
    let d = dist.unsigned_abs() as usize;
    if dist >= 0 {
        (0..d).flat_map(|k| carry(start + len + k, start + k)).collect()
    } else {
        (0..d).flat_map(|k| carry(start - 1 - k, start - 1 - k + len)).collect()
    }
}

/// Moves the block `[start, start + len)` by `dist` places, conjugating it.
pub fn carry_block(start: usize, len: usize, dist: i64) -> Vec<Move> {
    let d = dist.unsigned_abs() as usize;
    if dist >= 0 {
        (0..len).rev().flat_map(|j| carry(start + j, start + j + d)).collect()
    } else {
        (0..len).flat_map(|j| carry(start + j, start + j - d)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertStep {
    Move(Move),
    Macro(MacroCall),
}

impl CertStep {
    pub fn inverse(&self) -> Self {
        match self {
            CertStep::Move(m) => CertStep::Move(m.inverse()),
            CertStep::Macro(c) => CertStep::Macro(c.inverse()),
        }
    }

    pub fn shifted(&self, offset: usize) -> Result<Self> {
        Ok(match self {
            CertStep::Move(m) => CertStep::Move(m.shifted(offset)),
            CertStep::Macro(c) => CertStep::Macro(c.shifted(offset)?),
        })
    }

    pub fn expand(&self) -> Result<Vec<Move>> {
        match self {
            CertStep::Move(m) => Ok(vec![*m]),
            CertStep::Macro(c) => c.expand(),
        }
    }
}

/// A replayable witness of Hurwitz equivalence: elementary moves and macros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HurwitzCertificate {
    pub steps: Vec<CertStep>,
}

impl HurwitzCertificate {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_moves(moves: impl IntoIterator<Item = Move>) -> Self {
        Self { steps: moves.into_iter().map(CertStep::Move).collect() }
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, m: Move) {
        self.steps.push(CertStep::Move(m));
    }

    pub fn push_macro(&mut self, call: MacroCall) {
        self.steps.push(CertStep::Macro(call));
    }

    pub fn extend_moves(&mut self, moves: impl IntoIterator<Item = Move>) {
        self.steps.extend(moves.into_iter().map(CertStep::Move));
    }

    pub fn append(&mut self, other: &HurwitzCertificate) {
        self.steps.extend(other.steps.iter().cloned());
    }

    /// Reverse order, each step inverted.
    pub fn inverse(&self) -> Self {
        Self { steps: self.steps.iter().rev().map(CertStep::inverse).collect() }
    }

    /// The same certificate acting on factors `offset` places further right.
    pub fn shifted(&self, offset: usize) -> Result<Self> {
        Ok(Self { steps: self.steps.iter().map(|s| s.shifted(offset)).collect::<Result<_>>()? })
    }

    /// All elementary moves, with macros expanded.
    pub fn expand(&self) -> Result<Vec<Move>> {
        let mut out = Vec::new();
        for s in &self.steps {
            out.extend(s.expand()?);
        }
        Ok(out)
    }

    pub fn move_count(&self) -> Result<usize> {
        let mut n = 0;
        for s in &self.steps {
            n += match s {
                CertStep::Move(_) => 1,
                CertStep::Macro(c) => c.expand()?.len(),
            };
        }
        Ok(n)
    }
}

impl fmt::Display for HurwitzCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            match s {
                CertStep::Move(m) => writeln!(f, "{m}")?,
                CertStep::Macro(c) => writeln!(f, "{c}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for HurwitzCertificate {
    type Err = Error;

    /// Lines `L <i>`, `R <i>` or `MACRO <name> <args…>`; `#` starts a comment.
    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for (n, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut toks = line.split_whitespace();
            let head = toks.next().unwrap_or_default();
            match head {
                "L" | "R" => {
                    let pos = toks
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| Error::parse(n + 1, "expected a position after the direction"))?;
                    if toks.next().is_some() {
                        return Err(Error::parse(n + 1, "trailing tokens after move"));
                    }
                    let direction = if head == "L" { Direction::L } else { Direction::R };
                    steps.push(CertStep::Move(Move { position: pos, direction }));
                }
                "MACRO" => {
                    let name = toks.next().ok_or_else(|| Error::parse(n + 1, "MACRO without a name"))?;
                    steps.push(CertStep::Macro(MacroCall::new(name, toks)));
                }
                other => return Err(Error::parse(n + 1, format!("unknown certificate line `{other}`"))),
            }
        }
        Ok(Self { steps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let text = "R 3\nL 1\nMACRO shift 5 1\n";
        let c: HurwitzCertificate = text.parse().unwrap();
        assert_eq!(c.to_string(), text);
        assert!("X 3".parse::<HurwitzCertificate>().is_err());
        assert!("R".parse::<HurwitzCertificate>().is_err());
        let with_comments: HurwitzCertificate = "# header\n\nR 2 # trailing\n".parse().unwrap();
        assert_eq!(with_comments.steps, vec![CertStep::Move(Move::r(2))]);
    }

    #[test]
    fn macro_expansion_shapes() {
        assert_eq!(shift(4, 1), vec![Move::r(3), Move::r(2), Move::r(1)]);
        assert_eq!(shift(1, 3), vec![Move::l(1), Move::l(2)]);
        assert_eq!(carry(1, 3), vec![Move::r(1), Move::r(2)]);
        assert_eq!(carry(3, 1), vec![Move::l(2), Move::l(1)]);
        assert_eq!(block(1, 2, 1), vec![Move::l(2), Move::l(1)]);
        assert_eq!(block(2, 2, -1), vec![Move::r(1), Move::r(2)]);
    }

    #[test]
    fn inverse_of_inverse_macro() {
        let c = MacroCall::new("shift", [5, 1]);
        assert_eq!(c.inverse().inverse(), c);
        assert_eq!(c.inverse().expand().unwrap(), invert(&shift(5, 1)));
        assert_eq!(c.inverse().shifted(2).unwrap().expand().unwrap(), invert(&shift(7, 3)));
    }
}
