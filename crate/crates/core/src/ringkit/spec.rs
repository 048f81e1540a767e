use std::fmt;

use crate::error::{Error, Result};
use crate::zlinalg::factorize;

/// One factor of a product ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    /// `Z/n`
    Modular(u64),
    /// `GF(p^d)`
    Field { p: u64, d: u32 },
    /// `F_p[t]/t^k`
    Truncated { p: u64, k: u32 },
}

impl Atom {
    pub fn order(&self) -> Option<u64> {
        match *self {
            Atom::Modular(n) => Some(n),
            Atom::Field { p, d } => p.checked_pow(d),
            Atom::Truncated { p, k } => p.checked_pow(k),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Atom::Modular(n) => write!(f, "Z/{n}"),
            Atom::Field { p, d } => write!(f, "GF({})", p.pow(d)),
            Atom::Truncated { p, k } => write!(f, "F{p}[t]/t^{k}"),
        }
    }
}

/// A ring expression: the product of its atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    pub atoms: Vec<Atom>,
}

impl RingSpec {
    pub fn order(&self) -> Option<u64> {
        self.atoms
            .iter()
            .try_fold(1u64, |acc, a| a.order().and_then(|o| acc.checked_mul(o)))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.atoms.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl std::str::FromStr for RingSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_ring_spec(s)
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    fn error<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset,
            message: message.into(),
        })
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.error(self.pos, format!("expected `{token}`"))
        }
    }

    fn uint(&mut self) -> Result<(usize, u64)> {
        self.skip_ws();
        let start = self.pos;
        let digits: usize = self.text[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return self.error(start, "expected an unsigned integer");
        }
        self.pos += digits;
        match self.text[start..self.pos].parse::<u64>() {
            Ok(v) => Ok((start, v)),
            Err(_) => self.error(start, "integer too large"),
        }
    }

    fn atom(&mut self) -> Result<Atom> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("GF") {
            self.expect("(")?;
            let (at, q) = self.uint()?;
            self.expect(")")?;
            let f = factorize(q);
            if q < 2 || f.len() != 1 {
                return self.error(at, format!("{q} is not a prime power"));
            }
            let (p, d) = f[0];
            Ok(Atom::Field { p, d })
        } else if self.eat("Z") {
            self.expect("/")?;
            let (at, n) = self.uint()?;
            if n < 2 {
                return self.error(at, format!("modulus {n} is smaller than 2"));
            }
            Ok(Atom::Modular(n))
        } else if self.eat("F") {
            let (at, p) = self.uint()?;
            let f = factorize(p);
            if p < 2 || f.len() != 1 || f[0].1 != 1 {
                return self.error(at, format!("{p} is not a prime"));
            }
            self.expect("[")?;
            self.expect("t")?;
            self.expect("]")?;
            self.expect("/")?;
            self.expect("t")?;
            self.expect("^")?;
            let (at, k) = self.uint()?;
            if k < 1 || k > u32::MAX as u64 {
                return self.error(at, "nilpotency degree must be at least 1");
            }
            Ok(Atom::Truncated { p, k: k as u32 })
        } else {
            self.error(start, "expected `Z/`, `GF(` or `F`")
        }
    }
}

/// Parses `spec := atom { "x" atom }`.
pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    let mut c = Cursor { text, pos: 0 };
    if c.at_end() {
        return c.error(0, "empty ring specification");
    }
    let mut atoms = vec![c.atom()?];
    while !c.at_end() {
        if !c.eat("x") {
            return c.error(c.pos, "expected `x` between factors");
        }
        atoms.push(c.atom()?);
    }
    Ok(RingSpec { atoms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_atoms() {
        assert_eq!(parse_ring_spec("Z/12").unwrap().atoms, vec![Atom::Modular(12)]);
        assert_eq!(
            parse_ring_spec("GF(9) x Z/4").unwrap().atoms,
            vec![Atom::Field { p: 3, d: 2 }, Atom::Modular(4)]
        );
        assert_eq!(
            parse_ring_spec(" F2 [t]/t^2 ").unwrap().atoms,
            vec![Atom::Truncated { p: 2, k: 2 }]
        );
        assert_eq!(parse_ring_spec("Z/2xZ/3").unwrap().to_string(), "Z/2 x Z/3");
    }

    #[test]
    fn reports_offsets() {
        let err = |s: &str| match parse_ring_spec(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(err("GF(6)"), 3);
        assert_eq!(err("Z/1"), 2);
        assert_eq!(err("Z/4 y"), 4);
        assert_eq!(err(""), 0);
        assert_eq!(err("F4[t]/t^2"), 1);
        assert_eq!(err("Z/4 x"), 5);
    }
}
