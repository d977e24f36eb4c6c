//! The text grammar for group specs.
//!
//! ```text
//! atom       := "C"n | "D"n | "Q"n | "S"n | "A"n | "E"p"^"k
//! product    := atom ("x" atom)*
//! semidirect := "C"m ":" "C"k          (m and k must be prime powers)
//! spec       := semidirect | product
//! ```
//!
//! `D` and `Q` take the order of the whole group (`D8` is the dihedral
//! group of order 8, `Q16` the generalized quaternion group of order 16).
//! No whitespace is allowed. [`GroupSpec`]'s `Display` impl emits this
//! grammar back, so every spec round-trips through its text form.

use thiserror::Error;

use crate::arith::prime_power;
use crate::group::{GroupError, GroupSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// Text that does not match the grammar; `position` is a byte offset
    /// into the input.
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    /// Grammar-shaped text whose parameters no family accepts.
    #[error(transparent)]
    Semantic(#[from] GroupError),
}

/// Parses the grammar above and validates the family parameters.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut parser = Parser { text, pos: 0 };
    let spec = parser.spec()?;
    if parser.pos != text.len() {
        return parser.fail(parser.pos, format!("unexpected {:?}", &text[parser.pos..]));
    }
    spec.validate()?;
    Ok(spec)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn fail<T>(&self, position: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { position, message: message.into() })
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.fail(start, "expected a number");
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| ParseError::Syntax { position: start, message: "number too large".into() })
    }

    fn small_number(&mut self, what: &str) -> Result<u32, ParseError> {
        let at = self.pos;
        let n = self.number()?;
        u32::try_from(n)
            .map_err(|_| ParseError::Syntax { position: at, message: format!("{what} too large") })
    }

    fn atom(&mut self) -> Result<GroupSpec, ParseError> {
        let at = self.pos;
        let family = match self.peek() {
            Some(f @ (b'C' | b'D' | b'Q' | b'S' | b'A' | b'E')) => {
                self.pos += 1;
                f
            }
            _ => return self.fail(at, "expected a family letter C, D, Q, S, A or E"),
        };
        Ok(match family {
            b'C' => GroupSpec::Cyclic(self.number()?),
            b'D' => GroupSpec::Dihedral(self.number()?),
            b'Q' => GroupSpec::GeneralizedQuaternion(self.number()?),
            b'S' => GroupSpec::Symmetric(self.small_number("point count")?),
            b'A' => GroupSpec::Alternating(self.small_number("point count")?),
            b'E' => {
                let p = self.number()?;
                if self.peek() != Some(b'^') {
                    return self.fail(self.pos, "expected '^' after the elementary abelian base");
                }
                self.pos += 1;
                GroupSpec::ElementaryAbelian { p, k: self.small_number("rank")? }
            }
            _ => unreachable!("matched above"),
        })
    }

    fn spec(&mut self) -> Result<GroupSpec, ParseError> {
        let first = self.atom()?;
        match self.peek() {
            Some(b':') => {
                let colon = self.pos;
                self.pos += 1;
                let GroupSpec::Cyclic(m) = first else {
                    return self.fail(colon, "the left side of ':' must be a C atom");
                };
                let right_at = self.pos;
                let right = self.atom()?;
                let GroupSpec::Cyclic(k) = right else {
                    return self.fail(right_at, "the right side of ':' must be a C atom");
                };
                let (p, a) = prime_power(m).ok_or_else(|| {
                    GroupError::InvalidSpec(format!(
                        "semidirect left order {m} is not a prime power"
                    ))
                })?;
                let (q, b) = prime_power(k).ok_or_else(|| {
                    GroupError::InvalidSpec(format!(
                        "semidirect right order {k} is not a prime power"
                    ))
                })?;
                Ok(GroupSpec::SemidirectCyclic { p, a, q, b })
            }
            Some(b'x') => {
                let mut factors = vec![first];
                while self.peek() == Some(b'x') {
                    self.pos += 1;
                    factors.push(self.atom()?);
                }
                Ok(GroupSpec::DirectProduct(factors))
            }
            _ => Ok(first),
        }
    }
}
