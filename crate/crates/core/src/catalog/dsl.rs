//! The algebra-specification language.
//!
//! ```text
//! expr := atom | call
//! atom := "B2" | "C5" | ("G" | "L" | "N" | "DP") digits
//! call := "osum(" expr "," expr ")" | ("crot(" | "drot(" | "K(" | "K0(") expr ")"
//! ```
//! Whitespace is insignificant.

use std::fmt;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::twist;

use super::{
    boolean2, connected_rotation, disconnected_rotation, dp_chain, godel_chain, nm_chain, ordinal_sum,
    rigid_witness_c5, trivial, wajsberg_chain,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    B2,
    C5,
    /// `G n`: Gödel chain with `n` elements; `G1` is the trivial algebra.
    Godel(usize),
    /// `L n`: Wajsberg chain with `n + 1` elements.
    Wajsberg(usize),
    /// `N k`: nilpotent minimum chain with `k` elements.
    Nm(usize),
    /// `DP n`: drastic product chain with `n` elements.
    Dp(usize),
    /// An explicit table, e.g. loaded from a file.
    Table(Box<FiniteAlgebra>),
    OrdinalSum(Box<AlgebraSpec>, Box<AlgebraSpec>),
    ConnectedRotation(Box<AlgebraSpec>),
    DisconnectedRotation(Box<AlgebraSpec>),
    Kalman(Box<AlgebraSpec>),
    MinimalKalman(Box<AlgebraSpec>),
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::B2 => write!(f, "B2"),
            AlgebraSpec::C5 => write!(f, "C5"),
            AlgebraSpec::Godel(n) => write!(f, "G{n}"),
            AlgebraSpec::Wajsberg(n) => write!(f, "L{n}"),
            AlgebraSpec::Nm(n) => write!(f, "N{n}"),
            AlgebraSpec::Dp(n) => write!(f, "DP{n}"),
            AlgebraSpec::Table(a) => write!(f, "{}", a.name()),
            AlgebraSpec::OrdinalSum(a, b) => write!(f, "osum({a},{b})"),
            AlgebraSpec::ConnectedRotation(a) => write!(f, "crot({a})"),
            AlgebraSpec::DisconnectedRotation(a) => write!(f, "drot({a})"),
            AlgebraSpec::Kalman(a) => write!(f, "K({a})"),
            AlgebraSpec::MinimalKalman(a) => write!(f, "K0({a})"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        let before = &self.src[..self.pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn expect(&mut self, tok: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len_utf8();
            Ok(())
        } else if self.rest().is_empty() {
            Err(self.error(format!("expected '{tok}' but reached end of input")))
        } else {
            Err(self.error(format!("expected '{tok}'")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let digits: &str = {
            let rest = self.rest();
            let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            &rest[..end]
        };
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        let value = digits.parse().map_err(|_| self.error("number out of range"))?;
        self.pos += digits.len();
        Ok(value)
    }

    fn expr(&mut self) -> Result<AlgebraSpec> {
        self.skip_ws();
        if self.rest().is_empty() {
            return Err(self.error("unexpected end of input"));
        }
        let ident_len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(self.rest().len());
        let ident = &self.rest()[..ident_len];
        let start = self.pos;

        let unary = |p: &mut Self, make: fn(Box<AlgebraSpec>) -> AlgebraSpec| -> Result<AlgebraSpec> {
            p.pos += ident_len;
            p.expect('(')?;
            let inner = p.expr()?;
            p.expect(')')?;
            Ok(make(Box::new(inner)))
        };
        match ident {
            "osum" => {
                self.pos += ident_len;
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(AlgebraSpec::OrdinalSum(Box::new(a), Box::new(b)))
            }
            "crot" => unary(self, AlgebraSpec::ConnectedRotation),
            "drot" => unary(self, AlgebraSpec::DisconnectedRotation),
            "K" => unary(self, AlgebraSpec::Kalman),
            "K0" => unary(self, AlgebraSpec::MinimalKalman),
            "B2" => {
                self.pos += 2;
                Ok(AlgebraSpec::B2)
            }
            "C5" => {
                self.pos += 2;
                Ok(AlgebraSpec::C5)
            }
            _ => {
                let (prefix, make): (&str, fn(usize) -> AlgebraSpec) = if ident.starts_with("DP") {
                    ("DP", AlgebraSpec::Dp)
                } else if ident.starts_with('G') {
                    ("G", AlgebraSpec::Godel)
                } else if ident.starts_with('L') {
                    ("L", AlgebraSpec::Wajsberg)
                } else if ident.starts_with('N') {
                    ("N", AlgebraSpec::Nm)
                } else {
                    return Err(self.error(format!("unknown algebra name {ident:?}")));
                };
                self.pos += prefix.len();
                let n = self.number()?;
                if self.pos != start + ident_len {
                    self.pos = start;
                    return Err(self.error(format!("unknown algebra name {ident:?}")));
                }
                Ok(make(n))
            }
        }
    }
}

/// Parses an algebra specification such as `K(osum(B2,L2))`.
pub fn parse_spec(text: &str) -> Result<AlgebraSpec> {
    let mut p = Parser { src: text, pos: 0 };
    let spec = p.expr()?;
    p.skip_ws();
    if !p.rest().is_empty() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(spec)
}

/// Predicted element count of `spec`, without building any tables.
fn predicted_size(spec: &AlgebraSpec) -> Option<usize> {
    Some(match spec {
        AlgebraSpec::B2 => 2,
        AlgebraSpec::C5 => 5,
        AlgebraSpec::Godel(n) | AlgebraSpec::Nm(n) | AlgebraSpec::Dp(n) => *n,
        AlgebraSpec::Wajsberg(n) => n.checked_add(1)?,
        AlgebraSpec::Table(a) => a.size(),
        AlgebraSpec::OrdinalSum(a, b) => (predicted_size(a)? + predicted_size(b)?).checked_sub(1)?,
        AlgebraSpec::ConnectedRotation(a) => predicted_size(a)?.checked_mul(2)?.checked_add(1)?,
        AlgebraSpec::DisconnectedRotation(a) => predicted_size(a)?.checked_mul(2)?,
        AlgebraSpec::Kalman(a) | AlgebraSpec::MinimalKalman(a) => {
            let n = predicted_size(a)?;
            n.checked_mul(n)?
        }
    })
}

/// Builds the algebra described by `spec`, composing the catalog constructors.
///
/// Every intermediate table is checked against `limits.max_cells` before it is
/// allocated.
pub fn build_spec(spec: &AlgebraSpec, limits: &Limits) -> Result<FiniteAlgebra> {
    let size = predicted_size(spec).unwrap_or(usize::MAX);
    limits.check_cells(size)?;
    match spec {
        AlgebraSpec::B2 => Ok(boolean2()),
        AlgebraSpec::C5 => Ok(rigid_witness_c5()),
        AlgebraSpec::Godel(1) => Ok(trivial().with_name("G1")),
        AlgebraSpec::Godel(n) => godel_chain(*n),
        AlgebraSpec::Wajsberg(n) => wajsberg_chain(*n),
        AlgebraSpec::Nm(n) => nm_chain(*n),
        AlgebraSpec::Dp(n) => dp_chain(*n),
        AlgebraSpec::Table(a) => Ok((**a).clone()),
        AlgebraSpec::OrdinalSum(a, b) => ordinal_sum(&build_spec(a, limits)?, &build_spec(b, limits)?),
        AlgebraSpec::ConnectedRotation(a) => connected_rotation(&build_spec(a, limits)?),
        AlgebraSpec::DisconnectedRotation(a) => disconnected_rotation(&build_spec(a, limits)?),
        AlgebraSpec::Kalman(a) => twist::twist_product(&build_spec(a, limits)?),
        AlgebraSpec::MinimalKalman(a) => {
            let base = build_spec(a, limits)?;
            twist::minimal_admissible_algebra(&base)
        }
    }
}
