//! Terms over `∧ ∨ · → 0 1`, a small textual syntax for them, and exhaustive
//! identity checking on finite algebras.
//!
//! Syntax, loosest binding first: `->` (right associative), `|` (join), `&`
//! (meet), `*` (product), prefix `!t` for `t -> 0` and `~t` for `t -> 1`.
//! Variables are lowercase identifiers; the constants are `0` and `1`.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{Elem, FiniteAlgebra, Op};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Bin(Op, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn bin(op: Op, l: Term, r: Term) -> Term {
        Term::Bin(op, Box::new(l), Box::new(r))
    }

    pub fn meet(self, r: Term) -> Term {
        Term::bin(Op::Meet, self, r)
    }

    pub fn join(self, r: Term) -> Term {
        Term::bin(Op::Join, self, r)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, r: Term) -> Term {
        Term::bin(Op::Mul, self, r)
    }

    pub fn imp(self, r: Term) -> Term {
        Term::bin(Op::Imp, self, r)
    }

    /// `¬t = t → 0`
    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Term {
        self.imp(Term::Zero)
    }

    /// `∼t = t → 1`
    pub fn tilde(self) -> Term {
        self.imp(Term::One)
    }

    pub fn parse(text: &str) -> Result<Term> {
        let mut p = Parser::new(text);
        let t = p.term()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(t)
    }

    /// Variables in lexicographic order.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Zero | Term::One => {}
            Term::Bin(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn mentions_zero(&self) -> bool {
        match self {
            Term::Zero => true,
            Term::Var(_) | Term::One => false,
            Term::Bin(_, l, r) => l.mentions_zero() || r.mentions_zero(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Zero => write!(f, "0"),
            Term::One => write!(f, "1"),
            Term::Bin(op, l, r) => {
                let sym = match op {
                    Op::Meet => "&",
                    Op::Join => "|",
                    Op::Mul => "*",
                    Op::Imp => "->",
                };
                write!(f, "({l} {sym} {r})")
            }
        }
    }
}

/// An equation `lhs ≈ rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Identity { lhs, rhs }
    }

    /// Parses `lhs = rhs`.
    pub fn parse(text: &str) -> Result<Identity> {
        let mut p = Parser::new(text);
        let lhs = p.term()?;
        p.skip_ws();
        if !p.eat("=") {
            return Err(p.error("expected '='"));
        }
        let rhs = p.term()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(Identity { lhs, rhs })
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: &str) -> Error {
        let before = &self.src[..self.pos.min(self.src.len())];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = before.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        Error::Syntax {
            line,
            column,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn term(&mut self) -> Result<Term> {
        let lhs = self.join()?;
        if self.eat("->") {
            let rhs = self.term()?;
            Ok(lhs.imp(rhs))
        } else {
            Ok(lhs)
        }
    }

    fn join(&mut self) -> Result<Term> {
        let mut t = self.meet()?;
        while self.eat("|") {
            t = t.join(self.meet()?);
        }
        Ok(t)
    }

    fn meet(&mut self) -> Result<Term> {
        let mut t = self.product()?;
        while self.eat("&") {
            t = t.meet(self.product()?);
        }
        Ok(t)
    }

    fn product(&mut self) -> Result<Term> {
        let mut t = self.unary()?;
        while self.eat("*") {
            t = t.mul(self.unary()?);
        }
        Ok(t)
    }

    fn unary(&mut self) -> Result<Term> {
        if self.eat("!") {
            return Ok(self.unary()?.neg());
        }
        if self.eat("~") {
            return Ok(self.unary()?.tilde());
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Term> {
        self.skip_ws();
        match self.src.get(self.pos) {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let t = self.term()?;
                if !self.eat(")") {
                    return Err(self.error("expected ')'"));
                }
                Ok(t)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(Term::Zero)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Term::One)
            }
            Some(c) if c.is_ascii_lowercase() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(Term::var(name))
            }
            Some(_) => Err(self.error("unexpected character")),
        }
    }
}

/// Postfix program for fast repeated evaluation.
#[derive(Clone, Debug)]
enum Instr {
    Var(usize),
    Const(Elem),
    Apply(Op),
}

fn compile(t: &Term, vars: &[String], a: &FiniteAlgebra, out: &mut Vec<Instr>) -> Result<()> {
    match t {
        Term::Var(v) => out.push(Instr::Var(vars.binary_search(v).expect("collected variable"))),
        Term::One => out.push(Instr::Const(a.one())),
        Term::Zero => out.push(Instr::Const(a.require_zero("constant 0 in term")?)),
        Term::Bin(op, l, r) => {
            compile(l, vars, a, out)?;
            compile(r, vars, a, out)?;
            out.push(Instr::Apply(*op));
        }
    }
    Ok(())
}

fn run(prog: &[Instr], env: &[Elem], a: &FiniteAlgebra, stack: &mut Vec<Elem>) -> Elem {
    stack.clear();
    for ins in prog {
        match *ins {
            Instr::Var(i) => stack.push(env[i]),
            Instr::Const(c) => stack.push(c),
            Instr::Apply(op) => {
                let r = stack.pop().expect("well-formed program");
                let l = stack.pop().expect("well-formed program");
                stack.push(a.apply(op, l, r));
            }
        }
    }
    stack[0]
}

/// A variable assignment, in lexicographic variable order.
pub type Assignment = Vec<(String, Elem)>;

/// Outcome of an identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// The lexicographically first falsifying assignment.
    Fails(Assignment),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn counterexample(&self) -> Option<&Assignment> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(a) => Some(a),
        }
    }
}

/// Evaluates `t` under `assignment`; variables missing from it are an error.
pub fn evaluate(a: &FiniteAlgebra, t: &Term, assignment: &[(String, Elem)]) -> Result<Elem> {
    let vars: Vec<String> = t.variables().into_iter().collect();
    let mut env = Vec::with_capacity(vars.len());
    for v in &vars {
        let val = assignment
            .iter()
            .find(|(n, _)| n == v)
            .map(|&(_, e)| e)
            .ok_or_else(|| Error::pre(format!("variable {v} is unassigned")))?;
        if val >= a.size() {
            return Err(Error::pre(format!("value {val} for {v} is out of range")));
        }
        env.push(val);
    }
    let mut prog = Vec::new();
    compile(t, &vars, a, &mut prog)?;
    Ok(run(&prog, &env, a, &mut Vec::new()))
}

/// Checks `lhs ≈ rhs` under every assignment of elements to variables.
pub fn holds_identity(a: &FiniteAlgebra, lhs: &Term, rhs: &Term) -> Result<Verdict> {
    let mut names = lhs.variables();
    names.extend(rhs.variables());
    let vars: Vec<String> = names.into_iter().collect();
    let mut lp = Vec::new();
    let mut rp = Vec::new();
    compile(lhs, &vars, a, &mut lp)?;
    compile(rhs, &vars, a, &mut rp)?;

    let n = a.size();
    let k = vars.len();
    let mut env = vec![0; k];
    let mut stack = Vec::new();
    loop {
        if run(&lp, &env, a, &mut stack) != run(&rp, &env, a, &mut stack) {
            let asg = vars.iter().cloned().zip(env.iter().copied()).collect();
            return Ok(Verdict::Fails(asg));
        }
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(Verdict::Holds);
            }
            i -= 1;
            env[i] += 1;
            if env[i] < n {
                break;
            }
            env[i] = 0;
        }
    }
}

pub fn check(a: &FiniteAlgebra, id: &Identity) -> Result<Verdict> {
    holds_identity(a, &id.lhs, &id.rhs)
}

/// Named equation sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Profile {
    Mtl,
    Bl,
    Heyting,
    Involutive,
    Nm,
    Dp,
    Stonean,
    Product,
    /// 1-involutive, 1-distributive, (K1), (K2).
    Kl,
    /// `Kl` plus `0 ≤ x`.
    Bkl,
}

const PRELINEARITY: &str = "(x -> y) | (y -> x) = 1";
const DIVISIBILITY: &str = "x * (x -> y) = y * (y -> x)";
const BOUNDED: &str = "0 & x = 0";
const INVOLUTION: &str = "!!x = x";
const KL_LAWS: [&str; 9] = [
    "~~x = x",
    "1 & (y | z) = (1 & y) | (1 & z)",
    "x & (1 | z) = (x & 1) | (x & z)",
    "x & (y | 1) = (x & y) | (x & 1)",
    "1 | (y & z) = (1 | y) & (1 | z)",
    "x | (1 & z) = (x | 1) & (x | z)",
    "x | (y & 1) = (x | y) & (x | 1)",
    "(x * y) & 1 = (x & 1) * (y & 1)",
    "((x & 1) -> y) & ((~y & 1) -> ~x) = x -> y",
];

impl Profile {
    pub const ALL: [Profile; 10] = [
        Profile::Mtl,
        Profile::Bl,
        Profile::Heyting,
        Profile::Involutive,
        Profile::Nm,
        Profile::Dp,
        Profile::Stonean,
        Profile::Product,
        Profile::Kl,
        Profile::Bkl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Profile::Mtl => "MTL",
            Profile::Bl => "BL",
            Profile::Heyting => "HEYTING",
            Profile::Involutive => "INVOLUTIVE",
            Profile::Nm => "NM",
            Profile::Dp => "DP",
            Profile::Stonean => "STONEAN",
            Profile::Product => "PRODUCT",
            Profile::Kl => "KL",
            Profile::Bkl => "BKL",
        }
    }

    /// The equations making up the profile, as text.
    pub fn equations(self) -> Vec<&'static str> {
        match self {
            Profile::Mtl => vec![PRELINEARITY],
            Profile::Bl => vec![PRELINEARITY, DIVISIBILITY],
            Profile::Heyting => vec![BOUNDED, "x * y = x & y"],
            Profile::Involutive => vec![INVOLUTION],
            Profile::Nm => vec![PRELINEARITY, INVOLUTION, "(x * y -> 0) | ((x & y) -> x * y) = 1"],
            Profile::Dp => vec![PRELINEARITY, "x | !(x * x) = 1"],
            Profile::Stonean => vec![BOUNDED, "!x | !!x = 1"],
            Profile::Product => vec![PRELINEARITY, DIVISIBILITY, "!y | ((x -> x * y) -> y) = 1"],
            Profile::Kl => KL_LAWS.to_vec(),
            Profile::Bkl => {
                let mut v = KL_LAWS.to_vec();
                v.push(BOUNDED);
                v
            }
        }
    }

    pub fn identities(self) -> Vec<Identity> {
        self.equations()
            .into_iter()
            .map(|e| Identity::parse(e).expect("built-in equation parses"))
            .collect()
    }
}

impl std::str::FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Profile> {
        Profile::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::pre(format!("unknown profile {s}")))
    }
}

/// The first failing equation of `profile`, if any.
pub fn profile_failure(a: &FiniteAlgebra, profile: Profile) -> Result<Option<(Identity, Assignment)>> {
    for id in profile.identities() {
        if let Verdict::Fails(asg) = check(a, &id)? {
            return Ok(Some((id, asg)));
        }
    }
    Ok(None)
}

/// Conjunction of [`holds_identity`] over the profile's equations.
pub fn satisfies_profile(a: &FiniteAlgebra, profile: Profile) -> Result<bool> {
    Ok(profile_failure(a, profile)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lukasiewicz(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::from_fns(
            format!("L{n}"),
            n + 1,
            n,
            Some(0),
            |x, y| x.min(y),
            |x, y| x.max(y),
            |x, y| (x + y).saturating_sub(n),
            |x, y| n.min(n - x + y),
        )
        .unwrap()
    }

    #[test]
    fn parse_precedence() {
        let t = Term::parse("x & y -> z | !w").unwrap();
        let expected = Term::var("x")
            .meet(Term::var("y"))
            .imp(Term::var("z").join(Term::var("w").neg()));
        assert_eq!(t, expected);
        assert!(Term::parse("x -> y -> z").unwrap() == Term::var("x").imp(Term::var("y").imp(Term::var("z"))));
    }

    #[test]
    fn parse_error_position() {
        match Term::parse("(x & y").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (1, 7)),
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn prelinearity_on_l2() {
        let id = Identity::parse(PRELINEARITY).unwrap();
        assert!(check(&lukasiewicz(2), &id).unwrap().holds());
    }

    #[test]
    fn stonean_fails_on_l2_at_midpoint() {
        let v = satisfies_profile(&lukasiewicz(2), Profile::Stonean).unwrap();
        assert!(!v);
        let id = Identity::parse("!x | !!x = 1").unwrap();
        assert_eq!(
            check(&lukasiewicz(2), &id).unwrap(),
            Verdict::Fails(vec![("x".to_string(), 1)])
        );
    }

    #[test]
    fn zero_on_unbounded_is_error() {
        let hoop = lukasiewicz(2).zero_free();
        let err = holds_identity(&hoop, &Term::Zero, &Term::One).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn evaluate_neg() {
        let l = lukasiewicz(4);
        let t = Term::parse("!x").unwrap();
        for i in 0..=4 {
            assert_eq!(evaluate(&l, &t, &[("x".into(), i)]).unwrap(), 4 - i);
        }
    }
}
