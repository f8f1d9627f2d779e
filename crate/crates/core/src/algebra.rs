//! Finite algebras in the signature `(meet, join, mul, imp, 1[, 0])`, stored as
//! total operation tables over the element indices `0..size`.

use std::fmt;

use crate::error::{Error, Result};

/// Index of an element of a finite algebra.
pub type Elem = usize;

/// The four binary operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Meet,
    Join,
    Mul,
    Imp,
}

impl Op {
    pub const ALL: [Op; 4] = [Op::Meet, Op::Join, Op::Mul, Op::Imp];

    pub fn name(self) -> &'static str {
        match self {
            Op::Meet => "meet",
            Op::Join => "join",
            Op::Mul => "mul",
            Op::Imp => "imp",
        }
    }

    /// Whether the operation is commutative in every commutative residuated lattice.
    pub fn is_commutative(self) -> bool {
        !matches!(self, Op::Imp)
    }
}

/// A finite algebra given by its operation tables.
///
/// Construction only validates shape and ranges; the residuated-lattice axioms
/// are checked separately by [`verify_algebra`], so that non-residuated tables
/// can still be loaded and reported on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    size: usize,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    mul: Vec<Elem>,
    imp: Vec<Elem>,
    one: Elem,
    zero: Option<Elem>,
}

impl FiniteAlgebra {
    /// Builds an algebra from row-major `size * size` tables.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        size: usize,
        meet: Vec<Elem>,
        join: Vec<Elem>,
        mul: Vec<Elem>,
        imp: Vec<Elem>,
        one: Elem,
        zero: Option<Elem>,
    ) -> Result<Self> {
        let a = FiniteAlgebra {
            name: name.into(),
            size,
            meet,
            join,
            mul,
            imp,
            one,
            zero,
        };
        a.check_structure()?;
        Ok(a)
    }

    /// Builds an algebra by tabulating four closures.
    #[allow(clippy::too_many_arguments)]
    pub fn from_fns(
        name: impl Into<String>,
        size: usize,
        one: Elem,
        zero: Option<Elem>,
        meet: impl Fn(Elem, Elem) -> Elem,
        join: impl Fn(Elem, Elem) -> Elem,
        mul: impl Fn(Elem, Elem) -> Elem,
        imp: impl Fn(Elem, Elem) -> Elem,
    ) -> Result<Self> {
        let tab =
            |f: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Elem> { (0..size * size).map(|k| f(k / size, k % size)).collect() };
        Self::new(name, size, tab(&meet), tab(&join), tab(&mul), tab(&imp), one, zero)
    }

    /// Checks table shapes and that every entry and constant lies in `0..size`.
    pub fn check_structure(&self) -> Result<()> {
        if self.size == 0 {
            return Err(Error::Malformed("size must be positive".into()));
        }
        let n = self.size;
        for op in Op::ALL {
            let t = self.table(op);
            if t.len() != n * n {
                return Err(Error::Malformed(format!(
                    "{} table has {} entries, expected {}",
                    op.name(),
                    t.len(),
                    n * n
                )));
            }
            if let Some(k) = t.iter().position(|&v| v >= n) {
                return Err(Error::Malformed(format!(
                    "{}[{}][{}] = {} is out of range for size {}",
                    op.name(),
                    k / n,
                    k % n,
                    t[k],
                    n
                )));
            }
        }
        if self.one >= n {
            return Err(Error::Malformed(format!("one = {} is out of range", self.one)));
        }
        if let Some(z) = self.zero {
            if z >= n {
                return Err(Error::Malformed(format!("zero = {z} is out of range")));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn zero(&self) -> Option<Elem> {
        self.zero
    }

    pub fn is_bounded(&self) -> bool {
        self.zero.is_some()
    }

    /// The zero constant, or a precondition error naming `context`.
    pub fn require_zero(&self, context: &str) -> Result<Elem> {
        self.zero
            .ok_or_else(|| Error::pre(format!("{context}: algebra {} is not bounded", self.name)))
    }

    /// Same algebra with the zero constant dropped (its 0-free reduct).
    pub fn zero_free(&self) -> FiniteAlgebra {
        let mut a = self.clone();
        a.zero = None;
        a
    }

    /// Same tables with `zero` as the bottom constant.
    pub fn with_zero(mut self, zero: Option<Elem>) -> Result<Self> {
        self.zero = zero;
        self.check_structure()?;
        Ok(self)
    }

    pub fn table(&self, op: Op) -> &[Elem] {
        match op {
            Op::Meet => &self.meet,
            Op::Join => &self.join,
            Op::Mul => &self.mul,
            Op::Imp => &self.imp,
        }
    }

    #[inline]
    pub fn apply(&self, op: Op, x: Elem, y: Elem) -> Elem {
        self.table(op)[x * self.size + y]
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.size + y]
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.size + y]
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x * self.size + y]
    }

    #[inline]
    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.imp[x * self.size + y]
    }

    /// `¬x = x → 0`.
    ///
    /// Panics on an unbounded algebra; callers validate boundedness first.
    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.imp(x, self.zero.expect("negation needs a bounded algebra"))
    }

    /// `∼x = x → 1`.
    #[inline]
    pub fn tilde(&self, x: Elem) -> Elem {
        self.imp(x, self.one)
    }

    /// The lattice order `x ≤ y :⇔ x ∧ y = x`.
    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.meet(x, y) == x
    }

    /// Join of all elements.
    pub fn top(&self) -> Elem {
        self.elements().fold(0, |acc, x| self.join(acc, x))
    }

    /// Meet of all elements.
    pub fn bottom(&self) -> Elem {
        self.elements().fold(0, |acc, x| self.meet(acc, x))
    }

    /// Whether `one` is the top of the lattice order.
    pub fn is_integral(&self) -> bool {
        self.elements().all(|x| self.leq(x, self.one))
    }

    /// Whether `x` is join irreducible: `x = y ∨ z` forces `x ∈ {y, z}`.
    pub fn is_join_irreducible(&self, x: Elem) -> bool {
        self.elements()
            .all(|y| self.elements().all(|z| self.join(y, z) != x || y == x || z == x))
    }

    /// Whether `x` is meet irreducible: `x = y ∧ z` forces `x ∈ {y, z}`.
    pub fn is_meet_irreducible(&self, x: Elem) -> bool {
        self.elements()
            .all(|y| self.elements().all(|z| self.meet(y, z) != x || y == x || z == x))
    }

    /// Whether the two algebras have identical tables and constants (names ignored).
    pub fn tables_eq(&self, other: &FiniteAlgebra) -> bool {
        self.size == other.size
            && self.one == other.one
            && self.zero == other.zero
            && Op::ALL.iter().all(|&op| self.table(op) == other.table(op))
    }

    /// The algebra induced on a closed `carrier`, together with the inclusion map
    /// from new indices into this algebra. The carrier order becomes the index order.
    pub fn restrict(&self, carrier: &[Elem], name: impl Into<String>) -> Result<(FiniteAlgebra, Vec<Elem>)> {
        let mut pos = vec![usize::MAX; self.size];
        for (i, &x) in carrier.iter().enumerate() {
            if x >= self.size {
                return Err(Error::pre(format!("element {x} not in algebra {}", self.name)));
            }
            pos[x] = i;
        }
        let lookup = |x: Elem| -> Result<Elem> {
            match pos[x] {
                usize::MAX => Err(Error::NotClosed(format!("element {x} missing from carrier"))),
                p => Ok(p),
            }
        };
        let m = carrier.len();
        let mut tables: [Vec<Elem>; 4] = Default::default();
        for (t, op) in tables.iter_mut().zip(Op::ALL) {
            t.reserve(m * m);
            for &x in carrier {
                for &y in carrier {
                    t.push(
                        lookup(self.apply(op, x, y))
                            .map_err(|_| Error::NotClosed(format!("{}({x}, {y}) leaves the carrier", op.name())))?,
                    );
                }
            }
        }
        let one = lookup(self.one)?;
        let zero = self.zero.map(lookup).transpose()?;
        let [meet, join, mul, imp] = tables;
        let sub = FiniteAlgebra::new(name, m, meet, join, mul, imp, one, zero)?;
        Ok((sub, carrier.to_vec()))
    }

    /// Relabels elements: element `x` of `self` becomes `perm[x]` in the result.
    pub fn relabel(&self, perm: &[Elem]) -> Result<FiniteAlgebra> {
        let n = self.size;
        if perm.len() != n {
            return Err(Error::pre("permutation length differs from algebra size"));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::pre("relabelling is not a permutation"));
            }
        }
        let mut tables: [Vec<Elem>; 4] = [vec![0; n * n], vec![0; n * n], vec![0; n * n], vec![0; n * n]];
        for (t, op) in tables.iter_mut().zip(Op::ALL) {
            for x in 0..n {
                for y in 0..n {
                    t[perm[x] * n + perm[y]] = perm[self.apply(op, x, y)];
                }
            }
        }
        let [meet, join, mul, imp] = tables;
        FiniteAlgebra::new(
            self.name.clone(),
            n,
            meet,
            join,
            mul,
            imp,
            perm[self.one],
            self.zero.map(|z| perm[z]),
        )
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} elements)", self.name, self.size)
    }
}

/// One axiom of bounded commutative residuated lattices, checked pointwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    MeetCommutative,
    MeetAssociative,
    MeetIdempotent,
    JoinCommutative,
    JoinAssociative,
    JoinIdempotent,
    Absorption,
    MulCommutative,
    MulAssociative,
    MulIdentity,
    Residuation,
    ZeroIsBottom,
    Integral,
}

impl Axiom {
    /// Axioms required of every commutative residuated lattice.
    pub const CRL: [Axiom; 11] = [
        Axiom::MeetCommutative,
        Axiom::MeetAssociative,
        Axiom::MeetIdempotent,
        Axiom::JoinCommutative,
        Axiom::JoinAssociative,
        Axiom::JoinIdempotent,
        Axiom::Absorption,
        Axiom::MulCommutative,
        Axiom::MulAssociative,
        Axiom::MulIdentity,
        Axiom::Residuation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::MeetCommutative => "meet commutative",
            Axiom::MeetAssociative => "meet associative",
            Axiom::MeetIdempotent => "meet idempotent",
            Axiom::JoinCommutative => "join commutative",
            Axiom::JoinAssociative => "join associative",
            Axiom::JoinIdempotent => "join idempotent",
            Axiom::Absorption => "absorption",
            Axiom::MulCommutative => "mul commutative",
            Axiom::MulAssociative => "mul associative",
            Axiom::MulIdentity => "one is mul identity",
            Axiom::Residuation => "residuation",
            Axiom::ZeroIsBottom => "zero is bottom",
            Axiom::Integral => "integral",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Axiom::MeetIdempotent
            | Axiom::JoinIdempotent
            | Axiom::MulIdentity
            | Axiom::ZeroIsBottom
            | Axiom::Integral => 1,
            Axiom::MeetCommutative | Axiom::JoinCommutative | Axiom::MulCommutative | Axiom::Absorption => 2,
            Axiom::MeetAssociative | Axiom::JoinAssociative | Axiom::MulAssociative | Axiom::Residuation => 3,
        }
    }

    /// Evaluates the axiom at one assignment (`args.len() == arity`).
    pub fn holds_at(self, a: &FiniteAlgebra, args: &[Elem]) -> bool {
        let x = args[0];
        let y = args.get(1).copied().unwrap_or(0);
        let z = args.get(2).copied().unwrap_or(0);
        match self {
            Axiom::MeetCommutative => a.meet(x, y) == a.meet(y, x),
            Axiom::MeetAssociative => a.meet(a.meet(x, y), z) == a.meet(x, a.meet(y, z)),
            Axiom::MeetIdempotent => a.meet(x, x) == x,
            Axiom::JoinCommutative => a.join(x, y) == a.join(y, x),
            Axiom::JoinAssociative => a.join(a.join(x, y), z) == a.join(x, a.join(y, z)),
            Axiom::JoinIdempotent => a.join(x, x) == x,
            Axiom::Absorption => a.meet(x, a.join(x, y)) == x && a.join(x, a.meet(x, y)) == x,
            Axiom::MulCommutative => a.mul(x, y) == a.mul(y, x),
            Axiom::MulAssociative => a.mul(a.mul(x, y), z) == a.mul(x, a.mul(y, z)),
            Axiom::MulIdentity => a.mul(x, a.one()) == x && a.mul(a.one(), x) == x,
            Axiom::Residuation => a.leq(a.mul(x, y), z) == a.leq(x, a.imp(y, z)),
            Axiom::ZeroIsBottom => a.zero().is_none_or(|zero| a.leq(zero, x)),
            Axiom::Integral => a.leq(x, a.one()),
        }
    }

    /// Lexicographically first failing assignment, if any.
    pub fn first_counterexample(self, a: &FiniteAlgebra) -> Option<Vec<Elem>> {
        let n = a.size();
        let k = self.arity();
        let mut args = vec![0; k];
        loop {
            if !self.holds_at(a, &args) {
                return Some(args);
            }
            // odometer, last coordinate fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                args[i] += 1;
                if args[i] < n {
                    break;
                }
                args[i] = 0;
            }
        }
    }
}

/// Outcome of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub axiom: Axiom,
    pub counterexample: Option<Vec<Elem>>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn name(&self) -> &'static str {
        self.axiom.name()
    }
}

/// Result of [`verify_algebra`].
///
/// `checks` are the commutative residuated lattice axioms (plus `zero is
/// bottom` for bounded algebras). Integrality is reported in `integral` but is
/// not part of [`VerificationReport::passed`], because twist-products are
/// residuated lattices whose identity is not the top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub integral: Check,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// Passed and integral: a member of the bounded (or 0-free) integral class.
    pub fn passed_integral(&self) -> bool {
        self.passed() && self.integral.passed()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, axiom: Axiom) -> Option<&Check> {
        if axiom == Axiom::Integral {
            return Some(&self.integral);
        }
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

/// Exhaustively checks the lattice, monoid, residuation and bound axioms.
///
/// Structural problems (bad shapes, out-of-range entries) are an `Err`, never
/// an axiom failure.
pub fn verify_algebra(a: &FiniteAlgebra) -> Result<VerificationReport> {
    a.check_structure()?;
    let mut axioms: Vec<Axiom> = Axiom::CRL.to_vec();
    if a.is_bounded() {
        axioms.push(Axiom::ZeroIsBottom);
    }
    let checks = axioms
        .into_iter()
        .map(|axiom| Check {
            axiom,
            counterexample: axiom.first_counterexample(a),
        })
        .collect();
    let integral = Check {
        axiom: Axiom::Integral,
        counterexample: Axiom::Integral.first_counterexample(a),
    };
    Ok(VerificationReport { checks, integral })
}

/// `x ≤ y` in the order induced by meet.
pub fn leq(a: &FiniteAlgebra, x: Elem, y: Elem) -> bool {
    a.leq(x, y)
}
