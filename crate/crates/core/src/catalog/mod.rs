//! Named finite algebras and the constructions that combine them.
//!
//! Chains list their elements bottom to top, so element index order is the
//! lattice order. Chain sizes are element counts except for `wajsberg_chain(n)`,
//! which has `n + 1` elements.

mod dsl;

pub use dsl::{build_spec, parse_spec, AlgebraSpec};

use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};

fn chain(
    name: String,
    n: usize,
    mul: impl Fn(Elem, Elem) -> Elem,
    imp: impl Fn(Elem, Elem) -> Elem,
) -> Result<FiniteAlgebra> {
    FiniteAlgebra::from_fns(name, n, n - 1, Some(0), |x, y| x.min(y), |x, y| x.max(y), mul, imp)
}

/// The one-element algebra (bounded, with `0 = 1`).
pub fn trivial() -> FiniteAlgebra {
    chain("T".into(), 1, |_, _| 0, |_, _| 0).expect("trivial algebra")
}

/// The two-element Boolean algebra **2**.
pub fn boolean2() -> FiniteAlgebra {
    godel_chain(2).expect("2 >= 2").with_name("B2")
}

/// The `n`-element Gödel chain: product is meet, `x → y = 1` if `x ≤ y` else `y`.
pub fn godel_chain(n: usize) -> Result<FiniteAlgebra> {
    if n < 2 {
        return Err(Error::pre(format!("godel_chain needs at least 2 elements, got {n}")));
    }
    let top = n - 1;
    chain(
        format!("G{n}"),
        n,
        |x, y| x.min(y),
        move |x, y| if x <= y { top } else { y },
    )
}

/// The Wajsberg (Łukasiewicz) chain with `n + 1` elements `0, 1/n, …, 1`.
pub fn wajsberg_chain(n: usize) -> Result<FiniteAlgebra> {
    if n < 1 {
        return Err(Error::pre("wajsberg_chain needs n >= 1"));
    }
    chain(
        format!("L{n}"),
        n + 1,
        move |x, y| (x + y).saturating_sub(n),
        move |x, y| n.min(n - x + y),
    )
}

/// The `k`-element nilpotent minimum chain, built as a rotation of a Gödel chain:
/// `N_{2m}` is the disconnected and `N_{2m+1}` the connected rotation of the
/// `m`-element Gödel chain (the one-element algebra when `m = 1`).
pub fn nm_chain(k: usize) -> Result<FiniteAlgebra> {
    if k < 2 {
        return Err(Error::pre(format!("nm_chain needs at least 2 elements, got {k}")));
    }
    let m = k / 2;
    let base = if m == 1 { trivial() } else { godel_chain(m)? };
    let rotated = if k.is_multiple_of(2) {
        disconnected_rotation(&base)?
    } else {
        connected_rotation(&base)?
    };
    Ok(rotated.with_name(format!("N{k}")))
}

/// The same chain from the closed formulas `¬x = k−1−x`,
/// `xy = 0` if `x + y ≤ k − 1` else `min(x, y)`.
pub fn nm_chain_direct(k: usize) -> Result<FiniteAlgebra> {
    if k < 2 {
        return Err(Error::pre(format!("nm_chain needs at least 2 elements, got {k}")));
    }
    let top = k - 1;
    chain(
        format!("N{k}"),
        k,
        move |x, y| if x + y <= top { 0 } else { x.min(y) },
        move |x, y| if x <= y { top } else { (top - x).max(y) },
    )
}

/// The `n`-element drastic product chain `0 = a_{n−1} < … < a_1 < 1`.
/// Index `i` holds `a_{n−1−i}`, so the coatom `a_1` is index `n − 2`.
pub fn dp_chain(n: usize) -> Result<FiniteAlgebra> {
    if n < 2 {
        return Err(Error::pre(format!("dp_chain needs at least 2 elements, got {n}")));
    }
    let top = n - 1;
    let coatom = n - 2;
    chain(
        format!("DP{n}"),
        n,
        move |x, y| if x != top && y != top { 0 } else { x.min(y) },
        move |x, y| {
            if x <= y {
                top
            } else if x == top {
                y
            } else {
                coatom
            }
        },
    )
}

/// Index of the drastic-product element `a_i` in `dp_chain(n)`.
pub fn dp_element(n: usize, i: usize) -> Elem {
    n - 1 - i
}

/// The five-element chain `0 < b < a² < a < 1` with `a³ = a²`, `ab = 0` and
/// `¬a = ¬a² = b`. Rigid but its 0-free reduct is not tight.
pub fn rigid_witness_c5() -> FiniteAlgebra {
    #[rustfmt::skip]
    const MUL: [Elem; 25] = [
        0, 0, 0, 0, 0,
        0, 0, 0, 0, 1,
        0, 0, 2, 2, 2,
        0, 0, 2, 2, 3,
        0, 1, 2, 3, 4,
    ];
    #[rustfmt::skip]
    const IMP: [Elem; 25] = [
        4, 4, 4, 4, 4,
        3, 4, 4, 4, 4,
        1, 1, 4, 4, 4,
        1, 1, 3, 4, 4,
        0, 1, 2, 3, 4,
    ];
    chain("C5".into(), 5, |x, y| MUL[x * 5 + y], |x, y| IMP[x * 5 + y]).expect("C5 tables")
}

fn require_integral(a: &FiniteAlgebra, context: &str) -> Result<()> {
    if a.is_integral() {
        Ok(())
    } else {
        Err(Error::pre(format!("{context}: {} is not integral", a.name())))
    }
}

/// Where each summand's elements land in an ordinal sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinalSumLayout {
    /// Index in the sum of each element of the lower summand.
    pub lower: Vec<Elem>,
    /// Index in the sum of each element of the upper summand.
    pub upper: Vec<Elem>,
    pub size: usize,
}

impl OrdinalSumLayout {
    /// Lower part first (without its top), then the upper part, then the shared top.
    pub fn new(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Self {
        let size = a.size() + b.size() - 1;
        let top = size - 1;
        let mut next = 0;
        let mut lower = vec![top; a.size()];
        for x in a.elements().filter(|&x| x != a.one()) {
            lower[x] = next;
            next += 1;
        }
        let mut upper = vec![top; b.size()];
        for x in b.elements().filter(|&x| x != b.one()) {
            upper[x] = next;
            next += 1;
        }
        OrdinalSumLayout { lower, upper, size }
    }
}

/// The ordinal sum `A ⊕ B` of a bounded `a` and an integral `b` (whose zero is ignored).
///
/// When the top of `a` is join reducible, joins in `a` that reach its top are
/// sent to the bottom of `b`.
pub fn ordinal_sum(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let a_zero = a.require_zero("ordinal_sum lower summand")?;
    require_integral(a, "ordinal_sum")?;
    require_integral(b, "ordinal_sum")?;
    let layout = OrdinalSumLayout::new(a, b);
    let n = layout.size;
    let top = n - 1;

    #[derive(Clone, Copy, PartialEq)]
    enum Part {
        Lower(Elem),
        Upper(Elem),
        Top,
    }
    let mut parts = vec![Part::Top; n];
    for x in a.elements().filter(|&x| x != a.one()) {
        parts[layout.lower[x]] = Part::Lower(x);
    }
    for x in b.elements().filter(|&x| x != b.one()) {
        parts[layout.upper[x]] = Part::Upper(x);
    }
    let lo = |x: Elem| layout.lower[x];
    let up = |x: Elem| layout.upper[x];
    // bottom of the upper summand, used to repair joins that hit 1_A
    let repair = up(b.bottom());

    let meet = |x: Elem, y: Elem| match (parts[x], parts[y]) {
        (Part::Top, _) => y,
        (_, Part::Top) => x,
        (Part::Lower(p), Part::Lower(q)) => lo(a.meet(p, q)),
        (Part::Upper(p), Part::Upper(q)) => up(b.meet(p, q)),
        (Part::Lower(_), Part::Upper(_)) => x,
        (Part::Upper(_), Part::Lower(_)) => y,
    };
    let join = |x: Elem, y: Elem| match (parts[x], parts[y]) {
        (Part::Top, _) | (_, Part::Top) => top,
        (Part::Lower(p), Part::Lower(q)) => {
            let j = a.join(p, q);
            if j == a.one() {
                repair
            } else {
                lo(j)
            }
        }
        (Part::Upper(p), Part::Upper(q)) => up(b.join(p, q)),
        (Part::Lower(_), Part::Upper(_)) => y,
        (Part::Upper(_), Part::Lower(_)) => x,
    };
    let mul = |x: Elem, y: Elem| match (parts[x], parts[y]) {
        (Part::Top, _) => y,
        (_, Part::Top) => x,
        (Part::Lower(p), Part::Lower(q)) => lo(a.mul(p, q)),
        (Part::Upper(p), Part::Upper(q)) => up(b.mul(p, q)),
        (Part::Lower(_), Part::Upper(_)) => x,
        (Part::Upper(_), Part::Lower(_)) => y,
    };
    let imp = |x: Elem, y: Elem| match (parts[x], parts[y]) {
        (Part::Top, _) => y,
        (_, Part::Top) => top,
        (Part::Lower(p), Part::Lower(q)) => lo(a.imp(p, q)),
        (Part::Upper(p), Part::Upper(q)) => up(b.imp(p, q)),
        (Part::Lower(_), Part::Upper(_)) => top,
        (Part::Upper(_), Part::Lower(_)) => y,
    };
    FiniteAlgebra::from_fns(
        format!("osum({},{})", a.name(), b.name()),
        n,
        top,
        Some(lo(a_zero)),
        meet,
        join,
        mul,
        imp,
    )
}

/// Half-levels of a rotation: `(level, a)` with level 0, ½ or 1 of Ł₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Low,
    Mid,
    High,
}

fn rotation(a: &FiniteAlgebra, connected: bool) -> Result<FiniteAlgebra> {
    require_integral(a, "rotation")?;
    let m = a.size();
    let mid_offset = usize::from(connected);
    let n = 2 * m + mid_offset;
    let low = |x: Elem| m - 1 - x;
    let high = |x: Elem| m + mid_offset + x;
    let mut decode = vec![(Level::Mid, a.one()); n];
    for x in a.elements() {
        decode[low(x)] = (Level::Low, x);
        decode[high(x)] = (Level::High, x);
    }
    let encode = |lvl: Level, x: Elem| match lvl {
        Level::Low => low(x),
        Level::Mid => m,
        Level::High => high(x),
    };
    let one = a.one();

    let join = |p: Elem, q: Elem| {
        let ((x, u), (y, v)) = (decode[p], decode[q]);
        match (x, y) {
            (Level::High, Level::High) => high(a.join(u, v)),
            (Level::Low, Level::Low) => low(a.meet(u, v)),
            _ if x < y => q,
            _ if y < x => p,
            _ => p,
        }
    };
    let meet = |p: Elem, q: Elem| {
        let ((x, u), (y, v)) = (decode[p], decode[q]);
        match (x, y) {
            (Level::High, Level::High) => high(a.meet(u, v)),
            (Level::Low, Level::Low) => low(a.join(u, v)),
            _ if x < y => p,
            _ if y < x => q,
            _ => p,
        }
    };
    let mul = |p: Elem, q: Elem| {
        let ((x, u), (y, v)) = (decode[p], decode[q]);
        match (x, y) {
            (Level::High, Level::High) => high(a.mul(u, v)),
            (Level::High, Level::Mid) => q,
            (Level::Mid, Level::High) => p,
            (Level::High, Level::Low) => low(a.imp(u, v)),
            (Level::Low, Level::High) => low(a.imp(v, u)),
            // both below the top level: the product in Ł₂ is 0
            _ => low(one),
        }
    };
    let imp = |p: Elem, q: Elem| {
        let ((x, u), (y, v)) = (decode[p], decode[q]);
        match (x, y) {
            (Level::High, Level::High) => high(a.imp(u, v)),
            (Level::Low, Level::Low) => high(a.imp(v, u)),
            (Level::High, Level::Low) => low(a.mul(u, v)),
            _ if x < y => high(one),
            // x → y in Ł₂ for the remaining level pairs
            (Level::Mid, Level::Mid) => high(one),
            _ => encode(Level::Mid, one),
        }
    };
    let kind = if connected { "crot" } else { "drot" };
    FiniteAlgebra::from_fns(
        format!("{kind}({})", a.name()),
        n,
        high(one),
        Some(low(one)),
        meet,
        join,
        mul,
        imp,
    )
}

/// The connected rotation `A^{d2}` of an integral algebra (its zero, if any, is ignored).
pub fn connected_rotation(a: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    rotation(a, true)
}

/// The disconnected rotation `A^{d1}`: the connected rotation without its midpoint.
pub fn disconnected_rotation(a: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    rotation(a, false)
}
