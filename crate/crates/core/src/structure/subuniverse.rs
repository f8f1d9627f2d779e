use std::collections::{HashSet, VecDeque};

use crate::algebra::{Elem, FiniteAlgebra, Op};
use crate::error::{Error, Result};
use crate::limits::Limits;

use super::bitset::ElemSet;
use super::iso::is_isomorphic;

/// A subset of a parent algebra closed under the operations and containing its constants.
///
/// The carrier is kept sorted; the parent is not stored, so every method that
/// needs the operations takes the algebra explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubUniverse {
    carrier: Vec<Elem>,
}

impl SubUniverse {
    /// Wraps `elems` after checking closure in `a`.
    pub fn new(a: &FiniteAlgebra, elems: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let mut carrier: Vec<Elem> = elems.into_iter().collect();
        carrier.sort_unstable();
        carrier.dedup();
        if let Some(&x) = carrier.iter().find(|&&x| x >= a.size()) {
            return Err(Error::pre(format!("element {x} is not in {}", a.name())));
        }
        closure_violation(a, &carrier).map_or(Ok(SubUniverse { carrier }), |m| Err(Error::NotClosed(m)))
    }

    pub(crate) fn from_set(set: &ElemSet) -> Self {
        SubUniverse { carrier: set.to_vec() }
    }

    pub fn carrier(&self) -> &[Elem] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.carrier.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &SubUniverse) -> bool {
        self.carrier.iter().all(|&x| other.contains(x))
    }

    /// The induced algebra and the inclusion map into the parent.
    pub fn to_algebra(&self, parent: &FiniteAlgebra, name: impl Into<String>) -> FiniteAlgebra {
        parent
            .restrict(&self.carrier, name)
            .expect("subuniverse carriers are closed")
            .0
    }
}

/// Describes the first operation that leaves `carrier` (or a missing constant), if any.
pub fn closure_violation(a: &FiniteAlgebra, carrier: &[Elem]) -> Option<String> {
    let set = ElemSet::from_elems(a.size(), carrier.iter().copied());
    if !set.contains(a.one()) {
        return Some("carrier misses one".into());
    }
    if let Some(z) = a.zero() {
        if !set.contains(z) {
            return Some("carrier misses zero".into());
        }
    }
    for &x in carrier {
        for &y in carrier {
            for op in Op::ALL {
                let r = a.apply(op, x, y);
                if !set.contains(r) {
                    return Some(format!("{}({x}, {y}) = {r}", op.name()));
                }
            }
        }
    }
    None
}

pub fn is_subuniverse(a: &FiniteAlgebra, carrier: &[Elem]) -> bool {
    carrier.iter().all(|&x| x < a.size()) && closure_violation(a, carrier).is_none()
}

/// Closes `list` in place; `list[..closed]` must already be closed and
/// `set` must mirror `list`.
fn close_from(a: &FiniteAlgebra, set: &mut ElemSet, list: &mut Vec<Elem>, closed: usize) {
    let mut i = closed;
    while i < list.len() {
        let x = list[i];
        for j in 0..=i {
            let y = list[j];
            for op in Op::ALL {
                let r = a.apply(op, x, y);
                if set.insert(r) {
                    list.push(r);
                }
                if !op.is_commutative() {
                    let r = a.apply(op, y, x);
                    if set.insert(r) {
                        list.push(r);
                    }
                }
            }
        }
        i += 1;
    }
}

pub(crate) fn closure_set(a: &FiniteAlgebra, gens: impl IntoIterator<Item = Elem>, with_zero: bool) -> ElemSet {
    let mut set = ElemSet::new(a.size());
    let mut list = Vec::new();
    let constants = std::iter::once(a.one()).chain(a.zero().filter(|_| with_zero));
    for g in constants.chain(gens) {
        if set.insert(g) {
            list.push(g);
        }
    }
    close_from(a, &mut set, &mut list, 0);
    set
}

/// Closure of `base` (already closed) with `extra` added.
pub(crate) fn extend_closed(a: &FiniteAlgebra, base: &ElemSet, extra: Elem) -> ElemSet {
    let mut set = base.clone();
    let mut list = base.to_vec();
    let closed = list.len();
    if set.insert(extra) {
        list.push(extra);
    }
    close_from(a, &mut set, &mut list, closed);
    set
}

/// The least subuniverse containing `gens`, `one` and (when bounded) `zero`.
pub fn generated_subuniverse(a: &FiniteAlgebra, gens: &[Elem]) -> SubUniverse {
    SubUniverse::from_set(&closure_set(a, gens.iter().copied(), true))
}

/// Closure of `gens ∪ {1}` under the four operations, without the constant 0.
pub fn generated_zero_free(a: &FiniteAlgebra, gens: &[Elem]) -> SubUniverse {
    SubUniverse::from_set(&closure_set(a, gens.iter().copied(), false))
}

/// All closed sets containing the closed set `start`, by one-element extension.
///
/// Every closed superset is reached, since it can be built from `start` by
/// adding its missing elements one at a time.
pub(crate) fn closed_supersets(a: &FiniteAlgebra, start: ElemSet) -> Vec<ElemSet> {
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    let mut out = Vec::new();
    while let Some(s) = queue.pop_front() {
        for e in a.elements() {
            if s.contains(e) {
                continue;
            }
            let t = extend_closed(a, &s, e);
            if !seen.contains(&t) {
                seen.insert(t.clone());
                queue.push_back(t);
            }
        }
        out.push(s);
    }
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.to_vec().cmp(&y.to_vec())));
    out
}

/// All subuniverses, ordered by size and then lexicographically by carrier.
pub fn enumerate_subuniverses(a: &FiniteAlgebra, limits: &Limits) -> Result<Vec<SubUniverse>> {
    Limits::check("subuniverse enumeration size", a.size(), limits.max_sub)?;
    let base = closure_set(a, [], true);
    Ok(closed_supersets(a, base).iter().map(SubUniverse::from_set).collect())
}

/// One subuniverse per isomorphism class of induced subalgebras, first in enumeration order.
pub fn enumerate_subuniverses_up_to_iso(a: &FiniteAlgebra, limits: &Limits) -> Result<Vec<SubUniverse>> {
    let all = enumerate_subuniverses(a, limits)?;
    let mut reps: Vec<(SubUniverse, FiniteAlgebra)> = Vec::new();
    for s in all {
        let alg = s.to_algebra(a, "");
        if !reps.iter().any(|(_, r)| is_isomorphic(r, &alg).is_some()) {
            reps.push((s, alg));
        }
    }
    Ok(reps.into_iter().map(|(s, _)| s).collect())
}
