use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::structure::SubUniverse;
use crate::term::{satisfies_profile, Profile};

use super::kalman::{twist_product, PairIndexing};

/// A nonempty, up-closed, meet-closed subset of a base algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeFilter {
    elems: Vec<Elem>,
}

impl LatticeFilter {
    pub fn new(a: &FiniteAlgebra, elems: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let mut elems: Vec<Elem> = elems.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        let mut member = vec![false; a.size()];
        for &x in &elems {
            if x >= a.size() {
                return Err(Error::pre(format!("element {x} is not in {}", a.name())));
            }
            member[x] = true;
        }
        if !member[a.one()] {
            return Err(Error::pre("a lattice filter contains one"));
        }
        for &x in &elems {
            if let Some(y) = a.elements().find(|&y| a.leq(x, y) && !member[y]) {
                return Err(Error::pre(format!("filter is not up-closed: {x} <= {y}")));
            }
            if let Some(&y) = elems.iter().find(|&&y| !member[a.meet(x, y)]) {
                return Err(Error::pre(format!("filter is not meet-closed at {x}, {y}")));
            }
        }
        Ok(LatticeFilter { elems })
    }

    /// `↑x`.
    pub fn principal(a: &FiniteAlgebra, x: Elem) -> Result<Self> {
        Self::new(a, a.elements().filter(|&y| a.leq(x, y)))
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &LatticeFilter) -> bool {
        self.elems.iter().all(|&x| other.contains(x))
    }

    pub fn contains_all(&self, xs: &[Elem]) -> bool {
        xs.iter().all(|&x| self.contains(x))
    }
}

/// Elements with `¬x = 0`.
pub fn dense_elements(a: &FiniteAlgebra) -> Result<Vec<Elem>> {
    let zero = a.require_zero("dense elements")?;
    Ok(a.elements().filter(|&x| a.neg(x) == zero).collect())
}

/// Every lattice filter; in a finite lattice these are the principal filters.
/// Ordered by size, then by elements.
pub fn enumerate_lattice_filters(a: &FiniteAlgebra) -> Result<Vec<LatticeFilter>> {
    let mut out = a
        .elements()
        .map(|x| LatticeFilter::principal(a, x))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|f, g| f.len().cmp(&g.len()).then_with(|| f.elems.cmp(&g.elems)));
    out.dedup();
    Ok(out)
}

fn require_profile(a: &FiniteAlgebra, profile: Profile, context: &str) -> Result<()> {
    if satisfies_profile(a, profile)? {
        Ok(())
    } else {
        Err(Error::pre(format!(
            "{context}: {} does not satisfy {}",
            a.name(),
            profile.name()
        )))
    }
}

fn filters_with_dense(a: &FiniteAlgebra) -> Result<Vec<LatticeFilter>> {
    let dense = dense_elements(a)?;
    Ok(enumerate_lattice_filters(a)?
        .into_iter()
        .filter(|f| f.contains_all(&dense))
        .collect())
}

/// Filters of a Heyting algebra that contain every dense element.
pub fn enumerate_regular_filters(a: &FiniteAlgebra) -> Result<Vec<LatticeFilter>> {
    require_profile(a, Profile::Heyting, "regular filters")?;
    filters_with_dense(a)
}

/// Filters of a Stonean algebra that contain every dense element.
pub fn enumerate_good_filters(a: &FiniteAlgebra) -> Result<Vec<LatticeFilter>> {
    require_profile(a, Profile::Stonean, "good filters")?;
    filters_with_dense(a)
}

fn pairs_where(a: &FiniteAlgebra, keep: impl Fn(Elem, Elem) -> bool) -> Result<SubUniverse> {
    let p = PairIndexing::new(a);
    let k = twist_product(a)?;
    let carrier: Vec<Elem> = a
        .elements()
        .flat_map(|x| a.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| keep(x, y))
        .map(|(x, y)| p.index(x, y))
        .collect();
    let s = SubUniverse::new(&k, carrier)?;
    debug_assert!(super::is_admissible(a, s.carrier()).unwrap_or(false));
    Ok(s)
}

/// `{(x,y) : ¬x → y ∈ F}` for an involutive base.
pub fn filter_subalgebra_involutive(a: &FiniteAlgebra, f: &LatticeFilter) -> Result<SubUniverse> {
    require_profile(a, Profile::Involutive, "filter_subalgebra_involutive")?;
    pairs_where(a, |x, y| f.contains(a.imp(a.neg(x), y)))
}

/// `{(x,y) : x ∨ y ∈ F}` for a Heyting base and regular `F`.
pub fn filter_subalgebra_heyting(h: &FiniteAlgebra, f: &LatticeFilter) -> Result<SubUniverse> {
    require_profile(h, Profile::Heyting, "filter_subalgebra_heyting")?;
    if !f.contains_all(&dense_elements(h)?) {
        return Err(Error::pre("filter_subalgebra_heyting: the filter is not regular"));
    }
    pairs_where(h, |x, y| f.contains(h.join(x, y)))
}

/// `{(x,y) : ¬x → ¬¬y ∈ F}` for a Stonean base and good `F`.
pub fn filter_subalgebra_stonean(a: &FiniteAlgebra, f: &LatticeFilter) -> Result<SubUniverse> {
    require_profile(a, Profile::Stonean, "filter_subalgebra_stonean")?;
    if !f.contains_all(&dense_elements(a)?) {
        return Err(Error::pre("filter_subalgebra_stonean: the filter is not good"));
    }
    pairs_where(a, |x, y| f.contains(a.imp(a.neg(x), a.neg(a.neg(y)))))
}
