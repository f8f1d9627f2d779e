use crate::algebra::{Elem, FiniteAlgebra};
use crate::catalog::OrdinalSumLayout;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::structure::{closed_supersets, closure_set, is_subuniverse, SubUniverse};

use super::kalman::{twist_product, PairIndexing};

fn cone_pairs(a: &FiniteAlgebra) -> Vec<Elem> {
    let p = PairIndexing::new(a);
    a.elements().map(|x| p.index(x, a.one())).collect()
}

/// The subuniverse of `K(a)` generated by the negative cone `{(x,1)}`.
pub fn minimal_admissible(a: &FiniteAlgebra) -> Result<SubUniverse> {
    let k = twist_product(a)?;
    Ok(SubUniverse::from_set(&closure_set(&k, cone_pairs(a), true)))
}

/// `K₀(A)` as an algebra in its own right.
pub fn minimal_admissible_algebra(a: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let k = twist_product(a)?;
    let s = SubUniverse::from_set(&closure_set(&k, cone_pairs(a), true));
    Ok(s.to_algebra(&k, format!("K0({})", a.name())))
}

/// Whether `carrier` is a subuniverse of `K(a)` containing every `(x,1)`.
pub fn is_admissible(a: &FiniteAlgebra, carrier: &[Elem]) -> Result<bool> {
    let k = twist_product(a)?;
    let cone = cone_pairs(a);
    Ok(is_subuniverse(&k, carrier) && cone.iter().all(|c| carrier.contains(c)))
}

/// Every admissible subuniverse of `K(a)`, by size and then carrier.
pub fn enumerate_admissible(a: &FiniteAlgebra, limits: &Limits) -> Result<Vec<SubUniverse>> {
    Limits::check("twist base size", a.size(), limits.max_twist_base)?;
    let k = twist_product(a)?;
    let start = closure_set(&k, cone_pairs(a), true);
    Ok(closed_supersets(&k, start).iter().map(SubUniverse::from_set).collect())
}

/// `T_S^B`: the admissible subuniverse of `K(A ⊕ B)` containing `S` and every
/// pair with a coordinate in `B ∖ {1}`.
pub fn ordinal_transfer(s: &SubUniverse, a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<SubUniverse> {
    if !is_admissible(a, s.carrier())? {
        return Err(Error::pre("ordinal_transfer: the subuniverse is not admissible"));
    }
    let sum = crate::catalog::ordinal_sum(a, b)?;
    let layout = OrdinalSumLayout::new(a, b);
    let pa = PairIndexing::new(a);
    let ps = PairIndexing::new(&sum);
    let mut in_upper = vec![false; sum.size()];
    for y in b.elements().filter(|&y| y != b.one()) {
        in_upper[layout.upper[y]] = true;
    }
    let mut carrier: Vec<Elem> = s
        .carrier()
        .iter()
        .map(|&k| {
            let (x, y) = pa.pair(k);
            ps.index(layout.lower[x], layout.lower[y])
        })
        .collect();
    for u in sum.elements() {
        for v in sum.elements() {
            if in_upper[u] || in_upper[v] {
                carrier.push(ps.index(u, v));
            }
        }
    }
    let k = twist_product(&sum)?;
    SubUniverse::new(&k, carrier)
}

/// `T ∩ (A × A)` read back in `K(a)`; inverse of [`ordinal_transfer`].
pub fn ordinal_restrict(t: &SubUniverse, a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<SubUniverse> {
    let layout = OrdinalSumLayout::new(a, b);
    let pa = PairIndexing::new(a);
    let ps = PairIndexing::with_base_size(layout.size);
    let carrier: Vec<Elem> = a
        .elements()
        .flat_map(|x| a.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| t.contains(ps.index(layout.lower[x], layout.lower[y])))
        .map(|(x, y)| pa.index(x, y))
        .collect();
    SubUniverse::new(&twist_product(a)?, carrier)
}
