use crate::algebra::FiniteAlgebra;
use crate::catalog::boolean2;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::twist::{twist_product, PairIndexing};

use super::congruence::{congruence_generated_by, congruence_lattice, monolith, quotient};
use super::iso::is_isomorphic;
use super::subuniverse::{enumerate_subuniverses, generated_zero_free, SubUniverse};

/// `|A| > 2`, subdirectly irreducible, no subuniverses besides `A` and `{0,1}`,
/// and every proper nontrivial quotient is isomorphic to **2**.
pub fn is_rigid(a: &FiniteAlgebra, limits: &Limits) -> Result<bool> {
    a.require_zero("rigidity")?;
    if a.size() <= 2 {
        return Ok(false);
    }
    if enumerate_subuniverses(a, limits)?.len() != 2 {
        return Ok(false);
    }
    if monolith(a, limits)?.is_none() {
        return Ok(false);
    }
    let two = boolean2();
    for c in congruence_lattice(a, limits)? {
        if c.is_identity() || c.is_total() {
            continue;
        }
        let (q, _) = quotient(a, &c)?;
        if is_isomorphic(&q, &two).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|A| > 2` and every element other than 0 and 1 generates `A` without using 0.
pub fn is_tight_reduct(a: &FiniteAlgebra) -> Result<bool> {
    let zero = a.require_zero("tightness")?;
    Ok(a.size() > 2
        && a.elements()
            .filter(|&x| x != zero && x != a.one())
            .all(|x| generated_zero_free(a, &[x]).len() == a.size()))
}

/// For a rigid `a` with monolith μ ≠ ∇: the pairs of `K(a)` outside the class
/// of (0,0) under the congruence generated by μ on the negative cone.
///
/// The returned subuniverse lives in `twist_product(a)`.
pub fn stiffk3_subalgebra(a: &FiniteAlgebra, limits: &Limits) -> Result<SubUniverse> {
    if !is_rigid(a, limits)? {
        return Err(Error::pre(format!("{} is not rigid", a.name())));
    }
    let mu = monolith(a, limits)?.expect("rigid algebras are subdirectly irreducible");
    if mu.is_total() {
        return Err(Error::pre(format!(
            "{} is simple, so it has no proper monolith",
            a.name()
        )));
    }
    let k = twist_product(a)?;
    let idx = PairIndexing::new(a);
    let one = a.one();
    let zero = a.require_zero("stiffk3")?;
    let pairs: Vec<_> = a
        .elements()
        .flat_map(|x| a.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| x < y && mu.related(x, y))
        .map(|(x, y)| (idx.index(x, one), idx.index(y, one)))
        .collect();
    let theta = congruence_generated_by(&k, &pairs);
    let origin = idx.index(zero, zero);
    SubUniverse::new(&k, k.elements().filter(|&p| !theta.related(p, origin)))
}
