//! Subdirectly irreducible members of finitely generated varieties and their
//! subvariety lattices.
//!
//! All generators are finite and the varieties are congruence distributive, so
//! by Jónsson's Lemma every subdirectly irreducible member of `V(K)` lies in
//! `HS(K)`. Ultraproducts never enter: the catalog is built from quotients of
//! subalgebras alone.

mod lattice;

pub use lattice::{emit_dot, subvariety_lattice, VarietyLattice, VarietyNode};

use crate::algebra::FiniteAlgebra;
use crate::error::Result;
use crate::limits::Limits;
use crate::structure::{congruence_lattice, enumerate_subuniverses_up_to_iso, is_isomorphic, quotient, upper_covers};

/// One isomorphism class of subdirectly irreducible algebras.
#[derive(Clone, Debug)]
pub struct SIClass {
    pub name: String,
    pub algebra: FiniteAlgebra,
    /// Generator, subalgebra and congruence that produced the representative.
    pub provenance: String,
}

/// Subdirectly irreducible members of `HS(a)`, one per isomorphism class, with
/// provenance names `A`, `A[s<i>]` or `A[s<i>/c<j>]` (indices into the
/// canonical subuniverse and congruence orders).
fn si_members(a: &FiniteAlgebra, limits: &Limits) -> Result<Vec<SIClass>> {
    let mut out: Vec<SIClass> = Vec::new();
    let subs = enumerate_subuniverses_up_to_iso(a, limits)?;
    let whole = subs.len() - 1;
    for (si, s) in subs.iter().enumerate() {
        let sub_name = if si == whole {
            a.name().to_string()
        } else {
            format!("{}[s{si}]", a.name())
        };
        let sub = s.to_algebra(a, sub_name.clone());
        let con = congruence_lattice(&sub, limits)?;
        for (ci, theta) in con.iter().enumerate() {
            // S/θ is subdirectly irreducible iff θ has exactly one upper cover
            if theta.is_total() || upper_covers(&con, ci).len() != 1 {
                continue;
            }
            let (q, name) = if ci == 0 {
                (sub.clone(), sub_name.clone())
            } else {
                let name = if si == whole {
                    format!("{}[c{ci}]", a.name())
                } else {
                    format!("{}[s{si}/c{ci}]", a.name())
                };
                (quotient(&sub, theta)?.0.with_name(name.clone()), name)
            };
            if !out
                .iter()
                .any(|c| c.algebra.size() == q.size() && is_isomorphic(&c.algebra, &q).is_some())
            {
                out.push(SIClass {
                    name: name.clone(),
                    algebra: q,
                    provenance: name,
                });
            }
        }
    }
    Ok(out)
}

/// The subdirectly irreducible classes of `V(gens)` with the quasi-order
/// `leq[i][j]` meaning class `i` lies in `HS` of class `j`.
#[derive(Clone, Debug)]
pub struct SIClassCatalog {
    classes: Vec<SIClass>,
    leq: Vec<Vec<bool>>,
}

impl SIClassCatalog {
    pub fn classes(&self) -> &[SIClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Index of the class isomorphic to `a`, if any.
    pub fn find(&self, a: &FiniteAlgebra) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.algebra.size() == a.size() && is_isomorphic(&c.algebra, a).is_some())
    }

    pub fn find_name(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    /// Renames every class isomorphic to one of the given algebras. Returns how
    /// many classes were renamed.
    pub fn rename(&mut self, names: &[(FiniteAlgebra, String)]) -> usize {
        let mut renamed = 0;
        for (a, name) in names {
            if let Some(i) = self.find(a) {
                self.classes[i].name = name.clone();
                self.classes[i].algebra = self.classes[i].algebra.clone().with_name(name.clone());
                renamed += 1;
            }
        }
        renamed
    }
}

/// Every subdirectly irreducible algebra in `HS(gens)` up to isomorphism,
/// ordered by size and then by discovery, with the `HS` quasi-order.
pub fn si_factors(gens: &[FiniteAlgebra], limits: &Limits) -> Result<SIClassCatalog> {
    let mut classes: Vec<SIClass> = Vec::new();
    for g in gens {
        for c in si_members(g, limits)? {
            if !classes
                .iter()
                .any(|d| d.algebra.size() == c.algebra.size() && is_isomorphic(&d.algebra, &c.algebra).is_some())
            {
                classes.push(c);
            }
        }
    }
    classes.sort_by_key(|c| c.algebra.size());
    let n = classes.len();
    let mut leq = vec![vec![false; n]; n];
    let catalog = SIClassCatalog {
        classes,
        leq: Vec::new(),
    };
    for (j, class) in catalog.classes.iter().enumerate() {
        for member in si_members(&class.algebra, limits)? {
            let i = catalog
                .find(&member.algebra)
                .expect("HS of a member of HS(gens) stays inside HS(gens)");
            leq[i][j] = true;
        }
    }
    Ok(SIClassCatalog {
        classes: catalog.classes,
        leq,
    })
}

/// `V(a) ⊆ V(b)`: every subdirectly irreducible member of `HS(a)` is in `HS(b)`.
pub fn variety_leq(a: &FiniteAlgebra, b: &FiniteAlgebra, limits: &Limits) -> Result<bool> {
    let of_b = si_members(b, limits)?;
    Ok(si_members(a, limits)?.iter().all(|c| {
        of_b.iter()
            .any(|d| d.algebra.size() == c.algebra.size() && is_isomorphic(&d.algebra, &c.algebra).is_some())
    }))
}

/// Classes whose variety covers an atom of `Λ(V(gens))`.
pub fn almost_minimal_varieties(gens: &[FiniteAlgebra], limits: &Limits) -> Result<Vec<SIClass>> {
    let catalog = si_factors(gens, limits)?;
    Ok(almost_minimal_in(&catalog))
}

/// Classes whose principal down-set has exactly two members.
pub fn almost_minimal_in(catalog: &SIClassCatalog) -> Vec<SIClass> {
    (0..catalog.len())
        .filter(|&j| (0..catalog.len()).filter(|&i| catalog.leq(i, j)).count() == 2)
        .map(|j| catalog.classes[j].clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::boolean2;
    use crate::twist::{minimal_admissible_algebra, twist_product};

    #[test]
    fn k2_has_two_classes() {
        let k = twist_product(&boolean2()).unwrap();
        let cat = si_factors(&[k], &Limits::default()).unwrap();
        assert_eq!(cat.len(), 2);
        assert_eq!(cat.classes()[0].algebra.size(), 3);
        assert!(cat.leq(0, 1) && !cat.leq(1, 0));
    }

    #[test]
    fn k3_below_k4() {
        let k4 = twist_product(&boolean2()).unwrap();
        let k3 = minimal_admissible_algebra(&boolean2()).unwrap();
        assert!(variety_leq(&k3, &k4, &Limits::default()).unwrap());
        assert!(!variety_leq(&k4, &k3, &Limits::default()).unwrap());
    }
}
