use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::term::{profile_failure, Profile};

/// Row-major indexing of the pairs of `A × A`: `(i, j) ↦ i·|A| + j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairIndexing {
    base: usize,
}

impl PairIndexing {
    pub fn new(a: &FiniteAlgebra) -> Self {
        PairIndexing { base: a.size() }
    }

    pub fn with_base_size(base: usize) -> Self {
        PairIndexing { base }
    }

    pub fn base_size(self) -> usize {
        self.base
    }

    pub fn size(self) -> usize {
        self.base * self.base
    }

    #[inline]
    pub fn index(self, i: Elem, j: Elem) -> Elem {
        i * self.base + j
    }

    #[inline]
    pub fn pair(self, k: Elem) -> (Elem, Elem) {
        (k / self.base, k % self.base)
    }
}

/// The twist-product `K(A)` on `A × A`:
///
/// ```text
/// (a,b) ∨ (c,d) = (a∨c, b∧d)        (a,b) ∧ (c,d) = (a∧c, b∨d)
/// (a,b) · (c,d) = (ac, (a→d)∧(c→b))  (a,b) → (c,d) = ((a→c)∧(d→b), ad)
/// ```
/// with `1 = (1,1)` and `0 = (0,1)`.
pub fn twist_product(a: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let zero = a.require_zero("twist_product")?;
    if !a.is_integral() {
        return Err(Error::pre(format!("twist_product: {} is not integral", a.name())));
    }
    let p = PairIndexing::new(a);
    let one = a.one();
    let split = |x: Elem, y: Elem| (p.pair(x), p.pair(y));
    FiniteAlgebra::from_fns(
        format!("K({})", a.name()),
        p.size(),
        p.index(one, one),
        Some(p.index(zero, one)),
        |x, y| {
            let ((a1, b1), (c, d)) = split(x, y);
            p.index(a.meet(a1, c), a.join(b1, d))
        },
        |x, y| {
            let ((a1, b1), (c, d)) = split(x, y);
            p.index(a.join(a1, c), a.meet(b1, d))
        },
        |x, y| {
            let ((a1, b1), (c, d)) = split(x, y);
            p.index(a.mul(a1, c), a.meet(a.imp(a1, d), a.imp(c, b1)))
        },
        |x, y| {
            let ((a1, b1), (c, d)) = split(x, y);
            p.index(a.meet(a.imp(a1, c), a.imp(d, b1)), a.mul(a1, d))
        },
    )
}

fn require_bkl(b: &FiniteAlgebra, context: &str) -> Result<()> {
    match profile_failure(b, Profile::Bkl)? {
        None => Ok(()),
        Some((id, asg)) => Err(Error::pre(format!(
            "{context}: {} is not a bounded K-lattice ({id} fails at {asg:?})",
            b.name()
        ))),
    }
}

/// The negative cone `B⁻ = {x : x ≤ 1}` with `x →⁻ y = (x→y) ∧ 1`, and its inclusion into `b`.
pub fn negative_cone(b: &FiniteAlgebra) -> Result<(FiniteAlgebra, Vec<Elem>)> {
    require_bkl(b, "negative_cone")?;
    Ok(negative_cone_unchecked(b))
}

fn negative_cone_unchecked(b: &FiniteAlgebra) -> (FiniteAlgebra, Vec<Elem>) {
    let one = b.one();
    let incl: Vec<Elem> = b.elements().filter(|&x| b.leq(x, one)).collect();
    let mut pos = vec![usize::MAX; b.size()];
    for (i, &x) in incl.iter().enumerate() {
        pos[x] = i;
    }
    let cone = FiniteAlgebra::from_fns(
        format!("{}-", b.name()),
        incl.len(),
        pos[one],
        b.zero().map(|z| pos[z]),
        |x, y| pos[b.meet(incl[x], incl[y])],
        |x, y| pos[b.join(incl[x], incl[y])],
        |x, y| pos[b.mul(incl[x], incl[y])],
        |x, y| pos[b.meet(b.imp(incl[x], incl[y]), one)],
    )
    .expect("the negative cone of a bounded K-lattice is closed");
    (cone, incl)
}

/// The map `x ↦ (x∧1, ∼x∧1)` from `b` into `K(B⁻)`.
#[derive(Clone, Debug)]
pub struct CanonicalEmbedding {
    pub cone: FiniteAlgebra,
    /// Position in `b` of each element of the cone.
    pub inclusion: Vec<Elem>,
    pub twist: FiniteAlgebra,
    /// Image in `twist` of each element of `b`.
    pub map: Vec<Elem>,
}

impl CanonicalEmbedding {
    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.twist.size()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.iter().all(|&h| h)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.twist.size()];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }
}

pub fn canonical_embedding(b: &FiniteAlgebra) -> Result<CanonicalEmbedding> {
    let (cone, inclusion) = negative_cone(b)?;
    let twist = twist_product(&cone)?;
    let p = PairIndexing::new(&cone);
    let mut pos = vec![usize::MAX; b.size()];
    for (i, &x) in inclusion.iter().enumerate() {
        pos[x] = i;
    }
    let one = b.one();
    let map = b
        .elements()
        .map(|x| p.index(pos[b.meet(x, one)], pos[b.meet(b.tilde(x), one)]))
        .collect();
    Ok(CanonicalEmbedding {
        cone,
        inclusion,
        twist,
        map,
    })
}

/// The element `o` with `∼o = o` and `o ∧ 1 = 0`, when it exists.
///
/// Such an element is unique in a bounded K-lattice; a second one is reported
/// as a precondition failure.
pub fn find_self_fixed_element(b: &FiniteAlgebra) -> Result<Option<Elem>> {
    let zero = b.require_zero("find_self_fixed_element")?;
    let mut found = b.elements().filter(|&x| b.tilde(x) == x && b.meet(x, b.one()) == zero);
    let first = found.next();
    if let Some(second) = found.next() {
        return Err(Error::pre(format!(
            "{} has two elements {} and {second} with ~o = o and o & 1 = 0",
            b.name(),
            first.expect("first precedes second")
        )));
    }
    Ok(first)
}
