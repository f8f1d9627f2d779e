use std::collections::HashSet;

use crate::algebra::{Elem, FiniteAlgebra, Op};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Disjoint-set forest with path halving.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[hi] = lo;
        true
    }
}

/// An equivalence relation on element indices, stored as block ids numbered
/// in order of first occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    blocks: Vec<usize>,
}

impl Congruence {
    /// Canonicalizes an arbitrary block labelling.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut remap = std::collections::HashMap::new();
        let blocks = labels
            .iter()
            .map(|l| {
                let next = remap.len();
                *remap.entry(*l).or_insert(next)
            })
            .collect();
        Congruence { blocks }
    }

    /// Builds a partition from explicit classes covering `0..n`.
    pub fn from_classes(n: usize, classes: &[Vec<Elem>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            for &x in class {
                if x >= n || labels[x] != usize::MAX {
                    return Err(Error::pre(format!("element {x} is out of range or in two classes")));
                }
                labels[x] = i;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::pre("classes do not cover every element"));
        }
        Ok(Self::from_labels(&labels))
    }

    fn from_union_find(uf: &mut UnionFind) -> Self {
        let labels: Vec<usize> = (0..uf.parent.len()).map(|x| uf.find(x)).collect();
        Self::from_labels(&labels)
    }

    /// Δ
    pub fn identity(n: usize) -> Self {
        Congruence {
            blocks: (0..n).collect(),
        }
    }

    /// ∇
    pub fn total(n: usize) -> Self {
        Congruence { blocks: vec![0; n] }
    }

    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_ids(&self) -> &[usize] {
        &self.blocks
    }

    pub fn block_of(&self, x: Elem) -> usize {
        self.blocks[x]
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.iter().max().map_or(0, |m| m + 1)
    }

    pub fn related(&self, x: Elem, y: Elem) -> bool {
        self.blocks[x] == self.blocks[y]
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks() == self.blocks.len()
    }

    pub fn is_total(&self) -> bool {
        self.num_blocks() <= 1
    }

    pub fn classes(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (x, &b) in self.blocks.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Congruence) -> bool {
        let mut image = vec![usize::MAX; self.num_blocks()];
        self.blocks.iter().zip(&other.blocks).all(|(&b, &c)| {
            if image[b] == usize::MAX {
                image[b] = c;
            }
            image[b] == c
        })
    }

    /// Least equivalence containing both.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::new(self.size());
        for rel in [&self.blocks, &other.blocks] {
            let mut first = std::collections::HashMap::new();
            for (x, &b) in rel.iter().enumerate() {
                let r = *first.entry(b).or_insert(x);
                uf.union(r, x);
            }
        }
        Self::from_union_find(&mut uf)
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        let labels: Vec<usize> = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(&b, &c)| b * other.size() + c)
            .collect();
        Self::from_labels(&labels)
    }

    /// The restriction to `subset`, re-indexed by position in `subset`.
    pub fn restrict(&self, subset: &[Elem]) -> Congruence {
        let labels: Vec<usize> = subset.iter().map(|&x| self.blocks[x]).collect();
        Self::from_labels(&labels)
    }
}

/// Whether `c` is compatible with all four operations.
pub fn is_compatible(a: &FiniteAlgebra, c: &Congruence) -> bool {
    if c.size() != a.size() {
        return false;
    }
    let reps: Vec<Elem> = c.classes().iter().map(|cl| cl[0]).collect();
    // x ≡ rep(x) and y ≡ rep(y) must give f(x,y) ≡ f(rep x, rep y)
    a.elements().all(|x| {
        let rx = reps[c.block_of(x)];
        a.elements().all(|y| {
            let ry = reps[c.block_of(y)];
            Op::ALL
                .iter()
                .all(|&op| c.related(a.apply(op, x, y), a.apply(op, rx, ry)))
        })
    })
}

/// Least congruence identifying every pair in `pairs`.
pub fn congruence_generated_by(a: &FiniteAlgebra, pairs: &[(Elem, Elem)]) -> Congruence {
    let mut uf = UnionFind::new(a.size());
    let mut pending: Vec<(Elem, Elem)> = Vec::new();
    for &(x, y) in pairs {
        if uf.union(x, y) {
            pending.push((x, y));
        }
    }
    // every merged pair is pushed through all basic translations
    while let Some((p, q)) = pending.pop() {
        for z in a.elements() {
            for op in Op::ALL {
                let (u, v) = (a.apply(op, p, z), a.apply(op, q, z));
                if uf.union(u, v) {
                    pending.push((u, v));
                }
                if !op.is_commutative() {
                    let (u, v) = (a.apply(op, z, p), a.apply(op, z, q));
                    if uf.union(u, v) {
                        pending.push((u, v));
                    }
                }
            }
        }
    }
    Congruence::from_union_find(&mut uf)
}

pub fn principal_congruence(a: &FiniteAlgebra, x: Elem, y: Elem) -> Congruence {
    congruence_generated_by(a, &[(x, y)])
}

/// Every congruence of `a`, ordered from Δ upward: by number of blocks
/// (descending) and then by block ids.
pub fn congruence_lattice(a: &FiniteAlgebra, limits: &Limits) -> Result<Vec<Congruence>> {
    Limits::check("congruence lattice size", a.size(), limits.max_con)?;
    let n = a.size();
    let mut principal: Vec<Congruence> = Vec::new();
    let mut seen_principal = HashSet::new();
    for x in 0..n {
        for y in x + 1..n {
            let c = principal_congruence(a, x, y);
            if seen_principal.insert(c.clone()) {
                principal.push(c);
            }
        }
    }
    let mut all: Vec<Congruence> = vec![Congruence::identity(n)];
    let mut seen: HashSet<Congruence> = all.iter().cloned().collect();
    let mut i = 0;
    while i < all.len() {
        for p in &principal {
            let j = all[i].join(p);
            if seen.insert(j.clone()) {
                all.push(j);
            }
        }
        i += 1;
    }
    all.sort_by(|c, d| {
        d.num_blocks()
            .cmp(&c.num_blocks())
            .then_with(|| c.blocks.cmp(&d.blocks))
    });
    Ok(all)
}

/// Indices (into `lattice`) of the upper covers of `lattice[i]`.
pub fn upper_covers(lattice: &[Congruence], i: usize) -> Vec<usize> {
    let c = &lattice[i];
    let above: Vec<usize> = (0..lattice.len())
        .filter(|&j| j != i && c.refines(&lattice[j]))
        .collect();
    above
        .iter()
        .copied()
        .filter(|&j| !above.iter().any(|&k| k != j && lattice[k].refines(&lattice[j])))
        .collect()
}

/// The quotient algebra `a / c` and the projection sending each element to its block.
pub fn quotient(a: &FiniteAlgebra, c: &Congruence) -> Result<(FiniteAlgebra, Vec<Elem>)> {
    if !is_compatible(a, c) {
        return Err(Error::pre("partition is not a congruence"));
    }
    let reps: Vec<Elem> = c.classes().iter().map(|cl| cl[0]).collect();
    let m = reps.len();
    let proj = c.block_ids().to_vec();
    let q = FiniteAlgebra::from_fns(
        format!("{}/~", a.name()),
        m,
        proj[a.one()],
        a.zero().map(|z| proj[z]),
        |x, y| proj[a.meet(reps[x], reps[y])],
        |x, y| proj[a.join(reps[x], reps[y])],
        |x, y| proj[a.mul(reps[x], reps[y])],
        |x, y| proj[a.imp(reps[x], reps[y])],
    )?;
    Ok((q, proj))
}

/// The monolith of `a` if `a` is subdirectly irreducible.
pub fn monolith(a: &FiniteAlgebra, limits: &Limits) -> Result<Option<Congruence>> {
    if a.size() < 2 {
        return Ok(None);
    }
    let lattice = congruence_lattice(a, limits)?;
    let atoms = upper_covers(&lattice, 0);
    Ok(match atoms.as_slice() {
        [only] => Some(lattice[*only].clone()),
        _ => None,
    })
}

pub fn is_subdirectly_irreducible(a: &FiniteAlgebra, limits: &Limits) -> Result<bool> {
    Ok(monolith(a, limits)?.is_some())
}

pub fn is_simple(a: &FiniteAlgebra, limits: &Limits) -> Result<bool> {
    Ok(a.size() > 1 && congruence_lattice(a, limits)?.len() == 2)
}
