//! Embedding and isomorphism search.
//!
//! A map is fixed by its values on a generating set, so the search only
//! branches on generators; every other value is forced by closure.

use crate::algebra::{Elem, FiniteAlgebra, Op};

use super::subuniverse::{closure_set, extend_closed};

/// Per-element data that any embedding preserves.
type Invariant = [usize; 8];

fn invariants(a: &FiniteAlgebra, with_zero: bool, order: bool) -> Vec<Invariant> {
    let one = a.one();
    let zero = a.zero().filter(|_| with_zero);
    a.elements()
        .map(|x| {
            let mut inv = [0; 8];
            inv[0] = closure_set(a, [x], with_zero).len();
            inv[1] = a.leq(x, one) as usize | (a.leq(one, x) as usize) << 1 | ((x == one) as usize) << 2;
            inv[2] = (a.mul(x, x) == x) as usize | ((a.tilde(x) == x) as usize) << 1;
            inv[3] = (a.imp(x, x) == one) as usize | ((a.tilde(a.tilde(x)) == x) as usize) << 1;
            if let Some(z) = zero {
                inv[4] = (a.imp(x, z) == x) as usize
                    | ((a.meet(x, one) == z) as usize) << 1
                    | ((x == z) as usize) << 2
                    | ((a.imp(x, z) == z) as usize) << 3;
            }
            if order {
                inv[5] = a.elements().filter(|&y| a.leq(y, x)).count();
                inv[6] = a.elements().filter(|&y| a.leq(x, y)).count();
                inv[7] = a.elements().filter(|&y| a.mul(x, y) == y).count();
            }
            inv
        })
        .collect()
}

/// Greedy generating sequence: each step adds the element whose closure grows most.
fn generating_sequence(a: &FiniteAlgebra, with_zero: bool) -> Vec<Elem> {
    let mut closed = closure_set(a, [], with_zero);
    let mut gens = Vec::new();
    while closed.len() < a.size() {
        let (g, next) = a
            .elements()
            .filter(|&x| !closed.contains(x))
            .map(|x| (x, extend_closed(a, &closed, x)))
            .max_by(|(x, s), (y, t)| s.len().cmp(&t.len()).then(y.cmp(x)))
            .expect("closure is proper");
        gens.push(g);
        closed = next;
    }
    gens
}

struct Search<'a> {
    a: &'a FiniteAlgebra,
    b: &'a FiniteAlgebra,
    map: Vec<Option<Elem>>,
    used: Vec<bool>,
    domain: Vec<Elem>,
}

impl<'a> Search<'a> {
    fn assign(&mut self, x: Elem, y: Elem) -> bool {
        match self.map[x] {
            Some(v) => v == y,
            None if self.used[y] => false,
            None => {
                self.map[x] = Some(y);
                self.used[y] = true;
                self.domain.push(x);
                true
            }
        }
    }

    /// Closes the domain from position `from`, forcing values; false on conflict.
    fn propagate(&mut self, from: usize) -> bool {
        let mut i = from;
        while i < self.domain.len() {
            let x = self.domain[i];
            let hx = self.map[x].expect("domain is mapped");
            for j in 0..=i {
                let y = self.domain[j];
                let hy = self.map[y].expect("domain is mapped");
                for op in Op::ALL {
                    if !self.assign(self.a.apply(op, x, y), self.b.apply(op, hx, hy)) {
                        return false;
                    }
                    if !op.is_commutative() && !self.assign(self.a.apply(op, y, x), self.b.apply(op, hy, hx)) {
                        return false;
                    }
                }
            }
            i += 1;
        }
        true
    }

    fn undo(&mut self, len: usize) {
        for x in self.domain.drain(len..) {
            let y = self.map[x].take().expect("domain is mapped");
            self.used[y] = false;
        }
    }
}

fn search(a: &FiniteAlgebra, b: &FiniteAlgebra, order: bool) -> Option<Vec<Elem>> {
    if a.size() > b.size() || (a.is_bounded() && !b.is_bounded()) {
        return None;
    }
    let with_zero = a.is_bounded();
    let inv_a = invariants(a, with_zero, order);
    let inv_b = invariants(b, with_zero, order);
    if order {
        let mut sa = inv_a.clone();
        let mut sb = inv_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
    }
    let gens = generating_sequence(a, with_zero);
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&g| b.elements().filter(|&y| inv_b[y] == inv_a[g]).collect())
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }

    let mut s = Search {
        a,
        b,
        map: vec![None; a.size()],
        used: vec![false; b.size()],
        domain: Vec::new(),
    };
    if !s.assign(a.one(), b.one()) {
        return None;
    }
    if let (true, Some(za), Some(zb)) = (with_zero, a.zero(), b.zero()) {
        if !s.assign(za, zb) {
            return None;
        }
    }
    if !s.propagate(0) {
        return None;
    }

    // explicit stack of candidate cursors, one per generator
    let mut cursor = vec![0usize; gens.len()];
    let mut marks = vec![0usize; gens.len()];
    let mut k = 0;
    loop {
        if k == gens.len() {
            return Some(s.map.iter().map(|m| m.expect("generators cover the algebra")).collect());
        }
        let mut advanced = false;
        while cursor[k] < candidates[k].len() {
            let y = candidates[k][cursor[k]];
            cursor[k] += 1;
            marks[k] = s.domain.len();
            if s.assign(gens[k], y) && s.propagate(marks[k]) {
                advanced = true;
                break;
            }
            s.undo(marks[k]);
        }
        if advanced {
            k += 1;
            if k < gens.len() {
                cursor[k] = 0;
            }
        } else {
            if k == 0 {
                return None;
            }
            k -= 1;
            s.undo(marks[k]);
        }
    }
}

/// An injective homomorphism `a → b` preserving 1 (and 0 when `a` is bounded), if one exists.
///
/// The result maps each element of `a` to its image in `b`.
pub fn exists_embedding(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Option<Vec<Elem>> {
    search(a, b, false)
}

/// A bijective homomorphism `a → b`, if one exists.
pub fn is_isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Option<Vec<Elem>> {
    if a.size() != b.size() || a.is_bounded() != b.is_bounded() {
        return None;
    }
    search(a, b, true)
}

/// Whether `map` preserves all four operations and the constants of `a`.
pub fn is_homomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[Elem]) -> bool {
    if map.len() != a.size() || map.iter().any(|&y| y >= b.size()) || map[a.one()] != b.one() {
        return false;
    }
    if let Some(z) = a.zero() {
        if b.zero() != Some(map[z]) {
            return false;
        }
    }
    a.elements().all(|x| {
        a.elements().all(|y| {
            Op::ALL
                .iter()
                .all(|&op| map[a.apply(op, x, y)] == b.apply(op, map[x], map[y]))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean2, godel_chain, nm_chain, ordinal_sum, wajsberg_chain};

    #[test]
    fn n3_is_l2() {
        let n3 = nm_chain(3).unwrap();
        let l2 = wajsberg_chain(2).unwrap();
        let m = is_isomorphic(&n3, &l2).unwrap();
        assert!(is_homomorphism(&n3, &l2, &m));
    }

    #[test]
    fn g3_is_two_plus_two() {
        let s = ordinal_sum(&boolean2(), &boolean2()).unwrap();
        assert!(is_isomorphic(&s, &godel_chain(3).unwrap()).is_some());
    }

    #[test]
    fn chains_embed_by_size() {
        let g3 = godel_chain(3).unwrap();
        let g5 = godel_chain(5).unwrap();
        let m = exists_embedding(&g3, &g5).unwrap();
        assert!(is_homomorphism(&g3, &g5, &m));
        assert!(exists_embedding(&g5, &g3).is_none());
        assert!(exists_embedding(&wajsberg_chain(2).unwrap(), &wajsberg_chain(3).unwrap()).is_none());
        assert!(exists_embedding(&wajsberg_chain(2).unwrap(), &wajsberg_chain(4).unwrap()).is_some());
    }

    #[test]
    fn non_isomorphic_same_size() {
        assert!(is_isomorphic(&godel_chain(3).unwrap(), &wajsberg_chain(2).unwrap()).is_none());
    }
}
