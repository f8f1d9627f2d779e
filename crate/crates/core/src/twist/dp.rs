//! Admissible subalgebras of `K(DP_n)` described by up-sets of the poset `X_n`.
//!
//! Points of `X_n` are written by subscripts: `(i, j)` stands for `(a_i, a_j)`.

use crate::algebra::Elem;
use crate::catalog::{dp_chain, dp_element};
use crate::error::{Error, Result};
use crate::structure::SubUniverse;

use super::kalman::{twist_product, PairIndexing};

pub type XPoint = (usize, usize);

/// `X_n = {(a_i, a_j) : n−1 ≥ i ≥ j > 1}`, ordered coordinate-wise by value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XnPoset {
    n: usize,
    points: Vec<XPoint>,
}

impl XnPoset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[XPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: XPoint) -> bool {
        self.points.contains(&p)
    }

    /// Larger subscripts are smaller elements.
    pub fn leq(&self, p: XPoint, q: XPoint) -> bool {
        p.0 >= q.0 && p.1 >= q.1
    }

    pub fn is_upset(&self, u: &[XPoint]) -> bool {
        u.iter().all(|&p| self.contains(p))
            && u.iter()
                .all(|&p| self.points.iter().all(|&q| !self.leq(p, q) || u.contains(&q)))
    }

    /// The least up-set containing `gens`.
    pub fn upset_generated(&self, gens: &[XPoint]) -> Vec<XPoint> {
        self.points
            .iter()
            .copied()
            .filter(|&q| gens.iter().any(|&g| self.leq(g, q)))
            .collect()
    }

    /// Every up-set, by size and then lexicographically.
    pub fn upsets(&self) -> Vec<Vec<XPoint>> {
        let m = self.points.len();
        let mut out: Vec<Vec<XPoint>> = (0u64..1 << m)
            .map(|mask| {
                (0..m)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| self.points[i])
                    .collect::<Vec<_>>()
            })
            .filter(|u| self.is_upset(u))
            .collect();
        for u in &mut out {
            u.sort_unstable();
        }
        out.sort_by(|u, v| u.len().cmp(&v.len()).then_with(|| u.cmp(v)));
        out
    }
}

pub fn dp_xn_poset(n: usize) -> Result<XnPoset> {
    if n < 4 {
        return Err(Error::pre(format!("X_n needs n >= 4, got {n}")));
    }
    let points = (2..n).flat_map(|i| (2..=i).map(move |j| (i, j))).collect();
    Ok(XnPoset { n, points })
}

/// `K_n^U = K_n^∅ ∪ {(x,y) : (x,y) ∈ U or (y,x) ∈ U}` where
/// `K_n^∅ = {(x,1), (1,x), (x,a_1), (a_1,x)}`, as a subuniverse of `K(DP_n)`.
pub fn dp_upset_subalgebra(n: usize, u: &[XPoint]) -> Result<SubUniverse> {
    let xn = dp_xn_poset(n)?;
    if !xn.is_upset(u) {
        return Err(Error::pre(format!("{u:?} is not an up-set of X_{n}")));
    }
    let dp = dp_chain(n)?;
    let p = PairIndexing::new(&dp);
    let (one, a1) = (dp.one(), dp_element(n, 1));
    let mut carrier: Vec<Elem> = Vec::new();
    for x in dp.elements() {
        for (s, t) in [(x, one), (one, x), (x, a1), (a1, x)] {
            carrier.push(p.index(s, t));
        }
    }
    for &(i, j) in u {
        let (x, y) = (dp_element(n, i), dp_element(n, j));
        carrier.push(p.index(x, y));
        carrier.push(p.index(y, x));
    }
    SubUniverse::new(&twist_product(&dp)?, carrier)
}

/// For `4 ≤ m < n`, the up-set `Ũ` of `X_n` with `K_m^U ≤ K_n^Ũ`: generated by the
/// points of `U` with both subscripts below `m−1`, by `(a_{n−1}, a_j)` for each
/// `(a_{m−1}, a_j) ∈ U` with `j < m−1`, and by `(a_{n−1}, a_{n−1})` when
/// `(a_{m−1}, a_{m−1}) ∈ U`.
pub fn dp_transfer_upset(m: usize, n: usize, u: &[XPoint]) -> Result<Vec<XPoint>> {
    if !(4 <= m && m < n) {
        return Err(Error::pre(format!(
            "dp_transfer_upset needs 4 <= m < n, got m={m}, n={n}"
        )));
    }
    let xm = dp_xn_poset(m)?;
    if !xm.is_upset(u) {
        return Err(Error::pre(format!("{u:?} is not an up-set of X_{m}")));
    }
    let mut gens = Vec::new();
    for &(i, j) in u {
        if i < m - 1 && j < m - 1 {
            gens.push((i, j));
        } else if i == m - 1 && j < m - 1 {
            gens.push((n - 1, j));
        } else if i == m - 1 && j == m - 1 {
            gens.push((n - 1, n - 1));
        }
    }
    Ok(dp_xn_poset(n)?.upset_generated(&gens))
}
