//! Twist-products `K(A)`, negative cones and admissible subalgebras.

mod admissible;
mod dp;
mod filters;
mod kalman;

pub use admissible::{
    enumerate_admissible, is_admissible, minimal_admissible, minimal_admissible_algebra, ordinal_restrict,
    ordinal_transfer,
};
pub use dp::{dp_transfer_upset, dp_upset_subalgebra, dp_xn_poset, XPoint, XnPoset};
pub use filters::{
    dense_elements, enumerate_good_filters, enumerate_lattice_filters, enumerate_regular_filters,
    filter_subalgebra_heyting, filter_subalgebra_involutive, filter_subalgebra_stonean, LatticeFilter,
};
pub use kalman::{
    canonical_embedding, find_self_fixed_element, negative_cone, twist_product, CanonicalEmbedding, PairIndexing,
};

use crate::algebra::FiniteAlgebra;
use crate::catalog::wajsberg_chain;
use crate::error::{Error, Result};

/// `K_{r,n}`: the admissible subalgebra of `K(Ł_n)` for the filter `↑(a^r)`,
/// where `a` is the coatom of `Ł_n` and `0 ≤ r ≤ n`.
pub fn wajsberg_admissible(r: usize, n: usize) -> Result<FiniteAlgebra> {
    if r > n {
        return Err(Error::pre(format!("K_{{r,n}} needs r <= n, got r={r}, n={n}")));
    }
    let l = wajsberg_chain(n)?;
    let f = LatticeFilter::principal(&l, n - r)?;
    let s = filter_subalgebra_involutive(&l, &f)?;
    Ok(s.to_algebra(&twist_product(&l)?, format!("K{r},{n}")))
}
