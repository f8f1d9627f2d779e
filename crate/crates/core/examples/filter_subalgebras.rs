//! Admissible subalgebras from lattice filters: involutive, Heyting and Stonean bases.

use twistlab::catalog::{boolean2, godel_chain, ordinal_sum, wajsberg_chain};
use twistlab::twist::{
    enumerate_good_filters, enumerate_lattice_filters, enumerate_regular_filters, filter_subalgebra_heyting,
    filter_subalgebra_involutive, filter_subalgebra_stonean,
};

fn main() -> twistlab::Result<()> {
    let l4 = wajsberg_chain(4)?;
    for f in enumerate_lattice_filters(&l4)? {
        println!(
            "L4   filter {:?} -> {} pairs",
            f.elements(),
            filter_subalgebra_involutive(&l4, &f)?.len()
        );
    }
    let g3 = godel_chain(3)?;
    for f in enumerate_regular_filters(&g3)? {
        println!(
            "G3   filter {:?} -> {} pairs",
            f.elements(),
            filter_subalgebra_heyting(&g3, &f)?.len()
        );
    }
    let s = ordinal_sum(&boolean2(), &wajsberg_chain(2)?)?;
    for f in enumerate_good_filters(&s)? {
        println!(
            "2+L2 filter {:?} -> {} pairs",
            f.elements(),
            filter_subalgebra_stonean(&s, &f)?.len()
        );
    }
    Ok(())
}
