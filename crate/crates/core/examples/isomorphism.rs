//! Isomorphism and embedding search between small algebras.

use twistlab::catalog::{boolean2, nm_chain, ordinal_sum, wajsberg_chain};
use twistlab::structure::{exists_embedding, is_isomorphic};
use twistlab::twist::{twist_product, wajsberg_admissible};

fn main() -> twistlab::Result<()> {
    let two = boolean2();
    println!(
        "G3 = 2+2: {:?}",
        is_isomorphic(&twistlab::catalog::godel_chain(3)?, &ordinal_sum(&two, &two)?)
    );
    println!("N3 = L2:  {:?}", is_isomorphic(&nm_chain(3)?, &wajsberg_chain(2)?));
    let k4 = twist_product(&two)?;
    println!(
        "K4 into K(L2): {:?}",
        exists_embedding(&k4, &twist_product(&wajsberg_chain(2)?)?)
    );
    println!(
        "K4 into K1,2:  {:?}",
        exists_embedding(&k4, &wajsberg_admissible(1, 2)?)
    );
    println!(
        "K1,2 into K2,4: {:?}",
        exists_embedding(&wajsberg_admissible(1, 2)?, &wajsberg_admissible(2, 4)?).is_some()
    );
    Ok(())
}
