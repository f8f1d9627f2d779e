//! Subdirectly irreducible classes of V(K(N5)) and the almost minimal ones.

use twistlab::catalog::nm_chain;
use twistlab::twist::twist_product;
use twistlab::varieties::{almost_minimal_in, si_factors};
use twistlab::Limits;

fn main() -> twistlab::Result<()> {
    let catalog = si_factors(&[twist_product(&nm_chain(5)?)?], &Limits::default())?;
    for (j, c) in catalog.classes().iter().enumerate() {
        let below: Vec<usize> = (0..catalog.len()).filter(|&i| i != j && catalog.leq(i, j)).collect();
        println!(
            "{j:>2} {:<14} {:>2} elements, above {below:?}",
            c.name,
            c.algebra.size()
        );
    }
    let am: Vec<String> = almost_minimal_in(&catalog).into_iter().map(|c| c.name).collect();
    println!("almost minimal: {}", am.join(", "));
    Ok(())
}
