//! Congruence lattices, monoliths and quotients.

use twistlab::catalog::{godel_chain, rigid_witness_c5};
use twistlab::structure::{congruence_lattice, monolith, quotient};
use twistlab::twist::twist_product;
use twistlab::Limits;

fn main() -> twistlab::Result<()> {
    let limits = Limits::default();
    for a in [godel_chain(4)?, rigid_witness_c5(), twist_product(&godel_chain(3)?)?] {
        let con = congruence_lattice(&a, &limits)?;
        println!("{}: {} congruences", a.name(), con.len());
        for c in &con {
            println!("  {:?}", c.classes());
        }
        if let Some(mu) = monolith(&a, &limits)? {
            let (q, _) = quotient(&a, &mu)?;
            println!("  monolith quotient has {} elements", q.size());
        }
    }
    Ok(())
}
