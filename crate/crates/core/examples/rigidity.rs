//! Rigid and tight algebras, and the subalgebra of K(A) with a K3 quotient.

use twistlab::catalog::{godel_chain, nm_chain, rigid_witness_c5, wajsberg_chain};
use twistlab::structure::{is_rigid, is_tight_reduct, stiffk3_subalgebra};
use twistlab::Limits;

fn main() -> twistlab::Result<()> {
    let limits = Limits::default();
    let mut algebras = vec![godel_chain(3)?, wajsberg_chain(2)?, rigid_witness_c5(), godel_chain(4)?];
    algebras.extend((3..=6).map(|k| nm_chain(k).unwrap()));
    for a in algebras {
        let rigid = is_rigid(&a, &limits)?;
        let b = if rigid {
            stiffk3_subalgebra(&a, &limits).map(|s| s.len()).ok()
        } else {
            None
        };
        println!(
            "{:<3} rigid={rigid:<5} tight={:<5} B={b:?}",
            a.name(),
            is_tight_reduct(&a)?
        );
    }
    Ok(())
}
