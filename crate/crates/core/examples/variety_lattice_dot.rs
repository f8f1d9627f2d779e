//! Subvariety lattice of V(K(L4)) in DOT form.

use twistlab::catalog::wajsberg_chain;
use twistlab::twist::twist_product;
use twistlab::varieties::{emit_dot, subvariety_lattice};
use twistlab::Limits;

fn main() -> twistlab::Result<()> {
    let k = twist_product(&wajsberg_chain(4)?)?;
    let lattice = subvariety_lattice(&[k], &Limits::default())?;
    eprintln!(
        "{} nodes, {} covers, {} SI classes",
        lattice.len(),
        lattice.edges().len(),
        lattice.catalog().len()
    );
    print!("{}", emit_dot(&lattice));
    Ok(())
}
