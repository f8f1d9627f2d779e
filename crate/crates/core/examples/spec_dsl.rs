//! Building algebras from the expression syntax and checking identities on them.

use twistlab::catalog::{build_spec, parse_spec};
use twistlab::{holds_identity, Limits, Term};

fn main() -> twistlab::Result<()> {
    let limits = Limits::default();
    for text in ["G3", "osum(B2,L2)", "crot(G3)", "drot(B2)", "K(L2)", "K0(G3)"] {
        let a = build_spec(&parse_spec(text)?, &limits)?;
        let lhs = Term::parse("!x | !!x")?;
        let verdict = holds_identity(&a, &lhs, &Term::One)?;
        println!("{text:<12} {:>2} elements  !x | !!x = 1: {verdict:?}", a.size());
    }
    Ok(())
}
