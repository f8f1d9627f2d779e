//! Writing an algebra to the JSON table format and reading it back.

use twistlab::catalog::dp_chain;
use twistlab::cli::io::{format_algebra, parse_algebra};

fn main() -> twistlab::Result<()> {
    let a = dp_chain(4)?;
    let text = format_algebra(&a);
    print!("{text}");
    assert_eq!(parse_algebra(&text)?, a);
    Ok(())
}
