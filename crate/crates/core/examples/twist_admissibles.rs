//! The twist-product of a chain and its admissible subalgebras, listed as pair sets.

use twistlab::catalog::nm_chain;
use twistlab::twist::{enumerate_admissible, twist_product, PairIndexing};
use twistlab::Limits;

fn main() -> twistlab::Result<()> {
    let n5 = nm_chain(5)?;
    let k = twist_product(&n5)?;
    let p = PairIndexing::new(&n5);
    println!("{} has {} elements", k.name(), k.size());
    for s in enumerate_admissible(&n5, &Limits::default())? {
        let pairs: Vec<String> = s.carrier().iter().map(|&x| format!("{:?}", p.pair(x))).collect();
        println!("[{:>2}] {}", s.len(), pairs.join(" "));
    }
    Ok(())
}
