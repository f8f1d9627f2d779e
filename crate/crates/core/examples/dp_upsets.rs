//! Admissible subalgebras of K(DP_n) indexed by up-sets of X_n, and their transfer to larger n.

use twistlab::twist::{dp_transfer_upset, dp_upset_subalgebra, dp_xn_poset};

fn main() -> twistlab::Result<()> {
    let x5 = dp_xn_poset(5)?;
    println!("X5 = {:?}", x5.points());
    for u in x5.upsets() {
        let up = dp_transfer_upset(5, 6, &u)?;
        println!(
            "U = {u:?}: |K5^U| = {}, image in X6 = {up:?}",
            dp_upset_subalgebra(5, &u)?.len()
        );
    }
    Ok(())
}
