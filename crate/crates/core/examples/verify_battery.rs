//! Checks the residuated lattice axioms and the equation profiles of a few chains.

use twistlab::catalog::{dp_chain, godel_chain, nm_chain, rigid_witness_c5, wajsberg_chain};
use twistlab::{satisfies_profile, verify_algebra, Profile};

fn main() -> twistlab::Result<()> {
    for a in [
        godel_chain(4)?,
        wajsberg_chain(3)?,
        nm_chain(5)?,
        dp_chain(5)?,
        rigid_witness_c5(),
    ] {
        let report = verify_algebra(&a)?;
        let holding: Vec<&str> = Profile::ALL
            .into_iter()
            .filter(|&p| satisfies_profile(&a, p).unwrap_or(false))
            .map(Profile::name)
            .collect();
        println!(
            "{:<4} axioms {}  profiles {}",
            a.name(),
            if report.passed_integral() { "ok" } else { "FAIL" },
            holding.join(" ")
        );
    }
    Ok(())
}
