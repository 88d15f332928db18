//! Comparing generic QPs with their double mutations.
//!
//! Run with `cargo run --release --example involution_check`.

use std::sync::Arc;

use qpmut::jacobian::Qp;
use qpmut::mutation::{admissible_vertices, check_involution, random_potential, MUTATION_ORDER};
use qpmut::quiver::Quiver;

fn main() -> qpmut::Result<()> {
    let q = Arc::new(Quiver::build(
        &["1", "2", "3", "4"],
        &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("d", "3", "4"), ("e", "4", "2")],
    )?);
    for seed in 0..3 {
        let qp = Qp::exact(random_potential(&q, MUTATION_ORDER - 1, seed).lift_order(MUTATION_ORDER));
        for k in admissible_vertices(&q) {
            let r = check_involution(&qp, &k)?;
            println!(
                "seed {seed} k {k}: arrows {} dims {} {:?} profile {} ({:?} vs {:?})",
                r.arrows_match, r.dims_match, r.original_dims, r.profile_match, r.original_profile, r.twice_profile
            );
        }
    }
    // higher-degree terms lying in the Jacobian ideal can be removed by a
    // right-equivalence, so the profiles may differ while arrows and
    // Jacobian dimensions agree
    Ok(())
}
