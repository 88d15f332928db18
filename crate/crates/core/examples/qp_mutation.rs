//! QP mutation: the triangle example and a longer mutation sequence.
//!
//! Run with `cargo run --example qp_mutation`.

use std::sync::Arc;

use qpmut::jacobian::Qp;
use qpmut::mutation::{check_involution, mutate_qp_traced, mutate_sequence, random_potential};
use qpmut::pathalg::Potential;
use qpmut::quiver::Quiver;

fn main() -> qpmut::Result<()> {
    let q = Arc::new(Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")])?);
    let qp = Qp::exact(Potential::single(q, 8, &["c", "b", "a"])?);

    let trace = mutate_qp_traced(&qp, "2")?;
    println!("premutated potential: {}", trace.premutation.qp_tilde.potential());
    for (id, origin) in &trace.premutation.provenance {
        println!("  {id}: {origin:?}");
    }
    let mu = trace.result();
    println!("μ_2: arrows {:?}, potential {}", mu.quiver().arrows().iter().map(|a| &a.id).collect::<Vec<_>>(), mu.potential());

    let report = check_involution(&qp, "2")?;
    println!("involution at 2: arrows {}, dims {}, profile {}", report.arrows_match, report.dims_match, report.profile_match);

    // a generic potential on two glued triangles, mutated along a sequence
    let q = Arc::new(Quiver::build(
        &["1", "2", "3", "4"],
        &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("d", "3", "4"), ("e", "4", "2")],
    )?);
    let qp = Qp::exact(random_potential(&q, 7, 11).lift_order(9));
    let end = mutate_sequence(&qp, &["1", "3", "2"])?;
    println!(
        "μ_2 μ_3 μ_1: {} arrows, 2-acyclic {}, known modulo m^{}",
        end.quiver().num_arrows(),
        end.quiver().is_two_acyclic(),
        end.order()
    );
    Ok(())
}
