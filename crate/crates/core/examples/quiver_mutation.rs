//! Three-step quiver mutation, checked against matrix mutation.
//!
//! Run with `cargo run --example quiver_mutation`.

use qpmut::quiver::{matrix_mutate, mutate_quiver, premutate_quiver, quivers_equal, to_matrix, Quiver};

fn main() -> qpmut::Result<()> {
    let q = Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")])?;

    let pre = premutate_quiver(&q, "2")?;
    println!("after steps 1 and 2:");
    for a in pre.quiver.arrows() {
        println!("  {}", pre.quiver.arrow_label(pre.quiver.arrow_index(&a.id)?));
    }

    let mu = mutate_quiver(&q, "2")?;
    println!("after cancelling 2-cycles:");
    for (i, _) in mu.arrows().iter().enumerate() {
        println!("  {}", mu.arrow_label(i));
    }

    let b = to_matrix(&q)?;
    let via_matrix = matrix_mutate(&b, "2")?;
    println!("exchange matrix {:?} mutates to {:?}", b.entries, via_matrix.entries);
    assert_eq!(to_matrix(&mu)?, via_matrix);

    let back = mutate_quiver(&mu, "2")?;
    println!("mutating twice restores the quiver: {}", quivers_equal(&back, &q));
    Ok(())
}
