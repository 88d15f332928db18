//! Splitting a QP into a trivial part and a reduced part.
//!
//! Run with `cargo run --example splitting`.

use std::sync::Arc;

use qpmut::jacobian::{jacobian_dims, Qp};
use qpmut::linalg::{rat, ratio};
use qpmut::pathalg::Potential;
use qpmut::quiver::Quiver;
use qpmut::reduction::{split, verify_split};

fn main() -> qpmut::Result<()> {
    let q = Arc::new(Quiver::build(
        &["1", "2", "3"],
        &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("u", "1", "3")],
    )?);
    let s = Potential::from_cycles(
        q.clone(),
        8,
        &[
            (rat(2), &["c", "u"][..]),
            (rat(1), &["c", "b", "a"][..]),
            (ratio(-3, 2), &["c", "u", "c", "b", "a"][..]),
        ],
    )?;
    let qp = Qp::exact(s);
    println!("S = {}", qp.potential());

    let sr = split(&qp);
    println!("trivial pairs: {:?}", sr.trivial_pair_ids());
    println!("reduced arrows: {:?}", sr.reduced.quiver().arrows().iter().map(|a| &a.id).collect::<Vec<_>>());
    println!("reduced potential: {}", sr.reduced.potential());
    println!("stage-2 passes: {}", sr.passes);
    println!("witness: {:?}", sr.witness());
    println!("witness checks out: {}", verify_split(&qp, &sr));

    let before = jacobian_dims(&qp);
    let after = jacobian_dims(&sr.reduced);
    println!("Jacobian dims {:?} vs reduced {:?}", before.dims, after.dims);
    Ok(())
}
