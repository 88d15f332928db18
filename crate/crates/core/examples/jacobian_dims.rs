//! Dimensions of truncated Jacobian algebras.
//!
//! Run with `cargo run --example jacobian_dims`.

use std::sync::Arc;

use qpmut::jacobian::{is_trivial_qp, jacobian_dims, Qp};
use qpmut::pathalg::Potential;
use qpmut::quiver::Quiver;

fn main() -> qpmut::Result<()> {
    // a trivial QP: its Jacobian algebra is just the vertex span
    let c = Arc::new(Quiver::build(&["1", "2"], &[("x", "1", "2"), ("y", "2", "1")])?);
    let trivial = Qp::exact(Potential::single(c, 6, &["y", "x"])?);
    let d = jacobian_dims(&trivial);
    println!("2-cycle with S = yx: dims {:?}, trivial: {}", d.dims, is_trivial_qp(&trivial));

    let t = Arc::new(Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")])?);
    for (name, qp) in [
        ("S = 0", Qp::with_zero_potential(t.clone(), 8)),
        ("S = cba", Qp::exact(Potential::single(t.clone(), 8, &["c", "b", "a"])?)),
    ] {
        let d = jacobian_dims(&qp);
        println!("triangle with {name}: dims {:?} (trusted below degree {})", d.dims, d.trusted_below_degree);
    }
    Ok(())
}
