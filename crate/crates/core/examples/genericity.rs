//! Mutating a generic QP along every short vertex sequence.
//!
//! Run with `cargo run --release --example genericity`.

use std::sync::Arc;

use qpmut::jacobian::Qp;
use qpmut::mutation::{mutate_qp, random_potential};
use qpmut::quiver::Quiver;

fn walk(qp: &Qp, last: Option<&str>, depth: usize, seq: &mut Vec<String>, visited: &mut usize) -> qpmut::Result<()> {
    if depth == 0 {
        return Ok(());
    }
    for k in qp.quiver().vertices().to_vec() {
        if last == Some(k.as_str()) {
            continue;
        }
        seq.push(k.clone());
        let next = mutate_qp(qp, &k)?;
        *visited += 1;
        if !next.quiver().is_two_acyclic() {
            println!("2-cycle after {seq:?}");
        } else {
            walk(&next, Some(&k), depth - 1, seq, visited)?;
        }
        seq.pop();
    }
    Ok(())
}

fn main() -> qpmut::Result<()> {
    let q = Arc::new(Quiver::build(
        &["1", "2", "3", "4"],
        &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("d", "3", "4"), ("e", "4", "2")],
    )?);
    // exact order 9 survives four mutations: 9, 9, 6, 4, 3
    let qp = Qp::exact(random_potential(&q, 7, 5).lift_order(9));
    let mut visited = 0;
    walk(&qp, None, 4, &mut Vec::new(), &mut visited)?;
    println!("{visited} mutations along sequences of length at most 4");
    Ok(())
}
