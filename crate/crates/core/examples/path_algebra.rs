//! Truncated path algebra arithmetic, potentials and cyclic derivatives.
//!
//! Run with `cargo run --example path_algebra`.

use std::sync::Arc;

use qpmut::linalg::rat;
use qpmut::pathalg::{cyclic_derivative, AlgebraElement, Potential};
use qpmut::quiver::Quiver;

fn main() -> qpmut::Result<()> {
    let q = Arc::new(Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")])?);

    // paths are written right to left: `b·a` is a followed by b
    let ba = AlgebraElement::path(q.clone(), 6, &["b", "a"])?;
    let c = AlgebraElement::path(q.clone(), 6, &["c"])?;
    let x = c.add(&AlgebraElement::path(q.clone(), 6, &["c", "b", "a", "c"])?)?;
    println!("x = {x}");
    println!("x·(b·a) = {}", x.mul(&ba)?);
    println!("c·(b·a) modulo m^3 = {}", c.truncate(3).mul(&ba)?);

    // rotations of a cycle name the same potential term
    let s = Potential::from_cycles(q.clone(), 8, &[(rat(1), &["c", "b", "a"][..]), (rat(2), &["a", "c", "b"][..])])?;
    println!("S = {s}");
    let s2 = Potential::from_cycles(q.clone(), 8, &[(rat(1), &["c", "b", "a", "c", "b", "a"][..])])?;
    let s = s.add(&s2)?;
    println!("S = {s}, degree profile {:?}", s.degree_profile());
    for a in ["a", "b", "c"] {
        println!("  ∂_{a} S = {}", cyclic_derivative(&s, a)?);
    }
    Ok(())
}
