//! Substitutions of arrows by series: application, composition, inversion.
//!
//! Run with `cargo run --example substitutions`.

use std::sync::Arc;

use qpmut::linalg::rat;
use qpmut::pathalg::{AlgebraElement, Potential, Substitution};
use qpmut::quiver::Quiver;

fn main() -> qpmut::Result<()> {
    let q = Arc::new(Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")])?);
    let order = 8;

    // c ↦ c - c·b·a·c is unitriangular, hence invertible
    let img = AlgebraElement::path(q.clone(), order, &["c"])?
        .sub(&AlgebraElement::path(q.clone(), order, &["c", "b", "a", "c"])?)?;
    let phi = Substitution::from_ids(q.clone(), order, &[("c", img)])?;
    println!("phi = {phi:?}, unitriangular: {}", phi.is_unitriangular());

    let s = Potential::from_cycles(q.clone(), order, &[(rat(1), &["c", "b", "a"][..]), (rat(1), &["c", "b", "a", "c", "b", "a"][..])])?;
    let t = phi.apply_potential(&s)?;
    println!("phi(cba + cbacba) = {t}");

    let inv = phi.inverse().expect("invertible");
    println!("phi^-1 = {inv:?}");
    let id = Substitution::compose(&inv, &phi)?;
    println!("phi^-1 ∘ phi is the identity: {}", id.is_identity());
    println!("phi^-1 recovers S: {}", inv.apply_potential(&t)? == s);
    Ok(())
}
