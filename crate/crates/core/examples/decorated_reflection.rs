//! Reflection of decorated representations at sinks and sources.
//!
//! Run with `cargo run --example decorated_reflection`.

use std::sync::Arc;

use qpmut::decorated::{is_isomorphic, mutate_decorated, DecoratedRep, Representation, ISO_TRIALS};
use qpmut::linalg::RatMatrix;
use qpmut::quiver::Quiver;

fn show(label: &str, dm: &DecoratedRep) {
    println!("{label}: dims {:?}, decoration {:?}", dm.rep.dims(), dm.decoration);
}

fn main() -> qpmut::Result<()> {
    // two arrows into the sink 3
    let q = Arc::new(Quiver::build(&["1", "2", "3"], &[("a", "1", "3"), ("b", "2", "3")])?);
    let m = Representation::from_ids(
        q,
        &[("1", 1), ("2", 1), ("3", 1)],
        &[("a", RatMatrix::from_i64(&[&[1]])), ("b", RatMatrix::from_i64(&[&[2]]))],
    )?;
    let dm = DecoratedRep::new(m, vec![0, 0, 1])?;
    show("M", &dm);

    let once = mutate_decorated(&dm, "3")?;
    show("μ_3 M", &once);
    let twice = mutate_decorated(&once, "3")?;
    show("μ_3 μ_3 M", &twice);
    println!("M-parts isomorphic: {}", is_isomorphic(&dm.rep, &twice.rep, ISO_TRIALS)?);
    Ok(())
}
