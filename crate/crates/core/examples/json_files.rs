//! Reading and writing the JSON file formats.
//!
//! Run with `cargo run --example json_files`.

use qpmut::format::{self, qp_from_json, qp_to_json, rep_from_json, rep_to_json, QpJson, RepJson};
use qpmut::jacobian::jacobian_dims;

fn main() -> qpmut::Result<()> {
    let text = include_str!("data/two_cycle_qp.json");
    let qp = qp_from_json(&format::from_str::<QpJson>(text)?)?;
    println!("read a QP on {} arrows, exact {}", qp.quiver().num_arrows(), qp.is_exact());
    println!("{}", format::to_string(&jacobian_dims(&qp).report()));

    let canonical = format::to_string(&qp_to_json(&qp));
    let again = format::to_string(&qp_to_json(&qp_from_json(&format::from_str(&canonical)?)?));
    println!("canonical form is stable: {}", canonical == again);

    let a2 = qp_from_json(&format::from_str::<QpJson>(include_str!("data/a2_qp.json"))?)?;
    let rep = rep_from_json(&format::from_str::<RepJson>(include_str!("data/a2_identity_rep.json"))?, Some(a2.quiver()))?;
    print!("{}", format::to_string(&rep_to_json(&rep)));
    Ok(())
}
