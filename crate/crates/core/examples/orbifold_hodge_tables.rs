//! Orbifold Hodge numbers of the standard examples, read from the shipped
//! fixture files and printed as diamonds.
//!
//! ```text
//! cargo run --example orbifold_hodge_tables
//! ```

use std::path::Path;

use wreath_hodge::{BigradedPoly, OrbifoldData};

/// Rows `t = d ..= 0`, columns `s = 0 ..= d`.
fn grid(h: &BigradedPoly, d: i64) {
    for t in (0..=d).rev() {
        let row: Vec<String> = (0..=d).map(|s| format!("{:>3}", h.coeff(s, t))).collect();
        println!("    t={t}: {}", row.join(" "));
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for file in [
        "kummer.json",
        "cp2_z3.json",
        "ale_2.json",
        "ale_3.json",
        "ale_5.json",
    ] {
        let o = OrbifoldData::from_path(dir.join(file))?;
        let h = o.orbifold_hodge_poly();
        println!("{} (d = {}): H = {h}", o.name(), o.dim());
        println!("  quotient alone: {}", o.quotient_hodge_poly());
        grid(&h, o.dim() as i64);
        println!("  h^(1,1) = {}", h.coeff(1, 1));
    }
    Ok(())
}
