//! The wreath series computed twice: from the closed Euler product, and by
//! summing over conjugacy-class types of `G ≀ Sₙ`. Both must agree exactly.
//!
//! ```text
//! cargo run --example dual_path -- crates/core/fixtures/kummer.json 4
//! ```

use std::path::PathBuf;

use wreath_hodge::orbifold::{wreath_series_direct, wreath_series_product};
use wreath_hodge::{fixtures, ComparisonReport, OrbifoldData};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let data = match args.next() {
        Some(path) => vec![OrbifoldData::from_path(PathBuf::from(path))?],
        None => fixtures::all_orbifolds(),
    };
    let qmax: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);

    let mut all_pass = true;
    for o in &data {
        let product = wreath_series_product(o, qmax);
        let direct = wreath_series_direct(o, None, qmax)?;
        let report = ComparisonReport::compare(format!("{}: product vs direct", o.name()), &product, &direct);
        match report.first_failure() {
            None => println!("{:<32} agree through q^{qmax}", o.name()),
            Some(_) => print!("{report}"),
        }
        all_pass &= report.passed();
    }
    if !all_pass {
        std::process::exit(1);
    }
    Ok(())
}
