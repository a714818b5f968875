//! Hodge numbers of Hilbert schemes of points against wreath orbifolds built
//! from a crepant-resolution partner with the same orbifold Hodge numbers.
//!
//! ```text
//! cargo run --example hilbert_schemes
//! ```

use wreath_hodge::fixtures;
use wreath_hodge::hilbert::{goettsche_series, verify_samehodge};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k3 = fixtures::k3();
    let series = goettsche_series(&k3, 3);
    println!("Hilbert schemes of points on K3:\n{series}");
    let euler = series.specialize(1, 1)?;
    println!(
        "Euler numbers: {:?}\n",
        euler.q_coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()
    );

    let pairs = [
        (fixtures::kummer(), fixtures::k3()),
        (fixtures::cp2_z3(), fixtures::cp2_z3_resolution()),
        (fixtures::ale(3), fixtures::ale_resolution(3)),
    ];
    for (o, x) in &pairs {
        print!("{}", verify_samehodge(o, x, 4)?);
    }
    Ok(())
}
