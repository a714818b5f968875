//! Conjugacy classes of `G ≀ Sₙ` found by brute force, matched against
//! their types and the closed centralizer formula.
//!
//! ```text
//! cargo run --example wreath_classes            # Z2 wr S3
//! cargo run --example wreath_classes -- s3 2    # built-ins: z<k>, s<k>, d<k>
//! ```

use wreath_hodge::types::{centralizer_order, count_types, enumerate_types};
use wreath_hodge::{FiniteGroup, DEFAULT_ELEMENT_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "z2".into());
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let k: usize = spec[1..].parse()?;
    let g = match &spec[..1] {
        "z" => FiniteGroup::cyclic(k),
        "s" => FiniteGroup::symmetric(k),
        "d" => FiniteGroup::dihedral(k),
        other => return Err(format!("unknown group family `{other}`").into()),
    };

    println!(
        "{}: order {}, {} classes",
        g.name(),
        g.order(),
        g.conjugacy_classes().len()
    );
    let w = g.build_wreath(n, DEFAULT_ELEMENT_CAP)?;
    println!(
        "{}: order {}, {} classes, {} types predicted",
        w.name(),
        w.order(),
        w.conjugacy_classes().len(),
        count_types(&g, n as u32)
    );

    for ty in enumerate_types(&g, n as u32) {
        let class = w
            .conjugacy_classes()
            .iter()
            .find(|c| g.type_of(&w.wreath_element(c.representative).unwrap()) == ty)
            .expect("every type is realized");
        let rep = w.wreath_element(class.representative).unwrap();
        let formula = centralizer_order(&g, &ty);
        let mark = if formula == class.centralizer_order.into() {
            "ok"
        } else {
            "MISMATCH"
        };
        println!(
            "  {:<24} size {:>5}  |Z| = {:>5} (formula {formula}, {mark})  rep {rep}",
            ty.to_string(),
            class.size(),
            class.centralizer_order
        );
    }
    Ok(())
}
