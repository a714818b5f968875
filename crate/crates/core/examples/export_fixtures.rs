//! Writes every built-in group, surface, orbifold and genus table as JSON.
//!
//! ```text
//! cargo run --example export_fixtures -- crates/core/fixtures
//! ```

use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;
use wreath_hodge::fixtures;
use wreath_hodge::group::GroupFile;
use wreath_hodge::FiniteGroup;

/// Pretty JSON that keeps arrays of scalars (table rows) on one line.
fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("scalar array"));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                render(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&format!("{}{}: ", pad(indent + 1), Value::String(k.clone())));
                render(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

fn write(dir: &Path, name: &str, value: &impl Serialize) {
    let path = dir.join(name);
    let mut text = String::new();
    render(
        &serde_json::to_value(value).expect("fixture serializes"),
        0,
        &mut text,
    );
    std::fs::write(&path, text + "\n").unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    println!("wrote {}", path.display());
}

fn group_file(g: &FiniteGroup) -> GroupFile {
    let table = g.table().expect("table group");
    GroupFile {
        name: g.name().to_string(),
        order: g.order(),
        mul: table
            .into_iter()
            .map(|row| row.into_iter().map(|v| v as i64).collect())
            .collect(),
    }
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(&dir).expect("create output directory");

    write(&dir, "z2.json", &group_file(&FiniteGroup::cyclic(2)));
    write(&dir, "z3.json", &group_file(&FiniteGroup::cyclic(3)));
    write(&dir, "s3.json", &group_file(&FiniteGroup::symmetric(3)));

    write(&dir, "k3.json", &fixtures::k3().to_file());
    write(&dir, "cp2.json", &fixtures::cp2().to_file());
    write(
        &dir,
        "cp2_z3_resolution.json",
        &fixtures::cp2_z3_resolution().to_file(),
    );
    write(
        &dir,
        "k3_trivial.json",
        &fixtures::k3().as_trivial_orbifold().to_file(),
    );
    write(&dir, "kummer.json", &fixtures::kummer().to_file());
    write(&dir, "cp2_z3.json", &fixtures::cp2_z3().to_file());
    for k in [2, 3, 5] {
        write(&dir, &format!("ale_{k}.json"), &fixtures::ale(k).to_file());
        write(
            &dir,
            &format!("ale_{k}_resolution.json"),
            &fixtures::ale_resolution(k).to_file(),
        );
    }
    write(&dir, "k3_genus.json", &fixtures::k3_elliptic_genus().to_file());
}
