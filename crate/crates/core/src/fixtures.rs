//! Built-in data: the classical examples (symmetric products of K3 and `ℂP²`,
//! ALE spaces `ℂ²/G`, the Kummer construction, `ℂP²/ℤ₃`) and seeded random
//! sector data for property checks.
//!
//! Noncompact data uses cohomology with compact supports.

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::elliptic::GenusTable;
use crate::hilbert::SurfaceHodge;
use crate::laurent::BigradedPoly;
use crate::orbifold::{OrbifoldData, Sector, SectorComponent};

fn table(entries: &[(i64, i64, i64)]) -> BigradedPoly {
    BigradedPoly::from_table(entries.iter().copied())
}

fn points(prefix: &str, count: usize, shift: u32) -> Vec<SectorComponent> {
    (1..=count)
        .map(|i| SectorComponent::new(format!("{prefix}{i}"), shift, BigradedPoly::one()))
        .collect()
}

pub fn k3() -> SurfaceHodge {
    SurfaceHodge::new(
        "K3",
        true,
        table(&[(0, 0, 1), (2, 0, 1), (0, 2, 1), (1, 1, 20), (2, 2, 1)]),
    )
    .expect("K3 table")
}

pub fn cp2() -> SurfaceHodge {
    SurfaceHodge::new("CP2", true, table(&[(0, 0, 1), (1, 1, 1), (2, 2, 1)])).expect("CP2 table")
}

/// Abelian surface modulo `x ↦ −x`: invariant cohomology plus 16 fixed
/// points of age 1.
pub fn kummer() -> OrbifoldData {
    let invariant = table(&[(0, 0, 1), (2, 0, 1), (0, 2, 1), (1, 1, 4), (2, 2, 1)]);
    OrbifoldData::new(
        "abelian surface / Z2",
        2,
        vec![
            Sector::new("c0", true, vec![SectorComponent::new("A/Z2", 0, invariant)]),
            Sector::new("c1", false, points("p", 16, 1)),
        ],
    )
    .expect("Kummer data")
}

/// `ℂP²` with `ℤ₃` acting by `[αz₀ : α⁻¹z₁ : z₂]`: three fixed points, each of
/// weights `(1/3, 2/3)` or `(2/3, 1/3)`, so age 1 for both nontrivial classes.
pub fn cp2_z3() -> OrbifoldData {
    OrbifoldData::new(
        "CP2 / Z3",
        2,
        vec![
            Sector::new(
                "c0",
                true,
                vec![SectorComponent::new(
                    "CP2/Z3",
                    0,
                    table(&[(0, 0, 1), (1, 1, 1), (2, 2, 1)]),
                )],
            ),
            Sector::new("c1", false, points("p", 3, 1)),
            Sector::new("c2", false, points("p", 3, 1)),
        ],
    )
    .expect("CP2/Z3 data")
}

/// Minimal resolution of `ℂP²/ℤ₃`: each of three singular points replaced by
/// two `(−2)`-curves.
pub fn cp2_z3_resolution() -> SurfaceHodge {
    SurfaceHodge::new(
        "resolution of CP2/Z3",
        true,
        table(&[(0, 0, 1), (1, 1, 7), (2, 2, 1)]),
    )
    .expect("resolution table")
}

/// `ℂ²/G` for `G ⊂ SL₂(ℂ)` with `class_count` conjugacy classes: every
/// nontrivial class fixes only the origin, with age 1.
pub fn ale(class_count: usize) -> OrbifoldData {
    assert!(class_count >= 1);
    let mut sectors = vec![Sector::new(
        "c0",
        true,
        vec![SectorComponent::new("C2/G", 0, table(&[(2, 2, 1)]))],
    )];
    for c in 1..class_count {
        sectors.push(Sector::new(
            format!("c{c}"),
            false,
            vec![SectorComponent::new("origin", 1, BigradedPoly::one())],
        ));
    }
    OrbifoldData::new(format!("C2 / G, |G_*| = {class_count}"), 2, sectors).expect("ALE data")
}

/// Minimal resolution of `ℂ²/G`: a chain of `class_count − 1` exceptional curves.
pub fn ale_resolution(class_count: usize) -> SurfaceHodge {
    SurfaceHodge::new(
        format!("minimal resolution of C2 / G, |G_*| = {class_count}"),
        false,
        table(&[(1, 1, class_count as i64 - 1), (2, 2, 1)]),
    )
    .expect("ALE resolution table")
}

/// Every built-in orbifold.
pub fn all_orbifolds() -> Vec<OrbifoldData> {
    vec![
        k3().as_trivial_orbifold(),
        cp2().as_trivial_orbifold(),
        ale(2),
        ale(3),
        ale(5),
        kummer(),
        cp2_z3(),
    ]
}

/// Elliptic genus of a K3 surface, `2·φ_{0,1}`, through `q²`.
pub fn k3_elliptic_genus() -> GenusTable {
    let rows: &[(u32, i64, i64)] = &[
        (0, -1, 2),
        (0, 0, 20),
        (0, 1, 2),
        (1, -2, 20),
        (1, -1, -128),
        (1, 0, 216),
        (1, 1, -128),
        (1, 2, 20),
        (2, -3, 2),
        (2, -2, 216),
        (2, -1, -1026),
        (2, 0, 1616),
        (2, 1, -1026),
        (2, 2, 216),
        (2, 3, 2),
    ];
    GenusTable::new(
        "K3",
        2,
        rows.iter().map(|&(m, l, c)| (m, 2 * l, BigInt::from(c))),
        None,
    )
    .expect("K3 genus table")
}

/// Shape constraints for [`random_orbifold`].
#[derive(Debug, Clone, Copy, Default)]
pub struct RandomShape {
    /// Force `h^{s,t} = h^{t,s}` in every component.
    pub symmetric: bool,
    /// Only bidegrees with `s + t` even.
    pub even_only: bool,
}

/// Random sector data: up to 3 classes, up to 3 components each, entries
/// `0..=3` on `[0, d]²`, shifts `0..=d/2`.
pub fn random_orbifold(rng: &mut impl Rng, dim: u32, shape: RandomShape) -> OrbifoldData {
    let d = dim as i64;
    let random_table = |rng: &mut dyn rand::RngCore| {
        let mut p = BigradedPoly::zero();
        for s in 0..=d {
            for t in 0..=d {
                if (shape.even_only && (s + t) % 2 == 1) || (shape.symmetric && t < s) {
                    continue;
                }
                if rng.gen_bool(0.4) {
                    let h: i64 = rng.gen_range(0..=3);
                    p.add_term(2 * s, 2 * t, h.into());
                    if shape.symmetric && s != t {
                        p.add_term(2 * t, 2 * s, h.into());
                    }
                }
            }
        }
        p
    };
    let classes = rng.gen_range(1..=3);
    let mut sectors = Vec::new();
    for c in 0..classes {
        let count = if c == 0 {
            rng.gen_range(1..=2)
        } else {
            rng.gen_range(0..=3)
        };
        let components = (0..count)
            .map(|i| {
                let shift = if c == 0 { 0 } else { rng.gen_range(0..=dim / 2) };
                SectorComponent::new(format!("y{c}_{i}"), shift, random_table(rng))
            })
            .collect();
        sectors.push(Sector::new(format!("c{c}"), c == 0, components));
    }
    OrbifoldData::new(format!("random d={dim}"), dim, sectors).expect("random data is valid")
}

/// The `count` seeded random orbifolds used by the self-test and acceptance
/// suite, alternating `d = 2` and `d = 4`.
pub fn random_suite(seed: u64, count: usize) -> Vec<OrbifoldData> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| random_orbifold(&mut rng, if i % 2 == 0 { 2 } else { 4 }, RandomShape::default()))
        .collect()
}
