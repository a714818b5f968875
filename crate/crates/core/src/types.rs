//! Conjugacy types of `G ≀ S_n`: partition-valued functions on the classes
//! of `G`, enumerated combinatorially together with their centralizer
//! orders and class sizes.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigUint, One, Zero};
use serde::{Deserialize, Serialize};

use crate::group::{wreath_order, FiniteGroup};

/// Multiplicities `m_r(c)` keyed by class and part size.
///
/// Classes are identified by a `usize` key: the representative element index
/// when a [`FiniteGroup`] is involved, the sector position for orbifold data.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WreathType {
    classes: BTreeMap<usize, BTreeMap<u32, u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeEntryJson {
    pub class: usize,
    pub parts: Vec<u32>,
}

impl WreathType {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Accumulates `(class, r, m)` triples; zero multiplicities are dropped.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, u32, u32)>) -> Self {
        let mut classes: BTreeMap<usize, BTreeMap<u32, u32>> = BTreeMap::new();
        for (class, r, m) in entries {
            assert!(r >= 1, "part sizes are positive");
            if m > 0 {
                *classes.entry(class).or_default().entry(r).or_default() += m;
            }
        }
        WreathType { classes }
    }

    /// `‖ρ‖ = Σ r·m_r(c)`.
    pub fn size(&self) -> usize {
        self.entries().map(|(_, r, m)| (r * m) as usize).sum()
    }

    pub fn multiplicity(&self, class: usize, r: u32) -> u32 {
        self.classes
            .get(&class)
            .and_then(|p| p.get(&r))
            .copied()
            .unwrap_or(0)
    }

    /// `(class, r, m)` with classes ascending and part sizes descending.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u32)> + '_ {
        self.classes
            .iter()
            .flat_map(|(&c, parts)| parts.iter().rev().map(move |(&r, &m)| (c, r, m)))
    }

    pub fn classes(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.keys().copied()
    }

    /// Parts of `ρ(c)` in descending order, with repetition.
    pub fn parts(&self, class: usize) -> Vec<u32> {
        self.classes
            .get(&class)
            .map(|p| {
                p.iter()
                    .rev()
                    .flat_map(|(&r, &m)| std::iter::repeat_n(r, m as usize))
                    .collect()
            })
            .unwrap_or_default()
    }

    pub fn to_json(&self) -> Vec<TypeEntryJson> {
        self.classes()
            .map(|class| TypeEntryJson {
                class,
                parts: self.parts(class),
            })
            .collect()
    }
}

/// `[c0:(2,1)][c2:(1)]`; the empty type renders as `[]`.
impl fmt::Display for WreathType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.classes.is_empty() {
            return write!(f, "[]");
        }
        for class in self.classes() {
            let parts: Vec<String> = self.parts(class).iter().map(|r| r.to_string()).collect();
            write!(f, "[c{}:({})]", class, parts.join(","))?;
        }
        Ok(())
    }
}

/// Partitions of `n` as descending part lists, reverse-lexicographic
/// (`[n]` first, `[1, …, 1]` last).
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Weak compositions of `n` into `k` parts, lexicographically descending
/// (first slot largest first).
pub fn weak_compositions(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=rest).rev() {
            prefix.push(first);
            go(rest - first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    go(n, k, &mut Vec::new(), &mut out);
    out
}

/// Every partition-valued function on `class_keys` of total size `n`.
///
/// Shares are distributed over classes by [`weak_compositions`], then each
/// share is split by [`partitions`]; the first class varies slowest.
pub fn enumerate_types_over(class_keys: &[usize], n: u32) -> Vec<WreathType> {
    let mut out = Vec::new();
    for shares in weak_compositions(n, class_keys.len()) {
        let per_class: Vec<Vec<Vec<u32>>> = shares.iter().map(|&k| partitions(k)).collect();
        let mut choice = vec![0usize; class_keys.len()];
        loop {
            let entries = class_keys
                .iter()
                .enumerate()
                .flat_map(|(i, &class)| per_class[i][choice[i]].iter().map(move |&r| (class, r, 1)));
            out.push(WreathType::from_entries(entries));
            // odometer, last class fastest
            let mut i = class_keys.len();
            let advanced = loop {
                if i == 0 {
                    break false;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < per_class[i].len() {
                    break true;
                }
                choice[i] = 0;
            };
            if !advanced {
                break;
            }
        }
    }
    out
}

pub fn enumerate_types(g: &FiniteGroup, n: u32) -> Vec<WreathType> {
    let reps: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.representative).collect();
    enumerate_types_over(&reps, n)
}

/// `|𝒫_n(G_*)|` from the generating function `∏_r (1 − q^r)^{−|G_*|}`.
pub fn count_types(g: &FiniteGroup, n: u32) -> BigUint {
    count_multipartitions(g.conjugacy_classes().len(), n)
}

pub fn count_multipartitions(colors: usize, n: u32) -> BigUint {
    let n = n as usize;
    // p_k(m) for one color, then convolve `colors` times
    let mut single = vec![BigUint::zero(); n + 1];
    single[0] = BigUint::one();
    for part in 1..=n {
        for m in part..=n {
            let add = single[m - part].clone();
            single[m] += add;
        }
    }
    let mut total = vec![BigUint::zero(); n + 1];
    total[0] = BigUint::one();
    for _ in 0..colors {
        let mut next = vec![BigUint::zero(); n + 1];
        for (i, a) in total.iter().enumerate() {
            for (j, b) in single.iter().enumerate().take(n + 1 - i) {
                next[i + j] += a * b;
            }
        }
        total = next;
    }
    total.swap_remove(n)
}

/// `∏_{c,r} (r·|Z_G(c)|)^{m_r(c)} · m_r(c)!`
pub fn centralizer_order(g: &FiniteGroup, t: &WreathType) -> BigUint {
    t.entries().fold(BigUint::one(), |acc, (class, r, m)| {
        let block = BigUint::from(r as usize * g.centralizer_order(class));
        let fact: BigUint = (1..=m).map(BigUint::from).product();
        acc * num::pow(block, m as usize) * fact
    })
}

/// `|G|^n · n! / centralizer_order`. Panics if the division is not exact.
pub fn class_size(g: &FiniteGroup, t: &WreathType) -> BigUint {
    let total = wreath_order(g.order(), t.size());
    let z = centralizer_order(g, t);
    assert!(
        (&total % &z).is_zero(),
        "centralizer order {z} does not divide group order {total} for type {t}"
    );
    total / z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_zero_gives_single_empty_type() {
        for g in [FiniteGroup::trivial(), FiniteGroup::symmetric(3)] {
            let types = enumerate_types(&g, 0);
            assert_eq!(types, vec![WreathType::empty()]);
            assert_eq!(count_types(&g, 0), BigUint::one());
        }
    }

    #[test]
    fn trivial_group_gives_partition_numbers() {
        let g = FiniteGroup::trivial();
        let p = [1u32, 1, 2, 3, 5, 7, 11, 15];
        for (n, &expected) in p.iter().enumerate() {
            assert_eq!(enumerate_types(&g, n as u32).len(), expected as usize);
            assert_eq!(count_types(&g, n as u32), BigUint::from(expected));
        }
    }

    #[test]
    fn z2_n2_has_five_types() {
        let g = FiniteGroup::cyclic(2);
        let types = enumerate_types(&g, 2);
        assert_eq!(types.len(), 5);
        let rendered: Vec<String> = types.iter().map(|t| t.to_string()).collect();
        assert_eq!(
            rendered,
            [
                "[c0:(2)]",
                "[c0:(1,1)]",
                "[c0:(1)][c1:(1)]",
                "[c1:(2)]",
                "[c1:(1,1)]"
            ]
        );
    }

    #[test]
    fn centralizer_examples() {
        let z2 = FiniteGroup::cyclic(2);
        let t = WreathType::from_entries([(1, 2, 1)]);
        assert_eq!(centralizer_order(&z2, &t), BigUint::from(4u32));
        assert_eq!(class_size(&z2, &t), BigUint::from(2u32));

        let trivial = FiniteGroup::trivial();
        let ncycle = WreathType::from_entries([(0, 5, 1)]);
        assert_eq!(centralizer_order(&trivial, &ncycle), BigUint::from(5u32));
        let three = WreathType::from_entries([(0, 3, 1)]);
        assert_eq!(class_size(&trivial, &three), BigUint::from(2u32));

        let s3 = FiniteGroup::symmetric(3);
        let identity = WreathType::from_entries([(0, 1, 3)]);
        assert_eq!(centralizer_order(&s3, &identity), BigUint::from(6u32 * 6 * 6 * 6));
        assert_eq!(class_size(&s3, &identity), BigUint::one());
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for g in [
            FiniteGroup::trivial(),
            FiniteGroup::cyclic(2),
            FiniteGroup::cyclic(3),
            FiniteGroup::symmetric(3),
            FiniteGroup::dihedral(3),
        ] {
            for n in 0..=6u32 {
                let sum: BigUint = enumerate_types(&g, n).iter().map(|t| class_size(&g, t)).sum();
                assert_eq!(sum, wreath_order(g.order(), n as usize), "{} n={n}", g.name());
            }
        }
    }

    #[test]
    fn enumeration_matches_count_and_has_no_duplicates() {
        let g = FiniteGroup::symmetric(3);
        for n in 0..=5 {
            let types = enumerate_types(&g, n);
            let mut dedup = types.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), types.len());
            assert_eq!(BigUint::from(types.len()), count_types(&g, n));
            assert!(types.iter().all(|t| t.size() == n as usize));
        }
    }

    #[test]
    fn json_and_parts() {
        let t = WreathType::from_entries([(0, 1, 1), (0, 2, 1), (2, 1, 1)]);
        assert_eq!(t.to_string(), "[c0:(2,1)][c2:(1)]");
        assert_eq!(
            t.to_json(),
            vec![
                TypeEntryJson {
                    class: 0,
                    parts: vec![2, 1]
                },
                TypeEntryJson {
                    class: 2,
                    parts: vec![1]
                },
            ]
        );
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(
            partitions(4),
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(weak_compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(weak_compositions(0, 0), vec![Vec::<u32>::new()]);
        assert!(weak_compositions(1, 0).is_empty());
    }
}
