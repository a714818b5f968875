//! Finite groups given by multiplication tables, their conjugacy classes,
//! and explicit wreath products `G ≀ S_n` for brute-force verification.
//!
//! Element indices run over `0..order` with the identity pinned at `0`.
//! Table groups store the full Cayley table. Wreath products never store a
//! table: elements are ranked lexicographically on `(g-tuple, permutation)`
//! and multiplied by decoding into [`WreathElement`]s.

use std::collections::VecDeque;
use std::fmt;
use std::path::Path;

use num::{BigUint, One};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::WreathType;

/// Default bound on `|G|^n · n!` accepted by [`FiniteGroup::build_wreath`].
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// On-disk group description: `{"name": .., "order": k, "mul": [[..]; k]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub order: usize,
    pub mul: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Least element index in the class.
    pub representative: usize,
    /// Members in ascending order.
    pub members: Vec<usize>,
    pub centralizer_order: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug, Clone)]
enum Law {
    Table { mul: Vec<u32>, inv: Vec<u32> },
    Wreath(WreathLaw),
}

#[derive(Debug, Clone)]
struct WreathLaw {
    base: Box<FiniteGroup>,
    n: usize,
    perm_count: usize,
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    law: Law,
    generators: Vec<usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table and precomputes conjugacy data.
    pub fn from_table(name: impl Into<String>, mul: &[Vec<i64>]) -> Result<Self> {
        let order = mul.len();
        if order == 0 {
            return Err(Error::EmptyGroup);
        }
        for (row, entries) in mul.iter().enumerate() {
            if entries.len() != order {
                return Err(Error::NotSquare {
                    row,
                    len: entries.len(),
                    order,
                });
            }
        }
        let mut flat = Vec::with_capacity(order * order);
        for (row, entries) in mul.iter().enumerate() {
            for (col, &value) in entries.iter().enumerate() {
                if value < 0 || value as usize >= order {
                    return Err(Error::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                flat.push(value as u32);
            }
        }
        let at = |a: usize, b: usize| flat[a * order + b] as usize;

        for x in 0..order {
            if at(0, x) != x || at(x, 0) != x {
                return Err(Error::IdentityNotAtZero { element: x });
            }
        }
        let mut inv = vec![0u32; order];
        for (a, slot) in inv.iter_mut().enumerate() {
            match (0..order).find(|&b| at(a, b) == 0 && at(b, a) == 0) {
                Some(b) => *slot = b as u32,
                None => return Err(Error::MissingInverse { element: a }),
            }
        }
        let mut seen = vec![false; order];
        for i in 0..order {
            for by_row in [true, false] {
                seen.iter_mut().for_each(|s| *s = false);
                for j in 0..order {
                    let v = if by_row { at(i, j) } else { at(j, i) };
                    if std::mem::replace(&mut seen[v], true) {
                        return Err(Error::NotLatin { index: i });
                    }
                }
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NonAssociative { a, b, c });
                    }
                }
            }
        }

        let mut group = FiniteGroup {
            name: name.into(),
            order,
            law: Law::Table { mul: flat, inv },
            generators: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        group.generators = group.greedy_generators();
        group.compute_classes();
        Ok(group)
    }

    pub fn load_group(file: &GroupFile) -> Result<Self> {
        if file.order != file.mul.len() {
            return Err(Error::OrderMismatch {
                declared: file.order,
                actual: file.mul.len(),
            });
        }
        Self::from_table(file.name.clone(), &file.mul)
    }

    pub fn from_json_str(text: &str, origin: &str) -> Result<Self> {
        let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::json(origin, e))?;
        Self::load_group(&file)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json_str(&text, &path.display().to_string())
    }

    /// Builds a validated group from an infallible element law.
    fn from_law(name: String, order: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mul: Vec<Vec<i64>> = (0..order)
            .map(|a| (0..order).map(|b| f(a, b) as i64).collect())
            .collect();
        Self::from_table(name, &mul).expect("built-in group law is a group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z_k` with element `i` standing for `i mod k`.
    pub fn cyclic(k: usize) -> Self {
        assert!(k > 0, "cyclic group needs k >= 1");
        Self::from_law(format!("Z{k}"), k, |a, b| (a + b) % k)
    }

    /// `S_k` with permutations listed lexicographically (identity first),
    /// multiplied as functions: `(ab)(i) = a(b(i))`.
    pub fn symmetric(k: usize) -> Self {
        let count: usize = (1..=k).product();
        let perms: Vec<Vec<usize>> = (0..count).map(|r| perm_unrank(r, k)).collect();
        Self::from_law(format!("S{k}"), count, |a, b| {
            let composed: Vec<usize> = (0..k).map(|i| perms[a][perms[b][i]]).collect();
            perm_rank(&composed)
        })
    }

    /// Dihedral group of order `2k`: index `i < k` is the rotation `r^i`,
    /// index `k + i` is the reflection `s r^i`.
    pub fn dihedral(k: usize) -> Self {
        assert!(k > 0, "dihedral group needs k >= 1");
        Self::from_law(format!("D{k}"), 2 * k, |a, b| {
            let (fa, ra) = (a / k, a % k);
            let (fb, rb) = (b / k, b % k);
            // r^i s = s r^{-i}
            let r = if fb == 1 { k - ra + rb } else { ra + rb };
            ((fa ^ fb) * k) + r % k
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.law {
            Law::Table { mul, .. } => mul[a * self.order + b] as usize,
            Law::Wreath(w) => {
                let x = w.element(a);
                let y = w.element(b);
                w.index(&x.compose(&y, &w.base))
            }
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        match &self.law {
            Law::Table { inv, .. } => inv[a] as usize,
            Law::Wreath(w) => w.index(&w.element(a).inverse(&w.base)),
        }
    }

    pub fn conjugate(&self, h: usize, x: usize) -> usize {
        self.mul(self.mul(h, x), self.inverse(h))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Conjugacy classes ordered by representative (the least index).
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    /// Position in [`Self::conjugacy_classes`] of the class containing `x`.
    pub fn class_index(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_representative(&self, x: usize) -> usize {
        self.classes[self.class_of[x]].representative
    }

    pub fn centralizer_order(&self, x: usize) -> usize {
        self.classes[self.class_of[x]].centralizer_order
    }

    /// Multiplication table, for table-backed groups.
    pub fn table(&self) -> Option<Vec<Vec<usize>>> {
        match &self.law {
            Law::Table { mul, .. } => Some(
                mul.chunks(self.order)
                    .map(|row| row.iter().map(|&v| v as usize).collect())
                    .collect(),
            ),
            Law::Wreath(_) => None,
        }
    }

    /// The base group and `n` if this group was built by [`Self::build_wreath`].
    pub fn wreath_parts(&self) -> Option<(&FiniteGroup, usize)> {
        match &self.law {
            Law::Wreath(w) => Some((&w.base, w.n)),
            Law::Table { .. } => None,
        }
    }

    pub fn wreath_element(&self, index: usize) -> Option<WreathElement> {
        match &self.law {
            Law::Wreath(w) if index < self.order => Some(w.element(index)),
            _ => None,
        }
    }

    pub fn wreath_index(&self, element: &WreathElement) -> Option<usize> {
        match &self.law {
            Law::Wreath(w) if element.is_valid_for(&w.base, w.n) => Some(w.index(element)),
            _ => None,
        }
    }

    /// Builds `G ≀ S_n = G^n ⋊ S_n` explicitly, refusing groups above `cap` elements.
    pub fn build_wreath(&self, n: usize, cap: usize) -> Result<FiniteGroup> {
        assert!(n > 0, "wreath product needs n >= 1");
        let perm_count: BigUint = (1..=n).map(BigUint::from).product();
        let required = num::pow(BigUint::from(self.order), n) * &perm_count;
        if required > BigUint::from(cap) {
            return Err(Error::WreathTooLarge { required, cap });
        }
        let order = usize::try_from(&required).expect("order below cap fits usize");
        let perm_count = usize::try_from(&perm_count).expect("n! below cap fits usize");

        let law = WreathLaw {
            base: Box::new(self.clone()),
            n,
            perm_count,
        };
        let mut generators = Vec::new();
        for &g in &self.generators {
            let mut e = WreathElement::identity(n);
            e.g[0] = g;
            generators.push(law.index(&e));
        }
        if n >= 2 {
            let mut swap = WreathElement::identity(n);
            swap.s.swap(0, 1);
            generators.push(law.index(&swap));
        }
        if n >= 3 {
            let mut cycle = WreathElement::identity(n);
            cycle.s = (0..n).map(|i| (i + 1) % n).collect();
            generators.push(law.index(&cycle));
        }

        let mut group = FiniteGroup {
            name: format!("{} wr S{}", self.name, n),
            order,
            law: Law::Wreath(law),
            generators,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        group.compute_classes();
        Ok(group)
    }

    /// Type of a wreath element over this (base) group.
    ///
    /// Each cycle `(i_1 … i_r)` of the permutation, with `s(i_k) = i_{k+1}`,
    /// contributes its cycle-product `g_{i_r} ⋯ g_{i_1}`; the type records how
    /// many `r`-cycles land in each conjugacy class, keyed by representative.
    pub fn type_of(&self, a: &WreathElement) -> WreathType {
        let mut entries = Vec::new();
        for cycle in a.cycles() {
            let product = cycle
                .iter()
                .fold(self.identity(), |acc, &i| self.mul(a.g[i], acc));
            entries.push((self.class_representative(product), cycle.len() as u32, 1));
        }
        WreathType::from_entries(entries)
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order];
        inside[0] = true;
        for x in 1..self.order {
            if inside[x] {
                continue;
            }
            gens.push(x);
            // re-close the subgroup
            let mut queue: VecDeque<usize> = (0..self.order).filter(|&y| inside[y]).collect();
            while let Some(y) = queue.pop_front() {
                for &g in &gens {
                    let z = self.mul(y, g);
                    if !inside[z] {
                        inside[z] = true;
                        queue.push_back(z);
                    }
                }
            }
        }
        gens
    }

    /// Classes as orbits of conjugation by the generating set.
    fn compute_classes(&mut self) {
        const UNSET: usize = usize::MAX;
        let mut class_of = vec![UNSET; self.order];
        let mut classes = Vec::new();
        let gen_inverses: Vec<(usize, usize)> =
            self.generators.iter().map(|&h| (h, self.inverse(h))).collect();
        for start in 0..self.order {
            if class_of[start] != UNSET {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &(h, h_inv) in &gen_inverses {
                    let y = self.mul(self.mul(h, x), h_inv);
                    if class_of[y] == UNSET {
                        class_of[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            let centralizer_order = self.order / members.len();
            classes.push(ConjugacyClass {
                representative: start,
                members,
                centralizer_order,
            });
        }
        self.classes = classes;
        self.class_of = class_of;
    }
}

impl WreathLaw {
    fn element(&self, index: usize) -> WreathElement {
        let k = self.base.order;
        let mut g_rank = index / self.perm_count;
        let mut g = vec![0; self.n];
        for slot in g.iter_mut().rev() {
            *slot = g_rank % k;
            g_rank /= k;
        }
        WreathElement {
            g,
            s: perm_unrank(index % self.perm_count, self.n),
        }
    }

    fn index(&self, e: &WreathElement) -> usize {
        let k = self.base.order;
        let g_rank = e.g.iter().fold(0, |acc, &x| acc * k + x);
        g_rank * self.perm_count + perm_rank(&e.s)
    }
}

/// Element `(g, s)` of `G ≀ S_n`; `s` is 0-based with `s[i] = s(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathElement {
    pub g: Vec<usize>,
    pub s: Vec<usize>,
}

impl WreathElement {
    pub fn identity(n: usize) -> Self {
        WreathElement {
            g: vec![0; n],
            s: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.s.len()
    }

    pub fn is_valid_for(&self, base: &FiniteGroup, n: usize) -> bool {
        if self.g.len() != n || self.s.len() != n || self.g.iter().any(|&x| x >= base.order()) {
            return false;
        }
        let mut seen = vec![false; n];
        self.s
            .iter()
            .all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
    }

    /// `(g, s)(h, t) = (g · s(h), st)` where `s(h)_i = h_{s⁻¹(i)}`.
    pub fn compose(&self, other: &WreathElement, base: &FiniteGroup) -> WreathElement {
        let n = self.n();
        let mut s_inv = vec![0; n];
        for (i, &si) in self.s.iter().enumerate() {
            s_inv[si] = i;
        }
        let g = (0..n).map(|i| base.mul(self.g[i], other.g[s_inv[i]])).collect();
        let s = (0..n).map(|i| self.s[other.s[i]]).collect();
        WreathElement { g, s }
    }

    pub fn inverse(&self, base: &FiniteGroup) -> WreathElement {
        let n = self.n();
        let mut s_inv = vec![0; n];
        for (i, &si) in self.s.iter().enumerate() {
            s_inv[si] = i;
        }
        let g = (0..n).map(|i| base.inverse(self.g[self.s[i]])).collect();
        WreathElement { g, s: s_inv }
    }

    /// Disjoint cycles of `s`, each listed from its least point along `i → s(i)`.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.s[i];
            }
            cycles.push(cycle);
        }
        cycles
    }
}

/// Renders as `((g_1,…,g_n), (1 2)(3))` with 1-based cycle notation.
impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.g.iter().map(|x| x.to_string()).collect();
        write!(f, "(({}), ", g.join(","))?;
        for cycle in self.cycles() {
            let pts: Vec<String> = cycle.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        write!(f, ")")
    }
}

/// Lexicographic rank of a permutation of `0..n`.
pub fn perm_rank(perm: &[usize]) -> usize {
    let n = perm.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

pub fn perm_unrank(mut rank: usize, n: usize) -> Vec<usize> {
    let mut digits = vec![0; n];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = rank % base;
        rank /= base;
    }
    let mut pool: Vec<usize> = (0..n).collect();
    digits.into_iter().map(|d| pool.remove(d)).collect()
}

/// `|G|^n · n!` as an exact integer.
pub fn wreath_order(base_order: usize, n: usize) -> BigUint {
    let fact: BigUint = (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i));
    num::pow(BigUint::from(base_order), n) * fact
}
