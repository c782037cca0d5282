//! Conjugacy classes of subgroups of small symmetric groups.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::perm::{all_perms, Perm, PermGroup};
use crate::error::{Error, Result};

pub const MAX_SUBGROUP_DEGREE: usize = 5;

/// A conjugacy class of subgroups of `𝔖_N` with a representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    /// `"<order>.<k>"`, numbered within each order.
    pub label: String,
    pub representative: PermGroup,
    /// Number of subgroups in the class.
    pub size: usize,
}

/// Elements of `𝔖_N` as indices with a multiplication table; subgroups are bitmasks.
struct SymTable {
    perms: Vec<Perm>,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl SymTable {
    fn new(n: usize) -> Self {
        let perms = all_perms(n);
        let index: HashMap<Perm, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let m = perms.len();
        let mut mul = vec![0; m * m];
        for (i, a) in perms.iter().enumerate() {
            for (j, b) in perms.iter().enumerate() {
                mul[i * m + j] = index[&a.compose(b)];
            }
        }
        let inv = perms.iter().map(|p| index[&p.inverse()]).collect();
        SymTable { perms, mul, inv }
    }

    fn len(&self) -> usize {
        self.perms.len()
    }

    fn product(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    /// Subgroup generated by the elements of `mask`.
    fn closure(&self, mask: u128) -> u128 {
        let gens: Vec<usize> = bits(mask).collect();
        let mut group = 1u128; // index 0 is the identity
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.product(g, x);
                if group & (1 << y) == 0 {
                    group |= 1 << y;
                    frontier.push(y);
                }
            }
        }
        group
    }

    fn conjugate(&self, mask: u128, g: usize) -> u128 {
        bits(mask).fold(0u128, |acc, h| acc | 1 << self.product(self.product(g, h), self.inv[g]))
    }

    fn canonical(&self, mask: u128) -> u128 {
        (0..self.len()).map(|g| self.conjugate(mask, g)).min().expect("nonempty")
    }

    fn to_group(&self, n: usize, mask: u128) -> PermGroup {
        // a small generating set: greedily add elements outside the current span
        let mut gens = Vec::new();
        let mut span = 1u128;
        for x in bits(mask) {
            if span & (1 << x) == 0 {
                gens.push(x);
                span = self.closure(gens.iter().fold(0u128, |acc, &g| acc | 1 << g));
            }
        }
        PermGroup::new(n, gens.iter().map(|&g| self.perms[g].clone()).collect()).expect("subgroup of S_N")
    }
}

fn bits(mask: u128) -> impl Iterator<Item = usize> {
    (0..128).filter(move |i| mask & (1 << i) != 0)
}

/// All subgroups of `𝔖_N` as bitmasks.
fn all_subgroups(t: &SymTable) -> HashSet<u128> {
    let cyclic: HashSet<u128> = (0..t.len()).map(|g| t.closure(1 << g)).collect();
    let mut all: HashSet<u128> = cyclic.clone();
    let mut frontier: Vec<u128> = cyclic.iter().copied().collect();
    while let Some(h) = frontier.pop() {
        for &c in &cyclic {
            if h | c == h {
                continue;
            }
            let j = t.closure(h | c);
            if all.insert(j) {
                frontier.push(j);
            }
        }
    }
    all
}

/// One representative per conjugacy class of subgroups of `𝔖_N`, ordered by
/// group order.
pub fn subgroup_conjugacy_classes(n: usize) -> Result<Vec<SubgroupClass>> {
    if n == 0 || n > MAX_SUBGROUP_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            cap: MAX_SUBGROUP_DEGREE,
        });
    }
    let t = SymTable::new(n);
    let mut classes: BTreeMap<(u32, u128), usize> = BTreeMap::new();
    for h in all_subgroups(&t) {
        *classes.entry((h.count_ones(), t.canonical(h))).or_default() += 1;
    }
    let mut out = Vec::new();
    let mut per_order: BTreeMap<u32, usize> = BTreeMap::new();
    for ((order, mask), size) in classes {
        let k = per_order.entry(order).or_default();
        *k += 1;
        out.push(SubgroupClass {
            label: format!("{order}.{k}"),
            representative: t.to_group(n, mask),
            size,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| subgroup_conjugacy_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 19]);
        let total: usize = subgroup_conjugacy_classes(5).unwrap().iter().map(|c| c.size).sum();
        assert_eq!(total, 156);
        assert!(subgroup_conjugacy_classes(6).is_err());
    }

    #[test]
    fn s3_classes() {
        let orders: Vec<usize> = subgroup_conjugacy_classes(3)
            .unwrap()
            .iter()
            .map(|c| c.representative.order())
            .collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }
}
