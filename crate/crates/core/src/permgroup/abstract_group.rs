//! Groups given by a full multiplication table.

use std::collections::VecDeque;

use super::GroupError;

pub const MAX_ORDER: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractGroup {
    m: usize,
    table: Vec<u16>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

impl AbstractGroup {
    /// Validates the group axioms (associativity fully for `m <= 64`, on a
    /// deterministic sample above).
    pub fn from_table(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self, GroupError> {
        let m = rows.len();
        if m == 0 || m > MAX_ORDER {
            return Err(GroupError::Input(format!("group order {m} outside 1..={MAX_ORDER}")));
        }
        let mut table = Vec::with_capacity(m * m);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != m {
                return Err(GroupError::Input(format!("row {} has {} entries, expected {m}", i + 1, r.len())));
            }
            let mut seen = vec![false; m];
            for &x in r {
                if x >= m || seen[x] {
                    return Err(GroupError::Input(format!("row {} is not a permutation of 0..{m}", i + 1)));
                }
                seen[x] = true;
            }
            table.extend(r.iter().map(|&x| x as u16));
        }
        let at = |a: usize, b: usize| table[a * m + b] as usize;
        let identity = (0..m)
            .find(|&e| (0..m).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| GroupError::Input("table has no identity".into()))?;
        let mut inverses = vec![0; m];
        for (a, inv) in inverses.iter_mut().enumerate() {
            *inv = (0..m)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| GroupError::Input(format!("element {a} has no inverse")))?;
        }
        let triples: Box<dyn Iterator<Item = (usize, usize, usize)>> = if m <= 64 {
            Box::new((0..m).flat_map(move |a| (0..m).flat_map(move |b| (0..m).map(move |c| (a, b, c)))))
        } else {
            Box::new((0..20_000usize).map(move |i| ((i * 7919) % m, (i * 104_729 + 3) % m, (i * 1_299_709 + 11) % m)))
        };
        for (a, b, c) in triples {
            if at(at(a, b), c) != at(a, at(b, c)) {
                return Err(GroupError::Input(format!("associativity fails at ({a}, {b}, {c})")));
            }
        }
        let labels = labels.unwrap_or_else(|| (0..m).map(|i| i.to_string()).collect());
        Ok(AbstractGroup { m, table, identity, inverses, labels })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.m + b] as usize
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.m).map(|a| (0..self.m).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.m).map(|a| self.element_order(a)).collect()
    }

    /// Sorted `(order, count)` pairs.
    pub fn order_profile(&self) -> Vec<(usize, usize)> {
        let mut os = self.element_orders();
        os.sort_unstable();
        let mut out: Vec<(usize, usize)> = Vec::new();
        for o in os {
            match out.last_mut() {
                Some((v, c)) if *v == o => *c += 1,
                _ => out.push((o, 1)),
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.m).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center_size(&self) -> usize {
        (0..self.m).filter(|&a| (0..self.m).all(|b| self.mul(a, b) == self.mul(b, a))).count()
    }

    /// Elements of the subgroup generated by `gens`, as a membership mask.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.m];
        inside[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    queue.push_back(y);
                }
            }
        }
        inside
    }

    pub fn derived_subgroup_size(&self) -> usize {
        let mut comms = Vec::new();
        let mut seen = vec![false; self.m];
        for a in 0..self.m {
            for b in 0..self.m {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        self.closure(&comms).iter().filter(|&&x| x).count()
    }

    /// Greedy generating set: repeatedly add the first element of largest
    /// order outside the current span.
    pub fn generating_set(&self) -> Vec<usize> {
        let orders = self.element_orders();
        let mut idx: Vec<usize> = (0..self.m).collect();
        idx.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
        let mut gens = Vec::new();
        let mut span = self.closure(&gens);
        for a in idx {
            if !span[a] {
                gens.push(a);
                span = self.closure(&gens);
            }
        }
        gens
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.closure(gens).iter().all(|&x| x)
    }

    /// Isomorphism `self → other` as an element map, if one exists.
    pub fn is_isomorphic(&self, other: &AbstractGroup) -> Option<Vec<usize>> {
        if self.m != other.m
            || self.order_profile() != other.order_profile()
            || self.center_size() != other.center_size()
            || self.derived_subgroup_size() != other.derived_subgroup_size()
        {
            return None;
        }
        let gens = self.generating_set();
        let src_orders: Vec<usize> = gens.iter().map(|&g| self.element_order(g)).collect();
        let dst_orders = other.element_orders();
        let mut images = Vec::with_capacity(gens.len());
        let map = self.assign(other, &gens, &src_orders, &dst_orders, &mut images)?;
        debug_assert!(self.verify_hom(other, &map));
        Some(map)
    }

    fn assign(
        &self,
        other: &AbstractGroup,
        gens: &[usize],
        src_orders: &[usize],
        dst_orders: &[usize],
        images: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        let k = images.len();
        if k == gens.len() {
            let map = self.extend_hom(other, gens, images)?;
            let mut hit = vec![false; other.m];
            for &y in &map {
                hit[y] = true;
            }
            return hit.iter().all(|&b| b).then_some(map);
        }
        for b in 0..other.m {
            if dst_orders[b] != src_orders[k] {
                continue;
            }
            images.push(b);
            if self.extend_hom(other, &gens[..=k], images).is_some() {
                if let Some(m) = self.assign(other, gens, src_orders, dst_orders, images) {
                    return Some(m);
                }
            }
            images.pop();
        }
        None
    }

    /// Extends generator images along the Cayley graph of the subgroup they
    /// generate; `None` when two paths disagree. Unreached entries are
    /// `usize::MAX` (only possible for a partial generating set).
    fn extend_hom(&self, other: &AbstractGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.m];
        let mut back = vec![usize::MAX; other.m];
        map[self.identity] = other.identity;
        back[other.identity] = self.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (g, &gi) in gens.iter().zip(images) {
                let y = self.mul(x, *g);
                let fy = other.mul(map[x], gi);
                if map[y] == usize::MAX {
                    if back[fy] != usize::MAX {
                        return None;
                    }
                    map[y] = fy;
                    back[fy] = y;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        Some(map)
    }

    /// Full check that `map` is a bijective homomorphism.
    pub fn verify_hom(&self, other: &AbstractGroup, map: &[usize]) -> bool {
        if map.len() != self.m || other.m != self.m {
            return false;
        }
        let mut hit = vec![false; other.m];
        for &y in map {
            if y >= other.m || hit[y] {
                return false;
            }
            hit[y] = true;
        }
        (0..self.m).all(|a| (0..self.m).all(|b| map[self.mul(a, b)] == other.mul(map[a], map[b])))
    }

    /// Cyclic group of order `m` with `k ↦ k`.
    pub fn cyclic(m: usize) -> Self {
        let rows = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        AbstractGroup::from_table(rows, None).unwrap()
    }

    pub fn direct_product(&self, other: &AbstractGroup) -> Result<Self, GroupError> {
        let (m1, m2) = (self.m, other.m);
        let rows = (0..m1 * m2)
            .map(|a| (0..m1 * m2).map(|b| self.mul(a / m2, b / m2) * m2 + other.mul(a % m2, b % m2)).collect())
            .collect();
        AbstractGroup::from_table(rows, None)
    }

    /// Right regular representation: element `g` acts by `x ↦ x·g`.
    pub fn regular_perms(&self) -> Vec<super::Perm> {
        (0..self.m)
            .map(|g| super::Perm::from_images((0..self.m).map(|x| self.mul(x, g)).collect()).unwrap())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_product_is_cyclic_when_coprime() {
        let c6 = AbstractGroup::cyclic(6);
        let c2c3 = AbstractGroup::cyclic(2).direct_product(&AbstractGroup::cyclic(3)).unwrap();
        let w = c6.is_isomorphic(&c2c3).unwrap();
        assert!(c6.verify_hom(&c2c3, &w));
        let c2c2 = AbstractGroup::cyclic(2).direct_product(&AbstractGroup::cyclic(2)).unwrap();
        assert!(AbstractGroup::cyclic(4).is_isomorphic(&c2c2).is_none());
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(AbstractGroup::from_table(vec![vec![0, 1], vec![0, 1]], None).is_err());
        // a Latin square that is not associative: a loop of order 5
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(AbstractGroup::from_table(rows, None).is_err());
    }
}
