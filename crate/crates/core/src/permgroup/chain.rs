//! Deterministic Schreier–Sims.

use num_bigint::BigUint;
use num_traits::One;

use super::perm::Perm;

#[derive(Clone, Debug)]
pub struct Level {
    pub base_point: usize,
    /// Strong generators fixing every earlier base point.
    pub gens: Vec<Perm>,
    /// Orbit of the base point in discovery order.
    pub orbit: Vec<usize>,
    /// `transversal[β]` maps the base point to `β`.
    pub transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(n: usize, base_point: usize) -> Self {
        let mut transversal = vec![None; n];
        transversal[base_point] = Some(Perm::identity(n));
        Level { base_point, gens: Vec::new(), orbit: vec![base_point], transversal }
    }

    fn rebuild_orbit(&mut self, n: usize) {
        self.orbit = vec![self.base_point];
        self.transversal = vec![None; n];
        self.transversal[self.base_point] = Some(Perm::identity(n));
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            for s in &self.gens {
                let c = s.apply(b);
                if self.transversal[c].is_none() {
                    let u = self.transversal[b].as_ref().unwrap().mul(s);
                    self.transversal[c] = Some(u);
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }

    pub fn rep(&self, beta: usize) -> Option<&Perm> {
        self.transversal[beta].as_ref()
    }

    pub fn contains_point(&self, beta: usize) -> bool {
        self.transversal[beta].is_some()
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain whose base starts with `prefix` (points may be fixed by
    /// the group) and is extended as needed.
    pub fn new(n: usize, gens: &[Perm], prefix: &[usize]) -> Self {
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base: Vec<usize> = prefix.to_vec();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved().unwrap());
            }
        }
        let mut levels: Vec<Level> = base.iter().map(|&b| Level::new(n, b)).collect();
        for (i, lvl) in levels.iter_mut().enumerate() {
            lvl.gens = gens.iter().filter(|g| base[..i].iter().all(|&b| g.apply(b) == b)).cloned().collect();
            lvl.rebuild_orbit(n);
        }
        let mut chain = StabChain { n, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let n = self.n;
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let iu = i as usize;
            let orbit = self.levels[iu].orbit.clone();
            let gens = self.levels[iu].gens.clone();
            for &beta in &orbit {
                for s in &gens {
                    let u_beta = self.levels[iu].rep(beta).unwrap();
                    let img = s.apply(beta);
                    let u_img = self.levels[iu].rep(img).unwrap();
                    let g1 = u_beta.mul(s);
                    if &g1 == u_img {
                        continue;
                    }
                    let schreier = g1.mul(&u_img.inv());
                    let (h, j) = self.strip_from(&schreier, iu + 1);
                    let fails = if j < self.levels.len() {
                        true
                    } else if !h.is_identity() {
                        let pt = h.first_moved().unwrap();
                        self.levels.push(Level::new(n, pt));
                        true
                    } else {
                        false
                    };
                    if fails {
                        let top = j.min(self.levels.len() - 1);
                        for l in iu + 1..=top {
                            self.levels[l].gens.push(h.clone());
                            self.levels[l].rebuild_orbit(n);
                        }
                        i = top as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Sifts `g` starting at level `start`; returns the residue and the level
    /// where sifting stopped (`levels.len()` when it went all the way through).
    pub fn strip_from(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (j, lvl) in self.levels.iter().enumerate().skip(start) {
            let beta = h.apply(lvl.base_point);
            match lvl.rep(beta) {
                None => return (h, j),
                Some(u) => h = h.mul(&u.inv()),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.n {
            return false;
        }
        let (h, j) = self.strip_from(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.levels.iter().try_fold(1u64, |acc, l| acc.checked_mul(l.orbit.len() as u64))
    }

    /// Generators of the stabilizer of the first `k` base points.
    pub fn stabilizer_gens(&self, k: usize) -> Vec<Perm> {
        self.levels.get(k).map(|l| l.gens.clone()).unwrap_or_default()
    }

    /// All strong generators, deduplicated, in first-appearance order.
    pub fn strong_gens(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Every element, for small groups. Each is `u_k ⋯ u_1 u_0`.
    pub fn elements(&self) -> Vec<Perm> {
        let mut acc = vec![Perm::identity(self.n)];
        for lvl in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * lvl.orbit.len());
            for a in &acc {
                for &b in &lvl.orbit {
                    next.push(a.mul(lvl.rep(b).unwrap()));
                }
            }
            acc = next;
        }
        acc
    }
}
