use std::fmt;

use super::GroupError;

/// A permutation of `{0, …, n−1}` stored as its image array. Composition is
/// left to right: `a.mul(&b)` applies `a` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { img: (0..n).collect() }
    }

    pub fn from_images(img: Vec<usize>) -> Result<Self, GroupError> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            if x >= n || seen[x] {
                return Err(GroupError::Input(format!("image array {img:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Perm { img })
    }

    /// Builds a permutation of degree `n` from 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut img: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for &x in c {
                if x >= n {
                    return Err(GroupError::Input(format!("point {} exceeds degree {n}", x + 1)));
                }
                if used[x] {
                    return Err(GroupError::Input(format!("point {} repeated in cycles", x + 1)));
                }
                used[x] = true;
            }
            for (i, &x) in c.iter().enumerate() {
                img[x] = c[(i + 1) % c.len()];
            }
        }
        Ok(Perm { img })
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.img[x]
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn mul(&self, other: &Perm) -> Perm {
        Perm { img: self.img.iter().map(|&x| other.img[x]).collect() }
    }

    pub fn inv(&self) -> Perm {
        let mut img = vec![0; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x] = i;
        }
        Perm { img }
    }

    /// `g⁻¹ · self · g`.
    pub fn conj(&self, g: &Perm) -> Perm {
        let mut img = vec![0; self.img.len()];
        for i in 0..self.img.len() {
            img[g.img[i]] = g.img[self.img[i]];
        }
        Perm { img }
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.img[s] == s {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.img[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.img[x];
            }
            out.push(c);
        }
        out
    }

    /// All cycle lengths including fixed points, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = t.iter().sum();
        t.extend(std::iter::repeat_n(1, self.degree() - moved));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.img.iter().enumerate().find(|(i, &x)| *i != x).map(|(i, _)| i)
    }

    /// Extends to a larger degree, fixing the new points.
    pub fn extend(&self, n: usize) -> Perm {
        let mut img = self.img.clone();
        img.extend(self.degree()..n);
        Perm { img }
    }

    /// Moves every point up by `offset` inside degree `n`.
    pub fn shift(&self, offset: usize, n: usize) -> Perm {
        let mut img: Vec<usize> = (0..n).collect();
        for (i, &x) in self.img.iter().enumerate() {
            img[i + offset] = x + offset;
        }
        Perm { img }
    }

    /// Lehmer-code rank in `0..n!`.
    pub fn rank(&self) -> usize {
        let n = self.degree();
        let mut r = 0;
        for i in 0..n {
            let smaller = self.img[i + 1..].iter().filter(|&&x| x < self.img[i]).count();
            r = r * (n - i) + smaller;
        }
        r
    }

    pub fn unrank(n: usize, mut r: usize) -> Perm {
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = r % base;
            r /= base;
        }
        let mut avail: Vec<usize> = (0..n).collect();
        let img = digits.into_iter().map(|d| avail.remove(d)).collect();
        Perm { img }
    }

    /// 1-based cycle notation, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| format!("({})", c.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")))
            .collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self.to_cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_left_to_right() {
        let a = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.mul(&b).apply(0), 2);
        assert_eq!(a.mul(&b).to_cycle_string(), "(1 3 2)");
        assert!(a.mul(&a.inv()).is_identity());
    }

    #[test]
    fn rank_roundtrip() {
        for r in 0..120 {
            assert_eq!(Perm::unrank(5, r).rank(), r);
        }
        assert_eq!(Perm::identity(4).rank(), 0);
    }

    #[test]
    fn cycle_data() {
        let p = Perm::from_cycles(6, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.cycle_type(), vec![3, 2, 1]);
        assert_eq!(p.order(), 6);
        assert!(!p.is_even());
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert!(Perm::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let p = Perm::from_cycles(4, &[vec![0, 1]]).unwrap();
        let g = Perm::from_cycles(4, &[vec![1, 2, 3]]).unwrap();
        let c = p.conj(&g);
        assert_eq!(c, g.inv().mul(&p).mul(&g));
        assert_eq!(c.cycles(), vec![vec![0, 2]]);
    }
}
