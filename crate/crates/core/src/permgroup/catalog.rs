//! Named groups with fixed default generating sets.

use super::abstract_group::AbstractGroup;
use super::perm::Perm;
use super::{GroupError, PermGroup};

/// A target group: a permutation group (named or from generators) or a table.
#[derive(Clone, Debug)]
pub enum GroupSpec {
    Perm { name: String, group: PermGroup },
    Table { name: String, group: AbstractGroup },
}

impl GroupSpec {
    pub fn name(&self) -> &str {
        match self {
            GroupSpec::Perm { name, .. } | GroupSpec::Table { name, .. } => name,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Perm { group, .. } => group.order_usize(),
            GroupSpec::Table { group, .. } => group.order(),
        }
    }

    pub fn to_abstract(&self) -> Result<AbstractGroup, GroupError> {
        match self {
            GroupSpec::Perm { group, .. } => Ok(AbstractGroup::from_perm_group(group)?.0),
            GroupSpec::Table { group, .. } => Ok(group.clone()),
        }
    }

    /// The table together with the default generators as element indices.
    pub fn with_generators(&self) -> Result<(AbstractGroup, Vec<usize>), GroupError> {
        match self {
            GroupSpec::Perm { group, .. } => {
                let (t, elems) = AbstractGroup::from_perm_group(group)?;
                let gens = group.gens().iter().map(|g| elems.binary_search(g).unwrap()).collect();
                Ok((t, gens))
            }
            GroupSpec::Table { group, .. } => {
                let gens = group.generating_set();
                Ok((group.clone(), gens))
            }
        }
    }
}

fn cyc(n: usize, cycles: &[&[usize]]) -> Perm {
    Perm::from_cycles(n, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn cyclic(m: usize) -> PermGroup {
    if m <= 1 {
        return PermGroup::trivial(1);
    }
    PermGroup::new(m, vec![cyc(m, &[&(0..m).collect::<Vec<_>>()])]).unwrap()
}

fn dihedral(m: usize) -> PermGroup {
    match m {
        0 | 1 => cyclic(2),
        2 => klein(),
        _ => {
            let rot = cyc(m, &[&(0..m).collect::<Vec<_>>()]);
            let refl_cycles: Vec<Vec<usize>> = (1..m).filter(|&i| i < m - i).map(|i| vec![i, m - i]).collect();
            let refl = Perm::from_cycles(m, &refl_cycles).unwrap();
            PermGroup::new(m, vec![rot, refl]).unwrap()
        }
    }
}

fn klein() -> PermGroup {
    PermGroup::new(4, vec![cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])]).unwrap()
}

fn quaternion() -> PermGroup {
    // right regular action on 1, i, j, k, −1, −i, −j, −k
    let mul = |a: usize, b: usize| -> usize {
        let (sa, ua) = (a / 4, a % 4);
        let (sb, ub) = (b / 4, b % 4);
        let (sign, unit) = match (ua, ub) {
            (0, u) | (u, 0) => (0, u),
            (x, y) if x == y => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        };
        ((sa + sb + sign) % 2) * 4 + unit
    };
    let right = |g: usize| Perm::from_images((0..8).map(|x| mul(x, g)).collect()).unwrap();
    PermGroup::new(8, vec![right(1), right(2)]).unwrap()
}

fn alternating(m: usize) -> PermGroup {
    if m < 3 {
        return PermGroup::trivial(m.max(1));
    }
    let long: Vec<usize> = if m % 2 == 1 { (0..m).collect() } else { (1..m).collect() };
    PermGroup::new(m, vec![cyc(m, &[&[0, 1, 2]]), cyc(m, &[&long])]).unwrap()
}

fn symmetric(m: usize) -> PermGroup {
    if m < 2 {
        return PermGroup::trivial(1);
    }
    PermGroup::symmetric(m)
}

fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let n = a.degree() + b.degree();
    let mut gens: Vec<Perm> = a.gens().iter().map(|g| g.extend(n)).collect();
    gens.extend(b.gens().iter().map(|g| g.shift(a.degree(), n)));
    PermGroup::new(n, gens).unwrap()
}

/// Resolves names such as `C6`, `D4` (order 8), `S5`, `A4`, `Q8`, `V4`,
/// `C1`, and direct products `C2xC3`.
pub fn named_group(name: &str) -> Result<PermGroup, GroupError> {
    let parts: Vec<&str> = name.split(['x', 'X', '×']).map(str::trim).collect();
    if parts.len() > 1 {
        let mut acc: Option<PermGroup> = None;
        for p in parts {
            let g = named_group(p)?;
            acc = Some(match acc {
                None => g,
                Some(a) => direct_product(&a, &g),
            });
        }
        return Ok(acc.unwrap());
    }
    let upper = name.trim().to_ascii_uppercase();
    match upper.as_str() {
        "Q8" => return Ok(quaternion()),
        "V4" => return Ok(klein()),
        "1" | "TRIVIAL" => return Ok(cyclic(1)),
        _ => {}
    }
    let (letter, rest) = upper.split_at(upper.chars().next().map_or(0, char::len_utf8));
    let m: usize = rest
        .parse()
        .map_err(|_| GroupError::Input(format!("unknown group name `{name}`")))?;
    if m == 0 || m > 64 {
        return Err(GroupError::Input(format!("group parameter {m} out of range in `{name}`")));
    }
    match letter {
        "C" | "Z" => Ok(cyclic(m)),
        "D" => Ok(dihedral(m)),
        "S" if m <= 12 => Ok(symmetric(m)),
        "A" if m <= 12 => Ok(alternating(m)),
        _ => Err(GroupError::Input(format!("unknown group name `{name}`"))),
    }
}

/// All groups of order at most 8 up to isomorphism, with their default
/// generating sets.
pub fn catalog_up_to_8() -> Vec<(&'static str, PermGroup)> {
    ["C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3", "C7", "C8", "C4xC2", "C2xC2xC2", "D4", "Q8"]
        .iter()
        .map(|&nm| (nm, named_group(nm).unwrap()))
        .collect()
}

/// Groups of order at most 12 for the wider Frucht suite.
pub fn catalog_up_to_12() -> Vec<(&'static str, PermGroup)> {
    let mut v = catalog_up_to_8();
    for nm in ["C9", "C3xC3", "C10", "D5", "C11", "C12", "C6xC2", "D6", "A4"] {
        v.push((nm, named_group(nm).unwrap()));
    }
    // dicyclic group of order 12: <a, b | a^6, b^2 = a^3, b a b^-1 = a^-1> acting on itself
    v.push(("Dic3", dicyclic12()));
    v
}

fn dicyclic12() -> PermGroup {
    // elements a^i b^e, index i + 6e
    let mul = |x: usize, y: usize| -> usize {
        let (i, e) = (x % 6, x / 6);
        let (j, f) = (y % 6, y / 6);
        // a^i b^e a^j b^f = a^(i ± j) b^e b^f
        let k = if e == 0 { (i + j) % 6 } else { (i + 6 - j) % 6 };
        if e == 1 && f == 1 {
            (k + 3) % 6
        } else {
            k + 6 * ((e + f) % 2)
        }
    };
    let right = |g: usize| Perm::from_images((0..12).map(|x| mul(x, g)).collect()).unwrap();
    PermGroup::new(12, vec![right(1), right(6)]).unwrap()
}
