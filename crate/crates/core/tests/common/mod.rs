//! Brute-force reference computations. Everything here works from the
//! multiplication table alone with plain loops and sorted vectors, and
//! shares no code with the library beyond `Group::mul`.

#![allow(dead_code)]

use centracover::Group;

pub type Set = Vec<usize>;

pub fn commute(g: &Group, a: usize, b: usize) -> bool {
    g.mul(a, b) == g.mul(b, a)
}

pub fn centralizer_of(g: &Group, elems: &[usize]) -> Set {
    (0..g.order())
        .filter(|&x| elems.iter().all(|&y| commute(g, x, y)))
        .collect()
}

pub fn group_center(g: &Group) -> Set {
    let all: Set = (0..g.order()).collect();
    centralizer_of(g, &all)
}

pub fn centralizer(g: &Group, a: usize) -> Set {
    centralizer_of(g, &[a])
}

pub fn element_center(g: &Group, a: usize) -> Set {
    centralizer_of(g, &centralizer(g, a))
}

pub fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

pub fn strict_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() < b.len() && subset(a, b)
}

pub fn is_abelian_set(g: &Group, s: &[usize]) -> bool {
    s.iter().all(|&a| s.iter().all(|&b| commute(g, a, b)))
}

/// One entry per distinct centralizer, in order of first noncentral
/// representative.
pub struct NaiveAtlas {
    pub center: Set,
    pub reps: Vec<usize>,
    pub centralizers: Vec<Set>,
    pub centers: Vec<Set>,
}

impl NaiveAtlas {
    pub fn new(g: &Group) -> NaiveAtlas {
        let center = group_center(g);
        let mut reps = Vec::new();
        let mut centralizers: Vec<Set> = Vec::new();
        let mut centers = Vec::new();
        for a in 0..g.order() {
            if center.contains(&a) {
                continue;
            }
            let c = centralizer(g, a);
            if centralizers.contains(&c) {
                continue;
            }
            reps.push(a);
            centers.push(element_center(g, a));
            centralizers.push(c);
        }
        NaiveAtlas {
            center,
            reps,
            centralizers,
            centers,
        }
    }

    pub fn len(&self) -> usize {
        self.centralizers.len()
    }

    pub fn maximal_centralizers(&self) -> Vec<usize> {
        let c = &self.centralizers;
        (0..c.len())
            .filter(|&i| !(0..c.len()).any(|j| strict_subset(&c[i], &c[j])))
            .collect()
    }

    pub fn minimal_centralizers(&self) -> Vec<usize> {
        let c = &self.centralizers;
        (0..c.len())
            .filter(|&i| !(0..c.len()).any(|j| strict_subset(&c[j], &c[i])))
            .collect()
    }

    pub fn maximal_centers(&self) -> Vec<usize> {
        let z = &self.centers;
        (0..z.len())
            .filter(|&i| !(0..z.len()).any(|j| strict_subset(&z[i], &z[j])))
            .collect()
    }

    pub fn is_f_group(&self) -> bool {
        let c = &self.centralizers;
        (0..c.len()).all(|i| (0..c.len()).all(|j| !strict_subset(&c[i], &c[j])))
    }

    pub fn is_ca_group(&self, g: &Group) -> bool {
        self.centralizers.iter().all(|c| is_abelian_set(g, c))
    }
}

pub fn covers_group(g: &Group, family: &[&Set]) -> bool {
    (0..g.order()).all(|x| family.iter().any(|s| s.contains(&x)))
}

pub fn is_irredundant_cover(g: &Group, family: &[&Set]) -> bool {
    covers_group(g, family)
        && (0..family.len()).all(|skip| {
            let rest: Vec<&Set> = family
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, s)| *s)
                .collect();
            !covers_group(g, &rest)
        })
}

pub fn prime_power(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}

/// Sorted member lists of a library set, for comparison with the oracle.
pub fn sorted(s: &centracover::SubgroupSet) -> Set {
    s.to_vec()
}

/// Compares the library's atlas and cover verdicts with the naive scan.
/// Families are enumerated exhaustively when there are at most
/// `exhaustive_limit` entries and otherwise drawn from `masks`.
pub fn compare_with_library(
    g: &Group,
    exhaustive_limit: usize,
    masks: &[u64],
) -> Result<(), String> {
    use centracover::covers::{self, CoverFamily};
    use centracover::CentralizerAtlas;

    let naive = NaiveAtlas::new(g);
    let atlas = CentralizerAtlas::build(g.clone()).map_err(|e| e.to_string())?;
    let name = g.name();
    if sorted(atlas.center_subgroup()) != naive.center {
        return Err(format!("{name}: group center differs"));
    }
    if atlas.len() != naive.len() {
        return Err(format!(
            "{name}: {} entries vs {} naive",
            atlas.len(),
            naive.len()
        ));
    }
    for (i, e) in atlas.entries().iter().enumerate() {
        if e.representative != naive.reps[i]
            || sorted(&e.centralizer) != naive.centralizers[i]
            || sorted(&e.center) != naive.centers[i]
        {
            return Err(format!("{name}: entry {i} differs"));
        }
    }
    let k = naive.len();
    let families: Vec<Vec<usize>> = if k <= exhaustive_limit {
        (1u64..(1 << k))
            .map(|m| (0..k).filter(|i| m >> i & 1 == 1).collect())
            .collect()
    } else {
        masks
            .iter()
            .map(|m| {
                (0..k.min(64))
                    .filter(|i| m >> i & 1 == 1)
                    .collect::<Vec<_>>()
            })
            .filter(|ids| !ids.is_empty())
            .collect()
    };
    for ids in &families {
        for centers in [false, true] {
            let sets: Vec<&Set> = ids
                .iter()
                .map(|&i| {
                    if centers {
                        &naive.centers[i]
                    } else {
                        &naive.centralizers[i]
                    }
                })
                .collect();
            let fam = if centers {
                CoverFamily::centers(ids.iter().copied())
            } else {
                CoverFamily::centralizers(ids.iter().copied())
            };
            let cover = covers::is_cover(&atlas, &fam)
                .map_err(|e| e.to_string())?
                .is_cover;
            if cover != covers_group(g, &sets) {
                return Err(format!("{name}: cover verdict differs on {ids:?}"));
            }
            if cover {
                let irr = covers::is_irredundant_cover(&atlas, &fam)
                    .map_err(|e| e.to_string())?
                    .is_irredundant;
                if irr != Some(is_irredundant_cover(g, &sets)) {
                    return Err(format!("{name}: irredundance differs on {ids:?}"));
                }
            }
        }
    }
    Ok(())
}
