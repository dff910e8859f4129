//! F-groups (no strict containment among noncentral-element centralizers)
//! and CA-groups (all such centralizers abelian).

use serde::Serialize;
use thiserror::Error;

use crate::atlas::{CentralizerAtlas, EntryId};
use crate::covers::{self, CoverFamily};
use crate::group::Elem;

/// A theorem's hypothesis does not hold for this group. Not a failure.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Inapplicable {
    #[error("not a p-group")]
    NotPGroup,
    #[error("not an F-group")]
    NotFGroup,
    #[error("is a CA-group")]
    CaGroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub is_f_group: bool,
    pub f_criteria: [bool; 4],
    pub is_ca_group: bool,
    pub partition_holds: bool,
    pub p: Option<usize>,
    pub n_centralizers: usize,
    pub n_mod_p: Option<usize>,
    pub exponent_witness: Option<EntryId>,
    /// `None` when the group is not an F-group.
    pub ca_irredundance_consistent: Option<bool>,
}

/// The four equivalent descriptions of an F-group, each evaluated on its
/// own:
/// 1. no strict containment among distinct centralizers;
/// 2. b ∈ Z(a) implies Z(a) = Z(b);
/// 3. Z(a) = Z(b) or Z(a) ∩ Z(b) = Z(G);
/// 4. Z(b) ⊆ Z(a) implies Z(a) = Z(b).
pub fn f_group_criteria(atlas: &CentralizerAtlas) -> [bool; 4] {
    let k = atlas.len();
    let e = |i: EntryId| atlas.entry(i);
    let zg = atlas.center_subgroup();
    let pairs = || (0..k).flat_map(move |i| (0..k).filter(move |&j| j != i).map(move |j| (i, j)));

    let no_containment = pairs().all(|(i, j)| !e(i).centralizer.is_subset(&e(j).centralizer));
    let member_same_center = (0..k).all(|i| {
        e(i).center
            .iter()
            .filter(|&b| !zg.contains(b))
            .all(|b| atlas.entry(atlas.entry_of(b).expect("noncentral")).center == e(i).center)
    });
    let meet_central = pairs().all(|(i, j)| e(i).center.intersection(&e(j).center) == *zg);
    let no_center_containment = pairs().all(|(i, j)| !e(j).center.is_subset(&e(i).center));
    [
        no_containment,
        member_same_center,
        meet_central,
        no_center_containment,
    ]
}

pub fn is_f_group(atlas: &CentralizerAtlas) -> bool {
    f_group_criteria(atlas)[0]
}

pub fn is_ca_group(atlas: &CentralizerAtlas) -> bool {
    atlas.entries().iter().all(|e| e.flags.centralizer_abelian)
}

/// The sets Z \ Z(G), Z ∈ 𝒵(G), are pairwise disjoint and cover G \ Z(G).
pub fn partition_check(atlas: &CentralizerAtlas) -> bool {
    let g = atlas.group();
    let zg = atlas.center_subgroup().members();
    let mut seen = g.empty_set();
    for e in atlas.entries() {
        let mut part = e.center.members().clone();
        part.difference_with(zg);
        if !seen.is_disjoint(&part) {
            return false;
        }
        seen.union_with(&part);
    }
    seen.union_with(zg);
    seen.is_full()
}

/// Every centralizer is both maximal and minimal in 𝒞(G), and likewise
/// every center in 𝒵(G); returns the two booleans.
pub fn max_min_flags(atlas: &CentralizerAtlas) -> (bool, bool) {
    let k = atlas.len();
    let cent = atlas
        .entries()
        .iter()
        .all(|e| e.flags.centralizer_maximal && e.flags.centralizer_minimal);
    let max_c = atlas.maximal_center_ids_direct();
    let min_c = atlas.minimal_center_ids_direct();
    let cent_z = max_c.len() == k && min_c.len() == k;
    (cent, cent_z)
}

/// Entry by entry: C maximal in 𝒞(G) ⇔ Z minimal in 𝒵(G) ⇔ Z* = Z \ Z(G).
/// Returns the first entry where the three disagree.
pub fn maximality_equivalence(atlas: &CentralizerAtlas) -> Result<(), EntryId> {
    let zg = atlas.center_subgroup().members();
    let min_c = atlas.minimal_center_ids_direct();
    for e in atlas.entries() {
        let mut rest = e.center.members().clone();
        rest.difference_with(zg);
        let a = e.flags.centralizer_maximal;
        let b = min_c.contains(&e.id);
        let c = rest == e.zstar;
        if a != b || b != c {
            return Err(e.id);
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModPCount {
    pub p: usize,
    pub n: usize,
    pub residue: usize,
    /// |Z*| = |Z(G)| (|Z : Z(G)| - 1) for every class.
    pub class_sizes_hold: bool,
    /// Σ |Z*| + |Z(G)| = |G|.
    pub partition_identity_holds: bool,
}

/// In a nonabelian p-group that is an F-group, counts 𝒞(G) and its residue
/// mod p.
pub fn mod_p_count(atlas: &CentralizerAtlas) -> Result<ModPCount, Inapplicable> {
    let g = atlas.group();
    let p = g.p_group_prime().ok_or(Inapplicable::NotPGroup)?;
    if !is_f_group(atlas) {
        return Err(Inapplicable::NotFGroup);
    }
    let zg = atlas.center_subgroup().order();
    let class_sizes_hold = atlas
        .entries()
        .iter()
        .all(|e| e.zstar.count_ones(..) == zg * (e.center.order() / zg - 1));
    let total: usize = atlas.entries().iter().map(|e| e.zstar.count_ones(..)).sum();
    let n = atlas.len();
    Ok(ModPCount {
        p,
        n,
        residue: n % p,
        class_sizes_hold,
        partition_identity_holds: total + zg == g.order(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExponentWitness {
    /// Nonabelian centralizer whose center has the largest exponent.
    pub by_largest_center_exponent: Option<EntryId>,
    /// First nonabelian centralizer found by a plain scan.
    pub by_scan: Option<EntryId>,
}

impl ExponentWitness {
    pub fn witness(&self) -> Option<EntryId> {
        self.by_largest_center_exponent.or(self.by_scan)
    }

    pub fn paths_agree(&self) -> bool {
        self.by_largest_center_exponent.is_some() == self.by_scan.is_some()
    }
}

/// A nonabelian centralizer C with exp(C) = exp(Z(C)), for p-groups that
/// are F-groups but not CA-groups.
pub fn exponent_witness(atlas: &CentralizerAtlas) -> Result<ExponentWitness, Inapplicable> {
    let g = atlas.group();
    g.p_group_prime().ok_or(Inapplicable::NotPGroup)?;
    if !is_f_group(atlas) {
        return Err(Inapplicable::NotFGroup);
    }
    if is_ca_group(atlas) {
        return Err(Inapplicable::CaGroup);
    }
    let nonabelian: Vec<EntryId> = atlas
        .entries()
        .iter()
        .filter(|e| !e.flags.centralizer_abelian)
        .map(|e| e.id)
        .collect();
    let ok = |id: EntryId| {
        let e = atlas.entry(id);
        g.exponent(&e.centralizer) == g.exponent(&e.center)
    };
    let best = nonabelian
        .iter()
        .copied()
        .max_by_key(|&id| (g.exponent(&atlas.entry(id).center), std::cmp::Reverse(id)));
    Ok(ExponentWitness {
        by_largest_center_exponent: best.filter(|&id| ok(id)),
        by_scan: nonabelian.into_iter().find(|&id| ok(id)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CaIrredundance {
    pub is_ca: bool,
    pub irredundant: bool,
    /// A centralizer whose removal still leaves a cover.
    pub removable: Option<EntryId>,
    pub consistent: bool,
}

/// For F-groups: 𝒞(G) is an irredundant cover iff the group is CA.
pub fn ca_irredundance_check(atlas: &CentralizerAtlas) -> Result<CaIrredundance, Inapplicable> {
    if !is_f_group(atlas) {
        return Err(Inapplicable::NotFGroup);
    }
    let verdict = covers::is_irredundant_cover(atlas, &CoverFamily::centralizers(0..atlas.len()))
        .expect("𝒞(G) always covers");
    let irredundant = verdict.is_irredundant == Some(true);
    let is_ca = is_ca_group(atlas);
    Ok(CaIrredundance {
        is_ca,
        irredundant,
        removable: verdict.redundant_member,
        consistent: irredundant == is_ca,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryChecks {
    /// b ∉ Z(a) implies Z(a) ∩ Z(b) = Z(G).
    pub disjoint_centers: bool,
    /// C_G(a) ∩ Z(b) = Z(G) or Z(b) ⊆ C_G(a).
    pub centralizer_center_dichotomy: bool,
    /// C_G(a) nonabelian ⇔ some b ∉ C_G(a) has Z(G) < C_G(a) ∩ C_G(b).
    pub nonabelian_partner: bool,
    /// For each nonabelian centralizer, a partner element b.
    pub partners: Vec<(EntryId, Elem)>,
}

impl CorollaryChecks {
    pub fn all_hold(&self) -> bool {
        self.disjoint_centers && self.centralizer_center_dichotomy && self.nonabelian_partner
    }
}

pub fn f_group_corollaries(atlas: &CentralizerAtlas) -> Result<CorollaryChecks, Inapplicable> {
    if !is_f_group(atlas) {
        return Err(Inapplicable::NotFGroup);
    }
    let g = atlas.group();
    let zg = atlas.center_subgroup();
    let noncentral: Vec<Elem> = g.elements().filter(|&x| !zg.contains(x)).collect();

    let disjoint_centers = atlas.entries().iter().all(|a| {
        noncentral
            .iter()
            .filter(|&&b| !a.center.contains(b))
            .all(|&b| {
                let zb = &atlas.entry(atlas.entry_of(b).expect("noncentral")).center;
                a.center.intersection(zb) == *zg
            })
    });

    let centralizer_center_dichotomy = atlas.entries().iter().all(|a| {
        atlas.entries().iter().all(|b| {
            a.centralizer.intersection(&b.center) == *zg || b.center.is_subset(&a.centralizer)
        })
    });

    let mut partners = Vec::new();
    let mut nonabelian_partner = true;
    for a in atlas.entries() {
        let partner = noncentral.iter().copied().find(|&b| {
            if a.centralizer.contains(b) {
                return false;
            }
            let cb = &atlas
                .entry(atlas.entry_of(b).expect("noncentral"))
                .centralizer;
            a.centralizer.intersection(cb).order() > zg.order()
        });
        let nonabelian = !a.flags.centralizer_abelian;
        if nonabelian != partner.is_some() {
            nonabelian_partner = false;
        }
        if let Some(b) = partner {
            partners.push((a.id, b));
        }
    }

    Ok(CorollaryChecks {
        disjoint_centers,
        centralizer_center_dichotomy,
        nonabelian_partner,
        partners,
    })
}

pub fn classify(atlas: &CentralizerAtlas) -> ClassificationReport {
    let f_criteria = f_group_criteria(atlas);
    let is_f = f_criteria[0];
    let mod_p = mod_p_count(atlas).ok();
    ClassificationReport {
        is_f_group: is_f,
        f_criteria,
        is_ca_group: is_ca_group(atlas),
        partition_holds: partition_check(atlas),
        p: atlas.group().p_group_prime(),
        n_centralizers: atlas.len(),
        n_mod_p: mod_p.map(|m| m.residue),
        exponent_witness: exponent_witness(atlas).ok().and_then(|w| w.witness()),
        ca_irredundance_consistent: ca_irredundance_check(atlas).ok().map(|c| c.consistent),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn atlas(name: &str) -> CentralizerAtlas {
        CentralizerAtlas::build(catalog::build(name).unwrap()).unwrap()
    }

    #[test]
    fn criteria_on_small_groups() {
        assert_eq!(f_group_criteria(&atlas("q8")), [true; 4]);
        assert_eq!(f_group_criteria(&atlas("s4")), [false; 4]);
        assert_eq!(f_group_criteria(&atlas("d8xd8")), [false; 4]);
        assert!(partition_check(&atlas("q8")));
        assert!(!partition_check(&atlas("s4")));
    }

    #[test]
    fn ca_groups() {
        assert!(is_ca_group(&atlas("s3")));
        assert!(is_ca_group(&atlas("heis27")));
        assert!(!is_ca_group(&atlas("es32_plus")));
    }

    #[test]
    fn mod_p_counts() {
        let m = mod_p_count(&atlas("q8")).unwrap();
        assert_eq!((m.p, m.n, m.residue), (2, 3, 1));
        assert!(m.class_sizes_hold && m.partition_identity_holds);
        let m = mod_p_count(&atlas("heis27")).unwrap();
        assert_eq!((m.p, m.n), (3, 4));
        let m = mod_p_count(&atlas("es32_plus")).unwrap();
        assert_eq!((m.p, m.n), (2, 15));
        assert_eq!(mod_p_count(&atlas("s4")), Err(Inapplicable::NotPGroup));
        assert_eq!(mod_p_count(&atlas("d8xd8")), Err(Inapplicable::NotFGroup));
    }

    #[test]
    fn exponent_witnesses() {
        for name in ["es32_plus", "es32_minus"] {
            let a = atlas(name);
            let w = exponent_witness(&a).unwrap();
            assert!(w.paths_agree());
            let id = w.witness().unwrap();
            let e = a.entry(id);
            assert!(!e.flags.centralizer_abelian);
            assert_eq!(
                a.group().exponent(&e.centralizer),
                a.group().exponent(&e.center)
            );
        }
        assert_eq!(exponent_witness(&atlas("q8")), Err(Inapplicable::CaGroup));
    }

    #[test]
    fn ca_irredundance() {
        for name in ["s3", "heis27", "frob21"] {
            let c = ca_irredundance_check(&atlas(name)).unwrap();
            assert!(c.is_ca && c.irredundant && c.consistent, "{name}");
        }
        let c = ca_irredundance_check(&atlas("es32_plus")).unwrap();
        assert!(!c.is_ca && !c.irredundant && c.consistent);
        assert!(c.removable.is_some());
        assert_eq!(
            ca_irredundance_check(&atlas("s4")),
            Err(Inapplicable::NotFGroup)
        );
    }

    #[test]
    fn corollaries() {
        let c = f_group_corollaries(&atlas("q8")).unwrap();
        assert!(c.all_hold());
        assert!(c.partners.is_empty());
        let a = atlas("es32_plus");
        let c = f_group_corollaries(&a).unwrap();
        assert!(c.all_hold());
        let nonabelian = a
            .entries()
            .iter()
            .filter(|e| !e.flags.centralizer_abelian)
            .count();
        assert_eq!(c.partners.len(), nonabelian);
    }
}
