//! Covers of a group by families of centralizers or element centers, and
//! irredundance.
//!
//! Irredundance is decided by single-member removal: dropping members only
//! shrinks the union, so a cover with no removable member has no proper
//! subcover at all.

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::atlas::{CentralizerAtlas, EntryId};
use crate::group::Elem;

/// Seed for every sampled subset sweep.
pub const SUBSET_SEED: u64 = 0xC0DE_C0DE;

/// Families over at most this many entries are scanned exhaustively.
pub const DEFAULT_SUBSET_CAP: usize = 20;

/// Random subsets drawn when a universe is too large to scan.
pub const DEFAULT_SAMPLES: usize = 1000;

/// Caps and seed for subset sweeps: universes of at most `subset_cap`
/// entries are scanned exhaustively, larger ones by `samples` random
/// subsets drawn from `seed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub subset_cap: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            subset_cap: DEFAULT_SUBSET_CAP,
            samples: DEFAULT_SAMPLES,
            seed: SUBSET_SEED,
        }
    }
}

impl SweepConfig {
    pub fn with_cap(subset_cap: usize) -> Self {
        SweepConfig {
            subset_cap,
            ..SweepConfig::default()
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("family is empty")]
    EmptyFamily,
    #[error("family is not a cover; element {witness} is uncovered")]
    NotACover { witness: Elem },
    #[error("entry id {0} out of range")]
    BadEntry(EntryId),
    #[error("duplicate entry id {0} in family")]
    DuplicateEntry(EntryId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Centralizers,
    Centers,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverFamily {
    pub member_entry_ids: Vec<EntryId>,
    pub side: Side,
}

impl CoverFamily {
    pub fn centralizers(ids: impl IntoIterator<Item = EntryId>) -> Self {
        CoverFamily {
            member_entry_ids: ids.into_iter().collect(),
            side: Side::Centralizers,
        }
    }

    pub fn centers(ids: impl IntoIterator<Item = EntryId>) -> Self {
        CoverFamily {
            member_entry_ids: ids.into_iter().collect(),
            side: Side::Centers,
        }
    }

    pub fn len(&self) -> usize {
        self.member_entry_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.member_entry_ids.is_empty()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CoverVerdict {
    pub is_cover: bool,
    pub uncovered_witness: Option<Elem>,
    pub is_irredundant: Option<bool>,
    pub redundant_member: Option<EntryId>,
}

fn member_set(atlas: &CentralizerAtlas, side: Side, id: EntryId) -> &FixedBitSet {
    let e = atlas.entry(id);
    match side {
        Side::Centralizers => e.centralizer.members(),
        Side::Centers => e.center.members(),
    }
}

fn validate(atlas: &CentralizerAtlas, family: &CoverFamily) -> Result<(), CoverError> {
    if family.is_empty() {
        return Err(CoverError::EmptyFamily);
    }
    let mut seen = FixedBitSet::with_capacity(atlas.len());
    for &id in &family.member_entry_ids {
        if id >= atlas.len() {
            return Err(CoverError::BadEntry(id));
        }
        if seen.put(id) {
            return Err(CoverError::DuplicateEntry(id));
        }
    }
    Ok(())
}

fn first_uncovered(atlas: &CentralizerAtlas, side: Side, ids: &[EntryId]) -> Option<Elem> {
    let mut union = atlas.group().empty_set();
    for &id in ids {
        union.union_with(member_set(atlas, side, id));
    }
    union.zeroes().next()
}

/// Union test over the family's subgroups.
pub fn is_cover(
    atlas: &CentralizerAtlas,
    family: &CoverFamily,
) -> Result<CoverVerdict, CoverError> {
    validate(atlas, family)?;
    let witness = first_uncovered(atlas, family.side, &family.member_entry_ids);
    Ok(CoverVerdict {
        is_cover: witness.is_none(),
        uncovered_witness: witness,
        ..CoverVerdict::default()
    })
}

/// Irredundance by single-member removal.
pub fn is_irredundant_cover(
    atlas: &CentralizerAtlas,
    family: &CoverFamily,
) -> Result<CoverVerdict, CoverError> {
    let mut verdict = is_cover(atlas, family)?;
    if let Some(witness) = verdict.uncovered_witness {
        return Err(CoverError::NotACover { witness });
    }
    let ids = &family.member_entry_ids;
    verdict.redundant_member = (0..ids.len())
        .find(|&skip| {
            let rest: Vec<EntryId> = ids
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &id)| id)
                .collect();
            !rest.is_empty() && first_uncovered(atlas, family.side, &rest).is_none()
        })
        .map(|i| ids[i]);
    verdict.is_irredundant = Some(verdict.redundant_member.is_none());
    Ok(verdict)
}

pub fn maximal_centralizer_cover(atlas: &CentralizerAtlas) -> CoverFamily {
    CoverFamily::centralizers(atlas.maximal_centralizer_ids().iter().copied())
}

pub fn minimal_centralizer_cover(atlas: &CentralizerAtlas) -> CoverFamily {
    CoverFamily::centralizers(atlas.minimal_centralizer_ids().iter().copied())
}

pub fn maximal_center_cover(atlas: &CentralizerAtlas) -> CoverFamily {
    CoverFamily::centers(atlas.maximal_center_ids())
}

/// True iff every maximal member of 𝒵(G) lies inside some member of the
/// centralizer family.
pub fn cover_criterion(atlas: &CentralizerAtlas, family: &[EntryId]) -> bool {
    atlas.maximal_center_ids().iter().all(|&m| {
        family
            .iter()
            .any(|&c| atlas.entry(m).center.is_subset(&atlas.entry(c).centralizer))
    })
}

/// Literal cover test for families encoded as bitmasks over at most 64
/// entry ids.
///
/// Noncentral elements are grouped by the mask of members holding them; a
/// family covers iff it meets every such mask. Central elements lie in
/// every member.
#[derive(Debug, Clone)]
pub struct MaskIndex {
    holders: Vec<u64>,
    witnesses: Vec<Elem>,
    universe: usize,
}

impl MaskIndex {
    pub fn new(atlas: &CentralizerAtlas, side: Side) -> Option<MaskIndex> {
        let k = atlas.len();
        if k > 64 {
            return None;
        }
        let mut holders: Vec<u64> = Vec::new();
        let mut witnesses = Vec::new();
        for x in atlas.group().elements() {
            if atlas.center_subgroup().contains(x) {
                continue;
            }
            let mask = (0..k)
                .filter(|&id| member_set(atlas, side, id).contains(x))
                .fold(0u64, |m, id| m | (1 << id));
            if !holders.contains(&mask) {
                holders.push(mask);
                witnesses.push(x);
            }
        }
        Some(MaskIndex {
            holders,
            witnesses,
            universe: k,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn full(&self) -> u64 {
        if self.universe == 64 {
            u64::MAX
        } else {
            (1u64 << self.universe) - 1
        }
    }

    /// First uncovered noncentral element, if any; the empty family covers
    /// nothing.
    pub fn uncovered(&self, family: u64) -> Option<Elem> {
        if family == 0 {
            return self.witnesses.first().copied().or(Some(0));
        }
        self.holders
            .iter()
            .position(|&h| h & family == 0)
            .map(|i| self.witnesses[i])
    }

    pub fn covers(&self, family: u64) -> bool {
        family != 0 && self.holders.iter().all(|&h| h & family != 0)
    }

    /// Lowest member whose removal leaves a cover, for a covering family.
    pub fn removable(&self, family: u64) -> Option<EntryId> {
        let mut rest = family;
        while rest != 0 {
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.covers(family & !(1u64 << bit)) {
                return Some(bit);
            }
        }
        None
    }

    pub fn is_irredundant(&self, family: u64) -> bool {
        self.covers(family) && self.removable(family).is_none()
    }
}

pub fn ids_to_mask(ids: &[EntryId]) -> u64 {
    ids.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

pub fn mask_to_ids(mask: u64) -> Vec<EntryId> {
    (0..64).filter(|i| mask & (1u64 << i) != 0).collect()
}

/// Random family over `0..k`: each subset draws its own inclusion rate so
/// both sparse and dense families show up.
pub fn random_family(rng: &mut ChaCha8Rng, k: usize) -> Vec<EntryId> {
    let rate: f64 = rng.gen();
    (0..k).filter(|_| rng.gen::<f64>() < rate).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum ScanMode {
    Exhaustive { subsets: u64 },
    Sampled { subsets: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessOutcome {
    pub holds: bool,
    pub mode: ScanMode,
    /// Set when the exhaustive scan was skipped for exceeding the cap.
    pub cap_exceeded: bool,
    pub maximal_centers: Vec<EntryId>,
    /// A subset of 𝒵(G) breaking the law, if one was found.
    pub counterexample: Option<Vec<EntryId>>,
}

/// Over subsets of 𝒵(G): a subset covers iff it contains every maximal
/// center, and the maximal centers form the only irredundant cover.
pub fn center_cover_uniqueness(
    atlas: &CentralizerAtlas,
    config: &SweepConfig,
) -> UniquenessOutcome {
    let maximal = atlas.maximal_center_ids();
    let k = atlas.len();
    let max_family = maximal_center_cover(atlas);
    let mut counterexample = None;
    let irredundant = is_irredundant_cover(atlas, &max_family)
        .map(|v| v.is_irredundant == Some(true))
        .unwrap_or(false);
    if !irredundant {
        counterexample = Some(maximal.clone());
    }
    let check = |ids: &[EntryId], covers: bool, irr: Option<bool>| -> bool {
        let contains_all = maximal.iter().all(|m| ids.contains(m));
        let unique_ok = match irr {
            Some(true) => ids == maximal.as_slice(),
            _ => true,
        };
        covers == contains_all && unique_ok
    };

    if k <= config.subset_cap && k <= 64 {
        let index = MaskIndex::new(atlas, Side::Centers).expect("k <= 64");
        let subsets = 1u64 << k;
        for fam in 1..subsets {
            let covers = index.covers(fam);
            let irr = covers.then(|| index.removable(fam).is_none());
            let ids = mask_to_ids(fam);
            if !check(&ids, covers, irr) {
                counterexample.get_or_insert(ids);
                break;
            }
        }
        UniquenessOutcome {
            holds: counterexample.is_none(),
            mode: ScanMode::Exhaustive { subsets },
            cap_exceeded: false,
            maximal_centers: maximal,
            counterexample,
        }
    } else {
        // criterion mode: each maximal center is needed by every cover
        for &m in &maximal {
            let others: Vec<EntryId> = (0..k).filter(|&i| i != m).collect();
            if !others.is_empty() && first_uncovered(atlas, Side::Centers, &others).is_none() {
                counterexample.get_or_insert(others);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let mut drawn = 0u64;
        while drawn < config.samples as u64 && counterexample.is_none() {
            let ids = random_family(&mut rng, k);
            if ids.is_empty() {
                continue;
            }
            drawn += 1;
            let covers = first_uncovered(atlas, Side::Centers, &ids).is_none();
            let irr = covers.then(|| {
                is_irredundant_cover(atlas, &CoverFamily::centers(ids.clone()))
                    .map(|v| v.is_irredundant == Some(true))
                    .unwrap_or(false)
            });
            if !check(&ids, covers, irr) {
                counterexample = Some(ids);
            }
        }
        UniquenessOutcome {
            holds: counterexample.is_none(),
            mode: ScanMode::Sampled {
                subsets: drawn,
                seed: config.seed,
            },
            cap_exceeded: true,
            maximal_centers: maximal,
            counterexample,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionOutcome {
    pub holds: bool,
    pub mode: ScanMode,
    pub counterexample: Option<Vec<EntryId>>,
}

/// Cross-checks `cover_criterion` against the literal union test over
/// families of centralizers.
pub fn criterion_sweep(atlas: &CentralizerAtlas, config: &SweepConfig) -> CriterionOutcome {
    containment_sweep(atlas, &atlas.maximal_center_ids(), config)
}

/// Same sweep with every member of 𝒵(G) required to lie in some family
/// member instead of only the maximal ones.
pub fn center_containment_sweep(
    atlas: &CentralizerAtlas,
    config: &SweepConfig,
) -> CriterionOutcome {
    let all: Vec<EntryId> = (0..atlas.len()).collect();
    containment_sweep(atlas, &all, config)
}

fn containment_sweep(
    atlas: &CentralizerAtlas,
    centers: &[EntryId],
    config: &SweepConfig,
) -> CriterionOutcome {
    let k = atlas.len();
    let contained =
        |m: EntryId, c: EntryId| atlas.entry(m).center.is_subset(&atlas.entry(c).centralizer);
    let exhaustive = k <= config.subset_cap && k <= 64;
    let mut counterexample = None;
    let mode;
    if exhaustive {
        let index = MaskIndex::new(atlas, Side::Centralizers).expect("k <= 64");
        // for each required center, the entries whose centralizer holds it
        let holders: Vec<u64> = centers
            .iter()
            .map(|&m| {
                (0..k)
                    .filter(|&c| contained(m, c))
                    .fold(0u64, |acc, c| acc | (1 << c))
            })
            .collect();
        let subsets = 1u64 << k;
        for fam in 1..subsets {
            let criterion = holders.iter().all(|&h| h & fam != 0);
            if criterion != index.covers(fam) {
                counterexample = Some(mask_to_ids(fam));
                break;
            }
        }
        mode = ScanMode::Exhaustive { subsets };
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let mut drawn = 0u64;
        while drawn < config.samples as u64 {
            let ids = random_family(&mut rng, k);
            if ids.is_empty() {
                continue;
            }
            drawn += 1;
            let covers = first_uncovered(atlas, Side::Centralizers, &ids).is_none();
            let criterion = centers
                .iter()
                .all(|&m| ids.iter().any(|&c| contained(m, c)));
            if covers != criterion {
                counterexample = Some(ids);
                break;
            }
        }
        mode = ScanMode::Sampled {
            subsets: drawn,
            seed: config.seed,
        };
    }
    CriterionOutcome {
        holds: counterexample.is_none(),
        mode,
        counterexample,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeBound {
    /// Number of maximal centers.
    pub bound: usize,
    pub max_observed: usize,
    pub irredundant_found: u64,
    /// False when the universe exceeded the cap and only sampled
    /// irredundant covers were examined.
    pub complete: bool,
    pub violation: Option<Vec<EntryId>>,
}

/// Every irredundant centralizer cover has at most as many members as
/// there are maximal centers.
pub fn irredundant_size_bound(atlas: &CentralizerAtlas, config: &SweepConfig) -> SizeBound {
    let k = atlas.len();
    let bound = atlas.maximal_center_ids().len();
    let mut max_observed = 0;
    let mut found = 0u64;
    let mut violation = None;
    let complete = k <= config.subset_cap && k <= 64;
    if complete {
        let index = MaskIndex::new(atlas, Side::Centralizers).expect("k <= 64");
        for fam in 1..(1u64 << k) {
            if index.is_irredundant(fam) {
                found += 1;
                let size = fam.count_ones() as usize;
                max_observed = max_observed.max(size);
                if size > bound && violation.is_none() {
                    violation = Some(mask_to_ids(fam));
                }
            }
        }
    } else {
        // random covers, pruned to irredundant ones in random removal order
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let mut attempts = 0;
        while attempts < config.samples {
            attempts += 1;
            let mut ids = random_family(&mut rng, k);
            if ids.is_empty() || first_uncovered(atlas, Side::Centralizers, &ids).is_some() {
                continue;
            }
            let mut changed = true;
            while changed {
                changed = false;
                let start = rng.gen_range(0..ids.len());
                for off in 0..ids.len() {
                    let pos = (start + off) % ids.len();
                    let mut rest = ids.clone();
                    rest.remove(pos);
                    if !rest.is_empty()
                        && first_uncovered(atlas, Side::Centralizers, &rest).is_none()
                    {
                        ids = rest;
                        changed = true;
                        break;
                    }
                }
            }
            found += 1;
            max_observed = max_observed.max(ids.len());
            if ids.len() > bound && violation.is_none() {
                violation = Some(ids);
            }
        }
    }
    SizeBound {
        bound,
        max_observed,
        irredundant_found: found,
        complete,
        violation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn atlas(name: &str) -> CentralizerAtlas {
        CentralizerAtlas::build(catalog::build(name).unwrap()).unwrap()
    }

    fn all(a: &CentralizerAtlas) -> CoverFamily {
        CoverFamily::centralizers(0..a.len())
    }

    #[test]
    fn full_family_covers() {
        for name in ["s3", "q8", "s4", "a4"] {
            let a = atlas(name);
            assert!(is_cover(&a, &all(&a)).unwrap().is_cover, "{name}");
            assert!(
                is_cover(&a, &CoverFamily::centers(0..a.len()))
                    .unwrap()
                    .is_cover
            );
        }
    }

    #[test]
    fn empty_and_bad_families() {
        let a = atlas("s3");
        assert_eq!(
            is_cover(&a, &CoverFamily::centralizers([])),
            Err(CoverError::EmptyFamily)
        );
        assert_eq!(
            is_cover(&a, &CoverFamily::centralizers([0, 0])),
            Err(CoverError::DuplicateEntry(0))
        );
        assert_eq!(
            is_cover(&a, &CoverFamily::centralizers([99])),
            Err(CoverError::BadEntry(99))
        );
    }

    #[test]
    fn dihedral_centralizers_miss_three_cycles() {
        let a = atlas("s4");
        let d8: Vec<EntryId> = a
            .maximal_centralizer_ids()
            .iter()
            .copied()
            .filter(|&i| a.entry(i).centralizer.order() == 8)
            .collect();
        assert_eq!(d8.len(), 3);
        let v = is_cover(&a, &CoverFamily::centralizers(d8.clone())).unwrap();
        assert!(!v.is_cover);
        let w = v.uncovered_witness.unwrap();
        assert_eq!(a.group().element_order(w).unwrap(), 3);
        assert!(!cover_criterion(&a, &d8));
        assert!(matches!(
            is_irredundant_cover(&a, &CoverFamily::centralizers(d8)),
            Err(CoverError::NotACover { .. })
        ));
    }

    #[test]
    fn s4_irredundance() {
        let a = atlas("s4");
        let max = maximal_centralizer_cover(&a);
        assert_eq!(max.len(), 7);
        assert_eq!(
            is_irredundant_cover(&a, &max).unwrap().is_irredundant,
            Some(true)
        );
        let min = minimal_centralizer_cover(&a);
        assert_eq!(min.len(), 10);
        assert_eq!(
            is_irredundant_cover(&a, &min).unwrap().is_irredundant,
            Some(true)
        );
        let v = is_irredundant_cover(&a, &all(&a)).unwrap();
        assert_eq!(v.is_irredundant, Some(false));
        assert!(v.redundant_member.is_some());
        assert!(cover_criterion(&a, &max.member_entry_ids));
    }

    #[test]
    fn uniqueness_small_groups() {
        let a = atlas("q8");
        let u = center_cover_uniqueness(&a, &SweepConfig::default());
        assert!(u.holds);
        assert_eq!(u.maximal_centers, vec![0, 1, 2]);
        assert_eq!(u.mode, ScanMode::Exhaustive { subsets: 8 });

        let a = atlas("s3");
        let u = center_cover_uniqueness(&a, &SweepConfig::default());
        assert!(u.holds);
        assert_eq!(u.maximal_centers.len(), 4);

        let a = atlas("s4");
        let u = center_cover_uniqueness(&a, &SweepConfig::with_cap(5));
        assert!(u.holds);
        assert!(u.cap_exceeded);
        assert_eq!(u.maximal_centers.len(), 10);
    }

    #[test]
    fn size_bounds() {
        let a = atlas("s4");
        let b = irredundant_size_bound(&a, &SweepConfig::default());
        assert_eq!(b.bound, 10);
        assert!(b.complete);
        assert!(b.max_observed <= 10);
        assert!(b.violation.is_none());

        let a = atlas("q8");
        let b = irredundant_size_bound(&a, &SweepConfig::default());
        assert_eq!((b.bound, b.max_observed, b.irredundant_found), (3, 3, 1));
    }

    #[test]
    fn criterion_matches_union_on_s4() {
        let a = atlas("s4");
        let c = criterion_sweep(&a, &SweepConfig::with_cap(15));
        assert!(c.holds);
        assert_eq!(c.mode, ScanMode::Exhaustive { subsets: 1 << 13 });
    }

    #[test]
    fn mask_index_matches_bitset_union() {
        let a = atlas("s4");
        let index = MaskIndex::new(&a, Side::Centralizers).unwrap();
        for fam in 1..(1u64 << a.len()) {
            let ids = mask_to_ids(fam);
            assert_eq!(
                index.covers(fam),
                first_uncovered(&a, Side::Centralizers, &ids).is_none()
            );
        }
    }
}
