//! The families of noncentral-element centralizers and element centers,
//! the correspondence between them, and their containment order.

use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::group::{Elem, Group, SubgroupSet};

pub type EntryId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AtlasError {
    #[error("group {0} is abelian: it has no noncentral elements")]
    AbelianGroup(String),
    #[error("subgroup is not the center of any noncentral element")]
    NotACenter,
    #[error("element {0} is central")]
    CentralElement(Elem),
    #[error("no entry with id {0}")]
    UnknownEntry(EntryId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EntryFlags {
    pub centralizer_maximal: bool,
    pub centralizer_minimal: bool,
    pub centralizer_abelian: bool,
}

/// One distinct centralizer C_G(g), its center Z(g) and the class Z*(g) of
/// elements sharing it.
#[derive(Debug, Clone)]
pub struct AtlasEntry {
    pub id: EntryId,
    /// Least element index in `zstar`.
    pub representative: Elem,
    pub centralizer: SubgroupSet,
    pub center: SubgroupSet,
    pub zstar: FixedBitSet,
    pub flags: EntryFlags,
}

#[derive(Debug, Clone)]
pub struct CentralizerAtlas {
    group: Arc<Group>,
    entries: Vec<AtlasEntry>,
    elem_to_entry: Vec<Option<EntryId>>,
    center_subgroup: SubgroupSet,
    /// Covering pairs `(lower, upper)` with C_lower strictly inside C_upper.
    hasse: Vec<(EntryId, EntryId)>,
    /// `above[i]`: ids j with C_i strictly inside C_j, by reachability.
    above: Vec<FixedBitSet>,
    by_centralizer: HashMap<FixedBitSet, EntryId>,
    maximal_centralizer_ids: Vec<EntryId>,
    minimal_centralizer_ids: Vec<EntryId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IntersectionKind {
    CentralOnly,
    GeneratedByCenters,
}

#[derive(Debug, Clone)]
pub struct IntersectionDecomposition {
    pub kind: IntersectionKind,
    pub subgroup: SubgroupSet,
    /// The generated subgroup equals Z_i ∩ Z_j.
    pub generated_matches: bool,
    /// The literal setwise product of the Z(c) equals Z_i ∩ Z_j.
    pub product_matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Star2Decomposition {
    pub proper_superset_entry_ids: Vec<EntryId>,
    pub union_check: bool,
}

impl CentralizerAtlas {
    /// Builds the atlas of a nonabelian group.
    pub fn build(group: impl Into<Arc<Group>>) -> Result<CentralizerAtlas, AtlasError> {
        let group: Arc<Group> = group.into();
        let g = &*group;
        let center = g.center();
        if center.order() == g.order() {
            return Err(AtlasError::AbelianGroup(g.name().to_string()));
        }
        let n = g.order();
        let mut by_centralizer: HashMap<FixedBitSet, EntryId> = HashMap::new();
        let mut elem_to_entry = vec![None; n];
        let mut raw: Vec<(Elem, SubgroupSet, FixedBitSet)> = Vec::new();
        for x in g.elements() {
            if center.contains(x) {
                continue;
            }
            let c = g.centralizer_of_element(x);
            let id = *by_centralizer
                .entry(c.members().clone())
                .or_insert_with(|| {
                    raw.push((x, c.clone(), g.empty_set()));
                    raw.len() - 1
                });
            raw[id].2.insert(x);
            elem_to_entry[x] = Some(id);
        }

        let k = raw.len();
        let mut entries: Vec<AtlasEntry> = raw
            .into_iter()
            .enumerate()
            .map(|(id, (rep, centralizer, zstar))| {
                let center = g.centralizer_of_subset(centralizer.members());
                let abelian = center == centralizer;
                AtlasEntry {
                    id,
                    representative: rep,
                    centralizer,
                    center,
                    zstar,
                    flags: EntryFlags {
                        centralizer_maximal: false,
                        centralizer_minimal: false,
                        centralizer_abelian: abelian,
                    },
                }
            })
            .collect();

        // strict containment, direct comparison
        let mut strictly_above = vec![FixedBitSet::with_capacity(k); k];
        for i in 0..k {
            for j in 0..k {
                if i != j && entries[i].centralizer.is_subset(&entries[j].centralizer) {
                    strictly_above[i].insert(j);
                }
            }
        }
        let mut hasse = Vec::new();
        for i in 0..k {
            for j in strictly_above[i].ones() {
                let between = strictly_above[i]
                    .ones()
                    .any(|m| m != j && strictly_above[m].contains(j));
                if !between {
                    hasse.push((i, j));
                }
            }
        }
        let above = reachability(k, &hasse);
        debug_assert_eq!(above, strictly_above);

        let mut below_count = vec![0usize; k];
        for i in 0..k {
            for j in above[i].ones() {
                below_count[j] += 1;
            }
        }
        for e in entries.iter_mut() {
            e.flags.centralizer_maximal = above[e.id].is_clear();
            e.flags.centralizer_minimal = below_count[e.id] == 0;
        }
        let maximal_centralizer_ids = entries
            .iter()
            .filter(|e| e.flags.centralizer_maximal)
            .map(|e| e.id)
            .collect();
        let minimal_centralizer_ids = entries
            .iter()
            .filter(|e| e.flags.centralizer_minimal)
            .map(|e| e.id)
            .collect();

        Ok(CentralizerAtlas {
            group,
            entries,
            elem_to_entry,
            center_subgroup: center,
            hasse,
            above,
            by_centralizer,
            maximal_centralizer_ids,
            minimal_centralizer_ids,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn entries(&self) -> &[AtlasEntry] {
        &self.entries
    }

    pub fn entry(&self, id: EntryId) -> &AtlasEntry {
        &self.entries[id]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn center_subgroup(&self) -> &SubgroupSet {
        &self.center_subgroup
    }

    pub fn hasse(&self) -> &[(EntryId, EntryId)] {
        &self.hasse
    }

    pub fn entry_of(&self, x: Elem) -> Option<EntryId> {
        self.elem_to_entry.get(x).copied().flatten()
    }

    pub fn maximal_centralizer_ids(&self) -> &[EntryId] {
        &self.maximal_centralizer_ids
    }

    pub fn minimal_centralizer_ids(&self) -> &[EntryId] {
        &self.minimal_centralizer_ids
    }

    /// C_i ⊆ C_j, answered from the memoized reachability closure.
    pub fn centralizer_le(&self, i: EntryId, j: EntryId) -> bool {
        i == j || self.above[i].contains(j)
    }

    /// Z_i ⊆ Z_j, by the order-reversing correspondence.
    pub fn center_le(&self, i: EntryId, j: EntryId) -> bool {
        self.centralizer_le(j, i)
    }

    /// Ids whose centralizer strictly contains C_id.
    pub fn strictly_above(&self, id: EntryId) -> &FixedBitSet {
        &self.above[id]
    }

    /// φ: C ↦ Z(C).
    pub fn phi(&self, id: EntryId) -> &SubgroupSet {
        &self.entries[id].center
    }

    /// φ⁻¹: Z ↦ C_G(Z), returned as the id of the matching entry.
    pub fn phi_inverse(&self, center: &SubgroupSet) -> Result<EntryId, AtlasError> {
        let c = self.group.centralizer_of_subset(center.members());
        match self.by_centralizer.get(c.members()) {
            Some(&id) if self.entries[id].center == *center => Ok(id),
            _ => Err(AtlasError::NotACenter),
        }
    }

    /// Z*(g): the noncentral elements with the same centralizer (equivalently
    /// the same center) as `g`.
    pub fn zstar_class(&self, g: Elem) -> Result<&FixedBitSet, AtlasError> {
        let id = self.entry_of(g).ok_or(AtlasError::CentralElement(g))?;
        Ok(&self.entries[id].zstar)
    }

    /// Z(g) \ Z(G) split into Z*(g) and the classes of the centralizers
    /// strictly above C_G(g).
    pub fn star2_decomposition(&self, id: EntryId) -> Star2Decomposition {
        let e = &self.entries[id];
        let supers: Vec<EntryId> = self.above[id].ones().collect();
        let mut noncentral_center = e.center.members().clone();
        noncentral_center.difference_with(self.center_subgroup.members());

        let mut union = e.zstar.clone();
        let mut disjoint = true;
        let mut others = self.group.empty_set();
        for &s in &supers {
            let z = &self.entries[s].zstar;
            if !union.is_disjoint(z) {
                disjoint = false;
            }
            union.union_with(z);
            others.union_with(z);
        }
        let proper = others.is_subset(&noncentral_center) && others != noncentral_center;
        Star2Decomposition {
            proper_superset_entry_ids: supers,
            union_check: disjoint && proper && union == noncentral_center,
        }
    }

    /// Z_i ∩ Z_j is either Z(G) or generated by the centers of its
    /// noncentral members.
    pub fn intersection_decomposition(&self, i: EntryId, j: EntryId) -> IntersectionDecomposition {
        let g = &*self.group;
        let meet = self.entries[i].center.intersection(&self.entries[j].center);
        if meet == self.center_subgroup {
            return IntersectionDecomposition {
                kind: IntersectionKind::CentralOnly,
                subgroup: meet,
                generated_matches: true,
                product_matches: true,
            };
        }
        let mut centers: Vec<EntryId> = meet.iter().filter_map(|c| self.entry_of(c)).collect();
        centers.sort_unstable();
        centers.dedup();
        let mut union = g.empty_set();
        for &c in &centers {
            union.union_with(self.entries[c].center.members());
        }
        let generated = g.subgroup_generated(&union);
        let mut product = self.center_subgroup.members().clone();
        for &c in &centers {
            product = g.product_set(&product, self.entries[c].center.members());
        }
        IntersectionDecomposition {
            kind: IntersectionKind::GeneratedByCenters,
            generated_matches: generated == meet,
            product_matches: &product == meet.members(),
            subgroup: generated,
        }
    }

    /// C_G(a) equals the union of Z(b) over its noncentral members b.
    pub fn union_of_centers(&self, id: EntryId) -> bool {
        let c = &self.entries[id].centralizer;
        let mut union = self.group.empty_set();
        for b in c.iter() {
            if let Some(e) = self.entry_of(b) {
                union.union_with(self.entries[e].center.members());
            }
        }
        &union == c.members()
    }

    /// Maximal members of 𝒵(G): the centers of minimal centralizers.
    pub fn maximal_center_ids(&self) -> Vec<EntryId> {
        self.minimal_centralizer_ids.clone()
    }

    /// Minimal members of 𝒵(G): the centers of maximal centralizers.
    pub fn minimal_center_ids(&self) -> Vec<EntryId> {
        self.maximal_centralizer_ids.clone()
    }

    /// Maximal centers found by comparing center sets directly.
    pub fn maximal_center_ids_direct(&self) -> Vec<EntryId> {
        let k = self.len();
        (0..k)
            .filter(|&i| {
                !(0..k).any(|j| j != i && self.entries[i].center.is_subset(&self.entries[j].center))
            })
            .collect()
    }

    /// Minimal centers found by comparing center sets directly.
    pub fn minimal_center_ids_direct(&self) -> Vec<EntryId> {
        let k = self.len();
        (0..k)
            .filter(|&i| {
                !(0..k).any(|j| j != i && self.entries[j].center.is_subset(&self.entries[i].center))
            })
            .collect()
    }

    pub fn summary(&self) -> AtlasSummary {
        let g = &*self.group;
        AtlasSummary {
            center_order: self.center_subgroup.order(),
            n_centralizers: self.len(),
            maximal_centralizers: self.maximal_centralizer_ids.clone(),
            minimal_centralizers: self.minimal_centralizer_ids.clone(),
            entries: self
                .entries
                .iter()
                .map(|e| EntrySummary {
                    id: e.id,
                    representative: g.label(e.representative).to_string(),
                    representative_index: e.representative,
                    centralizer_order: e.centralizer.order(),
                    center_order: e.center.order(),
                    zstar_size: e.zstar.count_ones(..),
                    flags: e.flags,
                })
                .collect(),
            hasse: self.hasse.clone(),
        }
    }
}

fn reachability(k: usize, edges: &[(EntryId, EntryId)]) -> Vec<FixedBitSet> {
    let mut succ = vec![Vec::new(); k];
    for &(a, b) in edges {
        succ[a].push(b);
    }
    let mut memo: Vec<Option<FixedBitSet>> = vec![None; k];
    fn visit(
        v: usize,
        succ: &[Vec<usize>],
        memo: &mut Vec<Option<FixedBitSet>>,
        k: usize,
    ) -> FixedBitSet {
        if let Some(s) = &memo[v] {
            return s.clone();
        }
        let mut s = FixedBitSet::with_capacity(k);
        for &w in &succ[v] {
            s.insert(w);
            let sub = visit(w, succ, memo, k);
            s.union_with(&sub);
        }
        memo[v] = Some(s.clone());
        s
    }
    (0..k).map(|v| visit(v, &succ, &mut memo, k)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct EntrySummary {
    pub id: EntryId,
    pub representative: String,
    pub representative_index: Elem,
    pub centralizer_order: usize,
    pub center_order: usize,
    pub zstar_size: usize,
    pub flags: EntryFlags,
}

#[derive(Debug, Clone, Serialize)]
pub struct AtlasSummary {
    pub center_order: usize,
    pub n_centralizers: usize,
    pub maximal_centralizers: Vec<EntryId>,
    pub minimal_centralizers: Vec<EntryId>,
    pub entries: Vec<EntrySummary>,
    pub hasse: Vec<(EntryId, EntryId)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn atlas(name: &str) -> CentralizerAtlas {
        CentralizerAtlas::build(catalog::build(name).unwrap()).unwrap()
    }

    fn elem(a: &CentralizerAtlas, label: &str) -> Elem {
        a.group().labels().iter().position(|l| l == label).unwrap()
    }

    #[test]
    fn abelian_input_rejected() {
        let g = catalog::cyclic(2).unwrap();
        assert!(matches!(
            CentralizerAtlas::build(g),
            Err(AtlasError::AbelianGroup(_))
        ));
    }

    #[test]
    fn s4_shape() {
        let a = atlas("s4");
        assert_eq!(a.len(), 13);
        let max = a.maximal_centralizer_ids();
        assert_eq!(max.len(), 7);
        let mut orders: Vec<usize> = max
            .iter()
            .map(|&i| a.entry(i).centralizer.order())
            .collect();
        orders.sort();
        assert_eq!(orders, vec![3, 3, 3, 3, 8, 8, 8]);
        let min = a.minimal_centralizer_ids();
        assert_eq!(min.len(), 10);
        assert!(min.iter().all(|&i| a.entry(i).flags.centralizer_abelian));
    }

    #[test]
    fn s4_centers() {
        let a = atlas("s4");
        let v = a.entry_of(elem(&a, "(1,2)(3,4)")).unwrap();
        assert_eq!(a.phi(v).order(), 2);
        assert_eq!(a.phi_inverse(a.phi(v)).unwrap(), v);
        let mut minimal: Vec<usize> = a
            .minimal_center_ids()
            .iter()
            .map(|&i| a.entry(i).center.order())
            .collect();
        minimal.sort();
        assert_eq!(minimal, vec![2, 2, 2, 3, 3, 3, 3]);
        assert_eq!(a.maximal_center_ids().len(), 10);
        assert_eq!(a.minimal_center_ids(), a.minimal_center_ids_direct());
        assert_eq!(a.maximal_center_ids(), a.maximal_center_ids_direct());
    }

    #[test]
    fn phi_inverse_rejects_non_centers() {
        let a = atlas("s4");
        assert_eq!(
            a.phi_inverse(&a.group().trivial()),
            Err(AtlasError::NotACenter)
        );
        assert_eq!(
            a.phi_inverse(&a.group().whole()),
            Err(AtlasError::NotACenter)
        );
    }

    #[test]
    fn zstar_classes() {
        let a = atlas("q8");
        let i = elem(&a, "i");
        let class: Vec<&str> = a
            .zstar_class(i)
            .unwrap()
            .ones()
            .map(|x| a.group().label(x))
            .collect();
        assert_eq!(class, vec!["i", "-i"]);
        assert_eq!(a.phi(a.entry_of(i).unwrap()).order(), 4);
        assert!(matches!(
            a.zstar_class(a.group().identity()),
            Err(AtlasError::CentralElement(_))
        ));

        let a = atlas("s4");
        let c = elem(&a, "(1,2,3)");
        let mut class: Vec<&str> = a
            .zstar_class(c)
            .unwrap()
            .ones()
            .map(|x| a.group().label(x))
            .collect();
        class.sort();
        assert_eq!(class, vec!["(1,2,3)", "(1,3,2)"]);
    }

    #[test]
    fn star2_in_s4() {
        let a = atlas("s4");
        let t = a.entry_of(elem(&a, "(1,2)")).unwrap();
        let d = a.star2_decomposition(t);
        assert_eq!(d.proper_superset_entry_ids.len(), 1);
        let up = d.proper_superset_entry_ids[0];
        assert_eq!(a.entry(up).centralizer.order(), 8);
        assert!(d.union_check);
    }

    #[test]
    fn s4_three_cycle_centers_meet_trivially() {
        let a = atlas("s4");
        let x = a.entry_of(elem(&a, "(1,2,3)")).unwrap();
        let y = a.entry_of(elem(&a, "(1,2,4)")).unwrap();
        let d = a.intersection_decomposition(x, y);
        assert_eq!(d.kind, IntersectionKind::CentralOnly);
        assert_eq!(d.subgroup.order(), 1);
    }

    #[test]
    fn union_of_centers_for_dihedral_centralizer() {
        let a = atlas("s4");
        let v = a.entry_of(elem(&a, "(1,2)(3,4)")).unwrap();
        assert!(a.union_of_centers(v));
    }
}
