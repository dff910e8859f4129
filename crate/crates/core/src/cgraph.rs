//! The centralizer graph on 𝒵(G) and its dominating sets.
//!
//! Distinct vertices Z_i and Z_j are adjacent when Z_i lies in C_j. The
//! relation is symmetric, and it holds exactly when the representatives
//! commute; both facts are checked while building.

use fixedbitset::FixedBitSet;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::atlas::{CentralizerAtlas, EntryId};
use crate::covers::{self, mask_to_ids, MaskIndex, ScanMode, Side, SweepConfig};

/// Exhaustive minimal-dominating-set enumeration is limited to this many
/// vertices.
pub const ENUMERATION_VERTEX_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("vertex {0} out of range")]
    BadVertex(EntryId),
}

#[derive(Debug, Clone)]
pub struct CentralizerGraph {
    vertex_ids: Vec<EntryId>,
    adjacency: Vec<FixedBitSet>,
    symmetric: bool,
    agrees_with_commutation: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DominatingVerdict {
    pub is_dominating: bool,
    pub undominated_vertex: Option<EntryId>,
    pub is_minimal: Option<bool>,
    pub removable_vertex: Option<EntryId>,
}

impl CentralizerGraph {
    pub fn build(atlas: &CentralizerAtlas) -> CentralizerGraph {
        let k = atlas.len();
        let g = atlas.group();
        let mut adjacency = vec![FixedBitSet::with_capacity(k); k];
        let mut agrees = true;
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                let edge = atlas.entry(i).center.is_subset(&atlas.entry(j).centralizer);
                if edge {
                    adjacency[i].insert(j);
                }
                let commute =
                    g.commute(atlas.entry(i).representative, atlas.entry(j).representative);
                agrees &= edge == commute;
            }
        }
        let symmetric = (0..k).all(|i| adjacency[i].ones().all(|j| adjacency[j].contains(i)));
        CentralizerGraph {
            vertex_ids: (0..k).collect(),
            adjacency,
            symmetric,
            agrees_with_commutation: agrees,
        }
    }

    /// Graph from an explicit symmetric adjacency list, for tests and
    /// callers that bring their own graph.
    pub fn from_edges(k: usize, edges: &[(usize, usize)]) -> CentralizerGraph {
        let mut adjacency = vec![FixedBitSet::with_capacity(k); k];
        for &(a, b) in edges {
            if a != b {
                adjacency[a].insert(b);
                adjacency[b].insert(a);
            }
        }
        CentralizerGraph {
            vertex_ids: (0..k).collect(),
            adjacency,
            symmetric: true,
            agrees_with_commutation: true,
        }
    }

    pub fn vertex_ids(&self) -> &[EntryId] {
        &self.vertex_ids
    }

    pub fn len(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_ids.is_empty()
    }

    pub fn adjacent(&self, i: EntryId, j: EntryId) -> bool {
        self.adjacency[i].contains(j)
    }

    pub fn neighbors(&self, i: EntryId) -> &FixedBitSet {
        &self.adjacency[i]
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn agrees_with_commutation(&self) -> bool {
        self.agrees_with_commutation
    }

    /// Unordered edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(EntryId, EntryId)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in self.adjacency[i].ones().filter(|&j| j > i) {
                out.push((i, j));
            }
        }
        out
    }

    fn check(&self, set: &[EntryId]) -> Result<(), GraphError> {
        match set.iter().find(|&&v| v >= self.len()) {
            Some(&v) => Err(GraphError::BadVertex(v)),
            None => Ok(()),
        }
    }

    fn undominated(&self, set: &[EntryId]) -> Option<EntryId> {
        let mut dominated = FixedBitSet::with_capacity(self.len());
        for &v in set {
            dominated.insert(v);
            dominated.union_with(&self.adjacency[v]);
        }
        dominated.zeroes().next()
    }

    pub fn is_dominating(&self, set: &[EntryId]) -> Result<DominatingVerdict, GraphError> {
        self.check(set)?;
        let u = self.undominated(set);
        Ok(DominatingVerdict {
            is_dominating: u.is_none(),
            undominated_vertex: u,
            ..DominatingVerdict::default()
        })
    }

    /// Minimality by single-vertex removal; domination is monotone in the
    /// vertex set.
    pub fn is_minimal_dominating(&self, set: &[EntryId]) -> Result<DominatingVerdict, GraphError> {
        let mut verdict = self.is_dominating(set)?;
        if !verdict.is_dominating {
            verdict.is_minimal = Some(false);
            return Ok(verdict);
        }
        verdict.removable_vertex = set.iter().copied().find(|&v| {
            let rest: Vec<EntryId> = set.iter().copied().filter(|&w| w != v).collect();
            self.undominated(&rest).is_none()
        });
        verdict.is_minimal = Some(verdict.removable_vertex.is_none());
        Ok(verdict)
    }

    /// Closed neighborhoods as bitmasks, when the graph has at most 64
    /// vertices.
    pub fn closed_masks(&self) -> Option<Vec<u64>> {
        (self.len() <= 64).then(|| {
            (0..self.len())
                .map(|v| {
                    self.adjacency[v]
                        .ones()
                        .fold(1u64 << v, |m, w| m | (1u64 << w))
                })
                .collect()
        })
    }

    /// All minimal dominating sets in lexicographic order of their sorted
    /// vertex lists.
    pub fn enumerate_minimal_dominating_sets(
        &self,
        size_cap: usize,
        count_cap: usize,
    ) -> Result<Vec<Vec<EntryId>>, GraphError> {
        let k = self.len();
        if k > ENUMERATION_VERTEX_LIMIT {
            return Err(GraphError::CapExceeded(format!(
                "{k} vertices exceeds {ENUMERATION_VERTEX_LIMIT}"
            )));
        }
        let closed = self.closed_masks().expect("k <= 20");
        let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        let mut out = Vec::new();
        let mut search = Search {
            closed: &closed,
            full,
            k,
            size_cap,
            count_cap,
            out: &mut out,
        };
        search.visit(0, 0, 0)?;
        let mut sets: Vec<Vec<EntryId>> = out.into_iter().map(mask_to_ids).collect();
        sets.sort();
        Ok(sets)
    }
}

struct Search<'a> {
    closed: &'a [u64],
    full: u64,
    k: usize,
    size_cap: usize,
    count_cap: usize,
    out: &'a mut Vec<u64>,
}

impl Search<'_> {
    fn minimal(&self, chosen: u64) -> bool {
        let mut rest = chosen;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = chosen & !(1u64 << v);
            if dominated_by(self.closed, without) == self.full {
                return false;
            }
        }
        true
    }

    fn visit(&mut self, next: usize, chosen: u64, dominated: u64) -> Result<(), GraphError> {
        if dominated == self.full {
            if self.minimal(chosen) {
                if self.out.len() >= self.count_cap {
                    return Err(GraphError::CapExceeded(format!(
                        "more than {} minimal dominating sets",
                        self.count_cap
                    )));
                }
                self.out.push(chosen);
            }
            // any superset is dominating but not minimal
            return Ok(());
        }
        if next == self.k || chosen.count_ones() as usize >= self.size_cap {
            return Ok(());
        }
        // every undominated vertex needs a closed neighbor at index >= next
        let reachable = (next..self.k).fold(0u64, |m, v| m | self.closed[v]);
        if (dominated | reachable) != self.full {
            return Ok(());
        }
        self.visit(
            next + 1,
            chosen | (1u64 << next),
            dominated | self.closed[next],
        )?;
        self.visit(next + 1, chosen, dominated)
    }
}

fn dominated_by(closed: &[u64], set: u64) -> u64 {
    let mut rest = set;
    let mut d = 0u64;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        d |= closed[v];
    }
    d
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceOutcome {
    pub holds: bool,
    pub mode: ScanMode,
    pub counterexample: Option<Vec<EntryId>>,
}

/// For centralizer families: cover ⇔ dominating, and irredundant cover ⇔
/// minimal dominating set. Exhaustive up to `subset_cap` entries, sampled
/// beyond.
pub fn cover_domination_equivalence(
    atlas: &CentralizerAtlas,
    graph: &CentralizerGraph,
    config: &SweepConfig,
) -> EquivalenceOutcome {
    let k = atlas.len();
    if k <= config.subset_cap && k <= 64 {
        let index = MaskIndex::new(atlas, Side::Centralizers).expect("k <= 64");
        let closed = graph.closed_masks().expect("k <= 64");
        let full = index.full();
        let subsets = 1u64 << k;
        let mut counterexample = None;
        for fam in 1..subsets {
            let covers = index.covers(fam);
            let dominates = dominated_by(&closed, fam) == full;
            let agree = covers == dominates
                && (!covers || {
                    let irredundant = index.removable(fam).is_none();
                    let mut minimal = true;
                    let mut rest = fam;
                    while rest != 0 {
                        let v = rest.trailing_zeros();
                        rest &= rest - 1;
                        if dominated_by(&closed, fam & !(1u64 << v)) == full {
                            minimal = false;
                            break;
                        }
                    }
                    irredundant == minimal
                });
            if !agree {
                counterexample = Some(mask_to_ids(fam));
                break;
            }
        }
        EquivalenceOutcome {
            holds: counterexample.is_none(),
            mode: ScanMode::Exhaustive { subsets },
            counterexample,
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let mut drawn = 0u64;
        let mut counterexample = None;
        while drawn < config.samples as u64 {
            let ids = covers::random_family(&mut rng, k);
            if ids.is_empty() {
                continue;
            }
            drawn += 1;
            let family = covers::CoverFamily::centralizers(ids.clone());
            let cover = covers::is_cover(atlas, &family)
                .map(|v| v.is_cover)
                .unwrap_or(false);
            let dom = graph.is_minimal_dominating(&ids).expect("ids in range");
            let mut agree = cover == dom.is_dominating;
            if agree && cover {
                let irr = covers::is_irredundant_cover(atlas, &family)
                    .map(|v| v.is_irredundant == Some(true))
                    .unwrap_or(false);
                agree = irr == (dom.is_minimal == Some(true));
            }
            if !agree {
                counterexample = Some(ids);
                break;
            }
        }
        EquivalenceOutcome {
            holds: counterexample.is_none(),
            mode: ScanMode::Sampled {
                subsets: drawn,
                seed: config.seed,
            },
            counterexample,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NonadjacencyOutcome {
    /// The minimal members of 𝒵(G) are pairwise nonadjacent.
    pub hypothesis: bool,
    /// The maximal centralizers form an irredundant cover.
    pub conclusion: bool,
}

impl NonadjacencyOutcome {
    pub fn implication_holds(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

pub fn minimal_center_nonadjacency(
    atlas: &CentralizerAtlas,
    graph: &CentralizerGraph,
) -> NonadjacencyOutcome {
    let minimal = atlas.minimal_center_ids();
    let hypothesis = minimal
        .iter()
        .enumerate()
        .all(|(i, &a)| minimal[i + 1..].iter().all(|&b| !graph.adjacent(a, b)));
    let conclusion = covers::is_irredundant_cover(atlas, &covers::maximal_centralizer_cover(atlas))
        .map(|v| v.is_irredundant == Some(true))
        .unwrap_or(false);
    NonadjacencyOutcome {
        hypothesis,
        conclusion,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn atlas(name: &str) -> CentralizerAtlas {
        CentralizerAtlas::build(catalog::build(name).unwrap()).unwrap()
    }

    fn entry_of(a: &CentralizerAtlas, label: &str) -> EntryId {
        let x = a.group().labels().iter().position(|l| l == label).unwrap();
        a.entry_of(x).unwrap()
    }

    #[test]
    fn quaternion_graph_is_empty() {
        let a = atlas("q8");
        let g = CentralizerGraph::build(&a);
        assert_eq!(g.len(), 3);
        assert!(g.edges().is_empty());
        assert!(g.is_symmetric() && g.agrees_with_commutation());
        assert!(g.is_dominating(&[0, 1, 2]).unwrap().is_dominating);
        for s in [vec![0], vec![0, 1], vec![1, 2]] {
            assert!(!g.is_dominating(&s).unwrap().is_dominating);
        }
        assert_eq!(
            g.enumerate_minimal_dominating_sets(20, 100).unwrap(),
            vec![vec![0, 1, 2]]
        );
        let o = minimal_center_nonadjacency(&a, &g);
        assert!(o.hypothesis && o.conclusion);
    }

    #[test]
    fn s4_edges() {
        let a = atlas("s4");
        let g = CentralizerGraph::build(&a);
        assert!(g.is_symmetric() && g.agrees_with_commutation());
        let x = entry_of(&a, "(1,2)(3,4)");
        let y = entry_of(&a, "(1,3)(2,4)");
        assert!(g.adjacent(x, y));
        let threes: Vec<EntryId> = ["(1,2,3)", "(1,2,4)", "(1,3,4)", "(2,3,4)"]
            .iter()
            .map(|l| entry_of(&a, l))
            .collect();
        for &p in &threes {
            for &q in &threes {
                assert!(!g.adjacent(p, q));
            }
        }
        let o = minimal_center_nonadjacency(&a, &g);
        assert!(!o.hypothesis && o.conclusion);

        let max: Vec<EntryId> = a.maximal_centralizer_ids().to_vec();
        let v = g.is_minimal_dominating(&max).unwrap();
        assert!(v.is_dominating);
        assert_eq!(v.is_minimal, Some(true));
        let sets = g.enumerate_minimal_dominating_sets(20, 100_000).unwrap();
        assert!(sets.contains(&max));
        for s in &sets {
            assert_eq!(g.is_minimal_dominating(s).unwrap().is_minimal, Some(true));
        }
    }

    #[test]
    fn enumeration_on_textbook_graphs() {
        let empty = CentralizerGraph::from_edges(4, &[]);
        assert_eq!(
            empty.enumerate_minimal_dominating_sets(20, 10).unwrap(),
            vec![vec![0, 1, 2, 3]]
        );
        let complete =
            CentralizerGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            complete.enumerate_minimal_dominating_sets(20, 10).unwrap(),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        let big = CentralizerGraph::from_edges(21, &[]);
        assert!(matches!(
            big.enumerate_minimal_dominating_sets(21, 10),
            Err(GraphError::CapExceeded(_))
        ));
        assert!(matches!(
            complete.enumerate_minimal_dominating_sets(20, 2),
            Err(GraphError::CapExceeded(_))
        ));
    }

    #[test]
    fn equivalence_small_groups() {
        for (name, subsets) in [("s3", 16u64), ("q8", 8), ("s4", 1 << 13)] {
            let a = atlas(name);
            let g = CentralizerGraph::build(&a);
            let o = cover_domination_equivalence(&a, &g, &SweepConfig::default());
            assert!(o.holds, "{name}");
            assert_eq!(o.mode, ScanMode::Exhaustive { subsets });
        }
    }

    #[test]
    fn sampled_equivalence_agrees() {
        let a = atlas("s4");
        let g = CentralizerGraph::build(&a);
        let o = cover_domination_equivalence(
            &a,
            &g,
            &SweepConfig {
                subset_cap: 5,
                samples: 300,
                seed: 7,
            },
        );
        assert!(o.holds);
        assert!(matches!(o.mode, ScanMode::Sampled { subsets: 300, .. }));
    }
}
