//! Centralizer covers of finite groups.
//!
//! Given a nonabelian group as a Cayley table or by permutation generators,
//! this crate builds the family of distinct noncentral-element centralizers
//! together with their centers, the containment order between them, covers
//! and irredundant covers drawn from both families, the centralizer graph
//! and its dominating sets, and the F-group / CA-group classification. The
//! [`report`] module runs a fixed registry of checkable statements against a
//! group and records pass, fail or skipped for each.

pub mod atlas;
pub mod catalog;
pub mod cgraph;
pub mod classify;
pub mod covers;
pub mod dot;
pub mod group;
pub mod perm;
pub mod report;

pub use atlas::{AtlasEntry, CentralizerAtlas, EntryId};
pub use cgraph::CentralizerGraph;
pub use classify::ClassificationReport;
pub use covers::{CoverFamily, CoverVerdict, Side};
pub use group::{Elem, Group, GroupError, SubgroupSet};
pub use report::{Status, TheoremReport};
